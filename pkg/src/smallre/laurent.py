"""Exact Laurent polynomial arithmetic over Z in the variable v, with q = v^n.

All coefficients in this project live in Z[v, v^-1].  The matrix size n of
the ambient algebra fixes the identification q = v^n, so that the q^(-1/n)
prefactor of the dual R-matrix is the honest ring element v^-1.  Scalars
that only involve q (q-integers, the sigma coefficients of compositions)
are built through the q_* constructors, which take n and scale exponents.
"""

from fractions import Fraction


class LaurentInt:
    """Sparse integer Laurent polynomial: dict mapping exponent -> coefficient.

    Zero coefficients are never stored.  Instances are treated as immutable;
    every operation returns a fresh value.
    """

    __slots__ = ("terms",)

    def __init__(self, terms=None):
        if terms is None:
            self.terms = {}
        else:
            self.terms = {e: c for e, c in terms.items() if c != 0}

    # -- constructors -------------------------------------------------

    @staticmethod
    def zero():
        return LaurentInt()

    @staticmethod
    def one():
        return LaurentInt({0: 1})

    @staticmethod
    def const(c):
        return LaurentInt({0: c})

    @staticmethod
    def v(exp=1, coeff=1):
        return LaurentInt({exp: coeff})

    # -- predicates ---------------------------------------------------

    def is_zero(self):
        return not self.terms

    def is_one(self):
        return self.terms == {0: 1}

    def __bool__(self):
        return bool(self.terms)

    def __eq__(self, other):
        if not isinstance(other, LaurentInt):
            return NotImplemented
        return self.terms == other.terms

    def __hash__(self):
        return hash(frozenset(self.terms.items()))

    # -- ring operations ----------------------------------------------

    def __add__(self, other):
        out = dict(self.terms)
        for e, c in other.terms.items():
            s = out.get(e, 0) + c
            if s:
                out[e] = s
            else:
                out.pop(e, None)
        res = LaurentInt()
        res.terms = out
        return res

    def __neg__(self):
        res = LaurentInt()
        res.terms = {e: -c for e, c in self.terms.items()}
        return res

    def __sub__(self, other):
        return self + (-other)

    def __mul__(self, other):
        if isinstance(other, int):
            if other == 0:
                return LaurentInt()
            res = LaurentInt()
            res.terms = {e: c * other for e, c in self.terms.items()}
            return res
        if not isinstance(other, LaurentInt):
            return NotImplemented
        out = {}
        for e1, c1 in self.terms.items():
            for e2, c2 in other.terms.items():
                e = e1 + e2
                s = out.get(e, 0) + c1 * c2
                if s:
                    out[e] = s
                else:
                    del out[e]
        res = LaurentInt()
        res.terms = out
        return res

    __rmul__ = __mul__

    def __pow__(self, k):
        if k < 0:
            raise ValueError("negative power of a general Laurent polynomial")
        res = LaurentInt.one()
        base = self
        while k:
            if k & 1:
                res = res * base
            base = base * base
            k >>= 1
        return res

    def shift(self, k):
        """Multiply by v^k."""
        res = LaurentInt()
        res.terms = {e + k: c for e, c in self.terms.items()}
        return res

    # -- structure ----------------------------------------------------

    def min_exp(self):
        return min(self.terms) if self.terms else 0

    def max_exp(self):
        return max(self.terms) if self.terms else 0

    def as_poly(self):
        """Return (shift, dense coeff list) with f = v^shift * sum coeffs[i] v^i."""
        if not self.terms:
            return 0, []
        lo = self.min_exp()
        hi = self.max_exp()
        coeffs = [0] * (hi - lo + 1)
        for e, c in self.terms.items():
            coeffs[e - lo] = c
        return lo, coeffs

    @staticmethod
    def from_poly(shift, coeffs):
        return LaurentInt({shift + i: c for i, c in enumerate(coeffs) if c})

    # -- rendering ----------------------------------------------------

    def render(self, n=1, qvar="q"):
        """Human-readable string; renders in q when all exponents are
        multiples of n (qvar substitutes another symbol for q, e.g. a
        root of unity)."""
        if not self.terms:
            return "0"
        use_q = n > 1 and all(e % n == 0 for e in self.terms)
        var = qvar if (use_q or n == 1) else "v"
        parts = []
        for e in sorted(self.terms):
            c = self.terms[e]
            ee = e // n if use_q else e
            if ee == 0:
                body = str(abs(c))
            else:
                mag = "" if abs(c) == 1 else f"{abs(c)}*"
                body = f"{mag}{var}^{ee}" if ee != 1 else f"{mag}{var}"
            if not parts:
                parts.append(body if c > 0 else f"-{body}")
            else:
                parts.append(("+ " if c > 0 else "- ") + body)
        return " ".join(parts)

    def __repr__(self):
        return f"LaurentInt({self.render()})"

    def to_json(self, n=1):
        return {"var": "v", "n": n, "terms": [[e, self.terms[e]] for e in sorted(self.terms)]}

    @staticmethod
    def from_json(obj):
        return LaurentInt({int(e): int(c) for e, c in obj["terms"]})


ZERO = LaurentInt.zero()
ONE = LaurentInt.one()


def v_pow(k, coeff=1):
    return LaurentInt({k: coeff})


def q_pow(k, n=1, coeff=1):
    """q^k as an element of Z[v, v^-1] with q = v^n."""
    return LaurentInt({k * n: coeff})


def q_minus_qinv(n=1):
    return q_pow(1, n) - q_pow(-1, n)


def q_int(k, n=1):
    """Symmetric q-integer q^(k-1) + q^(k-3) + ... + q^(1-k)."""
    if k < 0:
        raise ValueError("q_int requires k >= 0")
    out = LaurentInt()
    for j in range(k):
        out = out + q_pow(k - 1 - 2 * j, n)
    return out


def q_factorial(k, n=1):
    out = ONE
    for j in range(1, k + 1):
        out = out * q_int(j, n)
    return out


def sigma_q(parts, n=1):
    """q-scalar of a composition, via the denominator-free recursion.

    sigma((N)) = prod_{j=1}^{N-1} (1 - q^{-2(N-j)}), and dropping the last
    part lam_{-1} contributes prod_{j=1}^{lam_{-1}-1} (1 - q^{-2(N-j)}),
    with N the weight of the not-yet-truncated composition.
    """
    parts = tuple(parts)
    if not parts or any(p < 1 for p in parts):
        raise ValueError("composition must be a nonempty tuple of positive integers")
    out = ONE
    while len(parts) > 1:
        weight = sum(parts)
        for j in range(1, parts[-1]):
            out = out * (ONE - q_pow(-2 * (weight - j), n))
        parts = parts[:-1]
    weight = parts[0]
    for j in range(1, weight):
        out = out * (ONE - q_pow(-2 * (weight - j), n))
    return out


# -- dense integer polynomial helpers (ascending coefficient lists) ----


def _poly_mul(a, b):
    out = [0] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        if x:
            for j, y in enumerate(b):
                if y:
                    out[i + j] += x * y
    return out


def _poly_trim(a):
    while a and a[-1] == 0:
        a.pop()
    return a


def _poly_divmod_exact_monic(num, den):
    """Divide by a monic polynomial; exact integer arithmetic."""
    assert den and den[-1] == 1
    num = list(num)
    q = [0] * max(len(num) - len(den) + 1, 0)
    for i in range(len(num) - len(den), -1, -1):
        c = num[i + len(den) - 1]
        if c:
            q[i] = c
            for j, d in enumerate(den):
                num[i + j] -= c * d
    return q, _poly_trim(num)


def poly_divmod(num, den):
    """General integer polynomial division via rationals; returns (quot, rem).

    Raises ValueError if the quotient is not integral.
    """
    num = [Fraction(c) for c in num]
    den = [Fraction(c) for c in den]
    _poly_trim(den)
    if not den:
        raise ZeroDivisionError("polynomial division by zero")
    q = [Fraction(0)] * max(len(num) - len(den) + 1, 0)
    for i in range(len(num) - len(den), -1, -1):
        c = num[i + len(den) - 1] / den[-1]
        if c:
            q[i] = c
            for j, d in enumerate(den):
                num[i + j] -= c * d
    _poly_trim(num)
    if any(c.denominator != 1 for c in q) or any(c.denominator != 1 for c in num):
        raise ValueError("non-integral polynomial division")
    return [int(c) for c in q], [int(c) for c in num]


def divexact(f, g):
    """Exact division of Laurent polynomials; raises ValueError if not exact."""
    if g.is_zero():
        raise ZeroDivisionError("division by zero Laurent polynomial")
    if f.is_zero():
        return ZERO
    sf, pf = f.as_poly()
    sg, pg = g.as_poly()
    quot, rem = poly_divmod(pf, pg)
    if rem:
        raise ValueError("inexact Laurent division")
    return LaurentInt.from_poly(sf - sg, quot)


def cyclotomic_phi(ell):
    """Coefficients (ascending) of the ell-th cyclotomic polynomial.

    Computed by exact division of x^ell - 1 by Phi_d for proper divisors d.
    """
    if ell < 1:
        raise ValueError("ell must be >= 1")
    num = [0] * (ell + 1)
    num[0] = -1
    num[ell] = 1
    for d in range(1, ell):
        if ell % d == 0:
            phi_d = cyclotomic_phi(d)
            num, rem = _poly_divmod_exact_monic(num, phi_d)
            assert not rem
    return num


class CyclotomicCtx:
    """Reduction context modulo Phi_ell(q) = Phi_ell(v^n), ell odd and >= 3.

    Phi_ell(v^n) is monic in v with constant term 1, so v is a unit in the
    quotient; the canonical form of any Laurent polynomial is the unique
    representative of degree < n*phi(ell) with nonnegative exponents.
    """

    def __init__(self, ell, n=1):
        if ell < 3 or ell % 2 == 0:
            raise ValueError("ell must be odd and >= 3")
        if n < 1:
            raise ValueError("n must be >= 1")
        self.ell = ell
        self.n = n
        base = cyclotomic_phi(ell)
        coeffs = [0] * ((len(base) - 1) * n + 1)
        for i, c in enumerate(base):
            coeffs[i * n] = c
        self.phi_coeffs = coeffs
        self.phi = LaurentInt.from_poly(0, coeffs)
        assert coeffs[0] == 1 and coeffs[-1] == 1
        # v^-1 mod Phi: from 1 + v*c(v) = Phi, v^-1 = -c(v) mod Phi.
        self.v_inv = LaurentInt.from_poly(0, [-c for c in coeffs[1:]])

    def _reduce_poly(self, coeffs):
        _, rem = _poly_divmod_exact_monic(coeffs, self.phi_coeffs)
        return rem

    def reduce(self, f):
        """Canonical representative of f modulo Phi_ell(v^n)."""
        if f.is_zero():
            return ZERO
        lo, coeffs = f.as_poly()
        if lo > 0:
            coeffs = [0] * lo + coeffs
            lo = 0
        rem = LaurentInt.from_poly(0, self._reduce_poly(coeffs))
        if lo < 0 and not rem.is_zero():
            rem = rem * (self.v_inv ** (-lo))
            lo2, coeffs = rem.as_poly()
            rem = LaurentInt.from_poly(0, self._reduce_poly([0] * lo2 + coeffs))
        return rem

    def is_zero(self, f):
        return self.reduce(f).is_zero()

    def __repr__(self):
        return f"CyclotomicCtx(ell={self.ell}, n={self.n})"
