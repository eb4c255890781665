"""The quantum matrix algebra O_q(M_n): PBW normal form, product, coalgebra.

Generators x^i_j are letters (i, j); a monomial is a tuple of letters; an
element is a map from PBW-normal words to Laurent coefficients.  A word is
PBW-normal when its letters are nondecreasing in row-major order.  The
rewriting rules below are the adjacent-swap consequences of the defining
relations, and every rewrite strictly decreases the word in letter-lex
order, so bubble-sorting terminates.

All heavy operations are memoized on a per-n context object; contexts are
shared through the context(n) factory.
"""

from functools import lru_cache
from itertools import permutations

from .laurent import LaurentInt, ONE, ZERO, q_pow, q_minus_qinv


class Ctx:
    """Shared per-n state: the size and all memo caches."""

    def __init__(self, n):
        if n < 1:
            raise ValueError("n must be >= 1")
        self.n = n
        self.nf_cache = {}
        self.cop_cache = {}
        self.cop2_cache = {}
        self._rform = None

    def qp(self, k):
        """q^k in this context's coefficient ring (q = v^n)."""
        return q_pow(k, self.n)

    def __repr__(self):
        return f"Ctx(n={self.n})"


@lru_cache(maxsize=None)
def context(n):
    return Ctx(n)


def _add_term(acc, word, coeff):
    s = acc.get(word, ZERO) + coeff
    if s.is_zero():
        acc.pop(word, None)
    else:
        acc[word] = s


def _first_descent(word):
    for i in range(len(word) - 1):
        if word[i] > word[i + 1]:
            return i
    return -1


def _swap_terms(ctx, x, y):
    """Rewrite the descent x·y (x > y in row-major order) into sorted terms.

    Returns a list of (letter_pair_word, coeff).
    """
    a, b = x
    c, d = y
    if a == c or b == d:
        # same row (b > d) or same column (a > c): x y = q · y x
        return [((y, x), ctx.qp(1))]
    if b < d:
        # a > c, b < d: the two letters commute
        return [((y, x), ONE)]
    # a > c, b > d: x^a_b x^c_d = x^c_d x^a_b + (q - q^-1) x^c_b x^a_d
    return [((y, x), ONE), (((c, b), (a, d)), q_minus_qinv(ctx.n))]


def normal_form(ctx, word):
    """PBW expansion of a free word: dict mapping normal words to coeffs."""
    cached = ctx.nf_cache.get(word)
    if cached is not None:
        return cached
    i = _first_descent(word)
    if i < 0:
        out = {word: ONE}
    else:
        out = {}
        head, tail = word[:i], word[i + 2:]
        for mid, c in _swap_terms(ctx, word[i], word[i + 1]):
            for w, c2 in normal_form(ctx, head + mid + tail).items():
                _add_term(out, w, c * c2)
    ctx.nf_cache[word] = out
    return out


def normal_form_strategy(ctx, word, coeff=ONE, strategy="leftmost"):
    """Uncached rewriter used as a confluence witness against normal_form.

    Repeatedly rewrites the leftmost or rightmost adjacent descent of the
    term currently furthest from normal; both strategies must agree.
    """
    out = {}
    stack = [(word, coeff)]
    while stack:
        w, c = stack.pop()
        positions = [i for i in range(len(w) - 1) if w[i] > w[i + 1]]
        if not positions:
            _add_term(out, w, c)
            continue
        i = positions[0] if strategy == "leftmost" else positions[-1]
        for mid, c2 in _swap_terms(ctx, w[i], w[i + 1]):
            stack.append((w[:i] + mid + w[i + 2:], c * c2))
    return out


class Element:
    """Linear combination of PBW-normal words over Z[v, v^-1]."""

    __slots__ = ("ctx", "terms")

    def __init__(self, ctx, terms=None):
        self.ctx = ctx
        self.terms = {}
        if terms:
            for w, c in terms.items():
                if not c.is_zero():
                    self.terms[w] = c

    @staticmethod
    def zero(ctx):
        return Element(ctx)

    @staticmethod
    def unit(ctx, coeff=ONE):
        return Element(ctx, {(): coeff})

    @staticmethod
    def gen(ctx, i, j):
        if not (1 <= i <= ctx.n and 1 <= j <= ctx.n):
            raise ValueError(f"generator x[{i},{j}] out of range for n={ctx.n}")
        return Element(ctx, {((i, j),): ONE})

    @staticmethod
    def from_word(ctx, word, coeff=ONE):
        out = {}
        for w, c in normal_form(ctx, tuple(word)).items():
            _add_term(out, w, c * coeff)
        return Element(ctx, out)

    def is_zero(self):
        return not self.terms

    def __eq__(self, other):
        if not isinstance(other, Element):
            return NotImplemented
        return self.ctx.n == other.ctx.n and self.terms == other.terms

    def __hash__(self):
        return hash((self.ctx.n, frozenset(self.terms.items())))

    def _check(self, other):
        if self.ctx is not other.ctx:
            raise ValueError("algebra context mismatch")

    def __add__(self, other):
        self._check(other)
        out = dict(self.terms)
        for w, c in other.terms.items():
            _add_term(out, w, c)
        return type(self)(self.ctx, out)

    def __neg__(self):
        return type(self)(self.ctx, {w: -c for w, c in self.terms.items()})

    def __sub__(self, other):
        return self + (-other)

    def scale(self, coeff):
        if isinstance(coeff, int):
            coeff = LaurentInt.const(coeff)
        return type(self)(self.ctx, {w: c * coeff for w, c in self.terms.items()})

    def __rmul__(self, other):
        if isinstance(other, (int, LaurentInt)):
            return self.scale(other)
        return NotImplemented

    def __mul__(self, other):
        if isinstance(other, (int, LaurentInt)):
            return self.scale(other)
        self._check(other)
        out = {}
        for w1, c1 in self.terms.items():
            for w2, c2 in other.terms.items():
                c = c1 * c2
                for w, c3 in normal_form(self.ctx, w1 + w2).items():
                    _add_term(out, w, c * c3)
        return type(self)(self.ctx, out)

    def __pow__(self, k):
        if k < 0:
            raise ValueError("negative power")
        out = type(self).unit(self.ctx)
        for _ in range(k):
            out = out * self
        return out

    def degree_terms(self):
        return sorted(self.terms)

    def __repr__(self):
        return f"<{type(self).__name__} {render_element(self)}>"

    def to_json(self):
        return {
            "n": self.ctx.n,
            "terms": [
                {"word": [list(l) for l in w], "coeff": self.terms[w].to_json(self.ctx.n)}
                for w in sorted(self.terms)
            ],
        }

    @classmethod
    def from_json(cls, obj):
        ctx = context(obj["n"])
        terms = {}
        for t in obj["terms"]:
            w = tuple((int(i), int(j)) for i, j in t["word"])
            terms[w] = LaurentInt.from_json(t["coeff"])
        return cls(ctx, terms)

    def reduce_mod(self, cyc):
        """Reduce every coefficient modulo the cyclotomic context."""
        return type(self)(self.ctx, {w: cyc.reduce(c) for w, c in self.terms.items()})


# -- coalgebra ------------------------------------------------------


def coproduct_word(ctx, word):
    """Delta of a word: dict (leg1, leg2) -> coeff, both legs PBW-normal."""
    cached = ctx.cop_cache.get(word)
    if cached is not None:
        return cached
    if not word:
        out = {((), ()): ONE}
    else:
        i, j = word[0]
        rest = coproduct_word(ctx, word[1:])
        out = {}
        for k in range(1, ctx.n + 1):
            for (w1, w2), c in rest.items():
                for nw1, c1 in normal_form(ctx, ((i, k),) + w1).items():
                    cc = c * c1
                    for nw2, c2 in normal_form(ctx, ((k, j),) + w2).items():
                        key = (nw1, nw2)
                        s = out.get(key, ZERO) + cc * c2
                        if s.is_zero():
                            out.pop(key, None)
                        else:
                            out[key] = s
    ctx.cop_cache[word] = out
    return out


def coproduct2_word(ctx, word):
    """(Delta x id)Delta of a word: dict (leg1, leg2, leg3) -> coeff."""
    cached = ctx.cop2_cache.get(word)
    if cached is not None:
        return cached
    out = {}
    for (w12, w3), c in coproduct_word(ctx, word).items():
        for (w1, w2), c2 in coproduct_word(ctx, w12).items():
            key = (w1, w2, w3)
            s = out.get(key, ZERO) + c * c2
            if s.is_zero():
                out.pop(key, None)
            else:
                out[key] = s
    ctx.cop2_cache[word] = out
    return out


def coproduct(a):
    """Delta(a) as a dict (word, word) -> coeff."""
    out = {}
    for w, c in a.terms.items():
        for key, c2 in coproduct_word(a.ctx, w).items():
            s = out.get(key, ZERO) + c * c2
            if s.is_zero():
                out.pop(key, None)
            else:
                out[key] = s
    return out


def coproduct2(a):
    out = {}
    for w, c in a.terms.items():
        for key, c2 in coproduct2_word(a.ctx, w).items():
            s = out.get(key, ZERO) + c * c2
            if s.is_zero():
                out.pop(key, None)
            else:
                out[key] = s
    return out


def counit_word(word):
    """epsilon of a monomial: 1 if every letter is diagonal, else 0."""
    return ONE if all(i == j for i, j in word) else ZERO


def counit(a):
    out = ZERO
    for w, c in a.terms.items():
        if all(i == j for i, j in w):
            out = out + c
    return out


# -- permutations and the quantum determinant -----------------------


def inv_count(sigma):
    """Number of inversions l(sigma); sigma is a tuple of 1..n values."""
    n = len(sigma)
    return sum(1 for i in range(n) for j in range(i + 1, n) if sigma[i] > sigma[j])


def exceedance(sigma):
    """e(sigma) = #{i : sigma(i) > i} (1-based)."""
    return sum(1 for i, s in enumerate(sigma, start=1) if s > i)


def deficiency(sigma):
    """#{i : sigma(i) < i} = exceedance of the inverse permutation."""
    return sum(1 for i, s in enumerate(sigma, start=1) if s < i)


def qdet(ctx):
    """The quantum determinant sum_sigma (-q)^(-l) x^1_s(1)...x^n_s(n)."""
    n = ctx.n
    out = {}
    for sigma in permutations(range(1, n + 1)):
        l = inv_count(sigma)
        coeff = ctx.qp(-l) * ((-1) ** l)
        word = tuple((i, sigma[i - 1]) for i in range(1, n + 1))
        for w, c in normal_form(ctx, word).items():
            _add_term(out, w, coeff * c)
    return Element(ctx, out)


# -- word text format ------------------------------------------------


def word_str(word):
    if not word:
        return "1"
    return "·".join(f"x[{i},{j}]" for i, j in word)


def parse_word(text):
    """Parse "x[1,1]^3·x[1,2]" (separators "·" or "*") into a letter tuple."""
    text = text.strip()
    if text in ("1", ""):
        return ()
    letters = []
    for factor in text.replace("*", "·").split("·"):
        factor = factor.strip()
        power = 1
        if "^" in factor:
            factor, p = factor.split("^", 1)
            power = int(p)
            if power < 0:
                raise ValueError(f"negative power in word: {text!r}")
        factor = factor.strip()
        if not (factor.startswith("x[") and factor.endswith("]")):
            raise ValueError(f"bad word factor: {factor!r}")
        i, j = (int(t) for t in factor[2:-1].split(","))
        letters.extend([(i, j)] * power)
    return tuple(letters)


def render_element(a, var_letter="x", star=False):
    """Human-readable rendering, terms sorted by word."""
    if a.is_zero():
        return "0"
    sep = "⋆" if star else "·"
    parts = []
    for w in sorted(a.terms):
        coeff = a.terms[w]
        if not w:
            mono = "1"
        else:
            mono = sep.join(f"{var_letter}[{i},{j}]" for i, j in w)
        cs = coeff.render(a.ctx.n)
        if cs == "1" and mono != "1":
            parts.append(mono)
        elif cs == "-1" and mono != "1":
            parts.append(f"-{mono}")
        elif mono == "1":
            parts.append(cs if "+" not in cs[1:] and "-" not in cs[1:] else f"({cs})")
        elif ("+" in cs[1:]) or ("- " in cs):
            parts.append(f"({cs})·{mono}")
        else:
            parts.append(f"{cs}·{mono}")
    text = parts[0]
    for p in parts[1:]:
        text += f" - {p[1:]}" if p.startswith("-") else f" + {p}"
    return text
