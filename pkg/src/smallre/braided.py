"""The covariantized algebra: braided product, powers, determinant.

Elements of the reflection-equation twin live in the same module as
O_q(M_n) and are stored in the same PBW basis; u^i_j is the word ((i,j),)
under a BraidedElement tag.  The product is

    a * b = sum a_(2) b_(3) Rtilde(a_(3) (x) b_(1)) R(a_(1) (x) b_(2)),

computed through the coalgebra of O_q(M_n) — never by rewriting in the
u-presentation.  Word-by-generator products are memoized (chains of the
closed formulas revisit the same prefixes constantly), and so are the
left-associated generator chains themselves.
"""

from itertools import permutations

from .laurent import LaurentInt, ONE, ZERO, q_pow
from .matrix_algebra import (
    Element,
    context,
    coproduct2_word,
    inv_count,
    deficiency,
    normal_form,
    _add_term,
)
from .rform import rform


class BraidedElement(Element):
    """Element of the covariantized algebra; * is the braided product."""

    def __mul__(self, other):
        if isinstance(other, (int, LaurentInt)):
            return self.scale(other)
        self._check(other)
        if not isinstance(other, BraidedElement):
            raise TypeError("cannot mix braided and ordinary products")
        return braided_multiply(self, other)

    def to_json(self):
        obj = super().to_json()
        obj["algebra"] = "braided"
        return obj


def u_gen(ctx, i, j):
    if not (1 <= i <= ctx.n and 1 <= j <= ctx.n):
        raise ValueError(f"generator u[{i},{j}] out of range for n={ctx.n}")
    return BraidedElement(ctx, {((i, j),): ONE})


def unit(ctx, coeff=ONE):
    return BraidedElement(ctx, {(): coeff})


def as_braided(a):
    """Re-tag an Element's PBW expansion as a braided-algebra element."""
    return BraidedElement(a.ctx, dict(a.terms))


def _word_cache(ctx):
    cache = getattr(ctx, "braid_cache", None)
    if cache is None:
        cache = ctx.braid_cache = {}
    return cache


def braided_word_product(ctx, wa, wb):
    """Braided product of two PBW words, as a dict word -> coeff."""
    cache = _word_cache(ctx)
    key = (wa, wb)
    cached = cache.get(key)
    if cached is not None:
        return cached
    form = rform(ctx)
    out = {}
    for (a1, a2, a3), ca in coproduct2_word(ctx, wa).items():
        for (b1, b2, b3), cb in coproduct2_word(ctx, wb).items():
            r1 = form.eval_words("Rtilde", a3, b1)
            if r1.is_zero():
                continue
            r2 = form.eval_words("R", a1, b2)
            if r2.is_zero():
                continue
            coeff = ca * cb * r1 * r2
            for w, c in normal_form(ctx, a2 + b3).items():
                _add_term(out, w, coeff * c)
    cache[key] = out
    return out


def braided_multiply(a, b):
    ctx = a.ctx
    out = {}
    for wa, ca in a.terms.items():
        for wb, cb in b.terms.items():
            coeff = ca * cb
            for w, c in braided_word_product(ctx, wa, wb).items():
                _add_term(out, w, coeff * c)
    return BraidedElement(ctx, out)


def braided_power(a, N):
    if N < 0:
        raise ValueError("braided power requires N >= 0")
    out = unit(a.ctx)
    for _ in range(N):
        out = out * a
    return out


def chain(ctx, letters):
    """Left-associated product u^{i1}_{j1} * ... * u^{im}_{jm} of generators.

    Cached by prefix, so families of chains sharing initial segments (the
    V^k sums) cost one braided multiplication per new letter.
    """
    letters = tuple(letters)
    cache = getattr(ctx, "chain_cache", None)
    if cache is None:
        cache = ctx.chain_cache = {(): unit(ctx)}
    cached = cache.get(letters)
    if cached is not None:
        return cached
    prefix = chain(ctx, letters[:-1])
    out = prefix * u_gen(ctx, *letters[-1])
    cache[letters] = out
    return out


def chain_of_tuple(ctx, beta):
    """Evaluate u^{beta_1}_{beta_2} * ... * u^{beta_N}_{beta_{N+1}}."""
    return chain(ctx, tuple(zip(beta, beta[1:])))


def det_terms(n):
    """Formal terms of the braided determinant: for each permutation, the
    coefficient (-q)^l(sigma) q^e(sigma^-1) on the chain
    u^n_sigma(n) * ... * u^1_sigma(1), in lexicographic sigma order.

    The statistic on the inverse, e(sigma^-1) = #{i : sigma(i) < i}, is
    forced: it is the unique exponent rule under which the sum equals
    Psi of the quantum determinant (the two agree for n = 2, where every
    permutation is an involution, and diverge from n = 3 on).
    """
    out = []
    for sigma in permutations(range(1, n + 1)):
        l = inv_count(sigma)
        e = deficiency(sigma)
        coeff = q_pow(l + e, n, (-1) ** l)
        letters = tuple((i, sigma[i - 1]) for i in range(n, 0, -1))
        out.append((coeff, letters))
    return out


def braided_det(ctx):
    """The braided determinant as an evaluated BraidedElement."""
    out = BraidedElement(ctx)
    for coeff, letters in det_terms(ctx.n):
        out = out + coeff * chain(ctx, letters)
    return out


# -- the quadratic relation families --------------------------------


def bqmn_relation_terms(ctx, rel_id, indices):
    """Formal terms of one quadratic relation, as (lhs, rhs) lists of
    (coeff, letters) with letters a tuple of (row, col) u-indices.

    rel 1 is indexed by (i, j, l) with j < l; rel 2 by (i, j, k) with
    i < k; rels 3 and 4 by (i, j, k, l) with i < k, j < l.
    """
    qq = ctx.qp(1) - ctx.qp(-1)
    d = lambda a, b: 1 if a == b else 0
    if rel_id == 1:
        i, j, l = indices
        if not j < l:
            raise ValueError("rel 1 requires j < l")
        lhs = [(ONE, ((i, l), (i, j))), (-ctx.qp(d(i, j) - d(i, l) + 1), ((i, j), (i, l)))]
        rhs = []
        if i == j:
            for dd in range(1, j):
                rhs.append((ctx.qp(2) - ONE, ((i, dd), (dd, l))))
        if i == l:
            for dd in range(1, l):
                rhs.append((-(ONE - ctx.qp(-2)), ((i, dd), (dd, j))))
        return lhs, rhs
    if rel_id == 2:
        i, j, k = indices
        if not i < k:
            raise ValueError("rel 2 requires i < k")
        lhs = [(ONE, ((k, j), (i, j))), (-ctx.qp(d(j, k) - d(i, j) - 1), ((i, j), (k, j)))]
        rhs = []
        if k == j:
            for dd in range(1, j):
                rhs.append((ONE - ctx.qp(-2), ((i, dd), (dd, j))))
        if i == j:
            for b in range(1, j):
                rhs.append((-(ONE - ctx.qp(-2)), ((k, b), (b, j))))
        return lhs, rhs
    if rel_id == 3:
        i, j, k, l = indices
        if not (i < k and j < l):
            raise ValueError("rel 3 requires i < k and j < l")
        lhs = [(ONE, ((k, j), (i, l))), (-ctx.qp(d(k, l) - d(i, j)), ((i, l), (k, j)))]
        rhs = [(-(qq * ctx.qp(d(i, l) - d(i, j))), ((k, l), (i, j)))]
        if i == l:
            for b in range(1, l):
                rhs.append((-(qq * qq * ctx.qp(-d(i, j))), ((k, b), (b, j))))
        if k == l:
            for dd in range(1, l):
                rhs.append((qq * ctx.qp(-d(i, j)), ((i, dd), (dd, j))))
        if i == j:
            for dd in range(1, j):
                rhs.append((-(ONE - ctx.qp(-2)), ((k, dd), (dd, l))))
        return lhs, rhs
    if rel_id == 4:
        i, j, k, l = indices
        if not (i < k and j < l):
            raise ValueError("rel 4 requires i < k and j < l")
        lhs = [(ONE, ((k, l), (i, j))), (-ctx.qp(d(j, k) - d(i, l)), ((i, j), (k, l)))]
        rhs = []
        if k == j:
            for b in range(1, j):
                rhs.append((qq * ctx.qp(-d(i, l)), ((i, b), (b, l))))
        if i == l:
            for dd in range(1, l):
                rhs.append((-(ONE - ctx.qp(-2)), ((k, dd), (dd, j))))
        return lhs, rhs
    raise ValueError(f"unknown relation id {rel_id!r}")


def evaluate_terms(ctx, terms):
    """Evaluate a formal (coeff, letters) list through the braided engine."""
    out = BraidedElement(ctx)
    for coeff, letters in terms:
        out = out + coeff * chain(ctx, letters)
    return out


def check_bqmn_relation(ctx, rel_id, indices):
    """Residual LHS - RHS of a quadratic relation; zero iff it holds."""
    lhs, rhs = bqmn_relation_terms(ctx, rel_id, indices)
    return evaluate_terms(ctx, lhs) - evaluate_terms(ctx, rhs)


def admissible_indices(n, rel_id):
    if rel_id == 1:
        return [
            (i, j, l)
            for i in range(1, n + 1)
            for j in range(1, n + 1)
            for l in range(j + 1, n + 1)
        ]
    if rel_id == 2:
        return [
            (i, j, k)
            for j in range(1, n + 1)
            for i in range(1, n + 1)
            for k in range(i + 1, n + 1)
        ]
    if rel_id in (3, 4):
        return [
            (i, j, k, l)
            for i in range(1, n + 1)
            for k in range(i + 1, n + 1)
            for j in range(1, n + 1)
            for l in range(j + 1, n + 1)
        ]
    raise ValueError(f"unknown relation id {rel_id!r}")
