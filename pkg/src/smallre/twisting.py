"""The twisting map Psi from O_q(M_n) to its covariantized twin.

Psi fixes generators and is extended to longer words by peeling the last
letter: for a word a and a generator b = x^k_l,

    Psi(ab) = sum Rinv(a_(1) (x) b_(1)) R(a_(3) (x) b_(2)) Psi(a_(2)) * Psi(b_(3))

with b-legs x^k_lam (x) x^lam_mu (x) x^mu_l.  Well-definedness across
factorizations is a tested property, not an assumption.  The closed
formulas for powers (off-diagonal, diagonal, and the mixed form) are
built here from the composition combinatorics so they can be compared
against the iterative map.
"""

from .laurent import LaurentInt, ONE, ZERO, q_pow
from .compositions import compositions, sigma_q, v_set
from .matrix_algebra import Element, coproduct2_word
from .rform import rform
from .braided import BraidedElement, u_gen, unit, chain, chain_of_tuple


def _twist_cache(ctx):
    cache = getattr(ctx, "twist_cache", None)
    if cache is None:
        cache = ctx.twist_cache = {
            (): unit(ctx),
        }
    return cache


def twist_word(ctx, word):
    """Psi of a PBW word, as a BraidedElement."""
    cache = _twist_cache(ctx)
    cached = cache.get(word)
    if cached is not None:
        return cached
    if len(word) == 1:
        out = u_gen(ctx, *word[0])
    else:
        a, (k, l) = word[:-1], word[-1]
        form = rform(ctx)
        n = ctx.n
        out = BraidedElement(ctx)
        for (a1, a2, a3), ca in coproduct2_word(ctx, a).items():
            psi_a2 = None
            for lam in range(1, n + 1):
                r1 = form.eval_words("Rinv", a1, ((k, lam),))
                if r1.is_zero():
                    continue
                for mu in range(1, n + 1):
                    r2 = form.eval_words("R", a3, ((lam, mu),))
                    if r2.is_zero():
                        continue
                    if psi_a2 is None:
                        psi_a2 = twist_word(ctx, a2)
                    out = out + (ca * r1 * r2) * (psi_a2 * u_gen(ctx, mu, l))
    cache[word] = out
    return out


def twist(a):
    """Linear extension of Psi to an Element."""
    out = BraidedElement(a.ctx)
    for w, c in a.terms.items():
        out = out + c * twist_word(a.ctx, w)
    return out


def twist_offdiag_power(ctx, k, l, N):
    """Psi((x^k_l)^N) for k != l, returned as (scalar, (u^k_l)^*N)."""
    if k == l:
        raise ValueError("off-diagonal formula requires k != l")
    if N < 0:
        raise ValueError("N must be >= 0")
    scalar = q_pow(-(N * (N - 1)) // 2, ctx.n)
    gen = u_gen(ctx, k, l)
    power = unit(ctx)
    for _ in range(N):
        power = power * gen
    return scalar, power


def twist_diag_power_closed(ctx, k, N):
    """The composition-sum formula for Psi((x^k_k)^N), N >= 2:

    sum over lambda |= N of sigma_q(lambda) times the V^k(lambda) chains.
    """
    if N < 2:
        raise ValueError("closed diagonal formula requires N >= 2")
    if not 1 <= k <= ctx.n:
        raise ValueError("k out of range")
    out = BraidedElement(ctx)
    for lam in compositions(N):
        coeff = sigma_q(lam, ctx.n)
        for beta in v_set(k, lam):
            out = out + coeff * chain_of_tuple(ctx, beta)
    return out


def _mixed_betas(k, i):
    """Tuples (beta_1, ..., beta_{i+1}) with beta_1 = k, later entries < k."""
    if i == 0:
        yield (k,)
        return
    def rec(prefix, depth):
        if depth == i:
            yield tuple(prefix)
            return
        for b in range(1, k):
            prefix.append(b)
            yield from rec(prefix, depth + 1)
            prefix.pop()
    yield from rec([k], 0)


def twist_mixed_closed(ctx, k, l, N):
    """The double-sum closed form for Psi((x^k_k)^N x^k_l), N >= 1."""
    if N < 1:
        raise ValueError("mixed formula requires N >= 1")
    out = BraidedElement(ctx)
    for i in range(N + 1):
        coeff = ONE
        for j in range(1, i + 1):
            coeff = coeff * (ONE - q_pow(-2 * (N + 1 - j), ctx.n))
        if coeff.is_zero():
            continue
        psi_diag = twist_word(ctx, ((k, k),) * (N - i))
        for beta in _mixed_betas(k, i):
            term = psi_diag
            for a, b in zip(beta, beta[1:]):
                term = term * u_gen(ctx, a, b)
            term = term * u_gen(ctx, beta[-1], l)
            out = out + coeff * term
    return out


def diag_recursion_residual(ctx, k, l, N):
    """Residual of the peeling recursion

    Psi((x^k_k)^N x^k_l) - Psi((x^k_k)^N) * u^k_l
        - (1 - q^-2N) sum_{beta<k} Psi((x^k_k)^{N-1} x^k_beta) * u^beta_l.
    """
    lhs = twist_word(ctx, ((k, k),) * N + ((k, l),))
    rhs = twist_word(ctx, ((k, k),) * N) * u_gen(ctx, k, l)
    fac = ONE - q_pow(-2 * N, ctx.n)
    for beta in range(1, k):
        rhs = rhs + fac * (
            twist_word(ctx, ((k, k),) * (N - 1) + ((k, beta),)) * u_gen(ctx, beta, l)
        )
    return lhs - rhs
