"""Compositions of N and the index-tuple sets V^k(lambda).

A composition is represented as a plain tuple of positive integers.
Enumeration orders are fixed and documented so output files are
reproducible: compositions by ascending binary mask on the N-1 gap
positions, index tuples by odometer order on the free slots.
"""

from itertools import product

from .laurent import sigma_q


def compositions(N):
    """Yield all 2^(N-1) compositions of N, binary-mask order ascending.

    Bit i of the mask set means "cut after position i+1", so mask 0 is the
    one-part composition (N,) and the all-ones mask is (1,)*N.
    """
    if N < 1:
        raise ValueError("N must be >= 1")
    for mask in range(1 << (N - 1)):
        parts = []
        run = 1
        for i in range(N - 1):
            if mask >> i & 1:
                parts.append(run)
                run = 1
            else:
                run += 1
        parts.append(run)
        yield tuple(parts)


def weight(parts):
    return sum(parts)


def length(parts):
    return len(parts)


def last_part(parts):
    return parts[-1]


def truncate(parts):
    """Drop the last part (lambda_{[1,-2]})."""
    if len(parts) < 2:
        raise ValueError("cannot truncate a length-1 composition")
    return tuple(parts[:-1])


def parse_composition(text):
    parts = tuple(int(p) for p in text.split(","))
    if not parts or any(p < 1 for p in parts):
        raise ValueError(f"not a composition: {text!r}")
    return parts


def format_composition(parts):
    return ",".join(str(p) for p in parts)


def anchor_positions(parts):
    """0-based positions in a (N+1)-tuple that are pinned to k in V^k."""
    pos = [0]
    acc = 0
    for p in parts:
        acc += p
        pos.append(acc)
    return pos


def v_set(k, parts):
    """Yield the tuples of V^k(lambda), odometer order on the free slots.

    Entries at the |lambda|+1 anchor positions equal k; the remaining
    N - |lambda| entries range over 1..k-1 (so the set is empty for k = 1
    unless every position is an anchor).
    """
    if k < 1:
        raise ValueError("k must be >= 1")
    N = sum(parts)
    anchors = set(anchor_positions(parts))
    free = [i for i in range(N + 1) if i not in anchors]
    if not free:
        yield (k,) * (N + 1)
        return
    if k == 1:
        return
    base = [k] * (N + 1)
    for vals in product(range(1, k), repeat=len(free)):
        beta = list(base)
        for pos, val in zip(free, vals):
            beta[pos] = val
        yield tuple(beta)


def v_count(k, parts):
    """|V^k(lambda)| = (k-1)^(N-|lambda|), with 0^0 = 1."""
    free = sum(parts) - len(parts)
    if free == 0:
        return 1
    return (k - 1) ** free


def is_v_member(k, parts, beta):
    N = sum(parts)
    if len(beta) != N + 1:
        return False
    anchors = set(anchor_positions(parts))
    for i, b in enumerate(beta):
        if i in anchors:
            if b != k:
                return False
        elif not 1 <= b < k:
            return False
    return True


def sigma(parts, n=1):
    """Alias for the q-scalar of a composition (see laurent.sigma_q)."""
    return sigma_q(parts, n)
