"""Orchestrated verification suites with machine-readable reports.

Every check reduces to an exact symbolic identity; a suite passes iff
every residual is exactly zero (or exactly the expected value).  Checks
run under stable keys and reports are assembled in sorted-key order, so
report content is byte-identical across runs with the same parameters
(wall-clock timing is reported separately and never serialized into the
deterministic payload).

An up-front feasibility gate estimates the dominant cost of the braided
product — the double-coproduct expansion costs about n^(2m) per
degree-m word, over roughly C(m + n^2 - 1, n^2 - 1) words — and refuses
parameter grids whose estimate exceeds the budget instead of hanging.
"""

import random
import time
from concurrent.futures import ThreadPoolExecutor
from math import comb

from .laurent import LaurentInt, ONE, ZERO, q_pow, sigma_q, CyclotomicCtx
from .compositions import (
    compositions,
    v_set,
    v_count,
    is_v_member,
)
from .matrix_algebra import (
    Element,
    context,
    coproduct,
    coproduct_word,
    coproduct2_word,
    counit,
    counit_word,
    normal_form,
    normal_form_strategy,
    qdet,
)
from .rform import rform
from .braided import (
    admissible_indices,
    braided_det,
    braided_power,
    check_bqmn_relation,
    det_terms,
    evaluate_terms,
    u_gen,
)
from .twisting import (
    diag_recursion_residual,
    twist,
    twist_diag_power_closed,
    twist_mixed_closed,
    twist_offdiag_power,
    twist_word,
)
from .presentations import (
    count_terms,
    count_terms_closed,
    mon_terms,
    rel2_terms,
)

SUITE_NAMES = ("ring", "fr", "rform", "braided", "twist", "theorem", "examples", "counts")

DEFAULT_BUDGET = 5 * 10**8


class InfeasibleGrid(ValueError):
    """Raised instead of attempting a grid whose cost estimate exceeds
    the configured budget."""


def braid_cost(n, degree):
    """Estimated braided-engine cost at degree m: n^(2m) per word over
    ~C(m + n^2 - 1, n^2 - 1) words."""
    return n ** (2 * degree) * comb(degree + n * n - 1, n * n - 1)


def check_feasible(n, degree, budget=DEFAULT_BUDGET):
    cost = braid_cost(n, degree)
    if cost > budget:
        raise InfeasibleGrid(
            f"estimated braided cost {cost:.2e} for n={n}, degree {degree} "
            f"exceeds budget {budget:.2e}; refusing to start "
            "(defaults cover n<=3 with ell<=5, n=4 with ell=3, n=2 with ell=7)"
        )


class SuiteReport:
    """Outcome of one suite: named checks, each pass/fail with detail."""

    __slots__ = ("suite", "params", "checks", "wall_time")

    def __init__(self, suite, params, checks, wall_time):
        self.suite = suite
        self.params = dict(params)
        self.checks = sorted(checks, key=lambda c: c[0])
        self.wall_time = wall_time

    @property
    def passed(self):
        return all(ok for _, ok, _ in self.checks)

    @property
    def counts(self):
        good = sum(1 for _, ok, _ in self.checks if ok)
        return good, len(self.checks)

    def to_json(self):
        """Deterministic payload; excludes wall-clock timing."""
        return {
            "suite": self.suite,
            "params": {k: self.params[k] for k in sorted(self.params)},
            "passed": self.passed,
            "checks": [
                {"key": key, "ok": ok, "detail": detail}
                for key, ok, detail in self.checks
            ],
        }

    def to_text(self):
        good, total = self.counts
        head = (
            f"suite {self.suite} "
            f"[{' '.join(f'{k}={self.params[k]}' for k in sorted(self.params))}] "
            f"{good}/{total} passed in {self.wall_time:.2f}s"
        )
        lines = [head]
        for key, ok, detail in self.checks:
            mark = "ok  " if ok else "FAIL"
            lines.append(f"  {mark} {key}" + (f"  ({detail})" if detail else ""))
        return "\n".join(lines)


def _run_checks(checks, workers):
    """Evaluate (key, thunk) pairs; each thunk returns (ok, detail)."""
    def run_one(item):
        key, thunk = item
        try:
            ok, detail = thunk()
        except Exception as exc:  # a crashed check is a failed check
            ok, detail = False, f"exception: {exc}"
        return key, bool(ok), detail

    if workers > 1:
        with ThreadPoolExecutor(max_workers=workers) as pool:
            return list(pool.map(run_one, checks))
    return [run_one(item) for item in checks]


def run_suite(name, n=2, ell=3, seed=0, workers=1, budget=DEFAULT_BUDGET, **caps):
    """Run one named suite and return its SuiteReport."""
    if name not in SUITE_NAMES:
        raise ValueError(f"unknown suite {name!r}; expected one of {SUITE_NAMES}")
    builder = _BUILDERS[name]
    params = {"n": n, "ell": ell, "seed": seed}
    params.update(caps)
    start = time.perf_counter()
    checks = builder(n=n, ell=ell, seed=seed, budget=budget, **caps)
    results = _run_checks(checks, workers)
    return SuiteReport(name, params, results, time.perf_counter() - start)


def run_all(n=2, ell=3, seed=0, workers=1, budget=DEFAULT_BUDGET):
    return [run_suite(s, n=n, ell=ell, seed=seed, workers=workers, budget=budget) for s in SUITE_NAMES]


# -- helpers -----------------------------------------------------------


def _random_word(rng, n, degree):
    return tuple(
        (rng.randint(1, n), rng.randint(1, n)) for _ in range(rng.randint(0, degree))
    )


def _random_element(ctx, rng, degree=3, nterms=3):
    out = Element.zero(ctx)
    for _ in range(nterms):
        coeff = LaurentInt({rng.randint(-3, 3): rng.choice((-2, -1, 1, 2))})
        out = out + Element.from_word(ctx, _random_word(rng, ctx.n, degree), coeff)
    return out


def _dicts_equal(a, b):
    return a == b


def _pair_mul(ctx, pa, pb):
    """Product of two tensor-square dicts {(w1, w2): coeff}."""
    out = {}
    for (a1, a2), ca in pa.items():
        for (b1, b2), cb in pb.items():
            c = ca * cb
            for w1, c1 in normal_form(ctx, a1 + b1).items():
                for w2, c2 in normal_form(ctx, a2 + b2).items():
                    key = (w1, w2)
                    s = out.get(key, ZERO) + c * c1 * c2
                    if s.is_zero():
                        out.pop(key, None)
                    else:
                        out[key] = s
    return out


# -- suite builders -----------------------------------------------------


def _ring_suite(n=2, ell=3, seed=0, budget=DEFAULT_BUDGET, sigma_weight=8, v_weight=7):
    checks = []

    def sigma_example():
        expect = (
            (ONE - q_pow(-2, n)) * (ONE - q_pow(-4, n)) * (ONE - q_pow(-10, n))
        )
        got = sigma_q((3, 1, 2), n)
        return got == expect, "" if got == expect else "sigma(3,1,2) mismatch"

    checks.append(("sigma/example-312", sigma_example))

    def sigma_recursion(parts):
        def thunk():
            got = sigma_q(parts, n)
            if len(parts) == 1:
                expect = ONE
                for j in range(1, parts[0]):
                    expect = expect * (ONE - q_pow(-2 * (parts[0] - j), n))
            else:
                weight = sum(parts)
                expect = sigma_q(parts[:-1], n)
                for j in range(1, parts[-1]):
                    expect = expect * (ONE - q_pow(-2 * (weight - j), n))
            return got == expect, ""
        return thunk

    for weight in range(1, sigma_weight + 1):
        for parts in compositions(weight):
            key = f"sigma/recursion-N{weight}-" + "_".join(map(str, parts))
            checks.append((key, sigma_recursion(parts)))

    def v_example_size():
        cnt = sum(1 for _ in v_set(4, (3, 1, 2)))
        return cnt == 27 and v_count(4, (3, 1, 2)) == 27, f"|V^4(3,1,2)|={cnt}"

    def v_example_member():
        found = (4, 2, 3, 4, 4, 1, 4) in set(v_set(4, (3, 1, 2)))
        return found and is_v_member(4, (3, 1, 2), (4, 2, 3, 4, 4, 1, 4)), ""

    checks.append(("vset/example-size", v_example_size))
    checks.append(("vset/example-member", v_example_member))

    def v2_singleton(parts):
        def thunk():
            members = list(v_set(2, parts))
            expect = [2]
            for p in parts:
                expect.extend([1] * (p - 1))
                expect.append(2)
            return members == [tuple(expect)], f"got {members}"
        return thunk

    for weight in range(1, v_weight + 1):
        for parts in compositions(weight):
            key = f"vset/v2-singleton-N{weight}-" + "_".join(map(str, parts))
            checks.append((key, v2_singleton(parts)))

    def composition_count():
        return all(
            sum(1 for _ in compositions(N)) == (1 << (N - 1)) for N in range(1, 9)
        ), ""

    checks.append(("compositions/count", composition_count))

    def cyclotomic_canonical():
        cyc = CyclotomicCtx(ell, n)
        rng = random.Random(seed)
        for _ in range(100):
            f = LaurentInt(
                {rng.randint(-12, 12): rng.randint(-5, 5) for _ in range(4)}
            )
            r = cyc.reduce(f)
            if cyc.reduce(r) != r:
                return False, "reduce not idempotent"
            if r.terms and (min(r.terms) < 0 or max(r.terms) >= len(cyc.phi_coeffs) - 1):
                return False, "canonical degree bound violated"
            shift = f.shift(ell * n * 3)
            if cyc.reduce(shift) != r:
                return False, "v^(ell n) is not 1 in the quotient"
        if not cyc.is_zero(q_pow(ell, n) - ONE):
            return False, "Phi does not divide q^ell - 1"
        return True, ""

    checks.append(("cyclotomic/canonical-form", cyclotomic_canonical))
    return checks


def _fr_suite(n=2, ell=3, seed=0, budget=DEFAULT_BUDGET, degree=3, trials=12):
    ctx = context(n)
    rng = random.Random(seed)
    checks = []

    words = [_random_word(rng, n, degree + 1) for _ in range(trials)]
    elements = [_random_element(ctx, rng, degree) for _ in range(trials)]

    def confluence(word):
        def thunk():
            left = normal_form_strategy(ctx, word, strategy="leftmost")
            right = normal_form_strategy(ctx, word, strategy="rightmost")
            base = normal_form(ctx, word)
            return left == right == base, ""
        return thunk

    for t, w in enumerate(words):
        checks.append((f"rewrite/confluence-{t:02d}", confluence(w)))

    def assoc(t):
        a, b, c = elements[t], elements[(t + 1) % trials], elements[(t + 2) % trials]
        def thunk():
            return ((a * b) * c) == (a * (b * c)), ""
        return thunk

    for t in range(trials):
        checks.append((f"algebra/assoc-{t:02d}", assoc(t)))

    def coassoc(word):
        def thunk():
            left = coproduct2_word(ctx, word)  # (Delta x id) Delta
            right = {}
            for (w1, w23), c in coproduct_word(ctx, word).items():
                for (w2, w3), c2 in coproduct_word(ctx, w23).items():
                    key = (w1, w2, w3)
                    s = right.get(key, ZERO) + c * c2
                    if s.is_zero():
                        right.pop(key, None)
                    else:
                        right[key] = s
            return left == right, ""
        return thunk

    for t, w in enumerate(words):
        checks.append((f"coalgebra/coassoc-{t:02d}", coassoc(w)))

    def delta_mult(t):
        a, b = elements[t], elements[(t + 3) % trials]
        def thunk():
            return _dicts_equal(
                coproduct(a * b), _pair_mul(ctx, coproduct(a), coproduct(b))
            ), ""
        return thunk

    for t in range(trials):
        checks.append((f"coalgebra/delta-mult-{t:02d}", delta_mult(t)))

    def counit_laws(t):
        a = elements[t]
        def thunk():
            left = Element.zero(ctx)
            right = Element.zero(ctx)
            for (w1, w2), c in coproduct(a).items():
                left = left + Element.from_word(ctx, w2, c * counit_word(w1))
                right = right + Element.from_word(ctx, w1, c * counit_word(w2))
            return left == a == right, ""
        return thunk

    for t in range(trials):
        checks.append((f"coalgebra/counit-laws-{t:02d}", counit_laws(t)))

    def det_central():
        d = qdet(ctx)
        for i in range(1, n + 1):
            for j in range(1, n + 1):
                x = Element.gen(ctx, i, j)
                if d * x != x * d:
                    return False, f"x[{i},{j}] does not commute"
        return True, ""

    checks.append(("qdet/central", det_central))

    def det_grouplike():
        d = qdet(ctx)
        expect = {}
        for w1, c1 in d.terms.items():
            for w2, c2 in d.terms.items():
                expect[(w1, w2)] = c1 * c2
        return coproduct(d) == expect and counit(d) == ONE, ""

    checks.append(("qdet/grouplike", det_grouplike))
    return checks


def _rform_suite(n=2, ell=3, seed=0, budget=DEFAULT_BUDGET, pairs=10):
    ctx = context(n)
    form = rform(ctx)
    rng = random.Random(seed)
    checks = []

    def integrality():
        bad = [
            key
            for key, val in form.tables["Rtilde"].items()
            if not isinstance(val, LaurentInt)
        ]
        return not bad, f"{len(form.tables['Rtilde'])} entries"

    checks.append(("rtilde/integrality", integrality))

    gens = [((i, j),) for i in range(1, n + 1) for j in range(1, n + 1)]
    seeded = [
        (_random_word(rng, n, 2), _random_word(rng, n, 2)) for _ in range(pairs)
    ]
    all_pairs = [(a, b) for a in gens for b in gens] + seeded

    def conv_rinv(a, b, order):
        def thunk():
            total = ZERO
            for (a1, a2), ca in coproduct_word(ctx, a).items():
                for (b1, b2), cb in coproduct_word(ctx, b).items():
                    first, second = ("Rinv", "R") if order == 0 else ("R", "Rinv")
                    part = form.eval_words(first, a1, b1)
                    if part.is_zero():
                        continue
                    total = total + ca * cb * part * form.eval_words(second, a2, b2)
            expect = counit_word(a) * counit_word(b)
            return total == expect, ""
        return thunk

    def conv_rtilde(a, b, order):
        """Rtilde is the convolution inverse against the flipped second
        leg: sum R(a1 (x) b2) Rtilde(a2 (x) b1) = eps(a) eps(b)."""
        def thunk():
            total = ZERO
            for (a1, a2), ca in coproduct_word(ctx, a).items():
                for (b1, b2), cb in coproduct_word(ctx, b).items():
                    if order == 0:
                        part = form.eval_words("R", a1, b2)
                        if part.is_zero():
                            continue
                        part = part * form.eval_words("Rtilde", a2, b1)
                    else:
                        part = form.eval_words("Rtilde", a1, b2)
                        if part.is_zero():
                            continue
                        part = part * form.eval_words("R", a2, b1)
                    total = total + ca * cb * part
            expect = counit_word(a) * counit_word(b)
            return total == expect, ""
        return thunk

    def dqt(a, b):
        def thunk():
            left = Element.zero(ctx)
            right = Element.zero(ctx)
            for (a1, a2), ca in coproduct_word(ctx, a).items():
                for (b1, b2), cb in coproduct_word(ctx, b).items():
                    c = ca * cb
                    r = form.eval_words("R", a1, b1)
                    if not r.is_zero():
                        left = left + Element.from_word(ctx, a2 + b2, c * r)
                    r = form.eval_words("R", a2, b2)
                    if not r.is_zero():
                        right = right + Element.from_word(ctx, b1 + a1, c * r)
            return left == right, ""
        return thunk

    for t, (a, b) in enumerate(all_pairs):
        checks.append((f"conv/rinv-lr-{t:03d}", conv_rinv(a, b, 0)))
        checks.append((f"conv/rinv-rl-{t:03d}", conv_rinv(a, b, 1)))
        checks.append((f"conv/rtilde-lr-{t:03d}", conv_rtilde(a, b, 0)))
        checks.append((f"conv/rtilde-rl-{t:03d}", conv_rtilde(a, b, 1)))
        checks.append((f"dqt/commutation-{t:03d}", dqt(a, b)))
    return checks


def _braided_suite(n=2, ell=3, seed=0, budget=DEFAULT_BUDGET):
    check_feasible(n, 2, budget)
    ctx = context(n)
    checks = []

    def relation(rel_id, idx):
        def thunk():
            residual = check_bqmn_relation(ctx, rel_id, idx)
            return residual.is_zero(), "" if residual.is_zero() else f"{len(residual.terms)} residual terms"
        return thunk

    for rel_id in (1, 2, 3, 4):
        for idx in admissible_indices(n, rel_id):
            key = f"rel{rel_id}/" + "-".join(map(str, idx))
            checks.append((key, relation(rel_id, idx)))

    if n == 2:
        a, b = u_gen(ctx, 1, 1), u_gen(ctx, 1, 2)
        c, d = u_gen(ctx, 2, 1), u_gen(ctx, 2, 2)
        q2 = ctx.qp(2)
        one_m_qm2 = ONE - ctx.qp(-2)
        # the classical 2x2 braided-matrix relations: b a = q^2 a b,
        # c a = q^-2 a c, a d = d a, c d - d c = (1 - q^-2) c a,
        # d b - b d = (1 - q^-2) a b, c b - b c = (1 - q^-2)(a - d) a
        displays = [
            ("m2/ba", b * a - q2 * (a * b)),
            ("m2/ca", c * a - ctx.qp(-2) * (a * c)),
            ("m2/ad", a * d - d * a),
            ("m2/cd", c * d - d * c - one_m_qm2 * (c * a)),
            ("m2/db", d * b - b * d - one_m_qm2 * (a * b)),
            ("m2/cb", c * b - b * c - one_m_qm2 * ((a - d) * a)),
        ]
        for key, residual in displays:
            checks.append((key, (lambda r=residual: (r.is_zero(), ""))))
    return checks


def _twist_suite(
    n=2,
    ell=3,
    seed=0,
    budget=DEFAULT_BUDGET,
    offdiag_cap=6,
    mixed_cap=4,
    diag_cap=5,
):
    # powers of a single off-diagonal generator stay sparse, so the
    # expansion estimate is driven by the diagonal and mixed closed forms
    check_feasible(n, max(mixed_cap + 1, diag_cap), budget)
    ctx = context(n)
    checks = []

    def quadratic(i, j, k, l):
        """The closed quadratic formula for Psi(x^i_j x^k_l)."""
        def thunk():
            qq = ctx.qp(1) - ctx.qp(-1)
            d = lambda a, b: 1 if a == b else 0
            expect = ctx.qp(d(j, k) - d(i, k)) * (u_gen(ctx, i, j) * u_gen(ctx, k, l))
            if k == j:
                for dd in range(1, j):
                    expect = expect + (qq * ctx.qp(-d(i, k))) * (
                        u_gen(ctx, i, dd) * u_gen(ctx, dd, l)
                    )
            if k > i:
                expect = expect - (qq * ctx.qp(d(i, j))) * (
                    u_gen(ctx, k, j) * u_gen(ctx, i, l)
                )
                if i == j:
                    for bb in range(1, j):
                        expect = expect - (qq * qq) * (
                            u_gen(ctx, k, bb) * u_gen(ctx, bb, l)
                        )
            got = twist_word(ctx, ((i, j), (k, l)))
            return got == expect, ""
        return thunk

    for i in range(1, n + 1):
        for j in range(1, n + 1):
            for k in range(1, n + 1):
                for l in range(1, n + 1):
                    checks.append(
                        (f"quadratic/{i}{j}-{k}{l}", quadratic(i, j, k, l))
                    )

    def offdiag(k, l, N):
        def thunk():
            scalar, power = twist_offdiag_power(ctx, k, l, N)
            got = twist_word(ctx, ((k, l),) * N)
            return got == scalar * power, ""
        return thunk

    for k in range(1, n + 1):
        for l in range(1, n + 1):
            if k == l:
                continue
            for N in range(1, offdiag_cap + 1):
                checks.append((f"offdiag/{k}{l}-N{N}", offdiag(k, l, N)))

    def mixed(k, l, N):
        def thunk():
            got = twist_word(ctx, ((k, k),) * N + ((k, l),))
            return got == twist_mixed_closed(ctx, k, l, N), ""
        return thunk

    def recursion(k, l, N):
        def thunk():
            return diag_recursion_residual(ctx, k, l, N).is_zero(), ""
        return thunk

    for k in range(1, n + 1):
        for l in range(1, k):
            for N in range(1, mixed_cap + 1):
                checks.append((f"mixed/{k}{l}-N{N}", mixed(k, l, N)))
                checks.append((f"recursion/{k}{l}-N{N}", recursion(k, l, N)))

    def diag(k, N):
        def thunk():
            got = twist_word(ctx, ((k, k),) * N)
            return got == twist_diag_power_closed(ctx, k, N), ""
        return thunk

    for k in range(1, n + 1):
        for N in range(2, diag_cap + 1):
            checks.append((f"diag/{k}-N{N}", diag(k, N)))
    return checks


def _theorem_suite(n=2, ell=3, seed=0, budget=DEFAULT_BUDGET):
    check_feasible(n, ell, budget)
    ctx = context(n)
    cyc = CyclotomicCtx(ell, n)
    checks = []

    def det_is_twist():
        return twist(qdet(ctx)) == braided_det(ctx), ""

    def det_central():
        det = braided_det(ctx)
        for i in range(1, n + 1):
            for j in range(1, n + 1):
                u = u_gen(ctx, i, j)
                if det * u != u * det:
                    return False, f"u[{i},{j}] does not commute"
        return True, ""

    checks.append(("det/twist-equals-braided", det_is_twist))
    checks.append(("det/central", det_central))

    def power_scalar():
        return cyc.reduce(q_pow(-(ell * (ell - 1)) // 2, n)) == ONE, ""

    checks.append(("rel1/scalar-specializes-to-1", power_scalar))

    def rel1(k, l):
        def thunk():
            got = twist(Element.gen(ctx, k, l) ** ell).reduce_mod(cyc)
            expect = braided_power(u_gen(ctx, k, l), ell).reduce_mod(cyc)
            return (got - expect).reduce_mod(cyc).is_zero(), ""
        return thunk

    for k in range(1, n + 1):
        for l in range(1, n + 1):
            if k != l:
                checks.append((f"rel1/twist-{k}{l}", rel1(k, l)))

    def rel2(k):
        def thunk():
            got = twist(Element.gen(ctx, k, k) ** ell).reduce_mod(cyc)
            expect = evaluate_terms(ctx, rel2_terms(n, ell, k, cyc)).reduce_mod(cyc)
            return (got - expect).reduce_mod(cyc).is_zero(), ""
        return thunk

    for k in range(1, n + 1):
        checks.append((f"rel2/twist-{k}", rel2(k)))
    return checks


def _examples_suite(n=2, ell=3, seed=0, budget=DEFAULT_BUDGET):
    check_feasible(n, ell, budget)
    ctx = context(n)
    cyc = CyclotomicCtx(ell, n)
    checks = []

    def v_form_display(k):
        """For ell = 3 the column-k diagonal relation must list, exactly:
        (u^k_k)^3; (1 - e^-2) u^k_i u^i_k u^k_k; (1 - e^-4) u^k_k u^k_i u^i_k;
        and (1 - e^-2)(1 - e^-4) u^k_i u^i_j u^j_k."""
        def thunk():
            got = {w: c for c, w in rel2_terms(n, 3, k, cyc)}
            c1 = cyc.reduce(ONE - q_pow(-2, n))
            c2 = cyc.reduce(ONE - q_pow(-4, n))
            expect = {((k, k),) * 3: cyc.reduce(ONE)}
            for i in range(1, k):
                expect[((k, i), (i, k), (k, k))] = c1
                expect[((k, k), (k, i), (i, k))] = c2
                for j in range(1, k):
                    expect[((k, i), (i, j), (j, k))] = cyc.reduce(c1 * c2)
            return got == expect, ""
        return thunk

    if ell == 3:
        for k in range(1, n + 1):
            checks.append((f"ell3/v-form-display-k{k}", v_form_display(k)))

    if n == 2:
        def mon_equals_v():
            a = evaluate_terms(ctx, mon_terms(ell, cyc)).reduce_mod(cyc)
            b = evaluate_terms(ctx, rel2_terms(2, ell, 2, cyc)).reduce_mod(cyc)
            return (a - b).reduce_mod(cyc).is_zero(), ""

        checks.append((f"ell{ell}/mon-form-evaluates-to-v-form", mon_equals_v))

        def sl2_det():
            """a*d - q^2 c*b is the braided determinant (a*d = d*a)."""
            a, b = u_gen(ctx, 1, 1), u_gen(ctx, 1, 2)
            c, d = u_gen(ctx, 2, 1), u_gen(ctx, 2, 2)
            return braided_det(ctx) == a * d - ctx.qp(2) * (c * b), ""

        checks.append(("sl2/det-display", sl2_det))

        def qdet2_worked():
            expect = u_gen(ctx, 2, 2) * u_gen(ctx, 1, 1) - ctx.qp(2) * (
                u_gen(ctx, 2, 1) * u_gen(ctx, 1, 2)
            )
            return twist(qdet(ctx)) == expect, ""

        checks.append(("sl2/twist-qdet-worked-example", qdet2_worked))

    if n == 3:
        def det3_display():
            """Six-chain determinant display; the q^3/q^4 coefficients ride
            on the two 3-cycles via the deficiency statistic."""
            q = lambda k: q_pow(k, 3)
            expect = {
                (((3, 3), (2, 2), (1, 1))): q(0),
                (((3, 3), (2, 1), (1, 2))): -q(2),
                (((3, 1), (2, 2), (1, 3))): -q(4),
                (((3, 2), (2, 3), (1, 1))): -q(2),
                (((3, 2), (2, 1), (1, 3))): q(4),
                (((3, 1), (2, 3), (1, 2))): q(3),
            }
            got = {w: c for c, w in det_terms(3)}
            return got == expect, ""

        checks.append(("sl3/det-six-terms", det3_display))
    return checks


def _counts_suite(n=2, ell=3, seed=0, budget=DEFAULT_BUDGET, kmax=4):
    checks = []

    def one(k):
        def thunk():
            enum = count_terms(max(k, 1), ell, k)
            closed = count_terms_closed(ell, k)
            return enum == closed, f"enumerated {enum}, closed form {closed}"
        return thunk

    for k in range(1, kmax + 1):
        checks.append((f"count/ell{ell}-k{k}", one(k)))
    return checks


_BUILDERS = {
    "ring": _ring_suite,
    "fr": _fr_suite,
    "rform": _rform_suite,
    "braided": _braided_suite,
    "twist": _twist_suite,
    "theorem": _theorem_suite,
    "examples": _examples_suite,
    "counts": _counts_suite,
}
