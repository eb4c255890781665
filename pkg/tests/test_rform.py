"""Dual R-matrix pairing: generator tables, exact inversion, convolution
identities, and the commutation identity that makes the pairing useful."""

import random

import pytest

from smallre.laurent import LaurentInt, ONE, ZERO, q_pow, q_minus_qinv, v_pow
from smallre.matrix_algebra import (
    Element,
    context,
    coproduct_word,
    counit_word,
)
from smallre.rform import RForm, _bareiss_inverse, rform


def gen_pairs(n):
    gens = [((i, j),) for i in range(1, n + 1) for j in range(1, n + 1)]
    return [(a, b) for a in gens for b in gens]


def random_word(rng, n, degree):
    return tuple(
        (rng.randint(1, n), rng.randint(1, n)) for _ in range(rng.randint(0, degree))
    )


class TestGeneratorTables:
    @pytest.mark.parametrize("n", [2, 3])
    def test_closed_formula(self, n):
        form = rform(context(n))
        qq = q_minus_qinv(n)
        for i in range(1, n + 1):
            for j in range(1, n + 1):
                for k in range(1, n + 1):
                    for l in range(1, n + 1):
                        expect = ZERO
                        if i == j and k == l:
                            expect = expect + v_pow((1 if j == l else 0) * n - 1)
                        if j > l and i == l and k == j:
                            expect = expect + v_pow(-1) * qq
                        assert form.gen_value("R", i, j, k, l) == expect

    def test_rinv_is_r_at_inverse_q(self):
        """Rinv generator entries are the R entries with v -> v^-1
        (the standard inverse R-matrix for type A)."""
        for n in (2, 3):
            form = rform(context(n))
            for key, value in form.tables["R"].items():
                flipped = LaurentInt({-e: c for e, c in value.terms.items()})
                assert form.gen_value("Rinv", *key) == flipped

    @pytest.mark.parametrize("n", [2, 3])
    def test_rtilde_entries_are_laurent(self, n):
        form = rform(context(n))
        assert form.tables["Rtilde"], "Rtilde table must be populated"
        for value in form.tables["Rtilde"].values():
            assert isinstance(value, LaurentInt)

    def test_table_json_shape(self):
        form = rform(context(2))
        table = form.table_json("R")
        assert len(table) == 4 and all(len(row) == 4 for row in table)


class TestBareiss:
    def test_identity(self):
        rows = [[ONE, ZERO], [ZERO, ONE]]
        assert _bareiss_inverse(rows) == rows

    def test_known_inverse(self):
        # [[v, 1], [0, v^-1]] has exact inverse [[v^-1, -1], [0, v]]
        rows = [[v_pow(1), ONE], [ZERO, v_pow(-1)]]
        inv = _bareiss_inverse(rows)
        assert inv == [[v_pow(-1), -ONE], [ZERO, v_pow(1)]]

    def test_singular(self):
        with pytest.raises(ValueError):
            _bareiss_inverse([[ONE, ONE], [ONE, ONE]])

    def test_random_integer_matrices(self):
        rng = random.Random(23)
        for _ in range(20):
            m = 3
            rows = [
                [LaurentInt.const(rng.randint(-3, 3)) for _ in range(m)]
                for _ in range(m)
            ]
            try:
                inv = _bareiss_inverse([row[:] for row in rows])
            except ValueError:
                continue  # singular or non-unimodular: both legitimately rejected
            for i in range(m):
                for j in range(m):
                    acc = ZERO
                    for k in range(m):
                        acc = acc + rows[i][k] * inv[k][j]
                    assert acc == (ONE if i == j else ZERO)


class TestConvolution:
    @pytest.mark.parametrize("n", [2, 3])
    def test_rinv_both_orders(self, n):
        ctx = context(n)
        form = rform(ctx)
        rng = random.Random(41 + n)
        pairs = gen_pairs(n) + [
            (random_word(rng, n, 2), random_word(rng, n, 2)) for _ in range(8)
        ]
        for a, b in pairs:
            for order in (0, 1):
                total = ZERO
                for (a1, a2), ca in coproduct_word(ctx, a).items():
                    for (b1, b2), cb in coproduct_word(ctx, b).items():
                        first, second = ("Rinv", "R") if order == 0 else ("R", "Rinv")
                        part = form.eval_words(first, a1, b1)
                        if part.is_zero():
                            continue
                        total = total + ca * cb * part * form.eval_words(
                            second, a2, b2
                        )
                assert total == counit_word(a) * counit_word(b)

    @pytest.mark.parametrize("n", [2, 3])
    def test_rtilde_both_orders(self, n):
        """Rtilde inverts R against the flipped second leg:
        sum R(a1 (x) b2) Rtilde(a2 (x) b1) = eps(a) eps(b), both orders."""
        ctx = context(n)
        form = rform(ctx)
        rng = random.Random(43 + n)
        pairs = gen_pairs(n) + [
            (random_word(rng, n, 2), random_word(rng, n, 2)) for _ in range(8)
        ]
        for a, b in pairs:
            for order in (0, 1):
                total = ZERO
                for (a1, a2), ca in coproduct_word(ctx, a).items():
                    for (b1, b2), cb in coproduct_word(ctx, b).items():
                        first, second = (
                            ("R", "Rtilde") if order == 0 else ("Rtilde", "R")
                        )
                        part = form.eval_words(first, a1, b2)
                        if part.is_zero():
                            continue
                        total = total + ca * cb * part * form.eval_words(
                            second, a2, b1
                        )
                assert total == counit_word(a) * counit_word(b)


class TestCommutation:
    @pytest.mark.parametrize("n", [2, 3])
    def test_dual_quasitriangularity(self, n):
        """sum R(a1 (x) b1) a2 b2 = sum b1 a1 R(a2 (x) b2)."""
        ctx = context(n)
        form = rform(ctx)
        rng = random.Random(47 + n)
        pairs = gen_pairs(n) + [
            (random_word(rng, n, 2), random_word(rng, n, 2)) for _ in range(8)
        ]
        for a, b in pairs:
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
            assert left == right


class TestUnits:
    def test_unit_slots(self):
        ctx = context(2)
        form = rform(ctx)
        for variant in RForm.VARIANTS:
            assert form.eval_words(variant, (), ((1, 1), (2, 2))) == ONE
            assert form.eval_words(variant, ((1, 2),), ()) == ZERO
            assert form.eval_words(variant, (), ()) == ONE

    def test_unknown_variant(self):
        form = rform(context(2))
        with pytest.raises(ValueError):
            form.eval_words("S", (), ())


class TestFlatConvention:
    def test_flat_satisfies_its_own_identity(self):
        """The rejected unflipped convention still inverts the matrix it
        was built from; it just isn't the operator the braided product
        needs (the braided relation checks pin that down)."""
        ctx = context(2)
        form = RForm(ctx, rtilde_convention="flat")
        n = 2
        for i in range(1, n + 1):
            for j in range(1, n + 1):
                for k in range(1, n + 1):
                    for l in range(1, n + 1):
                        total = ZERO
                        for m in range(1, n + 1):
                            for p in range(1, n + 1):
                                left = form.gen_value("Rtilde", i, m, k, p)
                                if left.is_zero():
                                    continue
                                total = total + left * form.gen_value(
                                    "R", m, j, p, l
                                )
                        expect = ONE if (i == j and k == l) else ZERO
                        assert total == expect

    def test_conventions_differ(self):
        ctx = context(2)
        flat = RForm(ctx, rtilde_convention="flat")
        cop = rform(ctx)
        assert flat.tables["Rtilde"] != cop.tables["Rtilde"]

    def test_unknown_convention(self):
        with pytest.raises(ValueError):
            RForm(context(2), rtilde_convention="mystery")
