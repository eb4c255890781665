"""Covariantized algebra: braided product, quadratic relation families,
and the braided determinant."""

import pytest

from smallre.laurent import ONE, q_pow
from smallre.matrix_algebra import Element, context
from smallre.braided import (
    BraidedElement,
    admissible_indices,
    as_braided,
    braided_det,
    braided_power,
    bqmn_relation_terms,
    chain,
    chain_of_tuple,
    check_bqmn_relation,
    det_terms,
    evaluate_terms,
    u_gen,
    unit,
)


class TestProduct:
    def test_unit_neutral(self):
        ctx = context(2)
        a = u_gen(ctx, 2, 1)
        assert unit(ctx) * a == a
        assert a * unit(ctx) == a

    @pytest.mark.parametrize("n", [2, 3])
    def test_associativity(self, n):
        ctx = context(n)
        gens = [u_gen(ctx, i, j) for i in range(1, n + 1) for j in range(1, n + 1)]
        for a in gens[:3]:
            for b in gens[-3:]:
                for c in gens[1:4]:
                    assert (a * b) * c == a * (b * c)

    def test_no_mixing_with_plain_product(self):
        ctx = context(2)
        with pytest.raises(TypeError):
            u_gen(ctx, 1, 1) * Element.gen(ctx, 1, 1)

    def test_scalar_dispatch(self):
        ctx = context(2)
        a = u_gen(ctx, 1, 2)
        assert (2 * a).terms == {((1, 2),): ONE + ONE}
        assert (q_pow(1, 2) * a).terms == {((1, 2),): q_pow(1, 2)}

    def test_braided_power(self):
        ctx = context(2)
        a = u_gen(ctx, 2, 2)
        assert braided_power(a, 0) == unit(ctx)
        assert braided_power(a, 3) == a * a * a
        with pytest.raises(ValueError):
            braided_power(a, -1)

    def test_chain_matches_repeated_product(self):
        ctx = context(2)
        letters = ((2, 1), (1, 1), (1, 2))
        expect = u_gen(ctx, 2, 1) * u_gen(ctx, 1, 1) * u_gen(ctx, 1, 2)
        assert chain(ctx, letters) == expect
        assert chain_of_tuple(ctx, (2, 1, 1, 2)) == expect

    def test_json_tag(self):
        ctx = context(2)
        obj = u_gen(ctx, 1, 1).to_json()
        assert obj["algebra"] == "braided"

    def test_as_braided(self):
        ctx = context(2)
        x = Element.gen(ctx, 1, 1)
        u = as_braided(x)
        assert isinstance(u, BraidedElement) and u.terms == x.terms


class TestRelations:
    @pytest.mark.parametrize("n", [2, 3, 4])
    @pytest.mark.parametrize("rel_id", [1, 2, 3, 4])
    def test_zero_residual(self, n, rel_id):
        ctx = context(n)
        for idx in admissible_indices(n, rel_id):
            residual = check_bqmn_relation(ctx, rel_id, idx)
            assert residual.is_zero(), (rel_id, idx, residual.terms)

    def test_admissible_counts(self):
        # rel 1: i free, j < l; rel 2: j free, i < k; rels 3, 4: i<k, j<l
        for n in (2, 3, 4):
            half = n * (n - 1) // 2
            assert len(admissible_indices(n, 1)) == n * half
            assert len(admissible_indices(n, 2)) == n * half
            assert len(admissible_indices(n, 3)) == half * half
            assert len(admissible_indices(n, 4)) == half * half

    def test_index_guards(self):
        ctx = context(2)
        with pytest.raises(ValueError):
            bqmn_relation_terms(ctx, 1, (1, 2, 1))
        with pytest.raises(ValueError):
            bqmn_relation_terms(ctx, 5, (1, 1, 2))

    def test_m2_displays(self):
        """The four-generator form of the n = 2 relations:
        b a = q^2 a b, c a = q^-2 a c, a d = d a,
        c d - d c = (1 - q^-2) c a, d b - b d = (1 - q^-2) a b,
        c b - b c = (1 - q^-2)(a - d) a."""
        ctx = context(2)
        a, b = u_gen(ctx, 1, 1), u_gen(ctx, 1, 2)
        c, d = u_gen(ctx, 2, 1), u_gen(ctx, 2, 2)
        s = ONE - ctx.qp(-2)
        assert b * a == ctx.qp(2) * (a * b)
        assert c * a == ctx.qp(-2) * (a * c)
        assert a * d == d * a
        assert c * d - d * c == s * (c * a)
        assert d * b - b * d == s * (a * b)
        assert c * b - b * c == s * ((a - d) * a)


class TestDeterminant:
    def test_n2_display(self):
        # a d - q^2 c b, written as chains u^2_2 u^1_1 - q^2 u^2_1 u^1_2
        terms = dict((w, c) for c, w in det_terms(2))
        assert terms == {
            ((2, 2), (1, 1)): ONE,
            ((2, 1), (1, 2)): -q_pow(2, 2),
        }

    def test_n3_six_terms(self):
        """Chain coefficients carry q^(l + e') with e' counted on the
        inverse permutation; the 3-cycles are where that matters."""
        q = lambda k: q_pow(k, 3)
        expect = {
            ((3, 3), (2, 2), (1, 1)): q(0),
            ((3, 3), (2, 1), (1, 2)): -q(2),
            ((3, 1), (2, 2), (1, 3)): -q(4),
            ((3, 2), (2, 3), (1, 1)): -q(2),
            ((3, 2), (2, 1), (1, 3)): q(4),
            ((3, 1), (2, 3), (1, 2)): q(3),
        }
        assert dict((w, c) for c, w in det_terms(3)) == expect

    @pytest.mark.parametrize("n", [2, 3])
    def test_central(self, n):
        ctx = context(n)
        det = braided_det(ctx)
        for i in range(1, n + 1):
            for j in range(1, n + 1):
                u = u_gen(ctx, i, j)
                assert det * u == u * det

    def test_evaluate_terms(self):
        ctx = context(2)
        assert evaluate_terms(ctx, det_terms(2)) == braided_det(ctx)
