"""Presentation documents: relation builders, family assembly,
deterministic serialization, specialization, and term counts."""

import pytest

from smallre.laurent import LaurentInt, ONE, CyclotomicCtx, q_pow, sigma_q
from smallre.matrix_algebra import context
from smallre.braided import evaluate_terms
from smallre.presentations import (
    FAMILIES,
    PresentationDoc,
    Relation,
    T,
    count_terms,
    count_terms_closed,
    det_relation,
    expected_relation_count,
    mon_terms,
    present,
    quadratic_relations,
    rel2_terms,
    render_side,
    specialize,
)

A, B, C, D = (1, 1), (1, 2), (2, 1), (2, 2)


class TestRel2Terms:
    @pytest.mark.parametrize("ell", [3, 5, 7])
    def test_k1_is_plain_power(self, ell):
        # column 1 admits only the all-ones composition, with coefficient 1
        cyc = CyclotomicCtx(ell, 2)
        assert rel2_terms(2, ell, 1, cyc) == [(ONE, ((1, 1),) * ell)]

    @pytest.mark.parametrize("n", [2, 3])
    def test_ell3_v_form_display(self, n):
        """(u^k_k)^3 + (1 - e^-2) sum_{i<k} u^k_i u^i_k u^k_k
        + (1 - e^-4) sum_{i<k} u^k_k u^k_i u^i_k
        + (1 - e^-2)(1 - e^-4) sum_{i,j<k} u^k_i u^i_j u^j_k = 1."""
        cyc = CyclotomicCtx(3, n)
        c1 = cyc.reduce(ONE - q_pow(-2, n))
        c2 = cyc.reduce(ONE - q_pow(-4, n))
        for k in range(1, n + 1):
            expect = {((k, k),) * 3: ONE}
            for i in range(1, k):
                expect[((k, i), (i, k), (k, k))] = c1
                expect[((k, k), (k, i), (i, k))] = c2
                for j in range(1, k):
                    expect[((k, i), (i, j), (j, k))] = cyc.reduce(c1 * c2)
            got = {w: c for c, w in rel2_terms(n, 3, k, cyc)}
            assert got == expect, k

    def test_term_words_are_distinct(self):
        for ell in (3, 5):
            words = [w for _, w in rel2_terms(3, ell, 3, CyclotomicCtx(ell, 3))]
            assert len(words) == len(set(words))


class TestMonForm:
    def test_ell3_display(self):
        # d^3 + (1-e^-2) d c b + (1-e^-4) c b d + (1-e^-2)(1-e^-4) c a b
        cyc = CyclotomicCtx(3, 2)
        s = lambda *ms: cyc.reduce(
            _prod(ONE - q_pow(-2 * m, 2) for m in ms)
        )
        expect = {
            (D, D, D): ONE,
            (D, C, B): s(1),
            (C, B, D): s(2),
            (C, A, B): s(1, 2),
        }
        assert {w: c for c, w in mon_terms(3, cyc)} == expect

    def test_ell5_display(self):
        """The sixteen-monomial block form of the n = 2 diagonal
        relation at ell = 5, each word mon(lam_-1)*...*mon(lam_1) paired
        with sigma(lam).  Swapping the coefficients of each mirror pair
        (e.g. c a b c b vs c b c a b) yields a different formal sum that
        evaluates to the same element — the d/cb commutations absorb the
        swap — so the pairing asserted here is the one the formula
        literally produces, and the swapped variant is cross-checked by
        evaluated equality below."""
        cyc = CyclotomicCtx(5, 2)
        s = lambda *ms: cyc.reduce(_prod(ONE - q_pow(-2 * m, 2) for m in ms))
        expect = {
            (D, D, D, D, D): ONE,
            (D, D, D, C, B): s(1),
            (D, D, C, B, D): s(2),
            (D, C, B, D, D): s(3),
            (C, B, D, D, D): s(4),
            (D, D, C, A, B): s(1, 2),
            (D, C, A, B, D): s(2, 3),
            (C, A, B, D, D): s(3, 4),
            (C, B, C, B, D): s(2, 4),  # lam = (1,2,2)
            (C, B, D, C, B): s(1, 4),
            (D, C, B, C, B): s(1, 3),  # lam = (2,2,1)
            (C, A, B, C, B): s(1, 3, 4),  # lam = (2,3)
            (C, B, C, A, B): s(1, 2, 4),  # lam = (3,2)
            (D, C, A, A, B): s(1, 2, 3),
            (C, A, A, B, D): s(2, 3, 4),
            (C, A, A, A, B): s(1, 2, 3, 4),
        }
        got = {w: c for c, w in mon_terms(5, cyc)}
        assert len(got) == 16
        assert got == expect

    def test_ell5_mirror_swap_evaluates_equal(self):
        """The same sixteen words with the mirror-pair coefficients
        exchanged still evaluate to the V-form element mod Phi_5."""
        ctx = context(2)
        cyc = CyclotomicCtx(5, 2)
        swapped = {w: c for c, w in mon_terms(5, cyc)}
        for w1, w2 in (
            ((C, A, B, C, B), (C, B, C, A, B)),
            ((C, B, C, B, D), (D, C, B, C, B)),
        ):
            swapped[w1], swapped[w2] = swapped[w2], swapped[w1]
        a = evaluate_terms(
            ctx, [(c, w) for w, c in swapped.items()]
        ).reduce_mod(cyc)
        b = evaluate_terms(ctx, rel2_terms(2, 5, 2, cyc)).reduce_mod(cyc)
        assert (a - b).reduce_mod(cyc).is_zero()

    @pytest.mark.parametrize("ell", [3, 5, 7])
    def test_evaluates_to_v_form(self, ell):
        """Block form and V-form list different formal sums (d slides
        past the c*b blocks) but evaluate to the same algebra element."""
        ctx = context(2)
        cyc = CyclotomicCtx(ell, 2)
        a = evaluate_terms(ctx, mon_terms(ell, cyc)).reduce_mod(cyc)
        b = evaluate_terms(ctx, rel2_terms(2, ell, 2, cyc)).reduce_mod(cyc)
        assert (a - b).reduce_mod(cyc).is_zero()

    def test_forms_differ_as_syntax(self):
        # at ell = 3 the two forms list the same four words but attach
        # the coefficients differently (d c b vs c b d are exchanged)
        cyc = CyclotomicCtx(3, 2)
        mon = {w: c for c, w in mon_terms(3, cyc)}
        vform = {w: c for c, w in rel2_terms(2, 3, 2, cyc)}
        assert set(mon) == set(vform)
        assert mon != vform
        assert mon[(D, C, B)] == vform[(C, B, D)]
        assert mon[(C, B, D)] == vform[(D, C, B)]


def _prod(factors):
    out = ONE
    for f in factors:
        out = out * f
    return out


class TestPresent:
    @pytest.mark.parametrize("family", FAMILIES)
    def test_relation_count(self, family):
        for n in (1, 2, 3):
            ell = 3 if family.startswith("small-") else None
            doc = present(family, n, ell)
            assert len(doc.relations) == expected_relation_count(family, n)

    def test_generators(self):
        assert present("mn", 2).generators == [A, B, C, D]
        assert present("gln", 2).generators == [A, B, C, D, T]
        assert present("small-sln", 2, 3).generators == [A, B, C, D]

    def test_tags(self):
        doc = present("small-sln", 2, 3)
        tags = [r.tag for r in doc.relations]
        assert tags.count("power-nil") == 2
        assert tags.count("power-diag") == 2
        assert tags[-1] == "det"
        quad = expected_relation_count("mn", 2)
        assert all(t.startswith("quad-") for t in tags[:quad])

    def test_gln_t_relations(self):
        doc = present("gln", 2)
        det_t = [r for r in doc.relations if r.tag == "det-t"]
        t_det = [r for r in doc.relations if r.tag == "t-det"]
        assert len(det_t) == len(t_det) == 1
        assert all(w[-1] == T for _, w in det_t[0].terms)
        assert all(w[0] == T for _, w in t_det[0].terms)
        assert det_t[0].equals == [(ONE, ())]

    def test_sln_det_relation(self):
        doc = present("sln", 2)
        det = [r for r in doc.relations if r.tag == "det"][0]
        terms = {w: c for c, w in det.terms}
        assert terms == {(D, A): ONE, (C, B): -q_pow(2, 2)}
        assert det.equals == [(ONE, ())]

    def test_small_det_coefficients_reduced(self):
        # q |-> eps: at ell = 3, n = 3 the six determinant coefficients
        # must appear in canonical cyclotomic form
        cyc = CyclotomicCtx(3, 3)
        doc = present("small-sln", 3, 3)
        det = [r for r in doc.relations if r.tag == "det"][0]
        for c, _ in det.terms:
            assert cyc.reduce(c) == c
        generic = det_relation(3)
        assert {w: cyc.reduce(c) for c, w in generic.terms} == {
            w: c for c, w in det.terms
        }

    def test_power_nil(self):
        doc = present("small-gln", 2, 5)
        nil = [r for r in doc.relations if r.tag == "power-nil"]
        assert [(r.indices, r.terms, r.equals) for r in nil] == [
            ((1, 2), [(ONE, (B,) * 5)], []),
            ((2, 1), [(ONE, (C,) * 5)], []),
        ]

    def test_quadratics_match_engine(self):
        ctx = context(2)
        from smallre.braided import bqmn_relation_terms

        for rel in quadratic_relations(2):
            rel_id = int(rel.tag.split("-")[1])
            lhs, rhs = bqmn_relation_terms(ctx, rel_id, rel.indices)
            assert rel.terms == [(c, tuple(w)) for c, w in lhs]
            assert rel.equals == [(c, tuple(w)) for c, w in rhs]

    def test_bad_arguments(self):
        with pytest.raises(ValueError):
            present("so", 2)
        with pytest.raises(ValueError):
            present("small-gln", 2)  # ell required
        with pytest.raises(ValueError):
            present("small-gln", 2, 4)  # even ell
        with pytest.raises(ValueError):
            present("mn", 2, 3)  # generic takes no ell
        with pytest.raises(ValueError):
            present("mn", 0)


class TestSerialization:
    CASES = [
        ("mn", 2, None),
        ("gln", 2, None),
        ("sln", 3, None),
        ("small-gln", 2, 5),
        ("small-sln", 3, 3),
    ]

    @pytest.mark.parametrize("family,n,ell", CASES)
    def test_dumps_deterministic(self, family, n, ell):
        assert present(family, n, ell).dumps() == present(family, n, ell).dumps()

    @pytest.mark.parametrize("family,n,ell", CASES)
    def test_json_round_trip(self, family, n, ell):
        doc = present(family, n, ell)
        back = PresentationDoc.loads(doc.dumps())
        assert back.dumps() == doc.dumps()
        assert back.generators == doc.generators
        assert back.relations == doc.relations

    def test_text_and_latex_render(self):
        doc = present("small-sln", 2, 3)
        text = doc.to_text()
        assert "u[2,2]^3" in text
        assert "= 1" in text and "= 0" in text
        latex = doc.to_latex()
        assert "u^{2}_{2}^{3}" in latex and "\\star" in latex

    def test_render_side(self):
        terms = [(ONE, (A, A)), (-q_pow(1, 2), (B,)), (ONE - q_pow(-2, 2), ())]
        out = render_side(terms, 2)
        assert out == "u[1,1]^2 - q*u[1,2] - q^-2 + 1"
        assert render_side([], 2) == "0"


class TestSpecialize:
    def test_sigma_example(self):
        # sigma(1,2) = 1 - q^-4 -> 1 - eps^-4 = 1 - eps^2 at ell = 3
        cyc = CyclotomicCtx(3, 1)
        assert specialize(sigma_q((1, 2)), cyc) == cyc.reduce(ONE - q_pow(2))

    def test_power_scalar(self):
        for ell in (3, 5, 7):
            cyc = CyclotomicCtx(ell, 2)
            assert specialize(q_pow(-(ell * (ell - 1)) // 2, 2), cyc) == ONE

    def test_kernel(self):
        cyc = CyclotomicCtx(3, 2)
        assert specialize(q_pow(3, 2) - ONE, cyc).is_zero()

    def test_relation_and_doc(self):
        cyc = CyclotomicCtx(3, 2)
        rel = Relation("det", (), [(q_pow(3, 2) - ONE, (A,)), (ONE, (B,))], [])
        out = specialize(rel, cyc)
        assert out.terms == [(ONE, (B,))]  # the dead term is dropped
        doc = specialize(present("sln", 2), cyc)
        assert doc.ell == 3 and "Phi_3" in doc.coeff_ring
        assert doc.dumps() == specialize(present("sln", 2), cyc).dumps()

    def test_rejects_other_types(self):
        with pytest.raises(TypeError):
            specialize("q", CyclotomicCtx(3, 2))


class TestCounts:
    def test_enumeration_is_k_power(self):
        # every sigma coefficient survives at weight ell, so the count
        # is the number of free interior slots: k^(ell-1)
        for ell in (3, 5):
            for k in (1, 2, 3, 4):
                assert count_terms(max(k, 2), ell, k) == k ** (ell - 1)

    def test_closed_formula_values(self):
        assert count_terms_closed(3, 1) == 1
        assert count_terms_closed(3, 2) == 4
        assert count_terms_closed(5, 2) == 16
        assert count_terms_closed(5, 3) == 31

    def test_agreement_boundary(self):
        # the documented closed form matches enumeration for k <= 2 only
        for ell in (3, 5):
            for k in (1, 2):
                assert count_terms(2, ell, k) == count_terms_closed(ell, k)
        assert count_terms(3, 3, 3) == 9 != count_terms_closed(3, 3)
        assert count_terms(3, 5, 3) == 81 != count_terms_closed(5, 3)

    def test_k_bound(self):
        with pytest.raises(ValueError):
            count_terms(2, 3, 3)
