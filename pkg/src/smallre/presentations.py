"""Finite presentations of the braided matrix algebras and their small
quotients at odd roots of unity.

A presentation here is SYNTAX: relations are formal linear combinations
of words in the generators u^i_j (and, for the generic GL family, the
determinant inverse t), never normalized through the braided engine.
Verification evaluates the same data through the engine separately; the
two representations are deliberately kept apart so that emitted files
show relations exactly as documented, not a normalized shadow of them.

Families:

    mn         generic B_q(M_n): the four quadratic relation families.
    gln        mn plus a generator t with det * t = t * det = 1.
    sln        mn plus det = 1.
    small-gln  at an odd root of unity of order ell: quadratic families
               with coefficients reduced mod Phi_ell(v^n), plus
               (u^k_l)^ell = 0 for k != l and, for each k, the diagonal
               power relation  sum_{lam |= ell} sigma_eps(lam)
               sum_{beta in V^k(lam)} u^{beta_1}_{beta_2} ... = 1.
    small-sln  small-gln plus det = 1 (no localization is needed for
               the small GL family, so neither emits t).

Serialization is deterministic: generator and relation order is fixed,
coefficients are canonical (cyclotomic-reduced for small families), and
the JSON encoder sorts keys.
"""

import json
from itertools import permutations

from .laurent import LaurentInt, ONE, ZERO, q_pow, sigma_q, CyclotomicCtx
from .compositions import compositions, v_set, v_count
from .braided import admissible_indices, bqmn_relation_terms, det_terms
from .matrix_algebra import context

FAMILIES = ("mn", "gln", "sln", "small-gln", "small-sln")

T = "t"  # the formal determinant-inverse letter


class Relation:
    """One relation lhs = rhs, both sides lists of (coeff, word).

    Words are tuples of letters; a letter is either an (i, j) pair for
    u^i_j or the string "t".  An empty rhs means "= 0" and a rhs of
    [(1, ())] means "= 1".
    """

    __slots__ = ("tag", "indices", "terms", "equals")

    def __init__(self, tag, indices, terms, equals):
        self.tag = tag
        self.indices = tuple(indices)
        self.terms = [(c, tuple(w)) for c, w in terms]
        self.equals = [(c, tuple(w)) for c, w in equals]

    def to_json(self, n):
        return {
            "tag": self.tag,
            "indices": list(self.indices),
            "terms": [_term_json(c, w, n) for c, w in self.terms],
            "equals": [_term_json(c, w, n) for c, w in self.equals],
        }

    @staticmethod
    def from_json(obj):
        return Relation(
            obj["tag"],
            obj["indices"],
            [_term_from_json(t) for t in obj["terms"]],
            [_term_from_json(t) for t in obj["equals"]],
        )

    def __eq__(self, other):
        if not isinstance(other, Relation):
            return NotImplemented
        return (
            self.tag == other.tag
            and self.indices == other.indices
            and self.terms == other.terms
            and self.equals == other.equals
        )


def _term_json(coeff, word, n):
    return {
        "coeff": coeff.to_json(n),
        "word": [[letter] if letter == T else list(letter) for letter in word],
    }


def _term_from_json(obj):
    word = tuple(
        T if letter == [T] else (int(letter[0]), int(letter[1]))
        for letter in obj["word"]
    )
    return LaurentInt.from_json(obj["coeff"]), word


class PresentationDoc:
    """A full presentation: algebra family, parameters, generators,
    ordered relation list, and the coefficient-ring descriptor."""

    __slots__ = ("algebra", "n", "ell", "generators", "relations", "coeff_ring")

    def __init__(self, algebra, n, ell, generators, relations, coeff_ring):
        self.algebra = algebra
        self.n = n
        self.ell = ell
        self.generators = list(generators)
        self.relations = list(relations)
        self.coeff_ring = coeff_ring

    def to_json(self):
        return {
            "algebra": self.algebra,
            "n": self.n,
            "ell": self.ell,
            "coeff_ring": self.coeff_ring,
            "generators": [
                ["t"] if g == T else ["u", g[0], g[1]] for g in self.generators
            ],
            "relations": [r.to_json(self.n) for r in self.relations],
        }

    def dumps(self):
        """Deterministic JSON serialization (byte-identical across runs)."""
        return json.dumps(self.to_json(), sort_keys=True, separators=(",", ":"))

    @staticmethod
    def from_json(obj):
        gens = [T if g == ["t"] else (int(g[1]), int(g[2])) for g in obj["generators"]]
        rels = [Relation.from_json(r) for r in obj["relations"]]
        return PresentationDoc(
            obj["algebra"], obj["n"], obj["ell"], gens, rels, obj["coeff_ring"]
        )

    @staticmethod
    def loads(text):
        return PresentationDoc.from_json(json.loads(text))

    def to_text(self):
        qvar = "q" if self.ell is None else "e"
        lines = [
            f"algebra {self.algebra}  n={self.n}"
            + (f"  ell={self.ell}" if self.ell is not None else ""),
            f"coefficients: {self.coeff_ring}",
            "generators: "
            + " ".join("t" if g == T else f"u[{g[0]},{g[1]}]" for g in self.generators),
            f"relations ({len(self.relations)}):",
        ]
        for rel in self.relations:
            lhs = render_side(rel.terms, self.n, qvar=qvar)
            rhs = render_side(rel.equals, self.n, qvar=qvar)
            lines.append(f"  [{rel.tag}{list(rel.indices)}] {lhs} = {rhs}")
        return "\n".join(lines) + "\n"

    def to_latex(self):
        qvar = "q" if self.ell is None else "\\epsilon"
        lines = [
            "% " + self.dumps()[:0],  # keep header comment-free and stable
            "\\begin{align*}",
        ]
        body = []
        for rel in self.relations:
            lhs = render_side(rel.terms, self.n, qvar=qvar, latex=True)
            rhs = render_side(rel.equals, self.n, qvar=qvar, latex=True)
            body.append(f"{lhs} &= {rhs}")
        lines.append(" \\\\\n".join(body))
        lines.append("\\end{align*}")
        lines[0] = f"% {self.algebra} n={self.n}" + (
            f" ell={self.ell}" if self.ell is not None else ""
        )
        return "\n".join(lines) + "\n"


def _run_lengths(word):
    runs = []
    for letter in word:
        if runs and runs[-1][0] == letter:
            runs[-1][1] += 1
        else:
            runs.append([letter, 1])
    return runs


def render_side(terms, n, qvar="q", latex=False):
    """Render one side of a relation; empty side renders as 0."""
    if not terms:
        return "0"
    star = " \\star " if latex else "*"
    chunks = []
    for coeff, word in terms:
        factors = []
        for letter, mult in _run_lengths(word):
            if letter == T:
                base = "t"
            elif latex:
                base = f"u^{{{letter[0]}}}_{{{letter[1]}}}"
            else:
                base = f"u[{letter[0]},{letter[1]}]"
            if mult > 1:
                base += f"^{{{mult}}}" if latex else f"^{mult}"
            factors.append(base)
        body = star.join(factors) if factors else "1"
        cs = coeff.render(n, qvar=qvar)
        sep = "\\," if latex else "*"
        if cs == "1" and factors:
            piece = body
        elif cs == "-1" and factors:
            piece = f"-{body}"
        else:
            if " " in cs and factors:
                cs = f"({cs})"
            piece = cs if not factors else f"{cs}{sep}{body}"
        chunks.append(piece)
    out = chunks[0]
    for piece in chunks[1:]:
        out += f" - {piece[1:]}" if piece.startswith("-") else f" + {piece}"
    return out


# -- relation builders -------------------------------------------------


def quadratic_relations(n, cyc=None):
    """The four quadratic families over all admissible index tuples."""
    ctx = context(n)
    rels = []
    for rel_id in (1, 2, 3, 4):
        for idx in admissible_indices(n, rel_id):
            lhs, rhs = bqmn_relation_terms(ctx, rel_id, idx)
            rels.append(
                Relation(
                    f"quad-{rel_id}",
                    idx,
                    _maybe_reduce(lhs, cyc),
                    _maybe_reduce(rhs, cyc),
                )
            )
    return rels


def _maybe_reduce(terms, cyc):
    if cyc is None:
        return terms
    out = []
    for c, w in terms:
        r = cyc.reduce(c)
        if not r.is_zero():
            out.append((r, w))
    return out


def rel2_terms(n, ell, k, cyc=None):
    """Terms of the diagonal power relation for column k:

        sum over lam |= ell of sigma(lam) * the V^k(lam) words,

    compositions in binary-mask order, index tuples in odometer order.
    """
    terms = []
    for lam in compositions(ell):
        coeff = sigma_q(lam, n)
        if cyc is not None:
            coeff = cyc.reduce(coeff)
            if coeff.is_zero():
                continue
        for beta in v_set(k, lam):
            terms.append((coeff, tuple(zip(beta, beta[1:]))))
    return terms


def mon_word(part):
    """n = 2 building block: d for a part of size 1, c*a^(l-2)*b above."""
    if part == 1:
        return ((2, 2),)
    return ((2, 1),) + ((1, 1),) * (part - 2) + ((1, 2),)


def mon_terms(ell, cyc=None):
    """The n = 2, k = 2 diagonal relation in its block form,

        sum over lam |= ell of sigma(lam) mon(lam_-1)*...*mon(lam_1),

    which lists the same monomials as rel2_terms(2, ell, 2) but pairs
    coefficients with the reversed-composition word.  The two sides are
    equal only as algebra elements (the d-past-c*b commutations are
    quadratic consequences), so this form exists for display comparison
    and is cross-checked against the V-form by evaluated equality.
    """
    terms = []
    for lam in compositions(ell):
        coeff = sigma_q(lam, 2)
        if cyc is not None:
            coeff = cyc.reduce(coeff)
            if coeff.is_zero():
                continue
        word = ()
        for part in reversed(lam):
            word += mon_word(part)
        terms.append((coeff, word))
    return terms


def det_relation(n, cyc=None, equals_one=True):
    terms = _maybe_reduce(det_terms(n), cyc)
    equals = [(ONE, ())] if equals_one else []
    return Relation("det", (), terms, equals)


def present(family, n, ell=None):
    """Assemble the full presentation document for one family."""
    family = family.lower()
    if family not in FAMILIES:
        raise ValueError(f"unknown family {family!r}; expected one of {FAMILIES}")
    if n < 1:
        raise ValueError("n must be >= 1")
    small = family.startswith("small-")
    if small:
        if ell is None or ell < 3 or ell % 2 == 0:
            raise ValueError("small families require odd ell >= 3")
        cyc = CyclotomicCtx(ell, n)
        ring = f"Z[v]/Phi_{ell}(v^{n}) (q = v^{n} maps to a primitive root of unity of order {ell})"
    else:
        if ell is not None:
            raise ValueError("generic families take no ell")
        cyc = None
        ring = f"Z[v,v^-1] (q = v^{n})"

    gens = [(i, j) for i in range(1, n + 1) for j in range(1, n + 1)]
    rels = quadratic_relations(n, cyc)

    if family == "gln":
        gens.append(T)
        dterms = det_terms(n)
        rels.append(
            Relation("det-t", (), [(c, w + (T,)) for c, w in dterms], [(ONE, ())])
        )
        rels.append(
            Relation("t-det", (), [(c, (T,) + w) for c, w in dterms], [(ONE, ())])
        )
    elif family == "sln":
        rels.append(det_relation(n))
    elif small:
        for k in range(1, n + 1):
            for l in range(1, n + 1):
                if k != l:
                    rels.append(
                        Relation("power-nil", (k, l), [(ONE, ((k, l),) * ell)], [])
                    )
        for k in range(1, n + 1):
            rels.append(
                Relation("power-diag", (k,), rel2_terms(n, ell, k, cyc), [(ONE, ())])
            )
        if family == "small-sln":
            rels.append(det_relation(n, cyc))

    return PresentationDoc(family, n, ell, gens, rels, ring)


def expected_relation_count(family, n):
    """Closed-form relation counts per family (quadratic part:
    rel 1 and rel 2 contribute n^2(n-1)/2 each, rels 3 and 4 contribute
    (n(n-1)/2)^2 each)."""
    quad = n * n * (n - 1) + 2 * (n * (n - 1) // 2) ** 2
    family = family.lower()
    if family == "mn":
        return quad
    if family == "gln":
        return quad + 2
    if family == "sln":
        return quad + 1
    if family == "small-gln":
        return quad + n * (n - 1) + n
    if family == "small-sln":
        return quad + n * (n - 1) + n + 1
    raise ValueError(f"unknown family {family!r}")


# -- term counting and specialization ----------------------------------


def count_terms(n, ell, k):
    """Number of monomials with nonzero sigma coefficient in the
    diagonal power relation for column k, by direct enumeration."""
    if k > n:
        raise ValueError("k must be <= n")
    cyc = CyclotomicCtx(ell, n)
    total = 0
    for lam in compositions(ell):
        if not cyc.is_zero(sigma_q(lam, n)):
            total += v_count(k, lam)
    return total


def count_terms_closed(ell, k):
    """The documented closed-form count 1 + (2^(ell-1) - 1)(k - 1).

    Enumeration agrees for k <= 2 but grows as k^(ell-1) in general
    (every sigma coefficient at weight ell is a product of factors
    1 - q^(-2m) with 0 < m < ell, none of which vanish at a primitive
    ell-th root of unity, and distinct index tuples are distinct
    monomials); the comparison is reported, not assumed.
    """
    return 1 + ((1 << (ell - 1)) - 1) * (k - 1)


def specialize(obj, cyc):
    """Canonical cyclotomic form of a coefficient, or of every
    coefficient in a relation or presentation document."""
    if isinstance(obj, LaurentInt):
        return cyc.reduce(obj)
    if isinstance(obj, Relation):
        return Relation(
            obj.tag,
            obj.indices,
            _maybe_reduce(obj.terms, cyc),
            _maybe_reduce(obj.equals, cyc),
        )
    if isinstance(obj, PresentationDoc):
        return PresentationDoc(
            obj.algebra,
            obj.n,
            cyc.ell,
            obj.generators,
            [specialize(r, cyc) for r in obj.relations],
            f"Z[v]/Phi_{cyc.ell}(v^{cyc.n})",
        )
    raise TypeError(f"cannot specialize {type(obj).__name__}")
