"""smallre: exact computation in quantum matrix algebras, their
covariantized (reflection-equation) twins, and the small quotients at
odd roots of unity.

Everything is computed over Z[v, v^-1] with q = v^n, so no floating
point ever enters; specialization at a root of unity is reduction
modulo the cyclotomic polynomial Phi_ell(v^n).
"""

from .laurent import LaurentInt, CyclotomicCtx, sigma_q, q_pow, v_pow
from .compositions import compositions, v_set, v_count
from .matrix_algebra import Element, context, qdet, normal_form, parse_word
from .rform import RForm, rform
from .braided import (
    BraidedElement,
    braided_det,
    braided_power,
    check_bqmn_relation,
    u_gen,
)
from .twisting import twist, twist_word
from .presentations import PresentationDoc, Relation, present, count_terms, specialize
from .verify import SuiteReport, run_suite, run_all

__version__ = "0.1.0"

__all__ = [
    "LaurentInt",
    "CyclotomicCtx",
    "sigma_q",
    "q_pow",
    "v_pow",
    "compositions",
    "v_set",
    "v_count",
    "Element",
    "context",
    "qdet",
    "normal_form",
    "parse_word",
    "RForm",
    "rform",
    "BraidedElement",
    "braided_det",
    "braided_power",
    "check_bqmn_relation",
    "u_gen",
    "twist",
    "twist_word",
    "PresentationDoc",
    "Relation",
    "present",
    "count_terms",
    "specialize",
    "SuiteReport",
    "run_suite",
    "run_all",
    "__version__",
]
