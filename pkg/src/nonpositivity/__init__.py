"""Exact nonpositivity criteria for one-parameter families of hermiticity-preserving maps."""

__version__ = "0.1.0"

from .poly import BiPoly, GaussRational, GaussRatPoly, RatPoly  # noqa: E402
from .sturm import (  # noqa: E402
    SturmChain,
    canonical_sturm,
    count_distinct_real_roots,
    count_sign_set,
    nu,
    tarski_query,
)
from .signvar import (  # noqa: E402
    SignVariationFormula,
    build_formula,
    enumerate_formulas,
    holds_at,
    normal_form,
    sign_sequence,
    sign_variations,
)
from .superop import Family, ParamMatrix, char_poly, cj_matrix, validate_family  # noqa: E402
from .decide import Verdict, analyze_family, decide_formula, check_exists, check_forall  # noqa: E402
