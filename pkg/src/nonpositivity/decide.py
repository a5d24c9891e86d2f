"""Decision procedures for nonpositivity of one-parameter families.

``decide_formula`` examines a single sign variation formula over chi^-;
``analyze_family`` runs it over every formula with enough sign variations.
Both are sufficient criteria only: ``UNDETERMINED`` says nothing about
positivity.
"""
from __future__ import annotations

import enum
import logging
from dataclasses import dataclass, field
from typing import Optional, Sequence

from .poly import BiPoly, RatPoly, format_fraction, poly_product
from .signvar import (
    SignVariationFormula,
    enumerate_formulas,
    sign_variations,
)
from .sturm import SturmChain, count_distinct_real_roots, count_sign_set
from .superop import Family, cj_matrix, char_poly

log = logging.getLogger(__name__)


class Verdict(str, enum.Enum):
    GLOBALLY_NONPOSITIVE = "GloballyNonpositive"
    LOCALLY_AND_POINTWISE_NONPOSITIVE = "LocallyAndPointwiseNonpositive"
    UNDETERMINED = "Undetermined"

    @property
    def strength(self) -> int:
        return {"GloballyNonpositive": 2, "LocallyAndPointwiseNonpositive": 1}.get(self.value, 0)

    def describe(self) -> str:
        return {
            "GloballyNonpositive": "globally nonpositive",
            "LocallyAndPointwiseNonpositive": "locally and pointwise nonpositive",
            "Undetermined": "undetermined",
        }[self.value]


class CaseSplitError(AssertionError):
    """The limit analysis found a configuration the case split does not cover."""


def positivity_threshold(n: int) -> int:
    """Minimal number of negative CJ eigenvalues forcing nonpositivity: (n-1)^2 + 1."""
    return n * n - 2 * n + 2


@dataclass
class ForallItem:
    poly: RatPoly
    distinct_real_roots: int
    value_at_zero: object
    passed: bool

    def to_dict(self) -> dict:
        return {
            "poly": self.poly.render(),
            "distinct_real_roots": self.distinct_real_roots,
            "value_at_zero": format_fraction(self.value_at_zero),
            "passed": self.passed,
        }


@dataclass
class ExistsEvidence:
    result: bool
    case: str
    dropped_constants: list[RatPoly] = field(default_factory=list)
    contradictory_constant: Optional[RatPoly] = None
    signs_pos_inf: str = ""
    signs_neg_inf: str = ""
    derivative: Optional[RatPoly] = None
    sign_set_count: Optional[int] = None

    def to_dict(self) -> dict:
        return {
            "result": self.result,
            "case": self.case,
            "dropped_constants": [c.render() for c in self.dropped_constants],
            "contradictory_constant": (
                self.contradictory_constant.render() if self.contradictory_constant is not None else None
            ),
            "signs_pos_inf": self.signs_pos_inf,
            "signs_neg_inf": self.signs_neg_inf,
            "derivative": self.derivative.render() if self.derivative is not None else None,
            "sign_set_count": self.sign_set_count,
        }


def check_forall(
    normal_form: Sequence[RatPoly], chains: Optional[list] = None
) -> tuple[bool, list[ForallItem]]:
    """True iff every polynomial is root-free and positive at 0, i.e. positive on all of R."""
    if any(a.is_zero() for a in normal_form):
        raise ValueError("zero polynomial in normal form")
    items = []
    for a in normal_form:
        roots = count_distinct_real_roots(a, chains)
        at0 = a(0)
        items.append(ForallItem(a, roots, at0, roots == 0 and at0 > 0))
    return all(it.passed for it in items), items


def _limit_word(polys: Sequence[RatPoly], direction: int) -> str:
    if direction > 0:
        return "".join("+" if a.sign_at_pos_inf() > 0 else "-" for a in polys)
    return "".join("+" if a.sign_at_neg_inf() > 0 else "-" for a in polys)


def check_exists(
    normal_form: Sequence[RatPoly], chains: Optional[list] = None
) -> tuple[bool, ExistsEvidence]:
    """Decide whether some real t makes every polynomial positive.

    Positive constants are dropped first; a non-positive constant is an
    outright contradiction.  On the rest: all limits at +inf ("pos-inf-limits") or
    at -inf ("neg-inf-limits") positive settles it, otherwise the answer is whether
    some critical point of the product satisfies all constraints ("critical-points").
    """
    if any(a.is_zero() for a in normal_form):
        raise ValueError("zero polynomial in normal form")
    dropped = []
    rest = []
    for a in normal_form:
        if a.is_constant():
            if a.lc <= 0:
                return False, ExistsEvidence(False, "contradictory-constant", dropped, a)
            dropped.append(a)
        else:
            rest.append(a)
    if not rest:
        return True, ExistsEvidence(True, "all-positive-constants", dropped)
    pos, neg = _limit_word(rest, 1), _limit_word(rest, -1)
    if "-" not in pos:
        return True, ExistsEvidence(True, "pos-inf-limits", dropped, None, pos, neg)
    if "-" not in neg:
        return True, ExistsEvidence(True, "neg-inf-limits", dropped, None, pos, neg)
    if "-" not in pos or "-" not in neg:
        raise CaseSplitError(f"limit words {pos!r}/{neg!r} escape the case split")
    deriv = poly_product(rest).derivative()
    # a non-constant product has a non-zero derivative
    count = count_sign_set(deriv, rest, chains)
    return count > 0, ExistsEvidence(count > 0, "critical-points", dropped, None, pos, neg, deriv, count)


@dataclass
class Trace:
    sigma: str
    variations: int
    normal_form: list[RatPoly]
    verdict: Verdict
    step: str
    forall_passed: bool
    forall_items: list[ForallItem]
    exists: Optional[ExistsEvidence]
    chains: list[SturmChain]

    def to_dict(self) -> dict:
        return {
            "sigma": self.sigma,
            "variations": self.variations,
            "normal_form": [b.render() for b in self.normal_form],
            "verdict": self.verdict.value,
            "step": self.step,
            "forall_check": {
                "passed": self.forall_passed,
                "items": [it.to_dict() for it in self.forall_items],
            },
            "exists_check": self.exists.to_dict() if self.exists is not None else None,
            "chains": [c.to_dict() for c in self.chains],
        }


def decide_formula(
    f_minus: BiPoly, threshold: int, phi: SignVariationFormula
) -> tuple[Verdict, Trace]:
    """Decide what the formula ``phi`` proves about the family.

    Normal form, then the universal check (global verdict), then the
    existential check (local-and-pointwise verdict), else undetermined.

    ``threshold`` must be the family's (n-1)^2 + 1; supplying anything
    else voids the soundness guarantee.
    """
    if phi.domain != f_minus.terms:
        raise ValueError("formula is not built over the given polynomial")
    lam = sign_variations(phi.sigma)
    if lam < threshold:
        raise ValueError(f"formula {phi.sigma!r} has {lam} sign variations, below the threshold {threshold}")
    chains: list[SturmChain] = []
    nf = phi.normal_form()
    forall_ok, items = check_forall(nf, chains)
    exists_ok, evidence = check_exists(nf, chains)
    if forall_ok:
        if not exists_ok:
            raise AssertionError("universal check passed but existential check failed")
        verdict, step = Verdict.GLOBALLY_NONPOSITIVE, "universal"
    elif exists_ok:
        verdict = Verdict.LOCALLY_AND_POINTWISE_NONPOSITIVE
        step = "critical-points" if evidence.case == "critical-points" else "limits"
    else:
        verdict, step = Verdict.UNDETERMINED, "none"
    trace = Trace(phi.sigma, lam, nf, verdict, step, forall_ok, items, evidence, chains)
    return verdict, trace


def formula_order(formulas: Sequence[SignVariationFormula]) -> list[SignVariationFormula]:
    """More sign variations first, ties broken lexicographically on the word."""
    return sorted(formulas, key=lambda phi: (-phi.variations, phi.sigma))


@dataclass
class Analysis:
    verdict: Verdict
    deciding_formula: Optional[str]
    threshold: int
    chi: BiPoly
    chi_minus: BiPoly
    traces: list[Trace]
    formulas_considered: int

    def __iter__(self):
        # allows ``verdict, traces = analyze_family(fam)``
        return iter((self.verdict, self.traces))


def run_formulas(
    f_minus: BiPoly,
    threshold: int,
    formulas: Sequence[SignVariationFormula],
    exhaustive: bool = False,
) -> tuple[Verdict, Optional[str], list[Trace]]:
    """Low-level driver: apply the single-formula procedure in the given order.

    Expert entry point -- the threshold is taken as given.
    """
    best, deciding = Verdict.UNDETERMINED, None
    traces = []
    for idx, phi in enumerate(formulas, start=1):
        log.info("formula %d/%d: %s", idx, len(formulas), phi.sigma)
        verdict, trace = decide_formula(f_minus, threshold, phi)
        traces.append(trace)
        if verdict.strength > best.strength:
            best, deciding = verdict, phi.sigma
        if best is not Verdict.UNDETERMINED and not exhaustive:
            break
    return best, deciding, traces


def analyze_family(
    fam: Family, exhaustive: bool = False, prune: bool = True, prune_rule: str = "obvious"
) -> Analysis:
    """Analyse a validated family over all its qualifying formulas.

    Stops at the first decisive formula unless ``exhaustive`` is set, in
    which case every formula is run and the strongest verdict reported.
    """
    chi = char_poly(cj_matrix(fam))
    chi_minus = chi.negate_x()
    threshold = positivity_threshold(fam.n)
    formulas = formula_order(enumerate_formulas(chi_minus, threshold, prune, prune_rule))
    verdict, deciding, traces = run_formulas(chi_minus, threshold, formulas, exhaustive)
    return Analysis(verdict, deciding, threshold, chi, chi_minus, traces, len(formulas))
