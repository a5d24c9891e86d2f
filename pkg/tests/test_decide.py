import json
import random
from fractions import Fraction

import pytest

from nonpositivity.decide import (
    Verdict,
    analyze_family,
    check_exists,
    check_forall,
    decide_formula,
    formula_order,
    positivity_threshold,
    run_formulas,
)
from nonpositivity.poly import BiPoly, GaussRatPoly, RatPoly, ZERO
from nonpositivity.signvar import build_formula, enumerate_formulas, holds_at, sign_sequence, sign_variations
from nonpositivity.sturm import canonical_sturm
from nonpositivity.superop import validate_family

from conftest import A1, A2, A3, A4, P, T, random_small_poly

CHI_MINUS = BiPoly({4: A4, 3: A3, 2: A2, 1: A1})


def test_threshold():
    assert [positivity_threshold(n) for n in (1, 2, 3, 4)] == [1, 2, 5, 10]


def test_forall_reference():
    ok, items = check_forall([P(1), P(4, 0, 5), A2, -A1])
    assert ok
    assert [it.distinct_real_roots for it in items] == [0, 0, 0, 0]


def test_forall_examples():
    assert check_forall([P(1, 0, 1)])[0]
    assert not check_forall([T])[0]
    assert not check_forall([P(-1, 0, -1)])[0]  # root free but negative


def test_exists_limit_cases():
    ok, ev = check_exists([T])
    assert ok and ev.case == "pos-inf-limits"
    ok, ev = check_exists([-T])
    assert ok and ev.case == "neg-inf-limits"


def test_exists_critical_points():
    ok, ev = check_exists([P(-1, 0, 1)])
    assert ok and ev.case == "critical-points"
    assert ev.sign_set_count == 1
    ok, ev = check_exists([P(-1, 0, -1)])
    assert not ok and ev.case == "critical-points"
    # t > 1 and t < -1 never both hold
    ok, ev = check_exists([T - 1, -T - 1])
    assert not ok and ev.sign_set_count == 0


def test_exists_constants():
    ok, ev = check_exists([RatPoly.constant(3), T])
    assert ok and ev.dropped_constants == [RatPoly.constant(3)]
    ok, ev = check_exists([RatPoly.constant(-1), T])
    assert not ok and ev.case == "contradictory-constant"
    ok, ev = check_exists([RatPoly.constant(2)])
    assert ok and ev.case == "all-positive-constants"


def test_exists_agrees_with_sampling():
    # on random small systems, any satisfying sample point forces a positive answer
    rng = random.Random(47)
    for _ in range(150):
        polys = [random_small_poly(rng, 2) for _ in range(rng.randint(1, 3))]
        ok, _ = check_exists(polys)
        sampled = any(all(a(Fraction(k, 8)) > 0 for a in polys) for k in range(-160, 161))
        if sampled:
            assert ok


def test_decide_reference_formula():
    verdict, trace = decide_formula(CHI_MINUS, 2, build_formula(CHI_MINUS, "+-+-"))
    assert verdict is Verdict.GLOBALLY_NONPOSITIVE
    assert trace.step == "universal"
    assert trace.normal_form == [A4, -A3, A2, -A1]


def test_decide_contradictory_constant():
    # the leading letter asks a_4 = 1 < 0
    f = CHI_MINUS
    verdict, trace = decide_formula(f, 2, build_formula(f, "--+-"))
    assert verdict is Verdict.UNDETERMINED
    assert trace.exists.case == "contradictory-constant"


def test_decide_local_via_limits():
    f = BiPoly({1: P(1, 0, 1), 0: -T})
    verdict, trace = decide_formula(f, 1, build_formula(f, "+-"))
    assert verdict is Verdict.LOCALLY_AND_POINTWISE_NONPOSITIVE
    assert trace.step == "limits"


def test_decide_local_via_critical_points():
    f = BiPoly({1: RatPoly.constant(1), 0: P(1, 0, -1)})
    verdict, trace = decide_formula(f, 1, build_formula(f, "+-"))
    assert verdict is Verdict.LOCALLY_AND_POINTWISE_NONPOSITIVE
    assert trace.step == "critical-points"
    assert holds_at(build_formula(f, "+-"), 0)


def test_decide_rejects_low_variation_and_foreign_domain():
    with pytest.raises(ValueError):
        decide_formula(CHI_MINUS, 2, build_formula(CHI_MINUS, "++++"))
    other = BiPoly({1: T, 0: RatPoly.constant(1)})
    with pytest.raises(ValueError):
        decide_formula(CHI_MINUS, 1, build_formula(other, "+-"))


def test_formula_order():
    words = [build_formula(CHI_MINUS, w) for w in ("+-++", "+--+", "+-+-", "-+-+")]
    assert [phi.sigma for phi in formula_order(words)] == ["+-+-", "-+-+", "+-++", "+--+"]


def test_analyze_reference(ref_family):
    analysis = analyze_family(ref_family)
    assert analysis.verdict is Verdict.GLOBALLY_NONPOSITIVE
    assert analysis.deciding_formula == "+-+-"
    assert len(analysis.traces) == 1
    assert analysis.formulas_considered == 3
    verdict, traces = analysis
    assert verdict is analysis.verdict and traces is analysis.traces


def test_analyze_reference_exhaustive(ref_family):
    analysis = analyze_family(ref_family, exhaustive=True)
    assert analysis.verdict is Verdict.GLOBALLY_NONPOSITIVE
    assert [t.sigma for t in analysis.traces] == ["+-+-", "+-++", "+--+"]
    by_word = {t.sigma: t.verdict for t in analysis.traces}
    assert by_word["+--+"] is Verdict.UNDETERMINED
    assert by_word["+-++"] is Verdict.UNDETERMINED


def test_analyze_identity_has_no_formula():
    fam = validate_family(1, [(1, [[1]])])
    analysis = analyze_family(fam)
    assert analysis.verdict is Verdict.UNDETERMINED
    assert analysis.traces == [] and analysis.formulas_considered == 0


def test_analyze_scalar_family():
    # Phi_t(X) = t^2 X on 1x1 matrices is positive for every t
    fam = validate_family(1, [(1, [[T]])])
    assert analyze_family(fam).chi_minus == BiPoly({1: RatPoly.constant(1), 0: P(1, 0, 0)})
    assert analyze_family(fam, exhaustive=True).verdict is Verdict.UNDETERMINED


def test_negative_scalar_family():
    # Phi_t(X) = -(t^2 + 1) X is negative for every t
    fam = validate_family(1, [(-1, [[P(1, 0, 1)]])])
    analysis = analyze_family(fam)
    assert analysis.verdict is Verdict.GLOBALLY_NONPOSITIVE


def test_run_formulas_stops_at_first_decisive():
    formulas = formula_order(enumerate_formulas(CHI_MINUS, 2))
    verdict, deciding, traces = run_formulas(CHI_MINUS, 2, formulas)
    assert (verdict, deciding, len(traces)) == (Verdict.GLOBALLY_NONPOSITIVE, "+-+-", 1)


def _random_cp_family(rng):
    terms = []
    for _ in range(rng.randint(1, 2)):
        rows = [
            [GaussRatPoly(random_small_poly(rng, 1, 2) if rng.random() < 0.7 else ZERO) for _ in range(2)]
            for _ in range(2)
        ]
        terms.append((rng.choice([1, 2, P(1, 0, 1)]), rows))
    return validate_family(2, terms)


def test_completely_positive_families_never_flagged():
    rng = random.Random(53)
    for _ in range(15):
        fam = _random_cp_family(rng)
        assert analyze_family(fam, exhaustive=True).verdict is Verdict.UNDETERMINED


def test_global_verdict_agrees_with_samples(ref_family):
    analysis = analyze_family(ref_family)
    phi = build_formula(analysis.chi_minus, analysis.deciding_formula)
    rng = random.Random(59)
    for _ in range(100):
        t0 = Fraction(rng.randint(-100, 100), rng.randint(1, 10))
        assert holds_at(phi, t0)
        g = analysis.chi_minus.evaluate_t(t0)
        assert sign_variations(sign_sequence(g)) >= analysis.threshold


def test_trace_chains_replay(ref_family):
    analysis = analyze_family(ref_family, exhaustive=True)
    for trace in analysis.traces:
        for chain in trace.chains:
            assert canonical_sturm(chain.polys[0], chain.polys[1]) == chain


def test_trace_is_deterministic(ref_family):
    one = json.dumps([t.to_dict() for t in analyze_family(ref_family, exhaustive=True).traces], sort_keys=True)
    two = json.dumps([t.to_dict() for t in analyze_family(ref_family, exhaustive=True).traces], sort_keys=True)
    assert one == two
