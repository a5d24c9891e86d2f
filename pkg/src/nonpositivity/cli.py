"""Command line interface: ``analyze``, ``charpoly`` and ``spot-check``.

Exit status is 0 for any completed analysis (including an undetermined
verdict), 2 for bad input and 3 when an internal consistency check fails.
"""
from __future__ import annotations

import argparse
import json
import logging
import random
import sys
from fractions import Fraction
from pathlib import Path
from typing import Optional, Sequence

from . import __version__
from .decide import Verdict, analyze_family, decide_formula, positivity_threshold
from .document import DocumentError, ReportDocument, load_family_document
from .poly import BiPoly, format_fraction
from .signvar import build_formula, check_word, sign_sequence, sign_variations
from .sturm import CapacityError
from .superop import FamilyValidationError, char_poly, cj_matrix

EXIT_OK = 0
EXIT_INPUT = 2
EXIT_INTERNAL = 3

SAMPLE_SEED = 20240101
SAMPLE_NUM_RANGE = 100
SAMPLE_DEN_RANGE = 10

log = logging.getLogger("nonpositivity")


class InputError(Exception):
    pass


def _load(path: str):
    try:
        text = Path(path).read_text(encoding="utf-8")
    except OSError as exc:
        raise InputError(f"cannot read {path}: {exc.strerror or exc}") from None
    try:
        doc = load_family_document(text)
        fam = doc.to_family()
    except (DocumentError, FamilyValidationError) as exc:
        raise InputError(f"{path}: {exc}") from None
    return doc, fam


def _char_poly_section(chi: BiPoly, chi_minus: BiPoly) -> dict:
    return {
        "chi": chi.render(),
        "chi_minus": chi_minus.render(),
        "coefficient_sequence": [
            {"exponent": e, "chi": a.render(), "chi_minus": chi_minus.coefficient(e).render()}
            for e, a in chi.terms
        ],
    }


def _family_section(doc, fam) -> dict:
    return {"name": doc.name, "n": fam.n, "terms": fam.s}


def sample_points(count: int, seed: int = SAMPLE_SEED) -> list[Fraction]:
    """Deterministic rationals p/q with |p| <= 100 and 1 <= q <= 10."""
    rng = random.Random(seed)
    return [
        Fraction(rng.randint(-SAMPLE_NUM_RANGE, SAMPLE_NUM_RANGE), rng.randint(1, SAMPLE_DEN_RANGE))
        for _ in range(count)
    ]


def build_report(doc, fam, formula: Optional[str], exhaustive: bool, prune: bool) -> ReportDocument:
    if formula is None:
        analysis = analyze_family(fam, exhaustive=exhaustive, prune=prune)
        chi, chi_minus = analysis.chi, analysis.chi_minus
        verdict, deciding = analysis.verdict, analysis.deciding_formula
        traces, threshold, considered = analysis.traces, analysis.threshold, analysis.formulas_considered
    else:
        chi = char_poly(cj_matrix(fam))
        chi_minus = chi.negate_x()
        threshold = positivity_threshold(fam.n)
        try:
            check_word(formula)
            phi = build_formula(chi_minus, formula)
        except ValueError as exc:
            raise InputError(str(exc)) from None
        lam = sign_variations(formula)
        if lam < threshold:
            raise InputError(
                f"formula {formula!r} has {lam} sign variations; at least {threshold} are needed for n={fam.n}"
            )
        verdict, trace = decide_formula(chi_minus, threshold, phi)
        deciding = formula if verdict is not Verdict.UNDETERMINED else None
        traces, considered = [trace], 1
    return ReportDocument(
        verdict=verdict.value,
        deciding_formula=deciding,
        threshold=threshold,
        char_poly=_char_poly_section(chi, chi_minus),
        traces=[t.to_dict() for t in traces],
        family=_family_section(doc, fam),
        formulas_considered=considered,
    )


def _print_report(report: ReportDocument, out) -> None:
    fam = report.family
    print(f"family: {fam.get('name') or '(unnamed)'}  n={fam['n']}  terms={fam['terms']}", file=out)
    print(f"chi(x)   = {report.char_poly['chi']}", file=out)
    print(f"chi-(x)  = {report.char_poly['chi_minus']}", file=out)
    print(f"threshold (n-1)^2+1 = {report.threshold}", file=out)
    print(f"formulas examined: {len(report.traces)} of {report.formulas_considered}", file=out)
    for tr in report.traces:
        exists = tr["exists_check"]
        extra = f", |S| = {exists['sign_set_count']}" if exists and exists["sign_set_count"] is not None else ""
        print(
            f"  {tr['sigma']}  variations={tr['variations']}  forall={'yes' if tr['forall_check']['passed'] else 'no'}"
            f"  exists={'yes' if exists and exists['result'] else 'no'} ({exists['case'] if exists else '-'}{extra})"
            f"  -> {Verdict(tr['verdict']).describe()}",
            file=out,
        )
    print(f"verdict: {Verdict(report.verdict).describe()}", file=out)
    if report.deciding_formula:
        print(f"deciding formula: {report.deciding_formula}", file=out)
    else:
        print("no formula determines nonpositivity", file=out)


def cmd_analyze(args, out) -> int:
    doc, fam = _load(args.path)
    report = build_report(doc, fam, args.formula, args.exhaustive, not args.no_prune)
    if args.json:
        out.write(report.to_json())
    else:
        _print_report(report, out)
    return EXIT_OK


def cmd_charpoly(args, out) -> int:
    _, fam = _load(args.path)
    chi = char_poly(cj_matrix(fam))
    chi_minus = chi.negate_x()
    section = _char_poly_section(chi, chi_minus)
    if args.json:
        out.write(json.dumps(section, indent=2) + "\n")
        return EXIT_OK
    print(f"chi(x)  = {section['chi']}", file=out)
    print(f"chi-(x) = {section['chi_minus']}", file=out)
    print("coefficient sequence of chi-:", file=out)
    for row in section["coefficient_sequence"]:
        print(f"  x^{row['exponent']}: {row['chi_minus']}", file=out)
    return EXIT_OK


def spot_check(fam, points: Sequence[Fraction]) -> list[dict]:
    chi_minus = char_poly(cj_matrix(fam)).negate_x()
    threshold = positivity_threshold(fam.n)
    rows = []
    for t0 in points:
        g = chi_minus.evaluate_t(t0)
        word = sign_sequence(g)
        lam = sign_variations(word)
        rows.append(
            {
                "t": format_fraction(t0),
                "coefficients": [format_fraction(c) for c in reversed(g.coeffs) if c != 0],
                "sign_sequence": word,
                "variations": lam,
                "threshold": threshold,
                "not_positive": lam >= threshold,
            }
        )
    return rows


def cmd_spot_check(args, out) -> int:
    _, fam = _load(args.path)
    if args.t is not None:
        try:
            points = [Fraction(s) for s in args.t]
        except (ValueError, ZeroDivisionError):
            raise InputError(f"--t expects rationals like 3 or -7/2, got {args.t}") from None
        seed = None
    else:
        seed = args.seed
        points = sample_points(args.count, seed)
    rows = spot_check(fam, points)
    prior = None
    if args.report:
        try:
            prior = ReportDocument.from_json(Path(args.report).read_text(encoding="utf-8"))
        except (OSError, ValueError, KeyError) as exc:
            raise InputError(f"cannot use report {args.report}: {exc}") from None
    consistent = True
    if prior is not None and prior.verdict == Verdict.GLOBALLY_NONPOSITIVE.value:
        consistent = all(r["not_positive"] for r in rows)
    result = {
        "seed": seed,
        "numerator_range": SAMPLE_NUM_RANGE,
        "denominator_range": SAMPLE_DEN_RANGE,
        "samples": rows,
        "prior_verdict": prior.verdict if prior else None,
        "consistent": consistent,
    }
    if args.json:
        out.write(json.dumps(result, indent=2) + "\n")
    else:
        for r in rows:
            status = "not positive" if r["not_positive"] else "no certificate"
            print(
                f"t={r['t']}: signs {r['sign_sequence']}  variations={r['variations']}"
                f" (need {r['threshold']}) -> {status}",
                file=out,
            )
        if prior is not None:
            print(f"prior verdict {prior.verdict}: {'consistent' if consistent else 'INCONSISTENT'}", file=out)
    if not consistent:
        log.error("a globally nonpositive verdict is contradicted by a sample")
        return EXIT_INTERNAL
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="nonpositivity",
        description="Exact nonpositivity criteria for one-parameter families of hermiticity-preserving maps.",
    )
    parser.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    parser.add_argument("-v", "--verbose", action="store_true", help="progress on stderr")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("analyze", help="decide global / local / pointwise nonpositivity")
    p.add_argument("path")
    p.add_argument("--formula", help="run a single sign word, e.g. '+-+-'")
    p.add_argument("--exhaustive", action="store_true", help="run every formula and report the strongest verdict")
    p.add_argument("--no-prune", action="store_true", help="keep formulas contradicting obviously signed coefficients")
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=cmd_analyze)

    p = sub.add_parser("charpoly", help="print the bivariate characteristic polynomial")
    p.add_argument("path")
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=cmd_charpoly)

    p = sub.add_parser("spot-check", help="apply the Descartes criterion at sample parameters")
    p.add_argument("path")
    p.add_argument("--t", action="append", help="sample parameter (repeatable)")
    p.add_argument("--count", type=int, default=10)
    p.add_argument("--seed", type=int, default=SAMPLE_SEED)
    p.add_argument("--report", help="prior 'analyze --json' output to cross-check")
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=cmd_spot_check)
    return parser


def main(argv: Optional[Sequence[str]] = None, out=None) -> int:
    out = out or sys.stdout
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_INPUT if exc.code else EXIT_OK
    logging.basicConfig(level=logging.INFO if args.verbose else logging.WARNING, stream=sys.stderr,
                        format="%(levelname)s %(name)s: %(message)s")
    try:
        return args.func(args, out)
    except InputError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT
    except CapacityError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT
    except (AssertionError, ArithmeticError) as exc:
        print(f"internal error: {type(exc).__name__}: {exc}", file=sys.stderr)
        return EXIT_INTERNAL


if __name__ == "__main__":
    sys.exit(main())
