"""JSON family documents and analysis reports.

Family document layout::

    {
      "name": "reference",
      "description": "...",
      "n": 2,
      "terms": [
        {"alpha": [-1], "matrix": [[{"re": [0]}, {"re": [0, -1]}], ...]},
        ...
      ]
    }

Polynomials are coefficient arrays, ascending by exponent; each coefficient
is an integer or a ``"p/q"`` string.  A matrix entry is ``{"re": ..., "im":
...}`` (``im`` optional); a bare coefficient array is accepted as a real
entry.
"""
from __future__ import annotations

import json
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Any, Optional

from . import __version__
from .poly import GaussRatPoly, RatPoly
from .superop import Family, FamilyValidationError, ParamMatrix, validate_family


class DocumentError(ValueError):
    """Malformed input document; ``location`` points at the offending part."""

    def __init__(self, message: str, location: str = ""):
        self.location = location
        super().__init__(f"{location}: {message}" if location else message)


def _parse_coeff(value: Any, where: str) -> Fraction:
    if isinstance(value, bool):
        raise DocumentError("booleans are not coefficients", where)
    if isinstance(value, int):
        return Fraction(value)
    if isinstance(value, str):
        try:
            q = Fraction(value.strip())
        except (ValueError, ZeroDivisionError):
            raise DocumentError(f"not a rational 'p/q': {value!r}", where) from None
        if "/" in value and int(value.split("/")[1]) <= 0:
            raise DocumentError(f"denominator must be positive: {value!r}", where)
        return q
    if isinstance(value, float):
        raise DocumentError(f"floats are not exact; write {value!r} as a 'p/q' string", where)
    raise DocumentError(f"unexpected coefficient {value!r}", where)


def parse_poly(value: Any, where: str) -> RatPoly:
    if not isinstance(value, list):
        raise DocumentError("polynomial must be an array of coefficients", where)
    return RatPoly([_parse_coeff(c, f"{where}[{k}]") for k, c in enumerate(value)])


def parse_entry(value: Any, where: str) -> GaussRatPoly:
    if isinstance(value, list):
        return GaussRatPoly(parse_poly(value, where))
    if isinstance(value, dict):
        unknown = set(value) - {"re", "im"}
        if unknown:
            raise DocumentError(f"unknown keys {sorted(unknown)}", where)
        re = parse_poly(value.get("re", []), f"{where}.re")
        im = parse_poly(value.get("im", []), f"{where}.im")
        return GaussRatPoly(re, im)
    raise DocumentError("matrix entry must be {re, im} or a coefficient array", where)


@dataclass
class FamilyDocument:
    n: int
    terms: list[tuple[RatPoly, ParamMatrix]]
    name: str = ""
    description: str = ""

    def to_family(self) -> Family:
        try:
            return validate_family(self.n, self.terms)
        except FamilyValidationError as exc:
            # prefix each problem with its document location
            parts = []
            for p in exc.problems:
                idx = getattr(p, "index", None)
                loc = f"terms[{idx - 1}]" if idx is not None else "document"
                parts.append(f"{loc}: {p}")
            raise FamilyValidationError("; ".join(parts)) from exc


def load_family_document(text: str) -> FamilyDocument:
    try:
        raw = json.loads(text)
    except json.JSONDecodeError as exc:
        raise DocumentError(exc.msg, f"line {exc.lineno}, column {exc.colno}") from None
    if not isinstance(raw, dict):
        raise DocumentError("top level must be an object")
    n = raw.get("n")
    if not isinstance(n, int) or isinstance(n, bool) or n < 1:
        raise DocumentError(f"'n' must be a positive integer, got {n!r}", "n")
    terms_raw = raw.get("terms")
    if not isinstance(terms_raw, list) or not terms_raw:
        raise DocumentError("'terms' must be a non-empty array", "terms")
    terms = []
    for r, term in enumerate(terms_raw):
        where = f"terms[{r}]"
        if not isinstance(term, dict) or "alpha" not in term or "matrix" not in term:
            raise DocumentError("each term needs 'alpha' and 'matrix'", where)
        alpha = parse_poly(term["alpha"], f"{where}.alpha")
        rows = term["matrix"]
        if not isinstance(rows, list) or not all(isinstance(row, list) for row in rows):
            raise DocumentError("matrix must be an array of rows", f"{where}.matrix")
        matrix = ParamMatrix(
            [
                [parse_entry(v, f"{where}.matrix[{i}][{j}]") for j, v in enumerate(row)]
                for i, row in enumerate(rows)
            ]
        )
        terms.append((alpha, matrix))
    return FamilyDocument(n, terms, str(raw.get("name", "")), str(raw.get("description", "")))


def parse_family(text: str) -> Family:
    return load_family_document(text).to_family()


def _poly_literal(p: RatPoly) -> list:
    return [c.numerator if c.denominator == 1 else f"{c.numerator}/{c.denominator}" for c in p.coeffs]


def family_to_dict(fam: Family, name: str = "", description: str = "") -> dict:
    terms = []
    for alpha, a in fam.terms:
        rows = []
        for row in a.rows:
            out_row = []
            for e in row:
                entry = {"re": _poly_literal(e.re)}
                if not e.im.is_zero():
                    entry["im"] = _poly_literal(e.im)
                out_row.append(entry)
            rows.append(out_row)
        terms.append({"alpha": _poly_literal(alpha), "matrix": rows})
    doc: dict = {}
    if name:
        doc["name"] = name
    if description:
        doc["description"] = description
    doc["n"] = fam.n
    doc["terms"] = terms
    return doc


def render_family(fam: Family, name: str = "", description: str = "") -> str:
    return json.dumps(family_to_dict(fam, name, description), indent=2) + "\n"


@dataclass
class ReportDocument:
    verdict: str
    deciding_formula: Optional[str]
    threshold: int
    char_poly: dict
    traces: list[dict]
    family: dict = field(default_factory=dict)
    formulas_considered: int = 0
    tool_version: str = __version__

    def to_dict(self) -> dict:
        return {
            "tool_version": self.tool_version,
            "family": self.family,
            "verdict": self.verdict,
            "deciding_formula": self.deciding_formula,
            "threshold": self.threshold,
            "formulas_considered": self.formulas_considered,
            "char_poly": self.char_poly,
            "traces": self.traces,
        }

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), indent=2) + "\n"

    @classmethod
    def from_dict(cls, data: dict) -> ReportDocument:
        return cls(
            verdict=data["verdict"],
            deciding_formula=data["deciding_formula"],
            threshold=data["threshold"],
            char_poly=data["char_poly"],
            traces=data["traces"],
            family=data.get("family", {}),
            formulas_considered=data.get("formulas_considered", 0),
            tool_version=data["tool_version"],
        )

    @classmethod
    def from_json(cls, text: str) -> ReportDocument:
        return cls.from_dict(json.loads(text))
