from __future__ import annotations

import random
from fractions import Fraction
from pathlib import Path

import pytest

from nonpositivity.poly import GaussRational, RatPoly
from nonpositivity.superop import validate_family

DATA = Path(__file__).resolve().parents[1] / "src" / "nonpositivity" / "data"
GOLDEN = Path(__file__).resolve().parent / "golden"

T = RatPoly([0, 1])


def P(*coeffs_descending) -> RatPoly:
    """Polynomial from coefficients written highest power first."""
    return RatPoly(list(reversed(coeffs_descending)))


# chi^- coefficients of the three-term 2x2 reference family
A4 = P(1)
A3 = P(-4, 0, -5)
A2 = P(4, 2, 5, -2, 6)
A1 = P(-1, -2, 0, 4, -3, 0, -1)


def reference_family():
    t = T
    return validate_family(
        2,
        [
            (-1, [[0, -t], [0, 1]]),
            (-1, [[1, 0], [-1 - t, -t]]),
            (-1, [[0, 0], [1, 1 - t]]),
        ],
    )


@pytest.fixture
def ref_family():
    return reference_family()


@pytest.fixture
def reference_path():
    return DATA / "reference.json"


@pytest.fixture
def identity_path():
    return DATA / "identity.json"


def sign(x) -> int:
    return (x > 0) - (x < 0)


def random_root_poly(rng: random.Random, max_degree: int = 8, max_mult: int = 3, root_range: int = 6):
    """Product of (t - r)^m over random distinct integer roots.

    Returns (poly, {root: multiplicity}); the total degree stays <= max_degree.
    """
    roots: dict[int, int] = {}
    degree = 0
    target = rng.randint(1, max_degree)
    while degree < target:
        r = rng.randint(-root_range, root_range)
        if r in roots:
            continue
        m = min(rng.randint(1, max_mult), target - degree)
        roots[r] = m
        degree += m
    lead = Fraction(rng.choice([-3, -2, -1, 1, 2, 3]), rng.randint(1, 3))
    p = RatPoly.constant(lead)
    for r, m in roots.items():
        p = p * RatPoly([-r, 1]) ** m
    return p, roots


def random_small_poly(rng: random.Random, max_degree: int = 3, span: int = 4) -> RatPoly:
    while True:
        p = RatPoly([rng.randint(-span, span) for _ in range(rng.randint(1, max_degree + 1))])
        if not p.is_zero():
            return p


# exact linear algebra over Gaussian rationals, independent of the
# Faddeev-LeVerrier path used by the library


def _gdiv(a: GaussRational, b: GaussRational) -> GaussRational:
    d = b.re * b.re + b.im * b.im
    num = a * b.conjugate()
    return GaussRational(num.re / d, num.im / d)


def gauss_det(matrix) -> GaussRational:
    m = [list(row) for row in matrix]
    size = len(m)
    det = GaussRational(1)
    for col in range(size):
        pivot = next((r for r in range(col, size) if not m[r][col].is_zero()), None)
        if pivot is None:
            return GaussRational(0)
        if pivot != col:
            m[col], m[pivot] = m[pivot], m[col]
            det = -det
        det = det * m[col][col]
        for r in range(col + 1, size):
            if m[r][col].is_zero():
                continue
            factor = _gdiv(m[r][col], m[col][col])
            m[r] = [x - factor * y for x, y in zip(m[r], m[col])]
    return det


def shifted(matrix, x0):
    return [
        [e - GaussRational(x0) if i == j else e for j, e in enumerate(row)]
        for i, row in enumerate(matrix)
    ]


def pytest_terminal_summary(terminalreporter):
    import sys

    mod = sys.modules.get("test_acceptance")
    if mod is not None and mod.RESULTS:
        terminalreporter.section("acceptance criteria")
        for line in mod.RESULTS:
            terminalreporter.write_line(line)
