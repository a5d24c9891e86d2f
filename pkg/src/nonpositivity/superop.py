"""One-parameter families of hermiticity-preserving maps and their CJ matrices.

A family is ``Phi_t(X) = sum_r alpha_r(t) A_r(t) X A_r(t)^*`` with real
polynomials ``alpha_r`` free of real roots and square matrices ``A_r`` of
complex polynomial functions.

Index convention for the n^2 x n^2 CJ matrix: the pair ``(i, j)`` (1-based)
maps to the flat 1-based index ``n*(i-1) + j``.  With that layout the
matrix is the block matrix whose block ``(i, k)`` is ``Phi(E_ik)``.
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Sequence

from .poly import (
    ZERO,
    BiPoly,
    GaussRational,
    GaussRatPoly,
    RatPoly,
    Scalar,
    as_fraction,
    to_ratpoly,
)
from .sturm import count_distinct_real_roots


class FamilyValidationError(ValueError):
    """Input family violates the model; ``problems`` lists every violation."""

    def __init__(self, problems):
        if isinstance(problems, str):
            super().__init__(problems)
            self.problems = [self]
        else:
            self.problems = list(problems)
            super().__init__("; ".join(str(p) for p in self.problems))


class InvalidAlpha(FamilyValidationError):
    def __init__(self, index: int, message: str, root_count: int | None = None):
        self.index = index
        self.root_count = root_count
        super().__init__(f"alpha_{index}: {message}")


class DimensionMismatch(FamilyValidationError):
    def __init__(self, index: int, message: str):
        self.index = index
        super().__init__(f"A_{index}: {message}")


class NonRealCharPoly(AssertionError):
    pass


class ConstructionMismatch(AssertionError):
    pass


def _entry(value) -> GaussRatPoly:
    if isinstance(value, GaussRatPoly):
        return value
    if isinstance(value, RatPoly):
        return GaussRatPoly(value, ZERO)
    return GaussRatPoly(to_ratpoly(value), ZERO)


class ParamMatrix:
    """Square matrix of :class:`GaussRatPoly` entries."""

    __slots__ = ("rows",)

    def __init__(self, rows: Iterable[Iterable]):
        self.rows = tuple(tuple(_entry(v) for v in row) for row in rows)

    @property
    def n(self) -> int:
        return len(self.rows)

    def is_square(self) -> bool:
        return all(len(r) == len(self.rows) for r in self.rows)

    def entry(self, i: int, j: int) -> GaussRatPoly:
        """1-based access."""
        return self.rows[i - 1][j - 1]

    def adjoint(self) -> ParamMatrix:
        n = self.n
        return ParamMatrix([[self.rows[j][i].conjugate() for j in range(n)] for i in range(n)])

    def is_selfadjoint(self) -> bool:
        return self == self.adjoint()

    def evaluate(self, t0: Scalar) -> list[list[GaussRational]]:
        t0 = as_fraction(t0)
        return [[e(t0) for e in row] for row in self.rows]

    def __eq__(self, other) -> bool:
        if not isinstance(other, ParamMatrix):
            return NotImplemented
        return self.rows == other.rows

    def __hash__(self) -> int:
        return hash(self.rows)

    def __repr__(self) -> str:
        body = "; ".join(", ".join(e.render() for e in row) for row in self.rows)
        return f"ParamMatrix([{body}])"


@dataclass(frozen=True)
class Family:
    n: int
    terms: tuple[tuple[RatPoly, ParamMatrix], ...]

    @property
    def s(self) -> int:
        return len(self.terms)


@dataclass(frozen=True)
class CJMatrix:
    n: int
    m: ParamMatrix


def validate_family(n: int, terms: Sequence[tuple]) -> Family:
    """Check the family data and return a :class:`Family`.

    ``terms`` holds ``(alpha, A)`` pairs; ``A`` may be a ParamMatrix or
    nested rows of anything :class:`ParamMatrix` accepts.
    """
    problems: list[FamilyValidationError] = []
    if not isinstance(n, int) or n < 1:
        raise FamilyValidationError(f"dimension must be a positive integer, got {n!r}")
    if not terms:
        raise FamilyValidationError("a family needs at least one term")
    out = []
    for r, (alpha, a) in enumerate(terms, start=1):
        alpha = to_ratpoly(alpha)
        if alpha.is_zero():
            problems.append(InvalidAlpha(r, "is the zero polynomial"))
        else:
            roots = count_distinct_real_roots(alpha)
            if roots:
                problems.append(InvalidAlpha(r, f"has {roots} real root(s): N(alpha, 1) = {roots} > 0", roots))
        a = a if isinstance(a, ParamMatrix) else ParamMatrix(a)
        if a.n != n or not a.is_square():
            shape = f"{a.n}x{'/'.join(str(len(row)) for row in a.rows) or 0}"
            problems.append(DimensionMismatch(r, f"expected {n}x{n}, got {shape}"))
        out.append((alpha, a))
    if len(problems) == 1:
        raise problems[0]
    if problems:
        raise FamilyValidationError(problems)
    return Family(n, tuple(out))


def flat_index(n: int, i: int, j: int) -> int:
    """0-based flat index of the 1-based pair (i, j)."""
    return n * (i - 1) + (j - 1)


def _cj_by_entries(fam: Family) -> list[list[GaussRatPoly]]:
    # M[(i,j),(k,l)] = sum_r alpha_r a^r_{ji} conj(a^r_{lk})  (transposed entry formula)
    n = fam.n
    size = n * n
    m = [[GaussRatPoly() for _ in range(size)] for _ in range(size)]
    for alpha, a in fam.terms:
        for i in range(1, n + 1):
            for j in range(1, n + 1):
                row = flat_index(n, i, j)
                aji = a.entry(j, i)
                if aji.is_zero():
                    continue
                scaled = aji * alpha
                for k in range(1, n + 1):
                    for l in range(1, n + 1):
                        alk = a.entry(l, k)
                        if alk.is_zero():
                            continue
                        col = flat_index(n, k, l)
                        m[row][col] = m[row][col] + scaled * alk.conjugate()
    return m


def _matmul(x, y):
    n, p, q = len(x), len(y), len(y[0])
    out = []
    for i in range(n):
        row = []
        for j in range(q):
            acc = GaussRatPoly()
            for k in range(p):
                if x[i][k].is_zero() or y[k][j].is_zero():
                    continue
                acc = acc + x[i][k] * y[k][j]
            row.append(acc)
        out.append(row)
    return out


def apply_map(fam: Family, x: Sequence[Sequence[GaussRatPoly]]) -> list[list[GaussRatPoly]]:
    """Phi_t(X) as a matrix of polynomial functions, by matrix products."""
    n = fam.n
    total = [[GaussRatPoly() for _ in range(n)] for _ in range(n)]
    for alpha, a in fam.terms:
        rows = [list(r) for r in a.rows]
        prod = _matmul(_matmul(rows, x), [list(r) for r in a.adjoint().rows])
        for i in range(n):
            for j in range(n):
                total[i][j] = total[i][j] + prod[i][j] * alpha
    return total


def _cj_by_blocks(fam: Family) -> list[list[GaussRatPoly]]:
    n = fam.n
    size = n * n
    m = [[GaussRatPoly() for _ in range(size)] for _ in range(size)]
    one = GaussRatPoly(RatPoly([1]))
    for i in range(n):
        for k in range(n):
            e_ik = [[one if (r, c) == (i, k) else GaussRatPoly() for c in range(n)] for r in range(n)]
            block = apply_map(fam, e_ik)
            for j in range(n):
                for l in range(n):
                    m[i * n + j][k * n + l] = block[j][l]
    return m


def cj_matrix(fam: Family) -> CJMatrix:
    """Symbolic CJ matrix, built twice (entry formula and block form) and cross-checked."""
    by_entries = ParamMatrix(_cj_by_entries(fam))
    by_blocks = ParamMatrix(_cj_by_blocks(fam))
    if by_entries != by_blocks:
        raise ConstructionMismatch("entry formula and block form of the CJ matrix disagree")
    if not by_entries.is_selfadjoint():
        raise ConstructionMismatch("CJ matrix is not selfadjoint")
    return CJMatrix(fam.n, by_entries)


def faddeev_leverrier(matrix, zero, one) -> list:
    """Coefficients ``c_0..c_N`` with ``det(xI - M) = sum c_k x^k``.

    Works over any commutative ring whose elements support ``+`` and
    multiplication by Fractions; each step divides by an integer 1..N.
    """
    size = len(matrix)
    c = [zero] * (size + 1)
    c[size] = one
    am = [[zero] * size for _ in range(size)]  # M @ M_{k-1}; M_0 = 0
    for k in range(1, size + 1):
        mk = [
            [am[i][j] + c[size - k + 1] if i == j else am[i][j] for j in range(size)]
            for i in range(size)
        ]
        am = [
            [_dot(matrix[i], mk, j, zero) for j in range(size)]
            for i in range(size)
        ]
        trace = zero
        for i in range(size):
            trace = trace + am[i][i]
        c[size - k] = trace * Fraction(-1, k)
    return c


def _dot(row, mat, j, zero):
    acc = zero
    for k, x in enumerate(row):
        y = mat[k][j]
        if x.is_zero() or y.is_zero():
            continue
        acc = acc + x * y
    return acc


def char_poly(m: CJMatrix | ParamMatrix) -> BiPoly:
    """det(M - xI) in Q[t][x], sign convention kept as is (not made monic)."""
    pm = m.m if isinstance(m, CJMatrix) else m
    size = pm.n
    coeffs = faddeev_leverrier(
        [list(r) for r in pm.rows], GaussRatPoly(), GaussRatPoly(RatPoly([1]))
    )
    sign = -1 if size % 2 else 1
    terms = {}
    for k, c in enumerate(coeffs):
        if not c.is_real():
            raise NonRealCharPoly(f"x^{k} coefficient has non-zero imaginary part {c.im}")
        terms[k] = c.re * sign
    return BiPoly(terms)


def char_poly_exact(matrix: Sequence[Sequence[GaussRational]]) -> RatPoly:
    """det(M - xI) for a constant matrix of Gaussian rationals."""
    size = len(matrix)
    coeffs = faddeev_leverrier([list(r) for r in matrix], GaussRational(), GaussRational(1))
    sign = -1 if size % 2 else 1
    out = []
    for k, c in enumerate(coeffs):
        if c.im != 0:
            raise NonRealCharPoly(f"x^{k} coefficient has non-zero imaginary part {c.im}")
        out.append(c.re * sign)
    return RatPoly(out)


def evaluate_family_cj(fam: Family, t0: Scalar) -> list[list[GaussRational]]:
    return cj_matrix(fam).m.evaluate(t0)


def family_char_poly(fam: Family) -> BiPoly:
    return char_poly(cj_matrix(fam))
