"""Exact polynomial arithmetic over the rationals and Gaussian rationals.

Three value types live here:

* :class:`RatPoly` -- univariate polynomial with :class:`fractions.Fraction`
  coefficients, stored ascending and trimmed (the zero polynomial has no
  coefficients and degree :data:`NEG_INF`).
* :class:`GaussRatPoly` -- a pair ``re + i*im`` of RatPoly, i.e. a polynomial
  function from the reals to the complex numbers.
* :class:`BiPoly` -- an element of Q[t][x]: polynomial in ``x`` whose
  coefficients are RatPoly in ``t``.  Only non-zero coefficients are kept.

Everything is immutable; operations return new objects.
"""
from __future__ import annotations

from fractions import Fraction
from typing import Iterable, Iterator, Mapping, Sequence, Union

NEG_INF = float("-inf")
"""Degree of the zero polynomial."""

Scalar = Union[int, Fraction]


def as_fraction(value) -> Fraction:
    """Coerce ints, Fractions and ``"p/q"`` strings to an exact Fraction.

    Floats are refused: they would silently smuggle rounding error in.
    """
    if isinstance(value, Fraction):
        return value
    if isinstance(value, bool):
        raise TypeError("booleans are not coefficients")
    if isinstance(value, int):
        return Fraction(value)
    if isinstance(value, str):
        return Fraction(value.strip())
    raise TypeError(f"cannot use {type(value).__name__} as an exact rational")


def format_fraction(q: Fraction) -> str:
    if q.denominator == 1:
        return str(q.numerator)
    return f"{q.numerator}/{q.denominator}"


def _trim(coeffs: list[Fraction]) -> tuple[Fraction, ...]:
    while coeffs and coeffs[-1] == 0:
        coeffs.pop()
    return tuple(coeffs)


class RatPoly:
    """Univariate polynomial with exact rational coefficients.

    ``RatPoly([c0, c1, ..., cn])`` is ``c0 + c1*t + ... + cn*t^n``.
    """

    __slots__ = ("_c",)

    def __init__(self, coeffs: Iterable = ()):
        self._c = _trim([as_fraction(c) for c in coeffs])

    @classmethod
    def _raw(cls, coeffs: tuple[Fraction, ...]) -> RatPoly:
        obj = object.__new__(cls)
        obj._c = coeffs
        return obj

    @classmethod
    def constant(cls, c: Scalar) -> RatPoly:
        return cls([c])

    @classmethod
    def monomial(cls, degree: int, c: Scalar = 1) -> RatPoly:
        return cls([0] * degree + [c])

    @classmethod
    def from_roots(cls, roots: Iterable[Scalar], lead: Scalar = 1) -> RatPoly:
        p = cls.constant(lead)
        for r in roots:
            p = p * cls([-as_fraction(r), 1])
        return p

    # -- accessors -----------------------------------------------------
    @property
    def coeffs(self) -> tuple[Fraction, ...]:
        """Coefficients in ascending order of exponent."""
        return self._c

    @property
    def degree(self):
        return len(self._c) - 1 if self._c else NEG_INF

    @property
    def lc(self) -> Fraction:
        if not self._c:
            raise ValueError("zero polynomial has no leading coefficient")
        return self._c[-1]

    def is_zero(self) -> bool:
        return not self._c

    def is_constant(self) -> bool:
        return len(self._c) <= 1

    def __bool__(self) -> bool:
        return bool(self._c)

    def __len__(self) -> int:
        return len(self._c)

    def __getitem__(self, k: int) -> Fraction:
        if 0 <= k < len(self._c):
            return self._c[k]
        return Fraction(0)

    def __eq__(self, other) -> bool:
        if isinstance(other, RatPoly):
            return self._c == other._c
        if isinstance(other, (int, Fraction)):
            return self._c == RatPoly.constant(other)._c
        return NotImplemented

    def __hash__(self) -> int:
        return hash(self._c)

    # -- ring operations ---------------------------------------------------
    def __neg__(self) -> RatPoly:
        return RatPoly._raw(tuple(-c for c in self._c))

    def __add__(self, other) -> RatPoly:
        other = _lift(other)
        if other is NotImplemented:
            return other
        a, b = self._c, other._c
        if len(a) < len(b):
            a, b = b, a
        out = list(a)
        for k, c in enumerate(b):
            out[k] += c
        return RatPoly._raw(_trim(out))

    __radd__ = __add__

    def __sub__(self, other) -> RatPoly:
        other = _lift(other)
        if other is NotImplemented:
            return other
        return self + (-other)

    def __rsub__(self, other) -> RatPoly:
        return (-self) + other

    def __mul__(self, other) -> RatPoly:
        if isinstance(other, (int, Fraction)) and not isinstance(other, bool):
            return self.scale(other)
        if not isinstance(other, RatPoly):
            return NotImplemented
        a, b = self._c, other._c
        if not a or not b:
            return RatPoly._raw(())
        out = [Fraction(0)] * (len(a) + len(b) - 1)
        for i, x in enumerate(a):
            if x == 0:
                continue
            for j, y in enumerate(b):
                out[i + j] += x * y
        return RatPoly._raw(_trim(out))

    __rmul__ = __mul__

    def __pow__(self, e: int) -> RatPoly:
        if e < 0:
            raise ValueError("negative power")
        result, base = RatPoly.constant(1), self
        while e:
            if e & 1:
                result = result * base
            base = base * base
            e >>= 1
        return result

    def scale(self, c: Scalar) -> RatPoly:
        c = as_fraction(c)
        if c == 0:
            return RatPoly._raw(())
        return RatPoly._raw(tuple(c * x for x in self._c))

    def __divmod__(self, other: RatPoly) -> tuple[RatPoly, RatPoly]:
        if not isinstance(other, RatPoly):
            return NotImplemented
        if other.is_zero():
            raise ZeroDivisionError("polynomial division by zero")
        rem = list(self._c)
        dq = len(other._c) - 1
        lead = other._c[-1]
        if len(rem) - 1 < dq:
            return RatPoly._raw(()), self
        quot = [Fraction(0)] * (len(rem) - dq)
        for k in range(len(rem) - 1, dq - 1, -1):
            c = rem[k]
            if c == 0:
                continue
            c = c / lead
            quot[k - dq] = c
            for j, b in enumerate(other._c):
                rem[k - dq + j] -= c * b
        return RatPoly._raw(_trim(quot)), RatPoly._raw(_trim(rem[:dq]))

    def __floordiv__(self, other: RatPoly) -> RatPoly:
        return divmod(self, other)[0]

    def __mod__(self, other: RatPoly) -> RatPoly:
        return divmod(self, other)[1]

    def divides(self, other: RatPoly) -> bool:
        """True if ``self`` divides ``other`` exactly."""
        return (other % self).is_zero()

    def derivative(self) -> RatPoly:
        return RatPoly._raw(tuple(k * c for k, c in enumerate(self._c) if k))

    def __call__(self, t0: Scalar) -> Fraction:
        t0 = as_fraction(t0)
        acc = Fraction(0)
        for c in reversed(self._c):
            acc = acc * t0 + c
        return acc

    evaluate = __call__

    # -- signs -------------------------------------------------------------
    def sign_at_pos_inf(self) -> int:
        """Sign of the limit at +infinity (the leading coefficient's sign)."""
        return 1 if self.lc > 0 else -1

    def sign_at_neg_inf(self) -> int:
        s = self.sign_at_pos_inf()
        return -s if self.degree % 2 else s

    # -- rendering -----------------------------------------------------------
    def render(self, var: str = "t") -> str:
        if not self._c:
            return "0"
        parts: list[str] = []
        for k in range(len(self._c) - 1, -1, -1):
            c = self._c[k]
            if c == 0:
                continue
            neg = c < 0
            mag = -c if neg else c
            if k == 0:
                body = format_fraction(mag)
            else:
                mono = var if k == 1 else f"{var}^{k}"
                body = mono if mag == 1 else f"{format_fraction(mag)}*{mono}"
            if not parts:
                parts.append(f"-{body}" if neg else body)
            else:
                parts.append(f"- {body}" if neg else f"+ {body}")
        return " ".join(parts)

    def __str__(self) -> str:
        return self.render()

    def __repr__(self) -> str:
        return f"RatPoly({self.render()!r})"


def to_ratpoly(value) -> RatPoly:
    """Accept a RatPoly, an exact scalar, or an ascending coefficient list."""
    if isinstance(value, RatPoly):
        return value
    if isinstance(value, (int, Fraction, str)) and not isinstance(value, bool):
        return RatPoly([value])
    return RatPoly(value)


def _lift(value):
    if isinstance(value, RatPoly):
        return value
    if isinstance(value, (int, Fraction)) and not isinstance(value, bool):
        return RatPoly.constant(value)
    return NotImplemented


ZERO = RatPoly()
ONE = RatPoly.constant(1)
T = RatPoly([0, 1])


class GaussRational:
    """Exact complex number ``re + i*im`` with rational parts."""

    __slots__ = ("re", "im")

    def __init__(self, re: Scalar = 0, im: Scalar = 0):
        self.re = as_fraction(re)
        self.im = as_fraction(im)

    def __eq__(self, other) -> bool:
        if isinstance(other, GaussRational):
            return self.re == other.re and self.im == other.im
        if isinstance(other, (int, Fraction)):
            return self.im == 0 and self.re == other
        return NotImplemented

    def __hash__(self) -> int:
        return hash((self.re, self.im))

    def __add__(self, other: GaussRational) -> GaussRational:
        return GaussRational(self.re + other.re, self.im + other.im)

    def __sub__(self, other: GaussRational) -> GaussRational:
        return GaussRational(self.re - other.re, self.im - other.im)

    def __neg__(self) -> GaussRational:
        return GaussRational(-self.re, -self.im)

    def __mul__(self, other) -> GaussRational:
        if isinstance(other, (int, Fraction)):
            return GaussRational(self.re * other, self.im * other)
        return GaussRational(
            self.re * other.re - self.im * other.im,
            self.re * other.im + self.im * other.re,
        )

    __rmul__ = __mul__

    def conjugate(self) -> GaussRational:
        return GaussRational(self.re, -self.im)

    def is_zero(self) -> bool:
        return self.re == 0 and self.im == 0

    def __repr__(self) -> str:
        if self.im == 0:
            return format_fraction(self.re)
        return f"({format_fraction(self.re)} + {format_fraction(self.im)}i)"


class GaussRatPoly:
    """Polynomial function R -> C, stored as ``re(t) + i*im(t)``."""

    __slots__ = ("re", "im")

    def __init__(self, re: RatPoly | Iterable = ZERO, im: RatPoly | Iterable = ZERO):
        self.re = re if isinstance(re, RatPoly) else RatPoly(re)
        self.im = im if isinstance(im, RatPoly) else RatPoly(im)

    @classmethod
    def real(cls, p: RatPoly | Scalar) -> GaussRatPoly:
        return cls(_lift(p), ZERO)

    def is_zero(self) -> bool:
        return self.re.is_zero() and self.im.is_zero()

    def is_real(self) -> bool:
        return self.im.is_zero()

    def __eq__(self, other) -> bool:
        if isinstance(other, GaussRatPoly):
            return self.re == other.re and self.im == other.im
        if isinstance(other, RatPoly):
            return self.im.is_zero() and self.re == other
        return NotImplemented

    def __hash__(self) -> int:
        return hash((self.re, self.im))

    def __add__(self, other: GaussRatPoly) -> GaussRatPoly:
        return GaussRatPoly(self.re + other.re, self.im + other.im)

    def __sub__(self, other: GaussRatPoly) -> GaussRatPoly:
        return GaussRatPoly(self.re - other.re, self.im - other.im)

    def __neg__(self) -> GaussRatPoly:
        return GaussRatPoly(-self.re, -self.im)

    def __mul__(self, other) -> GaussRatPoly:
        if isinstance(other, (int, Fraction)):
            return GaussRatPoly(self.re * other, self.im * other)
        if isinstance(other, RatPoly):
            return GaussRatPoly(self.re * other, self.im * other)
        if self.im.is_zero() and other.im.is_zero():
            return GaussRatPoly(self.re * other.re, ZERO)
        return GaussRatPoly(
            self.re * other.re - self.im * other.im,
            self.re * other.im + self.im * other.re,
        )

    __rmul__ = __mul__

    def conjugate(self) -> GaussRatPoly:
        return GaussRatPoly(self.re, -self.im)

    def __call__(self, t0: Scalar) -> GaussRational:
        return GaussRational(self.re(t0), self.im(t0))

    evaluate = __call__

    def render(self, var: str = "t") -> str:
        if self.im.is_zero():
            return self.re.render(var)
        if self.re.is_zero():
            return f"i*({self.im.render(var)})"
        return f"({self.re.render(var)}) + i*({self.im.render(var)})"

    def __repr__(self) -> str:
        return f"GaussRatPoly({self.render()!r})"


class BiPoly:
    """Element of Q[t][x] holding only its non-zero x-coefficients.

    ``terms`` is a tuple of ``(exponent, RatPoly)`` with strictly
    decreasing exponents; this is exactly the coefficient sequence
    ``(a_{n_k}, ..., a_{n_0})``.
    """

    __slots__ = ("_terms",)

    def __init__(self, coeffs: Mapping[int, RatPoly] | Iterable[tuple[int, RatPoly]]):
        items = coeffs.items() if isinstance(coeffs, Mapping) else coeffs
        acc: dict[int, RatPoly] = {}
        for e, a in items:
            if e < 0:
                raise ValueError("negative exponent")
            acc[e] = acc.get(e, ZERO) + _lift(a)
        self._terms = tuple(
            (e, acc[e]) for e in sorted(acc, reverse=True) if not acc[e].is_zero()
        )

    @property
    def terms(self) -> tuple[tuple[int, RatPoly], ...]:
        return self._terms

    def coefficient_sequence(self) -> tuple[RatPoly, ...]:
        """Non-zero coefficients, highest power of x first."""
        return tuple(a for _, a in self._terms)

    def exponents(self) -> tuple[int, ...]:
        return tuple(e for e, _ in self._terms)

    def coefficient(self, e: int) -> RatPoly:
        for k, a in self._terms:
            if k == e:
                return a
        return ZERO

    @property
    def x_degree(self):
        return self._terms[0][0] if self._terms else NEG_INF

    def __len__(self) -> int:
        return len(self._terms)

    def __iter__(self) -> Iterator[tuple[int, RatPoly]]:
        return iter(self._terms)

    def is_zero(self) -> bool:
        return not self._terms

    def __eq__(self, other) -> bool:
        if not isinstance(other, BiPoly):
            return NotImplemented
        return self._terms == other._terms

    def __hash__(self) -> int:
        return hash(self._terms)

    def negate_x(self) -> BiPoly:
        """f(t, x) -> f(t, -x)."""
        return BiPoly((e, -a if e % 2 else a) for e, a in self._terms)

    def evaluate_t(self, t0: Scalar) -> RatPoly:
        """Specialise t = t0, giving a polynomial in x."""
        if not self._terms:
            return ZERO
        out = [Fraction(0)] * (self._terms[0][0] + 1)
        for e, a in self._terms:
            out[e] = a(t0)
        return RatPoly(out)

    def render(self, tvar: str = "t", xvar: str = "x") -> str:
        if not self._terms:
            return "0"
        parts: list[str] = []
        for e, a in self._terms:
            mono = "" if e == 0 else (xvar if e == 1 else f"{xvar}^{e}")
            if a.is_constant():
                c = a.lc
                neg = c < 0
                mag = -c if neg else c
                if not mono:
                    body = format_fraction(mag)
                elif mag == 1:
                    body = mono
                else:
                    body = f"{format_fraction(mag)}*{mono}"
            else:
                neg = False
                inner = a.render(tvar)
                body = f"({inner})*{mono}" if mono else f"({inner})"
            if not parts:
                parts.append(f"-{body}" if neg else body)
            else:
                parts.append(f"- {body}" if neg else f"+ {body}")
        return " ".join(parts)

    def __repr__(self) -> str:
        return f"BiPoly({self.render()!r})"


def poly_product(polys: Sequence[RatPoly]) -> RatPoly:
    out = ONE
    for p in polys:
        out = out * p
    return out
