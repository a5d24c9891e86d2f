"""Sign words, Descartes-style sign sequences and sign variation formulas.

A sign word is a plain ``str`` over ``"+"`` and ``"-"``; the leftmost
letter belongs to the highest power of x.  A sign variation formula pairs
such a word with the coefficient sequence of a :class:`~.poly.BiPoly` and
stands for the conjunction ``a_i(t) > 0`` / ``a_i(t) < 0`` dictated by the
letters.
"""
from __future__ import annotations

import itertools
from dataclasses import dataclass
from fractions import Fraction
from typing import Optional

from .poly import BiPoly, RatPoly, Scalar, as_fraction
from .sturm import CapacityError, count_distinct_real_roots

MAX_ENUMERATION_LENGTH = 24


def check_word(word: str) -> str:
    if not word or any(c not in "+-" for c in word):
        raise ValueError(f"not a sign word over {{+,-}}: {word!r}")
    return word


def sign_variations(word: str) -> int:
    """Number of adjacent ``+-`` / ``-+`` pairs."""
    check_word(word)
    return sum(1 for a, b in zip(word, word[1:]) if a != b)


def flip(word: str) -> str:
    return word.translate(str.maketrans("+-", "-+"))


def letter(word: str, i: int) -> str:
    """The i-th letter counted from the right, 1-based."""
    if not 1 <= i <= len(word):
        raise IndexError(i)
    return word[-i]


def sign_of(c: Fraction) -> str:
    if c == 0:
        raise ValueError("zero has no sign letter")
    return "+" if c > 0 else "-"


def sign_sequence(f: RatPoly) -> str:
    """Signs of the non-zero coefficients of ``f``, highest power first."""
    if f.is_zero():
        raise ValueError("sign sequence of the zero polynomial")
    return "".join(sign_of(c) for c in reversed(f.coeffs) if c != 0)


@dataclass(frozen=True)
class SignVariationFormula:
    sigma: str
    domain: tuple[tuple[int, RatPoly], ...]

    def __post_init__(self):
        check_word(self.sigma)
        if len(self.sigma) != len(self.domain):
            raise ValueError(
                f"sign word {self.sigma!r} has length {len(self.sigma)} "
                f"but the coefficient sequence has {len(self.domain)} terms"
            )
        if any(a.is_zero() for _, a in self.domain):
            raise ValueError("zero polynomial in formula domain")

    @property
    def variations(self) -> int:
        return sign_variations(self.sigma)

    def components(self) -> list[tuple[int, RatPoly, str]]:
        """``(exponent, a, relation)`` with relation ``">"`` or ``"<"``."""
        return [(e, a, ">" if s == "+" else "<") for (e, a), s in zip(self.domain, self.sigma)]

    def normal_form(self) -> list[RatPoly]:
        return normal_form(self)

    def holds_at(self, t0: Scalar) -> bool:
        return holds_at(self, t0)

    def render(self, var: str = "t") -> str:
        return " and ".join(f"({a.render(var)}) {rel} 0" for _, a, rel in self.components())


def build_formula(f: BiPoly, sigma: str) -> SignVariationFormula:
    check_word(sigma)
    if len(sigma) != len(f):
        raise ValueError(
            f"sign word {sigma!r} has length {len(sigma)} but the polynomial has {len(f)} non-zero coefficients"
        )
    return SignVariationFormula(sigma, f.terms)


def normal_form(phi: SignVariationFormula) -> list[RatPoly]:
    """Rewrite every ``a < 0`` as ``-a > 0``; returns the ``> 0`` polynomials."""
    return [a if s == "+" else -a for (_, a), s in zip(phi.domain, phi.sigma)]


def holds_at(phi: SignVariationFormula, t0: Scalar) -> bool:
    t0 = as_fraction(t0)
    return all(b(t0) > 0 for b in normal_form(phi))


def obvious_sign(a: RatPoly) -> Optional[str]:
    """Sign of ``a`` when it is evident from the coefficients alone.

    That is the case for a polynomial in t^2 whose non-zero coefficients all
    share one sign and whose constant term is non-zero: it never vanishes.
    """
    if a.is_zero() or a[0] == 0:
        return None
    if any(c != 0 for k, c in enumerate(a.coeffs) if k % 2):
        return None
    signs = {sign_of(c) for c in a.coeffs if c != 0}
    return signs.pop() if len(signs) == 1 else None


def root_free_sign(a: RatPoly, log: Optional[list] = None) -> Optional[str]:
    """Sign of ``a`` if it has no real root (decided by a Sturm count)."""
    if count_distinct_real_roots(a, log) == 0:
        return sign_of(a(0))
    return None


PRUNE_RULES = {
    "obvious": obvious_sign,
    "roots": root_free_sign,
}


def fixed_signs(f: BiPoly, rule: str = "obvious") -> list[Optional[str]]:
    """Per coefficient: its sign if ``rule`` proves it constant, else None."""
    try:
        test = PRUNE_RULES[rule]
    except KeyError:
        raise ValueError(f"unknown prune rule {rule!r}; expected one of {sorted(PRUNE_RULES)}") from None
    return [test(a) for _, a in f.terms]


def enumerate_formulas(
    f: BiPoly, threshold: int, prune: bool = True, rule: str = "obvious"
) -> list[SignVariationFormula]:
    """All formulas over ``f`` whose word has at least ``threshold`` variations.

    With ``prune`` set, words contradicting a coefficient of constant sign
    are dropped (such formulas can never hold).  ``rule`` picks how constant
    sign is recognised: ``"obvious"`` looks at the coefficients only,
    ``"roots"`` uses a Sturm root count and prunes more.  Words come out in
    lexicographic order with ``"+" < "-"``.
    """
    if f.is_zero():
        raise ValueError("cannot enumerate formulas over the zero polynomial")
    length = len(f)
    if length > MAX_ENUMERATION_LENGTH:
        raise CapacityError(
            f"{length} coefficients exceed the enumeration limit of {MAX_ENUMERATION_LENGTH}"
        )
    fixed = fixed_signs(f, rule) if prune else [None] * length
    choices = [(s,) if s else ("+", "-") for s in fixed]
    out = []
    for letters in itertools.product(*choices):
        word = "".join(letters)
        if sign_variations(word) >= threshold:
            out.append(SignVariationFormula(word, f.terms))
    return out
