"""Canonical Sturm chains, Tarski queries and sign-condition counting.

All counting is over *distinct* real roots and uses only the signs of the
chain at -infinity and +infinity.
"""
from __future__ import annotations

import itertools
from dataclasses import dataclass
from fractions import Fraction
from typing import Optional, Sequence

from .poly import ONE, RatPoly, poly_product

MAX_SIGN_SET_CONSTRAINTS = 32


class CapacityError(RuntimeError):
    """Raised when an exhaustive enumeration would exceed its size guard."""


@dataclass(frozen=True)
class SturmChain:
    """The polynomials ``h_0, ..., h_n`` of a canonical Sturm chain."""

    polys: tuple[RatPoly, ...]

    def signs(self, direction: int) -> str:
        """Word of signs of the chain's limits at ``direction`` * infinity."""
        if direction > 0:
            return "".join("+" if h.sign_at_pos_inf() > 0 else "-" for h in self.polys)
        return "".join("+" if h.sign_at_neg_inf() > 0 else "-" for h in self.polys)

    def variations(self, direction: int) -> int:
        return variations_at_infinity(self, direction)

    @property
    def nu(self) -> int:
        return self.variations(-1) - self.variations(1)

    def __len__(self) -> int:
        return len(self.polys)

    def to_dict(self) -> dict:
        return {
            "polys": [h.render() for h in self.polys],
            "signs_neg_inf": self.signs(-1),
            "signs_pos_inf": self.signs(1),
            "variations_neg_inf": self.variations(-1),
            "variations_pos_inf": self.variations(1),
            "nu": self.nu,
        }


def _count_variations(word: str) -> int:
    return sum(1 for a, b in zip(word, word[1:]) if a != b)


def canonical_sturm(p: RatPoly, q: RatPoly) -> SturmChain:
    """h_0 = p, h_1 = q, h_{i+1} = -rem(h_{i-1}, h_i) until h_i | h_{i-1}.

    No content removal or rescaling is done, so the coefficients are the
    plain Euclidean remainders.
    """
    if p.is_zero() or q.is_zero():
        raise ValueError("Sturm chain of a zero polynomial")
    chain = [p, q]
    while True:
        r = chain[-2] % chain[-1]
        if r.is_zero():
            break
        chain.append(-r)
    return SturmChain(tuple(chain))


def variations_at_infinity(chain: SturmChain, direction: int) -> int:
    if direction not in (-1, 1):
        raise ValueError("direction must be -1 or +1")
    return _count_variations(chain.signs(direction))


def nu(p: RatPoly, q: RatPoly, log: Optional[list] = None) -> int:
    chain = canonical_sturm(p, q)
    if log is not None:
        log.append(chain)
    return chain.nu


def tarski_query(p: RatPoly, q: RatPoly, log: Optional[list] = None) -> int:
    """N(p, q): roots of p where q > 0 minus roots of p where q < 0."""
    if p.is_zero():
        raise ValueError("Tarski query of the zero polynomial is undefined")
    if q.is_zero():
        raise ValueError("Tarski query against the zero polynomial")
    if p.is_constant():
        return 0
    return nu(p, p.derivative() * q, log)


def count_distinct_real_roots(p: RatPoly, log: Optional[list] = None) -> int:
    return tarski_query(p, ONE, log)


def count_sign_set(
    f: RatPoly, constraints: Sequence[RatPoly], log: Optional[list] = None
) -> int:
    """Number of distinct real roots of ``f`` at which every constraint is > 0.

    Averages 2^(k+1) Tarski queries N(f, a_k^{p_k} ... a_0^{p_0}) over
    exponent tuples in {1, 2}^(k+1).
    """
    if f.is_zero():
        raise ValueError("zero polynomial in sign-set count")
    if any(a.is_zero() for a in constraints):
        raise ValueError("zero constraint polynomial in sign-set count")
    if len(constraints) > MAX_SIGN_SET_CONSTRAINTS:
        raise CapacityError(
            f"{len(constraints)} constraints exceed the limit of {MAX_SIGN_SET_CONSTRAINTS}"
        )
    squares = [a * a for a in constraints]
    total = 0
    for exps in itertools.product((1, 2), repeat=len(constraints)):
        q = poly_product([a if e == 1 else sq for a, sq, e in zip(constraints, squares, exps)])
        total += tarski_query(f, q, log)
    count = Fraction(total, 2 ** len(constraints))
    if count.denominator != 1 or count < 0:
        raise ArithmeticError(f"sign-set sum {total} is not a non-negative multiple of 2^{len(constraints)}")
    return int(count)
