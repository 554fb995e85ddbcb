"""Speciality of homogeneous systems with at most nine points, plus base rules."""

from __future__ import annotations

import enum
from dataclasses import dataclass
from fractions import Fraction

from .systems import LinearSystem, expected_dimension


class Tag(str, enum.Enum):
    NON_SPECIAL = "NonSpecial"
    SPECIAL = "Special"
    OUT_OF_SCOPE = "OutOfTableScope"


@dataclass(frozen=True)
class SpecialityVerdict:
    tag: Tag
    rule: str | None = None
    detail: dict | None = None

    @property
    def decided(self) -> bool:
        return self.tag is not Tag.OUT_OF_SCOPE


class IndeterminateError(Exception):
    """A verdict was out of the rule's scope, so non-emptiness is undecided."""


# (lower, upper) bounds on d, as functions of m, for which L_d(n^m) is special.
SPECIAL_RANGES: dict[int, tuple] = {
    2: (lambda m: Fraction(m), lambda m: Fraction(2 * m - 2)),
    3: (lambda m: Fraction(3 * m, 2), lambda m: Fraction(2 * m - 2)),
    5: (lambda m: Fraction(2 * m), lambda m: Fraction(5 * m - 2, 2)),
    6: (lambda m: Fraction(12 * m, 5), lambda m: Fraction(5 * m - 2, 2)),
    7: (lambda m: Fraction(21 * m, 8), lambda m: Fraction(8 * m - 2, 3)),
    8: (lambda m: Fraction(48 * m, 17), lambda m: Fraction(17 * m - 2, 6)),
}


def classify_homogeneous_upto9(d: int, n: int, m: int) -> SpecialityVerdict:
    """Verdict for L_d(n^m) with ``1 <= n <= 9`` from the classification table.

    Outside ``1..9`` the table says nothing and the verdict is OutOfTableScope.
    """
    if not 1 <= n <= 9:
        return SpecialityVerdict(Tag.OUT_OF_SCOPE)
    if d < 0 or m < 1:
        raise ValueError(f"need d >= 0 and m >= 1, got d={d}, m={m}")
    bounds = SPECIAL_RANGES.get(n)
    if bounds is not None:
        lo, hi = bounds
        if lo(m) <= d <= hi(m):
            return SpecialityVerdict(Tag.SPECIAL, f"table-n{n}")
    return SpecialityVerdict(Tag.NON_SPECIAL, "table-absent")


def multiplicity_one_rule(system: LinearSystem) -> SpecialityVerdict:
    if not system.blocks:
        return SpecialityVerdict(Tag.NON_SPECIAL, "no-points")
    if all(mult <= 1 for mult, _ in system.blocks):
        return SpecialityVerdict(Tag.NON_SPECIAL, "mult-one")
    return SpecialityVerdict(Tag.OUT_OF_SCOPE)


def classify(system: LinearSystem) -> SpecialityVerdict:
    """Base rules only: multiplicity one, then the n <= 9 homogeneous table."""
    verdict = multiplicity_one_rule(system)
    if verdict.decided:
        return verdict
    if system.is_homogeneous():
        ((m, n),) = system.blocks
        return classify_homogeneous_upto9(system.degree, n, m)
    return SpecialityVerdict(Tag.OUT_OF_SCOPE)


def is_nonempty_nonspecial(system: LinearSystem, verdict: SpecialityVerdict) -> bool:
    """True iff ``verdict`` is NonSpecial and the expected dimension is >= 0.

    Raises :class:`IndeterminateError` on an OutOfTableScope verdict, which
    is not the same thing as False.
    """
    if verdict.tag is Tag.OUT_OF_SCOPE:
        raise IndeterminateError(f"no verdict for {system}")
    return verdict.tag is Tag.NON_SPECIAL and expected_dimension(system) >= 0
