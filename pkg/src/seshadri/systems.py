"""Plane linear systems L_d(n_1^{m_1}, ...) and their dimension counts.

Text notation follows the classical convention ``n^m``: ``n`` general points
of multiplicity ``m``.  So ``"d: 35; mults: 10^11"`` is the system of degree 35
curves with ten points of multiplicity eleven.  Internally a block is stored
as a ``(multiplicity, count)`` pair.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from typing import Iterable


class InvalidSystemError(ValueError):
    """Raised for negative degrees, multiplicities or counts, or bad syntax."""


@dataclass(frozen=True, order=True)
class LinearSystem:
    """Degree ``d`` plus blocks of ``(multiplicity, count)``, canonical form.

    Canonical means: multiplicities strictly decreasing, no zero entries.
    Build instances through :func:`canonicalize` (or :meth:`of`).
    """

    degree: int
    blocks: tuple[tuple[int, int], ...] = ()

    def __post_init__(self) -> None:
        if self.degree < 0:
            raise InvalidSystemError(f"negative degree {self.degree}")
        prev = None
        for mult, count in self.blocks:
            if mult <= 0 or count <= 0:
                raise InvalidSystemError(f"non-canonical block ({mult}, {count})")
            if prev is not None and mult >= prev:
                raise InvalidSystemError("blocks must have strictly decreasing multiplicity")
            prev = mult

    @classmethod
    def of(cls, degree: int, *pairs: tuple[int, int]) -> "LinearSystem":
        """Shorthand: ``LinearSystem.of(10, (2, 12))`` is L_10(12^2)."""
        return canonicalize(pairs, degree)

    @classmethod
    def homogeneous(cls, degree: int, n: int, m: int) -> "LinearSystem":
        """L_d(n^m): ``n`` points of multiplicity ``m``."""
        return canonicalize([(m, n)], degree)

    @property
    def num_points(self) -> int:
        return sum(count for _, count in self.blocks)

    @property
    def multiplicities(self) -> list[int]:
        """All point multiplicities, largest first, one entry per point."""
        return [mult for mult, count in self.blocks for _ in range(count)]

    def count_of(self, mult: int) -> int:
        for m, n in self.blocks:
            if m == mult:
                return n
        return 0

    def is_homogeneous(self) -> bool:
        return len(self.blocks) == 1

    def text(self) -> str:
        """Canonical text serialization, e.g. ``"d: 8; mults: 2^3, 7^1"``."""
        mults = ", ".join(f"{n}^{m}" for m, n in self.blocks)
        return f"d: {self.degree}; mults: {mults}"

    def __str__(self) -> str:
        inner = ",".join(f"{n}^{m}" for m, n in self.blocks)
        return f"L_{self.degree}({inner})"


def canonicalize(raw: Iterable[tuple[int, int]], degree: int) -> LinearSystem:
    """Merge equal multiplicities, drop zeros, sort by decreasing multiplicity.

    ``raw`` holds ``(multiplicity, count)`` pairs.
    """
    if degree < 0:
        raise InvalidSystemError(f"negative degree {degree}")
    merged: dict[int, int] = {}
    for mult, count in raw:
        mult, count = int(mult), int(count)
        if mult < 0 or count < 0:
            raise InvalidSystemError(f"negative entry in block ({mult}, {count})")
        if mult == 0 or count == 0:
            continue
        merged[mult] = merged.get(mult, 0) + count
    blocks = tuple(sorted(merged.items(), reverse=True))
    return LinearSystem(int(degree), blocks)


def conditions_count(system: LinearSystem) -> int:
    """Number of linear conditions imposed: sum of n * m(m+1)/2 over blocks."""
    return sum(n * m * (m + 1) // 2 for m, n in system.blocks)


def num_coefficients(degree: int) -> int:
    """Monomials of degree ``degree`` in three variables."""
    return (degree + 1) * (degree + 2) // 2


def virtual_dimension(system: LinearSystem) -> int:
    d = system.degree
    return d * (d + 3) // 2 - conditions_count(system)


def expected_dimension(system: LinearSystem) -> int:
    return max(-1, virtual_dimension(system))


_SYSTEM_RE = re.compile(r"\s*d\s*:\s*(?P<d>-?\d+)\s*(?:;\s*mults\s*:\s*(?P<mults>.*?))?\s*;?\s*$")
_BLOCK_RE = re.compile(r"\s*(-?\d+)\s*\^\s*(-?\d+)\s*$")


def parse_system(text: str) -> LinearSystem:
    """Parse ``"d: <int>; mults: <n>^<m>, ..."`` into a canonical system.

    Each block ``n^m`` means ``n`` points of multiplicity ``m``.  An empty or
    missing ``mults`` part gives the complete system of degree ``d``.
    """
    match = _SYSTEM_RE.match(text)
    if match is None:
        pos = _first_bad_position(text)
        raise InvalidSystemError(f"cannot parse system at position {pos}: {text!r}")
    degree = int(match.group("d"))
    raw = []
    mults = match.group("mults")
    if mults and mults.strip():
        offset = match.start("mults")
        for part in mults.split(","):
            block = _BLOCK_RE.match(part)
            if block is None:
                raise InvalidSystemError(
                    f"bad block {part.strip()!r} at position {offset}; expected <count>^<multiplicity>"
                )
            count, mult = int(block.group(1)), int(block.group(2))
            raw.append((mult, count))
            offset += len(part) + 1
    return canonicalize(raw, degree)


def _first_bad_position(text: str) -> int:
    prefix = "d:"
    stripped = text.lstrip()
    lead = len(text) - len(stripped)
    if not stripped.startswith(prefix):
        return lead
    for i, ch in enumerate(stripped[len(prefix):], start=lead + len(prefix)):
        if not (ch.isspace() or ch.isdigit() or ch == "-"):
            return i
    return len(text)
