"""Quasi-homogeneous systems: one point of large multiplicity plus n equal points.

Here ``L_d(1^a, n^m)`` is read as one point of multiplicity ``a`` and ``n``
points of multiplicity ``m``.  Two Cremona-based rules are available:

* the *q > h criterion* for ``L_d(1^{d-m}, n^m)``, ``2 <= m <= d``: write
  ``d = q*m + mu`` and ``n = 2*h + eps``; if ``q > h`` the system is non-empty
  and non-special.  Silence otherwise.
* the *line-splitting reduction* ``L_d(1^{d-m+1}, n^m) -> L_{d-n}(1^{d-n-m+1}, n^{m-1})``,
  which preserves non-emptiness and non-speciality from right to left.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterator

from .classification import SpecialityVerdict, Tag, multiplicity_one_rule
from .systems import LinearSystem, canonicalize, expected_dimension


class RuleInapplicableError(ValueError):
    pass


@dataclass(frozen=True)
class CremonaParams:
    q: int
    mu: int
    h: int
    eps: int

    @classmethod
    def from_dnm(cls, d: int, n: int, m: int) -> "CremonaParams":
        q, mu = divmod(d, m)
        h, eps = divmod(n, 2)
        return cls(q, mu, h, eps)


def quasi_system(d: int, big: int, n: int, m: int) -> LinearSystem:
    """L_d(1^big, n^m): one point of multiplicity ``big`` and ``n`` of ``m``."""
    return canonicalize([(big, 1), (m, n)], d)


def prop62_system(d: int, n: int, m: int) -> LinearSystem:
    return quasi_system(d, d - m, n, m)


def prop62_test(d: int, n: int, m: int, system: LinearSystem | None = None) -> SpecialityVerdict:
    """q > h criterion for L_d(1^{d-m}, n^m).

    Pass ``system`` to have its shape checked against ``(d, n, m)``.
    """
    if not 2 <= m <= d or n < 0:
        raise RuleInapplicableError(f"need 2 <= m <= d and n >= 0, got d={d}, n={n}, m={m}")
    if system is not None and system != prop62_system(d, n, m):
        raise RuleInapplicableError(f"{system} is not L_{d}(1^{d - m}, {n}^{m})")
    params = CremonaParams.from_dnm(d, n, m)
    if params.q > params.h:
        return SpecialityVerdict(
            Tag.NON_SPECIAL,
            "prop62",
            {"m": m, "n": n, "q": params.q, "h": params.h, "nonempty": True},
        )
    return SpecialityVerdict(Tag.OUT_OF_SCOPE)


def cor63_reduce(d: int, n: int, m: int) -> LinearSystem:
    """L_d(1^{d-m+1}, n^m) -> L_{d-n}(1^{d-n-m+1}, n^{m-1})."""
    if m < 2 or n < 0 or m > d + 1:
        raise RuleInapplicableError(f"need 2 <= m <= d+1 and n >= 0, got d={d}, n={n}, m={m}")
    if d - n < 0 or d - n - m + 1 < 0:
        raise RuleInapplicableError(f"reduced parameters negative for d={d}, n={n}, m={m}")
    return quasi_system(d - n, d - n - m + 1, n, m - 1)


def _split_off_big(system: LinearSystem, big: int, m: int) -> int | None:
    """If ``system`` is one point of mult ``big`` plus n points of mult ``m``, return n."""
    rest = dict((mult, count) for mult, count in system.blocks)
    if big > 0:
        if rest.get(big, 0) < 1:
            return None
        rest[big] -= 1
        if rest[big] == 0:
            del rest[big]
    if not rest:
        return 0
    if set(rest) != {m}:
        return None
    return rest[m]


def prop62_shapes(system: LinearSystem) -> Iterator[tuple[int, int]]:
    """All ``(n, m)`` with ``system == L_d(1^{d-m}, n^m)``, ``m`` ascending."""
    d = system.degree
    for m in range(2, d + 1):
        n = _split_off_big(system, d - m, m)
        if n is not None:
            yield n, m


def cor63_shapes(system: LinearSystem) -> Iterator[tuple[int, int]]:
    """All ``(n, m)`` with ``system == L_d(1^{d-m+1}, n^m)`` and a valid reduction."""
    d = system.degree
    for m in range(2, d + 2):
        n = _split_off_big(system, d - m + 1, m)
        if n is not None and d - n - m + 1 >= 0:
            yield n, m


def _prop62_any(system: LinearSystem) -> SpecialityVerdict:
    for n, m in prop62_shapes(system):
        verdict = prop62_test(system.degree, n, m)
        if verdict.tag is Tag.NON_SPECIAL:
            return verdict
    return SpecialityVerdict(Tag.OUT_OF_SCOPE)


def certify_reduced(reduced: LinearSystem) -> SpecialityVerdict:
    """Certify the output of a line-splitting reduction; no further reductions."""
    verdict = multiplicity_one_rule(reduced)
    if verdict.decided:
        return verdict
    return _prop62_any(reduced)


def certify_quasi(system: LinearSystem) -> SpecialityVerdict:
    """Dispatch a system to multiplicity one, the q > h criterion, or one reduction.

    NonSpecial verdicts from the reduction route require the reduced system
    to be non-empty as well as non-special.
    """
    verdict = multiplicity_one_rule(system)
    if verdict.decided:
        return verdict
    verdict = _prop62_any(system)
    if verdict.decided:
        return verdict
    d = system.degree
    for n, m in cor63_shapes(system):
        reduced = cor63_reduce(d, n, m)
        sub = certify_reduced(reduced)
        if sub.tag is Tag.NON_SPECIAL and expected_dimension(reduced) >= 0:
            detail = {"m": m, "n": n, "reduced": reduced.text()}
            if sub.rule == "prop62":
                detail["inner"] = {"m": sub.detail["m"], "n": sub.detail["n"]}
                return SpecialityVerdict(Tag.NON_SPECIAL, "cor63+prop62", detail)
            return SpecialityVerdict(Tag.NON_SPECIAL, "cor63+mult-one", detail)
    return SpecialityVerdict(Tag.OUT_OF_SCOPE)
