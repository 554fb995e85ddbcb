"""Certified lower bounds for the multi-point Seshadri constant of H on P^2.

If ``L_d(r^{m+1})`` has its expected dimension and that dimension is >= 0,
then ``m/d <= eps(H; x_1..x_r)`` for ``r`` general points.  The search below
certifies such systems one degree at a time and keeps the best ratio.  The
upper bound ``eps <= 1/sqrt(r)`` is only ever used squared.
"""

from __future__ import annotations

import enum
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field
from fractions import Fraction
from math import isqrt

from . import oracle as _oracle
from .prover import CERTIFIED, MemoCache, prove
from .surfaces import nef_square_check
from .systems import LinearSystem, expected_dimension


class Backend(str, enum.Enum):
    RECURSION = "recursion"
    ORACLE = "oracle"
    BOTH = "both"


class OutOfScopeError(ValueError):
    pass


class BackendDisagreementError(RuntimeError):
    pass


@dataclass(frozen=True)
class BoundResult:
    r: int
    lower_bound: Fraction
    witness: tuple[int, int] | None
    backend: str
    certificate_ref: dict | None = None
    # eps <= sup{p/q : p^2 r <= q^2}, stored as (1, r)
    upper_bound_note: tuple[int, int] = (1, 0)
    d_max: int = 0

    def __post_init__(self) -> None:
        if self.upper_bound_note == (1, 0):
            object.__setattr__(self, "upper_bound_note", (1, self.r))

    def to_json(self) -> dict:
        return {
            "r": self.r,
            "d_max": self.d_max,
            "lower_bound": f"{self.lower_bound.numerator}/{self.lower_bound.denominator}",
            "witness": None if self.witness is None else {"d": self.witness[0], "m": self.witness[1]},
            "witness_system": None if self.witness is None else witness_system(self.r, *self.witness).text(),
            "backend": self.backend,
            "certificate_ref": self.certificate_ref,
            "upper_bound": f"eps <= 1/sqrt({self.r})",
            "consistent": check_bound_consistency(self),
        }


def witness_system(r: int, d: int, m: int) -> LinearSystem:
    """L_d(r^{m+1})."""
    return LinearSystem.homogeneous(d, r, m + 1)


def max_uniform_multiplicity(d: int, r: int) -> int:
    """Largest m >= 0 with r*m*(m+1) <= d*(d+3)."""
    if d < 0 or r < 1:
        raise ValueError(f"need d >= 0 and r >= 1, got d={d}, r={r}")
    budget = d * (d + 3)
    m = isqrt(budget // r)
    while r * m * (m + 1) > budget:
        m -= 1
    while r * (m + 1) * (m + 2) <= budget:
        m += 1
    return m


def check_bound_consistency(result: BoundResult) -> bool:
    """Recheck from scratch: bound below 1/sqrt(r), witness of expected dimension >= 0."""
    if result.lower_bound < 0 or not nef_square_check(result.r, result.lower_bound):
        return False
    if result.witness is None:
        return result.lower_bound == 0
    d, m = result.witness
    if d <= 0 or m <= 0 or Fraction(m, d) != result.lower_bound:
        return False
    return expected_dimension(witness_system(result.r, d, m)) >= 0


def _certify(system: LinearSystem, backend: Backend, cache: MemoCache, prime: int, trials: int, seed: int):
    """Return a certificate reference dict, or None if the backend cannot certify."""
    ref: dict = {}
    rec = None
    if backend in (Backend.RECURSION, Backend.BOTH):
        rec = prove(system, cache=cache)
        if rec.tag == CERTIFIED:
            ref["certificate"] = rec.certificate.hash
    if backend in (Backend.ORACLE, Backend.BOTH):
        report = _oracle.actual_dimension(system, prime, trials, seed)
        if report.full_rank and report.expected_dim >= 0:
            ref["oracle_report"] = report.digest()
            ref["rank"] = report.rank_max
            ref["matrix"] = [report.rows, report.cols]
            ref["prime"] = prime
            ref["seed"] = seed
        elif rec is not None and rec.tag == CERTIFIED:
            raise BackendDisagreementError(
                f"{system}: recursion certifies but oracle rank {report.rank_max} < {report.rows}"
            )
    if backend is Backend.RECURSION:
        return ref or None
    return ref if "oracle_report" in ref else None


def _best_for_degree(d, r, backend, cache, floor, prime, trials, seed):
    """Best certified (m, ref) for degree ``d`` with m/d >= ``floor``, or None."""
    m = max_uniform_multiplicity(d, r) - 1
    while m >= 1 and Fraction(m, d) >= floor:
        system = witness_system(r, d, m)
        ref = _certify(system, backend, cache, prime, trials, seed)
        if ref is not None:
            return m, ref
        m -= 1
    return None


def certified_lower_bound_search(
    r: int,
    d_max: int,
    backend: Backend | str = Backend.ORACLE,
    cache: MemoCache | None = None,
    prime: int = _oracle.DEFAULT_PRIME,
    trials: int = _oracle.DEFAULT_TRIALS,
    seed: int = _oracle.DEFAULT_SEED,
    threads: int = 1,
) -> BoundResult:
    """Best certified m/d over d <= d_max; ties go to the smaller degree.

    Degrees whose best conceivable ratio cannot beat the current best are
    skipped, which leaves the answer unchanged.
    """
    if r <= 9:
        raise OutOfScopeError(f"r = {r}: the lower-bound theorem needs r > 9")
    if d_max < 1:
        raise ValueError("d_max must be >= 1")
    backend = Backend(backend)
    if cache is None:
        cache = MemoCache()

    # candidate degrees, best conceivable ratio first
    ceilings = []
    for d in range(1, d_max + 1):
        m = max_uniform_multiplicity(d, r) - 1
        if m >= 1:
            ceilings.append((Fraction(m, d), d))
    ceilings.sort(key=lambda t: (-t[0], t[1]))

    best: tuple[Fraction, int, int, dict] | None = None

    def better(ratio, d):
        return best is None or ratio > best[0] or (ratio == best[0] and d < best[1])

    if threads > 1:
        # evaluate every degree, reduce deterministically
        with ThreadPoolExecutor(max_workers=threads) as pool:
            found = list(pool.map(
                lambda t: _best_for_degree(t[1], r, backend, cache, Fraction(0), prime, trials, seed),
                ceilings,
            ))
        for (_, d), res in zip(ceilings, found):
            if res is not None and better(Fraction(res[0], d), d):
                best = (Fraction(res[0], d), d, res[0], res[1])
    else:
        for ceiling, d in ceilings:
            if best is not None and not better(ceiling, d):
                continue
            floor = best[0] if best is not None else Fraction(0)
            res = _best_for_degree(d, r, backend, cache, floor, prime, trials, seed)
            if res is not None and better(Fraction(res[0], d), d):
                best = (Fraction(res[0], d), d, res[0], res[1])

    if best is None:
        return BoundResult(r, Fraction(0), None, backend.value, None, d_max=d_max)
    ratio, d, m, ref = best
    return BoundResult(r, ratio, (d, m), backend.value, ref, d_max=d_max)


@dataclass(frozen=True)
class BarkowskiTarget:
    s: int
    # offset k -> sqrt(r)/a for r = s^2 + k, k = 1..4
    ratios: dict[int, Fraction] = field(default_factory=dict)
    targets: dict[int, Fraction] = field(default_factory=dict)
    fallback: Fraction = Fraction(0)
    fallback_offsets: tuple[int, ...] = ()
    note: str | None = None

    def rows(self) -> list[tuple[int, Fraction]]:
        """(r, lower-bound target) for offsets 1 .. 2s+1."""
        out = [(self.s ** 2 + k, self.targets[k]) for k in sorted(self.targets) if k <= 2 * self.s + 1]
        out += [(self.s ** 2 + k, self.fallback) for k in self.fallback_offsets]
        return out


def barkowski_targets(s: int) -> BarkowskiTarget:
    """Certified ratios for r = s^2+1 .. s^2+4 and the 1/(s+1) fallback beyond."""
    if s < 1:
        raise ValueError("s must be >= 1")
    ratios = {
        1: s + Fraction(1, 2),
        2: s + Fraction(1, 2),
        3: s + Fraction(2, 3),
        4: s + Fraction(5, 6),
    }
    targets = {k: 1 / v for k, v in ratios.items()}
    note = None
    if s ** 2 + 1 <= 9:
        note = "some r here are <= 9, where the lower-bound theorem does not apply"
    return BarkowskiTarget(
        s=s,
        ratios=ratios,
        targets=targets,
        fallback=Fraction(1, s + 1),
        fallback_offsets=tuple(range(5, 2 * s + 2)),
        note=note,
    )
