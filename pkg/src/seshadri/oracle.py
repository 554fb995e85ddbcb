"""Brute-force dimension of L_d(...) at random points over a prime field.

Columns of the conditions matrix are the monomials x^a y^b, a + b <= d, of
the affine chart z = 1.  A point P of multiplicity m contributes one row per
Taylor coefficient u^i v^j, i + j < m, of f(P + (u, v)); the entry for x^a y^b
is C(a, i) C(b, j) x^(a-i) y^(b-j).

Rank at a specialization never exceeds the generic rank, so a full-rank
observation certifies non-speciality; a deficit in every trial is only
(strong) probabilistic evidence of speciality.
"""

from __future__ import annotations

import hashlib
import json
import random
from dataclasses import asdict, dataclass, field
from fractions import Fraction
from math import comb

import numpy as np

from .systems import (
    InvalidSystemError,
    LinearSystem,
    conditions_count,
    expected_dimension,
    num_coefficients,
)

DEFAULT_PRIME = 2147483647
DEFAULT_TRIALS = 3
DEFAULT_SEED = 0

# entries stay below 2**31, so a*b fits in int64
_MAX_PRIME = 2**31


class PrimeTooSmallError(ValueError):
    pass


def monomials(d: int) -> list[tuple[int, int]]:
    return [(a, t - a) for t in range(d + 1) for a in range(t, -1, -1)]


def condition_rows(mult: int) -> list[tuple[int, int]]:
    return [(i, t - i) for t in range(mult) for i in range(t, -1, -1)]


def build_conditions_matrix(system: LinearSystem, points, prime: int) -> np.ndarray:
    """Conditions matrix mod ``prime`` with one point per entry of ``system.multiplicities``."""
    mults = system.multiplicities
    if len(points) != len(mults):
        raise InvalidSystemError(f"need {len(mults)} points, got {len(points)}")
    pts = [(int(x) % prime, int(y) % prime) for x, y in points]
    if len(set(pts)) != len(pts):
        raise InvalidSystemError("coincident points")
    d = system.degree
    mons = monomials(d)
    binom = [[comb(a, i) % prime for i in range(d + 1)] for a in range(d + 1)]
    out = np.zeros((conditions_count(system), len(mons)), dtype=np.int64)
    row = 0
    for (x, y), m in zip(pts, mults):
        xp = [pow(x, e, prime) for e in range(d + 1)]
        yp = [pow(y, e, prime) for e in range(d + 1)]
        for i, j in condition_rows(m):
            line = out[row]
            for col, (a, b) in enumerate(mons):
                if a >= i and b >= j:
                    line[col] = binom[a][i] * binom[b][j] % prime * xp[a - i] % prime * yp[b - j] % prime
            row += 1
    return out


def rank_mod_p(matrix: np.ndarray, prime: int) -> int:
    """Rank over GF(prime) by dense Gaussian elimination (``prime < 2**31``)."""
    a = np.array(matrix, dtype=np.int64) % prime
    rows, cols = a.shape
    rank = 0
    for c in range(cols):
        if rank == rows:
            break
        nz = np.nonzero(a[rank:, c])[0]
        if nz.size == 0:
            continue
        piv = rank + nz[0]
        if piv != rank:
            a[[rank, piv]] = a[[piv, rank]]
        inv = pow(int(a[rank, c]), -1, prime)
        a[rank] = a[rank] * inv % prime
        below = a[rank + 1:, c]
        hit = np.nonzero(below)[0] + rank + 1
        if hit.size:
            a[hit] = (a[hit] - a[hit, c][:, None] * a[rank]) % prime
        rank += 1
    return rank


def exact_rank(system: LinearSystem, points) -> int:
    """Rank over the rationals at integer points; only meant for tiny degrees."""
    d = system.degree
    mons = monomials(d)
    rows = []
    for (x, y), m in zip(points, system.multiplicities):
        for i, j in condition_rows(m):
            rows.append([
                Fraction(comb(a, i) * comb(b, j) * x ** (a - i) * y ** (b - j)) if a >= i and b >= j else Fraction(0)
                for a, b in mons
            ])
    rank = 0
    ncols = len(mons)
    for c in range(ncols):
        piv = next((r for r in range(rank, len(rows)) if rows[r][c] != 0), None)
        if piv is None:
            continue
        rows[rank], rows[piv] = rows[piv], rows[rank]
        for r in range(rank + 1, len(rows)):
            f = rows[r][c] / rows[rank][c]
            if f:
                rows[r] = [u - f * v for u, v in zip(rows[r], rows[rank])]
        rank += 1
    return rank


def trial_seed(seed: int, trial: int) -> int:
    digest = hashlib.sha256(f"{seed}:{trial}".encode()).digest()
    return int.from_bytes(digest[:8], "big")


def random_points(count: int, prime: int, rng: random.Random) -> list[tuple[int, int]]:
    seen: set[tuple[int, int]] = set()
    pts = []
    while len(pts) < count:
        p = (rng.randrange(prime), rng.randrange(prime))
        if p not in seen:
            seen.add(p)
            pts.append(p)
    return pts


@dataclass
class OracleReport:
    system: str
    prime: int
    trials: int
    seeds: list[int]
    rows: int
    cols: int
    rank_max: int
    actual_dim_estimate: int
    expected_dim: int
    agrees_with_expected: bool
    full_rank: bool
    semantics: str = field(default="")

    @property
    def certifies_nonspecial(self) -> bool:
        return self.full_rank

    def to_json(self) -> dict:
        return asdict(self)

    def digest(self) -> str:
        blob = json.dumps(self.to_json(), sort_keys=True, separators=(",", ":"))
        return hashlib.sha256(blob.encode()).hexdigest()


def check_prime(system: LinearSystem, prime: int) -> None:
    guard = 2 * system.degree * system.num_points ** 2
    if prime <= guard:
        raise PrimeTooSmallError(f"prime {prime} <= 2*d*(points)^2 = {guard}")
    if prime >= _MAX_PRIME:
        raise PrimeTooSmallError(f"prime {prime} too large for int64 elimination")


def actual_dimension(
    system: LinearSystem,
    prime: int = DEFAULT_PRIME,
    trials: int = DEFAULT_TRIALS,
    seed: int = DEFAULT_SEED,
    stop_at_full_rank: bool = True,
) -> OracleReport:
    """Projective dimension estimate from the best rank over ``trials`` point sets.

    Trial ``t`` draws its points from an RNG seeded by ``(seed, t)``.  With
    ``stop_at_full_rank`` the loop ends once rank reaches min(rows, cols),
    since no later trial can exceed it; ``trials`` in the report counts the
    trials actually run.
    """
    if trials < 1:
        raise ValueError("trials must be >= 1")
    check_prime(system, prime)
    rows, cols = conditions_count(system), num_coefficients(system.degree)
    cap = min(rows, cols)
    seeds: list[int] = []
    rank_max = 0
    for t in range(trials):
        s = trial_seed(seed, t)
        seeds.append(s)
        if rows:
            pts = random_points(system.num_points, prime, random.Random(s))
            rank_max = max(rank_max, rank_mod_p(build_conditions_matrix(system, pts, prime), prime))
        if rank_max == cap and stop_at_full_rank:
            break
    estimate = max(-1, cols - 1 - rank_max)
    expected = expected_dimension(system)
    full = rank_max == cap
    semantics = (
        "non-special certified (full rank observed)"
        if full
        else f"special with probability >= 1 - {len(seeds)}*{rows}/{prime} (heuristic)"
    )
    return OracleReport(
        system=system.text(),
        prime=prime,
        trials=len(seeds),
        seeds=seeds,
        rows=rows,
        cols=cols,
        rank_max=rank_max,
        actual_dim_estimate=estimate,
        expected_dim=expected,
        agrees_with_expected=estimate == expected,
        full_rank=full,
        semantics=semantics,
    )


def speciality_check(
    system: LinearSystem,
    prime: int = DEFAULT_PRIME,
    trials: int = DEFAULT_TRIALS,
    seed: int = DEFAULT_SEED,
) -> bool:
    """True when the observed dimension exceeds the expected one."""
    report = actual_dimension(system, prime, trials, seed)
    return report.actual_dim_estimate > report.expected_dim
