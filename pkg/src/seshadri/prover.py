"""Memoized recursive prover for non-speciality of plane linear systems.

The recursive step is the degeneration splitting: ``L_d(n^m)`` is non-empty
and non-special as soon as, for some ``0 < k < d`` and ``0 < b < n``, both

* ``L_{d-k-1}((n-b)^m)`` and
* ``L_d(1^{d-k+1}, b^m)`` (one point of multiplicity ``d-k+1``, ``b`` of ``m``)

are non-empty and non-special.  The first is proved recursively, the second
only through the quasi-homogeneous rules in :mod:`seshadri.quasi`.  Pairs are
tried in lexicographic order and the first success is kept.
"""

from __future__ import annotations

import hashlib
import json
import logging
import os
import threading
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass

from .certificate import Certificate, canonical_json
from .classification import Tag, classify_homogeneous_upto9, multiplicity_one_rule
from .quasi import certify_quasi, quasi_system
from .systems import LinearSystem, expected_dimension, parse_system
from .verify import verify_certificate

log = logging.getLogger(__name__)

DEFAULT_MAX_DEPTH = 64

CERTIFIED = "certified"
SPECIAL = "special"
EMPTY = "empty"
UNKNOWN = "unknown"


@dataclass(frozen=True)
class ProofOutcome:
    tag: str
    certificate: Certificate | None = None
    rule: str | None = None
    depth: int | None = None

    @property
    def decided(self) -> bool:
        return self.tag != UNKNOWN

    @property
    def nonempty_nonspecial(self) -> bool:
        return self.tag == CERTIFIED

    def to_json(self) -> dict:
        out: dict = {"tag": self.tag}
        if self.rule is not None:
            out["rule"] = self.rule
        if self.depth is not None:
            out["depth"] = self.depth
        if self.certificate is not None:
            out["certificate"] = self.certificate.to_json()
        return out

    @classmethod
    def from_json(cls, obj: dict) -> "ProofOutcome":
        tag = obj["tag"]
        if tag not in (CERTIFIED, SPECIAL, EMPTY, UNKNOWN):
            raise ValueError(f"unknown outcome tag {tag!r}")
        cert = obj.get("certificate")
        return cls(
            tag=tag,
            certificate=Certificate.from_json(cert) if cert is not None else None,
            rule=obj.get("rule"),
            depth=obj.get("depth"),
        )


class MemoCache:
    """Thread-safe map from canonical system text to :class:`ProofOutcome`.

    Decided outcomes are insert-once (first writer wins).  An Unknown entry
    is replaced by any decided outcome, or by an Unknown from a deeper search.
    """

    def __init__(self) -> None:
        self._data: dict[str, ProofOutcome] = {}
        self._lock = threading.Lock()

    def __len__(self) -> int:
        return len(self._data)

    def __contains__(self, key: str) -> bool:
        return key in self._data

    def __eq__(self, other) -> bool:
        if not isinstance(other, MemoCache):
            return NotImplemented
        return self.snapshot() == other.snapshot()

    def get(self, system: LinearSystem) -> ProofOutcome | None:
        return self._data.get(system.text())

    def put(self, system: LinearSystem, outcome: ProofOutcome) -> ProofOutcome:
        """Insert and return whichever outcome the cache now holds for ``system``."""
        key = system.text()
        with self._lock:
            old = self._data.get(key)
            if old is None or (
                not old.decided
                and (outcome.decided or (outcome.depth or 0) > (old.depth or 0))
            ):
                self._data[key] = outcome
                return outcome
            return old

    def snapshot(self) -> dict[str, ProofOutcome]:
        with self._lock:
            return dict(self._data)


def _line_hash(system_text: str, outcome: dict) -> str:
    return hashlib.sha256(canonical_json({"system": system_text, "outcome": outcome}).encode()).hexdigest()


def cache_store(cache: MemoCache, path) -> None:
    """Write one JSON object per line, sorted by key for stable files."""
    items = sorted(cache.snapshot().items())
    with open(path, "w", encoding="utf-8") as fh:
        for key, outcome in items:
            payload = outcome.to_json()
            fh.write(json.dumps({"system": key, "outcome": payload, "hash": _line_hash(key, payload)}, sort_keys=True))
            fh.write("\n")


def cache_load(path) -> MemoCache:
    """Read a cache file; bad or unverifiable lines are skipped with a warning."""
    cache = MemoCache()
    try:
        with open(path, encoding="utf-8") as fh:
            lines = fh.readlines()
    except OSError as exc:
        log.warning("cannot read cache %s (%s); starting empty", path, exc)
        return cache
    for lineno, line in enumerate(lines, start=1):
        if not line.strip():
            continue
        try:
            entry = json.loads(line)
            key, payload = entry["system"], entry["outcome"]
            if entry.get("hash") != _line_hash(key, payload):
                raise ValueError("hash mismatch")
            system = parse_system(key)
            if system.text() != key:
                raise ValueError("key is not canonical")
            outcome = ProofOutcome.from_json(payload)
            if outcome.certificate is not None and not (
                outcome.certificate.system == system and verify_certificate(outcome.certificate)
            ):
                raise ValueError("certificate does not verify")
        except (ValueError, KeyError, TypeError) as exc:
            log.warning("%s:%d: skipping cache entry (%s)", path, lineno, exc)
            continue
        cache.put(system, outcome)
    return cache


def default_cache_path() -> str | None:
    return os.environ.get("SESHADRI_CACHE") or None


def _leaf(system: LinearSystem, rule: str, witness: dict | None = None) -> ProofOutcome:
    cert = Certificate(system, rule, witness)
    if rule.startswith("table-n"):
        return ProofOutcome(SPECIAL, cert, rule=rule)
    tag = CERTIFIED if expected_dimension(system) >= 0 else EMPTY
    return ProofOutcome(tag, cert, rule=rule)


def _quasi_witness(detail: dict) -> dict:
    witness = {"m": detail["m"], "n": detail["n"]}
    if "inner" in detail:
        witness["inner"] = dict(detail["inner"])
    return witness


def base_outcome(system: LinearSystem) -> ProofOutcome | None:
    """Outcome from the non-recursive rules, or None when they are all silent."""
    verdict = multiplicity_one_rule(system)
    if verdict.decided:
        return _leaf(system, verdict.rule)
    if system.is_homogeneous():
        ((m, n),) = system.blocks
        verdict = classify_homogeneous_upto9(system.degree, n, m)
        if verdict.decided:
            return _leaf(system, verdict.rule)
    verdict = certify_quasi(system)
    if verdict.decided:
        return _leaf(system, verdict.rule, _quasi_witness(verdict.detail))
    return None


def prove(
    system: LinearSystem,
    max_depth: int = DEFAULT_MAX_DEPTH,
    cache: MemoCache | None = None,
    threads: int = 1,
) -> ProofOutcome:
    """Decide ``system`` with the stated rules; Unknown when they do not suffice.

    The recursion strictly lowers the degree, so any ``max_depth`` at least
    half the degree never cuts a search short.
    """
    if max_depth < 0:
        raise ValueError("max_depth must be >= 0")
    if cache is None:
        cache = MemoCache()
    hit = cache.get(system)
    if hit is not None and (hit.decided or (hit.depth or 0) >= max_depth):
        return hit

    outcome = base_outcome(system)
    if outcome is None:
        outcome = ProofOutcome(UNKNOWN, depth=max_depth)
        if system.is_homogeneous():
            ((m, n),) = system.blocks
            if n >= 2 and m >= 2 and system.degree >= 2:
                outcome = split_search(system.degree, n, m, max_depth, cache, threads)
    return cache.put(system, outcome)


def _second_child(d: int, k: int, b: int, m: int) -> Certificate | None:
    """Certificate for L_d(1^{d-k+1}, b^m) if it is non-empty and non-special."""
    child = quasi_system(d, d - k + 1, b, m)
    if expected_dimension(child) < 0:
        return None
    outcome = base_outcome(child)
    if outcome is None or outcome.tag != CERTIFIED:
        return None
    if outcome.rule.startswith("table-"):
        # only multiplicity one and the Cremona rules certify this child
        return None
    return outcome.certificate


def _candidates(d: int, n: int, m: int):
    """Pairs (k, b) whose cheap side conditions hold, in lexicographic order."""
    for k in range(1, d):
        for b in range(1, n):
            first = LinearSystem.homogeneous(d - k - 1, n - b, m)
            if expected_dimension(first) < 0:
                continue
            second = _second_child(d, k, b, m)
            if second is not None:
                yield k, b, first, second


def split_search(
    d: int,
    n: int,
    m: int,
    max_depth: int,
    cache: MemoCache,
    threads: int = 1,
) -> ProofOutcome:
    """First (k, b) in lexicographic order for which both split pieces are certified."""
    if n < 2 or m < 2 or d < 2:
        raise ValueError(f"split search needs n, m, d >= 2; got d={d}, n={n}, m={m}")
    if max_depth == 0:
        return ProofOutcome(UNKNOWN, depth=0)
    root = LinearSystem.homogeneous(d, n, m)
    candidates = list(_candidates(d, n, m))

    def attempt(cand):
        first = cand[2]
        return prove(first, max_depth - 1, cache, 1)

    if threads > 1 and len(candidates) > 1:
        with ThreadPoolExecutor(max_workers=threads) as pool:
            results = list(pool.map(attempt, candidates))
    else:
        results = []
        for cand in candidates:
            res = attempt(cand)
            results.append(res)
            if res.tag == CERTIFIED:
                break

    for (k, b, _, second), res in zip(candidates, results):
        if res.tag == CERTIFIED:
            cert = Certificate(root, "cor34-split", {"k": k, "b": b}, (res.certificate, second))
            tag = CERTIFIED if expected_dimension(root) >= 0 else EMPTY
            return ProofOutcome(tag, cert, rule="cor34-split")
    return ProofOutcome(UNKNOWN, depth=max_depth)
