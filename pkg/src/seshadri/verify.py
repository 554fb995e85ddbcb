"""Certificate checker.

Deliberately shares nothing with the proving code beyond system parsing:
every rule's side conditions are recomputed here with plain integer
arithmetic (table bounds are cross-multiplied, never divided).
"""

from __future__ import annotations

import hashlib
import json
from collections import Counter

from .systems import InvalidSystemError, parse_system

# Special iff lo_num*m <= lo_den*d and hi_den*d <= hi_num*m - hi_off.
_SPECIAL_ROWS = {
    2: ((1, 1), (1, 2, 2)),
    3: ((3, 2), (1, 2, 2)),
    5: ((2, 1), (2, 5, 2)),
    6: ((12, 5), (2, 5, 2)),
    7: ((21, 8), (3, 8, 2)),
    8: ((48, 17), (6, 17, 2)),
}


def _in_special_row(n: int, d: int, m: int) -> bool:
    row = _SPECIAL_ROWS.get(n)
    if row is None:
        return False
    (lo_num, lo_den), (hi_den, hi_num, hi_off) = row
    return lo_num * m <= lo_den * d and hi_den * d <= hi_num * m - hi_off


def _vdim(d: int, mults: Counter) -> int:
    return (d * (d + 3) - sum(c * m * (m + 1) for m, c in mults.items())) // 2


def _points(text: str) -> tuple[int, Counter]:
    system = parse_system(text)
    return system.degree, Counter({m: n for m, n in system.blocks})


def _quasi(big: int, n: int, m: int) -> Counter:
    c = Counter()
    if big > 0:
        c[big] += 1
    if m > 0 and n > 0:
        c[m] += n
    return c


def _hash(node: dict, child_hashes: list[str]) -> str:
    payload = {
        "system": node["system"],
        "rule": node["rule"],
        "witness": node.get("witness"),
        "children": child_hashes,
    }
    blob = json.dumps(payload, sort_keys=True, separators=(",", ":"))
    return hashlib.sha256(blob.encode()).hexdigest()


def _prop62_ok(d: int, pts: Counter, m: int, n: int) -> bool:
    return 2 <= m <= d and n >= 0 and pts == _quasi(d - m, n, m) and d // m > n // 2


class _Checker:
    def __init__(self) -> None:
        self.problems: list[str] = []

    def fail(self, where: str, msg: str) -> bool:
        self.problems.append(f"{where}: {msg}")
        return False

    def node(self, node, path: str) -> tuple[bool, str | None]:
        """Return (valid, recomputed hash)."""
        if not isinstance(node, dict) or not {"system", "rule"} <= set(node):
            return self.fail(path, "malformed node"), None
        try:
            d, pts = _points(node["system"])
        except (InvalidSystemError, TypeError) as exc:
            return self.fail(path, f"bad system: {exc}"), None
        rule = node["rule"]
        witness = node.get("witness") or {}
        children = node.get("children", [])
        if not isinstance(children, list):
            return self.fail(path, "children must be a list"), None

        child_ok = True
        child_hashes = []
        for i, child in enumerate(children):
            ok, h = self.node(child, f"{path}/{i}")
            child_ok &= ok
            child_hashes.append(h)
        if None in child_hashes:
            return False, None
        recomputed = _hash(node, child_hashes)
        ok = child_ok
        if node.get("hash") != recomputed:
            ok = self.fail(path, "hash mismatch")

        where = f"{path} [{rule}] {node['system']}"
        if rule == "cor34-split":
            ok &= self._split(where, d, pts, witness, children)
        elif children:
            ok = self.fail(where, "leaf rule with children")
        else:
            ok &= self._leaf(where, rule, d, pts, witness)
        return ok, recomputed

    def _leaf(self, where, rule, d, pts, witness) -> bool:
        if rule == "no-points":
            return not pts or self.fail(where, "system has points")
        if rule == "mult-one":
            return (bool(pts) and max(pts) <= 1) or self.fail(where, "multiplicity above one")
        if rule == "table-absent" or rule.startswith("table-n"):
            if len(pts) != 1:
                return self.fail(where, "table rules need a homogeneous system")
            ((m, n),) = pts.items()
            if n > 9:
                return self.fail(where, "table covers at most nine points")
            if m == 1:
                # mult-one takes precedence, so each system has one canonical leaf rule
                return self.fail(where, "simple points are certified by mult-one")
            if rule == "table-absent":
                return not _in_special_row(n, d, m) or self.fail(where, "system is in a special row")
            if rule != f"table-n{n}":
                return self.fail(where, f"row {rule} does not match n={n}")
            return _in_special_row(n, d, m) or self.fail(where, "outside the row's range")
        if rule == "prop62":
            m, n = witness.get("m"), witness.get("n")
            if not isinstance(m, int) or not isinstance(n, int):
                return self.fail(where, "witness needs integers m, n")
            return _prop62_ok(d, pts, m, n) or self.fail(where, "q > h criterion not met")
        if rule in ("cor63+prop62", "cor63+mult-one"):
            return self._cor63(where, rule, d, pts, witness)
        return self.fail(where, f"unknown rule {rule!r}")

    def _cor63(self, where, rule, d, pts, witness) -> bool:
        m, n = witness.get("m"), witness.get("n")
        if not isinstance(m, int) or not isinstance(n, int) or m < 2 or n < 0:
            return self.fail(where, "witness needs integers m >= 2, n >= 0")
        if pts != _quasi(d - m + 1, n, m) or d - m + 1 < 0:
            return self.fail(where, "system is not L_d(1^{d-m+1}, n^m)")
        d2, big2 = d - n, d - n - m + 1
        if d2 < 0 or big2 < 0:
            return self.fail(where, "reduced parameters negative")
        reduced = _quasi(big2, n, m - 1)
        if _vdim(d2, reduced) < 0:
            return self.fail(where, "reduced system is empty")
        if rule == "cor63+mult-one":
            return (not reduced or max(reduced) <= 1) or self.fail(where, "reduced system not simple points")
        inner = witness.get("inner") or {}
        m2, n2 = inner.get("m"), inner.get("n")
        if not isinstance(m2, int) or not isinstance(n2, int):
            return self.fail(where, "witness needs inner m, n")
        return _prop62_ok(d2, reduced, m2, n2) or self.fail(where, "reduced system fails q > h")

    def _split(self, where, d, pts, witness, children) -> bool:
        if len(pts) != 1:
            return self.fail(where, "split needs a homogeneous system")
        ((m, n),) = pts.items()
        k, b = witness.get("k"), witness.get("b")
        if not isinstance(k, int) or not isinstance(b, int):
            return self.fail(where, "witness needs integers k, b")
        if not (0 < k < d and 0 < b < n):
            return self.fail(where, "need 0 < k < d and 0 < b < n")
        if len(children) != 2:
            return self.fail(where, "split needs exactly two children")
        expected = [(d - k - 1, _quasi(0, n - b, m)), (d, _quasi(d - k + 1, b, m))]
        ok = True
        for i, (child, (cd, cpts)) in enumerate(zip(children, expected)):
            got_d, got_pts = _points(child["system"])
            if (got_d, got_pts) != (cd, cpts):
                ok = self.fail(where, f"child {i} has the wrong system")
            elif _vdim(cd, cpts) < 0:
                ok = self.fail(where, f"child {i} is empty")
            if child["rule"].startswith("table-n"):
                ok = self.fail(where, f"child {i} claims speciality")
        return ok


def certificate_problems(cert) -> list[str]:
    """Diagnostics for a certificate (object with ``to_json`` or its JSON dict)."""
    node = cert.to_json() if hasattr(cert, "to_json") else cert
    checker = _Checker()
    try:
        ok, _ = checker.node(node, "root")
    except (KeyError, TypeError, ValueError, AttributeError) as exc:
        checker.problems.append(f"root: malformed certificate ({exc})")
        ok = False
    if not ok and not checker.problems:
        checker.problems.append("root: invalid")
    return checker.problems


def verify_certificate(cert) -> bool:
    return not certificate_problems(cert)
