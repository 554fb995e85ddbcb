"""Proof trees for (non-)speciality claims and their JSON form."""

from __future__ import annotations

import hashlib
import json
from dataclasses import dataclass, field

from .systems import LinearSystem, parse_system

# Leaves with these rules claim speciality; every other rule claims non-speciality.
SPECIAL_RULES = frozenset(f"table-n{n}" for n in (2, 3, 5, 6, 7, 8))

LEAF_RULES = frozenset(
    {"table-absent", "mult-one", "no-points", "prop62", "cor63+prop62", "cor63+mult-one"}
) | SPECIAL_RULES

SPLIT_RULE = "cor34-split"


def canonical_json(obj) -> str:
    return json.dumps(obj, sort_keys=True, separators=(",", ":"))


def content_hash(system_text: str, rule: str, witness: dict | None, child_hashes: list[str]) -> str:
    payload = {"system": system_text, "rule": rule, "witness": witness, "children": child_hashes}
    return hashlib.sha256(canonical_json(payload).encode()).hexdigest()


@dataclass(frozen=True)
class Certificate:
    system: LinearSystem
    rule: str
    witness: dict | None = None
    children: tuple["Certificate", ...] = ()
    hash: str = field(default="", compare=False)

    def __post_init__(self) -> None:
        if not self.hash:
            object.__setattr__(self, "hash", self.compute_hash())

    def compute_hash(self) -> str:
        return content_hash(
            self.system.text(), self.rule, self.witness, [c.compute_hash() for c in self.children]
        )

    @property
    def claims_special(self) -> bool:
        return self.rule in SPECIAL_RULES

    def size(self) -> int:
        return 1 + sum(c.size() for c in self.children)

    def leaves(self):
        if not self.children:
            yield self
        for child in self.children:
            yield from child.leaves()

    def to_json(self) -> dict:
        out: dict = {"system": self.system.text(), "rule": self.rule}
        if self.witness is not None:
            out["witness"] = self.witness
        out["children"] = [c.to_json() for c in self.children]
        out["hash"] = self.hash
        return out

    @classmethod
    def from_json(cls, obj: dict) -> "Certificate":
        """Rebuild a certificate, keeping the stored hash as-is (not recomputed)."""
        children = tuple(cls.from_json(c) for c in obj.get("children", []))
        return cls(
            system=parse_system(obj["system"]),
            rule=obj["rule"],
            witness=obj.get("witness"),
            children=children,
            hash=obj.get("hash") or "-",
        )
