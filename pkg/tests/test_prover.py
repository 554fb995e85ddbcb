import dataclasses
import json
import logging

import pytest

from seshadri.certificate import Certificate
from seshadri.oracle import actual_dimension
from seshadri.prover import (
    CERTIFIED,
    EMPTY,
    SPECIAL,
    UNKNOWN,
    MemoCache,
    ProofOutcome,
    cache_load,
    cache_store,
    prove,
    split_search,
)
from seshadri.quasi import quasi_system
from seshadri.systems import LinearSystem, expected_dimension, parse_system
from seshadri.verify import certificate_problems, verify_certificate


def rehashed(cert: Certificate, **changes) -> Certificate:
    new = dataclasses.replace(cert, hash="", **changes)
    return new


def test_mult_one_leaf():
    out = prove(LinearSystem.homogeneous(8, 7, 1))
    assert out.tag == CERTIFIED and out.certificate.rule == "mult-one"


def test_special_by_table():
    out = prove(LinearSystem.homogeneous(2, 2, 2))
    assert out.tag == SPECIAL and out.rule == "table-n2"
    assert verify_certificate(out.certificate)


def test_empty_outcome():
    out = prove(LinearSystem.homogeneous(5, 8, 2))
    assert out.tag == EMPTY
    assert actual_dimension(LinearSystem.homogeneous(5, 8, 2)).actual_dim_estimate == -1


def test_split_witness_for_twelve_double_points():
    out = prove(LinearSystem.homogeneous(10, 12, 2))
    cert = out.certificate
    assert out.tag == CERTIFIED and cert.rule == "cor34-split"
    assert cert.witness == {"k": 3, "b": 3}
    first, second = cert.children
    assert first.system == LinearSystem.homogeneous(6, 9, 2) and first.rule == "table-absent"
    assert second.system == quasi_system(10, 8, 3, 2) and second.rule == "prop62"
    assert expected_dimension(first.system) == 0 and expected_dimension(second.system) == 20
    assert verify_certificate(cert)
    assert actual_dimension(LinearSystem.homogeneous(10, 12, 2)).agrees_with_expected


def test_split_search_exhausts_for_degree_eight():
    assert split_search(8, 12, 2, 64, MemoCache()).tag == UNKNOWN


def test_split_search_guard():
    with pytest.raises(ValueError):
        split_search(1, 2, 2, 64, MemoCache())


def test_degree_decreases_along_certificates():
    for d in range(2, 20):
        out = prove(LinearSystem.homogeneous(d, 14, 2))
        if out.certificate is None:
            continue
        stack = [out.certificate]
        while stack:
            node = stack.pop()
            if node.rule == "cor34-split":
                assert node.children[0].system.degree < node.system.degree
            stack.extend(node.children)


def test_depth_zero_gives_unknown_and_is_retried():
    cache = MemoCache()
    s = LinearSystem.homogeneous(10, 12, 2)
    assert prove(s, max_depth=0, cache=cache).tag == UNKNOWN
    assert cache.get(s).depth == 0
    assert prove(s, max_depth=64, cache=cache).tag == CERTIFIED


def test_decided_entries_are_first_writer_wins():
    cache = MemoCache()
    s = LinearSystem.homogeneous(2, 2, 2)
    first = prove(s, cache=cache)
    other = ProofOutcome(UNKNOWN, depth=99)
    assert cache.put(s, other) is first


@pytest.mark.parametrize("threads", [2, 8])
def test_thread_count_does_not_change_outcome(threads):
    for d, n, m in [(10, 12, 2), (14, 20, 2), (13, 11, 3), (8, 12, 2), (16, 14, 3)]:
        s = LinearSystem.homogeneous(d, n, m)
        assert prove(s, threads=threads).to_json() == prove(s, threads=1).to_json()


def test_fresh_certificates_verify():
    for d in range(2, 16):
        for n in range(1, 16):
            for m in range(1, 5):
                out = prove(LinearSystem.homogeneous(d, n, m))
                if out.certificate is not None:
                    assert verify_certificate(out.certificate), certificate_problems(out.certificate)


def test_verifier_rejects_incremented_b():
    cert = prove(LinearSystem.homogeneous(10, 12, 2)).certificate
    forged = rehashed(cert, witness={"k": 3, "b": 4})
    assert not verify_certificate(forged)
    assert any("wrong system" in p for p in certificate_problems(forged))


def test_verifier_rejects_bad_table_row():
    forged = Certificate(LinearSystem.homogeneous(3, 2, 2), "table-n2")
    assert not verify_certificate(forged)


def test_verifier_rejects_stale_hash_and_garbage():
    cert = prove(LinearSystem.homogeneous(10, 12, 2)).certificate
    doc = cert.to_json()
    doc["witness"]["k"] = 4
    assert not verify_certificate(doc)
    assert not verify_certificate({"rule": "mult-one"})
    assert not verify_certificate({"system": "d: 3; mults: 3^1", "rule": "magic", "children": [], "hash": "x"})
    leaf = Certificate(LinearSystem.homogeneous(3, 3, 1), "mult-one")
    bad_arity = dict(leaf.to_json(), children=[leaf.to_json()])
    assert not verify_certificate(bad_arity)


def test_certificate_json_round_trip():
    cert = prove(LinearSystem.homogeneous(10, 12, 2)).certificate
    again = Certificate.from_json(json.loads(json.dumps(cert.to_json())))
    assert again == cert and again.hash == cert.hash


def test_cache_round_trip(tmp_path):
    cache = MemoCache()
    for s in ["d: 10; mults: 12^2", "d: 2; mults: 2^2", "d: 8; mults: 12^2", "d: 5; mults: 8^2"]:
        prove(parse_system(s), cache=cache)
    path = tmp_path / "cache.jsonl"
    cache_store(cache, path)
    loaded = cache_load(path)
    assert loaded == cache
    cache_store(loaded, tmp_path / "again.jsonl")
    assert (tmp_path / "again.jsonl").read_text() == path.read_text()


def test_cache_load_empty_and_missing(tmp_path, caplog):
    empty = tmp_path / "empty.jsonl"
    empty.write_text("")
    assert len(cache_load(empty)) == 0
    with caplog.at_level(logging.WARNING):
        assert len(cache_load(tmp_path / "nope.jsonl")) == 0
    assert "cannot read cache" in caplog.text


def test_cache_load_skips_corrupt_line(tmp_path, caplog):
    cache = MemoCache()
    prove(LinearSystem.homogeneous(10, 12, 2), cache=cache)
    path = tmp_path / "c.jsonl"
    cache_store(cache, path)
    lines = path.read_text().splitlines()
    tampered = json.loads(lines[0])
    tampered["outcome"]["tag"] = "special"
    lines.insert(1, "{not json")
    lines.insert(2, json.dumps(tampered))
    path.write_text("\n".join(lines) + "\n")
    with caplog.at_level(logging.WARNING):
        loaded = cache_load(path)
    assert loaded.snapshot().keys() == cache.snapshot().keys()
    assert "skipping cache entry" in caplog.text
