import pytest
from hypothesis import given, strategies as st

from seshadri.systems import (
    InvalidSystemError,
    LinearSystem,
    canonicalize,
    conditions_count,
    expected_dimension,
    parse_system,
    virtual_dimension,
)

raw_blocks = st.lists(st.tuples(st.integers(0, 12), st.integers(0, 15)), max_size=8)


def test_canonicalize_merges_drops_and_sorts():
    s = canonicalize([(1, 7), (1, 0), (3, 2)], 8)
    assert s.blocks == ((3, 2), (1, 7))
    assert s.text() == "d: 8; mults: 2^3, 7^1"


def test_canonicalize_merges_equal_multiplicities():
    assert canonicalize([(1, 3), (1, 4)], 4).blocks == ((1, 7),)


@pytest.mark.parametrize("raw,d", [([(1, 1)], -1), ([(-1, 2)], 3), ([(2, -1)], 3)])
def test_canonicalize_rejects_negatives(raw, d):
    with pytest.raises(InvalidSystemError):
        canonicalize(raw, d)


@given(raw_blocks, st.integers(0, 40))
def test_canonicalize_idempotent(raw, d):
    s = canonicalize(raw, d)
    assert canonicalize(s.blocks, d) == s
    assert parse_system(s.text()) == s


@given(raw_blocks, st.integers(0, 40), st.randoms(use_true_random=False))
def test_virtual_dimension_ignores_block_presentation(raw, d, rnd):
    shuffled = list(raw)
    rnd.shuffle(shuffled)
    # split every block into two pieces
    split = [piece for m, n in shuffled for piece in ((m, n // 2), (m, n - n // 2))]
    assert virtual_dimension(canonicalize(raw, d)) == virtual_dimension(canonicalize(split, d))


@given(raw_blocks, raw_blocks, st.integers(0, 40))
def test_conditions_additive(a, b, d):
    assert conditions_count(canonicalize(a + b, d)) == conditions_count(canonicalize(a, d)) + conditions_count(
        canonicalize(b, d)
    )


@given(raw_blocks, st.integers(0, 40))
def test_expected_is_clamped_virtual(raw, d):
    s = canonicalize(raw, d)
    assert expected_dimension(s) == max(-1, virtual_dimension(s)) >= -1
    assert virtual_dimension(s) == d * (d + 3) // 2 - conditions_count(s)


@pytest.mark.parametrize(
    "system,vdim",
    [
        (LinearSystem.of(1), 2),
        (LinearSystem.homogeneous(2, 2, 2), -1),
        (LinearSystem.homogeneous(35, 10, 11), 5),
    ],
)
def test_virtual_dimension(system, vdim):
    assert virtual_dimension(system) == vdim


def test_expected_dimension_examples():
    assert expected_dimension(LinearSystem.homogeneous(1, 3, 1)) == -1
    assert expected_dimension(LinearSystem.homogeneous(2, 2, 2)) == -1
    assert expected_dimension(LinearSystem.homogeneous(10, 12, 2)) == 29


def test_conditions_count_examples():
    assert conditions_count(LinearSystem.homogeneous(5, 7, 1)) == 7
    assert conditions_count(LinearSystem.homogeneous(35, 10, 11)) == 660
    assert conditions_count(canonicalize([(3, 2), (1, 7)], 8)) == 19


def test_parse_system():
    assert parse_system("d: 35; mults: 10^11") == LinearSystem.homogeneous(35, 10, 11)
    assert parse_system("d: 8; mults: 7^1, 0^1, 2^3") == canonicalize([(3, 2), (1, 7)], 8)
    assert parse_system("d: 4") == LinearSystem(4)
    assert parse_system("d:4;mults:") == LinearSystem(4)


@pytest.mark.parametrize("text", ["d: -1; mults: 2^2", "d: 3; mults: 2^x", "deg 3", "d: 3; mults: 2^-2"])
def test_parse_system_errors(text):
    with pytest.raises(InvalidSystemError):
        parse_system(text)


def test_multiplicity_may_exceed_degree():
    s = LinearSystem.homogeneous(2, 1, 3)
    assert s.blocks == ((3, 1),)
    assert virtual_dimension(s) == -1
