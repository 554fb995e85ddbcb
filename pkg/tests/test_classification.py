from fractions import Fraction

import pytest

from seshadri.classification import (
    SPECIAL_RANGES,
    IndeterminateError,
    SpecialityVerdict,
    Tag,
    classify_homogeneous_upto9,
    is_nonempty_nonspecial,
    multiplicity_one_rule,
)
from seshadri.oracle import actual_dimension
from seshadri.systems import LinearSystem, canonicalize


@pytest.mark.parametrize(
    "d,n,m,tag",
    [
        (2, 2, 2, Tag.SPECIAL),
        (4, 5, 2, Tag.SPECIAL),
        (6, 9, 2, Tag.NON_SPECIAL),
        (5, 8, 2, Tag.NON_SPECIAL),
        (5, 10, 2, Tag.OUT_OF_SCOPE),
    ],
)
def test_table_examples(d, n, m, tag):
    assert classify_homogeneous_upto9(d, n, m).tag is tag


def test_rule_ids():
    assert classify_homogeneous_upto9(2, 2, 2).rule == "table-n2"
    assert classify_homogeneous_upto9(6, 9, 2).rule == "table-absent"
    assert classify_homogeneous_upto9(11, 4, 5).rule == "table-absent"


def test_boundaries_are_not_floored():
    # n=8, m=17: lower bound 48 exactly, upper (17*17-2)/6 = 47.83..
    assert classify_homogeneous_upto9(48, 8, 17).tag is Tag.NON_SPECIAL
    # n=6, m=5: 12 <= d <= 11.5 is empty
    assert all(classify_homogeneous_upto9(d, 6, 5).tag is Tag.NON_SPECIAL for d in range(30))
    # n=3, m=3: 4.5 <= d <= 4, empty; m=4: 6 <= d <= 6
    assert classify_homogeneous_upto9(4, 3, 3).tag is Tag.NON_SPECIAL
    assert classify_homogeneous_upto9(6, 3, 4).tag is Tag.SPECIAL


def test_rows_cover_disjoint_ranges():
    for n, (lo, hi) in SPECIAL_RANGES.items():
        for m in range(1, 60):
            assert isinstance(lo(m), Fraction) and isinstance(hi(m), Fraction)


def test_multiplicity_one():
    assert multiplicity_one_rule(LinearSystem.homogeneous(8, 7, 1)).rule == "mult-one"
    assert multiplicity_one_rule(LinearSystem(5)).rule == "no-points"
    assert multiplicity_one_rule(canonicalize([(3, 2), (1, 7)], 8)).tag is Tag.OUT_OF_SCOPE


def test_is_nonempty_nonspecial():
    s = LinearSystem.homogeneous(6, 9, 2)
    assert is_nonempty_nonspecial(s, classify_homogeneous_upto9(6, 9, 2))
    assert actual_dimension(s).actual_dim_estimate == 0
    assert not is_nonempty_nonspecial(LinearSystem.homogeneous(5, 8, 2), classify_homogeneous_upto9(5, 8, 2))
    assert not is_nonempty_nonspecial(LinearSystem.homogeneous(2, 2, 2), classify_homogeneous_upto9(2, 2, 2))
    with pytest.raises(IndeterminateError):
        is_nonempty_nonspecial(LinearSystem.homogeneous(5, 10, 2), SpecialityVerdict(Tag.OUT_OF_SCOPE))


def test_empty_by_table_is_really_empty():
    report = actual_dimension(LinearSystem.homogeneous(5, 8, 2))
    assert report.actual_dim_estimate == -1
