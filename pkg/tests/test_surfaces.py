from fractions import Fraction

import pytest
from hypothesis import given, strategies as st

from seshadri.surfaces import (
    DivisorClass,
    HypothesisViolatedError,
    ProductPolarization,
    SurfaceMismatchError,
    fiber_test_curves,
    intersect,
    nef_square_check,
    parse_divisor,
    self_intersection,
    seshadri_blownup_product,
    seshadri_product,
    uniform_class,
)

fractions = st.fractions(min_value=-20, max_value=20, max_denominator=12)


def classes(surface, r):
    nbase = 1 if surface == "P2" else 2
    return st.builds(
        lambda base, exc: DivisorClass(surface, tuple(base), tuple(exc)),
        st.lists(fractions, min_size=nbase, max_size=nbase),
        st.lists(fractions, min_size=r, max_size=r),
    )


def test_product_intersections():
    L = parse_divisor("Prod[r=1]: 5F1+3F2-E1")
    f1, f2 = fiber_test_curves(1, 1)
    assert intersect(L, f1) == 2 and intersect(L, f2) == 4
    assert self_intersection(f1) == -1


def test_counterexample_pairing_vanishes():
    L = parse_divisor("Prod[r=3]: 3F1+4F2-2E1-2E2-2E3")
    T = parse_divisor("Prod[r=3]: 2F2-E1-E2-E3")
    assert intersect(L, T) == 0
    assert self_intersection(L) == 12


def test_plane_self_intersections():
    assert self_intersection(uniform_class(9, Fraction(1, 3))) == 0
    assert self_intersection(parse_divisor("P2[r=10]: H - 1/3*(E1..E10)")) == Fraction(-1, 9)
    assert self_intersection(parse_divisor("P2[r=2]: 2H - E1 - E2")) == 2


def test_parse_round_trip_and_groups():
    d = parse_divisor("P2[r=4]: 3H - 2*(E1+E3) - E4")
    assert d.exc == (2, 0, 2, 1)
    assert parse_divisor(d.text()) == d
    assert parse_divisor("P2[r=0]: 0").exc == ()


@pytest.mark.parametrize("bad", ["Q[r=1]: H", "P2[r=1]: F1", "P2[r=1]: E2", "P2[r=1]: H ?", "P2[r=2]: (E1+X)"])
def test_parse_errors(bad):
    with pytest.raises(ValueError):
        parse_divisor(bad)


def test_mismatched_surfaces():
    with pytest.raises(SurfaceMismatchError):
        intersect(DivisorClass.plane(1, [0]), DivisorClass.product(1, 1, [0]))
    with pytest.raises(SurfaceMismatchError):
        intersect(DivisorClass.plane(1, [0]), DivisorClass.plane(1, [0, 0]))


@given(st.sampled_from(["P2", "Prod"]).flatmap(
    lambda s: st.tuples(classes(s, 3), classes(s, 3), classes(s, 3), fractions)))
def test_pairing_is_symmetric_and_bilinear(args):
    x, y, z, c = args
    assert intersect(x, y) == intersect(y, x)
    assert intersect(c * x + y, z) == c * intersect(x, z) + intersect(y, z)


@given(st.integers(1, 200), st.integers(0, 50), st.integers(1, 50))
def test_nef_square_matches_integer_form(r, p, q):
    assert nef_square_check(r, Fraction(p, q)) == (p * p * r <= q * q)


def test_nef_square_boundary():
    assert nef_square_check(9, Fraction(1, 3))
    assert not nef_square_check(10, Fraction(1, 3))
    assert nef_square_check(10, Fraction(2, 7))
    with pytest.raises(ValueError):
        nef_square_check(10, -1)


def test_product_seshadri():
    assert seshadri_product(3, 4) == 3
    with pytest.raises(ValueError):
        seshadri_product(0, 4)


def test_blownup_product():
    val = seshadri_blownup_product(ProductPolarization(4, 3, (1, 1, 1)))
    assert int(val) == 3
    assert "fiber" in val.caveat


def test_blownup_product_hypotheses():
    with pytest.raises(HypothesisViolatedError, match="max") as exc:
        seshadri_blownup_product(ProductPolarization(3, 4, (2, 2, 2)))
    assert exc.value.inequality == "Σ m_i ≤ max(a,b)"
    with pytest.raises(HypothesisViolatedError) as exc:
        seshadri_blownup_product(ProductPolarization(3, 4, (3,)))
    assert exc.value.inequality == "0 < m_i < min(a,b)"
