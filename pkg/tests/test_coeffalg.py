from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from superpbw.coeffalg import AElem, MonoidError, monoid_preset


def test_poly_mul():
    mon = monoid_preset("poly")
    assert mon.mul((2,), (3,)) == (5,)
    assert mon.one == (0,)
    assert mon.power((2,), 3) == (6,)
    with pytest.raises(MonoidError):
        mon.check((-1,))


def test_trunc_absorbing():
    mon = monoid_preset("trunc:4")
    assert mon.mul((2,), (3,)) is None
    assert mon.mul((1,), (2,)) == (3,)
    assert mon.power((3,), 2) is None
    assert mon.power(None, 0) == mon.one
    assert mon.power(None, 2) is None
    assert mon.elements() == [(0,), (1,), (2,), (3,)]


def test_laurent_inverse():
    mon = monoid_preset("laurent")
    assert mon.mul((-1,), (1,)) == mon.one
    assert mon.parse_elt("t^-2") == (-2,)
    with pytest.raises(MonoidError):
        mon.elements()


def test_poly2_elements():
    mon = monoid_preset("poly2")
    assert mon.parse_elt("u^2*v") == (2, 1)
    assert mon.format_elt((2, 1)) == "u^2*v"
    assert mon.format_elt((0, 0)) == "1"
    assert mon.mul((1, 0), (0, 2)) == (1, 2)


def test_closure_presets():
    # every product of basis elements is a basis element or the absorbing zero
    for name in ("poly", "laurent", "poly2"):
        mon = monoid_preset(name)
        probe = [(0,) * len(mon.varnames), (1,) + (0,) * (len(mon.varnames) - 1)]
        for a in probe:
            for b in probe:
                assert mon.mul(a, b) is not None
    mon = monoid_preset("trunc:3")
    for a in mon.elements():
        for b in mon.elements():
            c = mon.mul(a, b)
            assert c is None or c in mon.elements()


def test_format_parse_round_trip():
    for name in ("poly", "laurent", "poly2", "trunc:5"):
        mon = monoid_preset(name)
        probe = mon.elements() if mon.finite else \
            [mon.one, (1,) * len(mon.varnames), (3,) + (0,) * (len(mon.varnames) - 1)]
        for a in probe:
            assert mon.parse_elt(mon.format_elt(a)) == a


def test_aelem_products():
    mon = monoid_preset("poly")
    one = AElem.basis(mon, (0,))
    t = AElem.basis(mon, (1,))
    assert (one + t) * (one - t) == one - t * t
    assert t * AElem(mon) == AElem(mon)


def test_aelem_truncation_examples():
    # (t + t^2)^2 with truncation at t^3 vs t^4
    for bound, expect in ((3, {(2,): Fraction(1)}),
                          (4, {(2,): Fraction(1), (3,): Fraction(2)})):
        mon = monoid_preset("trunc:%d" % bound)
        x = AElem.basis(mon, (1,)) + AElem.basis(mon, (2,))
        assert (x * x).coeffs == expect


def _aelems(mon):
    elt = st.tuples(st.integers(0, 3))
    coeff = st.fractions(min_value=-3, max_value=3, max_denominator=4)
    return st.lists(st.tuples(elt, coeff), max_size=4).map(lambda xs: AElem(mon, xs))


@given(st.data())
@settings(max_examples=60)
def test_aelem_ring_laws(data):
    mon = monoid_preset("trunc:4")
    x = data.draw(_aelems(mon))
    y = data.draw(_aelems(mon))
    z = data.draw(_aelems(mon))
    assert x * y == y * x
    assert (x * y) * z == x * (y * z)
    assert x * (y + z) == x * y + x * z
