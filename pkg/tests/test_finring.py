import itertools

import numpy as np
import pytest

from blring.errors import CapExceeded, NonMonic, NotAnIdeal, NotCoprime, ParseError
from blring.finring import (ElementClass, PolySpec, build_ring, cayley_text, coset_map, crt_split,
                            describe, element_class, from_json, local_factors, mk_poly_quotient,
                            mk_product, mk_zn, parse_poly, parse_ring_spec, quotient_ring,
                            ring_predicates, ring_violation, to_json, verify_ring)
from blring.scans import scan_product

from oracles import brute_poly_tables


def test_zn_units_and_inverse():
    R = mk_zn(6)
    assert R.mul[5, 5] == 1
    assert list(np.flatnonzero(R.units)) == [1, 5]
    assert list(np.flatnonzero(R.zero_divisors)) == [2, 3, 4]
    assert [element_class(R, a) for a in (0, 1, 2)] == [ElementClass.ZERO, ElementClass.UNIT,
                                                         ElementClass.ZERO_DIVISOR]


def test_zn_predicates():
    assert ring_predicates(mk_zn(7)) == (True, True, False)
    assert ring_predicates(mk_zn(8)) == (False, False, False)
    assert ring_predicates(mk_zn(1)).is_trivial


def test_element_class_out_of_range():
    with pytest.raises(IndexError):
        element_class(mk_zn(3), 3)


@pytest.mark.parametrize("n,coeffs", [(2, (0, 0, 1)), (2, (1, 1, 1)), (3, (1, 0, 1)), (4, (3, 2, 0, 1)),
                                      (6, (0, 0, 1)), (5, (2, 0, 1))])
def test_poly_quotient_matches_schoolbook(n, coeffs):
    R = mk_poly_quotient(PolySpec(n, coeffs))
    add, mul = brute_poly_tables(n, coeffs)
    assert np.array_equal(R.add, add)
    assert np.array_equal(R.mul, mul)
    assert ring_violation(R) is None


def test_poly_quotient_x2_plus_1_over_z3_is_field():
    R = build_ring("polyquot:3:x^2+1")
    assert R.order == 9 and ring_predicates(R).is_field


def test_non_monic_rejected():
    with pytest.raises(NonMonic):
        mk_poly_quotient(PolySpec(4, (1, 0, 2)))


def test_poly_parse_and_format():
    assert parse_poly("x^2+2x+1") == (1, 2, 1)
    assert parse_poly("x^3-x", 5) == (0, 4, 0, 1)
    assert str(PolySpec(3, (1, 0, 1))) == "x^2+1"
    with pytest.raises(ParseError):
        parse_poly("x^^2")


def test_product_is_componentwise():
    A, B = mk_zn(2), mk_zn(3)
    P = mk_product(A, B)
    for (a1, b1), (a2, b2) in itertools.product(itertools.product(range(2), range(3)), repeat=2):
        assert P.mul[a1 * 3 + b1, a2 * 3 + b2] == (a1 * a2 % 2) * 3 + b1 * b2 % 3
        assert P.add[a1 * 3 + b1, a2 * 3 + b2] == ((a1 + a2) % 2) * 3 + (b1 + b2) % 3
    verify_ring(P)


def test_cap_enforced():
    with pytest.raises(CapExceeded):
        mk_zn(100, max_order=50)
    with pytest.raises(CapExceeded):
        build_ring("polyquot:3:x^5", max_order=100)


def test_quotient_ring_of_z8():
    Q = quotient_ring(mk_zn(8), [0, 4])
    assert Q.order == 4
    verify_ring(Q)
    f = coset_map(mk_zn(8), [0, 4])
    assert f[1] == f[5] and f[0] == f[4]


def test_quotient_rejects_non_ideal():
    with pytest.raises(NotAnIdeal):
        quotient_ring(mk_zn(6), [0, 1])


def test_crt_split_z6():
    w = crt_split(mk_zn(6), [0, 2, 4], [0, 3])
    assert w.source.order == 6 and w.target.order == 6
    with pytest.raises(NotCoprime):
        crt_split(mk_zn(8), [0, 2, 4, 6], [0, 4])


def test_local_factors_of_z12():
    factors, idem = local_factors(mk_zn(12))
    assert sorted(F.order for F in factors) == [3, 4]
    assert sorted(idem) == [4, 9]


def test_spec_round_trip():
    for text in ("zn:6", "polyquot:2:x^2", "prod:(zn:2,zn:2)", "quot:(zn:8,ideal:[0,4])",
                 "prod:(zn:2,prod:(zn:3,polyquot:2:x^2+x+1))"):
        R = build_ring(text)
        assert describe(R) == text
        assert from_json(to_json(R)).order == R.order


@pytest.mark.parametrize("bad", ["", "zn", "zn:x", "prod:(zn:2)", "quot:(zn:8,[0,4])", "zn:4junk",
                                 "prod:(zn:2,zn:3", "polyquot:3"])
def test_spec_errors(bad):
    with pytest.raises(ParseError):
        parse_ring_spec(bad)


def test_product_ideals_are_factor_products():
    assert scan_product(mk_zn(4), mk_zn(6)) == []


def test_tables_are_read_only():
    R = mk_zn(5)
    with pytest.raises(ValueError):
        R.add[0, 0] = 1


def test_cayley_text_shape():
    text = cayley_text(mk_zn(3))
    assert text.splitlines()[0].split() == ["*", "|", "0", "1", "2"]
    assert len(text.splitlines()) == 5
