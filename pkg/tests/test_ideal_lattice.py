import numpy as np
import pytest

from blring.errors import NoProperIdeals, RingMismatch
from blring.finring import PolySpec, build_ring, mk_poly_quotient, mk_zn
from blring.ideal_lattice import (Ideal, all_ideals, annihilator, classify_ideal, ideal_counts,
                                  ideal_intersection, ideal_product, ideal_quotient, ideal_sum,
                                  is_local, is_multiplication_ring, is_prime, maximal_ideals,
                                  nonunits_form_ideal, principal_ideal)
from blring.order import bounds

from oracles import brute_ideals, brute_prime

SMALL = ["zn:2", "zn:6", "zn:8", "zn:12", "polyquot:2:x^2", "polyquot:2:x^3", "polyquot:3:x^2",
         "prod:(zn:2,zn:2)", "prod:(zn:2,zn:4)", "prod:(zn:2,prod:(zn:2,zn:2))", "polyquot:2:x^2+x+1",
         "quot:(zn:12,ideal:[0,6])", "polyquot:4:x^2"]


@pytest.mark.parametrize("spec", SMALL)
def test_ideals_match_subset_oracle(spec):
    R = build_ring(spec)
    got = {frozenset(I.members().tolist()) for I in all_ideals(R).ideals}
    assert got == set(brute_ideals(R.add.tolist(), R.mul.tolist(), R.zero))


@pytest.mark.parametrize("spec", SMALL)
def test_prime_matches_element_oracle(spec):
    R = build_ring(spec)
    lat = all_ideals(R)
    for I in lat.ideals:
        assert is_prime(I) == brute_prime(I.members().tolist(), R.mul.tolist(), R.order)


@pytest.mark.parametrize("spec", SMALL)
def test_operation_tables_match_pointwise_operations(spec):
    lat = all_ideals(build_ring(spec))
    ideals = lat.ideals
    for i, I in enumerate(ideals):
        for j, J in enumerate(ideals):
            assert ideals[lat.join_table[i, j]] == ideal_sum(I, J)
            assert ideals[lat.meet_table[i, j]] == ideal_intersection(I, J)
            assert ideals[lat.product_table[i, j]] == ideal_product(I, J)
            assert ideals[lat.quotient_table[i, j]] == ideal_quotient(I, J)


@pytest.mark.parametrize("spec", SMALL)
def test_quotient_is_residuum(spec):
    lat = all_ideals(build_ring(spec))
    leq, prod, quo = lat.leq, lat.product_table, lat.quotient_table
    k = len(lat)
    for a in range(k):
        for b in range(k):
            for c in range(k):
                assert leq[c, quo[a, b]] == leq[prod[b, c], a]


def test_counts():
    assert tuple(ideal_counts(all_ideals(mk_zn(6)))) == (2, 2, 4)
    assert tuple(ideal_counts(all_ideals(mk_zn(8)))) == (1, 1, 4)
    assert tuple(ideal_counts(all_ideals(mk_zn(5)))) == (1, 1, 2)


def test_annihilator_in_z6():
    R = mk_zn(6)
    assert annihilator(principal_ideal(R, 3)) == principal_ideal(R, 2)
    lat = all_ideals(R)
    zero = Ideal.from_members(R, [0])
    assert ideal_quotient(zero, principal_ideal(R, 3)).members().tolist() == [0, 2, 4]
    assert annihilator(lat.ideals[lat.top]).is_zero
    assert annihilator(lat.ideals[lat.bottom]).is_whole


@pytest.mark.parametrize("p,t", [(2, 2), (2, 3), (3, 2), (3, 3), (5, 2)])
def test_truncated_polynomial_ring_is_chain_of_t_plus_one(p, t):
    lat = all_ideals(mk_poly_quotient(PolySpec(p, (0,) * t + (1,))))
    assert len(lat) == t + 1
    assert (lat.leq | lat.leq.T).all()
    assert is_local(lat)


def test_three_ideal_middle_squares_to_zero():
    for spec in ("zn:4", "zn:9", "polyquot:2:x^2", "polyquot:3:x^2"):
        lat = all_ideals(build_ring(spec))
        assert len(lat) == 3
        mid = lat.ideals[1]
        assert ideal_product(mid, mid).is_zero


def test_maximal_and_local():
    lat = all_ideals(mk_zn(12))
    assert sorted(lat.ideals[k].members().tolist()[1] for k in maximal_ideals(lat)) == [2, 3]
    assert not is_local(lat) and not nonunits_form_ideal(mk_zn(12))
    assert is_local(all_ideals(mk_zn(9))) and nonunits_form_ideal(mk_zn(9))


def test_classify_ideal():
    lat = all_ideals(mk_zn(6))
    kind = classify_ideal(lat, principal_ideal(mk_zn(6), 2))
    assert kind.maximal and kind.prime


def test_multiplication_rings():
    assert is_multiplication_ring(all_ideals(mk_zn(12)))
    assert is_multiplication_ring(all_ideals(build_ring("prod:(zn:2,zn:2)")))
    # Z_4[X]/(X^2, 2X): the maximal ideal (2, X) is not principal
    assert not is_multiplication_ring(all_ideals(build_ring("quot:(polyquot:4:x^2,ideal:[0,8])")))


def test_mixing_rings_rejected():
    with pytest.raises(RingMismatch):
        ideal_sum(principal_ideal(mk_zn(4), 2), principal_ideal(mk_zn(6), 2))


def test_join_table_is_least_upper_bound():
    lat = all_ideals(mk_zn(30))
    assert np.array_equal(lat.join_table, bounds(lat.leq, upper=True))


def test_trivial_ring_has_no_lattice():
    with pytest.raises(NoProperIdeals):
        all_ideals(mk_zn(1))
