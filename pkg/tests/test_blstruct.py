import pytest

from blring import golden
from blring.blstruct import (boolean_elements, comet_decomposition, comet_report, d_set, idempotents,
                             interval_algebra)
from blring.census import enumerate_bl
from blring.errors import NotBL, NotIdempotent
from blring.finring import build_ring
from blring.ideal_lattice import all_ideals
from blring.resalg import are_isomorphic, build, direct_product, from_ideal_lattice


def test_idempotents_of_goedel_and_lukasiewicz():
    assert idempotents(golden.load("godel3")) == (0, 1, 2)
    assert idempotents(golden.load("luk3")) == (0, 2)


def test_square_comet_structure():
    sq = golden.load("godel3_squared")
    assert len(idempotents(sq)) == 9
    assert not comet_report(sq).is_comet
    assert [sq.labels[b] for b in boolean_elements(sq)] == ["O", "B", "F", "Z"]


def test_comet5_pivot():
    L = golden.load("comet5")
    rep = comet_report(L)
    assert rep.is_comet and not rep.is_chain
    # E and G are incomparable idempotents, so D(L) stops at D
    assert [L.labels[x] for x in rep.d_set] == ["O", "D"]
    assert L.labels[rep.pivot] == "D"


def test_chain_is_comet_with_top_pivot():
    for name in ("luk4", "godel4", "luk3_plus_bool", "bool_plus_luk3"):
        L = golden.load(name)
        rep = comet_report(L)
        assert rep.is_comet and rep.pivot == L.top


def test_boolean4_is_not_a_comet():
    rep = comet_report(golden.load("boolean4"))
    assert not rep.is_comet


def test_decomposition_of_boolean4():
    d = comet_decomposition(golden.load("boolean4"))
    assert d.sizes() == (2, 2)


def test_decomposition_of_nine_ideal_ring():
    L = from_ideal_lattice(all_ideals(build_ring("polyquot:6:x^2")))
    d = comet_decomposition(L)
    assert sorted(d.sizes()) == [3, 3]
    prod = direct_product(*d.factors)
    assert are_isomorphic(prod, L) is not None


@pytest.mark.parametrize("n", [2, 3, 4, 5])
def test_decomposition_rebuilds_every_census_record(n):
    for r in enumerate_bl(n):
        d = comet_decomposition(r.tables)
        prod = d.factors[0]
        for f in d.factors[1:]:
            prod = direct_product(prod, f)
        assert are_isomorphic(prod, r.tables) is not None
        assert all(comet_report(f).is_comet for f in d.factors)


def test_interval_requires_idempotent():
    L = golden.load("luk3")
    with pytest.raises(NotIdempotent):
        interval_algebra(L, L.index("I"))


def test_interval_above_C():
    sq = golden.load("godel3_squared")
    upper = interval_algebra(sq, sq.index("C"))
    assert list(upper.labels) == list("CDEFGZ")


def test_non_bl_rejected():
    R = build_ring("quot:(polyquot:4:x^2,ideal:[0,8])")
    with pytest.raises(NotBL):
        comet_report(from_ideal_lattice(all_ideals(R)))


def test_d_set_is_chain_in_census():
    for n in (3, 4, 5):
        for r in enumerate_bl(n):
            ds = d_set(r.tables)
            assert all(r.tables.leq[a, b] or r.tables.leq[b, a] for a in ds for b in ds)
