import json

import pytest

from blring import golden
from blring.census import (chain4_ledger, chain4_table, enumerate_bl, enumerate_lattices, find_record,
                           is_distributive, ring_atlas, summarize, top_join_irreducible,
                           zn_family, atlas_row, monic_polys, polyquot_family)
from blring.errors import CapExceeded
from blring.order import is_chain
from blring.report import known_algebras
from blring.resalg import are_isomorphic, check_axioms
from blring.scans import census_completeness, census_partition

from oracles import brute_lattice_classes, brute_isomorphic


@pytest.mark.parametrize("n,count", [(1, 1), (2, 1), (3, 1), (4, 2), (5, 5), (6, 15)])
def test_lattice_counts_against_oracle(n, count):
    assert len(enumerate_lattices(n)) == count
    assert brute_lattice_classes(n) == count


def test_lattice_count_seven():
    assert len(enumerate_lattices(7)) == 53


@pytest.mark.parametrize("n,total,mv,chains", [(2, 1, 1, 1), (3, 2, 1, 2), (4, 5, 2, 4), (5, 9, 1, 8),
                                               (6, 20, 2, 16)])
def test_census_totals(n, total, mv, chains):
    s = summarize(enumerate_bl(n), n)
    assert (s.bl, s.mv, s.chains) == (total, mv, chains)


def test_order3_non_mv_is_goedel():
    non_mv = [r for r in enumerate_bl(3) if not r.classification.mv]
    assert len(non_mv) == 1
    assert are_isomorphic(non_mv[0].tables, golden.load("godel3")) is not None


def test_order4_matches_the_five_reference_tables():
    recs = enumerate_bl(4)
    for name in golden.FOUR_ELEMENT:
        assert len(find_record(recs, golden.load(name))) == 1


def test_census_records_pairwise_non_isomorphic():
    for n in (3, 4, 5):
        recs = enumerate_bl(n)
        for i, a in enumerate(recs):
            for b in recs[i + 1:]:
                assert not brute_isomorphic(a.tables, b.tables)


def test_census_complete_against_independent_algebras():
    records = [r for n in range(2, 6) for r in enumerate_bl(n)]
    assert census_completeness(records, known_algebras()) == []


def test_census_sound():
    for n in (3, 4, 5):
        for r in enumerate_bl(n):
            assert check_axioms(r.tables).bl


def test_census_deterministic_and_parallel():
    a = [json.dumps(r.as_dict(), sort_keys=True) for r in enumerate_bl(5)]
    b = [json.dumps(r.as_dict(), sort_keys=True) for r in enumerate_bl(5, workers=2)]
    assert a == b


def test_census_cap():
    with pytest.raises(CapExceeded):
        enumerate_bl(7)
    with pytest.raises(CapExceeded):
        enumerate_bl(5, max_n=4)
    with pytest.raises(ValueError):
        enumerate_bl(1)


def test_diamond_over_chain_lattice_carries_no_bl_structure():
    target = [lat for lat in enumerate_lattices(5)
              if is_distributive(lat) and top_join_irreducible(lat) and not is_chain(lat.leq)]
    assert len(target) == 1
    ids = {lat.lattice_id for lat in target}
    assert not [r for r in enumerate_bl(5) if r.lattice_id in ids]


def test_chain4_ledger_verdicts():
    cases = chain4_ledger()
    assert [c.case_id for c in cases] == list(range(1, 13))
    assert sum(c.verdict.value == "BLnotMV" for c in cases) == 3
    for c in cases:
        if c.verdict.value in ("MV", "BLnotMV"):
            assert check_axioms(golden.load(c.matches)).bl
        assert json.dumps(c.as_dict())


def test_chain4_table_is_symmetric():
    t = chain4_table(("0", "I", "0"))
    assert (t == t.T).all()


def test_zn_atlas_all_mv():
    atlas = ring_atlas(zn_family(2, 30))
    s = atlas.summary()
    assert s["rings"] == 29 and s["mv"] == 29 and s["bl"] == 29


def test_z6_atlas_row():
    row = atlas_row("zn:6")
    assert (row.n_m, row.n_p, row.n_I) == (2, 2, 4)
    assert row.matches == "boolean4" and row.multiplication_ring


def test_census_partition_of_goedel3():
    assert census_partition(enumerate_bl(3), golden.load("godel3")) == 1


def test_polyquot_family():
    assert len(monic_polys(2, 2)) == 4
    fam = polyquot_family(16)
    assert "polyquot:2:x^2" in fam and "polyquot:4:x^2" in fam and len(fam) == 4 + 8 + 16 + 9 + 16
