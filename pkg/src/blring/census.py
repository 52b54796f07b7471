"""Exhaustive enumeration of small lattices and BL-algebras, and the ring atlas."""
from __future__ import annotations

import enum
import itertools
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from typing import NamedTuple

import numpy as np

from . import golden
from .blstruct import CometReport, comet_report
from .errors import CapExceeded, NoMaximum, NotAMonoid, NotResiduated
from .order import bounds, hasse_edges, is_chain
from .resalg import (Classification, ResLat, _monoid_violation, _monotone_violation, are_isomorphic,
                     build, check_axioms)

DEFAULT_MAX_LATTICE = 7
DEFAULT_MAX_CENSUS = 6


# ----------------------------------------------------------------- lattices


class Lattice(NamedTuple):
    lattice_id: str
    leq: np.ndarray
    meet: np.ndarray
    join: np.ndarray

    @property
    def size(self):
        return len(self.leq)


def _closed(rel, k):
    for i in range(k):
        for j in range(k):
            if rel[i][j]:
                for m in range(k):
                    if rel[j][m] and not rel[i][m]:
                        return False
    return True


def _bounded(inner, k):
    """Order matrix on ``k + 2`` points with 0 at the bottom and ``k + 1`` on top."""
    n = k + 2
    leq = np.eye(n, dtype=bool)
    leq[0, :] = True
    leq[:, n - 1] = True
    for i in range(k):
        for j in range(k):
            if inner[i][j]:
                leq[i + 1, j + 1] = True
    return leq


def _lattice_key(leq):
    """Canonical encoding: over all labelings along a linear extension, the largest order matrix."""
    from .resalg import linear_extensions

    n = len(leq)
    best = None
    for order in linear_extensions(leq, 0, n - 1):
        enc = tuple((~leq[np.ix_(order, order)]).ravel().tolist())
        if best is None or enc < best[0]:
            best = (enc, order)
    return best


def enumerate_lattices(n, max_n=None):
    """All bounded lattices on ``n`` unlabeled elements, one canonical representative each."""
    cap = DEFAULT_MAX_LATTICE if max_n is None else max_n
    if n > cap:
        raise CapExceeded(f"lattice order {n} exceeds the configured cap {cap}")
    if n < 1:
        raise ValueError("n must be positive")
    if n == 1:
        one = np.ones((1, 1), dtype=bool)
        z = np.zeros((1, 1), dtype=np.int64)
        return [Lattice("1.0", one, z, z)]
    k = n - 2
    pairs = [(i, j) for i in range(k) for j in range(i + 1, k)]
    seen = {}
    # every finite poset has a natural labeling, so upper-triangular relations suffice
    for bits in range(1 << len(pairs)):
        rel = [[False] * k for _ in range(k)]
        for b, (i, j) in enumerate(pairs):
            if bits >> b & 1:
                rel[i][j] = True
        if not _closed(rel, k):
            continue
        leq = _bounded(rel, k)
        if (bounds(leq, upper=True) < 0).any():
            continue
        enc, order = _lattice_key(leq)
        if enc not in seen:
            seen[enc] = leq[np.ix_(order, order)]
    out = []
    for idx, enc in enumerate(sorted(seen)):
        leq = seen[enc]
        leq.setflags(write=False)
        out.append(Lattice(f"{n}.{idx}", leq, bounds(leq, upper=False), bounds(leq, upper=True)))
    return out


def naive_lattice_count(n):
    """Independent count: filter every relation on the interior points, dedupe by brute-force relabeling."""
    if n <= 2:
        return 1
    k = n - 2
    off = [(i, j) for i in range(k) for j in range(k) if i != j]
    classes = set()
    for bits in range(1 << len(off)):
        leq = np.eye(n, dtype=bool)
        leq[0, :] = True
        leq[:, -1] = True
        for b, (i, j) in enumerate(off):
            if bits >> b & 1:
                leq[i + 1, j + 1] = True
        if (leq & leq.T & ~np.eye(n, dtype=bool)).any():
            continue
        if ((leq.astype(int) @ leq.astype(int) > 0) & ~leq).any():
            continue
        if not _all_joins(leq):
            continue
        classes.add(min(
            leq[np.ix_(p, p)].tobytes()
            for p in ([0] + list(q) + [n - 1] for q in itertools.permutations(range(1, n - 1)))
        ))
    return len(classes)


def _all_joins(leq):
    n = len(leq)
    for x in range(n):
        for y in range(x + 1, n):
            ub = [z for z in range(n) if leq[x, z] and leq[y, z]]
            if not any(all(leq[z, w] for w in ub) for z in ub):
                return False
    return True


def lattice_automorphisms(leq):
    n = len(leq)
    out = []
    for q in itertools.permutations(range(1, n - 1)):
        p = [0] + list(q) + [n - 1] if n > 1 else [0]
        if np.array_equal(leq[np.ix_(p, p)], leq):
            out.append(np.array(p))
    return out or [np.arange(n)]


def is_distributive(lat):
    m, j = lat.meet, lat.join
    n = lat.size
    for x in range(n):
        for y in range(n):
            for z in range(n):
                if m[x, j[y, z]] != j[m[x, y], m[x, z]]:
                    return False
    return True


def top_join_irreducible(lat):
    """True when the top element covers exactly one element."""
    top = lat.size - 1
    return sum(1 for a, b in hasse_edges(lat.leq) if b == top) == 1


# --------------------------------------------------------------- BL search


def _monoid_tables(lat):
    """Every commutative monoid table with unit 1 on the lattice that is below meet,
    monotone, associative and preserves binary joins (hence residuated)."""
    n = lat.size
    leq = lat.leq.tolist()
    meet = lat.meet.tolist()
    join = lat.join.tolist()
    top = n - 1
    inner = list(range(1, n - 1))
    t = [[-1] * n for _ in range(n)]
    for x in range(n):
        t[0][x] = t[x][0] = 0
        t[top][x] = t[x][top] = x
    slots = [(x, y) for x in inner for y in inner if x <= y]
    domains = [[z for z in range(n) if leq[z][meet[x][y]]] for x, y in slots]
    comparable = [[a for a in range(n) if leq[a][x] or leq[x][a]] for x in range(n)]

    def ok(x, y):
        v = t[x][y]
        for a, b in ((x, y), (y, x)):
            for a2 in comparable[a]:
                w = t[a2][b]
                if w < 0:
                    continue
                if leq[a2][a] and not leq[w][v]:
                    return False
                if leq[a][a2] and not leq[v][w]:
                    return False
            row = t[a]
            for b1 in range(n):
                u = row[b1]
                if u < 0:
                    continue
                for b2 in range(b1 + 1, n):
                    w = row[b2]
                    if w < 0:
                        continue
                    s = row[join[b1][b2]]
                    if s >= 0 and s != join[u][w]:
                        return False
        for a in inner:
            for b in inner:
                u = t[a][b]
                if u < 0:
                    continue
                for c in inner:
                    w = t[b][c]
                    if w < 0:
                        continue
                    l, r = t[u][c], t[a][w]
                    if l >= 0 and r >= 0 and l != r:
                        return False
        return True

    def rec(i):
        if i == len(slots):
            yield np.array(t, dtype=np.int64)
            return
        x, y = slots[i]
        for v in domains[i]:
            t[x][y] = t[y][x] = v
            if ok(x, y):
                yield from rec(i + 1)
        t[x][y] = t[y][x] = -1

    yield from rec(0)


@dataclass(frozen=True)
class CensusRecord:
    order: int
    lattice_id: str
    tables: ResLat = field(repr=False)
    classification: Classification
    comet: CometReport

    def as_dict(self):
        L = self.tables
        return {
            "order": self.order,
            "lattice_id": self.lattice_id,
            "leq": L.leq.astype(int).tolist(),
            "odot": L.odot.tolist(),
            "arrow": L.arrow.tolist(),
            "classification": self.classification.as_dict(),
            "comet": self.comet.as_dict(),
        }


def _bl_on_lattice(lat):
    autos = lattice_automorphisms(lat.leq)
    found = {}
    for odot in _monoid_tables(lat):
        L = build(lat.leq, odot)
        c = check_axioms(L)
        if not c.bl:
            continue
        keys = []
        for p in autos:
            inv = np.empty_like(p)
            inv[p] = np.arange(len(p))
            keys.append((tuple(inv[odot[np.ix_(p, p)]].ravel().tolist()), p))
        key, p = min(keys, key=lambda kv: kv[0])
        if key in found:
            continue
        canon = build(lat.leq, np.array(key).reshape(lat.size, lat.size))
        found[key] = CensusRecord(lat.size, lat.lattice_id, canon, check_axioms(canon), comet_report(canon))
    return [found[k] for k in sorted(found)]


def enumerate_bl(n, chains_only=False, max_n=None, workers=1):
    """All BL-algebras of order ``n`` up to isomorphism, in canonical order."""
    cap = DEFAULT_MAX_CENSUS if max_n is None else max_n
    if n > cap:
        raise CapExceeded(f"census order {n} exceeds the configured cap {cap}")
    if n < 2:
        raise ValueError("BL-algebras have at least two elements")
    lattices = enumerate_lattices(n, max_n=max(cap, DEFAULT_MAX_LATTICE))
    if chains_only:
        lattices = [lat for lat in lattices if is_chain(lat.leq)]
    if workers > 1:
        with ProcessPoolExecutor(workers) as pool:
            parts = list(pool.map(_bl_on_lattice, lattices))
    else:
        parts = [_bl_on_lattice(lat) for lat in lattices]
    # lattices arrive in canonical order and each part is sorted, so the merge is deterministic
    return [rec for part in parts for rec in part]


class CensusSummary(NamedTuple):
    order: int
    bl: int
    mv: int
    chains: int
    comets: int


def summarize(records, order):
    return CensusSummary(
        order,
        len(records),
        sum(r.classification.mv for r in records),
        sum(r.classification.chain for r in records),
        sum(r.comet.is_comet for r in records),
    )


def find_record(records, L):
    """Indices of census records isomorphic to ``L``."""
    return [i for i, r in enumerate(records) if are_isomorphic(r.tables, L) is not None]


# ---------------------------------------------------------- 4-chain ledger


class Verdict(str, enum.Enum):
    MV = "MV"
    BL_NOT_MV = "BLnotMV"
    NOT_ASSOCIATIVE = "NotAssociative"
    DIV_FAILS = "DivFails"
    IMPOSSIBLE = "Impossible"


@dataclass(frozen=True)
class Chain4Case:
    case_id: int
    assignment: tuple  # values of I.I, J.J, I.J as labels
    verdict: Verdict
    law: str = None
    witness: tuple = None
    matches: str = None

    def as_dict(self):
        return {
            "case": self.case_id,
            "I.I": self.assignment[0], "J.J": self.assignment[1], "I.J": self.assignment[2],
            "verdict": self.verdict.value, "law": self.law,
            "witness": list(self.witness) if self.witness else None,
            "matches": self.matches,
        }


# the twelve admissible (I.I, J.J, I.J) assignments on 0 < I < J < 1, in the classical case order
CHAIN4_CASES = (
    ("0", "I", "0"), ("0", "I", "I"), ("0", "J", "I"), ("0", "J", "0"),
    ("0", "0", "0"), ("0", "0", "I"), ("I", "I", "I"), ("I", "I", "0"),
    ("I", "J", "I"), ("I", "J", "0"), ("I", "0", "I"), ("I", "0", "0"),
)

CHAIN4_LABELS = ("0", "I", "J", "R")


def chain4_table(assignment):
    ii, jj, ij = (CHAIN4_LABELS.index(v) for v in assignment)
    t = np.zeros((4, 4), dtype=np.int64)
    t[3, :] = t[:, 3] = np.arange(4)
    t[1, 1], t[2, 2], t[1, 2], t[2, 1] = ii, jj, ij, ij
    return t


def chain4_ledger():
    leq = np.triu(np.ones((4, 4), dtype=bool))
    out = []
    for case_id, assignment in enumerate(CHAIN4_CASES, start=1):
        odot = chain4_table(assignment)
        bad = _monotone_violation(leq, odot)
        if bad:
            out.append(Chain4Case(case_id, assignment, Verdict.IMPOSSIBLE, *bad))
            continue
        bad = _monoid_violation(leq, odot, 3)
        if bad:
            out.append(Chain4Case(case_id, assignment, Verdict.NOT_ASSOCIATIVE, *bad))
            continue
        L = build(leq, odot, CHAIN4_LABELS)
        c = check_axioms(L)
        if not c.divisible:
            out.append(Chain4Case(case_id, assignment, Verdict.DIV_FAILS, c.failure_law, c.failure_witness))
            continue
        if not c.bl:
            raise AssertionError(f"case {case_id} fails {c.failure_law} on a chain")
        match = next((name for name in golden.FOUR_ELEMENT
                      if are_isomorphic(L, golden.load(name)) is not None), None)
        verdict = Verdict.MV if c.mv else Verdict.BL_NOT_MV
        out.append(Chain4Case(case_id, assignment, verdict, matches=match))
    return out


# -------------------------------------------------------------- ring atlas


class AtlasRow(NamedTuple):
    spec: str
    order: int
    n_m: int
    n_p: int
    n_I: int
    classification: Classification
    multiplication_ring: bool
    matches: str

    def as_dict(self):
        return {
            "ring": self.spec, "order": self.order,
            "n_m": self.n_m, "n_p": self.n_p, "n_I": self.n_I,
            "classification": self.classification.as_dict(),
            "multiplication_ring": self.multiplication_ring,
            "matches": self.matches,
        }


@dataclass(frozen=True)
class AtlasReport:
    family: str
    rows: tuple

    def summary(self):
        matches = {}
        for r in self.rows:
            if r.matches:
                matches[r.matches] = matches.get(r.matches, 0) + 1
        return {
            "rings": len(self.rows),
            "bl": sum(r.classification.bl for r in self.rows),
            "mv": sum(r.classification.mv for r in self.rows),
            "chains": sum(r.classification.chain for r in self.rows),
            "matches": dict(sorted(matches.items())),
        }

    def as_dict(self):
        return {"family": self.family, "rows": [r.as_dict() for r in self.rows], "summary": self.summary()}


def atlas_row(spec, max_order=None):
    from .finring import build_ring
    from .ideal_lattice import all_ideals, ideal_counts, is_multiplication_ring
    from .resalg import from_ideal_lattice

    R = build_ring(spec, max_order)
    lattice = all_ideals(R, max_order)
    counts = ideal_counts(lattice)
    L = from_ideal_lattice(lattice)
    c = check_axioms(L)
    match = None
    for name, gspec in golden.SPECS.items():
        if gspec.size == L.size and are_isomorphic(L, golden.load(name)) is not None:
            match = name
            break
    return AtlasRow(spec, R.order, counts.n_m, counts.n_p, counts.n_I, c,
                    is_multiplication_ring(lattice), match)


def ring_atlas(specs, family="custom", max_order=None):
    """Classify Id(R) for every ring spec and match small results against the reference tables."""
    return AtlasReport(family, tuple(atlas_row(s, max_order) for s in specs))


def zn_family(lo, hi):
    return [f"zn:{n}" for n in range(lo, hi + 1)]


def monic_polys(n, d):
    """Every monic polynomial of degree ``d`` over ``Z_n`` as a spec string."""
    from .finring import format_poly

    out = []
    for low in itertools.product(range(n), repeat=d):
        out.append(format_poly(tuple(reversed(low)) + (1,)))
    return out


def polyquot_family(max_order, min_degree=2):
    specs = []
    for n in range(2, max_order + 1):
        d = min_degree
        while n ** d <= max_order:
            specs.extend(f"polyquot:{n}:{f}" for f in monic_polys(n, d))
            d += 1
    return specs


def product_family(base, max_order):
    """Unordered pairs from ``base`` (spec, order) whose product order is within the cap."""
    out = []
    for (s1, o1), (s2, o2) in itertools.combinations_with_replacement(base, 2):
        if o1 * o2 <= max_order:
            out.append(f"prod:({s1},{s2})")
    return out
