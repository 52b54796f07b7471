"""Finite commutative residuated lattices as tables.

A :class:`ResLat` carries the order, the lattice operations, the monoid
product ``odot`` and its residuum ``arrow``.  Element ``bot`` is 0 and
``top`` is 1 of the algebra.  Every constructor validates the full set of
axioms; the printed tables of a source are treated as claims to check, never
as trusted input.
"""
from __future__ import annotations

import json
from dataclasses import dataclass, field
from typing import NamedTuple

import numpy as np

from .errors import NoMaximum, NotALattice, NotAMonoid, NotResiduated, ParseError
from .order import bounds, is_chain, order_violation


def _ro(table, dtype=np.int64):
    arr = np.array(table, dtype=dtype)
    arr.setflags(write=False)
    return arr


@dataclass(frozen=True, eq=False)
class ResLat:
    size: int
    leq: np.ndarray = field(repr=False)
    meet: np.ndarray = field(repr=False)
    join: np.ndarray = field(repr=False)
    odot: np.ndarray = field(repr=False)
    arrow: np.ndarray = field(repr=False)
    bot: int
    top: int
    labels: tuple = None

    def __post_init__(self):
        object.__setattr__(self, "leq", _ro(self.leq, bool))
        for name in ("meet", "join", "odot", "arrow"):
            object.__setattr__(self, name, _ro(getattr(self, name)))
        labels = self.labels or [str(i) for i in range(self.size)]
        object.__setattr__(self, "labels", tuple(str(s) for s in labels))

    def __repr__(self):
        return f"ResLat(size={self.size}, labels={list(self.labels)})"

    def index(self, label):
        return self.labels.index(label)

    @property
    def neg(self):
        return self.arrow[:, self.bot]

    def with_labels(self, labels):
        return ResLat(self.size, self.leq, self.meet, self.join, self.odot, self.arrow,
                      self.bot, self.top, tuple(labels))


def structure_violation(L):
    """First failed residuated-lattice axiom as ``(law, witness)``, or None."""
    n = L.size
    bad = order_violation(L.leq)
    if bad:
        return bad
    for name, table, upper in (("meet", L.meet, False), ("join", L.join, True)):
        expected = bounds(L.leq, upper=upper)
        diff = np.argwhere(expected != table)
        if len(diff):
            return name, tuple(int(v) for v in diff[0])
    if not L.leq[L.bot].all() or not L.leq[:, L.top].all():
        return "bounds", (L.bot, L.top)
    return _monoid_violation(L.leq, L.odot, L.top) or _residuation_violation(L.leq, L.odot, L.arrow)


def _monoid_violation(leq, odot, top):
    n = len(odot)
    elems = np.arange(n)
    if odot.min() < 0 or odot.max() >= n:
        return "closure", ()
    diff = np.argwhere(odot != odot.T)
    if len(diff):
        return "commutativity", tuple(int(v) for v in diff[0])
    diff = np.flatnonzero(odot[top] != elems)
    if len(diff):
        return "unit", (int(diff[0]),)
    lhs = odot[odot[:, :, None], elems[None, None, :]]
    rhs = odot[elems[:, None, None], odot[None, :, :]]
    diff = np.argwhere(lhs != rhs)
    if len(diff):
        return "associativity", tuple(int(v) for v in diff[0])
    return None


def _monotone_violation(leq, odot):
    # x <= y must give x.z <= y.z
    ok = ~leq[:, :, None] | leq[odot[:, None, :], odot[None, :, :]]
    diff = np.argwhere(~ok)
    if len(diff):
        return "monotonicity", tuple(int(v) for v in diff[0])
    return None


def _residuation_violation(leq, odot, arrow):
    # z <= x->y  iff  x.z <= y, indexed [x, y, z]
    lhs = leq[np.arange(len(leq))[None, None, :], arrow[:, :, None]]
    rhs = leq[odot[:, None, :], np.arange(len(leq))[None, :, None]]
    diff = np.argwhere(lhs != rhs)
    if len(diff):
        return "residuation", tuple(int(v) for v in diff[0])
    return None


def residuum(leq, odot):
    """``x -> y`` as the maximum of ``{z : x.z <= y}``; raises NoMaximum(x, y)."""
    leq = np.asarray(leq, dtype=bool)
    odot = np.asarray(odot, dtype=np.int64)
    n = len(leq)
    out = np.empty((n, n), dtype=np.int64)
    for x in range(n):
        below = leq[odot[x]]  # below[z, y]: x.z <= y
        for y in range(n):
            cands = np.flatnonzero(below[:, y])
            top = [c for c in cands if leq[cands, c].all()]
            if not top:
                raise NoMaximum(f"no largest z with x.z <= y for x={x}, y={y}",
                                law="residuum", witness=(x, y))
            out[x, y] = top[0]
    return out


def _raise(bad, exc_type, what):
    law, witness = bad
    raise exc_type(f"{what}: {law} fails at {witness}", law=law, witness=witness)


def build(leq, odot, labels=None, arrow=None):
    """Validate ``leq``/``odot`` and return the algebra, computing ``arrow``."""
    leq = np.asarray(leq, dtype=bool)
    odot = np.asarray(odot, dtype=np.int64)
    n = len(leq)
    if leq.shape != (n, n) or odot.shape != (n, n):
        raise ParseError("tables must be square and of equal size")
    bad = order_violation(leq)
    if bad:
        _raise(bad, NotALattice, "not a partial order")
    meet, join = bounds(leq, upper=False), bounds(leq, upper=True)
    for name, table in (("meet", meet), ("join", join)):
        missing = np.argwhere(table < 0)
        if len(missing):
            _raise((f"no {name}", tuple(int(v) for v in missing[0])), NotALattice, "not a lattice")
    bot = int(np.flatnonzero(leq.all(axis=1))[0])
    top = int(np.flatnonzero(leq.all(axis=0))[0])
    bad = _monoid_violation(leq, odot, top)
    if bad:
        _raise(bad, NotAMonoid, "not a commutative monoid with unit 1")
    bad = _monotone_violation(leq, odot)
    if bad:
        _raise(bad, NotResiduated, "product is not monotone")
    computed = residuum(leq, odot)
    if arrow is not None:
        arrow = np.asarray(arrow, dtype=np.int64)
        diff = np.argwhere(arrow != computed)
        if len(diff):
            x, y = (int(v) for v in diff[0])
            raise NotResiduated(
                f"supplied arrow[{x},{y}]={arrow[x, y]} but the residuum is {computed[x, y]}",
                law="arrow mismatch", witness=(x, y))
    bad = _residuation_violation(leq, odot, computed)
    if bad:
        _raise(bad, NotResiduated, "not residuated")
    return ResLat(n, leq, meet, join, odot, computed, bot, top, labels)


# ---------------------------------------------------------------- table specs


@dataclass
class AlgebraTableSpec:
    """Import format for printed tables.

    The order is given as a boolean ``leq`` matrix, as ``leq_pairs`` (pairs
    ``(x, y)`` meaning ``x <= y``, closed transitively), or through ``meet``
    and ``join``.  Table entries may be indices or labels.
    """

    size: int
    odot: list
    leq: list = None
    leq_pairs: list = None
    meet: list = None
    join: list = None
    arrow: list = None
    labels: list = None

    def to_json(self):
        return json.dumps({k: v for k, v in self.__dict__.items() if v is not None}, sort_keys=True)

    @classmethod
    def from_json(cls, text):
        data = json.loads(text)
        try:
            return cls(**data)
        except TypeError as exc:
            raise ParseError(f"bad algebra spec: {exc}") from exc


def _as_index(value, labels, n):
    if isinstance(value, str):
        if labels is None or value not in labels:
            raise ParseError(f"unknown label {value!r}")
        return labels.index(value)
    v = int(value)
    if not 0 <= v < n:
        raise ParseError(f"index {v} out of range 0..{n - 1}")
    return v


def _square(table, labels, n, name):
    if len(table) != n or any(len(row) != n for row in table):
        raise ParseError(f"{name} table must be {n} x {n}")
    return np.array([[_as_index(v, labels, n) for v in row] for row in table], dtype=np.int64)


def _leq_from_spec(spec, labels, n):
    if spec.leq is not None:
        leq = np.array(spec.leq, dtype=bool)
        if leq.shape != (n, n):
            raise ParseError(f"leq matrix must be {n} x {n}")
        return leq
    if spec.leq_pairs is not None:
        leq = np.eye(n, dtype=bool)
        for x, y in spec.leq_pairs:
            leq[_as_index(x, labels, n), _as_index(y, labels, n)] = True
        # transitive closure of the listed pairs
        for k in range(n):
            leq |= leq[:, k:k + 1] & leq[k:k + 1, :]
        return leq
    if spec.meet is not None:
        meet = _square(spec.meet, labels, n, "meet")
        return meet == np.arange(n)[:, None]
    raise ParseError("algebra spec needs leq, leq_pairs or meet/join")


def from_tables(spec):
    n = spec.size
    labels = list(spec.labels) if spec.labels is not None else None
    if labels is not None and len(labels) != n:
        raise ParseError("one label per element is required")
    leq = _leq_from_spec(spec, labels, n)
    odot = _square(spec.odot, labels, n, "odot")
    arrow = _square(spec.arrow, labels, n, "arrow") if spec.arrow is not None else None
    L = build(leq, odot, labels, arrow)
    for name in ("meet", "join"):
        given = getattr(spec, name)
        if given is not None:
            diff = np.argwhere(_square(given, labels, n, name) != getattr(L, name))
            if len(diff):
                _raise((name, tuple(int(v) for v in diff[0])), NotALattice, f"supplied {name} table is wrong")
    return L


def to_spec(L):
    return AlgebraTableSpec(
        size=L.size,
        odot=L.odot.tolist(),
        leq=L.leq.astype(int).tolist(),
        arrow=L.arrow.tolist(),
        labels=list(L.labels),
    )


# -------------------------------------------------------------- ideal lattices


def from_ideal_lattice(lattice, labels=None):
    """Id(R) with intersection, sum, ideal product and ``I -> J = (J : I)``."""
    from .ideal_lattice import ideal_labels

    n = len(lattice)
    labels = labels or ideal_labels(lattice)
    arrow = lattice.quotient_table.T
    L = ResLat(n, lattice.leq, lattice.meet_table, lattice.join_table,
               lattice.product_table, arrow, lattice.bottom, lattice.top, labels)
    bad = structure_violation(L)
    if bad:
        raise NotResiduated(f"ideal lattice fails {bad[0]} at {bad[1]}", law=bad[0], witness=bad[1])
    return L


# ------------------------------------------------------------------- axioms


@dataclass(frozen=True)
class Classification:
    residuated: bool
    prelinear: bool
    divisible: bool
    bl: bool
    mv: bool
    chain: bool
    degenerate: bool = False
    failure_law: str = None
    failure_witness: tuple = None

    def flags(self):
        return (self.residuated, self.prelinear, self.divisible, self.bl, self.mv, self.chain)

    def as_dict(self):
        out = {k: getattr(self, k) for k in
               ("residuated", "prelinear", "divisible", "bl", "mv", "chain", "degenerate")}
        if self.failure_law:
            out["failure"] = {"law": self.failure_law, "witness": list(self.failure_witness)}
        return out


def _first(mask):
    hits = np.argwhere(mask)
    return tuple(int(v) for v in hits[0]) if len(hits) else None


def check_axioms(L):
    """Exhaustive scan of residuation, (prel), (div), involution and totality."""
    chain = is_chain(L.leq)
    if L.size == 1:
        return Classification(False, True, True, False, False, chain, True,
                              "degenerate", (0,))
    failure = None
    bad = structure_violation(L)
    residuated = bad is None
    if bad:
        failure = bad
    # (x->y) v (y->x) = 1
    prel_fail = L.join[L.arrow, L.arrow.T] != L.top
    prelinear = not prel_fail.any()
    if failure is None and not prelinear:
        failure = ("prelinearity", _first(prel_fail))
    # x.(x->y) = x ^ y
    elems = np.arange(L.size)
    div_fail = L.odot[elems[:, None], L.arrow] != L.meet
    divisible = not div_fail.any()
    if failure is None and not divisible:
        failure = ("divisibility", _first(div_fail))
    bl = residuated and prelinear and divisible
    neg = L.arrow[:, L.bot]
    inv_fail = neg[neg] != elems
    mv = bl and not inv_fail.any()
    if failure is None and bl and not mv:
        failure = ("involution", _first(inv_fail))
    law, witness = failure if failure else (None, None)
    return Classification(residuated, bool(prelinear), bool(divisible), bl, bool(mv), chain,
                          False, law, witness)


class MVCheck(NamedTuple):
    ok: bool
    law: str = None
    witness: tuple = None


def neg_table(L):
    return L.arrow[:, L.bot]


def oplus_table(L):
    """``x (+) y = (x* . y*)*``."""
    neg = neg_table(L)
    return neg[L.odot[neg[:, None], neg[None, :]]]


def verify_mv_axioms(L):
    """Check the four MV-algebra axioms for ``(L, (+), *, 0)`` directly."""
    n = L.size
    elems = np.arange(n)
    neg = neg_table(L)
    plus = oplus_table(L)
    zero = L.bot
    hit = _first(plus != plus.T)
    if hit:
        return MVCheck(False, "oplus commutativity", hit)
    lhs = plus[plus[:, :, None], elems[None, None, :]]
    rhs = plus[elems[:, None, None], plus[None, :, :]]
    hit = _first(lhs != rhs)
    if hit:
        return MVCheck(False, "oplus associativity", hit)
    hit = _first(plus[:, zero] != elems)
    if hit:
        return MVCheck(False, "oplus unit", hit)
    hit = _first(neg[neg] != elems)
    if hit:
        return MVCheck(False, "double negation", hit)
    hit = _first(plus[:, neg[zero]] != neg[zero])
    if hit:
        return MVCheck(False, "absorbing 0*", hit)
    # (x* + y)* + y == (y* + x)* + x
    left = plus[neg[plus[neg[:, None], elems[None, :]]], elems[None, :]]
    hit = _first(left != left.T)
    if hit:
        return MVCheck(False, "Lukasiewicz identity", hit)
    return MVCheck(True)


class Derived(NamedTuple):
    neg: int
    oplus: int


def derived(L, x, y):
    neg = neg_table(L)
    return Derived(int(neg[x]), int(neg[L.odot[neg[x], neg[y]]]))


# --------------------------------------------------------------- constructions


def direct_product(A, B):
    """Componentwise algebra; the pair ``(a, b)`` has index ``a * B.size + b``."""
    nb = B.size
    ia = np.repeat(np.arange(A.size), nb)
    ib = np.tile(np.arange(nb), A.size)

    def pair(ta, tb):
        return ta[ia[:, None], ia[None, :]] * nb + tb[ib[:, None], ib[None, :]]

    leq = A.leq[ia[:, None], ia[None, :]] & B.leq[ib[:, None], ib[None, :]]
    labels = [f"({A.labels[a]},{B.labels[b]})" for a, b in zip(ia, ib)]
    return ResLat(A.size * nb, leq, pair(A.meet, B.meet), pair(A.join, B.join),
                  pair(A.odot, B.odot), pair(A.arrow, B.arrow),
                  A.bot * nb + B.bot, A.top * nb + B.top, labels)


def restrict(L, members, bot=None):
    """Induced algebra on ``members`` (sorted), recomputing the residuum inside.

    Used for subalgebras and for intervals ``[b, 1]``, where the bottom is
    ``b`` rather than the bottom of ``L``.
    """
    members = sorted(int(m) for m in members)
    index = {m: i for i, m in enumerate(members)}
    sub = np.ix_(members, members)
    try:
        odot = np.vectorize(index.__getitem__)(L.odot[sub])
    except KeyError as exc:
        raise NotAMonoid("subset is not closed under the product", law="closure",
                         witness=(int(exc.args[0]),)) from None
    labels = [L.labels[m] for m in members]
    return build(L.leq[sub], odot, labels)


def subalgebra(L, gens):
    """Close ``gens`` together with 0 and 1 under meet, join, product and arrow.

    Returns ``(algebra, embedding)`` where ``embedding[i]`` is the element of
    ``L`` behind element ``i`` of the subalgebra.
    """
    members = {L.bot, L.top} | {int(g) for g in gens}
    tables = (L.meet, L.join, L.odot, L.arrow)
    while True:
        cur = sorted(members)
        grown = set(members)
        for t in tables:
            grown.update(int(v) for v in np.unique(t[np.ix_(cur, cur)]))
        if grown == members:
            break
        members = grown
    sub = restrict(L, members)
    emb = tuple(sorted(members))
    if not np.array_equal(sub.arrow, np.vectorize({m: i for i, m in enumerate(emb)}.__getitem__)(
            L.arrow[np.ix_(emb, emb)])):
        raise AssertionError("closed subset whose arrow differs from the induced residuum")
    return sub, emb


# --------------------------------------------------------------- isomorphism


def _profile(L):
    """Per-element invariants preserved by every isomorphism."""
    neg = neg_table(L)
    diag = L.odot[np.arange(L.size), np.arange(L.size)]
    down = L.leq.sum(axis=0)
    up = L.leq.sum(axis=1)
    return [
        (int(down[x]), int(up[x]), bool(diag[x] == x), bool(neg[neg[x]] == x),
         int(down[diag[x]]), int(down[neg[x]]), int((L.odot[x] == L.bot).sum()))
        for x in range(L.size)
    ]


def are_isomorphic(A, B):
    """A bijection ``A -> B`` preserving order, product and arrow, or None."""
    if A.size != B.size:
        return None
    pa, pb = _profile(A), _profile(B)
    if sorted(pa) != sorted(pb):
        return None
    n = A.size
    cands = [[y for y in range(n) if pb[y] == pa[x]] for x in range(n)]
    order = sorted(range(n), key=lambda x: len(cands[x]))
    f = [-1] * n
    used = [False] * n

    def consistent(x):
        y = f[x]
        for u in range(n):
            v = f[u]
            if v < 0:
                continue
            if A.leq[x, u] != B.leq[y, v] or A.leq[u, x] != B.leq[v, y]:
                return False
            for ta, tb in ((A.odot, B.odot), (A.arrow, B.arrow)):
                w = f[ta[x, u]]
                if w >= 0 and w != tb[y, v]:
                    return False
                w = f[ta[u, x]]
                if w >= 0 and w != tb[v, y]:
                    return False
        return True

    def search(k):
        if k == n:
            return True
        x = order[k]
        for y in cands[x]:
            if used[y]:
                continue
            f[x], used[y] = y, True
            if consistent(x) and search(k + 1):
                return True
            f[x], used[y] = -1, False
        return False

    if not search(0):
        return None
    fa = np.array(f)
    for ta, tb in ((A.odot, B.odot), (A.arrow, B.arrow)):
        if not np.array_equal(fa[ta], tb[fa[:, None], fa[None, :]]):
            return None
    return tuple(f)


def linear_extensions(leq, first, last):
    """All orderings of the carrier that start at ``first``, end at ``last`` and respect ``leq``."""
    leq = np.asarray(leq, dtype=bool)
    n = len(leq)
    inner = [x for x in range(n) if x not in (first, last)]
    strict = leq & ~np.eye(n, dtype=bool)
    out = []

    def rec(prefix, remaining):
        if not remaining:
            out.append([first] + prefix + [last])
            return
        for x in remaining:
            # x is available once everything strictly below it is placed
            if not any(strict[y, x] for y in remaining if y != x):
                rec(prefix + [x], [y for y in remaining if y != x])

    rec([], inner)
    return out


def permute(L, order):
    """Relabel so that new element ``i`` is old element ``order[i]``."""
    order = np.asarray(order, dtype=np.int64)
    inv = np.empty_like(order)
    inv[order] = np.arange(len(order))
    sub = np.ix_(order, order)

    def t(table):
        return inv[table[sub]]

    return ResLat(L.size, L.leq[sub], t(L.meet), t(L.join), t(L.odot), t(L.arrow),
                  int(inv[L.bot]), int(inv[L.top]), [L.labels[i] for i in order])


def canonical_form(L):
    """Canonical representative of the isomorphism class of ``L``.

    Among relabelings that list the carrier along a linear extension of the
    order, pick the lexicographically greatest order matrix, then the least
    product table.  Returns ``(canonical algebra, key bytes)``.
    """
    best = None
    for order in linear_extensions(L.leq, L.bot, L.top):
        order = np.asarray(order)
        inv = np.empty_like(order)
        inv[order] = np.arange(len(order))
        leq = L.leq[np.ix_(order, order)]
        odot = inv[L.odot[np.ix_(order, order)]]
        key = (tuple((~leq).ravel().tolist()), tuple(odot.ravel().tolist()))
        if best is None or key < best[0]:
            best = (key, order)
    perm = permute(L, best[1])
    return perm, bytes(np.packbits(perm.leq).tobytes()) + bytes(perm.odot.astype(np.uint8).ravel().tolist())


def hasse(L):
    from .order import hasse_edges

    return [(L.labels[a], L.labels[b]) for a, b in hasse_edges(L.leq)]
