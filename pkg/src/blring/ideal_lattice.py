"""Ideals of a finite ring, the four ideal operations and the lattice Id(R).

Ideals are bitsets over the element indices of their ring.  The complete
family of ideals is found by closing the principal ideals under pairwise sums;
in a finite unitary ring every ideal is a finite sum of principal ones.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from functools import cached_property
from typing import NamedTuple

import numpy as np

from .bits import bool_from_mask, indices_from_mask, mask_from_bool, popcount
from .errors import CapExceeded, NoProperIdeals, NotAnIdeal, RingMismatch
from .finring import DEFAULT_MAX_ORDER, ideal_mask, is_ideal_mask
from .order import bounds, hasse_edges


@dataclass(frozen=True, eq=False)
class Ideal:
    ring: object
    mask: int
    gens: tuple = field(default=(), repr=False)

    def __eq__(self, other):
        return isinstance(other, Ideal) and self.ring is other.ring and self.mask == other.mask

    def __hash__(self):
        return hash((id(self.ring), self.mask))

    def __contains__(self, a):
        return bool(self.mask >> a & 1)

    def __len__(self):
        return popcount(self.mask)

    def __le__(self, other):
        _same_ring(self, other)
        return self.mask & other.mask == self.mask

    def __repr__(self):
        return f"Ideal({{{', '.join(self.ring.label(a) for a in self.members())}}})"

    @classmethod
    def from_members(cls, R, members):
        mask = ideal_mask(R, members)
        if not is_ideal_mask(R, mask):
            raise NotAnIdeal(f"{sorted(set(members))} is not an ideal")
        return cls(R, mask)

    def members(self):
        return indices_from_mask(self.mask, self.ring.order)

    def flags(self):
        return bool_from_mask(self.mask, self.ring.order)

    @property
    def is_zero(self):
        return self.mask == 1 << self.ring.zero

    @property
    def is_whole(self):
        return self.mask == (1 << self.ring.order) - 1


def _same_ring(I, J):
    if I.ring is not J.ring:
        raise RingMismatch("ideals belong to different rings")


def _ideal(R, flags, gens=()):
    return Ideal(R, mask_from_bool(flags), tuple(gens))


def _additive_closure(R, flags):
    """Close a subset containing zero under + by repeated doubling S <- S + S."""
    flags = flags.copy()
    flags[R.zero] = True
    while True:
        members = np.flatnonzero(flags)
        grown = flags.copy()
        grown[R.add[np.ix_(members, members)]] = True
        if grown.sum() == flags.sum():
            return flags
        flags = grown


def zero_ideal(R):
    return Ideal(R, 1 << R.zero, (R.zero,))


def whole_ideal(R):
    return Ideal(R, (1 << R.order) - 1, (R.one,))


def principal_ideal(R, a):
    if not 0 <= a < R.order:
        raise IndexError(f"element {a} outside ring of order {R.order}")
    flags = np.zeros(R.order, dtype=bool)
    flags[R.mul[a]] = True
    return _ideal(R, flags, (a,))


def ideal_sum(I, J):
    _same_ring(I, J)
    R = I.ring
    flags = np.zeros(R.order, dtype=bool)
    flags[R.add[np.ix_(I.members(), J.members())]] = True
    return _ideal(R, flags, _merge_gens(I.gens, J.gens))


def ideal_product(I, J):
    """Finite sums of products ``i*j``."""
    _same_ring(I, J)
    R = I.ring
    flags = np.zeros(R.order, dtype=bool)
    flags[R.mul[np.ix_(I.members(), J.members())]] = True
    gens = ()
    if I.gens and J.gens:
        gens = tuple(sorted({int(R.mul[g, h]) for g in I.gens for h in J.gens}))
    return _ideal(R, _additive_closure(R, flags), gens)


def ideal_intersection(I, J):
    _same_ring(I, J)
    return Ideal(I.ring, I.mask & J.mask)


def ideal_quotient(I, J):
    """``(I : J) = {x : x*J ⊆ I}``."""
    _same_ring(I, J)
    R = I.ring
    inside = I.flags()
    flags = inside[R.mul[:, J.members()]].all(axis=1)
    return _ideal(R, flags)


def annihilator(I):
    return ideal_quotient(zero_ideal(I.ring), I)


def _merge_gens(a, b):
    seen = dict.fromkeys(a)
    seen.update(dict.fromkeys(b))
    return tuple(seen)


def is_ideal(I):
    return is_ideal_mask(I.ring, I.mask)


# ------------------------------------------------------------------ lattice


@dataclass(frozen=True, eq=False)
class IdealLattice:
    """All ideals of a ring, sorted by (size, bitset), with inclusion table."""

    ring: object
    ideals: tuple
    leq: np.ndarray = field(repr=False)

    @property
    def bottom(self):
        return 0

    @property
    def top(self):
        return len(self.ideals) - 1

    def __len__(self):
        return len(self.ideals)

    @cached_property
    def _index(self):
        return {I.mask: k for k, I in enumerate(self.ideals)}

    def index_of(self, I):
        mask = I.mask if isinstance(I, Ideal) else I
        try:
            return self._index[mask]
        except KeyError:
            raise NotAnIdeal("subset is not among the ideals of the lattice") from None

    def smallest_containing(self, mask):
        for k, I in enumerate(self.ideals):
            if I.mask & mask == mask:
                return k
        raise AssertionError("the whole ring contains every subset")

    @cached_property
    def meet_table(self):
        k = len(self.ideals)
        out = np.empty((k, k), dtype=np.int64)
        for a in range(k):
            for b in range(a, k):
                out[a, b] = out[b, a] = self.index_of(self.ideals[a].mask & self.ideals[b].mask)
        out.setflags(write=False)
        return out

    @cached_property
    def join_table(self):
        # the sum of two ideals is the least ideal containing both
        out = bounds(self.leq, upper=True)
        out.setflags(write=False)
        return out

    @cached_property
    def kinds(self):
        """:class:`IdealKind` of every ideal, in lattice order."""
        return tuple(_classify(self, k) for k in range(len(self.ideals)))

    @cached_property
    def _principal(self):
        return principal_masks(self.ring)

    @cached_property
    def product_table(self):
        """``I J`` as the join of the principal ideals ``(g h)`` over generators."""
        R, k = self.ring, len(self.ideals)
        join = self.join_table
        out = np.empty((k, k), dtype=np.int64)
        for a in range(k):
            for b in range(a, k):
                acc = self.bottom
                for g in self.ideals[a].gens:
                    for h in self.ideals[b].gens:
                        acc = join[acc, self.index_of(self._principal[R.mul[g, h]])]
                out[a, b] = out[b, a] = acc
        out.setflags(write=False)
        return out

    @cached_property
    def quotient_table(self):
        """``quotient_table[i, j]`` is the index of ``(I_i : I_j)``."""
        R, k = self.ring, len(self.ideals)
        flags = np.array([I.flags() for I in self.ideals])
        out = np.empty((k, k), dtype=np.int64)
        for j, J in enumerate(self.ideals):
            cols = R.mul[:, list(J.gens)]
            packed = np.packbits(flags[:, cols].all(axis=2), axis=1, bitorder="little")
            for i in range(k):
                out[i, j] = self.index_of(int.from_bytes(packed[i].tobytes(), "little"))
        out.setflags(write=False)
        return out

    def export(self, labels=None):
        """Member lists, Hasse edges and the inclusion matrix as plain data."""
        labels = labels or ideal_labels(self)
        R = self.ring
        return {
            "ideals": [
                {"label": labels[k], "members": [R.label(int(a)) for a in I.members()]}
                for k, I in enumerate(self.ideals)
            ],
            "hasse": [[labels[a], labels[b]] for a, b in hasse_edges(self.leq)],
            "leq": self.leq.astype(int).tolist(),
        }


def _minimal_gens(R, mask, principal):
    """Greedy generating set: add principal ideals until the ideal is covered."""
    gens, covered = [], 1 << R.zero
    flags = bool_from_mask(mask, R.order)
    for a in np.flatnonzero(flags):
        if not covered >> int(a) & 1:
            gens.append(int(a))
            covered = _sum_mask(R, covered, principal[a])
    return tuple(gens) or (R.zero,)


def _sum_mask(R, m1, m2):
    """``A + B``: adjoin elements of the smaller group one cyclic subgroup at a time."""
    if popcount(m1) > popcount(m2):
        m1, m2 = m2, m1
    flags = bool_from_mask(m2, R.order)
    small = bool_from_mask(m1, R.order)
    while True:
        todo = np.flatnonzero(small & ~flags)
        if not len(todo):
            return mask_from_bool(flags)
        a = int(todo[0])
        group = np.flatnonzero(flags)
        x = a
        while not flags[x]:
            flags[R.add[x, group]] = True
            x = int(R.add[x, a])


def principal_masks(R):
    """Bitset of ``aR`` for every element ``a``."""
    m = R.order
    flags = np.zeros((m, m), dtype=bool)
    flags[np.arange(m)[:, None], R.mul] = True
    packed = np.packbits(flags, axis=1, bitorder="little")
    return [int.from_bytes(row.tobytes(), "little") for row in packed]


def all_ideals(R, max_order=None):
    """The complete ideal lattice of a non-trivial finite ring."""
    if R.is_trivial:
        raise NoProperIdeals("the one-element ring has no proper ideals")
    cap = DEFAULT_MAX_ORDER if max_order is None else max_order
    if R.order > cap:
        raise CapExceeded(f"ring order {R.order} exceeds the configured cap {cap}")
    p_masks = principal_masks(R)
    principal = {}
    for a, mask in enumerate(p_masks):
        principal.setdefault(mask, a)
    found = dict(principal)
    sizes = {mask: popcount(mask) for mask in found}
    by_size = {}
    for mask, size in sizes.items():
        by_size.setdefault(size, []).append(mask)
    frontier = list(found)
    # every ideal is a sum of principal ones, so adjoining principals suffices
    while frontier:
        fresh = []
        for m1 in frontier:
            for m2 in principal:
                both = m1 & m2
                if both in (m1, m2):
                    continue
                # |A + B| = |A| |B| / |A n B|; a known ideal of that size
                # containing A and B must be the sum
                target = sizes[m1] * sizes[m2] // popcount(both)
                union = m1 | m2
                if any(c & union == union for c in by_size.get(target, ())):
                    continue
                s = _sum_mask(R, m1, m2)
                found[s] = None
                sizes[s] = target
                by_size.setdefault(target, []).append(s)
                fresh.append(s)
        frontier = fresh
    ideals = []
    for mask in sorted(found, key=lambda m: (popcount(m), m)):
        gen = found[mask]
        gens = (gen,) if gen is not None else _minimal_gens(R, mask, p_masks)
        ideals.append(Ideal(R, mask, gens))
    masks = [I.mask for I in ideals]
    leq = np.array([[a & b == a for b in masks] for a in masks], dtype=bool)
    leq.setflags(write=False)
    lattice = IdealLattice(R, tuple(ideals), leq)
    lattice.__dict__["_principal"] = p_masks  # seed the cached property
    return lattice


# ------------------------------------------------------- classification


class IdealKind(NamedTuple):
    maximal: bool
    prime: bool
    minimal: bool


class IdealCounts(NamedTuple):
    n_m: int
    n_p: int
    n_I: int


def is_prime(I):
    """Element-level test: proper, and ``a*b in I`` forces ``a in I`` or ``b in I``."""
    if I.is_whole:
        return False
    R = I.ring
    inside = I.flags()
    # quick refutation: some x outside I with x*x inside
    square = R.mul[np.arange(R.order), np.arange(R.order)]
    if (inside[square] & ~inside).any():
        return False
    # one representative per nonzero coset of I suffices
    coset = R.add[:, I.members()].min(axis=1)
    reps = np.unique(coset[~inside])
    return not bool(inside[R.mul[np.ix_(reps, reps)]].any())


def classify_ideal(L, I):
    return L.kinds[L.index_of(I)]


def _classify(L, k):
    proper = k != L.top
    above = np.flatnonzero(L.leq[k])
    maximal = proper and all(j in (k, L.top) for j in above)
    below = np.flatnonzero(L.leq[:, k])
    minimal = k != L.bottom and all(j in (k, L.bottom) for j in below)
    return IdealKind(bool(maximal), is_prime(L.ideals[k]), bool(minimal))


def maximal_ideals(L):
    """Coatoms of the lattice, read off the inclusion table alone."""
    strict = L.leq & ~np.eye(len(L), dtype=bool)
    return [int(k) for k in np.flatnonzero(strict.sum(axis=1) == 1) if k != L.top]


def ideal_counts(L):
    kinds = L.kinds
    n_m = sum(k.maximal for k in kinds)
    n_p = sum(k.prime for k in kinds)
    if n_m != n_p:
        raise AssertionError(f"finite ring with {n_m} maximal but {n_p} prime ideals")
    return IdealCounts(n_m, n_p, len(L.ideals))


def is_local(L):
    return len(maximal_ideals(L)) == 1


def nonunits_form_ideal(R):
    flags = ~R.units
    return is_ideal_mask(R, mask_from_bool(flags))


def is_multiplication_ring(L):
    """Every inclusion ``I ⊆ J`` is realised as ``I = J ⊗ K`` for some ideal ``K``."""
    prod = L.product_table
    for j in range(len(L)):
        reached = np.zeros(len(L), dtype=bool)
        reached[prod[j]] = True
        if not reached[L.leq[:, j]].all():
            return False
    return True


def ideal_labels(L, style="paper"):
    """Display names: ``0, I, J, R`` for up to four ideals, else generator lists."""
    k = len(L)
    if style == "paper" and k <= 4:
        return {2: ["0", "R"], 3: ["0", "I", "R"], 4: ["0", "I", "J", "R"]}[k]
    if style == "index":
        return [str(i) for i in range(k)]
    R = L.ring
    out = []
    for i, I in enumerate(L.ideals):
        if i == L.bottom:
            out.append("0")
        elif i == L.top:
            out.append("R")
        else:
            out.append("(" + ",".join(R.label(g) for g in I.gens) + ")")
    return out
