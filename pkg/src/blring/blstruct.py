"""Idempotents, Boolean elements, comets and the comet decomposition of finite BL-algebras."""
from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .errors import NotBL, NotIdempotent
from .order import is_chain
from .resalg import are_isomorphic, check_axioms, direct_product, restrict


def _require_bl(L):
    c = check_axioms(L)
    if not c.bl:
        raise NotBL(f"not a BL-algebra: {c.failure_law} fails at {c.failure_witness}",
                    law=c.failure_law, witness=c.failure_witness)


def idempotents(L):
    """Elements with ``x . x == x``, in index order."""
    diag = L.odot[np.arange(L.size), np.arange(L.size)]
    return tuple(int(x) for x in np.flatnonzero(diag == np.arange(L.size)))


@dataclass(frozen=True)
class CometReport:
    idempotents: tuple
    d_set: tuple
    pivot: int
    is_comet: bool
    is_chain: bool

    def as_dict(self, labels=None):
        name = (lambda x: labels[x]) if labels else int
        return {
            "idempotents": [name(x) for x in self.idempotents],
            "d_set": [name(x) for x in self.d_set],
            "pivot": name(self.pivot),
            "is_comet": self.is_comet,
            "is_chain": self.is_chain,
        }


def d_set(L, idem=None):
    """Idempotents comparable with every idempotent whose idempotent down-set is a chain."""
    idem = list(idempotents(L) if idem is None else idem)
    leq = L.leq
    out = []
    for x in idem:
        if not all(leq[x, y] or leq[y, x] for y in idem):
            continue
        below = [y for y in idem if leq[y, x]]
        if all(leq[a, b] or leq[b, a] for a in below for b in below):
            out.append(x)
    return tuple(out)


def comet_report(L):
    _require_bl(L)
    idem = idempotents(L)
    ds = d_set(L, idem)
    if not is_chain(L.leq[np.ix_(ds, ds)]):
        raise AssertionError(f"D(L) is not totally ordered: {ds}")
    pivot = max(ds, key=lambda x: int(L.leq[:, x].sum()))
    return CometReport(idem, ds, pivot, pivot != L.bot, is_chain(L.leq))


def boolean_elements(L):
    """Idempotents ``x`` with ``x v x* == 1``."""
    neg = L.arrow[:, L.bot]
    return tuple(x for x in idempotents(L) if L.join[x, neg[x]] == L.top)


def interval_members(L, b):
    return tuple(int(x) for x in np.flatnonzero(L.leq[b]))


def interval_algebra(L, b):
    """The algebra on ``{x : b <= x}`` with the residuum recomputed inside the interval."""
    if L.odot[b, b] != b:
        raise NotIdempotent(f"{L.labels[b]} is not idempotent", law="idempotent", witness=(b,))
    return restrict(L, interval_members(L, b))


@dataclass(frozen=True)
class Decomposition:
    factors: tuple
    embedding: tuple
    pivots: tuple

    def sizes(self):
        return tuple(f.size for f in self.factors)


def _split(L):
    nontrivial = [b for b in boolean_elements(L) if b not in (L.bot, L.top)]
    if not nontrivial:
        return [L]
    b = nontrivial[0]
    b_neg = int(L.arrow[b, L.bot])
    return _split(interval_algebra(L, b)) + _split(interval_algebra(L, b_neg))


def comet_decomposition(L):
    """Split ``L`` along Boolean elements into directly indecomposable interval factors.

    The product of the factors is checked isomorphic to ``L`` and every
    factor is checked to be a comet.
    """
    _require_bl(L)
    factors = _split(L)
    pivots = []
    for f in factors:
        rep = comet_report(f)
        if not rep.is_comet:
            raise AssertionError(f"indecomposable factor of size {f.size} is not a comet")
        pivots.append(f.labels[rep.pivot])
    prod = factors[0]
    for f in factors[1:]:
        prod = direct_product(prod, f)
    iso = are_isomorphic(prod, L)
    if iso is None:
        raise AssertionError("product of the factors is not isomorphic to the algebra")
    return Decomposition(tuple(factors), iso, tuple(pivots))
