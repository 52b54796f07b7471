"""Small helpers for finite partial orders given as boolean ``leq`` matrices."""
import numpy as np


def order_violation(leq):
    """First failure of reflexivity, antisymmetry or transitivity, or None."""
    leq = np.asarray(leq, dtype=bool)
    n = len(leq)
    diag = np.flatnonzero(~leq[np.arange(n), np.arange(n)])
    if len(diag):
        return "reflexivity", (int(diag[0]),)
    both = np.argwhere(leq & leq.T & ~np.eye(n, dtype=bool))
    if len(both):
        return "antisymmetry", tuple(int(v) for v in both[0])
    # x<=y and y<=z but not x<=z
    bad = np.argwhere(leq[:, :, None] & leq[None, :, :] & ~leq[:, None, :])
    if len(bad):
        return "transitivity", tuple(int(v) for v in bad[0])
    return None


def bounds(leq, upper=True):
    """Least upper (or greatest lower) bound table; -1 where none exists."""
    leq = np.asarray(leq, dtype=bool)
    rel = leq if upper else leq.T
    # ordering by down-set size is a linear extension, so the first common
    # bound in that order is the only candidate for the least one
    order = np.argsort(rel.sum(axis=0), kind="stable")
    common = rel[:, None, :] & rel[None, :, :]
    first = order[np.argmax(common[:, :, order], axis=2)]
    least = ~(common & ~rel[first]).any(axis=2)
    return np.where(common.any(axis=2) & least, first, -1).astype(np.int64)


def hasse_edges(leq):
    """Covering pairs ``(x, y)`` with ``x < y`` and nothing strictly between."""
    leq = np.asarray(leq, dtype=bool)
    n = len(leq)
    lt = leq & ~np.eye(n, dtype=bool)
    edges = []
    for x in range(n):
        for y in np.flatnonzero(lt[x]):
            if not (lt[x] & lt[:, y]).any():
                edges.append((x, int(y)))
    return edges


def is_chain(leq):
    leq = np.asarray(leq, dtype=bool)
    return bool((leq | leq.T).all())
