"""Slow, obviously-correct reference implementations used to cross-check the package.

Nothing here imports the algorithms under test; only plain tables go in.
"""
import itertools

import numpy as np


def brute_ideals(add, mul, zero=0):
    """Every subset closed under +, containing zero and absorbing multiplication."""
    n = len(add)
    found = []
    for bits in range(1 << n):
        if not bits >> zero & 1:
            continue
        members = [a for a in range(n) if bits >> a & 1]
        if all(bits >> int(add[a][b]) & 1 for a in members for b in members) and \
                all(bits >> int(mul[r][a]) & 1 for a in members for r in range(n)):
            found.append(frozenset(members))
    return found


def brute_prime(members, mul, n):
    inside = set(members)
    if len(inside) == n:
        return False
    return not any(mul[a][b] in inside and a not in inside and b not in inside
                   for a in range(n) for b in range(n))


def brute_residuum(leq, odot):
    """``x -> y`` straight from the definition, or None when the maximum is missing."""
    n = len(leq)
    out = np.zeros((n, n), dtype=int)
    for x in range(n):
        for y in range(n):
            cands = [z for z in range(n) if leq[odot[x][z]][y]]
            tops = [z for z in cands if all(leq[w][z] for w in cands)]
            if len(tops) != 1:
                return None
            out[x, y] = tops[0]
    return out


def brute_isomorphic(A, B):
    """Try every bijection; both algebras are ResLat-like (leq, odot, arrow)."""
    if A.size != B.size:
        return False
    n = A.size
    for p in itertools.permutations(range(n)):
        ok = all(A.leq[x, y] == B.leq[p[x], p[y]]
                 and p[A.odot[x, y]] == B.odot[p[x], p[y]]
                 and p[A.arrow[x, y]] == B.arrow[p[x], p[y]]
                 for x in range(n) for y in range(n))
        if ok:
            return True
    return False


def brute_bl(leq, odot, arrow, meet, join, top):
    """Prelinearity and divisibility by direct scan."""
    n = len(leq)
    for x in range(n):
        for y in range(n):
            if join[arrow[x][y]][arrow[y][x]] != top:
                return False
            if odot[x][arrow[x][y]] != meet[x][y]:
                return False
    return True


def brute_poly_tables(n, coeffs):
    """Addition and multiplication tables of Z_n[X]/(f) by schoolbook arithmetic."""
    d = len(coeffs) - 1
    elems = [tuple((a // n ** i) % n for i in range(d)) for a in range(n ** d)]
    index = {e: a for a, e in enumerate(elems)}

    def reduce(p):
        p = list(p)
        for k in range(len(p) - 1, d - 1, -1):
            c = p[k]
            for i in range(d + 1):
                p[k - d + i] -= c * coeffs[i]
        return tuple(v % n for v in p[:d])

    add = [[index[tuple((x + y) % n for x, y in zip(a, b))] for b in elems] for a in elems]
    mul = []
    for a in elems:
        row = []
        for b in elems:
            p = [0] * (2 * d)
            for s, x in enumerate(a):
                for t, y in enumerate(b):
                    p[s + t] += x * y
            row.append(index[reduce(p)])
        mul.append(row)
    return add, mul


def brute_lattice_classes(n):
    """Bounded lattices on n points up to isomorphism, by permuting all interior labels."""
    if n <= 2:
        return 1
    k = n - 2
    pairs = [(i, j) for i in range(k) for j in range(k) if i != j]
    classes = set()
    for bits in range(1 << len(pairs)):
        leq = [[i == j or i == 0 or j == n - 1 for j in range(n)] for i in range(n)]
        for b, (i, j) in enumerate(pairs):
            if bits >> b & 1:
                leq[i + 1][j + 1] = True
        if any(leq[i][j] and leq[j][i] and i != j for i in range(n) for j in range(n)):
            continue
        if any(leq[i][j] and leq[j][m] and not leq[i][m]
               for i in range(n) for j in range(n) for m in range(n)):
            continue
        lattice = True
        for x in range(n):
            for y in range(n):
                ub = [z for z in range(n) if leq[x][z] and leq[y][z]]
                if not any(all(leq[z][w] for w in ub) for z in ub):
                    lattice = False
        if not lattice:
            continue
        key = min(
            tuple(leq[p[i]][p[j]] for i in range(n) for j in range(n))
            for p in ([0] + list(q) + [n - 1] for q in itertools.permutations(range(1, n - 1)))
        )
        classes.add(key)
    return len(classes)
