"""Exhaustive property scans over families of rings and over census records.

Each scan returns a list of violation strings; an empty list means every
checked instance satisfied every law.
"""
from __future__ import annotations

import math

import numpy as np

from .blstruct import comet_decomposition, comet_report, idempotents, interval_algebra
from .census import polyquot_family, product_family, zn_family
from .finring import (build_ring, local_factors, mk_product, projections, quotient_ring,
                      ring_predicates)
from .ideal_lattice import (Ideal, all_ideals, classify_ideal, ideal_counts,
                            ideal_product, is_local, is_multiplication_ring, nonunits_form_ideal)
from .resalg import are_isomorphic, check_axioms, from_ideal_lattice

# quotient-ring cross-check of maximality is only run on rings up to this order
_QUOTIENT_CHECK_ORDER = 64


def product_base(max_order=16):
    """Small rings used as factors of the product family, as ``(spec, order)``."""
    base = [(s, int(s.split(":")[1])) for s in zn_family(2, max_order)]
    base += [(s, build_ring(s).order) for s in polyquot_family(max_order)]
    return base


def ring_family(zn_max=50, polyquot_max=512, product_max=512, product_factor_max=16):
    return (zn_family(2, zn_max)
            + polyquot_family(polyquot_max)
            + product_family(product_base(product_factor_max), product_max))


def scan_ring(R, name=""):
    """Check the finite-ring laws on one ring; returns violation messages."""
    bad = []
    lattice = all_ideals(R)
    k = len(lattice)

    # exactly one of zero / unit / zero divisor per element
    zero = np.arange(R.order) == R.zero
    hits = zero.astype(int) + R.units.astype(int) + R.zero_divisors.astype(int)
    if (hits != 1).any():
        bad.append(f"{name}: element {int(np.flatnonzero(hits != 1)[0])} is not exactly one of zero/unit/zero-divisor")

    pred = ring_predicates(R)
    if pred.is_field != pred.is_integral_domain:
        bad.append(f"{name}: integral domain {pred.is_integral_domain} but field {pred.is_field}")

    kinds = [classify_ideal(lattice, I) for I in lattice.ideals]
    for i, kind in enumerate(kinds):
        if kind.maximal != kind.prime:
            bad.append(f"{name}: ideal {i} maximal={kind.maximal} prime={kind.prime}")
    counts = ideal_counts(lattice)

    if k == 3:
        mid = lattice.ideals[1]
        if not ideal_product(mid, mid).is_zero:
            bad.append(f"{name}: three ideals but the middle one does not square to zero")

    factors, _ = local_factors(R)
    if counts.n_m != len(factors):
        bad.append(f"{name}: {counts.n_m} maximal ideals but {len(factors)} local factors")
    # a single primitive idempotent is 1 itself, and then R e is R
    factor_lattices = [lattice] if len(factors) == 1 else [all_ideals(F) for F in factors]
    sizes = [len(FL) for FL in factor_lattices]
    if math.prod(sizes) != k or any(s < 2 for s in sizes):
        bad.append(f"{name}: {k} ideals but local factors have {sizes}")
    for FL in factor_lattices:
        if not is_local(FL):
            bad.append(f"{name}: a primitive-idempotent factor is not local")

    if is_local(lattice) != nonunits_form_ideal(R):
        bad.append(f"{name}: local={is_local(lattice)} but non-units ideal={nonunits_form_ideal(R)}")

    nonzero_ok = R.zero_divisors | zero
    for i, I in enumerate(lattice.ideals):
        # (0 : I) read from the quotient table
        if nonzero_ok[I.members()].all() and lattice.quotient_table[lattice.bottom, i] == lattice.bottom:
            bad.append(f"{name}: ideal {I!r} of zero divisors has zero annihilator")

    if R.order <= _QUOTIENT_CHECK_ORDER:
        for I, kind in zip(lattice.ideals, kinds):
            if I.is_whole:
                continue
            if ring_predicates(quotient_ring(R, I)).is_field != kind.maximal:
                bad.append(f"{name}: maximality of {I!r} disagrees with its quotient ring")

    try:
        L = from_ideal_lattice(lattice)
    except Exception as exc:  # noqa: BLE001 - any failure is a violation to report
        bad.append(f"{name}: Id(R) is not residuated: {exc}")
        return bad
    if is_multiplication_ring(lattice) and not check_axioms(L).bl:
        bad.append(f"{name}: multiplication ring whose ideal lattice is not BL")
    return bad


def scan_product(A, B, name=""):
    """Ideals of a product are exactly the products of factor ideals."""
    bad = []
    P = mk_product(A, B)
    la, lb, lp = all_ideals(A), all_ideals(B), all_ideals(P)
    if len(lp) != len(la) * len(lb):
        bad.append(f"{name}: {len(lp)} ideals, factors give {len(la)} x {len(lb)}")
    pa, pb = projections(A, B)
    expected = set()
    for I in la.ideals:
        fi = I.flags()
        for J in lb.ideals:
            fj = J.flags()
            expected.add(Ideal.from_members(P, np.flatnonzero(fi[pa] & fj[pb])).mask)
    if expected != {I.mask for I in lp.ideals}:
        bad.append(f"{name}: ideals are not the products of factor ideals")
    return bad


def scan_family(specs):
    bad = []
    factors = {}

    def factor(text):
        if text not in factors:
            factors[text] = build_ring(text)
        return factors[text]

    for spec in specs:
        R = build_ring(spec)
        bad += scan_ring(R, spec)
        if spec.startswith("prod:("):
            inner = spec[len("prod:("):-1]
            depth, cut = 0, None
            for i, ch in enumerate(inner):
                depth += ch in "(["
                depth -= ch in ")]"
                if ch == "," and depth == 0:
                    cut = i
                    break
            bad += scan_product(factor(inner[:cut]), factor(inner[cut + 1:]), spec)
    return bad


def scan_census(records):
    """Comet/chain equivalences and decomposition on every census record."""
    bad = []
    for r in records:
        L, c = r.tables, r.classification
        rep = comet_report(L)
        tag = f"{r.lattice_id}#{r.tables.odot.tobytes().hex()[:8]}"
        if (rep.is_comet and rep.pivot == L.top) != c.chain:
            bad.append(f"{tag}: comet with pivot 1 is not equivalent to being a chain")
        if rep.is_comet:
            neg = L.arrow[:, L.bot]
            if c.chain != (neg[neg[rep.pivot]] == rep.pivot):
                bad.append(f"{tag}: chain is not equivalent to pivot** = pivot")
        if c.mv and rep.is_comet != c.chain:
            bad.append(f"{tag}: MV-algebra where comet is not equivalent to chain")
        try:
            d = comet_decomposition(L)
        except AssertionError as exc:
            bad.append(f"{tag}: decomposition failed: {exc}")
            continue
        if math.prod(d.sizes()) != L.size:
            bad.append(f"{tag}: factor sizes {d.sizes()} do not multiply to {L.size}")
        if any(not comet_report(f).is_comet for f in d.factors):
            bad.append(f"{tag}: a terminal factor is not a comet")
    return bad


def census_partition(records, L):
    """Number of records isomorphic to ``L`` (1 for a complete, duplicate-free census)."""
    return sum(are_isomorphic(r.tables, L) is not None for r in records)


def scan_intervals(records):
    """Every interval ``[b, 1]`` over an idempotent ``b < 1`` of a BL-algebra is again BL."""
    bad = []
    for r in records:
        for b in idempotents(r.tables):
            if b == r.tables.top:
                continue
            if not check_axioms(interval_algebra(r.tables, b)).bl:
                bad.append(f"{r.lattice_id}: interval above element {b} is not BL")
    return bad


def census_completeness(records, algebras):
    """Each named BL-algebra must be isomorphic to exactly one census record."""
    bad = []
    for name, L in algebras:
        hits = census_partition([r for r in records if r.order == L.size], L)
        if hits != 1:
            bad.append(f"{name}: isomorphic to {hits} census records")
    return bad
