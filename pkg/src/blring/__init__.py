"""Finite commutative rings, their ideal lattices, and small BL-algebras.

Typical use::

    from blring import build_ring, all_ideals, from_ideal_lattice, check_axioms

    lattice = all_ideals(build_ring("zn:4"))
    print(check_axioms(from_ideal_lattice(lattice)))
"""
from .blstruct import (CometReport, Decomposition, boolean_elements, comet_decomposition,
                       comet_report, d_set, idempotents, interval_algebra)
from .census import (CensusRecord, Chain4Case, Verdict, chain4_ledger, enumerate_bl,
                     enumerate_lattices, ring_atlas, summarize)
from .errors import (AlgebraError, BLRingError, CapExceeded, NoMaximum, NonMonic, NoProperIdeals,
                     NotALattice, NotAMonoid, NotAnIdeal, NotBL, NotCoprime, NotIdempotent,
                     NotResiduated, ParseError, RingMismatch)
from .finring import (FiniteRing, PolySpec, build_ring, crt_split, local_factors, mk_poly_quotient,
                      mk_product, mk_zn, parse_ring_spec, quotient_ring)
from .ideal_lattice import (Ideal, IdealLattice, all_ideals, annihilator, ideal_counts,
                            ideal_product, ideal_quotient, ideal_sum, is_multiplication_ring)
from .render import render_tables
from .resalg import (Classification, ResLat, are_isomorphic, build, canonical_form, check_axioms,
                     direct_product, from_ideal_lattice, from_tables, subalgebra)

__version__ = "0.1.0"
