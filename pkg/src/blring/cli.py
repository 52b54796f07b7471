"""Command-line front end.

Verbs: ring, ideals, classify, tables, census, ledger, atlas, verify-paper.
Exit codes: 0 ok, 1 mismatch or failed check, 2 usage or parse error,
3 cap or resource error.
"""
from __future__ import annotations

import argparse
import json
import sys

from . import golden
from .blstruct import comet_report
from .census import (DEFAULT_MAX_CENSUS, chain4_ledger, enumerate_bl, polyquot_family, product_family,
                     ring_atlas, summarize, zn_family)
from .errors import BLRingError, CapExceeded, NoProperIdeals, ParseError
from .finring import DEFAULT_MAX_ORDER, build_ring, cayley_text, describe, ring_predicates
from .ideal_lattice import all_ideals, ideal_counts, ideal_labels, is_multiplication_ring
from .render import render_tables
from .resalg import AlgebraTableSpec, check_axioms, from_ideal_lattice, from_tables, hasse

EXIT_OK, EXIT_FAIL, EXIT_USAGE, EXIT_CAP = 0, 1, 2, 3
SCHEMA_VERSION = 1

# largest ring whose Cayley tables are printed by default
_TABLE_LIMIT = 32


class _Usage(Exception):
    pass


def _yes(flag):
    return "yes" if flag else "no"


def _emit(args, text, data):
    out = json.dumps({"schema": SCHEMA_VERSION, **data}, indent=2, sort_keys=True) + "\n" \
        if args.format == "json" else text
    if args.out:
        with open(args.out, "w", encoding="utf-8") as fh:
            fh.write(out)
    else:
        sys.stdout.write(out)


def _ring_lattice(args):
    R = build_ring(args.ring, args.max_order)
    try:
        lattice = all_ideals(R, args.max_order)
    except NoProperIdeals:
        raise _Usage(f"degenerate ring: {args.ring} has one element and no proper ideals") from None
    return R, lattice


def _algebra(args):
    """The algebra named by --ring, --golden or --algebra."""
    if args.ring:
        R, lattice = _ring_lattice(args)
        L = from_ideal_lattice(lattice, ideal_labels(lattice, args.labels))
        return L, f"{len(lattice)} ideals", {"ring": describe(R), "ideals": len(lattice)}
    if args.golden:
        if args.golden not in golden.SPECS:
            raise _Usage(f"unknown table {args.golden!r}; known: {', '.join(golden.SPECS)}")
        L = golden.load(args.golden)
        return L, f"{L.size} elements", {"table": args.golden}
    with open(args.algebra, encoding="utf-8") as fh:
        L = from_tables(AlgebraTableSpec.from_json(fh.read()))
    return L, f"{L.size} elements", {"algebra": args.algebra}


# ------------------------------------------------------------------ verbs


def cmd_ring(args):
    R = build_ring(args.ring, args.max_order)
    pred = ring_predicates(R)
    lines = [f"ring {describe(R)} of order {R.order}"]
    lines += [f"{name.replace('_', ' ')}: {_yes(v)}" for name, v in pred._asdict().items()]
    lines.append(f"units: {int(R.units.sum())}; zero divisors: {int(R.zero_divisors.sum())}")
    show = args.cayley or R.order <= _TABLE_LIMIT
    if show:
        lines += ["", cayley_text(R, "add").rstrip(), "", cayley_text(R, "mul").rstrip()]
    data = {"ring": describe(R), "order": R.order, "predicates": pred._asdict(),
            "units": int(R.units.sum()), "zero_divisors": int(R.zero_divisors.sum())}
    if show:
        data["add"] = R.add.tolist()
        data["mul"] = R.mul.tolist()
        data["labels"] = [R.label(i) for i in range(R.order)]
    _emit(args, "\n".join(lines) + "\n", data)
    return EXIT_OK


def cmd_ideals(args):
    R, lattice = _ring_lattice(args)
    labels = ideal_labels(lattice, args.labels)
    counts = ideal_counts(lattice)
    export = lattice.export(labels)
    lines = [f"{describe(R)}: {len(lattice)} ideals (n_m={counts.n_m}, n_p={counts.n_p})"]
    for k, entry in enumerate(export["ideals"]):
        kind = lattice.kinds[k]
        tags = [t for t, on in (("maximal", kind.maximal), ("prime", kind.prime),
                                ("minimal", kind.minimal)) if on]
        lines.append(f"  {entry['label']}: {{{', '.join(entry['members'])}}}"
                     + (f"  [{', '.join(tags)}]" if tags else ""))
    lines.append("hasse: " + ", ".join(f"{a} < {b}" for a, b in export["hasse"]))
    lines.append(f"multiplication ring: {_yes(is_multiplication_ring(lattice))}")
    data = {"ring": describe(R), "counts": counts._asdict(), **export,
            "multiplication_ring": is_multiplication_ring(lattice)}
    _emit(args, "\n".join(lines) + "\n", data)
    return EXIT_OK


def cmd_classify(args):
    L, head, meta = _algebra(args)
    c = check_axioms(L)
    text = f"{head}; BL: {_yes(c.bl)}; MV: {_yes(c.mv)}; chain: {_yes(c.chain)}\n"
    if c.failure_law:
        witness = ", ".join(L.labels[w] for w in c.failure_witness)
        text += f"first failure: {c.failure_law} at ({witness})\n"
    data = {**meta, "classification": c.as_dict(), "labels": list(L.labels)}
    if c.bl:
        rep = comet_report(L)
        text += f"comet: {_yes(rep.is_comet)}; pivot: {L.labels[rep.pivot]}\n"
        data["comet"] = rep.as_dict(list(L.labels))
    text += "\n" + render_tables(L)
    data["arrow"] = L.arrow.tolist()
    data["odot"] = L.odot.tolist()
    _emit(args, text, data)
    return EXIT_OK


def cmd_tables(args):
    L, _, meta = _algebra(args)
    data = {**meta, "labels": list(L.labels), "arrow": L.arrow.tolist(), "odot": L.odot.tolist(),
            "hasse": [list(e) for e in hasse(L)]}
    _emit(args, render_tables(L), data)
    return EXIT_OK


def cmd_census(args):
    records = enumerate_bl(args.order, chains_only=args.chains_only, max_n=args.max_census,
                           workers=args.workers)
    s = summarize(records, args.order)
    bl_chains = sum(r.classification.chain and not r.classification.mv for r in records)
    lines = [f"{s.bl} classes ({s.mv} MV, {bl_chains} BL-chains)", "",
             "order  BL  MV  chains  comets",
             f"{s.order:>5}  {s.bl:>2}  {s.mv:>2}  {s.chains:>6}  {s.comets:>6}"]
    if args.verbose:
        for r in records:
            c = r.classification
            lines.append(f"  lattice {r.lattice_id}: MV {_yes(c.mv)}, chain {_yes(c.chain)}, "
                         f"comet {_yes(r.comet.is_comet)}")
    data = {"order": args.order, "chains_only": args.chains_only, "summary": s._asdict(),
            "bl_chains": bl_chains, "records": [r.as_dict() for r in records]}
    _emit(args, "\n".join(lines) + "\n", data)
    return EXIT_OK


def cmd_ledger(args):
    cases = chain4_ledger()
    lines = ["case  I.I  J.J  I.J  verdict         detail"]
    for c in cases:
        detail = c.matches or (f"{c.law} at ({', '.join('0IJR'[w] for w in c.witness)})" if c.law else "")
        lines.append(f"{c.case_id:>4}  {c.assignment[0]:>3}  {c.assignment[1]:>3}  {c.assignment[2]:>3}  "
                     f"{c.verdict.value:<14}  {detail}".rstrip())
    _emit(args, "\n".join(lines) + "\n", {"cases": [c.as_dict() for c in cases]})
    return EXIT_OK


def _family(args):
    specs, names = [], []
    for fam in args.family or []:
        kind, _, bound = fam.partition(":")
        try:
            if kind == "zn":
                lo, _, hi = bound.partition("-")
                specs += zn_family(int(lo), int(hi or lo))
            elif kind == "polyquot":
                specs += polyquot_family(int(bound))
            elif kind == "products":
                from .scans import product_base
                specs += product_family(product_base(), int(bound))
            else:
                raise ValueError
        except ValueError:
            raise ParseError(f"bad family {fam!r}; use zn:LO-HI, polyquot:MAX or products:MAX") from None
        names.append(fam)
    if args.config:
        with open(args.config, encoding="utf-8") as fh:
            lines = [ln.split("#")[0].strip() for ln in fh]
        specs += [ln for ln in lines if ln]
        names.append(args.config)
    specs += args.ring or []
    return specs, ",".join(names + (args.ring or [])) or "empty"


def cmd_atlas(args):
    specs, family = _family(args)
    atlas = ring_atlas(specs, family=family, max_order=args.max_order)
    lines = []
    for r in atlas.rows:
        c = r.classification
        lines.append(f"{r.spec:<28} order {r.order:>4}  (n_m,n_p,n_I)=({r.n_m},{r.n_p},{r.n_I})  "
                     f"BL {_yes(c.bl)}  MV {_yes(c.mv)}  chain {_yes(c.chain)}"
                     + (f"  matches {r.matches}" if r.matches else ""))
    s = atlas.summary()
    matches = ", ".join(f"{k}: {v}" for k, v in s["matches"].items()) or "none"
    lines.append(f"{s['rings']} rings; BL {s['bl']}; MV {s['mv']}; chains {s['chains']}; matches {matches}")
    _emit(args, "\n".join(lines) + "\n", atlas.as_dict())
    return EXIT_OK


_SMALL_SCAN = {"zn_max": 30, "polyquot_max": 64, "product_max": 64, "product_factor_max": 8}


def cmd_verify(args):
    from .report import verify_paper

    report = verify_paper(census_cap=args.census_cap,
                          ring_bounds=_SMALL_SCAN if args.quick else None)
    _emit(args, report.text(), report.as_dict())
    return report.exit_code


# ----------------------------------------------------------------- parser


def _common(p):
    p.add_argument("--format", choices=("text", "json"), default="text")
    p.add_argument("--out", help="write output to this file instead of stdout")
    p.add_argument("--max-order", type=int, default=DEFAULT_MAX_ORDER, help="ring order cap")


def _algebra_source(p):
    g = p.add_mutually_exclusive_group(required=True)
    g.add_argument("--ring", help="ring spec, e.g. zn:4 or prod:(zn:2,zn:2)")
    g.add_argument("--golden", help=f"reference table: {', '.join(golden.SPECS)}")
    g.add_argument("--algebra", help="JSON algebra table file")
    p.add_argument("--labels", choices=("paper", "generators", "index"), default="paper",
                   help="ideal label style")


def build_parser():
    parser = argparse.ArgumentParser(prog="blring", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="verb", required=True)

    p = sub.add_parser("ring", help="build a ring and print its predicates and Cayley tables")
    p.add_argument("--ring", required=True)
    p.add_argument("--cayley", action="store_true", help="print tables even for large rings")
    _common(p)
    p.set_defaults(func=cmd_ring)

    p = sub.add_parser("ideals", help="list the ideals of a ring")
    p.add_argument("--ring", required=True)
    p.add_argument("--labels", choices=("paper", "generators", "index"), default="paper")
    _common(p)
    p.set_defaults(func=cmd_ideals)

    for verb, func, text in (("classify", cmd_classify, "classify an ideal lattice or algebra"),
                             ("tables", cmd_tables, "print arrow and product tables")):
        p = sub.add_parser(verb, help=text)
        _algebra_source(p)
        _common(p)
        p.set_defaults(func=func)

    p = sub.add_parser("census", help="enumerate BL-algebras of one order")
    p.add_argument("--order", type=int, required=True)
    p.add_argument("--chains-only", action="store_true")
    p.add_argument("--max-census", type=int, default=DEFAULT_MAX_CENSUS, help="census order cap")
    p.add_argument("--workers", type=int, default=1)
    p.add_argument("--verbose", action="store_true", help="one line per record")
    _common(p)
    p.set_defaults(func=cmd_census)

    p = sub.add_parser("ledger", help="the twelve product assignments on the 4-chain")
    _common(p)
    p.set_defaults(func=cmd_ledger)

    p = sub.add_parser("atlas", help="classify Id(R) over a family of rings")
    p.add_argument("--family", action="append", help="zn:LO-HI, polyquot:MAX or products:MAX")
    p.add_argument("--ring", action="append", help="extra ring spec (repeatable)")
    p.add_argument("--config", help="file with one ring spec per line")
    _common(p)
    p.set_defaults(func=cmd_atlas)

    p = sub.add_parser("verify-paper", help="run every published-claim check")
    p.add_argument("--census-cap", type=int, default=DEFAULT_MAX_CENSUS)
    p.add_argument("--quick", action="store_true", help="scan a smaller ring family")
    _common(p)
    p.set_defaults(func=cmd_verify)
    return parser


def main(argv=None):
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except CapExceeded as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_CAP
    except (ParseError, _Usage) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except OSError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_CAP
    except (BLRingError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_FAIL


if __name__ == "__main__":
    sys.exit(main())
