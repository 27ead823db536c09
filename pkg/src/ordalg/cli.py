"""Command line front end.

Commands read and write the plain-text structure format.  Recognized
operation names: ``*`` for a sectional-pseudocomplement candidate,
``mult`` and ``imp`` for a residuated multiplication and its residual,
``join`` and ``meet`` for explicit lattice tables.  Exit codes: 0 clean,
1 a checked property fails, 2 malformed input or an exceeded budget.
"""

import argparse
import sys

from .congruence import (
    FiniteAlgebra,
    all_congruences,
    check_congruence_distributive,
    check_permutable,
    check_weakly_regular,
)
from .constructions import (
    CATALOG_KINDS,
    FIXTURE_NAMES,
    direct_product,
    enumerate_structures,
    fixture,
)
from .errors import MissingConstantError, OrdAlgError, ParseError
from .fileformat import StructureFile, from_poset, parse, render
from .operators import canonical_operators, check_operator_axioms, operator_derived_laws
from .binop import BinOp
from .poset import LatticeOps, as_lattice
from .pseudocomplement import classify, star_table_poset
from .residuation import ResiduationCandidate, check_divisibility, check_residuation


def _read(path):
    with open(path, encoding="utf-8") as handle:
        return parse(handle.read())


def _write(text, out):
    if out is None:
        sys.stdout.write(text)
    else:
        with open(out, "w", encoding="utf-8") as handle:
            handle.write(text)


def _fmt(p, idxs):
    return "(" + ", ".join(p.names[i] for i in idxs) + ")"


def _order_line(p, lat):
    if isinstance(lat, LatticeOps):
        return "order: lattice"
    kind, (a, b) = lat.kind, lat.pair
    frontier = " ".join(p.names[i] for i in lat.frontier)
    return (f"order: not a lattice ({kind} fails at {_fmt(p, (a, b))}; "
            f"minimal candidates {frontier})")


def _star_mismatches(p, expected, given):
    out = []
    for ra in range(p.n):
        a = p.topo[ra]
        for rb in range(p.n):
            b = p.topo[rb]
            want = expected.value(a, b)
            got = given.value(a, b)
            if want != got:
                out.append((a, b, want, got))
    return out


def _cell(p, v):
    return "undefined" if v is None else p.names[v]


def cmd_check(args):
    sf = _read(args.file)
    p = sf.poset()
    lat = as_lattice(p)
    print(_order_line(p, lat))
    ops = sf.binops()
    failures = 0

    if "*" in ops:
        expected = star_table_poset(p)
        bad = _star_mismatches(p, expected, ops["*"])
        if not bad:
            print("op *: matches the sectional pseudocomplement table")
        else:
            failures += 1
            a, b, want, got = bad[0]
            print(f"op *: {len(bad)} cells differ; first at "
                  f"{p.names[a]}*{p.names[b]}: file says {_cell(p, got)}, "
                  f"synthesized {_cell(p, want)}")

    if "mult" in ops and "imp" in ops:
        if not isinstance(lat, LatticeOps):
            failures += 1
            print("residuation: fails (order is not a lattice)")
        else:
            cand = ResiduationCandidate(lat, ops["mult"], ops["imp"])
            report = check_residuation(cand)
            for name, verdict in report.verdicts:
                if verdict:
                    print(f"residuation: {name} ok")
                else:
                    failures += 1
                    print(f"residuation: {name} fails at {_fmt(p, verdict.witness)}")
            if report.passed:
                div = check_divisibility(cand)
                if div:
                    print("divisibility: ok")
                else:
                    print(f"divisibility: fails at {_fmt(p, div.witness)}")
            else:
                print("divisibility: skipped (residuation failed)")
    elif "mult" in ops or "imp" in ops:
        print("residuation: skipped (needs both mult and imp)")

    return 1 if failures else 0


def cmd_synthesize(args):
    sf = _read(args.file)
    p = sf.poset()
    star = star_table_poset(p)
    ops = dict(sf.binops())
    ops["*"] = star
    out = from_poset(p, ops, sf.constant_indices())
    _write(render(out), args.output)
    gaps = star.undefined_cells()
    if gaps:
        a, b = gaps[0]
        print(f"sectional pseudocomplement undefined at {len(gaps)} pairs; "
              f"first {_fmt(p, (a, b))}", file=sys.stderr)
        return 1
    return 0


def cmd_properties(args):
    sf = _read(args.file)
    p = sf.poset()
    rep = classify(p)
    w = rep.witnesses

    if rep.is_lattice:
        print("lattice: yes")
    else:
        kind, a, b, frontier = w["is_lattice"]
        frontier_names = " ".join(p.names[i] for i in frontier)
        print(f"lattice: no ({kind} fails at {_fmt(p, (a, b))}; "
              f"minimal candidates {frontier_names})")
    if rep.has_top:
        print(f"top: {p.names[p.top]}")
    else:
        print("top: none (maximal elements " +
              " ".join(p.names[i] for i in w["has_top"]) + ")")
    if rep.has_bottom:
        print(f"bottom: {p.names[p.bottom]}")
    else:
        print("bottom: none (minimal elements " +
              " ".join(p.names[i] for i in w["has_bottom"]) + ")")
    for label, flag in (
        ("modular", rep.is_modular),
        ("distributive", rep.is_distributive),
        ("meet-semidistributive", rep.is_meet_semidistributive),
    ):
        if flag is None:
            print(f"{label}: n/a")
        elif flag:
            print(f"{label}: yes")
        else:
            print(f"{label}: no at {_fmt(p, w['is_' + label.replace('-', '_')])}")
    for label, flag in (
        ("sectionally pseudocomplemented", rep.is_sectionally_pc),
        ("relatively pseudocomplemented", rep.is_relatively_pc),
    ):
        key = ("is_sectionally_pc" if label.startswith("sect") else "is_relatively_pc")
        if flag:
            print(f"{label}: yes")
        else:
            print(f"{label}: no, undefined at {_fmt(p, w[key])}")
    return 0


def cmd_congruences(args):
    sf = _read(args.file)
    p = sf.poset()
    ops = sf.binops()
    for name, op in ops.items():
        if not op.is_total:
            raise ParseError(f"op {name!r} is partial; congruences need total tables", 1)
    if not ops:
        lat = as_lattice(p)
        if not isinstance(lat, LatticeOps):
            raise OrdAlgError("no operations declared and the order is not a lattice")
        ops = {
            "join": BinOp(p.n, tuple(tuple(r) for r in lat.join)),
            "meet": BinOp(p.n, tuple(tuple(r) for r in lat.meet)),
        }
        print("note: using lattice join and meet", file=sys.stderr)
    constants = sf.constant_indices()
    if "one" not in constants and p.top is not None:
        constants["one"] = p.top
    alg = FiniteAlgebra.build(p, ops, constants)
    congs = all_congruences(alg, budget=args.budget)
    print(f"congruences: {len(congs)}")
    for k, c in enumerate(congs, start=1):
        blocks = " ".join(
            "{" + ", ".join(p.names[i] for i in block) + "}" for block in c.blocks()
        )
        print(f"{k}: {blocks}")
    for label, verdict in (
        ("permutable", check_permutable(alg, congs)),
        ("congruence-distributive", check_congruence_distributive(alg, congs)),
    ):
        print(f"{label}: {'yes' if verdict else 'no'}")
    try:
        wr = check_weakly_regular(alg, congs)
        print(f"weakly regular: {'yes' if wr else 'no'}")
    except MissingConstantError:
        print("weakly regular: skipped (no constant one)")
    return 0


def cmd_product(args):
    left = _read(args.left)
    right = _read(args.right)
    dropped = [name for sf in (left, right) for name, _ in sf.ops]
    if dropped or left.constants or right.constants:
        print("note: operations and constants are not carried into the product",
              file=sys.stderr)
    prod = direct_product(left.poset(), right.poset())
    _write(render(from_poset(prod)), args.output)
    return 0


def cmd_operators(args):
    sf = _read(args.file)
    p = sf.poset()
    if p.top is None:
        raise OrdAlgError("operator residuation needs a greatest element")
    star = star_table_poset(p)
    gaps = star.undefined_cells()
    if gaps:
        a, b = gaps[0]
        print(f"sectional pseudocomplement undefined at {_fmt(p, (a, b))}; "
              f"operator residuation needs a total table")
        return 1
    op = canonical_operators(p, star)
    report = check_operator_axioms(op, exhaustive_subsets=args.exhaustive_subsets)
    mode = "full powerset" if args.exhaustive_subsets else "generated family"
    print(f"mode: {mode}")
    failures = 0
    for name, verdict in report.verdicts:
        if verdict:
            print(f"{name}: ok")
        else:
            failures += 1
            detail = ""
            if verdict.witness:
                detail = " at " + repr(verdict.witness)
            print(f"{name}: fails{detail}")
    if failures:
        return 1
    for key, verdict in operator_derived_laws(op, report).items():
        print(f"law {key}: {'ok' if verdict else 'fails at ' + repr(verdict.witness)}")
    return 0


def cmd_enumerate(args):
    catalog = enumerate_structures(args.size, args.kind, dedup=not args.no_dedup)
    print(f"kind: {catalog.kind}")
    print(f"size: {catalog.size}")
    print(f"count: {len(catalog)}")
    if args.list:
        for k, member in enumerate(catalog.members):
            covers = member.covers()
            if covers:
                text = " ".join(f"{member.names[i]}<{member.names[j]}" for i, j in covers)
            else:
                text = "(no relations)"
            print(f"{k}: {text}")
    return 0


def cmd_fixture(args):
    if args.list:
        for name in FIXTURE_NAMES:
            print(name)
        return 0
    if args.name is None:
        raise OrdAlgError("fixture name required (or use --list)")
    fx = fixture(args.name)
    ops = {}
    if fx.star is not None:
        ops["*"] = fx.star
    if fx.mult is not None:
        ops["mult"] = fx.mult
    if fx.imp is not None:
        ops["imp"] = fx.imp
    constants = {"one": fx.poset.top} if fx.poset.top is not None else {}
    _write(render(from_poset(fx.poset, ops, constants)), args.output)
    return 0


def _build_parser():
    parser = argparse.ArgumentParser(
        prog="ordalg",
        description="Finite order-algebra workbench.",
        epilog="exit codes: 0 clean, 1 checked property fails, 2 bad input or budget",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    cmd = sub.add_parser("check", help="verify tables declared in a structure file")
    cmd.add_argument("file")
    cmd.set_defaults(handler=cmd_check)

    cmd = sub.add_parser("synthesize", help="compute the sectional pseudocomplement table")
    cmd.add_argument("file")
    cmd.add_argument("-o", "--output", default=None)
    cmd.set_defaults(handler=cmd_synthesize)

    cmd = sub.add_parser("properties", help="classify the order")
    cmd.add_argument("file")
    cmd.set_defaults(handler=cmd_properties)

    cmd = sub.add_parser("congruences", help="list congruences and their properties")
    cmd.add_argument("file")
    cmd.add_argument("--budget", type=int, default=16,
                     help="largest carrier to accept (default 16)")
    cmd.set_defaults(handler=cmd_congruences)

    cmd = sub.add_parser("product", help="direct product of two order files")
    cmd.add_argument("left")
    cmd.add_argument("right")
    cmd.add_argument("-o", "--output", default=None)
    cmd.set_defaults(handler=cmd_product)

    cmd = sub.add_parser("operators", help="check powerset operator residuation")
    cmd.add_argument("file")
    cmd.add_argument("--exhaustive-subsets", action="store_true",
                     help="quantify over the full powerset (carrier up to 12)")
    cmd.set_defaults(handler=cmd_operators)

    cmd = sub.add_parser("enumerate", help="catalog all posets or lattices of one size")
    cmd.add_argument("size", type=int)
    cmd.add_argument("--kind", choices=CATALOG_KINDS, default="lattices")
    cmd.add_argument("--no-dedup", action="store_true",
                     help="keep every natural labeling instead of one per isomorphism class")
    cmd.add_argument("--list", action="store_true", help="print cover relations per entry")
    cmd.set_defaults(handler=cmd_enumerate)

    cmd = sub.add_parser("fixture", help="write a named built-in structure")
    cmd.add_argument("name", nargs="?", default=None)
    cmd.add_argument("-o", "--output", default=None)
    cmd.add_argument("--list", action="store_true", help="list available names")
    cmd.set_defaults(handler=cmd_fixture)

    return parser


def main(argv=None):
    args = _build_parser().parse_args(argv)
    try:
        return args.handler(args)
    except ParseError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except OrdAlgError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except OSError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
