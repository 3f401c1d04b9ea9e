"""Command line interface: ``unionstab <command> ...``.

Exit codes: 0 success (for ``case-study-63``: every case NotFree), 2 when
some case study entry or ``not-free`` run is inconclusive, 1 on any error.
"""
from __future__ import annotations

import argparse
import json
import sys

from . import genus
from .abelian import abelianization
from .casestudy import DEFAULT_CANDIDATES, DEFAULT_CF, run_case_study_63
from .diagram import PERTURBATION_CASES, emit_diagram, parse_diagram, perturb, validate
from .finite import builtin_group, parse_cayley
from .homcount import BUDGET_ENV, count_homs, default_budget
from .plat import TunnelSpec, attach_tunnels, default_tunnels, two_bridge_plat
from .tietze import tietze_simplify
from .verdict import not_free_witness
from .wirtinger import wirtinger
from .words import emit_presentation, parse_presentation


def _read(path: str) -> str:
    if path == "-":
        return sys.stdin.read()
    with open(path) as fh:
        return fh.read()


def _ints(text: str) -> list[int]:
    try:
        return [int(t) for t in text.replace(",", " ").split()]
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected comma separated integers, got {text!r}")


def _pair(text: str) -> tuple[int, int]:
    vals = _ints(text)
    if len(vals) != 2:
        raise argparse.ArgumentTypeError(f"expected two positions like 1,3, got {text!r}")
    return vals[0], vals[1]


def _group(args):
    if args.cayley:
        return parse_cayley(_read(args.cayley), name=args.cayley)
    return builtin_group(args.group)


def _emit(args, data: dict, text: str) -> None:
    if args.output == "json":
        print(json.dumps(data, indent=2, sort_keys=True))
    else:
        print(text.rstrip("\n"))


def _diagram_out(args, d) -> int:
    _emit(args, {"diagram": emit_diagram(d), "stats": d.stats()}, emit_diagram(d))
    return 0


def cmd_two_bridge(args) -> int:
    return _diagram_out(args, two_bridge_plat(args.cf))


def cmd_validate(args) -> int:
    d = parse_diagram(_read(args.file))
    rep = validate(d)
    text = "ok" if rep.ok else "\n".join(rep.violations)
    _emit(args, {"ok": rep.ok, "violations": list(rep.violations), "stats": d.stats()}, text)
    return 0 if rep.ok else 1


def cmd_attach(args) -> int:
    d = parse_diagram(_read(args.file))
    if d.plat is None:
        raise ValueError("the diagram has no P line, so its tunnels cannot be placed")
    defaults = {t.side: t for t in default_tunnels(d.plat)}
    specs = []
    for side in ("upper", "lower"):
        at = getattr(args, f"{side}_at")
        if at is not None:
            specs.append(TunnelSpec(side, at))
        elif getattr(args, side):
            specs.append(defaults[side])
    if not specs:
        raise ValueError("choose at least one of --upper and --lower")
    return _diagram_out(args, attach_tunnels(d, specs))


def cmd_perturb(args) -> int:
    return _diagram_out(args, perturb(parse_diagram(_read(args.file)), args.case))


def cmd_wirtinger(args) -> int:
    p = wirtinger(parse_diagram(_read(args.file)))
    _emit(args, {"presentation": emit_presentation(p), "generators": p.generator_count,
                 "relators": len(p.relators)}, emit_presentation(p))
    return 0


def cmd_simplify(args) -> int:
    p = tietze_simplify(parse_presentation(_read(args.file)))
    _emit(args, {"presentation": emit_presentation(p), "generators": p.generator_count,
                 "relators": len(p.relators), "total_length": p.total_length},
          emit_presentation(p))
    return 0


def cmd_abelianize(args) -> int:
    ab = abelianization(parse_presentation(_read(args.file)))
    _emit(args, {"free_rank": ab.free_rank, "torsion": list(ab.torsion), "group": str(ab)},
          str(ab))
    return 0


def cmd_count_homs(args) -> int:
    p = parse_presentation(_read(args.file))
    g = _group(args)
    n = count_homs(p, g, budget=args.budget, symmetry=args.symmetry_reduction, jobs=args.jobs)
    _emit(args, {"group": g.name, "order": g.order, "count": n}, str(n))
    return 0


def cmd_not_free(args) -> int:
    p = parse_presentation(_read(args.file))
    groups = [builtin_group(name) for name in args.groups.split(",") if name]
    rep = not_free_witness(p, args.rank, groups, budget=args.budget,
                           symmetry=args.symmetry_reduction, jobs=args.jobs)
    _emit(args, rep.to_dict(), rep.summary())
    return 0 if rep.not_free else 2


def cmd_bounds(args) -> int:
    if args.kind == "prop21":
        reports = [genus.prop21_bound(args.g)]
    elif args.kind == "thm22":
        reports = [genus.thm22_bound(args.g1, args.g2, args.crossings)]
    elif args.kind == "prop32":
        reports = [genus.prop32_bound(args.g1, args.g2)]
    else:
        gp = genus.GnPresentation(args.g, args.n)
        reports = list(genus.prop33_bounds(gp))
        if args.euler_check:
            reports.append(genus.euler_glue_check(gp))
    _emit(args, {"bounds": [r.to_dict() for r in reports]},
          "\n".join(r.line() for r in reports))
    return 0


def cmd_case_study(args) -> int:
    report = run_case_study_63(candidates=args.groups.split(","), budget=args.budget,
                               symmetry=args.symmetry_reduction, jobs=args.jobs, cf=args.cf)
    _emit(args, report.to_dict(timing=not args.no_timing), report.table())
    return report.exit_code()


def _globals(p: argparse.ArgumentParser, suppress: bool) -> None:
    def d(v):
        return argparse.SUPPRESS if suppress else v
    p.add_argument("--budget", type=int, default=d(None),
                   help=f"hom-count evaluation budget (env {BUDGET_ENV}, "
                        f"currently {default_budget()})")
    p.add_argument("--symmetry-reduction", action="store_true", default=d(False),
                   help="count up to conjugation, then multiply back")
    p.add_argument("--jobs", type=int, default=d(1), help="worker processes for counting")
    p.add_argument("--output", choices=("json", "table"), default=d("table"))


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="unionstab",
                                     description="Union stabilization experiments for two-bridge knots.")
    _globals(parser, suppress=False)
    sub = parser.add_subparsers(dest="command", required=True)

    def add(name, func, help_text):
        sp = sub.add_parser(name, help=help_text)
        _globals(sp, suppress=True)
        sp.set_defaults(func=func)
        return sp

    sp = add("two-bridge", cmd_two_bridge, "plat diagram of a two-bridge knot")
    sp.add_argument("--cf", type=_ints, required=True, help="continued fraction, e.g. 2,1,1,2")

    sp = add("validate", cmd_validate, "check a diagram file")
    sp.add_argument("file")

    sp = add("attach-tunnels", cmd_attach, "put tunnels on a plat diagram")
    for side in ("upper", "lower"):
        sp.add_argument(f"--{side}", action="store_true",
                        help=f"attach the standard {side} tunnel")
        sp.add_argument(f"--{side}-at", type=_pair, metavar="I,J",
                        help=f"attach the {side} tunnel at these strand positions instead")
    sp.add_argument("file")

    sp = add("perturb", cmd_perturb, "resolve tunnel intersections")
    sp.add_argument("--case", type=int, choices=sorted(PERTURBATION_CASES), required=True)
    sp.add_argument("file")

    for name, func, help_text in (("wirtinger", cmd_wirtinger, "Wirtinger presentation of a diagram"),
                                  ("simplify", cmd_simplify, "Tietze simplification"),
                                  ("abelianize", cmd_abelianize, "abelian invariants")):
        add(name, func, help_text).add_argument("file")

    sp = add("count-homs", cmd_count_homs, "count homomorphisms to a finite group")
    sp.add_argument("file")
    g = sp.add_mutually_exclusive_group(required=True)
    g.add_argument("--group", help="built-in group: Z<n>, D<n>, S3, S4, A4, A5")
    g.add_argument("--cayley", help="file with a Cayley table")

    sp = add("not-free", cmd_not_free, "look for a witness that a group is not free")
    sp.add_argument("file")
    sp.add_argument("--rank", type=int, required=True)
    sp.add_argument("--groups", default=",".join(DEFAULT_CANDIDATES))

    sp = add("bounds", cmd_bounds, "genus bounds")
    bsub = sp.add_subparsers(dest="kind", required=True)

    def bound(name, help_text):
        b = bsub.add_parser(name, help=help_text)
        _globals(b, suppress=True)
        return b
    b = bound("prop21", "two isotopic genus-g splittings")
    b.add_argument("--g", type=int, required=True)
    b = bound("thm22", "one tunnel per crossing of a spine diagram")
    b.add_argument("--g1", type=int, required=True)
    b.add_argument("--g2", type=int, required=True)
    b.add_argument("--crossings", type=int, required=True)
    b = bound("prop32", "a spine of one handlebody lies on the other surface")
    b.add_argument("--g1", type=int, required=True)
    b.add_argument("--g2", type=int, required=True)
    b = bound("prop33", "tunnel number and union genus of a (g, n) knot")
    b.add_argument("--g", type=int, required=True)
    b.add_argument("--n", type=int, required=True)
    b.add_argument("--euler-check", action="store_true",
                   help="also recompute the union genus from Euler characteristics")

    sp = add("case-study-63", cmd_case_study, "the 6_3 tunnel pair, all four perturbations")
    sp.add_argument("--groups", default=",".join(DEFAULT_CANDIDATES))
    sp.add_argument("--cf", type=_ints, default=list(DEFAULT_CF))
    sp.add_argument("--no-timing", action="store_true", help="omit timing from JSON")
    return parser


def main(argv=None) -> int:
    try:
        args = build_parser().parse_args(argv)
    except SystemExit as e:
        # usage errors are errors (1); 2 is reserved for inconclusive runs
        return 0 if e.code in (0, None) else 1
    try:
        return args.func(args)
    except (ValueError, KeyError, ArithmeticError, OSError, RuntimeError) as e:
        msg = e.args[0] if isinstance(e, KeyError) and e.args else e
        print(f"error: {msg}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
