"""Command line front end: ``pseudalg <command> <spec-file> ...``.

Exit codes: 0 when every check passes, 1 when a check fails, 2 on parse,
semantic or usage errors.
"""
from __future__ import annotations

import argparse
import sys
from pathlib import Path

from .bialgebra import Bialgebra, cur_from_infbialgebra, dual_coalgebra
from .cohomology import d0, is_cocycle1
from .literal import SpecError, parse_tensor
from .modules import Tensor
from .pseudoalgebra import PseudoAlgebra, lieify
from .report import Check, Report, defect_check, emit
from .specfile import load_spec, parse_hopf_spec, render_bundle
from .suites import SUITES, UnknownSuite, run_suite
from .ybe import aybe, check_thm44, coboundary_delta, cybe, thm61_suite

OK, FAILED, ERROR = 0, 1, 2


class UsageError(Exception):
    pass


def _bundle(args) -> Bialgebra:
    spec = load_spec(args.file)
    return spec.section(args.algebra).bundle()


def _need_r(bundle: Bialgebra) -> None:
    if bundle.r is None:
        raise UsageError("this command needs an 'r' line in the spec file")


def _value_report(suite: str, rows) -> Report:
    """Report that prints values and passes iff each expected-zero value vanishes."""
    report = Report(suite)
    for name, inputs, value, must_vanish in rows:
        if must_vanish:
            report.add(defect_check(name, inputs, value, note=f"value = {value if value else 0}"))
        else:
            report.add(Check(name, inputs, True, note=f"value = {value if value else 0}"))
    return report


def cmd_check(args) -> Report:
    return run_suite(_bundle(args), args.suite, args.degree_bound)


def cmd_deltar(args) -> Report:
    bundle = _bundle(args)
    _need_r(bundle)
    delta = coboundary_delta(bundle.alg, bundle.r)
    rows = [("delta_r", (g,), delta.table.get(g, Tensor.zero(bundle.hopf, 2)), False) for g in bundle.labels]
    return _value_report("deltar", rows)


def cmd_aybe(args) -> Report:
    bundle = _bundle(args)
    _need_r(bundle)
    return _value_report("aybe", [("A(r)", (), aybe(bundle.alg, bundle.r), True)])


def cmd_cybe(args) -> Report:
    bundle = _bundle(args)
    _need_r(bundle)
    return _value_report("cybe", [("[[r,r]]", (), cybe(lieify(bundle.alg), bundle.r), True)])


def cmd_thm44(args) -> Report:
    bundle = _bundle(args)
    _need_r(bundle)
    return check_thm44(bundle.alg, bundle.r)


def cmd_thm61(args) -> Report:
    bundle = _bundle(args)
    _need_r(bundle)
    return thm61_suite(bundle.alg, bundle.r)


def cmd_cocycle1(args) -> Report:
    bundle = _bundle(args)
    return is_cocycle1(bundle.alg, bundle.delta.table, 2)


def cmd_d0(args) -> Report:
    bundle = _bundle(args)
    m = parse_tensor(bundle.hopf, args.element, bundle.alg.module)
    values = d0(bundle.alg, m)
    return _value_report("d0", [("d0", (g,), values[g], False) for g in bundle.labels])


def _write(source: str, path: str, text: str) -> None:
    if Path(path).resolve() == Path(source).resolve():
        raise UsageError("refusing to overwrite the input spec file")
    Path(path).write_text(text, encoding="utf-8")


def cmd_dual(args) -> Report:
    spec = load_spec(args.file)
    sec = spec.section(args.algebra)
    delta = dual_coalgebra(sec.algebra())
    zero = PseudoAlgebra(delta.module, {}, name=f"{sec.name}_dual")
    bundle = Bialgebra(zero, delta, name=f"{sec.name}_dual")
    _write(args.file, args.output, render_bundle(bundle, header=f"dual coalgebra of {sec.name}; generator a<i> is dual to generator number i"))
    return Report("dual").add(Check("written", (args.output,), True))


def cmd_cur(args) -> Report:
    spec = load_spec(args.file)
    sec = spec.section(args.algebra)
    target_text = args.target_hopf
    if Path(target_text).is_file():
        target = load_spec(target_text).hopf
    else:
        try:
            target = parse_hopf_spec(target_text)
        except SpecError as exc:
            raise UsageError(f"bad --target-hopf: {exc.describe()}") from None
    try:
        lifted = cur_from_infbialgebra(sec.bundle(), target)
    except ValueError as exc:
        raise UsageError(str(exc)) from None
    _write(args.file, args.output, render_bundle(lifted, header=f"current lift of {sec.name}", include_r=False))
    return Report("cur").add(Check("written", (args.output,), True))


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="pseudalg", description="Exact checks for H-pseudoalgebra structures.")
    sub = parser.add_subparsers(dest="command", required=True)

    def common(p, with_file=True):
        if with_file:
            p.add_argument("file", help="spec file")
        p.add_argument("--algebra", default=None, help="algebra section to use (default: the first)")
        p.add_argument("--json", action="store_true", help="emit a JSON report")
        p.add_argument("--degree-bound", type=int, default=4, help="H-degree bound for sampling (default 4)")
        return p

    p = common(sub.add_parser("check", help="run a named suite"))
    p.add_argument("--suite", default="all", help=f"one of: {', '.join(SUITES)}")
    p.set_defaults(func=cmd_check)
    for name, func, text in [("deltar", cmd_deltar, "print Δ_r on generators"),
                             ("aybe", cmd_aybe, "evaluate the associative Yang-Baxter expression"),
                             ("cybe", cmd_cybe, "evaluate the classical Yang-Baxter expression"),
                             ("thm44", cmd_thm44, "coassociativity criterion for Δ_r"),
                             ("thm61", cmd_thm61, "AYBE to CYBE transfer"),
                             ("cocycle1", cmd_cocycle1, "test Δ as a 1-cocycle")]:
        common(sub.add_parser(name, help=text)).set_defaults(func=func)
    p = common(sub.add_parser("dual", help="write the dual coalgebra as a spec file"))
    p.add_argument("-o", "--output", required=True)
    p.set_defaults(func=cmd_dual)
    p = common(sub.add_parser("cur", help="write the current lift of an H = k bialgebra"))
    p.add_argument("--target-hopf", required=True,
                   help="'trivial', 'polynomial <m>', 'cyclic <n>' or a spec file whose hopf section is used")
    p.add_argument("-o", "--output", required=True)
    p.set_defaults(func=cmd_cur)
    p = common(sub.add_parser("d0", help="evaluate d(1 ⊗_H m) on generators"))
    p.add_argument("--element", required=True, help="tensor literal, e.g. '(e2, e1) - (e1, e2)'")
    p.set_defaults(func=cmd_d0)
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return ERROR if exc.code else OK
    if args.degree_bound < 1:
        print("error: --degree-bound must be >= 1", file=sys.stderr)
        return ERROR
    try:
        report = args.func(args)
    except SpecError as exc:
        print(f"error: {args.file}: {exc.describe()}", file=sys.stderr)
        return ERROR
    except (UsageError, UnknownSuite, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return ERROR
    print(emit(report, "json" if args.json else "human"))
    return OK if report.passed else FAILED


if __name__ == "__main__":
    sys.exit(main())
