"""Command line interface.

One subcommand per operation; `--json` swaps the human text for exactly
one machine record (schema tag "lct/1", rationals as "p/q" strings,
never decimals), `--csv` writes set samples as delimited rows, and
`--plot` renders the matching figure to a file alongside either output.
Exit codes: 0 success, 1 usage or parse error, 2 validation failure,
3 resource cap exceeded.
"""

from __future__ import annotations

import argparse
import json
import sys
from dataclasses import dataclass
from decimal import Decimal, localcontext
from fractions import Fraction
from typing import Dict, List, Sequence

from . import engine, newton, threshold_sets
from .errors import PolyParseError, ResourceCapExceeded, ValidationFailure
from .parsing import parse_poly, poly_to_string, variable_names
from .polynomials import Poly, ThresholdValue
from .threshold_sets import RationalValues, ThresholdSetSample

SCHEMA = "lct/1"


class _UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):  # exit 1, not argparse's default 2
        raise _UsageError(message)


def _rat(value: Fraction) -> str:
    return str(Fraction(value))


def _threshold_arg(text: str) -> ThresholdValue:
    if text.strip().lower() in ("inf", "infinite", "infinity"):
        return ThresholdValue.infinite()
    q = Fraction(text)
    if q == 0:
        return ThresholdValue.zero()
    return ThresholdValue.finite(q)


def _decimal20(num: int, den: int) -> str:
    with localcontext() as ctx:
        ctx.prec = 20
        return str(Decimal(num) / Decimal(den))


def emit_csv(sample: ThresholdSetSample, path: str) -> None:
    """Write `value_num,value_den,value_decimal` rows, ascending; the
    decimal column is a 20-digit display convenience only."""
    num, den = sample.values.integer_pairs()
    out = sys.stdout if path == "-" else open(path, "w")
    try:
        out.write("value_num,value_den,value_decimal\n")
        for n, d in zip(num, den):
            n, d = int(n), int(d)
            out.write(f"{n},{d},{_decimal20(n, d)}\n")
    finally:
        if out is not sys.stdout:
            out.close()


def _read_value_file(path: str) -> RationalValues:
    values = []
    with open(path) as handle:
        for line in handle:
            line = line.strip()
            if not line:
                continue
            if "," in line:
                parts = line.split(",")
                if parts[0] == "value_num":
                    continue
                values.append(Fraction(int(parts[0]), int(parts[1])))
            else:
                values.append(Fraction(line))
    return RationalValues.from_fractions(values)


def _facet_text(facet: newton.Facet, dimension: int) -> str:
    names = variable_names(dimension)
    lhs = " + ".join(
        name if a == 1 else f"{a}*{name}"
        for a, name in zip(facet.normal, names)
        if a != 0
    )
    return f"{lhs} >= {facet.offset}"


def _facet_json(facet: newton.Facet) -> Dict[str, object]:
    return {
        "normal": list(facet.normal),
        "offset": facet.offset,
        "compact": facet.compact,
        "face_bound": _rat(newton.face_bound(facet)),
    }


def _report_json(report: engine.ThresholdReport) -> Dict[str, object]:
    value = report.value
    return {
        "value": None if value.is_infinite() else _rat(value.as_fraction()),
        "kind": value.kind,
        "exact": report.exact,
        "witness": _facet_json(report.witness) if report.witness else None,
        "lower": _rat(report.bounds[0]) if report.bounds else None,
        "upper": _rat(report.bounds[1]) if report.bounds else None,
    }


def _report_lines(report: engine.ThresholdReport, dimension: int, quiet: bool) -> List[str]:
    value = report.value
    if value.is_zero():
        head = "lct = 0 (zero polynomial)"
    elif value.is_infinite():
        head = "lct = infinite (constant term present)"
    else:
        label = "exact" if report.exact else "upper bound"
        head = f"lct = {_rat(value.as_fraction())} ({label})"
    lines = [head]
    if not quiet:
        if report.witness is not None:
            lines.append(f"witness facet: {_facet_text(report.witness, dimension)}")
        if report.bounds is not None:
            lines.append(f"multiplicity bracket: [{_rat(report.bounds[0])}, {_rat(report.bounds[1])}]")
    return lines


@dataclass
class _Output:
    input_echo: Dict[str, object]
    result: Dict[str, object]
    human: List[str]
    exit_code: int = 0


def _sample_output(
    sample: ThresholdSetSample,
    args,
    input_echo: Dict[str, object],
) -> _Output:
    values = sample.values
    result = {
        "dimension": sample.dimension,
        "count": len(values),
        "min": _rat(values[0]) if len(values) else None,
        "max": _rat(values[-1]) if len(values) else None,
        "provenance": sample.provenance,
    }
    human = [f"{len(values)} distinct values in [{result['min']}, {result['max']}]"]
    if not args.quiet and len(values) <= 40:
        human.append("values: " + " ".join(_rat(v) for v in values))
    if getattr(args, "csv", None):
        if args.csv == "-":
            # stdout belongs to the CSV rows alone
            if args.json:
                raise _UsageError("--json cannot be combined with --csv to stdout")
            emit_csv(sample, args.csv)
            human = []
        else:
            emit_csv(sample, args.csv)
            human.append(f"csv written to {args.csv}")
    if getattr(args, "plot", None):
        from . import plots

        plots.render_sample(sample, args.plot)
        human.append(f"figure written to {args.plot}")
    return _Output(input_echo, result, human)


def _parse_input_poly(args) -> Poly:
    if args.poly is None:
        raise _UsageError("a polynomial argument is required (or --file for batches)")
    return parse_poly(args.poly, n_hint=args.vars, generic=not getattr(args, "degenerate", False))


def _cmd_lct(args, mode_json: bool) -> int:
    if getattr(args, "file", None):
        return _lct_batch(args, mode_json)
    f = _parse_input_poly(args)
    report = engine.lct_newton(f)
    out = _Output({"poly": args.poly}, _report_json(report), _report_lines(report, f.dimension, args.quiet))
    return _finish("lct", out, mode_json)


def _lct_batch(args, mode_json: bool) -> int:
    failed = False
    with open(args.file) as handle:
        for raw in handle:
            line = raw.strip()
            if not line:
                continue
            try:
                f = parse_poly(line, n_hint=args.vars, generic=not args.degenerate)
                report = engine.lct_newton(f, with_witness=False)
                if mode_json:
                    record = {
                        "schema": SCHEMA,
                        "command": "lct",
                        "input": {"poly": line},
                        "result": _report_json(report),
                    }
                    print(json.dumps(record, separators=(",", ":")))
                else:
                    print(f"{line} -> {report.value}")
            except PolyParseError as exc:
                failed = True
                if mode_json:
                    record = {
                        "schema": SCHEMA,
                        "command": "lct",
                        "input": {"poly": line},
                        "error": str(exc),
                    }
                    print(json.dumps(record, separators=(",", ":")))
                else:
                    print(f"{line} -> parse error: {exc}")
    return 1 if failed else 0


def _cmd_hull(args, mode_json: bool) -> int:
    f = _parse_input_poly(args)
    if f.is_zero():
        raise _UsageError("the zero polynomial has no Newton polyhedron")
    support = sorted(f.support())
    tstar = newton.diagonal_parameter(support)
    facet_list = newton.facets(support, max_dimension=args.max_dim)
    result = {
        "dimension": f.dimension,
        "tstar": _rat(tstar),
        "facets": [_facet_json(ft) for ft in facet_list],
    }
    human = [f"t* = {_rat(tstar)}"]
    if not args.quiet:
        for ft in facet_list:
            kind = "compact" if ft.compact else "non-compact"
            human.append(
                f"facet: {_facet_text(ft, f.dimension)}  [{kind}, face bound {_rat(newton.face_bound(ft))}]"
            )
    if args.plot:
        if f.dimension != 2:
            raise _UsageError("--plot draws the Newton polygon for two-variable input only")
        from . import plots

        plots.render_newton_polygon(support, facet_list, tstar, args.plot)
        human.append(f"figure written to {args.plot}")
    return _finish("hull", _Output({"poly": args.poly}, result, human), mode_json)


def _cmd_bounds(args, mode_json: bool) -> int:
    f = _parse_input_poly(args)
    low, high = engine.multiplicity_bounds(f)
    out = _Output(
        {"poly": args.poly},
        {"lower": _rat(low), "upper": _rat(high)},
        [f"multiplicity bracket: [{_rat(low)}, {_rat(high)}]"],
    )
    return _finish("bounds", out, mode_json)


def _cmd_dsum(args, mode_json: bool) -> int:
    cf = _threshold_arg(args.left)
    cg = _threshold_arg(args.right)
    combined = engine.lct_direct_sum(cf, cg)
    result = {
        "value": None if combined.is_infinite() else _rat(combined.as_fraction()),
        "kind": combined.kind,
    }
    out = _Output({"left": args.left, "right": args.right}, result, [f"lct of direct sum = {combined}"])
    return _finish("dsum", out, mode_json)


def _cmd_truncate(args, mode_json: bool) -> int:
    f = _parse_input_poly(args)
    truncated = f.truncate(args.degree)
    bound = engine.truncation_bound(f.dimension, args.degree)
    result = {"poly": poly_to_string(truncated), "bound": _rat(bound)}
    human = [
        f"truncated: {poly_to_string(truncated)}",
        f"threshold moves by at most {_rat(bound)}",
    ]
    return _finish("truncate", _Output({"poly": args.poly, "degree": args.degree}, result, human), mode_json)


def _cmd_ht1(args, mode_json: bool) -> int:
    sample = threshold_sets.ht1(args.max_k)
    return _finish("ht1", _sample_output(sample, args, {"max_k": args.max_k}), mode_json)


def _cmd_ht2(args, mode_json: bool) -> int:
    sample = threshold_sets.ht2_enumerate(args.bound)
    return _finish("ht2", _sample_output(sample, args, {"bound": args.bound}), mode_json)


def _cmd_toric(args, mode_json: bool) -> int:
    sample = threshold_sets.toric_sample(args.dimension, args.max_degree, args.count, args.seed)
    echo = {
        "dimension": args.dimension,
        "max_degree": args.max_degree,
        "count": args.count,
        "seed": args.seed,
    }
    return _finish("toric", _sample_output(sample, args, echo), mode_json)


def _cmd_accumulate(args, mode_json: bool) -> int:
    values = _read_value_file(args.setfile)
    intervals = threshold_sets.accumulation_scan(values, args.delta, args.k)
    result = {
        "intervals": [
            {"lower": _rat(iv.lower), "upper": _rat(iv.upper), "count": iv.count}
            for iv in intervals
        ]
    }
    human = [f"{len(intervals)} interval(s)"]
    for iv in intervals:
        human.append(f"[{_rat(iv.lower)}, {_rat(iv.upper)}] holds {iv.count} values")
    if args.plot:
        from . import plots

        sample = ThresholdSetSample(0, values, {"source": "file", "path": args.setfile})
        plots.render_sample(sample, args.plot, intervals)
        human.append(f"figure written to {args.plot}")
    echo = {"setfile": args.setfile, "delta": str(args.delta), "k": args.k}
    return _finish("accumulate", _Output(echo, result, human), mode_json)


def _cmd_family(args, mode_json: bool) -> int:
    check = threshold_sets.family_limit_check(args.value, args.max_m)
    result = {
        "value": _rat(check.value),
        "m_first": check.m_first,
        "m_last": check.m_last,
        "checked": len(check.values),
        "empty": check.empty,
        "passed": check.passed,
    }
    if check.empty:
        human = [f"empty check: first valid m = {check.m_first} exceeds {check.m_last}"]
    else:
        human = [
            f"checked m = {check.m_first}..{check.m_last}: "
            + ("all values match c + 1/m and decrease" if check.passed else "MISMATCH"),
        ]
    out = _Output({"value": str(args.value), "max_m": args.max_m}, result, human)
    out.exit_code = 0 if check.passed else 2
    return _finish("family", out, mode_json)


def _cmd_gap(args, mode_json: bool) -> int:
    found = threshold_sets.gap_search(args.n)
    result = {"max": _rat(found.maximum), "witness": list(found.witness)}
    human = [
        f"max sum of {args.n} unit fractions below 1: {_rat(found.maximum)}",
        "witness: " + " ".join(str(a) for a in found.witness),
    ]
    return _finish("gap", _Output({"n": args.n}, result, human), mode_json)


def _cmd_sylvester(args, mode_json: bool) -> int:
    terms = threshold_sets.sylvester_sequence(args.k)
    out = _Output({"k": args.k}, {"terms": list(terms)}, [" ".join(str(t) for t in terms)])
    return _finish("sylvester", out, mode_json)


def _cmd_epsilon(args, mode_json: bool) -> int:
    value = threshold_sets.epsilon_candidate(args.n)
    out = _Output({"n": args.n}, {"value": _rat(value)}, [f"epsilon_{args.n} = {_rat(value)}"])
    return _finish("epsilon", out, mode_json)


def _finish(command: str, out: _Output, mode_json: bool) -> int:
    if mode_json:
        record = {
            "schema": SCHEMA,
            "command": command,
            "input": out.input_echo,
            "result": out.result,
        }
        print(json.dumps(record, separators=(",", ":")))
    else:
        for line in out.human:
            print(line)
    return out.exit_code


def _add_output_flags(p: argparse.ArgumentParser, csv: bool = False, plot: bool = False) -> None:
    p.add_argument("--json", action="store_true", help="emit one machine record")
    p.add_argument("--quiet", action="store_true", help="essential output only")
    if csv:
        p.add_argument("--csv", nargs="?", const="-", metavar="PATH",
                       help="write values as CSV (to stdout when no path)")
    if plot:
        p.add_argument("--plot", metavar="PATH", help="render a figure to PATH")


def _add_poly_arg(p: argparse.ArgumentParser, optional: bool = False) -> None:
    p.add_argument("poly", nargs="?" if optional else None, help="polynomial text")
    p.add_argument("--vars", type=int, default=None, metavar="N",
                   help="dimension hint (pad with unused variables)")


def build_parser() -> _Parser:
    parser = _Parser(prog="lcthresh", description="Log canonical thresholds from Newton polyhedra.")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("lct", help="threshold of a polynomial at the origin")
    _add_poly_arg(p, optional=True)
    p.add_argument("--degenerate", action="store_true",
                   help="coefficients are not assumed generic; value is an upper bound")
    p.add_argument("--file", metavar="PATH", help="batch mode: one polynomial per line")
    _add_output_flags(p)
    p.set_defaults(fn=_cmd_lct)

    p = sub.add_parser("hull", help="diagonal parameter and facets of the Newton polyhedron")
    _add_poly_arg(p)
    p.add_argument("--max-dim", type=int, default=newton.DEFAULT_DIMENSION_CAP,
                   help="facet enumeration dimension cap")
    _add_output_flags(p, plot=True)
    p.set_defaults(fn=_cmd_hull)

    p = sub.add_parser("bounds", help="multiplicity bracket for the threshold")
    _add_poly_arg(p)
    _add_output_flags(p)
    p.set_defaults(fn=_cmd_bounds)

    p = sub.add_parser("dsum", help="threshold of a direct sum from summand thresholds")
    p.add_argument("left", help="threshold (p/q, 0, or inf)")
    p.add_argument("right", help="threshold (p/q, 0, or inf)")
    _add_output_flags(p)
    p.set_defaults(fn=_cmd_dsum)

    p = sub.add_parser("truncate", help="degree truncation and its threshold error bound")
    _add_poly_arg(p)
    p.add_argument("degree", type=int, help="keep terms of total degree <= this")
    _add_output_flags(p)
    p.set_defaults(fn=_cmd_truncate)

    p = sub.add_parser("ht1", help="one-variable threshold set down to 1/K")
    p.add_argument("max_k", type=int)
    _add_output_flags(p, csv=True, plot=True)
    p.set_defaults(fn=_cmd_ht1)

    p = sub.add_parser("ht2", help="two-variable threshold values with parameters up to B")
    p.add_argument("bound", type=int)
    _add_output_flags(p, csv=True, plot=True)
    p.set_defaults(fn=_cmd_ht2)

    p = sub.add_parser("toric", help="thresholds of seeded random supports")
    p.add_argument("dimension", type=int)
    p.add_argument("max_degree", type=int)
    p.add_argument("count", type=int)
    p.add_argument("seed", type=int)
    _add_output_flags(p, csv=True, plot=True)
    p.set_defaults(fn=_cmd_toric)

    p = sub.add_parser("accumulate", help="cluster scan over a value file")
    p.add_argument("setfile", help="CSV from --csv, or one rational per line")
    p.add_argument("delta", type=Fraction, help="window width (rational)")
    p.add_argument("k", type=int, help="minimum cluster size")
    _add_output_flags(p, plot=True)
    p.set_defaults(fn=_cmd_accumulate)

    p = sub.add_parser("family", help="verify the c + 1/m direct-sum family up to M")
    p.add_argument("value", type=Fraction, help="base threshold c in (0, 1)")
    p.add_argument("max_m", type=int)
    _add_output_flags(p)
    p.set_defaults(fn=_cmd_family)

    p = sub.add_parser("gap", help="largest sum of n unit fractions below 1")
    p.add_argument("n", type=int)
    _add_output_flags(p)
    p.set_defaults(fn=_cmd_gap)

    p = sub.add_parser("sylvester", help="Sylvester sequence terms")
    p.add_argument("k", type=int)
    _add_output_flags(p)
    p.set_defaults(fn=_cmd_sylvester)

    p = sub.add_parser("epsilon", help="conjectured gap width below 1 in n variables")
    p.add_argument("n", type=int)
    _add_output_flags(p)
    p.set_defaults(fn=_cmd_epsilon)

    return parser


def run_command(argv: Sequence[str]) -> int:
    """Execute one CLI invocation; records go to stdout, diagnostics to stderr."""
    parser = build_parser()
    try:
        args = parser.parse_args(list(argv))
        return args.fn(args, args.json)
    except _UsageError as exc:
        print(f"usage error: {exc}", file=sys.stderr)
        return 1
    except PolyParseError as exc:
        print(f"parse error: {exc}", file=sys.stderr)
        return 1
    except (OSError, ValueError, ZeroDivisionError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    except ValidationFailure as exc:
        print(f"validation failure: {exc}", file=sys.stderr)
        return 2
    except ResourceCapExceeded as exc:
        print(f"resource cap: {exc}", file=sys.stderr)
        return 3


def main() -> None:
    sys.exit(run_command(sys.argv[1:]))


if __name__ == "__main__":
    main()
