"""
Command-line interface for the satpos toolkit.

Usage:
    python satpos_cli.py kron tworow --lambda 87,62 --mu 97,52 --pi 64,39,24,22
    python satpos_cli.py hilbert syminv --k 2 --n 12
    python satpos_cli.py ehrhart index --file polytope.json
    python satpos_cli.py reproduce fkron1 --pretty

Every subcommand prints one CommandResult (JSON by default, or CSV / an
aligned table) on stdout. Exit code 0 on success, 1 on a domain error,
2 on a usage or input error.
"""
import argparse
import csv
import io
import json
import logging
import sys
import time
from typing import Any, Callable, Dict, List, Optional, Sequence, Tuple

from pydantic import ValidationError

from satpos.combinat import (
    Partition,
    frobenius_character,
    hive_polytope,
    kostant_partition,
    kostka,
    kostka_bounded_height,
    lr_coefficient,
    sn_character,
    weight_multiplicity,
    weyl_dim_poly,
)
from satpos.config import configure_logging, settings
from satpos.errors import SatposError
from satpos.exact import IntMatrix, RationalFunction, smith_normal_form
from satpos.models import CommandResult, ErrorDocument, QuasiPolynomialDocument
from satpos.multiplicity import (
    StretchKind,
    StretchSpec,
    TensorEmbedding,
    gp_hilbert,
    klimyk_branching,
    kronecker_char,
    kronecker_two_row,
    plethysm_p_basis,
    plethysm_weyl_substitution,
    stretching_quasipolynomial,
    syminv_hilbert,
)
from satpos.polytope import HPolytope, count_lattice_points
from satpos.quasipoly import QuasiPolynomial, generating_function, positive_form_search
from satpos.reproduce import reproduce_fgmodp, reproduce_fkron1, reproduce_fsym, table_rows
from satpos.satip import (
    SaturatedIPInstance,
    ehrhart_index,
    ehrhart_quasipoly,
    ehrhart_samples,
    lr_nonvanishing,
    robust_obstruction_check,
    saturated_ip_decide,
)

logger = logging.getLogger(__name__)

Handler = Callable[[argparse.Namespace], Tuple[Dict[str, Any], Dict[str, Any]]]


# ---------------------------------------------------------------------------
# Input helpers
# ---------------------------------------------------------------------------

def _partition(text: str) -> Partition:
    try:
        return Partition.parse(text)
    except (ValueError, ValidationError) as e:
        raise argparse.ArgumentTypeError(f"not a partition: {text!r} ({e})")


def _ints(text: str) -> List[int]:
    try:
        return [int(v) for v in text.split(",") if v.strip()]
    except ValueError:
        raise argparse.ArgumentTypeError(f"not a comma-separated integer list: {text!r}")


def _words(text: str) -> List[str]:
    return [v.strip() for v in text.split(",") if v.strip()]


def _matrix(text: str) -> List[List[int]]:
    """Rows separated by ';', entries by ','."""
    return [_ints(row) for row in text.split(";")]


def _read_json(path: Optional[str]) -> Any:
    if path is None or path == "-":
        return json.load(sys.stdin)
    with open(path) as f:
        return json.load(f)


def _read_polytope(path: Optional[str]) -> HPolytope:
    return HPolytope.from_document(_read_json(path))


def _quasi_outputs(f: QuasiPolynomial) -> Dict[str, Any]:
    return {"quasipolynomial": f.to_document().model_dump(), "text": str(f)}


def _function_outputs(F: RationalFunction) -> Dict[str, Any]:
    return {"numerator": F.numerator.to_strings(), "denominator": F.denominator.to_strings()}


# ---------------------------------------------------------------------------
# Subcommand handlers
# ---------------------------------------------------------------------------

def _cmd_lr(args):
    inputs = {"alpha": str(args.alpha), "beta": str(args.beta), "lambda": str(args.lam), "method": args.method}
    if args.method == "hive":
        side = args.n or max(1, args.alpha.height, args.beta.height, args.lam.height)
        value = count_lattice_points(hive_polytope(args.alpha, args.beta, args.lam, side))
    else:
        value = lr_coefficient(args.alpha, args.beta, args.lam)
    return inputs, {"coefficient": value}


def _cmd_kostka(args):
    inputs = {"lambda": str(args.lam), "content": args.content, "method": args.method}
    count = kostka_bounded_height if args.method == "gt" else kostka
    return inputs, {"kostka": count(args.lam, args.content)}


def _cmd_kron(args):
    lam, mu, pi = args.lam, args.mu, args.pi
    inputs = {"lambda": str(lam), "mu": str(mu), "pi": str(pi)}
    if args.method == "char":
        value = kronecker_char(lam, mu, pi, guard=args.guard)
    elif args.method == "tworow":
        value = kronecker_two_row(lam, mu, pi)
    else:
        a, b = max(1, lam.height), max(1, mu.height)
        inputs["embedding"] = [a, b]
        value = klimyk_branching(a * b, TensorEmbedding(a=a, b=b), pi, (lam, mu))
    return inputs, {"kronecker": value}


def _cmd_plethysm(args):
    inputs = {"lambda": str(args.lam), "mu": str(args.mu)}
    if args.method == "pbasis":
        expansion = plethysm_p_basis(args.lam, args.mu, guard=args.guard)
        if args.k is not None:
            expansion = expansion.truncated(args.k)
    else:
        if args.k is None:
            raise ValueError("plethysm weyl needs --k")
        expansion = plethysm_weyl_substitution(args.lam, args.mu, args.k, guard=args.guard)
    if args.k is not None:
        inputs["k"] = args.k
    if args.pi is not None:
        inputs["pi"] = str(args.pi)
        return inputs, {"coefficient": expansion.coefficient(args.pi)}
    return inputs, {"rows": expansion.to_rows()}


def _cmd_char(args):
    inputs = {"lambda": str(args.lam), "rho": str(args.rho)}
    compute = sn_character if args.method == "mn" else frobenius_character
    return inputs, {"character": compute(args.lam, args.rho)}


def _cmd_kostant(args):
    inputs = {"weight": args.weight}
    if args.lam is not None:
        inputs["lambda"] = str(args.lam)
        return inputs, {"multiplicity": weight_multiplicity(args.lam, args.weight, method="kostant")}
    return inputs, {"partition_function": kostant_partition(len(args.weight), args.weight)}


def _cmd_ehrhart(args):
    P = _read_polytope(args.file)
    inputs = {"polytope": P.to_document().model_dump()}
    if args.method == "samples":
        N = args.n or 10
        inputs["n"] = N
        counts = ehrhart_samples(P, N)
        return inputs, {"rows": [{"n": n, "count": c} for n, c in enumerate(counts, start=1)]}
    if args.method == "quasipoly":
        period_bound = args.period_bound or settings.stretch_period_bound
        inputs.update({"period_bound": period_bound, "degree_bound": args.degree_bound})
        return inputs, _quasi_outputs(ehrhart_quasipoly(P, period_bound, args.degree_bound))
    return inputs, {"index": ehrhart_index(P)}


def _cmd_satip(args):
    P = _read_polytope(args.file)
    inst = SaturatedIPInstance(P=P, sie=args.sie, pie=args.pie)
    inputs = {"polytope": P.to_document().model_dump(), "c": args.c, "sie": args.sie, "pie": args.pie}
    return inputs, {"has_integer_point": saturated_ip_decide(inst, args.c)}


def _cmd_lrtest(args):
    inputs = {"alpha": args.alpha, "beta": args.beta, "lambda": args.lam, "n": args.n}
    return inputs, {"nonvanishing": lr_nonvanishing(args.alpha, args.beta, args.lam, args.n)}


def _cmd_stretch(args):
    spec = StretchSpec(
        kind=StretchKind(args.kind),
        labels=args.label or [],
        k=args.k,
        horizon=args.n or settings.stretch_horizon,
        period_bound=args.period_bound or settings.stretch_period_bound,
        degree_bound=settings.stretch_degree_bound if args.degree_bound is None else args.degree_bound,
    )
    result = stretching_quasipolynomial(spec, threads=args.threads, cap=args.cap)
    inputs = {"kind": spec.kind.value, "labels": [str(p) for p in spec.labels], "k": spec.k,
              "horizon": spec.horizon, "period_bound": spec.period_bound, "degree_bound": spec.degree_bound}
    outputs = {
        "samples": [{"n": n, "value": v} for n, v in result.samples],
        "generating_function": _function_outputs(result.generating_function),
        "positive_form": result.positive_form.to_document().model_dump() if result.positive_form else None,
        "index": result.index,
        "saturation_index": result.saturation_index,
        "positivity_index": result.positivity_index,
        "saturated_by_form": result.saturated_by_form,
    }
    outputs.update(_quasi_outputs(result.quasipolynomial))
    return inputs, outputs


def _cmd_posform(args):
    if args.file is not None:
        f = QuasiPolynomial.from_document(QuasiPolynomialDocument.model_validate(_read_json(args.file)))
        F = generating_function(f)
        degree = f.degree if args.degree is None else args.degree
    else:
        if args.numerator is None or args.denominator is None or args.degree is None:
            raise ValueError("posform needs --file, or --numerator, --denominator and --degree")
        F = RationalFunction(numerator=args.numerator, denominator=args.denominator)
        degree = args.degree
    max_a = args.period_bound or settings.stretch_period_bound
    form = positive_form_search(F, degree, max_a)
    inputs = {"function": _function_outputs(F), "degree": degree, "max_a": max_a}
    outputs = {"positive_form": form.to_document().model_dump() if form else None,
               "modular_index": form.modular_index if form else None}
    return inputs, outputs


def _cmd_hilbert(args):
    if args.method == "syminv":
        N = args.n or 12
        return {"k": args.k, "n": N}, _quasi_outputs(syminv_hilbert(args.k, N))
    if args.lam is None:
        raise ValueError("hilbert gp needs --lambda")
    inputs = {"k": args.k, "lambda": str(args.lam)}
    p = weyl_dim_poly(args.k, args.lam)
    outputs = {"weyl_dim_poly": p.to_strings(), "text": str(p)}
    if args.n:
        inputs["n"] = args.n
        fitted = gp_hilbert(args.k, args.lam, args.n)
        outputs["fitted"] = fitted.constituents[0].to_strings()
        outputs["agrees"] = fitted.constituents[0] == p
    return inputs, outputs


def _cmd_snf(args):
    A = IntMatrix.from_rows(args.matrix)
    snf = smith_normal_form(A)
    return {"matrix": A.to_rows()}, {
        "diagonal": snf.diagonal, "rank": snf.rank,
        "U": snf.U.to_rows(), "D": snf.D.to_rows(), "V": snf.V.to_rows(),
    }


def _cmd_obstruct(args):
    P, Q = _read_polytope(args.p), _read_polytope(args.q)
    inputs = {"P": P.to_document().model_dump(), "Q": Q.to_document().model_dump()}
    return inputs, {"verdict": robust_obstruction_check(P, Q).value}


def _cmd_reproduce(args):
    rows = table_rows(args.table, args.all)
    if args.table == "fkron1":
        report = reproduce_fkron1(rows, horizon=args.n or 6, threads=args.threads)
    elif args.table == "fsym":
        report = reproduce_fsym(rows, horizon=args.n or 60)
    else:
        report = reproduce_fgmodp(rows)
    logger.info(f"Reproduction of {report.table}: {'PASS' if report.passed else 'FAIL'}")
    return {"table": args.table, "all": args.all}, {"passed": report.passed, "rows": report.to_rows()}


# ---------------------------------------------------------------------------
# Output
# ---------------------------------------------------------------------------

def _scalar(value: Any) -> str:
    if isinstance(value, (dict, list)):
        return json.dumps(value, sort_keys=True)
    return "" if value is None else str(value)


def _flat_rows(outputs: Dict[str, Any]) -> Tuple[List[str], List[List[str]]]:
    rows = outputs.get("rows")
    if isinstance(rows, list) and rows and isinstance(rows[0], dict):
        header = list(rows[0].keys())
        return header, [[_scalar(r.get(h)) for h in header] for r in rows]
    return ["key", "value"], [[k, _scalar(v)] for k, v in outputs.items()]


def format_result(result: CommandResult, fmt: str) -> str:
    """Render a CommandResult as json, csv or pretty text."""
    if fmt == "json":
        return json.dumps(result.model_dump(mode="json"), indent=2, sort_keys=True)
    header, rows = _flat_rows(result.outputs)
    if fmt == "csv":
        buffer = io.StringIO()
        writer = csv.writer(buffer, lineterminator="\n")
        writer.writerow(header)
        writer.writerows(rows)
        return buffer.getvalue().rstrip("\n")
    widths = [max(len(h), *(len(r[i]) for r in rows)) if rows else len(h) for i, h in enumerate(header)]
    lines = [" ".join(result.command) + f"  ({result.wall_time_ms:.1f} ms)"]
    lines.append("  ".join(h.ljust(w) for h, w in zip(header, widths)))
    lines.append("  ".join("-" * w for w in widths))
    lines.extend("  ".join(c.ljust(w) for c, w in zip(r, widths)) for r in rows)
    return "\n".join(lines)


def _emit_error(error: Exception, fmt: str) -> None:
    doc = ErrorDocument(error=type(error).__name__, message=str(error), details=getattr(error, "details", None) or None)
    print(json.dumps(doc.model_dump(exclude_none=True), sort_keys=True) if fmt != "pretty"
          else f"Error ({doc.error}): {doc.message}")


# ---------------------------------------------------------------------------
# Parser
# ---------------------------------------------------------------------------

def _common() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    fmt = common.add_mutually_exclusive_group()
    fmt.add_argument("--json", dest="format", action="store_const", const="json", help="JSON output (default)")
    fmt.add_argument("--csv", dest="format", action="store_const", const="csv", help="CSV output")
    fmt.add_argument("--pretty", dest="format", action="store_const", const="pretty", help="Aligned table output")
    common.add_argument("--log-level", help="Logging level for stderr")
    return common


def _add(subparsers, name: str, handler: Handler, path: List[str], common, help_text: str, **kwargs):
    parser = subparsers.add_parser(name, parents=[common], help=help_text, **kwargs)
    parser.set_defaults(handler=handler, path=path)
    return parser


def build_parser() -> argparse.ArgumentParser:
    """Argument parser with every subcommand."""
    common = _common()
    parser = argparse.ArgumentParser(
        prog="satpos", description="Exact saturated and positive integer programming toolkit")
    sub = parser.add_subparsers(dest="command", help="Command to execute")

    p = _add(sub, "lr", _cmd_lr, ["lr"], common, "Littlewood-Richardson coefficient")
    p.add_argument("--alpha", type=_partition, required=True)
    p.add_argument("--beta", type=_partition, required=True)
    p.add_argument("--lambda", dest="lam", type=_partition, required=True)
    p.add_argument("--method", choices=["rule", "hive"], default="rule")
    p.add_argument("--n", type=int, help="Hive side (default: largest height)")

    p = _add(sub, "kostka", _cmd_kostka, ["kostka"], common, "Kostka number")
    p.add_argument("--lambda", dest="lam", type=_partition, required=True)
    p.add_argument("--content", type=_ints, required=True)
    p.add_argument("--method", choices=["dp", "gt"], default="dp")

    kron = sub.add_parser("kron", help="Kronecker coefficients")
    kron_sub = kron.add_subparsers(dest="method", required=True)
    for method in ("char", "tworow", "klimyk"):
        p = _add(kron_sub, method, _cmd_kron, ["kron", method], common, f"Kronecker coefficient ({method})")
        p.add_argument("--lambda", dest="lam", type=_partition, required=True)
        p.add_argument("--mu", type=_partition, required=True)
        p.add_argument("--pi", type=_partition, required=True)
        p.add_argument("--guard", type=int, help="Size guard for the character method")
        p.set_defaults(method=method)

    pleth = sub.add_parser("plethysm", help="Plethysm constants")
    pleth_sub = pleth.add_subparsers(dest="method", required=True)
    for method in ("pbasis", "weyl"):
        p = _add(pleth_sub, method, _cmd_plethysm, ["plethysm", method], common,
                 f"Schur expansion of s_lam[s_mu] ({method})")
        p.add_argument("--lambda", dest="lam", type=_partition, required=True)
        p.add_argument("--mu", type=_partition, required=True)
        p.add_argument("--pi", type=_partition, help="Report a single coefficient")
        p.add_argument("--k", type=int, help="Number of variables")
        p.add_argument("--guard", type=int, help="Bound on |lam| * |mu|")
        p.set_defaults(method=method)

    char = sub.add_parser("char", help="Symmetric group characters")
    char_sub = char.add_subparsers(dest="method", required=True)
    for method in ("mn", "frobenius"):
        p = _add(char_sub, method, _cmd_char, ["char", method], common, f"chi^lambda(rho) ({method})")
        p.add_argument("--lambda", dest="lam", type=_partition, required=True)
        p.add_argument("--rho", type=_partition, required=True)
        p.set_defaults(method=method)

    p = _add(sub, "kostant", _cmd_kostant, ["kostant"], common, "Kostant partition function / weight multiplicity")
    p.add_argument("--weight", type=_ints, required=True)
    p.add_argument("--lambda", dest="lam", type=_partition,
                   help="Highest weight; switches to Kostant multiplicity formula")

    ehr = sub.add_parser("ehrhart", help="Ehrhart functions of a polytope")
    ehr_sub = ehr.add_subparsers(dest="method", required=True)
    for method in ("samples", "quasipoly", "index"):
        p = _add(ehr_sub, method, _cmd_ehrhart, ["ehrhart", method], common, f"Ehrhart {method}")
        p.add_argument("--file", help="Polytope JSON (default: stdin)")
        p.add_argument("--n", type=int, help="Number of dilations to sample")
        p.add_argument("--period-bound", type=int)
        p.add_argument("--degree-bound", type=int)
        p.set_defaults(method=method)

    sat = sub.add_parser("satip", help="Saturated integer programming")
    sat_sub = sat.add_subparsers(dest="method", required=True)
    p = _add(sat_sub, "decide", _cmd_satip, ["satip", "decide"], common, "Does cP contain an integer point?")
    p.add_argument("--file", help="Polytope JSON (default: stdin)")
    p.add_argument("--c", type=int, required=True)
    estimate = p.add_mutually_exclusive_group(required=True)
    estimate.add_argument("--sie", type=int, help="Saturation index estimate")
    estimate.add_argument("--pie", type=int, help="Positivity index estimate")

    lrt = sub.add_parser("lrtest", help="LR nonvanishing")
    lrt_sub = lrt.add_subparsers(dest="method", required=True)
    p = _add(lrt_sub, "nonvanishing", _cmd_lrtest, ["lrtest", "nonvanishing"], common,
             "Decide c_{alpha,beta}^lambda != 0")
    p.add_argument("--alpha", type=_words, required=True)
    p.add_argument("--beta", type=_words, required=True)
    p.add_argument("--lambda", dest="lam", type=_words, required=True)
    p.add_argument("--n", type=int, help="Hive side")

    p = _add(sub, "stretch", _cmd_stretch, ["stretch"], common, "Fit a stretching function")
    p.add_argument("--kind", choices=[k.value for k in StretchKind], required=True)
    p.add_argument("--label", type=_partition, action="append", help="Partition label (repeat, in order)")
    p.add_argument("--k", type=int)
    p.add_argument("--n", type=int, help="Sample horizon")
    p.add_argument("--period-bound", type=int)
    p.add_argument("--degree-bound", type=int)
    p.add_argument("--threads", type=int, help="Worker processes for sampling")
    p.add_argument("--cap", type=int, help="Cap for the saturation and positivity index searches")

    p = _add(sub, "posform", _cmd_posform, ["posform"], common, "Search a positive form")
    p.add_argument("--file", help="Quasi-polynomial JSON")
    p.add_argument("--numerator", type=_words, help="Ascending numerator coefficients")
    p.add_argument("--denominator", type=_words, help="Ascending denominator coefficients")
    p.add_argument("--degree", type=int)
    p.add_argument("--period-bound", type=int, help="Largest exponent a in the denominator")

    hil = sub.add_parser("hilbert", help="Hilbert functions")
    hil_sub = hil.add_subparsers(dest="method", required=True)
    for method in ("gp", "syminv"):
        p = _add(hil_sub, method, _cmd_hilbert, ["hilbert", method], common, f"Hilbert function ({method})")
        p.add_argument("--k", type=int, required=True)
        p.add_argument("--n", type=int, help="Sample horizon")
        if method == "gp":
            p.add_argument("--lambda", dest="lam", type=_partition, required=True)
        p.set_defaults(method=method)

    p = _add(sub, "snf", _cmd_snf, ["snf"], common, "Smith normal form")
    p.add_argument("--matrix", type=_matrix, required=True, help="Rows separated by ';', entries by ','")

    p = _add(sub, "obstruct", _cmd_obstruct, ["obstruct"], common, "Robust obstruction check")
    p.add_argument("--p", required=True, help="Polytope P JSON")
    p.add_argument("--q", required=True, help="Polytope Q JSON")

    rep = sub.add_parser("reproduce", help="Reproduce a published table")
    rep_sub = rep.add_subparsers(dest="table", required=True)
    for table in ("fkron1", "fsym", "fgmodp"):
        p = _add(rep_sub, table, _cmd_reproduce, ["reproduce", table], common, f"Reproduce {table}")
        p.add_argument("--all", action="store_true", help="Every printed row, not just the default ones")
        p.add_argument("--n", type=int, help="Sample horizon")
        p.add_argument("--threads", type=int)
        p.set_defaults(table=table)

    return parser


def run(argv: Optional[Sequence[str]] = None) -> int:
    """
    Parse argv, execute the subcommand and print its CommandResult.

    Returns:
        0 on success, 1 on a domain error, 2 on a usage or input error.
    """
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as e:
        return e.code if isinstance(e.code, int) else 2
    fmt = getattr(args, "format", None) or "json"
    configure_logging(getattr(args, "log_level", None))

    if not getattr(args, "handler", None):
        parser.print_help(sys.stderr)
        return 2

    start = time.perf_counter()
    try:
        inputs, outputs = args.handler(args)
    except SatposError as e:
        logger.error(f"{type(e).__name__}: {e}")
        _emit_error(e, fmt)
        return 1
    except (ValueError, ValidationError, OSError, json.JSONDecodeError) as e:
        logger.error(f"Invalid input: {e}")
        _emit_error(e, fmt)
        return 2
    elapsed = (time.perf_counter() - start) * 1000
    result = CommandResult(command=args.path, inputs=inputs, outputs=outputs, wall_time_ms=elapsed)
    print(format_result(result, fmt))
    return 0


def main() -> None:
    """Console entry point."""
    sys.exit(run())
