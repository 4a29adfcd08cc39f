"""Command-line front end.

Every subcommand emits a single JSON document on standard output with
sorted keys and canonical rational strings, so outputs are byte-stable for
fixed inputs and seed.  Diagnostics go to standard error.  Exit codes:
0 success, 1 validation error, 2 check-suite failure.
"""

from __future__ import annotations

import argparse
import json
import sys

from .algebra import BMatrix, ModelFormatError, load_model
from .clt import CLTQuery, clt_limit, clt_oracle
from .cumulants import cumulant, cumulants_from_moments
from .moments import EvaluationError, MomentSystem, dot_moment
from .partitions import OrderedPartition, PartitionError, enumerate_partitions, q_map
from .series import (from_cumulants, from_moments, muraki_oracle, muraki_sum,
                     series_equal, series_table)
from .verify import SUITES, run_suite

MAX_DEGREE = 6
DEFAULT_DEGREE = 4


class CliError(ValueError):
    pass


class _Parser(argparse.ArgumentParser):
    # argparse exits with 2 on bad flags; the contract here is 1
    def error(self, message):
        self.exit(1, "%s: error: %s\n" % (self.prog, message))


def _emit(obj):
    sys.stdout.write(json.dumps(obj, sort_keys=True, indent=2))
    sys.stdout.write("\n")


def _load_system(path, degree):
    model = load_model(path)
    names = sorted(model.variables)
    if not names:
        raise CliError("model defines no variables")
    return model, MomentSystem.from_model(model, names, degree_cap=max(degree, MAX_DEGREE))


def _parse_json_arg(text, what):
    try:
        return json.loads(text)
    except json.JSONDecodeError as exc:
        raise CliError("bad JSON for %s at column %d: %s" % (what, exc.colno, exc.msg))


def _parse_indices(text, r):
    obj = _parse_json_arg(text, "--indices")
    if not isinstance(obj, list) or not obj or not all(isinstance(i, int) for i in obj):
        raise CliError("--indices must be a nonempty JSON list of integers")
    if any(i < 1 or i > r for i in obj):
        raise CliError("--indices entries must lie in 1..%d" % r)
    return tuple(obj)


def _parse_args_matrices(text, n, d):
    if text is None:
        return (BMatrix.identity(d),) * n
    obj = _parse_json_arg(text, "--args")
    if not isinstance(obj, list) or len(obj) != n:
        raise CliError("--args must be a JSON list of %d matrices" % n)
    return tuple(BMatrix.from_json(m) for m in obj)


def _check_degree(degree):
    if degree < 1 or degree > MAX_DEGREE:
        raise CliError("degree must lie in 1..%d" % MAX_DEGREE)
    return degree


def _cmd_partitions(ns):
    fams = enumerate_partitions(ns.kind, ns.n)
    out = {"kind": ns.kind, "n": ns.n, "count": len(fams)}
    if not ns.count_only:
        if ns.kind == "interval":
            out["blocks"] = [list(b) for b in fams]
        else:
            out["partitions"] = [p.to_json() for p in fams]
    _emit(out)
    return 0


def _cmd_qmap(ns):
    op = OrderedPartition.from_json(_parse_json_arg(ns.ordered, "--ordered"))
    _emit({"ordered": op.to_json(), "result": q_map(op).to_json()})
    return 0


def _cmd_moments(ns):
    degree = _check_degree(ns.degree)
    model, system = _load_system(ns.model, degree)
    if ns.indices is not None:
        idx = _parse_indices(ns.indices, system.r)
        args = _parse_args_matrices(ns.args, len(idx), model.d)
        _emit({"indices": list(idx), "value": system.eval(idx, args).to_json()})
        return 0
    _emit(series_table(from_moments(system), degree))
    return 0


def _cmd_cumulants(ns):
    degree = _check_degree(ns.degree)
    model, system = _load_system(ns.model, degree)
    kappa = cumulant(system) if ns.method == "interpolation" \
        else cumulants_from_moments(system)
    if ns.indices is not None:
        idx = _parse_indices(ns.indices, system.r)
        args = _parse_args_matrices(ns.args, len(idx), model.d)
        _emit({"indices": list(idx), "method": ns.method,
               "value": kappa.eval(idx, args).to_json()})
        return 0
    table = series_table(from_cumulants(kappa), degree)
    table["method"] = ns.method
    _emit(table)
    return 0


def _cmd_muraki(ns):
    degree = _check_degree(ns.degree)
    _, sx = _load_system(ns.model_x, degree)
    _, sy = _load_system(ns.model_y, degree)
    if sx.r != sy.r or sx.d != sy.d:
        raise CliError("models must share r and d")
    composed = muraki_sum(sx, sy)
    oracle = muraki_oracle(sx, sy)
    equal = series_equal(composed, oracle, max_degree=degree)
    _emit({"degree": degree, "equal": equal,
           "sum_series": series_table(composed, degree)})
    return 0


def _cmd_dot(ns):
    degree = _check_degree(ns.degree)
    model, system = _load_system(ns.model, degree)
    if ns.copies < 0:
        raise CliError("--copies must be nonnegative")
    idx = _parse_indices(ns.indices, system.r)
    if len(idx) > degree:
        raise CliError("word longer than the degree bound")
    args = _parse_args_matrices(ns.args, len(idx), model.d)
    value = dot_moment(system, ns.copies, idx, args, ns.method)
    _emit({"copies": ns.copies, "indices": list(idx), "method": ns.method,
           "value": value.to_json()})
    return 0


def _cmd_clt(ns):
    degree = _check_degree(ns.degree)
    model, system = _load_system(ns.model, degree)
    if system.r != 1:
        raise CliError("the clt command needs a single-variable model")
    one = BMatrix.identity(model.d)
    limits = {}
    agree = True
    for n in range(1, degree + 1):
        query = CLTQuery(system, n, (one,) * n)
        lim = clt_limit(query)
        agree = agree and lim == clt_oracle(query)
        limits[str(n)] = lim.to_json()
    _emit({"degree": degree, "limits": limits, "oracle_agrees": agree})
    return 0


def _cmd_check(ns):
    if ns.suite != "all" and ns.suite not in SUITES:
        raise CliError("unknown suite %r" % ns.suite)
    results = run_suite(ns.suite, seed=ns.seed)
    for res in results:
        sys.stderr.write(res.line() + "\n")
    ok = all(r.ok for r in results)
    _emit({
        "suite": ns.suite,
        "seed": ns.seed,
        "checks": [{"name": r.name, "ok": r.ok, "detail": r.detail} for r in results],
        "ok": ok,
    })
    return 0 if ok else 2


def build_parser():
    parser = _Parser(prog="monotoneprob",
                     description="Exact operator-valued monotone probability.")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("partitions", help="enumerate partition families")
    p.add_argument("--kind", required=True,
                   choices=["all", "nc", "interval", "ordered", "monotone", "monotone-pair"])
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--count-only", action="store_true")
    p.set_defaults(fn=_cmd_partitions)

    p = sub.add_parser("qmap", help="collapse an ordered partition")
    p.add_argument("--ordered", required=True, metavar="JSON")
    p.set_defaults(fn=_cmd_qmap)

    p = sub.add_parser("moments", help="joint moments of a model")
    p.add_argument("model")
    p.add_argument("--degree", type=int, default=DEFAULT_DEGREE)
    p.add_argument("--indices", metavar="JSON")
    p.add_argument("--args", metavar="JSON")
    p.set_defaults(fn=_cmd_moments)

    p = sub.add_parser("cumulants", help="monotone cumulants of a model")
    p.add_argument("model")
    p.add_argument("--degree", type=int, default=DEFAULT_DEGREE)
    p.add_argument("--method", choices=["interpolation", "inversion"],
                   default="interpolation")
    p.add_argument("--indices", metavar="JSON")
    p.add_argument("--args", metavar="JSON")
    p.set_defaults(fn=_cmd_cumulants)

    p = sub.add_parser("muraki", help="sum formula vs the word oracle")
    p.add_argument("model_x")
    p.add_argument("model_y")
    p.add_argument("--degree", type=int, default=DEFAULT_DEGREE)
    p.set_defaults(fn=_cmd_muraki)

    p = sub.add_parser("dot", help="moments of N independent copies")
    p.add_argument("model")
    p.add_argument("--copies", type=int, required=True, metavar="N")
    p.add_argument("--indices", required=True, metavar="JSON")
    p.add_argument("--args", metavar="JSON")
    p.add_argument("--method", choices=["reduction", "qmap"], default="qmap")
    p.add_argument("--degree", type=int, default=DEFAULT_DEGREE)
    p.set_defaults(fn=_cmd_dot)

    p = sub.add_parser("clt", help="central limit moments of a mean-zero model")
    p.add_argument("model")
    p.add_argument("--degree", type=int, default=DEFAULT_DEGREE)
    p.set_defaults(fn=_cmd_clt)

    p = sub.add_parser("check", help="run verification suites")
    p.add_argument("--suite", default="all",
                   choices=["all"] + sorted(SUITES))
    p.add_argument("--seed", type=int, default=0)
    p.set_defaults(fn=_cmd_check)

    return parser


def main(argv=None):
    parser = build_parser()
    try:
        ns = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    try:
        return ns.fn(ns)
    except (CliError, ModelFormatError, PartitionError, EvaluationError,
            ValueError, OSError) as exc:
        sys.stderr.write("error: %s\n" % exc)
        return 1


if __name__ == "__main__":
    sys.exit(main())
