"""Command-line interface.

Subcommands:

entropy   entropy of one bipartition (engine and reference oracle).
census    exhaustive census over all equal bipartitions.
analytic  closed-form spectrum for a named hypercube scheme.
verify    closed form against the oracle; exit 1 on disagreement.
spectrum  ladder-block table and adjacency spectrum of a hypercube.

Exit codes: 0 success, 1 verification failure, 2 bad usage or invalid input.
All floating-point output uses 12 significant digits.  Orchestration here is
single-threaded; only the census spreads work across processes.
"""

from __future__ import annotations

import argparse
import json
import sys

import numpy as np

from . import analytic, census, gaussian, stratify
from .errors import OscnetError
from .graph import (
    Bipartition,
    graph_from_uri,
    hypercube_graph,
    named_bipartition,
    potential_matrix,
)

_FMT = "%.12g"

# CLI scheme names use hyphens; "parity" is short for the parity cut.
_SCHEME_MAP = {
    "identity-cut": "identity_cut",
    "parity": "parity_cut",
    "half-strata": "half_strata",
}
_CUT_MAP = {
    "identity_cut": "coordinate",
    "parity_cut": "parity",
    "half_strata": "half_strata",
}


def _fmt(x: float) -> str:
    return _FMT % x


def _emit(text: str, output: str | None):
    if output:
        with open(output, "w", encoding="utf-8") as handle:
            handle.write(text)
    else:
        sys.stdout.write(text)


def _config_lines(command: str, pairs) -> str:
    lines = ["# oscnet %s" % command]
    for key, value in pairs:
        lines.append("# %s = %s" % (key, value))
    return "\n".join(lines) + "\n"


def _parse_subset(raw: str):
    try:
        return [int(tok) for tok in raw.split(",") if tok.strip() != ""]
    except ValueError:
        raise ValueError("subset must be comma-separated integers, got %r" % raw)


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="oscnet",
        description="Entanglement entropy of Gaussian ground states on "
        "oscillator networks.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    common = argparse.ArgumentParser(add_help=False)
    common.add_argument(
        "--log-base", choices=("2", "e"), default="2", help="entropy log base"
    )
    common.add_argument("--output", default=None, help="write result to this file")

    p = sub.add_parser(
        "entropy",
        parents=[common],
        help="entropy of one bipartition, engine and oracle",
    )
    p.add_argument("--graph", required=True, help="hypercube:<d> or file:<path>")
    p.add_argument("--g", type=float, default=0.5, help="coupling strength (default 0.5)")
    p.add_argument(
        "--subset", required=True, help="comma-separated side-A vertex indices"
    )
    p.add_argument("--format", choices=("text", "json"), default="text")

    p = sub.add_parser(
        "census", parents=[common], help="entropy census over equal bipartitions"
    )
    p.add_argument("--graph", required=True, help="hypercube:<d> or file:<path>")
    p.add_argument("--g", type=float, default=0.5, help="coupling strength (default 0.5)")
    p.add_argument("--tolerance", type=float, default=1e-9)
    p.add_argument("--threads", type=int, default=1)
    p.add_argument(
        "--sample", type=int, default=None, help="random sample size instead of full enumeration"
    )
    p.add_argument("--seed", type=int, default=0, help="sampling seed")
    p.add_argument("--format", choices=("text", "json", "csv"), default="text")

    p = sub.add_parser(
        "analytic", parents=[common], help="closed-form spectrum of a named scheme"
    )
    p.add_argument("--scheme", choices=sorted(_SCHEME_MAP), required=True)
    p.add_argument("--d", type=int, required=True, help="hypercube dimension")
    p.add_argument("--g", type=float, default=0.5, help="coupling strength (default 0.5)")
    p.add_argument("--format", choices=("text", "json"), default="text")

    p = sub.add_parser(
        "verify",
        parents=[common],
        help="closed form against the symplectic oracle; exit 1 on mismatch",
    )
    p.add_argument("--scheme", choices=sorted(_SCHEME_MAP), required=True)
    p.add_argument("--d", type=int, required=True, help="hypercube dimension")
    p.add_argument("--g", type=float, default=0.5, help="coupling strength (default 0.5)")
    p.add_argument("--tolerance", type=float, default=1e-9)

    p = sub.add_parser(
        "spectrum",
        parents=[common],
        help="ladder blocks and adjacency spectrum of hypercube:<d>",
    )
    p.add_argument("--d", type=int, required=True, help="hypercube dimension")
    p.add_argument("--format", choices=("text", "json"), default="text")

    return parser


def _mode_rows(spectrum):
    rows = []
    for m in spectrum.modes:
        s = gaussian.entropy_from_nu(m.nu, spectrum.log_base)
        rows.append((m.gamma, m.nu, m.degeneracy, s))
    return rows


def _cmd_entropy(args) -> int:
    graph = graph_from_uri(args.graph)
    subset = _parse_subset(args.subset)
    v = potential_matrix(graph, args.g)
    cut = Bipartition.from_side_a(graph.n, subset)
    spectrum = gaussian.gamma_spectrum(v, cut, log_base=args.log_base)
    engine = spectrum.total_entropy()
    oracle = gaussian.entropy_oracle_symplectic(
        v, cut.side_a, log_base=args.log_base
    )
    config = [
        ("graph", args.graph),
        ("n", graph.n),
        ("g", _fmt(args.g)),
        ("subset", ",".join(str(i) for i in cut.side_a)),
        ("log-base", args.log_base),
    ]
    if args.format == "json":
        doc = {
            "config": dict(config),
            "modes": [
                {"gamma": g_, "nu": nu, "degeneracy": deg, "entropy": s}
                for g_, nu, deg, s in _mode_rows(spectrum)
            ],
            "engineEntropy": engine,
            "oracleEntropy": oracle,
            "difference": engine - oracle,
        }
        _emit(json.dumps(doc, indent=2) + "\n", args.output)
        return 0
    lines = [_config_lines("entropy", config).rstrip("\n")]
    lines.append("gamma nu degeneracy entropy")
    for g_, nu, deg, s in _mode_rows(spectrum):
        lines.append("%s %s %d %s" % (_fmt(g_), _fmt(nu), deg, _fmt(s)))
    lines.append("engine entropy = %s" % _fmt(engine))
    lines.append("oracle entropy = %s" % _fmt(oracle))
    lines.append("difference = %s" % _fmt(engine - oracle))
    _emit("\n".join(lines) + "\n", args.output)
    return 0


def _cmd_census(args) -> int:
    graph = graph_from_uri(args.graph)
    report = census.entropy_census(
        graph,
        args.g,
        tolerance=args.tolerance,
        log_base=args.log_base,
        threads=args.threads,
        sample=args.sample,
        seed=args.seed,
    )
    config = [
        ("graph", args.graph),
        ("n", report.n),
        ("g", _fmt(report.g)),
        ("log-base", report.log_base),
        ("tolerance", _fmt(report.tolerance)),
        ("threads", args.threads),
        ("sample", args.sample if args.sample is not None else "full"),
        ("seed", args.seed),
    ]
    if args.format == "json":
        doc = {"config": dict(config)}
        doc.update(report.to_dict())
        _emit(json.dumps(doc, indent=2) + "\n", args.output)
    elif args.format == "csv":
        _emit(report.to_csv(), args.output)
    else:
        lines = [_config_lines("census", config).rstrip("\n")]
        lines.append(
            "%d classes / %d partitions"
            % (len(report.classes), report.total_partitions)
        )
        lines.append("class entropy multiplicity representatives")
        for i, c in enumerate(report.classes):
            reps = "|".join(
                ",".join(str(v) for v in r) for r in c.representatives
            )
            if c.capped:
                reps += "|..."
            lines.append("%d %s %d %s" % (i, _fmt(c.entropy), c.multiplicity, reps))
        lo = report.classes[report.min_class]
        hi = report.classes[report.max_class]
        lines.append(
            "min class = %d (entropy %s, multiplicity %d)"
            % (report.min_class, _fmt(lo.entropy), lo.multiplicity)
        )
        lines.append(
            "max class = %d (entropy %s, multiplicity %d)"
            % (report.max_class, _fmt(hi.entropy), hi.multiplicity)
        )
        for w in report.warnings:
            lines.append("warning: %s" % w)
        _emit("\n".join(lines) + "\n", args.output)
    if args.output:
        print(
            "%d classes / %d partitions (min %s, max %s) -> %s"
            % (
                len(report.classes),
                report.total_partitions,
                _fmt(report.classes[report.min_class].entropy),
                _fmt(report.classes[report.max_class].entropy),
                args.output,
            )
        )
    return 0


def _cmd_analytic(args) -> int:
    scheme = _SCHEME_MAP[args.scheme]
    if scheme == "identity_cut":
        spectrum = analytic.gamma_identity_cut(args.d, args.g, args.log_base)
    elif scheme == "parity_cut":
        spectrum = analytic.gamma_parity_cut(args.d, args.g, args.log_base)
    else:
        spectrum = analytic.gamma_half_strata(args.d, args.g, args.log_base)
    total = spectrum.total_entropy()
    config = [
        ("scheme", args.scheme),
        ("d", args.d),
        ("g", _fmt(args.g)),
        ("log-base", args.log_base),
    ]
    if args.format == "json":
        doc = {
            "config": dict(config),
            "modes": [
                {"gamma": g_, "nu": nu, "degeneracy": deg, "entropy": s}
                for g_, nu, deg, s in _mode_rows(spectrum)
            ],
            "totalEntropy": total,
        }
        _emit(json.dumps(doc, indent=2) + "\n", args.output)
        return 0
    lines = [_config_lines("analytic", config).rstrip("\n")]
    lines.append("gamma nu degeneracy entropy")
    for g_, nu, deg, s in _mode_rows(spectrum):
        lines.append("%s %s %d %s" % (_fmt(g_), _fmt(nu), deg, _fmt(s)))
    lines.append("total entropy = %s" % _fmt(total))
    _emit("\n".join(lines) + "\n", args.output)
    return 0


def _cmd_verify(args) -> int:
    scheme = _SCHEME_MAP[args.scheme]
    closed = analytic.analytic_entropy(scheme, args.d, args.g, args.log_base)
    graph = hypercube_graph(args.d)
    cut = named_bipartition(args.d, _CUT_MAP[scheme])
    v = potential_matrix(graph, args.g)
    oracle = gaussian.entropy_oracle_symplectic(v, cut.side_a, args.log_base)
    diff = abs(closed - oracle)
    ok = diff <= args.tolerance
    config = [
        ("scheme", args.scheme),
        ("d", args.d),
        ("g", _fmt(args.g)),
        ("log-base", args.log_base),
        ("tolerance", _fmt(args.tolerance)),
    ]
    lines = [_config_lines("verify", config).rstrip("\n")]
    lines.append("closed form = %s" % _fmt(closed))
    lines.append("oracle      = %s" % _fmt(oracle))
    lines.append("difference  = %s" % _fmt(diff))
    lines.append("VERIFY %s" % ("OK" if ok else "FAIL"))
    _emit("\n".join(lines) + "\n", args.output)
    return 0 if ok else 1


def _cmd_spectrum(args) -> int:
    d = args.d
    table = stratify.block_table(d)
    spec = stratify.hypercube_spectrum(d)
    check = None
    if d <= 10:
        dense = np.linalg.eigvalsh(hypercube_graph(d).adjacency_matrix())
        strat = np.linalg.eigvalsh(stratify.stratified_adjacency(d))
        check = float(np.abs(np.sort(dense) - np.sort(strat)).max())
    config = [("d", d)]
    if args.format == "json":
        doc = {
            "config": dict(config),
            "blocks": [{"dimension": dim, "degeneracy": deg} for dim, deg in table],
            "spectrum": [
                {"eigenvalue": val, "multiplicity": mult} for val, mult in spec
            ],
        }
        if check is not None:
            doc["basisCheckMaxDelta"] = check
        _emit(json.dumps(doc, indent=2) + "\n", args.output)
        return 0
    lines = [_config_lines("spectrum", config).rstrip("\n")]
    lines.append("block dimension degeneracy")
    for i, (dim, deg) in enumerate(table):
        lines.append("%d %d %d" % (i, dim, deg))
    lines.append("eigenvalue multiplicity")
    for val, mult in spec:
        lines.append("%d %d" % (val, mult))
    if check is not None:
        lines.append("basis check: max |delta| = %s" % _fmt(check))
    _emit("\n".join(lines) + "\n", args.output)
    return 0


_DISPATCH = {
    "entropy": _cmd_entropy,
    "census": _cmd_census,
    "analytic": _cmd_analytic,
    "verify": _cmd_verify,
    "spectrum": _cmd_spectrum,
}


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return _DISPATCH[args.command](args)
    except (OscnetError, ValueError, OSError) as exc:
        print("error: %s" % exc, file=sys.stderr)
        return 2


def entry():
    sys.exit(main())


if __name__ == "__main__":
    entry()
