"""Command-line interface.

Subcommands: gen, measure, theory, sweep, compare, survey, validate.
Exit codes: 0 on success, 1 on runtime failure, 2 on usage errors.
Human-readable output goes to stdout; machine-readable output goes to a
file (-o) or replaces stdout under --json, never mixed. All randomness
flows from explicit --seed flags (default 0), so published results are
reproducible commands.
"""

from __future__ import annotations

import argparse
import json
import math
import sys
from pathlib import Path

from . import experiments, plotting, survey as survey_mod, theory, validate as validate_mod
from .errors import BridgegapError
from .generate import ModelParams, gen_model
from .graph import is_connected, read_edge_list, write_edge_list
from .measure import count_entry_paths, social_distances

EXIT_OK = 0
EXIT_RUNTIME = 1
EXIT_USAGE = 2


class UsageError(Exception):
    pass


def _fmt_float(v: float | None) -> str:
    if v is None or (isinstance(v, float) and math.isnan(v)):
        return "nan"
    return f"{v:.6f}"


def _write_output(text: str, out: str | None) -> None:
    if out is None:
        sys.stdout.write(text)
    else:
        Path(out).write_text(text, encoding="utf-8")


def _cmd_gen(args) -> int:
    if (args.bridge_prob is None) == (args.bridges is None):
        raise UsageError("exactly one of --bridge-prob / --bridges is required")
    try:
        params = ModelParams(
            n1=args.n1,
            p1=args.p1,
            n2=args.n2,
            p2=args.p2,
            bridge_prob=args.bridge_prob,
            bridge_count=args.bridges,
            seed=args.seed,
        )
    except (ValueError, BridgegapError) as exc:
        raise UsageError(str(exc)) from exc
    g = gen_model(params)
    write_edge_list(g, args.output)
    e1, e2, b = g.edge_class_counts()
    conn1 = is_connected(g, range(g.n1))
    conn2 = is_connected(g, range(g.n1, g.n))
    if params.outside_sparse_regime:
        print("note: bridging probability >= 1/n2 (outside the sparse-bridge regime)", file=sys.stderr)
    print(f"wrote {args.output}: n1={g.n1} n2={g.n2} |E1|={e1} |E2|={e2} |B|={b}")
    print(f"block connectivity: backward={'yes' if conn1 else 'no'} forward={'yes' if conn2 else 'no'}")
    return EXIT_OK


def _cmd_measure(args) -> int:
    g = read_edge_list(args.graph)
    if args.entry_paths is not None:
        stats = count_entry_paths(g, args.entry_paths, args.lmax, budget=args.budget)
        if args.json:
            payload = {
                "source": stats.source,
                "max_length_enumerated": stats.max_length_enumerated,
                "counts": {str(l): c for l, c in sorted(stats.counts.items())},
            }
            _write_output(json.dumps(payload, indent=2) + "\n", args.output)
        else:
            lines = [f"source={stats.source}", "l,count"]
            lines += [f"{l},{c}" for l, c in sorted(stats.counts.items())]
            _write_output("\n".join(lines) + "\n", args.output)
        return EXIT_OK

    report = social_distances(g)
    if args.json:
        payload = {
            "mean_dstar": report.mean_dstar,
            "unreachable_count": report.unreachable_count,
            "cumulative_capital": report.cumulative_capital,
        }
        _write_output(json.dumps(payload, indent=2) + "\n", args.output)
    else:
        lines = ["node,dstar"]
        for u in range(g.n1):
            d = report.dstar_of(u)
            lines.append(f"{u},{'unreachable' if d is None else d}")
        lines.append(f"# mean_dstar={_fmt_float(report.mean_dstar)}")
        lines.append(f"# unreachable_count={report.unreachable_count}")
        lines.append(f"# cumulative_capital={_fmt_float(report.cumulative_capital)}")
        _write_output("\n".join(lines) + "\n", args.output)
    return EXIT_OK


def _cmd_theory(args) -> int:
    if (args.bridge_prob is None) == (args.bridges is None):
        raise UsageError("exactly one of --bridge-prob / --bridges is required")
    try:
        inputs = theory.TheoryInputs(
            n1=args.n1,
            p1=args.p1,
            n2=args.n2,
            b=args.bridge_prob,
            x=float(args.bridges) if args.bridges is not None else None,
        )
        report = theory.social_distance_law(inputs, max_length=args.lmax)
    except (ValueError, BridgegapError) as exc:
        raise UsageError(str(exc)) from exc
    if args.json:
        payload = {
            "n1": inputs.n1,
            "p1": inputs.p1,
            "n2": inputs.n2,
            "b": inputs.bridge_prob,
            "x": inputs.bridge_count,
            "d0": report.d0,
            "predicted_dstar": report.predicted_dstar,
            "connectivity_p0_block1": report.connectivity_p0_block1,
            "connectivity_p0_block2": report.connectivity_p0_block2,
            "flags": list(report.flags),
            "expected_paths_exact": {str(l): v for l, v in report.expected_paths_exact.items()},
            "expected_paths_approx": {str(l): v for l, v in report.expected_paths_approx.items()},
            "candidates_exact": {str(l): v for l, v in report.candidates_exact.items()},
            "candidates_approx": {str(l): v for l, v in report.candidates_approx.items()},
        }
        _write_output(json.dumps(payload, indent=2) + "\n", args.output)
        return EXIT_OK
    lines = [
        f"inputs: n1={inputs.n1} p1={inputs.p1:g} n2={inputs.n2} "
        f"b={inputs.bridge_prob:.6g} x={inputs.bridge_count:.6g}",
        f"d0                  = {report.d0:.6f}",
        f"predicted d*        = {report.predicted_dstar:.6f}",
        f"connectivity p0     : backward={report.connectivity_p0_block1:.6f} "
        f"forward={report.connectivity_p0_block2:.6f}",
        f"flags               : {', '.join(report.flags) if report.flags else 'none'}",
        "",
        f"{'l':>3}  {'candidates_exact':>18}  {'candidates_approx':>18}  "
        f"{'E[paths]_exact':>16}  {'E[paths]_approx':>16}",
    ]
    for l in sorted(report.expected_paths_exact):
        lines.append(
            f"{l:>3}  {report.candidates_exact[l]:>18.6g}  {report.candidates_approx[l]:>18.6g}  "
            f"{report.expected_paths_exact[l]:>16.6g}  {report.expected_paths_approx[l]:>16.6g}"
        )
    _write_output("\n".join(lines) + "\n", args.output)
    return EXIT_OK


def _cmd_sweep(args) -> int:
    try:
        config = experiments.SweepConfig.from_json(Path(args.config).read_text(encoding="utf-8"))
    except FileNotFoundError:
        raise
    except (ValueError, BridgegapError) as exc:
        raise UsageError(f"bad sweep config: {exc}") from exc
    result = experiments.run_sweep(config, n_jobs=args.threads)
    _write_output(result.to_csv(), args.output)
    if args.plot:
        plotting.sweep_plot_svg(result, args.plot)
    return EXIT_OK


def _cmd_compare(args) -> int:
    try:
        config = experiments.SweepConfig(
            n1=args.n1,
            p1=args.p1,
            n2=args.n2,
            p2=args.p2,
            x_values=tuple(args.x_values),
            trials=args.trials,
            seed=args.seed,
            substrate="er",
            connectivity_policy=args.connectivity_policy,
        )
    except (ValueError, BridgegapError) as exc:
        raise UsageError(str(exc)) from exc
    result = experiments.run_substrate_comparison(config, n_jobs=args.threads)
    if args.out_er:
        Path(args.out_er).write_text(result.er.to_csv(), encoding="utf-8")
    if args.out_sf:
        Path(args.out_sf).write_text(result.sf.to_csv(), encoding="utf-8")
    if args.json:
        payload = {
            "max_divergence": result.max_divergence,
            "er_increases": result.er_increases,
            "sf_increases": result.sf_increases,
            "x_values": list(config.x_values),
            "er_mean_dstar": [r.mean_dstar for r in result.er.rows],
            "sf_mean_dstar": [r.mean_dstar for r in result.sf.rows],
        }
        _write_output(json.dumps(payload, indent=2) + "\n", args.output)
        return EXIT_OK
    lines = [f"{'x':>8}  {'er_mean_dstar':>14}  {'sf_mean_dstar':>14}  {'analytic':>10}"]
    for er_row, sf_row in zip(result.er.rows, result.sf.rows):
        lines.append(
            f"{er_row.x:>8}  {_fmt_float(er_row.mean_dstar):>14}  "
            f"{_fmt_float(sf_row.mean_dstar):>14}  {_fmt_float(er_row.analytic_dstar):>10}"
        )
    lines.append(
        f"max divergence={_fmt_float(result.max_divergence)} "
        f"increases: er={result.er_increases} sf={result.sf_increases}"
    )
    _write_output("\n".join(lines) + "\n", args.output)
    return EXIT_OK


def _cmd_survey(args) -> int:
    if (args.input is None) == (not args.bundled):
        raise UsageError("exactly one of --input / --bundled is required")
    records = survey_mod.load_bundled_sample() if args.bundled else survey_mod.load_survey(args.input)
    dist = survey_mod.homophily_distribution(records)
    if args.json:
        payload = {
            "total": dist.total,
            "counts": {str(k): dist.counts[k] for k in survey_mod.TIE_BUCKETS},
            "percentages": {str(k): dist.percentages[k] for k in survey_mod.TIE_BUCKETS},
        }
        _write_output(json.dumps(payload, indent=2) + "\n", args.output)
        return EXIT_OK
    lines = [f"{'same-group ties':>15}  {'count':>7}  {'percent':>8}"]
    for k in survey_mod.TIE_BUCKETS:
        lines.append(f"{k:>15}  {dist.counts[k]:>7}  {dist.percentages[k]:>8.1f}")
    lines.append(f"{'total':>15}  {dist.total:>7}")
    _write_output("\n".join(lines) + "\n", args.output)
    return EXIT_OK


def _cmd_validate(args) -> int:
    outcomes = validate_mod.run_level(args.level, n_jobs=args.threads)
    sys.stdout.write(validate_mod.render_table(outcomes))
    return EXIT_OK if all(o.passed for o in outcomes) else EXIT_RUNTIME


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="bridgegap", description=__doc__)
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("gen", help="generate a model graph and write its edge list")
    p.add_argument("--n1", type=int, required=True, help="backward-community size")
    p.add_argument("--p1", type=float, required=True, help="backward-block edge probability")
    p.add_argument("--n2", type=int, required=True, help="forward-community size")
    p.add_argument("--p2", type=float, required=True, help="forward-block edge probability")
    p.add_argument("--bridge-prob", type=float, help="per-pair bridging probability")
    p.add_argument("--bridges", type=int, help="exact bridge count")
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("-o", "--output", required=True, help="edge-list file to write")
    p.set_defaults(func=_cmd_gen)

    p = sub.add_parser("measure", help="social distances or path counts of a graph file")
    p.add_argument("--graph", required=True, help="edge-list file")
    p.add_argument("--entry-paths", type=int, metavar="NODE", help="count entry paths from NODE")
    p.add_argument("--lmax", type=int, default=3, help="maximum path length to enumerate")
    p.add_argument("--budget", type=int, default=100_000_000, help="expansion budget")
    p.add_argument("--json", action="store_true", help="emit the JSON summary instead of CSV")
    p.add_argument("-o", "--output", help="write output to a file instead of stdout")
    p.set_defaults(func=_cmd_measure)

    p = sub.add_parser("theory", help="closed-form predictions for one parameter set")
    p.add_argument("--n1", type=int, required=True)
    p.add_argument("--p1", type=float, required=True)
    p.add_argument("--n2", type=int, required=True)
    p.add_argument("--bridge-prob", type=float, help="bridging probability b")
    p.add_argument("--bridges", type=int, help="bridge count x = n1*n2*b")
    p.add_argument("--lmax", type=int, default=None, help="longest path length to tabulate")
    p.add_argument("--json", action="store_true")
    p.add_argument("-o", "--output")
    p.set_defaults(func=_cmd_theory)

    p = sub.add_parser("sweep", help="bridge-count sweep from a JSON config")
    p.add_argument("--config", required=True, help="sweep config JSON file")
    p.add_argument("-o", "--output", help="CSV output file (default stdout)")
    p.add_argument("--plot", help="optional SVG plot file")
    p.add_argument("--threads", type=int, default=None, help="worker processes (default: all cores)")
    p.set_defaults(func=_cmd_sweep)

    p = sub.add_parser("compare", help="matched ER vs scale-free sweep")
    p.add_argument("--n1", type=int, required=True)
    p.add_argument("--p1", type=float, required=True)
    p.add_argument("--n2", type=int, required=True)
    p.add_argument("--p2", type=float, required=True)
    p.add_argument("--x-values", type=int, nargs="+", required=True)
    p.add_argument("--trials", type=int, default=20)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--connectivity-policy", choices=experiments.CONNECTIVITY_POLICIES, default="record")
    p.add_argument("--out-er", help="CSV file for the ER sweep")
    p.add_argument("--out-sf", help="CSV file for the scale-free sweep")
    p.add_argument("--json", action="store_true")
    p.add_argument("-o", "--output")
    p.add_argument("--threads", type=int, default=None)
    p.set_defaults(func=_cmd_compare)

    p = sub.add_parser("survey", help="homophily distribution of a friendship survey")
    p.add_argument("--input", help="survey CSV file")
    p.add_argument("--bundled", action="store_true", help="use the bundled sample")
    p.add_argument("--json", action="store_true")
    p.add_argument("-o", "--output")
    p.set_defaults(func=_cmd_survey)

    p = sub.add_parser("validate", help="run the validation suite")
    p.add_argument("--level", choices=("quick", "full"), default="quick")
    p.add_argument("--threads", type=int, default=None)
    p.set_defaults(func=_cmd_validate)

    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except UsageError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except (BridgegapError, OSError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_RUNTIME


if __name__ == "__main__":
    sys.exit(main())
