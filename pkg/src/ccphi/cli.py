"""Command-line harness: measures on files, experiments, reports.

Subcommands
-----------
measure   complexity/entropy of a one-symbol-per-line file
phic      score a network label at one or all current states
sweep     hierarchy over every gate multiset, compared to a reference
regress   entropy regression over a hierarchy CSV
neuron    Hindmarsh-Rose trace, spike train and its three measures

Exit codes: 0 success, 2 input/parse error, 3 comparison failure,
4 numeric divergence. All randomness flows from ``--seed``.
"""

from __future__ import annotations

import argparse
import csv
import json
import sys
from pathlib import Path

from . import hr_neuron
from .boolnet import NetworkSpec
from .complexity import etc, lz, shannon_entropy
from .measure import (
    DEFAULT_LEN,
    Measure,
    derive_seed,
    hierarchy_report,
    phi_c,
    phi_c_mean,
)
from .reference import compare_hierarchy, load_reference
from .regression import design_rows, fit_entropy_model, predict
from .seqio import read_symbols, write_symbols

EXIT_OK = 0
EXIT_INPUT = 2
EXIT_COMPARISON = 3
EXIT_DIVERGED = 4


def _fmt(value) -> str:
    """12-significant-digit text form shared by CSV and stdout."""
    if value is None:
        return "NA"
    if isinstance(value, bool):
        return str(value).lower()
    if isinstance(value, float):
        return f"{value:.12g}"
    return str(value)


def _write_rows(path: Path, fmt: str, fieldnames: list[str], rows: list[dict]):
    """Write rows as CSV or as the JSON mirror (same fields, same values)."""
    if fmt == "csv":
        with open(path, "w", newline="") as fh:
            writer = csv.DictWriter(fh, fieldnames=fieldnames, lineterminator="\n")
            writer.writeheader()
            for row in rows:
                writer.writerow({k: _fmt(row[k]) for k in fieldnames})
    else:
        payload = {"rows": [{k: row[k] for k in fieldnames} for row in rows]}
        with open(path, "w", newline="\n") as fh:
            json.dump(payload, fh, indent=2)
            fh.write("\n")


def _emit(args, fieldnames: list[str], rows: list[dict]):
    if args.out:
        _write_rows(Path(args.out), args.format, fieldnames, rows)
    else:
        print(",".join(fieldnames))
        for row in rows:
            print(",".join(_fmt(row[k]) for k in fieldnames))


def cmd_measure(args) -> int:
    symbols = read_symbols(args.file)
    if args.measure == "etc":
        result = etc(symbols)
        print(f"iterations={result.iterations} normalized={_fmt(result.normalized)}")
    elif args.measure == "lz":
        result = lz(symbols, alphabet_size=args.alphabet)
        print(
            f"components={result.component_count} "
            f"normalized={_fmt(result.normalized)}"
        )
    else:
        print(f"entropy={_fmt(shannon_entropy(symbols))}")
    return EXIT_OK


def _parse_state(text: str, n: int) -> tuple[int, ...]:
    bits = tuple(int(c) for c in text.strip())
    if len(bits) != n or any(b not in (0, 1) for b in bits):
        raise ValueError(f"state {text!r} is not a {n}-bit string")
    return bits


def cmd_phic(args) -> int:
    spec = NetworkSpec.from_label(args.network)
    measure = Measure.from_name(args.measure)
    fieldnames = ["state", "phi_c", "argmax_node", "measure", "trials", "seed"]
    meta = {"measure": measure.value, "trials": args.trials, "seed": args.seed}
    rows = []
    if args.state.lower() == "all":
        summary = phi_c_mean(spec, measure, args.seed, args.trials, args.len)
        for state, value in summary.per_state.items():
            rows.append(
                {
                    "state": "".join(map(str, state)),
                    "phi_c": value,
                    "argmax_node": summary.per_state_argmax[state],
                    **meta,
                }
            )
        for name, value in (
            ("mean", summary.mean),
            ("std", summary.std),
            ("cov", summary.cov),
        ):
            rows.append({"state": name, "phi_c": value, "argmax_node": None, **meta})
        print(
            f"{spec.label}: mean={_fmt(summary.mean)} std={_fmt(summary.std)} "
            f"cov={_fmt(summary.cov)} over {len(summary.per_state)} states"
        )
    else:
        state = _parse_state(args.state, spec.n)
        idx = int("".join(map(str, state)), 2)
        draws = [
            phi_c(
                spec,
                state,
                measure,
                derive_seed(args.seed, spec.label, idx, t),
                args.len,
            )
            for t in range(args.trials)
        ]
        value = sum(d.phi_c for d in draws) / len(draws)
        rows.append(
            {
                "state": "".join(map(str, state)),
                "phi_c": value,
                "argmax_node": draws[0].argmax_node,
                **meta,
            }
        )
        print(
            f"{spec.label} state={args.state}: phi_c={_fmt(value)} "
            f"argmax_node={draws[0].argmax_node}"
        )
    _emit(args, fieldnames, rows)
    return EXIT_OK


def cmd_sweep(args) -> int:
    measure = Measure.from_name(args.measure)
    rows = hierarchy_report(
        args.nodes, measure, args.seed, args.trials, args.len, args.jobs
    )
    fieldnames = [
        "network",
        "label_order",
        "mean",
        "std",
        "cov",
        "measure",
        "trials",
        "seed",
    ]
    records = [
        {
            "network": r.label,
            "label_order": i + 1,
            "mean": r.mean,
            "std": r.std,
            "cov": r.cov,
            "measure": measure.value,
            "trials": args.trials,
            "seed": args.seed,
        }
        for i, r in enumerate(rows)
    ]

    report = None
    try:
        reference = load_reference(measure.value, args.reference)
        report = compare_hierarchy(rows, reference, nodes=args.nodes)
    except ValueError:
        if args.reference is not None:
            raise
        # no bundled rows for this node count; emit the plain hierarchy
        report = None
    if report is not None:
        fieldnames += ["ref_mean", "ref_std", "band_pass", "spearman"]
        for rec, cmp_row in zip(records, report.rows):
            rec["ref_mean"] = cmp_row.ref_mean
            rec["ref_std"] = cmp_row.ref_std
            rec["band_pass"] = cmp_row.band_pass
            rec["spearman"] = report.spearman
        n_pass = sum(r.band_pass for r in report.rows)
        print(
            f"{args.nodes}-node {measure.value} sweep: spearman="
            f"{_fmt(report.spearman)} bands={n_pass}/{len(report.rows)}"
        )
    else:
        print(f"{args.nodes}-node {measure.value} sweep: {len(records)} networks")
    _emit(args, fieldnames, records)
    if (
        report is not None
        and args.min_spearman is not None
        and report.spearman < args.min_spearman
    ):
        print(
            f"rank correlation {_fmt(report.spearman)} below required "
            f"{_fmt(args.min_spearman)}",
            file=sys.stderr,
        )
        return EXIT_COMPARISON
    return EXIT_OK


def _load_regression_input(args) -> tuple[list[str], list[float]]:
    if args.bundled:
        rows = load_reference(args.bundled)
        if args.nodes:
            rows = [r for r in rows if r.nodes == args.nodes]
        return [r.label for r in rows], [r.mean for r in rows]
    labels, means = [], []
    with open(args.input, newline="") as fh:
        reader = csv.DictReader(fh)
        for rec in reader:
            for column in ("network", "mean"):
                if column not in rec or rec[column] is None:
                    raise ValueError(f"{args.input}: missing column {column!r}")
            if args.nodes and "nodes" in rec and int(rec["nodes"]) != args.nodes:
                continue
            labels.append(rec["network"].replace(" ", ""))
            means.append(float(rec["mean"]))
    if not labels:
        raise ValueError(f"{args.input}: no usable rows")
    return labels, means


def cmd_regress(args) -> int:
    labels, means = _load_regression_input(args)
    rows = design_rows(labels, means)
    coeff = fit_entropy_model(rows)
    print(f"x_high={_fmt(coeff.x_high)} x_low={_fmt(coeff.x_low)}")
    fieldnames = ["network", "n_high", "n_low", "y", "y_hat"]
    records = [
        {
            "network": label,
            "n_high": row.n_high,
            "n_low": row.n_low,
            "y": row.y,
            "y_hat": predict(row, *coeff),
        }
        for label, row in zip(labels, rows)
    ]
    _emit(args, fieldnames, records)
    return EXIT_OK


def cmd_neuron(args) -> int:
    params = hr_neuron.HRParams(current=args.current, rate=args.rate)
    init = hr_neuron.HRState(*(float(x) for x in args.init.split(",")))
    n_steps = int(round(args.duration / args.dt))
    transient_steps = int(round(args.transient / args.dt))
    trace = hr_neuron.integrate(params, args.dt, n_steps, transient_steps, init)
    train = hr_neuron.binarize_spikes(trace, args.dt, args.window, args.threshold)

    entropy = shannon_entropy(train)
    etc_norm = etc(train).normalized
    lz_norm = lz(train, alphabet_size=2).normalized
    print(
        f"I={_fmt(args.current)}: spikes={sum(train)}/{len(train)} "
        f"entropy={_fmt(entropy)} etc={_fmt(etc_norm)} lz={_fmt(lz_norm)}"
    )
    if args.out_prefix:
        prefix = Path(args.out_prefix)
        with open(f"{prefix}.trace.txt", "w", newline="\n") as fh:
            for v in trace:
                fh.write(f"{v:.8g}\n")
        write_symbols(f"{prefix}.spikes.txt", train)
    return EXIT_OK


def _add_report_flags(parser, default_len=DEFAULT_LEN):
    parser.add_argument("--measure", default="etc", help="etc or lz")
    parser.add_argument("--len", type=int, default=default_len,
                        help="perturbation series length")
    parser.add_argument("--seed", type=int, default=0, help="root RNG seed")
    parser.add_argument("--trials", type=int, default=1,
                        help="independent draws per state")
    parser.add_argument("--format", choices=("csv", "json"), default="csv")
    parser.add_argument("--out", default=None, help="report file path")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="ccphi",
        description="Compression-complexity measures for boolean gate networks",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("measure", help="complexity of a symbol file")
    p.add_argument("file")
    p.add_argument("--measure", default="etc", choices=("etc", "lz", "entropy"))
    p.add_argument("--alphabet", type=int, default=2,
                   help="declared alphabet size for lz normalization")
    p.set_defaults(func=cmd_measure)

    p = sub.add_parser("phic", help="score a network at one or all states")
    p.add_argument("network", help='label such as "OR-AND-XOR"')
    p.add_argument("--state", default="all", help='bit string such as 100, or "all"')
    _add_report_flags(p)
    p.set_defaults(func=cmd_phic)

    p = sub.add_parser("sweep", help="hierarchy over all gate multisets")
    p.add_argument("--nodes", type=int, required=True)
    _add_report_flags(p)
    p.add_argument("--jobs", type=int, default=1, help="parallel worker processes")
    p.add_argument("--reference", default=None,
                   help="reference CSV path (default: bundled table)")
    p.add_argument("--min-spearman", type=float, default=None,
                   help="exit 3 when rank correlation falls below this")
    p.set_defaults(func=cmd_sweep)

    p = sub.add_parser("regress", help="entropy regression over a hierarchy CSV")
    p.add_argument("input", nargs="?", default=None,
                   help="CSV with network and mean columns")
    p.add_argument("--bundled", choices=("phi", "etc", "lz"), default=None,
                   help="fit a bundled reference table instead of a file")
    p.add_argument("--nodes", type=int, default=None, help="restrict to one size")
    p.add_argument("--format", choices=("csv", "json"), default="csv")
    p.add_argument("--out", default=None)
    p.set_defaults(func=cmd_regress)

    p = sub.add_parser("neuron", help="Hindmarsh-Rose spike-train demo")
    p.add_argument("--current", type=float, required=True, help="external current I")
    p.add_argument("--rate", type=float, default=0.0021)
    p.add_argument("--dt", type=float, default=hr_neuron.DEFAULT_DT)
    p.add_argument("--duration", type=float, default=hr_neuron.DEFAULT_DURATION)
    p.add_argument("--transient", type=float, default=hr_neuron.DEFAULT_TRANSIENT)
    p.add_argument("--window", type=float, default=hr_neuron.DEFAULT_WINDOW)
    p.add_argument("--threshold", type=float, default=hr_neuron.DEFAULT_THRESHOLD)
    p.add_argument("--init", default="0,0,0", help="initial state s,p,q")
    p.add_argument("--out-prefix", default=None,
                   help="write <prefix>.trace.txt and <prefix>.spikes.txt")
    p.set_defaults(func=cmd_neuron)
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except hr_neuron.IntegrationDivergedError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_DIVERGED
    except (ValueError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT


if __name__ == "__main__":
    sys.exit(main())
