"""Command-line entry point binding all modules.

Exit codes: 0 ok, 1 check failure, 2 usage error, 3 malformed input file.
Counts and rationals that may exceed 64 bits are emitted as decimal strings.
"""
from __future__ import annotations

import argparse
import csv
import hashlib
import io
import json
import os
import sys
import time
from fractions import Fraction
from pathlib import Path

from . import __version__
from .bounds import (
    f_bound_values,
    stage_count_beats_target,
    thm1_threshold_check,
    thm2_stage_check,
    unimodal_gap_lb,
)
from .constructions import mirror_config, mms_counterexample, star_config
from .numerics import (
    Configuration,
    ConfigParseError,
    KSubset,
    format_config,
    parse_config_text,
)
from .partition import BaranyaiPartition, ParallelClass, baranyai_partition, validate_partition
from .reproduce import run_reproduction
from .solver import exact_A, search_upper_bound, verify_conjecture_range
from .witness import extract_thm1, extract_thm2


def _rat_str(x) -> str:
    f = Fraction(x)
    return str(f.numerator) if f.denominator == 1 else f"{f.numerator}/{f.denominator}"


def _dump_json(obj) -> str:
    return json.dumps(obj, indent=2, sort_keys=True) + "\n"


def _emit(args, obj, default_name: str) -> None:
    text = _dump_json(obj)
    sys.stdout.write(text)
    if args.out:
        path = Path(args.out) / default_name
        path.parent.mkdir(parents=True, exist_ok=True)
        path.write_text(text)


def _resolve_seed(args) -> int:
    if args.seed is not None:
        return args.seed
    env = os.environ.get("MMS_SEED")
    return int(env) if env else 0


def _load_config(path: str) -> Configuration:
    return parse_config_text(Path(path).read_text())


def _bound_report_json(report) -> dict:
    params = {}
    for key, value in report.parameters.items():
        if isinstance(value, bool) or value is None:
            params[key] = value
        elif isinstance(value, (int, Fraction)):
            params[key] = _rat_str(value)
        else:
            params[key] = str(value)
    return {
        "name": report.name,
        "holds": report.holds,
        "strict": report.strict,
        "lhs": _rat_str(report.lhs),
        "rhs": _rat_str(report.rhs),
        "margin": _rat_str(report.margin),
        "parameters": params,
    }


# --- subcommands -----------------------------------------------------------

def cmd_construct(args) -> int:
    name = args.name
    if name == "counterexample":
        built = mms_counterexample(args.k)
        if args.n is not None and args.n != built.n:
            print(f"error: counterexample fixes n = 3k+1 = {built.n}", file=sys.stderr)
            return 2
    else:
        if args.n is None:
            print("error: --n is required for star/mirror", file=sys.stderr)
            return 2
        built = (star_config if name == "star" else mirror_config)(args.n, args.k)
    out_dir = Path(args.out or ".")
    out_dir.mkdir(parents=True, exist_ok=True)
    stem = f"{built.name}_n{built.n}_k{args.k}"
    cfg_path = out_dir / f"{stem}.cfg"
    cfg_path.write_text(format_config(built.config))
    sidecar = {
        "name": built.name,
        "n": built.n,
        "k": args.k,
        "predicted_count": str(built.predicted_count),
        "prediction_formula": built.prediction_formula,
        "config_path": str(cfg_path),
    }
    (out_dir / f"{stem}.json").write_text(_dump_json(sidecar))
    sys.stdout.write(_dump_json(sidecar))
    return 0


def cmd_baranyai(args) -> int:
    if args.validate:
        data = json.loads(Path(args.validate).read_text())
        partition = BaranyaiPartition(
            n=data["n"], k=data["k"],
            classes=tuple(
                ParallelClass(tuple(KSubset(tuple(b)) for b in cls))
                for cls in data["classes"]
            ),
        )
        verdict = validate_partition(partition)
        sys.stdout.write(_dump_json({"valid": verdict.ok, "diagnostic": verdict.diagnostic}))
        return 0 if verdict.ok else 1
    seed = _resolve_seed(args)
    partition = baranyai_partition(args.n, args.k, seed)
    obj = {
        "n": partition.n,
        "k": partition.k,
        "seed": seed,
        "classes": [
            [list(b.indices) for b in cls.blocks] for cls in partition.classes
        ],
    }
    _emit(args, obj, f"baranyai_n{args.n}_k{args.k}.json")
    return 0


def cmd_witness(args) -> int:
    config = _load_config(args.config)
    seed = _resolve_seed(args)
    extract = extract_thm1 if args.theorem == 1 else extract_thm2
    report = extract(
        config, args.k, mode=args.mode, sample_size=args.sample,
        seed=seed, workers=args.workers,
    )
    obj = {
        "n": config.n,
        "k": args.k,
        "theorem": args.theorem,
        "branch": report.branch,
        "guaranteed_count": str(report.guaranteed_count),
        "witnesses_count": str(report.witnesses.count),
        "certified": report.certified,
        "mode": report.mode,
        "sample_size": report.sample_size,
        "below_guarantee": report.below_guarantee,
        "meets_threshold_target": report.meets_threshold_target,
        "notes": list(report.notes),
        "trace": [
            {
                "stage_index": t.stage_index,
                "surviving_top": t.surviving_top,
                "removed_bottom": t.removed_bottom,
                "central": t.central,
                "stage_set_size": t.stage_set_size,
            }
            for t in report.trace
        ],
    }
    if report.witnesses.is_explicit and args.out:
        out_dir = Path(args.out)
        out_dir.mkdir(parents=True, exist_ok=True)
        csv_path = out_dir / f"witnesses_thm{args.theorem}_n{config.n}_k{args.k}.csv"
        with csv_path.open("w", newline="") as fh:
            writer = csv.writer(fh)
            for s in report.witnesses.sorted_members():
                writer.writerow(s.indices)
        obj["witnesses_path"] = str(csv_path)
    _emit(args, obj, f"witness_thm{args.theorem}_n{config.n}_k{args.k}.json")
    return 0


def cmd_solve(args) -> int:
    result = exact_A(args.n, args.k, budget=args.budget)
    obj = {
        "n": result.n,
        "k": result.k,
        "A": str(result.A_value),
        "upper_bound_only": result.upper_bound_only,
        "nodes": result.nodes_explored,
        "optimal_config": [_rat_str(v) for v in result.optimal_config.values],
        "minimal_elements": [list(s.indices) for s in result.optimal_family.minimal_elements],
    }
    _emit(args, obj, f"solve_n{args.n}_k{args.k}.json")
    return 0


def cmd_sweep(args) -> int:
    rows = verify_conjecture_range(args.n_lo, args.n_hi, args.k)
    if args.format == "json":
        obj = [
            {
                "n": r.n, "k": r.k, "verdict": r.verdict,
                "lower": str(r.lower), "upper": str(r.upper),
                "A": None if r.a_value is None else str(r.a_value),
                "equals_target": r.equals_target,
            }
            for r in rows
        ]
        _emit(args, obj, f"sweep_k{args.k}.json")
        return 0
    buf = io.StringIO()
    writer = csv.writer(buf)
    writer.writerow(["n", "k", "verdict", "lower", "upper", "A", "equals_target"])
    for r in rows:
        writer.writerow([
            r.n, r.k, r.verdict, r.lower, r.upper,
            "" if r.a_value is None else r.a_value,
            "" if r.equals_target is None else r.equals_target,
        ])
    sys.stdout.write(buf.getvalue())
    if args.out:
        path = Path(args.out) / f"sweep_k{args.k}.csv"
        path.parent.mkdir(parents=True, exist_ok=True)
        path.write_text(buf.getvalue())
    return 0


def _parse_params(pairs: list[str]) -> dict[str, Fraction]:
    out = {}
    for pair in pairs:
        if "=" not in pair:
            raise ValueError(f"expected key=value, got {pair!r}")
        key, _, value = pair.partition("=")
        out[key.strip()] = Fraction(value.strip())
    return out


def cmd_check(args) -> int:
    if args.suite:
        return _run_suite(args)
    params = _parse_params(args.params or [])
    name = args.inequality
    if name == "unimodal_gap_lb":
        report = unimodal_gap_lb(params["p"], params["q"], int(params["m"]))
    elif name == "thm1_threshold":
        report = thm1_threshold_check(int(params["n"]), int(params["k"]))
    elif name == "thm2_stage":
        report = thm2_stage_check(int(params["n"]), int(params["k"]), int(params["p"]))
    elif name == "stage_count":
        report = stage_count_beats_target(int(params["n"]), int(params["k"]), int(params["p"]))
    else:
        print(f"error: unknown inequality {name!r}", file=sys.stderr)
        return 2
    _emit(args, _bound_report_json(report), f"check_{name}.json")
    return 0 if report.holds else 1


def _run_suite(args) -> int:
    n, k = args.n, args.k
    if n is None or k is None:
        print("error: --suite requires --n and --k", file=sys.stderr)
        return 2
    reports = []
    if args.suite == "thm1":
        reports.append(thm1_threshold_check(n, k))
        reports.append(unimodal_gap_lb(Fraction(n), Fraction(3 * k), k - 1))
        reports.append(unimodal_gap_lb(Fraction(n, k), Fraction(k), k - 1))
    else:
        for p in range(1, n // (2 * k) + 1):
            reports.append(thm2_stage_check(n, k, p))
        reports.append(stage_count_beats_target(n, k, 1))
    all_hold = all(r.holds for r in reports)
    obj = {
        "suite": args.suite,
        "n": n,
        "k": k,
        "all_hold": all_hold,
        "reports": [_bound_report_json(r) for r in reports],
    }
    _emit(args, obj, f"check_suite_{args.suite}_n{n}_k{k}.json")
    return 0 if all_hold else 1


def cmd_fbounds(args) -> int:
    fb = f_bound_values(args.k)
    obj = {
        "k": fb.k,
        "old_bound": str(fb.old_bound),
        "new_bound_upper": _rat_str(fb.new_bound),
        "new_bound_float": fb.new_bound_float,
        "new_smaller_than_old": fb.new_smaller_than_old,
    }
    _emit(args, obj, f"fbounds_k{args.k}.json")
    return 0


def cmd_reproduce(args) -> int:
    seed = _resolve_seed(args)
    start = time.time()
    checks = run_reproduction(seed=seed, workers=args.workers)
    all_pass = all(c.status == "pass" for c in checks)
    report = {
        "seed": seed,
        "all_pass": all_pass,
        "checks": [
            {"id": c.id, "status": c.status, "lhs": c.lhs, "rhs": c.rhs}
            for c in checks
        ],
    }
    out_dir = Path(args.out or ".") / "report"
    out_dir.mkdir(parents=True, exist_ok=True)
    report_path = out_dir / "paper.json"
    text = _dump_json(report)
    report_path.write_text(text)
    digest = hashlib.sha256(text.encode()).hexdigest()
    manifest = {
        "command": "reproduce",
        "seed": seed,
        "version": __version__,
        "workers": args.workers,
        "started_at": start,
        "finished_at": time.time(),
        "outputs": {"report/paper.json": digest},
    }
    (out_dir / "manifest.json").write_text(_dump_json(manifest))
    for c in checks:
        sys.stdout.write(f"{c.status.upper():4s} {c.id}: {c.lhs} vs {c.rhs}\n")
    sys.stdout.write(f"{'PASS' if all_pass else 'FAIL'} {len(checks)} checks -> {report_path}\n")
    if not all_pass:
        failing = [c.id for c in checks if c.status == "fail"]
        print(f"failing checks: {', '.join(failing)}", file=sys.stderr)
        return 1
    return 0


def cmd_search(args) -> int:
    seed = _resolve_seed(args)
    count, config = search_upper_bound(args.n, args.k, args.strategy, seed)
    obj = {
        "n": args.n,
        "k": args.k,
        "strategy": args.strategy,
        "count": str(count),
        "config": [_rat_str(v) for v in config.values],
    }
    _emit(args, obj, f"search_n{args.n}_k{args.k}.json")
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="mms",
        description="Exact tools for the minimum number of non-negative k-sums",
    )
    parser.add_argument("--version", action="version", version=__version__)
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--seed", type=int, default=None,
                        help="RNG seed (default: MMS_SEED env or 0)")
    common.add_argument("--workers", type=int, default=1)
    common.add_argument("--budget", type=int, default=1_000_000)
    common.add_argument("--out", type=str, default=None, help="output directory")
    common.add_argument("--format", choices=("json", "csv"), default="json")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("construct", parents=[common],
                       help="write a named configuration plus JSON sidecar")
    p.add_argument("--name", required=True, choices=("star", "mirror", "counterexample"))
    p.add_argument("--n", type=int, default=None)
    p.add_argument("--k", type=int, required=True)
    p.set_defaults(func=cmd_construct)

    p = sub.add_parser("baranyai", parents=[common],
                       help="construct or validate a parallel-class partition")
    p.add_argument("--n", type=int)
    p.add_argument("--k", type=int)
    p.add_argument("--validate", type=str, default=None, metavar="FILE")
    p.set_defaults(func=cmd_baranyai)

    p = sub.add_parser("witness", parents=[common],
                       help="run a certifying extraction on a configuration file")
    p.add_argument("--theorem", type=int, required=True, choices=(1, 2))
    p.add_argument("--config", type=str, required=True)
    p.add_argument("--k", type=int, required=True)
    p.add_argument("--mode", choices=("auto", "explicit", "counted"), default="auto")
    p.add_argument("--sample", type=int, default=1000)
    p.set_defaults(func=cmd_witness)

    p = sub.add_parser("solve", parents=[common], help="exact A(n,k) at desk scale")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--k", type=int, required=True)
    p.set_defaults(func=cmd_solve)

    p = sub.add_parser("sweep", parents=[common],
                       help="per-n verdicts against the C(n-1,k-1) target")
    p.add_argument("--k", type=int, required=True)
    p.add_argument("--n-lo", type=int, required=True)
    p.add_argument("--n-hi", type=int, required=True)
    p.set_defaults(func=cmd_sweep, format="csv")

    p = sub.add_parser("check", parents=[common],
                       help="verify one inequality or a whole chain")
    p.add_argument("--inequality", type=str, default=None,
                   choices=("unimodal_gap_lb", "thm1_threshold", "thm2_stage", "stage_count"))
    p.add_argument("--suite", choices=("thm1", "thm2"), default=None)
    p.add_argument("--params", nargs="*", default=None, metavar="KEY=VALUE")
    p.add_argument("--n", type=int, default=None)
    p.add_argument("--k", type=int, default=None)
    p.set_defaults(func=cmd_check)

    p = sub.add_parser("fbounds", parents=[common],
                       help="compare the classical and improved thresholds")
    p.add_argument("--k", type=int, required=True)
    p.set_defaults(func=cmd_fbounds)

    p = sub.add_parser("search", parents=[common],
                       help="heuristic upper-bound search for A(n,k)")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--k", type=int, required=True)
    p.add_argument("--strategy", choices=("grid", "anneal"), default="grid")
    p.set_defaults(func=cmd_search)

    p = sub.add_parser("reproduce", parents=[common],
                       help="re-derive every headline value and write report/paper.json")
    p.set_defaults(func=cmd_reproduce)

    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except ConfigParseError as exc:
        print(f"error: malformed configuration: {exc}", file=sys.stderr)
        return 3
    except FileNotFoundError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 3
    except (ValueError, NotImplementedError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
