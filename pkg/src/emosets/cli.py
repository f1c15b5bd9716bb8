"""Command-line interface: run, select, indicate, summarize, plotdata."""

from __future__ import annotations

import argparse
import json
import logging
import sys
from pathlib import Path

import numpy as np

from . import bench
from .archive import candidate_rows, read_set_csv, write_set_csv
from .core import normalize
from .indicators import expected_loss, hypervolume_exact, hypervolume_mc, igd, igd_plus
from .problems import analytic_bounds, make_problem
from .selection import SubsetRequest, select


def _parse_int_list(text: str) -> list[int]:
    """Parse "15,91" or a range like "1:51" (inclusive)."""
    if ":" in text:
        lo, hi = text.split(":")
        return list(range(int(lo), int(hi) + 1))
    return [int(v) for v in text.split(",") if v]


def _plan_from_args(args) -> bench.ExperimentPlan:
    if args.plan:
        plan = bench.ExperimentPlan.from_json(Path(args.plan).read_text(encoding="utf-8"))
    else:
        plan = bench.ExperimentPlan(problems=[])
    if args.problems:
        plan.problems = [p.strip() for p in args.problems.split(",") if p.strip()]
    if args.m is not None:
        plan.m = args.m
    if args.algos:
        plan.algorithms = [a.strip() for a in args.algos.split(",") if a.strip()]
    if args.pops:
        plan.population_sizes = _parse_int_list(args.pops)
    if args.archives:
        plan.archive_sizes = _parse_int_list(args.archives)
    if args.seeds:
        plan.seeds = _parse_int_list(args.seeds)
    if args.methods:
        plan.selection_methods = [m.strip() for m in args.methods.split(",") if m.strip()]
    if args.k:
        plan.k_values = _parse_int_list(args.k)
    if args.evaluations is not None:
        plan.max_evaluations = args.evaluations
    if args.budget_scale is not None:
        plan.budget_scale = args.budget_scale
    if args.out:
        plan.out_dir = args.out
    if args.dump_archives:
        plan.dump_archives = True
    if not plan.problems:
        raise SystemExit("no problems given (use --problems or a plan file)")
    return plan


def cmd_run(args) -> int:
    plan = _plan_from_args(args)
    records = bench.run_matrix(plan)
    tables = bench.summarize(records)
    bench.write_summary_csv(tables, plan.out_dir)
    print(f"{len(records)} records in {plan.out_dir}")
    return 0


def cmd_select(args) -> int:
    meta, F, X = read_set_csv(args.archive)
    problem = make_problem(meta["problem"], meta["m"])
    bounds = analytic_bounds(problem)
    ref = np.full(problem.m, args.ref)
    # Candidate cleanup in raw units; normalization preserves the lexicographic order.
    F, X = candidate_rows(F, X)
    norm = normalize(F, bounds)
    req = SubsetRequest(norm, args.k, args.method, hv_reference=ref, seed=args.seed)
    result = select(req)
    out = Path(args.out)
    write_set_csv(out, F[result.indices], X[result.indices] if X is not None else None, problem, "selected")
    sidecar = {
        "method": args.method,
        "k": args.k,
        "seed": args.seed,
        "hv_reference": args.ref,
        "score": result.score,
        "tie_breaks": result.tie_breaks,
        "source": str(args.archive),
        "n_candidates": int(len(F)),
    }
    out.with_suffix(".json").write_text(json.dumps(sidecar, indent=2), encoding="utf-8")
    print(f"selected {args.k} of {len(F)} candidates -> {out}")
    return 0


def cmd_indicate(args) -> int:
    meta, F, _ = read_set_csv(args.set)
    problem = make_problem(meta["problem"], meta["m"])
    bounds = analytic_bounds(problem)
    norm = normalize(F, bounds)
    ref = np.full(problem.m, args.ref)
    values = {}
    if problem.m <= 4:
        values["hypervolume"] = hypervolume_exact(norm, ref)
    else:
        est, err = hypervolume_mc(norm, ref, args.mc_samples, args.seed)
        values["hypervolume"] = est
        values["hypervolume_stderr"] = err
    if args.reference_set:
        _, R, _ = read_set_csv(args.reference_set)
        norm_ref = normalize(R, bounds)
        values["igd"] = igd(norm, norm_ref)
        values["igd_plus"] = igd_plus(norm, norm_ref)
        values["expected_loss"] = expected_loss(norm, norm_ref)
    for name, value in values.items():
        print(f"{name}={value:.17g}")
    return 0


def cmd_summarize(args) -> int:
    records = _load_records(args.records)
    tables = bench.summarize(records)
    paths = bench.write_summary_csv(tables, args.out)
    print("\n".join(str(p) for p in paths))
    return 0


def cmd_plotdata(args) -> int:
    records = _load_records(args.records)
    written = bench.emit_plot_data(records, args.out, render_figures=not args.no_figures)
    print(f"{len(written)} files in {args.out}")
    return 0


def _load_records(path) -> list[bench.RunRecord]:
    text = Path(path).read_text(encoding="utf-8").strip().splitlines()
    header = text[0].split(",")
    sel_cols = [c for c in header if c.startswith("hv_sel_")]
    methods = []
    ks = []
    for col in sel_cols:
        tail = col[len("hv_sel_") :]
        method, k = tail.rsplit("_k", 1)
        if method not in methods:
            methods.append(method)
        if int(k) not in ks:
            ks.append(int(k))
    records = []
    for line in text[1:]:
        row = dict(zip(header, line.split(",")))
        rec = bench.RunRecord(
            problem=row["problem"],
            m=int(row["m"]),
            algorithm=row["algorithm"],
            pop_size=int(row["pop_size"]),
            archive_size=int(row["archive_size"]),
            seed=int(row["seed"]),
            evals_used=int(row["evals_used"]),
            n_candidates=int(row["n_candidates"]),
            hv_population=float(row["hv_population"]),
            hv_archive=float(row["hv_archive"]),
        )
        for method in methods:
            for k in ks:
                rec.selections[(method, k)] = (
                    float(row[f"hv_sel_{method}_k{k}"]),
                    float(row[f"loss_sel_{method}_k{k}"]),
                )
        records.append(rec)
    return records


def main(argv=None) -> int:
    parser = argparse.ArgumentParser(prog="emosets", description=__doc__)
    sub = parser.add_subparsers(dest="command", required=True)

    p_run = sub.add_parser("run", help="execute a population x archive experiment matrix")
    p_run.add_argument("--plan", help="JSON plan file; flags override its fields")
    p_run.add_argument("--problems", help="comma-separated problem names, e.g. DTLZ1,WFG4")
    p_run.add_argument("--m", type=int, help="number of objectives")
    p_run.add_argument("--algos", help="comma-separated: tch,pbi")
    p_run.add_argument("--pops", help="population sizes, e.g. 15,91,990,5050")
    p_run.add_argument("--archives", help="archive sizes")
    p_run.add_argument("--seeds", help="comma list or inclusive range like 1:51")
    p_run.add_argument("--methods", help="selection methods: distance,hv,loss")
    p_run.add_argument("--k", help="subset sizes, comma-separated")
    p_run.add_argument("--evaluations", type=int, help="evaluation budget per run")
    p_run.add_argument("--budget-scale", type=float, help="scale budgets and seed count")
    p_run.add_argument("--out", help="output directory")
    p_run.add_argument("--dump-archives", action="store_true", help="write final archive CSVs")
    p_run.set_defaults(func=cmd_run)

    p_sel = sub.add_parser("select", help="select a subset from an archive CSV")
    p_sel.add_argument("--archive", required=True)
    p_sel.add_argument("--method", required=True, choices=["distance", "hv", "loss"])
    p_sel.add_argument("--k", type=int, required=True)
    p_sel.add_argument("--seed", type=int, default=0)
    p_sel.add_argument("--ref", type=float, default=1.1, help="hypervolume reference per axis")
    p_sel.add_argument("--out", required=True)
    p_sel.set_defaults(func=cmd_select)

    p_ind = sub.add_parser("indicate", help="indicator values of a set CSV")
    p_ind.add_argument("--set", required=True)
    p_ind.add_argument("--reference-set")
    p_ind.add_argument("--ref", type=float, default=1.1)
    p_ind.add_argument("--mc-samples", type=int, default=bench.MC_HV_SAMPLES)
    p_ind.add_argument("--seed", type=int, default=0)
    p_ind.set_defaults(func=cmd_indicate)

    p_sum = sub.add_parser("summarize", help="summary tables from a records CSV")
    p_sum.add_argument("--records", required=True)
    p_sum.add_argument("--out", required=True)
    p_sum.set_defaults(func=cmd_summarize)

    p_plot = sub.add_parser("plotdata", help="plot-ready data files and figures")
    p_plot.add_argument("--records", required=True)
    p_plot.add_argument("--out", required=True)
    p_plot.add_argument("--no-figures", action="store_true")
    p_plot.set_defaults(func=cmd_plotdata)

    args = parser.parse_args(argv)
    logging.basicConfig(level=logging.INFO, format="%(message)s", stream=sys.stderr)
    return args.func(args)


if __name__ == "__main__":
    raise SystemExit(main())
