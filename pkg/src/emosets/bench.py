"""Experiment harness: seeded run matrices, rank-sum tests, summaries, plot data.

One optimizer run per (problem, algorithm, population, seed) feeds every
archive size at once through the sink interface, so a 4x4 size matrix costs
four runs per seed instead of sixteen. Each (problem, algorithm, population,
archive, seed) cell persists its record to its own CSV file; re-running a plan
reuses the cells already on disk.

Worker count comes from the EMOSETS_WORKERS environment variable (default: all
CPUs); a value of 1 disables multiprocessing.
"""

from __future__ import annotations

import itertools
import json
import logging
import math
import os
import time
from concurrent.futures import ProcessPoolExecutor, as_completed
from dataclasses import dataclass, field
from pathlib import Path

import numpy as np

from .archive import ScalarizingArchive, extract_candidates, write_set_csv
from .core import normalize
from .indicators import expected_loss, hypervolume_exact, hypervolume_mc
from .moead import MoeadConfig, run
from .problems import analytic_bounds, make_problem
from .scalarize import PBI, TCHEBYCHEFF, lattice_resolution_for_size, simplex_lattice
from .selection import SubsetRequest, select

log = logging.getLogger("emosets")

WORKERS_ENV = "EMOSETS_WORKERS"
HV_REFERENCE_VALUE = 1.1
MC_HV_SAMPLES = 100_000

TABLE_SIZES = {3: (15, 91, 990, 5050), 5: (15, 210, 1001, 5985)}
DEFAULT_EVALUATIONS = {3: 50_000, 5: 200_000}
ALGORITHMS = {"tch": TCHEBYCHEFF, "pbi": PBI}


@dataclass
class ExperimentPlan:
    problems: list[str]
    m: int = 3
    algorithms: list[str] = field(default_factory=lambda: ["tch"])
    population_sizes: list[int] | None = None
    archive_sizes: list[int] | None = None
    selection_methods: list[str] = field(default_factory=lambda: ["distance", "hv"])
    k_values: list[int] = field(default_factory=lambda: [15])
    seeds: list[int] = field(default_factory=lambda: list(range(1, 52)))
    max_evaluations: int | None = None
    budget_scale: float = 1.0
    out_dir: str = "results"
    dump_archives: bool = False

    def resolved(self) -> "ExperimentPlan":
        """The plan with defaults filled in and the budget scale applied."""
        pops = list(self.population_sizes or TABLE_SIZES.get(self.m, ()))
        arcs = list(self.archive_sizes or TABLE_SIZES.get(self.m, ()))
        if not pops or not arcs:
            raise ValueError(f"no default sizes for m={self.m}; specify them explicitly")
        evals = self.max_evaluations or DEFAULT_EVALUATIONS.get(self.m)
        if evals is None:
            raise ValueError(f"no default evaluation budget for m={self.m}")
        if not self.seeds:
            raise ValueError("plan has an empty seed list")
        scale = self.budget_scale
        if scale <= 0:
            raise ValueError("budget scale must be positive")
        if scale != 1.0:
            evals = max(int(round(evals * scale)), max(pops))
            seeds = self.seeds[: max(1, int(round(len(self.seeds) * scale)))]
        else:
            seeds = list(self.seeds)
        for name in self.problems:
            make_problem(name, self.m)
        for algo in self.algorithms:
            if algo not in ALGORITHMS:
                raise ValueError(f"unknown algorithm {algo!r}; expected one of {sorted(ALGORITHMS)}")
        for size in itertools.chain(pops, arcs):
            lattice_resolution_for_size(self.m, size)
        if evals < max(pops):
            raise ValueError("evaluation budget smaller than the largest population")
        for k in self.k_values:
            if k > min(arcs):
                raise ValueError(f"k={k} exceeds the smallest archive size {min(arcs)}")
        return ExperimentPlan(
            problems=list(self.problems),
            m=self.m,
            algorithms=list(self.algorithms),
            population_sizes=pops,
            archive_sizes=arcs,
            selection_methods=list(self.selection_methods),
            k_values=list(self.k_values),
            seeds=seeds,
            max_evaluations=evals,
            budget_scale=1.0,
            out_dir=str(self.out_dir),
            dump_archives=self.dump_archives,
        )

    def to_json(self) -> str:
        return json.dumps(self.__dict__, indent=2, sort_keys=True)

    @staticmethod
    def from_json(text: str) -> "ExperimentPlan":
        return ExperimentPlan(**json.loads(text))


@dataclass
class RunRecord:
    problem: str
    m: int
    algorithm: str
    pop_size: int
    archive_size: int
    seed: int
    evals_used: int
    n_candidates: int
    hv_population: float
    hv_archive: float
    selections: dict[tuple[str, int], tuple[float, float]] = field(default_factory=dict)

    def key(self) -> str:
        return (
            f"{self.problem}_m{self.m}_{self.algorithm}"
            f"_pop{self.pop_size}_arc{self.archive_size}_seed{self.seed}"
        )


def record_columns(methods: list[str], ks: list[int]) -> list[str]:
    cols = [
        "problem",
        "m",
        "algorithm",
        "pop_size",
        "archive_size",
        "seed",
        "evals_used",
        "n_candidates",
        "hv_population",
        "hv_archive",
    ]
    for method in methods:
        for k in ks:
            cols.append(f"hv_sel_{method}_k{k}")
            cols.append(f"loss_sel_{method}_k{k}")
    return cols


def _format_value(v) -> str:
    if isinstance(v, float):
        return f"{v:.17g}"
    return str(v)


def _record_row(rec: RunRecord, methods: list[str], ks: list[int]) -> str:
    vals = [
        rec.problem,
        rec.m,
        rec.algorithm,
        rec.pop_size,
        rec.archive_size,
        rec.seed,
        rec.evals_used,
        rec.n_candidates,
        rec.hv_population,
        rec.hv_archive,
    ]
    for method in methods:
        for k in ks:
            hv, loss = rec.selections.get((method, k), (float("nan"), float("nan")))
            vals.extend([hv, loss])
    return ",".join(_format_value(v) for v in vals)


def _parse_record(path: Path, methods: list[str], ks: list[int]) -> RunRecord:
    lines = path.read_text(encoding="utf-8").strip().splitlines()
    header = lines[0].split(",")
    expected = record_columns(methods, ks)
    if header != expected:
        raise ValueError(f"{path}: stale record columns; delete the file to recompute")
    vals = lines[1].split(",")
    row = dict(zip(header, vals))
    rec = RunRecord(
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
    return rec


def _set_hypervolume(points: np.ndarray, ref: np.ndarray, seed: int) -> float:
    """Exact hypervolume up to 4 objectives, Monte Carlo beyond."""
    if len(ref) <= 4:
        return hypervolume_exact(points, ref)
    estimate, _ = hypervolume_mc(points, ref, MC_HV_SAMPLES, seed)
    return estimate


def _execute_run(payload: dict) -> dict:
    """One optimizer run feeding all archive sizes; returns one record per archive."""
    problem = make_problem(payload["problem"], payload["m"])
    scalarizer = ALGORITHMS[payload["algorithm"]]
    bounds = analytic_bounds(problem)
    ref = np.full(problem.m, HV_REFERENCE_VALUE)
    archives = [
        ScalarizingArchive(simplex_lattice(problem.m, lattice_resolution_for_size(problem.m, size)), scalarizer)
        for size in payload["archive_sizes"]
    ]
    config = MoeadConfig(
        lattice_h=lattice_resolution_for_size(problem.m, payload["pop_size"]),
        max_evaluations=payload["max_evaluations"],
        seed=payload["seed"],
        scalarizer=scalarizer,
    )
    started = time.perf_counter()
    state = run(config, problem, sinks=archives)
    hv_population = _set_hypervolume(normalize(state.population_f, bounds), ref, payload["seed"])

    cells = []
    for size, arc in zip(payload["archive_sizes"], archives):
        cand_f, cand_x = extract_candidates(arc)
        norm_cand = normalize(cand_f, bounds)
        rec = RunRecord(
            problem=payload["problem"],
            m=payload["m"],
            algorithm=payload["algorithm"],
            pop_size=payload["pop_size"],
            archive_size=size,
            seed=payload["seed"],
            evals_used=state.evals_used,
            n_candidates=len(cand_f),
            hv_population=hv_population,
            hv_archive=_set_hypervolume(norm_cand, ref, payload["seed"]),
        )
        for method in payload["methods"]:
            for k in payload["ks"]:
                if k > len(norm_cand):
                    rec.selections[(method, k)] = (float("nan"), float("nan"))
                    continue
                result = select(
                    SubsetRequest(norm_cand, k, method, hv_reference=ref, seed=payload["seed"])
                )
                hv_sel = _set_hypervolume(result.points, ref, payload["seed"])
                loss_sel = expected_loss(result.points, norm_cand)
                rec.selections[(method, k)] = (hv_sel, loss_sel)
        cells.append(rec)
        if payload.get("dump_dir"):
            run_key = (
                f"{payload['problem']}_m{payload['m']}_{payload['algorithm']}"
                f"_pop{payload['pop_size']}_seed{payload['seed']}"
            )
            write_set_csv(
                Path(payload["dump_dir"]) / f"{run_key}_arc{size}.csv",
                arc.slot_objectives(),
                arc.slot_decisions(),
                problem,
                "scalarizing",
            )
    return {"cells": cells, "wall_time": time.perf_counter() - started, "payload": payload}


def worker_count() -> int:
    value = os.environ.get(WORKERS_ENV)
    if value:
        return max(1, int(value))
    return os.cpu_count() or 1


def run_matrix(plan: ExperimentPlan) -> list[RunRecord]:
    """Execute (or load from disk) every cell of the plan; returns all records."""
    plan = plan.resolved()
    out = Path(plan.out_dir)
    records_dir = out / "records"
    records_dir.mkdir(parents=True, exist_ok=True)
    (out / "plan.json").write_text(plan.to_json(), encoding="utf-8")
    _write_schema(out / "records.schema.json", plan)

    methods, ks = plan.selection_methods, plan.k_values
    run_specs = []
    for problem, algo, pop, seed in itertools.product(
        plan.problems, plan.algorithms, plan.population_sizes, plan.seeds
    ):
        payload = {
            "problem": problem,
            "m": plan.m,
            "algorithm": algo,
            "pop_size": pop,
            "seed": seed,
            "archive_sizes": plan.archive_sizes,
            "max_evaluations": plan.max_evaluations,
            "methods": methods,
            "ks": ks,
            "dump_dir": str(out / "archives") if plan.dump_archives else None,
        }
        run_specs.append(payload)
    if plan.dump_archives:
        (out / "archives").mkdir(exist_ok=True)

    def cell_path(payload, size):
        key = (
            f"{payload['problem']}_m{payload['m']}_{payload['algorithm']}"
            f"_pop{payload['pop_size']}_arc{size}_seed{payload['seed']}"
        )
        return records_dir / f"{key}.csv"

    pending = [
        p for p in run_specs if not all(cell_path(p, size).exists() for size in plan.archive_sizes)
    ]
    log.info("run matrix: %d runs total, %d to execute", len(run_specs), len(pending))

    timings = []
    workers = worker_count()
    if pending:
        if workers == 1:
            outcomes = map(_execute_run, pending)
            for outcome in outcomes:
                _persist_outcome(outcome, records_dir, methods, ks, timings)
        else:
            with ProcessPoolExecutor(max_workers=workers) as pool:
                futures = [pool.submit(_execute_run, p) for p in pending]
                for fut in as_completed(futures):
                    _persist_outcome(fut.result(), records_dir, methods, ks, timings)

    records = []
    for payload in run_specs:
        for size in plan.archive_sizes:
            records.append(_parse_record(cell_path(payload, size), methods, ks))
    header = ",".join(record_columns(methods, ks))
    body = "\n".join(_record_row(r, methods, ks) for r in records)
    (out / "records.csv").write_text(header + "\n" + body + "\n", encoding="utf-8")
    if timings:
        with open(out / "timings.csv", "a", encoding="utf-8") as fh:
            for key, wall in timings:
                fh.write(f"{key},{wall:.3f}\n")
    return records


def _persist_outcome(outcome: dict, records_dir: Path, methods, ks, timings) -> None:
    payload = outcome["payload"]
    for rec in outcome["cells"]:
        path = records_dir / f"{rec.key()}.csv"
        text = ",".join(record_columns(methods, ks)) + "\n" + _record_row(rec, methods, ks) + "\n"
        path.write_text(text, encoding="utf-8")
    run_key = (
        f"{payload['problem']}_m{payload['m']}_{payload['algorithm']}"
        f"_pop{payload['pop_size']}_seed{payload['seed']}"
    )
    timings.append((run_key, outcome["wall_time"]))
    log.info("finished %s (%.1fs)", run_key, outcome["wall_time"])


def _write_schema(path: Path, plan: ExperimentPlan) -> None:
    columns = []
    descriptions = {
        "problem": "benchmark problem name",
        "m": "number of objectives",
        "algorithm": "scalarizer used by the optimizer and archives (tch or pbi)",
        "pop_size": "main population size (simplex-lattice size)",
        "archive_size": "scalarizing archive size (simplex-lattice size)",
        "seed": "run seed",
        "evals_used": "solution evaluations actually spent",
        "n_candidates": "non-dominated, duplicate-free archive candidates",
        "hv_population": "hypervolume of the final population, normalized space, ref 1.1",
        "hv_archive": "hypervolume of the archive candidates",
    }
    for name in record_columns(plan.selection_methods, plan.k_values):
        if name in descriptions:
            columns.append({"name": name, "description": descriptions[name]})
        elif name.startswith("hv_sel"):
            columns.append({"name": name, "description": "hypervolume of the selected subset"})
        else:
            columns.append({"name": name, "description": "expected loss of the selected subset vs the candidates"})
    path.write_text(json.dumps({"columns": columns, "float_format": "%.17g"}, indent=2), encoding="utf-8")


# ---------------------------------------------------------------------------
# Rank-sum test
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class WilcoxonResult:
    p_value: float
    reject: bool
    statistic: float  # rank sum of the first sample


def _midranks(pooled: np.ndarray) -> np.ndarray:
    order = np.argsort(pooled, kind="stable")
    ranks = np.empty(len(pooled))
    sorted_vals = pooled[order]
    i = 0
    while i < len(pooled):
        j = i
        while j + 1 < len(pooled) and sorted_vals[j + 1] == sorted_vals[i]:
            j += 1
        ranks[order[i : j + 1]] = 0.5 * (i + j) + 1.0
        i = j + 1
    return ranks


def wilcoxon_rank_sum(xs, ys, alpha: float = 0.05, mode: str = "normal") -> WilcoxonResult:
    """Two-sided rank-sum test.

    The default is the normal approximation with continuity and tie
    corrections; ``mode="exact"`` enumerates all rank assignments instead
    (feasible up to 20 pooled observations). Samples with no variation at all
    give p = 1.
    """
    xs = np.asarray(xs, dtype=float)
    ys = np.asarray(ys, dtype=float)
    n1, n2 = len(xs), len(ys)
    n = n1 + n2
    if n1 == 0 or n2 == 0:
        raise ValueError("both samples must be nonempty")
    pooled = np.concatenate([xs, ys])
    if np.all(pooled == pooled[0]):
        return WilcoxonResult(1.0, False, float(n1 * (n + 1) / 2.0))
    ranks = _midranks(pooled)
    w = float(np.sum(ranks[:n1]))
    mu = n1 * (n + 1) / 2.0

    if mode == "exact":
        if n > 20:
            raise ValueError("exact enumeration supported for at most 20 pooled values")
        threshold = abs(w - mu) - 1e-12
        hits = 0
        total = 0
        for combo in itertools.combinations(range(n), n1):
            total += 1
            if abs(float(np.sum(ranks[list(combo)])) - mu) >= threshold:
                hits += 1
        p = hits / total
        return WilcoxonResult(p, p < alpha, w)
    if mode != "normal":
        raise ValueError(f"unknown mode {mode!r}")

    _, counts = np.unique(pooled, return_counts=True)
    tie_term = float(np.sum(counts.astype(float) ** 3 - counts))
    var = n1 * n2 / 12.0 * ((n + 1) - tie_term / (n * (n - 1)))
    if var <= 0:
        return WilcoxonResult(1.0, False, w)
    diff = w - mu
    z = (diff - 0.5 * np.sign(diff)) / math.sqrt(var)
    p = math.erfc(abs(z) / math.sqrt(2.0))
    return WilcoxonResult(p, p < alpha, w)


# ---------------------------------------------------------------------------
# Summaries and plot data
# ---------------------------------------------------------------------------


def summarize(records: list[RunRecord]) -> dict:
    """Per-cell statistics plus the selected-vs-baseline significance table."""
    if not records:
        raise ValueError("no records to summarize")
    records = sorted(
        records, key=lambda r: (r.problem, r.m, r.algorithm, r.pop_size, r.archive_size, r.seed)
    )
    by_cell: dict[tuple, list[RunRecord]] = {}
    for rec in records:
        by_cell.setdefault((rec.problem, rec.m, rec.algorithm, rec.pop_size, rec.archive_size), []).append(rec)

    def stats(values):
        arr = np.asarray(values, dtype=float)
        arr = arr[~np.isnan(arr)]
        if len(arr) == 0:
            return dict(mean=float("nan"), median=float("nan"), min=float("nan"), max=float("nan"), n=0)
        return dict(
            mean=float(arr.mean()),
            median=float(np.median(arr)),
            min=float(arr.min()),
            max=float(arr.max()),
            n=int(len(arr)),
        )

    summary = []
    significance = []
    population_done = set()
    for (problem, m, algo, pop, arc), cell in sorted(by_cell.items()):
        base = dict(problem=problem, m=m, algorithm=algo, pop_size=pop, archive_size=arc)
        hv_arc = [r.hv_archive for r in cell]
        summary.append({**base, "quantity": "hv_archive", "method": "", "k": "", **stats(hv_arc)})
        if (problem, m, algo, pop) not in population_done:
            population_done.add((problem, m, algo, pop))
            summary.append(
                {
                    **{**base, "archive_size": ""},
                    "quantity": "hv_population",
                    "method": "",
                    "k": "",
                    **stats([r.hv_population for r in cell]),
                }
            )
        hv_pop = [r.hv_population for r in cell]
        for method, k in sorted({key for r in cell for key in r.selections}):
            hv_sel = [r.selections[(method, k)][0] for r in cell]
            loss_sel = [r.selections[(method, k)][1] for r in cell]
            summary.append({**base, "quantity": "hv_selected", "method": method, "k": k, **stats(hv_sel)})
            summary.append({**base, "quantity": "loss_selected", "method": method, "k": k, **stats(loss_sel)})
            clean = [v for v in hv_sel if not math.isnan(v)]
            if len(clean) == len(hv_sel) and len(clean) >= 2:
                for baseline_name, baseline in (("population", hv_pop), ("archive", hv_arc)):
                    res = wilcoxon_rank_sum(clean, baseline)
                    significance.append(
                        {
                            **base,
                            "method": method,
                            "k": k,
                            "baseline": baseline_name,
                            "mean_selected": float(np.mean(clean)),
                            "mean_baseline": float(np.mean(baseline)),
                            "p_value": res.p_value,
                            "reject": res.reject,
                            "selected_better": float(np.mean(clean)) > float(np.mean(baseline)),
                        }
                    )
    return {"summary": summary, "significance": significance}


def write_summary_csv(tables: dict, out_dir) -> list[Path]:
    out = Path(out_dir)
    out.mkdir(parents=True, exist_ok=True)
    written = []
    for name in ("summary", "significance"):
        rows = tables[name]
        path = out / f"{name}.csv"
        if not rows:
            path.write_text("", encoding="utf-8")
            written.append(path)
            continue
        cols = list(rows[0].keys())
        lines = [",".join(cols)]
        for row in rows:
            lines.append(",".join(_format_value(row[c]) for c in cols))
        path.write_text("\n".join(lines) + "\n", encoding="utf-8")
        written.append(path)
    return written


def emit_plot_data(records: list[RunRecord], out_dir, render_figures: bool = True) -> list[Path]:
    """Per-panel series files, per-run scatter files, and (optionally) figures.

    Panel files hold one row per population size: the mean final-population
    hypervolume followed by one column per archive size. Scatter files hold
    per-seed values for box-plot style comparisons.
    """
    out = Path(out_dir)
    if not records:
        log.warning("no records; nothing to plot")
        return []
    out.mkdir(parents=True, exist_ok=True)
    written = []
    records = sorted(
        records, key=lambda r: (r.problem, r.m, r.algorithm, r.pop_size, r.archive_size, r.seed)
    )
    panels: dict[tuple, list[RunRecord]] = {}
    for rec in records:
        panels.setdefault((rec.problem, rec.m, rec.algorithm), []).append(rec)

    for (problem, m, algo), recs in sorted(panels.items()):
        pops = sorted({r.pop_size for r in recs})
        arcs = sorted({r.archive_size for r in recs})
        rows = []
        for pop in pops:
            sub = [r for r in recs if r.pop_size == pop]
            row = [float(pop), float(np.mean([r.hv_population for r in sub if r.archive_size == arcs[0]]))]
            for arc in arcs:
                row.append(float(np.mean([r.hv_archive for r in sub if r.archive_size == arc])))
            rows.append(row)
        path = out / f"panel_{problem}_m{m}_{algo}.dat"
        header = "# pop_size hv_population " + " ".join(f"hv_archive_{a}" for a in arcs)
        lines = [header] + [" ".join(f"{v:.17g}" for v in row) for row in rows]
        path.write_text("\n".join(lines) + "\n", encoding="utf-8")
        written.append(path)
        if render_figures:
            written.append(_render_panel(path, problem, m, algo, pops, arcs, rows, out))

        for pop, arc in itertools.product(pops, arcs):
            sub = sorted(
                (r for r in recs if r.pop_size == pop and r.archive_size == arc), key=lambda r: r.seed
            )
            if not sub or not sub[0].selections:
                continue
            keys = sorted(sub[0].selections)
            scatter = out / f"scatter_{problem}_m{m}_{algo}_pop{pop}_arc{arc}.dat"
            cols = ["seed", "hv_population", "hv_archive"] + [
                f"hv_sel_{method}_k{k}" for method, k in keys
            ]
            lines = ["# " + " ".join(cols)]
            for r in sub:
                vals = [float(r.seed), r.hv_population, r.hv_archive] + [
                    r.selections[key][0] for key in keys
                ]
                lines.append(" ".join(f"{v:.17g}" for v in vals))
            scatter.write_text("\n".join(lines) + "\n", encoding="utf-8")
            written.append(scatter)
            if render_figures:
                written.append(_render_scatter(scatter, problem, m, algo, pop, arc, keys, sub, out))
    return written


def _render_panel(data_path, problem, m, algo, pops, arcs, rows, out: Path) -> Path:
    import matplotlib

    matplotlib.use("Agg")
    import matplotlib.pyplot as plt
    from matplotlib import ticker

    arr = np.asarray(rows)
    fig, ax = plt.subplots(figsize=(5.5, 4.0))
    ax.plot(arr[:, 0], arr[:, 1], "s-", label="population")
    for j, arc in enumerate(arcs):
        ax.plot(arr[:, 0], arr[:, 2 + j], "o-", label=f"archive {arc}")
    ax.set_xscale("log")
    ax.set_xticks(pops)
    ax.get_xaxis().set_major_formatter(ticker.ScalarFormatter())
    ax.set_xlabel("population size")
    ax.set_ylabel("mean hypervolume")
    ax.set_title(f"{problem} (m={m}, {algo})")
    ax.legend(fontsize=8)
    fig.tight_layout()
    path = out / (data_path.stem + ".png")
    fig.savefig(path, dpi=150)
    plt.close(fig)
    return path


def _render_scatter(data_path, problem, m, algo, pop, arc, keys, sub, out: Path) -> Path:
    import matplotlib

    matplotlib.use("Agg")
    import matplotlib.pyplot as plt

    series = [[r.hv_population for r in sub], [r.hv_archive for r in sub]]
    labels = ["population", "archive"]
    for key in keys:
        vals = [r.selections[key][0] for r in sub]
        if not any(math.isnan(v) for v in vals):
            series.append(vals)
            labels.append(f"sel {key[0]} k={key[1]}")
    fig, ax = plt.subplots(figsize=(5.5, 4.0))
    ax.boxplot(series)
    ax.set_xticklabels(labels)
    ax.set_ylabel("hypervolume")
    ax.set_title(f"{problem} m={m} {algo} pop={pop} arc={arc}")
    ax.tick_params(axis="x", rotation=20)
    fig.tight_layout()
    path = out / (data_path.stem + ".png")
    fig.savefig(path, dpi=150)
    plt.close(fig)
    return path
