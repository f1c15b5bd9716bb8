"""Populate the acceptance-cache record directories (resumable, cell-cached)."""
import logging
import sys

from emosets.bench import ExperimentPlan, run_matrix

logging.basicConfig(level=logging.INFO, format="%(message)s")

SEEDS = [int(s) for s in sys.argv[2].split(":")] if len(sys.argv) > 2 else [1, 51]
seeds = list(range(SEEDS[0], SEEDS[1] + 1))
which = sys.argv[1] if len(sys.argv) > 1 else "all"

PLANS = {
    "dtlz1": ExperimentPlan(
        problems=["DTLZ1"], m=3, algorithms=["tch"],
        population_sizes=[15, 91, 990, 5050], archive_sizes=[15, 91, 990, 5050],
        selection_methods=["distance", "hv"], k_values=[15],
        seeds=seeds, max_evaluations=50_000, out_dir="/root/pkg/.acceptance/dtlz1",
    ),
    "dtlz4": ExperimentPlan(
        problems=["DTLZ4"], m=3, algorithms=["tch"],
        population_sizes=[15, 5050], archive_sizes=[15, 5050],
        selection_methods=["distance", "hv"], k_values=[15],
        seeds=seeds, max_evaluations=50_000, out_dir="/root/pkg/.acceptance/dtlz4",
    ),
    "dtlz3": ExperimentPlan(
        problems=["DTLZ3"], m=3, algorithms=["tch"],
        population_sizes=[15, 5050], archive_sizes=[15, 91, 990, 5050],
        selection_methods=[], k_values=[],
        seeds=seeds, max_evaluations=50_000, out_dir="/root/pkg/.acceptance/dtlz3",
    ),
}

for name, plan in PLANS.items():
    if which not in ("all", name):
        continue
    records = run_matrix(plan)
    print(f"{name}: {len(records)} records ready")
