"""Multi-objective optimization with three solution sets.

A decomposition-based optimizer (MOEA/D with Tchebycheff or PBI scalarizing),
scalarizing external archives of arbitrary size fed by the evaluation stream,
subset selection of the final solution set, quality indicators, and a seeded
benchmark harness.
"""

from .archive import (
    ScalarizingArchive,
    UnboundedArchive,
    extract_candidates,
    init_scalarizing_archive,
    read_set_csv,
    write_set_csv,
)
from .core import NormalizationBounds, Solution, denormalize, dominates, nondominated_filter, normalize
from .indicators import (
    IndicatorContext,
    expected_loss,
    hypervolume_exact,
    hypervolume_mc,
    igd,
    igd_plus,
    loss_pair,
    subset_loss,
)
from .moead import MoeadConfig, MoeadState, build_neighborhoods, polynomial_mutation, run, sbx_crossover
from .problems import ProblemSpec, analytic_bounds, evaluate, make_problem, sample_pareto_reference
from .scalarize import (
    PBI,
    TCHEBYCHEFF,
    ScalarizerKind,
    pbi,
    simplex_lattice,
    tchebycheff,
    update_ideal,
)
from .selection import SubsetRequest, distance_greedy, exact_subset_oracle, hv_greedy, loss_greedy, select

__version__ = "0.1.0"

__all__ = [
    "NormalizationBounds",
    "Solution",
    "dominates",
    "nondominated_filter",
    "normalize",
    "denormalize",
    "ScalarizerKind",
    "TCHEBYCHEFF",
    "PBI",
    "simplex_lattice",
    "tchebycheff",
    "pbi",
    "update_ideal",
    "ProblemSpec",
    "make_problem",
    "evaluate",
    "analytic_bounds",
    "sample_pareto_reference",
    "MoeadConfig",
    "MoeadState",
    "build_neighborhoods",
    "sbx_crossover",
    "polynomial_mutation",
    "run",
    "ScalarizingArchive",
    "UnboundedArchive",
    "init_scalarizing_archive",
    "extract_candidates",
    "write_set_csv",
    "read_set_csv",
    "IndicatorContext",
    "loss_pair",
    "subset_loss",
    "expected_loss",
    "igd",
    "igd_plus",
    "hypervolume_exact",
    "hypervolume_mc",
    "SubsetRequest",
    "select",
    "distance_greedy",
    "hv_greedy",
    "loss_greedy",
    "exact_subset_oracle",
]
