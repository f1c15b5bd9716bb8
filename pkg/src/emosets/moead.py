"""Decomposition-based evolutionary loop emitting every evaluated solution to sinks.

A "sink" is anything with ``offer(solution)``; sinks with an
``on_initialized(solutions)`` method additionally receive the evaluated
initial population as one batch before the generational loop starts. The run
emits every evaluated solution exactly once.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .core import Solution
from .problems import ProblemSpec, evaluate
from .scalarize import TCHEBYCHEFF, ZERO_WEIGHT_FLOOR, ScalarizerKind, simplex_lattice

# Neighborhood sizes conventionally paired with the benchmark population sizes.
_NEIGHBORHOOD_BY_POPULATION = {15: 15, 91: 20, 210: 20, 990: 200, 1001: 200, 5050: 1000, 5985: 1000}


def default_neighborhood_size(population_size: int) -> int:
    return _NEIGHBORHOOD_BY_POPULATION.get(population_size, min(20, population_size))


@dataclass
class MoeadConfig:
    lattice_h: int
    max_evaluations: int
    seed: int = 1
    neighborhood: int | None = None  # None -> default for the population size
    scalarizer: ScalarizerKind = TCHEBYCHEFF
    sbx_eta: float = 30.0
    sbx_prob: float = 1.0
    pm_eta: float = 20.0
    pm_prob: float | None = None  # None -> 1 / n_var
    # Max residents one child may replace; None removes the cap. With large
    # neighborhoods an uncapped child takes over hundreds of slots at once,
    # which collapses diversity far faster than the standard implementations.
    replacement_cap: int | None = 10


@dataclass
class MoeadState:
    weights: np.ndarray
    population_x: np.ndarray
    population_f: np.ndarray
    z: np.ndarray
    neighborhoods: np.ndarray
    evals_used: int

    def population_solutions(self) -> list[Solution]:
        return [
            Solution(self.population_x[i].copy(), self.population_f[i].copy(), -1)
            for i in range(len(self.population_x))
        ]


def build_neighborhoods(weights: np.ndarray, t: int) -> np.ndarray:
    """Indices of the t nearest weights (Euclidean) per weight, self included.

    Ties are broken by lower index, so each row starts with its own index.
    """
    weights = np.asarray(weights, dtype=float)
    n = len(weights)
    if not 1 <= t <= n:
        raise ValueError(f"neighborhood size {t} out of range for {n} weights")
    out = np.empty((n, t), dtype=np.intp)
    block = 256
    for start in range(0, n, block):
        blk = weights[start : start + block]
        d = np.linalg.norm(blk[:, None, :] - weights[None, :, :], axis=2)
        order = np.argsort(d, axis=1, kind="stable")
        out[start : start + block] = order[:, :t]
    return out


def sbx_crossover(p1, p2, lower, upper, eta: float, prob: float, rng) -> tuple[np.ndarray, np.ndarray]:
    """Simulated binary crossover in its canonical form.

    Once the operator fires (probability ``prob``), each variable mixes with
    probability 0.5; mixed variables are additionally swapped between the two
    children with probability 0.5, which is what lets children combine genes
    of distant parents. Children are clipped to the box bounds.
    """
    p1 = np.asarray(p1, dtype=float)
    p2 = np.asarray(p2, dtype=float)
    if rng.random() > prob:
        return p1.copy(), p2.copy()
    mix = rng.random(len(p1)) <= 0.5
    u = rng.random(len(p1))
    swap = rng.random(len(p1)) <= 0.5
    base = np.where(u <= 0.5, 2.0 * u, 0.5 / (1.0 - u))
    beta = base ** (1.0 / (eta + 1.0))
    near1 = 0.5 * ((1.0 + beta) * p1 + (1.0 - beta) * p2)
    near2 = 0.5 * ((1.0 - beta) * p1 + (1.0 + beta) * p2)
    c1 = np.where(mix, np.where(swap, near2, near1), p1)
    c2 = np.where(mix, np.where(swap, near1, near2), p2)
    np.clip(c1, lower, upper, out=c1)
    np.clip(c2, lower, upper, out=c2)
    return c1, c2


def polynomial_mutation(x, lower, upper, eta: float, prob: float, rng) -> np.ndarray:
    """Bounded polynomial mutation applied independently per variable."""
    x = np.asarray(x, dtype=float)
    y = x.copy()
    do = rng.random(len(x)) < prob
    u_all = rng.random(len(x))
    idx = np.flatnonzero(do)
    if len(idx) == 0:
        return y
    lo = np.broadcast_to(lower, x.shape)
    hi = np.broadcast_to(upper, x.shape)
    exponent = 1.0 / (eta + 1.0)
    for i in idx:
        span = hi[i] - lo[i]
        u = u_all[i]
        if u < 0.5:
            frac = 1.0 - (y[i] - lo[i]) / span
            dq = (2.0 * u + (1.0 - 2.0 * u) * frac ** (eta + 1.0)) ** exponent - 1.0
        else:
            frac = 1.0 - (hi[i] - y[i]) / span
            dq = 1.0 - (2.0 * (1.0 - u) + 2.0 * (u - 0.5) * frac ** (eta + 1.0)) ** exponent
        y[i] = min(max(y[i] + dq * span, lo[i]), hi[i])
    return y


def run(config: MoeadConfig, problem: ProblemSpec, sinks=(), on_generation=None) -> MoeadState:
    """Run the decomposition loop until the evaluation budget is spent.

    Each generation evaluates exactly one child per subproblem; the budget
    check happens after a full sweep, so the run may overshoot by at most
    population_size - 1 evaluations. ``on_generation`` (if given) is called
    with a view of the live state after initialization and after every
    generation; copy anything you keep.
    """
    weights = simplex_lattice(problem.m, config.lattice_h)
    n = len(weights)
    if config.max_evaluations < n:
        raise ValueError("evaluation budget smaller than the population size")
    t = config.neighborhood if config.neighborhood is not None else default_neighborhood_size(n)
    if not 2 <= t <= n:
        raise ValueError(f"neighborhood size {t} out of range [2, {n}]")

    rng = np.random.default_rng(config.seed)
    lower, upper = problem.lower, problem.upper
    pm_prob = config.pm_prob if config.pm_prob is not None else 1.0 / problem.n_var

    pop_x = lower + rng.random((n, problem.n_var)) * (upper - lower)
    pop_f = np.array([evaluate(problem, x) for x in pop_x])
    z = pop_f.min(axis=0)
    evals = n

    initial = [Solution(pop_x[i].copy(), pop_f[i].copy(), i) for i in range(n)]
    for sink in sinks:
        hook = getattr(sink, "on_initialized", None)
        if hook is not None:
            hook(initial)
        else:
            for s in initial:
                sink.offer(s)

    neighborhoods = build_neighborhoods(weights, t)
    kind = config.scalarizer
    use_tch = kind.kind == "tchebycheff"
    theta = kind.theta
    m = problem.m
    if use_tch:
        wfT = np.ascontiguousarray(np.maximum(weights, ZERO_WEIGHT_FLOOR).T)  # (m, n)
    else:
        whatT = np.ascontiguousarray((weights / np.linalg.norm(weights, axis=1)[:, None]).T)
    pop_fT = np.ascontiguousarray(pop_f.T)  # kept in sync with pop_f

    def resident_scores() -> np.ndarray:
        """g(resident_j | w_j, z) for every subproblem under the current z."""
        g = np.empty(n)
        tmp = np.empty(n)
        if use_tch:
            np.subtract(pop_fT[0], z[0], out=tmp)
            np.abs(tmp, out=tmp)
            np.multiply(tmp, wfT[0], out=g)
            for j in range(1, m):
                np.subtract(pop_fT[j], z[j], out=tmp)
                np.abs(tmp, out=tmp)
                np.multiply(tmp, wfT[j], out=tmp)
                np.maximum(g, tmp, out=g)
            return g
        diff = pop_fT - z[:, None]
        d1 = np.abs(np.einsum("ja,ja->a", whatT, diff))
        resid = diff - d1[None, :] * whatT
        return d1 + theta * np.sqrt(np.einsum("ja,ja->a", resid, resid))

    def child_scores(nb: np.ndarray, child_f: np.ndarray) -> np.ndarray:
        """g(child | w_j, z) over one neighborhood."""
        if use_tch:
            d = np.abs(child_f - z)
            g = wfT[0].take(nb) * d[0]
            for j in range(1, m):
                np.maximum(g, wfT[j].take(nb) * d[j], out=g)
            return g
        d = child_f - z
        acc = whatT[0].take(nb) * d[0]
        for j in range(1, m):
            acc += whatT[j].take(nb) * d[j]
        np.abs(acc, out=acc)
        resid = np.zeros(len(nb))
        for j in range(m):
            tmp = d[j] - acc * whatT[j].take(nb)
            resid += tmp * tmp
        return acc + theta * np.sqrt(resid)

    g_resident = resident_scores()
    cap = config.replacement_cap
    if cap is not None and cap < 1:
        raise ValueError("replacement cap must be at least 1")

    if on_generation is not None:
        on_generation(MoeadState(weights, pop_x, pop_f, z, neighborhoods, evals))

    while evals < config.max_evaluations:
        for i in range(n):
            nb = neighborhoods[i]
            a = rng.integers(t)
            b = rng.integers(t)
            while b == a:
                b = rng.integers(t)
            child, _ = sbx_crossover(
                pop_x[nb[a]], pop_x[nb[b]], lower, upper, config.sbx_eta, config.sbx_prob, rng
            )
            child = polynomial_mutation(child, lower, upper, config.pm_eta, pm_prob, rng)
            child_f = evaluate(problem, child)
            if np.any(child_f < z):
                np.minimum(z, child_f, out=z)
                g_resident = resident_scores()  # resident scores shift with z
            sol = Solution(child, child_f, evals)
            evals += 1
            for sink in sinks:
                sink.offer(sol)
            g_child = child_scores(nb, child_f)
            mask = g_child < g_resident[nb]
            n_better = int(np.count_nonzero(mask))
            if n_better:
                if cap is not None and n_better > cap:
                    # Replace the first `cap` improvable neighbors in random order.
                    perm = rng.permutation(t)
                    local = perm[mask[perm]][:cap]
                else:
                    local = np.flatnonzero(mask)
                better = nb[local]
                pop_x[better] = child
                pop_f[better] = child_f
                pop_fT[:, better] = child_f[:, None]
                g_resident[better] = g_child[local]
        if on_generation is not None:
            on_generation(MoeadState(weights, pop_x, pop_f, z, neighborhoods, evals))

    return MoeadState(weights, pop_x, pop_f, z, neighborhoods, evals)
