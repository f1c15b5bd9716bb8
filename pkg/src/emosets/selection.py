"""Final-solution-set selection from a candidate set of non-dominated points.

Three greedy methods (max-min distance, hypervolume contribution, expected
loss) plus an exhaustive oracle for small instances. All methods operate on
the canonical lexicographic ordering of the candidate set; every tie is broken
toward the lower candidate index, and each tie event is recorded so a report
can explain how the subset came about.
"""

from __future__ import annotations

import heapq
import itertools
from dataclasses import dataclass, field
from math import comb

import numpy as np

from .indicators import expected_loss, hypervolume_contribution, hypervolume_exact

MC_CONTRIBUTION_SAMPLES = 100_000


@dataclass(frozen=True)
class SubsetRequest:
    """What to select: k points from S by one of the greedy criteria.

    ``points`` should be mutually non-dominated vectors in normalized space.
    ``seed`` picks the random extreme for distance selection and drives the
    Monte Carlo sampling that hypervolume selection uses beyond 4 objectives.
    """

    points: np.ndarray
    k: int
    method: str  # "distance" | "hv" | "loss"
    hv_reference: np.ndarray | None = None
    seed: int = 0
    mc_samples: int = MC_CONTRIBUTION_SAMPLES

    def __post_init__(self):
        pts = canonical_order(np.atleast_2d(np.asarray(self.points, dtype=float)))
        object.__setattr__(self, "points", pts)
        if self.method not in ("distance", "hv", "loss"):
            raise ValueError(f"unknown selection method {self.method!r}")
        if not 1 <= self.k <= len(pts):
            raise ValueError(f"k={self.k} out of range for {len(pts)} candidates")
        if self.method == "hv":
            if self.hv_reference is None:
                raise ValueError("hypervolume selection needs a reference point")
            object.__setattr__(self, "hv_reference", np.asarray(self.hv_reference, dtype=float))


@dataclass
class SelectionResult:
    indices: np.ndarray  # positions in the canonical ordering of S
    points: np.ndarray
    score: float  # final value of the method's criterion
    tie_breaks: list[dict] = field(default_factory=list)


def canonical_order(points: np.ndarray) -> np.ndarray:
    """Candidates sorted lexicographically by objective values."""
    pts = np.atleast_2d(np.asarray(points, dtype=float))
    return pts[np.lexsort(pts.T[::-1])]


def select(req: SubsetRequest) -> SelectionResult:
    if req.method == "distance":
        return distance_greedy(req)
    if req.method == "hv":
        return hv_greedy(req)
    return loss_greedy(req)


def _record_tie(events: list[dict], step: int, chosen: int, scores: np.ndarray, score: float) -> None:
    n_tied = int(np.count_nonzero(scores == score))
    if n_tied > 1:
        events.append({"step": step, "chosen": chosen, "tied": n_tied})


def distance_greedy(req: SubsetRequest) -> SelectionResult:
    """Seed with a random extreme, then repeatedly add the candidate farthest
    from the already-selected set (Euclidean, max-min)."""
    S = req.points
    n, m = S.shape
    extremes = [int(np.argmin(S[:, j])) for j in range(m)]
    rng = np.random.default_rng(req.seed)
    first = extremes[int(rng.integers(m))]
    selected = [first]
    ties: list[dict] = []
    dist = np.linalg.norm(S - S[first], axis=1)
    dist[first] = -np.inf
    last_score = 0.0
    for step in range(1, req.k):
        pick = int(np.argmax(dist))
        last_score = float(dist[pick])
        _record_tie(ties, step, pick, dist, dist[pick])
        selected.append(pick)
        dist = np.minimum(dist, np.linalg.norm(S - S[pick], axis=1))
        dist[pick] = -np.inf
    idx = np.array(selected, dtype=np.intp)
    return SelectionResult(idx, S[idx], last_score, ties)


def hv_greedy(req: SubsetRequest) -> SelectionResult:
    """Repeatedly add the candidate with the largest hypervolume contribution.

    Contributions are exact up to 4 objectives; beyond that they are counted
    against a fixed Monte Carlo sample (seeded, shared by all steps). A lazy
    priority queue skips candidates whose stale upper bound cannot win, which
    does not change the selection because contributions only shrink.
    """
    S = req.points
    ref = req.hv_reference
    n, m = S.shape
    if m >= 5:
        return _hv_greedy_mc(req)
    selected: list[int] = []
    sel_points = np.empty((0, m))
    ties: list[dict] = []
    gains = np.prod(np.maximum(ref - S, 0.0), axis=1)
    heap = [(-float(gains[i]), i, 0) for i in range(n)]
    heapq.heapify(heap)
    total = 0.0
    for step in range(req.k):
        while True:
            neg_gain, i, stamp = heapq.heappop(heap)
            if stamp == len(selected):
                break
            gain = hypervolume_contribution(S[i], sel_points, ref)
            heapq.heappush(heap, (-gain, i, len(selected)))
        gain = -neg_gain
        # A fresh pop is the argmax; count exact ties among other fresh entries.
        tied = [entry for entry in heap if entry[2] == len(selected) and entry[0] == neg_gain]
        if tied:
            ties.append({"step": step, "chosen": i, "tied": len(tied) + 1})
        selected.append(i)
        sel_points = np.vstack([sel_points, S[i][None, :]])
        total += gain
    idx = np.array(selected, dtype=np.intp)
    return SelectionResult(idx, S[idx], total, ties)


def _hv_greedy_mc(req: SubsetRequest) -> SelectionResult:
    S = req.points
    ref = req.hv_reference
    n, m = S.shape
    rng = np.random.default_rng(req.seed)
    lower = S.min(axis=0)
    span = ref - lower
    cell = float(np.prod(span)) / req.mc_samples
    samples = lower + rng.random((req.mc_samples, m)) * span
    alive = np.ones(req.mc_samples, dtype=bool)
    selected: list[int] = []
    ties: list[dict] = []
    covered = 0
    for step in range(req.k):
        counts = np.zeros(n, dtype=np.int64)
        live = samples[alive]
        for start in range(0, n, 64):
            blk = S[start : start + 64]
            dom = np.all(live[:, None, :] >= blk[None, :, :], axis=-1)
            counts[start : start + 64] = dom.sum(axis=0)
        counts[selected] = -1
        pick = int(np.argmax(counts))
        _record_tie(ties, step, pick, counts.astype(float), float(counts[pick]))
        selected.append(pick)
        now_covered = np.all(samples[alive] >= S[pick], axis=-1)
        idx_alive = np.flatnonzero(alive)
        alive[idx_alive[now_covered]] = False
        covered += int(np.count_nonzero(now_covered))
    idx = np.array(selected, dtype=np.intp)
    return SelectionResult(idx, S[idx], covered * cell, ties)


def loss_greedy(req: SubsetRequest) -> SelectionResult:
    """Repeatedly add the candidate whose inclusion most reduces the expected loss."""
    S = req.points
    n, m = S.shape
    best_to_sel = np.full(n, np.inf)  # current min loss from the selected set to each s
    selected: list[int] = []
    ties: list[dict] = []
    score = np.inf
    block = max(1, 4_000_000 // n)
    for step in range(req.k):
        best_scores = np.empty(n)
        for start in range(0, n, block):
            blk = S[start : start + block]
            deficits = np.maximum(0.0, blk[:, None, :] - S[None, :, :])
            losses = np.sqrt(np.sum(deficits**2, axis=-1))  # (b, n)
            best_scores[start : start + block] = np.mean(np.minimum(losses, best_to_sel), axis=1)
        best_scores[selected] = np.inf
        pick = int(np.argmin(best_scores))
        score = float(best_scores[pick])
        _record_tie(ties, step, pick, best_scores, best_scores[pick])
        selected.append(pick)
        deficits = np.maximum(0.0, S[pick][None, :] - S)
        best_to_sel = np.minimum(best_to_sel, np.sqrt(np.sum(deficits**2, axis=-1)))
    idx = np.array(selected, dtype=np.intp)
    return SelectionResult(idx, S[idx], score, ties)


def exact_subset_oracle(S, k: int, criterion: str, hv_reference=None) -> tuple[tuple[int, ...], float]:
    """Exhaustive best k-subset under "maxhv" or "minloss".

    Ties resolve to the lexicographically smallest index tuple. Refuses
    instances with more than 10^6 subsets.
    """
    S = canonical_order(S)
    n = len(S)
    if not 1 <= k <= n:
        raise ValueError(f"k={k} out of range for {n} candidates")
    if comb(n, k) > 1_000_000:
        raise ValueError("instance too large for exhaustive search")
    if criterion not in ("maxhv", "minloss"):
        raise ValueError(f"unknown criterion {criterion!r}")
    if criterion == "maxhv" and hv_reference is None:
        raise ValueError("maxhv needs a reference point")
    best: tuple[int, ...] | None = None
    best_score = -np.inf if criterion == "maxhv" else np.inf
    for combo in itertools.combinations(range(n), k):
        subset = S[list(combo)]
        if criterion == "maxhv":
            score = hypervolume_exact(subset, hv_reference)
            if score > best_score:
                best, best_score = combo, score
        else:
            score = expected_loss(subset, S)
            if score < best_score:
                best, best_score = combo, score
    return best, float(best_score)
