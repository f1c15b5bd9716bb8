"""Quality indicators: expected loss, IGD/IGD+, exact and Monte Carlo hypervolume.

Everything assumes minimization. Indicator arguments are 2-D arrays of row
vectors (or anything convertible); hypervolume reference points are single
row vectors.
"""

from __future__ import annotations

import bisect
from dataclasses import dataclass, field

import numpy as np

from .core import dominated_mask, nondominated_filter


@dataclass(frozen=True)
class IndicatorContext:
    """Reference data shared by indicator computations in normalized space."""

    hv_reference: np.ndarray = field(default_factory=lambda: np.array([1.1, 1.1, 1.1]))
    reference_set: np.ndarray | None = None

    def __post_init__(self):
        ref = np.asarray(self.hv_reference, dtype=float)
        object.__setattr__(self, "hv_reference", ref)
        if np.any(ref <= 0):
            raise ValueError("hypervolume reference must be positive in normalized space")


def _as_points(A, name: str) -> np.ndarray:
    A = np.atleast_2d(np.asarray(A, dtype=float))
    if A.size == 0:
        raise ValueError(f"{name} must be nonempty")
    return A


def loss_pair(a, s) -> float:
    """Deterioration suffered by a decision maker given ``a`` instead of ``s``.

    Only the objectives where ``a`` is worse count: sqrt(sum max(0, a_i - s_i)^2).
    """
    a = np.asarray(a, dtype=float)
    s = np.asarray(s, dtype=float)
    if a.shape != s.shape:
        raise ValueError(f"dimension mismatch: {a.shape} vs {s.shape}")
    return float(np.sqrt(np.sum(np.maximum(0.0, a - s) ** 2)))


def _loss_matrix(A: np.ndarray, S: np.ndarray) -> np.ndarray:
    """Pairwise losses, shape (len(A), len(S))."""
    deficits = np.maximum(0.0, A[:, None, :] - S[None, :, :])
    return np.sqrt(np.sum(deficits**2, axis=-1))


def subset_loss(A, s) -> float:
    """Smallest pairwise loss from any member of ``A`` to ``s``."""
    A = _as_points(A, "A")
    s = np.asarray(s, dtype=float)
    return float(np.min(_loss_matrix(A, s[None, :])))


def expected_loss(A, S) -> float:
    """Mean over S of the smallest loss achievable from A, all points equally likely."""
    A = _as_points(A, "A")
    S = _as_points(S, "S")
    if A.shape[1] != S.shape[1]:
        raise ValueError("A and S must share the objective dimension")
    total = 0.0
    block = max(1, 2_000_000 // max(1, len(A)))
    for start in range(0, len(S), block):
        chunk = S[start : start + block]
        total += float(np.sum(np.min(_loss_matrix(A, chunk), axis=0)))
    return total / len(S)


def igd_plus(A, R) -> float:
    """Inverted generational distance with one-sided (deficit-only) distances.

    Identical to :func:`expected_loss` with the reference set as S; kept as a
    separately named indicator for reporting.
    """
    return expected_loss(A, R)


def igd(A, R) -> float:
    """Mean Euclidean distance from each reference point to its nearest member of A."""
    A = _as_points(A, "A")
    R = _as_points(R, "R")
    if A.shape[1] != R.shape[1]:
        raise ValueError("A and R must share the objective dimension")
    total = 0.0
    block = max(1, 2_000_000 // max(1, len(A)))
    for start in range(0, len(R), block):
        chunk = R[start : start + block]
        d = np.sqrt(np.sum((A[:, None, :] - chunk[None, :, :]) ** 2, axis=-1))
        total += float(np.sum(np.min(d, axis=0)))
    return total / len(R)


# ---------------------------------------------------------------------------
# Hypervolume
# ---------------------------------------------------------------------------


def hypervolume_exact(A, ref) -> float:
    """Lebesgue measure of the region dominated by A and bounded by ``ref``.

    Points with any coordinate at or beyond the reference contribute nothing.
    Supports up to 8 objectives; an empty set has volume 0.
    """
    ref = np.asarray(ref, dtype=float)
    m = len(ref)
    if m > 8:
        raise ValueError("exact hypervolume supported for at most 8 objectives")
    A = np.atleast_2d(np.asarray(A, dtype=float))
    if A.size == 0:
        return 0.0
    A = A[np.all(A < ref, axis=1)]
    if len(A) == 0:
        return 0.0
    A = nondominated_filter(A)
    return _hv_dispatch(A, ref)


def _hv_dispatch(pts: np.ndarray, ref: np.ndarray) -> float:
    m = len(ref)
    if m == 1:
        return float(ref[0] - pts.min())
    if m == 2:
        return _hv2d(pts, ref)
    if m == 3:
        return _hv3d(pts, ref)
    return _hv_recursive(pts, ref)


def _hv2d(pts: np.ndarray, ref: np.ndarray) -> float:
    order = np.lexsort((pts[:, 1], pts[:, 0]))
    hv = 0.0
    best_y = ref[1]
    for x, y in pts[order]:
        if y < best_y:
            hv += (ref[0] - x) * (best_y - y)
            best_y = y
    return hv


def _hv3d(pts: np.ndarray, ref: np.ndarray) -> float:
    """Sweep along the third objective maintaining a 2-D staircase."""
    order = np.lexsort((pts[:, 1], pts[:, 0], pts[:, 2]))
    pts = pts[order]
    r0, r1, r2 = float(ref[0]), float(ref[1]), float(ref[2])
    xs: list[float] = []  # strictly increasing
    ys: list[float] = []  # strictly decreasing
    area = 0.0
    hv = 0.0
    n = len(pts)
    zc = pts[:, 2]
    for i in range(n):
        x, y = float(pts[i, 0]), float(pts[i, 1])
        pos = bisect.bisect_left(xs, x)
        dominated = (pos > 0 and ys[pos - 1] <= y) or (pos < len(xs) and xs[pos] == x and ys[pos] <= y)
        if not dominated:
            q = pos
            while q < len(xs) and ys[q] >= y:
                q += 1
            x_end = xs[q] if q < len(xs) else r0
            prev_h = (r1 - ys[pos - 1]) if pos > 0 else 0.0
            if pos == q:
                old = (x_end - x) * prev_h
            else:
                old = (xs[pos] - x) * prev_h
                for j in range(pos, q):
                    nxt = xs[j + 1] if j + 1 < q else x_end
                    old += (nxt - xs[j]) * (r1 - ys[j])
            area += (x_end - x) * (r1 - y) - old
            del xs[pos:q]
            del ys[pos:q]
            xs.insert(pos, x)
            ys.insert(pos, y)
        z_next = zc[i + 1] if i + 1 < n else r2
        hv += area * (z_next - zc[i])
    return hv


def _hv_recursive(pts: np.ndarray, ref: np.ndarray) -> float:
    """Inclusion-exclusion-free recursion: sum of exclusive contributions."""
    if len(pts) == 0:
        return 0.0
    if len(ref) <= 3:
        return _hv_dispatch(pts, ref)
    hv = 0.0
    for i in range(len(pts)):
        p = pts[i]
        hv += float(np.prod(ref - p))
        rest = pts[i + 1 :]
        if len(rest):
            limited = np.unique(np.maximum(rest, p), axis=0)
            limited = limited[~dominated_mask(limited)]
            hv -= _hv_recursive(limited, ref)
    return hv


def hypervolume_contribution(point, selected: np.ndarray, ref) -> float:
    """Exact hypervolume gained by adding ``point`` to ``selected``."""
    ref = np.asarray(ref, dtype=float)
    p = np.asarray(point, dtype=float)
    if np.any(p >= ref):
        return 0.0
    box = float(np.prod(ref - p))
    selected = np.atleast_2d(np.asarray(selected, dtype=float))
    if selected.size == 0:
        return box
    limited = np.maximum(selected, p)
    limited = limited[np.all(limited < ref, axis=1)]
    if len(limited) == 0:
        return box
    limited = nondominated_filter(limited)
    return box - _hv_dispatch(limited, ref)


def hypervolume_mc(A, ref, n_samples: int, seed: int) -> tuple[float, float]:
    """Monte Carlo hypervolume over the box [componentwise min(A), ref].

    Returns (estimate, binomial standard error); deterministic for a fixed seed.
    """
    if n_samples < 1000:
        raise ValueError("use at least 1000 samples")
    ref = np.asarray(ref, dtype=float)
    A = _as_points(A, "A")
    lower = A.min(axis=0)
    span = ref - lower
    if np.any(span <= 0):
        return 0.0, 0.0
    box_volume = float(np.prod(span))
    rng = np.random.default_rng(seed)
    hits = 0
    block = max(1, 4_000_000 // max(1, len(A)))
    remaining = n_samples
    while remaining > 0:
        take = min(block, remaining)
        samples = lower + rng.random((take, len(ref))) * span
        alive = np.ones(take, dtype=bool)
        covered = np.zeros(take, dtype=bool)
        for start in range(0, len(A), 512):
            blk = A[start : start + 512]
            dom = np.any(np.all(samples[alive][:, None, :] >= blk[None, :, :], axis=-1), axis=1)
            idx = np.flatnonzero(alive)
            covered[idx[dom]] = True
            alive[idx[dom]] = False
            if not np.any(alive):
                break
        hits += int(np.count_nonzero(covered))
        remaining -= take
    frac = hits / n_samples
    estimate = frac * box_volume
    stderr = box_volume * float(np.sqrt(frac * (1.0 - frac) / n_samples))
    return estimate, stderr
