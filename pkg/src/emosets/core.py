"""Objective-space primitives: dominance, non-dominated filtering, normalization.

All functions assume minimization of every objective. Objective vectors are
plain 1-D float arrays; sets of objective vectors are 2-D arrays with one row
per point.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np


@dataclass(frozen=True)
class Solution:
    """A decision vector together with its evaluated objective vector.

    ``eval_index`` is the sequence number of the evaluation that produced the
    solution, counted from 0 within one run.
    """

    x: np.ndarray
    f: np.ndarray
    eval_index: int = 0


@dataclass(frozen=True)
class NormalizationBounds:
    """Affine normalization frame mapping ``ideal`` to 0 and ``nadir`` to 1."""

    ideal: np.ndarray
    nadir: np.ndarray

    def __post_init__(self):
        ideal = np.asarray(self.ideal, dtype=float)
        nadir = np.asarray(self.nadir, dtype=float)
        object.__setattr__(self, "ideal", ideal)
        object.__setattr__(self, "nadir", nadir)
        if ideal.shape != nadir.shape:
            raise ValueError("ideal and nadir must have the same dimension")
        if not np.all(ideal < nadir):
            raise ValueError("ideal must be strictly less than nadir in every component")


def dominates(u, v) -> bool:
    """True iff ``u`` Pareto-dominates ``v``: u <= v everywhere, u < v somewhere."""
    u = np.asarray(u, dtype=float)
    v = np.asarray(v, dtype=float)
    if u.shape != v.shape:
        raise ValueError(f"dimension mismatch: {u.shape} vs {v.shape}")
    return bool(np.all(u <= v) and np.any(u < v))


def weakly_dominates(u, v) -> bool:
    """True iff u <= v in every component (equality allowed everywhere)."""
    u = np.asarray(u, dtype=float)
    v = np.asarray(v, dtype=float)
    if u.shape != v.shape:
        raise ValueError(f"dimension mismatch: {u.shape} vs {v.shape}")
    return bool(np.all(u <= v))


def dominated_mask(points: np.ndarray) -> np.ndarray:
    """Boolean mask over rows of ``points`` marking points dominated by some other row.

    Exact duplicate rows do not dominate each other.
    """
    pts = np.asarray(points, dtype=float)
    n = len(pts)
    out = np.zeros(n, dtype=bool)
    block = 256
    for start in range(0, n, block):
        blk = pts[start : start + block]
        le = np.all(pts[:, None, :] <= blk[None, :, :], axis=2)
        lt = np.any(pts[:, None, :] < blk[None, :, :], axis=2)
        out[start : start + block] = np.any(le & lt, axis=0)
    return out


def nondominated_filter(points) -> np.ndarray:
    """Remove dominated points and collapse exact duplicates.

    Returns the surviving points as a 2-D array in lexicographic order (the
    canonical set representation used throughout the package).
    """
    pts = np.atleast_2d(np.asarray(points, dtype=float))
    if pts.size == 0:
        raise ValueError("nondominated_filter requires a nonempty set")
    pts = np.unique(pts, axis=0)
    return pts[~dominated_mask(pts)]


def normalize(f, bounds: NormalizationBounds) -> np.ndarray:
    """Map objective values into the unit frame: ideal -> 0, nadir -> 1.

    Works on a single vector or a 2-D array of row vectors.
    """
    f = np.asarray(f, dtype=float)
    return (f - bounds.ideal) / (bounds.nadir - bounds.ideal)


def denormalize(f, bounds: NormalizationBounds) -> np.ndarray:
    """Inverse of :func:`normalize`."""
    f = np.asarray(f, dtype=float)
    return f * (bounds.nadir - bounds.ideal) + bounds.ideal
