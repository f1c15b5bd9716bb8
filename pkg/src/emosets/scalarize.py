"""Weight-vector lattices and scalarizing functions (Tchebycheff, PBI).

Weight vectors live on the unit simplex with components j/H for integers j.
Scalarizing values are "smaller is better" throughout.
"""

from __future__ import annotations

from dataclasses import dataclass
from math import comb

import numpy as np

# Weights of exactly zero would make a subproblem blind to one objective; a
# small floor keeps boundary weight vectors anchored to extreme solutions.
ZERO_WEIGHT_FLOOR = 1e-6


@dataclass(frozen=True)
class ScalarizerKind:
    """Which scalarizing function to use, plus the PBI penalty weight."""

    kind: str  # "tchebycheff" or "pbi"
    theta: float = 5.0

    def __post_init__(self):
        if self.kind not in ("tchebycheff", "pbi"):
            raise ValueError(f"unknown scalarizer kind: {self.kind!r}")
        if self.theta <= 0:
            raise ValueError("theta must be positive")


TCHEBYCHEFF = ScalarizerKind("tchebycheff")
PBI = ScalarizerKind("pbi", theta=5.0)


def simplex_lattice(m: int, h: int) -> np.ndarray:
    """All weight vectors with components j/h summing to 1, for integers j.

    Returned as a (count, m) array in lexicographic order of the integer
    numerators; count equals binomial(m + h - 1, m - 1).
    """
    if m < 2:
        raise ValueError("need at least two objectives")
    if h < 1:
        raise ValueError("lattice resolution h must be at least 1")
    rows = np.empty((comb(m + h - 1, m - 1), m), dtype=float)
    for i, numerators in enumerate(_compositions(h, m)):
        rows[i] = numerators
    rows /= h
    return rows


def _compositions(total: int, parts: int):
    if parts == 1:
        yield (total,)
        return
    for j in range(total + 1):
        for rest in _compositions(total - j, parts - 1):
            yield (j,) + rest


def lattice_resolution_for_size(m: int, size: int, max_h: int = 400) -> int:
    """The h whose lattice has exactly ``size`` vectors, or raise."""
    for h in range(1, max_h + 1):
        n = comb(m + h - 1, m - 1)
        if n == size:
            return h
        if n > size:
            break
    raise ValueError(f"{size} is not a simplex-lattice size for m={m}")


def tchebycheff(f, w, z) -> float:
    """Weighted Tchebycheff distance from the ideal-point estimate ``z``."""
    return float(tchebycheff_values(np.asarray(f, float), np.atleast_2d(w), np.asarray(z, float))[0])


def pbi(f, w, z, theta: float = 5.0) -> float:
    """Penalty boundary intersection value: projection distance d1 + theta * offset d2."""
    return float(pbi_values(np.asarray(f, float), np.atleast_2d(w), np.asarray(z, float), theta)[0])


def tchebycheff_values(F, W, z) -> np.ndarray:
    """Tchebycheff values for many (f, w) pairs.

    ``F`` is (n, m) or (m,); ``W`` is (n, m); the two broadcast row-wise.
    """
    F = np.asarray(F, dtype=float)
    W = np.asarray(W, dtype=float)
    z = np.asarray(z, dtype=float)
    if F.shape[-1] != W.shape[-1] or z.shape[-1] != W.shape[-1]:
        raise ValueError("objective, weight, and reference dimensions must match")
    wf = np.maximum(W, ZERO_WEIGHT_FLOOR)
    return np.max(wf * np.abs(F - z), axis=-1)


def pbi_values(F, W, z, theta: float = 5.0) -> np.ndarray:
    """PBI values for many (f, w) pairs; shapes as in :func:`tchebycheff_values`."""
    F = np.asarray(F, dtype=float)
    W = np.asarray(W, dtype=float)
    z = np.asarray(z, dtype=float)
    if F.shape[-1] != W.shape[-1] or z.shape[-1] != W.shape[-1]:
        raise ValueError("objective, weight, and reference dimensions must match")
    norms = np.linalg.norm(W, axis=-1)
    if np.any(norms == 0):
        raise ValueError("PBI requires nonzero weight vectors")
    what = W / norms[..., None]
    diff = F - z
    d1 = np.abs(np.sum(diff * what, axis=-1))
    d2 = np.linalg.norm(diff - d1[..., None] * what, axis=-1)
    return d1 + theta * d2


def scalarizer_values(F, W, z, kind: ScalarizerKind) -> np.ndarray:
    """Dispatch to the configured scalarizing function."""
    if kind.kind == "tchebycheff":
        return tchebycheff_values(F, W, z)
    return pbi_values(F, W, z, kind.theta)


def update_ideal(z, f) -> np.ndarray:
    """Componentwise minimum; fold over a solution stream to track the ideal point."""
    z = np.asarray(z, dtype=float)
    f = np.asarray(f, dtype=float)
    if z.shape != f.shape:
        raise ValueError("dimension mismatch in ideal-point update")
    return np.minimum(z, f)
