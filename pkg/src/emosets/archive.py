"""External archives fed by the evaluation stream, plus CSV serialization.

The scalarizing archive keeps one slot per weight vector of its own lattice:
slot i always holds the best solution seen so far under weight i, judged with
the ideal-point estimate current at each comparison. The unbounded archive
keeps every non-dominated, non-duplicate solution.
"""

from __future__ import annotations

import numpy as np

from .core import Solution, dominated_mask
from .problems import ProblemSpec
from .scalarize import ZERO_WEIGHT_FLOOR, ScalarizerKind


class ScalarizingArchive:
    """Weight-indexed slots updated by strict scalarizing improvement.

    As a sink the archive tracks its own ideal-point estimate as the
    componentwise minimum of everything it has observed, which coincides with
    the emitting run's live estimate. ``offer`` may also be called with an
    explicit ``z`` to score one comparison under a fixed reference.

    The offer path is the innermost loop of a benchmark run, so slot
    objectives and weight transforms are kept transposed and contiguous, and
    slot scores are cached until the reference estimate moves.
    """

    def __init__(self, weights: np.ndarray, scalarizer: ScalarizerKind):
        self.weights = np.asarray(weights, dtype=float)
        self.scalarizer = scalarizer
        self.size = len(self.weights)
        self.m = self.weights.shape[1]
        self._slot_f = np.empty((self.size, self.m))
        self._slot_fT = np.empty((self.m, self.size))
        self._slot_x: np.ndarray | None = None
        self._slot_eval = np.full(self.size, -1, dtype=np.intp)
        self._filled = False
        self._z: np.ndarray | None = None
        self._z_version = 0
        self._slot_g: np.ndarray | None = None  # slot scores, valid for _g_version/_z_of_cache
        self._g_version = -1
        self._z_of_cache: np.ndarray | None = None
        if scalarizer.kind == "tchebycheff":
            self._wfT = np.ascontiguousarray(np.maximum(self.weights, ZERO_WEIGHT_FLOOR).T)
            self._whatT = None
        else:
            self._wfT = None
            what = self.weights / np.linalg.norm(self.weights, axis=1)[:, None]
            self._whatT = np.ascontiguousarray(what.T)
        self._g_new = np.empty(self.size)
        self._tmp = np.empty(self.size)
        self._acc = np.empty(self.size)
        self._mask = np.empty(self.size, dtype=bool)

    @property
    def z(self) -> np.ndarray | None:
        """Ideal-point estimate accumulated from observed solutions."""
        return None if self._z is None else self._z.copy()

    def on_initialized(self, solutions: list[Solution]) -> None:
        """Seed every slot with the best initial solution for its weight."""
        init_scalarizing_archive_into(self, solutions)

    def offer(self, s: Solution, z=None) -> int:
        """Replace every slot the solution strictly improves; returns the count."""
        sink_path = z is None
        if sink_path:
            if self._z is None:
                self._z = np.array(s.f, dtype=float)
                self._z_version += 1
            elif np.any(s.f < self._z):
                np.minimum(self._z, s.f, out=self._z)
                self._z_version += 1
            z = self._z
            fresh = self._slot_g is not None and self._g_version == self._z_version
        else:
            z = np.asarray(z, dtype=float)
            fresh = (
                self._slot_g is not None
                and self._z_of_cache is not None
                and np.array_equal(self._z_of_cache, z)
            )
        if not self._filled:
            self._fill_all(s)
            return self.size
        if not fresh:
            self._slot_g = self._paired_slot_scores(z)
            self._z_of_cache = np.array(z, dtype=float, copy=True)
            self._g_version = self._z_version if sink_path else -1
        g_new = self._cross_scores(np.asarray(s.f, dtype=float), z)
        np.less(g_new, self._slot_g, out=self._mask)
        count = int(np.count_nonzero(self._mask))
        if count:
            mask = self._mask
            self._slot_f[mask] = s.f
            self._slot_fT[:, mask] = np.asarray(s.f, dtype=float)[:, None]
            self._ensure_x(len(s.x))
            self._slot_x[mask] = s.x
            self._slot_eval[mask] = s.eval_index
            self._slot_g[mask] = g_new[mask]
        return count

    def _cross_scores(self, f: np.ndarray, z: np.ndarray) -> np.ndarray:
        """Score of one objective vector under every archive weight."""
        g, tmp = self._g_new, self._tmp
        if self._wfT is not None:
            d = np.abs(f - z)
            np.multiply(self._wfT[0], d[0], out=g)
            for j in range(1, self.m):
                np.multiply(self._wfT[j], d[j], out=tmp)
                np.maximum(g, tmp, out=g)
            return g
        d = f - z
        acc = self._acc
        np.multiply(self._whatT[0], d[0], out=acc)
        for j in range(1, self.m):
            np.multiply(self._whatT[j], d[j], out=tmp)
            np.add(acc, tmp, out=acc)
        np.abs(acc, out=acc)  # acc = d1
        resid = np.zeros(self.size)
        for j in range(self.m):
            np.multiply(acc, self._whatT[j], out=tmp)
            np.subtract(d[j], tmp, out=tmp)
            np.multiply(tmp, tmp, out=tmp)
            np.add(resid, tmp, out=resid)
        np.sqrt(resid, out=resid)
        np.multiply(resid, self.scalarizer.theta, out=resid)
        np.add(acc, resid, out=g)
        return g

    def _paired_slot_scores(self, z: np.ndarray) -> np.ndarray:
        """Score of each slot under its own weight (fresh array, cache-friendly)."""
        g = np.empty(self.size)
        tmp = np.empty(self.size)
        if self._wfT is not None:
            np.subtract(self._slot_fT[0], z[0], out=tmp)
            np.abs(tmp, out=tmp)
            np.multiply(tmp, self._wfT[0], out=g)
            for j in range(1, self.m):
                np.subtract(self._slot_fT[j], z[j], out=tmp)
                np.abs(tmp, out=tmp)
                np.multiply(tmp, self._wfT[j], out=tmp)
                np.maximum(g, tmp, out=g)
            return g
        diff = self._slot_fT - z[:, None]
        d1 = np.abs(np.einsum("ja,ja->a", self._whatT, diff))
        resid = diff - d1[None, :] * self._whatT
        g = d1 + self.scalarizer.theta * np.sqrt(np.einsum("ja,ja->a", resid, resid))
        return g

    def _ensure_x(self, n_var: int) -> None:
        if self._slot_x is None:
            self._slot_x = np.zeros((self.size, n_var))

    def _fill_all(self, s: Solution) -> None:
        self._slot_f[:] = s.f
        self._slot_fT[:] = np.asarray(s.f, dtype=float)[:, None]
        self._ensure_x(len(s.x))
        self._slot_x[:] = s.x
        self._slot_eval[:] = s.eval_index
        self._filled = True
        self._slot_g = None
        self._z_of_cache = None

    def slot_objectives(self) -> np.ndarray:
        self._require_filled()
        return self._slot_f.copy()

    def slot_decisions(self) -> np.ndarray:
        self._require_filled()
        return self._slot_x.copy()

    def solutions(self) -> list[Solution]:
        self._require_filled()
        return [
            Solution(self._slot_x[i].copy(), self._slot_f[i].copy(), int(self._slot_eval[i]))
            for i in range(self.size)
        ]

    def _require_filled(self):
        if not self._filled:
            raise ValueError("archive has not been initialized with any solution")


def init_scalarizing_archive(
    weights, population: list[Solution], scalarizer: ScalarizerKind, z=None
) -> ScalarizingArchive:
    """Archive whose slot i holds the population argmin under weight i.

    Ties go to the lower population index. ``z`` defaults to the componentwise
    minimum over the population (the estimate after those evaluations).
    """
    archive = ScalarizingArchive(np.asarray(weights, dtype=float), scalarizer)
    init_scalarizing_archive_into(archive, population, z)
    return archive


def init_scalarizing_archive_into(archive: ScalarizingArchive, population: list[Solution], z=None) -> None:
    if not population:
        raise ValueError("cannot initialize an archive from an empty population")
    pop_f = np.array([s.f for s in population], dtype=float)
    pop_x = np.array([s.x for s in population], dtype=float)
    if z is None:
        z = pop_f.min(axis=0)
        if archive._z is not None:
            z = np.minimum(z, archive._z)
    else:
        z = np.asarray(z, dtype=float)
    archive._z = z.copy()
    best_val = np.full(archive.size, np.inf)
    best_idx = np.zeros(archive.size, dtype=np.intp)
    block = 256
    for start in range(0, len(population), block):
        g = _cross_values(pop_f[start : start + block], archive.weights, z, archive.scalarizer)
        blk_best = g.argmin(axis=1)
        blk_val = g[np.arange(archive.size), blk_best]
        improve = blk_val < best_val
        best_val[improve] = blk_val[improve]
        best_idx[improve] = blk_best[improve] + start
    archive._slot_f[:] = pop_f[best_idx]
    archive._slot_fT[:] = archive._slot_f.T
    archive._ensure_x(pop_x.shape[1])
    archive._slot_x[:] = pop_x[best_idx]
    archive._slot_eval[:] = [population[i].eval_index for i in best_idx]
    archive._filled = True
    archive._slot_g = None
    archive._z_of_cache = None


def _cross_values(F: np.ndarray, W: np.ndarray, z: np.ndarray, kind: ScalarizerKind) -> np.ndarray:
    """Scalarizing values of every f in F under every w in W; shape (len(W), len(F))."""
    if kind.kind == "tchebycheff":
        wf = np.maximum(W, ZERO_WEIGHT_FLOOR)
        return np.max(wf[:, None, :] * np.abs(F - z)[None, :, :], axis=-1)
    norms = np.linalg.norm(W, axis=1)
    what = W / norms[:, None]
    diff = F - z  # (n, m)
    d1 = np.abs(diff @ what.T).T  # (w, n)
    resid = diff[None, :, :] - d1[:, :, None] * what[:, None, :]
    d2 = np.linalg.norm(resid, axis=-1)
    return d1 + kind.theta * d2


def offer(archive: ScalarizingArchive, s: Solution, z) -> int:
    """Functional form of :meth:`ScalarizingArchive.offer` with an explicit z."""
    return archive.offer(s, z)


class UnboundedArchive:
    """Growing store of mutually non-dominated, duplicate-free solutions."""

    def __init__(self):
        self.members: list[Solution] = []
        self._f = np.empty((0, 0))

    def on_initialized(self, solutions: list[Solution]) -> None:
        for s in solutions:
            self.offer(s)

    def offer(self, s: Solution) -> bool:
        """Insert unless dominated or duplicated; evicts members the solution dominates."""
        f = np.asarray(s.f, dtype=float)
        if not self.members:
            self.members.append(s)
            self._f = f[None, :].copy()
            return True
        le = self._f <= f
        ge = self._f >= f
        dominated_or_dup = np.any(np.all(le, axis=1))
        if dominated_or_dup:
            return False
        evict = np.all(ge, axis=1)  # strict somewhere is implied: s not duplicated
        if np.any(evict):
            keep = ~evict
            self.members = [m for m, k in zip(self.members, keep) if k]
            self._f = self._f[keep]
        self.members.append(s)
        self._f = np.vstack([self._f, f[None, :]])
        return True

    def objectives(self) -> np.ndarray:
        return self._f.copy()


def ua_offer(archive: UnboundedArchive, s: Solution) -> bool:
    return archive.offer(s)


def extract_candidates(archive) -> tuple[np.ndarray, np.ndarray]:
    """Non-dominated, duplicate-free candidates of an archive.

    Returns (objectives, decisions) with rows aligned, objectives in
    lexicographic order. For duplicated objective vectors the representative
    with the lowest slot/member index is kept.
    """
    if isinstance(archive, UnboundedArchive):
        if not archive.members:
            raise ValueError("archive is empty")
        F = archive.objectives()
        X = np.array([m.x for m in archive.members], dtype=float)
    else:
        F = archive.slot_objectives()
        X = archive.slot_decisions()
    return candidate_rows(F, X)


def candidate_rows(F: np.ndarray, X: np.ndarray | None) -> tuple[np.ndarray, np.ndarray | None]:
    """Dedupe (lowest-index representative), drop dominated rows, sort lexicographically."""
    F = np.atleast_2d(np.asarray(F, dtype=float))
    _, first = np.unique(F, axis=0, return_index=True)
    first.sort()
    F = F[first]
    X = X[first] if X is not None else None
    keep = ~dominated_mask(F)
    F = F[keep]
    X = X[keep] if X is not None else None
    order = np.lexsort(F.T[::-1])
    return F[order], (X[order] if X is not None else None)


# ---------------------------------------------------------------------------
# CSV serialization
# ---------------------------------------------------------------------------


def write_set_csv(path, F: np.ndarray, X: np.ndarray | None, problem: ProblemSpec, kind: str) -> None:
    """Write objective (and optional decision) rows with a metadata header.

    Floats use 17 significant digits so a read-back is bit-exact.
    """
    F = np.atleast_2d(np.asarray(F, dtype=float))
    n_var = 0 if X is None else X.shape[1]
    with open(path, "w", encoding="utf-8") as fh:
        fh.write(f"# problem={problem.name} m={problem.m} D={problem.n_var} kind={kind}\n")
        cols = [f"f{i + 1}" for i in range(F.shape[1])] + [f"x{i + 1}" for i in range(n_var)]
        fh.write(",".join(cols) + "\n")
        for i in range(len(F)):
            row = list(F[i]) + (list(X[i]) if X is not None else [])
            fh.write(",".join(f"{v:.17g}" for v in row) + "\n")


def read_set_csv(path) -> tuple[dict, np.ndarray, np.ndarray | None]:
    """Read a file written by :func:`write_set_csv`; returns (meta, F, X)."""
    with open(path, "r", encoding="utf-8") as fh:
        header = fh.readline().strip()
        if not header.startswith("# "):
            raise ValueError(f"{path}: missing metadata header")
        meta = dict(item.split("=", 1) for item in header[2:].split())
        meta["m"] = int(meta["m"])
        meta["D"] = int(meta["D"])
        names = fh.readline().strip().split(",")
        m = sum(1 for c in names if c.startswith("f"))
        rows = [[float(v) for v in line.strip().split(",")] for line in fh if line.strip()]
    data = np.array(rows, dtype=float)
    F = data[:, :m]
    X = data[:, m:] if data.shape[1] > m else None
    return meta, F, X
