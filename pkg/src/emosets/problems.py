"""DTLZ1-4 and WFG1-9 benchmark problems with analytic normalization bounds.

Decision-variable counts follow the widely used many-objective conventions:
DTLZ1 uses D = m + 4, DTLZ2-4 use D = m + 9, and WFG uses k = 2(m - 1)
position parameters plus l = 20 distance parameters, so D = 2(m - 1) + 20.

DTLZ variables live in [0, 1]; WFG variable i lives in [0, 2i]. All Pareto
fronts have the all-zeros ideal point; nadir points are (0.5, ..., 0.5) for
DTLZ1, (1, ..., 1) for DTLZ2-4, and (2, 4, ..., 2m) for the WFG family.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .core import NormalizationBounds

DTLZ_NAMES = tuple(f"DTLZ{i}" for i in range(1, 5))
WFG_NAMES = tuple(f"WFG{i}" for i in range(1, 10))
PROBLEM_NAMES = DTLZ_NAMES + WFG_NAMES


@dataclass(frozen=True)
class ProblemSpec:
    name: str
    m: int
    n_var: int
    lower: np.ndarray
    upper: np.ndarray
    # WFG position-parameter count; 0 for DTLZ.
    k: int = 0


def make_problem(name: str, m: int) -> ProblemSpec:
    """Build a problem by name with the conventional variable count for ``m``."""
    name = name.upper()
    if m < 2:
        raise ValueError("need at least two objectives")
    if name not in PROBLEM_NAMES:
        raise ValueError(f"unknown problem {name!r}; expected one of {PROBLEM_NAMES}")
    if name in DTLZ_NAMES:
        n_var = m + 4 if name == "DTLZ1" else m + 9
        lower = np.zeros(n_var)
        upper = np.ones(n_var)
        return ProblemSpec(name, m, n_var, lower, upper)
    k = 2 * (m - 1)
    n_var = k + 20
    lower = np.zeros(n_var)
    upper = 2.0 * np.arange(1, n_var + 1)
    return ProblemSpec(name, m, n_var, lower, upper, k=k)


def analytic_bounds(p: ProblemSpec) -> NormalizationBounds:
    """Ideal and nadir of the true Pareto front, used as the normalization frame."""
    ideal = np.zeros(p.m)
    if p.name == "DTLZ1":
        nadir = np.full(p.m, 0.5)
    elif p.name in DTLZ_NAMES:
        nadir = np.ones(p.m)
    else:
        nadir = 2.0 * np.arange(1, p.m + 1)
    return NormalizationBounds(ideal, nadir)


def evaluate(p: ProblemSpec, x) -> np.ndarray:
    """Objective vector of ``x``; deterministic and pure."""
    x = np.asarray(x, dtype=float)
    if x.shape != (p.n_var,):
        raise ValueError(f"{p.name} expects {p.n_var} variables, got shape {x.shape}")
    if np.any(x < p.lower) or np.any(x > p.upper):
        raise ValueError("decision vector violates box bounds")
    if p.name in DTLZ_NAMES:
        return dtlz_evaluate(int(p.name[4]), x, p.m)
    return wfg_evaluate(int(p.name[3]), x, p.m, p.k)


def sample_pareto_reference(p: ProblemSpec, n: int, seed: int) -> np.ndarray:
    """n points on the analytic Pareto front of a DTLZ problem.

    DTLZ1 samples the linear front (simplex scaled by 0.5); DTLZ2-4 sample the
    positive orthant of the unit sphere. WFG fronts are not supported.
    """
    if n < 1:
        raise ValueError("need n >= 1 reference points")
    if p.name not in DTLZ_NAMES:
        raise ValueError(f"reference sampling not supported for {p.name}")
    rng = np.random.default_rng(seed)
    if p.name == "DTLZ1":
        pts = rng.dirichlet(np.ones(p.m), size=n) * 0.5
    else:
        pts = np.abs(rng.standard_normal((n, p.m)))
        pts /= np.linalg.norm(pts, axis=1, keepdims=True)
    return pts


# ---------------------------------------------------------------------------
# DTLZ
# ---------------------------------------------------------------------------


def dtlz_evaluate(index: int, x: np.ndarray, m: int) -> np.ndarray:
    pos, dist = x[: m - 1], x[m - 1 :]
    if index in (1, 3):
        shifted = dist - 0.5
        g = 100.0 * (len(dist) + float(np.sum(shifted * shifted - np.cos(20.0 * np.pi * shifted))))
    else:
        shifted = dist - 0.5
        g = float(np.sum(shifted * shifted))
    f = np.empty(m)
    if index == 1:
        scale = 0.5 * (1.0 + g)
        # prefix[i] = product of the first i position variables
        prefix = np.empty(m)
        prefix[0] = 1.0
        np.cumprod(pos, out=prefix[1:])
        f[0] = scale * prefix[m - 1]
        for i in range(1, m):
            f[i] = scale * prefix[m - 1 - i] * (1.0 - pos[m - 1 - i])
        return f
    theta = (pos**100.0 if index == 4 else pos) * (np.pi / 2.0)
    cos_t = np.cos(theta)
    sin_t = np.sin(theta)
    scale = 1.0 + g
    prefix = np.empty(m)
    prefix[0] = 1.0
    np.cumprod(cos_t, out=prefix[1:])
    f[0] = scale * prefix[m - 1]
    for i in range(1, m):
        f[i] = scale * prefix[m - 1 - i] * sin_t[m - 1 - i]
    return f


# ---------------------------------------------------------------------------
# WFG transformation pipeline
# ---------------------------------------------------------------------------


def _correct01(y):
    return np.clip(y, 0.0, 1.0)


def _b_poly(y, alpha):
    return _correct01(y**alpha)


def _b_flat(y, a, b, c):
    out = (
        a
        + np.minimum(0.0, np.floor(y - b)) * a * (b - y) / b
        - np.minimum(0.0, np.floor(c - y)) * (1.0 - a) * (y - c) / (1.0 - c)
    )
    return _correct01(out)


def _b_param(y, u, a, b, c):
    v = a - (1.0 - 2.0 * u) * np.abs(np.floor(0.5 - u) + a)
    return _correct01(y ** (b + (c - b) * v))


def _s_linear(y, a):
    return _correct01(np.abs(y - a) / np.abs(np.floor(a - y) + a))


def _s_decept(y, a, b, c):
    t1 = np.floor(y - a + b) * (1.0 - c + (a - b) / b) / (a - b)
    t2 = np.floor(a + b - y) * (1.0 - c + (1.0 - a - b) / b) / (1.0 - a - b)
    return _correct01(1.0 + (np.abs(y - a) - b) * (t1 + t2 + 1.0 / b))


def _s_multi(y, a, b, c):
    t1 = np.abs(y - c) / (2.0 * (np.floor(c - y) + c))
    t2 = (4.0 * a + 2.0) * np.pi * (0.5 - t1)
    return _correct01((1.0 + np.cos(t2) + 4.0 * b * t1**2) / (b + 2.0))


def _r_sum(y, w):
    return _correct01(float(np.dot(y, w) / np.sum(w)))


def _r_nonsep(y, a):
    n = len(y)
    total = 0.0
    for j in range(n):
        total += y[j]
        for kk in range(a - 1):
            total += abs(y[j] - y[(1 + j + kk) % n])
    denom = (n / a) * np.ceil(a / 2.0) * (1.0 + 2.0 * a - 2.0 * np.ceil(a / 2.0))
    return _correct01(total / denom)


def _shape_linear(x, m):
    mm = len(x) + 1
    if m == 1:
        return float(np.prod(x))
    if m == mm:
        return 1.0 - x[0]
    return float(np.prod(x[: mm - m])) * (1.0 - x[mm - m])


def _shape_convex(x, m):
    mm = len(x) + 1
    s = 1.0 - np.cos(x * np.pi / 2.0)
    if m == 1:
        return float(np.prod(s))
    if m == mm:
        return 1.0 - np.sin(x[0] * np.pi / 2.0)
    return float(np.prod(s[: mm - m])) * (1.0 - np.sin(x[mm - m] * np.pi / 2.0))


def _shape_concave(x, m):
    mm = len(x) + 1
    s = np.sin(x * np.pi / 2.0)
    if m == 1:
        return float(np.prod(s))
    if m == mm:
        return float(np.cos(x[0] * np.pi / 2.0))
    return float(np.prod(s[: mm - m])) * np.cos(x[mm - m] * np.pi / 2.0)


def _shape_mixed(x0, alpha, a):
    aux = 2.0 * a * np.pi
    return float((1.0 - x0 - np.cos(aux * x0 + np.pi / 2.0) / aux) ** alpha)


def _shape_disc(x0, alpha, beta, a):
    return float(1.0 - x0**alpha * np.cos(a * np.pi * x0**beta) ** 2)


def _wfg_groups(y, m, k):
    """Position-group reductions shared by most WFG problems (weights all 1)."""
    gap = k // (m - 1)
    t = [_r_sum(y[i * gap : (i + 1) * gap], np.ones(gap)) for i in range(m - 1)]
    t.append(_r_sum(y[k:], np.ones(len(y) - k)))
    return np.array(t)


def _wfg_final(t, m, a, shapes):
    x = np.empty(m)
    x[-1] = t[-1]
    for i in range(m - 1):
        x[i] = max(t[-1], a[i]) * (t[i] - 0.5) + 0.5
    s = 2.0 * np.arange(1, m + 1)
    h = np.array([shapes(x[:-1], i + 1) for i in range(m)])
    return x[-1] + s * h


def wfg_evaluate(index: int, z: np.ndarray, m: int, k: int) -> np.ndarray:
    """WFG objective vector for one decision vector ``z`` with k position parameters."""
    n = len(z)
    l = n - k
    if k % (m - 1) != 0:
        raise ValueError("k must be divisible by m - 1")
    if index in (2, 3) and l % 2 != 0:
        raise ValueError("WFG2/WFG3 need an even number of distance parameters")
    y = z / (2.0 * np.arange(1, n + 1))
    a = np.ones(m - 1)

    if index == 1:
        y[k:] = _s_linear(y[k:], 0.35)
        y[k:] = _b_flat(y[k:], 0.8, 0.75, 0.85)
        y = _b_poly(y, 0.02)
        w = 2.0 * np.arange(1, n + 1)
        gap = k // (m - 1)
        t = [_r_sum(y[i * gap : (i + 1) * gap], w[i * gap : (i + 1) * gap]) for i in range(m - 1)]
        t.append(_r_sum(y[k:], w[k:]))
        t = np.array(t)
        x = np.empty(m)
        x[-1] = t[-1]
        for i in range(m - 1):
            x[i] = max(t[-1], a[i]) * (t[i] - 0.5) + 0.5
        s = 2.0 * np.arange(1, m + 1)
        h = [_shape_convex(x[:-1], i + 1) for i in range(m - 1)]
        h.append(_shape_mixed(x[0], 1.0, 5.0))
        return x[-1] + s * np.array(h)

    if index in (2, 3):
        y[k:] = _s_linear(y[k:], 0.35)
        reduced = list(y[:k])
        for i in range(k, k + l // 2):
            head = k + 2 * (i - k)
            reduced.append(_r_nonsep(y[head : head + 2], 2))
        y = np.array(reduced)
        t = _wfg_groups(y, m, k)
        if index == 3:
            a = np.zeros(m - 1)
            a[0] = 1.0
            return _wfg_final(t, m, a, _shape_linear)
        x = np.empty(m)
        x[-1] = t[-1]
        for i in range(m - 1):
            x[i] = max(t[-1], a[i]) * (t[i] - 0.5) + 0.5
        s = 2.0 * np.arange(1, m + 1)
        h = [_shape_convex(x[:-1], i + 1) for i in range(m - 1)]
        h.append(_shape_disc(x[0], 1.0, 1.0, 5.0))
        return x[-1] + s * np.array(h)

    if index == 4:
        y = _s_multi(y, 30.0, 10.0, 0.35)
        return _wfg_final(_wfg_groups(y, m, k), m, a, _shape_concave)

    if index == 5:
        y = _s_decept(y, 0.35, 0.001, 0.05)
        return _wfg_final(_wfg_groups(y, m, k), m, a, _shape_concave)

    if index == 6:
        y[k:] = _s_linear(y[k:], 0.35)
        gap = k // (m - 1)
        t = [_r_nonsep(y[i * gap : (i + 1) * gap], gap) for i in range(m - 1)]
        t.append(_r_nonsep(y[k:], l))
        return _wfg_final(np.array(t), m, a, _shape_concave)

    if index == 7:
        yy = y.copy()
        for i in range(k):
            u = _r_sum(y[i + 1 :], np.ones(n - i - 1))
            yy[i] = _b_param(y[i], u, 0.98 / 49.98, 0.02, 50.0)
        yy[k:] = _s_linear(yy[k:], 0.35)
        return _wfg_final(_wfg_groups(yy, m, k), m, a, _shape_concave)

    if index == 8:
        yy = y.copy()
        for i in range(k, n):
            u = _r_sum(y[:i], np.ones(i))
            yy[i] = _b_param(y[i], u, 0.98 / 49.98, 0.02, 50.0)
        yy[k:] = _s_linear(yy[k:], 0.35)
        return _wfg_final(_wfg_groups(yy, m, k), m, a, _shape_concave)

    if index == 9:
        yy = y.copy()
        for i in range(n - 1):
            u = _r_sum(y[i + 1 :], np.ones(n - i - 1))
            yy[i] = _b_param(y[i], u, 0.98 / 49.98, 0.02, 50.0)
        yy[:k] = _s_decept(yy[:k], 0.35, 0.001, 0.05)
        yy[k:] = _s_multi(yy[k:], 30.0, 95.0, 0.35)
        gap = k // (m - 1)
        t = [_r_nonsep(yy[i * gap : (i + 1) * gap], gap) for i in range(m - 1)]
        t.append(_r_nonsep(yy[k:], l))
        return _wfg_final(np.array(t), m, a, _shape_concave)

    raise ValueError(f"unknown WFG index {index}")
