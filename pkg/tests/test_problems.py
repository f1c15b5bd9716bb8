"""Problem-family tests.

The DTLZ/WFG evaluators are checked against an independent scalar
transcription of the published definitions (pure-Python loops, no shared code
with the package), and the WFG pipeline is additionally cross-checked against
input/output vectors produced by a third-party implementation.
"""

import math

import numpy as np
import pytest

from emosets.core import NormalizationBounds
from emosets.problems import (
    analytic_bounds,
    dtlz_evaluate,
    evaluate,
    make_problem,
    sample_pareto_reference,
    wfg_evaluate,
)

# ---------------------------------------------------------------------------
# Independent scalar oracles
# ---------------------------------------------------------------------------


def oracle_dtlz(index, x, m):
    k = len(x) - m + 1
    xm = x[m - 1 :]
    if index in (1, 3):
        g = 100.0 * (
            k + sum((xi - 0.5) ** 2 - math.cos(20.0 * math.pi * (xi - 0.5)) for xi in xm)
        )
    else:
        g = sum((xi - 0.5) ** 2 for xi in xm)
    f = []
    if index == 1:
        for i in range(1, m + 1):
            val = 0.5 * (1.0 + g)
            for j in range(1, m - i + 1):
                val *= x[j - 1]
            if i > 1:
                val *= 1.0 - x[m - i]
            f.append(val)
        return f
    alpha = 100.0 if index == 4 else 1.0
    for i in range(1, m + 1):
        val = 1.0 + g
        for j in range(1, m - i + 1):
            val *= math.cos(x[j - 1] ** alpha * math.pi / 2.0)
        if i > 1:
            val *= math.sin(x[m - i] ** alpha * math.pi / 2.0)
        f.append(val)
    return f


def _clamp01(v):
    return min(1.0, max(0.0, v))


def _o_b_poly(y, a):
    return _clamp01(y**a)


def _o_b_flat(y, a, b, c):
    return _clamp01(
        a
        + min(0.0, math.floor(y - b)) * a * (b - y) / b
        - min(0.0, math.floor(c - y)) * (1.0 - a) * (y - c) / (1.0 - c)
    )


def _o_b_param(y, u, a, b, c):
    v = a - (1.0 - 2.0 * u) * abs(math.floor(0.5 - u) + a)
    return _clamp01(y ** (b + (c - b) * v))


def _o_s_linear(y, a):
    return _clamp01(abs(y - a) / abs(math.floor(a - y) + a))


def _o_s_decept(y, a, b, c):
    t1 = math.floor(y - a + b) * (1.0 - c + (a - b) / b) / (a - b)
    t2 = math.floor(a + b - y) * (1.0 - c + (1.0 - a - b) / b) / (1.0 - a - b)
    return _clamp01(1.0 + (abs(y - a) - b) * (t1 + t2 + 1.0 / b))


def _o_s_multi(y, a, b, c):
    t1 = abs(y - c) / (2.0 * (math.floor(c - y) + c))
    return _clamp01((1.0 + math.cos((4.0 * a + 2.0) * math.pi * (0.5 - t1)) + 4.0 * b * t1**2) / (b + 2.0))


def _o_r_sum(ys, ws):
    return _clamp01(sum(w * y for w, y in zip(ws, ys)) / sum(ws))


def _o_r_nonsep(ys, a):
    n = len(ys)
    total = 0.0
    for j in range(n):
        total += ys[j]
        for kk in range(a - 1):
            total += abs(ys[j] - ys[(1 + j + kk) % n])
    denom = (n / a) * math.ceil(a / 2.0) * (1.0 + 2.0 * a - 2.0 * math.ceil(a / 2.0))
    return _clamp01(total / denom)


def oracle_wfg(index, z, m, k):
    n = len(z)
    l = n - k
    y = [z[i] / (2.0 * (i + 1)) for i in range(n)]
    series = list(range(1, m))

    def degenerate(a_first_only):
        return [1.0] + [0.0] * (m - 2) if a_first_only else [1.0] * (m - 1)

    def final(t, a, shape):
        x = [max(t[-1], a[i]) * (t[i] - 0.5) + 0.5 for i in range(m - 1)] + [t[-1]]
        return [x[-1] + 2.0 * (i + 1) * shape(x[:-1], i + 1) for i in range(m)]

    def sh_concave(xs, i):
        mm = len(xs) + 1
        if i == 1:
            return math.prod(math.sin(v * math.pi / 2) for v in xs)
        if i == mm:
            return math.cos(xs[0] * math.pi / 2)
        head = math.prod(math.sin(v * math.pi / 2) for v in xs[: mm - i])
        return head * math.cos(xs[mm - i] * math.pi / 2)

    def sh_convex(xs, i):
        mm = len(xs) + 1
        if i == 1:
            return math.prod(1 - math.cos(v * math.pi / 2) for v in xs)
        if i == mm:
            return 1 - math.sin(xs[0] * math.pi / 2)
        head = math.prod(1 - math.cos(v * math.pi / 2) for v in xs[: mm - i])
        return head * (1 - math.sin(xs[mm - i] * math.pi / 2))

    def sh_linear(xs, i):
        mm = len(xs) + 1
        if i == 1:
            return math.prod(xs)
        if i == mm:
            return 1 - xs[0]
        return math.prod(xs[: mm - i]) * (1 - xs[mm - i])

    def groups(y_, weights=None):
        gap = k // (m - 1)
        t = []
        for i in range(m - 1):
            chunk = y_[i * gap : (i + 1) * gap]
            ws = weights[i * gap : (i + 1) * gap] if weights else [1.0] * len(chunk)
            t.append(_o_r_sum(chunk, ws))
        tail = y_[k:]
        ws = weights[k:] if weights else [1.0] * len(tail)
        t.append(_o_r_sum(tail, ws))
        return t

    if index == 1:
        y = y[:k] + [_o_b_flat(_o_s_linear(v, 0.35), 0.8, 0.75, 0.85) for v in y[k:]]
        y = [_o_b_poly(v, 0.02) for v in y]
        w = [2.0 * (i + 1) for i in range(n)]
        t = groups(y, w)
        x = [max(t[-1], 1.0) * (t[i] - 0.5) + 0.5 for i in range(m - 1)] + [t[-1]]
        aux = 2.0 * 5.0 * math.pi
        h = [sh_convex(x[:-1], i + 1) for i in range(m - 1)]
        h.append((1.0 - x[0] - math.cos(aux * x[0] + math.pi / 2.0) / aux) ** 1.0)
        return [x[-1] + 2.0 * (i + 1) * h[i] for i in range(m)]

    if index in (2, 3):
        y = y[:k] + [_o_s_linear(v, 0.35) for v in y[k:]]
        reduced = y[:k]
        for i in range(l // 2):
            pair = y[k + 2 * i : k + 2 * i + 2]
            reduced.append(_o_r_nonsep(pair, 2))
        t = groups(reduced)
        if index == 3:
            a = degenerate(True)
            return final(t, a, sh_linear)
        x = [max(t[-1], 1.0) * (t[i] - 0.5) + 0.5 for i in range(m - 1)] + [t[-1]]
        h = [sh_convex(x[:-1], i + 1) for i in range(m - 1)]
        h.append(1.0 - x[0] * math.cos(5.0 * math.pi * x[0]) ** 2)
        return [x[-1] + 2.0 * (i + 1) * h[i] for i in range(m)]

    if index == 4:
        y = [_o_s_multi(v, 30.0, 10.0, 0.35) for v in y]
        return final(groups(y), degenerate(False), sh_concave)

    if index == 5:
        y = [_o_s_decept(v, 0.35, 0.001, 0.05) for v in y]
        return final(groups(y), degenerate(False), sh_concave)

    if index == 6:
        y = y[:k] + [_o_s_linear(v, 0.35) for v in y[k:]]
        gap = k // (m - 1)
        t = [_o_r_nonsep(y[i * gap : (i + 1) * gap], gap) for i in range(m - 1)]
        t.append(_o_r_nonsep(y[k:], l))
        return final(t, degenerate(False), sh_concave)

    if index == 7:
        yy = list(y)
        for i in range(k):
            u = _o_r_sum(y[i + 1 :], [1.0] * (n - i - 1))
            yy[i] = _o_b_param(y[i], u, 0.98 / 49.98, 0.02, 50.0)
        yy = yy[:k] + [_o_s_linear(v, 0.35) for v in yy[k:]]
        return final(groups(yy), degenerate(False), sh_concave)

    if index == 8:
        yy = list(y)
        for i in range(k, n):
            u = _o_r_sum(y[:i], [1.0] * i)
            yy[i] = _o_b_param(y[i], u, 0.98 / 49.98, 0.02, 50.0)
        yy = yy[:k] + [_o_s_linear(v, 0.35) for v in yy[k:]]
        return final(groups(yy), degenerate(False), sh_concave)

    if index == 9:
        yy = list(y)
        for i in range(n - 1):
            u = _o_r_sum(y[i + 1 :], [1.0] * (n - i - 1))
            yy[i] = _o_b_param(y[i], u, 0.98 / 49.98, 0.02, 50.0)
        yy = [_o_s_decept(v, 0.35, 0.001, 0.05) for v in yy[:k]] + [
            _o_s_multi(v, 30.0, 95.0, 0.35) for v in yy[k:]
        ]
        gap = k // (m - 1)
        t = [_o_r_nonsep(yy[i * gap : (i + 1) * gap], gap) for i in range(m - 1)]
        t.append(_o_r_nonsep(yy[k:], l))
        return final(t, degenerate(False), sh_concave)

    raise AssertionError


# ---------------------------------------------------------------------------
# Cross-checks against the oracles
# ---------------------------------------------------------------------------


@pytest.mark.parametrize("index", [1, 2, 3, 4])
@pytest.mark.parametrize("m", [2, 3, 5])
def test_dtlz_matches_scalar_oracle(index, m):
    p = make_problem(f"DTLZ{index}", m)
    rng = np.random.default_rng(100 + index)
    for _ in range(25):
        x = rng.random(p.n_var)
        expect = oracle_dtlz(index, list(x), m)
        got = dtlz_evaluate(index, x, m)
        assert np.allclose(got, expect, rtol=1e-12, atol=1e-12)


@pytest.mark.parametrize("index", range(1, 10))
@pytest.mark.parametrize("m", [2, 3, 5])
def test_wfg_matches_scalar_oracle(index, m):
    p = make_problem(f"WFG{index}", m)
    rng = np.random.default_rng(200 + index)
    for _ in range(15):
        x = p.lower + rng.random(p.n_var) * (p.upper - p.lower)
        expect = oracle_wfg(index, list(x), m, p.k)
        got = wfg_evaluate(index, x, m, p.k)
        assert np.allclose(got, expect, rtol=1e-11, atol=1e-11)


# Input/output pairs from an independent public WFG implementation
# (n_var=10, n_obj=3, position parameters k=2). The WFG1 outputs appear to
# have been generated in single precision, hence the looser tolerance.
EXTERNAL_WFG_CASES = {
    1: (
        [
            [1.08854981319285, 2.88336864817126, 2.26151969048427, 6.85587897325909, 5.50774672114278,
             11.3619491740763, 0.993607643502324, 12.7476499626573, 9.51749373544387, 13.9469154321725],
            [0.604916530645588, 2.83243236846361, 1.08564315191318, 1.65613202529189, 9.92817774785589,
             8.67400816509106, 10.6090373570489, 2.20562483724899, 12.0117687538961, 2.33741938579107],
        ],
        [
            [2.92779802578131, 0.986101160484812, 0.987627609921421],
            [2.89581163838436, 0.991072950155688, 1.00352028156932],
        ],
        5e-6,
    ),
    2: (
        [
            [1.51215634670685, 1.98046188620202, 2.17123205516798, 4.28272264683346, 1.67560302649847,
             7.45865072083838, 10.3456568199683, 3.17408245839211, 17.5922307989805, 2.22789613281489],
        ],
        [[0.823269169947225, 1.21047059380468, 3.7645144707503]],
        1e-9,
    ),
    3: (
        [
            [1.38663349883148, 1.39095701793336, 1.00651400424944, 1.08124749578659, 3.08488862377431,
             7.97168781965395, 7.76075416049597, 2.66837163922627, 5.08502619704711, 15.0825267506388],
        ],
        [[1.06023017837464, 2.04814437461039, 2.30521208140447]],
        1e-9,
    ),
    4: (
        [
            [1.13783890382196, 0.39981342549122, 2.57104400359446, 7.38059326152385, 0.18024697236177,
             4.76511856888059, 4.94868612529733, 5.03603867466566, 1.57950371631846, 5.02059681386812],
        ],
        [[0.706332603289956, 1.14447455569412, 6.03537463248557]],
        1e-9,
    ),
    5: (
        [
            [1.2658018033216, 3.18868341877624, 3.21674728712595, 2.08766437576511, 1.87500134447649,
             9.21098472567939, 2.30814691679358, 1.25584817131949, 17.7385278296678, 8.30370524977232],
        ],
        [[1.34888749224017, 3.24939082730017, 4.14487961342243]],
        1e-9,
    ),
    6: (
        [
            [1.94501871330945, 1.86960168990496, 1.96989048063627, 3.06779485183013, 4.84162319219383,
             4.75928430895196, 5.85331053617453, 13.2513660474365, 0.510286690310382, 18.6552194512127],
        ],
        [[2.1088891146428, 3.7368890934722, 1.0291775489388]],
        1e-9,
    ),
    7: (
        [
            [0.337549438578628, 1.55921659024094, 4.94553476741995, 1.6283190933529, 4.19639449341452,
             2.66295392887256, 6.3802812867656, 2.50662348019979, 11.3208749535504, 13.7398730938539],
        ],
        [[0.806046258534732, 1.40520487476877, 6.09953804366995]],
        1e-9,
    ),
}


@pytest.mark.parametrize("index", sorted(EXTERNAL_WFG_CASES))
def test_wfg_matches_external_reference(index):
    X, Y, atol = EXTERNAL_WFG_CASES[index]
    for x, y in zip(X, Y):
        got = wfg_evaluate(index, np.asarray(x), 3, 2)
        assert np.allclose(got, y, atol=atol)


# ---------------------------------------------------------------------------
# Structural properties
# ---------------------------------------------------------------------------


class TestConventions:
    def test_variable_counts(self):
        assert make_problem("DTLZ1", 3).n_var == 7
        assert make_problem("DTLZ2", 3).n_var == 12
        assert make_problem("DTLZ4", 5).n_var == 14
        assert make_problem("WFG1", 3).n_var == 24
        assert make_problem("WFG9", 5).n_var == 28

    def test_wfg_bounds(self):
        p = make_problem("WFG3", 3)
        assert np.array_equal(p.upper, 2.0 * np.arange(1, 25))
        assert np.array_equal(p.lower, np.zeros(24))

    def test_unknown_problem(self):
        with pytest.raises(ValueError):
            make_problem("ZDT1", 2)


class TestEvaluate:
    def test_dtlz1_front_condition(self):
        p = make_problem("DTLZ1", 3)
        rng = np.random.default_rng(5)
        for _ in range(10):
            x = np.concatenate([rng.random(2), np.full(5, 0.5)])
            assert evaluate(p, x).sum() == pytest.approx(0.5, abs=1e-12)

    def test_dtlz2_unit_sphere_front(self):
        p = make_problem("DTLZ2", 3)
        rng = np.random.default_rng(6)
        for _ in range(10):
            x = np.concatenate([rng.random(2), np.full(10, 0.5)])
            assert np.linalg.norm(evaluate(p, x)) == pytest.approx(1.0, abs=1e-12)

    def test_dtlz_norm_at_least_one(self):
        rng = np.random.default_rng(7)
        for name in ("DTLZ2", "DTLZ3", "DTLZ4"):
            p = make_problem(name, 3)
            for _ in range(50):
                f = evaluate(p, rng.random(p.n_var))
                assert np.linalg.norm(f) >= 1.0 - 1e-12

    def test_wfg_objective_ranges(self):
        # f_i = x_M + 2i * h_i with x_M in [0,1] and h_i in [0,1].
        rng = np.random.default_rng(8)
        for index in range(1, 10):
            p = make_problem(f"WFG{index}", 3)
            X = p.lower + rng.random((200, p.n_var)) * (p.upper - p.lower)
            F = np.array([evaluate(p, x) for x in X])
            assert np.all(F >= -1e-9)
            assert np.all(F <= 2.0 * np.arange(1, 4) + 1.0 + 1e-9)

    def test_all_objectives_nonnegative(self):
        rng = np.random.default_rng(9)
        for name in ("DTLZ1", "DTLZ3", "WFG2", "WFG8"):
            p = make_problem(name, 3)
            for _ in range(30):
                x = p.lower + rng.random(p.n_var) * (p.upper - p.lower)
                assert np.all(evaluate(p, x) >= -1e-12)

    def test_deterministic(self):
        p = make_problem("WFG5", 3)
        x = p.lower + np.random.default_rng(1).random(p.n_var) * (p.upper - p.lower)
        assert np.array_equal(evaluate(p, x), evaluate(p, x))

    def test_input_validation(self):
        p = make_problem("DTLZ1", 3)
        with pytest.raises(ValueError):
            evaluate(p, np.zeros(6))
        with pytest.raises(ValueError):
            evaluate(p, np.full(7, 1.5))


class TestAnalyticBounds:
    def test_dtlz1_nadir(self):
        b = analytic_bounds(make_problem("DTLZ1", 3))
        assert np.array_equal(b.nadir, [0.5, 0.5, 0.5])
        assert np.array_equal(b.ideal, np.zeros(3))

    def test_dtlz3_nadir(self):
        b = analytic_bounds(make_problem("DTLZ3", 5))
        assert np.array_equal(b.nadir, np.ones(5))

    def test_wfg7_nadir(self):
        b = analytic_bounds(make_problem("WFG7", 3))
        assert np.array_equal(b.nadir, [2.0, 4.0, 6.0])

    def test_is_valid_normalization_frame(self):
        for name in ("DTLZ1", "DTLZ2", "WFG1"):
            assert isinstance(analytic_bounds(make_problem(name, 4)), NormalizationBounds)


class TestParetoReference:
    def test_dtlz1_points_on_linear_front(self):
        p = make_problem("DTLZ1", 3)
        pts = sample_pareto_reference(p, 50, seed=1)
        assert pts.shape == (50, 3)
        assert np.allclose(pts.sum(axis=1), 0.5, atol=1e-12)

    def test_dtlz2_points_on_sphere(self):
        p = make_problem("DTLZ2", 4)
        pts = sample_pareto_reference(p, 64, seed=2)
        assert np.allclose(np.linalg.norm(pts, axis=1), 1.0, atol=1e-12)

    def test_single_point(self):
        p = make_problem("DTLZ3", 3)
        assert sample_pareto_reference(p, 1, seed=3).shape == (1, 3)

    def test_deterministic_per_seed(self):
        p = make_problem("DTLZ4", 3)
        a = sample_pareto_reference(p, 10, seed=4)
        b = sample_pareto_reference(p, 10, seed=4)
        assert np.array_equal(a, b)

    def test_wfg_not_supported(self):
        with pytest.raises(ValueError):
            sample_pareto_reference(make_problem("WFG1", 3), 5, seed=0)

    def test_n_must_be_positive(self):
        with pytest.raises(ValueError):
            sample_pareto_reference(make_problem("DTLZ1", 3), 0, seed=0)
