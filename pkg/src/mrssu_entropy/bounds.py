"""Sandwich bounds, stochastic-order verifiers, reliability classes and the
executable theorem suite.

The order checks and class checks are grid-based numerical verifications
with weak inequalities: they verify on a finite grid, they do not prove.
The theorem suite evaluates each comparison result's hypothesis with these
verifiers and, where it holds, asserts the conclusion numerically, emitting
a JSON-serializable ledger.
"""
from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .cumulative import (
    cte_dynamic,
    cte_dynamic_mrssu,
    cte_dynamic_srs,
    cte_linear_transform,
    cte_mrssu,
    cte_srs,
)
from .distributions import DistributionModel, Exponential, PowerLaw, Uniform, max_order_stat
from .errors import DomainError, InfeasibleConstruction
from .residual import tail_quantile_power_integral
from .special import DEFAULT_TOL, integrate_interval
from .tsallis import (
    _alpha_of,
    mrssu_exponential_closed,
    mrssu_uniform_closed,
    tsallis_mrssu,
    tsallis_srs,
)

ORDER_KINDS = ("st", "hr", "disp", "convex", "star", "superadditive")
RELIABILITY_CLASSES = ("IFR", "DFR", "IFRA", "NBU")

GRID_TOL = 1e-9


@dataclass(frozen=True)
class BoundInterval:
    """Sandwich (m, M) with the orientation keyed to the alpha regime."""

    m: float
    M: float
    orientation: str  # "m-below-M" or "M-below-m"

    @property
    def lower(self) -> float:
        return self.m if self.orientation == "m-below-M" else self.M

    @property
    def upper(self) -> float:
        return self.M if self.orientation == "m-below-M" else self.m

    def contains(self, value: float, tol: float = 1e-9) -> bool:
        return self.lower - tol <= value <= self.upper + tol


@dataclass(frozen=True)
class OrderCheckReport:
    order: str
    holds: bool
    witness: object = None  # first violating grid point, when holds is False


def phi(alpha, n: int) -> float:
    """Ratio bound (n+1)**alpha / (n alpha + 1) governing growth in n."""
    a = float(alpha)
    if not a > 0:
        raise DomainError("alpha must be positive")
    if n < 1:
        raise DomainError("n must be >= 1")
    return (n + 1) ** a / (n * a + 1.0)


def density_monotonicity(model: DistributionModel, grid_size: int = 512, tol: float = GRID_TOL) -> str:
    """Classify the density as 'nonincreasing', 'nondecreasing' or 'none'."""
    us = (np.arange(grid_size) + 0.5) / grid_size
    vals = np.array([model.density_quantile(u) for u in us])
    diffs = np.diff(vals)
    if np.all(diffs <= tol * np.maximum(1.0, np.abs(vals[:-1]))):
        return "nonincreasing"
    if np.all(diffs >= -tol * np.maximum(1.0, np.abs(vals[:-1]))):
        return "nondecreasing"
    return "none"


def steffensen_bounds(
    model, alpha, n: int, tol=DEFAULT_TOL, variant: str = "proof"
) -> BoundInterval:
    """Steffensen sandwich for the MRSSU Tsallis entropy.

    The factor integrals are clipped to the first and last lambda_i of the
    unit interval, lambda_i = 1/(alpha(i-1)+1).  The 'proof' variant drops
    the u**(alpha(i-1)) weight inside the clipped integrals, which is the
    form Steffensen's inequality actually yields; the 'statement' variant
    keeps the weight.  Requires a monotone density.

    For a nonincreasing density the head-clipped product always yields the
    lower entropy bound: the quantile-domain integrand f**(alpha-1) flips
    monotonicity with the sign of alpha-1 and that flip cancels against the
    sign of the 1/(1-alpha) prefactor.  A nondecreasing density reverses
    this.  The m/M labels are keyed to the alpha regime: m <= S <= M for
    alpha < 1 and M <= S <= m for alpha > 1.
    """
    a = _alpha_of(alpha)
    if n < 1:
        raise DomainError("n must be >= 1")
    mono = density_monotonicity(model)
    if mono == "none":
        raise DomainError("Steffensen construction needs a monotone density")
    prod_tail, prod_head = 1.0, 1.0
    for i in range(1, n + 1):
        lam = 1.0 / (a * (i - 1) + 1.0)
        p = a * (i - 1) if variant == "statement" else 0.0
        tail, _, _ = tail_quantile_power_integral(model, p, 0.0, a, 1.0 - lam, tol=tol)
        if lam == 1.0:
            head = tail
        else:
            full, _, _ = tail_quantile_power_integral(model, p, 0.0, a, 0.0, tol=tol)
            upper_tail, _, _ = tail_quantile_power_integral(model, p, 0.0, a, lam, tol=tol)
            head = full - upper_tail
        prod_tail *= i**a * tail
        prod_head *= i**a * head
    from_tail = (prod_tail - 1.0) / (1.0 - a)
    from_head = (prod_head - 1.0) / (1.0 - a)
    if mono == "nonincreasing":
        lower, upper = from_head, from_tail
    else:
        lower, upper = from_tail, from_head
    if a < 1.0:
        return BoundInterval(lower, upper, "m-below-M")
    return BoundInterval(upper, lower, "M-below-m")


def hayashi_bounds(model, alpha, t: float, n: int, tol=DEFAULT_TOL) -> BoundInterval:
    """Hayashi sandwich for the dynamic MRSSU cumulative Tsallis entropy.

    Raises InfeasibleConstruction when the derived cut length lies outside
    the truncation window [lower, t].
    """
    a = _alpha_of(alpha)
    if n < 1:
        raise DomainError("n must be >= 1")
    Ft = model.cdf(t)
    if Ft <= 0.0 or not math.isfinite(t):
        raise DomainError("need a finite t with F(t) > 0")
    lo = model.support[0]
    A = Ft ** (-a)
    ce_t = cte_dynamic(model, a, t, tol=tol).value
    lam = ((1.0 - a) * ce_t + 1.0) / A
    if not lo <= lam <= t:
        raise InfeasibleConstruction(
            f"cut length {lam} outside the window [{lo}, {t}]"
        )
    prod_m, prod_M = 1.0, 1.0
    for i in range(1, n + 1):
        expo = a * (i - 1)
        head = integrate_interval(lambda x: (model.cdf(x) / Ft) ** expo, lo, lam, tol=tol)
        tail = integrate_interval(lambda x: (model.cdf(x) / Ft) ** expo, t - lam, t, tol=tol)
        prod_m *= head.value
        prod_M *= tail.value
    m1 = (A**n * prod_m - 1.0) / (1.0 - a)
    M1 = (A**n * prod_M - 1.0) / (1.0 - a)
    orientation = "m-below-M" if a < 1.0 else "M-below-m"
    return BoundInterval(m1, M1, orientation)


# ---------------------------------------------------------------------------
# Stochastic orders and reliability classes
# ---------------------------------------------------------------------------


def _interior_grid(model, grid_size):
    us = (np.arange(grid_size) + 0.5) / grid_size
    return np.array([model.quantile(u) for u in us])


def _composite_quantile(X, Y, u):
    """G^{-1}(F(x)) evaluated through the u-grid of X."""
    return Y.quantile(min(max(X.cdf(X.quantile(u)), 1e-15), 1.0 - 1e-15))


def check_order(kind: str, X, Y, grid_size: int = 512, tol: float = GRID_TOL) -> OrderCheckReport:
    """Grid verification of 'X smaller than Y' in the named stochastic order."""
    if kind not in ORDER_KINDS:
        raise DomainError(f"unknown order {kind!r}")
    if grid_size < 16:
        raise DomainError("grid_size must be >= 16")
    us = (np.arange(grid_size) + 0.5) / grid_size

    if kind == "st":
        hi = max(X.quantile(1.0 - 0.5 / grid_size), Y.quantile(1.0 - 0.5 / grid_size))
        lo = min(X.support[0], Y.support[0])
        for x in np.linspace(lo, hi, grid_size):
            if X.cdf(x) < Y.cdf(x) - tol:
                return OrderCheckReport(kind, False, float(x))
        return OrderCheckReport(kind, True)

    if kind == "disp":
        for u in us:
            if X.density_quantile(u) < Y.density_quantile(u) - tol:
                return OrderCheckReport(kind, False, float(u))
        return OrderCheckReport(kind, True)

    if kind == "hr":
        for u in us:
            x = X.quantile(u)
            if Y.cdf(x) >= 1.0:
                continue
            if X.hazard(x) < Y.hazard(x) - tol:
                return OrderCheckReport(kind, False, float(x))
        return OrderCheckReport(kind, True)

    # transform-based orders work through h(x) = G^{-1}(F(x))
    xs = _interior_grid(X, grid_size)
    hs = np.array([Y.quantile(min(max(X.cdf(x), 1e-15), 1.0 - 1e-15)) for x in xs])

    if kind == "convex":
        # uneven grid: check convexity through divided differences
        for j in range(len(xs) - 2):
            x0, x1, x2 = xs[j], xs[j + 1], xs[j + 2]
            s1 = (hs[j + 1] - hs[j]) / (x1 - x0)
            s2 = (hs[j + 2] - hs[j + 1]) / (x2 - x1)
            if s2 < s1 - tol * max(1.0, abs(s1)):
                return OrderCheckReport(kind, False, float(x1))
        return OrderCheckReport(kind, True)

    if kind == "star":
        ratios = hs / xs
        for j in range(len(xs) - 1):
            if ratios[j + 1] < ratios[j] - tol * max(1.0, abs(ratios[j])):
                return OrderCheckReport(kind, False, float(xs[j + 1]))
        return OrderCheckReport(kind, True)

    # superadditive
    def h(x):
        return Y.quantile(min(max(X.cdf(x), 1e-15), 1.0 - 1e-15))

    hi = X.quantile(1.0 - 0.5 / grid_size)
    lo = X.support[0]
    pts = np.linspace(lo, hi, max(16, grid_size // 8))
    for tv in pts:
        for uv in pts:
            if tv + uv >= hi:
                continue
            if h(tv + uv) < h(tv) + h(uv) - tol * max(1.0, abs(h(tv + uv))):
                return OrderCheckReport(kind, False, (float(tv), float(uv)))
    return OrderCheckReport(kind, True)


def classify_reliability(
    model, klass: str, grid_size: int = 512, tol: float = GRID_TOL, literal_ifra: bool = False
) -> OrderCheckReport:
    """Grid verification of an aging class membership.

    IFRA uses the cumulative-hazard average -log(sf(x))/x by default; the
    literal hazard-over-x reading is available via ``literal_ifra``.
    """
    if klass not in RELIABILITY_CLASSES:
        raise DomainError(f"unknown reliability class {klass!r}")
    xs = _interior_grid(model, grid_size)

    if klass in ("IFR", "DFR"):
        hz = np.array([model.hazard(x) for x in xs])
        sign = 1.0 if klass == "IFR" else -1.0
        for j in range(len(xs) - 1):
            if sign * (hz[j + 1] - hz[j]) < -tol * max(1.0, abs(hz[j])):
                return OrderCheckReport(klass, False, float(xs[j + 1]))
        return OrderCheckReport(klass, True)

    if klass == "IFRA":
        if literal_ifra:
            vals = np.array([model.hazard(x) / x for x in xs if x > 0])
        else:
            vals = np.array([-math.log(max(model.sf(x), 1e-300)) / x for x in xs if x > 0])
        for j in range(len(vals) - 1):
            if vals[j + 1] < vals[j] - tol * max(1.0, abs(vals[j])):
                return OrderCheckReport(klass, False, float(xs[j + 1]))
        return OrderCheckReport(klass, True)

    # NBU: sf(t + u) <= sf(t) * sf(u)
    hi = model.quantile(1.0 - 0.5 / grid_size)
    pts = np.linspace(model.support[0], hi, max(16, grid_size // 8))
    for tv in pts:
        for uv in pts:
            lhs = model.sf(tv + uv)
            rhs = model.sf(tv) * model.sf(uv)
            if lhs > rhs + tol * max(1.0, rhs):
                return OrderCheckReport(klass, False, (float(tv), float(uv)))
    return OrderCheckReport(klass, True)


# ---------------------------------------------------------------------------
# Grid convolution used by the log-concave sum comparison
# ---------------------------------------------------------------------------


def _component_entropy_of_sum(X, Y, i, alpha, resolution=2048):
    """Tsallis entropy of X_(i)i + Y_(i)i by trapezoidal grid convolution."""
    lx = max_order_stat(X, i)
    ly = max_order_stat(Y, i)
    hx = _truncation_point(X)
    hy = _truncation_point(Y)
    h = hx + hy
    dx = h / (2 * resolution)
    grid = np.arange(2 * resolution + 1) * dx
    fx = np.array([lx.pdf(x) for x in grid])
    fy = np.array([ly.pdf(x) for x in grid])
    conv = np.convolve(fx, fy)[: 2 * len(grid)] * dx
    cgrid = np.arange(len(conv)) * dx
    integrand = conv**alpha
    total = np.trapezoid(integrand, cgrid)
    return (total - 1.0) / (1.0 - alpha)


def _truncation_point(model):
    hi = model.support[1]
    return hi if math.isfinite(hi) else model.quantile(1.0 - 1e-9)


def convolution_mrssu_entropy(X, Y, alpha, n: int, resolution: int = 2048) -> float:
    """MRSSU entropy of the componentwise sum of two independent designs."""
    if n > 2:
        raise DomainError("grid convolution check is capped at n = 2")
    a = _alpha_of(alpha)
    value = 0.0
    for i in range(1, n + 1):
        s = _component_entropy_of_sum(X, Y, i, a, resolution)
        value = value + s + (1.0 - a) * value * s
    return value


# ---------------------------------------------------------------------------
# Theorem suite
# ---------------------------------------------------------------------------

DEFAULT_MODELS = (
    ("uniform(b=0.5)", Uniform(0.5)),
    ("uniform(b=1)", Uniform(1.0)),
    ("uniform(b=2)", Uniform(2.0)),
    ("exp(theta=0.5)", Exponential(0.5)),
    ("exp(theta=1)", Exponential(1.0)),
    ("exp(theta=2)", Exponential(2.0)),
    ("beta(theta=2)", PowerLaw(2.0)),
)
DEFAULT_ALPHAS = (0.25, 0.5, 2.0, 3.0)
DEFAULT_NS = (1, 2, 3, 4)

_CONCLUSION_TOL = 1e-8


def _entry(theorem, instance, hypothesis, conclusion, witness=None):
    return {
        "theorem": theorem,
        "instance": instance,
        "hypothesis": hypothesis,
        "conclusion": conclusion,
        "witness": witness,
    }


def _leq(a, b):
    return a <= b + _CONCLUSION_TOL * max(1.0, abs(a), abs(b))


def theorem_suite(models=None, alpha_grid=None, n_grid=None, tol=DEFAULT_TOL):
    """Numerically evaluate every comparison theorem; returns the ledger.

    Entries whose hypothesis fails on the grid are marked 'skipped'.  Known
    printed-direction discrepancies are reported as 'deviation-documented'
    rather than hard failures.
    """
    models = list(models or DEFAULT_MODELS)
    alphas = list(alpha_grid or DEFAULT_ALPHAS)
    ns = list(n_grid or DEFAULT_NS)
    ledger = []

    # factor inequality between MRSSU and SRS products
    for name, model in models:
        for a in alphas:
            for n in ns:
                lhs = (1.0 - a) * tsallis_mrssu(model, a, n, tol=tol).value + 1.0
                rhs = math.factorial(n) ** a * (
                    (1.0 - a) * tsallis_srs(model, a, n, tol=tol).value + 1.0
                )
                ok = _leq(lhs, rhs)
                ledger.append(
                    _entry("2.1", {"model": name, "alpha": a, "n": n}, "holds",
                           "pass" if ok else "fail",
                           None if ok else {"lhs": lhs, "rhs": rhs})
                )

    # order-based MRSSU comparisons; 2.3 and 2.4 are proved through a cited
    # implication into the dispersive order, so that implication is part of
    # what must verify numerically before the conclusion is asserted.  Pairs
    # where the stated order holds but the dispersive step breaks are
    # skipped with an explanatory witness.
    order_theorems = [
        ("2.2", lambda X, Y: check_order("disp", X, Y).holds),
        ("2.3", lambda X, Y: check_order("hr", X, Y).holds
         and (classify_reliability(X, "DFR").holds or classify_reliability(Y, "DFR").holds)),
        ("2.4", lambda X, Y: check_order("superadditive", X, Y).holds
         or check_order("star", X, Y).holds or check_order("convex", X, Y).holds),
    ]
    for theorem, hypothesis in order_theorems:
        for xname, X in models:
            for yname, Y in models:
                if xname == yname:
                    continue
                inst = {"X": xname, "Y": yname}
                if not hypothesis(X, Y):
                    ledger.append(_entry(theorem, inst, "fails", "skipped"))
                    continue
                if theorem != "2.2" and not check_order("disp", X, Y).holds:
                    ledger.append(
                        _entry(theorem, inst, "fails", "skipped",
                               {"note": "stated order holds but the cited implication "
                                        "into the dispersive order fails for this pair"})
                    )
                    continue
                bad = None
                for a in alphas:
                    for n in ns:
                        sx = tsallis_mrssu(X, a, n, tol=tol).value
                        sy = tsallis_mrssu(Y, a, n, tol=tol).value
                        if not _leq(sx, sy):
                            bad = {"alpha": a, "n": n, "S_X": sx, "S_Y": sy}
                            break
                    if bad:
                        break
                ledger.append(
                    _entry(theorem, inst, "holds", "fail" if bad else "pass", bad)
                )

    # decreasing density with f(0) <= 1: lower bound by the uniform closed form
    for name, model in models:
        f0 = model.density_quantile(1e-12)
        hyp = density_monotonicity(model) == "nonincreasing" and f0 <= 1.0 + GRID_TOL
        inst = {"model": name}
        if not hyp:
            ledger.append(_entry("2.5", inst, "fails", "skipped"))
            continue
        bad = None
        for a in alphas:
            for n in ns:
                s = tsallis_mrssu(model, a, n, tol=tol).value
                ref = mrssu_uniform_closed(a, n, 1.0).value
                if not _leq(ref, s):
                    bad = {"alpha": a, "n": n, "S": s, "uniform_ref": ref}
                    break
            if bad:
                break
        ledger.append(_entry("2.5", inst, "holds", "fail" if bad else "pass", bad))

    # aging classes: upper bound by the matched-mean exponential closed form.
    # The proof runs through the dispersive order against the exponential
    # reference, and the reference scale is unspecified in the source, so
    # the dispersive step against the matched-mean exponential is part of
    # the hypothesis being verified.
    for name, model in models:
        inst = {"model": name}
        if not any(classify_reliability(model, k).holds for k in ("IFR", "IFRA", "NBU")):
            ledger.append(_entry("2.6", inst, "fails", "skipped"))
            continue
        theta = 1.0 / model.mean()
        if not check_order("disp", model, Exponential(theta)).holds:
            ledger.append(
                _entry("2.6", inst, "fails", "skipped",
                       {"note": "aging class holds but the matched-mean exponential "
                                "is not dispersively larger", "theta": theta})
            )
            continue
        bad = None
        for a in alphas:
            for n in ns:
                s = tsallis_mrssu(model, a, n, tol=tol).value
                ref = mrssu_exponential_closed(a, n, theta).value
                if not _leq(s, ref):
                    bad = {"alpha": a, "n": n, "S": s, "exp_ref": ref, "theta": theta}
                    break
            if bad:
                break
        ledger.append(_entry("2.6", inst, "holds", "fail" if bad else "pass", bad))

    # log-concave convolution comparison (grid-based, n <= 2)
    logconcave = {n: m for n, m in models if isinstance(m, (Uniform, Exponential))}
    conv_pair_names = [
        ("uniform(b=1)", "uniform(b=1)"),
        ("uniform(b=1)", "exp(theta=1)"),
        ("exp(theta=1)", "exp(theta=1)"),
        ("exp(theta=1)", "exp(theta=2)"),
    ]
    conv_pairs = [
        ((xn, logconcave[xn]), (yn, logconcave[yn]))
        for xn, yn in conv_pair_names
        if xn in logconcave and yn in logconcave
    ]
    for (xn, X), (yn, Y) in conv_pairs:
        inst = {"X": xn, "Y": yn}
        bad = None
        for a in (0.5, 2.0):
            for n in (1, 2):
                s_sum = convolution_mrssu_entropy(X, Y, a, n)
                s_max = max(
                    tsallis_mrssu(X, a, n, tol=tol).value,
                    tsallis_mrssu(Y, a, n, tol=tol).value,
                )
                # grid-convolution accuracy dominates the tolerance here
                if not s_sum >= s_max - 5e-3:
                    bad = {"alpha": a, "n": n, "S_sum": s_sum, "S_max": s_max}
                    break
            if bad:
                break
        ledger.append(_entry("2.7", inst, "holds", "fail" if bad else "pass", bad))

    # monotonicity in n when the density-quantile stays >= 1
    for name, model in models:
        us = (np.arange(128) + 0.5) / 128
        hyp = all(model.density_quantile(u) >= 1.0 - GRID_TOL for u in us)
        inst = {"model": name}
        if not hyp:
            ledger.append(_entry("2.8", inst, "fails", "skipped"))
            continue
        for a in alphas:
            seq = [tsallis_mrssu(model, a, n, tol=tol).value for n in range(1, 6)]
            diffs = [seq[k + 1] - seq[k] for k in range(4)]
            empirically = (
                "nonincreasing" if all(d <= _CONCLUSION_TOL for d in diffs)
                else "nondecreasing" if all(d >= -_CONCLUSION_TOL for d in diffs)
                else "none"
            )
            claimed = "nonincreasing" if a < 1 else "nondecreasing"
            status = "pass" if empirically == claimed else "deviation-documented"
            ledger.append(
                _entry("2.8", {**inst, "alpha": a}, "holds", status,
                       {"claimed": claimed, "empirical": empirically, "sequence": seq})
            )

    # CTE comparisons need finite cdf-power integrals, i.e. bounded support
    bounded = [(n, m) for n, m in models if math.isfinite(m.support[1])]

    for name, model in bounded:
        bad = None
        for a in alphas:
            for n in ns:
                cm = cte_mrssu(model, a, n, tol=tol).value
                cs = cte_srs(model, a, n, tol=tol).value
                ok = _leq(cm, cs) if a < 1 else _leq(cs, cm)
                if not ok:
                    bad = {"alpha": a, "n": n, "mrssu": cm, "srs": cs}
                    break
            if bad:
                break
        ledger.append(_entry("3.1", {"model": name}, "holds", "fail" if bad else "pass", bad))

    for xname, X in bounded:
        for yname, Y in bounded:
            if xname == yname:
                continue
            inst = {"X": xname, "Y": yname}
            if not check_order("st", X, Y).holds:
                ledger.append(_entry("3.2", inst, "fails", "skipped"))
                continue
            # the pointwise cdf-domination argument compares the integrals
            # over a common horizon; with different support tops the
            # per-support CTE integrals are not comparable that way
            if X.support[1] != Y.support[1]:
                ledger.append(
                    _entry("3.2", inst, "fails", "skipped",
                           {"note": "support tops differ; common-horizon comparison inapplicable"})
                )
                continue
            bad = None
            for a in alphas:
                for n in ns:
                    cx = cte_mrssu(X, a, n, tol=tol).value
                    cy = cte_mrssu(Y, a, n, tol=tol).value
                    ok = _leq(cy, cx) if a < 1 else _leq(cx, cy)
                    if not ok:
                        bad = {"alpha": a, "n": n, "X": cx, "Y": cy}
                        break
                if bad:
                    break
            ledger.append(_entry("3.2", inst, "holds", "fail" if bad else "pass", bad))

    for name, model in bounded:
        bad = None
        for a in alphas:
            for scale, shift in ((2.0, 0.0), (0.5, 1.0), (1.0, 3.0)):
                for n in (1, 2, 3):
                    rep = cte_linear_transform(model, scale, shift, a, n, tol=tol)
                    if abs(rep.difference) > 1e-8 * max(1.0, abs(rep.lhs)):
                        bad = {"alpha": a, "a": scale, "b": shift, "n": n,
                               "lhs": rep.lhs, "rhs": rep.rhs}
                        break
                if bad:
                    break
            if bad:
                break
        ledger.append(_entry("3.3", {"model": name}, "holds", "fail" if bad else "pass", bad))

    for name, model in bounded:
        hi = model.support[1]
        bad = None
        for a in alphas:
            for t in (0.25 * hi, 0.5 * hi, 0.8 * hi):
                for n in (1, 2, 3):
                    cm = cte_dynamic_mrssu(model, a, n, t, tol=tol).value
                    cs = cte_dynamic_srs(model, a, n, t, tol=tol).value
                    ok = _leq(cm, cs) if a < 1 else _leq(cs, cm)
                    if not ok:
                        bad = {"alpha": a, "t": t, "n": n, "mrssu": cm, "srs": cs}
                        break
                if bad:
                    break
            if bad:
                break
        ledger.append(_entry("3.4", {"model": name}, "holds", "fail" if bad else "pass", bad))

    return ledger


def suite_has_hard_failures(ledger) -> bool:
    return any(e["conclusion"] == "fail" for e in ledger)
