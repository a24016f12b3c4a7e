"""Cumulative Tsallis entropy (CTE) and its relatives.

Covers the CTE and its dynamic (truncated) version, the design-level SRS and
MRSSU forms, the alternate difference-based measure, the logarithmic failure
entropy, the proportional-reversed-hazard transform identities and the
linear-transformation identity.

Every measure here reduces to integrals of powers of the cdf.  For any model
with unbounded upper support that integral diverges (the integrand tends to
1), which is surfaced as a DivergenceError rather than an infinite value.
"""
from __future__ import annotations

import math
from dataclasses import dataclass

from .distributions import (
    AffineTransform,
    DistributionModel,
    PowerLaw,
    TransformedCdfPower,
    Uniform,
)
from .errors import DivergenceError, DomainError
from .special import DEFAULT_TOL, integrate_interval, integrate_unit
from .tsallis import (
    METHOD_CLOSED,
    METHOD_QUAD,
    DesignSpec,
    EntropyReport,
    _alpha_of,
    _combine,
    _worst_method,
)


@dataclass(frozen=True)
class IdentityReport:
    """Both sides of an identity computed independently."""

    lhs: float
    rhs: float

    @property
    def difference(self) -> float:
        return self.lhs - self.rhs


@dataclass(frozen=True)
class PrhrmReport:
    """Transform identity check under the reversed-hazard power transform.

    ``rhs_shifted_order`` evaluates the base measure at order theta*alpha,
    which is the algebraically exact reading; ``rhs_same_order`` keeps the
    original order on both sides.
    """

    lhs: float
    rhs_shifted_order: float
    rhs_same_order: float

    @property
    def shifted_order_holds(self) -> bool:
        return abs(self.lhs - self.rhs_shifted_order) <= 1e-9 * max(1.0, abs(self.lhs))

    @property
    def same_order_holds(self) -> bool:
        return abs(self.lhs - self.rhs_same_order) <= 1e-9 * max(1.0, abs(self.lhs))


def cdf_power_integral(
    model: DistributionModel, p: float, tol: float = DEFAULT_TOL, method: str = "auto"
) -> tuple[float, float, str]:
    """Integral of F(x)**p over the support; diverges for unbounded support."""
    if p <= 0:
        raise DomainError(f"cdf power must be positive, got {p}")
    lo, hi = model.support
    if math.isinf(hi):
        raise DivergenceError(
            "integral of F**p diverges on unbounded support (integrand tends to 1)"
        )
    if method in ("auto", METHOD_CLOSED):
        if isinstance(model, Uniform):
            return model.b / (p + 1.0), 0.0, METHOD_CLOSED
        if isinstance(model, PowerLaw):
            return 1.0 / (model.theta * p + 1.0), 0.0, METHOD_CLOSED
        if method == METHOD_CLOSED:
            raise DomainError(f"no closed form for {type(model).__name__}")
    res = integrate_interval(lambda x: model.cdf(x) ** p, lo, hi, tol=tol)
    return res.value, res.error_estimate, METHOD_QUAD


def _conditional_cdf_power_integral(model, p, t, tol):
    """Integral of (F(x)/F(t))**p over (lower, t)."""
    Ft = model.cdf(t)
    if Ft <= 0.0:
        raise DomainError(f"F(t) must be positive, got F({t}) = {Ft}")
    lo = model.support[0]
    res = integrate_interval(lambda x: (model.cdf(x) / Ft) ** p, lo, t, tol=tol)
    return res.value, res.error_estimate


def cte(model, alpha, tol=DEFAULT_TOL, method="auto") -> EntropyReport:
    """Cumulative Tsallis entropy (int F**alpha - 1) / (1 - alpha)."""
    a = _alpha_of(alpha)
    val, err, how = cdf_power_integral(model, a, tol=tol, method=method)
    value, verr = _combine([val], [err], a)
    return EntropyReport(value, how, verr)


def cte_dynamic(model, alpha, t: float, tol=DEFAULT_TOL) -> EntropyReport:
    """Dynamic CTE conditioned on the past-lifetime event X <= t."""
    a = _alpha_of(alpha)
    val, err = _conditional_cdf_power_integral(model, a, t, tol)
    value, verr = _combine([val], [err], a)
    return EntropyReport(value, METHOD_QUAD, verr)


def cte_srs(model, alpha, n: int, tol=DEFAULT_TOL, method="auto") -> EntropyReport:
    """CTE of n iid draws: ((int F**alpha)**n - 1) / (1 - alpha)."""
    _check_n(n)
    a = _alpha_of(alpha)
    val, err, how = cdf_power_integral(model, a, tol=tol, method=method)
    value, verr = _combine([val] * n, [err] * n, a)
    return EntropyReport(value, how, verr)


def cte_mrssu(model, alpha, n: int, tol=DEFAULT_TOL, method="auto") -> EntropyReport:
    """CTE of a MRSSU sample: (prod_i int F**(i alpha) - 1) / (1 - alpha)."""
    _check_n(n)
    a = _alpha_of(alpha)
    factors, errors, hows = [], [], []
    for i in range(1, n + 1):
        val, err, how = cdf_power_integral(model, i * a, tol=tol, method=method)
        factors.append(val)
        errors.append(err)
        hows.append(how)
    value, verr = _combine(factors, errors, a)
    return EntropyReport(value, _worst_method(hows), verr)


def cte_design(model, alpha, spec: DesignSpec, tol=DEFAULT_TOL, method="auto") -> EntropyReport:
    if spec.design == "srs":
        return cte_srs(model, alpha, spec.n, tol=tol, method=method)
    if spec.design == "mrssu":
        return cte_mrssu(model, alpha, spec.n, tol=tol, method=method)
    raise DomainError("cumulative measures are defined for SRS and MRSSU designs only")


def cte_dynamic_srs(model, alpha, n: int, t: float, tol=DEFAULT_TOL) -> EntropyReport:
    """Dynamic design-level CTE for SRS, product-of-conditional-integrals form."""
    _check_n(n)
    a = _alpha_of(alpha)
    val, err = _conditional_cdf_power_integral(model, a, t, tol)
    value, verr = _combine([val] * n, [err] * n, a)
    return EntropyReport(value, METHOD_QUAD, verr)


def cte_dynamic_mrssu(model, alpha, n: int, t: float, tol=DEFAULT_TOL) -> EntropyReport:
    """Dynamic design-level CTE for MRSSU, product-of-conditional-integrals form."""
    _check_n(n)
    a = _alpha_of(alpha)
    factors, errors = [], []
    for i in range(1, n + 1):
        val, err = _conditional_cdf_power_integral(model, i * a, t, tol)
        factors.append(val)
        errors.append(err)
    value, verr = _combine(factors, errors, a)
    return EntropyReport(value, METHOD_QUAD, verr)


def cte_order_stat_identity(model, alpha, i: int, tol=DEFAULT_TOL) -> IdentityReport:
    """CTE of the maximum of i draws vs the rescaled order-(i alpha) CTE.

    Both sides are computed independently: the left directly from the law
    with cdf F**i, the right as (1 - i alpha)/(1 - alpha) times the CTE of
    the base model at order i alpha.
    """
    a = _alpha_of(alpha)
    if i < 1:
        raise DomainError("order-statistic index must be >= 1")
    if i * a == 1.0:
        raise DomainError("i * alpha = 1 is a removable singularity, not implemented")
    val, err, _ = cdf_power_integral(model, i * a, tol=tol)
    lhs = (val - 1.0) / (1.0 - a)
    rhs = (1.0 - i * a) / (1.0 - a) * cte(model, i * a, tol=tol).value
    return IdentityReport(lhs, rhs)


def alt_cte(model, alpha, tol=DEFAULT_TOL) -> EntropyReport:
    """Alternate CTE: (1/(alpha-1)) int (F - F**alpha) dx.

    Finite even on unbounded support, so the integral is taken in the
    quantile domain where the integrand (u - u**alpha)/f(F^{-1}(u)) stays
    bounded as u -> 1.
    """
    a = _alpha_of(alpha)

    def integrand(u):
        return (u - u**a) / model.density_quantile(u)

    res = integrate_unit(integrand, tol=tol)
    return EntropyReport(res.value / (a - 1.0), METHOD_QUAD, res.error_estimate / abs(a - 1.0))


def alt_cte_srs(model, alpha, n: int, tol=DEFAULT_TOL) -> EntropyReport:
    """Alternate CTE of SRS data; needs both int F and int F**alpha finite."""
    _check_n(n)
    a = _alpha_of(alpha)
    v1, e1, _ = cdf_power_integral(model, 1.0, tol=tol)
    va, ea, _ = cdf_power_integral(model, a, tol=tol)
    value = (v1**n - va**n) / (a - 1.0)
    err = (n * v1 ** (n - 1) * e1 + n * va ** (n - 1) * ea) / abs(a - 1.0)
    return EntropyReport(value, METHOD_QUAD if (e1 or ea) else METHOD_CLOSED, err)


def alt_cte_mrssu(model, alpha, n: int, tol=DEFAULT_TOL) -> EntropyReport:
    """Alternate CTE of MRSSU data."""
    _check_n(n)
    a = _alpha_of(alpha)
    prod1, proda, err1, erra = 1.0, 1.0, 0.0, 0.0
    quad = False
    for i in range(1, n + 1):
        v1, e1, h1 = cdf_power_integral(model, float(i), tol=tol)
        va, ea, ha = cdf_power_integral(model, i * a, tol=tol)
        err1 = err1 * abs(v1) + abs(prod1) * e1
        erra = erra * abs(va) + abs(proda) * ea
        prod1 *= v1
        proda *= va
        quad = quad or METHOD_QUAD in (h1, ha)
    value = (prod1 - proda) / (a - 1.0)
    err = (err1 + erra) / abs(a - 1.0)
    return EntropyReport(value, METHOD_QUAD if quad else METHOD_CLOSED, err)


def classical_cumulative_entropy(model, tol=DEFAULT_TOL) -> float:
    """Classical cumulative entropy -int F log F, the alpha -> 1 limit of alt_cte."""

    def integrand(u):
        return -u * math.log(u) / model.density_quantile(u)

    return integrate_unit(integrand, tol=tol).value


def failure_entropy(model, alpha, tol=DEFAULT_TOL, method="auto") -> EntropyReport:
    """Failure entropy (1/(1-alpha)) log int F**alpha dx."""
    a = _alpha_of(alpha)
    val, err, how = cdf_power_integral(model, a, tol=tol, method=method)
    if val <= 0.0:
        raise DomainError("failure entropy requires a positive integral")
    return EntropyReport(math.log(val) / (1.0 - a), how, err / (val * abs(1.0 - a)))


def fe_dynamic(model, alpha, t: float, tol=DEFAULT_TOL) -> EntropyReport:
    """Dynamic failure entropy (1/(1-alpha)) log int_0^t (F/F(t))**alpha dx.

    Defined without a trailing constant so that t at the top of the support
    recovers the unconditional failure entropy.
    """
    a = _alpha_of(alpha)
    val, err = _conditional_cdf_power_integral(model, a, t, tol)
    if val <= 0.0:
        raise DomainError("dynamic failure entropy requires a positive integral")
    return EntropyReport(math.log(val) / (1.0 - a), METHOD_QUAD, err / (val * abs(1.0 - a)))


def fe_srs(model, alpha, n: int, tol=DEFAULT_TOL) -> EntropyReport:
    """Failure entropy of SRS data: n times the single-variable value."""
    _check_n(n)
    rep = failure_entropy(model, alpha, tol=tol)
    return EntropyReport(n * rep.value, rep.method, n * rep.error_estimate)


def fe_mrssu(model, alpha, n: int, tol=DEFAULT_TOL) -> EntropyReport:
    """Failure entropy of MRSSU data as the weighted sum of order-(i alpha) values."""
    _check_n(n)
    a = _alpha_of(alpha)
    total, toterr, hows = 0.0, 0.0, []
    for i in range(1, n + 1):
        if i * a == 1.0:
            raise DomainError(f"component i={i} hits the removable order i*alpha = 1")
        rep = failure_entropy(model, i * a, tol=tol)
        w = (i * a - 1.0) / (a - 1.0)
        total += w * rep.value
        toterr += abs(w) * rep.error_estimate
        hows.append(rep.method)
    return EntropyReport(total, _worst_method(hows), toterr)


def cte_from_fe(fe_value: float, alpha) -> float:
    """Recover the CTE from a failure-entropy value."""
    a = _alpha_of(alpha)
    return (math.exp((1.0 - a) * fe_value) - 1.0) / (1.0 - a)


def prhrm_transform(model: DistributionModel, theta: float) -> DistributionModel:
    """Proportional reversed hazard rate transform: cdf F**theta."""
    if not theta > 0:
        raise DomainError("proportionality constant must be positive")
    if theta == 1.0:
        return model
    if isinstance(model, Uniform) and model.b == 1.0:
        return PowerLaw(theta)
    if isinstance(model, PowerLaw):
        return PowerLaw(model.theta * theta)
    return TransformedCdfPower(model, theta)


def prhrm_cte_check(model, theta: float, alpha, spec: DesignSpec, tol=DEFAULT_TOL) -> PrhrmReport:
    """CTE of the transformed design against the two candidate factor forms."""
    a = _alpha_of(alpha)
    if theta * a == 1.0:
        raise DomainError("theta * alpha = 1 makes the factor form singular")
    star = prhrm_transform(model, theta)
    lhs = cte_design(star, a, spec, tol=tol).value
    factor = (1.0 - theta * a) / (1.0 - a)
    rhs_shifted = factor * cte_design(model, theta * a, spec, tol=tol).value
    rhs_same = factor * cte_design(model, a, spec, tol=tol).value
    return PrhrmReport(lhs, rhs_shifted, rhs_same)


def cte_linear_transform(model, a_scale: float, shift: float, alpha, n: int, tol=DEFAULT_TOL) -> IdentityReport:
    """Both sides of the affine-change identity for the MRSSU CTE."""
    a = _alpha_of(alpha)
    transformed = AffineTransform(model, a_scale, shift)
    lhs = cte_mrssu(transformed, a, n, tol=tol).value
    base = cte_mrssu(model, a, n, tol=tol).value
    rhs = a_scale**n * base + (a_scale**n - 1.0) / (1.0 - a)
    return IdentityReport(lhs, rhs)


def _check_n(n: int) -> None:
    if n < 1:
        raise DomainError(f"set size must be >= 1, got n={n}")
