"""Parametric lifetime models exposed through pdf/cdf/quantile and friends.

Each model provides the handful of functional forms the entropy formulas
consume directly: the density, the distribution function, its inverse, the
density-quantile composition f(F^{-1}(u)) and the hazard rate.  Models are
immutable after construction and every evaluation method is pure.
"""
from __future__ import annotations

import math
from dataclasses import dataclass, field

from .errors import DomainError


class DistributionModel:
    """Base class for a continuous lifetime law on an interval support."""

    #: (lower, upper); upper may be math.inf
    support: tuple[float, float]

    def pdf(self, x: float) -> float:
        raise NotImplementedError

    def cdf(self, x: float) -> float:
        raise NotImplementedError

    def quantile(self, u: float) -> float:
        raise NotImplementedError

    def density_quantile(self, u: float) -> float:
        """f(F^{-1}(u)) for u in (0, 1)."""
        _check_unit_open(u)
        return self.pdf(self.quantile(u))

    def hazard(self, x: float) -> float:
        """pdf(x) / (1 - cdf(x)); undefined where the survival is zero."""
        s = 1.0 - self.cdf(x)
        if s <= 0.0:
            raise DomainError(f"hazard undefined at x={x}: survival is zero")
        return self.pdf(x) / s

    def sf(self, x: float) -> float:
        return 1.0 - self.cdf(x)

    def mean(self) -> float:
        raise NotImplementedError


def _check_unit_open(u: float) -> None:
    if not 0.0 < u < 1.0:
        raise DomainError(f"u={u} outside the open unit interval")


@dataclass(frozen=True)
class Uniform(DistributionModel):
    """Uniform law on (0, b)."""

    b: float = 1.0
    support: tuple[float, float] = field(init=False)

    def __post_init__(self):
        if not self.b > 0:
            raise DomainError(f"uniform scale must be positive, got b={self.b}")
        object.__setattr__(self, "support", (0.0, self.b))

    def pdf(self, x):
        return 1.0 / self.b if 0.0 <= x <= self.b else 0.0

    def cdf(self, x):
        if x <= 0.0:
            return 0.0
        if x >= self.b:
            return 1.0
        return x / self.b

    def quantile(self, u):
        _check_unit_open(u)
        return u * self.b

    def density_quantile(self, u):
        _check_unit_open(u)
        return 1.0 / self.b

    def mean(self):
        return self.b / 2.0


@dataclass(frozen=True)
class Exponential(DistributionModel):
    """Exponential law with rate theta (mean 1/theta)."""

    theta: float = 1.0
    support: tuple[float, float] = field(init=False)

    def __post_init__(self):
        if not self.theta > 0:
            raise DomainError(f"exponential rate must be positive, got theta={self.theta}")
        object.__setattr__(self, "support", (0.0, math.inf))

    def pdf(self, x):
        return self.theta * math.exp(-self.theta * x) if x >= 0.0 else 0.0

    def cdf(self, x):
        return -math.expm1(-self.theta * x) if x > 0.0 else 0.0

    def sf(self, x):
        return math.exp(-self.theta * x) if x > 0.0 else 1.0

    def quantile(self, u):
        _check_unit_open(u)
        return -math.log1p(-u) / self.theta

    def density_quantile(self, u):
        _check_unit_open(u)
        return self.theta * (1.0 - u)

    def hazard(self, x):
        if x < 0.0:
            raise DomainError("hazard undefined below the support")
        return self.theta

    def mean(self):
        return 1.0 / self.theta


@dataclass(frozen=True)
class PowerLaw(DistributionModel):
    """Power law on (0, 1) with cdf x**theta, i.e. a beta(theta, 1) variable."""

    theta: float = 1.0
    support: tuple[float, float] = field(init=False)

    def __post_init__(self):
        if not self.theta > 0:
            raise DomainError(f"power-law exponent must be positive, got theta={self.theta}")
        object.__setattr__(self, "support", (0.0, 1.0))

    def pdf(self, x):
        if 0.0 < x <= 1.0:
            return self.theta * x ** (self.theta - 1.0)
        if x == 0.0:
            # limit value; infinite for theta < 1
            return self.theta if self.theta == 1.0 else (0.0 if self.theta > 1.0 else math.inf)
        return 0.0

    def cdf(self, x):
        if x <= 0.0:
            return 0.0
        if x >= 1.0:
            return 1.0
        return x ** self.theta

    def quantile(self, u):
        _check_unit_open(u)
        return u ** (1.0 / self.theta)

    def density_quantile(self, u):
        _check_unit_open(u)
        return self.theta * u ** ((self.theta - 1.0) / self.theta)

    def mean(self):
        return self.theta / (self.theta + 1.0)


@dataclass(frozen=True)
class UserDefined(DistributionModel):
    """Caller-supplied (pdf, cdf, quantile) triple.

    Consistency is not enforced on every call; use :func:`validate_model`
    once after construction.
    """

    pdf_fn: object
    cdf_fn: object
    quantile_fn: object
    support: tuple[float, float] = (0.0, math.inf)
    mean_value: float | None = None

    def pdf(self, x):
        lo, hi = self.support
        if x < lo or x > hi:
            return 0.0
        return float(self.pdf_fn(x))

    def cdf(self, x):
        lo, hi = self.support
        if x <= lo:
            return 0.0
        if x >= hi:
            return 1.0
        return float(self.cdf_fn(x))

    def quantile(self, u):
        _check_unit_open(u)
        return float(self.quantile_fn(u))

    def mean(self):
        if self.mean_value is None:
            raise NotImplementedError("user-defined model has no mean configured")
        return self.mean_value


@dataclass(frozen=True)
class MaxOrderStatLaw(DistributionModel):
    """Law of the maximum of ``i`` iid draws: pdf i*f*F**(i-1), cdf F**i."""

    base: DistributionModel
    i: int
    support: tuple[float, float] = field(init=False)

    def __post_init__(self):
        if self.i < 1:
            raise DomainError(f"order-statistic index must be >= 1, got i={self.i}")
        object.__setattr__(self, "support", self.base.support)

    def pdf(self, x):
        return self.i * self.base.pdf(x) * self.base.cdf(x) ** (self.i - 1)

    def cdf(self, x):
        return self.base.cdf(x) ** self.i

    def quantile(self, u):
        _check_unit_open(u)
        return self.base.quantile(u ** (1.0 / self.i))

    def density_quantile(self, u):
        _check_unit_open(u)
        v = u ** (1.0 / self.i)
        return self.i * self.base.density_quantile(v) * v ** (self.i - 1)


def max_order_stat(model: DistributionModel, i: int) -> MaxOrderStatLaw:
    """Distribution of the maximum of ``i`` iid draws from ``model``."""
    return MaxOrderStatLaw(model, i)


@dataclass(frozen=True)
class TransformedCdfPower(DistributionModel):
    """Proportional reversed hazard transform: cdf F**theta of a base model."""

    base: DistributionModel
    theta: float
    support: tuple[float, float] = field(init=False)

    def __post_init__(self):
        if not self.theta > 0:
            raise DomainError("transform exponent must be positive")
        object.__setattr__(self, "support", self.base.support)

    def pdf(self, x):
        F = self.base.cdf(x)
        if F <= 0.0:
            return 0.0
        return self.theta * self.base.pdf(x) * F ** (self.theta - 1.0)

    def cdf(self, x):
        return self.base.cdf(x) ** self.theta

    def quantile(self, u):
        _check_unit_open(u)
        return self.base.quantile(u ** (1.0 / self.theta))


@dataclass(frozen=True)
class AffineTransform(DistributionModel):
    """Law of a*X + b for a base model X, a > 0, b >= 0."""

    base: DistributionModel
    a: float
    shift: float = 0.0
    support: tuple[float, float] = field(init=False)

    def __post_init__(self):
        if not self.a > 0:
            raise DomainError("affine scale must be positive")
        if self.shift < 0:
            raise DomainError("affine shift must be nonnegative")
        lo, hi = self.base.support
        object.__setattr__(
            self, "support", (self.a * lo + self.shift, self.a * hi + self.shift)
        )

    def pdf(self, x):
        return self.base.pdf((x - self.shift) / self.a) / self.a

    def cdf(self, x):
        return self.base.cdf((x - self.shift) / self.a)

    def quantile(self, u):
        _check_unit_open(u)
        return self.a * self.base.quantile(u) + self.shift

    def density_quantile(self, u):
        _check_unit_open(u)
        return self.base.density_quantile(u) / self.a


def validate_model(model: DistributionModel, n_points: int = 64, tol: float = 1e-8) -> None:
    """Spot-check cdf/quantile/pdf consistency of a model on an interior grid.

    Raises DomainError on the first violated invariant.  Intended for
    user-defined models; the built-in families satisfy these by construction.
    """
    for k in range(1, n_points + 1):
        u = k / (n_points + 1.0)
        x = model.quantile(u)
        if abs(model.cdf(x) - u) > tol:
            raise DomainError(f"cdf(quantile({u})) = {model.cdf(x)} differs from {u}")
        dq = model.density_quantile(u)
        if abs(dq - model.pdf(x)) > tol * max(1.0, abs(dq)):
            raise DomainError(f"density_quantile({u}) inconsistent with pdf at x={x}")


_FAMILIES = {
    "uniform": (Uniform, {"b"}),
    "exp": (Exponential, {"theta"}),
    "exponential": (Exponential, {"theta"}),
    "beta": (PowerLaw, {"theta"}),
    "power": (PowerLaw, {"theta"}),
}


def parse_model_spec(spec: str) -> DistributionModel:
    """Parse a CLI model string such as ``uniform:b=2`` or ``exp:theta=1``.

    Grammar: family name, colon, comma-separated key=value pairs.
    """
    name, _, rest = spec.partition(":")
    name = name.strip().lower()
    if name not in _FAMILIES:
        raise DomainError(f"unknown model family {name!r}")
    cls, allowed = _FAMILIES[name]
    kwargs = {}
    if rest.strip():
        for pair in rest.split(","):
            key, eq, value = pair.partition("=")
            key = key.strip()
            if not eq or key not in allowed:
                raise DomainError(f"bad parameter {pair!r} for family {name!r}")
            try:
                kwargs[key] = float(value)
            except ValueError as exc:
                raise DomainError(f"non-numeric value in {pair!r}") from exc
    return cls(**kwargs)
