import math

import numpy as np
import pytest

from mrssu_entropy.distributions import (
    Exponential,
    PowerLaw,
    Uniform,
    UserDefined,
    max_order_stat,
    parse_model_spec,
    validate_model,
)
from mrssu_entropy.errors import DomainError

FAMILIES = [Uniform(0.5), Uniform(1.0), Uniform(2.0),
            Exponential(0.5), Exponential(1.0), Exponential(2.0),
            PowerLaw(1.0), PowerLaw(2.0)]


def test_pdf_values():
    assert Uniform(2.0).pdf(1.0) == 0.5
    assert Exponential(1.0).pdf(0.0) == 1.0
    assert PowerLaw(2.0).pdf(0.5) == 1.0


def test_quantile_values():
    assert PowerLaw(2.0).quantile(0.25) == pytest.approx(0.5, abs=1e-15)
    assert Uniform(2.0).quantile(0.5) == 1.0


def test_density_quantile_forms():
    for u in (0.1, 0.5, 0.9):
        assert Uniform(2.0).density_quantile(u) == 0.5
        assert Exponential(3.0).density_quantile(u) == pytest.approx(3.0 * (1 - u), rel=1e-14)


@pytest.mark.parametrize("model", FAMILIES)
def test_quantile_cdf_roundtrip(model):
    rng = np.random.default_rng(12345)
    for u in rng.uniform(1e-6, 1 - 1e-6, 1000):
        assert abs(model.cdf(model.quantile(u)) - u) < 1e-12


@pytest.mark.parametrize("model", FAMILIES)
def test_cdf_derivative_matches_pdf(model):
    h = 1e-7
    for k in range(1, 101):
        u = k / 101.0
        x = model.quantile(u)
        num = (model.cdf(x + h) - model.cdf(x - h)) / (2 * h)
        assert num == pytest.approx(model.pdf(x), rel=1e-6, abs=1e-9)


@pytest.mark.parametrize("model", FAMILIES)
def test_hazard_definition(model):
    for u in (0.1, 0.4, 0.8):
        x = model.quantile(u)
        assert model.hazard(x) == pytest.approx(model.pdf(x) / (1 - model.cdf(x)), rel=1e-12)


def test_hazard_at_saturation_rejected():
    with pytest.raises(DomainError):
        Uniform(1.0).hazard(1.0)


def test_quantile_domain_checked():
    for bad in (-0.1, 0.0, 1.0, 1.5):
        with pytest.raises(DomainError):
            Uniform(1.0).quantile(bad)


def test_invalid_parameters_rejected():
    with pytest.raises(DomainError):
        Uniform(0.0)
    with pytest.raises(DomainError):
        Exponential(-1.0)
    with pytest.raises(DomainError):
        PowerLaw(0.0)


def test_max_order_stat_i1_identity():
    base = Exponential(1.0)
    law = max_order_stat(base, 1)
    for x in (0.2, 1.0, 3.0):
        assert law.pdf(x) == pytest.approx(base.pdf(x), rel=1e-14)
        assert law.cdf(x) == pytest.approx(base.cdf(x), rel=1e-14)


def test_max_order_stat_uniform_i2():
    law = max_order_stat(Uniform(1.0), 2)
    for x in (0.1, 0.5, 0.9):
        assert law.pdf(x) == pytest.approx(2 * x, rel=1e-14)
        assert law.cdf(x) == pytest.approx(x * x, rel=1e-14)


def test_max_order_stat_exponential_cdf():
    law = max_order_stat(Exponential(1.0), 2)
    for x in (0.3, 1.0, 2.5):
        assert law.cdf(x) == pytest.approx((1 - math.exp(-x)) ** 2, rel=1e-13)


@pytest.mark.parametrize("model", FAMILIES)
@pytest.mark.parametrize("i", [1, 2, 3])
def test_max_order_stat_cdf_power(model, i):
    law = max_order_stat(model, i)
    for k in range(1, 101):
        u = k / 101.0
        x = model.quantile(u)
        assert abs(law.cdf(x) - model.cdf(x) ** i) < 1e-12


def test_max_order_stat_rejects_bad_index():
    with pytest.raises(DomainError):
        max_order_stat(Uniform(1.0), 0)


def test_user_defined_and_validation():
    model = UserDefined(
        pdf_fn=lambda x: 2.0 * x,
        cdf_fn=lambda x: x * x,
        quantile_fn=math.sqrt,
        support=(0.0, 1.0),
        mean_value=2.0 / 3.0,
    )
    validate_model(model)
    assert model.pdf(2.0) == 0.0
    broken = UserDefined(
        pdf_fn=lambda x: 2.0 * x,
        cdf_fn=lambda x: x,  # inconsistent with the quantile
        quantile_fn=math.sqrt,
        support=(0.0, 1.0),
    )
    with pytest.raises(DomainError):
        validate_model(broken)


def test_parse_model_spec():
    m = parse_model_spec("uniform:b=2")
    assert isinstance(m, Uniform) and m.b == 2.0
    m = parse_model_spec("exp:theta=1")
    assert isinstance(m, Exponential) and m.theta == 1.0
    m = parse_model_spec("beta:theta=2")
    assert isinstance(m, PowerLaw) and m.theta == 2.0
    assert isinstance(parse_model_spec("uniform"), Uniform)


def test_parse_model_spec_rejects_garbage():
    for bad in ("gamma:k=2", "uniform:scale=2", "exp:theta=abc", "exp:theta"):
        with pytest.raises(DomainError):
            parse_model_spec(bad)
