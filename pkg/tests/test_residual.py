import math

import pytest

from mrssu_entropy.distributions import Exponential, PowerLaw, Uniform
from mrssu_entropy.errors import DomainError
from mrssu_entropy.residual import (
    ResidualContext,
    exponential_residual_delta_bracket,
    exponential_residual_mrssu_reference,
    order_stat_survival,
    order_stat_survival_forms,
    residual_compose,
    residual_delta,
    residual_mrssu,
    residual_order_stat,
    residual_srs,
    residual_tsallis,
    uniform_residual_mrssu_reference,
)
from mrssu_entropy.tsallis import (
    tsallis_entropy,
    tsallis_mrssu,
    tsallis_order_stat,
    tsallis_srs,
)

ALPHAS = (0.25, 0.5, 2.0, 3.0)


def test_residual_context_validation():
    with pytest.raises(DomainError):
        ResidualContext(Uniform(1.0), -0.1)
    with pytest.raises(DomainError):
        ResidualContext(Uniform(1.0), 1.0)
    ResidualContext(Exponential(1.0), 100.0)  # survival still positive


def test_residual_tsallis_values():
    for alpha in ALPHAS:
        assert residual_tsallis(ResidualContext(Uniform(1.0), 0.0), alpha).value == pytest.approx(
            0.0, abs=1e-12
        )
    for t in (0.0, 0.5, 2.0):
        assert residual_tsallis(ResidualContext(Exponential(1.0), t), 2.0).value == pytest.approx(
            0.5, abs=1e-10
        )
    assert residual_tsallis(ResidualContext(Uniform(1.0), 0.5), 2.0).value == pytest.approx(
        -1.0, abs=1e-10
    )


def test_residual_compose_contract():
    assert residual_compose(0.0, 0.0, 2.0) == 0.0
    assert residual_compose(0.5, 2 / 3, 2.0) == pytest.approx(5 / 6, abs=1e-12)
    assert residual_compose(0.4, 0.0, 0.5) == pytest.approx(0.4, abs=1e-15)
    assert residual_compose(0.3, 0.7, 2.0) == residual_compose(0.7, 0.3, 2.0)


def test_order_stat_survival_forms_agree():
    for model in (Uniform(1.0), Exponential(1.0), PowerLaw(2.0)):
        for i, n in ((1, 1), (1, 3), (2, 3), (3, 3)):
            for u in (0.1, 0.4, 0.7, 0.95):
                t = model.quantile(u)
                s_binom, s_beta = order_stat_survival_forms(model, i, n, t)
                assert abs(s_binom - s_beta) < 1e-12


def test_order_stat_survival_values():
    assert order_stat_survival(Uniform(1.0), 2, 2, 0.5) == pytest.approx(0.75, abs=1e-12)
    assert order_stat_survival(Uniform(1.0), 1, 2, -1.0) == pytest.approx(1.0, abs=1e-15)


def test_residual_order_stat_t0_reduction():
    for model in (Uniform(1.0), Exponential(1.0), PowerLaw(2.0)):
        for alpha in ALPHAS:
            for i, n in ((1, 1), (2, 2), (2, 3)):
                r = residual_order_stat(model, alpha, i, n, 0.0).value
                u = tsallis_order_stat(model, alpha, i, n).value
                assert r == pytest.approx(u, abs=1e-10)
    assert residual_order_stat(Uniform(1.0), 2.0, 2, 2, 0.0).value == pytest.approx(
        -1 / 3, abs=1e-10
    )
    assert residual_order_stat(Exponential(1.0), 2.0, 2, 2, 0.0).value == pytest.approx(
        2 / 3, abs=1e-10
    )


def test_residual_design_t0_reductions():
    for model in (Uniform(1.0), Exponential(1.0), PowerLaw(2.0)):
        for alpha in ALPHAS:
            for n in (1, 2, 3):
                assert residual_srs(model, alpha, n, 0.0).value == pytest.approx(
                    tsallis_srs(model, alpha, n).value, abs=1e-10
                )
                assert residual_mrssu(model, alpha, n, 0.0).value == pytest.approx(
                    tsallis_mrssu(model, alpha, n).value, abs=1e-10
                )


def test_exponential_memorylessness():
    # memorylessness carries through plain residual lives (any n of them) and
    # the one-unit maximum, but not through maxima of several exponentials
    for alpha in ALPHAS:
        for t in (0.5, 1.0, 2.0):
            for n in (1, 2, 3):
                assert residual_srs(Exponential(1.0), alpha, n, t).value == pytest.approx(
                    tsallis_srs(Exponential(1.0), alpha, n).value, abs=1e-10
                )
            assert residual_mrssu(Exponential(1.0), alpha, 1, t).value == pytest.approx(
                tsallis_mrssu(Exponential(1.0), alpha, 1).value, abs=1e-10
            )
    base = residual_mrssu(Exponential(1.0), 2.0, 2, 0.0).value
    assert abs(residual_mrssu(Exponential(1.0), 2.0, 2, 0.5).value - base) > 1e-3


def test_exponential_two_unit_reference_corrected():
    # the corrected closed form matches the general construction for any
    # rate; the printed theta**(alpha-1) prefactor only agrees at theta = 1
    for theta in (0.5, 1.0, 2.0):
        for alpha in (0.5, 2.0):
            for t in (0.0, 0.7, 1.5):
                general = residual_mrssu(Exponential(theta), alpha, 2, t).value
                ref = exponential_residual_mrssu_reference(alpha, theta, t, corrected=True)
                assert general == pytest.approx(ref, abs=1e-10)
    printed = exponential_residual_mrssu_reference(2.0, 2.0, 0.5, corrected=False)
    corrected = exponential_residual_mrssu_reference(2.0, 2.0, 0.5, corrected=True)
    assert abs(printed - corrected) > 1e-3
    assert exponential_residual_mrssu_reference(2.0, 1.0, 0.5, corrected=False) == pytest.approx(
        exponential_residual_mrssu_reference(2.0, 1.0, 0.5, corrected=True), abs=1e-14
    )


def test_uniform_two_unit_reference():
    # corrected variant agrees with the general construction; the printed
    # variant fails its own t = 0 reduction to the unconditional -1/3
    for alpha in (0.5, 2.0, 3.0):
        for t in (0.0, 0.25, 0.6):
            general = residual_mrssu(Uniform(1.0), alpha, 2, t).value
            assert uniform_residual_mrssu_reference(alpha, t) == pytest.approx(
                general, abs=1e-10
            )
    assert uniform_residual_mrssu_reference(2.0, 0.0, corrected=False) == pytest.approx(-1.0)
    assert uniform_residual_mrssu_reference(2.0, 0.0, corrected=True) == pytest.approx(
        -1 / 3, abs=1e-12
    )


def test_residual_delta_rows_and_signs():
    rows = residual_delta(Exponential(1.0), 2.0, 2, [0.0, 0.5, 1.0, 2.0])
    assert all(r["status"] == "ok" for r in rows)
    assert rows[0]["delta"] == pytest.approx(1 / 12, abs=1e-10)
    assert all(r["delta"] > 0 for r in rows)
    # the gap stays positive below alpha = 1 as well, matching the
    # unconditional exponential ordering at t = 0
    rows = residual_delta(Exponential(1.0), 0.5, 2, [0.0, 0.5, 1.0, 2.0])
    assert all(r["delta"] > 0 for r in rows)
    assert rows[0]["delta"] == pytest.approx(
        tsallis_mrssu(Exponential(1.0), 0.5, 2).value
        - tsallis_srs(Exponential(1.0), 0.5, 2).value,
        abs=1e-10,
    )


def test_bracket_asymptote():
    target = 1.0 - 2.0**-2.0
    assert exponential_residual_delta_bracket(2.0, 1.0, 40.0) == pytest.approx(
        target, abs=1e-8
    )
    # consistency at t = 0 with the n = 2 composition: delta = 1/12
    b0 = exponential_residual_delta_bracket(2.0, 1.0, 0.0)
    assert b0 == pytest.approx(5 / 6, abs=1e-12)


def test_residual_single_matches_closed_route():
    # uniform closed route: scale (1-t)**(1-alpha) through the definition
    for alpha in (0.5, 2.0):
        for t in (0.2, 0.5, 0.8):
            val = residual_tsallis(ResidualContext(Uniform(1.0), t), alpha).value
            expect = (1.0 - (1.0 - t) ** (1.0 - alpha)) / (alpha - 1.0)
            assert val == pytest.approx(expect, abs=1e-10)


def test_residual_n1_reduces_to_single():
    for alpha in ALPHAS:
        for t in (0.0, 0.4):
            a = residual_mrssu(Uniform(1.0), alpha, 1, t).value
            b = residual_tsallis(ResidualContext(Uniform(1.0), t), alpha).value
            assert a == pytest.approx(b, abs=1e-12)
    assert residual_tsallis(ResidualContext(Exponential(1.0), 0.0), 2.0).value == pytest.approx(
        tsallis_entropy(Exponential(1.0), 2.0).value, abs=1e-12
    )
