"""Tsallis, cumulative Tsallis and residual Tsallis entropies of SRS, RSS
and MRSSU sampling designs, with bound verification and Monte Carlo checks."""

from .bounds import (
    BoundInterval,
    OrderCheckReport,
    check_order,
    classify_reliability,
    hayashi_bounds,
    phi,
    steffensen_bounds,
    suite_has_hard_failures,
    theorem_suite,
)
from .cumulative import (
    IdentityReport,
    PrhrmReport,
    alt_cte,
    alt_cte_mrssu,
    alt_cte_srs,
    classical_cumulative_entropy,
    cte,
    cte_design,
    cte_dynamic,
    cte_dynamic_mrssu,
    cte_dynamic_srs,
    cte_from_fe,
    cte_linear_transform,
    cte_mrssu,
    cte_order_stat_identity,
    cte_srs,
    failure_entropy,
    fe_dynamic,
    fe_mrssu,
    fe_srs,
    prhrm_cte_check,
    prhrm_transform,
)
from .distributions import (
    DistributionModel,
    Exponential,
    PowerLaw,
    Uniform,
    UserDefined,
    max_order_stat,
    parse_model_spec,
    validate_model,
)
from .errors import DivergenceError, DomainError, InfeasibleConstruction
from .residual import (
    ResidualContext,
    residual_delta,
    residual_mrssu,
    residual_order_stat,
    residual_srs,
    residual_tsallis,
)
from .simulate import SimulationConfig, draw_design, mc_entropy_estimate, mrssu_column_ks
from .tsallis import (
    DesignSpec,
    EntropyOrder,
    EntropyReport,
    delta_series,
    mrssu_exponential_closed,
    mrssu_uniform_closed,
    shannon_entropy,
    tsallis_compose,
    tsallis_design,
    tsallis_entropy,
    tsallis_mrssu,
    tsallis_order_stat,
    tsallis_rss,
    tsallis_srs,
)

__all__ = [name for name in dir() if not name.startswith("_")]

__version__ = "0.1.0"
