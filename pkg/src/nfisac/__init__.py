"""Near-field ISAC performance analysis for uniform planar arrays.

Closed-form sensing and communication rates under five channel models,
Pareto-optimal beamforming, downlink/uplink rate regions, brute-force
oracles, a CSV-emitting experiment runner, and a self-validation battery.
"""

from .channels import (
    ChannelModel,
    ChannelVector,
    build_channel,
    ccf,
    closed_form_norm_sq,
    inner_product,
    norm_sq,
)
from .dl_rates import (
    RatePair,
    SystemParams,
    asymptotic_limit,
    cc_rates,
    fdsac_rates,
    high_snr_approx,
    sc_rates,
    tau_rate_pair,
)
from .errors import (
    ConfigError,
    DegenerateChannelError,
    NumericalError,
    UnsupportedModelError,
)
from .experiments import (
    EXPERIMENTS,
    ExperimentConfig,
    build_config,
    load_config_file,
    run_experiment,
)
from .geometry import ArrayGeometry, Placement
from .oracles import (
    CcfEstimate,
    ccf_limit_estimate,
    constant_placement_sampler,
    default_ccf_ladder,
    norm_sq_bruteforce,
    slope_estimate,
    ul_quadratic_form_oracle,
    uniform_placement_sampler,
)
from .pareto import (
    ParetoSolution,
    Regime,
    kkt_residuals,
    sigma_sweep,
    sigma_thresholds,
    solve_rate_profile,
)
from .regions import (
    RegionBoundary,
    auxiliary_region,
    contains,
    downlink_isac_region,
    fdsac_region,
    frontier_hausdorff,
    sigma_frontier,
    uplink_isac_region,
)
from .ul_rates import (
    UplinkDesign,
    time_sharing,
    ul_asymptotic_limit,
    ul_cc_rates,
    ul_cc_sr_lower,
    ul_fdsac_rates,
    ul_sc_cr_lower,
    ul_sc_rates,
)
from .validation import CheckResult, ValidationReport, validate_suite

__version__ = "0.1.0"

__all__ = [
    "ArrayGeometry",
    "CcfEstimate",
    "ChannelModel",
    "ChannelVector",
    "CheckResult",
    "ConfigError",
    "DegenerateChannelError",
    "EXPERIMENTS",
    "ExperimentConfig",
    "NumericalError",
    "ParetoSolution",
    "Placement",
    "RatePair",
    "Regime",
    "RegionBoundary",
    "SystemParams",
    "UnsupportedModelError",
    "UplinkDesign",
    "ValidationReport",
    "asymptotic_limit",
    "auxiliary_region",
    "build_channel",
    "build_config",
    "cc_rates",
    "ccf",
    "ccf_limit_estimate",
    "closed_form_norm_sq",
    "constant_placement_sampler",
    "contains",
    "default_ccf_ladder",
    "downlink_isac_region",
    "fdsac_rates",
    "fdsac_region",
    "frontier_hausdorff",
    "high_snr_approx",
    "inner_product",
    "kkt_residuals",
    "load_config_file",
    "norm_sq",
    "norm_sq_bruteforce",
    "run_experiment",
    "sc_rates",
    "sigma_frontier",
    "sigma_sweep",
    "sigma_thresholds",
    "slope_estimate",
    "solve_rate_profile",
    "tau_rate_pair",
    "time_sharing",
    "ul_asymptotic_limit",
    "ul_cc_rates",
    "ul_cc_sr_lower",
    "ul_fdsac_rates",
    "ul_quadratic_form_oracle",
    "ul_sc_cr_lower",
    "ul_sc_rates",
    "uniform_placement_sampler",
    "uplink_isac_region",
    "validate_suite",
]
