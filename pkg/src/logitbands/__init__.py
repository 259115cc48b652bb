"""Simultaneous confidence bands for logistic and probit regression over an interval."""

from .bands import BandCurve, BandSpec, build_band, standard_error
from .critical import (
    CriticalValue,
    chi2_cdf,
    coverage_one_sided_closed,
    coverage_one_sided_quadrature,
    coverage_two_sided,
    coverage_two_sided_region,
    solve_critical,
)
from .data import Dataset, Observation, bundled_lavelle_dataset, parse_dataset, read_dataset
from .geometry import ConeAngle, cone_angle, interval_cone_angle, sqrt_psd_2x2, unrestricted_angle
from .glm import Coefficients, FitConfig, Link, ModelFit, fisher_information, fit, response_prob
from .montecarlo import (
    CoverageReport,
    SimConfig,
    generate_design,
    interval_endpoints,
    simulate_coverage,
)

__version__ = "0.1.0"

__all__ = [
    "BandCurve",
    "BandSpec",
    "Coefficients",
    "ConeAngle",
    "CoverageReport",
    "CriticalValue",
    "Dataset",
    "FitConfig",
    "Link",
    "ModelFit",
    "Observation",
    "SimConfig",
    "build_band",
    "bundled_lavelle_dataset",
    "chi2_cdf",
    "cone_angle",
    "coverage_one_sided_closed",
    "coverage_one_sided_quadrature",
    "coverage_two_sided",
    "coverage_two_sided_region",
    "fisher_information",
    "fit",
    "generate_design",
    "interval_cone_angle",
    "interval_endpoints",
    "parse_dataset",
    "read_dataset",
    "response_prob",
    "simulate_coverage",
    "solve_critical",
    "sqrt_psd_2x2",
    "standard_error",
    "unrestricted_angle",
]
