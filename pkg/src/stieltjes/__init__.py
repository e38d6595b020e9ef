"""Exact Ross-Darboux-Stieltjes integration for piecewise polynomials."""
from .engine import (
    IntegralResult,
    convergence_table,
    discrepancy,
    ds_integrate,
    ds_step_integral,
    integrator_sequence_table,
    is_rds_integrable,
    parts_check,
    parts_correction,
    rds_integrate,
    rds_step_integral,
    ross_sums,
)
from .errors import StieltjesError
from .integrator import Integrator, SaltusPart, bv_distance, bv_norm
from .numerics import Poly, Rational, format_rational, parse_rational
from .pwfn import Dirichlet, Partition, PiecewiseFn, best_fit_steps, heaviside, pos_part, step
from .riemann import TaggedPartition, mrs_probe, riemann_step, rps_probe, rrs_probe, sample_extremes

__version__ = "0.1.0"

__all__ = [
    "Dirichlet", "IntegralResult", "Integrator", "Partition", "PiecewiseFn", "Poly", "Rational",
    "SaltusPart", "StieltjesError", "TaggedPartition", "best_fit_steps", "bv_distance", "bv_norm",
    "convergence_table", "discrepancy", "ds_integrate", "ds_step_integral", "format_rational",
    "heaviside", "integrator_sequence_table", "is_rds_integrable", "mrs_probe", "parse_rational",
    "parts_check", "parts_correction", "pos_part", "rds_integrate", "rds_step_integral",
    "riemann_step", "ross_sums", "rps_probe", "rrs_probe", "sample_extremes", "step",
]
