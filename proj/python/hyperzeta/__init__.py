"""Exact hyperharmonic numbers and closed-form zeta-value sums.

Exact quantities cross the boundary as :class:`fractions.Fraction` (or plain
``int``); closed forms arrive as :class:`ZetaExpr` objects that can be
evaluated, rendered, or inspected term by term.
"""

from ._hyperzeta import (
    AccuracyError,
    CapacityError,
    DivergenceError,
    SumReport,
    ZetaExpr,
    accelerated_sum,
    antiderivative_residual,
    asymptotic_ratio,
    bernoulli,
    binomial,
    convergent,
    dilog,
    direct_sum,
    euler_sum,
    factorial,
    harmonic,
    harmonic_bounds_check,
    hyperharmonic,
    hyperharmonic_closed,
    hyperharmonic_gf_coeffs,
    oracle_report,
    pochhammer,
    r_stirling_cycle,
    rising_factorial_sum,
    rising_factorial_sum_numeric,
    sandwich_bounds_check,
    stirling_cycle,
    stirling_gf_coeffs,
    sum_closed_form,
    sum_name,
    tail_estimate,
    zeta,
    zeta_even_pi_form,
)

__all__ = [
    "AccuracyError",
    "CapacityError",
    "DivergenceError",
    "SumReport",
    "ZetaExpr",
    "accelerated_sum",
    "antiderivative_residual",
    "asymptotic_ratio",
    "bernoulli",
    "binomial",
    "convergent",
    "dilog",
    "direct_sum",
    "euler_sum",
    "factorial",
    "harmonic",
    "harmonic_bounds_check",
    "hyperharmonic",
    "hyperharmonic_closed",
    "hyperharmonic_gf_coeffs",
    "oracle_report",
    "pochhammer",
    "r_stirling_cycle",
    "rising_factorial_sum",
    "rising_factorial_sum_numeric",
    "sandwich_bounds_check",
    "stirling_cycle",
    "stirling_gf_coeffs",
    "sum_closed_form",
    "sum_name",
    "tail_estimate",
    "zeta",
    "zeta_even_pi_form",
]

__version__ = "0.1.0"
