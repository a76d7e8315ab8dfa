"""Distributions of interval spacings of order statistics."""

from ._intspace import (
    ConvergenceError,
    DomainError,
    IoError,
    autocovariance,
    density,
    density_by_quadrature,
    kernel_response,
    mean,
    moment_by_quadrature,
    profile,
    simulate,
    spacings,
    variance,
)

__all__ = [
    "ConvergenceError",
    "DomainError",
    "IoError",
    "autocovariance",
    "density",
    "density_by_quadrature",
    "kernel_response",
    "mean",
    "moment_by_quadrature",
    "profile",
    "simulate",
    "spacings",
    "variance",
]

__version__ = "0.1.0"
