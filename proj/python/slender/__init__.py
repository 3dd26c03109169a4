"""Slender-body spectra and verification tools (compiled core in ``_core``)."""

from ._core import (  # noqa: F401
    ConfigError,
    DomainError,
    PoleError,
    ResolutionError,
    WindowError,
    b_function,
    bessel_k,
    bessel_k_scaled,
    convergence_study,
    eigenvalue,
    gronwall_constants,
    max_stable_dt,
    nu,
    optimal_delta,
    oracle_bessel_k,
    traction_eigenvalue,
)
