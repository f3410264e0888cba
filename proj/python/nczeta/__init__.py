"""zeta_Q(2) of the non-commutative harmonic oscillator, with the hypergeometric,
Heun-series, elliptic, Euler-integral and Hermite-basis eigenvalue routes."""

from ._nczeta import (
    DomainError,
    EigensolveFailure,
    Error,
    InvalidParams,
    NoConvergence,
    BranchInconsistency,
    ZetaResult,
    derive,
    elliptic_k,
    g_closed,
    g_elliptic,
    g_euler,
    g_series,
    gauss_2f1,
    gauss_2f1_neg,
    heun_coefficients,
    hyper_3f2,
    lowest_eigenvalues,
    w_closed,
    w_coeff_oracle,
    zeta2,
    zeta2_closed,
    zeta2_elliptic,
    zeta2_euler,
    zeta2_series,
    zeta2_spectral,
)

__all__ = [name for name in dir() if not name.startswith("_")]
