"""Hill discriminant of the Lame equation.

Special-function kernels (elliptic integrals, Jacobi sn/cn/dn, complex
gamma, Gauss 2F1), monodromy integration of the Lame equation, the
closed-form approximant 2 Re(B e^{2 i omega K}) with rigorous error
bounds, and certified stability verdicts.
"""

from lamedisc._core import (  # noqa: F401
    AsymptoticConstants,
    BoundConstants,
    ConnectionConstants,
    DiscriminantReport,
    FundamentalMatrix,
    IntegrationConfig,
    InvalidEnergy,
    LameParams,
    Modulus,
    Monotonicity,
    NonConvergence,
    OmegaUndefined,
    PoleAtNonpositiveInteger,
    PreconditionViolated,
    SeriesDivergence,
    SolutionEnvelope,
    StepLimitExceeded,
    SweepRow,
    Theorem1Target,
    Theorem2Target,
    ToleranceUnachievable,
    Verdict,
    approx_discriminant,
    asymptotic_constants,
    bound_constants,
    classify,
    complex_gamma,
    compute_row,
    connection_constants,
    discriminant,
    ellip_E,
    ellip_K,
    error_bound,
    fundamental_matrix,
    gauss_2f1,
    jacobi_sn_cn_dn,
    lemma2_envelope,
    map_pendulum,
    q_lame,
    run_sweep,
    theorem1_bound,
    theorem2_bound,
    w1,
    w1_prime,
    w2,
    w2_prime,
    z_osc,
    z_osc_prime,
    __version__,
)

__all__ = [name for name in dir() if not name.startswith("_")]
