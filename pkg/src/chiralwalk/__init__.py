"""Chirality distribution, master equation and coin-position entanglement
for the discrete-time quantum walk on the line."""

from .asymptotics import (
    AsymptoticRecord,
    BesselRow,
    asymptotic_invariants,
    asymptotic_state,
    bessel_row,
)
from .errors import (
    ChiralWalkError,
    DomainError,
    InconsistentCoherenceError,
    InfeasibleCoherenceError,
    InvalidDensityError,
    NormalizationError,
    NoValidPhaseError,
)
from .gaussian import (
    GaussianInitParams,
    build_gaussian_state,
    design_from_entropy,
    predict_asymptotics,
    s0_from_pi_left,
    shannon_entropy,
    solve_delta,
)
from .markov import master_step, markov_closed_form, stationary_gcd, transition_matrix
from .observables import (
    ChiralityDist,
    EntanglementReport,
    ReducedCoinState,
    coherence,
    entanglement_entropy,
    gcd,
    reduced_density,
)
from .runner import (
    ConvergenceReport,
    InitSpec,
    RunConfig,
    detect_t0,
    level_crossings,
    run_evolution,
    sweep_entropy_surface,
)
from .walk import (
    CoinParams,
    PositionProfile,
    WalkerState,
    evolve,
    init_localized,
    position_spread,
    prob_step,
    profile,
    step,
    trajectory,
)

__version__ = "0.1.0"
