from semigrass.spectral.eigen import (
    asc_eigencheck,
    asc_gram_matrix,
    detailed_balance_check,
    hahn_eigencheck,
    is_symmetric,
    symmetrized_kernel,
)
from semigrass.spectral.jumps import (
    cyclic_span_dimension,
    exact_eigendata,
    finite_averaging_matrix,
    is_stochastic,
    jump_limits,
    jump_probabilities_bruteforce,
    jump_probabilities_exact,
    orbit_representative,
)
from semigrass.spectral.operators import (
    DeltaOperator,
    HahnOperator,
    TabulatedOperator,
    TridiagonalOperator,
    WeightedSpace,
    delta_operator,
    hahn_operator,
)
from semigrass.spectral.schemas import (
    AveragingSpectrum,
    JumpProbabilities,
    OrbitDistribution,
    ResidualTable,
    WalkSummary,
)
from semigrass.spectral.simulation import (
    markov_walk,
    mc_orbit_distribution,
    stationary_distribution,
    up_rate,
    walk_summary,
)

__all__ = [
    # operators
    "TridiagonalOperator",
    "HahnOperator",
    "DeltaOperator",
    "TabulatedOperator",
    "WeightedSpace",
    "hahn_operator",
    "delta_operator",
    # eigen-identities
    "ResidualTable",
    "hahn_eigencheck",
    "asc_eigencheck",
    "detailed_balance_check",
    "symmetrized_kernel",
    "is_symmetric",
    "asc_gram_matrix",
    # jumps
    "JumpProbabilities",
    "AveragingSpectrum",
    "jump_limits",
    "orbit_representative",
    "jump_probabilities_bruteforce",
    "jump_probabilities_exact",
    "finite_averaging_matrix",
    "cyclic_span_dimension",
    "exact_eigendata",
    "is_stochastic",
    # simulation
    "OrbitDistribution",
    "WalkSummary",
    "markov_walk",
    "stationary_distribution",
    "walk_summary",
    "up_rate",
    "mc_orbit_distribution",
]
