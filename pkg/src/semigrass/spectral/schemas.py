from fractions import Fraction
from functools import cached_property
from typing import List, Optional, Tuple

from pydantic import BaseModel, ConfigDict


class ResidualRow(BaseModel):
    k: int
    value: Fraction
    residual: Fraction

    model_config = ConfigDict(frozen=True, arbitrary_types_allowed=True)


class ResidualTable(BaseModel):
    """Pointwise residuals of an eigen-identity (operator - eigenvalue) f at each orbit index."""

    family: str
    j: int
    eigenvalue: Fraction
    rows: List[ResidualRow]

    model_config = ConfigDict(frozen=True, arbitrary_types_allowed=True)

    @cached_property
    def all_zero(self) -> bool:
        return all(row.residual == 0 for row in self.rows)


class JumpProbabilities(BaseModel):
    down: Fraction
    stay: Fraction
    up: Fraction

    model_config = ConfigDict(frozen=True, arbitrary_types_allowed=True)

    @property
    def total(self) -> Fraction:
        return self.down + self.stay + self.up

    def as_tuple(self) -> Tuple[Fraction, Fraction, Fraction]:
        return self.down, self.stay, self.up

    def deviation(self, other: "JumpProbabilities") -> float:
        """Largest absolute difference over the three moves."""
        return float(max(abs(a - b) for a, b in zip(self.as_tuple(), other.as_tuple())))


class OrbitBin(BaseModel):
    k: int
    count: int
    frequency: float
    exact: Fraction
    stderr: float

    model_config = ConfigDict(frozen=True, arbitrary_types_allowed=True)

    @property
    def z_score(self) -> float:
        if self.stderr == 0:
            return 0.0 if self.frequency == float(self.exact) else float("inf")
        return (self.frequency - float(self.exact)) / self.stderr


class OrbitDistribution(BaseModel):
    n: int
    q: int
    samples: int
    bins: List[OrbitBin]

    model_config = ConfigDict(frozen=True, arbitrary_types_allowed=True)

    def within(self, sigmas: float = 3.0) -> bool:
        return all(abs(b.z_score) <= sigmas for b in self.bins)


class StationaryBin(BaseModel):
    k: int
    visits: int
    frequency: float
    exact: Fraction

    model_config = ConfigDict(frozen=True, arbitrary_types_allowed=True)


class WalkSummary(BaseModel):
    q: int
    k0: int
    steps: int
    bins: List[StationaryBin]

    model_config = ConfigDict(frozen=True, arbitrary_types_allowed=True)

    def max_deviation(self, kmax: int) -> float:
        return max(abs(b.frequency - float(b.exact)) for b in self.bins if b.k <= kmax)


class AveragingSpectrum(BaseModel):
    """Exact spectral data of the finite averaging matrix on functions of the orbit index."""

    n: int
    q: int
    matrix: List[List[Fraction]]
    charpoly: List[Fraction]
    charpoly_factors: List[Tuple[List[Fraction], int]]
    eigenvalues_exact: List[str]
    rational_eigenvalues: List[Fraction]
    eigenvalues_approx: List[float]
    hahn_eigenvalues: List[Fraction]
    hahn_eigenvector_residuals_approx: List[float]
    cyclic_span_dimension: int
    note: Optional[str] = None

    model_config = ConfigDict(frozen=True, arbitrary_types_allowed=True)
