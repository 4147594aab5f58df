from fractions import Fraction
from typing import Any, FrozenSet, List, Literal, Tuple

from pydantic import BaseModel, ConfigDict, model_validator

from semigrass.gf import FieldSpec

BasisLabel = Tuple[Literal["e", "f"], int]


def label_coordinate(label: BasisLabel, n: int) -> int:
    """Zero-based coordinate of e_i / f_j inside F_q^{2n}: e-block first, then f-block."""
    kind, index = label
    if not 1 <= index <= n:
        raise ValueError(f"{kind}_{index} lies outside the window of size {n}")
    return index - 1 if kind == "e" else n + index - 1


class GrassmannianSpec(BaseModel):
    spec: FieldSpec
    m: int
    k: int

    model_config = ConfigDict(frozen=True)

    @model_validator(mode="before")
    @classmethod
    def k_must_fit_in_ambient(cls, data: Any) -> Any:
        if isinstance(data, dict) and not 0 <= data.get("k", 0) <= data.get("m", 0):
            raise ValueError("Need 0 <= k <= m")
        return data


class ChartIndex(BaseModel):
    """
    Index (Ω, Ξ) of the chart M[Ω, Ξ].

    V[Ω, Ξ] is spanned by e_i (i ∉ Ω) and f_j (j ∈ Ξ); W[Ω, Ξ] by e_i (i ∈ Ω)
    and f_j (j ∉ Ξ). Points of the chart are graphs of maps V[Ω, Ξ] -> W[Ω, Ξ].
    """

    omega: FrozenSet[int] = frozenset()
    xi: FrozenSet[int] = frozenset()

    model_config = ConfigDict(frozen=True)

    @model_validator(mode="before")
    @classmethod
    def indices_must_be_positive(cls, data: Any) -> Any:
        if isinstance(data, dict):
            for key in ("omega", "xi"):
                if any(i < 1 for i in data.get(key, ())):
                    raise ValueError(f"{key} indices must be positive")
        return data

    @property
    def max_index(self) -> int:
        return max(self.omega | self.xi, default=0)

    @property
    def sort_key(self) -> Tuple[int, int, Tuple[int, ...], Tuple[int, ...]]:
        return (self.max_index, len(self.omega), tuple(sorted(self.omega)), tuple(sorted(self.xi)))

    @property
    def relative_dimension(self) -> int:
        return len(self.xi) - len(self.omega)

    def v_labels(self, n: int) -> List[BasisLabel]:
        return [("e", i) for i in range(1, n + 1) if i not in self.omega] + [
            ("f", j) for j in sorted(self.xi)
        ]

    def w_labels(self, n: int) -> List[BasisLabel]:
        return [("e", i) for i in sorted(self.omega)] + [
            ("f", j) for j in range(1, n + 1) if j not in self.xi
        ]

    def __repr__(self) -> str:
        return f"M[{sorted(self.omega)}, {sorted(self.xi)}]"


class ExactMeasure(BaseModel):
    value: Fraction

    model_config = ConfigDict(frozen=True, arbitrary_types_allowed=True)

    @model_validator(mode="before")
    @classmethod
    def value_must_be_nonnegative(cls, data: Any) -> Any:
        if isinstance(data, dict):
            value = Fraction(data["value"])
            if value < 0:
                raise ValueError("A measure cannot be negative")
            return {**data, "value": value}
        return data

    def __float__(self) -> float:
        return float(self.value)
