from typing import Any, Dict, FrozenSet, NamedTuple, Tuple

import numpy as np
from pydantic import BaseModel, ConfigDict, model_validator

from semigrass.fqlinalg import MatrixFq, rank
from semigrass.gf import FieldSpec
from semigrass.grassmann.schemas import BasisLabel, ChartIndex

Entry = Tuple[BasisLabel, BasisLabel, int]


def _in_v(label: BasisLabel, omega: FrozenSet[int], xi: FrozenSet[int]) -> bool:
    kind, index = label
    return index not in omega if kind == "e" else index in xi


def _in_w(label: BasisLabel, omega: FrozenSet[int], xi: FrozenSet[int]) -> bool:
    kind, index = label
    return index in omega if kind == "e" else index not in xi


###################
### CHART POINT ###
###################


class ChartPoint(BaseModel):
    """
    A point of the chart M[Ω, Ξ]: the graph of a finitely supported T: V[Ω, Ξ] -> W[Ω, Ξ].

    ``entries`` lists the nonzero T[row, column] as (row label, column label, value),
    rows drawn from the V[Ω, Ξ] basis and columns from the W[Ω, Ξ] basis. Beyond
    ``max_index`` the subspace is spanned by the remaining e_i.
    """

    spec: FieldSpec
    omega: FrozenSet[int] = frozenset()
    xi: FrozenSet[int] = frozenset()
    entries: Tuple[Entry, ...] = ()

    model_config = ConfigDict(frozen=True)

    @model_validator(mode="before")
    @classmethod
    def entries_must_fit_chart(cls, data: Any) -> Any:
        if not isinstance(data, dict):
            return data
        omega = frozenset(int(i) for i in data.get("omega", ()))
        xi = frozenset(int(j) for j in data.get("xi", ()))
        if any(i < 1 for i in omega | xi):
            raise ValueError("Chart indices must be positive")
        q = data["spec"].q
        cleaned: Dict[Tuple[BasisLabel, BasisLabel], int] = {}
        for row, col, value in data.get("entries", ()):
            row, col = (row[0], int(row[1])), (col[0], int(col[1]))
            if row[1] < 1 or col[1] < 1:
                raise ValueError(f"Labels must have positive indices, got {row}, {col}")
            if not _in_v(row, omega, xi):
                raise ValueError(f"{row} is not a basis vector of V[{sorted(omega)}, {sorted(xi)}]")
            if not _in_w(col, omega, xi):
                raise ValueError(f"{col} is not a basis vector of W[{sorted(omega)}, {sorted(xi)}]")
            if (row, col) in cleaned:
                raise ValueError(f"Duplicate entry at ({row}, {col})")
            if not 0 <= int(value) < q:
                raise ValueError(f"{value} is not an element of F_{q}")
            cleaned[(row, col)] = int(value)
        entries = tuple(sorted((r, c, v) for (r, c), v in cleaned.items() if v))
        return {**data, "omega": omega, "xi": xi, "entries": entries}

    @property
    def chart(self) -> ChartIndex:
        return ChartIndex(omega=self.omega, xi=self.xi)

    @property
    def max_index(self) -> int:
        labelled = [label[1] for row, col, _ in self.entries for label in (row, col)]
        return max([self.chart.max_index, *labelled])

    def matrix(self, n: int) -> MatrixFq:
        """Dense T on the window of size n: rows ``chart.v_labels(n)``, columns ``chart.w_labels(n)``."""
        rows, cols = self.chart.v_labels(n), self.chart.w_labels(n)
        row_at = {label: i for i, label in enumerate(rows)}
        col_at = {label: j for j, label in enumerate(cols)}
        dense = np.zeros((len(rows), len(cols)), dtype=np.int64)
        for row, col, value in self.entries:
            dense[row_at[row], col_at[col]] = value
        return MatrixFq(self.spec, dense)

    @classmethod
    def from_matrix(cls, T: MatrixFq, chart: ChartIndex, n: int) -> "ChartPoint":
        rows, cols = chart.v_labels(n), chart.w_labels(n)
        if T.shape != (len(rows), len(cols)):
            raise ValueError(f"Chart {chart!r} at n={n} needs a {len(rows)}x{len(cols)} matrix, got {T.shape}")
        entries = [
            (rows[i], cols[j], int(T.entries[i, j])) for i, j in zip(*np.nonzero(T.entries))
        ]
        return cls(spec=T.spec, omega=chart.omega, xi=chart.xi, entries=entries)

    def __repr__(self) -> str:
        return f"ChartPoint({self.chart!r}, {list(self.entries)})"


######################
### STABLE OBJECTS ###
######################


class StableOperator(BaseModel):
    """
    Operator on ℓ (row convention) given by an M x M' corner.

    Basis vector i <= M maps to row i of the corner; basis vector M + t maps to
    basis vector M' + t for every t >= 1.
    """

    spec: FieldSpec
    corner: MatrixFq

    model_config = ConfigDict(frozen=True, arbitrary_types_allowed=True)

    @model_validator(mode="before")
    @classmethod
    def corner_must_match_spec(cls, data: Any) -> Any:
        if isinstance(data, dict) and data["corner"].spec != data["spec"]:
            raise ValueError(f"Corner over {data['corner'].spec.describe()}, operator over {data['spec'].describe()}")
        return data

    @property
    def M(self) -> int:
        return self.corner.rows

    @property
    def M_prime(self) -> int:
        return self.corner.cols

    def padded(self, t: int) -> "StableOperator":
        """The same operator with t more tail vectors written into the corner."""
        out = np.zeros((self.M + t, self.M_prime + t), dtype=np.int64)
        out[: self.M, : self.M_prime] = self.corner.entries
        out[self.M + np.arange(t), self.M_prime + np.arange(t)] = 1
        return StableOperator(spec=self.spec, corner=MatrixFq(self.spec, out))

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, StableOperator):
            return NotImplemented
        if self.spec != other.spec or self.M - self.M_prime != other.M - other.M_prime:
            return False
        size = max(self.M, other.M)
        return self.padded(size - self.M).corner == other.padded(size - other.M).corner

    def __hash__(self) -> int:
        return hash((self.spec, self.M - self.M_prime))


class StableGroupElement(BaseModel):
    """
    J^s followed by an invertible corner acting on e_1..e_N, f_1..f_N.

    The corner is 2N x 2N with the e-block first; outside that window the element
    is the identity after the shift.
    """

    spec: FieldSpec
    shift_power: int = 0
    corner: MatrixFq

    model_config = ConfigDict(frozen=True, arbitrary_types_allowed=True)

    @model_validator(mode="before")
    @classmethod
    def corner_must_be_invertible(cls, data: Any) -> Any:
        if isinstance(data, dict):
            corner = data["corner"]
            if corner.spec != data["spec"]:
                raise ValueError(f"Corner over {corner.spec.describe()}, element over {data['spec'].describe()}")
            if corner.rows != corner.cols or corner.rows % 2:
                raise ValueError(f"Corner must be square of even size, got {corner.shape}")
            if rank(corner) != corner.rows:
                raise ValueError("Corner of a group element must be invertible")
        return data

    @property
    def N(self) -> int:
        return self.corner.rows // 2

    def padded_corner(self, W: int) -> np.ndarray:
        """The corner written on the window of size W >= N."""
        if W < self.N:
            raise ValueError(f"Window {W} is smaller than the corner window {self.N}")
        idx = list(range(self.N)) + [W + j for j in range(self.N)]
        out = np.eye(2 * W, dtype=np.int64)
        out[np.ix_(idx, idx)] = self.corner.entries
        return out

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, StableGroupElement):
            return NotImplemented
        if self.spec != other.spec or self.shift_power != other.shift_power:
            return False
        W = max(self.N, other.N)
        return bool(np.array_equal(self.padded_corner(W), other.padded_corner(W)))

    def __hash__(self) -> int:
        return hash((self.spec, self.shift_power))


class CanonicalForm(NamedTuple):
    """A = left · middle · right with middle's corner (0 0; 0 I_r)."""

    left: StableOperator
    middle: StableOperator
    right: StableOperator
    alpha: int
    beta: int


class Factorization(NamedTuple):
    h: StableGroupElement
    s: StableGroupElement
    r: StableGroupElement
