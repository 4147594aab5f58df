import csv
import io
import json
from fractions import Fraction
from pathlib import Path
from typing import Any, Dict, List, Literal, Optional, Union

from pydantic import BaseModel, ConfigDict, Field, model_validator

from semigrass import consts
from semigrass.utils import exact_str

Cell = Union[str, float, bool]

Command = Literal["count", "enumerate", "measure", "spectrum", "sample", "walk", "verify"]


def _cell(key: str, value: Any) -> Cell:
    if isinstance(value, bool):
        return value
    if isinstance(value, (int, Fraction)):
        return exact_str(value)
    if isinstance(value, float):
        if not key.endswith("_approx"):
            raise ValueError(f"Column {key!r} holds a float but is not marked _approx")
        return value
    return str(value)


class Report(BaseModel):
    """
    One command's output: a header plus a table of rows.

    Exact values are rendered as strings, so that counts beyond 64 bits survive any
    JSON consumer. Floats are only allowed in ``*_approx`` columns.
    """

    q: int
    n: Optional[int] = None
    command: Command
    seed: Optional[str] = None
    rows: List[Dict[str, Cell]] = Field(default_factory=list)

    model_config = ConfigDict(frozen=True)

    @model_validator(mode="before")
    @classmethod
    def render_exact_values(cls, data: Any) -> Any:
        if not isinstance(data, dict):
            return data
        rows = [{key: _cell(key, value) for key, value in row.items()} for row in data.get("rows", [])]
        seed = data.get("seed")
        return {**data, "rows": rows, "seed": None if seed is None else str(seed)}

    @property
    def columns(self) -> List[str]:
        """Union of the row keys, in first-seen order."""
        seen: Dict[str, None] = {}
        for row in self.rows:
            for key in row:
                seen.setdefault(key, None)
        return list(seen)

    def to_json(self) -> str:
        return json.dumps(self.model_dump(mode="json"), sort_keys=True, indent=2) + "\n"

    def to_csv(self) -> str:
        buffer = io.StringIO()
        writer = csv.DictWriter(buffer, fieldnames=self.columns, lineterminator="\n")
        writer.writeheader()
        for row in self.rows:
            writer.writerow({key: repr(v) if isinstance(v, float) else v for key, v in row.items()})
        return buffer.getvalue()

    def render(self, fmt: consts.OutputFormat) -> str:
        return self.to_json() if fmt == "json" else self.to_csv()


class RunConfig(BaseModel):
    """Validated command-line flags shared by every subcommand."""

    q: int = Field(default=2, ge=2, le=consts.MAX_FIELD_ORDER, description="Field order, a prime power.")
    n: Optional[int] = Field(default=None, ge=0, le=64, description="Half the ambient dimension.")
    k: Optional[int] = Field(default=None, ge=0, le=128, description="Subspace dimension for enumerate.")
    kmax: int = Field(default=12, ge=0, le=200)
    jmax: int = Field(default=8, ge=0, le=200)
    K: int = Field(default=consts.DEFAULT_TRUNCATION, ge=1, le=2000, description="Truncation of the infinite model.")
    samples: int = Field(default=100_000, ge=1, le=10**8)
    steps: int = Field(default=1_000_000, ge=1, le=10**9)
    seed: int = Field(default=consts.DEFAULT_SEED, ge=0, lt=2**64)
    format: consts.OutputFormat = "json"
    out: Optional[Path] = None
    suite: str = "all"
    verify_by_enumeration: bool = False
    infinite: bool = False
    timings: bool = False

    model_config = ConfigDict(extra="forbid", frozen=True)

    @model_validator(mode="before")
    @classmethod
    def q_must_be_prime_power(cls, data: Any) -> Any:
        if isinstance(data, dict) and isinstance(data.get("q"), int) and data["q"] >= 2:
            q = data["q"]
            p = next(d for d in range(2, q + 1) if q % d == 0)
            while q % p == 0:
                q //= p
            if q != 1:
                raise ValueError(f"Field order {data['q']} is not a prime power")
        return data

    def require_n(self) -> int:
        if self.n is None:
            raise ValueError("This command needs --n")
        return self.n
