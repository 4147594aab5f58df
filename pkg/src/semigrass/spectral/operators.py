from abc import ABC, abstractmethod
from fractions import Fraction
from typing import Callable, List, Optional, Sequence, Tuple

from semigrass.errors import ParameterOutOfRange
from semigrass.qspecial import QRational, orbit_weight

Function = Callable[[int], QRational]


class TridiagonalOperator(ABC):
    """
    y(k) -> down(k) y(k-1) + stay(k) y(k) + up(k) y(k+1) on the orbit indices k >= 0.

    ``cutoff`` is the last index of a finite model, or None for the infinite one.
    """

    cutoff: Optional[int] = None

    @abstractmethod
    def down(self, k: int) -> QRational:
        raise NotImplementedError("Subclasses must implement this method.")

    @abstractmethod
    def stay(self, k: int) -> QRational:
        raise NotImplementedError("Subclasses must implement this method.")

    @abstractmethod
    def up(self, k: int) -> QRational:
        raise NotImplementedError("Subclasses must implement this method.")

    def row(self, k: int) -> Tuple[QRational, QRational, QRational]:
        return self.down(k), self.stay(k), self.up(k)

    def apply(self, y: Function, k: int) -> QRational:
        if self.cutoff is not None and not 0 <= k <= self.cutoff:
            raise ParameterOutOfRange(f"k = {k} outside 0..{self.cutoff}")
        value = self.stay(k) * y(k)
        if k > 0:
            value += self.down(k) * y(k - 1)
        if self.cutoff is None or k < self.cutoff:
            value += self.up(k) * y(k + 1)
        return value

    def matrix(self, size: int) -> List[List[QRational]]:
        """Rows 0..size-1 of the operator; entries past the last column are dropped."""
        rows = []
        for k in range(size):
            row = [Fraction(0)] * size
            row[k] = self.stay(k)
            if k > 0:
                row[k - 1] = self.down(k)
            if k + 1 < size:
                row[k + 1] = self.up(k)
            rows.append(row)
        return rows


class HahnOperator(TridiagonalOperator):
    """
    The q-Hahn difference operator on {0..n}:
    B(k) y(k+1) - (B(k) + D(k)) y(k) + D(k) y(k-1), with
    B(k) = (1 - q^{k-n})^2 and D(k) = q^{-2n-1} (1 - q^k)^2.
    """

    def __init__(self, n: int, q: int):
        if n < 1:
            raise ParameterOutOfRange(f"n = {n} must be at least 1")
        self.n = n
        self.q = Fraction(q)
        self.cutoff = n

    def B(self, k: int) -> QRational:
        return (1 - self.q ** (k - self.n)) ** 2

    def D(self, k: int) -> QRational:
        return self.q ** (-2 * self.n - 1) * (1 - self.q**k) ** 2

    def down(self, k: int) -> QRational:
        return self.D(k)

    def stay(self, k: int) -> QRational:
        return -(self.B(k) + self.D(k))

    def up(self, k: int) -> QRational:
        return self.B(k)

    def eigenvalue(self, j: int) -> QRational:
        return -(1 - self.q**-j) * (1 - self.q ** (j - 2 * self.n - 1))


class DeltaOperator(TridiagonalOperator):
    """Restriction of the averaging operator to functions of the orbit index (infinite model)."""

    def __init__(self, q: int):
        self.q = Fraction(q)

    def down(self, k: int) -> QRational:
        return (1 - self.q**-k) ** 2

    def stay(self, k: int) -> QRational:
        q = self.q
        return 2 * q**-k - q ** (-2 * k) - q ** (-2 * k - 1)

    def up(self, k: int) -> QRational:
        return self.q ** (-2 * k - 1)

    def eigenvalue(self, j: int) -> QRational:
        return self.q**-j


class TabulatedOperator(TridiagonalOperator):
    """A finite tridiagonal operator given by explicit (down, stay, up) rows."""

    def __init__(self, rows: Sequence[Tuple[QRational, QRational, QRational]]):
        if not rows:
            raise ValueError("Need at least one row")
        self._rows = [tuple(Fraction(x) for x in row) for row in rows]
        self.cutoff = len(rows) - 1

    def down(self, k: int) -> QRational:
        return self._rows[k][0]

    def stay(self, k: int) -> QRational:
        return self._rows[k][1]

    def up(self, k: int) -> QRational:
        return self._rows[k][2]


class WeightedSpace:
    """Functions of the orbit index with inner product sum_k w(k) x(k) y(k)."""

    def __init__(self, q: int):
        self.q = q

    def weight(self, k: int) -> QRational:
        return orbit_weight(k, self.q)

    def inner(self, x: Function, y: Function, K: int) -> QRational:
        return sum((self.weight(k) * x(k) * y(k) for k in range(K + 1)), Fraction(0))


def hahn_operator(n: int, q: int) -> HahnOperator:
    return HahnOperator(n, q)


def delta_operator(q: int) -> DeltaOperator:
    return DeltaOperator(q)
