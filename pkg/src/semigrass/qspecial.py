"""
Exact q-series: q-Pochhammer symbols, terminating basic hypergeometric series,
and the q-Hahn / Al-Salam-Carlitz II families built from them.

Every value is a :class:`fractions.Fraction`; floats only appear in
:func:`total_mass_float`.
"""

from fractions import Fraction
from math import prod
from typing import Any, Optional, Sequence, Tuple, Union

import numpy as np
from pydantic import BaseModel, ConfigDict, model_validator

from semigrass import consts
from semigrass.config import config
from semigrass.errors import LowerParameterPole, NonTerminating, ParameterOutOfRange

QRational = Fraction
Scalar = Union[int, Fraction]


class SeriesParams(BaseModel):
    """Parameters of r_phi_s(a_1..a_r; b_1..b_s; base; argument)."""

    upper: Tuple[Fraction, ...]
    lower: Tuple[Fraction, ...] = ()
    base: Fraction
    argument: Fraction

    model_config = ConfigDict(frozen=True, arbitrary_types_allowed=True)

    @model_validator(mode="before")
    @classmethod
    def coerce_to_rationals(cls, data: Any) -> Any:
        if isinstance(data, dict):
            data = dict(data)
            for key in ("upper", "lower"):
                data[key] = tuple(Fraction(x) for x in data.get(key, ()))
            for key in ("base", "argument"):
                data[key] = Fraction(data[key])
            if data["base"] == 0:
                raise ValueError("base must be nonzero")
        return data


def qpochhammer(a: Scalar, base: Scalar, k: int) -> QRational:
    """(a; base)_k = (1 - a)(1 - a·base)...(1 - a·base^{k-1})."""
    if k < 0:
        raise ParameterOutOfRange(f"k = {k} must be non-negative")
    a, base = Fraction(a), Fraction(base)
    return prod((1 - a * base**i for i in range(k)), start=Fraction(1))


def phi(params: SeriesParams, term_cap: Optional[int] = None) -> QRational:
    """
    Sum of a terminating basic hypergeometric series.

    Term m is prod (a_i; base)_m / prod (b_i; base)_m / (base; base)_m
    times ((-1)^m base^{m(m-1)/2})^{1+s-r} times argument^m. Summation stops at
    the first m where an upper Pochhammer symbol vanishes.

    Raises:
        NonTerminating: no upper symbol vanishes within ``term_cap`` terms.
        LowerParameterPole: a lower symbol vanishes first.
    """
    cap = term_cap if term_cap is not None else config.get_term_cap()
    base, z = params.base, params.argument
    excess = 1 + len(params.lower) - len(params.upper)

    numerator = Fraction(1)
    denominator = Fraction(1)
    total = Fraction(0)
    for m in range(cap + 1):
        if m > 0:
            shift = base ** (m - 1)
            numerator *= prod((1 - a * shift for a in params.upper), start=Fraction(1))
            denominator *= prod((1 - b * shift for b in params.lower), start=Fraction(1))
            denominator *= 1 - base**m
        if numerator == 0:
            return total
        if denominator == 0:
            raise LowerParameterPole(f"Lower parameter pole at term {m} of {params!r}")
        sign = -1 if (excess * m) % 2 else 1
        total += numerator / denominator * sign * base ** (excess * m * (m - 1) // 2) * z**m
    raise NonTerminating(f"No upper parameter terminates the series within {cap} terms")


def q_hahn(j: int, k: int, n: int, q: int) -> QRational:
    """Q_j(q^{-k}) = 3phi2(q^{-j}, q^{j-2n-1}, q^{-k}; q^{-n}, q^{-n}; q; q)."""
    if not (0 <= j <= n and 0 <= k <= n):
        raise ParameterOutOfRange(f"Need 0 <= j, k <= n, got j={j}, k={k}, n={n}")
    qq = Fraction(q)
    return phi(
        SeriesParams(
            upper=(qq**-j, qq ** (j - 2 * n - 1), qq**-k),
            lower=(qq**-n, qq**-n),
            base=qq,
            argument=qq,
        )
    )


def alsalam_carlitz2(j: int, k: int, q: int) -> QRational:
    """V_j(q^k) = (-1)^j q^{j(j-1)/2} 2phi0(q^j, q^k; -; q^{-1}; q^{-j})."""
    if j < 0 or k < 0:
        raise ParameterOutOfRange(f"Need j, k >= 0, got j={j}, k={k}")
    qq = Fraction(q)
    series = phi(SeriesParams(upper=(qq**j, qq**k), lower=(), base=1 / qq, argument=qq**-j))
    sign = -1 if j % 2 else 1
    return sign * qq ** (j * (j - 1) // 2) * series


def orbit_weight(k: int, q: int) -> QRational:
    """Invariant measure of the orbit O_k: q^{-k^2} / prod_{j<=k} (1 - q^{-j})^2."""
    if k < 0:
        raise ParameterOutOfRange(f"k = {k} must be non-negative")
    qq = Fraction(q)
    return qq ** (-k * k) / qpochhammer(1 / qq, 1 / qq, k) ** 2


def orbit_weight_partial_sum(K: int, q: int) -> QRational:
    return sum((orbit_weight(k, q) for k in range(K + 1)), Fraction(0))


def total_mass_partial(J: int, q: int) -> QRational:
    """prod_{j=1}^{J} (1 - q^{-j})^{-1}."""
    if J < 1:
        raise ParameterOutOfRange(f"J = {J} must be at least 1")
    qq = Fraction(q)
    return 1 / qpochhammer(1 / qq, 1 / qq, J)


def total_mass_float(q: int, tol: float = consts.TOTAL_MASS_TOLERANCE) -> float:
    """The infinite product, truncated once the remaining factors are within ``tol`` of 1."""
    if q < 2:
        raise ParameterOutOfRange(f"q = {q} must be at least 2")
    # the tail prod_{j>J}(1 - q^{-j})^{-1} differs from 1 by about q^{-J}
    J = int(np.ceil(-np.log(tol * 1e-4) / np.log(q))) + 1
    j = np.arange(1, J + 1, dtype=np.float64)
    return float(1.0 / np.prod(1.0 - np.power(float(q), -j)))


def divided_difference(xs: Sequence[Scalar], ys: Sequence[Scalar]) -> QRational:
    """Top-order divided difference f[x_0, ..., x_m]; zero when f has degree < m."""
    if len(xs) != len(ys) or not xs:
        raise ValueError("Need matching non-empty node and value sequences")
    table = [Fraction(y) for y in ys]
    nodes = [Fraction(x) for x in xs]
    for order in range(1, len(nodes)):
        table = [
            (table[i + 1] - table[i]) / (nodes[i + order] - nodes[i]) for i in range(len(table) - 1)
        ]
    return table[0]
