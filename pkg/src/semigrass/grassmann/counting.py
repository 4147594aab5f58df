from fractions import Fraction
from math import prod

from semigrass.errors import NotAnInteger, ParameterOutOfRange
from semigrass.grassmann.schemas import ExactMeasure


def gl_count(m: int, q: int) -> int:
    """Order of GL(m, F_q): the product of q^m - q^j over j = 0..m-1."""
    if m < 0:
        raise ParameterOutOfRange(f"m = {m} must be non-negative")
    return prod(q**m - q**j for j in range(m))


def grassmannian_count(m: int, k: int, q: int) -> int:
    """Number of k-dimensional subspaces of F_q^m (Gaussian binomial)."""
    if not 0 <= k <= m:
        raise ParameterOutOfRange(f"Need 0 <= k <= m, got k={k}, m={m}")
    num = prod(q ** (m - j) - 1 for j in range(k))
    den = prod(q ** (k - j) - 1 for j in range(k))
    count, rest = divmod(num, den)
    if rest:
        raise NotAnInteger(f"Gaussian binomial [{m} {k}]_{q} is not an integer")
    return count


def orbit_count(n: int, k: int, q: int) -> int:
    """Number of L in Gr_{2n}^n with dim(L ∩ W) = k."""
    if not 0 <= k <= n:
        raise ParameterOutOfRange(f"Need 0 <= k <= n, got k={k}, n={n}")
    qq = Fraction(q)
    value = qq ** (n * n - k * k)
    for j in range(n - k + 1, n + 1):
        value *= (1 - qq**-j) ** 2
    for j in range(1, k + 1):
        value /= (1 - qq**-j) ** 2
    if value.denominator != 1:
        raise NotAnInteger(f"orbit_count(n={n}, k={k}, q={q}) = {value}")
    return value.numerator


def mu_n(count: int, n: int, q: int) -> ExactMeasure:
    """Uniform measure on Gr_{2n}^n, normalized so that each chart has mass 1."""
    return ExactMeasure(value=Fraction(count, q ** (n * n)))


def orbit_measure(n: int, k: int, q: int) -> ExactMeasure:
    return mu_n(orbit_count(n, k, q), n, q)


def grassmannian_measure(n: int, q: int) -> ExactMeasure:
    return mu_n(grassmannian_count(2 * n, n, q), n, q)
