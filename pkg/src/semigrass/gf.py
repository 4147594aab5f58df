"""
Exact arithmetic in F_q, q = p^e.

Elements are encoded as integers: the element c_0 + c_1 x + ... + c_{e-1} x^{e-1}
is stored as c_0 + c_1 p + ... + c_{e-1} p^{e-1}. Every arithmetic method of
:class:`FieldSpec` accepts python ints or numpy integer arrays of encodings and
broadcasts, which is what the matrix kernels in ``fqlinalg`` rely on.
"""

from dataclasses import dataclass
from functools import cached_property, lru_cache
from typing import Any, Iterator, List, NamedTuple, Tuple, Union

import numpy as np
from pydantic import BaseModel, ConfigDict, model_validator

from semigrass import consts
from semigrass.errors import (
    DegreeOutOfRange,
    DivisionByZero,
    NoIrreducibleFound,
    NonPrime,
    SpecMismatch,
)

Encoded = Union[int, np.ndarray]


def is_prime(n: int) -> bool:
    if n < 2:
        return False
    if n % 2 == 0:
        return n == 2
    d = 3
    while d * d <= n:
        if n % d == 0:
            return False
        d += 2
    return True


def _prime_factors(n: int) -> List[int]:
    factors = []
    d = 2
    while d * d <= n:
        if n % d == 0:
            factors.append(d)
            while n % d == 0:
                n //= d
        d += 1
    if n > 1:
        factors.append(n)
    return factors


#######################
### POLYNOMIALS/F_p ###
#######################


def _poly_rem(a: List[int], b: Tuple[int, ...], p: int) -> List[int]:
    """Remainder of a modulo the monic polynomial b, coefficients low degree first."""
    a = [c % p for c in a]
    db = len(b) - 1
    while len(a) - 1 >= db and any(a):
        while a and a[-1] == 0:
            a.pop()
        if len(a) - 1 < db:
            break
        lead = a[-1]
        shift = len(a) - 1 - db
        for i, c in enumerate(b):
            a[shift + i] = (a[shift + i] - lead * c) % p
        a.pop()
    return a


def _monic_polynomials(p: int, degree: int) -> Iterator[Tuple[int, ...]]:
    # the base-p value of the lower coefficients orders the candidates
    for value in range(p**degree):
        coeffs = []
        for _ in range(degree):
            coeffs.append(value % p)
            value //= p
        yield tuple(coeffs) + (1,)


def is_irreducible(poly: Tuple[int, ...], p: int) -> bool:
    degree = len(poly) - 1
    if degree < 1 or poly[-1] != 1:
        return False
    if degree == 1:
        return True
    for d in range(1, degree // 2 + 1):
        for divisor in _monic_polynomials(p, d):
            if not any(_poly_rem(list(poly), divisor, p)):
                return False
    return True


def least_irreducible(p: int, e: int) -> Tuple[int, ...]:
    if e == 1:
        return (0, 1)
    for candidate in _monic_polynomials(p, e):
        if is_irreducible(candidate, p):
            return candidate
    raise NoIrreducibleFound(f"No monic irreducible of degree {e} over F_{p}")


class FieldTables(NamedTuple):
    exp: np.ndarray
    log: np.ndarray
    inv: np.ndarray


class FieldSpec(BaseModel):
    """
    The finite field F_q with q = p^e.

    Attributes:
        p (int): Prime characteristic.
        e (int): Extension degree.
        modulus (Tuple[int, ...]): Coefficients c_0..c_e of the monic irreducible
            defining polynomial, lowest degree first. ``(0, 1)`` for prime fields.
    """

    p: int
    e: int = 1
    modulus: Tuple[int, ...]

    model_config = ConfigDict(frozen=True)

    @model_validator(mode="before")
    @classmethod
    def modulus_must_match_degree(cls, data: Any) -> Any:
        if isinstance(data, dict):
            e = data.get("e", 1)
            if "modulus" not in data:
                return {**data, "modulus": least_irreducible(data["p"], e)}
            if len(data["modulus"]) != e + 1:
                raise ValueError("modulus must have degree e")
            if data["modulus"][-1] != 1:
                raise ValueError("modulus must be monic")
            if e > 1 and not is_irreducible(tuple(data["modulus"]), data["p"]):
                raise ValueError("modulus must be irreducible over F_p")
        return data

    @property
    def q(self) -> int:
        return self.p**self.e

    @property
    def is_prime_field(self) -> bool:
        return self.e == 1

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, FieldSpec):
            return NotImplemented
        return (self.p, self.e, self.modulus) == (other.p, other.e, other.modulus)

    def __hash__(self) -> int:
        return hash((self.p, self.e, self.modulus))

    def __repr__(self) -> str:
        return f"FieldSpec(q={self.q})"

    def describe(self) -> str:
        if self.is_prime_field:
            return f"F_{self.q}"
        return f"F_{self.q} mod {_poly_str(self.modulus)}"

    ##################
    ### TABLES ###
    ##################

    def _raw_mul(self, a: int, b: int) -> int:
        """Schoolbook product of two encodings, reduced by the modulus."""
        p, e = self.p, self.e
        da = [(a // p**i) % p for i in range(e)]
        db = [(b // p**i) % p for i in range(e)]
        prod = [0] * (2 * e - 1)
        for i, x in enumerate(da):
            if x:
                for j, y in enumerate(db):
                    prod[i + j] += x * y
        rem = _poly_rem(prod, self.modulus, p)
        return sum(c * p**i for i, c in enumerate(rem))

    def _raw_pow(self, a: int, k: int) -> int:
        result = 1
        while k:
            if k & 1:
                result = self._raw_mul(result, a)
            a = self._raw_mul(a, a)
            k >>= 1
        return result

    @cached_property
    def primitive_element(self) -> int:
        q = self.q
        if q == 2:
            return 1
        exponents = [(q - 1) // r for r in _prime_factors(q - 1)]
        for g in range(2, q):
            if all(self._raw_pow(g, k) != 1 for k in exponents):
                return g
        raise NoIrreducibleFound(f"{self.describe()} has no primitive element")

    @cached_property
    def tables(self) -> FieldTables:
        q = self.q
        if self.is_prime_field:
            inv = np.zeros(q, dtype=np.int64)
            inv[1:] = [pow(x, q - 2, q) for x in range(1, q)]
            return FieldTables(exp=np.empty(0, np.int64), log=np.empty(0, np.int64), inv=inv)

        g = self.primitive_element
        exp = np.zeros(q - 1, dtype=np.int64)
        log = np.zeros(q, dtype=np.int64)
        x = 1
        for i in range(q - 1):
            exp[i] = x
            log[x] = i
            x = self._raw_mul(x, g)
        inv = np.zeros(q, dtype=np.int64)
        inv[1:] = exp[(-log[1:]) % (q - 1)]
        return FieldTables(exp=exp, log=log, inv=inv)

    ##################
    ### ARITHMETIC ###
    ##################

    def _digitwise(self, a: Encoded, b: Encoded, sign: int) -> Encoded:
        p = self.p
        result: Encoded = 0
        place = 1
        for _ in range(self.e):
            da = (a // place) % p
            db = (b // place) % p
            result = result + ((da + sign * db) % p) * place
            place *= p
        return result

    def add(self, a: Encoded, b: Encoded) -> Encoded:
        if self.is_prime_field:
            return (a + b) % self.p
        if self.p == 2:
            return np.bitwise_xor(a, b)
        return self._digitwise(a, b, 1)

    def sub(self, a: Encoded, b: Encoded) -> Encoded:
        if self.is_prime_field:
            return (a - b) % self.p
        if self.p == 2:
            return np.bitwise_xor(a, b)
        return self._digitwise(a, b, -1)

    def neg(self, a: Encoded) -> Encoded:
        return self.sub(0 * a, a)

    def mul(self, a: Encoded, b: Encoded) -> Encoded:
        if self.is_prime_field:
            return (a * b) % self.p
        exp, log, _ = self.tables
        a = np.asarray(a)
        b = np.asarray(b)
        idx = (log[a] + log[b]) % (self.q - 1)
        return np.where((a == 0) | (b == 0), 0, exp[idx])

    def inv(self, a: Encoded) -> Encoded:
        if np.any(np.asarray(a) == 0):
            raise DivisionByZero(f"Zero has no inverse in {self.describe()}")
        return self.tables.inv[a]

    def power(self, a: int, k: int) -> int:
        if k < 0:
            a, k = int(self.inv(a)), -k
        result = 1
        while k:
            if k & 1:
                result = int(self.mul(result, a))
            a = int(self.mul(a, a))
            k >>= 1
        return result


def _poly_str(coeffs: Tuple[int, ...]) -> str:
    terms = []
    for i in range(len(coeffs) - 1, -1, -1):
        c = coeffs[i]
        if c == 0:
            continue
        mono = "1" if i == 0 else ("x" if i == 1 else f"x^{i}")
        if c != 1 and i > 0:
            mono = f"{c}{mono}"
        elif i == 0:
            mono = str(c)
        terms.append(mono)
    return " + ".join(terms) or "0"


@lru_cache(maxsize=None)
def field_new(p: int, e: int = 1) -> FieldSpec:
    """
    Build F_{p^e} over the lexicographically least monic irreducible modulus.

    Raises:
        NonPrime: p is not prime.
        DegreeOutOfRange: e outside 1..4, or p^e above 2^16.
    """
    if not is_prime(p):
        raise NonPrime(f"{p} is not prime")
    if not 1 <= e <= consts.MAX_EXTENSION_DEGREE:
        raise DegreeOutOfRange(f"Extension degree {e} outside 1..{consts.MAX_EXTENSION_DEGREE}")
    if p**e > consts.MAX_FIELD_ORDER:
        raise DegreeOutOfRange(f"Field order {p}^{e} exceeds {consts.MAX_FIELD_ORDER}")
    return FieldSpec(p=p, e=e, modulus=least_irreducible(p, e))


def field_of_order(q: int) -> FieldSpec:
    """Resolve a prime power q to its (p, e) and build the field."""
    if q < 2:
        raise NonPrime(f"{q} is not a prime power")
    p = _prime_factors(q)[0]
    e = 0
    rest = q
    while rest % p == 0:
        rest //= p
        e += 1
    if rest != 1:
        raise NonPrime(f"{q} is not a prime power")
    return field_new(p, e)


@dataclass(frozen=True)
class FieldElement:
    spec: FieldSpec
    value: int

    def __post_init__(self):
        if not 0 <= self.value < self.spec.q:
            raise ValueError(f"{self.value} is not a canonical element of {self.spec.describe()}")

    def __repr__(self) -> str:
        if self.spec.is_prime_field:
            return str(self.value)
        p = self.spec.p
        return _poly_str(tuple((self.value // p**i) % p for i in range(self.spec.e)))

    def __bool__(self) -> bool:
        return self.value != 0

    def __add__(self, other: "FieldElement") -> "FieldElement":
        return add(self, other)

    def __sub__(self, other: "FieldElement") -> "FieldElement":
        return add(self, neg(other))

    def __mul__(self, other: "FieldElement") -> "FieldElement":
        return mul(self, other)

    def __truediv__(self, other: "FieldElement") -> "FieldElement":
        return mul(self, inv(other))

    def __neg__(self) -> "FieldElement":
        return neg(self)

    def __pow__(self, k: int) -> "FieldElement":
        return FieldElement(self.spec, self.spec.power(self.value, k))


def _same_spec(a: FieldElement, b: FieldElement) -> FieldSpec:
    if a.spec != b.spec:
        raise SpecMismatch(f"{a.spec.describe()} vs {b.spec.describe()}")
    return a.spec


def add(a: FieldElement, b: FieldElement) -> FieldElement:
    spec = _same_spec(a, b)
    return FieldElement(spec, int(spec.add(a.value, b.value)))


def mul(a: FieldElement, b: FieldElement) -> FieldElement:
    spec = _same_spec(a, b)
    return FieldElement(spec, int(spec.mul(a.value, b.value)))


def neg(a: FieldElement) -> FieldElement:
    return FieldElement(a.spec, int(a.spec.neg(a.value)))


def inv(a: FieldElement) -> FieldElement:
    return FieldElement(a.spec, int(a.spec.inv(a.value)))


def elements(spec: FieldSpec) -> List[FieldElement]:
    """All q elements in encoding order: 0, 1, then the rest."""
    return [FieldElement(spec, v) for v in range(spec.q)]
