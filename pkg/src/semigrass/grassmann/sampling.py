from collections import defaultdict
from fractions import Fraction
from typing import Dict, List, Sequence, Tuple

import numpy as np

from semigrass.errors import PatternOutOfRange
from semigrass.fqlinalg import MatrixFq, Subspace, rref_array
from semigrass.gf import FieldSpec
from semigrass.grassmann.counting import grassmannian_count
from semigrass.grassmann.enumeration import (
    enumerate_subspaces,
    hyperplane_from_functional,
    hyperplanes,
    overspace_from_direction,
    overspaces,
)
from semigrass.grassmann.schemas import GrassmannianSpec

Flag = Tuple[Subspace, ...]
FlagLaw = Dict[Flag, Fraction]


def sample_uniform_subspace(gspec: GrassmannianSpec, rng: np.random.Generator) -> Subspace:
    """
    Uniform point of Gr_m^k.

    Every subspace has exactly |GL(k, F_q)| spanning k x m matrices, so rejecting
    rank-deficient uniform matrices leaves the row space uniform.
    """
    spec, m, k = gspec.spec, gspec.m, gspec.k
    while True:
        draw = rng.integers(0, spec.q, size=(k, m), dtype=np.int64)
        reduced, pivots = rref_array(spec, draw)
        if len(pivots) == k:
            return Subspace(spec, m, MatrixFq(spec, reduced))


def _nonzero_vector(q: int, d: int, rng: np.random.Generator) -> np.ndarray:
    while True:
        v = rng.integers(0, q, size=d, dtype=np.int64)
        if np.any(v):
            return v


def sample_hyperplane(L: Subspace, rng: np.random.Generator) -> Subspace:
    # each line of functionals carries q - 1 nonzero vectors, so this is uniform
    return hyperplane_from_functional(L, _nonzero_vector(L.spec.q, L.dim, rng))


def sample_overspace(K: Subspace, rng: np.random.Generator) -> Subspace:
    return overspace_from_direction(K, _nonzero_vector(K.spec.q, K.ambient_dim - K.dim, rng))


def _check_pattern(start_dim: int, m: int, pattern: Sequence[int]) -> None:
    dim = start_dim
    for step in pattern:
        if step not in (-1, 1):
            raise PatternOutOfRange(f"Steps must be +1 or -1, got {step}")
        dim += step
        if not 0 <= dim <= m:
            raise PatternOutOfRange(f"Pattern {list(pattern)} leaves [0, {m}] from dimension {start_dim}")


def sample_flag(start: Subspace, pattern: Sequence[int], rng: np.random.Generator) -> List[Subspace]:
    """Walk from ``start``: -1 draws a uniform hyperplane, +1 a uniform overspace."""
    _check_pattern(start.dim, start.ambient_dim, pattern)
    flag = [start]
    for step in pattern:
        current = flag[-1]
        flag.append(sample_hyperplane(current, rng) if step < 0 else sample_overspace(current, rng))
    return flag


def flag_law(spec: FieldSpec, m: int, d: int, pattern: Sequence[int]) -> FlagLaw:
    """
    Exact law of the chain started from the uniform measure on Gr_m^d.

    Computed by enumerating every chain; each step splits its mass uniformly.
    """
    _check_pattern(d, m, pattern)
    start_mass = Fraction(1, grassmannian_count(m, d, spec.q))
    law: FlagLaw = {(L,): start_mass for L in enumerate_subspaces(GrassmannianSpec(spec=spec, m=m, k=d))}
    for step in pattern:
        extended: FlagLaw = {}
        for chain, mass in law.items():
            last = chain[-1]
            children = list(hyperplanes(last)) if step < 0 else list(overspaces(last, m))
            share = mass / len(children)
            for child in children:
                extended[chain + (child,)] = share
        law = extended
    return law


def forget_flag(law: FlagLaw, keep: Sequence[int]) -> FlagLaw:
    """Pushforward of a flag law under the map keeping only the positions in ``keep``."""
    pushed: Dict[Flag, Fraction] = defaultdict(Fraction)
    for chain, mass in law.items():
        pushed[tuple(chain[i] for i in keep)] += mass
    return dict(pushed)
