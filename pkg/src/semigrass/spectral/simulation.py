from fractions import Fraction
from typing import List, Optional

import numpy as np

from semigrass.config import config
from semigrass.errors import ParameterOutOfRange
from semigrass.fqlinalg import batch_rank
from semigrass.gf import field_of_order
from semigrass.grassmann.counting import grassmannian_count, orbit_count
from semigrass.grassmann.enumeration import orbit_index
from semigrass.grassmann.sampling import sample_uniform_subspace
from semigrass.grassmann.schemas import GrassmannianSpec
from semigrass.qspecial import orbit_weight
from semigrass.spectral.operators import delta_operator
from semigrass.spectral.schemas import OrbitBin, OrbitDistribution, StationaryBin, WalkSummary
from semigrass.utils import get_logger

logger = get_logger("spectral")

# up(k) = q^{-2k-1} underflows long before the walk gets this far
_WALK_TABLE_SIZE = 64


def _walk_thresholds(q: int, size: int):
    op = delta_operator(q)
    down = np.array([float(op.down(k)) for k in range(size)])
    stay = np.array([float(op.stay(k)) for k in range(size)])
    return down, down + stay


def markov_walk(q: int, k0: int, steps: int, rng: np.random.Generator) -> np.ndarray:
    """
    Trajectory k_0, k_1, ..., k_steps of the averaging chain on orbit indices.

    One uniform per step is drawn up front; step t moves down if u < down(k),
    stays if u < down(k) + stay(k), and moves up otherwise.
    """
    if k0 < 0 or steps < 0:
        raise ParameterOutOfRange(f"Need k0 >= 0 and steps >= 0, got k0={k0}, steps={steps}")
    size = max(_WALK_TABLE_SIZE, k0 + 2)
    down, stay_below = _walk_thresholds(q, size)
    down_list, stay_list = down.tolist(), stay_below.tolist()
    uniforms = rng.random(steps).tolist()

    trajectory = np.empty(steps + 1, dtype=np.int64)
    trajectory[0] = k = k0
    for t, u in enumerate(uniforms, start=1):
        if k + 1 >= len(down_list):
            down, stay_below = _walk_thresholds(q, 2 * len(down_list))
            down_list, stay_list = down.tolist(), stay_below.tolist()
        if u < down_list[k]:
            k -= 1
        elif u >= stay_list[k]:
            k += 1
        trajectory[t] = k
    return trajectory


def stationary_distribution(q: int, K: Optional[int] = None) -> List[Fraction]:
    """w(k) / sum_{k' <= K} w(k') for k = 0..K."""
    K = K if K is not None else config.get_truncation()
    weights = [orbit_weight(k, q) for k in range(K + 1)]
    total = sum(weights, Fraction(0))
    return [w / total for w in weights]


def walk_summary(q: int, k0: int, steps: int, rng: np.random.Generator, kmax: int = 3) -> WalkSummary:
    """Visit frequencies of a walk beside the stationary law, for k = 0..kmax."""
    trajectory = markov_walk(q, k0, steps, rng)
    visits = np.bincount(trajectory, minlength=kmax + 1)
    exact = stationary_distribution(q)
    bins = [
        StationaryBin(k=k, visits=int(visits[k]), frequency=float(visits[k]) / len(trajectory), exact=exact[k])
        for k in range(kmax + 1)
    ]
    return WalkSummary(q=q, k0=k0, steps=steps, bins=bins)


def up_rate(trajectory: np.ndarray, k: int) -> float:
    """Fraction of the departures from k that go to k + 1."""
    at_k = trajectory[:-1] == k
    visits = int(at_k.sum())
    if visits == 0:
        return float("nan")
    return float((trajectory[1:][at_k] == k + 1).sum()) / visits


###################
### MONTE CARLO ###
###################


def _orbit_indices_batched(n: int, q: int, samples: int, rng: np.random.Generator, batch_size: int) -> np.ndarray:
    spec = field_of_order(q)
    found: List[np.ndarray] = []
    collected = 0
    while collected < samples:
        draws = rng.integers(0, q, size=(batch_size, n, 2 * n), dtype=np.int64)
        full = batch_rank(spec, draws) == n
        accepted = draws[full][: samples - collected]
        if len(accepted):
            found.append(n - batch_rank(spec, accepted[:, :, :n]))
            collected += len(accepted)
    return np.concatenate(found)


def mc_orbit_distribution(
    n: int, q: int, samples: int, rng: np.random.Generator, batch_size: int = 4096
) -> OrbitDistribution:
    """
    Tally orbit indices of uniform points of Gr_{2n}^n beside the exact ratios.

    Draws are rejection-sampled n x 2n matrices; batch_size=1 falls back to one
    :func:`sample_uniform_subspace` call per sample, which has the same law.
    """
    if n < 1 or samples < 1 or batch_size < 1:
        raise ParameterOutOfRange(f"Need n, samples, batch_size >= 1, got {n}, {samples}, {batch_size}")
    if batch_size == 1:
        gspec = GrassmannianSpec(spec=field_of_order(q), m=2 * n, k=n)
        indices = np.array([orbit_index(sample_uniform_subspace(gspec, rng), n) for _ in range(samples)])
    else:
        indices = _orbit_indices_batched(n, q, samples, rng, batch_size)
    logger.debug(f"Drew {samples} uniform points of Gr_{2 * n}^{n} over F_{q}")

    counts = np.bincount(indices, minlength=n + 1)
    total = grassmannian_count(2 * n, n, q)
    bins = []
    for k in range(n + 1):
        exact = Fraction(orbit_count(n, k, q), total)
        p = float(exact)
        bins.append(
            OrbitBin(
                k=k,
                count=int(counts[k]),
                frequency=float(counts[k]) / samples,
                exact=exact,
                stderr=float(np.sqrt(p * (1 - p) / samples)),
            )
        )
    return OrbitDistribution(n=n, q=q, samples=samples, bins=bins)
