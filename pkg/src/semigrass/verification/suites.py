from abc import ABC, abstractmethod
from fractions import Fraction
from typing import List, Optional, Sequence, Tuple

import numpy as np
from pydantic import BaseModel, ConfigDict

from semigrass import semiinf
from semigrass.errors import InvariantViolated
from semigrass.gf import field_of_order
from semigrass.grassmann import (
    GrassmannianSpec,
    chart_membership,
    chart_transition,
    enumerate_subspaces,
    find_chart,
    finite_charts,
    flag_law,
    forget_flag,
    grassmannian_count,
    grassmannian_measure,
    moebius_census,
    orbit_count,
    orbit_measure,
    orbit_tally,
)
from semigrass.grassmann.charts import all_matrices
from semigrass.grassmann.schemas import ChartIndex
from semigrass.qspecial import orbit_weight, orbit_weight_partial_sum, total_mass_float
from semigrass.spectral import (
    asc_eigencheck,
    asc_gram_matrix,
    cyclic_span_dimension,
    detailed_balance_check,
    finite_averaging_matrix,
    hahn_eigencheck,
    is_stochastic,
    is_symmetric,
    jump_limits,
    jump_probabilities_bruteforce,
    jump_probabilities_exact,
    mc_orbit_distribution,
    symmetrized_kernel,
    walk_summary,
)
from semigrass.utils import make_rng

ENUMERATION_CASES: Tuple[Tuple[int, int], ...] = ((2, 1), (2, 2), (2, 3), (3, 1), (3, 2))


class SuiteResult(BaseModel):
    name: str
    passed: bool
    checks: int
    detail: str = ""
    seconds: Optional[float] = None

    model_config = ConfigDict(frozen=True)


class VerificationSuite(ABC):
    """One invariant family, checked exactly or against a fixed-seed oracle."""

    name: str

    @abstractmethod
    def run(self) -> SuiteResult:
        """
        Run every check of the suite and summarize the outcome.
        """
        raise NotImplementedError("Subclasses must implement this method.")

    def _result(self, failures: List[str], checks: int) -> SuiteResult:
        detail = "; ".join(failures[:5]) if failures else f"{checks} checks"
        return SuiteResult(name=self.name, passed=not failures, checks=checks, detail=detail)


###########################
### COUNTING & MEASURES ###
###########################


class CountingSuite(VerificationSuite):
    name = "counting"

    def __init__(self, cases: Sequence[Tuple[int, int]] = ENUMERATION_CASES):
        self.cases = cases

    def run(self) -> SuiteResult:
        failures = []
        for q, n in self.cases:
            gspec = GrassmannianSpec(spec=field_of_order(q), m=2 * n, k=n)
            enumerated = sum(1 for _ in enumerate_subspaces(gspec))
            expected = grassmannian_count(2 * n, n, q)
            if enumerated != expected:
                failures.append(f"q={q} n={n}: enumerated {enumerated}, formula {expected}")
        return self._result(failures, len(self.cases))


class OrbitsSuite(VerificationSuite):
    name = "orbits"

    def __init__(self, cases: Sequence[Tuple[int, int]] = ENUMERATION_CASES):
        self.cases = cases

    def run(self) -> SuiteResult:
        failures = []
        for q, n in self.cases:
            tally = orbit_tally(field_of_order(q), n)
            expected = {k: orbit_count(n, k, q) for k in range(n + 1)}
            if tally != expected:
                failures.append(f"q={q} n={n}: tally {tally}, formula {expected}")
            if sum(expected.values()) != grassmannian_count(2 * n, n, q):
                failures.append(f"q={q} n={n}: orbits do not partition Gr")
        return self._result(failures, 2 * len(self.cases))


class TotalMassSuite(VerificationSuite):
    name = "total-mass"

    def __init__(self, q: int = 2, n: int = 20, tolerance: float = 1e-5):
        self.q, self.n, self.tolerance = q, n, tolerance

    def run(self) -> SuiteResult:
        gap = abs(float(grassmannian_measure(self.n, self.q)) - total_mass_float(self.q))
        failures = [] if gap < self.tolerance else [f"|mu_n(Gr) - limit| = {gap:.3e}"]
        return self._result(failures, 1)


class OrbitMeasureSuite(VerificationSuite):
    name = "orbit-measure"

    def __init__(self, q: int = 2, n: int = 20, kmax: int = 3):
        self.q, self.n, self.kmax = q, n, kmax

    def run(self) -> SuiteResult:
        failures = []
        for k in range(self.kmax + 1):
            gap = abs(float(orbit_measure(self.n, k, self.q).value - orbit_weight(k, self.q)))
            if gap >= 1e-4:
                failures.append(f"k={k}: |mu_n(O_k) - w(k)| = {gap:.3e}")
        gap = abs(float(orbit_weight_partial_sum(12, self.q)) - total_mass_float(self.q))
        if gap >= 1e-9:
            failures.append(f"sum_(k<=12) w(k) misses the total mass by {gap:.3e}")
        return self._result(failures, self.kmax + 2)


########################
### EIGEN-IDENTITIES ###
########################


class QHahnSuite(VerificationSuite):
    name = "q-hahn"

    def __init__(self, nmax: int = 6, qs: Sequence[int] = (2, 3)):
        self.nmax, self.qs = nmax, qs

    def run(self) -> SuiteResult:
        failures, checks = [], 0
        for q in self.qs:
            for n in range(1, self.nmax + 1):
                for j in range(n + 1):
                    checks += 1
                    if not hahn_eigencheck(j, n, q).all_zero:
                        failures.append(f"q={q} n={n} j={j}")
        return self._result(failures, checks)


class AlSalamCarlitzSuite(VerificationSuite):
    name = "al-salam-carlitz"

    def __init__(self, jmax: int = 8, K: int = 30, qs: Sequence[int] = (2, 3, 4)):
        self.jmax, self.K, self.qs = jmax, K, qs

    def run(self) -> SuiteResult:
        failures, checks = [], 0
        for q in self.qs:
            for j in range(self.jmax + 1):
                checks += 1
                if not asc_eigencheck(j, q, self.K).all_zero:
                    failures.append(f"q={q} j={j}")
        return self._result(failures, checks)


class DetailedBalanceSuite(VerificationSuite):
    name = "detailed-balance"

    def __init__(self, K: int = 30, qs: Sequence[int] = (2, 3, 4)):
        self.K, self.qs = K, qs

    def run(self) -> SuiteResult:
        failures = []
        for q in self.qs:
            if not detailed_balance_check(q, self.K):
                failures.append(f"q={q}: w(k) up(k) != w(k+1) down(k+1)")
            if not is_symmetric(symmetrized_kernel(q, self.K)):
                failures.append(f"q={q}: w(k) P(k, k') is not symmetric")
        return self._result(failures, 2 * len(self.qs))


class OrthogonalitySuite(VerificationSuite):
    name = "orthogonality"

    def __init__(self, q: int = 2, jmax: int = 6, K: int = 60, tolerance: float = 1e-8):
        self.q, self.jmax, self.K, self.tolerance = q, jmax, K, tolerance

    def run(self) -> SuiteResult:
        gram = asc_gram_matrix(self.q, self.jmax, self.K)
        off = np.abs(gram - np.diag(np.diag(gram)))
        worst = float(off.max()) if off.size else 0.0
        failures = [] if worst <= self.tolerance else [f"largest normalized overlap {worst:.3e}"]
        return self._result(failures, self.jmax * (self.jmax + 1) // 2)


#############
### JUMPS ###
#############


class JumpsSuite(VerificationSuite):
    name = "jumps"

    def __init__(self, q: int = 2, ks: Sequence[int] = (0, 1, 2), ns: Sequence[int] = (3, 4, 5)):
        self.q, self.ks, self.ns = q, ks, ns

    def run(self) -> SuiteResult:
        failures, checks = [], 0
        for k in self.ks:
            limits = jump_limits(k, self.q)
            deviations = []
            for n in self.ns:
                brute = jump_probabilities_bruteforce(n, k, self.q)
                checks += 2
                if brute.total != 1:
                    failures.append(f"n={n} k={k}: row sums to {brute.total}")
                if brute != jump_probabilities_exact(n, k, self.q):
                    failures.append(f"n={n} k={k}: enumeration disagrees with the closed form")
                deviations.append(brute.deviation(limits))
            checks += 2
            if any(b >= a for a, b in zip(deviations, deviations[1:])):
                failures.append(f"k={k}: deviations {deviations} do not decrease")
            if deviations[-1] >= 0.1:
                failures.append(f"k={k}: deviation {deviations[-1]:.3f} at n={self.ns[-1]}")
        return self._result(failures, checks)


class CyclicSpanSuite(VerificationSuite):
    name = "cyclic-span"

    def __init__(self, q: int = 2, ns: Sequence[int] = (1, 2, 3)):
        self.q, self.ns = q, ns

    def run(self) -> SuiteResult:
        failures = []
        for n in self.ns:
            spectrum = finite_averaging_matrix(n, self.q)
            if not is_stochastic(spectrum.matrix):
                failures.append(f"n={n}: averaging matrix is not stochastic")
            if Fraction(1) not in spectrum.rational_eigenvalues:
                failures.append(f"n={n}: 1 is not an eigenvalue")
            if cyclic_span_dimension(n, self.q) != n + 1:
                failures.append(f"n={n}: the O_0 indicator is not cyclic")
        return self._result(failures, 3 * len(self.ns))


###################
### MONTE CARLO ###
###################


class MonteCarloSuite(VerificationSuite):
    name = "monte-carlo"

    def __init__(self, q: int = 2, n: int = 6, samples: int = 100_000, seed: int = 42):
        self.q, self.n, self.samples, self.seed = q, n, samples, seed

    def run(self) -> SuiteResult:
        first = mc_orbit_distribution(self.n, self.q, self.samples, make_rng(self.seed))
        again = mc_orbit_distribution(self.n, self.q, self.samples, make_rng(self.seed))
        failures = [
            f"k={b.k}: z = {b.z_score:.2f}" for b in first.bins if abs(b.z_score) > 3
        ]
        if [b.count for b in first.bins] != [b.count for b in again.bins]:
            failures.append(f"seed {self.seed} does not reproduce its counts")
        return self._result(failures, len(first.bins) + 1)


class WalkSuite(VerificationSuite):
    name = "walk"

    def __init__(self, q: int = 2, steps: int = 1_000_000, seed: int = 7, kmax: int = 3):
        self.q, self.steps, self.seed, self.kmax = q, steps, seed, kmax

    def run(self) -> SuiteResult:
        summary = walk_summary(self.q, 0, self.steps, make_rng(self.seed), kmax=self.kmax)
        failures = [
            f"k={b.k}: frequency {b.frequency:.4f} vs {float(b.exact):.4f}"
            for b in summary.bins
            if abs(b.frequency - float(b.exact)) >= 0.01
        ]
        return self._result(failures, len(summary.bins))


##############
### CHARTS ###
##############


class MoebiusSuite(VerificationSuite):
    name = "moebius"

    def __init__(self, q: int = 2, n: int = 2, trials: int = 200, seed: int = 0):
        self.q, self.n, self.trials, self.seed = q, n, trials, seed

    def run(self) -> SuiteResult:
        spec, rng = field_of_order(self.q), make_rng(self.seed)
        failures = []
        for trial in range(self.trials):
            g = semiinf.random_group_element(spec, self.n, 0, rng).corner
            census = moebius_census(g)
            if not census.injective or census.domain != census.image:
                failures.append(f"trial {trial}: domain {census.domain}, image {census.image}")
        return self._result(failures, self.trials)


class AtlasSuite(VerificationSuite):
    name = "atlas"

    def __init__(self, q: int = 2, n: int = 3):
        self.q, self.n = q, n

    def run(self) -> SuiteResult:
        gspec = GrassmannianSpec(spec=field_of_order(self.q), m=2 * self.n, k=self.n)
        failures, checks = [], 0
        for L in enumerate_subspaces(gspec):
            checks += 1
            if find_chart(L, self.n) is None:
                failures.append(f"{L!r} lies in no chart")
        return self._result(failures, checks)


class ChartOverlapSuite(VerificationSuite):
    name = "chart-overlap"

    def __init__(self, q: int = 2, n: int = 2):
        self.q, self.n = q, n

    def run(self) -> SuiteResult:
        spec = field_of_order(self.q)
        charts = finite_charts(self.n)
        failures, checks = [], 0
        for source in charts:
            for T in all_matrices(spec, self.n, self.n):
                for target in charts:
                    moved = chart_transition(T, source, target, self.n)
                    if moved is None:
                        continue
                    checks += 1
                    if chart_transition(moved, target, source, self.n) != T:
                        failures.append(f"{source!r} -> {target!r} -> {source!r} moves {T.tolist()}")
        return self._result(failures, checks)


class PiNSuite(VerificationSuite):
    name = "pi-n"

    def __init__(self, q: int = 2, n: int = 3, trials: int = 100, seed: int = 0):
        self.q, self.n, self.trials, self.seed = q, n, trials, seed

    def run(self) -> SuiteResult:
        spec, rng = field_of_order(self.q), make_rng(self.seed)
        charts = finite_charts(self.n)
        failures = []
        for trial in range(self.trials):
            chart = charts[int(rng.integers(len(charts)))]
            p = semiinf.random_chart_point(spec, chart, self.n, rng)
            L = semiinf.pi_n(p, self.n)
            if L.dim != self.n:
                failures.append(f"trial {trial}: dim pi_n = {L.dim}")
            elif chart_membership(L, chart, self.n) != p.matrix(self.n):
                failures.append(f"trial {trial}: chart coordinates of pi_n differ from T")
        return self._result(failures, self.trials)


################
### SEMI-INF ###
################


def _random_chart(rng: np.random.Generator, max_index: int) -> ChartIndex:
    indices = np.arange(1, max_index + 1)
    omega = indices[rng.random(max_index) < 0.3]
    xi = indices[rng.random(max_index) < 0.3]
    return ChartIndex(omega=frozenset(omega.tolist()), xi=frozenset(xi.tolist()))


class FredholmSuite(VerificationSuite):
    name = "fredholm"

    def __init__(self, qs: Sequence[int] = (2, 3), pairs: int = 1000, group_trials: int = 500, seed: int = 0):
        self.qs, self.pairs, self.group_trials, self.seed = qs, pairs, group_trials, seed

    def _operators(self, q: int, rng: np.random.Generator) -> List[str]:
        spec = field_of_order(q)
        failures = []
        for trial in range(self.pairs):
            M, M1, M2 = (int(x) for x in rng.integers(0, 5, size=3))
            A = semiinf.random_stable_operator(spec, M, M1, rng)
            B = semiinf.random_stable_operator(spec, int(rng.integers(0, 5)), M2, rng)
            AB = semiinf.fredholm_compose(A, B)
            if semiinf.fredholm_index(AB) != semiinf.fredholm_index(A) + semiinf.fredholm_index(B):
                failures.append(f"q={q} trial {trial}: index is not additive")
            try:
                form = semiinf.fredholm_canonical_form(A)
            except InvariantViolated as e:
                failures.append(f"q={q} trial {trial}: canonical form round trip failed: {e}")
                continue
            if (form.alpha, form.beta) != (semiinf.cokernel_dim(A), semiinf.kernel_dim(A)):
                failures.append(f"q={q} trial {trial}: canonical form dimensions disagree")
        return failures

    def _group(self, rng: np.random.Generator) -> List[str]:
        spec = field_of_order(2)
        failures = []
        for trial in range(self.group_trials):
            g = semiinf.random_group_element(spec, int(rng.integers(0, 3)), int(rng.integers(-2, 3)), rng)
            h = semiinf.random_group_element(spec, int(rng.integers(0, 3)), int(rng.integers(-2, 3)), rng)
            p = semiinf.random_chart_point(spec, _random_chart(rng, 2), 2, rng)
            try:
                if semiinf.theta(semiinf.compose(g, h)) != semiinf.theta(g) + semiinf.theta(h):
                    failures.append(f"trial {trial}: θ is not additive")
                moved = semiinf.group_act(p, g)
            except InvariantViolated as e:
                failures.append(f"trial {trial}: {e}")
                continue
            if semiinf.relative_dimension(moved) != semiinf.relative_dimension(p) + semiinf.theta(g):
                failures.append(f"trial {trial}: Dim(p·g) != Dim(p) + θ(g)")
        return failures

    def run(self) -> SuiteResult:
        rng = make_rng(self.seed)
        failures = [f for q in self.qs for f in self._operators(q, rng)]
        failures += self._group(rng)
        return self._result(failures, 2 * self.pairs * len(self.qs) + 2 * self.group_trials)


class FactorizationSuite(VerificationSuite):
    name = "factorization"

    def __init__(self, q: int = 2, trials: int = 500, max_corner: int = 6, seed: int = 0):
        self.q, self.trials, self.max_corner, self.seed = q, trials, max_corner, seed

    def run(self) -> SuiteResult:
        spec, rng = field_of_order(self.q), make_rng(self.seed)
        failures = []
        for trial in range(self.trials):
            g = semiinf.random_group_element(spec, int(rng.integers(1, self.max_corner + 1)), 0, rng)
            try:
                h, s, r = semiinf.factor_gl0(g)
            except InvariantViolated as e:
                failures.append(f"trial {trial}: {e}")
                continue
            if semiinf.compose(semiinf.compose(h, s), r) != g:
                failures.append(f"trial {trial}: h·s·r != g")
        return self._result(failures, self.trials)


class FlagsSuite(VerificationSuite):
    name = "flags"

    def __init__(self, q: int = 2, n: int = 2):
        self.q, self.n = q, n

    def run(self) -> SuiteResult:
        spec, m, d = field_of_order(self.q), 2 * self.n, self.n
        two_step = flag_law(spec, m, d, [-1, 1])
        failures = []
        if forget_flag(two_step, [0, 1]) != flag_law(spec, m, d, [-1]):
            failures.append("forgetting the last step does not give the hyperplane law")
        if forget_flag(two_step, [1, 2]) != flag_law(spec, m, d - 1, [1]):
            failures.append("forgetting the start does not give the overspace law")
        ends = forget_flag(two_step, [0, 2])
        if any(ends.get((b, a), Fraction(0)) != mass for (a, b), mass in ends.items()):
            failures.append("the (start, end) law is not symmetric")
        if sum(two_step.values(), Fraction(0)) != 1:
            failures.append("the two-step law does not have total mass 1")
        return self._result(failures, 4)


################
### REGISTRY ###
################

SINGLE_FIELD_SUITES = (
    TotalMassSuite,
    OrbitMeasureSuite,
    OrthogonalitySuite,
    JumpsSuite,
    CyclicSpanSuite,
    MonteCarloSuite,
    WalkSuite,
    MoebiusSuite,
    AtlasSuite,
    ChartOverlapSuite,
    PiNSuite,
    FactorizationSuite,
    FlagsSuite,
)

FIXED_FIELD_SUITES = (
    CountingSuite,
    OrbitsSuite,
    QHahnSuite,
    AlSalamCarlitzSuite,
    DetailedBalanceSuite,
    FredholmSuite,
)

SUITE_NAMES = sorted(cls.name for cls in SINGLE_FIELD_SUITES + FIXED_FIELD_SUITES)


def build_suite(name: str, q: int = 2) -> VerificationSuite:
    """
    Instantiate a suite by name.

    Suites checked over one field take ``q``; the others run over their own fixed
    list of fields.
    """
    for cls in SINGLE_FIELD_SUITES:
        if cls.name == name:
            return cls(q=q)
    for cls in FIXED_FIELD_SUITES:
        if cls.name == name:
            return cls()
    raise KeyError(f"Unknown suite {name!r}; choose from {', '.join(SUITE_NAMES)}")

