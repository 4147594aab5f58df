import pytest

from semigrass import semiinf
from semigrass.errors import InvariantViolated
from semigrass.verification import (
    SUITE_NAMES,
    FullVerificationPipeline,
    NoOpVerificationPipeline,
    SuiteResult,
    VerificationSuite,
    build_suite,
)
from semigrass.verification.suites import (
    AlSalamCarlitzSuite,
    AtlasSuite,
    ChartOverlapSuite,
    CountingSuite,
    CyclicSpanSuite,
    DetailedBalanceSuite,
    FactorizationSuite,
    FlagsSuite,
    FredholmSuite,
    JumpsSuite,
    MoebiusSuite,
    MonteCarloSuite,
    OrbitMeasureSuite,
    OrbitsSuite,
    OrthogonalitySuite,
    PiNSuite,
    QHahnSuite,
    TotalMassSuite,
    WalkSuite,
)


class _AlwaysFails(VerificationSuite):
    name = "always-fails"

    def run(self) -> SuiteResult:
        return self._result(["broken on purpose"], 1)


class _AlwaysPasses(VerificationSuite):
    name = "always-passes"

    def run(self) -> SuiteResult:
        return self._result([], 3)


@pytest.mark.parametrize(
    "suite",
    [
        CountingSuite(cases=((2, 1), (2, 2))),
        OrbitsSuite(cases=((2, 1), (2, 2), (3, 1))),
        TotalMassSuite(q=3, n=12),
        QHahnSuite(nmax=3, qs=(2,)),
        DetailedBalanceSuite(K=10, qs=(2, 3)),
        CyclicSpanSuite(ns=(1, 2)),
        MoebiusSuite(trials=20),
        AtlasSuite(n=2),
        FactorizationSuite(trials=20, max_corner=3),
        FlagsSuite(),
    ],
    ids=lambda suite: suite.name,
)
def test_cheap_suites_pass(suite):
    result = suite.run()
    assert result.passed, result.detail
    assert result.name == suite.name
    assert result.checks > 0


@pytest.mark.parametrize(
    "suite",
    [
        TotalMassSuite(q=2, n=20),
        OrbitMeasureSuite(q=2, n=20),
        OrbitMeasureSuite(q=3, n=20),
        PiNSuite(q=2, n=3),
        PiNSuite(q=3, n=2, trials=50),
        ChartOverlapSuite(q=2, n=2),
    ],
    ids=lambda suite: f"{suite.name}-q{suite.q}",
)
def test_measure_and_chart_suites(suite):
    result = suite.run()
    assert result.passed, result.detail


@pytest.mark.slow
@pytest.mark.parametrize(
    "suite",
    [
        FredholmSuite(qs=(2, 3), pairs=1000, group_trials=500),
        FactorizationSuite(q=2, trials=500, max_corner=6),
        FactorizationSuite(q=3, trials=100, max_corner=6),
        AlSalamCarlitzSuite(),
        OrthogonalitySuite(),
        JumpsSuite(),
        MonteCarloSuite(),
        WalkSuite(),
    ],
    ids=lambda suite: suite.name,
)
def test_full_scale_suites(suite):
    result = suite.run()
    assert result.passed, result.detail


def test_atlas_covers_gr_6_3():
    result = AtlasSuite(q=2, n=3).run()
    assert result.passed, result.detail
    assert result.checks == 1395


def test_broken_canonical_form_is_a_failed_check(monkeypatch):
    def broken(A):
        raise InvariantViolated("round trip mismatch")

    monkeypatch.setattr(semiinf, "fredholm_canonical_form", broken)
    result = FredholmSuite(qs=(2,), pairs=3, group_trials=0).run()
    assert not result.passed
    assert "round trip mismatch" in result.detail
    assert result.checks == 6


def test_broken_factorization_is_a_failed_check(monkeypatch):
    def broken(g):
        raise InvariantViolated("recomposition differs")

    monkeypatch.setattr(semiinf, "factor_gl0", broken)
    result = FactorizationSuite(trials=4, max_corner=2).run()
    assert not result.passed
    assert result.detail.count("recomposition differs") == 4


def test_result_detail():
    assert _AlwaysFails().run().detail == "broken on purpose"
    assert _AlwaysPasses().run().detail == "3 checks"


def test_registry():
    assert SUITE_NAMES == sorted(SUITE_NAMES)
    assert len(SUITE_NAMES) == len(set(SUITE_NAMES))
    for name in SUITE_NAMES:
        assert build_suite(name, q=3).name == name
    assert build_suite("moebius", q=3).q == 3
    with pytest.raises(KeyError):
        build_suite("no-such-suite")


################
### PIPELINE ###
################


def test_noop_pipeline_is_empty():
    report = NoOpVerificationPipeline().run()
    assert report.results == []
    assert report.passed


def test_pipeline_runs_in_name_order():
    pipeline = NoOpVerificationPipeline()
    pipeline.append_suite(_AlwaysPasses())
    pipeline.append_suite(_AlwaysFails())
    report = pipeline.run()
    assert [r.name for r in report.results] == ["always-fails", "always-passes"]
    assert not report.passed
    assert report.failed == ["always-fails"]


def test_pipeline_records_seconds():
    pipeline = NoOpVerificationPipeline()
    pipeline.append_suite(_AlwaysPasses())
    (result,) = pipeline.run().results
    assert result.seconds is not None and result.seconds >= 0
    assert _AlwaysPasses().run().seconds is None


def test_verbose_pipeline_prints(capsys):
    pipeline = NoOpVerificationPipeline()
    pipeline.verbose = True
    pipeline.append_suite(_AlwaysPasses())
    pipeline.run()
    assert "Verifying with _AlwaysPasses" in capsys.readouterr().out


def test_full_pipeline_selection():
    pipeline = FullVerificationPipeline(q=3, names=["flags", "counting"])
    assert sorted(s.name for s in pipeline.suites) == ["counting", "flags"]
    with pytest.raises(KeyError):
        FullVerificationPipeline(names=["counting", "bogus"])
    assert len(FullVerificationPipeline().suites) == len(SUITE_NAMES)
