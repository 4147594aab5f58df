import time
from abc import ABC
from typing import List, Optional, Sequence

from pydantic import BaseModel, ConfigDict

from semigrass.utils import get_logger
from semigrass.verification.suites import SUITE_NAMES, SuiteResult, VerificationSuite, build_suite

logger = get_logger("verify")


class VerificationReport(BaseModel):
    results: List[SuiteResult]

    model_config = ConfigDict(frozen=True)

    @property
    def passed(self) -> bool:
        return all(r.passed for r in self.results)

    @property
    def failed(self) -> List[str]:
        return [r.name for r in self.results if not r.passed]


class VerificationPipeline(ABC):
    """
    A pipeline of verification suites, run in name order.

    Attributes:
        suites (List[VerificationSuite]): The suites to run.
        verbose (Optional[bool]): Whether to print out each suite as it starts.
    """

    suites: List[VerificationSuite]
    verbose: Optional[bool] = False

    def run(self) -> VerificationReport:
        results = []
        for suite in sorted(self.suites, key=lambda s: s.name):
            if self.verbose:
                print("Verifying with", suite.__class__.__name__)
            start = time.perf_counter()
            result = suite.run()
            elapsed = time.perf_counter() - start
            logger.info(f"{suite.name}: {'pass' if result.passed else 'FAIL'} ({result.checks} checks, {elapsed:.2f}s)")
            result = result.model_copy(update={"seconds": elapsed})
            results.append(result)
        return VerificationReport(results=results)

    def append_suite(self, suite: VerificationSuite) -> None:
        """
        Add a suite to the pipeline.

        Args:
            suite (VerificationSuite): The suite to add.
        """
        self.suites.append(suite)


class NoOpVerificationPipeline(VerificationPipeline):
    """
    A pipeline with no suites, for callers that append their own.
    """

    def __init__(self):
        self.suites = []


class FullVerificationPipeline(VerificationPipeline):
    """
    Every suite, over F_q for the suites that take one field.
    """

    def __init__(self, q: int = 2, names: Optional[Sequence[str]] = None, verbose: bool = False):
        selected = SUITE_NAMES if names is None else list(names)
        unknown = [name for name in selected if name not in SUITE_NAMES]
        if unknown:
            raise KeyError(f"Unknown suite(s) {', '.join(unknown)}; choose from {', '.join(SUITE_NAMES)}")
        self.suites = [build_suite(name, q) for name in selected]
        self.verbose = verbose
