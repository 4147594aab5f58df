from semigrass.verification.pipeline import (
    FullVerificationPipeline,
    NoOpVerificationPipeline,
    VerificationPipeline,
    VerificationReport,
)
from semigrass.verification.suites import SUITE_NAMES, SuiteResult, VerificationSuite, build_suite

__all__ = [
    "SUITE_NAMES",
    "SuiteResult",
    "VerificationSuite",
    "build_suite",
    "VerificationPipeline",
    "VerificationReport",
    "NoOpVerificationPipeline",
    "FullVerificationPipeline",
]
