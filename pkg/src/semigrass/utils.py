import logging
from fractions import Fraction
from typing import Optional, Union

import numpy as np

from semigrass.config import config

_FORMAT = "%(asctime)s - semigrass[%(name)s] - %(message)s"


def get_logger(name: str) -> logging.Logger:
    logger = logging.getLogger(name)
    if not any(getattr(h, "_semigrass", False) for h in logger.handlers):
        logger.setLevel(logging.INFO)
        handler = logging.StreamHandler()
        handler.setFormatter(logging.Formatter(_FORMAT))
        handler._semigrass = True  # type: ignore[attr-defined]
        logger.addHandler(handler)
        logger.propagate = False
    return logger


def make_rng(seed: Optional[int] = None) -> np.random.Generator:
    """Seeded PCG64 generator; falls back to the configured default seed."""
    if seed is None:
        seed = config.get_seed()
    return np.random.Generator(np.random.PCG64(seed))


def exact_str(value: Union[int, Fraction]) -> str:
    """Render an exact value as a decimal integer or ``num/den`` string."""
    if isinstance(value, Fraction):
        if value.denominator == 1:
            return str(value.numerator)
        return f"{value.numerator}/{value.denominator}"
    return str(int(value))
