from typing import Literal

MAX_FIELD_ORDER = 2**16
MAX_EXTENSION_DEGREE = 4
DEFAULT_ENUMERATION_CAP = 10**7
DEFAULT_TERM_CAP = 10**4
DEFAULT_TRUNCATION = 30
ORTHOGONALITY_TRUNCATION = 60
TOTAL_MASS_TOLERANCE = 1e-12
DEFAULT_SEED = 0

# finite_averaging_matrix enumeration budget, keyed by q
AVERAGING_MATRIX_BOUNDS = {2: 6, 3: 4}
AVERAGING_MATRIX_DEFAULT_BOUND = 3

OutputFormat = Literal["json", "csv"]
SEMIGRASS_VERSION = "0.3.0"
