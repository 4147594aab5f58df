from semigrass import grassmann, semiinf, spectral, verification, version
from semigrass.config import config
from semigrass.errors import SemigrassError
from semigrass.fqlinalg import MatrixFq, Subspace
from semigrass.gf import FieldElement, FieldSpec, field_new, field_of_order
from semigrass.schemas import Report, RunConfig

__all__ = [
    # core
    "FieldSpec",
    "FieldElement",
    "field_new",
    "field_of_order",
    "MatrixFq",
    "Subspace",
    "SemigrassError",
    # Schemas
    "Report",
    "RunConfig",
    # Modules
    "grassmann",
    "semiinf",
    "spectral",
    "verification",
    "version",
    "config",
]
