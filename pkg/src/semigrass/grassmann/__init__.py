from semigrass.grassmann.charts import (
    chart_membership,
    chart_transition,
    find_chart,
    finite_charts,
    graph_subspace,
    moebius_action,
    moebius_census,
    split_blocks,
)
from semigrass.grassmann.counting import (
    gl_count,
    grassmannian_count,
    grassmannian_measure,
    mu_n,
    orbit_count,
    orbit_measure,
)
from semigrass.grassmann.enumeration import (
    enumerate_subspaces,
    hyperplanes,
    orbit_index,
    orbit_tally,
    overspaces,
)
from semigrass.grassmann.sampling import (
    flag_law,
    forget_flag,
    sample_flag,
    sample_uniform_subspace,
)
from semigrass.grassmann.schemas import ChartIndex, ExactMeasure, GrassmannianSpec

__all__ = [
    # schemas
    "GrassmannianSpec",
    "ChartIndex",
    "ExactMeasure",
    # counting
    "gl_count",
    "grassmannian_count",
    "orbit_count",
    "mu_n",
    "orbit_measure",
    "grassmannian_measure",
    # enumeration
    "enumerate_subspaces",
    "orbit_index",
    "orbit_tally",
    "hyperplanes",
    "overspaces",
    # charts
    "chart_membership",
    "chart_transition",
    "graph_subspace",
    "finite_charts",
    "find_chart",
    "split_blocks",
    "moebius_action",
    "moebius_census",
    # sampling
    "sample_uniform_subspace",
    "sample_flag",
    "flag_law",
    "forget_flag",
]
