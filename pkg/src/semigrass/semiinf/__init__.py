from semigrass.semiinf.charts import (
    first_chart,
    group_act,
    pi_n,
    random_chart_point,
    relative_dimension,
    same_subspace,
)
from semigrass.semiinf.fredholm import (
    cokernel_dim,
    fredholm_canonical_form,
    fredholm_compose,
    fredholm_index,
    identity_operator,
    j_form,
    kernel_dim,
    random_stable_operator,
    stable_operator,
)
from semigrass.semiinf.group import (
    J,
    a_block,
    block_indices,
    compose,
    d_block,
    element,
    factor_gl0,
    group_inverse,
    identity,
    is_block_diagonal_on_l,
    is_parabolic,
    parabolic_element,
    random_group_element,
    shift,
    theta,
)
from semigrass.semiinf.schemas import (
    CanonicalForm,
    ChartPoint,
    Factorization,
    StableGroupElement,
    StableOperator,
)

__all__ = [
    # schemas
    "ChartPoint",
    "StableOperator",
    "StableGroupElement",
    "CanonicalForm",
    "Factorization",
    # fredholm
    "stable_operator",
    "identity_operator",
    "j_form",
    "kernel_dim",
    "cokernel_dim",
    "fredholm_index",
    "fredholm_compose",
    "fredholm_canonical_form",
    "random_stable_operator",
    # group
    "element",
    "identity",
    "shift",
    "J",
    "parabolic_element",
    "random_group_element",
    "compose",
    "group_inverse",
    "a_block",
    "d_block",
    "theta",
    "block_indices",
    "is_parabolic",
    "is_block_diagonal_on_l",
    "factor_gl0",
    # charts
    "relative_dimension",
    "pi_n",
    "same_subspace",
    "first_chart",
    "group_act",
    "random_chart_point",
]
