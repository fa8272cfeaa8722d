"""MAP inference on associative hierarchical networks.

Labels are plain ints at this boundary: base labels by index, the free label
as :data:`FREE` (-1). Labelings are lists of lists, one row per level, the
base level first.
"""

from ._core import (
    Error,
    Network,
    brute_force_map,
    check_consistency,
    check_edge_family,
    compare_csv,
    eval_higher_order,
    eval_joint,
    generate,
    load_network,
    parse_network,
    robust_pn_value,
    save_network,
    solve,
)

#: The free label auxiliary variables may take (forbidden on the base level).
FREE = -1

__all__ = [
    "FREE",
    "Error",
    "Network",
    "brute_force_map",
    "check_consistency",
    "check_edge_family",
    "compare_csv",
    "eval_higher_order",
    "eval_joint",
    "generate",
    "load_network",
    "parse_network",
    "robust_pn_value",
    "save_network",
    "solve",
]
