"""Workbench for greedy shortest-common-superstring heuristics.

Core pieces: exact string primitives (`strings`), weighted overlap graphs
and the four-property certifier (`graphs`), the PATH/CYC scans, greedy and
locally greedy solvers with exact Held-Karp oracles (`solvers`), the
adversarial instance families and the sentinel transformation
(`instances`), and the ratio search harness (`search`).
"""

from .errors import (
    CapacityError,
    EmptyInstanceError,
    InvalidInputError,
    ParamSearchExhausted,
    SuperstringError,
)
from .graphs import (
    CycleCover,
    EdgeRef,
    PropertyReport,
    WeightedDigraph,
    check_properties,
    overlap_graph,
    sigma_graph,
    to_dot,
)
from .instances import (
    FamilySpec,
    SentinelParams,
    find_sentinel_params,
    gen_family,
    is_greedy_forced,
    random_instance,
    sentinelize,
)
from .kernels import BACKEND
from .search import RatioReport, SearchSpace, verify_bound, worst_ratio
from .solvers import (
    DiagnosticsReport,
    EnumerationResult,
    HamPath,
    OrderPolicy,
    PathTrace,
    Solution,
    TieBreaker,
    analyze_trace,
    certify_instance,
    cyc,
    enumerate_instantiations,
    exact_scs,
    exact_sigma,
    greedy_scs,
    locally_greedy_scs,
    path,
)
from .strings import (
    Instance,
    OverlapSplit,
    count_occurrences,
    merge,
    normalize,
    overlap_length,
    parse_instance_text,
    serialize_instance_text,
    split,
    superstring_of_permutation,
)

__version__ = "0.1.0"

__all__ = [
    "BACKEND",
    "CapacityError",
    "CycleCover",
    "DiagnosticsReport",
    "EdgeRef",
    "EmptyInstanceError",
    "EnumerationResult",
    "FamilySpec",
    "HamPath",
    "Instance",
    "InvalidInputError",
    "OrderPolicy",
    "OverlapSplit",
    "ParamSearchExhausted",
    "PathTrace",
    "PropertyReport",
    "RatioReport",
    "SearchSpace",
    "SentinelParams",
    "Solution",
    "SuperstringError",
    "TieBreaker",
    "WeightedDigraph",
    "analyze_trace",
    "certify_instance",
    "check_properties",
    "count_occurrences",
    "cyc",
    "enumerate_instantiations",
    "exact_scs",
    "exact_sigma",
    "find_sentinel_params",
    "gen_family",
    "greedy_scs",
    "is_greedy_forced",
    "locally_greedy_scs",
    "merge",
    "normalize",
    "overlap_graph",
    "overlap_length",
    "parse_instance_text",
    "path",
    "random_instance",
    "sentinelize",
    "serialize_instance_text",
    "sigma_graph",
    "split",
    "superstring_of_permutation",
    "to_dot",
    "verify_bound",
    "worst_ratio",
]
