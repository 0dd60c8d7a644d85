"""Fully-dynamic low-discrepancy edge orientation.

Maintains an orientation of an n-vertex multigraph under adversarial
edge insertions and deletions so that every vertex's |out - in| degree
imbalance stays at most 3, with worst-case per-update recourse growing
only with the square of ceil(log2 n).
"""

from .adversary import (
    UpdateStream,
    gen_adaptive_greedy,
    gen_cycle_churn,
    gen_high_girth,
    gen_random,
)
from .core import (
    DiscrepancyReport,
    EdgeRecord,
    GraphError,
    InputError,
    InvariantViolationError,
    StateCorruptionError,
    Thresholds,
    WrongPartitionError,
    discrepancy_report,
)
from .engine import (
    DeleteById,
    DeleteByPair,
    Engine,
    Insert,
    Metrics,
    UpdateResult,
)
from .oracle import (
    Violation,
    brute_girth,
    check_all_invariants,
    euler_orient,
    exhaustive_min_disc,
)
from .streamio import (
    StreamParseError,
    parse_stream,
    replay_trace_orientation,
    run_stream,
    serialize_stream,
    trace_line,
)

__all__ = [
    "DeleteById",
    "DeleteByPair",
    "DiscrepancyReport",
    "EdgeRecord",
    "Engine",
    "GraphError",
    "InputError",
    "Insert",
    "InvariantViolationError",
    "Metrics",
    "StateCorruptionError",
    "StreamParseError",
    "Thresholds",
    "UpdateResult",
    "UpdateStream",
    "Violation",
    "WrongPartitionError",
    "brute_girth",
    "check_all_invariants",
    "discrepancy_report",
    "euler_orient",
    "exhaustive_min_disc",
    "gen_adaptive_greedy",
    "gen_cycle_churn",
    "gen_high_girth",
    "gen_random",
    "parse_stream",
    "replay_trace_orientation",
    "run_stream",
    "serialize_stream",
    "trace_line",
]
