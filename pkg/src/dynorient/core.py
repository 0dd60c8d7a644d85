"""Vertex/edge identity, multigraph bookkeeping, and discrepancy accounting.

Vertices are plain ints in [0, n); edge identity is a serial int assigned
in insertion order and never reused.
"""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass, field


class GraphError(Exception):
    """Base class for every error raised by this package."""


class InputError(GraphError):
    """Illegal update from the caller: bad size, bad vertex, self-loop,
    or a dead/unknown edge."""


class WrongPartitionError(GraphError):
    """Operation targeted an edge homed on the wrong side of the
    girth/cycle partition."""


class StateCorruptionError(GraphError):
    """Internal bookkeeping no longer agrees with itself; the instance
    must be discarded."""


class InvariantViolationError(GraphError):
    """A structural guarantee failed.  Indicates an implementation bug,
    never a legal state; fatal for the instance."""


@dataclass(frozen=True)
class Thresholds:
    """Size-derived constants shared by every layer.

    log = ceil(log2 n), floored at 1 so all thresholds stay positive for
    n <= 2.  Cycles of length <= short_cycle_max are extracted; the
    remaining subgraph keeps girth >= girth_min.
    """

    n: int
    log: int
    short_cycle_max: int
    girth_min: int

    @classmethod
    def for_size(cls, n: int) -> "Thresholds":
        if n < 1:
            raise InputError(f"instance size must be >= 1, got {n}")
        log = max(1, (n - 1).bit_length())
        return cls(n=n, log=log, short_cycle_max=2 * log, girth_min=2 * log + 1)

    @property
    def recourse_ceiling(self) -> int:
        """Closed-form bound on direction changes in one update: a
        dissolved cycle re-inserts at most short_cycle_max survivors,
        each costing at most 3*(log+1) flips, and may close one new
        cycle of length at most short_cycle_max."""
        return self.short_cycle_max * (3 * (self.log + 1) + self.short_cycle_max)


@dataclass
class EdgeRecord:
    """One multigraph edge.  `live` flips to False exactly once."""

    eid: int
    u: int
    v: int
    live: bool = True

    @property
    def pair(self) -> tuple[int, int]:
        return (self.u, self.v) if self.u < self.v else (self.v, self.u)

    def other(self, x: int) -> int:
        return self.v if x == self.u else self.u


@dataclass
class DiscrepancyReport:
    """Per-vertex |out-degree - in-degree| and the global maximum."""

    per_vertex: dict[int, int] = field(default_factory=dict)
    max: int = 0


def discrepancy_report(orientation) -> DiscrepancyReport:
    """Compute the imbalance report from scratch for a mapping
    eid -> (tail, head).  Vertices incident to no edge are omitted."""
    net: dict[int, int] = {}
    for tail, head in orientation.values():
        net[tail] = net.get(tail, 0) + 1
        net[head] = net.get(head, 0) - 1
    per_vertex = {v: abs(x) for v, x in net.items()}
    return DiscrepancyReport(per_vertex, max(per_vertex.values(), default=0))


_ABSENT = object()


class OrientationBook:
    """The public orientation: eid -> (tail, head).

    Keeps a per-vertex net (out minus in) counter and a histogram of
    |net| values so the running max discrepancy is O(1) to read.  During
    an update a journal records each touched edge's original direction;
    the flip set of the update is the exact diff for surviving edges.
    """

    def __init__(self, n: int):
        self.n = n
        self.dirs: dict[int, tuple[int, int]] = {}
        self.net = [0] * n
        self._hist: Counter[int] = Counter({0: n})
        self._journal: dict[int, object] | None = None

    def _bump(self, v: int, delta: int) -> None:
        a = abs(self.net[v])
        self._hist[a] -= 1
        if not self._hist[a]:
            del self._hist[a]
        self.net[v] += delta
        self._hist[abs(self.net[v])] += 1

    def begin_update(self) -> None:
        self._journal = {}

    def _touch(self, eid: int) -> None:
        if self._journal is not None and eid not in self._journal:
            self._journal[eid] = self.dirs.get(eid, _ABSENT)

    def assign(self, eid: int, tail: int, head: int) -> None:
        self._touch(eid)
        old = self.dirs.get(eid)
        if old is not None:
            self._bump(old[0], -1)
            self._bump(old[1], +1)
        self.dirs[eid] = (tail, head)
        self._bump(tail, +1)
        self._bump(head, -1)

    def flip(self, eid: int) -> None:
        tail, head = self.dirs[eid]
        self.assign(eid, head, tail)

    def drop(self, eid: int) -> None:
        self._touch(eid)
        tail, head = self.dirs.pop(eid)
        self._bump(tail, -1)
        self._bump(head, +1)

    def end_update(self) -> list[int]:
        """Close the journal; return the sorted eids of edges that were
        present both before and after the update and changed direction."""
        assert self._journal is not None, "end_update without begin_update"
        flips = []
        for eid, before in self._journal.items():
            if before is _ABSENT:
                continue
            after = self.dirs.get(eid)
            if after is not None and after != before:
                flips.append(eid)
        self._journal = None
        flips.sort()
        return flips

    def max_discrepancy(self) -> int:
        return max(self._hist)

    def snapshot(self) -> dict[int, tuple[int, int]]:
        return dict(self.dirs)
