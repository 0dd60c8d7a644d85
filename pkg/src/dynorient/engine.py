"""Facade: applies one update at a time and accounts recourse.

The engine owns all mutable state (single-writer).  Recourse of an
update is the number of edges live both before and after it whose
public direction changed; the inserted edge's initial direction and
any deleted edges are free.
"""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass, field

from .balancer import StarBalancer
from .core import (
    DiscrepancyReport,
    EdgeRecord,
    InputError,
    OrientationBook,
    Thresholds,
    discrepancy_report,
)
from .labeller import GirthLabeller
from .partition import CyclePartition


@dataclass(frozen=True)
class Insert:
    u: int
    v: int


@dataclass(frozen=True)
class DeleteById:
    eid: int


@dataclass(frozen=True)
class DeleteByPair:
    """Delete the most-recently-inserted live edge between u and v."""

    u: int
    v: int


UpdateEvent = Insert | DeleteById | DeleteByPair


@dataclass
class UpdateResult:
    assigned_id: int | None
    flips: list[int]
    recourse: int
    max_discrepancy: int
    new_edge_dir: tuple[int, int] | None = None


@dataclass
class Metrics:
    updates_applied: int = 0
    max_discrepancy_ever: int = 0
    max_recourse_single_update: int = 0
    total_recourse: int = 0
    recourse_by_kind: dict[str, Counter] = field(
        default_factory=lambda: {"insert": Counter(), "delete": Counter()}
    )


class Engine:
    def __init__(self, n: int):
        self.limits = Thresholds.for_size(n)
        self.n = n
        self.records: dict[int, EdgeRecord] = {}
        self._next_eid = 0
        self.book = OrientationBook(n)
        self.labeller = GirthLabeller(self.limits)
        self.balancer = StarBalancer(self.book)
        self.partition = CyclePartition(
            self.limits, self.labeller, self.balancer, self.book, self.records
        )
        # pair -> insertion-ordered live eids; dict keys give O(1) removal
        # and O(1) access to the most recent entry
        self._pair_live: dict[tuple[int, int], dict[int, None]] = {}
        self.metrics = Metrics()

    def _check_vertex(self, x: int) -> None:
        if not 0 <= x < self.n:
            raise InputError(f"vertex {x} out of range [0, {self.n})")

    def apply(self, event: UpdateEvent) -> UpdateResult:
        if isinstance(event, Insert):
            self._check_vertex(event.u)
            self._check_vertex(event.v)
            if event.u == event.v:
                raise InputError(f"self-loop at vertex {event.u} rejected")
            kind = "insert"
            record = None
        else:
            if isinstance(event, DeleteByPair):
                self._check_vertex(event.u)
                self._check_vertex(event.v)
                key = (event.u, event.v) if event.u < event.v else (event.v, event.u)
                stack = self._pair_live.get(key)
                if not stack:
                    raise InputError(f"no live edge between {key[0]} and {key[1]}")
                record = self.records[next(reversed(stack))]
            else:
                record = self.records.get(event.eid)
                if record is None or not record.live:
                    raise InputError(f"edge {event.eid} is not live")
            kind = "delete"

        self.book.begin_update()
        assigned = None
        if kind == "insert":
            assigned = self._next_eid
            self._next_eid += 1
            record = EdgeRecord(assigned, event.u, event.v)
            self.records[assigned] = record
            self._pair_live.setdefault(record.pair, {})[assigned] = None
            self.partition.place(record)
        else:
            record.live = False
            del self._pair_live[record.pair][record.eid]
            if not self._pair_live[record.pair]:
                del self._pair_live[record.pair]
            self.partition.remove(record)
        flips = self.book.end_update()
        max_disc = self.book.max_discrepancy()

        m = self.metrics
        m.updates_applied += 1
        m.max_discrepancy_ever = max(m.max_discrepancy_ever, max_disc)
        m.max_recourse_single_update = max(m.max_recourse_single_update, len(flips))
        m.total_recourse += len(flips)
        m.recourse_by_kind[kind][len(flips)] += 1

        return UpdateResult(
            assigned_id=assigned,
            flips=flips,
            recourse=len(flips),
            max_discrepancy=max_disc,
            new_edge_dir=self.book.dirs.get(assigned) if assigned is not None else None,
        )

    def orientation_snapshot(self) -> dict[int, tuple[int, int]]:
        return self.book.snapshot()

    def discrepancy(self) -> DiscrepancyReport:
        """Fresh from-scratch report over the live orientation."""
        return discrepancy_report(self.book.dirs)

    def imbalances(self) -> list[int]:
        """Copy of the per-vertex net (out minus in) degrees."""
        return list(self.book.net)

    def live_edge_count(self) -> int:
        return len(self.book.dirs)
