"""Out-degree-bounded internal orientation of the high-girth edge set.

Maintains a private orientation in which every vertex keeps out-degree
at most 2.  Insertions that push a vertex to out-degree 3 are repaired
by reversing a shortest directed path to a vertex of out-degree <= 1;
on a graph whose girth exceeds twice the log threshold such a path of
length <= log always exists (out-neighborhoods grow like a binary tree,
so a low-out-degree vertex appears within log hops).  Deletions need no
repair.

The head of each internally oriented edge is its *label*; downstream
balancing works purely on labels, so each vertex sees at most 2
incident edges labelled elsewhere.
"""

from __future__ import annotations

from bisect import insort
from dataclasses import dataclass, field

from .core import InvariantViolationError, Thresholds, WrongPartitionError


@dataclass
class LabelDelta:
    """Label changes produced by one insert or delete.

    relabeled entries are (eid, old_label, new_label); the inserted edge
    never appears among them (its final label is in `inserted`).
    """

    inserted: tuple[int, int] | None = None  # (eid, label)
    deleted: tuple[int, int] | None = None  # (eid, old label)
    relabeled: list[tuple[int, int, int]] = field(default_factory=list)


class GirthLabeller:
    def __init__(self, limits: Thresholds):
        self.limits = limits
        self.dir: dict[int, tuple[int, int]] = {}  # eid -> (tail, head)
        self.out: dict[int, list[int]] = {}  # vertex -> sorted out-edge ids
        self.max_path_len = 0  # longest repair path ever taken

    def out_degree(self, v: int) -> int:
        return len(self.out.get(v, ()))

    def label(self, eid: int) -> int:
        return self.dir[eid][1]

    def insert(self, eid: int, u: int, v: int) -> LabelDelta:
        """Orient a new edge out of its lighter endpoint (ties to the
        smaller vertex id) and repair if the tail hits out-degree 3."""
        du, dv = self.out_degree(u), self.out_degree(v)
        tail, head = (u, v) if (du, u) < (dv, v) else (v, u)
        self.dir[eid] = (tail, head)
        insort(self.out.setdefault(tail, []), eid)
        delta = LabelDelta(inserted=(eid, head))
        if len(self.out[tail]) > 2:
            path = self.find_flip_path(tail)
            self.max_path_len = max(self.max_path_len, len(path))
            for pe in path:
                a, b = self.dir[pe]
                self.dir[pe] = (b, a)
                self.out[a].remove(pe)
                if not self.out[a]:
                    del self.out[a]
                insort(self.out.setdefault(b, []), pe)
                if pe == eid:
                    delta.inserted = (eid, a)
                else:
                    delta.relabeled.append((pe, b, a))
        return delta

    def delete(self, eid: int) -> LabelDelta:
        """Remove an edge; never touches any other edge."""
        if eid not in self.dir:
            raise WrongPartitionError(f"edge {eid} is not a girth-set edge")
        tail, head = self.dir.pop(eid)
        self.out[tail].remove(eid)
        if not self.out[tail]:
            del self.out[tail]
        return LabelDelta(deleted=(eid, head))

    def find_flip_path(self, start: int) -> list[int]:
        """Shortest directed path (as a list of eids) from `start` to a
        vertex of out-degree <= 1, depth-capped at the log threshold.

        Deterministic: out-edges are explored in ascending eid order and
        the first qualifying vertex reached wins.
        """
        parent: dict[int, tuple[int, int] | None] = {start: None}
        frontier = [start]
        for _ in range(self.limits.log):
            nxt = []
            for x in frontier:
                for pe in self.out.get(x, ()):
                    w = self.dir[pe][1]
                    if w in parent:
                        continue
                    parent[w] = (x, pe)
                    if self.out_degree(w) <= 1:
                        path = []
                        cur = w
                        while parent[cur] is not None:
                            px, pe2 = parent[cur]
                            path.append(pe2)
                            cur = px
                        path.reverse()
                        return path
                    nxt.append(w)
            frontier = nxt
        raise InvariantViolationError(
            f"no out-degree<=1 vertex within {self.limits.log} hops of "
            f"{start}; girth precondition broken"
        )
