"""Per-label balancing of the public orientation of girth-set edges.

Every girth-set edge is charged to exactly one endpoint (its label).
The balance invariant: at each vertex v, among edges labelled v, the
counts oriented out of v and into v differ by at most 1.  Together with
the labeller's guarantee of at most 2 foreign-labelled incident edges,
this caps the girth subgraph's discrepancy at 3 per vertex.
"""

from __future__ import annotations

from .core import OrientationBook, StateCorruptionError
from .labeller import LabelDelta


class StarBalancer:
    def __init__(self, book: OrientationBook):
        self.book = book
        self.label_of: dict[int, int] = {}
        self.out_ids: dict[int, set[int]] = {}  # v -> labelled-v edges out of v
        self.in_ids: dict[int, set[int]] = {}  # v -> labelled-v edges into v

    def _add_current(self, eid: int, v: int) -> None:
        side = self.out_ids if self.book.dirs[eid][0] == v else self.in_ids
        side.setdefault(v, set()).add(eid)

    def _discard(self, eid: int, v: int) -> None:
        s = self.out_ids.get(v)
        if s is not None and eid in s:
            s.discard(eid)
            return
        s = self.in_ids.get(v)
        if s is not None and eid in s:
            s.discard(eid)
            return
        raise StateCorruptionError(f"edge {eid} not tracked at label {v}")

    def apply(self, delta: LabelDelta, endpoints: tuple[int, int] | None = None) -> None:
        """Fold a label delta into the balance sets, then repair every
        perturbed vertex so the +/-1 invariant holds again.

        A newly inserted edge receives its initial public orientation
        here, chosen against the current majority at its label vertex
        (out of the label when balanced), so it never forces a repair.
        """
        dirty: set[int] = set()
        for eid, old, new in delta.relabeled:
            if self.label_of.get(eid) != old:
                raise StateCorruptionError(f"relabel of untracked edge {eid}")
            self._discard(eid, old)
            self.label_of[eid] = new
            self._add_current(eid, new)
            dirty.add(old)
            dirty.add(new)
        if delta.inserted is not None:
            eid, lab = delta.inserted
            u, v = endpoints
            other = u if lab == v else v
            ko = len(self.out_ids.get(lab, ()))
            ki = len(self.in_ids.get(lab, ()))
            if ko > ki:
                self.book.assign(eid, other, lab)
            else:
                self.book.assign(eid, lab, other)
            self.label_of[eid] = lab
            self._add_current(eid, lab)
            dirty.add(lab)
        if delta.deleted is not None:
            eid, old = delta.deleted
            self.remove(eid, old)
        self._repair(dirty)

    def remove(self, eid: int, old_label: int) -> None:
        """Untrack a departing edge and repair its label vertex
        (at most one flip)."""
        if self.label_of.get(eid) != old_label:
            raise StateCorruptionError(f"edge {eid} not tracked at {old_label}")
        del self.label_of[eid]
        self._discard(eid, old_label)
        self._repair({old_label})

    def _repair(self, dirty: set[int]) -> None:
        for v in sorted(dirty):
            out_s = self.out_ids.setdefault(v, set())
            in_s = self.in_ids.setdefault(v, set())
            k = len(out_s) - len(in_s)
            if -1 <= k <= 1:
                continue
            src, dst = (out_s, in_s) if k > 0 else (in_s, out_s)
            for eid in sorted(src)[: abs(k) // 2]:
                src.discard(eid)
                dst.add(eid)
                self.book.flip(eid)
