"""Partition of live edges into a high-girth set and short oriented cycles.

An arriving edge joins the girth set unless it would close a cycle of
length <= short_cycle_max there; in that case the shortest such cycle is
extracted: its path edges leave the girth structure and the whole cycle
is oriented cyclically, contributing zero imbalance at every vertex.
Deleting a cycle edge dissolves its cycle and re-inserts the survivors
one by one.
"""

from __future__ import annotations

from dataclasses import dataclass

from .balancer import StarBalancer
from .core import EdgeRecord, InputError, OrientationBook, Thresholds
from .labeller import GirthLabeller

GIRTH = "girth"  # edge_home sentinel for girth-set edges


@dataclass
class CycleRecord:
    """An extracted cycle: edge i joins vertex_seq[i] and
    vertex_seq[(i+1) % k] and is publicly oriented that way."""

    cid: int
    vertex_seq: tuple[int, ...]
    edge_seq: tuple[int, ...]

    @property
    def k(self) -> int:
        return len(self.edge_seq)


class CyclePartition:
    def __init__(
        self,
        limits: Thresholds,
        labeller: GirthLabeller,
        balancer: StarBalancer,
        book: OrientationBook,
        records: dict[int, EdgeRecord],
    ):
        self.limits = limits
        self.labeller = labeller
        self.balancer = balancer
        self.book = book
        self.records = records
        self.girth_edges: set[int] = set()
        self.adj: dict[int, dict[int, int]] = {}  # girth adjacency; simple
        self.cycles: dict[int, CycleRecord] = {}
        self.edge_home: dict[int, object] = {}  # eid -> GIRTH | cid
        self._next_cid = 0

    def place(self, record: EdgeRecord) -> None:
        """Home a live edge: girth set if no short cycle would appear,
        otherwise extract the shortest cycle through it."""
        path = self.find_short_path(record.v, record.u)
        if path is None:
            self._girth_insert(record)
        else:
            self._extract_cycle(record, path)

    def remove(self, record: EdgeRecord) -> None:
        eid = record.eid
        home = self.edge_home.pop(eid, None)
        if home is None:
            raise InputError(f"edge {eid} has no partition home")
        if home is GIRTH:
            delta = self.labeller.delete(eid)
            self.balancer.remove(eid, delta.deleted[1])
            self.book.drop(eid)
            self.girth_edges.discard(eid)
            self._adj_remove(record.u, record.v)
        else:
            cyc = self.cycles.pop(home)
            survivors = []
            for pe in cyc.edge_seq:
                self.book.drop(pe)
                if pe != eid:
                    del self.edge_home[pe]
                    survivors.append(pe)
            survivors.sort()
            for pe in survivors:
                self.place(self.records[pe])

    def find_short_path(self, s: int, t: int) -> list[int] | None:
        """Shortest s..t vertex path within the girth set, length capped
        at short_cycle_max - 1; among equal-length paths the
        lexicographically smallest vertex sequence wins.  None if no
        path within the cap exists."""
        adj = self.adj
        if s not in adj or t not in adj:
            return None
        cap = self.limits.short_cycle_max - 1
        dist = {t: 0}
        frontier = [t]
        d = 0
        # BFS from t, stopping as soon as s is reached: the greedy walk
        # below only consults strictly earlier levels
        while frontier and d < cap and s not in dist:
            d += 1
            nxt = []
            for x in frontier:
                for w in adj[x]:
                    if w not in dist:
                        dist[w] = d
                        if w == s:
                            break
                        nxt.append(w)
                else:
                    continue
                break
            frontier = nxt
        if s not in dist:
            return None
        path = [s]
        cur = s
        while cur != t:
            want = dist[cur] - 1
            cur = min(w for w in self.adj[cur] if dist.get(w, -1) == want)
            path.append(cur)
        return path

    def _adj_remove(self, u: int, v: int) -> None:
        del self.adj[u][v]
        if not self.adj[u]:
            del self.adj[u]
        del self.adj[v][u]
        if not self.adj[v]:
            del self.adj[v]

    def _girth_insert(self, record: EdgeRecord) -> None:
        eid, u, v = record.eid, record.u, record.v
        # a parallel girth edge would have shown up as a length-1 path
        assert v not in self.adj.get(u, ()), "girth set must stay simple"
        self.girth_edges.add(eid)
        self.edge_home[eid] = GIRTH
        self.adj.setdefault(u, {})[v] = eid
        self.adj.setdefault(v, {})[u] = eid
        delta = self.labeller.insert(eid, u, v)
        self.balancer.apply(delta, endpoints=(u, v))

    def _extract_cycle(self, record: EdgeRecord, path: list[int]) -> None:
        # path runs record.v .. record.u; cycle = new edge + path edges
        path_eids = []
        for a, b in zip(path, path[1:]):
            pe = self.adj[a][b]
            delta = self.labeller.delete(pe)
            self.balancer.remove(pe, delta.deleted[1])
            self.book.drop(pe)
            self.girth_edges.discard(pe)
            self._adj_remove(a, b)
            path_eids.append(pe)
        verts = [record.u] + path[:-1]
        edges = [record.eid] + path_eids
        k = len(edges)
        cid = self._next_cid
        self._next_cid += 1
        for i, pe in enumerate(edges):
            self.book.assign(pe, verts[i], verts[(i + 1) % k])
            self.edge_home[pe] = cid
        self.cycles[cid] = CycleRecord(cid, tuple(verts), tuple(edges))
