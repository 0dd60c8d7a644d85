"""Update-stream generators: oblivious churn, girth-preserving growth,
cycle-churn stress, and an adaptive driver that watches the engine.

Every generator is a deterministic function of its parameters and seed;
streams are always legal (no self-loops, no dead deletions).
"""

from __future__ import annotations

import random
from collections import deque
from dataclasses import dataclass, field

from .core import InputError, Thresholds
from .engine import DeleteById, DeleteByPair, Engine, Insert, UpdateEvent


@dataclass
class UpdateStream:
    n: int
    events: list[UpdateEvent] = field(default_factory=list)
    generator: str = field(default="", compare=False)
    seed: int | None = field(default=None, compare=False)


def gen_random(n: int, steps: int, p_delete: float, seed: int) -> UpdateStream:
    """Each step deletes a uniformly random live edge with probability
    p_delete (when any exists), else inserts a uniform non-loop pair."""
    if not 0 <= p_delete < 1:
        raise InputError(f"p_delete must be in [0, 1), got {p_delete}")
    if n < 2:
        raise InputError("need n >= 2 to insert non-loop edges")
    rng = random.Random(seed)
    live: list[int] = []
    next_eid = 0
    events: list[UpdateEvent] = []
    for _ in range(steps):
        if live and rng.random() < p_delete:
            i = rng.randrange(len(live))
            live[i], live[-1] = live[-1], live[i]  # swap-pop keeps it O(1)
            events.append(DeleteById(live.pop()))
        else:
            u = rng.randrange(n)
            v = rng.randrange(n - 1)
            if v >= u:
                v += 1
            events.append(Insert(u, v))
            live.append(next_eid)
            next_eid += 1
    return UpdateStream(n, events, generator="random", seed=seed)


class _GirthTracker:
    """Generator-side shadow graph for girth-preserving streams."""

    def __init__(self, n: int, min_dist: int):
        self.n = n
        self.min_dist = min_dist  # required distance before linking u-v
        self.adj: dict[int, dict[int, set[int]]] = {}  # u -> v -> eids
        self.edge_of: dict[int, tuple[int, int]] = {}

    def ok_to_add(self, u: int, v: int) -> bool:
        if u == v:
            return False
        # BFS from u capped at min_dist - 1; reaching v means a short cycle
        cap = self.min_dist - 1
        dist = {u: 0}
        q = deque([(u, 0)])
        while q:
            x, d = q.popleft()
            if d == cap:
                continue
            for w in self.adj.get(x, ()):
                if w not in dist:
                    if w == v:
                        return False
                    dist[w] = d + 1
                    q.append((w, d + 1))
        return True

    def add(self, eid: int, u: int, v: int) -> None:
        self.adj.setdefault(u, {}).setdefault(v, set()).add(eid)
        self.adj.setdefault(v, {}).setdefault(u, set()).add(eid)
        self.edge_of[eid] = (u, v)

    def delete(self, eid: int) -> None:
        u, v = self.edge_of.pop(eid)
        for a, b in ((u, v), (v, u)):
            self.adj[a][b].discard(eid)
            if not self.adj[a][b]:
                del self.adj[a][b]
            if not self.adj[a]:
                del self.adj[a]


def gen_high_girth(
    n: int, steps: int, seed: int, p_delete: float = 0.25
) -> UpdateStream:
    """Stream whose underlying graph keeps girth >= girth_min at every
    prefix.  Insertions that would close a short cycle are skipped
    (retried); when no legal insertion is found a deletion is emitted."""
    limits = Thresholds.for_size(n)
    rng = random.Random(seed)
    shadow = _GirthTracker(n, min_dist=limits.girth_min - 1)
    live: list[int] = []
    next_eid = 0
    events: list[UpdateEvent] = []
    for _ in range(steps):
        want_delete = bool(live) and rng.random() < p_delete
        if not want_delete:
            for _ in range(60):
                u = rng.randrange(n)
                v = rng.randrange(n - 1)
                if v >= u:
                    v += 1
                if shadow.ok_to_add(u, v):
                    events.append(Insert(u, v))
                    shadow.add(next_eid, u, v)
                    live.append(next_eid)
                    next_eid += 1
                    break
            else:
                want_delete = True
        if want_delete:
            i = rng.randrange(len(live))
            live[i], live[-1] = live[-1], live[i]
            eid = live.pop()
            shadow.delete(eid)
            events.append(DeleteById(eid))
    return UpdateStream(n, events, generator="high_girth", seed=seed)


def gen_cycle_churn(n: int, steps: int, seed: int) -> UpdateStream:
    """Stress for the cycle-dissolution path: build a ring of length
    short_cycle_max (so it is extracted as one cycle), then repeatedly
    delete and re-insert ring edges; each deletion dissolves a cycle and
    re-inserts all its survivors."""
    limits = Thresholds.for_size(n)
    length = min(limits.short_cycle_max, n)
    rng = random.Random(seed)
    events: list[UpdateEvent] = []
    ring = [(i, (i + 1) % length) for i in range(length)]
    for u, v in ring:
        if len(events) >= steps:
            break
        events.append(Insert(u, v))
    pending: tuple[int, int] | None = None
    while len(events) < steps:
        if pending is not None:
            events.append(Insert(*pending))
            pending = None
        else:
            u, v = ring[rng.randrange(length)]
            events.append(DeleteByPair(u, v))
            pending = (u, v)
    return UpdateStream(n, events, generator="cycle_churn", seed=seed)


def gen_adaptive_greedy(
    n: int, steps: int, engine: Engine, delete_every: int = 5
) -> UpdateStream:
    """Adaptive driver: applies each event to `engine` immediately.

    Inserts between the two vertices of largest same-sign imbalance
    (trying to pile discrepancy onto one side); every `delete_every`-th
    step deletes the most recently flipped edge instead, when it is
    still live.  Fully deterministic given the engine's state."""
    events: list[UpdateEvent] = []
    last_flips: list[int] = []
    for t in range(steps):
        event: UpdateEvent | None = None
        if delete_every and t % delete_every == delete_every - 1 and last_flips:
            eid = last_flips[-1]
            rec = engine.records.get(eid)
            if rec is not None and rec.live:
                event = DeleteById(eid)
        if event is None:
            net = engine.imbalances()
            by_pos = sorted(range(n), key=lambda v: (-net[v], v))
            by_neg = sorted(range(n), key=lambda v: (net[v], v))
            pos_score = net[by_pos[0]] + net[by_pos[1]]
            neg_score = -(net[by_neg[0]] + net[by_neg[1]])
            pick = by_pos if pos_score >= neg_score else by_neg
            event = Insert(pick[0], pick[1])
        result = engine.apply(event)
        if result.flips:
            last_flips = result.flips
        events.append(event)
    return UpdateStream(n, events, generator="adaptive_greedy")


GENERATORS = {
    "random": gen_random,
    "high_girth": gen_high_girth,
    "cycle_churn": gen_cycle_churn,
}
