"""Brute-force verifiers, independent of the engine's bookkeeping.

Everything here recomputes from raw edge lists or from a frozen engine
snapshot, never reusing the incremental data paths it is checking.
"""

from __future__ import annotations

import math
from collections import deque
from dataclasses import dataclass

from .core import InputError, discrepancy_report
from .partition import GIRTH


def brute_girth(n: int, edges) -> float:
    """Exact girth of a multigraph given as (u, v) pairs; math.inf for
    forests, 2 for any parallel pair."""
    edges = list(edges)
    pairs = set()
    adj: dict[int, list[tuple[int, int]]] = {}
    best = math.inf
    for idx, (u, v) in enumerate(edges):
        if u == v:
            return 1
        key = (u, v) if u < v else (v, u)
        if key in pairs:
            best = 2
        pairs.add(key)
        adj.setdefault(u, []).append((v, idx))
        adj.setdefault(v, []).append((u, idx))
    if best == 2:
        return 2
    # simple graph remains: BFS from every vertex, close on cross edges
    for s in adj:
        dist = {s: 0}
        par = {s: -1}
        q = deque([s])
        while q:
            x = q.popleft()
            if 2 * dist[x] >= best - 1:
                continue
            for w, ei in adj[x]:
                if ei == par[x]:
                    continue
                if w in dist:
                    best = min(best, dist[x] + dist[w] + 1)
                else:
                    dist[w] = dist[x] + 1
                    par[w] = ei
                    q.append(w)
    return best


def euler_orient(n: int, edges) -> dict[int, tuple[int, int]]:
    """Orient a multigraph with per-vertex imbalance <= 1: pair odd
    vertices (ascending) with virtual edges, walk closed trails, orient
    along the walk, drop the virtual edges."""
    edges = list(edges)
    m = len(edges)
    deg = [0] * n
    for u, v in edges:
        deg[u] += 1
        deg[v] += 1
    odd = [v for v in range(n) if deg[v] % 2]
    aug = edges + [(odd[i], odd[i + 1]) for i in range(0, len(odd), 2)]
    adj: list[list[tuple[int, int]]] = [[] for _ in range(n)]
    for i, (u, v) in enumerate(aug):
        adj[u].append((v, i))
        adj[v].append((u, i))
    used = [False] * len(aug)
    ptr = [0] * n
    orient: dict[int, tuple[int, int]] = {}
    for s in range(n):
        stack = [s]
        while stack:
            x = stack[-1]
            while ptr[x] < len(adj[x]) and used[adj[x][ptr[x]][1]]:
                ptr[x] += 1
            if ptr[x] == len(adj[x]):
                stack.pop()
            else:
                w, i = adj[x][ptr[x]]
                used[i] = True
                orient[i] = (x, w)
                stack.append(w)
    return {i: orient[i] for i in range(m)}


def exhaustive_min_disc(n: int, edges) -> int:
    """Exact offline optimum over all 2^m orientations (m <= 20),
    enumerated in Gray-code order so each step flips one edge."""
    edges = list(edges)
    m = len(edges)
    if m > 20:
        raise InputError(f"exhaustive search limited to 20 edges, got {m}")
    net = [0] * n
    for u, v in edges:
        net[u] += 1
        net[v] -= 1
    best = max((abs(x) for x in net), default=0)
    state = [0] * m  # bit i set <=> edge i currently reversed
    for g in range(1, 1 << m):
        i = (g & -g).bit_length() - 1
        u, v = edges[i]
        if state[i]:
            net[u] += 2
            net[v] -= 2
        else:
            net[u] -= 2
            net[v] += 2
        state[i] ^= 1
        cand = max(abs(net[u]), abs(net[v]))
        if cand < best:
            cand = max(abs(x) for x in net)
            if cand < best:
                best = cand
    return best


@dataclass
class Violation:
    invariant: str
    subject: object
    observed: object


def check_all_invariants(engine) -> list[Violation]:
    """Full sweep over a quiescent engine: recomputes every maintained
    structure from the raw records and compares."""
    out: list[Violation] = []
    limits = engine.limits
    live = {eid: r for eid, r in engine.records.items() if r.live}
    dirs = engine.book.dirs

    # public orientation domain and endpoint agreement
    for eid in set(live) ^ set(dirs):
        out.append(Violation("orientation_domain", eid, eid in dirs))
    for eid, (tail, head) in dirs.items():
        r = live.get(eid)
        if r is not None and {tail, head} != {r.u, r.v}:
            out.append(Violation("orientation_domain", eid, (tail, head)))

    # incremental net counters vs scratch recount
    net = [0] * engine.n
    for tail, head in dirs.values():
        net[tail] += 1
        net[head] -= 1
    for v in range(engine.n):
        if net[v] != engine.book.net[v]:
            out.append(Violation("net_counter", v, engine.book.net[v]))

    # global discrepancy bound
    report = discrepancy_report(dirs)
    if report.max > 3:
        worst = max(report.per_vertex, key=report.per_vertex.get)
        out.append(Violation("discrepancy_le_3", worst, report.max))

    part = engine.partition
    girth = part.girth_edges

    # partition totality
    cycle_home: dict[int, int] = {}
    for cid, cyc in part.cycles.items():
        for eid in cyc.edge_seq:
            if eid in cycle_home or eid in girth:
                out.append(Violation("partition_totality", eid, "double home"))
            cycle_home[eid] = cid
    for eid in live:
        home = part.edge_home.get(eid)
        if home is GIRTH:
            ok = eid in girth and eid not in cycle_home
        elif home is None:
            ok = False
        else:
            ok = cycle_home.get(eid) == home and eid not in girth
        if not ok:
            out.append(Violation("partition_totality", eid, home))
    for eid in list(girth) + list(cycle_home):
        if eid not in live:
            out.append(Violation("partition_totality", eid, "dead edge homed"))

    # cycle shapes and cyclic public orientation
    for cid, cyc in part.cycles.items():
        k = cyc.k
        if not 2 <= k <= limits.short_cycle_max:
            out.append(Violation("cycle_length_range", cid, k))
        for i, eid in enumerate(cyc.edge_seq):
            a = cyc.vertex_seq[i]
            b = cyc.vertex_seq[(i + 1) % k]
            r = live.get(eid)
            if r is None or {r.u, r.v} != {a, b}:
                out.append(Violation("cycle_chain", (cid, eid), None))
                continue
            if dirs.get(eid) != (a, b):
                out.append(Violation("cycle_orientation", (cid, eid), dirs.get(eid)))

    # labeller: domain, out-degrees, labels are endpoints, foreign counts
    lab = engine.labeller
    for eid in set(lab.dir) ^ girth:
        out.append(Violation("labeller_domain", eid, eid in lab.dir))
    out_deg: dict[int, int] = {}
    foreign: dict[int, int] = {}
    for eid, (tail, head) in lab.dir.items():
        out_deg[tail] = out_deg.get(tail, 0) + 1
        r = live.get(eid)
        if r is None or {tail, head} != {r.u, r.v}:
            out.append(Violation("label_is_endpoint", eid, (tail, head)))
            continue
        foreign[tail] = foreign.get(tail, 0) + 1  # label = head, foreign at tail
    for v, d in out_deg.items():
        if d > 2:
            out.append(Violation("out_degree_le_2", v, d))
    for v, c in foreign.items():
        if c > 2:
            out.append(Violation("foreign_label_count_le_2", v, c))

    # balance sets consistent with labels and public orientation
    bal = engine.balancer
    for eid in set(bal.label_of) ^ girth:
        out.append(Violation("balancer_consistency", eid, eid in bal.label_of))
    for eid in girth:
        want = lab.dir.get(eid, (None, None))[1]
        if bal.label_of.get(eid) != want:
            out.append(Violation("balancer_consistency", eid, bal.label_of.get(eid)))
            continue
        d = dirs.get(eid)
        if d is None:
            continue
        in_out = eid in bal.out_ids.get(want, ())
        in_in = eid in bal.in_ids.get(want, ())
        side_ok = (in_out and not in_in) if d[0] == want else (in_in and not in_out)
        if not side_ok:
            out.append(Violation("balancer_consistency", eid, (in_out, in_in)))

    # the +/-1 balance invariant at every vertex, recounted from scratch
    star: dict[int, int] = {}
    for eid in girth:
        d = dirs.get(eid)
        want = lab.dir.get(eid, (None, None))[1]
        if d is None or want is None:
            continue
        star[want] = star.get(want, 0) + (1 if d[0] == want else -1)
    for v, k in star.items():
        if abs(k) > 1:
            out.append(Violation("star_balance", v, k))

    # girth bound on the girth set
    g_edges = [(live[eid].u, live[eid].v) for eid in girth if eid in live]
    g = brute_girth(engine.n, g_edges)
    if g < limits.girth_min:
        out.append(Violation("girth_bound", None, g))

    return out
