"""Line-oriented stream files and JSON-lines trace emission.

Stream format: a header `n <N>`, then one event per line:
`+ u v` insert, `-# eid` delete by id, `- u v` delete the most recent
live edge between u and v.  `#` lines are comments.
"""

from __future__ import annotations

import json
from typing import Callable, TextIO

from .adversary import UpdateStream
from .core import GraphError, InvariantViolationError
from .engine import DeleteById, DeleteByPair, Engine, Insert, UpdateEvent
from .oracle import check_all_invariants


class StreamParseError(Exception):
    def __init__(self, line_no: int, code: str, message: str):
        super().__init__(f"line {line_no}: [{code}] {message}")
        self.line_no = line_no
        self.code = code


def parse_stream(text: str) -> UpdateStream:
    n = None
    events: list[UpdateEvent] = []
    next_eid = 0
    live: set[int] = set()
    pair_count: dict[tuple[int, int], int] = {}
    pair_of: dict[int, tuple[int, int]] = {}

    def vertex(tok: str, line_no: int) -> int:
        try:
            x = int(tok)
        except ValueError:
            raise StreamParseError(line_no, "malformed", f"bad integer {tok!r}")
        if not 0 <= x < n:
            raise StreamParseError(line_no, "bad-vertex", f"vertex {x} out of range")
        return x

    for line_no, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        toks = line.split()
        if n is None:
            if toks[0] != "n" or len(toks) != 2:
                raise StreamParseError(line_no, "malformed", "expected header 'n <N>'")
            try:
                n = int(toks[1])
            except ValueError:
                raise StreamParseError(line_no, "malformed", f"bad size {toks[1]!r}")
            if n < 1:
                raise StreamParseError(line_no, "malformed", f"size {n} < 1")
            continue
        if toks[0] == "+" and len(toks) == 3:
            u, v = vertex(toks[1], line_no), vertex(toks[2], line_no)
            if u == v:
                raise StreamParseError(line_no, "self-loop", f"self-loop at {u}")
            events.append(Insert(u, v))
            live.add(next_eid)
            key = (u, v) if u < v else (v, u)
            pair_count[key] = pair_count.get(key, 0) + 1
            # remember which pair each id belongs to, for '- u v' accounting
            pair_of[next_eid] = key
            next_eid += 1
        elif toks[0] == "-#" and len(toks) == 2:
            try:
                eid = int(toks[1])
            except ValueError:
                raise StreamParseError(line_no, "malformed", f"bad id {toks[1]!r}")
            if eid not in live:
                raise StreamParseError(line_no, "unknown-edge", f"edge {eid} not live")
            live.discard(eid)
            key = pair_of[eid]
            pair_count[key] -= 1
            events.append(DeleteById(eid))
        elif toks[0] == "-" and len(toks) == 3:
            u, v = vertex(toks[1], line_no), vertex(toks[2], line_no)
            key = (u, v) if u < v else (v, u)
            if pair_count.get(key, 0) <= 0:
                raise StreamParseError(
                    line_no, "unknown-edge", f"no live edge between {u} and {v}"
                )
            pair_count[key] -= 1
            # drop the most recent live id of this pair, mirroring the engine
            victim = max(e for e in live if pair_of[e] == key)
            live.discard(victim)
            events.append(DeleteByPair(u, v))
        else:
            raise StreamParseError(line_no, "malformed", f"unrecognized line {raw!r}")
    if n is None:
        raise StreamParseError(1, "malformed", "missing 'n <N>' header")
    return UpdateStream(n, events)


def serialize_stream(stream: UpdateStream) -> str:
    lines = []
    if stream.generator:
        lines.append(f"# generator={stream.generator} seed={stream.seed}")
    lines.append(f"n {stream.n}")
    for ev in stream.events:
        if isinstance(ev, Insert):
            lines.append(f"+ {ev.u} {ev.v}")
        elif isinstance(ev, DeleteById):
            lines.append(f"-# {ev.eid}")
        else:
            lines.append(f"- {ev.u} {ev.v}")
    return "\n".join(lines) + "\n"


def _event_obj(ev: UpdateEvent) -> dict:
    if isinstance(ev, Insert):
        return {"op": "+", "u": ev.u, "v": ev.v}
    if isinstance(ev, DeleteById):
        return {"op": "-#", "id": ev.eid}
    return {"op": "-", "u": ev.u, "v": ev.v}


def trace_line(seq: int, ev: UpdateEvent, result) -> str:
    obj = {
        "t": seq,
        "event": _event_obj(ev),
        "id": result.assigned_id,
        "dir": list(result.new_edge_dir) if result.new_edge_dir else None,
        "flips": result.flips,
        "recourse": result.recourse,
        "max_disc": result.max_discrepancy,
    }
    return json.dumps(obj, separators=(",", ":"))


def replay_trace_orientation(lines) -> dict[int, tuple[int, int]]:
    """Rebuild the orientation from trace lines alone: set inserted
    directions, remove deleted ids, reverse every flipped edge."""
    dirs: dict[int, tuple[int, int]] = {}
    deleted_pairs: dict[tuple[int, int], list[int]] = {}
    for line in lines:
        obj = json.loads(line)
        ev = obj["event"]
        if ev["op"] == "+":
            dirs[obj["id"]] = tuple(obj["dir"])
        elif ev["op"] == "-#":
            del dirs[ev["id"]]
        else:
            key = (ev["u"], ev["v"]) if ev["u"] < ev["v"] else (ev["v"], ev["u"])
            victim = max(
                e for e, (a, b) in dirs.items() if (min(a, b), max(a, b)) == key
            )
            del dirs[victim]
        for eid in obj["flips"]:
            t, h = dirs[eid]
            dirs[eid] = (h, t)
    return dirs


def run_stream(
    stream: UpdateStream,
    trace_out: TextIO | None = None,
    check: bool = False,
    replay_every: int = 1000,
    on_violation: Callable[[list], None] | None = None,
) -> Engine:
    """Apply a whole stream to a fresh engine.

    Always asserts the discrepancy bound after every update.  With
    `check`, additionally runs the full oracle sweep and an exact
    trace-replay comparison after every update (instead of every
    `replay_every` updates)."""
    engine = Engine(stream.n)
    trace_lines: list[str] = []
    for seq, ev in enumerate(stream.events):
        result = engine.apply(ev)
        line = trace_line(seq, ev, result)
        trace_lines.append(line)
        if trace_out is not None:
            trace_out.write(line + "\n")
        if result.max_discrepancy > 3:
            raise InvariantViolationError(
                f"discrepancy {result.max_discrepancy} > 3 at update {seq}"
            )
        if check:
            violations = check_all_invariants(engine)
            if violations:
                if on_violation:
                    on_violation(violations)
                names = sorted({v.invariant for v in violations})
                raise InvariantViolationError(
                    f"update {seq}: invariants violated: {', '.join(names)}"
                )
        if check or (replay_every and (seq + 1) % replay_every == 0):
            rebuilt = replay_trace_orientation(trace_lines)
            if rebuilt != engine.book.dirs:
                raise InvariantViolationError(
                    f"trace replay mismatch after update {seq}"
                )
    return engine


__all__ = [
    "GraphError",
    "StreamParseError",
    "parse_stream",
    "serialize_stream",
    "trace_line",
    "replay_trace_orientation",
    "run_stream",
]
