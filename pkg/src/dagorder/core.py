"""Online topological ordering under edge insertion.

BucketGraph keeps a total order on a fixed node set and repairs it after
each inserted edge.  An edge u -> v arriving with v at or before u triggers
a recursive reordering: the successors of v not past u and the predecessors
of u not before v witness the conflict, and the cascade below resolves every
witness pair until plain position swaps fix the order.  A pair that collapses
to a single node proves a cycle, and the insertion is rejected with the
offending walk while the structure stays consistent.
"""

from __future__ import annotations

from bisect import bisect_left, bisect_right
from dataclasses import dataclass, field
from math import ceil, log2, sqrt

from .buckets import IN, OUT, BucketStore
from .order_map import OrderMap
from .radix import radix_sort

ACCEPTED = "accepted"
DUPLICATE = "duplicate"
CYCLE = "cycle"


@dataclass(frozen=True)
class InsertResult:
    """Outcome of one insertion attempt."""

    status: str
    order_changed: bool = False
    cycle: tuple[int, ...] | None = None

    @property
    def accepted(self) -> bool:
        return self.status == ACCEPTED


def _accepted(order_changed: bool) -> InsertResult:
    return InsertResult(ACCEPTED, order_changed=order_changed)


_DUPLICATE = InsertResult(DUPLICATE)


def _rejected(cycle: list[int]) -> InsertResult:
    return InsertResult(CYCLE, cycle=tuple(cycle))


@dataclass
class Counters:
    """Work tallies; the pair dicts accumulate over the graph's lifetime."""

    reorder_calls: int = 0
    swaps: int = 0
    sum_ab: int = 0
    sum_swap_dist: int = 0
    bucket_inserts: int = 0
    bucket_deletes: int = 0
    elements_collected: int = 0
    calls_by_pair: dict[tuple[int, int], int] = field(default_factory=dict)
    swaps_by_pair: dict[tuple[int, int], int] = field(default_factory=dict)

    def snapshot(self) -> "Counters":
        return Counters(
            self.reorder_calls,
            self.swaps,
            self.sum_ab,
            self.sum_swap_dist,
            self.bucket_inserts,
            self.bucket_deletes,
            self.elements_collected,
            dict(self.calls_by_pair),
            dict(self.swaps_by_pair),
        )


def default_width(n: int, backend: str) -> int:
    """Bucket width when none is given: about n**0.75, with an extra
    sqrt(log2 n) factor for the tree backend to offset its slower buckets."""
    x = n ** 0.75
    if backend == "tree":
        x *= sqrt(max(1.0, log2(n)))
    # floats can land a hair above an exact integer; do not let that bump
    # the ceiling.
    return max(1, ceil(x - 1e-9))


def merge_pairs(
    a_nodes: list[int],
    a_pos: list[int],
    b_nodes: list[int],
    b_pos: list[int],
    u: int,
    pu: int,
    v: int,
    pv: int,
) -> list[tuple[int, int]]:
    """Emit the conflict pairs in cascade order.

    With va = [v] + successors and ub = predecessors + [u], both ascending by
    position, pairs (u', v') are produced for v' walking va from the right
    and, per v', u' walking the part of ub at or after v', left to right.
    Positions are the ones captured here; later swaps do not reorder the
    emitted list.  Cost is O(len(a) + len(b) + pairs) via one backward merge.
    """
    ai = bisect_left(a_pos, pv)
    va_nodes = a_nodes[:ai] + [v] + a_nodes[ai:]
    va_pos = a_pos[:ai] + [pv] + a_pos[ai:]
    bi = bisect_right(b_pos, pu)
    ub_nodes = b_nodes[:bi] + [u] + b_nodes[bi:]
    ub_pos = b_pos[:bi] + [pu] + b_pos[bi:]

    pairs: list[tuple[int, int]] = []
    j = len(ub_nodes)
    for i in range(len(va_nodes) - 1, -1, -1):
        pvv = va_pos[i]
        while j > 0 and ub_pos[j - 1] >= pvv:
            j -= 1
        vp = va_nodes[i]
        for k in range(j, len(ub_nodes)):
            pairs.append((ub_nodes[k], vp))
    return pairs


class BucketGraph:
    """DAG with a maintained topological order, bucketed adjacency inside."""

    def __init__(self, n: int, t: int | None = None, backend: str = "bitarray") -> None:
        if t is None:
            t = default_width(n, backend)
        if t < 1:
            raise ValueError(f"bucket width must be >= 1, got t={t}")
        self.n = n
        self.t = t
        self.backend = backend
        self.m = 0
        self.counters = Counters()
        self.order_map = OrderMap(n)
        self.adj = BucketStore(self.order_map, t, backend, self.counters)

    # ---- queries ----

    def order(self) -> list[int]:
        return self.order_map.order()

    def position(self, u: int) -> int:
        return self.order_map.position(u)

    def has_edge(self, u: int, v: int) -> bool:
        return u != v and self.adj.has_edge(u, v)

    # ---- insertion ----

    def insert(self, u: int, v: int) -> InsertResult:
        """Insert edge u -> v, repairing the order or rejecting a cycle."""
        n = self.n
        if not (0 <= u < n and 0 <= v < n):
            raise ValueError(f"edge ({u}, {v}) has a node outside [0, {n})")
        if u == v:
            return _rejected([u, u])
        if self.adj.has_edge(u, v):
            return _DUPLICATE
        pos = self.order_map._pos
        changed = False
        if pos[v] <= pos[u]:
            walk = self._reorder(u, v)
            if walk is not None:
                return _rejected(walk)
            changed = True
        self.adj.add_edge(u, v)
        self.m += 1
        return _accepted(changed)

    def _witness_sets(self, u: int, v: int) -> tuple[list[int], list[int], list[int], list[int]]:
        """Successors of v at or before u and predecessors of u at or after v,
        each returned with its positions, ascending."""
        om = self.order_map
        pos = om._pos
        node_at = om._node
        n = om.n
        pu = pos[u]
        pv = pos[v]
        d = pu - pv
        if d < 0:
            d = -d
        k = (d + self.t - 1) // self.t
        counters = self.counters

        raw = self.adj.collect_prefix(v, OUT, k)
        a_pos = radix_sort([pos[w] for w in raw if pos[w] <= pu], n)
        a_nodes = [node_at[p] for p in a_pos]

        raw = self.adj.collect_prefix(u, IN, k)
        b_pos = radix_sort([pos[w] for w in raw if pos[w] >= pv], n)
        b_nodes = [node_at[p] for p in b_pos]

        counters.sum_ab += len(a_nodes) + len(b_nodes)
        return a_nodes, a_pos, b_nodes, b_pos

    def _do_swap(self, u: int, v: int) -> None:
        om = self.order_map
        d = om.distance(u, v)
        self.adj.update_for_swap(u, v, directed_by_order=True)
        om.swap(u, v)
        c = self.counters
        c.swaps += 1
        c.sum_swap_dist += d
        key = (u, v) if u < v else (v, u)
        c.swaps_by_pair[key] = c.swaps_by_pair.get(key, 0) + 1

    def _reorder(self, u0: int, v0: int) -> list[int] | None:
        """Run the repair cascade; None on success, else the cycle walk."""
        counters = self.counters
        pos = self.order_map._pos
        # Frame: [u, v, pairs or None, next pair index].
        frames: list[list] = [[u0, v0, None, 0]]
        while frames:
            frame = frames[-1]
            pairs = frame[2]
            if pairs is None:
                u, v = frame[0], frame[1]
                counters.reorder_calls += 1
                key = (u, v)
                counters.calls_by_pair[key] = counters.calls_by_pair.get(key, 0) + 1
                if u == v:
                    return self._cycle_walk(frames)
                a_nodes, a_pos, b_nodes, b_pos = self._witness_sets(u, v)
                if not a_nodes and not b_nodes:
                    self._do_swap(u, v)
                    frames.pop()
                    continue
                frame[2] = merge_pairs(
                    a_nodes, a_pos, b_nodes, b_pos, u, pos[u], v, pos[v]
                )
                frame[3] = 0
            elif frame[3] < len(pairs):
                nxt = pairs[frame[3]]
                frame[3] += 1
                frames.append([nxt[0], nxt[1], None, 0])
            else:
                frames.pop()
        return None

    @staticmethod
    def _cycle_walk(frames: list[list]) -> list[int]:
        """Closed walk from the cascade stack at the moment u' met v'.

        Walking down the stack, v only ever steps to one of its direct
        successors and u to one of its direct predecessors, so the chain
        u0 -> v0 -> ... -> meeting node -> ... -> u0 follows stored edges
        plus the edge under insertion.
        """
        vs: list[int] = [frames[0][1]]
        for f in frames[1:]:
            if f[1] != vs[-1]:
                vs.append(f[1])
        us: list[int] = [frames[0][0]]
        for f in frames[1:]:
            if f[0] != us[-1]:
                us.append(f[0])
        # vs ends at the meeting node; walk the u-chain back, skipping the
        # meeting node if the u-chain also ends there.
        walk = [frames[0][0]] + vs
        back = list(reversed(us))
        if back and back[0] == vs[-1]:
            back = back[1:]
        walk.extend(back)
        if walk[-1] != frames[0][0]:
            walk.append(frames[0][0])
        return walk
