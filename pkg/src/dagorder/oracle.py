"""Reference implementations used to check the online algorithms.

Everything here is deliberately simple and offline: a Kahn-style topological
sort, order validation against an edge set, and brute-force reachability.
"""

from __future__ import annotations

import heapq
from dataclasses import dataclass, field

import numpy as np


@dataclass
class EdgeSet:
    """A node count plus a sequence of directed edges, duplicates removed."""

    n: int
    edges: list[tuple[int, int]] = field(default_factory=list)

    def __post_init__(self) -> None:
        seen: set[tuple[int, int]] = set()
        deduped: list[tuple[int, int]] = []
        for u, v in self.edges:
            if not (0 <= u < self.n and 0 <= v < self.n):
                raise ValueError(f"edge ({u}, {v}) has a node outside [0, {self.n})")
            if (u, v) in seen:
                continue
            seen.add((u, v))
            deduped.append((u, v))
        self.edges = deduped


def topo_sort(es: EdgeSet) -> list[int] | None:
    """Kahn's algorithm; smallest node id first among the available nodes.

    Returns the node sequence in topological order, or None when the edge set
    contains a cycle.  None is a normal outcome, not an error.
    """
    n = es.n
    out: list[list[int]] = [[] for _ in range(n)]
    for u, v in es.edges:
        out[u].append(v)
    return kahn_order(n, out)


def kahn_order(
    n: int, out: list[list[int]], extra: tuple[int, int] | None = None
) -> list[int] | None:
    """topo_sort on adjacency lists, optionally with one edge added on top."""
    indeg = [0] * n
    for vs in out:
        for w in vs:
            indeg[w] += 1
    if extra is not None:
        indeg[extra[1]] += 1

    heap = [u for u in range(n) if indeg[u] == 0]
    heapq.heapify(heap)
    push = heapq.heappush
    order: list[int] = []
    while heap:
        u = heapq.heappop(heap)
        order.append(u)
        for w in out[u]:
            indeg[w] -= 1
            if indeg[w] == 0:
                push(heap, w)
        if extra is not None and u == extra[0]:
            w = extra[1]
            indeg[w] -= 1
            if indeg[w] == 0:
                push(heap, w)
    if len(order) != n:
        return None
    return order


def validate_order(order: list[int], es: EdgeSet) -> bool:
    """True iff every edge (u, v) has u strictly before v in order."""
    pos = positions_of(order)
    for u, v in es.edges:
        if pos[u] >= pos[v]:
            return False
    return True


def positions_of(order: list[int]) -> list[int]:
    """Inverse of an order sequence: 1-based position per node id."""
    n = len(order)
    pos = [0] * n
    p = 1
    for u in order:
        pos[u] = p
        p += 1
    if 0 in pos:
        raise ValueError("order is not a permutation of [0, n)")
    return pos


def first_violation(pos: np.ndarray, us: np.ndarray, vs: np.ndarray) -> int:
    """Index of the first edge with pos[u] >= pos[v], or -1 if none.

    Array-level variant of validate_order for harnesses that validate after
    every insertion: pos maps node id to position, us/vs are the edge
    endpoints inserted so far.
    """
    if len(us) == 0:
        return -1
    bad = pos[us] >= pos[vs]
    if not bad.any():
        return -1
    return int(np.argmax(bad))


def brute_reachable(es: EdgeSet, u: int, v: int) -> bool:
    """True iff a directed path u -> ... -> v exists; u reaches itself."""
    if not (0 <= u < es.n and 0 <= v < es.n):
        raise ValueError(f"node out of range for n={es.n}")
    if u == v:
        return True
    out: list[list[int]] = [[] for _ in range(es.n)]
    for a, b in es.edges:
        out[a].append(b)
    seen = bytearray(es.n)
    seen[u] = 1
    stack = [u]
    while stack:
        x = stack.pop()
        for w in out[x]:
            if w == v:
                return True
            if not seen[w]:
                seen[w] = 1
                stack.append(w)
    return False
