"""Reference online-ordering algorithms to benchmark against.

All three keep plain adjacency lists plus an OrderMap and count work in
visited_nodes: every node popped during a search, every neighbor inspected
along a scanned adjacency list (admissible or not), and every node whose
position is written back during a repair.  Counting inspected neighbors is
what lets the counter expose the cubic blowup on adversarial sequences,
where most scans find nothing admissible.
"""

from __future__ import annotations

from .core import _DUPLICATE, InsertResult, _accepted, _rejected
from .oracle import kahn_order
from .order_map import OrderMap


class _BaselineGraph:
    """Shared bookkeeping: adjacency, edge set, order, insert plumbing."""

    def __init__(self, n: int) -> None:
        if n < 1:
            raise ValueError(f"need at least one node, got n={n}")
        self.n = n
        self.m = 0
        self.order_map = OrderMap(n)
        self.out: list[list[int]] = [[] for _ in range(n)]
        self.inn: list[list[int]] = [[] for _ in range(n)]
        self._edges: set[tuple[int, int]] = set()
        self.visited_nodes = 0

    def order(self) -> list[int]:
        return self.order_map.order()

    def position(self, u: int) -> int:
        return self.order_map.position(u)

    def has_edge(self, u: int, v: int) -> bool:
        return (u, v) in self._edges

    def edges(self) -> list[tuple[int, int]]:
        return [(a, b) for a in range(self.n) for b in self.out[a]]

    def insert(self, u: int, v: int) -> InsertResult:
        n = self.n
        if not (0 <= u < n and 0 <= v < n):
            raise ValueError(f"edge ({u}, {v}) has a node outside [0, {n})")
        if u == v:
            return _rejected([u, u])
        if (u, v) in self._edges:
            return _DUPLICATE
        result = self._repair(u, v)
        if result.accepted:
            self._edges.add((u, v))
            self.out[u].append(v)
            self.inn[v].append(u)
            self.m += 1
        return result

    def _repair(self, u: int, v: int) -> InsertResult:
        raise NotImplementedError

    def _dfs_cycle_walk(self, u: int, v: int, parent: dict[int, int]) -> list[int]:
        """Closed walk u -> v -> ... -> u from DFS parent links ending at u."""
        chain = [u]
        x = u
        while x != v:
            x = parent[x]
            chain.append(x)
        chain.reverse()
        return [u] + chain


class NaiveGraph(_BaselineGraph):
    """Full recomputation: every insertion reruns the offline sort.

    The offline rule picks the smallest available node id first.  When the
    present order already satisfies the new edge the rerun would replay every
    pick unchanged (the new constraint never blocks the chosen node), so the
    recomputation is skipped; the skip is observable only in visited_nodes.
    A recompute attempt costs n + m + 1 (every node popped, every stored edge
    plus the tentative one relaxed); a completed one costs n writebacks more.
    """

    def _repair(self, u: int, v: int) -> InsertResult:
        om = self.order_map
        pos = om._pos
        if pos[u] < pos[v]:
            return _accepted(False)
        self.visited_nodes += self.n + self.m + 1
        new_order = kahn_order(self.n, self.out, extra=(u, v))
        if new_order is None:
            return _rejected(self._bfs_cycle_walk(u, v))
        self.visited_nodes += self.n
        om.assign_many(range(1, self.n + 1), new_order)
        return _accepted(True)

    def _bfs_cycle_walk(self, u: int, v: int) -> list[int]:
        parent: dict[int, int] = {v: v}
        queue = [v]
        for x in queue:
            if x == u:
                break
            for w in self.out[x]:
                if w not in parent:
                    parent[w] = x
                    queue.append(w)
        chain = [u]
        x = u
        while x != v:
            x = parent[x]
            chain.append(x)
        chain.reverse()
        return [u] + chain


class PearceKellyGraph(_BaselineGraph):
    """Affected-region repair with pooled position reuse.

    A violating edge u -> v confines the fix to positions [pos(v), pos(u)]:
    a forward search from v inside the region finds the nodes that must end
    up after u's side, a backward search from u the nodes that must come
    first, and the union of their old positions is dealt out again, backward
    group first, both groups keeping their relative order.
    """

    def _repair(self, u: int, v: int) -> InsertResult:
        om = self.order_map
        pos = om._pos
        pu = pos[u]
        pv = pos[v]
        if pv > pu:
            return _accepted(False)

        parent: dict[int, int] = {}
        delta_f: list[int] = []
        seen = {v}
        stack = [v]
        out = self.out
        touched = 0
        while stack:
            x = stack.pop()
            row = out[x]
            touched += 1 + len(row)
            delta_f.append(x)
            for w in row:
                if w == u:
                    parent[w] = x
                    self.visited_nodes += touched
                    return _rejected(self._dfs_cycle_walk(u, v, parent))
                if w not in seen and pos[w] <= pu:
                    seen.add(w)
                    parent[w] = x
                    stack.append(w)

        delta_b: list[int] = []
        seen_b = {u}
        stack = [u]
        inn = self.inn
        while stack:
            x = stack.pop()
            row = inn[x]
            touched += 1 + len(row)
            delta_b.append(x)
            for w in row:
                if w not in seen_b and pos[w] >= pv:
                    seen_b.add(w)
                    stack.append(w)
        self.visited_nodes += touched

        delta_f.sort(key=pos.__getitem__)
        delta_b.sort(key=pos.__getitem__)
        pooled = sorted(pos[x] for x in delta_b + delta_f)
        self.visited_nodes += len(pooled)
        om.assign_many(pooled, delta_b + delta_f)
        return _accepted(True)


class MnrGraph(_BaselineGraph):
    """Window compaction repair.

    For a violating edge u -> v, one restricted search from v marks the nodes
    of the window [pos(v), pos(u)] that are stuck behind v; the window is then
    rewritten with the unmarked nodes first, both halves keeping their
    relative order, which lands v and everything reachable from it after u.
    """

    def _repair(self, u: int, v: int) -> InsertResult:
        om = self.order_map
        pos = om._pos
        pu = pos[u]
        pv = pos[v]
        if pv > pu:
            return _accepted(False)

        parent: dict[int, int] = {}
        reached = {v}
        stack = [v]
        out = self.out
        touched = 0
        while stack:
            x = stack.pop()
            row = out[x]
            touched += 1 + len(row)
            for w in row:
                if w == u:
                    parent[w] = x
                    self.visited_nodes += touched
                    return _rejected(self._dfs_cycle_walk(u, v, parent))
                if w not in reached and pos[w] <= pu:
                    reached.add(w)
                    parent[w] = x
                    stack.append(w)
        self.visited_nodes += touched

        window = om.window(pv, pu)
        keep = [x for x in window if x not in reached]
        tail = [x for x in window if x in reached]
        self.visited_nodes += len(window)
        om.assign_many(range(pv, pu + 1), keep + tail)
        return _accepted(True)


BASELINES = {
    "naive": NaiveGraph,
    "pk": PearceKellyGraph,
    "mnr": MnrGraph,
}
