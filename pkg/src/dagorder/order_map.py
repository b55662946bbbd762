"""Mutable bijection between nodes and topological positions.

Nodes are 0-based ids in [0, n); positions are 1-based ranks in [1, n].
A fresh map places node i at position i + 1.
"""

from __future__ import annotations


class OrderMap:
    __slots__ = ("n", "_pos", "_node")

    def __init__(self, n: int) -> None:
        if n < 1:
            raise ValueError(f"need at least one node, got n={n}")
        self.n = n
        self._pos = list(range(1, n + 1))
        # _node is padded so _node[p] works for 1-based p without offset math.
        self._node = [-1] + list(range(n))

    def position(self, u: int) -> int:
        return self._pos[u]

    def node_at(self, p: int) -> int:
        if not 1 <= p <= self.n:
            raise IndexError(f"position {p} out of range [1, {self.n}]")
        return self._node[p]

    def distance(self, u: int, v: int) -> int:
        """Absolute gap |position(u) - position(v)|."""
        return abs(self._pos[u] - self._pos[v])

    def swap(self, u: int, v: int) -> None:
        """Exchange the positions of two distinct nodes."""
        if u == v:
            raise ValueError(f"cannot swap node {u} with itself")
        pos = self._pos
        pu, pv = pos[u], pos[v]
        pos[u], pos[v] = pv, pu
        node = self._node
        node[pu], node[pv] = v, u

    def assign_many(self, positions: list[int], nodes: list[int]) -> None:
        """Bulk-place nodes[i] at positions[i].

        The caller must supply a permutation patch: taken together with the
        untouched entries, the result has to remain a bijection.  Used by the
        baselines for window rewrites; no per-call validation.
        """
        if len(positions) != len(nodes):
            raise ValueError("positions and nodes differ in length")
        pos = self._pos
        node = self._node
        for p, x in zip(positions, nodes):
            node[p] = x
            pos[x] = p

    def window(self, lo: int, hi: int) -> list[int]:
        """Nodes at positions lo..hi inclusive, in position order."""
        if not 1 <= lo <= hi <= self.n:
            raise IndexError(f"window [{lo}, {hi}] out of range [1, {self.n}]")
        return self._node[lo : hi + 1]

    def order(self) -> list[int]:
        """Nodes listed from position 1 to n."""
        return self._node[1:]

    def positions(self) -> list[int]:
        """Position of each node, indexed by node id."""
        return self._pos.copy()
