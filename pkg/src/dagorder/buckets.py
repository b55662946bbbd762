"""Distance-bucketed adjacency lists over an OrderMap.

Each node keeps its outgoing and incoming neighbors grouped by how far away
they sit in the current order: bucket i of node u holds every adjacent w with
i*t < |pos(u) - pos(w)| <= (i+1)*t, keyed by node id.  Every list has
ceil((n-1)/t) buckets, so a bucket never holds more than t nodes.

Three interchangeable bucket containers are provided: a balanced binary tree,
an n-bit array paired with a lazily purged member list, and a hash set.  They
expose the same insert/delete/contains/collect contract and always hold
identical member sets under identical call sequences.
"""

from __future__ import annotations

from .order_map import OrderMap

OUT = 0
IN = 1


def bucket_index(d: int, t: int) -> int:
    """Bucket holding a neighbor at distance d for width t: ceil(d/t) - 1."""
    if d < 1:
        raise ValueError(f"distance must be positive, got {d}")
    return (d - 1) // t


def bucket_count(n: int, t: int) -> int:
    """Buckets per adjacency list: ceil((n-1)/t); covers distances up to n-1."""
    return -(-(n - 1) // t)


# ---- balanced-tree container ----------------------------------------------


class _AvlNode:
    __slots__ = ("key", "left", "right", "h")

    def __init__(self, key: int) -> None:
        self.key = key
        self.left: _AvlNode | None = None
        self.right: _AvlNode | None = None
        self.h = 1


def _height(nd: _AvlNode | None) -> int:
    return nd.h if nd is not None else 0


def _rebalance(nd: _AvlNode) -> _AvlNode:
    lh, rh = _height(nd.left), _height(nd.right)
    nd.h = 1 + (lh if lh > rh else rh)
    bal = lh - rh
    if bal > 1:
        left = nd.left
        if _height(left.left) < _height(left.right):
            nd.left = _rotate_left(left)
        return _rotate_right(nd)
    if bal < -1:
        right = nd.right
        if _height(right.right) < _height(right.left):
            nd.right = _rotate_right(right)
        return _rotate_left(nd)
    return nd


def _rotate_right(y: _AvlNode) -> _AvlNode:
    x = y.left
    y.left = x.right
    x.right = y
    lh, rh = _height(y.left), _height(y.right)
    y.h = 1 + (lh if lh > rh else rh)
    lh, rh = _height(x.left), _height(x.right)
    x.h = 1 + (lh if lh > rh else rh)
    return x


def _rotate_left(x: _AvlNode) -> _AvlNode:
    y = x.right
    x.right = y.left
    y.left = x
    lh, rh = _height(x.left), _height(x.right)
    x.h = 1 + (lh if lh > rh else rh)
    lh, rh = _height(y.left), _height(y.right)
    y.h = 1 + (lh if lh > rh else rh)
    return y


def _avl_insert(nd: _AvlNode | None, key: int) -> _AvlNode:
    if nd is None:
        return _AvlNode(key)
    if key < nd.key:
        nd.left = _avl_insert(nd.left, key)
    elif key > nd.key:
        nd.right = _avl_insert(nd.right, key)
    else:
        raise ValueError(f"key {key} already present")
    return _rebalance(nd)


def _avl_delete(nd: _AvlNode | None, key: int) -> tuple[_AvlNode | None, bool]:
    if nd is None:
        return None, False
    if key < nd.key:
        nd.left, found = _avl_delete(nd.left, key)
    elif key > nd.key:
        nd.right, found = _avl_delete(nd.right, key)
    else:
        if nd.left is None:
            return nd.right, True
        if nd.right is None:
            return nd.left, True
        succ = nd.right
        while succ.left is not None:
            succ = succ.left
        nd.key = succ.key
        nd.right, _ = _avl_delete(nd.right, succ.key)
        found = True
    return _rebalance(nd), found


class TreeBucket:
    """Balanced binary tree keyed by node id."""

    __slots__ = ("_root", "_size")
    kind = "tree"

    def __init__(self, n: int) -> None:
        self._root: _AvlNode | None = None
        self._size = 0

    def __len__(self) -> int:
        return self._size

    def insert(self, x: int) -> None:
        self._root = _avl_insert(self._root, x)
        self._size += 1

    def delete(self, x: int) -> bool:
        self._root, found = _avl_delete(self._root, x)
        if found:
            self._size -= 1
        return found

    def contains(self, x: int) -> bool:
        nd = self._root
        while nd is not None:
            if x < nd.key:
                nd = nd.left
            elif x > nd.key:
                nd = nd.right
            else:
                return True
        return False

    def collect(self) -> list[int]:
        out: list[int] = []
        stack: list[_AvlNode] = []
        nd = self._root
        while stack or nd is not None:
            while nd is not None:
                stack.append(nd)
                nd = nd.left
            nd = stack.pop()
            out.append(nd.key)
            nd = nd.right
        return out


class BitArrayBucket:
    """Bit per node plus an append-only member list.

    delete only clears the bit; the list entry stays until the next collect
    walks the list, keeps the set bits, and drops the stale entries.  A node
    deleted and later re-inserted before any purge leaves two list entries,
    so a purging collect also dedups.
    """

    __slots__ = ("_bits", "_list", "_live")
    kind = "bitarray"

    def __init__(self, n: int) -> None:
        self._bits = bytearray((n + 8) >> 3)
        self._list: list[int] = []
        self._live = 0

    def __len__(self) -> int:
        return self._live

    def insert(self, x: int) -> None:
        bits = self._bits
        if (bits[x >> 3] >> (x & 7)) & 1:
            raise ValueError(f"key {x} already present")
        bits[x >> 3] |= 1 << (x & 7)
        self._list.append(x)
        self._live += 1
        # Bound stale growth so long-lived untouched buckets stay small.
        if len(self._list) > 2 * self._live + 16:
            self._purge()

    def delete(self, x: int) -> bool:
        bits = self._bits
        if (bits[x >> 3] >> (x & 7)) & 1:
            bits[x >> 3] &= ~(1 << (x & 7)) & 0xFF
            self._live -= 1
            return True
        return False

    def contains(self, x: int) -> bool:
        return bool((self._bits[x >> 3] >> (x & 7)) & 1)

    def _purge(self) -> list[int]:
        bits = self._bits
        out: list[int] = []
        taken: set[int] = set()
        for x in self._list:
            if (bits[x >> 3] >> (x & 7)) & 1 and x not in taken:
                taken.add(x)
                out.append(x)
        self._list = out
        self._live = len(out)
        return out

    def collect(self) -> list[int]:
        if len(self._list) == self._live:
            return self._list.copy()
        return self._purge().copy()


class HashBucket:
    """Hash set over node ids; expected constant-time operations."""

    __slots__ = ("_set",)
    kind = "hash"

    def __init__(self, n: int) -> None:
        self._set: set[int] = set()

    def __len__(self) -> int:
        return len(self._set)

    def insert(self, x: int) -> None:
        if x in self._set:
            raise ValueError(f"key {x} already present")
        self._set.add(x)

    def delete(self, x: int) -> bool:
        if x in self._set:
            self._set.remove(x)
            return True
        return False

    def contains(self, x: int) -> bool:
        return x in self._set

    def collect(self) -> list[int]:
        return list(self._set)


BACKENDS = {
    "tree": TreeBucket,
    "bitarray": BitArrayBucket,
    "hash": HashBucket,
}


# ---- the per-node store ----------------------------------------------------


class BucketStore:
    """Out- and in-adjacency of every node, bucketed by order distance.

    Mutations flow through the counters object (any object with integer
    attributes bucket_inserts / bucket_deletes / elements_collected).  Every
    delete call is counted, including probes that find nothing: a miss is
    still a delete operation against the container.
    """

    def __init__(self, order: OrderMap, t: int, backend: str, counters) -> None:
        if t < 1:
            raise ValueError(f"bucket width must be >= 1, got t={t}")
        if backend not in BACKENDS:
            raise ValueError(f"unknown backend {backend!r}")
        self.order = order
        self.t = t
        self.backend = backend
        self.counters = counters
        n = order.n
        nb = bucket_count(n, t)
        factory = BACKENDS[backend]
        self._adj = [
            [[factory(n) for _ in range(nb)] for _ in range(n)],
            [[factory(n) for _ in range(nb)] for _ in range(n)],
        ]

    @property
    def n(self) -> int:
        return self.order.n

    # ---- single-edge operations ----

    def add_edge(self, u: int, v: int) -> None:
        """Record edge u -> v at the bucket its current distance dictates."""
        d = self.order.distance(u, v)
        idx = (d - 1) // self.t
        self._adj[OUT][u][idx].insert(v)
        self._adj[IN][v][idx].insert(u)
        self.counters.bucket_inserts += 2

    def has_edge(self, u: int, v: int) -> bool:
        d = self.order.distance(u, v)
        if d == 0:
            return False
        return self._adj[OUT][u][(d - 1) // self.t].contains(v)

    def collect_prefix(self, x: int, direction: int, k: int) -> list[int]:
        """All members of buckets 0..k-1 of one adjacency list of x."""
        buckets = self._adj[direction][x]
        counters = self.counters
        out: list[int] = []
        for idx in range(min(k, len(buckets))):
            got = buckets[idx].collect()
            counters.elements_collected += len(got)
            out.extend(got)
        return out

    # ---- swap maintenance ----

    def update_for_swap(self, u: int, v: int, directed_by_order: bool = False) -> None:
        """Restore bucket placement for the upcoming position swap of u and v.

        Must run before the OrderMap swap.  When the gap exceeds t, the four
        lists of u and v are redistributed from scratch; otherwise only the
        neighbors whose distance class changes are transferred between
        consecutive buckets.  Either way, whenever a neighbor w lands in a
        different bucket of u's (or v's) list, the entry for u (or v) in w's
        opposite list moves between the same bucket indexes, since distance
        is symmetric.

        directed_by_order may be set when the current order is valid for
        every stored edge; then an edge between x and an earlier node can
        only point at x, which halves the probing work.  With arbitrary
        stores it must stay False.
        """
        om = self.order
        pu = om._pos[u]
        pv = om._pos[v]
        d = pu - pv if pu > pv else pv - pu
        if d > self.t:
            self._rebuild_two(u, pu, v, pv)
        else:
            self._shift_one(u, pu, pv, directed_by_order)
            self._shift_one(v, pv, pu, directed_by_order)

    def _shift_one(self, x: int, p_from: int, p_to: int, directed: bool) -> None:
        """Transfer x's neighbors across the bucket boundaries the move drags.

        A neighbor can change bucket only if its old distance sits within
        d = |p_to - p_from| of a multiple of t:

          drop:  old distance in (i*t, i*t + d]         bucket i -> i - 1
          climb: old distance in ((i+1)*t - d, (i+1)*t] bucket i -> i + 1

        Drop candidates lie beyond the destination, climb candidates behind
        the origin, so each candidate position is probed once.  The partner
        node of the swap keeps its distance to x and is never a candidate.
        """
        om = self.order
        n = om.n
        node_at = om._node
        t = self.t
        counters = self.counters
        out_b = self._adj[OUT][x]
        in_b = self._adj[IN][x]
        adj_out = self._adj[OUT]
        adj_in = self._adj[IN]
        d = p_to - p_from
        s = 1 if d > 0 else -1
        d = d * s

        spans: list[tuple[int, int, int, int]] = []
        # Drop side: old distance i*t + delta, delta in [1, d], toward p_to
        # and beyond it; bucket i -> i - 1.
        i = 1
        while True:
            if s > 0:
                lo, hi = p_from + i * t + 1, p_from + i * t + d
                if lo > n:
                    break
            else:
                lo, hi = p_from - i * t - d, p_from - i * t - 1
                if hi < 1:
                    break
            spans.append((max(lo, 1), min(hi, n), i, i - 1))
            i += 1
        # Climb side: old distance j*t - delta, delta in [0, d-1], behind the
        # origin; bucket j - 1 -> j.
        j = 1
        while True:
            if s > 0:
                lo, hi = p_from - j * t, p_from - j * t + d - 1
                if hi < 1:
                    break
            else:
                lo, hi = p_from + j * t - d + 1, p_from + j * t
                if lo > n:
                    break
            spans.append((max(lo, 1), min(hi, n), j - 1, j))
            j += 1

        for lo, hi, from_idx, to_idx in spans:
            for q in range(lo, hi + 1):
                if q == p_to:
                    # The swap partner lives at the destination; its distance
                    # to x does not change, so it never transfers.
                    continue
                w = node_at[q]
                # An edge between x and a node before it can only point at x
                # when the order is valid, which pins the list to probe.
                if directed:
                    if q < p_from:
                        sides = ((in_b, adj_out),)
                    else:
                        sides = ((out_b, adj_in),)
                else:
                    sides = ((out_b, adj_in), (in_b, adj_out))
                for own, mirror_adj in sides:
                    counters.bucket_deletes += 1
                    if own[from_idx].delete(w):
                        own[to_idx].insert(w)
                        wl = mirror_adj[w]
                        wl[from_idx].delete(x)
                        wl[to_idx].insert(x)
                        counters.bucket_deletes += 1
                        counters.bucket_inserts += 2
                        break

    def _rebuild_two(self, u: int, pu: int, v: int, pv: int) -> None:
        """Redistribute all four lists of u and v against post-swap positions."""
        om = self.order
        pos = om._pos
        t = self.t
        counters = self.counters
        moves: list[tuple[int, int, int, int, int]] = []  # dir, x, w, from, to
        for x, p_new, partner in ((u, pv, v), (v, pu, u)):
            for direction in (OUT, IN):
                buckets = self._adj[direction][x]
                for idx, bucket in enumerate(buckets):
                    got = bucket.collect()
                    counters.elements_collected += len(got)
                    for w in got:
                        if w == partner:
                            continue
                        nd = p_new - pos[w]
                        if nd < 0:
                            nd = -nd
                        new_idx = (nd - 1) // t
                        if new_idx != idx:
                            moves.append((direction, x, w, idx, new_idx))
        adj = self._adj
        for direction, x, w, idx, new_idx in moves:
            adj[direction][x][idx].delete(w)
            adj[direction][x][new_idx].insert(w)
            wl = adj[1 - direction][w]
            wl[idx].delete(x)
            wl[new_idx].insert(x)
            counters.bucket_deletes += 2
            counters.bucket_inserts += 2

    # ---- test support ----

    def snapshot(self) -> dict[tuple[int, int, int], frozenset[int]]:
        """Canonical member sets per (direction, node, bucket index); uncounted."""
        snap: dict[tuple[int, int, int], frozenset[int]] = {}
        for direction in (OUT, IN):
            for x in range(self.n):
                for idx, bucket in enumerate(self._adj[direction][x]):
                    members = bucket.collect()
                    if members:
                        snap[(direction, x, idx)] = frozenset(members)
        return snap
