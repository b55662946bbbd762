"""Edge-insertion instances: random DAG sequences, an adversarial family,
and plain-text sequence files.

Randomness comes from a self-contained splitmix64 stream plus Fisher-Yates
shuffles (draws via modulo), so any implementation of the same recipe in any
language reproduces the sequences bit for bit.  The recipe identifier is
GENERATOR_ID.
"""

from __future__ import annotations

from dataclasses import dataclass

GENERATOR_ID = "splitmix64-fisher-yates-v1"

_MASK = (1 << 64) - 1


class SplitMix64:
    """splitmix64: 64-bit state, one additive constant, two xor-shifts."""

    __slots__ = ("_state",)

    def __init__(self, seed: int) -> None:
        self._state = seed & _MASK

    def next_u64(self) -> int:
        self._state = (self._state + 0x9E3779B97F4A7C15) & _MASK
        z = self._state
        z = ((z ^ (z >> 30)) * 0xBF58476D1CE4E5B9) & _MASK
        z = ((z ^ (z >> 27)) * 0x94D049BB133111EB) & _MASK
        return z ^ (z >> 31)

    def below(self, k: int) -> int:
        """Draw from [0, k) as next_u64() % k; bias is negligible here."""
        return self.next_u64() % k

    def shuffle(self, xs: list) -> None:
        """Fisher-Yates, walking from the back."""
        below = self.below
        for i in range(len(xs) - 1, 0, -1):
            j = below(i + 1)
            xs[i], xs[j] = xs[j], xs[i]


@dataclass
class EdgeSequence:
    """Insertion order of directed edges over nodes [0, n)."""

    n: int
    ops: list[tuple[int, int]]

    @property
    def m(self) -> int:
        return len(self.ops)


def random_sequence(n: int, m: int | None = None, seed: int = 0) -> EdgeSequence:
    """Random DAG insertion sequence, acyclic by construction.

    A random permutation pi fixes a hidden total order; the candidate edges
    are all (pi[i], pi[j]) with i < j, listed for i ascending then j
    ascending, shuffled with the same stream, truncated to m (default: all
    n*(n-1)/2, the complete DAG).
    """
    if n < 2:
        raise ValueError(f"need at least two nodes, got n={n}")
    total = n * (n - 1) // 2
    if m is None:
        m = total
    if not 0 <= m <= total:
        raise ValueError(f"m={m} outside [0, {total}] for n={n}")
    rng = SplitMix64(seed)
    pi = list(range(n))
    rng.shuffle(pi)
    edges = [(pi[i], pi[j]) for i in range(n - 1) for j in range(i + 1, n)]
    rng.shuffle(edges)
    del edges[m:]
    return EdgeSequence(n, edges)


def hard_sequence(n: int) -> EdgeSequence:
    """Adversarial sequence forcing heavy reordering; needs n % 6 == 0.

    Nodes split into four blocks: Q1 = [0, n/3), Q2 = [n/3, n/2),
    Q3 = [n/2, 2n/3), Q4 = [2n/3, n).  First each block is chained into a
    path left to right; then four cross phases follow, three of them walking
    their targets backwards so consecutive insertions land far apart and the
    maintained order has to move whole blocks past each other.
    """
    if n < 6 or n % 6 != 0:
        raise ValueError(f"block construction needs n % 6 == 0 and n >= 6, got {n}")
    third = n // 3
    sixth = n // 6
    half = n // 2
    two_thirds = 2 * n // 3
    ops: list[tuple[int, int]] = []

    for lo, hi in ((0, third), (third, half), (half, two_thirds), (two_thirds, n)):
        for i in range(lo, hi - 1):
            ops.append((i, i + 1))

    # Q1 -> Q3, targets walked backwards.
    for j in range(third):
        for k in range(sixth - 1, -1, -1):
            ops.append((j, k + half))
    # Q1 -> Q2, two sources per target.
    for j in range(sixth):
        ops.append((2 * j, j + third))
        ops.append((2 * j + 1, j + third))
    # Q2 -> Q4, targets walked backwards.
    for j in range(sixth):
        for k in range(third - 1, -1, -1):
            ops.append((j + third, k + two_thirds))
    # Q3 -> Q2, targets walked backwards.
    for j in range(sixth):
        for k in range(sixth - 1, -1, -1):
            ops.append((j + half, k + third))
    return EdgeSequence(n, ops)


def write_sequence(path: str, seq: EdgeSequence) -> None:
    """Write "n m" then one "u v" line per insertion, newline-terminated."""
    with open(path, "w", encoding="ascii") as fh:
        fh.write(f"{seq.n} {seq.m}\n")
        for u, v in seq.ops:
            fh.write(f"{u} {v}\n")


def read_sequence(path: str) -> EdgeSequence:
    """Parse a sequence file, reporting the line number of any defect."""
    with open(path, "r", encoding="ascii") as fh:
        header = fh.readline()
        parts = header.split()
        if len(parts) != 2:
            raise ValueError(f"{path}:1: expected 'n m', got {header.rstrip()!r}")
        try:
            n, m = int(parts[0]), int(parts[1])
        except ValueError:
            raise ValueError(f"{path}:1: expected two integers, got {header.rstrip()!r}") from None
        if n < 1 or m < 0:
            raise ValueError(f"{path}:1: need n >= 1 and m >= 0, got n={n} m={m}")
        ops: list[tuple[int, int]] = []
        for lineno, line in enumerate(fh, start=2):
            parts = line.split()
            if len(parts) != 2:
                raise ValueError(f"{path}:{lineno}: expected 'u v', got {line.rstrip()!r}")
            try:
                u, v = int(parts[0]), int(parts[1])
            except ValueError:
                raise ValueError(
                    f"{path}:{lineno}: expected two integers, got {line.rstrip()!r}"
                ) from None
            if not (0 <= u < n and 0 <= v < n):
                raise ValueError(f"{path}:{lineno}: node id outside [0, {n}) in edge ({u}, {v})")
            ops.append((u, v))
        if len(ops) != m:
            raise ValueError(f"{path}: header promised {m} edges, found {len(ops)}")
    return EdgeSequence(n, ops)
