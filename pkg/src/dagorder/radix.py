"""Two-pass radix sort for position values.

Sorting k positions drawn from [1, n] costs O(k + sqrt(n)) by bucketing on
digits base ceil(sqrt(n)): low digit first, then high digit, both passes
stable, so the result is ascending.
"""

from __future__ import annotations

from math import isqrt


def radix_sort(values: list[int], n: int) -> list[int]:
    """Return values sorted ascending; every value must lie in [1, n]."""
    if n < 1:
        raise ValueError(f"domain bound must be positive, got n={n}")
    if len(values) <= 1:
        for x in values:
            if not 1 <= x <= n:
                raise ValueError(f"value {x} outside [1, {n}]")
        return list(values)

    base = isqrt(n)
    if base * base < n:
        base += 1

    low: list[list[int]] = [[] for _ in range(base)]
    for x in values:
        if not 1 <= x <= n:
            raise ValueError(f"value {x} outside [1, {n}]")
        low[(x - 1) % base].append(x)

    high: list[list[int]] = [[] for _ in range(base)]
    for chunk in low:
        for x in chunk:
            high[(x - 1) // base].append(x)

    out: list[int] = []
    for chunk in high:
        out.extend(chunk)
    return out
