"""Instance generators: the tight family, random sampling, exhaustive enumeration.

Random instances use :class:`random.Random` (MT19937), whose output for a
given integer seed is identical across platforms.
"""

from __future__ import annotations

import math
import random
from typing import Iterator

from .core import Instance, InvalidInput, ResourceLimit, normalize

ENUMERATION_CAP = 1_000_000


def tight_family(m: int) -> Instance:
    """The ``3m``-job instance where LD is off by exactly ``(5m-2)/(4m-1)``."""
    if m < 2:
        raise InvalidInput(f"tight family needs m >= 2, got {m}")
    times = [0] * (m - 1) + [m]
    times += [j - 1 for j in range(m + 1, 2 * m + 1)]
    times += [j - 2 for j in range(2 * m + 1, 3 * m + 1)]
    return normalize(m, times)


def tight_family_witness(m: int) -> tuple[tuple[int, ...], ...]:
    """Rectangular optimal grid for :func:`tight_family`, every load ``4m-1``.

    Sorted ranks are ``[3m-2 .. 2m-1]``, ``[2m-1 .. m]``, ``[m, 0, ...]``.
    Machine ``i < m-1`` pairs ``3m-2-i`` with ``m+1+i``; the last machine
    takes ``2m-1``, ``m`` and ``m``.
    """
    if m < 2:
        raise InvalidInput(f"tight family needs m >= 2, got {m}")
    rows = [(i, 2 * m - 2 - i, 2 * m + 1 + i) for i in range(m - 1)]
    rows.append((m - 1, 2 * m - 1, 2 * m))
    return tuple(rows)


def random_instance(m: int, k: int, p_max: int, seed: int) -> Instance:
    """``m*k`` i.i.d. uniform integers in ``[0, p_max]``, sorted."""
    if m < 1 or k < 1 or p_max < 0:
        raise InvalidInput(f"need m, k >= 1 and p_max >= 0, got {m}, {k}, {p_max}")
    rng = random.Random(seed)
    return normalize(m, [rng.randint(0, p_max) for _ in range(m * k)])


def count_instances(m: int, k: int, p_max: int) -> int:
    return math.comb(m * k + p_max, m * k)


def enumerate_instances(m: int, k: int, p_max: int, cap: int = ENUMERATION_CAP) -> Iterator[Instance]:
    """Every nonincreasing length-``m*k`` sequence over ``0..p_max``, lexicographically."""
    if m < 1 or k < 1 or p_max < 0:
        raise InvalidInput(f"need m, k >= 1 and p_max >= 0, got {m}, {k}, {p_max}")
    total = count_instances(m, k, p_max)
    if total > cap:
        raise ResourceLimit(f"{total} instances exceeds enumeration cap {cap}")
    n = m * k

    def extend(prefix, top):
        if len(prefix) == n:
            yield Instance(m, tuple(prefix))
            return
        for p in range(top + 1):
            prefix.append(p)
            yield from extend(prefix, p)
            prefix.pop()

    yield from extend([], p_max)
