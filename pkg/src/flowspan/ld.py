"""The LD heuristic and Graham's list-scheduling baselines."""

from __future__ import annotations

import heapq
from typing import Iterable, NamedTuple, Sequence

from .core import Instance, InvalidInput, Profile, Schedule


class LDResult(NamedTuple):
    schedule: Schedule
    makespan: int
    profiles: tuple[Profile, ...]


def ld_schedule(inst: Instance) -> LDResult:
    """Assign ranks 1..k in order, largest job to least-loaded machine.

    Ties between equally loaded machines go to the lower machine index.
    The returned schedule is already in its reversed, left-justified form
    (see :class:`Schedule`); ``profiles[l-1]`` is the forward profile after
    rank ``l``.
    """
    m, p = inst.m, inst.times
    loads = [0] * m
    rows: list[list[int]] = [[] for _ in range(m)]
    profiles = []
    for r in range(1, inst.k + 1):
        machines = sorted(range(m), key=lambda i: (loads[i], i))
        for i, j in zip(machines, inst.rank_jobs(r)):
            rows[i].append(j)
            loads[i] += p[j]
        profiles.append(Profile(tuple(sorted(loads, reverse=True)), r))
    sched = Schedule(inst, tuple(map(tuple, rows)))
    return LDResult(sched, max(loads), tuple(profiles))


def profile_after(inst: Instance, rank: int) -> Profile:
    if not 1 <= rank <= inst.k:
        raise InvalidInput(f"rank {rank} out of range 1..{inst.k}")
    return ld_schedule(inst).profiles[rank - 1]


def list_schedule(m: int, ordered_jobs: Iterable[int]) -> int:
    """Greedy list scheduling: each job goes to the earliest available machine."""
    if m < 1:
        raise InvalidInput(f"machine count must be positive, got {m}")
    heap = [(0, i) for i in range(m)]
    for p in ordered_jobs:
        load, i = heapq.heappop(heap)
        heapq.heappush(heap, (load + p, i))
    return max(load for load, _ in heap)


def lpt_schedule(m: int, jobs: Sequence[int]) -> int:
    return list_schedule(m, sorted(jobs, reverse=True))
