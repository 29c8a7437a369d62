"""Instances, rank statistics and rank-structured schedules.

A schedule here is always flowtime-optimal: each machine runs exactly one
job of every rank, highest rank first, with no idle time.  Everything is
integer arithmetic.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from functools import cached_property
from typing import NamedTuple, Sequence


class InvalidInput(ValueError):
    """Raised for malformed instances, schedules or arguments."""


class ResourceLimit(RuntimeError):
    """Raised when a search would exceed its configured size limits."""


@dataclass(frozen=True)
class Instance:
    """``m`` machines and ``m*k`` processing times sorted nonincreasing.

    ``origin[j]`` is the input position of sorted job ``j`` (padding jobs
    get positions past the end of the input).  It does not take part in
    equality.
    """

    m: int
    times: tuple[int, ...]
    origin: tuple[int, ...] = field(default=(), compare=False, repr=False)

    def __post_init__(self):
        if not isinstance(self.m, int) or self.m < 1:
            raise InvalidInput(f"machine count must be a positive integer, got {self.m!r}")
        times = tuple(self.times)
        object.__setattr__(self, "times", times)
        if not times or len(times) % self.m:
            raise InvalidInput(
                f"need a positive multiple of m={self.m} processing times, got {len(times)}"
            )
        for p in times:
            if not isinstance(p, int) or isinstance(p, bool) or p < 0:
                raise InvalidInput(f"processing times must be nonnegative integers, got {p!r}")
        if any(a < b for a, b in zip(times, times[1:])):
            raise InvalidInput("processing times must be sorted nonincreasing")
        if not self.origin:
            object.__setattr__(self, "origin", tuple(range(len(times))))

    @property
    def n(self) -> int:
        return len(self.times)

    @property
    def k(self) -> int:
        return len(self.times) // self.m

    @property
    def total(self) -> int:
        return sum(self.times)

    def rank(self, r: int) -> tuple[int, ...]:
        """Processing times of rank ``r`` (1-based), largest first."""
        if not 1 <= r <= self.k:
            raise InvalidInput(f"rank {r} out of range 1..{self.k}")
        return self.times[(r - 1) * self.m : r * self.m]

    def rank_jobs(self, r: int) -> range:
        """Sorted job indices (0-based) belonging to rank ``r``."""
        if not 1 <= r <= self.k:
            raise InvalidInput(f"rank {r} out of range 1..{self.k}")
        return range((r - 1) * self.m, r * self.m)

    def with_zero_rank(self) -> Instance:
        return Instance(self.m, self.times + (0,) * self.m)


def normalize(m: int, raw_times: Sequence[int]) -> Instance:
    """Sort ``raw_times`` nonincreasing and zero-pad to a multiple of ``m``.

    Equal times keep their input order, so the result is deterministic.
    """
    if isinstance(m, bool) or not isinstance(m, int) or m < 1:
        raise InvalidInput(f"machine count must be a positive integer, got {m!r}")
    raw = list(raw_times)
    if not raw:
        raise InvalidInput("at least one processing time is required")
    for p in raw:
        if isinstance(p, bool) or not isinstance(p, int):
            raise InvalidInput(f"processing times must be integers, got {p!r}")
        if p < 0:
            raise InvalidInput(f"processing times must be nonnegative, got {p}")
    k = -(-len(raw) // m)
    padded = raw + [0] * (m * k - len(raw))
    order = sorted(range(len(padded)), key=lambda j: -padded[j])
    return Instance(m, tuple(padded[j] for j in order), tuple(order))


class RankStats(NamedTuple):
    lambdas: tuple[int, ...]
    mus: tuple[int, ...]
    sums: tuple[int, ...]


def rank_stats(inst: Instance) -> RankStats:
    ranks = [inst.rank(r) for r in range(1, inst.k + 1)]
    return RankStats(
        tuple(rk[0] for rk in ranks),
        tuple(rk[-1] for rk in ranks),
        tuple(sum(rk) for rk in ranks),
    )


def optimal_flowtime(inst: Instance) -> int:
    """Total completion time shared by every flowtime-optimal schedule."""
    return sum(r * s for r, s in enumerate(rank_stats(inst).sums, start=1))


class Profile(NamedTuple):
    """Machine completion times after ``rank``, sorted nonincreasing."""

    values: tuple[int, ...]
    rank: int

    def dominates(self, other: Profile) -> bool:
        return all(a >= b for a, b in zip(self.values, other.values))


@dataclass(frozen=True)
class Schedule:
    """Rank-indexed assignment: ``grid[i][r-1]`` is the job of rank ``r`` on machine ``i``.

    Machine ``i`` runs ``grid[i][k-1]`` first starting at time zero and
    ``grid[i][0]`` last.
    """

    instance: Instance
    grid: tuple[tuple[int, ...], ...]

    def __post_init__(self):
        inst = self.instance
        grid = tuple(tuple(row) for row in self.grid)
        object.__setattr__(self, "grid", grid)
        if len(grid) != inst.m or any(len(row) != inst.k for row in grid):
            raise InvalidInput(f"grid must be {inst.m}x{inst.k}")
        for r in range(1, inst.k + 1):
            column = sorted(row[r - 1] for row in grid)
            if column != list(inst.rank_jobs(r)):
                raise InvalidInput(f"rank {r} column is not a permutation of its jobs")

    @cached_property
    def loads(self) -> tuple[int, ...]:
        p = self.instance.times
        return tuple(sum(p[j] for j in row) for row in self.grid)

    @cached_property
    def intervals(self) -> dict[int, tuple[int, int]]:
        """Job index -> (start, completion)."""
        p = self.instance.times
        out = {}
        for row in self.grid:
            t = 0
            for j in reversed(row):
                out[j] = (t, t + p[j])
                t += p[j]
        return out

    def machine_of(self, job: int) -> int:
        for i, row in enumerate(self.grid):
            if job in row:
                return i
        raise InvalidInput(f"job {job} not in schedule")

    def partial_loads(self, rank: int) -> tuple[int, ...]:
        """Per-machine sums over ranks 1..rank (the forward-pass view)."""
        p = self.instance.times
        return tuple(sum(p[j] for j in row[:rank]) for row in self.grid)

    @property
    def makespan(self) -> int:
        return max(self.loads)

    @property
    def flowtime(self) -> int:
        return sum(c for _, c in self.intervals.values())


def evaluate(sched: Schedule) -> tuple[int, int]:
    """Return ``(makespan, flowtime)``."""
    return sched.makespan, sched.flowtime


def is_rectangular(sched: Schedule) -> bool:
    return len(set(sched.loads)) == 1
