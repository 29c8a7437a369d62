"""Exact minimum makespan over flowtime-optimal schedules.

The solver walks ranks in order keeping only the sorted multiset of
partial machine loads, since machine identity does not affect what the
remaining ranks can achieve.  For a target makespan ``T`` a state is
dropped when any of these exceed ``T``:

* the current maximum load,
* the area bound ``(current + remaining work) / m``,
* the best possible matching of the next rank onto the current loads
  (largest job on least loaded machine) plus the smallest job of every
  later rank.
"""

from __future__ import annotations

import itertools
import os
from dataclasses import dataclass
from typing import NamedTuple

from .core import Instance, InvalidInput, ResourceLimit, Schedule, rank_stats
from .ld import ld_schedule

LIMITS_ENV = "FLOWSPAN_SOLVER_LIMITS"
DEFAULT_LIMITS = (6, 7)
ORACLE_LIMITS = (4, 4)


class Limits(NamedTuple):
    m_max: int
    k_max: int


def solver_limits() -> Limits:
    """Search limits, overridable via ``FLOWSPAN_SOLVER_LIMITS="m_max,k_max"``."""
    raw = os.environ.get(LIMITS_ENV)
    if not raw:
        return Limits(*DEFAULT_LIMITS)
    try:
        m_max, k_max = (int(x) for x in raw.split(","))
    except ValueError:
        raise InvalidInput(f"{LIMITS_ENV} must look like 'm_max,k_max', got {raw!r}") from None
    if m_max < 1 or k_max < 1:
        raise InvalidInput(f"{LIMITS_ENV} values must be positive, got {raw!r}")
    return Limits(m_max, k_max)


def _check_limits(inst: Instance, limits) -> None:
    m_max, k_max = limits
    if inst.m > m_max or inst.k > k_max:
        raise ResourceLimit(
            f"instance has m={inst.m}, k={inst.k}; solver limits are "
            f"m <= {m_max}, k <= {k_max} (set {LIMITS_ENV} to override)"
        )


@dataclass(frozen=True)
class SolveResult:
    t_star: int
    schedule: Schedule
    rectangular: bool
    nodes_explored: int


def lower_bound(inst: Instance) -> int:
    """Largest of the area bound and the per-rank "one big job" bounds.

    Whichever machine gets the largest job of rank ``s`` also gets at
    least the smallest job of every other rank.
    """
    stats = rank_stats(inst)
    best = -(-inst.total // inst.m)
    mu_total = sum(stats.mus)
    for lam, mu in zip(stats.lambdas, stats.mus):
        best = max(best, mu_total - mu + lam)
    return best


class _Search:
    def __init__(self, inst: Instance):
        self.m = inst.m
        self.k = inst.k
        self.ranks = [inst.rank(r) for r in range(1, inst.k + 1)]
        mus = [rk[-1] for rk in self.ranks]
        sums = [sum(rk) for rk in self.ranks]
        # tails over ranks r..k-1 (0-based), with a trailing zero
        self.rest_mu = [sum(mus[r:]) for r in range(self.k + 1)]
        self.rest_sum = [sum(sums[r:]) for r in range(self.k + 1)]
        self.perms = [sorted(set(itertools.permutations(rk))) for rk in self.ranks]
        self.nodes = 0

    def admissible(self, r: int, loads: tuple[int, ...], target: int) -> bool:
        if loads[0] > target:
            return False
        if r == self.k:
            return True
        if sum(loads) + self.rest_sum[r] > self.m * target:
            return False
        matched = max(a + p for a, p in zip(reversed(loads), self.ranks[r]))
        return matched + self.rest_mu[r + 1] <= target

    def children(self, r: int, loads: tuple[int, ...]) -> list[tuple[int, ...]]:
        out = {
            tuple(sorted((a + p for a, p in zip(loads, perm)), reverse=True))
            for perm in self.perms[r]
        }
        return sorted(out)

    def feasible(self, target: int) -> bool:
        failed: set[tuple[int, tuple[int, ...]]] = set()

        def dfs(r, loads):
            self.nodes += 1
            if not self.admissible(r, loads, target):
                return False
            if r == self.k:
                return True
            if (r, loads) in failed:
                return False
            for child in self.children(r, loads):
                if dfs(r + 1, child):
                    return True
            failed.add((r, loads))
            return False

        return dfs(0, (0,) * self.m)

    def lexmin_loads(self, target: int):
        """Lexicographically smallest final sorted load vector with max <= target."""
        memo: dict[tuple[int, tuple[int, ...]], tuple[int, ...] | None] = {}

        def best(r, loads):
            key = (r, loads)
            if key in memo:
                return memo[key]
            self.nodes += 1
            if not self.admissible(r, loads, target):
                result = None
            elif r == self.k:
                result = loads
            else:
                result = None
                for child in self.children(r, loads):
                    got = best(r + 1, child)
                    if got is not None and (result is None or got < result):
                        result = got
            memo[key] = result
            return result

        return best


def optimal_makespan(inst: Instance, limits=None) -> SolveResult:
    """Minimum makespan over all one-job-per-rank-per-machine schedules.

    The witness is canonical: among optimal schedules it has the
    lexicographically smallest nonincreasing load vector, and among those
    the lexicographically smallest grid when read rank by rank (the
    rank-1 column, then rank 2, ...).
    """
    _check_limits(inst, limits or solver_limits())
    search = _Search(inst)
    target = lower_bound(inst)
    upper = ld_schedule(inst).makespan
    while target < upper and not search.feasible(target):
        target += 1

    best = search.lexmin_loads(target)
    goal = best(0, (0,) * inst.m)
    p = inst.times
    loads = [0] * inst.m
    columns = []
    for r in range(1, inst.k + 1):
        for perm in itertools.permutations(inst.rank_jobs(r)):
            trial = [a + p[j] for a, j in zip(loads, perm)]
            if best(r, tuple(sorted(trial, reverse=True))) == goal:
                columns.append(perm)
                loads = trial
                break
        else:  # pragma: no cover - goal was reachable from this state
            raise AssertionError("lost the optimal path while rebuilding the witness")
    grid = tuple(zip(*columns))
    sched = Schedule(inst, grid)
    return SolveResult(target, sched, target * inst.m == inst.total, search.nodes)


def brute_force_oracle(inst: Instance) -> int:
    """Enumerate every assignment, no pruning.  Verification only."""
    m_max, k_max = ORACLE_LIMITS
    if inst.m > m_max or inst.k > k_max:
        raise ResourceLimit(f"oracle is limited to m <= {m_max}, k <= {k_max}")
    m, p = inst.m, inst.times
    columns = [
        list(itertools.permutations(p[r * m : (r + 1) * m])) for r in range(inst.k)
    ]
    best = None
    for choice in itertools.product(*columns):
        makespan = max(sum(col[i] for col in choice) for i in range(m))
        if best is None or makespan < best:
            best = makespan
    return best
