"""REDUCE and box-REDUCE: shrink an instance by one time unit in two ranks."""

from __future__ import annotations

from .core import Instance, InvalidInput, normalize, rank_stats
from .exact import optimal_makespan


def _decremented(inst: Instance, r: int) -> list[int]:
    if not 2 <= r <= inst.k:
        raise InvalidInput(f"rank must be in 2..{inst.k}, got {r}")
    lam = rank_stats(inst).lambdas[r - 1]
    # rank r-1 jobs are all >= lam, so this also keeps them nonnegative
    if lam < 1:
        raise InvalidInput(f"largest job of rank {r} is 0 and cannot be decremented")
    times = list(inst.times)
    for j in inst.rank_jobs(r - 1):
        times[j] -= 1
    for j in inst.rank_jobs(r):
        if inst.times[j] == lam:
            times[j] -= 1
    return times


def reduce(inst: Instance, r: int) -> Instance:
    """Subtract 1 from every rank ``r-1`` job and from every rank ``r`` job equal to its maximum."""
    return normalize(inst.m, _decremented(inst, r))


def preserves_ranks(inst: Instance, r: int) -> bool:
    """Whether ``reduce(inst, r)`` keeps every job in its original rank.

    False means the decremented sequence had to be re-sorted across a rank
    boundary.
    """
    times = _decremented(inst, r)
    return all(a >= b for a, b in zip(times, times[1:]))


def box_reduce(inst: Instance, r: int, limits=None) -> Instance:
    """REDUCE, then top up rank-1 jobs so the canonical optimum becomes rectangular."""
    reduced = reduce(inst, r)
    solved = optimal_makespan(reduced, limits)
    times = list(reduced.times)
    for row, load in zip(solved.schedule.grid, solved.schedule.loads):
        times[row[0]] += solved.t_star - load
    return normalize(inst.m, times)
