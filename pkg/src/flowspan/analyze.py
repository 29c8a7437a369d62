"""Ratio reports against the (5m-2)/(4m-1) bound, LD shape classifiers and the search harness."""

from __future__ import annotations

from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Iterable, Sequence

from .core import Instance, InvalidInput, ResourceLimit, rank_stats
from .exact import optimal_makespan
from .generate import enumerate_instances, random_instance
from .ld import ld_schedule


def ld_bound(m: int) -> Fraction:
    return Fraction(5 * m - 2, 4 * m - 1)


@dataclass(frozen=True)
class RatioReport:
    m: int
    t_ld: int
    t_star: int
    ratio: Fraction | None  # None when t_star == 0
    bound: Fraction
    meets_bound: bool
    tight: bool

    @property
    def degenerate(self) -> bool:
        return self.t_star == 0

    def summary(self) -> str:
        def frac(q):
            return f"{q.numerator}/{q.denominator}"

        if self.degenerate:
            return f"t_LD={self.t_ld} t*={self.t_star} ratio=undefined bound={frac(self.bound)} DEGENERATE"
        verdict = "TIGHT" if self.tight else ("OK" if self.meets_bound else "VIOLATION")
        return (
            f"t_LD={self.t_ld} t*={self.t_star} ratio={frac(self.ratio)} "
            f"bound={frac(self.bound)} {verdict}"
        )


def ratio_report(inst: Instance, limits=None) -> RatioReport:
    m = inst.m
    t_ld = ld_schedule(inst).makespan
    t_star = optimal_makespan(inst, limits).t_star
    # cross-multiplied so that exact ties compare exactly
    meets = t_ld * (4 * m - 1) <= t_star * (5 * m - 2)
    if t_star == 0:
        return RatioReport(m, t_ld, 0, None, ld_bound(m), True, False)
    tight = t_ld * (4 * m - 1) == t_star * (5 * m - 2)
    return RatioReport(m, t_ld, t_star, Fraction(t_ld, t_star), ld_bound(m), meets, tight)


@dataclass(frozen=True)
class LdClassification:
    max_load_machines: int
    i_prime_unique: bool
    has_lambda_k_on_max_machines: bool
    i_prime_carries_all_lambdas: bool
    i_prime_rank1_is_mu1: bool
    i_prime: int | None
    i_double_prime: int | None


def classify_ld(inst: Instance) -> LdClassification:
    """Evaluate the IR1 / I2 shape predicates on the LD schedule.

    ``i_prime`` is the sole makespan machine when there is exactly one.
    ``i_double_prime`` is the lowest other machine whose load after rank
    ``k-1`` is at least that of ``i_prime``.
    """
    sched, t_ld, _ = ld_schedule(inst)
    stats = rank_stats(inst)
    p, k = inst.times, inst.k
    top = [i for i, load in enumerate(sched.loads) if load == t_ld]
    lam_k = stats.lambdas[-1]
    ir1 = all(p[sched.grid[i][k - 1]] == lam_k for i in top)

    unique = len(top) == 1
    i_prime = top[0] if unique else None
    carries = rank1_mu = False
    i_dprime = None
    if unique:
        row = sched.grid[i_prime]
        carries = all(p[row[r - 1]] == stats.lambdas[r - 1] for r in range(2, k + 1))
        rank1_mu = p[row[0]] == stats.mus[0]
        if k >= 2:
            before = sched.partial_loads(k - 1)
            others = [i for i in range(inst.m) if i != i_prime and before[i] >= before[i_prime]]
            i_dprime = others[0] if others else None
    return LdClassification(len(top), unique, ir1, carries, rank1_mu, i_prime, i_dprime)


def check_monotonicity(inst: Instance, r: int, deltas: Sequence[int]) -> bool:
    """Raise the rank-``r`` jobs by ``deltas`` and compare LD profiles from rank ``r`` on.

    ``deltas[i]`` applies to the ``i``-th job of rank ``r`` (largest first).
    Increments must keep every job inside rank ``r``.
    """
    if not 1 <= r <= inst.k:
        raise InvalidInput(f"rank {r} out of range 1..{inst.k}")
    if len(deltas) != inst.m or any(d < 0 for d in deltas):
        raise InvalidInput(f"need {inst.m} nonnegative increments, got {list(deltas)}")
    times = list(inst.times)
    for j, d in zip(inst.rank_jobs(r), deltas):
        times[j] += d
    ceiling = rank_stats(inst).mus[r - 2] if r >= 2 else None
    if ceiling is not None and max(times[j] for j in inst.rank_jobs(r)) > ceiling:
        raise InvalidInput(f"increments push a rank-{r} job above the rank-{r - 1} minimum {ceiling}")
    block = sorted((times[j] for j in inst.rank_jobs(r)), reverse=True)
    times[(r - 1) * inst.m : r * inst.m] = block
    perturbed = Instance(inst.m, tuple(times))

    before = ld_schedule(inst).profiles
    after = ld_schedule(perturbed).profiles
    return all(after[ell].dominates(before[ell]) for ell in range(r - 1, inst.k))


def exhaustive_space(m: int, k: int, p_max: int) -> Iterable[Instance]:
    return enumerate_instances(m, k, p_max)


def random_space(m: int, k: int, p_max: int, trials: int, seed: int) -> Iterable[Instance]:
    """Trial ``i`` is ``random_instance(m, k, p_max, seed + i)``."""
    return (random_instance(m, k, p_max, seed + i) for i in range(trials))


@dataclass
class SearchOutcome:
    evaluated: int = 0
    degenerate: int = 0
    violations: list[Instance] = field(default_factory=list)
    tight: list[Instance] = field(default_factory=list)
    failures: list[tuple[Instance, str]] = field(default_factory=list)
    worst: Fraction | None = None  # largest ratio divided by its bound

    def summary(self) -> str:
        worst = "n/a" if self.worst is None else f"{float(self.worst):.6f}"
        return (
            f"{self.evaluated} evaluated, {self.degenerate} degenerate skipped, "
            f"{len(self.violations)} violations, {len(self.tight)} tight, "
            f"{len(self.failures)} failures, worst ratio/bound {worst}"
        )


def _evaluate(args):
    inst, limits = args
    try:
        return inst, ratio_report(inst, limits), None
    except (ResourceLimit, InvalidInput) as exc:
        return inst, None, str(exc)


def search(space: Iterable[Instance], jobs: int = 1, limits=None) -> SearchOutcome:
    """Run :func:`ratio_report` on every instance of ``space``.

    Results are folded in input order whatever ``jobs`` is, so the outcome
    is the same for serial and parallel runs.
    """
    tasks = ((inst, limits) for inst in space)
    outcome = SearchOutcome()
    if jobs > 1:
        with ProcessPoolExecutor(max_workers=jobs) as pool:
            _fold(outcome, pool.map(_evaluate, tasks, chunksize=64))
    else:
        _fold(outcome, map(_evaluate, tasks))
    return outcome


def _fold(outcome: SearchOutcome, results) -> None:
    for inst, report, error in results:
        if error is not None:
            outcome.failures.append((inst, error))
            continue
        if report.degenerate:
            outcome.degenerate += 1
            continue
        outcome.evaluated += 1
        if not report.meets_bound:
            outcome.violations.append(inst)
        if report.tight:
            outcome.tight.append(inst)
        rel = report.ratio / report.bound
        if outcome.worst is None or rel > outcome.worst:
            outcome.worst = rel
