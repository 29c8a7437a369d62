"""Exit criteria for the package.  Each test prints one PASS/FAIL line.

Run with ``pytest tests/test_acceptance.py -v``; the verdict lines are
written straight to the terminal.
"""

import random
import time

import pytest

from flowspan import (
    box_reduce,
    brute_force_oracle,
    check_monotonicity,
    ld_schedule,
    lower_bound,
    lpt_schedule,
    normalize,
    optimal_flowtime,
    optimal_makespan,
    ratio_report,
    reduce,
    search,
    tight_family,
)
from flowspan.analyze import exhaustive_space
from flowspan.generate import random_instance
from oracles import grid_loads, min_flowtime, pm_cmax_optimum

P1 = normalize(3, [9, 8, 7, 7, 6, 5, 5, 2, 1])


@pytest.fixture
def verdict(capsys):
    start = time.perf_counter()

    def report(name, ok, detail="", budget=None):
        elapsed = time.perf_counter() - start
        in_time = budget is None or elapsed < budget
        line = f"[{'PASS' if ok and in_time else 'FAIL'}] {name}: {detail} ({elapsed:.2f}s"
        line += f" / budget {budget}s)" if budget else ")"
        with capsys.disabled():
            print("\n" + line)
        assert ok, line
        assert in_time, line

    return report


def test_c1_tight_family_exact(verdict):
    details = []
    ok = True
    for m in range(2, 6):
        rep = ratio_report(tight_family(m))
        ok &= rep.t_ld * (4 * m - 1) == rep.t_star * (5 * m - 2)
        details.append(f"m={m}: {rep.t_ld}/{rep.t_star}")
    rep3 = ratio_report(tight_family(3))
    ok &= (rep3.t_ld, rep3.t_star) == (13, 11)
    verdict("C1 tight family ratio == (5m-2)/(4m-1)", ok, ", ".join(details), budget=1)


def test_c2_figures(verdict):
    loads = sorted(ld_schedule(P1).schedule.loads)
    reduced = reduce(P1, 2)
    t_reduced = optimal_makespan(reduced).t_star
    boxed = box_reduce(P1, 2)
    boxed_opt = optimal_makespan(boxed)
    ok = (
        loads == [15, 16, 19]
        and reduced.times == (8, 7, 6, 6, 6, 5, 5, 2, 1)
        and t_reduced == 16
        and boxed.times == (9, 8, 6, 6, 6, 5, 5, 2, 1)
        and boxed_opt.rectangular
        and boxed_opt.t_star == 16
    )
    detail = (
        f"LD loads {loads}, REDUCE {list(reduced.times)} t*={t_reduced}, "
        f"box {list(boxed.times)} t*={boxed_opt.t_star} rect={boxed_opt.rectangular}"
    )
    verdict("C2 worked example figures", ok, detail, budget=1)


def test_c3_oracle_equivalence(verdict):
    rng = random.Random(20150506)
    mismatches = []
    trials = 10_000
    for _ in range(trials):
        m, k = rng.choice((2, 3)), rng.choice((2, 3, 4))
        inst = normalize(m, [rng.randint(0, 9) for _ in range(m * k)])
        if optimal_makespan(inst).t_star != brute_force_oracle(inst):
            mismatches.append(inst)
    verdict(
        "C3 solver == brute-force oracle",
        not mismatches,
        f"{trials} instances, {len(mismatches)} mismatches",
        budget=300,
    )


def test_c4_bound_sweep(verdict):
    spaces = [exhaustive_space(2, k, 4) for k in (1, 2, 3)]
    spaces += [exhaustive_space(3, k, 3) for k in (1, 2)]
    outcomes = [search(space) for space in spaces]

    rng = random.Random(1976)
    randoms = []
    for _ in range(10_000):
        m, k = rng.randint(2, 5), rng.randint(2, 5)
        randoms.append(random_instance(m, k, 9, rng.getrandbits(64)))
    outcomes.append(search(randoms))

    violations = sum(len(o.violations) for o in outcomes)
    failures = sum(len(o.failures) for o in outcomes)
    evaluated = sum(o.evaluated for o in outcomes)
    # weak sanity from list scheduling and the lower bound
    sane = all(
        lower_bound(inst) <= (rep := ratio_report(inst)).t_star and rep.t_ld <= 2 * rep.t_star
        for inst in randoms[:2000]
    )
    verdict(
        "C4 t_LD*(4m-1) <= t*(5m-2) sweep",
        violations == 0 and failures == 0 and sane,
        f"{evaluated} instances evaluated, {violations} violations, {failures} failures",
        budget=600,
    )


def test_c5_profile_monotonicity(verdict):
    rng = random.Random(2013)
    bad = 0
    trials = 10_000
    for _ in range(trials):
        m, k = rng.randint(2, 5), rng.randint(1, 5)
        inst = normalize(m, [rng.randint(0, 9) for _ in range(m * k)])
        r = rng.randint(1, k)
        ceiling = inst.rank(r - 1)[-1] if r >= 2 else inst.rank(1)[0] + 5
        deltas = [rng.randint(0, ceiling - p) for p in inst.rank(r)]
        bad += not check_monotonicity(inst, r, deltas)
    verdict("C5 raising rank-r jobs never lowers later profiles", bad == 0, f"{trials} perturbations, {bad} failures", budget=60)


def test_c6_flowtime_optimality(verdict):
    rng = random.Random(1967)
    bad = 0
    trials = 1_000
    for _ in range(trials):
        m, k = rng.choice((2, 3)), rng.choice((2, 3, 4))
        inst = normalize(m, [rng.randint(0, 9) for _ in range(m * k)])
        got = ld_schedule(inst).schedule.flowtime
        bad += not (got == optimal_flowtime(inst) == min_flowtime(m, inst.times))
    verdict("C6 LD flowtime == exhaustive minimum", bad == 0, f"{trials} instances, {bad} mismatches")


def test_c7_lpt_baseline(verdict):
    rng = random.Random(1969)
    bad = 0
    trials = 1_000
    for _ in range(trials):
        m = rng.choice((2, 3))
        jobs = [rng.randint(0, 9) for _ in range(rng.randint(1, 8))]
        bad += not lpt_schedule(m, jobs) * 3 * m <= pm_cmax_optimum(m, jobs) * (4 * m - 1)
    classic = [3, 3, 2, 2, 2]
    lpt, opt = lpt_schedule(2, classic), pm_cmax_optimum(2, classic)
    equality = (lpt, opt) == (7, 6) and lpt * 3 * 2 == opt * (4 * 2 - 1)
    verdict(
        "C7 LPT within 4/3 - 1/(3m)",
        bad == 0 and equality,
        f"{trials} instances, {bad} violations; classic {lpt}/{opt}",
    )


def test_c8_lower_bound_tight(verdict):
    lb, t_star = lower_bound(P1), optimal_makespan(P1).t_star
    witness = max(grid_loads(P1.times, ((0, 4, 7), (1, 3, 8), (2, 5, 6))))
    verdict(
        "C8 lower bound tight on the worked example",
        lb == t_star == witness == 17,
        f"lower_bound={lb} t*={t_star} witness makespan={witness}",
    )
