"""Acceptance gate: one test per criterion, each printing PASS or FAIL.

Run with `pytest tests/test_acceptance.py -v -s` to see the per-criterion
lines as they happen; without -s pytest shows them for failing tests.
"""

import math
import random
import time
from itertools import combinations

import pytest

from parityplan.cli import main
from parityplan.construction import build_query_plan, extend_to_generating
from parityplan.decode import answer_queries, decode_algebraic, decode_brute
from parityplan.gf2m import field_spec
from parityplan.verify import (
    WorkCapExceeded,
    baseline_search,
    entropy_lower_bound,
    min_weight_kernel_violation,
    random_plan,
    verify_odd_power_sums,
    verify_separating,
)


def _report(num: int, ok: bool, detail: str = "") -> None:
    status = "PASS" if ok else "FAIL"
    suffix = f" ({detail})" if detail else ""
    print(f"criterion {num}: {status}{suffix}")


def _grid_cells():
    """(d, m, n) with d in 1..3, m in 2..6, n from the three grid points,
    restricted to d*m <= n <= 2^m - 1 (the construction's hypothesis)."""
    cells = []
    for d in (1, 2, 3):
        for m in (2, 3, 4, 5, 6):
            dm = d * m
            top = (1 << m) - 1
            for n in sorted({dm, (dm + (1 << m)) // 2, top}):
                if dm <= n <= top:
                    cells.append((d, m, n))
    return cells


@pytest.fixture(scope="module")
def grid_plans():
    return {(d, m, n): build_query_plan(n, d, m=m) for d, m, n in _grid_cells()}


@pytest.fixture(scope="module")
def plan_63_3():
    return build_query_plan(63, 3)


def test_criterion_1_constructed_plans_separate(grid_plans):
    t0 = time.perf_counter()
    failures = []
    for (d, m, n), plan in grid_plans.items():
        if plan.f > d * m:
            failures.append((d, m, n, "f above d*m"))
        if not verify_separating(plan, d):
            failures.append((d, m, n, "not separating"))
    elapsed = time.perf_counter() - t0
    ok = not failures
    _report(1, ok, f"{len(grid_plans)} cells, {elapsed:.1f}s" if ok else str(failures))
    assert ok, failures


def test_criterion_2_gap_at_most_d_plus_1(grid_plans):
    failures = []
    for (d, m, n), plan in grid_plans.items():
        gap = plan.f - entropy_lower_bound(n, d)
        if not 0 <= gap <= d + 1:
            failures.append((d, m, n, gap))
    zero_gap_failures = []
    for n in (7, 15, 31, 63):
        plan = build_query_plan(n, 1)
        gap = plan.f - entropy_lower_bound(n, 1)
        if gap != 0:
            zero_gap_failures.append((n, gap))
    ok = not failures and not zero_gap_failures
    _report(2, ok, "gap <= d+1 on grid; gap = 0 at powers" if ok else str(failures + zero_gap_failures))
    assert ok, (failures, zero_gap_failures)


def test_criterion_3_odd_power_sums_exhaustive():
    t0 = time.perf_counter()
    results = {m: verify_odd_power_sums(field_spec(m)) for m in (1, 2, 3, 4)}
    elapsed = time.perf_counter() - t0
    ok = all(results.values())
    _report(3, ok, f"m=1..4 exhaustive, {elapsed:.1f}s" if ok else str(results))
    assert ok, results


def test_criterion_4_unique_small_sums():
    failures = []
    for d in (1, 2):
        for m in (2, 3, 4):
            spec = field_spec(m)
            ext = extend_to_generating(spec, d)
            seen = {}
            for size in range(d + 1):
                for combo in combinations(range(len(ext)), size):
                    acc = 0
                    for i in combo:
                        acc ^= ext[i].bits
                    if acc in seen:
                        failures.append((d, m, seen[acc], combo))
                    else:
                        seen[acc] = combo
    ok = not failures
    _report(4, ok, "sums of <= d members all distinct" if ok else str(failures[:3]))
    assert ok, failures[:3]


def test_criterion_5_kernel_certificates_and_route_agreement(grid_plans):
    failures = []
    for (d, m, n), plan in grid_plans.items():
        # (63,3) at weight 6 needs ~7.6e7 nominal evaluations
        witness = min_weight_kernel_violation(plan, 2 * d, work_cap=10**8)
        if witness is not None:
            failures.append((d, m, n, witness))
    disagreements = []
    for i in range(200):
        n = 6 + (i % 10)
        f = 2 + (i % 7)
        d = 1 + (i % 3)
        plan = random_plan(n, d, f, seed=1000 + i)
        separating = verify_separating(plan, d)
        no_violation = min_weight_kernel_violation(plan, 2 * d) is None
        if separating != no_violation:
            disagreements.append((n, d, f, i))
    ok = not failures and not disagreements
    _report(
        5,
        ok,
        "no small kernel vectors; 200 random plans agree across routes"
        if ok
        else str((failures, disagreements)),
    )
    assert ok, (failures, disagreements)


def test_criterion_6_decoder_roundtrips(plan_63_3):
    plan = plan_63_3
    brute_failures = 0
    for size in range(4):
        for x in combinations(range(1, 64), size):
            if decode_brute(plan, answer_queries(plan, x)) != x:
                brute_failures += 1
    rng = random.Random(63)
    agree_failures = 0
    for _ in range(1000):
        x = tuple(sorted(rng.sample(range(1, 64), rng.randint(0, 3))))
        s = answer_queries(plan, x)
        if decode_algebraic(plan, s) != decode_brute(plan, s):
            agree_failures += 1

    big = build_query_plan(1023, 5)
    rng = random.Random(1023)
    cases = [tuple(sorted(rng.sample(range(1, 1024), rng.randint(0, 5)))) for _ in range(1000)]
    syndromes = [answer_queries(big, x) for x in cases]
    t0 = time.perf_counter()
    big_failures = sum(1 for x, s in zip(cases, syndromes) if decode_algebraic(big, s) != x)
    elapsed = time.perf_counter() - t0

    ok = brute_failures == 0 and agree_failures == 0 and big_failures == 0 and elapsed < 10.0
    _report(
        6,
        ok,
        f"exhaustive brute + 1000 agreements; 1000 large decodes in {elapsed:.2f}s"
        if ok
        else f"brute={brute_failures} agree={agree_failures} big={big_failures} time={elapsed:.2f}s",
    )
    assert ok, (brute_failures, agree_failures, big_failures, elapsed)


def test_criterion_7_random_baseline_within_cap():
    failures = []
    lines = []
    for n, d in ((15, 1), (15, 2), (31, 2)):
        cap = 4 * d * math.ceil(math.log2(n))
        result = None
        for seed in (1, 2):  # second seed permitted: statistical criterion
            try:
                result = baseline_search(n, d, seed=seed, trials_per_f=50, max_f=cap)
                break
            except WorkCapExceeded:
                continue
        if result is None or result.f_found > cap:
            failures.append((n, d, cap))
            continue
        fractions = " ".join(f"f={t.f}:{t.successes}/{t.trials}" for t in result.per_f)
        lines.append(f"  (n={n}, d={d}) cap={cap} found f={result.f_found}: {fractions}")
    ok = not failures
    _report(7, ok, "see per-f fractions below" if ok else str(failures))
    for line in lines:
        print(line)
    assert ok, failures


def test_criterion_8_cli_byte_determinism(tmp_path):
    def paths(tag):
        return str(tmp_path / f"{tag}_1.json"), str(tmp_path / f"{tag}_2.json")

    plan1, plan2 = paths("plan")
    assert main(["construct", "--n", "31", "--d", "2", "--out", plan1]) == 0
    assert main(["construct", "--n", "31", "--d", "2", "--out", plan2]) == 0

    sim1, sim2 = paths("sim")
    for out in (sim1, sim2):
        assert main(["simulate", "--plan", plan1, "--seed", "9", "--decoder", "algebraic", "--out", out]) == 0

    ans1, ans2 = paths("ans")
    for out in (ans1, ans2):
        assert main(["answer", "--plan", plan1, "--marked", "4,17", "--out", out]) == 0

    dec1, dec2 = paths("dec")
    with open(ans1) as fh:
        import json

        syndrome = json.load(fh)["syndrome"]
    for out in (dec1, dec2):
        assert main(["decode", "--plan", plan1, "--syndrome", syndrome, "--out", out]) == 0

    bnd1, bnd2 = paths("bounds")
    for out in (bnd1, bnd2):
        assert main(["bounds", "--n", "63", "--d", "3", "--out", out]) == 0

    base1, base2 = paths("base")
    for out in (base1, base2):
        assert main(["baseline", "--n", "7", "--d", "1", "--seed", "2", "--trials", "30", "--out", out]) == 0

    mismatches = []
    for tag, (a, b) in {
        "construct": (plan1, plan2),
        "simulate": (sim1, sim2),
        "answer": (ans1, ans2),
        "decode": (dec1, dec2),
        "bounds": (bnd1, bnd2),
        "baseline": (base1, base2),
    }.items():
        with open(a, "rb") as fa, open(b, "rb") as fb:
            if fa.read() != fb.read():
                mismatches.append(tag)
    ok = not mismatches
    _report(8, ok, "6 subcommands byte-identical on rerun" if ok else str(mismatches))
    assert ok, mismatches
