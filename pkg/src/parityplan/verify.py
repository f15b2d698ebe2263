"""Brute-force certification of plans, counting bounds, random baselines.

Checks here are independent witnesses for properties the construction
promises, so they share no code path with it: the separating check
enumerates answer vectors of all small sets, the kernel check enumerates
low-weight column combinations directly, and the exhaustive power-sum
check walks every subset of the field. Costs are gated by a work cap
measured in nominal subset evaluations; exceeding it raises
WorkCapExceeded rather than silently truncating.
"""

from __future__ import annotations

import math
import random
from dataclasses import dataclass
from itertools import combinations
from typing import Optional

from .construction import QueryPlan, build_query_plan, power_sum_witness
from .f2linalg import BitMatrix
from .gf2m import FieldSpec, nonzero_elements

DEFAULT_WORK_CAP = 10_000_000

MarkedSet = tuple[int, ...]


class WorkCapExceeded(RuntimeError):
    """A check would exceed its work cap; required holds the estimate."""

    def __init__(self, message: str, required: Optional[int] = None):
        super().__init__(message)
        self.required = required


def subset_count(n: int, d: int) -> int:
    """Number of subsets of [n] with size at most d."""
    return sum(math.comb(n, i) for i in range(min(d, n) + 1))


def separating_witness(
    plan: QueryPlan, d: int, work_cap: int = DEFAULT_WORK_CAP
) -> Optional[tuple[MarkedSet, MarkedSet]]:
    """Two distinct sets of size <= d with equal answers, or None.

    Enumerates sets by size then lexicographically and reports the first
    collision, so the witness is deterministic.
    """
    if d < 0:
        raise ValueError(f"d must be nonnegative, got {d}")
    needed = subset_count(plan.n, d)
    if needed > work_cap:
        raise WorkCapExceeded(
            f"separating check needs {needed} subset evaluations (cap {work_cap})",
            required=needed,
        )
    cols = [plan.matrix.column_bits(j) for j in range(plan.n)]
    seen: dict[int, tuple[int, ...]] = {0: ()}
    for size in range(1, min(d, plan.n) + 1):
        for combo in combinations(range(plan.n), size):
            s = 0
            for j in combo:
                s ^= cols[j]
            if s in seen:
                earlier = tuple(j + 1 for j in seen[s])
                return earlier, tuple(j + 1 for j in combo)
            seen[s] = combo
    return None


def verify_separating(plan: QueryPlan, d: int, work_cap: int = DEFAULT_WORK_CAP) -> bool:
    """True iff all sets of size <= d have pairwise distinct answers."""
    return separating_witness(plan, d, work_cap) is None


def min_weight_kernel_violation(
    plan: QueryPlan, w: int, work_cap: int = DEFAULT_WORK_CAP
) -> Optional[MarkedSet]:
    """Lightest set of <= w columns xoring to zero, or None.

    Independent route to the separating property: a plan separates sets
    of size <= d exactly when this returns None for w = 2d. Searches
    weight strata in increasing order; within a stratum the first hit in
    lexicographic order wins. The weight >= 3 strata split each candidate
    into its k-2 smallest indices and a final pair, and the pairs are
    pre-indexed by xor, which cuts the scan from C(n,k) to C(n,k-2)
    dictionary probes.
    """
    if w < 0:
        raise ValueError(f"w must be nonnegative, got {w}")
    n = plan.n
    w = min(w, n)
    needed = sum(math.comb(n, k) for k in range(1, w + 1))
    if needed > work_cap:
        raise WorkCapExceeded(
            f"kernel weight scan needs {needed} subset evaluations (cap {work_cap})",
            required=needed,
        )
    if w == 0:
        return None
    cols = [plan.matrix.column_bits(j) for j in range(n)]
    for j in range(n):
        if cols[j] == 0:
            return (j + 1,)
    if w < 2:
        return None
    pair_xor: dict[int, list[tuple[int, int]]] = {}
    for a in range(n):
        ca = cols[a]
        for b in range(a + 1, n):
            pair_xor.setdefault(ca ^ cols[b], []).append((a, b))
    zero_pairs = pair_xor.get(0)
    if zero_pairs:
        a, b = zero_pairs[0]
        return (a + 1, b + 1)
    for k in range(3, w + 1):
        for prefix in combinations(range(n), k - 2):
            target = 0
            for j in prefix:
                target ^= cols[j]
            hits = pair_xor.get(target)
            if not hits:
                continue
            last = prefix[-1]
            for a, b in hits:
                if a > last:
                    return tuple(j + 1 for j in prefix) + (a + 1, b + 1)
    return None


def verify_odd_power_sums(spec: FieldSpec) -> bool:
    """Exhaustively check every nonempty subset A of nonzero elements has
    a nonzero power sum at some odd exponent <= |A|. Limited to m <= 4
    (2^15 subsets at m=4); larger fields raise ValueError.
    """
    if spec.m > 4:
        raise ValueError(f"exhaustive power-sum check is limited to m <= 4, got m={spec.m}")
    elems = list(nonzero_elements(spec))
    for mask in range(1, 1 << len(elems)):
        subset = [elems[i] for i in range(len(elems)) if (mask >> i) & 1]
        try:
            power_sum_witness(spec, subset)
        except ArithmeticError:
            return False
    return True


def entropy_lower_bound(n: int, d: int) -> int:
    """Least f with 2^f >= number of candidate sets: any scheme needs
    at least this many parity queries to tell all of them apart.
    """
    if not isinstance(n, int) or n < 1:
        raise ValueError(f"n must be a positive int, got {n!r}")
    if not isinstance(d, int) or not 0 <= d <= n:
        raise ValueError(f"d must satisfy 0 <= d <= n, got {d!r}")
    total = subset_count(n, d)
    return (total - 1).bit_length()


def random_plan(n: int, d: int, f: int, seed: int) -> QueryPlan:
    """Uniformly random f x n plan from a seeded Mersenne Twister.

    Row i is the i-th call to random.Random(seed).getrandbits(n), so the
    same (n, f, seed) always gives the same plan. Carries no field
    metadata; only the brute decoder applies.
    """
    if not isinstance(n, int) or n < 1:
        raise ValueError(f"n must be a positive int, got {n!r}")
    if not isinstance(f, int) or f < 1:
        raise ValueError(f"f must be a positive int, got {f!r}")
    if not isinstance(d, int) or d < 0:
        raise ValueError(f"d must be nonnegative, got {d!r}")
    rng = random.Random(seed)
    rows = tuple(rng.getrandbits(n) for _ in range(f))
    matrix = BitMatrix(rows, n)
    queries = tuple(
        tuple(j + 1 for j in range(n) if (row >> j) & 1) for row in rows
    )
    return QueryPlan(n=n, d=d, matrix=matrix, queries=queries)


@dataclass(frozen=True)
class TrialStats:
    """Outcome of the random trials at one query count."""

    f: int
    trials: int
    successes: int

    def as_dict(self) -> dict:
        return {"f": self.f, "trials": self.trials, "successes": self.successes}


@dataclass(frozen=True)
class BaselineResult:
    """Result of baseline_search: first f where a random plan separates."""

    n: int
    d: int
    seed: int
    trials_per_f: int
    start_f: int
    f_found: int
    winning_seed: int
    per_f: tuple[TrialStats, ...]

    def as_dict(self) -> dict:
        return {
            "n": self.n,
            "d": self.d,
            "seed": self.seed,
            "trials_per_f": self.trials_per_f,
            "start_f": self.start_f,
            "f_found": self.f_found,
            "winning_seed": self.winning_seed,
            "per_f": [t.as_dict() for t in self.per_f],
        }


def baseline_search(
    n: int,
    d: int,
    seed: int,
    trials_per_f: int,
    max_f: int | None = None,
    work_cap: int = DEFAULT_WORK_CAP,
) -> BaselineResult:
    """Scan f upward from the counting bound until a random plan separates.

    At each f, up to trials_per_f random plans are checked; the first
    separating one stops the search. Trial seeds are derived
    arithmetically from (seed, f, trial index), so results are
    reproducible across runs and platforms; trials_per_f must stay below
    2^16 for the derivation to be collision-free. Raises WorkCapExceeded
    if no plan is found by max_f (default: 4*d*ceil(log2 n), a level
    where random plans succeed with overwhelming probability).
    """
    if not isinstance(seed, int):
        raise ValueError(f"seed must be an int, got {seed!r}")
    if not isinstance(trials_per_f, int) or not 1 <= trials_per_f < (1 << 16):
        raise ValueError(f"trials_per_f must be in [1, 65535], got {trials_per_f!r}")
    start = max(1, entropy_lower_bound(n, d))
    if max_f is None:
        max_f = max(start, 4 * d * max(1, math.ceil(math.log2(n))) if n > 1 else start)
    if max_f < start:
        raise ValueError(f"max_f={max_f} is below the counting bound {start}")
    stats: list[TrialStats] = []
    for f in range(start, max_f + 1):
        trials_used = 0
        winner = None
        for t in range(trials_per_f):
            trial_seed = seed * (1 << 32) + (f << 16) + t
            plan = random_plan(n, d, f, trial_seed)
            trials_used += 1
            if verify_separating(plan, d, work_cap):
                winner = trial_seed
                break
        stats.append(TrialStats(f=f, trials=trials_used, successes=1 if winner is not None else 0))
        if winner is not None:
            return BaselineResult(
                n=n,
                d=d,
                seed=seed,
                trials_per_f=trials_per_f,
                start_f=start,
                f_found=f,
                winning_seed=winner,
                per_f=tuple(stats),
            )
    raise WorkCapExceeded(
        f"no separating random plan found for f up to {max_f} "
        f"({trials_per_f} trials per f, seed {seed})"
    )


@dataclass(frozen=True)
class BoundsReport:
    """Counting lower bound vs constructed query count for one (n, d)."""

    n: int
    d: int
    lower: int
    constructed: int
    gap: int

    def as_dict(self) -> dict:
        return {
            "n": self.n,
            "d": self.d,
            "lower": self.lower,
            "constructed": self.constructed,
            "gap": self.gap,
        }


def bounds_report(n: int, d: int, size_cap: int | None = None) -> BoundsReport:
    """Lower bound, constructed f and their gap. d=0 needs no queries."""
    lower = entropy_lower_bound(n, d)
    if d == 0:
        constructed = 0
    elif size_cap is None:
        constructed = build_query_plan(n, d).f
    else:
        constructed = build_query_plan(n, d, size_cap=size_cap).f
    return BoundsReport(n=n, d=d, lower=lower, constructed=constructed, gap=constructed - lower)
