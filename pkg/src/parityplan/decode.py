"""Answer parity queries and decode answer vectors back to marked sets.

A marked set is a sorted tuple of 1-based item indices; a syndrome is the
BitVector of per-query parities (bit i answers query i+1). Decoders return
None when no set of size at most d matches the syndrome, which happens
when more than d items are marked or the answers are corrupted.

Two decoders, kept deliberately independent:

decode_brute enumerates candidate sets and memoizes a full syndrome table
per plan. Works on any plan, costs sum_{i<=d} C(n,i) table entries.

decode_algebraic runs on field-built plans only. It lifts the syndrome to
the power sums S_k of the marked elements (odd k come from the plan's
syndrome transform, even k are squares of half-index sums), finds the
shortest linear recurrence generating S_1..S_2d (Berlekamp-Massey), and
reads the marked elements off the roots of the reciprocal connection
polynomial. Cost is polynomial in d and n, no table.
"""

from __future__ import annotations

from functools import lru_cache
from itertools import combinations
from math import comb
from typing import Iterable, Optional

from .construction import QueryPlan
from .f2linalg import BitVector
from .gf2m import FieldSpec, _tables, gf_inv, gf_mul
from .verify import DEFAULT_WORK_CAP, WorkCapExceeded

MarkedSet = tuple[int, ...]


def normalize_marked(items: Iterable[int], n: int) -> MarkedSet:
    """Sorted, validated tuple of 1-based indices; rejects duplicates."""
    out = sorted(items)
    for x in out:
        if not isinstance(x, int) or isinstance(x, bool) or not 1 <= x <= n:
            raise ValueError(f"item index {x!r} out of range 1..{n}")
    for a, b in zip(out, out[1:]):
        if a == b:
            raise ValueError(f"duplicate item index {a}")
    return tuple(out)


def answer_queries(plan: QueryPlan, marked: Iterable[int]) -> BitVector:
    """Parity answer vector for a marked set (any size up to n)."""
    members = normalize_marked(marked, plan.n)
    xbits = 0
    for j in members:
        xbits |= 1 << (j - 1)
    sbits = 0
    for i, row in enumerate(plan.matrix.rows):
        if (row & xbits).bit_count() & 1:
            sbits |= 1 << i
    return BitVector(plan.f, sbits)


@lru_cache(maxsize=8)
def _syndrome_table(plan: QueryPlan, work_cap: int) -> dict[int, MarkedSet]:
    """syndrome bits -> first marked set producing them.

    Enumeration order is by size then lexicographically, so ties resolve
    to the least set of minimum size (ties only occur on non-separating
    plans). Keyed on plan identity, so reloading a plan rebuilds.
    """
    needed = sum(comb(plan.n, i) for i in range(min(plan.d, plan.n) + 1))
    if needed > work_cap:
        raise WorkCapExceeded(
            f"brute decode table needs {needed} subset evaluations (cap {work_cap})",
            required=needed,
        )
    cols = [plan.matrix.column_bits(j) for j in range(plan.n)]
    table: dict[int, MarkedSet] = {0: ()}
    for size in range(1, min(plan.d, plan.n) + 1):
        for combo in combinations(range(plan.n), size):
            s = 0
            for j in combo:
                s ^= cols[j]
            if s not in table:
                table[s] = tuple(j + 1 for j in combo)
    return table


def decode_brute(
    plan: QueryPlan, syndrome: BitVector, work_cap: int = DEFAULT_WORK_CAP
) -> Optional[MarkedSet]:
    """Marked set of size <= d matching the syndrome, or None.

    On a separating plan the match is unique; otherwise the first set in
    size-then-lexicographic order wins.
    """
    if syndrome.length != plan.f:
        raise ValueError(f"syndrome length {syndrome.length} does not match f={plan.f}")
    return _syndrome_table(plan, work_cap).get(syndrome.bits)


def field_syndromes(plan: QueryPlan, syndrome: BitVector) -> list[int]:
    """Power sums [S_1, ..., S_2d] of the marked elements, from answers.

    Odd-index sums come from the syndrome transform; even-index ones are
    S_2k = S_k^2 (squaring distributes over sums in characteristic 2).
    Requires a field-built plan.
    """
    if plan.field is None or plan.syndrome_transform is None or plan.column_elements is None:
        raise ValueError("plan carries no field metadata; algebraic decoding needs a field-built plan")
    if syndrome.length != plan.f:
        raise ValueError(f"syndrome length {syndrome.length} does not match f={plan.f}")
    spec = plan.field
    y = 0
    for i, crow in enumerate(plan.syndrome_transform.rows):
        if (crow & syndrome.bits).bit_count() & 1:
            y |= 1 << i
    mask = spec.order - 1
    sums = [0] * (2 * plan.d + 1)
    for k in range(plan.d):
        sums[2 * k + 1] = (y >> (k * spec.m)) & mask
    for k in range(1, plan.d + 1):
        sums[2 * k] = gf_mul(spec, sums[k], sums[k])
    return sums[1:]


def _locator_polynomial(spec: FieldSpec, sums: list[int]) -> tuple[list[int], int]:
    """Berlekamp-Massey: shortest LFSR generating the sequence.

    Returns (connection polynomial coefficients, ascending; length L).
    The polynomial is 1 + c_1 z + ... + c_L z^L with
    S_i = sum_{j=1..L} c_j S_{i-j} for all i >= L.
    """
    conn = [1]
    prev = [1]
    length = 0
    shift = 1
    prev_disc = 1
    for i, s in enumerate(sums):
        disc = s
        for j in range(1, length + 1):
            if j < len(conn) and conn[j]:
                disc ^= gf_mul(spec, conn[j], sums[i - j])
        if disc == 0:
            shift += 1
            continue
        scale = gf_mul(spec, disc, gf_inv(spec, prev_disc))
        updated = conn + [0] * max(0, len(prev) + shift - len(conn))
        for j, c in enumerate(prev):
            if c:
                updated[j + shift] ^= gf_mul(spec, scale, c)
        if 2 * length <= i:
            prev = conn
            prev_disc = disc
            length = i + 1 - length
            shift = 1
        else:
            shift += 1
        conn = updated
    return conn, length


def decode_algebraic(plan: QueryPlan, syndrome: BitVector) -> Optional[MarkedSet]:
    """Marked set of size <= d matching the syndrome, or None; no table.

    The recurrence length L equals the number of marked items when that
    number is <= d. Decoding fails (None) if L > d, if the locator does
    not split into exactly L roots among the column elements, or if the
    candidate set fails the answer recheck; all three happen only for
    syndromes produced by more than d marked items or corrupted answers.
    """
    sums = field_syndromes(plan, syndrome)
    spec = plan.field
    assert spec is not None and plan.column_elements is not None
    conn, length = _locator_polynomial(spec, sums)
    if length > plan.d:
        return None
    if length == 0:
        return () if syndrome.bits == 0 else None
    coeffs = (conn + [0] * (length + 1 - len(conn)))[: length + 1]
    # Horner over ascending coefficients evaluates the reciprocal
    # polynomial z^L * conn(1/z), whose roots are the marked elements
    # themselves rather than their inverses.
    exp, log = _tables(spec)
    marked: list[int] = []
    for idx, xi in enumerate(plan.column_elements):
        logxi = log[xi]
        acc = 0
        for c in coeffs:
            if acc:
                acc = exp[log[acc] + logxi]
            acc ^= c
        if acc == 0:
            marked.append(idx + 1)
    if len(marked) != length:
        return None
    result = tuple(marked)
    if answer_queries(plan, result).bits != syndrome.bits:
        return None
    return result
