"""Build parity query plans that identify up to d marked items among n.

A plan is a set of f subsets (queries) of {1..n}. Asking "how many marked
items does this subset contain, mod 2" for each query must pin down any
marked set of size at most d, i.e. distinct sets of size <= d must give
distinct answer vectors. Equivalently the n columns of the f x n query
matrix, viewed over GF(2), have the property that no 2d or fewer of them
xor to zero.

The construction is BCH-flavored. Work in GF(2^m) with n < 2^m and assign
item j the nonzero field element j. Its column is the stack of coordinate
blocks of j^1, j^3, ..., j^(2d-1), giving d*m rows. Any xor of at most 2d
distinct columns that vanishes would be a set A of nonzero elements,
0 < |A| <= 2d, whose odd power sums through exponent 2d-1 are all zero;
even-exponent sums then vanish too (squaring is linear in characteristic
2), and a standard Newton-identity argument rules that out for a nonempty
A of that size. Row reduction then drops dependent rows, so the final f is
the rank, at most d*m and often smaller.

Plans serialize to a canonical JSON document (sorted keys, two-space
indent, trailing newline) so identical parameters always produce identical
bytes.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from typing import Iterable, Sequence

from .f2linalg import BitMatrix, BitVector, complement_basis, kernel_basis, row_reduce
from .gf2m import MAX_M, FieldSpec, field_spec, gf_pow, nonzero_elements

DEFAULT_SIZE_CAP = 10_000_000


@dataclass(frozen=True, eq=False)
class QueryPlan:
    """An f-query parity plan for up to d marked items among n.

    matrix is f x n over GF(2); queries lists each row's support with
    1-based item indices. Field-built plans carry the field, the element
    assigned to each column, and syndrome_transform: the d*m x f matrix
    that lifts an answer vector back to the stacked power sums of the
    marked elements (used by the algebraic decoder). Random plans leave
    those three as None.

    Identity semantics (eq=False): plans hash by object identity, which
    lets decoders memoize per-plan tables.
    """

    n: int
    d: int
    matrix: BitMatrix
    queries: tuple[tuple[int, ...], ...]
    field: FieldSpec | None = None
    column_elements: tuple[int, ...] | None = None
    syndrome_transform: BitMatrix | None = None

    @property
    def f(self) -> int:
        """Number of queries."""
        return self.matrix.num_rows

    @property
    def in_guaranteed_range(self) -> bool | None:
        """True when d*m <= n, the regime where f <= d*m is worthwhile.

        Plans with n < d*m are still valid (and still verify) but n
        singleton queries would be cheaper. None for random plans.
        """
        if self.field is None:
            return None
        return self.d * self.field.m <= self.n


def power_sum_witness(spec: FieldSpec, elements: Iterable[int]) -> int:
    """Least odd k <= |A| with a nonzero power sum sum_{x in A} x^k.

    A is the set of distinct elements given. Raises ValueError if A is
    empty or {0}; raises ArithmeticError if no odd k <= |A| works, which
    a correct field implementation never triggers.
    """
    elems = set(elements)
    for x in elems:
        if not isinstance(x, int) or not 0 <= x < spec.order:
            raise ValueError(f"{x!r} is not an element of GF(2^{spec.m})")
    if not elems or elems == {0}:
        raise ValueError("need at least one nonzero element")
    for k in range(1, len(elems) + 1, 2):
        total = 0
        for x in elems:
            total ^= gf_pow(spec, x, k)
        if total:
            return k
    raise ArithmeticError(f"all odd power sums through {len(elems)} vanish on {sorted(elems)}")


def moment_vector(spec: FieldSpec, xi: int, d: int) -> BitVector:
    """Stacked coordinates of xi^1, xi^3, ..., xi^(2d-1), length d*m.

    Block k (bits k*m .. (k+1)*m - 1) holds xi^(2k+1).
    """
    if d < 1:
        raise ValueError(f"d must be at least 1, got {d}")
    bits = 0
    for k in range(d):
        bits |= gf_pow(spec, xi, 2 * k + 1) << (k * spec.m)
    return BitVector(d * spec.m, bits)


def moment_family(spec: FieldSpec, d: int) -> list[BitVector]:
    """Moment vectors of all 2^m - 1 nonzero elements, in element order.

    Any xor of at most d distinct members is distinct from any other such
    xor; tests certify this exhaustively for small m.
    """
    return [moment_vector(spec, xi, d) for xi in nonzero_elements(spec)]


def extend_to_generating(spec: FieldSpec, d: int, family: Sequence[BitVector] | None = None) -> list[BitVector]:
    """The moment family plus standard basis vectors spanning the rest.

    The appended unit vectors are complement_basis of the family's span,
    so the returned list generates all of GF(2)^(d*m) and keeps the
    distinct-small-sums property of the family itself.
    """
    if family is None:
        family = moment_family(spec, d)
    fam = list(family)
    dim = d * spec.m
    return fam + complement_basis(fam, dim)


def build_query_plan(
    n: int,
    d: int,
    m: int | None = None,
    size_cap: int = DEFAULT_SIZE_CAP,
) -> QueryPlan:
    """Construct a plan with f <= d*m queries, m minimal with n < 2^m.

    m can be overridden upward (larger field, same construction); it can
    never be below bit_length(n) since columns must be distinct nonzero
    field elements. size_cap bounds d*m*n, the bit size of the moment
    matrix before reduction.
    """
    if not isinstance(n, int) or n < 1:
        raise ValueError(f"n must be a positive int, got {n!r}")
    if not isinstance(d, int) or d < 1:
        raise ValueError(f"d must be a positive int, got {d!r}")
    m_min = n.bit_length()
    if m is None:
        m = m_min
    elif not isinstance(m, int) or m < m_min:
        raise ValueError(f"m={m!r} too small: need n < 2^m for n={n}")
    if m > MAX_M:
        raise ValueError(f"m={m} exceeds the supported maximum {MAX_M}")
    if d * m * n > size_cap:
        raise ValueError(f"moment matrix size d*m*n = {d * m * n} exceeds size_cap {size_cap}")
    spec = field_spec(m)
    dm = d * m

    column_elements = tuple(range(1, n + 1))
    full = [0] * dm
    for j, xi in enumerate(column_elements):
        mv = moment_vector(spec, xi, d).bits
        for r in range(dm):
            if (mv >> r) & 1:
                full[r] |= 1 << j

    red, rank, pivots = row_reduce(BitMatrix(tuple(full), n))
    rows = red.rows[:rank]
    matrix = BitMatrix(rows, n)
    queries = tuple(
        tuple(j + 1 for j in range(n) if (row >> j) & 1) for row in rows
    )
    # Row i of the original moment matrix equals the xor of the reduced
    # rows marked by its values at the pivot columns; that reconstruction
    # matrix is exactly what lifts answer vectors to power sums.
    transform_rows = []
    for r in range(dm):
        crow = 0
        for j, p in enumerate(pivots):
            crow |= ((full[r] >> p) & 1) << j
        transform_rows.append(crow)
    transform = BitMatrix(tuple(transform_rows), rank)

    return QueryPlan(
        n=n,
        d=d,
        matrix=matrix,
        queries=queries,
        field=spec,
        column_elements=column_elements,
        syndrome_transform=transform,
    )


def plan_kernel(plan: QueryPlan) -> list[BitVector]:
    """Basis of the kernel of the plan's query matrix (dimension n - f).

    For a valid plan no nonzero kernel vector has weight <= 2d; the
    verifier checks that directly.
    """
    return kernel_basis(plan.matrix)


def plan_to_dict(plan: QueryPlan) -> dict:
    """Plain-JSON form of a plan."""
    has_field = plan.field is not None
    return {
        "n": plan.n,
        "d": plan.d,
        "m": plan.field.m if has_field else None,
        "poly": plan.field.reduction_poly if has_field else None,
        "column_elements": list(plan.column_elements) if plan.column_elements is not None else None,
        "queries": [list(q) for q in plan.queries],
        "matrix": plan.matrix.row_strings(),
    }


def plan_from_dict(data: dict) -> QueryPlan:
    """Rebuild and validate a plan from its JSON form.

    Checks structural consistency (queries match matrix row supports) and,
    when field metadata is present, that the matrix rows really are a row
    reduction of the moment matrix of the stated column elements. Raises
    ValueError on any inconsistency.
    """
    if not isinstance(data, dict):
        raise ValueError("plan document must be a JSON object")
    for key in ("n", "d", "m", "poly", "column_elements", "queries", "matrix"):
        if key not in data:
            raise ValueError(f"plan document missing key {key!r}")
    n = data["n"]
    d = data["d"]
    if not isinstance(n, int) or isinstance(n, bool) or n < 1:
        raise ValueError(f"n must be a positive int, got {n!r}")
    if not isinstance(d, int) or isinstance(d, bool) or d < 0:
        raise ValueError(f"d must be a nonnegative int, got {d!r}")

    matrix_rows = data["matrix"]
    if (
        not isinstance(matrix_rows, list)
        or not matrix_rows
        or not all(isinstance(s, str) for s in matrix_rows)
    ):
        raise ValueError("matrix must be a nonempty list of 0/1 strings")
    for s in matrix_rows:
        if len(s) != n or not all(c in "01" for c in s):
            raise ValueError(f"matrix row {s!r} is not a 0/1 string of length n={n}")
    matrix = BitMatrix.from_strings(matrix_rows)

    queries_raw = data["queries"]
    if not isinstance(queries_raw, list) or len(queries_raw) != matrix.num_rows:
        raise ValueError("queries must list one index set per matrix row")
    queries: list[tuple[int, ...]] = []
    for i, q in enumerate(queries_raw):
        if not isinstance(q, list) or not all(
            isinstance(x, int) and not isinstance(x, bool) for x in q
        ):
            raise ValueError(f"query {i} must be a list of ints")
        support = tuple(j + 1 for j in range(n) if (matrix.rows[i] >> j) & 1)
        if tuple(q) != support:
            raise ValueError(f"query {i} does not match matrix row support")
        queries.append(support)

    m = data["m"]
    poly = data["poly"]
    elements_raw = data["column_elements"]
    field_parts = (m, poly, elements_raw)
    if any(p is None for p in field_parts) != all(p is None for p in field_parts):
        raise ValueError("m, poly and column_elements must be all present or all null")
    if m is None:
        return QueryPlan(n=n, d=d, matrix=matrix, queries=tuple(queries))

    if not isinstance(m, int) or isinstance(m, bool) or not isinstance(poly, int) or isinstance(poly, bool):
        raise ValueError("m and poly must be ints")
    spec = FieldSpec(m, poly)
    if not isinstance(elements_raw, list) or len(elements_raw) != n:
        raise ValueError(f"column_elements must list {n} field elements")
    for e in elements_raw:
        if not isinstance(e, int) or isinstance(e, bool) or not 1 <= e < spec.order:
            raise ValueError(f"column element {e!r} is not a nonzero element of GF(2^{m})")
    if len(set(elements_raw)) != n:
        raise ValueError("column_elements must be distinct")
    column_elements = tuple(elements_raw)
    if d < 1:
        raise ValueError("field-built plans require d >= 1")
    dm = d * m
    if matrix.num_rows > dm:
        raise ValueError(f"f={matrix.num_rows} exceeds d*m={dm}")

    full = [0] * dm
    for j, xi in enumerate(column_elements):
        mv = moment_vector(spec, xi, d).bits
        for r in range(dm):
            if (mv >> r) & 1:
                full[r] |= 1 << j
    pivots = []
    for row in matrix.rows:
        if row == 0:
            raise ValueError("field-built plans cannot contain zero query rows")
        pivots.append((row & -row).bit_length() - 1)
    transform_rows = []
    for r in range(dm):
        crow = 0
        acc = 0
        for j, p in enumerate(pivots):
            if (full[r] >> p) & 1:
                crow |= 1 << j
                acc ^= matrix.rows[j]
        if acc != full[r]:
            raise ValueError("matrix is not consistent with the stated column elements")
        transform_rows.append(crow)
    transform = BitMatrix(tuple(transform_rows), matrix.num_rows)

    return QueryPlan(
        n=n,
        d=d,
        matrix=matrix,
        queries=tuple(queries),
        field=spec,
        column_elements=column_elements,
        syndrome_transform=transform,
    )


def dumps_plan(plan: QueryPlan) -> str:
    """Canonical JSON text: sorted keys, 2-space indent, trailing newline."""
    return json.dumps(plan_to_dict(plan), sort_keys=True, indent=2) + "\n"


def loads_plan(text: str) -> QueryPlan:
    try:
        data = json.loads(text)
    except json.JSONDecodeError as exc:
        raise ValueError(f"plan document is not valid JSON: {exc}") from exc
    return plan_from_dict(data)


def save_plan(plan: QueryPlan, path: str) -> None:
    with open(path, "w", encoding="utf-8") as fh:
        fh.write(dumps_plan(plan))


def load_plan(path: str) -> QueryPlan:
    with open(path, "r", encoding="utf-8") as fh:
        return loads_plan(fh.read())
