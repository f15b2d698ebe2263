"""Arithmetic in the binary extension fields GF(2^m), 1 <= m <= 16.

Field elements are plain ints. Bit i of an element is the coefficient of
x^i in the polynomial basis, so the elements of GF(2^m) are exactly the
ints in [0, 2^m). Addition is xor. Multiplication is carry-less product
followed by reduction modulo an irreducible polynomial of degree m, which
a FieldSpec carries in the same bit encoding (bit m is always set).

REDUCTION_POLYS pins one polynomial per degree: the irreducible one with
the smallest integer encoding. That makes every downstream artifact
reproducible bit for bit. The first few entries:

    m=1  x           = 0b10
    m=2  x^2+x+1     = 0b111
    m=3  x^3+x+1     = 0b1011
    m=4  x^4+x+1     = 0b10011
    m=8  x^8+x^4+x^3+x+1 = 0b100011011

Multiplication, inversion and powers run off exp/log tables built once per
FieldSpec. The table generator is found by search because the smallest
irreducible polynomial is not always primitive, i.e. x itself need not
generate the multiplicative group.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache

# Smallest irreducible polynomial of each degree, by integer encoding.
# Derived by trial division (see is_irreducible); re-derived in tests.
REDUCTION_POLYS: dict[int, int] = {
    1: 0b10,
    2: 0b111,
    3: 0b1011,
    4: 0b10011,
    5: 0b100101,
    6: 0b1000011,
    7: 0b10000011,
    8: 0b100011011,
    9: 0b1000000011,
    10: 0b10000001001,
    11: 0b100000000101,
    12: 0b1000000001001,
    13: 0b10000000011011,
    14: 0b100000000100001,
    15: 0b1000000000000011,
    16: 0b10000000000101011,
}

MAX_M = 16


def _poly_mod(a: int, b: int) -> int:
    """Remainder of polynomial a modulo b over GF(2)."""
    db = b.bit_length()
    while a.bit_length() >= db:
        a ^= b << (a.bit_length() - db)
    return a


def is_irreducible(poly: int) -> bool:
    """True if poly (bit-encoded, degree >= 1) has no nontrivial factor.

    Trial division by every polynomial of degree 1..deg//2; a reducible
    polynomial always has a factor in that range.
    """
    deg = poly.bit_length() - 1
    if deg < 1:
        return False
    for d in range(1, deg // 2 + 1):
        for divisor in range(1 << d, 1 << (d + 1)):
            if _poly_mod(poly, divisor) == 0:
                return False
    return True


@dataclass(frozen=True)
class FieldSpec:
    """GF(2^m) with an explicit reduction polynomial.

    Validates on construction: m in [1, 16], the polynomial has degree
    exactly m and is irreducible. Equal specs are interchangeable; all
    arithmetic helpers take the spec as first argument.
    """

    m: int
    reduction_poly: int

    def __post_init__(self) -> None:
        if not isinstance(self.m, int) or not 1 <= self.m <= MAX_M:
            raise ValueError(f"m must be an int in [1, {MAX_M}], got {self.m!r}")
        if self.reduction_poly >> self.m != 1:
            raise ValueError(
                f"reduction polynomial {self.reduction_poly:#b} does not have degree {self.m}"
            )
        if not is_irreducible(self.reduction_poly):
            raise ValueError(f"reduction polynomial {self.reduction_poly:#b} is reducible")

    @property
    def order(self) -> int:
        """Number of field elements, 2^m."""
        return 1 << self.m


def field_spec(m: int) -> FieldSpec:
    """The standard GF(2^m) spec, using the pinned reduction polynomial."""
    if m not in REDUCTION_POLYS:
        raise ValueError(f"no pinned reduction polynomial for m={m!r} (need 1 <= m <= {MAX_M})")
    return FieldSpec(m, REDUCTION_POLYS[m])


def nonzero_elements(spec: FieldSpec) -> range:
    """The nonzero field elements, ascending."""
    return range(1, spec.order)


def _mul_raw(a: int, b: int, m: int, poly: int) -> int:
    """Shift-and-xor product with interleaved reduction; no tables."""
    out = 0
    while b:
        if b & 1:
            out ^= a
        b >>= 1
        a <<= 1
        if a >> m:
            a ^= poly
    return out


@lru_cache(maxsize=None)
def _tables(spec: FieldSpec) -> tuple[list[int], list[int]]:
    """exp/log tables for spec, built from a searched generator.

    exp has length 2*(q-1) so products of two logs index without a mod.
    """
    q = spec.order
    gen = 1
    for cand in range(2, q):
        v = cand
        steps = 1
        while v != 1:
            v = _mul_raw(v, cand, spec.m, spec.reduction_poly)
            steps += 1
        if steps == q - 1:
            gen = cand
            break
    exp = [0] * (2 * (q - 1))
    log = [0] * q
    v = 1
    for i in range(q - 1):
        exp[i] = v
        log[v] = i
        v = _mul_raw(v, gen, spec.m, spec.reduction_poly)
    for i in range(q - 1, 2 * (q - 1)):
        exp[i] = exp[i - (q - 1)]
    return exp, log


def gf_add(spec: FieldSpec, a: int, b: int) -> int:
    """Sum (= difference) of two field elements."""
    _check(spec, a)
    _check(spec, b)
    return a ^ b


def gf_mul(spec: FieldSpec, a: int, b: int) -> int:
    """Product of two field elements."""
    _check(spec, a)
    _check(spec, b)
    if a == 0 or b == 0:
        return 0
    exp, log = _tables(spec)
    return exp[log[a] + log[b]]


def gf_pow(spec: FieldSpec, a: int, k: int) -> int:
    """a raised to a nonnegative integer power; 0^0 = 1."""
    _check(spec, a)
    if k < 0:
        raise ValueError(f"exponent must be nonnegative, got {k}")
    if a == 0:
        return 1 if k == 0 else 0
    exp, log = _tables(spec)
    return exp[(log[a] * k) % (spec.order - 1)]


def gf_inv(spec: FieldSpec, a: int) -> int:
    """Multiplicative inverse; raises ZeroDivisionError on 0."""
    _check(spec, a)
    if a == 0:
        raise ZeroDivisionError("0 has no multiplicative inverse")
    exp, log = _tables(spec)
    q1 = spec.order - 1
    return exp[(q1 - log[a]) % q1]


def _check(spec: FieldSpec, a: int) -> None:
    if not isinstance(a, int) or not 0 <= a < spec.order:
        raise ValueError(f"{a!r} is not an element of GF(2^{spec.m})")
