import random

import pytest

from parityplan.gf2m import (
    MAX_M,
    REDUCTION_POLYS,
    FieldSpec,
    field_spec,
    gf_add,
    gf_inv,
    gf_mul,
    gf_pow,
    is_irreducible,
    nonzero_elements,
)


# Independent oracle: polynomial arithmetic on coefficient lists, no bit
# tricks shared with the implementation.

def _coeffs(p):
    return [(p >> i) & 1 for i in range(p.bit_length())]


def _from_coeffs(cs):
    out = 0
    for i, c in enumerate(cs):
        if c & 1:
            out |= 1 << i
    return out


def slow_mul(a, b, poly):
    ca, cb = _coeffs(a), _coeffs(b)
    if not ca or not cb:
        return 0
    prod = [0] * (len(ca) + len(cb) - 1)
    for i, x in enumerate(ca):
        for j, y in enumerate(cb):
            prod[i + j] ^= x & y
    cp = _coeffs(poly)
    deg = len(cp) - 1
    while len(prod) > deg:
        if prod[-1]:
            off = len(prod) - 1 - deg
            for k, c in enumerate(cp):
                prod[off + k] ^= c
        prod.pop()
    return _from_coeffs(prod)


def slow_divides(q, p):
    cp = _coeffs(p)
    cq = _coeffs(q)
    dq = len(cq) - 1
    while len(cp) >= len(cq):
        if cp[-1]:
            off = len(cp) - 1 - dq
            for k, c in enumerate(cq):
                cp[off + k] ^= c
        cp.pop()
    return not any(cp)


def slow_irreducible(p):
    deg = p.bit_length() - 1
    for dd in range(1, deg // 2 + 1):
        for q in range(1 << dd, 1 << (dd + 1)):
            if slow_divides(q, p):
                return False
    return True


def test_reduction_polys_present_for_all_degrees():
    assert sorted(REDUCTION_POLYS) == list(range(1, MAX_M + 1))


def test_reduction_polys_have_right_degree():
    for m, poly in REDUCTION_POLYS.items():
        assert poly.bit_length() == m + 1


def test_reduction_polys_irreducible_by_oracle():
    for poly in REDUCTION_POLYS.values():
        assert slow_irreducible(poly)


def test_reduction_polys_are_smallest():
    # no smaller degree-m polynomial is irreducible
    for m, poly in REDUCTION_POLYS.items():
        for cand in range(1 << m, poly):
            assert not slow_irreducible(cand)


def test_pinned_small_polys():
    assert REDUCTION_POLYS[2] == 0b111
    assert REDUCTION_POLYS[3] == 0b1011
    assert REDUCTION_POLYS[4] == 0b10011


def test_is_irreducible_agrees_with_oracle_through_degree_8():
    for p in range(2, 1 << 9):
        if p.bit_length() < 2:
            continue
        assert is_irreducible(p) == slow_irreducible(p)


def test_field_spec_rejects_bad_m():
    with pytest.raises(ValueError):
        FieldSpec(0, 0b10)
    with pytest.raises(ValueError):
        FieldSpec(17, (1 << 17) | 0b11)
    with pytest.raises(ValueError):
        field_spec(0)
    with pytest.raises(ValueError):
        field_spec(17)


def test_field_spec_rejects_wrong_degree():
    with pytest.raises(ValueError):
        FieldSpec(4, 0b1011)  # degree 3
    with pytest.raises(ValueError):
        FieldSpec(3, 0b10011)  # degree 4


def test_field_spec_rejects_reducible():
    with pytest.raises(ValueError):
        FieldSpec(4, 0b10101)  # (x^2+x+1)^2
    with pytest.raises(ValueError):
        FieldSpec(2, 0b110)  # x^2+x = x(x+1)


def test_field_spec_accepts_nonstandard_irreducible():
    # x^4 + x^3 + 1, irreducible but not the pinned one
    spec = FieldSpec(4, 0b11001)
    assert gf_mul(spec, 2, 2) == 4


def test_add_examples():
    spec = field_spec(3)
    assert gf_add(spec, 0b101, 0b011) == 0b110
    for a in range(8):
        assert gf_add(spec, a, 0) == a
        assert gf_add(spec, a, a) == 0


def test_mul_examples_gf8():
    spec = field_spec(3)
    assert gf_mul(spec, 2, 2) == 4  # x * x = x^2
    assert gf_mul(spec, 4, 2) == 3  # x^3 = x + 1 mod x^3+x+1
    for a in range(8):
        assert gf_mul(spec, a, 1) == a
        assert gf_mul(spec, a, 0) == 0


def test_power_table_gf4():
    spec = field_spec(2)
    w = 2
    assert gf_pow(spec, w, 2) == 3
    assert gf_pow(spec, w, 3) == 1
    assert gf_inv(spec, w) == 3


def test_mul_matches_oracle_exhaustive_small():
    for m in (1, 2, 3, 4):
        spec = field_spec(m)
        for a in range(spec.order):
            for b in range(spec.order):
                assert gf_mul(spec, a, b) == slow_mul(a, b, spec.reduction_poly)


def test_mul_matches_oracle_sampled_large():
    rng = random.Random(20240817)
    for m in (8, 12, 16):
        spec = field_spec(m)
        for _ in range(200):
            a = rng.randrange(spec.order)
            b = rng.randrange(spec.order)
            assert gf_mul(spec, a, b) == slow_mul(a, b, spec.reduction_poly)


def test_field_axioms_exhaustive_small():
    for m in (1, 2, 3):
        spec = field_spec(m)
        q = spec.order
        for a in range(q):
            for b in range(q):
                assert gf_mul(spec, a, b) == gf_mul(spec, b, a)
                for c in range(q):
                    assert gf_mul(spec, gf_mul(spec, a, b), c) == gf_mul(spec, a, gf_mul(spec, b, c))
                    assert gf_mul(spec, a, b ^ c) == gf_mul(spec, a, b) ^ gf_mul(spec, a, c)


def test_field_axioms_gf16():
    spec = field_spec(4)
    for a in range(16):
        for b in range(16):
            assert gf_mul(spec, a, b) == gf_mul(spec, b, a)
            assert gf_mul(spec, gf_mul(spec, a, b), a) == gf_mul(spec, a, gf_mul(spec, b, a))
            assert gf_mul(spec, a, b ^ 7) == gf_mul(spec, a, b) ^ gf_mul(spec, a, 7)


def test_frobenius_and_fermat():
    for m in (1, 2, 3, 4):
        spec = field_spec(m)
        q = spec.order
        for a in range(q):
            for b in range(q):
                assert gf_pow(spec, a ^ b, 2) == gf_pow(spec, a, 2) ^ gf_pow(spec, b, 2)
        for a in range(q):
            assert gf_pow(spec, a, q) == a
        for a in nonzero_elements(spec):
            assert gf_pow(spec, a, q - 1) == 1


def test_inverses():
    for m in (1, 2, 3, 4, 8):
        spec = field_spec(m)
        for a in nonzero_elements(spec):
            inv = gf_inv(spec, a)
            assert gf_mul(spec, a, inv) == 1
    with pytest.raises(ZeroDivisionError):
        gf_inv(field_spec(4), 0)


def test_pow_edge_cases():
    spec = field_spec(3)
    assert gf_pow(spec, 0, 0) == 1
    assert gf_pow(spec, 0, 5) == 0
    assert gf_pow(spec, 5, 0) == 1
    with pytest.raises(ValueError):
        gf_pow(spec, 3, -1)


def test_pow_matches_repeated_mul():
    spec = field_spec(4)
    for a in range(16):
        acc = 1
        for k in range(1, 20):
            acc = gf_mul(spec, acc, a)
            assert gf_pow(spec, a, k) == acc


def test_element_range_checked():
    spec = field_spec(2)
    with pytest.raises(ValueError):
        gf_mul(spec, 4, 1)
    with pytest.raises(ValueError):
        gf_add(spec, 1, -1)
    with pytest.raises(ValueError):
        gf_pow(spec, 9, 2)
