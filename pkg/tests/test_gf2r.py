import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from kmoments.gf2r import (
    build_field,
    irreducible_polys,
    is_irreducible,
    parse_poly,
    poly_str,
    smallest_irreducible,
)

import oracles


# -- modulus selection ------------------------------------------------------


@pytest.mark.parametrize("r", range(1, 9))
def test_canonical_modulus_matches_scan(r):
    assert smallest_irreducible(r) == oracles.irreducible_by_scan(r)


def test_canonical_modulus_r3(ctx3):
    assert ctx3.modulus == 0b1011  # x^3 + x + 1


def test_reducible_modulus_rejected():
    with pytest.raises(ValueError, match="reducible"):
        build_field(3, modulus=0b1100)  # x^3 + x^2 = x^2 (x + 1)


def test_wrong_degree_modulus_rejected():
    with pytest.raises(ValueError, match="degree"):
        build_field(3, modulus=0b111)


def test_degree_out_of_range_rejected():
    with pytest.raises(ValueError):
        build_field(0)
    with pytest.raises(ValueError):
        build_field(17)


def test_any_irreducible_modulus_accepted():
    for m in irreducible_polys(4):
        ctx = build_field(4, modulus=m)
        assert ctx.modulus == m


# -- multiplication and inversion --------------------------------------------


def test_mul_examples(ctx3):
    assert ctx3.mul(2, 2) == 4  # x * x, no reduction
    assert ctx3.mul(4, 2) == 3  # x^3 reduces to x + 1
    for x in ctx3.elements():
        assert ctx3.mul(x, 1) == x


@pytest.mark.parametrize("r", [2, 3, 4])
def test_mul_agrees_with_schoolbook(r):
    ctx = build_field(r)
    for x in ctx.elements():
        for y in ctx.elements():
            assert ctx.mul(x, y) == oracles.field_mul(x, y, ctx.modulus)


def test_inv_examples(ctx3):
    assert ctx3.inv(1) == 1
    assert ctx3.inv(2) == oracles.naive_inv(2, ctx3.modulus, 3) == 5
    assert ctx3.inv(4) == oracles.naive_inv(4, ctx3.modulus, 3) == 7


@pytest.mark.parametrize("r", range(1, 7))
def test_inv_roundtrip(r):
    ctx = build_field(r)
    for x in ctx.nonzero():
        assert ctx.mul(x, ctx.inv(x)) == 1
        assert ctx.inv(ctx.inv(x)) == x


def test_inv_zero_rejected(ctx3):
    with pytest.raises(ValueError):
        ctx3.inv(0)


_CTXS = {r: build_field(r) for r in (5, 6, 8)}


@settings(max_examples=200, deadline=None)
@given(r=st.sampled_from(sorted(_CTXS)), x=st.integers(0), y=st.integers(0), z=st.integers(0))
def test_field_axioms_sampled(r, x, y, z):
    ctx = _CTXS[r]
    x, y, z = x % ctx.q, y % ctx.q, z % ctx.q
    assert ctx.mul(x, y) == ctx.mul(y, x)
    assert ctx.mul(ctx.mul(x, y), z) == ctx.mul(x, ctx.mul(y, z))
    assert ctx.mul(x, y ^ z) == ctx.mul(x, y) ^ ctx.mul(x, z)


# -- trace and the additive character ----------------------------------------


@pytest.mark.parametrize("r", range(1, 7))
def test_trace_against_frobenius_sum(r):
    ctx = build_field(r)
    for x in ctx.elements():
        assert ctx.trace(x) == oracles.naive_trace(x, ctx.modulus, r)


def test_trace_examples(ctx3):
    assert ctx3.trace(0) == 0
    assert ctx3.trace(2) == 0
    assert ctx3.trace(7) == 1
    for r in range(1, 9):
        assert build_field(r).trace(1) == r % 2


@pytest.mark.parametrize("r", range(1, 8))
def test_trace_linear_and_frobenius_invariant(r):
    ctx = build_field(r)
    for x in ctx.elements():
        assert ctx.trace(ctx.mul(x, x)) == ctx.trace(x)
    for x in range(0, ctx.q, 3):
        for y in ctx.elements():
            assert ctx.trace(x ^ y) == ctx.trace(x) ^ ctx.trace(y)


@pytest.mark.parametrize("r", range(1, 8))
def test_trace_balanced(r):
    ctx = build_field(r)
    assert sum(ctx.trace_table) == ctx.q // 2


def test_lambda_examples(ctx3):
    assert ctx3.lam(0) == 1
    assert ctx3.lam(7) == -1
    assert ctx3.lam(6) == 1


@pytest.mark.parametrize("r", range(1, 6))
def test_lambda_multiplicative_over_addition(r):
    ctx = build_field(r)
    for x in ctx.elements():
        for y in ctx.elements():
            assert ctx.lam(x ^ y) == ctx.lam(x) * ctx.lam(y)


@pytest.mark.parametrize("r", range(1, 9))
def test_lambda_orthogonality(r):
    ctx = build_field(r)
    assert sum(ctx.lam(x) for x in ctx.elements()) == 0


# -- theta (image of x -> x^2 + x) and the coset element b --------------------


def test_theta_r3(ctx3):
    assert ctx3.theta == (0, 2, 4, 6)
    assert oracles.naive_theta_image(ctx3.modulus, 3) == [0, 2, 4, 6]


@pytest.mark.parametrize("r", range(1, 9))
def test_theta_is_trace_zero_set(r):
    ctx = build_field(r)
    assert len(ctx.theta) == ctx.q // 2
    assert ctx.theta[0] == 0
    assert list(ctx.theta) == sorted(ctx.theta)
    assert set(ctx.theta) == {x for x in ctx.elements() if ctx.trace(x) == 0}


@pytest.mark.parametrize("r", range(1, 9))
def test_cosets_partition_field(r):
    ctx = build_field(r)
    shifted = {ctx.b ^ g for g in ctx.theta}
    assert set(ctx.theta) | shifted == set(ctx.elements())
    assert not set(ctx.theta) & shifted


def test_pick_b(ctx3, ctx4):
    assert ctx3.b == 1  # tr(1) = 1 for odd r
    for ctx in (ctx3, ctx4):
        assert ctx.trace(ctx.b) == 1
        assert all(ctx.trace(x) == 0 for x in range(ctx.b))


def test_b_override():
    ctx = build_field(4)
    other = [x for x in ctx.elements() if ctx.trace(x) == 1][-1]
    assert build_field(4, b=other).b == other
    with pytest.raises(ValueError, match="trace 1"):
        build_field(4, b=ctx.theta[1])


# -- presentation -------------------------------------------------------------


def test_poly_str():
    assert poly_str(0b1011) == "x^3+x+1"
    assert poly_str(0b10) == "x"
    assert poly_str(1) == "1"
    assert poly_str(0) == "0"


def test_parse_poly():
    assert parse_poly("x^3+x+1") == 0b1011
    assert parse_poly("0x0B") == 0b1011
    assert parse_poly("0b1011") == 0b1011
    assert parse_poly("11") == 11
    with pytest.raises(ValueError):
        parse_poly("x^3+y")


def test_modulus_presentation(ctx3):
    assert ctx3.modulus_hex == "0xb"
    assert ctx3.modulus_str == "x^3+x+1"


def test_is_irreducible_basics():
    assert is_irreducible(0b111)
    assert not is_irreducible(0b101)  # (x + 1)^2
    assert not is_irreducible(1)


def test_build_deterministic():
    a, b = build_field(5), build_field(5)
    assert a.modulus == b.modulus
    assert a.theta == b.theta
    assert a.exp == b.exp
    assert a.trace_table == b.trace_table
    assert a.b == b.b
