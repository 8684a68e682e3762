"""Parsing, printing, derivatives, and exact evaluation."""

from __future__ import annotations

import cmath
from fractions import Fraction

import pytest
from hypothesis import given, settings, strategies as st

from mixedlip.poly import (
    GaussianRational,
    MixedPolynomial,
    PolyError,
    conj_swap,
    evaluate,
    monomial,
    parse,
    radial_degree,
    rescale,
    swap_uv,
    to_string,
    weighted_min_degree,
    wirtinger,
)

from conftest import EX_MAIN


def test_parse_support_fixture():
    f = parse(EX_MAIN)
    assert len(f.monomials) == 5
    assert f.support() == frozenset({(8, 0), (2, 3), (2, 6), (1, 5), (0, 8)})


def test_parse_rejects_degenerate_input():
    with pytest.raises(PolyError):
        parse("")
    with pytest.raises(PolyError):
        parse("u - u")
    with pytest.raises(PolyError):
        parse("1 + u")  # constant term: f(0) != 0
    with pytest.raises(PolyError):
        parse("u +")


def test_parse_rational_and_complex_coefficients():
    f = parse("(1/2 + 3i) u ~v^2 - v")
    m = next(m for m in f.monomials if m.nu == (1, 0))
    assert m.coeff == GaussianRational(Fraction(1, 2), Fraction(3))
    assert m.mu == (0, 2)


def test_wirtinger_basics():
    f = parse("u^8")
    assert wirtinger(f, "~v").is_zero()
    assert wirtinger(f, "u") == parse("8 u^7")
    g = parse("u^2 ~v^3")
    assert wirtinger(g, "~v") == parse("3 u^2 ~v^2")


def test_semiholomorphic_flags():
    assert parse("u^2 + v^3").is_holomorphic()
    assert parse("u^2 + v ~v").is_u_semiholomorphic()
    assert not parse("u ~u").is_u_semiholomorphic()
    assert parse("~u^2 + v ~v").is_ubar_semiholomorphic()
    assert parse("u ~u + v^2").is_v_semiholomorphic()


def test_weighted_degrees():
    f = parse(EX_MAIN)
    assert weighted_min_degree(f, (2, 1)) == 7
    assert weighted_min_degree(f, (1, 2)) == 8
    assert radial_degree((2, 1), (1, 5)) == 7


def test_rescale_principal_terms():
    # u-side rescale of u^8 + v^3 u^2 under (1,2): both terms principal
    f = parse("u^8 + v^3 u^2")
    s = rescale(f, (1, 2), "u-side")
    gammas = {t.gamma for t in s.principal_terms()}
    assert gammas == {0}
    assert len(s.principal_terms()) == 2


# --- randomized suites ----------------------------------------------------

coeffs = st.tuples(
    st.integers(-9, 9), st.integers(-9, 9)
).filter(lambda c: c != (0, 0))
exps = st.tuples(
    st.integers(0, 6), st.integers(0, 6), st.integers(0, 6), st.integers(0, 6)
).filter(lambda e: sum(e) > 0)


@st.composite
def polys(draw, max_terms=6):
    n = draw(st.integers(1, max_terms))
    f = MixedPolynomial.from_terms([])
    for _ in range(n):
        (re, im) = draw(coeffs)
        n1, m1, n2, m2 = draw(exps)
        f = f + monomial(GaussianRational(Fraction(re), Fraction(im)), n1, m1, n2, m2)
    if f.is_zero():
        f = f + monomial(1, 1, 0, 0, 0)
    return f


@settings(max_examples=250, derandomize=True, deadline=None)
@given(polys())
def test_roundtrip_parse_to_string(f):
    assert parse(to_string(f)) == f


@settings(max_examples=250, derandomize=True, deadline=None)
@given(polys(), st.integers(0, 7), st.integers(0, 7))
def test_evaluate_matches_term_sum(f, ju, jv):
    u = cmath.exp(2j * cmath.pi * ju / 8) * 0.7
    v = cmath.exp(2j * cmath.pi * jv / 8) * 1.3
    direct = sum(
        complex(m.coeff.re + 1j * m.coeff.im)
        * u ** m.nu[0]
        * u.conjugate() ** m.mu[0]
        * v ** m.nu[1]
        * v.conjugate() ** m.mu[1]
        for m in f.monomials
    )
    assert abs(evaluate(f, u, v) - direct) < 1e-8 * (1 + abs(direct))


@settings(max_examples=250, derandomize=True, deadline=None)
@given(polys())
def test_conj_swap_involution_and_values(f):
    assert conj_swap(conj_swap(f)) == f
    u, v = 0.6 + 0.3j, -0.4 + 0.9j
    assert abs(
        evaluate(conj_swap(f), u, v) - evaluate(f, u, v).conjugate()
    ) < 1e-9


@settings(max_examples=250, derandomize=True, deadline=None)
@given(polys())
def test_swap_uv_involution(f):
    assert swap_uv(swap_uv(f)) == f
    u, v = 0.8 - 0.2j, 0.1 + 1.1j
    assert abs(evaluate(swap_uv(f), u, v) - evaluate(f, v, u)) < 1e-9
