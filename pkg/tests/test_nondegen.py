"""Non-degeneracy certificates: face singularities and torus zero-freeness."""

from __future__ import annotations

from hypothesis import given, settings, strategies as st

from mixedlip.newton import gamma_inn, radial_decompose
from mixedlip.nondegen import (
    face_sing_empty,
    is_nice,
    obstruction_locus,
    torus_zero_free,
)
from mixedlip.poly import evaluate, parse

from conftest import EX_B1_G, EX_CD_F, EX_CD_G, EX_HORN, EX_MAIN


def test_is_nice_fixtures():
    for text in (EX_CD_F, EX_CD_G, EX_MAIN, EX_HORN):
        f = parse(text)
        t = is_nice(f, gamma_inn(f))
        assert t.value == "yes"
        assert t.certified


def test_face_sing_fixtures():
    assert face_sing_empty(parse("u^2 - v^2"), {1, 2}).value == "yes"
    t = face_sing_empty(parse("u^2 - 2 u v + v^2"), {1, 2}).value
    assert t == "no"


def test_torus_zero_free_fixtures():
    assert torus_zero_free(parse("u ~u + v ~v")).value == "yes"
    t = torus_zero_free(parse("u - v"))
    assert t.value == "no"
    u, v = t.witness
    assert abs(evaluate(parse("u - v"), u, v)) < 1e-6


def test_torus_zero_free_merged_frequencies():
    # u~u - v~v vanishes identically on the torus: frequencies cancel
    t = torus_zero_free(parse("u ~u - v ~v"))
    assert t.value == "no"
    u, v = t.witness
    assert abs(evaluate(parse("u ~u - v ~v"), u, v)) < 1e-6


def test_obstruction_locus_fixture():
    srs = radial_decompose(parse(EX_B1_G))
    assert srs
    assert obstruction_locus(srs[0].principal, srs[0].P).locus == "origin"


# --- randomized suite -----------------------------------------------------

coeff = st.tuples(st.integers(-4, 4), st.integers(-4, 4)).filter(
    lambda c: c != (0, 0)
)


@st.composite
def vertex_faces(draw):
    """Random face function with all monomials on one support point."""
    from fractions import Fraction

    from mixedlip.poly import GaussianRational, MixedPolynomial, monomial

    sx = draw(st.integers(1, 5))
    sy = draw(st.integers(0, 5))
    n = draw(st.integers(1, 4))
    f = MixedPolynomial.from_terms([])
    for _ in range(n):
        re, im = draw(coeff)
        n1 = draw(st.integers(0, sx))
        n2 = draw(st.integers(0, sy))
        f = f + monomial(
            GaussianRational(Fraction(re), Fraction(im)),
            n1,
            sx - n1,
            n2,
            sy - n2,
        )
    return f


@settings(max_examples=200, derandomize=True, deadline=None)
@given(vertex_faces())
def test_torus_zero_free_witnesses_check_out(f):
    if f.is_zero():
        return
    t = torus_zero_free(f)
    if t.value == "no" and t.witness is not None:
        u, v = t.witness
        assert abs(abs(u) - 1) < 1e-9 and abs(abs(v) - 1) < 1e-9
        scale = sum(abs(complex(m.coeff)) for m in f.monomials)
        assert abs(evaluate(f, u, v)) < 1e-5 * max(scale, 1.0)
