"""Boundary diagrams, inner regions, face functions, radial decomposition."""

from __future__ import annotations

from fractions import Fraction

import pytest
from hypothesis import given, settings, strategies as st
from sympy import Point2D, convex_hull
from sympy.geometry.polygon import Polygon

from mixedlip.newton import (
    Weight,
    face_function,
    gamma_inn,
    newton_boundary,
    pareto_minimal,
    radial_decompose,
)
from mixedlip.poly import parse, to_string

from conftest import EX_B1_F, EX_B1_G, EX_B1_H, EX_HORN, EX_MAIN


def _vertices(points):
    return tuple((int(x), int(y)) for x, y in points)


def test_boundary_fixture():
    d = newton_boundary(parse(EX_MAIN).support())
    assert _vertices(d.vertices) == ((8, 0), (2, 3), (1, 5), (0, 8))
    ks = [e.weight.k for e in d.edges]
    assert ks == [Fraction(1, 2), Fraction(2), Fraction(3)]


def test_gamma_inn_fixture():
    g = gamma_inn(parse(EX_MAIN))
    assert _vertices(g.diagram.vertices) == ((8, 0), (2, 3), (0, 7))
    assert [w.as_list() for w in g.p_inn] == [[2, 1], [1, 2]]
    assert g.is_ind
    assert g.status == "certified"


def test_face_function_fixtures():
    f = parse(EX_MAIN)
    p1, d1 = face_function(f, (3, 1))
    assert p1 == parse("u ~v^5 + v^4 ~v^4") and d1 == 8
    p2, d2 = face_function(f, (2, 1))
    assert p2 == parse("u^2 v^3 + u ~v^5") and d2 == 7
    p3, d3 = face_function(f, (1, 2))
    assert p3 == parse("u^8 + u^2 v^3") and d3 == 8


def test_radial_decompose_fixtures():
    srs = radial_decompose(parse(EX_B1_F))
    assert srs and srs[0].k == 3
    assert radial_decompose(parse(EX_B1_G))[0].k == 1
    assert radial_decompose(parse(EX_B1_H))[0].k == 3
    # two-face polynomial: not radial for any single weight
    assert radial_decompose(parse(EX_HORN)) == ()
    # non-isolated zero set on an axis: rejected
    assert radial_decompose(parse("u^8")) == ()


def test_weight_ordering():
    w = Weight(3, 1)
    assert w.k == 3
    assert Weight(1, 2).k == Fraction(1, 2)


# --- randomized suites ----------------------------------------------------

point_sets = st.sets(
    st.tuples(st.integers(0, 12), st.integers(0, 12)),
    min_size=1,
    max_size=8,
).filter(lambda s: any(p != (0, 0) for p in s))


def _brute_force_chain(points):
    """Boundary chain via an independent exact hull of point + quadrant."""
    big = 60
    cloud = set()
    for x, y in points:
        cloud.update({(x, y), (x + big, y), (x, y + big), (x + big, y + big)})
    hull = convex_hull(*[Point2D(x, y) for x, y in cloud])
    if isinstance(hull, Polygon):
        hv = [(int(p.x), int(p.y)) for p in hull.vertices]
    elif hasattr(hull, "points"):  # Segment
        hv = [(int(p.x), int(p.y)) for p in hull.points]
    else:  # single Point
        hv = [(int(hull.x), int(hull.y))]
    chain = sorted(
        (p for p in hv if p in points), key=lambda p: (-p[0], p[1])
    )
    return tuple(chain)


@settings(max_examples=250, derandomize=True, deadline=None)
@given(point_sets)
def test_boundary_matches_brute_force_hull(points):
    d = newton_boundary(points)
    assert _vertices(d.vertices) == _brute_force_chain(points)


@settings(max_examples=250, derandomize=True, deadline=None)
@given(point_sets)
def test_pareto_minimal_dominance(points):
    mins = pareto_minimal(points)
    for p in points:
        assert any(q[0] <= p[0] and q[1] <= p[1] for q in mins)
    for q in mins:
        assert not any(
            r != q and r[0] <= q[0] and r[1] <= q[1] for r in mins
        )


coeff = st.integers(-5, 5).filter(bool)
terms = st.lists(
    st.tuples(
        coeff,
        st.integers(0, 5),
        st.integers(0, 5),
        st.integers(0, 5),
        st.integers(0, 5),
    ),
    min_size=1,
    max_size=6,
)
weights = st.tuples(st.integers(1, 7), st.integers(1, 7))


@settings(max_examples=250, derandomize=True, deadline=None)
@given(terms, weights)
def test_face_function_rdeg_minimality(ts, P):
    from mixedlip.poly import GaussianRational, MixedPolynomial, monomial

    f = MixedPolynomial.from_terms([])
    for c, n1, m1, n2, m2 in ts:
        if n1 + m1 + n2 + m2 == 0:
            continue
        f = f + monomial(c, n1, m1, n2, m2)
    if f.is_zero():
        f = parse("u")
    face, d = face_function(f, P)
    rdeg = lambda m: P[0] * (m.nu[0] + m.mu[0]) + P[1] * (m.nu[1] + m.mu[1])
    assert all(rdeg(m) == d for m in face.monomials)
    assert all(rdeg(m) >= d for m in f.monomials)
    assert min(rdeg(m) for m in f.monomials) == d
