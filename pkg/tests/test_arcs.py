"""Numeric arc oracle: sampling discipline, tord regression, contact."""

from __future__ import annotations

import math
from functools import lru_cache

import numpy as np
from hypothesis import given, settings, strategies as st

from mixedlip.arcs import (
    Arc,
    estimate_contact,
    estimate_tord,
    sample_arc,
)
from mixedlip.poly import evaluate, evaluate_scale, parse

from conftest import EX_HOPF, EX_HORN, EX_HORN_DEF, cached_analysis

RADII = tuple(np.geomspace(1e-1, 1e-4, 40).tolist())
TIGHT_RADII = tuple(np.geomspace(1e-2, 1e-5, 40).tolist())


def _synthetic(points):
    rs = RADII
    return Arc(rs, tuple(points(r) for r in rs), (1, 0, 0.0))


def test_tord_synthetic_three_halves():
    a = _synthetic(lambda r: (r + 0j, r**1.5 + 0j))
    b = _synthetic(lambda r: (r + 0j, r**2.5 + 0j))
    est = estimate_tord(a, b)
    assert abs(est.q_hat - 1.5) < 0.05
    assert est.stderr < 0.05


def test_tord_transverse_lines():
    a = _synthetic(lambda r: (r + 0j, 0j))
    b = _synthetic(lambda r: (0j, r + 0j))
    est = estimate_tord(a, b)
    assert abs(est.q_hat - 1.0) < 0.05


def test_tord_identical_arcs_infinity():
    a = _synthetic(lambda r: (r + 0j, r**1.5 + 0j))
    assert math.isinf(estimate_tord(a, a).q_hat)


def test_axis_arc_is_exact():
    a = cached_analysis(EX_HOPF)
    arc = sample_arc(a.f, a.gamma, a.link_data, 1, 0.0, RADII)
    for r, (u, v) in zip(arc.radii, arc.points):
        assert abs(u - r) < 1e-12 and abs(v) < 1e-12


def test_arc_residual_discipline_and_radius():
    a = cached_analysis(EX_HORN)
    for idx in range(len(a.link_data.components)):
        arc = sample_arc(a.f, a.gamma, a.link_data, idx, 0.7, RADII)
        assert len(arc.radii) >= 10
        for r, (u, v) in zip(arc.radii, arc.points):
            scale = max(evaluate_scale(a.f, u, v), 1e-300)
            assert abs(evaluate(a.f, u, v)) < 1e-10 * scale
            assert abs(max(abs(u), abs(v)) - r) < 0.1 * r


def test_contact_oracle_hopf():
    a = cached_analysis(EX_HOPF)
    est = estimate_contact(a.f, a.gamma, a.link_data, 0, 1, n_pairs=8)
    assert abs(est.q_hat - 1.0) < 0.05


def _horn_pair(a, face2_shift=0.0):
    i1 = next(
        i
        for i, c in enumerate(a.link_data.components)
        if c.face_index == 1 and abs(c.base_angle) < 1e-6
    )
    i2 = next(
        i
        for i, c in enumerate(a.link_data.components)
        if c.face_index == 2 and abs(c.base_angle - face2_shift) < 1e-4
    )
    return i1, i2


def test_contact_oracle_matched_horns():
    a = cached_analysis(EX_HORN)
    i1, i2 = _horn_pair(a)
    est = estimate_contact(
        a.f, a.gamma, a.link_data, i1, i2, n_pairs=8, radii=TIGHT_RADII
    )
    assert abs(est.q_hat - 1.5) < 0.05


def test_contact_oracle_deformed_horns():
    a = cached_analysis(EX_HORN_DEF)
    i1, i2 = _horn_pair(a, face2_shift=math.atan(1.0) / 5)
    est = estimate_contact(
        a.f, a.gamma, a.link_data, i1, i2, n_pairs=8, radii=TIGHT_RADII
    )
    assert abs(est.q_hat - 1.0) < 0.05


# --- randomized suite: non-archimedean (isosceles) inequality -------------


@lru_cache(maxsize=None)
def _arc_pool():
    arcs = []
    for text in (EX_HORN, EX_HOPF):
        a = cached_analysis(text)
        for idx in range(len(a.link_data.components)):
            for j in range(4):
                tau = math.pi * j / 2
                arcs.append(sample_arc(a.f, a.gamma, a.link_data, idx, tau, RADII))
    return tuple(arcs)


@lru_cache(maxsize=None)
def _tord(i: int, j: int) -> float:
    pool = _arc_pool()
    return estimate_tord(pool[i], pool[j]).q_hat


@settings(max_examples=250, derandomize=True, deadline=None)
@given(st.data())
def test_non_archimedean_triples(data):
    n = len(_arc_pool())
    i = data.draw(st.integers(0, n - 1))
    j = data.draw(st.integers(0, n - 1).filter(lambda x: x != i))
    k = data.draw(
        st.integers(0, n - 1).filter(lambda x: x not in (i, j))
    )
    q_ij, q_ik, q_jk = _tord(i, j), _tord(i, k), _tord(j, k)
    assert q_jk >= min(q_ij, q_ik) - 0.1
