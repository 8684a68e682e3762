"""Acceptance criteria: one test and one printed pass line per criterion."""

from __future__ import annotations

import json
import math
import time
from fractions import Fraction

import numpy as np
from click.testing import CliRunner

from mixedlip.arcs import estimate_contact
from mixedlip.cli import main as cli_main
from mixedlip.invariants import compare, contact_order, family_check
from mixedlip.links import compute_link
from mixedlip.newton import face_function, gamma_inn, newton_boundary
from mixedlip.poly import parse

from conftest import (
    EX_B1_F,
    EX_B1_G,
    EX_B1_H,
    EX_CD_F,
    EX_CD_G,
    EX_HORN,
    EX_HORN_DEF,
    EX_HORN_THETA,
    EX_MAIN,
    cached_analysis,
)

F = Fraction


def test_criterion_1_newton_fixtures():
    t0 = time.monotonic()
    f = parse(EX_MAIN)
    assert f.support() == frozenset({(8, 0), (2, 3), (2, 6), (1, 5), (0, 8)})
    d = newton_boundary(f.support())
    assert tuple((int(x), int(y)) for x, y in d.vertices) == (
        (8, 0),
        (2, 3),
        (1, 5),
        (0, 8),
    )
    assert [e.weight.as_list() for e in d.edges] == [[1, 2], [2, 1], [3, 1]]
    g = gamma_inn(f)
    assert tuple((int(x), int(y)) for x, y in g.diagram.vertices) == (
        (8, 0),
        (2, 3),
        (0, 7),
    )
    assert [w.as_list() for w in g.p_inn] == [[2, 1], [1, 2]]
    elapsed = time.monotonic() - t0
    assert elapsed < 1.0
    print(f"PASS criterion 1: boundary/inner-region fixtures exact ({elapsed:.2f}s)")


def test_criterion_2_face_functions():
    f = parse(EX_MAIN)
    assert face_function(f, (3, 1))[0] == parse("u ~v^5 + v^4 ~v^4")
    assert face_function(f, (2, 1))[0] == parse("u^2 v^3 + u ~v^5")
    assert face_function(f, (1, 2))[0] == parse("u^8 + u^2 v^3")
    print("PASS criterion 2: three face functions symbolically exact")


def test_criterion_3_link_counts():
    f = parse(EX_MAIN)
    g = gamma_inn(f)
    comps21 = compute_link(f, g, 1, "u-side", 256)
    assert len(comps21) == 2
    assert any(c.kind == "axis" for c in comps21)
    comps12 = compute_link(f, g, 2, "v-side", 256)
    assert len(comps12) == 3
    import cmath

    phases = sorted(
        cmath.phase(c.samples[0][0]) % (2 * math.pi) for c in comps12
    )
    for got, want in zip(phases, [math.pi / 3, math.pi, 5 * math.pi / 3]):
        assert abs(got - want) < 2 * math.pi / 1024
    print("PASS criterion 3: link component counts and phases match")


def test_criterion_4_contact_data_pair():
    a = cached_analysis(EX_CD_F)
    b = cached_analysis(EX_CD_G)
    assert a.contact_data.n == 5
    assert a.contact_data.pairs == ((F(3), 1), (F(2), 1), (F(3, 2), 2), (F(1), 1))
    assert b.contact_data.n == 4
    assert b.contact_data.pairs == ((F(3), 1), (F(2), 1), (F(3, 2), 1), (F(1), 1))
    v = compare(a, b)
    assert v.decision == "not-bilipschitz-equivalent"
    assert any("contact-data-invariance" == s.theorem for s in v.certificate)
    print("PASS criterion 4: contact data exact, mismatch certificate produced")


def test_criterion_5_horn_counterexample():
    t0 = time.monotonic()
    a = cached_analysis(EX_HORN)
    assert a.conditions["B"].value == "no"
    i1 = next(
        i
        for i, c in enumerate(a.link_data.components)
        if c.face_index == 1 and abs(c.base_angle) < 1e-6
    )
    i2 = next(
        i
        for i, c in enumerate(a.link_data.components)
        if c.face_index == 2 and abs(c.base_angle) < 1e-6
    )
    cv = contact_order(a.gamma, a.link_data, a.conditions, i1, i2, a.grid_size)
    assert cv.kind == "exact" and cv.q == F(3, 2)
    radii = tuple(np.geomspace(1e-2, 1e-5, 40).tolist())
    est = estimate_contact(
        a.f, a.gamma, a.link_data, i1, i2, n_pairs=8, radii=radii
    )
    assert abs(est.q_hat - 1.5) < 0.05
    b = cached_analysis(EX_HORN_DEF)
    j1 = next(
        i
        for i, c in enumerate(b.link_data.components)
        if c.face_index == 1 and abs(c.base_angle) < 1e-6
    )
    j2 = next(
        i
        for i, c in enumerate(b.link_data.components)
        if c.face_index == 2
        and abs(c.base_angle - math.atan(1.0) / 5) < 1e-4
    )
    est2 = estimate_contact(
        b.f, b.gamma, b.link_data, j1, j2, n_pairs=8, radii=radii
    )
    assert abs(est2.q_hat - 1.0) < 0.05
    v = family_check(parse(EX_HORN), parse(EX_HORN_THETA))
    assert v.decision == "topologically-equivalent-at-least"
    assert v.decision != "ambient-equivalent"
    elapsed = time.monotonic() - t0
    assert elapsed < 30.0
    print(
        "PASS criterion 5: condition B no, contact 3/2, oracle "
        f"{est.q_hat:.3f}/{est2.q_hat:.3f}, family not ambient ({elapsed:.1f}s)"
    )


def test_criterion_6_one_braid_trio():
    types = {}
    for text, ty in ((EX_B1_F, "I"), (EX_B1_G, "II"), (EX_B1_H, "III")):
        a = cached_analysis(text)
        assert a.sr_type == ty
        assert a.link_class.kind == "metric-1-braid-closure"
        types[text] = a
    for x, y in (
        (EX_B1_F, EX_B1_G),
        (EX_B1_F, EX_B1_H),
        (EX_B1_G, EX_B1_H),
    ):
        assert compare(types[x], types[y]).decision == "ambient-equivalent"
    print("PASS criterion 6: trio types I/II/III, all pairwise ambient-equivalent")


def test_criterion_7_property_suites_present():
    """The randomized suites live in the module test files; check coverage."""
    import test_arcs
    import test_invariants
    import test_links
    import test_newton
    import test_poly

    suites = {
        "hull-vs-brute-force": test_newton.test_boundary_matches_brute_force_hull,
        "rdeg-minimality": test_newton.test_face_function_rdeg_minimality,
        "strand-permutation": test_links.test_strand_components_partition_degree,
        "swap-symmetry": test_invariants.test_contact_data_swap_symmetry,
        "contact-symmetry": test_invariants.test_contact_symmetry_and_bounds,
        "non-archimedean": test_arcs.test_non_archimedean_triples,
        "roundtrip": test_poly.test_roundtrip_parse_to_string,
    }
    for name, fn in suites.items():
        settings = fn._hypothesis_internal_use_settings
        assert settings.max_examples >= 200, name
        assert settings.derandomize, name
    print("PASS criterion 7: all randomized suites present with >=200 cases")


def test_criterion_8_determinism():
    runner = CliRunner()
    args = ["analyze", EX_MAIN, "--grid", "128"]
    out1 = runner.invoke(cli_main, args).output
    out2 = runner.invoke(cli_main, args).output
    assert out1 == out2 and json.loads(out1)["schema"] == 1
    args = ["compare", EX_CD_F, EX_CD_G, "--grid", "128"]
    assert runner.invoke(cli_main, args).output == runner.invoke(cli_main, args).output
    print("PASS criterion 8: repeated runs byte-identical")
