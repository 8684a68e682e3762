"""Slopes, types, tangent cones, contact orders, and the decision engine.

This layer is exact where decisions are made: all slope comparisons, contact
exponents, and contact-data sets are held as rationals.  The numeric link
layer only feeds in discrete facts (component counts, angle projections,
multiplicities).
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from typing import Dict, List, Optional, Sequence, Tuple

from mixedlip.newton import GammaInnResult, SemiRadial, frac_str
from mixedlip.nondegen import Tri
from mixedlip.links import LinkClass, LinkComponent, LinkData, classify_link
from mixedlip.poly import MixedPolynomial, weighted_min_degree


# ---------------------------------------------------------------------------
# Types
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class SlopeProfile:
    """Ordered slopes k_1 > ... > k_N and the zone decomposition of I_f."""

    ks: Tuple[Fraction, ...]
    ell: int  # minimal i with k_i < 1; N + 1 if none
    zone_gt: Tuple[int, ...]  # I_f with k > 1
    zone_eq: Tuple[int, ...]  # I_f with k = 1
    zone_lt: Tuple[int, ...]  # I_f with k < 1

    def to_json(self) -> dict:
        return {
            "ks": [frac_str(k) for k in self.ks],
            "ell": self.ell,
            "zones": {
                "k>1": list(self.zone_gt),
                "k=1": list(self.zone_eq),
                "k<1": list(self.zone_lt),
            },
        }


@dataclass(frozen=True)
class ContactData:
    """The contact-data pairs (kappa, m) together with the face count N."""

    pairs: Tuple[Tuple[Fraction, int], ...]  # sorted by descending kappa
    n: int

    def to_json(self) -> dict:
        return {
            "N": self.n,
            "pairs": [[frac_str(k), m] for k, m in self.pairs],
        }


@dataclass(frozen=True)
class ConeDescription:
    """Tangent cone of V(f) at the origin, up to bi-Lipschitz equivalence.

    kind "u-axis" denotes the plane {u=0} and "v-axis" the plane {v=0}
    (named after the slice coordinate whose braid chart collapses there);
    "set-V(f_P)" is the cone over the link of the radial part.
    """

    kind: str
    detail: str = ""
    certified: bool = True

    def to_json(self) -> dict:
        return {"kind": self.kind, "detail": self.detail, "certified": self.certified}


@dataclass(frozen=True)
class ContactVerdict:
    """Outcome of the contact-order criterion for one component pair."""

    kind: str  # "exact" | "one" | "interval"
    q: Optional[Fraction]  # exact value (kind exact), 1 for kind one
    hi: Optional[Fraction]  # upper bound for kind interval
    basis: str
    flags: Tuple[str, ...] = ()

    @property
    def value(self) -> Optional[Fraction]:
        if self.kind == "one":
            return Fraction(1)
        return self.q

    def to_json(self) -> dict:
        out = {"kind": self.kind, "basis": self.basis, "flags": list(self.flags)}
        if self.kind == "exact":
            out["q"] = frac_str(self.q)
        elif self.kind == "one":
            out["q"] = "1"
        else:
            out["lo"] = "1"
            out["hi"] = frac_str(self.hi)
        return out


@dataclass(frozen=True)
class Step:
    """One certificate step: a theorem tag plus its checked hypotheses."""

    theorem: str
    hypotheses: Tuple[Tuple[str, str, Optional[str]], ...] = ()

    def to_json(self) -> dict:
        return {
            "theorem": self.theorem,
            "hypotheses": [
                {"name": n, "value": v, "witness": w} for n, v, w in self.hypotheses
            ],
        }


@dataclass(frozen=True)
class Verdict:
    """Decision with a machine-readable certificate."""

    decision: str
    certificate: Tuple[Step, ...]
    flags: Tuple[str, ...] = ()

    def to_json(self) -> dict:
        return {
            "decision": self.decision,
            "certificate": [s.to_json() for s in self.certificate],
            "flags": list(self.flags),
        }


# ---------------------------------------------------------------------------
# Semi-radial types and slopes
# ---------------------------------------------------------------------------


def _principal_u_convenient(p: MixedPolynomial) -> bool:
    return any(m.nu[1] + m.mu[1] == 0 for m in p.monomials)


def _principal_v_convenient(p: MixedPolynomial) -> bool:
    return any(m.nu[0] + m.mu[0] == 0 for m in p.monomials)


def type_of(sr: SemiRadial) -> str:
    """Type I/II/III of a semi-radial polynomial from k and convenience."""
    if sr.k == 1:
        return "II"
    if sr.k > 1:
        return "I" if _principal_u_convenient(sr.principal) else "III"
    return "I" if _principal_v_convenient(sr.principal) else "III"


def slope_profile(g: GammaInnResult, i_f: frozenset) -> SlopeProfile:
    ks = tuple(g.weight(i).k for i in range(1, g.n_faces + 1))
    ell = next((i + 1 for i, k in enumerate(ks) if k < 1), g.n_faces + 1)
    zone = lambda pred: tuple(i for i in sorted(i_f) if pred(ks[i - 1]))
    return SlopeProfile(
        ks=ks,
        ell=ell,
        zone_gt=zone(lambda k: k > 1),
        zone_eq=zone(lambda k: k == 1),
        zone_lt=zone(lambda k: k < 1),
    )


def contact_data(g: GammaInnResult, i_f: frozenset) -> ContactData:
    """The set of contact exponents kappa = max(k_i, 1/k_i) over I_f."""
    ks = {i: g.weight(i).k for i in range(1, g.n_faces + 1)}
    slopes_ne1 = {ks[i] for i in i_f if ks[i] != 1}
    kappas: Dict[Fraction, int] = {}
    for i in sorted(i_f):
        k = ks[i]
        kappa = k if k >= 1 else 1 / k
        m = 2 if (kappa in slopes_ne1 and 1 / kappa in slopes_ne1) else 1
        kappas[kappa] = m
    pairs = tuple(sorted(kappas.items(), key=lambda km: km[0], reverse=True))
    return ContactData(pairs=pairs, n=g.n_faces)


# ---------------------------------------------------------------------------
# Tangent cones
# ---------------------------------------------------------------------------


def tangent_cone(
    g: GammaInnResult,
    srs: Sequence[SemiRadial],
    link_data: Optional[LinkData],
) -> ConeDescription:
    """Tangent cone description from type/convenience plus link coverage."""
    if srs:
        sr = srs[0]
        t = type_of(sr)
        certified = not sr.heuristic
        if t == "II":
            if link_data is not None and not link_data.failures:
                comps = link_data.components
                if len(comps) == 1 and comps[0].kind == "axis":
                    axis = "u-axis" if comps[0].axis == "L_u" else "v-axis"
                    return ConeDescription(axis, "V(f_P) is the axis plane", certified)
            return ConeDescription("set-V(f_P)", "cone over the link of f_P", certified)
        mirror = sr.k > 1
        full, subset = ("u-axis", "subset-of-u-axis") if mirror else (
            "v-axis",
            "subset-of-v-axis",
        )
        if t == "I":
            p = sr.principal
            upgraded = (
                p.is_u_semiholomorphic()
                or p.is_ubar_semiholomorphic()
                or (not _principal_v_convenient(p) if mirror else
                    not _principal_u_convenient(p))
            )
            if not upgraded and link_data is not None:
                upgraded = any(
                    c.kind == "strand" and c.covers_circle()
                    for c in link_data.components
                ) or any(c.kind == "axis" for c in link_data.components)
            return ConeDescription(full if upgraded else subset, "", certified)
        # Type III: the principal part vanishes on the opposite axis, so the
        # cone always contains it; the horn part sits inside the near axis.
        other = "v-axis" if mirror else "u-axis"
        if link_data is not None and not link_data.failures:
            near = [
                c
                for c in link_data.components
                if not (c.kind == "axis" and c.axis == ("L_v" if mirror else "L_u"))
            ]
            if not near:
                return ConeDescription(other, "only the opposite axis remains", certified)
        union = (
            "union-v-axis-and-subset-u-axis"
            if mirror
            else "union-u-axis-and-subset-v-axis"
        )
        return ConeDescription(union, "", certified)
    return ConeDescription("per-component", "no semi-radial structure", False)


# ---------------------------------------------------------------------------
# Conditions (A)-(D)
# ---------------------------------------------------------------------------


def _proj_overlap(c1: LinkComponent, c2: LinkComponent, tol: float) -> bool:
    for lo1, hi1 in c1.proj_arcs:
        for lo2, hi2 in c2.proj_arcs:
            if _arcs_meet(lo1, hi1, lo2, hi2, tol):
                return True
    return False


def _arcs_meet(lo1, hi1, lo2, hi2, tol) -> bool:
    import math

    two_pi = 2 * math.pi
    for shift in (-two_pi, 0.0, two_pi):
        if lo1 - tol <= hi2 + shift and lo2 + shift - tol <= hi1:
            return True
    return False


def _interior_overlap(c1: LinkComponent, c2: LinkComponent, tol: float) -> bool:
    """Whether an open arc of one projection meets the other projection."""
    if c1.proj_has_interior() and _proj_overlap(c1, c2, -tol):
        return True
    if c2.proj_has_interior() and _proj_overlap(c2, c1, -tol):
        return True
    # full-circle projections always provide interior overlap
    if (c1.proj_has_interior() or c2.proj_has_interior()) and _proj_overlap(
        c1, c2, tol
    ):
        return True
    return False


def _overlap_condition(
    g: GammaInnResult,
    link_data: LinkData,
    zone_faces: List[int],
    tol: float,
) -> Tri:
    """Shared body of Conditions (A) and (B): overlap implies interior overlap."""
    if any(i in link_data.failures for i in zone_faces):
        return Tri("unknown", None, "link-missing", False)
    comps = [
        (idx, c)
        for idx, c in enumerate(link_data.components)
        if c.face_index in zone_faces and c.kind != "axis"
    ]
    for a in range(len(comps)):
        for b in range(a + 1, len(comps)):
            i1, c1 = comps[a]
            i2, c2 = comps[b]
            if _proj_overlap(c1, c2, tol) and not _interior_overlap(c1, c2, tol):
                return Tri("no", (i1, i2), "proj-arcs", True)
    return Tri("yes", None, "proj-arcs", True)


def _face_is_one_braid(link_data: LinkData, face: int) -> Optional[bool]:
    if face in link_data.failures:
        return None
    comps = link_data.face_components(face)
    if len(comps) != 1:
        return False
    c = comps[0]
    if c.kind == "axis":
        return True
    return c.kind == "strand" and c.strand_multiplicity == 1


def _coverage_condition(
    g: GammaInnResult,
    link_data: LinkData,
    zone_faces: List[int],
    extreme_face: Optional[int],
) -> Tri:
    """Shared body of Conditions (C) and (D)."""
    if not zone_faces:
        return Tri("yes", None, "vacuous", True)
    if any(i in link_data.failures for i in zone_faces) or extreme_face is None:
        return Tri("unknown", None, "link-missing", False)
    full = None
    for idx, c in enumerate(link_data.components):
        if c.face_index in zone_faces and c.covers_circle():
            full = idx
            break
    braid = _face_is_one_braid(link_data, extreme_face)
    if braid is None:
        return Tri("unknown", None, "link-missing", False)
    if full is not None and not braid:
        return Tri("yes", (full, extreme_face), "coverage", True)
    return Tri("no", None, "coverage", True)


def conditions(
    g: GammaInnResult,
    link_data: LinkData,
    i_f: frozenset,
    i_f_unknown: frozenset,
    grid_size: int = 1024,
) -> Dict[str, Tri]:
    """Conditions (A)-(D) evaluated on the computed link components."""
    import math

    tol = 2 * math.pi / grid_size
    ks = {i: g.weight(i).k for i in range(1, g.n_faces + 1)}
    gt = [i for i in range(1, g.n_faces + 1) if ks[i] > 1]
    lt = [i for i in range(1, g.n_faces + 1) if ks[i] < 1]
    out = {
        "A": _overlap_condition(g, link_data, gt, tol),
        "B": _overlap_condition(g, link_data, lt, tol),
    }
    if i_f_unknown:
        out["C"] = Tri("unknown", None, "trueness-unknown", False)
        out["D"] = Tri("unknown", None, "trueness-unknown", False)
        return out
    gt_true = [i for i in gt if i in i_f]
    lt_true = [i for i in lt if i in i_f]
    i_m = min(i_f) if i_f else None
    i_big = max(i_f) if i_f else None
    out["C"] = _coverage_condition(g, link_data, gt_true, i_m)
    out["D"] = _coverage_condition(g, link_data, lt_true, i_big)
    return out


# ---------------------------------------------------------------------------
# Contact orders
# ---------------------------------------------------------------------------


def _zone_of(c: LinkComponent, ks: Dict[int, Fraction]) -> str:
    if c.kind == "axis":
        return ">" if c.axis == "L_u" else "<"
    k = ks[c.face_index]
    if k > 1:
        return ">"
    if k < 1:
        return "<"
    return "="


def contact_order(
    g: GammaInnResult,
    link_data: LinkData,
    conds: Dict[str, Tri],
    idx1: int,
    idx2: int,
    grid_size: int = 1024,
) -> ContactVerdict:
    """Exact contact order of the surfaces over two link components.

    Cases: cross-zone pairs and disjoint angle projections give one;
    same-face pairs, interior-overlap zones with Condition (A)/(B), and
    matched-angle fibre-circle pairs give the exact slope; otherwise an
    interval bound [1, slope].
    """
    import math

    if idx1 == idx2:
        raise ValueError("contact_order needs two distinct components")
    c1 = link_data.components[idx1]
    c2 = link_data.components[idx2]
    ks = {i: g.weight(i).k for i in range(1, g.n_faces + 1)}
    z1, z2 = _zone_of(c1, ks), _zone_of(c2, ks)
    if z1 != z2:
        return ContactVerdict("one", None, None, "cross-zone")
    if c1.kind == "axis" and c2.kind == "axis":
        return ContactVerdict("one", None, None, "cross-zone")
    if z1 == "=":
        return ContactVerdict("one", None, None, "slope-one-components")
    mirror = z1 == ">"
    # the coarser exponent bounds the contact from above
    if c1.kind == "axis" or c2.kind == "axis":
        other = c2 if c1.kind == "axis" else c1
        k = ks[other.face_index]
        q = k if mirror else 1 / k
        return ContactVerdict("exact", q, None, "axis-pair")
    i = min(c1.face_index, c2.face_index)
    j = max(c1.face_index, c2.face_index)
    bound = ks[j] if mirror else 1 / ks[i]
    tol = 2 * math.pi / grid_size
    if not _proj_overlap(c1, c2, tol):
        return ContactVerdict("one", None, None, "proj-disjoint")
    cond = conds["A"] if mirror else conds["B"]
    if i == j or cond.value == "yes":
        return ContactVerdict(
            "exact", bound, None, "same-face" if i == j else "interior-overlap"
        )
    if (
        c1.kind == "fibre-circle"
        and c2.kind == "fibre-circle"
        and abs((c1.base_angle - c2.base_angle + math.pi) % (2 * math.pi) - math.pi)
        < tol
    ):
        # both horns carry arcs over the same base angle; the matched-angle
        # arc pair realizes the upper bound, so the supremum is exact
        return ContactVerdict("exact", bound, None, "matched-angle-horns")
    flags = ("condition-unknown",) if cond.value == "unknown" else ()
    return ContactVerdict("interval", None, bound, "overlap-bound", flags)


def contact_multiset(
    g: GammaInnResult,
    link_data: LinkData,
    conds: Dict[str, Tri],
    grid_size: int = 1024,
) -> List[ContactVerdict]:
    """Contact verdicts for all distinct component pairs."""
    out = []
    n = len(link_data.components)
    for a in range(n):
        for b in range(a + 1, n):
            out.append(contact_order(g, link_data, conds, a, b, grid_size))
    return out


# ---------------------------------------------------------------------------
# Decision engine
# ---------------------------------------------------------------------------


def _tri_h(name: str, t: Tri) -> Tuple[str, str, Optional[str]]:
    w = None if t.witness is None else repr(t.witness)
    return (name, t.value, w)


def _links_excluded(lc: LinkClass) -> Optional[bool]:
    """Whether the link is neither empty nor a metric 1-braid closure."""
    if "unclassified" in lc.flags:
        return None
    return lc.kind not in ("empty", "metric-1-braid-closure")


def compare(a, b, assert_link_type: Optional[str] = None) -> Verdict:
    """Decide (in)equivalence of two analyzed polynomials.

    The positive rules use the simple-link rigidity theorems; the negative
    rules use semi-radial type/slope invariance and contact-data invariance.
    assert_link_type ("trivial-knot" or "hopf") supplies the isotopy type of
    the second link as a user assumption for the extension rules.
    """
    flags: List[str] = sorted(set(a.flags) | set(b.flags))
    unc = ("uncertified",) if "uncertified" in flags else ()

    if a.f == b.f:
        return Verdict("ambient-equivalent", (Step("identical-input"),), tuple(unc))

    ka, kb = a.link_class, b.link_class
    # rule 1: both links in the same simple class
    if ka.kind == kb.kind == "empty":
        return Verdict("ambient-equivalent", (Step("empty-link-rigidity"),), tuple(unc))
    if ka.kind == kb.kind == "metric-1-braid-closure":
        return Verdict(
            "ambient-equivalent",
            (
                Step(
                    "one-braid-rigidity",
                    (("L_f-1-braid", "yes", None), ("L_g-1-braid", "yes", None)),
                ),
            ),
            tuple(unc),
        )
    if ka.kind == kb.kind == "non-tangent-Hopf-link":
        return Verdict(
            "ambient-equivalent", (Step("non-tangent-hopf-rigidity"),), tuple(unc)
        )
    # rule 1b: simple link vs Type-II with the matching asserted link type
    for x, y in ((a, b), (b, a)):
        if (
            x.link_class.kind == "metric-1-braid-closure"
            and assert_link_type == "trivial-knot"
            and y.sr_type == "II"
        ):
            return Verdict(
                "ambient-equivalent",
                (
                    Step(
                        "trivial-knot-extension",
                        (("asserted-link-type", "trivial-knot", "user assumption"),),
                    ),
                ),
                tuple(set(unc) | {"assumed-link-type"}),
            )
        if (
            x.link_class.kind == "non-tangent-Hopf-link"
            and assert_link_type == "hopf"
            and y.sr_type == "II"
        ):
            return Verdict(
                "ambient-equivalent",
                (
                    Step(
                        "hopf-link-extension",
                        (("asserted-link-type", "hopf", "user assumption"),),
                    ),
                ),
                tuple(set(unc) | {"assumed-link-type"}),
            )
    # rule 2: semi-radial type and slope invariance (links excluded per the
    # theorem hypotheses: neither empty nor metric 1-braid closures)
    if a.sr_type is not None and b.sr_type is not None:
        ex_a, ex_b = _links_excluded(ka), _links_excluded(kb)
        if ex_a and ex_b:
            hyp = (
                ("f-type", a.sr_type, None),
                ("g-type", b.sr_type, None),
                ("links-excluded", "yes", None),
            )
            if a.sr_type != b.sr_type:
                return Verdict(
                    "not-bilipschitz-equivalent",
                    (Step("semi-radial-type-invariance", hyp),),
                    tuple(unc),
                )
            if a.sr_type in ("I", "III"):
                kf, kg = a.semi_radial[0].k, b.semi_radial[0].k
                if kf != kg and kf != 1 / kg:
                    return Verdict(
                        "not-bilipschitz-equivalent",
                        (
                            Step(
                                "slope-invariance",
                                hyp
                                + (
                                    ("k_f", frac_str(kf), None),
                                    ("k_g", frac_str(kg), None),
                                ),
                            ),
                        ),
                        tuple(unc),
                    )
    # rule 3: contact-data invariance
    ok_a = _contact_ready(a)
    ok_b = _contact_ready(b)
    if ok_a and ok_b:
        ca = {k for k, _ in a.contact_data.pairs}
        cb = {k for k, _ in b.contact_data.pairs}
        pa, pb = set(a.contact_data.pairs), set(b.contact_data.pairs)
        hyp = (
            _tri_h("f-nice", a.nice),
            _tri_h("g-nice", b.nice),
            _tri_h("f-condition-C", a.conditions["C"]),
            _tri_h("f-condition-D", a.conditions["D"]),
            _tri_h("g-condition-C", b.conditions["C"]),
            _tri_h("g-condition-D", b.conditions["D"]),
        )
        if pa != pb:
            return Verdict(
                "not-bilipschitz-equivalent",
                (
                    Step(
                        "contact-data-invariance",
                        hyp
                        + (
                            ("C(f)", _fmt_pairs(a.contact_data), None),
                            ("C(g)", _fmt_pairs(b.contact_data), None),
                        ),
                    ),
                ),
                tuple(unc),
            )
        fully_true = (
            len(a.i_f) == a.gamma.n_faces and len(b.i_f) == b.gamma.n_faces
        )
        if fully_true and a.contact_data.n != b.contact_data.n:
            return Verdict(
                "not-bilipschitz-equivalent",
                (
                    Step(
                        "contact-data-invariance",
                        hyp
                        + (
                            ("N_f", str(a.contact_data.n), None),
                            ("N_g", str(b.contact_data.n), None),
                        ),
                    ),
                ),
                tuple(unc),
            )
    return Verdict("inconclusive", (Step("no-applicable-rule"),), tuple(unc))


def _contact_ready(x) -> bool:
    return (
        x.gamma.is_ind
        and x.nice.value == "yes"
        and x.conditions["C"].value == "yes"
        and x.conditions["D"].value == "yes"
        and not x.i_f_unknown
    )


def _fmt_pairs(cd: ContactData) -> str:
    return ", ".join(f"({frac_str(k)},{m})" for k, m in cd.pairs)


def family_check(f: MixedPolynomial, theta: MixedPolynomial) -> Verdict:
    """Triviality of the deformation family f + epsilon*theta."""
    from mixedlip.newton import radial_decompose

    if theta.is_zero():
        return Verdict("ambient-equivalent", (Step("constant-family"),))
    srs = radial_decompose(f)
    if srs:
        sr = srs[0]
        d_theta = weighted_min_degree(theta, sr.P)
        flags = ("uncertified",) if sr.heuristic else ()
        hyp = (
            ("radial-type", f"({sr.P.p1},{sr.P.p2};{frac_str(sr.d)})", None),
            ("d(P;theta)", frac_str(d_theta), None),
        )
        if d_theta > sr.d:
            return Verdict(
                "ambient-equivalent",
                (Step("strict-degree-family-triviality", hyp),),
                flags,
            )
        if d_theta == sr.d:
            return Verdict(
                "ambient-equivalent",
                (Step("boundary-degree-family-triviality", hyp),),
                flags + ("small-parameter-neighbourhood",),
            )
    from mixedlip.analysis import analyze

    a = analyze(f)
    if not a.gamma.is_ind:
        return Verdict(
            "inconclusive",
            (Step("no-applicable-rule", (("f-IND", "no", None),)),),
        )
    degrees_ok = True
    deg_hyp = []
    for i in range(1, a.gamma.n_faces + 1):
        P = a.gamma.weight(i)
        df = weighted_min_degree(f, P)
        dt = weighted_min_degree(theta, P)
        deg_hyp.append(
            (f"d(P_{i};theta)>=d(P_{i};f)", "yes" if dt >= df else "no",
             f"{frac_str(dt)} vs {frac_str(df)}")
        )
        if dt < df:
            degrees_ok = False
    flags = tuple(sorted(set(a.flags)))
    hyp = tuple(deg_hyp) + (_tri_h("nice", a.nice),)
    if degrees_ok and a.nice.value == "yes":
        if a.link_class.kind in (
            "empty",
            "metric-1-braid-closure",
            "non-tangent-Hopf-link",
        ):
            return Verdict(
                "ambient-equivalent",
                (
                    Step(
                        "simple-link-family-triviality",
                        hyp + (("link-class", a.link_class.kind, None),),
                    ),
                ),
                flags,
            )
        warn = list(flags)
        if a.conditions["B"].value == "no":
            warn.append("condition-B-fails:contact-orders-not-controlled")
        if a.conditions["A"].value == "no":
            warn.append("condition-A-fails:contact-orders-not-controlled")
        return Verdict(
            "topologically-equivalent-at-least",
            (
                Step(
                    "link-constancy",
                    hyp
                    + (
                        _tri_h("condition-A", a.conditions["A"]),
                        _tri_h("condition-B", a.conditions["B"]),
                    ),
                ),
            ),
            tuple(warn),
        )
    return Verdict("inconclusive", (Step("no-applicable-rule", hyp),), flags)
