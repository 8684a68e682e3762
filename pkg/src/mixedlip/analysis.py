"""Full analysis bundle: one polynomial in, every computed invariant out."""

from __future__ import annotations

from dataclasses import dataclass
from typing import Dict, Optional, Tuple

from mixedlip.invariants import (
    ConeDescription,
    ContactData,
    SlopeProfile,
    conditions,
    contact_data,
    contact_order,
    slope_profile,
    tangent_cone,
    type_of,
)
from mixedlip.links import (
    LinkClass,
    LinkData,
    classify_link,
    compute_link_data,
    gamma_true,
)
from mixedlip.newton import (
    GammaInnResult,
    SemiRadial,
    gamma_inn,
    radial_decompose,
)
from mixedlip.nondegen import Tri, is_nice
from mixedlip.poly import MixedPolynomial, parse, to_string


@dataclass(frozen=True)
class Analysis:
    """All invariants of one mixed polynomial."""

    f: MixedPolynomial
    gamma: GammaInnResult
    link_data: LinkData
    link_class: LinkClass
    semi_radial: Tuple[SemiRadial, ...]
    sr_type: Optional[str]
    slopes: SlopeProfile
    i_f: frozenset
    i_f_unknown: frozenset
    nice: Tri
    conditions: Dict[str, Tri]
    contact_data: ContactData
    cone: ConeDescription
    flags: Tuple[str, ...]
    grid_size: int

    def to_json(self) -> dict:
        return {
            "input": to_string(self.f),
            "support": [list(p) for p in sorted(self.f.support())],
            "gamma": self.gamma.diagram.to_json(),
            "gammaInn": self.gamma.to_json(),
            "semiRadial": [
                {
                    "P": sr.P.as_list(),
                    "d": str(sr.d),
                    "k": str(sr.k),
                    "heuristic": sr.heuristic,
                }
                for sr in self.semi_radial
            ],
            "type": self.sr_type,
            "slopes": self.slopes.to_json(),
            "I_f": sorted(self.i_f),
            "I_f_unknown": sorted(self.i_f_unknown),
            "linkSummary": self.link_data.to_json(),
            "linkClass": self.link_class.to_json(),
            "conditions": {
                name: {"value": t.value, "certified": t.certified}
                for name, t in sorted(self.conditions.items())
            },
            "contactData": self.contact_data.to_json(),
            "tangentCone": self.cone.to_json(),
            "flags": list(self.flags),
        }


def analyze(f, grid_size: int = 1024) -> Analysis:
    """Compute the complete invariant bundle of one mixed polynomial."""
    if isinstance(f, str):
        f = parse(f)
    g = gamma_inn(f)
    link_data = compute_link_data(f, g, grid_size)
    i_f, i_f_unknown = gamma_true(f, g, link_data)
    srs = radial_decompose(f)
    sr_type = type_of(srs[0]) if srs else None
    nice = is_nice(f, g)
    conds = conditions(g, link_data, i_f, i_f_unknown, grid_size)
    slopes = slope_profile(g, i_f)
    cdata = contact_data(g, i_f)
    cone = tangent_cone(g, srs, link_data)
    cone_kind = cone.kind if cone.kind in ("u-axis", "v-axis") else None

    hopf_contact_one: Optional[bool] = None
    if not link_data.failures and len(link_data.components) == 2:
        cv = contact_order(g, link_data, conds, 0, 1, grid_size)
        if cv.kind == "one" or (cv.kind == "exact" and cv.q == 1):
            hopf_contact_one = True
        elif cv.kind == "exact":
            hopf_contact_one = False
    link_class = classify_link(g, link_data, cone_kind, hopf_contact_one)

    flags = []
    if not g.is_ind:
        flags.append("not-ind")
    if g.status == "heuristic":
        flags.append("uncertified")
    if srs and srs[0].heuristic:
        flags.append("uncertified")
    if nice.value == "yes" and not nice.certified:
        flags.append("uncertified")
    if link_data.failures:
        flags.append("link-failures")
    return Analysis(
        f=f,
        gamma=g,
        link_data=link_data,
        link_class=link_class,
        semi_radial=srs,
        sr_type=sr_type,
        slopes=slopes,
        i_f=i_f,
        i_f_unknown=i_f_unknown,
        nice=nice,
        conditions=conds,
        contact_data=cdata,
        cone=cone,
        flags=tuple(sorted(set(flags))),
        grid_size=grid_size,
    )
