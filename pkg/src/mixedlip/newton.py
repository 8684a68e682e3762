"""Newton polygons of mixed polynomials and the inner-compatible boundary.

Support sets live in the first quadrant; the Newton boundary is the union of
the compact faces of the convex hull of supp(f) + (R_{>=0})^2.  A C-diagram is
a convenient rational boundary (touching both axes).  `gamma_inn` searches the
space of C-diagrams lying on or below the support for the region-maximal one
whose every inner face passes the inner non-degeneracy (IND) test, subject to
the axis-weight constraint: if an axis carries no support of the diagram's
principal part, the edge touching that axis must have its corresponding weight
component minimal (slope k <= 1 toward the x-axis, k >= 1 toward the y-axis).

All geometry is exact over rationals; floating point never enters diagram or
degree computations.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations
from typing import Dict, Iterable, List, Optional, Sequence, Tuple

from mixedlip.poly import MixedPolynomial, radial_degree

Point = Tuple[Fraction, Fraction]


def _pt(p: Sequence) -> Point:
    return (Fraction(p[0]), Fraction(p[1]))


def frac_str(q: Fraction) -> str:
    """Serialize an exact rational as "p" or "p/q"."""
    q = Fraction(q)
    return str(q)


@dataclass(frozen=True)
class Weight:
    """Positive coprime weight vector P = (p1, p2); slope k = p1/p2."""

    p1: int
    p2: int

    def __post_init__(self):
        if self.p1 <= 0 or self.p2 <= 0:
            raise ValueError("weight components must be positive")
        k = Fraction(self.p1, self.p2)
        if (k.numerator, k.denominator) != (self.p1, self.p2):
            raise ValueError("weight components must be coprime")

    @staticmethod
    def from_slope(k: Fraction) -> "Weight":
        k = Fraction(k)
        return Weight(k.numerator, k.denominator)

    @property
    def k(self) -> Fraction:
        return Fraction(self.p1, self.p2)

    def as_list(self) -> List[int]:
        return [self.p1, self.p2]


@dataclass(frozen=True)
class Edge:
    """Edge between vertex indices, annotated with weight and minimal value d."""

    start: int
    end: int
    weight: Weight
    d: Fraction


@dataclass(frozen=True)
class Diagram:
    """Rational boundary: vertices in decreasing x, convex edge chain.

    Edges follow the vertex order, so their slopes k are strictly increasing;
    the weight list in decreasing-k order is `weights_desc`.
    """

    vertices: Tuple[Point, ...]
    edges: Tuple[Edge, ...]
    u_convenient: bool
    v_convenient: bool

    def weights_desc(self) -> Tuple[Weight, ...]:
        """Edge weights ordered k_1 > k_2 > ... (y-axis side first)."""
        return tuple(e.weight for e in reversed(self.edges))

    def edges_desc(self) -> Tuple[Edge, ...]:
        return tuple(reversed(self.edges))

    def is_convenient(self) -> bool:
        return self.u_convenient and self.v_convenient

    def region_contains(self, point: Sequence) -> bool:
        """Is the point inside diagram + (R_{>=0})^2 (on or above the boundary)?"""
        p = _pt(point)
        if p[0] < 0 or p[1] < 0:
            return False
        if not self.edges:
            v = self.vertices[0]
            return p[0] >= v[0] and p[1] >= v[1]
        for e in self.edges:
            if radial_degree(e.weight, p) < e.d:
                return False
        # Beyond the extreme vertices the region is bounded by the quadrant
        # shifted to them.
        first, last = self.vertices[0], self.vertices[-1]
        if p[0] > first[0] and p[1] < first[1]:
            return False
        if p[1] > last[1] and p[0] < last[0]:
            return False
        return True

    def boundary_contains(self, point: Sequence) -> bool:
        """Is the point on the boundary itself (some edge segment or vertex)?"""
        p = _pt(point)
        if p in self.vertices:
            return True
        for e in self.edges:
            a, b = self.vertices[e.start], self.vertices[e.end]
            if radial_degree(e.weight, p) == e.d and b[0] <= p[0] <= a[0]:
                return True
        return False

    def to_json(self) -> dict:
        return {
            "vertices": [[frac_str(x), frac_str(y)] for x, y in self.vertices],
            "edges": [
                {
                    "from": e.start,
                    "to": e.end,
                    "p": e.weight.as_list(),
                    "d": frac_str(e.d),
                    "k": f"{e.weight.p1}/{e.weight.p2}",
                }
                for e in self.edges
            ],
            "u_convenient": self.u_convenient,
            "v_convenient": self.v_convenient,
        }


@dataclass(frozen=True)
class Face:
    """A face of a diagram carrying the support points of f that lie on it."""

    kind: str  # "vertex" or "edge"
    support_points: Tuple[Point, ...]
    weight: Optional[Weight]  # edges only
    d: Optional[Fraction]  # edges only
    touches_x: bool
    touches_y: bool


@dataclass(frozen=True)
class FaceTest:
    """Result of one IND stratum test on one inner face."""

    face: Face
    subset: Tuple[int, ...]  # (1,), (2,) or (1, 2)
    result: object  # nondegen.Tri


@dataclass(frozen=True)
class GammaInnResult:
    """Outcome of the inner-boundary search."""

    diagram: Diagram
    p_inn: Tuple[Weight, ...]  # decreasing k
    status: str  # "certified" or "heuristic"
    ind_report: Tuple[FaceTest, ...]
    is_ind: bool
    base: MixedPolynomial

    @property
    def n_faces(self) -> int:
        return len(self.p_inn)

    def weight(self, face_index: int) -> Weight:
        """Weight P_i for 1-based face index i (k_1 > k_2 > ...)."""
        return self.p_inn[face_index - 1]

    def face_poly(self, face_index: int) -> MixedPolynomial:
        poly, _ = face_function(self.base, self.weight(face_index))
        return poly

    def to_json(self) -> dict:
        return {
            "diagram": self.diagram.to_json(),
            "p_inn": [w.as_list() for w in self.p_inn],
            "slopes": [f"{w.p1}/{w.p2}" for w in self.p_inn],
            "status": self.status,
            "is_ind": self.is_ind,
            "ind_report": [
                {
                    "face": {
                        "kind": t.face.kind,
                        "support": [
                            [frac_str(x), frac_str(y)]
                            for x, y in t.face.support_points
                        ],
                        "p": t.face.weight.as_list() if t.face.weight else None,
                    },
                    "subset": list(t.subset),
                    "value": t.result.value,
                    "method": t.result.method,
                    "certified": t.result.certified,
                }
                for t in self.ind_report
            ],
        }


@dataclass(frozen=True)
class SemiRadial:
    """Decomposition f = f_P + remainder with all remainder terms above d."""

    P: Weight
    d: Fraction
    principal: MixedPolynomial
    remainder: MixedPolynomial
    k: Fraction
    heuristic: bool  # isolated-singularity check not fully certified


# ---------------------------------------------------------------------------
# Support and hull
# ---------------------------------------------------------------------------


def support(f: MixedPolynomial) -> frozenset:
    """Set of total exponent pairs (nu1+mu1, nu2+mu2)."""
    return f.support()


def pareto_minimal(points: Iterable[Sequence]) -> List[Point]:
    """Points not dominated componentwise by another point of the set."""
    pts = sorted({_pt(p) for p in points})
    out: List[Point] = []
    for p in pts:
        if not any(q[0] <= p[0] and q[1] <= p[1] and q != p for q in pts):
            out.append(p)
    return out


def _cross(o: Point, a: Point, b: Point) -> Fraction:
    return (a[0] - o[0]) * (b[1] - o[1]) - (a[1] - o[1]) * (b[0] - o[0])


def newton_boundary(points: Iterable[Sequence]) -> Diagram:
    """Lower-left hull of a point set with weight/degree annotations.

    Vertices are returned in decreasing x (increasing y); each edge gets the
    coprime inward normal P with l_P constant (= d) on the edge.
    """
    minimal = pareto_minimal(points)
    if not minimal:
        raise ValueError("empty point set")
    # Pareto-minimal points sorted by increasing x have strictly decreasing y;
    # keep only hull vertices (drop points on or above a chord).
    hull: List[Point] = []
    for p in sorted(minimal):
        while len(hull) >= 2 and _cross(hull[-2], hull[-1], p) <= 0:
            hull.pop()
        hull.append(p)
    hull.reverse()  # decreasing x
    vertices = tuple(hull)
    edges = []
    for i in range(len(vertices) - 1):
        a, b = vertices[i], vertices[i + 1]  # a.x > b.x, a.y < b.y
        k = (b[1] - a[1]) / (a[0] - b[0])
        w = Weight.from_slope(k)
        edges.append(Edge(i, i + 1, w, radial_degree(w, a)))
    u_conv = any(v[1] == 0 for v in vertices)
    v_conv = any(v[0] == 0 for v in vertices)
    return Diagram(vertices, tuple(edges), u_conv, v_conv)


def face_function(f: MixedPolynomial, P) -> Tuple[MixedPolynomial, Fraction]:
    """Monomials of f minimizing the weighted degree, and the minimum d(P; f)."""
    if f.is_zero():
        raise ValueError("face function of the zero polynomial")
    degs = [(radial_degree(P, m.support_point), m) for m in f.monomials]
    d = min(dd for dd, _ in degs)
    poly = MixedPolynomial(tuple(m for dd, m in degs if dd == d))
    return poly, d


# ---------------------------------------------------------------------------
# Inner faces and IND validation of one diagram
# ---------------------------------------------------------------------------


def _support_on_edge(diagram: Diagram, e: Edge, supp: Sequence[Point]) -> Tuple[Point, ...]:
    return tuple(s for s in supp if radial_degree(e.weight, s) == e.d)


def inner_faces(diagram: Diagram, supp: Sequence[Point]) -> List[Face]:
    """Inner faces (edges and non-axis vertices) with their support points.

    Support points with no face carry empty support tuples; downstream the
    empty-face case fails IND.
    """
    faces: List[Face] = []
    verts = diagram.vertices
    for e in diagram.edges:
        a, b = verts[e.start], verts[e.end]
        faces.append(
            Face(
                "edge",
                _support_on_edge(diagram, e, supp),
                e.weight,
                e.d,
                touches_x=(a[1] == 0),
                touches_y=(b[0] == 0),
            )
        )
    for v in verts:
        if v[0] == 0 or v[1] == 0:
            continue  # axis vertices are not inner
        pts = tuple(s for s in supp if s == v)
        faces.append(Face("vertex", pts, None, None, False, False))
    return faces


def _face_poly(f: MixedPolynomial, face: Face) -> MixedPolynomial:
    if face.kind == "edge":
        keep = tuple(
            m
            for m in f.monomials
            if radial_degree(face.weight, m.support_point) == face.d
        )
    else:
        v = face.support_points[0] if face.support_points else None
        keep = tuple(
            m for m in f.monomials if v is not None and _pt(m.support_point) == v
        )
    return MixedPolynomial(keep)


def _strata(face: Face) -> List[Tuple[int, ...]]:
    strata: List[Tuple[int, ...]] = [(1, 2)]
    if face.touches_x:
        strata.append((1,))
    if face.touches_y:
        strata.append((2,))
    return strata


def check_ind(
    f: MixedPolynomial,
    diagram: Diagram,
    cache: Optional[Dict] = None,
) -> Tuple[bool, bool, List[FaceTest]]:
    """Test every inner face of the diagram for IND.

    Returns (passed, certified, report): passed means no test answered "no"
    and no inner face function was empty; certified means every test gave a
    certified answer.
    """
    from mixedlip import nondegen

    if cache is None:
        cache = {}
    supp = sorted(_pt(s) for s in f.support())
    passed = True
    certified = True
    report: List[FaceTest] = []
    for face in inner_faces(diagram, supp):
        fpoly = _face_poly(f, face)
        if fpoly.is_zero():
            # An inner face carrying no monomials has identically-zero face
            # function, whose zero set is everything: IND fails outright.
            tri = nondegen.Tri("no", None, "torus-trig", True)
            report.append(FaceTest(face, (1, 2), tri))
            passed = False
            continue
        for I in _strata(face):
            key = (fpoly, I)
            tri = cache.get(key)
            if tri is None:
                tri = nondegen.face_sing_empty(fpoly, set(I))
                cache[key] = tri
            report.append(FaceTest(face, I, tri))
            if tri.value == "no":
                passed = False
            if tri.value == "unknown":
                certified = False
            elif not tri.certified:
                certified = False
    return passed, certified, report


# ---------------------------------------------------------------------------
# Gamma_inn search
# ---------------------------------------------------------------------------


def _axis_weight_ok(diagram: Diagram, supp: Sequence[Point]) -> bool:
    """Axis condition: support-free axis => adjacent edge slope on the right side of 1."""
    if not diagram.edges:
        return False
    principal = [s for s in supp if diagram.boundary_contains(s)]
    x_has = any(s[1] == 0 for s in principal)
    y_has = any(s[0] == 0 for s in principal)
    if not x_has:
        # edge touching the x-axis is the first edge (largest x endpoint)
        if diagram.edges[0].weight.k > 1:
            return False
    if not y_has:
        if diagram.edges[-1].weight.k < 1:
            return False
    return True


def _supp_above(diagram: Diagram, supp: Sequence[Point]) -> bool:
    return all(diagram.region_contains(s) for s in supp)


def _slope_pool_x(v: Point, supp: Sequence[Point], k_adj: Optional[Fraction]) -> List[Fraction]:
    """Candidate slopes for an extension edge from v down to the x-axis."""
    pool = {Fraction(1)}
    if k_adj is not None:
        pool.add(k_adj)
    for s in supp:
        if s[0] > v[0] and s[1] < v[1]:
            pool.add((v[1] - s[1]) / (s[0] - v[0]))
    return sorted(
        k for k in pool if k > 0 and (k_adj is None or k <= k_adj)
    )


def _slope_pool_y(v: Point, supp: Sequence[Point], k_adj: Optional[Fraction]) -> List[Fraction]:
    """Candidate slopes for an extension edge from v up to the y-axis."""
    pool = {Fraction(1)}
    if k_adj is not None:
        pool.add(k_adj)
    for s in supp:
        if s[0] < v[0] and s[1] > v[1]:
            pool.add((s[1] - v[1]) / (v[0] - s[0]))
    return sorted(
        k for k in pool if k > 0 and (k_adj is None or k >= k_adj)
    )


def _candidate_vertex_sets(f: MixedPolynomial) -> List[Tuple[Point, ...]]:
    """Vertex sets of candidate C-diagrams: hull-vertex subsets + axis points."""
    supp = sorted(_pt(s) for s in f.support())
    gamma0 = newton_boundary(supp)
    verts = gamma0.vertices
    m = len(verts)
    out = set()
    # Cap subset enumeration for pathologically large hulls; fixtures are tiny.
    indices = list(range(m))
    max_drop = m if m <= 12 else 2
    subsets = []
    for r in range(max(1, m - max_drop), m + 1):
        subsets.extend(combinations(indices, r))
    for sub in subsets:
        kept = [verts[i] for i in sub]  # decreasing x
        # interior chain must stay strictly convex
        ok = True
        slopes = []
        for a, b in zip(kept, kept[1:]):
            if b[0] >= a[0] or b[1] <= a[1]:
                ok = False
                break
            slopes.append((b[1] - a[1]) / (a[0] - b[0]))
        if not ok or any(s2 <= s1 for s1, s2 in zip(slopes, slopes[1:])):
            continue
        first, last = kept[0], kept[-1]
        if first[1] == 0:
            x_opts: List[Optional[Fraction]] = [None]
        else:
            x_opts = list(_slope_pool_x(first, supp, slopes[0] if slopes else None))
        if last[0] == 0:
            y_opts: List[Optional[Fraction]] = [None]
        else:
            y_opts = list(_slope_pool_y(last, supp, slopes[-1] if slopes else None))
        for kx in x_opts:
            for ky in y_opts:
                if not slopes and kx is not None and ky is not None and kx > ky:
                    continue
                cand = list(kept)
                if kx is not None:
                    cand.append((first[0] + first[1] / kx, Fraction(0)))
                if ky is not None:
                    cand.append((Fraction(0), last[1] + ky * last[0]))
                out.add(tuple(sorted(cand, reverse=True)))
    return sorted(out)


def gamma_inn(f: MixedPolynomial) -> GammaInnResult:
    """Search for the region-maximal IND-compatible C-diagram of f."""
    if f.is_zero():
        raise ValueError("gamma_inn of the zero polynomial")
    supp = sorted(_pt(s) for s in f.support())
    gamma0 = newton_boundary(supp)
    cache: Dict = {}
    valid: List[Tuple[Diagram, bool, List[FaceTest]]] = []
    for cand_verts in _candidate_vertex_sets(f):
        diagram = newton_boundary(cand_verts)
        if not diagram.is_convenient():
            continue
        if not _supp_above(diagram, supp):
            continue
        if not _axis_weight_ok(diagram, supp):
            continue
        passed, certified, report = check_ind(f, diagram, cache)
        if passed:
            valid.append((diagram, certified, report))
    if not valid:
        # f is not IND (or could not be certified on any candidate): report
        # the failures on the plain Newton boundary.
        _, certified, report = check_ind(f, gamma0, cache)
        return GammaInnResult(
            gamma0,
            gamma0.weights_desc(),
            "heuristic",
            tuple(report),
            False,
            f,
        )

    def dominates(d1: Diagram, d2: Diagram) -> bool:
        return all(d1.region_contains(v) for v in d2.vertices)

    maximal = [
        (d, c, r)
        for d, c, r in valid
        if all(dominates(d, other) for other, _, _ in valid)
    ]
    ambiguous = False
    if not maximal:
        # No candidate dominates all others: pick deterministically, flag.
        ambiguous = True
        maximal = sorted(valid, key=lambda t: t[0].vertices)[:1]
    diagram, certified, report = maximal[0]
    status = "certified" if certified and not ambiguous else "heuristic"
    return GammaInnResult(
        diagram, diagram.weights_desc(), status, tuple(report), True, f
    )


# ---------------------------------------------------------------------------
# Semi-radial decomposition
# ---------------------------------------------------------------------------


def radial_decompose(f: MixedPolynomial) -> Tuple[SemiRadial, ...]:
    """All decompositions f = f_P + remainder with V(f_P) isolated-singular.

    Candidate weights are the edge weights of the inner boundary; for each,
    the principal part is the face function and the remainder sits strictly
    above degree d by construction.  Candidates whose isolated-singularity
    check is refuted are dropped; uncertified ones are flagged heuristic.
    """
    from mixedlip import nondegen

    g = gamma_inn(f)
    out: List[SemiRadial] = []
    for w in g.p_inn:
        principal, d = face_function(f, w)
        remainder = f - principal
        tris = [
            nondegen.face_sing_empty(principal, {1, 2}),
            nondegen.face_sing_empty(principal, {1}),
            nondegen.face_sing_empty(principal, {2}),
        ]
        if any(t.value == "no" for t in tris):
            continue
        heuristic = any(t.value == "unknown" or not t.certified for t in tris)
        out.append(SemiRadial(w, d, principal, remainder, w.k, heuristic))
    return tuple(out)
