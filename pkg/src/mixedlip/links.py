"""Numeric extraction of the links attached to the inner Newton faces.

For each inner face weight P_i the zero set of the face function, restricted
to a weighted torus, is a link in C x S^1 (u-side) or S^1 x C (v-side).  This
module tracks its strands over an angle grid, closes them into components via
the closure permutation, and records the data the decision engine needs:
component counts, strand multiplicities, angle projections, modulus ranges,
axis knots, and the fibre-circle degenerations where components sit over a
single base angle.
"""

from __future__ import annotations

import cmath
import math
from dataclasses import dataclass, field, replace
from typing import Dict, List, Optional, Sequence, Tuple

import numpy as np

from mixedlip.newton import GammaInnResult
from mixedlip.poly import MixedPolynomial, rescale

TWO_PI = 2.0 * math.pi

#: Sample count used when rendering a fibre-circle component.
FIBRE_SAMPLES = 256

#: Relative tolerance below which a leading coefficient counts as vanishing
#: (the corresponding strand would escape to infinity).
LEAD_TOL = 1e-9


class LinkError(Exception):
    """Raised when strand tracking fails for a face/side pair."""


@dataclass(frozen=True)
class SliceTermC:
    """One face-slice term c * w^a ~w^b e^{i beta t} with a float coefficient."""

    coeff: complex
    a: int
    b: int
    beta: int


@dataclass(frozen=True)
class LinkComponent:
    """One closed component of a face link.

    kind is "strand" (a braid strand closure), "axis" (the coordinate-axis
    circle u=0 or v=0), or "fibre-circle" (a whole circle of roots sitting
    over one base angle; such components are not braid strands).
    """

    face_index: int
    side: str  # "u-side" or "v-side"
    kind: str  # "strand" | "axis" | "fibre-circle"
    samples: Tuple[Tuple[complex, float], ...]  # (slice position, angle)
    strand_multiplicity: int
    proj_arcs: Tuple[Tuple[float, float], ...]  # arcs of covered angles
    min_abs: float
    max_abs: float
    axis: Optional[str] = None  # "L_u" / "L_v" for axis knots
    base_angle: Optional[float] = None  # fibre circles: the single angle

    def covers_circle(self) -> bool:
        """Whether the angle projection is the full circle."""
        return any(hi - lo >= TWO_PI - 1e-9 for lo, hi in self.proj_arcs)

    def proj_has_interior(self) -> bool:
        """Whether the angle projection contains an open arc."""
        return any(hi - lo > 1e-9 for lo, hi in self.proj_arcs)

    def proj_contains(self, angle: float, tol: float = 1e-9) -> bool:
        a = angle % TWO_PI
        for lo, hi in self.proj_arcs:
            if lo - tol <= a <= hi + tol:
                return True
            # arcs are stored in [0, 2pi]; test the wrapped angle as well
            if lo - tol <= a + TWO_PI <= hi + tol:
                return True
        return False

    def to_json(self) -> dict:
        return {
            "face": self.face_index,
            "side": self.side,
            "kind": self.kind,
            "multiplicity": self.strand_multiplicity,
            "samples": [
                [pos.real, pos.imag, angle] for pos, angle in self.samples
            ],
            "projArcs": [[lo, hi] for lo, hi in self.proj_arcs],
            "minAbs": self.min_abs,
            "maxAbs": self.max_abs,
            "axis": self.axis,
            "baseAngle": self.base_angle,
        }


@dataclass(frozen=True)
class LinkData:
    """All computed face links of one polynomial, grouped by face."""

    components: Tuple[LinkComponent, ...]
    M: Dict[int, int]  # per-face component counts (computed faces only)
    axis_knots: Dict[str, bool]  # presence of the L_u / L_v axis circles
    sides: Dict[int, str]  # canonical side used per face
    failures: Dict[int, str]  # face -> error message for failed faces

    def face_components(self, face_index: int) -> List[LinkComponent]:
        return [c for c in self.components if c.face_index == face_index]

    def to_json(self) -> dict:
        return {
            "components": [c.to_json() for c in self.components],
            "M": {str(k): v for k, v in sorted(self.M.items())},
            "axisKnots": dict(sorted(self.axis_knots.items())),
            "sides": {str(k): v for k, v in sorted(self.sides.items())},
            "failures": {str(k): v for k, v in sorted(self.failures.items())},
        }


@dataclass(frozen=True)
class LinkClass:
    """Coarse metric classification of the whole link of V(f)."""

    kind: str  # "empty" | "metric-1-braid-closure" | "non-tangent-Hopf-link" | "general"
    braid_axis: Optional[str] = None  # "L_u" / "L_v"
    flags: Tuple[str, ...] = ()

    def to_json(self) -> dict:
        return {
            "kind": self.kind,
            "braidAxis": self.braid_axis,
            "flags": list(self.flags),
        }


# ---------------------------------------------------------------------------
# Slice models
# ---------------------------------------------------------------------------


def slice_terms(face_poly: MixedPolynomial, P, side: str) -> List[SliceTermC]:
    """Principal slice terms of a face function for the given side."""
    sf = rescale(face_poly, P, side)
    terms = []
    for t in sf.principal_terms():
        terms.append(SliceTermC(complex(t.coeff), t.a, t.b, t.beta))
    return terms


def valid_side(g: GammaInnResult, face_index: int, side: str) -> bool:
    """Side convention: the braid parametrization exists on these faces."""
    n = g.n_faces
    if side == "u-side":
        return face_index < n or g.diagram.u_convenient
    if side == "v-side":
        return face_index > 1 or g.diagram.v_convenient
    raise ValueError(f"unknown side {side!r}")


def canonical_side(g: GammaInnResult, face_index: int) -> str:
    """Preferred side per face: u-side above slope one, v-side below."""
    k = g.weight(face_index).k
    if k > 1:
        return "u-side"
    if k < 1:
        return "v-side"
    if valid_side(g, face_index, "u-side"):
        return "u-side"
    return "v-side"


def _eval_terms(terms: Sequence[SliceTermC], w: complex, t: float) -> complex:
    wc = w.conjugate()
    total = 0j
    for term in terms:
        total += term.coeff * w**term.a * wc**term.b * cmath.exp(1j * term.beta * t)
    return total


# ---------------------------------------------------------------------------
# Strand tracking (holomorphic slices)
# ---------------------------------------------------------------------------


class _Collision(Exception):
    def __init__(self, t: float):
        self.t = t


def _holo_roots_grid(
    terms: Sequence[SliceTermC], grid_size: int
) -> np.ndarray:
    """Roots of a w-holomorphic slice at every grid angle, strand-matched.

    Returns an array of shape (grid_size + 1, M): row k holds the strand
    positions at t_k = 2 pi k / grid_size, with row k+1 matched to row k.
    """
    deg = max(t.a for t in terms)
    scale = sum(abs(t.coeff) for t in terms)
    angles = np.arange(grid_size + 1) * (TWO_PI / grid_size)
    # coefficient c_a(t) as a trig polynomial, evaluated on the whole grid
    coeffs = np.zeros((deg + 1, grid_size + 1), dtype=complex)
    for term in terms:
        coeffs[term.a] += term.coeff * np.exp(1j * term.beta * angles)
    lead = np.abs(coeffs[deg])
    if lead.min() < LEAD_TOL * scale:
        raise LinkError(
            "unbounded strand: leading slice coefficient vanishes at some angle"
        )
    rows = []
    prev = None
    for k in range(grid_size + 1):
        poly = coeffs[::-1, k]  # np.roots wants the highest power first
        roots = np.roots(poly)
        if prev is None:
            order = np.lexsort(
                (np.round(np.abs(roots), 12), np.round(np.angle(roots), 12))
            )
            cur = roots[order]
        else:
            cur = _match_roots(prev, roots, angles[k])
        rows.append(cur)
        prev = cur
    return np.asarray(rows)


def _match_roots(prev: np.ndarray, roots: np.ndarray, t: float) -> np.ndarray:
    """Match the new root set to the previous strand order (bijectively)."""
    m = len(prev)
    if len(roots) != m:
        raise LinkError(f"strand count changed at t={t:.6f}")
    if m == 1:
        return roots
    dist_prev = _min_pairwise(prev)
    tol = 0.25 * dist_prev
    if _min_pairwise(roots) < tol:
        raise _Collision(t)
    dmat = np.abs(prev[:, None] - roots[None, :])
    from scipy.optimize import linear_sum_assignment

    rows, cols = linear_sum_assignment(dmat)
    matched = np.empty_like(prev)
    matched[rows] = roots[cols]
    if np.abs(matched - prev).max() > 0.5 * dist_prev:
        # the nearest-neighbour step jumped too far: grid too coarse here
        raise _Collision(t)
    return matched


def _min_pairwise(points: np.ndarray) -> float:
    d = np.abs(points[:, None] - points[None, :])
    np.fill_diagonal(d, np.inf)
    return float(d.min())


def _components_from_strands(
    rows: np.ndarray, face_index: int, side: str, grid_size: int
) -> List[LinkComponent]:
    """Close tracked strands into components via the closure permutation."""
    m = rows.shape[1]
    first, last = rows[0], rows[-1]
    if m == 1:
        perm = [0]
    else:
        tol = 0.25 * _min_pairwise(first)
        perm = []
        for j in range(m):
            dists = np.abs(first - last[j])
            i = int(np.argmin(dists))
            if dists[i] > max(tol, 1e-9):
                raise LinkError("closure permutation did not resolve")
            perm.append(i)
        if sorted(perm) != list(range(m)):
            raise LinkError("closure permutation is not a bijection")
    seen = [False] * m
    comps = []
    angles = np.arange(grid_size) * (TWO_PI / grid_size)
    for j0 in range(m):
        if seen[j0]:
            continue
        cycle = []
        j = j0
        while not seen[j]:
            seen[j] = True
            cycle.append(j)
            j = perm[j]
        samples: List[Tuple[complex, float]] = []
        for j in cycle:
            samples.extend(
                (complex(rows[k, j]), float(angles[k])) for k in range(grid_size)
            )
        mods = [abs(p) for p, _ in samples]
        comps.append(
            LinkComponent(
                face_index=face_index,
                side=side,
                kind="strand",
                samples=tuple(samples),
                strand_multiplicity=len(cycle),
                proj_arcs=((0.0, TWO_PI),),
                min_abs=min(mods),
                max_abs=max(mods),
            )
        )
    comps.sort(
        key=lambda c: (round(cmath.phase(c.samples[0][0]) % TWO_PI, 9), c.min_abs)
    )
    return comps


# ---------------------------------------------------------------------------
# Fibre circles (equal-winding slices)
# ---------------------------------------------------------------------------


def _solve_fibre(
    terms: Sequence[SliceTermC], face_index: int, side: str, grid_size: int
) -> List[LinkComponent]:
    """Components of an equal-winding slice: circles over isolated angles.

    When all terms share the winding a - b = w, the slice factors through
    (|w|, t) and its zero set is a union of circles |w| = rho_* sitting over
    isolated base angles t_*.
    """
    betas = {t.beta for t in terms}
    if len(betas) == 1:
        raise LinkError(
            "degenerate slice: angle-independent equal-winding face (root torus)"
        )
    scale = sum(abs(t.coeff) for t in terms)
    degs = sorted({t.a + t.b for t in terms})
    top = degs[-1]

    def rho_poly(t: float) -> np.ndarray:
        c = np.zeros(top + 1, dtype=complex)
        for term in terms:
            c[top - (term.a + term.b)] += term.coeff * cmath.exp(1j * term.beta * t)
        return c

    def g_and_partials(rho: float, t: float) -> Tuple[complex, complex, complex]:
        g = 0j
        g_rho = 0j
        g_t = 0j
        for term in terms:
            m = term.a + term.b
            ph = cmath.exp(1j * term.beta * t)
            g += term.coeff * rho**m * ph
            if m > 0:
                g_rho += term.coeff * m * rho ** (m - 1) * ph
            g_t += term.coeff * rho**m * 1j * term.beta * ph
        return g, g_rho, g_t

    found: List[Tuple[float, float]] = []
    for k in range(grid_size):
        t0 = TWO_PI * k / grid_size
        for root in np.roots(rho_poly(t0)):
            if root.real <= 1e-9 or abs(root.imag) > 0.5 * abs(root):
                continue
            rho, t = float(root.real), t0
            ok = False
            for _ in range(60):
                g, g_rho, g_t = g_and_partials(rho, t)
                if abs(g) < 1e-12 * scale:
                    ok = True
                    break
                jac = np.array(
                    [[g_rho.real, g_t.real], [g_rho.imag, g_t.imag]], dtype=float
                )
                try:
                    step = np.linalg.solve(jac, np.array([g.real, g.imag]))
                except np.linalg.LinAlgError:
                    break
                rho -= step[0]
                t -= step[1]
                if rho <= 0 or abs(step[0]) + abs(step[1]) > 10.0:
                    break
            if not ok or rho <= 1e-9:
                continue
            t %= TWO_PI
            if not any(
                abs(rho - r) < 1e-6 and _angle_dist(t, a) < 1e-6 for r, a in found
            ):
                found.append((rho, t))
    found.sort(key=lambda ra: (round(ra[1], 9), round(ra[0], 9)))
    comps = []
    for rho, t_star in found:
        samples = tuple(
            (rho * cmath.exp(1j * TWO_PI * s / FIBRE_SAMPLES), t_star)
            for s in range(FIBRE_SAMPLES)
        )
        snapped = _snap_angle(t_star, grid_size)
        comps.append(
            LinkComponent(
                face_index=face_index,
                side=side,
                kind="fibre-circle",
                samples=samples,
                strand_multiplicity=0,
                proj_arcs=((snapped, snapped),),
                min_abs=rho,
                max_abs=rho,
                base_angle=t_star,
            )
        )
    return comps


def _angle_dist(a: float, b: float) -> float:
    d = abs(a - b) % TWO_PI
    return min(d, TWO_PI - d)


def _snap_angle(t: float, grid_size: int) -> float:
    step = TWO_PI / grid_size
    return (round(t / step) % grid_size) * step


# ---------------------------------------------------------------------------
# General mixed slices: seeded Newton continuation
# ---------------------------------------------------------------------------


def _newton_w(
    terms: Sequence[SliceTermC], w: complex, t: float, scale: float
) -> Optional[complex]:
    """Newton iteration on the slice in w at fixed angle (real 2x2 system)."""
    for _ in range(60):
        wc = w.conjugate()
        f = 0j
        f_w = 0j
        f_wc = 0j
        for term in terms:
            ph = cmath.exp(1j * term.beta * t)
            pa = w ** (term.a - 1) if term.a >= 1 else 0j
            pb = wc ** (term.b - 1) if term.b >= 1 else 0j
            f += term.coeff * w**term.a * wc**term.b * ph
            if term.a >= 1:
                f_w += term.coeff * term.a * pa * wc**term.b * ph
            if term.b >= 1:
                f_wc += term.coeff * term.b * w**term.a * pb * ph
        if abs(f) < 1e-12 * scale:
            return w
        # df = f_w dw + f_wc d~w as a real 2x2 system in (Re w, Im w)
        j11 = (f_w + f_wc).real
        j12 = (-(f_w - f_wc)).imag
        j21 = (f_w + f_wc).imag
        j22 = (f_w - f_wc).real
        det = j11 * j22 - j12 * j21
        if abs(det) < 1e-300:
            return None
        dx = (f.real * j22 - f.imag * j12) / det
        dy = (f.imag * j11 - f.real * j21) / det
        w = complex(w.real - dx, w.imag - dy)
        if not (abs(w) < 1e12):
            return None
    return None


def _seed_roots(
    terms: Sequence[SliceTermC], t: float, bound: float, scale: float
) -> List[complex]:
    roots: List[complex] = []
    radii = np.geomspace(bound * 1e-3, bound, 64)
    for r in radii:
        for j in range(64):
            w0 = r * cmath.exp(1j * TWO_PI * j / 64)
            w = _newton_w(terms, w0, t, scale)
            if w is None or abs(w) < 1e-8 or abs(w) > 4 * bound:
                continue
            if not any(abs(w - z) < 1e-6 * max(1.0, abs(z)) for z in roots):
                roots.append(w)
    roots.sort(key=lambda z: (round(cmath.phase(z) % TWO_PI, 9), round(abs(z), 9)))
    return roots


def _mixed_root_bound(terms: Sequence[SliceTermC]) -> float:
    degs = sorted({t.a + t.b for t in terms})
    top = degs[-1]
    lead = sum(abs(t.coeff) for t in terms if t.a + t.b == top)
    rest = sum(abs(t.coeff) for t in terms if t.a + t.b < top)
    return max(2.0, 2.0 * (1.0 + rest / lead))


def _solve_mixed(
    terms: Sequence[SliceTermC], face_index: int, side: str, grid_size: int
) -> List[LinkComponent]:
    """Track roots of a genuinely mixed slice by Newton continuation."""
    scale = sum(abs(t.coeff) for t in terms)
    bound = _mixed_root_bound(terms)
    start = _seed_roots(terms, 0.0, bound, scale)
    check = _seed_roots(terms, math.pi * 0.61803398875, bound, scale)
    if len(check) != len(start):
        raise LinkError(
            "strand birth/death detected: the mixed slice is not a braid"
        )
    if not start:
        return []
    rows = [np.array(start, dtype=complex)]
    step = TWO_PI / grid_size
    for k in range(1, grid_size + 1):
        t = k * step
        cur = []
        for w_prev in rows[-1]:
            w = _newton_w(terms, complex(w_prev), t, scale)
            if w is None or abs(w) < 1e-9:
                raise LinkError(f"strand tracking failed at t={t:.6f}")
            if abs(w) > 4 * bound:
                raise LinkError("unbounded strand during continuation")
            cur.append(w)
        cur_arr = np.array(cur, dtype=complex)
        if len(cur_arr) > 1:
            prev_d = _min_pairwise(rows[-1])
            if _min_pairwise(cur_arr) < 0.25 * prev_d:
                raise _Collision(t)
            if np.abs(cur_arr - rows[-1]).max() > 0.5 * prev_d:
                raise _Collision(t)
        rows.append(cur_arr)
    return _components_from_strands(
        np.asarray(rows), face_index, side, grid_size
    )


# ---------------------------------------------------------------------------
# Face link computation
# ---------------------------------------------------------------------------


def _axis_component(
    face_index: int, side: str, axis_name: str, grid_size: int
) -> LinkComponent:
    angles = [TWO_PI * k / grid_size for k in range(grid_size)]
    return LinkComponent(
        face_index=face_index,
        side=side,
        kind="axis",
        samples=tuple((0j, t) for t in angles),
        strand_multiplicity=1,
        proj_arcs=((0.0, TWO_PI),),
        min_abs=0.0,
        max_abs=0.0,
        axis=axis_name,
    )


def compute_link(
    f: MixedPolynomial,
    g: GammaInnResult,
    face_index: int,
    side: str,
    grid_size: int = 1024,
) -> List[LinkComponent]:
    """All link components of one face on one side.

    The slice equation is solved over an angle grid: w-holomorphic or
    w-antiholomorphic slices via simultaneous polynomial root finding,
    equal-winding slices via the fibre-circle solver, and general mixed
    slices via seeded Newton continuation.  Strand collisions trigger grid
    refinement up to 16x before failing.
    """
    if grid_size < 64:
        raise ValueError("grid_size must be at least 64")
    if not valid_side(g, face_index, side):
        raise LinkError(
            f"face {face_index} has no {side} braid parametrization"
        )
    P = g.weight(face_index)
    face_poly = g.face_poly(face_index)
    if face_poly.is_zero():
        return []
    terms = slice_terms(face_poly, P, side)

    comps: List[LinkComponent] = []
    # coordinate-axis root: w = 0 solves the slice for every angle
    p_min = min(t.a for t in terms)
    q_min = min(t.b for t in terms)
    has_axis = min(t.a + t.b for t in terms) >= 1
    n = g.n_faces
    axis_face = 1 if side == "u-side" else n
    if has_axis and face_index == axis_face:
        axis_name = "L_u" if side == "u-side" else "L_v"
        comps.append(_axis_component(face_index, side, axis_name, grid_size))
    # opposite-axis circle: the chart C x S^1 (resp. S^1 x C) cannot see the
    # axis circle of its S^1 factor, so the extreme face records it directly
    # from the face support when the face function vanishes on that axis.
    if side == "u-side" and face_index == n:
        if all(m.nu[1] + m.mu[1] >= 1 for m in face_poly.monomials):
            comps.append(_axis_component(face_index, "v-side", "L_v", grid_size))
    if side == "v-side" and face_index == 1:
        if all(m.nu[0] + m.mu[0] >= 1 for m in face_poly.monomials):
            comps.append(_axis_component(face_index, "u-side", "L_u", grid_size))
    reduced = [
        SliceTermC(t.coeff, t.a - p_min, t.b - q_min, t.beta) for t in terms
    ]

    pairs = {(t.a, t.b) for t in reduced}
    if len(pairs) == 1:
        # monomial-times-unit slice: no off-axis zeros unless the trig
        # coefficient vanishes somewhere (then the face is degenerate)
        coeff_min = min(
            abs(_eval_terms(reduced, 1.0 + 0j, TWO_PI * k / 512))
            for k in range(512)
        )
        if coeff_min < 1e-9 * sum(abs(t.coeff) for t in reduced):
            raise LinkError("degenerate slice: vanishing coefficient function")
        return comps

    attempts = 0
    gsize = grid_size
    while True:
        try:
            comps_off = _solve_off_axis(reduced, face_index, side, gsize)
            break
        except _Collision as col:
            attempts += 1
            if gsize >= 16 * grid_size:
                raise LinkError(f"degenerate braid at t={col.t:.6f}") from None
            gsize *= 2
    comps.extend(comps_off)
    return comps


def _solve_off_axis(
    reduced: Sequence[SliceTermC], face_index: int, side: str, grid_size: int
) -> List[LinkComponent]:
    if all(t.b == 0 for t in reduced):
        rows = _holo_roots_grid(reduced, grid_size)
        return _components_from_strands(rows, face_index, side, grid_size)
    if all(t.a == 0 for t in reduced):
        # conjugating the slice gives a holomorphic polynomial with the
        # identical zero set
        conj = [
            SliceTermC(t.coeff.conjugate(), t.b, t.a, -t.beta) for t in reduced
        ]
        rows = _holo_roots_grid(conj, grid_size)
        return _components_from_strands(rows, face_index, side, grid_size)
    windings = {t.a - t.b for t in reduced}
    if len(windings) == 1:
        return _solve_fibre(reduced, face_index, side, grid_size)
    return _solve_mixed(reduced, face_index, side, grid_size)


def compute_link_data(
    f: MixedPolynomial, g: GammaInnResult, grid_size: int = 1024
) -> LinkData:
    """Links of all inner faces on their canonical sides."""
    components: List[LinkComponent] = []
    counts: Dict[int, int] = {}
    sides: Dict[int, str] = {}
    failures: Dict[int, str] = {}
    axis_knots = {"L_u": False, "L_v": False}
    for i in range(1, g.n_faces + 1):
        side = canonical_side(g, i)
        sides[i] = side
        try:
            comps = compute_link(f, g, i, side, grid_size)
        except LinkError as exc:
            failures[i] = str(exc)
            continue
        components.extend(comps)
        counts[i] = len(comps)
        for c in comps:
            if c.axis is not None:
                axis_knots[c.axis] = True
    return LinkData(
        components=tuple(components),
        M=counts,
        axis_knots=axis_knots,
        sides=sides,
        failures=failures,
    )


# ---------------------------------------------------------------------------
# Gamma_inn-trueness and coarse link classification
# ---------------------------------------------------------------------------


def gamma_true(
    f: MixedPolynomial, g: GammaInnResult, link_data: LinkData
) -> Tuple[frozenset, frozenset]:
    """Indices of faces with nonempty links, and indices left unknown.

    Returns (I_f, unknown): faces whose link computation failed are placed
    in the unknown set and excluded from I_f.
    """
    true_set = set()
    unknown = set()
    for i in range(1, g.n_faces + 1):
        if i in link_data.failures:
            unknown.add(i)
        elif link_data.M.get(i, 0) > 0:
            true_set.add(i)
    return frozenset(true_set), frozenset(unknown)


def _piece_axis(c: LinkComponent, g: GammaInnResult) -> Optional[str]:
    """Which coordinate axis a single-strand piece is tangent to, if any.

    A strand on a face with k > 1 collapses onto {u=0} (its modulus scales
    like epsilon^k), an axis knot L_u lies inside {u=0}; mirrored for k < 1
    and L_v.  Pieces on k = 1 faces keep a genuine cone and return None.
    """
    if c.kind == "axis":
        return "u" if c.axis == "L_u" else "v"
    if c.kind != "strand" or c.strand_multiplicity != 1:
        return None
    k = g.weight(c.face_index).k
    if k > 1:
        return "u"
    if k < 1:
        return "v"
    return None


def classify_link(
    g: GammaInnResult,
    link_data: LinkData,
    cone_kind: Optional[str],
    hopf_contact_one: Optional[bool] = None,
) -> LinkClass:
    """Coarse metric class of the whole link.

    cone_kind is the tangent-cone tag from the invariants layer ("u-axis"
    for cone {u=0}, "v-axis" for cone {v=0}, anything else otherwise);
    hopf_contact_one reports whether a two-piece decomposition has exact
    contact order one (None = unknown).
    """
    if link_data.failures:
        return LinkClass(kind="general", flags=("unclassified",))
    comps = link_data.components
    if not comps:
        return LinkClass(kind="empty")
    single = len(comps) == 1 and comps[0].kind in ("strand", "axis")
    if single and comps[0].kind == "strand" and comps[0].strand_multiplicity != 1:
        single = False
    if single:
        if cone_kind == "u-axis":
            return LinkClass(kind="metric-1-braid-closure", braid_axis="L_v")
        if cone_kind == "v-axis":
            return LinkClass(kind="metric-1-braid-closure", braid_axis="L_u")
        if comps[0].kind == "axis":
            axis = comps[0].axis
            return LinkClass(
                kind="metric-1-braid-closure",
                braid_axis="L_v" if axis == "L_u" else "L_u",
            )
        return LinkClass(kind="general", flags=("unclassified",))
    # two metric 1-braid pieces, one tangent to each axis, with contact one
    if len(comps) == 2:
        axes = {_piece_axis(c, g) for c in comps}
        if axes == {"u", "v"}:
            if hopf_contact_one is True:
                return LinkClass(kind="non-tangent-Hopf-link")
            if hopf_contact_one is None:
                return LinkClass(kind="general", flags=("unclassified",))
    return LinkClass(kind="general")
