"""Independent numeric contact oracle.

Real half-branches of V(f) are sampled by continuation toward the origin,
seeded from the face-function link components, and tangency/contact orders
are estimated by log-log regression of pairwise distances.  This layer is
deliberately independent of the exact contact criterion so the two can
cross-validate each other.
"""

from __future__ import annotations

import cmath
import math
from dataclasses import dataclass, field
from typing import Callable, List, Optional, Sequence, Tuple

import numpy as np

from mixedlip.links import LinkComponent, LinkData
from mixedlip.newton import GammaInnResult
from mixedlip.poly import MixedPolynomial, evaluate, evaluate_scale

#: Relative residual accepted for an arc point.
RESIDUAL_TOL = 1e-10

#: Distance below which two arcs count as identical (tord = infinity).
IDENTICAL_TOL = 1e-13

#: Default radius schedule: 40 geometric steps from 1e-1 down to 1e-4.
DEFAULT_RADII = tuple(np.geomspace(1e-1, 1e-4, 40).tolist())


@dataclass(frozen=True)
class Arc:
    """A sampled real half-branch: points of V(f) along decreasing radii."""

    radii: Tuple[float, ...]
    points: Tuple[Tuple[complex, complex], ...]
    component_ref: Tuple[int, int, float]  # (faceIndex, componentIdx, tau)


@dataclass(frozen=True)
class TordEstimate:
    """Regression estimate of a tangency exponent."""

    q_hat: float
    stderr: float
    n_points: int
    data: Tuple[Tuple[float, float], ...] = ()  # (radius, distance) pairs

    def to_json(self) -> dict:
        return {
            "qHat": self.q_hat,
            "stderr": self.stderr,
            "nPoints": self.n_points,
        }


class ArcError(Exception):
    """Raised when no arc can be sampled for a component."""


def _newton2(
    res: Callable[[float, float], complex],
    x1: float,
    x2: float,
    scale: Callable[[float, float], float],
) -> Optional[Tuple[float, float]]:
    """Damped Newton on a 2-real-unknown complex equation, numeric Jacobian."""
    for _ in range(80):
        f0 = res(x1, x2)
        s = max(scale(x1, x2), 1e-300)
        if abs(f0) < 1e-13 * s:
            return (x1, x2)
        h1 = 1e-7 * max(1.0, abs(x1))
        h2 = 1e-7 * max(1.0, abs(x2))
        d1 = (res(x1 + h1, x2) - f0) / h1
        d2 = (res(x1, x2 + h2) - f0) / h2
        jac = np.array([[d1.real, d2.real], [d1.imag, d2.imag]])
        try:
            step = np.linalg.solve(jac, np.array([f0.real, f0.imag]))
        except np.linalg.LinAlgError:
            return None
        lam = 1.0
        for _ in range(30):
            y1, y2 = x1 - lam * step[0], x2 - lam * step[1]
            if abs(res(y1, y2)) < abs(f0):
                x1, x2 = y1, y2
                break
            lam *= 0.5
        else:
            f1 = res(x1 - step[0], x2 - step[1])
            if abs(f1) < 1e-13 * s:
                return (x1 - step[0], x2 - step[1])
            return None
    f0 = res(x1, x2)
    if abs(f0) < 1e-12 * max(scale(x1, x2), 1e-300):
        return (x1, x2)
    return None


def _chart(
    f: MixedPolynomial, c: LinkComponent, k: float, tau: float
):
    """Chart for one component: unknowns -> (u, v) point at radius r.

    Returns (point(r, x1, x2), seed(r) -> (x1, x2), rescale(x, ratio)).
    """
    if c.kind == "fibre-circle":
        base = c.base_angle
        rho = c.min_abs
        if c.side == "v-side":
            # unknowns: base angle arg u, modulus |v|; arg v = tau fixed
            point = lambda r, x1, x2: (
                r * cmath.exp(1j * x1),
                x2 * cmath.exp(1j * tau),
            )
            seed = lambda r: (base, rho * r ** (1.0 / k))
            rescale = lambda x, ratio: (x[0], x[1] * ratio ** (1.0 / k))
        else:
            point = lambda r, x1, x2: (
                x2 * cmath.exp(1j * tau),
                r * cmath.exp(1j * x1),
            )
            seed = lambda r: (base, rho * r**k)
            rescale = lambda x, ratio: (x[0], x[1] * ratio**k)
        return point, seed, rescale
    if c.side == "u-side" or (c.kind == "axis" and c.axis == "L_u"):
        # unknowns: u in Cartesian coordinates; v = r e^{i tau} fixed
        point = lambda r, x1, x2: (complex(x1, x2), r * cmath.exp(1j * tau))
        w0 = _sample_at(c, tau)

        def seed(r: float) -> Tuple[float, float]:
            z = w0 * r**k
            return (z.real, z.imag)

        rescale = lambda x, ratio: (x[0] * ratio**k, x[1] * ratio**k)
        return point, seed, rescale
    # v-side strands and the L_v axis: u = r e^{i tau} fixed, solve v
    point = lambda r, x1, x2: (r * cmath.exp(1j * tau), complex(x1, x2))
    w0 = _sample_at(c, tau)

    def seed(r: float) -> Tuple[float, float]:
        z = w0 * r ** (1.0 / k)
        return (z.real, z.imag)

    rescale = lambda x, ratio: (x[0] * ratio ** (1.0 / k), x[1] * ratio ** (1.0 / k))
    return point, seed, rescale


def _sample_at(c: LinkComponent, tau: float) -> complex:
    """Component slice position at the sample angle nearest tau."""
    best = min(
        c.samples,
        key=lambda pa: min(
            abs(pa[1] - tau), abs(pa[1] - tau + 2 * math.pi), abs(pa[1] - tau - 2 * math.pi)
        ),
    )
    return best[0]


def sample_arc(
    f: MixedPolynomial,
    g: GammaInnResult,
    link_data: LinkData,
    comp_idx: int,
    tau: float,
    radii: Sequence[float] = DEFAULT_RADII,
    residual_tol: float = RESIDUAL_TOL,
) -> Arc:
    """Sample one half-branch by continuation toward the origin.

    Seeds at the largest radius from the face-function component and
    Newton-corrects on the full equation f = 0 at each smaller radius,
    holding the chart angle fixed.  Divergence truncates the schedule.
    """
    c = link_data.components[comp_idx]
    k = float(g.weight(c.face_index).k)
    point, seed, rescale = _chart(f, c, k, tau)
    radii = sorted(radii, reverse=True)
    if radii[0] > 1e-1 + 1e-12 or radii[-1] < 1e-5 - 1e-18:
        raise ValueError("radii must lie within [1e-5, 1e-1]")
    out_r: List[float] = []
    out_p: List[Tuple[complex, complex]] = []
    x = None
    prev_r = None
    for r in radii:
        guess = seed(r) if x is None else rescale(x, r / prev_r)
        res = lambda x1, x2: evaluate(f, *point(r, x1, x2))
        scale = lambda x1, x2: evaluate_scale(f, *point(r, x1, x2))
        sol = _newton2(res, guess[0], guess[1], scale)
        if sol is None:
            if x is None:
                # retry the cold start from the raw face prediction
                sol = _newton2(res, *seed(r), scale)
            if sol is None:
                break
        x = sol
        prev_r = r
        u, v = point(r, x[0], x[1])
        if abs(evaluate(f, u, v)) > residual_tol * max(
            evaluate_scale(f, u, v), 1e-300
        ):
            break
        out_r.append(r)
        out_p.append((u, v))
    if len(out_r) < 10:
        raise ArcError(
            f"arc sampling failed for component {comp_idx} at tau={tau:.4f}"
        )
    return Arc(tuple(out_r), tuple(out_p), (c.face_index, comp_idx, tau))


def estimate_tord(
    a: Arc, b: Arc, identical_tol: float = IDENTICAL_TOL
) -> TordEstimate:
    """Least-squares slope of log distance vs log radius for two arcs."""
    shared = sorted(set(a.radii) & set(b.radii), reverse=True)
    if len(shared) < 10:
        raise ArcError("arcs share fewer than 10 radii")
    pa = dict(zip(a.radii, a.points))
    pb = dict(zip(b.radii, b.points))
    data = []
    for r in shared:
        (u1, v1), (u2, v2) = pa[r], pb[r]
        d = math.hypot(abs(u1 - u2), abs(v1 - v2))
        t = 0.5 * (max(abs(u1), abs(v1)) + max(abs(u2), abs(v2)))
        data.append((t, d))
    if any(d < identical_tol for _, d in data):
        return TordEstimate(math.inf, 0.0, len(data), tuple(data))
    fit = data[2:]  # drop the two largest radii (transient contamination)
    xs = np.log([t for t, _ in fit])
    ys = np.log([d for _, d in fit])
    n = len(xs)
    slope, intercept = np.polyfit(xs, ys, 1)
    resid = ys - (slope * xs + intercept)
    denom = float(((xs - xs.mean()) ** 2).sum())
    stderr = math.sqrt(max(float((resid**2).sum()), 0.0) / max(n - 2, 1) / denom)
    return TordEstimate(float(slope), stderr, n, tuple(data))


def estimate_contact(
    f: MixedPolynomial,
    g: GammaInnResult,
    link_data: LinkData,
    idx1: int,
    idx2: int,
    n_pairs: int = 32,
    radii: Sequence[float] = DEFAULT_RADII,
    residual_tol: float = RESIDUAL_TOL,
    identical_tol: float = IDENTICAL_TOL,
    n_jobs: int = 1,
) -> TordEstimate:
    """Contact estimate: max tord over matched-angle arc pairs.

    Arc pairs share the angle parameter tau (the comparison arcs in the
    exact criterion are matched by equal angle, not by nearest point).
    Pairs are independent; n_jobs > 1 samples them on a thread pool, with
    results reduced in a fixed order so output stays deterministic.
    """

    def one(j: int) -> Optional[TordEstimate]:
        tau = 2 * math.pi * j / n_pairs
        try:
            a = sample_arc(f, g, link_data, idx1, tau, radii, residual_tol)
            b = sample_arc(f, g, link_data, idx2, tau, radii, residual_tol)
            return estimate_tord(a, b, identical_tol)
        except ArcError:
            return None

    if n_jobs > 1:
        from concurrent.futures import ThreadPoolExecutor

        with ThreadPoolExecutor(max_workers=n_jobs) as pool:
            results = list(pool.map(one, range(n_pairs)))
    else:
        results = [one(j) for j in range(n_pairs)]
    best: Optional[TordEstimate] = None
    for est in results:
        if est is not None and (best is None or est.q_hat > best.q_hat):
            best = est
    if best is None:
        raise ArcError(f"all {n_pairs} arc pairs failed")
    return best
