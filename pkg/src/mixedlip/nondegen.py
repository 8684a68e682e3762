"""Singular-locus emptiness tests for face functions of mixed polynomials.

A point z of V(f) is singular exactly when the real Jacobian of
(Re f, Im f) drops rank, which for mixed polynomials is equivalent to
f(z) = 0 together with the existence of a unimodular alpha with
conj(f_u) = alpha f_ubar and conj(f_v) = alpha f_vbar.  Eliminating alpha
yields the nonnegative residual

    sigma = (|f_u|^2-|f_ubar|^2)^2 + (|f_v|^2-|f_vbar|^2)^2
            + |conj(f_u) f_vbar - f_ubar conj(f_v)|^2,

which vanishes exactly at the degenerate points.  All tests below decide
whether Sing(V(f)) meets a torus stratum (C*)^I:

  * I = {1} or {2}: radial homogeneity reduces to the unit circle of the
    surviving variable; the system becomes a trigonometric polynomial and is
    decided by dense sampling with a certified Lipschitz bound.
  * I = {1,2}: holomorphic/antiholomorphic inputs go through exact Groebner
    bases; semiholomorphic inputs through exact resultants plus a
    conjugate-reciprocal gcd that detects unit-circle roots; fully mixed
    inputs fall back to a deterministic two-chart grid search with
    Gauss-Newton polishing (answers there are certified only for "no",
    where a polished witness is produced).

Answers are three-valued and carry their method and certification status.
"""

from __future__ import annotations

import cmath
import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Dict, List, Optional, Sequence, Set, Tuple

import numpy as np
import sympy

from mixedlip.poly import (
    GaussianRational,
    MixedPolynomial,
    Monomial,
    conj_swap,
    evaluate,
    evaluate_scale,
    swap_uv,
    wirtinger,
)

WITNESS_TOL = 1e-8  # accepted residual for "no" witnesses
POLISH_TOL = 1e-12  # Newton/Gauss-Newton target
GRID_CAP = 2 ** 20  # total node cap for certification grids


@dataclass(frozen=True)
class Tri:
    """Three-valued answer with witness, method, and certification flag."""

    value: str  # "yes", "no", "unknown"
    witness: Optional[Tuple[complex, complex]]
    method: str  # holomorphic-exact, semiholomorphic, torus-trig, numeric-grid
    certified: bool


@dataclass(frozen=True)
class ObstructionClass:
    """Location of the trivialization obstruction of a radial polynomial."""

    locus: str  # origin, v-axis ({u=0}), u-axis ({v=0}), both-axes, unknown


YES_TRIG = lambda: Tri("yes", None, "torus-trig", True)  # noqa: E731


# ---------------------------------------------------------------------------
# Trigonometric restrictions (single circle variable)
# ---------------------------------------------------------------------------
#
# A restriction maps frequency -> complex coefficient: sum c_b e^{i b t}.

Trig = Dict[int, complex]


def _trig_add(trig: Trig, freq: int, c: complex) -> None:
    trig[freq] = trig.get(freq, 0j) + c
    if abs(trig[freq]) == 0.0:
        del trig[freq]


def _restrict_axis(f: MixedPolynomial, axis: int) -> Trig:
    """Restrict f to the stratum: axis 1 -> (e^{it}, 0), axis 2 -> (0, e^{it})."""
    trig: Trig = {}
    for m in f.monomials:
        if axis == 1:
            if m.nu[1] + m.mu[1] > 0:
                continue
            freq = m.nu[0] - m.mu[0]
        else:
            if m.nu[0] + m.mu[0] > 0:
                continue
            freq = m.nu[1] - m.mu[1]
        _trig_add(trig, freq, complex(m.coeff))
    return trig


def _trig_values(trig: Trig, t: np.ndarray) -> np.ndarray:
    out = np.zeros_like(t, dtype=complex)
    for freq, c in trig.items():
        out = out + c * np.exp(1j * freq * t)
    return out


def _trig_M(trig: Trig) -> float:
    return sum(abs(c) for c in trig.values())


def _trig_L(trig: Trig) -> float:
    return sum(abs(c) * abs(freq) for freq, c in trig.items())


def _sigma_values(
    fu: Trig, fub: Trig, fv: Trig, fvb: Trig, t: np.ndarray
) -> np.ndarray:
    a = _trig_values(fu, t)
    b = _trig_values(fub, t)
    c = _trig_values(fv, t)
    d = _trig_values(fvb, t)
    ab = np.abs(a) ** 2 - np.abs(b) ** 2
    cd = np.abs(c) ** 2 - np.abs(d) ** 2
    e = np.conj(a) * d - b * np.conj(c)
    return ab**2 + cd**2 + np.abs(e) ** 2


def _sigma_lipschitz(fu: Trig, fub: Trig, fv: Trig, fvb: Trig) -> float:
    """Upper bound for |d sigma / dt| on the circle."""
    Ma, La = _trig_M(fu), _trig_L(fu)
    Mb, Lb = _trig_M(fub), _trig_L(fub)
    Mc, Lc = _trig_M(fv), _trig_L(fv)
    Md, Ld = _trig_M(fvb), _trig_L(fvb)
    lip = 2 * (Ma**2 + Mb**2) * (2 * Ma * La + 2 * Mb * Lb)
    lip += 2 * (Mc**2 + Md**2) * (2 * Mc * Lc + 2 * Md * Ld)
    Me = Ma * Md + Mb * Mc
    Le = La * Md + Ma * Ld + Lb * Mc + Mb * Lc
    lip += 2 * Me * Le
    return lip


def _min_polish_1d(gfun, t0: float, halfwidth: float) -> Tuple[float, float]:
    """Deterministic local minimization of a smooth scalar function."""
    lo, hi = t0 - halfwidth, t0 + halfwidth
    # golden-section search; 80 iterations shrink the bracket below 1e-16
    invphi = (math.sqrt(5.0) - 1.0) / 2.0
    a, b = lo, hi
    c = b - invphi * (b - a)
    d = a + invphi * (b - a)
    fc, fd = gfun(c), gfun(d)
    for _ in range(120):
        if fc < fd:
            b, d, fd = d, c, fc
            c = b - invphi * (b - a)
            fc = gfun(c)
        else:
            a, c, fc = c, d, fd
            d = a + invphi * (b - a)
            fd = gfun(d)
    t = (a + b) / 2.0
    return t, gfun(t)


def _axis_stratum_test(f: MixedPolynomial, axis: int) -> Tri:
    """Does Sing(V(f)) meet (C*)^{axis} = one punctured coordinate line?

    Face functions are radially homogeneous, so the stratum reduces to its
    unit circle; the defining system restricts to trigonometric polynomials.
    """
    F = _restrict_axis(f, axis)
    Fu = _restrict_axis(wirtinger(f, "u"), axis)
    Fub = _restrict_axis(wirtinger(f, "~u"), axis)
    Fv = _restrict_axis(wirtinger(f, "v"), axis)
    Fvb = _restrict_axis(wirtinger(f, "~v"), axis)

    def witness_at(t: float) -> Tuple[complex, complex]:
        w = cmath.exp(1j * t)
        return (w, 0j) if axis == 1 else (0j, w)

    if not F and not Fu and not Fub and not Fv and not Fvb:
        # f and all derivatives vanish identically on the stratum: every
        # stratum point lies in V(f) with rank-zero differential.
        return Tri("no", witness_at(0.0), "torus-trig", True)
    if len(F) == 1:
        # single nonzero term: f never vanishes on the stratum
        return Tri("yes", None, "torus-trig", True)

    m_f = _trig_M(F)
    lip = 2 * m_f * _trig_L(F) + _sigma_lipschitz(Fu, Fub, Fv, Fvb)

    def gfun_arr(t: np.ndarray) -> np.ndarray:
        return np.abs(_trig_values(F, t)) ** 2 + _sigma_values(Fu, Fub, Fv, Fvb, t)

    def gfun(t: float) -> float:
        return float(gfun_arr(np.array([t]))[0])

    n = 4096
    while n <= GRID_CAP:
        ts = np.linspace(0.0, 2 * math.pi, n, endpoint=False)
        vals = gfun_arr(ts)
        idx = int(np.argmin(vals))
        gmin = float(vals[idx])
        h = 2 * math.pi / n
        if gmin < 1e-10:
            t_star, g_star = _min_polish_1d(gfun, float(ts[idx]), h)
            if g_star < WITNESS_TOL**2:
                return Tri("no", witness_at(t_star), "torus-trig", True)
        if gmin > lip * h / 2:
            return Tri("yes", None, "torus-trig", True)
        n *= 2
    return Tri("unknown", None, "torus-trig", False)


# ---------------------------------------------------------------------------
# Common-monomial stripping
# ---------------------------------------------------------------------------


def _strip_common_monomial(f: MixedPolynomial) -> MixedPolynomial:
    """Divide out the largest common monomial factor.

    On (C*)^2 the factor is a nonvanishing scalar, which changes neither the
    zero set nor the degeneracy conditions there.
    """
    if f.is_zero():
        return f
    a = min(m.nu[0] for m in f.monomials)
    b = min(m.mu[0] for m in f.monomials)
    c = min(m.nu[1] for m in f.monomials)
    d = min(m.mu[1] for m in f.monomials)
    if (a, b, c, d) == (0, 0, 0, 0):
        return f
    return MixedPolynomial(
        tuple(
            Monomial(
                m.coeff,
                (m.nu[0] - a, m.nu[1] - c),
                (m.mu[0] - b, m.mu[1] - d),
            )
            for m in f.monomials
        )
    )


# ---------------------------------------------------------------------------
# Single-variable torus cases (f independent of one complex variable)
# ---------------------------------------------------------------------------


def _pure_one_variable_test(f: MixedPolynomial, var_axis: int) -> Tri:
    """Sing test on (C*)^2 when f depends only on one variable pair.

    With f = f(v, ~v), every derivative in the missing pair vanishes, so a
    zero is singular iff additionally |f_v|^2 = |f_vbar|^2; the surviving
    variable reduces to its unit circle.
    """
    F = _restrict_axis(f, var_axis)
    if var_axis == 2:
        Fv = _restrict_axis(wirtinger(f, "v"), var_axis)
        Fvb = _restrict_axis(wirtinger(f, "~v"), var_axis)
    else:
        Fv = _restrict_axis(wirtinger(f, "u"), var_axis)
        Fvb = _restrict_axis(wirtinger(f, "~u"), var_axis)
    if len(F) == 1:
        return Tri("yes", None, "torus-trig", True)
    if not F:
        return Tri("no", (1 + 0j, 1 + 0j), "torus-trig", True)

    def gfun_arr(t: np.ndarray) -> np.ndarray:
        fvals = np.abs(_trig_values(F, t)) ** 2
        cd = np.abs(_trig_values(Fv, t)) ** 2 - np.abs(_trig_values(Fvb, t)) ** 2
        return fvals + cd**2

    def gfun(t: float) -> float:
        return float(gfun_arr(np.array([t]))[0])

    Mc, Lc = _trig_M(Fv), _trig_L(Fv)
    Md, Ld = _trig_M(Fvb), _trig_L(Fvb)
    lip = 2 * _trig_M(F) * _trig_L(F)
    lip += 2 * (Mc**2 + Md**2) * (2 * Mc * Lc + 2 * Md * Ld)
    n = 4096
    while n <= GRID_CAP:
        ts = np.linspace(0.0, 2 * math.pi, n, endpoint=False)
        vals = gfun_arr(ts)
        idx = int(np.argmin(vals))
        gmin = float(vals[idx])
        h = 2 * math.pi / n
        if gmin < 1e-10:
            t_star, g_star = _min_polish_1d(gfun, float(ts[idx]), h)
            if g_star < WITNESS_TOL**2:
                w = cmath.exp(1j * t_star)
                witness = (1 + 0j, w) if var_axis == 2 else (w, 1 + 0j)
                return Tri("no", witness, "torus-trig", True)
        if gmin > lip * h / 2:
            return Tri("yes", None, "torus-trig", True)
        n *= 2
    return Tri("unknown", None, "torus-trig", False)


# ---------------------------------------------------------------------------
# Exact sympy bridges
# ---------------------------------------------------------------------------

_U, _UB, _V, _VB = sympy.symbols("u ub v vb")


def _to_sympy(f: MixedPolynomial):
    expr = sympy.Integer(0)
    for m in f.monomials:
        c = sympy.Rational(m.coeff.re) + sympy.I * sympy.Rational(m.coeff.im)
        expr += (
            c
            * _U ** m.nu[0]
            * _UB ** m.mu[0]
            * _V ** m.nu[1]
            * _VB ** m.mu[1]
        )
    return sympy.expand(expr)


def _holomorphic_test(f: MixedPolynomial) -> Tri:
    """Exact Sing(V(f)) ∩ (C*)^2 = ∅ test for holomorphic f via Groebner."""
    F = _to_sympy(f)
    t = sympy.Symbol("t")
    fu = sympy.diff(F, _U)
    fv = sympy.diff(F, _V)
    ideal = [F, fu, fv, 1 - t * _U * _V]
    gb = sympy.groebner(ideal, _U, _V, t, order="lex", domain="QQ_I")
    if 1 in gb.exprs or sympy.Integer(1) in gb.exprs:
        return Tri("yes", None, "holomorphic-exact", True)
    # A common zero with uv != 0 exists; locate one numerically for the
    # witness via resultants.
    res = sympy.resultant(sympy.Poly(fu, _U), sympy.Poly(fv, _U), _U)
    witness = None
    try:
        vroots = sympy.Poly(res, _V).nroots(maxsteps=100)
    except sympy.PolynomialError:
        vroots = []
    for vr in vroots:
        v0 = complex(vr)
        if abs(v0) < 1e-9:
            continue
        coeffs = sympy.Poly(F.subs({_V: v0}), _U).all_coeffs()
        for ur in np.roots([complex(c) for c in coeffs]):
            u0 = complex(ur)
            if abs(u0) < 1e-9:
                continue
            if (
                abs(complex(fu.subs({_U: u0, _V: v0}))) < 1e-6
                and abs(complex(fv.subs({_U: u0, _V: v0}))) < 1e-6
            ):
                witness = (u0, v0)
                break
        if witness:
            break
    return Tri("no", witness, "holomorphic-exact", witness is not None)


def _conj_reciprocal(p: sympy.Poly) -> sympy.Poly:
    """v^deg * conj(p)(1/v): roots are the inverted conjugates of p's roots."""
    coeffs = p.all_coeffs()
    conj_coeffs = [sympy.conjugate(c) for c in coeffs]
    return sympy.Poly(list(reversed(conj_coeffs)), p.gen, domain="QQ_I")


def _semiholomorphic_test(f: MixedPolynomial) -> Tri:
    """Sing ∩ (C*)^2 test for u-semiholomorphic f (no ~u present).

    Criterion: f = f_u = |f_v|^2 - |f_vbar|^2 = 0.  Radial homogeneity pins
    |v| = 1, where vb = 1/v turns Res_u(f, f_u) into a Laurent polynomial;
    its unit-circle roots are exactly the roots it shares with its
    conjugate-reciprocal.
    """
    F = _to_sympy(f)
    fu = sympy.diff(F, _U)
    pF = sympy.Poly(F, _U)
    pFu = sympy.Poly(fu, _U)
    if pF.degree() == 0:
        raise ValueError("u-degree zero input should use the pure-variable path")
    res = sympy.expand(sympy.resultant(pF, pFu, _U))
    if res == 0:
        return _mixed_numeric_test(f)  # shared factor; fall back
    # clear vb via vb = 1/v
    res_v = sympy.expand(res.subs({_VB: 1 / _V}))
    res_v = sympy.together(res_v)
    num, _ = sympy.fraction(res_v)
    p = sympy.Poly(sympy.expand(num), _V, domain="QQ_I")
    # strip v^k factors: v = 0 is outside the torus
    while p.degree() > 0 and p.eval(0) == 0:
        p = sympy.Poly(sympy.div(p.as_expr(), _V, _V)[0], _V, domain="QQ_I")
    if p.degree() == 0:
        return Tri("yes", None, "semiholomorphic", True)
    g = sympy.gcd(p, _conj_reciprocal(p))
    if sympy.Poly(g, _V).degree() == 0:
        # no unit-circle root of the resultant: f and f_u share no zero
        # with |v| = 1, hence no singular point on the torus
        return Tri("yes", None, "semiholomorphic", True)
    # candidate angles from the numeric roots of the gcd on the circle
    groots = sympy.Poly(g, _V).nroots(maxsteps=200)
    candidates = []
    for vr in groots:
        v0 = complex(vr)
        if abs(abs(v0) - 1.0) < 1e-6:
            candidates.append(v0 / abs(v0))
    found = None
    for v0 in candidates:
        coeffs = sympy.Poly(F.subs({_V: v0, _VB: np.conj(v0)}), _U).all_coeffs()
        for ur in np.roots([complex(c) for c in coeffs]):
            u0 = complex(ur)
            if abs(u0) < 1e-9:
                continue
            z = _gauss_newton_polish(f, u0, v0, fix="v")
            if z is not None:
                found = z
                break
        if found:
            break
    if found is not None:
        return Tri("no", found, "semiholomorphic", True)
    if not candidates:
        return Tri("yes", None, "semiholomorphic", True)
    # circle roots of the resultant exist but no candidate satisfied the
    # remaining degeneracy equation numerically: report yes, uncertified
    return Tri("yes", None, "semiholomorphic", False)


# ---------------------------------------------------------------------------
# Numeric residual system and polishing
# ---------------------------------------------------------------------------


def _residual_vector(f: MixedPolynomial, derivs, u: complex, v: complex) -> np.ndarray:
    fu, fub, fv, fvb = (evaluate(d, u, v) for d in derivs)
    fval = evaluate(f, u, v)
    e = np.conj(fu) * fvb - fub * np.conj(fv)
    return np.array(
        [
            fval.real,
            fval.imag,
            abs(fu) ** 2 - abs(fub) ** 2,
            abs(fv) ** 2 - abs(fvb) ** 2,
            e.real,
            e.imag,
        ]
    )


def _scale_vector(f: MixedPolynomial, derivs, u: complex, v: complex) -> np.ndarray:
    su, sub, sv, svb = (evaluate_scale(d, u, v) for d in derivs)
    sf = evaluate_scale(f, u, v)
    se = su * svb + sub * sv
    eps = 1e-300
    return np.array(
        [sf + eps, sf + eps, su**2 + sub**2 + eps, sv**2 + svb**2 + eps, se + eps, se + eps]
    )


def _derivs(f: MixedPolynomial):
    return (
        wirtinger(f, "u"),
        wirtinger(f, "~u"),
        wirtinger(f, "v"),
        wirtinger(f, "~v"),
    )


def _gauss_newton_polish(
    f: MixedPolynomial, u0: complex, v0: complex, fix: str
) -> Optional[Tuple[complex, complex]]:
    """Polish a candidate degenerate point of V(f) on the torus.

    `fix` selects the chart: "v" keeps |v| = 1 (unknowns Re u, Im u, arg v),
    "u" keeps |u| = 1.  Returns the point if the relative residual of the
    full system drops below the witness tolerance.
    """
    derivs = _derivs(f)

    def unpack(x: np.ndarray) -> Tuple[complex, complex]:
        if fix == "v":
            return complex(x[0], x[1]), cmath.exp(1j * x[2])
        return cmath.exp(1j * x[2]), complex(x[0], x[1])

    if fix == "v":
        x = np.array([u0.real, u0.imag, cmath.phase(v0)])
    else:
        x = np.array([v0.real, v0.imag, cmath.phase(u0)])

    def rel_residual(x: np.ndarray) -> float:
        u, v = unpack(x)
        r = _residual_vector(f, derivs, u, v)
        s = _scale_vector(f, derivs, u, v)
        return float(np.linalg.norm(r / s))

    for _ in range(60):
        u, v = unpack(x)
        r = _residual_vector(f, derivs, u, v)
        s = _scale_vector(f, derivs, u, v)
        rn = np.linalg.norm(r / s)
        if rn < POLISH_TOL:
            break
        # finite-difference Jacobian of the scaled residual
        J = np.zeros((6, 3))
        hstep = 1e-7
        for j in range(3):
            xp = x.copy()
            xp[j] += hstep
            up, vp = unpack(xp)
            rp = _residual_vector(f, derivs, up, vp)
            J[:, j] = (rp / s - r / s) / hstep
        try:
            step, *_ = np.linalg.lstsq(J, -r / s, rcond=None)
        except np.linalg.LinAlgError:
            return None
        if not np.all(np.isfinite(step)):
            return None
        # damped update
        lam = 1.0
        base = rn
        for _ in range(20):
            xn = x + lam * step
            if rel_residual(xn) < base:
                x = xn
                break
            lam /= 2
        else:
            break
    u, v = unpack(x)
    r = _residual_vector(f, derivs, u, v)
    s = _scale_vector(f, derivs, u, v)
    if np.linalg.norm(r / s) < WITNESS_TOL and min(abs(u), abs(v)) > 1e-6:
        return (u, v)
    return None


def _mixed_numeric_test(f: MixedPolynomial) -> Tri:
    """Grid + polish search for degenerate torus zeros of a mixed polynomial.

    Any torus point can be scaled onto one of two compact charts
    (|u| = 1, |v| <= 1) or (|v| = 1, |u| <= 1); both are sampled on fixed
    polar grids and the best candidates are polished.  "no" answers carry a
    polished witness; "yes" answers here are heuristic.
    """
    derivs = _derivs(f)
    n_ang, n_rad = 24, 14
    angles = np.linspace(0.0, 2 * math.pi, n_ang, endpoint=False)
    radii = np.geomspace(1e-3, 1.0, n_rad)
    best: List[Tuple[float, complex, complex, str]] = []
    for chart in ("u", "v"):
        for rho in radii:
            for th in angles:
                for ph in angles:
                    if chart == "v":
                        u = rho * cmath.exp(1j * th)
                        v = cmath.exp(1j * ph)
                    else:
                        u = cmath.exp(1j * th)
                        v = rho * cmath.exp(1j * ph)
                    r = _residual_vector(f, derivs, u, v)
                    s = _scale_vector(f, derivs, u, v)
                    best.append((float(np.linalg.norm(r / s)), u, v, chart))
    best.sort(key=lambda t: t[0])
    for rn, u, v, chart in best[:10]:
        if rn > 1e-2:
            break
        z = _gauss_newton_polish(f, u, v, fix=chart)
        if z is not None:
            return Tri("no", z, "numeric-grid", True)
    if best[0][0] > 1e-4:
        return Tri("yes", None, "numeric-grid", False)
    return Tri("unknown", None, "numeric-grid", False)


# ---------------------------------------------------------------------------
# Public operations
# ---------------------------------------------------------------------------


def face_sing_empty(f_delta: MixedPolynomial, I: Set[int]) -> Tri:
    """Is Sing(V(f_delta)) disjoint from the torus stratum (C*)^I?

    Returns yes exactly when no singular point of the zero set lies in the
    stratum; value "no" always carries a polished witness point.
    """
    I = frozenset(I)
    if I == frozenset({1}):
        return _axis_stratum_test(f_delta, 1)
    if I == frozenset({2}):
        return _axis_stratum_test(f_delta, 2)
    if I != frozenset({1, 2}):
        raise ValueError(f"invalid stratum {sorted(I)!r}")

    g = _strip_common_monomial(f_delta)
    if g.is_zero():
        raise ValueError("zero face function")
    dep_u = any(m.nu[0] + m.mu[0] > 0 for m in g.monomials)
    dep_v = any(m.nu[1] + m.mu[1] > 0 for m in g.monomials)
    if not dep_u and not dep_v:
        # nonzero constant after stripping: no zeros on the torus at all
        return Tri("yes", None, "torus-trig", True)
    if not dep_u:
        return _pure_one_variable_test(g, 2)
    if not dep_v:
        return _pure_one_variable_test(g, 1)
    if g.is_holomorphic():
        return _holomorphic_test(g)
    if g.is_antiholomorphic():
        # conj(f) has the same zero set and the same degenerate points
        return _holomorphic_test(conj_swap(g))
    if g.is_u_semiholomorphic():
        return _semiholomorphic_test(g)
    if g.is_ubar_semiholomorphic():
        return _semiholomorphic_test(conj_swap(g))
    if g.is_v_semiholomorphic():
        t = _semiholomorphic_test(swap_uv(g))
        return _swap_witness(t)
    if g.is_vbar_semiholomorphic():
        t = _semiholomorphic_test(swap_uv(conj_swap(g)))
        return _swap_witness(t)
    return _mixed_numeric_test(g)


def _swap_witness(t: Tri) -> Tri:
    if t.witness is None:
        return t
    u, v = t.witness
    return Tri(t.value, (v, u), t.method, t.certified)


# ---------------------------------------------------------------------------
# Vertex-face niceness
# ---------------------------------------------------------------------------


def torus_zero_free(f_delta: MixedPolynomial) -> Tri:
    """Is V(f_delta) disjoint from (C*)^2, for a vertex face function?

    All monomials share one support point, so independent real scalings of u
    and v fix the modulus pair and the question reduces to the 2-torus,
    where f becomes a trigonometric polynomial h(theta, phi).
    """
    # distinct monomials can share a frequency pair (e.g. u~u and v~v both
    # give (0,0)); merge them exactly before dispatching on term count
    freq: dict = {}
    for m in f_delta.monomials:
        key = (m.nu[0] - m.mu[0], m.nu[1] - m.mu[1])
        if key in freq:
            freq[key] = freq[key] + m.coeff
        else:
            freq[key] = m.coeff
    exact = [
        (c, a, b) for (a, b), c in sorted(freq.items()) if not c.is_zero()
    ]
    terms = [(complex(c), a, b) for c, a, b in exact]
    if len(terms) == 0:
        return Tri("no", (1 + 0j, 1 + 0j), "torus-trig", True)
    if len(terms) == 1:
        return Tri("yes", None, "torus-trig", True)
    if len(terms) == 2:
        (c1, a1, b1), (c2, a2, b2) = exact
        n1 = c1.re * c1.re + c1.im * c1.im
        n2 = c2.re * c2.re + c2.im * c2.im
        if n1 != n2:
            return Tri("yes", None, "torus-trig", True)
        # |c1| = |c2|: solve e^{i((a1-a2)theta + (b1-b2)phi)} = -c2/c1
        da, db = a1 - a2, b1 - b2
        target = cmath.phase(-complex(c2) / complex(c1))
        if da != 0:
            theta, phi = target / da, 0.0
        else:
            theta, phi = 0.0, target / db
        return Tri(
            "no",
            (cmath.exp(1j * theta), cmath.exp(1j * phi)),
            "torus-trig",
            True,
        )

    M = sum(abs(c) for c, _, _ in terms)
    lip = 2 * M * sum(abs(c) * math.hypot(a, b) for c, a, b in terms)

    def habs2(theta: np.ndarray, phi: np.ndarray) -> np.ndarray:
        out = np.zeros(np.broadcast(theta, phi).shape, dtype=complex)
        for c, a, b in terms:
            out = out + c * np.exp(1j * (a * theta + b * phi))
        return np.abs(out) ** 2

    n = 64
    while n * n <= GRID_CAP:
        th = np.linspace(0.0, 2 * math.pi, n, endpoint=False)
        TH, PH = np.meshgrid(th, th, indexing="ij")
        vals = habs2(TH, PH)
        idx = np.unravel_index(int(np.argmin(vals)), vals.shape)
        gmin = float(vals[idx])
        h = 2 * math.pi / n
        if gmin < 1e-10:
            # local refinement around the minimum
            t0, p0 = float(TH[idx]), float(PH[idx])
            fine = np.linspace(-h, h, 41)
            TF, PF = np.meshgrid(t0 + fine, p0 + fine, indexing="ij")
            vf = habs2(TF, PF)
            jdx = np.unravel_index(int(np.argmin(vf)), vf.shape)
            if float(vf[jdx]) < WITNESS_TOL**2:
                return Tri(
                    "no",
                    (
                        cmath.exp(1j * float(TF[jdx])),
                        cmath.exp(1j * float(PF[jdx])),
                    ),
                    "torus-trig",
                    True,
                )
        if gmin > lip * h * math.sqrt(2.0) / 2:
            return Tri("yes", None, "torus-trig", True)
        n *= 2
    return Tri("unknown", None, "torus-trig", False)


def is_nice(f: MixedPolynomial, g) -> Tri:
    """Are all inner vertex face functions of the diagram zero-free on (C*)^2?

    Semiholomorphic polynomials short-circuit to yes.
    """
    if f.is_semiholomorphic():
        return Tri("yes", None, "semiholomorphic", True)
    from mixedlip.newton import inner_faces, _face_poly, _pt

    supp = sorted(_pt(s) for s in f.support())
    results: List[Tri] = []
    for face in inner_faces(g.diagram, supp):
        if face.kind != "vertex":
            continue
        fpoly = _face_poly(f, face)
        if fpoly.is_zero():
            return Tri("no", None, "torus-trig", True)
        results.append(torus_zero_free(fpoly))
    for t in results:
        if t.value == "no":
            return t
    if any(t.value == "unknown" for t in results):
        return Tri("unknown", None, "torus-trig", False)
    certified = all(t.certified for t in results)
    return Tri("yes", None, "torus-trig", certified)


# ---------------------------------------------------------------------------
# Obstruction locus of radial polynomials
# ---------------------------------------------------------------------------


def obstruction_locus(f_radial: MixedPolynomial, P) -> ObstructionClass:
    """Locus obstructing ambient trivialization, for a radial IND input.

    origin iff k = 1, or k > 1 with the support touching the x-axis, or
    k < 1 with the support touching the y-axis; otherwise the obstruction
    fills the corresponding coordinate plane.
    """
    from mixedlip.newton import face_function

    principal, _ = face_function(f_radial, P)
    if principal != f_radial:
        raise ValueError("input is not radial for the given weight")
    tests = [
        face_sing_empty(f_radial, {1, 2}),
        face_sing_empty(f_radial, {1}),
        face_sing_empty(f_radial, {2}),
    ]
    if any(t.value == "no" for t in tests):
        return ObstructionClass("unknown")
    supp = f_radial.support()
    u_conv = any(s[1] == 0 for s in supp)
    v_conv = any(s[0] == 0 for s in supp)
    k = Fraction(P.p1, P.p2) if hasattr(P, "p1") else Fraction(P[0], P[1])
    if k == 1:
        return ObstructionClass("origin")
    if k > 1:
        return ObstructionClass("origin" if u_conv else "u-axis")
    return ObstructionClass("origin" if v_conv else "v-axis")
