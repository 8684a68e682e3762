"""Newton-polygon-derived Lipschitz invariants of two-variable mixed polynomials.

A mixed polynomial is a complex-valued polynomial map f(u, v, ~u, ~v) with
f(0) = 0, where ~u, ~v denote complex conjugates.  This package computes the
combinatorial and metric invariants of the surface germ V(f) = f^{-1}(0) at
the origin that are derived from the Newton polygon:

  * support, Newton boundary, face functions and weights  (mixedlip.newton)
  * inner non-degeneracy and niceness certification       (mixedlip.nondegen)
  * numeric link/braid extraction over the circle         (mixedlip.links)
  * slopes, contact data, decision engine                 (mixedlip.invariants)
  * an independent arc-sampling contact oracle            (mixedlip.arcs)
  * the `mixedlip` command line front end                 (mixedlip.cli)
"""

from mixedlip.poly import MixedPolynomial, parse


def analyze(f, **kwargs):
    """Full invariant bundle of one polynomial; see mixedlip.analysis."""
    from mixedlip.analysis import analyze as _analyze

    return _analyze(f, **kwargs)


__all__ = ["MixedPolynomial", "parse", "analyze"]

__version__ = "0.1.0"
