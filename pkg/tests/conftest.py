"""Shared fixture corpus: the worked examples used across the test suite.

Analyses are cached per (polynomial, grid) so the expensive link tracking
runs once per session.
"""

from __future__ import annotations

from functools import lru_cache

import pytest

from mixedlip.analysis import Analysis, analyze

# Five-monomial example with boundary vertices (8,0),(2,3),(1,5),(0,8) and
# inner region spanned by the weights (2,1) and (1,2).
EX_MAIN = "u^8 + u^2 v^3 + u^2 ~v^6 + u ~v^5 + v^4 ~v^4"

# Contact-data pair: five versus four inner faces, same slope multiset on
# the shared slopes but multiplicity 2 versus 1 at slope 3/2.
EX_CD_F = "u^14 + u^10 v^2 + u^7 v^2 ~v^2 + u^5 v^3 ~v^3 + u^3 v^5 ~v^4 + v^9 ~v^9"
EX_CD_G = "u^11 + u^7 v^2 + u^4 v^2 ~v^2 + u^2 v^3 ~v^3 + v^6 ~v^6"

# Product of two fibred pieces whose link components are fibre circles:
# (u^3 - v~v)(u^5 - v~v), plus its deformation and the deforming term.
EX_HORN = "u^8 - u^5 v ~v - u^3 v ~v + v^2 ~v^2"
EX_HORN_DEF = "u^8 - u^5 v ~v - (1+1i) u^3 v ~v + (1+1i) v^2 ~v^2"
EX_HORN_THETA = "i v^2 ~v^2 - i u^5 v ~v"

# Radial trio of Types I, II, III whose links are all metric 1-braid
# closures (omega = 2i).
EX_B1_F = "(u + v^2 ~v)(u ~u + v^4 ~v^2 + 2i v^3 ~v^3)"
EX_B1_G = "u (u ~u + v^2 + 2i v ~v)"
EX_B1_H = "v (u ~u + v^4 ~v^2 + 2i v^3 ~v^3)"

# Transverse-axes pair and a non-example for the Hopf classification.
EX_HOPF = "u v"
EX_HOPF_PERT = "u v + u^4 + v^4"
EX_NOT_HOPF = "u^2 - v^2"


@lru_cache(maxsize=None)
def cached_analysis(text: str, grid: int = 256) -> Analysis:
    return analyze(text, grid_size=grid)


@pytest.fixture(scope="session")
def ana():
    return cached_analysis
