"""Exact representation of two-variable mixed polynomials.

A mixed polynomial is a finite sum of terms

    c * u^{nu1} * ~u^{mu1} * v^{nu2} * ~v^{mu2}

with nonzero Gaussian-rational coefficients c, where ~u, ~v denote the
complex conjugates of u and v.  Terms are kept in a canonical sorted order
and combined exactly, so polynomial identity tests are fully reliable.
Floating point only appears at evaluation boundaries.

The module also provides the weighted rescaling of a mixed polynomial into a
slice function: substituting (u, v) -> (r^k u, r e^{it}) (u-side) or
(u, v) -> (R e^{i phi}, R^{1/k} v) (v-side) and normalising by the weighted
degree yields a finite sum of terms c * w^a * ~w^b * e^{i beta t} * r^gamma
with exact rational exponents gamma >= 0.  The gamma = 0 part is the face
function restricted to the slice.
"""

from __future__ import annotations

import cmath
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Iterator, Optional, Sequence, Tuple, Union

Nat2 = Tuple[int, int]


class PolyError(ValueError):
    """Error raised for invalid polynomial input."""

    def __init__(self, message: str, position: Optional[int] = None):
        self.position = position
        if position is not None:
            message = f"{message} (at position {position})"
        super().__init__(message)


# ---------------------------------------------------------------------------
# Gaussian rationals
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class GaussianRational:
    """Exact complex number with rational real and imaginary parts."""

    re: Fraction
    im: Fraction

    @staticmethod
    def of(re: Union[int, Fraction] = 0, im: Union[int, Fraction] = 0) -> "GaussianRational":
        return GaussianRational(Fraction(re), Fraction(im))

    def __add__(self, other: "GaussianRational") -> "GaussianRational":
        return GaussianRational(self.re + other.re, self.im + other.im)

    def __sub__(self, other: "GaussianRational") -> "GaussianRational":
        return GaussianRational(self.re - other.re, self.im - other.im)

    def __neg__(self) -> "GaussianRational":
        return GaussianRational(-self.re, -self.im)

    def __mul__(self, other: "GaussianRational") -> "GaussianRational":
        return GaussianRational(
            self.re * other.re - self.im * other.im,
            self.re * other.im + self.im * other.re,
        )

    def __truediv__(self, other: "GaussianRational") -> "GaussianRational":
        n = other.re * other.re + other.im * other.im
        if n == 0:
            raise ZeroDivisionError("division by zero GaussianRational")
        return GaussianRational(
            (self.re * other.re + self.im * other.im) / n,
            (self.im * other.re - self.re * other.im) / n,
        )

    def conjugate(self) -> "GaussianRational":
        return GaussianRational(self.re, -self.im)

    def is_zero(self) -> bool:
        return self.re == 0 and self.im == 0

    def __complex__(self) -> complex:
        return complex(float(self.re), float(self.im))

    def __abs__(self) -> float:
        return abs(complex(self))


GR_ZERO = GaussianRational.of(0)
GR_ONE = GaussianRational.of(1)
GR_I = GaussianRational.of(0, 1)


# ---------------------------------------------------------------------------
# Monomials and polynomials
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class Monomial:
    """A single term c * u^{nu1} ~u^{mu1} v^{nu2} ~v^{mu2} with c != 0."""

    coeff: GaussianRational
    nu: Nat2
    mu: Nat2

    @property
    def support_point(self) -> Nat2:
        """Total exponent pair (nu1+mu1, nu2+mu2) of the term."""
        return (self.nu[0] + self.mu[0], self.nu[1] + self.mu[1])

    @property
    def total_degree(self) -> int:
        return sum(self.nu) + sum(self.mu)

    def key(self) -> Tuple[Nat2, Nat2]:
        return (self.nu, self.mu)


@dataclass(frozen=True)
class MixedPolynomial:
    """Canonical sorted sum of monomials, unique by exponent pattern.

    The zero polynomial (no terms) and terms of total degree zero are allowed
    at this level so that derivatives are closed under the representation;
    `parse` additionally enforces f(0) = 0 and nonzeroness for user input.
    """

    monomials: Tuple[Monomial, ...]

    @staticmethod
    def from_terms(terms: Iterable[Tuple[GaussianRational, Nat2, Nat2]]) -> "MixedPolynomial":
        acc: dict = {}
        for coeff, nu, mu in terms:
            key = (tuple(nu), tuple(mu))
            acc[key] = acc.get(key, GR_ZERO) + coeff
        monos = [
            Monomial(c, nu, mu)
            for (nu, mu), c in acc.items()
            if not c.is_zero()
        ]
        monos.sort(key=Monomial.key)
        return MixedPolynomial(tuple(monos))

    # -- structure ----------------------------------------------------------

    def is_zero(self) -> bool:
        return not self.monomials

    def __iter__(self) -> Iterator[Monomial]:
        return iter(self.monomials)

    def support(self) -> frozenset:
        return frozenset(m.support_point for m in self.monomials)

    def has_constant_term(self) -> bool:
        return any(m.total_degree == 0 for m in self.monomials)

    def is_holomorphic(self) -> bool:
        return all(m.mu == (0, 0) for m in self.monomials)

    def is_antiholomorphic(self) -> bool:
        return all(m.nu == (0, 0) for m in self.monomials)

    def is_u_semiholomorphic(self) -> bool:
        """No ~u appears (holomorphic in the first variable)."""
        return all(m.mu[0] == 0 for m in self.monomials)

    def is_ubar_semiholomorphic(self) -> bool:
        return all(m.nu[0] == 0 for m in self.monomials)

    def is_v_semiholomorphic(self) -> bool:
        return all(m.mu[1] == 0 for m in self.monomials)

    def is_vbar_semiholomorphic(self) -> bool:
        return all(m.nu[1] == 0 for m in self.monomials)

    def is_semiholomorphic(self) -> bool:
        """Holomorphic in u, ~u, v, or ~v (any of the four one-variable senses)."""
        return (
            self.is_u_semiholomorphic()
            or self.is_ubar_semiholomorphic()
            or self.is_v_semiholomorphic()
            or self.is_vbar_semiholomorphic()
        )

    # -- arithmetic ---------------------------------------------------------

    def __add__(self, other: "MixedPolynomial") -> "MixedPolynomial":
        return MixedPolynomial.from_terms(
            [(m.coeff, m.nu, m.mu) for m in self.monomials]
            + [(m.coeff, m.nu, m.mu) for m in other.monomials]
        )

    def __neg__(self) -> "MixedPolynomial":
        return MixedPolynomial(
            tuple(Monomial(-m.coeff, m.nu, m.mu) for m in self.monomials)
        )

    def __sub__(self, other: "MixedPolynomial") -> "MixedPolynomial":
        return self + (-other)

    def __mul__(self, other: "MixedPolynomial") -> "MixedPolynomial":
        terms = []
        for a in self.monomials:
            for b in other.monomials:
                terms.append(
                    (
                        a.coeff * b.coeff,
                        (a.nu[0] + b.nu[0], a.nu[1] + b.nu[1]),
                        (a.mu[0] + b.mu[0], a.mu[1] + b.mu[1]),
                    )
                )
        return MixedPolynomial.from_terms(terms)

    def scale(self, c: GaussianRational) -> "MixedPolynomial":
        return MixedPolynomial.from_terms(
            [(m.coeff * c, m.nu, m.mu) for m in self.monomials]
        )

    def __str__(self) -> str:
        return to_string(self)


ZERO = MixedPolynomial(())


def monomial(
    coeff: Union[GaussianRational, int, Fraction],
    nu1: int = 0,
    mu1: int = 0,
    nu2: int = 0,
    mu2: int = 0,
) -> MixedPolynomial:
    """Build a one-term polynomial c * u^nu1 ~u^mu1 v^nu2 ~v^mu2."""
    if not isinstance(coeff, GaussianRational):
        coeff = GaussianRational.of(coeff)
    return MixedPolynomial.from_terms([(coeff, (nu1, nu2), (mu1, mu2))])


U = monomial(1, nu1=1)
UBAR = monomial(1, mu1=1)
V = monomial(1, nu2=1)
VBAR = monomial(1, mu2=1)


# ---------------------------------------------------------------------------
# Parsing and printing
# ---------------------------------------------------------------------------
#
# Grammar:
#   poly     := ['+'|'-'] term (('+'|'-') term)*
#   term     := factor ('*'? factor)*
#   factor   := atom ('^' nat)?
#   atom     := 'u' | 'v' | '~u' | '~v' | 'i' | rational | '(' poly ')'
#   rational := int ('/' nat)?
# Whitespace is insignificant; juxtaposition multiplies.


class _Parser:
    def __init__(self, text: str):
        self.text = text
        self.pos = 0

    def error(self, message: str) -> PolyError:
        return PolyError(message, self.pos)

    def skip_ws(self) -> None:
        while self.pos < len(self.text) and self.text[self.pos].isspace():
            self.pos += 1

    def peek(self) -> str:
        self.skip_ws()
        return self.text[self.pos] if self.pos < len(self.text) else ""

    def parse(self) -> MixedPolynomial:
        result = self.parse_poly()
        self.skip_ws()
        if self.pos != len(self.text):
            raise self.error(f"unexpected character {self.text[self.pos]!r}")
        return result

    def parse_poly(self) -> MixedPolynomial:
        sign = 1
        ch = self.peek()
        if ch and ch in "+-":
            self.pos += 1
            sign = -1 if ch == "-" else 1
        acc = self.parse_term()
        if sign < 0:
            acc = -acc
        while True:
            ch = self.peek()
            if not ch or ch not in "+-":
                break
            self.pos += 1
            term = self.parse_term()
            acc = acc + (term if ch == "+" else -term)
        return acc

    def parse_term(self) -> MixedPolynomial:
        acc = self.parse_factor()
        while True:
            ch = self.peek()
            if ch == "*":
                self.pos += 1
                acc = acc * self.parse_factor()
            elif ch and (ch in "uv~i(" or ch.isdigit()):
                acc = acc * self.parse_factor()
            else:
                return acc

    def parse_factor(self) -> MixedPolynomial:
        base = self.parse_atom()
        if self.peek() == "^":
            self.pos += 1
            n = self.parse_nat()
            result = monomial(1)
            for _ in range(n):
                result = result * base
            return result
        return base

    def parse_atom(self) -> MixedPolynomial:
        ch = self.peek()
        if ch == "u":
            self.pos += 1
            return U
        if ch == "v":
            self.pos += 1
            return V
        if ch == "~":
            self.pos += 1
            nxt = self.text[self.pos] if self.pos < len(self.text) else ""
            if nxt == "u":
                self.pos += 1
                return UBAR
            if nxt == "v":
                self.pos += 1
                return VBAR
            raise self.error("expected 'u' or 'v' after '~'")
        if ch == "i":
            self.pos += 1
            return monomial(GR_I)
        if ch == "(":
            self.pos += 1
            inner = self.parse_poly()
            if self.peek() != ")":
                raise self.error("expected ')'")
            self.pos += 1
            return inner
        if ch.isdigit() or ch == "-":
            return monomial(GaussianRational.of(self.parse_rational()))
        raise self.error("expected a variable, number, 'i', or '('")

    def parse_nat(self) -> int:
        self.skip_ws()
        start = self.pos
        while self.pos < len(self.text) and self.text[self.pos].isdigit():
            self.pos += 1
        if self.pos == start:
            raise self.error("expected a natural number")
        return int(self.text[start : self.pos])

    def parse_rational(self) -> Fraction:
        self.skip_ws()
        neg = False
        if self.peek() == "-":
            self.pos += 1
            neg = True
        num = self.parse_nat()
        den = 1
        if self.peek() == "/":
            self.pos += 1
            den = self.parse_nat()
            if den == 0:
                raise self.error("zero denominator")
        value = Fraction(num, den)
        return -value if neg else value


def parse(text: str) -> MixedPolynomial:
    """Parse a mixed polynomial; reject zero polynomials and constant terms."""
    if not text.strip():
        raise PolyError("empty input")
    f = _Parser(text).parse()
    if f.is_zero():
        raise PolyError("zero polynomial")
    if f.has_constant_term():
        raise PolyError("constant term present (f(0) must be 0)")
    return f


def _format_rational(q: Fraction) -> str:
    return str(q)


def _format_coeff(c: GaussianRational) -> str:
    """Format a Gaussian rational as a parse-able coefficient string."""
    if c.im == 0:
        return _format_rational(c.re)
    if c.re == 0:
        if c.im == 1:
            return "i"
        if c.im == -1:
            return "-i"
        return f"{_format_rational(c.im)}*i"
    im = c.im
    op = "+" if im > 0 else "-"
    im_abs = abs(im)
    im_str = "i" if im_abs == 1 else f"{_format_rational(im_abs)}*i"
    return f"({_format_rational(c.re)} {op} {im_str})"


def to_string(f: MixedPolynomial) -> str:
    """Canonical string form; parse(to_string(f)) == f."""
    if f.is_zero():
        return "0"
    parts = []
    for m in f.monomials:
        vars_str = []
        for sym, e in (("u", m.nu[0]), ("~u", m.mu[0]), ("v", m.nu[1]), ("~v", m.mu[1])):
            if e == 1:
                vars_str.append(sym)
            elif e > 1:
                vars_str.append(f"{sym}^{e}")
        coeff_str = _format_coeff(m.coeff)
        if vars_str and coeff_str == "1":
            body = "*".join(vars_str)
        elif vars_str and coeff_str == "-1":
            body = "-" + "*".join(vars_str)
        else:
            body = "*".join([coeff_str] + vars_str)
        parts.append(body)
    out = parts[0]
    for p in parts[1:]:
        if p.startswith("-"):
            out += " - " + p[1:]
        else:
            out += " + " + p
    return out


# ---------------------------------------------------------------------------
# Evaluation and derivatives
# ---------------------------------------------------------------------------


def evaluate(f: MixedPolynomial, u: complex, v: complex) -> complex:
    """Evaluate f at (u, v) in floating point."""
    u = complex(u)
    v = complex(v)
    uc = u.conjugate()
    vc = v.conjugate()
    total = 0j
    for m in f.monomials:
        total += (
            complex(m.coeff)
            * u ** m.nu[0]
            * uc ** m.mu[0]
            * v ** m.nu[1]
            * vc ** m.mu[1]
        )
    return total


def evaluate_exact(f: MixedPolynomial, u: GaussianRational, v: GaussianRational) -> GaussianRational:
    """Evaluate f at Gaussian-rational arguments exactly."""
    uc = u.conjugate()
    vc = v.conjugate()
    total = GR_ZERO

    def power(base: GaussianRational, e: int) -> GaussianRational:
        out = GR_ONE
        for _ in range(e):
            out = out * base
        return out

    for m in f.monomials:
        term = m.coeff
        term = term * power(u, m.nu[0]) * power(uc, m.mu[0])
        term = term * power(v, m.nu[1]) * power(vc, m.mu[1])
        total = total + term
    return total


def evaluate_scale(f: MixedPolynomial, u: complex, v: complex) -> float:
    """Sum of term magnitudes at (u, v): the natural scale for residuals."""
    au, av = abs(complex(u)), abs(complex(v))
    total = 0.0
    for m in f.monomials:
        total += (
            abs(complex(m.coeff))
            * au ** (m.nu[0] + m.mu[0])
            * av ** (m.nu[1] + m.mu[1])
        )
    return total


_WIRTINGER_INDEX = {"u": 0, "~u": 1, "v": 2, "~v": 3}


def wirtinger(f: MixedPolynomial, var: str) -> MixedPolynomial:
    """Formal partial derivative treating u, ~u, v, ~v as independent."""
    if var not in _WIRTINGER_INDEX:
        raise ValueError(f"unknown variable {var!r}; expected one of u, ~u, v, ~v")
    idx = _WIRTINGER_INDEX[var]
    terms = []
    for m in f.monomials:
        exps = [m.nu[0], m.mu[0], m.nu[1], m.mu[1]]
        e = exps[idx]
        if e == 0:
            continue
        coeff = m.coeff * GaussianRational.of(e)
        exps[idx] = e - 1
        terms.append((coeff, (exps[0], exps[2]), (exps[1], exps[3])))
    return MixedPolynomial.from_terms(terms)


def conj_swap(f: MixedPolynomial) -> MixedPolynomial:
    """The polynomial g with g(u, v) = conj(f(u, v)) for all u, v.

    Obtained by exchanging (nu, mu) componentwise and conjugating coefficients.
    """
    return MixedPolynomial.from_terms(
        [(m.coeff.conjugate(), m.mu, m.nu) for m in f.monomials]
    )


def swap_uv(f: MixedPolynomial) -> MixedPolynomial:
    """Exchange the roles of u and v (and of ~u and ~v)."""
    return MixedPolynomial.from_terms(
        [
            (m.coeff, (m.nu[1], m.nu[0]), (m.mu[1], m.mu[0]))
            for m in f.monomials
        ]
    )


# ---------------------------------------------------------------------------
# Weighted rescaling into slice functions
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class SliceTerm:
    """One term c * w^a ~w^b e^{i beta t} r^gamma of a slice function."""

    coeff: GaussianRational
    a: int
    b: int
    beta: int
    gamma: Fraction


@dataclass(frozen=True)
class SliceFunction:
    """Symbolic weighted slice of a mixed polynomial.

    u-side: f(r^k u, r e^{it}) / r^{d/p2}  with terms in (u, ~u, e^{it}, r).
    v-side: f(R e^{i phi}, R^{1/k} v) / R^{d/p1}  with terms in (v, ~v, e^{i phi}, R).
    All radial exponents gamma are exact nonnegative rationals; the gamma = 0
    terms reproduce the face-function slice.
    """

    base: MixedPolynomial
    weight: Tuple[int, int]
    side: str  # "u-side" or "v-side"
    d: Fraction
    terms: Tuple[SliceTerm, ...]

    def principal_terms(self) -> Tuple[SliceTerm, ...]:
        """Terms with gamma = 0 (the r -> 0 limit)."""
        return tuple(t for t in self.terms if t.gamma == 0)


def _weight_pair(P) -> Tuple[int, int]:
    if hasattr(P, "p1"):
        return (int(P.p1), int(P.p2))
    p1, p2 = P
    return (int(p1), int(p2))


def radial_degree(P, point: Sequence) -> Fraction:
    """Weighted degree p1*x + p2*y of a support point."""
    p1, p2 = _weight_pair(P)
    return Fraction(p1) * Fraction(point[0]) + Fraction(p2) * Fraction(point[1])


def weighted_min_degree(f: MixedPolynomial, P) -> Fraction:
    """d(P; f): the minimal weighted degree over the support of f."""
    if f.is_zero():
        raise ValueError("weighted degree of the zero polynomial is undefined")
    return min(radial_degree(P, m.support_point) for m in f.monomials)


def rescale(f: MixedPolynomial, P, side: str) -> SliceFunction:
    """Weighted rescaling of f into a slice function for weight P."""
    if side not in ("u-side", "v-side"):
        raise ValueError(f"side must be 'u-side' or 'v-side', got {side!r}")
    p1, p2 = _weight_pair(P)
    if p1 <= 0 or p2 <= 0:
        raise ValueError("weight components must be positive")
    d = weighted_min_degree(f, (p1, p2))
    divisor = p2 if side == "u-side" else p1
    terms = []
    for m in f.monomials:
        rdeg = radial_degree((p1, p2), m.support_point)
        gamma = (rdeg - d) / divisor
        if side == "u-side":
            a, b = m.nu[0], m.mu[0]
            beta = m.nu[1] - m.mu[1]
        else:
            a, b = m.nu[1], m.mu[1]
            beta = m.nu[0] - m.mu[0]
        terms.append(SliceTerm(m.coeff, a, b, beta, gamma))
    terms.sort(key=lambda t: (t.gamma, t.a, t.b, t.beta))
    return SliceFunction(f, (p1, p2), side, d, tuple(terms))


def evaluate_slice(
    sf: SliceFunction, w: complex, r: float, t: float, principal_only: bool = False
) -> complex:
    """Evaluate the slice function at slice variable w, radius r, angle t."""
    w = complex(w)
    wc = w.conjugate()
    total = 0j
    terms = sf.principal_terms() if principal_only else sf.terms
    for term in terms:
        val = (
            complex(term.coeff)
            * w ** term.a
            * wc ** term.b
            * cmath.exp(1j * term.beta * t)
        )
        if term.gamma != 0:
            val *= r ** float(term.gamma)
        total += val
    return total
