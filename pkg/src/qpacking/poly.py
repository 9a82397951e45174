"""Exact bivariate quadratics and the closed forms of the sector classification.

A polynomial is stored by its six monomial coefficients (x^2, xy, y^2, x, y, 1),
all exact rationals; that basis is canonical and equality is coefficient-wise.
The alpha basis (A/2) x(x-1) + B xy + (C/2) y(y-1) + D x + E y + F, with all
six coefficients integral, is the form every packing polynomial must take; it
is provided as a conversion.
"""

from __future__ import annotations

import re
from dataclasses import dataclass, fields
from fractions import Fraction
from math import gcd
from typing import NamedTuple

from .geometry import SectorSpec, UnimodularMap, _frac


class NonIntegralCoefficient(ValueError):
    """An alpha-basis coefficient came out non-integral."""

    def __init__(self, monomial: str, value: Fraction):
        self.monomial = monomial
        self.value = value
        super().__init__(f"alpha-form coefficient at {monomial} is {value}, not an integer")


class NonConstantStepDifference(ValueError):
    """The difference along the staircase step vector is not a constant."""


@dataclass(frozen=True)
class QuadPoly:
    """Bivariate quadratic with exact rational coefficients (monomial basis)."""

    c_xx: Fraction
    c_xy: Fraction
    c_yy: Fraction
    c_x: Fraction
    c_y: Fraction
    c_0: Fraction

    def __post_init__(self) -> None:
        for f in fields(self):
            object.__setattr__(self, f.name, _frac(getattr(self, f.name)))

    def __call__(self, x, y) -> Fraction:
        return (
            self.c_xx * x * x + self.c_xy * x * y + self.c_yy * y * y
            + self.c_x * x + self.c_y * y + self.c_0
        )

    def evaluate(self, point) -> Fraction:
        x, y = point
        return self(x, y)

    def coefficients(self) -> tuple[Fraction, ...]:
        return (self.c_xx, self.c_xy, self.c_yy, self.c_x, self.c_y, self.c_0)

    def conjugate(self, m: UnimodularMap) -> "QuadPoly":
        """The polynomial q with q(m(v)) = p(v) for all v, i.e. p composed with m^-1."""
        inv = m.inverse()
        a, b, c, d = inv.a, inv.b, inv.c, inv.d
        return QuadPoly(
            self.c_xx * a * a + self.c_xy * a * c + self.c_yy * c * c,
            2 * self.c_xx * a * b + self.c_xy * (a * d + b * c) + 2 * self.c_yy * c * d,
            self.c_xx * b * b + self.c_xy * b * d + self.c_yy * d * d,
            self.c_x * a + self.c_y * c,
            self.c_x * b + self.c_y * d,
            self.c_0,
        )

    def __str__(self) -> str:
        return format_poly(self)


class AlphaFormCoeffs(NamedTuple):
    A: int
    B: int
    C: int
    D: int
    E: int
    F: int

    def to_poly(self) -> QuadPoly:
        return QuadPoly(
            Fraction(self.A, 2),
            Fraction(self.B),
            Fraction(self.C, 2),
            self.D - Fraction(self.A, 2),
            self.E - Fraction(self.C, 2),
            Fraction(self.F),
        )


def to_alpha_form(p: QuadPoly) -> AlphaFormCoeffs:
    """Exact change of basis into the alpha form; round-trips with ``to_poly``."""
    derived = (
        ("x^2", 2 * p.c_xx),
        ("x*y", p.c_xy),
        ("y^2", 2 * p.c_yy),
        ("x", p.c_x + p.c_xx),
        ("y", p.c_y + p.c_yy),
        ("1", p.c_0),
    )
    out = []
    for monomial, value in derived:
        if value.denominator != 1:
            raise NonIntegralCoefficient(monomial, value)
        out.append(int(value))
    return AlphaFormCoeffs(*out)


def step_difference(p: QuadPoly, s: SectorSpec) -> Fraction:
    """Constant difference of p across consecutive staircase steps of the sector.

    The step vector is ((m-1)/l, n/l); the difference must be independent of
    the step, which is asserted symbolically (the difference polynomial has to
    be degree 0), not sampled.
    """
    l = gcd(s.m - 1, s.n)
    dx = Fraction(s.m - 1, l)
    dy = Fraction(s.n, l)
    rem_x = 2 * p.c_xx * dx + p.c_xy * dy
    rem_y = p.c_xy * dx + 2 * p.c_yy * dy
    if rem_x != 0 or rem_y != 0:
        raise NonConstantStepDifference(
            f"step difference along ({dx}, {dy}) is not constant: "
            f"residual {rem_x}*x + {rem_y}*y"
        )
    return (
        p.c_xx * dx * dx + p.c_xy * dx * dy + p.c_yy * dy * dy
        + p.c_x * dx + p.c_y * dy
    )


def _check_k(k: int) -> None:
    if k not in (1, -1, 2, -2, 3, -3):
        raise ValueError(f"k must be one of +-1, +-2, +-3, got {k}")


def packing_polynomial(s: SectorSpec, k: int) -> QuadPoly:
    """Expanded closed form of the packing polynomial with step constant k.

    This is pure algebra: (n/2)(x - ((m-1)/n) y)(x - ((m-1)/n) y - kl/n)
    + x + ((kl - (m-1))/n) y + |k| - 1, with no admissibility check.
    """
    _check_k(k)
    n, m = s.n, s.m
    kl = k * gcd(m - 1, n)
    return QuadPoly(
        Fraction(n, 2),
        Fraction(1 - m),
        Fraction((m - 1) ** 2, 2 * n),
        1 - Fraction(kl, 2),
        Fraction(kl * (m - 1), 2 * n) + Fraction(kl - (m - 1), n),
        abs(k) - 1,
    )


def transformed_polynomial(s: SectorSpec, k: int, f_const: int) -> QuadPoly:
    """The skewed-lattice form (n/2) x (x - k/(n/l)) + x + (k/(n/l)) y + F.

    Defined only when n/l divides l; conjugating ``packing_polynomial`` by the
    sector's skew map yields exactly this with F = |k| - 1.
    """
    _check_k(k)
    l = gcd(s.m - 1, s.n)
    v = s.n // l
    if l % v != 0:
        raise ValueError(f"sector {s}: n/l = {v} does not divide l = {l}")
    kl = k * l
    return QuadPoly(Fraction(s.n, 2), 0, 0, 1 - Fraction(kl, 2), Fraction(kl, s.n), f_const)


def alpha_form_d(s: SectorSpec, k: int) -> int:
    """The forced alpha-basis x-coefficient D = 1 + (n - kl)/2 of a classified polynomial."""
    _check_k(k)
    l = gcd(s.m - 1, s.n)
    v = s.n // l
    if l % v != 0:
        raise ValueError(f"sector {s}: n/l = {v} does not divide l = {l}")
    value = Fraction(2 + s.n - k * l, 2)
    if value.denominator != 1:
        raise ValueError(f"forced x-coefficient {value} is not an integer for {s}, k={k}")
    d = int(value)
    assert Fraction(d) - Fraction(s.n, 2) == transformed_polynomial(s, k, 0).c_x
    return d


# -- canonical text rendering -------------------------------------------------

_MONOMIAL_FIELDS = (("x^2", "c_xx"), ("x*y", "c_xy"), ("y^2", "c_yy"), ("x", "c_x"), ("y", "c_y"), ("", "c_0"))


def _coeff_str(q: Fraction) -> str:
    return str(q.numerator) if q.denominator == 1 else f"{q.numerator}/{q.denominator}"


def _term_body(coeff: Fraction, monomial: str) -> str:
    mag = abs(coeff)
    if not monomial:
        return _coeff_str(mag)
    if mag == 1:
        return monomial
    return f"{_coeff_str(mag)}*{monomial}"


def _join_terms(parts: list[tuple[str, str]]) -> str:
    if not parts:
        return "0"
    sign, body = parts[0]
    text = ("-" if sign == "-" else "") + body
    for sign, body in parts[1:]:
        text += f" {sign} {body}"
    return text


def format_poly(p: QuadPoly) -> str:
    """Canonical rendering, monomials in the order x^2, xy, y^2, x, y, 1."""
    parts = []
    for monomial, field in _MONOMIAL_FIELDS:
        coeff = getattr(p, field)
        if coeff == 0:
            continue
        parts.append(("-" if coeff < 0 else "+", _term_body(coeff, monomial)))
    return _join_terms(parts)


_TERM_RE = re.compile(
    r"(?P<sign>[+-]?)(?:(?P<coeff>\d+(?:/\d+)?)(?:\*(?P<mono1>x\^2|x\*y|y\^2|x|y))?"
    r"|(?P<mono2>x\^2|x\*y|y\^2|x|y))$"
)
_FIELD_BY_MONO = {"x^2": "c_xx", "x*y": "c_xy", "y^2": "c_yy", "x": "c_x", "y": "c_y", "": "c_0"}


def parse_poly(text: str) -> QuadPoly:
    """Parse the canonical rendering back into a QuadPoly."""
    compact = text.replace(" ", "")
    if not compact:
        raise ValueError("empty polynomial string")
    if compact == "0":
        return QuadPoly(0, 0, 0, 0, 0, 0)
    coeffs = {field: Fraction(0) for _, field in _MONOMIAL_FIELDS}
    seen = set()
    for match in re.finditer(r"[+-]?[^+-]+", compact):
        term = match.group(0)
        m = _TERM_RE.match(term)
        if not m:
            raise ValueError(f"cannot parse term {term!r} at position {match.start()}")
        mono = m.group("mono1") or m.group("mono2") or ""
        coeff = Fraction(m.group("coeff")) if m.group("coeff") else Fraction(1)
        if m.group("sign") == "-":
            coeff = -coeff
        field = _FIELD_BY_MONO[mono]
        if field in seen:
            raise ValueError(f"monomial {mono or '1'} appears twice (term {term!r})")
        seen.add(field)
        coeffs[field] = coeff
    return QuadPoly(**coeffs)


def _linear_factor_str(y_coeff: Fraction, const: Fraction) -> str:
    parts = [("+", "x")]
    if y_coeff != 0:
        parts.append(("-" if y_coeff < 0 else "+", _term_body(y_coeff, "y")))
    if const != 0:
        parts.append(("-" if const < 0 else "+", _term_body(const, "")))
    body = _join_terms(parts)
    return body if len(parts) == 1 else f"({body})"


def format_factored(s: SectorSpec, k: int) -> str:
    """The classified polynomial in its factored layout.

    (n/2)*(x - ((m-1)/n) y)*(x - ((m-1)/n) y - kl/n) + x + ((kl-(m-1))/n) y + |k|-1
    with zero pieces dropped.
    """
    _check_k(k)
    n, m = s.n, s.m
    kl = k * gcd(m - 1, n)
    beta = Fraction(m - 1, n)
    scale = Fraction(n, 2)
    first = _linear_factor_str(-beta, Fraction(0))
    second = _linear_factor_str(-beta, -Fraction(kl, n))
    prefix = "" if scale == 1 else f"{_coeff_str(scale)}*"
    parts = [("+", f"{prefix}{first}*{second}"), ("+", "x")]
    y_coeff = Fraction(kl - (m - 1), n)
    if y_coeff != 0:
        parts.append(("-" if y_coeff < 0 else "+", _term_body(y_coeff, "y")))
    if abs(k) != 1:
        parts.append(("+", str(abs(k) - 1)))
    return _join_terms(parts)
