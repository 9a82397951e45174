"""Exact plane geometry for rational sectors.

Scalars are arbitrary-precision rationals (`fractions.Fraction`); nothing in
the core ever touches floating point.  A sector is the wedge between the
positive x-axis and the ray of slope n/m, and the maps built here (the
staircase-straightening skew, the vertical flip, and the general two-ray
reduction) are the exact determinant +-1 transformations that move packing
problems between sectors.

Points are plain ``(x, y)`` tuples: integer pairs on the original lattice,
``(Fraction, int)`` pairs on skewed lattices.
"""

from __future__ import annotations

from dataclasses import dataclass, fields
from fractions import Fraction
from math import floor, gcd

Rational = Fraction


def _frac(value) -> Fraction:
    if isinstance(value, float):
        raise TypeError(f"float {value!r} not allowed in exact arithmetic")
    return Fraction(value)


def extended_gcd(a: int, b: int) -> tuple[int, int, int]:
    """Return (g, x, y) with a*x + b*y = g = gcd(a, b) >= 0."""
    if a == 0:
        return (abs(b), 0, 1 if b >= 0 else -1)
    g, x, y = extended_gcd(b % a, a)
    return (g, y - (b // a) * x, x)


@dataclass(frozen=True)
class SectorSpec:
    """The sector {(x, y): 0 <= y <= (n/m) x} for coprime n >= 1, m >= 0.

    m = 0 encodes infinite slope, i.e. the first quadrant; coprimality
    (gcd(n, 0) = n) then forces n = 1.
    """

    n: int
    m: int

    def __post_init__(self) -> None:
        if self.n < 1:
            raise ValueError(f"sector needs n >= 1, got n={self.n}")
        if self.m < 0:
            raise ValueError(f"sector needs m >= 0, got m={self.m}")
        if gcd(self.n, self.m) != 1:
            raise ValueError(f"sector {self.n}/{self.m} not in lowest terms; use make_sector")

    @property
    def is_quadrant(self) -> bool:
        return self.m == 0

    def slope(self) -> Fraction | None:
        """Slope n/m, or None for the first quadrant (infinite slope)."""
        return None if self.m == 0 else Fraction(self.n, self.m)

    def contains(self, x, y) -> bool:
        """Exact membership test for the closed sector region."""
        if x < 0 or y < 0:
            return False
        if self.m == 0:
            return True
        return self.m * y <= self.n * x

    def __str__(self) -> str:
        return f"{self.n}/{self.m}"


def make_sector(n: int, m: int) -> SectorSpec:
    """Normalized sector of slope n/m; the fraction is reduced first."""
    if n < 1:
        raise ValueError(f"sector needs n >= 1, got n={n}")
    if m < 0:
        raise ValueError(f"sector needs m >= 0, got m={m}")
    g = gcd(n, m)
    return SectorSpec(n // g, m // g)


@dataclass(frozen=True)
class UnimodularMap:
    """2x2 matrix [[a, b], [c, d]] with determinant exactly +1 or -1.

    Entries may be non-integral rationals (the skew map has denominator n);
    whether a mapped point stays on a lattice is checked by callers, never
    assumed.
    """

    a: Fraction
    b: Fraction
    c: Fraction
    d: Fraction

    def __post_init__(self) -> None:
        for f in fields(self):
            object.__setattr__(self, f.name, _frac(getattr(self, f.name)))
        if self.determinant not in (1, -1):
            raise ValueError(f"matrix determinant {self.determinant} is not +-1")

    @property
    def determinant(self) -> Fraction:
        return self.a * self.d - self.b * self.c

    @property
    def is_integral(self) -> bool:
        return all(getattr(self, f.name).denominator == 1 for f in fields(self))

    @classmethod
    def identity(cls) -> "UnimodularMap":
        return cls(1, 0, 0, 1)

    def apply(self, point) -> tuple[Fraction, Fraction]:
        x, y = point
        return (self.a * x + self.b * y, self.c * x + self.d * y)

    def compose(self, other: "UnimodularMap") -> "UnimodularMap":
        """Matrix product self * other, i.e. apply ``other`` first."""
        return UnimodularMap(
            self.a * other.a + self.b * other.c,
            self.a * other.b + self.b * other.d,
            self.c * other.a + self.d * other.c,
            self.c * other.b + self.d * other.d,
        )

    __matmul__ = compose

    def inverse(self) -> "UnimodularMap":
        det = self.determinant
        return UnimodularMap(self.d / det, -self.b / det, -self.c / det, self.a / det)


def skew_map(s: SectorSpec) -> UnimodularMap:
    """The shear sending the sector of slope n/m onto the sector of slope n.

    It straightens every staircase of the lattice to a vertical line; for
    integral sectors (m = 1) it is the identity, and it carries the first
    quadrant onto the slope-1 sector.
    """
    return UnimodularMap(1, Fraction(-(s.m - 1), s.n), 0, 1)


def flip_map(n: int) -> UnimodularMap:
    """The involution (x, y) -> (x, n x - y) exchanging the two boundary rays of the slope-n sector."""
    if n < 1:
        raise ValueError(f"flip needs n >= 1, got {n}")
    return UnimodularMap(1, 0, n, -1)


def shear_map(t: int) -> UnimodularMap:
    """The integral shear (x, y) -> (x + t y, y)."""
    return UnimodularMap(1, t, 0, 1)


def x_axis_reflection() -> UnimodularMap:
    return UnimodularMap(1, 0, 0, -1)


def reduce_general_sector(omega1, omega2) -> tuple[UnimodularMap, SectorSpec | None]:
    """Reduce the cone spanned by omega1 and omega2 to a standard sector.

    omega1 = (r, s) must be a coprime integer pair with r >= 1.  The returned
    map has determinant +-1, sends omega1 to a positive multiple of (1, 0) and
    omega2 into the first quadrant; a reflection and an integral shear are
    composed in only when needed.  The second value is the sector spanned by
    the two image rays, or None when omega2 was given inexactly (floats), in
    which case no exact slope exists to report.
    """
    r, s = omega1
    if not (isinstance(r, int) and isinstance(s, int)):
        raise TypeError("omega1 must be a pair of integers")
    if r < 1:
        raise ValueError(f"omega1 must have positive x-coordinate, got {omega1}")
    g, a, b = extended_gcd(r, s)
    if g != 1:
        raise ValueError(f"omega1 coordinates must be coprime, got {omega1}")

    exact = not (isinstance(omega2[0], float) or isinstance(omega2[1], float))
    total = UnimodularMap(a, b, -s, r)
    if exact:
        vx, vy = total.apply((_frac(omega2[0]), _frac(omega2[1])))
    else:
        vx = a * omega2[0] + b * omega2[1]
        vy = -s * omega2[0] + r * omega2[1]

    if vy == 0:
        raise ValueError(f"omega2 {omega2} is parallel to omega1 {omega1}")
    if vy < 0:
        total = x_axis_reflection() @ total
        vy = -vy
    if vx < 0:
        t = -floor(vx / vy)
        total = shear_map(int(t)) @ total
        vx = vx + t * vy

    if not exact:
        return total, None
    if vx == 0:
        return total, SectorSpec(1, 0)
    slope = vy / vx
    return total, make_sector(slope.numerator, slope.denominator)
