"""Staircase decomposition of sector lattices.

Every lattice point of the sector of slope n/m lies on exactly one line of
slope n/(m-1) (vertical for m = 1, anti-diagonal for the first quadrant).
With l = gcd(m-1, n), the i-th such line carries the i-th staircase: the
points with (m-1) y = n x - l i.  The skew map straightens staircase i to the
vertical line x = i/(n/l), where its steps are the y with
((m-1)/l) y = -i (mod n/l), spaced n/l apart.
"""

from __future__ import annotations

from fractions import Fraction
from math import gcd

from .geometry import SectorSpec


def _spacing(s: SectorSpec) -> tuple[int, int]:
    """(l, n/l) with l = gcd(m-1, n)."""
    l = gcd(s.m - 1, s.n)
    return l, s.n // l


def lattice_window(s: SectorSpec, x_max: int) -> list[tuple[int, int]]:
    """All lattice points of the sector with x <= x_max, in lexicographic order.

    For the first quadrant the window is the box 0 <= x, y <= x_max, so that
    enumeration stays finite.
    """
    if x_max < 0:
        raise ValueError(f"x_max must be >= 0, got {x_max}")
    pts = []
    for x in range(x_max + 1):
        y_top = x_max if s.m == 0 else (s.n * x) // s.m
        pts.extend((x, y) for y in range(y_top + 1))
    return pts


def staircase_index(s: SectorSpec, p: tuple[int, int]) -> int:
    """The unique i >= 0 with (m-1) y = n x - l i for a lattice point p."""
    x, y = p
    if not s.contains(x, y):
        raise ValueError(f"point {p} lies outside sector {s}")
    i, rem = divmod(s.n * x - (s.m - 1) * y, _spacing(s)[0])
    assert rem == 0, "staircase index is integral for every lattice point"
    assert i >= 0
    return i


def first_step_y(s: SectorSpec, i: int) -> int:
    """y-coordinate of the lowest step of staircase i.

    The unique y in [0, n/l) with ((m-1)/l) y = -i (mod n/l); identically 0
    for integral sectors, periodic in i with period n/l.
    """
    if i < 0:
        raise ValueError(f"staircase index must be >= 0, got {i}")
    l, v = _spacing(s)
    if v == 1:
        return 0
    u = (s.m - 1) // l
    return (-i * pow(u, -1, v)) % v


def staircase_points(s: SectorSpec, i: int, transformed: bool = False):
    """All steps of staircase i in ascending y.

    Transformed steps share x = i/(n/l) and are spaced (0, n/l) apart;
    untransformed steps are spaced ((m-1)/l, n/l) apart.
    """
    if i < 0:
        raise ValueError(f"staircase index must be >= 0, got {i}")
    l, v = _spacing(s)
    x_hat = Fraction(i, v)
    ys = range(first_step_y(s, i), i * l + 1, v)
    if transformed:
        return [(x_hat, y) for y in ys]
    out = []
    for y in ys:
        x = x_hat + Fraction(s.m - 1, s.n) * y
        assert x.denominator == 1, "untransformed steps are integer points"
        out.append((int(x), y))
    return out


def staircase_size(s: SectorSpec, i: int) -> int:
    """Number of steps on staircase i, by direct enumeration."""
    return len(staircase_points(s, i, transformed=True))


def staircase_size_formula(s: SectorSpec, i: int) -> Fraction:
    """The closed count (l^2/n) i + [n/l | i].

    Matches staircase_size whenever n divides l^2; without that hypothesis it
    need not even be an integer, so the enumerated count stays authoritative.
    """
    if i < 0:
        raise ValueError(f"staircase index must be >= 0, got {i}")
    l, v = _spacing(s)
    return Fraction(l * l, s.n) * i + (1 if i % v == 0 else 0)
