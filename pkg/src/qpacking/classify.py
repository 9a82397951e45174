"""The decision procedure listing all quadratic packing polynomials of a sector.

With l = gcd(m-1, n) and u = (m-1)/l, a sector admits packing polynomials only
when n | l^2 (equivalently n | (m-1)^2).  The step constant k of any packing
polynomial then lies in {+-1, +-2, +-3} and must satisfy, sign included,

    u = k (mod n/l),   and   l^2/n = 4 when |k| = 2,   l^2/n = 3 when |k| = 3.

Each admissible k yields exactly one polynomial, the expanded closed form of
``packing_polynomial``.  Note that the two signs of k are admitted
independently: for n/l >= 3 a sector can carry a single packing polynomial
(9/4 carries only k = 1; its descending partner lives on the flipped sector
9/7), so the count per sector is 0, 1, 2, or 4.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import gcd

from .geometry import SectorSpec
from .poly import AlphaFormCoeffs, QuadPoly, packing_polynomial, to_alpha_form

K_ORDER = (1, -1, 2, -2, 3, -3)


@dataclass(frozen=True)
class SectorArithmetic:
    """Derived sector invariants driving the classification."""

    l: int
    n_over_l: int
    l2_over_n: Fraction
    divides_n_l2: bool
    m1_over_l_mod: int


@dataclass(frozen=True)
class ClassifiedQPP:
    """A packing polynomial together with its step constant and derived data."""

    sector: SectorSpec
    k: int
    poly: QuadPoly
    alpha_form: AlphaFormCoeffs
    constant_F: int


def sector_arithmetic(s: SectorSpec) -> SectorArithmetic:
    l = gcd(s.m - 1, s.n)
    v = s.n // l
    l2_over_n = Fraction(l * l, s.n)
    divides = l2_over_n.denominator == 1
    # n | l^2 and n | (m-1)^2 are equivalent; keep both routes computed.
    assert divides == ((s.m - 1) ** 2 % s.n == 0)
    assert gcd((s.m - 1) // l, v) == 1
    return SectorArithmetic(l, v, l2_over_n, divides, ((s.m - 1) // l) % v)


def forced_quadratic_coeffs(s: SectorSpec) -> tuple[int, int, int] | None:
    """The only possible (A, B, C) alpha coefficients: (n, 1-m, (m-1)^2/n).

    Returns None when n does not divide (m-1)^2, in which case the sector has
    no packing polynomial at all.
    """
    if (s.m - 1) ** 2 % s.n != 0:
        return None
    return (s.n, 1 - s.m, (s.m - 1) ** 2 // s.n)


def admissible_ks(s: SectorSpec) -> set[int]:
    """The step constants k for which the sector carries a packing polynomial."""
    ar = sector_arithmetic(s)
    if not ar.divides_n_l2:
        return set()
    u = (s.m - 1) // ar.l
    ks = set()
    for k in K_ORDER:
        if abs(k) == 2 and ar.l2_over_n != 4:
            continue
        if abs(k) == 3 and ar.l2_over_n != 3:
            continue
        if (k - u) % ar.n_over_l == 0:
            ks.add(k)
    return ks


def constant_term(s: SectorSpec, k: int) -> int:
    """Forced constant term (l^2/n)(|k|-1)(|k|+1)/12; equals |k| - 1 when k is admissible."""
    ar = sector_arithmetic(s)
    value = ar.l2_over_n * (abs(k) - 1) * (abs(k) + 1) / 12
    if value.denominator != 1:
        raise ValueError(f"constant term {value} is not an integer: k={k} is not admissible for {s}")
    if k in admissible_ks(s):
        assert value == abs(k) - 1
    return int(value)


def classify(s: SectorSpec) -> list[ClassifiedQPP]:
    """All packing polynomials of the sector, in the fixed order k = 1, -1, 2, -2, 3, -3."""
    ks = admissible_ks(s)
    out = []
    for k in K_ORDER:
        if k not in ks:
            continue
        poly = packing_polynomial(s, k)
        alpha = to_alpha_form(poly)
        f_const = constant_term(s, k)
        assert alpha.F == f_const == abs(k) - 1
        assert alpha.A == s.n and alpha.B == 1 - s.m
        out.append(ClassifiedQPP(s, k, poly, alpha, f_const))
    return out


def no_qpp_reason(s: SectorSpec) -> str | None:
    """Human-readable reason the sector has no packing polynomial, or None if it has some."""
    ar = sector_arithmetic(s)
    if not ar.divides_n_l2:
        return f"{s.n} does not divide ({s.m}-1)^2 = {(s.m - 1) ** 2}"
    if not admissible_ks(s):
        return "no admissible k: the congruence and l^2/n conditions all fail"
    return None


def canonical_sector(s: SectorSpec) -> SectorSpec:
    """Representative of the sector under the integral shears (x, y) -> (x + t y, y).

    Shearing moves the non-axis ray (m, n) to (m + t n, n); the canonical
    choice takes the smallest non-negative m, i.e. m mod n.
    """
    return SectorSpec(s.n, s.m % s.n)


def flipped_sector(s: SectorSpec) -> SectorSpec:
    """The sector whose skewed lattice is the vertical flip of this sector's.

    Its parameter m' satisfies m' - 1 = -(m - 1) (mod n); for sectors passing
    the divisibility test m' is automatically coprime to n.
    """
    return SectorSpec(s.n, (1 - s.m) % s.n + 1)
