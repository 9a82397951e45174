"""Shared test utilities and independent oracles.

The expansion helper here multiplies factored forms out with its own algebra,
so expected coefficient tuples in tests never flow through the code under
test.
"""

from __future__ import annotations

from fractions import Fraction
from math import gcd

from qpacking import QuadPoly, SectorSpec, classify, make_sector, packing_window_verify


def frac(value) -> Fraction:
    return Fraction(value)


def product_poly(scale, factor1, factor2, lin_x, lin_y, const) -> QuadPoly:
    """Independent expansion of scale*(x + a1 y + b1)(x + a2 y + b2) + lin_x x + lin_y y + const."""
    scale, lin_x, lin_y, const = map(Fraction, (scale, lin_x, lin_y, const))
    a1, b1 = map(Fraction, factor1)
    a2, b2 = map(Fraction, factor2)
    return QuadPoly(
        scale,
        scale * (a1 + a2),
        scale * a1 * a2,
        scale * (b1 + b2) + lin_x,
        scale * (a1 * b2 + a2 * b1) + lin_y,
        scale * b1 * b2 + const,
    )


def coprime_sectors(n_max: int, m_max: int, include_quadrant: bool = True) -> list[SectorSpec]:
    out = [make_sector(1, 0)] if include_quadrant else []
    out.extend(
        make_sector(n, m)
        for n in range(1, n_max + 1)
        for m in range(1, m_max + 1)
        if gcd(n, m) == 1
    )
    return out


def all_classified(n_max: int, m_max: int):
    for s in coprime_sectors(n_max, m_max):
        yield from classify(s)


def window_for_threshold(s: SectorSpec, polys, t_target: int, x_start: int = 8) -> int:
    """Smallest tried window size certifying every polynomial to at least t_target."""
    x = x_start
    for _ in range(40):
        certs = [packing_window_verify(p, s, x) for p in polys]
        if all(c.ok and c.threshold >= t_target for c in certs):
            return x
        x = max(x + 1, x * 14 // 10)
    raise AssertionError(f"no window reached threshold {t_target} on {s}")
