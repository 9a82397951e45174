"""Tabulating classifications over ranges of rational slopes.

One row per coprime (n, m) sector plus the first-quadrant row (1, 0), each
carrying the derived arithmetic, the admissible step constants, the polynomial
coefficient tuples and the canonical shear representative.  Serialization is
byte-reproducible: JSON keeps rationals as numerator/denominator strings,
CSV as "p/q" text.
"""

from __future__ import annotations

import csv
import io
import json
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from fractions import Fraction
from math import gcd

from .classify import canonical_sector, classify, sector_arithmetic
from .geometry import SectorSpec


@dataclass(frozen=True)
class AtlasRow:
    n: int
    m: int
    l: int
    n_over_l: int
    l2_over_n: Fraction
    qpp_count: int
    ks: tuple[int, ...]
    polynomials: tuple[tuple[Fraction, ...], ...]
    canonical: tuple[int, int]


def atlas_row(n: int, m: int) -> AtlasRow:
    s = SectorSpec(n, m)
    ar = sector_arithmetic(s)
    entries = classify(s)
    canon = canonical_sector(s)
    return AtlasRow(
        n=n,
        m=m,
        l=ar.l,
        n_over_l=ar.n_over_l,
        l2_over_n=ar.l2_over_n,
        qpp_count=len(entries),
        ks=tuple(e.k for e in entries),
        polynomials=tuple(e.poly.coefficients() for e in entries),
        canonical=(canon.n, canon.m),
    )


def _rows_chunk(sectors: list[tuple[int, int]]) -> list[AtlasRow]:
    return [atlas_row(n, m) for n, m in sectors]


def build_atlas(nmax: int, mmax: int, jobs: int = 1) -> list[AtlasRow]:
    """All rows for coprime (n, m) with n <= nmax, 1 <= m <= mmax, plus (1, 0)."""
    if nmax < 1 or mmax < 1:
        raise ValueError(f"nmax and mmax must be >= 1, got {nmax}, {mmax}")
    if jobs < 1:
        raise ValueError(f"jobs must be >= 1, got {jobs}")
    sectors = [(1, 0)] + [
        (n, m) for n in range(1, nmax + 1) for m in range(1, mmax + 1) if gcd(n, m) == 1
    ]
    sectors.sort()
    if jobs == 1:
        return _rows_chunk(sectors)
    step = max(1, -(-len(sectors) // (jobs * 4)))
    chunks = [sectors[i:i + step] for i in range(0, len(sectors), step)]
    with ProcessPoolExecutor(max_workers=jobs) as pool:
        parts = list(pool.map(_rows_chunk, chunks))
    return [row for part in parts for row in part]


def summary_counts(rows: list[AtlasRow]) -> dict[int, int]:
    counts: dict[int, int] = {}
    for row in rows:
        counts[row.qpp_count] = counts.get(row.qpp_count, 0) + 1
    return dict(sorted(counts.items()))


def summary_line(rows: list[AtlasRow]) -> str:
    counts = summary_counts(rows)
    by_count = " ".join(f"qpp{c}={n}" for c, n in counts.items())
    return f"sectors={len(rows)} {by_count}"


# -- serialization -------------------------------------------------------------


def rational_json(q: Fraction) -> dict[str, str]:
    return {"num": str(q.numerator), "den": str(q.denominator)}


def rational_str(q: Fraction) -> str:
    return str(q.numerator) if q.denominator == 1 else f"{q.numerator}/{q.denominator}"


def atlas_to_json(rows: list[AtlasRow], nmax: int, mmax: int) -> str:
    payload = {
        "nmax": nmax,
        "mmax": mmax,
        "rows": [
            {
                "n": row.n,
                "m": row.m,
                "l": row.l,
                "n_over_l": row.n_over_l,
                "l2_over_n": rational_json(row.l2_over_n),
                "qpp_count": row.qpp_count,
                "ks": list(row.ks),
                "polynomials": [[rational_json(c) for c in poly] for poly in row.polynomials],
                "canonical_sector": list(row.canonical),
            }
            for row in rows
        ],
        "summary": {"total": len(rows), "by_count": {str(c): n for c, n in summary_counts(rows).items()}},
    }
    return json.dumps(payload, indent=2) + "\n"


CSV_HEADER = ["n", "m", "l", "n_over_l", "l2_over_n", "qpp_count", "ks", "canonical_n", "canonical_m", "polynomials"]


def atlas_to_csv(rows: list[AtlasRow]) -> str:
    buffer = io.StringIO()
    writer = csv.writer(buffer, lineterminator="\n")
    writer.writerow(CSV_HEADER)
    for row in rows:
        polys = ";".join(" ".join(rational_str(c) for c in poly) for poly in row.polynomials)
        writer.writerow([
            row.n, row.m, row.l, row.n_over_l, rational_str(row.l2_over_n),
            row.qpp_count, " ".join(str(k) for k in row.ks),
            row.canonical[0], row.canonical[1], polys,
        ])
    buffer.write(f"# {summary_line(rows)}\n")
    return buffer.getvalue()
