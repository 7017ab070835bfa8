"""Region maps of the weight plane b + q sigma, as text or SVG.

Columns are b, rows are q with q decreasing downwards.  Each cell carries
the region letter; with `at=(a, p)` it also shows dim H^{a + p sigma, b + q sigma}(R).
"""

from __future__ import annotations

from typing import Sequence
from xml.sax.saxutils import escape

from .degrees import MotivicBidegree, Region, region_of
from .motivic import motivic_dim

LETTER = {Region.POINT: "P", Region.BOREL: "B", Region.TILDE: "T", Region.ZERO: "."}
KAPPA2_WEIGHT = (-1, 1)
DEFAULT_RANGE = (-6, 6)

FILL = {
    Region.POINT: "#cfe3f5",
    Region.BOREL: "#f5dfc4",
    Region.TILDE: "#d7efd0",
    Region.ZERO: "#ffffff",
}


def _cells(b_range: Sequence[int], q_range: Sequence[int], at: tuple[int, int] | None):
    b_lo, b_hi = b_range
    q_lo, q_hi = q_range
    bs = list(range(b_lo, b_hi + 1))
    rows = []
    for q in range(q_hi, q_lo - 1, -1):
        row = []
        for b in bs:
            region = region_of(b, q)
            mark = LETTER[region]
            if (b, q) == KAPPA2_WEIGHT:
                mark = "K"
            dim = None
            if at is not None:
                dim = motivic_dim(MotivicBidegree(at[0], at[1], b, q))
            row.append((b, q, region, mark, dim))
        rows.append((q, row))
    return bs, rows


def region_map_ascii(b_range: Sequence[int] = DEFAULT_RANGE,
                     q_range: Sequence[int] = DEFAULT_RANGE,
                     at: tuple[int, int] | None = None) -> str:
    bs, rows = _cells(b_range, q_range, at)
    width = 5 if at is not None else 3
    lines = []
    title = "weights b + q sigma: columns b, rows q"
    if at is not None:
        title += f"; cells show region and dim H^(a + p sigma, b + q sigma) at a={at[0]}, p={at[1]}"
    lines.append(title)
    lines.append(" q\\b " + "".join(f"{b:>{width}}" for b in bs))
    for q, row in rows:
        cells = []
        for _, _, _, mark, dim in row:
            cells.append(f"{mark}{dim}" if dim is not None else mark)
        lines.append(f"{q:>4} " + "".join(f"{c:>{width}}" for c in cells))
    lines.append("")
    lines.append("P  PointRegion   b >= 0, b + q >= 0  (realization is an isomorphism)")
    lines.append("B  BorelRegion   b < 0, b + q >= 0   (Borel groups, iso for a <= 2b + 2)")
    lines.append("T  TildeRegion   b >= 1, b + q < 0   (cofiber groups, monomorphism)")
    lines.append(".  ZeroRegion    b <= 0, b + q < 0   (zero)")
    lines.append("K  the class kappa2 at (b, q) = (-1, 1), in BorelRegion")
    lines.append("boundaries: b = 0, b + q = 0, b = 1")
    return "\n".join(lines) + "\n"


def region_map_svg(b_range: Sequence[int] = DEFAULT_RANGE,
                   q_range: Sequence[int] = DEFAULT_RANGE,
                   at: tuple[int, int] | None = None,
                   cell: int = 28) -> str:
    bs, rows = _cells(b_range, q_range, at)
    margin = 40
    w = margin + cell * len(bs) + 10
    h = margin + cell * len(rows) + 10
    out = [
        f'<svg xmlns="http://www.w3.org/2000/svg" width="{w}" height="{h}" '
        f'viewBox="0 0 {w} {h}" font-family="monospace" font-size="11">',
        '<text x="4" y="14">q \\ b</text>',
    ]
    for i, b in enumerate(bs):
        x = margin + i * cell + cell // 2
        out.append(f'<text x="{x}" y="{margin - 8}" text-anchor="middle">{b}</text>')
    for j, (q, row) in enumerate(rows):
        y = margin + j * cell
        out.append(f'<text x="{margin - 6}" y="{y + cell // 2 + 4}" text-anchor="end">{q}</text>')
        for i, (b, _, region, mark, dim) in enumerate(row):
            x = margin + i * cell
            out.append(f'<rect x="{x}" y="{y}" width="{cell}" height="{cell}" '
                       f'fill="{FILL[region]}" stroke="#999" stroke-width="0.5">'
                       f'<title>b={b} q={q} {region.value}</title></rect>')
            label = mark if dim is None else f"{mark}{dim}"
            out.append(f'<text x="{x + cell // 2}" y="{y + cell // 2 + 4}" '
                       f'text-anchor="middle">{escape(label)}</text>')
    out.append("</svg>")
    return "\n".join(out) + "\n"
