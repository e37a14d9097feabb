"""Pictures of segment collections (hand-built SVG) and bound plots (matplotlib)."""

from __future__ import annotations

import os
from typing import Iterable, Optional, Sequence
from xml.sax.saxutils import escape

from .asymptotics import BoundReport
from .segments import RowCollection

UNIT = 24
MARGIN = 16

REGION_COLORS = {
    "rectangle": "#c0392b",
    "square": "#2980b9",
    "box": "#8e44ad",
    "strip": "#27ae60",
}


def canonical_marks(instance) -> list[tuple[int, int]]:
    """(level, x) of the leftmost allowed mark on every segment."""
    return [(s.level, lo) for s, (lo, _) in zip(instance.collection.segments, instance.mark_ranges)]


def _bounds(collection: RowCollection, marks, overlays: bool):
    xs, ys = [0], [0]
    for s in collection.segments:
        xs += [s.xl, s.xr]
        ys.append(s.level)
    for lvl, x in marks:
        xs.append(x)
        ys.append(lvl)
    if overlays:
        for r in collection.regions:
            xs += [r.x0, r.x1]
            ys += [r.y0, r.y1]
    return min(xs), max(xs), min(ys), max(ys)


def _num(v: float) -> str:
    return f"{v:.2f}".rstrip("0").rstrip(".")


def render_svg(
    collection: RowCollection,
    marks: Optional[Iterable[tuple[int, int]]] = None,
    overlays: bool = True,
    title: str = "",
    unit: int = UNIT,
) -> str:
    """SVG 1.1 drawing: one <line> per segment, one <circle> per mark,
    one dashed <rect> per region when ``overlays`` is set.  Output depends
    only on the arguments."""
    marks = sorted(marks or ())
    x0, x1, y0, y1 = _bounds(collection, marks, overlays)
    width = (x1 - x0) * unit + 2 * MARGIN
    height = (y1 - y0) * unit + 2 * MARGIN

    def px(x):
        return _num(MARGIN + (x - x0) * unit)

    def py(y):  # levels grow upwards
        return _num(MARGIN + (y1 - y) * unit)

    out = [
        '<?xml version="1.0" encoding="UTF-8" standalone="no"?>',
        '<!DOCTYPE svg PUBLIC "-//W3C//DTD SVG 1.1//EN" "http://www.w3.org/Graphics/SVG/1.1/DTD/svg11.dtd">',
        f'<svg xmlns="http://www.w3.org/2000/svg" version="1.1" width="{width}" height="{height}" '
        f'viewBox="0 0 {width} {height}">',
    ]
    if title:
        out.append(f"<title>{escape(title)}</title>")
    out.append('<g id="segments" stroke="#000000" stroke-width="3" stroke-linecap="round">')
    for s in collection.segments:
        out.append(f'<line x1="{px(s.xl)}" y1="{py(s.level)}" x2="{px(s.xr)}" y2="{py(s.level)}"/>')
    out.append("</g>")
    if overlays and collection.regions:
        out.append('<g id="regions" fill="none" stroke-width="1.5" stroke-dasharray="6,4">')
        for r in collection.regions:
            color = REGION_COLORS.get(r.kind, "#555555")
            out.append(
                f'<rect class="{escape(r.kind)}" x="{px(r.x0)}" y="{py(r.y1)}" '
                f'width="{_num((r.x1 - r.x0) * unit)}" height="{_num((r.y1 - r.y0) * unit)}" stroke="{color}"/>'
            )
        out.append("</g>")
    if marks:
        out.append('<g id="marks" fill="#e67e22" stroke="none">')
        for lvl, x in marks:
            out.append(f'<circle cx="{px(x)}" cy="{py(lvl)}" r="{_num(unit / 6)}"/>')
        out.append("</g>")
    out.append("</svg>")
    return "\n".join(out) + "\n"


_FIG_METADATA = {
    ".svg": {"Date": None, "Creator": None},
    ".png": {"Software": None},
    ".pdf": {"CreationDate": None, "ModDate": None, "Creator": None, "Producer": None},
}


def _save(fig, path: str) -> None:
    import matplotlib

    ext = os.path.splitext(path)[1].lower()
    if ext not in _FIG_METADATA:
        raise ValueError(f"unsupported figure format {ext!r}; use .svg, .png or .pdf")
    with matplotlib.rc_context({"svg.hashsalt": "tropicount", "svg.fonttype": "none"}):
        fig.savefig(path, metadata=_FIG_METADATA[ext])


def plot_bound(reports: Sequence[BoundReport], path: str) -> None:
    """Ratio L/(n ln n) against n, with the fitted curve and the target."""
    import matplotlib

    matplotlib.use("Agg")
    import matplotlib.pyplot as plt
    import numpy as np

    fig, ax = plt.subplots(figsize=(6.4, 4.2))
    for rep in reports:
        ns = np.array([r.n for r in rep.rows], dtype=float)
        ratios = np.array([r.ratio for r in rep.rows])
        label = f"{rep.family} {rep.params}"
        (line,) = ax.plot(ns, ratios, "o", label=label)
        ax.axhline(rep.target, color=line.get_color(), linestyle=":", linewidth=1)
        if not rep.insufficient and len(ns) > 1:
            grid = np.geomspace(ns.min(), ns.max(), 200)
            ax.plot(grid, rep.A - rep.B / np.log(grid), "-", color=line.get_color(), linewidth=1,
                    label=f"fit A={rep.A:.3f} (target {rep.target})")
    ax.set_xscale("log", base=2)
    ax.set_xlabel("n")
    ax.set_ylabel("log lower bound / (n ln n)")
    ax.legend(fontsize=8)
    fig.tight_layout()
    _save(fig, path)
    plt.close(fig)


def plot_collection(collection: RowCollection, path: str, marks=None, overlays: bool = True, title: str = "") -> None:
    """Matplotlib counterpart of ``render_svg`` for raster or PDF output."""
    import matplotlib

    matplotlib.use("Agg")
    import matplotlib.pyplot as plt
    from matplotlib.patches import Rectangle

    marks = sorted(marks or ())
    fig, ax = plt.subplots(figsize=(6, 6))
    for s in collection.segments:
        ax.plot([s.xl, s.xr], [s.level, s.level], color="black", linewidth=2.5, solid_capstyle="round")
    if overlays:
        for r in collection.regions:
            ax.add_patch(Rectangle((r.x0, r.y0), r.x1 - r.x0, r.y1 - r.y0, fill=False, linestyle="--",
                                   edgecolor=REGION_COLORS.get(r.kind, "#555555")))
    if marks:
        ax.plot([x for _, x in marks], [lvl for lvl, _ in marks], "o", color="#e67e22")
    ax.set_aspect("equal")
    ax.autoscale_view()
    if title:
        ax.set_title(title)
    fig.tight_layout()
    _save(fig, path)
    plt.close(fig)
