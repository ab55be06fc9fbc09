"""Views of the peripheral complex: JSON window, ASCII grid, SVG.

Edges are drawn with the parity orientation (pointing from its even
vertex to its odd vertex) and carry the unsigned generator index of the
incident square's side.  The SVG form can overlay walked paths, which
is the quickest way to debug a sign-convention mistake by eye.
"""

from __future__ import annotations

from .peripheral import PeripheralComplex, _parity
from .words import Word


def block_json(c: PeripheralComplex) -> list:
    return [
        {"bottom": s.bottom, "right": s.right, "top": s.top, "left": s.left}
        for s in c.block.placed
    ]


def complex_window(c: PeripheralComplex, x0: int, y0: int, cols: int, rows: int) -> dict:
    """JSON-ready description of a rectangular window of cells."""
    if cols <= 0 or rows <= 0:
        raise ValueError("window must have positive extent")
    cells = []
    for y in range(y0, y0 + rows):
        for x in range(x0, x0 + cols):
            s = c.cell(x, y)
            cells.append(
                {
                    "x": x,
                    "y": y,
                    "bottom": s.bottom,
                    "right": s.right,
                    "top": s.top,
                    "left": s.left,
                }
            )
    return {
        "n": c.n,
        "squares": block_json(c),
        "window": {"x0": x0, "y0": y0, "x1": x0 + cols, "y1": y0 + rows, "cells": cells},
    }


def _h_arrow(x: int, y: int) -> str:
    # edge (x,y)-(x+1,y) points toward its odd endpoint
    return ">" if _parity(x + 1, y) == 1 else "<"


def _v_arrow(x: int, y: int) -> str:
    # edge (x,y)-(x,y+1)
    return "^" if _parity(x, y + 1) == 1 else "v"


def render_text(c: PeripheralComplex, x0: int, y0: int, cols: int, rows: int) -> str:
    """ASCII grid of the window; rows printed top-down."""
    width = max(
        len(str(lbl))
        for s in c.block.placed
        for lbl in (s.bottom, s.left)
    )
    cellw = width + 3
    lines = []
    for y in range(y0 + rows, y0 - 1, -1):
        hor = ""
        for x in range(x0, x0 + cols):
            lbl = c.cell(x, y).bottom  # the line at height y bounds row y below
            hor += "+" + f"-{_h_arrow(x, y)}{lbl}-".ljust(cellw, "-")
        lines.append(hor + "+")
        if y > y0:
            ver = ""
            for x in range(x0, x0 + cols + 1):
                lbl = c.cell(x, y - 1).left
                ver += f"{_v_arrow(x, y - 1)}{lbl}".ljust(cellw + 1)
            lines.append(ver.rstrip())
    return "\n".join(lines)


def trace_path(c: PeripheralComplex, start, w: Word) -> list:
    """Vertex sequence of the unique edge-path at ``start`` labelled ``w``.

    The complex is deterministic (four distinct outgoing letters per
    vertex), so each letter picks at most one direction; a letter with
    no matching edge means no such path exists.
    """
    from .peripheral import DIRECTIONS, _STEP, edge_letter

    path = [tuple(start)]
    for l in w:
        here = path[-1]
        for d in DIRECTIONS:
            if edge_letter(c, here, d) == l:
                path.append((here[0] + _STEP[d][0], here[1] + _STEP[d][1]))
                break
        else:
            raise ValueError(
                f"no edge labelled {l} leaves vertex {here}; path cannot continue"
            )
    return path


_CELL = 48  # svg pixels per lattice unit


def render_svg(
    c: PeripheralComplex,
    x0: int,
    y0: int,
    cols: int,
    rows: int,
    walks: list | None = None,
) -> str:
    """SVG drawing of the window with parity arrowheads.

    ``walks`` is a list of (start_vertex, word) pairs overlaid as
    coloured paths.
    """
    pad = _CELL // 2
    wpx = cols * _CELL + 2 * pad
    hpx = rows * _CELL + 2 * pad

    def px(x, y):
        return (pad + (x - x0) * _CELL, pad + (y0 + rows - y) * _CELL)

    out = [
        f'<svg xmlns="http://www.w3.org/2000/svg" width="{wpx}" height="{hpx}" '
        f'viewBox="0 0 {wpx} {hpx}" font-family="monospace" font-size="11">',
        '<defs><marker id="arr" viewBox="0 0 10 10" refX="9" refY="5" '
        'markerWidth="6" markerHeight="6" orient="auto-start-reverse">'
        '<path d="M 0 0 L 10 5 L 0 10 z"/></marker></defs>',
    ]

    def edge(ax, ay, bx, by, lbl):
        # draw even -> odd so the arrowhead lands on the odd vertex
        if _parity(ax, ay) == 1:
            ax, ay, bx, by = bx, by, ax, ay
        (x1, y1), (x2, y2) = px(ax, ay), px(bx, by)
        out.append(
            f'<line x1="{x1}" y1="{y1}" x2="{x2}" y2="{y2}" stroke="black" '
            'marker-end="url(#arr)"/>'
        )
        mx, my = (x1 + x2) / 2, (y1 + y2) / 2
        dx, dy = (0, -4) if y1 == y2 else (5, 3)
        out.append(f'<text x="{mx + dx}" y="{my + dy}">{lbl}</text>')

    for y in range(y0, y0 + rows):
        for x in range(x0, x0 + cols):
            s = c.cell(x, y)
            edge(x, y, x + 1, y, s.bottom)
            edge(x, y, x, y + 1, s.left)
            if y == y0 + rows - 1:
                edge(x, y + 1, x + 1, y + 1, s.top)
            if x == x0 + cols - 1:
                edge(x + 1, y, x + 1, y + 1, s.right)

    colors = ("crimson", "royalblue", "seagreen", "darkorange")
    for i, (start, w) in enumerate(walks or []):
        pts = " ".join("{},{}".format(*px(vx, vy)) for vx, vy in trace_path(c, start, w))
        out.append(
            f'<polyline points="{pts}" fill="none" stroke="{colors[i % len(colors)]}" '
            'stroke-width="3" stroke-opacity="0.6"/>'
        )

    out.append("</svg>")
    return "\n".join(out)
