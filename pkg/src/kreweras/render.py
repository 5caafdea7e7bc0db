"""Static SVG drawings of chord diagrams, interleaved hulls and meanders.

Circle layout: radius 100 centred in a 260x260 canvas, slot 0 at the top and
slots proceeding clockwise.  Output is a pure function of the input.
"""

from __future__ import annotations

import math
from typing import Sequence

from .nc import NoncrossingPartition, kreweras
from .trees import PlaneTree

RADIUS = 100.0
CENTER = 130.0
SIZE = 260

_STYLE = (
    "<style>"
    ".point{fill:#222}.label{font:10px sans-serif;text-anchor:middle;dominant-baseline:middle}"
    ".chord{stroke:#1f5fa8;stroke-width:1.5}"
    ".hull.block{fill:#1f5fa8;fill-opacity:.25;stroke:#1f5fa8;stroke-width:2}"
    ".hull.complement{fill:#c0392b;fill-opacity:.25;stroke:#c0392b;stroke-width:2}"
    ".loop{fill:none;stroke:#222;stroke-width:1.5}"
    "</style>"
)


def _fmt(x: float) -> str:
    s = f"{x:.3f}".rstrip("0").rstrip(".")
    return "0" if s == "-0" else s


def slot_position(slot: int, total: int, radius: float = RADIUS) -> tuple[float, float]:
    """Coordinates of slot k of ``total`` equally spaced points, clockwise from 90 degrees."""
    angle = math.pi / 2 - 2 * math.pi * slot / total
    return CENTER + radius * math.cos(angle), CENTER - radius * math.sin(angle)


def _document(body: list[str], width: int = SIZE, height: int = SIZE) -> str:
    head = (
        '<?xml version="1.0" encoding="UTF-8"?>\n'
        f'<svg xmlns="http://www.w3.org/2000/svg" version="1.1" width="{width}" height="{height}" '
        f'viewBox="0 0 {width} {height}">'
    )
    return "\n".join([head, _STYLE, *body, "</svg>"]) + "\n"


def _points(labels: Sequence[str]) -> list[str]:
    out = []
    total = len(labels)
    for k, label in enumerate(labels):
        x, y = slot_position(k, total)
        lx, ly = slot_position(k, total, RADIUS + 14)
        out.append(f'<circle class="point" cx="{_fmt(x)}" cy="{_fmt(y)}" r="3"/>')
        out.append(f'<text class="label" x="{_fmt(lx)}" y="{_fmt(ly)}">{label}</text>')
    return out


def render_matching(tree: PlaneTree) -> str:
    """2n labelled points and one straight chord per edge."""
    total = 2 * tree.n
    body = []
    for i, j in tree.edges:
        x1, y1 = slot_position(i - 1, total)
        x2, y2 = slot_position(j - 1, total)
        body.append(
            f'<line class="chord" data-edge="{i},{j}" x1="{_fmt(x1)}" y1="{_fmt(y1)}" '
            f'x2="{_fmt(x2)}" y2="{_fmt(y2)}"/>'
        )
    body += _points([str(k) for k in range(1, total + 1)])
    return _document(body)


def _hull(block: Sequence[int], slot_of, total: int, cls: str, name: str) -> str:
    pts = " ".join(
        f"{_fmt(x)},{_fmt(y)}" for x, y in (slot_position(slot_of(e), total) for e in block)
    )
    return f'<polygon class="hull {cls}" data-block="{name}" points="{pts}"/>'


def render_partition(p: NoncrossingPartition, complement: bool = False) -> str:
    """Convex hull per block; with ``complement`` the Kreweras complement sits on primed points."""
    n = p.n
    body = []
    if complement:
        total = 2 * n
        for block in p.blocks:
            body.append(_hull(block, lambda e: 2 * (e - 1), total, "block", ",".join(map(str, block))))
        for block in kreweras(p).blocks:
            name = ",".join(f"{e}'" for e in block)
            body.append(_hull(block, lambda e: 2 * e - 1, total, "complement", name))
        labels = [lab for i in range(1, n + 1) for lab in (str(i), f"{i}'")]
    else:
        total = n
        for block in p.blocks:
            body.append(_hull(block, lambda e: e - 1, total, "block", ",".join(map(str, block))))
        labels = [str(i) for i in range(1, n + 1)]
    body += _points(labels)
    return _document(body)


def _loops(a: PlaneTree, b: PlaneTree) -> list[list[int]]:
    mate_a, mate_b = {}, {}
    for mate, edges in ((mate_a, a.edges), (mate_b, b.edges)):
        for i, j in edges:
            mate[i], mate[j] = j, i
    unseen = set(mate_a)
    loops = []
    while unseen:
        start = min(unseen)
        loop, x = [], start
        while True:
            y = mate_a[x]
            loop += [x, y]
            unseen -= {x, y}
            x = mate_b[y]
            if x == start:
                break
        loops.append(loop)
    return loops


def render_meander(a: PlaneTree, b: PlaneTree) -> str:
    """Endpoints on a line, ``a`` as arcs above and ``b`` below; one closed path per loop."""
    if a.n != b.n:
        raise ValueError("matchings of different sizes")
    total = 2 * a.n
    step = 30.0
    width = int(step * (total + 1))
    mid = step * a.n + 20.0
    height = int(2 * mid)

    def x_of(k):
        return step * k

    body = []
    for loop in _loops(a, b):
        x0 = x_of(loop[0])
        cmds = [f"M {_fmt(x0)} {_fmt(mid)}"]
        for k, (u, v) in enumerate(zip(loop, loop[1:] + loop[:1])):
            r = abs(x_of(v) - x_of(u)) / 2
            # even steps follow a (above), odd steps follow b (below)
            above = k % 2 == 0
            sweep = int((x_of(v) > x_of(u)) == above)
            cmds.append(f"A {_fmt(r)} {_fmt(r)} 0 0 {sweep} {_fmt(x_of(v))} {_fmt(mid)}")
        cmds.append("Z")
        members = ",".join(map(str, loop))
        body.append(f'<path class="loop" data-points="{members}" d="{" ".join(cmds)}"/>')
    body.append(
        f'<line class="axis" x1="{_fmt(step / 2)}" y1="{_fmt(mid)}" x2="{_fmt(width - step / 2)}" '
        f'y2="{_fmt(mid)}" stroke="#999" stroke-dasharray="3,3"/>'
    )
    for k in range(1, total + 1):
        body.append(f'<circle class="point" cx="{_fmt(x_of(k))}" cy="{_fmt(mid)}" r="3"/>')
        body.append(f'<text class="label" x="{_fmt(x_of(k))}" y="{_fmt(mid + 14)}">{k}</text>')
    return _document(body, width, height)
