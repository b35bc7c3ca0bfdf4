"""Minimal SVG emission for 2D instances: cone pieces, base polytopes, and
the certificate's conical level curve {phi = 0}.

Exact rational geometry is clipped against the viewport box with the same
polyhedral machinery as everywhere else; floats appear only at the final
coordinate-formatting step.
"""

from __future__ import annotations

from fractions import Fraction

from .numerics import Functional, Vector
from .polyhedra import ConeUnion, ConvexConePiece, vertex_enumeration

VIEWBOX = 400
EXTENT = Fraction(8, 5)  # world coordinates [-1.6, 1.6]^2


def _screen(v: Vector) -> tuple[float, float]:
    sx = (float(v[0]) / float(EXTENT) + 1) / 2 * VIEWBOX
    sy = (1 - float(v[1]) / float(EXTENT)) / 2 * VIEWBOX
    return sx, sy


def _fmt(x: float) -> str:
    return f"{x:.3f}".rstrip("0").rstrip(".")


def _path(points: list[Vector], close: bool = True) -> str:
    cmds = []
    for i, p in enumerate(points):
        sx, sy = _screen(p)
        cmds.append(f"{'M' if i == 0 else 'L'} {_fmt(sx)} {_fmt(sy)}")
    if close:
        cmds.append("Z")
    return " ".join(cmds)


def _angle_sorted(points: list[Vector]) -> list[Vector]:
    import math

    def centroid():
        cx = sum((float(p[0]) for p in points), 0.0) / len(points)
        cy = sum((float(p[1]) for p in points), 0.0) / len(points)
        return cx, cy

    cx, cy = centroid()
    return sorted(
        points, key=lambda p: math.atan2(float(p[1]) - cy, float(p[0]) - cx)
    )


def _clip_piece(piece: ConvexConePiece) -> list[Vector]:
    """Vertices of the piece intersected with the viewport box, angle-sorted."""
    rows: list[tuple[Functional, Fraction]] = [(-f, Fraction(0)) for f in piece.facets]
    for j in range(2):
        e = Functional(Vector.unit(2, j))
        rows.append((e, EXTENT))
        rows.append((-e, EXTENT))
    verts = vertex_enumeration(rows)
    return _angle_sorted(verts) if len(verts) >= 3 else verts


def render_svg(
    cones: list[tuple[ConeUnion, str]],
    base_polytopes: list[tuple[list[Vector], str]],
    level_rays: list[Vector] | None = None,
    title: str = "",
) -> str:
    """Assemble the drawing: one path per cone piece, one per base polytope,
    and one per certificate level curve."""
    parts = [
        f'<svg xmlns="http://www.w3.org/2000/svg" viewBox="0 0 {VIEWBOX} {VIEWBOX}">',
        f"<title>{title}</title>" if title else "",
        f'<line x1="0" y1="{VIEWBOX / 2}" x2="{VIEWBOX}" y2="{VIEWBOX / 2}" '
        'stroke="#ccc" stroke-width="1"/>',
        f'<line x1="{VIEWBOX / 2}" y1="0" x2="{VIEWBOX / 2}" y2="{VIEWBOX}" '
        'stroke="#ccc" stroke-width="1"/>',
    ]
    for cone, color in cones:
        for piece in cone.pieces:
            if piece.is_zero():
                continue
            pts = _clip_piece(piece)
            if len(pts) < 2:
                continue
            close = len(pts) >= 3
            parts.append(
                f'<path class="cone" d="{_path(pts, close=close)}" '
                f'fill="{color}" fill-opacity="0.25" stroke="{color}" '
                'stroke-width="1.5"/>'
            )
    for verts, color in base_polytopes:
        if len(verts) < 2:
            continue
        pts = _angle_sorted(list(verts)) if len(verts) >= 3 else list(verts)
        parts.append(
            f'<path class="base" d="{_path(pts, close=len(pts) >= 3)}" '
            f'fill="none" stroke="{color}" stroke-width="2" stroke-dasharray="6 3"/>'
        )
    if level_rays:
        origin = Vector.zero(2)
        scaled = [_ray_to_edge(r) for r in level_rays if not r.is_zero()]
        if scaled:
            pts = [scaled[0], origin] + scaled[1:2]
            parts.append(
                f'<path class="level" d="{_path(pts, close=False)}" '
                'fill="none" stroke="#222" stroke-width="2.5"/>'
            )
    parts.append("</svg>")
    return "\n".join(p for p in parts if p)


def _ray_to_edge(direction: Vector) -> Vector:
    scale = EXTENT / max(abs(direction[0]), abs(direction[1]))
    return direction.scale(scale)
