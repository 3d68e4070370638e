"""Points of the mapping cylinder M_f and the seam identification (x, 0) ~ f(x).

``Cyl(x, t)`` is the class [x, t] of (x, t) in X x I and ``Base(y)`` the class
[y] of y in Y. The top X~ is the set of ``Cyl(x, 1)``, the bottom Y~ the set
of ``Base(y)``.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Union

from .errors import StructuralError
from .homotopy_data import HtpyEquivalence, Point

SEAM_TOL = 1e-12


@dataclass(frozen=True, slots=True)
class Cyl:
    x: Point
    t: float


@dataclass(frozen=True, slots=True)
class Base:
    y: Point


CylPoint = Union[Cyl, Base]


def check_point(he: HtpyEquivalence, p: CylPoint) -> None:
    """Raise StructuralError unless ``p`` is well formed for ``he``."""
    if isinstance(p, Cyl):
        if len(p.x) != he.dim_x:
            raise StructuralError(f"cylinder point has dim {len(p.x)}, X has dim {he.dim_x}")
        if not (0.0 <= p.t <= 1.0):
            raise StructuralError(f"cylinder coordinate t={p.t!r} outside [0, 1]")
        coords = p.x
    elif isinstance(p, Base):
        if len(p.y) != he.dim_y:
            raise StructuralError(f"base point has dim {len(p.y)}, Y has dim {he.dim_y}")
        coords = p.y
    else:
        raise StructuralError(f"not a mapping-cylinder point: {p!r}")
    if not all(math.isfinite(c) for c in coords):
        raise StructuralError(f"non-finite coordinate in {p!r}")


def canonicalize(he: HtpyEquivalence, p: CylPoint) -> CylPoint:
    """Replace a cylinder point on the seam by the base point it is glued to."""
    if type(p) is Cyl:
        if len(p.x) != he.dim_x:
            raise StructuralError(f"cylinder point has dim {len(p.x)}, X has dim {he.dim_x}")
        if p.t <= SEAM_TOL:
            return Base(he.f(p.x))
        return p
    if type(p) is Base:
        if len(p.y) != he.dim_y:
            raise StructuralError(f"base point has dim {len(p.y)}, Y has dim {he.dim_y}")
        return p
    raise StructuralError(f"not a mapping-cylinder point: {p!r}")


def quotient_distance(he: HtpyEquivalence, p: CylPoint, q: CylPoint) -> float:
    """Upper bound on the quotient distance between two points of M_f.

    Two cylinder points are compared either directly inside X x I, or by
    sliding both down to the seam and comparing their images in Y; the
    smaller cost wins. The bound is only ever used to certify closeness.
    """
    p = canonicalize(he, p)
    q = canonicalize(he, q)
    if type(p) is Base and type(q) is Base:
        return he.metric_y(p.y, q.y)
    if type(p) is Base:
        p, q = q, p
    if type(q) is Base:
        return p.t + he.metric_y(he.f(p.x), q.y)
    direct = he.metric_x(p.x, q.x) + abs(p.t - q.t)
    via_seam = p.t + q.t + he.metric_y(he.f(p.x), he.f(q.x))
    return min(direct, via_seam)


def is_on_top(p: CylPoint) -> bool:
    return type(p) is Cyl and 1.0 - SEAM_TOL <= p.t <= 1.0 + SEAM_TOL


def to_dict(p: CylPoint) -> dict:
    if type(p) is Cyl:
        return {"kind": "cyl", "t": p.t, "coords": list(p.x)}
    return {"kind": "base", "coords": list(p.y)}


def from_dict(d: dict) -> CylPoint:
    kind = d.get("kind")
    coords = tuple(float(c) for c in d["coords"])
    if kind == "cyl":
        return Cyl(coords, float(d["t"]))
    if kind == "base":
        return Base(coords)
    raise StructuralError(f"unknown point kind {kind!r}")
