"""Homotopy-equivalence packages (f, g, F, G) over Euclidean-embedded spaces.

A package bundles a map ``f: X -> Y``, a homotopy inverse ``g: Y -> X`` and
the two homotopies ``F: g.f ~ 1_X`` and ``G: f.g ~ 1_Y``. Spaces are only
ever touched pointwise: points are tuples of floats, and each space carries a
metric and a seeded sampler.
"""

from __future__ import annotations

import math
import random
from dataclasses import dataclass, field
from typing import Callable, Sequence

from .errors import CatalogError, ConfigurationError, StructuralError
from .reports import CheckReport, Witness

Point = tuple[float, ...]
Map = Callable[[Point], Point]
HomotopyMap = Callable[[Point, float], Point]
Sampler = Callable[[int, int], list[Point]]

UNIT_TOL = 1e-12


def as_unit(value: float) -> float:
    """Clamp ``value`` into [0, 1], rejecting anything further than 1e-12 outside."""
    if value < 0.0:
        if value < -UNIT_TOL:
            raise StructuralError(f"parameter {value!r} lies outside [0, 1]")
        return 0.0
    if value > 1.0:
        if value > 1.0 + UNIT_TOL:
            raise StructuralError(f"parameter {value!r} lies outside [0, 1]")
        return 1.0
    return value


def as_point(coords: Sequence[float], dim: int) -> Point:
    """Validate coordinates and return them as a tuple of floats."""
    p = tuple(float(c) for c in coords)
    if len(p) != dim:
        raise StructuralError(f"expected a point of dimension {dim}, got {len(p)}")
    if not all(math.isfinite(c) for c in p):
        raise StructuralError(f"non-finite coordinate in {p!r}")
    return p


def euclidean(a: Point, b: Point) -> float:
    return math.dist(a, b)


@dataclass(frozen=True)
class HtpyEquivalence:
    name: str
    dim_x: int
    dim_y: int
    f: Map
    g: Map
    F: HomotopyMap
    G: HomotopyMap
    sample_x: Sampler
    sample_y: Sampler
    metric_x: Callable[[Point, Point], float] = field(default=euclidean)
    metric_y: Callable[[Point, Point], float] = field(default=euclidean)


# -- samplers -----------------------------------------------------------------


def _sampler(stratified: Sequence[Point], draw: Callable[[random.Random], Point]) -> Sampler:
    """Stratified boundary points first, then seeded uniform draws up to ``n``."""
    fixed = [tuple(p) for p in stratified]

    def sample(n: int, seed: int = 0) -> list[Point]:
        rng = random.Random(seed)
        out = fixed[:n]
        while len(out) < n:
            out.append(draw(rng))
        return out

    return sample


def _polar(r: float, theta: float) -> Point:
    return (r * math.cos(theta), r * math.sin(theta))


# Sampling windows have radius LINE_RADIUS. Across a breakpoint the retraction
# moves at speed up to 18 * (1 + |x|) in s (18 from the 1/18-wide pieces), so
# the window keeps the continuity constant at 18 * 2.5 = 45.
LINE_RADIUS = 1.5


def _line_sampler(radius: float = LINE_RADIUS) -> Sampler:
    return _sampler(
        [(0.0,), (1e-6,), (-1e-6,), (1e-3,), (-1e-3,), (1.0,), (-radius,), (radius,)],
        lambda rng: (rng.uniform(-radius, radius),),
    )


def _point_sampler(dim: int) -> Sampler:
    origin = (0.0,) * dim
    return lambda n, seed=0: [origin] * n


def _ring_sampler(r_min: float, r_max: float, strata: Sequence[float]) -> Sampler:
    """Points with radius log-uniform in [r_min, r_max]; strata are extra radii."""
    angles = (0.0, 0.5 * math.pi, 2.0, -2.5)
    fixed = [_polar(r, a) for r in strata for a in angles]

    def draw(rng: random.Random) -> Point:
        r = math.exp(rng.uniform(math.log(r_min), math.log(r_max)))
        return _polar(r, rng.uniform(-math.pi, math.pi))

    return _sampler(fixed, draw)


# -- point maps ----------------------------------------------------------------


def _norm(p: Point) -> float:
    return math.hypot(*p)


def _unit(p: Point) -> Point:
    n = _norm(p)
    return tuple(c / n for c in p)


def _radial_power(p: Point, s: float) -> Point:
    """p * |p|**(s - 1): slides p along its ray from radius |p| (s=1) to 1 (s=0)."""
    k = _norm(p) ** (s - 1.0)
    return tuple(c * k for c in p)


def _scale(p: Point, s: float) -> Point:
    return tuple(s * c for c in p)


def _identity(p: Point) -> Point:
    return p


def _constant_htpy(p: Point, s: float) -> Point:
    return p


def _identity_line() -> HtpyEquivalence:
    line = _line_sampler()
    return HtpyEquivalence(
        "identity-line", 1, 1,
        f=_identity, g=_identity, F=_constant_htpy, G=_constant_htpy,
        sample_x=line, sample_y=line,
    )


def _cone_line() -> HtpyEquivalence:
    # Y is the single point {0}, embedded as (0.0,) in R^1.
    apex = (0.0,)
    return HtpyEquivalence(
        "cone-line", 1, 1,
        f=lambda x: apex, g=lambda y: apex, F=_scale, G=_constant_htpy,
        sample_x=_line_sampler(), sample_y=_point_sampler(1),
    )


def _disk_to_point() -> HtpyEquivalence:
    # X is the single point, embedded as (0.0,) in R^1.
    origin = (0.0, 0.0)

    def draw(rng: random.Random) -> Point:
        return _polar(LINE_RADIUS * math.sqrt(rng.random()), rng.uniform(-math.pi, math.pi))

    plane = _sampler(
        [origin, (1e-6, 0.0), (0.0, -1e-3), (LINE_RADIUS, 0.0), _polar(LINE_RADIUS, 2.0)], draw
    )
    return HtpyEquivalence(
        "disk-to-point", 1, 2,
        f=lambda x: origin, g=lambda y: (0.0,), F=_constant_htpy, G=_scale,
        sample_x=_point_sampler(1), sample_y=plane,
    )


def _annulus_circle() -> HtpyEquivalence:
    return HtpyEquivalence(
        "annulus-circle", 2, 2,
        f=_identity, g=_unit, F=_constant_htpy, G=_radial_power,
        sample_x=_ring_sampler(1.0, 1.0, [1.0]),
        sample_y=_ring_sampler(0.5, 2.0, [0.5, 0.5 + 1e-9, 1.0, 2.0 - 1e-9, 2.0]),
    )


def _punctured_plane() -> HtpyEquivalence:
    ring = _ring_sampler(0.5, 2.0, [0.5, 1.0, 2.0])
    return HtpyEquivalence(
        "punctured-plane", 2, 2,
        f=_unit, g=_identity, F=_radial_power, G=_radial_power,
        sample_x=ring, sample_y=ring,
    )


_CATALOG: dict[str, Callable[[], HtpyEquivalence]] = {
    "identity-line": _identity_line,
    "cone-line": _cone_line,
    "disk-to-point": _disk_to_point,
    "annulus-circle": _annulus_circle,
    "punctured-plane": _punctured_plane,
}

FIXTURE_NAMES: tuple[str, ...] = tuple(_CATALOG)
_CACHE: dict[str, HtpyEquivalence] = {}


def fixture(name: str) -> HtpyEquivalence:
    """Return the catalog package called ``name``."""
    try:
        build = _CATALOG[name]
    except KeyError:
        raise CatalogError(
            f"unknown fixture {name!r}; valid names: {', '.join(FIXTURE_NAMES)}"
        ) from None
    if name not in _CACHE:
        _CACHE[name] = build()
    return _CACHE[name]


def validate_equivalence(he: HtpyEquivalence, n: int, seed: int = 0, tol: float = 1e-9) -> CheckReport:
    """Check F(., 0) = g.f, F(., 1) = id, G(., 0) = f.g, G(., 1) = id on samples."""
    if n < 1:
        raise ConfigurationError("n must be at least 1")
    devs: list[tuple[float, int, Witness]] = []
    xs = [as_point(x, he.dim_x) for x in he.sample_x(n, seed)]
    ys = [as_point(y, he.dim_y) for y in he.sample_y(n, seed + 1)]
    for x in xs:
        for label, a, b in (
            ("F(x,0)~g(f(x))", he.F(x, 0.0), he.g(he.f(x))),
            ("F(x,1)~x", he.F(x, 1.0), x),
        ):
            d = he.metric_x(a, b)
            devs.append((d, len(devs), Witness({"identity": label, "x": list(x)}, list(a), list(b), d)))
    for y in ys:
        for label, a, b in (
            ("G(y,0)~f(g(y))", he.G(y, 0.0), he.f(he.g(y))),
            ("G(y,1)~y", he.G(y, 1.0), y),
        ):
            d = he.metric_y(a, b)
            devs.append((d, len(devs), Witness({"identity": label, "y": list(y)}, list(a), list(b), d)))
    return CheckReport.from_deviations("validate_equivalence", he.name, None, devs, tol)
