"""Unfolded piecewise formulas for the retraction, and a dispatcher over all three
evaluators.

``gamma_printed_cyl``/``gamma_printed_base`` transcribe the published
two-page formula. The only change is on the base display, where the line for
1/2 <= s <= 10/18 lacks its cylinder coordinate (see ``PRINTED_REPAIRS``).
The cylinder display is kept as published: for t > 1/2 in the middle third it
omits the V-wedge region coming from L, so it moves points of the top.
``gamma_corrected`` adds that region back.
"""

from __future__ import annotations

from enum import Enum

from .compositional import gamma_compositional
from .cylinder import Base, Cyl, CylPoint, canonicalize
from .homotopy_data import HtpyEquivalence, Point, as_unit

S_7 = 7.0 / 18.0
S_8 = 8.0 / 18.0
S_10 = 10.0 / 18.0
S_11 = 11.0 / 18.0
ONE_THIRD = 1.0 / 3.0
TWO_THIRDS = 2.0 / 3.0

PRINTED_REPAIRS = (
    "base display, 1/2 <= s <= 10/18: printed [F(g(y), 10-18s)] read as "
    "[F(g(y), 10-18s), 10-18s]; F lands in X so the class needs a height",
)


class GammaImpl(str, Enum):
    COMPOSITIONAL = "compositional"
    PRINTED = "printed"
    CORRECTED = "corrected"


IMPL_NAMES: tuple[str, ...] = tuple(i.value for i in GammaImpl)


def _top_middle(he: HtpyEquivalence, x: Point, s: float) -> CylPoint:
    # Published middle third for t >= 1/2; this is K([x, 1], 3s - 1).
    if s <= S_7:
        return Cyl(x, as_unit(7.0 - 18.0 * s))
    if s <= S_8:
        return Base(he.G(he.f(x), as_unit(8.0 - 18.0 * s)))
    if s <= 0.5:
        a = as_unit(18.0 * s - 8.0)
        return Cyl(he.F(x, a), a)
    if s <= S_10:
        a = as_unit(10.0 - 18.0 * s)
        return Cyl(he.F(x, a), a)
    if s <= S_11:
        return Base(he.G(he.f(x), as_unit(18.0 * s - 10.0)))
    return Cyl(x, as_unit(18.0 * s - 11.0))


def _lower_middle(he: HtpyEquivalence, x: Point, t: float, s: float) -> CylPoint:
    # Published middle third for t <= 1/2; this is K([x, 2t], 3s - 1).
    if s <= S_7:
        return Cyl(x, as_unit(2.0 * t * (7.0 - 18.0 * s)))
    if s <= S_8:
        return Base(he.G(he.f(x), as_unit(8.0 - 18.0 * s)))
    if s <= 0.5:
        a = as_unit(18.0 * s - 8.0)
        return Cyl(he.F(x, as_unit(2.0 * t * a)), a)
    if s <= S_10:
        a = as_unit(10.0 - 18.0 * s)
        return Cyl(he.F(he.F(x, as_unit(2.0 * t)), a), a)
    if s <= S_11:
        return Base(he.G(he.f(he.F(x, as_unit(2.0 * t))), as_unit(18.0 * s - 10.0)))
    return Cyl(he.F(x, as_unit(2.0 * t)), as_unit(18.0 * s - 11.0))


def _first_third(x: Point, t: float, s: float) -> CylPoint:
    if s <= (2.0 - 2.0 * t) / 3.0:
        return Cyl(x, as_unit(2.0 * t / (2.0 - 3.0 * s)))
    return Cyl(x, 1.0)


def _last_third(he: HtpyEquivalence, x: Point, t: float, s: float) -> CylPoint:
    if s >= (1.0 + 2.0 * t) / 3.0:
        return Cyl(he.F(x, as_unit(2.0 * t / (3.0 * s - 1.0))), 1.0)
    return Cyl(x, 1.0)


def gamma_printed_cyl(he: HtpyEquivalence, x: Point, t: float, s: float) -> CylPoint:
    if s <= ONE_THIRD:
        return _first_third(x, t, s)
    if s <= TWO_THIRDS:
        if t <= 0.5:
            return _lower_middle(he, x, t, s)
        return _top_middle(he, x, s)
    return _last_third(he, x, t, s)


def gamma_printed_base(he: HtpyEquivalence, y: Point, s: float) -> CylPoint:
    if s <= S_7:
        return Base(y)
    if s <= S_8:
        return Base(he.G(y, as_unit(8.0 - 18.0 * s)))
    if s <= 0.5:
        return Cyl(he.g(y), as_unit(18.0 * s - 8.0))
    if s <= S_10:
        a = as_unit(10.0 - 18.0 * s)
        return Cyl(he.F(he.g(y), a), a)
    if s <= S_11:
        return Base(he.G(he.f(he.g(y)), as_unit(18.0 * s - 10.0)))
    if s <= TWO_THIRDS:
        return Cyl(he.g(y), as_unit(18.0 * s - 11.0))
    return Cyl(he.g(y), 1.0)


def _v_interior(he: HtpyEquivalence, x: Point, t: float) -> CylPoint:
    # K([x, 1], (1 - t) / (2t)), unfolded through the thirds of H.
    if t >= 0.75:
        return Cyl(x, as_unit((4.0 * t - 3.0) / t))
    if t >= 0.6:
        return Base(he.G(he.f(x), as_unit((5.0 * t - 3.0) / t)))
    a = as_unit((3.0 - 5.0 * t) / t)
    return Cyl(he.F(x, a), a)


def gamma_corrected(he: HtpyEquivalence, p: CylPoint, s: float) -> CylPoint:
    if type(p) is Base:
        return gamma_printed_base(he, p.y, s)
    x, t = p.x, p.t
    if ONE_THIRD < s <= TWO_THIRDS and t > 0.5:
        if abs(6.0 * s - 3.0) >= (2.0 * t - 1.0) / t:
            return _top_middle(he, x, s)
        return _v_interior(he, x, t)
    return gamma_printed_cyl(he, x, t, s)


def _printed(he: HtpyEquivalence, p: CylPoint, s: float) -> CylPoint:
    if type(p) is Base:
        return gamma_printed_base(he, p.y, s)
    return gamma_printed_cyl(he, p.x, p.t, s)


_RAW = {
    GammaImpl.COMPOSITIONAL: gamma_compositional,
    GammaImpl.PRINTED: _printed,
    GammaImpl.CORRECTED: gamma_corrected,
}


def evaluator(impl: GammaImpl | str):
    """The bare evaluator for ``impl``: no input or output canonicalization."""
    return _RAW[GammaImpl(impl)]


def gamma(he: HtpyEquivalence, impl: GammaImpl | str, p: CylPoint, s: float) -> CylPoint:
    """Evaluate the retraction at (p, s) with the chosen implementation.

    Seam points are sent to the base first and results are canonicalized.
    """
    s = as_unit(s)
    return canonicalize(he, _RAW[GammaImpl(impl)](he, canonicalize(he, p), s))
