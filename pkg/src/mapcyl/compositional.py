"""The strong deformation retraction of M_f onto its top, built by composition.

Every map here takes the package ``he`` first and acts on ``Cyl``/``Base``
points. The pipeline is

    H = H1 * H2 * H3            (identity ~ r', equal-thirds concatenation)
    K                           (H backwards, then forwards from r')
    L                           (K on the top, frozen inside the V-wedge)
    L' = (K0, L) . R            (homotopy extension through the retraction R)
    Gamma                       (L' along the left, top and right edges of I^2)

Piecewise definitions use closed intervals and take the first matching
branch; neighbouring branches agree on shared boundaries.
"""

from __future__ import annotations

from .cylinder import Base, Cyl, CylPoint, canonicalize, is_on_top
from .errors import PreconditionError
from .homotopy_data import HtpyEquivalence, as_unit

ONE_THIRD = 1.0 / 3.0
TWO_THIRDS = 2.0 / 3.0


# -- deformation retraction H of M_f onto its top -----------------------------


def h1(he: HtpyEquivalence, p: CylPoint, s: float) -> CylPoint:
    """Slide [x, t] down to the bottom: [x, t(1-s)]; base points stay put."""
    if type(p) is Cyl:
        return Cyl(p.x, as_unit(p.t * (1.0 - s)))
    return p


def bottom_retraction(he: HtpyEquivalence, p: CylPoint) -> CylPoint:
    """The retraction r onto the bottom: [x, t] -> [x, 0] = [f(x)]."""
    if type(p) is Cyl:
        return Base(he.f(p.x))
    return p


def h2(he: HtpyEquivalence, p: CylPoint, s: float) -> CylPoint:
    """Run G backwards on the bottom, from r to h."""
    if type(p) is Cyl:
        return Base(he.G(he.f(p.x), as_unit(1.0 - s)))
    return Base(he.G(p.y, as_unit(1.0 - s)))


def h3(he: HtpyEquivalence, p: CylPoint, s: float) -> CylPoint:
    """Lift to height s along F: [x, t] -> [F(x, st), s], [y] -> [g(y), s]."""
    if type(p) is Cyl:
        return Cyl(he.F(p.x, as_unit(s * p.t)), s)
    return Cyl(he.g(p.y), s)


def top_retraction(he: HtpyEquivalence, p: CylPoint) -> CylPoint:
    """The retraction r' onto the top: [x, t] -> [F(x, t), 1], [y] -> [g(y), 1]."""
    if type(p) is Cyl:
        return Cyl(he.F(p.x, p.t), 1.0)
    return Cyl(he.g(p.y), 1.0)


def concat_h(he: HtpyEquivalence, p: CylPoint, s: float) -> CylPoint:
    """H = H1 * H2 * H3, each piece run over one third of the unit interval."""
    if s <= ONE_THIRD:
        return h1(he, p, as_unit(3.0 * s))
    if s <= TWO_THIRDS:
        return h2(he, p, as_unit(3.0 * s - 1.0))
    return h3(he, p, as_unit(3.0 * s - 2.0))


def h_inverse(he: HtpyEquivalence, p: CylPoint, s: float) -> CylPoint:
    """H with time running backward."""
    return concat_h(he, p, as_unit(1.0 - s))


# -- homotopy extension data --------------------------------------------------


def phi_lower(u: float, v: float) -> tuple[float, float]:
    return (2.0 * u / (2.0 - v), 0.0)


def phi_upper(u: float, v: float) -> tuple[float, float]:
    return (1.0, (2.0 * u + v - 2.0) / u)


def phi(u: float, v: float) -> tuple[float, float]:
    """Radial projection of I^2 from (0, 2) onto I x {0} u {1} x I.

    The second branch is only reached with u >= 1/2, so its division is safe.
    """
    if v <= 2.0 - 2.0 * u:
        a, b = phi_lower(u, v)
    else:
        a, b = phi_upper(u, v)
    return as_unit(a), as_unit(b)


def hep_retraction(
    he: HtpyEquivalence, p: CylPoint, s: float, l: float
) -> tuple[CylPoint, float, float]:
    """Retraction R of M_f x I x I onto M_f x I x {0} u X~ x I x I."""
    if type(p) is Cyl:
        t, v = phi(p.t, l)
        return Cyl(p.x, t), s, v
    return p, s, 0.0


# -- the construction ---------------------------------------------------------


def k_homotopy(he: HtpyEquivalence, p: CylPoint, s: float) -> CylPoint:
    """Identity ~ r' that is symmetric in time on the top.

    First half runs H backwards at double speed, second half runs H backwards
    from r'(p).
    """
    if s <= 0.5:
        return h_inverse(he, p, as_unit(1.0 - 2.0 * s))
    return h_inverse(he, top_retraction(he, p), as_unit(2.0 * s - 1.0))


def l_homotopy(he: HtpyEquivalence, p_top: CylPoint, s: float, u: float) -> CylPoint:
    """K on the top, independent of u below the V and of s inside it."""
    if not is_on_top(p_top):
        raise PreconditionError(f"l_homotopy needs a point on the top, got {p_top!r}")
    if u <= abs(2.0 * s - 1.0):
        return k_homotopy(he, p_top, s)
    return k_homotopy(he, p_top, as_unit((1.0 - u) / 2.0))


def l_prime(he: HtpyEquivalence, p: CylPoint, s: float, u: float) -> CylPoint:
    """Extension of L to all of M_f x I x I through R."""
    q, s2, v = hep_retraction(he, p, s, u)
    if v == 0.0:
        return k_homotopy(he, q, s2)
    return l_homotopy(he, q, s2, v)


def gamma_compositional(he: HtpyEquivalence, p: CylPoint, s: float) -> CylPoint:
    """Strong deformation retraction of M_f onto its top, by function composition."""
    if s <= ONE_THIRD:
        out = l_prime(he, p, 0.0, as_unit(3.0 * s))
    elif s <= TWO_THIRDS:
        out = l_prime(he, p, as_unit(3.0 * s - 1.0), 1.0)
    else:
        out = l_prime(he, p, 1.0, as_unit(3.0 - 3.0 * s))
    return canonicalize(he, out)
