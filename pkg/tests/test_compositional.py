import math

import pytest

from mapcyl import compositional as comp
from mapcyl.cylinder import Base, Cyl, canonicalize, is_on_top, quotient_distance
from mapcyl.errors import PreconditionError
from mapcyl.homotopy_data import fixture

X = (3.0,)


def same(he, p, q, tol=1e-12):
    return quotient_distance(he, p, q) <= tol


# -- H1, r, H2, H3, r' --------------------------------------------------------


def test_h1(line):
    assert comp.h1(line, Cyl(X, 0.8), 0.5) == Cyl(X, 0.4)
    assert comp.h1(line, Cyl(X, 0.3), 0.0) == Cyl(X, 0.3)
    assert comp.h1(line, Base(X), 0.7) == Base(X)


def test_bottom_retraction(line):
    assert comp.bottom_retraction(line, Cyl(X, 0.7)) == Base(X)
    assert comp.bottom_retraction(line, Base(X)) == Base(X)
    r = comp.bottom_retraction(line, Cyl(X, 0.2))
    assert comp.bottom_retraction(line, r) == r


def test_h2(line):
    assert comp.h2(line, Cyl((2.0,), 0.3), 0.0) == Base((2.0,))
    assert comp.h2(line, Cyl((2.0,), 0.3), 0.0) == comp.bottom_retraction(line, Cyl((2.0,), 0.3))
    he = fixture("disk-to-point")
    # G(y, 0) = f(g(y)) = origin
    assert comp.h2(he, Base((1.0, 1.0)), 1.0) == Base((0.0, 0.0))
    p = comp.h2(fixture("punctured-plane"), Base((2.0, 0.0)), 0.5)
    assert p.y[0] == pytest.approx(math.sqrt(2.0), abs=1e-15)


def test_h3(line):
    cone = fixture("cone-line")
    assert comp.h3(cone, Cyl((4.0,), 0.5), 1.0) == Cyl((2.0,), 1.0)
    assert comp.h3(line, Base(X), 0.3) == Cyl(X, 0.3)
    pp = fixture("punctured-plane")
    x = (2.0, 0.0)
    low = comp.h3(pp, Cyl(x, 0.4), 0.0)
    assert canonicalize(pp, low) == Base(pp.f(pp.g(pp.f(x))))


def test_top_retraction():
    cone = fixture("cone-line")
    assert comp.top_retraction(cone, Cyl((4.0,), 0.5)) == Cyl((2.0,), 1.0)
    assert comp.top_retraction(cone, Cyl((4.0,), 1.0)) == Cyl((4.0,), 1.0)
    assert comp.top_retraction(cone, Base((0.0,))) == Cyl((0.0,), 1.0)


def test_top_retraction_idempotent_and_on_top(he):
    for x in he.sample_x(20):
        for t in (0.0, 0.3, 1.0):
            r = comp.top_retraction(he, Cyl(x, t))
            assert is_on_top(r)
            assert same(he, comp.top_retraction(he, r), r, 1e-12)


def test_h_pieces_well_defined_on_seam(he):
    for x in he.sample_x(30, 2):
        for s in (0.0, 0.2, 0.5, 0.9, 1.0):
            for h in (comp.h1, comp.h2, comp.h3):
                assert same(he, h(he, Cyl(x, 0.0), s), h(he, Base(he.f(x)), s), 1e-9)


# -- H ------------------------------------------------------------------------


def test_concat_h(line):
    assert comp.concat_h(line, Cyl(X, 0.9), 0.0) == Cyl(X, 0.9)
    assert comp.concat_h(line, Cyl(X, 0.9), 1.0) == comp.top_retraction(line, Cyl(X, 0.9))
    p = comp.concat_h(line, Cyl(X, 0.9), 1 / 6)
    assert p.x == X and p.t == pytest.approx(0.45, abs=1e-15)


def test_concat_h_joins_continuously(he):
    for x in he.sample_x(10, 5):
        p = Cyl(x, 0.6)
        for cut in (1 / 3, 2 / 3):
            a = comp.concat_h(he, p, cut - 1e-9)
            b = comp.concat_h(he, p, cut + 1e-9)
            assert quotient_distance(he, a, b) < 1e-6


# -- phi and R ----------------------------------------------------------------


@pytest.mark.parametrize("uv,expected", [
    ((0.3, 0.0), (0.3, 0.0)),
    ((1.0, 0.4), (1.0, 0.4)),
    ((0.25, 1.0), (0.5, 0.0)),
    ((0.5, 1.0), (1.0, 0.0)),
    ((0.0, 0.0), (0.0, 0.0)),
    ((1.0, 1.0), (1.0, 1.0)),
    ((0.75, 1.0), (1.0, 2 / 3)),
])
def test_phi(uv, expected):
    assert comp.phi(*uv) == pytest.approx(expected, abs=1e-15)


def test_phi_is_radial_projection_from_0_2():
    # The image lies on the ray from (0, 2) through (u, v).
    for u in (0.1, 0.4, 0.6, 0.9):
        for v in (0.0, 0.3, 0.8, 1.0):
            a, b = comp.phi(u, v)
            cross = (u - 0.0) * (b - 2.0) - (v - 2.0) * (a - 0.0)
            assert abs(cross) < 1e-12


def test_hep_retraction(line):
    assert comp.hep_retraction(line, Base(X), 0.3, 0.8) == (Base(X), 0.3, 0.0)
    assert comp.hep_retraction(line, Cyl(X, 0.6), 0.3, 0.0) == (Cyl(X, 0.6), 0.3, 0.0)
    q, s, v = comp.hep_retraction(line, Cyl(X, 0.25), 0.7, 1.0)
    assert (q, s, v) == (Cyl(X, 0.5), 0.7, 0.0)


def test_hep_retraction_lands_in_target(line):
    for t in (0.0, 0.2, 0.5, 0.7, 1.0):
        for l in (0.0, 0.5, 1.0):
            q, _, v = comp.hep_retraction(line, Cyl(X, t), 0.5, l)
            assert v == 0.0 or is_on_top(q)


# -- K, L, L', Gamma ----------------------------------------------------------


def test_k_endpoints(he):
    for p in [Cyl(x, 0.4) for x in he.sample_x(5)] + [Base(y) for y in he.sample_y(5)]:
        assert same(he, comp.k_homotopy(he, p, 0.0), p)
        assert same(he, comp.k_homotopy(he, p, 1.0), comp.top_retraction(he, p))


def test_k_on_base_point(line):
    # K([y], 0.4) = H([y], 0.8) = H3([y], 0.4) = [g(y), 0.4]
    p = comp.k_homotopy(line, Base(X), 0.4)
    assert p.x == X and p.t == pytest.approx(0.4, abs=1e-15)


def test_k_halves_meet(he):
    for x in he.sample_x(10, 1):
        p = Cyl(x, 0.7)
        a = comp.h_inverse(he, p, 0.0)
        b = comp.h_inverse(he, comp.top_retraction(he, p), 0.0)
        assert same(he, a, b, 1e-9)


def test_l_homotopy(line):
    top = Cyl(X, 1.0)
    for s in (0.0, 0.2, 0.7, 1.0):
        assert comp.l_homotopy(line, top, s, 0.0) == comp.k_homotopy(line, top, s)
        assert comp.l_homotopy(line, top, s, 1.0) == top
    assert comp.l_homotopy(line, top, 0.5, 0.2) == comp.k_homotopy(line, top, 0.4)
    with pytest.raises(PreconditionError):
        comp.l_homotopy(line, Cyl(X, 0.5), 0.3, 0.3)


def test_l_homotopy_cases_agree_on_v(he):
    for x in he.sample_x(10, 3):
        top = Cyl(x, 1.0)
        for s in (0.1, 0.3, 0.45, 0.6, 0.85):
            u = abs(2 * s - 1)
            a = comp.k_homotopy(he, top, s)
            b = comp.k_homotopy(he, top, (1 - u) / 2)
            assert same(he, a, b, 1e-9)


def test_l_prime(line):
    for p in (Cyl(X, 0.3), Base(X), Cyl(X, 1.0)):
        for s in (0.0, 0.25, 0.8):
            assert same(line, comp.l_prime(line, p, s, 0.0), comp.k_homotopy(line, p, s))
    top = Cyl(X, 1.0)
    assert comp.l_prime(line, top, 0.3, 0.6) == comp.l_homotopy(line, top, 0.3, 0.6)
    assert comp.l_prime(line, Cyl(X, 0.25), 0.7, 1.0) == comp.k_homotopy(line, Cyl(X, 0.5), 0.7)


def test_gamma_bullets(he):
    pts = [Cyl(x, t) for x in he.sample_x(8) for t in (0.0, 0.3, 0.5, 0.8, 1.0)]
    pts += [Base(y) for y in he.sample_y(8)]
    for p in pts:
        assert same(he, comp.gamma_compositional(he, p, 0.0), p)
        assert same(he, comp.gamma_compositional(he, p, 1.0), comp.top_retraction(he, p), 1e-9)
    for x in he.sample_x(8):
        for s in (0.1, 0.38, 0.5, 0.61, 0.9):
            assert comp.gamma_compositional(he, Cyl(x, 1.0), s) == Cyl(x, 1.0)


def test_gamma_is_well_defined_on_seam(he):
    for x in he.sample_x(20, 9):
        for s in (0.0, 0.2, 0.4, 0.45, 0.5, 0.58, 0.62, 0.9, 1.0):
            a = comp.gamma_compositional(he, Cyl(x, 0.0), s)
            b = comp.gamma_compositional(he, Base(he.f(x)), s)
            assert same(he, a, b, 1e-9)
