"""Property suites and differential tests over sampled points of M_f x I.

Every check returns a :class:`~mapcyl.reports.CheckReport`. Samples are
deterministic for a given seed: a fixed stratified block (t in {0, 1/2, 1},
s at every breakpoint of the unfolded formula) followed by seeded uniform
draws. All deviations are quotient distances between canonicalized points.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from typing import Callable, Iterable, Optional

from . import compositional as comp
from .closed_form import GammaImpl, evaluator, gamma
from .cylinder import Base, Cyl, CylPoint, canonicalize, quotient_distance, to_dict
from .errors import ConfigurationError
from .homotopy_data import HtpyEquivalence, Point
from .reports import CheckReport, Witness

BREAKS_S = (1 / 3, 7 / 18, 8 / 18, 1 / 2, 10 / 18, 11 / 18, 2 / 3)
STRAT_S = (0.0,) + BREAKS_S + (0.38, 1.0)
STRAT_T = (0.0, 0.5, 1.0)
BASE_EVERY = 4  # one sampled point in four is a base point


@dataclass(frozen=True)
class Region:
    """Restriction of cylinder samples to a set of (t, s); base points kept or dropped."""

    name: str
    contains: Callable[[float, float], bool]
    include_base: bool = True


REGIONS: dict[str, Region] = {
    "full": Region("full", lambda t, s: True),
    "lower": Region("lower", lambda t, s: t <= 0.5),
    "agreement": Region("agreement", lambda t, s: t <= 0.5 or s <= 1 / 3 or s >= 2 / 3),
    "defect": Region("defect", lambda t, s: t > 0.5 and 1 / 3 < s < 2 / 3, include_base=False),
}


def region(name_or_region: str | Region | None) -> Region:
    if name_or_region is None:
        return REGIONS["full"]
    if isinstance(name_or_region, Region):
        return name_or_region
    try:
        return REGIONS[name_or_region]
    except KeyError:
        raise ConfigurationError(
            f"unknown region {name_or_region!r}; valid: {', '.join(REGIONS)}"
        ) from None


# -- sample plans -------------------------------------------------------------


def _cycle(points: list[Point], k: int) -> Point:
    return points[k % len(points)]


def sample_times(n: int, seed: int = 0) -> list[float]:
    rng = random.Random(seed * 7919 + 11)
    out = list(STRAT_S[:n])
    while len(out) < n:
        out.append(rng.random())
    return out


def sample_points(he: HtpyEquivalence, n: int, seed: int = 0) -> list[CylPoint]:
    """Cylinder and base points, stratified on t in {0, 1/2, 1}."""
    xs = he.sample_x(max(n, 1), seed)
    ys = he.sample_y(max(n, 1), seed + 1)
    rng = random.Random(seed * 7919 + 3)
    out: list[CylPoint] = []
    for k, t in enumerate(STRAT_T):
        out.append(Cyl(_cycle(xs, k), t))
    out.append(Base(ys[0]))
    out = out[:n]
    k = len(out)
    while len(out) < n:
        if k % BASE_EVERY == 0:
            out.append(Base(_cycle(ys, k)))
        else:
            out.append(Cyl(_cycle(xs, k), rng.random()))
        k += 1
    return out


def sample_pairs(he: HtpyEquivalence, n: int, seed: int = 0) -> list[tuple[CylPoint, float]]:
    """(p, s) pairs: every stratified (t, s) combination first, then random."""
    xs = he.sample_x(max(n, 1), seed)
    ys = he.sample_y(max(n, 1), seed + 1)
    out: list[tuple[CylPoint, float]] = []
    k = 0
    for t in STRAT_T:
        for s in STRAT_S:
            out.append((Cyl(_cycle(xs, k), t), s))
            k += 1
    for s in STRAT_S:
        out.append((Base(_cycle(ys, k)), s))
        k += 1
    out = out[:n]
    points = sample_points(he, max(n - len(out), 0), seed + 17)
    times = sample_times(len(points) + len(STRAT_S), seed + 17)[len(STRAT_S):]
    out.extend(zip(points, times))
    return out


def grid_pairs(he: HtpyEquivalence, grid_n: int, n_base: int, seed: int = 0) -> list[tuple[CylPoint, float]]:
    """A grid_n x grid_n lattice in (t, s) plus ``n_base`` base samples."""
    if grid_n < 2:
        raise ConfigurationError("grid must have at least 2 points per axis")
    xs = he.sample_x(grid_n * grid_n, seed)
    ys = he.sample_y(max(n_base, 1), seed + 1)
    axis = [i / (grid_n - 1) for i in range(grid_n)]
    out: list[tuple[CylPoint, float]] = []
    k = 0
    for t in axis:
        for s in axis:
            out.append((Cyl(_cycle(xs, k), t), s))
            k += 1
    times = sample_times(n_base, seed + 5)
    out.extend((Base(ys[i]), times[i]) for i in range(n_base))
    return out


def _in_region(reg: Region, p: CylPoint, s: float) -> bool:
    if type(p) is Base:
        return reg.include_base
    return reg.contains(p.t, s)


# -- helpers ------------------------------------------------------------------


def _pair_witness(p: CylPoint, s: float, a: CylPoint, b: CylPoint, d: float) -> Witness:
    return Witness({"point": to_dict(p), "s": s}, to_dict(a), to_dict(b), d)


def _impl_name(impl: GammaImpl | str) -> str:
    return GammaImpl(impl).value


def _require_n(n: int) -> None:
    if n < 1:
        raise ConfigurationError("sample count must be at least 1")


# -- checks -------------------------------------------------------------------


def check_endpoints(impl: GammaImpl | str, he: HtpyEquivalence, n: int = 1000,
                    seed: int = 0, tol: float = 1e-9) -> CheckReport:
    """Gamma(p, 0) = p and Gamma(p, 1) = r'(p)."""
    _require_n(n)
    devs = []
    for p in sample_points(he, n, seed):
        for s, want in ((0.0, p), (1.0, comp.top_retraction(he, p))):
            got = gamma(he, impl, p, s)
            want = canonicalize(he, want)
            d = quotient_distance(he, got, want)
            devs.append((d, len(devs), _pair_witness(p, s, got, want, d)))
    return CheckReport.from_deviations("endpoints", he.name, _impl_name(impl), devs, tol)


def check_strongness(impl: GammaImpl | str, he: HtpyEquivalence, n: int = 1000,
                     seed: int = 0, tol: float = 1e-9, audit: bool = False) -> CheckReport:
    """Gamma([x, 1], s) = [x, 1] for all s."""
    _require_n(n)
    xs = he.sample_x(n, seed)
    times = sample_times(n, seed)
    devs = []
    for x, s in zip(xs, times):
        p = Cyl(x, 1.0)
        got = gamma(he, impl, p, s)
        d = quotient_distance(he, got, p)
        devs.append((d, len(devs), _pair_witness(p, s, got, p, d)))
    name = "strongness_defect" if audit else "strongness"
    return CheckReport.from_deviations(name, he.name, _impl_name(impl), devs, tol, audit)


def check_seam(impl: GammaImpl | str, he: HtpyEquivalence, n: int = 500,
               seed: int = 0, tol: float = 1e-9) -> CheckReport:
    """Gamma([x, 0], s) = Gamma([f(x)], s).

    The cylinder side goes through the bare evaluator so that the closed forms
    are exercised on their t = 0 branches rather than rerouted to the base.
    """
    _require_n(n)
    raw = evaluator(impl)
    xs = he.sample_x(n, seed)
    times = sample_times(n, seed)
    devs = []
    for x, s in zip(xs, times):
        p = Cyl(x, 0.0)
        a = canonicalize(he, raw(he, p, s))
        b = gamma(he, impl, Base(he.f(x)), s)
        d = quotient_distance(he, a, b)
        devs.append((d, len(devs), _pair_witness(p, s, a, b, d)))
    return CheckReport.from_deviations("seam", he.name, _impl_name(impl), devs, tol)


def check_equivalence(a: GammaImpl | str, b: GammaImpl | str, he: HtpyEquivalence,
                      n: int = 1000, seed: int = 0, tol: float = 1e-9,
                      region_: str | Region | None = None, grid: Optional[int] = None,
                      audit: bool = False) -> CheckReport:
    """Differential test of two evaluators on a shared sample.

    With ``grid`` the sample is a grid x grid lattice in (t, s) plus ``n`` base
    points; without it, ``n`` seeded (p, s) pairs. Samples outside ``region_``
    are dropped.
    """
    _require_n(n)
    reg = region(region_)
    pairs = grid_pairs(he, grid, n, seed) if grid else sample_pairs(he, n, seed)
    pairs = [(p, s) for p, s in pairs if _in_region(reg, p, s)]
    if not pairs:
        raise ConfigurationError(f"region {reg.name!r} leaves no samples")
    devs = []
    for p, s in pairs:
        ga = gamma(he, a, p, s)
        gb = gamma(he, b, p, s)
        d = quotient_distance(he, ga, gb)
        devs.append((d, len(devs), _pair_witness(p, s, ga, gb, d)))
    name = f"equivalence[{_impl_name(a)}~{_impl_name(b)}:{reg.name}]"
    return CheckReport.from_deviations(name, he.name, _impl_name(b), devs, tol, audit)


def boundary_transversals(he: HtpyEquivalence, eps: float, n: int = 64, seed: int = 0):
    """Yield ``(label, (p, s), (q, s2))`` pairs straddling each piece boundary.

    A ``None`` second entry means the first must map to ``p`` itself: the
    approach to the top edge, where the retraction has to fix every point.
    """
    xs = he.sample_x(n, seed)
    ys = he.sample_y(n, seed + 1)
    rng = random.Random(seed * 7919 + 29)
    ts = [0.0, 0.25, 0.5, 0.75, 1.0] + [rng.random() for _ in range(max(n - 5, 0))]
    upper_ts = [0.5, 0.6, 0.75, 0.9, 1.0] + [rng.uniform(0.5, 1.0) for _ in range(max(n - 5, 0))]
    ss = list(sample_times(n, seed + 3))

    for s_star in BREAKS_S:
        for k, t in enumerate(ts):
            x = _cycle(xs, k)
            yield f"s={s_star:.6g}", (Cyl(x, t), s_star - eps), (Cyl(x, t), s_star + eps)
        for k, y in enumerate(ys):
            yield f"s={s_star:.6g}", (Base(y), s_star - eps), (Base(y), s_star + eps)
    for k, s in enumerate(ss):
        x = _cycle(xs, k)
        yield "t=1/2", (Cyl(x, 0.5 - eps), s), (Cyl(x, 0.5 + eps), s)
    for k, t in enumerate(upper_ts):
        x = _cycle(xs, k)
        c = (2.0 - 2.0 * t) / 3.0
        yield "s=(2-2t)/3", (Cyl(x, t), max(c - eps, 0.0)), (Cyl(x, t), c + eps)
        c = (1.0 + 2.0 * t) / 3.0
        yield "s=(1+2t)/3", (Cyl(x, t), c - eps), (Cyl(x, t), min(c + eps, 1.0))
        width = (2.0 * t - 1.0) / t / 6.0
        for c in (0.5 - width, 0.5 + width):
            yield "V-curve", (Cyl(x, t), c - eps), (Cyl(x, t), c + eps)
    for k, s in enumerate(ss):
        x = _cycle(xs, k)
        yield "t=1 edge", (Cyl(x, 1.0 - eps), s), None


def check_boundary_continuity(impl: GammaImpl | str, he: HtpyEquivalence, eps: float = 1e-6,
                              tol_factor: float = 50.0, n: int = 64, seed: int = 0,
                              audit: bool = False) -> CheckReport:
    """Jumps across every piece boundary must stay below ``tol_factor * eps``.

    Boundaries: the s-breakpoints 1/3, 7/18, 8/18, 1/2, 10/18, 11/18, 2/3, the
    curves s = (2-2t)/3, s = (1+2t)/3, t = 1/2, the V-curve
    |6s-3| = (2t-1)/t, and the approach to the top edge t = 1.
    """
    if eps <= 0:
        raise ConfigurationError("eps must be positive")
    devs = []
    for label, (p, s), other in boundary_transversals(he, eps, n, seed):
        a = gamma(he, impl, p, s)
        if other is None:
            q, s2 = Cyl(p.x, 1.0), s
            b = q
        else:
            q, s2 = other
            b = gamma(he, impl, q, s2)
        d = quotient_distance(he, a, b)
        w = Witness({"boundary": label, "a": {"point": to_dict(p), "s": s},
                     "b": {"point": to_dict(q), "s": s2}}, to_dict(a), to_dict(b), d)
        devs.append((d, len(devs), w))
    name = "boundary_continuity_defect" if audit else "boundary_continuity"
    return CheckReport.from_deviations(name, he.name, _impl_name(impl), devs,
                                       tol_factor * eps, audit)


def check_k_symmetry(he: HtpyEquivalence, n: int = 500, seed: int = 0,
                     tol: float = 1e-9) -> CheckReport:
    """K([x, 1], s) = K([x, 1], 1 - s) on the top."""
    _require_n(n)
    xs = he.sample_x(n, seed)
    times = sample_times(n, seed)
    devs = []
    for x, s in zip(xs, times):
        p = Cyl(x, 1.0)
        a = canonicalize(he, comp.k_homotopy(he, p, s))
        b = canonicalize(he, comp.k_homotopy(he, p, 1.0 - s))
        d = quotient_distance(he, a, b)
        devs.append((d, len(devs), _pair_witness(p, s, a, b, d)))
    return CheckReport.from_deviations("k_symmetry", he.name, None, devs, tol)


def check_phi(n_grid: int = 100, tol: float = 1e-12) -> CheckReport:
    """phi lands in I x {0} u {1} x I, is idempotent, fixes that set, and its
    two branches agree on v = 2 - 2u."""
    if n_grid < 2:
        raise ConfigurationError("n_grid must be at least 2")
    axis = [i / (n_grid - 1) for i in range(n_grid)]
    devs = []

    def record(kind: str, uv, out_a, out_b, d: float) -> None:
        devs.append((d, len(devs), Witness({"property": kind, "uv": list(uv)},
                                           list(out_a), list(out_b), d)))

    for u in axis:
        for v in axis:
            a, b = comp.phi(u, v)
            off_target = min(abs(b), abs(1.0 - a))
            off_square = max(0.0, -a, a - 1.0, -b, b - 1.0)
            record("range", (u, v), (a, b), (a, b), max(off_target, off_square))
            a2, b2 = comp.phi(a, b)
            record("idempotent", (u, v), (a2, b2), (a, b), max(abs(a2 - a), abs(b2 - b)))
            if v == 0.0 or u == 1.0:
                record("fixes_target", (u, v), (a, b), (u, v), max(abs(a - u), abs(b - v)))
    for u in [0.5 + 0.5 * i / (n_grid - 1) for i in range(n_grid)]:
        v = 2.0 - 2.0 * u
        lo, hi = comp.phi_lower(u, v), comp.phi_upper(u, v)
        record("branch_agreement", (u, v), lo, hi, max(abs(lo[0] - hi[0]), abs(lo[1] - hi[1])))
    return CheckReport.from_deviations("phi", "-", None, devs, tol)


# -- suites -------------------------------------------------------------------


def run_suite(he: HtpyEquivalence, impls: Iterable[GammaImpl | str], n: int = 1000,
              seed: int = 0, tol: float = 1e-9, grid: int = 64,
              region_: str | Region | None = None) -> list[CheckReport]:
    """The standard battery for one fixture.

    The printed evaluator's known defect (it moves points of the top) is
    covered by audit checks, which pass when the defect is visible.
    """
    reports = []
    for impl in impls:
        impl = GammaImpl(impl)
        reports.append(check_endpoints(impl, he, n, seed, tol))
        reports.append(check_seam(impl, he, n, seed, tol))
        printed = impl is GammaImpl.PRINTED
        reports.append(check_strongness(impl, he, n, seed, tol, audit=printed))
        reports.append(check_boundary_continuity(impl, he, audit=printed, seed=seed))
        if impl is not GammaImpl.COMPOSITIONAL:
            reg = region_ or ("agreement" if printed else "full")
            reports.append(check_equivalence(GammaImpl.COMPOSITIONAL, impl, he, n, seed,
                                             tol, reg, grid))
            if printed and region_ is None:
                reports.append(check_equivalence(GammaImpl.COMPOSITIONAL, impl, he, n,
                                                 seed, tol, "defect", grid, audit=True))
    reports.append(check_k_symmetry(he, n, seed, tol))
    return reports
