"""Timing harness for the composed and unfolded evaluators, and trajectory sampling."""

from __future__ import annotations

import csv
import hashlib
import io
import statistics
import time
from typing import Iterable

from .closed_form import GammaImpl, evaluator, gamma
from .cylinder import Base, Cyl, CylPoint, canonicalize
from .errors import ConfigurationError
from .homotopy_data import HtpyEquivalence
from .reports import BenchReport, BenchRow, fmt_float
from .verify import REGIONS, sample_pairs

CHECKSUM_DECIMALS = 7


def _quantize(v: float) -> str:
    q = round(v, CHECKSUM_DECIMALS)
    return repr(q + 0.0)  # folds -0.0 into 0.0


def _digest(points: Iterable[CylPoint]) -> str:
    h = hashlib.sha256()
    for p in points:
        if type(p) is Cyl:
            h.update(f"c|{_quantize(p.t)}|{'|'.join(map(_quantize, p.x))};".encode())
        else:
            h.update(f"b|{'|'.join(map(_quantize, p.y))};".encode())
    return h.hexdigest()[:16]


def bench_grid(he: HtpyEquivalence, grid_n: int, seed: int = 0) -> list[tuple[CylPoint, float]]:
    """The (p, s) workload shared by every implementation row."""
    return [(canonicalize(he, p), s) for p, s in sample_pairs(he, grid_n, seed)]


def _quantiles(samples: list[float]) -> tuple[float, float, float]:
    if len(samples) == 1:
        v = samples[0]
        return v, v, v
    deciles = statistics.quantiles(samples, n=10, method="inclusive")
    return statistics.median(samples), deciles[0], deciles[-1]


def run_benchmark(he: HtpyEquivalence, impls: Iterable[GammaImpl | str], grid_n: int = 1000,
                  reps: int = 5, seed: int = 0) -> BenchReport:
    """Per-evaluation latency of each implementation over one shared grid.

    Each row gets a discarded warm-up pass and ``reps`` timed passes. The
    outputs of the last pass are checksummed, over the whole grid and over
    the part where the printed formula is expected to agree.
    """
    impls = [GammaImpl(i) for i in impls]
    if not impls:
        raise ConfigurationError("no implementations requested")
    if reps < 1 or grid_n < 1:
        raise ConfigurationError("reps and grid must both be at least 1")
    grid = bench_grid(he, grid_n, seed)
    agree = REGIONS["agreement"]
    in_agreement = [type(p) is Base or agree.contains(p.t, s) for p, s in grid]
    rows = []
    for impl in impls:
        raw = evaluator(impl)
        for p, s in grid:
            raw(he, p, s)
        per_eval = []
        outs: list[CylPoint] = []
        for _ in range(reps):
            t0 = time.perf_counter_ns()
            outs = [raw(he, p, s) for p, s in grid]
            per_eval.append((time.perf_counter_ns() - t0) / len(grid))
        outs = [canonicalize(he, o) for o in outs]
        median, p10, p90 = _quantiles(per_eval)
        rows.append(BenchRow(
            impl=impl.value,
            grid_points=len(grid),
            reps=reps,
            median_ns_per_eval=median,
            p10_ns=p10,
            p90_ns=p90,
            checksum=_digest(outs),
            agreement_checksum=_digest(o for o, ok in zip(outs, in_agreement) if ok),
        ))
    return BenchReport(he.name, seed, tuple(rows))


def sample_trajectory(he: HtpyEquivalence, impl: GammaImpl | str, p: CylPoint,
                      n_steps: int) -> list[tuple[float, CylPoint]]:
    """Gamma(p, k / (n_steps - 1)) for k = 0 .. n_steps - 1."""
    if n_steps < 2:
        raise ConfigurationError("a trajectory needs at least 2 steps")
    return [(k / (n_steps - 1), gamma(he, impl, p, k / (n_steps - 1))) for k in range(n_steps)]


def trajectory_to_csv(traj: list[tuple[float, CylPoint]]) -> str:
    width = max((len(p.x) if type(p) is Cyl else len(p.y)) for _, p in traj)
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    w.writerow(["s", "kind", "t"] + [f"c{i}" for i in range(width)])
    for s, p in traj:
        coords = p.x if type(p) is Cyl else p.y
        cells = [fmt_float(c) for c in coords] + [""] * (width - len(coords))
        if type(p) is Cyl:
            w.writerow([fmt_float(s), "cyl", fmt_float(p.t)] + cells)
        else:
            w.writerow([fmt_float(s), "base", ""] + cells)
    return buf.getvalue()


def trajectory_from_csv(text: str) -> list[tuple[float, CylPoint]]:
    rows = list(csv.reader(io.StringIO(text)))
    out = []
    for row in rows[1:]:
        s, kind, t, *coords = row
        pt = tuple(float(c) for c in coords if c != "")
        out.append((float(s), Cyl(pt, float(t)) if kind == "cyl" else Base(pt)))
    return out
