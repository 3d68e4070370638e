"""Check and benchmark report records, with JSON and CSV round-tripping."""

from __future__ import annotations

import csv
import io
import json
import math
from dataclasses import asdict, dataclass, field
from typing import Any, Iterable, Optional

MAX_WITNESSES = 10


def fmt_float(v: float) -> str:
    """17 significant digits; parses back to the identical double."""
    return f"{v:.17g}"


@dataclass(frozen=True)
class Witness:
    input: Any
    out_a: Any
    out_b: Any
    dev: float


@dataclass(frozen=True)
class CheckReport:
    """Outcome of one verification suite.

    ``passed`` is ``max_dev <= tol`` for ordinary checks. Audit checks document
    a known defect and pass when ``max_dev > 10 * tol`` instead.
    """

    check_name: str
    fixture: str
    impl: Optional[str]
    samples: int
    max_dev: float
    mean_dev: float
    tol: float
    passed: bool
    witnesses: tuple[Witness, ...] = ()
    audit: bool = False

    @classmethod
    def from_deviations(
        cls,
        check_name: str,
        fixture: str,
        impl: Optional[str],
        devs: list[tuple[float, int, Witness]],
        tol: float,
        audit: bool = False,
    ) -> "CheckReport":
        """Aggregate ``(dev, sample_index, witness)`` records.

        NaN deviations count as infinite so they can never pass silently.
        """
        if not devs:
            raise ValueError(f"{check_name}: no samples")
        clean = [(math.inf if math.isnan(d) else d, i, w) for d, i, w in devs]
        max_dev = max(d for d, _, _ in clean)
        mean_dev = math.fsum(d for d, _, _ in clean) / len(clean)
        top = sorted(clean, key=lambda r: (-r[0], r[1]))[:MAX_WITNESSES]
        witnesses = tuple(
            w if w.dev == d else Witness(w.input, w.out_a, w.out_b, d) for d, _, w in top
        )
        passed = max_dev > 10.0 * tol if audit else max_dev <= tol
        return cls(check_name, fixture, impl, len(clean), max_dev, mean_dev, tol,
                   passed, witnesses, audit)

    def to_dict(self) -> dict:
        d = asdict(self)
        d["pass"] = d.pop("passed")
        d["witnesses"] = [asdict(w) for w in self.witnesses]
        return d

    @classmethod
    def from_dict(cls, d: dict) -> "CheckReport":
        return cls(
            check_name=d["check_name"],
            fixture=d["fixture"],
            impl=d.get("impl"),
            samples=int(d["samples"]),
            max_dev=float(d["max_dev"]),
            mean_dev=float(d["mean_dev"]),
            tol=float(d["tol"]),
            passed=bool(d["pass"]),
            witnesses=tuple(Witness(**w) for w in d.get("witnesses", ())),
            audit=bool(d.get("audit", False)),
        )

    def summary(self) -> str:
        status = "PASS" if self.passed else "FAIL"
        kind = " (audit)" if self.audit else ""
        impl = f" [{self.impl}]" if self.impl else ""
        return (f"{status} {self.check_name}{kind} {self.fixture}{impl}: "
                f"n={self.samples} max_dev={self.max_dev:.3g} tol={self.tol:.3g}")


@dataclass(frozen=True)
class BenchRow:
    impl: str
    grid_points: int
    reps: int
    median_ns_per_eval: float
    p10_ns: float
    p90_ns: float
    checksum: str = ""
    agreement_checksum: str = ""


@dataclass(frozen=True)
class BenchReport:
    fixture: str
    seed: int
    rows: tuple[BenchRow, ...] = field(default_factory=tuple)

    def to_dict(self) -> dict:
        return {"fixture": self.fixture, "seed": self.seed,
                "rows": [asdict(r) for r in self.rows]}

    @classmethod
    def from_dict(cls, d: dict) -> "BenchReport":
        return cls(d["fixture"], int(d["seed"]), tuple(BenchRow(**r) for r in d["rows"]))

    def without_timings(self) -> dict:
        d = self.to_dict()
        for r in d["rows"]:
            for k in ("median_ns_per_eval", "p10_ns", "p90_ns"):
                del r[k]
        return d


# -- JSON ---------------------------------------------------------------------


def dumps_json(obj: Any) -> str:
    return json.dumps(obj, indent=2, ensure_ascii=False, allow_nan=True)


def check_reports_to_json(reports: Iterable[CheckReport]) -> str:
    return dumps_json([r.to_dict() for r in reports])


def check_reports_from_json(text: str) -> list[CheckReport]:
    return [CheckReport.from_dict(d) for d in json.loads(text)]


def bench_report_to_json(report: BenchReport) -> str:
    return dumps_json(report.to_dict())


def bench_report_from_json(text: str) -> BenchReport:
    return BenchReport.from_dict(json.loads(text))


# -- CSV ----------------------------------------------------------------------

CHECK_COLUMNS = ("check_name", "fixture", "impl", "samples", "max_dev", "mean_dev",
                 "tol", "pass", "audit", "witnesses")
BENCH_COLUMNS = ("fixture", "seed", "impl", "grid_points", "reps", "median_ns_per_eval",
                 "p10_ns", "p90_ns", "checksum", "agreement_checksum")


def _write_csv(columns: tuple[str, ...], rows: Iterable[list[str]]) -> str:
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    w.writerow(columns)
    w.writerows(rows)
    return buf.getvalue()


def check_reports_to_csv(reports: Iterable[CheckReport]) -> str:
    rows = []
    for r in reports:
        rows.append([
            r.check_name, r.fixture, r.impl or "", str(r.samples), fmt_float(r.max_dev),
            fmt_float(r.mean_dev), fmt_float(r.tol), str(r.passed).lower(),
            str(r.audit).lower(),
            json.dumps([asdict(w) for w in r.witnesses], separators=(",", ":")),
        ])
    return _write_csv(CHECK_COLUMNS, rows)


def check_reports_from_csv(text: str) -> list[CheckReport]:
    out = []
    for row in csv.DictReader(io.StringIO(text)):
        out.append(CheckReport(
            check_name=row["check_name"],
            fixture=row["fixture"],
            impl=row["impl"] or None,
            samples=int(row["samples"]),
            max_dev=float(row["max_dev"]),
            mean_dev=float(row["mean_dev"]),
            tol=float(row["tol"]),
            passed=row["pass"] == "true",
            witnesses=tuple(Witness(**w) for w in json.loads(row["witnesses"])),
            audit=row["audit"] == "true",
        ))
    return out


def bench_report_to_csv(report: BenchReport) -> str:
    rows = [[report.fixture, str(report.seed), r.impl, str(r.grid_points), str(r.reps),
             fmt_float(r.median_ns_per_eval), fmt_float(r.p10_ns), fmt_float(r.p90_ns),
             r.checksum, r.agreement_checksum] for r in report.rows]
    return _write_csv(BENCH_COLUMNS, rows)


def bench_report_from_csv(text: str) -> BenchReport:
    rows = list(csv.DictReader(io.StringIO(text)))
    if not rows:
        raise ValueError("empty benchmark CSV")
    return BenchReport(
        rows[0]["fixture"],
        int(rows[0]["seed"]),
        tuple(BenchRow(
            impl=r["impl"],
            grid_points=int(r["grid_points"]),
            reps=int(r["reps"]),
            median_ns_per_eval=float(r["median_ns_per_eval"]),
            p10_ns=float(r["p10_ns"]),
            p90_ns=float(r["p90_ns"]),
            checksum=r["checksum"],
            agreement_checksum=r["agreement_checksum"],
        ) for r in rows),
    )
