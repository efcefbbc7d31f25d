"""Knot catalogs: loading, serialising, and regression against stored values."""

from __future__ import annotations

import os
from dataclasses import asdict, dataclass, field
from importlib import resources
from pathlib import Path
from typing import Iterable, Sequence

from .cwr import CwrValue, compute_cwr, derive_wrp, parse_cwr, render_cwr
from .diagram import PlanarDiagram, mirror, parse_pd
from .poly import render_poly

__all__ = [
    "CatalogError",
    "KnotRecord",
    "VerifyRow",
    "VerifyReport",
    "CompareReport",
    "load_catalog",
    "parse_catalog",
    "dump_catalog",
    "bundled_path",
    "bundled_records",
    "find_record",
    "verify_against_expected",
    "distinguishing_report",
    "CATALOG_ENV",
]

CATALOG_ENV = "CWRINV_CATALOG"
_FIELDS = ("name", "rolfsen", "pd", "cwr", "mirrored")
_BUNDLED = ("knots_upto8", "examples")


class CatalogError(ValueError):
    pass


@dataclass(frozen=True)
class KnotRecord:
    dt_name: str
    pd: str | None = None
    rolfsen: str | None = None
    expected_cwr: str | None = None
    mirrored: bool = False

    def diagram(self) -> PlanarDiagram:
        if self.pd is None:
            raise CatalogError(f"{self.dt_name} has no PD code")
        d = parse_pd(self.pd)
        return mirror(d) if self.mirrored else d

    def expected(self) -> CwrValue | None:
        return None if self.expected_cwr is None else parse_cwr(self.expected_cwr)


# ----------------------------------------------------------------- file I/O

def parse_catalog(text: str, source: str = "<string>") -> list[KnotRecord]:
    records: list[KnotRecord] = []
    current: dict[str, str] = {}
    start = 0

    def flush():
        if not current:
            return
        if "name" not in current:
            raise CatalogError(f"{source}:{start}: record without a 'name' field")
        mirrored = current.get("mirrored", "no").lower()
        if mirrored not in ("yes", "no", "true", "false"):
            raise CatalogError(f"{source}:{start}: mirrored must be yes/no, got {mirrored!r}")
        rec = KnotRecord(
            dt_name=current["name"],
            pd=current.get("pd"),
            rolfsen=current.get("rolfsen"),
            expected_cwr=current.get("cwr"),
            mirrored=mirrored in ("yes", "true"),
        )
        if rec.expected_cwr is not None:
            try:
                parse_cwr(rec.expected_cwr)
            except ValueError as exc:
                raise CatalogError(f"{source}:{start}: record {rec.dt_name}: bad cwr value: {exc}") from exc
        records.append(rec)
        current.clear()

    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.strip()
        if line.startswith("#"):
            continue
        if not line:
            flush()
            continue
        key, sep, value = line.partition(":")
        key = key.strip().lower()
        if not sep or key not in _FIELDS:
            raise CatalogError(f"{source}:{lineno}: expected one of {', '.join(_FIELDS)} followed by ':'")
        if not current:
            start = lineno
        if key in current:
            raise CatalogError(f"{source}:{lineno}: field {key!r} repeated in one record")
        current[key] = value.strip()
    flush()

    seen = set()
    for rec in records:
        if rec.dt_name in seen:
            raise CatalogError(f"{source}: duplicate name {rec.dt_name}")
        seen.add(rec.dt_name)
    return records


def load_catalog(path: str | os.PathLike) -> list[KnotRecord]:
    p = Path(path)
    return parse_catalog(p.read_text(encoding="utf-8"), str(p))


def dump_catalog(records: Iterable[KnotRecord]) -> str:
    blocks = []
    for rec in records:
        lines = [f"name: {rec.dt_name}"]
        if rec.rolfsen is not None:
            lines.append(f"rolfsen: {rec.rolfsen}")
        if rec.pd is not None:
            lines.append(f"pd: {rec.pd}")
        if rec.expected_cwr is not None:
            lines.append(f"cwr: {rec.expected_cwr}")
        lines.append(f"mirrored: {'yes' if rec.mirrored else 'no'}")
        blocks.append("\n".join(lines) + "\n")
    return "\n".join(blocks)


def bundled_path(name: str = "knots_upto8") -> Path:
    if name not in _BUNDLED:
        raise CatalogError(f"no bundled catalog {name!r}; choose from {', '.join(_BUNDLED)}")
    return Path(str(resources.files("cwrinv") / "data" / f"{name}.txt"))


def bundled_records() -> list[KnotRecord]:
    """Every bundled record: knots up to 8 crossings, then the larger examples."""
    out = []
    for name in _BUNDLED:
        out.extend(load_catalog(bundled_path(name)))
    return out


def find_record(name: str, records: Sequence[KnotRecord]) -> KnotRecord:
    """Look up by DT name or Rolfsen name (case-insensitive)."""
    key = name.strip().lower()
    for rec in records:
        if rec.dt_name.lower() == key or (rec.rolfsen and rec.rolfsen.lower() == key):
            return rec
    raise CatalogError(f"unknown knot {name!r}")


# -------------------------------------------------------------- regression

@dataclass
class VerifyRow:
    name: str
    status: str  # "pass" | "fail" | "skip" | "error"
    computed: str | None = None
    expected: str | None = None
    message: str = ""


@dataclass
class VerifyReport:
    rows: list[VerifyRow] = field(default_factory=list)

    @property
    def checked(self) -> list[VerifyRow]:
        return [r for r in self.rows if r.status != "skip"]

    @property
    def passed(self) -> int:
        return sum(r.status == "pass" for r in self.rows)

    @property
    def ok(self) -> bool:
        return all(r.status in ("pass", "skip") for r in self.rows) and bool(self.checked)

    def summary(self) -> str:
        return f"{self.passed}/{len(self.checked)} pass"

    def table(self) -> str:
        width = max((len(r.name) for r in self.rows), default=4)
        lines = []
        for r in self.rows:
            line = f"{r.name:<{width}}  {r.status.upper():5}"
            if r.status == "pass":
                line += f"  {r.computed}"
            elif r.status == "fail":
                line += f"  computed {r.computed}\n{'':<{width}}         expected {r.expected}"
            else:
                line += f"  {r.message}"
            lines.append(line)
        lines.append(self.summary())
        return "\n".join(lines)

    def as_dict(self) -> dict:
        return {"ok": self.ok, "passed": self.passed, "checked": len(self.checked),
                "rows": [asdict(r) for r in self.rows]}


def verify_against_expected(records: Sequence[KnotRecord], *, oracle: bool = False) -> VerifyReport:
    """Compare computed CWR with each record's stored value (semantically)."""
    from .matrix_oracle import check_against

    report = VerifyReport()
    for rec in records:
        if rec.pd is None:
            report.rows.append(VerifyRow(rec.dt_name, "skip", message="no PD code"))
            continue
        if rec.expected_cwr is None:
            report.rows.append(VerifyRow(rec.dt_name, "skip", message="no expected value"))
            continue
        try:
            d = rec.diagram()
            value = compute_cwr(d)
            if oracle:
                check_against(d, value)
            expected = parse_cwr(rec.expected_cwr)
        except (ValueError, AssertionError) as exc:
            report.rows.append(VerifyRow(rec.dt_name, "error", message=str(exc)))
            continue
        status = "pass" if value == expected else "fail"
        report.rows.append(VerifyRow(rec.dt_name, status, render_cwr(value), render_cwr(expected)))
    return report


@dataclass
class CompareReport:
    name_a: str
    name_b: str
    value_a: CwrValue
    value_b: CwrValue
    first_difference: int | None  # cycle length index i >= 2, None when equal
    wrp_equal: bool

    @property
    def equal(self) -> bool:
        return self.first_difference is None

    def text(self) -> str:
        lines = [
            f"{self.name_a}: {render_cwr(self.value_a)}",
            f"{self.name_b}: {render_cwr(self.value_b)}",
        ]
        if self.equal:
            lines.append("EQUAL")
        else:
            i = self.first_difference
            a, b = self.value_a[i], self.value_b[i]
            lines.append(
                f"first difference at i={i}: ({render_poly(a[0])}, {render_poly(a[1])}) vs "
                f"({render_poly(b[0])}, {render_poly(b[1])})"
            )
            lines.append("DISTINCT")
        lines.append(f"WRP {'equal' if self.wrp_equal else 'different'}")
        return "\n".join(lines)

    def as_dict(self) -> dict:
        return {
            "a": self.name_a, "b": self.name_b,
            "cwr_a": render_cwr(self.value_a), "cwr_b": render_cwr(self.value_b),
            "equal": self.equal, "first_difference": self.first_difference,
            "wrp_equal": self.wrp_equal,
        }


def compare_values(name_a: str, a: CwrValue, name_b: str, b: CwrValue) -> CompareReport:
    first = None
    for i in range(2, max(a.max_index, b.max_index) + 1):
        if a[i] != b[i]:
            first = i
            break
    return CompareReport(name_a, name_b, a, b, first, derive_wrp(a) == derive_wrp(b))


def distinguishing_report(name_a: str, name_b: str, records: Sequence[KnotRecord] | None = None) -> CompareReport:
    """Names may carry a trailing ``m`` (e.g. ``K12a113m``) to mean the mirror image."""
    if records is None:
        records = bundled_records()

    def resolve(name):
        try:
            return find_record(name, records).diagram()
        except CatalogError:
            if name.lower().endswith("m"):
                return mirror(find_record(name[:-1], records).diagram())
            raise

    return compare_values(name_a, compute_cwr(resolve(name_a)), name_b, compute_cwr(resolve(name_b)))
