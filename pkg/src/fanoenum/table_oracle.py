"""The embedded classification table and the diff against computed records.

The ground truth ships as a JSON array inside the package (one object per
family) and can be swapped out with the ``FANO_GROUND_TRUTH`` environment
variable pointing at an alternative file of the same shape.  All comparisons
are exact on integers; descriptions are compared as multisets after a
normalization that forgets case and punctuation.
"""

from __future__ import annotations

import csv
import io
import json
import os
from dataclasses import dataclass
from importlib import resources
from pathlib import Path
from typing import Iterable, Mapping

from .errors import ConstraintError, UnsupportedScopeError
from .ray_constraints import RayType

__all__ = [
    "TableRow",
    "DiffReport",
    "ground_truth",
    "truth_source",
    "record_to_row",
    "diff",
    "emit",
    "parse_rows",
]

# Per-ray integer data a row may carry, in emission order.
_INVARIANT_FIELDS = ("deg_delta", "d2", "r", "L3", "degB", "genus", "e", "delta_bidegree")

_EMIT_FORMATS = ("json", "csv", "markdown")


@dataclass(frozen=True)
class TableRow:
    """One classification-table row in a solver-independent shape.

    ``ray_types`` holds type tags ("C1" .. "E5", with "E34" for E3/E4) in
    canonical order; ``invariants`` maps a field name to a per-ray tuple
    aligned with ``ray_types``, with None where the field does not apply.
    """

    table_id: str
    rho: int
    kx3: int
    primitive: bool
    ray_types: tuple[str, ...]
    invariants: Mapping[str, tuple]
    descriptions: tuple[str, ...]


@dataclass(frozen=True)
class DiffReport:
    """Outcome of comparing computed records against table rows.

    ``missing`` lists table ids no record matched; ``extra`` labels records
    that matched no row (or matched one twice); ``mismatched`` holds
    (table_id, field, expected, actual) for every disagreeing value.  The
    report is truthy exactly when there is something to report.
    """

    missing: tuple[str, ...] = ()
    extra: tuple[str, ...] = ()
    mismatched: tuple[tuple[str, str, object, object], ...] = ()

    @property
    def is_empty(self) -> bool:
        return not (self.missing or self.extra or self.mismatched)

    def __bool__(self) -> bool:
        return not self.is_empty

    def render(self) -> str:
        if self.is_empty:
            return "no differences"
        lines = []
        for table_id in self.missing:
            lines.append(f"missing: no computed record matches row {table_id}")
        for label in self.extra:
            lines.append(f"extra: computed record {label} matches no row")
        for table_id, fieldname, expected, actual in self.mismatched:
            lines.append(
                f"mismatch at {table_id}.{fieldname}: table has {expected!r}, "
                f"computed {actual!r}"
            )
        return "\n".join(lines)


def _freeze(value):
    if isinstance(value, list):
        return tuple(_freeze(v) for v in value)
    return value


def _thaw(value):
    if isinstance(value, tuple):
        return [_thaw(v) for v in value]
    return value


def truth_source() -> str:
    """Identifier of the active ground-truth source (for caching)."""
    return os.environ.get("FANO_GROUND_TRUTH", "<packaged>")


def parse_rows(data: bytes) -> tuple[TableRow, ...]:
    """Parse the JSON row-array format back into TableRow objects."""
    raw = json.loads(data.decode("utf-8"))
    if not isinstance(raw, list):
        raise ConstraintError("ground truth must be a JSON array of row objects")
    rows = []
    for item in raw:
        rows.append(
            TableRow(
                table_id=str(item["table_id"]),
                rho=int(item["rho"]),
                kx3=int(item["kx3"]),
                primitive=bool(item["primitive"]),
                ray_types=tuple(str(t) for t in item["ray_types"]),
                invariants={
                    str(k): _freeze(v) for k, v in item.get("invariants", {}).items()
                },
                descriptions=tuple(str(d) for d in item.get("descriptions", ())),
            )
        )
    return tuple(rows)


def _load_all_rows() -> tuple[TableRow, ...]:
    override = os.environ.get("FANO_GROUND_TRUTH")
    if override:
        payload = Path(override).read_bytes()
    else:
        payload = (
            resources.files("fanoenum").joinpath("data/ground_truth.json").read_bytes()
        )
    return parse_rows(payload)


def ground_truth(rho: int, primitive_only: bool = False) -> tuple[TableRow, ...]:
    """The embedded table rows of the given Picard rank, in file order."""
    if rho not in (2, 3):
        raise UnsupportedScopeError(f"no table for Picard rank {rho}")
    rows = tuple(row for row in _load_all_rows() if row.rho == rho)
    if primitive_only:
        rows = tuple(row for row in rows if row.primitive)
    return rows


def record_to_row(record) -> TableRow:
    """Project a solution record onto the table-row shape used for diffs."""
    invariants: dict[str, tuple] = {}
    for name in _INVARIANT_FIELDS:
        values = tuple(getattr(spec, name) for spec in record.rays)
        if any(v is not None for v in values):
            invariants[name] = values
    primitive = record.rho == 3 or all(
        t is not RayType.E1 for t in record.ray_types
    )
    return TableRow(
        table_id=record.table_id,
        rho=record.rho,
        kx3=record.kx3,
        primitive=primitive,
        ray_types=tuple(t.value for t in record.ray_types),
        invariants=invariants,
        descriptions=tuple(record.descriptions),
    )


def _normalize_description(text: str) -> str:
    cleaned = "".join(ch if ch.isalnum() else " " for ch in text.lower())
    return " ".join(cleaned.split())


def _normalized_multiset(descriptions: Iterable[str]) -> tuple[str, ...]:
    return tuple(sorted(_normalize_description(d) for d in descriptions))


def _record_label(row: TableRow) -> str:
    rays = "+".join(row.ray_types)
    table_id = row.table_id or "?"
    return f"{table_id} (rho={row.rho}, (-K)^3={row.kx3}, rays={rays})"


def diff(records, rows: Iterable[TableRow]) -> DiffReport:
    """Field-by-field comparison of computed records against table rows.

    Every invariant the table states is checked against the computed value
    (table entries of None are "not applicable" and skipped); computed fields
    the table does not mention are ignored, so the table stays the single
    yardstick.  Descriptions compare as normalized multisets.
    """
    by_id = {row.table_id: row for row in rows}
    matched: set[str] = set()
    extra: list[str] = []
    mismatched: list[tuple[str, str, object, object]] = []
    for record in records:
        computed = record if isinstance(record, TableRow) else record_to_row(record)
        table_id = computed.table_id
        if not table_id or table_id not in by_id or table_id in matched:
            extra.append(_record_label(computed))
            continue
        matched.add(table_id)
        row = by_id[table_id]
        if computed.kx3 != row.kx3:
            mismatched.append((table_id, "kx3", row.kx3, computed.kx3))
        if computed.ray_types != row.ray_types:
            mismatched.append((table_id, "ray_types", row.ray_types, computed.ray_types))
        if computed.primitive != row.primitive:
            mismatched.append((table_id, "primitive", row.primitive, computed.primitive))
        for key in sorted(row.invariants):
            expected_values = row.invariants[key]
            actual_values = computed.invariants.get(key)
            for i, expected in enumerate(expected_values):
                if expected is None:
                    continue
                actual = None
                if actual_values is not None and i < len(actual_values):
                    actual = actual_values[i]
                if actual != expected:
                    mismatched.append(
                        (table_id, f"invariants.{key}[{i}]", expected, actual)
                    )
        if _normalized_multiset(computed.descriptions) != _normalized_multiset(
            row.descriptions
        ):
            mismatched.append(
                (table_id, "descriptions", row.descriptions, computed.descriptions)
            )
    missing = tuple(row.table_id for row in rows if row.table_id not in matched)
    return DiffReport(missing=missing, extra=tuple(extra), mismatched=tuple(mismatched))


def _row_dict(row: TableRow) -> dict:
    return {
        "table_id": row.table_id,
        "rho": row.rho,
        "kx3": row.kx3,
        "primitive": row.primitive,
        "ray_types": list(row.ray_types),
        "invariants": {k: _thaw(v) for k, v in row.invariants.items()},
        "descriptions": list(row.descriptions),
    }


def _emit_json(rows: tuple[TableRow, ...]) -> bytes:
    return json.dumps([_row_dict(r) for r in rows], indent=2, sort_keys=True).encode(
        "utf-8"
    )


def _emit_csv(rows: tuple[TableRow, ...]) -> bytes:
    buffer = io.StringIO()
    writer = csv.writer(buffer, lineterminator="\n")
    writer.writerow(["table_id", "rho", "kx3", "rays", "primitive", "descriptions"])
    for row in rows:
        writer.writerow(
            [
                row.table_id,
                row.rho,
                row.kx3,
                "+".join(row.ray_types),
                "yes" if row.primitive else "no",
                " | ".join(row.descriptions),
            ]
        )
    return buffer.getvalue().encode("utf-8")


def _emit_markdown(rows: tuple[TableRow, ...]) -> bytes:
    lines = [
        "| no. | (-K)^3 | description | extremal rays |",
        "| --- | --- | --- | --- |",
    ]
    for row in rows:
        rays = " + ".join(RayType(tag).display for tag in row.ray_types)
        description = ", or ".join(row.descriptions)
        lines.append(f"| {row.table_id} | {row.kx3} | {description} | {rays} |")
    return ("\n".join(lines) + "\n").encode("utf-8")


def emit(rows: Iterable[TableRow], fmt: str = "json") -> bytes:
    """Serialize rows deterministically as UTF-8 bytes with LF newlines."""
    rows = tuple(rows)
    if fmt == "json":
        return _emit_json(rows)
    if fmt == "csv":
        return _emit_csv(rows)
    if fmt == "markdown":
        return _emit_markdown(rows)
    raise ConstraintError(
        f"unknown output format {fmt!r}; expected one of {', '.join(_EMIT_FORMATS)}"
    )
