"""Bigraded dimension tables, the common output currency.

A table maps (i, j) to a non-negative dimension; absent keys mean 0.
Tables carry light metadata: a source label, the truncation jmax (None
for tables complete in all degrees), optionally the (q, r) strip bound
they are expected to satisfy, and per-j Euler checksums when produced
by the homology engine.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from typing import Mapping


@dataclass(frozen=True)
class BigradedTable:
    entries: dict = field(default_factory=dict)  # (i, j) -> dim > 0
    source: str = ""
    jmax: int | None = None
    strip: tuple[int, int] | None = None  # (q, r) if known
    checksums: dict | None = None  # j -> alternating dimension sum

    def __post_init__(self) -> None:
        clean = {}
        for (i, j), dim in self.entries.items():
            if dim < 0:
                raise ValueError(f"negative dimension {dim} at ({i},{j})")
            if dim > 0:
                clean[(int(i), int(j))] = int(dim)
        object.__setattr__(self, "entries", clean)

    def get(self, i: int, j: int) -> int:
        return self.entries.get((i, j), 0)

    def total(self) -> int:
        return sum(self.entries.values())

    def items_sorted(self) -> list[tuple[int, int, int]]:
        """(i, j, dim) triples sorted by (j, i)."""
        return [(i, j, d) for (i, j), d in sorted(self.entries.items(), key=lambda kv: (kv[0][1], kv[0][0]))]

    def row(self, i: int) -> dict:
        return {j: d for (ii, j), d in self.entries.items() if ii == i}

    def restrict(self, jmax: int) -> "BigradedTable":
        """Sub-table of entries with j <= jmax."""
        kept = {(i, j): d for (i, j), d in self.entries.items() if j <= jmax}
        checks = None
        if self.checksums is not None:
            checks = {j: v for j, v in self.checksums.items() if j <= jmax}
        return BigradedTable(kept, source=self.source, jmax=jmax, strip=self.strip, checksums=checks)

    def same_entries(self, other: "BigradedTable") -> bool:
        return self.entries == other.entries


def table_to_document(table: BigradedTable, source: Mapping) -> dict:
    """Serialisable table document; all values integers, stable field order."""
    doc: dict = {
        "schema": "loghodge/1",
        "source": dict(source),
        "jmax": table.jmax,
        "entries": [{"i": i, "j": j, "dim": d} for i, j, d in table.items_sorted()],
    }
    if table.strip is not None:
        doc["strip"] = {"q": table.strip[0], "r": table.strip[1]}
    if table.checksums is not None:
        doc["checksums"] = {str(j): v for j, v in sorted(table.checksums.items())}
    return doc


def table_from_document(doc: Mapping) -> BigradedTable:
    if doc.get("schema") != "loghodge/1":
        raise ValueError(f"unsupported schema: {doc.get('schema')!r}")
    entries = {}
    for item in doc.get("entries", ()):
        key = (int(item["i"]), int(item["j"]))
        if key in entries:
            raise ValueError(f"duplicate table entry at {key}")
        entries[key] = int(item["dim"])
    strip = None
    if "strip" in doc:
        strip = (int(doc["strip"]["q"]), int(doc["strip"]["r"]))
    checksums = None
    if "checksums" in doc:
        checksums = {int(j): int(v) for j, v in doc["checksums"].items()}
    jmax = doc.get("jmax")
    return BigradedTable(
        entries,
        source=json.dumps(doc.get("source", {}), sort_keys=True),
        jmax=None if jmax is None else int(jmax),
        strip=strip,
        checksums=checksums,
    )
