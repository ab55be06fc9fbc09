"""Embedded table of alternating knot diagrams through 8 crossings.

The table file has one ``name: X(...) X(...) ...`` line per knot and is
re-validated on load, so a corrupted or hand-edited table fails loudly
rather than feeding bad diagrams downstream.  The environment variable
``KNOTPERI_TABLE`` overrides the file path.
"""

from __future__ import annotations

import os
from dataclasses import dataclass
from importlib import resources

from .diagram import PdCode, parse_pd, compute_regions, validate

# the only alternating torus knots are the (2, k) torus knots
_TORUS = frozenset({"3_1", "5_1", "7_1"})


class TableError(ValueError):
    """Malformed or invalid knot-table data."""


@dataclass(frozen=True)
class KnotTableEntry:
    name: str
    pd: PdCode
    is_torus: bool

    @property
    def crossings(self) -> int:
        return self.pd.n


def _table_text() -> str:
    override = os.environ.get("KNOTPERI_TABLE")
    if override:
        with open(override, encoding="utf-8") as f:
            return f.read()
    return resources.files("knotperi.data").joinpath("knot_table.txt").read_text()


def load_table(validate_entries: bool = True) -> dict:
    """name -> KnotTableEntry, in table order."""
    out: dict = {}
    for lineno, raw in enumerate(_table_text().splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        name, sep, body = line.partition(":")
        name = name.strip()
        if not sep or not name:
            raise TableError(f"table line {lineno}: expected `name: PD`, got {raw!r}")
        if name in out:
            raise TableError(f"table line {lineno}: duplicate entry {name!r}")
        pd = parse_pd(body)
        if validate_entries:
            rep = validate(compute_regions(pd))
            if not rep.ok:
                raise TableError(
                    f"table entry {name!r} is not reduced/prime/alternating: "
                    f"{'; '.join(rep.problems)}"
                )
        out[name] = KnotTableEntry(name, pd, name in _TORUS)
    if not out:
        raise TableError("knot table is empty")
    return out


def get_knot(name: str) -> KnotTableEntry:
    table = load_table()
    if name not in table:
        known = ", ".join(table)
        raise TableError(f"unknown knot {name!r}; table has: {known}")
    return table[name]
