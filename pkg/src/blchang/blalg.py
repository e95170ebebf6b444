"""Reader and writer for the ``blalg v1`` finite-algebra text format.

::

    blalg v1
    elements: 0 a 1
    bottom: 0
    top: 1
    otimes:
    0 0 0
    0 a a
    0 a 1
    imp:
    1 1 1
    0 1 1
    0 a 1

Rows are left operands.  ``#`` starts a comment.  Lattice operations are
always derived, never read.
"""
from __future__ import annotations

from pathlib import Path

from .algebra import Algebra, FiniteTable
from .errors import ParseError

HEADER = "blalg v1"


def parse_blalg(text: str, name: str = "table") -> FiniteTable:
    lines = []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if line:
            lines.append((lineno, line))
    if not lines or lines[0][1] != HEADER:
        raise ParseError(f"missing '{HEADER}' header", lines[0][0] if lines else 1)

    names = bottom = top = None
    tables = {}
    pos = 1
    seen = set()
    while pos < len(lines):
        lineno, line = lines[pos]
        key, sep, rest = line.partition(":")
        key = key.strip()
        if not sep:
            raise ParseError(f"expected 'key:' line, got {line!r}", lineno)
        if key in seen:
            raise ParseError(f"duplicate section {key!r}", lineno)
        seen.add(key)
        rest = rest.strip()
        pos += 1
        if key == "elements":
            names = rest.split()
            if not names:
                raise ParseError("no elements listed", lineno)
            dup = {n for n in names if names.count(n) > 1}
            if dup:
                raise ParseError(f"duplicate element label(s) {sorted(dup)}", lineno)
        elif key in ("bottom", "top"):
            if names is None:
                raise ParseError(f"'{key}' before 'elements'", lineno)
            if rest not in names:
                raise ParseError(f"unknown label {rest!r} for {key}", lineno)
            if key == "bottom":
                bottom = names.index(rest)
            else:
                top = names.index(rest)
        elif key in ("otimes", "imp"):
            if names is None:
                raise ParseError(f"'{key}' before 'elements'", lineno)
            if rest:
                raise ParseError(f"table rows must start on the line after '{key}:'", lineno)
            n = len(names)
            rows = []
            for _ in range(n):
                if pos >= len(lines) or ":" in lines[pos][1]:
                    raise ParseError(f"{key} table has fewer than {n} rows",
                                     lines[pos][0] if pos < len(lines) else lineno)
                rlineno, rline = lines[pos]
                cells = rline.split()
                if len(cells) != n:
                    raise ParseError(f"{key} row has {len(cells)} entries, expected {n} (table must be square)",
                                     rlineno)
                row = []
                for c in cells:
                    if c not in names:
                        raise ParseError(f"unknown label {c!r} in {key} table", rlineno)
                    row.append(names.index(c))
                rows.append(row)
                pos += 1
            if pos < len(lines) and ":" not in lines[pos][1]:
                raise ParseError(f"{key} table has more than {n} rows", lines[pos][0])
            tables[key] = rows
        else:
            raise ParseError(f"unknown section {key!r}", lineno)

    for key in ("elements", "bottom", "top", "otimes", "imp"):
        if key not in seen:
            raise ParseError(f"missing section {key!r}", lines[-1][0])
    return FiniteTable(names, bottom, top, tables["otimes"], tables["imp"], name=name)


def read_blalg(path) -> FiniteTable:
    path = Path(path)
    return parse_blalg(path.read_text(), name=path.stem)


def format_blalg(A: Algebra) -> str:
    els = A.elements()
    labels = [A.fmt(x).replace(" ", "") for x in els]
    if len(set(labels)) != len(labels):
        labels = [f"e{i}" for i in range(len(els))]
    idx = {x: i for i, x in enumerate(els)}
    out = [HEADER, "elements: " + " ".join(labels),
           f"bottom: {labels[idx[A.bottom]]}", f"top: {labels[idx[A.top]]}", "otimes:"]
    out += [" ".join(labels[idx[A._mul(x, y)]] for y in els) for x in els]
    out.append("imp:")
    out += [" ".join(labels[idx[A._imp(x, y)]] for y in els) for x in els]
    return "\n".join(out) + "\n"


def write_blalg(A: Algebra, path) -> None:
    Path(path).write_text(format_blalg(A))
