"""File formats: .cayley tables and the JSON report document.

.cayley layout (whitespace separated, row = left factor):

    line 1:        n
    optional line: names: <n space-free tokens>
    n lines:       n 0-based entries each

Saving then loading reproduces the table bit-exactly.  Report documents are
JSON with a fixed key order; per-report wall-clock times are deliberately not
serialized so identical runs produce byte-identical files.
"""

from __future__ import annotations

import json

from .errors import ParseError
from .groups import GroupTable, validate_group

TOOL_VERSION = "0.1.0"


def load_cayley(path: str) -> GroupTable:
    """Load and fully validate a .cayley file."""
    with open(path, "r", encoding="utf-8") as fh:
        lines = fh.read().splitlines()
    if not lines:
        raise ParseError("empty .cayley file", line=1)
    try:
        n = int(lines[0].strip())
    except ValueError:
        raise ParseError(f"expected the order on line 1, got {lines[0]!r}", line=1) from None
    if n < 1:
        raise ParseError("order must be positive", line=1)
    row_start = 1
    names = None
    if len(lines) > 1 and lines[1].startswith("names:"):
        names = lines[1][len("names:"):].split()
        if len(names) != n:
            raise ParseError(f"expected {n} names, got {len(names)}", line=2)
        row_start = 2
    data_lines = [ln for ln in lines[row_start:] if ln.strip()]
    if len(data_lines) != n:
        raise ParseError(f"expected {n} table rows, got {len(data_lines)}", line=row_start + 1)
    table = []
    for r, ln in enumerate(data_lines):
        tokens = ln.split()
        if len(tokens) != n:
            raise ParseError(f"expected {n} entries, got {len(tokens)}", line=row_start + 1 + r)
        row = []
        for c, tok in enumerate(tokens):
            try:
                row.append(int(tok))
            except ValueError:
                raise ParseError(f"bad entry {tok!r}", line=row_start + 1 + r, column=c + 1) from None
        table.append(row)
    return validate_group(table, names)


def save_cayley(group: GroupTable, path: str) -> None:
    with open(path, "w", encoding="utf-8") as fh:
        fh.write(f"{group.order}\n")
        if group.names is not None:
            fh.write("names: " + " ".join(group.names) + "\n")
        for row in group.table:
            fh.write(" ".join(str(int(x)) for x in row) + "\n")


def build_report_document(reports, config: dict) -> dict:
    """Assemble the self-contained report document with stable key order."""
    summary = {"verified": 0, "falsified": 0, "skipped": 0}
    serialized = []
    for rep in reports:
        summary[rep.status.lower()] += 1
        serialized.append(rep.to_json())
    return {
        "tool_version": TOOL_VERSION,
        "config": config,
        "reports": serialized,
        "summary": summary,
    }


def document_to_json(document: dict) -> str:
    return json.dumps(document, indent=2) + "\n"
