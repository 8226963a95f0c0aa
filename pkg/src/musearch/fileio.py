"""Reading and writing matrices and groupings.

Two matrix formats are accepted. A dense matrix is CSV: n rows of n
comma-separated reals, no header. A sparse matrix is whitespace-separated
triplets ``i j value`` with 1-based indices; symmetric entries may be
given once, unlisted entries are zero, and the size is inferred from the
largest index seen. Groupings are CSV lines ``unit,group`` with 1-based
units and group labels 1..k.
"""

from __future__ import annotations

from pathlib import Path

import numpy as np

from .matrix import Grouping, SymmetricMatrix

__all__ = [
    "read_matrix",
    "read_grouping",
    "parse_matrix_text",
    "parse_grouping_text",
    "write_matrix_csv",
    "write_grouping_csv",
]


def _numbered_lines(text: str):
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if line:
            yield lineno, line


def parse_matrix_text(text: str, source: str = "<matrix>") -> SymmetricMatrix:
    lines = list(_numbered_lines(text))
    if not lines:
        raise ValueError(f"{source}: no matrix entries found")
    # Commas mean a dense CSV; bare whitespace means triplets.
    if "," in lines[0][1]:
        return _parse_dense(lines, source)
    return _parse_triplets(lines, source)


def _parse_dense(lines, source: str) -> SymmetricMatrix:
    rows = []
    width = None
    for lineno, line in lines:
        fields = [f.strip() for f in line.split(",")]
        try:
            row = [float(f) for f in fields]
        except ValueError:
            bad = next(f for f in fields if not _is_number(f))
            raise ValueError(f"{source}:{lineno}: invalid number {bad!r}") from None
        if width is None:
            width = len(row)
        elif len(row) != width:
            raise ValueError(
                f"{source}:{lineno}: expected {width} columns, found {len(row)}"
            )
        rows.append(row)
    if len(rows) != width:
        raise ValueError(
            f"{source}: matrix must be square, found {len(rows)} rows of {width} columns"
        )
    try:
        return SymmetricMatrix(rows)
    except ValueError as exc:
        raise ValueError(f"{source}: {exc}") from None


def _is_number(field: str) -> bool:
    try:
        float(field)
        return True
    except ValueError:
        return False


def _parse_triplets(lines, source: str) -> SymmetricMatrix:
    entries: dict[tuple[int, int], tuple[float, int]] = {}
    n = 0
    for lineno, line in lines:
        fields = line.split()
        if len(fields) != 3:
            raise ValueError(
                f"{source}:{lineno}: expected 'i j value', found {len(fields)} fields"
            )
        try:
            i, j = int(fields[0]), int(fields[1])
            value = float(fields[2])
        except ValueError:
            raise ValueError(f"{source}:{lineno}: invalid triplet {line!r}") from None
        if i < 1 or j < 1:
            raise ValueError(f"{source}:{lineno}: indices are 1-based, got ({i},{j})")
        key = (min(i, j), max(i, j))
        if key in entries:
            prior, prior_line = entries[key]
            if prior != value:
                raise ValueError(
                    f"{source}:{lineno}: entry ({i},{j}) is {value!r} but line "
                    f"{prior_line} gave {prior!r}"
                )
        else:
            entries[key] = (value, lineno)
        n = max(n, i, j)
    a = np.zeros((n, n))
    for (i, j), (value, _) in entries.items():
        a[i - 1, j - 1] = value
        a[j - 1, i - 1] = value
    return SymmetricMatrix(a)


def parse_grouping_text(text: str, source: str = "<grouping>") -> Grouping:
    assigned: dict[int, tuple[int, int]] = {}
    for lineno, line in _numbered_lines(text):
        fields = [f.strip() for f in line.split(",")]
        if len(fields) != 2:
            raise ValueError(
                f"{source}:{lineno}: expected 'unit,group', found {len(fields)} fields"
            )
        try:
            unit, group = int(fields[0]), int(fields[1])
        except ValueError:
            raise ValueError(f"{source}:{lineno}: invalid assignment {line!r}") from None
        if unit < 1:
            raise ValueError(f"{source}:{lineno}: unit indices are 1-based, got {unit}")
        if group < 1:
            raise ValueError(f"{source}:{lineno}: group labels are 1-based, got {group}")
        if unit in assigned:
            raise ValueError(
                f"{source}:{lineno}: unit {unit} assigned twice "
                f"(first on line {assigned[unit][1]})"
            )
        assigned[unit] = (group, lineno)
    if not assigned:
        raise ValueError(f"{source}: no group assignments found")
    n = max(assigned)
    missing = [u for u in range(1, n + 1) if u not in assigned]
    if missing:
        raise ValueError(f"{source}: unit {missing[0]} has no group assignment")
    k = max(group for group, _ in assigned.values())
    labels = [assigned[u][0] - 1 for u in range(1, n + 1)]
    used = set(labels)
    unused = [g for g in range(k) if g not in used]
    if unused:
        raise ValueError(
            f"{source}: group labels must cover 1..{k}, label {unused[0] + 1} unused"
        )
    try:
        return Grouping(labels, k)
    except ValueError as exc:
        raise ValueError(f"{source}: {exc}") from None


def read_matrix(path: str | Path) -> SymmetricMatrix:
    path = Path(path)
    return parse_matrix_text(path.read_text(), source=str(path))


def read_grouping(path: str | Path) -> Grouping:
    path = Path(path)
    return parse_grouping_text(path.read_text(), source=str(path))


def write_matrix_csv(matrix: SymmetricMatrix, path: str | Path) -> None:
    a = matrix.to_array()
    lines = [",".join(repr(float(v)) for v in row) for row in a]
    Path(path).write_text("\n".join(lines) + "\n")


def write_grouping_csv(grouping: Grouping, path: str | Path) -> None:
    lines = [f"{i + 1},{grouping.label(i) + 1}" for i in range(grouping.n)]
    Path(path).write_text("\n".join(lines) + "\n")
