"""Partitions, semistandard Young tableaux, reading words, and weights.

Cells are addressed as (i, j) with 1-based row i (top to bottom) and
column j (left to right). Entries of a tableau of rank n lie in [1, n+1].
"""

from __future__ import annotations

from dataclasses import dataclass
from math import prod


class TableauError(ValueError):
    """Base class for shape/filling validation failures."""


class ShapeMismatch(TableauError):
    pass


class RowViolation(TableauError):
    def __init__(self, cell, message):
        super().__init__(f"row violation at {cell}: {message}")
        self.cell = cell


class ColumnViolation(TableauError):
    def __init__(self, cell, message):
        super().__init__(f"column violation at {cell}: {message}")
        self.cell = cell


class EntryOutOfRange(TableauError):
    def __init__(self, cell, message):
        super().__init__(f"entry out of range at {cell}: {message}")
        self.cell = cell


@dataclass(frozen=True, order=True)
class Partition:
    """A weakly decreasing tuple of positive parts together with the crystal
    rank n. Trailing zeros are stripped on construction; the same parts give
    different crystals for different n, so n travels with the shape."""

    parts: tuple[int, ...]
    n: int

    def __post_init__(self):
        parts = tuple(self.parts)
        while parts and parts[-1] == 0:
            parts = parts[:-1]
        object.__setattr__(self, "parts", parts)
        if self.n < 1:
            raise ShapeMismatch(f"rank n must be positive, got {self.n}")
        if any(p <= 0 for p in parts):
            raise ShapeMismatch(f"parts must be positive: {parts}")
        if any(parts[i] < parts[i + 1] for i in range(len(parts) - 1)):
            raise ShapeMismatch(f"parts must be weakly decreasing: {parts}")
        if len(parts) > self.n:
            raise ShapeMismatch(
                f"at most n={self.n} parts allowed, got {len(parts)}"
            )

    def __len__(self):
        return len(self.parts)

    @property
    def size(self) -> int:
        return sum(self.parts)

    def part(self, i: int) -> int:
        """The i-th part (1-based), zero beyond the last row."""
        return self.parts[i - 1] if 1 <= i <= len(self.parts) else 0

    def __str__(self):
        return ",".join(str(p) for p in self.parts)


def parse_partition(text: str, n: int) -> Partition:
    """Parse the "l1,l2,..." textual form."""
    text = text.strip()
    if not text:
        return Partition((), n)
    try:
        parts = tuple(int(tok) for tok in text.split(","))
    except ValueError as exc:
        raise ShapeMismatch(f"bad partition {text!r}") from exc
    return Partition(parts, n)


def dual_shape(shape: Partition) -> Partition:
    """The shape of the dual crystal: pad to n+1 parts with zeros, then
    take first part minus the reversed tail."""
    n = shape.n
    first = shape.part(1)
    parts = tuple(first - shape.part(n + 2 - i) for i in range(1, n + 2))
    return Partition(parts, n)


@dataclass(frozen=True, order=True)
class Tableau:
    """Immutable semistandard filling of a partition shape."""

    shape: Partition
    rows: tuple[tuple[int, ...], ...]

    def entry(self, i: int, j: int) -> int:
        return self.rows[i - 1][j - 1]

    def with_entry(self, i: int, j: int, value: int) -> "Tableau":
        """Copy with one cell replaced; revalidates the filling."""
        grid = [list(row) for row in self.rows]
        grid[i - 1][j - 1] = value
        return validate_tableau(self.shape, grid)

    def __str__(self):
        return format_tableau(self)


def validate_tableau(shape: Partition, grid) -> Tableau:
    """Check a row-major grid against the semistandard conditions for the
    given shape and rank, returning the validated tableau."""
    rows = tuple(tuple(row) for row in grid)
    if len(rows) != len(shape.parts) or any(
        len(rows[i]) != shape.parts[i] for i in range(len(rows))
    ):
        raise ShapeMismatch(
            f"grid row lengths {[len(r) for r in rows]} do not match shape {shape.parts}"
        )
    bound = shape.n + 1
    for i, row in enumerate(rows, start=1):
        for j, val in enumerate(row, start=1):
            if not 1 <= val <= bound:
                raise EntryOutOfRange((i, j), f"{val} not in [1, {bound}]")
            if j > 1 and row[j - 2] > val:
                raise RowViolation((i, j), f"{row[j - 2]} > {val}")
            if i > 1 and j <= len(rows[i - 2]) and rows[i - 2][j - 1] >= val:
                raise ColumnViolation((i, j), f"{rows[i - 2][j - 1]} >= {val}")
    return Tableau(shape, rows)


def highest_weight_tableau(shape: Partition) -> Tableau:
    """The minimal element: row i filled with the entry i."""
    return Tableau(
        shape, tuple((i,) * width for i, width in enumerate(shape.parts, start=1))
    )


def reading_cells(shape: Partition) -> list[tuple[int, int]]:
    """Cells in reading order: rows bottom to top, each left to right."""
    cells = []
    for i in range(len(shape.parts), 0, -1):
        for j in range(1, shape.parts[i - 1] + 1):
            cells.append((i, j))
    return cells


def reading_word(t: Tableau) -> tuple[int, ...]:
    """Entries read row by row from the bottom row up."""
    return tuple(t.entry(i, j) for i, j in reading_cells(t.shape))


def weight(t: Tableau) -> tuple[int, ...]:
    """counts[k-1] = number of entries equal to k, for k in [1, n+1]."""
    counts = [0] * (t.shape.n + 1)
    for row in t.rows:
        for val in row:
            counts[val - 1] += 1
    return tuple(counts)


def format_tableau(t: Tableau) -> str:
    """Canonical textual form: rows joined by '/', entries by ','."""
    return "/".join(",".join(str(v) for v in row) for row in t.rows)


def parse_tableau(text: str, n: int) -> Tableau:
    """Parse the canonical "1,1,2/3"-style form and validate it."""
    try:
        grid = [
            [int(tok) for tok in row.split(",")] for row in text.strip().split("/")
        ]
    except ValueError as exc:
        raise ShapeMismatch(f"bad tableau {text!r}") from exc
    shape = Partition(tuple(len(row) for row in grid), n)
    return validate_tableau(shape, grid)


def hook_content_count(shape: Partition) -> int:
    """Number of semistandard tableaux of this shape with entries at most
    n+1, by the hook-content product."""
    parts = shape.parts
    if not parts:
        return 1
    conj = [sum(1 for p in parts if p >= j) for j in range(1, parts[0] + 1)]
    num = 1
    den = 1
    for i, width in enumerate(parts, start=1):
        for j in range(1, width + 1):
            content = j - i
            hook = (width - j) + (conj[j - 1] - i) + 1
            num *= shape.n + 1 + content
            den *= hook
    count, rem = divmod(num, den)
    if rem:
        raise ArithmeticError("hook-content product is not integral")
    return count
