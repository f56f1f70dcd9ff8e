"""Partitions, domino cells, signed permutations and standard r-domino tableaux.

Coordinates are 1-based ``(row, col)`` pairs.  A standard r-domino tableau is
stored as a grid of labels over a partition shape whose 2-core is the
staircase ``(r, r-1, ..., 1)``; the staircase cells carry the label 0 and
every positive label occupies exactly two edge-adjacent cells (one domino).
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property
from itertools import permutations, product

Cell = tuple[int, int]
Partition = tuple[int, ...]


class DominoError(ValueError):
    """Base class for the errors raised by this package."""


class PreconditionViolated(DominoError):
    pass


class InvalidTableau(DominoError):
    pass


# ---------------------------------------------------------------------------
# partitions
# ---------------------------------------------------------------------------

def is_partition(parts) -> bool:
    parts = tuple(parts)
    if any((not isinstance(p, int)) or p <= 0 for p in parts):
        return False
    return all(parts[i] >= parts[i + 1] for i in range(len(parts) - 1))


def check_partition(parts) -> Partition:
    parts = tuple(parts)
    if not is_partition(parts):
        raise PreconditionViolated(f"not a partition: {parts!r}")
    return parts


def partition_cells(parts: Partition) -> set[Cell]:
    """Cell-set view { (i,j) : 1 <= j <= parts[i-1] }."""
    return {(i, j) for i, p in enumerate(parts, start=1) for j in range(1, p + 1)}


def cells_to_partition(cells: set[Cell]) -> Partition:
    """Inverse of :func:`partition_cells`; raises if the set is not a partition."""
    if not cells:
        return ()
    rows: dict[int, int] = {}
    for (i, j) in cells:
        rows[i] = max(rows.get(i, 0), j)
    nrows = max(rows)
    parts = tuple(rows.get(i, 0) for i in range(1, nrows + 1))
    if len(cells) != sum(parts) or not is_partition(parts):
        raise PreconditionViolated(f"cell set is not a partition: {sorted(cells)}")
    if partition_cells(parts) != cells:
        raise PreconditionViolated(f"cell set is not a partition: {sorted(cells)}")
    return parts


def staircase(r: int) -> Partition:
    """The r-staircase (r, r-1, ..., 1)."""
    if r < 0:
        raise PreconditionViolated("r must be nonnegative")
    return tuple(range(r, 0, -1))


def staircase_cells(r: int) -> set[Cell]:
    return partition_cells(staircase(r))


def is_skew_shape(cells: set[Cell]) -> bool:
    """True iff the cell set equals lam/mu for some partitions mu within lam.

    A skew shape has contiguous rows whose left and right ends weakly
    decrease downwards; a nonempty row separated from the one above it by
    empty rows must in addition fit strictly left of that row's start.
    """
    if not cells:
        return True
    if any(i < 1 or j < 1 for (i, j) in cells):
        return False
    rows: dict[int, list[int]] = {}
    for (i, j) in cells:
        rows.setdefault(i, []).append(j)
    spans: dict[int, tuple[int, int]] = {}
    for i, cols in rows.items():
        lo, hi = min(cols), max(cols)
        if len(cols) != hi - lo + 1:
            return False
        spans[i] = (lo, hi)
    occupied = sorted(spans)
    for above, below in zip(occupied, occupied[1:]):
        (la, ra), (lb, rb) = spans[above], spans[below]
        if lb > la or rb > ra:
            return False
        if below > above + 1 and rb > la - 1:
            return False
    return True


def shape_add(gamma: set[Cell], extra: set[Cell]) -> set[Cell]:
    """Disjoint union of two cell sets; the result must be a skew shape."""
    gamma, extra = set(gamma), set(extra)
    if gamma & extra:
        raise PreconditionViolated("shape_add: operands are not disjoint")
    union = gamma | extra
    if not is_skew_shape(union):
        raise PreconditionViolated("shape_add: union is not a skew shape")
    return union


def shape_remove(gamma: set[Cell], inner: set[Cell]) -> set[Cell]:
    """Set difference of two cell sets; the result must be a skew shape."""
    gamma, inner = set(gamma), set(inner)
    if not inner <= gamma:
        raise PreconditionViolated("shape_remove: second operand not contained in first")
    diff = gamma - inner
    if not is_skew_shape(diff):
        raise PreconditionViolated("shape_remove: difference is not a skew shape")
    return diff


# ---------------------------------------------------------------------------
# domino cells
# ---------------------------------------------------------------------------

@dataclass(frozen=True, order=True)
class DominoCell:
    """A pair of edge-adjacent cells; ``anchor`` is the lexicographically smaller one."""

    anchor: Cell
    horizontal: bool

    @property
    def cells(self) -> tuple[Cell, Cell]:
        i, j = self.anchor
        return ((i, j), (i, j + 1)) if self.horizontal else ((i, j), (i + 1, j))

    @property
    def shape(self) -> frozenset[Cell]:
        return frozenset(self.cells)

    def transpose(self) -> "DominoCell":
        i, j = self.anchor
        return DominoCell((j, i), not self.horizontal)

    @classmethod
    def from_cells(cls, cells) -> "DominoCell":
        a, b = sorted(cells)
        if b == (a[0], a[1] + 1):
            return cls(a, True)
        if b == (a[0] + 1, a[1]):
            return cls(a, False)
        raise PreconditionViolated(f"cells {a}, {b} are not edge-adjacent")

    def __repr__(self):
        return f"DominoCell({self.cells[0]}, {self.cells[1]})"


def domino_corners(parts: Partition) -> set[DominoCell]:
    """All domino cells A with parts (-) A still a partition."""
    parts = check_partition(parts)
    out: set[DominoCell] = set()
    k = len(parts)
    for i, p in enumerate(parts, start=1):
        below = parts[i] if i < k else 0
        # horizontal at the end of row i
        if p - 2 >= below:
            out.add(DominoCell((i, p - 1), True))
        # vertical over rows i, i+1 requires equal row ends
        if i < k and parts[i] == p:
            below2 = parts[i + 1] if i + 1 < k else 0
            if p - 1 >= below2:
                out.add(DominoCell((i, p), False))
    return out


def empty_domino_corners(parts: Partition) -> set[DominoCell]:
    """All domino cells A with parts (+) A still a partition."""
    parts = check_partition(parts)
    out: set[DominoCell] = set()
    k = len(parts)
    for i in range(1, k + 2):
        p = parts[i - 1] if i <= k else 0
        above = parts[i - 2] if i >= 2 else None
        if above is None or p + 2 <= above:
            out.add(DominoCell((i, p + 1), True))
        if above is None or p + 1 <= above:
            below = parts[i] if i < k else 0
            if below == p:
                out.add(DominoCell((i, p + 1), False))
    return out


def two_core(parts: Partition) -> tuple[Partition, int]:
    """Reduce a partition to its 2-core staircase by removing domino corners.

    Returns the staircase and the number of dominos removed; the result does
    not depend on the removal order.
    """
    parts = check_partition(parts)
    removed = 0
    current = parts
    while True:
        corners = domino_corners(current)
        if not corners:
            break
        corner = min(corners)
        cells = partition_cells(current) - set(corner.cells)
        current = cells_to_partition(cells)
        removed += 1
    return current, removed


# ---------------------------------------------------------------------------
# signed permutations
# ---------------------------------------------------------------------------

SignedPermutation = tuple[int, ...]


def check_signed_permutation(values) -> SignedPermutation:
    values = tuple(values)
    n = len(values)
    if sorted(abs(v) for v in values) != list(range(1, n + 1)):
        raise PreconditionViolated(f"not a signed permutation: {values!r}")
    return values


def inverse_signed(alpha: SignedPermutation) -> SignedPermutation:
    """One-line notation of alpha^{-1} in B_n."""
    n = len(alpha)
    inv = [0] * n
    for pos, v in enumerate(alpha, start=1):
        if v > 0:
            inv[v - 1] = pos
        else:
            inv[-v - 1] = -pos
    return tuple(inv)


def all_signed_permutations(n: int):
    """Iterate over B_n (n! * 2^n elements) in a deterministic order."""
    for perm in permutations(range(1, n + 1)):
        for signs in product((1, -1), repeat=n):
            yield tuple(p * s for p, s in zip(perm, signs))


# ---------------------------------------------------------------------------
# domino tableaux
# ---------------------------------------------------------------------------

class DominoTableau:
    """A grid of labels over a partition; label 0 marks the r-staircase core.

    Instances are treated as immutable; all operations return new tableaux.
    """

    __slots__ = ("r", "rows", "__dict__")

    def __init__(self, r: int, rows):
        self.r = r
        self.rows = tuple(tuple(row) for row in rows)

    def __eq__(self, other):
        return (
            isinstance(other, DominoTableau)
            and self.r == other.r
            and self.rows == other.rows
        )

    def __hash__(self):
        return hash((self.r, self.rows))

    def __repr__(self):
        return f"DominoTableau(r={self.r}, rows={[list(r) for r in self.rows]})"

    @cached_property
    def shape(self) -> Partition:
        return tuple(len(row) for row in self.rows)

    @cached_property
    def size(self) -> int:
        return sum(self.shape)

    @cached_property
    def grid(self) -> dict[Cell, int]:
        return {
            (i, j): v
            for i, row in enumerate(self.rows, start=1)
            for j, v in enumerate(row, start=1)
        }

    @cached_property
    def dominos(self) -> dict[int, DominoCell]:
        """Map label -> DominoCell; raises InvalidTableau on malformed labels."""
        spots: dict[int, list[Cell]] = {}
        for cell, v in self.grid.items():
            if v != 0:
                spots.setdefault(v, []).append(cell)
        out = {}
        for v, cells in spots.items():
            if len(cells) != 2:
                raise InvalidTableau(f"label {v} occupies {len(cells)} cells")
            try:
                out[v] = DominoCell.from_cells(cells)
            except PreconditionViolated:
                raise InvalidTableau(f"label {v} is not a domino") from None
        return out

    @cached_property
    def labels(self) -> tuple[int, ...]:
        return tuple(sorted(self.dominos))

    def dom(self, a: int) -> DominoCell:
        try:
            return self.dominos[a]
        except KeyError:
            raise DominoError(f"label {a} not in tableau") from None

    def label_at(self, cell: Cell, default=None):
        return self.grid.get(cell, default)

    def transpose(self) -> "DominoTableau":
        return from_dominos(self.r, {a: d.transpose() for a, d in self.dominos.items()})

    def restrict_below_eq(self, a: int) -> "DominoTableau":
        return from_dominos(self.r, {b: d for b, d in self.dominos.items() if b <= a})


@dataclass(eq=True)
class SkewDominoTableau:
    """Dominos sitting outside an inner partition shape."""

    inner: Partition
    dominos: dict[int, DominoCell]

    def cells(self) -> set[Cell]:
        out = partition_cells(self.inner)
        for d in self.dominos.values():
            out |= set(d.cells)
        return out


def from_dominos(r: int, dominos: dict[int, DominoCell]) -> DominoTableau:
    """Assemble a tableau from the staircase core plus a label -> domino map."""
    grid: dict[Cell, int] = {c: 0 for c in staircase_cells(r)}
    for a, d in dominos.items():
        for c in d.cells:
            if c in grid:
                raise InvalidTableau(f"overlapping cells at {c}")
            grid[c] = a
    rows: dict[int, int] = {}
    for (i, j) in grid:
        rows[i] = max(rows.get(i, 0), j)
    nrows = max(rows) if rows else 0
    out = []
    for i in range(1, nrows + 1):
        width = rows.get(i, 0)
        row = []
        for j in range(1, width + 1):
            if (i, j) not in grid:
                raise InvalidTableau(f"hole at {(i, j)}")
            row.append(grid[(i, j)])
        out.append(tuple(row))
    return DominoTableau(r, out)


def empty_tableau(r: int) -> DominoTableau:
    return from_dominos(r, {})


def transpose_tableau(t: DominoTableau) -> DominoTableau:
    return t.transpose()


def restrict(t: DominoTableau, a: int, mode: str):
    """Restrict to labels by comparison with ``a``.

    ``below``/``below_eq`` return a DominoTableau; ``above``/``above_eq``
    return a SkewDominoTableau whose inner shape is the complementary part.
    """
    if mode == "below":
        keep = {b: d for b, d in t.dominos.items() if b < a}
        return from_dominos(t.r, keep)
    if mode == "below_eq":
        keep = {b: d for b, d in t.dominos.items() if b <= a}
        return from_dominos(t.r, keep)
    if mode == "above":
        inner = from_dominos(t.r, {b: d for b, d in t.dominos.items() if b <= a}).shape
        return SkewDominoTableau(inner, {b: d for b, d in t.dominos.items() if b > a})
    if mode == "above_eq":
        inner = from_dominos(t.r, {b: d for b, d in t.dominos.items() if b < a}).shape
        return SkewDominoTableau(inner, {b: d for b, d in t.dominos.items() if b >= a})
    raise PreconditionViolated(f"unknown restriction mode {mode!r}")


def reassemble(lower: DominoTableau, upper: SkewDominoTableau) -> DominoTableau:
    """Inverse of the below_eq/above split of :func:`restrict`."""
    if lower.shape != upper.inner:
        raise PreconditionViolated("inner shape does not match lower part")
    merged = dict(lower.dominos)
    for a, d in upper.dominos.items():
        if a in merged:
            raise PreconditionViolated(f"duplicate label {a}")
        merged[a] = d
    return from_dominos(lower.r, merged)


def validate_tableau(t: DominoTableau) -> list[str]:
    """Check every invariant of a standard r-domino tableau.

    Returns a list of human-readable violations; an empty list means valid.
    """
    issues: list[str] = []
    shape = t.shape
    if not (shape == () or is_partition(shape)):
        issues.append(f"shape {shape} is not a partition")
        return issues
    core = staircase_cells(t.r)
    zero_cells = {c for c, v in t.grid.items() if v == 0}
    if zero_cells != core:
        issues.append(
            f"core cells {sorted(zero_cells)} differ from the {t.r}-staircase"
        )
    if any(v < 0 for v in t.grid.values()):
        issues.append("negative labels present")
        return issues
    if shape:
        cr, _ = two_core(shape)
        if cr != staircase(t.r):
            issues.append(f"shape 2-core {cr} is not the {t.r}-staircase")
    spots: dict[int, list[Cell]] = {}
    for cell, v in t.grid.items():
        if v > 0:
            spots.setdefault(v, []).append(cell)
    for v, cells in sorted(spots.items()):
        if len(cells) != 2 or len(set(cells)) != 2:
            issues.append(f"label {v} occupies {len(cells)} cells, not 2")
            continue
        a, b = sorted(cells)
        if not (b == (a[0], a[1] + 1) or b == (a[0] + 1, a[1])):
            issues.append(f"label {v} is not a domino: cells {a}, {b}")
    if issues:
        return issues
    # reading condition: rows and columns weakly increase, equal adjacent
    # labels only within one domino
    for (i, j), v in t.grid.items():
        for nb in ((i, j + 1), (i + 1, j)):
            w = t.grid.get(nb)
            if w is None:
                continue
            if w < v:
                issues.append(f"labels decrease from {(i, j)} to {nb}")
            elif w == v and v != 0:
                pass  # same domino; multiplicity was checked above
    # every restriction T_{<=a} must have partition shape
    cells_so_far = set(core)
    for v in sorted(spots):
        cells_so_far |= set(spots[v])
        rows: dict[int, int] = {}
        for (i, j) in cells_so_far:
            rows[i] = max(rows.get(i, 0), j)
        parts = tuple(rows.get(i, 0) for i in range(1, max(rows) + 1)) if rows else ()
        if sum(parts) != len(cells_so_far) or (parts and not is_partition(parts)):
            issues.append(f"restriction to labels <= {v} is not a partition")
            break
    return issues
