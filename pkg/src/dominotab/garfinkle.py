"""Domino insertion and reverse insertion on standard r-domino tableaux.

Inserting a nonzero integer ``a`` appends a horizontal domino ``|a|`` to the
first row (``a > 0``) or a vertical one to the first column (``a < 0``) of the
restriction to smaller labels, then re-places every larger domino in
increasing order through the six sliding cases.  Reverse insertion peels a
domino corner off and returns the signed value it bumps out; the two maps are
mutually inverse and assemble into the bijection between ``B_n`` and pairs of
same-shape standard r-domino tableaux.
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum

from .core import (
    Cell,
    DominoCell,
    DominoError,
    DominoTableau,
    InvalidTableau,
    SignedPermutation,
    check_signed_permutation,
    domino_corners,
    from_dominos,
    staircase_cells,
)

CellPair = tuple[Cell, Cell]


class DuplicateLabel(DominoError):
    pass


class NotACorner(DominoError):
    pass


class ShapeMismatch(DominoError):
    pass


class CornerRegion(Enum):
    NE = "ne"
    SW = "sw"
    NEITHER = "neither"


@dataclass(frozen=True)
class InsertionStep:
    label: int
    case: str  # one of H1..H3, V1..V3, row1, col1
    placed: DominoCell


@dataclass(frozen=True)
class InsertionTrace:
    inserted: int
    steps: tuple[InsertionStep, ...]
    final: DominoTableau


# ---------------------------------------------------------------------------
# internal fast paths on label -> (cell, cell) maps
# ---------------------------------------------------------------------------

def _pair(cells) -> CellPair:
    a, b = sorted(cells)
    return (a, b)


def _is_horizontal(pair: CellPair) -> bool:
    (i, j), (k, l) = pair
    return (k, l) == (i, j + 1)


def _transpose_map(dominos: dict[int, CellPair]) -> dict[int, CellPair]:
    return {b: _pair(((j, i), (l, k))) for b, ((i, j), (k, l)) in dominos.items()}


def _extents(dominos: dict[int, CellPair], r: int):
    """Row and column lengths of the partition formed by core plus dominos."""
    rowlen: dict[int, int] = {}
    collen: dict[int, int] = {}
    for i in range(1, r + 1):
        rowlen[i] = r - i + 1
    for j in range(1, r + 1):
        collen[j] = r - j + 1
    for pair in dominos.values():
        for (i, j) in pair:
            if rowlen.get(i, 0) < j:
                rowlen[i] = j
            if collen.get(j, 0) < i:
                collen[j] = i
    return rowlen, collen


def _insert_map(dominos: dict[int, CellPair], r: int, a: int, steps=None):
    """Insert ``a``; returns (new map, cells added to the shape)."""
    v = abs(a)
    if v in dominos:
        raise DuplicateLabel(f"label {v} already present")
    lower = {b: p for b, p in dominos.items() if b < v}
    bigger = sorted(b for b in dominos if b > v)
    rowlen, collen = _extents(lower, r)

    out = dict(lower)

    def place(label: int, pair: CellPair, case: str):
        out[label] = pair
        for (i, j) in pair:
            if rowlen.get(i, 0) < j:
                rowlen[i] = j
            if collen.get(j, 0) < i:
                collen[j] = i
        if steps is not None:
            steps.append(InsertionStep(label, case, DominoCell.from_cells(pair)))

    if a > 0:
        m = rowlen.get(1, 0)
        bumped = ((1, m + 1), (1, m + 2))
        place(v, bumped, "row1")
    else:
        m = collen.get(1, 0)
        bumped = ((m + 1, 1), (m + 2, 1))
        place(v, bumped, "col1")
    bset = set(bumped)

    for b in bigger:
        pair = dominos[b]
        aset = set(pair)
        inter = aset & bset
        horizontal = _is_horizontal(pair)
        (k, l) = pair[0]
        if not inter:
            place(b, pair, "H1" if horizontal else "V1")
        elif len(inter) == 2:
            if horizontal:
                m = rowlen.get(k + 1, 0)
                new = ((k + 1, m + 1), (k + 1, m + 2))
                place(b, new, "H2")
            else:
                m = collen.get(l + 1, 0)
                new = ((m + 1, l + 1), (m + 2, l + 1))
                place(b, new, "V2")
            bset = set(new)
        else:
            if inter != {pair[0]}:
                raise InvalidTableau(
                    f"sliding domino {b}: overlap {inter} is not the anchor"
                )
            if horizontal:
                new = ((k, l + 1), (k + 1, l + 1))
                place(b, new, "H3")
            else:
                new = ((k + 1, l), (k + 1, l + 1))
                place(b, new, "V3")
            bset = (bset - {pair[0]}) | (set(new) - aset)

    return out, _pair(bset)


def _reverse_map(dominos: dict[int, CellPair], r: int, corner: CellPair):
    """Reverse insertion of a domino corner; returns (new map, bumped value)."""
    if not _is_horizontal(corner):
        flipped = _transpose_map(dominos)
        tcorner = _pair([(j, i) for (i, j) in corner])
        sub, eta = _reverse_map(flipped, r, tcorner)
        return _transpose_map(sub), -eta

    (k, l), c2 = corner
    at: dict[Cell, int] = {}
    for lab, pair in dominos.items():
        at[pair[0]] = lab
        at[pair[1]] = lab
    if (k, l) not in at or c2 not in at:
        raise NotACorner(f"{corner} does not lie on dominos")
    left_label = at[(k, l)]
    b = at[c2]

    if k == 1:
        if left_label != b:
            raise InvalidTableau(f"first-row corner {corner} with labels "
                                 f"({left_label},{b})")
        out = dict(dominos)
        del out[b]
        return out, b

    if left_label == b:
        # Case 2: the domino (b,b) returns to the cells that displaced it.
        y = 0
        for (i, j), lab in at.items():
            if i == k - 1 and lab < b and lab > y:
                y = lab
        if y == 0:
            raise InvalidTableau(f"no label below {b} in row {k - 1}")
        ypair = dominos[y]
        if _is_horizontal(ypair) and ypair[0][0] == k - 1:
            back = ypair
        else:
            m = ypair[0][1] if ypair[0][0] == k - 1 else ypair[1][1]
            prev = (k - 1, m - 1)
            if prev not in at:
                raise InvalidTableau(f"pushed-back cell {prev} is not a domino cell")
            back = ((k - 1, m - 1), (k - 1, m))
        if back[0][1] < l:
            raise InvalidTableau("pushed-back cells violate the locality corollary")
        sub_corner = back
        new_b = back
    else:
        # Case 3: top/bottom labels differ, the bottom of b rotates left.
        y = left_label
        if not (0 < y < b):
            raise InvalidTableau(f"corner {corner} labeled ({y},{b})")
        if dominos[b] != ((k - 1, l + 1), (k, l + 1)):
            raise InvalidTableau(f"label {b} is not vertical above {c2}")
        sub_corner = ((k - 1, l), (k, l))
        new_b = ((k - 1, l), (k - 1, l + 1))

    sub = {lab: p for lab, p in dominos.items() if lab <= y}
    rest = {lab: p for lab, p in dominos.items() if lab > y and lab != b}
    lower, eta = _reverse_map(sub, r, sub_corner)
    lower[b] = new_b
    lower.update(rest)
    return lower, eta


# ---------------------------------------------------------------------------
# public operations
# ---------------------------------------------------------------------------

def insert(t: DominoTableau, a: int) -> DominoTableau:
    """The tableau obtained by inserting the signed integer ``a``."""
    cells = {b: d.cells for b, d in t.dominos.items()}
    out, _ = _insert_map(cells, t.r, a)
    return from_dominos(t.r, {b: DominoCell.from_cells(p) for b, p in out.items()})


def insert_trace(t: DominoTableau, a: int) -> tuple[DominoTableau, InsertionTrace]:
    cells = {b: d.cells for b, d in t.dominos.items()}
    steps: list[InsertionStep] = []
    out, _ = _insert_map(cells, t.r, a, steps=steps)
    final = from_dominos(t.r, {b: DominoCell.from_cells(p) for b, p in out.items()})
    return final, InsertionTrace(a, tuple(steps), final)


def tableaux_pair(alpha: SignedPermutation, r: int):
    """Insertion and recording tableaux (P, Q) of a signed permutation."""
    alpha = check_signed_permutation(alpha)
    p_map: dict[int, CellPair] = {}
    q_map: dict[int, CellPair] = {}
    for i, a in enumerate(alpha, start=1):
        p_map, added = _insert_map(p_map, r, a)
        q_map[i] = added
    p = from_dominos(r, {b: DominoCell.from_cells(c) for b, c in p_map.items()})
    q = from_dominos(r, {b: DominoCell.from_cells(c) for b, c in q_map.items()})
    return p, q


def reverse_insert(t: DominoTableau, corner: DominoCell):
    """Peel the domino corner off; returns (smaller tableau, bumped value)."""
    if corner not in domino_corners(t.shape):
        raise NotACorner(f"{corner} is not a domino corner of {t.shape}")
    if set(corner.cells) & staircase_cells(t.r):
        raise NotACorner(f"{corner} intersects the {t.r}-staircase core")
    cells = {b: d.cells for b, d in t.dominos.items()}
    out, eta = _reverse_map(cells, t.r, _pair(corner.cells))
    smaller = from_dominos(t.r, {b: DominoCell.from_cells(p) for b, p in out.items()})
    return smaller, eta


def inverse(p: DominoTableau, q: DominoTableau) -> SignedPermutation:
    """Recover alpha from (P, Q); inverse of :func:`tableaux_pair`."""
    if p.r != q.r or p.shape != q.shape:
        raise ShapeMismatch(f"shapes {p.shape} and {q.shape} (r={p.r},{q.r}) differ")
    n = len(p.labels)
    if p.labels != tuple(range(1, n + 1)) or q.labels != p.labels:
        raise InvalidTableau("tableaux must be standard with labels 1..n")
    current = {b: d.cells for b, d in p.dominos.items()}
    out = [0] * n
    for i in range(n, 0, -1):
        corner = q.dom(i).cells
        current, eta = _reverse_map(current, p.r, _pair(corner))
        out[i - 1] = eta
    return tuple(out)


def region(t: DominoTableau, a: DominoCell, b: DominoCell) -> CornerRegion:
    """Position of corner ``b`` relative to the ne/sw regions of corner ``a``."""
    (i, j) = a.anchor
    cells = b.cells
    if all(k < i and l >= j for (k, l) in cells):
        return CornerRegion.NE
    if all(k >= i and l < j for (k, l) in cells):
        return CornerRegion.SW
    return CornerRegion.NEITHER
