"""Row insertion, Knuth moves and jeu de taquin over an extended alphabet.

The alphabet consists of nonzero signed integers together with core letters
``0_1, ..., 0_m`` ordered as

    -n < ... < -1 < 0_1 < 0_2 < ... < 0_m < 1 < ... < n.

Tableaux here are plain ragged grids (tuples of tuples) or, for skew shapes,
``dict[Cell, entry]`` maps; entries only need to be mutually comparable.
"""

from __future__ import annotations

import bisect
from dataclasses import dataclass, field

from .core import Cell, DominoError, PreconditionViolated


@dataclass(frozen=True, order=True)
class Letter:
    """One letter of the extended alphabet; ``core`` letters have value m >= 1."""

    sort_key: tuple[int, int] = field(init=False, repr=False)
    value: int
    core: bool = False

    def __post_init__(self):
        if self.core:
            if self.value < 1:
                raise PreconditionViolated("core letters are 0_m with m >= 1")
            key = (1, self.value)
        else:
            if self.value == 0:
                raise PreconditionViolated("signed letters are nonzero")
            key = (0, self.value) if self.value < 0 else (2, self.value)
        object.__setattr__(self, "sort_key", key)

    def __repr__(self):
        return f"0_{self.value}" if self.core else str(self.value)


def signed(value: int) -> Letter:
    return Letter(value)


def core_zero(m: int) -> Letter:
    return Letter(m, core=True)


Word = tuple[Letter, ...]


def word_of_ints(values) -> Word:
    """Convenience: a word of signed letters from plain integers."""
    return tuple(Letter(v) for v in values)


def _check_word(word: Word) -> Word:
    word = tuple(word)
    if len(set(word)) != len(word):
        raise PreconditionViolated("word has repeated letters")
    return word


# ---------------------------------------------------------------------------
# Robinson-Schensted insertion
# ---------------------------------------------------------------------------

def rsk(word: Word):
    """Row insertion; returns (P, Q) where Q records insertion order 1..len(word).

    P rows hold the word's letters, Q rows hold the integer stamps.
    """
    word = _check_word(word)
    p_rows: list[list] = []
    q_rows: list[list[int]] = []
    for stamp, x in enumerate(word, start=1):
        row = 0
        while True:
            if row == len(p_rows):
                p_rows.append([x])
                q_rows.append([stamp])
                break
            cur = p_rows[row]
            pos = bisect.bisect_right(cur, x)
            if pos == len(cur):
                cur.append(x)
                q_rows[row].append(stamp)
                break
            x, cur[pos] = cur[pos], x
            row += 1
    return tuple(map(tuple, p_rows)), tuple(map(tuple, q_rows))


def insertion_tableau(word: Word):
    return rsk(word)[0]


def tableau_row_word(rows) -> Word:
    """Row word: rows read bottom to top, each left to right."""
    out: list = []
    for row in reversed(list(rows)):
        out.extend(row)
    return tuple(out)


# ---------------------------------------------------------------------------
# Knuth moves
# ---------------------------------------------------------------------------

def _knuth_pattern(word: Word, i: int) -> bool:
    # may positions (i, i+1) be swapped, 0-based window checks
    n = len(word)
    if i + 2 < n and word[i] < word[i + 2] < word[i + 1]:
        return True
    if i >= 1 and i + 1 < n and word[i] < word[i - 1] < word[i + 1]:
        return True
    return False


def knuth_neighbors(word: Word) -> set[Word]:
    """All words one Knuth move away (the relation is symmetric)."""
    word = _check_word(word)
    out: set[Word] = set()
    for i in range(len(word) - 1):
        swapped = word[:i] + (word[i + 1], word[i]) + word[i + 2:]
        if _knuth_pattern(word, i) or _knuth_pattern(swapped, i):
            out.add(swapped)
    return out


def knuth_class(word: Word) -> set[Word]:
    """Closure of one word under Knuth moves (breadth-first search)."""
    seen = {_check_word(word)}
    frontier = [word]
    while frontier:
        nxt = []
        for w in frontier:
            for v in knuth_neighbors(w):
                if v not in seen:
                    seen.add(v)
                    nxt.append(v)
        frontier = nxt
    return seen


# ---------------------------------------------------------------------------
# jeu de taquin on skew grids
# ---------------------------------------------------------------------------

def _check_locally_standard(grid: dict[Cell, object]) -> bool:
    for (i, j), v in grid.items():
        right = grid.get((i, j + 1))
        below = grid.get((i + 1, j))
        if right is not None and right < v:
            return False
        if below is not None and below < v:
            return False
    return True


def jdt_exchange(grid: dict[Cell, object], hole: Cell, direction: str):
    """One jeu de taquin exchange; returns (grid', new_hole) or None at rest.

    Forward moves the smaller of the right/below neighbors into the hole;
    backward moves the larger of the left/above neighbors.
    """
    i, j = hole
    if direction == "forward":
        nbs = [(i, j + 1), (i + 1, j)]
        pick = min
    elif direction == "backward":
        nbs = [(i, j - 1), (i - 1, j)]
        pick = max
    else:
        raise PreconditionViolated(f"unknown direction {direction!r}")
    present = [c for c in nbs if c in grid]
    if not present:
        return None
    src = pick(present, key=lambda c: grid[c])
    out = dict(grid)
    out[hole] = out.pop(src)
    return out, src


def jdt_slide(grid: dict[Cell, object], hole: Cell, direction: str):
    """Slide until the hole comes to rest; returns (grid', final_hole)."""
    if hole in grid:
        raise PreconditionViolated(f"hole {hole} is occupied")
    if hole[0] < 1 or hole[1] < 1:
        raise PreconditionViolated(f"hole {hole} outside the quadrant")
    current = dict(grid)
    while True:
        step = jdt_exchange(current, hole, direction)
        if step is None:
            break
        current, hole = step
    if not _check_locally_standard(current):
        raise PreconditionViolated("slide origin was not a legal inner/outer corner")
    return current, hole


def rectify(inner: tuple[int, ...], grid: dict[Cell, object], choose=None):
    """Rectify a skew standard tableau by forward slides.

    ``inner`` is the inner partition; ``choose`` picks among available inner
    corners (defaults to lexicographic minimum) so that tests can vary the
    slide order.
    """
    inner = list(inner)
    current = dict(grid)
    while any(p > 0 for p in inner):
        corners = []
        for i, p in enumerate(inner, start=1):
            if p == 0:
                continue
            below = inner[i] if i < len(inner) else 0
            if p > below:
                corners.append((i, p))
        corner = min(corners) if choose is None else choose(corners)
        current, _ = jdt_slide(current, corner, "forward")
        inner[corner[0] - 1] -= 1
    rows: dict[int, dict[int, object]] = {}
    for (i, j), v in current.items():
        rows.setdefault(i, {})[j] = v
    out = []
    for i in range(1, max(rows) + 1 if rows else 1):
        if i not in rows:
            break
        cols = rows[i]
        out.append(tuple(cols[j] for j in sorted(cols)))
    return tuple(out)


def tableau_descents(rows) -> set[int]:
    """Des(T) = { i : the letter succeeding i sits strictly below i }.

    Works for grids of plain integers 1..n (stamps).
    """
    row_of = {}
    for i, row in enumerate(rows, start=1):
        for v in row:
            row_of[v] = i
    out = set()
    for v in row_of:
        if v + 1 in row_of and row_of[v + 1] > row_of[v]:
            out.add(v)
    return out


class LetterJSON:
    """Serialization of words: signed letters as ints, core letters as "0_m"."""

    @staticmethod
    def encode(word: Word) -> list:
        return [f"0_{x.value}" if x.core else x.value for x in word]

    @staticmethod
    def decode(items) -> Word:
        out = []
        for it in items:
            if isinstance(it, str):
                if not it.startswith("0_"):
                    raise DominoError(f"bad letter {it!r}")
                out.append(core_zero(int(it[2:])))
            else:
                out.append(signed(int(it)))
        return tuple(out)
