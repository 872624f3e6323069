"""Augmented diagrams, their statistics, and non-attacking fillings.

Rows are numbered 1..n from the top and column 0 is the basement.  A cell is
a pair ``(row, col)``.  Basement cells take part in attacking pairs and in
triples.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from typing import Iterator, List, Sequence, Tuple

from .combinat import check_composition, check_permutation

Cell = Tuple[int, int]

__all__ = [
    "AugmentedFilling",
    "Triple",
    "arm",
    "leg",
    "descents",
    "maj",
    "classify_triples",
    "inv",
    "coinv",
    "is_non_attacking",
    "enumerate_naf",
    "weight",
    "triple_positions",
]

# tie-break subscripts when entries coincide
_SUB_A, _SUB_B, _SUB_C = 3, 1, 2


@dataclass(frozen=True)
class AugmentedFilling:
    shape: Tuple[int, ...]
    basement: Tuple[int, ...]
    rows: Tuple[Tuple[int, ...], ...]

    def __post_init__(self):
        n = len(self.shape)
        if len(self.basement) != n or len(self.rows) != n:
            raise ValueError("shape, basement and rows must have equal length")
        for r, (a, row) in enumerate(zip(self.shape, self.rows), start=1):
            if len(row) != a:
                raise ValueError(f"row {r} has {len(row)} entries, expected {a}")
            for v in row:
                if not 1 <= v <= n:
                    raise ValueError(f"entry {v} outside 1..{n}")

    @classmethod
    def make(cls, shape, basement, rows):
        n = len(shape)
        shape = check_composition(shape)
        basement = check_permutation(basement, n)
        return cls(shape, basement, tuple(tuple(int(v) for v in row) for row in rows))

    @classmethod
    def basement_only(cls, basement):
        basement = check_permutation(basement)
        return cls((0,) * len(basement), basement, ((),) * len(basement))

    @property
    def n(self) -> int:
        return len(self.shape)

    def __getitem__(self, cell: Cell) -> int:
        r, c = cell
        if c == 0:
            return self.basement[r - 1]
        return self.rows[r - 1][c - 1]

    def cells(self) -> Iterator[Cell]:
        """Non-basement cells, row by row."""
        for r, a in enumerate(self.shape, start=1):
            for c in range(1, a + 1):
                yield (r, c)

    def to_json(self):
        return {
            "shape": list(self.shape),
            "basement": list(self.basement),
            "rows": [list(row) for row in self.rows],
        }

    @classmethod
    def from_json(cls, data):
        return cls.make(data["shape"], data["basement"], data["rows"])

    def __str__(self):
        width = len(str(self.n))
        lines = []
        for b, row in zip(self.basement, self.rows):
            cells = [str(b).rjust(width)] + [str(v).rjust(width) for v in row]
            lines.append(cells[0] + " | " + " ".join(cells[1:]))
        return "\n".join(line.rstrip() for line in lines)


@dataclass(frozen=True)
class Triple:
    kind: str  # "A" or "B"
    a: Cell
    b: Cell
    c: Cell
    is_inversion: bool


def _check_cell(shape, cell, allow_basement=False):
    r, c = cell
    if not 1 <= r <= len(shape) or c > shape[r - 1] or c < (0 if allow_basement else 1):
        raise ValueError(f"cell {cell} is not in the diagram of {tuple(shape)}")


def leg(shape: Sequence[int], cell: Cell) -> int:
    _check_cell(shape, cell, allow_basement=True)
    r, c = cell
    return shape[r - 1] - c


def arm(shape: Sequence[int], cell: Cell) -> int:
    _check_cell(shape, cell)
    return _arm(tuple(shape), cell[0], cell[1])


def _arm(shape, r, c):
    ar = shape[r - 1]
    count = 0
    for rp in range(1, len(shape) + 1):
        ap = shape[rp - 1]
        if rp > r:
            if ap <= ar and c <= ap:
                count += 1
        elif rp < r:
            if ap < ar and c - 1 <= ap:
                count += 1
    return count


@lru_cache(maxsize=None)
def arm_leg_table(shape: Tuple[int, ...]):
    """Map each non-basement cell to (arm, leg)."""
    return {
        (r, c): (_arm(shape, r, c), shape[r - 1] - c)
        for r in range(1, len(shape) + 1)
        for c in range(1, shape[r - 1] + 1)
    }


@lru_cache(maxsize=None)
def triple_positions(shape: Tuple[int, ...]):
    """All triples of the augmented diagram as (kind, a, b, c) cell tuples."""
    out = []
    n = len(shape)
    for r in range(1, n + 1):
        ar = shape[r - 1]
        for j in range(1, ar + 1):
            a, b = (r, j - 1), (r, j)
            for rp in range(1, n + 1):
                ap = shape[rp - 1]
                if rp > r and ap <= ar and j <= ap:
                    out.append(("A", a, b, (rp, j)))
                elif rp < r and ap < ar and j - 1 <= ap:
                    out.append(("B", a, b, (rp, j - 1)))
    return tuple(out)


def _is_inversion(va, vb, vc):
    a, b, c = (va, _SUB_A), (vb, _SUB_B), (vc, _SUB_C)
    return (a < c < b) or (c < b < a) or (b < a < c)


def classify_triples(F: AugmentedFilling) -> List[Triple]:
    return [
        Triple(kind, a, b, c, _is_inversion(F[a], F[b], F[c]))
        for kind, a, b, c in triple_positions(F.shape)
    ]


def inv(F: AugmentedFilling) -> int:
    return sum(1 for _, a, b, c in triple_positions(F.shape) if _is_inversion(F[a], F[b], F[c]))


def coinv(F: AugmentedFilling) -> int:
    return sum(
        1 for _, a, b, c in triple_positions(F.shape) if not _is_inversion(F[a], F[b], F[c])
    )


def descents(F: AugmentedFilling) -> set:
    return {(r, c) for r, c in F.cells() if F[(r, c - 1)] < F[(r, c)]}


def maj(F: AugmentedFilling) -> int:
    return sum(F.shape[r - 1] - c + 1 for r, c in descents(F))


def weight(F: AugmentedFilling) -> Tuple[int, ...]:
    exps = [0] * F.n
    for row in F.rows:
        for v in row:
            exps[v - 1] += 1
    return tuple(exps)


def _attacks(r1, c1, r2, c2):
    """Whether cells (r1,c1), (r2,c2) form an attacking pair (cells distinct)."""
    if c1 == c2:
        return True
    if c2 == c1 + 1:
        return r2 > r1
    if c1 == c2 + 1:
        return r1 > r2
    return False


def is_non_attacking(F: AugmentedFilling) -> bool:
    cells = [(r, 0) for r in range(1, F.n + 1)] + list(F.cells())
    for x in range(len(cells)):
        r1, c1 = cells[x]
        for y in range(x + 1, len(cells)):
            r2, c2 = cells[y]
            if F[cells[x]] == F[cells[y]] and _attacks(r1, c1, r2, c2):
                return False
    return True


def enumerate_naf(shape: Sequence[int], basement: Sequence[int]) -> List[AugmentedFilling]:
    """Non-attacking fillings in column-major, entry-lexicographic order."""
    shape = check_composition(shape)
    basement = check_permutation(basement, len(shape))
    return list(_naf(shape, basement))


@lru_cache(maxsize=4096)
def _naf(shape, basement):
    n = len(shape)
    order = [(r, c) for c in range(1, max(shape) + 1) for r in range(1, n + 1) if shape[r - 1] >= c]
    grid = {(r, 0): basement[r - 1] for r in range(1, n + 1)}
    out = []

    def rec(k):
        if k == len(order):
            rows = tuple(tuple(grid[(r, c)] for c in range(1, shape[r - 1] + 1)) for r in range(1, n + 1))
            out.append(AugmentedFilling(shape, basement, rows))
            return
        r, c = order[k]
        banned = set()
        for r1 in range(1, r):
            v = grid.get((r1, c)) if shape[r1 - 1] >= c else None
            if v is not None:
                banned.add(v)
            if shape[r1 - 1] >= c - 1:
                banned.add(grid[(r1, c - 1)])
        for v in range(1, n + 1):
            if v not in banned:
                grid[(r, c)] = v
                rec(k + 1)
        grid.pop((r, c), None)

    rec(0)
    return tuple(out)
