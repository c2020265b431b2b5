"""Set-partition combinatorics on the ground set {1, ..., g}.

Partitions are stored in a canonical form (blocks sorted by least element,
elements sorted inside each block) so equality is structural.  Pairs of
partitions are summarized by their block-intersection matrix, reduced to a
canonical representative under row and column permutations; all dimension
computations downstream factor through that matrix.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from functools import lru_cache
from math import factorial
from typing import Iterable, Iterator, Sequence

from .errors import GroundMismatch, GroundTooSmall


def bell_number(n: int) -> int:
    """Number of partitions of an n-element set (Bell triangle recurrence)."""
    if n < 0:
        raise ValueError("n must be >= 0")
    row = [1]
    for _ in range(n):
        nxt = [row[-1]]
        for value in row:
            nxt.append(nxt[-1] + value)
        row = nxt
    return row[0]


@dataclass(frozen=True)
class SetPartition:
    """A partition of {1, ..., ground_size} into disjoint nonempty blocks."""

    ground_size: int
    blocks: tuple[tuple[int, ...], ...]

    def __post_init__(self) -> None:
        if self.ground_size < 1:
            raise ValueError(f"ground size must be >= 1, got {self.ground_size}")
        seen: set[int] = set()
        for block in self.blocks:
            if not block:
                raise ValueError("empty blocks are not allowed")
            for x in block:
                if not 1 <= x <= self.ground_size:
                    raise ValueError(f"element {x} outside 1..{self.ground_size}")
                if x in seen:
                    raise ValueError(f"element {x} appears twice")
                seen.add(x)
        if len(seen) != self.ground_size:
            raise ValueError("blocks do not cover the ground set")
        canonical = tuple(sorted((tuple(sorted(b)) for b in self.blocks), key=lambda b: b[0]))
        object.__setattr__(self, "blocks", canonical)

    @classmethod
    def from_blocks(cls, blocks: Iterable[Iterable[int]], ground_size: int | None = None) -> "SetPartition":
        blks = tuple(tuple(b) for b in blocks)
        if ground_size is None:
            ground_size = sum(len(b) for b in blks)
        return cls(ground_size, blks)

    @property
    def num_blocks(self) -> int:
        return len(self.blocks)

    @property
    def block_sizes(self) -> tuple[int, ...]:
        return tuple(len(b) for b in self.blocks)

    @property
    def is_proper(self) -> bool:
        """True when there are at least two blocks."""
        return len(self.blocks) >= 2

    def block_ids(self) -> tuple[int, ...]:
        """Index of the block containing each element, positions 1..g."""
        ids = [0] * self.ground_size
        for i, block in enumerate(self.blocks):
            for x in block:
                ids[x - 1] = i
        return tuple(ids)

    def relabel(self, perm: Sequence[int]) -> "SetPartition":
        """Apply a permutation of the ground set; perm[i-1] is the image of i."""
        if sorted(perm) != list(range(1, self.ground_size + 1)):
            raise ValueError("perm must be a permutation of 1..g")
        return SetPartition(self.ground_size, tuple(tuple(perm[x - 1] for x in b) for b in self.blocks))

    def __str__(self) -> str:
        return "{" + "|".join("".join(str(x) for x in b) for b in self.blocks) + "}"


def _rgs_strings(g: int) -> Iterator[tuple[int, ...]]:
    """Restricted growth strings of length g in lexicographic order.

    a[0] = 0 and a[i] <= max(a[:i]) + 1; these encode set partitions with
    blocks numbered by first appearance.
    """
    a = [0] * g

    def rec(i: int, cur_max: int) -> Iterator[tuple[int, ...]]:
        if i == g:
            yield tuple(a)
            return
        for v in range(cur_max + 2):
            a[i] = v
            yield from rec(i + 1, max(cur_max, v))

    yield from rec(1, 0)


def partition_from_rgs(rgs: Sequence[int]) -> SetPartition:
    g = len(rgs)
    blocks: dict[int, list[int]] = {}
    for pos, bid in enumerate(rgs, start=1):
        blocks.setdefault(bid, []).append(pos)
    return SetPartition(g, tuple(tuple(b) for b in blocks.values()))


def iter_all_partitions(g: int) -> Iterator[SetPartition]:
    """Every partition of {1, ..., g}, proper or not, in a fixed order."""
    if g < 1:
        raise GroundTooSmall(f"need g >= 1, got {g}")
    for rgs in _rgs_strings(g):
        yield partition_from_rgs(rgs)


def enumerate_proper_partitions(g: int) -> list[SetPartition]:
    """All partitions of {1, ..., g} with at least two blocks.

    There are exactly Bell(g) - 1 of them; the single-block partition is
    the only one excluded.
    """
    if g < 2:
        raise GroundTooSmall(f"no proper partition exists for g = {g}")
    return [p for p in iter_all_partitions(g) if p.is_proper]


def meet(lam: SetPartition, mu: SetPartition) -> SetPartition:
    """Common refinement: blocks are the nonempty pairwise intersections."""
    if lam.ground_size != mu.ground_size:
        raise GroundMismatch(f"ground sizes differ: {lam.ground_size} vs {mu.ground_size}")
    a, b = lam.block_ids(), mu.block_ids()
    cells: dict[tuple[int, int], list[int]] = {}
    for x in range(1, lam.ground_size + 1):
        cells.setdefault((a[x - 1], b[x - 1]), []).append(x)
    return SetPartition(lam.ground_size, tuple(tuple(c) for c in cells.values()))


def _group_indices(sums: Sequence[int]) -> list[list[int]]:
    """Indices grouped by value, groups ordered by descending value."""
    by_value: dict[int, list[int]] = {}
    for i, s in enumerate(sums):
        by_value.setdefault(s, []).append(i)
    return [by_value[v] for v in sorted(by_value, reverse=True)]


def _group_cost(groups: list[list[int]]) -> int:
    cost = 1
    for grp in groups:
        cost *= factorial(len(grp))
    return cost


def _orders(groups: list[list[int]]) -> Iterator[tuple[int, ...]]:
    for combo in itertools.product(*(itertools.permutations(grp) for grp in groups)):
        yield tuple(itertools.chain.from_iterable(combo))


@lru_cache(maxsize=None)
def canonical_entries(entries: tuple[tuple[int, ...], ...]) -> tuple[tuple[int, ...], ...]:
    """Canonical representative of a matrix under row and column permutations.

    The representative has row sums non-increasing top to bottom and column
    sums non-increasing left to right; among all arrangements satisfying
    that, the row-major flattening is lexicographically minimal.  This is a
    complete invariant: two matrices agree here iff one is obtained from
    the other by permuting rows and columns.
    """
    row_sums = [sum(r) for r in entries]
    col_sums = [sum(c) for c in zip(*entries)]
    row_groups = _group_indices(row_sums)
    col_groups = _group_indices(col_sums)

    best: tuple[tuple[int, ...], ...] | None = None
    if _group_cost(row_groups) <= _group_cost(col_groups):
        # Enumerate row arrangements; columns then sort greedily per group.
        for row_order in _orders(row_groups):
            rows = [entries[i] for i in row_order]
            cols = list(zip(*rows))
            arranged_cols: list[tuple[int, ...]] = []
            for grp in col_groups:
                arranged_cols.extend(sorted(cols[j] for j in grp))
            candidate = tuple(zip(*arranged_cols))
            if best is None or candidate < best:
                best = candidate
    else:
        for col_order in _orders(col_groups):
            cols = [tuple(r[j] for r in entries) for j in col_order]
            rows = list(zip(*cols))
            arranged_rows: list[tuple[int, ...]] = []
            for grp in row_groups:
                arranged_rows.extend(sorted(rows[i] for i in grp))
            candidate = tuple(arranged_rows)
            if best is None or candidate < best:
                best = candidate
    assert best is not None
    return best


@dataclass(frozen=True)
class IntersectionMatrix:
    """Block-intersection profile of a pair of partitions, canonicalized.

    Entry (j, k) counts the elements shared by block j of the first
    partition and block k of the second; row sums and column sums recover
    the two block-size multisets.
    """

    entries: tuple[tuple[int, ...], ...]

    def __post_init__(self) -> None:
        if not self.entries or not self.entries[0]:
            raise ValueError("matrix must be nonempty")
        width = len(self.entries[0])
        for row in self.entries:
            if len(row) != width:
                raise ValueError("ragged matrix")
            if any(e < 0 for e in row):
                raise ValueError("entries must be >= 0")
        if any(all(e == 0 for e in row) for row in self.entries):
            raise ValueError("zero row")
        if any(all(row[j] == 0 for row in self.entries) for j in range(width)):
            raise ValueError("zero column")
        object.__setattr__(self, "entries", canonical_entries(tuple(tuple(r) for r in self.entries)))

    @property
    def rows(self) -> int:
        return len(self.entries)

    @property
    def cols(self) -> int:
        return len(self.entries[0])

    @property
    def total(self) -> int:
        return sum(sum(r) for r in self.entries)

    @property
    def row_sums(self) -> tuple[int, ...]:
        return tuple(sum(r) for r in self.entries)

    @property
    def col_sums(self) -> tuple[int, ...]:
        return tuple(sum(c) for c in zip(*self.entries))

    def sort_key(self) -> tuple[int, int, tuple[tuple[int, ...], ...]]:
        return (self.rows, self.cols, self.entries)


def intersection_matrix(lam: SetPartition, mu: SetPartition) -> IntersectionMatrix:
    """Canonical intersection matrix of a pair of partitions."""
    if lam.ground_size != mu.ground_size:
        raise GroundMismatch(f"ground sizes differ: {lam.ground_size} vs {mu.ground_size}")
    counts = [[0] * mu.num_blocks for _ in range(lam.num_blocks)]
    a, b = lam.block_ids(), mu.block_ids()
    for x in range(lam.ground_size):
        counts[a[x]][b[x]] += 1
    return IntersectionMatrix(tuple(tuple(r) for r in counts))


def integer_partitions(n: int, max_part: int | None = None) -> Iterator[tuple[int, ...]]:
    """Partitions of n into non-increasing positive parts."""
    if max_part is None:
        max_part = n
    if n == 0:
        yield ()
        return
    for first in range(min(n, max_part), 0, -1):
        for rest in integer_partitions(n - first, first):
            yield (first,) + rest


def _bounded_rows(total: int, budgets: Sequence[int], bound: Sequence[int] | None) -> Iterator[tuple[int, ...]]:
    """Compositions of `total` with entry j <= budgets[j], lex <= `bound`."""
    n = len(budgets)

    def rec(j: int, remaining: int, tight: bool, acc: list[int]) -> Iterator[tuple[int, ...]]:
        if j == n:
            if remaining == 0:
                yield tuple(acc)
            return
        if remaining > sum(budgets[j:]):
            return
        hi = min(remaining, budgets[j])
        if tight and bound is not None:
            hi = min(hi, bound[j])
        for v in range(hi, -1, -1):
            still_tight = tight and bound is not None and v == bound[j]
            acc.append(v)
            yield from rec(j + 1, remaining - v, still_tight, acc)
            acc.pop()

    yield from rec(0, total, bound is not None, [])


def _tables(row_sums: Sequence[int], col_sums: Sequence[int]) -> Iterator[tuple[tuple[int, ...], ...]]:
    """Non-negative matrices with the given margins.

    Rows inside a run of equal row sums are forced non-increasing, which
    kills most permutation duplicates before canonicalization.
    """
    t = len(col_sums)

    def rec(i: int, budgets: list[int], rows: list[tuple[int, ...]]) -> Iterator[tuple[tuple[int, ...], ...]]:
        if i == len(row_sums):
            if all(b == 0 for b in budgets):
                yield tuple(rows)
            return
        bound = rows[-1] if rows and row_sums[i] == row_sums[i - 1] else None
        for row in _bounded_rows(row_sums[i], budgets, bound):
            rows.append(row)
            new_budgets = [budgets[j] - row[j] for j in range(t)]
            yield from rec(i + 1, new_budgets, rows)
            rows.pop()

    yield from rec(0, list(col_sums), [])


def enumerate_matrix_types(g: int) -> list[IntersectionMatrix]:
    """Every canonical intersection-matrix type realizable on ground size g.

    A type is a canonical class of matrices with total g, at least two rows
    and two columns and no zero row or column; each is realized by at least
    one pair of proper partitions, and every pair of proper partitions
    realizes exactly one type.
    """
    if g < 2:
        raise GroundTooSmall(f"need g >= 2, got {g}")
    seen: set[tuple[tuple[int, ...], ...]] = set()
    margins = [p for p in integer_partitions(g) if len(p) >= 2]
    for row_sums in margins:
        for col_sums in margins:
            for table in _tables(row_sums, col_sums):
                seen.add(canonical_entries(table))
    matrices = [IntersectionMatrix(e) for e in seen]
    matrices.sort(key=IntersectionMatrix.sort_key)
    return matrices


def realize_matrix(matrix: IntersectionMatrix) -> tuple[SetPartition, SetPartition]:
    """A pair of partitions whose intersection matrix is the given type.

    Elements are laid out cell by cell: block j of the first partition
    collects the elements of row j, block k of the second those of column k.
    """
    g = matrix.total
    rows: list[list[int]] = [[] for _ in range(matrix.rows)]
    cols: list[list[int]] = [[] for _ in range(matrix.cols)]
    x = 1
    for j, row in enumerate(matrix.entries):
        for k, count in enumerate(row):
            for _ in range(count):
                rows[j].append(x)
                cols[k].append(x)
                x += 1
    lam = SetPartition(g, tuple(tuple(b) for b in rows if b))
    mu = SetPartition(g, tuple(tuple(b) for b in cols if b))
    return lam, mu
