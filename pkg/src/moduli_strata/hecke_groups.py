"""Dimension calculus for the partition-indexed symplectic subgroups.

To a partition of {1, ..., g} with block sizes l_1, ..., l_s corresponds a
product of symplectic groups of total dimension sum l_i(2 l_i + 1).  The
product of two such subgroups has dimension

    dim(lam) + dim(mu) - dim(lam ^ mu)

where ^ is the common refinement: the pairwise intersection of the two
subgroups is block-diagonal on the refinement.  The same number can be read
off the intersection matrix alone: row sums, column sums and nonzero
entries contribute with the l(2l+1) weight.

Two maximizers over all proper pairs are provided: exhaustive enumeration
of canonical intersection-matrix types (complete for ground sizes up to 8)
and a memoized best-completion search over column structures that scales
further; they agree wherever both run.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from functools import lru_cache
from typing import Iterator, Sequence

from .errors import GroundTooSmall, NotProper
from .moduli import GroupExpr, SpAtom
from .partitions import (
    IntersectionMatrix,
    SetPartition,
    enumerate_matrix_types,
    enumerate_proper_partitions,
    integer_partitions,
    meet,
)


def _weight(l: int) -> int:
    """Dimension contribution of one block of size l."""
    return l * (2 * l + 1)


def sp_total_dim(g: int) -> int:
    """Dimension 2g^2 + g of the full rank-g symplectic group."""
    return 2 * g * g + g


def gamma_dim(partition: SetPartition) -> int:
    """Dimension of the subgroup attached to a partition: sum of l(2l+1)."""
    return sum(_weight(l) for l in partition.block_sizes)


@dataclass(frozen=True)
class GammaSubgroup:
    """A partition together with its symplectic-product group and dimension."""

    partition: SetPartition
    group: GroupExpr
    dim: int


def gamma_subgroup(partition: SetPartition) -> GammaSubgroup:
    group = GroupExpr.of(SpAtom(l) for l in partition.block_sizes)
    return GammaSubgroup(partition, group, group.dim)


def product_dim(lam: SetPartition, mu: SetPartition) -> int:
    """Dimension of the product of the two partition subgroups."""
    return gamma_dim(lam) + gamma_dim(mu) - gamma_dim(meet(lam, mu))


def product_dim_from_matrix(matrix: IntersectionMatrix) -> int:
    """Same quantity computed from the intersection matrix alone."""
    value = sum(_weight(s) for s in matrix.row_sums)
    value += sum(_weight(s) for s in matrix.col_sums)
    value -= sum(_weight(e) for row in matrix.entries for e in row if e)
    return value


@dataclass(frozen=True)
class MaxProductDim:
    """Maximum product dimension with a canonical witness matrix."""

    ground_size: int
    value: int
    witness: IntersectionMatrix
    all_witnesses: tuple[IntersectionMatrix, ...] = ()


#: Largest ground size for which every canonical matrix type is enumerated.
EXHAUSTIVE_LIMIT = 8


def max_product_dim(g: int, collect_all: bool = False) -> MaxProductDim:
    """Maximize the product dimension over all proper partition pairs.

    Ground sizes up to EXHAUSTIVE_LIMIT are done by exhausting canonical
    matrix types; larger ones by the memoized completion search.  Ties are
    broken by canonical matrix order.
    """
    if g < 2:
        raise GroundTooSmall(f"need g >= 2, got {g}")
    if g <= EXHAUSTIVE_LIMIT:
        best = -1
        winners: list[IntersectionMatrix] = []
        for matrix in enumerate_matrix_types(g):
            value = product_dim_from_matrix(matrix)
            if value > best:
                best, winners = value, [matrix]
            elif value == best and collect_all:
                winners.append(matrix)
        winners.sort(key=IntersectionMatrix.sort_key)
        return MaxProductDim(g, best, winners[0], tuple(winners) if collect_all else ())
    best = -1
    best_sizes: tuple[int, ...] | None = None
    for sizes in integer_partitions(g):
        if len(sizes) < 2:
            continue
        value = sum(_weight(l) for l in sizes) + _best_against(sizes)
        if value > best:
            best, best_sizes = value, sizes
    assert best_sizes is not None
    witness = _witness_matrix(best_sizes)
    return MaxProductDim(g, best, witness, (witness,) if collect_all else ())


def max_product_dim_by_pairs(g: int) -> tuple[int, tuple[SetPartition, SetPartition]]:
    """Independent maximizer: direct sweep over all proper partition pairs.

    Quadratic in Bell(g); intended as the cross-check for small g.
    """
    if g < 2:
        raise GroundTooSmall(f"need g >= 2, got {g}")
    parts = enumerate_proper_partitions(g)
    data = [(p.block_ids(), p.block_sizes) for p in parts]
    best = -1
    best_pair = (0, 0)
    for a in range(len(parts)):
        ids_a, sizes_a = data[a]
        base_a = sum(_weight(l) for l in sizes_a)
        for b in range(a, len(parts)):
            ids_b, sizes_b = data[b]
            cells: dict[tuple[int, int], int] = {}
            for x in range(g):
                key = (ids_a[x], ids_b[x])
                cells[key] = cells.get(key, 0) + 1
            value = base_a + sum(_weight(l) for l in sizes_b)
            value -= sum(_weight(c) for c in cells.values())
            if value > best:
                best, best_pair = value, (a, b)
    return best, (parts[best_pair[0]], parts[best_pair[1]])


def two_block_witness_value(g: int) -> int:
    """Product dimension of the pair {1..g-1 | g} versus {1 | 2..g}."""
    if g < 2:
        raise GroundTooSmall(f"need g >= 2, got {g}")
    lam = SetPartition.from_blocks([range(1, g), [g]], g)
    mu = SetPartition.from_blocks([[1], range(2, g + 1)], g)
    return product_dim(lam, mu)


# --- best completion against fixed block sizes -------------------------------
#
# For a fixed first partition with block sizes r, the product dimension over
# all second partitions mu depends only on the matrix of overlaps, whose row
# sums are r and whose columns are the blocks of mu.  The best completion of
# a vector of remaining row capacities is independent of the columns already
# placed, so it memoizes cleanly on the sorted capacity profile.


def _capacity_groups(caps: tuple[int, ...]) -> list[tuple[int, int]]:
    """(capacity, count) pairs for a sorted-descending capacity profile."""
    return [(value, len(list(grp))) for value, grp in itertools.groupby(caps)]


def _columns(
    caps: tuple[int, ...],
) -> Iterator[tuple[int, int, tuple[tuple[int, tuple[int, ...]], ...], tuple[int, ...]]]:
    """All ways to carve one column out of the capacity profile.

    Yields (column_value, column_sum, grouped_choice, remaining_profile)
    where grouped_choice pairs each capacity value with the amounts taken
    from its rows; rows of equal capacity are interchangeable.
    """
    groups = _capacity_groups(caps)
    per_group = [
        list(itertools.combinations_with_replacement(range(cap, -1, -1), count))
        for cap, count in groups
    ]
    for choice in itertools.product(*per_group):
        parts: list[int] = []
        rest: list[int] = []
        grouped: list[tuple[int, tuple[int, ...]]] = []
        for (cap, _count), taken in zip(groups, choice):
            grouped.append((cap, taken))
            for v in taken:
                if v:
                    parts.append(v)
                if cap - v:
                    rest.append(cap - v)
        if not parts:
            continue
        colsum = sum(parts)
        value = _weight(colsum) - sum(_weight(v) for v in parts)
        yield value, colsum, tuple(grouped), tuple(sorted(rest, reverse=True))


@lru_cache(maxsize=None)
def _best_fill(caps: tuple[int, ...]) -> int:
    """Best total column value consuming the whole capacity profile."""
    if not caps:
        return 0
    return max(value + _best_fill(rest) for value, _s, _g, rest in _columns(caps))


def _best_against(block_sizes: Sequence[int]) -> int:
    """max over proper mu of [dim(mu) - dim(meet)] for fixed first sizes."""
    caps = tuple(sorted(block_sizes, reverse=True))
    total = sum(caps)
    best = None
    for value, colsum, _g, rest in _columns(caps):
        if colsum == total:
            continue  # a single column would be the improper one-block mu
        candidate = value + _best_fill(rest)
        if best is None or candidate > best:
            best = candidate
    if best is None:
        raise GroundTooSmall("ground size below 2 admits no proper completion")
    return best


def _witness_matrix(block_sizes: Sequence[int]) -> IntersectionMatrix:
    """Reconstruct one optimal overlap matrix for ``_best_against``."""
    caps = tuple(sorted(block_sizes, reverse=True))
    total = sum(caps)
    target = _best_against(caps)

    rows = list(caps)
    columns: list[list[int]] = []

    def assign(profile: list[int], grouped: tuple[tuple[int, tuple[int, ...]], ...]) -> list[int]:
        # Each taken amount depletes a row whose remaining capacity equals
        # the capacity of the group it was carved from.
        column = [0] * len(rows)
        for cap, taken in grouped:
            targets = [i for i, c in enumerate(profile) if c == cap]
            for slot, v in zip(targets, taken):
                column[slot] = v
        for i, v in enumerate(column):
            profile[i] -= v
        return column

    profile = list(rows)
    need = target
    first = True
    while any(profile):
        caps_now = tuple(sorted((c for c in profile if c), reverse=True))
        for value, colsum, grouped, rest in _columns(caps_now):
            if first and colsum == total:
                continue
            if value + _best_fill(rest) == need:
                columns.append(assign(profile, grouped))
                need -= value
                first = False
                break
        else:
            raise AssertionError("witness reconstruction failed")
    entries = tuple(tuple(col[i] for col in columns) for i in range(len(rows)))
    return IntersectionMatrix(entries)


def gamma_gamma_codim(g: int, lam: SetPartition) -> int:
    """Codimension of the union of translates of the lam subgroup.

    This is 2g^2 + g minus the maximum product dimension against lam over
    all proper partitions; it is at least 4 for every proper lam.
    """
    if g < 2:
        raise GroundTooSmall(f"need g >= 2, got {g}")
    if lam.ground_size != g:
        raise GroundTooSmall(f"partition lives on ground {lam.ground_size}, not {g}")
    if not lam.is_proper:
        raise NotProper("a proper partition is required")
    best = gamma_dim(lam) + _best_against(lam.block_sizes)
    return sp_total_dim(g) - best


def gamma_gamma_codim_by_pairs(g: int, lam: SetPartition) -> int:
    """Brute-force cross-check of ``gamma_gamma_codim`` over all proper mu."""
    if not lam.is_proper:
        raise NotProper("a proper partition is required")
    best = max(product_dim(mu, lam) for mu in enumerate_proper_partitions(g))
    return sp_total_dim(g) - best
