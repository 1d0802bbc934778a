"""Relaxation parameters and alternative-specific ordered partitions.

The scoring engine never searches all ordered partitions: for each pivot
alternative it checks a short list of pivot-specific conditions and emits
at most one bipartition or tripartition. The general enumeration over
arbitrary blocks exists only as a test oracle.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from itertools import product

from .errors import EmptyBlock, TooLarge
from .model import BEAT, TIE

GENERAL_ENUM_LIMIT = 10


@dataclass(frozen=True)
class Neighborhoods:
    """Split of the roster around a pivot by outcome against the pivot."""

    pivot: int
    above: frozenset
    below: frozenset
    tied: frozenset

    @property
    def above_or_tied(self):
        return self.above | self.tied


@dataclass(frozen=True)
class SpecificPartition:
    """Ordered bi- or tripartition produced for one pivot.

    kind records which condition fired: k1 (pivot alone at the bottom),
    k2 (top block dominates non-strictly), k3 (every top member beats
    someone below), k4 (tripartition with the pivot in the middle).
    k2 and k3 only differ in the tag; their blocks and scores coincide.
    """

    pivot: int
    blocks: tuple  # 2 or 3 frozensets, top first
    kind: str

    @property
    def bottom(self):
        return self.blocks[-1]

    @property
    def scoring_members(self):
        """Alternatives eligible for points: everything above the bottom."""
        out = frozenset()
        for b in self.blocks[:-1]:
            out |= b
        return out


def _check_blocks(a, b):
    if not a or not b:
        raise EmptyBlock("beta/gamma blocks must be non-empty")
    if a & b:
        raise EmptyBlock("blocks must be disjoint")


def beta(rel, a, b):
    """Fraction of members of `a` that beat every member of `b`."""
    a, b = frozenset(a), frozenset(b)
    _check_blocks(a, b)
    cells = rel.cells
    hits = sum(1 for x in a if all(cells[x][y] == BEAT for y in b))
    return Fraction(hits, len(a))


def gamma(rel, a, b):
    """Minimum over `a` of the fraction of `b` each member beats."""
    a, b = frozenset(a), frozenset(b)
    _check_blocks(a, b)
    cells = rel.cells
    best = None
    for x in a:
        row = cells[x]
        cnt = sum(1 for y in b if row[y] == BEAT)
        if cnt == 0:
            return Fraction(0)
        if best is None or cnt < best:
            best = cnt
    return Fraction(best, len(b))


def block_dominates(rel, a, b, strict=True):
    """Does every member of `a` beat (or beat-or-tie) every member of `b`?"""
    a, b = frozenset(a), frozenset(b)
    _check_blocks(a, b)
    cells = rel.cells
    if strict:
        return all(cells[x][y] == BEAT for x in a for y in b)
    return all(cells[x][y] in (BEAT, TIE) for x in a for y in b)


def neighborhoods(rel, z):
    """Partition the other alternatives by their outcome against pivot z."""
    above, below, tied = [], [], []
    cells = rel.cells
    for x in range(rel.m):
        if x == z:
            continue
        c = cells[x][z]
        if c == BEAT:
            above.append(x)
        elif c == TIE:
            tied.append(x)
        else:
            below.append(x)
    return Neighborhoods(z, frozenset(above), frozenset(below), frozenset(tied))


def seek_partition(rel, z):
    """Return the pivot-specific partition for z, or None if indivisible.

    Conditions are evaluated in fixed order; when both the bipartition and
    the tripartition exist, the bipartition wins.
    """
    nb = neighborhoods(rel, z)
    above_or_tied = nb.above_or_tied
    if not nb.below:
        if nb.above:
            return SpecificPartition(z, (above_or_tied, frozenset([z])), "k1")
        return None
    top = above_or_tied | {z}
    if block_dominates(rel, top, nb.below, strict=False):
        return SpecificPartition(z, (top, nb.below), "k2")
    if gamma(rel, top, nb.below) > 0:
        return SpecificPartition(z, (top, nb.below), "k3")
    if nb.above and above_or_tied and beta(rel, above_or_tied, nb.below) > 0:
        return SpecificPartition(z, (above_or_tied, frozenset([z]), nb.below), "k4")
    return None


@dataclass(frozen=True)
class GeneralPartitions:
    """Every ordered partition satisfying one of the relaxed definitions."""

    first_type: tuple  # bipartitions (A, B): beta > 0 and A beats-or-ties B
    second_type: tuple  # bipartitions (A, B): beta > 0 and gamma > 0
    tripartitions: tuple  # (A, B, C): A >= B, B > C, beta(A,B) > 0, beta(A,C) > 0

    @property
    def bipartitions(self):
        return tuple(sorted(set(self.first_type) | set(self.second_type)))


def oracle_enumerate_partitions(rel):
    """Brute force over all ordered 2- and 3-block partitions (test oracle).

    Exponential; guarded to small rosters.
    """
    m = rel.m
    if m > GENERAL_ENUM_LIMIT:
        raise TooLarge(f"general enumeration limited to m <= {GENERAL_ENUM_LIMIT}")
    first, second, tri = [], [], []
    for assign in product((0, 1), repeat=m):
        a = frozenset(i for i in range(m) if assign[i] == 0)
        b = frozenset(i for i in range(m) if assign[i] == 1)
        if not a or not b:
            continue
        if beta(rel, a, b) > 0:
            if block_dominates(rel, a, b, strict=False):
                first.append((a, b))
            if gamma(rel, a, b) > 0:
                second.append((a, b))
    for assign in product((0, 1, 2), repeat=m):
        a = frozenset(i for i in range(m) if assign[i] == 0)
        b = frozenset(i for i in range(m) if assign[i] == 1)
        c = frozenset(i for i in range(m) if assign[i] == 2)
        if not a or not b or not c:
            continue
        if (
            block_dominates(rel, a, b, strict=False)
            and block_dominates(rel, b, c, strict=True)
            and beta(rel, a, b) > 0
            and beta(rel, a, c) > 0
        ):
            tri.append((a, b, c))
    return GeneralPartitions(tuple(first), tuple(second), tuple(tri))
