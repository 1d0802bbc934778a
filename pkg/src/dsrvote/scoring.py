"""Per-pivot scores, totals, the social ranking and the winner set.

All arithmetic is exact (ints and fractions.Fraction); equality of totals
is exact, so indifference groups in the output ranking are unambiguous.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction

from .model import BEAT, TIE, WeakOrder
from .partitions import seek_partition
from .solutions import ChoiceSet

DEFAULT_ALPHA = Fraction(1, 2)


@dataclass(frozen=True)
class ScoringConfig:
    """Tie point for a single pairwise comparison; must lie in [0, 1]."""

    alpha: Fraction = DEFAULT_ALPHA

    def __post_init__(self):
        a = Fraction(self.alpha)
        if not 0 <= a <= 1:
            raise ValueError("alpha must lie in [0, 1]")
        object.__setattr__(self, "alpha", a)


DEFAULT_CONFIG = ScoringConfig()


def mu(rel, x, y, config=DEFAULT_CONFIG):
    """Single-comparison points: 1 for a win, alpha for a tie, else 0."""
    if x == y:
        return Fraction(0)
    c = rel.cells[x][y]
    if c == BEAT:
        return Fraction(1)
    if c == TIE:
        return config.alpha
    return Fraction(0)


@dataclass(frozen=True)
class ScoreTable:
    """Per-pivot scores, their column sums, and the pivot partitions used."""

    alts: object
    per_pivot: tuple  # per_pivot[z][x]
    totals: tuple
    partitions: dict = field(compare=False)

    def total_of(self, label):
        return self.totals[self.alts.index(label)]


def compute_scores(rel, config=DEFAULT_CONFIG):
    """Run the pivot-by-pivot scoring pass over a complete relation.

    For each pivot with a partition, members above the bottom block get
    their comparison points against the pivot plus (for the two-sided
    kinds) against everything the pivot beats; the bottom block gets 0.
    Pivots with no partition contribute an all-zero column.
    """
    m = rel.m
    cells = rel.cells
    alpha = config.alpha
    per_pivot = []
    partitions = {}
    for z in range(m):
        part = seek_partition(rel, z)
        partitions[z] = part
        col = [Fraction(0)] * m
        if part is not None:
            if part.kind == "k1":
                for x in part.blocks[0]:
                    col[x] = Fraction(1) if cells[x][z] == BEAT else alpha
            else:
                # opponents contributing points: the pivot plus everyone it beats
                opponents = tuple(part.bottom | {z})
                for x in part.scoring_members:
                    row = cells[x]
                    wins = ties = 0
                    for y in opponents:
                        if y == x:
                            continue
                        c = row[y]
                        if c == BEAT:
                            wins += 1
                        elif c == TIE:
                            ties += 1
                    col[x] = wins + ties * alpha if ties else Fraction(wins)
        per_pivot.append(tuple(col))
    totals = tuple(sum(per_pivot[z][x] for z in range(m)) for x in range(m))
    return ScoreTable(rel.alts, tuple(per_pivot), totals, partitions)


def social_ranking(table):
    """Weak order over alternatives by strictly decreasing total."""
    groups = {}
    for x, t in enumerate(table.totals):
        groups.setdefault(t, []).append(x)
    tiers = tuple(
        frozenset(groups[t]) for t in sorted(groups, reverse=True)
    )
    return WeakOrder(table.alts, tiers)


def winner_set(table):
    """All alternatives attaining the maximal total."""
    top = max(table.totals)
    members = frozenset(x for x, t in enumerate(table.totals) if t == top)
    return ChoiceSet(table.alts, members, "dsr")


def linear_order_score(i):
    """Closed-form total for position i from the bottom of a strict order."""
    if i < 1:
        raise ValueError("positions are counted from 1 (the last place)")
    return Fraction((i - 1) * (i + 2), 2)
