"""Core types: alternatives, pairwise relations, weak orders, profiles.

All types are immutable after construction and all operations are pure,
so everything here is safe to share between threads.
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import IntEnum

from .errors import (
    DimensionError,
    DsrError,
    EmptySubset,
    InconsistentPair,
    SingletonSubset,
    UnknownAlternative,
)

# Cell codes used inside PreferenceRelation tables. The diagonal stores
# None as a reserved "self" marker; it is never interpreted as an outcome.
BEAT = 1
TIE = 0
LOSE = -1


class Outcome(IntEnum):
    """Result of one ordered pairwise comparison."""

    BEAT = 1
    TIE = 0
    LOSE = -1


@dataclass(frozen=True)
class AlternativeSet:
    """Ordered roster of distinct alternative labels."""

    names: tuple

    def __post_init__(self):
        if len(self.names) < 2:
            raise DimensionError("need at least 2 alternatives")
        if len(set(self.names)) != len(self.names):
            raise DsrError("alternative labels must be unique")
        if any(not n for n in self.names):
            raise DsrError("alternative labels must be non-empty")
        object.__setattr__(self, "names", tuple(self.names))

    @property
    def m(self):
        return len(self.names)

    def index(self, label):
        try:
            return self.names.index(label)
        except ValueError:
            raise UnknownAlternative(f"unknown alternative {label!r}") from None

    def indices(self, labels):
        return frozenset(self.index(x) for x in labels)

    def labels(self, indices):
        return frozenset(self.names[i] for i in indices)


class PreferenceRelation:
    """Complete pairwise relation over a roster.

    `cells[i][j]` is BEAT/TIE/LOSE for i != j and None on the diagonal.
    A relation without TIE cells is a tournament.
    """

    __slots__ = ("alts", "cells", "_is_tournament")

    def __init__(self, alts, cells):
        m = alts.m
        if len(cells) != m or any(len(row) != m for row in cells):
            raise DimensionError("cell table does not match roster size")
        for i in range(m):
            if cells[i][i] is not None:
                raise InconsistentPair("diagonal must hold the self marker")
            for j in range(i + 1, m):
                a, b = cells[i][j], cells[j][i]
                if a not in (BEAT, TIE, LOSE) or b != -a:
                    raise InconsistentPair(
                        f"cells ({alts.names[i]},{alts.names[j]}) are inconsistent"
                    )
        self.alts = alts
        self.cells = tuple(tuple(row) for row in cells)
        self._is_tournament = all(
            self.cells[i][j] != TIE for i in range(m) for j in range(m) if i != j
        )

    @property
    def m(self):
        return self.alts.m

    def outcome(self, i, j):
        """Outcome of i versus j; i == j raises (diagonal is reserved)."""
        if i == j:
            raise DsrError("outcome undefined on the diagonal")
        return Outcome(self.cells[i][j])

    def beats(self, i, j):
        return self.cells[i][j] == BEAT

    def ties(self, i, j):
        return i != j and self.cells[i][j] == TIE

    @property
    def is_tournament(self):
        return self._is_tournament

    def __eq__(self, other):
        return (
            isinstance(other, PreferenceRelation)
            and self.alts == other.alts
            and self.cells == other.cells
        )

    def __hash__(self):
        return hash((self.alts, self.cells))

    def __repr__(self):
        return f"PreferenceRelation({self.alts.names!r})"


def validate_relation(raw, names=None):
    """Build a PreferenceRelation from an m x m table of {1, -1, 0}.

    Off-diagonal 1 means row beats column, -1 row loses, 0 a tie.
    Diagonal entries are ignored (they act as the self marker).
    """
    m = len(raw)
    if m < 2 or any(len(row) != m for row in raw):
        raise DimensionError("table must be square with m >= 2")
    if names is None:
        names = tuple(f"x{i + 1}" for i in range(m))
    alts = AlternativeSet(tuple(names))
    cells = []
    for i in range(m):
        row = []
        for j in range(m):
            if i == j:
                row.append(None)
                continue
            v = int(raw[i][j])
            if v not in (BEAT, TIE, LOSE):
                raise InconsistentPair(f"cell ({i},{j}) has invalid value {v}")
            row.append(v)
        cells.append(row)
    return PreferenceRelation(alts, cells)


@dataclass(frozen=True)
class WeakOrder:
    """Complete transitive preference given as ordered indifference tiers.

    `tiers[0]` is the most preferred group; every alternative index of the
    roster appears in exactly one tier.
    """

    alts: AlternativeSet
    tiers: tuple

    def __post_init__(self):
        tiers = tuple(frozenset(t) for t in self.tiers)
        object.__setattr__(self, "tiers", tiers)
        seen = set()
        for t in tiers:
            if not t:
                raise DsrError("empty tier in weak order")
            if t & seen:
                raise DsrError("alternative appears in two tiers")
            seen |= t
        if seen != set(range(self.alts.m)):
            raise DsrError("tiers must cover the roster exactly")

    @classmethod
    def from_labels(cls, alts, label_tiers):
        return cls(alts, tuple(alts.indices(t) for t in label_tiers))

    def ranks(self):
        """Map index -> tier position (0 = most preferred)."""
        r = [0] * self.alts.m
        for pos, tier in enumerate(self.tiers):
            for i in tier:
                r[i] = pos
        return r

    @property
    def is_strict(self):
        return all(len(t) == 1 for t in self.tiers)

    def label_tiers(self):
        return [sorted(self.alts.labels(t)) for t in self.tiers]


def weak_order_to_relation(order):
    """Induce the complete transitive relation of a weak order."""
    m = order.alts.m
    ranks = order.ranks()
    cells = [
        [
            None
            if i == j
            else (BEAT if ranks[i] < ranks[j] else LOSE if ranks[i] > ranks[j] else TIE)
            for j in range(m)
        ]
        for i in range(m)
    ]
    return PreferenceRelation(order.alts, cells)


def approval_to_weak_order(approved, alts):
    """Turn an approval ballot into a two-tier weak order.

    Empty or full approval collapses to a single indifference tier.
    """
    approved = alts.indices(approved)
    rest = frozenset(range(alts.m)) - approved
    if not approved or not rest:
        return WeakOrder(alts, (frozenset(range(alts.m)),))
    return WeakOrder(alts, (approved, rest))


@dataclass(frozen=True)
class Profile:
    """Multiset of weak-order ballots over a shared roster."""

    alts: AlternativeSet
    ballots: tuple  # of (WeakOrder, multiplicity)

    def __post_init__(self):
        object.__setattr__(self, "ballots", tuple(self.ballots))
        if not self.ballots:
            raise DsrError("profile needs at least one ballot")
        for order, mult in self.ballots:
            if order.alts != self.alts:
                raise DsrError("ballot roster differs from profile roster")
            if mult < 1:
                raise DsrError("ballot multiplicity must be positive")

    @property
    def n(self):
        return sum(mult for _, mult in self.ballots)


@dataclass(frozen=True)
class ApprovalProfile:
    """Multiset of approval ballots (approved subsets of the roster)."""

    alts: AlternativeSet
    ballots: tuple  # of (frozenset of indices, multiplicity)

    def __post_init__(self):
        ballots = tuple((frozenset(b), int(mult)) for b, mult in self.ballots)
        object.__setattr__(self, "ballots", ballots)
        if not ballots:
            raise DsrError("profile needs at least one ballot")
        full = set(range(self.alts.m))
        for approved, mult in ballots:
            if not approved <= full:
                raise UnknownAlternative("approval ballot outside roster")
            if mult < 1:
                raise DsrError("ballot multiplicity must be positive")

    @property
    def n(self):
        return sum(mult for _, mult in self.ballots)

    def to_profile(self):
        """Transform every dichotomous ballot into a weak order."""
        labels = self.alts.names
        return Profile(
            self.alts,
            tuple(
                (approval_to_weak_order([labels[i] for i in b], self.alts), mult)
                for b, mult in self.ballots
            ),
        )


def restrict(rel, subset):
    """Restrict a relation to a subset of alternative labels."""
    if not subset:
        raise EmptySubset("cannot restrict to the empty set")
    idx = sorted(rel.alts.index(x) for x in subset)
    if len(idx) == 1:
        raise SingletonSubset("a relation needs at least 2 alternatives")
    alts = AlternativeSet(tuple(rel.alts.names[i] for i in idx))
    cells = [
        [None if a == b else rel.cells[a][b] for b in idx]
        for a in idx
    ]
    return PreferenceRelation(alts, cells)


def is_transitive(rel):
    """Check the four transitivity clauses over all ordered triples."""
    m = rel.m
    c = rel.cells
    for i in range(m):
        for j in range(m):
            if i == j:
                continue
            for k in range(m):
                if k == i or k == j:
                    continue
                ij, jk, ik = c[i][j], c[j][k], c[i][k]
                if ij == BEAT and jk == BEAT and ik != BEAT:
                    return False
                if ij == TIE and jk == BEAT and ik != BEAT:
                    return False
                if ij == BEAT and jk == TIE and ik != BEAT:
                    return False
                if ij == TIE and jk == TIE and ik != TIE:
                    return False
    return True
