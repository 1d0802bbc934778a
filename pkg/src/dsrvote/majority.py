"""Pairwise tallying and the simple-majority relation."""

from __future__ import annotations

from dataclasses import dataclass

from .model import BEAT, LOSE, TIE, PreferenceRelation


@dataclass(frozen=True)
class PairwiseTally:
    """wins[i][j] = number of voters ranking alternative i strictly above j."""

    alts: object
    wins: tuple

    def __post_init__(self):
        object.__setattr__(self, "wins", tuple(tuple(row) for row in self.wins))

    def ties(self, i, j, n):
        return n - self.wins[i][j] - self.wins[j][i]


def tally(profile):
    """Count pairwise strict preferences across all ballots."""
    m = profile.alts.m
    wins = [[0] * m for _ in range(m)]
    for order, mult in profile.ballots:
        ranks = order.ranks()
        for i in range(m):
            ri = ranks[i]
            for j in range(m):
                if i != j and ri < ranks[j]:
                    wins[i][j] += mult
    return PairwiseTally(profile.alts, wins)


def majority_relation(tallied):
    """Simple majority: i beats j iff strictly more voters rank i above j."""
    m = tallied.alts.m
    wins = tallied.wins
    cells = [
        [
            None
            if i == j
            else (BEAT if wins[i][j] > wins[j][i] else LOSE if wins[i][j] < wins[j][i] else TIE)
            for j in range(m)
        ]
        for i in range(m)
    ]
    return PreferenceRelation(tallied.alts, cells)


def majority_of_profile(profile):
    """Convenience: tally a profile and return its majority relation."""
    return majority_relation(tally(profile))
