"""Classical solution concepts against brute-force subset oracles."""

import random
from fractions import Fraction

import pytest

from dsrvote import (
    TiesPresent,
    condorcet_loser,
    condorcet_winner,
    copeland,
    covers,
    schwartz_set,
    smith_set,
    top_cycle,
    uncovered_set,
    validate_relation,
)
from dsrvote.oracle import (
    brute_schwartz,
    brute_smith,
    enumerate_tournaments,
    random_relation,
)


class TestCondorcet:
    def test_winner(self, ex1_rel):
        assert condorcet_winner(ex1_rel) == ex1_rel.alts.index("a")

    def test_no_loser_with_tie(self, ex1_rel):
        assert condorcet_loser(ex1_rel) is None

    def test_loser(self, ex5_rel):
        # a 3-cycle on top of a universal loser
        rel = validate_relation(
            [[0, 1, -1, 1], [-1, 0, 1, 1], [1, -1, 0, 1], [-1, -1, -1, 0]]
        )
        assert condorcet_winner(rel) is None
        assert condorcet_loser(rel) == 3


class TestSmithSchwartz:
    def test_exhaustive_small_tournaments(self):
        for m in (3, 4):
            for rel in enumerate_tournaments(m):
                assert smith_set(rel).members == brute_smith(rel)
                assert schwartz_set(rel).members == brute_schwartz(rel)
                assert top_cycle(rel).members == smith_set(rel).members

    def test_random_tied_relations(self):
        rng = random.Random(42)
        for _ in range(300):
            rel = random_relation(rng.randint(3, 6), rng)
            assert smith_set(rel).members == brute_smith(rel)
            assert schwartz_set(rel).members == brute_schwartz(rel)

    def test_condorcet_winner_is_smith(self, ex1_rel):
        assert smith_set(ex1_rel).labels() == ["a"]

    def test_schwartz_subset_of_smith(self):
        rng = random.Random(7)
        for _ in range(200):
            rel = random_relation(rng.randint(3, 6), rng)
            assert schwartz_set(rel).members <= smith_set(rel).members


class TestCovering:
    def test_example5_pair(self, ex5_rel):
        a, c = ex5_rel.alts.index("a"), ex5_rel.alts.index("c")
        assert not covers(ex5_rel, a, c)
        b = ex5_rel.alts.index("b")
        assert covers(ex5_rel, b, c)

    def test_uncovered_example5(self, ex5_rel):
        assert uncovered_set(ex5_rel).labels() == ["a", "b", "d"]

    def test_ties_rejected(self, ex6_rel):
        with pytest.raises(TiesPresent):
            covers(ex6_rel, 0, 1)
        with pytest.raises(TiesPresent):
            uncovered_set(ex6_rel)


class TestCopeland:
    def test_example5(self, ex5_rel):
        result = copeland(ex5_rel)
        assert result.labels() == ["a", "b"]
        assert result.scores == (2, 2, 1, 1)

    def test_example6_alpha(self, ex6_rel):
        for alpha in (Fraction(0), Fraction(1, 2), Fraction(1)):
            result = copeland(ex6_rel, alpha)
            assert result.scores == (1 + alpha, 1, alpha)

    def test_alpha_range(self, ex5_rel):
        with pytest.raises(ValueError):
            copeland(ex5_rel, Fraction(2))
