"""Classical solution concepts: Condorcet winner/loser, Smith set, top
cycle, Schwartz set, covering/uncovered set, and Copeland scores.

Smith and Schwartz are computed through strongly connected components of
the relevant dominance digraphs; exhaustive subset oracles live in the
oracle module and are only used by tests.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .errors import TiesPresent
from .model import BEAT, LOSE, TIE


@dataclass(frozen=True)
class ChoiceSet:
    """Non-empty winner subset tagged with the producing rule."""

    alts: object
    members: frozenset
    concept: str

    def __post_init__(self):
        if not self.members:
            raise ValueError("choice sets are never empty")

    def labels(self):
        return sorted(self.alts.labels(self.members))


@dataclass(frozen=True)
class CopelandResult:
    """Per-alternative scores (wins + alpha * ties) and the argmax set."""

    alts: object
    alpha: Fraction
    scores: tuple
    winners: frozenset

    def labels(self):
        return sorted(self.alts.labels(self.winners))


def condorcet_winner(rel):
    """Index of the alternative beating all others, or None."""
    for x in range(rel.m):
        if all(rel.cells[x][y] == BEAT for y in range(rel.m) if y != x):
            return x
    return None


def condorcet_loser(rel):
    """Index of the alternative beaten by all others, or None."""
    for x in range(rel.m):
        if all(rel.cells[x][y] == LOSE for y in range(rel.m) if y != x):
            return x
    return None


def _sccs(m, edge):
    """Strongly connected components (iterative Tarjan) of edge(i, j) digraph."""
    index = [None] * m
    low = [0] * m
    on_stack = [False] * m
    stack = []
    comps = []
    counter = [0]

    for root in range(m):
        if index[root] is not None:
            continue
        work = [(root, 0)]
        while work:
            v, pi = work[-1]
            if pi == 0:
                index[v] = low[v] = counter[0]
                counter[0] += 1
                stack.append(v)
                on_stack[v] = True
            advanced = False
            for w in range(pi, m):
                if w == v or not edge(v, w):
                    continue
                if index[w] is None:
                    work[-1] = (v, w + 1)
                    work.append((w, 0))
                    advanced = True
                    break
                if on_stack[w]:
                    low[v] = min(low[v], index[w])
            if advanced:
                continue
            work.pop()
            if work:
                parent = work[-1][0]
                low[parent] = min(low[parent], low[v])
            if low[v] == index[v]:
                comp = []
                while True:
                    w = stack.pop()
                    on_stack[w] = False
                    comp.append(w)
                    if w == v:
                        break
                comps.append(frozenset(comp))
    return comps


def smith_set(rel, concept="smith"):
    """Smallest non-empty set whose members all beat all non-members.

    Equals the unique source component of the beats-or-ties digraph.
    """
    cells = rel.cells
    comps = _sccs(rel.m, lambda i, j: cells[i][j] in (BEAT, TIE))
    for comp in comps:
        outside = [y for y in range(rel.m) if y not in comp]
        if all(cells[x][y] == BEAT for x in comp for y in outside):
            return ChoiceSet(rel.alts, comp, concept)
    raise AssertionError("beats-or-ties condensation must have a source")


def top_cycle(rel):
    """Condorcet winner singleton, or the minimal dominant set.

    Coincides with the Smith set; in tournaments also with Schwartz.
    """
    return smith_set(rel, concept="top-cycle")


def schwartz_set(rel):
    """Union of source components of the strict-beat digraph (GOCHA)."""
    cells = rel.cells
    comps = _sccs(rel.m, lambda i, j: cells[i][j] == BEAT)
    members = set()
    for comp in comps:
        undominated = all(
            cells[y][x] != BEAT
            for x in comp
            for y in range(rel.m)
            if y not in comp
        )
        if undominated:
            members |= comp
    return ChoiceSet(rel.alts, frozenset(members), "schwartz")


def covers(rel, x, y):
    """Tournament covering: x beats y and everything y beats."""
    if not rel.is_tournament:
        raise TiesPresent("covering is defined for tournaments only")
    if x == y:
        raise ValueError("covering needs distinct alternatives")
    cells = rel.cells
    if cells[x][y] != BEAT:
        return False
    row_x, row_y = cells[x], cells[y]
    return all(
        row_x[z] == BEAT
        for z in range(rel.m)
        if z != x and z != y and row_y[z] == BEAT
    )


def uncovered_set(rel):
    """Alternatives covered by nobody (tournaments only)."""
    if not rel.is_tournament:
        raise TiesPresent("the uncovered set is defined for tournaments only")
    members = frozenset(
        y
        for y in range(rel.m)
        if not any(covers(rel, x, y) for x in range(rel.m) if x != y)
    )
    return ChoiceSet(rel.alts, members, "uncovered")


def copeland(rel, alpha=Fraction(1, 2)):
    """Copeland scores: one point per win, alpha per tie."""
    alpha = Fraction(alpha)
    if not 0 <= alpha <= 1:
        raise ValueError("alpha must lie in [0, 1]")
    cells = rel.cells
    scores = []
    for x in range(rel.m):
        wins = sum(1 for y in range(rel.m) if y != x and cells[x][y] == BEAT)
        ties = sum(1 for y in range(rel.m) if y != x and cells[x][y] == TIE)
        scores.append(wins + ties * alpha)
    top = max(scores)
    winners = frozenset(x for x, s in enumerate(scores) if s == top)
    return CopelandResult(rel.alts, alpha, tuple(scores), winners)
