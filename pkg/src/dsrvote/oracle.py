"""Brute-force reference implementations and exhaustive enumerators.

Everything here re-derives its answers from the raw relation cells rather
than calling the production partition/scoring code, so the equivalence
tests in the suite actually compare two independent computations.
"""

from __future__ import annotations

import random
from dataclasses import dataclass, field
from fractions import Fraction
from itertools import combinations

from .errors import TooLarge
from .majority import majority_of_profile
from .model import (
    BEAT,
    LOSE,
    TIE,
    AlternativeSet,
    PreferenceRelation,
    Profile,
    WeakOrder,
    weak_order_to_relation,
)
from .scoring import ScoringConfig, compute_scores, winner_set
from .solutions import (
    condorcet_loser,
    condorcet_winner,
    copeland,
    covers,
    schwartz_set,
    smith_set,
    top_cycle,
    uncovered_set,
)

MAX_TOURNAMENT_M = 6
MAX_WEAK_ORDER_M = 5
MAX_ORACLE_PSI_M = 8
MAX_SUBSET_M = 10


@dataclass(frozen=True)
class EnumerationSpec:
    """What to generate for a verification run."""

    m: int
    mode: str  # "tournaments", "weak-orders" or "random"
    seed: int = 0
    count: int = 1000
    n_range: tuple = (1, 9)


def _default_alts(m):
    return AlternativeSet(tuple(f"x{i + 1}" for i in range(m)))


def enumerate_tournaments(m, alts=None):
    """Yield all 2^(m(m-1)/2) labeled tournaments exactly once."""
    if not 2 <= m <= MAX_TOURNAMENT_M:
        raise TooLarge(f"tournament enumeration limited to 2 <= m <= {MAX_TOURNAMENT_M}")
    alts = alts or _default_alts(m)
    pairs = list(combinations(range(m), 2))
    for mask in range(1 << len(pairs)):
        cells = [[None if i == j else 0 for j in range(m)] for i in range(m)]
        for b, (i, j) in enumerate(pairs):
            if mask >> b & 1:
                cells[i][j], cells[j][i] = BEAT, LOSE
            else:
                cells[i][j], cells[j][i] = LOSE, BEAT
        yield PreferenceRelation(alts, cells)


def _ordered_partitions(remaining):
    # every ordered partition of a frozenset: pick the top tier, recurse
    if not remaining:
        yield ()
        return
    items = tuple(sorted(remaining))
    for k in range(1, len(items) + 1):
        for tier in combinations(items, k):
            tier_set = frozenset(tier)
            for tail in _ordered_partitions(remaining - tier_set):
                yield (tier_set,) + tail


def enumerate_weak_orders(m, alts=None):
    """Yield every weak order on m alternatives (ordered Bell many)."""
    if not 2 <= m <= MAX_WEAK_ORDER_M:
        raise TooLarge(f"weak-order enumeration limited to 2 <= m <= {MAX_WEAK_ORDER_M}")
    alts = alts or _default_alts(m)
    for tiers in _ordered_partitions(frozenset(range(m))):
        yield WeakOrder(alts, tiers)


def _mu_raw(cells, x, y, alpha):
    if x == y:
        return Fraction(0)
    c = cells[x][y]
    if c == BEAT:
        return Fraction(1)
    if c == TIE:
        return alpha
    return Fraction(0)


def oracle_psi(rel, config=None):
    """Literal transcription of the delta-form total score formula.

    Re-evaluates every condition bundle per pivot from the raw cells;
    shares no code with the production scoring pass.
    """
    if rel.m > MAX_ORACLE_PSI_M:
        raise TooLarge(f"oracle_psi limited to m <= {MAX_ORACLE_PSI_M}")
    alpha = (config or ScoringConfig()).alpha
    m = rel.m
    cells = rel.cells
    psi = [Fraction(0)] * m
    for z in range(m):
        succ = [x for x in range(m) if x != z and cells[x][z] == BEAT]
        prec = [x for x in range(m) if x != z and cells[x][z] == LOSE]
        simneq = [x for x in range(m) if x != z and cells[x][z] == TIE]
        above_or_tied = set(succ) | set(simneq)
        top_closed = above_or_tied | {z}
        cond_k1 = not prec and bool(succ)
        dominates = bool(prec) and all(
            cells[x][y] in (BEAT, TIE) for x in top_closed for y in prec
        )
        gamma_pos = bool(prec) and all(
            any(cells[x][y] == BEAT for y in prec) for x in top_closed
        )
        beta_pos = bool(prec) and any(
            all(cells[x][y] == BEAT for y in prec) for x in above_or_tied
        )
        two_sided = bool(prec) and (
            dominates or gamma_pos or (bool(succ) and beta_pos)
        )
        for x in range(m):
            if cond_k1 and x in above_or_tied:
                psi[x] += _mu_raw(cells, x, z, alpha)
            if two_sided and x in top_closed:
                psi[x] += _mu_raw(cells, x, z, alpha) + sum(
                    _mu_raw(cells, x, y, alpha) for y in prec
                )
    return tuple(psi)


def oracle_seek_partition(rel, z):
    """Clause-by-clause divisibility check for one pivot.

    Returns (kind-tag, blocks) with 'bi' or 'tri', or None; when both the
    two-sided bipartition and the tripartition qualify, the bipartition is
    reported, mirroring the stated preference.
    """
    m = rel.m
    cells = rel.cells
    succ = frozenset(x for x in range(m) if x != z and cells[x][z] == BEAT)
    prec = frozenset(x for x in range(m) if x != z and cells[x][z] == LOSE)
    simneq = frozenset(x for x in range(m) if x != z and cells[x][z] == TIE)
    above_or_tied = succ | simneq
    if not prec and succ:
        return ("bi", (above_or_tied, frozenset([z])))
    top_closed = above_or_tied | {z}
    if prec:
        dominates = all(cells[x][y] in (BEAT, TIE) for x in top_closed for y in prec)
        gamma_pos = all(any(cells[x][y] == BEAT for y in prec) for x in top_closed)
        if dominates or gamma_pos:
            return ("bi", (top_closed, prec))
        if succ and any(all(cells[x][y] == BEAT for y in prec) for x in above_or_tied):
            return ("tri", (above_or_tied, frozenset([z]), prec))
    return None


def brute_dominating_sets(rel):
    """All non-empty proper subsets strictly beating their complement."""
    m = rel.m
    if m > MAX_SUBSET_M:
        raise TooLarge(f"subset enumeration limited to m <= {MAX_SUBSET_M}")
    cells = rel.cells
    found = []
    everything = range(m)
    for size in range(1, m):
        for sub in combinations(everything, size):
            inside = set(sub)
            if all(
                cells[x][y] == BEAT
                for x in sub
                for y in everything
                if y not in inside
            ):
                found.append(frozenset(sub))
    return found


def brute_smith(rel):
    """Smallest dominant set by direct subset enumeration."""
    doms = brute_dominating_sets(rel)
    if not doms:
        return frozenset(range(rel.m))
    return min(doms, key=len)


def brute_schwartz(rel):
    """Union of minimal externally-undominated sets by subset enumeration."""
    m = rel.m
    if m > MAX_SUBSET_M:
        raise TooLarge(f"subset enumeration limited to m <= {MAX_SUBSET_M}")
    cells = rel.cells
    undominated = []
    for size in range(1, m + 1):
        for sub in combinations(range(m), size):
            inside = set(sub)
            if all(
                cells[y][x] != BEAT
                for x in sub
                for y in range(m)
                if y not in inside
            ):
                undominated.append(frozenset(sub))
    minimal = [
        a for a in undominated if not any(b < a for b in undominated)
    ]
    members = frozenset().union(*minimal) if minimal else frozenset(range(m))
    return members


def random_relation(m, rng, tie_weight=1):
    """Random complete relation; tie_weight 0 gives a tournament."""
    alts = _default_alts(m)
    cells = [[None if i == j else 0 for j in range(m)] for i in range(m)]
    outcomes = [BEAT, LOSE] + [TIE] * tie_weight
    for i in range(m):
        for j in range(i + 1, m):
            c = rng.choice(outcomes)
            cells[i][j], cells[j][i] = c, -c
    return PreferenceRelation(alts, cells)


def _random_weak_order(alts, rng, strict):
    order = list(range(alts.m))
    rng.shuffle(order)
    tiers = []
    current = [order[0]]
    for x in order[1:]:
        if strict or rng.random() < 0.6:
            tiers.append(frozenset(current))
            current = [x]
        else:
            current.append(x)
    tiers.append(frozenset(current))
    return WeakOrder(alts, tuple(tiers))


def random_profiles(spec):
    """Reproducible stream of random profiles of strict and weak orders."""
    rng = random.Random(spec.seed)
    lo, hi = spec.n_range
    for _ in range(spec.count):
        m = spec.m if isinstance(spec.m, int) else rng.randint(*spec.m)
        alts = _default_alts(m)
        n = rng.randint(lo, hi)
        strict = rng.random() < 0.5
        ballots = [(_random_weak_order(alts, rng, strict), 1) for _ in range(n)]
        yield Profile(alts, tuple(ballots))


def serialize_relation(rel):
    """Render a relation as a matrix-file payload (for counterexamples)."""
    lines = [str(rel.m)]
    for i in range(rel.m):
        lines.append(
            " ".join(
                "0" if i == j else str(rel.cells[i][j]) for j in range(rel.m)
            )
        )
    return "\n".join(lines)


def serialize_profile(profile):
    lines = ["alternatives: " + ",".join(profile.alts.names)]
    for order, mult in profile.ballots:
        groups = ["=".join(tier) for tier in order.label_tiers()]
        lines.append(f"{mult}: " + " > ".join(groups))
    return "\n".join(lines)


@dataclass
class TheoremReport:
    """Aggregated pass/fail counts for one verification run."""

    spec: EnumerationSpec
    instances: int = 0
    checks: dict = field(default_factory=dict)
    counterexamples: dict = field(default_factory=dict)
    notes: list = field(default_factory=list)

    def record(self, name, ok, witness=None):
        passed, failed = self.checks.get(name, (0, 0))
        if ok:
            self.checks[name] = (passed + 1, failed)
        else:
            self.checks[name] = (passed, failed + 1)
            if name not in self.counterexamples and witness is not None:
                self.counterexamples[name] = witness

    @property
    def violations(self):
        """Failed assertions; names prefixed `data:` are informational."""
        return sum(
            failed
            for name, (_, failed) in self.checks.items()
            if not name.startswith("data:")
        )

    def to_dict(self):
        return {
            "mode": self.spec.mode,
            "m": self.spec.m,
            "seed": self.spec.seed,
            "instances": self.instances,
            "checks": {
                name: {"passed": p, "failed": f}
                for name, (p, f) in sorted(self.checks.items())
            },
            "counterexamples": dict(self.counterexamples),
            "notes": list(self.notes),
            "violations": self.violations,
        }


_ALPHA_GRID = (Fraction(0), Fraction(1, 4), Fraction(1, 2), Fraction(3, 4), Fraction(1))


def _ranking_checks(report, rel, totals, witness):
    cw = condorcet_winner(rel)
    if cw is not None:
        top = max(totals)
        ok = totals[cw] == top and sum(1 for t in totals if t == top) == 1
        report.record("condorcet-winner-unique-argmax", ok, witness)
    cl = condorcet_loser(rel)
    if cl is not None:
        bottom = min(totals)
        ok = totals[cl] == bottom and sum(1 for t in totals if t == bottom) == 1
        report.record("condorcet-loser-strict-minimum", ok, witness)
    if rel.m <= MAX_TOURNAMENT_M:
        for dom in brute_dominating_sets(rel):
            ok = all(
                totals[a] > totals[b]
                for a in dom
                for b in range(rel.m)
                if b not in dom
            )
            report.record("gehrlein-stability", ok, witness)


def _tournament_checks(report, rel, config):
    witness = serialize_relation(rel)
    table = compute_scores(rel, config)
    totals = table.totals
    winners = winner_set(table).members
    _ranking_checks(report, rel, totals, witness)
    for x in range(rel.m):
        for y in range(rel.m):
            if x != y and covers(rel, x, y):
                report.record("covering-implies-higher-score", totals[x] > totals[y], witness)
    uc = uncovered_set(rel).members
    report.record("winners-in-uncovered-set", winners <= uc, witness)
    sm = smith_set(rel).members
    tc = top_cycle(rel).members
    sw = schwartz_set(rel).members
    report.record("winners-in-smith-set", winners <= sm, witness)
    report.record("smith-equals-top-cycle-equals-schwartz", sm == tc == sw, witness)
    cop = copeland(rel).winners
    if rel.m <= 5:
        report.record("winners-in-copeland-winners", winners <= cop, witness)
    else:
        # conjectured beyond m=5: reported as data, never asserted
        report.record(
            f"data:copeland-containment-m{rel.m}", winners <= cop, witness
        )


def _ordering_checks(report, order, config_alpha_grid=_ALPHA_GRID):
    rel = weak_order_to_relation(order)
    witness = serialize_relation(rel)
    ranks = order.ranks()
    all_tied = len(order.tiers) == 1
    for alpha in config_alpha_grid:
        totals = compute_scores(rel, ScoringConfig(alpha)).totals
        if all_tied:
            report.record("all-tie-zero-scores", all(t == 0 for t in totals), witness)
            continue
        ok = True
        for x in range(rel.m):
            for y in range(rel.m):
                if x == y:
                    continue
                if ranks[x] < ranks[y] and not totals[x] > totals[y]:
                    ok = False
                if ranks[x] == ranks[y] and totals[x] != totals[y]:
                    ok = False
        report.record("ordering-coincidence", ok, witness)


def _profile_checks(report, profile, config):
    witness = serialize_profile(profile)
    rel = majority_of_profile(profile)
    totals = compute_scores(rel, config).totals
    m = rel.m
    for x in range(m):
        for y in range(m):
            if x == y:
                continue
            strict_all = True
            weak_all = True
            strict_some = False
            for order, _mult in profile.ballots:
                ranks = order.ranks()
                if ranks[x] < ranks[y]:
                    strict_some = True
                else:
                    strict_all = False
                    if ranks[x] > ranks[y]:
                        weak_all = False
            if strict_all:
                report.record("weak-pareto", totals[x] > totals[y], witness)
            if weak_all and strict_some:
                report.record("strong-pareto", totals[x] > totals[y], witness)
    _ranking_checks(report, rel, totals, witness)
    # anonymity: splitting multiplicities and reversing the ballot list
    reordered = Profile(profile.alts, tuple(reversed(profile.ballots)))
    report.record(
        "anonymity",
        majority_of_profile(reordered) == rel,
        witness,
    )


def check_theorem_suite(spec, config=None):
    """Run the property battery over the generated instance stream."""
    config = config or ScoringConfig()
    report = TheoremReport(spec)
    if spec.mode == "tournaments":
        for rel in enumerate_tournaments(spec.m):
            report.instances += 1
            _tournament_checks(report, rel, config)
    elif spec.mode == "weak-orders":
        for order in enumerate_weak_orders(spec.m):
            report.instances += 1
            _ordering_checks(report, order)
    elif spec.mode == "random":
        for profile in random_profiles(spec):
            report.instances += 1
            _profile_checks(report, profile, config)
    else:
        raise ValueError(f"unknown mode {spec.mode!r}")
    return report
