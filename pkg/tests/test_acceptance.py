"""Acceptance suite: twelve gate criteria, one pass/fail line each.

Each criterion prints a single line into the terminal summary. All
numeric checks are exact rational comparisons; criterion 12 is a soft,
logged timing check.
"""

import functools
import random
import time
from fractions import Fraction

from conftest import ACCEPTANCE_RESULTS, EX2_BALLOTS, EX4_BALLOTS
from dsrvote import (
    AlternativeSet,
    ScoringConfig,
    WeakOrder,
    compute_scores,
    copeland,
    linear_order_score,
    majority_of_profile,
    parse_ballots,
    seek_partition,
    social_ranking,
    uncovered_set,
    validate_relation,
    weak_order_to_relation,
    winner_set,
)
from dsrvote.oracle import (
    EnumerationSpec,
    check_theorem_suite,
    enumerate_tournaments,
    oracle_psi,
    oracle_seek_partition,
    random_relation,
)

ALPHAS = (Fraction(0), Fraction(1, 4), Fraction(1, 2), Fraction(3, 4), Fraction(1))


def criterion(number, title):
    def deco(fn):
        @functools.wraps(fn)
        def wrapper(*args, **kwargs):
            start = time.monotonic()
            try:
                extra = fn(*args, **kwargs)
            except BaseException:
                elapsed = time.monotonic() - start
                ACCEPTANCE_RESULTS.append(
                    f"criterion {number:2d} {title}: FAIL ({elapsed:.1f}s)"
                )
                raise
            elapsed = time.monotonic() - start
            suffix = f" [{extra}]" if extra else ""
            ACCEPTANCE_RESULTS.append(
                f"criterion {number:2d} {title}: PASS ({elapsed:.1f}s){suffix}"
            )

        return wrapper

    return deco


EX3_RAW = [
    [0, 1, -1, 1, 1, -1],
    [-1, 0, 1, -1, 1, 1],
    [1, -1, 0, 1, -1, 1],
    [-1, 1, -1, 0, -1, 1],
    [-1, -1, 1, 1, 0, -1],
    [1, -1, -1, -1, 1, 0],
]

EX5_RAW = [
    [0, 1, 1, -1],
    [-1, 0, 1, 1],
    [-1, -1, 0, 1],
    [1, -1, -1, 0],
]

EX6_RAW = [
    [0, 1, 0],
    [-1, 0, 1],
    [0, -1, 0],
]


@criterion(1, "golden profile score table")
def test_criterion_01():
    rel = majority_of_profile(parse_ballots(EX2_BALLOTS))
    table = compute_scores(rel)
    n = rel.alts.index
    expected_columns = {
        "x": {"x": 0, "y": 0, "z": 0, "u": 0},
        "y": {"x": 0, "y": 0, "z": 0, "u": 0},
        "z": {"x": 0, "y": 2, "z": 2, "u": 0},
        "u": {"x": 0, "y": 1, "z": 2, "u": 1},
    }
    for pivot, column in expected_columns.items():
        for who, value in column.items():
            assert table.per_pivot[n(pivot)][n(who)] == value
    assert [table.total_of(a) for a in "xyzu"] == [0, 3, 4, 1]
    assert social_ranking(table).label_tiers() == [["z"], ["y"], ["u"], ["x"]]


@criterion(2, "golden six-alternative tournament")
def test_criterion_02():
    rel = validate_relation(EX3_RAW, names=tuple(f"a{i}" for i in range(1, 7)))
    table = compute_scores(rel)
    assert table.totals == (5, 5, 5, 2, 2, 2)
    assert winner_set(table).labels() == ["a1", "a2", "a3"]
    divisible = {
        rel.alts.names[z] for z in range(6) if table.partitions[z] is not None
    }
    assert divisible == {"a1", "a2", "a3"}
    assert all(len(table.partitions[z].blocks) == 2 for z in range(3))
    assert table.partitions[0].blocks == (
        rel.alts.indices({"a1", "a3", "a6"}),
        rel.alts.indices({"a2", "a4", "a5"}),
    )


@criterion(3, "golden approval pipeline")
def test_criterion_03():
    profile = parse_ballots(EX4_BALLOTS).to_profile()
    rel = majority_of_profile(profile)
    names = rel.alts.names
    beats = {
        (names[i], names[j])
        for i in range(3)
        for j in range(3)
        if i != j and rel.beats(i, j)
    }
    assert beats == {("a", "b"), ("c", "a"), ("c", "b")}
    table = compute_scores(rel)
    assert table.totals == (2, 0, 5)
    assert winner_set(table).labels() == ["c"]


@criterion(4, "golden comparator tournament")
def test_criterion_04():
    rel = validate_relation(EX5_RAW, names=("a", "b", "c", "d"))
    table = compute_scores(rel)
    assert table.totals == (3, 4, 1, 0)
    winners = winner_set(table)
    assert winners.labels() == ["b"]
    cop = copeland(rel)
    assert cop.labels() == ["a", "b"]
    uc = uncovered_set(rel)
    assert uc.labels() == ["a", "b", "d"]
    assert winners.members <= cop.winners
    assert winners.members <= uc.members


@criterion(5, "golden tie-point sweep")
def test_criterion_05():
    rel = validate_relation(EX6_RAW, names=("a", "b", "c"))
    expected = {
        Fraction(0): [["b"], ["a"], ["c"]],
        Fraction(1, 4): [["b"], ["a"], ["c"]],
        Fraction(1, 2): [["a", "b"], ["c"]],
        Fraction(3, 4): [["a"], ["b"], ["c"]],
        Fraction(1): [["a"], ["b"], ["c"]],
    }
    for alpha in ALPHAS:
        table = compute_scores(rel, ScoringConfig(alpha))
        assert table.totals == (1 + 2 * alpha, 2, 0)
        assert social_ranking(table).label_tiers() == expected[alpha]
        assert copeland(rel, alpha).scores == (1 + alpha, 1, alpha)


@criterion(6, "strict-order closed form")
def test_criterion_06():
    rng = random.Random(601)
    for m in range(2, 13):
        alts = AlternativeSet(tuple(f"x{i}" for i in range(m)))
        perms = [list(range(m))]
        for _ in range(3):
            p = list(range(m))
            rng.shuffle(p)
            perms.append(p)
        for perm in perms:
            order = WeakOrder(alts, tuple(frozenset([i]) for i in perm))
            totals = compute_scores(weak_order_to_relation(order)).totals
            for pos, i in enumerate(perm):
                assert totals[i] == linear_order_score(m - pos)


@criterion(7, "transitive-input coincidence")
def test_criterion_07():
    expected_counts = {2: 3, 3: 13, 4: 75}
    for m, count in expected_counts.items():
        report = check_theorem_suite(EnumerationSpec(m=m, mode="weak-orders"))
        assert report.instances == count
        assert report.violations == 0, report.counterexamples
    # neutrality: relabeling permutes the totals accordingly
    rng = random.Random(701)
    for _ in range(50):
        rel = random_relation(rng.randint(3, 5), rng)
        m = rel.m
        perm = list(range(m))
        rng.shuffle(perm)
        cells = [[0] * m for _ in range(m)]
        for i in range(m):
            for j in range(m):
                if i != j:
                    cells[perm[i]][perm[j]] = rel.cells[i][j]
        totals = compute_scores(rel).totals
        permuted = compute_scores(validate_relation(cells)).totals
        assert all(permuted[perm[i]] == totals[i] for i in range(m))


@criterion(8, "winner containment, small tournaments")
def test_criterion_08():
    expected = {3: 8, 4: 64, 5: 1024}
    for m, count in expected.items():
        report = check_theorem_suite(EnumerationSpec(m=m, mode="tournaments"))
        assert report.instances == count
        passed, failed = report.checks["winners-in-copeland-winners"]
        assert passed == count and failed == 0, report.counterexamples


@criterion(9, "covering and dominance containments, exhaustive")
def test_criterion_09():
    names = (
        "covering-implies-higher-score",
        "winners-in-uncovered-set",
        "winners-in-smith-set",
        "smith-equals-top-cycle-equals-schwartz",
    )
    data = ""
    for m in (3, 4, 5, 6):
        report = check_theorem_suite(EnumerationSpec(m=m, mode="tournaments"))
        assert report.instances == 2 ** (m * (m - 1) // 2)
        for name in names:
            _, failed = report.checks[name]
            assert failed == 0, (m, name, report.counterexamples)
        if m == 6:
            holds, breaks = report.checks["data:copeland-containment-m6"]
            data = f"m=6 winner-containment data: holds {holds}, fails {breaks}"
    return data


@criterion(10, "randomized profile properties")
def test_criterion_10():
    spec = EnumerationSpec(m=(3, 6), mode="random", seed=20260823, count=5000)
    report = check_theorem_suite(spec)
    assert report.instances == 5000
    assert report.violations == 0, report.counterexamples
    for name in (
        "weak-pareto",
        "strong-pareto",
        "condorcet-winner-unique-argmax",
        "condorcet-loser-strict-minimum",
        "gehrlein-stability",
        "anonymity",
    ):
        assert name in report.checks, name
    return f"seed={spec.seed}"


@criterion(11, "independent oracle equivalence")
def test_criterion_11():
    for m in (2, 3, 4, 5):
        for rel in enumerate_tournaments(m):
            assert oracle_psi(rel) == compute_scores(rel).totals
            for z in range(m):
                ref = oracle_seek_partition(rel, z)
                part = seek_partition(rel, z)
                if ref is None:
                    assert part is None
                else:
                    assert part is not None and part.blocks == ref[1]
    rng = random.Random(1101)
    for _ in range(1000):
        rel = random_relation(rng.randint(3, 7), rng)
        assert oracle_psi(rel) == compute_scores(rel).totals
        for z in range(rel.m):
            ref = oracle_seek_partition(rel, z)
            part = seek_partition(rel, z)
            if ref is None:
                assert part is None
            else:
                assert part is not None and part.blocks == ref[1]


@criterion(12, "complexity smoke (soft)")
def test_criterion_12():
    rng = random.Random(1201)
    timings = {}
    for m in (100, 200, 400):
        rel = random_relation(m, rng)
        start = time.monotonic()
        compute_scores(rel)
        timings[m] = time.monotonic() - start
    r1 = timings[200] / max(timings[100], 1e-9)
    r2 = timings[400] / max(timings[200], 1e-9)
    note = (
        f"t100={timings[100]:.2f}s t200={timings[200]:.2f}s "
        f"t400={timings[400]:.2f}s ratios {r1:.1f}x, {r2:.1f}x (soft bound 8.5x)"
    )
    return note
