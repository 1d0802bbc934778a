"""Command-line interface.

Subcommands: rank (ballot file), tournament (matrix file), partitions,
compare, verify. Text output is human-oriented; --format json emits one
structured document with every rational as an exact "num/den" string.

Exit codes: 0 success (including verify runs that find counterexamples),
1 parse or validation error, 2 internal failure.
"""

from __future__ import annotations

import argparse
import json
import sys
from fractions import Fraction

from .ballots import looks_like_ballots, parse_ballots, parse_matrix
from .errors import DsrError
from .majority import majority_of_profile
from .model import ApprovalProfile
from .oracle import EnumerationSpec, check_theorem_suite
from .scoring import ScoringConfig, compute_scores, social_ranking, winner_set
from .solutions import (
    condorcet_loser,
    condorcet_winner,
    copeland,
    schwartz_set,
    smith_set,
    top_cycle,
    uncovered_set,
)

_KIND_LABELS = {
    "k1": "pivot alone at the bottom",
    "k2": "top block dominates",
    "k3": "everyone on top beats someone below",
    "k4": "tripartition around the pivot",
}


def _rat(x):
    f = Fraction(x)
    return f"{f.numerator}/{f.denominator}"


def _parse_alpha(text):
    try:
        alpha = Fraction(text)
    except (ValueError, ZeroDivisionError):
        raise DsrError(f"alpha {text!r} is not a rational P/Q") from None
    if not 0 <= alpha <= 1:
        raise DsrError("alpha must lie in [0, 1]")
    return ScoringConfig(alpha)


def _read(path):
    try:
        with open(path, encoding="utf-8") as fh:
            return fh.read()
    except OSError as exc:
        raise DsrError(f"cannot read {path}: {exc.strerror}") from None


def _relation_from_file(path):
    """Sniff the file type and return (relation, profile-or-None)."""
    text = _read(path)
    if looks_like_ballots(text):
        profile = parse_ballots(text)
        if isinstance(profile, ApprovalProfile):
            profile = profile.to_profile()
        return majority_of_profile(profile), profile
    return parse_matrix(text), None


def _relation_lines(rel):
    out = []
    for i in range(rel.m):
        for j in range(rel.m):
            if i == j or rel.cells[i][j] == -1:
                continue
            sym = ">" if rel.cells[i][j] == 1 else "~"
            if sym == "~" and i > j:
                continue
            out.append(f"{rel.alts.names[i]} {sym} {rel.alts.names[j]}")
    return out


def _ranking_text(order):
    return " > ".join("=".join(tier) for tier in order.label_tiers())


def _blocks_text(rel, blocks):
    rendered = []
    for b in blocks:
        rendered.append("{" + ",".join(sorted(rel.alts.labels(b))) + "}")
    return "<" + " | ".join(rendered) + ">"


def _score_report(rel, config):
    table = compute_scores(rel, config)
    order = social_ranking(table)
    winners = winner_set(table)
    return table, order, winners


def _render_rank_text(rel, table, order, winners, figure=None, show_relation=True):
    lines = []
    if show_relation:
        lines.append("majority relation:")
        for pair in _relation_lines(rel):
            lines.append("  " + pair)
    names = rel.alts.names
    width = max(len(n) for n in names) + 2
    header = " " * width + "".join(f"{n:>8}" for n in names) + "   total"
    lines.append("scores (rows scored, columns pivot):")
    lines.append(header)
    for x, name in enumerate(names):
        row = "".join(f"{str(table.per_pivot[z][x]):>8}" for z in range(rel.m))
        lines.append(f"{name:<{width}}" + row + f"{str(table.totals[x]):>8}")
    lines.append("ranking: " + _ranking_text(order))
    lines.append("winners: " + ", ".join(winners.labels()))
    if figure:
        lines.append("figure: " + figure)
    return "\n".join(lines)


def _json_table(table):
    names = table.alts.names
    return {
        "per_pivot": {
            names[z]: {names[x]: _rat(table.per_pivot[z][x]) for x in range(len(names))}
            for z in range(len(names))
        },
        "totals": {names[x]: _rat(t) for x, t in enumerate(table.totals)},
    }


def _cmd_rank(args, expect_matrix=False):
    config = _parse_alpha(args.alpha)
    if expect_matrix:
        rel = parse_matrix(_read(args.file))
        profile = None
    else:
        rel, profile = _relation_from_file(args.file)
    table, order, winners = _score_report(rel, config)
    figure = None
    if args.figures:
        from .plots import save_score_figure

        figure = save_score_figure(table, args.figures)
    if args.format == "json":
        doc = {
            "alternatives": list(rel.alts.names),
            "alpha": _rat(config.alpha),
            "majority": _relation_lines(rel),
            "scores": _json_table(table),
            "ranking": order.label_tiers(),
            "winners": winners.labels(),
        }
        if figure:
            doc["figure"] = figure
        print(json.dumps(doc, indent=2))
    else:
        print(
            _render_rank_text(
                rel, table, order, winners, figure, show_relation=profile is not None
            )
        )
    return 0


def _cmd_partitions(args):
    rel, _ = _relation_from_file(args.file)
    table = compute_scores(rel, ScoringConfig())
    names = rel.alts.names
    doc = []
    for z in range(rel.m):
        above = sorted(names[x] for x in range(rel.m) if x != z and rel.cells[x][z] == 1)
        below = sorted(names[x] for x in range(rel.m) if x != z and rel.cells[x][z] == -1)
        tied = sorted(names[x] for x in range(rel.m) if x != z and rel.cells[x][z] == 0)
        part = table.partitions[z]
        doc.append(
            {
                "pivot": names[z],
                "above": above,
                "below": below,
                "tied": tied,
                "divisible": part is not None,
                "kind": None if part is None else part.kind,
                "verdict": "indivisible" if part is None else _KIND_LABELS[part.kind],
                "partition": None
                if part is None
                else _blocks_text(rel, part.blocks),
            }
        )
    if args.format == "json":
        print(json.dumps({"alternatives": list(names), "pivots": doc}, indent=2))
        return 0
    for row in doc:
        print(f"pivot {row['pivot']}:")
        print("  above: {" + ",".join(row["above"]) + "}")
        print("  below: {" + ",".join(row["below"]) + "}")
        print("  tied:  {" + ",".join(row["tied"]) + "}")
        if row["divisible"]:
            print(f"  partition: {row['partition']}  ({row['verdict']})")
        else:
            print("  partition: none (indivisible)")
    return 0


def _cmd_compare(args):
    config = _parse_alpha(args.alpha)
    rel, _ = _relation_from_file(args.file)
    table, order, winners = _score_report(rel, config)
    cop = copeland(rel, config.alpha)
    sm = smith_set(rel)
    tc = top_cycle(rel)
    sw = schwartz_set(rel)
    cw = condorcet_winner(rel)
    cl = condorcet_loser(rel)
    names = rel.alts.names
    uc = uncovered_set(rel) if rel.is_tournament else None
    doc = {
        "alternatives": list(names),
        "alpha": _rat(config.alpha),
        "dsr": {
            "totals": {names[x]: _rat(t) for x, t in enumerate(table.totals)},
            "ranking": order.label_tiers(),
            "winners": winners.labels(),
        },
        "copeland": {
            "scores": {names[x]: _rat(s) for x, s in enumerate(cop.scores)},
            "winners": cop.labels(),
        },
        "uncovered": None if uc is None else uc.labels(),
        "smith": sm.labels(),
        "top_cycle": tc.labels(),
        "schwartz": sw.labels(),
        "condorcet_winner": None if cw is None else names[cw],
        "condorcet_loser": None if cl is None else names[cl],
        "containments": {
            "dsr_in_copeland": winners.members <= cop.winners,
            "dsr_in_uncovered": None if uc is None else winners.members <= uc.members,
            "dsr_in_smith": winners.members <= sm.members,
        },
    }
    if args.format == "json":
        print(json.dumps(doc, indent=2))
        return 0
    print("DSR totals:   " + ", ".join(f"{n}={_rat(t)}" for n, t in zip(names, table.totals)))
    print("DSR ranking:  " + _ranking_text(order))
    print("DSR winners:  " + ", ".join(doc["dsr"]["winners"]))
    print(
        "Copeland:     "
        + ", ".join(f"{n}={_rat(s)}" for n, s in zip(names, cop.scores))
        + "  winners: "
        + ", ".join(doc["copeland"]["winners"])
    )
    if uc is None:
        print("uncovered:    n/a (ties present)")
    else:
        print("uncovered:    " + ", ".join(doc["uncovered"]))
    print("smith:        " + ", ".join(doc["smith"]))
    print("top cycle:    " + ", ".join(doc["top_cycle"]))
    print("schwartz:     " + ", ".join(doc["schwartz"]))
    print("condorcet winner: " + (doc["condorcet_winner"] or "none"))
    print("condorcet loser:  " + (doc["condorcet_loser"] or "none"))
    for key, value in doc["containments"].items():
        label = key.replace("_", " ")
        print(f"{label}: " + ("n/a" if value is None else "yes" if value else "NO"))
    return 0


def _parse_m(text):
    if "-" in text:
        lo, hi = text.split("-", 1)
        return (int(lo), int(hi))
    return int(text)


def _cmd_verify(args):
    config = _parse_alpha(args.alpha)
    spec = EnumerationSpec(
        m=_parse_m(args.m),
        mode=args.mode,
        seed=args.seed,
        count=args.count,
    )
    report = check_theorem_suite(spec, config)
    doc = report.to_dict()
    if args.format == "json":
        print(json.dumps(doc, indent=2))
        return 0
    print(f"mode={doc['mode']} m={doc['m']} seed={doc['seed']} instances={doc['instances']}")
    for name, counts in doc["checks"].items():
        print(f"  {name}: {counts['passed']} passed, {counts['failed']} failed")
    for name, witness in doc["counterexamples"].items():
        print(f"counterexample for {name}:")
        for line in witness.splitlines():
            print("  " + line)
    for note in doc["notes"]:
        print("note: " + note)
    print(f"violations: {doc['violations']}")
    return 0


def build_parser():
    parser = argparse.ArgumentParser(
        prog="dsrvote",
        description="Exact-arithmetic voting engine with classical comparators.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def add_common(p, with_alpha=True, with_figures=False):
        if with_alpha:
            p.add_argument("--alpha", default="1/2", help="tie value as a rational P/Q")
        p.add_argument("--format", choices=("text", "json"), default="text")
        if with_figures:
            p.add_argument("--figures", metavar="DIR", help="also render figures into DIR")

    p = sub.add_parser("rank", help="score a ballot file")
    p.add_argument("file")
    add_common(p, with_figures=True)

    p = sub.add_parser("tournament", help="score a matrix file")
    p.add_argument("file")
    add_common(p, with_figures=True)

    p = sub.add_parser("partitions", help="per-pivot partition table")
    p.add_argument("file")
    add_common(p, with_alpha=False)

    p = sub.add_parser("compare", help="DSR versus classical solution concepts")
    p.add_argument("file")
    add_common(p)

    p = sub.add_parser("verify", help="run the property battery")
    p.add_argument("--m", required=True, help="roster size (or LO-HI range for random mode)")
    p.add_argument(
        "--mode", required=True, choices=("tournaments", "weak-orders", "random")
    )
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--count", type=int, default=1000)
    add_common(p)
    return parser


def run_cli(argv):
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return 0 if exc.code == 0 else 1
    try:
        if args.command == "rank":
            return _cmd_rank(args)
        if args.command == "tournament":
            return _cmd_rank(args, expect_matrix=True)
        if args.command == "partitions":
            return _cmd_partitions(args)
        if args.command == "compare":
            return _cmd_compare(args)
        if args.command == "verify":
            return _cmd_verify(args)
        raise AssertionError(f"unhandled command {args.command}")
    except (DsrError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    except Exception as exc:  # internal failure
        print(f"internal error: {exc!r}", file=sys.stderr)
        return 2


def main():
    sys.exit(run_cli(sys.argv[1:]))


if __name__ == "__main__":
    main()
