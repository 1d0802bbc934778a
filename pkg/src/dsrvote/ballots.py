"""Parsing and rendering of ballot files and matrix files.

Ballot files are line oriented: a header line `alternatives: a,b,c`,
then one ballot per line, either `COUNT: g1 > g2 > ...` with `=` for
tied groups, or `COUNT: approve {x,y}`. Blank lines and `#` comments
are ignored. A file mixes at most one ballot style.

Matrix files carry `m` on the first line followed by m rows of m
entries from {1, -1, 0} (diagonal entries are ignored).
"""

from __future__ import annotations

import re

from .errors import (
    CoverageError,
    MixedBallotStyles,
    ParseError,
    UnknownAlternative,
)
from .model import (
    AlternativeSet,
    ApprovalProfile,
    Profile,
    WeakOrder,
    validate_relation,
)

_APPROVE_RE = re.compile(r"^approve\s*\{(.*)\}$")


def _meaningful_lines(text):
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if line:
            yield lineno, line


def _parse_count(head, lineno):
    try:
        count = int(head)
    except ValueError:
        raise ParseError(f"ballot count {head!r} is not an integer", lineno) from None
    if count < 1:
        raise ParseError("ballot count must be positive", lineno)
    return count


def _parse_ranking(body, alts, lineno):
    tiers = []
    seen = []
    for group in body.split(">"):
        labels = [x.strip() for x in group.split("=")]
        if any(not x for x in labels):
            raise ParseError("empty alternative name in ballot", lineno)
        tiers.append(labels)
        seen.extend(labels)
    for label in seen:
        if label not in alts.names:
            raise UnknownAlternative(f"line {lineno}: unknown alternative {label!r}")
    if len(seen) != len(set(seen)):
        raise CoverageError("ballot repeats an alternative", lineno)
    if set(seen) != set(alts.names):
        missing = sorted(set(alts.names) - set(seen))
        raise CoverageError(f"ballot omits {', '.join(missing)}", lineno)
    return WeakOrder.from_labels(alts, tiers)


def _parse_approval(body, alts, lineno):
    inner = _APPROVE_RE.match(body).group(1).strip()
    labels = [x.strip() for x in inner.split(",")] if inner else []
    if any(not x for x in labels):
        raise ParseError("empty alternative name in approval set", lineno)
    for label in labels:
        if label not in alts.names:
            raise UnknownAlternative(f"line {lineno}: unknown alternative {label!r}")
    if len(labels) != len(set(labels)):
        raise CoverageError("ballot repeats an alternative", lineno)
    return alts.indices(labels) if labels else frozenset()


def parse_ballots(text):
    """Parse ballot-file text into a Profile or an ApprovalProfile."""
    lines = list(_meaningful_lines(text))
    if not lines:
        raise ParseError("empty ballot file")
    lineno, header = lines[0]
    if not header.startswith("alternatives:"):
        raise ParseError("first line must declare `alternatives: ...`", lineno)
    names = [x.strip() for x in header.split(":", 1)[1].split(",")]
    if any(not x for x in names):
        raise ParseError("empty alternative name in header", lineno)
    if len(names) != len(set(names)):
        raise ParseError("duplicate alternative in header", lineno)
    if len(names) < 2:
        raise ParseError("need at least 2 alternatives", lineno)
    alts = AlternativeSet(tuple(names))
    if len(lines) == 1:
        raise ParseError("ballot file has no ballots")
    rankings = []
    approvals = []
    for lineno, line in lines[1:]:
        if ":" not in line:
            raise ParseError("ballot line needs the form `COUNT: ...`", lineno)
        head, body = (part.strip() for part in line.split(":", 1))
        count = _parse_count(head, lineno)
        if _APPROVE_RE.match(body):
            if rankings:
                raise MixedBallotStyles("approval ballot after ranking ballots", lineno)
            approvals.append((_parse_approval(body, alts, lineno), count))
        else:
            if approvals:
                raise MixedBallotStyles("ranking ballot after approval ballots", lineno)
            rankings.append((_parse_ranking(body, alts, lineno), count))
    if approvals:
        return ApprovalProfile(alts, tuple(approvals))
    return Profile(alts, tuple(rankings))


def render_profile(profile):
    """Render a profile back to ballot-file text (round-trip safe)."""
    lines = ["alternatives: " + ",".join(profile.alts.names)]
    if isinstance(profile, ApprovalProfile):
        for approved, mult in profile.ballots:
            inner = ",".join(sorted(profile.alts.labels(approved)))
            lines.append(f"{mult}: approve {{{inner}}}")
    else:
        for order, mult in profile.ballots:
            groups = ["=".join(tier) for tier in order.label_tiers()]
            lines.append(f"{mult}: " + " > ".join(groups))
    return "\n".join(lines) + "\n"


def parse_matrix(text, names=None):
    """Parse matrix-file text into a PreferenceRelation."""
    lines = list(_meaningful_lines(text))
    if not lines:
        raise ParseError("empty matrix file")
    lineno, head = lines[0]
    try:
        m = int(head)
    except ValueError:
        raise ParseError("first line must hold the matrix size", lineno) from None
    if m < 2:
        raise ParseError("need at least 2 alternatives", lineno)
    if len(lines) - 1 != m:
        raise ParseError(f"expected {m} matrix rows, found {len(lines) - 1}")
    raw = []
    for lineno, line in lines[1:]:
        parts = line.split()
        if len(parts) != m:
            raise ParseError(f"expected {m} entries", lineno)
        row = []
        for p in parts:
            try:
                row.append(int(p))
            except ValueError:
                raise ParseError(f"bad matrix entry {p!r}", lineno) from None
        raw.append(row)
    return validate_relation(raw, names=names)


def render_matrix(rel):
    """Render a relation as matrix-file text."""
    lines = [str(rel.m)]
    for i in range(rel.m):
        lines.append(
            " ".join("0" if i == j else str(rel.cells[i][j]) for j in range(rel.m))
        )
    return "\n".join(lines) + "\n"


def looks_like_ballots(text):
    """File sniffing: ballot files open with an `alternatives:` header."""
    for _, line in _meaningful_lines(text):
        return line.startswith("alternatives:")
    return False
