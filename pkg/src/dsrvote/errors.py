"""Exception types shared across the package."""


class DsrError(Exception):
    """Base class for all dsrvote errors."""


class DimensionError(DsrError):
    """Relation table is not square or has fewer than two alternatives."""


class InconsistentPair(DsrError):
    """Cell (i, j) is incompatible with cell (j, i)."""


class EmptySubset(DsrError):
    """A restriction or block argument was empty."""


class SingletonSubset(DsrError):
    """Restriction to a single alternative cannot form a relation."""


class UnknownAlternative(DsrError):
    """A label was used that is not part of the alternative roster."""


class EmptyBlock(DsrError):
    """A block parameter (beta/gamma/dominance) received an empty set."""


class TiesPresent(DsrError):
    """Operation is only defined for tournaments (tie-free relations)."""


class TooLarge(DsrError):
    """Instance exceeds the guard limit of an exhaustive enumeration."""


class ParseError(DsrError):
    """Malformed input file."""

    def __init__(self, message, line=None):
        self.line = line
        if line is not None:
            message = f"line {line}: {message}"
        super().__init__(message)


class MixedBallotStyles(ParseError):
    """Ranking and approval ballots mixed in one file."""


class CoverageError(ParseError):
    """A ballot omits or repeats an alternative."""
