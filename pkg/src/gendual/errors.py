"""Exception types shared across the package."""


class GendualError(Exception):
    """Base class for errors raised by this package."""


class DomainMismatchError(GendualError, ValueError):
    """Two objects were combined over incompatible index sets."""


class UnknownLabelError(GendualError, LookupError):
    """A label is not a member of the finite set it was looked up in."""


class MissingTableError(GendualError, ValueError):
    """A problem lacks the table (Rockafellian or Lagrangian) an operation needs."""


class ProblemFormatError(GendualError, ValueError):
    """A problem file or inline value failed to parse or validate."""
