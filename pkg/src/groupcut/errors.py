"""Exception types shared across the package."""


class GroupCutError(Exception):
    """Base class for errors raised by this package."""


class ConstructionError(GroupCutError, ValueError):
    """Invalid data passed to a function constructor."""


class ParameterError(GroupCutError, ValueError):
    """Bad parameters. Unable to construct the function."""


class UnsourcedEntryError(GroupCutError, LookupError):
    """The registry knows the entry but its data has not been sourced."""


class NoCandidateFError(GroupCutError, ValueError):
    """No breakpoint of the function takes the value 1."""


class NotSubadditiveError(GroupCutError, ValueError):
    """An operation requiring subadditivity met a negative slack."""


class UnsupportedCaseError(GroupCutError, ValueError):
    """Input falls outside the supported theory (e.g. two-sided
    discontinuity at the origin for covered-component propagation)."""


class InternalConsistencyError(GroupCutError, RuntimeError):
    """A verified-by-construction step failed; indicates a bug."""
