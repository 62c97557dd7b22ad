"""Exception types raised across the package."""


class BridgegapError(Exception):
    """Base class for package-specific errors."""


class IndexOutOfRangeError(BridgegapError):
    """A node index falls outside [0, n1+n2)."""


class SelfLoopError(BridgegapError):
    """An edge joins a node to itself."""


class DuplicateEdgeError(BridgegapError):
    """The same undirected edge appears more than once."""


class NotAnEdgeError(BridgegapError):
    """The queried pair is not an edge of the graph."""


class EmptySubsetError(BridgegapError):
    """A connectivity query was restricted to an empty node set."""


class EdgeListFormatError(BridgegapError):
    """An edge-list file does not follow the expected format."""


class NoForwardNodesError(BridgegapError):
    """Social distance is undefined on a graph with no forward-community nodes."""


class BudgetExceededError(BridgegapError):
    """Path enumeration exhausted its expansion budget."""


class CountExceedsCapacityError(BridgegapError):
    """A requested bridge count exceeds the n1*n2 cross pairs available."""


class InvalidRegimeError(BridgegapError):
    """Closed-form prediction requested outside its domain (n1*p1 <= 1)."""


class ResampleExhaustedError(BridgegapError):
    """Connectivity resampling failed to produce a connected graph."""


class SurveyFormatError(BridgegapError):
    """Base class for survey-input problems."""


class MissingColumnError(SurveyFormatError):
    """The survey CSV header lacks a required column."""


class BadRowArityError(SurveyFormatError):
    """A survey row has the wrong number of fields."""


class EmptyLabelError(SurveyFormatError):
    """A survey row contains an empty group label."""


class EmptyInputError(SurveyFormatError):
    """A computation received zero survey records."""
