class CompetitionKitError(Exception):
    """
    Base class for every error raised by competition-kit.
    """


class GraphError(CompetitionKitError, ValueError):
    """
    Raised when a graph, digraph or vertex subset is malformed (loops,
    out-of-range labels, ...).
    """


class GraphFormatError(GraphError):
    """
    Raised when an edge-list or JSON document cannot be parsed into a graph.
    """


class UnknownFamilyError(GraphError):
    """
    Raised when a generator family is unknown or gets an invalid parameter.
    """


class CoverError(CompetitionKitError, ValueError):
    """
    Raised when a cover is requested for an edge set that is not part of the graph.
    """


class CertificateError(CompetitionKitError, ValueError):
    """
    Raised when a construction certificate violates a structural invariant.

    Attributes:
        position (int, optional): The ordering position the violation was found at.
    """

    def __init__(self, message, position=None):
        super().__init__(message)
        self.position = position


class BudgetExceeded(CompetitionKitError):
    """
    Raised by a search when its node or wall-clock budget runs out.
    """
