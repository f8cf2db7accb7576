"""Exception hierarchy shared by every starpack module."""


class StarpackError(Exception):
    """Base class for domain errors (CLI exit status 1)."""


# graph construction / embedding

class GraphError(StarpackError, ValueError):
    pass


class NonCubic(GraphError):
    pass


class AsymmetricAdjacency(GraphError):
    pass


class Disconnected(GraphError):
    pass


class BadFaceSize(GraphError):
    pass


class WrongPentagonCount(GraphError):
    pass


class NotThreeConnected(GraphError):
    pass


class EmbeddingInconsistent(GraphError):
    pass


class NotACycle(GraphError):
    pass


class NotInduced(GraphError):
    pass


class FacialCycle(GraphError):
    pass


class NotRegular(GraphError):
    pass


# serialization

class FormatError(StarpackError, ValueError):
    pass


class BadHeader(FormatError):
    pass


class TruncatedGraph(FormatError):
    pass


class VertexOutOfRange(FormatError):
    pass


class TooLarge(FormatError):
    pass


class UnwindableSpiral(FormatError):
    pass


# packings and structure

class TooLargeForOracle(StarpackError):
    pass


class NotACenter(StarpackError, ValueError):
    pass


class NonCycleComponent(StarpackError):
    pass


class UnclassifiableCenter(StarpackError):
    pass


class FacialInput(StarpackError, ValueError):
    pass


class TheoremViolation(StarpackError, AssertionError):
    """A proven structural property failed on a concrete instance.

    This always means a bug (or a corrupt packing), never a property of
    the input graph, so it is deliberately loud.
    """

    def __init__(self, theorem: str, detail: str = ""):
        self.theorem = theorem
        self.detail = detail
        super().__init__(f"{theorem}: {detail}" if detail else theorem)


class InvalidPacking(StarpackError, ValueError):
    pass
