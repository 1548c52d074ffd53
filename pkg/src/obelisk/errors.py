"""Exception hierarchy shared by every obelisk module."""


class ObeliskError(Exception):
    """Base class for all errors raised by obelisk."""


class GraphSyntaxError(ObeliskError, ValueError):
    """A graph or embedding file contains a malformed line."""

    def __init__(self, message, line_no=None):
        if line_no is not None:
            message = f"line {line_no}: {message}"
        super().__init__(message)
        self.line_no = line_no


class NotSimple(ObeliskError, ValueError):
    """Loop, duplicate arc, or anti-parallel pair."""


class UnknownVertex(ObeliskError, KeyError):
    pass


class UnknownArc(ObeliskError, KeyError):
    pass


class SizeGuard(ObeliskError):
    """Input exceeds the exact-search size limit."""


class Disconnected(ObeliskError, ValueError):
    pass


class InvalidEmbedding(ObeliskError, ValueError):
    pass


class NotACycle(ObeliskError, ValueError):
    pass


class NotATree(ObeliskError, ValueError):
    pass


class NotASink(ObeliskError, ValueError):
    pass


class BadSpec(ObeliskError, ValueError):
    pass


class WrongShape(ObeliskError, ValueError):
    pass


class NotUnidicyclic(ObeliskError, ValueError):
    """The graph is not strictly uni-dicyclic."""


class NoCycle(NotUnidicyclic):
    pass


class MultipleCycles(NotUnidicyclic):
    pass


class CycleNotDirected(NotUnidicyclic):
    pass
