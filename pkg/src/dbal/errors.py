"""Exception types raised by :mod:`dbal`.

Every error that stems from a bad mathematical input (a disconnected graph,
an out-of-range level, invalid family parameters, ...) derives from
:class:`DbalError`.  Malformed text input (edge-list files, generator strings)
raises :class:`FormatError` instead, which the CLI reports as a usage error.
"""


class DbalError(ValueError):
    """Base class for domain errors."""


class FormatError(ValueError):
    """Unparseable edge-list file, generator string or JSON document."""


class SelfLoop(DbalError):
    pass


class VertexOutOfRange(DbalError, IndexError):
    pass


class Disconnected(DbalError):
    pass


class BadParams(DbalError):
    pass


class BadRange(DbalError):
    pass


class SameVertex(DbalError):
    pass


class LevelOutOfRange(DbalError):
    pass


class WrongDiameter(DbalError):
    pass


class NotBipartite(DbalError):
    pass


class IdentityInSet(DbalError):
    pass


class NotInverseClosed(DbalError):
    pass


class NotGenerating(DbalError):
    pass


class ClosureTooLarge(DbalError):
    pass


class EmptyList(DbalError):
    pass


class InvalidGroupTable(DbalError):
    pass
