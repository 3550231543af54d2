"""Exception types shared across the package."""


class HomhomError(Exception):
    """Base class for every error raised by homhom."""


class GraphValueError(HomhomError, ValueError):
    pass


class LoopArc(GraphValueError):
    pass


class SymmetricPair(GraphValueError):
    pass


class IndexOutOfRange(GraphValueError):
    pass


class ZeroMultiplicity(GraphValueError):
    pass


class EmptyList(GraphValueError):
    pass


class FormatError(GraphValueError):
    """Malformed ``.ogr`` text or word literal."""


class SizeCapExceeded(HomhomError):
    def __init__(self, what, size, cap):
        super().__init__(f"{what}: size {size} exceeds cap {cap}")
        self.what = what
        self.size = size
        self.cap = cap


class NotEquivalence(HomhomError):
    """The reflexive non-arc relation is not transitive.

    ``triple`` is ``(x, y, z)`` with ``x`` and ``y`` non-adjacent, ``y`` and
    ``z`` non-adjacent, but ``x`` and ``z`` adjacent.
    """

    def __init__(self, triple):
        super().__init__(f"non-arc relation not transitive at {triple}")
        self.triple = triple


class NotReducible(HomhomError):
    """The graph is not a blow-up of a tournament.

    ``certificate`` is either a :class:`NotEquivalence` triple (tagged
    ``"nonarc"``) or a pair of classes with arcs in both directions (tagged
    ``"mixed"``).
    """

    def __init__(self, kind, certificate):
        super().__init__(f"not reducible ({kind}): {certificate}")
        self.kind = kind
        self.certificate = certificate


class InvalidPartialHom(HomhomError, ValueError):
    pass


class NoWitness(HomhomError):
    pass


class NotATournament(HomhomError, ValueError):
    pass


class NotLocalOrder(HomhomError):
    pass


class NotEncodable(HomhomError):
    def __init__(self, reason):
        super().__init__(reason)
        self.reason = reason


class DegeneratePlacement(HomhomError, ValueError):
    pass
