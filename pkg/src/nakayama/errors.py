"""Exception types raised by the package.

Every error derives from :class:`NakayamaError` (itself a ``ValueError``), and
is grouped by the stage that rejects the input so the command line can map
groups onto exit codes.
"""


class NakayamaError(ValueError):
    pass


# -- algebra construction -------------------------------------------------

class AlgebraError(NakayamaError):
    pass


class RelationOutOfRange(AlgebraError):
    pass


class LengthBelowTwo(AlgebraError):
    pass


class NestedOrDuplicateRelation(AlgebraError):
    pass


class InvalidKupischSeries(AlgebraError):
    pass


class PowerBelowTwo(AlgebraError):
    pass


class PowerBelowThree(AlgebraError):
    pass


class MalformedSpec(AlgebraError):
    pass


# -- moves ----------------------------------------------------------------

class MoveError(NakayamaError):
    """A move was requested whose precondition does not hold."""


class NoRelationEndingAt(MoveError):
    pass


class NoRelationStartingAt(MoveError):
    pass


class MissingNeighborRelation(MoveError):
    pass


class BlockedByRelation(MoveError):
    pass


class IllegalExtensionDescriptor(MoveError):
    pass


class VertexOutOfRange(MoveError):
    pass


class ExtensionFallsOffQuiver(MoveError):
    pass


class ArrowVanishes(MoveError):
    """Removing a vertex would splice two arrows whose composite is zero."""


# -- complexes ------------------------------------------------------------

class ComplexError(NakayamaError):
    pass


class NotAComplex(ComplexError):
    pass


class NotAChainMap(ComplexError):
    pass


class ZeroComplex(ComplexError):
    pass


class InvalidStrand(ComplexError):
    pass


class AuditFailure(ComplexError):
    """An internal consistency audit (homology or K-theory) did not hold."""


# -- obstructions ---------------------------------------------------------

class OutOfTable(NakayamaError):
    pass


# -- files ----------------------------------------------------------------

class IoFailure(NakayamaError):
    """A survey file could not be read, parsed or written."""
