"""Exception types raised across the package."""


class MatroidError(Exception):
    """Base class for every domain error raised by this package."""


class EmptyCircuit(MatroidError):
    """The empty set was offered as a circuit."""


class NotAntichain(MatroidError):
    """Two circuits are comparable under inclusion."""


class EliminationFailure(MatroidError):
    """A pair of circuits admits no elimination circuit."""


class UnknownElement(MatroidError):
    """An element id outside the relevant ground set was used."""


class GroundTooLarge(MatroidError):
    """A ground set exceeds the guard for exhaustive enumeration."""


class AxiomViolation(MatroidError):
    """A closure table fails the axioms required by the caller."""


class NonDisjoint(MatroidError):
    """Restriction and contraction sets overlap."""


class CommutationFailure(MatroidError):
    """Two composition orders disagree; signals an implementation bug."""


class NotAFlat(MatroidError):
    """A set offered as a lattice member is not a flat."""


class NotStrong(MatroidError):
    """A pointed map fails the strong-map conditions."""


class GroundMismatch(MatroidError):
    """A map's ground sets do not match the matroids in play."""


class NotAdmissible(MatroidError):
    """A strong map is not in the required admissible class."""


class WindowTooLarge(MatroidError):
    """A window size exceeds the guard for exhaustive enumeration."""


class IncompatibleCocone(MatroidError):
    """Cocone legs disagree on a shared window."""


class SideConditionViolated(MatroidError):
    """A deletion-contraction step was attempted at a loop or coloop."""


class LabelAbsent(MatroidError):
    """A rewrite targeted a label missing from the formal sum."""


class UnsupportedDescriptor(MatroidError):
    """The operation needs a circuit enumeration the descriptor cannot give."""


class ParseError(MatroidError):
    """A text input does not match its grammar."""
