"""Exception hierarchy.

Every failure that names a concrete law instance carries it in ``witness``
so callers (and the CLI reports) can point at the offending object,
morphism, pair or triple.
"""


class WeakLawsError(Exception):
    def __init__(self, message="", witness=None):
        super().__init__(message)
        self.witness = witness


class ParseError(WeakLawsError):
    pass


class SearchSpaceExceeded(WeakLawsError):
    pass


class IllTyped(WeakLawsError):
    pass


# category laws
class NonAssociative(WeakLawsError):
    pass


class MissingIdentity(WeakLawsError):
    pass


class IllTypedComposite(WeakLawsError):
    pass


# functors and transformations
class BreaksComposition(WeakLawsError):
    pass


class BreaksIdentity(WeakLawsError):
    pass


class NaturalityFails(WeakLawsError):
    pass


# monads and adjunctions
class AssocFails(WeakLawsError):
    pass


class UnitFails(WeakLawsError):
    pass


class TriangleFails(WeakLawsError):
    pass


class ComponentDoesNotSplit(WeakLawsError):
    pass


# 2-categorical layer
class NotComposable(WeakLawsError):
    pass


class InconsistencyDetected(WeakLawsError):
    """Two verdicts that are provably equal disagree: an implementation bug."""


class LiftFails(WeakLawsError):
    pass


class NoSectionExists(WeakLawsError):
    pass


class ReconstructionInvalid(WeakLawsError):
    pass


class ShapeMismatch(WeakLawsError):
    pass
