"""Exception hierarchy shared by all ambicat modules."""


class AmbicatError(Exception):
    """Base class for every error raised by this package."""


class CompositionError(AmbicatError):
    """Objects or dimensions do not line up for composition."""


class ModelError(AmbicatError):
    """Morphisms from different models (tags or bases) were combined."""


class DomainError(AmbicatError):
    """A finite function or structure map was applied outside its domain."""


class StructureError(AmbicatError):
    """A monad element is malformed (wrong nesting, wrong inner tag)."""


class WeightError(AmbicatError):
    """Formal-sum weights violate the model's total-weight constraint."""


class EmptinessError(AmbicatError):
    """A non-empty collection was required (e.g. non-empty powerset payload)."""


class ShapeError(AmbicatError):
    """An operation required an endomorphism or a square matrix."""


class BoundError(AmbicatError):
    """A brute-force search was requested beyond its supported size."""


class AlgebraError(AmbicatError):
    """A homset-algebra description is missing an operation the check needs."""


class AssignmentError(AmbicatError):
    """A basic pregroup type has no semantic object assigned."""


class LexiconError(AmbicatError):
    """A lexicon file is malformed or a word is missing."""


class ReductionError(AmbicatError):
    """No pregroup reduction to the target type exists, or one failed to replay."""
