"""Exception types shared across the toolkit."""


class RhetkitError(Exception):
    """Base class for all toolkit errors."""


class LexiconError(RhetkitError):
    """A lexicon file (tags or glosses) is malformed."""


class StoreError(RhetkitError):
    """A profile store file violates the schema or its consistency rules."""


class DegenerateProfileError(RhetkitError):
    """An operation received a profile with no detected strategies."""


class InsufficientCandidatesError(RhetkitError):
    """A ranking or normalization was asked for with too few candidates."""


class GenerationError(RhetkitError):
    """Text generation cannot proceed (missing gloss, broken chain)."""


class EmptyDocumentError(RhetkitError):
    """A document-level operation received text with no usable content."""
