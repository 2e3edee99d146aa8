"""Exception types shared across the package."""


class CommitCtxError(Exception):
    """Base class for all package-specific errors."""


class ParseError(CommitCtxError):
    """Source text could not be parsed. Carries the offending offset."""

    def __init__(self, message: str, offset: int):
        super().__init__(f"{message} (offset {offset})")
        self.offset = offset


class EmptyRepresentation(CommitCtxError):
    """The pre/post context sets of a commit are identical."""


class ShapeError(CommitCtxError):
    """Tensor arguments have incompatible shapes."""


class AllMasked(CommitCtxError):
    """Every attention slot is padding; there is nothing to pool."""


class DegenerateLabels(CommitCtxError):
    """A training set contains only one class."""


class VocabMismatch(CommitCtxError):
    """Checkpoint vocabularies differ from the corpus index maps."""


class RepoUnavailable(CommitCtxError):
    """A version-control repository could not be read."""


class IssueNotFound(CommitCtxError):
    """The issue tracker has no issue under the requested key."""


class TrackerUnavailable(CommitCtxError):
    """The issue tracker kept failing after retries."""


class NonconformingPriority(CommitCtxError):
    """An issue uses a priority scheme outside the five-class convention."""


class InsufficientNegatives(CommitCtxError):
    """A repository has fewer candidate negatives than positives."""


class DataError(CommitCtxError):
    """Malformed corpus, vocabulary, or checkpoint input."""
