"""Exception types shared across the pipeline, editor, and service layers.

Every error carries a machine-readable ``code`` so the HTTP layer can map
failures onto structured payloads without string matching.
"""


class Story2UmlError(Exception):
    code = "error"


class EmptyInput(Story2UmlError):
    """Raised when normalization leaves no text to analyze."""

    code = "empty_input"


class NoActorsFound(Story2UmlError):
    """The story yielded no actor at all (e.g. only pronoun subjects)."""

    code = "no_actors_found"


class UnassignedUseCase(Story2UmlError):
    """A verb/object candidate appeared before any actor was active."""

    code = "unassigned_use_case"

    def __init__(self, message, candidate=None, location=None):
        super().__init__(message)
        self.candidate = candidate
        self.location = location


class DegenerateDataset(Story2UmlError):
    """Training data is empty or contains only one class."""

    code = "degenerate_dataset"


class UndefinedMetric(Story2UmlError):
    """A confusion-matrix metric has a zero denominator."""

    code = "undefined_metric"

    def __init__(self, metric):
        super().__init__(f"metric '{metric}' is undefined for this confusion matrix")
        self.metric = metric


class UnknownActor(Story2UmlError):
    code = "unknown_actor"

    def __init__(self, key):
        super().__init__(f"no actor with key '{key}'")
        self.key = key


class UnknownUseCase(Story2UmlError):
    code = "unknown_use_case"

    def __init__(self, actor_key, phrase):
        super().__init__(f"actor '{actor_key}' has no use case '{phrase}'")
        self.actor_key = actor_key
        self.phrase = phrase


class DuplicateActor(Story2UmlError):
    code = "duplicate_actor"

    def __init__(self, key):
        super().__init__(f"actor '{key}' already exists")
        self.key = key


class DuplicateUseCase(Story2UmlError):
    code = "duplicate_use_case"

    def __init__(self, actor_key, phrase):
        super().__init__(f"actor '{actor_key}' already has use case '{phrase}'")
        self.actor_key = actor_key
        self.phrase = phrase


class NothingToUndo(Story2UmlError):
    code = "nothing_to_undo"


class InvalidCommand(Story2UmlError):
    """An edit command violates its structural requirements."""

    code = "invalid_command"


class VersionMismatch(Story2UmlError):
    code = "version_mismatch"

    def __init__(self, found, expected):
        super().__init__(f"file has schema version {found}, expected {expected}")
        self.found = found
        self.expected = expected


class MalformedFile(Story2UmlError):
    code = "malformed_file"
