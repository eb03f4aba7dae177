"""Exception types shared across the engine, store, and service layers."""


class SightlineError(Exception):
    """Base class for all sightline errors."""


class MalformedTimestamp(SightlineError):
    """A caption timestamp could not be parsed, or a cue ends before it starts."""

    def __init__(self, message: str, line: int | None = None, column: int | None = None):
        self.line = line
        self.column = column
        loc = ""
        if line is not None:
            loc = f" (line {line}" + (f", column {column}" if column is not None else "") + ")"
        super().__init__(message + loc)


class NonPositiveDuration(SightlineError):
    """Video duration must be a positive number of milliseconds."""


class OutOfRangeTime(SightlineError):
    """A cue, shot, or entity time lies outside [0, duration]."""


class HintOnUnlabeledSegment(SightlineError):
    """Describing hints exist only for orange/yellow segments."""


class VideoNotAnalyzed(SightlineError):
    """The operation needs a completed timeline analysis for the video."""


class UnknownVideo(SightlineError):
    """No such video in the store."""


class DuplicateComment(SightlineError):
    """A comment with this id was already submitted."""


class SimilarityUnavailable(SightlineError):
    """The external similarity provider failed and lexical fallback is disabled."""
