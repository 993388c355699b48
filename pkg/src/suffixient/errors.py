"""Exception hierarchy shared by the library and the command-line front end."""


class SuffixientError(Exception):
    """Base class for every error raised by this package."""


class EmptyText(SuffixientError, ValueError):
    pass


class SentinelCollision(SuffixientError, ValueError):
    pass


class IndexOutOfRange(SuffixientError, IndexError):
    pass


class NotARunBreak(SuffixientError, ValueError):
    pass


class PositionOutOfRange(SuffixientError, ValueError):
    pass


class CapExceeded(SuffixientError, ValueError):
    pass


class ParseError(SuffixientError, ValueError):
    pass


class BadParameter(SuffixientError, ValueError):
    pass
