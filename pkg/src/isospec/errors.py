"""Exception hierarchy shared by every module."""


class IsospecError(Exception):
    """Base class."""


class ArgumentError(IsospecError, ValueError):
    """Malformed or inconsistent input."""


class DomainError(IsospecError, ValueError):
    """Operation called outside its precondition."""


class SizeLimitError(IsospecError):
    """A configured enumeration cap would be exceeded."""


class UnsupportedFormError(IsospecError):
    """Result is not expressible in the exact value types we ship."""
