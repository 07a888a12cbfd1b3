class MixsatError(ValueError):
    """Base class for errors raised by mixsat."""


class BaseParseError(MixsatError):
    pass


class InvalidDigitError(MixsatError):
    pass


class BaseMismatchError(MixsatError):
    pass


class DomainError(MixsatError):
    """A position lies outside the position set the operation is defined on."""


class NoSuchMoveError(MixsatError):
    """No option with the requested Grundy value exists."""
