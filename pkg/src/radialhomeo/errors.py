"""Exception hierarchy shared by every module of the package."""


class RadialHomeoError(Exception):
    """Base class for all errors raised by :mod:`radialhomeo`."""


class InvalidInputError(RadialHomeoError, ValueError):
    """Malformed argument: wrong dimension, non-finite coordinate, empty sample."""


class PreconditionError(RadialHomeoError, ValueError):
    """An argument lies outside the domain on which an operation is defined."""


class CaseMismatchError(RadialHomeoError, ValueError):
    """The body does not fall under the case required by the operation."""


class InconsistentFrameError(RadialHomeoError, ValueError):
    """Direction and functional do not form a valid frame."""


class InternalConsistencyError(RadialHomeoError, RuntimeError):
    """A computed decomposition failed its reconstruction check."""


class RootBracketError(RadialHomeoError, RuntimeError):
    """No sign change was found while bracketing a monotone root."""
