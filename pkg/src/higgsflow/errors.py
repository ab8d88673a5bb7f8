"""Exception hierarchy shared by all modules."""


class HiggsflowError(Exception):
    """Base class for all library errors."""


class CompositeP(HiggsflowError):
    """A value claimed to be prime failed the primality test."""


class UnsupportedRange(HiggsflowError):
    """Parameter outside the supported desk-scale range."""


class FieldMismatch(HiggsflowError):
    """Operands belong to different finite fields."""


class DivisionByZero(HiggsflowError):
    """Inversion of the zero element."""


class CurveMismatch(HiggsflowError):
    """Points on different curves combined."""


class SmallCharacteristic(HiggsflowError):
    """Curve operation requested in characteristic < 5."""


class AmbiguousOrder(HiggsflowError):
    """BSGS could not pin down the group order within budget."""


class RangeTooLarge(HiggsflowError):
    """Requested scan or enumeration range exceeds the cap."""


class UnsupportedBlockStep(HiggsflowError):
    """No flow step rule exists for this block kind."""


class UnsupportedLevel(HiggsflowError):
    """Modular polynomial level outside {2, 3}."""


class ValidationFailed(HiggsflowError):
    """Hardcoded modular polynomial data failed its self-check."""


class KernelSearchExceeded(HiggsflowError):
    """No rational isogeny kernel found in the searched field."""


class InvalidGenus(HiggsflowError):
    """Genus parameter below 2."""


class UsageError(HiggsflowError):
    """Invalid CLI invocation (exit code 2)."""
