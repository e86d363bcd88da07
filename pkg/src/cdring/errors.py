"""Exception types. Every error carries a stable machine-readable ``code``."""


class CdrError(Exception):
    code = "CdrError"


class InvalidRing(CdrError, ValueError):
    code = "InvalidRing"


class RingMismatch(CdrError, ValueError):
    code = "RingMismatch"


class InvalidIdeal(CdrError, ValueError):
    code = "InvalidIdeal"


class ZeroIdeal(CdrError, ValueError):
    code = "ZeroIdeal"


class ParseError(CdrError, ValueError):
    code = "ParseError"

    def __init__(self, message, text="", position=None):
        self.text = text
        self.position = position
        if position is not None:
            message = f"{message} at position {position}"
        super().__init__(message)


class NotPrime(CdrError, ValueError):
    code = "NotPrime"


class ConductorPrime(CdrError, ValueError):
    code = "ConductorPrime"


class NotDivisible(CdrError):
    code = "NotDivisible"

    def __init__(self, message, dividend=None, divisor=None, chain=None):
        super().__init__(message)
        self.dividend = dividend
        self.divisor = divisor
        self.chain = chain


class NoContainingPrime(CdrError):
    code = "NoContainingPrime"

    def __init__(self, message, chain=None):
        super().__init__(message)
        self.chain = chain


class ChainExceeded(CdrError):
    code = "ChainExceeded"

    def __init__(self, message, chain=None):
        super().__init__(message)
        self.chain = chain


class InternalArithmeticBug(CdrError, AssertionError):
    code = "InternalArithmeticBug"
