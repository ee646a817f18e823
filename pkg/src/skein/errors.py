"""Exception types shared across the package."""


class SkeinError(Exception):
    pass


class NotDivisible(SkeinError, ArithmeticError):
    pass


class MissingVariable(SkeinError, KeyError):
    pass


class ArityMismatch(SkeinError, ValueError):
    pass


class SlotMissing(SkeinError, KeyError):
    pass


class MismatchedDenominators(SkeinError, ValueError):
    pass


class NotCoprime(SkeinError, ValueError):
    pass


class NotAFactorization(SkeinError, ValueError):
    pass


class UnreducedGenus(SkeinError, ValueError):
    pass


class UnsupportedRecollementOverlap(SkeinError, NotImplementedError):
    pass
