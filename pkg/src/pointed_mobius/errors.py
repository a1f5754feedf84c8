"""Exception hierarchy shared by all modules."""


class CombinatoricsError(Exception):
    """Base class for every error raised by this package."""


class ParseError(CombinatoricsError, ValueError):
    pass


class BoundExceeded(CombinatoricsError):
    """A size parameter is above the configured enumeration bound."""


# poset engine
class CycleDetected(CombinatoricsError, ValueError):
    pass


class UnknownElement(CombinatoricsError, KeyError):
    pass


class NotComparable(CombinatoricsError, ValueError):
    pass


class NotGraded(CombinatoricsError):
    pass


class ArithmeticOverflow(CombinatoricsError, OverflowError):
    """A Möbius sum could leave the signed 64-bit range."""


class RedundantCoverWarning(UserWarning):
    """Transitive edges were supplied as covers and have been pruned."""


# permutations and compositions
class MalformedComposition(CombinatoricsError, ValueError):
    pass


class SumMismatch(CombinatoricsError, ValueError):
    pass


# pointed structures
class MismatchedN(CombinatoricsError, ValueError):
    pass


class EmptyFilter(CombinatoricsError, ValueError):
    pass


# knapsack
class ConditionViolated(CombinatoricsError, ValueError):
    pass


class ConstructionMismatch(CombinatoricsError):
    """A construction that should yield a knapsack partition did not.

    The offending certificate is kept on ``certificate``.
    """

    def __init__(self, message, certificate=None):
        super().__init__(message)
        self.certificate = certificate


class NotPrime(CombinatoricsError, ValueError):
    pass


class NotKnapsackInput(CombinatoricsError, ValueError):
    pass


class SumTooLarge(CombinatoricsError, ValueError):
    pass


# permutahedron
class SizeMismatch(CombinatoricsError, ValueError):
    pass


class NotInIdeal(CombinatoricsError, ValueError):
    pass


# theorems
class DivisibilityMismatch(CombinatoricsError, ValueError):
    pass


class OutOfRange(CombinatoricsError, ValueError):
    pass
