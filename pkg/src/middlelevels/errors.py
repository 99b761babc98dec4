"""Exception types shared across the package."""


class MiddleLevelsError(ValueError):
    pass


class InvalidWeight(MiddleLevelsError):
    """Bitstring is not in A_n or B_n."""


class EmptyTree(MiddleLevelsError):
    pass


class NotPullable(MiddleLevelsError):
    pass


class NotPushable(MiddleLevelsError):
    pass


class ForbiddenPair(MiddleLevelsError):
    """The pair (s_n, s_n') is excluded from the gluing pairs."""


class NotALeaf(MiddleLevelsError):
    pass


class BoundExceeded(MiddleLevelsError):
    pass


class NotPeriodic(MiddleLevelsError):
    """A flip sequence does not end in the necklace it started from."""


class WeightViolation(MiddleLevelsError):
    pass


class PrefixMismatch(MiddleLevelsError):
    pass


class PreconditionViolated(MiddleLevelsError):
    pass


class IsStar(MiddleLevelsError):
    """The star is the root of the spanning tree and owns no arc."""


class SmallN(MiddleLevelsError):
    pass


class OutOfRange(MiddleLevelsError):
    pass


class NotCoprime(MiddleLevelsError):
    pass


class BadStart(MiddleLevelsError):
    pass
