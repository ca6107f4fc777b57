"""Exception hierarchy shared by every bbwdim module."""


class BBWError(ValueError):
    """Base class for domain errors (bad weights, bad ranges, budgets)."""


class NotNonincreasing(BBWError):
    def __init__(self, position):
        self.position = position
        super().__init__(f"entries increase at position {position}")


class NotDominant(BBWError):
    def __init__(self, position):
        self.position = position
        super().__init__(f"weight is not dominant: increases at position {position}")


class MTooSmall(BBWError):
    def __init__(self, m, k):
        self.m, self.k = m, k
        super().__init__(f"m={m} is smaller than k={k}")


class NegativeLowestEntry(BBWError):
    def __init__(self, value):
        self.value = value
        super().__init__(
            f"lowest entry {value} is negative; use the Bott computation "
            "(grassmannian_cohomology) for such weights"
        )


class NotNegative(BBWError):
    def __init__(self, value):
        self.value = value
        super().__init__(f"lowest entry {value} is not negative; H^0 is nonzero for every m")


class BadRange(BBWError):
    pass


class NegativeTwistUnsupported(BBWError):
    def __init__(self, l):
        self.l = l
        super().__init__(f"negative determinant twist l={l} is not supported for tensor powers")


class TooLarge(BBWError):
    def __init__(self, what, budget):
        self.budget = budget
        super().__init__(f"{what} exceeds the enumeration budget of {budget}")
