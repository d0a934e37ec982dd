"""Exception types raised across the package."""


class NotFiniteType(ValueError):
    """A connected piece of a Coxeter graph is not in the finite-type catalogue."""

    def __init__(self, component, reason):
        self.component = tuple(component)
        self.reason = reason
        verts = ",".join(str(v) for v in self.component)
        super().__init__(f"component {{{verts}}} is not of finite type: {reason}")


class RankTooLarge(ValueError):
    def __init__(self, rank, cap):
        self.rank = rank
        self.cap = cap
        super().__init__(f"rank {rank} exceeds the subset enumeration cap {cap}")


class ClosureExceededCap(RuntimeError):
    def __init__(self, cap):
        self.cap = cap
        super().__init__(f"reflection closure exceeded {cap} roots (infinite root system?)")


class NumericalAmbiguity(RuntimeError):
    pass


class NonUnitConstantTerm(ValueError):
    def __init__(self, constant):
        self.constant = constant
        super().__init__(f"constant term must be 1 to invert over the integers, got {constant}")


class BudgetExceeded(RuntimeError):
    def __init__(self, estimate, budget):
        self.estimate = estimate
        self.budget = budget
        super().__init__(f"estimated work {estimate} exceeds budget {budget}")
