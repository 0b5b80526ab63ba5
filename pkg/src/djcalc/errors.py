"""Exception types shared across the calculator."""


class ContractViolation(ValueError):
    """A caller broke a stated precondition (the message names the failed equality)."""


class HypothesisViolation(ValueError):
    """Parameters fall outside the hypotheses of the dimension theorem (rho < 0)."""


class IntegralityError(ArithmeticError):
    """The symmetry factor failed to divide an ordered count exactly.

    This would witness a genuine integrality violation of the count formula;
    it is surfaced instead of being truncated away.
    """
