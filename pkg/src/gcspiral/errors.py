"""Exception types shared across the toolkit."""


class DomainError(ValueError):
    """Input outside the mathematical domain of an operation."""


class QuadratureError(RuntimeError):
    """Adaptive integration could not meet the requested tolerance."""


class SingularProfileError(ValueError):
    """Profile parameters make the requested quantity undefined everywhere."""


class SingularPointError(ValueError):
    """Requested quantity is undefined at this parameter value."""


class DegenerateDataError(ValueError):
    """Input data carries no usable curvature information."""


class MismatchedInputsError(ValueError):
    """Inputs that must describe the same curve disagree."""
