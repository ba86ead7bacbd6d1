"""Exception types shared across the package."""


class HyperAmalgamError(Exception):
    """Base class for all package errors."""


class DomainError(HyperAmalgamError, ValueError):
    """An argument lies outside the domain of an operation."""


class NonConvergence(HyperAmalgamError, ArithmeticError):
    """A series or adaptive rule did not reach its tolerance."""


class PositivityViolation(HyperAmalgamError, ValueError):
    """A function required to be of positive type is not."""


class DivergenceError(HyperAmalgamError, ArithmeticError):
    """A sum or norm is infinite (e.g. a nonzero constant below the identity
    neighbourhood of the non-compact hypergroup)."""


class UnknownSuite(HyperAmalgamError, KeyError):
    pass


class ConfigError(HyperAmalgamError, ValueError):
    pass
