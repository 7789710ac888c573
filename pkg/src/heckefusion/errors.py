class PoleError(ArithmeticError):
    """A rational function was evaluated where its reduced denominator vanishes."""


class SingularError(ArithmeticError):
    """An algebra element has no inverse."""


class ParseError(ValueError):
    """Malformed scalar, tableau, partition or element text."""
