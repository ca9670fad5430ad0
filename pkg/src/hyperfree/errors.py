"""
Exception hierarchy shared by every hyperfree module
"""

from typing import Optional


class HyperfreeError(Exception):
    """Base class for all hyperfree errors"""

    pass


class DimensionError(HyperfreeError, ValueError):
    """Shape or arity mismatch between matrices, polynomials or vector fields"""

    pass


class DomainError(HyperfreeError, ValueError):
    """An operation was called outside of its documented domain"""

    pass


class ArrangementParseError(DomainError):
    """Syntax or semantic error in an arrangement or vector-field text"""

    def __init__(self, message: str, line: Optional[int] = None):
        self.line = line
        if line is not None:
            message = f"line {line}: {message}"
        super().__init__(message)


class ResourceBudgetError(HyperfreeError, RuntimeError):
    """A configurable work budget would be exceeded"""

    def __init__(self, budget: str, limit: int, required: int, detail: str = ""):
        self.budget = budget
        self.limit = limit
        self.required = required
        message = f"budget '{budget}' exceeded: required {required}, limit {limit}"
        if detail:
            message = f"{message} ({detail})"
        super().__init__(message)


class InvariantViolation(HyperfreeError, RuntimeError):
    """An internal mathematical invariant failed; indicates a bug"""

    pass
