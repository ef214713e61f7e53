# coding=utf-8
"""
Custom Exceptions module
Every error raised by the library derives from ValueError so that callers
can catch input problems with a single clause.
"""
from typing import Optional, Sequence


class LatticeError(ValueError):
    """
    Used to raise an error when an integer linear algebra pre-condition is violated
    (zero vector, too many vectors, dimension mismatch, non unimodular map)
    """
    pass


class InputFormatError(ValueError):
    """
    Used to raise an error when an input document or a family parameter is malformed
    """
    pass


class NotSmoothError(ValueError):
    """
    Used to raise an error when a polytope is not smooth (Delzant).
    The failing vertex is kept for reporting purpose.
    """
    def __init__(self, message: str, vertex: Optional[Sequence[int]] = None):
        super().__init__(message)
        self.vertex = tuple(vertex) if vertex is not None else None


class HypothesisError(ValueError):
    """
    Used to raise an error when a closed formula or a theorem is applied outside
    of its hypothesis
    """
    pass


class ConsistencyError(ValueError):
    """
    Used to raise an error when two independent computations disagree.
    This always signals a bug.
    """
    pass
