# coding=utf-8
"""
Custom Types module
Contains custom types for typing
"""

from typing import Tuple, FrozenSet


# integer vector : a lattice point, an edge direction or a ray generator
IntVec = Tuple[int, ...]

# integer matrix stored row by row
IntMat = Tuple[IntVec, ...]

# a cone of a fan as a set of ray indices
Cone = FrozenSet[int]

# exponents of a monomial in the boundary divisors, one entry per ray
Exponents = Tuple[int, ...]
