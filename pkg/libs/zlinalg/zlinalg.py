# coding=utf-8
"""
Integer linear algebra module

Exact helpers over the integers :
• primitive vectors,
• row Hermite normal form with its unimodular transform,
• lattice basis checks,
• affine unimodular maps (elements of AGL(n, Z)).

All matrices are stored row by row as tuples of integer tuples.
"""
from typing import Sequence, Tuple, List, Optional
import math
import logging
from functools import reduce

import sympy

from libs.utils.custom_types import IntVec, IntMat
from libs.utils.custom_exceptions import LatticeError


def primitive_vector(vector: Sequence[int]) -> IntVec:
    """
    Returns the vector divided by the gcd of its entries
    :param vector:
    :return:
    """
    gcd = reduce(math.gcd, vector, 0)
    if gcd == 0:
        raise LatticeError("Zlinalg: a zero vector has no primitive direction")
    return tuple(x // gcd for x in vector)


def lattice_length(vector: Sequence[int]) -> int:
    """
    Lattice length of a segment of direction vector : the gcd of its entries
    :param vector:
    :return:
    """
    return reduce(math.gcd, vector, 0)


def dot(u: Sequence[int], v: Sequence[int]) -> int:
    """
    Integer scalar product
    """
    return sum(x * y for x, y in zip(u, v))


def sub(u: Sequence[int], v: Sequence[int]) -> IntVec:
    """
    u - v
    """
    return tuple(x - y for x, y in zip(u, v))


def add(u: Sequence[int], v: Sequence[int]) -> IntVec:
    """
    u + v
    """
    return tuple(x + y for x, y in zip(u, v))


def mat_vec(matrix: Sequence[Sequence[int]], vector: Sequence[int]) -> IntVec:
    """
    Product of a matrix by a column vector
    """
    return tuple(dot(row, vector) for row in matrix)


def mat_mul(left: Sequence[Sequence[int]], right: Sequence[Sequence[int]]) -> IntMat:
    """
    Matrix product
    """
    columns = list(zip(*right))
    return tuple(tuple(dot(row, column) for column in columns) for row in left)


def transpose(matrix: Sequence[Sequence[int]]) -> IntMat:
    """
    Matrix transpose
    """
    return tuple(tuple(column) for column in zip(*matrix))


def identity(n: int) -> IntMat:
    """
    Identity matrix of size n
    """
    return tuple(tuple(1 if i == j else 0 for j in range(n)) for i in range(n))


def determinant(matrix: Sequence[Sequence[int]]) -> int:
    """
    Exact determinant of a square integer matrix (fraction free Bareiss elimination).
    Called in the inner loops of the hull and volume computations, where building a
    sympy matrix for every small minor would dominate the running time.
    :param matrix:
    :return:
    """
    size = len(matrix)
    if size == 0:
        return 1
    work = [list(row) for row in matrix]
    if any(len(row) != size for row in work):
        raise LatticeError("Zlinalg: determinant of a non square matrix")
    sign = 1
    previous = 1
    for k in range(size - 1):
        if work[k][k] == 0:
            swap = next((i for i in range(k + 1, size) if work[i][k] != 0), None)
            if swap is None:
                return 0
            work[k], work[swap] = work[swap], work[k]
            sign = -sign
        pivot = work[k][k]
        for i in range(k + 1, size):
            for j in range(k + 1, size):
                work[i][j] = (work[i][j] * pivot - work[i][k] * work[k][j]) // previous
        previous = pivot
    return sign * work[-1][-1]


def hyperplane_normal(vectors: Sequence[Sequence[int]]) -> IntVec:
    """
    Generalized cross product of n - 1 vectors of Z^n : an integer vector orthogonal to
    all of them, zero if and only if they are linearly dependent
    :param vectors:
    :return:
    """
    n = len(vectors) + 1
    normal = []
    for i in range(n):
        minor = [row[:i] + row[i + 1:] for row in (tuple(v) for v in vectors)]
        normal.append((-1) ** i * determinant(minor))
    return tuple(normal)


def hermite_normal_form(matrix: Sequence[Sequence[int]]) -> Tuple[IntMat, IntMat]:
    """
    Row Hermite normal form.
    Returns the pair (H, U) with U unimodular and U·M = H, where H is in row echelon
    form with positive pivots and entries above each pivot reduced in [0, pivot).
    :param matrix: a rows x cols integer matrix
    :return: (H, U)
    """
    rows = len(matrix)
    cols = len(matrix[0]) if rows else 0
    if any(len(row) != cols for row in matrix):
        raise LatticeError("Zlinalg: ragged matrix given to hermite_normal_form")

    h = [list(row) for row in matrix]
    u = [list(row) for row in identity(rows)]

    def _swap(i: int, j: int):
        h[i], h[j] = h[j], h[i]
        u[i], u[j] = u[j], u[i]

    def _add_multiple(target: int, source: int, factor: int):
        # row_target <- row_target - factor * row_source
        if factor == 0:
            return
        h[target] = [x - factor * y for x, y in zip(h[target], h[source])]
        u[target] = [x - factor * y for x, y in zip(u[target], u[source])]

    pivot_row = 0
    for col in range(cols):
        if pivot_row >= rows:
            break
        while True:
            nonzero = [i for i in range(pivot_row, rows) if h[i][col] != 0]
            if not nonzero:
                break
            best = min(nonzero, key=lambda i: (abs(h[i][col]), i))
            _swap(best, pivot_row)
            reduced = True
            for i in range(pivot_row + 1, rows):
                if h[i][col] != 0:
                    _add_multiple(i, pivot_row, h[i][col] // h[pivot_row][col])
                    reduced = reduced and h[i][col] == 0
            if reduced:
                break

        if h[pivot_row][col] == 0:
            continue
        if h[pivot_row][col] < 0:
            h[pivot_row] = [-x for x in h[pivot_row]]
            u[pivot_row] = [-x for x in u[pivot_row]]
        pivot = h[pivot_row][col]
        for i in range(pivot_row):
            _add_multiple(i, pivot_row, h[i][col] // pivot)
        pivot_row += 1

    return tuple(tuple(row) for row in h), tuple(tuple(row) for row in u)


def integer_rank(vectors: Sequence[Sequence[int]]) -> int:
    """
    Rank of a family of integer vectors
    :param vectors:
    :return:
    """
    if not vectors:
        return 0
    h, _ = hermite_normal_form(vectors)
    return sum(1 for row in h if any(row))


def is_partial_lattice_basis(vectors: Sequence[Sequence[int]],
                             dimension: Optional[int] = None) -> bool:
    """
    Checks whether the vectors can be completed into a basis of Z^n, i.e. all the invariant
    factors of the k x n matrix they form are equal to 1.
    :param vectors: k vectors of Z^n
    :param dimension: n, only needed when no vector is given
    :return:
    """
    if not vectors:
        return True
    n = dimension if dimension is not None else len(vectors[0])
    if any(len(v) != n for v in vectors):
        raise LatticeError("Zlinalg: vectors of different dimensions")
    k = len(vectors)
    if k > n:
        raise LatticeError("Zlinalg: {} vectors cannot be part of a basis of Z^{}".format(k, n))
    # U·M^T = [B ; 0] : the vectors extend to a basis iff B is unimodular
    h, _ = hermite_normal_form(transpose(vectors))
    return all(h[i][i] == 1 for i in range(k))


def unit_dual_vector(normal: Sequence[int]) -> IntVec:
    """
    Returns an integer vector u with <normal, u> = 1
    :param normal: a primitive vector
    :return:
    """
    h, u = hermite_normal_form(tuple((x,) for x in normal))
    if h[0][0] != 1:
        raise LatticeError("Zlinalg: {} is not primitive".format(tuple(normal)))
    return u[0]


def lattice_embedding(differences: Sequence[Sequence[int]],
                      dimension: int) -> Tuple[int, IntMat]:
    """
    Finds coordinates for the saturated sublattice spanned by the differences.
    Returns (k, projection) where projection is a k x dimension integer matrix mapping
    every point of that sublattice bijectively onto Z^k.
    :param differences:
    :param dimension:
    :return:
    """
    if not differences:
        return 0, tuple()
    h, u = hermite_normal_form(transpose(differences))
    k = sum(1 for row in h if any(row))
    logging.debug("Zlinalg: lattice embedding of rank %i in Z^%i", k, dimension)
    return k, u[:k]


def inverse_matrix(matrix: Sequence[Sequence[int]]) -> IntMat:
    """
    Inverse of a unimodular matrix
    :param matrix:
    :return:
    """
    sym = sympy.Matrix(matrix)
    if abs(sym.det()) != 1:
        raise LatticeError("Zlinalg: matrix {} is not unimodular".format(tuple(matrix)))
    inverse = sym.inv()
    return tuple(tuple(int(inverse[i, j]) for j in range(sym.cols)) for i in range(sym.rows))


class AffineUnimodularMap:
    """
    An element of AGL(n, Z) : x -> linear·x + translation
    """
    __slots__ = 'linear', 'translation', '_inverse_linear'

    def __init__(self,
                 linear: Sequence[Sequence[int]],
                 translation: Optional[Sequence[int]] = None,
                 check: bool = True):
        self.linear = tuple(tuple(row) for row in linear)
        n = len(self.linear)
        self.translation = tuple(translation) if translation is not None else (0,) * n
        self._inverse_linear = None
        if check:
            if any(len(row) != n for row in self.linear) or len(self.translation) != n:
                raise LatticeError("Zlinalg: inconsistent affine map dimensions")
            if abs(determinant(self.linear)) != 1:
                raise LatticeError("Zlinalg: linear part {} is not unimodular"
                                   .format(self.linear))

    def __repr__(self):
        return "AffineUnimodularMap({}, {})".format(self.linear, self.translation)

    def __eq__(self, other):
        return (isinstance(other, AffineUnimodularMap) and self.linear == other.linear
                and self.translation == other.translation)

    def __hash__(self):
        return hash((self.linear, self.translation))

    @property
    def dimension(self) -> int:
        """
        Dimension of the lattice acted upon
        """
        return len(self.linear)

    @classmethod
    def identity(cls, n: int) -> 'AffineUnimodularMap':
        """
        Identity of Z^n
        """
        return cls(identity(n), check=False)

    @classmethod
    def shift(cls, vector: Sequence[int]) -> 'AffineUnimodularMap':
        """
        Translation by vector
        """
        return cls(identity(len(vector)), vector, check=False)

    @classmethod
    def permutation(cls, order: Sequence[int]) -> 'AffineUnimodularMap':
        """
        Coordinate permutation sending x to (x[order[0]], x[order[1]], ...)
        :param order:
        :return:
        """
        n = len(order)
        if sorted(order) != list(range(n)):
            raise LatticeError("Zlinalg: {} is not a permutation".format(tuple(order)))
        linear = tuple(tuple(1 if j == order[i] else 0 for j in range(n)) for i in range(n))
        return cls(linear, check=False)

    @property
    def inverse_linear(self) -> IntMat:
        """
        Inverse of the linear part (computed once)
        """
        if self._inverse_linear is None:
            self._inverse_linear = inverse_matrix(self.linear)
        return self._inverse_linear

    def apply(self, point: Sequence[int]) -> IntVec:
        """
        Image of a point
        """
        return add(mat_vec(self.linear, point), self.translation)

    def apply_linear(self, vector: Sequence[int]) -> IntVec:
        """
        Image of a direction (translation ignored)
        """
        return mat_vec(self.linear, vector)

    def inverse(self) -> 'AffineUnimodularMap':
        """
        Inverse map
        """
        inverse = self.inverse_linear
        return AffineUnimodularMap(inverse, tuple(-x for x in mat_vec(inverse, self.translation)),
                                   check=False)

    def compose(self, other: 'AffineUnimodularMap') -> 'AffineUnimodularMap':
        """
        Returns self ∘ other (other is applied first)
        :param other:
        :return:
        """
        if other.dimension != self.dimension:
            raise LatticeError("Zlinalg: cannot compose maps of different dimensions")
        return AffineUnimodularMap(mat_mul(self.linear, other.linear),
                                   self.apply(other.translation), check=False)

    def serialize(self) -> dict:
        """
        Json friendly representation
        """
        return {"linear": [list(row) for row in self.linear],
                "translation": list(self.translation)}


def apply_map(affine_map: AffineUnimodularMap, point: Sequence[int]) -> IntVec:
    """
    Image of a point by an affine unimodular map
    :param affine_map:
    :param point:
    :return:
    """
    if len(point) != affine_map.dimension:
        raise LatticeError("Zlinalg: point {} does not live in Z^{}"
                           .format(tuple(point), affine_map.dimension))
    return affine_map.apply(point)


def random_unimodular_matrix(n: int, rng, steps: int = 6) -> IntMat:
    """
    Random element of GL(n, Z) obtained by a few elementary operations, entries stay small
    :param n:
    :param rng: a random.Random instance
    :param steps:
    :return:
    """
    matrix = [list(row) for row in identity(n)]
    order = list(range(n))
    rng.shuffle(order)
    matrix = [matrix[i] for i in order]
    for _ in range(steps if n > 1 else 0):
        i, j = rng.sample(range(n), 2)
        factor = rng.choice((-1, 1))
        matrix[i] = [x + factor * y for x, y in zip(matrix[i], matrix[j])]
    for i in range(n):
        if rng.random() < 0.5:
            matrix[i] = [-x for x in matrix[i]]
    return tuple(tuple(row) for row in matrix)


if __name__ == '__main__':

    logging.getLogger().setLevel(logging.DEBUG)

    def hnf_example():
        """
        Test
        :return:
        """
        matrix = ((2, 4, 4), (-6, 6, 12), (10, -4, -16))
        hermite, transform = hermite_normal_form(matrix)
        print(hermite, transform, mat_mul(transform, matrix) == hermite)

    hnf_example()
