# coding=utf-8
"""
Test module for zlinalg module
"""
import random

import pytest

import libs.zlinalg.zlinalg as zlinalg
from libs.zlinalg.zlinalg import AffineUnimodularMap
from libs.utils.custom_exceptions import LatticeError


HNF_MATRICES = [
    ((1, 2), (3, 4)),
    ((2, 4, 4), (-6, 6, 12), (10, -4, -16)),
    ((0, 0, 3), (0, 2, 0), (5, 0, 0)),
    ((1, -1, 0), (2, -2, 0)),
    ((6,), (4,), (-9,)),
]


@pytest.mark.parametrize("matrix", HNF_MATRICES)
def test_hermite_normal_form(matrix):
    """
    Test U·M = H with U unimodular and H in echelon form
    :return:
    """
    hermite, transform = zlinalg.hermite_normal_form(matrix)
    assert zlinalg.mat_mul(transform, matrix) == hermite
    assert abs(zlinalg.determinant(transform)) == 1

    last_pivot_column = -1
    zero_row_seen = False
    for row in hermite:
        if not any(row):
            zero_row_seen = True
            continue
        assert not zero_row_seen
        column = next(j for j, x in enumerate(row) if x)
        assert column > last_pivot_column
        assert row[column] > 0
        for other in hermite[:hermite.index(row)]:
            assert 0 <= other[column] < row[column]
        last_pivot_column = column


def test_hermite_normal_form_small():
    """
    Test
    :return:
    """
    hermite, _ = zlinalg.hermite_normal_form(((1, 2), (3, 4)))
    assert hermite == ((1, 0), (0, 2))


def test_determinant():
    """
    Test
    :return:
    """
    assert zlinalg.determinant(((2, 0), (0, 3))) == 6
    assert zlinalg.determinant(((0, 1), (1, 0))) == -1
    assert zlinalg.determinant(((1, 2, 3), (4, 5, 6), (7, 8, 9))) == 0
    assert zlinalg.determinant(((0, 2, 1), (3, 0, 1), (1, 1, 0))) == 5
    assert zlinalg.determinant(()) == 1


def test_primitive_vector():
    """
    Test
    :return:
    """
    assert zlinalg.primitive_vector((4, -6, 2)) == (2, -3, 1)
    assert zlinalg.primitive_vector((0, -3)) == (0, -1)
    with pytest.raises(LatticeError):
        zlinalg.primitive_vector((0, 0, 0))


@pytest.mark.parametrize("vectors, expected", [
    (((1, 0, 0), (0, 1, 0)), True),
    (((1, 2, 3),), True),
    (((2, 4, 6),), False),
    (((2, 0),), False),
    (((1, 1), (1, -1)), False),
    (((1, 1), (0, 1)), True),
    (((1, 0, 0), (2, 0, 0)), False),
    (((1, 2, 0), (0, 3, 1)), True),
])
def test_is_partial_lattice_basis(vectors, expected):
    """
    Test
    :return:
    """
    assert zlinalg.is_partial_lattice_basis(vectors) is expected


def test_partial_basis_too_many_vectors():
    """
    Test
    :return:
    """
    with pytest.raises(LatticeError):
        zlinalg.is_partial_lattice_basis(((1, 0), (0, 1), (1, 1)))


def test_unit_dual_vector():
    """
    Test
    :return:
    """
    for normal in ((3, 5), (0, 0, -1), (2, 3, 7), (-1, -1, -1)):
        assert zlinalg.dot(normal, zlinalg.unit_dual_vector(normal)) == 1
    with pytest.raises(LatticeError):
        zlinalg.unit_dual_vector((2, 4))


def test_lattice_embedding():
    """
    Test a triangle lying in the plane x + y + z = 1 of Z^3
    :return:
    """
    differences = ((-1, 1, 0), (-1, 0, 1))
    rank, projection = zlinalg.lattice_embedding(differences, 3)
    assert rank == 2
    images = [zlinalg.mat_vec(projection, d) for d in differences]
    assert abs(zlinalg.determinant(images)) == 1


def test_affine_map_inverse_and_compose():
    """
    Test
    :return:
    """
    rng = random.Random(17)
    for n in (1, 2, 3, 4):
        linear = zlinalg.random_unimodular_matrix(n, rng)
        translation = tuple(rng.randint(-3, 3) for _ in range(n))
        affine_map = AffineUnimodularMap(linear, translation)
        point = tuple(rng.randint(-5, 5) for _ in range(n))
        image = zlinalg.apply_map(affine_map, point)
        assert affine_map.inverse().apply(image) == point
        assert affine_map.compose(affine_map.inverse()) == AffineUnimodularMap.identity(n)


def test_affine_map_errors():
    """
    Test
    :return:
    """
    with pytest.raises(LatticeError):
        AffineUnimodularMap(((2, 0), (0, 1)))
    with pytest.raises(LatticeError):
        zlinalg.apply_map(AffineUnimodularMap.identity(2), (1, 2, 3))


def test_permutation_map():
    """
    Test
    :return:
    """
    permutation = AffineUnimodularMap.permutation((2, 0, 1))
    assert permutation.apply((10, 20, 30)) == (30, 10, 20)
    with pytest.raises(LatticeError):
        AffineUnimodularMap.permutation((0, 0, 1))
