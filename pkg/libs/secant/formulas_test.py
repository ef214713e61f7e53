# coding=utf-8
"""
Test module for formulas module
"""
import pytest

import libs.secant.formulas as formulas
import libs.polytope.family as family
import libs.chow.chow as chow
from libs.polytope.polytope import PolytopeStats
from libs.utils.custom_exceptions import HypothesisError, InputFormatError


def surface_stats(d: int, b: int, v: int) -> PolytopeStats:
    """
    Statistics of a polygon, only d, B and V matter for the surface formula
    :return:
    """
    return PolytopeStats(dimension=2, vertices=v, edge_points=b, boundary_points=b,
                         interior_points=0, boundary_volume=b, lattice_points=b,
                         normalized_volume=d, perimeter=b)


@pytest.mark.parametrize("n, expected", [(1, 1), (2, 3), (3, 10), (4, 35)])
def test_veronese_secant_degree(n, expected):
    """
    Test
    :return:
    """
    assert formulas.veronese_secant_degree(n) == expected


@pytest.mark.parametrize("n, k, expected", [(2, 0, 1), (4, 0, 27), (3, 1, 1), (5, 3, 1)])
def test_truncated_secant_degree(n, k, expected):
    """
    Test
    :return:
    """
    assert formulas.truncated_secant_degree(n, k) == expected


def test_truncated_table_sum_at_last_index():
    """
    Test the table sum at k = n - 2 is n(n-1)/2, while the secant variety fills P^{2n}
    :return:
    """
    for n in (2, 3, 4, 5):
        assert formulas.truncated_table_sum(n, n - 2) == n * (n - 1) // 2


def test_truncated_secant_degree_range():
    """
    Test
    :return:
    """
    with pytest.raises(InputFormatError):
        formulas.truncated_secant_degree(4, 3)
    with pytest.raises(InputFormatError):
        formulas.truncated_secant_degree(4, -1)


@pytest.mark.parametrize("ell, n, expected", [(2, 4, 3), (1, 2, 1), (1, 5, 1), (3, 4, 1),
                                              (2, 5, 6), (3, 5, 6)])
def test_product_secant_degree(ell, n, expected):
    """
    Test
    :return:
    """
    assert formulas.product_secant_degree(ell, n) == expected


@pytest.mark.parametrize("n, d, expected", [(3, 5, 2), (2, 4, 2), (3, 3, 0), (3, 4, 0),
                                            (1, 3, 2)])
def test_scroll_secant_rhs(n, d, expected):
    """
    Test
    :return:
    """
    assert formulas.scroll_secant_rhs(n, d) == expected


def test_scroll_secant_rhs_errors():
    """
    Test
    :return:
    """
    with pytest.raises(InputFormatError):
        formulas.scroll_secant_rhs(3, 2)
    with pytest.raises(InputFormatError):
        formulas.scroll_secant_degree()
    assert formulas.scroll_secant_degree(1, 2, 1) == 1
    assert formulas.scroll_secant_degree(1, 1, 1) == 1
    assert formulas.scroll_secant_degree(1, 1, 3) == 1
    assert formulas.scroll_secant_degree(2, 2, 3) == 6


@pytest.mark.parametrize("d, b, v, expected", [(9, 9, 3, 15), (6, 6, 6, 3), (4, 6, 4, 1)])
def test_surface_secant_degree(d, b, v, expected):
    """
    Test
    :return:
    """
    assert formulas.surface_secant_degree(surface_stats(d, b, v)) == expected


def test_surface_secant_degree_rejects_defective_polygons():
    """
    Test
    :return:
    """
    doubled = family.doubled_simplex(2)
    with pytest.raises(HypothesisError):
        formulas.surface_secant_degree(doubled.stats)
    with pytest.raises(HypothesisError):
        formulas.surface_secant_degree(family.hexagon().stats, general=False)


def test_threefold_secant_degree():
    """
    Test
    :return:
    """
    cube = family.cube(3)
    assert formulas.threefold_secant_degree(cube.stats, 48) == 1

    scroll = family.scroll(1, 1, 3)
    c1_cubed = chow.chern_numbers(scroll.normal_fan)["c1^3"]
    assert formulas.threefold_secant_degree(scroll.stats, c1_cubed) == 1

    doubled = family.doubled_simplex(3)
    c1_cubed = chow.chern_numbers(doubled.normal_fan)["c1^3"]
    with pytest.raises(HypothesisError):
        formulas.threefold_secant_degree(doubled.stats, c1_cubed)


@pytest.mark.parametrize("degrees, dims, expected", [
    ((3,), (2,), 15),
    ((1, 1, 1), (1, 1, 1), 1),
    ((1, 2), (1, 1), 1),
])
def test_segre_veronese_secant_degree(degrees, dims, expected):
    """
    Test
    :return:
    """
    assert formulas.segre_veronese_secant_degree(degrees, dims) == expected


def test_segre_veronese_rhs_values():
    """
    Test
    :return:
    """
    assert formulas.segre_veronese_rhs((3,), (2,)) == 81 - 51
    assert formulas.segre_veronese_rhs((1, 1, 1), (1, 1, 1)) == 36 - 34


def test_segre_veronese_hypothesis():
    """
    Test
    :return:
    """
    with pytest.raises(HypothesisError):
        formulas.segre_veronese_secant_degree((1, 1), (1, 1))
    with pytest.raises(InputFormatError):
        formulas.segre_veronese_secant_degree((3,), (1, 1))


def test_corollaries():
    """
    Test
    :return:
    """
    assert formulas.d_uple_secant_degree(3, 2) == 15
    assert formulas.segre_secant_degree(3) == 1
    for d in (3, 4, 5):
        # rational normal curves
        assert formulas.d_uple_secant_degree(d, 1) == (d - 1) * (d - 2) // 2
    with pytest.raises(HypothesisError):
        formulas.d_uple_secant_degree(2, 3)
    with pytest.raises(HypothesisError):
        formulas.segre_secant_degree(2)


@pytest.mark.parametrize("d, n", [(3, 2), (4, 2), (3, 3), (5, 2), (4, 3)])
def test_d_uple_agrees_with_segre_veronese(d, n):
    """
    Test
    :return:
    """
    assert formulas.d_uple_secant_degree(d, n) == formulas.segre_veronese_secant_degree([d], [n])


@pytest.mark.parametrize("n", [3, 4, 5])
def test_segre_agrees_with_segre_veronese(n):
    """
    Test
    :return:
    """
    assert formulas.segre_secant_degree(n) == formulas.segre_veronese_secant_degree([1] * n,
                                                                                   [1] * n)


def test_dimension_exceptions():
    """
    Test
    :return:
    """
    assert formulas.expected_dimension_exceptions(1) == []
    assert formulas.expected_dimension_exceptions(2) == ["DoubledSimplex(2)"]
    assert formulas.expected_dimension_exceptions(4) == ["DoubledSimplex(4)",
                                                "TruncatedDoubledSimplex(4, 0)",
                                                "TruncatedDoubledSimplex(4, 1)",
                                                "ProductOfSimplices(2, 2)"]
