# coding=utf-8
"""
Test module for classify module
"""
import random

import pytest

import libs.polytope.family as family
from libs.polytope.polytope import build_polytope, random_unimodular_map
from libs.classify.classify import (classify, max_length2_vertex, FamilyLabel, FamilyKind,
                                    is_subpolytope_of_doubled_simplex)
from libs.utils.custom_exceptions import NotSmoothError


def labelled_catalog(max_dim: int = 5):
    """
    Catalog polytopes with the label they are built from
    :return:
    """
    cases = []
    for n in range(1, max_dim + 1):
        cases.append((family.simplex(n), FamilyLabel(FamilyKind.SIMPLEX, n)))
        cases.append((family.doubled_simplex(n), FamilyLabel(FamilyKind.DOUBLED_SIMPLEX, n)))
        for k in range(n - 1):
            cases.append((family.truncated(n, k), FamilyLabel(FamilyKind.TRUNCATED, n, k=k)))
        for ell in range(1, n):
            cases.append((family.product([(1, ell), (1, n - ell)]),
                          FamilyLabel(FamilyKind.PRODUCT, n, ell=min(ell, n - ell))))
    return cases


GENERAL_POLYTOPES = [
    family.hexagon(),
    family.cube(3),
    family.simplex(2, 3),
    family.simplex(1, 3),
    family.simplex(1, 7),
    family.scroll(1, 3),
    family.scroll(2, 2),
    family.scroll(1, 1, 3),
    family.scroll(1, 2, 2),
    family.scroll(1, 1, 1, 3),
    family.product([(2, 1), (1, 2)]),
]


@pytest.mark.parametrize("polytope, expected", labelled_catalog(), ids=repr)
def test_classify_catalog(polytope, expected):
    """
    Test
    :return:
    """
    label = classify(polytope)
    assert label == expected
    model = label.model()
    images = {label.witness.apply(p) for p in polytope.lattice_points}
    assert images == set(model.lattice_points)


def test_classify_truncation_ends():
    """
    Test (2Δn)_{-1} = 2Δn and (2Δn)_{n-1} = Δn
    :return:
    """
    for n in range(1, 6):
        assert classify(family.truncated(n, -1)) == FamilyLabel(FamilyKind.DOUBLED_SIMPLEX, n)
        assert classify(family.truncated(n, n - 1)) == FamilyLabel(FamilyKind.SIMPLEX, n)


@pytest.mark.parametrize("polytope", GENERAL_POLYTOPES, ids=repr)
def test_classify_general(polytope):
    """
    Test
    :return:
    """
    label = classify(polytope, debug_all_vertices=True)
    assert label.is_general
    assert label.witness is None
    assert not is_subpolytope_of_doubled_simplex(polytope)


def test_classify_examples():
    """
    Test
    :return:
    """
    assert repr(classify(family.doubled_simplex(3))) == "DoubledSimplex(3)"
    assert repr(classify(family.product([(1, 1), (1, 2)]))) == "ProductOfSimplices(1, 2)"
    assert repr(classify(family.product([(1, 2), (1, 1)]))) == "ProductOfSimplices(1, 2)"
    assert repr(classify(family.hexagon())) == "General(2)"


@pytest.mark.parametrize("polytope, expected", labelled_catalog(5), ids=repr)
def test_classify_invariance(polytope, expected):
    """
    Test the label does not depend on the lattice coordinates
    :return:
    """
    rng = random.Random(expected.n * 100 + (expected.k or 0) * 10 + (expected.ell or 0))
    for _ in range(20):
        image = polytope.transform(random_unimodular_map(polytope.dim, rng))
        label = classify(image)
        assert label == expected
        images = {label.witness.apply(p) for p in image.lattice_points}
        assert images == set(label.model().lattice_points)


@pytest.mark.parametrize("polytope", GENERAL_POLYTOPES, ids=repr)
def test_classify_general_invariance(polytope):
    """
    Test the general polytopes, scrolls included, stay general in any lattice coordinates
    :return:
    """
    rng = random.Random(7)
    for _ in range(20):
        image = polytope.transform(random_unimodular_map(polytope.dim, rng))
        assert classify(image).is_general


@pytest.mark.parametrize("polytope, expected", labelled_catalog(4), ids=repr)
def test_debug_all_vertices(polytope, expected):
    """
    Test every vertex agrees with the distinguished one
    :return:
    """
    assert classify(polytope, debug_all_vertices=True) == expected


def test_max_length2_vertex():
    """
    Test
    :return:
    """
    for n in (1, 2, 3, 4):
        _, count = max_length2_vertex(family.doubled_simplex(n))
        assert count == n
    for ell, m in ((1, 1), (1, 3), (2, 2)):
        _, count = max_length2_vertex(family.product([(1, ell), (1, m)]))
        assert count == 0

    vertex, count = max_length2_vertex(family.truncated(4, 1))
    assert count == 2
    assert vertex in ((0, 0, 0, 0), (0, 0, 2, 0), (0, 0, 0, 2))


def test_is_subpolytope_of_doubled_simplex():
    """
    Test
    :return:
    """
    for n in (2, 3, 4):
        for k in range(n - 1):
            assert is_subpolytope_of_doubled_simplex(family.truncated(n, k))
    assert not is_subpolytope_of_doubled_simplex(family.simplex(2, 3))
    for d in (3, 4, 5):
        assert not is_subpolytope_of_doubled_simplex(family.simplex(1, d))


def test_classify_not_smooth():
    """
    Test
    :return:
    """
    with pytest.raises(NotSmoothError):
        classify(build_polytope([(0, 0), (2, 0), (0, 1)]))


def test_serialize():
    """
    Test
    :return:
    """
    output = classify(family.truncated(4, 1)).serialize()
    assert output["family"] == "truncated"
    assert (output["n"], output["k"]) == (4, 1)
    assert set(output["witness"]) == {"linear", "translation"}
    assert classify(family.hexagon()).serialize() == {"family": "general", "n": 2}
