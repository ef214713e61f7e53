# coding=utf-8
"""
Polytope Testing module
"""
import random

import pytest

import libs.polytope.polytope as polytope
import libs.polytope.family as family
from libs.polytope.polytope import LatticePolytope, PolytopeStats
from libs.utils.custom_exceptions import InputFormatError, NotSmoothError, LatticeError


@pytest.fixture
def hexagon() -> LatticePolytope:
    """
    The smooth hexagon

      (0,2)   (1,2)   (2,2)
        .-------+-------+
        |               |
      (0,1)   (1,1)   (2,1)
        +       .       +
        |               |
        +-------+-------.
      (0,0)   (1,0)   (2,0)

    :return:
    """
    return family.hexagon()


def test_from_vertices_drops_duplicates():
    """
    Test
    :return:
    """
    triangle = polytope.build_polytope([(0, 0), (1, 0), (0, 1), (1, 0), (0, 0)])
    assert triangle.vertices == ((0, 0), (0, 1), (1, 0))
    assert len(triangle.facets) == 3
    assert triangle.dim == 2


def test_from_vertices_drops_non_extreme_points():
    """
    Test
    :return:
    """
    points = [(0, 0), (1, 0), (2, 0), (0, 1), (1, 1), (0, 2)]
    doubled = polytope.build_polytope(points)
    assert doubled.vertices == ((0, 0), (0, 2), (2, 0))


def test_hexagon_hull(hexagon):
    """
    Test
    :return:
    """
    assert len(hexagon.vertices) == 6
    assert len(hexagon.facets) == 6
    for facet in hexagon.facets:
        assert len(facet.vertex_indices) == 2
        assert all(facet.value(p) >= 0 for p in hexagon.vertices)


def test_bad_inputs():
    """
    Test
    :return:
    """
    with pytest.raises(InputFormatError):
        polytope.build_polytope([])
    with pytest.raises(InputFormatError):
        polytope.build_polytope([(0, 0), (1, 0, 0)])
    with pytest.raises(InputFormatError):
        polytope.build_polytope([(0, 0), (1.0, 0), (0, 1)])
    with pytest.raises(InputFormatError):
        polytope.build_polytope([(1, 1), (1, 1)])


@pytest.mark.parametrize("built, expected", [
    (lambda: family.simplex(2, 2), 6),
    (family.hexagon, 7),
    (lambda: family.simplex(3, 2), 10),
    (lambda: family.simplex(2, 3), 10),
    (lambda: family.cube(3), 8),
])
def test_lattice_points_count(built, expected):
    """
    Test
    :return:
    """
    assert len(polytope.lattice_points(built())) == expected


def test_lattice_points_sorted(hexagon):
    """
    Test
    :return:
    """
    points = polytope.lattice_points(hexagon)
    assert points == sorted(points)
    assert (1, 1) in points
    assert (2, 0) not in points and (0, 2) not in points


def test_lattice_points_box_guard(monkeypatch):
    """
    Test
    :return:
    """
    monkeypatch.setattr(polytope, "MAX_BOX_POINTS", 4)
    with pytest.raises(InputFormatError):
        polytope.lattice_points(family.simplex(2, 2))
    monkeypatch.setattr(polytope, "MAX_BOX_POINTS", 9)
    assert len(polytope.lattice_points(family.simplex(2, 2))) == 6


def test_edge_lengths():
    """
    Test
    :return:
    """
    doubled = family.simplex(3, 2)
    assert [doubled.edge_length(e) for e in doubled.edges] == [2] * 6

    prism = family.product([(1, 1), (1, 2)])
    assert set(polytope.edge_length(prism, e) for e in prism.edges) == {1}

    scroll = family.scroll(1, 2, 2)
    assert max(scroll.edge_length(e) for e in scroll.edges) == 2

    with pytest.raises(LatticeError):
        doubled.edge_length(doubled.faces(2)[0])


def test_face_lattice_of_cube():
    """
    Test
    :return:
    """
    cube = family.cube(3)
    assert [len(cube.faces(i)) for i in range(4)] == [8, 12, 6, 1]
    for face in cube.faces(2):
        assert len(face.vertex_indices) == 4


@pytest.mark.parametrize("n", [1, 2, 3, 4])
def test_normalized_volume_of_simplices(n):
    """
    Test
    :return:
    """
    assert polytope.normalized_volume(family.simplex(n)) == 1
    assert polytope.normalized_volume(family.simplex(n, 2)) == 2 ** n


def test_normalized_volume_hexagon(hexagon):
    """
    Test
    :return:
    """
    assert polytope.normalized_volume(hexagon) == 6
    assert sum(abs(polytope.zlinalg.determinant(hexagon._simplex_matrix(s)))
               for s in hexagon.triangulate()) == 6


def test_facet_volume():
    """
    Test
    :return:
    """
    doubled = family.simplex(2, 2)
    assert [polytope.facet_volume(doubled, f) for f in doubled.facets] == [2, 2, 2]
    cube = family.cube(3)
    assert [cube.facet_volume(f) for f in cube.facets] == [2] * 6


def test_is_smooth():
    """
    Test
    :return:
    """
    for n in (2, 3, 4):
        for k in range(n - 1):
            assert polytope.is_smooth(family.truncated(n, k)) == (True, None)

    assert polytope.is_smooth(polytope.build_polytope([(0, 0), (2, 0), (0, 1)])) == (False,
                                                                                      (0, 1))
    for degrees in ((1, 1), (1, 3), (1, 2, 2), (2, 2, 3), (1, 1, 1, 2)):
        assert family.scroll(*degrees).is_smooth

    with pytest.raises(NotSmoothError) as error:
        polytope.build_polytope([(0, 0), (2, 0), (0, 1)]).require_smooth()
    assert error.value.vertex == (0, 1)


def test_not_simple_polytope():
    """
    The octahedron has four edges at each vertex
    :return:
    """
    octahedron = polytope.build_polytope([(1, 0, 0), (-1, 0, 0), (0, 1, 0), (0, -1, 0),
                                          (0, 0, 1), (0, 0, -1)])
    assert not octahedron.is_smooth


def test_standard_position():
    """
    Test
    :return:
    """
    for n in (1, 2, 3):
        image, affine_map = polytope.standard_position(family.simplex(n), (0,) * n)
        assert affine_map == polytope.AffineUnimodularMap.identity(n)
        assert image == family.simplex(n)

    doubled = family.simplex(2, 2)
    image, affine_map = polytope.standard_position(doubled, (2, 0))
    assert image == doubled
    assert affine_map.apply((2, 0)) == (0, 0)


def test_standard_position_hexagon(hexagon):
    """
    Test
    :return:
    """
    image, _ = hexagon.standard_position((0, 0))
    assert image == hexagon


def test_standard_position_at_smooth_vertex_only():
    """
    Test a singular polytope can be moved to standard position at one of its smooth vertices
    :return:
    """
    triangle = polytope.build_polytope([(0, 0), (2, 0), (0, 1)])
    assert triangle.is_smooth_at((0, 0)) and triangle.is_smooth_at((2, 0))
    assert not triangle.is_smooth_at((0, 1))

    image, affine_map = triangle.standard_position((2, 0))
    assert affine_map.apply((2, 0)) == (0, 0)
    assert polytope.vertex_neighbors(image, (0, 0)) == [(0, 1), (1, 0)]

    with pytest.raises(NotSmoothError) as error:
        triangle.standard_position((0, 1))
    assert error.value.vertex == (0, 1)


def test_standard_position_sends_edges_to_basis():
    """
    Test
    :return:
    """
    truncated = family.truncated(4, 1)
    for vertex in truncated.vertices:
        image, affine_map = truncated.standard_position(vertex)
        assert affine_map.apply(vertex) == (0,) * 4
        assert polytope.vertex_neighbors(image, (0,) * 4) == sorted(
            tuple(1 if j == i else 0 for j in range(4)) for i in range(4))


def test_vertex_neighbors():
    """
    Test
    :return:
    """
    assert polytope.vertex_neighbors(family.simplex(2), (0, 0)) == [(0, 1), (1, 0)]
    assert polytope.vertex_neighbors(family.simplex(2, 2), (0, 0)) == [(0, 1), (1, 0)]
    assert polytope.vertex_neighbors(family.simplex(1, 5), (0,)) == [(1,)]


def test_normal_fan():
    """
    Test
    :return:
    """
    fan = polytope.normal_fan(family.simplex(2))
    assert set(fan.rays) == {(1, 0), (0, 1), (-1, -1)}
    assert len(fan.max_cones) == 3
    assert fan.is_smooth() and fan.is_complete()

    fan = polytope.normal_fan(family.cube(2))
    assert set(fan.rays) == {(1, 0), (-1, 0), (0, 1), (0, -1)}

    for n, k in ((3, 0), (4, 1), (4, 2)):
        fan = family.truncated(n, k).normal_fan
        assert len(fan.rays) == n + 2
        assert tuple(-1 if i <= k else 0 for i in range(n)) in fan.rays
        assert fan.is_smooth()


@pytest.mark.parametrize("built, expected", [
    (lambda: family.cube(3), dict(normalized_volume=6, vertices=8, edge_points=8,
                                  interior_points=0, perimeter=12, boundary_volume=12)),
    (family.hexagon, dict(normalized_volume=6, boundary_points=6, vertices=6, lattice_points=7)),
    (lambda: family.simplex(2, 3), dict(normalized_volume=9, boundary_points=9, vertices=3,
                                        interior_points=1)),
])
def test_stats(built, expected):
    """
    Test
    :return:
    """
    result = polytope.stats(built())
    assert isinstance(result, PolytopeStats)
    for key, value in expected.items():
        assert getattr(result, key) == value
    assert result.lattice_points == result.boundary_points + result.interior_points


def test_three_dimensional_edge_count():
    """
    Test every vertex of a smooth 3-polytope lies on three edges : E = perim - V/2
    :return:
    """
    for built in (family.cube(3), family.truncated(3, 0), family.scroll(1, 2, 2),
                  family.simplex(3, 3), family.product([(2, 1), (1, 2)])):
        result = built.stats
        assert result.edge_points == result.perimeter - result.vertices // 2


def test_lower_dimensional_input():
    """
    Test a triangle in the plane x + y + z = 2
    :return:
    """
    triangle = polytope.build_polytope([(2, 0, 0), (0, 2, 0), (0, 0, 2)])
    assert triangle.dim == 2
    assert triangle.embedding is not None
    assert triangle.normalized_volume == 4
    assert len(triangle.lattice_points) == 6
    assert triangle.is_smooth


def test_unimodular_invariance():
    """
    Test lattice points, volume and smoothness are preserved by AGL(n, Z)
    :return:
    """
    rng = random.Random(2019)
    for built in (family.hexagon(), family.truncated(3, 0), family.scroll(1, 3),
                  polytope.build_polytope([(0, 0), (2, 0), (0, 1)])):
        for _ in range(5):
            affine_map = polytope.random_unimodular_map(built.dim, rng)
            image = built.transform(affine_map)
            hull = polytope.build_polytope([affine_map.apply(v) for v in built.vertices])
            assert image.vertices == hull.vertices
            assert [(f.normal, f.offset) for f in image.facets] == [(f.normal, f.offset)
                                                                    for f in hull.facets]
            assert set(image.lattice_points) == {affine_map.apply(p)
                                                 for p in built.lattice_points}
            assert image.normalized_volume == built.normalized_volume
            assert image.is_smooth == built.is_smooth


def test_neighbors_are_lattice_points():
    """
    Test
    :return:
    """
    for built in (family.truncated(4, 0), family.scroll(2, 3), family.cube(3)):
        for vertex in built.vertices:
            neighbors = built.vertex_neighbors(vertex)
            assert len(neighbors) == built.dim
            assert all(built.contains(p) for p in neighbors)


def test_json():
    """
    Test
    :return:
    """
    hexagon = LatticePolytope.from_json({"vertices": [[0, 0], [1, 0], [2, 1], [2, 2], [1, 2],
                                                      [0, 1]]})
    assert hexagon == family.hexagon()
    assert hexagon.serialize()["vertices"][0] == [0, 0]
    with pytest.raises(InputFormatError):
        LatticePolytope.from_json({"points": []})
