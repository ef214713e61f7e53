# coding=utf-8
"""
Test module for reader module
"""
import json

import pytest

import libs.io.reader as reader
from libs.polytope.polytope import LatticePolytope, PointConfiguration
from libs.utils.custom_exceptions import InputFormatError

POLYTOPE_INPUT_FILES = [
    "hexagon.json",
    "three_delta_two.json",
    "cube.json",
    "truncated_4_1.json",
    "not_smooth_triangle.json",
    "segre_in_space.json",
]

POINTS_INPUT_FILES = [
    "hexagon_outer.json",
    "three_delta_two_minus_center.json",
]


@pytest.mark.parametrize("input_file", POLYTOPE_INPUT_FILES)
def test_read_polytope(input_file):
    """
    Test. We read every polytope of the resources
    :return:
    """
    polytope = reader.create_polytope_from_data(reader.get_json_from_file(input_file))
    assert isinstance(polytope, LatticePolytope)


@pytest.mark.parametrize("input_file", POINTS_INPUT_FILES)
def test_read_points(input_file):
    """
    Test
    :return:
    """
    document = reader.get_json_from_file(input_file)
    configuration = reader.create_points_from_data(document)
    assert len(configuration) == len(document["points"])
    assert configuration.hull.dim == 2


def test_list_folder():
    """
    Test
    :return:
    """
    names = reader.get_list_from_folder()
    assert names == sorted(POLYTOPE_INPUT_FILES + POINTS_INPUT_FILES)


def test_lower_dimensional_polytope():
    """
    Test a unit square lying in a plane of Z^3
    :return:
    """
    polytope = reader.create_polytope_from_data(reader.get_json_from_file("segre_in_space.json"))
    assert polytope.dim == 2
    assert polytope.normalized_volume == 2
    assert len(polytope.lattice_points) == 4


@pytest.mark.parametrize("document", [
    {"vertices": [[0, 0], [1, 0], [0, 1]], "name": "triangle"},
    {"schema": 2, "vertices": [[0, 0], [1, 0], [0, 1]]},
    {"schema": True, "vertices": [[0, 0], [1, 0], [0, 1]]},
    {"schema": 1},
    {"schema": 1, "vertices": [[0, 0], [1.0, 0], [0, 1]]},
    {"schema": 1, "vertices": [[0, 0], [True, 0], [0, 1]]},
    {"schema": 1, "vertices": [[0, 0], [1, 0, 0], [0, 1]]},
    {"schema": 1, "vertices": []},
    {"schema": 1, "vertices": "0 0, 1 0, 0 1"},
    [[0, 0], [1, 0], [0, 1]],
])
def test_strict_parsing(document):
    """
    Test
    :return:
    """
    with pytest.raises(InputFormatError):
        reader.create_polytope_from_data(document)


def test_points_document_as_polytope():
    """
    Test a configuration document read as a polytope gives its convex hull
    :return:
    """
    document = reader.get_json_from_file("three_delta_two_minus_center.json")
    polytope = reader.create_polytope_from_data(document)
    assert polytope.vertices == ((0, 0), (0, 3), (3, 0))
    with pytest.raises(InputFormatError):
        reader.create_points_from_data(reader.get_json_from_file("hexagon.json"))


def test_read_document_errors(tmp_path):
    """
    Test
    :return:
    """
    broken = tmp_path / "broken.json"
    broken.write_text("{\"vertices\": [[0, 0]")
    with pytest.raises(InputFormatError):
        reader.read_document(str(broken))
    with pytest.raises(InputFormatError):
        reader.read_document(str(tmp_path / "missing.json"))
    with pytest.raises(InputFormatError):
        reader.get_json_from_file("hexagon.txt")


def test_read_from_path(tmp_path):
    """
    Test
    :return:
    """
    path = tmp_path / "square.json"
    path.write_text(json.dumps({"schema": 1, "vertices": [[0, 0], [1, 0], [0, 1], [1, 1]]}))
    assert reader.create_polytope_from_file(str(path)).normalized_volume == 2
    assert reader.load_input(str(path)) == json.loads(path.read_text())
    assert reader.load_input("hexagon") == "hexagon"


@pytest.mark.parametrize("spec, name, params", [
    ("hexagon", "hexagon", {}),
    ("truncated:n=4,k=1", "truncated", {"n": 4, "k": 1}),
    ("scroll:degrees=1-2-2", "scroll", {"degrees": [1, 2, 2]}),
    ("product:factors=2x1-1x2", "product", {"factors": [(2, 1), (1, 2)]}),
    ("simplex: n=2, r=3", "simplex", {"n": 2, "r": 3}),
])
def test_parse_catalog_spec(spec, name, params):
    """
    Test
    :return:
    """
    assert reader.parse_catalog_spec(spec) == (name, params)


def test_create_from_catalog():
    """
    Test
    :return:
    """
    assert reader.create_from_catalog("truncated:n=4,k=1").vertices == \
        reader.create_polytope_from_data(reader.get_json_from_file("truncated_4_1.json")).vertices
    assert isinstance(reader.create_from_catalog("hexagon_configuration"), PointConfiguration)
    for spec in ("truncated:n=4;k=1", "truncated:n=four", "product:factors=2-1", "polygon",
                 "truncated:n=4,k=7", "simplex:m=2"):
        with pytest.raises(InputFormatError):
            reader.create_from_catalog(spec)
