# coding=utf-8
"""
Reader module : Used to read polytope and point configuration files and catalog specs.

A polytope file is {"schema": 1, "vertices": [[...], ...]}, a configuration file is
{"schema": 1, "points": [[...], ...]}. The schema field may be omitted, any other field is
refused.
A catalog spec names a family of the catalog : "hexagon", "truncated:n=4,k=1",
"scroll:degrees=1-2-2", "product:factors=2x1-1x2".
"""
from typing import Dict, List, Union, Tuple, Any
import os
import json
import logging

from libs.polytope.polytope import LatticePolytope, PointConfiguration
from libs.polytope.family import make_family
from libs.utils.custom_exceptions import InputFormatError
from resources import DEFAULT_POLYTOPES_INPUT_FOLDER

SCHEMA_VERSION = 1
POLYTOPE_FIELD = "vertices"
POINTS_FIELD = "points"
REPORT_SUFFIX = ".report.json"


def get_list_from_folder(path: str = DEFAULT_POLYTOPES_INPUT_FOLDER) -> List[str]:
    """
    Returns the sorted names of the input json files of a folder, reports excluded
    :param path
    :return:
    """
    return sorted(filename for filename in os.listdir(path)
                  if filename.endswith(".json") and not filename.endswith(REPORT_SUFFIX))


def read_document(file_path: str) -> Dict:
    """
    Reads a json document
    :param file_path:
    :return:
    """
    try:
        with open(os.path.abspath(file_path)) as input_file:
            return json.load(input_file)
    except json.JSONDecodeError as error:
        raise InputFormatError("Reader: {} is not valid json ({})".format(file_path, error))
    except OSError as error:
        raise InputFormatError("Reader: cannot read {} ({})".format(file_path, error))


def get_json_from_file(file_name: str = 'hexagon.json',
                       input_folder: str = DEFAULT_POLYTOPES_INPUT_FOLDER) -> Dict:
    """
    Retrieves the data dictionary from a file of the resources folder
    :return:
    """
    if not file_name.endswith(".json"):
        raise InputFormatError("Reader: the filename must have a .json extension")
    return read_document(os.path.join(input_folder, file_name))


def check_document(document: Any, field: str) -> List:
    """
    Strict parsing of a versioned document holding a single list of points
    :param document:
    :param field: "vertices" or "points"
    :return: the list of points
    """
    if not isinstance(document, dict):
        raise InputFormatError("Reader: a json object is expected, got {}"
                               .format(type(document).__name__))
    unknown = sorted(set(document) - {"schema", field})
    if unknown:
        raise InputFormatError("Reader: unknown fields {}".format(unknown))
    schema = document.get("schema", SCHEMA_VERSION)
    if isinstance(schema, bool) or schema != SCHEMA_VERSION:
        raise InputFormatError("Reader: unsupported schema {!r}".format(schema))
    if field not in document:
        raise InputFormatError("Reader: the field {!r} is missing".format(field))
    points = document[field]
    if not isinstance(points, list):
        raise InputFormatError("Reader: {!r} must be a list of points".format(field))
    return points


def document_field(document: Any) -> str:
    """
    The field holding the points of a document
    """
    if isinstance(document, dict) and POINTS_FIELD in document:
        return POINTS_FIELD
    return POLYTOPE_FIELD


def create_polytope_from_data(document: Dict) -> LatticePolytope:
    """
    Creates a polytope from a polytope document, or the convex hull of a configuration document
    """
    field = document_field(document)
    return LatticePolytope.from_vertices(check_document(document, field))


def create_points_from_data(document: Dict) -> PointConfiguration:
    """
    Creates a point configuration from a configuration document
    """
    return PointConfiguration(check_document(document, POINTS_FIELD))


def create_polytope_from_file(file_path: str) -> LatticePolytope:
    """
    Creates a polytope from the data retrieved from the given file
    :param file_path: the path to a json file
    :return: a polytope
    """
    return create_polytope_from_data(read_document(file_path))


def create_points_from_file(file_path: str) -> PointConfiguration:
    """
    Creates a point configuration from the data retrieved from the given file
    """
    return create_points_from_data(read_document(file_path))


def parse_value(key: str, value: str) -> Union[int, List]:
    """
    A family parameter : "2x1-1x2" for factors, "1-2-2" for degrees, an integer otherwise
    """
    try:
        if key == "factors":
            factors = [tuple(int(x) for x in factor.split("x")) for factor in value.split("-")]
            if any(len(factor) != 2 for factor in factors):
                raise ValueError(value)
            return factors
        if key == "degrees":
            return [int(x) for x in value.split("-")]
        return int(value)
    except ValueError:
        raise InputFormatError("Reader: bad value {!r} for {!r}".format(value, key))


def parse_catalog_spec(spec: str) -> Tuple[str, Dict]:
    """
    Splits a catalog spec "name:key=value,key=value" into the family name and its parameters
    :param spec:
    :return:
    """
    name, _, arguments = spec.partition(":")
    params = {}
    for argument in filter(None, arguments.split(",")):
        key, equal, value = argument.partition("=")
        if not equal:
            raise InputFormatError("Reader: catalog argument {!r} is not key=value"
                                   .format(argument))
        params[key.strip()] = parse_value(key.strip(), value.strip())
    logging.debug("Reader: catalog spec %s -> %s %s", spec, name, params)
    return name.strip(), params


def create_from_catalog(spec: str) -> Union[LatticePolytope, PointConfiguration]:
    """
    Builds the family named by a catalog spec
    """
    name, params = parse_catalog_spec(spec)
    return make_family(name, **params)


def load_input(source: str) -> Union[Dict, str]:
    """
    The json document of a file, or the source itself when it is not a file (a catalog spec)
    :param source:
    :return:
    """
    if os.path.isfile(source):
        return read_document(source)
    return source


if __name__ == '__main__':

    logging.getLogger().setLevel(logging.DEBUG)

    def polytope_read():
        """
        Test
        :return:
        """
        hexagon = create_polytope_from_data(get_json_from_file("hexagon.json"))
        print(hexagon, hexagon.stats)
        print(create_from_catalog("truncated:n=4,k=1"))

    polytope_read()
