# coding=utf-8
"""
Writer module : Used to render reports as json or as aligned tables and to save them.

Integers beyond 2^53 are written as strings in json so that every reader gets them exactly.
Keys are sorted and points keep their lexicographic order : identical inputs give identical
bytes.
"""
from typing import Dict, Optional, List, Tuple, Any
from fractions import Fraction
import os
import json
import tempfile
import logging

from output import DEFAULT_REPORTS_OUTPUT_FOLDER

JSON_SAFE_INTEGER = 2 ** 53


def json_friendly(data: Any) -> Any:
    """
    Copy of the data where tuples become lists and big integers become strings.
    A fraction is written as an integer when its denominator is 1, as "p/q" otherwise.
    :param data:
    :return:
    """
    if isinstance(data, bool) or data is None or isinstance(data, str):
        return data
    if isinstance(data, int):
        return str(data) if abs(data) > JSON_SAFE_INTEGER else data
    if isinstance(data, Fraction):
        return json_friendly(data.numerator) if data.denominator == 1 else str(data)
    if isinstance(data, dict):
        return {str(key): json_friendly(value) for key, value in data.items()}
    if isinstance(data, (list, tuple)):
        return [json_friendly(value) for value in data]
    raise TypeError("Writer: cannot serialize {!r}".format(data))


def to_json(data: Dict) -> str:
    """
    Deterministic json text of a report
    """
    return json.dumps(json_friendly(data), sort_keys=True, indent=2, ensure_ascii=False)


def _is_point_list(value: Any) -> bool:
    return (isinstance(value, (list, tuple)) and bool(value)
            and all(isinstance(p, (list, tuple)) for p in value))


def _render_scalar(value: Any) -> str:
    if isinstance(value, bool):
        return "true" if value else "false"
    if value is None:
        return "-"
    if isinstance(value, Fraction) and value.denominator == 1:
        return str(value.numerator)
    if isinstance(value, (list, tuple)):
        return "(" + ", ".join(_render_scalar(x) for x in value) + ")"
    return str(value)


def _rows(data: Any, prefix: str = "") -> List[Tuple[str, str]]:
    if isinstance(data, dict):
        rows = []
        for key in sorted(data, key=str):
            name = "{}.{}".format(prefix, key) if prefix else str(key)
            rows += _rows(data[key], name)
        return rows
    if _is_point_list(data):
        return [(prefix if i == 0 else "", _render_scalar(p)) for i, p in enumerate(data)]
    if isinstance(data, (list, tuple)) and data and all(isinstance(x, dict) for x in data):
        rows = []
        for i, value in enumerate(data):
            rows += _rows(value, "{}[{}]".format(prefix, i))
        return rows
    if isinstance(data, (list, tuple)):
        return [(prefix, " ".join(_render_scalar(x) for x in data))]
    return [(prefix, _render_scalar(data))]


def to_table(data: Dict) -> str:
    """
    Two aligned columns : the dotted key and the exact value
    :param data:
    :return:
    """
    rows = _rows(data)
    if not rows:
        return ""
    width = max(len(key) for key, _ in rows)
    return "\n".join("{}  {}".format(key.ljust(width), value).rstrip() for key, value in rows)


def render(data: Dict, output_format: str = "json") -> str:
    """
    Renders a report in the given format
    :param data:
    :param output_format: json or table
    :return:
    """
    if output_format == "table":
        return to_table(data)
    return to_json(data)


def save_as_json(data: Dict, output_folder: str = DEFAULT_REPORTS_OUTPUT_FOLDER,
                 file_name: Optional[str] = None) -> str:
    """
    Saves the data to a json file. The file is written next to its destination and moved in
    place so that a reader never sees a partial file.
    :param data:
    :param output_folder:
    :param file_name:
    :return: the path of the file
    """
    file_name = file_name or "unnamed.json"
    if not file_name.endswith(".json"):
        file_name += ".json"
    if not os.path.exists(output_folder):
        os.makedirs(output_folder, exist_ok=True)
    output_path = os.path.join(output_folder, file_name)

    descriptor, temp_path = tempfile.mkstemp(dir=output_folder, suffix=".tmp")
    try:
        with os.fdopen(descriptor, 'w') as fp:
            fp.write(to_json(data))
            fp.write("\n")
        os.replace(temp_path, output_path)
    except BaseException:
        if os.path.exists(temp_path):
            os.remove(temp_path)
        raise
    logging.debug("Writer: saved %s", output_path)
    return output_path
