# coding=utf-8
"""
Verbs module

One handler per command line verb. A handler takes the task definition and returns the
Response holding the report payload and the exit code.
The input of a task is either a json document or a catalog spec, see libs.io.reader.
"""
from typing import Dict, Callable, Union
import logging

import libs.chow.chow as chow
import libs.io.reader as reader
import libs.cli.selftest as selftest
from libs.classify.classify import classify
from libs.executor.defs import TaskDefinition, Response
from libs.polytope.family import make_family, FAMILIES
from libs.polytope.polytope import LatticePolytope, PointConfiguration
from libs.secant.secant import analyze, analyze_points

EXIT_HYPOTHESIS = 4
EXIT_CONSISTENCY = 5


def _catalog(td: TaskDefinition) -> Union[LatticePolytope, PointConfiguration]:
    """
    The family named by the task, its parameters come from the catalog spec or from params
    """
    name, params = reader.parse_catalog_spec(td.document)
    params.update(td.params.get("family_params") or {})
    return make_family(name, **params)


def _polytope(td: TaskDefinition) -> LatticePolytope:
    """
    The polytope of the task, the convex hull when the input is a configuration
    """
    if isinstance(td.document, str):
        built = _catalog(td)
        return built.hull if isinstance(built, PointConfiguration) else built
    return reader.create_polytope_from_data(td.document)


def _configuration(td: TaskDefinition) -> PointConfiguration:
    """
    The point configuration of the task, all the lattice points for a catalog polytope
    """
    if isinstance(td.document, str):
        built = _catalog(td)
        return built if isinstance(built, PointConfiguration) else PointConfiguration(
            built.lattice_points)
    return reader.create_points_from_data(td.document)


def _debug_all_vertices(td: TaskDefinition) -> bool:
    return bool(td.params.get("debug_all_vertices", False))


def run_analyze(td: TaskDefinition) -> Response:
    """
    Secant report of a smooth polytope, a failed cross-check gives the consistency exit code
    """
    report = analyze(_polytope(td), debug_all_vertices=_debug_all_vertices(td))
    exit_code = EXIT_CONSISTENCY if report.failed_checks else 0
    return Response(report.serialize(), exit_code)


def run_classify(td: TaskDefinition) -> Response:
    """
    Family of a smooth polytope
    """
    label = classify(_polytope(td).require_smooth(), debug_all_vertices=_debug_all_vertices(td))
    return Response(label.serialize())


def run_points(td: TaskDefinition) -> Response:
    """
    The lattice points, written as a configuration document
    """
    polytope = _polytope(td)
    return Response({"schema": reader.SCHEMA_VERSION,
                     reader.POINTS_FIELD: [list(p) for p in polytope.lattice_points]})


def run_volume(td: TaskDefinition) -> Response:
    """
    Normalized volume and the other lattice statistics
    """
    polytope = _polytope(td)
    return Response({"normalized_volume": polytope.normalized_volume,
                     "stats": polytope.stats.serialize()})


def run_chow(td: TaskDefinition) -> Response:
    """
    Intersection numbers of the toric variety of a smooth polytope, the table of every
    monomial in the boundary divisors is added when the intersection_table param is set
    """
    polytope = _polytope(td).require_smooth()
    n = polytope.dim
    fan = polytope.normal_fan
    c_1 = chow.chern_class(fan, 1)
    payload = {
        "n": n,
        "c1^n": chow.as_integer((c_1 ** n).integrate(), "c1^n"),
        "rhs": chow.secant_rhs(polytope),
        "todd_count": chow.riemann_roch_count(polytope),
        "euler": chow.as_integer(chow.chern_class(fan, n).integrate(), "c_n"),
        "chern_numbers": chow.chern_numbers(fan),
        "intersections": chow.polytope_intersections(polytope),
    }
    if td.params.get("intersection_table", False):
        payload["intersection_table"] = chow.named_intersection_table(fan)
    return Response(payload)


def run_subset(td: TaskDefinition) -> Response:
    """
    Subset report of a configuration, a violated hypothesis gives its own exit code
    """
    report = analyze_points(_configuration(td), debug_all_vertices=_debug_all_vertices(td))
    exit_code = 0 if report.hypothesis_ok else EXIT_HYPOTHESIS
    if report.polytope_report is not None and report.polytope_report.failed_checks:
        exit_code = EXIT_CONSISTENCY
    return Response(report.serialize(), exit_code)


def run_catalog(td: TaskDefinition) -> Response:
    """
    A family of the catalog written as an input document, the family names without a name
    """
    td.document = td.params.get("family") or td.document
    if not isinstance(td.document, str) or not td.document:
        return Response({"families": sorted(FAMILIES)})
    payload = {"schema": reader.SCHEMA_VERSION}
    payload.update(_catalog(td).serialize())
    return Response(payload)


def run_selftest(td: TaskDefinition) -> Response:
    """
    Runs the reference examples
    """
    results = selftest.run_all()
    failed = [result["name"] for result in results if not result["passed"]]
    for name in failed:
        logging.error("Selftest: %s failed", name)
    payload = {"passed": len(results) - len(failed), "failed": failed, "cases": results}
    return Response(payload, EXIT_CONSISTENCY if failed else 0)


VERBS = {
    "analyze": run_analyze,
    "classify": run_classify,
    "points": run_points,
    "volume": run_volume,
    "chow": run_chow,
    "subset": run_subset,
    "catalog": run_catalog,
    "selftest": run_selftest,
}  # type: Dict[str, Callable[[TaskDefinition], Response]]
