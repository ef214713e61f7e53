# coding=utf-8
"""
Selftest module

Reference examples with known answers : the hexagon, 3Δ2, the cube, the Veronese and Segre
families, rational normal scrolls, Segre-Veronese varieties and the two subset examples.
Each case is computed and compared to its expected value, an exception counts as a failure.
"""
from typing import Dict, List, Callable, Any, Iterator, Tuple
import logging
import random

import libs.chow.chow as chow
import libs.polytope.family as family
import libs.secant.formulas as formulas
from libs.classify.classify import (classify, max_length2_vertex,
                                    is_subpolytope_of_doubled_simplex)
from libs.polytope.polytope import build_polytope, random_unimodular_map
from libs.secant.secant import analyze, analyze_points
from libs.utils.custom_exceptions import NotSmoothError

Case = Tuple[str, Any, Callable[[], Any]]


def _check(name: str, expected: Any, compute: Callable[[], Any]) -> Dict:
    try:
        computed = compute()
    except ValueError as error:
        computed = "{}: {}".format(type(error).__name__, error)
    passed = computed == expected
    logging.debug("Selftest: %s %s", name, "ok" if passed else "FAILED")
    return {"name": name, "expected": expected, "computed": computed, "passed": passed}


def _fields(report, *names: str) -> Tuple:
    return tuple(getattr(report, name) for name in names)


def _summary(report) -> Tuple:
    return repr(report.family), report.dim_sec, report.deg_sec, report.rhs


def _scroll_degrees(max_degree: int = 8, max_dim: int = 4) -> Iterator[Tuple[int, ...]]:
    """
    Non decreasing degrees, the scroll does not depend on their order
    """
    def _extend(prefix: Tuple[int, ...], remaining: int, length: int):
        if length == 0:
            yield prefix
            return
        start = prefix[-1] if prefix else 1
        for d in range(start, remaining - (length - 1) * start + 1):
            yield from _extend(prefix + (d,), remaining - d, length - 1)

    for n in range(1, max_dim + 1):
        yield from _extend((), max_degree, n)


def _invariance(polytope, seed: int, images: int = 20) -> bool:
    rng = random.Random(seed)
    label = classify(polytope)
    return all(classify(polytope.transform(random_unimodular_map(polytope.dim, rng))) == label
               for _ in range(images))


def _not_smooth_vertex():
    try:
        analyze(build_polytope([(0, 0), (2, 0), (0, 1)]))
    except NotSmoothError as error:
        return error.vertex
    return None


def _inverse_chern_of_projective_space() -> Tuple[int, int]:
    """
    c(P^3)^{-1} = (1 + H)^{-4} : the parts -4H and -20H^3
    """
    space = family.simplex(3)
    inverse = chow.inverse_total_chern(space.normal_fan)
    hyperplane = chow.hyperplane_class(space)
    return (int((inverse.part(1) * hyperplane ** 2).integrate()),
            int(inverse.part(3).integrate()))


def _truncated_ample_coefficients(n: int, k: int) -> Tuple[int, ...]:
    """
    Coefficients on e_1..e_n, on -(e_1 + ... + e_n) and on -(e_1 + ... + e_{k+1})
    """
    divisor = chow.ample_from_polytope(family.truncated(n, k))
    coefficients = dict(zip(divisor.fan.rays, divisor.coefficients))
    rays = [tuple(1 if j == i else 0 for j in range(n)) for i in range(n)]
    rays += [(-1,) * n, tuple(-1 if j <= k else 0 for j in range(n))]
    return tuple(coefficients[ray] for ray in rays)


def cases() -> Iterator[Case]:
    """
    The reference cases as (name, expected value, computation)
    """
    hexagon = family.hexagon()
    three_delta_two = family.simplex(2, 3)
    cube = family.cube(3)

    yield "hexagon", ("General(2)", 5, 3, 6), lambda: _summary(analyze(hexagon))
    yield "3Δ2", ("General(2)", 5, 15, 30), lambda: _summary(analyze(three_delta_two))
    yield ("3Δ2 surface formula", 15,
           lambda: formulas.surface_secant_degree(three_delta_two.stats))
    yield "3Δ2 d-uple formula", 15, lambda: formulas.d_uple_secant_degree(3, 2)
    yield "cube", ("General(3)", 7, 1, 2), lambda: _summary(analyze(cube))
    yield ("cube chern numbers", (48, 24),
           lambda: tuple(chow.chern_numbers(cube.normal_fan)[k] for k in ("c1^3", "c1c2")))
    yield "cube threefold formula", 1, lambda: formulas.threefold_secant_degree(cube.stats, 48)

    yield "hexagon hull", (6, 6), lambda: (len(hexagon.vertices), len(hexagon.facets))
    yield ("hexagon stats", (6, 6, 6, 7),
           lambda: _fields(hexagon.stats, "normalized_volume", "boundary_points", "vertices",
                           "lattice_points"))
    yield "hexagon surface formula", 3, lambda: formulas.surface_secant_degree(hexagon.stats)
    yield ("3Δ2 stats", (9, 9, 3, 1),
           lambda: _fields(three_delta_two.stats, "normalized_volume", "boundary_points",
                           "vertices", "interior_points"))
    yield ("cube stats", (8, 8, 0),
           lambda: _fields(cube.stats, "vertices", "edge_points", "interior_points"))
    yield ("P_1,2,2 long edge", 2,
           lambda: max(family.scroll(1, 2, 2).edge_length(e)
                       for e in family.scroll(1, 2, 2).edges))
    yield "Δ2 is its own secant", (2, 1), lambda: _fields(analyze(family.simplex(2)),
                                                          "dim_sec", "deg_sec")
    yield ("Δ1xΔ2 classification", "ProductOfSimplices(1, 2)",
           lambda: repr(classify(family.product([(1, 1), (1, 2)]))))
    yield ("3Δ2 and dΔ1 are not in 2Δn", (False, False, False),
           lambda: tuple(is_subpolytope_of_doubled_simplex(p) for p in (
               three_delta_two, family.simplex(1, 3), family.simplex(1, 5))))
    yield ("P^3 inverse chern degree 1 and 3", (-4, -20), _inverse_chern_of_projective_space)
    yield ("(2Δn)_k ends", (True, True, True, True),
           lambda: tuple(family.truncated(n, -1) == family.simplex(n, 2)
                         and family.truncated(n, n - 1) == family.simplex(n)
                         for n in (1, 2, 3, 4)))
    for n, k, rays in ((3, 0, 5), (4, 1, 6), (4, 2, 6)):
        yield ("(2Δ{})_{} normal fan rays".format(n, k), rays,
               lambda n=n, k=k: len(family.truncated(n, k).normal_fan.rays))
    for n, k, coefficients in ((3, 0, (0, 0, 0, 2, 1)), (4, 1, (0, 0, 0, 0, 2, 1))):
        yield ("(2Δ{})_{} ample coefficients".format(n, k), coefficients,
               lambda n=n, k=k: _truncated_ample_coefficients(n, k))

    for n, degree in ((2, 3), (3, 10), (4, 35)):
        yield ("2Δ{} Veronese".format(n), ("DoubledSimplex({})".format(n), 2 * n, degree, 0),
               lambda n=n: _summary(analyze(family.doubled_simplex(n))))
    yield ("Δ2xΔ2 Segre", ("ProductOfSimplices(2, 2)", 7, 3, 0),
           lambda: _summary(analyze(family.product([(1, 2), (1, 2)]))))
    for n in (2, 3, 4):
        yield ("Δ1xΔ{} Segre".format(n - 1), 1,
               lambda n=n: analyze(family.product([(1, 1), (1, n - 1)])).deg_sec)
    yield ("(2Δ3)_1 fills P^6", (6, 6, 1),
           lambda: _fields(analyze(family.truncated(3, 1)), "r", "dim_sec", "deg_sec"))
    yield ("(2Δ4)_1 classification", ("TruncatedDoubledSimplex(4, 1)", 2),
           lambda: (repr(classify(family.truncated(4, 1))),
                    max_length2_vertex(family.truncated(4, 1))[1]))

    for degrees in _scroll_degrees():
        n, d = len(degrees), sum(degrees)
        yield ("scroll {}".format("-".join(str(x) for x in degrees)),
               formulas.scroll_secant_rhs(n, d),
               lambda degrees=degrees: chow.secant_rhs(family.scroll(*degrees)))

    for degrees, dims in (((3,), (2,)), ((4,), (2,)), ((1, 2), (1, 1)), ((2, 2), (1, 1)),
                          ((1, 1, 1), (1, 1, 1)), ((1, 1, 2), (1, 1, 1))):
        polytope = family.product(list(zip(degrees, dims)))
        yield ("Segre-Veronese {};{}".format(degrees, dims),
               formulas.segre_veronese_secant_degree(degrees, dims),
               lambda polytope=polytope: chow.secant_rhs(polytope) // 2)

    for name, polytope, expected in (("hexagon", hexagon, (6, 7, 6)),
                                     ("(2Δ4)_1", family.truncated(4, 1), (11, 12, 9)),
                                     ("Δ2xΔ2", family.product([(1, 2), (1, 2)]), (6, 9, 9)),
                                     ("cube", cube, (6, 8, 8))):
        yield "{} AGL invariance".format(name), True, lambda p=polytope: _invariance(p, 2019)
        yield ("{} degree and lattice points".format(name), expected,
               lambda p=polytope: (chow.degree_of_embedding(p), chow.riemann_roch_count(p),
                                   int(chow.chern_class(p.normal_fan, p.dim).integrate())))

    yield ("3Δ2 without its center", (8, 5, "divides 15"),
           lambda: _fields(analyze_points(family.simplex_without_point(2, 3, (1, 1))),
                           "s", "dim_sec", "deg_constraint"))
    yield ("hexagon boundary points", (5, 5, 1, "divides 3"),
           lambda: _fields(analyze_points(family.hexagon_configuration()),
                           "s", "dim_sec", "deg_sec", "deg_constraint"))
    yield "not smooth triangle", (0, 1), _not_smooth_vertex


def run_all() -> List[Dict]:
    """
    Runs every reference case
    :return: one result per case
    """
    results = [_check(name, expected, compute) for name, expected, compute in cases()]
    logging.info("Selftest: %i/%i cases passed", sum(r["passed"] for r in results),
                 len(results))
    return results


if __name__ == '__main__':

    logging.getLogger().setLevel(logging.INFO)

    def selftest():
        """
        Test
        :return:
        """
        for result in run_all():
            print(result["name"], result["passed"])

    selftest()
