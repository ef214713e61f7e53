# coding=utf-8
"""
Family module

Catalog of the named polytope families :
• dilated simplices r·Δn,
• truncated doubled simplices (2Δn)_k,
• products of dilated simplices d_1Δ_{n_1} x ... x d_kΔ_{n_k},
• scroll polytopes P_{d_1..d_n} and their lattice point configurations A_{d_1..d_n},
• the hexagon and the unit cube.

FAMILIES maps a family name to its builder, make_family builds from a name and parameters.
"""
from typing import Sequence, Tuple, List, Dict, Callable, Union
import itertools
import logging

from libs.polytope.polytope import LatticePolytope, PointConfiguration
from libs.utils.custom_types import IntVec
from libs.utils.custom_exceptions import InputFormatError

HEXAGON_POINTS = ((0, 0), (1, 0), (0, 1), (2, 1), (1, 2), (2, 2))


def _unit(n: int, i: int, scale: int = 1) -> IntVec:
    return tuple(scale if j == i else 0 for j in range(n))


def _check_positive(name: str, value: int, minimum: int = 1):
    if isinstance(value, bool) or not isinstance(value, int) or value < minimum:
        raise InputFormatError("Family: parameter {} must be an integer >= {}, got {!r}"
                               .format(name, minimum, value))


def product(factors: Sequence[Tuple[int, int]]) -> LatticePolytope:
    """
    Product of dilated simplices d_1Δ_{n_1} x ... x d_kΔ_{n_k}, coordinates grouped by factor
    :param factors: pairs (d_i, n_i)
    :return:
    """
    if not factors:
        raise InputFormatError("Family: a product needs at least one factor")
    for d, n in factors:
        _check_positive("d", d)
        _check_positive("n", n)
    dim = sum(n for _, n in factors)

    blocks = []
    inequalities = []
    start = 0
    for d, n in factors:
        block = [_unit(n, -1, 0)] + [_unit(n, i, d) for i in range(n)]
        blocks.append(block)
        for i in range(start, start + n):
            inequalities.append((_unit(dim, i), 0))
        inequalities.append((tuple(-1 if start <= j < start + n else 0 for j in range(dim)), d))
        start += n

    vertices = [sum(choice, ()) for choice in itertools.product(*blocks)]
    logging.debug("Family: product %s with %i vertices", list(factors), len(vertices))
    return LatticePolytope(vertices, inequalities)


def simplex(n: int, r: int = 1) -> LatticePolytope:
    """
    The dilated standard simplex r·Δn
    :param n:
    :param r:
    :return:
    """
    return product([(r, n)])


def doubled_simplex(n: int) -> LatticePolytope:
    """
    2Δn
    """
    return simplex(n, 2)


def truncated(n: int, k: int) -> LatticePolytope:
    """
    (2Δn)_k : convex hull of the lattice points of 2Δn not lying on the face
    conv(2e_1, ..., 2e_{k+1}).
    (2Δn)_{-1} = 2Δn and (2Δn)_{n-1} = Δn.
    :param n:
    :param k: -1 <= k <= n - 1
    :return:
    """
    _check_positive("n", n)
    if isinstance(k, bool) or not isinstance(k, int) or not -1 <= k <= n - 1:
        raise InputFormatError("Family: truncation index k={!r} outside [-1, {}]".format(k, n - 1))
    if k == -1:
        return simplex(n, 2)
    if k == n - 1:
        return simplex(n, 1)
    short = range(k + 1)
    long = range(k + 1, n)
    points = [_unit(n, -1, 0)]
    points += [_unit(n, i) for i in short]
    points += [_unit(n, j, 2) for j in long]
    points += [tuple(a + b for a, b in zip(_unit(n, i), _unit(n, j))) for i in short for j in long]
    return LatticePolytope.from_vertices(points)


def _scroll_points(degrees: Sequence[int]) -> List[IntVec]:
    """
    The configuration A_{d_1..d_n} ⊂ Z^{n-1} x Z : the columns v_i + a·e_n with 0 <= a <= d_i,
    where v_i = e_i for i < n and v_n = 0
    """
    if not degrees:
        raise InputFormatError("Family: a scroll needs at least one degree")
    for d in degrees:
        _check_positive("d_i", d)
    n = len(degrees)
    points = []
    for i, d in enumerate(degrees):
        base = _unit(n - 1, i) if i < n - 1 else _unit(n - 1, -1, 0)
        points.extend(base + (a,) for a in range(d + 1))
    return points


def scroll(*degrees: int) -> LatticePolytope:
    """
    The scroll polytope P_{d_1..d_n}
    :param degrees:
    :return:
    """
    points = _scroll_points(degrees)
    n = len(degrees)
    corners = [p for p in points if p[-1] == 0 or p[-1] == degrees[_column(p, n)]]
    return LatticePolytope.from_vertices(corners)


def _column(point: IntVec, n: int) -> int:
    return next((i for i in range(n - 1) if point[i] == 1), n - 1)


def scroll_configuration(*degrees: int) -> PointConfiguration:
    """
    The configuration A_{d_1..d_n} : all the lattice points of P_{d_1..d_n}
    """
    return PointConfiguration(_scroll_points(degrees))


def hexagon() -> LatticePolytope:
    """
    The smooth hexagon, polytope of the del Pezzo surface of degree 6
    """
    return LatticePolytope.from_vertices(HEXAGON_POINTS)


def hexagon_configuration() -> PointConfiguration:
    """
    The six boundary points of the hexagon (its center is left out)
    """
    return PointConfiguration(HEXAGON_POINTS)


def cube(n: int) -> LatticePolytope:
    """
    The unit cube Δ1^n
    """
    _check_positive("n", n)
    return product([(1, 1)] * n)


def simplex_without_point(n: int, r: int, point: Sequence[int]) -> PointConfiguration:
    """
    The lattice points of r·Δn with one point removed
    :param n:
    :param r:
    :param point:
    :return:
    """
    points = [p for p in simplex(n, r).lattice_points if p != tuple(point)]
    if len(points) == len(simplex(n, r).lattice_points):
        raise InputFormatError("Family: {} is not a lattice point of {}Δ{}"
                               .format(tuple(point), r, n))
    return PointConfiguration(points)


FAMILIES = {
    "simplex": simplex,
    "doubled_simplex": doubled_simplex,
    "truncated": truncated,
    "product": product,
    "scroll": scroll,
    "scroll_configuration": scroll_configuration,
    "hexagon": hexagon,
    "hexagon_configuration": hexagon_configuration,
    "cube": cube,
}  # type: Dict[str, Callable[..., Union[LatticePolytope, PointConfiguration]]]


def make_family(name: str, **params) -> Union[LatticePolytope, PointConfiguration]:
    """
    Builds a named family.
    Parameters : n, r for simplex, n, k for truncated, factors for product (list of (d, n)),
    degrees for scroll and scroll_configuration, n for cube
    :param name:
    :param params:
    :return:
    """
    if name not in FAMILIES:
        raise InputFormatError("Family: unknown family {!r}, available : {}"
                               .format(name, ", ".join(sorted(FAMILIES))))
    builder = FAMILIES[name]
    try:
        if name in ("scroll", "scroll_configuration"):
            return builder(*params.pop("degrees"), **params)
        return builder(**params)
    except (TypeError, KeyError) as error:
        raise InputFormatError("Family: bad parameters {} for {} ({})"
                               .format(params, name, error))


if __name__ == '__main__':

    logging.getLogger().setLevel(logging.DEBUG)

    def catalog():
        """
        Test
        :return:
        """
        for polytope in (truncated(4, 1), scroll(1, 2, 2), product([(2, 1), (1, 2)])):
            print(polytope, polytope.is_smooth)

    catalog()
