# coding=utf-8
"""
Formulas module

Closed formulas for the dimension and the degree of secant varieties of smooth toric varieties :
• the four defective families (Veronese, truncated doubled simplices, Segre products),
• rational normal scrolls,
• surfaces and threefolds from the combinatorics of their polytope,
• Segre-Veronese varieties.

Every function works on exact integers and raises a HypothesisError when used outside the
range where the formula holds.
"""
from typing import Sequence, List
from fractions import Fraction
import itertools
import logging
import math

from libs.polytope.polytope import PolytopeStats
from libs.utils.custom_exceptions import HypothesisError, InputFormatError, ConsistencyError


def _check_integer(name: str, value: int, minimum: int):
    if isinstance(value, bool) or not isinstance(value, int) or value < minimum:
        raise InputFormatError("Formulas: {} must be an integer >= {}, got {!r}"
                               .format(name, minimum, value))


def _half(value: int, what: str) -> int:
    if value % 2:
        raise ConsistencyError("Formulas: {} = {} is odd".format(what, value))
    return value // 2


def expected_secant_dimension(n: int, r: int) -> int:
    """
    min{r, 2n + 1}
    """
    return min(r, 2 * n + 1)


def veronese_secant_degree(n: int) -> int:
    """
    Degree of the secant variety of the Veronese embedding v_2(P^n) : binom(2n - 1, n - 1)
    :param n:
    :return:
    """
    _check_integer("n", n, 1)
    return math.comb(2 * n - 1, n - 1)


def truncated_table_sum(n: int, k: int) -> int:
    """
    The double sum over 1 <= i < j <= n-k of
    binom(n, n-i) binom(n-1, n-j) - binom(n, n-j) binom(n-1, n-i)
    :param n:
    :param k:
    :return:
    """
    return sum(math.comb(n, n - i) * math.comb(n - 1, n - j)
               - math.comb(n, n - j) * math.comb(n - 1, n - i)
               for i in range(1, n - k + 1) for j in range(i + 1, n - k + 1))


def truncated_secant_degree(n: int, k: int) -> int:
    """
    Degree of the secant variety of the toric variety of (2Δn)_k.
    For k = n - 2 the secant variety fills P^{2n} and the degree is 1.
    :param n:
    :param k: 0 <= k <= n - 2
    :return:
    """
    _check_integer("n", n, 2)
    if isinstance(k, bool) or not isinstance(k, int) or not 0 <= k <= n - 2:
        raise InputFormatError("Formulas: truncation index k={!r} outside [0, {}]"
                               .format(k, n - 2))
    if k == n - 2:
        return 1
    return truncated_table_sum(n, k)


def product_secant_degree(ell: int, n: int) -> int:
    """
    Degree of the secant variety of the Segre embedding of P^ell x P^{n-ell} :
    ∏_{i=0}^{n-ell-2} binom(ell+1+i, 2) / binom(2+i, 2)
    :param ell: 1 <= ell <= n - 1
    :param n:
    :return:
    """
    _check_integer("ell", ell, 1)
    if isinstance(n, bool) or not isinstance(n, int) or n <= ell:
        raise InputFormatError("Formulas: product P^{} x P^{} is not valid".format(ell, n - ell))
    value = Fraction(1)
    for i in range(n - ell - 1):
        value *= Fraction(math.comb(ell + 1 + i, 2), math.comb(2 + i, 2))
    if value.denominator != 1:
        raise ConsistencyError("Formulas: product degree {} is not an integer".format(value))
    return int(value)


def scroll_secant_rhs(n: int, d: int) -> int:
    """
    Right hand side of the double point formula for a rational normal scroll of dimension n and
    degree d : d^2 - (2n+1) d + n (n+1). It vanishes exactly for d = n and d = n + 1.
    :param n:
    :param d: d >= n
    :return:
    """
    _check_integer("n", n, 1)
    if isinstance(d, bool) or not isinstance(d, int) or d < n:
        raise InputFormatError("Formulas: a scroll of dimension {} has degree >= {}, got {!r}"
                               .format(n, n, d))
    return d * d - (2 * n + 1) * d + n * (n + 1)


def scroll_secant_degree(*degrees: int) -> int:
    """
    Degree of the secant variety of the scroll S_{d_1..d_n}.
    For d = n the scroll is P^1 x P^{n-1}, for d = n + 1 it is the toric variety of
    (2Δn)_{n-2}, in both cases the secant variety fills its span and the degree is 1.
    :param degrees:
    :return:
    """
    if not degrees:
        raise InputFormatError("Formulas: a scroll needs at least one degree")
    for d in degrees:
        _check_integer("d_i", d, 1)
    n, d = len(degrees), sum(degrees)
    if d < n + 2:
        return 1
    return _half(scroll_secant_rhs(n, d), "scroll right hand side")


def surface_rhs(stats: PolytopeStats) -> int:
    """
    d^2 - 10d + 5B + 2V - 12 for a smooth polygon
    """
    if stats.dimension != 2:
        raise HypothesisError("Formulas: the surface formula needs a polygon")
    d = stats.normalized_volume
    return d * d - 10 * d + 5 * stats.boundary_points + 2 * stats.vertices - 12


def surface_secant_degree(stats: PolytopeStats, general: bool = True) -> int:
    """
    Degree of the secant variety of a smooth toric surface with dim Sec = 5 :
    (d^2 - 10d + 5B + 2V - 12) / 2
    :param stats: the polygon statistics
    :param general: False when the polygon belongs to one of the defective families
    :return:
    """
    value = surface_rhs(stats)
    if not general or value == 0:
        raise HypothesisError("Formulas: the surface formula requires dim Sec = 5")
    return _half(value, "surface right hand side")


def threefold_rhs(stats: PolytopeStats, c1_cubed: int) -> int:
    """
    d^2 - 21d + c_1^3 + 8V + 14E - 84I - 132 for a smooth 3-polytope
    """
    if stats.dimension != 3:
        raise HypothesisError("Formulas: the threefold formula needs a 3-polytope")
    d = stats.normalized_volume
    return (d * d - 21 * d + c1_cubed + 8 * stats.vertices + 14 * stats.edge_points
            - 84 * stats.interior_points - 132)


def threefold_secant_degree(stats: PolytopeStats, c1_cubed: int, general: bool = True) -> int:
    """
    Degree of the secant variety of a smooth toric threefold with dim Sec = 7
    :param stats: the polytope statistics
    :param c1_cubed: ∫ c_1^3
    :param general: False when the polytope belongs to one of the defective families
    :return:
    """
    value = threefold_rhs(stats, c1_cubed)
    if not general or value == 0:
        raise HypothesisError("Formulas: the threefold formula requires dim Sec = 7")
    return _half(value, "threefold right hand side")


def _multinomial(parts: Sequence[int]) -> int:
    value = math.factorial(sum(parts))
    for part in parts:
        value //= math.factorial(part)
    return value


def segre_veronese_rhs(degrees: Sequence[int], dims: Sequence[int]) -> int:
    """
    Right hand side of the double point formula for P^{n_1} x ... x P^{n_k} embedded by
    O(d_1, ..., d_k)
    :param degrees: d_1, ..., d_k
    :param dims: n_1, ..., n_k
    :return:
    """
    if len(degrees) != len(dims) or not degrees:
        raise InputFormatError("Formulas: degrees {} and dimensions {} do not match"
                               .format(list(degrees), list(dims)))
    for d in degrees:
        _check_integer("d_i", d, 1)
    for n_i in dims:
        _check_integer("n_i", n_i, 1)
    n = sum(dims)
    degree = _multinomial(dims)
    for d, n_i in zip(degrees, dims):
        degree *= d ** n_i

    correction = 0
    for ell in range(n + 1):
        inner = 0
        for shifts in itertools.product(*(range(n_i + 1) for n_i in dims)):
            if sum(shifts) != n - ell:
                continue
            term = _multinomial([n_i - j for n_i, j in zip(dims, shifts)])
            for d, n_i, j in zip(degrees, dims, shifts):
                term *= math.comb(n_i + j, j) * d ** (n_i - j)
            inner += term
        correction += math.comb(2 * n + 1, ell) * (-1) ** (n - ell) * inner
    return degree * degree - correction


def segre_veronese_secant_degree(degrees: Sequence[int], dims: Sequence[int]) -> int:
    """
    Degree of the secant variety of a Segre-Veronese variety with Σ d_i >= 3
    :param degrees: d_1, ..., d_k
    :param dims: n_1, ..., n_k
    :return:
    """
    if sum(degrees) < 3:
        raise HypothesisError("Formulas: the Segre-Veronese formula requires Σ d_i >= 3, got {}"
                              .format(list(degrees)))
    value = segre_veronese_rhs(degrees, dims)
    logging.debug("Formulas: Segre-Veronese %s %s right hand side %i", degrees, dims, value)
    return _half(value, "Segre-Veronese right hand side")


def d_uple_secant_degree(d: int, n: int) -> int:
    """
    Degree of the secant variety of the d-uple embedding of P^n, d >= 3 :
    (d^{2n} - Σ_{j=0}^{n} (-1)^{n-j} d^j binom(2n+1, j) binom(2n-j, n-j)) / 2
    :param d:
    :param n:
    :return:
    """
    _check_integer("d", d, 1)
    _check_integer("n", n, 1)
    if d < 3:
        raise HypothesisError("Formulas: the d-uple formula requires d >= 3, got {}".format(d))
    correction = sum((-1) ** (n - j) * d ** j
                     * math.comb(2 * n + 1, j) * math.comb(2 * n - j, n - j)
                     for j in range(n + 1))
    return _half(d ** (2 * n) - correction, "d-uple right hand side")


def segre_secant_degree(n: int) -> int:
    """
    Degree of the secant variety of the Segre embedding of (P^1)^n, n >= 3 :
    ((n!)^2 - Σ_{j=0}^{n} binom(2n+1, j) binom(n, n-j) j! (-2)^{n-j}) / 2
    :param n:
    :return:
    """
    _check_integer("n", n, 1)
    if n < 3:
        raise HypothesisError("Formulas: the Segre formula requires n >= 3, got {}".format(n))
    correction = sum(math.comb(2 * n + 1, j) * math.comb(n, n - j) * math.factorial(j)
                     * (-2) ** (n - j) for j in range(n + 1))
    return _half(math.factorial(n) ** 2 - correction, "Segre right hand side")


def expected_dimension_exceptions(n: int) -> List[str]:
    """
    The polytopes of dimension n whose toric variety does not have a secant variety of the
    expected dimension min{r, 2n+1}
    :param n:
    :return:
    """
    _check_integer("n", n, 1)
    exceptions = []
    if n >= 2:
        exceptions.append("DoubledSimplex({})".format(n))
    exceptions += ["TruncatedDoubledSimplex({}, {})".format(n, k) for k in range(n - 2)]
    exceptions += ["ProductOfSimplices({}, {})".format(ell, n - ell)
                   for ell in range(2, n // 2 + 1)]
    return exceptions
