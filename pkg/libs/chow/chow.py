# coding=utf-8
"""
Chow module

Exact intersection theory on the smooth projective toric variety X of a complete smooth fan.

Classes are polynomials in the boundary divisors D_ρ with rational coefficients, truncated above
the dimension n. The divisors of the rays of one fixed maximal cone are eliminated by linear
equivalence so that the polynomials only involve Picard rank many variables. Intersection numbers
of monomials are computed by multiplying orbit closures [V(σ)] one divisor at a time.

The module exposes :
• integrate_monomial : intersection number of a monomial in the D_ρ,
• total_chern, inverse_total_chern, todd : characteristic classes,
• ample_from_polytope, degree_of_embedding, riemann_roch_count, secant_rhs : polytope level numbers.
• intersection_table, named_intersection_table : every nonzero top degree monomial.
"""
from typing import Sequence, Dict, List, Optional, Union, Tuple
from fractions import Fraction
import itertools
import logging
import math

import sympy
from sympy import QQ
from sympy.polys.rings import xring, PolyElement

from libs.chow.fan import Fan
from libs.polytope.polytope import LatticePolytope
from libs.utils.custom_types import Cone, Exponents
from libs.utils.custom_exceptions import NotSmoothError, LatticeError, ConsistencyError

Rational = Union[int, Fraction]


def _check_fan(fan: Fan):
    if not fan.is_smooth():
        raise NotSmoothError("Chow: the fan is not smooth")
    if not fan.is_complete():
        raise LatticeError("Chow: the fan is not complete")


def _multiply_divisor(fan: Fan, ray: int, state: Dict[Cone, Fraction]) -> Dict[Cone, Fraction]:
    """
    D_ray · Σ c_σ [V(σ)]
    :param fan:
    :param ray:
    :param state: rational combination of orbit closures
    :return:
    """
    result = {}

    def _add(cone: Cone, coefficient: Fraction):
        value = result.get(cone, 0) + coefficient
        if value:
            result[cone] = value
        else:
            result.pop(cone, None)

    for cone, coefficient in state.items():
        if ray not in cone:
            larger = cone | {ray}
            if fan.is_cone(larger):
                _add(larger, coefficient)
            continue
        # D_ray ≡ Σ c D_other on V(cone), with the others outside the cone
        for other, factor in fan.linear_relation(ray, cone).items():
            larger = cone | {other}
            if fan.is_cone(larger):
                _add(larger, coefficient * factor)
    return result


def integrate_factors(fan: Fan, factors: Sequence[int]) -> Fraction:
    """
    Intersection number of the product of the divisors D_ρ for ρ in factors, multiplied in the
    given order
    :param fan:
    :param factors: ray indices, exactly n of them
    :return:
    """
    if len(factors) != fan.dim:
        raise LatticeError("Chow: {} divisors cannot be intersected on a variety of dimension {}"
                           .format(len(factors), fan.dim))
    state = {frozenset(): Fraction(1)}
    for ray in factors:
        state = _multiply_divisor(fan, ray, state)
        if not state:
            return Fraction(0)
    return sum((c for cone, c in state.items() if len(cone) == fan.dim), Fraction(0))


def integrate_monomial(fan: Fan, exponents: Sequence[int]) -> Fraction:
    """
    Intersection number D_0^{a_0} ··· D_m^{a_m}
    :param fan: a smooth complete fan
    :param exponents: one nonnegative exponent per ray, summing to n
    :return:
    """
    exponents = tuple(exponents)
    if len(exponents) != len(fan.rays) or any(a < 0 for a in exponents):
        raise LatticeError("Chow: exponents {} do not match the {} rays"
                           .format(exponents, len(fan.rays)))
    memo = fan.cache.setdefault("monomials", {})
    if exponents not in memo:
        if "checked" not in fan.cache:
            _check_fan(fan)
            fan.cache["checked"] = True
        factors = [ray for ray, a in enumerate(exponents) for _ in range(a)]
        memo[exponents] = integrate_factors(fan, factors)
    return memo[exponents]


class ChowRing:
    """
    The rational Chow ring of the toric variety of a smooth complete fan, truncated above n.
    """
    def __init__(self, fan: Fan):
        _check_fan(fan)
        fan.cache["checked"] = True
        self.fan = fan
        self.dim = fan.dim
        self.base_cone = fan.max_cones[0]
        self.free_rays = tuple(i for i in range(len(fan.rays)) if i not in self.base_cone)
        self.ring, self.generators = xring(["D{}".format(i) for i in self.free_rays], QQ)
        self._divisors = None
        logging.debug("Chow: ring with %i generators for a fan of dimension %i",
                      len(self.free_rays), self.dim)

    def __repr__(self):
        return "ChowRing(dim={}, rays={})".format(self.dim, len(self.fan.rays))

    def cycle(self, poly: PolyElement) -> 'ChowCycle':
        """
        Wraps a polynomial of the ring
        """
        return ChowCycle(self, poly)

    @property
    def one(self) -> 'ChowCycle':
        """
        Fundamental class
        """
        return self.cycle(self.ring.one)

    @property
    def divisors(self) -> List['ChowCycle']:
        """
        The boundary divisor classes D_ρ, one per ray
        """
        if self._divisors is None:
            position = {ray: k for k, ray in enumerate(self.free_rays)}
            divisors = []
            for ray in range(len(self.fan.rays)):
                if ray in position:
                    divisors.append(self.cycle(self.generators[position[ray]]))
                    continue
                relation = self.fan.linear_relation(ray, self.base_cone)
                poly = self.ring.zero
                for other, factor in relation.items():
                    poly += factor * self.generators[position[other]]
                divisors.append(self.cycle(poly))
            self._divisors = divisors
        return self._divisors

    def divisor(self, coefficients: Sequence[int]) -> 'ChowCycle':
        """
        Class of Σ a_ρ D_ρ
        """
        poly = self.ring.zero
        for a, divisor in zip(coefficients, self.divisors):
            if a:
                poly += a * divisor.poly
        return self.cycle(poly)

    def truncate(self, poly: PolyElement) -> PolyElement:
        """
        Drops the terms of degree above n
        """
        if all(sum(monomial) <= self.dim for monomial in poly.keys()):
            return poly
        return self.ring.from_dict({m: c for m, c in poly.items() if sum(m) <= self.dim})

    def integrate_poly(self, poly: PolyElement) -> Fraction:
        """
        Degree of the top dimensional part of a polynomial in the free generators
        """
        total = Fraction(0)
        for monomial, coefficient in poly.items():
            if sum(monomial) != self.dim:
                continue
            exponents = [0] * len(self.fan.rays)
            for ray, a in zip(self.free_rays, monomial):
                exponents[ray] = a
            total += _to_fraction(coefficient) * integrate_monomial(self.fan, exponents)
        return total


def _to_fraction(coefficient) -> Fraction:
    return Fraction(int(coefficient.numerator), int(coefficient.denominator))


def _to_qq(value: Rational):
    value = Fraction(value)
    return QQ(value.numerator, value.denominator)


class ChowCycle:
    """
    An element of the truncated Chow ring
    """
    __slots__ = 'chow_ring', 'poly'

    def __init__(self, chow_ring: ChowRing, poly: PolyElement):
        self.chow_ring = chow_ring
        self.poly = chow_ring.truncate(poly)

    def __repr__(self):
        return "ChowCycle({})".format(self.poly)

    def _other(self, other: Union['ChowCycle', Rational]) -> PolyElement:
        if isinstance(other, ChowCycle):
            if other.chow_ring is not self.chow_ring:
                raise ConsistencyError("Chow: cycles of different rings cannot be combined")
            return other.poly
        return self.chow_ring.ring.one * _to_qq(other)

    def __add__(self, other):
        return ChowCycle(self.chow_ring, self.poly + self._other(other))

    __radd__ = __add__

    def __sub__(self, other):
        return ChowCycle(self.chow_ring, self.poly - self._other(other))

    def __rsub__(self, other):
        return ChowCycle(self.chow_ring, self._other(other) - self.poly)

    def __neg__(self):
        return ChowCycle(self.chow_ring, -self.poly)

    def __mul__(self, other):
        return ChowCycle(self.chow_ring, self.poly * self._other(other))

    __rmul__ = __mul__

    def __pow__(self, exponent: int):
        result = self.chow_ring.one
        for _ in range(exponent):
            result = result * self
        return result

    def __eq__(self, other):
        return isinstance(other, ChowCycle) and self.poly == other.poly

    def __hash__(self):
        return hash(self.poly)

    def part(self, degree: int) -> 'ChowCycle':
        """
        Homogeneous component of the given degree
        """
        ring = self.chow_ring.ring
        return ChowCycle(self.chow_ring, ring.from_dict({m: c for m, c in self.poly.items()
                                                         if sum(m) == degree}))

    def is_zero(self) -> bool:
        """
        Returns True for the zero class
        """
        return not self.poly

    def integrate(self) -> Fraction:
        """
        Degree of the top dimensional component
        """
        return self.chow_ring.integrate_poly(self.poly)


def chow_ring(fan: Fan) -> ChowRing:
    """
    The Chow ring of a fan, built once per fan
    :param fan:
    :return:
    """
    if "ring" not in fan.cache:
        fan.cache["ring"] = ChowRing(fan)
    return fan.cache["ring"]


def total_chern(fan: Fan) -> ChowCycle:
    """
    c(T_X) = ∏_ρ (1 + D_ρ)
    :param fan:
    :return:
    """
    ring = chow_ring(fan)
    if "total_chern" not in fan.cache:
        result = ring.one
        for divisor in ring.divisors:
            result = result * (divisor + 1)
        fan.cache["total_chern"] = result
    return fan.cache["total_chern"]


def chern_class(fan: Fan, degree: int) -> ChowCycle:
    """
    c_i(T_X)
    """
    return total_chern(fan).part(degree)


def inverse_total_chern(fan: Fan) -> ChowCycle:
    """
    c(T_X)^{-1} = Σ_k (-s)^k with s = c(T_X) - 1, truncated at degree n
    :param fan:
    :return:
    """
    if "inverse_total_chern" not in fan.cache:
        ring = chow_ring(fan)
        minus_s = ring.one - total_chern(fan)
        result = ring.one
        power = ring.one
        for _ in range(ring.dim):
            power = power * minus_s
            result = result + power
        fan.cache["inverse_total_chern"] = result
    return fan.cache["inverse_total_chern"]


def todd_coefficients(n: int) -> List[Fraction]:
    """
    Coefficients of x / (1 - e^-x) up to x^n : 1, 1/2, B_2/2!, B_4/4!, ...
    :param n:
    :return:
    """
    coefficients = []
    for k in range(n + 1):
        if k == 0:
            coefficients.append(Fraction(1))
        elif k == 1:
            coefficients.append(Fraction(1, 2))
        elif k % 2:
            coefficients.append(Fraction(0))
        else:
            bernoulli = sympy.bernoulli(k)
            coefficients.append(Fraction(int(bernoulli.p), int(bernoulli.q) * math.factorial(k)))
    return coefficients


def todd(fan: Fan) -> ChowCycle:
    """
    td(X) = ∏_ρ D_ρ / (1 - e^{-D_ρ}) truncated at degree n
    :param fan:
    :return:
    """
    if "todd" not in fan.cache:
        ring = chow_ring(fan)
        coefficients = todd_coefficients(ring.dim)
        result = ring.one
        for divisor in ring.divisors:
            series = ring.one
            power = ring.one
            for coefficient in coefficients[1:]:
                power = power * divisor
                if coefficient:
                    series = series + power * coefficient
            result = result * series
        fan.cache["todd"] = result
    return fan.cache["todd"]


def exponential(cycle: ChowCycle) -> ChowCycle:
    """
    e^cycle = Σ cycle^i / i! truncated at degree n
    """
    ring = cycle.chow_ring
    result = ring.one
    power = ring.one
    for i in range(1, ring.dim + 1):
        power = power * cycle
        result = result + power * Fraction(1, math.factorial(i))
    return result


class AmpleDivisor:
    """
    The divisor D_P = Σ a_ρ D_ρ of a polytope P = {m : <m, v_ρ> >= -a_ρ}
    """
    __slots__ = 'coefficients', 'fan'

    def __init__(self, coefficients: Sequence[int], fan: Fan):
        self.coefficients = tuple(coefficients)
        self.fan = fan

    def __repr__(self):
        return "AmpleDivisor({})".format(self.coefficients)

    @property
    def cycle(self) -> ChowCycle:
        """
        The class H = c_1(O(D_P))
        """
        return chow_ring(self.fan).divisor(self.coefficients)

    def polytope_inequalities(self) -> List[Tuple[Tuple[int, ...], int]]:
        """
        The inequalities <m, v_ρ> + a_ρ >= 0 defining the polytope of the divisor
        """
        return list(zip(self.fan.rays, self.coefficients))


def ample_from_polytope(polytope: LatticePolytope) -> AmpleDivisor:
    """
    Ample divisor of a smooth polytope : a_ρ is the offset of the facet with normal v_ρ
    :param polytope:
    :return:
    """
    polytope.require_smooth()
    return AmpleDivisor([facet.offset for facet in polytope.facets], polytope.normal_fan)


def hyperplane_class(polytope: LatticePolytope) -> ChowCycle:
    """
    H = c_1(L) for the embedding given by the lattice points of the polytope
    """
    return ample_from_polytope(polytope).cycle


def as_integer(value: Fraction, what: str) -> int:
    """
    Checks that an intersection number is an integer
    :param value:
    :param what: name used in the error message
    :return:
    """
    if value.denominator != 1:
        raise ConsistencyError("Chow: {} = {} is not an integer".format(what, value))
    return int(value)


def degree_of_embedding(polytope: LatticePolytope) -> int:
    """
    deg X = ∫ H^n
    :param polytope:
    :return:
    """
    hyperplane = hyperplane_class(polytope)
    return as_integer((hyperplane ** polytope.dim).integrate(), "H^n")


def riemann_roch_count(polytope: LatticePolytope) -> int:
    """
    χ(L) = ∫ e^H · td(X), the number of lattice points of the polytope
    :param polytope:
    :return:
    """
    hyperplane = hyperplane_class(polytope)
    return as_integer((exponential(hyperplane) * todd(polytope.normal_fan)).integrate(),
                      "χ(L)")


def secant_rhs(polytope: LatticePolytope) -> int:
    """
    deg Sec X · deg φ = (deg X)^2 - Σ_{i=0}^{n} binom(2n+1, i) ∫ c(T_X)^{-1} · H^i
    :param polytope:
    :return:
    """
    n = polytope.dim
    fan = polytope.normal_fan
    hyperplane = hyperplane_class(polytope)
    inverse = inverse_total_chern(fan)
    degree = degree_of_embedding(polytope)
    correction = Fraction(0)
    power = chow_ring(fan).one
    for i in range(n + 1):
        correction += math.comb(2 * n + 1, i) * (inverse * power).integrate()
        power = power * hyperplane
    result = as_integer(degree ** 2 - correction, "secant right hand side")
    logging.debug("Chow: secant right hand side %i for %s", result, polytope)
    return result


def chern_numbers(fan: Fan) -> Dict[str, int]:
    """
    All the Chern numbers ∫ c_1^{a_1} c_2^{a_2} ··· with Σ i·a_i = n
    :param fan:
    :return: a dict keyed by names like "c1^2c2"
    """
    n = fan.dim
    classes = [chern_class(fan, i) for i in range(n + 1)]
    numbers = {}
    for partition in _partitions(n):
        cycle = chow_ring(fan).one
        name = []
        for part in sorted(set(partition)):
            count = partition.count(part)
            cycle = cycle * classes[part] ** count
            name.append("c{}".format(part) + ("^{}".format(count) if count > 1 else ""))
        numbers["".join(name)] = as_integer(cycle.integrate(), "".join(name))
    return numbers


def _partitions(n: int, largest: Optional[int] = None) -> List[Tuple[int, ...]]:
    largest = n if largest is None else largest
    if n == 0:
        return [()]
    result = []
    for part in range(min(n, largest), 0, -1):
        result.extend((part,) + rest for rest in _partitions(n - part, part))
    return result


def intersection_table(fan: Fan) -> Dict[Exponents, Fraction]:
    """
    Every nonzero intersection number of a degree n monomial in the boundary divisors
    :param fan:
    :return:
    """
    table = {}
    rays = len(fan.rays)
    for combination in itertools.combinations_with_replacement(range(rays), fan.dim):
        exponents = [0] * rays
        for ray in combination:
            exponents[ray] += 1
        value = integrate_monomial(fan, exponents)
        if value:
            table[tuple(exponents)] = value
    return table


def monomial_name(exponents: Sequence[int]) -> str:
    """
    Name of a monomial in the boundary divisors, (2, 1, 0) is "D0^2D1"
    """
    return "".join("D{}".format(ray) + ("^{}".format(power) if power > 1 else "")
                   for ray, power in enumerate(exponents) if power)


def named_intersection_table(fan: Fan) -> Dict[str, Fraction]:
    """
    The intersection table keyed by monomial names, the rays are numbered in the fan order
    """
    return {monomial_name(exponents): value
            for exponents, value in intersection_table(fan).items()}


def polytope_intersections(polytope: LatticePolytope) -> Dict[str, int]:
    """
    The mixed numbers ∫ H^i c_1^a c_2^b ... used by the closed formulas, keyed like "H^2c1"
    :param polytope:
    :return:
    """
    n = polytope.dim
    fan = polytope.normal_fan
    hyperplane = hyperplane_class(polytope)
    classes = [chern_class(fan, i) for i in range(n + 1)]
    numbers = {}
    for h_power in range(n + 1):
        for partition in _partitions(n - h_power):
            cycle = hyperplane ** h_power
            name = ["H" + ("^{}".format(h_power) if h_power > 1 else "")] if h_power else []
            for part in sorted(set(partition)):
                count = partition.count(part)
                cycle = cycle * classes[part] ** count
                name.append("c{}".format(part) + ("^{}".format(count) if count > 1 else ""))
            numbers["".join(name)] = as_integer(cycle.integrate(), "".join(name))
    return numbers


def ehrhart_interior_count(polytope: LatticePolytope) -> int:
    """
    Number of interior lattice points of a smooth 3-polytope by Ehrhart duality :
    I = -(1 - (∫H c_1^2 + perimeter) / 12 + S / 4 - d / 6)
    :param polytope:
    :return:
    """
    if polytope.dim != 3:
        raise LatticeError("Chow: the interior point identity is only stated in dimension 3")
    hyperplane = hyperplane_class(polytope)
    c_1 = chern_class(polytope.normal_fan, 1)
    stats = polytope.stats
    h_c1_squared = (hyperplane * c_1 * c_1).integrate()
    value = -(1 - (h_c1_squared + stats.perimeter) / 12 + Fraction(stats.boundary_volume, 4)
              - Fraction(stats.normalized_volume, 6))
    return as_integer(value, "Ehrhart interior count")


if __name__ == '__main__':

    logging.getLogger().setLevel(logging.DEBUG)

    def cube_numbers():
        """
        Test
        :return:
        """
        import libs.polytope.family as family
        cube = family.cube(3)
        print(chern_numbers(cube.normal_fan), secant_rhs(cube), riemann_roch_count(cube))

    cube_numbers()
