# coding=utf-8
"""
Secant module

Assembles the secant report of a smooth polytope :
• the family given by the classification,
• the dimension and the degree of the secant variety from the matching table row,
• the number of secant lines through a general point,
• independent cross-checks between the closed formulas and the intersection theory.

For a configuration A of lattice points containing the vertices of P = conv(A) and their nearest
neighbors along the edges, the secant variety of X_A has the dimension of the one of X_P and its
degree divides the degree of Sec X_P.
"""
from typing import Optional, List, Dict, Tuple
import enum
import logging

import libs.chow.chow as chow
import libs.secant.formulas as formulas
from libs.classify.classify import classify, FamilyLabel, FamilyKind
from libs.polytope.polytope import LatticePolytope, PointConfiguration
from libs.utils.custom_types import IntVec
from libs.utils.custom_exceptions import ConsistencyError


class SecantLines(enum.Enum):
    """
    Number of secant lines through a general point of the secant variety
    """
    UNIQUE = "unique"
    INFINITE = "infinite"


class CrossCheck:
    """
    A comparison between two independent computations.
    An advisory check is reported but never fails the analysis.
    """
    __slots__ = 'name', 'passed', 'values', 'advisory'

    def __init__(self, name: str, passed: bool, values: Dict, advisory: bool = False):
        self.name = name
        self.passed = passed
        self.values = values
        self.advisory = advisory

    def __repr__(self):
        return "CrossCheck({}: {}{})".format(self.name, "pass" if self.passed else "FAIL",
                                             ", advisory" if self.advisory else "")

    @classmethod
    def equal(cls, name: str, expected, computed, advisory: bool = False) -> 'CrossCheck':
        """
        Check that two values are equal
        """
        return cls(name, expected == computed, {"expected": expected, "computed": computed},
                   advisory)

    def serialize(self) -> Dict:
        """
        Json friendly representation
        """
        output = {"name": self.name, "passed": self.passed, "values": self.values}
        if self.advisory:
            output["advisory"] = True
        return output


class SecantReport:
    """
    Dimension and degree of the secant variety of the toric variety of a smooth polytope
    """
    __slots__ = ('n', 'r', 'family', 'dim_sec', 'expected_dim', 'deg_sec', 'deg_phi',
                 'secant_lines', 'rhs', 'cross_checks')

    def __init__(self, n: int, r: int, family: FamilyLabel, dim_sec: int, deg_sec: int,
                 rhs: int, cross_checks: Optional[List[CrossCheck]] = None):
        self.n = n
        self.r = r
        self.family = family
        self.dim_sec = dim_sec
        self.expected_dim = formulas.expected_secant_dimension(n, r)
        self.deg_sec = deg_sec
        self.deg_phi = 2 if family.is_general else 0
        self.secant_lines = SecantLines.UNIQUE if family.is_general else SecantLines.INFINITE
        self.rhs = rhs
        self.cross_checks = cross_checks or []

    def __repr__(self):
        return "SecantReport({}, dim={}, deg={})".format(self.family, self.dim_sec, self.deg_sec)

    @property
    def has_expected_dim(self) -> bool:
        """
        dim Sec = min{r, 2n+1}
        """
        return self.dim_sec == self.expected_dim

    @property
    def failed_checks(self) -> List[CrossCheck]:
        """
        The non advisory checks that did not pass
        """
        return [check for check in self.cross_checks if not check.passed and not check.advisory]

    def serialize(self) -> Dict:
        """
        Json friendly representation
        """
        return {
            "n": self.n,
            "r": self.r,
            "family": self.family.serialize(),
            "dim_sec": self.dim_sec,
            "expected_dim": self.expected_dim,
            "has_expected_dim": self.has_expected_dim,
            "deg_sec": self.deg_sec,
            "deg_phi": self.deg_phi,
            "secant_lines": self.secant_lines.value,
            "rhs": self.rhs,
            "cross_checks": [check.serialize() for check in self.cross_checks],
        }


def table_row(label: FamilyLabel) -> Tuple[int, Optional[int]]:
    """
    Dimension and degree of the secant variety read from the classification table.
    The degree of the general family is not a closed formula and is returned as None.
    :param label:
    :return:
    """
    n = label.n
    if label.kind is FamilyKind.SIMPLEX:
        return n, 1
    if label.kind is FamilyKind.DOUBLED_SIMPLEX:
        return 2 * n, formulas.veronese_secant_degree(n)
    if label.kind is FamilyKind.TRUNCATED:
        return 2 * n, formulas.truncated_secant_degree(n, label.k)
    if label.kind is FamilyKind.PRODUCT:
        return 2 * n - 1, formulas.product_secant_degree(label.ell, n)
    return 2 * n + 1, None


def is_exceptional(label: FamilyLabel) -> bool:
    """
    The families whose secant variety does not have the expected dimension :
    2Δn (n >= 2), (2Δn)_k (k <= n - 3) and Δℓ x Δ_{n-ℓ} (2 <= ℓ <= n - 2)
    """
    if label.kind is FamilyKind.DOUBLED_SIMPLEX:
        return label.n >= 2
    if label.kind is FamilyKind.TRUNCATED:
        return label.k <= label.n - 3
    if label.kind is FamilyKind.PRODUCT:
        return 2 <= label.ell <= label.n - 2
    return False


def _cross_checks(polytope: LatticePolytope, label: FamilyLabel, rhs: int,
                  dim_sec: int, r: int) -> List[CrossCheck]:
    n = polytope.dim
    fan = polytope.normal_fan
    stats = polytope.stats
    checks = [
        CrossCheck.equal("degree_is_volume", stats.normalized_volume,
                         chow.degree_of_embedding(polytope)),
        CrossCheck.equal("riemann_roch", stats.lattice_points, chow.riemann_roch_count(polytope)),
        CrossCheck.equal("top_chern_class", stats.vertices,
                         chow.as_integer(chow.chern_class(fan, n).integrate(), "c_n")),
        CrossCheck("rhs_parity", rhs % 2 == 0, {"rhs": rhs}),
        CrossCheck("rhs_family", (rhs > 0) == label.is_general,
                   {"rhs": rhs, "family": repr(label)}),
    ]
    if label.is_general and dim_sec == r:
        checks.append(CrossCheck.equal("rhs_fills_ambient", 2, rhs))
    if label.kind is FamilyKind.TRUNCATED and label.k == n - 2:
        checks.append(CrossCheck.equal("truncated_table_sum",
                                       formulas.truncated_table_sum(n, label.k),
                                       formulas.truncated_secant_degree(n, label.k),
                                       advisory=True))
    if n == 2:
        numbers = chow.chern_numbers(fan)
        checks.append(CrossCheck.equal("surface_formula", rhs, formulas.surface_rhs(stats)))
        checks.append(CrossCheck.equal("noether", 12, numbers["c1^2"] + numbers["c2"]))
    if n == 3:
        numbers = chow.chern_numbers(fan)
        checks.append(CrossCheck.equal("threefold_formula", rhs,
                                       formulas.threefold_rhs(stats, numbers["c1^3"])))
        checks.append(CrossCheck.equal("c1c2", 24, numbers["c1c2"]))
        checks.append(CrossCheck.equal("ehrhart_interior", stats.interior_points,
                                       chow.ehrhart_interior_count(polytope)))
    for check in checks:
        if not check.passed:
            logging.warning("Secant: cross-check %s failed with %s", check.name, check.values)
    return checks


def analyze(polytope: LatticePolytope, debug_all_vertices: bool = False) -> SecantReport:
    """
    Secant report of a smooth polytope
    :param polytope: a smooth full dimensional polytope
    :param debug_all_vertices: re-check the classification from every vertex
    :return:
    """
    polytope.require_smooth()
    n = polytope.dim
    r = len(polytope.lattice_points) - 1
    label = classify(polytope, debug_all_vertices=debug_all_vertices)
    rhs = chow.secant_rhs(polytope)
    dim_sec, deg_sec = table_row(label)
    if deg_sec is None:
        deg_sec = rhs // 2
    if dim_sec >= r:
        dim_sec, deg_sec = r, 1

    report = SecantReport(n, r, label, dim_sec, deg_sec, rhs,
                          _cross_checks(polytope, label, rhs, dim_sec, r))
    logging.info("Secant: %s", report)
    return report


class SubsetReport:
    """
    What can be said of the secant variety of X_A for a configuration A with conv(A) = P.
    When the hypothesis fails no claim is made.
    """
    __slots__ = ('s', 'n', 'hypothesis_ok', 'missing', 'dim_sec', 'deg_sec', 'deg_bound',
                 'expected_dim', 'exceptional', 'polytope_report')

    def __init__(self, s: int, n: int, missing: List[IntVec]):
        self.s = s
        self.n = n
        self.missing = missing
        self.hypothesis_ok = not missing
        self.dim_sec = None  # type: Optional[int]
        self.deg_sec = None  # type: Optional[int]
        self.deg_bound = None  # type: Optional[int]
        self.expected_dim = formulas.expected_secant_dimension(n, s)
        self.exceptional = False
        self.polytope_report = None  # type: Optional[SecantReport]

    def __repr__(self):
        return "SubsetReport(s={}, dim={}, {})".format(self.s, self.dim_sec, self.deg_constraint)

    @property
    def deg_constraint(self) -> Optional[str]:
        """
        The divisibility constraint on the degree
        """
        if self.deg_bound is None:
            return None
        return "divides {}".format(self.deg_bound)

    @property
    def expected_dim_ok(self) -> Optional[bool]:
        """
        dim Sec X_A = min{s, 2n+1}
        """
        if self.dim_sec is None:
            return None
        return self.dim_sec == self.expected_dim

    def serialize(self) -> Dict:
        """
        Json friendly representation
        """
        output = {
            "s": self.s,
            "n": self.n,
            "hypothesis_ok": self.hypothesis_ok,
            "expected_dim": self.expected_dim,
        }
        if not self.hypothesis_ok:
            output["missing"] = [list(p) for p in self.missing]
            return output
        output.update({
            "dim_sec": self.dim_sec,
            "deg_sec": self.deg_sec,
            "deg_constraint": self.deg_constraint,
            "expected_dim_ok": self.expected_dim_ok,
            "exceptional": self.exceptional,
            "polytope": self.polytope_report.serialize(),
        })
        return output


def analyze_points(configuration: PointConfiguration,
                   debug_all_vertices: bool = False) -> SubsetReport:
    """
    Subset report of a configuration of lattice points whose convex hull is smooth
    :param configuration:
    :param debug_all_vertices:
    :return:
    """
    polytope = configuration.hull.require_smooth()
    points = {polytope.embed(p) for p in configuration.points}
    required = set(polytope.vertices)
    for vertex in polytope.vertices:
        required.update(polytope.vertex_neighbors(vertex))
    missing = sorted(required - points)
    report = SubsetReport(len(points) - 1, polytope.dim, missing)
    if missing:
        logging.info("Secant: the configuration misses %s", missing)
        return report

    polytope_report = analyze(polytope, debug_all_vertices=debug_all_vertices)
    complete = points == set(polytope.lattice_points)
    report.polytope_report = polytope_report
    report.dim_sec = min(polytope_report.dim_sec, report.s)
    report.deg_bound = polytope_report.deg_sec
    if report.dim_sec == report.s:
        report.deg_sec = 1
    elif complete:
        report.deg_sec = polytope_report.deg_sec
    report.exceptional = complete and is_exceptional(polytope_report.family)
    if report.expected_dim_ok == report.exceptional:
        raise ConsistencyError("Secant: dimension {} of {} points contradicts the exception list"
                               .format(report.dim_sec, len(points)))
    logging.info("Secant: %s", report)
    return report
