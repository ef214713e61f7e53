# coding=utf-8
"""
Classify module

Decides whether a smooth polytope is unimodularly equivalent to a subpolytope of 2Δn and
identifies its family :

1. pick a vertex with the maximum number of incident edges of length 2,
2. move the polytope to standard position at that vertex,
3. the polytope is a subpolytope of 2Δn iff the image lies in 2Δn,
4. the lengths of the edges at the origin and the points e_i + e_j of the image tell which of
   Δn, 2Δn, (2Δn)_k or Δℓ x Δ_{n-ℓ} it is, the answer is confirmed by comparing lattice points.
"""
from typing import Optional, Tuple, Dict, List
import enum
import logging

import networkx as nx

import libs.polytope.family as family
from libs.polytope.polytope import LatticePolytope
from libs.zlinalg.zlinalg import AffineUnimodularMap
from libs.utils.custom_types import IntVec
from libs.utils.custom_exceptions import ConsistencyError


class FamilyKind(enum.Enum):
    """
    The five rows of the secant classification
    """
    SIMPLEX = "simplex"
    DOUBLED_SIMPLEX = "doubled_simplex"
    TRUNCATED = "truncated"
    PRODUCT = "product"
    GENERAL = "general"


class FamilyLabel:
    """
    The family of a smooth polytope.
    The witness is the affine unimodular map sending the polytope onto the canonical model,
    it is None for the general family.
    """
    __slots__ = 'kind', 'n', 'k', 'ell', 'witness'

    def __init__(self, kind: FamilyKind, n: int, k: Optional[int] = None,
                 ell: Optional[int] = None, witness: Optional[AffineUnimodularMap] = None):
        self.kind = kind
        self.n = n
        self.k = k
        self.ell = ell
        self.witness = witness

    def __repr__(self):
        if self.kind is FamilyKind.TRUNCATED:
            return "TruncatedDoubledSimplex({}, {})".format(self.n, self.k)
        if self.kind is FamilyKind.PRODUCT:
            return "ProductOfSimplices({}, {})".format(self.ell, self.n - self.ell)
        if self.kind is FamilyKind.SIMPLEX:
            return "Simplex({})".format(self.n)
        if self.kind is FamilyKind.DOUBLED_SIMPLEX:
            return "DoubledSimplex({})".format(self.n)
        return "General({})".format(self.n)

    def __eq__(self, other):
        return (isinstance(other, FamilyLabel) and
                (self.kind, self.n, self.k, self.ell) == (other.kind, other.n, other.k, other.ell))

    def __hash__(self):
        return hash((self.kind, self.n, self.k, self.ell))

    @property
    def is_general(self) -> bool:
        """
        Returns True for the last row of the classification
        """
        return self.kind is FamilyKind.GENERAL

    @classmethod
    def general(cls, n: int) -> 'FamilyLabel':
        """
        Label of a polytope that is not a subpolytope of 2Δn
        """
        return cls(FamilyKind.GENERAL, n)

    def model(self) -> LatticePolytope:
        """
        The canonical polytope of the family
        """
        if self.kind is FamilyKind.SIMPLEX:
            return family.simplex(self.n)
        if self.kind is FamilyKind.DOUBLED_SIMPLEX:
            return family.doubled_simplex(self.n)
        if self.kind is FamilyKind.TRUNCATED:
            return family.truncated(self.n, self.k)
        if self.kind is FamilyKind.PRODUCT:
            return family.product([(1, self.ell), (1, self.n - self.ell)])
        raise ConsistencyError("Classify: the general family has no canonical model")

    def serialize(self) -> Dict:
        """
        Json friendly representation
        """
        output = {"family": self.kind.value, "n": self.n}
        if self.k is not None:
            output["k"] = self.k
        if self.ell is not None:
            output["ell"] = self.ell
        if self.witness is not None:
            output["witness"] = self.witness.serialize()
        return output


def max_length2_vertex(polytope: LatticePolytope) -> Tuple[IntVec, int]:
    """
    A vertex with the maximum number of incident edges of lattice length 2,
    the lexicographically smallest one in case of a tie
    :param polytope: a smooth polytope
    :return: (vertex, count)
    """
    polytope.require_smooth()
    best, best_count = None, -1
    for vertex in polytope.vertices:
        count = sum(1 for _, length in polytope.edge_directions(vertex) if length == 2)
        if count > best_count:
            best, best_count = vertex, count
    logging.debug("Classify: vertex %s has %i edges of length 2", best, best_count)
    return best, best_count


def _in_doubled_simplex(polytope: LatticePolytope) -> bool:
    return all(min(v) >= 0 and sum(v) <= 2 for v in polytope.vertices)


def _sum_of_units(n: int, i: int, j: int) -> IntVec:
    return tuple(1 if t in (i, j) else 0 for t in range(n))


def _candidate(image: LatticePolytope) -> Tuple[FamilyLabel, List[int]]:
    """
    Reads the family of a polytope of 2Δn in standard position at the origin.
    :param image:
    :return: the label without witness and the coordinate order of the canonical model
    """
    n = image.dim
    lengths = {direction.index(1): length
               for direction, length in image.edge_directions((0,) * n)}
    short = sorted(i for i, length in lengths.items() if length == 1)
    long = sorted(i for i, length in lengths.items() if length == 2)

    if not short:
        return FamilyLabel(FamilyKind.DOUBLED_SIMPLEX, n), long
    if long:
        return FamilyLabel(FamilyKind.TRUNCATED, n, k=len(short) - 1), short + long

    graph = nx.Graph()
    graph.add_nodes_from(range(n))
    graph.add_edges_from((i, j) for i in range(n) for j in range(i + 1, n)
                         if image.contains(_sum_of_units(n, i, j)))
    if graph.number_of_edges() == 0:
        return FamilyLabel(FamilyKind.SIMPLEX, n), list(range(n))
    if not nx.is_connected(graph) or not nx.is_bipartite(graph):
        raise ConsistencyError("Classify: classification exhausted, the coordinate graph {} "
                               "is not a connected bipartite graph".format(list(graph.edges)))
    sides = sorted((sorted(side) for side in nx.bipartite.sets(graph)),
                   key=lambda side: (len(side), side))
    return FamilyLabel(FamilyKind.PRODUCT, n, ell=len(sides[0])), sides[0] + sides[1]


def _identify(image: LatticePolytope, to_image: AffineUnimodularMap) -> FamilyLabel:
    label, order = _candidate(image)
    permutation = AffineUnimodularMap.permutation(order)
    renumbered = image.transform(permutation)
    model = label.model()
    if renumbered.lattice_points != model.lattice_points:
        raise ConsistencyError("Classify: classification exhausted, {} does not match {}"
                               .format(renumbered, label))
    label.witness = permutation.compose(to_image)
    return label


def _check_all_vertices(polytope: LatticePolytope, contained: bool):
    """
    Moves every vertex to the origin and checks that some vertex gives an image in 2Δn
    exactly when the distinguished vertex does
    """
    found = []
    for vertex in polytope.vertices:
        image, _ = polytope.standard_position(vertex)
        if _in_doubled_simplex(image):
            found.append(vertex)
    logging.debug("Classify: vertices giving an image in 2Δn : %s", found)
    if bool(found) != contained:
        raise ConsistencyError("Classify: the distinguished vertex says {} but the vertices {} "
                               "disagree".format(contained, found))


def classify(polytope: LatticePolytope, debug_all_vertices: bool = False) -> FamilyLabel:
    """
    Family of a smooth polytope
    :param polytope: a smooth full dimensional polytope
    :param debug_all_vertices: re-check the containment from every vertex
    :return:
    """
    vertex, _ = max_length2_vertex(polytope)
    image, to_image = polytope.standard_position(vertex)
    contained = _in_doubled_simplex(image)
    if debug_all_vertices:
        _check_all_vertices(polytope, contained)
    if not contained:
        logging.debug("Classify: %s is not a subpolytope of 2Δ%i", polytope, polytope.dim)
        return FamilyLabel.general(polytope.dim)
    label = _identify(image, to_image)
    logging.info("Classify: %s", label)
    return label


def is_subpolytope_of_doubled_simplex(polytope: LatticePolytope) -> bool:
    """
    Returns True if the smooth polytope is equivalent to a subpolytope of 2Δn
    """
    return not classify(polytope).is_general


if __name__ == '__main__':

    logging.getLogger().setLevel(logging.DEBUG)

    def classify_catalog():
        """
        Test
        :return:
        """
        for polytope in (family.truncated(4, 1), family.hexagon(), family.cube(3)):
            print(classify(polytope, debug_all_vertices=True))

    classify_catalog()
