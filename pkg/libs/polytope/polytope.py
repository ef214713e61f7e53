# coding=utf-8
"""
Polytope module

Lattice polytopes given by their vertices :
• facets as primitive inward normals and offsets : <normal, x> + offset >= 0,
• face lattice and vertex-edge graph,
• lattice points, volumes and Ehrhart-type statistics,
• smoothness (Delzant) checks and standard position.

A polytope is immutable. Lower dimensional inputs are re-expressed in the saturated lattice
of their affine span.
"""
from typing import Sequence, Tuple, List, Dict, Optional, Iterable, NamedTuple
import itertools
import logging
from functools import cached_property

import numpy as np
import networkx as nx

import libs.zlinalg.zlinalg as zlinalg
from libs.zlinalg.zlinalg import AffineUnimodularMap
from libs.chow.fan import Fan
from libs.utils.custom_types import IntVec, IntMat
from libs.utils.custom_exceptions import InputFormatError, NotSmoothError, LatticeError

# MODULE CONSTANTS

# maximum number of points of the bounding box scanned when enumerating lattice points
MAX_BOX_POINTS = 5 * 10 ** 7
# bound under which numpy int64 arithmetic is exact for the facet tests
INT64_SAFE = 2 ** 62


class Facet:
    """
    A facet : the inequality <normal, x> + offset >= 0 with a primitive inward normal,
    together with the indices of the vertices lying on it
    """
    __slots__ = 'normal', 'offset', 'vertex_indices'

    def __init__(self, normal: Sequence[int], offset: int, vertex_indices: Iterable[int] = ()):
        self.normal = tuple(normal)
        self.offset = offset
        self.vertex_indices = tuple(sorted(vertex_indices))

    def __repr__(self):
        return "Facet({} · x + {} >= 0)".format(self.normal, self.offset)

    def value(self, point: Sequence[int]) -> int:
        """
        Lattice distance of the point to the facet hyperplane
        """
        return zlinalg.dot(self.normal, point) + self.offset


class Face:
    """
    A face of the polytope, stored as the sorted indices of its vertices
    """
    __slots__ = 'vertex_indices', 'dim', 'facet_indices'

    def __init__(self, vertex_indices: Iterable[int], dim: int, facet_indices: Iterable[int]):
        self.vertex_indices = tuple(sorted(vertex_indices))
        self.dim = dim
        self.facet_indices = tuple(sorted(facet_indices))

    def __repr__(self):
        return "Face(dim={}, vertices={})".format(self.dim, self.vertex_indices)

    def __contains__(self, vertex_index: int) -> bool:
        return vertex_index in self.vertex_indices


class LatticeEmbedding(NamedTuple):
    """
    Affine lattice coordinates of a lower dimensional input : y = projection·(x - origin)
    """
    origin: IntVec
    projection: IntMat


class PolytopeStats(NamedTuple):
    """
    Combinatorial and Ehrhart-type statistics of a lattice polytope
    """
    dimension: int
    vertices: int
    edge_points: int
    boundary_points: int
    interior_points: int
    boundary_volume: int
    lattice_points: int
    normalized_volume: int
    perimeter: int

    def serialize(self) -> Dict[str, int]:
        """
        Json friendly representation
        """
        return dict(self._asdict())


def _check_points(points: Sequence[Sequence[int]], what: str = "points") -> List[IntVec]:
    if not points:
        raise InputFormatError("Polytope: no {} given".format(what))
    checked = []
    dimension = None
    for point in points:
        if not isinstance(point, (list, tuple)) or not point:
            raise InputFormatError("Polytope: {} is not a coordinate list".format(point))
        for x in point:
            if isinstance(x, bool) or not isinstance(x, int):
                raise InputFormatError("Polytope: coordinate {!r} is not an integer".format(x))
        if dimension is None:
            dimension = len(point)
        elif len(point) != dimension:
            raise InputFormatError("Polytope: points of different dimensions")
        checked.append(tuple(point))
    return checked


def _hull_facets(points: List[IntVec]) -> List[Tuple[IntVec, int]]:
    """
    Facets of the convex hull of full dimensional points by enumeration of the hyperplanes
    spanned by n of them.
    :param points: sorted distinct points of Z^n spanning Z^n affinely
    :return: the list of (inward primitive normal, offset)
    """
    n = len(points[0])
    size = len(points)
    facets = {}
    rejected = set()
    coordinate_bound = max(abs(x) for p in points for x in p) + 1
    as_objects = np.array(points, dtype=object)
    as_int64 = np.array(points, dtype=np.int64) if coordinate_bound < INT64_SAFE else None
    for subset in itertools.combinations(range(size), n):
        base = points[subset[0]]
        normal = zlinalg.hyperplane_normal([zlinalg.sub(points[i], base) for i in subset[1:]])
        if not any(normal):
            continue
        normal = zlinalg.primitive_vector(normal)
        if next(x for x in normal if x) < 0:
            normal = tuple(-x for x in normal)
        level = zlinalg.dot(normal, base)
        key = (normal, level)
        if key in facets or key in rejected:
            continue

        if as_int64 is not None and 2 * n * max(map(abs, normal)) * coordinate_bound < INT64_SAFE:
            values = as_int64 @ np.array(normal, dtype=np.int64) - level
        else:
            values = as_objects.dot(np.array(normal, dtype=object)) - level

        if (values >= 0).all():
            facets[key] = (normal, -level)
        elif (values <= 0).all():
            facets[key] = (tuple(-x for x in normal), level)
        else:
            rejected.add(key)

    logging.debug("Polytope: hull of %i points has %i facets", size, len(facets))
    return sorted(facets.values())


class LatticePolytope:
    """
    A full dimensional lattice polytope of Z^n.
    Use LatticePolytope.from_vertices to build one from any finite set of points.
    """

    def __init__(self,
                 vertices: Sequence[Sequence[int]],
                 inequalities: Sequence[Tuple[Sequence[int], int]],
                 embedding: Optional[LatticeEmbedding] = None):
        """
        Builds the polytope from its vertices and its irredundant facet inequalities.
        :param vertices: the vertices (any order)
        :param inequalities: (inward primitive normal, offset) pairs
        :param embedding: the embedding of a lower dimensional input if any
        """
        self.vertices = tuple(sorted(set(tuple(v) for v in vertices)))  # type: Tuple[IntVec]
        self.dim = len(self.vertices[0])
        self.embedding = embedding
        self._index = {v: i for i, v in enumerate(self.vertices)}
        self.facets = tuple(Facet(normal, offset,
                                  (i for i, v in enumerate(self.vertices)
                                   if zlinalg.dot(normal, v) + offset == 0))
                            for normal, offset in sorted((tuple(a), b) for a, b in inequalities))
        self._faces = self._face_lattice()
        self._triangulations = {}

    def __repr__(self):
        return "LatticePolytope(dim={}, vertices={})".format(self.dim, list(self.vertices))

    def __eq__(self, other):
        return (isinstance(other, LatticePolytope) and self.vertices == other.vertices)

    def __hash__(self):
        return hash(self.vertices)

    @classmethod
    def from_vertices(cls, points: Sequence[Sequence[int]]) -> 'LatticePolytope':
        """
        Builds the convex hull of a finite set of lattice points.
        :param points: integer points, redundant points are allowed
        :return:
        """
        points = sorted(set(_check_points(points)))
        origin = points[0]
        ambient = len(origin)
        differences = [zlinalg.sub(p, origin) for p in points[1:]]
        rank, projection = zlinalg.lattice_embedding(differences, ambient)
        if rank == 0:
            raise InputFormatError("Polytope: a single point is not a polytope of dimension >= 1")

        embedding = None
        if rank < ambient:
            logging.info("Polytope: input of dimension %i in Z^%i, changing lattice coordinates",
                         rank, ambient)
            embedding = LatticeEmbedding(origin, projection)
            points = sorted(zlinalg.mat_vec(projection, zlinalg.sub(p, origin)) for p in points)

        inequalities = _hull_facets(points)
        vertices = []
        for point in points:
            tight = [normal for normal, offset in inequalities
                     if zlinalg.dot(normal, point) + offset == 0]
            if len(tight) >= rank and zlinalg.integer_rank(tight) == rank:
                vertices.append(point)
        return cls(vertices, inequalities, embedding)

    @classmethod
    def from_json(cls, document: Dict) -> 'LatticePolytope':
        """
        Builds a polytope from a document {"vertices": [[...], ...]}
        :param document:
        :return:
        """
        if not isinstance(document, dict) or "vertices" not in document:
            raise InputFormatError("Polytope: a 'vertices' list is expected")
        return cls.from_vertices(document["vertices"])

    def serialize(self) -> Dict:
        """
        Json friendly representation
        """
        return {"vertices": [list(v) for v in self.vertices]}

    def embed(self, point: Sequence[int]) -> IntVec:
        """
        Coordinates of an input point in the lattice of the polytope
        (the identity unless the input was lower dimensional)
        :param point:
        :return:
        """
        if self.embedding is None:
            return tuple(point)
        return zlinalg.mat_vec(self.embedding.projection,
                               zlinalg.sub(point, self.embedding.origin))

    def index(self, vertex: Sequence[int]) -> int:
        """
        Index of a vertex
        """
        try:
            return self._index[tuple(vertex)]
        except KeyError:
            raise InputFormatError("Polytope: {} is not a vertex".format(tuple(vertex)))

    # face lattice

    def _face_lattice(self) -> Dict[int, List[Face]]:
        facet_sets = [frozenset(f.vertex_indices) for f in self.facets]
        known = set(facet_sets)
        stack = list(facet_sets)
        while stack:
            current = stack.pop()
            for other in facet_sets:
                meet = current & other
                if meet and meet not in known:
                    known.add(meet)
                    stack.append(meet)
        known.add(frozenset(range(len(self.vertices))))

        faces = {dim: [] for dim in range(self.dim + 1)}
        for vertex_set in known:
            containing = [i for i, s in enumerate(facet_sets) if vertex_set <= s]
            normals = [self.facets[i].normal for i in containing]
            dim = self.dim - zlinalg.integer_rank(normals)
            faces[dim].append(Face(vertex_set, dim, containing))
        for dim in faces:
            faces[dim].sort(key=lambda f: f.vertex_indices)
        return faces

    def faces(self, dim: int) -> List[Face]:
        """
        Faces of a given dimension, ordered by their vertex indices
        :param dim:
        :return:
        """
        if dim < 0 or dim > self.dim:
            return []
        return list(self._faces[dim])

    @property
    def edges(self) -> List[Face]:
        """
        The one dimensional faces
        """
        return self._faces[1]

    def edge_length(self, edge: Face) -> int:
        """
        Lattice length of an edge
        """
        if edge.dim != 1:
            raise LatticeError("Polytope: {} is not an edge".format(edge))
        start, end = (self.vertices[i] for i in edge.vertex_indices)
        return zlinalg.lattice_length(zlinalg.sub(end, start))

    @cached_property
    def graph(self) -> nx.Graph:
        """
        The vertex-edge graph, edges carry their lattice length
        """
        graph = nx.Graph()
        for i, vertex in enumerate(self.vertices):
            graph.add_node(i, point=vertex)
        for edge in self.edges:
            graph.add_edge(*edge.vertex_indices, length=self.edge_length(edge))
        return graph

    def edge_directions(self, vertex: Sequence[int]) -> List[Tuple[IntVec, int]]:
        """
        Primitive directions of the edges leaving a vertex with their lattice lengths,
        ordered by decreasing direction
        :param vertex:
        :return:
        """
        index = self.index(vertex)
        directions = []
        for neighbor in self.graph.neighbors(index):
            vector = zlinalg.sub(self.vertices[neighbor], self.vertices[index])
            directions.append((zlinalg.primitive_vector(vector), zlinalg.lattice_length(vector)))
        return sorted(directions, reverse=True)

    # point sets

    def contains(self, point: Sequence[int]) -> bool:
        """
        Returns True if the point lies in the polytope
        """
        return all(facet.value(point) >= 0 for facet in self.facets)

    def on_boundary(self, point: Sequence[int]) -> bool:
        """
        Returns True if the point lies on a facet
        """
        return self.contains(point) and any(facet.value(point) == 0 for facet in self.facets)

    @cached_property
    def lattice_points(self) -> Tuple[IntVec, ...]:
        """
        All the lattice points of the polytope in lexicographic order
        """
        return tuple(_enumerate_lattice_points(self))

    @property
    def boundary_points(self) -> List[IntVec]:
        """
        Lattice points lying on a facet
        """
        return [p for p in self.lattice_points if self.on_boundary(p)]

    @property
    def interior_points(self) -> List[IntVec]:
        """
        Lattice points lying in the interior
        """
        return [p for p in self.lattice_points if not self.on_boundary(p)]

    # triangulation and volumes

    def triangulate(self, face: Optional[Face] = None) -> List[Tuple[int, ...]]:
        """
        Pulling triangulation of a face : the face is coned from its first vertex over the
        triangulations of its facets not containing that vertex.
        :param face: defaults to the whole polytope
        :return: simplices as tuples of vertex indices
        """
        face = face if face is not None else self._faces[self.dim][0]
        if face.vertex_indices in self._triangulations:
            return self._triangulations[face.vertex_indices]
        if face.dim == 0:
            simplices = [face.vertex_indices]
        else:
            apex = face.vertex_indices[0]
            children = [f for f in self._faces[face.dim - 1]
                        if set(f.vertex_indices) <= set(face.vertex_indices)]
            simplices = [(apex,) + simplex
                         for child in children if apex not in child
                         for simplex in self.triangulate(child)]
        self._triangulations[face.vertex_indices] = simplices
        return simplices

    def _simplex_matrix(self, simplex: Sequence[int]) -> List[IntVec]:
        base = self.vertices[simplex[0]]
        return [zlinalg.sub(self.vertices[i], base) for i in simplex[1:]]

    @cached_property
    def normalized_volume(self) -> int:
        """
        n! times the euclidean volume
        """
        return sum(abs(zlinalg.determinant(self._simplex_matrix(s))) for s in self.triangulate())

    def facet_volume(self, facet: Facet) -> int:
        """
        Normalized (n-1)-volume of a facet measured in the lattice of its hyperplane
        :param facet:
        :return:
        """
        face = next(f for f in self._faces[self.dim - 1]
                    if f.vertex_indices == facet.vertex_indices)
        transverse = zlinalg.unit_dual_vector(facet.normal)
        return sum(abs(zlinalg.determinant(self._simplex_matrix(s) + [transverse]))
                   for s in self.triangulate(face))

    @cached_property
    def stats(self) -> PolytopeStats:
        """
        The statistics used by the closed secant formulas
        """
        lengths = [self.edge_length(e) for e in self.edges]
        boundary = len(self.boundary_points)
        total = len(self.lattice_points)
        stats = PolytopeStats(dimension=self.dim,
                              vertices=len(self.vertices),
                              edge_points=len(self.vertices) + sum(l - 1 for l in lengths),
                              boundary_points=boundary,
                              interior_points=total - boundary,
                              boundary_volume=sum(self.facet_volume(f) for f in self.facets),
                              lattice_points=total,
                              normalized_volume=self.normalized_volume,
                              perimeter=sum(lengths))
        logging.debug("Polytope: stats %s", stats)
        return stats

    # smoothness

    @cached_property
    def smoothness_defect(self) -> Optional[IntVec]:
        """
        The first vertex violating the Delzant condition, None if the polytope is smooth
        """
        for vertex in self.vertices:
            if not self.is_smooth_at(vertex):
                return vertex
        return None

    def is_smooth_at(self, vertex: Sequence[int]) -> bool:
        """
        Delzant condition at one vertex : n edges whose primitive directions are a lattice basis
        :param vertex:
        :return:
        """
        directions = [d for d, _ in self.edge_directions(vertex)]
        if len(directions) != self.dim:
            logging.debug("Polytope: vertex %s has %i edges", tuple(vertex), len(directions))
            return False
        if not zlinalg.is_partial_lattice_basis(directions):
            logging.debug("Polytope: edges at %s do not form a lattice basis", tuple(vertex))
            return False
        return True

    @property
    def is_smooth(self) -> bool:
        """
        Smooth (Delzant) polytope
        """
        return self.smoothness_defect is None

    def require_smooth(self) -> 'LatticePolytope':
        """
        Raises a NotSmoothError if the polytope is not smooth
        """
        if not self.is_smooth:
            raise NotSmoothError("Polytope: not smooth at vertex {}"
                                 .format(self.smoothness_defect), self.smoothness_defect)
        return self

    def vertex_neighbors(self, vertex: Sequence[int]) -> List[IntVec]:
        """
        The first lattice point on each edge leaving the vertex
        :param vertex:
        :return:
        """
        return sorted(zlinalg.add(vertex, d) for d, _ in self.edge_directions(vertex))

    # lattice transformations

    def transform(self, affine_map: AffineUnimodularMap) -> 'LatticePolytope':
        """
        Image of the polytope by an affine unimodular map
        :param affine_map:
        :return:
        """
        if affine_map.dimension != self.dim:
            raise LatticeError("Polytope: cannot apply a map of Z^{} to a polytope of Z^{}"
                               .format(affine_map.dimension, self.dim))
        # <a, x> + b >= 0 with x = L^-1 (y - t) becomes <L^-T a, y> + b - <L^-T a, t> >= 0
        dual = zlinalg.transpose(affine_map.inverse_linear)
        inequalities = []
        for facet in self.facets:
            normal = zlinalg.mat_vec(dual, facet.normal)
            inequalities.append((normal, facet.offset - zlinalg.dot(normal,
                                                                    affine_map.translation)))
        return LatticePolytope([affine_map.apply(v) for v in self.vertices], inequalities)

    def standard_position(self, vertex: Sequence[int]) -> Tuple['LatticePolytope',
                                                                 AffineUnimodularMap]:
        """
        Moves a smooth vertex to the origin with its primitive edge directions sent to the
        standard basis. The other vertices may be singular.
        :param vertex:
        :return: the image polytope and the map used
        """
        if not self.is_smooth_at(vertex):
            raise NotSmoothError("Polytope: not smooth at vertex {}".format(tuple(vertex)),
                                 vertex)
        directions = [d for d, _ in self.edge_directions(vertex)]
        linear = zlinalg.inverse_matrix(zlinalg.transpose(directions))
        translation = tuple(-x for x in zlinalg.mat_vec(linear, vertex))
        affine_map = AffineUnimodularMap(linear, translation, check=False)
        logging.debug("Polytope: standard position at %s with %s", tuple(vertex), affine_map)
        return self.transform(affine_map), affine_map

    @cached_property
    def normal_fan(self) -> Fan:
        """
        The normal fan : one ray per facet, one maximal cone per vertex
        """
        cones = [[j for j, facet in enumerate(self.facets) if i in facet.vertex_indices]
                 for i in range(len(self.vertices))]
        return Fan([facet.normal for facet in self.facets], cones)


class PointConfiguration:
    """
    A finite set of lattice points, kept in lexicographic order
    """
    __slots__ = 'points', '_hull'

    def __init__(self, points: Iterable[Sequence[int]]):
        self.points = tuple(sorted(set(_check_points(list(points)))))
        self._hull = None

    def __repr__(self):
        return "PointConfiguration({} points)".format(len(self.points))

    def __len__(self):
        return len(self.points)

    def __contains__(self, point) -> bool:
        return tuple(point) in set(self.points)

    @property
    def dim(self) -> int:
        """
        Dimension of the ambient lattice
        """
        return len(self.points[0])

    @property
    def hull(self) -> LatticePolytope:
        """
        Convex hull of the points
        """
        if self._hull is None:
            self._hull = LatticePolytope.from_vertices(self.points)
        return self._hull

    @classmethod
    def from_json(cls, document: Dict) -> 'PointConfiguration':
        """
        Builds a configuration from a document {"points": [[...], ...]}
        """
        if not isinstance(document, dict) or "points" not in document:
            raise InputFormatError("Polytope: a 'points' list is expected")
        return cls(_check_points(document["points"]))

    def serialize(self) -> Dict:
        """
        Json friendly representation
        """
        return {"points": [list(p) for p in self.points]}


def _box_grid(lower: Sequence[int], upper: Sequence[int]) -> np.ndarray:
    axes = [np.arange(lo, hi + 1, dtype=np.int64) for lo, hi in zip(lower, upper)]
    if not axes:
        return np.zeros((1, 0), dtype=np.int64)
    return np.stack(np.meshgrid(*axes, indexing='ij'), axis=-1).reshape(-1, len(axes))


def _enumerate_lattice_points(polytope: LatticePolytope) -> List[IntVec]:
    """
    Scans the bounding box one slice of first coordinate at a time. A box of more than
    MAX_BOX_POINTS points is refused, the command line sets it from the config.
    :param polytope:
    :return:
    """
    lower = [min(v[i] for v in polytope.vertices) for i in range(polytope.dim)]
    upper = [max(v[i] for v in polytope.vertices) for i in range(polytope.dim)]
    box_size = 1
    for lo, hi in zip(lower, upper):
        box_size *= hi - lo + 1
    if box_size > MAX_BOX_POINTS:
        raise InputFormatError("Polytope: bounding box of {} points is too large to scan"
                               .format(box_size))

    normal_bound = max(abs(x) for f in polytope.facets for x in f.normal)
    offset_bound = max(abs(f.offset) for f in polytope.facets)
    coordinate_bound = max(max(abs(x) for x in lower), max(abs(x) for x in upper))
    if polytope.dim * normal_bound * coordinate_bound + offset_bound >= INT64_SAFE:
        logging.info("Polytope: large coordinates, scanning lattice points without numpy")
        return [p for p in itertools.product(*(range(lo, hi + 1) for lo, hi in zip(lower, upper)))
                if polytope.contains(p)]

    normals = np.array([f.normal for f in polytope.facets], dtype=np.int64)
    offsets = np.array([f.offset for f in polytope.facets], dtype=np.int64)
    rest = _box_grid(lower[1:], upper[1:])
    points = []
    for first in range(lower[0], upper[0] + 1):
        block = np.hstack([np.full((rest.shape[0], 1), first, dtype=np.int64), rest])
        inside = ((block @ normals.T + offsets) >= 0).all(axis=1)
        points.extend(tuple(int(x) for x in row) for row in block[inside])
    logging.debug("Polytope: %i lattice points found in a box of %i", len(points), box_size)
    return points


def build_polytope(vertices: Sequence[Sequence[int]]) -> LatticePolytope:
    """
    Convex hull of the given points, see LatticePolytope.from_vertices
    """
    return LatticePolytope.from_vertices(vertices)


def lattice_points(polytope: LatticePolytope) -> List[IntVec]:
    """
    Lattice points of the polytope in lexicographic order
    """
    return list(polytope.lattice_points)


def normalized_volume(polytope: LatticePolytope) -> int:
    """
    n! · Vol(P)
    """
    return polytope.normalized_volume


def stats(polytope: LatticePolytope) -> PolytopeStats:
    """
    Statistics (n, V, E, B, I, S, ℓ, d, perimeter) of the polytope
    """
    return polytope.stats


def faces(polytope: LatticePolytope, dim: int) -> List[Face]:
    """
    Faces of the polytope of a given dimension
    """
    return polytope.faces(dim)


def edge_length(polytope: LatticePolytope, edge: Face) -> int:
    """
    Number of lattice points on the edge minus one
    """
    return polytope.edge_length(edge)


def facet_volume(polytope: LatticePolytope, facet: Facet) -> int:
    """
    Normalized volume of a facet in its own lattice
    """
    return polytope.facet_volume(facet)


def is_smooth(polytope: LatticePolytope) -> Tuple[bool, Optional[IntVec]]:
    """
    Returns (True, None) for a smooth polytope, (False, failing vertex) otherwise
    """
    return polytope.is_smooth, polytope.smoothness_defect


def vertex_neighbors(polytope: LatticePolytope, vertex: Sequence[int]) -> List[IntVec]:
    """
    The first lattice point of each edge leaving the vertex
    """
    return polytope.vertex_neighbors(vertex)


def standard_position(polytope: LatticePolytope,
                      vertex: Sequence[int]) -> Tuple[LatticePolytope, AffineUnimodularMap]:
    """
    Image of a smooth polytope with the vertex at the origin and its edges along the axes
    """
    return polytope.standard_position(vertex)


def normal_fan(polytope: LatticePolytope) -> Fan:
    """
    Normal fan of the polytope
    """
    return polytope.normal_fan


def random_unimodular_map(n: int, rng, spread: int = 3) -> AffineUnimodularMap:
    """
    Random element of AGL(n, Z) with small entries
    :param n:
    :param rng: a random.Random instance
    :param spread: bound on the translation entries
    :return:
    """
    linear = zlinalg.random_unimodular_matrix(n, rng)
    return AffineUnimodularMap(linear, tuple(rng.randint(-spread, spread) for _ in range(n)))


if __name__ == '__main__':

    logging.getLogger().setLevel(logging.DEBUG)

    def hexagon():
        """
        Test
        :return:
        """
        polytope = build_polytope([(0, 0), (1, 0), (2, 1), (2, 2), (1, 2), (0, 1)])
        print(polytope, polytope.stats, is_smooth(polytope))

    hexagon()
