# coding=utf-8
"""
Fan module

A complete simplicial fan given by its rays and its maximal cones.
Cones are stored as frozensets of ray indices.
"""
from typing import Sequence, Dict, Iterable, List, Optional, Set, FrozenSet
import logging
import itertools

from libs.utils.custom_types import IntVec, Cone
from libs.utils.custom_exceptions import LatticeError
import libs.zlinalg.zlinalg as zlinalg


class Fan:
    """
    Normal fan of a lattice polytope.
    Only the data needed by the intersection theory is kept : the rays and the maximal cones.
    """
    __slots__ = ('rays', 'max_cones', 'dim', '_cones', '_dual_bases', '_containing',
                 'cache')

    def __init__(self, rays: Sequence[Sequence[int]], max_cones: Iterable[Iterable[int]]):
        self.rays = tuple(tuple(ray) for ray in rays)
        if not self.rays:
            raise LatticeError("Fan: a fan needs at least one ray")
        self.dim = len(self.rays[0])
        self.max_cones = tuple(sorted((frozenset(cone) for cone in max_cones),
                                      key=lambda c: sorted(c)))
        self._cones = None
        self._dual_bases = {}
        self._containing = {}
        # per fan memo used by the intersection theory
        self.cache = {}

    def __repr__(self):
        return "Fan(rays={}, max_cones={})".format(self.rays,
                                                   [sorted(c) for c in self.max_cones])

    @property
    def cones(self) -> Set[Cone]:
        """
        Every cone of the fan, including the zero cone
        """
        if self._cones is None:
            cones = set()
            for cone in self.max_cones:
                ordered = sorted(cone)
                for size in range(len(ordered) + 1):
                    cones.update(frozenset(c) for c in itertools.combinations(ordered, size))
            self._cones = cones
        return self._cones

    def is_cone(self, cone: FrozenSet[int]) -> bool:
        """
        Returns True if the rays span a cone of the fan
        """
        return cone in self.cones

    def cones_of_dim(self, dim: int) -> List[Cone]:
        """
        Cones with dim rays, in a deterministic order
        """
        return sorted((c for c in self.cones if len(c) == dim), key=sorted)

    def is_smooth(self) -> bool:
        """
        Every maximal cone is generated by a basis of the lattice
        :return:
        """
        for cone in self.max_cones:
            if len(cone) != self.dim:
                return False
            if abs(zlinalg.determinant([self.rays[i] for i in sorted(cone)])) != 1:
                return False
        return True

    def is_complete(self) -> bool:
        """
        Every wall (cone of codimension one) lies in exactly two maximal cones.
        This is the pseudo manifold check, it suffices for normal fans of polytopes.
        :return:
        """
        walls = {}
        for cone in self.max_cones:
            for ray in cone:
                wall = cone - {ray}
                walls[wall] = walls.get(wall, 0) + 1
        return all(count == 2 for count in walls.values())

    def first_max_cone_containing(self, cone: Cone) -> Cone:
        """
        The first maximal cone (in the stored order) containing the given cone
        :param cone:
        :return:
        """
        if cone not in self._containing:
            found = next((c for c in self.max_cones if cone <= c), None)
            if found is None:
                raise LatticeError("Fan: {} is not a cone of the fan".format(sorted(cone)))
            self._containing[cone] = found
        return self._containing[cone]

    def dual_basis(self, max_cone: Cone) -> Dict[int, IntVec]:
        """
        For a smooth maximal cone returns the dual basis : u_ρ with <u_ρ, v_ρ'> = δ(ρ, ρ')
        for every pair of rays of the cone.
        :param max_cone:
        :return:
        """
        if max_cone not in self._dual_bases:
            ordered = sorted(max_cone)
            # U·R^T = I where the rows of R are the ray generators
            inverse = zlinalg.inverse_matrix(zlinalg.transpose([self.rays[i] for i in ordered]))
            self._dual_bases[max_cone] = {ray: inverse[k] for k, ray in enumerate(ordered)}
            logging.debug("Fan: dual basis computed for cone %s", ordered)
        return self._dual_bases[max_cone]

    def linear_relation(self, ray: int, cone: Optional[Cone] = None) -> Dict[int, int]:
        """
        Linear equivalence D_ray ≡ Σ c_ρ'' D_ρ'' where the sum runs over the rays outside
        the maximal cone used to build the character.
        :param ray:
        :param cone: a cone containing the ray (defaults to the ray itself)
        :return: the coefficients c_ρ''
        """
        cone = cone if cone is not None else frozenset((ray,))
        character = self.dual_basis(self.first_max_cone_containing(cone))[ray]
        relation = {}
        for other, generator in enumerate(self.rays):
            if other in cone:
                continue
            value = zlinalg.dot(character, generator)
            if value:
                relation[other] = -value
        return relation
