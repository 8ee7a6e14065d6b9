# LatticeTetra.orbits - Orbits of a tetrahedron under the symmetries of a cube, and the number of
#   congruent copies inside [0,n]^3
#
#  The symmetry group of [0,m]^3 is realized as the 6 coordinate permutations times the 8 per-axis
#   complementations x -> m - x. Applying a map to a Tetra gives another Tetra (vertices re-sorted).
#

# vim:set ts=8 shiftwidth=8 softtabstop=8 noexpandtab :

import itertools
import logging

from collections import namedtuple

from .exceptions import InvalidInputError
from .facegen import Tetra, normalizeOctant, enclosingCube

__all__ = ('OrbitStats', 'CUBE_MAPS', 'applyCubeMap', 'translateTetra', 'dilate', 'extents',
	'symmetryOrbit', 'fullOrbit', 'beta', 'gamma', 'orbitShapes', 'orbitExtents', 'classKey',
	'orbitStats', 'orbitStatsFromExtents', 'orbitStatsBySets', 'countInCube',
)

logger = logging.getLogger(__name__)

AXIS_VECTORS = ( (1, 0, 0), (0, 1, 0), (0, 0, 1) )


class OrbitStats(namedtuple('OrbitStats', ('m', 'alpha', 'beta', 'gamma'))):
	'''
		OrbitStats - Enclosing cube size m and the three orbit cardinalities:

		    alpha - |S|, S the full orbit of T inside [0,m]^3
		    beta  - |S & (S + e_z)|
		    gamma - |(S + e_y) & (S + e_z)|
	'''

	__slots__ = ()

	def countInCube(self, n):
		'''
			countInCube - Number of copies of the tetrahedron in [0,n]^3:

			    (n+1-m)^3 alpha - 3 (n+1-m)^2 (n-m) beta + 3 (n+1-m) (n-m)^2 gamma

			  and 0 when n < m.
		'''
		if n < self.m:
			return 0

		room = n + 1 - self.m
		shift = n - self.m
		return room ** 3 * self.alpha - 3 * room * room * shift * self.beta + 3 * room * shift * shift * self.gamma


# (permutation, complement mask) pairs. The identity is first.
CUBE_MAPS = tuple( (permutation, tuple( bool(mask & (1 << axis)) for axis in range(3) ))
	for permutation in itertools.permutations(range(3)) for mask in range(8)
)


def applyCubeMap(tetra, cubeMap, cubeSize):
	'''
		applyCubeMap - Image of tetra under one symmetry of [0,cubeSize]^3

		@param tetra - 4 integer points
		@param cubeMap <tuple> - (permutation, complement flags), an entry of CUBE_MAPS
		@param cubeSize <int> - m

		@return <Tetra>
	'''
	(permutation, complement) = cubeMap
	ret = []
	for vertex in tetra:
		point = [ vertex[permutation[0]], vertex[permutation[1]], vertex[permutation[2]] ]
		for axis in range(3):
			if complement[axis]:
				point[axis] = cubeSize - point[axis]
		ret.append(point)

	return Tetra(ret)


def translateTetra(tetra, offset):
	return Tetra( (v[0] + offset[0], v[1] + offset[1], v[2] + offset[2]) for v in tetra )


def dilate(tetra, factor):
	'''
		dilate - Scale every vertex by a positive integer

		@param tetra - 4 integer points
		@param factor <int> - j >= 1

		@return <Tetra>
	'''
	if isinstance(factor, bool) or not isinstance(factor, int) or factor < 1:
		raise InvalidInputError('Dilation factor must be a positive integer, got %r' %(factor, ))

	return Tetra( (v[0] * factor, v[1] * factor, v[2] * factor) for v in tetra )


def extents(tetra):
	'''
		extents - Per-axis width (max - min) of the vertices

		@return tuple<int> - (ex, ey, ez)
	'''
	return tuple( max(v[axis] for v in tetra) - min(v[axis] for v in tetra) for axis in range(3) )


def symmetryOrbit(tetra, cubeSize=None):
	'''
		symmetryOrbit - All images of tetra under the 48 symmetries of [0,m]^3.

		  The images are positions inside the cube and are not re-normalized.

		@param tetra <Tetra> - Normalized
		@param cubeSize <int/None> - m, defaults to enclosingCube(tetra)

		@return frozenset<Tetra> - Size divides 48
	'''
	if cubeSize is None:
		cubeSize = enclosingCube(tetra)

	return frozenset( applyCubeMap(tetra, cubeMap, cubeSize) for cubeMap in CUBE_MAPS )


def fullOrbit(tetra):
	'''
		fullOrbit - Every copy of tetra inside its enclosing cube [0,m]^3: the symmetry orbits of all
		  translates which still fit.

		@param tetra <Tetra> - Normalized

		@return frozenset<Tetra> - S, with alpha = |S|
	'''
	tetra = normalizeOctant(tetra)
	cubeSize = enclosingCube(tetra)
	(ex, ey, ez) = extents(tetra)

	ret = set()
	for offset in itertools.product(range(cubeSize - ex + 1), range(cubeSize - ey + 1), range(cubeSize - ez + 1)):
		ret.update( symmetryOrbit(translateTetra(tetra, offset), cubeSize) )

	return frozenset(ret)


def _shiftSet(tetraSet, axis):
	offset = AXIS_VECTORS[axis]
	return set( translateTetra(t, offset) for t in tetraSet )


def beta(tetra, axis=2):
	'''
		beta - |S & (S + e)| for the full orbit S and the unit vector e along axis
	'''
	orbit = fullOrbit(tetra)
	return len(orbit.intersection(_shiftSet(orbit, axis)))


def gamma(tetra, axes=(1, 2)):
	'''
		gamma - |(S + e1) & (S + e2)| for the full orbit S and unit vectors along two distinct axes
	'''
	if axes[0] == axes[1]:
		raise InvalidInputError('gamma needs two distinct axes, got %r' %(axes, ))

	orbit = fullOrbit(tetra)
	return len(_shiftSet(orbit, axes[0]).intersection(_shiftSet(orbit, axes[1])))


def orbitShapes(tetra):
	'''
		orbitShapes - The distinct normalized images of tetra under the 48 cube maps.

		  Two tetrahedra are congruent by a cube symmetry plus a translation exactly when their
		  shape sets are equal.

		@return frozenset<Tetra>
	'''
	return frozenset( normalizeOctant(applyCubeMap(tetra, cubeMap, 0)) for cubeMap in CUBE_MAPS )


def orbitExtents(tetra):
	'''
		orbitExtents - Extents of every distinct normalized image, sorted

		@return tuple<tuple<int>>
	'''
	return tuple(sorted( extents(shape) for shape in orbitShapes(tetra) ))


def classKey(tetra):
	'''
		classKey - Canonical representative of tetra up to cube symmetries and translations:
		  the smallest of its normalized images.

		@return <Tetra>
	'''
	return min(orbitShapes(tetra))


def orbitStatsFromExtents(shapeExtents, cubeSize, factor=1):
	'''
		orbitStatsFromExtents - alpha, beta, gamma from the extents of the normalized images.

		  Every normalized image U with extents e sits at (m - ex + 1)(m - ey + 1)(m - ez + 1) places
		  inside [0,m]^3, and distinct images never coincide after translation, so

		    alpha = sum (m - ex + 1)(m - ey + 1)(m - ez + 1)
		    beta  = sum (m - ex + 1)(m - ey + 1)(m - ez)
		    gamma = sum (m - ex + 1)(m - ey)(m - ez)

		@param shapeExtents - As returned by orbitExtents
		@param cubeSize <int> - m of the undilated tetrahedron
		@param factor <int> - Dilation j; extents and m are scaled by it

		@return <OrbitStats>
	'''
	m = cubeSize * factor
	alpha = betaValue = gammaValue = 0
	for (ex, ey, ez) in shapeExtents:
		roomX = m - ex * factor
		roomY = m - ey * factor
		roomZ = m - ez * factor
		alpha += (roomX + 1) * (roomY + 1) * (roomZ + 1)
		betaValue += (roomX + 1) * (roomY + 1) * roomZ
		gammaValue += (roomX + 1) * roomY * roomZ

	return OrbitStats(m, alpha, betaValue, gammaValue)


def orbitStats(tetra):
	'''
		orbitStats - OrbitStats of a tetrahedron in closed form

		@param tetra <Tetra> - Normalized

		@return <OrbitStats>
	'''
	tetra = normalizeOctant(tetra)
	return orbitStatsFromExtents(orbitExtents(tetra), enclosingCube(tetra))


def orbitStatsBySets(tetra):
	'''
		orbitStatsBySets - OrbitStats by building the orbit set S and intersecting shifted copies.

		  Slow. Used to check orbitStats.
	'''
	tetra = normalizeOctant(tetra)
	orbit = fullOrbit(tetra)
	shiftedY = _shiftSet(orbit, 1)
	shiftedZ = _shiftSet(orbit, 2)

	return OrbitStats(enclosingCube(tetra), len(orbit), len(orbit.intersection(shiftedZ)), len(shiftedY.intersection(shiftedZ)))


def countInCube(tetraOrStats, n):
	'''
		countInCube - f(T, n), the number of tetrahedra congruent to T by a cube symmetry and
		  a translation inside [0,n]^3.

		@param tetraOrStats <Tetra/OrbitStats> - A normalized tetrahedron, or its precomputed stats
		@param n <int> - Cube size, >= 0

		@return <int>
	'''
	if isinstance(n, bool) or not isinstance(n, int) or n < 0:
		raise InvalidInputError('n must be a non-negative integer, got %r' %(n, ))

	if isinstance(tetraOrStats, OrbitStats):
		stats = tetraOrStats
	else:
		stats = orbitStats(tetraOrStats)

	return stats.countInCube(n)


# vim:set ts=8 shiftwidth=8 softtabstop=8 noexpandtab :
