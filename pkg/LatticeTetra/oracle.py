# LatticeTetra.oracle - Brute-force counts of regular tetrahedra with vertices in {0..n}^3
#
#  None of these use the face plane parametrization or the orbit formulas; they only compare
#   squared distances of lattice points.
#

# vim:set ts=8 shiftwidth=8 softtabstop=8 noexpandtab :

import itertools
import logging
import math

from concurrent.futures import ProcessPoolExecutor

from .exceptions import InvalidInputError, FormulaViolationError, GuardError

__all__ = ('DEFAULT_ORACLE_QUADRUPLE_LIMIT', 'DEFAULT_ORACLE_TRIANGLE_LIMIT',
	'quadrupleCount', 'triangleTetrahedra', 'triangleCount', 'orbitMembersInCube', 'orbitCountInCube',
)

logger = logging.getLogger(__name__)

DEFAULT_ORACLE_QUADRUPLE_LIMIT = 4

DEFAULT_ORACLE_TRIANGLE_LIMIT = 10


def _checkSize(n):
	if isinstance(n, bool) or not isinstance(n, int) or n < 0:
		raise InvalidInputError('n must be a non-negative integer, got %r' %(n, ))


def _squaredDistance(u, v):
	return (u[0] - v[0]) ** 2 + (u[1] - v[1]) ** 2 + (u[2] - v[2]) ** 2


def _cubePoints(n):
	return list(itertools.product(range(n + 1), repeat=3))


def quadrupleCount(n, limit=DEFAULT_ORACLE_QUADRUPLE_LIMIT):
	'''
		quadrupleCount - T(n) by checking every 4-subset of the (n+1)^3 lattice points.

		  The third and fourth point are only tried while all distances so far agree.

		@param n <int> - Cube size
		@param limit <int> - Largest n accepted

		@return <int> - Number of regular tetrahedra

		@raises GuardError - n > limit
	'''
	_checkSize(n)
	if n > limit:
		raise GuardError('quadrupleCount is limited to n <= %d, got %d' %(limit, n))

	points = _cubePoints(n)
	numPoints = len(points)
	count = 0

	for i in range(numPoints):
		pointA = points[i]
		for j in range(i + 1, numPoints):
			pointB = points[j]
			side = _squaredDistance(pointA, pointB)
			for k in range(j + 1, numPoints):
				pointC = points[k]
				if _squaredDistance(pointA, pointC) != side or _squaredDistance(pointB, pointC) != side:
					continue
				for l in range(k + 1, numPoints):
					pointD = points[l]
					if _squaredDistance(pointA, pointD) == side and _squaredDistance(pointB, pointD) == side and \
							_squaredDistance(pointC, pointD) == side:
						count += 1

	return count


def _tetrahedraAtVertex(task):
	'''
		_tetrahedraAtVertex - Tetrahedra having a face whose lexicographically smallest vertex is points[aIndex].

		  Module level so it can be sent to worker processes.

		@param task <tuple> - (n, aIndex)

		@return set<tuple> - Sorted vertex tuples
	'''
	(n, aIndex) = task
	points = _cubePoints(n)
	pointA = points[aIndex]

	# Lattice equilateral triangles have squared side 2*lambda^2
	buckets = {}
	for pointB in points[aIndex + 1:]:
		side = _squaredDistance(pointA, pointB)
		if side % 2:
			continue
		lam = math.isqrt(side // 2)
		if lam * lam * 2 != side:
			continue
		buckets.setdefault(side, []).append(pointB)

	ret = set()
	for (side, candidates) in buckets.items():
		lam = math.isqrt(side // 2)
		threeLam = 3 * lam
		for (pointB, pointC) in itertools.combinations(candidates, 2):
			if _squaredDistance(pointB, pointC) != side:
				continue

			edgeB = (pointB[0] - pointA[0], pointB[1] - pointA[1], pointB[2] - pointA[2])
			edgeC = (pointC[0] - pointA[0], pointC[1] - pointA[1], pointC[2] - pointA[2])
			normal = (
				edgeB[1] * edgeC[2] - edgeB[2] * edgeC[1],
				edgeB[2] * edgeC[0] - edgeB[0] * edgeC[2],
				edgeB[0] * edgeC[1] - edgeB[1] * edgeC[0],
			)

			# apex = centroid +/- 2N / (3 lambda), scaled by 3 lambda
			for sign in (1, -1):
				numerator = [ lam * (pointA[axis] + pointB[axis] + pointC[axis]) + sign * 2 * normal[axis] for axis in range(3) ]
				if any( x % threeLam for x in numerator ):
					continue

				apex = tuple( x // threeLam for x in numerator )
				if min(apex) < 0 or max(apex) > n:
					continue

				if _squaredDistance(apex, pointA) != side or _squaredDistance(apex, pointB) != side or _squaredDistance(apex, pointC) != side:
					raise FormulaViolationError('Apex %s over %s, %s, %s is not equidistant' %(apex, pointA, pointB, pointC))

				ret.add( tuple(sorted( (pointA, pointB, pointC, apex) )) )

	return ret


def triangleTetrahedra(n, allowLarge=False, workers=1, limit=DEFAULT_ORACLE_TRIANGLE_LIMIT):
	'''
		triangleTetrahedra - Every regular tetrahedron in [0,n]^3, found by completing equilateral lattice triangles

		@param n <int> - Cube size
		@param allowLarge <bool> - Lift the size guard
		@param workers <int> - Worker processes for the loop over the first vertex
		@param limit <int> - Largest n accepted without allowLarge

		@return set<tuple> - Sorted vertex tuples

		@raises GuardError - n > limit and not allowLarge
	'''
	_checkSize(n)
	if n > limit and not allowLarge:
		raise GuardError('triangleCount is limited to n <= %d without allowLarge, got %d' %(limit, n))

	tasks = [ (n, aIndex) for aIndex in range((n + 1) ** 3) ]

	ret = set()
	if workers and workers > 1 and len(tasks) > 1:
		chunkSize = max(1, len(tasks) // (workers * 8))
		with ProcessPoolExecutor(max_workers=workers) as executor:
			for found in executor.map(_tetrahedraAtVertex, tasks, chunksize=chunkSize):
				ret.update(found)
	else:
		for task in tasks:
			ret.update(_tetrahedraAtVertex(task))

	logger.debug('triangleTetrahedra(%d): %d tetrahedra', n, len(ret))
	return ret


def triangleCount(n, allowLarge=False, workers=1, limit=DEFAULT_ORACLE_TRIANGLE_LIMIT):
	'''
		triangleCount - T(n) from triangleTetrahedra

		@see triangleTetrahedra
	'''
	return len(triangleTetrahedra(n, allowLarge=allowLarge, workers=workers, limit=limit))


def orbitMembersInCube(tetra, n):
	'''
		orbitMembersInCube - Every image of tetra under a symmetry of [0,n]^3 composed with a
		  translation that keeps it inside [0,n]^3.

		@param tetra - 4 integer points
		@param n <int> - Cube size

		@return set<tuple> - Sorted vertex tuples
	'''
	_checkSize(n)

	vertices = [ tuple(v) for v in tetra ]
	lows = [ min(v[axis] for v in vertices) for axis in range(3) ]
	base = [ tuple(v[axis] - lows[axis] for axis in range(3)) for v in vertices ]
	widths = [ max(v[axis] for v in base) for axis in range(3) ]

	ret = set()
	ranges = [ range(n - widths[axis] + 1) for axis in range(3) ]
	for offset in itertools.product(*ranges):
		placed = [ tuple(v[axis] + offset[axis] for axis in range(3)) for v in base ]
		for permutation in itertools.permutations(range(3)):
			for flips in itertools.product((False, True), repeat=3):
				image = []
				for v in placed:
					w = [ v[permutation[axis]] for axis in range(3) ]
					image.append(tuple( (n - w[axis]) if flips[axis] else w[axis] for axis in range(3) ))
				ret.add(tuple(sorted(image)))

	return ret


def orbitCountInCube(tetra, n):
	'''
		orbitCountInCube - len(orbitMembersInCube(tetra, n))
	'''
	return len(orbitMembersInCube(tetra, n))


# vim:set ts=8 shiftwidth=8 softtabstop=8 noexpandtab :
