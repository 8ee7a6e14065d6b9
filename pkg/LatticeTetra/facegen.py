# LatticeTetra.facegen - Equilateral triangles in the face plane a*x + b*y + c*z = 0 and their
#   completion to regular tetrahedra.
#
#  The plane of a PrimitiveSolution (a, b, c, d) carries a hexagonal sub-lattice generated by two
#   integer vectors zeta, eta with |zeta|^2 = |eta|^2 = 2d^2 and zeta.eta = d^2. Every pair (m, n)
#   gives the triangle O, P = m*zeta - n*eta, Q = n*zeta - (n - m)*eta of side d*sqrt(2(m^2-mn+n^2)),
#   and the apex over it is R = (P + Q +/- 2k(a, b, c)) / 3.
#

# vim:set ts=8 shiftwidth=8 softtabstop=8 noexpandtab :

import functools
import itertools
import logging

from collections import namedtuple

from .exceptions import InvalidInputError, NoIntegralBasisError, ApexError, NotLatticeRegularError
from .numtheory import MNPair, isPrimitiveSolution, s3rSolutions
from .utils import addVectors, subtractVectors, scaleVector, dotProduct, crossProduct, squaredNorm, \
	squaredDistance, vectorGcd, exactSquareRoot

__all__ = ('LatticePoint', 'FaceBasis', 'Tetra', 'ThirdsPoint', 'ORIGIN',
	'faceBasis', 'triangle', 'apex', 'classifyApexSigns', 'tetraPair', 'normalizeOctant',
	'enclosingCube', 'isRegular', 'faceDs', 'maxFaceD', 'edgeGcd', 'isIrreducible',
)

logger = logging.getLogger(__name__)


LatticePoint = namedtuple('LatticePoint', ('x', 'y', 'z'))

ORIGIN = LatticePoint(0, 0, 0)


FaceBasis = namedtuple('FaceBasis', ('solution', 'r', 's', 'zeta', 'eta'))


class ThirdsPoint(namedtuple('ThirdsPoint', ('x3', 'y3', 'z3'))):
	'''
		ThirdsPoint - A rational point whose coordinates are x3/3, y3/3, z3/3.

		  Apex candidates are kept in this form until integrality has been decided.
	'''

	__slots__ = ()

	def isIntegral(self):
		return self.x3 % 3 == 0 and self.y3 % 3 == 0 and self.z3 % 3 == 0

	def toLatticePoint(self):
		'''
			toLatticePoint - The integer point

			@raises ApexError - If any coordinate is not a multiple of 3
		'''
		if not self.isIntegral():
			raise ApexError('Apex %s/3 is not a lattice point' %(str(tuple(self)), ))
		return LatticePoint(self.x3 // 3, self.y3 // 3, self.z3 // 3)


class Tetra(tuple):
	'''
		Tetra - Four lattice points in canonical form (vertices sorted lexicographically).

		  Equality and hashing are those of the sorted vertex tuple, so a Tetra can key sets
		  and dicts directly.
	'''

	__slots__ = ()

	def __new__(cls, vertices):
		points = tuple(sorted( (v[0], v[1], v[2]) for v in vertices ))
		if len(points) != 4:
			raise InvalidInputError('A tetrahedron has 4 vertices, got %d' %(len(points), ))
		return tuple.__new__(cls, points)

	@property
	def vertices(self):
		return tuple(self)

	def __repr__(self):
		return 'Tetra(%s)' %(repr(list(self)), )


@functools.lru_cache(maxsize=None)
def faceBasis(sol):
	'''
		faceBasis - The generating vectors zeta, eta of the equilateral sub-lattice of the plane of sol.

		  (r, s) runs over s3rSolutions(a^2 + b^2) in sorted order; the first pair for which

		    zeta = ( -(rac + dbs)/q, (das - bcr)/q, r )
		    eta  = ( -(db(s - 3r) + ac(r + s))/(2q), (da(s - 3r) - bc(r + s))/(2q), (r + s)/2 )

		  is integral (q = a^2 + b^2) and satisfies the basis invariants is taken.

		@param sol <PrimitiveSolution> - Face normal

		@return <FaceBasis>

		@raises InvalidInputError - sol is not a positive ordered primitive solution
		@raises NoIntegralBasisError - No (r, s) worked
	'''
	if not isPrimitiveSolution(sol):
		raise InvalidInputError('Not a positive ordered primitive solution: %r' %(sol, ))

	(a, b, c, d) = sol
	normal = (a, b, c)
	q = a * a + b * b
	twoQ = 2 * q

	for (r, s) in s3rSolutions(q):
		zeta1 = -(r * a * c + d * b * s)
		zeta2 = d * a * s - b * c * r
		eta1 = -(d * b * (s - 3 * r) + a * c * (r + s))
		eta2 = d * a * (s - 3 * r) - b * c * (r + s)

		if zeta1 % q or zeta2 % q or eta1 % twoQ or eta2 % twoQ or (r + s) % 2:
			continue

		zeta = (zeta1 // q, zeta2 // q, r)
		eta = (eta1 // twoQ, eta2 // twoQ, (r + s) // 2)

		if dotProduct(zeta, normal) != 0 or dotProduct(eta, normal) != 0 or \
				squaredNorm(zeta) != 2 * d * d or squaredNorm(eta) != 2 * d * d or \
				dotProduct(zeta, eta) != d * d:
			logger.debug('faceBasis(%s): integral (r, s) = (%d, %d) fails the basis invariants', sol, r, s)
			continue

		return FaceBasis(sol, r, s, zeta, eta)

	raise NoIntegralBasisError('No (r, s) gives an integral face basis for %r' %(sol, ))


def triangle(basis, mn):
	'''
		triangle - The equilateral triangle O, P, Q for (m, n):

		    P = m*zeta - n*eta,   Q = n*zeta - (n - m)*eta

		@param basis <FaceBasis>
		@param mn <MNPair/tuple> - (m, n), not both zero

		@return tuple<LatticePoint> - (P, Q)
	'''
	(m, n) = mn
	if m == 0 and n == 0:
		raise InvalidInputError('triangle: (m, n) = (0, 0) is degenerate')

	zeta = basis.zeta
	eta = basis.eta
	P = subtractVectors(scaleVector(zeta, m), scaleVector(eta, n))
	Q = subtractVectors(scaleVector(zeta, n), scaleVector(eta, n - m))

	return ( LatticePoint(*P), LatticePoint(*Q) )


def apex(P, Q, sol, k, sign):
	'''
		apex - Fourth vertex R = (P + Q + sign*2k*(a, b, c)) / 3 over the triangle O, P, Q.

		  That is the centroid moved by the height of the tetrahedron along the face normal.

		@param P, Q <LatticePoint> - O, P, Q equilateral with squared side 2(dk)^2 in the plane of sol
		@param sol <PrimitiveSolution>
		@param k <int> - Side multiplier, side = dk*sqrt(2)
		@param sign <int> - +1 or -1

		@return <ThirdsPoint> - R, exact (integral or not)

		@raises ApexError - O, P, Q, R is not regular (the precondition did not hold)
	'''
	if sign not in (1, -1):
		raise InvalidInputError('apex: sign must be +1 or -1, got %r' %(sign, ))

	normal = sol[:3]
	numerator = addVectors(addVectors(P, Q), scaleVector(normal, 2 * k * sign))
	side = squaredNorm(P)

	if side == 0 or squaredNorm(Q) != side or squaredDistance(P, Q) != side:
		raise ApexError('apex: O, %s, %s is not an equilateral triangle' %(tuple(P), tuple(Q)))

	for vertex in (ORIGIN, P, Q):
		if squaredDistance(numerator, scaleVector(vertex, 3)) != 9 * side:
			raise ApexError('apex: k=%d sign=%d over O, %s, %s with normal %s is not regular' %(k, sign, tuple(P), tuple(Q), tuple(normal)))

	return ThirdsPoint(*numerator)


def classifyApexSigns(P, Q, sol, k):
	'''
		classifyApexSigns - The signs for which the apex over O, P, Q is a lattice point

		@return tuple<int> - Subset of (-1, 1), in that order
	'''
	return tuple( sign for sign in (-1, 1) if apex(P, Q, sol, k, sign).isIntegral() )


def tetraPair(sol, mn):
	'''
		tetraPair - The two tetrahedra over the triangles for (m, n) and (n, n - m), which share the side OQ.

		  Each triangle is completed with its integral apex (the -1 sign first) and normalized.

		@param sol <PrimitiveSolution>
		@param mn <MNPair/tuple> - m^2 - mn + n^2 must be a perfect square k^2

		@return tuple<Tetra> - Both tetrahedra, side d*k*sqrt(2)
	'''
	(m, n) = mn
	k = exactSquareRoot(m * m - m * n + n * n)
	if not k:
		raise InvalidInputError('tetraPair: m^2 - mn + n^2 is not a positive square for %r' %((m, n), ))

	basis = faceBasis(sol)

	ret = []
	for pair in ( MNPair(m, n), MNPair(n, n - m) ):
		(P, Q) = triangle(basis, pair)
		for sign in (-1, 1):
			R = apex(P, Q, sol, k, sign)
			if R.isIntegral():
				break
		else:
			raise ApexError('tetraPair: no integral apex for %r over %r' %(pair, sol))

		ret.append( normalizeOctant( (ORIGIN, P, Q, R.toLatticePoint()) ) )

	return tuple(ret)


def normalizeOctant(points):
	'''
		normalizeOctant - Translate so the smallest coordinate on every axis is 0, and sort.

		@param points - 4 integer points

		@return <Tetra>
	'''
	points = [ tuple(p) for p in points ]
	minimums = ( min(p[0] for p in points), min(p[1] for p in points), min(p[2] for p in points) )
	return Tetra( subtractVectors(p, minimums) for p in points )


def enclosingCube(tetra):
	'''
		enclosingCube - Size m of the smallest cube [0, m]^3 holding a normalized tetrahedron
	'''
	return max( max(v) for v in tetra )


def isRegular(tetra):
	'''
		isRegular - Side parameter of a lattice regular tetrahedron.

		@param tetra - 4 integer points

		@return <int/None> - lambda with every squared edge equal to 2*lambda^2, or None if the points
		   are not a regular tetrahedron of that form
	'''
	distances = set( squaredDistance(u, v) for (u, v) in itertools.combinations(tuple(tetra), 2) )
	if len(distances) != 1:
		return None

	side = distances.pop()
	if side <= 0 or side % 2:
		return None

	return exactSquareRoot(side // 2)


def faceDs(tetra):
	'''
		faceDs - For each face, the d of its primitive normal (i, j, k): d = sqrt((i^2 + j^2 + k^2) / 3)

		@param tetra <Tetra> - A lattice regular tetrahedron

		@return list<int> - One d per face, in vertex-combination order

		@raises NotLatticeRegularError - A face normal is not of the form 3d^2
	'''
	ret = []
	for (A, B, C) in itertools.combinations(tuple(tetra), 3):
		normal = crossProduct(subtractVectors(B, A), subtractVectors(C, A))
		divisor = vectorGcd(normal)
		if divisor == 0:
			raise NotLatticeRegularError('Degenerate face %s' %(str((A, B, C)), ))

		size = squaredNorm(normal) // (divisor * divisor)
		d = exactSquareRoot(size // 3) if size % 3 == 0 else None
		if d is None:
			raise NotLatticeRegularError('Face %s has primitive normal of squared length %d, not 3d^2' %(str((A, B, C)), size))
		ret.append(d)

	return ret


def maxFaceD(tetra):
	'''
		maxFaceD - Largest face d. Every face d divides the side parameter lambda; the maximum equals
		  lambda exactly when some face generates the tetrahedron with k = 1.
	'''
	return max(faceDs(tetra))


def edgeGcd(tetra):
	'''
		edgeGcd - gcd of all coordinates of the edge vectors from the first vertex.

		  A lattice tetrahedron is an integer dilation of a smaller one exactly when this exceeds 1.
	'''
	vertices = tuple(tetra)
	first = vertices[0]
	return vectorGcd( coordinate for vertex in vertices[1:] for coordinate in subtractVectors(vertex, first) )


def isIrreducible(tetra):
	return edgeGcd(tetra) == 1


# vim:set ts=8 shiftwidth=8 softtabstop=8 noexpandtab :
