# LatticeTetra.numtheory - Exact solvers and closed-form counts for the quadratic forms
#   behind lattice regular tetrahedra:
#
#      a^2 + b^2 + c^2 = 3d^2     (face normals)
#      2x^2 + y^2 = d             (normals with two equal entries)
#      x^2 + 3y^2 = d  and  m^2 - mn + n^2 = k^2    (edge multipliers)
#
#  All arithmetic is on python ints, so nothing can overflow.
#

# vim:set ts=8 shiftwidth=8 softtabstop=8 noexpandtab :

import logging
import math

from collections import namedtuple
from fractions import Fraction

from sympy import factorint, isprime, primefactors

from .exceptions import InvalidInputError, FormulaViolationError
from .utils import exactSquareRoot

__all__ = ('PrimitiveSolution', 'MNPair',
	'legendreMinus3', 'lambdaCount', 'hsTotalCount', 'gamma2', 'gamma3', 'directGamma2', 'directGamma3',
	'piEpsilon', 'threeSquaresPrimitive', 'isPrimitiveSolution', 'twoAcParam', 'kValues', 'mnPrimitive',
	'eisensteinOrbit', 's3rSolutions',
)

logger = logging.getLogger(__name__)


class PrimitiveSolution(namedtuple('PrimitiveSolution', ('a', 'b', 'c', 'd'))):
	'''
		PrimitiveSolution - A positive ordered primitive solution of a^2 + b^2 + c^2 = 3d^2,
		  that is 0 < a <= b <= c and gcd(a, b, c) = 1.

		  (a, b, c) is the normal vector of a face plane.
	'''

	__slots__ = ()

	@property
	def normal(self):
		return (self.a, self.b, self.c)

	@property
	def label(self):
		'''
			label - The "[(a,b,c),d]" notation used for graph nodes
		'''
		return '[(%d,%d,%d),%d]' %(self.a, self.b, self.c, self.d)


class MNPair(namedtuple('MNPair', ('m', 'n'))):
	'''
		MNPair - A solution (m, n) of m^2 - mn + n^2 = k^2
	'''

	__slots__ = ()

	@property
	def norm(self):
		return self.m * self.m - self.m * self.n + self.n * self.n


def _requireInt(name, value, minimum=None):
	if isinstance(value, bool) or not isinstance(value, int):
		raise InvalidInputError('%s must be an integer, got %r' %(name, value))
	if minimum is not None and value < minimum:
		raise InvalidInputError('%s must be >= %d, got %d' %(name, minimum, value))


def _requireOdd(name, value):
	_requireInt(name, value, 1)
	if value % 2 == 0:
		raise InvalidInputError('%s must be odd, got %d' %(name, value))


def legendreMinus3(p):
	'''
		legendreMinus3 - The Legendre symbol (-3 / p)

		@param p <int> - An odd prime

		@return <int> - 0 if p = 3, 1 if p = 1 or 7 (mod 12), -1 if p = 5 or 11 (mod 12)

		@raises InvalidInputError - p is even or not a prime
	'''
	_requireInt('p', p, 3)
	if p % 2 == 0 or not isprime(p):
		raise InvalidInputError('p must be an odd prime, got %d' %(p, ))

	if p == 3:
		return 0
	if p % 12 in (1, 7):
		return 1
	return -1


def lambdaCount(d):
	'''
		lambdaCount - Number of primitive solutions of a^2 + b^2 + c^2 = 3d^2, counting
		  every sign change and permutation:

		    8d * prod over primes p | d of (1 - (-3/p) / p)

		@param d <int> - Odd, positive

		@return <int> - The count

		@raises InvalidInputError - d even or not positive
		@raises FormulaViolationError - The product was not an integer
	'''
	_requireOdd('d', d)

	ret = Fraction(8 * d)
	for p in primefactors(d):
		ret *= 1 - Fraction(legendreMinus3(p), p)

	if ret.denominator != 1:
		raise FormulaViolationError('lambdaCount(%d) evaluated to non-integer %s' %(d, ret))

	return ret.numerator


def hsTotalCount(d):
	'''
		hsTotalCount - Total number of integer solutions of a^2 + b^2 + c^2 = 3d^2
		  (primitive or not, all signs and permutations).

		    8 * prod{p = 1,7 (mod 12), p^e || d} p^e
		      * prod{q = 5,11 (mod 12), q^e || d} (q^e + 2(q^e - 1)/(q - 1))
		      * (3^(g+1) - 1)/2        where 3^g || d  (so 1 when 3 does not divide d)

		  Powers of two do not change the count.

		@param d <int> - Positive

		@return <int> - The count
	'''
	_requireInt('d', d, 1)

	splitPart = 1
	inertPart = 1
	threeExponent = 0
	for prime, exponent in factorint(d).items():
		if prime == 2:
			continue
		if prime == 3:
			threeExponent = exponent
		elif prime % 12 in (1, 7):
			splitPart *= prime ** exponent
		else:
			power = prime ** exponent
			inertPart *= power + 2 * (power - 1) // (prime - 1)

	return 8 * splitPart * inertPart * ((3 ** (threeExponent + 1) - 1) // 2)


def directGamma2(d):
	'''
		directGamma2 - Scan for x >= 1, y >= 1, gcd(x, y) = 1 with d = 2x^2 + y^2

		@param d <int> - Positive

		@return <int> - Number of such (x, y)
	'''
	_requireInt('d', d, 1)

	count = 0
	x = 1
	while 2 * x * x < d:
		y = exactSquareRoot(d - 2 * x * x)
		if y and math.gcd(x, y) == 1:
			count += 1
		x += 1
	return count


def directGamma3(d):
	'''
		directGamma3 - Scan for x >= 1, y >= 1, gcd(x, y) = 1 with d = x^2 + 3y^2

		@param d <int> - Positive

		@return <int> - Number of such (x, y)
	'''
	_requireInt('d', d, 1)

	count = 0
	y = 1
	while 3 * y * y < d:
		x = exactSquareRoot(d - 3 * y * y)
		if x and math.gcd(x, y) == 1:
			count += 1
		y += 1
	return count


def gamma2(d):
	'''
		gamma2 - Number of positive primitive representations d = 2x^2 + y^2.

		  0 if a prime factor of d is 5 or 7 (mod 8), otherwise 2^(k-1) with k the number of
		  distinct prime factors that are 1 or 3 (mod 8). When k = 0 (d = 1) the exact scan is used.

		@param d <int> - Odd, positive

		@return <int> - The count

		@raises InvalidInputError - d even
	'''
	_requireOdd('d', d)

	primes = primefactors(d)
	if any(p % 8 in (5, 7) for p in primes):
		return 0

	k = sum(1 for p in primes if p % 8 in (1, 3))
	if k == 0:
		return directGamma2(d)
	return 2 ** (k - 1)


def gamma3(d):
	'''
		gamma3 - Number of positive primitive representations d = x^2 + 3y^2.

		  For odd d: 0 if 9 | d or a prime factor is 2 (mod 3), otherwise 2^(k-1) with k the
		    number of distinct prime factors that are 1 (mod 3). A single factor 3 forces 3 | x
		    and leaves the count of d/3 unchanged, so it is not counted in k.
		  Even d can only be represented with x, y both odd, so d = 4 (mod 8); those and k = 0
		    are answered by the exact scan.

		@param d <int> - Positive

		@return <int> - The count
	'''
	_requireInt('d', d, 1)

	if d % 2 == 0:
		if d % 8 == 4:
			return directGamma3(d)
		return 0

	if d % 9 == 0:
		return 0

	primes = primefactors(d)
	if any(p % 3 == 2 for p in primes):
		return 0

	k = sum(1 for p in primes if p % 3 == 1)
	if k == 0:
		return directGamma3(d)
	return 2 ** (k - 1)


def piEpsilon(d):
	'''
		piEpsilon - Number of positive ordered primitive solutions of a^2 + b^2 + c^2 = 3d^2:

		    (Lambda(d) + 24 * Gamma2(3d^2)) / 48

		  Solutions with all three entries distinct are counted 48 times by Lambda, the ones with
		  two equal entries 24 times, and Gamma2(3d^2) counts the latter. a = b = c only happens
		  at d = 1, which is answered directly.

		@param d <int> - Odd, positive

		@return <int> - The count

		@raises FormulaViolationError - The division was not exact
	'''
	_requireOdd('d', d)

	if d == 1:
		return 1

	numerator = lambdaCount(d) + 24 * gamma2(3 * d * d)
	if numerator % 48 != 0:
		raise FormulaViolationError('piEpsilon(%d): %d is not divisible by 48' %(d, numerator))

	return numerator // 48


def isPrimitiveSolution(sol):
	'''
		isPrimitiveSolution - Check every PrimitiveSolution invariant

		@param sol <PrimitiveSolution/tuple> - (a, b, c, d)

		@return <bool>
	'''
	try:
		(a, b, c, d) = sol
	except (TypeError, ValueError):
		return False

	for value in (a, b, c, d):
		if isinstance(value, bool) or not isinstance(value, int):
			return False

	return bool( 0 < a <= b <= c and d > 0 and a * a + b * b + c * c == 3 * d * d and math.gcd(a, b, c) == 1 )


def threeSquaresPrimitive(d):
	'''
		threeSquaresPrimitive - All positive ordered primitive solutions for d.

		  For odd d, 3d^2 = 3 (mod 8) forces a, b and c to be odd, so only odd values are scanned.

		@param d <int> - Odd, positive

		@return list<PrimitiveSolution> - Sorted lexicographically, length piEpsilon(d)
	'''
	_requireOdd('d', d)

	target = 3 * d * d
	ret = []

	a = 1
	while 3 * a * a <= target:
		remainder = target - a * a
		b = a
		while 2 * b * b <= remainder:
			c = exactSquareRoot(remainder - b * b)
			if c is not None and math.gcd(a, b, c) == 1:
				ret.append(PrimitiveSolution(a, b, c, d))
			b += 2
		a += 2

	return ret


def twoAcParam(l, k):
	'''
		twoAcParam - Positive primitive solutions of 2a^2 + c^2 = 3d^2 from a coprime pair (l, k):

		    d = 2l^2 + k^2
		    a = |2l^2 + 2kl - k^2|, c = |k^2 + 4kl - 2l^2|     if k != l (mod 3)
		    a = |2l^2 - 2kl - k^2|, c = |k^2 - 4kl - 2l^2|     if k != -l (mod 3)

		  Both branches are emitted when both conditions hold.

		@param l <int> - Positive
		@param k <int> - Positive, odd, gcd(k, l) = 1

		@return list<tuple<int>> - Sorted distinct (a, c, d) triples

		@raises InvalidInputError - k even or gcd(k, l) != 1
	'''
	_requireInt('l', l, 1)
	_requireOdd('k', k)
	if math.gcd(k, l) != 1:
		raise InvalidInputError('twoAcParam requires gcd(k, l) = 1, got k=%d l=%d' %(k, l))

	d = 2 * l * l + k * k
	candidates = []
	if (k - l) % 3 != 0:
		candidates.append( (abs(2 * l * l + 2 * k * l - k * k), abs(k * k + 4 * k * l - 2 * l * l)) )
	if (k + l) % 3 != 0:
		candidates.append( (abs(2 * l * l - 2 * k * l - k * k), abs(k * k - 4 * k * l - 2 * l * l)) )

	ret = set()
	for (a, c) in candidates:
		if 2 * a * a + c * c != 3 * d * d:
			raise FormulaViolationError('twoAcParam(l=%d, k=%d) produced (%d, %d, %d) off the form' %(l, k, a, c, d))
		if math.gcd(a, c, d) != 1:
			logger.debug('twoAcParam(l=%d, k=%d): dropping non-primitive (%d, %d, %d)', l, k, a, c, d)
			continue
		ret.add( (a, c, d) )

	return sorted(ret)


def kValues(n):
	'''
		kValues - All odd k <= n whose prime factors are all 1 (mod 3), i.e. the k for which
		  m^2 - mn + n^2 = k^2 has a coprime solution. Always contains 1.

		@param n <int> - Positive

		@return list<int> - Sorted
	'''
	_requireInt('n', n, 1)

	return [ k for k in range(1, n + 1, 2) if all(p % 3 == 1 for p in primefactors(k)) ]


def mnPrimitive(k):
	'''
		mnPrimitive - Primitive solutions of m^2 - mn + n^2 = k^2: gcd(m, n) = 1, m > 0, n > 0, 2m < n.

		  One pair is returned per orbit of the form's 12 automorphisms. k = 1 returns the seed (0, 1).

		  With 0 < 2m < n the form is at least 3n^2/4, so n <= 2k/sqrt(3); for each n the
		  quadratic in m has discriminant 4k^2 - 3n^2.

		@param k <int> - Positive

		@return list<MNPair> - Sorted
	'''
	_requireInt('k', k, 1)

	if k == 1:
		return [ MNPair(0, 1) ]

	ret = []
	kSquared = k * k
	n = 1
	while 3 * n * n <= 4 * kSquared:
		root = exactSquareRoot(4 * kSquared - 3 * n * n)
		if root is not None and (n - root) % 2 == 0:
			m = (n - root) // 2
			if m > 0 and 2 * m < n and math.gcd(m, n) == 1:
				ret.append(MNPair(m, n))
		n += 1

	return ret


def eisensteinOrbit(m, n):
	'''
		eisensteinOrbit - Images of (m, n) under the 12 automorphisms of m^2 - mn + n^2:
		  the rotation (m, n) -> (n, n - m) of order six and the swap (m, n) -> (n, m).

		@return set<MNPair>
	'''
	ret = set()
	current = (m, n)
	for _ in range(6):
		ret.add(MNPair(current[0], current[1]))
		ret.add(MNPair(current[1], current[0]))
		current = (current[1], current[1] - current[0])
	return ret


def s3rSolutions(q):
	'''
		s3rSolutions - All integer (r, s) with 2q = s^2 + 3r^2, both signs included

		@param q <int> - Positive

		@return list<tuple<int>> - Sorted (r, s) pairs, possibly empty
	'''
	_requireInt('q', q, 1)

	target = 2 * q
	bound = math.isqrt(target // 3)
	ret = set()
	for r in range(-bound, bound + 1):
		s = exactSquareRoot(target - 3 * r * r)
		if s is None:
			continue
		ret.add( (r, s) )
		ret.add( (r, -s) )

	return sorted(ret)


# vim:set ts=8 shiftwidth=8 softtabstop=8 noexpandtab :
