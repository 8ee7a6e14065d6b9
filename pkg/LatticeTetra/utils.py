# LatticeTetra.utils - Exact integer vector helpers
#
#  Everything here works on plain tuples of python ints. Nothing ever touches a float.
#

# vim:set ts=8 shiftwidth=8 softtabstop=8 noexpandtab :

import math

__all__ = ('addVectors', 'subtractVectors', 'scaleVector', 'dotProduct', 'crossProduct',
	'squaredNorm', 'squaredDistance', 'vectorGcd', 'exactSquareRoot', 'KeyList',
)


def addVectors(u, v):
	return (u[0] + v[0], u[1] + v[1], u[2] + v[2])


def subtractVectors(u, v):
	return (u[0] - v[0], u[1] - v[1], u[2] - v[2])


def scaleVector(v, factor):
	return (v[0] * factor, v[1] * factor, v[2] * factor)


def dotProduct(u, v):
	return u[0] * v[0] + u[1] * v[1] + u[2] * v[2]


def crossProduct(u, v):
	return (
		u[1] * v[2] - u[2] * v[1],
		u[2] * v[0] - u[0] * v[2],
		u[0] * v[1] - u[1] * v[0],
	)


def squaredNorm(v):
	return v[0] * v[0] + v[1] * v[1] + v[2] * v[2]


def squaredDistance(u, v):
	return squaredNorm(subtractVectors(u, v))


def vectorGcd(values):
	'''
		vectorGcd - gcd of any number of integers (0 for an all-zero input)

		@param values <iterable<int>> - Integers

		@return <int> - Non-negative gcd
	'''
	ret = 0
	for value in values:
		ret = math.gcd(ret, value)
	return ret


def exactSquareRoot(value):
	'''
		exactSquareRoot - Integer square root, only when exact.

		@param value <int> - Any integer

		@return <int/None> - r with r*r == value, or None if value is negative or not a square
	'''
	if value < 0:
		return None
	root = math.isqrt(value)
	if root * root != value:
		return None
	return root


class KeyList(list):
	'''
		KeyList - A list which is indexable by both values and integer indexes.

		  Row models use this for their FIELDS, so a field can be looked up by name.
	'''

	def __getitem__(self, item):
		if isinstance(item, (int, slice)):
			return list.__getitem__(self, item)
		try:
			idx = self.index(item)
		except ValueError:
			raise KeyError('No such key in list: %s' %(repr(item), ))

		return list.__getitem__(self, idx)

# vim:set ts=8 shiftwidth=8 softtabstop=8 noexpandtab :
