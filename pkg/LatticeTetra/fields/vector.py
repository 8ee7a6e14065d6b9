# LatticeTetra.fields.vector - Integer vectors and fixed-size lists of integer vectors
#
#  Stored as json lists (of lists), held in memory as tuples (of tuples).
#

# vim:set ts=8 shiftwidth=8 softtabstop=8 noexpandtab :

from ..exceptions import InvalidInputError

from . import RowField

__all__ = ('IntVectorField', )


class IntVectorField(RowField):
	'''
		IntVectorField - A vector of "length" integers, or with "count" given, a list of "count" such vectors.

		  Examples: IntVectorField('solution', 4), IntVectorField('vertices', 3, count=4)
	'''

	def __init__(self, name='', length=3, count=None):
		'''
			__init__ - Create this object.

			@param name <str> - Field name

			@param length <int> - Number of integers in one vector

			@param count <int/None> - If not None, the value is a list of exactly this many vectors
		'''
		self.valueType = tuple
		self.length = length
		self.count = count

	def _checkVector(self, value):
		if isinstance(value, (str, bytes)) or not hasattr(value, '__iter__'):
			raise InvalidInputError('Field "%s": expected a vector of %d integers, got %s' %(self.name, self.length, repr(value)))

		value = tuple(value)
		if len(value) != self.length:
			raise InvalidInputError('Field "%s": expected %d integers, got %d in %s' %(self.name, self.length, len(value), repr(value)))

		return tuple( self._checkInt(x) for x in value )

	def fromInput(self, value):
		if self.count is None:
			return self._checkVector(value)

		if isinstance(value, (str, bytes)) or not hasattr(value, '__iter__'):
			raise InvalidInputError('Field "%s": expected %d vectors, got %s' %(self.name, self.count, repr(value)))

		value = tuple(value)
		if len(value) != self.count:
			raise InvalidInputError('Field "%s": expected %d vectors, got %d' %(self.name, self.count, len(value)))

		return tuple( self._checkVector(vector) for vector in value )

	def fromStorage(self, value):
		return self.fromInput(value)

	def toStorage(self, value):
		value = self.fromInput(value)
		if self.count is None:
			return list(value)
		return [ list(vector) for vector in value ]

	def _getReprProperties(self):
		ret = [ 'length=%d' %(self.length, ) ]
		if self.count is not None:
			ret.append('count=%d' %(self.count, ))
		return ret

	def copy(self):
		return self.__class__(name=self.name, length=self.length, count=self.count)

	def __new__(self, name='', length=3, count=None):
		return RowField.__new__(self, name)


# vim:set ts=8 shiftwidth=8 softtabstop=8 noexpandtab :
