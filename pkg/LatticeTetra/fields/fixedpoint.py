# LatticeTetra.fields.fixedpoint - A real number written with a fixed number of decimal places,
#    so the same ratio prints identically on every platform.
#

# vim: set ts=8 shiftwidth=8 softtabstop=8 noexpandtab :

from ..exceptions import InvalidInputError

from . import RowField

__all__ = ('FixedPointField',)


class FixedPointField(RowField):
	'''
		FixedPointField - A field which represents a real number, such as 3.7 or 4.243571.

		  The stored form is a string with exactly decimalPlaces digits after the point.
	'''

	def __init__(self, name='', decimalPlaces=6):
		'''
			__init__ - Create this object.

			@param name <str> - Field name

			@param decimalPlaces <int> - The number of decimal places to use (precision). Values will be rounded to this many places, and always have
			  this many digits after the decimal point.
		'''
		self.valueType = float
		self.decimalPlaces = decimalPlaces

	def fromInput(self, value):
		if isinstance(value, bool) or not isinstance(value, (int, float)):
			raise InvalidInputError('Field "%s": expected a number, got %s' %(self.name, repr(value)))
		return round(float(value), self.decimalPlaces)

	def fromStorage(self, value):
		# Round here in case the number of decimalPlaces differs from the one it was written with
		try:
			return round(float(value), self.decimalPlaces)
		except (TypeError, ValueError):
			raise InvalidInputError('Field "%s": %s is not a number' %(self.name, repr(value)))

	def toStorage(self, value):
		return self._getFormatStr() % (self.fromInput(value), )

	def _getFormatStr(self):
		return '%.' + str(self.decimalPlaces) + 'f'

	def _getReprProperties(self):
		return [ 'decimalPlaces=%d' %(self.decimalPlaces, ) ]

	def copy(self):
		return self.__class__(name=self.name, decimalPlaces=self.decimalPlaces)

	def __new__(self, name='', decimalPlaces=6):
		return RowField.__new__(self, name)


# vim: set ts=8 shiftwidth=8 softtabstop=8 noexpandtab :
