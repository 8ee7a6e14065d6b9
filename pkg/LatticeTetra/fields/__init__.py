# LatticeTetra.fields - Typed fields for the rows written to cache files, CSV and JSON
#
#  A field is a str (its name) which knows how to convert a value for storage
#   (json-compatible primitives) and back.
#

# vim:set ts=8 shiftwidth=8 softtabstop=8 noexpandtab :

from ..exceptions import InvalidInputError

__all__ = ('RowField', 'IntVectorField', 'FixedPointField', )


class RowField(str):
	'''
		RowField - A named, typed column of a row model.

		  valueType may be int or str. Integers are never accepted as bools, and strings of digits
		  (as read back from CSV) are accepted on the storage side only.
	'''

	def __init__(self, name='', valueType=int):
		'''
			__init__ - Create a RowField. Use this directly in the FIELDS array of a RowModel.

			@param name <str> - The name of this field (the key in JSON, the header in CSV)

			@param valueType <type> - int or str
		'''
		if valueType not in (int, str):
			raise TypeError('RowField valueType must be int or str, got %s' %(repr(valueType), ))

		self.valueType = valueType


	def toStorage(self, value):
		'''
			toStorage - Convert the value to the json-compatible representation for storage.

			@param value - The value of the item to convert

			@return - An int or str
		'''
		return self.fromInput(value)

	def fromStorage(self, value):
		'''
			fromStorage - Convert a stored value (json or CSV text) to the value type.

			@param value - Value to convert

			@return - The converted value

			@raises InvalidInputError - If the value does not fit this field
		'''
		if self.valueType == int and isinstance(value, str):
			try:
				value = int(value.strip())
			except ValueError:
				raise InvalidInputError('Field "%s": %s is not an integer' %(self.name, repr(value)))

		return self.fromInput(value)

	def fromInput(self, value):
		'''
			fromInput - Validate a value given in code

			@param value - Value to convert

			@return - Validated value

			@raises InvalidInputError - If the value does not fit this field
		'''
		if self.valueType == int:
			return self._checkInt(value)

		if not isinstance(value, str):
			raise InvalidInputError('Field "%s": expected a string, got %s' %(self.name, repr(value)))
		return value

	def _checkInt(self, value):
		if isinstance(value, bool) or not isinstance(value, int):
			raise InvalidInputError('Field "%s": expected an integer, got %s' %(self.name, repr(value)))
		return value

	@property
	def name(self):
		'''
			name - Property, return this field's name

			@return <str> - Field name
		'''
		return str(self)

	def _getReprProperties(self):
		'''
			_getReprProperties - Properties of this field shown in repr(), as $propertyName=$propertyRepr

			  Extending fields add their own constructor arguments here.
		'''
		return [ 'valueType=%s' %(self.valueType.__name__, ) ]

	def __repr__(self):
		ret = [ self.__class__.__name__, '( ', '"%s"' %(str(self), ) ]

		reprProperties = self._getReprProperties()
		if reprProperties:
			ret.append(', ')
			ret.append(', '.join(reprProperties))

		ret.append(' )')

		return ''.join(ret)

	def copy(self):
		'''
			copy - Create a copy of this field.

			  Each subclass should implement this, passing its constructor args.

			@return <RowField (or subclass)>
		'''
		return self.__class__(name=self.name, valueType=self.valueType)

	def __new__(self, name='', valueType=int):
		return str.__new__(self, name)


from .vector import IntVectorField
from .fixedpoint import FixedPointField

# vim:set ts=8 shiftwidth=8 softtabstop=8 noexpandtab :
