# LatticeTetra.rows - Row models for cache lines and command-line tables
#
#  A row model declares its columns in FIELDS (RowField objects, in output order). Values are
#   converted through the field on assignment, so a row always holds validated data.
#

# vim:set ts=8 shiftwidth=8 softtabstop=8 noexpandtab :

import json

from .exceptions import InvalidInputError
from .fields import RowField, IntVectorField, FixedPointField
from .utils import KeyList

__all__ = ('RowModel', 'CacheHeaderRow', 'CacheRecordRow', 'SequenceRow', 'SequenceTotalRow', 'SolutionRow',
	'OracleRow', 'PlotRow', 'ComponentRow', 'PLOT_DECIMAL_PLACES',
)

PLOT_DECIMAL_PLACES = 6

validatedRows = set()


class RowModel(object):
	'''
		RowModel - Base of all rows. Extend and define FIELDS.

		  row = SequenceRow(n=3, a103158=36)
		  row.asDict()                -> {'n': 3, 'a103158': 36}
		  SequenceRow.fromDict(...)   -> SequenceRow
	'''

	'''
		FIELDS - A list of RowField objects (or subclasses), in output order
	'''
	FIELDS = []

	def __init__(self, **kwargs):
		'''
			__init__ - Set every field, converting through the field's fromInput.

			@raises InvalidInputError - A field is missing, unknown, or has a bad value
		'''
		self.validateRow()

		unknown = set(kwargs.keys()) - set(str(field) for field in self.FIELDS)
		if unknown:
			raise InvalidInputError('%s: unknown field(s) %s' %(self.__class__.__name__, ', '.join(sorted(unknown))))

		for thisField in self.FIELDS:
			if thisField not in kwargs:
				raise InvalidInputError('%s: missing field "%s"' %(self.__class__.__name__, thisField.name))
			setattr(self, thisField.name, kwargs[thisField.name])

	def __setattr__(self, keyName, value):
		'''
			__setattr__ - Fields are converted via the field type's #fromInput method
		'''
		fields = object.__getattribute__(self, 'FIELDS')
		if keyName in fields:
			value = fields[keyName].fromInput(value)

		object.__setattr__(self, keyName, value)

	@classmethod
	def validateRow(cls):
		'''
			validateRow - Check the FIELDS declaration once per class

			@raises ValueError - Empty FIELDS, duplicate or non-RowField entries
		'''
		if cls in validatedRows:
			return True

		if not cls.FIELDS:
			raise ValueError('%s has no FIELDS defined.' %(cls.__name__, ))

		names = [ str(field) for field in cls.FIELDS ]
		if len(set(names)) != len(names):
			raise ValueError('%s has duplicate FIELDS: %s' %(cls.__name__, repr(names)))

		for thisField in cls.FIELDS:
			if not issubclass(thisField.__class__, RowField):
				raise ValueError('%s field %s is not a RowField' %(cls.__name__, repr(thisField)))

		cls.FIELDS = KeyList(cls.FIELDS)
		validatedRows.add(cls)
		return True

	@classmethod
	def fieldNames(cls):
		return [ str(field) for field in cls.FIELDS ]

	def asDict(self, forStorage=True):
		'''
			asDict - A dict of this row in FIELDS order

			@param forStorage <bool> default True - Convert values to their json-compatible storage form

			@return <dict>
		'''
		ret = {}
		for thisField in self.FIELDS:
			val = getattr(self, thisField.name)
			if forStorage is True:
				val = thisField.toStorage(val)
			ret[thisField.name] = val

		return ret

	toDict = asDict

	def asList(self):
		'''
			asList - Storage values in FIELDS order (one CSV row)
		'''
		storage = self.asDict(forStorage=True)
		return [ storage[name] for name in self.fieldNames() ]

	@classmethod
	def fromDict(cls, data):
		'''
			fromDict - Create a row from stored values (json object or CSV dict)

			@param data <dict> - Every field present, no others

			@return <RowModel subclass>

			@raises InvalidInputError - On a missing, extra or invalid field
		'''
		cls.validateRow()
		if not isinstance(data, dict):
			raise InvalidInputError('%s: expected an object, got %s' %(cls.__name__, type(data).__name__))

		unknown = set(data.keys()) - set(cls.fieldNames())
		if unknown:
			raise InvalidInputError('%s: unknown field(s) %s' %(cls.__name__, ', '.join(sorted(unknown))))

		values = {}
		for thisField in cls.FIELDS:
			if thisField.name not in data:
				raise InvalidInputError('%s: missing field "%s"' %(cls.__name__, thisField.name))
			values[thisField.name] = thisField.fromStorage(data[thisField.name])

		return cls(**values)

	def toJsonLine(self):
		return json.dumps(self.asDict(forStorage=True))

	@classmethod
	def fromJsonLine(cls, line):
		'''
			fromJsonLine - Decode one line written by toJsonLine

			@raises InvalidInputError - Not json, or not a valid row
		'''
		try:
			data = json.loads(line)
		except ValueError as e:
			raise InvalidInputError('Not a json object: %s' %(str(e), ))

		return cls.fromDict(data)

	def __eq__(self, other):
		if type(self) != type(other):
			return False
		return self.asDict(forStorage=False) == other.asDict(forStorage=False)

	def __ne__(self, other):
		return not self.__eq__(other)

	def __repr__(self):
		return '%s(%s)' %(self.__class__.__name__, ', '.join( '%s=%s' %(key, repr(value)) for key, value in self.asDict(forStorage=False).items() ))


class CacheHeaderRow(RowModel):
	'''
		CacheHeaderRow - First line of the record cache: the bound it covers and how many record lines follow.
	'''

	FIELDS = [
		RowField('covers'),
		RowField('records'),
	]


class CacheRecordRow(RowModel):
	'''
		CacheRecordRow - One line of the irreducible-record cache.

		  m is the generation bound the record was produced under.
	'''

	FIELDS = [
		RowField('d'),
		RowField('k'),
		RowField('m'),
		IntVectorField('n_pair', 2),
		RowField('cube'),
		IntVectorField('vertices', 3, count=4),
		IntVectorField('solution', 4),
	]


class SequenceRow(RowModel):

	FIELDS = [
		RowField('n'),
		RowField('a103158'),
	]


class SequenceTotalRow(RowModel):

	FIELDS = [
		RowField('n'),
		RowField('a103158'),
		RowField('total'),
	]


class SolutionRow(RowModel):

	FIELDS = [
		RowField('a'),
		RowField('b'),
		RowField('c'),
		RowField('d'),
	]


class OracleRow(RowModel):

	FIELDS = [
		RowField('n'),
		RowField('total'),
		RowField('a103158'),
	]


class PlotRow(RowModel):
	'''
		PlotRow - n, A103158(n) and ln(A103158(n)) / ln(n + 1)
	'''

	FIELDS = [
		RowField('n'),
		RowField('a103158'),
		FixedPointField('ratio', decimalPlaces=PLOT_DECIMAL_PLACES),
	]


class ComponentRow(RowModel):
	'''
		ComponentRow - One connected component of the face graph; members are space separated labels
	'''

	FIELDS = [
		RowField('component_id'),
		RowField('size'),
		RowField('members', valueType=str),
	]


# vim:set ts=8 shiftwidth=8 softtabstop=8 noexpandtab :
