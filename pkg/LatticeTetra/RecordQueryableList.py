# RecordQueryableList - QueryableList of irreducible tetrahedron records
#


# vim:set ts=8 shiftwidth=8 softtabstop=8 noexpandtab :

import pprint

from QueryableList import QueryableListObjs

__all__ = ('RecordQueryableList', )


class RecordQueryableList(QueryableListObjs):
	'''
		RecordQueryableList - A QueryableList of IrreducibleRecord objects.

		  Filter on any record attribute:

		    records.filter(side__lte=7, cube__lte=7)
		    records.filter(k__gt=1)

		  Only IrreducibleRecord (or a subclass) may be held; this is checked on construction
		  and on append.
	'''

	def __init__(self, val=None, recordType=None):
		'''
			__init__ - Create this object

			@param val - None for an empty list, or a list/tuple of initial records
			@param recordType - The record class held. Inferred from the first item when not given.

			@raises ValueError if recordType (or an item) is not a record type
		'''
		if val is None:
			QueryableListObjs.__init__(self)
		else:
			QueryableListObjs.__init__(self, val)

		self.recordType = recordType
		if recordType:
			self.__validate_record_type(recordType)

		for item in self:
			self.__validate_record_type(item.__class__)

		if not self.recordType:
			self.recordType = self.getRecordType()

	@staticmethod
	def __validate_record_type(recordType):
		'''
			__validate_record_type - Check that recordType is a record class.

			  Uses a class marker rather than the type itself, to avoid a circular import.
		'''
		if not getattr(recordType, '_is_irreducible_record', False):
			raise ValueError('%s is not an IrreducibleRecord' %(str(recordType.__name__), ))

	def getRecordType(self):
		'''
			getRecordType - The record class of this list, inferred from the first item if not given

			@return <None/type>
		'''
		if not getattr(self, 'recordType', None) and len(self) > 0:
			recordType = self[0].__class__
			self.__validate_record_type(recordType)
			self.recordType = recordType

		return getattr(self, 'recordType', None)

	def append(self, item):
		self.__validate_record_type(item.__class__)
		QueryableListObjs.append(self, item)

	def extend(self, items):
		for item in items:
			self.append(item)

	def sides(self):
		'''
			sides - Sorted distinct side parameters (d*k)
		'''
		return sorted(set( record.side for record in self ))

	def tetras(self):
		return [ record.tetra for record in self ]

	def sortedByIdentity(self):
		'''
			sortedByIdentity - A new list sorted by (d*k, tetra)
		'''
		return self.__class__(sorted(self, key=lambda record : (record.side, record.tetra)), recordType=self.getRecordType())

	def pprint(self, stream=None):
		dicts = [ record.asRow().asDict(forStorage=True) for record in self ]

		pprint.pprint(dicts, stream=stream)


# vim:set ts=8 shiftwidth=8 softtabstop=8 noexpandtab :
