#!/usr/bin/env python

#
# TestRecordQueryableList - Test the QueryableList of irreducible records
#

# Import and apply the properties (like the path to the source tree) for this test.
import TestProperties

# vim: set ts=4 sw=4 st=4 expandtab

import io
import sys
import subprocess

from LatticeTetra.pipeline import IrreducibleRecord, irreducibleList
from LatticeTetra.RecordQueryableList import RecordQueryableList


class TestRecordQueryableList(object):
    '''
        TestRecordQueryableList - Test LatticeTetra.RecordQueryableList
    '''

    def setup_method(self, testMethod):
        '''
            setup_method - Called before every method. Sets self.records to a small irreducible list.

            @param testMethod - Instance method of test about to be called.
        '''
        self.records = irreducibleList(7)

    def teardown_method(self, testMethod):
        self.records = None

    def test_recordType(self):

        assert self.records.getRecordType() == IrreducibleRecord , 'Expected IrreducibleRecord as the record type'

        inferred = RecordQueryableList(list(self.records))
        assert inferred.getRecordType() == IrreducibleRecord , 'Expected the record type inferred from the items'

        empty = RecordQueryableList()
        assert empty.getRecordType() is None , 'Expected no record type for an empty list'

        gotException = False
        try:
            RecordQueryableList([ 1, 2, 3 ])
        except ValueError:
            gotException = True
        assert gotException , 'Expected non-records to raise ValueError'

        gotException = False
        try:
            empty.append('not a record')
        except ValueError:
            gotException = True
        assert gotException , 'Expected appending a non-record to raise ValueError'

        gotException = False
        try:
            RecordQueryableList(recordType=dict)
        except ValueError:
            gotException = True
        assert gotException , 'Expected a non-record type to raise ValueError'

    def test_filter(self):

        small = self.records.filter(side__lte=3)
        assert isinstance(small, RecordQueryableList) , 'Expected filter to return a RecordQueryableList'
        assert small.sides() == [1, 3] , 'Expected sides [1, 3] but got %s' %(repr(small.sides()), )

        for record in self.records.filter(d=5):
            assert record.d == 5 , 'Expected only d=5 records'

        assert len(self.records.filter(side__gt=7)) == 0 , 'Expected no record above the bound'

    def test_sorting(self):

        shuffled = RecordQueryableList(list(reversed(self.records)), recordType=IrreducibleRecord)
        again = shuffled.sortedByIdentity()
        assert list(again) == list(self.records) , 'Expected sortedByIdentity to restore the (side, tetra) order'
        assert again.tetras() == [ record.tetra for record in self.records ] , 'Expected tetras() in list order'

    def test_extend(self):

        target = RecordQueryableList(recordType=IrreducibleRecord)
        target.extend(self.records)
        assert len(target) == len(self.records) , 'Expected every record to be appended'

    def test_pprint(self):

        stream = io.StringIO()
        self.records.filter(side=1).pprint(stream=stream)
        assert "'vertices'" in stream.getvalue() , 'Expected the cache row fields in the output'


if __name__ == '__main__':
    sys.exit(subprocess.Popen('GoodTests.py -n1 "%s" %s' %(sys.argv[0], ' '.join(['"%s"' %(arg.replace('"', '\\"'), ) for arg in sys.argv[1:]]) ), shell=True).wait())

# vim: set ts=4 sw=4 expandtab
