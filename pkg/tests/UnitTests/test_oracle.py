#!/usr/bin/env python

#
# TestOracle - Test the brute force counts
#

# Import and apply the properties (like the path to the source tree) for this test.
import TestProperties

# vim: set ts=4 sw=4 st=4 expandtab

import sys
import subprocess

from LatticeTetra import GuardError, InvalidInputError
from LatticeTetra.facegen import Tetra, isRegular
from LatticeTetra.oracle import quadrupleCount, triangleCount, triangleTetrahedra, orbitMembersInCube, \
    orbitCountInCube, DEFAULT_ORACLE_QUADRUPLE_LIMIT, DEFAULT_ORACLE_TRIANGLE_LIMIT

from TestProperties import ORACLE_TOTALS, UNIT_TETRA, UNIT_TETRA_MIRROR


class TestOracle(object):
    '''
        TestOracle - Test LatticeTetra.oracle
    '''

    def test_quadrupleCount(self):

        for n in range(1, 4):
            got = quadrupleCount(n)
            assert got == ORACLE_TOTALS[n - 1] , 'Expected T(%d) = %d but got %d' %(n, ORACLE_TOTALS[n - 1], got)

        assert quadrupleCount(0) == 0 , 'Expected no tetrahedra in a single point'

    def test_triangleCount(self):

        for n in range(1, len(ORACLE_TOTALS) + 1):
            got = triangleCount(n)
            assert got == ORACLE_TOTALS[n - 1] , 'Expected T(%d) = %d but got %d' %(n, ORACLE_TOTALS[n - 1], got)

        got = triangleCount(3, workers=2)
        assert got == ORACLE_TOTALS[2] , 'Expected the same T(3) with 2 workers but got %d' %(got, )

    def test_triangleTetrahedra(self):

        found = triangleTetrahedra(1)
        assert found == set([ UNIT_TETRA, UNIT_TETRA_MIRROR ]) , 'Expected the two unit cube tetrahedra but got %s' %(repr(found), )

        for tetra in triangleTetrahedra(3):
            assert isRegular(tetra) is not None , 'Expected %s to be regular' %(repr(tetra), )

    def test_guards(self):

        gotException = False
        try:
            quadrupleCount(DEFAULT_ORACLE_QUADRUPLE_LIMIT + 1)
        except GuardError:
            gotException = True
        assert gotException , 'Expected quadrupleCount above its limit to raise GuardError'

        gotException = False
        try:
            triangleCount(DEFAULT_ORACLE_TRIANGLE_LIMIT + 1)
        except GuardError:
            gotException = True
        assert gotException , 'Expected triangleCount above its limit to raise GuardError'

        # The guard is lifted explicitly; a small limit keeps this cheap
        got = triangleCount(2, allowLarge=True, limit=1)
        assert got == ORACLE_TOTALS[1] , 'Expected allowLarge to lift the guard, got %d' %(got, )

        for bad in (-1, 2.0, True):
            gotException = False
            try:
                triangleCount(bad)
            except InvalidInputError:
                gotException = True
            assert gotException , 'Expected n=%r to raise InvalidInputError' %(bad, )

    def test_orbitMembersInCube(self):

        members = orbitMembersInCube(UNIT_TETRA, 1)
        assert members == set([ UNIT_TETRA, UNIT_TETRA_MIRROR ]) , 'Expected both unit tetrahedra but got %s' %(repr(members), )

        assert orbitCountInCube(UNIT_TETRA, 2) == 16 , 'Expected 16 unit tetrahedra in [0,2]^3'
        assert orbitCountInCube(UNIT_TETRA, 0) == 0 , 'Expected no unit tetrahedra in [0,0]^3'

        # The orbits partition the tetrahedra of [0,3]^3
        found = triangleTetrahedra(3)
        covered = set()
        for tetra in sorted(found):
            if tetra in covered:
                continue
            covered.update(orbitMembersInCube(Tetra(tetra), 3))
        assert covered == found , 'Expected the orbits to cover exactly the tetrahedra found'


if __name__ == '__main__':
    sys.exit(subprocess.Popen('GoodTests.py -n1 "%s" %s' %(sys.argv[0], ' '.join(['"%s"' %(arg.replace('"', '\\"'), ) for arg in sys.argv[1:]]) ), shell=True).wait())

# vim: set ts=4 sw=4 expandtab
