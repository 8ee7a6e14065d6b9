#!/usr/bin/env python

#
# TestNumTheory - Test the quadratic form solvers and closed-form counts
#

# Import and apply the properties (like the path to the source tree) for this test.
import TestProperties

# vim: set ts=4 sw=4 st=4 expandtab

import math
import sys
import subprocess

from LatticeTetra import InvalidInputError
from LatticeTetra.numtheory import PrimitiveSolution, MNPair, legendreMinus3, lambdaCount, hsTotalCount, \
    gamma2, gamma3, directGamma2, directGamma3, piEpsilon, isPrimitiveSolution, threeSquaresPrimitive, \
    twoAcParam, kValues, mnPrimitive, eisensteinOrbit, s3rSolutions


def bruteSolutions(d, primitiveOnly):
    '''
        bruteSolutions - Count integer (a, b, c) with a^2 + b^2 + c^2 = 3d^2, all signs and orders
    '''
    target = 3 * d * d
    bound = math.isqrt(target)
    count = 0
    for a in range(-bound, bound + 1):
        for b in range(-bound, bound + 1):
            rest = target - a * a - b * b
            if rest < 0:
                continue
            c = math.isqrt(rest)
            if c * c != rest:
                continue
            for cValue in set([c, -c]):
                if primitiveOnly and math.gcd(math.gcd(a, b), cValue) != 1:
                    continue
                count += 1
    return count


class TestNumTheory(object):
    '''
        TestNumTheory - Test LatticeTetra.numtheory
    '''

    def test_legendreMinus3(self):

        expected = { 3 : 0, 5 : -1, 7 : 1, 11 : -1, 13 : 1, 17 : -1, 19 : 1, 37 : 1 }
        for (p, value) in expected.items():
            got = legendreMinus3(p)
            assert got == value , 'Expected (-3/%d) = %d but got %d' %(p, value, got)

        for bad in (2, 9, 1, 0, -7):
            gotException = False
            try:
                legendreMinus3(bad)
            except InvalidInputError:
                gotException = True
            assert gotException , 'Expected legendreMinus3(%d) to raise InvalidInputError' %(bad, )

    def test_lambdaCount(self):

        assert lambdaCount(1) == 8 , 'Expected lambdaCount(1) = 8 but got %d' %(lambdaCount(1), )
        assert lambdaCount(3) == 24 , 'Expected lambdaCount(3) = 24 but got %d' %(lambdaCount(3), )

        for d in range(1, 100, 2):
            expected = bruteSolutions(d, primitiveOnly=True)
            got = lambdaCount(d)
            assert got == expected , 'Expected lambdaCount(%d) to match the brute force count %d but got %d' %(d, expected, got)

        gotException = False
        try:
            lambdaCount(4)
        except InvalidInputError:
            gotException = True
        assert gotException , 'Expected lambdaCount of an even d to raise InvalidInputError'

    def test_hsTotalCount(self):

        for (d, expected) in ( (1, 8), (3, 32), (5, 56), (9, 104) ):
            got = hsTotalCount(d)
            assert got == expected , 'Expected hsTotalCount(%d) = %d but got %d' %(d, expected, got)

        for d in range(1, 13):
            expected = bruteSolutions(d, primitiveOnly=False)
            got = hsTotalCount(d)
            assert got == expected , 'Expected hsTotalCount(%d) to match the brute force count %d but got %d' %(d, expected, got)

        # Every solution is g times a primitive one, for some g dividing d
        for d in range(1, 200, 2):
            expected = sum( lambdaCount(d // g) for g in range(1, d + 1) if d % g == 0 )
            got = hsTotalCount(d)
            assert got == expected , 'Expected hsTotalCount(%d) = %d (sum over divisors) but got %d' %(d, expected, got)

    def test_gamma2(self):

        for (d, expected) in ( (27, 1), (33, 2), (75, 0), (3, 1), (9, 1) ):
            got = gamma2(d)
            assert got == expected , 'Expected gamma2(%d) = %d but got %d' %(d, expected, got)

        for d in range(1, 1000, 2):
            assert gamma2(d) == directGamma2(d) , 'Expected gamma2(%d) to match the direct scan (%d) but got %d' %(d, directGamma2(d), gamma2(d))

    def test_gamma3(self):

        for (d, expected) in ( (7, 1), (91, 2), (5, 0), (21, 1), (273, 2), (63, 0) ):
            got = gamma3(d)
            assert got == expected , 'Expected gamma3(%d) = %d but got %d' %(d, expected, got)

        for d in range(1, 1000):
            assert gamma3(d) == directGamma3(d) , 'Expected gamma3(%d) to match the direct scan (%d) but got %d' %(d, directGamma3(d), gamma3(d))

    def test_piEpsilon(self):

        for (d, expected) in ( (1, 1), (3, 1), (9, 2), (2009, 294) ):
            got = piEpsilon(d)
            assert got == expected , 'Expected piEpsilon(%d) = %d but got %d' %(d, expected, got)

        assert lambdaCount(2009) == 14112 , 'Expected lambdaCount(2009) = 14112 but got %d' %(lambdaCount(2009), )

        for d in range(1, 200, 2):
            got = len(threeSquaresPrimitive(d))
            assert got == piEpsilon(d) , 'Expected %d solutions for d=%d but found %d' %(piEpsilon(d), d, got)

    def test_threeSquaresPrimitive(self):

        assert threeSquaresPrimitive(1) == [ PrimitiveSolution(1, 1, 1, 1) ] , 'Expected only (1,1,1) for d=1 but got %s' %(repr(threeSquaresPrimitive(1)), )
        assert threeSquaresPrimitive(3) == [ PrimitiveSolution(1, 1, 5, 3) ] , 'Expected only (1,1,5) for d=3 but got %s' %(repr(threeSquaresPrimitive(3)), )
        assert threeSquaresPrimitive(9) == [ PrimitiveSolution(1, 11, 11, 9), PrimitiveSolution(5, 7, 13, 9) ] , \
            'Expected (1,11,11) and (5,7,13) for d=9 but got %s' %(repr(threeSquaresPrimitive(9)), )

        solutions = threeSquaresPrimitive(2009)
        assert solutions == sorted(solutions) , 'Expected solutions in lexicographic order'
        for sol in solutions:
            assert isPrimitiveSolution(sol) , 'Expected %s to be a positive ordered primitive solution' %(repr(sol), )

        sol = PrimitiveSolution(1, 5, 11, 7)
        assert sol.normal == (1, 5, 11) , 'Expected normal (1, 5, 11) but got %s' %(repr(sol.normal), )
        assert sol.label == '[(1,5,11),7]' , 'Expected label [(1,5,11),7] but got %s' %(sol.label, )

    def test_isPrimitiveSolution(self):

        assert isPrimitiveSolution( (1, 1, 5, 3) ) , 'Expected (1,1,5,3) to be accepted'
        assert not isPrimitiveSolution( (3, 3, 3, 3) ) , 'Expected the non-primitive (3,3,3,3) to be rejected'
        assert not isPrimitiveSolution( (5, 1, 1, 3) ) , 'Expected the unordered (5,1,1,3) to be rejected'
        assert not isPrimitiveSolution( (1, 1, 4, 3) ) , 'Expected (1,1,4,3), which is off the form, to be rejected'
        assert not isPrimitiveSolution( (1, 1, 1) ) , 'Expected a 3-tuple to be rejected'
        assert not isPrimitiveSolution( (True, 1, 1, 1) ) , 'Expected a bool entry to be rejected'

    def test_twoAcParam(self):

        assert twoAcParam(1, 1) == [ (1, 5, 3) ] , 'Expected [(1, 5, 3)] but got %s' %(repr(twoAcParam(1, 1)), )
        assert (1, 19, 11) in twoAcParam(1, 3) , 'Expected (1, 19, 11) in %s' %(repr(twoAcParam(1, 3)), )

        for l in range(1, 12):
            for k in range(1, 12, 2):
                if math.gcd(k, l) != 1:
                    continue
                for (a, c, d) in twoAcParam(l, k):
                    assert 2 * a * a + c * c == 3 * d * d , 'Expected (%d, %d, %d) to satisfy 2a^2 + c^2 = 3d^2' %(a, c, d)
                    assert math.gcd(math.gcd(a, c), d) == 1 , 'Expected (%d, %d, %d) to be primitive' %(a, c, d)

        produced = set()
        l = 1
        while 2 * l * l + 1 <= 500:
            k = 1
            while 2 * l * l + k * k <= 500:
                if math.gcd(k, l) == 1:
                    produced.update(twoAcParam(l, k))
                k += 2
            l += 1

        # Every positive primitive solution with 3 <= d <= 500 comes from some (l, k)
        for d in range(3, 501, 2):
            for a in range(1, math.isqrt(3 * d * d // 2) + 1):
                rest = 3 * d * d - 2 * a * a
                c = math.isqrt(rest)
                if c < 1 or c * c != rest or math.gcd(math.gcd(a, c), d) != 1:
                    continue
                assert (a, c, d) in produced , 'Expected (%d, %d, %d) to be produced by some (l, k) with 2l^2 + k^2 = %d' %(a, c, d, d)

        for (l, k) in ( (1, 2), (3, 3) ):
            gotException = False
            try:
                twoAcParam(l, k)
            except InvalidInputError:
                gotException = True
            assert gotException , 'Expected twoAcParam(%d, %d) to raise InvalidInputError' %(l, k)

    def test_kValues(self):

        expected = [1, 7, 13, 19, 31, 37, 43, 49, 61, 67, 73, 79, 91, 97]
        got = kValues(100)
        assert got == expected , 'Expected kValues(100) = %s but got %s' %(repr(expected), repr(got))

        assert kValues(1) == [1] , 'Expected kValues(1) = [1]'

    def test_mnPrimitive(self):

        assert mnPrimitive(1) == [ MNPair(0, 1) ] , 'Expected the seed (0, 1) for k=1 but got %s' %(repr(mnPrimitive(1)), )
        assert mnPrimitive(7) == [ MNPair(3, 8) ] , 'Expected [(3, 8)] for k=7 but got %s' %(repr(mnPrimitive(7)), )
        assert mnPrimitive(91) == [ MNPair(11, 96), MNPair(19, 99) ] , 'Expected [(11, 96), (19, 99)] for k=91 but got %s' %(repr(mnPrimitive(91)), )

        for k in kValues(200):
            pairs = mnPrimitive(k)
            assert pairs , 'Expected at least one pair for k=%d' %(k, )
            for pair in pairs:
                assert pair.norm == k * k , 'Expected %s to have norm %d but got %d' %(repr(pair), k * k, pair.norm)

            # Distinct pairs lie in distinct orbits
            orbits = [ eisensteinOrbit(pair.m, pair.n) for pair in pairs ]
            for i in range(len(orbits)):
                for j in range(i + 1, len(orbits)):
                    assert not orbits[i].intersection(orbits[j]) , 'Expected %s and %s in different orbits' %(repr(pairs[i]), repr(pairs[j]))

            # The orbits cover every coprime solution with |m|, |n| <= 2k
            scanned = set()
            for m in range(-2 * k, 2 * k + 1):
                disc = 4 * k * k - 3 * m * m
                if disc < 0:
                    continue
                root = math.isqrt(disc)
                if root * root != disc:
                    continue
                for twiceN in (m + root, m - root):
                    if twiceN % 2 != 0:
                        continue
                    n = twiceN // 2
                    if abs(n) <= 2 * k and math.gcd(m, n) == 1:
                        scanned.add( (m, n) )
            recovered = set()
            for orbit in orbits:
                for pair in orbit:
                    recovered.add( (pair.m, pair.n) )
                    recovered.add( (-pair.m, -pair.n) )
            assert recovered == scanned , 'Expected the orbits of %s to give all %d coprime solutions for k=%d but got %d' %(repr(pairs), len(scanned), k, len(recovered))

        assert mnPrimitive(5) == [] , 'Expected no pairs for k=5'

    def test_eisensteinOrbit(self):

        orbit = eisensteinOrbit(3, 8)
        assert len(orbit) == 12 , 'Expected 12 images of (3, 8) but got %d' %(len(orbit), )
        for pair in orbit:
            assert pair.norm == 49 , 'Expected every image to have norm 49, %s has %d' %(repr(pair), pair.norm)

        assert len(eisensteinOrbit(0, 1)) == 6 , 'Expected 6 images of the seed (0, 1)'

    def test_s3rSolutions(self):

        assert s3rSolutions(1) == [] , 'Expected no (r, s) for q=1'
        assert (1, 1) in s3rSolutions(2) , 'Expected (1, 1) for q=2'
        solutions = s3rSolutions(26)
        for pair in ( (4, 2), (4, -2), (-4, 2), (-4, -2) ):
            assert pair in solutions , 'Expected %s for q=26 in %s' %(repr(pair), repr(solutions))
        for (r, s) in solutions:
            assert s * s + 3 * r * r == 52 , 'Expected %s to satisfy s^2 + 3r^2 = 52' %(repr((r, s)), )


if __name__ == '__main__':
    sys.exit(subprocess.Popen('GoodTests.py -n1 "%s" %s' %(sys.argv[0], ' '.join(['"%s"' %(arg.replace('"', '\\"'), ) for arg in sys.argv[1:]]) ), shell=True).wait())

# vim: set ts=4 sw=4 expandtab
