# LatticeTetra - Exact enumeration and counting of regular tetrahedra with vertices in {0..n}^3
#
#  The number of such tetrahedra, halved, is OEIS A103158. It is computed from a list of irreducible
#   tetrahedra, built face plane by face plane from the solutions of a^2 + b^2 + c^2 = 3d^2, and a
#   closed-form count of the copies of each one inside a cube. Brute-force oracles check the result.
#

# vim:set ts=8 shiftwidth=8 softtabstop=8 noexpandtab :

from .exceptions import LatticeTetraError, InvalidInputError, FormulaViolationError, GeometryError, \
	NoIntegralBasisError, ApexError, NotLatticeRegularError, GuardError, CacheFormatError

from .numtheory import PrimitiveSolution, MNPair, legendreMinus3, lambdaCount, hsTotalCount, gamma2, gamma3, \
	directGamma2, directGamma3, piEpsilon, threeSquaresPrimitive, isPrimitiveSolution, twoAcParam, kValues, \
	mnPrimitive, eisensteinOrbit, s3rSolutions

from .facegen import LatticePoint, FaceBasis, Tetra, ThirdsPoint, faceBasis, triangle, apex, classifyApexSigns, \
	tetraPair, normalizeOctant, enclosingCube, isRegular, faceDs, maxFaceD, edgeGcd, isIrreducible

from .orbits import OrbitStats, symmetryOrbit, fullOrbit, beta, gamma, orbitShapes, orbitStats, orbitStatsBySets, \
	dilate, classKey, countInCube

from .pipeline import IrreducibleRecord, CountRow, CountTable, irreducibleList, totalCounts, totalCount, sequence

from .RecordQueryableList import RecordQueryableList

from .rtgraph import RTGraph, Witness, connectionWitness, areConnected, buildGraph, connectedComponents, exportDot

from .oracle import quadrupleCount, triangleCount, orbitCountInCube, orbitMembersInCube

__version__ = '1.0.0'
__version_tuple__ = (1, 0, 0)

__all__ = ('LatticeTetraError', 'InvalidInputError', 'FormulaViolationError', 'GeometryError',
	'NoIntegralBasisError', 'ApexError', 'NotLatticeRegularError', 'GuardError', 'CacheFormatError',
	'PrimitiveSolution', 'MNPair', 'legendreMinus3', 'lambdaCount', 'hsTotalCount', 'gamma2', 'gamma3',
	'directGamma2', 'directGamma3', 'piEpsilon', 'threeSquaresPrimitive', 'isPrimitiveSolution', 'twoAcParam',
	'kValues', 'mnPrimitive', 'eisensteinOrbit', 's3rSolutions',
	'LatticePoint', 'FaceBasis', 'Tetra', 'ThirdsPoint', 'faceBasis', 'triangle', 'apex', 'classifyApexSigns',
	'tetraPair', 'normalizeOctant', 'enclosingCube', 'isRegular', 'faceDs', 'maxFaceD', 'edgeGcd', 'isIrreducible',
	'OrbitStats', 'symmetryOrbit', 'fullOrbit', 'beta', 'gamma', 'orbitShapes', 'orbitStats', 'orbitStatsBySets',
	'dilate', 'classKey', 'countInCube',
	'IrreducibleRecord', 'CountRow', 'CountTable', 'irreducibleList', 'totalCounts', 'totalCount', 'sequence',
	'RecordQueryableList',
	'RTGraph', 'Witness', 'connectionWitness', 'areConnected', 'buildGraph', 'connectedComponents', 'exportDot',
	'quadrupleCount', 'triangleCount', 'orbitCountInCube', 'orbitMembersInCube',
	'__version__', '__version_tuple__',
)

# vim:set ts=8 shiftwidth=8 softtabstop=8 noexpandtab :
