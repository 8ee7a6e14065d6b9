# LatticeTetra.rtgraph - The graph on positive ordered primitive solutions whose edges join face
#   planes that can bound a common lattice regular tetrahedron (dihedral angle arccos(1/3)).
#
#  [(a1,b1,c1),d1] -- [(a2,b2,c2),d2] when for some permutation (a', b', c') of (a2, b2, c2) and signs
#
#     s1*a1*a' + s2*b1*b' + s3*c1*c' + s4*d1*d2 = 0
#

# vim:set ts=8 shiftwidth=8 softtabstop=8 noexpandtab :

import itertools
import logging

from collections import namedtuple

from .exceptions import InvalidInputError
from .numtheory import isPrimitiveSolution, threeSquaresPrimitive
from .rows import ComponentRow

__all__ = ('Witness', 'RTGraph', 'connectionWitness', 'areConnected', 'buildGraph',
	'connectedComponents', 'exportDot', 'componentRows',
)

logger = logging.getLogger(__name__)

SIGN_PATTERNS = tuple(itertools.product((1, -1), repeat=4))


class Witness(namedtuple('Witness', ('permutation', 'signs'))):
	'''
		Witness - The permuted (a', b', c') of the second solution and the four signs which make
		  the edge combination vanish
	'''

	__slots__ = ()

	def evaluate(self, s1, s2):
		'''
			evaluate - s1*a1*a' + s2*b1*b' + s3*c1*c' + s4*d1*d2 for this witness
		'''
		(a1, b1, c1, d1) = s1
		(aP, bP, cP) = self.permutation
		(sign1, sign2, sign3, sign4) = self.signs
		return sign1 * a1 * aP + sign2 * b1 * bP + sign3 * c1 * cP + sign4 * d1 * s2[3]


def _checkSolution(sol):
	if not isPrimitiveSolution(sol):
		raise InvalidInputError('Not a positive ordered primitive solution: %r' %(sol, ))


def connectionWitness(s1, s2):
	'''
		connectionWitness - First (permutation, signs) joining s1 and s2.

		  Permutations in itertools order, and for each the 16 sign patterns with + first.

		@param s1, s2 <PrimitiveSolution>

		@return <Witness/None> - None when the planes are not connected
	'''
	_checkSolution(s1)
	_checkSolution(s2)

	for permutation in itertools.permutations(s2[:3]):
		for signs in SIGN_PATTERNS:
			witness = Witness(permutation, signs)
			if witness.evaluate(s1, s2) == 0:
				return witness

	return None


def areConnected(s1, s2):
	'''
		areConnected - True if the face planes of s1 and s2 meet at the tetrahedral dihedral angle
	'''
	return connectionWitness(s1, s2) is not None


class RTGraph(object):
	'''
		RTGraph - Nodes are PrimitiveSolution objects sorted by (d, a, b, c).

		  edges     - dict (i, j) -> Witness with i < j node indexes
		  selfLoops - dict i -> Witness for nodes connected to themselves (flagged, not in edges)
	'''

	def __init__(self, nodes, edges, selfLoops):
		self.nodes = list(nodes)
		self.edges = dict(edges)
		self.selfLoops = dict(selfLoops)

	def hasEdge(self, s1, s2):
		'''
			hasEdge - True if s1 -- s2 is an edge (or a flagged self-loop when s1 == s2)
		'''
		try:
			i = self.nodes.index(tuple(s1))
			j = self.nodes.index(tuple(s2))
		except ValueError:
			return False

		if i == j:
			return i in self.selfLoops
		return (min(i, j), max(i, j)) in self.edges

	def neighbours(self, idx):
		ret = []
		for (i, j) in self.edges:
			if i == idx:
				ret.append(j)
			elif j == idx:
				ret.append(i)
		return sorted(ret)

	def __repr__(self):
		return 'RTGraph(nodes=%d, edges=%d, selfLoops=%d)' %(len(self.nodes), len(self.edges), len(self.selfLoops))


def buildGraph(dMax):
	'''
		buildGraph - The graph on all positive ordered primitive solutions with d <= dMax

		@param dMax <int> - >= 1

		@return <RTGraph>
	'''
	if isinstance(dMax, bool) or not isinstance(dMax, int) or dMax < 1:
		raise InvalidInputError('dMax must be a positive integer, got %r' %(dMax, ))

	nodes = []
	for d in range(1, dMax + 1, 2):
		nodes.extend(threeSquaresPrimitive(d))
	nodes.sort(key=lambda sol : (sol.d, sol.a, sol.b, sol.c))

	edges = {}
	selfLoops = {}
	for i in range(len(nodes)):
		witness = connectionWitness(nodes[i], nodes[i])
		if witness is not None:
			selfLoops[i] = witness
		for j in range(i + 1, len(nodes)):
			witness = connectionWitness(nodes[i], nodes[j])
			if witness is not None:
				edges[(i, j)] = witness

	logger.info('RT graph for d <= %d: %d nodes, %d edges, %d self-loops', dMax, len(nodes), len(edges), len(selfLoops))

	return RTGraph(nodes, edges, selfLoops)


def connectedComponents(graph):
	'''
		connectedComponents - Partition of the nodes, self-loops ignored

		@param graph <RTGraph>

		@return list<list<PrimitiveSolution>> - Largest component first, ties by first node; members in node order
	'''
	parents = list(range(len(graph.nodes)))

	def findRoot(idx):
		while parents[idx] != idx:
			parents[idx] = parents[parents[idx]]
			idx = parents[idx]
		return idx

	for (i, j) in graph.edges:
		(rootI, rootJ) = (findRoot(i), findRoot(j))
		if rootI != rootJ:
			parents[max(rootI, rootJ)] = min(rootI, rootJ)

	groups = {}
	for idx in range(len(graph.nodes)):
		groups.setdefault(findRoot(idx), []).append(idx)

	ordered = sorted(groups.values(), key=lambda members : (-len(members), members[0]))
	return [ [ graph.nodes[idx] for idx in members ] for members in ordered ]


def exportDot(graph):
	'''
		exportDot - The graph as DOT text. Node labels are "[(a,b,c),d]"; self-loops are drawn dashed.

		@return <str>
	'''
	lines = [ 'graph RT {' ]
	for node in graph.nodes:
		lines.append('\t"%s";' %(node.label, ))

	for (i, j) in sorted(graph.edges):
		lines.append('\t"%s" -- "%s";' %(graph.nodes[i].label, graph.nodes[j].label))

	for i in sorted(graph.selfLoops):
		lines.append('\t"%s" -- "%s" [style=dashed];' %(graph.nodes[i].label, graph.nodes[i].label))

	lines.append('}')
	return '\n'.join(lines) + '\n'


def componentRows(graph):
	'''
		componentRows - One ComponentRow per connected component, ids from 1

		@return list<ComponentRow>
	'''
	return [ ComponentRow(component_id=idx + 1, size=len(members), members=' '.join( sol.label for sol in members ))
		for (idx, members) in enumerate(connectedComponents(graph)) ]


# vim:set ts=8 shiftwidth=8 softtabstop=8 noexpandtab :
