#!/usr/bin/env python

#
# TestRTGraph - Test the face plane connection graph
#

# Import and apply the properties (like the path to the source tree) for this test.
import TestProperties

# vim: set ts=4 sw=4 st=4 expandtab

import sys
import subprocess

from LatticeTetra import InvalidInputError
from LatticeTetra.numtheory import PrimitiveSolution, threeSquaresPrimitive
from LatticeTetra.facegen import faceDs
from LatticeTetra.rtgraph import Witness, connectionWitness, areConnected, buildGraph, connectedComponents, \
    exportDot, componentRows

from TestProperties import CROSS_PLANE_TETRA


class TestRTGraph(object):
    '''
        TestRTGraph - Test LatticeTetra.rtgraph
    '''

    def test_connectionWitness(self):

        s1 = PrimitiveSolution(1, 1, 5, 3)
        s2 = PrimitiveSolution(1, 5, 11, 7)

        given = Witness( (11, 5, 1), (1, 1, 1, -1) )
        assert given.evaluate(s1, s2) == 0 , 'Expected 1(11) + 1(5) + 5(1) - 3(7) = 0'

        witness = connectionWitness(s1, s2)
        assert witness is not None , 'Expected [(1,1,5),3] and [(1,5,11),7] to be connected'
        assert witness.evaluate(s1, s2) == 0 , 'Expected the returned witness to vanish'
        assert sorted(witness.permutation) == [1, 5, 11] , 'Expected a permutation of (1, 5, 11) but got %s' %(repr(witness.permutation), )

        assert areConnected(s1, s2) , 'Expected areConnected to agree with connectionWitness'
        assert areConnected(s2, s1) , 'Expected the relation to be symmetric'

    def test_crossPlaneFaces(self):

        # The example tetrahedron has faces in the planes with d = 3 and d = 7
        ds = faceDs(CROSS_PLANE_TETRA)
        assert 3 in ds and 7 in ds , 'Expected faces with d = 3 and d = 7 but got %s' %(repr(ds), )

    def test_notConnected(self):

        s1 = PrimitiveSolution(1, 1, 1, 1)
        s2 = PrimitiveSolution(5, 7, 13, 9)
        # +-5 +-7 +-13 +-9 is always even, but never 0
        assert connectionWitness(s1, s2) is None , 'Expected [(1,1,1),1] and [(5,7,13),9] not to be connected'
        assert not areConnected(s1, s2) , 'Expected areConnected to be False'

        nodes = buildGraph(19).nodes
        for s1 in nodes:
            for s2 in nodes:
                assert areConnected(s1, s2) == areConnected(s2, s1) , 'Expected connectivity of %s and %s not to depend on the order' %(s1.label, s2.label)
                assert (connectionWitness(s1, s2) is None) == (connectionWitness(s2, s1) is None) , 'Expected a witness for %s and %s in both orders' %(s1.label, s2.label)

        s1 = PrimitiveSolution(1, 1, 1, 1)
        gotException = False
        try:
            areConnected( (3, 3, 3, 3), s1 )
        except InvalidInputError:
            gotException = True
        assert gotException , 'Expected a non-primitive node to raise InvalidInputError'

    def test_buildGraph(self):

        graph = buildGraph(1)
        assert graph.nodes == [ PrimitiveSolution(1, 1, 1, 1) ] , 'Expected the single node (1,1,1) but got %s' %(repr(graph.nodes), )
        assert graph.edges == {} , 'Expected no edges'
        assert 0 in graph.selfLoops , 'Expected (1,1,1) to be flagged as connected to itself'
        assert graph.hasEdge( (1, 1, 1, 1), (1, 1, 1, 1) ) , 'Expected hasEdge to report the self-loop'

        graph = buildGraph(3)
        assert graph.nodes == [ PrimitiveSolution(1, 1, 1, 1), PrimitiveSolution(1, 1, 5, 3) ] , 'Expected 2 nodes but got %s' %(repr(graph.nodes), )
        assert (0, 1) in graph.edges , 'Expected (1,1,1) -- (1,1,5)'
        assert graph.neighbours(0) == [1] , 'Expected node 1 as the only neighbour of node 0'

        graph = buildGraph(19)
        expectedNodes = sum( len(threeSquaresPrimitive(d)) for d in range(1, 20, 2) )
        assert len(graph.nodes) == expectedNodes , 'Expected %d nodes but got %d' %(expectedNodes, len(graph.nodes))
        order = [ (sol.d, sol.a, sol.b, sol.c) for sol in graph.nodes ]
        assert order == sorted(order) , 'Expected nodes sorted by (d, a, b, c)'
        for ((i, j), witness) in graph.edges.items():
            assert i < j , 'Expected edge keys with i < j'
            assert witness.evaluate(graph.nodes[i], graph.nodes[j]) == 0 , 'Expected every stored witness to vanish'
            assert graph.hasEdge(graph.nodes[j], graph.nodes[i]) , 'Expected hasEdge to ignore the order'
        assert graph.hasEdge( (1, 1, 5, 3), (1, 5, 11, 7) ) , 'Expected [(1,1,5),3] -- [(1,5,11),7] in the graph'

        for bad in (0, -3, True):
            gotException = False
            try:
                buildGraph(bad)
            except InvalidInputError:
                gotException = True
            assert gotException , 'Expected dMax=%r to raise InvalidInputError' %(bad, )

    def test_connectedComponents(self):

        graph = buildGraph(3)
        components = connectedComponents(graph)
        assert components == [ [ PrimitiveSolution(1, 1, 1, 1), PrimitiveSolution(1, 1, 5, 3) ] ] , 'Expected one component of 2 nodes but got %s' %(repr(components), )

        graph = buildGraph(19)
        components = connectedComponents(graph)
        assert sum( len(component) for component in components ) == len(graph.nodes) , 'Expected the components to partition the nodes'
        sizes = [ len(component) for component in components ]
        assert sizes == sorted(sizes, reverse=True) , 'Expected the largest components first'

        rows = componentRows(graph)
        assert [ row.component_id for row in rows ] == list(range(1, len(components) + 1)) , 'Expected component ids from 1'
        assert rows[0].size == sizes[0] , 'Expected the first row to be the largest component'
        assert rows[0].members.split(' ')[0] == components[0][0].label , 'Expected members as space separated labels'

    def test_exportDot(self):

        dot = exportDot(buildGraph(3))
        assert dot.startswith('graph RT {\n') , 'Expected an undirected graph named RT but got %s' %(repr(dot), )
        assert dot.endswith('}\n') , 'Expected the graph to be closed'
        assert '"[(1,1,1),1]" -- "[(1,1,5),3]";' in dot , 'Expected the edge (1,1,1) -- (1,1,5) in %s' %(repr(dot), )
        assert '"[(1,1,1),1]" -- "[(1,1,1),1]" [style=dashed];' in dot , 'Expected the self-loop drawn dashed in %s' %(repr(dot), )


if __name__ == '__main__':
    sys.exit(subprocess.Popen('GoodTests.py -n1 "%s" %s' %(sys.argv[0], ' '.join(['"%s"' %(arg.replace('"', '\\"'), ) for arg in sys.argv[1:]]) ), shell=True).wait())

# vim: set ts=4 sw=4 expandtab
