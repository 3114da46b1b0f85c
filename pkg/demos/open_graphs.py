"""
Composing open graphs
=====================

An open graph is a graph with two lists of boundary vertices.  Gluing the
right boundary of one to the left boundary of the next is a pushout.
"""
from opencat import jsonio
from opencat.fincolim import FinFunction, FinSet, Graph, GraphHom, discrete
from opencat.structured import SCSP_DISCRETE as D

# a single edge 0 -> 1, entered at 0 and left at 1
edge_graph = Graph.from_edges(2, [(0, 1)])


def boundary(k, g, vertices):
    return GraphHom(discrete(FinSet(k)), g, FinFunction(FinSet(k), g.vertices, tuple(vertices)),
                    FinFunction(FinSet(0), g.edges, ()))


edge = D.cospan(FinSet(1), edge_graph, FinSet(1), boundary(1, edge_graph, [0]),
                boundary(1, edge_graph, [1]))

# three edges in a row make a path with four vertices
path = D.pro_compose(D.pro_compose(edge, edge), edge)
print(path.apex)
print(jsonio.dumps(jsonio.open_graph_to_json(path)))

# composing with an identity gives the same open graph back
print(D.pro_compose(edge, D.pro_id(FinSet(1))) == edge)

# the coproduct puts two open graphs side by side; the feet add up
pair, _, _ = D.pro_coproduct(edge, edge)
print(pair.foot_l, pair.foot_r, pair.apex)

# restrict along a map into the left foot: two entry points both land on vertex 0
fork, _ = D.restrict(FinFunction.make([0, 0], 1), FinFunction.identity(FinSet(1)), edge)
print(fork.leg_l.vmap)

# closing off the right boundary leaves a graph with inputs only
point = discrete(FinSet(1))
close = D.cospan(FinSet(1), point, FinSet(0), boundary(1, point, [0]), boundary(0, point, []))
print(D.pro_compose(edge, close).apex)

print(jsonio.to_dot(path, name="path"))
