"""
Open graphs as decorated cospans
================================

The same open graphs can be built as cospans of finite sets whose apex
carries a graph.  Composition then needs two steps: put the decorations
side by side, then push them along the map onto the pushout.
"""
from opencat.decorated import (decorated_compose, dcsp, graph_decoration, to_decorated,
                               to_structured)
from opencat.cospan import CSP_FINSET as C
from opencat.fincolim import FinFunction, FinSet, Graph

F = graph_decoration(max_edges=2)
G = dcsp(F)

base = C.cospan(FinSet(1), FinSet(2), FinSet(1), FinFunction.make([0], 2),
                FinFunction.make([1], 2))
edge = G.pro(base, Graph.from_edges(2, [(0, 1)]))

two = G.pro_compose(edge, edge)
print(two.base.apex, two.dec.edge_list)

# the same decoration by the closed formula
print(decorated_compose(F, base, edge.dec, base, edge.dec) == two.dec)

# identities carry the edgeless graph
print(G.pro_id(G.ob(FinSet(3), 0)).dec)

# and the translation to structured cospans commutes with composition
s = to_structured(edge)
print(to_decorated(s) == edge)
