"""
Open process theories
=====================

Processes live in free categories on acyclic graphs.  A proarrow picks a
morphism of the apex from an input on the left boundary to an output on
the right; composing glues the boundaries and composes the morphisms.
"""
from opencat.decorated import CSP_FREECAT, process_theories
from opencat.errors import CyclicGraphError
from opencat.fincolim import FinFunction, FinSet, Graph, GraphHom

P = process_theories()

point = Graph.from_edges(1)
arrow = Graph.from_edges(2, [(0, 1)])
none = FinFunction(FinSet(0), FinSet(1), ())
start = GraphHom(point, arrow, FinFunction.make([0], 2), none)
end = GraphHom(point, arrow, FinFunction.make([1], 2), none)

step = CSP_FREECAT.cospan(point, arrow, point, start, end)
proc, = P.apex(step).objects()
one_step = P.pro(step, proc)
two_steps = P.pro_compose(one_step, one_step)
print(two_steps.dec.f)

# identity proarrows carry identity morphisms
print(P.pro_id(P.ob(arrow, 1)).dec.f)

# gluing an arrow to its reverse along both endpoints creates a cycle,
# and a cycle has no finite free category
two = Graph.from_edges(2)
back = Graph.from_edges(2, [(1, 0)])


def on_vertices(g):
    return GraphHom(two, g, FinFunction.identity(FinSet(2)), FinFunction(FinSet(0), g.edges, ()))


there = CSP_FREECAT.cospan(point, arrow, two, start, on_vertices(arrow))
back_again = CSP_FREECAT.cospan(two, back, point, on_vertices(back),
                                GraphHom(point, back, FinFunction.make([0], 2), none))
try:
    CSP_FREECAT.pro_compose(there, back_again)
except CyclicGraphError as exc:
    print("rejected:", exc)
