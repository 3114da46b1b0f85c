"""
Checking the laws
=================

Every construction comes with a checker that evaluates its laws on a
sample and returns a report of per-law tallies with failure witnesses.
"""
from opencat.cospan import CSP_FINSET as D
from opencat.dblcore import check_lax_double_functor, check_pseudocategory, make_sample
from opencat.fincolim import finsets
from opencat.mutants import get_mutant
from opencat.structured import LOOPS, scsp, square_map
from opencat.suites import instance_sample

feet = finsets(1)
pros = list(D.cospans(feet, finsets(2)))
sample = make_sample(D, objects=feet, pros=pros, cells=D.all_cells(pros), limit=300)
print(check_pseudocategory(D, sample))

# a lax map that does not preserve pushouts: the laws hold, but it is not pseudo
F = square_map(direct=True)
s = instance_sample(scsp(LOOPS), feet, [LOOPS(a) for a in finsets(2)], limit=100)
report = check_lax_double_functor(F, s)
print(report.ok, report.flags)

# a deliberately broken associator is caught with a witness
detected, detail = get_mutant("corrupted-associator").run()
print(detected)
print(detail[:200])
