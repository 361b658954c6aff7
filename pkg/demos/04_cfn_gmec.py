"""
Cost function networks and the minimum energy conformation
==========================================================

Floating point energies become bounded integer costs. Three exact solvers
then agree on the optimum: brute force, depth-first branch and bound, and
backtracking over a tree decomposition with cached subproblem optima.
"""

# %%
import io

import numpy as np

from cpdtw import EnergyModel, energies_to_cfn, Graph, synthetic_instance
from cpdtw.cfn import dumps_wcsp, loads_wcsp, total_energy
from cpdtw.solver import brute_force_gmec, btd_solve, dfbb_solve, verify_solution

rng = np.random.default_rng(0)
em = EnergyModel(
    e0=-12.0,
    unary=tuple(rng.normal(size=3) for _ in range(4)),
    binary={(0, 1): rng.normal(size=(3, 3)), (1, 2): rng.normal(size=(3, 3)), (2, 3): rng.normal(size=(3, 3))},
)
net = energies_to_cfn(em, M=10**6)
print("k =", net.k, " offset =", round(net.offset, 4))

# %%
r = brute_force_gmec(net)
energy = total_energy(em, r.best_assignment)
print("optimum", r.best_assignment, "cost", r.best_cost)
print("energy recovered from cost:", round(net.offset + r.best_cost / 10**6, 5), "exact:", round(energy, 5))

# %%
# A larger sparse instance where exhaustive enumeration is hopeless but the
# tree decomposition keeps each subproblem small.
ladder = [(i, i + 1) for i in range(39)] + [(i, i + 2) for i in range(0, 38, 2)]
big = synthetic_instance(Graph.from_edges(40, ladder), domain_size=4, seed=7, c_max=30)
res = btd_solve(big)
print(f"btd: cost {res.best_cost}, {res.nodes_expanded} nodes, {res.wall_time * 1000:.1f} ms")
print("verified:", verify_solution(big, res.best_assignment, res.best_cost))

# %%
small = synthetic_instance(Graph.from_edges(8, [(i, (i + 1) % 8) for i in range(8)]), 3, seed=1)
print("bf / dfbb / btd:", brute_force_gmec(small).best_cost, dfbb_solve(small).best_cost, btd_solve(small).best_cost)

# %%
# Networks serialise to the WCSP text format and back without loss.
text = dumps_wcsp(small)
print(text.splitlines()[0])
assert loads_wcsp(io.StringIO(text).read()) == small
