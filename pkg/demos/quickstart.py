"""Quickstart: solve one budgeted max-cut instance and sanity-check it.

Builds a small random graph, runs the alternating-threshold solver through a
counted oracle, and compares the answer against the exact optimum and the
density-greedy baseline.
"""

import numpy as np

import submodknap as sk

# a 20-node random graph; node costs come with the generator
graph = sk.gen_erdos_renyi(20, 0.4, seed=7)
objective = sk.CutObjective(graph)

# budget: 40% of the total node cost
total_cost = float(np.sort(graph.node_costs).sum())
instance = sk.KnapsackInstance(graph.node_costs, 0.4 * total_cost)
print(f"ground set: {instance.n} elements, budget {instance.budget:.3f}")
print(f"at most {instance.max_feasible_cardinality} elements fit\n")

# the solver sees the objective only through a counted oracle
oracle = sk.CountingOracle(objective)
result = sk.ast(oracle, instance, sk.AstConfig(seed=0))

print(f"solution value  : {result.value:.4f}")
print(f"solution cost   : {instance.cost_of(result.solution):.4f} <= {instance.budget:.4f}")
print(f"solution        : {sorted(result.solution)}")
print(f"adaptive rounds : {result.ast_rounds} (+{result.estimator_rounds} estimator)")
print(f"oracle queries  : {oracle.ledger.total_queries}\n")

# every intermediate candidate is recorded with its value
for name, (ids, value) in sorted(result.candidates.items()):
    print(f"  candidate {name:<11} value {value:10.4f}  size {len(ids)}")

# exact optimum (feasible at this size) and the greedy baseline
best_set, opt = sk.brute_force_opt(objective, instance)
greedy = sk.density_greedy(sk.CountingOracle(objective), instance)
greedy_value = objective(np.asarray(greedy, dtype=np.intp))
print(f"\nexact optimum   : {opt:.4f} on {list(best_set)}")
print(f"density greedy  : {greedy_value:.4f}")
print(f"solver ratio    : {result.value / opt:.3f} of optimal")
