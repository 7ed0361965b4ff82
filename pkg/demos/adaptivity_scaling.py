"""Adaptivity scaling: solver rounds grow with log(n), greedy rounds with k.

Holds the budget constant while the ground set grows, so greedy's round count
(one per picked element) stays flat-ish while its pick count allows, and the
solver's depth grows only through deeper survivor-pool drains.  The full
gate with n up to 4096 runs via ``submodknap bench-rounds``.
"""

import submodknap as sk
from submodknap.harness import adaptivity_bench

sizes = (64, 128, 256, 512)
print(f"{'n':>6} {'solver rounds':>14} {'greedy rounds':>14}")
for n in sizes:
    graph = sk.gen_erdos_renyi(n, min(1.0, 20.0 / n), seed=100)
    instance = sk.KnapsackInstance(graph.node_costs, 8.0)
    objective = sk.CutObjective(graph)

    oracle = sk.CountingOracle(objective)
    result = sk.ast(oracle, instance, sk.AstConfig(seed=0))

    greedy_oracle = sk.CountingOracle(objective)
    sk.density_greedy(greedy_oracle, instance)
    print(
        f"{n:>6} {result.ast_rounds:>14} "
        f"{greedy_oracle.ledger.adaptive_rounds:>14}"
    )

report = adaptivity_bench(sizes=sizes, budget=8.0, seeds=(0, 1))
print(
    f"\nlog fit: rounds = {report['slope']:.1f} ln n + {report['intercept']:.1f} "
    f"(R^2 = {report['r_squared']:.3f})"
)
print(f"largest/smallest round ratio: {report['round_ratio']:.2f}")
