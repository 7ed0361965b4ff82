"""Budget sweep: every algorithm across a grid of budget fractions.

Produces the CSV table and the two SVG charts (objective value and adaptive
rounds versus budget) for a desk-scale max-cut instance.  Equivalent CLI:

    submodknap sweep --objective cut --gen-n 120 --gen-p 0.25 \
        --budget-fracs 0.1,0.2,0.3,0.4,0.5 --trials 2 --seed 1 \
        --out-csv sweep.csv --out-svg sweep_value.svg
"""

from submodknap import AstConfig
from submodknap.harness import (
    ExperimentSpec,
    GenerateSource,
    run_experiment,
    write_csv,
    write_svg_plot,
)

source = GenerateSource(n=120, p=0.25, seed=1)
records = []
for algorithm in ("ast", "density_greedy", "random_feasible"):
    spec = ExperimentSpec(
        algorithm=algorithm,
        objective="cut",
        source=source,
        budget_fractions=(0.1, 0.2, 0.3, 0.4, 0.5),
        trials=2,
        config=AstConfig(seed=1),
    )
    records.extend(run_experiment(spec))

write_csv(records, "sweep.csv")
write_svg_plot(records, "sweep_value.svg", y_axis="value")
write_svg_plot(records, "sweep_rounds.svg", y_axis="rounds")
print("wrote sweep.csv, sweep_value.svg, sweep_rounds.svg\n")

print(f"{'algorithm':>16} {'fraction':>9} {'mean value':>11} {'rounds':>7}")
seen = {}
for rec in records:
    key = (rec.algorithm, rec.budget_fraction)
    seen.setdefault(key, []).append(rec)
for (algorithm, fraction), group in sorted(seen.items()):
    value = sum(r.f_value for r in group) / len(group)
    rounds = sum(
        r.adaptive_rounds_ast + r.adaptive_rounds_estimator for r in group
    ) / len(group)
    print(f"{algorithm:>16} {fraction:>9.2f} {value:>11.2f} {rounds:>7.1f}")
