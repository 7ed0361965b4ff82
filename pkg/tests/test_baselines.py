import itertools

import numpy as np
import pytest

from submodknap import (
    CountingOracle,
    CutObjective,
    KnapsackInstance,
    ModularObjective,
    brute_force_opt,
    density_greedy,
    gen_erdos_renyi,
    random_feasible,
)


def exhaustive_opt(objective, instance):
    """Unpruned reference enumeration over all subsets."""
    best_set, best_value = (), objective(np.empty(0, dtype=np.intp))
    for size in range(1, instance.n + 1):
        for combo in itertools.combinations(range(instance.n), size):
            if instance.cost_of(combo) > instance.budget:
                continue
            value = objective(np.asarray(combo, dtype=np.intp))
            if value > best_value or (value == best_value and combo < best_set):
                best_set, best_value = combo, value
    return best_set, best_value


class TestBruteForce:
    def test_modular_example(self, unit_instance_3):
        objective = ModularObjective([3.0, 2.0, 1.0])
        assert brute_force_opt(objective, unit_instance_3) == ((0, 1), 5.0)

    def test_budget_below_min_cost(self):
        objective = ModularObjective([3.0, 2.0])
        instance = KnapsackInstance(np.array([2.0, 2.0]), 1.0)
        assert brute_force_opt(objective, instance) == ((), 0.0)

    def test_triangle_cut_optimum(self, unit_triangle):
        objective = CutObjective(unit_triangle)
        instance = KnapsackInstance(np.ones(3), 3.0)
        best, value = brute_force_opt(objective, instance)
        assert value == 2.0  # any single vertex or any pair cuts two edges

    def test_matches_unpruned_enumeration(self):
        for seed in range(4):
            graph = gen_erdos_renyi(9, 0.5, seed=seed)
            objective = CutObjective(graph)
            instance = KnapsackInstance(graph.node_costs, 0.5 * float(graph.node_costs.sum()))
            assert brute_force_opt(objective, instance) == exhaustive_opt(objective, instance)

    def test_lexicographic_tie_break(self):
        # elements 0 and 1 are interchangeable; {0} must win over {1}
        objective = ModularObjective([2.0, 2.0, 0.0])
        instance = KnapsackInstance(np.ones(3), 1.0)
        assert brute_force_opt(objective, instance) == ((0,), 2.0)

    def test_size_cap(self):
        objective = ModularObjective(np.ones(30))
        instance = KnapsackInstance(np.ones(30), 5.0)
        with pytest.raises(ValueError, match="capped"):
            brute_force_opt(objective, instance)


class TestDensityGreedy:
    def test_modular_example(self, unit_instance_3):
        oracle = CountingOracle(ModularObjective([3.0, 2.0, 1.0]))
        assert density_greedy(oracle, unit_instance_3) == (0, 1)

    def test_stops_without_positive_marginal(self):
        oracle = CountingOracle(ModularObjective([-1.0, -2.0]))
        instance = KnapsackInstance(np.ones(2), 2.0)
        assert density_greedy(oracle, instance) == ()

    def test_never_violates_budget(self):
        rng = np.random.default_rng(21)
        for _ in range(1000):
            n = int(rng.integers(2, 9))
            values = rng.random(n) * 4 - 1
            costs = rng.random(n) + 0.05
            budget = float(rng.random() * costs.sum() + 0.01)
            instance = KnapsackInstance(costs, budget)
            oracle = CountingOracle(ModularObjective(values))
            selected = density_greedy(oracle, instance)
            assert instance.feasible(selected)

    def test_one_round_per_pick_plus_final(self):
        oracle = CountingOracle(ModularObjective([3.0, 2.0, 1.0]))
        instance = KnapsackInstance(np.ones(3), 2.0)
        selected = density_greedy(oracle, instance)
        # two picks plus the round that finds nothing affordable is absent
        # here (budget exactly exhausted), so rounds == picks
        assert oracle.ledger.adaptive_rounds == len(selected)


class TestRandomFeasible:
    def test_everything_fits(self):
        instance = KnapsackInstance(np.ones(5), 10.0)
        kept = random_feasible(instance, np.random.default_rng(0))
        assert sorted(kept) == [0, 1, 2, 3, 4]

    def test_nothing_fits(self):
        instance = KnapsackInstance(np.full(4, 2.0), 1.0)
        assert random_feasible(instance, np.random.default_rng(0)) == ()

    def test_budget_respected_on_random_instances(self):
        rng = np.random.default_rng(22)
        for _ in range(200):
            n = int(rng.integers(2, 12))
            costs = rng.random(n) + 0.01
            instance = KnapsackInstance(costs, float(rng.random() * costs.sum() + 0.01))
            assert instance.feasible(random_feasible(instance, rng))


class TestOracleDominance:
    def test_brute_force_dominates_heuristics(self):
        for seed in range(3):
            graph = gen_erdos_renyi(10, 0.4, seed=seed)
            objective = CutObjective(graph)
            instance = KnapsackInstance(
                graph.node_costs, 0.4 * float(graph.node_costs.sum())
            )
            _, opt = brute_force_opt(objective, instance)
            greedy_set = density_greedy(CountingOracle(objective), instance)
            random_set = random_feasible(instance, np.random.default_rng(seed))
            for chosen in (greedy_set, random_set):
                value = objective(np.asarray(chosen, dtype=np.intp))
                assert value <= opt + 1e-12
