"""
随机正则图生成与紧性实验测试
"""

import math
from collections import Counter

import numpy as np
import pytest

from core.exceptions import InvalidParameterError, RetryBudgetExceeded
from modules.bounds import occupancy_lower_bound_thm13, tree_alpha
from modules.graph_core import complete, cycle, girth, is_triangle_free
from modules.random_graphs import (
    RegularGraphGenerator,
    TightnessExperiment,
    pair_stubs,
    to_frame,
    validate_regular_parameters,
)
from modules.sampler import HardCoreSampler


@pytest.fixture
def generator():
    return RegularGraphGenerator()


def test_parameter_validation():
    with pytest.raises(InvalidParameterError) as info:
        validate_regular_parameters(5, 3)
    assert info.value.code == "parity"
    with pytest.raises(InvalidParameterError) as info:
        validate_regular_parameters(4, 4)
    assert info.value.code == "degree"
    validate_regular_parameters(4, 3)


def test_pair_stubs_returns_regular_or_none():
    rng = np.random.Generator(np.random.PCG64(0))
    for _ in range(50):
        g = pair_stubs(8, 3, rng)
        if g is not None:
            assert g.degrees() == [3] * 8


def test_forced_complete_graph(generator):
    sample = generator.random_regular(4, 3, seed=1)
    assert sample.graph == complete(4)
    assert sample.attempts == sample.rejections_simple + 1


def test_simple_regular_graphs_across_seeds(generator):
    for seed in range(1, 101):
        g = generator.random_regular(8, 3, seed=seed).graph
        assert g.degrees() == [3] * 8
        assert g.edge_count == 12


def test_same_seed_same_graph(generator):
    assert generator.random_regular(20, 3, seed=5).graph == generator.random_regular(20, 3, seed=5).graph


def test_triangle_free_forces_hexagon(generator):
    sample = generator.random_regular_triangle_free(6, 2, seed=3)
    assert girth(sample.graph) == 6
    assert sorted(sample.graph.degrees()) == [2] * 6


def test_triangle_free_budget_exhausted(generator):
    with pytest.raises(RetryBudgetExceeded) as info:
        generator.random_regular_triangle_free(4, 3, seed=1, max_attempts=50)
    details = info.value.details
    assert details["attempts"] == 50
    assert details["rejections_simple"] + details["rejections_triangle"] == 50
    assert details["rejections_triangle"] > 0


def test_budget_from_config():
    generator = RegularGraphGenerator({"max_attempts": 3})
    with pytest.raises(RetryBudgetExceeded):
        generator.random_regular_triangle_free(4, 3, seed=1)
    with pytest.raises(InvalidParameterError):
        generator.random_regular(4, 3, seed=1, max_attempts=0)


def test_high_girth(generator):
    sample = generator.random_regular_high_girth(20, 3, min_girth=5, seed=2)
    assert girth(sample.graph) >= 5
    assert sample.graph.degrees() == [3] * 20
    with pytest.raises(InvalidParameterError):
        generator.random_regular_high_girth(20, 3, min_girth=2, seed=2)


def test_uniform_over_two_regular_graphs_on_six_vertices(generator):
    # 带标号的 C6 有 60 个，两个三角形的并有 10 个
    draws = 2000
    kinds = Counter(
        "hexagon" if is_triangle_free(generator.random_regular(6, 2, seed=seed).graph) else "triangles"
        for seed in range(draws)
    )
    p = 6 / 7
    assert abs(kinds["hexagon"] / draws - p) < 4 * math.sqrt(p * (1 - p) / draws)


def _fast_experiment() -> TightnessExperiment:
    return TightnessExperiment(sampler=HardCoreSampler({"max_workers": 1, "burn_in_factor": 5}))


def test_tightness_rows_track_tree_fixed_point():
    experiment = _fast_experiment()
    rows = experiment.run(200, 3, seeds=[1], lambda_grid=["1"], samples=500)
    assert len(rows) == 1
    row = rows[0]
    assert row.tree_alpha == pytest.approx(tree_alpha(3, 1.0).alpha)
    assert row.thm13 == pytest.approx(occupancy_lower_bound_thm13(3, 1.0))
    assert abs(row.occ_hat - row.tree_alpha) < 0.03
    assert row.occ_hat >= row.thm13 - 3 * row.stderr


def test_tightness_frame_and_summary():
    experiment = _fast_experiment()
    rows = experiment.run(60, 2, seeds=[1, 2], lambda_grid=["1/2", "1"], samples=200)
    frame = to_frame(rows)
    assert list(frame.columns) == [
        "n", "d", "lambda", "seed", "occ_hat", "stderr", "tree_alpha", "thm13", "gap_tree", "gap_thm13",
    ]
    assert len(frame) == 4
    summary = experiment.summarize(rows)
    assert list(summary["lambda"]) == [0.5, 1.0]
    assert list(summary["seeds"]) == [2, 2]
    assert "within_tolerance" in summary.columns


@pytest.mark.slow
def test_tightness_large_graphs_within_tolerance():
    experiment = TightnessExperiment(sampler=HardCoreSampler({"max_workers": 1}))
    rows = experiment.run(2000, 3, seeds=range(1, 6), lambda_grid=["1"], samples=2000)
    summary = experiment.summarize(rows)
    assert bool(summary["within_tolerance"].all())
    assert all(row.occ_hat >= row.thm13 - 3 * row.stderr for row in rows)
