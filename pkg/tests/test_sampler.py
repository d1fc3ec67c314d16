"""
Glauber 采样器测试

快速用例样本量小、容差宽；长链用例标记为 slow。
"""

import logging
import math
from fractions import Fraction

import numpy as np
import pytest

from core.exceptions import InvalidParameterError, PreconditionError
from modules.graph_core import complete, complete_bipartite, cycle, empty, path, petersen
from modules.indpoly import evaluate, independence_polynomial
from modules.sampler import HardCoreChain, HardCoreSampler, batch_means, glauber_step, make_rng


def serial_sampler(**overrides) -> HardCoreSampler:
    return HardCoreSampler({"max_workers": 1, **overrides})


def test_chain_stays_independent(petersen_graph):
    chain = HardCoreChain(petersen_graph, 2.0, make_rng(7))
    for _ in range(20_000):
        glauber_step(chain)
        assert chain.is_independent()
    assert chain.steps == 20_000
    assert chain.size == chain.state.bit_count()
    state = chain.state
    for u, v in petersen_graph.edges():
        assert not ((state >> u) & 1 and (state >> v) & 1)


def test_uncovered_neighbors_counts(c5):
    chain = HardCoreChain(c5, 1.0, make_rng(0))
    assert chain.uncovered_neighbors(0) == 2
    chain.occupied[2] = True
    for w in chain.neighbors[2]:
        chain.occupied_neighbors[w] += 1
    # 顶点 1 的邻居 0、2 中 0 仍未覆盖；2 本身被占据且未被覆盖
    assert chain.uncovered_neighbors(1) == 2
    assert chain.uncovered_neighbors(0) == 1


def test_rng_streams_are_reproducible():
    a = make_rng(3, 1, 0).random(5)
    b = make_rng(3, 1, 0).random(5)
    c = make_rng(3, 2, 0).random(5)
    d = make_rng(3, 1, 1).random(5)
    assert np.array_equal(a, b)
    assert not np.array_equal(a, c)
    assert not np.array_equal(a, d)


def test_batch_means():
    mean, stderr = batch_means(np.ones(100), 10)
    assert mean == 1.0
    assert stderr == np.finfo(float).eps
    assert batch_means(np.array([0.5]), 10)[1] == math.inf


@pytest.mark.parametrize("graph, expected", [
    (complete(1), 1 / 2),
    (complete(2), 1 / 3),
    (cycle(5), 3 / 11),
])
def test_small_graph_occupancy(graph, expected):
    estimate = serial_sampler().estimate_occupancy(graph, 1.0, seed=11, samples=20_000)
    assert estimate.occupancy == pytest.approx(expected, abs=0.02)
    assert math.isfinite(estimate.stderr)
    assert estimate.samples == 20_000


CORPUS = {
    "k2": complete(2),
    "c5": cycle(5),
    "p6": path(6),
    "k33": complete_bipartite(3, 3),
    "petersen": petersen(),
}


@pytest.mark.parametrize("lam", [Fraction(1, 5), Fraction(1), Fraction(5)])
@pytest.mark.parametrize("name", sorted(CORPUS))
def test_estimate_within_four_standard_errors(name, lam):
    graph = CORPUS[name]
    exact = float(evaluate(independence_polynomial(graph), lam).occupancy)
    estimate = serial_sampler().estimate_occupancy(graph, float(lam), seed=101, samples=20_000)
    assert 0 < estimate.stderr < 0.05
    assert abs(estimate.occupancy - exact) <= 4 * estimate.stderr, (name, lam, estimate)


def test_same_seed_same_estimate(c5):
    sampler = serial_sampler()
    first = sampler.estimate_occupancy(c5, 1.5, seed=5, samples=2000)
    second = sampler.estimate_occupancy(c5, 1.5, seed=5, samples=2000)
    other = sampler.estimate_occupancy(c5, 1.5, seed=6, samples=2000)
    assert first == second
    assert first.occupancy != other.occupancy


def test_default_schedule(c5):
    sampler = serial_sampler(burn_in_factor=10, thinning_factor=2)
    assert sampler.default_burn_in(5) == math.ceil(10 * 5 * math.log(5))
    assert sampler.default_burn_in(1) == 10
    assert sampler.default_thinning(5) == 10
    estimate = sampler.estimate_occupancy(c5, 1.0, seed=1, samples=10)
    assert (estimate.burn_in, estimate.thinning) == (sampler.default_burn_in(5), 10)


def test_invalid_inputs(c5):
    sampler = serial_sampler()
    with pytest.raises(PreconditionError):
        sampler.estimate_occupancy(empty(0), 1.0, seed=1, samples=10)
    with pytest.raises(InvalidParameterError):
        sampler.estimate_occupancy(c5, 0.0, seed=1, samples=10)
    with pytest.raises(InvalidParameterError):
        sampler.estimate_occupancy(c5, 1.0, seed=1, samples=0)
    with pytest.raises(InvalidParameterError):
        sampler.estimate_occupancy(c5, 1.0, seed=1, samples=10, thinning=0)
    with pytest.raises(InvalidParameterError):
        sampler.run_chains(c5, 1.0, seed=1, chains=0, samples=10)


def test_warns_above_uniqueness_threshold(petersen_graph, caplog):
    with caplog.at_level(logging.WARNING):
        serial_sampler().estimate_occupancy(petersen_graph, 5.0, seed=1, samples=10)
    assert "uniqueness threshold" in caplog.text
    caplog.clear()
    with caplog.at_level(logging.WARNING):
        serial_sampler().estimate_occupancy(petersen_graph, 1.0, seed=1, samples=10)
    assert "uniqueness threshold" not in caplog.text


def test_run_chains_serial(c5):
    estimate = serial_sampler().run_chains(c5, 1.0, seed=3, chains=4, samples=5000)
    assert estimate.samples == 20_000
    assert estimate.occupancy == pytest.approx(3 / 11, abs=0.02)


def test_run_chains_parallel_matches_serial(c5):
    serial = serial_sampler().run_chains(c5, 1.0, seed=9, chains=2, samples=500)
    parallel = HardCoreSampler({"max_workers": 2}).run_chains(c5, 1.0, seed=9, chains=2, samples=500)
    assert serial == parallel


def test_z_histogram_on_edge(k2):
    histogram = serial_sampler().z_histogram(k2, 1.0, seed=4, samples=20_000)
    assert len(histogram.counts) == 2
    assert sum(histogram.counts) == 20_000
    # 占据率 = λ/(1+λ)·E[(1+λ)^{-Z}]，故 E[2^{-Z}] = 2/3
    assert histogram.expectation_of_power(2.0) == pytest.approx(2 / 3, abs=0.03)


def test_z_histogram_edgeless():
    histogram = serial_sampler().z_histogram(empty(3), 1.0, seed=4, samples=100)
    assert histogram.counts == [100]
    assert histogram.mean() == 0.0


def test_fact_checks_on_c5(c5):
    result = serial_sampler().fact_checks(c5, 1.0, seed=2, samples=20_000)
    assert result.fact1_gap < 0.03
    assert set(result.fact2_gaps) <= {0, 1, 2}
    assert all(gap < 0.03 for gap in result.fact2_gaps.values())
    assert result.observations == 100_000


def test_fact_checks_reject_triangles(k3):
    with pytest.raises(PreconditionError):
        serial_sampler().fact_checks(k3, 1.0, seed=1, samples=10)


def test_identity_report_on_petersen(petersen_graph):
    report = serial_sampler().identity_report(petersen_graph, 1.0, seed=8, samples=5000)
    assert abs(report["eq24_residual"]) < 0.02
    # 正则图上 eq25 取等
    assert abs(report["eq25_slack"]) < 0.02
    assert report["occupancy"] == pytest.approx(report["eq24_rhs"], abs=0.02)


@pytest.mark.slow
def test_c5_long_run_within_four_standard_errors(c5):
    estimate = serial_sampler().estimate_occupancy(c5, 1.0, seed=2024, samples=1_000_000)
    assert abs(estimate.occupancy - 3 / 11) <= 4 * estimate.stderr


@pytest.mark.slow
def test_petersen_fact_checks_long_run(petersen_graph):
    result = serial_sampler().fact_checks(petersen_graph, 1.0, seed=17, samples=200_000)
    assert result.fact1_gap < 0.005
    assert all(gap < 0.01 for gap in result.fact2_gaps.values())
