"""
独立多项式求解器测试：经典图已知值、穷举对照、不交并乘法性、环的转移矩阵对照
"""

from fractions import Fraction

import pytest
from hypothesis import given, settings as hsettings

from core.exceptions import GraphSizeError, InvalidParameterError
from core.models import IndPoly
from modules.graph_core import (
    complete,
    complete_bipartite,
    cycle,
    disjoint_union,
    empty,
    path,
    petersen,
)
from modules.indpoly import (
    IndependencePolynomialSolver,
    binomial_poly,
    brute_force_counts,
    cycle_occupancy,
    cycle_partition_function,
    evaluate,
    independence_polynomial,
    poly_add,
    poly_mul,
    poly_shift,
)
from strategies import graphs

LUCAS = [2, 1, 3, 4, 7, 11, 18, 29, 47, 76, 123, 199, 322, 521, 843, 1364, 2207, 3571, 5778, 9349, 15127]


def test_polynomial_helpers():
    assert poly_add((1, 2), (3, 4, 5)) == (4, 6, 5)
    assert poly_shift((1, 2)) == (0, 1, 2)
    assert poly_mul((1, 1), (1, 1)) == (1, 2, 1)
    assert binomial_poly(3) == (1, 3, 3, 1)


@pytest.mark.parametrize("graph, coeffs", [
    (empty(0), (1,)),
    (empty(1), (1, 1)),
    (empty(3), (1, 3, 3, 1)),
    (complete(2), (1, 2)),
    (complete(5), (1, 5)),
    (path(4), (1, 4, 3)),
    (cycle(4), (1, 4, 2)),
    (cycle(5), (1, 5, 5)),
    (cycle(6), (1, 6, 9, 2)),
    (complete_bipartite(3, 3), (1, 6, 9, 2)),
    (petersen(), (1, 10, 30, 30, 5)),
])
def test_known_polynomials(graph, coeffs):
    p = independence_polynomial(graph)
    assert p.coeffs == coeffs
    assert p.n == graph.n


def test_indpoly_model_validation():
    with pytest.raises(InvalidParameterError):
        IndPoly(coeffs=(2, 1), n=1)
    with pytest.raises(InvalidParameterError):
        IndPoly(coeffs=(1, 3), n=2)
    p = IndPoly(coeffs=(1, 5, 5), n=5)
    assert p.alpha == 2 and p.total == 11
    assert p.to_json_dict() == {"n": 5, "coeffs": ["1", "5", "5"], "alpha": 2}


def test_solver_matches_brute_force_on_atlas(atlas):
    solver = IndependencePolynomialSolver()
    for g6, g in atlas:
        assert solver.compute(g) == brute_force_counts(g), g6


@hsettings(max_examples=40, deadline=None)
@given(graphs(min_n=9, max_n=20))
def test_solver_matches_brute_force_on_random_graphs(g):
    assert independence_polynomial(g) == brute_force_counts(g)


@pytest.mark.slow
@hsettings(max_examples=500, deadline=None)
@given(graphs(min_n=9, max_n=20))
def test_solver_matches_brute_force_on_many_random_graphs(g):
    assert independence_polynomial(g) == brute_force_counts(g)


@pytest.mark.slow
def test_solver_matches_brute_force_on_eight_vertex_graphs(eight_vertex_graphs):
    solver = IndependencePolynomialSolver()
    for g6, g in eight_vertex_graphs:
        assert solver.compute(g) == brute_force_counts(g), g6


@hsettings(max_examples=40, deadline=None)
@given(graphs(max_n=7), graphs(max_n=7))
def test_disjoint_union_is_multiplicative(g, h):
    union = independence_polynomial(disjoint_union(g, h))
    product = poly_mul(independence_polynomial(g).coeffs, independence_polynomial(h).coeffs)
    assert union.coeffs == product


@pytest.mark.parametrize("n", range(3, 21))
def test_cycle_totals_are_lucas_numbers(n):
    p = independence_polynomial(cycle(n))
    assert p.total == LUCAS[n]
    assert cycle_partition_function(n) == LUCAS[n]


@pytest.mark.parametrize("lam", [Fraction(1, 3), Fraction(2), Fraction(7, 5)])
def test_cycle_polynomial_matches_transfer_matrix(lam):
    for n in range(3, 16):
        assert evaluate(independence_polynomial(cycle(n)), lam).p == cycle_partition_function(n, lam)


@pytest.mark.parametrize("n, lam", [(4, 1.0), (5, 1.0), (9, 0.3), (12, 3.5)])
def test_cycle_occupancy_matches_exact(n, lam):
    exact = float(evaluate(independence_polynomial(cycle(n)), Fraction(lam)).occupancy)
    assert cycle_occupancy(n, lam) == pytest.approx(exact, rel=1e-12)


def test_transfer_rejects_short_cycles():
    with pytest.raises(InvalidParameterError):
        cycle_partition_function(2)
    with pytest.raises(InvalidParameterError):
        cycle_occupancy(5, 0.0)


def test_size_cap_raises():
    with pytest.raises(GraphSizeError) as info:
        independence_polynomial(cycle(12), max_vertices=10)
    assert info.value.details == {"n": 12, "cap": 10}
    with pytest.raises(GraphSizeError):
        brute_force_counts(cycle(12), max_vertices=10)


def test_tiny_memo_still_correct():
    solver = IndependencePolynomialSolver({"memo_max_entries": 4})
    g = disjoint_union(petersen(), cycle(7))
    assert solver.compute(g) == brute_force_counts(g)
    assert solver.last_evictions > 0
    assert solver.last_memo_size <= 4


def test_moderate_graph_within_cap():
    # 40 顶点的环：精确求解在上限内完成
    p = independence_polynomial(cycle(40))
    assert p.total == cycle_partition_function(40)
