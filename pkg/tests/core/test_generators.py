import numpy as np
import pytest
from fracvuln.core.generators import *
from fracvuln.core.graph import all_pairs_distances
from fracvuln.core.model import FitError, ParameterError
from tests.util import *


def test_er_edge_count():
    g = generate_er(1500, 6, seed=42)
    assert g.n == 1500
    assert g.edge_count == 4500


def test_er_full_degree_is_complete():
    g = generate_er(4, 3, seed=1)
    assert g.edge_count == 6


def test_er_keeps_isolated_vertices():
    g = generate_er(50, 0.2, seed=3)
    assert g.n == 50
    assert g.edge_count == 5


def test_er_is_deterministic():
    assert generate_er(200, 4, seed=9).edges == generate_er(200, 4, seed=9).edges
    assert generate_er(200, 4, seed=9).edges != generate_er(200, 4, seed=10).edges


@pytest.mark.parametrize("n, k", [(1, 0.5), (10, 0), (10, -2), (10, 10)])
def test_er_rejects_parameters(n, k):
    with pytest.raises(ParameterError):
        generate_er(n, k, seed=1)


@pytest.mark.parametrize("m", [1, 2, 3])
def test_ba_edge_count_and_min_degree(m):
    n = 300
    g = generate_ba(n, m, seed=5)
    assert g.edge_count == m * (n - m - 1) + m * (m + 1) // 2
    assert g.degrees.min() >= m
    assert g.degrees.sum() == 2 * g.edge_count


def test_ba_large_edge_count():
    assert generate_ba(1500, 2, seed=42).edge_count == 2997


def test_ba_with_one_link_is_a_tree():
    g = generate_ba(100, 1, seed=2)
    assert g.edge_count == 99
    assert all_pairs_distances(g).component_count == 1


def test_ba_has_hubs():
    g = generate_ba(600, 2, seed=4)
    assert g.degrees.max() > 3 * 2


def test_ba_is_deterministic():
    assert generate_ba(300, 2, seed=1).edges == generate_ba(300, 2, seed=1).edges


@pytest.mark.parametrize("n, m", [(3, 3), (10, 0), (10, -1)])
def test_ba_rejects_parameters(n, m):
    with pytest.raises(ParameterError):
        generate_ba(n, m, seed=1)


def test_ba_degree_tail_exponent():
    g = generate_ba(1500, 2, seed=42)
    assert fit_degree_exponent(g, k_min=2) == pytest.approx(3.0, abs=0.5)


def test_degree_exponent_needs_two_degrees():
    with pytest.raises(FitError):
        fit_degree_exponent(cycle_graph(10))
    with pytest.raises(ParameterError):
        fit_degree_exponent(star_graph(5), k_min=0)


def test_mixed_ba_mean_degree():
    g = generate_ba_mixed(1500, seed=42)
    assert 2 * g.edge_count / g.n == pytest.approx(4.8, abs=0.3)
    assert g.degrees.min() >= 2


def test_mixed_ba_rejects_probabilities():
    with pytest.raises(ParameterError):
        generate_ba_mixed(100, seed=1, m_values=(2, 3), m_probs=(0.5, 0.4))
    with pytest.raises(ParameterError):
        generate_ba_mixed(100, seed=1, m_values=(2,), m_probs=(0.5, 0.5))


def test_generate_dispatch():
    assert generate(GeneratorSpec(GeneratorKind.ER, 100, 1, mean_degree=4)).edge_count == 200
    assert generate(GeneratorSpec(GeneratorKind.BA, 100, 1, mean_degree=4)).edge_count == 2 * 97 + 3
    assert generate(GeneratorSpec(GeneratorKind.BA_MIXED, 100, 1)).n == 100
    with pytest.raises(ParameterError):
        generate(GeneratorSpec(GeneratorKind.BA, 100, 1, mean_degree=4.8))
    with pytest.raises(ParameterError):
        generate(GeneratorSpec(GeneratorKind.ER, 100, 1))
