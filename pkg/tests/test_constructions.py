import pytest

from feasreg.constructions import (
    bipartite_b,
    clique_isolated,
    coclique_joined,
    h_star,
    interpolation_path,
    turan,
)
from feasreg.curves import g_r, s_t_curve
from feasreg.errors import DomainError
from feasreg.graphs import (
    clique_minus_edge,
    complete_bipartite,
    complete_graph,
    count_induced,
    cycle_graph,
    edge_density,
    empty_graph,
    induced_density,
    is_isomorphic,
    path_graph,
    star_graph,
)
from feasreg.multipartite import multipartite_parts
from feasreg.quantum import QuantumGraph, q_density


def test_h_star_endpoints_and_turan_case():
    assert h_star(10, 0.0) == empty_graph(10)
    assert h_star(10, 1.0) == complete_graph(10)
    # at x = (k-1)/k the radical vanishes and the graph is balanced k-partite
    assert is_isomorphic(h_star(6, 0.5), complete_bipartite(3, 3))
    assert is_isomorphic(h_star(12, 0.75), turan(12, 4))


def test_h_star_part_structure():
    for n, x in ((200, 0.6), (143, 0.81), (97, 0.4)):
        parts = multipartite_parts(h_star(n, x))
        assert parts is not None
        sizes = sorted(len(p) for p in parts)
        assert sum(sizes) == n
        # all but (at most) one remainder part share one size
        assert len({s for s in sizes[:-1]}) <= 2  # floor size + maybe remainder
        counts = {}
        for s in sizes:
            counts[s] = counts.get(s, 0) + 1
        # the dominating size appears k-1 times or k times
        assert max(counts.values()) >= len(sizes) - 1


def test_h_star_density_convergence():
    assert abs(edge_density(h_star(600, 0.6)) - 0.6) < 0.01


def test_h_star_triangle_density_matches_clique_curve():
    # construction limit against the closed-form curve
    assert abs(induced_density(complete_graph(3), h_star(120, 0.75)) - 3 / 8) < 0.02
    for x in (0.55, 0.7, 0.8):
        got = induced_density(complete_graph(3), h_star(300, x))
        assert abs(got - g_r(3, x)) <= 5 / 300, x


def test_density_grid_all_constructions():
    n = 400
    grid = [i * 0.05 for i in range(21)]
    for x in grid:
        assert abs(edge_density(h_star(n, x)) - x) <= 4 / n, ("h_star", x)
        assert abs(edge_density(clique_isolated(n, x)) - x) <= 4 / n
        assert abs(edge_density(coclique_joined(n, x)) - x) <= 4 / n
        if x <= 0.5:
            assert abs(edge_density(bipartite_b(n, x)) - x) <= 4 / n
    for r in (2, 3, 5, 8):
        assert abs(edge_density(turan(n, r)) - (1 - 1 / r)) <= 4 / n


def test_bipartite_b():
    assert is_isomorphic(bipartite_b(10, 0.5), complete_bipartite(5, 5))
    assert is_isomorphic(bipartite_b(11, 0.5), complete_bipartite(5, 6))
    assert bipartite_b(10, 0.0) == empty_graph(10)
    assert abs(
        induced_density(star_graph(2), bipartite_b(300, 0.4))
        - s_t_curve(2, 0.4)
    ) < 0.01
    with pytest.raises(DomainError):
        bipartite_b(10, 0.6)


def test_clique_isolated_kills_mixed_patterns():
    g = clique_isolated(500, 0.3)
    assert abs(edge_density(g) - 0.3) < 0.01
    assert count_induced(path_graph(3), g) == 0
    assert count_induced(star_graph(2), g) == 0


def test_coclique_joined():
    assert coclique_joined(7, 1.0) == complete_graph(7)
    g = coclique_joined(300, 0.6)
    assert abs(edge_density(g) - 0.6) < 0.01
    # pattern with an isolated vertex never appears induced
    iso_plus_edge = empty_graph(3).complement().complement()  # empty(3)
    from feasreg.graphs import Graph

    one_edge_iso = Graph.from_edges(3, [(0, 1)])
    assert count_induced(one_edge_iso, g) == 0


def test_turan():
    assert is_isomorphic(turan(6, 2), complete_bipartite(3, 3))
    for n, r in ((12, 4), (15, 3), (100, 5)):
        want = (1 - 1 / r) * n / (n - 1)
        assert abs(edge_density(turan(n, r)) - want) < 1e-12
    assert abs(
        induced_density(clique_minus_edge(4), turan(100, 5)) - 72 / 125
    ) < 0.02
    with pytest.raises(DomainError):
        turan(3, 4)


def test_interpolation_path_monotone():
    p = interpolation_path(empty_graph(5), complete_graph(5))
    assert len(p) == 11
    assert [g.edge_count() for g in p] == list(range(11))


def test_interpolation_path_singleton():
    c5 = cycle_graph(5)
    assert interpolation_path(c5, c5) == [c5]


def test_interpolation_path_equal_densities():
    c5 = cycle_graph(5)
    p = interpolation_path(c5, c5.complement())
    assert p[0] == c5 and p[-1] == c5.complement()
    for a, b in zip(p, p[1:]):
        flips = sum((x ^ y).bit_count() for x, y in zip(a.adj, b.adj))
        assert flips == 2  # exactly one edge toggled
    for g in p:
        assert abs(edge_density(g) - 0.5) <= 1 / 10  # one edge of slack


def test_interpolation_density_containment():
    g1 = turan(8, 2)
    g2 = complete_graph(8)
    lo, hi = edge_density(g1), edge_density(g2)
    for g in interpolation_path(g1, g2):
        assert lo - 1e-12 <= edge_density(g) <= hi + 1e-12
    for g in interpolation_path(g2, g1):
        assert lo - 1e-12 <= edge_density(g) <= hi + 1e-12


def test_interpolation_q_density_steps():
    import random

    from conftest import random_graph

    rng = random.Random(9)
    n = 20
    g1, g2 = random_graph(n, 0.3, rng), random_graph(n, 0.7, rng)
    q = QuantumGraph([(1.0, complete_graph(3)), (-2.0, clique_minus_edge(4))])
    vmax = 4
    path = interpolation_path(g1, g2)
    prev = q_density(q, path[0])
    for g in path[1:]:
        cur = q_density(q, g)
        # one edge flip moves each constituent density by O(v(F)^2 / n)
        assert abs(cur - prev) <= 3 * vmax**2 / n
        prev = cur


def test_interpolation_errors():
    with pytest.raises(DomainError):
        interpolation_path(empty_graph(4), empty_graph(5))
