import random
from math import comb

import pytest

from feasreg.errors import DomainError
from feasreg.graphs import (
    clique_minus_edge,
    complete_bipartite,
    complete_graph,
    cycle_graph,
    empty_graph,
    path_graph,
    star_graph,
)
from feasreg.quantum import (
    QuantumGraph,
    is_self_complementary,
    parse_quantum,
    q_complement,
    q_density,
    rand_density,
    serialize_quantum,
)
from feasreg.lab import sample_gnp_density

from conftest import random_graph

GOODMAN = QuantumGraph([(1.0, complete_graph(3)), (1.0, empty_graph(3))])


def test_normal_form_merging():
    q = QuantumGraph([
        (1.0, complete_graph(3)),
        (0.5, cycle_graph(3)),       # isomorphic to K_3: coefficients merge
        (2.0, empty_graph(3)),
    ])
    assert len(q.terms) == 2
    coefs = {g.edge_count(): c for c, g, _ in q.terms}
    assert coefs == {0: 2.0, 3: 1.5}
    # exact cancellation drops the constituent
    q = QuantumGraph([(1.0, complete_graph(3)), (-1.0, cycle_graph(3))])
    assert len(q.terms) == 0


def test_q_density_linearity():
    rng = random.Random(0)
    g = random_graph(12, 0.5, rng)
    v = q_density(GOODMAN, g)
    from feasreg.graphs import induced_density

    want = induced_density(complete_graph(3), g) + induced_density(
        empty_graph(3), g
    )
    assert abs(v - want) < 1e-12
    assert abs(
        q_density(QuantumGraph.single(complete_graph(2)), g)
        - induced_density(complete_graph(2), g)
    ) < 1e-15


def test_q_density_on_bipartite_host():
    g = complete_bipartite(6, 6)
    want = 2 * comb(6, 3) / comb(12, 3)  # empty triples only
    assert abs(q_density(GOODMAN, g) - want) < 1e-12


def test_q_density_domain_error():
    with pytest.raises(DomainError):
        q_density(QuantumGraph.single(complete_graph(4)), complete_graph(3))


def test_complement_and_self_complementarity():
    assert is_self_complementary(GOODMAN)
    k3m = QuantumGraph.single(clique_minus_edge(3))
    assert not is_self_complementary(k3m)
    comp = q_complement(k3m)
    (coef, g, _), = comp.terms
    assert coef == 1.0 and g.edge_count() == 1  # one-edge 3-vertex pattern
    assert is_self_complementary(QuantumGraph([(2.0, cycle_graph(5))]))


def test_density_complement_identity(hosts_to_7):
    rng = random.Random(1)
    qs = [GOODMAN, QuantumGraph.single(clique_minus_edge(4)),
          QuantumGraph([(1.5, star_graph(2)), (-0.5, complete_graph(3))])]
    for _ in range(6):
        g = random_graph(7, rng.choice([0.3, 0.5, 0.8]), rng)
        for q in qs:
            assert abs(
                q_density(q, g) - q_density(q_complement(q), g.complement())
            ) < 1e-12


def test_rand_density_closed_forms():
    assert abs(rand_density(QuantumGraph.single(complete_graph(2)), 0.37) - 0.37) < 1e-15
    assert abs(rand_density(QuantumGraph.single(complete_graph(3)), 0.5) - 0.125) < 1e-15
    assert abs(rand_density(QuantumGraph.single(clique_minus_edge(3)), 0.5) - 3 / 8) < 1e-15
    with pytest.raises(DomainError):
        rand_density(GOODMAN, 1.2)


def test_rand_density_three_class_partition(hosts_to_7):
    q_all = QuantumGraph([(1.0, f) for f in hosts_to_7[3]])
    for x in (0.0, 0.2, 0.5, 0.77, 1.0):
        assert abs(rand_density(q_all, x) - 1.0) < 1e-12


def test_rand_sandwich_small_scale():
    """Expected random-graph density sits between sampled extremes."""
    qs = {
        "k3": QuantumGraph.single(complete_graph(3)),
        "k3minus": QuantumGraph.single(clique_minus_edge(3)),
        "goodman": GOODMAN,
    }
    for name, q in qs.items():
        for x in (0.3, 0.7):
            mean, sd, vals = sample_gnp_density(q, 80, x, 60, seed=11)
            r = rand_density(q, x)
            assert vals.min() - 0.02 <= r <= vals.max() + 0.02, (name, x)


def test_parse_serialize_roundtrip():
    s = serialize_quantum(GOODMAN)
    assert parse_quantum(s) == GOODMAN
    q = parse_quantum("1.0*g6:Bw + -0.5*g6:B?")
    assert parse_quantum(serialize_quantum(q)) == q
    assert parse_quantum("g6:Bw") == QuantumGraph.single(complete_graph(3))
    with pytest.raises(DomainError):
        parse_quantum("1.0*Bw")
    with pytest.raises(DomainError):
        parse_quantum("oops*g6:Bw")
