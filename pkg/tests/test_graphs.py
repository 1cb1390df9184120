import itertools
import random
from math import comb

import networkx as nx
import pytest

from feasreg.errors import CapabilityError, DomainError
from feasreg.graphs import (
    Graph,
    automorphism_count,
    canonical_bits,
    canonical_form,
    clique_minus_edge,
    complete_bipartite,
    complete_graph,
    complete_multipartite,
    count_complete_bipartite,
    count_induced,
    cycle_graph,
    degree_stats,
    disjoint_union,
    edge_density,
    empty_graph,
    four_vertex_profile,
    induced_density,
    is_isomorphic,
    path_graph,
    star_graph,
    three_vertex_profile,
)
from feasreg.graphs import _count_by_enumeration, _encode_colex, _FOUR_CLASSES

from conftest import random_graph


# ----------------------------------------------------------------------
# densities
# ----------------------------------------------------------------------

def test_edge_density_examples():
    assert edge_density(complete_graph(5)) == 1.0
    assert edge_density(empty_graph(5)) == 0.0
    assert edge_density(complete_bipartite(3, 3)) == 9 / 15
    with pytest.raises(DomainError):
        edge_density(empty_graph(1))


def test_edge_density_is_k2_density():
    rng = random.Random(0)
    for _ in range(10):
        g = random_graph(9, 0.4, rng)
        assert edge_density(g) == induced_density(complete_graph(2), g)


def test_induced_density_examples():
    assert induced_density(complete_graph(3), complete_graph(6)) == 1.0
    assert induced_density(cycle_graph(4), complete_bipartite(3, 3)) == 0.6
    # balanced 4-partite host on 8 vertices: oracle count 4*2^3 = 32 triangles
    t48 = complete_multipartite([2, 2, 2, 2])
    assert count_induced(complete_graph(3), t48, "enumerate") == 32
    assert induced_density(complete_graph(3), t48) == 32 / comb(8, 3)
    # same-order host: C(n, n) = 1 normalization
    assert induced_density(cycle_graph(5), cycle_graph(5)) == 1.0


def test_count_examples():
    assert count_induced(complete_graph(2), complete_bipartite(3, 3)) == 9
    assert count_induced(cycle_graph(4), complete_bipartite(3, 3)) == 9
    assert count_induced(clique_minus_edge(4), complete_graph(5)) == 0
    # pattern larger than host counts zero rather than erroring
    assert count_induced(complete_graph(4), complete_graph(3)) == 0
    with pytest.raises(DomainError):
        count_induced(Graph(0, ()), complete_graph(3))


# ----------------------------------------------------------------------
# complement
# ----------------------------------------------------------------------

def test_complement():
    assert complete_graph(5).complement() == empty_graph(5)
    c5 = cycle_graph(5)
    assert is_isomorphic(c5.complement(), c5)
    assert is_isomorphic(
        complete_bipartite(3, 3).complement(),
        disjoint_union(complete_graph(3), complete_graph(3)),
    )
    rng = random.Random(1)
    for _ in range(20):
        g = random_graph(8, 0.5, rng)
        assert g.complement().complement() == g


def test_complement_count_identity(hosts_to_7):
    """N(F, G) = N(complement F, complement G)."""
    patterns = [g for n in range(2, 5) for g in hosts_to_7[n]]
    for g in hosts_to_7[5]:
        gc = g.complement()
        for f in patterns:
            assert count_induced(f, g) == count_induced(f.complement(), gc)
    rng = random.Random(2)
    pats7 = [g for n in range(2, 6) for g in hosts_to_7[n]]
    for _ in range(5):
        g = random_graph(7, rng.choice([0.3, 0.6]), rng)
        gc = g.complement()
        for f in rng.sample(pats7, 12):
            assert count_induced(f, g) == count_induced(f.complement(), gc)


def test_class_densities_sum_to_one(hosts_to_7):
    rng = random.Random(3)
    hosts = [random_graph(9, 0.5, rng), random_graph(11, 0.25, rng)]
    for k in (2, 3, 4, 5):
        for g in hosts:
            total = sum(
                induced_density(f, g) for f in hosts_to_7[k]
            )
            assert abs(total - 1.0) < 1e-9, (k, total)


# ----------------------------------------------------------------------
# serialization
# ----------------------------------------------------------------------

def test_graph6_known_strings():
    assert complete_graph(3).to_graph6() == "Bw"
    assert complete_graph(4).to_graph6() == "C~"
    assert Graph.from_graph6(">>graph6<<Bw") == complete_graph(3)


def test_graph6_matches_networkx():
    rng = random.Random(4)
    for _ in range(40):
        n = rng.randint(1, 40)
        g = random_graph(n, rng.random(), rng)
        h = nx.Graph()
        h.add_nodes_from(range(n))
        h.add_edges_from(g.edges())
        expected = nx.to_graph6_bytes(h, header=False).decode().strip()
        assert g.to_graph6() == expected
        assert Graph.from_graph6(expected) == g


def test_graph6_large_n_roundtrip():
    g = complete_bipartite(120, 180)
    assert Graph.from_graph6(g.to_graph6()) == g


def test_json_roundtrip():
    g = Graph.from_edges(5, [(0, 1), (1, 2), (3, 4)])
    assert Graph.from_json(g.to_json()) == g
    assert Graph.from_json('{"n": 3, "edges": [[0, 1], [1, 2]]}') == path_graph(3)
    with pytest.raises(DomainError):
        Graph.from_json('{"n": 3}')


def test_from_edges_validation():
    with pytest.raises(DomainError):
        Graph.from_edges(3, [(0, 0)])
    with pytest.raises(DomainError):
        Graph.from_edges(3, [(0, 5)])


# ----------------------------------------------------------------------
# degree stats
# ----------------------------------------------------------------------

def test_degree_stats():
    assert degree_stats(complete_graph(4)) == [(3, 3)] * 4
    assert degree_stats(cycle_graph(5)) == [(2, 0)] * 5
    stats = sorted(degree_stats(complete_bipartite(2, 3)), reverse=True)
    assert stats == [(3, 0), (3, 0), (2, 0), (2, 0), (2, 0)]


# ----------------------------------------------------------------------
# canonical forms and automorphisms
# ----------------------------------------------------------------------

def test_canonical_relabeling_invariance():
    p3 = path_graph(3)
    for perm in itertools.permutations(range(3)):
        assert canonical_bits(p3.relabel(perm)) == canonical_bits(p3)
    rng = random.Random(5)
    g = random_graph(7, 0.45, rng)
    base = canonical_bits(g)
    for _ in range(100):
        perm = list(range(7))
        rng.shuffle(perm)
        assert canonical_bits(g.relabel(perm)) == base


def test_aut_counts():
    assert canonical_form(complete_graph(3)).aut_count == 6
    assert canonical_form(clique_minus_edge(3)).aut_count == 2
    assert canonical_form(cycle_graph(5)).aut_count == 10
    assert canonical_form(complete_bipartite(3, 3)).aut_count == 72
    assert canonical_form(star_graph(3)).aut_count == 6
    petersen = Graph.from_edges(10, [
        (0, 1), (1, 2), (2, 3), (3, 4), (4, 0),
        (0, 5), (1, 6), (2, 7), (3, 8), (4, 9),
        (5, 7), (7, 9), (9, 6), (6, 8), (8, 5),
    ])
    assert canonical_form(petersen).aut_count == 120


def test_aut_count_divides_factorial(hosts_to_7):
    import math

    for g in hosts_to_7[5]:
        a = automorphism_count(g)
        assert math.factorial(5) % a == 0


def test_canonical_cap():
    with pytest.raises(CapabilityError):
        canonical_form(empty_graph(11))


def test_canonical_vs_factorial_bruteforce(hosts_to_7):
    """The refinement-based canonical form separates classes exactly like
    the factorial brute force (equal encodings iff isomorphic), and the
    automorphism count agrees with identity-permutation counting, for
    every class on up to 5 vertices."""
    for n in range(1, 6):
        seen = {}
        for g in hosts_to_7[n]:
            brute_class = frozenset(
                _encode_colex(g.relabel(p))
                for p in itertools.permutations(range(n))
            )
            brute_aut = sum(
                g.relabel(p) == g for p in itertools.permutations(range(n))
            )
            bits = canonical_bits(g)
            assert bits in brute_class  # some relabeling realizes it
            assert bits not in seen, "distinct classes collided"
            seen[bits] = brute_class
            assert automorphism_count(g) == brute_aut
        # classes are mutually disjoint permutation orbits
        orbits = list(seen.values())
        for i, a in enumerate(orbits):
            for b in orbits[i + 1:]:
                assert not (a & b)


def test_iso_class_reconstruction():
    iso = canonical_form(cycle_graph(6))
    assert is_isomorphic(iso.graph(), cycle_graph(6))
    assert Graph.from_graph6(iso.to_graph6()).n == 6


# ----------------------------------------------------------------------
# fast counters vs the enumeration oracle (exhaustive at n <= 7)
# ----------------------------------------------------------------------

def test_three_profile_exhaustive(hosts_to_7):
    pats = sorted(hosts_to_7[3], key=lambda f: f.edge_count())
    for n in (4, 6, 7):
        for g in hosts_to_7[n]:
            prof = three_vertex_profile(g)
            for i, f in enumerate(pats):
                assert prof[i] == _count_by_enumeration(f, g), (g, i)


def test_four_profile_exhaustive(hosts_to_7):
    for n in (4, 5, 7):
        for g in hosts_to_7[n]:
            prof = four_vertex_profile(g)
            for name, ctor in _FOUR_CLASSES.items():
                assert prof[name] == _count_by_enumeration(ctor(), g), (g, name)


def test_bipartite_counter_exhaustive(hosts_to_7):
    pairs = [(1, 2), (1, 3), (2, 2), (2, 3), (3, 3), (1, 5), (2, 4)]
    for g in hosts_to_7[7]:
        for s, t in pairs:
            want = _count_by_enumeration(complete_bipartite(s, t), g)
            assert count_complete_bipartite(s, t, g) == want, (g, s, t)


def test_auto_dispatch_matches_enumeration():
    rng = random.Random(6)
    pats = [
        complete_graph(3), path_graph(3), star_graph(3), cycle_graph(4),
        clique_minus_edge(4), complete_graph(4), empty_graph(4),
        complete_bipartite(2, 3), cycle_graph(5), path_graph(5),
    ]
    for _ in range(8):
        g = random_graph(16, rng.choice([0.25, 0.5, 0.75]), rng)
        for f in pats:
            assert count_induced(f, g) == count_induced(f, g, "enumerate")


def test_k4minus_pair_upper(hosts_to_7):
    """Induced K_4^- count is at most half the number of edge pairs."""
    d = clique_minus_edge(4)
    for n in (4, 5, 6, 7):
        for g in hosts_to_7[n]:
            assert count_induced(d, g) <= comb(g.edge_count(), 2) / 2
