"""Exhaustive and randomized ground truth: isomorph-free host enumeration,
region point clouds, finite-n inequality verifiers, and seeded binomial
random graph sampling.

Enumeration augments each canonical representative on n vertices by a new
vertex attached to every subset, deduplicating by canonical encoding; the
resulting class counts are checked against the known census (4 classes at
n=3, 11 at n=4, 34, 156, 1044, 12346 at n=8) as a self-test.
"""

from __future__ import annotations

import os
from dataclasses import dataclass
from functools import lru_cache
from math import comb

import numpy as np

from .curves import c4_finite_bound
from .errors import CapabilityError, DomainError
from .graphs import (
    Graph,
    canonical_bits,
    complete_bipartite,
    count_complete_bipartite,
    count_induced,
    cycle_graph,
    degree_stats,
    edge_density,
    empty_graph,
    star_graph,
)
from .quantum import QuantumGraph, q_density

ENUM_CAP_DEFAULT = 8
ENUM_CAP_HARD = 9

# class counts by vertex number, used as a generation self-test
KNOWN_CLASS_COUNTS = {
    0: 1, 1: 1, 2: 2, 3: 4, 4: 11, 5: 34, 6: 156, 7: 1044, 8: 12346,
    9: 274668,
}


def _enum_cap() -> int:
    cap = int(os.environ.get("FEASREG_MAX_N", ENUM_CAP_DEFAULT))
    return min(cap, ENUM_CAP_HARD)


@lru_cache(maxsize=None)
def _hosts(n: int) -> tuple[Graph, ...]:
    if n == 0:
        return (Graph(0, ()),)
    smaller = _hosts(n - 1)
    seen: dict[int, Graph] = {}
    for g in smaller:
        base = list(g.adj) + [0]
        for sub in range(1 << (n - 1)):
            masks = list(base)
            masks[n - 1] = sub
            rest = sub
            while rest:
                u = (rest & -rest).bit_length() - 1
                masks[u] |= 1 << (n - 1)
                rest &= rest - 1
            cand = Graph(n, tuple(masks))
            key = canonical_bits(cand)
            if key not in seen:
                seen[key] = cand
    out = tuple(seen[k] for k in sorted(seen))
    if n in KNOWN_CLASS_COUNTS and len(out) != KNOWN_CLASS_COUNTS[n]:
        raise AssertionError(
            f"generation self-test failed at n={n}: "
            f"{len(out)} classes, expected {KNOWN_CLASS_COUNTS[n]}"
        )
    return out


def enumerate_hosts(n: int, cap: int | None = None):
    """One representative per isomorphism class of n-vertex graphs."""
    if cap is None:
        cap = _enum_cap()
    cap = min(cap, ENUM_CAP_HARD)
    if n > cap:
        raise CapabilityError(
            f"host enumeration capped at n<={cap} (hard limit "
            f"{ENUM_CAP_HARD}), got {n}"
        )
    yield from _hosts(n)


# ----------------------------------------------------------------------
# region point clouds
# ----------------------------------------------------------------------

@dataclass(frozen=True)
class RegionPointCloud:
    q: QuantumGraph
    n: int
    points: tuple[tuple[float, float, str], ...]  # (edge density, q density, graph6)


def region_cloud(q: QuantumGraph, n: int, cap: int | None = None) -> RegionPointCloud:
    """(edge density, q-density, witness) for every n-vertex class."""
    if q.max_order() > n:
        raise DomainError(
            f"constituents on {q.max_order()} vertices exceed host order {n}"
        )
    if n < 2:
        raise DomainError(f"edge density needs n >= 2, got {n}")
    pts = [
        (edge_density(g), q_density(q, g), g.to_graph6())
        for g in enumerate_hosts(n, cap)
    ]
    return RegionPointCloud(q=q, n=n, points=tuple(pts))


def empirical_boundary(cloud: RegionPointCloud, bins: int):
    """Per-density-bin max and min q-densities with witnesses.

    Returns (upper, lower): lists of (bin center x, y, witness graph6) for
    the nonempty bins, in increasing x.
    """
    if bins < 1:
        raise DomainError(f"need bins >= 1, got {bins}")
    if not cloud.points:
        raise DomainError("empty cloud")
    width = 1.0 / bins
    upper: dict[int, tuple[float, str]] = {}
    lower: dict[int, tuple[float, str]] = {}
    for x, y, g6 in cloud.points:
        b = min(int(x / width), bins - 1)
        if b not in upper or y > upper[b][0]:
            upper[b] = (y, g6)
        if b not in lower or y < lower[b][0]:
            lower[b] = (y, g6)
    up = [((b + 0.5) * width, y, g6) for b, (y, g6) in sorted(upper.items())]
    lo = [((b + 0.5) * width, y, g6) for b, (y, g6) in sorted(lower.items())]
    return up, lo


# ----------------------------------------------------------------------
# finite-n inequality verifiers
# ----------------------------------------------------------------------

def verify_c4_finite(g: Graph) -> tuple[int, float, bool]:
    """Exact induced 4-cycle count against the finite-n bound."""
    count = count_induced(cycle_graph(4), g) if g.n >= 4 else 0
    bound = c4_finite_bound(g.n, g.edge_count()) if g.n >= 1 else 0.0
    return count, bound, count <= bound


def verify_goodman_vertex(g: Graph) -> tuple[float, float, bool]:
    """Sum of per-vertex neighborhood edge counts against the degree-square
    sum minus x n^3 / 2."""
    n = g.n
    stats = degree_stats(g)
    lhs = float(sum(e for _, e in stats))
    x = 2 * g.edge_count() / n**2 if n else 0.0
    rhs = float(sum(d * d for d, _ in stats)) - x * n**3 / 2
    return lhs, rhs, lhs >= rhs - 1e-9


def verify_corollary_vertex_choice(g: Graph) -> int | None:
    """A vertex v with e(v) >= d(v)^2/2 + (1-4x+3x^2) n^2/4
    - (1-x)^3 n^3 / (4(n-d(v))), or None if none exists."""
    n = g.n
    if n == 0:
        return None
    x = 2 * g.edge_count() / n**2
    for v, (d, e) in enumerate(degree_stats(g)):
        rhs = d * d / 2 + (1 - 4 * x + 3 * x * x) * n * n / 4 \
            - (1 - x) ** 3 * n**3 / (4 * (n - d))
        if e >= rhs - 1e-9:
            return v
    return None


def verify_k4minus_pairbound(g: Graph) -> bool:
    """Induced K_4^- count at most half the number of edge pairs."""
    from .graphs import clique_minus_edge

    count = count_induced(clique_minus_edge(4), g) if g.n >= 4 else 0
    return count <= comb(g.edge_count(), 2) / 2


def verify_kst_decomposition(g: Graph, s: int, t: int) -> bool:
    """Induced K_{s,t} count against the star-times-edges decomposition
    bound (t-s+1)!/(s! t!) N(S_{t-s+1}) e^{s-1}.

    The degenerate star S_1 is a single edge: N(S_1, g) = e(g).
    """
    if not 2 <= s <= t:
        raise DomainError(f"need t >= s >= 2, got ({s},{t})")
    if g.n < s + t:
        return True
    kst = count_complete_bipartite(s, t, g)
    u = t - s + 1
    nstar = g.edge_count() if u == 1 else count_complete_bipartite(1, u, g)
    from math import factorial

    bound = factorial(u) / (factorial(s) * factorial(t)) \
        * nstar * g.edge_count() ** (s - 1)
    return kst <= bound + 1e-9


# ----------------------------------------------------------------------
# seeded binomial random graphs
# ----------------------------------------------------------------------

def gnp_graph(n: int, x: float, rng: np.random.Generator) -> Graph:
    """One binomial random graph draw."""
    upper = rng.random((n, n)) < x
    a = np.triu(upper, 1)
    a = a | a.T
    return Graph.from_numpy(a)


def sample_gnp_density(
    q: QuantumGraph, n: int, x: float, trials: int, seed: int = 0
):
    """Monte-Carlo estimate of the expected q-density of binomial random
    graphs, with a counter-based generator for reproducibility.

    Returns (mean, stdev, values).
    """
    if trials < 1:
        raise DomainError(f"need trials >= 1, got {trials}")
    if not 0.0 <= x <= 1.0:
        raise DomainError(f"x must lie in [0,1], got {x}")
    rng = np.random.Generator(np.random.Philox(key=seed))
    vals = np.empty(trials)
    for i in range(trials):
        vals[i] = q_density(q, gnp_graph(n, x, rng))
    return float(vals.mean()), float(vals.std()), vals
