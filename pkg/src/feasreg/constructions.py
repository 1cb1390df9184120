"""Parameterized extremal graph families hitting prescribed edge densities.

Each constructor returns a finite graph whose edge density tends to the
target x as n grows:

* h_star: the complete multipartite minimizers of clique densities
  (k-1 equal parts plus a remainder part, k determined by x);
* bipartite_b: complete bipartite graphs maximizing star densities;
* clique_isolated / coclique_joined: a clique plus isolated vertices and
  its complement construction, witnessing zero induced density for any
  pattern that is neither complete nor empty;
* turan: balanced complete multipartite graphs at the critical densities.
"""

from __future__ import annotations

from math import ceil, floor, sqrt

from .curves import interval_k
from .errors import ConstructionError, DomainError
from .graphs import Graph, complete_graph, complete_multipartite, empty_graph


def h_star(n: int, x: float) -> Graph:
    """Complete k-partite graph with k-1 parts of size floor(alpha_k n) and
    one remainder part, where alpha_k = (1 + sqrt(1 - kx/(k-1)))/k and k is
    the critical interval index of x."""
    if n < 1:
        raise DomainError(f"need n >= 1, got {n}")
    if not 0.0 <= x <= 1.0:
        raise DomainError(f"x must lie in [0,1], got {x}")
    if x == 0.0:
        return empty_graph(n)
    if x == 1.0:
        return complete_graph(n)
    k = interval_k(x)
    alpha = (1 + sqrt(max(0.0, 1 - k * x / (k - 1)))) / k
    size = floor(alpha * n)
    remainder = n - (k - 1) * size
    if remainder < 0:
        raise ConstructionError(
            f"h_star infeasible at n={n}, k={k}: "
            f"{k - 1} parts of size {size} exceed n"
        )
    sizes = [size] * (k - 1) + [remainder]
    sizes = [s for s in sizes if s > 0]
    if not sizes:
        raise ConstructionError(f"h_star degenerate at n={n}, x={x}")
    return complete_multipartite(sizes)


def bipartite_b(n: int, x: float) -> Graph:
    """Complete bipartite graph with side fractions alpha, 1-alpha solving
    alpha(1-alpha) = x/2."""
    if n < 1:
        raise DomainError(f"need n >= 1, got {n}")
    if not 0.0 <= x <= 0.5:
        raise DomainError(f"x must lie in [0,1/2], got {x}")
    alpha = (1 - sqrt(max(0.0, 1 - 2 * x))) / 2
    side = floor(alpha * n)
    if side == 0:
        return empty_graph(n)
    return complete_multipartite([side, n - side])


def clique_isolated(n: int, x: float) -> Graph:
    """A clique on floor(sqrt(x) n) vertices plus isolated vertices."""
    if n < 1:
        raise DomainError(f"need n >= 1, got {n}")
    if not 0.0 <= x <= 1.0:
        raise DomainError(f"x must lie in [0,1], got {x}")
    size = floor(sqrt(x) * n)
    g = complete_graph(size)
    masks = tuple(g.adj) + (0,) * (n - size)
    return Graph(n, masks)


def coclique_joined(n: int, x: float) -> Graph:
    """Complement of clique_isolated at density 1-x: an independent set
    fully joined to a clique."""
    if not 0.0 <= x <= 1.0:
        raise DomainError(f"x must lie in [0,1], got {x}")
    return clique_isolated(n, 1 - x).complement()


def turan(n: int, r: int) -> Graph:
    """Balanced complete r-partite graph on n vertices."""
    if not 1 <= r <= n:
        raise DomainError(f"need 1 <= r <= n, got r={r}, n={n}")
    base, extra = divmod(n, r)
    sizes = [base + 1] * extra + [base] * (r - extra)
    return complete_multipartite(sizes)


def interpolation_path(g1: Graph, g2: Graph) -> list[Graph]:
    """Sequence from g1 to g2 where consecutive graphs differ in one edge.

    Edge counts stay within [min, max] of the endpoints, except that equal
    endpoint counts force a transient dip of a single edge (delete before
    add).  Edge differences are processed in lexicographic order.
    """
    if g1.n != g2.n:
        raise DomainError(
            f"vertex counts differ: {g1.n} vs {g2.n}"
        )
    to_add = sorted(set(g2.edges()) - set(g1.edges()))
    to_del = sorted(set(g1.edges()) - set(g2.edges()))
    if g1.edge_count() < g2.edge_count():
        first, second = to_add, to_del
    else:
        # delete first; for equal counts this dips one edge below min
        first, second = to_del, to_add
    path = [g1]
    current = g1
    npairs = min(len(first), len(second))
    for i in range(npairs):
        current = _toggle(current, first[i])
        path.append(current)
        current = _toggle(current, second[i])
        path.append(current)
    for e in first[npairs:]:
        current = _toggle(current, e)
        path.append(current)
    for e in second[npairs:]:
        current = _toggle(current, e)
        path.append(current)
    return path


def _toggle(g: Graph, edge: tuple[int, int]) -> Graph:
    u, v = edge
    masks = list(g.adj)
    masks[u] ^= 1 << v
    masks[v] ^= 1 << u
    return Graph(g.n, tuple(masks))
