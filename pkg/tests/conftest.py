import random

import pytest

from feasreg.graphs import Graph
from feasreg.lab import enumerate_hosts


@pytest.fixture(scope="session")
def hosts_to_7():
    """All isomorphism-class representatives for n = 1..7, keyed by n."""
    return {n: list(enumerate_hosts(n)) for n in range(1, 8)}


def random_graph(n: int, p: float, rng: random.Random) -> Graph:
    edges = [
        (u, v)
        for u in range(n)
        for v in range(u + 1, n)
        if rng.random() < p
    ]
    return Graph.from_edges(n, edges)
