"""Quantum graphs: formal real linear combinations of pattern graphs.

Densities extend linearly.  Construction merges isomorphic constituents
(summing coefficients, dropping zeros) so equality of quantum graphs is
equality of normal forms.
"""

from __future__ import annotations

import re
from math import comb, factorial

from .errors import DomainError
from .graphs import Graph, canonical_form, count_induced, three_vertex_profile, four_vertex_profile, _four_class_bits, canonical_bits

_MERGE_EPS = 0.0  # coefficients summing to exactly zero are dropped


class QuantumGraph:
    """Normal-form linear combination of pairwise non-isomorphic graphs."""

    __slots__ = ("terms",)

    def __init__(self, terms):
        """terms: iterable of (coefficient, Graph)."""
        merged: dict[tuple[int, int], list] = {}
        for coef, pattern in terms:
            iso = canonical_form(pattern)
            key = (iso.n, iso.bits)
            if key in merged:
                merged[key][0] += coef
            else:
                merged[key] = [float(coef), pattern, iso]
        normal = []
        for key in sorted(merged):
            coef, pattern, iso = merged[key]
            if coef != _MERGE_EPS:
                normal.append((coef, pattern, iso))
        self.terms = tuple(normal)

    @classmethod
    def single(cls, g: Graph) -> "QuantumGraph":
        return cls([(1.0, g)])

    def constituents(self):
        return [(coef, g) for coef, g, _ in self.terms]

    def max_order(self) -> int:
        return max((g.n for _, g, _ in self.terms), default=0)

    def __eq__(self, other):
        if not isinstance(other, QuantumGraph):
            return NotImplemented
        if len(self.terms) != len(other.terms):
            return False
        return all(
            a[0] == b[0] and a[2] == b[2]
            for a, b in zip(self.terms, other.terms)
        )

    def __hash__(self):
        return hash(tuple((c, iso.n, iso.bits) for c, _, iso in self.terms))

    def __repr__(self):
        return f"QuantumGraph({serialize_quantum(self)!r})"


def q_density(q: QuantumGraph, g: Graph) -> float:
    """Linear combination of induced constituent densities in g."""
    for _, f, _ in q.terms:
        if f.n > g.n:
            raise DomainError(
                f"constituent on {f.n} vertices larger than host on {g.n}"
            )
    total = 0.0
    prof3 = prof4 = None
    for coef, f, _ in q.terms:
        if f.n == 3 and g.n >= 14:
            if prof3 is None:
                prof3 = three_vertex_profile(g)
            cnt = prof3[f.edge_count()]
        elif f.n == 4 and g.n >= 14:
            if prof4 is None:
                prof4 = four_vertex_profile(g)
            cnt = prof4[_four_class_bits()[canonical_bits(f)]]
        else:
            cnt = count_induced(f, g)
        total += coef * cnt / comb(g.n, f.n)
    return total


def q_complement(q: QuantumGraph) -> QuantumGraph:
    return QuantumGraph([(c, g.complement()) for c, g, _ in q.terms])


def is_self_complementary(q: QuantumGraph) -> bool:
    return q == q_complement(q)


def rand_density(q: QuantumGraph, x: float) -> float:
    """Expected induced density of q in a large binomial random graph
    with edge probability x."""
    if not 0.0 <= x <= 1.0:
        raise DomainError(f"x must lie in [0,1], got {x}")
    total = 0.0
    for coef, g, iso in q.terms:
        e = g.edge_count()
        ebar = comb(g.n, 2) - e
        total += coef * factorial(g.n) / iso.aut_count * x**e * (1 - x) ** ebar
    return total


# ----------------------------------------------------------------------
# text syntax: "1.0*g6:Bw + -0.5*g6:B?"
# ----------------------------------------------------------------------

def parse_quantum(spec: str) -> QuantumGraph:
    # term separator is '+' not part of an exponent like 1e+22
    chunks = re.split(r"(?<![eE])\+", spec)
    terms = []
    for chunk in chunks:
        chunk = chunk.strip()
        if not chunk:
            raise DomainError(f"empty term in quantum spec {spec!r}")
        if chunk.startswith("g6:"):
            coef, g6 = "1", chunk[3:]
        else:
            idx = chunk.find("*g6:")
            if idx < 0:
                raise DomainError(f"cannot parse quantum term {chunk!r}")
            coef, g6 = chunk[:idx].strip(), chunk[idx + 4:].strip()
        try:
            c = float(coef)
        except ValueError as exc:
            raise DomainError(f"bad coefficient {coef!r}") from exc
        terms.append((c, Graph.from_graph6(g6)))
    return QuantumGraph(terms)


def serialize_quantum(q: QuantumGraph) -> str:
    return " + ".join(
        f"{coef!r}*g6:{canonical_form(g).to_graph6()}" for coef, g, _ in q.terms
    )
