"""Limit densities of quantum graphs in complete multipartite limit objects,
and constrained optimization over part-fraction profiles.

A growing sequence of complete multipartite graphs whose part fractions
converge to a point alpha of the standard simplex has well-defined limit
densities for every complete multipartite pattern; limit_density evaluates
that polynomial exactly.  optimize_profile searches the slice of the
simplex with prescribed limit edge density 1 - sum(alpha^2) for extremal
pattern densities, via seeded multistart projected gradient plus an SLSQP
polish; iterates are re-projected so reported profiles are exactly
feasible.
"""

from __future__ import annotations

import itertools
from bisect import bisect_right
from dataclasses import dataclass
from functools import lru_cache
from math import comb, factorial

import numpy as np
from scipy.optimize import minimize

from .errors import CapabilityError, DomainError
from .graphs import Graph, complete_multipartite
from .quantum import QuantumGraph

PART_EPS = 1e-9  # parts below this are pruned from returned profiles


@dataclass(frozen=True)
class PartProfile:
    """Point of the standard simplex with strictly positive entries."""

    fractions: tuple[float, ...]

    def __post_init__(self):
        fr = self.fractions
        if not fr:
            raise DomainError("profile needs at least one part")
        if any(f <= 0 for f in fr):
            raise DomainError(f"part fractions must be positive: {fr}")
        if abs(sum(fr) - 1.0) > 1e-12:
            raise DomainError(f"part fractions must sum to 1: sum={sum(fr)}")

    def __len__(self):
        return len(self.fractions)

    def edge_density(self) -> float:
        return 1.0 - sum(f * f for f in self.fractions)

    def as_array(self) -> np.ndarray:
        return np.array(self.fractions, dtype=float)


@dataclass(frozen=True)
class MultipartitePattern:
    """Part-size multiset of a complete multipartite pattern graph."""

    part_sizes: tuple[int, ...]

    def __post_init__(self):
        if not self.part_sizes or any(s <= 0 for s in self.part_sizes):
            raise DomainError(f"invalid part sizes {self.part_sizes}")
        if tuple(sorted(self.part_sizes, reverse=True)) != self.part_sizes:
            raise DomainError("part sizes must be sorted descending")

    @classmethod
    def of(cls, sizes) -> "MultipartitePattern":
        return cls(tuple(sorted((int(s) for s in sizes), reverse=True)))

    @classmethod
    def from_graph(cls, g: Graph) -> "MultipartitePattern":
        parts = multipartite_parts(g)
        if parts is None:
            raise CapabilityError(
                f"{g!r} is not a complete multipartite graph"
            )
        return cls.of(len(p) for p in parts)

    def order(self) -> int:
        return sum(self.part_sizes)

    def graph(self) -> Graph:
        return complete_multipartite(self.part_sizes)


def multipartite_parts(g: Graph) -> list[list[int]] | None:
    """Independent parts of g if it is complete multipartite, else None.

    The parts are the connected components of the complement; the graph is
    complete multipartite iff all cross-part edges are present and no
    within-part edge exists.
    """
    n = g.n
    comp = g.complement()
    seen = 0
    parts = []
    for v in range(n):
        if (seen >> v) & 1:
            continue
        mask = 0
        stack = [v]
        while stack:
            u = stack.pop()
            if (mask >> u) & 1:
                continue
            mask |= 1 << u
            a = comp.adj[u] & ~mask
            while a:
                w = (a & -a).bit_length() - 1
                stack.append(w)
                a &= a - 1
        seen |= mask
        verts = []
        b = mask
        while b:
            verts.append((b & -b).bit_length() - 1)
            b &= b - 1
        parts.append(verts)
    for part in parts:
        for i, u in enumerate(part):
            for v in part[i + 1:]:
                if g.has_edge(u, v):
                    return None
    return parts


def profile_blowup(profile: PartProfile, n: int) -> Graph:
    """Complete multipartite graph on n vertices with part sizes as close
    to n*alpha as largest-remainder rounding allows."""
    fr = profile.as_array()
    raw = fr * n
    sizes = np.floor(raw).astype(int)
    short = n - int(sizes.sum())
    order = np.argsort(-(raw - sizes), kind="stable")
    for i in range(short):
        sizes[order[i]] += 1
    if (sizes <= 0).any():
        raise DomainError(
            f"blow-up at n={n} drops a part: fractions {profile.fractions}"
        )
    return complete_multipartite([int(s) for s in sizes])


# ----------------------------------------------------------------------
# exact limit densities
# ----------------------------------------------------------------------

@lru_cache(maxsize=4096)
def _monomials(sizes: tuple[int, ...], m: int):
    """Monomial expansion of the limit density polynomial.

    Returns (coef, idx, pw) arrays: density = coef * sum over rows of
    prod(alpha[idx]^pw).  One monomial per way of assigning the pattern's
    size groups to disjoint unordered sets of host parts.
    """
    order = sum(sizes)
    base = factorial(order)
    for s in sizes:
        base //= factorial(s)
    groups = []
    for size in sorted(set(sizes), reverse=True):
        groups.append((size, sizes.count(size)))
    rows = []

    def rec(gi: int, used: frozenset, current: tuple):
        if gi == len(groups):
            rows.append(current)
            return
        size, mult = groups[gi]
        for combo in itertools.combinations(
            [i for i in range(m) if i not in used], mult
        ):
            rec(gi + 1, used | set(combo),
                current + tuple((i, size) for i in combo))

    rec(0, frozenset(), ())
    if not rows:
        return base, np.zeros((0, len(sizes)), int), np.zeros((0, len(sizes)), int)
    idx = np.array([[i for i, _ in row] for row in rows], dtype=np.intp)
    pw = np.array([[p for _, p in row] for row in rows], dtype=float)
    return base, idx, pw


def limit_density(pattern, profile: PartProfile) -> float:
    """Limit induced density of a complete multipartite pattern in the
    complete multipartite limit object with the given part fractions."""
    if isinstance(pattern, Graph):
        pattern = MultipartitePattern.from_graph(pattern)
    alpha = profile.as_array()
    return _poly_value(pattern.part_sizes, alpha)


def _poly_value(sizes: tuple[int, ...], alpha: np.ndarray) -> float:
    coef, idx, pw = _monomials(sizes, len(alpha))
    if idx.shape[0] == 0:
        return 0.0
    return coef * float(np.prod(alpha[idx] ** pw, axis=1).sum())


def _poly_grad(sizes: tuple[int, ...], alpha: np.ndarray) -> np.ndarray:
    coef, idx, pw = _monomials(sizes, len(alpha))
    grad = np.zeros_like(alpha)
    if idx.shape[0] == 0:
        return grad
    vals = alpha[idx] ** pw
    for slot in range(idx.shape[1]):
        others = np.prod(np.delete(vals, slot, axis=1), axis=1)
        dterm = pw[:, slot] * alpha[idx[:, slot]] ** (pw[:, slot] - 1)
        np.add.at(grad, idx[:, slot], coef * dterm * others)
    return grad


def q_limit_density(q: QuantumGraph, profile: PartProfile) -> float:
    """Linear extension of limit_density to quantum graphs with complete
    multipartite constituents."""
    total = 0.0
    for coef, g, _ in q.terms:
        total += coef * limit_density(g, profile)
    return total


def _q_patterns(q: QuantumGraph) -> list[tuple[float, tuple[int, ...]]]:
    out = []
    for coef, g, _ in q.terms:
        out.append((coef, MultipartitePattern.from_graph(g).part_sizes))
    return out


# ----------------------------------------------------------------------
# constrained optimization over the density slice of the simplex
# ----------------------------------------------------------------------

def project_to_slice(alpha: np.ndarray, x: float) -> np.ndarray:
    """Project a nonnegative vector onto {a in simplex: 1 - sum a^2 = x}.

    Normalizes to the simplex, then rescales the deviation from the
    balanced point along the constraint gradient; coordinates pushed
    negative are clamped to zero and the rescaling repeats on the support.
    """
    a = np.maximum(np.asarray(alpha, dtype=float), 0.0)
    if a.sum() <= 0:
        a = np.ones_like(a)
    target = 1.0 - x
    support = np.ones(len(a), dtype=bool)
    for _ in range(len(a) + 2):
        k = int(support.sum())
        if k == 0 or target < 1.0 / k - 1e-15:
            raise DomainError(
                f"density {x} infeasible with {k} positive parts"
            )
        sub = a[support]
        sub = sub / sub.sum()
        center = 1.0 / k
        dev = sub - center
        denom = float(dev @ dev)
        if denom < 1e-30:
            if abs(target - center) < 1e-12:
                out = np.zeros_like(a)
                out[support] = center
                return out
            # balanced start cannot be rescaled: nudge deterministically
            sub = sub + np.linspace(-1e-3, 1e-3, k)
            sub = np.maximum(sub, 1e-6)
            sub /= sub.sum()
            dev = sub - center
            denom = float(dev @ dev)
        s = np.sqrt(max(target - center, 0.0) / denom)
        cand = center + s * dev
        if (cand >= 0).all():
            out = np.zeros_like(a)
            out[support] = cand
            return out
        newsup = support.copy()
        newsup[support] = cand > 0
        a = np.zeros_like(a)
        a[newsup] = np.maximum(cand[cand > 0], 1e-12)
        support = newsup
    raise DomainError(f"projection failed for density {x}")


@dataclass
class OptimizeResult:
    value: float
    profile: tuple[float, ...]
    iterations: int
    sense: str
    r: int

    def part_profile(self) -> PartProfile:
        return PartProfile(self.profile)


def _starting_points(r: int, x: float, rng: np.random.Generator, count: int):
    starts = [np.full(r, 1.0 / r)]
    for ratio in (0.3, 0.5, 0.7, 0.85):
        starts.append(np.array([ratio**i for i in range(r)]))
    while len(starts) < count:
        starts.append(rng.dirichlet(np.ones(r)))
    feasible = []
    for s in starts[:count]:
        try:
            feasible.append(project_to_slice(s, x))
        except DomainError:
            continue
    return feasible


def optimize_profile(
    q: QuantumGraph,
    r: int,
    x: float,
    sense: str = "max",
    starts: int = 64,
    seed: int = 0,
    grad_tol: float = 1e-10,
    max_iter: int = 300,
) -> OptimizeResult:
    """Approximate extremum of the limit density of q over r-part profiles
    with limit edge density x."""
    if sense not in ("max", "min"):
        raise DomainError(f"sense must be 'max' or 'min', got {sense!r}")
    if r < 1:
        raise DomainError(f"need r >= 1, got {r}")
    if not 0.0 <= x <= (r - 1) / r + 1e-12:
        raise DomainError(
            f"x={x} outside [0, {(r - 1) / r}] reachable with r={r} parts"
        )
    x = min(x, (r - 1) / r)
    patterns = _q_patterns(q)
    sign = 1.0 if sense == "max" else -1.0

    def value(a: np.ndarray) -> float:
        return sum(c * _poly_value(p, a) for c, p in patterns)

    def signed_grad(a: np.ndarray) -> np.ndarray:
        g = np.zeros_like(a)
        for c, p in patterns:
            g += c * _poly_grad(p, a)
        return sign * g

    rng = np.random.Generator(np.random.Philox(seed))
    candidates = []
    total_iters = 0
    for a0 in _starting_points(r, x, rng, starts):
        a = a0
        fa = sign * value(a)
        step = 0.1
        iters = 0
        for _ in range(max_iter):
            iters += 1
            g = signed_grad(a)
            moved = False
            while step > 1e-14:
                trial = project_to_slice(a + step * g, x)
                ft = sign * value(trial)
                if ft > fa + 1e-15:
                    a, fa = trial, ft
                    step *= 1.5
                    moved = True
                    break
                step *= 0.5
            if not moved:
                break
            if np.linalg.norm(g) * step < grad_tol:
                break
        total_iters += iters
        candidates.append((fa, a))

    candidates.sort(key=lambda t: (-t[0], tuple(t[1])))
    polished = []
    for fa, a in candidates[:3]:
        res = minimize(
            lambda v: -sign * value(v),
            a,
            jac=lambda v: -signed_grad(v),
            bounds=[(0.0, 1.0)] * r,
            constraints=[
                {"type": "eq", "fun": lambda v: v.sum() - 1.0,
                 "jac": lambda v: np.ones_like(v)},
                {"type": "eq", "fun": lambda v: 1.0 - v @ v - x,
                 "jac": lambda v: -2.0 * v},
            ],
            method="SLSQP",
            options={"maxiter": 200, "ftol": 1e-14},
        )
        total_iters += int(res.nit)
        for cand in (res.x, a):
            try:
                proj = project_to_slice(cand, x)
            except DomainError:
                continue
            polished.append((sign * value(proj), proj))
    polished.sort(key=lambda t: (-t[0], tuple(t[1])))
    best_val, best_a = polished[0]

    keep = best_a > PART_EPS
    if 0 < keep.sum() < len(best_a):
        try:
            pruned = project_to_slice(best_a[keep], x)
            best_a, best_val = pruned, sign * value(pruned)
        except DomainError:
            pass  # pruning would make the density unreachable; keep as is
    profile = tuple(sorted((float(v) for v in best_a), reverse=True))
    return OptimizeResult(
        value=sign * best_val,
        profile=profile,
        iterations=total_iters,
        sense=sense,
        r=len(profile),
    )


def min_parts(x: float) -> int:
    """Least part count that can reach limit edge density x."""
    if not 0.0 <= x < 1.0:
        raise DomainError(f"need x in [0,1), got {x}")
    r = 1
    while 1.0 - 1.0 / r < x - 1e-15:
        r += 1
    return r


def _limit_on_complete(q: QuantumGraph) -> float:
    """Limit density of q on growing complete graphs."""
    total = 0.0
    for coef, g, _ in q.terms:
        if g.edge_count() == comb(g.n, 2):
            total += coef
    return total


def big_m(q: QuantumGraph, x: float, r_max: int, **kw) -> float:
    """Supremum over r of the maximum r-part limit density at density x."""
    if x == 1.0:
        return _limit_on_complete(q)
    r0 = min_parts(x)
    if r_max < r0:
        raise DomainError(f"r_max={r_max} below minimum part count {r0}")
    return max(
        optimize_profile(q, r, x, "max", **kw).value
        for r in range(r0, r_max + 1)
    )


def small_m(q: QuantumGraph, x: float, r_max: int, **kw) -> float:
    """Infimum over r of the minimum r-part limit density at density x."""
    if x == 1.0:
        return _limit_on_complete(q)
    r0 = min_parts(x)
    if r_max < r0:
        raise DomainError(f"r_max={r_max} below minimum part count {r0}")
    return min(
        optimize_profile(q, r, x, "min", **kw).value
        for r in range(r0, r_max + 1)
    )


# ----------------------------------------------------------------------
# concave / convex envelopes
# ----------------------------------------------------------------------

@dataclass(frozen=True)
class PiecewiseLinear:
    """Piecewise-linear function given by its sorted knot list."""

    knots: tuple[tuple[float, float], ...]

    def __call__(self, x: float) -> float:
        xs = [k[0] for k in self.knots]
        if x <= xs[0]:
            return self.knots[0][1]
        if x >= xs[-1]:
            return self.knots[-1][1]
        i = bisect_right(xs, x) - 1
        x0, y0 = self.knots[i]
        x1, y1 = self.knots[i + 1]
        if x1 == x0:
            return max(y0, y1)
        return y0 + (y1 - y0) * (x - x0) / (x1 - x0)


def _hull(samples, upper: bool) -> PiecewiseLinear:
    pts = {}
    for x, y in samples:
        if not 0.0 <= x <= 1.0:
            raise DomainError(f"sample x={x} outside [0,1]")
        if x in pts:
            pts[x] = max(pts[x], y) if upper else min(pts[x], y)
        else:
            pts[x] = y
    if len(pts) < 2:
        raise DomainError("envelope needs at least 2 distinct x-values")
    pts = sorted(pts.items())
    sgn = 1.0 if upper else -1.0
    hull: list[tuple[float, float]] = []
    for x, y in pts:
        while len(hull) >= 2:
            (x1, y1), (x2, y2) = hull[-2], hull[-1]
            cross = (x2 - x1) * (y - y1) - (x - x1) * (y2 - y1)
            if sgn * cross >= 0:
                hull.pop()
            else:
                break
        hull.append((x, y))
    return PiecewiseLinear(tuple(hull))


def concave_envelope(samples) -> PiecewiseLinear:
    """Least concave majorant of the sample set, as its upper hull."""
    return _hull(samples, upper=True)


def convex_envelope(samples) -> PiecewiseLinear:
    """Greatest convex minorant of the sample set, as its lower hull."""
    return _hull(samples, upper=False)


# ----------------------------------------------------------------------
# Brown-Sidorenko merging
# ----------------------------------------------------------------------

def merge_smallest(g: Graph) -> Graph:
    """Merge the two smallest parts of a complete multipartite graph,
    keeping the vertex set; edge count never increases and complete
    bipartite pattern counts never decrease."""
    parts = multipartite_parts(g)
    if parts is None:
        raise DomainError("merge_smallest needs a complete multipartite graph")
    if len(parts) < 3:
        raise DomainError(f"need at least 3 parts, got {len(parts)}")
    parts.sort(key=lambda p: (len(p), min(p)))
    merged = [sorted(parts[0] + parts[1])] + parts[2:]
    edges = []
    for i, pa in enumerate(merged):
        for pb in merged[i + 1:]:
            edges.extend((u, v) for u in pa for v in pb)
    return Graph.from_edges(g.n, edges)


# ----------------------------------------------------------------------
# simplex inequality checker
# ----------------------------------------------------------------------

@dataclass(frozen=True)
class SimplexCheck:
    hypothesis_ok: bool
    failing_r: int | None
    limit_ok: bool
    lhs: float
    rhs: float
    holds: bool | None  # asserted only when the hypothesis verified


def lemma_simplex_check(
    s: int,
    lam: float,
    mu: float,
    alpha: PartProfile,
    r_check: int = 1000,
) -> SimplexCheck:
    """Evaluate the simplex inequality
    sum_i sum_{|W|=s, W excluding i} alpha_i^2 prod_{j in W} alpha_j
      <= lam * sum_{i<j} alpha_i alpha_j + mu
    whose sufficient hypothesis is C(r-1,s)/r^(s+1) <= lam (r-1)/(2r) + mu
    for every positive integer r (checked up to r_check, plus the limit
    inequality 0 <= lam/2 + mu)."""
    if s < 1:
        raise DomainError(f"need s >= 1, got {s}")
    failing = None
    for r in range(1, r_check + 1):
        if comb(r - 1, s) / r ** (s + 1) > lam * (r - 1) / (2 * r) + mu + 1e-15:
            failing = r
            break
    limit_ok = 0.0 <= lam / 2 + mu + 1e-15
    a = alpha.as_array()
    m = len(a)
    lhs = 0.0
    for i in range(m):
        others = np.delete(a, i)
        lhs += a[i] ** 2 * _esym(others, s)
    rhs = lam * float(sum(
        a[i] * a[j] for i in range(m) for j in range(i + 1, m)
    )) + mu
    hypothesis_ok = failing is None and limit_ok
    return SimplexCheck(
        hypothesis_ok=hypothesis_ok,
        failing_r=failing,
        limit_ok=limit_ok,
        lhs=float(lhs),
        rhs=float(rhs),
        holds=bool(lhs <= rhs + 1e-12) if hypothesis_ok else None,
    )


def _esym(values: np.ndarray, k: int) -> float:
    """Elementary symmetric polynomial e_k."""
    e = np.zeros(k + 1)
    e[0] = 1.0
    for v in values:
        e[1:] = e[1:] + v * e[:-1]
    return float(e[k])
