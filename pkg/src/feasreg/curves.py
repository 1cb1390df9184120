"""Closed-form boundary curves and scalars for induced-density feasible
regions: the Kruskal-Katona upper curve, the clique density curve g_r, the
Goodman/Olpp curves, piecewise-linear upper bounds h_t for nearly complete
cliques, star curves s_t with their maximizer x*, complete-bipartite upper
bounds, and the 4-cycle bounds.

Evaluators are float-valued; values the theory pins at rationals (knots of
h_t, critical values of g_r, inducibility constants) are also exposed as
exact fractions.
"""

from __future__ import annotations

import math
from bisect import bisect_right
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from math import comb, sqrt

from .errors import DomainError


@dataclass(frozen=True)
class CurveSample:
    x: float
    y: float
    source: str  # closed_form | optimized | empirical | construction_limit

    def __post_init__(self):
        if not 0.0 <= self.x <= 1.0:
            raise DomainError(f"sample x={self.x} outside [0,1]")
        if self.source not in (
            "closed_form", "optimized", "empirical", "construction_limit"
        ):
            raise DomainError(f"unknown curve source {self.source!r}")


def _check_unit(x: float, name: str = "x"):
    if not 0.0 <= x <= 1.0:
        raise DomainError(f"{name} must lie in [0,1], got {x}")


def falling(k, r: int):
    """Falling factorial k(k-1)...(k-r+1); exact for int/Fraction inputs."""
    out = k ** 0 if not isinstance(k, int) else 1
    for i in range(r):
        out *= k - i
    return out


def interval_k(x: float) -> int:
    """The unique k >= 2 with x in ((k-2)/(k-1), (k-1)/k], for x in (0,1)."""
    if not 0.0 < x < 1.0:
        raise DomainError(f"need x in (0,1), got {x}")
    k = max(2, math.ceil(1.0 / (1.0 - x)))
    # guard against float slop at the interval ends
    while k > 2 and x <= (k - 2) / (k - 1):
        k -= 1
    while x > (k - 1) / k:
        k += 1
    return k


# ----------------------------------------------------------------------
# cliques
# ----------------------------------------------------------------------

def kk_upper(r: int, x: float) -> float:
    """Maximum asymptotic K_r-density at edge density x (Kruskal-Katona)."""
    if r < 2:
        raise DomainError(f"need r >= 2, got {r}")
    _check_unit(x)
    return x ** (r / 2)


def g_r(r: int, x: float) -> float:
    """Minimum asymptotic K_r-density at edge density x (clique density
    curve, realized by complete multipartite graphs)."""
    if r < 2:
        raise DomainError(f"need r >= 2, got {r}")
    _check_unit(x)
    if x <= (r - 2) / (r - 1):
        return 0.0
    if x == 1.0:
        return 1.0
    k = interval_k(x)
    s = sqrt(max(0.0, 1.0 - k * x / (k - 1)))
    return falling(k, r) / k**r * (1 + s) ** (r - 1) * (1 - (r - 1) * s)


def g_r_critical(r: int, k: int) -> Fraction:
    """Exact value of g_r at the critical density 1 - 1/k."""
    if r < 2 or k < r - 1:
        raise DomainError(f"need r >= 2 and k >= r-1, got r={r}, k={k}")
    return Fraction(falling(k, r), k**r)


# ----------------------------------------------------------------------
# triangles plus their complements (Goodman / Olpp)
# ----------------------------------------------------------------------

def goodman_olpp(x: float) -> tuple[float, float]:
    """(lower, upper) boundary of the K_3 + complement-K_3 density region."""
    _check_unit(x)
    lower = 1 - 3 * x + 3 * x * x
    upper = 1 - 3 * min(x - x**1.5, (1 - x) - (1 - x) ** 1.5)
    return lower, upper


# ----------------------------------------------------------------------
# cliques minus an edge
# ----------------------------------------------------------------------

def k3minus_upper(x: float) -> float:
    """Maximum asymptotic induced density of K_3 minus an edge (the cherry)."""
    _check_unit(x)
    return 1.5 * (x - g_r(3, x))


def k_of_t(t: int) -> int:
    """Index of the first knot of h_t (location of the A-sequence maximum)."""
    if t < 4:
        raise DomainError(f"need t >= 4, got {t}")
    if t in (5, 8, 11, 14, 17, 20):
        return (t - 2) * (3 * t + 1) // 6
    return math.ceil((t + 1) * (3 * t - 8) / 6)


def q_of_t(t: int) -> int:
    """Part count whose balanced blow-up maximizes induced K_t^- density."""
    if t < 4:
        raise DomainError(f"need t >= 4, got {t}")
    return -((-(t - 2) * (3 * t + 1)) // 6)  # ceil of an integer quotient


def a_seq(t: int, r: int) -> Fraction:
    """Slope sequence of the piecewise-linear bound h_t."""
    if t < 4 or r < 2:
        raise DomainError(f"need t >= 4 and r >= 2, got t={t}, r={r}")
    return Fraction(comb(t, 2) * falling(r - 2, t - 3), r ** (t - 2))


def b_seq(t: int, r: int) -> Fraction:
    """Knot values h_t(1 - 1/r): induced K_t^- density of balanced r-partite
    blow-ups."""
    if t < 4 or r < t - 2:
        raise DomainError(f"need t >= 4 and r >= t-2, got t={t}, r={r}")
    return Fraction(comb(t, 2) * falling(r - 1, t - 2), r ** (t - 1))


def ind_kt_minus(t: int) -> Fraction:
    """Exact inducibility of K_t minus an edge."""
    if t < 4:
        raise DomainError(f"need t >= 4, got {t}")
    q = q_of_t(t)
    return b_seq(t, q)


@lru_cache(maxsize=256)
def _h_t_knots(t: int, r_max: int | None) -> tuple[tuple[Fraction, Fraction], ...]:
    k = k_of_t(t)
    if r_max is None:
        r_max = 10 * k
    if r_max < k:
        raise DomainError(f"r_max={r_max} below first knot index {k}")
    knots = [(Fraction(0), Fraction(0))]
    knots.extend(
        (Fraction(r - 1, r), b_seq(t, r)) for r in range(k, r_max + 1)
    )
    knots.append((Fraction(1), Fraction(0)))
    return tuple(knots)


def h_t_knots(t: int, r_max: int | None = None) -> list[tuple[Fraction, Fraction]]:
    """Knots of h_t: (0,0), then (1-1/r, B_r) for r >= k(t), closing at (1,0).

    B_r tends to 0, so the curve is truncated at r_max (default 10*k(t))
    and continued linearly to the endpoint (1, 0).
    """
    return list(_h_t_knots(t, r_max))


@lru_cache(maxsize=256)
def _h_t_float_knots(t: int, r_max: int | None):
    knots = _h_t_knots(t, r_max)
    return [float(a) for a, _ in knots], [float(b) for _, b in knots]


def h_t_curve(t: int, x: float, r_max: int | None = None) -> float:
    """Piecewise-linear upper bound on the induced K_t^- density."""
    _check_unit(x)
    xs, ys = _h_t_float_knots(t, r_max)
    i = bisect_right(xs, x) - 1
    if i >= len(xs) - 1:
        return ys[-1]
    x0, x1 = xs[i], xs[i + 1]
    y0, y1 = ys[i], ys[i + 1]
    return y0 + (y1 - y0) * (x - x0) / (x1 - x0)


def k4minus_small_upper(x: float) -> float:
    """Upper bound 3x^2/2 on induced K_4^- density for sparse hosts."""
    if not 0.0 <= x <= 0.5:
        raise DomainError(f"x must lie in [0,1/2], got {x}")
    return 1.5 * x * x


# ----------------------------------------------------------------------
# stars
# ----------------------------------------------------------------------

def s_t_curve(t: int, x: float) -> float:
    """Limit induced density of the t-edge star in complete bipartite
    hosts of edge density x."""
    if t < 1:
        raise DomainError(f"need t >= 1, got {t}")
    if not 0.0 <= x <= 0.5:
        raise DomainError(f"x must lie in [0,1/2], got {x}")
    if t == 1:
        return x
    s = sqrt(max(0.0, 1.0 - 2.0 * x))
    return (t + 1) / 2**t * x * ((1 - s) ** (t - 1) + (1 + s) ** (t - 1))


def x_star(t: int) -> float:
    """Edge density at which s_t attains its maximum."""
    if t < 1:
        raise DomainError(f"need t >= 1, got {t}")
    if t <= 3:
        return 0.5

    def h(y: float) -> float:
        return 1 - t * y + t * y ** (t - 1) - y**t

    lo, hi = 1.0 / t, 1.0 / (t - 1)
    # h is positive at lo, negative at hi; bisect the unique root
    for _ in range(200):
        mid = 0.5 * (lo + hi)
        if hi - lo <= 1e-12:
            break
        if h(mid) > 0:
            lo = mid
        else:
            hi = mid
    y = 0.5 * (lo + hi)
    return 2 * y / (1 + y) ** 2


# ----------------------------------------------------------------------
# complete bipartite patterns
# ----------------------------------------------------------------------

def kst_upper(s: int, t: int, x: float) -> tuple[float, bool]:
    """Upper bound on the induced K_{s,t} density at edge density x.

    Returns (value, tight): below the star maximizer x*(t-s+1) the bound is
    achieved by complete bipartite hosts (tight=True); above it the star
    factor is frozen at its maximum and only an upper bound is claimed.
    """
    if not 2 <= s <= t:
        raise DomainError(f"need t >= s >= 2, got s={s}, t={t}")
    _check_unit(x)
    u = t - s + 1
    xs = x_star(u)
    scale = comb(s + t, s) / (2 ** (s - 1) * (t - s + 2))
    if x <= xs:
        return scale * x ** (s - 1) * s_t_curve(u, x), True
    return scale * x ** (s - 1) * s_t_curve(u, xs), False


# ----------------------------------------------------------------------
# 4-cycles
# ----------------------------------------------------------------------

def c4_upper_large(x: float) -> float:
    """Upper bound 3x(1-x)^2 on induced C_4 density for x >= 1/2."""
    if not 0.5 <= x <= 1.0:
        raise DomainError(f"x must lie in [1/2,1], got {x}")
    return 3 * x * (1 - x) ** 2


def c4_finite_bound(n: int, e: int) -> float:
    """Finite-n bound on the number of induced 4-cycles in an n-vertex
    graph with e edges."""
    if n < 1:
        raise DomainError(f"need n >= 1, got {n}")
    if not 0 <= e <= comb(n, 2):
        raise DomainError(f"edge count {e} impossible for n={n}")
    x = 2 * e / n**2
    return x * (1 - x) ** 2 / 8 * n**4 + 2 * n**3


# ----------------------------------------------------------------------
# 3-edge star lower bound on dense hosts
# ----------------------------------------------------------------------

S3_TAIL_LEFT = 4 * sqrt(2) - 5


def s3_lower_tail(x: float) -> float:
    """Lower bound on the maximum induced S_3 density near x = 1, realized
    by the complement of a clique."""
    if not S3_TAIL_LEFT <= x <= 1.0:
        raise DomainError(
            f"x must lie in [{S3_TAIL_LEFT:.6f}, 1], got {x}"
        )
    return 4 * (1 - sqrt(1 - x)) * (1 - x) ** 1.5
