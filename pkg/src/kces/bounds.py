"""Dimension formulas, cardinality bounds and the supporting combinatorics.

All quantities are exact Python integers.
"""
from __future__ import annotations

from dataclasses import dataclass
from typing import Iterator, Sequence

from .errors import PreconditionError


@dataclass(frozen=True)
class Scenario:
    """``n`` parties of local dimension ``d``; depth threshold ``k``."""

    d: int
    n: int
    k: int

    def __post_init__(self):
        if self.d < 2:
            raise PreconditionError(f"local dimension d={self.d} must be >= 2")
        if self.n < 3:
            raise PreconditionError(f"party count n={self.n} must be >= 3")
        if not 2 <= self.k <= self.n:
            raise PreconditionError(f"depth k={self.k} must satisfy 2 <= k <= n={self.n}")

    @property
    def t(self) -> int:
        return self.n // (self.k - 1)

    @property
    def remainder(self) -> int:
        """Parties left over after ``t`` blocks of size ``k - 1``."""
        return self.n - self.t * (self.k - 1)


def max_kces_dim(s: Scenario) -> int:
    """Largest dimension of a subspace whose vectors all have depth >= k."""
    return s.d**s.n - (s.t * s.d ** (s.k - 1) + s.d**s.remainder - s.t)


def optimal_partition_shape(s: Scenario) -> tuple[int, ...]:
    """Block sizes of the coarse-graining that attains :func:`max_kces_dim`.

    A zero remainder block is dropped.
    """
    shape = (s.k - 1,) * s.t
    return shape + (s.remainder,) if s.remainder else shape


def max_ces_dim_hetero(dims: Sequence[int]) -> int:
    if len(dims) < 2 or any(d < 2 for d in dims):
        raise PreconditionError("need at least two parties, each of dimension >= 2")
    total = 1
    for d in dims:
        total *= d
    return total - min_unextendible_size(dims)


def min_unextendible_size(dims: Sequence[int]) -> int:
    """Fewest product vectors that can be unextendible: ``sum(d_i - 1) + 1``."""
    if any(d < 2 for d in dims):
        raise PreconditionError("every local dimension must be >= 2")
    return sum(d - 1 for d in dims) + 1


def min_upb_trivial(s: Scenario) -> int:
    """Minimal UPB cardinality on the optimally coarse-grained space."""
    d, n, k, t = s.d, s.n, s.k, s.t
    if d == 2 and k == n:
        return d**n
    base = t * (d ** (k - 1) - 1) + d**s.remainder
    divides = n % (k - 1) == 0
    if d % 2 == 1:
        return base
    if divides and t % 2 == 1:
        return base
    if not divides and t % 2 == 0:
        return base
    return base + 1


def pigeonhole_bound(s: Scenario) -> int:
    """Lower bound on the size of a UPB unextendible by (k-1)-producible vectors."""
    dk = s.d ** (s.k - 1)
    return dk + (s.n - s.k + 1) * ((dk - 2) // (s.k - 1) + 1)


def combined_lower_bound(s: Scenario) -> tuple[int, bool]:
    """``(max of both bounds, whether the pigeonhole bound is strictly larger)``."""
    trivial, pigeon = min_upb_trivial(s), pigeonhole_bound(s)
    return max(trivial, pigeon), pigeon > trivial


def f_w(m: int, n: int, w: int) -> int:
    if not (1 <= w <= n - 1 and m >= 1):
        raise PreconditionError(f"f_w needs 1 <= w <= n-1 and m >= 1, got m={m} n={n} w={w}")
    q = (m - 1) // n
    return (n - w) * q + max(m - w - n * q, 1)


def s_value(m: int, n: int, w: int) -> int:
    """Guaranteed number of members orthogonal to a fixed one on some ``w`` sites."""
    if m < 1:
        raise PreconditionError(f"m={m} must be >= 1")
    q = (m - 1) // n
    return w * q + min(w, m - 1 - n * q)


def guaranteed_box_total(p: int, q: int, r: int, s: int) -> int:
    """Objects surely held by the fullest ``s`` of ``q`` boxes given ``p*q + r`` objects."""
    if not (0 <= s <= q and 0 <= r < q):
        raise PreconditionError(f"need 0 <= s <= q and 0 <= r < q, got q={q} r={r} s={s}")
    return p * s + min(r, s)


def _integer_partitions(n: int, largest: int) -> Iterator[tuple[int, ...]]:
    if n == 0:
        yield ()
        return
    for first in range(min(n, largest), 0, -1):
        for rest in _integer_partitions(n - first, first):
            yield (first,) + rest


def brute_force_partition_optimum(s: Scenario) -> tuple[int, tuple[int, ...]]:
    """Exhaustively maximise ``sum(d**n_i - 1) + 1`` over block-size vectors.

    The objective is symmetric, so each multiset of block sizes (an integer
    partition of ``n`` with parts ``<= k - 1``) is visited once; zero parts
    contribute nothing.
    """
    if s.n > 12:
        raise PreconditionError(f"n={s.n} too large for exhaustive search (max 12)")
    best_value, best_shape = -1, ()
    for shape in _integer_partitions(s.n, s.k - 1):
        value = sum(s.d**x - 1 for x in shape) + 1
        if value > best_value:
            best_value, best_shape = value, shape
    return best_value, best_shape


def majorizes(x: Sequence[int], y: Sequence[int]) -> bool:
    """True iff ``x`` is majorized by ``y``.

    Both are sorted non-increasing and zero-padded to a common length. Unequal
    totals give False.
    """
    if sum(x) != sum(y):
        return False
    size = max(len(x), len(y))
    xs = sorted(x, reverse=True) + [0] * (size - len(x))
    ys = sorted(y, reverse=True) + [0] * (size - len(y))
    px = py = 0
    for a, b in zip(xs, ys):
        px += a
        py += b
        if px > py:
            return False
    return True
