"""Deciding whether a set of product vectors admits a j-producible vector in
its orthocomplement, with explicit witnesses when it does.

The search is the classic assignment criterion: a vector that is product
across a partition exists in the orthocomplement iff the members can be
distributed among the blocks so that, in every block, the local vectors
assigned there fail to span the block's space.
"""
from __future__ import annotations

import os
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from functools import reduce
from itertools import combinations
from math import gcd, lcm, prod
from typing import Sequence

from . import linalg
from .errors import PreconditionError
from .states import (
    Partition,
    ProductSet,
    ProductVector,
    coarse_grain_set,
    enumerate_maximal_partitions,
    expand_over_partition,
    mutual_orthogonality,
)


@dataclass(frozen=True)
class Witness:
    """A product vector over the blocks of ``partition`` orthogonal to a set.

    ``assignment[i]`` is the block that member ``i`` was assigned to.
    """

    partition: Partition
    vector: ProductVector
    assignment: tuple[int, ...]

    def global_vector(self, dims: Sequence[int]) -> linalg.Vector:
        return expand_over_partition(self.vector, self.partition, dims)


@dataclass(frozen=True)
class Verdict:
    level: int
    witness: Witness | None = None

    @property
    def unextendible(self) -> bool:
        return self.witness is None


def _integral(v) -> list[int]:
    scale = reduce(lcm, (x.denominator for x in v), 1)
    return [int(x * scale) for x in v]


def _reduce(v: list[int], echelon: tuple) -> list[int] | None:
    """Residual of ``v`` against an echelon basis, or None if ``v`` is in its span."""
    for pivot, row in echelon:
        a = v[pivot]
        if a:
            b = row[pivot]
            v = [x * b - a * y for x, y in zip(v, row)]
    g = reduce(gcd, v, 0)
    if g == 0:
        return None
    return [x // g for x in v]


def _first_nonzero(v: list[int]) -> int:
    return next(i for i, x in enumerate(v) if x)


def _search(local: list[list[list[int]]], block_dims: Sequence[int]) -> tuple[int, ...] | None:
    """Lexicographically first valid assignment, by depth-first search.

    ``local[b][i]`` is member ``i``'s local vector on block ``b``. A branch is
    abandoned once any block's assigned vectors span it, since adding vectors
    never shrinks a span.
    """
    m, r = len(local[0]), len(block_dims)
    assign = [0] * m

    def dfs(i: int, states: list[tuple]) -> bool:
        if i == m:
            return True
        for b in range(r):
            res = _reduce(local[b][i], states[b])
            if res is None:
                new = states[b]
            elif len(states[b]) + 1 >= block_dims[b]:
                continue
            else:
                new = states[b] + ((_first_nonzero(res), res),)
            assign[i] = b
            if dfs(i + 1, states[:b] + [new] + states[b + 1:]):
                return True
        return False

    return tuple(assign) if dfs(0, [()] * r) else None


_PRIME = 2**61 - 1


def _full_rank_mod_p(rows: list[list[int]], dim: int) -> bool:
    """Rank mod a prime never exceeds the rational rank, so True is conclusive."""
    a = [[x % _PRIME for x in r] for r in rows]
    rank = 0
    for c in range(dim):
        src = next((i for i in range(rank, len(a)) if a[i][c]), None)
        if src is None:
            continue
        a[rank], a[src] = a[src], a[rank]
        inv = pow(a[rank][c], -1, _PRIME)
        piv = [x * inv % _PRIME for x in a[rank]]
        for i in range(rank + 1, len(a)):
            f = a[i][c]
            if f:
                a[i] = [(x - f * y) % _PRIME for x, y in zip(a[i], piv)]
        rank += 1
    return rank == dim


def _local_vectors(s: ProductSet, p: Partition) -> tuple[ProductSet, list[list[list[int]]]]:
    cg = coarse_grain_set(s, p)
    local = [[_integral(v.factors[b]) for v in cg] for b in range(len(p.blocks))]
    return cg, local


def extension_witness(s: ProductSet, p: Partition) -> Witness | None:
    """Find a vector, product across ``p``, orthogonal to every member of ``s``.

    Works for non-orthogonal sets too. Returns None iff no such vector exists.
    The witness factor on each block is the first nullspace vector of the local
    vectors assigned to it.
    """
    if p.n != len(s.dims):
        raise PreconditionError(f"partition covers {p.n} parties, set has {len(s.dims)}")
    block_dims = p.block_dims(s.dims)
    cg, local = _local_vectors(s, p)
    assign = _search(local, block_dims)
    if assign is None:
        return None
    factors = []
    for b, dim in enumerate(block_dims):
        rows = [cg.vectors[i].factors[b] for i in range(len(cg)) if assign[i] == b]
        factors.append(linalg.nullspace_basis(rows, n_cols=dim)[0])
    witness = ProductVector(factors)
    for i, v in enumerate(cg):
        if all(linalg.dot(a, w) != 0 for a, w in zip(v.factors, witness.factors)):
            raise RuntimeError(f"witness is not orthogonal to member {i}")
    return Witness(p, witness, assign)


def full_local_spanning(s: ProductSet, p: Partition) -> bool:
    """Whether every ``D_b``-tuple of local vectors spans its block, for every block.

    When true, no vector product across ``p`` is orthogonal to the set.
    """
    block_dims = p.block_dims(s.dims)
    needed = sum(d - 1 for d in block_dims) + 1
    if len(s) < needed:
        raise PreconditionError(
            f"full local spanning needs at least sum(D_b - 1) + 1 = {needed} vectors "
            f"(minimal unextendible size), got {len(s)}"
        )
    cg, local = _local_vectors(s, p)
    for b, dim in enumerate(block_dims):
        for idx in combinations(range(len(cg)), dim):
            if _full_rank_mod_p([local[b][i] for i in idx], dim):
                continue
            if linalg.rank([cg.vectors[i].factors[b] for i in idx]) < dim:
                return False
    return True


def _threads(threads: int | None) -> int:
    if threads is None:
        threads = int(os.environ.get("KCES_THREADS", "1") or 1)
    return max(1, threads)


def verify_level(s: ProductSet, j: int, threads: int | None = None) -> Verdict:
    """Check whether ``s`` can be extended by a ``j``-producible vector.

    All maximal partitions with blocks of at most ``j`` parties are scanned in
    canonical order and the first witness is returned. An unextendible verdict
    means the orthocomplement of ``span(s)`` only holds vectors of depth > j.
    """
    n = len(s.dims)
    if not 1 <= j <= n - 1:
        raise PreconditionError(f"level j={j} must satisfy 1 <= j <= n-1 = {n - 1}")
    partitions = enumerate_maximal_partitions(n, j)
    workers = min(_threads(threads), len(partitions))
    if workers > 1:
        with ProcessPoolExecutor(max_workers=workers) as pool:
            results = list(pool.map(extension_witness, [s] * len(partitions), partitions))
    else:
        results = (extension_witness(s, p) for p in partitions)
    for w in results:
        if w is not None:
            return Verdict(j, w)
    return Verdict(j)


def is_upb(s: ProductSet) -> bool:
    if not mutual_orthogonality(s)[0]:
        return False
    if linalg.rank(s.expanded()) >= prod(s.dims):
        return False
    return verify_level(s, 1).unextendible


def depth_floor(s: ProductSet, threads: int | None = None) -> int:
    """Largest k such that every vector orthogonal to ``s`` has depth >= k."""
    if linalg.rank(s.expanded()) >= prod(s.dims):
        raise PreconditionError("complement empty: the set spans the whole space")
    floor = 1
    for j in range(1, len(s.dims)):
        if not verify_level(s, j, threads).unextendible:
            break
        floor = j + 1
    return floor
