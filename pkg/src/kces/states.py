"""Product vectors, party partitions, pure-state entanglement depth and the
PPT state built from a set of product vectors.

Parties are indexed from 0 in code. Human-readable partition labels and the
JSON formats use 1-based party labels.
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import reduce
from itertools import combinations
from math import lcm, prod
from typing import Iterable, Iterator, Sequence

from . import linalg
from .errors import PreconditionError
from .linalg import Matrix, Vector


@dataclass(frozen=True)
class ProductVector:
    """Unnormalized tensor product of local vectors, one per party."""

    factors: tuple[Vector, ...]

    def __init__(self, factors: Iterable[Iterable]):
        fs = tuple(linalg.as_vector(f) for f in factors)
        if not fs:
            raise PreconditionError("a product vector needs at least one factor")
        for i, f in enumerate(fs):
            if not f or not any(f):
                raise PreconditionError(f"factor {i} is empty or zero")
        object.__setattr__(self, "factors", fs)

    @property
    def dims(self) -> tuple[int, ...]:
        return tuple(len(f) for f in self.factors)


@dataclass(frozen=True)
class ProductSet:
    dims: tuple[int, ...]
    vectors: tuple[ProductVector, ...]

    def __init__(self, vectors: Iterable[ProductVector], dims: Sequence[int] | None = None):
        vs = tuple(vectors)
        if not vs:
            raise PreconditionError("a product set must be nonempty")
        dims = tuple(dims) if dims is not None else vs[0].dims
        for i, v in enumerate(vs):
            if v.dims != dims:
                raise PreconditionError(f"vector {i} has dims {v.dims}, expected {dims}")
        object.__setattr__(self, "dims", dims)
        object.__setattr__(self, "vectors", vs)

    def __len__(self):
        return len(self.vectors)

    def __iter__(self):
        return iter(self.vectors)

    def expanded(self) -> Matrix:
        return [expand(v) for v in self.vectors]


@dataclass(frozen=True)
class SubspaceBasis:
    """Rows are global vectors of length ``prod(dims)``."""

    dims: tuple[int, ...]
    basis: tuple[Vector, ...]

    def __init__(self, dims: Sequence[int], basis: Iterable[Iterable]):
        dims = tuple(dims)
        rows = tuple(linalg.as_vector(r) for r in basis)
        size = prod(dims)
        if any(len(r) != size for r in rows):
            raise PreconditionError(f"basis rows must have length {size}")
        object.__setattr__(self, "dims", dims)
        object.__setattr__(self, "basis", rows)

    def __len__(self):
        return len(self.basis)


@dataclass(frozen=True)
class Partition:
    """Disjoint cover of parties ``0..n-1``; blocks sorted, ordered by first element."""

    blocks: tuple[tuple[int, ...], ...]

    def __init__(self, blocks: Iterable[Iterable[int]]):
        bs = [tuple(sorted(b)) for b in blocks]
        if any(not b for b in bs):
            raise PreconditionError("partition blocks must be non-empty")
        flat = sorted(p for b in bs for p in b)
        if flat != list(range(len(flat))):
            raise PreconditionError(f"blocks {bs} are not a disjoint cover of 0..{len(flat) - 1}")
        object.__setattr__(self, "blocks", tuple(sorted(bs)))

    @classmethod
    def singletons(cls, n: int) -> "Partition":
        return cls([(i,) for i in range(n)])

    @classmethod
    def from_labels(cls, blocks: Iterable[Iterable[int]]) -> "Partition":
        """Build from 1-based party labels."""
        return cls([[p - 1 for p in b] for b in blocks])

    @property
    def n(self) -> int:
        return sum(len(b) for b in self.blocks)

    def labels(self) -> list[list[int]]:
        return [[p + 1 for p in b] for b in self.blocks]

    def block_dims(self, dims: Sequence[int]) -> tuple[int, ...]:
        return tuple(prod(dims[p] for p in b) for b in self.blocks)

    def __str__(self):
        sep = "" if self.n < 10 else ","
        return "|".join(sep.join(str(p + 1) for p in b) for b in self.blocks)


def expand(v: ProductVector) -> Vector:
    return linalg.kron_all(v.factors)


def coarse_grain(v: ProductVector, p: Partition) -> ProductVector:
    """Merge the factors of each block (ascending party order) into one."""
    if p.n != len(v.factors):
        raise PreconditionError(f"partition covers {p.n} parties, vector has {len(v.factors)}")
    return ProductVector(linalg.kron_all(v.factors[i] for i in b) for b in p.blocks)


def coarse_grain_set(s: ProductSet, p: Partition) -> ProductSet:
    return ProductSet(coarse_grain(v, p) for v in s)


def permute_to_party_order(v: Sequence, p: Partition, dims: Sequence[int]) -> Vector:
    """Reindex a vector laid out block by block into the global party order."""
    order = [q for b in p.blocks for q in b]
    local_dims = [dims[q] for q in order]
    out = [Fraction(0)] * prod(dims)
    for i, x in enumerate(v):
        digits = linalg._digits(i, local_dims)
        party_digits = [0] * len(dims)
        for q, s in zip(order, digits):
            party_digits[q] = s
        out[linalg._index(party_digits, dims)] = Fraction(x)
    return tuple(out)


def expand_over_partition(v: ProductVector, p: Partition, dims: Sequence[int]) -> Vector:
    """Global vector (party order) of a product of one factor per block of ``p``."""
    return permute_to_party_order(expand(v), p, dims)


def mutual_orthogonality(s: ProductSet) -> tuple[bool, tuple[int, int] | None]:
    """Check pairwise orthogonality; return the first violating pair if any.

    For product vectors the inner product factorizes, so no expansion is needed.
    """
    vs = s.vectors
    for i, j in combinations(range(len(vs)), 2):
        if all(linalg.dot(a, b) != 0 for a, b in zip(vs[i].factors, vs[j].factors)):
            return False, (i, j)
    return True, None


def _set_partitions(n: int, max_block: int) -> Iterator[list[list[int]]]:
    def grow(i, blocks):
        if i == n:
            yield blocks
            return
        for b in blocks:
            if len(b) < max_block:
                b.append(i)
                yield from grow(i + 1, blocks)
                b.pop()
        blocks.append([i])
        yield from grow(i + 1, blocks)
        blocks.pop()

    yield from grow(0, [])


def enumerate_maximal_partitions(n: int, max_block: int) -> list[Partition]:
    """Partitions with blocks of at most ``max_block`` parties in which no two
    blocks can be merged without exceeding that size.

    A vector that is product across some partition with small blocks is also
    product across every coarsening of it, so these are the only partitions a
    producibility check needs. Output is sorted lexicographically by blocks.
    """
    if not 1 <= max_block <= n:
        raise PreconditionError(f"need 1 <= max_block <= n, got max_block={max_block} n={n}")
    if n > 10:
        raise PreconditionError(f"n={n} too large for partition enumeration (max 10)")
    out = []
    for blocks in _set_partitions(n, max_block):
        sizes = sorted(len(b) for b in blocks)
        if len(sizes) > 1 and sizes[0] + sizes[1] <= max_block:
            continue
        out.append(Partition(blocks))
    return sorted(out, key=lambda p: p.blocks)


def bipartitions(n: int) -> list[Partition]:
    """All ``2**(n-1) - 1`` bipartitions, each as (block with party 0, rest)."""
    out = []
    others = range(1, n)
    for size in range(0, n - 1):
        for extra in combinations(others, size):
            first = (0,) + extra
            out.append(Partition([first, [q for q in range(n) if q not in first]]))
    return out


def _integral(v: Sequence[Fraction]) -> list[int]:
    scale = reduce(lcm, (x.denominator for x in v), 1)
    return [int(x * scale) for x in v]


def _is_rank_one_split(v: Sequence[int], dims: Sequence[int], side: Sequence[int]) -> bool:
    """Whether ``v`` reshaped as (parties in ``side``) x (the rest) has rank 1."""
    n = len(dims)
    rest = [q for q in range(n) if q not in side]
    row_dims = [dims[q] for q in side]
    col_dims = [dims[q] for q in rest]
    rows = [[0] * prod(col_dims) for _ in range(prod(row_dims))]
    for i, x in enumerate(v):
        if not x:
            continue
        digits = linalg._digits(i, dims)
        r = linalg._index([digits[q] for q in side], row_dims)
        c = linalg._index([digits[q] for q in rest], col_dims)
        rows[r][c] = x
    ref = next(r for r in rows if any(r))
    c0 = next(j for j, x in enumerate(ref) if x)
    for r in rows:
        a = r[c0]
        # r must equal (a / ref[c0]) * ref
        if any(x * ref[c0] != a * y for x, y in zip(r, ref)):
            return False
    return True


def vector_depth(v: Sequence, dims: Sequence[int]) -> tuple[int, Partition]:
    """Entanglement depth of a pure state and its finest product partition.

    Every bipartition is tested for a rank-one reshape; parties never separated
    by a product bipartition share a block of the finest factorization.
    """
    dims = tuple(dims)
    n = len(dims)
    if len(v) != prod(dims):
        raise PreconditionError(f"vector length {len(v)} does not match dims {list(dims)}")
    if n > 9:
        raise PreconditionError(f"n={n} too large for depth computation (max 9)")
    vec = linalg.as_vector(v)
    if not any(vec):
        raise PreconditionError("the zero vector has no entanglement depth")
    ints = _integral(vec)
    together = [[True] * n for _ in range(n)]
    for bp in bipartitions(n) if n > 1 else []:
        side = bp.blocks[0]
        if _is_rank_one_split(ints, dims, side):
            for a in side:
                for b in bp.blocks[1]:
                    together[a][b] = together[b][a] = False
    blocks, seen = [], set()
    for a in range(n):
        if a in seen:
            continue
        block = [b for b in range(n) if together[a][b]]
        seen.update(block)
        blocks.append(block)
    finest = Partition(blocks)
    return max(len(b) for b in finest.blocks), finest


def ppt_state_from_set(s: ProductSet) -> tuple[Matrix, dict[str, bool]]:
    """Normalized projector onto the orthocomplement of ``span(s)``.

    Returns ``(rho, verdicts)``; ``verdicts`` maps each bipartition label to
    whether the partial transpose of ``rho`` (on the block holding party 1) is
    positive semidefinite.
    """
    vecs = s.expanded()
    total = prod(s.dims)
    if linalg.rank(vecs) != len(vecs):
        raise PreconditionError("expanded vectors are not linearly independent")
    if len(vecs) >= total:
        raise PreconditionError("complement empty: the set spans the whole space")
    proj = linalg.gram_projector(vecs)
    scale = Fraction(1, total - len(vecs))
    rho = [
        tuple((Fraction(int(i == j)) - proj[i][j]) * scale for j in range(total))
        for i in range(total)
    ]
    verdicts = {
        str(bp): linalg.psd_check(linalg.partial_transpose(rho, s.dims, bp.blocks[0]))
        for bp in bipartitions(len(s.dims))
    }
    return rho, verdicts
