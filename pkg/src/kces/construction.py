"""Vandermonde construction of subspaces whose vectors all have depth >= k,
and the padding construction that lifts a genuinely entangled subspace to
more parties.
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence

from . import linalg
from .bounds import Scenario
from .errors import PreconditionError
from .states import Partition, ProductSet, ProductVector, SubspaceBasis, coarse_grain_set, expand
from .unextendibility import verify_level


@dataclass(frozen=True)
class KcesResult:
    scenario: Scenario
    nodes: tuple[Fraction, ...]
    spanning: ProductSet
    complement: SubspaceBasis
    certified_level: int

    @property
    def dimension(self) -> int:
        return len(self.complement)


def vandermonde_product_vector(d: int, n: int, x) -> ProductVector:
    """``(1, x, ..., x**(d**n - 1))`` written as a product over ``n`` parties.

    Party ``m`` (0-based) carries ``x**(s * d**(n - 1 - m))`` for ``s < d``.
    """
    x = Fraction(x)
    if x <= 0:
        raise PreconditionError(f"Vandermonde nodes must be positive, got {x}")
    return ProductVector(
        [x ** (s * d ** (n - 1 - m)) for s in range(d)] for m in range(n)
    )


def min_spanning_count(s: Scenario) -> int:
    """Fewest Vandermonde vectors whose orthocomplement has depth >= k."""
    return s.t * s.d ** (s.k - 1) + s.d**s.remainder - s.t


def _check_nodes(nodes: Sequence, count: int) -> tuple[Fraction, ...]:
    nodes = tuple(Fraction(x) for x in nodes)
    if len(nodes) != count:
        raise PreconditionError(f"expected {count} nodes, got {len(nodes)}")
    if nodes and nodes[0] <= 0:
        raise PreconditionError("nodes must satisfy 0 < x_0 < x_1 < ...: first node is not positive")
    for a, b in zip(nodes, nodes[1:]):
        if not a < b:
            raise PreconditionError(f"nodes must satisfy 0 < x_0 < x_1 < ...: {a} is not below {b}")
    return nodes


def build_kces(s: Scenario, count: int | None = None, nodes: Sequence | None = None,
               threads: int | None = None) -> KcesResult:
    """Span ``count`` Vandermonde product vectors and return the orthocomplement.

    ``count`` defaults to the minimum, giving the largest possible dimension;
    ``nodes`` default to ``1, 2, ..., count``. The result is certified by running
    the level ``k - 1`` unextendibility check on the spanning set.
    """
    minimum = min_spanning_count(s)
    count = minimum if count is None else count
    if count < minimum:
        raise PreconditionError(
            f"count={count} is below the minimum t*d^(k-1) + d^(n-t(k-1)) - t = {minimum}"
        )
    if count >= s.d**s.n:
        raise PreconditionError(f"count={count} must be below d^n = {s.d**s.n}")
    nodes = _check_nodes(range(1, count + 1) if nodes is None else nodes, count)
    spanning = ProductSet(vandermonde_product_vector(s.d, s.n, x) for x in nodes)
    complement = SubspaceBasis((s.d,) * s.n, linalg.nullspace_basis(spanning.expanded()))
    verdict = verify_level(spanning, s.k - 1, threads)
    if not verdict.unextendible:
        raise RuntimeError(f"construction failed to certify level {s.k - 1}: {verdict}")
    return KcesResult(s, nodes, spanning, complement, s.k - 1)


def local_matrices(spanning: ProductSet, p: Partition) -> list[linalg.Matrix]:
    """Per block of ``p``, the matrix whose rows are the members' local vectors."""
    cg = coarse_grain_set(spanning, p)
    return [[v.factors[b] for v in cg] for b in range(len(p.blocks))]


def total_positivity_certificate(s: Scenario, count: int, nodes: Sequence, p: Partition) -> bool:
    """Check that every block's local Vandermonde matrix is totally positive.

    Nodes are not validated, so repeated or unordered nodes simply fail.
    """
    if count > 10 or any(d > 8 for d in p.block_dims((s.d,) * s.n)):
        raise PreconditionError("minor enumeration limited to count <= 10 and block dimension <= 8")
    nodes = [Fraction(x) for x in nodes]
    if len(nodes) != count:
        raise PreconditionError(f"expected {count} nodes, got {len(nodes)}")
    if any(x <= 0 for x in nodes):
        return False
    spanning = ProductSet(vandermonde_product_vector(s.d, s.n, x) for x in nodes)
    return all(linalg.all_minors_positive(m) for m in local_matrices(spanning, p))


def pad_construction(ges: SubspaceBasis, pad: ProductVector | None) -> SubspaceBasis:
    """Tensor every row of ``ges`` with the same fully product vector on extra parties."""
    if pad is None:
        return ges
    if linalg.rank(ges.basis) != len(ges.basis):
        raise PreconditionError("subspace rows are not linearly independent")
    tail = expand(pad)
    return SubspaceBasis(ges.dims + pad.dims, [linalg.kron(row, tail) for row in ges.basis])
