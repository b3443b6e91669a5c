import random
from fractions import Fraction as F
from math import comb, prod

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from kces import linalg
from kces.catalog import catalog, ghz, qubit_product
from kces.construction import vandermonde_product_vector
from kces.errors import PreconditionError
from kces.states import (
    Partition,
    ProductSet,
    ProductVector,
    coarse_grain,
    enumerate_maximal_partitions,
    expand,
    expand_over_partition,
    mutual_orthogonality,
    ppt_state_from_set,
    vector_depth,
)


def test_expand():
    assert expand(qubit_product("000")) == (1,) + (0,) * 7
    assert expand(qubit_product("1+-")) == (0, 0, 0, 0, 1, -1, 1, -1)
    assert expand(vandermonde_product_vector(2, 3, 2)) == tuple(2**e for e in range(8))


def test_product_vector_rejects_zero_factor():
    with pytest.raises(PreconditionError):
        ProductVector([[1, 0], [0, 0]])


def test_coarse_grain():
    v = qubit_product("000")
    assert coarse_grain(v, Partition.singletons(3)) == v
    cg = coarse_grain(v, Partition([[0, 1], [2]]))
    assert cg.factors == ((1, 0, 0, 0), (1, 0))
    x = F(3)
    vv = vandermonde_product_vector(2, 4, x)
    cg = coarse_grain(vv, Partition([[0, 1], [2, 3]]))
    assert cg.factors == ((1, x**4, x**8, x**12), (1, x, x**2, x**3))


def test_partition_canonical():
    p = Partition([[3, 0], [2, 1]])
    assert p.blocks == ((0, 3), (1, 2))
    assert str(p) == "14|23"
    assert Partition.from_labels([[1, 4], [2, 3]]) == p
    with pytest.raises(PreconditionError):
        Partition([[0, 1], [1, 2]])


def test_mutual_orthogonality():
    assert mutual_orthogonality(catalog("shifts")) == (True, None)
    assert mutual_orthogonality(catalog("k5")) == (True, None)
    s = ProductSet([qubit_product("00"), qubit_product("0+")])
    assert mutual_orthogonality(s) == (False, (0, 1))


@pytest.mark.parametrize("name, size, n", [("shifts", 4, 3), ("k4", 8, 4), ("k4bar", 8, 4), ("k5", 16, 5)])
def test_catalog_sets(name, size, n):
    s = catalog(name)
    assert len(s) == size and s.dims == (2,) * n
    assert mutual_orthogonality(s)[0]
    assert linalg.rank(s.expanded()) == size


def test_catalog_shor_and_ghz():
    shor = catalog("shor")
    assert len(shor) == 2 and len(shor.basis[0]) == 512
    for row in shor.basis:
        assert sum(1 for x in row if x) == 8
        assert {x for x in row if x} <= {1, -1}
    assert catalog("ghz", 3).basis[0] == (1, 0, 0, 0, 0, 0, 0, 1)
    with pytest.raises(PreconditionError):
        catalog("nope")


def labels(parts):
    return [str(p) for p in parts]


def test_enumerate_maximal_partitions():
    assert labels(enumerate_maximal_partitions(4, 2)) == ["12|34", "13|24", "14|23"]
    five = enumerate_maximal_partitions(5, 3)
    assert len(five) == comb(5, 2) == 10
    assert all(sorted(len(b) for b in p.blocks) == [2, 3] for p in five)
    assert labels(enumerate_maximal_partitions(3, 2)) == ["1|23", "12|3", "13|2"]
    assert labels(enumerate_maximal_partitions(3, 1)) == ["1|2|3"]
    with pytest.raises(PreconditionError):
        enumerate_maximal_partitions(11, 2)


def set_partitions(items):
    if not items:
        yield []
        return
    first, rest = items[0], items[1:]
    for part in set_partitions(rest):
        yield [[first]] + part
        for i in range(len(part)):
            yield part[:i] + [[first] + part[i]] + part[i + 1:]


@pytest.mark.parametrize("n", range(1, 7))
def test_maximal_partitions_against_brute_force(n):
    everything = list(set_partitions(list(range(n))))
    for j in range(1, n + 1):
        small = [p for p in everything if max(map(len, p)) <= j]
        expected = {
            Partition(p) for p in small
            if not any(len(a) + len(b) <= j for i, a in enumerate(p) for b in p[i + 1:])
        }
        got = enumerate_maximal_partitions(n, j)
        assert set(got) == expected and len(got) == len(expected)
        # every admissible partition coarsens to one of the maximal ones
        for p in small:
            assert any(all(any(set(b) <= set(c) for c in q.blocks) for b in p) for q in got)


def test_vector_depth_examples():
    assert vector_depth(expand(qubit_product("000")), [2, 2, 2]) == (1, Partition.singletons(3))
    assert vector_depth(ghz(3), [2, 2, 2]) == (3, Partition([[0, 1, 2]]))
    shor = catalog("shor")
    blocks = Partition([[0, 1, 2], [3, 4, 5], [6, 7, 8]])
    for row in shor.basis:
        assert vector_depth(row, shor.dims) == (3, blocks)
    combo = [F(2) * a + F(-3, 5) * b for a, b in zip(*shor.basis)]
    assert vector_depth(combo, shor.dims)[0] == 9


def test_vector_depth_mixed_dims():
    bell = [1, 0, 0, 1]
    v = linalg.kron(linalg.kron([1, 2, 3], bell), [0, 1])
    depth, finest = vector_depth(v, [3, 2, 2, 2])
    assert depth == 2 and finest == Partition([[0], [1, 2], [3]])
    with pytest.raises(PreconditionError):
        vector_depth([0, 0, 0, 0], [2, 2])


local_vec = st.lists(st.integers(-2, 2), min_size=2, max_size=3).filter(any)


@settings(max_examples=60)
@given(st.lists(local_vec, min_size=2, max_size=4), st.data())
def test_product_properties(factors, data):
    v = ProductVector(factors)
    n = len(factors)
    assert vector_depth(expand(v), v.dims) == (1, Partition.singletons(n))
    blocks = data.draw(st.sampled_from(enumerate_maximal_partitions(n, data.draw(st.integers(1, n)))))
    flat = [q for b in blocks.blocks for q in b]
    if flat == sorted(flat):
        # block-order layout coincides with party order only for contiguous blocks
        assert expand(coarse_grain(v, blocks)) == expand(v)
    assert expand_over_partition(coarse_grain(v, blocks), blocks, v.dims) == expand(v)


@settings(max_examples=30, deadline=None)
@given(st.integers(0, 2), st.integers(1, 5), st.integers(2, 7))
def test_depth_invariant_under_local_scaling(party, a, b):
    v = linalg.kron(ghz(2), linalg.kron([1, 1], [1, 0, 0, 1]))  # 2|1|2 structure over 5 qubits
    dims = [2] * 5
    scale = [F(a), F(b)]
    scaled = []
    for i, x in enumerate(v):
        digit = linalg._digits(i, dims)[party]
        scaled.append(x * scale[digit])
    assert vector_depth(scaled, dims) == vector_depth(v, dims) == (2, Partition([[0, 1], [2], [3, 4]]))


def test_ppt_state_shifts():
    rho, verdicts = ppt_state_from_set(catalog("shifts"))
    assert sum(rho[i][i] for i in range(8)) == 1
    assert linalg.rank(rho) == 4
    assert linalg.psd_check(rho)
    assert verdicts == {"1|23": True, "12|3": True, "13|2": True}
    for v in catalog("shifts").expanded():
        assert all(linalg.dot(row, v) == 0 for row in rho)


def test_ppt_state_single_vector():
    rho, verdicts = ppt_state_from_set(ProductSet([qubit_product("00")]))
    third = F(1, 3)
    assert rho == [tuple(third if i == j and i else 0 for j in range(4)) for i in range(4)]
    assert verdicts == {"1|2": True}


def test_ppt_state_errors():
    basis = ProductSet(qubit_product(s) for s in ["00", "01", "10", "11"])
    with pytest.raises(PreconditionError, match="complement empty"):
        ppt_state_from_set(basis)


def test_ppt_state_random_orthogonal_sets():
    rng = random.Random(5)
    for _ in range(5):
        labels_ = rng.sample(["000", "001", "010", "011", "100", "101", "110", "111"], 3)
        s = ProductSet(qubit_product(x) for x in labels_)
        rho, verdicts = ppt_state_from_set(s)
        assert sum(rho[i][i] for i in range(prod(s.dims))) == 1
        assert linalg.psd_check(rho) and all(verdicts.values())
