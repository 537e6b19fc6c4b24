from math import comb

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from amplevanish.partitions import Partition, add_rectangle, partitions_of, partitions_up_to
from amplevanish.schur import (
    ZERO,
    DecompositionMultiset,
    dim_schur,
    hook_partition,
    pieri_sym,
    pieri_wedge,
    product_decompose,
    sym,
    tensor_multiplicity,
    wedge,
)

from .oracles import dim_product, product_oracle, syt_count, weyl_dim


def _as_dict(decomp: DecompositionMultiset) -> dict:
    return {tuple(lam): m for lam, m in decomp.items()}


def test_dim_examples():
    for v in range(1, 7):
        assert dim_schur((1,) * v, v) == 1
        assert dim_schur((), v) == 1
    assert dim_schur((2, 1), 3) == 8
    for v in range(1, 6):
        for k in range(7):
            assert dim_schur((k,), v) == comb(v + k - 1, k)


def test_dim_matches_weyl():
    for v in range(1, 6):
        for lam in partitions_up_to(10, max_length=v):
            assert dim_schur(lam, v) == weyl_dim(lam, v)


def test_dim_zero_when_too_long():
    assert dim_schur((1, 1, 1), 2) == 0


def test_dim_is_exact_for_large_values():
    # far past 64 bits
    d = dim_schur((40, 30, 20, 10), 12)
    assert d == weyl_dim((40, 30, 20, 10), 12)
    assert d > 2**64


def test_pieri_examples():
    assert _as_dict(pieri_sym((), 3, 4)) == {(3,): 1}
    assert _as_dict(pieri_sym((1,), 1, 2)) == {(2,): 1, (1, 1): 1}
    assert _as_dict(pieri_sym((1,), 1, 1)) == {(2,): 1}
    assert _as_dict(pieri_wedge((), 2, 3)) == {(1, 1): 1}
    assert _as_dict(pieri_wedge((), 4, 3)) == {}
    assert _as_dict(pieri_wedge((1,), 1, 2)) == {(2,): 1, (1, 1): 1}
    assert _as_dict(pieri_wedge((2,), 2, 3)) == {(3, 1): 1, (2, 1, 1): 1}


def test_pieri_dimension_identities():
    for v in range(1, 6):
        for lam in partitions_up_to(10, max_length=v):
            d = dim_schur(lam, v)
            for k in range(5):
                assert d * comb(v + k - 1, k) == pieri_sym(lam, k, v).total_dimension(v)
                assert d * comb(v, k) == pieri_wedge(lam, k, v).total_dimension(v)


def test_pieri_keys_respect_rank_bound():
    for lam in partitions_up_to(6, max_length=3):
        for k in range(4):
            assert all(mu.length <= 3 for mu in pieri_sym(lam, k, 3))
            assert all(mu.length <= 3 for mu in pieri_wedge(lam, k, 3))


def test_product_examples():
    assert _as_dict(product_decompose([sym(2)], 3)) == {(2,): 1}
    assert _as_dict(product_decompose([sym(1)] * 3, 3)) == {(3,): 1, (2, 1): 2, (1, 1, 1): 1}
    for u in range(1, 4):
        for m in range(1, 4):
            got = _as_dict(product_decompose([sym(u), wedge(m)], u + m))
            assert got == {(u + 1,) + (1,) * (m - 1): 1, (u,) + (1,) * m: 1}


@pytest.mark.parametrize(
    "syms,wedges,v",
    [((2, 1), (1,), 3), ((1, 1, 1, 1), (), 3), ((), (2, 2), 4), ((3,), (2, 1), 3), ((2, 2), (1,), 2), ((1,), (3, 2), 4)],
)
def test_product_against_bialternant(syms, wedges, v):
    factors = [sym(k) for k in syms] + [wedge(j) for j in wedges]
    assert _as_dict(product_decompose(factors, v)) == product_oracle(syms, wedges, v)


def test_product_dimension_identity():
    for v in range(1, 5):
        for syms, wedges in [((2, 1), (1,)), ((3,), (2,)), ((1, 1), (1, 1)), ((), (1, 2, 1))]:
            factors = [sym(k) for k in syms] + [wedge(j) for j in wedges]
            assert product_decompose(factors, v).total_dimension(v) == dim_product(syms, wedges, v)


factor_st = st.lists(st.tuples(st.sampled_from("SW"), st.integers(0, 3)), max_size=4)


@settings(max_examples=60, deadline=None)
@given(factor_st, st.randoms(use_true_random=False), st.integers(1, 4))
def test_product_is_order_independent(spec, rnd, v):
    factors = [sym(x) if kind == "S" else wedge(x) for kind, x in spec]
    shuffled = list(factors)
    rnd.shuffle(shuffled)
    assert _as_dict(product_decompose(factors, v)) == _as_dict(product_decompose(shuffled, v))


@pytest.mark.parametrize("lam,m", [((4,), 1), ((2, 1), 2), ((2, 2), 2), ((), 1)])
def test_multiplicity_examples(lam, m):
    assert tensor_multiplicity(lam) == m


def test_multiplicity_is_syt_count_and_pieri_coefficient():
    for n in range(8):
        decomp = product_decompose([sym(1)] * n, n or 1)
        for lam in partitions_of(n):
            assert tensor_multiplicity(lam) == syt_count(tuple(lam))
            assert decomp.get(lam) == tensor_multiplicity(lam)


def test_tensor_power_identity():
    for v in range(1, 6):
        for k in range(7):
            total = sum(tensor_multiplicity(lam) * dim_schur(lam, v) for lam in partitions_of(k, max_length=v))
            assert total == v**k


def test_hook_partition_conventions():
    e = 4
    for j in range(1, e + 1):
        assert hook_partition(0, j, e) == (1,) * j
    for k in range(5):
        assert hook_partition(k, e, e) == (k + 1,) + (1,) * (e - 1)
        assert hook_partition(k, e, e) == add_rectangle((k,), 1, e)
        assert hook_partition(k, 1, e) == (k + 1,)
    assert hook_partition(-2, 3, e) is ZERO
    assert hook_partition(-1, 0, e) == ()
    assert hook_partition(-1, 0, e) is not ZERO
    assert hook_partition(2, 0, e) is ZERO
    assert hook_partition(2, e + 1, e) is ZERO
    assert hook_partition(-1, 2, e) is ZERO


def _dim_or_zero(h, v):
    return 0 if h is ZERO else dim_schur(h, v)


def test_hook_pieri_identity():
    for v in range(2, 9):
        for u in range(1, v):
            for m in range(1, v - u + 1):
                lhs = dim_schur((u,), v) * dim_schur((1,) * m, v)
                rhs = _dim_or_zero(hook_partition(u, m, v), v) + _dim_or_zero(hook_partition(u - 1, m + 1, v), v)
                assert lhs == rhs


def test_multiset_json():
    decomp = product_decompose([sym(1), sym(1)], 2)
    assert decomp.to_json() == [{"partition": [1, 1], "mult": "1"}, {"partition": [2], "mult": "1"}]
    big = product_decompose([sym(1)] * 9, 9)
    assert big.to_json()[0]["mult"] == "1"
    assert all(isinstance(x["mult"], str) for x in big.to_json())


def test_multiset_stores_no_zeros():
    decomp = DecompositionMultiset({Partition((2,)): 0, Partition((1, 1)): 3})
    assert list(decomp) == [(1, 1)]
    assert decomp.get((2,)) == 0
