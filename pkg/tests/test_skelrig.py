"""Closed-form structure maps on the skeleton, checked against oracles first."""

import itertools
import random

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from rigcat import finperm as fp
from rigcat import skelrig as sk


def brute_oracle_rdist(m, n, p):
    """Independent dictionary-based rebuild of xz + yz -> (x+y)z.

    Points of xz + yz are labelled by (summand, i, k) in the order of the
    sum; points of (x+y)z by (j, k) with j in [m+n] and the row enumeration.
    """
    src = [("x", i, k) for k in range(1, p + 1) for i in range(1, m + 1)]
    src += [("y", i, k) for k in range(1, p + 1) for i in range(1, n + 1)]
    dst = {}
    for k in range(1, p + 1):
        for j in range(1, m + n + 1):
            dst[(j, k)] = len(dst) + 1
    table = []
    for tag, i, k in src:
        j = i if tag == "x" else m + i
        table.append(dst[(j, k)])
    return fp.Perm(table) if table else fp.identity(0)


# Frozen values produced by brute_oracle_rdist and the skeleton oracles
FROZEN_RDIST = {
    (1, 1, 2): "(2,3)_4",
    (1, 1, 3): "(2,3,5,4)_6",
    (1, 1, 4): "(2,3,5)(4,7,6)_8",
    (1, 1, 5): "(2,3,5,9,8,6)(4,7)_10",
    (2, 1, 2): "(3,4,5)_6",
    (2, 1, 3): "(3,4,5,7)(6,8)_9",
    (1, 2, 2): "(2,4,3)_6",
}
FROZEN_MULT_COMM = {
    (2, 2): "(2,3)_4",
    (3, 2): "(2,3,5,4)_6",
    (2, 3): "(2,4,5,3)_6",
    (3, 3): "(2,4)(3,7)(6,8)_9",
}


def test_frozen_values_come_from_the_oracle():
    for key, text in FROZEN_RDIST.items():
        assert str(brute_oracle_rdist(*key)) == text
        assert str(sk.oracle_right_dist(*key)) == text
    for key, text in FROZEN_MULT_COMM.items():
        assert str(sk.oracle_mult_comm(*key)) == text


@pytest.mark.parametrize("key, text", sorted(FROZEN_RDIST.items()))
def test_right_distributor_frozen(key, text):
    assert str(sk.right_distributor(*key)) == text


@pytest.mark.parametrize("key, text", sorted(FROZEN_MULT_COMM.items()))
def test_mult_commutator_frozen(key, text):
    assert str(sk.mult_commutator(*key)) == text


def test_brute_oracle_agrees_exhaustively():
    for m, n, p in itertools.product(range(5), repeat=3):
        assert sk.right_distributor(m, n, p) == brute_oracle_rdist(m, n, p)


def test_rig_distributor_is_inverse_of_canonical_map():
    for m, n, p in itertools.product(range(4), repeat=3):
        assert fp.compose(sk.rdist(m, n, p), sk.right_distributor(m, n, p)) == fp.identity((m + n) * p)


def test_distributor_special_cases():
    for n in range(6):
        assert sk.right_distributor(n, 1, 1) == fp.identity(n + 1)
        assert sk.right_distributor(1, n, 1) == fp.identity(n + 1)
        assert sk.right_distributor(0, n, 3) == fp.identity(3 * n)
    for n in range(1, 8):
        table = [2 * s - 1 for s in range(1, n + 1)] + [2 * (s - n) for s in range(n + 1, 2 * n + 1)]
        assert sk.right_distributor(1, 1, n).table == tuple(table)


def test_commutator_examples():
    assert str(sk.add_commutator(1, 2)) == "(1,3,2)_3"
    assert str(sk.add_commutator(0, 5)) == "()_5"
    assert str(sk.add_commutator(5, 0)) == "()_5"
    for n in range(1, 8):
        assert sk.mult_commutator(1, n) == fp.identity(n)
        assert sk.mult_commutator(n, 1) == fp.identity(n)
        evens_odds = [n + k // 2 if k % 2 == 0 else (k + 1) // 2 for k in range(1, 2 * n + 1)]
        assert sk.mult_commutator(2, n).table == tuple(evens_odds)
    assert sk.mult_commutator(0, 4) == fp.identity(0)


def test_sum_and_product_examples():
    swap = fp.Perm((2, 1))
    assert str(sk.prod_map(swap, fp.identity(2))) == "(1,2)(3,4)_4"
    assert str(sk.prod_map(fp.identity(2), swap)) == "(1,3)(2,4)_4"
    assert str(sk.sum_map(swap, swap)) == "(1,2)(3,4)_4"
    empty = sk.prod_map(fp.identity(0), fp.identity(3))
    assert (empty.dom, empty.cod) == (0, 0)
    f = fp.FinMap(2, 3, (3, 1))
    assert sk.sum_map(f, fp.identity(1)).table == (3, 1, 4)


def test_mod_remainder():
    assert [sk.mod_remainder(3, x) for x in range(1, 7)] == [1, 2, 3, 1, 2, 3]
    with pytest.raises(sk.ZeroModulus):
        sk.mod_remainder(0, 5)


def test_left_distributor_and_injections():
    assert sk.left_distributor(2, 1, 3) == fp.identity(8)
    i1, i2 = sk.injections(2, 3)
    assert i1.table == (1, 2) and i2.table == (3, 4, 5)


def test_projections_match_row_enumeration():
    p1, p2 = sk.projections(3, 2)
    idx = sk.PairIndexing(3, 2, "multiplicative")
    for k in range(1, 7):
        assert (p1(k), p2(k)) == idx.unindex(k)
    with pytest.raises(sk.InvalidProjection):
        sk.projections(0, 2)


def test_pair_indexing_round_trip_and_errors():
    for direction in ("additive", "multiplicative"):
        idx = sk.PairIndexing(3, 4, direction)
        size = 7 if direction == "additive" else 12
        for k in range(1, size + 1):
            assert idx.index(idx.unindex(k)) == k
        with pytest.raises(sk.RangeError):
            idx.unindex(size + 1)
    with pytest.raises(sk.RangeError):
        sk.PairIndexing(2, 2).index((3, 0))
    with pytest.raises(ValueError):
        sk.PairIndexing(1, 1, "sideways")


def test_sigma_factor():
    assert sk.sigma_factor(2, 2) == fp.parse_perm("(2,3)_4")
    assert sk.sigma_factor(2, 3) == fp.parse_perm("(2,3)(4,5)_6")
    for bad in [(1, 3), (4, 3)]:
        with pytest.raises(fp.IndexOutOfRange):
            sk.sigma_factor(*bad)
    assert sk.distributor_via_sigma(1) == fp.identity(2)


def test_skel_object():
    assert sk.SkelObject(3).size == 3
    with pytest.raises(ValueError):
        sk.SkelObject(-1)


def test_oracles_exhaustive_small():
    for m, n in itertools.product(range(6), repeat=2):
        assert sk.add_commutator(m, n) == sk.oracle_add_comm(m, n)
        assert sk.mult_commutator(m, n) == sk.oracle_mult_comm(m, n)
    maps = [f for m in range(3) for n in range(3) for f in fp.all_maps(m, n)]
    for f, g in itertools.product(maps, maps):
        assert sk.sum_map(f, g) == sk.oracle_sum(f, g)
        assert sk.prod_map(f, g) == sk.oracle_prod(f, g)


sizes = st.integers(0, 6)


@given(sizes, sizes, sizes, sizes, st.integers(0, 2**32))
@settings(max_examples=150)
def test_sum_and_product_are_functorial(m, n, p, q, seed):
    rng = random.Random(seed)
    f1, f2 = fp.random_perm(m, rng), fp.random_perm(m, rng)
    g1, g2 = fp.random_perm(n, rng), fp.random_perm(n, rng)
    assert fp.compose(sk.sum_map(f2, g2), sk.sum_map(f1, g1)) == sk.sum_map(fp.compose(f2, f1), fp.compose(g2, g1))
    assert fp.compose(sk.prod_map(f2, g2), sk.prod_map(f1, g1)) == sk.prod_map(fp.compose(f2, f1), fp.compose(g2, g1))


@given(sizes, sizes, sizes)
def test_strict_associativity_of_maps(m, n, p):
    rng = random.Random(m * 100 + n * 10 + p)
    a, b, c = (fp.random_perm(k, rng) for k in (m, n, p))
    assert sk.sum_map(sk.sum_map(a, b), c) == sk.sum_map(a, sk.sum_map(b, c))
    assert sk.prod_map(sk.prod_map(a, b), c) == sk.prod_map(a, sk.prod_map(b, c))


@given(sizes, sizes)
def test_commutators_are_self_inverse_pairs(m, n):
    assert fp.compose(sk.add_commutator(n, m), sk.add_commutator(m, n)) == fp.identity(m + n)
    assert fp.compose(sk.mult_commutator(n, m), sk.mult_commutator(m, n)) == fp.identity(m * n)


@given(st.integers(1, 5), st.integers(1, 5), st.integers(0, 2**32))
def test_oracle_prod_random_maps(m, n, seed):
    rng = random.Random(seed)
    f = fp.random_map(m, rng.randint(1, 5), rng)
    g = fp.random_map(n, rng.randint(1, 5), rng)
    assert sk.prod_map(f, g) == sk.oracle_prod(f, g)
    assert sk.sum_map(f, g) == sk.oracle_sum(f, g)
