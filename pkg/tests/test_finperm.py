import random

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from rigcat import finperm as fp


@st.composite
def perms(draw, max_degree=8):
    n = draw(st.integers(0, max_degree))
    return fp.Perm(draw(st.permutations(list(range(1, n + 1)))))


@st.composite
def perm_pairs(draw, max_degree=7):
    n = draw(st.integers(0, max_degree))
    a = draw(st.permutations(list(range(1, n + 1))))
    b = draw(st.permutations(list(range(1, n + 1))))
    return fp.Perm(a), fp.Perm(b)


def test_compose_applies_right_factor_first():
    g = fp.parse_perm("(2,3)_3")
    f = fp.parse_perm("(1,2)_3")
    assert fp.compose(g, f) == fp.parse_perm("(1,3,2)_3")
    # pointwise definition
    assert all(fp.compose(g, f)(i) == g(f(i)) for i in range(1, 4))


def test_compose_rejects_mismatched_endpoints():
    with pytest.raises(fp.DomainMismatch):
        fp.compose(fp.identity(2), fp.identity(3))


def test_finmap_validation():
    with pytest.raises(ValueError):
        fp.FinMap(2, 2, (1, 3))
    with pytest.raises(ValueError):
        fp.Perm((1, 1))
    with pytest.raises(fp.IndexOutOfRange):
        fp.identity(3)(4)
    m = fp.FinMap(3, 2, (1, 1, 2))
    assert not m.is_bijective()
    with pytest.raises(ValueError):
        m.as_perm()


def test_finmap_is_immutable():
    p = fp.identity(2)
    with pytest.raises(AttributeError):
        p.table = (2, 1)


def test_print_and_parse_examples():
    assert str(fp.identity(3)) == "()_3"
    assert str(fp.identity(0)) == "()_0"
    p = fp.Perm((1, 3, 5, 7, 2, 4, 6, 8))
    assert str(p) == "(2,3,5)(4,7,6)_8"
    assert fp.parse_perm(" ( 4 , 7,6)(2,3,5) _ 8 ") == p


def test_cycles_are_canonicalised():
    c = fp.Cycles(8, ((7, 6, 4), (5, 2, 3)))
    assert c.cycles == ((2, 3, 5), (4, 7, 6))


@pytest.mark.parametrize(
    "text, pos",
    [
        ("(1,2", 4),
        ("(1,2)", 5),
        ("(1,2)_", 6),
        ("(1,2)_3x", 7),
        ("1,2)_3", 0),
        ("(1,)_3", 3),
    ],
)
def test_parse_errors_carry_positions(text, pos):
    with pytest.raises(fp.ParseError) as exc:
        fp.parse_cycles(text)
    assert exc.value.position == pos


@pytest.mark.parametrize("text", ["(1,2)(2,3)_3", "(1,4)_3", "(0,1)_3", "(1)_3"])
def test_parse_rejects_bad_cycles(text):
    with pytest.raises(fp.ParseError):
        fp.parse_cycles(text)


def test_malformed_cycles_object():
    with pytest.raises(fp.MalformedCycles):
        fp.Cycles(3, ((1, 2), (2, 3)))
    with pytest.raises(fp.MalformedCycles):
        fp.Cycles(2, ((1, 3),))


def test_order():
    assert fp.order(fp.parse_perm("(2,3,5)(4,7,6)_8")) == 3
    assert fp.order(fp.parse_perm("(2,3,5,9,8,6)(4,7)_10")) == 6
    assert fp.order(fp.identity(0)) == 1


def test_all_perms_is_lexicographic_and_complete():
    ps = list(fp.all_perms(4))
    assert len(ps) == 24 and len(set(ps)) == 24
    assert [p.table for p in ps] == sorted(p.table for p in ps)


def test_all_maps_count():
    assert len(list(fp.all_maps(3, 2))) == 8
    assert len(list(fp.all_maps(0, 0))) == 1
    assert list(fp.all_maps(2, 0)) == []


def test_adjacent_transposition_bounds():
    assert fp.adjacent_transposition(1, 2) == fp.Perm((2, 1))
    for bad in [(0, 3), (3, 3)]:
        with pytest.raises(fp.IndexOutOfRange):
            fp.adjacent_transposition(*bad)


def test_decompose_exhaustive_small():
    for n in range(6):
        for p in fp.all_perms(n):
            assert fp.recompose(fp.decompose_adjacent(p), n) == p


@given(perms())
def test_cycle_round_trip(p):
    c = fp.to_cycles(p)
    assert fp.from_cycles(c) == p
    assert fp.parse_cycles(fp.print_cycles(c)) == c


@given(perms())
def test_inverse_laws(p):
    e = fp.identity(p.degree)
    assert fp.compose(p, fp.invert(p)) == e
    assert fp.compose(fp.invert(p), p) == e


@given(perm_pairs(), st.integers(0, 2**32))
def test_associativity_and_identity(pair, seed):
    a, b = pair
    c = fp.random_perm(a.degree, random.Random(seed))
    assert fp.compose(a, fp.compose(b, c)) == fp.compose(fp.compose(a, b), c)
    assert fp.compose(a, fp.identity(a.degree)) == a


@given(perms(), st.integers(0, 2**32), st.integers(0, 6))
@settings(max_examples=60)
def test_random_decompositions_spell_the_permutation(p, seed, padding):
    word = fp.random_decomposition(p, random.Random(seed), padding)
    assert fp.recompose(word, p.degree) == p


@given(perms(max_degree=7))
def test_order_kills_permutation(p):
    k = fp.order(p)
    acc = fp.identity(p.degree)
    for _ in range(k):
        acc = fp.compose(p, acc)
    assert acc == fp.identity(p.degree)
