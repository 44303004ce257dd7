import itertools
from math import comb

import pytest
from hypothesis import given, strategies as st

from colorhopf import words
from colorhopf.words import (
    EMPTY,
    breakpoints,
    colored_standardize,
    connected_factorization,
    convolution,
    descents,
    enumerate_keys,
    inversions,
    is_connected,
    is_parking,
    is_prime_parking,
    matches,
    parkize,
    restrict_interval,
    shifted_concat,
    shifted_shuffles,
    standardize,
    wreath_identity,
    wreath_inverse,
    wreath_mul,
)

CONNECTED_COUNTS = {1: 1, 2: 1, 3: 3, 4: 13, 5: 71, 6: 461}


def brute_standardize(word):
    # independent oracle: the unique permutation sharing the inversion
    # set of the word, found by exhaustive search
    n = len(word)
    hits = [
        p
        for p in itertools.permutations(range(1, n + 1))
        if inversions(p) == inversions(word)
    ]
    assert len(hits) == 1
    return hits[0]


def test_standardize_golden():
    assert standardize((3, 1, 3, 2)) == brute_standardize((3, 1, 3, 2)) == (3, 1, 4, 2)
    assert standardize(()) == ()
    assert standardize((1, 2, 3)) == (1, 2, 3)


def test_standardize_inversions_exhaustive():
    for k in range(7):
        for w in itertools.product(range(1, 5), repeat=k):
            assert inversions(standardize(w)) == inversions(w)


@given(st.lists(st.integers(min_value=1, max_value=9), max_size=8))
def test_standardize_is_stable_permutation(w):
    s = standardize(tuple(w))
    assert sorted(s) == list(range(1, len(w) + 1))
    # ties are numbered left to right
    for i in range(len(w)):
        for j in range(i + 1, len(w)):
            if w[i] == w[j]:
                assert s[i] < s[j]


def test_colored_standardize():
    assert colored_standardize(((2, 1, 2), (0, 1, 0))) == ((2, 1, 3), (0, 1, 0))
    assert colored_standardize(((3, 1, 3, 2), (0, 1, 1, 0))) == ((3, 1, 4, 2), (0, 1, 1, 0))
    assert colored_standardize(EMPTY) == EMPTY
    with pytest.raises(ValueError):
        colored_standardize(((1, 2), (0,)))


def brute_convolution(p1, p2):
    # literal definition: filter every permutation of the right size
    n = len(p1) + len(p2)
    return sorted(
        t
        for t in itertools.permutations(range(1, n + 1))
        if standardize(t[: len(p1)]) == p1 and standardize(t[len(p1):]) == p2
    )


def test_convolution():
    assert convolution((1,), (1,)) == [(1, 2), (2, 1)]
    assert convolution((1, 2), (1,)) == [(1, 2, 3), (1, 3, 2), (2, 3, 1)]
    assert convolution((), (2, 1)) == [(2, 1)]
    for n1 in range(4):
        for n2 in range(4 - n1):
            for p1 in itertools.permutations(range(1, n1 + 1)):
                for p2 in itertools.permutations(range(1, n2 + 1)):
                    got = convolution(p1, p2)
                    assert got == brute_convolution(p1, p2)
                    assert len(got) == comb(n1 + n2, n1)


def test_shifted_concat():
    assert shifted_concat(((1,), (0,)), ((1,), (1,))) == ((1, 2), (0, 1))
    assert shifted_concat(((2, 1), (0, 1)), ((2, 1), (1, 0))) == ((2, 1, 4, 3), (0, 1, 1, 0))
    assert shifted_concat(EMPTY, ((2, 1), (0, 0))) == ((2, 1), (0, 0))


def test_shifted_shuffles():
    got = sorted(shifted_shuffles(((1,), (0,)), ((1,), (1,))))
    assert got == [((1, 2), (0, 1)), ((2, 1), (1, 0))]
    # cardinality and no duplicates
    out = list(shifted_shuffles(((1, 2), (0, 1)), ((2, 1), (1, 0))))
    assert len(out) == comb(4, 2) == len(set(out))


def test_is_connected():
    assert is_connected((3, 1, 4, 2))
    assert not is_connected((1, 2))
    assert is_connected((1,))
    with pytest.raises(ValueError):
        is_connected(())
    for n, expected in CONNECTED_COUNTS.items():
        got = sum(1 for p in itertools.permutations(range(1, n + 1)) if is_connected(p))
        assert got == expected


def test_connected_factorization():
    assert connected_factorization(((1, 2), (0, 1))) == [((1,), (0,)), ((1,), (1,))]
    assert connected_factorization(((3, 1, 4, 2), (2, 4, 1, 2))) == [((3, 1, 4, 2), (2, 4, 1, 2))]
    assert connected_factorization(((2, 1, 4, 3), (0, 1, 1, 0))) == [((2, 1), (0, 1)), ((2, 1), (1, 0))]
    assert connected_factorization(EMPTY) == []


def test_connected_factorization_roundtrip():
    for n in range(6):
        for key in words.iter_colored_permutations(n, 2):
            factors = connected_factorization(key)
            assert all(is_connected(f[0]) for f in factors)
            back = EMPTY
            for f in factors:
                back = shifted_concat(back, f)
            assert back == key


def test_restrict_interval():
    p = ((3, 1, 4, 2), (2, 4, 1, 2))
    assert restrict_interval(p, 1, 2) == ((1, 2), (4, 2))
    assert restrict_interval(p, 3, 4) == ((1, 2), (2, 1))
    assert restrict_interval(p, 1, 4) == p
    assert restrict_interval(p, 1, 0) == EMPTY
    assert restrict_interval(p, 5, 4) == EMPTY
    with pytest.raises(ValueError):
        restrict_interval(p, 0, 2)
    with pytest.raises(ValueError):
        restrict_interval(p, 1, 5)


def test_wreath_golden():
    assert wreath_mul(((1, 2), (1, 0)), ((2, 1), (0, 0)), 2) == ((2, 1), (0, 1))
    h = ((3, 1, 2), (1, 0, 1))
    assert wreath_mul(wreath_identity(3), h, 2) == h
    assert wreath_mul(h, wreath_identity(3), 2) == h
    with pytest.raises(ValueError):
        wreath_mul(h, ((1, 2), (0, 0)), 2)


def test_wreath_inverse_by_search():
    # brute-force the unique inverse of (21; 1,0) in S_2 x (Z/2)^2
    h = ((2, 1), (1, 0))
    hits = [
        g
        for g in words.iter_colored_permutations(2, 2)
        if wreath_mul(h, g, 2) == wreath_identity(2)
        and wreath_mul(g, h, 2) == wreath_identity(2)
    ]
    assert hits == [wreath_inverse(h, 2)]
    # diagonal subgroup
    assert wreath_inverse(((1, 2, 3), (1, 0, 1)), 2) == ((1, 2, 3), (1, 0, 1))
    assert wreath_inverse(((1, 2, 3), (1, 2, 0)), 3) == ((1, 2, 3), (2, 1, 0))
    assert wreath_inverse(((1, 2), (0, 0)), 2) == ((1, 2), (0, 0))


def test_wreath_group_axioms():
    group = list(words.iter_colored_permutations(3, 2))
    assert len(group) == 48
    for h in group:
        hh = wreath_inverse(h, 2)
        assert wreath_mul(h, hh, 2) == wreath_identity(3)
        assert wreath_mul(hh, h, 2) == wreath_identity(3)
    for a in group:
        for b in group:
            ab = wreath_mul(a, b, 2)
            for c in group:
                assert wreath_mul(ab, c, 2) == wreath_mul(a, wreath_mul(b, c, 2), 2)


def iterate_decrement_rule(word):
    # independent restatement of the projection rule used as the oracle
    w = tuple(word)
    while not is_parking(w):
        d = min(i for i in range(1, len(w) + 1) if sum(1 for v in w if v <= i) < i)
        w = tuple(v - 1 if v > d else v for v in w)
    return w


def test_parkize_golden():
    assert parkize((5, 2, 6)) == iterate_decrement_rule((5, 2, 6)) == (2, 1, 3)
    assert parkize((1, 1, 1)) == (1, 1, 1)
    assert parkize((2, 2)) == iterate_decrement_rule((2, 2)) == (1, 1)
    assert parkize((4, 1, 4)) == iterate_decrement_rule((4, 1, 4)) == (2, 1, 2)
    assert parkize(()) == ()


def test_parkize_properties():
    for n in range(1, 5):
        image = set()
        for w in itertools.product(range(1, n + 1), repeat=n):
            p = parkize(w)
            assert is_parking(p)
            assert parkize(p) == p
            image.add(p)
        assert image == set(words.iter_parking_words(n))


def test_breakpoints():
    assert breakpoints((1, 1, 2, 2)) == {4}
    assert breakpoints((1, 1, 2, 4)) == {3, 4}
    for n in range(1, 6):
        assert breakpoints(tuple(range(1, n + 1))) == set(range(1, n + 1))


def test_matches():
    assert matches((1, 1, 3, 3)) == {1, 3}
    assert matches((1, 1, 2, 2)) == {1}
    assert matches((1,)) == {1}


def test_breakpoint_implies_match():
    # a breakpoint b with #{a_i < b} = b-1 satisfies the match condition
    # (the implication fails without that qualifier, e.g. b=4 in 1122)
    for n in range(1, 7):
        for a in words.iter_parking_words(n):
            bp = breakpoints(a)
            assert n in bp
            ma = matches(a)
            for b in bp:
                if sum(1 for v in a if v < b) == b - 1:
                    assert b in ma
    assert 4 in breakpoints((1, 1, 2, 2)) and 4 not in matches((1, 1, 2, 2))


def test_is_prime_parking():
    assert is_prime_parking((1, 1))
    assert not is_prime_parking((1, 2))
    with pytest.raises(ValueError):
        is_prime_parking(())
    for n, expected in {1: 1, 2: 1, 3: 4, 4: 27, 5: 256, 6: 3125}.items():
        got = sum(1 for a in words.iter_parking_words(n) if is_prime_parking(a))
        assert got == expected == max(n - 1, 1) ** (n - 1)


def test_descents():
    assert descents((3, 1, 4, 2)) == {1, 3}
    assert descents((1, 2, 3)) == set()
    assert descents(()) == set()


def test_enumerate_counts():
    assert len(list(enumerate_keys("parking", 3))) == 16
    assert len(list(enumerate_keys("colored_parking", 3, 2))) == 128
    assert len(list(enumerate_keys("colored_permutations", 2, 2))) == 8
    for n in range(1, 7):
        assert len(list(enumerate_keys("parking", n))) == (n + 1) ** (n - 1)
    for n in range(7):
        ndpf = list(enumerate_keys("ndpf", n))
        assert len(ndpf) == comb(2 * n, n) // (n + 1)  # Catalan
        assert all(w == tuple(sorted(w)) and is_parking(w) for w in ndpf)
    assert len(list(enumerate_keys("connected", 4))) == 13
    assert len(list(enumerate_keys("prime_ndpf", 4))) == sum(
        1 for w in enumerate_keys("ndpf", 4) if is_prime_parking(w)
    )


def test_enumerate_is_sorted_and_duplicate_free():
    for kind, n, l in [
        ("permutations", 4, 1),
        ("colored_permutations", 3, 2),
        ("parking", 4, 1),
        ("colored_parking", 3, 2),
        ("ndpf", 5, 1),
        ("connected", 4, 1),
    ]:
        seq = list(enumerate_keys(kind, n, l))
        assert seq == sorted(set(seq))
    with pytest.raises(ValueError):
        list(enumerate_keys("nope", 2))
