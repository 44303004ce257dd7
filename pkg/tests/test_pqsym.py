import itertools

import pytest

from colorhopf import pqsym, words
from colorhopf.lincomb import TensorComb, tensor, tensor_mul
from colorhopf.pqsym import (
    antipode,
    counit,
    element,
    f_to_p,
    is_type_b,
    iter_ncb,
    iter_type_b,
    ncb_count,
    ncb_series,
    ndpf_factorize,
    p_concat,
    p_expand,
    p_mul,
    pairing,
    pairing2,
    pf_comul,
    pf_mul,
    pg_comul,
    pg_mul,
    type_b_closure,
    type_b_count,
    unit,
    validate_key,
)

L = 2


def G(key, l=L):
    return element(l, {key: 1})


def F(key, l=L):
    return element(l, {key: 1}, "F")


def keys_of(n, l=L):
    return list(words.iter_colored_parking(n, l))


def test_pg_mul_golden():
    got = pg_mul(G(((1,), (0,))), G(((1,), (1,))))
    assert got == element(L, {
        ((1, 1), (0, 1)): 1, ((1, 2), (0, 1)): 1, ((2, 1), (0, 1)): 1,
    })
    k = ((1, 1, 2), (0, 1, 0))
    assert pg_mul(unit(L), G(k)) == G(k)


def test_pg_mul_matches_exhaustive_filter():
    # term counts against the defining filter over all parking words
    for k1 in keys_of(1):
        for k2 in keys_of(2):
            got = pg_mul(G(k1), G(k2))
            expected = {
                (a, k1[1] + k2[1])
                for a in words.iter_parking_words(3)
                if words.parkize(a[:1]) == k1[0] and words.parkize(a[1:]) == k2[0]
            }
            assert set(got.terms) == expected
            assert all(c == 1 for c in got.terms.values())


def test_pg_mul_supports_are_parking():
    for n1 in range(1, 3):
        for n2 in range(1, 5 - n1):
            for k1 in keys_of(n1):
                for k2 in keys_of(n2):
                    for key in pg_mul(G(k1), G(k2)).terms:
                        validate_key(key, L)


def test_pg_comul_golden():
    key = ((1, 1, 2, 4), (0, 0, 0, 0))
    assert pg_comul(G(key)) == TensorComb("PQSym", "G", L, {
        (((), ()), key): 1,
        ((((1, 1, 2), (0, 0, 0))), ((1,), (0,))): 1,
        (key, ((), ())): 1,
    })
    key2 = ((1, 1, 2, 2), (0, 0, 0, 0))
    assert pg_comul(G(key2)) == TensorComb("PQSym", "G", L, {
        (((), ()), key2): 1, (key2, ((), ())): 1,
    })
    prim = ((1,), (1,))
    assert pg_comul(G(prim)) == TensorComb("PQSym", "G", L, {
        (((), ()), prim): 1, (prim, ((), ())): 1,
    })


def test_coproduct_splits_values_not_positions():
    # 213 has breakpoints everywhere; the cut at 1 keeps the color of
    # the letter 1, which sits in the second position
    key = ((2, 1, 3), (0, 1, 0))
    t = pg_comul(G(key))
    assert t.terms[(((1,), (1,)), ((1, 2), (0, 0)))] == 1


def test_counit_and_coassociativity():
    for n in range(4):
        for key in keys_of(n):
            t = pg_comul(G(key))
            left = sum(c for (a, b), c in t.terms.items() if a == ((), ()) and b == key)
            right = sum(c for (a, b), c in t.terms.items() if b == ((), ()) and a == key)
            assert left == right == 1
            lhs, rhs = {}, {}
            for (a, b), c in t.terms.items():
                for (a1, a2), c2 in pg_comul(G(a)).terms.items():
                    lhs[(a1, a2, b)] = lhs.get((a1, a2, b), 0) + c * c2
                for (b1, b2), c2 in pg_comul(G(b)).terms.items():
                    rhs[(a, b1, b2)] = rhs.get((a, b1, b2), 0) + c * c2
            assert {k: v for k, v in lhs.items() if v} == {k: v for k, v in rhs.items() if v}
    assert counit(unit(L)) == 1
    assert counit(G(((1,), (0,)))) == 0


def test_associativity():
    for n1, n2, n3 in itertools.product(range(2), range(2), range(2)):
        for k1 in keys_of(n1 + 1):
            for k2 in keys_of(n2 + 1):
                left = pg_mul(G(k1), G(k2))
                for k3 in keys_of(n3 + 1):
                    if n1 + n2 + n3 > 1:
                        continue
                    assert pg_mul(left, G(k3)) == pg_mul(G(k1), pg_mul(G(k2), G(k3)))


def test_bialgebra_compatibility():
    for n1 in range(3):
        for n2 in range(4 - n1):
            for k1 in keys_of(n1):
                for k2 in keys_of(n2):
                    lhs = pg_comul(pg_mul(G(k1), G(k2)))
                    rhs = tensor_mul(pg_comul(G(k1)), pg_comul(G(k2)), pg_mul)
                    assert lhs == rhs


def test_antipode_identities():
    for n in range(4):
        for key in keys_of(n):
            x = G(key)
            left = element(L, {})
            right = element(L, {})
            for (k1, k2), c in pg_comul(x).terms.items():
                left = left + pg_mul(antipode(G(k1)), G(k2)) * c
                right = right + pg_mul(G(k1), antipode(G(k2))) * c
            expected = unit(L) * counit(x)
            assert left == expected
            assert right == expected


def test_pf_mul_golden():
    assert pf_mul(F(((1,), (0,))), F(((1,), (0,)))) == element(L, {
        ((1, 2), (0, 0)): 1, ((2, 1), (0, 0)): 1,
    }, "F")
    assert pf_mul(F(((1,), (0,))), F(((1,), (1,)))) == element(L, {
        ((1, 2), (0, 1)): 1, ((2, 1), (1, 0)): 1,
    }, "F")


def test_duality():
    for n in range(4):
        for nv in range(n + 1):
            for u in keys_of(n):
                du = pg_comul(G(u))
                for v in keys_of(nv):
                    for w in keys_of(n - nv):
                        lhs = pairing2(tensor(F(v), F(w)), du)
                        rhs = pairing(pf_mul(F(v), F(w)), G(u))
                        assert lhs == rhs


def test_uncolored_specialization():
    # at one color the G product and coproduct restrict to a parking
    # function bialgebra of the right dimensions
    for n in range(1, 5):
        keys = keys_of(n, 1)
        assert len(keys) == (n + 1) ** (n - 1)
    x = pg_mul(G(((1,), (0,)), 1), G(((1,), (0,)), 1))
    assert set(x.terms) == {((1, 1), (0, 0)), ((1, 2), (0, 0)), ((2, 1), (0, 0))}


# --- type B ----------------------------------------------------------


ELEVEN = [
    ((1, 1, 1), (1, 0, 0)), ((1, 1, 1), (1, 1, 0)), ((1, 1, 2), (1, 0, 0)),
    ((1, 2, 1), (1, 0, 0)), ((2, 1, 1), (0, 1, 0)), ((1, 1, 3), (1, 0, 0)),
    ((1, 3, 1), (1, 0, 0)), ((3, 1, 1), (0, 1, 0)), ((1, 2, 2), (0, 1, 0)),
    ((2, 1, 2), (1, 0, 0)), ((2, 2, 1), (1, 0, 0)),
]


def test_type_b_size_3_golden():
    got = set(iter_type_b(3))
    assert len(got) == 27
    for key in ELEVEN:
        assert key in got
        assert is_type_b(key)
    plain = {(a, (0, 0, 0)) for a in words.iter_parking_words(3)}
    assert plain <= got
    assert got == plain | set(ELEVEN)


def test_type_b_size_4_boundary():
    assert not is_type_b(((1, 1, 2, 2), (0, 0, 1, 0)))
    assert not is_type_b(((1, 1, 2, 2), (1, 0, 1, 0)))
    assert is_type_b(((1, 1, 3, 3), (0, 0, 1, 0)))
    assert is_type_b(((1, 1, 3, 3), (1, 0, 1, 0)))
    with pytest.raises(ValueError):
        is_type_b(((1,), (0,)), l=3)


def test_type_b_counts():
    for n in range(1, 7):
        assert type_b_count(n) == n**n
    for n in range(1, 5):
        enumerated = list(iter_type_b(n))
        assert len(enumerated) == n**n
        assert len(set(enumerated)) == n**n
        assert all(is_type_b(k) for k in enumerated)
    with pytest.raises(ValueError):
        type_b_count(8)


def test_type_b_closure():
    assert type_b_closure(4)
    # negative control: a non-type-B start produces non-type-B terms
    bad = ((1, 1), (1, 1))
    assert not is_type_b(bad)
    prod = pg_mul(G(bad), G(bad))
    assert any(not is_type_b(k) for k in prod.terms)


# --- non-crossing partitions of type B ---------------------------------


def test_ndpf_factorize():
    assert ndpf_factorize((1, 1, 3, 4)) == [(1, 1), (1,), (1,)]
    assert ndpf_factorize((1, 1, 2, 3)) == [(1, 1, 2, 3)]
    assert ndpf_factorize(()) == []
    with pytest.raises(ValueError):
        ndpf_factorize((2, 1))
    with pytest.raises(ValueError):
        ndpf_factorize((2, 2))
    for n in range(1, 7):
        for b in words.iter_ndpf(n):
            factors = ndpf_factorize(b)
            assert all(words.is_prime_parking(f) for f in factors)
            rebuilt = []
            shift = 0
            for f in factors:
                rebuilt.extend(v + shift for v in f)
                shift += len(f)
            assert tuple(rebuilt) == b


def test_ncb_counts():
    assert ncb_count(2, 2) == 6
    for n in range(9):
        from math import comb
        assert ncb_count(n, 2) == comb(2 * n, n)
    assert ncb_series(2, 8) == [ncb_count(n, 2) for n in range(9)]
    assert ncb_series(3, 6) == [ncb_count(n, 3) for n in range(7)]
    assert ncb_series(1, 4) == [1, 1, 2, 5, 14]
    assert len(list(iter_ncb(3, 2))) == 20


def test_p_expand_golden():
    assert p_expand((((1,),), (0,)), L) == F(((1,), (0,)))
    assert p_expand((((1,), (1,)), (0, 0)), L) == element(L, {
        ((1, 2), (0, 0)): 1, ((2, 1), (0, 0)): 1,
    }, "F")
    two = p_expand((((1, 1),), (1,)), L)
    assert two == F(((1, 1), (1, 1)))


def test_p_span_closed_under_product():
    for total in range(2, 5):
        for n1 in range(1, total):
            for pi in iter_ncb(n1, L):
                x = element(L, {pi: 1}, "P")
                for sigma in iter_ncb(total - n1, L):
                    y = element(L, {sigma: 1}, "P")
                    assert p_mul(x, y) == element(L, {p_concat(pi, sigma): 1}, "P")


def test_p_span_cocommutative():
    for n in range(1, 5):
        for pi in iter_ncb(n, L):
            t = pf_comul(p_expand(pi, L))
            assert t.swap() == t


def test_f_to_p_roundtrip_and_errors():
    for n in range(1, 4):
        for pi in iter_ncb(n, L):
            assert f_to_p(p_expand(pi, L)) == element(L, {pi: 1}, "P")
    with pytest.raises(ValueError):
        f_to_p(F(((2, 1), (0, 0))))  # incomplete rearrangement class
    with pytest.raises(ValueError):
        f_to_p(F(((1, 2), (0, 1))) + F(((2, 1), (0, 1))))  # mixed factor colors
