"""Colored parking quasi-symmetric functions.

G and F bases are labelled by colored parking functions (word, colors).
The G product sums over parking words whose prefix and suffix parkize to
the factors; the G coproduct cuts at breakpoints, restricting to value
intervals exactly as in the free quasi-symmetric case (the part above
the cut is parkized, which shifts it down).  The F basis is the graded
dual: shifted shuffle and positional deconcatenation.

At two colors, the keys obeying the three match/color rules form the
parking functions of type B (counted by n^n), and the G span over them
is a Hopf subalgebra.  Colored maximal factorizations of non-decreasing
parking words into prime factors play the role of non-crossing
partitions of type B; the sums P over rearrangement classes span a
cocommutative Hopf subalgebra with P^pi P^sigma = P^{pi . sigma}.
"""

from __future__ import annotations

import itertools
from fractions import Fraction

from . import series, words
from .lincomb import LinComb, TensorComb, bilinear, graded_antipode

ALGEBRA = "PQSym"


def element(l: int, terms, basis: str = "G") -> LinComb:
    return LinComb(ALGEBRA, basis, l, terms)


def unit(l: int, basis: str = "G") -> LinComb:
    return element(l, {((), ()): 1}, basis)


def degree(key) -> int:
    return len(key[0])


def validate_key(key, l: int) -> None:
    word, colors = key
    if len(word) != len(colors):
        raise ValueError("parking word and colors must have equal length")
    if not words.is_parking(word):
        raise ValueError(f"{word} is not a parking word")
    if any(not 0 <= c < l for c in colors):
        raise ValueError(f"colors must lie in 0..{l - 1}")


def pg_mul(x: LinComb, y: LinComb) -> LinComb:
    """Product in the G basis: all parking words whose prefix parkizes
    to the first factor and suffix to the second; colors concatenate."""

    def on_keys(k1, k2):
        (a1, u1), (a2, u2) = k1, k2
        n1 = len(a1)
        n = n1 + len(a2)
        colors = u1 + u2
        terms = {}
        for a in words.iter_parking_words(n):
            if words.parkize(a[:n1]) == a1 and words.parkize(a[n1:]) == a2:
                terms[(a, colors)] = 1
        return element(x.level, terms)

    return bilinear(x, y, on_keys, zero=element(x.level, {}))


def _value_cut(key, i: int):
    """Split at the value i: letters <= i keep their colors; the letters
    above i are parkized (shifted down) with their colors."""
    word, colors = key
    left = [(v, c) for v, c in zip(word, colors) if v <= i]
    right = [(v, c) for v, c in zip(word, colors) if v > i]
    lw = words.parkize(tuple(v for v, _ in left))
    rw = words.parkize(tuple(v for v, _ in right))
    return (lw, tuple(c for _, c in left)), (rw, tuple(c for _, c in right))


def pg_comul(x: LinComb) -> TensorComb:
    """Coproduct in the G basis: cuts at the breakpoints and at zero."""
    acc: dict = {}
    for key, coef in x:
        cuts = {0} | words.breakpoints(key[0])
        for i in sorted(cuts):
            pair = _value_cut(key, i)
            acc[pair] = acc.get(pair, 0) + coef
    return TensorComb(ALGEBRA, x.basis, x.level, acc)


def counit(x: LinComb) -> Fraction:
    return x.coefficient(((), ()))


def pf_mul(x: LinComb, y: LinComb) -> LinComb:
    """Product in the F basis: shifted shuffle, colors traveling with
    their letters."""

    def on_keys(k1, k2):
        return element(x.level, {w: 1 for w in words.shifted_shuffles(k1, k2)}, "F")

    return bilinear(x, y, on_keys, zero=element(x.level, {}, "F"))


def pf_comul(x: LinComb) -> TensorComb:
    """Coproduct in the F basis: all positional deconcatenations, each
    half parkized with its colors."""
    acc: dict = {}
    for (word, colors), coef in x:
        n = len(word)
        for i in range(n + 1):
            pair = (
                (words.parkize(word[:i]), colors[:i]),
                (words.parkize(word[i:]), colors[i:]),
            )
            acc[pair] = acc.get(pair, 0) + coef
    return TensorComb(ALGEBRA, "F", x.level, acc)


def pairing(x: LinComb, y: LinComb) -> Fraction:
    """<F_(a,u), G_(b,v)> = delta, bilinearly; x in the F basis, y in G."""
    if x.basis != "F" or y.basis != "G":
        raise ValueError("pairing takes an F element and a G element")
    xs, ys = x.terms, y.terms
    if len(xs) > len(ys):
        xs, ys = ys, xs
    return sum((c * ys[k] for k, c in xs.items() if k in ys), Fraction(0))


def pairing2(s: TensorComb, t: TensorComb) -> Fraction:
    if s.basis != "F" or t.basis != "G":
        raise ValueError("tensor pairing takes an F tensor and a G tensor")
    return sum(
        (c * t.terms[k] for k, c in s.terms.items() if k in t.terms),
        Fraction(0),
    )


_ANTIPODE_CACHE: dict = {}


def antipode(x: LinComb) -> LinComb:
    cache = _ANTIPODE_CACHE.setdefault(x.level, {})
    return graded_antipode(x, pg_mul, pg_comul, degree, cache)


# --- parking functions of type B ----------------------------------------

def is_type_b(key, l: int = 2) -> bool:
    """The two-colored parking functions satisfying: only matches carry
    color 1; color 1 on a letter forces it on all equal letters to its
    left; every value keeps color 0 somewhere."""
    if l != 2:
        raise ValueError("type B parking functions are the two-color case")
    word, colors = key
    ma = words.matches(word)
    for p, (v, c) in enumerate(zip(word, colors)):
        if c == 1:
            if v not in ma:
                return False
            if any(word[q] == v and colors[q] != 1 for q in range(p)):
                return False
    for v in set(word):
        if all(colors[p] == 1 for p in range(len(word)) if word[p] == v):
            return False
    return True


def iter_type_b(n: int):
    """Type-B keys of size n in lexicographic order: per parking word,
    each matched value independently colors a proper prefix of its
    occurrences with 1."""
    for a in words.iter_parking_words(n):
        ma = words.matches(a)
        positions = {}
        for p, v in enumerate(a):
            positions.setdefault(v, []).append(p)
        choices = []
        for v in sorted(positions):
            if v in ma:
                choices.append(range(len(positions[v])))
            else:
                choices.append(range(1))
        colorings = []
        for picks in itertools.product(*choices):
            u = [0] * n
            for v, k in zip(sorted(positions), picks):
                for p in positions[v][:k]:
                    u[p] = 1
            colorings.append(tuple(u))
        for u in sorted(colorings):
            yield (a, u)


def type_b_count(n: int) -> int:
    """Number of type-B keys of size n; equals n^n.  Counted without
    enumerating colorings: a matched value with m occurrences admits m
    proper prefixes of color 1."""
    if n > 7:
        raise ValueError(f"size {n} exceeds the enumeration budget of 7")
    total = 0
    for a in words.iter_parking_words(n):
        ma = words.matches(a)
        count = 1
        for v in set(a):
            if v in ma:
                count *= sum(1 for x in a if x == v)
        total += count
    return total


def type_b_closure(n_max: int) -> bool:
    """Products and coproducts of type-B G elements stay supported on
    type-B keys, up to total size n_max."""
    l = 2
    keys = {n: list(iter_type_b(n)) for n in range(1, n_max + 1)}
    for n1 in range(1, n_max):
        for n2 in range(1, n_max - n1 + 1):
            for k1 in keys[n1]:
                for k2 in keys[n2]:
                    prod = pg_mul(element(l, {k1: 1}), element(l, {k2: 1}))
                    if any(not is_type_b(k) for k in prod.terms):
                        return False
    for n in range(1, n_max + 1):
        for key in keys[n]:
            t = pg_comul(element(l, {key: 1}))
            for (a, b) in t.terms:
                if degree(a) and not is_type_b(a):
                    return False
                if degree(b) and not is_type_b(b):
                    return False
    return True


# --- non-crossing partitions of type B ----------------------------------

def ndpf_factorize(b) -> list:
    """Maximal factorization of a non-decreasing parking word into prime
    non-decreasing parking words, factors shifted back to start at 1."""
    b = tuple(b)
    if tuple(sorted(b)) != b:
        raise ValueError(f"{b} is not non-decreasing")
    if not words.is_parking(b):
        raise ValueError(f"{b} is not a parking word")
    factors = []
    prev = 0
    for cut in sorted(words.breakpoints(b)):
        factors.append(tuple(v - prev for v in b[prev:cut]))
        prev = cut
    return factors


def iter_ncb(n: int, l: int):
    """Colored maximal prime factorizations pi = (factors, colors) of
    the non-decreasing parking words of size n."""
    for b in words.iter_ndpf(n):
        factors = tuple(ndpf_factorize(b))
        for colors in itertools.product(range(l), repeat=len(factors)):
            yield (factors, colors)


def ncb_count(n: int, l: int) -> int:
    """Exhaustive count of the colored factorizations."""
    return sum(l ** len(ndpf_factorize(b)) for b in words.iter_ndpf(n))


def ncb_series(l: int, order: int) -> list[int]:
    """Coefficients of 1/(1 - l(1-sqrt(1-4t))/2) as exact integers."""
    out = []
    for c in series.ncb_series(l, order):
        assert c.denominator == 1
        out.append(int(c))
    return out


def p_expand(pi, l: int) -> LinComb:
    """The P basis element of a colored factorization: the sum of the
    F's over all rearrangements of its (letter, color) multiset."""
    factors, fcolors = pi
    letters: list = []
    shift = 0
    for f, c in zip(factors, fcolors):
        letters.extend((v + shift, c) for v in f)
        shift += len(f)
    terms = {}
    for arrangement in set(itertools.permutations(letters)):
        word = tuple(v for v, _ in arrangement)
        colors = tuple(c for _, c in arrangement)
        terms[(word, colors)] = 1
    return element(l, terms, "F")


def f_to_p(x: LinComb) -> LinComb:
    """Regroup an F element into P coordinates; raises when the element
    does not lie in the P span."""
    if x.basis != "F":
        raise ValueError(f"expected an F element, got {x.basis}")
    classes: dict = {}
    for (word, colors), coef in x.terms.items():
        multiset = tuple(sorted(zip(word, colors)))
        classes.setdefault(multiset, {})[(word, colors)] = coef
    acc: dict = {}
    for multiset, got in classes.items():
        sorted_word = tuple(v for v, _ in multiset)
        factors = tuple(ndpf_factorize(sorted_word))
        fcolors = []
        prev = 0
        for f in factors:
            block = {c for _, c in multiset[prev:prev + len(f)]}
            if len(block) != 1:
                raise ValueError("element is not in the P span: mixed factor colors")
            fcolors.append(block.pop())
            prev += len(f)
        pi = (factors, tuple(fcolors))
        coefs = set(got.values())
        if len(coefs) != 1 or len(got) != len(p_expand(pi, x.level)):
            raise ValueError(f"element is not in the P span at {pi}")
        acc[pi] = coefs.pop()
    return element(x.level, acc, "P")


def p_mul(x: LinComb, y: LinComb) -> LinComb:
    """Product of P elements, through the F basis."""
    if x.basis != "P" or y.basis != "P":
        raise ValueError("p_mul takes P-basis elements")
    xf = x.apply(lambda k: p_expand(k, x.level))
    yf = y.apply(lambda k: p_expand(k, y.level))
    return f_to_p(pf_mul(xf, yf))


def p_concat(pi, sigma):
    """Concatenation of factorizations: the P product of the keys."""
    return (pi[0] + sigma[0], pi[1] + sigma[1])
