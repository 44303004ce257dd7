"""Words, permutations, parking functions, and their colored variants.

All objects are plain tuples of ints.  A *colored* object is a pair
``(letters, colors)`` of equal-length tuples, where colors are residues
in ``0..l-1`` for a level ``l`` fixed by the caller.  Permutations use
one-line notation on ``1..n``.  The empty pair ``((), ())`` has size 0
and is the unit key of every graded algebra built on top of this module.

Everything here is a pure function on immutable values.
"""

from __future__ import annotations

import itertools
from typing import Iterable, Iterator, Sequence

Word = tuple[int, ...]
Colored = tuple[Word, Word]

EMPTY: Colored = ((), ())


def standardize(word: Sequence[int]) -> Word:
    """Permutation with the same inversions as ``word``.

    Occurrences of the smallest letter are numbered 1, 2, ... from left
    to right, then the next letter, and so on.

    >>> standardize((3, 1, 3, 2))
    (3, 1, 4, 2)
    """
    order = sorted(range(len(word)), key=lambda i: (word[i], i))
    perm = [0] * len(word)
    for rank, i in enumerate(order, start=1):
        perm[i] = rank
    return tuple(perm)


def colored_standardize(cw: Colored) -> Colored:
    """Standardize the letters of a colored word; colors pass through."""
    letters, colors = cw
    if len(letters) != len(colors):
        raise ValueError("letters and colors must have equal length")
    return standardize(letters), tuple(colors)


def is_permutation(word: Sequence[int]) -> bool:
    return sorted(word) == list(range(1, len(word) + 1))


def inversions(word: Sequence[int]) -> frozenset:
    """The set of position pairs (i, j), i < j, with word[i] > word[j]."""
    n = len(word)
    return frozenset(
        (i, j) for i in range(n) for j in range(i + 1, n) if word[i] > word[j]
    )


def convolution(p1: Word, p2: Word) -> list[Word]:
    """All permutations whose first ``len(p1)`` letters standardize to
    ``p1`` and whose remaining letters standardize to ``p2``.

    Each choice of the value set used by the prefix yields exactly one
    permutation, so the result has binomial(n1+n2, n1) elements.
    """
    n1, n2 = len(p1), len(p2)
    n = n1 + n2
    out = []
    for chosen in itertools.combinations(range(1, n + 1), n1):
        rest = sorted(set(range(1, n + 1)) - set(chosen))
        out.append(
            tuple(chosen[v - 1] for v in p1) + tuple(rest[v - 1] for v in p2)
        )
    return sorted(out)


def shifted_concat(p: Colored, q: Colored) -> Colored:
    """Concatenate with shift: q's letters are raised by the size of p."""
    (pw, pc), (qw, qc) = p, q
    k = len(pw)
    return pw + tuple(v + k for v in qw), pc + qc


def shifted_shuffles(p: Colored, q: Colored) -> Iterator[Colored]:
    """All interleavings of p with q shifted by the size of p.

    Colors travel with their letters.  Yields binomial(n1+n2, n1) colored
    words, each exactly once.
    """
    (w1, c1), (w2, c2) = p, q
    n1, n2 = len(w1), len(w2)
    w2 = tuple(v + n1 for v in w2)
    for slots in itertools.combinations(range(n1 + n2), n1):
        slotset = set(slots)
        word, colors = [], []
        i = j = 0
        for pos in range(n1 + n2):
            if pos in slotset:
                word.append(w1[i]); colors.append(c1[i]); i += 1
            else:
                word.append(w2[j]); colors.append(c2[j]); j += 1
        yield tuple(word), tuple(colors)


# --- connectivity -----------------------------------------------------

def is_connected(perm: Word) -> bool:
    """True iff no proper prefix of ``perm`` uses exactly the values 1..i."""
    if not perm:
        raise ValueError("connectivity is undefined for the empty permutation")
    top = 0
    for i, v in enumerate(perm[:-1], start=1):
        top = max(top, v)
        if top == i:
            return False
    return True


def connected_factorization(cp: Colored) -> list[Colored]:
    """Finest factorization of a colored permutation under shifted
    concatenation; every factor has a connected permutation part."""
    perm, colors = cp
    factors = []
    start = 0
    top = 0
    for i, v in enumerate(perm, start=1):
        top = max(top, v)
        if top == i:
            seg = perm[start:i]
            factors.append(
                (tuple(v - start for v in seg), tuple(colors[start:i]))
            )
            start = i
    return factors


def restrict_interval(cp: Colored, a: int, b: int) -> Colored:
    """Subword of the letters lying in the value interval [a, b], with
    their colors, standardized back to a colored permutation."""
    perm, colors = cp
    n = len(perm)
    if not (1 <= a <= b + 1 and b <= n):
        raise ValueError(f"interval [{a},{b}] out of range for size {n}")
    kept = [(v, c) for v, c in zip(perm, colors) if a <= v <= b]
    return tuple(v - (a - 1) for v, _ in kept), tuple(c for _, c in kept)


# --- the wreath product C wr S_n with C = Z/lZ ------------------------

def perm_inverse(perm: Word) -> Word:
    inv = [0] * len(perm)
    for i, v in enumerate(perm, start=1):
        inv[v - 1] = i
    return tuple(inv)


def wreath_identity(n: int) -> Colored:
    return tuple(range(1, n + 1)), (0,) * n


def wreath_mul(h1: Colored, h2: Colored, l: int) -> Colored:
    """Product (s; c) (t; d) = (s o t; c_{t(1)}+d_1, ..., c_{t(n)}+d_n),
    colors added mod l."""
    (s, c), (t, d) = h1, h2
    if len(s) != len(t):
        raise ValueError("size mismatch in wreath product")
    perm = tuple(s[t[i] - 1] for i in range(len(s)))
    colors = tuple((c[t[i] - 1] + d[i]) % l for i in range(len(s)))
    return perm, colors


def wreath_inverse(h: Colored, l: int) -> Colored:
    """Two-sided inverse for :func:`wreath_mul`."""
    s, c = h
    inv = perm_inverse(s)
    return inv, tuple((-c[inv[i] - 1]) % l for i in range(len(s)))


# --- parking functions ------------------------------------------------

def is_parking(word: Sequence[int]) -> bool:
    """True iff the nondecreasing rearrangement a' satisfies a'_i <= i."""
    return all(v <= i for i, v in enumerate(sorted(word), start=1))


def parkize(word: Sequence[int]) -> Word:
    """Project a word of positive integers onto parking words.

    Iterates: if the word is a parking word, stop; otherwise find the
    smallest i with #{ j : w_j <= i } < i and decrement every letter
    greater than i.  The identity on parking words, and idempotent.

    >>> parkize((5, 2, 6))
    (2, 1, 3)
    """
    w = list(word)
    n = len(w)
    while True:
        d = 0
        for i in range(1, n + 1):
            if sum(1 for v in w if v <= i) < i:
                d = i
                break
        if d == 0:
            return tuple(w)
        w = [v - 1 if v > d else v for v in w]


def breakpoints(word: Sequence[int]) -> set[int]:
    """Positions b in 1..n with #{ a_i <= b } = b.  Always contains n
    when ``word`` is a parking word."""
    n = len(word)
    return {b for b in range(1, n + 1) if sum(1 for v in word if v <= b) == b}


def matches(word: Sequence[int]) -> set[int]:
    """Positions b with #{ a_i < b } = b-1 and #{ a_i <= b } >= b."""
    n = len(word)
    out = set()
    for b in range(1, n + 1):
        below = sum(1 for v in word if v < b)
        upto = below + sum(1 for v in word if v == b)
        if below == b - 1 and upto >= b:
            out.add(b)
    return out


def is_prime_parking(word: Sequence[int]) -> bool:
    """True iff the only breakpoint is the length itself."""
    if not word:
        raise ValueError("primality is undefined for the empty word")
    return breakpoints(word) == {len(word)}


def descents(seq: Sequence[int]) -> set[int]:
    """Positions i with seq[i] > seq[i+1] (1-based, i < len)."""
    return {i for i in range(1, len(seq)) if seq[i - 1] > seq[i]}


# --- enumeration ------------------------------------------------------
#
# All streams are exhaustive, duplicate-free, and lexicographic on
# (letters, colors).

def iter_permutations(n: int) -> Iterator[Word]:
    return iter(itertools.permutations(range(1, n + 1)))


def iter_connected_permutations(n: int) -> Iterator[Word]:
    return (p for p in iter_permutations(n) if is_connected(p))


def iter_color_words(n: int, l: int) -> Iterator[Word]:
    return iter(itertools.product(range(l), repeat=n))


def iter_colored_permutations(n: int, l: int) -> Iterator[Colored]:
    for p in iter_permutations(n):
        for c in iter_color_words(n, l):
            yield p, c


def iter_parking_words(n: int) -> Iterator[Word]:
    """Parking words of length n, in lexicographic order.

    Depth-first with pruning: a prefix of length k extends to a parking
    word iff #{ j <= k : w_j <= i } >= i - (n - k) for every i.
    """
    if n == 0:
        yield ()
        return
    prefix: list[int] = []

    def feasible() -> bool:
        k = len(prefix)
        for i in range(1, n + 1):
            if sum(1 for v in prefix if v <= i) < i - (n - k):
                return False
        return True

    def rec() -> Iterator[Word]:
        if len(prefix) == n:
            yield tuple(prefix)
            return
        for v in range(1, n + 1):
            prefix.append(v)
            if feasible():
                yield from rec()
            prefix.pop()

    yield from rec()


def iter_colored_parking(n: int, l: int) -> Iterator[Colored]:
    for w in iter_parking_words(n):
        for c in iter_color_words(n, l):
            yield w, c


def iter_ndpf(n: int) -> Iterator[Word]:
    """Non-decreasing parking words of length n (Catalan many)."""
    if n == 0:
        yield ()
        return
    prefix: list[int] = []

    def rec() -> Iterator[Word]:
        k = len(prefix)
        if k == n:
            yield tuple(prefix)
            return
        lo = prefix[-1] if prefix else 1
        for v in range(lo, k + 2):
            prefix.append(v)
            yield from rec()
            prefix.pop()

    yield from rec()


def iter_prime_ndpf(n: int) -> Iterator[Word]:
    return (w for w in iter_ndpf(n) if is_prime_parking(w))


_KINDS = {
    "permutations": lambda n, l: iter_permutations(n),
    "colored_permutations": lambda n, l: iter_colored_permutations(n, l),
    "parking": lambda n, l: iter_parking_words(n),
    "colored_parking": lambda n, l: iter_colored_parking(n, l),
    "ndpf": lambda n, l: iter_ndpf(n),
    "prime_ndpf": lambda n, l: iter_prime_ndpf(n),
    "connected": lambda n, l: iter_connected_permutations(n),
}


def enumerate_keys(kind: str, n: int, l: int = 1) -> Iterator:
    """Deterministic streams of combinatorial keys; see ``_KINDS``."""
    if kind not in _KINDS:
        raise ValueError(
            f"unknown enumeration kind {kind!r}; expected one of "
            + ", ".join(sorted(_KINDS))
        )
    return _KINDS[kind](n, l)
