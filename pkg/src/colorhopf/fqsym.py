"""Free quasi-symmetric functions of level l.

Bases are labelled by colored permutations (perm, colors).  The G basis
multiplies by convolution with concatenated colors and comultiplies by
standardized restriction to value intervals; the F basis is G relabelled
through a size-preserving involution on keys, in one of two conventions:

* ``group`` mode (the default): F_h = G_{h^{-1}} in the wreath product
  Z/lZ wr S_n, i.e. colors are transported through the inverse
  permutation *and* negated mod l;
* ``plain`` mode: colors are transported but not negated.

Both make <F_a, G_b> = delta_{ab} a Hopf pairing; the conversion map is
an involution in either mode.  Everything is exact over the rationals.
"""

from __future__ import annotations

from fractions import Fraction
from math import factorial

from .lincomb import LinComb, TensorComb, bilinear, graded_antipode, invert_unitriangular, rank, tensor, transition_matrix
from . import words
from .words import EMPTY

ALGEBRA = "FQSym"
MODE_GROUP = "group"
MODE_PLAIN = "plain"


class DegreeBudgetError(ValueError):
    """Raised when a computation would exceed its degree budget."""


def default_budget(l: int) -> int:
    # dimensions grow as l^n n!; keep exact inversions comfortable
    return 4 if l <= 2 else 3


def degree(key) -> int:
    return len(key[0])


def element(l: int, terms, basis: str = "G") -> LinComb:
    return LinComb(ALGEBRA, basis, l, terms)


def unit(l: int, basis: str = "G") -> LinComb:
    return element(l, {EMPTY: 1}, basis)


def dim(n: int, l: int) -> int:
    return l**n * factorial(n)


def keys_of_degree(n: int, l: int) -> list:
    return list(words.iter_colored_permutations(n, l))


def g_mul(x: LinComb, y: LinComb) -> LinComb:
    """Product in the G basis: convolution of the permutation parts,
    concatenation of the color words."""

    def on_keys(k1, k2):
        (p1, c1), (p2, c2) = k1, k2
        colors = c1 + c2
        return element(x.level, {(p, colors): 1 for p in words.convolution(p1, p2)})

    return bilinear(x, y, on_keys, zero=element(x.level, {}))


def g_comul(x: LinComb) -> TensorComb:
    """Coproduct in the G basis: sum of standardized restrictions to the
    value intervals [1,i] and [i+1,n]."""
    acc: dict = {}
    for key, coef in x:
        n = degree(key)
        for i in range(n + 1):
            left = words.restrict_interval(key, 1, i)
            right = words.restrict_interval(key, i + 1, n)
            acc[(left, right)] = acc.get((left, right), 0) + coef
    return TensorComb(ALGEBRA, x.basis, x.level, acc)


def counit(x: LinComb) -> Fraction:
    return x.coefficient(EMPTY)


def convert_key(key, l: int, mode: str = MODE_GROUP):
    """The involution on keys identifying the F and G labels.

    In group mode this is the wreath-product inverse.  In plain mode the
    colors are transported through the inverse permutation without
    negation; this is the unique unsigned transport under which the
    pairing below is a Hopf pairing (checked by brute force in the
    tests).
    """
    perm, colors = key
    if mode == MODE_GROUP:
        return words.wreath_inverse(key, l)
    if mode == MODE_PLAIN:
        inv = words.perm_inverse(perm)
        return inv, tuple(colors[inv[i] - 1] for i in range(len(perm)))
    raise ValueError(f"unknown mode {mode!r}")


def f_as_g(x: LinComb, mode: str = MODE_GROUP) -> LinComb:
    """Rewrite an F-basis element in the G basis."""
    if x.basis != "F":
        raise ValueError(f"expected F basis, got {x.basis}")
    return x.map_keys(lambda k: convert_key(k, x.level, mode), basis="G")


def g_as_f(x: LinComb, mode: str = MODE_GROUP) -> LinComb:
    """Rewrite a G-basis element in the F basis (same involution)."""
    if x.basis != "G":
        raise ValueError(f"expected G basis, got {x.basis}")
    return x.map_keys(lambda k: convert_key(k, x.level, mode), basis="F")


def f_mul(x: LinComb, y: LinComb) -> LinComb:
    """Product in the F basis: shifted shuffle, colors traveling with
    their letters.  The same key-level rule in both conventions."""

    def on_keys(k1, k2):
        return element(x.level, {w: 1 for w in words.shifted_shuffles(k1, k2)}, "F")

    return bilinear(x, y, on_keys, zero=element(x.level, {}, "F"))


def f_comul(x: LinComb, mode: str = MODE_GROUP) -> TensorComb:
    """Coproduct on F elements, computed through the G basis."""
    t = g_comul(f_as_g(x, mode))
    conv = lambda k: convert_key(k, x.level, mode)
    return TensorComb(
        ALGEBRA, "F", x.level,
        {(conv(k1), conv(k2)): c for (k1, k2), c in t.terms.items()},
    )


def _as_f_coords(x: LinComb, mode: str) -> dict:
    if x.basis == "F":
        return x.terms
    if x.basis == "G":
        return {convert_key(k, x.level, mode): c for k, c in x.terms.items()}
    raise ValueError(f"no F coordinates for basis {x.basis}")


def _as_g_coords(x: LinComb, mode: str) -> dict:
    if x.basis == "G":
        return x.terms
    if x.basis == "F":
        return {convert_key(k, x.level, mode): c for k, c in x.terms.items()}
    raise ValueError(f"no G coordinates for basis {x.basis}")


def pairing(x: LinComb, y: LinComb, mode: str = MODE_GROUP) -> Fraction:
    """<F_a, G_b> = delta_{ab}, extended bilinearly; x is read in F
    coordinates and y in G coordinates."""
    xs = _as_f_coords(x, mode)
    ys = _as_g_coords(y, mode)
    if len(xs) > len(ys):
        xs, ys = ys, xs
    return sum((c * ys[k] for k, c in xs.items() if k in ys), Fraction(0))


def pairing2(s: TensorComb, t: TensorComb, mode: str = MODE_GROUP) -> Fraction:
    """Legwise pairing of tensors; s in F coordinates, t in G."""
    conv = lambda k: convert_key(k, s.level, mode)
    if s.basis == "G":
        ss = {(conv(a), conv(b)): c for (a, b), c in s.terms.items()}
    else:
        ss = s.terms
    if t.basis == "F":
        ts = {(conv(a), conv(b)): c for (a, b), c in t.terms.items()}
    else:
        ts = t.terms
    return sum((c * ts[k] for k, c in ss.items() if k in ts), Fraction(0))


# --- multiplicative and adjoint bases ---------------------------------

def connected_factor_count(key) -> int:
    return len(words.connected_factorization(key))


def gmult_expand(key, l: int) -> LinComb:
    """G^{sigma,u}: the product of the G's over the finest factorization
    of the key into connected colored permutations."""
    out = unit(l)
    for f in words.connected_factorization(key):
        out = g_mul(out, element(l, {f: 1}))
    return out


def gmult_key_order(n: int, l: int) -> list:
    """Degree-n keys ordered so the G^/G transition is lower
    unitriangular: ascending number of connected factors, then
    lexicographic.  The expansion of a key with r factors meets only
    keys with at most r factors, and itself with coefficient one."""
    return sorted(keys_of_degree(n, l), key=lambda k: (connected_factor_count(k), k))


def v_basis(n: int, l: int, mode: str = MODE_GROUP, budget: int | None = None) -> dict:
    """Adjoint basis of the multiplicative basis under the F/G pairing,
    transported back to the algebra; values are G-basis elements."""
    budget = default_budget(l) if budget is None else budget
    if n > budget:
        raise DegreeBudgetError(f"degree {n} exceeds the budget of {budget} at l={l}")
    keys = gmult_key_order(n, l)
    mat = transition_matrix(keys, lambda k: gmult_expand(k, l))
    inv = invert_unitriangular(mat)
    out = {}
    for j, key in enumerate(keys):
        f_terms = {keys[i]: inv[i][j] for i in range(len(keys)) if inv[i][j]}
        out[key] = element(l, f_terms, "F").map_keys(
            lambda k: convert_key(k, l, mode), basis="G"
        )
    return out


def reduced_comul(x: LinComb) -> TensorComb:
    """Delta minus its primitive part: only the cuts with both sides of
    positive degree."""
    t = g_comul(x)
    return TensorComb(
        ALGEBRA, x.basis, x.level,
        {k: c for k, c in t.terms.items() if degree(k[0]) > 0 and degree(k[1]) > 0},
    )


def primitive_dim(n: int, l: int, budget: int | None = None) -> int:
    """Dimension of the kernel of the reduced coproduct in degree n."""
    budget = default_budget(l) if budget is None else budget
    if n > budget:
        raise DegreeBudgetError(f"degree {n} exceeds the budget of {budget} at l={l}")
    keys = keys_of_degree(n, l)
    col_index: dict = {}
    rows = []
    for key in keys:
        row = {}
        for pair in reduced_comul(element(l, {key: 1})).terms:
            col = col_index.setdefault(pair, len(col_index))
            row[col] = 1
        rows.append(row)
    return len(keys) - rank(rows)


_ANTIPODE_CACHE: dict = {}


def antipode(x: LinComb) -> LinComb:
    """Antipode on the G basis by graded recursion."""
    cache = _ANTIPODE_CACHE.setdefault(x.level, {})
    return graded_antipode(x, g_mul, g_comul, degree, cache)


# --- polynomial realization (the literal definition) ------------------

def realize_g(key, N: int) -> set:
    """All colored words over N basic letters whose colored
    standardization is the key; the word-level oracle for g_mul."""
    perm, colors = key
    n = len(perm)
    out = set()
    import itertools

    for letters in itertools.product(range(1, N + 1), repeat=n):
        if words.standardize(letters) == perm:
            out.add((letters, colors))
    return out
