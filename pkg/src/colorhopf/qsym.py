"""Quasi-symmetric functions of level l.

Bases are indexed by the same vector compositions as the level-l
noncommutative symmetric functions, whose graded dual this is.  The
monomial basis multiplies by quasi-shuffle (columns may merge by
entrywise addition); the quasi-ribbon basis is the unitriangular sum of
monomials over the refinement order, inverted by the Boolean-lattice
Mobius function.

The (d, c) recoding turns a composition into a set of partial weights
and a color word read column by column; under it refinement becomes set
inclusion with a fixed color word.  Everything is validated against a
truncated commutative polynomial realization, including the Cauchy
kernel identity pairing this algebra with its dual.
"""

from __future__ import annotations

import itertools
from fractions import Fraction

from . import fqsym, sym, words
from .lincomb import LinComb, bilinear
from .sym import VComp, iter_vector_compositions, weight

ALGEBRA = "QSym"


def element(l: int, terms, basis: str = "M") -> LinComb:
    return LinComb(ALGEBRA, basis, l, terms)


def unit(l: int, basis: str = "M") -> LinComb:
    return element(l, {(): 1}, basis)


# --- monomial basis ----------------------------------------------------

def _quasi_shuffles(a: VComp, b: VComp):
    if not a:
        yield b
        return
    if not b:
        yield a
        return
    for rest in _quasi_shuffles(a[1:], b):
        yield (a[0],) + rest
    for rest in _quasi_shuffles(a, b[1:]):
        yield (b[0],) + rest
    merged = tuple(x + y for x, y in zip(a[0], b[0]))
    for rest in _quasi_shuffles(a[1:], b[1:]):
        yield (merged,) + rest


def m_mul(x: LinComb, y: LinComb) -> LinComb:
    """Quasi-shuffle of the column sequences; a merged column is the
    entrywise sum.  Forced by the polynomial realization."""

    def on_keys(k1, k2):
        acc: dict = {}
        for key in _quasi_shuffles(k1, k2):
            acc[key] = acc.get(key, 0) + 1
        return element(x.level, acc)

    return bilinear(x, y, on_keys, zero=element(x.level, {}))


# --- the (d, c) recoding and the refinement order ---------------------

def recode(key: VComp) -> tuple[tuple, tuple]:
    """(d, c): partial column weights, and the color word obtained by
    reading each column top to bottom (colors 0-based internally)."""
    d = []
    total = 0
    c = []
    for col in key:
        total += sum(col)
        d.append(total)
        for color, mult in enumerate(col):
            c.extend([color] * mult)
    return tuple(d), tuple(c)


def decode(d, c, l: int) -> VComp:
    """Inverse of :func:`recode`; requires Des(c) inside d minus the
    total weight."""
    d = tuple(sorted(d))
    n = len(c)
    if d and d[-1] != n:
        raise ValueError("d must end at the total weight")
    if n and not d:
        raise ValueError("nonempty color word needs at least one block")
    cols = []
    prev = 0
    for cut in d:
        block = c[prev:cut]
        if any(block[i] > block[i + 1] for i in range(len(block) - 1)):
            raise ValueError(f"descent of c inside the block ending at {cut}")
        col = [0] * l
        for color in block:
            if not 0 <= color < l:
                raise ValueError(f"color {color} out of range for l={l}")
            col[color] += 1
        if not any(col):
            raise ValueError("empty block: d must be strictly increasing")
        cols.append(tuple(col))
        prev = cut
    return tuple(cols)


def recode_str(key: VComp) -> str:
    """Display form with 1-based row labels, blocks separated by spaces."""
    d, c = recode(key)
    dtxt = "{" + ",".join(str(v) for v in d) + "}"
    blocks = []
    prev = 0
    for cut in d:
        blocks.append("".join(str(color + 1) for color in c[prev:cut]))
        prev = cut
    return f"d={dtxt} c={' '.join(blocks)}"


def order_leq(finer: VComp, coarser: VComp) -> bool:
    """True iff ``coarser`` is reachable from ``finer`` by admissible
    merges of consecutive columns; equivalently the color words agree
    and the coarser d-set is contained in the finer one."""
    if weight(finer) != weight(coarser):
        raise ValueError("comparable compositions must have equal weight")
    df, cf = recode(finer)
    dc, cc = recode(coarser)
    return cf == cc and set(dc) <= set(df)


def single_merges(key: VComp):
    """Compositions obtained by one admissible merge of consecutive
    columns: no nonzero entry of the left column strictly below a
    nonzero entry of the right one."""
    out = []
    for t in range(len(key) - 1):
        left, right = key[t], key[t + 1]
        maxrow = max(i for i, v in enumerate(left) if v)
        minrow = min(i for i, v in enumerate(right) if v)
        if maxrow <= minrow:
            merged = tuple(x + y for x, y in zip(left, right))
            out.append(key[:t] + (merged,) + key[t + 2:])
    return out


def refinements(key: VComp, l: int):
    """All compositions finer than or equal to ``key`` in the order."""
    d, c = recode(key)
    n = len(c)
    free = sorted(set(range(1, n + 1)) - set(d))
    out = []
    for r in range(len(free) + 1):
        for extra in itertools.combinations(free, r):
            out.append(decode(sorted(set(d) | set(extra)), c, l))
    return out


def mobius(finer: VComp, coarser: VComp) -> int:
    """Mobius function of the refinement order: a signed Boolean
    lattice on the d-sets, zero on incomparable pairs."""
    if weight(finer) != weight(coarser):
        return 0
    df, cf = recode(finer)
    dc, cc = recode(coarser)
    if cf != cc or not set(dc) <= set(df):
        return 0
    return (-1) ** (len(df) - len(dc))


def quasiribbon(key: VComp, l: int) -> LinComb:
    """F over the key, expanded in the monomial basis: the sum of the
    monomials over all finer compositions."""
    return element(l, {k: 1 for k in refinements(key, l)})


def quasiribbon_to_m(x: LinComb) -> LinComb:
    if x.basis != "Fq":
        raise ValueError(f"expected Fq basis, got {x.basis}")
    acc: dict = {}
    for key, coef in x.terms.items():
        for k in refinements(key, x.level):
            acc[k] = acc.get(k, 0) + coef
    return element(x.level, acc)


def m_to_quasiribbon(x: LinComb) -> LinComb:
    """Mobius inversion: M_I = sum of mu(I', I) F_{I'} over finer I'."""
    if x.basis != "M":
        raise ValueError(f"expected M basis, got {x.basis}")
    acc: dict = {}
    for key, coef in x.terms.items():
        for k in refinements(key, x.level):
            acc[k] = acc.get(k, 0) + coef * mobius(k, key)
    return element(x.level, acc, "Fq")


def fq_mul(x: LinComb, y: LinComb) -> LinComb:
    """Product of quasi-ribbons, through the monomial basis."""
    return m_to_quasiribbon(m_mul(quasiribbon_to_m(x), quasiribbon_to_m(y)))


# --- commutative image of the free quasi-ribbons ----------------------

def commutative_image(key, l: int) -> VComp:
    """The composition whose d-set is Des(sigma) with the weight added,
    and whose columns are the color contents over those blocks."""
    perm, colors = key
    n = len(perm)
    d = sorted(words.descents(perm) | ({n} if n else set()))
    cols = []
    prev = 0
    for cut in d:
        col = [0] * l
        for color in colors[prev:cut]:
            col[color] += 1
        cols.append(tuple(col))
        prev = cut
    return tuple(cols)


def f_image(key, l: int) -> LinComb:
    """Commutative image of a free quasi-ribbon as a monomial-basis
    element: the sum over all splittings of the positions refining the
    descents of the permutation, each block contributing its color
    content.  Equals the quasi-ribbon of :func:`commutative_image`
    exactly when the color word descends only at permutation descents.
    """
    perm, colors = key
    n = len(perm)
    base = sorted(words.descents(perm) | ({n} if n else set()))
    free = sorted(set(range(1, n + 1)) - set(base))
    acc: dict = {}
    for r in range(len(free) + 1):
        for extra in itertools.combinations(free, r):
            cuts = sorted(set(base) | set(extra))
            cols = []
            prev = 0
            for cut in cuts:
                col = [0] * l
                for color in colors[prev:cut]:
                    col[color] += 1
                cols.append(tuple(col))
                prev = cut
            key2 = tuple(cols)
            acc[key2] = acc.get(key2, 0) + 1
    return element(l, acc)


def f_image_elem(x: LinComb) -> LinComb:
    """Linear extension of :func:`f_image` to F-basis elements."""
    if x.basis != "F":
        raise ValueError(f"expected an F-basis element, got {x.basis}")
    acc: dict = {}
    for key, coef in x.terms.items():
        for k, c in f_image(key, x.level).terms.items():
            acc[k] = acc.get(k, 0) + c * coef
    return element(x.level, acc)


# --- duality with the noncommutative side ------------------------------

def pair_qsym_sym(x: LinComb, y: LinComb) -> Fraction:
    """<M_I, S^J> = delta_{I,J}, extended bilinearly."""
    if x.basis != "M" or y.basis != "S":
        raise ValueError("pairing takes a monomial element and an S element")
    xs, ys = x.terms, y.terms
    if len(xs) > len(ys):
        xs, ys = ys, xs
    return sum((c * ys[k] for k, c in xs.items() if k in ys), Fraction(0))


def pair2_qsym_sym(s, t) -> Fraction:
    """Legwise pairing of a QSym tensor against a Sym tensor."""
    return sum(
        (c * t.terms[k] for k, c in s.terms.items() if k in t.terms),
        Fraction(0),
    )


# --- polynomial realization --------------------------------------------

def realize_m(key: VComp, k: int) -> dict:
    """Truncated monomial expansion with k variables per color; a
    polynomial maps monomials (sorted ((var, color), exponent) tuples)
    to integer coefficients."""
    m = len(key)
    poly: dict = {}
    for js in itertools.combinations(range(1, k + 1), m):
        expo: dict = {}
        for j, col in zip(js, key):
            for color, e in enumerate(col):
                if e:
                    expo[(j, color)] = expo.get((j, color), 0) + e
        mono = tuple(sorted(expo.items()))
        poly[mono] = poly.get(mono, 0) + 1
    return poly


def poly_mul(p: dict, q: dict) -> dict:
    out: dict = {}
    for m1, c1 in p.items():
        for m2, c2 in q.items():
            expo = dict(m1)
            for key, e in m2:
                expo[key] = expo.get(key, 0) + e
            mono = tuple(sorted(expo.items()))
            acc = out.get(mono, 0) + c1 * c2
            if acc:
                out[mono] = acc
            else:
                del out[mono]
    return out


def poly_add_into(target: dict, p: dict, scale=1) -> None:
    for mono, c in p.items():
        acc = target.get(mono, 0) + c * scale
        if acc:
            target[mono] = acc
        else:
            del target[mono]


def _cauchy_sides(max_degree: int, k: int, N: int, l: int):
    """Both sides of the Cauchy kernel identity as maps
    colored word -> polynomial in the commuting x variables."""
    # left side: the ordered product over j of the complete generating
    # functions; one factor lists all nondecreasing-letter colored words
    kernel = {((), ()): {(): 1}}
    for j in range(1, k + 1):
        factor = {}
        for d in range(max_degree + 1):
            for letters in itertools.combinations_with_replacement(range(1, N + 1), d):
                for cols in itertools.product(range(l), repeat=d):
                    expo: dict = {}
                    for c in cols:
                        expo[(j, c)] = expo.get((j, c), 0) + 1
                    factor[(letters, cols)] = {tuple(sorted(expo.items())): 1}
        new: dict = {}
        for (w1, poly1) in kernel.items():
            for (w2, poly2) in factor.items():
                if len(w1[0]) + len(w2[0]) > max_degree:
                    continue
                word = (w1[0] + w2[0], w1[1] + w2[1])
                acc = new.setdefault(word, {})
                poly_add_into(acc, poly_mul(poly1, poly2))
        kernel = {w: p for w, p in new.items() if p}
    # right side: sum over compositions of M_I(X) S^I(A)
    rhs: dict = {}
    for n in range(max_degree + 1):
        for key in iter_vector_compositions(n, l):
            mi = realize_m(key, k)
            if not mi:
                continue
            for gkey, coef in sym.embed_key(key, l).terms.items():
                assert coef == 1
                for word in fqsym.realize_g(gkey, N):
                    acc = rhs.setdefault(word, {})
                    poly_add_into(acc, mi)
    rhs = {w: p for w, p in rhs.items() if p}
    return kernel, rhs


def cauchy_check(max_degree: int = 3, k: int = 2, N: int = 3, l: int = 2) -> bool:
    """Expand the Cauchy kernel two ways and compare term by term."""
    lhs, rhs = _cauchy_sides(max_degree, k, N, l)
    return lhs == rhs
