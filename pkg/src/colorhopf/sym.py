"""Noncommutative symmetric functions of level l.

The S basis is indexed by vector compositions: tuples of nonzero columns
in N^l.  A column n embeds into the level-l free quasi-symmetric
functions as the sum of all colorings of the identity permutation with
content n; compositions embed multiplicatively.  On a fixed weight the
span carries a second, degree-preserving *internal* product, taken
opposite to the group law of the wreath product under G_h -> h:

    G_h * G_{h'} = G_{h' h}.

It is computed two ways: termwise through the group algebra (the
oracle), and by the splitting formula

    (F_1 ... F_r) * G = mu_r[(F_1 (x) ... (x) F_r) *_r Delta^(r) G],

whose base cases (single-column left factors) fall back to the oracle.
"""

from __future__ import annotations

import itertools
from fractions import Fraction

from . import fqsym, series, words
from .lincomb import LinComb, TensorComb, bilinear

ALGEBRA = "Sym"

Column = tuple  # tuple[int, ...] of length l, not all zero
VComp = tuple  # tuple[Column, ...]


class InternalClosureError(ArithmeticError):
    """An internal product left the span of the S basis.  This would
    falsify the descent-algebra theorem, so it signals a bug, not data."""

    def __init__(self, message, counterexample=None):
        super().__init__(message)
        self.counterexample = counterexample


def weight(key: VComp) -> int:
    return sum(sum(col) for col in key)


def element(l: int, terms) -> LinComb:
    return LinComb(ALGEBRA, "S", l, terms)


def unit(l: int) -> LinComb:
    return element(l, {(): 1})


def validate_key(key, l: int) -> None:
    for col in key:
        if len(col) != l:
            raise ValueError(f"column {col} does not have {l} entries")
        if any(v < 0 for v in col) or not any(col):
            raise ValueError(f"column {col} must be nonnegative and nonzero")


def iter_columns(w: int, l: int):
    """Nonzero vectors in N^l of weight w."""
    if w <= 0:
        return
    for cuts in itertools.combinations(range(w + l - 1), l - 1):
        prev = -1
        col = []
        for c in cuts:
            col.append(c - prev - 1)
            prev = c
        col.append(w + l - 2 - prev)
        yield tuple(col)


def iter_vector_compositions(n: int, l: int):
    """All vector compositions of weight n, sorted."""

    def rec(remaining):
        if remaining == 0:
            yield ()
            return
        for w in range(1, remaining + 1):
            for col in iter_columns(w, l):
                for rest in rec(remaining - w):
                    yield (col,) + rest

    return iter(sorted(rec(n)))


def hilbert_dim(n: int, l: int) -> int:
    """Number of vector compositions of weight n, read off the rational
    generating series (1-t)^l / (2(1-t)^l - 1)."""
    coeff = series.hilbert_series(l, n)[n]
    assert coeff.denominator == 1
    return int(coeff)


# --- outer structure ---------------------------------------------------

def s_mul(x: LinComb, y: LinComb) -> LinComb:
    """Outer product: concatenation of column sequences."""
    return bilinear(
        x, y, lambda k1, k2: element(x.level, {k1 + k2: 1}),
        zero=element(x.level, {}),
    )


def _column_splits(col: Column, r: int):
    """All ways to write col as an ordered sum of r vectors in N^l."""
    per_row = [list(_compositions(v, r)) for v in col]
    for choice in itertools.product(*per_row):
        yield [tuple(row[t] for row in choice) for t in range(r)]


def _compositions(m: int, parts: int):
    if parts == 1:
        yield (m,)
        return
    for first in range(m + 1):
        for rest in _compositions(m - first, parts - 1):
            yield (first,) + rest


def s_comul(x: LinComb) -> TensorComb:
    """Coproduct: on a single column, the sum over componentwise
    decompositions; multiplicative on compositions.  Cocommutative."""
    acc: dict = {}
    for key, coef in x:
        for split in itertools.product(*(_column_splits(col, 2) for col in key)):
            left = tuple(p[0] for p in split if any(p[0]))
            right = tuple(p[1] for p in split if any(p[1]))
            acc[(left, right)] = acc.get((left, right), 0) + coef
    return TensorComb(ALGEBRA, "S", x.level, acc)


def counit(x: LinComb) -> Fraction:
    return x.coefficient(())


# --- embedding into FQSym ---------------------------------------------

def embed_column(col: Column) -> LinComb:
    """Sum of all colorings of the identity permutation with content col."""
    l = len(col)
    n = sum(col)
    letters = []
    for color, mult in enumerate(col):
        letters.extend([color] * mult)
    perm = tuple(range(1, n + 1))
    colorings = set(itertools.permutations(letters))
    return fqsym.element(l, {(perm, u): 1 for u in colorings})


_EMBED_CACHE: dict = {}


def embed_key(key: VComp, l: int) -> LinComb:
    if (key, l) not in _EMBED_CACHE:
        out = fqsym.unit(l)
        for col in key:
            out = fqsym.g_mul(out, embed_column(col))
        _EMBED_CACHE[(key, l)] = out
    return _EMBED_CACHE[(key, l)]


def embed(x: LinComb) -> LinComb:
    return x.apply(lambda k: embed_key(k, x.level))


# --- internal product ---------------------------------------------------

_WREATH_CACHE: dict = {}


def internal_mul_g(x: LinComb, y: LinComb) -> LinComb:
    """Internal product on G-basis elements of a fixed degree, opposite
    to the group law: G_h * G_{h'} = G_{h' h}."""
    l = x.level
    cache = _WREATH_CACHE.setdefault(l, {})
    acc: dict = {}
    for h, c1 in x.terms.items():
        for h2, c2 in y.terms.items():
            k = cache.get((h, h2))
            if k is None:
                k = words.wreath_mul(h2, h, l)
                cache[(h, h2)] = k
            acc[k] = acc.get(k, 0) + c1 * c2
    return fqsym.element(l, acc)


_SOLVER_CACHE: dict = {}


def _s_solver(n: int, l: int):
    """Row-reduced expansions of the weight-n S basis in the G basis,
    with the transform rows tracked; used to re-express G elements."""
    if (n, l) in _SOLVER_CACHE:
        return _SOLVER_CACHE[(n, l)]
    keys = list(iter_vector_compositions(n, l))
    reduced: list = []  # (pivot G-key, row dict, transform dict)
    for key in keys:
        row = {k: Fraction(c) for k, c in embed_key(key, l).terms.items()}
        t = {key: Fraction(1)}
        for pivot, prow, ptrans in reduced:
            c = row.get(pivot)
            if not c:
                continue
            for k, v in prow.items():
                acc = row.get(k, Fraction(0)) - c * v
                if acc:
                    row[k] = acc
                else:
                    row.pop(k, None)
            for k, v in ptrans.items():
                acc = t.get(k, Fraction(0)) - c * v
                if acc:
                    t[k] = acc
                else:
                    t.pop(k, None)
        assert row, "S basis expansions must be independent"
        pivot = min(row)
        lead = row[pivot]
        row = {k: v / lead for k, v in row.items()}
        t = {k: v / lead for k, v in t.items()}
        # back-eliminate to keep rows reduced against each other
        for prior in reduced:
            c = prior[1].get(pivot)
            if not c:
                continue
            for k, v in row.items():
                acc = prior[1].get(k, Fraction(0)) - c * v
                if acc:
                    prior[1][k] = acc
                else:
                    prior[1].pop(k, None)
            for k, v in t.items():
                acc = prior[2].get(k, Fraction(0)) - c * v
                if acc:
                    prior[2][k] = acc
                else:
                    prior[2].pop(k, None)
        reduced.append((pivot, row, t))
    _SOLVER_CACHE[(n, l)] = reduced
    return reduced


def g_to_s(x: LinComb) -> LinComb:
    """Re-express a G-basis element in the S basis; raises
    :class:`InternalClosureError` if it does not lie in the span."""
    if not x.terms:
        return element(x.level, {})
    degrees = {fqsym.degree(k) for k in x.terms}
    if len(degrees) > 1:
        raise ValueError("inhomogeneous element")
    n = degrees.pop()
    residual = {k: Fraction(c) for k, c in x.terms.items()}
    coeffs: dict = {}
    for pivot, row, t in _s_solver(n, x.level):
        c = residual.get(pivot)
        if not c:
            continue
        for k, v in row.items():
            acc = residual.get(k, Fraction(0)) - c * v
            if acc:
                residual[k] = acc
            else:
                residual.pop(k, None)
        for k, v in t.items():
            coeffs[k] = coeffs.get(k, Fraction(0)) + c * v
    if residual:
        raise InternalClosureError(
            f"element leaves the S span at degree {n}", counterexample=min(residual)
        )
    return element(x.level, coeffs)


def _homogeneous_weight(x: LinComb):
    weights = {weight(k) for k in x.terms}
    if len(weights) > 1:
        raise ValueError("internal product requires homogeneous operands")
    return weights.pop() if weights else None


def internal_mul_oracle(x: LinComb, y: LinComb) -> LinComb:
    """Internal product through the group algebra: expand in the G
    basis, multiply termwise, re-express in the S basis."""
    wx, wy = _homogeneous_weight(x), _homogeneous_weight(y)
    if wx is None or wy is None or wx != wy:
        return element(x.level, {})
    return g_to_s(internal_mul_g(embed(x), embed(y)))


_BASE_CACHE: dict = {}


def _internal_base(col: Column, jkey: VComp, l: int) -> LinComb:
    """S_m * S^J with a one-column left factor, via the oracle."""
    if (col, jkey, l) not in _BASE_CACHE:
        _BASE_CACHE[(col, jkey, l)] = internal_mul_oracle(
            element(l, {(col,): 1}), element(l, {jkey: 1})
        )
    return _BASE_CACHE[(col, jkey, l)]


def _slot_assignments(jkey: VComp, targets: list[int], l: int):
    """Split the columns of J among r slots so slot t receives weight
    targets[t]; yields tuples of vector compositions."""
    r = len(targets)

    def rec(c: int, remaining: tuple, slots: tuple):
        if c == len(jkey):
            yield slots
            return
        col = jkey[c]
        for parts in _column_splits(col, r):
            ws = [sum(p) for p in parts]
            if any(ws[t] > remaining[t] for t in range(r)):
                continue
            new_rem = tuple(remaining[t] - ws[t] for t in range(r))
            new_slots = tuple(
                slots[t] + ((parts[t],) if ws[t] else ()) for t in range(r)
            )
            yield from rec(c + 1, new_rem, new_slots)

    yield from rec(0, tuple(targets), ((),) * r)


def internal_mul_split(x: LinComb, y: LinComb) -> LinComb:
    """Internal product by the splitting formula, recursing on the
    columns of the left factor."""
    wx, wy = _homogeneous_weight(x), _homogeneous_weight(y)
    if wx is None or wy is None or wx != wy:
        return element(x.level, {})
    l = x.level

    def on_keys(ikey, jkey):
        r = len(ikey)
        if r <= 1:
            if r == 0:
                return unit(l) if not jkey else element(l, {})
            return _internal_base(ikey[0], jkey, l)
        targets = [sum(col) for col in ikey]
        total = element(l, {})
        for slots in _slot_assignments(jkey, targets, l):
            prod = unit(l)
            for t in range(r):
                prod = s_mul(prod, _internal_base(ikey[t], slots[t], l))
                if prod.is_zero():
                    break
            total = total + prod
        return total

    return bilinear(x, y, on_keys)
