"""The Mantaci-Reutenauer subalgebra of the level-l noncommutative
symmetric functions, and its graded dual.

The subalgebra is generated by the monochromatic complete functions:
one-column vectors n*e_i.  Its bases are labelled by colored
compositions (parts, colors); a colored composition embeds as the
vector composition whose k-th column is parts[k] * e_{colors[k]}.  The
dual is spanned by monochromatic monomial functions, which multiply by
a color-respecting quasi-shuffle; equivalently, quasi-symmetric
functions where products mixing two colors on one variable vanish.
"""

from __future__ import annotations

import itertools
from fractions import Fraction

from . import sym
from .lincomb import LinComb, TensorComb, bilinear

ALGEBRA = "MR"

CComp = tuple  # (parts, colors), two equal-length tuples


def element(l: int, terms, basis: str = "S") -> LinComb:
    return LinComb(ALGEBRA, basis, l, terms)


def weight(key: CComp) -> int:
    return sum(key[0])


def validate_key(key, l: int) -> None:
    parts, colors = key
    if len(parts) != len(colors):
        raise ValueError("parts and colors must have equal length")
    if any(p <= 0 for p in parts):
        raise ValueError("parts must be positive")
    if any(not 0 <= c < l for c in colors):
        raise ValueError(f"colors must lie in 0..{l - 1}")


def iter_colored_compositions(n: int, l: int):
    def comps(rem):
        if rem == 0:
            yield ()
            return
        for first in range(1, rem + 1):
            for rest in comps(rem - first):
                yield (first,) + rest

    out = []
    for parts in comps(n):
        for colors in itertools.product(range(l), repeat=len(parts)):
            out.append((parts, colors))
    return iter(sorted(out))


def dim(n: int, l: int) -> int:
    """sum over compositions of n of l^length = l (l+1)^(n-1)."""
    return l * (l + 1) ** (n - 1) if n else 1


def mr_embed_key(key: CComp, l: int) -> tuple:
    """The vector composition whose columns are parts[k] e_{colors[k]}."""
    parts, colors = key
    cols = []
    for p, c in zip(parts, colors):
        col = [0] * l
        col[c] = p
        cols.append(tuple(col))
    return tuple(cols)


def embed(x: LinComb) -> LinComb:
    """Embedding into the S basis of the level-l algebra."""
    return sym.element(
        x.level,
        [(mr_embed_key(k, x.level), c) for k, c in x.terms.items()],
    )


def from_sym_key(vcomp, l: int):
    """Inverse of the embedding on keys; None when a column mixes colors."""
    parts, colors = [], []
    for col in vcomp:
        nz = [i for i, v in enumerate(col) if v]
        if len(nz) != 1:
            return None
        parts.append(col[nz[0]])
        colors.append(nz[0])
    return tuple(parts), tuple(colors)


def s_mul(x: LinComb, y: LinComb) -> LinComb:
    """Concatenation of colored compositions."""

    def on_keys(k1, k2):
        return element(x.level, {(k1[0] + k2[0], k1[1] + k2[1]): 1})

    return bilinear(x, y, on_keys, zero=element(x.level, {}))


def s_comul(x: LinComb) -> TensorComb:
    """Coproduct: each part n with color i splits as sum of p+q = n with
    both halves keeping the color; multiplicative over parts."""
    acc: dict = {}
    for (parts, colors), coef in x.terms.items():
        for split in itertools.product(*(range(p + 1) for p in parts)):
            lp, lc, rp, rc = [], [], [], []
            for p, c, left in zip(parts, colors, split):
                if left:
                    lp.append(left)
                    lc.append(c)
                if p - left:
                    rp.append(p - left)
                    rc.append(c)
            key = ((tuple(lp), tuple(lc)), (tuple(rp), tuple(rc)))
            acc[key] = acc.get(key, 0) + coef
    return TensorComb(ALGEBRA, "S", x.level, acc)


def internal_mul(x: LinComb, y: LinComb) -> LinComb:
    """Internal product computed in the ambient algebra and pulled back;
    raises if the result leaves the embedded span (it never does)."""
    res = sym.internal_mul_oracle(embed(x), embed(y))
    acc: dict = {}
    for k, c in res.terms.items():
        cc = from_sym_key(k, x.level)
        if cc is None:
            raise sym.InternalClosureError(
                "internal product left the Mantaci-Reutenauer span",
                counterexample=k,
            )
        acc[cc] = c
    return element(x.level, acc)


def mr_internal_closure(n: int, l: int) -> bool:
    """True iff all pairs of weight-n basis elements multiply internally
    with support inside the embedded basis and integer coefficients."""
    keys = list(iter_colored_compositions(n, l))
    for a in keys:
        ea = embed(element(l, {a: 1}))
        for b in keys:
            res = sym.internal_mul_oracle(ea, embed(element(l, {b: 1})))
            for k, c in res.terms.items():
                if from_sym_key(k, l) is None or c.denominator != 1:
                    return False
    return True


# --- the dual: monochromatic monomial functions -------------------------

def mono_m_mul(x: LinComb, y: LinComb) -> LinComb:
    """Quasi-shuffle of (part, color) pairs; merging is allowed only for
    equal colors, adding the parts."""

    def shuffles(a, b):
        if not a[0]:
            yield b
            return
        if not b[0]:
            yield a
            return
        pa, ca = a[0][0], a[1][0]
        pb, cb = b[0][0], b[1][0]
        resta, restb = (a[0][1:], a[1][1:]), (b[0][1:], b[1][1:])
        for parts, colors in shuffles(resta, b):
            yield (pa,) + parts, (ca,) + colors
        for parts, colors in shuffles(a, restb):
            yield (pb,) + parts, (cb,) + colors
        if ca == cb:
            for parts, colors in shuffles(resta, restb):
                yield (pa + pb,) + parts, (ca,) + colors

    def on_keys(k1, k2):
        acc: dict = {}
        for key in shuffles(k1, k2):
            acc[key] = acc.get(key, 0) + 1
        return element(x.level, acc, "M")

    return bilinear(x, y, on_keys, zero=element(x.level, {}, "M"))


def realize_mono(key: CComp, k: int) -> dict:
    """Truncated expansion sum over j_1 < ... < j_m of the powers
    (x_{j_t}^{(u_t)})^{i_t}; every variable index carries one color."""
    parts, colors = key
    m = len(parts)
    poly: dict = {}
    for js in itertools.combinations(range(1, k + 1), m):
        mono = tuple(sorted(((j, c), p) for j, p, c in zip(js, parts, colors)))
        poly[mono] = poly.get(mono, 0) + 1
    return poly


def poly_mul_nilpotent(p: dict, q: dict) -> dict:
    """Polynomial product under the relations x_i^(a) x_i^(b) = 0 for
    a != b: terms assigning two colors to one variable vanish."""
    out: dict = {}
    for m1, c1 in p.items():
        for m2, c2 in q.items():
            expo = dict(m1)
            ok = True
            for (j, color), e in m2:
                if any(jj == j and cc != color for (jj, cc) in expo):
                    ok = False
                    break
                expo[(j, color)] = expo.get((j, color), 0) + e
            if not ok:
                continue
            mono = tuple(sorted(expo.items()))
            acc = out.get(mono, 0) + c1 * c2
            if acc:
                out[mono] = acc
            else:
                del out[mono]
    return out


def pair_mr(x: LinComb, y: LinComb) -> Fraction:
    """<M_{(I,u)}, S^{(J,v)}> = delta_{I,J} delta_{u,v}."""
    if x.basis != "M" or y.basis != "S":
        raise ValueError("pairing takes a monomial element and an S element")
    xs, ys = x.terms, y.terms
    if len(xs) > len(ys):
        xs, ys = ys, xs
    return sum((c * ys[k] for k, c in xs.items() if k in ys), Fraction(0))


def pair2_mr(s: TensorComb, t: TensorComb) -> Fraction:
    return sum(
        (c * t.terms[k] for k, c in s.terms.items() if k in t.terms),
        Fraction(0),
    )
