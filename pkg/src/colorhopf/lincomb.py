"""Exact sparse linear combinations over arbitrary hashable basis keys.

A :class:`LinComb` is a finite mapping from keys to nonzero rational
coefficients, tagged with (algebra, basis, level); mixing tags raises.
:class:`TensorComb` is the same over pairs of keys.  Both are immutable
by convention: operations return fresh objects.

The matrix helpers at the bottom (transition matrices, unitriangular
inversion, exact rank and kernel dimension) work over Fractions with no
floating point.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Callable, Hashable, Iterable, Mapping

Rational = int | Fraction


class TagMismatchError(ValueError):
    """Raised when combining elements with different (algebra, basis, l)."""


class NotUnitriangularError(ValueError):
    """Raised when a matrix is not unitriangular under any key ordering."""


def _clean(terms) -> dict:
    if isinstance(terms, Mapping):
        items = terms.items()
    else:
        items = terms
    out: dict = {}
    for key, coef in items:
        coef = Fraction(coef)
        if coef:
            out[key] = out.get(key, Fraction(0)) + coef
            if not out[key]:
                del out[key]
    return out


class _Comb:
    __slots__ = ("algebra", "basis", "level", "terms")

    def __init__(self, algebra: str, basis: str, level: int, terms=()):
        self.algebra = algebra
        self.basis = basis
        self.level = level
        self.terms = _clean(terms)

    def _tags(self):
        return (self.algebra, self.basis, self.level)

    def _check(self, other):
        if not isinstance(other, type(self)):
            raise TypeError(f"cannot combine {type(self).__name__} with {type(other).__name__}")
        if self._tags() != other._tags():
            raise TagMismatchError(f"tag mismatch: {self._tags()} vs {other._tags()}")

    def _new(self, terms):
        return type(self)(self.algebra, self.basis, self.level, terms)

    def __add__(self, other):
        self._check(other)
        terms = dict(self.terms)
        for key, coef in other.terms.items():
            acc = terms.get(key, Fraction(0)) + coef
            if acc:
                terms[key] = acc
            else:
                terms.pop(key, None)
        return self._new(terms)

    def __sub__(self, other):
        return self + (-other)

    def __neg__(self):
        return self._new({k: -c for k, c in self.terms.items()})

    def __mul__(self, scalar: Rational):
        scalar = Fraction(scalar)
        if not scalar:
            return self._new({})
        return self._new({k: c * scalar for k, c in self.terms.items()})

    __rmul__ = __mul__

    def __eq__(self, other):
        return (
            isinstance(other, type(self))
            and self._tags() == other._tags()
            and self.terms == other.terms
        )

    def __hash__(self):
        return hash((type(self).__name__, self._tags(), frozenset(self.terms.items())))

    def __bool__(self):
        return bool(self.terms)

    def __len__(self):
        return len(self.terms)

    def __iter__(self):
        return iter(self.terms.items())

    def __repr__(self):
        body = " + ".join(f"{c}*{self.basis}{list(k)}" for k, c in sorted(
            self.terms.items(), key=lambda kv: repr(kv[0]))) or "0"
        return f"<{self.algebra}/{self.basis} l={self.level}: {body}>"

    def coefficient(self, key) -> Fraction:
        return self.terms.get(key, Fraction(0))

    def is_zero(self) -> bool:
        return not self.terms


class LinComb(_Comb):
    """Linear combination of basis keys with exact rational coefficients."""

    def apply(self, fn: Callable[[Hashable], "LinComb"]) -> "LinComb":
        """Linear extension of a map key -> LinComb."""
        acc: dict = {}
        tags = None
        for key, coef in self.terms.items():
            piece = fn(key)
            tags = piece
            for k, c in piece.terms.items():
                acc[k] = acc.get(k, 0) + c * coef
        if tags is None:
            return self._new({})
        return LinComb(tags.algebra, tags.basis, tags.level, acc)

    def map_keys(self, fn: Callable[[Hashable], Hashable], basis: str | None = None) -> "LinComb":
        """Relabel keys through a bijection, optionally switching basis tag."""
        return LinComb(
            self.algebra,
            self.basis if basis is None else basis,
            self.level,
            [(fn(k), c) for k, c in self.terms.items()],
        )


class TensorComb(_Comb):
    """Linear combination of ordered pairs of basis keys."""

    def apply_legs(self, fn) -> "TensorComb":
        """Bilinear extension of a map (key1, key2) -> TensorComb."""
        out = None
        for (k1, k2), coef in self.terms.items():
            piece = fn(k1, k2) * coef
            out = piece if out is None else out + piece
        return out if out is not None else self._new({})

    def swap(self) -> "TensorComb":
        return self._new({(k2, k1): c for (k1, k2), c in self.terms.items()})


def tensor(x: LinComb, y: LinComb) -> TensorComb:
    """Tensor product of two linear combinations (same tags)."""
    if (x.algebra, x.basis, x.level) != (y.algebra, y.basis, y.level):
        raise TagMismatchError("tensor factors must share tags")
    terms = {}
    for k1, c1 in x.terms.items():
        for k2, c2 in y.terms.items():
            terms[(k1, k2)] = c1 * c2
    return TensorComb(x.algebra, x.basis, x.level, terms)


def tensor_mul(s: TensorComb, t: TensorComb, mul) -> TensorComb:
    """Componentwise product (a (x) b)(c (x) d) = ac (x) bd, with the
    leg product given by ``mul`` on LinCombs of single keys."""
    s._check(t)
    acc: dict = {}
    single = lambda k: LinComb(s.algebra, s.basis, s.level, {k: 1})
    for (a, b), c1 in s.terms.items():
        for (cc, d), c2 in t.terms.items():
            left = mul(single(a), single(cc))
            right = mul(single(b), single(d))
            coef = c1 * c2
            for k1, v1 in left.terms.items():
                for k2, v2 in right.terms.items():
                    key = (k1, k2)
                    acc[key] = acc.get(key, 0) + v1 * v2 * coef
    return TensorComb(s.algebra, s.basis, s.level, acc)


def bilinear(x: LinComb, y: LinComb, fn, zero: LinComb | None = None) -> LinComb:
    """Bilinear extension of a map (key1, key2) -> LinComb.

    ``zero`` supplies the (possibly differently tagged) result when no
    key pair exists; without it an empty extension raises.
    """
    acc: dict = {}
    tags = None
    for k1, c1 in x.terms.items():
        for k2, c2 in y.terms.items():
            piece = fn(k1, k2)
            tags = piece
            coef = c1 * c2
            for k, c in piece.terms.items():
                acc[k] = acc.get(k, 0) + c * coef
    if tags is None:
        if zero is None:
            raise ValueError("bilinear extension of empty combinations is untagged")
        return zero
    return LinComb(tags.algebra, tags.basis, tags.level, acc)


def graded_antipode(x: LinComb, mul, comul, degree, cache: dict) -> LinComb:
    """Antipode by the usual graded recursion: on a key k of positive
    degree, S(k) = -k - sum S(k') k'' over the reduced coproduct."""

    def single(key):
        return LinComb(x.algebra, x.basis, x.level, {key: 1})

    def on_key(key) -> LinComb:
        if key in cache:
            return cache[key]
        if degree(key) == 0:
            out = single(key)
        else:
            out = -single(key)
            for (k1, k2), coef in comul(single(key)).terms.items():
                if degree(k1) == 0 or degree(k2) == 0:
                    continue
                out = out - mul(on_key(k1), single(k2)) * coef
        cache[key] = out
        return out

    return x.apply(on_key)


# --- exact matrices ---------------------------------------------------

def transition_matrix(keys: list, expand) -> list[list[Fraction]]:
    """Square matrix of the expansion map on a fixed ordered key list;
    M[i][j] is the coefficient of keys[j] in expand(keys[i]).

    Raises if an expansion involves a key outside the list (the map
    would leave the degree-n span, so the matrix is not square).
    """
    index = {k: i for i, k in enumerate(keys)}
    mat = []
    for key in keys:
        row = [Fraction(0)] * len(keys)
        for k, c in expand(key).terms.items():
            if k not in index:
                raise ValueError(f"expansion of {key!r} leaves the span: {k!r}")
            row[index[k]] = Fraction(c)
        mat.append(row)
    return mat


def invert_unitriangular(mat: list[list[Fraction]]) -> list[list[Fraction]]:
    """Exact inverse of a matrix that is unitriangular under *some*
    simultaneous row/column ordering.

    The dependency digraph i -> j (for nonzero offdiagonal M[i][j]) must
    be acyclic and the diagonal must be all ones; rows are solved in
    topological order by back substitution.
    """
    n = len(mat)
    for i in range(n):
        if mat[i][i] != 1:
            raise NotUnitriangularError(f"diagonal entry {i} is {mat[i][i]}, not 1")
    deps = {i: [j for j in range(n) if j != i and mat[i][j]] for i in range(n)}
    order, state = [], [0] * n  # 0 new, 1 on stack, 2 done
    for root in range(n):
        if state[root]:
            continue
        stack = [(root, iter(deps[root]))]
        state[root] = 1
        while stack:
            node, it = stack[-1]
            advanced = False
            for j in it:
                if state[j] == 1:
                    raise NotUnitriangularError("cyclic dependencies: no triangular ordering")
                if state[j] == 0:
                    state[j] = 1
                    stack.append((j, iter(deps[j])))
                    advanced = True
                    break
            if not advanced:
                state[node] = 2
                order.append(node)
                stack.pop()
    inv = [None] * n
    for i in order:
        row = {i: Fraction(1)}
        for j in deps[i]:
            for k, c in inv[j].items():
                acc = row.get(k, Fraction(0)) - mat[i][j] * c
                if acc:
                    row[k] = acc
                else:
                    row.pop(k, None)
        inv[i] = row
    return [[inv[i].get(j, Fraction(0)) for j in range(n)] for i in range(n)]


def rank(rows: Iterable) -> int:
    """Exact rank of a sparse matrix given as rows of {column: coeff}."""
    pivots: dict = {}  # pivot column -> reduced row
    r = 0
    for row in rows:
        row = {c: Fraction(v) for c, v in (row.items() if isinstance(row, dict)
               else enumerate(row)) if v}
        while row:
            col = min(row)
            if col not in pivots:
                lead = row[col]
                pivots[col] = {c: v / lead for c, v in row.items()}
                r += 1
                break
            factor = row[col]
            for c, v in pivots[col].items():
                acc = row.get(c, Fraction(0)) - factor * v
                if acc:
                    row[c] = acc
                else:
                    row.pop(c, None)
    return r


def kernel_dim(rows: Iterable, ncols: int) -> int:
    """Nullity of a linear map given by rows over the columns 0..ncols-1."""
    return ncols - rank(rows)
