"""Exact computer algebra for graded Hopf algebras built on colored words.

The package implements, over the rationals and with no floating point
anywhere, the algebras

* ``fqsym``  -- free quasi-symmetric functions of level l (colored
  permutations, G and F bases, multiplicative and adjoint bases),
* ``sym``    -- noncommutative symmetric functions of level l (vector
  compositions, outer and internal products),
* ``qsym``   -- quasi-symmetric functions of level l (monomial and
  quasi-ribbon bases, refinement order, Cauchy pairing),
* ``mr``     -- the Mantaci-Reutenauer subalgebra and its graded dual,
* ``pqsym``  -- colored parking quasi-symmetric functions, parking
  functions of type B and non-crossing partitions of type B,

together with brute-force oracles for every product and coproduct and a
command line front end (``colorhopf``) exposing arithmetic, enumeration,
generating series and the verification suites.
"""

__version__ = "0.1.0"

__all__ = [
    "words",
    "series",
    "lincomb",
    "fqsym",
    "sym",
    "qsym",
    "mr",
    "pqsym",
    "keyio",
    "verify",
    "cli",
]
