"""Cyclic quotient singularities X(n, q) = C^2 / <diag(z, z^q)>.

Provides the HJ data ``a = [n/(n-q)]``, the embedding dimension ``e``, and
the exponents ``(i_k, j_k)`` of the invariant monomials ``x^i y^j`` that
embed X(n, q) into C^e.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction

from .cfrac import hj_expand

__all__ = [
    "QuotientSingularity",
    "hj_data",
    "embedding_dimension",
    "invariant_exponents",
    "hilbert_basis_oracle",
    "dual",
]

ORACLE_MAX_N = 200


@dataclass(frozen=True, order=True)
class QuotientSingularity:
    n: int
    q: int

    def __post_init__(self):
        n, q = self.n, self.q
        if not (isinstance(n, int) and isinstance(q, int)):
            raise TypeError("n and q must be integers")
        if n < 2:
            raise ValueError(f"need n >= 2, got n={n}")
        if not 0 < q < n:
            raise ValueError(f"need 0 < q < n, got (n, q) = ({n}, {q})")
        if math.gcd(n, q) != 1:
            raise ValueError(f"n and q must be coprime, got gcd({n}, {q}) = {math.gcd(n, q)}")

    def __str__(self) -> str:
        return f"X({self.n},{self.q})"


def _coerce(X) -> QuotientSingularity:
    if isinstance(X, QuotientSingularity):
        return X
    return QuotientSingularity(*X)


def hj_data(X) -> tuple[int, ...]:
    """HJ expansion of ``n/(n-q)``; every entry is >= 2."""
    X = _coerce(X)
    return hj_expand(Fraction(X.n, X.n - X.q))


def embedding_dimension(X) -> int:
    return len(hj_data(X)) + 2


def invariant_exponents(X) -> tuple[tuple[int, int], ...]:
    """Exponents ``(i_k, j_k)``, k = 1..e, of the minimal invariant monomials.

    Seeded with ``(n, 0)`` and ``(n - q, 1)`` and continued by
    ``(i_{k-1}, j_{k-1}) + (i_{k+1}, j_{k+1}) = a_{k-1} (i_k, j_k)``.
    """
    X = _coerce(X)
    a = hj_data(X)
    table = [(X.n, 0), (X.n - X.q, 1)]
    for ak in a:
        (i0, j0), (i1, j1) = table[-2], table[-1]
        table.append((ak * i1 - i0, ak * j1 - j0))
    if table[-1] != (0, X.n):
        raise RuntimeError(f"exponent recursion for {X} ended at {table[-1]}, expected (0, {X.n})")
    return tuple(table)


def hilbert_basis_oracle(X, max_n: int = ORACLE_MAX_N) -> tuple[tuple[int, int], ...]:
    """Minimal generators of the semigroup {(i, j) >= 0 : i + q j = 0 mod n}.

    Brute force: a nonzero solution is a generator iff it is not the sum of
    two nonzero solutions.  Ordered by decreasing ``i``.
    """
    X = _coerce(X)
    n, q = X.n, X.q
    if n > max_n:
        raise ValueError(f"oracle bound exceeded: n={n} > {max_n}")
    sols = [
        (i, j)
        for i in range(n + 1)
        for j in range(n + 1)
        if (i, j) != (0, 0) and (i + q * j) % n == 0
    ]
    solset = set(sols)
    gens = []
    for i, j in sols:
        decomposable = any(
            (i - u, j - v) in solset
            for u, v in sols
            if u <= i and v <= j and (u, v) != (i, j)
        )
        if not decomposable:
            gens.append((i, j))
    return tuple(sorted(gens, key=lambda p: -p[0]))


def dual(X) -> QuotientSingularity:
    """``(n, q) -> (n, n - q)``; the link of the result is -L(n, q)."""
    X = _coerce(X)
    return QuotientSingularity(X.n, X.n - X.q)
