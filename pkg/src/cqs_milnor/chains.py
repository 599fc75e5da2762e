"""Enumeration of chains representing zero.

``enumerate_components`` lists the chains ``k <= a`` that parametrize the
smoothing components of X(n, q); ``count_zero_chains`` counts all positive
zero chains of a given length (Catalan numbers, used as a cross-check).
"""

from __future__ import annotations

import itertools
import math
from fractions import Fraction
from typing import Sequence

from .cfrac import represents_zero
from .quotient import QuotientSingularity, hj_data

__all__ = [
    "COUNT_MAX_LENGTH",
    "enumerate_components",
    "enumerate_bounded",
    "enumerate_bounded_bruteforce",
    "count_zero_chains",
    "is_component_chain",
]

COUNT_MAX_LENGTH = 9


def enumerate_bounded(bound: Sequence[int]) -> list[tuple[int, ...]]:
    """All zero chains ``k`` with ``1 <= k_i <= bound_i``, lexicographic.

    A length-1 bound yields ``[(0,)]``: the only length-1 zero chain.

    The scan runs left to right.  Once ``k_1..k_{i-1}`` are fixed, the value
    the tail ``[k_i, ..., k_s]`` must take for the whole chain to be zero is
    determined.  Every proper tail of a zero chain is a positive rational
    (this holds for ``(1, 1)`` and is preserved by blowing up), and a
    positive tail after ``k_i`` forces ``tail_i < k_i``.  Writing a
    positive tail as a reduced fraction, its numerator is at most the
    product of the remaining entry bounds.  Branches that violate any of
    these conditions contain no zero chain and are skipped.
    """
    bound = tuple(int(b) for b in bound)
    s = len(bound)
    if s == 0:
        raise ValueError("bound must be nonempty")
    if s == 1:
        return [(0,)] if bound[0] >= 0 else []
    # cap[i] = product of bound[i:], the largest numerator a tail from i can have
    cap = [1] * (s + 1)
    for i in range(s - 1, -1, -1):
        cap[i] = cap[i + 1] * bound[i]
    found: list[tuple[int, ...]] = []
    prefix: list[int] = []

    def descend(i: int, target: Fraction) -> None:
        if target.numerator > cap[i]:
            return
        if i == s - 1:
            if target.denominator == 1 and 1 <= target <= bound[i]:
                found.append(tuple(prefix) + (target.numerator,))
            return
        for k in range(max(1, math.floor(target) + 1), bound[i] + 1):
            prefix.append(k)
            descend(i + 1, 1 / (k - target))
            prefix.pop()

    descend(0, Fraction(0))
    return found


def enumerate_bounded_bruteforce(bound: Sequence[int]) -> list[tuple[int, ...]]:
    """Reference scan of the full box; same output as :func:`enumerate_bounded`."""
    bound = tuple(bound)
    if len(bound) == 1:
        return [(0,)] if bound[0] >= 0 else []
    boxes = [range(1, b + 1) for b in bound]
    return [k for k in itertools.product(*boxes) if represents_zero(k)]


def enumerate_components(X) -> list[tuple[int, ...]]:
    """Chains ``k <= a`` representing zero, ``a = hj_data(X)``."""
    if not isinstance(X, QuotientSingularity):
        X = QuotientSingularity(*X)
    return enumerate_bounded(hj_data(X))


def count_zero_chains(s: int, entry_bound: int | None = None) -> int:
    """Number of positive length-``s`` chains representing zero.

    Entries are scanned up to ``entry_bound`` (default ``s``, one above the
    largest entry a zero chain of length ``s`` can have).
    """
    if s < 1:
        raise ValueError("length must be positive")
    if s > COUNT_MAX_LENGTH:
        raise ValueError(f"exhaustive count limited to s <= {COUNT_MAX_LENGTH}, got {s}")
    if s == 1:
        return 0
    if entry_bound is None:
        entry_bound = s
    return len(enumerate_bounded((entry_bound,) * s))


def is_component_chain(k: Sequence[int], a: Sequence[int]) -> bool:
    k, a = tuple(k), tuple(a)
    return (
        len(k) == len(a)
        and all(ki <= ai for ki, ai in zip(k, a))
        and represents_zero(k)
    )
