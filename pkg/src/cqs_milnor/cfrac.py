"""Hirzebruch-Jung (minus-sign) continued fractions over exact rationals.

A chain ``[c1, ..., cs]`` denotes ``c1 - 1/(c2 - 1/(... - 1/cs))``.
Values are :class:`fractions.Fraction`; a chain whose evaluation hits a
zero denominator evaluates to the sentinel :data:`DIVISION_BY_ZERO`.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Iterable, Sequence, Union

__all__ = [
    "DIVISION_BY_ZERO",
    "DivisionByZero",
    "CFValue",
    "as_fraction",
    "hj_expand",
    "eval_chain",
    "represents_zero",
]


class DivisionByZero:
    """Marker value for a chain whose evaluation divides by zero."""

    _instance = None

    def __new__(cls):
        if cls._instance is None:
            cls._instance = super().__new__(cls)
        return cls._instance

    def __repr__(self) -> str:
        return "DIVISION_BY_ZERO"

    def __reduce__(self):
        return (DivisionByZero, ())


DIVISION_BY_ZERO = DivisionByZero()

CFValue = Union[Fraction, DivisionByZero]


def as_fraction(x) -> Fraction:
    """Coerce ``int``, ``Fraction`` or a ``(num, den)`` pair to a Fraction."""
    if isinstance(x, Fraction):
        return x
    if isinstance(x, bool):
        raise TypeError("booleans are not rationals")
    if isinstance(x, int):
        return Fraction(x)
    if isinstance(x, tuple) and len(x) == 2:
        return Fraction(int(x[0]), int(x[1]))
    raise TypeError(f"cannot interpret {x!r} as an exact rational")


def hj_expand(x) -> tuple[int, ...]:
    """Expand a rational ``x >= 1`` into its Hirzebruch-Jung chain.

    Each entry is the ceiling of the current value, so for ``x > 1`` every
    entry is at least 2 and the expansion is unique.  ``x == 1`` gives
    ``(1,)``.

    >>> hj_expand(Fraction(4, 3))
    (2, 2, 2)
    >>> hj_expand(Fraction(5, 3))
    (2, 3)
    """
    x = as_fraction(x)
    if x < 1:
        raise ValueError(f"HJ expansion needs x >= 1, got {x}")
    if x == 1:
        return (1,)
    entries = []
    p, q = x.numerator, x.denominator
    while True:
        a = -(-p // q)
        entries.append(a)
        rest = a * q - p
        if rest == 0:
            break
        # x = a - rest/q  =>  next value is q/rest
        p, q = q, rest
    return tuple(entries)


def eval_chain(chain: Sequence[int]) -> CFValue:
    """Evaluate a chain right-to-left with exact arithmetic.

    Returns :data:`DIVISION_BY_ZERO` if an intermediate tail value is 0
    before the final step. The final value itself may be 0.
    """
    if len(chain) == 0:
        raise ValueError("a chain has at least one entry")
    # track v = p/q unreduced; cheaper than Fraction normalisation per step
    p, q = int(chain[-1]), 1
    for c in reversed(chain[:-1]):
        if p == 0:
            return DIVISION_BY_ZERO
        p, q = int(c) * p - q, p
    if q < 0:
        p, q = -p, -q
    return Fraction(p, q)


def represents_zero(chain: Iterable[int]) -> bool:
    """True iff ``chain`` is a chain representing zero.

    For length >= 2: all entries positive, every proper tail
    ``[c_i, ..., c_s]`` (``i >= 2``) is a positive rational, and the full
    chain evaluates to exactly 0.  Positive tails rule out division by zero
    along the way; they also exclude chains such as ``(2, 1, 1, 1, 1, 2)``
    that reach 0 only after passing through a negative tail.  The single
    chain ``(0,)`` is admitted for length 1 (the hypersurface case).
    """
    chain = tuple(chain)
    if len(chain) == 1:
        return chain[0] == 0
    if len(chain) < 2 or any(c <= 0 for c in chain):
        return False
    # tail value p/q with q > 0 throughout
    p, q = chain[-1], 1
    for c in reversed(chain[1:-1]):
        p, q = c * p - q, p
        if p <= 0:
            return False
    return chain[0] * p - q == 0
