"""Cross-module self-checks, scaled by the largest ``n`` examined.

Each suite returns a :class:`SuiteResult`; :func:`verify` runs them all.
"""

from __future__ import annotations

import itertools
import math
from dataclasses import dataclass, field
from typing import Iterator

from .cfrac import represents_zero
from .chains import count_zero_chains, enumerate_components
from .milnor import all_reports
from .plumbing import (
    LensSpace,
    StripMode,
    blows_down_to_zero,
    linear_chain,
    negate,
    recognize_lens,
    strip_arrows,
)
from .quotient import QuotientSingularity, hilbert_basis_oracle, hj_data, invariant_exponents

__all__ = [
    "MAX_VERIFY_N",
    "SuiteResult",
    "catalan",
    "coprime_pairs",
    "positive_chains_by_numerator",
    "verify",
]

MAX_VERIFY_N = 60


@dataclass
class SuiteResult:
    name: str
    checked: int = 0
    failures: list[str] = field(default_factory=list)

    @property
    def passed(self) -> bool:
        return not self.failures

    def check(self, ok: bool, what) -> None:
        self.checked += 1
        if not ok and len(self.failures) < 20:
            self.failures.append(str(what))
        elif not ok:
            self.failures.append("...")

    def as_dict(self) -> dict:
        return {
            "name": self.name,
            "checked": self.checked,
            "passed": self.passed,
            "failures": self.failures[:20],
        }


def catalan(m: int) -> int:
    """Catalan number via C_{j+1} = sum_i C_i C_{j-i}."""
    c = [1]
    for j in range(m):
        c.append(sum(c[i] * c[j - i] for i in range(j + 1)))
    return c[m]


def coprime_pairs(max_n: int, min_n: int = 2) -> Iterator[QuotientSingularity]:
    for n in range(min_n, max_n + 1):
        for q in range(1, n):
            if math.gcd(n, q) == 1:
                yield QuotientSingularity(n, q)


def positive_chains_by_numerator(max_n: int) -> Iterator[tuple[tuple[int, ...], int, int]]:
    """All chains with entries >= 2 and value ``P/Q``, ``P <= max_n``.

    Yields ``(chain, P, Q)``.  ``P`` strictly grows when an entry >= 2 is
    appended, so the scan is complete for the range.
    """
    # value of [w_1..w_k] = P_k / Q_k with P_k = w_k P_{k-1} - P_{k-2}
    stack = [((), 1, 0, 0, -1)]
    while stack:
        chain, p1, q1, p0, q0 = stack.pop()
        for w in range(2, max_n + 1):
            p, q = w * p1 - p0, w * q1 - q0
            if p > max_n:
                break
            ch = chain + (w,)
            yield ch, p, q
            stack.append((ch, p, q, p1, q1))


def _suite_exponents(max_n: int) -> SuiteResult:
    res = SuiteResult("exponent_oracle_agreement")
    for X in coprime_pairs(max_n):
        res.check(invariant_exponents(X) == hilbert_basis_oracle(X), X)
    return res


def _suite_zero_chains(max_len: int) -> SuiteResult:
    res = SuiteResult("zero_chain_equivalence")
    for s in range(2, max_len + 1):
        for k in itertools.product(range(1, s + 1), repeat=s):
            res.check(represents_zero(k) == blows_down_to_zero(linear_chain(k)), k)
    return res


def _suite_catalan(max_len: int) -> SuiteResult:
    res = SuiteResult("catalan_counts")
    for s in range(2, max_len + 1):
        count = count_zero_chains(s)
        res.check(count == catalan(s - 1), f"s={s}: {count} != {catalan(s - 1)}")
        res.check(count_zero_chains(s, s + 2) == count, f"s={s}: unstable under bound {s + 2}")
    return res


def _suite_lens(max_n: int) -> SuiteResult:
    res = SuiteResult("lens_uniqueness")
    for X in coprime_pairs(max_n):
        got = recognize_lens(linear_chain(hj_data(X)))
        res.check(got == LensSpace(X.n, X.q), f"{X}: {got}")
    seen: dict[tuple[int, int], list[tuple[int, ...]]] = {}
    for chain, p, qq in positive_chains_by_numerator(max_n):
        seen.setdefault((p, p - qq), []).append(chain)
    for X in coprime_pairs(max_n):
        chains = seen.pop((X.n, X.q), [])
        res.check(chains == [hj_data(X)], f"{X}: chains {chains}")
    res.check(not seen, f"unexpected lens parameters {sorted(seen)[:5]}")
    return res


def _suite_negation(max_n: int) -> SuiteResult:
    res = SuiteResult("orientation_duality")
    for X in coprime_pairs(max_n):
        got = recognize_lens(negate(linear_chain(hj_data(X))))
        res.check(got == LensSpace(X.n, X.n - X.q), f"{X}: {got}")
    return res


def _suite_reports(max_n: int) -> SuiteResult:
    res = SuiteResult("report_consistency")
    for X in coprime_pairs(max_n):
        reports = all_reports(X)
        res.check(len(reports) == len(enumerate_components(X)) >= 1, f"{X}: no components")
        for rep in reports:
            G = rep.graph_M
            ok = (
                recognize_lens(strip_arrows(G, StripMode.ABSORB)) == LensSpace(X.n, X.q)
                and blows_down_to_zero(strip_arrows(G, StripMode.DELETE))
                and len(G.arrows) == rep.r == sum(rep.a) - sum(rep.k) >= 1
                and rep.b2 == rep.r - 1
                and rep.euler_characteristic == rep.r == 1 - rep.b1 + rep.b2
            )
            res.check(ok, f"{X} k={rep.k}")
    return res


def verify(max_n: int) -> dict:
    """Run every suite up to ``max_n`` (<= 60) and summarise.

    Chain-length suites use lengths up to ``min(7, (max_n + 2) // 2)``.
    """
    if max_n > MAX_VERIFY_N:
        raise ValueError(f"verify supports max_n <= {MAX_VERIFY_N}, got {max_n}")
    max_len = min(7, (max_n + 2) // 2)
    suites = [
        _suite_exponents(max_n),
        _suite_zero_chains(max_len),
        _suite_catalan(max_len),
        _suite_lens(max_n),
        _suite_negation(max_n),
        _suite_reports(max_n),
    ]
    failed = sum(not s.passed for s in suites)
    return {
        "max_n": max_n,
        "max_chain_length": max_len,
        "suites": [s.as_dict() for s in suites],
        "passed": len(suites) - failed,
        "failed": failed,
    }
