"""Milnor-fibre reports, one per smoothing component of X(n, q).

For a component given by the zero chain ``k <= a`` the Milnor fibre V is
``R x D^2`` (R an annulus, i.e. one 0-handle and one 1-handle) with
``r = sum(a_i - k_i)`` 2-handles attached.  The boundary piece M has the
plumbing graph: the chain ``k`` with ``a_i - k_i`` arrows at vertex ``i``.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Sequence

from .chains import enumerate_components, is_component_chain
from .plumbing import (
    LensSpace,
    PlumbingGraph,
    StripMode,
    blows_down_to_zero,
    chain_with_arrows,
    recognize_lens,
    strip_arrows,
)
from .quotient import QuotientSingularity, hj_data

__all__ = [
    "HandleCounts",
    "MilnorFibreReport",
    "milnor_link_graph",
    "milnor_report",
    "all_reports",
    "homotopy_description",
]

# Structural facts reported with each component (stated results, not computed here).
BODY_STATEMENT = "A = closure(V - B) ~ R x D^2, R an annulus (one 0-handle, one 1-handle)"
HANDLES_STATEMENT = "B = disjoint union of r 2-handles D^2 x D^2"
CW_STATEMENT = "V ~ CW complex: 1-skeleton S^1 plus r 2-cells"
PI1_STATEMENT = "pi_1(V) finite cyclic"


@dataclass(frozen=True)
class HandleCounts:
    zero_handles: int
    one_handles: int
    two_handles: int


@dataclass(frozen=True)
class MilnorFibreReport:
    singularity: QuotientSingularity
    a: tuple[int, ...]
    k: tuple[int, ...]
    r: int
    b2: int
    euler_characteristic: int
    handle_counts: HandleCounts
    boundary_link: LensSpace
    graph_M: PlumbingGraph = field(compare=False)
    pi1: str = "finite cyclic"
    pi1_order: str = "UNKNOWN"

    @property
    def b1(self) -> int:
        return 0

    def as_dict(self) -> dict:
        weights, arrows = self.graph_M.as_chain()
        return {
            "n": self.singularity.n,
            "q": self.singularity.q,
            "a": list(self.a),
            "k": list(self.k),
            "r": self.r,
            "b2": self.b2,
            "euler_characteristic": self.euler_characteristic,
            "handles": {
                "0": self.handle_counts.zero_handles,
                "1": self.handle_counts.one_handles,
                "2": self.handle_counts.two_handles,
            },
            "boundary_link": {"n": self.boundary_link.n, "q": self.boundary_link.q},
            "graph_M": {"weights": list(weights), "arrow_counts": list(arrows)},
            "pi1": {"type": self.pi1, "order": self.pi1_order},
            "statements": [BODY_STATEMENT, HANDLES_STATEMENT, PI1_STATEMENT],
        }


def milnor_link_graph(a: Sequence[int], k: Sequence[int]) -> PlumbingGraph:
    """Plumbing graph of M: chain ``k`` with ``a_i - k_i`` arrows on vertex ``i``.

    Arrow labels are ``(i, j)``, vertex index ``i`` and ordinal ``j``, both
    1-based.  Raises ``ValueError`` unless ``k`` is a component chain for
    ``a``; the construction checks that absorbing the arrows gives back
    ``a`` and that deleting them leaves a graph blowing down to ``(0)``.
    """
    a, k = tuple(a), tuple(k)
    if not is_component_chain(k, a):
        raise ValueError(f"{k} is not a chain representing zero bounded by {a}")
    f = tuple(ai - ki for ai, ki in zip(a, k))
    G = chain_with_arrows(k, f)
    if strip_arrows(G, StripMode.ABSORB).as_chain()[0] != a:
        raise AssertionError("absorbing arrows did not recover the HJ data")
    if not blows_down_to_zero(strip_arrows(G, StripMode.DELETE)):
        raise AssertionError(f"closure of graph for k={k} does not blow down to (0)")
    return G


def milnor_report(X, k: Sequence[int]) -> MilnorFibreReport:
    if not isinstance(X, QuotientSingularity):
        X = QuotientSingularity(*X)
    a = hj_data(X)
    k = tuple(k)
    G = milnor_link_graph(a, k)
    r = sum(a) - sum(k)
    link = recognize_lens(strip_arrows(G, StripMode.ABSORB))
    if link != LensSpace(X.n, X.q):
        raise AssertionError(f"boundary of {X} recognised as {link}")
    return MilnorFibreReport(
        singularity=X,
        a=a,
        k=k,
        r=r,
        b2=r - 1,
        euler_characteristic=r,
        handle_counts=HandleCounts(1, 1, r),
        boundary_link=link,
        graph_M=G,
    )


def all_reports(X) -> list[MilnorFibreReport]:
    if not isinstance(X, QuotientSingularity):
        X = QuotientSingularity(*X)
    return [milnor_report(X, k) for k in enumerate_components(X)]


def homotopy_description(rep: MilnorFibreReport) -> dict:
    """Cell counts of the CW model and the structural statements."""
    cells = {0: 1, 1: 1, 2: rep.r}
    return {
        "cells": cells,
        "euler_characteristic": cells[0] - cells[1] + cells[2],
        "one_skeleton": "S^1",
        "statements": [BODY_STATEMENT, HANDLES_STATEMENT, CW_STATEMENT, PI1_STATEMENT],
    }
