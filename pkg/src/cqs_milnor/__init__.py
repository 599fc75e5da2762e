"""Smoothing components and Milnor fibres of cyclic quotient singularities.

Exact combinatorics only: Hirzebruch-Jung continued fractions, chains
representing zero, plumbing-graph calculus and per-component reports.
"""

from .cfrac import DIVISION_BY_ZERO, eval_chain, hj_expand, represents_zero
from .chains import count_zero_chains, enumerate_components, is_component_chain
from .milnor import (
    MilnorFibreReport,
    all_reports,
    homotopy_description,
    milnor_link_graph,
    milnor_report,
)
from .plumbing import (
    S1_X_S2,
    LensSpace,
    NotRecognized,
    PlumbingGraph,
    StripMode,
    absorb_zero_once,
    blow_down_once,
    blows_down_to_zero,
    graphs_equal,
    linear_chain,
    negate,
    recognize_lens,
    reduce,
    strip_arrows,
)
from .quotient import (
    QuotientSingularity,
    dual,
    embedding_dimension,
    hilbert_basis_oracle,
    hj_data,
    invariant_exponents,
)

__version__ = "0.1.0"
