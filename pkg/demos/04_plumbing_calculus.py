"""
Plumbing calculus
=================

Blow-downs, 0-absorption, lens-space recognition, and the graph of M.
"""

import random

from cqs_milnor import (
    StripMode,
    blow_down_once,
    linear_chain,
    milnor_link_graph,
    negate,
    recognize_lens,
    reduce,
    strip_arrows,
)
from cqs_milnor.cli import export_dot

G = linear_chain((2, 1, 2))
print(blow_down_once(G, 1).as_chain())    # ((1, 1), (0, 0))
print(reduce(G).as_chain())               # ((0,), (0,))

print(recognize_lens(linear_chain((2, 2, 2))))          # L(4,1)
print(recognize_lens(negate(linear_chain((2, 2, 2)))))  # L(4,3)

# Gamma for X(4,1), k = (1,2,1): arrows absorbed give back a, deleted give (0)
M = milnor_link_graph((2, 2, 2), (1, 2, 1))
print(recognize_lens(strip_arrows(M, StripMode.ABSORB)))
print(recognize_lens(strip_arrows(M, StripMode.DELETE)))
print(export_dot(M))

# different move orders can stop at different graphs for the same manifold
w = (1, 1, 1)
print(reduce(linear_chain(w)).as_chain()[0], reduce(linear_chain(w), random.Random(0)).as_chain()[0])  # (-1,) (0, 0)
