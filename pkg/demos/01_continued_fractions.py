"""
Hirzebruch-Jung continued fractions and chains representing zero
================================================================

Minus-sign continued fractions, exact evaluation, and the zero-chain test.
"""

from fractions import Fraction

from cqs_milnor import eval_chain, hj_expand, represents_zero
from cqs_milnor.chains import count_zero_chains

# n/(n-q) for X(4,1) is 4/3
print(hj_expand(Fraction(4, 3)))          # (2, 2, 2)
print(eval_chain((2, 2, 2)))              # 4/3
print(eval_chain((1, 1, 1)))              # DIVISION_BY_ZERO

# zero chains: positive entries, positive proper tails, value 0
for chain in [(1, 1), (1, 2, 1), (2, 1, 2), (2, 2), (2, 1, 1, 1, 1, 2)]:
    print(chain, represents_zero(chain))

# their number for length s is the Catalan number C(s-1)
print([count_zero_chains(s) for s in range(2, 8)])
