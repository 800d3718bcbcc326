"""Cross-check the elimination engine against definition-level brute force.

Over a small finite field everything can be enumerated: the span as the
set of all linear combinations, membership by trying every coefficient
tuple, rank as the longest independent subsequence.  The engine must
agree with these definitional computations exactly.
"""

import itertools

from exactspan import (
    GF,
    enum_span,
    member_bruteforce,
    rank_bruteforce,
    rank_seq,
    sequence,
    solve_in_span,
    vector,
)

g2 = GF(2)
seq = sequence(g2, [[1, 1, 0], [0, 1, 1]])

span = sorted(enum_span(seq), key=str)
print("span of", [str(v) for v in seq], "=")
for v in span:
    print(" ", v)

print("definitional rank:", rank_bruteforce(seq), "| engine rank:", rank_seq(seq))

agree = 0
for bits in itertools.product([0, 1], repeat=3):
    x = vector(g2, bits)
    by_oracle = member_bruteforce(seq, x)
    by_engine = solve_in_span(seq, x) is not None
    assert by_oracle == by_engine
    agree += 1
print(f"membership agrees with brute force on all {agree} vectors of GF(2)^3")
