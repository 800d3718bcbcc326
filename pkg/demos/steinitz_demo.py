"""Extend a frame to a basis using vectors of a preassigned basis.

Scanning the given basis left to right and keeping each vector that
preserves independence always picks exactly codim-many vectors, so the
result is again a basis.
"""

from exactspan import QQ, Frame, rank_seq, sequence, steinitz_extend

basis = Frame(sequence(QQ, [[1, 0, 0, 0], [0, 1, 0, 0], [0, 0, 1, 0], [0, 0, 0, 1]]))
frame = Frame(sequence(QQ, [[1, 1, 0, 0], [0, 0, 1, 1]]))

extended, picked, r = steinitz_extend(basis, frame)
print("picked basis indices:", picked)
print("number picked r =", r, "(equals ambient dim minus frame length)")
for v in extended:
    print(" ", v)
print("extended rank:", rank_seq(extended.seq))
