"""Replay the inductive proof that two equal-length frames spanning the
same subspace express each other.

The engine resolves the inclusion system "every e_i lies in the span of
f" and emits a coefficient certificate.  The trace shows the induction
level by level: at each level an annihilating map is built per index, a
nonzero kernel witness is computed for its restriction to the span of f,
and the witness (a scalar multiple of e_i) yields the inclusion
coefficients.  The certificate is then re-validated by substitution
alone, with no elimination involved.
"""

from exactspan import GF, Frame, check_certificate, sequence, trace_induction, verify_basic_lemma
from exactspan.textio import render_certificate, render_trace

g3 = GF(3)
e = Frame(sequence(g3, [[1, 0, 0], [0, 1, 0], [0, 0, 1]]))
f = Frame(sequence(g3, [[1, 0, 1], [1, 1, 0], [0, 1, 1]]))

cert = verify_basic_lemma(e, f)
print(render_certificate(cert))
print("substitution check:", check_certificate(cert))
print()

trace = trace_induction(e, f)
print(render_trace(trace))
final = trace.final_certificate
print("trace agrees with the direct certificate:",
      final.coefficient_matrix == cert.coefficient_matrix)
