"""Conjecture probes: tmr additivity, the inv lower bound, the Schur question.

These scans gather machine-checked evidence; a counterexample is emitted as
a replayable certificate, not raised as a failure.

Run:  python demos/05_conjecture_scans.py
"""

from invlab import (
    SymMatGF2,
    decode,
    family_to_matrix,
    replay,
    scan_inv_lower_bound,
    scan_schur_3x3,
    scan_tmr_additivity,
    schur_probe,
    VertexFamily,
)

# Is tmr always additive over dijoins?  Cases with a small left block are
# theorems (asserted); the rest is conjecture evidence.
report = scan_tmr_additivity(4, 4)
print(report.table())
print()

# Dijoins never seem to lose more than one inversion against the sum.
report = scan_inv_lower_bound(4, 4)
print(report.table())
print()

# The Schur probe: carve a full-rank block out of a decycling matrix of a
# dijoin, eliminate it, and ask whether the remainder still decycles the
# second operand.  For 3x3 blocks, failures happen exactly for the block
# patterns that decycle the directed triangle.
c3 = decode("3:101")
A = family_to_matrix(VertexFamily.from_sets(3, [[0, 1]]))
M = SymMatGF2.block_diag(A, A)
print("one probe record:", schur_probe(c3, c3, M))

report = scan_schur_3x3(n2_max=3)
print()
print(report.table())

# Every report re-runs from its scope with identical findings.
assert replay(report).violations == report.violations
print("\nreplay reproduced the scan verbatim")
