"""
Quotients of products by mu_e
=============================

H^1 of (X x Z)/mu_e is the sum of the invariant parts of H^1(X) and
H^1(Z).  The actions are entered as the matrix of a generator.
"""

from w0h1.exactlin import QMatrix
from w0h1.kunneth import CyclicAction, InvalidActionError, invariant_dim, quotient_report

# X = two lines swapped by mu_2 (H^1 = 0), Z = elliptic curve with a translation
x = CyclicAction(2, QMatrix.zeros(0, 0))
z = CyclicAction(2, QMatrix.identity(2))
print(quotient_report(x, z))

# A rotation by a quarter turn has no invariants, and its order is 4, not 2
rot = QMatrix.from_rows([[0, -1], [1, 0]])
print("invariants of the rotation:", invariant_dim(CyclicAction(4, rot)))
try:
    CyclicAction(2, rot)
except InvalidActionError as exc:
    print("rejected:", exc)

# With e equal to the covering degree and a smooth quotient of Z, the weight-zero part vanishes
minus = -QMatrix.identity(2)
rep = quotient_report(CyclicAction(2, minus), CyclicAction(2, minus), degree=2,
                      z_quotient_smooth=True)
print(rep.as_dict())
