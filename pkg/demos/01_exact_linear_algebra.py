"""
Exact linear algebra over Q
===========================

Everything in w0h1 is computed with fractions, never floats.  This demo
shows the two facts the rest of the package leans on: kernels are exact,
and the invariants of a permutation representation are counted by orbits.
"""

from fractions import Fraction

from w0h1.exactlin import (
    Permutation,
    QMatrix,
    fixed_subspace_dim,
    kernel_basis,
    orbit_count,
    permutation_matrix,
)

# A rank-2 matrix with rational entries; entries may be given as "p/q" strings
m = QMatrix.from_rows([["1/2", 1, 0], [1, 2, 0], [0, 0, "3/7"]])
print("rank", m.rank(), "nullity", m.nullity())
for v in kernel_basis(m):
    print("kernel vector", [str(x) for x in v])

# Floats are refused: exact input only
try:
    QMatrix.from_rows([[0.5]])
except (TypeError, ValueError) as exc:
    print("refused:", exc)

# Permutations act on branch labels; a 4-cycle and a transposition
g = Permutation.from_cycles(6, (0, 1, 2, 3))
h = Permutation.from_cycles(6, (4, 5))
print("orbits of <g, h> on 6 points:", orbit_count(6, [g, h]))

# The fixed subspace of the permutation matrices has one basis vector per orbit
mats = [permutation_matrix(p) for p in (g, h)]
print("fixed subspace dimension:", fixed_subspace_dim(mats, 6))

# A shift by 4 on Z/6 has gcd(6, 4) = 2 orbits
print("shift by 4 on Z/6:", orbit_count(6, [Permutation.shift(6, 4)]), "orbits")
print("1/3 + 1/6 =", Fraction(1, 3) + Fraction(1, 6))
