"""
Spectrum of v^b - x^a - z^c
===========================

The spectrum is the product of the factors t^{1/n} + ... + t^{(n-1)/n}.
Twice its coefficient at t^1 is the dimension of H^1 of the punctured
normalization, which is nonzero for (a, b, c) = (6, 3, 2).
"""

from fractions import Fraction

from w0h1.spectrum import bp_spectrum, lattice_count, milnor_number, unipotent_h1_dim

sp = bp_spectrum(6, 3, 2)
print("Sp =", sp)
print("milnor number", milnor_number(6, 3, 2), "= total mass", sp.total_mass)
print("symmetric about 3/2:", sp.is_symmetric(Fraction(3, 2)))
print("dim H1 =", unipotent_h1_dim(6, 3, 2),
      "; lattice triples with i/6 + j/3 + k/2 = 1:", lattice_count(6, 3, 2, 1))

# Which small exponents give a nonzero unipotent part?
print()
hits = [(a, b, c) for a in range(2, 9) for b in range(2, 9) for c in range(2, 9)
        if a >= b >= c and unipotent_h1_dim(a, b, c)]
print(len(hits), "sorted triples up to 8 with dim H1 > 0, e.g.", hits[:6])
