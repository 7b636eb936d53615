"""Steenbrink spectrum of Brieskorn-Pham polynomials ``v^b - x^a - z^c``.

Exponents live in the open interval (0, 3); the unipotent part of the
Milnor monodromy sits at the integer exponents 1 and 2.
"""

from __future__ import annotations

from collections.abc import Iterator, Mapping
from dataclasses import dataclass, field
from fractions import Fraction
from itertools import product

from .exactlin import as_rational, rational_str


@dataclass(frozen=True)
class SpectrumPoly:
    """Finite multiset of rational exponents."""

    terms: Mapping[Fraction, int] = field(default_factory=dict)

    def __post_init__(self):
        clean: dict[Fraction, int] = {}
        for alpha, mult in dict(self.terms).items():
            mult = int(mult)
            if mult < 0:
                raise ValueError(f"negative multiplicity {mult} at {alpha}")
            if mult:
                a = as_rational(alpha)
                clean[a] = clean.get(a, 0) + mult
        object.__setattr__(self, "terms", dict(sorted(clean.items())))

    def multiplicity(self, alpha) -> int:
        return self.terms.get(as_rational(alpha), 0)

    @property
    def total_mass(self) -> int:
        return sum(self.terms.values())

    def __iter__(self) -> Iterator[tuple[Fraction, int]]:
        return iter(self.terms.items())

    def __mul__(self, other: SpectrumPoly) -> SpectrumPoly:
        out: dict[Fraction, int] = {}
        for (a, m), (b, n) in product(self.terms.items(), other.terms.items()):
            out[a + b] = out.get(a + b, 0) + m * n
        return SpectrumPoly(out)

    def is_symmetric(self, center) -> bool:
        """``multiplicity(alpha) == multiplicity(2*center - alpha)`` for all alpha."""
        c2 = 2 * as_rational(center)
        return all(self.multiplicity(c2 - a) == m for a, m in self.terms.items())

    def as_strings(self) -> dict[str, int]:
        return {rational_str(a): m for a, m in self.terms.items()}

    def __str__(self) -> str:
        return " + ".join(f"{m}*t^{rational_str(a)}" if m > 1 else f"t^{rational_str(a)}"
                          for a, m in self.terms.items()) or "0"


def _check_exponents(a: int, b: int, c: int) -> None:
    for name, v in zip("abc", (a, b, c)):
        if not isinstance(v, int) or v < 2:
            raise ValueError(f"exponent {name}={v!r} must be an integer >= 2")


def factor(n: int) -> SpectrumPoly:
    """``(t^{1/n} - t) / (1 - t^{1/n}) = t^{1/n} + ... + t^{(n-1)/n}``."""
    return SpectrumPoly({Fraction(i, n): 1 for i in range(1, n)})


def bp_spectrum(a: int, b: int, c: int) -> SpectrumPoly:
    """Spectrum of ``v^b - x^a - z^c`` as the product of the three one-variable factors."""
    _check_exponents(a, b, c)
    return factor(a) * factor(b) * factor(c)


def milnor_number(a: int, b: int, c: int) -> int:
    _check_exponents(a, b, c)
    return (a - 1) * (b - 1) * (c - 1)


def unipotent_h1_dim(a: int, b: int, c: int) -> int:
    """``dim H^1`` of the punctured normalization: twice the multiplicity of exponent 1.

    Cross-checked against the sum of the multiplicities at 1 and 2.
    """
    sp = bp_spectrum(a, b, c)
    d = 2 * sp.multiplicity(1)
    assert d == sp.multiplicity(1) + sp.multiplicity(2), "spectrum not symmetric"
    return d


def lattice_count(a: int, b: int, c: int, target: int = 1) -> int:
    """Number of ``(i, j, k)``, ``1 <= i < a`` etc., with ``i/a + j/b + k/c = target``.

    Integer arithmetic only: ``i*b*c + j*a*c + k*a*b = target*a*b*c``.
    """
    _check_exponents(a, b, c)
    rhs = target * a * b * c
    return sum(1 for i in range(1, a) for j in range(1, b) for k in range(1, c)
               if i * b * c + j * a * c + k * a * b == rhs)
