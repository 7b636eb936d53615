"""First cohomology of quotients ``(X x Z) / mu_e`` by the diagonal action.

``H^1((X x Z)/mu_e) = H^1(X)^{mu_e} + H^1(Z)^{mu_e}``.  The actions are
given directly on ``H^1`` by the matrix of a generator.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .exactlin import QMatrix, fixed_subspace_dim


class InvalidActionError(ValueError):
    pass


@dataclass(frozen=True)
class CyclicAction:
    order: int
    generator: QMatrix

    def __post_init__(self):
        if self.order < 1:
            raise InvalidActionError("group order must be >= 1")
        n, k = self.generator.shape
        if n != k:
            raise InvalidActionError(f"generator must be square, got {n}x{k}")
        if self.generator ** self.order != QMatrix.identity(n):
            raise InvalidActionError(f"generator does not satisfy g^{self.order} = I")

    @property
    def dim(self) -> int:
        return self.generator.rows


def invariant_dim(a: CyclicAction) -> int:
    return fixed_subspace_dim([a.generator], a.dim)


def invariant_dim_by_averaging(a: CyclicAction) -> int:
    """Trace of the averaging projector ``(1/e) sum_k g^k``; independent of elimination."""
    total = Fraction(0)
    power = QMatrix.identity(a.dim)
    for _ in range(a.order):
        total += power.trace()
        power = power @ a.generator
    value = total / a.order
    assert value.denominator == 1
    return int(value)


def quotient_h1_dim(act_x: CyclicAction, act_z: CyclicAction) -> int:
    if act_x.order != act_z.order:
        raise InvalidActionError(f"orders differ: {act_x.order} vs {act_z.order}")
    return invariant_dim(act_x) + invariant_dim(act_z)


@dataclass(frozen=True)
class QuotientReport:
    """``w0_zero`` is set when the covering degree equals ``order`` and
    ``Z/mu_e`` is smooth: then ``X/mu_e`` is the smooth base and ``W_0 H^1``
    of the quotient vanishes."""

    order: int
    invariant_dim_x: int
    invariant_dim_z: int
    dim_h1: int
    w0_zero: bool

    @property
    def dim_w0_h1(self) -> int | None:
        return 0 if self.w0_zero else None

    def as_dict(self) -> dict:
        return {
            "order": self.order,
            "invariant_dim_x": self.invariant_dim_x,
            "invariant_dim_z": self.invariant_dim_z,
            "dim_h1": self.dim_h1,
            "w0_zero_flag": self.w0_zero,
            "dim_w0_h1": self.dim_w0_h1,
            "w0_contribution_x": 0 if self.w0_zero else None,
        }


def quotient_report(act_x: CyclicAction, act_z: CyclicAction, degree: int | None = None,
                    z_quotient_smooth: bool = False) -> QuotientReport:
    """Report for the quotient; ``degree`` is the degree ``m`` of the covering ``X -> Y``."""
    if degree is not None and degree % act_x.order:
        raise InvalidActionError(f"group order {act_x.order} must divide degree {degree}")
    h1 = quotient_h1_dim(act_x, act_z)
    flag = degree == act_x.order and z_quotient_smooth
    return QuotientReport(act_x.order, invariant_dim(act_x), invariant_dim(act_z), h1, flag)
