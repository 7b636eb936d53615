"""Totally ramified cyclic coverings of a smooth surface, compiled to branch data.

The covering ``t^m = g`` of ``Y`` branched along ``D = sum a_i D_i`` is
described combinatorially: the degree, the components with their
multiplicities, the special points of ``D`` (with the local branches of
each component through them) and the local intersection numbers of those
branches with the other components.

Over a point ``y`` of ``D`` the covering has ``gcd(m, a_i : y in D_i)``
local branches.  Over the smooth part of ``D_i`` the branches form a
``Z/e_i``-torsor, ``e_i = gcd(m, a_i)``, whose monodromy around the point of
the normalization of ``D_i`` lying over a branch at ``y`` is the translation
by ``sum_{j != i} a_j (D'_i . D_j)_y``.
"""

from __future__ import annotations

from collections.abc import Iterable, Mapping, Sequence
from dataclasses import dataclass, field
from fractions import Fraction
from math import gcd

from .exactlin import Permutation, as_rational
from .strata import Adjacency, StratifiedBranchData, Stratum

DEFAULT_TRUNCATION = 64
GENERIC_PREFIX = "generic"


class CoveringError(ValueError):
    """Inconsistent or incomplete covering data."""


class MissingIntersectionError(CoveringError):
    def __init__(self, component: str, other: str, point: str, branch: int = 0):
        self.component, self.other, self.point, self.branch = component, other, point, branch
        super().__init__(
            f"missing intersection number (i={component}, j={other}, y={point}) "
            f"for branch {branch} of {component} at {point}"
        )


class GermError(CoveringError):
    """The order of vanishing is not visible below the truncation order."""


@dataclass(frozen=True)
class Component:
    id: str
    multiplicity: int
    h1_is_zero: bool = True
    explicit_shifts: tuple[int, ...] = ()

    def __post_init__(self):
        if self.multiplicity < 1:
            raise CoveringError(f"component {self.id!r}: multiplicity must be >= 1")
        object.__setattr__(self, "explicit_shifts", tuple(int(s) for s in self.explicit_shifts))


@dataclass(frozen=True)
class SpecialPoint:
    """A point of ``D`` where components meet or are singular.

    ``branches`` lists ``(component id, branch id)`` for each local analytic
    branch of ``D`` through the point.  A ``removed`` point is deleted from
    the variety: it still punctures the components through it, but
    contributes no point stratum.
    """

    id: str
    branches: tuple[tuple[str, int], ...]
    removed: bool = False

    def __post_init__(self):
        br = tuple((str(c), int(b)) for c, b in self.branches)
        if not br:
            raise CoveringError(f"special point {self.id!r} lists no incident branch")
        if len(set(br)) != len(br):
            raise CoveringError(f"special point {self.id!r} lists a branch twice")
        object.__setattr__(self, "branches", br)

    @property
    def components(self) -> list[str]:
        return list(dict.fromkeys(c for c, _ in self.branches))


@dataclass(frozen=True)
class CoveringSpec:
    """Input of :func:`compile`.

    ``intersections`` maps ``(point, component, branch, other component)`` to
    the local intersection number of that branch of ``component`` with
    ``other`` at ``point``.  ``generic_components`` is the number of connected
    components of the unramified part of the covering; it defaults to
    ``gcd(m, all a_i)``, which is right when ``H_1(Y) = 0``.
    """

    degree: int
    components: tuple[Component, ...]
    special_points: tuple[SpecialPoint, ...] = ()
    intersections: Mapping[tuple[str, str, int, str], int] = field(default_factory=dict)
    generic_components: int | None = None

    def __post_init__(self):
        object.__setattr__(self, "components", tuple(self.components))
        object.__setattr__(self, "special_points", tuple(self.special_points))
        object.__setattr__(self, "intersections",
                           {(str(y), str(i), int(b), str(j)): int(n)
                            for (y, i, b, j), n in dict(self.intersections).items()})
        if self.degree < 2:
            raise CoveringError("covering degree must be >= 2")
        ids = [c.id for c in self.components]
        if not ids:
            raise CoveringError("the branch divisor has no component")
        if len(set(ids)) != len(ids):
            raise CoveringError("duplicate component id")
        pids = [p.id for p in self.special_points]
        if len(set(pids)) != len(pids):
            raise CoveringError("duplicate special point id")
        known = set(ids)
        for p in self.special_points:
            for c, _ in p.branches:
                if c not in known:
                    raise CoveringError(f"special point {p.id!r}: unknown component {c!r}")
        points = {p.id: p for p in self.special_points}
        for (y, i, b, j), n in self.intersections.items():
            if y not in points:
                raise CoveringError(f"intersection entry at unknown point {y!r}")
            if (i, b) not in points[y].branches:
                raise CoveringError(f"intersection entry for branch {b} of {i!r}, "
                                    f"not listed at point {y!r}")
            if j not in points[y].components or j == i:
                raise CoveringError(f"intersection entry ({i}, {j}, {y}): {j!r} "
                                    f"is not another component through {y!r}")
            if n < 1:
                raise CoveringError(f"intersection number ({i}, {j}, {y}) must be >= 1")
        if self.generic_components is not None:
            g = self.generic_components
            if g < 1 or self.degree % g or any(c.multiplicity % g for c in self.components):
                raise CoveringError("generic_components must divide m and every a_i")

    def component(self, cid: str) -> Component:
        for c in self.components:
            if c.id == cid:
                return c
        raise CoveringError(f"unknown component {cid!r}")

    def point(self, pid: str) -> SpecialPoint:
        for p in self.special_points:
            if p.id == pid:
                return p
        raise CoveringError(f"unknown special point {pid!r}")

    def punctures(self, cid: str) -> list[tuple[str, int]]:
        """Points of the normalization of a component lying over special points."""
        return [(p.id, b) for p in self.special_points for c, b in p.branches if c == cid]

    def missing_intersections(self) -> list[tuple[str, str, str, int]]:
        """``(i, j, y, branch)`` for every intersection number the data lacks."""
        out = []
        for p in self.special_points:
            for i, b in p.branches:
                for j in p.components:
                    if j != i and (p.id, i, b, j) not in self.intersections:
                        out.append((i, j, p.id, b))
        return out


def branch_count(m: int, mults: Iterable[int]) -> int:
    """Number of local branches of the covering over a point of ``D``."""
    mults = list(mults)
    if m < 1:
        raise CoveringError("degree must be positive")
    if not mults:
        raise CoveringError("point is not on the branch divisor: no multiplicities given")
    if any(a < 1 for a in mults):
        raise CoveringError("multiplicities must be >= 1")
    return gcd(m, *mults)


def local_group_order(m: int, mults_J: Iterable[int]) -> int:
    """Order ``e`` of the cyclic group acting simply transitively on local branches."""
    return branch_count(m, mults_J)


def monodromy_shift(e: int, m_k: int) -> int:
    """Translation amount on ``Z/e`` for a loop around a divisor of multiplicity ``m_k``.

    The local monodromy is ``gamma^(-m_k)``; taking ``gamma^(-1)`` as the
    unit translation makes it ``k -> k + m_k``.
    """
    if e < 1:
        raise CoveringError("torsor size must be >= 1")
    if m_k < 0:
        raise CoveringError("multiplicity must be >= 0")
    return m_k % e


def surface_multiplicity(spec: CoveringSpec, branch: tuple[str, str, int]) -> int:
    """``sum_{j != i} a_j (D'_i . D_j)_y`` for the branch ``(i, y, b)``."""
    i, y, b = branch
    point = spec.point(y)
    if (i, b) not in point.branches:
        raise CoveringError(f"branch {b} of {i!r} does not pass through {y!r}")
    total = 0
    for j in point.components:
        if j == i:
            continue
        key = (y, i, b, j)
        if key not in spec.intersections:
            raise MissingIntersectionError(i, j, y, b)
        total += spec.component(j).multiplicity * spec.intersections[key]
    return total


# --- order of vanishing along a parametrized branch -------------------------

@dataclass(frozen=True)
class BranchGermParam:
    """Germ ``t -> (x(t), y(t))``; ``x_series[k]`` is the coefficient of ``t^k``."""

    x_series: tuple[Fraction, ...]
    y_series: tuple[Fraction, ...]
    truncation: int = DEFAULT_TRUNCATION

    def __post_init__(self):
        xs = tuple(as_rational(c) for c in self.x_series)
        ys = tuple(as_rational(c) for c in self.y_series)
        object.__setattr__(self, "x_series", xs)
        object.__setattr__(self, "y_series", ys)
        if self.truncation < 1:
            raise GermError("truncation order must be >= 1")
        if not any(c for c in xs[1:] + ys[1:]):
            raise GermError("germ is constant")


def _trunc(s: Sequence[Fraction], T: int) -> list[Fraction]:
    s = list(s[:T])
    return s + [Fraction(0)] * (T - len(s))


def _mul(a: list[Fraction], b: list[Fraction], T: int) -> list[Fraction]:
    out = [Fraction(0)] * T
    for i, x in enumerate(a):
        if x:
            for j in range(T - i):
                if b[j]:
                    out[i + j] += x * b[j]
    return out


def _power(a: list[Fraction], k: int, T: int, cache: dict) -> list[Fraction]:
    if k not in cache:
        cache[k] = _mul(_power(a, k - 1, T, cache), a, T)
    return cache[k]


def intersection_multiplicity_oracle(p: BranchGermParam,
                                     g: Mapping[tuple[int, int], object]) -> int:
    """Order in ``t`` of ``g(x(t), y(t))``.

    ``g`` maps exponent pairs ``(i, j)`` to the coefficient of ``x^i y^j``.

    Raises:
        GermError: if ``g`` vanishes identically up to the truncation order
            (raise the truncation, or the branch lies inside ``g = 0``).
    """
    T = p.truncation
    one = [Fraction(1)] + [Fraction(0)] * (T - 1)
    xc, yc = {0: one}, {0: one}
    x, y = _trunc(p.x_series, T), _trunc(p.y_series, T)
    xc[1], yc[1] = x, y
    total = [Fraction(0)] * T
    for (i, j), coeff in g.items():
        coeff = as_rational(coeff)
        if not coeff:
            continue
        term = _mul(_power(x, i, T, xc), _power(y, j, T, yc), T)
        total = [u + coeff * v for u, v in zip(total, term)]
    for k, c in enumerate(total):
        if c:
            return k
    raise GermError(
        f"g vanishes along the branch up to order {T}: truncation too small "
        f"or branch contained in g = 0"
    )


# --- compilation --------------------------------------------------------------

def component_stratum_id(cid: str) -> str:
    return f"D:{cid}"


def point_stratum_id(pid: str) -> str:
    return f"P:{pid}"


def generic_stratum_id(q: int) -> str:
    return f"{GENERIC_PREFIX}:{q}"


def generic_component_count(spec: CoveringSpec) -> int:
    if spec.generic_components is not None:
        return spec.generic_components
    return gcd(spec.degree, *(c.multiplicity for c in spec.components))


def compile(spec: CoveringSpec) -> StratifiedBranchData:
    """Stratified branch data of the covering.

    Strata:

    * ``generic:q`` for ``q in Z/g``: the components of the unramified part
      over ``Y - D``, one branch each;
    * ``D:i``: the part over the smooth, non-special points of ``D_i``, with
      branch set ``Z/e_i`` and one shift per puncture (plus explicit shifts);
    * ``P:y``: each non-removed special point, ``gcd(m, a_i : y in D_i)`` branches.

    Branch maps between torsors are reductions of residues.  Each arc from
    a generic sheet lands in one branch, so every branch of a deeper
    stratum gets its own arc.
    """
    m = spec.degree
    g = generic_component_count(spec)
    strata: list[Stratum] = [Stratum(generic_stratum_id(q), 1) for q in range(g)]
    adjs: list[Adjacency] = []

    for c in spec.components:
        if not c.h1_is_zero and not c.explicit_shifts:
            raise CoveringError(
                f"component {c.id!r}: global monodromy is not determined by local "
                f"monodromies; set h1_is_zero or give explicit_shifts"
            )
    missing = spec.missing_intersections()
    if missing:
        i, j, y, b = missing[0]
        raise MissingIntersectionError(i, j, y, b)

    live_points = [p for p in spec.special_points if not p.removed]
    for c in spec.components:
        e = local_group_order(m, [c.multiplicity])
        assert e % g == 0
        shifts = [monodromy_shift(e, surface_multiplicity(spec, (c.id, y, b)))
                  for y, b in spec.punctures(c.id)]
        shifts += [s % e for s in c.explicit_shifts]
        gens = sorted({s for s in shifts if s})
        closed = not any(c.id in p.components for p in live_points)
        sid = component_stratum_id(c.id)
        strata.append(Stratum(sid, e, tuple(Permutation.shift(e, s) for s in gens), closed))
        for k in range(e):
            adjs.append(Adjacency(sid, generic_stratum_id(k % g), (k,)))

    for p in live_points:
        r = branch_count(m, [spec.component(c).multiplicity for c in p.components])
        assert r % g == 0
        pid = point_stratum_id(p.id)
        strata.append(Stratum(pid, r, (), True))
        for cid, _ in p.branches:
            e = local_group_order(m, [spec.component(cid).multiplicity])
            assert e % r == 0, "branch count at a point must divide the torsor size"
            adjs.append(Adjacency(pid, component_stratum_id(cid), tuple(k % r for k in range(e))))
        for k in range(r):
            adjs.append(Adjacency(pid, generic_stratum_id(k % g), (k,)))

    return StratifiedBranchData(strata, adjs)


def irreducibility_hint(spec: CoveringSpec) -> bool:
    """True when ``gcd(m, all a_i) = 1``, which is sufficient for irreducibility."""
    return gcd(spec.degree, *(c.multiplicity for c in spec.components)) == 1
