"""Stratified branch data and the global sections of the branch-cokernel sheaf.

A variety is described by its strata.  Each stratum carries the set of
local branches at a basepoint (an abstract index set of size ``r``) and the
monodromy permutations of that set.  An adjacency ``deep < generic`` records,
for one chosen path, which deep branch each generic branch lies in.

The stalk of the sheaf at a point with ``r`` branches is ``Q^r / Q``.
"""

from __future__ import annotations

import warnings
from collections.abc import Sequence
from dataclasses import dataclass, field
from fractions import Fraction

from .exactlin import (
    Permutation,
    QMatrix,
    UnionFind,
    fixed_subspace_dim,
    generated_group,
    orbit_count,
    orbits,
)

GROUP_CAP = 10_000


class StrataError(ValueError):
    """Malformed stratified branch data."""


class CompositionError(StrataError):
    """Specialization maps of a chain of strata do not compose up to monodromy."""


class CompositionWarning(UserWarning):
    pass


@dataclass(frozen=True)
class Stratum:
    id: str
    branches: int
    monodromy: tuple[Permutation, ...] = ()
    closed: bool = False

    def __post_init__(self):
        if self.branches < 1:
            raise StrataError(f"stratum {self.id!r}: needs at least one branch")
        mono = tuple(g if isinstance(g, Permutation) else Permutation(g) for g in self.monodromy)
        object.__setattr__(self, "monodromy", mono)
        for g in mono:
            if g.size != self.branches:
                raise StrataError(
                    f"stratum {self.id!r}: monodromy {list(g.images)} acts on {g.size} "
                    f"points, stratum has {self.branches} branches"
                )


@dataclass(frozen=True)
class Adjacency:
    deep: str
    generic: str
    branch_map: tuple[int, ...]

    def __post_init__(self):
        object.__setattr__(self, "branch_map", tuple(int(b) for b in self.branch_map))


@dataclass(frozen=True)
class StratifiedBranchData:
    strata: tuple[Stratum, ...]
    adjacencies: tuple[Adjacency, ...] = ()
    _index: dict = field(init=False, repr=False, compare=False)

    def __post_init__(self):
        object.__setattr__(self, "strata", tuple(self.strata))
        object.__setattr__(self, "adjacencies", tuple(self.adjacencies))
        index = {}
        for s in self.strata:
            if s.id in index:
                raise StrataError(f"duplicate stratum id {s.id!r}")
            index[s.id] = s
        object.__setattr__(self, "_index", index)

        for k, a in enumerate(self.adjacencies):
            for end in (a.deep, a.generic):
                if end not in index:
                    raise StrataError(f"adjacency {k}: unknown stratum {end!r}")
            if a.deep == a.generic:
                raise StrataError(f"adjacency {k}: stratum {a.deep!r} adjacent to itself")
            deep, gen = index[a.deep], index[a.generic]
            if len(a.branch_map) != gen.branches:
                raise StrataError(
                    f"adjacency {k} ({a.deep} < {a.generic}): branch_map has "
                    f"{len(a.branch_map)} entries, generic stratum has {gen.branches} branches"
                )
            bad = [b for b in a.branch_map if not 0 <= b < deep.branches]
            if bad:
                raise StrataError(
                    f"adjacency {k} ({a.deep} < {a.generic}): branch_map values {bad} "
                    f"out of range for {deep.branches} deep branches"
                )
        self._check_acyclic()

    def _check_acyclic(self) -> None:
        succ: dict[str, set[str]] = {s.id: set() for s in self.strata}
        for a in self.adjacencies:
            succ[a.deep].add(a.generic)
        state: dict[str, int] = {}

        def visit(u, path):
            state[u] = 1
            for v in succ[u]:
                if state.get(v) == 1:
                    cyc = path[path.index(v):] + [v]
                    raise StrataError("adjacency relation has a cycle: " + " < ".join(cyc))
                if v not in state:
                    visit(v, path + [v])
            state[u] = 2

        for s in self.strata:
            if s.id not in state:
                visit(s.id, [s.id])

    def __getitem__(self, sid: str) -> Stratum:
        return self._index[sid]

    def without(self, sid: str) -> StratifiedBranchData:
        """Copy with one stratum and all its adjacencies removed."""
        return StratifiedBranchData(
            [s for s in self.strata if s.id != sid],
            [a for a in self.adjacencies if sid not in (a.deep, a.generic)],
        )


def stalk_dim(r: int) -> int:
    if r < 1:
        raise StrataError("a point of the variety has at least one local branch")
    return r - 1


def stalk_invariant_dim(s: Stratum) -> int:
    """Monodromy-invariant part of the stalk, counted as orbits minus one."""
    return orbit_count(s.branches, s.monodromy) - 1


def quotient_representation(g: Permutation) -> QMatrix:
    """Matrix of ``g`` on ``Q^r / Q(1,...,1)`` in the basis ``e_0, ..., e_{r-2}``.

    ``e_{r-1}`` is identified with ``-(e_0 + ... + e_{r-2})``.
    """
    n = g.size - 1
    cols = []
    for i in range(n):
        j = g(i)
        cols.append([int(k == j) for k in range(n)] if j < n else [-1] * n)
    return QMatrix.from_rows(cols, n).transpose()


def stalk_invariant_dim_linear(s: Stratum) -> int:
    """Same quantity as :func:`stalk_invariant_dim`, by linear algebra on the cokernel."""
    n = s.branches - 1
    return fixed_subspace_dim([quotient_representation(g) for g in s.monodromy], n)


@dataclass(frozen=True)
class CompositionReport:
    chains_checked: int
    skipped: tuple[str, ...] = ()


def _chains(d: StratifiedBranchData):
    by_pair: dict[tuple[str, str], list[Adjacency]] = {}
    for a in d.adjacencies:
        by_pair.setdefault((a.deep, a.generic), []).append(a)
    for (i, j), ij in by_pair.items():
        for (j2, k), jk in by_pair.items():
            if j2 != j or (i, k) not in by_pair:
                continue
            yield i, j, k, ij, jk, by_pair[(i, k)]


def check_composition(d: StratifiedBranchData, cap: int = GROUP_CAP) -> CompositionReport:
    """Check that specialization maps compose up to monodromy of the most generic stratum.

    For every chain ``i < j < k`` with all three adjacencies recorded and for
    every pair of recorded arcs ``(k -> j, j -> i)``, some recorded arc
    ``k -> i`` must agree with the composite after twisting by an element of
    the monodromy group of ``k``.  Chains whose group exceeds ``cap`` elements
    are skipped with a :class:`CompositionWarning`.

    Raises:
        CompositionError: listing every violating chain.
    """
    groups: dict[str, set[Permutation] | None] = {}
    violations, skipped = [], []
    checked = 0
    for i, j, k, ij, jk, ik in _chains(d):
        checked += 1
        if k not in groups:
            sk = d[k]
            groups[k] = generated_group(sk.monodromy, sk.branches, cap)
        group = groups[k]
        if group is None:
            msg = f"{i} < {j} < {k}: group too large to verify; skipped"
            warnings.warn(msg, CompositionWarning, stacklevel=2)
            skipped.append(msg)
            continue
        targets = {a.branch_map for a in ik}
        for a_jk in jk:
            for a_ij in ij:
                composite = [a_ij.branch_map[b] for b in a_jk.branch_map]
                ok = any(tuple(composite[g(b)] for b in range(len(composite))) in targets
                         for g in group)
                if not ok:
                    violations.append(
                        f"{i} < {j} < {k}: map {j}->{i} after {k}->{j} gives {composite}, "
                        f"no twist by monodromy of {k} matches {sorted(targets)}"
                    )
    if violations:
        raise CompositionError("; ".join(violations))
    return CompositionReport(checked, tuple(skipped))


def _orbit_coordinates(s: Stratum) -> tuple[list[int], int]:
    """Orbit index of each branch, and the number of free coordinates (orbits - 1).

    An invariant vector of the stalk is represented by its unique lift to
    ``Q^r`` that is constant on orbits and vanishes on the last orbit.
    """
    orbs = orbits(s.branches, s.monodromy)
    label = [0] * s.branches
    for o, members in enumerate(orbs):
        for b in members:
            label[b] = o
    return label, len(orbs) - 1


def sections_matrix(d: StratifiedBranchData) -> QMatrix:
    """Linear system whose kernel is the space of global sections.

    Unknowns: the free orbit coordinates of every stratum, then one scalar per
    adjacency.  For an adjacency ``i < j`` and each branch ``b`` of ``j``,
    ``xi_i[map(b)] - xi_j[b] - lambda = 0``: the pull-back of ``xi_i`` agrees
    with ``xi_j`` modulo constants.  The scalar is determined by the
    coordinates, so the kernel dimension is the number of sections.
    """
    offset, labels, nfree = {}, {}, {}
    n = 0
    for s in d.strata:
        labels[s.id], nfree[s.id] = _orbit_coordinates(s)
        offset[s.id] = n
        n += nfree[s.id]
    n_coords = n
    n += len(d.adjacencies)

    def coord(sid: str, branch: int) -> int | None:
        o = labels[sid][branch]
        return offset[sid] + o if o < nfree[sid] else None

    rows = []
    for k, a in enumerate(d.adjacencies):
        for b, db in enumerate(a.branch_map):
            row = [Fraction(0)] * n
            ci, cj = coord(a.deep, db), coord(a.generic, b)
            if ci is not None:
                row[ci] += 1
            if cj is not None:
                row[cj] -= 1
            row[n_coords + k] = Fraction(-1)
            rows.append(row)
    return QMatrix.from_rows(rows, n)


def global_sections_dim(d: StratifiedBranchData, check: bool = True) -> int:
    if check:
        check_composition(d)
    return sections_matrix(d).nullity()


def b0_space(d: StratifiedBranchData) -> int:
    uf = UnionFind(s.id for s in d.strata)
    for a in d.adjacencies:
        uf.union(a.deep, a.generic)
    return uf.count()


def normalization_components(d: StratifiedBranchData) -> list[list[tuple[str, int]]]:
    """Components of the incidence graph on all local branches of all strata."""
    uf = UnionFind((s.id, b) for s in d.strata for b in range(s.branches))
    for s in d.strata:
        for g in s.monodromy:
            for b in range(s.branches):
                uf.union((s.id, b), (s.id, g(b)))
    for a in d.adjacencies:
        for b, db in enumerate(a.branch_map):
            uf.union((a.generic, b), (a.deep, db))
    return uf.classes()


def b0_normalization(d: StratifiedBranchData) -> int:
    return len(normalization_components(d))


def sum_stalk_invariants(strata: Sequence[Stratum]) -> int:
    return sum(stalk_invariant_dim(s) for s in strata)
