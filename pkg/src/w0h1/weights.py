"""Dimension of the weight-zero part of H^1 from branch data.

``dim W_0 H^1(X) = dim H^0(X, F) - b_0(normalization) + b_0(X)``, the
alternating sum of the exact sequence
``0 -> H^0(X) -> H^0(X~) -> H^0(X, F) -> W_0 H^1(X) -> 0``.
"""

from __future__ import annotations

from collections.abc import Sequence
from dataclasses import asdict, dataclass

from .exactlin import UnionFind
from .strata import (
    Adjacency,
    StratifiedBranchData,
    Stratum,
    b0_normalization,
    b0_space,
    global_sections_dim,
)


class InconsistentDataError(ValueError):
    """The branch data violate exactness; no variety has these numbers."""


@dataclass(frozen=True)
class WeightReport:
    b0_X: int
    b0_norm: int
    dim_h0_F: int
    dim_w0_h1: int

    def __post_init__(self):
        if self.b0_X - self.b0_norm + self.dim_h0_F - self.dim_w0_h1 != 0:
            raise InconsistentDataError(f"ranks of the exact sequence do not cancel: {self}")
        if self.dim_w0_h1 < 0 or self.dim_w0_h1 > self.dim_h0_F:
            raise InconsistentDataError(f"W0H1 is not a quotient of H0(F): {self}")

    def as_dict(self) -> dict[str, int]:
        return asdict(self)

    def as_tuple(self) -> tuple[int, int, int, int]:
        return self.b0_X, self.b0_norm, self.dim_h0_F, self.dim_w0_h1


def w0_h1(dim_h0_F: int, b0_norm: int, b0_X: int) -> int:
    if min(dim_h0_F, b0_norm, b0_X) < 0:
        raise InconsistentDataError("dimensions must be nonnegative")
    d = dim_h0_F - b0_norm + b0_X
    if d < 0:
        raise InconsistentDataError(
            f"inconsistent input data: dim H0(F)={dim_h0_F}, b0(X~)={b0_norm}, "
            f"b0(X)={b0_X} give W0H1 = {d} < 0"
        )
    return d


def full_pipeline(d: StratifiedBranchData, check: bool = True) -> WeightReport:
    h0 = global_sections_dim(d, check=check)
    bn = b0_normalization(d)
    bx = b0_space(d)
    if bn < bx:
        raise InconsistentDataError(f"normalization has {bn} components, space has {bx}")
    return WeightReport(bx, bn, h0, w0_h1(h0, bn, bx))


@dataclass(frozen=True)
class CurveDualGraph:
    """Multigraph with a vertex per normalization component and an edge per node.

    Loops and parallel edges are allowed.
    """

    vertices: int
    edges: tuple[tuple[int, int], ...] = ()

    def __post_init__(self):
        edges = tuple((int(u), int(v)) for u, v in self.edges)
        if self.vertices < 0:
            raise ValueError("negative vertex count")
        for u, v in edges:
            if not (0 <= u < self.vertices and 0 <= v < self.vertices):
                raise ValueError(f"edge ({u}, {v}) out of range")
        object.__setattr__(self, "edges", edges)


def curve_w0_from_graph(g: CurveDualGraph) -> int:
    """First Betti number ``E - V + C`` of the dual graph."""
    uf = UnionFind(range(g.vertices))
    for u, v in g.edges:
        uf.union(u, v)
    return len(g.edges) - g.vertices + uf.count()


def curve_branch_data(g: CurveDualGraph) -> StratifiedBranchData:
    """Branch data of the nodal curve with dual graph ``g``.

    Each vertex gives an open unibranch stratum ``C:v``, each edge a closed
    two-branch node ``N:k`` whose branch 0 lies on the first endpoint and
    branch 1 on the second.
    """
    strata = [Stratum(f"C:{v}", 1) for v in range(g.vertices)]
    adjs = []
    for k, (u, v) in enumerate(g.edges):
        node = f"N:{k}"
        strata.append(Stratum(node, 2, (), True))
        adjs.append(Adjacency(node, f"C:{u}", (0,)))
        adjs.append(Adjacency(node, f"C:{v}", (1,)))
    return StratifiedBranchData(strata, adjs)


def dual_graph_from_edges(vertices: int, edges: Sequence[Sequence[int]]) -> CurveDualGraph:
    return CurveDualGraph(vertices, tuple(tuple(e) for e in edges))
