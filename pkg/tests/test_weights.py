import random
from math import gcd

import pytest

from w0h1.covers import compile
from w0h1.exactlin import Permutation
from w0h1.strata import Adjacency, StratifiedBranchData, Stratum
from w0h1.weights import (
    CurveDualGraph,
    InconsistentDataError,
    WeightReport,
    curve_branch_data,
    curve_w0_from_graph,
    dual_graph_from_edges,
    full_pipeline,
    w0_h1,
)

from .conftest import cusp_family_spec, random_branch_data
from .test_strata import model_i, model_ii, nodal, two_lines


def model_ii_with_generic(b, c):
    """Closed b-branch stratum attached to the unibranch generic locus by one arc per branch."""
    strata = [Stratum("S", b, (Permutation.shift(b, c),), True), Stratum("G", 1)]
    return StratifiedBranchData(strata, [Adjacency("S", "G", (k,)) for k in range(b)])


def random_graph(rng, max_v=5, max_e=8):
    v = rng.randint(1, max_v)
    edges = tuple((rng.randrange(v), rng.randrange(v)) for _ in range(rng.randint(0, max_e)))
    return CurveDualGraph(v, edges)


def graph_oracle(g):
    """E - V + C with components counted by depth-first search."""
    adj = {v: set() for v in range(g.vertices)}
    for u, v in g.edges:
        adj[u].add(v)
        adj[v].add(u)
    seen, comps = set(), 0
    for start in range(g.vertices):
        if start in seen:
            continue
        comps += 1
        stack = [start]
        while stack:
            x = stack.pop()
            if x not in seen:
                seen.add(x)
                stack.extend(adj[x] - seen)
    return len(g.edges) - g.vertices + comps


@pytest.mark.parametrize("args, expected", [((0, 1, 1), 0), ((1, 1, 1), 1), ((3, 1, 1), 3),
                                            ((1, 2, 1), 0)])
def test_w0_h1(args, expected):
    assert w0_h1(*args) == expected


def test_negative_result_is_an_error():
    with pytest.raises(InconsistentDataError, match="inconsistent input data"):
        w0_h1(0, 3, 1)
    with pytest.raises(InconsistentDataError):
        w0_h1(-1, 0, 0)


def test_report_tripwire():
    with pytest.raises(InconsistentDataError, match="do not cancel"):
        WeightReport(1, 1, 2, 1)
    with pytest.raises(InconsistentDataError, match="quotient"):
        WeightReport(2, 1, 0, 1)


@pytest.mark.parametrize("data, expected", [
    (model_i(6, 4), (1, 1, 0, 0)),
    (model_ii(6, 4), (1, 2, 1, 0)),
    (model_ii_with_generic(6, 4), (1, 1, 1, 1)),
    (nodal(), (1, 1, 1, 1)),
    (two_lines(), (1, 2, 1, 0)),
])
def test_pipeline_on_models(data, expected):
    assert full_pipeline(data).as_tuple() == expected


@pytest.mark.parametrize("b", range(2, 8))
@pytest.mark.parametrize("c", range(2, 8))
def test_pipeline_on_compiled_covers(b, c):
    assert full_pipeline(compile(cusp_family_spec(2, b, c))).dim_w0_h1 == 0
    rep = full_pipeline(compile(cusp_family_spec(2, b, c, removed=True)))
    assert rep.as_tuple() == (1, 1, gcd(b, c) - 1, gcd(b, c) - 1)


@pytest.mark.parametrize("v, edges, expected", [
    (1, [(0, 0)], 1),
    (2, [(0, 1)], 0),
    (2, [(0, 1), (0, 1)], 1),
    (3, [], 0),
    (3, [(0, 1), (1, 2), (2, 0), (0, 0)], 2),
])
def test_curve_fixed_cases(v, edges, expected):
    g = dual_graph_from_edges(v, edges)
    assert curve_w0_from_graph(g) == expected
    assert full_pipeline(curve_branch_data(g)).dim_w0_h1 == expected


def test_banana_model_has_four_strata():
    d = curve_branch_data(CurveDualGraph(2, ((0, 1), (0, 1))))
    assert len(d.strata) == 4
    assert full_pipeline(d).as_tuple() == (1, 2, 2, 1)


def test_graph_validation():
    with pytest.raises(ValueError):
        CurveDualGraph(2, ((0, 2),))
    with pytest.raises(ValueError):
        CurveDualGraph(-1)


def test_random_curves_match_graph_betti_number():
    rng = random.Random(7)
    for _ in range(150):
        g = random_graph(rng)
        rep = full_pipeline(curve_branch_data(g))
        assert rep.dim_w0_h1 == curve_w0_from_graph(g) == graph_oracle(g)
        assert rep.b0_norm == g.vertices


def test_random_reports_are_consistent(rng):
    for _ in range(300):
        d = random_branch_data(rng)
        try:
            rep = full_pipeline(d, check=False)
        except InconsistentDataError:
            continue
        assert rep.b0_X - rep.b0_norm + rep.dim_h0_F - rep.dim_w0_h1 == 0
        assert 0 <= rep.dim_w0_h1 <= rep.dim_h0_F
        assert rep.b0_norm >= rep.b0_X
