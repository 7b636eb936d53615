import random

import pytest
from hypothesis import strategies as st

from w0h1.exactlin import Permutation
from w0h1.strata import Adjacency, StratifiedBranchData, Stratum


@st.composite
def permutations(draw, n):
    return Permutation(draw(st.permutations(list(range(n)))))


@st.composite
def permutation_sets(draw, max_n=8, max_gens=3):
    n = draw(st.integers(1, max_n))
    k = draw(st.integers(0, max_gens))
    return n, [draw(permutations(n)) for _ in range(k)]


def random_permutation(rng: random.Random, n: int) -> Permutation:
    images = list(range(n))
    rng.shuffle(images)
    return Permutation(images)


def random_closed_strata(rng: random.Random, max_strata=5, max_r=6, max_gens=2):
    strata = []
    for k in range(rng.randint(1, max_strata)):
        r = rng.randint(1, max_r)
        gens = tuple(random_permutation(rng, r) for _ in range(rng.randint(0, max_gens)))
        strata.append(Stratum(f"S{k}", r, gens, True))
    return StratifiedBranchData(strata)


def random_branch_data(rng: random.Random, max_strata=5, max_r=5, max_adj=6):
    """Random acyclic branch data; adjacencies always go from lower to higher index."""
    n = rng.randint(1, max_strata)
    strata = []
    for k in range(n):
        r = rng.randint(1, max_r)
        gens = tuple(random_permutation(rng, r) for _ in range(rng.randint(0, 2)))
        strata.append(Stratum(f"S{k}", r, gens, rng.random() < 0.5))
    adjs = []
    if n > 1:
        for _ in range(rng.randint(0, max_adj)):
            i, j = sorted(rng.sample(range(n), 2))
            bm = tuple(rng.randrange(strata[i].branches) for _ in range(strata[j].branches))
            adjs.append(Adjacency(f"S{i}", f"S{j}", bm))
    return StratifiedBranchData(strata, adjs)


@pytest.fixture
def rng():
    return random.Random(20261015)


def cusp_family_spec(a, b, c, removed=False):
    """Degree-b cover of C^2 branched along b{x=0} + {x^a + z^c = 0}."""
    from w0h1.covers import (
        BranchGermParam,
        Component,
        CoveringSpec,
        SpecialPoint,
        intersection_multiplicity_oracle,
    )

    along_axis = BranchGermParam((0,), (0, 1))
    d1_d2 = intersection_multiplicity_oracle(along_axis, {(a, 0): 1, (0, c): 1})
    return CoveringSpec(
        degree=b,
        components=(Component("D1", b), Component("D2", 1)),
        special_points=(SpecialPoint("0", (("D1", 0), ("D2", 0)), removed),),
        intersections={("0", "D1", 0, "D2"): d1_d2, ("0", "D2", 0, "D1"): c},
    )
