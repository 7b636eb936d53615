import random
from math import gcd

import pytest

from w0h1.covers import (
    BranchGermParam,
    Component,
    CoveringError,
    CoveringSpec,
    GermError,
    MissingIntersectionError,
    SpecialPoint,
    branch_count,
    compile,
    intersection_multiplicity_oracle,
    irreducibility_hint,
    local_group_order,
    monodromy_shift,
    surface_multiplicity,
)
from w0h1.exactlin import Permutation, orbit_count
from w0h1.strata import (
    Adjacency,
    StratifiedBranchData,
    Stratum,
    b0_normalization,
    check_composition,
    global_sections_dim,
)
from w0h1.weights import full_pipeline

from .conftest import cusp_family_spec


def test_branch_count():
    assert branch_count(5, [5]) == 5
    assert branch_count(5, [5, 1]) == 1
    assert branch_count(6, [4]) == 2
    with pytest.raises(CoveringError):
        branch_count(6, [])


def test_local_group_order():
    assert local_group_order(7, [7]) == 7
    assert local_group_order(4, [2]) == 2
    assert local_group_order(12, [8, 6]) == 2


def test_branch_count_divides_order_over_subset():
    rng = random.Random(7)
    for _ in range(300):
        m = rng.randint(2, 30)
        sub = [rng.randint(1, 30) for _ in range(rng.randint(1, 3))]
        sup = sub + [rng.randint(1, 30) for _ in range(rng.randint(0, 3))]
        assert local_group_order(m, sub) % branch_count(m, sup) == 0


@pytest.mark.parametrize("e, mk, expected", [(5, 3, 3), (5, 0, 0), (4, 10, 2), (6, 4, 4)])
def test_monodromy_shift(e, mk, expected):
    assert monodromy_shift(e, mk) == expected


def test_monodromy_shift_rejects_empty_torsor():
    with pytest.raises(CoveringError):
        monodromy_shift(0, 3)


@pytest.mark.parametrize("e", range(1, 13))
def test_shift_orbits_are_gcd(e):
    for s in range(0, 2 * e):
        shift = monodromy_shift(e, s)
        assert orbit_count(e, [Permutation.shift(e, shift)]) == gcd(e, s)


@pytest.mark.parametrize("a, c", [(2, 3), (5, 2), (3, 7)])
def test_surface_multiplicity_cusp_family(a, c):
    b = 6
    spec = cusp_family_spec(a, b, c)
    m = surface_multiplicity(spec, ("D1", "0", 0))
    assert m == c
    assert monodromy_shift(b, m) == c % b


def test_surface_multiplicity_single_component():
    spec = CoveringSpec(4, (Component("D", 4),), (SpecialPoint("y", (("D", 0), ("D", 1))),))
    assert surface_multiplicity(spec, ("D", "y", 0)) == 0


def test_surface_multiplicity_transverse_sum():
    comps = (Component("D1", 2), Component("D2", 3), Component("D3", 5))
    point = SpecialPoint("y", (("D1", 0), ("D2", 0), ("D3", 0)))
    table = {("y", i, 0, j): 1 for i in ("D1", "D2", "D3") for j in ("D1", "D2", "D3") if i != j}
    spec = CoveringSpec(30, comps, (point,), table)
    assert surface_multiplicity(spec, ("D1", "y", 0)) == 3 * 1 + 5 * 1


def test_surface_multiplicity_missing_entry():
    spec = CoveringSpec(4, (Component("A", 2), Component("B", 1)),
                        (SpecialPoint("y", (("A", 0), ("B", 0))),))
    with pytest.raises(MissingIntersectionError, match=r"i=A, j=B, y=y"):
        surface_multiplicity(spec, ("A", "y", 0))
    with pytest.raises(MissingIntersectionError):
        compile(spec)


@pytest.mark.parametrize("a, c", [(2, 2), (3, 5), (6, 4)])
def test_oracle_cusp_family(a, c):
    p = BranchGermParam((0,), (0, 1))
    assert intersection_multiplicity_oracle(p, {(a, 0): 1, (0, c): 1}) == c


def test_oracle_transverse_and_contained():
    p = BranchGermParam((0, 1), (0,))
    assert intersection_multiplicity_oracle(p, {(1, 0): 1}) == 1
    with pytest.raises(GermError, match="truncation"):
        intersection_multiplicity_oracle(p, {(0, 1): 1})


def test_oracle_cusp():
    p = BranchGermParam((0, 0, 1), (0, 0, 0, 1))
    assert intersection_multiplicity_oracle(p, {(1, 0): 1}) == 2
    assert intersection_multiplicity_oracle(p, {(0, 1): 1}) == 3
    # y^2 - x^3 vanishes on its own parametrization
    with pytest.raises(GermError):
        intersection_multiplicity_oracle(p, {(0, 2): 1, (3, 0): -1})
    # y^2 - x^3 - x^4 does not: t^6 - t^6 - t^8
    assert intersection_multiplicity_oracle(p, {(0, 2): 1, (3, 0): -1, (4, 0): -1}) == 8


def test_oracle_truncation_too_small():
    p = BranchGermParam((0,), (0, 1), truncation=5)
    with pytest.raises(GermError):
        intersection_multiplicity_oracle(p, {(0, 7): 1})


def test_constant_germ_rejected():
    with pytest.raises(GermError):
        BranchGermParam((1,), (2,))


def test_oracle_rational_coefficients():
    p = BranchGermParam(("1/2",), (0, "3/2", 1))
    # x - 1/2 vanishes identically; y - (3/2) t ... ; 2x - 1 + y^2 starts at t^2
    assert intersection_multiplicity_oracle(p, {(1, 0): 2, (0, 0): -1, (0, 2): 1}) == 2


@pytest.mark.parametrize("a", range(2, 6))
@pytest.mark.parametrize("b", range(2, 6))
@pytest.mark.parametrize("c", range(2, 6))
def test_compile_with_origin(a, b, c):
    d = compile(cusp_family_spec(a, b, c))
    assert d["P:0"].branches == 1
    assert global_sections_dim(d) == 0


@pytest.mark.parametrize("b", range(2, 8))
@pytest.mark.parametrize("c", range(2, 8))
def test_compile_origin_removed(b, c):
    d = compile(cusp_family_spec(3, b, c, removed=True))
    assert global_sections_dim(d) == gcd(b, c) - 1
    assert d["D:D1"].closed


def test_compile_double_sheet():
    spec = CoveringSpec(2, (Component("D1", 2),))
    d = compile(spec)
    assert d["D:D1"].branches == 2 and not d["D:D1"].monodromy
    assert global_sections_dim(d) == 1
    assert b0_normalization(d) == 2


def test_compile_requires_known_global_monodromy():
    spec = CoveringSpec(4, (Component("E", 4, h1_is_zero=False),))
    with pytest.raises(CoveringError, match="explicit_shifts"):
        compile(spec)
    d = compile(CoveringSpec(4, (Component("E", 4, False, (2,)),)))
    assert orbit_count(4, d["D:E"].monodromy) == 2


def test_irreducibility_hint():
    assert irreducibility_hint(cusp_family_spec(2, 5, 3))
    assert not irreducibility_hint(CoveringSpec(4, (Component("D", 2),)))
    assert irreducibility_hint(CoveringSpec(6, (Component("A", 4), Component("B", 9))))


def _random_spec(rng):
    m = rng.randint(2, 12)
    n = rng.randint(1, 3)
    comps = tuple(Component(f"D{i}", rng.randint(1, 12)) for i in range(n))
    points, table = [], {}
    for k in range(rng.randint(0, 3)):
        through = rng.sample([c.id for c in comps], rng.randint(1, n))
        branches = tuple((cid, 0) for cid in through)
        points.append(SpecialPoint(f"y{k}", branches, rng.random() < 0.3))
        for i in through:
            for j in through:
                if i != j:
                    table[(f"y{k}", i, 0, j)] = rng.randint(1, 4)
    return CoveringSpec(m, comps, tuple(points), table)


def test_compiled_data_passes_composition_check():
    rng = random.Random(11)
    for _ in range(150):
        d = compile(_random_spec(rng))
        check_composition(d)
        report = full_pipeline(d)
        assert report.b0_norm >= report.b0_X


def test_torsor_relabelling_is_immaterial():
    """Translating the branch labels of every torsor stratum leaves the sections unchanged."""
    rng = random.Random(5)
    for _ in range(150):
        d = compile(_random_spec(rng))
        shift = {s.id: rng.randrange(s.branches) for s in d.strata}
        relabelled = []
        for a in d.adjacencies:
            rd, rg = d[a.deep].branches, d[a.generic].branches
            td, tg = shift[a.deep], shift[a.generic]
            bm = tuple((a.branch_map[(k - tg) % rg] + td) % rd for k in range(rg))
            relabelled.append(Adjacency(a.deep, a.generic, bm))
        d2 = StratifiedBranchData(d.strata, relabelled)
        check_composition(d2)
        assert global_sections_dim(d2) == global_sections_dim(d)


@pytest.mark.parametrize("bad", [
    lambda: CoveringSpec(1, (Component("D", 1),)),
    lambda: CoveringSpec(2, ()),
    lambda: CoveringSpec(2, (Component("D", 0),)),
    lambda: CoveringSpec(2, (Component("D", 1),), (SpecialPoint("y", (("Q", 0),)),)),
    lambda: SpecialPoint("y", ()),
    lambda: CoveringSpec(2, (Component("D", 1),), (), {("y", "D", 0, "E"): 1}),
    lambda: CoveringSpec(4, (Component("D", 2),), generic_components=4),
])
def test_spec_validation(bad):
    with pytest.raises(CoveringError):
        bad()


def test_shift_sign_convention_is_immaterial():
    """Inverting every torsor monodromy does not change the sections."""
    rng = random.Random(11)
    for _ in range(100):
        d = compile(_random_spec(rng))
        flipped = [Stratum(s.id, s.branches, tuple(g.inverse() for g in s.monodromy), s.closed)
                   for s in d.strata]
        assert global_sections_dim(StratifiedBranchData(flipped, d.adjacencies)) == \
            global_sections_dim(d)
