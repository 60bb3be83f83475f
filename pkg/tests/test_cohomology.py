import math

import numpy as np
import pytest
from hypothesis import given, settings, strategies as st

from fusiondescent.cohomology import (Cochain, CohomologyGroup, FiniteAbelianGroup,
                                      GModule, cohomologous, cohomology_group,
                                      cyclic_three_cocycle, default_cap,
                                      differential, evaluate_coboundary,
                                      is_cocycle, multi_degrees,
                                      periodic_differential, pullback_class)
from fusiondescent.errors import InputError, ResourceCapError


def H(orders, module, k, action=None):
    G = FiniteAbelianGroup(tuple(orders))
    if action is None:
        M = GModule.trivial(G, tuple(module))
    else:
        M = GModule(tuple(module), action)
    return cohomology_group(G, M, k).invariant_factors


def test_d1_on_z2(z2, trivial_module):
    D = differential(z2, trivial_module(z2, 2), 1)
    assert D.shape == (4, 2)
    assert D.toarray().tolist() == [[1, 0], [1, 0], [1, 0], [-1, 2]]


# every finite abelian group of order at most 8
SMALL_GROUPS = [(), (2,), (3,), (4,), (2, 2), (5,), (6,), (7,), (8,), (2, 4),
                (2, 2, 2)]


def sign_module(G):
    """Z/3 + Z/4 with generators of even order acting by -1."""
    return GModule((3, 4), tuple(
        ((2, 0), (0, 3)) if n % 2 == 0 else ((1, 0), (0, 1))
        for n in G.cyclic_orders))


def small_module(G, twisted):
    return sign_module(G) if twisted else GModule.trivial(G, (2, 4))


@pytest.mark.parametrize("orders", SMALL_GROUPS)
@pytest.mark.parametrize("twisted", [False, True])
@pytest.mark.parametrize("k", [0, 1, 2])
def test_differential_squares_to_zero(orders, twisted, k):
    G = FiniteAbelianGroup(orders)
    M = small_module(G, twisted)
    product = (differential(G, M, k + 1) @ differential(G, M, k)).toarray()
    row_orders = np.tile(np.array(M.cyclic_orders), G.order ** (k + 2))
    assert not (product % row_orders[:, None]).any()


@pytest.mark.parametrize("orders", SMALL_GROUPS)
@pytest.mark.parametrize("twisted", [False, True])
@pytest.mark.parametrize("k", [0, 1, 2])
@settings(max_examples=10, deadline=None)
@given(data=st.data())
def test_coboundary_of_a_random_coboundary_vanishes(orders, twisted, k, data):
    G = FiniteAbelianGroup(orders)
    M = small_module(G, twisted)
    values = data.draw(st.lists(st.integers(min_value=0, max_value=11),
                                min_size=G.order ** k * M.dim,
                                max_size=G.order ** k * M.dim))
    c = Cochain(G, M.cyclic_orders, k, tuple(values))
    assert evaluate_coboundary(G, M, evaluate_coboundary(G, M, c)).is_zero()


@pytest.mark.parametrize("orders", SMALL_GROUPS + [(16,), (4, 4), (2, 2, 2, 2)])
@pytest.mark.parametrize("twisted", [False, True])
@pytest.mark.parametrize("k", [0, 1, 2])
def test_periodic_differential_squares_to_zero(orders, twisted, k):
    G = FiniteAbelianGroup(orders)
    M = small_module(G, twisted)
    product = periodic_differential(G, M, k + 1) @ periodic_differential(G, M, k)
    row_orders = np.tile(np.array(M.cyclic_orders),
                         len(multi_degrees(G.rank, k + 2)))
    assert not (product % row_orders[:, None]).any()


@pytest.mark.parametrize("rank, k, count", [(0, 0, 1), (0, 2, 0), (1, 3, 1),
                                            (2, 3, 4), (3, 3, 10), (4, 3, 20)])
def test_periodic_generator_counts(rank, k, count):
    assert len(multi_degrees(rank, k)) == count


@pytest.mark.parametrize("orders", SMALL_GROUPS)
@pytest.mark.parametrize("twisted", [False, True])
def test_resolutions_agree(orders, twisted):
    G = FiniteAbelianGroup(orders)
    M = small_module(G, twisted)
    degrees = range(4) if G.order <= 4 else range(3)
    for k in degrees:
        assert cohomology_group(G, M, k) == \
            cohomology_group(G, M, k, resolution="bar"), k


def test_unknown_resolution(z2, trivial_module):
    with pytest.raises(InputError):
        cohomology_group(z2, trivial_module(z2, 2), 1, resolution="koszul")


def test_differential_respects_the_cap():
    G = FiniteAbelianGroup.cyclic(9)
    with pytest.raises(ResourceCapError):
        differential(G, GModule.trivial(G, (9,)), 3, cap=1000)


def test_cap_counts_the_top_degree_tuples():
    G = FiniteAbelianGroup.cyclic(16)
    M = GModule.trivial(G, (2,))
    assert cohomology_group(G, M, 3, cap=16 ** 4).invariant_factors == (2,)
    with pytest.raises(ResourceCapError):
        cohomology_group(G, M, 3, cap=16 ** 4 - 1)


def test_default_cap_stops_above_the_supported_range(monkeypatch):
    monkeypatch.delenv("FUSIONDESCENT_COHOMOLOGY_CAP", raising=False)
    assert default_cap() == 10 ** 6
    G = FiniteAbelianGroup.cyclic(32)
    with pytest.raises(ResourceCapError):
        cohomology_group(G, GModule.trivial(G, (2,)), 3)


def test_bar_route_refuses_huge_dense_matrices():
    G = FiniteAbelianGroup.cyclic(16)
    with pytest.raises(ResourceCapError):
        cohomology_group(G, GModule.trivial(G, (2,)), 3, resolution="bar")


def test_cap_from_environment(monkeypatch):
    monkeypatch.setenv("FUSIONDESCENT_COHOMOLOGY_CAP", "20")
    assert default_cap() == 20
    G = FiniteAbelianGroup.cyclic(3)
    with pytest.raises(ResourceCapError):
        cohomology_group(G, GModule.trivial(G, (3,)), 2)
    monkeypatch.setenv("FUSIONDESCENT_COHOMOLOGY_CAP", "lots")
    with pytest.raises(InputError):
        default_cap()


def test_degree_out_of_range(z2, trivial_module):
    with pytest.raises(InputError):
        cohomology_group(z2, trivial_module(z2, 2), 4)


@pytest.mark.parametrize("orders, module, k, expected", [
    ((2,), (2,), 2, (2,)),
    ((3,), (3,), 2, (3,)),
    ((3,), (5,), 3, ()),
    ((2,), (4,), 2, (2,)),
    ((4,), (2,), 2, (2,)),
    ((4,), (4,), 2, (4,)),
    ((6,), (6,), 2, (6,)),
    ((2, 2), (2,), 1, (2, 2)),
    ((2, 2), (2,), 2, (2, 2, 2)),
    ((2, 2), (2,), 3, (2, 2, 2, 2)),
    ((4,), (6,), 0, (6,)),
    ((11,), (11,), 3, (11,)),
    ((12,), (2,), 3, (2,)),
    ((16,), (2,), 3, (2,)),
    ((16,), (16,), 3, (16,)),
    ((12,), (8,), 2, (4,)),
    ((4, 4), (2,), 3, (2, 2, 2, 2)),
    ((2, 2, 2, 2), (2,), 3, (2,) * 20),
])
def test_spot_values(orders, module, k, expected):
    assert H(orders, module, k) == expected


@pytest.mark.parametrize("n", range(2, 17))
def test_third_cohomology_of_cyclic_groups(n):
    assert H((n,), (n,), 3) == (n,)


@pytest.mark.parametrize("r", [3, 5, 7, 9])
@pytest.mark.parametrize("p", [2, 11, 13])
def test_odd_groups_kill_coprime_coefficients(r, p):
    assert H((r,), (p,), 3) == ()


@pytest.mark.parametrize("k, expected", [(0, (2,)), (1, (2,)), (2, (2,)), (3, (2,))])
def test_sign_action_on_z4(k, expected):
    assert H((2,), (4,), k, (((3,),),)) == expected


def test_galois_twisted_coefficients_vanish():
    # Z/3 acting on Z/7 through 4, as in the minimal form of Vec_Z/7
    assert H((3,), (7,), 2, (((4,),),)) == ()
    assert H((3,), (7,), 3, (((4,),),)) == ()


def test_first_cohomology_orders():
    for n in range(2, 13):
        for m in range(2, 13):
            G = FiniteAbelianGroup.cyclic(n)
            result = cohomology_group(G, GModule.trivial(G, (m,)), 1)
            assert result.order == math.gcd(n, m), (n, m)


def test_coprime_groups_have_trivial_cohomology():
    for n in range(2, 9):
        for m in range(2, 9):
            if math.gcd(n, m) != 1:
                continue
            for k in (1, 2, 3):
                assert H((n,), (m,), k) == ()


def test_cohomology_group_json():
    group = CohomologyGroup((2, 4))
    assert group.to_json() == {"invariant_factors": [2, 4], "order": 8,
                               "description": "Z/2 + Z/4"}
    assert CohomologyGroup().is_trivial
    assert str(CohomologyGroup()) == "0"


def test_module_validation():
    G = FiniteAbelianGroup.cyclic(2)
    with pytest.raises(InputError):
        GModule((5,), (((2,),),)).validate(G)
    with pytest.raises(InputError):
        GModule((2, 4), (((1, 0), (1, 1)),)).validate(G)
    with pytest.raises(InputError):
        GModule((2,), ()).validate(G)


@pytest.mark.parametrize("k", [0, 1, 2, 3])
def test_zero_cochain_is_a_cocycle(k, klein, trivial_module):
    M = trivial_module(klein, 2)
    assert is_cocycle(klein, M, Cochain.zero(klein, M, k))


def test_omega_on_z2_has_one_value():
    omega = cyclic_three_cocycle(2, 1)
    assert sum(omega.values) == 1
    assert omega((1,), (1,), (1,)) == (1,)


def test_omega_zero_is_zero():
    assert cyclic_three_cocycle(6, 0).is_zero()


@pytest.mark.parametrize("n", range(2, 13))
def test_omega_is_a_cocycle(n):
    G = FiniteAbelianGroup.cyclic(n)
    M = GModule.trivial(G, (n,))
    for a in range(n):
        assert is_cocycle(G, M, cyclic_three_cocycle(n, a))


def test_omega_classes_differ_on_z5():
    G = FiniteAbelianGroup.cyclic(5)
    M = GModule.trivial(G, (5,))
    assert cohomologous(G, M, cyclic_three_cocycle(5, 1),
                        cyclic_three_cocycle(5, 2)) is None
    b = cohomologous(G, M, cyclic_three_cocycle(5, 3), cyclic_three_cocycle(5, 3))
    assert b is not None and b.degree == 2


def test_cohomologous_needs_matching_degrees(z2, trivial_module):
    M = trivial_module(z2, 2)
    with pytest.raises(InputError):
        cohomologous(z2, M, Cochain.zero(z2, M, 2), Cochain.zero(z2, M, 3))
    with pytest.raises(InputError):
        cohomologous(z2, M, Cochain.zero(z2, M, 0), Cochain.zero(z2, M, 0))


@settings(max_examples=25, deadline=None)
@given(st.lists(st.integers(min_value=0, max_value=3), min_size=16, max_size=16))
def test_solved_coboundaries_recheck(values):
    G = FiniteAbelianGroup.cyclic(4)
    M = GModule.trivial(G, (4,))
    b = Cochain(G, (4,), 2, tuple(values))
    omega = cyclic_three_cocycle(4, 1)
    shifted = omega - evaluate_coboundary(G, M, b)
    solved = cohomologous(G, M, omega, shifted)
    assert solved is not None
    assert evaluate_coboundary(G, M, solved) == omega - shifted


@settings(max_examples=25, deadline=None)
@given(st.lists(st.integers(min_value=0, max_value=2), min_size=4, max_size=4))
def test_twisted_coboundaries_recheck(values):
    # Z/2 acting on (Z/3)^2 by negation
    G = FiniteAbelianGroup.cyclic(2)
    M = GModule((3, 3), (((2, 0), (0, 2)),))
    b = Cochain(G, (3, 3), 1, tuple(values))
    target = evaluate_coboundary(G, M, b)
    solved = cohomologous(G, M, target, Cochain.zero(G, M, 2))
    assert solved is not None
    assert evaluate_coboundary(G, M, solved) == target


def test_cochain_json_round_trip():
    omega = cyclic_three_cocycle(3, 2)
    assert Cochain.from_json(omega.to_json()) == omega
    with pytest.raises(InputError):
        Cochain.from_json({"group": [3], "module": [3], "degree": 1,
                           "values": [0, 1]})


@pytest.mark.parametrize("n, a, s, expected", [(5, 1, 1, 1), (5, 1, 2, 4), (7, 3, 2, 5),
                                               (7, 3, 1, 3)])
def test_pullback_examples(n, a, s, expected):
    assert pullback_class(n, a, s).class_index == expected


@pytest.mark.parametrize("n", [5, 7])
def test_pullback_scales_by_the_square(n):
    for a in range(n):
        for s in range(1, n):
            result = pullback_class(n, a, s)
            assert result.class_index == s * s * a % n
            assert 2 in result.consistent_exponents


def test_pullback_needs_a_unit():
    with pytest.raises(InputError):
        pullback_class(6, 1, 2)


def test_pullback_json():
    assert pullback_class(5, 1, 2).to_json() == {
        "n": 5, "a": 1, "s": 2, "class_index": 4,
        "consistent_exponents": [-2, 2]}
