import itertools
import math

import pytest
from hypothesis import given, settings, strategies as st

from fusiondescent.based_ring import (BasedRing, BasisAction, FAMILIES, Strength,
                                      basis_vector, construct_R_m, construct_R_pr,
                                      construct_S_ab, construct_S_k, construct_T_k,
                                      cyclic_group_ring, find_isomorphism, fp_dim,
                                      fusion_matrix, is_commutative, multiply,
                                      orbit_ring, orbit_ring_from_action,
                                      verify_based_ring)
from fusiondescent.cohomology import FiniteAbelianGroup
from fusiondescent.errors import InputError, StructureError

from conftest import primes_up_to


def tampered(R, i, j, k, value):
    N = [[list(row) for row in plane] for plane in R.N]
    N[i][j][k] = value
    return BasedRing(R.rank, R.unit_index, R.involution,
                     tuple(tuple(tuple(row) for row in plane) for plane in N),
                     R.labels)


def brute_force_associative(R):
    basis = [basis_vector(R, i) for i in range(R.rank)]
    return all(multiply(R, multiply(R, x, y), z) == multiply(R, x, multiply(R, y, z))
               for x, y, z in itertools.product(basis, repeat=3))


def test_R_4_is_weak_but_not_strict():
    R = construct_R_m(4)
    assert verify_based_ring(R, Strength.WEAK).valid
    report = verify_based_ring(R, "strict")
    assert not report.valid
    assert [v.axiom for v in report.violations] == ["fusion"]
    assert report.violations[0].detail == "N[X][X][1]=4≠1"


def test_rank_one_ring_is_strict():
    trivial = BasedRing(1, 0, (0,), (((1,),),))
    assert verify_based_ring(trivial, Strength.STRICT).valid


def test_tampered_T_2_fails_associativity(t2):
    # X X = X + 2 X*; raising the X coefficient breaks associativity only
    broken = tampered(t2, 1, 1, 1, 2)
    broken = tampered(broken, 2, 2, 2, 2)
    report = verify_based_ring(broken)
    assert "associativity" in {v.axiom for v in report.violations}
    assert not brute_force_associative(broken)


def test_report_lists_every_violation():
    R = tampered(construct_R_m(2), 0, 1, 1, 2)
    R = tampered(R, 1, 1, 1, -1)
    axioms = {v.axiom for v in verify_based_ring(R).violations}
    assert {"unit", "nonnegativity"} <= axioms


def test_unit_coefficient_violations():
    R = tampered(construct_S_ab(1, 1), 1, 1, 0, 0)
    report = verify_based_ring(R)
    assert "unit coefficient" in {v.axiom for v in report.violations}


def test_shape_mismatch_is_a_structure_error():
    bad = BasedRing(2, 0, (0, 1), (((1, 0), (0, 1)),))
    with pytest.raises(StructureError):
        verify_based_ring(bad)
    with pytest.raises(InputError):
        verify_based_ring(BasedRing(2, 0, (0,), construct_R_m(1).N))


def test_family_examples():
    S = construct_S_ab(1, 1)
    assert S.rank == 2 and S.N[1][1] == (1, 1)
    assert construct_R_pr(3, 1).same_tensor(cyclic_group_ring(3))
    T = construct_T_k(2)
    assert T.rank == 3
    assert T.N[1][1] == (0, 1, 2)
    assert T.N[1][2] == (3, 1, 1)
    assert T.N[2][1] == (3, 1, 1)


def test_R_pr_needs_a_prime():
    with pytest.raises(InputError):
        construct_R_pr(4, 1)


@pytest.mark.parametrize("family, grid", [
    ("r-m", [{"m": m} for m in range(1, 65)]),
    ("r-pr", [{"p": p, "r": r} for p in primes_up_to(13) for r in range(1, 10)]),
    ("s-k", [{"k": k} for k in range(1, 51)]),
    ("t-k", [{"k": k} for k in range(1, 51)]),
    ("s-ab", [{"a": a, "b": b} for a in range(1, 201, 7) for b in (0, 1, 5, 40)]),
])
def test_families_are_weak_based_rings(family, grid):
    build, names = FAMILIES[family]
    for params in grid:
        R = build(*(params[n] for n in names))
        assert verify_based_ring(R).valid, params


@pytest.mark.parametrize("k", range(1, 51))
def test_S_ab_specializes_to_S_k(k):
    assert construct_S_ab(k, k - 1).same_tensor(construct_S_k(k))


@pytest.mark.parametrize("r", range(1, 9))
def test_R_2r_is_R_r_squared(r):
    assert construct_R_pr(2, r).same_tensor(construct_R_m(r * r))


@pytest.mark.parametrize("R", [construct_R_m(3), construct_T_k(3), construct_S_k(4),
                               construct_R_pr(5, 2), construct_R_pr(7, 1),
                               orbit_ring(13, [1, 3, 9])])
def test_associativity_check_matches_brute_force(R):
    report = verify_based_ring(R)
    assert ("associativity" not in {v.axiom for v in report.violations}) \
        == brute_force_associative(R)
    assert R.rank <= 8


def test_fusion_matrix_of_R_m():
    M = fusion_matrix(construct_R_m(5), 1)
    assert M.tolist() == [[0, 1], [5, 0]]


@pytest.mark.parametrize("R, i, expected", [
    (construct_S_k(5), 1, 5),
    (construct_T_k(3), 1, 5),
    (construct_T_k(3), 2, 5),
    (construct_R_m(4), 1, 2),
    (construct_R_pr(5, 3), 2, 3),
])
def test_integral_fp_dims(R, i, expected):
    dim = fp_dim(R, i)
    assert dim.exact == expected
    assert dim.to_json() == {"exact": expected, "value": float(expected),
                             "error": 0.0}


@pytest.mark.parametrize("R", [construct_R_m(2), construct_T_k(4), cyclic_group_ring(6)])
def test_unit_has_dimension_one(R):
    assert fp_dim(R, R.unit_index).exact == 1


def test_irrational_fp_dims_come_with_bounds():
    dim = fp_dim(construct_R_m(2), 1)
    assert dim.exact is None
    assert abs(dim.value - 2 ** 0.5) <= dim.error + 1e-12
    golden = fp_dim(construct_S_ab(1, 1), 1)
    assert abs(golden.value - (1 + 5 ** 0.5) / 2) < 1e-9


@pytest.mark.parametrize("R", [construct_R_m(2), construct_S_ab(3, 1), construct_T_k(2),
                               construct_S_k(3), orbit_ring(13, [1, 3, 9])])
def test_fp_dim_of_regular_element_is_the_sum(R):
    total = sum(fp_dim(R, i).value for i in range(R.rank))
    assert abs(fp_dim(R, [1] * R.rank).value - total) < 1e-9


def test_orbit_ring_of_seven_is_T_2(t2):
    R = orbit_ring(7, [1, 2, 4])
    assert R.same_tensor(t2)
    assert R.labels == ("Y0", "Y1", "Y3")
    assert find_isomorphism(R, t2) == (0, 1, 2)


def test_orbit_ring_of_eleven_is_T_3():
    R = orbit_ring(11, [1, 3, 4, 5, 9])
    assert R.same_tensor(construct_T_k(3))


def test_orbit_ring_of_trivial_subgroup_is_group_ring():
    assert orbit_ring(5, [1]).same_tensor(cyclic_group_ring(5))


def test_orbit_ring_thirteen_by_three():
    R = orbit_ring(13, [1, 3, 9])
    assert R.rank == 5
    assert verify_based_ring(R).valid
    assert [fp_dim(R, i).exact for i in range(1, 5)] == [3, 3, 3, 3]


@pytest.mark.parametrize("n, H", [(7, [1, 2, 4]), (13, [1, 3, 9]), (13, [1, 5, 8, 12]),
                                  (9, [1, 4, 7]), (31, [1, 2, 4, 8, 16]), (8, [1, 3])])
def test_orbit_rings_are_weak_based_rings_with_orbit_dimensions(n, H):
    R = orbit_ring(n, H)
    assert verify_based_ring(R).valid
    for i, label in enumerate(R.labels):
        orbit = {h * int(label[1:]) % n for h in H}
        assert fp_dim(R, i).exact == len(orbit)


def test_orbit_ring_rejects_non_subgroups():
    with pytest.raises(InputError):
        orbit_ring(7, [1, 2])


def test_orbit_ring_rejects_non_automorphisms():
    # swapping X1 and X2 does not preserve Z[Z/4]
    R = cyclic_group_ring(4)
    with pytest.raises(InputError):
        orbit_ring_from_action(R, BasisAction(((0, 2, 1, 3),)))


def test_basis_action_checks_group_relations():
    R = cyclic_group_ring(5)
    negation = (0, 4, 3, 2, 1)
    BasisAction((negation,), FiniteAbelianGroup((2,))).validate(R)
    with pytest.raises(InputError):
        BasisAction((negation,), FiniteAbelianGroup((3,))).validate(R)


def test_orbit_ring_from_negation_action():
    R = orbit_ring_from_action(cyclic_group_ring(5), BasisAction(((0, 4, 3, 2, 1),)))
    assert R.rank == 3
    assert is_commutative(R)
    assert verify_based_ring(R).valid


def test_json_round_trip_keeps_tensor(t2):
    assert BasedRing.from_json(t2.to_json()) == t2
    with pytest.raises(StructureError):
        BasedRing.from_json({"rank": 2, "involution": [0, 1], "N": [[[1]]]})


@settings(max_examples=50, deadline=None)
@given(st.integers(min_value=2, max_value=40))
def test_orbit_ring_under_all_units_has_divisor_orbits(n):
    units = [x for x in range(1, n) if math.gcd(x, n) == 1]
    R = orbit_ring(n, units)
    assert verify_based_ring(R).valid
    # orbits of the full unit group are the elements of each order
    assert R.rank == sum(1 for d in range(1, n + 1) if n % d == 0)
