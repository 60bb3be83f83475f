# -*- coding: utf-8 -*-
# Distributed under the MIT License (https://opensource.org/licenses/MIT)

"""
Descent of the pointed categories Vec_{Z/n}^omega: real forms, the
minimal field of definition with the fusion ring of the minimal form,
and the forms of the rank 2 pointed categories over each field class.
"""

import enum
import logging
from dataclasses import dataclass
from typing import Optional, Tuple

from sympy.ntheory import primitive_root

from fusiondescent.arith import (euler_phi, generated_subgroup, is_gauss_number,
                                 is_prime, is_qr, odd_part_subgroup,
                                 two_adic_split, unit_sqrt, units)
from fusiondescent.based_ring import BasedRing, construct_R_m, orbit_ring
from fusiondescent.brauer import br_n, division_quaternion, QuaternionSymbol
from fusiondescent.cohomology import (CohomologyGroup, FiniteAbelianGroup,
                                      GModule, cohomology_group,
                                      cyclic_three_cocycle, pullback_class)
from fusiondescent.errors import InputError
from fusiondescent.fields import FieldKind

log = logging.getLogger(__name__)


def _check_modulus(n):
    if isinstance(n, bool) or not isinstance(n, int) or n < 2:
        raise InputError(f"n must be an integer >= 2, got {n!r}")


def _check_odd_prime(p):
    if isinstance(p, bool) or not isinstance(p, int) or p == 2 or not is_prime(p):
        raise InputError(f"p must be an odd prime, got {p!r}")


@dataclass(frozen=True)
class PointedCategoryDescriptor:
    """Vec_{Z/n}^omega with omega the class omega_class in H^3(Z/n, Z/n)."""
    n: int
    omega_class: int = 0

    def __post_init__(self):
        _check_modulus(self.n)
        object.__setattr__(self, "omega_class", self.omega_class % self.n)

    @property
    def is_twisted(self):
        return self.omega_class != 0

    def cocycle(self):
        return cyclic_three_cocycle(self.n, self.omega_class)


class Obstruction(enum.Enum):
    NONE = "none"
    FIRST_CONDITION = "first_condition"
    SECOND_CONDITION = "second_condition"


@dataclass(frozen=True)
class RealFormVerdict:
    p: int
    exists: bool
    obstruction: Obstruction

    def to_json(self):
        return {"p": self.p, "exists": self.exists,
                "obstruction": self.obstruction.value}


def real_form_exists(p, omega_nontrivial):
    """
    Whether Vec_{Z/p}^omega has a form over R. Complex conjugation sends
    omega to -omega; when -1 is not a square mod p no automorphism of
    Z/p brings it back, and otherwise the square-root functor attached
    to m with m^2 = -1 fails to square to the identity.
    """
    _check_odd_prime(p)
    if not omega_nontrivial:
        verdict = RealFormVerdict(p, True, Obstruction.NONE)
    elif is_qr(-1, p):
        verdict = RealFormVerdict(p, False, Obstruction.SECOND_CONDITION)
    else:
        verdict = RealFormVerdict(p, False, Obstruction.FIRST_CONDITION)
    log.debug(f"real form of Vec_Z/{p}: {verdict}")
    return verdict


def conjugate_twist_exists(p, cap=None):
    """
    Whether some unit s pulls omega_1 back to omega_{-1}, decided by the
    coboundary solver rather than by quadratic reciprocity.
    """
    _check_odd_prime(p)
    for s in units(p):
        if pullback_class(p, 1, s, cap).class_index == p - 1:
            return True
    return False


def _generators(n, subgroup):
    """A short generating list of a subgroup of (Z/n)^x, greedy by size."""
    gens = []
    span = [1]
    for x in subgroup:
        if x not in span:
            gens.append(x)
            span = generated_subgroup(n, gens)
    return tuple(gens)


@dataclass(frozen=True)
class MinimalFieldReport:
    """
    Minimal field of definition K of Vec_{Z/n}^omega, omega a generator:
    phi(n) = 2^m r with r odd, Gamma = Gal(Q(zeta_n)/K) is the odd-order
    part of (Z/n)^x and K has degree 2^m over Q.
    """
    n: int
    cyclotomic_degree: int
    two_adic_exponent: int
    gamma_order: int
    degree_over_Q: int
    is_cyclotomic_minimal: bool
    gamma_generators: Tuple[int, ...]
    field_note: str
    braided: bool = False
    form_ring: Optional[BasedRing] = None
    twist_group: Optional[CohomologyGroup] = None
    obstruction_group: Optional[CohomologyGroup] = None

    def to_json(self):
        return {
            "n": self.n,
            "cyclotomic_degree": self.cyclotomic_degree,
            "two_adic_exponent": self.two_adic_exponent,
            "gamma_order": self.gamma_order,
            "degree_over_Q": self.degree_over_Q,
            "is_cyclotomic_minimal": self.is_cyclotomic_minimal,
            "gamma_generators": list(self.gamma_generators),
            "field": self.field_note,
            "braided": self.braided,
            "form_ring": (self.form_ring.to_json()
                          if self.form_ring is not None else None),
            "twist_group": (self.twist_group.to_json()
                            if self.twist_group is not None else None),
            "obstruction_group": (self.obstruction_group.to_json()
                                  if self.obstruction_group is not None else None),
        }


def _field_note(n, split):
    if split.r == 1:
        return f"Q(zeta_{n})"
    if is_prime(n) and n % 4 == 3:
        return f"Q(sqrt(-{n}))"
    return f"fixed field of Gamma in Q(zeta_{n}), degree {1 << split.m}"


def minimal_field(n, braided=False, cap=None,
                  include_form_ring=True):
    """
    For prime n the report also carries the fusion ring of the minimal
    form, the Galois orbit ring of Z[Z/n] under Gamma (skipped with
    include_form_ring=False), and the cohomology of Gamma with
    coefficients in Z/n, where the generator g of Gamma acts through its
    square root in Gamma.
    """
    _check_modulus(n)
    phi = euler_phi(n)
    split = two_adic_split(phi)
    gamma = odd_part_subgroup(n)
    form_ring = twist = obstruction = None
    if is_prime(n):
        # Gamma is the subgroup of 2^m-th powers of the cyclic F_n^x.
        generators = (pow(primitive_root(n), 1 << split.m, n),) \
            if split.r > 1 else ()
        if include_form_ring:
            form_ring = orbit_ring(n, gamma)
        group = FiniteAbelianGroup((split.r,) if split.r > 1 else ())
        if generators:
            module = GModule((n,), (((unit_sqrt(generators[0], n),),),))
        else:
            module = GModule.trivial(group, (n,))
        twist = cohomology_group(group, module, 2, cap)
        obstruction = cohomology_group(group, module, 3, cap)
    else:
        generators = _generators(n, gamma)
    report = MinimalFieldReport(
        n=n,
        cyclotomic_degree=phi,
        two_adic_exponent=split.m,
        gamma_order=split.r,
        degree_over_Q=1 << split.m,
        is_cyclotomic_minimal=split.r == 1,
        gamma_generators=generators,
        field_note=_field_note(n, split),
        braided=braided,
        form_ring=form_ring,
        twist_group=twist,
        obstruction_group=obstruction,
    )
    if report.is_cyclotomic_minimal != is_gauss_number(n):
        log.warning(f"n={n}: r=1 disagrees with the Gauss number test")
    log.debug(f"minimal field for n={n}: degree {report.degree_over_Q}, "
              f"|Gamma|={split.r}")
    return report


def braided_minimal_field(p, cap=None):
    """The braided pointed category on Z/p descends to the same field."""
    _check_odd_prime(p)
    return minimal_field(p, braided=True, cap=cap)


@dataclass(frozen=True)
class FormDescriptor:
    """
    One K-form of Vec_{Z/2}^omega. ``brauer_class`` is the endomorphism
    algebra of X, None for the split form.
    """
    brauer_label: str
    omega_class: int
    endo_algebra_note: str
    grothendieck_ring: BasedRing
    brauer_class: Optional[QuaternionSymbol] = None
    enumerated: bool = True

    def to_json(self):
        return {
            "brauer_class": self.brauer_label,
            "algebra": (self.brauer_class.to_json()
                        if self.brauer_class is not None else None),
            "omega_class": self.omega_class,
            "endo_algebra_note": self.endo_algebra_note,
            "grothendieck_ring": self.grothendieck_ring.to_json(),
            "enumerated": self.enumerated,
        }


def _split_form(omega, K):
    name = {FieldKind.REAL: "ℝ", FieldKind.RATIONAL: "Q"}.get(K.kind, "K")
    return FormDescriptor("0", omega, f"End(1)={name}, End(X)={name}, X⊗X=1",
                          construct_R_m(1))


def _quaternion_form(q, omega, K, label=None, enumerated=True):
    name = {FieldKind.REAL: "ℝ", FieldKind.RATIONAL: "Q"}.get(K.kind, "K")
    algebra = "quaternions" if K.kind is FieldKind.REAL else str(q)
    return FormDescriptor(label or str(q), omega,
                          f"End(1)={name}, End(X)={algebra}, X⊗X=4·1",
                          construct_R_m(4), q, enumerated)


def forms_of_pointed_rank2(K, omega_nontrivial):
    """
    The K-forms of Vec_{Z/2}^omega, one per element of Br_2(K). Over Q
    the non-split forms are described by a representative family.
    """
    omega = int(bool(omega_nontrivial))
    if omega and K.characteristic == 2:
        return []
    group = br_n(K, 2)
    forms = [_split_form(omega, K)]
    if K.kind is FieldKind.RATIONAL:
        forms.append(_quaternion_form(
            division_quaternion(K), omega, K,
            label="Q(a,b) division, up to equal ramification sets",
            enumerated=False))
    elif group.order == 2:
        forms.append(_quaternion_form(division_quaternion(K), omega, K))
    log.debug(f"{len(forms)} forms of Vec_Z/2 over {K} (Br_2 = {group})")
    return forms
