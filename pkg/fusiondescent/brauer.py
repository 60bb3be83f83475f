# -*- coding: utf-8 -*-
# Distributed under the MIT License (https://opensource.org/licenses/MIT)

"""
Brauer group arithmetic: Hilbert symbols at the places of Q, quaternion
division tests through ramification, and n-torsion of the Brauer group
for each supported field class.
"""

import logging
import operator
from dataclasses import dataclass
from typing import Optional, Tuple

from sympy import Rational, Symbol, legendre_symbol, sympify

from fusiondescent.arith import factorize, invariant_factors_from_orders, is_prime
from fusiondescent.errors import InputError, UnsupportedFieldError
from fusiondescent.fields import FieldKind

log = logging.getLogger(__name__)


@dataclass(frozen=True, order=True)
class Place:
    """The real place (prime 0) or the p-adic place of Q."""
    prime: int = 0

    REAL_TOKENS = ("real", "inf", "R")

    def __post_init__(self):
        if self.prime and not is_prime(self.prime):
            raise InputError(f"a finite place needs a prime, got {self.prime}")

    @classmethod
    def real(cls):
        return cls(0)

    @classmethod
    def finite(cls, p):
        try:
            prime = operator.index(p)
        except TypeError:
            prime = None
        if isinstance(p, bool) or prime is None or not is_prime(prime):
            raise InputError(f"a finite place needs a prime, got {p!r}")
        return cls(prime)

    @classmethod
    def parse(cls, text):
        """'real', 'inf' or 'R' for the real place, a prime for a p-adic one."""
        text = str(text).strip()
        if text in cls.REAL_TOKENS:
            return cls.real()
        try:
            p = int(text)
        except ValueError:
            raise InputError(f"unknown place '{text}'") from None
        return cls.finite(p)

    @classmethod
    def from_json(cls, payload):
        if isinstance(payload, dict):
            if set(payload) != {"p"}:
                raise InputError(f"a place object holds exactly 'p', got {payload}")
            try:
                p = int(payload["p"])
            except (TypeError, ValueError):
                raise InputError(f"place prime must be an integer, got "
                                 f"{payload['p']!r}") from None
            return cls.finite(p)
        if isinstance(payload, int) and not isinstance(payload, bool):
            return cls.finite(payload)
        if isinstance(payload, str):
            return cls.parse(payload)
        raise InputError(f"unknown place {payload!r}")

    @property
    def is_real(self):
        return self.prime == 0

    def to_json(self):
        return "real" if self.is_real else {"p": self.prime}

    def __str__(self):
        return "real" if self.is_real else str(self.prime)


def _nonzero_rational(x, name):
    value = sympify(x)
    if not value.is_Rational:
        raise InputError(f"{name} must be rational, got {x!r}")
    if value == 0:
        raise InputError(f"{name} must be non-zero")
    return Rational(value)


@dataclass(frozen=True)
class QuaternionSymbol:
    """
    The quaternion algebra with x^2 = a, y^2 = b, xy = -yx. The entries
    are rationals, or sympy symbols for the generic algebras over a
    rational function field.
    """
    a: object
    b: object

    def __post_init__(self):
        for name in ("a", "b"):
            value = sympify(getattr(self, name))
            if value.is_Rational:
                value = _nonzero_rational(value, name)
            object.__setattr__(self, name, value)

    @property
    def is_rational(self):
        return self.a.is_Rational and self.b.is_Rational

    def to_json(self):
        return {"type": "quaternion", "a": str(self.a), "b": str(self.b)}

    def __str__(self):
        return f"Q({self.a},{self.b})"


@dataclass(frozen=True)
class CyclicSymbol:
    """The cyclic algebra x^p = a, y^p = b, xy = zeta_p yx. No division test."""
    a: object
    b: object
    p: int

    def __post_init__(self):
        if self.p == 2 or not is_prime(self.p):
            raise InputError(f"cyclic symbols need an odd prime, got {self.p}")
        for name in ("a", "b"):
            value = sympify(getattr(self, name))
            if value.is_Rational:
                value = _nonzero_rational(value, name)
            object.__setattr__(self, name, value)

    def to_json(self):
        return {"type": "cyclic", "a": str(self.a), "b": str(self.b),
                "p": self.p}

    def __str__(self):
        return f"Q({self.a},{self.b},{self.p})"


def generic_symbols(count, p=2):
    """
    Symbolic algebras Q(a_i, b_i) (or their degree p cyclic versions)
    over C(a_1..a_count, b_1..b_count).
    """
    out = []
    for i in range(1, count + 1):
        a, b = Symbol(f"a{i}"), Symbol(f"b{i}")
        out.append(QuaternionSymbol(a, b) if p == 2 else CyclicSymbol(a, b, p))
    return tuple(out)


@dataclass(frozen=True)
class GroupDescriptor:
    """A finite group by invariant factors, or an infinite one by description."""
    invariant_factors: Tuple[int, ...] = ()
    description: Optional[str] = None

    @property
    def is_finite(self):
        return self.description is None

    @property
    def order(self):
        if not self.is_finite:
            return None
        out = 1
        for d in self.invariant_factors:
            out *= d
        return out

    def to_json(self):
        return {"finite": self.is_finite,
                "invariant_factors": list(self.invariant_factors),
                "order": self.order,
                "description": str(self)}

    def __str__(self):
        if not self.is_finite:
            return self.description
        if not self.invariant_factors:
            return "0"
        return " + ".join(f"Z/{d}" for d in self.invariant_factors)


def square_free_part(x):
    """The square-free integer in the square class of a non-zero rational."""
    x = _nonzero_rational(x, "x")
    n = int(x.p) * int(x.q)
    sign = -1 if n < 0 else 1
    out = 1
    for p, e in factorize(abs(n)).items():
        if e % 2:
            out *= p
    return sign * out


def _split(x, p):
    """x = p^alpha u with p not dividing u."""
    alpha = 0
    while x % p == 0:
        x //= p
        alpha += 1
    return alpha, x


def hilbert_symbol(a, b, place):
    """
    The Hilbert symbol (a, b)_v, +1 when a x^2 + b y^2 = z^2 has a
    non-trivial solution over the completion at v, else -1.
    """
    a, b = square_free_part(a), square_free_part(b)
    if place.is_real:
        return -1 if a < 0 and b < 0 else 1
    p = place.prime
    alpha, u = _split(a, p)
    beta, v = _split(b, p)
    if p == 2:
        def eps(t):
            return (t - 1) // 2 % 2

        def omega(t):
            return (t * t - 1) // 8 % 2

        exponent = eps(u) * eps(v) + alpha * omega(v) + beta * omega(u)
        return -1 if exponent % 2 else 1
    sign = -1 if alpha * beta * ((p - 1) // 2) % 2 else 1
    if beta % 2:
        sign *= legendre_symbol(u % p, p)
    if alpha % 2:
        sign *= legendre_symbol(v % p, p)
    return sign


def _require_rational(q):
    if not q.is_rational:
        raise InputError(f"{q} has symbolic entries; no local data")


def candidate_places(a, b):
    """The real place and the primes dividing 2ab, in canonical order."""
    a, b = square_free_part(a), square_free_part(b)
    primes = set(factorize(abs(2 * a * b)))
    return (Place.real(),) + tuple(Place.finite(p) for p in sorted(primes))


def ramified_places(q):
    """Places where the algebra does not split, real first."""
    _require_rational(q)
    return tuple(v for v in candidate_places(q.a, q.b)
                 if hilbert_symbol(q.a, q.b, v) == -1)


def quaternion_is_division(q):
    return bool(ramified_places(q))


def brauer_classes_equal(q1, q2):
    return ramified_places(q1) == ramified_places(q2)


def local_invariant(q, place):
    """The invariant of q at v in (1/2)Z/Z."""
    _require_rational(q)
    return Rational(1, 2) if hilbert_symbol(q.a, q.b, place) == -1 else Rational(0)


def _smallest_non_residue(p):
    u = 2
    while legendre_symbol(u, p) == 1:
        u += 1
    return u


def division_quaternion(K):
    """A quaternion division algebra over K, for K = Q, R or Q_p."""
    if K.kind in (FieldKind.RATIONAL, FieldKind.REAL) or \
            (K.kind is FieldKind.PADIC and K.prime == 2):
        return QuaternionSymbol(-1, -1)
    if K.kind is FieldKind.PADIC:
        return QuaternionSymbol(_smallest_non_residue(K.prime), K.prime)
    raise UnsupportedFieldError(f"no rational quaternion division algebra over {K}")


def splits_over(q, K):
    """Whether a rational quaternion algebra splits after extending Q to K."""
    _require_rational(q)
    if K.kind is FieldKind.RATIONAL:
        return not quaternion_is_division(q)
    if K.kind is FieldKind.REAL:
        return hilbert_symbol(q.a, q.b, Place.real()) == 1
    if K.kind is FieldKind.PADIC:
        return hilbert_symbol(q.a, q.b, Place.finite(K.prime)) == 1
    raise UnsupportedFieldError(f"no local splitting data for {K}")


def br_n(K, n):
    """The n-torsion Br_n(K) of the Brauer group."""
    if isinstance(n, bool) or not isinstance(n, int) or n < 2:
        raise InputError(f"n must be an integer >= 2, got {n!r}")
    if K.kind is FieldKind.REAL:
        return GroupDescriptor((2,) if n % 2 == 0 else ())
    if K.kind is FieldKind.PADIC:
        return GroupDescriptor((n,))
    if K.kind in (FieldKind.FINITE, FieldKind.ALG_CLOSED_CHAR0):
        return GroupDescriptor()
    if K.kind is FieldKind.RATIONAL:
        real = "2-torsion" if n % 2 == 0 else "trivial"
        return GroupDescriptor(description=(
            f"infinite: families of local invariants in (1/{n})Z/Z at the "
            f"finite places, almost all zero, with real invariant {real}, "
            f"summing to zero"))
    raise UnsupportedFieldError(f"Br_{n} is not available over {K}")


def quasi_trivial_forms_group(grading_orders, K):
    """Direct sum of Br_{n_j}(K) over the orders of the universal grading."""
    parts = [br_n(K, n) for n in grading_orders]
    if not parts:
        raise InputError("at least one grading order is needed")
    infinite = [str(d) for d in parts if not d.is_finite]
    if infinite:
        return GroupDescriptor(description=" + ".join(
            f"Br_{n}(K)" for n in grading_orders) + f" over {K}, {infinite[0]}")
    factors = [d for part in parts for d in part.invariant_factors]
    return GroupDescriptor(invariant_factors_from_orders(factors))
