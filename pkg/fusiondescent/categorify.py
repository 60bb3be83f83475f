# -*- coding: utf-8 -*-
# Distributed under the MIT License (https://opensource.org/licenses/MIT)

"""
Categorifiability of the rank 2 and pointed based-ring families.

R_m and R_{p,r} depend on the ground field, the others are decided over
a suitable field of characteristic zero. Every verdict carries the facts
it rests on, with its sources, in ``paper_ref``.
"""

import enum
import logging
from dataclasses import dataclass, field
from typing import Optional, Tuple

from sympy import Symbol

from fusiondescent.arith import factorize, is_prime, odd_prime_power, prime_power
from fusiondescent.brauer import (CyclicSymbol, division_quaternion, generic_symbols,
                                  quaternion_is_division, splits_over)
from fusiondescent.errors import FusionDescentError, InputError, UnsupportedFieldError
from fusiondescent.fields import FieldKind

log = logging.getLogger(__name__)

@dataclass(frozen=True)
class Reference:
    """A fact a verdict rests on and the published sources it comes from."""
    fact: str
    sources: Tuple[str, ...]

    def __str__(self):
        return f"{self.fact} [{'; '.join(self.sources)}]"


GILLE_SZAMUELY = "Gille, Szamuely, Central Simple Algebras and Galois Cohomology"
MERKURJEV = "Merkurjev, On the norm residue symbol of degree 2 (1981)"
MERKURJEV_SUSLIN = ("Merkurjev, Suslin, K-cohomology of Severi-Brauer varieties "
                    "and the norm residue homomorphism (1982)")
ALBERT_BRAUER_HASSE_NOETHER = "Albert-Brauer-Hasse-Noether theorem"
TIGNOL_WADSWORTH = "Tignol, Wadsworth, Value Functions on Simple Algebras (2015)"
HUPPERT_BLACKBURN = "Huppert, Blackburn, Finite Groups III"
OSTRIK = "Ostrik, Fusion categories of rank 2 (2003)"
THORNTON = "Thornton, Generalized near-group categories (2012)"

BRAUER_DIMENSIONS = Reference(
    "index and exponent of a central simple algebra have the same prime "
    "factors", (f"Brauer's theorem, {GILLE_SZAMUELY}",))
RANK2_POINTED = Reference(
    "X^2 = m·1 is categorifiable over K iff m = 1, or m = 4^n and K carries "
    "a central division algebra of degree 2^n and exponent 2; the "
    "categorification is fixed by that algebra as End(X) and a sign",
    (f"Brauer's theorem, {GILLE_SZAMUELY}", MERKURJEV))
POINTED_PRIME = Reference(
    "X_i X_j = r X_{i+j} with zeta_p in K is categorifiable iff r = 1, or "
    "r = p^n and K carries a central division algebra of degree p^n and "
    "exponent p",
    (f"Brauer's theorem, {GILLE_SZAMUELY}", MERKURJEV_SUSLIN,
     ALBERT_BRAUER_HASSE_NOETHER))
TENSOR_OF_GENERIC = Reference(
    "over C(a_1..a_n, b_1..b_n) the tensor product of the generic algebras "
    "Q(a_i, b_i) is a division algebra", (TIGNOL_WADSWORTH,))
NEAR_GROUP = Reference(
    "X^2 = k·1 + (k-1)X forces X to be the sum of one free orbit of a group "
    "of order k+1 whose non-identity elements all have the same order, so "
    "k + 1 is a prime power", (THORNTON, HUPPERT_BLACKBURN))
ORBIT_T_K = Reference(
    "X X = (k-1)X + kX* is realized by the Galois orbit ring of F_q under "
    "the squares (F_q^x)^2 iff 4k - 1 = q is an odd power of an odd prime",
    (THORNTON,))
RANK2_GENERAL = Reference(
    "X^2 = a·1 + bX is categorifiable iff a = b = 1 (Yang-Lee), or "
    "a = p^{2m}(p^n - 1) and b = p^m(p^n - 2) for a prime p, m >= 0 and "
    "n >= 1", (OSTRIK, THORNTON))


class Answer(enum.Enum):
    YES = "yes"
    NO = "no"


@dataclass(frozen=True)
class Witness:
    """Data realizing a Yes verdict; unused fields stay None."""
    p: Optional[int] = None
    n: Optional[int] = None
    m: Optional[int] = None
    algebras: Tuple[object, ...] = ()
    sign: Optional[int] = None
    omega_class: Optional[int] = None
    omega_choices: Optional[int] = None
    note: Optional[str] = None

    def to_json(self):
        out = {}
        for name in ("p", "n", "m", "sign", "omega_class", "omega_choices",
                     "note"):
            value = getattr(self, name)
            if value is not None:
                out[name] = value
        if self.algebras:
            out["algebras"] = [a.to_json() for a in self.algebras]
        return out


@dataclass(frozen=True)
class Verdict:
    answer: Answer
    witnesses: Tuple[Witness, ...] = ()
    obstruction: Optional[str] = None
    paper_ref: str = ""
    notes: Tuple[str, ...] = field(default=())

    def __post_init__(self):
        if self.answer is Answer.NO and not self.obstruction:
            raise FusionDescentError("a No verdict needs an obstruction")

    @property
    def is_yes(self):
        return self.answer is Answer.YES

    def to_json(self):
        return {
            "answer": self.answer.value,
            "witnesses": [w.to_json() for w in self.witnesses],
            "obstruction": self.obstruction,
            "paper_ref": self.paper_ref,
            "notes": list(self.notes),
        }


def _yes(witnesses, references, notes=()):
    return Verdict(Answer.YES, tuple(witnesses), None, _cite_all(references),
                   tuple(notes))


def _no(obstruction, references, notes=()):
    return Verdict(Answer.NO, (), obstruction, _cite_all(references),
                   tuple(notes))


def _cite_all(references):
    if isinstance(references, Reference):
        references = (references,)
    return "; ".join(str(r) for r in references)


def _check_positive(value, name, minimum=1):
    if isinstance(value, bool) or not isinstance(value, int) or value < minimum:
        raise InputError(f"{name} must be an integer >= {minimum}, got {value!r}")


def _power_exponent(x, p):
    """n with x = p^n (n >= 1), else None."""
    if x < 2:
        return None
    witness = prime_power(x)
    if witness is None or witness.p != p:
        return None
    return witness.n


def _check_division(q, K):
    if K.kind is FieldKind.RATIONAL:
        ok = quaternion_is_division(q)
    else:
        ok = not splits_over(q, K)
    if not ok:
        raise FusionDescentError(f"{q} is not a division algebra over {K}")
    return q


def categorify_R_m(m, K):
    """The ring with X^2 = m 1 over the ground field K."""
    _check_positive(m, "m")
    if m == 1:
        witnesses = [Witness(omega_class=0, note="Vec_Z/2(K)")]
        if K.characteristic != 2:
            witnesses.append(Witness(omega_class=1, note="Vec_Z/2^omega(K)"))
        return _yes(witnesses, RANK2_POINTED)

    exponent = _power_exponent(m, 2)
    if exponent is None or exponent % 2:
        return _no(f"m = {m} is not a power of 4: End(X) must be a division "
                   f"algebra of degree sqrt(m) and exponent 2, and "
                   f"{BRAUER_DIMENSIONS.fact}", (RANK2_POINTED, BRAUER_DIMENSIONS))
    n = exponent // 2

    if K.kind in (FieldKind.FINITE, FieldKind.ALG_CLOSED_CHAR0):
        return _no(f"Br({K}) is trivial, so only m = 1 is realized",
                   RANK2_POINTED)
    if K.kind is FieldKind.FUNCTION_FIELD:
        if n > K.pairs:
            raise UnsupportedFieldError(
                f"m = 4^{n} over {K}: needs {n} generic quaternion pairs, "
                f"only {K.pairs} available")
        algebras = generic_symbols(n)
        return _yes([Witness(p=2, n=n, algebras=algebras, sign=s,
                             note="tensor product of generic quaternion "
                                  "algebras")
                     for s in (1, -1)], (RANK2_POINTED, TENSOR_OF_GENERIC))
    if n >= 2:
        return _no(f"m = 4^{n}: over {K} every Brauer class of exponent 2 "
                   f"is a quaternion class, so End(X) has degree at most 2",
                   RANK2_POINTED)
    q = _check_division(division_quaternion(K), K)
    return _yes([Witness(p=2, n=1, algebras=(q,), sign=s,
                         note="End(1)=K, End(X)=" + str(q) + ", X⊗X=4·1")
                 for s in (1, -1)], RANK2_POINTED)


def _max_pointed_exponent(p, K):
    """Largest n with a division algebra of degree p^n and exponent p."""
    if K.kind is FieldKind.FUNCTION_FIELD:
        return K.pairs
    if K.kind in (FieldKind.FINITE, FieldKind.ALG_CLOSED_CHAR0, FieldKind.REAL):
        return 0
    return 1


def categorify_R_pr(p, r, K):
    """X_i X_j = r X_{i+j} on Z/p, over K containing zeta_p."""
    if isinstance(p, bool) or not isinstance(p, int) or not is_prime(p):
        raise InputError(f"p must be prime, got {p!r}")
    _check_positive(r, "r")
    if p == 2:
        # R_{2,r} is R_{r^2}
        return categorify_R_m(r * r, K)
    notes = []
    if not K.contains_roots_of_unity(p):
        notes.append(f"assumes a primitive {p}-th root of unity in {K}")

    if r == 1:
        return _yes([Witness(p=p, n=0, omega_choices=p,
                             note=f"Vec_Z/{p}^omega(K), omega in Z/{p}")],
                    POINTED_PRIME, notes)
    n = _power_exponent(r, p)
    if n is None:
        return _no(f"r = {r} is not a power of {p}: End(X_i) must have "
                   f"degree r and exponent {p}, and {BRAUER_DIMENSIONS.fact}",
                   (POINTED_PRIME, BRAUER_DIMENSIONS), notes)
    top = _max_pointed_exponent(p, K)
    if n > top:
        if K.kind is FieldKind.FUNCTION_FIELD:
            raise UnsupportedFieldError(
                f"r = {p}^{n} over {K}: needs {n} generic pairs, "
                f"only {K.pairs} available")
        reason = {
            FieldKind.REAL: f"Br(ℝ) has no {p}-torsion",
            FieldKind.FINITE: f"Br({K}) is trivial",
            FieldKind.ALG_CLOSED_CHAR0: f"Br({K}) is trivial",
        }.get(K.kind, f"classes of exponent {p} over {K} have index {p}")
        return _no(f"r = {p}^{n}: {reason}", POINTED_PRIME, notes)

    if K.kind is FieldKind.FUNCTION_FIELD:
        algebras = generic_symbols(n, p)
        references = (POINTED_PRIME, TENSOR_OF_GENERIC)
    else:
        algebras = (CyclicSymbol(Symbol("a"), Symbol("b"), p),)
        references = (POINTED_PRIME,)
    return _yes([Witness(p=p, n=n, algebras=algebras, omega_choices=p,
                         note=f"cyclic division algebra of degree {p} "
                              f"as End(X_i)")],
                references, notes)


def categorify_S_k(k):
    """X^2 = k 1 + (k-1) X, over a suitable field."""
    _check_positive(k, "k")
    witness = prime_power(k + 1)
    if witness is None:
        return _no(f"k + 1 = {k + 1} is not a prime power", NEAR_GROUP)
    return _yes([Witness(p=witness.p, n=witness.n,
                         note=f"V = F_{witness.p}^{witness.n}: the {k} "
                              f"non-zero vectors form the non-trivial orbit")],
                NEAR_GROUP)


def categorify_T_k(k):
    """X X = (k-1) X + k X*, over a suitable field."""
    _check_positive(k, "k")
    q = 4 * k - 1
    witness = odd_prime_power(q)
    if witness is None:
        return _no(f"4k - 1 = {q} is not an odd power of an odd prime",
                   ORBIT_T_K)
    return _yes([Witness(p=witness.p, n=witness.n,
                         note=f"q = {q}, Gamma = (F_{q}^x)^2 of order "
                              f"{2 * k - 1}")], ORBIT_T_K)


def _sab_solutions(a, b):
    """
    All (p, m, n) with a = p^{2m}(p^n - 1), b = p^m(p^n - 2). For m = 0
    p^n = a + 1 is determined by a; for m >= 1 p^{2m} divides a, so p
    runs over the prime factors of a.
    """
    found = []
    witness = prime_power(a + 1)
    if witness is not None and b == witness.value - 2:
        found.append((witness.p, 0, witness.n))
    for p, e in factorize(a).items():
        for m in range(1, e // 2 + 1):
            rest = a // p ** (2 * m) + 1
            n = _power_exponent(rest, p)
            if n is not None and b == p ** m * (p ** n - 2):
                found.append((p, m, n))
    return sorted(found)


def categorify_S_ab(a, b):
    """X^2 = a 1 + b X, over a suitable field of characteristic zero."""
    _check_positive(a, "a")
    _check_positive(b, "b", minimum=0)
    if (a, b) == (1, 1):
        return _yes([Witness(note="Yang-Lee category")], RANK2_GENERAL)
    solutions = _sab_solutions(a, b)
    log.debug(f"S_({a},{b}): {len(solutions)} solutions")
    if not solutions:
        return _no(f"no prime p and m >= 0, n >= 1 give a = {a}, b = {b}",
                   RANK2_GENERAL)
    return _yes([Witness(p=p, m=m, n=n,
                         note=f"ℓ = {p ** m}, orbit size {p ** n - 1}")
                 for p, m, n in solutions], RANK2_GENERAL)


def categorify(family, params, K=None):
    """Dispatch on the family name used by the command line."""
    try:
        if family == "r-m":
            return categorify_R_m(params["m"], _field(K))
        if family == "r-pr":
            return categorify_R_pr(params["p"], params["r"], _field(K))
        if family == "s-k":
            return categorify_S_k(params["k"])
        if family == "t-k":
            return categorify_T_k(params["k"])
        if family == "s-ab":
            return categorify_S_ab(params["a"], params["b"])
    except KeyError as e:
        raise InputError(f"family {family} needs parameter {e}") from None
    raise InputError(f"unknown family '{family}'")


def _field(K):
    if K is None:
        raise InputError("this family needs a ground field (--field)")
    return K

