# -*- coding: utf-8 -*-
# Distributed under the MIT License (https://opensource.org/licenses/MIT)

"""
Symbolic ground fields. No field arithmetic happens anywhere in the
package: every decision only needs to know which class of field it is
working over, its characteristic and which roots of unity it holds.
"""

import enum
from dataclasses import dataclass, field
from typing import Tuple

from fusiondescent.arith import is_prime, prime_power
from fusiondescent.errors import InputError


class FieldKind(enum.Enum):
    REAL = "real"
    RATIONAL = "Q"
    PADIC = "Qp"
    FINITE = "Fq"
    ALG_CLOSED_CHAR0 = "algclosed0"
    FUNCTION_FIELD = "funcfield"


@dataclass(frozen=True)
class FieldClass:
    """
    A ground field descriptor.

    ``prime`` is the residue characteristic of a p-adic field, ``order``
    the size of a finite field and ``pairs`` the number k of variable
    pairs of the function field C(a_1..a_k, b_1..b_k). ``assumed_roots``
    lists orders of roots of unity the caller asserts are in the field.
    """
    kind: FieldKind
    prime: int = 0
    order: int = 0
    pairs: int = 0
    assumed_roots: Tuple[int, ...] = field(default=())

    def __post_init__(self):
        if self.kind is FieldKind.PADIC and not is_prime(self.prime):
            raise InputError(f"Qp needs a prime, got {self.prime}")
        if self.kind is FieldKind.FINITE:
            if self.order < 2 or prime_power(self.order) is None:
                raise InputError(
                    f"Fq needs a prime power order, got {self.order}")
        if self.kind is FieldKind.FUNCTION_FIELD and self.pairs < 1:
            raise InputError("funcfield needs at least one variable pair")

    @classmethod
    def real(cls):
        return cls(FieldKind.REAL)

    @classmethod
    def rational(cls, assumed_roots=()):
        return cls(FieldKind.RATIONAL, assumed_roots=tuple(assumed_roots))

    @classmethod
    def padic(cls, p):
        return cls(FieldKind.PADIC, prime=p)

    @classmethod
    def finite(cls, q):
        return cls(FieldKind.FINITE, order=q)

    @classmethod
    def algebraically_closed(cls):
        return cls(FieldKind.ALG_CLOSED_CHAR0)

    @classmethod
    def function_field(cls, pairs):
        return cls(FieldKind.FUNCTION_FIELD, pairs=pairs)

    @classmethod
    def parse(cls, text):
        """
        Parse the flat command-line syntax
        ``real|Q|Qp:<p>|Fq:<q>|algclosed0|funcfield:<k>``, optionally
        followed by ``+zeta<n>`` annotations (``Q+zeta3``).
        """
        base, *annotations = text.strip().split("+")
        roots = []
        for note in annotations:
            if not note.startswith("zeta") or not note[4:].isdigit():
                raise InputError(f"bad field annotation '{note}'")
            roots.append(int(note[4:]))
        name, _, arg = base.partition(":")
        try:
            if name == "real" and not arg:
                made = cls.real()
            elif name == "Q" and not arg:
                made = cls.rational()
            elif name == "Qp":
                made = cls.padic(int(arg))
            elif name == "Fq":
                made = cls.finite(int(arg))
            elif name == "algclosed0" and not arg:
                made = cls.algebraically_closed()
            elif name == "funcfield":
                made = cls.function_field(int(arg))
            else:
                raise InputError(f"unknown field class '{text}'")
        except ValueError:
            raise InputError(f"unknown field class '{text}'") from None
        if roots:
            made = cls(made.kind, made.prime, made.order, made.pairs,
                       tuple(sorted(set(roots))))
        return made

    @property
    def characteristic(self):
        if self.kind is FieldKind.FINITE:
            return prime_power(self.order).p
        return 0

    def contains_roots_of_unity(self, n):
        """
        True when the n-th roots of unity are known (or asserted) to lie
        in the field.
        """
        if n in (1, 2) and self.characteristic != 2:
            return True
        if n in self.assumed_roots:
            return True
        if self.kind in (FieldKind.ALG_CLOSED_CHAR0, FieldKind.FUNCTION_FIELD):
            return True
        if self.kind is FieldKind.FINITE:
            return (self.order - 1) % n == 0
        if self.kind is FieldKind.PADIC:
            # mu_n in Q_p for n prime to p iff n | p - 1
            if n % self.prime == 0:
                return False
            return (self.prime - 1) % n == 0
        return False

    def __str__(self):
        text = {
            FieldKind.REAL: "real",
            FieldKind.RATIONAL: "Q",
            FieldKind.PADIC: f"Qp:{self.prime}",
            FieldKind.FINITE: f"Fq:{self.order}",
            FieldKind.ALG_CLOSED_CHAR0: "algclosed0",
            FieldKind.FUNCTION_FIELD: f"funcfield:{self.pairs}",
        }[self.kind]
        return text + "".join(f"+zeta{n}" for n in self.assumed_roots)
