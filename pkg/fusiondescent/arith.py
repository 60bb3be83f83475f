# -*- coding: utf-8 -*-
# Distributed under the MIT License (https://opensource.org/licenses/MIT)

"""
Number-theoretic primitives: primality, prime powers, Fermat primes,
Gauss numbers, 2-adic splitting, quadratic residues and square roots in
groups of odd order.
"""

import math
from dataclasses import dataclass

from sympy import factorint, legendre_symbol
from sympy.ntheory import n_order

from fusiondescent.errors import InputError

# Deterministic for every n < 3.3 * 10**24, so for every 64-bit input.
_MILLER_RABIN_WITNESSES = (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37)
_LIMIT = 1 << 64


@dataclass(frozen=True)
class PrimePowerWitness:
    p: int
    n: int

    @property
    def value(self):
        return self.p ** self.n


@dataclass(frozen=True)
class TwoAdicSplit:
    m: int
    r: int

    @property
    def value(self):
        return (1 << self.m) * self.r


def _check_int(x, name="x", minimum=None):
    if isinstance(x, bool) or not isinstance(x, int):
        raise InputError(f"{name} must be an integer, got {x!r}")
    if minimum is not None and x < minimum:
        raise InputError(f"{name} must be >= {minimum}, got {x}")
    if abs(x) >= _LIMIT:
        raise InputError(f"{name} exceeds the 64-bit range")


def _miller_rabin(n, base):
    d = n - 1
    s = 0
    while d % 2 == 0:
        d //= 2
        s += 1
    x = pow(base, d, n)
    if x in (1, n - 1):
        return True
    for _ in range(s - 1):
        x = x * x % n
        if x == n - 1:
            return True
    return False


def is_prime(n):
    """Deterministic Miller-Rabin; inputs of 64 bits or more are rejected."""
    _check_int(n, "n")
    if n < 2:
        return False
    for p in _MILLER_RABIN_WITNESSES:
        if n % p == 0:
            return n == p
    return all(_miller_rabin(n, a) for a in _MILLER_RABIN_WITNESSES)


def factorize(n):
    """Prime factorization of a positive integer as a ``{p: e}`` dict."""
    _check_int(n, "n", 1)
    return {int(p): int(e) for p, e in factorint(n).items()}


def prime_power(x):
    _check_int(x, "x", 2)
    factors = factorize(x)
    if len(factors) != 1:
        return None
    (p, n), = factors.items()
    return PrimePowerWitness(p, n)


def odd_prime_power(x):
    """x = p^n with p an odd prime and n odd, else None."""
    witness = prime_power(x)
    if witness is None or witness.p == 2 or witness.n % 2 == 0:
        return None
    return witness


def two_adic_split(x):
    _check_int(x, "x", 1)
    m = (x & -x).bit_length() - 1
    return TwoAdicSplit(m, x >> m)


def _is_power_of_two(x):
    return x > 0 and x & (x - 1) == 0


def is_fermat_prime(p):
    """Primes of the shape 2^(2^s) + 1."""
    if not is_prime(p) or p == 2:
        return False
    exponent = (p - 1).bit_length() - 1
    return _is_power_of_two(p - 1) and _is_power_of_two(exponent)


def is_gauss_number(n):
    """n = 2^s times a product of distinct Fermat primes."""
    _check_int(n, "n", 1)
    odd = two_adic_split(n).r
    return all(e == 1 and is_fermat_prime(p)
               for p, e in factorize(odd).items())


def euler_phi(n):
    _check_int(n, "n", 1)
    phi = 1
    for p, e in factorize(n).items():
        phi *= (p - 1) * p ** (e - 1)
    return phi


def is_qr(a, p):
    """Whether a is a non-zero square modulo the prime p."""
    _check_int(a, "a")
    if not is_prime(p):
        raise InputError(f"is_qr needs a prime modulus, got {p}")
    if a % p == 0:
        return False
    if p == 2:
        return True
    return legendre_symbol(a % p, p) == 1


def sqrt_hom(g, order):
    """
    Square root in the additive cyclic group Z/order of odd order:
    g -> g * (order + 1) / 2. Twice the result is g, and the map is a
    homomorphism.
    """
    _check_int(order, "order", 1)
    if order % 2 == 0:
        raise InputError(
            f"Z/{order} has even order: no square-root homomorphism")
    return g * ((order + 1) // 2) % order


def unit_sqrt(x, n):
    """
    Square root of a unit x mod n of odd multiplicative order d, taken
    as x^((d+1)/2).
    """
    if math.gcd(x, n) != 1:
        raise InputError(f"{x} is not a unit mod {n}")
    d = n_order(x % n, n)
    if d % 2 == 0:
        raise InputError(f"{x} has even order {d} mod {n}")
    return pow(x, (d + 1) // 2, n)


def units(n):
    _check_int(n, "n", 2)
    return [x for x in range(n) if math.gcd(x, n) == 1]


def generated_subgroup(n, generators):
    """Closure of a list of units mod n under multiplication."""
    _check_int(n, "n", 2)
    gens = [g % n for g in generators]
    for g in gens:
        if math.gcd(g, n) != 1:
            raise InputError(f"{g} is not a unit mod {n}")
    subgroup = {1}
    frontier = [1]
    while frontier:
        x = frontier.pop()
        for g in gens:
            y = x * g % n
            if y not in subgroup:
                subgroup.add(y)
                frontier.append(y)
    return sorted(subgroup)


def odd_part_subgroup(n):
    """The elements of odd order in (Z/n)^x, sorted."""
    _check_int(n, "n", 2)
    return [x for x in units(n) if n == 2 or n_order(x, n) % 2 == 1]


def invariant_factors_from_orders(orders):
    """
    Rewrite a direct sum of cyclic groups Z/o_1 + ... + Z/o_t as its
    invariant-factor chain d_1 | d_2 | ... (trivial summands dropped).
    """
    primary = {}
    for o in orders:
        if o < 1:
            raise InputError(f"cyclic order must be positive, got {o}")
        for p, e in factorize(o).items():
            primary.setdefault(p, []).append(p ** e)
    width = max((len(v) for v in primary.values()), default=0)
    factors = [1] * width
    for powers in primary.values():
        powers.sort(reverse=True)
        for i, q in enumerate(powers):
            factors[i] *= q
    return tuple(sorted(factors))
