# -*- coding: utf-8 -*-
# Distributed under the MIT License (https://opensource.org/licenses/MIT)

"""
Weak unital based rings: the structure-constant tensor, axiom checks,
the rank 2 and pointed families, Frobenius-Perron dimensions and Galois
orbit rings.
"""

import enum
import itertools
import logging
from dataclasses import dataclass, field
from typing import List, Optional, Tuple

import numpy as np
from sympy import Matrix, Poly, eye, symbols

from fusiondescent.arith import generated_subgroup, is_prime
from fusiondescent.cohomology import FiniteAbelianGroup
from fusiondescent.errors import FusionDescentError, InputError, StructureError

log = logging.getLogger(__name__)


class Strength(enum.Enum):
    WEAK = "weak"
    STRICT = "strict"


@dataclass(frozen=True)
class BasedRing:
    """
    A finite-rank ring with distinguished basis b_0..b_{rank-1}, where
    b_i b_j = sum_k N[i][j][k] b_k. Construction does not validate the
    axioms; call verify_based_ring() for that.
    """
    rank: int
    unit_index: int
    involution: Tuple[int, ...]
    N: Tuple[Tuple[Tuple[int, ...], ...], ...]
    labels: Optional[Tuple[str, ...]] = None

    def label(self, i):
        if self.labels is not None and 0 <= i < len(self.labels):
            return self.labels[i]
        return f"b{i}"

    def same_tensor(self, other):
        """Equality of rank, unit, involution and structure constants."""
        return (self.rank == other.rank
                and self.unit_index == other.unit_index
                and self.involution == other.involution
                and self.N == other.N)

    def to_json(self):
        return {
            "rank": self.rank,
            "unit": self.unit_index,
            "involution": list(self.involution),
            "N": [[list(row) for row in plane] for plane in self.N],
            "labels": list(self.labels) if self.labels is not None else None,
        }

    @classmethod
    def from_json(cls, payload):
        try:
            rank = int(payload["rank"])
            ring = cls(
                rank=rank,
                unit_index=int(payload.get("unit", 0)),
                involution=tuple(int(i) for i in payload["involution"]),
                N=tuple(tuple(tuple(int(x) for x in row) for row in plane)
                        for plane in payload["N"]),
                labels=(tuple(str(s) for s in payload["labels"])
                        if payload.get("labels") is not None else None),
            )
        except (KeyError, TypeError, ValueError) as e:
            raise StructureError(f"malformed ring payload: {e}") from None
        _check_shape(ring)
        return ring


@dataclass(frozen=True)
class Violation:
    axiom: str
    detail: str

    def __str__(self):
        return f"{self.axiom}: {self.detail}"


@dataclass
class ValidationReport:
    strength: Strength
    violations: List[Violation] = field(default_factory=list)

    @property
    def valid(self):
        return not self.violations

    def add(self, axiom, detail):
        self.violations.append(Violation(axiom, detail))

    def to_json(self):
        return {
            "strength": self.strength.value,
            "valid": self.valid,
            "violations": [{"axiom": v.axiom, "detail": v.detail}
                           for v in self.violations],
        }


def _check_shape(R):
    if R.rank < 1:
        raise StructureError(f"rank must be positive, got {R.rank}")
    if not 0 <= R.unit_index < R.rank:
        raise StructureError(f"unit index {R.unit_index} out of range")
    if len(R.involution) != R.rank:
        raise StructureError(
            f"involution has {len(R.involution)} entries, rank is {R.rank}")
    if any(not 0 <= i < R.rank for i in R.involution):
        raise StructureError("involution maps outside the basis")
    if len(R.N) != R.rank or any(
            len(plane) != R.rank or any(len(row) != R.rank for row in plane)
            for plane in R.N):
        raise StructureError(f"N must be a {R.rank}x{R.rank}x{R.rank} tensor")
    if R.labels is not None and len(R.labels) != R.rank:
        raise StructureError("labels do not match the rank")


def _tensor(R):
    return np.array(R.N, dtype=object).reshape((R.rank,) * 3)


def verify_based_ring(R, strength=Strength.WEAK):
    """
    Check every weak based ring axiom and report all failures. With
    strength=strict the unit coefficient of b_i b_i* must be exactly 1.
    """
    strength = Strength(strength)
    _check_shape(R)
    report = ValidationReport(strength)
    n, u, star = R.rank, R.unit_index, R.involution
    name = R.label

    for i, j, k in itertools.product(range(n), repeat=3):
        if R.N[i][j][k] < 0:
            report.add("nonnegativity",
                       f"N[{name(i)}][{name(j)}][{name(k)}]={R.N[i][j][k]}")

    for j, k in itertools.product(range(n), repeat=2):
        expected = int(j == k)
        if R.N[u][j][k] != expected:
            report.add("unit", f"N[{name(u)}][{name(j)}][{name(k)}]="
                               f"{R.N[u][j][k]}≠{expected}")
        if R.N[j][u][k] != expected:
            report.add("unit", f"N[{name(j)}][{name(u)}][{name(k)}]="
                               f"{R.N[j][u][k]}≠{expected}")

    if sorted(star) != list(range(n)):
        report.add("involution", "not a permutation of the basis")
    else:
        for i in range(n):
            if star[star[i]] != i:
                report.add("involution", f"({name(i)}*)* ≠ {name(i)}")
        if star[u] != u:
            report.add("involution", f"{name(u)}* ≠ {name(u)}")
        for i, j, k in itertools.product(range(n), repeat=3):
            mirrored = R.N[star[j]][star[i]][star[k]]
            if R.N[i][j][k] != mirrored:
                report.add("anti-involution",
                           f"N[{name(i)}][{name(j)}][{name(k)}]="
                           f"{R.N[i][j][k]}≠{mirrored}")

    for i, j in itertools.product(range(n), repeat=2):
        c = R.N[i][j][u]
        if j != star[i] and c != 0:
            report.add("unit coefficient",
                       f"N[{name(i)}][{name(j)}][{name(u)}]={c}≠0")
        if j == star[i]:
            if c < 1:
                report.add("unit coefficient",
                           f"N[{name(i)}][{name(j)}][{name(u)}]={c}<1")
            elif strength is Strength.STRICT and c != 1:
                report.add("fusion",
                           f"N[{name(i)}][{name(j)}][{name(u)}]={c}≠1")

    A = _tensor(R)
    left = np.tensordot(A, A, axes=([2], [0]))
    right = np.tensordot(A, A, axes=([2], [1])).transpose(2, 0, 1, 3)
    for i, j, k, l in np.argwhere(left != right):
        report.add("associativity",
                   f"(b_{name(i)} b_{name(j)}) b_{name(k)} and "
                   f"b_{name(i)} (b_{name(j)} b_{name(k)}) differ at "
                   f"{name(l)}: {left[i, j, k, l]} vs {right[i, j, k, l]}")

    log.debug(f"verified rank {n} ring ({strength.value}): "
              f"{len(report.violations)} violations")
    return report


def multiply(R, x, y):
    """Product of two elements given as coefficient vectors."""
    out = [0] * R.rank
    for i, a in enumerate(x):
        if not a:
            continue
        for j, b in enumerate(y):
            if not b:
                continue
            for k, c in enumerate(R.N[i][j]):
                out[k] += a * b * c
    return out


def basis_vector(R, i):
    return [int(k == i) for k in range(R.rank)]


def is_commutative(R):
    return all(R.N[i][j] == R.N[j][i]
               for i, j in itertools.combinations(range(R.rank), 2))


def _from_products(labels, involution, products, unit=0):
    """
    Build a ring from the non-unit products; products[(i, j)] maps basis
    indices to coefficients. Unit products are filled in.
    """
    n = len(labels)
    N = [[[0] * n for _ in range(n)] for _ in range(n)]
    for j in range(n):
        N[unit][j][j] = 1
        N[j][unit][j] = 1
    for (i, j), terms in products.items():
        for k, c in terms.items():
            N[i][j][k] += c
    return BasedRing(
        rank=n, unit_index=unit, involution=tuple(involution),
        N=tuple(tuple(tuple(row) for row in plane) for plane in N),
        labels=tuple(labels))


def _positive(value, name, minimum=1):
    if isinstance(value, bool) or not isinstance(value, int) or value < minimum:
        raise InputError(f"{name} must be an integer >= {minimum}, got {value!r}")


def construct_R_m(m):
    """Basis 1, X with X^2 = m 1 and X* = X."""
    _positive(m, "m")
    return _from_products(("1", "X"), (0, 1), {(1, 1): {0: m}})


def construct_R_pr(p, r):
    """
    Basis 1 = X_0 and X_i for i in F_p^x with X_i* = X_{-i},
    X_i X_j = r X_{i+j} when i + j != 0, and X_i X_{-i} = r^2 1.
    """
    _positive(r, "r")
    if isinstance(p, bool) or not isinstance(p, int) or not is_prime(p):
        raise InputError(f"p must be prime, got {p!r}")
    labels = ("1",) + tuple(f"X{i}" for i in range(1, p))
    involution = tuple((-i) % p for i in range(p))
    products = {}
    for i, j in itertools.product(range(1, p), repeat=2):
        s = (i + j) % p
        products[(i, j)] = {0: r * r} if s == 0 else {s: r}
    return _from_products(labels, involution, products)


def construct_S_ab(a, b):
    """Basis 1, X with X^2 = a 1 + b X and X* = X."""
    _positive(a, "a")
    _positive(b, "b", minimum=0)
    return _from_products(("1", "X"), (0, 1), {(1, 1): {0: a, 1: b}})


def construct_S_k(k):
    """X^2 = k 1 + (k-1) X."""
    _positive(k, "k")
    return _from_products(("1", "X"), (0, 1), {(1, 1): {0: k, 1: k - 1}})


def construct_T_k(k):
    """
    Basis 1, X, X* with X X = (k-1) X + k X* and
    X X* = X* X = (2k-1) 1 + (k-1)(X + X*).
    """
    _positive(k, "k")
    return _from_products(("1", "X", "X*"), (0, 2, 1), {
        (1, 1): {1: k - 1, 2: k},
        (2, 2): {1: k, 2: k - 1},
        (1, 2): {0: 2 * k - 1, 1: k - 1, 2: k - 1},
        (2, 1): {0: 2 * k - 1, 1: k - 1, 2: k - 1},
    })


def cyclic_group_ring(n):
    """The group ring Z[Z/n] with basis X0..X{n-1}."""
    _positive(n, "n")
    labels = tuple(f"X{i}" for i in range(n))
    involution = tuple((-i) % n for i in range(n))
    products = {(i, j): {(i + j) % n: 1}
                for i, j in itertools.product(range(1, n), repeat=2)}
    return _from_products(labels, involution, products)


FAMILIES = {
    "r-m": (construct_R_m, ("m",)),
    "r-pr": (construct_R_pr, ("p", "r")),
    "s-k": (construct_S_k, ("k",)),
    "t-k": (construct_T_k, ("k",)),
    "s-ab": (construct_S_ab, ("a", "b")),
}


def fusion_matrix(R, element):
    """
    The matrix (N_x)_{jk} of left multiplication by x, where x is a basis
    index or a coefficient vector.
    """
    if isinstance(element, int):
        if not 0 <= element < R.rank:
            raise InputError(f"basis index {element} out of range")
        coefficients = basis_vector(R, element)
    else:
        coefficients = [int(c) for c in element]
        if len(coefficients) != R.rank:
            raise StructureError("element length does not match the rank")
    A = _tensor(R)
    return np.tensordot(np.array(coefficients, dtype=object), A, axes=(0, 0))


@dataclass(frozen=True)
class FrobeniusPerronDimension:
    """
    ``exact`` holds the dimension when it is an integer, ``value`` and
    ``error`` always bound it: |FPdim - value| <= error.
    """
    value: float
    error: float
    exact: Optional[int] = None

    def to_json(self):
        if self.exact is not None:
            return {"exact": self.exact, "value": float(self.exact),
                    "error": 0.0}
        return {"exact": None, "value": self.value, "error": self.error}


def _collatz_wielandt(matrix, tolerance, max_iterations):
    """
    Power iteration on M + I. For a positive vector v the ratios
    (Mv)_i / v_i bracket the Perron-Frobenius eigenvalue of M.
    """
    M = np.array(matrix, dtype=float)
    shifted = M + np.eye(M.shape[0])
    v = np.ones(M.shape[0])
    low, high = 0.0, float(M.sum(axis=1).max())
    for iteration in range(max_iterations):
        w = shifted @ v
        ratios = w / v - 1.0
        low, high = max(low, float(ratios.min())), min(high, float(ratios.max()))
        if high - low <= tolerance * max(1.0, high):
            break
        v = w / w.max()
    log.debug(f"power iteration stopped after {iteration + 1} steps: "
              f"[{low}, {high}]")
    return (low + high) / 2, (high - low) / 2


def _integer_eigenvalues(matrix):
    lam = symbols("lam")
    poly = Poly(matrix.charpoly(lam).as_expr(), lam)
    roots = set()
    for factor, _ in poly.factor_list()[1]:
        if factor.degree() == 1:
            a, b = factor.all_coeffs()
            if b % a == 0:
                roots.add(int(-b // a))
    return sorted((d for d in roots if d >= 0), reverse=True)


def _has_nonnegative_eigenvector(matrix, d):
    for v in (matrix - d * eye(matrix.rows)).nullspace():
        if all(x >= 0 for x in v) or all(x <= 0 for x in v):
            return True
    return False


def fp_dim(R, element, tolerance=1e-12,
           max_iterations=100000):
    """
    Frobenius-Perron dimension of a basis element (index) or of an
    element given by its coefficients.
    """
    matrix = fusion_matrix(R, element)
    value, error = _collatz_wielandt(matrix, tolerance, max_iterations)
    exact = Matrix(matrix.tolist())
    for d in _integer_eigenvalues(exact):
        if abs(d - value) <= max(error, 1e-9) + 1e-6 * max(1.0, value) \
                and _has_nonnegative_eigenvector(exact, d):
            return FrobeniusPerronDimension(float(d), 0.0, d)
    return FrobeniusPerronDimension(value, error)


@dataclass(frozen=True)
class BasisAction:
    """
    A group acting on the basis of a ring by based-ring automorphisms,
    given by one permutation per generator. ``group`` records the
    generators' cyclic orders when the group is abelian.
    """
    perms: Tuple[Tuple[int, ...], ...]
    group: Optional[FiniteAbelianGroup] = None

    def validate(self, R):
        n = R.rank
        for g, perm in enumerate(self.perms):
            if sorted(perm) != list(range(n)):
                raise InputError(f"generator {g} is not a permutation")
            if perm[R.unit_index] != R.unit_index:
                raise InputError(f"generator {g} moves the unit")
            if any(perm[R.involution[i]] != R.involution[perm[i]]
                   for i in range(n)):
                raise InputError(f"generator {g} does not commute with *")
            if any(R.N[perm[i]][perm[j]][perm[k]] != R.N[i][j][k]
                   for i, j, k in itertools.product(range(n), repeat=3)):
                raise InputError(f"generator {g} does not preserve N")
        if self.group is not None:
            if len(self.group.cyclic_orders) != len(self.perms):
                raise InputError("one permutation per group generator needed")
            for g, (perm, order) in enumerate(
                    zip(self.perms, self.group.cyclic_orders)):
                if _perm_power(perm, order) != tuple(range(n)):
                    raise InputError(
                        f"generator {g} does not have order dividing {order}")
            for p, q in itertools.combinations(self.perms, 2):
                if tuple(p[q[i]] for i in range(n)) != \
                        tuple(q[p[i]] for i in range(n)):
                    raise InputError("generators do not commute")

    def orbits(self, n):
        seen = {}
        orbits = []
        for start in range(n):
            if start in seen:
                continue
            orbit = {start}
            frontier = [start]
            while frontier:
                x = frontier.pop()
                for perm in self.perms:
                    y = perm[x]
                    if y not in orbit:
                        orbit.add(y)
                        frontier.append(y)
            for x in orbit:
                seen[x] = len(orbits)
            orbits.append(tuple(sorted(orbit)))
        return orbits


def _perm_power(perm, e):
    result = tuple(range(len(perm)))
    for _ in range(e):
        result = tuple(perm[i] for i in result)
    return result


def orbit_ring_from_action(R, action):
    """
    The ring spanned by the orbit sums of a group of basis automorphisms.
    Orbit-sum coefficients are computed against every representative of
    the target orbit and must agree.
    """
    action.validate(R)
    orbits = action.orbits(R.rank)
    where = {x: a for a, orbit in enumerate(orbits) for x in orbit}
    size = len(orbits)
    N = [[[0] * size for _ in range(size)] for _ in range(size)]
    for A, B, C in itertools.product(range(size), repeat=3):
        counts = {sum(R.N[a][b][c] for a in orbits[A] for b in orbits[B])
                  for c in orbits[C]}
        if len(counts) != 1:
            raise FusionDescentError(
                f"orbit sums are not closed at {orbits[A]}, {orbits[B]}, "
                f"{orbits[C]}: {sorted(counts)}")
        N[A][B][C] = counts.pop()
    involution = tuple(where[R.involution[orbit[0]]] for orbit in orbits)
    return BasedRing(
        rank=size, unit_index=where[R.unit_index], involution=involution,
        N=tuple(tuple(tuple(row) for row in plane) for plane in N),
        labels=tuple(f"Y{orbit[0]}" for orbit in orbits))


def orbit_ring(n, subgroup):
    """
    Galois orbit ring of Z[Z/n] under multiplication by a subgroup H of
    (Z/n)^x, given by its elements. Basis elements are the H-orbits,
    labelled Y<smallest member>.
    """
    _positive(n, "n", minimum=2)
    elements = sorted({h % n for h in subgroup})
    if not elements:
        raise InputError("the subgroup must be non-empty")
    if generated_subgroup(n, elements) != elements:
        raise InputError(
            f"{elements} is not closed under multiplication mod {n}")
    perms = tuple(tuple(h * x % n for x in range(n)) for h in elements)
    orbits = BasisAction(perms).orbits(n)
    where = np.empty(n, dtype=np.int64)
    for index, orbit in enumerate(orbits):
        where[list(orbit)] = index
    reps = np.array([orbit[0] for orbit in orbits], dtype=np.int64)
    rep_of = reps[where]
    members = [np.array(orbit, dtype=np.int64) for orbit in orbits]

    size = len(orbits)
    N = [[None] * size for _ in range(size)]
    for A, B in itertools.product(range(size), repeat=2):
        sums = (members[A][:, None] + members[B][None, :]).ravel() % n
        counts = np.bincount(sums, minlength=n)
        if (counts != counts[rep_of]).any():
            raise FusionDescentError(
                f"orbit sums are not closed at {orbits[A]}, {orbits[B]}")
        N[A][B] = tuple(int(c) for c in counts[reps])
    log.debug(f"orbit ring of Z/{n} under {elements}: rank {size}")
    return BasedRing(
        rank=size, unit_index=int(where[0]),
        involution=tuple(int(where[(-r) % n]) for r in reps),
        N=tuple(tuple(plane) for plane in N),
        labels=tuple(f"Y{r}" for r in reps))


def find_isomorphism(R, S):
    """
    A relabeling sigma with S.N[sigma i][sigma j][sigma k] = R.N[i][j][k],
    found by exhaustive search (small ranks only).
    """
    if R.rank != S.rank:
        return None
    rest = [i for i in range(R.rank) if i != R.unit_index]
    targets = [i for i in range(S.rank) if i != S.unit_index]
    for image in itertools.permutations(targets):
        sigma = [0] * R.rank
        sigma[R.unit_index] = S.unit_index
        for i, j in zip(rest, image):
            sigma[i] = j
        if all(S.involution[sigma[i]] == sigma[R.involution[i]]
               for i in range(R.rank)) and all(
                S.N[sigma[i]][sigma[j]][sigma[k]] == R.N[i][j][k]
                for i, j, k in itertools.product(range(R.rank), repeat=3)):
            return tuple(sigma)
    return None
