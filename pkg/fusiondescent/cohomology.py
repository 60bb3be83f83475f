# -*- coding: utf-8 -*-
# Distributed under the MIT License (https://opensource.org/licenses/MIT)

"""
Cohomology of finite abelian groups with coefficients in finite modules.

Cochains of degree k are dense tables over G^k, flattened in row-major
tuple order with the module coordinate varying fastest, and the bar
differential acts on them. Cohomology groups are computed from the
tensor product of the periodic resolutions of the cyclic factors, which
has binomially many generators per degree instead of |G|^k; the bar
complex remains available as a second route. Module values are written
additively. Invariant factors are computed one prime at a time by
elimination over the chain ring Z/p^a, which is where every p-primary
piece of a finite module lives.
"""

import itertools
import logging
import math
import os
from dataclasses import dataclass
from typing import Tuple

import numpy as np
from scipy import sparse
from sympy.ntheory.modular import crt

from fusiondescent.arith import factorize, invariant_factors_from_orders
from fusiondescent.errors import FusionDescentError, InputError, ResourceCapError

log = logging.getLogger(__name__)

CAP_ENVIRONMENT_VARIABLE = "FUSIONDESCENT_COHOMOLOGY_CAP"
DEFAULT_CAP = 10 ** 6
MAX_DEGREE = 3
# entries of a dense matrix handed to elimination
DENSE_LIMIT = 1 << 24
RESOLUTIONS = ("periodic", "bar")


def default_cap():
    """Largest |G|^(k+1) * dim(M) allowed for a degree k computation."""
    raw = os.environ.get(CAP_ENVIRONMENT_VARIABLE)
    if raw is None:
        return DEFAULT_CAP
    try:
        cap = int(raw)
    except ValueError:
        raise InputError(
            f"{CAP_ENVIRONMENT_VARIABLE} must be an integer, got '{raw}'") from None
    if cap < 1:
        raise InputError(f"{CAP_ENVIRONMENT_VARIABLE} must be positive")
    return cap


@dataclass(frozen=True)
class FiniteAbelianGroup:
    """Direct product of cyclic groups; elements are residue tuples."""
    cyclic_orders: Tuple[int, ...]

    def __post_init__(self):
        object.__setattr__(self, "cyclic_orders",
                           tuple(int(o) for o in self.cyclic_orders))
        if any(o < 2 for o in self.cyclic_orders):
            raise InputError(
                f"cyclic orders must be >= 2, got {list(self.cyclic_orders)}")

    @classmethod
    def cyclic(cls, n):
        return cls((n,))

    @property
    def order(self):
        return math.prod(self.cyclic_orders)

    @property
    def rank(self):
        return len(self.cyclic_orders)

    def elements(self):
        return list(itertools.product(*(range(o) for o in self.cyclic_orders)))

    def index(self, element):
        if not self.cyclic_orders:
            return 0
        return int(np.ravel_multi_index(
            tuple(e % o for e, o in zip(element, self.cyclic_orders)),
            self.cyclic_orders))

    def addition_table(self):
        """add[x, y] is the index of element x + element y."""
        if not self.cyclic_orders:
            return np.zeros((1, 1), dtype=np.int64)
        coords = np.array(np.unravel_index(np.arange(self.order),
                                           self.cyclic_orders))
        orders = np.array(self.cyclic_orders)[:, None, None]
        summed = (coords[:, :, None] + coords[:, None, :]) % orders
        return np.ravel_multi_index(tuple(summed), self.cyclic_orders)

    def __str__(self):
        if not self.cyclic_orders:
            return "0"
        return " + ".join(f"Z/{o}" for o in self.cyclic_orders)


@dataclass(frozen=True)
class GModule:
    """
    A finite abelian group M = Z/m_1 + ... + Z/m_d with one integer
    matrix per group generator; column j of a matrix is the image of the
    j-th coordinate generator.
    """
    cyclic_orders: Tuple[int, ...]
    action: Tuple[Tuple[Tuple[int, ...], ...], ...] = ()

    def __post_init__(self):
        object.__setattr__(self, "cyclic_orders",
                           tuple(int(o) for o in self.cyclic_orders))
        if not self.cyclic_orders or any(o < 1 for o in self.cyclic_orders):
            raise InputError("module needs at least one positive order")
        object.__setattr__(self, "action", tuple(
            tuple(tuple(int(x) for x in row) for row in matrix)
            for matrix in self.action))

    @classmethod
    def trivial(cls, group, orders):
        d = len(orders)
        identity = tuple(tuple(int(i == j) for j in range(d)) for i in range(d))
        return cls(tuple(orders), (identity,) * group.rank)

    @property
    def dim(self):
        return len(self.cyclic_orders)

    @property
    def order(self):
        return math.prod(self.cyclic_orders)

    @property
    def exponent(self):
        return math.lcm(*self.cyclic_orders) if self.cyclic_orders else 1

    def _reduce(self, matrix):
        orders = np.array(self.cyclic_orders, dtype=object)[:, None]
        return np.array(matrix, dtype=object).reshape(self.dim, self.dim) % orders

    def _multiply(self, x, y):
        return self._reduce(np.dot(x, y))

    def validate(self, group):
        if len(self.action) != group.rank:
            raise InputError(f"need {group.rank} action matrices, "
                             f"got {len(self.action)}")
        orders = self.cyclic_orders
        identity = self._reduce(np.eye(self.dim, dtype=int).astype(object))
        matrices = []
        for g, matrix in enumerate(self.action):
            if len(matrix) != self.dim or any(len(r) != self.dim for r in matrix):
                raise InputError(f"action matrix {g} must be {self.dim}x{self.dim}")
            for i, j in itertools.product(range(self.dim), repeat=2):
                if matrix[i][j] * orders[j] % orders[i]:
                    raise InputError(
                        f"action matrix {g} is not well defined on "
                        f"Z/{orders[j]} -> Z/{orders[i]}")
            A = self._reduce(matrix)
            power = identity
            for _ in range(group.cyclic_orders[g]):
                power = self._multiply(power, A)
            if not (power == identity).all():
                raise InputError(
                    f"generator {g} does not act with order dividing "
                    f"{group.cyclic_orders[g]}")
            matrices.append(A)
        for x, y in itertools.combinations(matrices, 2):
            if not (self._multiply(x, y) == self._multiply(y, x)).all():
                raise InputError("action matrices do not commute")

    def element_actions(self, group):
        """Array of shape (|G|, d, d): the matrix of every group element."""
        self.validate(group)
        generators = [self._reduce(a) for a in self.action]
        identity = self._reduce(np.eye(self.dim, dtype=int).astype(object))
        out = np.zeros((group.order, self.dim, self.dim), dtype=object)
        for index, element in enumerate(group.elements()):
            matrix = identity
            for A, e in zip(generators, element):
                for _ in range(e):
                    matrix = self._multiply(matrix, A)
            out[index] = matrix
        return out

    def to_json(self):
        return {"orders": list(self.cyclic_orders),
                "action": [[list(r) for r in m] for m in self.action]}

    @classmethod
    def from_json(cls, payload, group=None):
        try:
            orders = tuple(int(o) for o in payload["orders"])
            action = payload.get("action")
        except (KeyError, TypeError, ValueError) as e:
            raise InputError(f"malformed module payload: {e}") from None
        if action is None:
            if group is None:
                raise InputError("module action missing")
            return cls.trivial(group, orders)
        return cls(orders, tuple(action))


@dataclass(frozen=True)
class Cochain:
    """
    A function G^degree -> M. ``values`` is flat: entry t * d + i is the
    i-th coordinate at the t-th tuple in row-major order.
    """
    group: FiniteAbelianGroup
    module_orders: Tuple[int, ...]
    degree: int
    values: Tuple[int, ...]

    def __post_init__(self):
        if self.degree < 0:
            raise InputError("cochain degree must be non-negative")
        if not self.module_orders:
            raise InputError("cochain module needs at least one order")
        expected = self.group.order ** self.degree * len(self.module_orders)
        if len(self.values) != expected:
            raise InputError(f"degree {self.degree} cochain needs {expected} "
                             f"values, got {len(self.values)}")
        reduced = np.array(self.values, dtype=object).reshape(
            -1, len(self.module_orders)) % np.array(self.module_orders,
                                                    dtype=object)
        object.__setattr__(self, "values",
                           tuple(int(v) for v in reduced.ravel()))

    @classmethod
    def zero(cls, group, module, degree):
        return cls(group, module.cyclic_orders, degree,
                   (0,) * (group.order ** degree * module.dim))

    @classmethod
    def from_array(cls, group, module_orders, degree, array):
        return cls(group, tuple(module_orders), degree,
                   tuple(int(v) for v in np.asarray(array).ravel()))

    def table(self):
        shape = (self.group.order,) * self.degree + (len(self.module_orders),)
        return np.array(self.values, dtype=np.int64).reshape(shape)

    def __call__(self, *elements):
        t = 0
        for e in elements:
            t = t * self.group.order + self.group.index(e)
        d = len(self.module_orders)
        return self.values[t * d:(t + 1) * d]

    def is_zero(self):
        return not any(self.values)

    def __sub__(self, other):
        if (self.group, self.module_orders, self.degree) != \
                (other.group, other.module_orders, other.degree):
            raise InputError("cochains live in different groups")
        return Cochain(self.group, self.module_orders, self.degree,
                       tuple(a - b for a, b in zip(self.values, other.values)))

    def to_json(self):
        return {"group": list(self.group.cyclic_orders),
                "module": list(self.module_orders),
                "degree": self.degree,
                "values": list(self.values)}

    @classmethod
    def from_json(cls, payload):
        try:
            return cls(FiniteAbelianGroup(tuple(payload["group"])),
                       tuple(int(o) for o in payload["module"]),
                       int(payload["degree"]),
                       tuple(int(v) for v in payload["values"]))
        except (KeyError, TypeError, ValueError) as e:
            raise InputError(f"malformed cochain payload: {e}") from None


@dataclass(frozen=True)
class CohomologyGroup:
    invariant_factors: Tuple[int, ...] = ()

    @property
    def order(self):
        return math.prod(self.invariant_factors)

    @property
    def is_trivial(self):
        return not self.invariant_factors

    def to_json(self):
        return {"invariant_factors": list(self.invariant_factors),
                "order": self.order,
                "description": str(self)}

    def __str__(self):
        if not self.invariant_factors:
            return "0"
        return " + ".join(f"Z/{d}" for d in self.invariant_factors)


def _faces(group, k):
    """
    Index arrays describing the faces of every (k+1)-tuple in row-major
    order: the acting element g_1, the tail (g_2..g_{k+1}), the k merged
    tuples (.., g_i + g_{i+1}, ..) and the head (g_1..g_k), each as a
    row-major index into G^k.
    """
    n = group.order
    rows = np.arange(n ** (k + 1), dtype=np.int64)
    digits = np.array(np.unravel_index(rows, (n,) * (k + 1)))
    add = group.addition_table()
    weights = n ** np.arange(k - 1, -1, -1, dtype=np.int64)
    merged = []
    for i in range(k):
        parts = list(digits[:i]) + [add[digits[i], digits[i + 1]]] + \
            list(digits[i + 2:])
        merged.append(np.dot(weights, np.array(parts)))
    return digits[0], rows % (n ** k), merged, rows // n


def _coordinate_orders(group, module, k):
    return np.tile(np.array(module.cyclic_orders, dtype=np.int64),
                   group.order ** k)


def _check_degree(k, top=MAX_DEGREE):
    if isinstance(k, bool) or not isinstance(k, int) or not 0 <= k <= top:
        raise InputError(f"degree must be in 0..{top}, got {k!r}")


def _check_cap(G, M, k, cap=None):
    cap = default_cap() if cap is None else cap
    size = G.order ** (k + 1) * M.dim
    if size > cap:
        raise ResourceCapError(
            f"degree {k} on |G|={G.order}, dim={M.dim} has size "
            f"|G|^{k + 1}*dim = {size}, cap is {cap}")


def _dense(D):
    rows, cols = D.shape
    if rows * cols > DENSE_LIMIT:
        raise ResourceCapError(
            f"elimination on a {rows}x{cols} matrix exceeds {DENSE_LIMIT} entries")
    return D.toarray() if sparse.issparse(D) else D


def differential(G, M, k, cap=None):
    """
    The bar differential d^k: C^k(G, M) -> C^{k+1}(G, M) as a sparse
    integer matrix with rows indexed by (k+1)-tuple and coordinate,
    (df)(g_1..g_{k+1}) = g_1 f(g_2..) + sum_i (-1)^i f(.., g_i g_{i+1}, ..)
    + (-1)^{k+1} f(g_1..g_k).
    """
    _check_degree(k)
    _check_cap(G, M, k, cap)
    n, d = G.order, M.dim
    rows, cols = n ** (k + 1) * d, n ** k * d
    actions = M.element_actions(G).astype(np.int64)
    acting, tail, merged, head = _faces(G, k)
    coord = np.arange(d)
    tuples = np.arange(n ** (k + 1))

    r = tuples[:, None, None] * d + coord[None, :, None]
    c = tail[:, None, None] * d + coord[None, None, :]
    r, c = np.broadcast_arrays(r, c)
    row_parts, col_parts = [r.ravel()], [c.ravel()]
    data_parts = [actions[acting].ravel()]

    base = (tuples[:, None] * d + coord[None, :]).ravel()
    faces = list(enumerate(merged, start=1)) + [(k + 1, head)]
    for i, face in faces:
        row_parts.append(base)
        col_parts.append((face[:, None] * d + coord).ravel())
        data_parts.append(np.full(base.size, (-1) ** i, dtype=np.int64))
    D = sparse.csr_matrix(
        (np.concatenate(data_parts),
         (np.concatenate(row_parts), np.concatenate(col_parts))),
        shape=(rows, cols), dtype=np.int64)
    log.debug(f"d^{k}: {rows}x{cols} sparse matrix, {D.nnz} entries, |G|={n}")
    return D


def multi_degrees(rank, k):
    """Exponent vectors (j_1..j_rank) with sum k, in lexicographic order."""
    if not rank:
        return [()] if k == 0 else []
    return [j for j in itertools.product(range(k + 1), repeat=rank)
            if sum(j) == k]


def _periodic_blocks(G, M):
    """
    Per generator t_i the two d x d blocks of the periodic resolution
    of Z/n_i acting on M: t_i - 1 in odd degrees, the norm
    1 + t_i + ... + t_i^(n_i - 1) in even degrees.
    """
    identity = M._reduce(np.eye(M.dim, dtype=int).astype(object))
    blocks = []
    for matrix, n in zip(M.action, G.cyclic_orders):
        A = M._reduce(matrix)
        norm, power = identity * 0, identity
        for _ in range(n):
            norm = M._reduce(norm + power)
            power = M._multiply(power, A)
        blocks.append((M._reduce(A - identity).astype(np.int64),
                       norm.astype(np.int64)))
    return blocks


def periodic_differential(G, M, k, cap=None):
    """
    delta^k on Hom_G(P_k, M), where P is the tensor product of the
    periodic resolutions of the cyclic factors of G. The generator e_J
    of P_{k+1} maps to sum_i (-1)^(j_1 + .. + j_{i-1}) u_i e_{J - e_i}
    with u_i = t_i - 1 for odd j_i and the norm of t_i for even j_i.
    Returns the dense matrix with rows indexed by (J, coordinate).
    """
    _check_degree(k)
    _check_cap(G, M, k, cap)
    M.validate(G)
    d = M.dim
    targets, sources = multi_degrees(G.rank, k + 1), multi_degrees(G.rank, k)
    position = {J: s for s, J in enumerate(sources)}
    blocks = _periodic_blocks(G, M)
    D = np.zeros((len(targets) * d, len(sources) * d), dtype=np.int64)
    for t, J in enumerate(targets):
        sign = 1
        for i, j in enumerate(J):
            if j:
                s = position[J[:i] + (j - 1,) + J[i + 1:]]
                D[t * d:(t + 1) * d, s * d:(s + 1) * d] += \
                    sign * blocks[i][j % 2 == 0]
            if j % 2:
                sign = -sign
    log.debug(f"periodic delta^{k}: {D.shape[0]}x{D.shape[1]} over |G|={G.order}")
    return D


def evaluate_coboundary(G, M, c):
    """d applied to a cochain, evaluated directly without building d."""
    k = c.degree
    _check_degree(k)
    _check_cochain(G, M, c, k)
    n, d = G.order, M.dim
    actions = M.element_actions(G).astype(np.int64)
    table = np.array(c.values, dtype=np.int64).reshape(n ** k, d)
    acting, tail, merged, head = _faces(G, k)
    out = np.einsum("tij,tj->ti", actions[acting], table[tail])
    for i, faces in enumerate(merged, start=1):
        out += (-1) ** i * table[faces]
    out += (-1) ** (k + 1) * table[head]
    out %= np.array(M.cyclic_orders, dtype=np.int64)
    return Cochain.from_array(G, M.cyclic_orders, k + 1, out)


def _check_cochain(G, M, c, k=None):
    if c.group != G or tuple(c.module_orders) != M.cyclic_orders:
        raise InputError("cochain does not live on the given group and module")
    if k is not None and c.degree != k:
        raise InputError(f"expected a degree {k} cochain, got {c.degree}")


def is_cocycle(G, M, c):
    return evaluate_coboundary(G, M, c).is_zero()


# Elimination over the chain ring Z/p^a. The dtype stays int64 while
# every product of two residues fits in 63 bits.

def _dtype(modulus):
    return np.int64 if modulus <= 1 << 31 else object


_object_gcd = np.frompyfunc(math.gcd, 2, 1)


def _valuations(values, p, a):
    """p-adic valuation of residues mod p^a, with 0 mapped to a."""
    modulus = p ** a
    if values.dtype == object:
        g = _object_gcd(values, modulus)
    else:
        g = np.gcd(values, modulus)
    powers = np.array([p ** e for e in range(a + 1)], dtype=values.dtype)
    return np.searchsorted(powers, g.astype(powers.dtype))


def _find_pivot(M, t, limit, p, a):
    column = M[t:, t]
    units = np.nonzero(column % p)[0]
    if units.size:
        return t + int(units[0]), t, 0
    block = M[t:, t:limit]
    if a == 1:
        live = np.nonzero(block.any(axis=0))[0]
        if not live.size:
            return None
        c = int(live[0])
        return t + int(np.nonzero(block[:, c])[0][0]), t + c, 0
    vals = _valuations(block, p, a)
    r, c = np.unravel_index(int(np.argmin(vals)), vals.shape)
    v = int(vals[r, c])
    if v >= a:
        return None
    return t + int(r), t + int(c), v


def _eliminate(M, p, a, pivot_columns=None, transform=False):
    """
    Diagonalize the first ``pivot_columns`` columns of M over Z/p^a in
    place. Remaining columns receive the row operations only. Returns
    the rank, the pivot valuations and, with ``transform``, the
    invertible V with the column operations applied.
    """
    modulus = p ** a
    rows = M.shape[0]
    limit = M.shape[1] if pivot_columns is None else pivot_columns
    V = np.eye(limit, dtype=M.dtype) if transform else None
    valuations = []
    t = 0
    while t < min(rows, limit):
        pivot = _find_pivot(M, t, limit, p, a)
        if pivot is None:
            break
        r, c, v = pivot
        if r != t:
            M[[t, r]] = M[[r, t]]
        if c != t:
            M[:, [t, c]] = M[:, [c, t]]
            if V is not None:
                V[:, [t, c]] = V[:, [c, t]]
        scale = p ** v
        inverse = pow(int(M[t, t]) // scale, -1, modulus)
        if inverse != 1:
            M[:, t] = M[:, t] * inverse % modulus
            if V is not None:
                V[:, t] = V[:, t] * inverse % modulus

        hits = np.nonzero(M[t + 1:, t])[0] + t + 1
        if hits.size:
            factors = M[hits, t] // scale
            M[hits, t:] = (M[hits, t:] - np.outer(factors, M[t, t:])) % modulus

        hits = np.nonzero(M[t, t + 1:limit])[0] + t + 1
        if hits.size:
            if V is not None:
                factors = M[t, hits] // scale
                V[:, hits] = (V[:, hits] - np.outer(V[:, t], factors)) % modulus
            M[t, hits] = 0
        valuations.append(v)
        t += 1
    return t, valuations, V


def _span_length(generators, p, a):
    """Composition length of the submodule of (Z/p^a)^n spanned by columns."""
    if not generators.size:
        return 0
    rank, valuations, _ = _eliminate(generators.copy(), p, a)
    return sum(a - v for v in valuations)


@dataclass
class _Localization:
    """The p-primary part of a differential, lifted to Z/p^a."""
    p: int
    a: int
    keep_rows: np.ndarray
    keep_cols: np.ndarray
    col_exponents: np.ndarray
    matrix: np.ndarray

    @property
    def modulus(self):
        return self.p ** self.a


def _p_exponents(orders, p):
    out = np.zeros(len(orders), dtype=np.int64)
    for i, m in enumerate(orders.tolist()):
        while m % p == 0:
            m //= p
            out[i] += 1
    return out


def _localize(D, row_orders, col_orders, p):
    b_rows = _p_exponents(row_orders, p)
    b_cols = _p_exponents(col_orders, p)
    keep_rows = np.nonzero(b_rows)[0]
    keep_cols = np.nonzero(b_cols)[0]
    a = int(max(b_rows.max(initial=0), b_cols.max(initial=0)))
    modulus = p ** a
    dtype = _dtype(modulus)
    scale = np.array([p ** (a - int(b)) for b in b_rows[keep_rows]],
                     dtype=dtype)
    block = D[np.ix_(keep_rows, keep_cols)].astype(dtype) % modulus
    block = block * scale[:, None] % modulus
    return _Localization(p, a, keep_rows, keep_cols, b_cols[keep_cols], block)


def _primary_invariants(D, P, row_orders, col_orders, prev_orders, p):
    """
    Orders of the cyclic summands of the p-part of ker(D) / im(P), where
    D: C^k -> C^{k+1} and P: C^{k-1} -> C^k (None in degree 0).
    """
    local = _localize(D, row_orders, col_orders, p)
    p, a, modulus = local.p, local.a, local.modulus
    width = local.keep_cols.size
    if not width:
        return []
    rank, valuations, V = _eliminate(local.matrix.copy(), p, a, transform=True)
    kernel = V
    for i, s in enumerate(valuations):
        kernel[:, i] = kernel[:, i] * p ** (a - s) % modulus

    relations = np.diag(np.array([p ** int(b) for b in local.col_exponents],
                                 dtype=kernel.dtype)) % modulus
    if P is not None:
        b_prev = _p_exponents(prev_orders, p)
        image = P[np.ix_(local.keep_cols, np.nonzero(b_prev)[0])]
        relations = np.hstack([image.astype(kernel.dtype) % modulus, relations])
    base = _span_length(relations, p, a)

    lengths = []
    for j in range(a + 1):
        scaled = kernel * p ** j % modulus
        lengths.append(_span_length(np.hstack([scaled, relations]), p, a) - base)
    lengths.append(0)
    at_least = [lengths[j] - lengths[j + 1] for j in range(a + 1)]
    orders = []
    for j in range(1, a + 1):
        count = at_least[j - 1] - at_least[j]
        orders.extend([p ** j] * count)
    log.debug(f"p={p}: kernel rank {rank}, summands {orders}")
    return orders


def cohomology_group(G, M, k, cap=None, resolution="periodic"):
    """
    H^k(G, M) = ker delta^k / im delta^(k-1) as invariant factors. In
    degree 0 this is the group of invariants M^G. ``resolution`` picks
    the cochain complex: the small periodic one, or the bar complex.
    """
    _check_degree(k)
    if resolution not in RESOLUTIONS:
        raise InputError(f"resolution must be one of {RESOLUTIONS}, "
                         f"got {resolution!r}")
    M.validate(G)
    # |G| annihilates H^k for k >= 1, so primes prime to |G| vanish.
    primes = [p for p in factorize(M.exponent) if not k or G.order % p == 0]
    summands = []
    if primes:
        _check_cap(G, M, k, cap)
        if resolution == "bar":
            D = _dense(differential(G, M, k, cap))
            P = _dense(differential(G, M, k - 1, cap)) if k else None
            counts = [G.order ** j for j in (k + 1, k, max(k - 1, 0))]
        else:
            D = periodic_differential(G, M, k, cap)
            P = periodic_differential(G, M, k - 1, cap) if k else None
            counts = [len(multi_degrees(G.rank, j))
                      for j in (k + 1, k, max(k - 1, 0))]
        row_orders, col_orders, prev_orders = (
            np.tile(np.array(M.cyclic_orders, dtype=np.int64), count)
            for count in counts)
        for p in primes:
            summands.extend(_primary_invariants(
                D, P, row_orders, col_orders, prev_orders if k else None, p))
    group = CohomologyGroup(invariant_factors_from_orders(summands))
    log.debug(f"H^{k}({G}, {M.cyclic_orders}) = {group}")
    return group


def _primary_preimages(D, row_orders, col_orders, targets, p):
    """
    Solve D x = y in the p-parts for every column y of ``targets``.
    Returns, per target, a vector over the kept columns or None.
    """
    local = _localize(D, row_orders, col_orders, p)
    p, a, modulus = local.p, local.a, local.modulus
    width = local.keep_cols.size
    b_rows = _p_exponents(row_orders, p)[local.keep_rows]
    scale = np.array([p ** (a - int(b)) for b in b_rows], dtype=local.matrix.dtype)
    rhs = targets[local.keep_rows].astype(local.matrix.dtype) % modulus
    rhs = rhs * scale[:, None] % modulus
    augmented = np.hstack([local.matrix, rhs])
    rank, valuations, V = _eliminate(augmented, p, a, pivot_columns=width,
                                     transform=True)
    reduced = augmented[:, width:]
    pivots = np.array([p ** s for s in valuations], dtype=object)
    solutions = []
    for t in range(reduced.shape[1]):
        column = reduced[:, t].astype(object)
        if column[rank:].any() or any(column[:rank] % pivots):
            solutions.append(None)
            continue
        z = np.zeros(width, dtype=object)
        z[:rank] = column[:rank] // pivots
        x = V.astype(object).dot(z) % modulus
        solutions.append(x)
    return local, solutions


def _coboundary_preimages(G, M, k, targets, cap=None):
    """
    For each degree k cochain y in ``targets`` a degree k - 1 cochain b
    with d b = y, or None when y is not a coboundary.
    """
    if not 1 <= k <= MAX_DEGREE + 1:
        raise InputError(f"coboundary solving needs degree 1..{MAX_DEGREE + 1}")
    D = _dense(differential(G, M, k - 1, cap))
    row_orders = _coordinate_orders(G, M, k)
    col_orders = _coordinate_orders(G, M, k - 1)
    Y = np.array([t.values for t in targets], dtype=object).T.reshape(
        D.shape[0], len(targets))

    residues = [[] for _ in targets]
    moduli = []
    feasible = [True] * len(targets)
    for p in factorize(M.exponent):
        local, solutions = _primary_preimages(D, row_orders, col_orders, Y, p)
        exponents = np.zeros(D.shape[1], dtype=np.int64)
        exponents[local.keep_cols] = local.col_exponents
        moduli.append([p ** int(e) for e in exponents])
        for t, x in enumerate(solutions):
            if x is None:
                feasible[t] = False
                residues[t].append(None)
                continue
            full = np.zeros(D.shape[1], dtype=object)
            full[local.keep_cols] = x
            residues[t].append(full)

    out = []
    for t, target in enumerate(targets):
        if not feasible[t]:
            out.append(None)
            continue
        values = []
        for j in range(D.shape[1]):
            mods = [m[j] for m in moduli if m[j] > 1]
            res = [int(r[j]) % m[j] for r, m in zip(residues[t], moduli)
                   if m[j] > 1]
            values.append(int(crt(mods, res)[0]) if mods else 0)
        b = Cochain(G, M.cyclic_orders, k - 1, tuple(values))
        if evaluate_coboundary(G, M, b) != target:
            raise FusionDescentError(
                "coboundary solve produced a cochain that fails the recheck")
        out.append(b)
    return out


def cohomologous(G, M, c1, c2, cap=None):
    """A cochain b with d b = c1 - c2, or None if the classes differ."""
    if c1.degree != c2.degree:
        raise InputError(
            f"degree mismatch: {c1.degree} vs {c2.degree}")
    _check_cochain(G, M, c1)
    _check_cochain(G, M, c2)
    if c1.degree == 0:
        raise InputError("degree 0 cochains have no coboundaries to solve for")
    return _coboundary_preimages(G, M, c1.degree, [c1 - c2], cap)[0]


def cyclic_three_cocycle(n, a):
    """omega_a(i, j, k) = a i floor((j + k) / n) mod n on Z/n with values in Z/n."""
    if isinstance(n, bool) or not isinstance(n, int) or n < 2:
        raise InputError(f"n must be an integer >= 2, got {n!r}")
    i, j, k = np.indices((n, n, n), dtype=np.int64)
    values = (a % n) * i * ((j + k) // n) % n
    return Cochain.from_array(FiniteAbelianGroup.cyclic(n), (n,), 3, values)


@dataclass(frozen=True)
class PullbackClass:
    """
    The class index c with omega_a(s i, s j, s k) cohomologous to
    omega_c, and the exponents e in -2..2 for which c = s^e a mod n.
    """
    n: int
    a: int
    s: int
    class_index: int
    consistent_exponents: Tuple[int, ...]

    def to_json(self):
        return {"n": self.n, "a": self.a, "s": self.s,
                "class_index": self.class_index,
                "consistent_exponents": list(self.consistent_exponents)}


def pullback_class(n, a, s, cap=None):
    """Class of omega_a pulled back along multiplication by the unit s."""
    if isinstance(n, bool) or not isinstance(n, int) or n < 2:
        raise InputError(f"n must be an integer >= 2, got {n!r}")
    if math.gcd(s, n) != 1:
        raise InputError(f"{s} is not a unit mod {n}")
    G = FiniteAbelianGroup.cyclic(n)
    M = GModule.trivial(G, (n,))
    i, j, k = np.indices((n, n, n), dtype=np.int64)
    s = s % n
    pulled = (a % n) * (s * i % n) * ((s * j % n + s * k % n) // n) % n
    pulled = Cochain.from_array(G, (n,), 3, pulled)
    candidates = [pulled - cyclic_three_cocycle(n, c) for c in range(n)]
    solved = _coboundary_preimages(G, M, 3, candidates, cap)
    classes = [c for c, b in enumerate(solved) if b is not None]
    if len(classes) != 1:
        raise FusionDescentError(
            f"pullback of omega_{a} on Z/{n} matched classes {classes}")
    c = classes[0]
    exponents = tuple(e for e in range(-2, 3)
                      if pow(s, e, n) * a % n == c)
    log.debug(f"omega_{a} on Z/{n} pulled back by {s} is omega_{c}")
    return PullbackClass(n, a % n, s, c, exponents)
