"""Diagonal invariants: k-partite partitions, the bijection Phi and Hilbert series.

Matrices are tuples of row tuples.  ``params`` always denotes the group
G = G(r,p,q,n) acting diagonally; the tuples (g_1, ..., g_k) live in its dual
G* = G(r,q,p,n), and their statistics use G*'s quotient parameter p.
"""

from __future__ import annotations

import itertools
from collections import defaultdict
from typing import Iterator, Sequence

from .characters import product_one_tuples
from .cyclotomic import Cyclotomic
from .group import (
    Element,
    GroupParams,
    ParameterError,
    canonicalize,
    enumerate_group,
    identity,
    inverse,
    multiply,
)
from .series import PartitionSeries
from .stats import stat_profile


class NotInBasis(ValueError):
    """A matrix fails the k-partite or column/row-sum conditions."""


# -- partitions with a common residue ----------------------------------------

def _pad(lam: Sequence[int], n: int) -> tuple:
    lam = tuple(lam)
    if len(lam) > n:
        raise ValueError(f"{lam} has more than {n} parts")
    return lam + (0,) * (n - len(lam))


def par_rpn_contains(lam: Sequence[int], r: int, p: int, n: int) -> bool:
    """All n parts (zeros included) share one residue mod r, a multiple of r/p."""
    parts = _pad(lam, n)
    if any(a < b for a, b in zip(parts, parts[1:])) or (parts and parts[-1] < 0):
        return False
    res = {x % r for x in parts}
    return len(res) <= 1 and all(x % (r // p) == 0 for x in res)


def _vectors_le(n: int, total: int, cap: int) -> Iterator[tuple]:
    """Weakly decreasing length-n vectors with sum exactly ``total``."""
    if n == 0:
        if total == 0:
            yield ()
        return
    for first in range(min(total, cap), -1, -1):
        if first * n < total:
            break
        for rest in _vectors_le(n - 1, total - first, first):
            yield (first,) + rest


def par_rpn_enumerate(r: int, p: int, n: int, degree_bound: int) -> list:
    return [
        lam
        for d in range(degree_bound + 1)
        for lam in _vectors_le(n, d, d)
        if par_rpn_contains(lam, r, p, n)
    ]


# -- compatibility and B_k ---------------------------------------------------

def is_partition_vector(v: Sequence[int]) -> bool:
    return all(x >= 0 for x in v) and all(a >= b for a, b in zip(v, v[1:]))


def is_g_compatible(lam: Sequence[int], g: Element) -> bool:
    params = g.params
    n, r = params.n, params.r
    lam = _pad(lam, n)
    diff = tuple(a - b for a, b in zip(lam, stat_profile(g).lam))
    if not is_partition_vector(diff) or not par_rpn_contains(diff, r, params.q, n):
        return False
    if sum(lam) % params.p:
        return False
    return canonicalize(g.sigma, lam, params) == g


def is_k_partite(A: Sequence[Sequence[int]]) -> bool:
    """Columns weakly decrease in lexicographic order read top to bottom."""
    if not A:
        return True
    cols = list(zip(*A))
    return all(x >= 0 for row in A for x in row) and all(a >= b for a, b in zip(cols, cols[1:]))


def column_sums(A) -> tuple:
    return tuple(sum(col) for col in zip(*A))


def column_conditions(A, params: GroupParams) -> bool:
    """All column sums congruent mod r, and p times each of them = 0 mod r."""
    s = column_sums(A)
    r = params.r
    return len({x % r for x in s}) <= 1 and all((params.p * x) % r == 0 for x in s)


def in_basis(A, params: GroupParams) -> bool:
    """Membership in B_k(r,p,q,n)."""
    return (
        is_k_partite(A)
        and all(sum(row) % params.q == 0 for row in A)
        and column_conditions(A, params)
    )


def phi(gs: Sequence[Element], lambdas: Sequence[Sequence[int]]):
    """The matrix whose row i lists lambda^(i) at (sigma_1 ... sigma_{i-1})(j)."""
    if len(gs) != len(lambdas) or not gs:
        raise ValueError("need k >= 1 elements and k partitions")
    dual = gs[0].params
    n = dual.n
    prod = identity(dual)
    for g in gs:
        prod = multiply(prod, g)
    if prod != identity(dual):
        raise ValueError("the elements do not multiply to the identity")
    rows = []
    tau = list(range(n))
    for g, lam in zip(gs, lambdas):
        lam = _pad(lam, n)
        if not is_g_compatible(lam, g):
            raise ValueError(f"{lam} is not compatible with {g}")
        rows.append(tuple(lam[tau[j]] for j in range(n)))
        tau = [g.sigma[t] for t in tau]
    return tuple(rows)


def phi_inverse(A, params: GroupParams):
    """Recover (g_1, ..., g_k; lambda^(1), ..., lambda^(k)) from A in B_k."""
    A = tuple(tuple(row) for row in A)
    if not in_basis(A, params):
        raise NotInBasis(f"{A} is not in B_k for {params}")
    dual = params.dual()
    k, n = len(A), params.n
    # tau_i ranks columns by (rows i+1..k descending, column index); tau_k = id
    taus = [None] * (k + 1)
    taus[k] = list(range(n))
    for i in range(k - 1, -1, -1):
        order = sorted(range(n), key=lambda j: (tuple(-A[t][j] for t in range(i, k)), j))
        tau = [0] * n
        for rank, j in enumerate(order):
            tau[j] = rank
        taus[i] = tau
    if taus[0] != list(range(n)):
        raise NotInBasis("columns are not in k-partite order")
    gs, lambdas = [], []
    for i in range(k):
        tau_prev, tau_next = taus[i], taus[i + 1]
        lam = [0] * n
        sigma = [0] * n
        for j in range(n):
            lam[tau_prev[j]] = A[i][j]
            sigma[tau_prev[j]] = tau_next[j]
        g = canonicalize(sigma, lam, dual)
        gs.append(g)
        lambdas.append(tuple(lam))
    return gs, lambdas


def kpartite_matrices(k: int, n: int, max_entry: int | None = None, max_total: int | None = None) -> Iterator[tuple]:
    """k-partite k x n matrices, bounded entrywise and/or by total degree.

    Ordered lexicographically on the flattened column sequence.
    """
    if max_entry is None and max_total is None:
        raise ValueError("need an entry bound or a total-degree bound")
    top = max_entry if max_entry is not None else max_total
    columns = sorted(itertools.product(range(top + 1), repeat=k), reverse=True)
    if max_total is not None:
        columns = [c for c in columns if sum(c) <= max_total]

    def rec(start: int, remaining: int, budget):
        if remaining == 0:
            yield ()
            return
        for idx in range(start, len(columns)):
            col = columns[idx]
            if budget is not None and sum(col) > budget:
                continue
            for rest in rec(idx, remaining - 1, None if budget is None else budget - sum(col)):
                yield (col,) + rest

    for cols in rec(0, n, max_total):
        yield tuple(zip(*cols)) if n else tuple(() for _ in range(k))


def basis_matrices(params: GroupParams, k: int, max_entry: int | None = None, max_total: int | None = None):
    for A in kpartite_matrices(k, params.n, max_entry, max_total):
        if in_basis(A, params):
            yield A


# -- averaging over the diagonal action --------------------------------------

def average_monomial(A, params: GroupParams):
    """Average of X^A over the diagonal action of G.

    g = [sigma; c] sends x_{i,j} to zeta_r**c_j x_{i,sigma(j)}, so X^A goes to
    zeta_r**(sum_j c_j s_j) times X^A with columns permuted.  Returns the
    verdict (average != 0) and the map column-permuted matrix -> coefficient,
    the coefficient being the unnormalised orbit sum over G(r,p,n).
    """
    A = tuple(tuple(row) for row in A)
    if any(sum(row) % params.q for row in A):
        raise ParameterError("row sums must be divisible by q")
    r, p, n = params.r, params.p, params.n
    s = column_sums(A) if A else (0,) * n
    # the color factor does not depend on the permutation
    weights = [0] * r
    for c in itertools.product(range(r), repeat=n):
        if sum(c) % p == 0:
            weights[sum(cj * sj for cj, sj in zip(c, s)) % r] += 1
    factor = Cyclotomic(r, weights)
    images: dict = defaultdict(int)
    for sigma in itertools.permutations(range(n)):
        target = [None] * n
        for j in range(n):
            target[sigma[j]] = j
        images[tuple(tuple(row[target[m]] for m in range(n)) for row in A)] += 1
    if factor.is_zero():
        return False, {}
    return True, {img: factor * m for img, m in sorted(images.items())}


# -- Hilbert series ----------------------------------------------------------

def _lam_table(group: GroupParams) -> dict:
    return {g: stat_profile(g).lam for g in enumerate_group(group)}


def hilb_diag(params: GroupParams, k: int, degree_bound: int) -> PartitionSeries:
    """Sum of Y**Lambda(A) over A in B_k of total degree <= bound."""
    out = PartitionSeries(k, params.n, bound=degree_bound)
    for A in basis_matrices(params, k, max_total=degree_bound):
        out.add_term(tuple(tuple(sorted(row, reverse=True)) for row in A))
    return out


def hilb_tensor(params: GroupParams, k: int, degree_bound: int) -> PartitionSeries:
    """Hilbert series of the tensor invariants, truncated at total degree."""
    n = params.n
    single = PartitionSeries(1, n, bound=degree_bound)
    for lam in par_rpn_enumerate(params.r, params.p, n, degree_bound):
        if sum(lam) % params.q == 0:
            single.add_term((lam,))
    out = PartitionSeries.one(k, n, bound=degree_bound)
    for i in range(k):
        out = out * single.embed(i, k)
    return out


def uou_rhs(params: GroupParams, k: int, degree_bound: int | None = None) -> PartitionSeries:
    """Sum over k-tuples of G* with product 1 of prod_i Y_i**lambda(g_i)."""
    dual = params.dual()
    lams = _lam_table(dual)
    out = PartitionSeries(k, params.n, bound=degree_bound)
    for tup in product_one_tuples(list(lams), k):
        out.add_term(tuple(lams[g] for g in tup))
    return out


def uou_check(params: GroupParams, k: int, degree_bound: int):
    lhs = hilb_diag(params, k, degree_bound)
    rhs = uou_rhs(params, k, degree_bound) * hilb_tensor(params, k, degree_bound)
    diff = lhs.difference(rhs)
    return not diff, diff


def count_basis(params: GroupParams, k: int) -> int:
    """Number of k-tuples of G* whose product is the identity."""
    dual = params.dual()
    elements = list(enumerate_group(dual))
    one = identity(dual)
    if k == 1:
        return sum(1 for g in elements if g == one)
    members = set(elements)
    count = 0
    for head in itertools.product(elements, repeat=k - 1):
        prod = one
        for g in head:
            prod = multiply(prod, g)
        # the last factor is forced; it counts when it is a group element
        if inverse(prod) in members and multiply(prod, inverse(prod)) == one:
            count += 1
    return count


def minimal_matrix(gs: Sequence[Element]):
    """A(g_1, ..., g_k): Phi evaluated at the partitions lambda(g_i)."""
    return phi(gs, [stat_profile(g).lam for g in gs])
