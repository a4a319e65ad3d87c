"""Galois twists of the bigraded diagonal invariants (k = 2)."""

from __future__ import annotations

from math import gcd

from .characters import conjugate_shape, fake_degree_poly
from .group import GroupParams, ParameterError, enumerate_group, galois_act, inverse
from .series import PartitionSeries, sum_series
from .stats import stat_profile
from .tableaux import ShapeClass, enumerate_fer_classes, shape_class


def _check_unit(d: int, r: int) -> None:
    if gcd(d, r) != 1:
        raise ParameterError(f"d={d} is not coprime to r={r}")


def sigma_on_tuple(shape: tuple, d: int) -> tuple:
    """Move component j to position d*j mod r (zeta**j -> zeta**(d*j))."""
    r = len(shape)
    _check_unit(d, r)
    out = [None] * r
    for j, lam in enumerate(shape):
        out[(d * j) % r] = lam
    return tuple(out)


def sigma_on_shape(mu: ShapeClass, d: int) -> ShapeClass:
    return shape_class(sigma_on_tuple(mu.representative, d), mu.quotient)


def conjugate_class(mu: ShapeClass) -> ShapeClass:
    return shape_class(conjugate_shape(mu.representative), mu.quotient)


def units(r: int) -> list:
    return [d for d in range(1, r + 1) if gcd(d, r) == 1] if r > 1 else [1]


def gsigma_combinatorial(params: GroupParams, d: int) -> PartitionSeries:
    """Sum over g in G* of Y1**lambda(g^sigma) * Y2**lambda(g^-1)."""
    _check_unit(d, params.r)
    out = PartitionSeries(2, params.n)
    for g in enumerate_group(params.dual()):
        out.add_term((stat_profile(galois_act(g, d)).lam, stat_profile(inverse(g)).lam))
    return out


def gsigma_representation(params: GroupParams, d: int) -> PartitionSeries:
    """Sum over mu in Fer* of |(C_p)_mu| f^{sigma mu}(Y1) f^{conj mu}(Y2)."""
    _check_unit(d, params.r)
    classes = enumerate_fer_classes(params.r, params.q, params.p, params.n)
    fake = {mu: fake_degree_poly(mu, params) for mu in classes}
    parts = []
    for mu in classes:
        left = fake[sigma_on_shape(mu, d)].embed(0, 2)
        right = fake[conjugate_class(mu)].embed(1, 2)
        parts.append((left * right).scale(mu.stabilizer_order))
    return sum_series(parts, 2, params.n)


def gsigma_check(params: GroupParams, d: int):
    a = gsigma_combinatorial(params, d)
    b = gsigma_representation(params, d)
    diff = a.difference(b)
    return not diff, diff
