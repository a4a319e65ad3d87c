"""Wreath-product characters, coarse Kronecker coefficients and fake degrees.

Irreducible characters of G(r,n) are labelled by r-tuples of partitions; the
partition in component j is paired with the linear character zeta -> zeta**j
of the cyclic factor.  Values are computed by the colored Murnaghan-Nakayama
recursion and returned as exact :class:`Cyclotomic` numbers.
"""

from __future__ import annotations

import itertools
from collections import Counter
from functools import lru_cache
from math import factorial
from typing import Sequence

from .cyclotomic import Cyclotomic
from .group import Element, GroupParams, ParameterError, enumerate_group
from .series import PartitionSeries, sum_series
from .stats import stat_profile
from .tableaux import ShapeClass, class_tableaux, enumerate_fer_classes, shape_class, tableau_stats


def cycle_type(sigma: Sequence[int], colors: Sequence[int], r: int) -> tuple:
    """Sorted tuple of (cycle length, cycle color mod r) pairs."""
    n = len(sigma)
    seen = [False] * n
    out = []
    for start in range(n):
        if seen[start]:
            continue
        length, color, i = 0, 0, start
        while not seen[i]:
            seen[i] = True
            length += 1
            color += colors[i]
            i = sigma[i]
        out.append((length, color % r))
    return tuple(sorted(out))


def element_cycle_type(g: Element) -> tuple:
    return cycle_type(g.sigma, g.colors, g.params.r)


@lru_cache(maxsize=None)
def rim_hooks(lam: tuple, size: int) -> tuple:
    """All (smaller partition, height) obtained by removing a rim hook of ``size``."""
    m = len(lam)
    beta = [lam[i] + (m - 1 - i) for i in range(m)]
    beads = set(beta)
    out = []
    for b in beta:
        t = b - size
        if t < 0 or t in beads:
            continue
        height = sum(1 for x in beads if t < x < b)
        new = sorted((beads - {b}) | {t}, reverse=True)
        parts = tuple(x - (m - 1 - i) for i, x in enumerate(new))
        out.append((tuple(x for x in parts if x), height))
    return tuple(out)


@lru_cache(maxsize=None)
def _wreath_char(shape: tuple, ctype: tuple, r: int) -> Cyclotomic:
    if not ctype:
        return Cyclotomic.integer(r, 1)
    (length, color), rest = ctype[-1], ctype[:-1]
    counts = {}
    for j, lam in enumerate(shape):
        if sum(lam) < length:
            continue
        for smaller, height in rim_hooks(lam, length):
            sub = shape[:j] + (smaller,) + shape[j + 1:]
            val = _wreath_char(sub, rest, r)
            sign = -1 if height % 2 else 1
            e = (j * color) % r
            counts[e] = counts.get(e, Cyclotomic.integer(r, 0)) + val * sign
    total = Cyclotomic.integer(r, 0)
    for e, val in counts.items():
        total = total + val * Cyclotomic.zeta(r, e)
    return total


def wreath_character(shape: Sequence, ctype: Sequence) -> Cyclotomic:
    shape = tuple(tuple(lam) for lam in shape)
    ctype = tuple(sorted(tuple(c) for c in ctype))
    r = len(shape)
    if sum(sum(lam) for lam in shape) != sum(length for length, _ in ctype):
        raise ValueError("shape size and cycle type size differ")
    return _wreath_char(shape, ctype, r)


@lru_cache(maxsize=None)
def class_sizes(r: int, p: int, n: int) -> tuple:
    """(cycle type, count) over the elements of G(r,p,n), sorted by type."""
    counts: Counter = Counter()
    colors_all = [c for c in itertools.product(range(r), repeat=n) if sum(c) % p == 0]
    for sigma in itertools.permutations(range(n)):
        for colors in colors_all:
            counts[cycle_type(sigma, colors, r)] += 1
    return tuple(sorted(counts.items()))


def conjugate_shape(shape: Sequence) -> tuple:
    """Label of the complex-conjugate character: component j -> -j mod r."""
    r = len(shape)
    return tuple(tuple(shape[(-j) % r]) for j in range(r))


def coarse_kronecker(params: GroupParams, mus: Sequence) -> int:
    """Coarse Kronecker coefficient of G(r,p,q,n) for shape classes in Fer*.

    Averages the product of the G(r,n) characters of one representative per
    class over the subgroup G(r,p,n).
    """
    r, p, q, n = params.r, params.p, params.q, params.n
    shapes = []
    for mu in mus:
        rep = mu.representative if isinstance(mu, ShapeClass) else tuple(tuple(lam) for lam in mu)
        if len(rep) != r or sum(sum(lam) for lam in rep) != n:
            raise ParameterError(f"shape {rep} is not an r-tuple of total size n")
        if sum(i * sum(lam) for i, lam in enumerate(rep)) % q:
            raise ParameterError(f"shape {rep} does not descend to the quotient by C_q")
        shapes.append(rep)
    total = Cyclotomic.integer(r, 0)
    for ctype, count in class_sizes(r, p, n):
        prod = Cyclotomic.integer(r, count)
        for rep in shapes:
            prod = prod * _wreath_char(rep, ctype, r)
        total = total + prod
    value = total.as_integer() * p
    denom = r**n * factorial(n)
    if value % denom:
        raise ArithmeticError(f"non-integral coarse Kronecker coefficient {value}/{denom}")
    return value // denom


def fake_degree_poly(mu: ShapeClass, params: GroupParams) -> PartitionSeries:
    """Sum of Y**lambda(T) over tableau classes T of a class ``mu`` in Fer*."""
    n = params.n
    if mu.quotient != params.p:
        raise ParameterError("fake degrees are indexed by classes of Fer* under C_p")
    out = PartitionSeries(1, n)
    for T in class_tableaux(mu):
        out.add_term((tableau_stats(T, params.p).lam,))
    return out


def product_one_tuples(elements: list, k: int):
    """All k-tuples from ``elements`` whose product is the identity."""
    from .group import identity, inverse, multiply

    if k == 1:
        yield from ((g,) for g in elements if g == identity(g.params))
        return
    for head in itertools.product(elements, repeat=k - 1):
        prod = head[0]
        for g in head[1:]:
            prod = multiply(prod, g)
        yield head + (inverse(prod),)


def tuple_series(params: GroupParams, k: int) -> PartitionSeries:
    """Sum over k-tuples in G with product 1 of prod_i Y_i**lambda(g_i)."""
    elements = list(enumerate_group(params))
    lams = {g: stat_profile(g).lam for g in elements}
    out = PartitionSeries(k, params.n)
    for tup in product_one_tuples(elements, k):
        out.add_term(tuple(lams[g] for g in tup))
    return out


def maincomb_sides(params: GroupParams, k: int):
    """Both sides of the tableau expansion of the tuple series of G.

    The right side sums coarse Kronecker coefficients of G* times fake-degree
    polynomials of tableau classes in ST(r,p,q,n).
    """
    lhs = tuple_series(params, k)
    dual = params.dual()
    classes = enumerate_fer_classes(params.r, params.p, params.q, params.n)
    fake = {mu: fake_degree_poly(mu, dual) for mu in classes}
    parts = []
    for mus in itertools.product(classes, repeat=k):
        c = coarse_kronecker(dual, mus)
        if c == 0:
            continue
        term = PartitionSeries.one(k, params.n)
        for i, mu in enumerate(mus):
            term = term * fake[mu].embed(i, k)
        parts.append(term.scale(c))
    rhs = sum_series(parts, k, params.n)
    return lhs, rhs


def maincomb_check(params: GroupParams, k: int):
    lhs, rhs = maincomb_sides(params, k)
    diff = lhs.difference(rhs)
    return not diff, diff


def irreducible_labels(params: GroupParams) -> list:
    """(mu, rho) labels of Irr(G(r,p,q,n)): mu in Fer*, rho in [0, |(C_p)_mu|)."""
    return [
        (mu, rho)
        for mu in enumerate_fer_classes(params.r, params.q, params.p, params.n)
        for rho in range(mu.stabilizer_order)
    ]


def irreducible_dimension(mu: ShapeClass) -> int:
    return len(class_tableaux(mu))


def character_from_type_string(text: str) -> tuple:
    """Parse ``"2:1,1:0"`` into a cycle type ((1, 0), (2, 1))."""
    out = []
    for part in text.split(","):
        length, color = part.split(":")
        out.append((int(length), int(color)))
    return tuple(sorted(out))


__all__ = [
    "class_sizes",
    "coarse_kronecker",
    "conjugate_shape",
    "cycle_type",
    "fake_degree_poly",
    "maincomb_check",
    "maincomb_sides",
    "shape_class",
    "wreath_character",
]
