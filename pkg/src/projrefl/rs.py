"""Robinson-Schensted, Stanton-White and the projective correspondence."""

from __future__ import annotations

from bisect import bisect_right
from typing import Sequence

from .group import Element, ParameterError
from .tableaux import ShapeClass, shape_class, tableau_class, tableau_shape


def rs_classical(top: Sequence[int], bottom: Sequence[int]):
    """Row-insert ``bottom`` into P, recording the matching ``top`` entries in Q."""
    if len(top) != len(bottom):
        raise ValueError("two-line array rows differ in length")
    if any(a >= b for a, b in zip(top, top[1:])):
        raise ValueError("top row must be strictly increasing")
    if len(set(bottom)) != len(bottom):
        raise ValueError("bottom row must not repeat entries")
    P: list = []
    Q: list = []
    for t, x in zip(top, bottom):
        row = 0
        while True:
            if row == len(P):
                P.append([x])
                Q.append([t])
                break
            cur = P[row]
            pos = bisect_right(cur, x)
            if pos == len(cur):
                cur.append(x)
                Q[row].append(t)
                break
            x, cur[pos] = cur[pos], x
            row += 1
    return tuple(map(tuple, P)), tuple(map(tuple, Q))


def stanton_white(g: Element):
    """Colorwise RS of g in G(r,n); entries and positions are 1-indexed."""
    params = g.params
    if params.p != 1 or params.q != 1:
        raise ParameterError(f"Stanton-White needs a wreath product, got {params}")
    return _colorwise_rs(g.sigma, g.colors, params.r)


def _colorwise_rs(sigma: Sequence[int], colors: Sequence[int], r: int):
    P, Q = [], []
    for j in range(r):
        pos = [i for i in range(len(sigma)) if colors[i] % r == j]
        Pj, Qj = rs_classical([i + 1 for i in pos], [sigma[i] + 1 for i in pos])
        P.append(Pj)
        Q.append(Qj)
    return tuple(P), tuple(Q)


def projective_rs(g: Element, colors: Sequence[int] | None = None):
    """Classes of P and Q in ST(r,p,q,n) for g in G(r,p,q,n).

    ``colors`` selects the lifting to G(r,p,n) (default: the stored
    representative).  Returns ``(P_class, Q_class, mu)`` where ``mu`` is the
    common shape class under C_q.
    """
    params = g.params
    c = g.colors if colors is None else colors
    if sum(c) % params.p:
        raise ParameterError("lifting does not lie in G(r,p,n)")
    P, Q = _colorwise_rs(g.sigma, c, params.r)
    mu = shape_class(tableau_shape(P), params.q)
    return tableau_class(P, params.q), tableau_class(Q, params.q), mu


def rs_fibers(elements) -> dict:
    """Map (P_class, Q_class) -> number of elements with that image."""
    fibers: dict = {}
    shapes: dict = {}
    for g in elements:
        P, Q, mu = projective_rs(g)
        fibers[(P, Q)] = fibers.get((P, Q), 0) + 1
        shapes[(P, Q)] = mu
    return fibers, shapes
