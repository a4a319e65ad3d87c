"""Descent statistics on G(r,p,q,n): homogeneous descents, h, k, lambda, fmaj."""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass
from typing import Iterable, Sequence

from .group import Element, GroupParams, ParameterError, enumerate_group


@dataclass(frozen=True)
class StatProfile:
    hdes: tuple  # 1-indexed positions
    h: tuple
    k: tuple
    lam: tuple
    fmaj: int

    def to_json(self) -> dict:
        return {
            "hdes": list(self.hdes),
            "h": list(self.h),
            "k": list(self.k),
            "lambda": list(self.lam),
            "fmaj": self.fmaj,
        }


def residue(c: int, s: int) -> int:
    """Least nonnegative representative of c modulo s."""
    return c % s


def descent_profile(colors: Sequence[int], descends: Iterable[int], r: int, quotient: int) -> StatProfile:
    """Shared statistics core for group elements and tableaux.

    ``descends`` holds the 0-indexed positions i at which entry i "descends" to
    i+1 (sigma_i > sigma_{i+1} for elements; i strictly above i+1 for tableaux).
    A homogeneous descent additionally needs c_i = c_{i+1} mod r.
    """
    n = len(colors)
    if n == 0:
        return StatProfile((), (), (), (), 0)
    hdes = sorted(i for i in descends if (colors[i] - colors[i + 1]) % r == 0)
    h = [0] * n
    k = [0] * n
    k[n - 1] = colors[n - 1] % (r // quotient)
    marks = set(hdes)
    for i in range(n - 2, -1, -1):
        h[i] = h[i + 1] + (1 if i in marks else 0)
        k[i] = k[i + 1] + (colors[i] - colors[i + 1]) % r
    lam = tuple(r * a + b for a, b in zip(h, k))
    return StatProfile(tuple(i + 1 for i in hdes), tuple(h), tuple(k), lam, sum(lam))


def element_descents(sigma: Sequence[int]) -> list:
    return [i for i in range(len(sigma) - 1) if sigma[i] > sigma[i + 1]]


def stat_profile(g: Element, colors: Sequence[int] | None = None) -> StatProfile:
    """Statistics of ``g``; ``colors`` may supply any representative in G(r,p,n)."""
    c = g.colors if colors is None else colors
    return descent_profile(c, element_descents(g.sigma), g.params.r, g.params.q)


def lam(g: Element) -> tuple:
    return stat_profile(g).lam


def fmaj(g: Element) -> int:
    return stat_profile(g).fmaj


def classical_fmaj(g: Element):
    """Des, (d_1..d_n) and the Adin-Roichman flag-major index on G(r,1,1,n)."""
    params = g.params
    if params.p != 1 or params.q != 1:
        raise ParameterError(f"classical fmaj is defined on wreath products only, not {params}")
    r, n = params.r, params.n
    c, s = g.colors, g.sigma
    des = [
        i + 1
        for i in range(n - 1)
        if c[i] % r < c[i + 1] % r or (c[i] % r == c[i + 1] % r and s[i] > s[i + 1])
    ]
    d = tuple(sum(1 for j in des if j >= i) for i in range(1, n + 1))
    value = r * sum(des) + sum(x % r for x in c)
    return set(des), d, value


def a_exponents(g: Element) -> tuple:
    """Exponent vector of the monomial a_g: x_{|g|(i)} carries lambda_i(g)."""
    exps = [0] * g.params.n
    for i, e in zip(g.sigma, stat_profile(g).lam):
        exps[i] = e
    return tuple(exps)


def fmaj_generating_poly(params: GroupParams, over_dual: bool = False, cap: int | None = None) -> dict:
    """Sum of t**fmaj(g) over G (or over its dual), as {degree: coefficient}."""
    group = params.dual() if over_dual else params
    return dict(sorted(Counter(fmaj(g) for g in enumerate_group(group, cap)).items()))


def q_integer(m: int) -> dict:
    return {i: 1 for i in range(m)}


def poly_mul(a: dict, b: dict) -> dict:
    out: dict = {}
    for i, x in a.items():
        for j, y in b.items():
            out[i + j] = out.get(i + j, 0) + x * y
    return {e: c for e, c in sorted(out.items()) if c}


def invariant_degree_series(params: GroupParams) -> dict:
    """Hilbert series of the coinvariant algebra of G(r,p,q,n).

    Built from the invariant degrees r, 2r, ..., (n-1)r, rn/p of G(r,p,n) and
    restricted to exponents divisible by q.
    """
    r, p, q, n = params.r, params.p, params.q, params.n
    series = {0: 1}
    for i in range(1, n):
        series = poly_mul(series, q_integer(r * i))
    series = poly_mul(series, q_integer(r * n // p))
    return {e: c for e, c in series.items() if e % q == 0}


def format_poly(poly: dict, var: str = "t") -> str:
    terms = []
    for e, c in sorted(poly.items()):
        if c == 0:
            continue
        if e == 0:
            mono = ""
        elif e == 1:
            mono = var
        else:
            mono = f"{var}^{e}"
        if not mono:
            terms.append(str(c))
        elif c == 1:
            terms.append(mono)
        else:
            terms.append(f"{c}*{mono}")
    return " + ".join(terms) if terms else "0"


def poly_coefficients(poly: dict) -> list:
    if not poly:
        return []
    out = [0] * (max(poly) + 1)
    for e, c in poly.items():
        out[e] = c
    return out
