"""Multipartitions Fer(r,p,n), their C_q-orbit classes and standard multitableaux.

A shape is an r-tuple of partitions (each a weakly decreasing tuple without
zeros).  A multitableau is an r-tuple of components, each a tuple of rows.
Component indices are 0-based: the number i has color j when it sits in
component j.

Shifting by s sends a tuple (x_0, ..., x_{r-1}) to (x_s, x_{s+1}, ...), with
indices taken mod r.  The C_q action on Fer(r,p,n) is shifting by multiples of
r/q.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from typing import Iterator, Sequence

from .stats import StatProfile, descent_profile


@lru_cache(maxsize=None)
def partitions(n: int, max_part: int | None = None) -> tuple:
    """All partitions of n with parts at most ``max_part``, in reverse lex order."""
    if max_part is None:
        max_part = n
    if n == 0:
        return ((),)
    out = []
    for first in range(min(n, max_part), 0, -1):
        for rest in partitions(n - first, first):
            out.append((first,) + rest)
    return tuple(out)


def multipartitions(r: int, n: int) -> Iterator[tuple]:
    """All r-tuples of partitions with total size n."""
    if r == 0:
        if n == 0:
            yield ()
        return
    for m in range(n, -1, -1):
        for lam in partitions(m):
            for rest in multipartitions(r - 1, n - m):
                yield (lam,) + rest


def color_weight(shape: Sequence) -> int:
    return sum(i * sum(lam) for i, lam in enumerate(shape))


def shift(tup: tuple, s: int) -> tuple:
    r = len(tup)
    return tuple(tup[(i + s) % r] for i in range(r))


def in_fer(shape: Sequence, p: int) -> bool:
    return color_weight(shape) % p == 0


def enumerate_fer(r: int, p: int, n: int) -> list:
    return [s for s in multipartitions(r, n) if in_fer(s, p)]


@dataclass(frozen=True, order=True)
class ShapeClass:
    """An orbit of multipartitions under shifts by ``step`` = r/quotient."""

    representative: tuple
    step: int
    stabilizer_order: int

    @property
    def r(self) -> int:
        return len(self.representative)

    @property
    def quotient(self) -> int:
        return self.r // self.step

    def members(self) -> list:
        return sorted({shift(self.representative, j * self.step) for j in range(self.quotient)})

    def to_json(self) -> dict:
        return {
            "shape": [list(lam) for lam in self.representative],
            "step": self.step,
            "stabilizer_order": self.stabilizer_order,
        }


def shape_class(shape: Sequence, quotient: int) -> ShapeClass:
    shape = tuple(tuple(lam) for lam in shape)
    r = len(shape)
    step = r // quotient
    orbit = [shift(shape, j * step) for j in range(quotient)]
    stab = sum(1 for s in orbit if s == shape)
    return ShapeClass(min(orbit), step, stab)


def enumerate_fer_classes(r: int, p: int, q: int, n: int) -> list:
    """Orbit classes Fer(r,p,q,n) of Fer(r,p,n) under C_q, sorted by representative."""
    seen = {}
    for s in enumerate_fer(r, p, n):
        c = shape_class(s, q)
        seen[c.representative] = c
    return [seen[k] for k in sorted(seen)]


def dual_fer_classes(params) -> list:
    """Fer* for G(r,p,q,n): classes of Fer(r,q,n) under C_p."""
    return enumerate_fer_classes(params.r, params.q, params.p, params.n)


# -- standard fillings -------------------------------------------------------

def _corners(lam: tuple) -> list:
    return [i for i in range(len(lam)) if i == len(lam) - 1 or lam[i] > lam[i + 1]]


@lru_cache(maxsize=None)
def _fillings(shape: tuple) -> tuple:
    """Standard fillings of a multishape with 1..n, placing n at a corner."""
    n = sum(sum(lam) for lam in shape)
    if n == 0:
        return (tuple(() for _ in shape),)
    out = []
    for j, lam in enumerate(shape):
        for row in _corners(lam):
            smaller = list(lam)
            smaller[row] -= 1
            if smaller[row] == 0:
                smaller.pop()
            sub = shape[:j] + (tuple(smaller),) + shape[j + 1:]
            for t in _fillings(sub):
                comp = [list(rw) for rw in t[j]]
                if row == len(comp):
                    comp.append([])
                comp[row].append(n)
                out.append(t[:j] + (tuple(tuple(rw) for rw in comp),) + t[j + 1:])
    return tuple(sorted(out))


def enumerate_tableaux(shape: Sequence) -> list:
    return list(_fillings(tuple(tuple(lam) for lam in shape)))


def tableau_shape(T: Sequence) -> tuple:
    return tuple(tuple(len(row) for row in comp) for comp in T)


def tableau_size(T: Sequence) -> int:
    return sum(len(row) for comp in T for row in comp)


def is_standard(T: Sequence) -> bool:
    entries = sorted(x for comp in T for row in comp for x in row)
    if entries != list(range(1, len(entries) + 1)):
        return False
    for comp in T:
        for i, row in enumerate(comp):
            if not row or any(a >= b for a, b in zip(row, row[1:])):
                return False
            if i and (len(row) > len(comp[i - 1]) or any(comp[i - 1][c] >= row[c] for c in range(len(row)))):
                return False
    return True


def _positions(T: Sequence) -> dict:
    return {x: (j, i) for j, comp in enumerate(T) for i, row in enumerate(comp) for x in row}


def tableau_stats(T: Sequence, quotient: int) -> StatProfile:
    """Statistics of a standard multitableau; k_n uses residues mod r/quotient."""
    if not is_standard(T):
        raise ValueError(f"not a standard multitableau: {T!r}")
    r = len(T)
    pos = _positions(T)
    n = len(pos)
    colors = [pos[i][0] for i in range(1, n + 1)]
    rows = [pos[i][1] for i in range(1, n + 1)]
    descends = [i for i in range(n - 1) if rows[i] < rows[i + 1]]
    return descent_profile(colors, descends, r, quotient)


def shift_tableau(T: Sequence, j: int, step: int) -> tuple:
    return shift(tuple(T), j * step)


def tableau_class(T: Sequence, quotient: int) -> tuple:
    """Canonical (lex-least) representative of the C_quotient-orbit of T."""
    T = tuple(T)
    step = len(T) // quotient
    return min(shift(T, j * step) for j in range(quotient))


def class_tableaux(mu: ShapeClass) -> list:
    """Canonical representatives of the tableau classes of shape class ``mu``."""
    return sorted({tableau_class(T, mu.quotient) for T in enumerate_tableaux(mu.representative)})


def tableau_to_json(T: Sequence) -> dict:
    return {"components": [[list(row) for row in comp] for comp in T]}


def tableau_from_json(data: dict) -> tuple:
    return tuple(tuple(tuple(row) for row in comp) for comp in data["components"])
