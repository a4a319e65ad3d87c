"""Sparse generating series graded by k-tuples of partitions."""

from __future__ import annotations

from collections import defaultdict
from typing import Iterable


class PartitionSeries:
    """Exact integer series in Y_1, ..., Y_k.

    Keys are k-tuples of exponent vectors, each a weakly decreasing length-n
    tuple; ``Y_i ** lam`` stands for the monomial prod_j y_{i,j} ** lam_j, so
    products add exponent vectors blockwise.  ``bound`` truncates by total
    degree (``None`` = untruncated).
    """

    def __init__(self, k: int, n: int, terms=None, bound: int | None = None):
        self.k = k
        self.n = n
        self.bound = bound
        self.terms: dict = {}
        if terms:
            items = terms.items() if isinstance(terms, dict) else terms
            for key, c in items:
                self.add_term(key, c)

    @classmethod
    def one(cls, k: int, n: int, bound: int | None = None) -> "PartitionSeries":
        return cls(k, n, {((0,) * n,) * k: 1}, bound)

    @staticmethod
    def degree(key) -> int:
        return sum(sum(lam) for lam in key)

    def add_term(self, key, c: int = 1) -> None:
        key = tuple(tuple(lam) for lam in key)
        if len(key) != self.k or any(len(lam) != self.n for lam in key):
            raise ValueError(f"exponent {key} does not have shape {self.k}x{self.n}")
        if self.bound is not None and self.degree(key) > self.bound:
            return
        v = self.terms.get(key, 0) + c
        if v:
            self.terms[key] = v
        else:
            self.terms.pop(key, None)

    def __add__(self, other: "PartitionSeries") -> "PartitionSeries":
        out = PartitionSeries(self.k, self.n, self.terms, _min_bound(self.bound, other.bound))
        for key, c in other.terms.items():
            out.add_term(key, c)
        return out

    def __mul__(self, other: "PartitionSeries") -> "PartitionSeries":
        if (self.k, self.n) != (other.k, other.n):
            raise ValueError("series shapes differ")
        bound = _min_bound(self.bound, other.bound)
        acc: dict = defaultdict(int)
        for a, x in self.terms.items():
            da = self.degree(a)
            for b, y in other.terms.items():
                if bound is not None and da + self.degree(b) > bound:
                    continue
                key = tuple(tuple(u + v for u, v in zip(la, lb)) for la, lb in zip(a, b))
                acc[key] += x * y
        return PartitionSeries(self.k, self.n, {k: c for k, c in acc.items() if c}, bound)

    def scale(self, c: int) -> "PartitionSeries":
        return PartitionSeries(self.k, self.n, {key: c * v for key, v in self.terms.items()}, self.bound)

    def truncate(self, bound: int) -> "PartitionSeries":
        return PartitionSeries(self.k, self.n, self.terms, _min_bound(self.bound, bound))

    def embed(self, block: int, k: int) -> "PartitionSeries":
        """View a single-block series as block ``block`` of a k-block series."""
        if self.k != 1:
            raise ValueError("only single-block series can be embedded")
        zero = (0,) * self.n
        terms = {
            tuple(key[0] if i == block else zero for i in range(k)): c
            for key, c in self.terms.items()
        }
        return PartitionSeries(k, self.n, terms, self.bound)

    def collapse(self) -> dict:
        """Substitute y_{i,j} -> y_i: map total degree per block -> coefficient."""
        out: dict = defaultdict(int)
        for key, c in self.terms.items():
            out[tuple(sum(lam) for lam in key)] += c
        return {e: c for e, c in sorted(out.items()) if c}

    def coefficient(self, key) -> int:
        return self.terms.get(tuple(tuple(lam) for lam in key), 0)

    def __eq__(self, other) -> bool:
        if not isinstance(other, PartitionSeries):
            return NotImplemented
        return (self.k, self.n, self.terms) == (other.k, other.n, other.terms)

    def __len__(self) -> int:
        return len(self.terms)

    def __repr__(self):
        return f"PartitionSeries(k={self.k}, n={self.n}, terms={len(self.terms)}, bound={self.bound})"

    def difference(self, other: "PartitionSeries") -> list:
        """Exponents where the two series disagree, with both coefficients."""
        keys = sorted(set(self.terms) | set(other.terms))
        return [(key, self.coefficient(key), other.coefficient(key)) for key in keys
                if self.coefficient(key) != other.coefficient(key)]

    def to_json(self) -> list:
        return [{"exps": [list(lam) for lam in key], "coef": c} for key, c in sorted(self.terms.items())]


def _min_bound(a, b):
    if a is None:
        return b
    if b is None:
        return a
    return min(a, b)


def sum_series(items: Iterable[PartitionSeries], k: int, n: int, bound: int | None = None) -> PartitionSeries:
    out = PartitionSeries(k, n, bound=bound)
    for s in items:
        for key, c in s.terms.items():
            out.add_term(key, c)
    return out
