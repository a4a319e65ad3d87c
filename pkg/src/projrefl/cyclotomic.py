"""Exact arithmetic in Z[zeta_r], reduced modulo the r-th cyclotomic polynomial."""

from __future__ import annotations

from functools import lru_cache


def _polydiv_exact(num: list, den: list) -> list:
    """Exact division of integer polynomials (low degree first); den monic."""
    num = list(num)
    out = [0] * (len(num) - len(den) + 1)
    for i in range(len(out) - 1, -1, -1):
        c = num[i + len(den) - 1]
        out[i] = c
        for j, d in enumerate(den):
            num[i + j] -= c * d
    if any(num[: len(den) - 1]):
        raise ArithmeticError("division is not exact")
    return out


@lru_cache(maxsize=None)
def cyclotomic_polynomial(r: int) -> tuple:
    """Coefficients of Phi_r, lowest degree first."""
    poly = [-1] + [0] * (r - 1) + [1]
    for d in range(1, r):
        if r % d == 0:
            poly = _polydiv_exact(poly, list(cyclotomic_polynomial(d)))
    return tuple(poly)


def _reduce(coeffs: list, r: int) -> tuple:
    phi = cyclotomic_polynomial(r)
    deg = len(phi) - 1
    c = list(coeffs)
    for i in range(len(c) - 1, deg - 1, -1):
        lead = c[i]
        if lead:
            for j in range(deg + 1):
                c[i - deg + j] -= lead * phi[j]
    c = c[:deg] + [0] * max(0, deg - len(c))
    return tuple(c)


class Cyclotomic:
    """An element sum_i coeffs[i] * zeta_r**i with deg < deg Phi_r."""

    __slots__ = ("r", "coeffs")

    def __init__(self, r: int, coeffs=()):
        self.r = r
        self.coeffs = _reduce(list(coeffs), r)

    @classmethod
    def zeta(cls, r: int, e: int = 1) -> "Cyclotomic":
        e %= r
        return cls(r, [0] * e + [1])

    @classmethod
    def integer(cls, r: int, m: int) -> "Cyclotomic":
        return cls(r, [m])

    def _check(self, other):
        if isinstance(other, int):
            return Cyclotomic.integer(self.r, other)
        if other.r != self.r:
            raise ValueError(f"moduli differ: {self.r} vs {other.r}")
        return other

    def __add__(self, other):
        other = self._check(other)
        return Cyclotomic(self.r, [a + b for a, b in zip(self.coeffs, other.coeffs)])

    __radd__ = __add__

    def __neg__(self):
        return Cyclotomic(self.r, [-a for a in self.coeffs])

    def __sub__(self, other):
        return self + (-self._check(other))

    def __rsub__(self, other):
        return self._check(other) - self

    def __mul__(self, other):
        other = self._check(other)
        a, b = self.coeffs, other.coeffs
        prod = [0] * (len(a) + len(b) - 1)
        for i, x in enumerate(a):
            if x:
                for j, y in enumerate(b):
                    prod[i + j] += x * y
        return Cyclotomic(self.r, prod)

    __rmul__ = __mul__

    def galois(self, d: int) -> "Cyclotomic":
        """Apply zeta -> zeta**d."""
        r = self.r
        out = [0] * r
        for i, x in enumerate(self.coeffs):
            out[(i * d) % r] += x
        return Cyclotomic(r, out)

    def conj(self) -> "Cyclotomic":
        return self.galois(self.r - 1)

    def is_integer(self) -> bool:
        return not any(self.coeffs[1:])

    def as_integer(self) -> int:
        if not self.is_integer():
            raise ValueError(f"{self!r} is not a rational integer")
        return self.coeffs[0]

    def is_zero(self) -> bool:
        return not any(self.coeffs)

    def __eq__(self, other):
        if isinstance(other, int):
            return self.is_integer() and self.coeffs[0] == other
        if not isinstance(other, Cyclotomic):
            return NotImplemented
        return self.r == other.r and self.coeffs == other.coeffs

    def __hash__(self):
        return hash((self.r, self.coeffs))

    def __complex__(self):
        import cmath

        w = cmath.exp(2j * cmath.pi / self.r)
        return sum(c * w**i for i, c in enumerate(self.coeffs))

    def __repr__(self):
        return f"Cyclotomic({self.r}, {list(self.coeffs)})"


def zeta_sum(r: int, counts) -> Cyclotomic:
    """sum_e counts[e] * zeta_r**e for a length-r count vector."""
    return Cyclotomic(r, counts)
