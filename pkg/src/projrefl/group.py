"""Elements and arithmetic of the projective reflection groups G(r,p,q,n).

An element of G(r,p,q,n) = G(r,p,n)/C_q is stored as a permutation together
with a color vector.  Permutations are 0-indexed internally (``sigma[i]`` is the
image of ``i``); the text form used for I/O is 1-indexed.  Colors are residues
modulo r, and among the q color vectors representing the same coset (obtained
by adding multiples of r/q to every color) the lexicographically least one is
stored.

Products compose left to right: in ``a * b`` the permutation of ``a`` is
applied first, which matches multiplication of the monomial matrices whose
i-th row carries ``zeta_r ** colors[i]`` in column ``sigma[i]``.
"""

from __future__ import annotations

import itertools
import os
from dataclasses import dataclass
from math import factorial, gcd
from typing import Iterator, Sequence

DEFAULT_CAP = int(os.environ.get("PROJREFL_MAX_ORDER", 10**6))


class ParameterError(ValueError):
    """Raised for invalid group parameters or mismatched operands."""


class CapExceeded(RuntimeError):
    """Raised when an exhaustive enumeration would exceed the configured cap."""


@dataclass(frozen=True, order=True)
class GroupParams:
    r: int
    p: int
    q: int
    n: int

    def __post_init__(self):
        r, p, q, n = self.r, self.p, self.q, self.n
        if min(r, p, q, n) < 1:
            raise ParameterError(f"parameters must be positive, got {(r, p, q, n)}")
        if r % p:
            raise ParameterError(f"p={p} does not divide r={r}")
        if r % q:
            raise ParameterError(f"q={q} does not divide r={r}")
        if (r * n) % (p * q):
            raise ParameterError(f"pq={p * q} does not divide rn={r * n}")

    def order(self) -> int:
        return self.r**self.n * factorial(self.n) // (self.p * self.q)

    def dual(self) -> "GroupParams":
        return GroupParams(self.r, self.q, self.p, self.n)

    @property
    def step(self) -> int:
        """Color shift r/q generating the scalar subgroup C_q."""
        return self.r // self.q

    def as_dict(self) -> dict:
        return {"r": self.r, "p": self.p, "q": self.q, "n": self.n}

    def __str__(self):
        return f"G({self.r},{self.p},{self.q},{self.n})"


def validate_params(r: int, p: int, q: int, n: int) -> GroupParams:
    return GroupParams(r, p, q, n)


def dual_params(params: GroupParams) -> GroupParams:
    return params.dual()


def iter_params(max_r: int, max_n: int, max_order: int | None = None) -> Iterator[GroupParams]:
    """All valid parameter quadruples with r <= max_r and n <= max_n."""
    for r in range(1, max_r + 1):
        for n in range(1, max_n + 1):
            for p in range(1, r + 1):
                for q in range(1, r + 1):
                    if r % p or r % q or (r * n) % (p * q):
                        continue
                    params = GroupParams(r, p, q, n)
                    if max_order is None or params.order() <= max_order:
                        yield params


@dataclass(frozen=True)
class Element:
    params: GroupParams
    sigma: tuple
    colors: tuple

    def __mul__(self, other: "Element") -> "Element":
        return multiply(self, other)

    def __str__(self):
        return format_element(self)


def _canonical_colors(colors: Sequence[int], r: int, step: int) -> tuple:
    # the q shifts move the first color through distinct values mod r, so the
    # lex-least representative is the one whose first color lies in [0, step)
    c0 = colors[0] % r
    shift = c0 - c0 % step
    if shift == 0:
        return tuple(c % r for c in colors)
    return tuple((c - shift) % r for c in colors)


def canonicalize(sigma: Sequence[int], colors: Sequence[int], params: GroupParams) -> Element:
    """Build the canonical element ``[sigma; colors]`` of ``params``.

    ``sigma`` is 0-indexed.  The color sum of the given representative must be
    divisible by p.
    """
    r = params.r
    if len(sigma) != params.n or len(colors) != params.n:
        raise ParameterError(f"expected {params.n} entries")
    if sum(colors) % params.p:
        raise ParameterError(f"color sum {sum(colors)} is not divisible by p={params.p}")
    return Element(params, tuple(sigma), _canonical_colors(colors, r, params.step))


def identity(params: GroupParams) -> Element:
    return Element(params, tuple(range(params.n)), (0,) * params.n)


def multiply(a: Element, b: Element) -> Element:
    if a.params != b.params:
        raise ParameterError(f"cannot multiply elements of {a.params} and {b.params}")
    params = a.params
    sa, sb, cb = a.sigma, b.sigma, b.colors
    sigma = tuple(sb[j] for j in sa)
    colors = [ca + cb[j] for ca, j in zip(a.colors, sa)]
    return Element(params, sigma, _canonical_colors(colors, params.r, params.step))


def inverse(a: Element) -> Element:
    n = a.params.n
    inv = [0] * n
    colors = [0] * n
    for i, j in enumerate(a.sigma):
        inv[j] = i
        colors[j] = -a.colors[i]
    return Element(a.params, tuple(inv), _canonical_colors(colors, a.params.r, a.params.step))


def power(a: Element, e: int) -> Element:
    out = identity(a.params)
    for _ in range(e):
        out = multiply(out, a)
    return out


def representatives(g: Element) -> list:
    """The q color vectors in G(r,p,n) representing ``g``."""
    r, step = g.params.r, g.params.step
    return [tuple((c + j * step) % r for c in g.colors) for j in range(g.params.q)]


def enumerate_group(params: GroupParams, cap: int | None = None) -> Iterator[Element]:
    """Yield every element of ``params`` once, in canonical form.

    Order: permutations lexicographically, then color vectors lexicographically.
    """
    cap = DEFAULT_CAP if cap is None else cap
    if params.order() > cap:
        raise CapExceeded(f"{params} has order {params.order()} > cap {cap}")
    r, p, n, step = params.r, params.p, params.n, params.step
    color_vectors = []
    for first in range(step):
        for rest in itertools.product(range(r), repeat=n - 1):
            if (first + sum(rest)) % p == 0:
                color_vectors.append((first,) + rest)
    for sigma in itertools.permutations(range(n)):
        for colors in color_vectors:
            yield Element(params, sigma, colors)


def liftings(g: Element, p_prime: int) -> list:
    """Representatives of ``g`` in G(r,p',n), as ``(sigma, colors)`` pairs.

    Requires p' | r and GCD(rn/q, p') | p; there are then exactly q*d/p' of them.
    """
    r, p, q, n = g.params.r, g.params.p, g.params.q, g.params.n
    if p_prime < 1 or r % p_prime:
        raise ParameterError(f"p'={p_prime} does not divide r={r}")
    d = gcd(r * n // q, p_prime)
    if p % d:
        raise ParameterError(f"GCD(rn/q, p')={d} does not divide p={p}")
    return [(g.sigma, c) for c in representatives(g) if sum(c) % p_prime == 0]


def scalar_count(params: GroupParams) -> int:
    r, p, q, n = params.r, params.p, params.q, params.n
    return gcd(r * n // (p * q), r // q)


def scalar_elements(params: GroupParams) -> list:
    """Enumerate the scalar classes: identity permutation, constant colors."""
    r, n = params.r, params.n
    found = {
        canonicalize(tuple(range(n)), (c,) * n, params)
        for c in range(r)
        if (c * n) % params.p == 0
    }
    return sorted(found, key=lambda e: e.colors)


def generators(params: GroupParams) -> list:
    """A generating set: adjacent transpositions and two diagonal elements."""
    n = params.n
    gens = []
    for i in range(n - 1):
        sigma = list(range(n))
        sigma[i], sigma[i + 1] = sigma[i + 1], sigma[i]
        gens.append(canonicalize(sigma, (0,) * n, params))
    ident = tuple(range(n))
    gens.append(canonicalize(ident, (params.p % params.r,) + (0,) * (n - 1), params))
    if n >= 2:
        gens.append(canonicalize(ident, (1, -1) + (0,) * (n - 2), params))
    return gens


def center(params: GroupParams, cap: int | None = None) -> list:
    gens = generators(params)
    return [
        g for g in enumerate_group(params, cap)
        if all(multiply(g, s) == multiply(s, g) for s in gens)
    ]


def is_isomorphic_to_dual(params: GroupParams) -> bool:
    if params.n == 2:
        raise ParameterError("the dual-isomorphism criterion does not apply for n = 2")
    r, p, q, n = params.r, params.p, params.q, params.n
    m = r * n // (p * q)
    return gcd(m, r // q) == gcd(m, r // p)


def color_sum(g: Element) -> int:
    r, q, n = g.params.r, g.params.q, g.params.n
    return sum(g.colors) % gcd(r, r * n // q)


def conjugate_element(g: Element) -> Element:
    """Entrywise complex conjugation of the monomial matrix."""
    return canonicalize(g.sigma, tuple(-c for c in g.colors), g.params)


def galois_act(g: Element, d: int) -> Element:
    """Apply the Galois automorphism zeta_r -> zeta_r**d entrywise."""
    r = g.params.r
    if gcd(d, r) != 1:
        raise ParameterError(f"d={d} is not coprime to r={r}")
    return canonicalize(g.sigma, tuple(c * d for c in g.colors), g.params)


# -- text / JSON forms -------------------------------------------------------

def parse_params(text: str) -> GroupParams:
    try:
        r, p, q, n = (int(x) for x in text.replace(" ", "").split(","))
    except ValueError:
        raise ParameterError(f"expected 'r,p,q,n', got {text!r}") from None
    return GroupParams(r, p, q, n)


def parse_element(text: str, params: GroupParams) -> Element:
    """Parse ``"s1 s2 ... sn; c1 c2 ... cn"`` (1-indexed permutation)."""
    try:
        perm_part, color_part = text.split(";")
        sigma = [int(x) - 1 for x in perm_part.split()]
        colors = [int(x) for x in color_part.split()]
    except ValueError:
        raise ParameterError(f"malformed element {text!r}") from None
    if sorted(sigma) != list(range(params.n)):
        raise ParameterError(f"{text!r} does not contain a permutation of 1..{params.n}")
    return canonicalize(sigma, colors, params)


def format_element(g: Element) -> str:
    return " ".join(str(s + 1) for s in g.sigma) + "; " + " ".join(map(str, g.colors))


def element_to_json(g: Element) -> dict:
    return {"sigma": [s + 1 for s in g.sigma], "colors": list(g.colors)}


def element_from_json(data: dict, params: GroupParams) -> Element:
    return canonicalize([s - 1 for s in data["sigma"]], data["colors"], params)
