"""Independent reference computations used to freeze expected values.

Nothing here calls the package's algorithms; each oracle recomputes its
quantity from a different formula or by brute force.
"""

from __future__ import annotations

import cmath
import itertools
from collections import Counter
from fractions import Fraction
from math import factorial, prod


# -- monomial matrices -------------------------------------------------------

def monomial_matrix(sigma, colors, r):
    """Row i has zeta_r**colors[i] in column sigma[i]."""
    n = len(sigma)
    w = cmath.exp(2j * cmath.pi / r)
    M = [[0j] * n for _ in range(n)]
    for i in range(n):
        M[i][sigma[i]] = w ** (colors[i] % r)
    return M


def matmul(A, B):
    n = len(A)
    return [[sum(A[i][t] * B[t][j] for t in range(n)) for j in range(n)] for i in range(n)]


def close(A, B, eps=1e-9):
    return all(abs(a - b) < eps for ra, rb in zip(A, B) for a, b in zip(ra, rb))


def same_coset(A, B, r, q):
    """A equals B times some scalar in C_q."""
    w = cmath.exp(2j * cmath.pi / r)
    step = r // q
    return any(close(A, [[w ** (j * step) * x for x in row] for row in B]) for j in range(q))


# -- symmetric-group characters by the Frobenius formula ----------------------

def _poly_mul(a, b):
    out = Counter()
    for ea, ca in a.items():
        for eb, cb in b.items():
            out[tuple(x + y for x, y in zip(ea, eb))] += ca * cb
    return {e: c for e, c in out.items() if c}


def frobenius_character(lam, mu):
    """chi^lam(mu) as the coefficient of x^(lam + delta) in a_delta * prod p_{mu_i}."""
    m = max(len(lam), 1)
    lam = tuple(lam) + (0,) * (m - len(lam))
    # Vandermonde a_delta = sum_w sgn(w) x^{w(delta)}
    delta = tuple(range(m - 1, -1, -1))
    vander = {}
    for perm in itertools.permutations(range(m)):
        inv = sum(1 for i in range(m) for j in range(i + 1, m) if perm[i] > perm[j])
        e = tuple(delta[perm[i]] for i in range(m))
        vander[e] = (-1) ** inv
    poly = vander
    for part in mu:
        ps = {tuple(part if i == j else 0 for j in range(m)): 1 for i in range(m)}
        poly = _poly_mul(poly, ps)
    target = tuple(a + b for a, b in zip(lam, delta))
    return poly.get(target, 0)


def hook_length_count(lam):
    """f^lam by the hook length formula."""
    n = sum(lam)
    conj = [sum(1 for x in lam if x > j) for j in range(lam[0])] if lam else []
    hooks = 1
    for i, row in enumerate(lam):
        for j in range(row):
            hooks *= (row - j - 1) + (conj[j] - i - 1) + 1
    return factorial(n) // hooks


def multi_tableau_count(shape):
    """Standard fillings of an r-tuple of diagrams: multinomial times f's."""
    sizes = [sum(lam) for lam in shape]
    n = sum(sizes)
    mult = factorial(n)
    for s in sizes:
        mult //= factorial(s)
    return mult * prod(hook_length_count(lam) if lam else 1 for lam in shape)


# -- classical statistics ----------------------------------------------------

def major_index_distribution(n):
    out = Counter()
    for w in itertools.permutations(range(n)):
        out[sum(i + 1 for i in range(n - 1) if w[i] > w[i + 1])] += 1
    return dict(sorted(out.items()))


def invariant_product(r, p, q, n):
    """prod_{i<n} [ri]_t * [rn/p]_t restricted to exponents divisible by q."""
    poly = {0: 1}
    for m in [r * i for i in range(1, n)] + [r * n // p]:
        new = Counter()
        for e, c in poly.items():
            for t in range(m):
                new[e + t] += c
        poly = dict(new)
    return {e: c for e, c in sorted(poly.items()) if e % q == 0}


# -- B_2 = G(2,1,1,2) explicit representations --------------------------------

def b2_elements():
    """(sigma, colors) for all 8 signed permutations of two letters."""
    return [(s, c) for s in itertools.permutations(range(2)) for c in itertools.product(range(2), repeat=2)]


def b2_character(label, sigma, colors):
    """Traces of explicit matrices for the five irreducibles of B_2."""
    perm_sign = 1 if sigma == (0, 1) else -1
    color_sign = (-1) ** (sum(colors) % 2)
    if label == "trivial":
        return 1
    if label == "perm_sign":
        return perm_sign
    if label == "color_sign":
        return color_sign
    if label == "both_signs":
        return perm_sign * color_sign
    if label == "defining":
        # monomial matrix with entries (-1)**c_i at (i, sigma_i)
        return sum((-1) ** colors[i] for i in range(2) if sigma[i] == i)
    raise KeyError(label)


B2_LABELS = {
    "trivial": ((2,), ()),
    "perm_sign": ((1, 1), ()),
    "color_sign": ((), (2,)),
    "both_signs": ((), (1, 1)),
    "defining": ((1,), (1,)),
}


def b2_kronecker(labels):
    total = Fraction(0)
    for sigma, colors in b2_elements():
        total += prod(b2_character(lab, sigma, colors) for lab in labels)
    return total / 8


# -- S_3 character table -----------------------------------------------------

S3_TABLE = {
    # classes: identity (1), transpositions (3), 3-cycles (2)
    (3,): (1, 1, 1),
    (2, 1): (2, 0, -1),
    (1, 1, 1): (1, -1, 1),
}
S3_CLASS_SIZES = (1, 3, 2)


def s3_kronecker(a, b, c):
    total = sum(m * S3_TABLE[a][i] * S3_TABLE[b][i] * S3_TABLE[c][i] for i, m in enumerate(S3_CLASS_SIZES))
    return Fraction(total, 6)


# -- brute-force averaging ---------------------------------------------------

def brute_average(A, r, p, n):
    """Orbit sum of X^A over G(r,p,n), element by element, as complex numbers."""
    w = cmath.exp(2j * cmath.pi / r)
    out = Counter()
    for sigma in itertools.permutations(range(n)):
        for colors in itertools.product(range(r), repeat=n):
            if sum(colors) % p:
                continue
            coef = 1
            image = [[0] * n for _ in A]
            for j in range(n):
                for i, row in enumerate(A):
                    image[i][sigma[j]] = row[j]
                coef *= w ** (colors[j] * sum(row[j] for row in A))
            out[tuple(map(tuple, image))] += coef
    return {k: v for k, v in out.items() if abs(v) > 1e-9}
