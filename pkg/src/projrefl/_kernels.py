"""Compiled exhaustive check of the Phi bijection over a box of matrices.

The pure-Python ``phi`` / ``phi_inverse`` pair handles one matrix at a time;
this kernel walks every k-partite matrix with entries <= E in one compiled
loop so boxes with ~10^8 matrices stay tractable.  Tests pin it to the
Python path on boxes small enough for both.
"""

from __future__ import annotations

import numpy as np
from numba import njit


@njit(cache=True)
def _check_box(k, n, E, r, p, q, stop_at_first, quotient):
    base = E + 1
    M = base**k
    digits = np.empty((M, k), dtype=np.int64)
    for c in range(M):
        x = c
        for t in range(k - 1, -1, -1):
            digits[c, t] = x % base
            x //= base
    step_dual = r // quotient  # quotient = p: the C_p quotient of G* = G(r,q,p,n)

    seq = np.full(n, M - 1, dtype=np.int64)
    A = np.empty((k, n), dtype=np.int64)
    taus = np.empty((k + 1, n), dtype=np.int64)
    order = np.empty(n, dtype=np.int64)
    keys = np.empty(n, dtype=np.int64)
    lam = np.empty((k, n), dtype=np.int64)
    sig = np.empty((k, n), dtype=np.int64)
    lam_g = np.empty(n, dtype=np.int64)
    hh = np.empty(n, dtype=np.int64)
    kk = np.empty(n, dtype=np.int64)
    tau = np.empty(n, dtype=np.int64)
    prodc = np.empty(n, dtype=np.int64)

    checked = 0
    failures = 0
    witness = np.full(k * n, -1, dtype=np.int64)
    while True:
        for j in range(n):
            for t in range(k):
                A[t, j] = digits[seq[j], t]
        member = True
        for t in range(k):
            s = 0
            for j in range(n):
                s += A[t, j]
            if s % q != 0:
                member = False
        if member and n > 0:
            s0 = 0
            for t in range(k):
                s0 += A[t, 0]
            for j in range(n):
                s = 0
                for t in range(k):
                    s += A[t, j]
                if (s - s0) % r != 0 or (p * s) % r != 0:
                    member = False
        if member:
            checked += 1
            ok = True
            # taus[i] ranks columns by rows i..k-1 descending, ties by index
            for j in range(n):
                taus[k, j] = j
            for i in range(k - 1, -1, -1):
                for j in range(n):
                    key = 0
                    for t in range(i, k):
                        key = key * base + A[t, j]
                    keys[j] = key
                    order[j] = j
                for a in range(1, n):
                    b = a
                    while b > 0 and keys[order[b - 1]] < keys[order[b]]:
                        tmp = order[b - 1]
                        order[b - 1] = order[b]
                        order[b] = tmp
                        b -= 1
                for rank in range(n):
                    taus[i, order[rank]] = rank
            for j in range(n):
                if taus[0, j] != j:
                    ok = False
            for i in range(k):
                for j in range(n):
                    lam[i, taus[i, j]] = A[i, j]
                    sig[i, taus[i, j]] = taus[i + 1, j]
                # statistics of g_i = [sig_i; lam_i] in G*
                for j in range(n):
                    hh[j] = 0
                kk[n - 1] = lam[i, n - 1] % step_dual
                for j in range(n - 2, -1, -1):
                    d = 0
                    if (lam[i, j] - lam[i, j + 1]) % r == 0 and sig[i, j] > sig[i, j + 1]:
                        d = 1
                    hh[j] = hh[j + 1] + d
                    kk[j] = kk[j + 1] + (lam[i, j] - lam[i, j + 1]) % r
                for j in range(n):
                    lam_g[j] = r * hh[j] + kk[j]
                # lambda - lambda(g) must be a partition in Par(r, p, n)
                res0 = (lam[i, 0] - lam_g[0]) % r
                if res0 % step_dual != 0:
                    ok = False
                for j in range(n):
                    diff = lam[i, j] - lam_g[j]
                    if diff < 0 or diff % r != res0:
                        ok = False
                    if j + 1 < n and diff < lam[i, j + 1] - lam_g[j + 1]:
                        ok = False
            # product g_1 ... g_k (left to right) must be a C_p scalar class
            for j in range(n):
                tau[j] = j
                prodc[j] = 0
            for i in range(k):
                for j in range(n):
                    prodc[j] += lam[i, tau[j]]
                    tau[j] = sig[i, tau[j]]
            for j in range(n):
                if tau[j] != j:
                    ok = False
                if (prodc[j] - prodc[0]) % r != 0 or (prodc[j] % r) % step_dual != 0:
                    ok = False
            # Phi of the recovered tuple reproduces A
            for j in range(n):
                tau[j] = j
            for i in range(k):
                for j in range(n):
                    if lam[i, tau[j]] != A[i, j]:
                        ok = False
                for j in range(n):
                    tau[j] = sig[i, tau[j]]
            if not ok:
                failures += 1
                if witness[0] < 0:
                    for t in range(k):
                        for j in range(n):
                            witness[t * n + j] = A[t, j]
                if stop_at_first:
                    break
        # next non-increasing sequence of column codes
        pos = n - 1
        while pos >= 0 and seq[pos] == 0:
            pos -= 1
        if pos < 0:
            break
        seq[pos] -= 1
        for j in range(pos + 1, n):
            seq[j] = seq[pos]
    return checked, failures, witness


def check_phi_box(params, k: int, max_entry: int, stop_at_first: bool = False, quotient: int | None = None):
    """Exhaustively round-trip Phi on B_k(params) with entries <= max_entry.

    Returns ``(checked, failures, witness)`` where ``witness`` is the first
    failing matrix (or ``None``).  ``quotient`` overrides the quotient used
    for the G* statistics (default p); tests use it to confirm that a wrong
    convention is detected.
    """
    quotient = params.p if quotient is None else quotient
    checked, failures, w = _check_box(
        k, params.n, max_entry, params.r, params.p, params.q, stop_at_first, quotient
    )
    witness = None
    if failures:
        flat = [int(x) for x in w]
        witness = tuple(tuple(flat[t * params.n:(t + 1) * params.n]) for t in range(k))
    return int(checked), int(failures), witness
