"""Exhaustive identity suites and the structured verification report.

Each suite returns a list of check records ``{name, params, status, witness,
ms}``; ``run_verify`` merges them sorted by (name, params) so the report is
reproducible.  ``witness`` holds the first counterexample found, or ``None``.
"""

from __future__ import annotations

import itertools
import json
import time
from math import gcd

from .characters import (
    class_sizes,
    coarse_kronecker,
    conjugate_shape,
    cycle_type,
    maincomb_check,
    wreath_character,
)
from .diagonal import average_monomial, column_conditions, count_basis, uou_check
from .galois import gsigma_check, units
from .group import (
    GroupParams,
    canonicalize,
    center,
    enumerate_group,
    is_isomorphic_to_dual,
    iter_params,
    liftings,
    scalar_count,
    scalar_elements,
)
from .rs import projective_rs, rs_fibers
from .stats import a_exponents, classical_fmaj, fmaj_generating_poly, invariant_degree_series, stat_profile
from .tableaux import (
    class_tableaux,
    enumerate_fer,
    enumerate_fer_classes,
    enumerate_tableaux,
    in_fer,
    multipartitions,
    shape_class,
    shift,
    shift_tableau,
)

REPORT_VERSION = 1

DEFAULTS = {
    "max_r": 6,
    "max_order": None,
    "bound": 8,
    "timing": True,
}


def _jsonable(x):
    if isinstance(x, dict):
        return {str(k): _jsonable(v) for k, v in x.items()}
    if isinstance(x, (list, tuple, set, frozenset)):
        items = sorted(x) if isinstance(x, (set, frozenset)) else x
        return [_jsonable(v) for v in items]
    if hasattr(x, "to_json"):
        return _jsonable(x.to_json())
    if hasattr(x, "sigma") and hasattr(x, "colors"):
        return {"sigma": [s + 1 for s in x.sigma], "colors": list(x.colors)}
    if isinstance(x, (int, str, float, bool)) or x is None:
        return x
    return repr(x)


class _Check:
    """Collects the first witness for one (suite, params) record."""

    def __init__(self, name: str, params: dict):
        self.name = name
        self.params = params
        self.witness = None
        self.failed = False
        self.start = time.perf_counter()

    def fail(self, witness) -> None:
        if not self.failed:
            self.failed = True
            self.witness = witness

    def record(self, timing: bool) -> dict:
        ms = round((time.perf_counter() - self.start) * 1000, 3) if timing else 0
        return {
            "name": self.name,
            "params": _jsonable(self.params),
            "status": "fail" if self.failed else "pass",
            "witness": _jsonable(self.witness),
            "ms": ms,
        }


def _cap(config: dict, default: int) -> int:
    m = config.get("max_order")
    return default if m is None else min(default, m)


def _groups(config: dict, max_n: int, default_order: int, ns=None):
    max_r = config.get("max_r", DEFAULTS["max_r"])
    for params in iter_params(max_r, max_n, _cap(config, default_order)):
        if ns is None or params.n in ns:
            yield params


# -- group layer -------------------------------------------------------------

def suite_represe(config):
    out = []
    for params in _groups(config, 4, 5000, ns=(1, 3, 4)):
        chk = _Check("represe", params.as_dict())
        r, p, q, n = params.r, params.p, params.q, params.n
        admissible = [pp for pp in range(1, r + 1) if r % pp == 0 and p % gcd(r * n // q, pp) == 0]
        for g in enumerate_group(params):
            for pp in admissible:
                want = q * gcd(r * n // q, pp) // pp
                got = len(liftings(g, pp))
                if got != want:
                    chk.fail({"element": g, "p_prime": pp, "expected": want, "got": got})
        out.append(chk.record(config["timing"]))
    return out


def suite_scalars(config):
    out = []
    for params in _groups(config, 4, 5000, ns=(1, 3, 4)):
        chk = _Check("scalars", params.as_dict())
        formula = scalar_count(params)
        listed = len(scalar_elements(params))
        if formula != listed:
            chk.fail({"formula": formula, "constant_color_classes": listed})
        if params.n > 2:
            z = len(center(params))
            if z != formula:
                chk.fail({"formula": formula, "center_size": z})
        out.append(chk.record(config["timing"]))
    return out


def suite_isomo(config):
    out = []
    for params in _groups(config, 4, 5000, ns=(1, 3, 4)):
        chk = _Check("isomo", params.as_dict())
        pred = is_isomorphic_to_dual(params)
        same = scalar_count(params) == scalar_count(params.dual())
        if pred != same:
            chk.fail({"predicate": pred, "same_scalar_count": same})
        if params.n > 2 and params.dual().order() <= _cap(config, 5000):
            zs = (len(center(params)), len(center(params.dual())))
            if (zs[0] == zs[1]) != pred:
                chk.fail({"predicate": pred, "center_sizes": zs})
        out.append(chk.record(config["timing"]))
    # type D: G(2,2,1,n) is isomorphic to its dual exactly for odd n
    chk = _Check("isomo", {"family": "G(2,2,1,n)", "n": [1, 3, 4, 5, 6, 7, 8]})
    for n in (1, 3, 4, 5, 6, 7, 8):
        if is_isomorphic_to_dual(GroupParams(2, 2, 1, n)) != (n % 2 == 1):
            chk.fail({"n": n})
    out.append(chk.record(config["timing"]))
    return out


# -- statistics ----------------------------------------------------------------

def suite_oldnew(config):
    out = []
    for r in range(1, min(4, config.get("max_r", 4)) + 1):
        for n in range(1, 5):
            params = GroupParams(r, 1, 1, n)
            if params.order() > _cap(config, 10**6):
                continue
            chk = _Check("oldnew", params.as_dict())
            for g in enumerate_group(params):
                prof = stat_profile(g)
                _, d, _ = classical_fmaj(g)
                for i in range(n):
                    if r * prof.h[i] + prof.k[i] != r * d[i] + g.colors[i] % r:
                        chk.fail({"element": g, "position": i + 1})
                        break
            out.append(chk.record(config["timing"]))
    return out


def suite_deg(config):
    out = []
    max_r = min(6, config.get("max_r", 6))
    for r in range(1, max_r + 1):
        for n in range(1, 4):
            for q in (d for d in range(1, r + 1) if r % d == 0 and (r * n) % d == 0):
                params = GroupParams(r, 1, q, n)
                if params.order() > _cap(config, 10**6):
                    continue
                ps = [p for p in range(1, r + 1) if r % p == 0 and (r * n) % (p * q) == 0]
                chk = _Check("deg", {**params.as_dict(), "p_values": ps})
                for g in enumerate_group(params):
                    fm = stat_profile(g).fmaj
                    deg = sum(a_exponents(g))
                    for p in ps:
                        member = sum(g.colors) % p == 0
                        if not (member == (fm % p == 0) == (deg % p == 0)):
                            chk.fail({"element": g, "p": p})
                out.append(chk.record(config["timing"]))
    return out


def suite_coba(config):
    out = []
    for params in iter_params(min(4, config.get("max_r", 4)), 3, _cap(config, 10**6)):
        chk = _Check("coba", params.as_dict())
        lhs = fmaj_generating_poly(params, over_dual=True)
        rhs = invariant_degree_series(params)
        if lhs != rhs:
            chk.fail({"fmaj_over_dual": lhs, "invariant_degrees": rhs})
        out.append(chk.record(config["timing"]))
    return out


# -- tableaux ------------------------------------------------------------------

def suite_cyc(config):
    out = []
    max_r = min(6, config.get("max_r", 6))
    for r in range(1, max_r + 1):
        for n in range(1, 5):
            chk = _Check("cyc", {"r": r, "n": n})
            shapes = list(multipartitions(r, n))
            for p in (d for d in range(1, r + 1) if r % d == 0):
                for q in (d for d in range(1, r + 1) if r % d == 0):
                    if (r * n) % (p * q):
                        continue
                    for s in shapes:
                        if in_fer(s, p) and not in_fer(shift(s, r // q), p):
                            chk.fail({"shape": s, "p": p, "q": q})
            # no nontrivial shift fixes a standard multitableau
            if r <= 4 and n <= 3:
                for s in shapes:
                    for T in enumerate_tableaux(s):
                        for j in range(1, r):
                            if shift_tableau(T, j, 1) == T:
                                chk.fail({"tableau": T, "shift": j})
            out.append(chk.record(config["timing"]))
    return out


def suite_dimirrep(config):
    out = []
    for params in iter_params(min(3, config.get("max_r", 3)), 3, _cap(config, 10**6)):
        chk = _Check("dimirrep", params.as_dict())
        total = sum(
            mu.stabilizer_order * len(class_tableaux(mu)) ** 2
            for mu in enumerate_fer_classes(params.r, params.q, params.p, params.n)
        )
        if total != params.order():
            chk.fail({"sum": total, "order": params.order()})
        out.append(chk.record(config["timing"]))
    return out


# -- RS ------------------------------------------------------------------------

def suite_projRS(config):
    out = []
    for params in _groups(config, 6, 5000):
        chk = _Check("projRS", params.as_dict())
        elements = list(enumerate_group(params))
        fibers, shapes = rs_fibers(elements)
        total = 0
        for key, size in sorted(fibers.items()):
            mu = shapes[key]
            if size != mu.stabilizer_order:
                chk.fail({"P": key[0], "Q": key[1], "fiber": size, "stabilizer": mu.stabilizer_order})
        classes = enumerate_fer_classes(params.r, params.p, params.q, params.n)
        total = sum(mu.stabilizer_order * len(class_tableaux(mu)) ** 2 for mu in classes)
        if total != params.order():
            chk.fail({"sum": total, "order": params.order()})
        for g in elements:
            base = projective_rs(g)
            for j in range(1, params.q):
                c = tuple((x + j * params.step) % params.r for x in g.colors)
                if projective_rs(g, c) != base:
                    chk.fail({"element": g, "lifting": c})
                    break
        out.append(chk.record(config["timing"]))
    return out


# -- diagonal invariants -----------------------------------------------------

def suite_bije(config):
    from ._kernels import check_phi_box

    out = []
    for params in _groups(config, 6, 200):
        for k in (1, 2, 3):
            chk = _Check("bije", {**params.as_dict(), "k": k, "max_entry": 4})
            checked, failures, witness = check_phi_box(params, k, 4)
            chk.params["matrices"] = checked
            if failures:
                chk.fail({"failures": failures, "matrix": witness})
            out.append(chk.record(config["timing"]))
    return out


def suite_card(config):
    out = []
    for params in _groups(config, 6, 200):
        for k in (1, 2, 3):
            chk = _Check("card", {**params.as_dict(), "k": k})
            got = count_basis(params, k)
            if got != params.order() ** (k - 1):
                chk.fail({"count": got, "expected": params.order() ** (k - 1)})
            out.append(chk.record(config["timing"]))
    return out


def suite_colu(config):
    out = []
    for params in iter_params(min(4, config.get("max_r", 4)), 3, _cap(config, 10**6)):
        for k in (1, 2):
            chk = _Check("colu", {**params.as_dict(), "k": k, "max_entry": 3})
            n = params.n
            for flat in itertools.product(range(4), repeat=k * n):
                A = tuple(tuple(flat[i * n:(i + 1) * n]) for i in range(k))
                if any(sum(row) % params.q for row in A):
                    continue
                verdict, _ = average_monomial(A, params)
                if verdict != column_conditions(A, params):
                    chk.fail({"matrix": A, "average_nonzero": verdict})
            out.append(chk.record(config["timing"]))
    return out


UOU_GROUPS = ((2, 1, 1, 2), (2, 2, 1, 2), (2, 1, 2, 2), (3, 1, 1, 2))


def suite_uou(config):
    out = []
    bound = config.get("bound", 8)
    for t in UOU_GROUPS:
        params = GroupParams(*t)
        chk = _Check("uou", {**params.as_dict(), "k": 2, "bound": bound})
        ok, diff = uou_check(params, 2, bound)
        if not ok:
            chk.fail({"exps": diff[0][0], "diagonal": diff[0][1], "product": diff[0][2]})
        out.append(chk.record(config["timing"]))
    return out


# -- characters ----------------------------------------------------------------

def _wreath_classes(r: int, n: int):
    return class_sizes(r, 1, n)


def suite_characters(config):
    out = []
    for r in range(1, min(3, config.get("max_r", 3)) + 1):
        for n in range(1, 4):
            chk = _Check("characters", {"r": r, "n": n})
            order = GroupParams(r, 1, 1, n).order()
            classes = _wreath_classes(r, n)
            shapes = list(multipartitions(r, n))
            table = {s: [wreath_character(s, t) for t, _ in classes] for s in shapes}
            # first orthogonality
            for a in shapes:
                for b in shapes:
                    val = sum(
                        (x * y.conj() * m for x, y, (_, m) in zip(table[a], table[b], classes)),
                        start=0 * table[a][0],
                    )
                    if val != (order if a == b else 0):
                        chk.fail({"first": [a, b]})
            # second orthogonality
            for i, (t1, m1) in enumerate(classes):
                for j, (t2, m2) in enumerate(classes):
                    val = sum((table[s][i] * table[s][j].conj() for s in shapes), start=0 * table[shapes[0]][0])
                    if val != (order // m1 if i == j else 0):
                        chk.fail({"second": [t1, t2]})
            # dimension and conjugate labels
            ident = tuple((1, 0) for _ in range(n))
            for s in shapes:
                if wreath_character(s, ident) != len(enumerate_tableaux(s)):
                    chk.fail({"dimension": s})
                for idx, (t, _) in enumerate(classes):
                    if wreath_character(conjugate_shape(s), t) != table[s][idx].conj():
                        chk.fail({"conjugate": s, "type": t})
            out.append(chk.record(config["timing"]))
    return out


def suite_maincomb(config):
    out = []
    cases = [(params, 2) for params in _groups(config, 6, 500)]
    cases += [(GroupParams(1, 1, 1, 3), 3), (GroupParams(2, 1, 1, 2), 3)]
    for params, k in cases:
        chk = _Check("maincomb", {**params.as_dict(), "k": k})
        ok, diff = maincomb_check(params, k)
        if not ok:
            chk.fail({"exps": diff[0][0], "lhs": diff[0][1], "rhs": diff[0][2]})
        out.append(chk.record(config["timing"]))
    chk = _Check("maincomb", {"S3_triple": [[2, 1]] * 3})
    mu = shape_class(((2, 1),), 1)
    c = coarse_kronecker(GroupParams(1, 1, 1, 3), [mu, mu, mu])
    if c != 1:
        chk.fail({"coefficient": c})
    out.append(chk.record(config["timing"]))
    return out


def suite_gsig(config):
    out = []
    for params in _groups(config, 6, 2000):
        for d in units(params.r):
            chk = _Check("gsig", {**params.as_dict(), "d": d})
            ok, diff = gsigma_check(params, d)
            if not ok:
                chk.fail({"exps": diff[0][0], "combinatorial": diff[0][1], "representation": diff[0][2]})
            out.append(chk.record(config["timing"]))
    return out


SUITES = {
    "represe": suite_represe,
    "scalars": suite_scalars,
    "isomo": suite_isomo,
    "oldnew": suite_oldnew,
    "deg": suite_deg,
    "coba": suite_coba,
    "cyc": suite_cyc,
    "dimirrep": suite_dimirrep,
    "projRS": suite_projRS,
    "bije": suite_bije,
    "card": suite_card,
    "colu": suite_colu,
    "uou": suite_uou,
    "characters": suite_characters,
    "maincomb": suite_maincomb,
    "gsig": suite_gsig,
}


def run_verify(suite: str, config: dict | None = None, params: GroupParams | None = None) -> dict:
    """Run one suite (or ``"all"``) and return the report dictionary.

    ``params`` restricts group-indexed suites to a single group.
    """
    cfg = {**DEFAULTS, **(config or {})}
    if suite == "all":
        names = sorted(SUITES)
    elif suite in SUITES:
        names = [suite]
    else:
        raise KeyError(f"unknown suite {suite!r}; choose from {', '.join(sorted(SUITES))} or all")
    checks = []
    for name in names:
        if params is not None:
            checks.extend(_single(name, params, cfg))
        else:
            checks.extend(SUITES[name](cfg))
    checks.sort(key=lambda c: (c["name"], json.dumps(c["params"], sort_keys=True)))
    return {"version": REPORT_VERSION, "checks": checks}


def _single(name: str, params: GroupParams, cfg: dict) -> list:
    """Run a suite on one group by filtering its group sweep."""
    scoped = {**cfg, "max_r": params.r, "max_order": max(params.order(), params.dual().order())}
    if name == "uou":
        bound = cfg.get("bound", 8)
        chk = _Check("uou", {**params.as_dict(), "k": 2, "bound": bound})
        ok, diff = uou_check(params, 2, bound)
        if not ok:
            chk.fail({"exps": diff[0][0], "diagonal": diff[0][1], "product": diff[0][2]})
        return [chk.record(cfg["timing"])]
    records = SUITES[name](scoped)
    want = params.as_dict()
    return [c for c in records if all(c["params"].get(key) == v for key, v in want.items())]


def report_ok(report: dict) -> bool:
    return all(c["status"] == "pass" for c in report["checks"])


def dumps(report: dict) -> str:
    return json.dumps(report, sort_keys=True, indent=2) + "\n"
