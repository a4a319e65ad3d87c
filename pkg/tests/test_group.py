import random
from math import factorial

import pytest
from hypothesis import given
from hypothesis import strategies as st

from oracles import monomial_matrix, matmul, same_coset
from projrefl.group import (
    CapExceeded,
    GroupParams,
    ParameterError,
    canonicalize,
    center,
    color_sum,
    conjugate_element,
    dual_params,
    element_from_json,
    element_to_json,
    enumerate_group,
    format_element,
    galois_act,
    generators,
    identity,
    inverse,
    is_isomorphic_to_dual,
    iter_params,
    liftings,
    multiply,
    parse_element,
    parse_params,
    power,
    representatives,
    scalar_count,
    scalar_elements,
    validate_params,
)

SMALL = list(iter_params(6, 4, 5000))


@st.composite
def elements(draw, pool=tuple(iter_params(6, 4, 5000))):
    params = draw(st.sampled_from(pool))
    sigma = draw(st.permutations(range(params.n)))
    colors = [draw(st.integers(0, params.r - 1)) for _ in range(params.n - 1)]
    last = draw(st.integers(0, params.r - 1))
    # adjust the last color so the sum is divisible by p
    last = (last - (sum(colors) + last) % params.p) % params.r
    return canonicalize(sigma, colors + [last], params)


def el(params, sigma1, colors):
    return canonicalize([s - 1 for s in sigma1], colors, params)


def test_validate_examples():
    g = validate_params(6, 2, 3, 8)
    assert g.order() == 6**8 * factorial(8) // 6
    assert validate_params(1, 1, 1, 3).order() == 6
    with pytest.raises(ParameterError, match="pq=8 does not divide rn=4"):
        validate_params(4, 2, 4, 1)


def test_validate_names_condition():
    with pytest.raises(ParameterError, match="p=4 does not divide r=6"):
        GroupParams(6, 4, 1, 2)
    with pytest.raises(ParameterError, match="q=4 does not divide r=6"):
        GroupParams(6, 1, 4, 2)
    with pytest.raises(ParameterError, match="positive"):
        GroupParams(0, 1, 1, 1)


def test_multiply_examples():
    B2 = GroupParams(2, 1, 1, 2)
    a = el(B2, (2, 1), (0, 1))
    b = el(B2, (2, 1), (1, 0))
    assert multiply(a, b) == identity(B2)
    assert multiply(identity(B2), a) == a
    with pytest.raises(ParameterError):
        multiply(a, identity(GroupParams(2, 2, 1, 2)))


def test_associativity_matrix_oracle():
    params = GroupParams(4, 2, 2, 2)
    elems = list(enumerate_group(params))
    rng = random.Random(7)
    for _ in range(200):
        a, b, c = (rng.choice(elems) for _ in range(3))
        assert multiply(multiply(a, b), c) == multiply(a, multiply(b, c))


@pytest.mark.parametrize("params", [GroupParams(4, 2, 2, 2), GroupParams(3, 1, 3, 3), GroupParams(6, 2, 3, 2)])
def test_multiply_matches_monomial_matrices(params):
    elems = list(enumerate_group(params))
    rng = random.Random(1)
    for _ in range(100):
        a, b = rng.choice(elems), rng.choice(elems)
        ab = multiply(a, b)
        prod = matmul(monomial_matrix(a.sigma, a.colors, params.r), monomial_matrix(b.sigma, b.colors, params.r))
        assert same_coset(prod, monomial_matrix(ab.sigma, ab.colors, params.r), params.r, params.q)


def test_inverse_examples():
    B2 = GroupParams(2, 1, 1, 2)
    assert inverse(identity(B2)) == identity(B2)
    assert inverse(el(B2, (2, 1), (0, 1))) == el(B2, (2, 1), (1, 0))
    params = GroupParams(6, 1, 1, 3)
    scalar = el(params, (1, 2, 3), (2, 2, 2))
    assert inverse(scalar) == el(params, (1, 2, 3), (4, 4, 4))


def test_canonicalize_examples():
    assert el(GroupParams(2, 1, 2, 2), (1, 2), (1, 1)).colors == (0, 0)
    assert el(GroupParams(4, 1, 2, 2), (1, 2), (3, 1)).colors == (1, 3)
    assert el(GroupParams(5, 1, 1, 3), (3, 1, 2), (4, 0, 2)).colors == (4, 0, 2)
    with pytest.raises(ParameterError, match="not divisible by p=2"):
        el(GroupParams(2, 2, 1, 2), (1, 2), (1, 0))


@given(elements())
def test_canonical_is_lex_least(g):
    assert g.colors == min(representatives(g))


def test_enumerate_counts():
    for params in iter_params(4, 4):
        elems = list(enumerate_group(params))
        assert len(elems) == params.order()
        assert len(set(elems)) == len(elems)
    assert GroupParams(6, 2, 3, 8).order() == 6**8 * factorial(8) // 6


def test_enumerate_small_lists():
    assert len(list(enumerate_group(GroupParams(1, 1, 1, 3)))) == 6
    assert len(list(enumerate_group(GroupParams(2, 1, 2, 2)))) == 4


def test_enumerate_cap():
    with pytest.raises(CapExceeded):
        next(enumerate_group(GroupParams(6, 2, 3, 8)))
    with pytest.raises(CapExceeded):
        next(enumerate_group(GroupParams(2, 1, 1, 3), cap=10))


@pytest.mark.parametrize("params", [p for p in SMALL if p.order() <= 1000])
def test_group_axioms(params):
    elems = set(enumerate_group(params))
    one = identity(params)
    assert one in elems
    for g in elems:
        assert multiply(g, inverse(g)) == one
        assert multiply(one, g) == g == multiply(g, one)
    for s in generators(params):
        for g in elems:
            assert multiply(g, s) in elems


def test_liftings_examples():
    g = el(GroupParams(4, 2, 2, 2), (2, 1), (1, 1))
    assert len(liftings(g, 2)) == 2
    assert len(liftings(g, 1)) == 2
    g = el(GroupParams(2, 1, 2, 2), (1, 2), (0, 0))
    with pytest.raises(ParameterError, match="does not divide p=1"):
        liftings(g, 2)
    with pytest.raises(ParameterError):
        liftings(g, 3)


@given(elements())
def test_liftings_count(g):
    r, p, q, n = g.params.r, g.params.p, g.params.q, g.params.n
    from math import gcd

    for pp in range(1, r + 1):
        if r % pp or p % gcd(r * n // q, pp):
            continue
        lifts = liftings(g, pp)
        assert len(lifts) == q * gcd(r * n // q, pp) // pp
        assert all(sum(c) % pp == 0 for _, c in lifts)


def test_dual_examples():
    assert dual_params(GroupParams(2, 2, 1, 5)) == GroupParams(2, 1, 2, 5)
    assert dual_params(GroupParams(3, 1, 1, 4)) == GroupParams(3, 1, 1, 4)
    for params in SMALL:
        assert dual_params(dual_params(params)) == params


def test_scalar_count_examples():
    for n in range(1, 9):
        assert scalar_count(GroupParams(2, 2, 1, n)) == (2 if n % 2 == 0 else 1)
        assert scalar_count(GroupParams(2, 1, 2, n)) == 1
        assert scalar_count(GroupParams(1, 1, 1, n)) == 1


@pytest.mark.parametrize("params", [p for p in SMALL if p.order() <= 2000])
def test_scalar_count_enumerated(params):
    assert len(scalar_elements(params)) == scalar_count(params)
    if params.n > 2:
        assert sorted(center(params), key=lambda g: g.colors) == scalar_elements(params)


def test_isomorphism_examples():
    for n in (1, 3, 4, 5, 6):
        assert is_isomorphic_to_dual(GroupParams(2, 2, 1, n)) == (n % 2 == 1)
    for r in range(1, 6):
        assert is_isomorphic_to_dual(GroupParams(r, 1, 1, 3))
    assert is_isomorphic_to_dual(GroupParams(6, 2, 3, 8)) is False
    with pytest.raises(ParameterError, match="n = 2"):
        is_isomorphic_to_dual(GroupParams(2, 2, 1, 2))


def test_color_sum_examples():
    params = GroupParams(6, 2, 3, 8)
    g = el(params, (2, 7, 6, 4, 8, 1, 5, 3), (2, 3, 3, 5, 1, 7, 3, 2))
    assert color_sum(g) == 0
    assert color_sum(identity(params)) == 0
    scalar = el(GroupParams(6, 1, 3, 2), (1, 2), (2, 2))
    assert scalar == identity(GroupParams(6, 1, 3, 2))


@given(elements())
def test_color_sum_divisible_by_p(g):
    assert color_sum(g) % g.params.p == 0


def test_conjugate_examples():
    assert conjugate_element(el(GroupParams(4, 1, 1, 2), (1, 2), (1, 3))) == el(GroupParams(4, 1, 1, 2), (1, 2), (3, 1))
    for g in enumerate_group(GroupParams(2, 1, 1, 3)):
        assert conjugate_element(g) == g


@given(elements())
def test_conjugate_involution(g):
    assert conjugate_element(conjugate_element(g)) == g
    assert galois_act(g, g.params.r - 1) == conjugate_element(g) or g.params.r == 1


def test_galois_examples():
    params = GroupParams(4, 1, 1, 2)
    assert galois_act(el(params, (1, 2), (1, 0)), 3) == el(params, (1, 2), (3, 0))
    g = el(params, (2, 1), (1, 2))
    assert galois_act(g, 1) == g
    with pytest.raises(ParameterError, match="not coprime"):
        galois_act(g, 2)


@pytest.mark.parametrize("params", [p for p in iter_params(6, 4, 2000)])
def test_galois_automorphism(params):
    from math import gcd

    elems = list(enumerate_group(params))
    gens = generators(params)
    for d in (d for d in range(1, params.r + 1) if gcd(d, params.r) == 1):
        images = {galois_act(g, d) for g in elems}
        assert len(images) == len(elems)
        for a in elems:
            for s in gens:
                assert galois_act(multiply(a, s), d) == multiply(galois_act(a, d), galois_act(s, d))


def test_power_order_divides():
    params = GroupParams(3, 1, 3, 3)
    for g in enumerate_group(params):
        assert power(g, params.order()) == identity(params)


def test_text_and_json_roundtrip():
    params = parse_params("6,2,3,8")
    g = parse_element("2 7 6 4 8 1 5 3; 2 3 3 5 1 7 3 2", params)
    assert parse_element(format_element(g), params) == g
    assert element_from_json(element_to_json(g), params) == g
    assert element_to_json(identity(GroupParams(1, 1, 1, 2))) == {"sigma": [1, 2], "colors": [0, 0]}


@pytest.mark.parametrize("text", ["1 2", "1 1; 0 0", "a b; 0 0", "1 2 3; 0 0 0"])
def test_parse_element_rejects(text):
    with pytest.raises(ParameterError):
        parse_element(text, GroupParams(2, 1, 1, 2))


def test_parse_params_rejects():
    with pytest.raises(ParameterError, match="r,p,q,n"):
        parse_params("1,2,3")
