import json
import random

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from superq.pbw import (
    NAMES,
    AlgebraElement,
    SpecMismatch,
    UnknownPair,
    bracket_k1,
    dim,
    enumerate_basis,
    get_spec,
    random_monomials,
    straighten_pair,
)
from superq.scalar import field


def U(d=3):
    return get_spec("ubar", d)


def c(ctx):
    return (ctx.q(1) - ctx.q(-1)).inverse()


# --------------------------------------------------------------- examples

def test_e1_f1():
    u = U()
    ctx = u.ctx
    want = u.word("f1", "e1") + (u.gen("k1") - u.gen("k1", -1)).scale(c(ctx))
    assert u.gen("e1") * u.gen("f1") == want


def test_f2_f1():
    u = U(5)
    want = u.word("f1", "f2").scale(u.ctx.q(1)) + u.gen("f3")
    assert u.gen("f2") * u.gen("f1") == want


def test_odd_squares_vanish():
    u = U()
    for g in ("e2", "f2", "e3", "f3"):
        assert (u.gen(g) * u.gen(g)).is_zero()


def test_k_inverse():
    for d in (3, 5):
        u = U(d)
        assert u.gen("k1") * u.gen("k1", d - 1) == u.one()
        assert u.gen("k2", -1) == u.gen("k2", d - 1)


def test_straighten_examples():
    u = U(5)
    ctx = u.ctx
    got = straighten_pair(u, "e3", 1, "f3", 1)
    want = -u.word("f3", "e3") + (u.word("k1", "k2") - u.word(("k1", -1), ("k2", -1))).scale(c(ctx))
    assert got == want
    got = straighten_pair(u, "e2", 1, "e1", 1)
    assert got == u.word("e1", "e2").scale(ctx.q(1)) - u.gen("e3").scale(ctx.q(1))
    assert straighten_pair(u, "e2", 1, "f1", 1) == u.word("f1", "e2")
    with pytest.raises(UnknownPair):
        straighten_pair(u, "f1", 1, "e2", 1)


def test_defining_relations():
    """The presentation of the algebra, checked in the normal-form engine."""
    for d in (3, 5, 7):
        u = U(d)
        q = u.ctx.q
        g = u.gen
        k1, k2, e1, e2, f1, f2 = g("k1"), g("k2"), g("e1"), g("e2"), g("f1"), g("f2")
        assert k2 * k1 == k1 * k2
        assert e1 * k1 == (k1 * e1).scale(q(-2))
        assert e2 * k1 == (k1 * e2).scale(q(1))
        assert e1 * k2 == (k2 * e1).scale(q(1))
        assert e2 * k2 == k2 * e2
        assert k1 * f1 == (f1 * k1).scale(q(-2))
        assert k1 * f2 == (f2 * k1).scale(q(1))
        assert k2 * f1 == (f1 * k2).scale(q(1))
        assert k2 * f2 == f2 * k2
        cc = c(u.ctx)
        assert e2 * f2 == -(f2 * e2) + (k2 - g("k2", -1)).scale(cc)
        assert e1 * f2 == f2 * e1
        assert e2 * f1 == f1 * e2
        qq = q(1) + q(-1)
        assert (e1 * e1 * e2 - (e1 * e2 * e1).scale(qq) + e2 * e1 * e1).is_zero()
        assert (f1 * f1 * f2 - (f1 * f2 * f1).scale(qq) + f2 * f1 * f1).is_zero()
        assert g("e3") == e1 * e2 - (e2 * e1).scale(q(-1))
        assert g("f3") == f2 * f1 - (f1 * f2).scale(q(1))
        assert g("e3") * e1 == (e1 * g("e3")).scale(q(-1))
        assert g("f3") * f1 == (f1 * g("f3")).scale(q(-1))
        # quotient ideal
        assert g("e1", d).is_zero() and g("f1", d).is_zero()
        assert g("k1", d) == u.one() and g("k2", d) == u.one()


def test_bracket_k1():
    ctx = field(3)
    u = U(3)
    cc = c(ctx)
    assert bracket_k1(ctx, 0) == (u.gen("k1") - u.gen("k1", 2)).scale(cc)
    assert bracket_k1(ctx, 3) == bracket_k1(ctx, 0)
    want = (u.gen("k1").scale(ctx.q(1)) - u.gen("k1", 2).scale(ctx.q(2))).scale((ctx.q(1) - ctx.q(2)).inverse())
    assert bracket_k1(ctx, 1) == want


def test_dimensions():
    for d in (3, 5):
        assert dim(get_spec("ubar", d)) == 16 * d ** 4 == len(enumerate_basis(get_spec("ubar", d)))
        for name in ("bplus", "bminus", "x"):
            assert dim(get_spec(name, d)) == 4 * d ** 3 == len(enumerate_basis(get_spec(name, d)))
    assert len(enumerate_basis(U(3))) == 1296
    assert len(enumerate_basis(get_spec("bplus", 3))) == 108
    assert len(enumerate_basis(get_spec("x", 5))) == 500
    basis = enumerate_basis(U(3))
    assert basis == sorted(basis)


def test_spec_mismatch():
    with pytest.raises(SpecMismatch):
        U(3).gen("e1") * get_spec("bplus", 3).gen("e1")


def test_x_relations_match_lower_borel():
    """alpha_e1 -> f1, alpha_e3 -> f3, alpha_e2 -> f2, alpha_k -> k on the PBW level."""
    X = get_spec("x", 5)
    Bm = get_spec("bminus", 5)
    mons = random_monomials(X, 40, seed=3)
    for a in mons[:20]:
        for b in mons[20:]:
            assert X.mono_mul(a, b) == Bm.mono_mul(a, b)
    q = X.ctx.q
    ae1, ae2, ae3 = X.gen("a_e1"), X.gen("a_e2"), X.gen("a_e3")
    assert ae2 * ae1 == (ae1 * ae2).scale(q(1)) + ae3
    assert X.gen("a_k1", 5) == X.one()


# --------------------------------------------------------------- properties

@pytest.mark.parametrize("d", [3, 5])
def test_associativity_random_triples(d):
    u = U(d)
    rng = random.Random(d)
    mons = random_monomials(u, 3 * 170, seed=d)
    count = 500 if d == 3 else 150
    for k in range(count):
        a, b, cc = (u.monomial(mons[(3 * k + i) % len(mons)]) for i in range(3))
        if rng.random() < 0.2:
            a = a + u.gen("f3") * u.gen("k1")
        assert (a * b) * cc == a * (b * cc)


@pytest.mark.parametrize("name", ["ubar", "bplus", "bminus", "x"])
def test_unit(name):
    A = get_spec(name, 3)
    for m in enumerate_basis(A):
        x = A.monomial(m)
        assert A.one() * x == x == x * A.one()


def test_parity_additive():
    u = U(3)
    mons = random_monomials(u, 200, seed=7)
    for a, b in zip(mons[::2], mons[1::2]):
        prod = u.monomial(a) * u.monomial(b)
        want = (u.parity(a) + u.parity(b)) % 2
        assert all(u.parity(m) == want for m in prod.terms)


@pytest.mark.parametrize("d", [3, 5])
def test_elementary_engine_agrees(d):
    """Closed-form straightening vs. degree-one rewriting, applied one generator at a time."""
    fast = get_spec("ubar", d)
    slow = get_spec("ubar", d, elementary=True)
    mons = random_monomials(fast, 120, seed=11 + d)
    for a, b in zip(mons[::2], mons[1::2]):
        assert fast.mono_mul(a, b) == slow.mono_mul(a, b)


@settings(max_examples=40, deadline=None)
@given(st.lists(st.sampled_from(NAMES), min_size=1, max_size=7))
def test_fold_order_confluence(word):
    """Left fold and right fold of a generator word give the same normal form."""
    u = U(3)
    gens = [u.gen(g) for g in word]
    left = u.one()
    for g in gens:
        left = left * g
    right = u.one()
    for g in reversed(gens):
        right = g * right
    assert left == right


def test_centrality_before_quotient():
    """f1^d, k1^d, k2^d, e1^d commute with every generator in the unquotiented algebra."""
    for d in (3, 5):
        A = get_spec("uq", d)
        for z in ("f1", "k1", "k2", "e1"):
            Z = A.gen(z, d)
            for g in NAMES:
                G = A.gen(g)
                assert Z * G == G * Z, (d, z, g)


def test_json_round_trip():
    u = U(5)
    x = u.word("f1", "e3") + u.gen("k2").scale(u.ctx.q(2))
    obj = json.loads(json.dumps(x.to_json()))
    assert obj["algebra"] == "ubar" and obj["d"] == 5
    assert AlgebraElement.from_json(obj) == x
    with pytest.raises(ValueError):
        AlgebraElement.from_json({"algebra": "ubar", "d": 5, "terms": [{"m": [0, 2, 0, 0, 0, 0, 0, 0],
                                                                         "c": {"d": 5, "coeffs": ["1"] * 4}}]})
