import itertools
import json

import pytest
from hypothesis import given, settings, strategies as st

from superq.pbw import get_spec
from superq.rep import (
    InvalidMu,
    RepContext,
    RepMatrix,
    basis_index,
    braiding_equations,
    c_matrix,
    check_parity,
    element_action,
    gen_action,
    rbar_closed_form,
    rbar_on_vv,
    rep_check,
    rho_generator,
    rho_n,
    valid_mus,
    vector_parity,
)
from superq.scalar import q_int

W00, W10, W01, W11 = (basis_index(s, r) for s, r in ((0, 0), (1, 0), (0, 1), (1, 1)))
GENS = ("f1", "f3", "f2", "k1", "k2", "e1", "e3", "e2")
ODD = {"f2", "f3", "e2", "e3"}


def vv(a, b):
    return a * 4 + b


def column(m, col):
    return {r: row[col] for r, row in m.rows.items() if col in row}


def test_basis_order_and_parity():
    assert [W00, W10, W01, W11] == [0, 1, 2, 3]
    assert [vector_parity(i) for i in range(4)] == [0, 1, 1, 0]
    assert vector_parity(vv(W10, W01), 2) == 0
    assert vector_parity(vv(W10, W00), 2) == 1


def test_invalid_mu():
    with pytest.raises(InvalidMu):
        RepContext(5, 0)
    with pytest.raises(InvalidMu):
        RepContext(5, 4)        # [5] = 0
    assert valid_mus(5) == [1, 2, 3]
    assert valid_mus(7) == [1, 2, 3, 4, 5]


def test_generator_examples():
    rc = RepContext(5, 2)
    q = rc.ctx.q
    k2 = gen_action("k2", rc)
    for s, r in itertools.product((0, 1), repeat=2):
        i = basis_index(s, r)
        assert column(k2, i) == {i: q(2 + s)}
    f1 = gen_action("f1", rc)
    assert column(f1, W01) == {W10: -q(-1)}
    assert all(not column(f1, i) for i in (W00, W10, W11))
    assert (gen_action("e1", rc) ** 5).is_zero()


@pytest.mark.parametrize("d", [3, 5, 7])
def test_relations_and_central_elements(d):
    U = get_spec("ubar", d)
    for mu in valid_mus(d):
        rc = RepContext(d, mu)
        rep = rep_check(rc, samples=5)
        assert rep["pass"], rep["first_failure"]
        one = RepMatrix.identity(4, rc.ctx)
        assert element_action(U.gen("f1", d), rc).is_zero()
        assert element_action(U.gen("e1", d), rc).is_zero()
        assert element_action(U.gen("k1", d), rc) == one
        assert element_action(U.gen("k2", d), rc) == one
        assert check_parity(rc)


def _signed_pair(a, b, v, w, bparity):
    """Oracle for (a (x) b)(v (x) w) on basis vectors: (-1)^(|b||v|) av (x) bw."""
    out = {}
    sign = -1 if bparity and vector_parity(v) else 1
    for r1, x in column(a, v).items():
        for r2, y in column(b, w).items():
            out[vv(r1, r2)] = x * y * sign
    return out


def test_rho2_examples():
    rc = RepContext(7, 2)
    k1 = gen_action("k1", rc)
    assert rho_n(get_spec("ubar", 7).gen("k1"), 1, rc) == k1
    r2 = rho_generator("k1", 2, rc)
    for v, w in itertools.product(range(4), repeat=2):
        assert column(r2, vv(v, w)) == _signed_pair(k1, k1, v, w, 0)
    # e2 on w01 (x) w01: Delta(e2) = e2 (x) 1 + k2 (x) e2
    e2, k2, one = gen_action("e2", rc), gen_action("k2", rc), RepMatrix.identity(4, rc.ctx)
    want = _signed_pair(e2, one, W01, W01, 0)
    for r, x in _signed_pair(k2, e2, W01, W01, 1).items():
        want[r] = want.get(r, rc.ctx.zero) + x
    got = column(rho_generator("e2", 2, rc), vv(W01, W01))
    assert got == want
    q, m = rc.ctx.q, rc.qint(2)
    assert got == {vv(W00, W01): m, vv(W01, W00): -q(2) * m}


@settings(max_examples=25, deadline=None)
@given(st.lists(st.sampled_from(GENS), min_size=1, max_size=3),
       st.lists(st.sampled_from(GENS), min_size=1, max_size=3),
       st.sampled_from([1, 2, 3]))
def test_rho_multiplicative(a, b, n):
    rc = RepContext(5, 1)
    U = get_spec("ubar", 5)
    x, y = U.word(*a), U.word(*b)
    assert rho_n(x * y, n, rc) == rho_n(x, n, rc) @ rho_n(y, n, rc)


def test_c_examples():
    rc = RepContext(5, 3)
    q, mu = rc.ctx.q, 3
    qq = q(1) - q(-1)
    c = c_matrix(rc)
    assert column(c, vv(W00, W00)) == {vv(W00, W00): rc.ctx.one}
    assert column(c, vv(W11, W11)) == {vv(W11, W11): q(4 * mu + 2)}
    assert column(c, vv(W10, W00)) == {vv(W00, W10): q(mu), vv(W10, W00): -q(mu) * qq * q_int(rc.ctx, mu)}


@pytest.mark.parametrize("d", [5, 7])
def test_sixteen_equations(d):
    for mu in valid_mus(d):
        rc = RepContext(d, mu)
        eqs = braiding_equations(rc)
        assert len(eqs) == 16
        assert all(ok for _, ok in eqs), [l for l, ok in eqs if not ok]


@pytest.mark.parametrize("d,mu", [(3, 1), (5, 1), (5, 2)])
def test_r_routes_agree(d, mu):
    rc = RepContext(d, mu)
    fac = rbar_on_vv(rc, "factors")
    assert fac == rbar_on_vv(rc, "terms")
    assert fac == rbar_closed_form(rc)
    assert c_matrix(rc, "factors") == c_matrix(rc, "closed")


def test_c_is_intertwiner():
    rc = RepContext(7, 3)
    c = c_matrix(rc)
    for g in GENS:
        m = rho_generator(g, 2, rc)
        assert c @ m == m @ c


def test_matrix_round_trips():
    rc = RepContext(5, 1)
    c = c_matrix(rc)
    obj = json.loads(json.dumps(c.to_json()))
    assert obj["dim"] == 16
    assert RepMatrix.from_json(obj) == c
    lines = c.to_csv().strip().splitlines()
    assert len(lines) == c.nnz() + 1
