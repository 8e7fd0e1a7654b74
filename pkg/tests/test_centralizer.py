import pytest
from hypothesis import given, settings, strategies as st

from superq.centralizer import (
    B2_WORDS,
    B3_WORDS,
    CapExceeded,
    N4_LISTED,
    b4_literal,
    basis_report,
    basis_words,
    braid_class,
    braid_generator,
    braid_verify,
    closure_check,
    commutant_dimension,
    deglex_key,
    enumerate_basis,
    excluded,
    independence_witness,
    minimal_relation_check,
    reducible,
    verify_L3_relations,
    verify_decomposition,
    word_matrices,
    yang_baxter_vvv,
)
from superq.rep import RepContext, RepMatrix, c_matrix

words = st.lists(st.integers(1, 3), max_size=7).map(tuple)


def test_generator_padding():
    rc = RepContext(5, 1)
    assert braid_generator(2, 1, rc) == c_matrix(rc)
    with pytest.raises(IndexError):
        braid_generator(3, 3, rc)
    W = word_matrices(4, rc)
    assert W((1, 2, 1)) == W((2, 1, 2))
    assert W((1, 3)) == W((3, 1))
    assert W((2, 3, 2)) == W((3, 2, 3))


@pytest.mark.parametrize("d,mu", [(5, 1), (5, 2), (7, 3)])
def test_braid_and_cubic(d, mu):
    rc = RepContext(d, mu)
    assert braid_verify(3, rc)["pass"]
    rep = minimal_relation_check(rc)
    assert rep["pass"], rep["first_failure"]
    assert yang_baxter_vvv(rc)


def test_eigenvalues_d3():
    """At d=3, mu=1 the listed roots are 1, -q^2, q^6 = 1; eigenvectors are read
    off the braiding table (w00w00, w10w10, w11w11 are fixed lines of c)."""
    rc = RepContext(3, 1)
    q = rc.ctx.q
    c = c_matrix(rc)
    for v, lam in ((0, rc.ctx.one), (1 * 4 + 1, -q(2)), (3 * 4 + 3, q(6))):
        assert c.rows[v] == {v: lam} and all(v not in row for r, row in c.rows.items() if r != v)
    rep = minimal_relation_check(rc)
    assert rep["pass"]
    assert set(rep["distinct_eigenvalues"]) == {str(rc.ctx.one), str(-q(2))}
    assert not rep["diagonalizable"]


def test_reducible_patterns():
    assert reducible((1, 1, 1))
    assert reducible((2, 1, 2))
    assert reducible((3, 1))
    assert not reducible((1, 3))
    assert not reducible((1, 2, 1))
    assert not reducible((1, 1, 2, 2, 1))


@given(words, st.integers(1, 3))
def test_filters_closed_under_extension(w, i):
    for mode in ("literal", "display"):
        if excluded(w, mode):
            assert excluded(w + (i,), mode) and excluded((i,) + w, mode)
    if reducible(w):
        assert reducible(w + (i,)) and reducible((i,) + w)


def _perm(word):
    """Image of the word in the symmetric group S_4 (a braid-move invariant)."""
    p = [0, 1, 2, 3]
    for i in word:
        p[i - 1], p[i] = p[i], p[i - 1]
    return p


@settings(max_examples=60)
@given(words)
def test_braid_class_invariants(w):
    cls = braid_class(w)
    assert w in cls
    for v in cls:
        assert len(v) == len(w) and _perm(v) == _perm(w)
    v = max(cls)
    assert braid_class(v) == cls
    if excluded(w, "literal"):
        assert excluded(w, "display")


@given(words, words)
def test_deglex_total(a, b):
    ka, kb = deglex_key(a), deglex_key(b)
    assert (ka < kb) + (kb < ka) + (a == b) == 1


def test_display_catches_braid_forms():
    assert excluded((1, 3, 2, 2, 3), "literal")
    assert excluded((3, 1, 2, 2, 3), "display")      # far-commuted form
    assert not excluded((3, 1, 2, 2, 3), "literal")
    assert excluded((3, 2, 1, 1, 2, 3), "display")
    assert not excluded((3, 2, 1, 1, 2, 3), "literal")


def test_small_bases():
    rc = RepContext(5, 1)
    assert basis_words(1, rc) == [()]
    assert basis_words(2, rc) == B2_WORDS
    B = enumerate_basis(3, rc)
    assert B.words == B3_WORDS
    assert independence_witness(B)
    assert closure_check(B)["pass"]
    rep = basis_report(3, rc)
    assert rep["pass"] and rep["dim"] == 20


def test_b3_stable_across_parameters():
    for d, mu in ((7, 1), (7, 2), (5, 3)):
        assert basis_words(3, RepContext(d, mu)) == B3_WORDS


def test_b4_literal_oracle_shape():
    a, b = b4_literal("deglex"), b4_literal("listed")
    assert set(a) == set(b)
    assert len(a) == 175
    assert set(B3_WORDS) <= set(a)
    assert not any(excluded(w, "display") for w in a)
    assert not any(set(N4_LISTED) & {w[k:k + len(p)] for p in N4_LISTED for k in range(len(w))} for w in a)


def test_L3_relations():
    for d, mu in ((5, 1), (7, 2)):
        rep = verify_L3_relations(RepContext(d, mu))
        assert rep["pass"], rep["first_failure"]


def test_decomposition_n3():
    rep = verify_decomposition(3, RepContext(5, 1))
    assert rep["pass"], rep["first_failure"]


def test_commutant_small():
    for mu in (1, 2, 3):
        rc = RepContext(5, mu)
        assert commutant_dimension(1, rc) == 1
        assert commutant_dimension(2, rc) == 3


def test_commutant_of_c_by_brute_force():
    """Independent route at n=2: the commutant of rho_2 contains span{1, c, c^2}."""
    from superq.rep import rho_generator

    rc = RepContext(5, 1)
    c = c_matrix(rc)
    for m in (RepMatrix.identity(16, rc.ctx), c, c @ c):
        for g in ("f1", "f3", "f2", "k1", "k2", "e1", "e3", "e2"):
            x = rho_generator(g, 2, rc)
            assert m @ x == x @ m


def test_cap():
    rc = RepContext(5, 1)
    with pytest.raises(CapExceeded):
        enumerate_basis(5, rc)
    with pytest.raises(CapExceeded):
        commutant_dimension(5, rc)
    with pytest.raises(CapExceeded):
        enumerate_basis(3, rc, cap=2)
