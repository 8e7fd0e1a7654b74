"""Acceptance criteria 1-10.

Each test prints one line "CRITERION k PASS|FAIL <seconds>s (limit <L>s) <details>"
and the same lines are repeated in the terminal summary.  Time limits are the
pinned tolerances; all identities are exact.
"""

import time
from contextlib import contextmanager

import pytest

from conftest import ACCEPTANCE
from superq.centralizer import (
    B2_WORDS,
    B3_WORDS,
    b4_literal,
    basis_words,
    braid_verify,
    commutant_dimension,
    enumerate_basis,
    minimal_relation_check,
    verify_L3_relations,
    verify_decomposition,
    yang_baxter_vvv,
)
from superq.double import (
    double_check,
    dual_consistency_check,
    quasi_cocommutative,
    r_coefficient,
    r_matrix,
    r_multiplicative,
    verify_quasitriangular,
)
from superq.hopf import check_antipode_coproduct, check_hopf_axioms
from superq.pbw import NAMES, dim, enumerate_basis as pbw_basis, get_spec, random_monomials
from superq.rep import RepContext, RepMatrix, braiding_equations, element_action, rep_check, valid_mus

pytestmark = pytest.mark.acceptance


class Outcome:
    def __init__(self):
        self.ok = True
        self.details = []

    def check(self, ok, detail):
        if not ok:
            self.ok = False
        self.details.append(f"{detail}={'ok' if ok else 'FAIL'}")


@contextmanager
def criterion(k, title, limit, capsys):
    out = Outcome()
    t0 = time.perf_counter()
    yield out
    dt = time.perf_counter() - t0
    out.check(dt <= limit, "time")
    line = (f"CRITERION {k:2d} {'PASS' if out.ok else 'FAIL'} {dt:7.1f}s (limit {limit}s) "
            f"{title}: {', '.join(out.details)}")
    ACCEPTANCE[k] = line
    with capsys.disabled():
        print("\n" + line)
    assert out.ok, line


def test_criterion_01_pbw_dimensions(capsys):
    with criterion(1, "PBW dimensions", 1, capsys) as c:
        for d in (3, 5):
            want = {"ubar": 16 * d ** 4, "bplus": 4 * d ** 3, "bminus": 4 * d ** 3, "x": 4 * d ** 3}
            for name, n in want.items():
                S = get_spec(name, d)
                c.check(len(pbw_basis(S)) == n == dim(S), f"{name}(d={d})={n}")
            U = get_spec("ubar", d)
            normal = all(U.word(*[(g, e) for g, e in zip(NAMES, m) if e]) == U.monomial(m) for m in pbw_basis(U))
            c.check(normal, f"ordered words are normal forms (d={d})")
            cut = all(U.gen(g, d if g in ("f1", "e1") else 2).is_zero() for g in ("f1", "f3", "f2", "e1", "e3", "e2"))
            c.check(cut and U.gen("k1", d) == U.one() and U.gen("k2", d) == U.one(), f"truncations (d={d})")


def test_criterion_02_hopf_axioms(capsys):
    with criterion(2, "Hopf axioms", 120, capsys) as c:
        U3 = get_spec("ubar", 3)
        r = check_hopf_axioms(U3, pbw_basis(U3))
        c.check(r["pass"] and r["samples"] == 1296, "d=3 exhaustive 1296")
        U5 = get_spec("ubar", 5)
        r = check_hopf_axioms(U5, random_monomials(U5, 500, seed=0))
        c.check(r["pass"] and r["samples"] == 500, "d=5 500 samples")
        c.check(check_antipode_coproduct(U3)["pass"], "S/Delta compatibility")


def test_criterion_03_dual_consistency(capsys):
    with criterion(3, "dual consistency", 60, capsys) as c:
        r = dual_consistency_check(3, exhaustive_monomials=True)
        c.check(r["pass"], f"d=3 {r['identities']} identities over 108 B+ monomials")


def test_criterion_04_double(capsys):
    with criterion(4, "quantum double", 60, capsys) as c:
        for d in (3, 5):
            r = double_check(d)
            c.check(r["pass"] and r["identities"] == 25 and all(x["chi"] for x in r["checks"]),
                    f"d={d} 25 relations + chi")


def test_criterion_05_r_forms(capsys):
    with criterion(5, "R-matrix forms", 60, capsys) as c:
        for d in (3, 5):
            R = r_multiplicative(d)
            c.check(R == r_coefficient(d), f"d={d} mult=coeff ({len(R)} terms)")


def test_criterion_06_quasitriangular(capsys):
    with criterion(6, "quasitriangularity", 600, capsys) as c:
        r = verify_quasitriangular(3, "mult", full=True)
        for x in r["checks"]:
            c.check(x["pass"], "d=3 " + x["check"])
        t0 = time.perf_counter()
        ok = all(x["pass"] for x in quasi_cocommutative(r_matrix(5)))
        c.check(ok and time.perf_counter() - t0 < 300, "d=5 generators")


def test_criterion_07_representation(capsys):
    with criterion(7, "representation", 60 * 8, capsys) as c:
        for d in (5, 7):
            U = get_spec("ubar", d)
            for mu in valid_mus(d):
                t0 = time.perf_counter()
                rc = RepContext(d, mu)
                eqs = braiding_equations(rc)
                rel = rep_check(rc)
                one = RepMatrix.identity(4, rc.ctx)
                central = (element_action(U.gen("f1", d), rc).is_zero()
                           and element_action(U.gen("e1", d), rc).is_zero()
                           and element_action(U.gen("k1", d), rc) == one
                           and element_action(U.gen("k2", d), rc) == one)
                ok = len(eqs) == 16 and all(e for _, e in eqs) and rel["pass"] and central
                c.check(ok and time.perf_counter() - t0 < 60, f"d={d} mu={mu}")


def test_criterion_08_braid(capsys):
    with criterion(8, "braid and cubic relations", 120 * 4, capsys) as c:
        for d in (5, 7):
            for mu in (1, 2):
                t0 = time.perf_counter()
                rc = RepContext(d, mu)
                ok = all(braid_verify(n, rc)["pass"] for n in (2, 3, 4))
                ok = ok and minimal_relation_check(rc)["pass"] and yang_baxter_vvv(rc)
                c.check(ok and time.perf_counter() - t0 < 120, f"d={d} mu={mu} n<=4")


def test_criterion_09_centralizer_bases(capsys):
    with criterion(9, "centralizer bases", 900, capsys) as c:
        rc = RepContext(5, 1)
        c.check(basis_words(2, rc) == B2_WORDS, "B2")
        c.check(basis_words(3, rc) == B3_WORDS, "B3 word-for-word")
        B4 = set(basis_words(4, rc))
        c.check(B4 == set(b4_literal("deglex")) == set(b4_literal("listed")) and len(B4) == 175,
                "B4 = displayed set (both '<' readings, 175 words)")
        c.check(verify_L3_relations(rc)["pass"], "L3 relations")
        for n in (3, 4):
            c.check(verify_decomposition(n, rc)["pass"], f"decomposition n={n}")
        # the verbatim exclusion rule also gives a basis of L_4, but a different one
        lit = enumerate_basis(4, rc, exclusions="literal")
        c.details.append(f"literal-rule basis size {len(lit)}, differs from display by "
                         f"{len(B4 - set(lit.words))} words (informational)")


COMMUTANT_CASES = [(2, 1), (3, 1), (2, 2), (3, 2)]


@pytest.mark.xfail(strict=True, reason="at mu=2, d=5 (mu = (d-1)/2) the commutant at n=3 is 20-dim "
                   "while the centralizer algebra has dim 15; see the decision ledger")
def test_criterion_10_commutant(capsys):
    with criterion(10, "commutant dimension", 600, capsys) as c:
        for n, mu in COMMUTANT_CASES:
            rc = RepContext(5, mu)
            dc, nb = commutant_dimension(n, rc), len(enumerate_basis(n, rc))
            c.check(dc == nb, f"n={n} mu={mu} ({dc} vs {nb})")


@pytest.mark.parametrize("n,mu", [(2, 1), (3, 1), (2, 2)])
def test_criterion_10_attainable_cases(n, mu):
    rc = RepContext(5, mu)
    assert commutant_dimension(n, rc) == len(enumerate_basis(n, rc))
