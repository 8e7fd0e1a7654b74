"""Ubar in the Cartan-idempotent basis, for fast products in tensor powers.

With P_lam = d^-2 sum_a q^(-lam.a) k^a (a = (i, j), k^a = k1^i k2^j) the
elements F P_lam E (F an ordered f-monomial, E an ordered e-monomial) form a
basis of Ubar.  Since k^a P_lam = q^(lam.a) P_lam and P_lam X = X P_(lam - wt X),
a product of two basis elements is nonzero only for one relative weight, which
keeps products in tensor powers sparse.  The universal R-matrix has d^2 Cartan
terms per nilpotent term instead of d^4 in this basis on either side.

Monomials are (w, s, l, lam1, lam2, r, h, t).  The empty tuple UNIT stands for
the identity, which would otherwise be a sum of d^2 idempotents; use
`expand_units` before comparing elements.
"""

from __future__ import annotations

import itertools
from functools import lru_cache

from .hopf import TensorElement, hopf
from .pbw import _acc, get_spec
from .scalar import field

UNIT = ()


class WeightAlgebra:
    name = "ubar_w"

    def __init__(self, d: int):
        self.d = d
        self.ctx = field(d)
        self.ubar = get_spec("ubar", d)
        self.unit = UNIT
        self.wt_gen = self._generator_weights()
        self._wt_cache = {}
        self._ef_cache = {}

    def __repr__(self):
        return f"WeightAlgebra(d={self.d})"

    def _generator_weights(self):
        """wt(g) with k_i g = q^(wt_i) g k_i, read off from the PBW engine."""
        U = self.ubar
        out = []
        for p in range(8):
            if p in (3, 4):
                out.append((0, 0))
                continue
            g = [0] * 8
            g[p] = 1
            g = tuple(g)
            w = []
            for kp in (3, 4):
                k = [0] * 8
                k[kp] = 1
                k = tuple(k)
                lhs = U.mono_mul(k, g)                 # k g
                target = U.mono_mul(g, k)              # g k, a single monomial
                (m, c), = lhs.items()
                (m2, c2), = target.items()
                assert m == m2
                ratio = c / c2
                w.append(next(e for e in range(self.d) if ratio == self.ctx.q(e)))
            out.append(tuple(w))
        return tuple(out)

    def weight(self, part, offset):
        """Weight of an f-part (offset 0) or e-part (offset 5) exponent triple."""
        key = (part, offset)
        hit = self._wt_cache.get(key)
        if hit is None:
            a = b = 0
            for i, e in enumerate(part):
                wa, wb = self.wt_gen[offset + i]
                a += e * wa
                b += e * wb
            hit = (a % self.d, b % self.d)
            self._wt_cache[key] = hit
        return hit

    def parity(self, mono) -> int:
        if not mono:
            return 0
        return (mono[1] + mono[2] + mono[6] + mono[7]) & 1

    def valid(self, mono) -> bool:
        return mono == UNIT or (len(mono) == 8 and all(0 <= e < self.d for e in mono))

    def monomial_str(self, mono) -> str:
        if not mono:
            return "1"
        U = self.ubar
        f = U.monomial_str(mono[:3] + (0,) * 5)
        e = U.monomial_str((0,) * 5 + mono[5:])
        parts = [x for x in (f, f"P{mono[3], mono[4]}", e) if x != "1"]
        return "*".join(parts)

    def _ef(self, E1, F2):
        """E1 F2 in Ubar as a tuple of (F', (a, b), E', c)."""
        key = (E1, F2)
        hit = self._ef_cache.get(key)
        if hit is None:
            prod = self.ubar.mono_mul((0, 0, 0, 0, 0) + E1, F2 + (0, 0, 0, 0, 0))
            hit = tuple((m[:3], (m[3], m[4]), m[5:], c) for m, c in prod.items())
            self._ef_cache[key] = hit
        return hit

    def mono_mul(self, a, b) -> dict:
        if not a:
            return {b: self.ctx.one}
        if not b:
            return {a: self.ctx.one}
        d = self.d
        F1, lam, E1 = a[:3], (a[3], a[4]), a[5:]
        F2, mu, E2 = b[:3], (b[3], b[4]), b[5:]
        we, wf = self.weight(E1, 5), self.weight(F2, 0)
        if (lam[0] - we[0] - wf[0] - mu[0]) % d or (lam[1] - we[1] - wf[1] - mu[1]) % d:
            return {}
        U = self.ubar
        out = {}
        for Fp, ab, Ep, c in self._ef(E1, F2):
            wfp = self.weight(Fp, 0)
            l0, l1 = (lam[0] - wfp[0]) % d, (lam[1] - wfp[1]) % d
            c = c.mul_q(l0 * ab[0] + l1 * ab[1])
            ff = U.mono_mul(F1 + (0,) * 5, Fp + (0,) * 5) if any(Fp) else {F1 + (0,) * 5: self.ctx.one}
            ee = U.mono_mul((0,) * 5 + Ep, (0,) * 5 + E2) if any(Ep) else {(0,) * 5 + E2: self.ctx.one}
            for fm, cf in ff.items():
                cfc = c * cf
                for em, ce in ee.items():
                    _acc(out, fm[:3] + (l0, l1) + em[5:], cfc * ce)
        return out

    # ------------------------------------------------------ conversions
    def from_pbw_mono(self, m) -> dict:
        """F k^a E = sum_lam q^(lam.a) F P_lam E."""
        d = self.d
        out = {}
        for l0, l1 in itertools.product(range(d), repeat=2):
            out[m[:3] + (l0, l1) + m[5:]] = self.ctx.q(l0 * m[3] + l1 * m[4])
        return out

    def to_pbw_mono(self, m) -> dict:
        """F P_lam E = d^-2 sum_a q^(-lam.a) F k^a E (UNIT maps to 1)."""
        if not m:
            return {(0,) * 8: self.ctx.one}
        d = self.d
        w = self.ctx.scalar(1) / (d * d)
        out = {}
        for i, j in itertools.product(range(d), repeat=2):
            out[m[:3] + (i, j) + m[5:]] = w.mul_q(-(m[3] * i + m[4] * j))
        return out

    def unit_expansion(self) -> dict:
        return {(0, 0, 0, l0, l1, 0, 0, 0): self.ctx.one for l0, l1 in itertools.product(range(self.d), repeat=2)}

    # ---------------------------------------------------------- coproduct
    def coproduct_mono(self, m) -> dict:
        """Delta(F P_lam E) = Delta(F) (sum_{alpha+beta=lam} P_alpha (x) P_beta) Delta(E)."""
        if not m:
            return {(UNIT, UNIT): self.ctx.one}
        d = self.d
        H = hopf(self.ubar)
        dF = H.coproduct_mono(m[:3] + (0,) * 5)
        dE = H.coproduct_mono((0,) * 5 + m[5:])
        lam = (m[3], m[4])
        out = {}
        for (x1, x2), cx in dF.items():
            p2 = (x2[1] + x2[2]) & 1
            for (y1, y2), cy in dE.items():
                c0 = cx * cy
                if p2 and (y1[6] + y1[7]) & 1:
                    c0 = -c0
                a1 = (x1[3] + y1[3], x1[4] + y1[4])
                a2 = (x2[3] + y2[3], x2[4] + y2[4])
                for al0, al1 in itertools.product(range(d), repeat=2):
                    be0, be1 = (lam[0] - al0) % d, (lam[1] - al1) % d
                    e = al0 * a1[0] + al1 * a1[1] + be0 * a2[0] + be1 * a2[1]
                    _acc(out, (x1[:3] + (al0, al1) + y1[5:], x2[:3] + (be0, be1) + y2[5:]), c0.mul_q(e))
        return out


@lru_cache(maxsize=None)
def weight_algebra(d: int) -> WeightAlgebra:
    return WeightAlgebra(d)


# ------------------------------------------------------------- tensors

def to_weight(t: TensorElement) -> dict:
    """Convert a tensor over Ubar (PBW legs) to weight-basis terms."""
    W = weight_algebra(t.spec.d)
    out = {}
    for key, c in t.terms.items():
        legs = [W.from_pbw_mono(m) for m in key]
        for combo in itertools.product(*(l.items() for l in legs)):
            v = c
            for _, x in combo:
                v = v * x
            _acc(out, tuple(m for m, _ in combo), v)
    return out


def to_pbw(W: WeightAlgebra, terms: dict) -> dict:
    out = {}
    for key, c in terms.items():
        legs = [W.to_pbw_mono(m) for m in key]
        for combo in itertools.product(*(l.items() for l in legs)):
            v = c
            for _, x in combo:
                v = v * x
            _acc(out, tuple(m for m, _ in combo), v)
    return out


def expand_units(W: WeightAlgebra, terms: dict) -> dict:
    """Replace UNIT legs by the sum of all idempotents (canonical form)."""
    units = list(W.unit_expansion())
    out = {}
    for key, c in terms.items():
        if all(key):
            _acc(out, key, c)
            continue
        choices = [[m] if m else units for m in key]
        for combo in itertools.product(*choices):
            _acc(out, tuple(combo), c)
    return out


def embed_terms(terms: dict, positions, arity: int) -> dict:
    out = {}
    for key, c in terms.items():
        full = [UNIT] * arity
        for p, m in zip(positions, key):
            full[p] = m
        out[tuple(full)] = c
    return out


def _compat_left(W, m):
    """Weight an element must present on the right to meet m from the left."""
    we = W.weight(m[5:], 5)
    return ((m[3] - we[0]) % W.d, (m[4] - we[1]) % W.d)


def _compat_right(W, m):
    wf = W.weight(m[:3], 0)
    return ((m[3] + wf[0]) % W.d, (m[4] + wf[1]) % W.d)


def wtensor_mul(W: WeightAlgebra, x: dict, y: dict, arity: int) -> dict:
    """Product in the arity-fold tensor power with Koszul signs, using a weight index
    so that only pairs with matching weights on every shared leg are formed."""
    def pattern(key):
        return tuple(bool(m) for m in key)

    xs, ys = {}, {}
    for k, c in x.items():
        xs.setdefault(pattern(k), []).append((k, c))
    for k, c in y.items():
        ys.setdefault(pattern(k), []).append((k, c))
    out = {}
    for px, xterms in xs.items():
        for py, yterms in ys.items():
            shared = [i for i in range(arity) if px[i] and py[i]]
            index = {}
            for k, c in yterms:
                index.setdefault(tuple(_compat_right(W, k[i]) for i in shared), []).append((k, c))
            for ka, ca in xterms:
                cand = index.get(tuple(_compat_left(W, ka[i]) for i in shared))
                if not cand:
                    continue
                suffix = [0] * arity
                run = 0
                for j in range(arity - 1, -1, -1):
                    suffix[j] = run
                    run += W.parity(ka[j])
                for kb, cb in cand:
                    sign = 0
                    for j in range(arity - 1):
                        if suffix[j] & 1 and W.parity(kb[j]):
                            sign ^= 1
                    legs = []
                    for i in range(arity):
                        prod = W.mono_mul(ka[i], kb[i])
                        if not prod:
                            break
                        legs.append(prod)
                    else:
                        c0 = ca * cb
                        if sign:
                            c0 = -c0
                        for combo in itertools.product(*(l.items() for l in legs)):
                            c = c0
                            for _, cc in combo:
                                c = c * cc
                            _acc(out, tuple(m for m, _ in combo), c)
    return out


def coproduct_leg(W: WeightAlgebra, terms: dict, leg: int) -> dict:
    """Apply Delta to one leg (Delta is even, so no sign arises)."""
    cache = {}
    out = {}
    for key, c in terms.items():
        m = key[leg]
        img = cache.get(m)
        if img is None:
            img = W.coproduct_mono(m)
            cache[m] = img
        for (a, b), v in img.items():
            _acc(out, key[:leg] + (a, b) + key[leg + 1:], c * v)
    return out
