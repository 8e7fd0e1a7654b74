"""PBW normal forms for the small quantum supergroup and its Borel pieces.

Global generator order is f1 < f3 < f2 < k1 < k2 < e1 < e3 < e2.  The algebras
`bminus` (f1,f3,f2,k1,k2), `bplus` (k1,k2,e1,e3,e2) and `x` (alpha-generators,
which obey exactly the relations of `bminus`) use contiguous slices of that
order, so a monomial is an exponent tuple over the slice.

Multiplication works by right-multiplying a normal monomial by one generator
power at a time.  When the new generator sits before the last generator of the
monomial, the adjacent pair is rewritten with the closed-form commutation table
and the pieces are pushed back through the prefix.  Results are memoised.
"""

from __future__ import annotations

import itertools
import random
from functools import lru_cache

from .scalar import CyclotomicScalar, field, gauss_binomial, q_int

F1, F3, F2, K1, K2, E1, E3, E2 = range(8)
NAMES = ("f1", "f3", "f2", "k1", "k2", "e1", "e3", "e2")
X_NAMES = ("a_e1", "a_e3", "a_e2", "a_k1", "a_k2")
PARITY = (0, 1, 1, 0, 0, 0, 1, 1)
CARTAN = (K1, K2)
NILPOTENT_EVEN = (F1, E1)

_SLICES = {"ubar": (0, 8), "uq": (0, 8), "bminus": (0, 5), "bplus": (3, 8), "x": (0, 5)}


class SpecMismatch(ValueError):
    pass


class UnknownPair(KeyError):
    pass


class AlgebraSpec:
    """One of the algebras ubar / bplus / bminus / x (or uq, the unquotiented
    algebra with the k's invertible but of infinite order).

    `elementary=True` builds a twin engine that only knows the degree-one
    commutation rules; it is used as an independent check of the closed forms.
    """

    def __init__(self, name: str, d: int, elementary: bool = False):
        if name not in _SLICES:
            raise ValueError(f"unknown algebra {name!r}")
        self.name = name
        self.d = d
        self.ctx = field(d)
        self.quotient = name != "uq"
        self.elementary = elementary
        lo, hi = _SLICES[name]
        self.gens = tuple(range(lo, hi))
        self.offset = lo
        self.ngens = hi - lo
        self.names = X_NAMES if name == "x" else NAMES[lo:hi]
        self.parities = PARITY[lo:hi]
        self._odd_pos = tuple(p for p in range(self.ngens) if self.parities[p])
        self._gen_cache = {}
        self._mono_cache = {}
        self.unit = (0,) * self.ngens

    def __repr__(self):
        tag = ", elementary" if self.elementary else ""
        return f"AlgebraSpec({self.name!r}, d={self.d}{tag})"

    def __reduce__(self):
        return (get_spec, (self.name, self.d, self.elementary))

    # ------------------------------------------------------------------ basics
    def position(self, name: str) -> int:
        if name in self.names:
            return self.names.index(name)
        if self.name == "x" and name in NAMES[:5]:
            return NAMES.index(name)
        raise KeyError(f"{name!r} is not a generator of {self.name}")

    def parity(self, mono) -> int:
        s = 0
        for p in self._odd_pos:
            s += mono[p]
        return s & 1

    def valid(self, mono) -> bool:
        if len(mono) != self.ngens:
            return False
        for p, e in enumerate(mono):
            g = self.gens[p]
            if PARITY[g]:
                if e not in (0, 1):
                    return False
            elif self.quotient and not 0 <= e < self.d:
                return False
            elif not self.quotient and g in NILPOTENT_EVEN and e < 0:
                return False
        return True

    # ---------------------------------------------------------- rewriting core
    def _store(self, mono, p, e):
        """Monomial with exponent e at position p after power reduction, or None if zero."""
        g = self.gens[p]
        if PARITY[g]:
            if e >= 2:
                return None
        elif g in CARTAN:
            if self.quotient:
                e %= self.d
        elif self.quotient and e >= self.d:
            return None
        m = list(mono)
        m[p] = e
        return tuple(m)

    def mul_gen(self, mono, p: int, n: int) -> dict:
        """Normal form of mono * g_p^n as a dict monomial -> scalar."""
        key = (mono, p, n)
        hit = self._gen_cache.get(key)
        if hit is not None:
            return hit
        g = self.gens[p]
        if g in CARTAN and self.quotient:
            n %= self.d
        if n == 0:
            res = {mono: self.ctx.one}
            self._gen_cache[key] = res
            return res
        last = -1
        for pos in range(self.ngens - 1, -1, -1):
            if mono[pos]:
                last = pos
                break
        if last < p:
            m = self._store(mono, p, n)
            res = {} if m is None else {m: self.ctx.one}
        elif last == p:
            m = self._store(mono, p, mono[p] + n)
            res = {} if m is None else {m: self.ctx.one}
        elif self.elementary and g not in CARTAN and n > 1:
            res = {}
            for m1, c1 in self.mul_gen(mono, p, 1).items():
                for m2, c2 in self.mul_gen(m1, p, n - 1).items():
                    _acc(res, m2, c1 * c2)
        else:
            a = self.gens[last]
            m = mono[last]
            prefix = list(mono)
            if self.elementary and a not in CARTAN and m > 1:
                prefix[last] = m - 1
                m = 1
            else:
                prefix[last] = 0
            prefix = tuple(prefix)
            res = {}
            for coef, word in straighten_rule(self.ctx, a, m, g, n):
                part = {prefix: coef}
                for gg, ee in word:
                    if ee == 0:
                        continue
                    part = self._mul_dict_gen(part, gg - self.offset, ee)
                    if not part:
                        break
                for mm, cc in part.items():
                    _acc(res, mm, cc)
        self._gen_cache[key] = res
        return res

    def _mul_dict_gen(self, elem: dict, p: int, n: int) -> dict:
        out = {}
        for mono, c in elem.items():
            for m2, c2 in self.mul_gen(mono, p, n).items():
                _acc(out, m2, c * c2)
        return out

    def mono_mul(self, a, b) -> dict:
        """Normal form of the product of two normal monomials."""
        key = (a, b)
        hit = self._mono_cache.get(key)
        if hit is not None:
            return hit
        part = {a: self.ctx.one}
        for p, e in enumerate(b):
            if e:
                part = self._mul_dict_gen(part, p, e)
                if not part:
                    break
        self._mono_cache[key] = part
        return part

    def mul_dicts(self, x: dict, y: dict) -> dict:
        out = {}
        for ma, ca in x.items():
            for mb, cb in y.items():
                cab = ca * cb
                for m, c in self.mono_mul(ma, mb).items():
                    _acc(out, m, cab * c)
        return out

    # ----------------------------------------------------------- constructors
    def element(self, terms=None) -> "AlgebraElement":
        return AlgebraElement(self, terms or {})

    def one(self) -> "AlgebraElement":
        return AlgebraElement(self, {self.unit: self.ctx.one})

    def zero(self) -> "AlgebraElement":
        return AlgebraElement(self, {})

    def monomial(self, exps, coef=1) -> "AlgebraElement":
        exps = tuple(exps)
        if not self.valid(exps):
            raise ValueError(f"invalid monomial {exps} for {self.name}")
        c = self.ctx.scalar(coef)
        return AlgebraElement(self, {exps: c} if c else {})

    def gen(self, name: str, power: int = 1) -> "AlgebraElement":
        """A generator power; negative powers are allowed for the k's."""
        p = self.position(name)
        return AlgebraElement(self, dict(self.mul_gen(self.unit, p, power)))

    def word(self, *factors) -> "AlgebraElement":
        """Product of factors given as names or (name, power) pairs, left to right."""
        out = self.one()
        for f in factors:
            name, power = (f, 1) if isinstance(f, str) else f
            out = out * self.gen(name, power)
        return out

    def monomial_str(self, mono) -> str:
        parts = []
        for name, e in zip(self.names, mono):
            if e == 1:
                parts.append(name)
            elif e:
                parts.append(f"{name}^{e}")
        return "*".join(parts) or "1"


def _acc(out: dict, mono, c: CyclotomicScalar):
    v = out.get(mono)
    if v is None:
        if c:
            out[mono] = c
    else:
        s = v + c
        if s:
            out[mono] = s
        else:
            del out[mono]


@lru_cache(maxsize=None)
def get_spec(name: str, d: int, elementary: bool = False) -> AlgebraSpec:
    """Shared spec instance (the rewriting caches live on it)."""
    return AlgebraSpec(name, d, elementary)


# --------------------------------------------------------------------- rules

@lru_cache(maxsize=None)
def _cartan_bracket_product(d: int, start: int, count: int) -> tuple:
    """[k1; start][k1; start-1]...[k1; start-count+1] expanded as {k1-exponent: scalar}."""
    ctx = field(d)
    c = (ctx.q(1) - ctx.q(-1)).inverse()
    poly = {0: ctx.one}
    for t in range(count):
        n = start - t
        nxt = {}
        for e, v in poly.items():
            for de, coef in ((1, c.mul_q(n)), (-1, -c.mul_q(-n))):
                w = v * coef
                nxt[e + de] = nxt.get(e + de, ctx.zero) + w
        poly = {e: v for e, v in nxt.items() if v}
    return tuple(sorted(poly.items()))


def straighten_rule(ctx, a: int, m: int, b: int, n: int) -> list:
    """Closed form of g_a^m g_b^n (a after b in PBW order) as [(scalar, word)].

    A word is a list of (generator, exponent) read left to right.
    """
    q = ctx.q
    one = ctx.one
    pair = (a, b)
    if pair in _DIAGONAL:
        return [(q(_DIAGONAL[pair] * m * n), [(b, n), (a, m)])]
    if pair == (F2, F1):
        w = n
        out = [(q(w), [(F1, w), (F2, 1)])]
        if w:
            out.append((q_int(ctx, w), [(F1, w - 1), (F3, 1)]))
        return out
    if pair == (F2, F3):
        return [(-q(1), [(F3, 1), (F2, 1)])]
    if pair == (E1, F1):
        r, w = m, n
        out = [(one, [(F1, w), (E1, r)])]
        for u in range(1, min(r, w) + 1):
            falling = one
            for t in range(u):
                falling = falling * q_int(ctx, r - t)
            coef = falling * gauss_binomial(ctx, w, u)
            if not coef:
                continue
            for e, kc in _cartan_bracket_product(ctx.d, 2 * u - r - w, u):
                out.append((coef * kc, [(F1, w - u), (K1, e), (E1, r - u)]))
        return out
    if pair == (E1, F3):
        r = m
        return [
            (one, [(F3, 1), (E1, r)]),
            (-(q(2 - r) * q_int(ctx, r)), [(F2, 1), (K1, 1), (E1, r - 1)]),
        ]
    if pair == (E3, F1):
        w = n
        return [
            (one, [(F1, w), (E3, 1)]),
            (-(q(w - 2) * q_int(ctx, w)), [(F1, w - 1), (K1, -1), (E2, 1)]),
        ]
    if pair == (E3, F3):
        c = (q(1) - q(-1)).inverse()
        return [(-one, [(F3, 1), (E3, 1)]), (c, [(K1, 1), (K2, 1)]), (-c, [(K1, -1), (K2, -1)])]
    if pair == (E3, F2):
        return [(-one, [(F2, 1), (E3, 1)]), (one, [(K2, 1), (E1, 1)])]
    if pair == (E2, F3):
        return [(-one, [(F3, 1), (E2, 1)]), (one, [(F1, 1), (K2, -1)])]
    if pair == (E2, F2):
        c = (q(1) - q(-1)).inverse()
        return [(-one, [(F2, 1), (E2, 1)]), (c, [(K2, 1)]), (-c, [(K2, -1)])]
    if pair == (E2, E1):
        r = n
        out = [(q(r), [(E1, r), (E2, 1)])]
        if r:
            out.append((-(q(1) * q_int(ctx, r)), [(E1, r - 1), (E3, 1)]))
        return out
    if pair == (E2, E3):
        return [(-q(1), [(E3, 1), (E2, 1)])]
    raise UnknownPair((NAMES[a], NAMES[b]))


# g_a^m g_b^n = q^(k*m*n) g_b^n g_a^m
_DIAGONAL = {
    (F3, F1): -1,
    (K1, F1): -2,
    (K1, F3): -1,
    (K1, F2): 1,
    (K2, F1): 1,
    (K2, F3): 1,
    (K2, F2): 0,
    (K2, K1): 0,
    (E1, F2): 0,
    (E1, K1): -2,
    (E1, K2): 1,
    (E3, K1): -1,
    (E3, K2): 1,
    (E3, E1): -1,
    (E2, F1): 0,
    (E2, K1): 1,
    (E2, K2): 0,
}


def straighten_pair(spec: AlgebraSpec, a: str, m: int, b: str, n: int) -> "AlgebraElement":
    """Normal form of g_a^m g_b^n for an out-of-order adjacent pair (a after b)."""
    pa, pb = spec.position(a), spec.position(b)
    ga, gb = spec.gens[pa], spec.gens[pb]
    if ga <= gb:
        raise UnknownPair((a, b))
    out = {}
    for coef, word in straighten_rule(spec.ctx, ga, m, gb, n):
        part = {spec.unit: coef}
        for gg, ee in word:
            if ee:
                part = spec._mul_dict_gen(part, gg - spec.offset, ee)
        for mm, cc in part.items():
            _acc(out, mm, cc)
    return AlgebraElement(spec, out)


# ------------------------------------------------------------------ elements

class AlgebraElement:
    """Sparse F-combination of PBW monomials of one spec."""

    __slots__ = ("spec", "terms")

    def __init__(self, spec: AlgebraSpec, terms: dict):
        self.spec = spec
        self.terms = terms

    def _check(self, other):
        if not isinstance(other, AlgebraElement):
            raise TypeError("expected an AlgebraElement")
        if other.spec is not self.spec:
            raise SpecMismatch(f"{self.spec!r} vs {other.spec!r}")

    def __add__(self, other):
        self._check(other)
        out = dict(self.terms)
        for m, c in other.terms.items():
            _acc(out, m, c)
        return AlgebraElement(self.spec, out)

    def __neg__(self):
        return AlgebraElement(self.spec, {m: -c for m, c in self.terms.items()})

    def __sub__(self, other):
        return self + (-other)

    def scale(self, c) -> "AlgebraElement":
        c = self.spec.ctx.scalar(c)
        if not c:
            return self.spec.zero()
        return AlgebraElement(self.spec, {m: v * c for m, v in self.terms.items()})

    def __mul__(self, other):
        if isinstance(other, AlgebraElement):
            return mul(self, other)
        return self.scale(other)

    def __rmul__(self, other):
        return self.scale(other)

    def __eq__(self, other):
        if isinstance(other, AlgebraElement):
            return self.spec.name == other.spec.name and self.spec.d == other.spec.d and self.terms == other.terms
        if other == 0:
            return not self.terms
        return NotImplemented

    def __hash__(self):
        return hash((self.spec.name, frozenset(self.terms.items())))

    def is_zero(self) -> bool:
        return not self.terms

    def coefficient(self, mono) -> CyclotomicScalar:
        return self.terms.get(tuple(mono), self.spec.ctx.zero)

    def parities(self) -> set:
        return {self.spec.parity(m) for m in self.terms}

    def parity(self):
        """Parity if homogeneous (0 for the zero element), else None."""
        ps = self.parities()
        if len(ps) > 1:
            return None
        return ps.pop() if ps else 0

    def sorted_terms(self):
        return sorted(self.terms.items())

    def __repr__(self):
        if not self.terms:
            return "0"
        return " + ".join(f"({c})*{self.spec.monomial_str(m)}" for m, c in self.sorted_terms())

    def to_json(self) -> dict:
        name = "ubar" if self.spec.name == "uq" else self.spec.name
        return {
            "algebra": name,
            "d": self.spec.d,
            "terms": [{"m": list(m), "c": c.to_json()} for m, c in self.sorted_terms()],
        }

    @staticmethod
    def from_json(obj) -> "AlgebraElement":
        spec = get_spec(obj["algebra"], int(obj["d"]))
        terms = {}
        for t in obj["terms"]:
            m = tuple(int(e) for e in t["m"])
            if not spec.valid(m):
                raise ValueError(f"invalid monomial {m}")
            _acc(terms, m, CyclotomicScalar.from_json(t["c"]))
        return AlgebraElement(spec, terms)


def mul(a: AlgebraElement, b: AlgebraElement) -> AlgebraElement:
    a._check(b)
    return AlgebraElement(a.spec, a.spec.mul_dicts(a.terms, b.terms))


def bracket_k1(ctx, n: int, spec: AlgebraSpec | None = None) -> AlgebraElement:
    """[k1; n] = (q^n k1 - q^-n k1^-1)/(q - q^-1) in Ubar (or the given spec)."""
    spec = spec or get_spec("ubar", ctx.d)
    c = (ctx.q(1) - ctx.q(-1)).inverse()
    return spec.gen("k1").scale(c.mul_q(n)) - spec.gen("k1", -1).scale(c.mul_q(-n))


def enumerate_basis(spec: AlgebraSpec) -> list:
    """All PBW monomials of a quotient spec, in lexicographic exponent order."""
    if not spec.quotient:
        raise ValueError("the unquotiented algebra is infinite dimensional")
    ranges = [range(2) if PARITY[g] else range(spec.d) for g in spec.gens]
    return [tuple(m) for m in itertools.product(*ranges)]


def dim(spec: AlgebraSpec) -> int:
    out = 1
    for g in spec.gens:
        out *= 2 if PARITY[g] else spec.d
    return out


def random_monomials(spec: AlgebraSpec, count: int, seed: int = 0) -> list:
    rng = random.Random(seed)
    return [
        tuple(rng.randrange(2) if PARITY[g] else rng.randrange(spec.d) for g in spec.gens)
        for _ in range(count)
    ]
