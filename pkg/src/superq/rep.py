"""The 4-dimensional typical module V_mu and its tensor powers.

Basis vectors w_(sigma, rho) are ordered (0,0) < (1,0) < (0,1) < (1,1), so the
index of w_(sigma, rho) is sigma + 2 rho and its parity is sigma + rho.  A
vector of V^(x)n is indexed base 4 with the first tensor factor most
significant (dictionary order).

Odd operators pick up Koszul signs when they act across odd vectors:
(a (x) b)(v (x) w) = (-1)^(|b||v|) av (x) bw.
"""

from __future__ import annotations

import csv
import io
import itertools
from functools import lru_cache

from .hopf import TensorElement, iterated_coproduct
from .pbw import NAMES, AlgebraElement, get_spec
from .scalar import CyclotomicScalar, field, q_int


class InvalidMu(ValueError):
    """[mu][1 + mu] vanishes, so V_mu is not the simple typical module."""


def basis_index(sigma: int, rho: int) -> int:
    return sigma + 2 * rho


def basis_label(i: int) -> tuple:
    return (i & 1, i >> 1)


def vector_parity(i: int, n: int = 1) -> int:
    """Parity of the basis vector with index i in V^(x)n."""
    p = 0
    for _ in range(n):
        s, r = basis_label(i % 4)
        p ^= (s + r) & 1
        i //= 4
    return p


class RepContext:
    def __init__(self, d: int, mu: int):
        self.ctx = field(d)
        self.d = d
        self.mu = mu % d
        if not (q_int(self.ctx, self.mu) * q_int(self.ctx, self.mu + 1)):
            raise InvalidMu(f"[mu][1+mu] = 0 for d={d}, mu={mu}")

    def __repr__(self):
        return f"RepContext(d={self.d}, mu={self.mu})"

    def __eq__(self, other):
        return isinstance(other, RepContext) and (self.d, self.mu) == (other.d, other.mu)

    def __hash__(self):
        return hash((self.d, self.mu))

    def qint(self, n: int) -> CyclotomicScalar:
        return q_int(self.ctx, n)


def valid_mus(d: int) -> list:
    ctx = field(d)
    return [m for m in range(d) if q_int(ctx, m) * q_int(ctx, m + 1)]


# ------------------------------------------------------------- matrices

class RepMatrix:
    """Sparse square matrix over F; rows[r] maps column -> nonzero entry."""

    __slots__ = ("dim", "ctx", "rows")

    def __init__(self, dim: int, ctx, rows=None):
        self.dim = dim
        self.ctx = ctx
        self.rows = rows if rows is not None else {}

    @staticmethod
    def identity(dim: int, ctx) -> "RepMatrix":
        return RepMatrix(dim, ctx, {i: {i: ctx.one} for i in range(dim)})

    @staticmethod
    def from_entries(dim: int, ctx, entries) -> "RepMatrix":
        m = RepMatrix(dim, ctx)
        for r, c, v in entries:
            m._add_entry(r, c, ctx.scalar(v))
        return m

    def _add_entry(self, r, c, v):
        row = self.rows.setdefault(r, {})
        w = row.get(c)
        nv = v if w is None else w + v
        if nv:
            row[c] = nv
        else:
            row.pop(c, None)
            if not row:
                del self.rows[r]

    def entry(self, r: int, c: int) -> CyclotomicScalar:
        return self.rows.get(r, {}).get(c, self.ctx.zero)

    def entries(self):
        for r in sorted(self.rows):
            row = self.rows[r]
            for c in sorted(row):
                yield r, c, row[c]

    def nnz(self) -> int:
        return sum(len(r) for r in self.rows.values())

    def is_zero(self) -> bool:
        return not self.rows

    def _same(self, other):
        if not isinstance(other, RepMatrix) or other.dim != self.dim:
            raise ValueError("matrix dimensions differ")

    def __eq__(self, other):
        if not isinstance(other, RepMatrix):
            return NotImplemented
        return self.dim == other.dim and self.rows == other.rows

    def __hash__(self):
        return hash((self.dim, tuple(self.entries())))

    def __add__(self, other):
        self._same(other)
        out = RepMatrix(self.dim, self.ctx, {r: dict(row) for r, row in self.rows.items()})
        for r, c, v in other.entries():
            out._add_entry(r, c, v)
        return out

    def __neg__(self):
        return RepMatrix(self.dim, self.ctx, {r: {c: -v for c, v in row.items()} for r, row in self.rows.items()})

    def __sub__(self, other):
        return self + (-other)

    def scale(self, s) -> "RepMatrix":
        s = self.ctx.scalar(s)
        if not s:
            return RepMatrix(self.dim, self.ctx)
        return RepMatrix(self.dim, self.ctx, {r: {c: v * s for c, v in row.items()} for r, row in self.rows.items()})

    def add_scalar(self, s) -> "RepMatrix":
        """self + s * identity."""
        return self + RepMatrix.identity(self.dim, self.ctx).scale(s)

    def __matmul__(self, other: "RepMatrix") -> "RepMatrix":
        self._same(other)
        orows = other.rows
        out = {}
        for r, row in self.rows.items():
            acc = {}
            for k, a in row.items():
                brow = orows.get(k)
                if not brow:
                    continue
                for c, b in brow.items():
                    w = acc.get(c)
                    acc[c] = a * b if w is None else w + a * b
            acc = {c: v for c, v in acc.items() if v}
            if acc:
                out[r] = acc
        return RepMatrix(self.dim, self.ctx, out)

    def __pow__(self, e: int) -> "RepMatrix":
        out = RepMatrix.identity(self.dim, self.ctx)
        for _ in range(e):
            out = out @ self
        return out

    def apply(self, vec: dict) -> dict:
        """Matrix times a sparse column vector {index: scalar}."""
        out = {}
        for r, row in self.rows.items():
            acc = None
            for c, a in row.items():
                v = vec.get(c)
                if v is not None:
                    acc = a * v if acc is None else acc + a * v
            if acc:
                out[r] = acc
        return out

    def flatten(self) -> dict:
        """Row-major vector {r * dim + c: entry}."""
        n = self.dim
        return {r * n + c: v for r, row in self.rows.items() for c, v in row.items()}

    def to_json(self) -> dict:
        return {"dim": self.dim, "d": self.ctx.d,
                "entries": [{"row": r, "col": c, "c": v.to_json()} for r, c, v in self.entries()]}

    @staticmethod
    def from_json(obj) -> "RepMatrix":
        ctx = field(int(obj["d"]))
        m = RepMatrix(int(obj["dim"]), ctx)
        for e in obj["entries"]:
            m._add_entry(int(e["row"]), int(e["col"]), CyclotomicScalar.from_json(e["c"]))
        return m

    def to_csv(self) -> str:
        buf = io.StringIO()
        w = csv.writer(buf, lineterminator="\n")
        w.writerow(["row", "col", "value"])
        for r, c, v in self.entries():
            w.writerow([r, c, str(v)])
        return buf.getvalue()

    def __repr__(self):
        return f"RepMatrix(dim={self.dim}, nnz={self.nnz()})"


def signed_kron(a: RepMatrix, b: RepMatrix, b_parity: int, a_factors: int) -> RepMatrix:
    """Matrix of x (x) y on V^(x)k (x) V^(x)m, where a, b are the matrices of x, y
    and |y| = b_parity: the sign is (-1)^(|y| |v|) for the column vector v of a."""
    n = b.dim
    out = {}
    for r, row in a.rows.items():
        for r2, row2 in b.rows.items():
            acc = {}
            for c, x in row.items():
                neg = b_parity and vector_parity(c, a_factors)
                for c2, y in row2.items():
                    v = x * y
                    acc[c * n + c2] = -v if neg else v
            out[r * n + r2] = acc
    return RepMatrix(a.dim * n, a.ctx, out)


# ------------------------------------------------------------- V_mu itself

def gen_action(g: str, rc: RepContext) -> RepMatrix:
    """Matrix of a generator (or k1^-1, k2^-1 via 'k1inv', 'k2inv') on V_mu."""
    return _gen_action(g, rc.d, rc.mu)


@lru_cache(maxsize=None)
def _gen_action(g: str, d: int, mu: int) -> RepMatrix:
    ctx = field(d)
    q = ctx.q
    qi = lambda n: q_int(ctx, n)
    ent = []
    for s, r in itertools.product((0, 1), repeat=2):
        col = basis_index(s, r)
        if g == "k1":
            ent.append((col, col, q(r - s)))
        elif g == "k1inv":
            ent.append((col, col, q(s - r)))
        elif g == "k2":
            ent.append((col, col, q(mu + s)))
        elif g == "k2inv":
            ent.append((col, col, q(-mu - s)))
        elif g == "f1":
            if s == 0 and r == 1:
                ent.append((basis_index(1, 0), col, -q(-1)))
        elif g == "f2":
            if r == 0:
                ent.append((basis_index(s, 1), col, ctx.one))
        elif g == "f3":
            if s == 0:
                ent.append((basis_index(1, r), col, q(-r) * (-1) ** r))
        elif g == "e1":
            if s == 1 and r == 0:
                ent.append((basis_index(0, 1), col, -q(1)))
        elif g == "e2":
            if r == 1:
                ent.append((basis_index(s, 0), col, qi(mu + s)))
        elif g == "e3":
            if s == 1:
                ent.append((basis_index(0, r), col, q(r) * qi(mu + r) * (-1) ** r))
        else:
            raise KeyError(g)
    return RepMatrix.from_entries(4, ctx, ent)


def mono_action(mono: tuple, rc: RepContext) -> RepMatrix:
    """Matrix of the ordered PBW monomial f1^w f3^s f2^l k1^i k2^j e1^r e3^h e2^t."""
    return _mono_action(tuple(mono), rc.d, rc.mu)


@lru_cache(maxsize=None)
def _mono_action(mono, d, mu):
    ctx = field(d)
    out = RepMatrix.identity(4, ctx)
    for name, e in zip(NAMES, mono):
        if e:
            gname = name if e > 0 else name + "inv"
            out = out @ (_gen_action(gname, d, mu) ** abs(e))
    return out


def element_action(x: AlgebraElement, rc: RepContext) -> RepMatrix:
    out = RepMatrix(4, rc.ctx)
    for m, c in x.terms.items():
        out = out + mono_action(m, rc).scale(c)
    return out


def _parity(mono) -> int:
    return (mono[1] + mono[2] + mono[6] + mono[7]) & 1


def tensor_action(t: TensorElement, rc: RepContext) -> RepMatrix:
    """Action of a k-fold tensor over Ubar on V^(x)k, with Koszul signs."""
    k = t.arity
    out = RepMatrix(4 ** k, rc.ctx)
    for key, c in t.terms.items():
        mats = [mono_action(m, rc) for m in key]
        if any(m.is_zero() for m in mats):
            continue
        acc = mats[0]
        for j in range(1, k):
            acc = signed_kron(acc, mats[j], _parity(key[j]), j)
        out = out + acc.scale(c)
    return out


def rho_n(x: AlgebraElement, n: int, rc: RepContext) -> RepMatrix:
    """rho_(n, mu)(x): the action of Delta^(n-1)(x) on V^(x)n."""
    if n < 1:
        raise ValueError("n must be at least 1")
    if n == 1:
        return element_action(x, rc)
    return tensor_action(iterated_coproduct(x, n), rc)


@lru_cache(maxsize=None)
def _rho_gen(name: str, n: int, d: int, mu: int) -> RepMatrix:
    rc = RepContext(d, mu)
    return rho_n(get_spec("ubar", d).gen(name), n, rc)


def rho_generator(name: str, n: int, rc: RepContext) -> RepMatrix:
    return _rho_gen(name, n, rc.d, rc.mu)


# ------------------------------------------------------------- relations

def _ubar_relations(rc: RepContext):
    """Defining relations of Ubar as (label, lhs, rhs) matrix triples on V_mu."""
    ctx = rc.ctx
    q = ctx.q
    A = lambda g: gen_action(g, rc)
    k1, k2, e1, e2, f1, f2 = (A(g) for g in ("k1", "k2", "e1", "e2", "f1", "f2"))
    k1i, k2i = A("k1inv"), A("k2inv")
    e3, f3 = A("e3"), A("f3")
    I = RepMatrix.identity(4, ctx)
    Z = RepMatrix(4, ctx)
    qq_inv = (q(1) - q(-1)).inverse()
    d = rc.d
    rels = [
        ("k1 k1^-1 = 1", k1 @ k1i, I),
        ("k2 k2^-1 = 1", k2 @ k2i, I),
        ("k2 k1 = k1 k2", k2 @ k1, k1 @ k2),
        ("e1 k1 = q^-2 k1 e1", e1 @ k1, (k1 @ e1).scale(q(-2))),
        ("e2 k1 = q k1 e2", e2 @ k1, (k1 @ e2).scale(q(1))),
        ("e1 k2 = q k2 e1", e1 @ k2, (k2 @ e1).scale(q(1))),
        ("e2 k2 = k2 e2", e2 @ k2, k2 @ e2),
        ("k1 f1 = q^-2 f1 k1", k1 @ f1, (f1 @ k1).scale(q(-2))),
        ("k1 f2 = q f2 k1", k1 @ f2, (f2 @ k1).scale(q(1))),
        ("k2 f1 = q f1 k2", k2 @ f1, (f1 @ k2).scale(q(1))),
        ("k2 f2 = f2 k2", k2 @ f2, f2 @ k2),
        ("e1 f1 = f1 e1 + (k1 - k1^-1)/(q - q^-1)", e1 @ f1, f1 @ e1 + (k1 - k1i).scale(qq_inv)),
        ("e2 f2 = -f2 e2 + (k2 - k2^-1)/(q - q^-1)", e2 @ f2, -(f2 @ e2) + (k2 - k2i).scale(qq_inv)),
        ("e1 f2 = f2 e1", e1 @ f2, f2 @ e1),
        ("e2 f1 = f1 e2", e2 @ f1, f1 @ e2),
        ("e2^2 = 0", e2 @ e2, Z),
        ("f2^2 = 0", f2 @ f2, Z),
        ("e1^2 e2 - (q + q^-1) e1 e2 e1 + e2 e1^2 = 0",
         e1 @ e1 @ e2 - (e1 @ e2 @ e1).scale(q(1) + q(-1)) + e2 @ e1 @ e1, Z),
        ("f1^2 f2 - (q + q^-1) f1 f2 f1 + f2 f1^2 = 0",
         f1 @ f1 @ f2 - (f1 @ f2 @ f1).scale(q(1) + q(-1)) + f2 @ f1 @ f1, Z),
        ("e3 = e1 e2 - q^-1 e2 e1", e3, e1 @ e2 - (e2 @ e1).scale(q(-1))),
        ("f3 = f2 f1 - q f1 f2", f3, f2 @ f1 - (f1 @ f2).scale(q(1))),
        ("e3 e1 = q^-1 e1 e3", e3 @ e1, (e1 @ e3).scale(q(-1))),
        ("f3 f1 = q^-1 f1 f3", f3 @ f1, (f1 @ f3).scale(q(-1))),
        # central elements of the quotient
        ("k1^d - 1 = 0", k1 ** d - I, Z),
        ("k2^d - 1 = 0", k2 ** d - I, Z),
        ("e1^d = 0", e1 ** d, Z),
        ("f1^d = 0", f1 ** d, Z),
    ]
    return rels


def check_parity(rc: RepContext) -> bool:
    """Odd generators flip the parity of basis vectors, even ones keep it."""
    for name in ("f1", "f3", "f2", "k1", "k2", "e1", "e3", "e2"):
        p = 1 if name in ("f2", "f3", "e2", "e3") else 0
        for r, c, _ in gen_action(name, rc).entries():
            if vector_parity(r) != vector_parity(c) ^ p:
                return False
    return True


def rep_check(rc: RepContext, seed: int = 0, samples: int = 20) -> dict:
    """Relations on V_mu, the homomorphism property of rho_1 and rho_2, parity
    bookkeeping, and the 16 braiding equations."""
    import random

    checks = []
    for label, lhs, rhs in _ubar_relations(rc):
        checks.append({"check": label, "pass": lhs == rhs})
    checks.append({"check": "parity of w_(sigma,rho) is sigma + rho", "pass": check_parity(rc)})

    U = get_spec("ubar", rc.d)
    rng = random.Random(seed)
    names = ("f1", "f3", "f2", "k1", "k2", "e1", "e3", "e2")
    ok1 = ok2 = True
    for _ in range(samples):
        a = U.word(*rng.choices(names, k=rng.randint(1, 3)))
        b = U.word(*rng.choices(names, k=rng.randint(1, 3)))
        if element_action(a * b, rc) != element_action(a, rc) @ element_action(b, rc):
            ok1 = False
        if rho_n(a * b, 2, rc) != rho_n(a, 2, rc) @ rho_n(b, 2, rc):
            ok2 = False
    checks.append({"check": "rho_1 is multiplicative on sampled words", "pass": ok1})
    checks.append({"check": "rho_2 is multiplicative on sampled words", "pass": ok2})

    c = c_matrix(rc)
    for label, ok in braiding_equations(rc):
        checks.append({"check": label, "pass": ok})
    for name in names:
        g = rho_generator(name, 2, rc)
        checks.append({"check": f"c commutes with rho_2({name})", "pass": c @ g == g @ c})
    first = next((x for x in checks if not x["pass"]), None)
    return {"check": "rep", "d": rc.d, "mu": rc.mu, "identities": len(checks),
            "pass": first is None, "checks": checks, "first_failure": first}


# ------------------------------------------------------------- R on V (x) V

def _k_action_vv(rc: RepContext) -> RepMatrix:
    """The Cartan factor K of R on V (x) V.

    K = d^-2 sum q^(i1(2 i2 - j2) - j1 i2) k1^i2 k2^j2 (x) k1^i1 k2^j1 is
    diagonal; on weights (a1, b1), (a2, b2) the character sums collapse to
    q^(b2 a1 + (2 b2 + a2) b1)."""
    ctx = rc.ctx
    out = {}
    for v1, v2 in itertools.product(range(4), repeat=2):
        s1, r1 = basis_label(v1)
        s2, r2 = basis_label(v2)
        a1, b1 = r1 - s1, rc.mu + s1
        a2, b2 = r2 - s2, rc.mu + s2
        i = v1 * 4 + v2
        out[i] = {i: ctx.q(b2 * a1 + (2 * b2 + a2) * b1)}
    return RepMatrix(16, ctx, out)


def _exp_q2_matrix(x: RepMatrix, d: int) -> RepMatrix:
    from .scalar import q_number_factorial

    ctx = x.ctx
    out = RepMatrix.identity(x.dim, ctx)
    power = RepMatrix.identity(x.dim, ctx)
    for n in range(1, d):
        power = power @ x
        if power.is_zero():
            break
        out = out + power.scale(q_number_factorial(ctx, n, 2).inverse())
    return out


def rbar_on_vv(rc: RepContext, route: str = "terms", form: str = "coeff") -> RepMatrix:
    """Image of R on V (x) V.

    route 'terms' acts with every term of the universal R-matrix (in the
    requested form) through tensor_action; terms whose legs act as zero are
    skipped before any tensor products are formed.
    route 'factors' pushes each q^2-exponential factor and K through the
    representation first and multiplies 16x16 matrices, which is cheap even
    for large d.
    """
    if route == "terms":
        from .double import r_matrix

        R = r_matrix(rc.d, form)
        return tensor_action(R, rc)
    if route == "factors":
        from .double import _ut

        d = rc.d
        ctx = rc.ctx
        q = ctx.q
        qq = q(1) - q(-1)
        facs = [
            (["e3"], ["f3"], qq),
            (["e2"], ["f2"], qq),
            (["e1"], ["f1"], -qq),
            (["e3", "e2"], ["f3", "f2"], -(q(2) - 1) * qq * qq),
        ]
        out = RepMatrix.identity(16, ctx)
        for left, right, coef in facs:
            x = tensor_action(_ut(d, left, right, coef), rc)
            out = out @ _exp_q2_matrix(x, d)
        return out @ _k_action_vv(rc)
    raise ValueError(f"unknown route {route!r}")


def rbar_closed_form(rc: RepContext) -> RepMatrix:
    """The displayed closed form of R on V (x) V, entry by entry."""
    ctx = rc.ctx
    q = ctx.q
    mu = rc.mu
    qq = q(1) - q(-1)
    qi = rc.qint
    bi = basis_index
    ent = []
    for s1, r1, s2, r2 in itertools.product((0, 1), repeat=4):
        col = bi(s1, r1) * 4 + bi(s2, r2)
        pref = q(2 * mu * mu + s1 * (r2 + mu) + r1 * (s2 + mu) + mu * (s2 + r2))

        def put(v1, v2, c):
            ent.append((bi(*v1) * 4 + bi(*v2), col, pref * c))

        put((s1, r1), (s2, r2), ctx.one)
        if s1 == r1 == 1 and s2 == r2 == 0:
            put((0, 0), (1, 1), q(1) * qq * qq * qi(mu + 1) * qi(mu))
        if (s1, r1, s2, r2) == (1, 0, 0, 1):
            put((0, 1), (1, 0), -qq)
            put((0, 0), (1, 1), qq * qq * qi(mu))
        if r1 == 1 and r2 == 0:
            put((s1, 0), (s2, 1), qq * qi(mu + s1) * (-1) ** (s1 + 1))
        if s1 == 1 and s2 == 0:
            put((0, r1), (1, r2), qq * q(r1 - r2) * qi(mu + r1) * (-1) ** (1 + r2))
    return RepMatrix.from_entries(16, ctx, ent)


def flip_vv(ctx) -> RepMatrix:
    """The signed flip tau(v (x) w) = (-1)^(|v||w|) w (x) v on V (x) V."""
    out = {}
    for v1, v2 in itertools.product(range(4), repeat=2):
        sign = -1 if vector_parity(v1) and vector_parity(v2) else 1
        out[v2 * 4 + v1] = {v1 * 4 + v2: ctx.scalar(sign)}
    return RepMatrix(16, ctx, out)


def c_matrix(rc: RepContext, route: str = "factors") -> RepMatrix:
    """c = q^(-2 mu^2) tau o R on V (x) V."""
    return _c_matrix(rc.d, rc.mu, route)


@lru_cache(maxsize=None)
def _c_matrix(d, mu, route):
    rc = RepContext(d, mu)
    R = rbar_on_vv(rc, route) if route != "closed" else rbar_closed_form(rc)
    return (flip_vv(rc.ctx) @ R).scale(rc.ctx.q(-2 * mu * mu))


def braiding_table(rc: RepContext) -> list:
    """The sixteen listed images c(w_a (x) w_b), as (label, column, {row: value})."""
    ctx = rc.ctx
    q = ctx.q
    mu = rc.mu
    qq = q(1) - q(-1)
    qi = rc.qint
    W = {"00": 0, "10": 1, "01": 2, "11": 3}

    def t(a, b):
        return W[a] * 4 + W[b]

    m, m1 = qi(mu), qi(mu + 1)
    rows = [
        ("00", "00", {t("00", "00"): ctx.one}),
        ("10", "00", {t("00", "10"): q(mu), t("10", "00"): -q(mu) * qq * m}),
        ("01", "00", {t("00", "01"): q(mu), t("01", "00"): -q(mu) * qq * m}),
        ("11", "00", {t("00", "11"): q(2 * mu), t("11", "00"): q(2 * mu + 1) * qq * qq * m1 * m,
                      t("01", "10"): -q(2 * mu) * qq * m1, t("10", "01"): q(2 * mu + 1) * qq * m1}),
        ("00", "10", {t("10", "00"): q(mu)}),
        ("10", "10", {t("10", "10"): -q(2 * mu)}),
        ("01", "10", {t("10", "01"): -q(2 * mu + 1), t("11", "00"): -q(2 * mu + 1) * qq * m}),
        ("11", "10", {t("10", "11"): q(3 * mu + 1), t("11", "10"): q(3 * mu + 1) * qq * m1}),
        ("00", "01", {t("01", "00"): q(mu)}),
        ("10", "01", {t("01", "10"): -q(2 * mu + 1), t("11", "00"): q(2 * mu + 2) * qq * m,
                      t("10", "01"): q(2 * mu + 1) * qq}),
        ("01", "01", {t("01", "01"): -q(2 * mu)}),
        ("11", "01", {t("01", "11"): q(3 * mu + 1), t("11", "01"): q(3 * mu + 1) * qq * m1}),
        ("00", "11", {t("11", "00"): q(2 * mu)}),
        ("10", "11", {t("11", "10"): q(3 * mu + 1)}),
        ("01", "11", {t("11", "01"): q(3 * mu + 1)}),
        ("11", "11", {t("11", "11"): q(4 * mu + 2)}),
    ]
    return [(f"c(w{a} (x) w{b})", t(a, b), {r: v for r, v in img.items() if v}) for a, b, img in rows]


def braiding_equations(rc: RepContext, c: RepMatrix | None = None) -> list:
    """[(label, pass)] comparing each column of c with the listed image."""
    c = c if c is not None else c_matrix(rc)
    out = []
    for label, col, img in braiding_table(rc):
        got = {r: row[col] for r, row in c.rows.items() if col in row}
        out.append((label, got == img))
    return out
