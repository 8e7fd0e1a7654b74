"""Exact arithmetic in the cyclotomic field Q[q]/(Phi_d(q)) for odd d >= 3.

A scalar is stored as an integer numerator vector (coefficients of
1, q, ..., q^(phi(d)-1)) over a single positive integer denominator, kept
in lowest terms so that equal field elements have equal representations.
"""

from __future__ import annotations

from fractions import Fraction
from functools import lru_cache
from math import gcd


class DivisionByZero(ZeroDivisionError):
    pass


def _poly_divmod_int(num, den):
    """Exact division of integer polynomials (lists, low degree first) by a monic den."""
    num = list(num)
    out = [0] * max(len(num) - len(den) + 1, 1)
    for k in range(len(num) - len(den), -1, -1):
        c = num[k + len(den) - 1]
        out[k] = c
        if c:
            for i, b in enumerate(den):
                num[k + i] -= c * b
    return out, num[: len(den) - 1]


@lru_cache(maxsize=None)
def cyclotomic_poly(n: int) -> tuple:
    """Integer coefficients of Phi_n, lowest degree first."""
    if n == 1:
        return (-1, 1)
    p = [-1] + [0] * (n - 1) + [1]
    for e in range(1, n):
        if n % e == 0:
            p, rem = _poly_divmod_int(p, list(cyclotomic_poly(e)))
            assert not any(rem)
    while len(p) > 1 and p[-1] == 0:
        p.pop()
    return tuple(p)


MUL_MEMO_LIMIT = 1 << 20


class FieldContext:
    """The field F = Q[q]/(Phi_d) together with cached reduction tables."""

    __slots__ = ("d", "phi_d", "degree", "_red", "_qpow", "zero", "one", "_mul_memo", "__weakref__")

    def __init__(self, d: int):
        if not isinstance(d, int) or d < 3 or d % 2 == 0:
            raise ValueError(f"d must be an odd integer >= 3, got {d!r}")
        self.d = d
        self.phi_d = cyclotomic_poly(d)
        self.degree = len(self.phi_d) - 1
        n = self.degree
        # _red[k] = q^k reduced, for 0 <= k < 2d (covers products and q-powers)
        red = []
        cur = [1] + [0] * (n - 1)
        for _ in range(max(2 * d, 2 * n)):
            red.append(tuple(cur))
            top = cur[-1]
            cur = [0] + cur[:-1]
            if top:
                for i in range(n):
                    cur[i] -= top * self.phi_d[i]
        self._red = tuple(red)
        self._qpow = tuple(CyclotomicScalar(self, red[k], 1) for k in range(d))
        self.zero = CyclotomicScalar(self, (0,) * n, 1)
        self.one = CyclotomicScalar(self, red[0], 1)
        # products repeat heavily in tensor computations; see CyclotomicScalar.__mul__
        self._mul_memo = {}

    def __repr__(self):
        return f"FieldContext(d={self.d})"

    def __reduce__(self):
        return (field, (self.d,))

    def q(self, n: int = 1) -> "CyclotomicScalar":
        return self._qpow[n % self.d]

    def scalar(self, value) -> "CyclotomicScalar":
        """Coerce an int, Fraction or scalar into F."""
        if isinstance(value, CyclotomicScalar):
            if value.ctx is not self:
                raise ValueError("scalar from a different field")
            return value
        fr = Fraction(value)
        num = [0] * self.degree
        num[0] = fr.numerator
        return CyclotomicScalar(self, tuple(num), fr.denominator)

    def from_coeffs(self, coeffs) -> "CyclotomicScalar":
        """Build a scalar from rational coefficients of 1, q, q^2, ... (any length)."""
        fr = [Fraction(c) for c in coeffs]
        den = 1
        for c in fr:
            den = den * c.denominator // gcd(den, c.denominator)
        ints = [c.numerator * (den // c.denominator) for c in fr]
        return CyclotomicScalar.make(self, self._reduce(ints), den)

    def _reduce(self, ints):
        n = self.degree
        if len(ints) <= n:
            return list(ints) + [0] * (n - len(ints))
        out = list(ints[:n])
        red = self._red
        for k in range(n, len(ints)):
            c = ints[k]
            if c:
                row = red[k % self.d] if k >= len(red) else red[k]
                for i in range(n):
                    out[i] += c * row[i]
        return out


@lru_cache(maxsize=None)
def field(d: int) -> FieldContext:
    """Shared FieldContext for order d."""
    return FieldContext(d)


class CyclotomicScalar:
    __slots__ = ("ctx", "num", "den", "_hash")

    def __init__(self, ctx, num, den):
        self.ctx = ctx
        self.num = num
        self.den = den
        self._hash = None

    @staticmethod
    def make(ctx, num, den):
        if den == 1:
            return CyclotomicScalar(ctx, tuple(num), 1)
        if den < 0:
            num = [-a for a in num]
            den = -den
        g = den
        for a in num:
            if a:
                g = gcd(g, a)
                if g == 1:
                    break
        if g != 1:
            num = [a // g for a in num]
            den //= g
        if not any(num):
            den = 1
        return CyclotomicScalar(ctx, tuple(num), den)

    @property
    def coeffs(self):
        return tuple(Fraction(a, self.den) for a in self.num)

    def is_zero(self) -> bool:
        return not any(self.num)

    def __bool__(self):
        return any(self.num)

    def _coerce(self, other):
        if isinstance(other, CyclotomicScalar):
            return other
        if isinstance(other, (int, Fraction)):
            return self.ctx.scalar(other)
        return NotImplemented

    def __add__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        if self.den == other.den:
            return CyclotomicScalar.make(self.ctx, [a + b for a, b in zip(self.num, other.num)], self.den)
        da, db = self.den, other.den
        return CyclotomicScalar.make(
            self.ctx, [a * db + b * da for a, b in zip(self.num, other.num)], da * db
        )

    __radd__ = __add__

    def __neg__(self):
        return CyclotomicScalar(self.ctx, tuple(-a for a in self.num), self.den)

    def __sub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if type(other) is not CyclotomicScalar:
            if isinstance(other, int):
                return CyclotomicScalar.make(self.ctx, [a * other for a in self.num], self.den)
            other = self._coerce(other)
            if other is NotImplemented:
                return other
        one = self.ctx.one
        if self is one:
            return other
        if other is one:
            return self
        key = (self.num, self.den, other.num, other.den)
        memo = self.ctx._mul_memo
        hit = memo.get(key)
        if hit is None:
            hit = self._mul(other)
            if len(memo) > MUL_MEMO_LIMIT:
                memo.clear()
            memo[key] = hit
        return hit

    def _mul(self, other):
        a, b = self.num, other.num
        ctx = self.ctx
        ia = [i for i, x in enumerate(a) if x]
        if not ia:
            return ctx.zero
        ib = [j for j, y in enumerate(b) if y]
        if not ib:
            return ctx.zero
        den = self.den * other.den
        if len(ia) == 1 or len(ib) == 1:
            # x q^i times a polynomial: scale, then shift through the q^k table
            if len(ia) != 1:
                a, b, ia, ib = b, a, ib, ia
            i = ia[0]
            x = a[i]
            n = len(a)
            out = [0] * n
            red = ctx._red
            for j in ib:
                v = x * b[j]
                k = i + j
                if k < n:
                    out[k] += v
                else:
                    row = red[k]
                    for t in range(n):
                        if row[t]:
                            out[t] += v * row[t]
            return CyclotomicScalar.make(ctx, out, den)
        prod = [0] * (len(a) + len(b) - 1)
        for i in ia:
            x = a[i]
            for j in ib:
                prod[i + j] += x * b[j]
        return CyclotomicScalar.make(ctx, ctx._reduce(prod), den)

    __rmul__ = __mul__

    def mul_q(self, k: int) -> "CyclotomicScalar":
        """Multiply by q^k (a shift followed by reduction)."""
        k %= self.ctx.d
        if k == 0:
            return self
        shifted = [0] * k + list(self.num)
        return CyclotomicScalar(self.ctx, tuple(self.ctx._reduce(shifted)), self.den)

    def inverse(self) -> "CyclotomicScalar":
        return invert(self)

    def __truediv__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return self * invert(other)

    def __rtruediv__(self, other):
        return self.ctx.scalar(other) * invert(self)

    def __pow__(self, e: int):
        if e < 0:
            return invert(self) ** (-e)
        result = self.ctx.one
        base = self
        while e:
            if e & 1:
                result = result * base
            base = base * base
            e >>= 1
        return result

    def __eq__(self, other):
        if isinstance(other, CyclotomicScalar):
            return self.num == other.num and self.den == other.den and self.ctx.d == other.ctx.d
        if isinstance(other, (int, Fraction)):
            return self == self.ctx.scalar(other)
        return NotImplemented

    def __hash__(self):
        if self._hash is None:
            self._hash = hash((self.ctx.d, self.num, self.den))
        return self._hash

    def __repr__(self):
        return f"CyclotomicScalar(d={self.ctx.d}, {self})"

    def __str__(self):
        parts = []
        for k, a in enumerate(self.num):
            if not a:
                continue
            c = Fraction(a, self.den)
            mono = "" if k == 0 else ("q" if k == 1 else f"q^{k}")
            if k == 0:
                parts.append(str(c))
            elif c == 1:
                parts.append(mono)
            elif c == -1:
                parts.append("-" + mono)
            else:
                parts.append(f"{c}*{mono}")
        if not parts:
            return "0"
        return " + ".join(parts).replace("+ -", "- ")

    def to_json(self) -> dict:
        return {"d": self.ctx.d, "coeffs": [str(c) for c in self.coeffs]}

    @staticmethod
    def from_json(obj) -> "CyclotomicScalar":
        ctx = field(int(obj["d"]))
        coeffs = obj["coeffs"]
        if len(coeffs) != ctx.degree:
            raise ValueError(f"expected {ctx.degree} coefficients, got {len(coeffs)}")
        return ctx.from_coeffs([Fraction(c) for c in coeffs])


def q_power(ctx: FieldContext, n: int) -> CyclotomicScalar:
    return ctx.q(n)


def invert(x: CyclotomicScalar) -> CyclotomicScalar:
    """Inverse in F by solving the linear system (multiplication by x) y = 1."""
    if x.is_zero():
        raise DivisionByZero("inverse of zero in the cyclotomic field")
    ctx = x.ctx
    n = ctx.degree
    # column k of the matrix is x * q^k
    cols = []
    for k in range(n):
        cols.append(ctx._reduce([0] * k + list(x.num)))
    m = [[Fraction(cols[k][i]) for k in range(n)] + [Fraction(int(i == 0) * x.den)] for i in range(n)]
    for c in range(n):
        p = next(r for r in range(c, n) if m[r][c] != 0)
        m[c], m[p] = m[p], m[c]
        pv = m[c][c]
        m[c] = [v / pv for v in m[c]]
        for r in range(n):
            if r != c and m[r][c] != 0:
                f = m[r][c]
                m[r] = [a - f * b for a, b in zip(m[r], m[c])]
    return ctx.from_coeffs([m[i][n] for i in range(n)])


def q_int(ctx: FieldContext, n: int) -> CyclotomicScalar:
    """[n] = q^(n-1) + q^(n-3) + ... + q^(1-n); [-n] = -[n]."""
    if n < 0:
        return -q_int(ctx, -n)
    return _q_int(ctx.d, n)


@lru_cache(maxsize=None)
def _q_int(d: int, n: int) -> CyclotomicScalar:
    ctx = field(d)
    acc = [0] * d
    for k in range(n):
        acc[(n - 1 - 2 * k) % d] += 1
    return CyclotomicScalar.make(ctx, ctx._reduce(acc), 1)


def q_factorial(ctx: FieldContext, n: int) -> CyclotomicScalar:
    if n < 0:
        raise IndexError("q_factorial of a negative integer")
    out = ctx.one
    for k in range(1, n + 1):
        out = out * q_int(ctx, k)
    return out


def gauss_binomial(ctx: FieldContext, n: int, k: int) -> CyclotomicScalar:
    """Symmetric Gaussian binomial [n brack k] from the q-Pascal rule (no division)."""
    if k < 0 or k > n:
        raise IndexError(f"gauss_binomial needs 0 <= k <= n, got n={n}, k={k}")
    return _gauss(ctx.d, n, k)


@lru_cache(maxsize=None)
def _gauss(d: int, n: int, k: int) -> CyclotomicScalar:
    ctx = field(d)
    if k == 0 or k == n:
        return ctx.one
    # [n brack k] = q^{-k} [n-1 brack k] + q^{n-k} [n-1 brack k-1]
    return _gauss(d, n - 1, k).mul_q(-k) + _gauss(d, n - 1, k - 1).mul_q(n - k)


def q_number(ctx: FieldContext, k: int, base_power: int = 1) -> CyclotomicScalar:
    """(k)_x = 1 + x + ... + x^(k-1) with x = q^base_power."""
    acc = [0] * ctx.d
    for i in range(k):
        acc[(i * base_power) % ctx.d] += 1
    return CyclotomicScalar.make(ctx, ctx._reduce(acc), 1)


def q_number_factorial(ctx: FieldContext, k: int, base_power: int = 1) -> CyclotomicScalar:
    out = ctx.one
    for i in range(1, k + 1):
        out = out * q_number(ctx, i, base_power)
    return out
