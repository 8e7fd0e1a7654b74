"""Exact sparse linear algebra over the cyclotomic field.

Vectors are dicts index -> CyclotomicScalar with zero entries absent.  All
elimination is Gauss-Jordan with the pivot scaled to 1 and the pivot chosen
as the first nonzero column of the incoming row, so results are reproducible.
"""

from __future__ import annotations

from .scalar import CyclotomicScalar


def _axpy(target: dict, coef: CyclotomicScalar, row: dict):
    """target -= coef * row, in place."""
    for k, v in row.items():
        w = target.get(k)
        nv = -(coef * v) if w is None else w - coef * v
        if nv:
            target[k] = nv
        elif w is not None:
            del target[k]


class Echelon:
    """Incrementally maintained reduced row echelon form.

    `add` reduces a vector against the stored rows and keeps it if anything
    survives.  The stored rows stay fully reduced with respect to each other's
    pivots, so membership tests are a single reduction pass.
    """

    def __init__(self, track: bool = False):
        self.rows = {}          # pivot -> row (pivot entry 1)
        self.order = []         # pivots in insertion order
        self.track = track
        self.combos = {}        # pivot -> dict(input id -> coef), when tracking
        self._n_added = 0

    def __len__(self):
        return len(self.rows)

    def reduce(self, vec: dict, combo: dict | None = None) -> dict:
        v = dict(vec)
        # pivots may be hit in any order, so iterate until no stored pivot remains
        changed = True
        while changed and v:
            changed = False
            for p in [k for k in v if k in self.rows]:
                c = v.get(p)
                if c is None:
                    continue
                _axpy(v, c, self.rows[p])
                if combo is not None:
                    _axpy(combo, c, self.combos[p])
                changed = True
        return v

    def add(self, vec: dict) -> bool:
        """Insert vec; True if it was independent of the current span."""
        idx = self._n_added
        self._n_added += 1
        combo = None
        if self.track:
            one = next(iter(vec.values())).ctx.one if vec else None
            combo = {idx: one} if one is not None else {}
        v = self.reduce(vec, combo)
        if not v:
            return False
        p = min(v)
        inv = v[p].inverse()
        v = {k: x * inv for k, x in v.items()}
        if combo is not None:
            combo = {k: x * inv for k, x in combo.items()}
        # keep the stored rows reduced against the new pivot
        for q_, row in self.rows.items():
            c = row.get(p)
            if c is not None:
                _axpy(row, c, v)
                if combo is not None:
                    _axpy(self.combos[q_], c, combo)
        self.rows[p] = v
        self.order.append(p)
        if combo is not None:
            self.combos[p] = combo
        return True

    def contains(self, vec: dict) -> bool:
        return not self.reduce(vec)


def rank(vectors) -> int:
    e = Echelon()
    for v in vectors:
        e.add(v)
    return len(e)


def nullspace(rows, ncols: int, ctx) -> list:
    """Basis of {x : row . x = 0 for every row}, as dict vectors over range(ncols)."""
    e = Echelon()
    for r in rows:
        e.add(r)
    pivots = set(e.rows)
    out = []
    for free in range(ncols):
        if free in pivots:
            continue
        vec = {free: ctx.one}
        for p, row in e.rows.items():
            c = row.get(free)
            if c is not None:
                vec[p] = -c
        out.append(vec)
    return out


def inverse(matrix: list, ctx) -> list:
    """Inverse of a dense square matrix given as a list of row lists."""
    n = len(matrix)
    aug = []
    for i, row in enumerate(matrix):
        if len(row) != n:
            raise ValueError("matrix is not square")
        v = {j: x for j, x in enumerate(row) if x}
        v[n + i] = ctx.one
        aug.append(v)
    e = Echelon()
    for v in aug:
        e.add(v)
    if any(p >= n for p in e.rows) or len(e.rows) != n:
        raise ZeroDivisionError("singular matrix")
    out = [[ctx.zero] * n for _ in range(n)]
    for p, row in e.rows.items():
        for k, x in row.items():
            if k >= n:
                out[p][k - n] = x
    return out


def mat_mul_dense(a: list, b: list, ctx) -> list:
    n, m, k = len(a), len(b), len(b[0]) if b else 0
    out = [[ctx.zero] * k for _ in range(n)]
    for i in range(n):
        for t in range(m):
            x = a[i][t]
            if not x:
                continue
            bt = b[t]
            row = out[i]
            for j in range(k):
                if bt[j]:
                    row[j] = row[j] + x * bt[j]
    return out
