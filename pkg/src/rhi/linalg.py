"""Exact sparse linear algebra over a FieldSpec.

Vectors are dicts ``{column: scalar}`` holding no zero entries.  Everything
here is elementary row reduction; it is kept dependency-free because the
scalars are Fractions or residues, not machine numbers.
"""

from __future__ import annotations

from .fields import FieldSpec


def vec_scale(field: FieldSpec, c, v: dict) -> dict:
    if c == field.zero:
        return {}
    return {k: field.mul(c, x) for k, x in v.items()}


def vec_axpy(field: FieldSpec, v: dict, c, w: dict) -> dict:
    """Return v + c*w, dropping cancelled entries."""
    out = dict(v)
    zero = field.zero
    for k, x in w.items():
        val = field.add(out.get(k, zero), field.mul(c, x))
        if val == zero:
            out.pop(k, None)
        else:
            out[k] = val
    return out


class Echelon:
    """Incremental row-echelon store with rows indexed by their pivot column.

    Stored rows are normalized to pivot coefficient 1 but are not
    inter-reduced; `canonical_rows` produces the fully reduced basis.
    An optional auxiliary vector can be carried through the same row
    operations, which is how nullspace combinations are tracked.
    """

    __slots__ = ("field", "rows", "aux")

    def __init__(self, field: FieldSpec):
        self.field = field
        self.rows: dict[int, dict] = {}
        self.aux: dict[int, dict] = {}

    def __len__(self) -> int:
        return len(self.rows)

    def reduce(self, vec: dict, aux: dict | None = None):
        """Reduce vec against the stored rows; returns (remainder, aux_remainder)."""
        field = self.field
        v = dict(vec)
        a = dict(aux) if aux is not None else None
        for p in sorted(self.rows):
            c = v.get(p)
            if c:
                v = vec_axpy(field, v, field.neg(c), self.rows[p])
                if a is not None:
                    a = vec_axpy(field, a, field.neg(c), self.aux[p])
        return v, a

    def insert(self, vec: dict, aux: dict | None = None):
        """Insert a vector; returns its new pivot column, or None if dependent."""
        v, a = self.reduce(vec, aux)
        if not v:
            return None
        p = min(v)
        inv = self.field.inv(v[p])
        self.rows[p] = vec_scale(self.field, inv, v)
        self.aux[p] = vec_scale(self.field, inv, a) if a is not None else {}
        return p

    def contains(self, vec: dict) -> bool:
        v, _ = self.reduce(vec)
        return not v

    def canonical_rows(self) -> list[dict]:
        """Fully inter-reduced rows sorted by pivot (reduced row-echelon form)."""
        field = self.field
        pivots = sorted(self.rows)
        reduced: dict[int, dict] = {}
        for p in reversed(pivots):
            row = self.rows[p]
            for q in pivots:
                if q > p and q in row:
                    row = vec_axpy(field, row, field.neg(row[q]), reduced[q])
            reduced[p] = row
        return [reduced[p] for p in pivots]


def echelonize(field: FieldSpec, rows) -> list[dict]:
    """Reduced row-echelon basis of the span of the given sparse rows."""
    ech = Echelon(field)
    for row in rows:
        ech.insert(row)
    return ech.canonical_rows()


def rank(field: FieldSpec, rows) -> int:
    ech = Echelon(field)
    for row in rows:
        ech.insert(row)
    return len(ech)


def left_kernel(field: FieldSpec, rows: list) -> list[dict]:
    """Echelonized basis of {x : sum_i x_i * rows[i] = 0}.

    The combination coordinates are tracked through the elimination as
    auxiliary vectors; rows that reduce to zero yield kernel members.
    """
    ech = Echelon(field)
    combos = []
    for i, row in enumerate(rows):
        v, a = ech.reduce(row, {i: field.one})
        if not v:
            combos.append(a)
        else:
            p = min(v)
            inv = field.inv(v[p])
            ech.rows[p] = vec_scale(field, inv, v)
            ech.aux[p] = vec_scale(field, inv, a)
    return echelonize(field, combos)


def intersect_spans(field: FieldSpec, u_rows: list, v_rows: list, width: int) -> list[dict]:
    """Echelonized basis of span(u_rows) ∩ span(v_rows).

    Zassenhaus: eliminate [u | u] and [v | 0] rows; rows whose left block
    vanished have right blocks spanning the intersection.  `width` bounds the
    column indices so the two blocks cannot collide.
    """
    ech = Echelon(field)
    for u in u_rows:
        doubled = dict(u)
        for k, x in u.items():
            doubled[k + width] = x
        ech.insert(doubled)
    for v in v_rows:
        ech.insert(dict(v))
    out = []
    for p, row in ech.rows.items():
        if p >= width:
            out.append({k - width: x for k, x in row.items()})
    return echelonize(field, out)
