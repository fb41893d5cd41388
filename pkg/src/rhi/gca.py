"""Graded-commutative algebras over exact fields.

Algebras are realized degree by degree up to a truncation window, either from
a presentation (generators, homogeneous relations) or from an explicit
multiplication table.  An algebra carries a finiteness certificate: `exact`
means every degree above `top_degree` is provably zero, so products may be
formed in arbitrary degrees; otherwise nothing is known past `window`.

All scalar arithmetic is exact.  The Koszul sign convention lives in
`koszul_sign`, which is the single code path used for every sign in the
package (free monomials here, tensor factors in `tensor`).
"""

from __future__ import annotations

from dataclasses import dataclass, field as dc_field
from fractions import Fraction

from . import expr as expr_mod
from .errors import ConfigError, ParseError, TruncationError, ValidationError
from .fields import FieldSpec
from .linalg import Echelon


def koszul_sign(left_degrees, right_degrees) -> int:
    """Sign for factor-wise multiplication of two degree-slot sequences.

    Multiplying (a_1 ⊗ … ⊗ a_n)(b_1 ⊗ … ⊗ b_n) factor-wise moves each b_j
    leftward past every a_i with i > j, so the exponent is
    sum over j < i of |a_i|·|b_j|.  Only the parity matters.
    """
    s = 0
    prefix = 0
    for i, a in enumerate(left_degrees):
        if i:
            prefix += right_degrees[i - 1]
        if a & 1:
            s += prefix
    return -1 if s & 1 else 1


def swap_sign(degree_left: int, degree_right: int) -> int:
    """Sign picked up when two homogeneous elements transpose:
    b·a = swap_sign(|a|, |b|) · a·b."""
    return koszul_sign([0, degree_left], [degree_right, 0])


# ---------------------------------------------------------------------------
# presentations and free monomials
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class Generator:
    name: str
    degree: int


@dataclass(frozen=True)
class Presentation:
    """Generators, homogeneous relation expressions, and the realization window."""

    generators: tuple
    relations: tuple
    truncation_degree: int

    def __init__(self, generators, relations, truncation_degree):
        object.__setattr__(self, "generators", tuple(generators))
        object.__setattr__(self, "relations", tuple(relations))
        object.__setattr__(self, "truncation_degree", truncation_degree)


@dataclass(frozen=True)
class MultiplicationTable:
    """Explicit finite basis with structure constants for every ordered pair."""

    basis: tuple          # ((name, degree), ...)
    unit: str
    products: dict        # (left_name, right_name) -> ((coeff, name), ...)

    def __init__(self, basis, unit, products):
        object.__setattr__(self, "basis", tuple((n, d) for n, d in basis))
        object.__setattr__(self, "unit", unit)
        object.__setattr__(self, "products", dict(products))


def _mono_degree(mono, degrees):
    return sum(e * d for e, d in zip(mono, degrees))


def _mono_mul(mono1, mono2, degrees, characteristic):
    """Product of two free monomials: (sign, exponents) or None when it vanishes.

    Over characteristic != 2 an odd generator squares to zero, so any slot
    where odd exponents accumulate past 1 kills the product.
    """
    if characteristic != 2:
        for e1, e2, d in zip(mono1, mono2, degrees):
            if d & 1 and e1 + e2 > 1:
                return None
    sign = koszul_sign(
        [e * d for e, d in zip(mono1, degrees)],
        [e * d for e, d in zip(mono2, degrees)],
    )
    return sign, tuple(e1 + e2 for e1, e2 in zip(mono1, mono2))


def _monomials_of_degree(degrees, caps, d):
    """All exponent tuples of total degree d, in descending lexicographic order."""
    n = len(degrees)
    out = []
    acc = [0] * n

    def rec(i, remaining):
        if i == n:
            if remaining == 0:
                out.append(tuple(acc))
            return
        step = degrees[i]
        top = remaining // step
        if caps[i] is not None:
            top = min(top, caps[i])
        for e in range(top, -1, -1):
            acc[i] = e
            rec(i + 1, remaining - e * step)
        acc[i] = 0

    rec(0, d)
    return out


class _FreePoly:
    """Element of the free graded-commutative algebra on declared generators."""

    __slots__ = ("ctx", "terms")

    def __init__(self, ctx, terms):
        self.ctx = ctx
        self.terms = {m: c for m, c in terms.items() if c != ctx.field.zero}

    def __add__(self, other):
        field = self.ctx.field
        out = dict(self.terms)
        for m, c in other.terms.items():
            out[m] = field.add(out.get(m, field.zero), c)
        return _FreePoly(self.ctx, out)

    def __sub__(self, other):
        return self + (-other)

    def __neg__(self):
        field = self.ctx.field
        return _FreePoly(self.ctx, {m: field.neg(c) for m, c in self.terms.items()})

    def __mul__(self, other):
        ctx = self.ctx
        field = ctx.field
        out = {}
        for m1, c1 in self.terms.items():
            for m2, c2 in other.terms.items():
                hit = _mono_mul(m1, m2, ctx.degrees, field.characteristic)
                if hit is None:
                    continue
                sign, m = hit
                c = field.mul(c1, c2)
                if sign < 0:
                    c = field.neg(c)
                out[m] = field.add(out.get(m, field.zero), c)
        return _FreePoly(ctx, out)

    def degrees_present(self):
        return sorted({_mono_degree(m, self.ctx.degrees) for m in self.terms})


class _FreeContext:
    def __init__(self, field, generators):
        self.field = field
        self.names = [g.name for g in generators]
        self.degrees = tuple(g.degree for g in generators)
        self._index = {g.name: i for i, g in enumerate(generators)}
        self._unit = tuple(0 for _ in generators)

    def scalar(self, fr: Fraction):
        return _FreePoly(self, {self._unit: self.field.coerce(fr)})

    def symbol(self, name):
        i = self._index.get(name)
        if i is None:
            raise ParseError(f"unknown generator {name!r}")
        mono = tuple(1 if j == i else 0 for j in range(len(self.degrees)))
        return _FreePoly(self, {mono: self.field.one})


# ---------------------------------------------------------------------------
# elements
# ---------------------------------------------------------------------------

class Element:
    """Exact linear combination of basis vectors, stored per degree.

    `comps` maps a degree to a sparse coordinate dict over that degree's
    basis; zero coordinates and empty degrees are never stored.
    """

    __slots__ = ("algebra", "comps")

    def __init__(self, algebra, comps):
        self.algebra = algebra
        self.comps = comps

    def is_zero(self) -> bool:
        return not self.comps

    def support_degrees(self):
        return sorted(self.comps)

    @property
    def degree(self):
        """Degree of a homogeneous element (zero counts as degree None)."""
        if not self.comps:
            return None
        degs = list(self.comps)
        if len(degs) > 1:
            raise ValidationError(f"element is not homogeneous: degrees {sorted(degs)}")
        return degs[0]

    def coords(self, d) -> dict:
        return dict(self.comps.get(d, {}))

    def __eq__(self, other):
        if not isinstance(other, Element):
            return NotImplemented
        return self.algebra is other.algebra and self.comps == other.comps

    __hash__ = None

    def __add__(self, other):
        self._check(other)
        field = self.algebra.field
        out = {d: dict(v) for d, v in self.comps.items()}
        for d, v in other.comps.items():
            acc = out.setdefault(d, {})
            for i, c in v.items():
                s = field.add(acc.get(i, field.zero), c)
                if s == field.zero:
                    acc.pop(i, None)
                else:
                    acc[i] = s
        return self.algebra.element(out)

    def __sub__(self, other):
        return self + (-other)

    def __neg__(self):
        field = self.algebra.field
        return Element(
            self.algebra,
            {d: {i: field.neg(c) for i, c in v.items()} for d, v in self.comps.items()},
        )

    def __mul__(self, other):
        if isinstance(other, Element):
            self._check(other)
            return self.algebra.multiply(self, other)
        return self.scale(other)

    def __rmul__(self, other):
        return self.scale(other)

    def __pow__(self, k: int):
        if k < 0:
            raise ValidationError("negative powers are not defined")
        out = self.algebra.one()
        for _ in range(k):
            out = out * self
        return out

    def scale(self, c):
        field = self.algebra.field
        c = field.coerce(c)
        if c == field.zero:
            return self.algebra.zero()
        return Element(
            self.algebra,
            {d: {i: field.mul(c, x) for i, x in v.items()} for d, v in self.comps.items()},
        )

    def _check(self, other):
        if self.algebra is not other.algebra:
            raise ValidationError("elements belong to different algebras")

    def __repr__(self):
        return f"<{self.algebra.element_expr(self)}>"


# ---------------------------------------------------------------------------
# algebra base
# ---------------------------------------------------------------------------

class GradedAlgebra:
    """Shared behaviour of realized algebras.

    Subclasses populate `field`, `_dims`, `window`, `exact`, `top_degree`
    and implement `_compute_basis_product`, `basis_expr`, `symbols`.
    """

    field: FieldSpec
    window: int
    exact: bool
    top_degree: int

    def _init_base(self, field, dims, window, exact):
        self.field = field
        self._dims = {d: n for d, n in dims.items() if n}
        self.window = window
        self.exact = exact
        self.top_degree = max((d for d in self._dims), default=0)
        self._prod_cache = {}
        self._tensor_powers = {}

    def dim(self, d: int) -> int:
        if d < 0:
            return 0
        if d <= self.window:
            return self._dims.get(d, 0)
        if self.exact:
            return 0
        raise TruncationError(
            f"degree {d} lies beyond the realized window {self.window}", degree=d
        )

    def degrees(self) -> list:
        return sorted(self._dims)

    def dims_list(self) -> list:
        """Dimension sequence in degrees 0..window."""
        return [self._dims.get(d, 0) for d in range(self.window + 1)]

    def zero(self) -> Element:
        return Element(self, {})

    def basis_element(self, d: int, i: int) -> Element:
        if not 0 <= i < self.dim(d):
            raise ValidationError(f"no basis vector {i} in degree {d}")
        return Element(self, {d: {i: self.field.one}})

    def one(self) -> Element:
        d, i = self._unit_position()
        return Element(self, {d: {i: self.field.one}})

    def element(self, comps: dict) -> Element:
        zero = self.field.zero
        clean = {}
        for d, v in comps.items():
            vv = {i: c for i, c in v.items() if c != zero}
            if vv:
                clean[d] = vv
        return Element(self, clean)

    def product_degree_known(self, d: int) -> bool:
        return self.exact or d <= self.window

    def basis_product(self, d1, i1, d2, i2) -> dict:
        """Sparse coordinates of (basis d1,i1)·(basis d2,i2) in degree d1+d2."""
        d = d1 + d2
        if d > self.window:
            if self.exact:
                return {}
            raise TruncationError(
                f"basis product lands in degree {d} beyond the window {self.window}",
                degree=d,
            )
        key = (d1, i1, d2, i2)
        hit = self._prod_cache.get(key)
        if hit is None:
            hit = self._compute_basis_product(d1, i1, d2, i2)
            self._prod_cache[key] = hit
        return hit

    def multiply(self, a: Element, b: Element, clip: bool = False) -> Element:
        """Bilinear product; `clip` silently drops pairs past a truncated window.

        On exact algebras products above the top degree are provably zero and
        never error regardless of `clip`.
        """
        field = self.field
        zero = field.zero
        out = {}
        for d1, v1 in a.comps.items():
            for d2, v2 in b.comps.items():
                d = d1 + d2
                if self.exact:
                    if d > self.top_degree:
                        continue
                elif d > self.window:
                    if clip:
                        continue
                    raise TruncationError(
                        f"product of degrees {d1} and {d2} exceeds the truncation "
                        f"window {self.window}",
                        degree=d,
                    )
                acc = out.setdefault(d, {})
                for i1, c1 in v1.items():
                    for i2, c2 in v2.items():
                        prod = self.basis_product(d1, i1, d2, i2)
                        if not prod:
                            continue
                        c = field.mul(c1, c2)
                        for j, pc in prod.items():
                            s = field.add(acc.get(j, zero), field.mul(c, pc))
                            if s == zero:
                                acc.pop(j, None)
                            else:
                                acc[j] = s
        return self.element(out)

    # -- expressions --------------------------------------------------------

    def normal_form(self, text: str) -> Element:
        """Parse an expression and return its normal-form element."""
        table = self.symbols()

        def symbol(name):
            if name not in table:
                raise ParseError(f"unknown generator {name!r}")
            return table[name]

        return expr_mod.parse_eval(text, lambda fr: self.one().scale(fr), symbol)

    def element_expr(self, e: Element) -> str:
        """Render an element as a re-parseable expression string."""
        if e.is_zero():
            return "0"
        field = self.field
        parts = []
        for d in sorted(e.comps):
            for i in sorted(e.comps[d]):
                c = e.comps[d][i]
                bexpr = self.basis_expr(d, i)
                if field.is_rational and c < 0:
                    sign, mag = "-", -c
                else:
                    sign, mag = "+", c
                if bexpr == "1":
                    body = field.format_scalar(mag)
                elif mag == field.one:
                    body = bexpr
                else:
                    body = f"{field.format_scalar(mag)}*{bexpr}"
                parts.append((sign, body))
        first_sign, first_body = parts[0]
        text = ("-" if first_sign == "-" else "") + first_body
        for sign, body in parts[1:]:
            text += f" {sign} {body}"
        return text

    # -- subclass hooks ------------------------------------------------------

    def _unit_position(self):
        raise NotImplementedError

    def _compute_basis_product(self, d1, i1, d2, i2) -> dict:
        raise NotImplementedError

    def basis_expr(self, d, i) -> str:
        raise NotImplementedError

    def symbols(self) -> dict:
        raise NotImplementedError


# ---------------------------------------------------------------------------
# presentation-mode realization
# ---------------------------------------------------------------------------

class PresentationAlgebra(GradedAlgebra):
    """Quotient of a free graded-commutative algebra, realized degree-wise.

    Basis in degree d: the free monomials of degree d that are not pivots of
    the relation subspace, under descending graded-lexicographic order by
    generator declaration order.
    """

    def __init__(self, field, presentation: Presentation):
        gens = presentation.generators
        names = [g.name for g in gens]
        if len(set(names)) != len(names):
            raise ValidationError(f"duplicate generator names in {names}")
        for g in gens:
            if g.degree < 1:
                raise ValidationError(
                    f"generator {g.name!r} has degree {g.degree}; presentation mode "
                    "requires degrees >= 1"
                )
        D = presentation.truncation_degree
        max_gen = max((g.degree for g in gens), default=0)
        if D < max_gen:
            raise ConfigError(
                f"truncation degree {D} is below the maximum generator degree {max_gen}"
            )

        self.presentation = presentation
        self._ctx = _FreeContext(field, gens)
        self._gen_degrees = self._ctx.degrees
        caps = [
            1 if (g.degree & 1 and field.characteristic != 2) else None for g in gens
        ]

        relations = []
        for text in presentation.relations:
            poly = expr_mod.parse_eval(text, self._ctx.scalar, self._ctx.symbol)
            degs = poly.degrees_present()
            if len(degs) > 1:
                raise ValidationError(
                    f"relation {text!r} is not homogeneous: degrees {degs}"
                )
            if not degs:
                continue  # vanished in the free algebra (e.g. an odd square)
            if degs[0] < 1:
                raise ValidationError(f"relation {text!r} has degree 0")
            relations.append((text, degs[0], poly))
        self._relations = relations

        self._monos = {}
        self._mono_index = {}
        self._rel_ech = {}
        self._basis = {}
        dims = {}
        for d in range(D + 1):
            monos = _monomials_of_degree(self._gen_degrees, caps, d)
            index = {m: i for i, m in enumerate(monos)}
            ech = Echelon(field)
            for _, rdeg, poly in relations:
                if rdeg > d:
                    continue
                for m in _monomials_of_degree(self._gen_degrees, caps, d - rdeg):
                    vec = {}
                    for rm, c in poly.terms.items():
                        hit = _mono_mul(m, rm, self._gen_degrees, field.characteristic)
                        if hit is None:
                            continue
                        sign, target = hit
                        if target not in index:
                            continue  # exponent cap pruned an odd square
                        cc = field.mul(field.coerce(sign), c)
                        j = index[target]
                        s = field.add(vec.get(j, field.zero), cc)
                        if s == field.zero:
                            vec.pop(j, None)
                        else:
                            vec[j] = s
                    if vec:
                        ech.insert(vec)
            basis = [m for i, m in enumerate(monos) if i not in ech.rows]
            self._monos[d] = monos
            self._mono_index[d] = index
            self._rel_ech[d] = ech
            self._basis[d] = basis
            dims[d] = len(basis)
        self._basis_index = {
            d: {m: i for i, m in enumerate(b)} for d, b in self._basis.items()
        }

        top = max((d for d, n in dims.items() if n), default=0)
        exact = top + max_gen <= D and all(
            dims.get(t, 0) == 0 for t in range(top + 1, top + max_gen + 1)
        )
        self._init_base(field, dims, window=D, exact=exact)
        self._symbols = None

    def _unit_position(self):
        return (0, 0)

    def reduce_free_vector(self, d: int, vec: dict) -> dict:
        """Reduce free-monomial coordinates mod relations; returns basis coordinates."""
        rem, _ = self._rel_ech[d].reduce(vec)
        bidx = self._basis_index[d]
        monos = self._monos[d]
        return {bidx[monos[j]]: c for j, c in rem.items()}

    def _compute_basis_product(self, d1, i1, d2, i2):
        m1 = self._basis[d1][i1]
        m2 = self._basis[d2][i2]
        hit = _mono_mul(m1, m2, self._gen_degrees, self.field.characteristic)
        if hit is None:
            return {}
        sign, target = hit
        d = d1 + d2
        j = self._mono_index[d].get(target)
        if j is None:
            return {}
        coords = self.reduce_free_vector(d, {j: self.field.one})
        if sign < 0:
            coords = {k: self.field.neg(c) for k, c in coords.items()}
        return coords

    def basis_expr(self, d, i):
        mono = self._basis[d][i]
        parts = []
        for name, e in zip(self._ctx.names, mono):
            if e == 1:
                parts.append(name)
            elif e > 1:
                parts.append(f"{name}^{e}")
        return "*".join(parts) if parts else "1"

    def symbols(self):
        if self._symbols is None:
            table = {}
            for gen in self.presentation.generators:
                d = gen.degree
                mono = tuple(
                    1 if n == gen.name else 0 for n in self._ctx.names
                )
                j = self._mono_index[d][mono]
                coords = self.reduce_free_vector(d, {j: self.field.one})
                table[gen.name] = self.element({d: coords})
            self._symbols = table
        return self._symbols

    def __repr__(self):
        gens = ", ".join(f"{g.name}:{g.degree}" for g in self.presentation.generators)
        return f"PresentationAlgebra({self.field}; {gens})"


def realize_presentation(presentation: Presentation, field: FieldSpec) -> PresentationAlgebra:
    """Realize a quotient algebra from generators and homogeneous relations."""
    return PresentationAlgebra(field, presentation)


# ---------------------------------------------------------------------------
# table-mode realization
# ---------------------------------------------------------------------------

class TableAlgebra(GradedAlgebra):
    """Finite algebra given by explicit structure constants.

    Table algebras are always exact: the basis is the whole algebra.
    """

    def __init__(self, field, table: MultiplicationTable):
        names = [n for n, _ in table.basis]
        if len(set(names)) != len(names):
            raise ValidationError(f"duplicate basis names in {names}")
        degree_of = dict(table.basis)
        for n, d in table.basis:
            if d < 0:
                raise ValidationError(f"basis element {n!r} has negative degree {d}")
        if table.unit not in degree_of:
            raise ValidationError(f"unit {table.unit!r} is not a basis element")
        if degree_of[table.unit] != 0:
            raise ValidationError(f"unit {table.unit!r} must have degree 0")

        self.table = table
        by_degree: dict[int, list[str]] = {}
        for n, d in table.basis:
            by_degree.setdefault(d, []).append(n)
        self._names = by_degree
        self._pos = {}
        for d, ns in by_degree.items():
            for i, n in enumerate(ns):
                self._pos[n] = (d, i)
        dims = {d: len(ns) for d, ns in by_degree.items()}
        top = max(dims)
        self._init_base(field, dims, window=top, exact=True)

        # normalize the table into coordinate form, checking degree additivity
        prods: dict[tuple, dict] = {}
        for (left, right), value in table.products.items():
            for n in (left, right):
                if n not in degree_of:
                    raise ValidationError(f"product entry names unknown element {n!r}")
            d = degree_of[left] + degree_of[right]
            vec: dict[int, object] = {}
            for coeff, name in value:
                if name not in degree_of:
                    raise ValidationError(
                        f"product {left!r}*{right!r} names unknown element {name!r}"
                    )
                if degree_of[name] != d:
                    raise ValidationError(
                        f"product {left!r}*{right!r} must be homogeneous of degree "
                        f"{d}, found {name!r} of degree {degree_of[name]}"
                    )
                c = field.coerce(coeff)
                j = self._pos[name][1]
                s = field.add(vec.get(j, field.zero), c)
                if s == field.zero:
                    vec.pop(j, None)
                else:
                    vec[j] = s
            prods[(left, right)] = vec

        # unit rows: verify when present, supply when absent
        unit = table.unit
        for n, d in table.basis:
            j = self._pos[n][1]
            expected = {j: field.one}
            for pair in ((unit, n), (n, unit)):
                if pair in prods:
                    if prods[pair] != expected:
                        raise ValidationError(
                            f"unit law fails on pair ({pair[0]!r}, {pair[1]!r})"
                        )
                else:
                    prods[pair] = dict(expected)

        non_unit = [n for n, _ in table.basis if n != unit]
        for a in non_unit:
            for b in non_unit:
                if (a, b) not in prods:
                    raise ValidationError(f"product table is missing the pair ({a!r}, {b!r})")
        self._prods = prods

        # graded commutativity on all pairs
        for a in names:
            for b in names:
                da, _ = self._pos[a]
                db, _ = self._pos[b]
                sign = field.coerce(swap_sign(da, db))
                flipped = {
                    j: field.mul(sign, c) for j, c in prods[(a, b)].items()
                }
                if prods[(b, a)] != flipped:
                    raise ValidationError(
                        f"graded commutativity fails on pair ({a!r}, {b!r})"
                    )

        # associativity on all triples
        for a in names:
            ea = self._element_of(a)
            for b in names:
                eb = self._element_of(b)
                ab = ea * eb
                for c in names:
                    ec = self._element_of(c)
                    if ab * ec != ea * (eb * ec):
                        raise ValidationError(
                            f"associativity fails on triple ({a!r}, {b!r}, {c!r})"
                        )

    def _element_of(self, name):
        d, i = self._pos[name]
        return self.basis_element(d, i)

    def _unit_position(self):
        return self._pos[self.table.unit]

    def _compute_basis_product(self, d1, i1, d2, i2):
        left = self._names[d1][i1]
        right = self._names[d2][i2]
        return dict(self._prods[(left, right)])

    def basis_expr(self, d, i):
        name = self._names[d][i]
        return "1" if name == self.table.unit else name

    def symbols(self):
        return {
            n: self._element_of(n) for n, _ in self.table.basis if n != self.table.unit
        }

    def __repr__(self):
        return f"TableAlgebra({self.field}; dim {sum(self._dims.values())})"


def realize_table(table: MultiplicationTable, field: FieldSpec) -> TableAlgebra:
    """Realize an algebra from a complete multiplication table, verifying axioms."""
    return TableAlgebra(field, table)


_BASE_FIELD_CACHE: dict[FieldSpec, TableAlgebra] = {}


def base_field_algebra(field: FieldSpec) -> TableAlgebra:
    """The coefficient field as a one-dimensional algebra in degree 0."""
    if field not in _BASE_FIELD_CACHE:
        table = MultiplicationTable(basis=[("one", 0)], unit="one", products={})
        _BASE_FIELD_CACHE[field] = realize_table(table, field)
    return _BASE_FIELD_CACHE[field]


# ---------------------------------------------------------------------------
# axiom checking
# ---------------------------------------------------------------------------

@dataclass
class AxiomCheck:
    pairs_total: int
    pairs_checked: int
    triples_total: int
    triples_checked: int
    pairs_sampled: bool = dc_field(default=False)
    triples_sampled: bool = dc_field(default=False)


def check_axioms(algebra: GradedAlgebra, pair_limit=20000, triple_limit=20000, seed=0) -> AxiomCheck:
    """Verify graded commutativity and associativity on basis pairs/triples.

    Exhaustive when the counts fit under the limits, otherwise a seeded
    uniform sample of the stated size (counts are never materialized as
    lists, so large tensor powers stay cheap).  Raises ValidationError
    naming the first offending pair or triple.
    """
    import random

    field = algebra.field
    cap = algebra.top_degree if algebra.exact else algebra.window
    ids = [(d, i) for d in algebra.degrees() for i in range(algebra.dim(d))]
    degs = algebra.degrees()

    def pair_ok(x, y):
        dx, ix = x
        dy, iy = y
        left = algebra.basis_product(dx, ix, dy, iy)
        right = algebra.basis_product(dy, iy, dx, ix)
        sign = field.coerce(swap_sign(dx, dy))
        flipped = {j: field.mul(sign, c) for j, c in left.items()}
        if right != flipped:
            raise ValidationError(
                f"graded commutativity fails on pair "
                f"({algebra.basis_expr(dx, ix)!r}, {algebra.basis_expr(dy, iy)!r})"
            )

    def triple_ok(x, y, z):
        ex = algebra.basis_element(*x)
        ey = algebra.basis_element(*y)
        ez = algebra.basis_element(*z)
        if (ex * ey) * ez != ex * (ey * ez):
            raise ValidationError(
                f"associativity fails on triple "
                f"({algebra.basis_expr(*x)!r}, {algebra.basis_expr(*y)!r}, "
                f"{algebra.basis_expr(*z)!r})"
            )

    pairs_total = sum(
        algebra.dim(d1) * algebra.dim(d2)
        for d1 in degs
        for d2 in degs
        if d1 + d2 <= cap
    )
    triples_total = sum(
        algebra.dim(d1) * algebra.dim(d2) * algebra.dim(d3)
        for d1 in degs
        for d2 in degs
        if d1 + d2 <= cap
        for d3 in degs
        if d1 + d2 + d3 <= cap
    )

    rng = random.Random(seed)

    def sample_tuple(k):
        while True:
            picks = [rng.choice(ids) for _ in range(k)]
            if sum(p[0] for p in picks) <= cap:
                return picks

    if pairs_total <= pair_limit:
        for x in ids:
            for y in ids:
                if x[0] + y[0] <= cap:
                    pair_ok(x, y)
        pairs_checked, pairs_sampled = pairs_total, False
    else:
        for _ in range(pair_limit):
            x, y = sample_tuple(2)
            pair_ok(x, y)
        pairs_checked, pairs_sampled = pair_limit, True

    if triples_total <= triple_limit:
        for x in ids:
            for y in ids:
                if x[0] + y[0] > cap:
                    continue
                for z in ids:
                    if x[0] + y[0] + z[0] <= cap:
                        triple_ok(x, y, z)
        triples_checked, triples_sampled = triples_total, False
    else:
        for _ in range(triple_limit):
            x, y, z = sample_tuple(3)
            triple_ok(x, y, z)
        triples_checked, triples_sampled = triple_limit, True

    return AxiomCheck(
        pairs_total, pairs_checked, triples_total, triples_checked,
        pairs_sampled, triples_sampled,
    )
