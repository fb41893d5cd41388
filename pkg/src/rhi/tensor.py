"""Koszul-signed tensor powers and products of graded algebras.

Basis vectors of a tensor algebra are tuples of factor basis vectors, ordered
by (factor-degree composition, per-factor basis index).  The multiplication
sign comes from the shared `koszul_sign` code path.  Tensor powers are cached
on their base algebra so that repeated constructions (the multiplication map
and a tensor power of a morphism, say) share one object.
"""

from __future__ import annotations

import itertools
import re

from .errors import TruncationError, ValidationError
from .gca import Element, GradedAlgebra, koszul_sign
from .morphisms import AlgebraMap, _min_window, _effective_window

_NAME_TOKEN = re.compile(r"[A-Za-z_][A-Za-z0-9_]*")


def _mangle(expr_text: str, suffix: str) -> str:
    """Append a factor suffix to every name token of an expression."""
    return _NAME_TOKEN.sub(lambda m: m.group(0) + suffix, expr_text)


class TensorAlgebra(GradedAlgebra):
    """Tensor product of realized algebras over a shared field.

    Exact when every factor is exact (top degree = sum of factor tops);
    otherwise truncated at the smallest truncated-factor window.
    """

    def __init__(self, factors):
        factors = tuple(factors)
        if not factors:
            raise ValidationError("a tensor algebra needs at least one factor")
        field = factors[0].field
        for f in factors[1:]:
            if f.field != field:
                raise ValidationError("tensor factors use different coefficient fields")
        self.factors = factors

        if all(f.exact for f in factors):
            window = sum(f.top_degree for f in factors)
            exact = True
        else:
            window = min(f.window for f in factors if not f.exact)
            exact = False

        self._basis = {}
        self._index = {}
        dims = {}
        factor_degrees = [f.degrees() for f in factors]
        for d in range(window + 1):
            labels = []
            self._compositions(factor_degrees, factors, 0, d, [], labels)
            if labels:
                self._basis[d] = labels
                self._index[d] = {lab: i for i, lab in enumerate(labels)}
                dims[d] = len(labels)
        self._init_base(field, dims, window=window, exact=exact)
        self._symbols = None

    @staticmethod
    def _compositions(factor_degrees, factors, k, remaining, acc, out):
        if k == len(factors):
            if remaining == 0:
                for combo in itertools.product(
                    *[range(factors[i].dim(acc[i])) for i in range(len(acc))]
                ):
                    out.append(tuple(zip(acc, combo)))
            return
        for dk in factor_degrees[k]:
            if dk > remaining:
                break
            acc.append(dk)
            TensorAlgebra._compositions(factor_degrees, factors, k + 1, remaining - dk, acc, out)
            acc.pop()

    def _unit_position(self):
        unit_label = []
        for f in self.factors:
            d, i = f._unit_position()
            if f.one() != f.basis_element(d, i):
                raise ValidationError("factor unit is not a basis vector")
            unit_label.append((d, i))
        return (0, self._index[0][tuple(unit_label)])

    def _compute_basis_product(self, d1, i1, d2, i2):
        field = self.field
        t1 = self._basis[d1][i1]
        t2 = self._basis[d2][i2]
        sign = koszul_sign([p[0] for p in t1], [p[0] for p in t2])
        parts = []
        for f, (da, ia), (db, ib) in zip(self.factors, t1, t2):
            prod = f.basis_product(da, ia, db, ib)
            if not prod:
                return {}
            parts.append((da + db, prod))
        index = self._index.get(d1 + d2)
        if index is None:
            return {}
        out = {}
        sign_c = field.coerce(sign)
        for combo in itertools.product(*[list(p.items()) for _, p in parts]):
            label = tuple((parts[k][0], combo[k][0]) for k in range(len(parts)))
            coeff = sign_c
            for _, c in combo:
                coeff = field.mul(coeff, c)
            j = index[label]
            s = field.add(out.get(j, field.zero), coeff)
            if s == field.zero:
                out.pop(j, None)
            else:
                out[j] = s
        return out

    def pure_tensor(self, elements) -> Element:
        """The element a_1 ⊗ … ⊗ a_n from one factor element per slot."""
        if len(elements) != len(self.factors):
            raise ValidationError(
                f"expected {len(self.factors)} factor elements, got {len(elements)}"
            )
        parts = []
        for f, el in zip(self.factors, elements):
            if el.algebra is not f:
                raise ValidationError("pure_tensor component lives in the wrong factor")
            if el.is_zero():
                return self.zero()
            parts.append(sorted(el.comps.items()))
        field = self.field
        out = {}
        for combo in itertools.product(*parts):
            total = sum(d for d, _ in combo)
            if total > self.window:
                if self.exact:
                    continue
                raise TruncationError(
                    f"pure tensor lands in degree {total} beyond the window {self.window}",
                    degree=total,
                )
            index = self._index[total]
            acc = out.setdefault(total, {})
            for picks in itertools.product(*[list(v.items()) for _, v in combo]):
                label = tuple((combo[k][0], picks[k][0]) for k in range(len(picks)))
                coeff = field.one
                for _, c in picks:
                    coeff = field.mul(coeff, c)
                j = index[label]
                s = field.add(acc.get(j, field.zero), coeff)
                if s == field.zero:
                    acc.pop(j, None)
                else:
                    acc[j] = s
        return self.element(out)

    def basis_expr(self, d, i):
        parts = []
        for k, (dk, jk) in enumerate(self._basis[d][i]):
            text = self.factors[k].basis_expr(dk, jk)
            if text != "1":
                parts.append(_mangle(text, f"_{k + 1}"))
        return "*".join(parts) if parts else "1"

    def symbols(self):
        if self._symbols is None:
            table = {}
            for k, f in enumerate(self.factors):
                units = [g.one() for g in self.factors]
                for name, el in f.symbols().items():
                    slots = list(units)
                    slots[k] = el
                    table[f"{name}_{k + 1}"] = self.pure_tensor(slots)
            self._symbols = table
        return self._symbols

    def __repr__(self):
        return f"TensorAlgebra({len(self.factors)} factors, dims to {self.window})"


def tensor_product(*factors) -> TensorAlgebra:
    """Tensor product of realized algebras (cached on the first factor)."""
    if not factors:
        raise ValidationError("tensor_product needs at least one factor")
    key = tuple(id(f) for f in factors)
    cache = factors[0]._tensor_powers
    if key not in cache:
        cache[key] = TensorAlgebra(factors)
    return cache[key]


def tensor_power(algebra: GradedAlgebra, n: int) -> TensorAlgebra:
    """The n-fold tensor power; n = 1 is the same algebra with relabeled basis."""
    if n < 1:
        raise ValidationError(f"tensor power needs n >= 1, got {n}")
    return tensor_product(*([algebra] * n))


def injection(power: TensorAlgebra, slot: int) -> AlgebraMap:
    """The algebra map a -> 1 ⊗ … ⊗ a ⊗ … ⊗ 1 into the given factor slot."""
    factor = power.factors[slot]

    def image_of(d, i):
        slots = [f.one() for f in power.factors]
        slots[slot] = factor.basis_element(d, i)
        return power.pure_tensor(slots)

    return AlgebraMap.from_basis_function(factor, power, image_of)


def multiplication_map(algebra: GradedAlgebra, n: int) -> AlgebraMap:
    """The map A^{⊗n} -> A sending a basis tuple to the product of its entries."""
    power = tensor_power(algebra, n)

    def image_of(d, i):
        label = power._basis[d][i]
        out = algebra.one()
        for dk, jk in label:
            out = out * algebra.basis_element(dk, jk)
        return out

    return AlgebraMap.from_basis_function(power, algebra, image_of)


def _factorwise_map(maps) -> AlgebraMap:
    domain = tensor_product(*[m.domain for m in maps])
    codomain = tensor_product(*[m.codomain for m in maps])

    def image_of(d, i):
        label = domain._basis[d][i]
        slots = [
            m.image_of_basis(dk, jk) for m, (dk, jk) in zip(maps, label)
        ]
        return codomain.pure_tensor(slots)

    window = _min_window(
        _effective_window(domain), _effective_window(codomain),
        *[m.window for m in maps],
    )
    images = {}
    for d in domain.degrees():
        if window is not None and d > window:
            continue
        images[d] = [image_of(d, i) for i in range(domain.dim(d))]
    exact = domain.exact and codomain.exact and all(m.exact for m in maps)
    return AlgebraMap(domain, codomain, images, window=window, exact=exact)


def tensor_power_map(f: AlgebraMap, n: int) -> AlgebraMap:
    """f^{⊗n}: acts factor-wise on basis tuples; degree preservation kills signs."""
    if n < 1:
        raise ValidationError(f"tensor power needs n >= 1, got {n}")
    return _factorwise_map([f] * n)


def tensor_pair_map(f: AlgebraMap, g: AlgebraMap) -> AlgebraMap:
    """f ⊗ g on the square of their shared domain and codomain."""
    if f.domain is not g.domain or f.codomain is not g.codomain:
        raise ValidationError("tensor_pair_map needs maps with shared domain and codomain")
    return _factorwise_map([f, g])
