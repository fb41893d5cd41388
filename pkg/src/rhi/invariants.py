"""Named invariants of formal maps, computed through ideal nilpotency.

Each operation evaluates a cohomological nilpotency expression and wraps the
result in a report carrying the governing formula, hypothesis warnings, the
exactness flag and the factored witness.  Formality is a user assertion: with
`formal=True` (and rational coefficients) the value is reported as the
invariant of the formal map, otherwise as a cohomological lower bound.
"""

from __future__ import annotations

from dataclasses import dataclass, field as dc_field

from .errors import ConfigError, ValidationError
from .ideals import (
    NilResult,
    ideal_from_generators,
    ideal_from_subspace,
    map_image_ideal,
    nilpotency,
    subspace_intersection,
)
from .morphisms import AlgebraMap, check_surjective, image_subspace, kernel
from .tensor import multiplication_map, tensor_pair_map, tensor_power_map


@dataclass
class InvariantReport:
    """Value, provenance and certificate of one invariant computation."""

    name: str
    value: int
    exact: bool
    warnings: list
    witness: NilResult
    formula: str
    formal: bool
    field: str
    n: int | None = dc_field(default=None)

    @property
    def label(self) -> str:
        if not self.formal:
            return "cohomological lower bound (no formality asserted)"
        if self.field == "Q":
            return "rational invariant of the formal map"
        return (
            f"nilpotency value over {self.field}; rational-invariant readings "
            "need rational coefficients"
        )

    def to_json_dict(self) -> dict:
        algebra = self.witness.witness_product.algebra
        product = self.witness.witness_product
        degree = product.degree if not product.is_zero() else None
        coords = []
        if degree is not None:
            comp = product.comps[degree]
            coords = [
                [algebra.field.format_scalar(comp[i]), algebra.basis_expr(degree, i)]
                for i in sorted(comp)
            ]
        out = {
            "name": self.name,
            "value": self.value,
            "exact": self.exact,
            "warnings": list(self.warnings),
            "witness": {
                "factors": [algebra.element_expr(f) for f in self.witness.witness_factors],
                "product_degree": degree,
                "product_coordinates": coords,
            },
            "formula": self.formula,
            "formal": self.formal,
            "label": self.label,
            "field": self.field,
        }
        if self.n is not None:
            out["n"] = self.n
        return out


def _finish(name, formula, nil: NilResult, f_field, warnings, formal, n=None):
    warnings = list(warnings)
    if not nil.exact:
        warnings.append(
            "truncated realization: the value is a lower bound within the "
            "computed window"
        )
    return InvariantReport(
        name=name,
        value=nil.index,
        exact=nil.exact,
        warnings=warnings,
        witness=nil,
        formula=formula,
        formal=formal,
        field=str(f_field),
        n=n,
    )


def _pushed_kernel_nil(phi: AlgebraMap, psi: AlgebraMap) -> NilResult:
    """nil of the ideal generated by phi(ker psi) in phi's codomain."""
    ker = kernel(psi)
    ideal = ideal_from_subspace(psi.domain, ker)
    return nilpotency(map_image_ideal(phi, ideal))


def secat_formal(phi: AlgebraMap, psi: AlgebraMap, *, formal: bool = False) -> InvariantReport:
    """Relative sectional category of a formal pair: nil(phi(ker psi)).

    Both maps act out of the same cohomology algebra.  The defining theorem
    needs psi surjective on cohomology; failures are reported as warnings,
    not errors.
    """
    if phi.domain is not psi.domain:
        raise ValidationError("secat needs maps sharing their domain algebra")
    warnings = []
    gaps = check_surjective(psi)
    if gaps:
        warnings.append(
            f"psi is not surjective in degrees {gaps}: the sectional-category "
            "formula assumes surjectivity, so the value may only bound secat"
        )
    nil = _pushed_kernel_nil(phi, psi)
    return _finish(
        "secat",
        "secat_phi(psi) = nil(phi(ker psi)) for formal maps with surjective psi",
        nil, phi.domain.field, warnings, formal,
    )


def cat_formal(f: AlgebraMap, *, formal: bool = False) -> InvariantReport:
    """LS-category of a formal map: nil of the ideal generated by the images
    of all positive-degree classes."""
    gens = []
    for d in f.domain.degrees():
        if d == 0:
            continue
        if f.window is not None and d > f.window:
            continue
        for i in range(f.domain.dim(d)):
            img = f.image_of_basis(d, i)
            if not img.is_zero():
                gens.append(img)
    ideal = ideal_from_generators(f.codomain, gens, known_exact=f.exact)
    nil = nilpotency(ideal)
    return _finish(
        "cat",
        "cat(f) = nil(f(H^+)) for a formal map f",
        nil, f.domain.field, [], formal,
    )


def tc_n_formal(f: AlgebraMap, n: int, *, formal: bool = False) -> InvariantReport:
    """Higher topological complexity of a formal map.

    `f` is the induced cohomology map, so its domain is the cohomology of the
    space-level codomain; the n-fold multiplication map lives there and its
    kernel is pushed through the n-th tensor power of f.
    """
    if n < 2:
        raise ConfigError(f"tc_n needs n >= 2, got {n}")
    mu = multiplication_map(f.domain, n)
    ideal = ideal_from_subspace(mu.domain, kernel(mu))
    pushed = map_image_ideal(tensor_power_map(f, n), ideal)
    nil = nilpotency(pushed)
    return _finish(
        "tc_n",
        "TC_n(f) = nil(f^{tensor n}(ker mu_n)) for a formal map f",
        nil, f.domain.field, [], formal, n=n,
    )


def tc_mw_formal(f: AlgebraMap, *, formal: bool = False) -> InvariantReport:
    """Map topological complexity in the intersection form:
    nil(ker mu ∩ img(f ⊗ f)), computed in the square of f's codomain."""
    mu = multiplication_map(f.codomain, 2)
    square = tensor_power_map(f, 2)
    meet = subspace_intersection(kernel(mu), image_subspace(square))
    ideal = ideal_from_subspace(mu.domain, meet)
    nil = nilpotency(ideal)
    return _finish(
        "tc_mw",
        "TC(f) = nil(ker mu ∩ img(f tensor f)) for a formal map f",
        nil, f.domain.field, [], formal,
    )


def hd_formal(f: AlgebraMap, g: AlgebraMap, *, formal: bool = False) -> InvariantReport:
    """Homotopic distance between two formal maps:
    nil((mu ∘ (f ⊗ g))(ker mu)) with the kernel taken on the shared domain."""
    if f.domain is not g.domain or f.codomain is not g.codomain:
        raise ValidationError("homotopic distance needs maps with shared domain and codomain")
    from .morphisms import compose

    mu_domain = multiplication_map(f.domain, 2)
    mu_codomain = multiplication_map(f.codomain, 2)
    mixed = compose(mu_codomain, tensor_pair_map(f, g))
    ideal = ideal_from_subspace(mu_domain.domain, kernel(mu_domain))
    nil = nilpotency(map_image_ideal(mixed, ideal))
    return _finish(
        "hd",
        "D(f, g) = nil((mu ∘ (f tensor g))(ker mu)) for formal maps",
        nil, f.domain.field, [], formal,
    )


def relsecat_lower_bound(f: AlgebraMap, p: AlgebraMap, *, formal: bool = False) -> InvariantReport:
    """The nilpotency lower bound nil(f(ker p)) for the relative sectional
    category; exact under the formality and surjectivity hypotheses."""
    if f.domain is not p.domain:
        raise ValidationError("the two maps must share their domain algebra")
    warnings = []
    if formal:
        gaps = check_surjective(p)
        if gaps:
            warnings.append(
                f"p is not surjective in degrees {gaps}: even for formal maps "
                "the value is then only a lower bound"
            )
    nil = _pushed_kernel_nil(f, p)
    return _finish(
        "relsecat_lb",
        "nil(f(ker p)) <= secat_f(p), with equality for formal maps and surjective p",
        nil, f.domain.field, warnings, formal,
    )
