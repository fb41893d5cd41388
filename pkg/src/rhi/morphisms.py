"""Degree-preserving unital algebra morphisms and graded subspaces.

A morphism is stored as one image element per domain basis vector, realized
for every degree inside the map's window.  The window is the tighter of the
two finiteness certificates: `None` means both sides are exact and the map is
known in all degrees; an int means nothing is known past it and every derived
verdict inherits `exact=False`.
"""

from __future__ import annotations

from .errors import TruncationError, ValidationError
from .fields import FieldSpec
from .gca import Element, GradedAlgebra, PresentationAlgebra, TableAlgebra, base_field_algebra
from .linalg import Echelon, echelonize, left_kernel, rank


def _effective_window(algebra: GradedAlgebra):
    return None if algebra.exact else algebra.window


def _min_window(*windows):
    finite = [w for w in windows if w is not None]
    return min(finite) if finite else None


class GradedSubspace:
    """Per-degree echelonized spans inside a parent algebra.

    Rows are reduced row-echelon bases in the parent's degree-d coordinates;
    degrees with zero span are not stored.  `window=None` means the subspace
    is known in every degree (all participating algebras were exact).
    """

    def __init__(self, parent: GradedAlgebra, rows_by_degree: dict, window, exact: bool):
        self.parent = parent
        self.window = window
        self.exact = exact
        self._rows = {}
        for d, rows in rows_by_degree.items():
            basis = echelonize(parent.field, rows)
            if basis:
                self._rows[d] = basis

    def degrees(self) -> list:
        return sorted(self._rows)

    def dim(self, d: int) -> int:
        return len(self._rows.get(d, []))

    def rows(self, d: int) -> list:
        return [dict(r) for r in self._rows.get(d, [])]

    def basis_elements(self, d: int) -> list:
        return [self.parent.element({d: r}) for r in self._rows.get(d, [])]

    def all_basis_elements(self) -> list:
        out = []
        for d in self.degrees():
            out.extend(self.basis_elements(d))
        return out

    def contains(self, element: Element) -> bool:
        for d, coords in element.comps.items():
            ech = Echelon(self.parent.field)
            for row in self._rows.get(d, []):
                ech.insert(dict(row))
            if not ech.contains(coords):
                return False
        return True

    def __eq__(self, other):
        if not isinstance(other, GradedSubspace):
            return NotImplemented
        return self.parent is other.parent and self._rows == other._rows

    __hash__ = None

    def __repr__(self):
        dims = {d: self.dim(d) for d in self.degrees()}
        return f"GradedSubspace(dims={dims})"


class AlgebraMap:
    """A degree-preserving unital algebra morphism realized degree-wise."""

    def __init__(self, domain, codomain, images_by_degree, gen_images=None,
                 window=None, exact=True):
        self.domain = domain
        self.codomain = codomain
        self._images = images_by_degree
        self.gen_images = gen_images
        self.window = window
        self.exact = exact

    @classmethod
    def from_basis_function(cls, domain, codomain, image_of, gen_images=None):
        """Build a map from a function (degree, index) -> codomain Element.

        The caller is responsible for multiplicativity; use `build_map` for
        user-supplied generator images, which are validated.
        """
        window = _min_window(_effective_window(domain), _effective_window(codomain))
        images = {}
        for d in domain.degrees():
            if window is not None and d > window:
                continue
            images[d] = [image_of(d, i) for i in range(domain.dim(d))]
        return cls(domain, codomain, images, gen_images=gen_images,
                   window=window, exact=domain.exact and codomain.exact)

    def known_degrees(self) -> list:
        return sorted(self._images)

    def image_of_basis(self, d: int, i: int) -> Element:
        if d not in self._images:
            if self.window is not None and d > self.window:
                raise TruncationError(
                    f"map is not realized in degree {d} (window {self.window})",
                    degree=d,
                )
            return self.codomain.zero()
        return self._images[d][i]

    def apply(self, element: Element) -> Element:
        if element.algebra is not self.domain:
            raise ValidationError("element does not live in the map's domain")
        out = self.codomain.zero()
        for d, coords in element.comps.items():
            for i, c in coords.items():
                out = out + self.image_of_basis(d, i).scale(c)
        return out

    __call__ = apply

    def matrix(self, d: int) -> list:
        """Rows of the degree-d matrix: codomain coordinates of basis images."""
        if d not in self._images:
            return []
        return [img.coords(d) for img in self._images[d]]

    def __repr__(self):
        return f"AlgebraMap({self.domain!r} -> {self.codomain!r})"


def _as_codomain_element(codomain, value, what):
    if isinstance(value, Element):
        if value.algebra is not codomain:
            raise ValidationError(f"image of {what} lives in the wrong algebra")
        return value
    return codomain.normal_form(str(value))


def _check_image_degree(image: Element, degree: int, what: str):
    if image.is_zero():
        return
    degs = image.support_degrees()
    if degs != [degree]:
        raise ValidationError(
            f"image of {what} must be homogeneous of degree {degree}, got degrees {degs}"
        )


def build_map(domain: GradedAlgebra, codomain: GradedAlgebra, images: dict) -> AlgebraMap:
    """Construct and validate a morphism from generator (or basis) images.

    Presentation domains take one image per generator and are checked by
    mapping every relation to zero; table domains take one image per non-unit
    basis element and are checked multiplicatively on all pairs.
    """
    if domain.field != codomain.field:
        raise ValidationError("domain and codomain use different coefficient fields")
    window = _min_window(_effective_window(domain), _effective_window(codomain))

    if isinstance(domain, PresentationAlgebra):
        return _build_presentation_map(domain, codomain, images, window)
    if isinstance(domain, TableAlgebra):
        return _build_table_map(domain, codomain, images, window)
    raise ValidationError(
        "build_map needs a presentation- or table-mode domain; maps out of tensor "
        "algebras are produced by the tensor operations"
    )


def _build_presentation_map(domain, codomain, images, window):
    gens = domain.presentation.generators
    names = {g.name for g in gens}
    given = set(images)
    if given != names:
        missing = sorted(names - given)
        extra = sorted(given - names)
        detail = []
        if missing:
            detail.append(f"missing images for {missing}")
        if extra:
            detail.append(f"unknown names {extra}")
        raise ValidationError("; ".join(detail))

    gen_images = {}
    for g in gens:
        img = _as_codomain_element(codomain, images[g.name], f"generator {g.name!r}")
        _check_image_degree(img, g.degree, f"generator {g.name!r}")
        if window is not None and g.degree > window:
            raise TruncationError(
                f"generator {g.name!r} of degree {g.degree} exceeds the common "
                f"window {window}: truncation mismatch",
                degree=g.degree,
            )
        gen_images[g.name] = img

    ordered = [gen_images[g.name] for g in gens]

    memo = {}

    def image_of_mono(mono):
        img = memo.get(mono)
        if img is not None:
            return img
        if not any(mono):
            img = codomain.one()
        else:
            i = max(j for j, e in enumerate(mono) if e)
            prev = tuple(e - 1 if j == i else e for j, e in enumerate(mono))
            img = image_of_mono(prev) * ordered[i]
        memo[mono] = img
        return img

    for text, rdeg, poly in domain._relations:
        if window is not None and rdeg > window:
            raise TruncationError(
                f"relation {text!r} of degree {rdeg} exceeds the common window "
                f"{window}: truncation mismatch",
                degree=rdeg,
            )
        acc = codomain.zero()
        for mono, c in poly.terms.items():
            acc = acc + image_of_mono(mono).scale(c)
        if not acc.is_zero():
            raise ValidationError(
                f"relation {text!r} maps to the nonzero element "
                f"{codomain.element_expr(acc)!r}"
            )

    images_by_degree = {}
    for d in domain.degrees():
        if window is not None and d > window:
            continue
        images_by_degree[d] = [
            image_of_mono(domain._basis[d][i]) for i in range(domain.dim(d))
        ]
    return AlgebraMap(domain, codomain, images_by_degree, gen_images=gen_images,
                      window=window, exact=domain.exact and codomain.exact)


def _build_table_map(domain, codomain, images, window):
    unit = domain.table.unit
    names = {n for n, _ in domain.table.basis if n != unit}
    given = set(images) - {unit}
    if given != names:
        missing = sorted(names - given)
        extra = sorted(given - names)
        detail = []
        if missing:
            detail.append(f"missing images for basis elements {missing}")
        if extra:
            detail.append(f"unknown basis names {extra}")
        raise ValidationError("; ".join(detail))

    elem_images = {unit: codomain.one()}
    if unit in images:
        img = _as_codomain_element(codomain, images[unit], f"unit {unit!r}")
        if img != codomain.one():
            raise ValidationError(f"unit {unit!r} must map to 1")
    degree_of = dict(domain.table.basis)
    for n in sorted(names):
        img = _as_codomain_element(codomain, images[n], f"basis element {n!r}")
        _check_image_degree(img, degree_of[n], f"basis element {n!r}")
        if window is not None and degree_of[n] > window:
            raise TruncationError(
                f"basis element {n!r} of degree {degree_of[n]} exceeds the common "
                f"window {window}: truncation mismatch",
                degree=degree_of[n],
            )
        elem_images[n] = img

    # multiplicativity on all ordered pairs
    for a, da in domain.table.basis:
        for b, db in domain.table.basis:
            d = da + db
            if window is not None and d > window:
                raise TruncationError(
                    f"cannot verify multiplicativity on ({a!r}, {b!r}): degree {d} "
                    f"exceeds the common window {window}: truncation mismatch",
                    degree=d,
                )
            lhs = elem_images[a] * elem_images[b]
            prod = domain._element_of(a) * domain._element_of(b)
            rhs = codomain.zero()
            for dd, coords in prod.comps.items():
                for i, c in coords.items():
                    rhs = rhs + elem_images[domain._names[dd][i]].scale(c)
            if lhs != rhs:
                raise ValidationError(
                    f"multiplicativity fails on pair ({a!r}, {b!r}): "
                    f"f(a)f(b) = {codomain.element_expr(lhs)!r} but "
                    f"f(ab) = {codomain.element_expr(rhs)!r}"
                )

    images_by_degree = {}
    for d in domain.degrees():
        if window is not None and d > window:
            continue
        images_by_degree[d] = [
            elem_images[domain._names[d][i]] for i in range(domain.dim(d))
        ]
    return AlgebraMap(domain, codomain, images_by_degree, gen_images=dict(elem_images),
                      window=window, exact=domain.exact and codomain.exact)


def compose(g: AlgebraMap, f: AlgebraMap) -> AlgebraMap:
    """The composite g∘f; requires codomain(f) to be domain(g)."""
    if f.codomain is not g.domain:
        raise ValidationError("compose needs codomain(f) = domain(g)")
    window = _min_window(f.window, g.window)
    images = {}
    for d in f.known_degrees():
        if window is not None and d > window:
            continue
        images[d] = [g.apply(img) for img in f._images[d]]
    gen_images = None
    if f.gen_images is not None:
        gen_images = {name: g.apply(img) for name, img in f.gen_images.items()}
    return AlgebraMap(f.domain, g.codomain, images, gen_images=gen_images,
                      window=window, exact=f.exact and g.exact)


def identity_map(algebra: GradedAlgebra) -> AlgebraMap:
    return AlgebraMap.from_basis_function(
        algebra, algebra, lambda d, i: algebra.basis_element(d, i)
    )


def kernel(f: AlgebraMap) -> GradedSubspace:
    """Degree-wise nullspace of the map, echelonized.

    Kernels of algebra maps are automatically ideals; that closure is a
    verified property in the test suite, not an extra computation here.
    """
    rows_by_degree = {}
    for d in f.known_degrees():
        combos = left_kernel(f.domain.field, f.matrix(d))
        if combos:
            rows_by_degree[d] = combos
    return GradedSubspace(f.domain, rows_by_degree, window=f.window, exact=f.exact)


def image_subspace(f: AlgebraMap) -> GradedSubspace:
    """Degree-wise span of the image, echelonized in codomain coordinates."""
    rows_by_degree = {}
    for d in f.known_degrees():
        rows = [r for r in f.matrix(d) if r]
        if rows:
            rows_by_degree[d] = rows
    return GradedSubspace(f.codomain, rows_by_degree, window=f.window, exact=f.exact)


def augmentation(f_algebra: GradedAlgebra) -> AlgebraMap:
    """The unique map to the coefficient field killing all positive degrees."""
    if f_algebra.dim(0) != 1:
        raise ValidationError(
            f"augmentation needs a connected algebra; degree-0 dimension is "
            f"{f_algebra.dim(0)}"
        )
    target = base_field_algebra(f_algebra.field)

    def image_of(d, i):
        return target.one() if d == 0 else target.zero()

    return AlgebraMap.from_basis_function(f_algebra, target, image_of)


def check_surjective(f: AlgebraMap) -> list:
    """Degrees (within the window) where the map fails to be surjective."""
    failing = []
    for d in f.codomain.degrees():
        if f.window is not None and d > f.window:
            continue
        target_dim = f.codomain.dim(d)
        if target_dim == 0:
            continue
        if rank(f.domain.field, f.matrix(d)) < target_dim:
            failing.append(d)
    return failing


def check_injective(f: AlgebraMap) -> list:
    """Degrees (within the window) where the map has a nonzero kernel."""
    failing = []
    for d in f.known_degrees():
        if rank(f.domain.field, f.matrix(d)) < f.domain.dim(d):
            failing.append(d)
    return failing
