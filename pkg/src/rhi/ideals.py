"""Ideals, their powers, and the nilpotency index with factored witnesses.

An ideal is realized from homogeneous positive-degree generators: its
degree-d span is the echelonized set {b·g} over basis multipliers b.  The
power iteration P_{k+1} = P_k · I keeps, for every new pivot, the *original*
product vector together with its factor chain, so a nilpotency verdict comes
with an explicit nonzero product of ideal elements.  Reduced echelon rows are
used only as a rank filter; witnesses are always genuine products.

Generators are pruned to a span-equivalent minimal subset while the spans are
built; this changes nothing about the ideal and keeps the iteration cheap.
"""

from __future__ import annotations

from dataclasses import dataclass

from .errors import TruncationError, ValidationError
from .gca import Element, GradedAlgebra
from .linalg import Echelon, intersect_spans
from .morphisms import AlgebraMap, GradedSubspace, _min_window


@dataclass
class NilResult:
    """Nilpotency index with its certificate.

    When `exact` is true the index is the smallest m with I^{m+1} = 0 and the
    witness is a nonzero product of `index` ideal elements (the empty product,
    the unit, for a zero ideal).  When false the index is a lower bound
    established inside the truncated window.
    """

    index: int
    exact: bool
    witness_factors: list
    witness_product: Element


class Ideal:
    """A finitely generated ideal with realized per-degree spans."""

    def __init__(self, parent: GradedAlgebra, generators, span_ech, kept,
                 window, exact: bool):
        self.parent = parent
        self.generators = generators
        self._span_ech = span_ech
        self._kept = kept
        self.window = window
        self.exact = exact

    def degrees(self) -> list:
        return sorted(d for d, ech in self._span_ech.items() if len(ech))

    def dim(self, d: int) -> int:
        ech = self._span_ech.get(d)
        return len(ech) if ech else 0

    def is_zero(self) -> bool:
        return not self._kept

    def contains(self, element: Element) -> bool:
        for d, coords in element.comps.items():
            ech = self._span_ech.get(d)
            if ech is None or not ech.contains(coords):
                return False
        return True

    def as_subspace(self) -> GradedSubspace:
        rows = {d: [dict(r) for r in ech.rows.values()]
                for d, ech in self._span_ech.items() if len(ech)}
        return GradedSubspace(self.parent, rows, window=self.window, exact=self.exact)

    def min_generator_degree(self):
        return min((g.degree for g in self.generators), default=None)

    def __repr__(self):
        dims = {d: self.dim(d) for d in self.degrees()}
        return f"Ideal({len(self.generators)} generators, dims={dims})"


def _span_cap(parent: GradedAlgebra) -> int:
    return parent.top_degree if parent.exact else parent.window


def ideal_from_generators(parent: GradedAlgebra, generators, *,
                          known_exact: bool = True) -> Ideal:
    """Realize the ideal generated by homogeneous positive-degree elements.

    `known_exact=False` marks a generating set that may be incomplete (it was
    read off a truncated subspace); every derived verdict then reports a
    lower bound.
    """
    field = parent.field
    cap = _span_cap(parent)
    cleaned = []
    for g in generators:
        if isinstance(g, str):
            g = parent.normal_form(g)
        if not isinstance(g, Element) or g.algebra is not parent:
            raise ValidationError("ideal generators must be elements of the parent algebra")
        if g.is_zero():
            continue
        d = g.degree  # raises on inhomogeneous input
        if d < 1:
            raise ValidationError(
                "ideal generators must have positive degree; nilpotency of an ideal "
                "meeting degree 0 is not meaningful here"
            )
        cleaned.append(g)
    cleaned.sort(key=lambda g: g.degree)

    span_ech: dict[int, Echelon] = {}
    kept: list = []
    pruned: list = []
    for g in cleaned:
        d = g.degree
        ech = span_ech.get(d)
        if ech is not None and ech.contains(g.comps[d]):
            continue  # already inside the ideal of the generators kept so far
        pruned.append(g)
        for db in parent.degrees():
            if db + d > cap:
                break
            for i in range(parent.dim(db)):
                w = parent.multiply(parent.basis_element(db, i), g, clip=True)
                if w.is_zero():
                    continue
                wd = db + d
                target = span_ech.setdefault(wd, Echelon(field))
                if target.insert(w.comps[wd]) is not None:
                    kept.append((w, (w,)))

    exact = parent.exact and known_exact
    return Ideal(parent, pruned, span_ech, kept,
                 window=None if parent.exact else parent.window, exact=exact)


def ideal_from_subspace(parent: GradedAlgebra, subspace: GradedSubspace) -> Ideal:
    """The ideal generated by a graded subspace's basis vectors."""
    if subspace.parent is not parent:
        raise ValidationError("subspace does not live in the given parent algebra")
    return ideal_from_generators(
        parent, subspace.all_basis_elements(), known_exact=subspace.exact
    )


def ideal_product(left: Ideal, right: Ideal) -> Ideal:
    """The product ideal, generated by pairwise products of generators."""
    if left.parent is not right.parent:
        raise ValidationError("ideal product needs a shared parent algebra")
    gens = []
    for gi in left.generators:
        for gj in right.generators:
            w = left.parent.multiply(gi, gj, clip=True)
            if not w.is_zero():
                gens.append(w)
    return ideal_from_generators(
        left.parent, gens, known_exact=left.exact and right.exact
    )


def nilpotency(ideal: Ideal) -> NilResult:
    """Smallest m with I^{m+1} = 0, plus a factored nonzero witness of I^m.

    Iterates P_1 = I, P_{k+1} = P_k · I on spanning product vectors.  On an
    exact parent the result is the true index (every product beyond the top
    degree is provably zero); on a truncated parent it is a lower bound.
    """
    parent = ideal.parent
    cap = _span_cap(parent)
    if ideal.is_zero():
        return NilResult(0, ideal.exact, [], parent.one())

    current = ideal._kept
    k = 1
    while True:
        nxt_ech: dict[int, Echelon] = {}
        nxt = []
        for u, factors in current:
            du = u.degree
            for g in ideal.generators:
                d = du + g.degree
                if d > cap:
                    continue
                w = parent.multiply(u, g, clip=True)
                if w.is_zero():
                    continue
                ech = nxt_ech.setdefault(d, Echelon(parent.field))
                if ech.insert(w.comps[d]) is not None:
                    nxt.append((w, factors + (g,)))
        if not nxt:
            product, chain = current[0]
            return NilResult(k, ideal.exact, list(chain), product)
        current = nxt
        k += 1


def map_image_ideal(f: AlgebraMap, ideal: Ideal) -> Ideal:
    """The ideal generated by the images of the generators, zeros dropped."""
    if ideal.parent is not f.domain:
        raise ValidationError("ideal does not live in the map's domain")
    gens = []
    complete = True
    for g in ideal.generators:
        try:
            img = f.apply(g)
        except TruncationError:
            complete = False  # generator beyond the map window: lower bound
            continue
        if not img.is_zero():
            gens.append(img)
    return ideal_from_generators(
        f.codomain, gens, known_exact=ideal.exact and f.exact and complete
    )


def subspace_intersection(left: GradedSubspace, right: GradedSubspace) -> GradedSubspace:
    """Degree-wise exact intersection of two subspaces of one parent."""
    if left.parent is not right.parent:
        raise ValidationError("subspace intersection needs a shared parent algebra")
    parent = left.parent
    rows = {}
    for d in left.degrees():
        if right.dim(d) == 0:
            continue
        basis = intersect_spans(
            parent.field, left.rows(d), right.rows(d), parent.dim(d)
        )
        if basis:
            rows[d] = basis
    return GradedSubspace(
        parent, rows,
        window=_min_window(left.window, right.window),
        exact=left.exact and right.exact,
    )
