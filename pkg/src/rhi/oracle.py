"""Independent verification paths and seeded random instance generators.

`brute_nilpotency` re-derives the nilpotency index by direct depth-first
expansion of k-fold products of span vectors, sharing nothing with the power
iteration in `ideals`.  The generators below produce small deterministic
algebras, maps and ideals for property testing.
"""

from __future__ import annotations

import random
from dataclasses import dataclass, field as dc_field

from .errors import CapExceededError, ValidationError
from .fields import RATIONALS, FieldSpec
from .gca import (
    Generator,
    GradedAlgebra,
    Presentation,
    _monomials_of_degree,
    realize_presentation,
)
from .ideals import Ideal, ideal_from_generators
from .morphisms import AlgebraMap, build_map


def _max_nonzero_depth(parent: GradedAlgebra, vecs, cap: int) -> int:
    """Deepest k such that some ordered multiset of k vectors has nonzero product."""
    top = parent.top_degree
    vecs = sorted(vecs, key=lambda e: e.degree)
    if not vecs:
        return 0

    best = 0

    def dfs(start, product, depth):
        nonlocal best
        if depth > best:
            best = depth
        if depth == cap:
            raise CapExceededError(
                f"a nonzero {cap}-fold product exists; raise the cap to conclude"
            )
        pd = product.degree
        for i in range(start, len(vecs)):
            if pd + vecs[i].degree > top:
                break  # sorted by degree: everything later overflows too
            nxt = product * vecs[i]
            if not nxt.is_zero():
                dfs(i, nxt, depth + 1)

    for i, v in enumerate(vecs):
        dfs(i, v, 1)
    return best


def brute_nilpotency(ideal: Ideal, cap: int) -> int:
    """Nilpotency by brute force: the deepest nonzero product of span vectors.

    Walks ordered multisets of the ideal's span basis depth-first, pruning
    zero partial products and degree overflow; shares nothing with the power
    iteration.  Requires an exact parent (the verdict must not depend on
    unseen degrees) and raises CapExceededError if a nonzero product reaches
    the cap.
    """
    parent = ideal.parent
    if not parent.exact:
        raise ValidationError("brute_nilpotency needs an exact finiteness certificate")
    span = ideal.as_subspace()
    vecs = []
    for d in ideal.degrees():
        vecs.extend(span.basis_elements(d))
    return _max_nonzero_depth(parent, vecs, cap)


def brute_subset_nilpotency(parent: GradedAlgebra, elements, cap: int) -> int:
    """Nilpotency of a plain subset: deepest nonzero product of spanning elements.

    Used to verify the subset/ideal law nil(S) = nil(<S>) independently of
    the ideal machinery.
    """
    if not parent.exact:
        raise ValidationError("brute_subset_nilpotency needs an exact finiteness certificate")
    return _max_nonzero_depth(parent, [e for e in elements if not e.is_zero()], cap)


@dataclass(frozen=True)
class RandomInstanceSpec:
    """Deterministic sampling bounds for random algebras."""

    seed: int
    gen_count: tuple = (1, 3)
    degree: tuple = (1, 6)
    relation_count: tuple = (0, 2)
    truncation: int = 18
    field: FieldSpec = dc_field(default=RATIONALS)
    max_total_dim: int = 400


_COEFF_POOL = (-2, -1, 1, 2)


def _random_free_combo(rng, ctx_algebra, degree, field):
    """A random homogeneous element of the realized algebra at the degree."""
    dim = ctx_algebra.dim(degree)
    if dim == 0:
        return ctx_algebra.zero()
    coords = {}
    for i in range(dim):
        if rng.random() < 0.6:
            c = field.coerce(rng.choice(_COEFF_POOL))
            if c != field.zero:
                coords[i] = c
    return ctx_algebra.element({degree: coords})


def random_algebra(spec: RandomInstanceSpec) -> GradedAlgebra:
    """Seeded random presentation algebra within the spec's bounds.

    Every generator with unbounded powers (even degree, or any degree in
    characteristic 2) gets a bounding power relation, so the realization is
    finite-dimensional with an exact certificate; the brute-force oracle
    needs that to conclude.
    """
    rng = random.Random(spec.seed)
    lo, hi = spec.degree
    degree_pool = [d for d in (1, 1, 2, 2, 2, 3, 3, 4, 5, 6) if lo <= d <= hi]
    if not degree_pool:
        degree_pool = list(range(lo, hi + 1))
    for _ in range(256):
        count = rng.randint(*spec.gen_count)
        names = ["a", "b", "c", "d"][:count]
        gens = [Generator(n, rng.choice(degree_pool)) for n in names]
        degrees = tuple(g.degree for g in gens)
        auto_exterior = spec.field.characteristic != 2
        caps = [1 if (g.degree % 2 and auto_exterior) else None for g in gens]

        relations = []
        bound = 0
        for g in gens:
            if g.degree % 2 and auto_exterior:
                bound += g.degree
            else:
                e = rng.choice((3, 4, 5) if g.degree <= 2 else (2, 2, 3))
                relations.append(f"{g.name}^{e}")
                bound += (e - 1) * g.degree
        if bound + max(degrees) > spec.truncation:
            continue

        for _ in range(rng.randint(*spec.relation_count)):
            rdeg = rng.randint(2, max(2, min(spec.truncation, 2 * max(degrees))))
            monos = _monomials_of_degree(degrees, caps, rdeg)
            if not monos:
                continue
            terms = []
            for mono in monos:
                if rng.random() < 0.5 and any(mono):
                    c = rng.choice(_COEFF_POOL)
                    body = "*".join(
                        f"{n}^{e}" if e > 1 else n
                        for n, e in zip(names, mono) if e
                    )
                    terms.append(f"{c}*{body}" if c != 1 else body)
            if terms:
                relations.append(" + ".join(terms))

        algebra = realize_presentation(
            Presentation(gens, relations, spec.truncation), spec.field
        )
        if algebra.exact and sum(algebra.dims_list()) <= spec.max_total_dim:
            return algebra
    raise ValidationError(f"could not sample a small exact algebra from seed {spec.seed}")


def random_map(domain: GradedAlgebra, codomain: GradedAlgebra, seed: int,
               attempts: int = 40) -> AlgebraMap:
    """Rejection-sample a valid map: random generator images, retried until
    every relation maps to zero.  Raises after the attempt bound."""
    rng = random.Random(seed)
    rejections = 0
    field = domain.field
    for _ in range(attempts):
        images = {}
        for g in domain.presentation.generators:
            images[g.name] = _random_free_combo(rng, codomain, g.degree, field)
        try:
            f = build_map(domain, codomain, images)
        except ValidationError:
            rejections += 1
            continue
        f.rejections = rejections
        return f
    raise ValidationError(
        f"no valid map found from seed {seed} after {attempts} attempts "
        f"({rejections} rejections)"
    )


def random_quotient_map(spec: RandomInstanceSpec):
    """A surjection onto the same presentation with one extra random relation.

    Always valid (the domain's relations are a subset of the codomain's), so
    it reliably produces maps with interesting kernels.
    """
    rng = random.Random(spec.seed ^ 0x5EED)
    domain = random_algebra(spec)
    pres = domain.presentation
    degrees = tuple(g.degree for g in pres.generators)
    caps = [
        1 if (g.degree % 2 and spec.field.characteristic != 2) else None
        for g in pres.generators
    ]
    names = [g.name for g in pres.generators]
    extra = None
    for _ in range(32):
        rdeg = rng.randint(min(degrees), max(2, min(spec.truncation, 2 * max(degrees))))
        monos = _monomials_of_degree(degrees, caps, rdeg)
        terms = []
        for mono in monos:
            if rng.random() < 0.5 and any(mono):
                c = rng.choice(_COEFF_POOL)
                body = "*".join(
                    f"{n}^{e}" if e > 1 else n for n, e in zip(names, mono) if e
                )
                terms.append(f"{c}*{body}" if c != 1 else body)
        if terms:
            extra = " + ".join(terms)
            break
    if extra is None:
        extra = names[0]
    codomain = realize_presentation(
        Presentation(pres.generators, list(pres.relations) + [extra],
                     pres.truncation_degree),
        spec.field,
    )
    f = build_map(domain, codomain, {n: n for n in names})
    return domain, codomain, f


def random_ideal(algebra: GradedAlgebra, seed: int, max_gens: int = 3) -> Ideal:
    """Seeded random finitely generated ideal with positive-degree generators."""
    rng = random.Random(seed)
    degrees = [d for d in algebra.degrees() if d > 0]
    gens = []
    if degrees:
        low = degrees[: max(1, (len(degrees) + 1) // 2)]  # low degrees survive powering
        for _ in range(rng.randint(1, max_gens)):
            d = rng.choice(low)
            el = _random_free_combo(rng, algebra, d, algebra.field)
            if not el.is_zero():
                gens.append(el)
    return ideal_from_generators(algebra, gens)


def seeded_nil_instance(seed: int, field: FieldSpec = RATIONALS, truncation: int = 14):
    """One deterministic (description, generators, Ideal) fuzzing instance.

    Odd seeds use the kernel of a random quotient map, even seeds a random
    finitely generated ideal; the returned generator list spans the subset
    the ideal was built from (for the subset/ideal law).
    """
    from .ideals import ideal_from_subspace
    from .morphisms import kernel

    spec = RandomInstanceSpec(seed=seed, field=field, truncation=truncation)
    if seed % 2:
        domain, _, f = random_quotient_map(spec)
        ker = kernel(f)
        ideal = ideal_from_subspace(domain, ker)
        return (f"kernel of quotient map (seed {seed})", ker.all_basis_elements(), ideal)
    algebra = random_algebra(spec)
    ideal = random_ideal(algebra, seed)
    return (f"random ideal (seed {seed})", list(ideal.generators), ideal)
