"""Standard example families: spheres, truncated polynomial algebras, and
exterior algebras on odd generators, together with their closed-form higher
topological complexity.

Each family is produced as an algebra-file document (the same JSON structure
the CLI reads), so table sweeps and tests exercise the file path end to end.
"""

from __future__ import annotations

from .fields import RATIONALS, FieldSpec
from .files import algebra_from_dict


def sphere_doc(l: int, field: str | dict = "Q") -> dict:
    """Cohomology of an l-sphere: one generator of degree l, squared to zero
    when l is even (odd generators square to zero by graded commutativity)."""
    if l < 1:
        raise ValueError(f"sphere dimension must be >= 1, got {l}")
    relations = [] if l % 2 else ["x^2"]
    return {
        "field": field,
        "mode": "presentation",
        "presentation": {
            "generators": [{"name": "x", "degree": l}],
            "relations": relations,
            "truncation_degree": 2 * l,
        },
    }


def cproj_doc(l: int, field: str | dict = "Q") -> dict:
    """Truncated polynomial algebra on a degree-2 class, height l."""
    if l < 1:
        raise ValueError(f"complex projective dimension must be >= 1, got {l}")
    return {
        "field": field,
        "mode": "presentation",
        "presentation": {
            "generators": [{"name": "x", "degree": 2}],
            "relations": [f"x^{l + 1}"],
            "truncation_degree": 2 * l + 2,
        },
    }


def exterior_doc(k: int, degrees=(3, 5, 7)) -> dict:
    """Free graded-commutative algebra on k odd generators."""
    if not 1 <= k <= len(degrees):
        raise ValueError(f"k must be between 1 and {len(degrees)}, got {k}")
    chosen = degrees[:k]
    if any(d % 2 == 0 for d in chosen):
        raise ValueError(f"exterior generators must have odd degrees, got {chosen}")
    return {
        "field": "Q",
        "mode": "presentation",
        "presentation": {
            "generators": [
                {"name": f"x{i + 1}", "degree": d} for i, d in enumerate(chosen)
            ],
            "relations": [],
            "truncation_degree": sum(chosen) + max(chosen),
        },
    }


def identity_map_doc(algebra_doc: dict, algebra_path: str) -> dict:
    names = [g["name"] for g in algebra_doc["presentation"]["generators"]]
    return {
        "domain": algebra_path,
        "codomain": algebra_path,
        "images": {n: n for n in names},
    }


def sphere_algebra(l: int, field: FieldSpec = RATIONALS):
    doc = sphere_doc(l)
    doc["field"] = "Q" if field.is_rational else {"Fp": field.characteristic}
    return algebra_from_dict(doc)


def cproj_algebra(l: int, field: FieldSpec = RATIONALS):
    doc = cproj_doc(l)
    doc["field"] = "Q" if field.is_rational else {"Fp": field.characteristic}
    return algebra_from_dict(doc)


def exterior_algebra(k: int, degrees=(3, 5, 7)):
    return algebra_from_dict(exterior_doc(k, degrees))


def sphere_tc(n: int, l: int) -> int:
    """Closed form for the n-th topological complexity over an l-sphere."""
    return n - 1 if l % 2 else n


def cproj_tc(n: int, l: int) -> int:
    return n * l


def exterior_tc(n: int, k: int) -> int:
    return (n - 1) * k
