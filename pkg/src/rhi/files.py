"""Reading algebra and map documents.

Algebra file (JSON):
    field: "Q" | {"Fp": <prime>}
    mode: "presentation" | "table"
    presentation: {generators: [{name, degree}], relations: [<expr>],
                   truncation_degree}
    table: {basis: [{name, degree}], unit: <name>,
            products: [{left, right, value: [[<coeff>, <name>], ...]}]}

Map file (JSON):
    {domain: <path>, codomain: <path>, images: {<name>: <expr>}}

Paths inside a map file resolve relative to the map file's directory.
Algebras are cached per resolved path so that two map files referring to the
same algebra file share one realized object.
"""

from __future__ import annotations

import json
import os

from .errors import ParseError
from .fields import FieldSpec
from .gca import (
    Generator,
    GradedAlgebra,
    MultiplicationTable,
    Presentation,
    realize_presentation,
    realize_table,
)
from .morphisms import AlgebraMap, build_map

_ALGEBRA_CACHE: dict = {}


def clear_cache():
    _ALGEBRA_CACHE.clear()


def _expect(doc, key, types, where):
    if key not in doc:
        raise ParseError(f"{where}: missing field {key!r}")
    value = doc[key]
    if not isinstance(value, types):
        raise ParseError(f"{where}.{key}: expected {types}, got {type(value).__name__}")
    return value


def field_from_json(value, where="field") -> FieldSpec:
    if value == "Q":
        return FieldSpec(0)
    if isinstance(value, dict) and set(value) == {"Fp"}:
        p = value["Fp"]
        if not isinstance(p, int):
            raise ParseError(f"{where}.Fp: expected an integer prime, got {p!r}")
        return FieldSpec(p)
    raise ParseError(f'{where}: expected "Q" or {{"Fp": <prime>}}, got {value!r}')


def field_to_json(field: FieldSpec):
    return "Q" if field.is_rational else {"Fp": field.characteristic}


def _coeff(value, where):
    if isinstance(value, bool) or isinstance(value, float):
        raise ParseError(f"{where}: coefficients must be exact (int or string), got {value!r}")
    if isinstance(value, (int, str)):
        return value
    raise ParseError(f"{where}: bad coefficient {value!r}")


def algebra_from_dict(doc: dict, *, truncation_override: int | None = None,
                      where: str = "algebra") -> GradedAlgebra:
    field = field_from_json(_expect(doc, "field", (str, dict), where), f"{where}.field")
    mode = _expect(doc, "mode", str, where)

    if mode == "presentation":
        pres = _expect(doc, "presentation", dict, where)
        gens_doc = _expect(pres, "generators", list, f"{where}.presentation")
        generators = []
        for i, g in enumerate(gens_doc):
            spot = f"{where}.presentation.generators[{i}]"
            name = _expect(g, "name", str, spot)
            degree = _expect(g, "degree", int, spot)
            generators.append(Generator(name, degree))
        relations = _expect(pres, "relations", list, f"{where}.presentation")
        for i, r in enumerate(relations):
            if not isinstance(r, str):
                raise ParseError(f"{where}.presentation.relations[{i}]: expected a string")
        trunc = _expect(pres, "truncation_degree", int, f"{where}.presentation")
        if truncation_override is not None:
            trunc = truncation_override
        return realize_presentation(
            Presentation(generators, relations, trunc), field
        )

    if mode == "table":
        table_doc = _expect(doc, "table", dict, where)
        basis_doc = _expect(table_doc, "basis", list, f"{where}.table")
        basis = []
        for i, b in enumerate(basis_doc):
            spot = f"{where}.table.basis[{i}]"
            basis.append((_expect(b, "name", str, spot), _expect(b, "degree", int, spot)))
        unit = _expect(table_doc, "unit", str, f"{where}.table")
        products = {}
        for i, entry in enumerate(_expect(table_doc, "products", list, f"{where}.table")):
            spot = f"{where}.table.products[{i}]"
            left = _expect(entry, "left", str, spot)
            right = _expect(entry, "right", str, spot)
            value = _expect(entry, "value", list, spot)
            pairs = []
            for j, pair in enumerate(value):
                if not isinstance(pair, list) or len(pair) != 2 or not isinstance(pair[1], str):
                    raise ParseError(f"{spot}.value[{j}]: expected [<coeff>, <name>]")
                pairs.append((_coeff(pair[0], f"{spot}.value[{j}]"), pair[1]))
            if (left, right) in products:
                raise ParseError(f"{spot}: duplicate product entry for ({left!r}, {right!r})")
            products[(left, right)] = tuple(pairs)
        return realize_table(MultiplicationTable(basis, unit, products), field)

    raise ParseError(f'{where}.mode: expected "presentation" or "table", got {mode!r}')


def load_algebra(path: str, *, truncation_override: int | None = None) -> GradedAlgebra:
    resolved = os.path.realpath(path)
    key = (resolved, truncation_override)
    if key not in _ALGEBRA_CACHE:
        try:
            with open(resolved) as handle:
                doc = json.load(handle)
        except FileNotFoundError:
            raise ParseError(f"algebra file not found: {path}")
        except json.JSONDecodeError as exc:
            raise ParseError(f"{path}: invalid JSON at line {exc.lineno}: {exc.msg}")
        if not isinstance(doc, dict):
            raise ParseError(f"{path}: expected a JSON object")
        _ALGEBRA_CACHE[key] = algebra_from_dict(
            doc, truncation_override=truncation_override, where=path
        )
    return _ALGEBRA_CACHE[key]


def map_from_dict(doc: dict, base_dir: str, *, truncation_override: int | None = None,
                  where: str = "map") -> AlgebraMap:
    domain_path = _expect(doc, "domain", str, where)
    codomain_path = _expect(doc, "codomain", str, where)
    images = _expect(doc, "images", dict, where)
    domain = load_algebra(
        os.path.join(base_dir, domain_path), truncation_override=truncation_override
    )
    codomain = load_algebra(
        os.path.join(base_dir, codomain_path), truncation_override=truncation_override
    )
    return build_map(domain, codomain, images)


def load_map(path: str, *, truncation_override: int | None = None) -> AlgebraMap:
    try:
        with open(path) as handle:
            doc = json.load(handle)
    except FileNotFoundError:
        raise ParseError(f"map file not found: {path}")
    except json.JSONDecodeError as exc:
        raise ParseError(f"{path}: invalid JSON at line {exc.lineno}: {exc.msg}")
    if not isinstance(doc, dict):
        raise ParseError(f"{path}: expected a JSON object")
    return map_from_dict(
        doc, os.path.dirname(os.path.abspath(path)),
        truncation_override=truncation_override, where=path,
    )
