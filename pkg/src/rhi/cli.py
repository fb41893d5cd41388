"""File-driven command line interface.

Algebras and maps are JSON documents (one file per algebra, one per map; map
files reference algebra files by path).  Every invariant command prints the
value, its exactness, the governing formula and any hypothesis warnings;
--json emits the machine-readable report and --witness the factored nonzero
product certifying the value.

Exit status: 0 success, 1 validation/parse failure, 2 when --strict elevates
a mathematical-hypothesis warning.
"""

from __future__ import annotations

import json
import os
import sys
from functools import wraps

import click

from . import families
from .errors import ConfigError, RhiError
from .files import load_algebra, load_map
from .gca import check_axioms
from .invariants import (
    cat_formal,
    hd_formal,
    relsecat_lower_bound,
    secat_formal,
    tc_mw_formal,
    tc_n_formal,
)


def _common(fn):
    fn = click.option("--json", "as_json", is_flag=True, help="Emit the serialized report.")(fn)
    fn = click.option("--witness", "show_witness", is_flag=True,
                      help="Print the factored nonzero witness product.")(fn)
    fn = click.option("--strict", is_flag=True,
                      help="Exit with status 2 when hypothesis warnings are present.")(fn)
    fn = click.option("--truncation-override", type=int, default=None, metavar="D",
                      help="Override truncation_degree of presentation-mode algebra files.")(fn)
    return fn


def _formal_flag(fn):
    return click.option(
        "--formal", is_flag=True,
        help="Assert the underlying maps are formal; labels the value as the "
             "invariant rather than a lower bound.",
    )(fn)


def _trap(fn):
    @wraps(fn)
    def wrapper(*args, **kwargs):
        try:
            return fn(*args, **kwargs)
        except RhiError as exc:
            click.echo(f"error: {exc}", err=True)
            sys.exit(1)

    return wrapper


def _emit(report, as_json, show_witness, strict):
    if as_json:
        click.echo(json.dumps(report.to_json_dict(), indent=2))
    else:
        shown = report.name if report.n is None else f"tc_{report.n}"
        flag = "exact" if report.exact else "lower bound: truncated window"
        click.echo(f"{shown} = {report.value}   [{flag}]")
        click.echo(f"  status: {report.label}")
        click.echo(f"  formula: {report.formula}")
        for w in report.warnings:
            click.echo(f"  warning: {w}")
        if show_witness:
            algebra = report.witness.witness_product.algebra
            factors = report.witness.witness_factors
            click.echo(
                f"  witness: nonzero product of {len(factors)} ideal element(s)"
            )
            for factor in factors:
                click.echo(f"    factor: {algebra.element_expr(factor)}")
            click.echo(
                f"    product (degree {report.witness.witness_product.degree}): "
                f"{algebra.element_expr(report.witness.witness_product)}"
            )
    if strict and report.warnings:
        sys.exit(2)


@click.group()
def main():
    """Exact rational-homotopy invariants of formal maps via ideal nilpotency."""


@main.group()
def algebra():
    """Operations on algebra files."""


@algebra.command("check")
@click.argument("path", type=click.Path())
@click.option("--truncation-override", type=int, default=None, metavar="D")
@_trap
def algebra_check(path, truncation_override):
    """Realize an algebra file and report dimensions, certificate and axioms."""
    realized = load_algebra(path, truncation_override=truncation_override)
    click.echo(f"field: {realized.field}")
    dims = " ".join(f"{d}:{realized.dim(d)}" for d in realized.degrees())
    click.echo(f"dimensions by degree: {dims}")
    if realized.exact:
        click.echo(f"finiteness: exact, top degree {realized.top_degree}")
    else:
        click.echo(f"finiteness: truncated at degree {realized.window}")
    report = check_axioms(realized, pair_limit=5000, triple_limit=5000)
    pair_note = " (sampled)" if report.pairs_sampled else ""
    triple_note = " (sampled)" if report.triples_sampled else ""
    click.echo(
        f"axioms: graded commutativity ok on {report.pairs_checked} pairs{pair_note}; "
        f"associativity ok on {report.triples_checked} triples{triple_note}"
    )


@main.command()
@click.argument("map_file", type=click.Path())
@click.option("-n", "n", type=int, required=True, help="Number of tensor factors (>= 2).")
@_formal_flag
@_common
@_trap
def tc(map_file, n, formal, as_json, show_witness, strict, truncation_override):
    """Higher topological complexity of the map in MAP_FILE."""
    f = load_map(map_file, truncation_override=truncation_override)
    _emit(tc_n_formal(f, n, formal=formal), as_json, show_witness, strict)


@main.command()
@click.argument("map_file", type=click.Path())
@_formal_flag
@_common
@_trap
def cat(map_file, formal, as_json, show_witness, strict, truncation_override):
    """LS-category of the map in MAP_FILE."""
    f = load_map(map_file, truncation_override=truncation_override)
    _emit(cat_formal(f, formal=formal), as_json, show_witness, strict)


@main.command()
@click.argument("phi_file", type=click.Path())
@click.argument("psi_file", type=click.Path())
@_formal_flag
@_common
@_trap
def secat(phi_file, psi_file, formal, as_json, show_witness, strict, truncation_override):
    """Relative sectional category of PSI with respect to PHI."""
    phi = load_map(phi_file, truncation_override=truncation_override)
    psi = load_map(psi_file, truncation_override=truncation_override)
    _emit(secat_formal(phi, psi, formal=formal), as_json, show_witness, strict)


@main.command()
@click.argument("map_file", type=click.Path())
@_formal_flag
@_common
@_trap
def tcmw(map_file, formal, as_json, show_witness, strict, truncation_override):
    """Intersection-form topological complexity of the map in MAP_FILE."""
    f = load_map(map_file, truncation_override=truncation_override)
    _emit(tc_mw_formal(f, formal=formal), as_json, show_witness, strict)


@main.command()
@click.argument("f_file", type=click.Path())
@click.argument("g_file", type=click.Path())
@_formal_flag
@_common
@_trap
def hd(f_file, g_file, formal, as_json, show_witness, strict, truncation_override):
    """Homotopic distance between the two maps."""
    f = load_map(f_file, truncation_override=truncation_override)
    g = load_map(g_file, truncation_override=truncation_override)
    _emit(hd_formal(f, g, formal=formal), as_json, show_witness, strict)


@main.command("relsecat-lb")
@click.argument("f_file", type=click.Path())
@click.argument("p_file", type=click.Path())
@_formal_flag
@_common
@_trap
def relsecat_lb(f_file, p_file, formal, as_json, show_witness, strict, truncation_override):
    """Nilpotency lower bound for the relative sectional category."""
    f = load_map(f_file, truncation_override=truncation_override)
    p = load_map(p_file, truncation_override=truncation_override)
    _emit(relsecat_lower_bound(f, p, formal=formal), as_json, show_witness, strict)


def _cache_dir() -> str:
    path = os.environ.get("RHI_CACHE_DIR", ".rhi-cache")
    os.makedirs(path, exist_ok=True)
    return path


def _write_cached(name: str, doc: dict) -> str:
    path = os.path.join(_cache_dir(), name)
    with open(path, "w") as handle:
        json.dump(doc, handle, indent=2, sort_keys=True)
        handle.write("\n")
    return path


_FAMILY_GUARDS = {"n": 6, "l": 5, "k": 4}


@main.command()
@click.argument("family", type=click.Choice(["spheres", "cproj", "exterior"]))
@click.option("--n-min", type=int, default=2, show_default=True)
@click.option("--n-max", type=int, default=None, help="Default: 5 for spheres, 4 otherwise.")
@click.option("--l-min", type=int, default=1, show_default=True)
@click.option("--l-max", type=int, default=None, help="Default: 4 for spheres, 3 for cproj.")
@click.option("--k-min", type=int, default=1, show_default=True)
@click.option("--k-max", type=int, default=3, show_default=True)
@_trap
def table(family, n_min, n_max, l_min, l_max, k_min, k_max):
    """Sweep a family, comparing computed values against the closed form.

    Rows are computed from presentation files written under the cache
    directory (RHI_CACHE_DIR, default .rhi-cache), so any row can be re-run
    individually with `tc`.  Exits nonzero if a row mismatches.
    """
    if n_max is None:
        n_max = 5 if family == "spheres" else 4
    if l_max is None:
        l_max = 4 if family == "spheres" else 3
    if n_max > _FAMILY_GUARDS["n"] or l_max > _FAMILY_GUARDS["l"] or k_max > _FAMILY_GUARDS["k"]:
        raise ConfigError(
            f"range guard exceeded: n <= {_FAMILY_GUARDS['n']}, "
            f"l <= {_FAMILY_GUARDS['l']}, k <= {_FAMILY_GUARDS['k']}"
        )

    if family == "spheres":
        params = [("l", l, families.sphere_doc(l), families.sphere_tc)
                  for l in range(l_min, l_max + 1)]
    elif family == "cproj":
        params = [("l", l, families.cproj_doc(l), families.cproj_tc)
                  for l in range(l_min, l_max + 1)]
    else:
        params = [("k", k, families.exterior_doc(k), families.exterior_tc)
                  for k in range(k_min, k_max + 1)]

    click.echo("family\tparam\tn\tcomputed\tpredicted\tmatch")
    all_match = True
    for label, value, doc, closed_form in params:
        algebra_path = _write_cached(f"{family}_{label}{value}.json", doc)
        map_doc = families.identity_map_doc(doc, os.path.basename(algebra_path))
        map_path = _write_cached(f"{family}_{label}{value}_id.json", map_doc)
        f = load_map(map_path)
        for n in range(n_min, n_max + 1):
            computed = tc_n_formal(f, n, formal=True).value
            predicted = closed_form(n, value)
            match = computed == predicted
            all_match = all_match and match
            click.echo(
                f"{family}\t{label}={value}\t{n}\t{computed}\t{predicted}\t"
                f"{'ok' if match else 'MISMATCH'}"
            )
    if not all_match:
        sys.exit(1)


@main.command(hidden=True)
@click.option("--instances", type=int, default=50, show_default=True)
@click.option("--seed", type=int, default=0, show_default=True)
@click.option("--field", "field_name", type=click.Choice(["Q", "F2", "F3", "F5", "F7"]),
              default="Q", show_default=True)
@_trap
def fuzz(instances, seed, field_name):
    """Engine-vs-oracle fuzzing session (hidden)."""
    from .fields import RATIONALS, prime_field
    from .ideals import nilpotency
    from .oracle import brute_nilpotency, brute_subset_nilpotency, seeded_nil_instance

    field = RATIONALS if field_name == "Q" else prime_field(int(field_name[1:]))
    failures = 0
    for i in range(instances):
        desc, subset, ideal = seeded_nil_instance(seed + i, field=field)
        engine = nilpotency(ideal).index
        cap = ideal.parent.top_degree + 1
        brute = brute_nilpotency(ideal, cap)
        subset_nil = brute_subset_nilpotency(ideal.parent, subset, cap)
        ok = engine == brute == subset_nil
        if not ok:
            failures += 1
        click.echo(
            f"[{'ok' if ok else 'FAIL'}] {desc}: engine={engine} brute={brute} "
            f"subset={subset_nil}"
        )
    click.echo(f"{instances - failures}/{instances} instances agreed")
    if failures:
        sys.exit(1)


if __name__ == "__main__":
    main()
