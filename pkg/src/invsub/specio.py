"""JSON interchange for subalgebra specs.

The on-disk shape is a single object: prime, qudits per site, spatial
dimensions, and a list of generators, each giving its X and Z parts as
lists of polynomial strings (one per qudit slot).  Printing is
canonical — sorted keys, sorted terms, reduced coefficients — so a
parse/print cycle is byte-stable, and every parse failure points at the
generator and slot that caused it.
"""

from __future__ import annotations

import json

import sympy as sp

from .laurent import (
    LaurentMatrix,
    PolyParseError,
    format_poly,
    parse_poly,
)
from .pauli import SubalgebraSpec


class SpecFormatError(ValueError):
    """Malformed spec document, with a pointer to the offending part."""


_REQUIRED = ("prime", "qudits_per_site", "dims", "generators")


def _require_int(data: dict, key: str, minimum: int) -> int:
    value = data[key]
    if not isinstance(value, int) or isinstance(value, bool) \
            or value < minimum:
        raise SpecFormatError(
            f"{key!r} must be an integer >= {minimum}, got {value!r}"
        )
    return value


def parse_spec(text: str) -> SubalgebraSpec:
    try:
        data = json.loads(text)
    except json.JSONDecodeError as exc:
        raise SpecFormatError(f"not valid JSON: {exc}") from None
    if not isinstance(data, dict):
        raise SpecFormatError("top level must be an object")
    missing = [k for k in _REQUIRED if k not in data]
    if missing:
        raise SpecFormatError(f"missing keys: {', '.join(missing)}")
    unknown = [k for k in data if k not in _REQUIRED]
    if unknown:
        raise SpecFormatError(f"unknown keys: {', '.join(sorted(unknown))}")

    p = _require_int(data, "prime", 2)
    if not sp.isprime(p):
        raise SpecFormatError(f"modulus {p} is not prime")
    q = _require_int(data, "qudits_per_site", 1)
    dims = _require_int(data, "dims", 1)

    gens = data["generators"]
    if not isinstance(gens, list):
        raise SpecFormatError("'generators' must be a list")
    columns: list[list] = []
    for gi, gen in enumerate(gens):
        where = f"generator {gi}"
        if not isinstance(gen, dict) or set(gen) != {"x", "z"}:
            raise SpecFormatError(
                f"{where}: expected an object with exactly 'x' and 'z'"
            )
        halves = []
        for half in ("x", "z"):
            part = gen[half]
            if not isinstance(part, list) or len(part) != q:
                raise SpecFormatError(
                    f"{where}: {half!r} must list {q} polynomial strings"
                )
            for si, s in enumerate(part):
                if not isinstance(s, str):
                    raise SpecFormatError(
                        f"{where}, {half}[{si}]: expected a string"
                    )
                try:
                    halves.append(parse_poly(s, p, dims))
                except PolyParseError as exc:
                    raise SpecFormatError(
                        f"{where}, {half}[{si}]: {exc}"
                    ) from None
        columns.append(halves)

    entries = [[col[r] for col in columns] for r in range(2 * q)]
    m = LaurentMatrix.zeros(p, dims, 2 * q, len(columns))
    if columns:
        object.__setattr__(m, "entries", entries)
    return SubalgebraSpec(p=p, q=q, dims=dims, generators=m)


def spec_to_json(spec: SubalgebraSpec) -> str:
    gens = []
    for j in range(spec.n_generators):
        col = spec.generators.column(j)
        gens.append({
            "x": [format_poly(e) for e in col[: spec.q]],
            "z": [format_poly(e) for e in col[spec.q:]],
        })
    data = {
        "prime": spec.p,
        "qudits_per_site": spec.q,
        "dims": spec.dims,
        "generators": gens,
    }
    return json.dumps(data, indent=2, sort_keys=True) + "\n"


def resolve_spec(token: str) -> SubalgebraSpec:
    """A builtin model name, or a path to a spec document."""
    from .zoo import _BUILDERS, get_example

    if token in _BUILDERS:
        return get_example(token).spec
    try:
        with open(token, encoding="utf-8") as fh:
            text = fh.read()
    except OSError as exc:
        raise SpecFormatError(
            f"{token!r} is neither a builtin name nor a readable file: {exc}"
        ) from None
    return parse_spec(text)
