"""The algebra file format: a single JSON object, rationals as strings.

Canonical serialization sorts keys, sorts structure-constant triples
lexicographically, reduces every rational and is byte-stable across
runs, so parse -> serialize -> parse is the identity on canonical
documents.
"""

import json
import re
from dataclasses import dataclass, field
from fractions import Fraction

from .core import BilinearProduct, EvenLinearMap, GradedAlgebra, GradedBasis
from .errors import (
    AlgcheckError,
    DocumentError,
    EvennessError,
    InvalidRepresentationError,
    ShapeError,
)
from .grading import GroupSpec, MultiplierTable, SignBicharacter

_RATIONAL = re.compile(r"^[+-]?\d+(/\d+)?$")


def parse_rational(value, location=None):
    if isinstance(value, bool):
        raise DocumentError("bad-rational", f"not a rational: {value!r}", location)
    if isinstance(value, int):
        return Fraction(value)
    if isinstance(value, str) and _RATIONAL.match(value):
        num, _, den = value.partition("/")
        if den:
            if int(den) == 0:
                raise DocumentError("zero-denominator", f"zero denominator in {value!r}", location)
            return Fraction(int(num), int(den))
        return Fraction(int(num))
    raise DocumentError("bad-rational", f"not an exact rational: {value!r}", location)


def format_rational(x):
    return str(Fraction(x))


@dataclass
class AlgebraDocument:
    name: str
    algebra: GradedAlgebra
    operators: dict = field(default_factory=dict)
    multipliers: dict = field(default_factory=dict)
    metadata: dict = field(default_factory=dict)


def _need(obj, key, location):
    if key not in obj:
        raise DocumentError("missing-field", f"required field {key!r} missing", location)
    return obj[key]


def _matrix(basis, rows, location):
    if not isinstance(rows, list):
        raise DocumentError("shape", "matrix must be a list of rows", location)
    parsed = []
    for i, row in enumerate(rows):
        if not isinstance(row, list):
            raise DocumentError("shape", "matrix row must be a list", f"{location}[{i}]")
        parsed.append(tuple(parse_rational(x, f"{location}[{i}][{j}]") for j, x in enumerate(row)))
    try:
        return EvenLinearMap(basis, tuple(parsed))
    except EvennessError as exc:
        raise DocumentError("evenness", str(exc), location) from exc
    except ShapeError as exc:
        raise DocumentError("shape", str(exc), location) from exc


def _product(basis, triples, location):
    if not isinstance(triples, list):
        raise DocumentError("shape", "product must be a list of (i, j, k, c) entries", location)
    entries = []
    for t, item in enumerate(triples):
        loc = f"{location}[{t}]"
        if not (isinstance(item, list) and len(item) == 4):
            raise DocumentError("shape", "entry must be [i, j, k, \"p/q\"]", loc)
        i, j, k, c = item
        if not all(isinstance(x, int) and not isinstance(x, bool) for x in (i, j, k)):
            raise DocumentError("shape", "indices must be integers", loc)
        entries.append((i, j, k, parse_rational(c, loc)))
    try:
        return BilinearProduct(basis, tuple(entries))
    except EvennessError as exc:
        raise DocumentError("evenness", str(exc), location) from exc
    except ShapeError as exc:
        raise DocumentError("shape", str(exc), location) from exc


def parse_document(text):
    try:
        raw = json.loads(text)
    except json.JSONDecodeError as exc:
        raise DocumentError("malformed-json", str(exc)) from exc
    if not isinstance(raw, dict):
        raise DocumentError("malformed-json", "document must be a JSON object")

    group_raw = _need(raw, "group", "group")
    moduli = _need(group_raw, "moduli", "group")
    try:
        group = GroupSpec(tuple(moduli))
    except (InvalidRepresentationError, TypeError) as exc:
        raise DocumentError("shape", str(exc), "group.moduli") from exc

    basis_raw = _need(raw, "basis", "basis")
    degrees = _need(basis_raw, "degrees", "basis")
    for d, deg in enumerate(degrees):
        if not group.is_canonical(tuple(deg)):
            raise DocumentError(
                "degree-out-of-range",
                f"degree {deg} is not canonical for moduli {list(group.moduli)}",
                f"basis.degrees[{d}]",
            )
    try:
        basis = GradedBasis(group, tuple(tuple(d) for d in degrees))
    except ShapeError as exc:
        raise DocumentError("shape", str(exc), "basis.degrees") from exc

    eps_raw = _need(raw, "epsilon", "epsilon")
    try:
        if "matrix" in eps_raw:
            epsilon = SignBicharacter(group, tuple(tuple(r) for r in eps_raw["matrix"]))
        elif "table" in eps_raw:
            epsilon = _table(group, eps_raw["table"], "epsilon.table")
        else:
            raise DocumentError("missing-field", "epsilon needs 'matrix' or 'table'", "epsilon")
    except ShapeError as exc:
        raise DocumentError("shape", str(exc), "epsilon") from exc

    mu = _product(basis, raw["mu"], "mu") if "mu" in raw else None
    bracket = _product(basis, raw["bracket"], "bracket") if "bracket" in raw else None
    alpha = _matrix(basis, _need(raw, "alpha", "alpha"), "alpha")

    try:
        algebra = GradedAlgebra(
            group=group, epsilon=epsilon, basis=basis, mu=mu, bracket=bracket, alpha=alpha
        )
    except AlgcheckError as exc:
        raise DocumentError("shape", str(exc)) from exc

    operators = {}
    for name, rows in sorted(raw.get("operators", {}).items()):
        operators[name] = _matrix(basis, rows, f"operators.{name}")
    multipliers = {}
    for name, rows in sorted(raw.get("multipliers", {}).items()):
        multipliers[name] = _table(group, rows, f"multipliers.{name}")

    metadata = raw.get("metadata", {})
    if not isinstance(metadata, dict) or not all(
        isinstance(k, str) and isinstance(v, str) for k, v in metadata.items()
    ):
        raise DocumentError("shape", "metadata must map strings to strings", "metadata")

    return AlgebraDocument(
        name=str(raw.get("name", "")),
        algebra=algebra,
        operators=operators,
        multipliers=multipliers,
        metadata=dict(sorted(metadata.items())),
    )


def _table(group, rows, location):
    if not isinstance(rows, list):
        raise DocumentError("shape", "table must be a list of rows", location)
    parsed = tuple(
        tuple(parse_rational(x, f"{location}[{i}][{j}]") for j, x in enumerate(row))
        for i, row in enumerate(rows)
    )
    try:
        return MultiplierTable(group, parsed)
    except InvalidRepresentationError as exc:
        raise DocumentError("zero-entry", str(exc), location) from exc
    except ShapeError as exc:
        raise DocumentError("shape", str(exc), location) from exc


def serialize_document(doc):
    alg = doc.algebra
    raw = {
        "name": doc.name,
        "group": {"moduli": list(alg.group.moduli)},
        "basis": {"degrees": [list(d) for d in alg.basis.degrees]},
        "alpha": [[format_rational(x) for x in row] for row in alg.alpha.matrix],
        "operators": {
            name: [[format_rational(x) for x in row] for row in m.matrix]
            for name, m in sorted(doc.operators.items())
        },
        "multipliers": {
            name: [[format_rational(x) for x in row] for row in t.values]
            for name, t in sorted(doc.multipliers.items())
        },
        "metadata": dict(sorted(doc.metadata.items())),
    }
    if isinstance(alg.epsilon, SignBicharacter):
        raw["epsilon"] = {"matrix": [list(row) for row in alg.epsilon.matrix]}
    else:
        raw["epsilon"] = {"table": [[format_rational(x) for x in row] for row in alg.epsilon.values]}
    if alg.mu is not None:
        raw["mu"] = [[i, j, k, format_rational(c)] for (i, j, k, c) in alg.mu.entries]
    if alg.bracket is not None:
        raw["bracket"] = [[i, j, k, format_rational(c)] for (i, j, k, c) in alg.bracket.entries]
    return json.dumps(raw, sort_keys=True, indent=2, ensure_ascii=True) + "\n"
