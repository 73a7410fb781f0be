"""Command-line surface: validate, check-operator, twist, tensor, report.

Exit codes: 0 all checks pass, 1 an axiom or hypothesis gate failed,
2 parse/shape/usage error.
"""

import argparse
import json
import sys
from fractions import Fraction

from . import constructions
from .core import (
    EvenLinearMap,
    check_epsilon_commutative,
    check_hom_associative,
    check_hom_leibniz,
    check_hom_lie,
    check_morphism,
)
from .document import AlgebraDocument, parse_document, parse_rational, serialize_document
from .errors import AlgcheckError, DocumentError, HypothesisError
from .grading import (
    SignBicharacter,
    validate_bicharacter,
    validate_bicharacter_table,
    validate_multiplier,
)
from .operators import KINDS, OperatorClaim, check_operator
from .report import all_ok, render_reports

EXIT_OK = 0
EXIT_AXIOM = 1
EXIT_ERROR = 2


def _load(path):
    try:
        with open(path, "r", encoding="utf-8") as fh:
            text = fh.read()
    except OSError as exc:
        raise DocumentError("io", str(exc), path) from exc
    return parse_document(text)


def _emit(reports, as_json, full=False, extra=None):
    code = EXIT_OK if all_ok(reports) else EXIT_AXIOM
    if as_json:
        payload = {"reports": [r.to_json() for r in reports], "exit": code}
        if extra:
            payload.update(extra)
        print(json.dumps(payload, sort_keys=True, indent=2))
    else:
        for line in render_reports(reports, full=full):
            print(line)
    return code


def _validation_reports(doc, commutative=False):
    alg = doc.algebra
    reports = []
    if isinstance(alg.epsilon, SignBicharacter):
        reports.extend(validate_bicharacter(alg.epsilon))
    else:
        reports.extend(validate_bicharacter_table(alg.epsilon))
    for name, table in sorted(doc.multipliers.items()):
        for r in validate_multiplier(table):
            r.axiom = f"{name}:{r.axiom}"
            reports.append(r)
    if alg.mu is not None:
        reports.append(check_hom_associative(alg))
        if commutative:
            reports.append(check_epsilon_commutative(alg))
    if alg.bracket is not None:
        reports.extend(check_hom_lie(alg))
    if alg.mu is not None and alg.bracket is not None:
        reports.append(check_hom_leibniz(alg))
    return reports


def cmd_validate(args, full=False):
    doc = _load(args.path)
    return _emit(_validation_reports(doc, commutative=args.commutative), args.json, full=full)


def cmd_report(args):
    doc = _load(args.path)
    return _emit(_validation_reports(doc, commutative=args.commutative), args.json, full=True)


def cmd_check_operator(args):
    doc = _load(args.path)
    if args.name not in doc.operators:
        raise DocumentError("unknown-operator", f"no operator named {args.name!r}", args.path)
    weight = parse_rational(args.weight, "--weight") if args.weight is not None else None
    claim = OperatorClaim(doc.operators[args.name], args.kind, power=args.power, weight=weight)
    reports = check_operator(doc.algebra, claim, products=args.product)
    return _emit(reports, args.json)


def _summary(reports):
    return ";".join(
        f"{r.axiom}={'PASS' if r.ok else 'FAIL(%d)' % len(r.violations)}" for r in reports
    )


def _named_operator(doc, name):
    if name is None:
        raise DocumentError("usage", "this construction needs --operator")
    if name == "Id":
        return EvenLinearMap.identity(doc.algebra.basis)
    if name not in doc.operators:
        raise DocumentError("unknown-operator", f"no operator named {name!r}")
    return doc.operators[name]


def _named_multiplier(doc, name):
    if name is None:
        raise DocumentError("usage", "this construction needs --multiplier")
    if name not in doc.multipliers:
        raise DocumentError("unknown-multiplier", f"no multiplier named {name!r}")
    return doc.multipliers[name]


def _run_construction(doc, args):
    alg = doc.algebra
    name = args.construction
    if name == "xi":
        if args.xi is None:
            raise DocumentError("usage", "xi construction needs --xi c0,c1,...")
        xi = tuple(parse_rational(c.strip(), "--xi") for c in args.xi.split(","))
        return constructions.xi_twist(alg, xi)
    if name == "multiplier-sym":
        return constructions.multiplier_twist_symmetric(alg, _named_multiplier(doc, args.multiplier))
    if name == "multiplier-delta":
        endos = []
        for cand in [alg.alpha] + [doc.operators[k] for k in sorted(doc.operators)]:
            try:
                if all_ok(check_morphism(cand, alg, alg)):
                    endos.append(cand)
            except AlgcheckError:
                continue
        return constructions.multiplier_twist_delta(
            alg, _named_multiplier(doc, args.multiplier), endomorphisms=endos
        )
    if name == "transport":
        return constructions.transport_along_bijection(alg, _named_operator(doc, args.operator))
    if name == "centroid":
        return constructions.centroid_twist(alg, _named_operator(doc, args.operator))
    if name == "averaging-pair":
        return constructions.averaging_twist_pairwise(alg, _named_operator(doc, args.operator))
    if name == "averaging-untwisted":
        return constructions.averaging_twist_untwisted(alg, _named_operator(doc, args.operator))
    if name == "averaging-power":
        return constructions.averaging_twist_power(
            alg, _named_operator(doc, args.operator), args.power
        )
    if name == "nijenhuis":
        return constructions.nijenhuis_twist(alg, _named_operator(doc, args.operator))
    if name == "rota-baxter":
        if args.weight is None:
            raise DocumentError("usage", "rota-baxter construction needs --weight")
        return constructions.rota_baxter_twist(
            alg, _named_operator(doc, args.operator), parse_rational(args.weight, "--weight")
        )
    if name == "tensor":
        if args.second is None:
            raise DocumentError("usage", "tensor construction needs --second FILE")
        other = _load(args.second)
        return constructions.tensor_with_commutative(alg, other.algebra)
    raise DocumentError("unknown-construction", f"no construction named {name!r}")


def _write_result(doc, args, result):
    metadata = dict(doc.metadata)
    metadata["construction"] = args.construction
    metadata["certification"] = _summary(result.certification)
    if result.morphism:
        metadata["morphism"] = _summary(result.morphism)
    if result.findings:
        metadata["findings"] = _summary(result.findings)
    out_doc = AlgebraDocument(
        name=f"{doc.name}#{args.construction}" if doc.name else args.construction,
        algebra=result.algebra,
        metadata=metadata,
    )
    text = serialize_document(out_doc)
    if args.output:
        with open(args.output, "w", encoding="utf-8") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


def cmd_twist(args):
    doc = _load(args.path)
    try:
        result = _run_construction(doc, args)
    except HypothesisError as exc:
        print(f"GATE FAILED: {exc}")
        for line in render_reports(exc.reports):
            print(line)
        return EXIT_AXIOM
    _write_result(doc, args, result)
    for line in render_reports(result.reports):
        print(line)
    return EXIT_OK if result.ok else EXIT_AXIOM


def cmd_tensor(args):
    args.construction = "tensor"
    args.path, args.second = args.first, args.second
    return cmd_twist(args)


def build_parser():
    parser = argparse.ArgumentParser(
        prog="algcheck",
        description="Exact verification and twisting of group-graded Hom-algebras.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("validate", help="run all applicable axiom checks on a file")
    p.add_argument("path")
    p.add_argument("--commutative", action="store_true",
                   help="also require epsilon-commutativity of the product")
    p.add_argument("--json", action="store_true")
    p.set_defaults(fn=cmd_validate)

    p = sub.add_parser("report", help="validate and dump every residual")
    p.add_argument("path")
    p.add_argument("--commutative", action="store_true")
    p.add_argument("--json", action="store_true")
    p.set_defaults(fn=cmd_report)

    p = sub.add_parser("check-operator", help="classify a named operator")
    p.add_argument("path")
    p.add_argument("--name", required=True)
    p.add_argument("--kind", required=True, choices=KINDS)
    p.add_argument("--power", type=int, default=0)
    p.add_argument("--weight")
    p.add_argument("--product", default="all", choices=("all", "mu", "bracket"))
    p.add_argument("--json", action="store_true")
    p.set_defaults(fn=cmd_check_operator)

    p = sub.add_parser("twist", help="apply a construction theorem and re-certify")
    p.add_argument("path")
    p.add_argument("--construction", required=True)
    p.add_argument("--operator")
    p.add_argument("--multiplier")
    p.add_argument("--weight")
    p.add_argument("--power", type=int, default=0)
    p.add_argument("--xi")
    p.add_argument("--second", help="second input file (tensor construction)")
    p.add_argument("-o", "--output")
    p.add_argument("--json", action="store_true")
    p.set_defaults(fn=cmd_twist)

    p = sub.add_parser("tensor", help="tensor a commutative algebra file with a Poisson file")
    p.add_argument("first")
    p.add_argument("second")
    p.add_argument("-o", "--output")
    p.add_argument("--json", action="store_true")
    p.set_defaults(fn=cmd_tensor)

    return parser


def main(argv=None):
    parser = build_parser()
    args = parser.parse_args(argv)
    if getattr(args, "command", None) == "tensor":
        args.operator = args.multiplier = args.weight = args.xi = None
        args.power = 0
    try:
        return args.fn(args)
    except DocumentError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_ERROR
    except HypothesisError as exc:
        print(f"GATE FAILED: {exc}")
        for line in render_reports(exc.reports):
            print(line)
        return EXIT_AXIOM
    except AlgcheckError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_ERROR


def entry():
    sys.exit(main())


if __name__ == "__main__":
    entry()
