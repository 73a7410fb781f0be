"""Operator classification on graded algebras.

Decides whether an even linear map is a centroid element, averaging
operator, Rota-Baxter operator or Nijenhuis operator, for each product
the algebra carries.  Every predicate is an exhaustive basis-pair sweep
returning the full list of violations.
"""

import itertools
from dataclasses import dataclass
from fractions import Fraction

from .core import (
    EvenLinearMap,
    commutator_bracket,
    vec_add,
    vec_scale,
)
from .errors import (
    HypothesisError,
    InvalidRepresentationError,
    MissingComponentError,
    SearchSpaceError,
    ShapeError,
)
from .report import AxiomReport, all_ok

KINDS = ("centroid", "averaging", "rota-baxter", "nijenhuis")

MAX_POWER = 4
MAX_SEARCH_DIM = 6
MAX_SEARCH_SIZE = 200_000


@dataclass(frozen=True)
class OperatorClaim:
    map: EvenLinearMap
    kind: str
    power: int = 0
    weight: object = None

    def __post_init__(self):
        if self.kind not in KINDS:
            raise InvalidRepresentationError(f"unknown operator kind {self.kind!r}")
        if self.kind == "rota-baxter":
            if self.weight is None:
                raise InvalidRepresentationError("rota-baxter claims need a weight")
            object.__setattr__(self, "weight", Fraction(self.weight))
        if self.kind in ("centroid", "averaging"):
            if not (0 <= self.power <= MAX_POWER):
                raise InvalidRepresentationError(
                    f"power must lie in [0, {MAX_POWER}], got {self.power}"
                )


def _alpha_commutation(A, b):
    rep = AxiomReport("operator:alpha-commutation")
    for j in range(A.dim):
        lhs = b.apply(A.alpha.column(j))
        rhs = A.alpha.apply(b.column(j))
        if lhs != rhs:
            rep.record((j,), lhs, rhs)
    return rep.finish()


def check_operator(A, claim, products="all"):
    """Check the claimed operator identities on all basis pairs, for each
    product of A selected by `products` ("all", "mu" or "bracket")."""
    b = claim.map
    if b.basis != A.basis:
        raise ShapeError("operator basis differs from algebra basis")
    if products == "all":
        names = [n for n in ("mu", "bracket") if getattr(A, n) is not None]
    elif products in ("mu", "bracket"):
        if getattr(A, products) is None:
            raise MissingComponentError(f"algebra has no {products}")
        names = [products]
    else:
        raise ShapeError(f"unknown product selector {products!r}")
    if not names:
        raise MissingComponentError("algebra carries no product to check against")

    reports = [_alpha_commutation(A, b)]
    ak = A.alpha.power(claim.power) if claim.kind in ("centroid", "averaging") else None
    n = A.dim
    for name in names:
        p = getattr(A, name)
        for i, j in itertools.product(range(n), repeat=2):
            bi, bj = b.column(i), b.column(j)
            if claim.kind == "centroid":
                lhs = b.apply(p.of_pair(i, j))
                rhs = p.apply(bi, ak.column(j))
                reports.append(_one(f"centroid:{name}:left", (i, j), lhs, rhs, reports))
                if name == "mu":
                    rhs2 = p.apply(ak.column(i), bj)
                    reports.append(_one(f"centroid:{name}:right", (i, j), lhs, rhs2, reports))
            elif claim.kind == "averaging":
                mid = p.apply(bi, bj)
                lhs = b.apply(p.apply(bi, ak.column(j)))
                reports.append(_one(f"averaging:{name}:left", (i, j), lhs, mid, reports))
                if name == "mu":
                    rhs = b.apply(p.apply(ak.column(i), bj))
                    reports.append(_one(f"averaging:{name}:right", (i, j), mid, rhs, reports))
            elif claim.kind == "rota-baxter":
                lhs = p.apply(bi, bj)
                inner = vec_add(
                    p.apply(bi, _unit(n, j)),
                    p.apply(_unit(n, i), bj),
                    vec_scale(claim.weight, p.of_pair(i, j)),
                )
                reports.append(_one(f"rota-baxter:{name}", (i, j), lhs, b.apply(inner), reports))
            else:  # nijenhuis
                lhs = p.apply(bi, bj)
                inner = vec_add(
                    p.apply(bi, _unit(n, j)),
                    p.apply(_unit(n, i), bj),
                    vec_scale(Fraction(-1), b.apply(p.of_pair(i, j))),
                )
                reports.append(_one(f"nijenhuis:{name}", (i, j), lhs, b.apply(inner), reports))
    # collapse the per-pair placeholder scheme into one report per label
    merged = {}
    order = []
    for r in reports:
        if r.axiom not in merged:
            merged[r.axiom] = AxiomReport(r.axiom)
            order.append(r.axiom)
        merged[r.axiom].violations.extend(r.violations)
    return [merged[label].finish() for label in order]


def _unit(n, i):
    return tuple(Fraction(1) if j == i else Fraction(0) for j in range(n))


def _one(label, indices, lhs, rhs, _reports):
    rep = AxiomReport(label)
    if lhs != rhs:
        rep.record(indices, lhs, rhs)
    return rep


def check_nijenhuis_transfer(A, N):
    """Gate: N is Nijenhuis for mu.  Then build the commutator bracket and
    check that N is Nijenhuis for the bracket as well."""
    gate = check_operator(A, OperatorClaim(N, "nijenhuis"), products="mu")
    if not all_ok(gate):
        raise HypothesisError("map is not a Nijenhuis operator for the product", gate)
    P = commutator_bracket(A)
    return check_operator(P, OperatorClaim(N, "nijenhuis"), products="bracket")


def search_diagonal_operators(A, kind, candidate_values, power=0, weight=None):
    """Enumerate diagonal even maps with entries from the candidate set and
    return those passing check_operator, in deterministic order."""
    if A.dim > MAX_SEARCH_DIM:
        raise SearchSpaceError(f"search limited to dimension {MAX_SEARCH_DIM}, got {A.dim}")
    candidates = sorted({Fraction(c) for c in candidate_values})
    size = len(candidates) ** A.dim
    if size > MAX_SEARCH_SIZE:
        raise SearchSpaceError(
            f"candidate space has {size} diagonal maps, bound is {MAX_SEARCH_SIZE}"
        )
    found = []
    for diag in itertools.product(candidates, repeat=A.dim):
        m = EvenLinearMap.diagonal(A.basis, diag)
        claim = OperatorClaim(m, kind, power=power, weight=weight)
        if all_ok(check_operator(A, claim)):
            found.append(m)
    return found
