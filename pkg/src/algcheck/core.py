"""Graded linear algebra over exact rationals.

Bases carry one group degree per index, linear maps are required to be
even (degree preserving), and bilinear products are sparse structure
constant tables whose nonzero constants respect the grading.  The
checkers sweep every basis pair/triple; an empty report certifies the
identity on the whole algebra by multilinearity.
"""

import itertools
from dataclasses import dataclass, field
from fractions import Fraction

from .errors import (
    EvennessError,
    HypothesisError,
    MissingComponentError,
    ShapeError,
    SingularMapError,
)
from .report import AxiomReport

ZERO = Fraction(0)
ONE = Fraction(1)


# ---------------------------------------------------------------------------
# exact vectors

def zero_vec(dim):
    return (ZERO,) * dim


def basis_vec(dim, i):
    return tuple(ONE if j == i else ZERO for j in range(dim))


def vec_add(*vs):
    return tuple(sum(col) for col in zip(*vs))


def vec_sub(x, y):
    return tuple(a - b for a, b in zip(x, y))


def vec_scale(c, x):
    return tuple(c * a for a in x)


def vec_is_zero(x):
    return all(a == 0 for a in x)


# ---------------------------------------------------------------------------
# bases, maps, products

@dataclass(frozen=True)
class GradedBasis:
    group: object
    degrees: tuple

    def __post_init__(self):
        degs = tuple(tuple(d) for d in self.degrees)
        if not degs:
            raise ShapeError("basis must have dimension >= 1")
        for d in degs:
            if not self.group.is_canonical(d):
                raise ShapeError(f"degree {d} is not canonical for the group")
        object.__setattr__(self, "degrees", degs)

    @property
    def dim(self):
        return len(self.degrees)


@dataclass(frozen=True)
class EvenLinearMap:
    """Square rational matrix; column j is the image of basis vector j.
    Nonzero entries may only link equal degrees."""

    basis: GradedBasis
    matrix: tuple

    def __post_init__(self):
        n = self.basis.dim
        rows = tuple(tuple(Fraction(x) for x in row) for row in self.matrix)
        if len(rows) != n or any(len(row) != n for row in rows):
            raise ShapeError(f"matrix must be {n}x{n}")
        degs = self.basis.degrees
        for i in range(n):
            for j in range(n):
                if rows[i][j] != 0 and degs[i] != degs[j]:
                    raise EvennessError(
                        f"entry ({i},{j}) links degree {degs[j]} to {degs[i]}"
                    )
        object.__setattr__(self, "matrix", rows)

    @classmethod
    def identity(cls, basis):
        n = basis.dim
        return cls(basis, tuple(tuple(ONE if i == j else ZERO for j in range(n)) for i in range(n)))

    @classmethod
    def scalar(cls, basis, c):
        c = Fraction(c)
        n = basis.dim
        return cls(basis, tuple(tuple(c if i == j else ZERO for j in range(n)) for i in range(n)))

    @classmethod
    def diagonal(cls, basis, entries):
        n = basis.dim
        entries = [Fraction(e) for e in entries]
        if len(entries) != n:
            raise ShapeError("diagonal length mismatch")
        return cls(basis, tuple(tuple(entries[i] if i == j else ZERO for j in range(n)) for i in range(n)))

    def apply(self, vec):
        n = self.basis.dim
        if len(vec) != n:
            raise ShapeError("vector length mismatch")
        return tuple(sum(self.matrix[i][j] * vec[j] for j in range(n)) for i in range(n))

    def column(self, j):
        return tuple(row[j] for row in self.matrix)

    def compose(self, other):
        """self after other."""
        n = self.basis.dim
        return EvenLinearMap(
            self.basis,
            tuple(
                tuple(sum(self.matrix[i][k] * other.matrix[k][j] for k in range(n)) for j in range(n))
                for i in range(n)
            ),
        )

    def power(self, k):
        if k < 0:
            raise ShapeError("negative map power")
        out = EvenLinearMap.identity(self.basis)
        for _ in range(k):
            out = out.compose(self)
        return out

    @property
    def is_identity(self):
        return self == EvenLinearMap.identity(self.basis)

    def inverse(self):
        """Exact Gauss-Jordan inverse; raises SingularMapError if singular."""
        n = self.basis.dim
        a = [list(row) for row in self.matrix]
        inv = [[ONE if i == j else ZERO for j in range(n)] for i in range(n)]
        for col in range(n):
            pivot = next((r for r in range(col, n) if a[r][col] != 0), None)
            if pivot is None:
                raise SingularMapError("map is not invertible")
            a[col], a[pivot] = a[pivot], a[col]
            inv[col], inv[pivot] = inv[pivot], inv[col]
            p = a[col][col]
            a[col] = [x / p for x in a[col]]
            inv[col] = [x / p for x in inv[col]]
            for r in range(n):
                if r != col and a[r][col] != 0:
                    f = a[r][col]
                    a[r] = [x - f * y for x, y in zip(a[r], a[col])]
                    inv[r] = [x - f * y for x, y in zip(inv[r], inv[col])]
        return EvenLinearMap(self.basis, tuple(tuple(row) for row in inv))


@dataclass(frozen=True)
class BilinearProduct:
    """Sparse structure constants: entries are (i, j, k, c) with
    e_i e_j = sum_k c e_k, sorted lexicographically, zero c dropped."""

    basis: GradedBasis
    entries: tuple
    _table: dict = field(default=None, compare=False, repr=False)

    def __post_init__(self):
        n = self.basis.dim
        merged = {}
        for (i, j, k, c) in self.entries:
            c = Fraction(c)
            if not (0 <= i < n and 0 <= j < n and 0 <= k < n):
                raise ShapeError(f"structure constant index out of range: {(i, j, k)}")
            merged[(i, j, k)] = merged.get((i, j, k), ZERO) + c
        degs = self.basis.degrees
        g = self.basis.group
        clean = []
        for (i, j, k), c in sorted(merged.items()):
            if c == 0:
                continue
            if degs[k] != g.add(degs[i], degs[j]):
                raise EvennessError(
                    f"constant ({i},{j})->{k} violates the grading: "
                    f"{degs[i]} + {degs[j]} != {degs[k]}"
                )
            clean.append((i, j, k, c))
        object.__setattr__(self, "entries", tuple(clean))
        table = {}
        for (i, j, k, c) in clean:
            table.setdefault((i, j), []).append((k, c))
        object.__setattr__(self, "_table", table)

    @classmethod
    def zero(cls, basis):
        return cls(basis, ())

    def of_pair(self, i, j):
        n = self.basis.dim
        out = [ZERO] * n
        for k, c in self._table.get((i, j), ()):
            out[k] += c
        return tuple(out)

    def apply(self, x, y):
        """Bilinear extension: (sum x_i e_i)(sum y_j e_j)."""
        n = self.basis.dim
        if len(x) != n or len(y) != n:
            raise ShapeError("vector length mismatch in product")
        out = [ZERO] * n
        for (i, j), terms in self._table.items():
            f = x[i] * y[j]
            if f == 0:
                continue
            for k, c in terms:
                out[k] += f * c
        return tuple(out)


def apply_product(p, x, y):
    return p.apply(x, y)


@dataclass(frozen=True)
class GradedAlgebra:
    """A graded basis with up to two structure-constant products, an even
    twisting map alpha and a commutation factor epsilon (sign bicharacter
    or rational table)."""

    group: object
    epsilon: object
    basis: GradedBasis
    mu: object
    bracket: object
    alpha: EvenLinearMap

    def __post_init__(self):
        if self.mu is None and self.bracket is None:
            raise MissingComponentError("algebra must carry at least one product")
        if self.basis.group != self.group:
            raise ShapeError("basis group differs from algebra group")
        if self.epsilon.group != self.group:
            raise ShapeError("commutation factor group differs from algebra group")
        for p in (self.mu, self.bracket):
            if p is not None and p.basis != self.basis:
                raise ShapeError("product basis differs from algebra basis")
        if self.alpha.basis != self.basis:
            raise ShapeError("alpha basis differs from algebra basis")

    @property
    def dim(self):
        return self.basis.dim

    def eps(self, i, j):
        """Commutation factor between the degrees of basis indices i, j."""
        return self.epsilon.value(self.basis.degrees[i], self.basis.degrees[j])

    def replace(self, **kw):
        data = dict(
            group=self.group, epsilon=self.epsilon, basis=self.basis,
            mu=self.mu, bracket=self.bracket, alpha=self.alpha,
        )
        data.update(kw)
        return GradedAlgebra(**data)


def components(basis, vec):
    """Split a vector into its homogeneous components, keyed by degree."""
    parts = {}
    for i, c in enumerate(vec):
        if c != 0:
            d = basis.degrees[i]
            part = parts.setdefault(d, [ZERO] * basis.dim)
            part[i] = c
    return {d: tuple(v) for d, v in parts.items()}


# ---------------------------------------------------------------------------
# per-basis-tuple residuals (structure-constant composition path)

def _require(A, *names):
    for name in names:
        if getattr(A, name) is None:
            raise MissingComponentError(f"algebra has no {name}")


def _assoc_residual(A, i, j, k):
    ai, ak = A.alpha.column(i), A.alpha.column(k)
    lhs = A.mu.apply(ai, A.mu.of_pair(j, k))
    rhs = A.mu.apply(A.mu.of_pair(i, j), ak)
    return lhs, rhs


def _jacobi_residual(A, i, j, k):
    br = A.bracket
    ai, aj, ak = A.alpha.column(i), A.alpha.column(j), A.alpha.column(k)
    t1 = vec_scale(A.eps(k, i), br.apply(ai, br.of_pair(j, k)))
    t2 = vec_scale(A.eps(i, j), br.apply(aj, br.of_pair(k, i)))
    t3 = vec_scale(A.eps(j, k), br.apply(ak, br.of_pair(i, j)))
    return vec_add(t1, t2, t3), zero_vec(A.dim)


def _leibniz_residual(A, i, j, k):
    ai, aj, ak = A.alpha.column(i), A.alpha.column(j), A.alpha.column(k)
    lhs = A.bracket.apply(ai, A.mu.of_pair(j, k))
    rhs = vec_add(
        A.mu.apply(A.bracket.of_pair(i, j), ak),
        vec_scale(A.eps(i, j), A.mu.apply(aj, A.bracket.of_pair(i, k))),
    )
    return lhs, rhs


# ---------------------------------------------------------------------------
# checkers

def check_hom_associative(A):
    _require(A, "mu", "alpha")
    rep = AxiomReport("hom-associativity")
    n = A.dim
    for i, j, k in itertools.product(range(n), repeat=3):
        lhs, rhs = _assoc_residual(A, i, j, k)
        if lhs != rhs:
            rep.record((i, j, k), lhs, rhs)
    return rep.finish()


def check_epsilon_commutative(A):
    _require(A, "mu")
    rep = AxiomReport("epsilon-commutativity")
    n = A.dim
    for i, j in itertools.product(range(n), repeat=2):
        lhs = A.mu.of_pair(i, j)
        rhs = vec_scale(A.eps(i, j), A.mu.of_pair(j, i))
        if lhs != rhs:
            rep.record((i, j), lhs, rhs)
    return rep.finish()


def check_hom_lie(A):
    _require(A, "bracket", "alpha")
    n = A.dim
    skew = AxiomReport("epsilon-skew-symmetry")
    for i, j in itertools.product(range(n), repeat=2):
        lhs = A.bracket.of_pair(i, j)
        rhs = vec_scale(-A.eps(i, j), A.bracket.of_pair(j, i))
        if lhs != rhs:
            skew.record((i, j), lhs, rhs)
    jac = AxiomReport("hom-jacobi")
    for i, j, k in itertools.product(range(n), repeat=3):
        lhs, rhs = _jacobi_residual(A, i, j, k)
        if lhs != rhs:
            jac.record((i, j, k), lhs, rhs)
    return [skew.finish(), jac.finish()]


def check_hom_leibniz(A):
    _require(A, "mu", "bracket", "alpha")
    rep = AxiomReport("hom-leibniz")
    n = A.dim
    for i, j, k in itertools.product(range(n), repeat=3):
        lhs, rhs = _leibniz_residual(A, i, j, k)
        if lhs != rhs:
            rep.record((i, j, k), lhs, rhs)
    return rep.finish()


def check_hom_poisson(A, commutative=False):
    _require(A, "mu", "bracket", "alpha")
    reports = [check_hom_associative(A)]
    reports.extend(check_hom_lie(A))
    reports.append(check_hom_leibniz(A))
    if commutative:
        reports.append(check_epsilon_commutative(A))
    return reports


def commutator_bracket(A):
    """Extend A with the commutator bracket mu - eps * mu^op.  Rejects
    non-Hom-associative inputs with the offending report."""
    _require(A, "mu", "alpha")
    gate = check_hom_associative(A)
    if not gate.ok:
        raise HypothesisError("commutator bracket requires a Hom-associative product", [gate])
    n = A.dim
    entries = []
    for i, j in itertools.product(range(n), repeat=2):
        vec = vec_sub(A.mu.of_pair(i, j), vec_scale(A.eps(i, j), A.mu.of_pair(j, i)))
        entries.extend((i, j, k, c) for k, c in enumerate(vec) if c != 0)
    return A.replace(bracket=BilinearProduct(A.basis, tuple(entries)))


def check_morphism(f, src, dst):
    """f : src -> dst must intertwine alpha and preserve every product
    src carries (which dst must then carry as well)."""
    if f.basis.dim != src.basis.dim or src.basis.dim != dst.basis.dim:
        raise ShapeError("morphism check needs equal dimensions")
    if src.group != dst.group:
        raise ShapeError("morphism check needs a common grading group")
    n = src.basis.dim
    reports = []
    rep = AxiomReport("morphism:alpha")
    for j in range(n):
        lhs = f.apply(src.alpha.column(j))
        rhs = dst.alpha.apply(f.column(j))
        if lhs != rhs:
            rep.record((j,), lhs, rhs)
    reports.append(rep.finish())
    for name in ("mu", "bracket"):
        p_src = getattr(src, name)
        if p_src is None:
            continue
        p_dst = getattr(dst, name)
        if p_dst is None:
            raise MissingComponentError(f"target algebra has no {name}")
        rep = AxiomReport(f"morphism:{name}")
        for i, j in itertools.product(range(n), repeat=2):
            lhs = f.apply(p_src.of_pair(i, j))
            rhs = p_dst.apply(f.column(i), f.column(j))
            if lhs != rhs:
                rep.record((i, j), lhs, rhs)
        reports.append(rep.finish())
    return reports


# ---------------------------------------------------------------------------
# dual evaluation paths for arbitrary vectors (internal oracle)
#
# Path (a): trilinear combination of the per-basis-tuple residuals above.
# Path (b): direct expansion through apply_product on (components of) the
# vectors.  Both must agree everywhere; the test suite compares them on
# random rational vectors.

_RESIDUALS = {
    "associativity": (_assoc_residual, 3),
    "jacobi": (_jacobi_residual, 3),
    "leibniz": (_leibniz_residual, 3),
}


def residual_from_basis(A, axiom, vectors):
    fn, arity = _RESIDUALS[axiom]
    if len(vectors) != arity:
        raise ShapeError(f"{axiom} takes {arity} vectors")
    n = A.dim
    out = [ZERO] * n
    for idx in itertools.product(range(n), repeat=arity):
        coeff = ONE
        for v, i in zip(vectors, idx):
            coeff *= v[i]
        if coeff == 0:
            continue
        lhs, rhs = fn(A, *idx)
        for k in range(n):
            out[k] += coeff * (lhs[k] - rhs[k])
    return tuple(out)


def residual_direct(A, axiom, vectors):
    n = A.dim
    if axiom == "associativity":
        x, y, z = vectors
        ax, az = A.alpha.apply(x), A.alpha.apply(z)
        return vec_sub(A.mu.apply(ax, A.mu.apply(y, z)), A.mu.apply(A.mu.apply(x, y), az))
    if axiom == "jacobi":
        x, y, z = vectors
        out = [ZERO] * n
        for dx, xc in components(A.basis, x).items():
            for dy, yc in components(A.basis, y).items():
                for dz, zc in components(A.basis, z).items():
                    t = vec_add(
                        vec_scale(A.epsilon.value(dz, dx),
                                  A.bracket.apply(A.alpha.apply(xc), A.bracket.apply(yc, zc))),
                        vec_scale(A.epsilon.value(dx, dy),
                                  A.bracket.apply(A.alpha.apply(yc), A.bracket.apply(zc, xc))),
                        vec_scale(A.epsilon.value(dy, dz),
                                  A.bracket.apply(A.alpha.apply(zc), A.bracket.apply(xc, yc))),
                    )
                    out = [a + b for a, b in zip(out, t)]
        return tuple(out)
    if axiom == "leibniz":
        x, y, z = vectors
        out = list(A.bracket.apply(A.alpha.apply(x), A.mu.apply(y, z)))
        az = A.alpha.apply(z)
        for dx, xc in components(A.basis, x).items():
            for dy, yc in components(A.basis, y).items():
                t = vec_add(
                    A.mu.apply(A.bracket.apply(xc, yc), az),
                    vec_scale(A.epsilon.value(dx, dy),
                              A.mu.apply(A.alpha.apply(yc), A.bracket.apply(xc, z))),
                )
                out = [a - b for a, b in zip(out, t)]
        return tuple(out)
    raise ShapeError(f"unknown axiom {axiom!r}")
