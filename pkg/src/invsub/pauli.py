"""Translation-invariant Pauli subalgebras at the symbol level.

A subalgebra of the infinite qudit lattice generated by translates of
finitely many Pauli operators is encoded by a matrix V over the Laurent
ring: one column per generator, 2q rows per site (rows 1..q carry X-type
exponents, rows q+1..2q carry Z-type exponents).  Commutation data lives
in the antihermitian matrix Xi = bar(V)^T lambda V, where lambda is the
standard symplectic form.

The central decision procedure: the subalgebra is invertible (it and its
commutant jointly generate every local operator, with trivial
intersection) iff the smallest nonzero determinantal ideal of Xi is the
unit ideal.  When Xi is itself invertible over the ring the commutant
projector exists in closed form and everything downstream (local
decompositions, the QCA lift) is available.  When the criterion passes
but Xi is singular the verdict is still "invertible", with the projector
honestly reported as unavailable.
"""

from __future__ import annotations

from dataclasses import dataclass

from .laurent import (
    LaurentMatrix,
    LaurentPoly,
    NotAUnitError,
    determinant,
    determinantal_profile,
    DeterminantalProfile,
    divides,
    matrix_inverse,
)


class SpecShapeError(ValueError):
    """Generator matrix dimensions are inconsistent with (q, dims)."""


class NotInvertibleError(ValueError):
    """An operation needing an invertible subalgebra was given one that
    fails the determinantal criterion."""


class ProjectorUnavailableError(ValueError):
    """The invertibility criterion passes but Xi is singular, so the
    closed-form projector does not exist; reducing this case needs a
    congruence normal form that is out of scope here."""


@dataclass(frozen=True)
class SubalgebraSpec:
    """Finite presentation of a translation-invariant Pauli subalgebra.

    p: qudit dimension (prime); q: qudits per site; dims: number of
    lattice directions; generators: 2q x n matrix over F_p Laurent
    polynomials in dims variables.
    """

    p: int
    q: int
    dims: int
    generators: LaurentMatrix

    def __post_init__(self):
        g = self.generators
        if g.p != self.p or g.nvars != self.dims:
            raise SpecShapeError("generator matrix ring does not match spec")
        if g.rows != 2 * self.q:
            raise SpecShapeError(
                f"generator matrix has {g.rows} rows, expected {2 * self.q}"
            )
        if self.q < 1 or self.dims < 1:
            raise SpecShapeError("need at least one qudit per site and one axis")

    @property
    def n_generators(self) -> int:
        return self.generators.cols

    @property
    def spread(self) -> int:
        return self.generators.spread()

    def x_block(self) -> LaurentMatrix:
        return self.generators.submatrix(range(self.q), range(self.n_generators))

    def z_block(self) -> LaurentMatrix:
        return self.generators.submatrix(
            range(self.q, 2 * self.q), range(self.n_generators)
        )

    def is_remark_form(self) -> bool:
        """True when V = (id; M): one generator per qudit with the X-part
        the identity, the shape produced by from_antihermitian."""
        if self.n_generators != self.q:
            return False
        return self.x_block() == LaurentMatrix.identity(self.p, self.dims, self.q)


def symplectic_form(p: int, q: int, nvars: int) -> LaurentMatrix:
    """The block form lambda_q = ((0, id), (-id, 0)) over the Laurent ring."""
    ident = LaurentMatrix.identity(p, nvars, q)
    zero = LaurentMatrix.zeros(p, nvars, q, q)
    return zero.hstack(ident).vstack(ident.scale(-1).hstack(zero))


def commutation_matrix(spec: SubalgebraSpec) -> LaurentMatrix:
    """Xi = bar(V)^T lambda V; entry (i, j) is the full commutation
    pairing polynomial between generator i and all translates of
    generator j."""
    lam = symplectic_form(spec.p, spec.q, spec.dims)
    return spec.generators.bar_transpose() @ lam @ spec.generators


def is_antihermitian(m: LaurentMatrix) -> bool:
    return m.bar_transpose() == m.scale(-1)


@dataclass(frozen=True)
class InvertibilityCertificate:
    invertible: bool
    profile: DeterminantalProfile
    xi: LaurentMatrix
    xi_invertible: bool

    @property
    def projector_available(self) -> bool:
        return self.invertible and self.xi_invertible


def check_invertible(spec: SubalgebraSpec) -> InvertibilityCertificate:
    """Decide invertibility by the smallest-nonzero-determinantal-ideal
    criterion.  The verdict is exact; projector availability additionally
    requires det Xi to be a unit."""
    xi = commutation_matrix(spec)
    profile = determinantal_profile(xi)
    xi_inv = xi.rows == xi.cols and (
        xi.rows == 0 or determinant(xi).is_monomial()
    )
    return InvertibilityCertificate(profile.is_unit, profile, xi, xi_inv)


def from_antihermitian(
    xi: LaurentMatrix, m: LaurentMatrix | None = None
) -> SubalgebraSpec:
    """Build the one-generator-per-qudit spec V = (id; M) realizing a
    prescribed commutation matrix Xi = M - bar(M)^T.

    For odd p the default M = (p+1)/2 * Xi works because Xi is
    antihermitian; for p = 2 no canonical half exists and M must be
    supplied (and is checked against Xi).
    """
    if xi.rows != xi.cols:
        raise SpecShapeError("commutation matrix must be square")
    if not is_antihermitian(xi):
        raise ValueError("matrix is not antihermitian under bar-transpose")
    p, nvars, n = xi.p, xi.nvars, xi.rows
    if m is None:
        if p == 2:
            raise ValueError(
                "over F_2 there is no canonical half of Xi; pass M explicitly"
            )
        m = xi.scale((p + 1) // 2)
    if m.shape != (n, n):
        raise SpecShapeError("M must match the shape of Xi")
    if m - m.bar_transpose() != xi:
        raise ValueError("M - bar(M)^T does not reproduce Xi")
    v = LaurentMatrix.identity(p, nvars, n).vstack(m)
    return SubalgebraSpec(p=p, q=n, dims=nvars, generators=v)


@dataclass(frozen=True)
class CommutantProjector:
    """The idempotent Pi = V Xi^-1 bar(V)^T lambda projecting the local
    symbol space onto the subalgebra's span along its commutant."""

    matrix: LaurentMatrix

    @property
    def spread(self) -> int:
        return self.matrix.spread()

    def complement(self) -> LaurentMatrix:
        p, nvars = self.matrix.p, self.matrix.nvars
        return LaurentMatrix.identity(p, nvars, self.matrix.rows) - self.matrix


def build_projector(spec: SubalgebraSpec) -> CommutantProjector:
    cert = check_invertible(spec)
    if not cert.invertible:
        raise NotInvertibleError("subalgebra fails the invertibility criterion")
    if not cert.xi_invertible:
        raise ProjectorUnavailableError(
            "criterion passes but Xi is singular; projector unavailable"
        )
    v = spec.generators
    lam = symplectic_form(spec.p, spec.q, spec.dims)
    if v.cols == 0:
        pi = LaurentMatrix.zeros(spec.p, spec.dims, 2 * spec.q, 2 * spec.q)
    else:
        xi_inv = matrix_inverse(cert.xi)
        pi = v @ xi_inv @ v.bar_transpose() @ lam
    proj = CommutantProjector(pi)
    _validate_projector(spec, proj, lam)
    return proj


def _validate_projector(spec, proj, lam) -> None:
    pi = proj.matrix
    v = spec.generators
    if (pi @ pi) != pi:
        raise AssertionError("projector is not idempotent")
    if (pi @ v) != v:
        raise AssertionError("projector does not fix the generators")
    resid = v.bar_transpose() @ lam @ proj.complement()
    if not resid.is_zero():
        raise AssertionError("complement fails to commute with the generators")


def commutant_generators(spec: SubalgebraSpec) -> SubalgebraSpec:
    """Generators of the commutant subalgebra.

    For V = (id; M) the pairing of (u; w) against the generators is
    w - bar(M)^T u, so the commutant is exactly the graph (id; bar(M)^T)
    with no invertibility assumption at all.  Otherwise the columns of
    id - Pi span the commutant (zero columns dropped), which does need
    the projector.
    """
    if spec.is_remark_form():
        m = spec.z_block()
        v = LaurentMatrix.identity(spec.p, spec.dims, spec.q).vstack(
            m.bar_transpose()
        )
        return SubalgebraSpec(spec.p, spec.q, spec.dims, v)
    proj = build_projector(spec)
    comp = proj.complement()
    cols = [j for j in range(comp.cols) if not all(e.is_zero() for e in comp.column(j))]
    gen = comp.submatrix(range(comp.rows), cols)
    return SubalgebraSpec(spec.p, spec.q, spec.dims, gen)


def decompose_local(
    spec: SubalgebraSpec, w: LaurentMatrix
) -> tuple[LaurentMatrix, LaurentMatrix]:
    """Split a symbol column w = a + b with a in the subalgebra span and
    b in the commutant span; both parts are local (projector spread)."""
    if w.shape != (2 * spec.q, 1):
        raise SpecShapeError(f"expected a {2 * spec.q} x 1 column")
    proj = build_projector(spec)
    a = proj.matrix @ w
    return a, w - a


def brauer_tensor(s1: SubalgebraSpec, s2: SubalgebraSpec) -> SubalgebraSpec:
    """Stack two specs on a shared lattice: q adds, generator lists
    concatenate, and the commutation matrix becomes the block sum."""
    if s1.p != s2.p or s1.dims != s2.dims:
        raise SpecShapeError("tensor factors live on different lattices")
    p, nvars = s1.p, s1.dims
    z12 = LaurentMatrix.zeros(p, nvars, s1.q, s2.n_generators)
    z21 = LaurentMatrix.zeros(p, nvars, s2.q, s1.n_generators)
    x = s1.x_block().hstack(z12).vstack(z21.hstack(s2.x_block()))
    z = s1.z_block().hstack(z12).vstack(z21.hstack(s2.z_block()))
    return SubalgebraSpec(p, s1.q + s2.q, nvars, x.vstack(z))


def column_span_contains(spec: SubalgebraSpec, w: LaurentMatrix) -> bool:
    """Membership of a symbol column in the Laurent-module span of the
    generators.

    Decidable routes, tried in order: the projector fixed-point test
    (the span is exactly the image of Pi), the (id; M) graph test, and
    for a single generator entrywise division with consistent quotients.
    Anything else would need module Groebner bases and raises.
    """
    if w.shape != (2 * spec.q, 1):
        raise SpecShapeError(f"expected a {2 * spec.q} x 1 column")
    cert = check_invertible(spec)
    if cert.projector_available:
        proj = build_projector(spec)
        return (proj.matrix @ w) == w
    if spec.is_remark_form():
        top = w.submatrix(range(spec.q), [0])
        return spec.z_block() @ top == w.submatrix(range(spec.q, 2 * spec.q), [0])
    if spec.n_generators == 1:
        col = spec.generators.column(0)
        quot: LaurentPoly | None = None
        for gi, wi in zip(col, w.column(0)):
            if gi.is_zero():
                if not wi.is_zero():
                    return False
                continue
            q = divides(gi, wi)
            if q is None:
                return False
            if quot is None:
                quot = q
            elif quot != q:
                return False
        return True
    raise NotImplementedError(
        "span membership beyond projector/graph/single-generator cases"
    )
