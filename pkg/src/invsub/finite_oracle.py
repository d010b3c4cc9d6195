"""Finite-lattice instantiation and exact checks of symbol-level claims.

Symbol-level statements (invertibility, commutants, boundary algebras,
blending) all have finite counterparts on a torus or open patch: symbols
become integer vectors over F_p, subalgebras become row spaces, QCA
become symplectic matrices, and every claim turns into exact linear
algebra.  This module is the independent referee for the rest of the
package: it never touches Laurent-ring reasoning beyond reading off
coefficients.

Coordinate layout: site index is row-major over the lattice sizes; the
X exponent of qudit slot k at site s lives at coordinate s*q + k, and
the Z exponent at q*N + s*q + k, giving symplectic vectors of length
2qN.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field

import numpy as np

from .fplinalg import (
    coordinate_restriction,
    kernel,
    row_basis,
    row_space_intersection,
)
from .laurent import LaurentMatrix
from .pauli import SubalgebraSpec
from .qca import CliffordQCA
from .weyl import PhasedPauli


class InstantiationError(ValueError):
    """A generator or operator cannot be placed on the given lattice."""


@dataclass(frozen=True)
class FiniteLattice:
    """A finite qudit array: q qudits on each site of a torus (periodic)
    or an open box (translates crossing the boundary are dropped)."""

    p: int
    q: int
    sizes: tuple[int, ...]
    periodic: bool = True

    def __post_init__(self):
        if any(s < 1 for s in self.sizes) or not self.sizes:
            raise ValueError("lattice sizes must be positive")

    @property
    def dims(self) -> int:
        return len(self.sizes)

    @property
    def n_sites(self) -> int:
        n = 1
        for s in self.sizes:
            n *= s
        return n

    @property
    def n_qudits(self) -> int:
        return self.q * self.n_sites

    @property
    def symplectic_len(self) -> int:
        return 2 * self.n_qudits

    def sites(self):
        return itertools.product(*(range(s) for s in self.sizes))

    def site_index(self, site) -> int:
        idx = 0
        for c, size in zip(site, self.sizes):
            idx = idx * size + (c % size)
        return idx

    def resolve(self, site) -> tuple[int, ...] | None:
        """Wrap a site into the lattice, or None if it falls off an
        open patch."""
        out = []
        for c, size in zip(site, self.sizes):
            if self.periodic:
                out.append(c % size)
            elif 0 <= c < size:
                out.append(c)
            else:
                return None
        return tuple(out)

    def x_coord(self, site, slot: int) -> int:
        return self.site_index(site) * self.q + slot

    def z_coord(self, site, slot: int) -> int:
        return self.n_qudits + self.x_coord(site, slot)

    def site_coords(self, site) -> list[int]:
        base = self.site_index(site) * self.q
        xs = [base + k for k in range(self.q)]
        return xs + [self.n_qudits + c for c in xs]

    def window_sites(self, center, radius: int) -> list[tuple[int, ...]]:
        """Sites within sup-distance radius of center (wrapped or
        clipped), deduplicated, in deterministic order."""
        seen = {}
        for delta in itertools.product(*([range(-radius, radius + 1)] * self.dims)):
            t = self.resolve(tuple(c + d for c, d in zip(center, delta)))
            if t is not None and t not in seen:
                seen[t] = True
        return list(seen)

    def displacement(self, a, b) -> int:
        """Sup-norm distance from site a to site b, shortest way round
        on periodic axes."""
        out = 0
        for ca, cb, size in zip(a, b, self.sizes):
            d = abs(cb - ca)
            if self.periodic:
                d = min(d % size, (-d) % size)
            out = max(out, d)
        return out


def pairing_matrix(rows1, rows2, p: int) -> np.ndarray:
    """Symplectic pairings u_X.w_Z - u_Z.w_X for all row pairs."""
    r1 = np.atleast_2d(np.asarray(rows1, dtype=np.int64))
    r2 = np.atleast_2d(np.asarray(rows2, dtype=np.int64))
    m = r1.shape[1] // 2
    return (r1[:, :m] @ r2[:, m:].T - r1[:, m:] @ r2[:, :m].T) % p


def instantiate_column(
    lattice: FiniteLattice, column: LaurentMatrix, base_site
) -> np.ndarray | None:
    """Place one symbol column at a base site; None if any term of any
    entry falls off an open patch."""
    if column.shape != (2 * lattice.q, 1):
        raise InstantiationError(f"expected a {2 * lattice.q} x 1 symbol column")
    if column.p != lattice.p or column.nvars != lattice.dims:
        raise InstantiationError("symbol ring does not match the lattice")
    vec = np.zeros(lattice.symplectic_len, dtype=np.int64)
    for r in range(2 * lattice.q):
        f = column[(r, 0)]
        slot = r % lattice.q
        z_half = r >= lattice.q
        for e, c in f.terms.items():
            target = lattice.resolve(tuple(b + d for b, d in zip(base_site, e)))
            if target is None:
                return None
            coord = (lattice.z_coord(target, slot) if z_half
                     else lattice.x_coord(target, slot))
            vec[coord] = (vec[coord] + c) % lattice.p
    return vec


def instantiate_spec(spec: SubalgebraSpec, lattice: FiniteLattice) -> np.ndarray:
    """All surviving generator translates as symplectic rows.

    On a torus every translate survives; on an open patch a translate is
    dropped whenever the operator would stick out.  A generator losing
    all of its translates is an error.
    """
    if (spec.p, spec.q, spec.dims) != (lattice.p, lattice.q, lattice.dims):
        raise InstantiationError("spec and lattice parameters disagree")
    rows = []
    for j in range(spec.n_generators):
        col = spec.generators.submatrix(range(2 * spec.q), [j])
        placed = 0
        for s in lattice.sites():
            vec = instantiate_column(lattice, col, s)
            if vec is not None:
                rows.append(vec)
                placed += 1
        if placed == 0:
            raise InstantiationError(
                f"no translate of generator {j} fits on the patch"
            )
    if not rows:
        return np.zeros((0, lattice.symplectic_len), dtype=np.int64)
    return np.array(rows, dtype=np.int64)


def pauli_from_column(
    lattice: FiniteLattice, column: LaurentMatrix, base_site, phase: int = 0
) -> PhasedPauli:
    vec = instantiate_column(lattice, column, base_site)
    if vec is None:
        raise InstantiationError(f"operator at {base_site} crosses the boundary")
    return PhasedPauli.from_symplectic(lattice.p, vec, phase=phase)


def symplectic_complement(rows, lattice: FiniteLattice) -> np.ndarray:
    """Basis of everything pairing to zero with the given rows — the
    finite commutant of their span."""
    r = np.atleast_2d(np.asarray(rows, dtype=np.int64))
    if r.shape[0] == 0 or not r.any():
        return row_basis(np.eye(lattice.symplectic_len, dtype=np.int64), lattice.p)
    m = lattice.n_qudits
    sj = np.hstack([(-r[:, m:]) % lattice.p, r[:, :m]])
    return kernel(sj, lattice.p)


@dataclass(frozen=True)
class FiniteInvertibilityReport:
    invertible: bool
    dim_span: int
    dim_commutant: int
    dim_center: int
    small_lattice_warning: bool


def check_invertible_finite(
    rows, lattice: FiniteLattice, spread: int | None = None
) -> FiniteInvertibilityReport:
    """Invertible iff the span meets its commutant only in zero (the
    form is nondegenerate, so dimensions then add up to the whole
    register automatically)."""
    span = row_basis(rows, lattice.p)
    comp = symplectic_complement(span, lattice)
    center = row_space_intersection(span, comp, lattice.p)
    warn = spread is not None and any(s <= 4 * spread for s in lattice.sizes)
    ok = (center.shape[0] == 0
          and span.shape[0] + comp.shape[0] == lattice.symplectic_len)
    return FiniteInvertibilityReport(
        invertible=ok,
        dim_span=int(span.shape[0]),
        dim_commutant=int(comp.shape[0]),
        dim_center=int(center.shape[0]),
        small_lattice_warning=bool(warn),
    )


@dataclass(frozen=True)
class VsReport:
    holds: bool
    failure_site: tuple[int, ...] | None
    failure_element: np.ndarray | None


def check_vs(rows, lattice: FiniteLattice, reach: int) -> VsReport:
    """Does every element of the span have, at every site of its
    support, a nearby non-commuting witness inside the span?

    Checked as a subspace statement so that sums of generators are
    covered, not just basis vectors: the elements with no witness at s
    are exactly V_s = span & (lambda-complement of the windowed part
    W_s); the property fails iff some V_s has support at s.
    """
    span = row_basis(rows, lattice.p)
    if span.shape[0] == 0:
        return VsReport(True, None, None)
    p = lattice.p
    m = lattice.n_qudits
    for s in lattice.sites():
        window = [c for t in lattice.window_sites(s, reach)
                  for c in lattice.site_coords(t)]
        w_s = coordinate_restriction(span, window, p)
        if w_s.shape[0] == 0:
            blind = span
        else:
            sj = np.hstack([(-w_s[:, m:]) % p, w_s[:, :m]])
            blind = row_space_intersection(span, kernel(sj, p), p)
        here = lattice.site_coords(s)
        for v in blind:
            if v[here].any():
                return VsReport(False, tuple(s), v.copy())
    return VsReport(True, None, None)


def _exact_matmul(a: np.ndarray, b: np.ndarray, p: int) -> np.ndarray:
    # Float BLAS is much faster than integer matmul and stays exact here:
    # accumulated sums are far below 2**53.
    prod = np.rint(a.astype(np.float64) @ b.astype(np.float64)).astype(np.int64)
    return prod % p


@dataclass(frozen=True)
class FiniteSymplecticMap:
    """An exact symplectic automorphism of the finite symbol space."""

    lattice: FiniteLattice
    matrix: np.ndarray
    spread: int = field(default=-1)

    def __post_init__(self):
        m = np.asarray(self.matrix, dtype=np.int64) % self.lattice.p
        n = self.lattice.symplectic_len
        if m.shape != (n, n):
            raise ValueError(f"matrix must be {n} x {n}")
        object.__setattr__(self, "matrix", m)
        half = self.lattice.n_qudits
        jm = np.vstack([m[half:], (-m[:half]) % self.lattice.p])
        gram = _exact_matmul(m.T, jm, self.lattice.p)
        j = np.zeros((n, n), dtype=np.int64)
        j[:half, half:] = np.eye(half, dtype=np.int64)
        j[half:, :half] = (-np.eye(half, dtype=np.int64)) % self.lattice.p
        if not np.array_equal(gram, j):
            raise ValueError("matrix does not preserve the symplectic form")
        if self.spread < 0:
            object.__setattr__(self, "spread", self._measure_spread())

    def _measure_spread(self) -> int:
        lat = self.lattice
        sites = list(lat.sites())
        out = 0
        nz_rows, nz_cols = np.nonzero(self.matrix)
        for r, c in zip(nz_rows, nz_cols):
            s_in = sites[(int(c) % lat.n_qudits) // lat.q]
            s_out = sites[(int(r) % lat.n_qudits) // lat.q]
            out = max(out, lat.displacement(s_in, s_out))
        return out

    def image_of_coords(self, coords) -> np.ndarray:
        """Row basis of the image of the coordinate subalgebra."""
        cols = self.matrix[:, list(coords)].T
        return row_basis(cols, self.lattice.p)

    def apply_pauli(self, w: PhasedPauli) -> PhasedPauli:
        """Symbol-level action; phases are not tracked by the matrix."""
        vec = (self.matrix @ w.to_symplectic()) % self.lattice.p
        return PhasedPauli.from_symplectic(self.lattice.p, vec, phase=w.phase)


def instantiate_qca(qca: CliffordQCA, lattice: FiniteLattice) -> FiniteSymplecticMap:
    if not lattice.periodic:
        raise InstantiationError("QCA instantiation needs a torus")
    if (qca.p, qca.q, qca.dims) != (lattice.p, lattice.q, lattice.dims):
        raise InstantiationError("QCA and lattice parameters disagree")
    n = lattice.symplectic_len
    big = np.zeros((n, n), dtype=np.int64)
    cols = [qca.matrix.submatrix(range(2 * qca.q), [c]) for c in range(2 * qca.q)]
    for s in lattice.sites():
        for c in range(2 * qca.q):
            slot = c % qca.q
            src = (lattice.z_coord(s, slot) if c >= qca.q
                   else lattice.x_coord(s, slot))
            big[:, src] = instantiate_column(lattice, cols[c], s)
    return FiniteSymplecticMap(lattice, big, spread=qca.spread)


@dataclass(frozen=True)
class BoundaryAlgebraReport:
    basis: np.ndarray
    dim_image: int
    dim_boundary: int
    dim_off_slab: int
    factorization_holds: bool


def boundary_algebra_finite(
    alpha: FiniteSymplecticMap,
    axis: int,
    cut: int,
    window: int,
    depth: int | None = None,
) -> BoundaryAlgebraReport:
    """Image of a band above the cut, intersected with the slab just
    above the cut.

    The band runs `depth` layers up from the cut (default: all but two,
    so its far edge stays away from the slab even on the torus — a
    finite stand-in for a half space, which a periodic axis cannot
    hold).  The report also checks the local-factorization identity
    dim(image) = dim(boundary part) + dim(part supported off the slab):
    equality says the image splits cleanly along the slab boundary,
    which is the finite content of the half-space factorization.
    """
    lat = alpha.lattice
    if not 0 <= axis < lat.dims:
        raise ValueError(f"axis {axis} out of range")
    L = lat.sizes[axis]
    if window < alpha.spread:
        raise ValueError(f"window {window} below the map's spread {alpha.spread}")
    if depth is None:
        depth = L - 2
    if not window <= depth <= L - 2:
        raise ValueError("need window <= depth <= L - 2 for a meaningful band")

    def layer_coords(layers):
        wanted = {l % L for l in layers}
        return [c for s in lat.sites() if s[axis] in wanted
                for c in lat.site_coords(s)]

    band = layer_coords(range(cut + 1, cut + depth + 1))
    slab = layer_coords(range(cut + 1, cut + window + 1))
    off_slab = layer_coords(
        l for l in range(L) if (l - cut - 1) % L >= window
    )
    image = alpha.image_of_coords(band)
    boundary = coordinate_restriction(image, slab, lat.p)
    off = coordinate_restriction(image, off_slab, lat.p)
    return BoundaryAlgebraReport(
        basis=boundary,
        dim_image=int(image.shape[0]),
        dim_boundary=int(boundary.shape[0]),
        dim_off_slab=int(off.shape[0]),
        factorization_holds=bool(
            image.shape[0] == boundary.shape[0] + off.shape[0]
        ),
    )


@dataclass(frozen=True)
class BlendReport:
    agrees: bool
    first_mismatch: int | None


def verify_blend(
    gamma, alpha, beta, axis: int, interface: int, margin: int
) -> BlendReport:
    """Does gamma act like alpha well below the interface and like beta
    well above it?  Columns are compared on every basis vector whose
    site sits strictly outside the margin."""
    def raw(x):
        return x.matrix if isinstance(x, FiniteSymplecticMap) else np.asarray(x)

    maps = [x for x in (gamma, alpha, beta) if isinstance(x, FiniteSymplecticMap)]
    if not maps:
        raise ValueError("need at least one validated map to fix the lattice")
    lat = maps[0].lattice
    g, a, b = raw(gamma), raw(alpha), raw(beta)
    sites = list(lat.sites())
    for col in range(lat.symplectic_len):
        coord_axis = sites[(col % lat.n_qudits) // lat.q][axis]
        if coord_axis < interface - margin:
            ref = a
        elif coord_axis > interface + margin:
            ref = b
        else:
            continue
        if not np.array_equal(g[:, col], ref[:, col]):
            return BlendReport(False, col)
    return BlendReport(True, None)


def center_at_boundary_distance(rows, lattice: FiniteLattice) -> int:
    """Largest patch-boundary distance of any site supporting a central
    element of the span; -1 when the center is trivial.

    On an open patch the instantiated span of a (symbolically)
    invertible spec picks up a center from the truncated translates;
    that center must hug the boundary.
    """
    if lattice.periodic:
        raise ValueError("boundary distance needs an open patch")
    span = row_basis(rows, lattice.p)
    comp = symplectic_complement(span, lattice)
    center = row_space_intersection(span, comp, lattice.p)
    worst = -1
    for v in center:
        for s in lattice.sites():
            if v[lattice.site_coords(s)].any():
                edge = min(
                    min(c, size - 1 - c) for c, size in zip(s, lattice.sizes)
                )
                worst = max(worst, edge)
    return worst
