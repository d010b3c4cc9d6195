"""Commuting-Pauli Hamiltonians, string operators, and anyon data.

Everything here is exact: operators are phase-tracked Paulis, syndromes
are symplectic pairings over F_p, string operators come out of F_p
linear solves, the exchange phase is read off a literal operator
product, and the chiral-central-charge phase is evaluated in the
cyclotomic integers with no floating point on the critical path.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass

import numpy as np
import sympy as sp

from .fplinalg import solve
from .finite_oracle import (
    FiniteLattice,
    instantiate_column,
    pairing_matrix,
    pauli_from_column,
)
from .laurent import LaurentMatrix
from .weyl import PhasedPauli


class NoncommutingTermsError(ValueError):
    """Two Hamiltonian terms fail to commute; the model is rejected."""


class InfeasibleHopError(ValueError):
    """No product of the allowed generators realizes the requested
    two-point syndrome."""


class SpinGeometryError(ValueError):
    """Leg geometry too cramped for the exchange phase to have settled
    to its topological value."""


class NotModularError(ValueError):
    """The spin collection fails the Gauss-sum modularity test."""


@dataclass(frozen=True)
class HamiltonianInstance:
    """One commuting Pauli term per (family, site) on a finite lattice.

    Families index the distinct term symbols (one for the worked
    example, vertex/plaquette style pairs for stabilizer codes); terms
    whose footprint crosses an open boundary are dropped.
    """

    lattice: FiniteLattice
    term_symbols: tuple[LaurentMatrix, ...]
    entries: tuple[tuple[int, tuple[int, ...]], ...]
    paulis: tuple[PhasedPauli, ...]
    rows: np.ndarray

    @property
    def spread(self) -> int:
        return max(sym.spread() for sym in self.term_symbols)

    def index_of(self, family: int, site) -> int:
        return self.entries.index((family, tuple(site)))


def build_hamiltonian(
    lattice: FiniteLattice, term_symbols
) -> HamiltonianInstance:
    """Place every translate of every term symbol and verify exact
    pairwise commutation (one bad pair aborts loudly)."""
    symbols = tuple(term_symbols)
    entries = []
    paulis = []
    rows = []
    for fam, sym in enumerate(symbols):
        for s in lattice.sites():
            vec = instantiate_column(lattice, sym, s)
            if vec is None:
                continue
            entries.append((fam, s))
            paulis.append(PhasedPauli.from_symplectic(lattice.p, vec))
            rows.append(vec)
    if not rows:
        raise NoncommutingTermsError("no term fits on the lattice")
    rows = np.array(rows, dtype=np.int64)
    gram = pairing_matrix(rows, rows, lattice.p)
    bad = np.argwhere(gram != 0)
    if bad.size:
        i, j = (int(v) for v in bad[0])
        raise NoncommutingTermsError(
            f"terms {entries[i]} and {entries[j]} do not commute"
        )
    return HamiltonianInstance(lattice, symbols, tuple(entries),
                               tuple(paulis), rows)


def syndrome(op: PhasedPauli, h: HamiltonianInstance) -> dict:
    """Nonzero commutation exponents of the operator against each term:
    op . P = omega^k P . op for the term P at the reported key."""
    vals = pairing_matrix(h.rows, op.to_symplectic(), h.lattice.p)[:, 0]
    return {h.entries[i]: int(v) for i, v in enumerate(vals) if v}


def _staircase_path(lattice: FiniteLattice, a, b) -> list[tuple[int, ...]]:
    """Axis-by-axis lattice path from a to b, each axis stepped the
    short way around; deterministic."""
    path = [tuple(a)]
    cur = list(a)
    for axis in range(lattice.dims):
        size = lattice.sizes[axis]
        delta = (b[axis] - cur[axis]) % size
        if lattice.periodic and delta > size // 2:
            step, count = -1, size - delta
        else:
            step, count = 1, delta
        for _ in range(count):
            cur[axis] = (cur[axis] + step) % size if lattice.periodic \
                else cur[axis] + step
            path.append(tuple(cur))
    return path


def hopping_operator(
    h: HamiltonianInstance,
    generators: LaurentMatrix,
    charge_at,
    charge_removed_at,
    charge: int = 1,
    family: int = 0,
    halo: int = 1,
) -> PhasedPauli:
    """A product of generator translates whose syndrome is exactly
    +charge at one site and -charge at the other (family terms only).

    Solved as an F_p linear system over generator translates in a halo
    of the staircase path between the two sites; candidates are ordered
    along the path so the solver builds a string from the +charge end.
    The resulting operator's full syndrome is re-verified exactly.
    """
    a, b = tuple(charge_at), tuple(charge_removed_at)
    if a == b:
        raise ValueError("the two syndrome sites must differ")
    lat = h.lattice
    target = np.zeros(len(h.entries), dtype=np.int64)
    target[h.index_of(family, a)] = charge % lat.p
    target[h.index_of(family, b)] = -charge % lat.p

    cols = [generators.submatrix(range(generators.rows), [j])
            for j in range(generators.cols)]
    for attempt_halo in (halo, halo + 1):
        seen = {}
        for site in _staircase_path(lat, a, b):
            for t in lat.window_sites(site, attempt_halo):
                for j in range(len(cols)):
                    seen.setdefault((t, j), True)
        cands = list(seen)
        mat = np.zeros((len(h.entries), len(cands)), dtype=np.int64)
        placed = []
        for idx, (t, j) in enumerate(cands):
            vec = instantiate_column(lat, cols[j], t)
            if vec is None:
                vec = np.zeros(lat.symplectic_len, dtype=np.int64)
            placed.append(vec)
            mat[:, idx] = pairing_matrix(h.rows, vec, lat.p)[:, 0]
        coeffs = solve(mat, target, lat.p)
        if coeffs is not None:
            break
    else:
        raise InfeasibleHopError(
            f"no generator product carries charge {charge} from {b} to {a}"
        )
    op = PhasedPauli.identity(lat.p, lat.n_qudits)
    for idx, c in enumerate(coeffs):
        if c == 0:
            continue
        factor = PhasedPauli.from_symplectic(lat.p, placed[idx])
        for _ in range(int(c)):
            op = op * factor
    got = syndrome(op, h)
    want = {h.entries[i]: int(v) for i, v in enumerate(target) if v}
    if got != want:
        raise InfeasibleHopError("solver produced an inconsistent syndrome")
    return op


def _columns(generators: LaurentMatrix) -> list[LaurentMatrix]:
    return [generators.submatrix(range(generators.rows), [j])
            for j in range(generators.cols)]


def _segment_box(step, halo: int):
    """Integer offsets covering the one-step segment {0, step} plus a
    halo, in deterministic order."""
    ranges = [range(min(0, s) - halo, max(0, s) + halo + 1) for s in step]
    return list(itertools.product(*ranges))


@dataclass(frozen=True)
class _Mover:
    """A one-step charge transporter, stored shift-covariantly as
    (generator index, offset, exponent) factors so the same solution
    can be stamped out anywhere on the torus."""

    step: tuple[int, ...]
    factors: tuple[tuple[int, tuple[int, ...], int], ...]


def _wrap(site, sizes) -> tuple[int, ...]:
    return tuple(int(c) % s for c, s in zip(site, sizes))


def _solve_mover(
    h: HamiltonianInstance, cols, step, charge: int, family: int
) -> _Mover:
    """Solve for a product of generator translates whose syndrome is
    +charge one step away from -charge at the origin."""
    lat = h.lattice
    base = _wrap((0,) * lat.dims, lat.sizes)
    tip = _wrap(step, lat.sizes)
    target = np.zeros(len(h.entries), dtype=np.int64)
    target[h.index_of(family, tip)] = charge % lat.p
    target[h.index_of(family, base)] = -charge % lat.p
    spread = max(c.spread() for c in cols)
    for halo in (max(spread, 1), max(spread, 1) + 1):
        cands = [(j, off) for off in _segment_box(step, halo)
                 for j in range(len(cols))]
        mat = np.zeros((len(h.entries), len(cands)), dtype=np.int64)
        for idx, (j, off) in enumerate(cands):
            vec = instantiate_column(lat, cols[j], _wrap(off, lat.sizes))
            mat[:, idx] = pairing_matrix(h.rows, vec, lat.p)[:, 0]
        coeffs = solve(mat, target, lat.p)
        if coeffs is not None:
            break
    else:
        raise InfeasibleHopError(
            f"no one-step transporter for charge {charge} along {tuple(step)}"
        )
    factors = tuple(
        (j, off, int(c)) for (j, off), c in zip(cands, coeffs) if c
    )
    return _Mover(step=tuple(step), factors=factors)


def _stamp(h: HamiltonianInstance, cols, mover: _Mover, at) -> PhasedPauli:
    lat = h.lattice
    op = PhasedPauli.identity(lat.p, lat.n_qudits)
    for j, off, c in mover.factors:
        site = _wrap(tuple(a + o for a, o in zip(at, off)), lat.sizes)
        factor = PhasedPauli.from_symplectic(
            lat.p, instantiate_column(lat, cols[j], site)
        )
        for _ in range(c):
            op = op * factor
    return op


def leg_string(
    h: HamiltonianInstance,
    generators: LaurentMatrix,
    junction,
    direction,
    length: int,
    charge: int = 1,
    family: int = 0,
) -> PhasedPauli:
    """The canonical string operator pushing a charge from the junction
    to junction + length*direction: a product of translates of a single
    one-step transporter, so its microscopic shape is uniform along the
    leg and depends only on the direction."""
    cols = _columns(generators)
    mover = _solve_mover(h, cols, direction, charge, family)
    lat = h.lattice
    op = PhasedPauli.identity(lat.p, lat.n_qudits)
    for m in range(length):
        at = _wrap(tuple(j + m * d for j, d in zip(junction, direction)),
                   lat.sizes)
        op = _stamp(h, cols, mover, at) * op
    far = _wrap(tuple(j + length * d for j, d in zip(junction, direction)),
                lat.sizes)
    got = syndrome(op, h)
    want = {}
    if charge % lat.p:
        want = {(family, far): charge % lat.p,
                (family, tuple(junction)): -charge % lat.p}
    if got != want:
        raise InfeasibleHopError("leg string syndrome failed to telescope")
    return op


DEFAULT_LEG_DIRECTIONS = ((1, 0), (0, 1), (-1, -1))


@dataclass(frozen=True)
class SpinReport:
    exponent: int
    p: int
    junction: tuple[int, ...]
    leg_length: int
    leg_directions: tuple[tuple[int, ...], ...]

    @property
    def phase(self) -> sp.Expr:
        return sp.exp(2 * sp.pi * sp.I * sp.Rational(self.exponent, self.p))


def topological_spin(
    h: HamiltonianInstance,
    generators: LaurentMatrix,
    charge: int = 1,
    junction=(0, 0),
    leg_length: int | None = None,
    leg_directions=DEFAULT_LEG_DIRECTIONS,
    family: int = 0,
    generator_spread: int | None = None,
) -> SpinReport:
    """Exchange phase of the charge from a three-leg junction process.

    Three string operators U1, U2, U3 push the charge from the junction
    out along the listed legs; the two orderings of their product are
    inverse scalars, and the reported exponent is the one for the
    ordering U1 U2 U3 (U3 U2 U1)^dagger.  Which of the two scalars is
    "the" spin is a handedness choice tied to how the two lattice axes
    are drawn; this one is calibrated against the known chirality of
    the built-in two-qutrit model, and the leg list in the report is
    the orientation datum.  Legs must be at least eight spreads long —
    shorter geometries are refused rather than reported, since the
    phase has not yet converged to its geometry-independent value.
    """
    lat = h.lattice
    spread = max(h.spread, generators.spread()
                 if generator_spread is None else generator_spread)
    spread = max(spread, 1)
    min_leg = 8 * spread
    if leg_length is None:
        leg_length = 10 * spread
    if leg_length < min_leg:
        raise SpinGeometryError(
            f"leg length {leg_length} below the settled threshold {min_leg}"
        )
    halo_pad = 2 * spread + 1
    if any(leg_length * abs(d) + halo_pad > size
           for direction in leg_directions
           for d, size in zip(direction, lat.sizes)):
        raise SpinGeometryError("legs lap around the torus at this size")
    u1, u2, u3 = (
        leg_string(h, generators, tuple(junction), direction, leg_length,
                   charge=charge, family=family)
        for direction in leg_directions
    )
    ratio = (u1 * u2 * u3) * (u3 * u2 * u1).dagger()
    if not ratio.is_scalar():
        raise SpinGeometryError("exchange product failed to collapse to a scalar")
    return SpinReport(exponent=ratio.phase, p=lat.p,
                      junction=tuple(junction), leg_length=leg_length,
                      leg_directions=tuple(tuple(d) for d in leg_directions))


# -- chiral central charge from the spin collection ---------------------


def _cyclo_mul(a: np.ndarray, b: np.ndarray, p: int) -> np.ndarray:
    full = np.convolve(a, b)
    out = full[:p].copy()
    out[: len(full) - p] += full[p:]
    return out


def _cyclo_conj(a: np.ndarray) -> np.ndarray:
    return a[(-np.arange(len(a))) % len(a)]


def _cyclo_equal_int(a: np.ndarray, value: int) -> bool:
    # a - value is a multiple of 1 + z + ... + z^(p-1) iff all its
    # coefficients agree.
    diff = a.astype(np.int64).copy()
    diff[0] -= value
    return bool(np.all(diff == diff[0]))


@dataclass(frozen=True)
class GaussSumReport:
    eighth_root_exponent: int

    @property
    def phase(self) -> sp.Expr:
        return sp.exp(2 * sp.pi * sp.I * sp.Rational(self.eighth_root_exponent, 8))


def gauss_sum_phase(p: int, spin_exponents) -> GaussSumReport:
    """The normalized Gauss sum of an abelian spin collection, as an
    exact eighth root of unity.

    The sum S = sum_j omega^(t_j) is manipulated entirely in the
    cyclotomic integers: modularity demands |S|^2 = n, and then S^2 is
    +-n, pinning the phase to a fourth root; the residual sign is
    decided by the (well-separated) real or imaginary part.  Collections
    whose sum has the wrong modulus are refused.
    """
    exps = [int(t) % p for t in spin_exponents]
    n = len(exps)
    if n == 0:
        raise NotModularError("empty spin collection")
    s = np.zeros(p, dtype=np.int64)
    for t in exps:
        s[t] += 1
    if not _cyclo_equal_int(_cyclo_mul(s, _cyclo_conj(s), p), n):
        raise NotModularError("|sum of spins|^2 differs from the anyon count")
    square = _cyclo_mul(s, s, p)
    omega = np.exp(2j * np.pi / p)
    value = complex(sum(int(c) * omega ** k for k, c in enumerate(s)))
    if _cyclo_equal_int(square, n):
        k = 0 if value.real > 0 else 4
    elif _cyclo_equal_int(square, -n):
        k = 2 if value.imag > 0 else 6
    else:
        raise NotModularError("sum of spins squares to neither +n nor -n")
    return GaussSumReport(eighth_root_exponent=k)
