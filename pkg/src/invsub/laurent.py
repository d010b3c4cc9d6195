"""Exact Laurent polynomial arithmetic over prime fields.

The coefficient ring is F_p for a small prime p; exponents are integer
vectors of a fixed length (one slot per lattice direction), so an element
represents a finite formal sum of translations.  Everything is exact:
coefficients are residues in [0, p), never floats.

Ideal-theoretic questions (is this ideal the whole ring? is this element
a multiple of that one?) are answered by clearing denominators with a
minimal monomial and passing to an ordinary polynomial ring with one
auxiliary variable t subject to t*x_1*...*x_D = 1, which realizes the
localization at the coordinate monomials.  Groebner bases are computed in
grevlex order with t last.  Matrix sizes beyond roughly 6x6 are outside
the intended envelope: minors are enumerated combinatorially.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field

from . import groebner
from .groebner import Poly


class RingMismatchError(ValueError):
    """Operands belong to different coefficient fields or variable counts."""


class NotAUnitError(ValueError):
    """A determinant or divisor that needed to be invertible is not."""


class PolyParseError(ValueError):
    def __init__(self, message: str, position: int):
        super().__init__(f"{message} (at position {position})")
        self.position = position


def _is_prime(n: int) -> bool:
    if n < 2:
        return False
    d = 2
    while d * d <= n:
        if n % d == 0:
            return False
        d += 1
    return True


def var_names(nvars: int) -> list[str]:
    if nvars <= 3:
        return list("xyz"[:nvars])
    return [f"x{i + 1}" for i in range(nvars)]


class LaurentPoly:
    """Immutable Laurent polynomial with coefficients in F_p.

    terms maps exponent tuples to residues in [1, p); the zero polynomial
    has no terms.  Instances with matching (p, nvars) support +, -, *,
    unary -, ** (nonnegative), == and hashing.
    """

    __slots__ = ("p", "nvars", "terms")

    def __init__(self, p: int, nvars: int, terms: dict[tuple[int, ...], int]):
        if not _is_prime(p):
            raise ValueError(f"coefficient modulus {p} is not prime")
        if nvars < 0:
            raise ValueError("nvars must be nonnegative")
        clean = {}
        for e, c in terms.items():
            if len(e) != nvars:
                raise ValueError(f"exponent {e} has wrong arity for {nvars} variables")
            c %= p
            if c:
                clean[tuple(int(v) for v in e)] = c
        object.__setattr__(self, "p", p)
        object.__setattr__(self, "nvars", nvars)
        object.__setattr__(self, "terms", clean)

    def __setattr__(self, *a):  # pragma: no cover - guard rail
        raise AttributeError("LaurentPoly is immutable")

    # -- constructors -------------------------------------------------

    @classmethod
    def zero(cls, p: int, nvars: int) -> "LaurentPoly":
        return cls(p, nvars, {})

    @classmethod
    def one(cls, p: int, nvars: int) -> "LaurentPoly":
        return cls.constant(1, p, nvars)

    @classmethod
    def constant(cls, c: int, p: int, nvars: int) -> "LaurentPoly":
        return cls(p, nvars, {(0,) * nvars: c % p})

    @classmethod
    def monomial(cls, coeff: int, exps: tuple[int, ...], p: int, nvars: int) -> "LaurentPoly":
        return cls(p, nvars, {tuple(exps): coeff % p})

    @classmethod
    def variable(cls, i: int, p: int, nvars: int, power: int = 1) -> "LaurentPoly":
        e = [0] * nvars
        e[i] = power
        return cls(p, nvars, {tuple(e): 1})

    # -- predicates ----------------------------------------------------

    def is_zero(self) -> bool:
        return not self.terms

    def is_one(self) -> bool:
        return self.terms == {(0,) * self.nvars: 1}

    def is_constant(self) -> bool:
        return all(all(v == 0 for v in e) for e in self.terms)

    def is_monomial(self) -> bool:
        """Single-term Laurent polynomials are exactly the units of the ring."""
        return len(self.terms) == 1

    def constant_coeff(self) -> int:
        return self.terms.get((0,) * self.nvars, 0)

    def spread(self) -> int:
        """Largest absolute exponent appearing in any direction."""
        if not self.terms:
            return 0
        return max(max(abs(v) for v in e) if e else 0 for e in self.terms)

    # -- arithmetic ----------------------------------------------------

    def _check(self, other: "LaurentPoly") -> None:
        if self.p != other.p or self.nvars != other.nvars:
            raise RingMismatchError(
                f"F_{self.p} in {self.nvars} vars vs F_{other.p} in {other.nvars} vars"
            )

    def __add__(self, other: "LaurentPoly") -> "LaurentPoly":
        self._check(other)
        out = dict(self.terms)
        for e, c in other.terms.items():
            s = (out.get(e, 0) + c) % self.p
            if s:
                out[e] = s
            else:
                out.pop(e, None)
        return LaurentPoly(self.p, self.nvars, out)

    def __neg__(self) -> "LaurentPoly":
        return LaurentPoly(
            self.p, self.nvars, {e: self.p - c for e, c in self.terms.items()}
        )

    def __sub__(self, other: "LaurentPoly") -> "LaurentPoly":
        return self + (-other)

    def __mul__(self, other: "LaurentPoly") -> "LaurentPoly":
        self._check(other)
        out: dict[tuple[int, ...], int] = {}
        for ea, ca in self.terms.items():
            for eb, cb in other.terms.items():
                e = tuple(a + b for a, b in zip(ea, eb))
                s = (out.get(e, 0) + ca * cb) % self.p
                if s:
                    out[e] = s
                else:
                    out.pop(e, None)
        return LaurentPoly(self.p, self.nvars, out)

    def __pow__(self, n: int) -> "LaurentPoly":
        if n < 0:
            if not self.is_monomial():
                raise NotAUnitError(f"cannot invert non-monomial {self}")
            return self.inverse() ** (-n)
        out = LaurentPoly.one(self.p, self.nvars)
        base = self
        while n:
            if n & 1:
                out = out * base
            base = base * base
            n >>= 1
        return out

    def scale(self, c: int) -> "LaurentPoly":
        c %= self.p
        return LaurentPoly(self.p, self.nvars, {e: v * c for e, v in self.terms.items()})

    def shift(self, exps: tuple[int, ...]) -> "LaurentPoly":
        """Multiply by the monomial x^exps (a lattice translation)."""
        return LaurentPoly(
            self.p,
            self.nvars,
            {tuple(a + b for a, b in zip(e, exps)): c for e, c in self.terms.items()},
        )

    def bar(self) -> "LaurentPoly":
        """The involution inverting every variable, x_i -> x_i^-1."""
        return LaurentPoly(
            self.p, self.nvars, {tuple(-v for v in e): c for e, c in self.terms.items()}
        )

    def inverse(self) -> "LaurentPoly":
        if not self.is_monomial():
            raise NotAUnitError(f"{self} is not a unit")
        ((e, c),) = self.terms.items()
        return LaurentPoly(
            self.p, self.nvars, {tuple(-v for v in e): pow(c, self.p - 2, self.p)}
        )

    # -- comparisons, hashing, repr -----------------------------------

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, LaurentPoly)
            and self.p == other.p
            and self.nvars == other.nvars
            and self.terms == other.terms
        )

    def __hash__(self) -> int:
        return hash((self.p, self.nvars, tuple(sorted(self.terms.items()))))

    def __str__(self) -> str:
        return format_poly(self)

    def __repr__(self) -> str:
        return f"LaurentPoly(F_{self.p}, {format_poly(self)!r})"

    # -- parsing / printing -------------------------------------------

    @classmethod
    def parse(cls, text: str, p: int, nvars: int) -> "LaurentPoly":
        return parse_poly(text, p, nvars)


def format_poly(f: LaurentPoly) -> str:
    """Canonical text form; terms in sorted exponent order, coefficients
    in [1, p), joined by ' + '.  Round-trips exactly through parse_poly."""
    if not f.terms:
        return "0"
    names = var_names(f.nvars)
    parts = []
    for e in sorted(f.terms):
        c = f.terms[e]
        factors = []
        if c != 1 or all(v == 0 for v in e):
            factors.append(str(c))
        for name, v in zip(names, e):
            if v == 0:
                continue
            factors.append(name if v == 1 else f"{name}^{v}")
        parts.append("*".join(factors))
    return " + ".join(parts)


def parse_poly(text: str, p: int, nvars: int) -> LaurentPoly:
    """Parse sums of terms like '2*x^-1*y^3'.  Accepts x,y,z names for up
    to three variables and x1..xD names always; '+' and '-' separate
    terms.  Raises PolyParseError with a character position on bad input."""
    if not _is_prime(p):
        raise ValueError(f"coefficient modulus {p} is not prime")
    names = {n: i for i, n in enumerate(var_names(nvars))}
    for i in range(nvars):
        names[f"x{i + 1}"] = i
    s = text
    n = len(s)
    pos = 0

    def skip_ws():
        nonlocal pos
        while pos < n and s[pos].isspace():
            pos += 1

    def read_int() -> int:
        nonlocal pos
        start = pos
        if pos < n and s[pos] == "-":
            pos += 1
        if pos >= n or not s[pos].isdigit():
            raise PolyParseError("expected integer", pos)
        while pos < n and s[pos].isdigit():
            pos += 1
        return int(s[start:pos])

    def read_name() -> str:
        nonlocal pos
        start = pos
        while pos < n and (s[pos].isalnum() or s[pos] == "_"):
            pos += 1
        return s[start:pos]

    terms: dict[tuple[int, ...], int] = {}
    skip_ws()
    if pos >= n:
        raise PolyParseError("empty polynomial", pos)
    sign = 1
    first = True
    while pos < n:
        skip_ws()
        if not first:
            if pos >= n:
                break
            if s[pos] == "+":
                sign = 1
            elif s[pos] == "-":
                sign = -1
            else:
                raise PolyParseError(f"expected '+' or '-', got {s[pos]!r}", pos)
            pos += 1
            skip_ws()
        else:
            if s[pos] == "-":
                sign = -1
                pos += 1
                skip_ws()
            first = False
        # one term: factors joined by '*'
        coeff = 1
        exps = [0] * nvars
        saw_factor = False
        while True:
            skip_ws()
            if pos < n and s[pos].isdigit():
                coeff = (coeff * read_int()) % p
                saw_factor = True
            elif pos < n and s[pos].isalpha():
                at = pos
                name = read_name()
                if name not in names:
                    raise PolyParseError(f"unknown variable {name!r}", at)
                power = 1
                if pos < n and s[pos] == "^":
                    pos += 1
                    power = read_int()
                exps[names[name]] += power
                saw_factor = True
            else:
                raise PolyParseError("expected coefficient or variable", pos)
            skip_ws()
            if pos < n and s[pos] == "*":
                pos += 1
                continue
            break
        if not saw_factor:
            raise PolyParseError("empty term", pos)
        e = tuple(exps)
        c = (terms.get(e, 0) + sign * coeff) % p
        if c:
            terms[e] = c
        else:
            terms.pop(e, None)
        skip_ws()
    return LaurentPoly(p, nvars, terms)


# ---------------------------------------------------------------------------
# Clearing and localized polynomial images
# ---------------------------------------------------------------------------


def clear_minimal(f: LaurentPoly) -> tuple[Poly, tuple[int, ...]]:
    """Multiply f by the smallest monomial making every exponent
    nonnegative.  Returns the ordinary polynomial (as a groebner dict)
    and the shift applied, so f * x^shift = returned polynomial."""
    if not f.terms:
        return {}, (0,) * f.nvars
    mins = [min(e[i] for e in f.terms) for i in range(f.nvars)]
    # Fully minimal: each variable's lowest exponent becomes exactly zero.
    shift = tuple(-m for m in mins)
    poly = {tuple(v + s for v, s in zip(e, shift)): c for e, c in f.terms.items()}
    return poly, shift


def _localized(f: LaurentPoly) -> Poly:
    """Cleared polynomial embedded in nvars+1 variables (t appended)."""
    poly, _ = clear_minimal(f)
    return {e + (0,): c for e, c in poly.items()}


def _t_relation(p: int, nvars: int) -> Poly:
    # t * x_1 * ... * x_D - 1, making every coordinate variable invertible.
    return {(1,) * nvars + (1,): 1, (0,) * (nvars + 1): p - 1}


@dataclass
class IdealDescription:
    """A finitely generated ideal of the Laurent ring, with a cached
    Groebner basis of its cleared-and-localized polynomial image."""

    p: int
    nvars: int
    generators: list[LaurentPoly]
    monomial_order: str = field(init=False)
    _gb: list[Poly] | None = field(default=None, repr=False)

    def __post_init__(self):
        names = var_names(self.nvars) + ["t"]
        self.monomial_order = f"grevlex({','.join(names)})"

    def groebner_basis(self) -> list[Poly]:
        if self._gb is None:
            gens = [_localized(g) for g in self.generators if not g.is_zero()]
            if not gens:
                self._gb = []
            else:
                gens.append(_t_relation(self.p, self.nvars))
                self._gb = groebner.buchberger(gens, self.p)
        return self._gb

    def is_zero(self) -> bool:
        return all(g.is_zero() for g in self.generators)

    def is_unit(self) -> bool:
        if self.is_zero():
            return False
        return groebner.contains_unit(self.groebner_basis())

    def contains(self, f: LaurentPoly) -> bool:
        """Laurent-ideal membership via reduction in the localized ring."""
        if f.is_zero():
            return True
        if self.is_zero():
            return False
        return not groebner.normal_form(_localized(f), self.groebner_basis(), self.p)

    def generator_strings(self) -> list[str]:
        return [format_poly(g) for g in self.generators]


def ideal_is_unit(gens: list[LaurentPoly]) -> bool:
    """Does the given family generate the whole Laurent ring?"""
    if not gens:
        return False
    p, nvars = gens[0].p, gens[0].nvars
    for g in gens:
        if g.p != p or g.nvars != nvars:
            raise RingMismatchError("mixed rings in ideal generators")
    return IdealDescription(p, nvars, list(gens)).is_unit()


def divides(f: LaurentPoly, g: LaurentPoly) -> LaurentPoly | None:
    """The quotient g/f when f divides g in the Laurent ring, else None.

    Both sides are cleared by minimal monomials; with minimal clearing,
    Laurent divisibility coincides with ordinary polynomial divisibility
    (lowest corners of a product polytope cannot cancel over a domain),
    and the monomial bookkeeping restores the Laurent quotient.
    """
    f._check(g)
    if f.is_zero():
        raise ZeroDivisionError("division by the zero polynomial")
    if g.is_zero():
        return LaurentPoly.zero(f.p, f.nvars)
    fc, fshift = clear_minimal(f)
    gc, gshift = clear_minimal(g)
    q = groebner.divide_single(gc, fc, f.p)
    if q is None:
        return None
    quotient = LaurentPoly(f.p, f.nvars, q)
    # g * x^gshift = quotient_poly * (f * x^fshift)
    return quotient.shift(tuple(a - b for a, b in zip(fshift, gshift)))


# ---------------------------------------------------------------------------
# Matrices
# ---------------------------------------------------------------------------


class LaurentMatrix:
    """Dense matrix over the Laurent ring; rows/cols may be zero."""

    __slots__ = ("p", "nvars", "rows", "cols", "entries")

    def __init__(self, p: int, nvars: int, entries: list[list[LaurentPoly]]):
        rows = len(entries)
        cols = len(entries[0]) if rows else 0
        for row in entries:
            if len(row) != cols:
                raise ValueError("ragged matrix")
            for e in row:
                if e.p != p or e.nvars != nvars:
                    raise RingMismatchError("entry from a different ring")
        object.__setattr__(self, "p", p)
        object.__setattr__(self, "nvars", nvars)
        object.__setattr__(self, "rows", rows)
        object.__setattr__(self, "cols", cols)
        object.__setattr__(self, "entries", [list(r) for r in entries])

    def __setattr__(self, *a):  # pragma: no cover
        raise AttributeError("LaurentMatrix is immutable")

    @classmethod
    def zeros(cls, p: int, nvars: int, rows: int, cols: int) -> "LaurentMatrix":
        z = LaurentPoly.zero(p, nvars)
        m = cls(p, nvars, [[z] * cols for _ in range(rows)])
        if rows == 0:
            object.__setattr__(m, "cols", cols)
        return m

    @classmethod
    def identity(cls, p: int, nvars: int, n: int) -> "LaurentMatrix":
        z = LaurentPoly.zero(p, nvars)
        o = LaurentPoly.one(p, nvars)
        return cls(p, nvars, [[o if i == j else z for j in range(n)] for i in range(n)])

    def __getitem__(self, ij: tuple[int, int]) -> LaurentPoly:
        return self.entries[ij[0]][ij[1]]

    def column(self, j: int) -> list[LaurentPoly]:
        return [self.entries[i][j] for i in range(self.rows)]

    def _check(self, other: "LaurentMatrix") -> None:
        if self.p != other.p or self.nvars != other.nvars:
            raise RingMismatchError("matrices over different rings")

    def __add__(self, other: "LaurentMatrix") -> "LaurentMatrix":
        self._check(other)
        if (self.rows, self.cols) != (other.rows, other.cols):
            raise ValueError("shape mismatch")
        return LaurentMatrix(
            self.p,
            self.nvars,
            [
                [a + b for a, b in zip(ra, rb)]
                for ra, rb in zip(self.entries, other.entries)
            ],
        )

    def __sub__(self, other: "LaurentMatrix") -> "LaurentMatrix":
        return self + other.scale(-1)

    def scale(self, c: int) -> "LaurentMatrix":
        return self.map(lambda f: f.scale(c))

    def map(self, fn) -> "LaurentMatrix":
        m = LaurentMatrix.zeros(self.p, self.nvars, self.rows, self.cols)
        ent = [[fn(e) for e in row] for row in self.entries]
        object.__setattr__(m, "entries", ent)
        return m

    def __matmul__(self, other: "LaurentMatrix") -> "LaurentMatrix":
        self._check(other)
        if self.cols != other.rows:
            raise ValueError(f"shape mismatch {self.shape} @ {other.shape}")
        z = LaurentPoly.zero(self.p, self.nvars)
        out = []
        for i in range(self.rows):
            row = []
            for j in range(other.cols):
                acc = z
                for k in range(self.cols):
                    a = self.entries[i][k]
                    b = other.entries[k][j]
                    if a.terms and b.terms:
                        acc = acc + a * b
                row.append(acc)
            out.append(row)
        m = LaurentMatrix.zeros(self.p, self.nvars, self.rows, other.cols)
        object.__setattr__(m, "entries", out)
        return m

    @property
    def shape(self) -> tuple[int, int]:
        return (self.rows, self.cols)

    def transpose(self) -> "LaurentMatrix":
        m = LaurentMatrix.zeros(self.p, self.nvars, self.cols, self.rows)
        object.__setattr__(
            m,
            "entries",
            [[self.entries[i][j] for i in range(self.rows)] for j in range(self.cols)],
        )
        return m

    def bar(self) -> "LaurentMatrix":
        return self.map(lambda f: f.bar())

    def bar_transpose(self) -> "LaurentMatrix":
        return self.bar().transpose()

    def is_zero(self) -> bool:
        return all(e.is_zero() for row in self.entries for e in row)

    def spread(self) -> int:
        return max((e.spread() for row in self.entries for e in row), default=0)

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, LaurentMatrix)
            and self.p == other.p
            and self.nvars == other.nvars
            and self.shape == other.shape
            and self.entries == other.entries
        )

    def __hash__(self):
        return hash(
            (self.p, self.nvars, tuple(tuple(r) for r in self.entries))
        )

    def __repr__(self) -> str:
        body = "; ".join(
            ", ".join(format_poly(e) for e in row) for row in self.entries
        )
        return f"LaurentMatrix(F_{self.p}, [{body}])"

    def hstack(self, other: "LaurentMatrix") -> "LaurentMatrix":
        self._check(other)
        if self.rows != other.rows:
            raise ValueError("row mismatch")
        m = LaurentMatrix.zeros(self.p, self.nvars, self.rows, self.cols + other.cols)
        object.__setattr__(
            m, "entries", [a + b for a, b in zip(self.entries, other.entries)]
        )
        return m

    def vstack(self, other: "LaurentMatrix") -> "LaurentMatrix":
        self._check(other)
        if self.cols != other.cols:
            raise ValueError("column mismatch")
        m = LaurentMatrix.zeros(self.p, self.nvars, self.rows + other.rows, self.cols)
        object.__setattr__(m, "entries", self.entries + other.entries)
        return m

    def submatrix(self, row_idx, col_idx) -> "LaurentMatrix":
        ent = [[self.entries[i][j] for j in col_idx] for i in row_idx]
        m = LaurentMatrix.zeros(self.p, self.nvars, len(row_idx), len(col_idx))
        if ent:
            object.__setattr__(m, "entries", ent)
        return m


def determinant(m: LaurentMatrix) -> LaurentPoly:
    if m.rows != m.cols:
        raise ValueError("determinant of a non-square matrix")
    return _det(m, tuple(range(m.rows)), tuple(range(m.cols)), {})


def _det(m, rows, cols, cache) -> LaurentPoly:
    key = (rows, cols)
    if key in cache:
        return cache[key]
    k = len(rows)
    if k == 0:
        out = LaurentPoly.one(m.p, m.nvars)
    elif k == 1:
        out = m.entries[rows[0]][cols[0]]
    else:
        out = LaurentPoly.zero(m.p, m.nvars)
        i = rows[0]
        rest = rows[1:]
        for t, j in enumerate(cols):
            a = m.entries[i][j]
            if a.is_zero():
                continue
            sub = _det(m, rest, cols[:t] + cols[t + 1 :], cache)
            term = a * sub
            out = out + (term if t % 2 == 0 else -term)
    cache[key] = out
    return out


def minors(m: LaurentMatrix, k: int) -> list[LaurentPoly]:
    """All k x k minors, in lexicographic order of (row set, column set)."""
    if k < 0 or k > min(m.rows, m.cols):
        raise ValueError(f"no {k}x{k} minors of a {m.rows}x{m.cols} matrix")
    if k == 0:
        return [LaurentPoly.one(m.p, m.nvars)]
    cache: dict = {}
    out = []
    for rows in itertools.combinations(range(m.rows), k):
        for cols in itertools.combinations(range(m.cols), k):
            out.append(_det(m, rows, cols, cache))
    return out


@dataclass
class DeterminantalProfile:
    """Largest k with a nonzero k x k minor, together with that minor
    ideal.  rank 0 means every entry vanishes; by convention the empty
    (0 x 0) minor is 1, so the ideal is then the unit ideal."""

    rank: int
    ideal: IdealDescription
    is_unit: bool


def determinantal_profile(m: LaurentMatrix) -> DeterminantalProfile:
    for k in range(min(m.rows, m.cols), 0, -1):
        mins = [f for f in minors(m, k) if not f.is_zero()]
        if mins:
            # Deduplicate while preserving order; identical minors are common.
            seen: dict[LaurentPoly, None] = {}
            for f in mins:
                seen.setdefault(f, None)
            ideal = IdealDescription(m.p, m.nvars, list(seen))
            return DeterminantalProfile(k, ideal, ideal.is_unit())
    ideal = IdealDescription(m.p, m.nvars, [LaurentPoly.one(m.p, m.nvars)])
    return DeterminantalProfile(0, ideal, True)


def adjugate(m: LaurentMatrix) -> LaurentMatrix:
    if m.rows != m.cols:
        raise ValueError("adjugate of a non-square matrix")
    n = m.rows
    if n == 0:
        return LaurentMatrix.zeros(m.p, m.nvars, 0, 0)
    cache: dict = {}
    all_rows = tuple(range(n))
    ent = [[None] * n for _ in range(n)]
    for i in range(n):
        for j in range(n):
            rows = tuple(r for r in all_rows if r != j)
            cols = tuple(c for c in all_rows if c != i)
            cof = _det(m, rows, cols, cache)
            ent[i][j] = cof if (i + j) % 2 == 0 else -cof
    return LaurentMatrix(m.p, m.nvars, ent)


def matrix_inverse(m: LaurentMatrix) -> LaurentMatrix:
    """Inverse over the Laurent ring; exists iff det is a nonzero monomial."""
    d = determinant(m)
    if not d.is_monomial():
        raise NotAUnitError(f"determinant {d} is not a unit")
    dinv = d.inverse()
    return adjugate(m).map(lambda f: f * dinv)
