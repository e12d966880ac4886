"""Linear subspaces of a fixed graded piece Sym^k W*.

A FormSpace stores the reduced row-echelon basis of its span over the
monomial basis of degree k, monomials sorted descending in grevlex.
The representation is canonical, so two spaces are equal exactly when
their bases coincide term by term.
"""

from __future__ import annotations

from fractions import Fraction
from math import comb
from typing import Iterable, Mapping, Sequence

from .errors import ContextMismatchError, HomogeneityError
from .poly import GREVLEX, Monomial, Polynomial, VarContext


def monomials_of_degree(ctx: VarContext, degree: int) -> list[Monomial]:
    """All exponent tuples of the given total degree, descending grevlex."""
    if degree < 0:
        raise ValueError("degree must be nonnegative")
    out: list[Monomial] = []

    def fill(prefix, remaining, slots):
        if slots == 1:
            out.append(prefix + (remaining,))
            return
        for e in range(remaining + 1):
            fill(prefix + (e,), remaining - e, slots - 1)

    fill((), degree, ctx.n)
    return GREVLEX.sorted_desc(out)


def full_dimension(ctx: VarContext, degree: int) -> int:
    return comb(ctx.n + degree - 1, degree)


def rref(rows: list[list[Fraction]]) -> tuple[list[list[Fraction]], list[int]]:
    """Exact reduced row echelon form; returns (rows, pivot column indices)."""
    rows = [list(r) for r in rows]
    if not rows:
        return [], []
    width = len(rows[0])
    pivots: list[int] = []
    rank = 0
    for col in range(width):
        pivot_row = None
        for r in range(rank, len(rows)):
            if rows[r][col]:
                pivot_row = r
                break
        if pivot_row is None:
            continue
        rows[rank], rows[pivot_row] = rows[pivot_row], rows[rank]
        inv = 1 / rows[rank][col]
        rows[rank] = [c * inv for c in rows[rank]]
        for r in range(len(rows)):
            if r != rank and rows[r][col]:
                factor = rows[r][col]
                rows[r] = [a - factor * b for a, b in zip(rows[r], rows[rank])]
        pivots.append(col)
        rank += 1
        if rank == len(rows):
            break
    return rows[:rank], pivots


def nullspace(rows: list[list[Fraction]], width: int) -> list[list[Fraction]]:
    """Basis of {x : M x = 0} for the matrix with the given rows."""
    reduced, pivots = rref(rows)
    pivot_set = set(pivots)
    free = [j for j in range(width) if j not in pivot_set]
    basis = []
    for f in free:
        vec = [Fraction(0)] * width
        vec[f] = Fraction(1)
        for row, p in zip(reduced, pivots):
            vec[p] = -row[f]
        basis.append(vec)
    return basis


class FormSpace:
    """A subspace of the degree-k forms, held in canonical echelon form."""

    __slots__ = ("context", "degree", "basis", "_pivots")

    def __init__(self, ctx: VarContext, degree: int, basis: Sequence[Polynomial], pivots):
        object.__setattr__(self, "context", ctx)
        object.__setattr__(self, "degree", degree)
        object.__setattr__(self, "basis", tuple(basis))
        object.__setattr__(self, "_pivots", tuple(pivots))

    def __setattr__(self, *args):
        raise AttributeError("FormSpace is immutable")

    # -- constructors

    @classmethod
    def span(cls, polys: Iterable[Polynomial], ctx: VarContext | None = None,
             degree: int | None = None) -> "FormSpace":
        polys = [p for p in polys if not p.is_zero()]
        if polys:
            if ctx is None:
                ctx = polys[0].context
            if degree is None:
                degree = polys[0].homogeneous_degree()
        if ctx is None or degree is None:
            raise ValueError("spanning an empty set needs an explicit context and degree")
        for p in polys:
            if p.context != ctx:
                raise ContextMismatchError(
                    f"incompatible variable lists: ({p.context}) vs ({ctx})")
            if p.homogeneous_degree() != degree:
                raise HomogeneityError(
                    f"expected a homogeneous form of degree {degree}, got {p}")
        monos = monomials_of_degree(ctx, degree)
        index = {m: j for j, m in enumerate(monos)}
        rows = []
        for p in polys:
            row = [Fraction(0)] * len(monos)
            for e, c in p.terms.items():
                row[index[e]] = c
            rows.append(row)
        reduced, pivots = rref(rows)
        basis = [
            Polynomial(ctx, {monos[j]: c for j, c in enumerate(row) if c})
            for row in reduced
        ]
        return cls(ctx, degree, basis, [monos[j] for j in pivots])

    @classmethod
    def zero(cls, ctx: VarContext, degree: int) -> "FormSpace":
        return cls.span([], ctx, degree)

    @classmethod
    def full(cls, ctx: VarContext, degree: int) -> "FormSpace":
        polys = [Polynomial.from_monomial(ctx, m) for m in monomials_of_degree(ctx, degree)]
        return cls.span(polys, ctx, degree)

    # -- structure

    @property
    def dim(self) -> int:
        return len(self.basis)

    @property
    def pivots(self) -> tuple[Monomial, ...]:
        return self._pivots

    def is_zero(self) -> bool:
        return not self.basis

    def is_full(self) -> bool:
        return self.dim == full_dimension(self.context, self.degree)

    def _accepts(self, p: Polynomial):
        if p.context != self.context:
            raise ContextMismatchError(
                f"incompatible variable lists: ({p.context}) vs ({self.context})")
        if not p.is_zero() and p.homogeneous_degree() != self.degree:
            raise HomogeneityError(
                f"space holds degree-{self.degree} forms, got degree {p.homogeneous_degree()}")

    def reduce(self, p: Polynomial) -> Polynomial:
        """Remainder of p after subtracting its echelon-basis projection."""
        self._accepts(p)
        out = p
        for pivot, row in zip(self._pivots, self.basis):
            c = out.coefficient(pivot)
            if c:
                out = out - row * c
        return out

    def contains(self, p: Polynomial) -> bool:
        return self.reduce(p).is_zero()

    def coordinates_of(self, p: Polynomial) -> list[Fraction] | None:
        """Coefficients of p against the echelon basis, or None if outside."""
        self._accepts(p)
        out = p
        coords = []
        for pivot, row in zip(self._pivots, self.basis):
            c = out.coefficient(pivot)
            coords.append(c)
            if c:
                out = out - row * c
        return coords if out.is_zero() else None

    def __eq__(self, other):
        if not isinstance(other, FormSpace):
            return NotImplemented
        return (self.context == other.context and self.degree == other.degree
                and self.basis == other.basis)

    def __hash__(self):
        return hash((self.context, self.degree, self.basis))

    def __le__(self, other: "FormSpace") -> bool:
        _check_compatible(self, other)
        return all(other.contains(p) for p in self.basis)

    def __repr__(self):
        gens = ", ".join(str(p) for p in self.basis) or "0"
        return f"FormSpace(deg {self.degree}: {gens})"


def _check_compatible(s: FormSpace, t: FormSpace):
    if s.context != t.context:
        raise ContextMismatchError(
            f"incompatible variable lists: ({s.context}) vs ({t.context})")
    if s.degree != t.degree:
        raise ContextMismatchError(
            f"cannot combine spaces of degrees {s.degree} and {t.degree}")


def sum_spaces(s: FormSpace, t: FormSpace) -> FormSpace:
    _check_compatible(s, t)
    return FormSpace.span(list(s.basis) + list(t.basis), s.context, s.degree)


def intersect_spaces(s: FormSpace, t: FormSpace) -> FormSpace:
    """Exact intersection via the nullspace of stacked coordinate columns."""
    _check_compatible(s, t)
    if s.is_zero() or t.is_zero():
        return FormSpace.zero(s.context, s.degree)
    monos = monomials_of_degree(s.context, s.degree)
    index = {m: j for j, m in enumerate(monos)}

    def col(p):
        v = [Fraction(0)] * len(monos)
        for e, c in p.terms.items():
            v[index[e]] = c
        return v

    scols = [col(p) for p in s.basis]
    tcols = [col(p) for p in t.basis]
    width = len(scols) + len(tcols)
    rows = []
    for j in range(len(monos)):
        rows.append([c[j] for c in scols] + [-c[j] for c in tcols])
    combos = nullspace(rows, width)
    polys = []
    for combo in combos:
        p = Polynomial.zero(s.context)
        for a, b in zip(combo[: len(scols)], s.basis):
            if a:
                p = p + b * a
        polys.append(p)
    return FormSpace.span(polys, s.context, s.degree)


def spaces_equal(s: FormSpace, t: FormSpace) -> bool:
    _check_compatible(s, t)
    return s.basis == t.basis


def kernel_of_map(ctx: VarContext, degree: int,
                  images: Mapping[Monomial, Sequence[Sequence[Fraction]]]) -> FormSpace:
    """Forms of the given degree killed by a linear map described on monomials.

    `images` assigns to every degree-`degree` monomial a list of coordinate
    vectors (the map's value on that basis monomial, blocked however the
    caller likes); the blocks are concatenated internally.
    """
    monos = monomials_of_degree(ctx, degree)
    flat = {}
    length = None
    for m in monos:
        vecs = images[m]
        v = [c for block in vecs for c in block]
        if length is None:
            length = len(v)
        elif len(v) != length:
            raise ValueError("inconsistent image vector lengths")
        flat[m] = v
    rows = [[flat[m][i] for m in monos] for i in range(length or 0)]
    combos = nullspace(rows, len(monos))
    polys = [
        Polynomial(ctx, {m: c for m, c in zip(monos, combo) if c})
        for combo in combos
    ]
    return FormSpace.span(polys, ctx, degree)


def vanishing_space(ctx: VarContext, degree: int, points: Sequence[Sequence]) -> FormSpace:
    """Forms of the given degree vanishing at every listed point."""
    monos = monomials_of_degree(ctx, degree)
    rows = []
    for pt in points:
        mono_vals = []
        for m in monos:
            val = Fraction(1)
            for c, e in zip(pt, m):
                if e:
                    val *= Fraction(c) ** e
            mono_vals.append(val)
        rows.append(mono_vals)
    combos = nullspace(rows, len(monos))
    polys = [
        Polynomial(ctx, {m: c for m, c in zip(monos, combo) if c})
        for combo in combos
    ]
    return FormSpace.span(polys, ctx, degree)
