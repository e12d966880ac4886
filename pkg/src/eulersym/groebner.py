"""Buchberger engine and the ideal operations the saturation test needs.

Desk-scale only: ideals here have a handful of generators in at most a
few variables.  Pair selection is by minimal lcm degree, with the
coprime and chain criteria; a configurable degree cap turns runaway
completions into a loud error instead of a hang.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Sequence

from .errors import DegreeCapExceeded, HomogeneityError
from .poly import GREVLEX, MonomialOrder, Monomial, Polynomial, VarContext, block_order
from .spaces import FormSpace, monomials_of_degree

DEFAULT_DEGREE_CAP = 30


def leading_monomial(p: Polynomial, order: MonomialOrder) -> Monomial:
    return order.max(p.terms)


def leading_coefficient(p: Polynomial, order: MonomialOrder) -> Fraction:
    return p.terms[leading_monomial(p, order)]


def _monomial_divides(a: Monomial, b: Monomial) -> bool:
    return all(x <= y for x, y in zip(a, b))


def _monomial_lcm(a: Monomial, b: Monomial) -> Monomial:
    return tuple(max(x, y) for x, y in zip(a, b))


def _monomial_quot(a: Monomial, b: Monomial) -> Monomial:
    return tuple(x - y for x, y in zip(a, b))


def reduce_poly(p: Polynomial, gens: Sequence[Polynomial], order: MonomialOrder) -> Polynomial:
    """Full normal form of p modulo gens (every term reduced)."""
    ctx = p.context
    remainder = Polynomial.zero(ctx)
    work = p
    lead = [(leading_monomial(g, order), leading_coefficient(g, order), g) for g in gens if g]
    while not work.is_zero():
        lm = leading_monomial(work, order)
        lc = work.terms[lm]
        for gm, gc, g in lead:
            if _monomial_divides(gm, lm):
                shift = _monomial_quot(lm, gm)
                work = work - g * Polynomial.from_monomial(ctx, shift, lc / gc)
                break
        else:
            t = Polynomial.from_monomial(ctx, lm, lc)
            remainder = remainder + t
            work = work - t
    return remainder


def s_polynomial(f: Polynomial, g: Polynomial, order: MonomialOrder) -> Polynomial:
    ctx = f.context
    fm, gm = leading_monomial(f, order), leading_monomial(g, order)
    lcm = _monomial_lcm(fm, gm)
    fc, gc = f.terms[fm], g.terms[gm]
    return (f * Polynomial.from_monomial(ctx, _monomial_quot(lcm, fm), 1 / fc)
            - g * Polynomial.from_monomial(ctx, _monomial_quot(lcm, gm), 1 / gc))


def buchberger(gens: Sequence[Polynomial], order: MonomialOrder = GREVLEX,
               degree_cap: int = DEFAULT_DEGREE_CAP) -> list[Polynomial]:
    """Reduced Groebner basis of the ideal generated by gens."""
    basis = []
    for g in sorted((g for g in gens if not g.is_zero()),
                    key=lambda p: order.key(leading_monomial(p, order))):
        monic = g * (1 / leading_coefficient(g, order))
        if monic not in basis:
            basis.append(monic)
    pairs = {(i, j) for i in range(len(basis)) for j in range(i + 1, len(basis))}

    def pair_rank(ij):
        lcm = _monomial_lcm(leading_monomial(basis[ij[0]], order),
                            leading_monomial(basis[ij[1]], order))
        return (sum(lcm), order.key(lcm), ij)

    while pairs:
        i, j = min(pairs, key=pair_rank)
        pairs.discard((i, j))
        fm = leading_monomial(basis[i], order)
        gm = leading_monomial(basis[j], order)
        lcm = _monomial_lcm(fm, gm)
        if lcm == tuple(a + b for a, b in zip(fm, gm)):
            continue  # coprime leading terms
        chained = any(
            k not in (i, j)
            and _monomial_divides(leading_monomial(basis[k], order), lcm)
            and (min(i, k), max(i, k)) not in pairs
            and (min(j, k), max(j, k)) not in pairs
            for k in range(len(basis))
        )
        if chained:
            continue
        if sum(lcm) > degree_cap:
            raise DegreeCapExceeded(
                f"S-pair degree {sum(lcm)} exceeds the cap {degree_cap}; "
                "raise degree_cap if this ideal is really wanted")
        rem = reduce_poly(s_polynomial(basis[i], basis[j], order), basis, order)
        if rem.is_zero():
            continue
        rem = rem * (1 / leading_coefficient(rem, order))
        basis.append(rem)
        new = len(basis) - 1
        pairs.update((k, new) for k in range(new))
    return _reduce_basis(basis, order)


def _reduce_basis(basis: list[Polynomial], order: MonomialOrder) -> list[Polynomial]:
    # minimalize: drop generators whose leading monomial another one divides
    keep: list[Polynomial] = []
    lms = [leading_monomial(g, order) for g in basis]
    for i, g in enumerate(basis):
        if any(j != i and _monomial_divides(lms[j], lms[i])
               and (not _monomial_divides(lms[i], lms[j]) or j < i)
               for j in range(len(basis))):
            continue
        keep.append(g)
    # tail-reduce each against the others until stable
    changed = True
    while changed:
        changed = False
        for i in range(len(keep)):
            others = keep[:i] + keep[i + 1:]
            red = reduce_poly(keep[i], others, order)
            if red.is_zero():
                keep.pop(i)
                changed = True
                break
            red = red * (1 / leading_coefficient(red, order))
            if red != keep[i]:
                keep[i] = red
                changed = True
    keep.sort(key=lambda g: order.key(leading_monomial(g, order)), reverse=True)
    return keep


class GroebnerBasis:
    """A reduced basis together with its context and order."""

    __slots__ = ("context", "order", "polys")

    def __init__(self, ctx: VarContext, order: MonomialOrder, polys: Sequence[Polynomial]):
        self.context = ctx
        self.order = order
        self.polys = tuple(polys)

    @classmethod
    def of(cls, gens: Sequence[Polynomial], ctx: VarContext,
           order: MonomialOrder = GREVLEX,
           degree_cap: int = DEFAULT_DEGREE_CAP) -> "GroebnerBasis":
        return cls(ctx, order, buchberger(gens, order, degree_cap))

    def is_zero_ideal(self) -> bool:
        return not self.polys

    def is_unit_ideal(self) -> bool:
        return len(self.polys) == 1 and self.polys[0].degree() == 0

    def reduce(self, p: Polynomial) -> Polynomial:
        return reduce_poly(p, self.polys, self.order)

    def contains(self, p: Polynomial) -> bool:
        return self.reduce(p).is_zero()

    def __eq__(self, other):
        if not isinstance(other, GroebnerBasis):
            return NotImplemented
        return (self.context == other.context and self.order.name == other.order.name
                and self.polys == other.polys)

    def __repr__(self):
        gens = ", ".join(str(p) for p in self.polys) or "0"
        return f"GroebnerBasis({gens})"


# ---------------------------------------------------------------------------
# context extension for the auxiliary-variable tricks

def _fresh_name(ctx: VarContext) -> str:
    i = 0
    while f"_t{i}" in ctx.names:
        i += 1
    return f"_t{i}"


def _lift(p: Polynomial, ext: VarContext) -> Polynomial:
    return Polynomial(ext, {(0,) + e: c for e, c in p.terms.items()})


def _drop_first(p: Polynomial, base: VarContext) -> Polynomial | None:
    """Strip the auxiliary first variable; None if p actually uses it."""
    out = {}
    for e, c in p.terms.items():
        if e[0] != 0:
            return None
        out[e[1:]] = c
    return Polynomial(base, out)


def _eliminate_first(gens_ext: list[Polynomial], ext: VarContext, base: VarContext,
                     degree_cap: int) -> list[Polynomial]:
    """Intersect the ideal with the subring omitting the first variable."""
    G = buchberger(gens_ext, block_order(1), degree_cap)
    kept = []
    for g in G:
        low = _drop_first(g, base)
        if low is not None:
            kept.append(low)
    return buchberger(kept, GREVLEX, degree_cap)


def colon_by_variable_power(gens: Sequence[Polynomial], var_index: int,
                            degree_cap: int = DEFAULT_DEGREE_CAP) -> list[Polynomial]:
    """Generators of I : x_i^infinity, by eliminating y from I + (1 - y*x_i)."""
    if not gens:
        return []
    ctx = gens[0].context
    ext = VarContext((_fresh_name(ctx),) + ctx.names)
    lifted = [_lift(g, ext) for g in gens]
    xi = Polynomial.variable(ext, var_index + 1)
    y = Polynomial.variable(ext, 0)
    lifted.append(Polynomial.constant(ext, 1) - y * xi)
    return _eliminate_first(lifted, ext, ctx, degree_cap)


def intersect_ideals(a: Sequence[Polynomial], b: Sequence[Polynomial], ctx: VarContext,
                     degree_cap: int = DEFAULT_DEGREE_CAP) -> list[Polynomial]:
    """Generators of the ideal intersection, via t*I + (1-t)*J and elimination."""
    if not a or not b:
        return []
    ext = VarContext((_fresh_name(ctx),) + ctx.names)
    t = Polynomial.variable(ext, 0)
    one_minus_t = Polynomial.constant(ext, 1) - t
    gens = [t * _lift(f, ext) for f in a] + [one_minus_t * _lift(g, ext) for g in b]
    return _eliminate_first(gens, ext, ctx, degree_cap)


def saturate_ideal(gens: Sequence[Polynomial],
                   degree_cap: int = DEFAULT_DEGREE_CAP) -> GroebnerBasis:
    """Saturation of a homogeneous ideal by the irrelevant ideal (x1..xn).

    Computed as the intersection over the variables of the per-variable
    colon ideals I : x_i^infinity; each colon comes from an auxiliary
    variable elimination.  The result is the reduced grevlex basis.
    """
    gens = [g for g in gens if not g.is_zero()]
    if not gens:
        raise ValueError("saturation of the zero ideal is not meaningful here")
    ctx = gens[0].context
    for g in gens:
        if g.context != ctx:
            raise ValueError("generators live over different contexts")
        g.homogeneous_degree()  # raises HomogeneityError when inhomogeneous
    parts = [colon_by_variable_power(gens, i, degree_cap) for i in range(ctx.n)]
    result: list[Polynomial] | None = None
    unit = [Polynomial.constant(ctx, 1)]

    def is_unit(part):
        return len(part) == 1 and part[0].degree() == 0

    for part in parts:
        if is_unit(part):
            continue
        if result is None:
            result = part
        else:
            result = intersect_ideals(result, part, ctx, degree_cap)
    if result is None:
        result = unit
    return GroebnerBasis(ctx, GREVLEX, buchberger(result, GREVLEX, degree_cap))


def is_zero_dimensional(space: FormSpace,
                        degree_cap: int = DEFAULT_DEGREE_CAP) -> bool:
    """Whether the forms in `space` cut out the empty set in PW.

    Structure test on the reduced grevlex basis: the irrelevant ideal is
    contained in the radical exactly when every variable shows up as a
    pure power among the leading monomials.
    """
    if space.is_zero():
        return False
    G = buchberger(list(space.basis), GREVLEX, degree_cap)
    if len(G) == 1 and G[0].degree() == 0:
        return True
    lms = [leading_monomial(g, GREVLEX) for g in G]
    for i in range(space.context.n):
        if not any(m[i] > 0 and all(e == 0 for j, e in enumerate(m) if j != i) for m in lms):
            return False
    return True


def graded_component(gb: GroebnerBasis, degree: int) -> FormSpace:
    """Degree-d slice of a homogeneous ideal, as a FormSpace."""
    ctx = gb.context
    if gb.is_zero_ideal():
        return FormSpace.zero(ctx, degree)
    if gb.is_unit_ideal():
        return FormSpace.full(ctx, degree)
    polys = []
    for g in gb.polys:
        d = g.homogeneous_degree()
        if d is None or d > degree:
            continue
        for m in monomials_of_degree(ctx, degree - d):
            polys.append(g * Polynomial.from_monomial(ctx, m))
    return FormSpace.span(polys, ctx, degree)
