"""Symbol systems: graded spaces of symmetric forms closed under contraction.

A system F = (F^0, ..., F^r) fixes F^0 = constants and F^1 = all linear
forms, requires F^r != 0, and demands that contracting any member of
F^k by a basis vector lands in F^(k-1).  Closure is linear in the
vector, so checking the basis vectors e_i settles it for all of W.

Beyond validation this module computes the prolongation of a component,
systems generated by a single form, the order (how far the base loci
stay empty), and the saturation predicate for systems of order 1.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Mapping, Sequence

from .errors import InvalidSymbolSystem, SaturationPreconditionError
from .groebner import (GroebnerBasis, graded_component, is_zero_dimensional,
                       saturate_ideal)
from .poly import Polynomial, VarContext, contract, default_context
from .spaces import FormSpace, kernel_of_map, monomials_of_degree


@dataclass(frozen=True)
class SymbolSystem:
    context: VarContext
    components: tuple[FormSpace, ...]  # indexed by degree, 0..rank

    @property
    def rank(self) -> int:
        return len(self.components) - 1

    @property
    def dims(self) -> tuple[int, ...]:
        return tuple(c.dim for c in self.components)

    def component(self, k: int) -> FormSpace:
        """F^k; zero space for k beyond the rank."""
        if k < 0:
            raise ValueError("component degree must be nonnegative")
        if k <= self.rank:
            return self.components[k]
        return FormSpace.zero(self.context, k)

    def __repr__(self):
        return f"SymbolSystem(rank {self.rank}, dims {self.dims})"


def _basis_vector(n: int, i: int) -> tuple[int, ...]:
    return tuple(1 if j == i else 0 for j in range(n))


def structural_diagnostics(ctx: VarContext, components: Sequence[FormSpace]) -> list[str]:
    """All axiom violations of a candidate component list, as messages."""
    out = []
    if len(components) < 2:
        out.append(f"need components for degrees 0..r with r >= 1, got {len(components)}")
        return out
    r = len(components) - 1
    for k, comp in enumerate(components):
        if comp.context != ctx:
            out.append(f"component {k} lives over variables ({comp.context}), expected ({ctx})")
            return out
        if comp.degree != k:
            out.append(f"component {k} holds degree-{comp.degree} forms")
            return out
    if components[0] != FormSpace.full(ctx, 0):
        out.append("F^0 must be exactly the constants")
    if not components[1].is_full():
        out.append(f"F^1 must be all linear forms (dim {ctx.n}), got dim {components[1].dim}")
    if components[r].is_zero():
        out.append(f"top component F^{r} is zero; the rank is overstated")
    for k in range(1, r + 1):
        lower = components[k - 1]
        for phi in components[k].basis:
            for i in range(ctx.n):
                img = contract(phi, _basis_vector(ctx.n, i))
                if not lower.contains(img):
                    out.append(
                        f"F^{k} is not closed under contraction: "
                        f"contracting {phi} by e{i + 1} gives {img}, outside F^{k - 1}")
    return out


def validate(ctx: VarContext, components: Sequence[FormSpace]) -> SymbolSystem:
    """Certify a candidate component list, or raise with all violations."""
    problems = structural_diagnostics(ctx, components)
    if problems:
        raise InvalidSymbolSystem(problems)
    return SymbolSystem(ctx, tuple(components))


def assemble(ctx: VarContext, rank: int, graded: Mapping[int, Sequence[Polynomial]]) -> SymbolSystem:
    """Build and validate a system from degree -> generator lists, k >= 2.

    F^0 and F^1 are forced by the axioms and never supplied; a degree
    missing from `graded` is the zero component.
    """
    if rank < 1:
        raise ValueError(f"rank must be at least 1, got {rank}")
    for k in graded:
        if not 2 <= k <= rank:
            raise ValueError(f"generators given for degree {k}, outside 2..{rank}")
    components = [FormSpace.full(ctx, 0), FormSpace.full(ctx, 1)]
    for k in range(2, rank + 1):
        gens = list(graded.get(k, ()))
        components.append(FormSpace.span(gens, ctx, k))
    return validate(ctx, components)


def prolong(space: FormSpace) -> FormSpace:
    """Forms one degree up whose every basis-vector contraction lies in `space`."""
    k = space.degree
    if k < 1:
        raise ValueError("prolongation needs a component of degree >= 1")
    ctx = space.context
    images = {}
    for m in monomials_of_degree(ctx, k + 1):
        mono = Polynomial.from_monomial(ctx, m)
        blocks = []
        for i in range(ctx.n):
            residue = space.reduce(contract(mono, _basis_vector(ctx.n, i)))
            row = [residue.coefficient(mm) for mm in monomials_of_degree(ctx, k)]
            blocks.append(row)
        images[m] = blocks
    return kernel_of_map(ctx, k + 1, images)


def from_polynomial(p: Polynomial) -> SymbolSystem:
    """The system generated by one form: top component <P>, lower ones
    spanned by iterated basis-vector contractions, F^1 forced to W*."""
    if p.is_zero():
        raise ValueError("cannot generate a system from the zero form")
    r = p.homogeneous_degree()
    if r < 2:
        raise ValueError(f"generating form must have degree >= 2, got {r}")
    ctx = p.context
    levels: dict[int, list[Polynomial]] = {r: [p]}
    for k in range(r - 1, 1, -1):
        levels[k] = [
            contract(b, _basis_vector(ctx.n, i))
            for b in levels[k + 1]
            for i in range(ctx.n)
        ]
    return assemble(ctx, r, levels)


def full_system(n: int, rank: int, ctx: VarContext | None = None) -> SymbolSystem:
    """F^k = Sym^k W* throughout; the Veronese case."""
    if ctx is None:
        ctx = default_context(n)
    if ctx.n != n:
        raise ValueError(f"context has {ctx.n} variables, expected {n}")
    components = [FormSpace.full(ctx, k) for k in range(rank + 1)]
    return validate(ctx, components)


def order(system: SymbolSystem) -> int:
    """Largest m with empty base locus Bs(F^m); between 1 and the rank."""
    for k in range(1, system.rank + 1):
        if not is_zero_dimensional(system.component(k)):
            return k - 1
    return system.rank


@dataclass(frozen=True)
class SaturationResult:
    saturated: bool
    degree2_matches: bool
    prolongation_exact: bool
    base_ideal: GroebnerBasis
    diagnostics: tuple[str, ...]

    def __bool__(self):
        return self.saturated


def is_saturated(system: SymbolSystem) -> SaturationResult:
    """Saturation predicate for systems of order 1 (order != 1 is an error).

    Two clauses: the degree-2 slice of the saturated ideal of the base
    locus must equal F^2, and the tower must be prolongation-exact
    (F^(k+1) = prolong(F^k) for 2 <= k < r, with prolong(F^r) = 0).
    """
    m = order(system)
    if m != 1:
        raise SaturationPreconditionError(
            f"saturation predicate applies to systems of order 1, got order {m}")
    diagnostics = []
    sat = saturate_ideal(list(system.component(2).basis))
    slice2 = graded_component(sat, 2)
    degree2_matches = slice2 == system.component(2)
    if not degree2_matches:
        diagnostics.append(
            "degree-2 slice of the saturated base-locus ideal has "
            f"dim {slice2.dim}, but F^2 has dim {system.component(2).dim}")
    prolongation_exact = True
    for k in range(2, system.rank + 1):
        grown = prolong(system.component(k))
        target = system.component(k + 1)  # zero space above the rank
        if grown == target:
            continue
        prolongation_exact = False
        witness = next((b for b in grown.basis if not target.contains(b)), None)
        if k == system.rank:
            diagnostics.append(
                f"prolong(F^{k}) is nonzero above the rank (e.g. {witness})")
        else:
            diagnostics.append(
                f"prolong(F^{k}) strictly contains F^{k + 1} (e.g. {witness})")
    return SaturationResult(
        saturated=degree2_matches and prolongation_exact,
        degree2_matches=degree2_matches,
        prolongation_exact=prolongation_exact,
        base_ideal=sat,
        diagnostics=tuple(diagnostics),
    )
