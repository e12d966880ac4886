"""The projective model attached to a symbol system, with its actions.

Ambient coordinates are blocked [z0 | z1..zn | degree blocks 2..r]:
z0 tracks t, the next n track w, and block k carries dual coordinates
against the echelon basis (b^k_i) of F^k.  The defining map is

    phi([t : w]) = [t^r : t^(r-1) w : t^(r-2) (b^2_i(w)) : ... : (b^r_i(w))]

The additive group W acts by translations g_v, the torus by weighted
scaling; both are linear on the ambient coordinates.  On a functional
block f^k the translation acts by

    sum_{l=2..k} C(k,l) f^l o iota_v^(k-l)  +  k * iota_w o iota_v^(k-1)
                                            +  t * iota_v^k

evaluated here against the chosen bases, so the whole action is a
matter of contraction chains and exact dot products.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from fractions import Fraction
from math import comb
from typing import Sequence

from . import sampling
from .errors import InsufficientSamplesError
from .poly import Polynomial, VarContext, contract, evaluate
from .spaces import FormSpace, monomials_of_degree, vanishing_space
from .systems import SymbolSystem, assemble


@dataclass(frozen=True)
class ProjectivePoint:
    """Exact projective point, scaled so the first nonzero coordinate is 1."""

    coords: tuple[Fraction, ...]

    def __init__(self, coords: Sequence):
        vals = tuple(Fraction(c) for c in coords)
        lead = next((c for c in vals if c), None)
        if lead is None:
            raise ValueError("all coordinates are zero; not a projective point")
        object.__setattr__(self, "coords", tuple(c / lead for c in vals))

    def __len__(self):
        return len(self.coords)

    def __getitem__(self, i):
        return self.coords[i]

    def __str__(self):
        return "[" + " : ".join(str(c) for c in self.coords) + "]"


@dataclass(frozen=True)
class EulerModel:
    system: SymbolSystem
    ambient: VarContext
    block_bounds: tuple[tuple[int, int], ...]  # (start, stop) per degree 0..r

    @property
    def rank(self) -> int:
        return self.system.rank

    @property
    def ambient_dim(self) -> int:
        return self.ambient.n

    def block(self, z: ProjectivePoint | Sequence, k: int) -> tuple[Fraction, ...]:
        coords = z.coords if isinstance(z, ProjectivePoint) else tuple(z)
        start, stop = self.block_bounds[k]
        return coords[start:stop]

    def chart_functions(self) -> list[Polynomial]:
        """Affine coordinate functions of the t=1 chart, as polynomials in w."""
        ctx = self.system.context
        out = [Polynomial.variable(ctx, i) for i in range(ctx.n)]
        for k in range(2, self.rank + 1):
            out.extend(self.system.component(k).basis)
        return out


def build_model(system: SymbolSystem) -> EulerModel:
    n = system.context.n
    names = ["z0"] + [f"z{i}" for i in range(1, n + 1)]
    bounds = [(0, 1), (1, 1 + n)]
    pos = 1 + n
    for k in range(2, system.rank + 1):
        d = system.component(k).dim
        names.extend(f"u{k}_{i}" for i in range(1, d + 1))
        bounds.append((pos, pos + d))
        pos += d
    return EulerModel(system, VarContext(tuple(names)), tuple(bounds))


def phi_eval(model: EulerModel, t, w: Sequence) -> ProjectivePoint:
    """Value of the defining map at [t : w]."""
    t = Fraction(t)
    w = tuple(Fraction(c) for c in w)
    r = model.rank
    coords = [t**r]
    coords.extend(t ** (r - 1) * wi for wi in w)
    for k in range(2, r + 1):
        scale = t ** (r - k)
        coords.extend(scale * evaluate(b, w) for b in model.system.component(k).basis)
    if not any(coords):
        raise ValueError("the defining map is undefined here (indeterminacy point)")
    return ProjectivePoint(coords)


def euler_act(model: EulerModel, lam, z: ProjectivePoint) -> ProjectivePoint:
    """Torus action: weight 0 on the t block, weight k on the degree-k block."""
    lam = Fraction(lam)
    if not lam:
        raise ValueError("torus elements are nonzero scalars")
    out = list(z.coords)
    for k in range(1, model.rank + 1):
        start, stop = model.block_bounds[k]
        for i in range(start, stop):
            out[i] *= lam**k
    return ProjectivePoint(out)


def group_act(model: EulerModel, v: Sequence, z: ProjectivePoint) -> ProjectivePoint:
    """Translation action of v in W on an arbitrary ambient point."""
    ctx = model.system.context
    v = tuple(Fraction(c) for c in v)
    if len(v) != ctx.n:
        raise ValueError(f"translation vector needs {ctx.n} coordinates")
    t = z[0]
    w = model.block(z, 1)
    out = [t]
    out.extend(wi + t * vi for wi, vi in zip(w, v))
    for k in range(2, model.rank + 1):
        fblocks = {l: model.block(z, l) for l in range(2, k + 1)}
        for phi in model.system.component(k).basis:
            # contraction chain: chain[j] = j-fold contraction of phi by v
            chain = [phi]
            for _ in range(k):
                chain.append(contract(chain[-1], v))
            value = Fraction(0)
            for l in range(2, k + 1):
                coords = model.system.component(l).coordinates_of(chain[k - l])
                if coords is None:
                    raise AssertionError(
                        "closure violated: contraction left its component")
                value += comb(k, l) * sum(
                    fi * ci for fi, ci in zip(fblocks[l], coords))
            value += k * evaluate(chain[k - 1], w)
            value += t * chain[k].constant_value()
            out.append(value)
    return ProjectivePoint(out)


def orbit_curve_degree(model: EulerModel, w: Sequence) -> int:
    """Degree of the closed-up torus orbit through the translation of o by w.

    Equals the largest k whose dual block (b^k_i(w)) is nonzero; the
    curve is [1 : s*w : s^2 iota_w^2 : ... ] in the blocked coordinates.
    """
    w = tuple(Fraction(c) for c in w)
    if not any(w):
        raise ValueError("orbit direction must be a nonzero vector")
    for k in range(model.rank, 1, -1):
        if any(evaluate(b, w) for b in model.system.component(k).basis):
            return k
    return 1


def orbit_degree_profile(model: EulerModel, directions: Sequence[Sequence]) -> list[int]:
    return [orbit_curve_degree(model, w) for w in directions]


def recover_symbols(model: EulerModel) -> SymbolSystem:
    """Re-read the graded system from the chart coordinate functions."""
    ctx = model.system.context
    graded: dict[int, list[Polynomial]] = {}
    for f in model.chart_functions():
        d = f.homogeneous_degree()
        if d >= 2:
            graded.setdefault(d, []).append(f)
    return assemble(ctx, model.rank, graded)


def random_ambient_point(model: EulerModel, rng: random.Random) -> ProjectivePoint:
    """Arbitrary ambient point; in general nowhere near the model."""
    while True:
        coords = [sampling.rational(rng) for _ in range(model.ambient_dim)]
        if any(coords):
            return ProjectivePoint(coords)


def random_image_point(model: EulerModel, rng: random.Random) -> ProjectivePoint:
    t = sampling.nonzero_rational(rng)
    w = sampling.vector(rng, model.system.context.n)
    return phi_eval(model, t, w)


def implicitize(model: EulerModel, degree: int, samples: int | None = None,
                seed: int = 0) -> FormSpace:
    """Degree-d forms vanishing on the model, by exact interpolation.

    Seeded random image points give linear conditions; the kernel is
    then re-verified at twice as many fresh image points, and a failed
    verification raises instead of returning an undertrained space.
    """
    monos = monomials_of_degree(model.ambient, degree)
    need = len(monos)
    if samples is None:
        samples = need + 5
    if samples < need:
        raise ValueError(
            f"{samples} samples cannot pin down {need} monomial coefficients")
    rng = random.Random(seed)
    points = [random_image_point(model, rng) for _ in range(samples)]
    space = vanishing_space(model.ambient, degree, [p.coords for p in points])
    fresh = [random_image_point(model, rng) for _ in range(2 * samples)]
    for g in space.basis:
        for p in fresh:
            if evaluate(g, p.coords):
                raise InsufficientSamplesError(
                    f"degree-{degree} interpolation failed verification; "
                    "rerun with more samples")
    return space
