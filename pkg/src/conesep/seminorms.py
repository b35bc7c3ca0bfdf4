"""Polyhedral seminorms and sublinear functions: maxima of finitely many
linear functionals.

All gauges here are piecewise linear so that every level-set computation
stays exact.  A symmetric generator set (c in the set iff -c is) makes the
max automatically nonnegative and symmetric, i.e. a seminorm; its kernel is
the joint kernel of the generators.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from typing import Iterable, Sequence

from .errors import (
    BadOrder,
    DimensionMismatch,
    EmptyFamily,
    NotSolid,
    NotSymmetric,
    OriginNotInterior,
    ZeroFunctional,
)
from .numerics import (
    GE,
    LE,
    ONE,
    ZERO,
    Functional,
    Optimal,
    Vector,
    nullspace_basis,
    rat,
    solve_lp,
)
from .polyhedra import polytope_facets, primitive


@dataclass(frozen=True)
class SublinearFunction:
    """psi(x) = max over generators c of c(x): positively homogeneous and
    subadditive by construction."""

    generators: tuple[Functional, ...]

    def __init__(self, generators: Iterable[Functional]) -> None:
        gens = tuple(generators)
        if not gens:
            raise EmptyFamily("a sublinear function needs at least one generator")
        dims = {g.dim for g in gens}
        if len(dims) != 1:
            raise DimensionMismatch(f"generator dimensions differ: {dims}")
        object.__setattr__(self, "generators", gens)

    @property
    def dim(self) -> int:
        return self.generators[0].dim

    def __call__(self, x: Vector) -> Fraction:
        if x.dim != self.dim:
            raise DimensionMismatch(f"dim {x.dim} vs gauge dim {self.dim}")
        return max(c(x) for c in self.generators)

    def to_json(self) -> dict:
        return {
            "kind": "custom",
            "generators": [c.to_json() for c in self.generators],
        }


class PolyhedralSeminorm(SublinearFunction):
    """A sublinear max-of-linear gauge whose generator set is symmetric,
    hence psi(x) = psi(-x) >= 0 for all x."""

    def __init__(self, generators: Iterable[Functional]) -> None:
        gens = _canonical_symmetric(generators)
        super().__init__(gens)

    @property
    def kernel_dim(self) -> int:
        return len(self.kernel_basis())

    def kernel_basis(self) -> list[Vector]:
        """Basis of K_psi = {x : psi(x) = 0}, the joint kernel of the
        generators."""
        return nullspace_basis(list(self.generators), self.dim)

    def unit_ball_vertices(self) -> list[Vector]:
        """Vertices of {psi <= 1} (requires psi to be a norm)."""
        from .polyhedra import vertex_enumeration

        return vertex_enumeration([(c, ONE) for c in self.generators])


def _canonical_symmetric(generators: Iterable[Functional]) -> tuple[Functional, ...]:
    gens = list(generators)
    if not gens:
        raise EmptyFamily("a seminorm needs at least one generator")
    keys = {tuple(c.coeffs) for c in gens}
    for c in gens:
        if tuple((-c).coeffs) not in keys:
            raise NotSymmetric(f"generator {c!r} lacks its negation")
    deduped = []
    seen = set()
    for c in sorted(gens, key=lambda c: c.coeffs.coords):
        if c.coeffs.coords not in seen:
            seen.add(c.coeffs.coords)
            deduped.append(c)
    return tuple(deduped)


def evaluate(psi: SublinearFunction, x: Vector) -> Fraction:
    """Exact gauge value max_j c_j(x)."""
    return psi(x)


def abs_functional_seminorm(x_star: Functional) -> PolyhedralSeminorm:
    """psi(x) = |x*(x)|; a seminorm, and never a norm in dimension > 1."""
    if x_star.is_zero():
        raise ZeroFunctional("|x*| needs a nonzero functional")
    return PolyhedralSeminorm([x_star, -x_star])


@lru_cache(maxsize=None)
def linf_gauge(dim: int) -> PolyhedralSeminorm:
    gens = []
    for i in range(dim):
        e = Functional(Vector.unit(dim, i))
        gens.extend([e, -e])
    return PolyhedralSeminorm(gens)


@lru_cache(maxsize=None)
def l1_gauge(dim: int) -> PolyhedralSeminorm:
    gens = []
    for signs in _sign_patterns(dim):
        gens.append(Functional(Vector(signs)))
    return PolyhedralSeminorm(gens)


def _sign_patterns(dim: int):
    if dim == 0:
        yield []
        return
    for rest in _sign_patterns(dim - 1):
        yield [ONE] + rest
        yield [-ONE] + rest


def minkowski_norm_from_ball(ball_vertices: Sequence[Vector]) -> PolyhedralSeminorm:
    """Gauge of a symmetric polytope with the origin interior: the generators
    are the polar polytope's vertices, so evaluate(x) = inf{t>0 : x in t*B}.
    """
    if not ball_vertices:
        raise EmptyFamily("ball vertex list must be nonempty")
    verts = [v if isinstance(v, Vector) else Vector(v) for v in ball_vertices]
    keys = {v.coords for v in verts}
    for v in verts:
        if (-v).coords not in keys:
            raise NotSymmetric(f"ball vertex {v!r} lacks its negation")
    n = verts[0].dim
    if not _origin_interior(verts, n):
        raise OriginNotInterior("the ball must absorb the space")
    gens = []
    for f, b in polytope_facets(verts):
        if b <= 0:
            raise OriginNotInterior("a facet passes through or excludes the origin")
        gens.append(Functional(f.coeffs.scale(ONE / b)))
    return PolyhedralSeminorm(gens)


def _origin_interior(verts: list[Vector], n: int) -> bool:
    # 0 interior to conv(verts) iff weights with all barycentric margin > 0.
    k = len(verts)
    width = k + 1
    constraints = []
    for j in range(n):
        row = [v[j] for v in verts] + [ZERO]
        constraints.append((Functional(Vector(row)), "=", ZERO))
    constraints.append((Functional(Vector([ONE] * k + [ZERO])), "=", ONE))
    for i in range(k):
        row = [ZERO] * width
        row[i] = ONE
        row[k] = -ONE
        constraints.append((Functional(Vector(row)), GE, ZERO))  # w_i >= t
    constraints.append((Functional(Vector.unit(width, k)), LE, ONE))
    out = solve_lp(Functional(Vector.unit(width, k)), constraints, "max")
    return isinstance(out, Optimal) and out.value > 0


def psi_max(psi: SublinearFunction) -> PolyhedralSeminorm:
    """Symmetrization max(psi(x), psi(-x)): the generator set closed under
    negation."""
    gens = list(psi.generators) + [-c for c in psi.generators]
    return PolyhedralSeminorm(gens)


def psi_sum(psi: SublinearFunction) -> PolyhedralSeminorm:
    """Symmetrization psi(x) + psi(-x) in max-of-linear form: generators are
    all differences c_i - c_j."""
    gens = [
        ci - cj for ci in psi.generators for cj in psi.generators
    ]
    return PolyhedralSeminorm(gens)


def gerstewitz_from_solid_cone(minusK_facets: Sequence[Functional]) -> SublinearFunction:
    """The sublinear cone representative psi(x) = max_i a_i(x) for a solid
    convex cone given as -K = {x : a_i(x) <= 0}: then {psi <= 0} = -K and
    {psi < 0} = int(-K)."""
    facets = list(minusK_facets)
    if not facets:
        raise EmptyFamily("facet list must be nonempty")
    n = facets[0].dim
    # Solidity: a point with every a_i strictly negative must exist.
    width = n + 1
    constraints = []
    for a in facets:
        row = [-c for c in a.coeffs] + [-ONE]
        constraints.append((Functional(Vector(row)), GE, ZERO))  # a(x) <= -t
    for j in range(n):
        constraints.append((Functional(Vector.unit(width, j)), LE, ONE))
        constraints.append((Functional(Vector.unit(width, j)), GE, -ONE))
    constraints.append((Functional(Vector.unit(width, n)), LE, ONE))
    out = solve_lp(Functional(Vector.unit(width, n)), constraints, "max")
    if not (isinstance(out, Optimal) and out.value > 0):
        raise NotSolid("the facet system has an empty interior")
    return SublinearFunction(facets)


def sup_family(family: Sequence[PolyhedralSeminorm]) -> PolyhedralSeminorm:
    """Pointwise supremum of finitely many polyhedral seminorms: the union of
    their generator sets."""
    members = list(family)
    if not members:
        raise EmptyFamily("the family must be nonempty")
    gens = [c for s in members for c in s.generators]
    return PolyhedralSeminorm(gens)


@lru_cache(maxsize=None)
def regular_polygon_norm(m: int) -> PolyhedralSeminorm:
    """Planar norm whose unit ball is a 2m-gon inscribed in the unit circle.

    Ball vertices come from the rational circle parametrization
    ((1-t^2)/(1+t^2), 2t/(1+t^2)) at t = k/(m-k) for k = 0..m-1 (sweeping the
    first two quadrants), symmetrized.  m = 2 gives the cross-polytope gauge;
    growing m tightens the gauge towards the Euclidean norm from above.
    """
    if m < 2:
        raise BadOrder("polygon order must be at least 2")
    verts: list[Vector] = []
    for k in range(m):
        t = Fraction(k, m - k)
        denom = 1 + t * t
        p = Vector([(1 - t * t) / denom, 2 * t / denom])
        verts.append(p)
        verts.append(-p)
    deduped = []
    seen = set()
    for v in verts:
        if v.coords not in seen:
            seen.add(v.coords)
            deduped.append(v)
    return minkowski_norm_from_ball(deduped)


def is_norm(psi: PolyhedralSeminorm) -> bool:
    """True iff the gauge vanishes only at the origin (trivial joint kernel)."""
    return not nullspace_basis(list(psi.generators), psi.dim)


def seminorm_to_json(psi: SublinearFunction) -> dict:
    return {"kind": "custom", "generators": [c.to_json() for c in psi.generators]}


def seminorm_from_json(data: dict, dim: int) -> PolyhedralSeminorm:
    """Build a gauge from instance JSON: {"kind": ..., "generators": [...],
    "order": m}."""
    kind = data.get("kind", "custom")
    if kind == "linf":
        return linf_gauge(dim)
    if kind == "l1":
        return l1_gauge(dim)
    if kind == "polygon":
        return regular_polygon_norm(int(data["order"]))
    if kind == "abs":
        rows = data["generators"]
        return abs_functional_seminorm(Functional(Vector.from_json(rows[0])))
    if kind == "minkowski":
        return minkowski_norm_from_ball(
            [Vector.from_json(v) for v in data["generators"]]
        )
    if kind == "psi_max":
        base = SublinearFunction(
            [Functional(Vector.from_json(c)) for c in data["generators"]]
        )
        return psi_max(base)
    if kind == "custom":
        return PolyhedralSeminorm(
            [Functional(Vector.from_json(c)) for c in data["generators"]]
        )
    raise ValueError(f"unknown seminorm kind {kind!r}")
