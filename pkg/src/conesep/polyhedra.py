"""Exact polyhedral cone computation: V/H conversion, unions of convex
pieces, lineality, duality, base polytopes, and boundary extraction.

A (possibly nonconvex) cone is a finite union of closed convex polyhedral
pieces, each given by generators (V-representation).  Facet systems are
recovered by an exact double-description conversion that enumerates
candidate supporting hyperplanes spanned by generator subsets; at desk scale
(dimension <= 8, <= 16 generators per piece) this is fast and its output is
provably complete and irredundant.

Facet convention for cones: a functional ``f`` in a facet list means
``f(x) >= 0``.  Non-full-dimensional cones carry opposite facet pairs that
pin their linear span.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from fractions import Fraction
from functools import cached_property
from math import comb, gcd
from typing import TYPE_CHECKING, Iterable, Sequence

from .errors import (
    DegenerateInput,
    DimensionMismatch,
    DimensionTooLarge,
    NontrivialityViolated,
    NotNormlike,
    NotSolid,
    UnboundedPolyhedron,
    UnsupportedOverlap,
)
from .numerics import (
    EQ,
    GE,
    LE,
    ONE,
    ZERO,
    Functional,
    HullMembership,
    Optimal,
    Unbounded,
    Vector,
    matrix_rank,
    nullspace_basis,
    point_in_hull,
    rat,
    rref,
    solve_lp,
    span_basis,
)

if TYPE_CHECKING:  # gauges are duck-typed at runtime to avoid an import cycle
    from .seminorms import PolyhedralSeminorm

MAX_DIMENSION = 8
_ENUMERATION_CAP = 400_000


def primitive(v: Vector) -> Vector:
    """Scale to the unique integer vector with coprime entries, keeping sign."""
    denoms = [c.denominator for c in v]
    lcm = 1
    for d in denoms:
        lcm = lcm * d // gcd(lcm, d)
    ints = [int(c * lcm) for c in v]
    g = 0
    for a in ints:
        g = gcd(g, abs(a))
    if g == 0:
        return Vector.zero(v.dim)
    return Vector([Fraction(a, g) for a in ints])


def _dedupe(vectors: Iterable[Vector]) -> list[Vector]:
    seen = set()
    out = []
    for v in vectors:
        key = v.coords
        if key not in seen:
            seen.add(key)
            out.append(v)
    return out


def double_description(generators: Sequence[Vector]) -> list[Functional]:
    """Complete, irredundant facet system of the conic hull of the generators.

    The returned functionals satisfy ``cone(generators) = {x : f(x) >= 0}``.
    For a cone of dimension d inside a larger space the system contains the
    +/- pairs pinning the span plus one functional per facet.
    """
    if not generators:
        raise DegenerateInput("generator list must be nonempty")
    n = generators[0].dim
    if n > MAX_DIMENSION:
        raise DimensionTooLarge(f"dimension {n} exceeds cap {MAX_DIMENSION}")
    gens = [primitive(g) for g in generators if not g.is_zero()]
    gens = _dedupe(gens)
    if not gens:
        # The zero cone: pinned by +/- all coordinate functionals.
        out = []
        for i in range(n):
            e = Functional(Vector.unit(n, i))
            out.extend([e, -e])
        return out

    span = span_basis(gens)
    d = len(span)
    facets: list[Functional] = []
    for w in nullspace_basis([Vector(list(v)) for v in gens], n):
        f = Functional(primitive(w))
        facets.extend([f, -f])
    if d == 0:
        return facets

    if comb(len(gens), d - 1) > _ENUMERATION_CAP:
        raise DimensionTooLarge(
            f"facet enumeration over C({len(gens)},{d - 1}) combinations refused"
        )

    seen: set[tuple] = set()
    for subset in itertools.combinations(gens, d - 1):
        # Normals orthogonal to the subset, within the span of the cone.
        kernel = nullspace_basis(list(subset) + _complement_rows(span, n), n)
        if len(kernel) != 1:
            continue
        f = Functional(primitive(kernel[0]))
        signs = [f(g) for g in gens]
        if all(s >= 0 for s in signs):
            cand = f
        elif all(s <= 0 for s in signs):
            cand = -f
        else:
            continue
        key = primitive(cand.coeffs).coords
        if key not in seen:
            seen.add(key)
            facets.append(Functional(Vector(key)))
    return facets


def _complement_rows(span: list[Vector], n: int) -> list[Vector]:
    """Rows whose kernel is exactly span(span): a basis of the orthogonal
    complement, so candidate normals are confined to the cone's span."""
    if not span:
        return [Vector.unit(n, i) for i in range(n)]
    return nullspace_basis(span, n)


def cone_generators_from_facets(facets: Sequence[Functional]) -> list[Vector]:
    """Generators of ``{x : f(x) >= 0 for all f}``.

    By conic duality this is the same conversion as :func:`double_description`
    applied to the facet coefficient vectors: the dual of the cone spanned by
    the rows is generated by that cone's facet normals.
    """
    if not facets:
        raise DegenerateInput("facet list must be nonempty (use the whole space)")
    rows = [Vector(list(f.coeffs)) for f in facets]
    n = rows[0].dim
    nonzero = [r for r in rows if not r.is_zero()]
    if not nonzero:
        out = []
        for i in range(n):
            e = Vector.unit(n, i)
            out.extend([e, -e])
        return out
    dual_facets = double_description(nonzero)
    return [primitive(f.coeffs) for f in dual_facets]


def vertex_enumeration(
    facets: Sequence[tuple[Functional, Fraction]]
) -> list[Vector]:
    """All vertices of the polytope ``{x : f(x) <= b}``.

    Boundedness is decided first through the recession cone {x : f(x) <= 0}:
    a nonzero recession direction of a nonempty system raises
    UnboundedPolyhedron, an infeasible one yields an empty vertex list.
    Each vertex returned is tight on at least n linearly independent
    constraints.
    """
    if not facets:
        raise DegenerateInput("facet list must be nonempty")
    n = facets[0][0].dim
    recession = cone_generators_from_facets([-f for f, _ in facets])
    if any(not g.is_zero() for g in recession):
        constraints = [(f, LE, rat(b)) for f, b in facets]
        feas = solve_lp(Functional(Vector.zero(n)), constraints, "min")
        if not isinstance(feas, Optimal):
            return []  # infeasible: bounded vacuously, no vertices
        raise UnboundedPolyhedron("the feasible set has a nonzero recession ray")

    m = len(facets)
    if comb(m, n) > _ENUMERATION_CAP:
        raise DimensionTooLarge(
            f"vertex enumeration over C({m},{n}) combinations refused"
        )
    rows = [[rat(c) for c in f.coeffs] for f, _ in facets]
    rhs = [rat(b) for _, b in facets]
    vertices: list[Vector] = []
    seen: set[tuple] = set()
    from .numerics import solve_square

    for subset in itertools.combinations(range(m), n):
        mat = [rows[i] for i in subset]
        b = [rhs[i] for i in subset]
        sol = solve_square(mat, b)
        if sol is None:
            continue
        x = Vector(sol)
        if x.coords in seen:
            continue
        if all(Functional(Vector(rows[i]))(x) <= rhs[i] for i in range(m)):
            seen.add(x.coords)
            vertices.append(x)
    return vertices


def polytope_facets(vertices: Sequence[Vector]) -> list[tuple[Functional, Fraction]]:
    """Facet system ``f(x) <= b`` of the convex hull of the given points,
    via double description of the homogenization cone."""
    if not vertices:
        raise DegenerateInput("vertex list must be nonempty")
    n = vertices[0].dim
    lifted = [Vector(list(v.coords) + [ONE]) for v in vertices]
    out = []
    for f in double_description(lifted):
        coeffs = list(f.coeffs)
        normal, offset = coeffs[:n], coeffs[n]
        if all(c == 0 for c in normal):
            continue  # the recession facet t >= 0 carries no x-information
        out.append((Functional(Vector([-c for c in normal])), offset))
    return out


# ---------------------------------------------------------------------------
# Convex pieces and unions
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class ConvexConePiece:
    """Closed convex polyhedral cone given by generators; the facet system is
    derived once and cached."""

    generators: tuple[Vector, ...]

    def __init__(self, generators: Iterable) -> None:
        coerced = [g if isinstance(g, Vector) else Vector(g) for g in generators]
        gens = _dedupe(primitive(g) for g in coerced if not g.is_zero())
        gens.sort(key=lambda v: v.coords)
        gens = _irredundant(gens)
        object.__setattr__(self, "generators", tuple(gens))

    @property
    def dim(self) -> int:
        if not self.generators:
            raise DegenerateInput("zero cone piece carries no dimension")
        return self.generators[0].dim

    @cached_property
    def facets(self) -> tuple[Functional, ...]:
        return tuple(double_description(list(self.generators)))

    @cached_property
    def rank(self) -> int:
        return matrix_rank(list(self.generators)) if self.generators else 0

    def is_zero(self) -> bool:
        return not self.generators

    def is_solid(self, ambient_dim: int | None = None) -> bool:
        if not self.generators:
            return False
        dim = ambient_dim if ambient_dim is not None else self.dim
        return self.rank == dim

    def contains(self, x: Vector) -> bool:
        if self.is_zero():
            return x.is_zero()
        return all(f(x) >= 0 for f in self.facets)

    def contains_interior(self, x: Vector) -> bool:
        if self.is_zero() or not self.facets:
            # A facet-free piece is the whole space; everything is interior.
            return not self.is_zero()
        return all(f(x) > 0 for f in self.facets)

    def negated(self) -> "ConvexConePiece":
        return ConvexConePiece(tuple(-g for g in self.generators))

    def to_json(self) -> dict:
        return {"generators": [g.to_json() for g in self.generators]}


def _irredundant(gens: list[Vector]) -> list[Vector]:
    """Drop generators lying in the conic hull of the others (greedy, in the
    canonical sorted order, so the result is deterministic)."""
    kept = list(gens)
    i = 0
    while i < len(kept):
        g = kept[i]
        others = kept[:i] + kept[i + 1 :]
        if others and _in_conic_hull(others, g):
            kept.pop(i)
        else:
            i += 1
    return kept


def _in_conic_hull(gens: Sequence[Vector], x: Vector) -> bool:
    k = len(gens)
    constraints = []
    n = x.dim
    for j in range(n):
        constraints.append(
            (Functional(Vector([g[j] for g in gens])), EQ, x[j])
        )
    for i in range(k):
        constraints.append((Functional(Vector.unit(k, i)), GE, ZERO))
    out = solve_lp(Functional(Vector.zero(k)), constraints, "min")
    return isinstance(out, Optimal)


@dataclass(frozen=True)
class ConeUnion:
    """A cone represented as a finite union of convex polyhedral pieces."""

    pieces: tuple[ConvexConePiece, ...]
    name: str = ""

    def __init__(self, pieces: Iterable, name: str = "") -> None:
        norm = []
        for p in pieces:
            piece = p if isinstance(p, ConvexConePiece) else ConvexConePiece(p)
            norm.append(piece)
        if not norm:
            raise DegenerateInput("a cone union needs at least one piece")
        dims = {p.dim for p in norm if not p.is_zero()}
        if len(dims) > 1:
            raise DimensionMismatch(f"pieces of mixed dimensions {dims}")
        object.__setattr__(self, "pieces", tuple(norm))
        object.__setattr__(self, "name", name)

    @property
    def dim(self) -> int:
        for p in self.pieces:
            if not p.is_zero():
                return p.dim
        raise DegenerateInput("all pieces are the zero cone")

    def all_generators(self) -> list[Vector]:
        return _dedupe(g for p in self.pieces for g in p.generators)

    def is_zero(self) -> bool:
        return all(p.is_zero() for p in self.pieces)

    def contains(self, x: Vector) -> bool:
        if self.is_zero():
            return x.is_zero()
        return any(p.contains(x) for p in self.pieces)

    def negated(self) -> "ConeUnion":
        label = self.name and f"-({self.name})"
        return ConeUnion([p.negated() for p in self.pieces], name=label)

    def is_solid(self) -> bool:
        """A finite union of closed convex sets is solid iff some member is
        (Baire), so per-piece rank decides exactly."""
        if self.is_zero():
            return False
        n = self.dim
        return any(p.is_solid(n) for p in self.pieces)

    @cached_property
    def lineality_info(self) -> "LinealityInfo":
        return _lineality(self)

    def is_pointed(self) -> bool:
        return self.lineality_info.pointed

    def equals_whole_space(self) -> bool:
        if self.is_zero():
            return False
        n = self.dim
        if not self.is_solid():
            return False
        for p in self.pieces:
            if p.is_solid(n) and not p.facets:
                return True
        # Fast negative probe: any point outside the union settles it.
        for probe in _probe_points(n):
            if not self.contains(probe):
                return False
        basis = [Vector.unit(n, i) for i in range(n)]
        return _union_covers_subspace(list(self.pieces), basis, n)

    def is_nontrivial(self) -> bool:
        return not self.is_zero() and not self.equals_whole_space()

    def require_nontrivial(self) -> None:
        if not self.is_nontrivial():
            raise NontrivialityViolated(
                f"cone {self.name or '<unnamed>'} must satisfy {{0}} != K != E"
            )

    def to_json(self) -> dict:
        data = {"pieces": [p.to_json() for p in self.pieces]}
        if self.name:
            data["name"] = self.name
        return data

    @staticmethod
    def from_json(data: dict) -> "ConeUnion":
        pieces = [
            ConvexConePiece([Vector.from_json(g) for g in p["generators"]])
            for p in data["pieces"]
        ]
        return ConeUnion(pieces, name=data.get("name", ""))


def _probe_points(n: int) -> list[Vector]:
    probes = []
    for i in range(n):
        probes.append(Vector.unit(n, i))
        probes.append(-Vector.unit(n, i))
    probes.append(Vector([ONE] * n))
    probes.append(Vector([-ONE] * n))
    for i in range(n):
        coords = [ONE] * n
        coords[i] = -ONE
        probes.append(Vector(coords))
    return probes


@dataclass(frozen=True)
class LinealityInfo:
    cone: ConeUnion
    pointed: bool
    is_subspace: bool
    subspace_basis: tuple[Vector, ...]


def _lineality(K: ConeUnion) -> LinealityInfo:
    """l(K) = K cap (-K) as a union of pairwise piece intersections."""
    n = K.dim if not K.is_zero() else 1
    pieces: list[ConvexConePiece] = []
    for pi in K.pieces:
        if pi.is_zero():
            continue
        for pj in K.pieces:
            if pj.is_zero():
                continue
            facets = list(pi.facets) + [-f for f in pj.facets]
            if not facets:
                gens = []
                for i in range(n):
                    gens.extend([Vector.unit(n, i), -Vector.unit(n, i)])
            else:
                gens = cone_generators_from_facets(facets)
            gens = [g for g in gens if not g.is_zero()]
            if gens:
                piece = ConvexConePiece(gens)
                if all(piece.generators != q.generators for q in pieces):
                    pieces.append(piece)
    if not pieces:
        zero = ConeUnion([ConvexConePiece([])], name="{0}")
        return LinealityInfo(cone=zero, pointed=True, is_subspace=True, subspace_basis=())
    union = ConeUnion(pieces, name="lineality")
    basis = span_basis([g for p in pieces for g in p.generators])
    covered = _union_covers_subspace(pieces, basis, n)
    return LinealityInfo(
        cone=union,
        pointed=False,
        is_subspace=covered,
        subspace_basis=tuple(basis),
    )


def _union_covers_subspace(
    pieces: Sequence[ConvexConePiece], basis: Sequence[Vector], n: int
) -> bool:
    """Exact test for span(basis) being covered by the union of the pieces.

    The complement of the union inside the subspace is an intersection of
    per-piece facet-violation unions; distributing yields one strict
    feasibility LP per choice of violated facet per piece.
    """
    if not basis:
        return True
    sub_rows = nullspace_basis(list(basis), n)  # equalities pinning the span
    active = []
    for p in pieces:
        if p.is_zero():
            continue
        # Facets that can be violated inside the subspace at all.
        relevant = [f for f in p.facets if any(f(b) != 0 for b in basis)]
        if not relevant:
            return True  # this piece alone contains the whole subspace
        active.append(relevant)
    if not active:
        return True
    total = 1
    for fs in active:
        total *= len(fs)
        if total > 4096:
            raise DimensionTooLarge("subspace coverage test too large")
    width = n + 1  # x plus the margin t
    box: list = []
    for j in range(n):
        box.append((Functional(Vector.unit(width, j)), LE, ONE))
        box.append((Functional(Vector.unit(width, j)), GE, -ONE))
    box.append((Functional(Vector.unit(width, n)), LE, ONE))
    eq_rows = [
        (Functional(Vector(list(r.coords) + [ZERO])), EQ, ZERO) for r in sub_rows
    ]
    obj = Functional(Vector.unit(width, n))
    for choice in itertools.product(*active):
        constraints = list(box) + list(eq_rows)
        for f in choice:
            row = [-c for c in f.coeffs] + [-ONE]
            constraints.append((Functional(Vector(row)), GE, ZERO))  # f(x) <= -t
        out = solve_lp(obj, constraints, "max")
        if isinstance(out, Optimal) and out.value > 0:
            return False  # a subspace point strictly outside every piece
    return True


# ---------------------------------------------------------------------------
# Interior membership, duality
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class InteriorVerdict:
    inside: bool
    piece_index: int | None
    caveat: str | None


def interior_membership(K: ConeUnion, x: Vector) -> InteriorVerdict:
    """Per-piece interior test.  For unions this under-approximates the true
    interior; when the point is in the cone but in no single piece's interior
    the verdict is flagged rather than silently wrong."""
    for idx, p in enumerate(K.pieces):
        if not p.is_zero() and p.contains_interior(x):
            return InteriorVerdict(inside=True, piece_index=idx, caveat=None)
    caveat = None
    if len(K.pieces) > 1 and K.contains(x):
        caveat = "per-piece under-approximation"
    return InteriorVerdict(inside=False, piece_index=None, caveat=caveat)


def dual_cone(K: ConeUnion) -> ConvexConePiece:
    """K+ = {y : y(k) >= 0 on K}; its facet system is the generator list of
    all pieces and its generators come from the same double-description
    conversion (duality)."""
    gens = [g for g in K.all_generators() if not g.is_zero()]
    n = K.dim if not K.is_zero() else (gens[0].dim if gens else 1)
    if not gens:
        out = []
        for i in range(n):
            out.extend([Vector.unit(n, i), -Vector.unit(n, i)])
        return ConvexConePiece(out)
    dual_gens = cone_generators_from_facets([Functional(g) for g in gens])
    return ConvexConePiece(dual_gens)


# ---------------------------------------------------------------------------
# Base polytopes
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class BasePolytope:
    """Exact vertex set of conv(B) for B = {x in K : psi(x) = 1}, optionally
    augmented with the origin."""

    vertices: tuple[Vector, ...]
    includes_origin: bool
    cone: ConeUnion
    gauge: object = field(repr=False)

    def hull_points(self) -> list[Vector]:
        return list(self.vertices)

    def nonzero_vertices(self) -> list[Vector]:
        return [v for v in self.vertices if not v.is_zero()]

    def min_of(self, f: Functional) -> tuple[Fraction, Vector]:
        pts = self.nonzero_vertices()
        if not pts:
            raise DegenerateInput("base polytope has no nonzero vertices")
        best = min(pts, key=lambda v: (f(v), v.coords))
        return f(best), best

    def max_of(self, f: Functional) -> tuple[Fraction, Vector]:
        pts = self.nonzero_vertices()
        if not pts:
            raise DegenerateInput("base polytope has no nonzero vertices")
        best = max(pts, key=lambda v: (f(v), tuple(-c for c in v.coords)))
        return f(best), best


def base_polytope(K: ConeUnion, psi, augment_origin: bool = False) -> BasePolytope:
    """Vertices of conv(B_K) (or conv(B_K ∪ {0})) for the gauge's unit sphere
    section of each piece.

    Per piece the polytope ``piece ∩ {psi <= 1}`` is enumerated and the
    vertices on the ``psi = 1`` surface are kept; an unbounded section means
    the gauge vanishes on a nonzero piece direction, i.e. there is no
    normlike base, which raises NotNormlike.
    """
    verts: list[Vector] = []
    for p in K.pieces:
        if p.is_zero():
            continue
        facet_rows: list[tuple[Functional, Fraction]] = [
            (-f, ZERO) for f in p.facets
        ]
        for c in psi.generators:
            facet_rows.append((c, ONE))
        try:
            vertices = vertex_enumeration(facet_rows)
        except UnboundedPolyhedron as exc:
            raise NotNormlike(
                "gauge vanishes on a nonzero direction of a piece; only a "
                "seminorm-base exists"
            ) from exc
        for v in vertices:
            if psi(v) == 1:
                verts.append(v)
    verts = _dedupe(verts)
    verts.sort(key=lambda v: v.coords)
    if augment_origin:
        origin = Vector.zero(K.dim)
        verts = [origin] + [v for v in verts if not v.is_zero()]
    return BasePolytope(
        vertices=tuple(verts),
        includes_origin=augment_origin,
        cone=K,
        gauge=psi,
    )


# ---------------------------------------------------------------------------
# Dual-set membership oracles
# ---------------------------------------------------------------------------


def in_K_plus(K: ConeUnion, x_star: Functional) -> bool:
    return all(x_star(g) >= 0 for g in K.all_generators())


def in_K_sharp(K: ConeUnion, psi, x_star: Functional) -> bool:
    """x* positive on K \\ {0}: the minimum over the base polytope's
    vertices decides exactly (a normlike base must exist)."""
    sk = base_polytope(K, psi, augment_origin=False)
    if not sk.nonzero_vertices():
        raise NontrivialityViolated("K = {0} has no nonzero directions")
    value, _ = sk.min_of(x_star)
    return value > 0


@dataclass(frozen=True)
class ThreeValued:
    verdict: str  # "yes" | "no" | "unsupported"
    witness: Vector | None = None

    def __bool__(self) -> bool:
        return self.verdict == "yes"


def in_K_amp(K: ConeUnion, psi, x_star: Functional, samples: int = 1000) -> ThreeValued:
    """x* positive on K \\ l(K).

    Piece-refined face test: pieces inside l(K) impose nothing; every other
    piece must satisfy ``x* >= 0`` with its zero face contained in l(K).
    A passing test is always sound; the negative direction is exact whenever
    l(K) is a linear subspace (in particular for any single convex piece).
    For nonconvex unions with non-subspace lineality the answer is
    'unsupported' unless seeded sampling finds an explicit violation.
    """
    info = K.lineality_info
    lin = info.cone

    def in_lineality(v: Vector) -> bool:
        return lin.contains(v)

    relevant = []
    for p in K.pieces:
        if p.is_zero():
            continue
        if all(in_lineality(g) for g in p.generators):
            continue  # piece inside l(K): no positivity required on it
        relevant.append(p)
    if not relevant:
        return ThreeValued("yes")

    passes = True
    for p in relevant:
        if not all(x_star(g) >= 0 for g in p.generators):
            passes = False
            break
        face_facets = list(p.facets) + [x_star, -x_star]
        face_gens = [
            g for g in cone_generators_from_facets(face_facets) if not g.is_zero()
        ]
        if not all(in_lineality(g) for g in face_gens):
            passes = False
            break
    if passes:
        return ThreeValued("yes")
    if info.is_subspace:
        return ThreeValued("no")
    # Randomized falsification, deterministic seed; never a silent yes.
    import random

    rng = random.Random(20_10)
    for _ in range(samples):
        p = relevant[rng.randrange(len(relevant))]
        y = Vector.zero(K.dim)
        for g in p.generators:
            y = y + g.scale(Fraction(rng.randint(0, 6)))
        if y.is_zero() or in_lineality(y):
            continue
        if x_star(y) <= 0:
            return ThreeValued("no", witness=y)
    return ThreeValued("unsupported")


# ---------------------------------------------------------------------------
# Base classification
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class BaseClassification:
    kind: str  # "norm-base" | "normlike-base" | "seminorm-base" | "none"
    degenerate_part: ConeUnion | None


def classify_base(K: ConeUnion, psi) -> BaseClassification:
    """Classify B = {x in K : psi(x) = 1} per the base taxonomy: norm gauge,
    gauge positive on K \\ {0}, or a genuine seminorm-base with degenerate
    part K~ = K cap ker(psi)."""
    if K.is_zero():
        return BaseClassification(kind="none", degenerate_part=None)
    n = K.dim
    kernel = nullspace_basis(list(psi.generators), n)
    if not kernel:
        return BaseClassification(kind="norm-base", degenerate_part=None)
    kernel_rows = nullspace_basis(kernel, n)
    degenerate_pieces = []
    for p in K.pieces:
        if p.is_zero():
            continue
        facets = list(p.facets)
        for r in kernel_rows:
            facets.extend([Functional(r), -Functional(r)])
        gens = [g for g in cone_generators_from_facets(facets) if not g.is_zero()]
        if gens:
            degenerate_pieces.append(ConvexConePiece(gens))
    if not degenerate_pieces:
        return BaseClassification(kind="normlike-base", degenerate_part=None)
    if all(psi(g) == 0 for g in K.all_generators()):
        return BaseClassification(
            kind="none",
            degenerate_part=ConeUnion(degenerate_pieces, name="K~"),
        )
    return BaseClassification(
        kind="seminorm-base",
        degenerate_part=ConeUnion(degenerate_pieces, name="K~"),
    )


# ---------------------------------------------------------------------------
# Boundary extraction
# ---------------------------------------------------------------------------


def boundary_cone(A: ConeUnion) -> ConeUnion:
    """The boundary of a solid cone union as a cone (union of facet cones
    whose relative interiors are not interior to the union).

    Dimension 2 supports arbitrary unions by exact circular-arc bookkeeping;
    higher dimensions require pieces meeting only along common faces.
    """
    if A.is_zero():
        raise NontrivialityViolated("boundary of the zero cone is not a cone")
    if not A.is_solid():
        raise NotSolid("boundary extraction requires a solid cone")
    n = A.dim
    if n == 2:
        rays = _boundary_rays_2d(A)
        if not rays:
            raise NontrivialityViolated("the union is the whole plane")
        return ConeUnion([ConvexConePiece([r]) for r in rays], name="boundary")
    return _boundary_nd(A)


def _direction_key(v: Vector):
    """Total circular order on primitive 2D directions (counterclockwise from
    the positive x-axis), exact."""
    x, y = v[0], v[1]
    if y > 0 or (y == 0 and x > 0):
        half = 0
    else:
        half = 1
    # Within a half-turn, order by the tangent x/y-style comparison via cross
    # products against the half's start direction.
    if half == 0:
        start = Vector([ONE, ZERO])
    else:
        start = Vector([-ONE, ZERO])
    cross = start[0] * y - start[1] * x
    dot = start[0] * x + start[1] * y
    # ratio cross/dot increases monotonically along the open half-turn
    if dot > 0:
        return (half, 0, cross / dot)
    if dot == 0:
        return (half, 1, ZERO)
    return (half, 2, cross / dot)


def _ccw_cross(a: Vector, b: Vector) -> Fraction:
    return a[0] * b[1] - a[1] * b[0]


def _piece_arc(p: ConvexConePiece) -> tuple[Vector, Vector] | None:
    """Angular extent [start, end] (CCW, length <= pi) of a solid 2D piece,
    or None when the piece is the whole plane."""
    facets = p.facets
    if not facets:
        return None  # whole plane
    if len(facets) == 1:
        f = facets[0]
        start = primitive(Vector([f.coeffs[1], -f.coeffs[0]]))
        end = -start
        # Orient so the arc sweeps through the halfplane's interior.
        mid = Vector([f.coeffs[0], f.coeffs[1]])
        if _ccw_cross(start, mid) < 0:
            start, end = end, start
        return (start, end)
    # Solid sector: the two extreme rays; order them CCW with cross > 0.
    extremes = [g for g in p.generators]
    best = None
    for a, b in itertools.permutations(extremes, 2):
        if _ccw_cross(a, b) > 0 and all(
            _ccw_cross(a, g) >= 0 and _ccw_cross(g, b) >= 0 for g in extremes
        ):
            best = (a, b)
            break
    if best is None:  # antipodal pair inside: treat as halfplane via facets
        raise UnsupportedOverlap("unexpected 2D piece shape")
    return best


def _arc_contains(start: Vector, end: Vector, d: Vector, *, drop: str = "") -> bool:
    """Whether direction d lies on the CCW arc from start to end, inclusive
    unless ``drop`` removes the 'start' or 'end' endpoint."""
    ks, ke, kd = _direction_key(start), _direction_key(end), _direction_key(d)
    if ks < ke:
        inside = ks <= kd <= ke
    elif ks > ke:  # the arc wraps past the positive x-axis
        inside = kd >= ks or kd <= ke
    else:
        inside = kd == ks
    if not inside:
        return False
    if drop == "start" and kd == ks:
        return False
    if drop == "end" and kd == ke:
        return False
    return True


def _boundary_rays_2d(A: ConeUnion) -> list[Vector]:
    arcs: list[tuple[Vector, Vector]] = []
    for p in A.pieces:
        if p.is_zero():
            continue
        if p.rank == 1:
            for g in p.generators:  # ray: one point-arc; line: two
                arcs.append((g, g))
            continue
        arc = _piece_arc(p)
        if arc is None:
            return []  # a whole-plane piece: empty boundary
        arcs.append((primitive(arc[0]), primitive(arc[1])))
    candidates = _dedupe([d for arc in arcs for d in arc])
    spans = [(s, e) for s, e in arcs if s.coords != e.coords]
    boundary = []
    for d in candidates:
        # Interior directions of the union's angular set are covered on both
        # sides by arcs of positive length.
        ccw_covered = any(_arc_contains(s, e, d, drop="end") for s, e in spans)
        cw_covered = any(_arc_contains(s, e, d, drop="start") for s, e in spans)
        if not (ccw_covered and cw_covered):
            boundary.append(d)
    boundary.sort(key=_direction_key)
    return boundary


def _boundary_nd(A: ConeUnion) -> ConeUnion:
    n = A.dim
    solid_pieces = [p for p in A.pieces if not p.is_zero()]
    _check_facial_intersections(solid_pieces)
    out_pieces: list[ConvexConePiece] = []
    for i, p in enumerate(solid_pieces):
        if not p.is_solid(n):
            for g in p.generators:
                if any(q.contains_interior(g) for j, q in enumerate(solid_pieces) if j != i):
                    raise UnsupportedOverlap(
                        "a lower-dimensional piece dips into another piece's interior"
                    )
            out_pieces.append(p)
            continue
        for f in p.facets:
            face_gens = [
                g
                for g in cone_generators_from_facets(list(p.facets) + [-f])
                if not g.is_zero()
            ]
            if not face_gens:
                continue
            internal = False
            for j, q in enumerate(solid_pieces):
                if j == i or not q.is_solid(n):
                    continue
                neg = primitive((-f).coeffs).coords
                has_opposite = any(primitive(h.coeffs).coords == neg for h in q.facets)
                if has_opposite and all(q.contains(g) for g in face_gens):
                    internal = True
                    break
            if not internal:
                out_pieces.append(ConvexConePiece(face_gens))
    deduped: list[ConvexConePiece] = []
    for p in out_pieces:
        if all(p.generators != q.generators for q in deduped):
            deduped.append(p)
    if not deduped:
        raise NontrivialityViolated("empty boundary: the union is the whole space")
    return ConeUnion(deduped, name="boundary")


def _check_facial_intersections(pieces: Sequence[ConvexConePiece]) -> None:
    for p, q in itertools.combinations(pieces, 2):
        inter = [
            g
            for g in cone_generators_from_facets(list(p.facets) + list(q.facets))
            if not g.is_zero()
        ]
        if not inter:
            continue
        for piece in (p, q):
            if _is_face_of(piece, inter):
                continue
            raise UnsupportedOverlap(
                "pieces overlap non-facially; boundary extraction refused"
            )


def _is_face_of(piece: ConvexConePiece, subcone_gens: list[Vector]) -> bool:
    if all(_in_conic_hull(list(piece.generators), g) for g in subcone_gens):
        if any(all(f(g) == 0 for g in subcone_gens) for f in piece.facets):
            return True
        # the whole piece counts as a (trivial) face of itself
        return all(_in_conic_hull(subcone_gens, g) for g in piece.generators)
    return False


# ---------------------------------------------------------------------------
# Analysis report
# ---------------------------------------------------------------------------


def analyze_cone(K: ConeUnion) -> dict:
    """JSON-ready structural report: pointedness, solidity, lineality, dual."""
    info = K.lineality_info
    dual = dual_cone(K)
    return {
        "name": K.name,
        "dimension": K.dim,
        "pieces": len(K.pieces),
        "convex": len(K.pieces) == 1,
        "pointed": info.pointed,
        "solid": K.is_solid(),
        "nontrivial": K.is_nontrivial(),
        "lineality_generators": [
            g.to_json() for p in info.cone.pieces for g in p.generators
        ],
        "lineality_is_subspace": info.is_subspace,
        "dual_generators": [g.to_json() for g in dual.generators],
    }
