"""Bundled demonstration instances and reproducible random instance
generation.

The bundled pair lives on the segment x(t) = (1-t, t), t in [0,1], cut at
the breakpoints 0, 1/5, 2/5, 3/5, 4/5, 1 into three closed sectors: the two
outer sectors and the middle one.  Pointing the outer pair negatively gives
a nonconvex K whose base hull overlaps the middle sector's hull (the
separation hypotheses fail there in a certifiable way); swapping the roles
gives a strictly separable instance.  The default gauge is the inscribed
16-gon norm, which keeps every verdict exact and rational.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from fractions import Fraction

from .errors import InstanceParseError, NotNormlike
from .numerics import Functional, Vector, rat, rat_str
from .polyhedra import ConeUnion, ConvexConePiece, base_polytope
from .seminorms import (
    PolyhedralSeminorm,
    regular_polygon_norm,
    seminorm_from_json,
    seminorm_to_json,
)
from .separation import VARIANTS, SeparationProblem


def segment_ray(t: Fraction) -> Vector:
    """The ray direction (1-t, t) on the unit simplex edge."""
    return Vector([1 - t, t])


def sector(lo: Fraction, hi: Fraction) -> ConvexConePiece:
    return ConvexConePiece([segment_ray(rat(lo)), segment_ray(rat(hi))])


def outer_pair_cone(negate: bool = True, name: str = "") -> ConeUnion:
    """Union of the two outer sectors (t in [0,1/5] and [4/5,1]), optionally
    negated."""
    pieces = [sector(Fraction(0), Fraction(1, 5)), sector(Fraction(4, 5), Fraction(1))]
    if negate:
        pieces = [p.negated() for p in pieces]
    return ConeUnion(pieces, name=name)


def middle_sector_cone(negate: bool = False, name: str = "") -> ConeUnion:
    piece = sector(Fraction(2, 5), Fraction(3, 5))
    return ConeUnion([piece.negated() if negate else piece], name=name)


@dataclass(frozen=True)
class Instance:
    """A serializable separation problem."""

    dimension: int
    psi: PolyhedralSeminorm
    cone_K: ConeUnion
    cone_A: ConeUnion
    variant: str
    seed: int | None = None
    psi_json: dict | None = None

    def problem(self, variant: str | None = None) -> SeparationProblem:
        return SeparationProblem(
            self.cone_K, self.cone_A, self.psi, variant or self.variant
        )

    def to_json(self) -> dict:
        data = {
            "dimension": self.dimension,
            "seminorm": self.psi_json or seminorm_to_json(self.psi),
            "cone_K": self.cone_K.to_json(),
            "cone_A": self.cone_A.to_json(),
            "variant": self.variant,
        }
        if self.seed is not None:
            data["seed"] = self.seed
        return data


def instance_from_json(data: dict) -> Instance:
    """Parse an instance file with field-addressed errors."""
    if not isinstance(data, dict):
        raise InstanceParseError("$", "instance must be a JSON object")
    try:
        dim = int(data["dimension"])
    except (KeyError, TypeError, ValueError) as exc:
        raise InstanceParseError("dimension", f"bad or missing: {exc}") from exc
    if dim < 1:
        raise InstanceParseError("dimension", "must be a positive integer")
    psi_json = data.get("seminorm")
    if not isinstance(psi_json, dict):
        raise InstanceParseError("seminorm", "missing seminorm object")
    try:
        psi = seminorm_from_json(psi_json, dim)
    except InstanceParseError:
        raise
    except Exception as exc:
        raise InstanceParseError("seminorm", str(exc)) from exc
    if psi.dim != dim:
        raise InstanceParseError(
            "seminorm", f"gauge dimension {psi.dim} differs from {dim}"
        )
    cones = {}
    for key in ("cone_K", "cone_A"):
        spec = data.get(key)
        if not isinstance(spec, dict) or "pieces" not in spec:
            raise InstanceParseError(key, "missing cone object with 'pieces'")
        try:
            cone = ConeUnion.from_json(spec)
        except Exception as exc:
            raise InstanceParseError(key, str(exc)) from exc
        if not cone.is_zero() and cone.dim != dim:
            raise InstanceParseError(key, f"cone dimension differs from {dim}")
        cones[key] = cone
    variant = data.get("variant", "strict")
    if variant not in VARIANTS:
        raise InstanceParseError("variant", f"unknown variant {variant!r}")
    seed = data.get("seed")
    if seed is not None:
        try:
            seed = int(seed)
        except (TypeError, ValueError) as exc:
            raise InstanceParseError("seed", "must be an integer") from exc
    return Instance(
        dimension=dim,
        psi=psi,
        cone_K=cones["cone_K"],
        cone_A=cones["cone_A"],
        variant=variant,
        seed=seed,
        psi_json=psi_json,
    )


def polygon_gauge_json(order: int) -> dict:
    return {"kind": "polygon", "order": order}


def hull_overlap_instance(polygon_order: int = 8) -> Instance:
    """Nonconvex K (negated outer sectors) against the convex middle sector:
    the cones only meet at the origin, yet the base hulls overlap, so only
    the cone-level disjointness holds and the strict driver must refuse."""
    return Instance(
        dimension=2,
        psi=regular_polygon_norm(polygon_order),
        cone_K=outer_pair_cone(negate=True, name="outer-pair-negated"),
        cone_A=middle_sector_cone(name="middle-sector"),
        variant="strict",
        psi_json=polygon_gauge_json(polygon_order),
    )


def strictly_separable_instance(polygon_order: int = 8) -> Instance:
    """Mirrored roles: convex K (negated middle sector) against the
    nonconvex union of the outer sectors; the base hulls are disjoint and a
    strict conical certificate exists."""
    return Instance(
        dimension=2,
        psi=regular_polygon_norm(polygon_order),
        cone_K=middle_sector_cone(negate=True, name="middle-sector-negated"),
        cone_A=outer_pair_cone(negate=False, name="outer-pair"),
        variant="strict",
        psi_json=polygon_gauge_json(polygon_order),
    )


def orthant_fixture_instance() -> Instance:
    """The desk fixture: K the nonnegative quadrant, A a ray below it."""
    from .seminorms import linf_gauge

    return Instance(
        dimension=2,
        psi=linf_gauge(2),
        cone_K=ConeUnion(
            [ConvexConePiece([Vector([1, 0]), Vector([0, 1])])], name="quadrant"
        ),
        cone_A=ConeUnion([ConvexConePiece([Vector([2, -1])])], name="ray"),
        variant="strict",
        psi_json={"kind": "linf"},
    )


BUNDLED = {
    "hull-overlap": hull_overlap_instance,
    "strictly-separable": strictly_separable_instance,
    "orthant": orthant_fixture_instance,
}


# ---------------------------------------------------------------------------
# Random instances
# ---------------------------------------------------------------------------


def random_vector(rng: random.Random, n: int, span: int = 3) -> Vector:
    return Vector([Fraction(rng.randint(-span, span)) for _ in range(n)])


def random_cone(
    rng: random.Random,
    n: int,
    pieces: int,
    generators: int,
    require_pointed: bool | None = None,
    gauge=None,
    max_tries: int = 200,
) -> ConeUnion:
    """A nontrivial random cone union; optionally filtered for pointedness
    and for a normlike base under the given gauge."""
    for _ in range(max_tries):
        ps = []
        for _ in range(pieces):
            gens = [random_vector(rng, n) for _ in range(generators)]
            gens = [g for g in gens if not g.is_zero()]
            if gens:
                ps.append(ConvexConePiece(gens))
        if not ps:
            continue
        cone = ConeUnion(ps)
        if cone.is_zero() or not cone.is_nontrivial():
            continue
        if require_pointed is not None and cone.is_pointed() != require_pointed:
            continue
        if gauge is not None:
            try:
                base_polytope(cone, gauge)
            except NotNormlike:
                continue
        return cone
    raise RuntimeError("random cone generation exhausted its attempt budget")


def random_instance(
    seed: int,
    n: int = 2,
    pieces: int = 1,
    generators: int = 3,
    variant: str = "strict",
    request: str | None = None,
    max_tries: int = 500,
):
    """Reproducible random instance; with ``request`` set, rejection-sample
    until the requested hypothesis class holds (returns None when the budget
    is exhausted)."""
    from .seminorms import linf_gauge
    from .separation import check_hypotheses

    rng = random.Random(seed)
    gauge = linf_gauge(n)
    for _ in range(max_tries):
        try:
            K = random_cone(rng, n, pieces, generators, require_pointed=True, gauge=gauge)
            A = random_cone(rng, n, pieces, generators, gauge=gauge)
        except RuntimeError:
            continue
        inst = Instance(
            dimension=n,
            psi=gauge,
            cone_K=K,
            cone_A=A,
            variant=variant,
            seed=seed,
            psi_json={"kind": "linf"},
        )
        if request is None:
            return inst
        try:
            problem = inst.problem(request)
            if check_hypotheses(problem).passed:
                return inst
        except Exception:
            continue
    return None
