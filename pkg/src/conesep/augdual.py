"""Augmented dual cone membership oracles and Bishop-Phelps-type cones.

An augmented functional is a pair (x*, alpha) with alpha >= 0; it acts
through phi(x) = x*(x) + alpha * psi(x) for an ambient polyhedral gauge psi.
Membership of (x*, alpha) in the augmented dual classes of a cone K reduces,
over a normlike base, to exact vertex minima of x* over the base polytope:

* a+  : min over base vertices >= alpha        (weak nonnegativity on K)
* a#  : min over base vertices >  alpha        (strict positivity off 0)
* a&  : strict positivity off the lineality    (face-containment test)
* a o : strict positivity on the intrinsic core (concavity dichotomy)

The strict classes over nonconvex unions are decided exactly whenever the
lineality set is a linear subspace; otherwise the verdict degrades to a
three-valued 'unsupported' with seeded falsification, never a silent yes.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from fractions import Fraction

from .errors import (
    BadEpsilon,
    DimensionMismatch,
    NoPositiveInfimum,
    NotNormlike,
    NotPointed,
)
from .numerics import ONE, ZERO, Functional, Vector, point_in_hull, rat, rat_str
from .polyhedra import (
    BasePolytope,
    ConeUnion,
    ConvexConePiece,
    ThreeValued,
    base_polytope,
    cone_generators_from_facets,
    primitive,
)

YES, NO, UNSUPPORTED = "yes", "no", "unsupported"


@dataclass(frozen=True)
class AugmentedFunctional:
    x_star: Functional
    alpha: Fraction

    def __init__(self, x_star: Functional, alpha) -> None:
        a = rat(alpha)
        if a < 0:
            raise ValueError("alpha must be nonnegative")
        object.__setattr__(self, "x_star", x_star)
        object.__setattr__(self, "alpha", a)

    def to_json(self) -> dict:
        return {"x_star": self.x_star.to_json(), "alpha": rat_str(self.alpha)}


def phi_eval(aug: AugmentedFunctional, psi, x: Vector) -> Fraction:
    """phi(x) = x*(x) + alpha * psi(x), exactly."""
    if aug.x_star.dim != x.dim:
        raise DimensionMismatch("functional and point dimensions differ")
    return aug.x_star(x) + aug.alpha * psi(x)


def level_set_cone(aug: AugmentedFunctional, psi) -> ConvexConePiece:
    """The zero lower-level set {x : phi(x) <= 0}: a closed convex cone with
    one facet -(x* + alpha c_j) per gauge generator."""
    facets = [-(aug.x_star + c.scale(aug.alpha)) for c in psi.generators]
    gens = [g for g in cone_generators_from_facets(facets) if not g.is_zero()]
    return ConvexConePiece(gens)


def level_set_facets(aug: AugmentedFunctional, psi) -> list[Functional]:
    return [-(aug.x_star + c.scale(aug.alpha)) for c in psi.generators]


def in_lower_level(aug: AugmentedFunctional, psi, x: Vector, strict: bool = False) -> bool:
    value = phi_eval(aug, psi, x)
    return value < 0 if strict else value <= 0


@dataclass(frozen=True)
class AugDualClass:
    """Per-class membership verdicts with the witnessing base vertex (the
    argmin of x* over the base polytope) for failed strict tests."""

    a_plus: str
    a_sharp: str
    a_amp: str
    a_circ: str
    base_min: Fraction
    argmin: Vector
    amp_witness: Vector | None = None

    def to_json(self) -> dict:
        data = {
            "a_plus": self.a_plus,
            "a_sharp": self.a_sharp,
            "a_amp": self.a_amp,
            "a_circ": self.a_circ,
            "base_min": rat_str(self.base_min),
            "argmin": self.argmin.to_json(),
        }
        if self.amp_witness is not None:
            data["amp_witness"] = self.amp_witness.to_json()
        return data


def classify_augmented(
    K: ConeUnion,
    psi,
    aug: AugmentedFunctional,
    base: BasePolytope | None = None,
) -> AugDualClass:
    """Exact augmented-dual classification of (x*, alpha) against K.

    ``base`` may be supplied to reuse a precomputed base polytope of K.
    """
    sk = base if base is not None else base_polytope(K, psi, augment_origin=False)
    if not sk.nonzero_vertices():
        raise NotNormlike("K = {0} has no base")
    x_star, alpha = aug.x_star, aug.alpha
    m, argmin = sk.min_of(x_star)
    a_plus = YES if m >= alpha else NO
    a_sharp = YES if m > alpha else NO
    amp = _classify_amp(K, psi, aug)
    circ = _classify_circ(K, psi, aug, m)
    cls = AugDualClass(
        a_plus=a_plus,
        a_sharp=a_sharp,
        a_amp=amp.verdict,
        a_circ=circ,
        base_min=m,
        argmin=argmin,
        amp_witness=amp.witness,
    )
    _assert_inclusions(cls)
    return cls


def _assert_inclusions(cls: AugDualClass) -> None:
    # a# membership implies both a+ and a& (never a computed 'no').
    if cls.a_sharp == YES:
        assert cls.a_plus == YES, "inclusion a# => a+ violated"
        assert cls.a_amp != NO, "inclusion a# => a& violated"


def _classify_amp(K: ConeUnion, psi, aug: AugmentedFunctional) -> ThreeValued:
    """(x*, alpha) positive residual on K minus the lineality set.

    A violation point exists iff for some piece P and gauge generator c_j the
    cone R_j = P cap {x*(y) <= alpha c_j(y)} reaches outside l(K); when l(K)
    is a subspace, generator containment decides that exactly.
    """
    info = K.lineality_info
    lin = info.cone
    x_star, alpha = aug.x_star, aug.alpha

    def r_cones(piece):
        for c in psi.generators:
            facet = c.scale(alpha) - x_star  # (alpha c - x*)(y) >= 0
            gens = cone_generators_from_facets(list(piece.facets) + [facet])
            yield [g for g in gens if not g.is_zero()]

    if info.is_subspace:
        for piece in K.pieces:
            if piece.is_zero():
                continue
            for gens in r_cones(piece):
                for g in gens:
                    if not lin.contains(g):
                        return ThreeValued(NO, witness=g)
        return ThreeValued(YES)

    # Nonconvex union with non-subspace lineality: sound 'yes' is still
    # available when every violation cone stays inside l(K) piecewise...
    # generator containment in a nonconvex union does not imply cone
    # containment, so only falsification is exact here.
    rng = random.Random(3_104)
    pieces = [p for p in K.pieces if not p.is_zero()]
    for _ in range(1000):
        p = pieces[rng.randrange(len(pieces))]
        y = Vector.zero(K.dim)
        for g in p.generators:
            y = y + g.scale(Fraction(rng.randint(0, 6)))
        if y.is_zero() or lin.contains(y):
            continue
        if x_star(y) - alpha * psi(y) <= 0:
            return ThreeValued(NO, witness=y)
    return ThreeValued(UNSUPPORTED)


def _classify_circ(K: ConeUnion, psi, aug: AugmentedFunctional, base_min: Fraction) -> str:
    """Strict positivity of x* - alpha psi on the intrinsic core.

    For convex K the residual is concave and nonnegative once the base
    minimum reaches alpha, so it is positive on icor K unless it vanishes
    identically; identical vanishing is decided exactly on the generators.
    A nonconvex union has no defined intrinsic core here; seeded per-piece
    interior sampling can only falsify.
    """
    x_star, alpha = aug.x_star, aug.alpha
    if len(K.pieces) == 1:
        if base_min < alpha:
            return NO
        return NO if _residual_vanishes(K, psi, x_star, alpha) else YES
    rng = random.Random(62_03)
    n = K.dim
    solid = [p for p in K.pieces if not p.is_zero() and p.is_solid(n)]
    for _ in range(400):
        if not solid:
            break
        p = solid[rng.randrange(len(solid))]
        y = Vector.zero(n)
        for g in p.generators:
            y = y + g.scale(Fraction(rng.randint(1, 6)))
        if not p.contains_interior(y):
            continue
        if x_star(y) - alpha * psi(y) <= 0:
            return NO
    return UNSUPPORTED


def _residual_vanishes(K: ConeUnion, psi, x_star: Functional, alpha: Fraction) -> bool:
    """Whether x*(y) - alpha psi(y) = 0 for every y in K, decided exactly.

    alpha = 0: x* must kill every generator.  alpha > 0: some gauge generator
    c_j must equal x*/alpha on the cone's span and dominate all other gauge
    generators on the cone.
    """
    gens = K.all_generators()
    if alpha == 0:
        return all(x_star(g) == 0 for g in gens)
    for cj in psi.generators:
        scaled = cj.scale(alpha)
        if all(scaled(g) == x_star(g) for g in gens) and all(
            cj(g) >= ci(g) for ci in psi.generators for g in gens
        ):
            return True
    return False


def witness_a_plus(K: ConeUnion, psi, x_star: Functional) -> AugmentedFunctional:
    """The canonical positive-augmentation witness (x*, c) with c the exact
    minimum of x* over the base polytope; requires that minimum positive."""
    sk = base_polytope(K, psi, augment_origin=False)
    if not sk.nonzero_vertices():
        raise NotNormlike("K = {0} has no base")
    c, argmin = sk.min_of(x_star)
    if c <= 0:
        raise NoPositiveInfimum(
            f"minimum {rat_str(c)} at {argmin!r} is not positive"
        )
    return AugmentedFunctional(x_star=x_star, alpha=c)


def shrink_to_sharp(aug: AugmentedFunctional, eps) -> AugmentedFunctional:
    """Trade augmentation slack for strictness: (x*, alpha - eps) lands in the
    sharp class for any eps in (0, alpha]."""
    e = rat(eps)
    if not (0 < e <= aug.alpha):
        raise BadEpsilon(f"eps must lie in (0, {rat_str(aug.alpha)}]")
    return AugmentedFunctional(x_star=aug.x_star, alpha=aug.alpha - e)


# ---------------------------------------------------------------------------
# Bishop-Phelps-type cones
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class BPCone:
    """C(x*) = {x : x*(x) >= psi(x)}, a closed convex cone with one facet
    (x* - c_j) per gauge generator."""

    x_star: Functional
    psi: object
    cone_facets: tuple[Functional, ...]

    def contains(self, x: Vector) -> bool:
        return self.x_star(x) >= self.psi(x)

    def contains_strict(self, x: Vector) -> bool:
        """The open part C_>(x*): a single exact comparison."""
        return self.x_star(x) > self.psi(x)

    def contains_equality(self, x: Vector) -> bool:
        return self.x_star(x) == self.psi(x)

    def as_piece(self) -> ConvexConePiece:
        gens = [
            g
            for g in cone_generators_from_facets(list(self.cone_facets))
            if not g.is_zero()
        ]
        return ConvexConePiece(gens)


def bp_cone(x_star: Functional, psi) -> BPCone:
    facets = tuple(x_star - c for c in psi.generators)
    return BPCone(x_star=x_star, psi=psi, cone_facets=facets)


@dataclass(frozen=True)
class BPClassification:
    bp_plus: str
    bp_sharp: str
    bp_amp: str
    bp_circ: str

    def to_json(self) -> dict:
        return {
            "bp_plus": self.bp_plus,
            "bp_sharp": self.bp_sharp,
            "bp_amp": self.bp_amp,
            "bp_circ": self.bp_circ,
        }


def bp_class(K: ConeUnion, psi, x_star: Functional) -> BPClassification:
    """K subset C(x*) and friends, through the augmented classification at
    alpha = 1: K in C(x*) iff x* - psi >= 0 on K iff (x*, 1) in K^{a+}."""
    cls = classify_augmented(K, psi, AugmentedFunctional(x_star, ONE))
    return BPClassification(
        bp_plus=cls.a_plus,
        bp_sharp=cls.a_sharp,
        bp_amp=cls.a_amp,
        bp_circ=cls.a_circ,
    )


def is_dilating(K: ConeUnion, psi, x_star: Functional) -> bool:
    """Whether C(x*) dilates K: K pointed and K \\ {0} inside the open part
    C_>(x*), i.e. the base-vertex minimum of x* strictly exceeds 1."""
    if not K.is_pointed():
        raise NotPointed("dilating cones are defined for pointed cones")
    sk = base_polytope(K, psi, augment_origin=False)
    if not sk.nonzero_vertices():
        raise NotNormlike("K = {0} has no base")
    m, _ = sk.min_of(x_star)
    return m > 1


# ---------------------------------------------------------------------------
# Origin exclusion
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class OriginExclusionReport:
    origin_in_hull: bool
    hull_weights: tuple[Fraction, ...] | None
    k_sharp_witness: Functional | None
    cor_aplus_witness: AugmentedFunctional | None

    def to_json(self) -> dict:
        data: dict = {"origin_in_hull": self.origin_in_hull}
        if self.hull_weights is not None:
            data["hull_weights"] = [rat_str(w) for w in self.hull_weights]
        if self.k_sharp_witness is not None:
            data["k_sharp_witness"] = self.k_sharp_witness.to_json()
        if self.cor_aplus_witness is not None:
            data["cor_aplus_witness"] = self.cor_aplus_witness.to_json()
        return data


def origin_exclusion_report(K: ConeUnion, psi) -> OriginExclusionReport:
    """Decide 0 in conv(B_K) with certificates either way.

    Excluded: the separating functional is rescaled so its base minimum is
    exactly 1, giving a K^# witness, and (witness, 1/2) then sits in the
    sharp class with positive augmentation (the interior of the augmented
    dual cone, by the compact-base characterization).
    """
    sk = base_polytope(K, psi, augment_origin=False)
    verts = sk.nonzero_vertices()
    if not verts:
        raise NotNormlike("K = {0} has no base")
    membership = point_in_hull(verts, Vector.zero(K.dim))
    if membership.member:
        return OriginExclusionReport(
            origin_in_hull=True,
            hull_weights=membership.weights,
            k_sharp_witness=None,
            cor_aplus_witness=None,
        )
    f = membership.separator
    m, _ = sk.min_of(f)
    assert m > 0, "separator must be positive on the base polytope"
    witness = f.scale(ONE / m)
    return OriginExclusionReport(
        origin_in_hull=False,
        hull_weights=None,
        k_sharp_witness=witness,
        cor_aplus_witness=AugmentedFunctional(witness, Fraction(1, 2)),
    )
