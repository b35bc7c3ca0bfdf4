"""Separation theorem drivers: hypothesis checking, constructive synthesis of
the separating augmented functional, independent verification, and
classification of the achieved separation level.

The drivers mirror the constructive proofs: a linear separation of the base
polytopes S_A^0 = conv(B_A ∪ {0}) and S_-K = conv(-B_K) at threshold delta
turns into the conical certificate (x', alpha := -delta), whose level set
{x : x'(x) + alpha psi(x) <= 0} is the separating surface.  Every certificate
is re-verified from scratch on the exact vertex data before it is returned.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from fractions import Fraction
from functools import cached_property

from .augdual import (
    AugDualClass,
    AugmentedFunctional,
    classify_augmented,
    level_set_cone,
    level_set_facets,
    phi_eval,
)
from .errors import (
    HypothesisFailed,
    InternalCertificateError,
    NotPointed,
    NotSolid,
)
from .numerics import (
    EQ,
    GE,
    LE,
    ONE,
    ZERO,
    Functional,
    IntersectionWitness,
    Optimal,
    SeparatingHyperplane,
    Vector,
    matrix_rank,
    point_in_hull,
    rat_str,
    separate_polytopes,
    solve_lp,
)
from .polyhedra import (
    BasePolytope,
    ConeUnion,
    ConvexConePiece,
    base_polytope,
    boundary_cone,
    cone_generators_from_facets,
    polytope_facets,
)

WEAK, PROPER, STRICT, STRICT_BOUNDARY = "weak", "proper", "strict", "strict_boundary"
VARIANTS = (WEAK, PROPER, STRICT, STRICT_BOUNDARY)


@dataclass(frozen=True)
class SeparationProblem:
    """Two nontrivial cones with normlike-bases under a shared gauge, plus
    the requested separation variant."""

    K: ConeUnion
    A: ConeUnion
    psi: object
    variant: str = STRICT

    def __post_init__(self):
        if self.variant not in VARIANTS:
            raise ValueError(f"unknown variant {self.variant!r}")
        self.K.require_nontrivial()
        self.A.require_nontrivial()

    @cached_property
    def s_minus_k(self) -> BasePolytope:
        return base_polytope(self.K.negated(), self.psi, augment_origin=False)

    @cached_property
    def s_k(self) -> BasePolytope:
        return base_polytope(self.K, self.psi, augment_origin=False)

    @cached_property
    def s_a0(self) -> BasePolytope:
        return base_polytope(self.A, self.psi, augment_origin=True)

    def with_variant(self, variant: str) -> "SeparationProblem":
        return SeparationProblem(self.K, self.A, self.psi, variant)


@dataclass(frozen=True)
class CheckResult:
    name: str
    holds: bool
    witness: Vector | None = None
    note: str = ""

    def to_json(self) -> dict:
        data = {"name": self.name, "holds": self.holds}
        if self.witness is not None:
            data["witness"] = self.witness.to_json()
        if self.note:
            data["note"] = self.note
        return data


@dataclass(frozen=True)
class HypothesisReport:
    variant: str
    passed: bool
    checks: tuple[CheckResult, ...]
    compactness_note: str = (
        "base polytopes are bounded closed polytopes, hence compact; "
        "the compactness clause holds automatically"
    )

    def check(self, name: str) -> CheckResult:
        for c in self.checks:
            if c.name == name:
                return c
        raise KeyError(name)

    def to_json(self) -> dict:
        return {
            "variant": self.variant,
            "passed": self.passed,
            "checks": [c.to_json() for c in self.checks],
            "compactness_note": self.compactness_note,
        }


def _polytope_solid(vertices: list[Vector], n: int) -> bool:
    if not vertices:
        return False
    v0 = vertices[0]
    return matrix_rank([v - v0 for v in vertices[1:]]) == n


def _meets_interior(outer: list[Vector], solid: list[Vector]) -> Vector | None:
    """A point of conv(outer) interior to conv(solid), or None.

    Exact: maximize the uniform facet margin of conv(solid) over conv(outer);
    the optimum is positive iff the intersection with the interior is
    nonempty, and the optimizer is a rational witness.
    """
    n = outer[0].dim
    facets = polytope_facets(solid)
    k = len(outer)
    width = k + 1  # weights plus the margin t
    constraints = []
    for f, b in facets:
        row = [f(p) for p in outer] + [ONE]
        constraints.append((Functional(Vector(row)), LE, b))
    constraints.append((Functional(Vector([ONE] * k + [ZERO])), EQ, ONE))
    for i in range(k):
        constraints.append((Functional(Vector.unit(width, i)), GE, ZERO))
    constraints.append((Functional(Vector.unit(width, k)), LE, ONE))
    out = solve_lp(Functional(Vector.unit(width, k)), constraints, "max")
    if isinstance(out, Optimal) and out.value > 0:
        weights = out.point.coords[:k]
        witness = Vector.zero(n)
        for w, p in zip(weights, outer):
            witness = witness + p.scale(w)
        return witness
    return None


def _relint_meet(P: list[Vector], Q: list[Vector]) -> Vector | None:
    """A common point of the relative interiors of conv(P) and conv(Q):
    a double barycentric representation with all weights positive."""
    n = P[0].dim
    k, l = len(P), len(Q)
    width = k + l + 1
    constraints = []
    for j in range(n):
        row = [p[j] for p in P] + [-q[j] for q in Q] + [ZERO]
        constraints.append((Functional(Vector(row)), EQ, ZERO))
    constraints.append(
        (Functional(Vector([ONE] * k + [ZERO] * l + [ZERO])), EQ, ONE)
    )
    constraints.append(
        (Functional(Vector([ZERO] * k + [ONE] * l + [ZERO])), EQ, ONE)
    )
    for i in range(k + l):
        row = [ZERO] * width
        row[i] = ONE
        row[k + l] = -ONE
        constraints.append((Functional(Vector(row)), GE, ZERO))  # w_i >= t
    constraints.append((Functional(Vector.unit(width, k + l)), LE, ONE))
    out = solve_lp(Functional(Vector.unit(width, k + l)), constraints, "max")
    if isinstance(out, Optimal) and out.value > 0:
        weights = out.point.coords[:k]
        witness = Vector.zero(n)
        for w, p in zip(weights, P):
            witness = witness + p.scale(w)
        return witness
    return None


def check_hypotheses(problem: SeparationProblem) -> HypothesisReport:
    """Decide the requested variant's hypothesis bullets exactly, with a
    witness for every finding."""
    variant = problem.variant
    if variant == WEAK:
        return _check_weak(problem)
    if variant == PROPER:
        return _check_proper(problem)
    if variant == STRICT:
        return _check_strict(problem, problem.s_a0, "cl S_A^0 cap cl S_-K empty")
    if variant == STRICT_BOUNDARY:
        return _check_strict_boundary(problem)
    raise ValueError(variant)


def _origin_check(problem: SeparationProblem) -> CheckResult:
    verts = problem.s_minus_k.nonzero_vertices()
    membership = point_in_hull(verts, Vector.zero(problem.K.dim))
    return CheckResult(
        name="origin outside S_-K",
        holds=not membership.member,
        witness=None,
        note="0 in conv(-B_K)" if membership.member else "",
    )


def _check_weak(problem: SeparationProblem) -> HypothesisReport:
    n = problem.K.dim
    smk = problem.s_minus_k.hull_points()
    sa0 = problem.s_a0.hull_points()
    checks: list[CheckResult] = []

    smk_solid = _polytope_solid(smk, n)
    checks.append(CheckResult("S_-K solid", smk_solid))
    bullet1 = False
    if smk_solid:
        witness = _meets_interior(sa0, smk)
        checks.append(
            CheckResult(
                "S_A^0 cap cor S_-K empty",
                witness is None,
                witness=witness,
            )
        )
        bullet1 = witness is None

    sa0_solid = _polytope_solid(sa0, n)
    checks.append(CheckResult("S_A^0 solid", sa0_solid))
    bullet2 = False
    if sa0_solid:
        witness = _meets_interior(smk, sa0)
        checks.append(
            CheckResult(
                "cor S_A^0 cap S_-K empty",
                witness is None,
                witness=witness,
            )
        )
        bullet2 = witness is None

    witness = _relint_meet(sa0, smk)
    checks.append(
        CheckResult("icor S_A^0 cap icor S_-K empty", witness is None, witness=witness)
    )
    bullet3 = witness is None

    checks.append(_origin_check(problem))
    return HypothesisReport(
        variant=WEAK, passed=bullet1 or bullet2 or bullet3, checks=tuple(checks)
    )


def _check_proper(problem: SeparationProblem) -> HypothesisReport:
    n = problem.K.dim
    checks: list[CheckResult] = []
    k_solid = problem.K.is_solid()
    checks.append(CheckResult("K solid", k_solid))
    smk = problem.s_minus_k.hull_points()
    smk_solid = _polytope_solid(smk, n)
    checks.append(CheckResult("S_-K solid", smk_solid))
    disjoint = False
    if smk_solid:
        witness = _meets_interior(problem.s_a0.hull_points(), smk)
        checks.append(
            CheckResult("S_A^0 cap cor S_-K empty", witness is None, witness=witness)
        )
        disjoint = witness is None
    checks.append(_origin_check(problem))
    return HypothesisReport(
        variant=PROPER,
        passed=k_solid and smk_solid and disjoint,
        checks=tuple(checks),
    )


def _check_strict(
    problem: SeparationProblem, a_side: BasePolytope, clause: str
) -> HypothesisReport:
    checks: list[CheckResult] = []
    pointed = problem.K.is_pointed()
    checks.append(CheckResult("K pointed", pointed))
    sep = separate_polytopes(
        a_side.hull_points(), problem.s_minus_k.hull_points(), "strict"
    )
    if isinstance(sep, SeparatingHyperplane):
        checks.append(CheckResult(clause, True))
        disjoint = True
    else:
        checks.append(
            CheckResult(
                clause,
                False,
                witness=sep.point,
                note="common point of both hulls",
            )
        )
        disjoint = False
    checks.append(_origin_check(problem))
    return HypothesisReport(
        variant=problem.variant, passed=pointed and disjoint, checks=tuple(checks)
    )


def _check_strict_boundary(problem: SeparationProblem) -> HypothesisReport:
    checks: list[CheckResult] = []
    a_solid = problem.A.is_solid()
    checks.append(CheckResult("A solid", a_solid))
    if not a_solid:
        return HypothesisReport(
            variant=STRICT_BOUNDARY, passed=False, checks=tuple(checks)
        )
    boundary = boundary_cone(problem.A)
    s_bd = base_polytope(boundary, problem.psi, augment_origin=True)
    report = _check_strict(problem, s_bd, "cl S_dA^0 cap cl S_-K empty")
    return HypothesisReport(
        variant=STRICT_BOUNDARY,
        passed=a_solid and report.passed,
        checks=tuple(checks) + report.checks,
    )


# ---------------------------------------------------------------------------
# Certificates
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class SeparationCertificate:
    aug: AugmentedFunctional
    aug_class: AugDualClass
    hyperplane: SeparatingHyperplane
    delta: Fraction
    achieved: str
    linear: bool
    verification: "VerificationReport"

    def to_json(self) -> dict:
        return {
            "x_star": self.aug.x_star.to_json(),
            "alpha": rat_str(self.aug.alpha),
            "aug_class": self.aug_class.to_json(),
            "delta": rat_str(self.delta),
            "beta": rat_str(self.hyperplane.beta),
            "gamma": rat_str(self.hyperplane.gamma),
            "achieved": self.achieved,
            "linear": self.linear,
            "verification": self.verification.to_json(),
        }


@dataclass(frozen=True)
class VerificationReport:
    ok: bool
    achieved: str
    checks: tuple[CheckResult, ...]

    def check(self, name: str) -> CheckResult:
        for c in self.checks:
            if c.name == name:
                return c
        raise KeyError(name)

    def to_json(self) -> dict:
        return {
            "ok": self.ok,
            "achieved": self.achieved,
            "checks": [c.to_json() for c in self.checks],
        }


def _weak_separator(problem: SeparationProblem) -> Functional:
    sep = separate_polytopes(
        problem.s_a0.hull_points(), problem.s_minus_k.hull_points(), "weak"
    )
    if not isinstance(sep, SeparatingHyperplane):
        raise InternalCertificateError(
            "the hypothesis guarantees a weak separator but none was found"
        )
    return sep.f


def _certificate_from_functional(
    problem: SeparationProblem, x_prime: Functional, delta: Fraction, achieved: str
) -> SeparationCertificate:
    alpha = -delta
    aug = AugmentedFunctional(x_prime, alpha)
    aug_class = classify_augmented(problem.K, problem.psi, aug, base=problem.s_k)
    beta, _ = problem.s_a0.min_of(x_prime)
    beta = min(beta, ZERO)  # the origin belongs to S_A^0
    gamma, _ = problem.s_minus_k.max_of(x_prime)
    hyperplane = SeparatingHyperplane(
        f=x_prime, beta=beta, gamma=gamma, strict=beta > gamma
    )
    cert = SeparationCertificate(
        aug=aug,
        aug_class=aug_class,
        hyperplane=hyperplane,
        delta=delta,
        achieved=achieved,
        linear=alpha == 0,
        verification=VerificationReport(ok=True, achieved=achieved, checks=()),
    )
    verification = verify_certificate(problem, cert)
    if not verification.ok or _rank(verification.achieved) < _rank(achieved):
        raise InternalCertificateError(
            f"freshly built {achieved} certificate failed verification: "
            + "; ".join(c.name for c in verification.checks if not c.holds)
        )
    return SeparationCertificate(
        aug=cert.aug,
        aug_class=cert.aug_class,
        hyperplane=cert.hyperplane,
        delta=cert.delta,
        achieved=achieved,
        linear=cert.linear,
        verification=verification,
    )


def _rank(level: str) -> int:
    return {"none": 0, WEAK: 1, PROPER: 2, STRICT: 3}[level]


def separate_weak(problem: SeparationProblem) -> SeparationCertificate:
    """Split S_A^0 from S_-K by a hyperplane through delta <= 0 and lift it
    to the conical certificate (x', alpha = -delta) with phi >= 0 on A and
    phi <= 0 on -K."""
    report = check_hypotheses(problem.with_variant(WEAK))
    if not report.passed:
        raise HypothesisFailed(report)
    x_prime = _weak_separator(problem)
    # The proof-level fact x' in K+ \ {0} (stronger than x' != 0).
    if x_prime.is_zero() or any(x_prime(g) < 0 for g in problem.K.all_generators()):
        raise InternalCertificateError("weak separator must land in K+ \\ {0}")
    delta, _ = problem.s_minus_k.max_of(x_prime)
    if delta > 0:
        raise InternalCertificateError("weak threshold must be nonpositive")
    return _certificate_from_functional(problem, x_prime, delta, WEAK)


def separate_proper(problem: SeparationProblem) -> SeparationCertificate:
    """As the weak driver, with solidity hypotheses making the -K-side
    inequality strict on the interior (any nonzero separator is nonconstant
    on a solid hull)."""
    if not problem.K.is_solid():
        raise NotSolid("proper separation requires a solid K")
    report = check_hypotheses(problem.with_variant(PROPER))
    if not report.passed:
        raise HypothesisFailed(report)
    x_prime = _weak_separator(problem)
    if x_prime.is_zero() or any(x_prime(g) < 0 for g in problem.K.all_generators()):
        raise InternalCertificateError("proper separator must land in K+ \\ {0}")
    delta, _ = problem.s_minus_k.max_of(x_prime)
    if delta > 0:
        raise InternalCertificateError("proper threshold must be nonpositive")
    return _certificate_from_functional(problem, x_prime, delta, PROPER)


def separate_strict(problem: SeparationProblem) -> SeparationCertificate:
    """Maximal-gap strict separation of the closed hulls, lifted through the
    midpoint delta = (beta + gamma)/2 < 0 to (x*, alpha = -delta) in the
    sharp augmented class with alpha > 0."""
    if not problem.K.is_pointed():
        raise NotPointed("strict separation requires a pointed K")
    report = check_hypotheses(problem.with_variant(STRICT))
    if not report.passed:
        raise HypothesisFailed(report)
    sep = separate_polytopes(
        problem.s_a0.hull_points(), problem.s_minus_k.hull_points(), "strict"
    )
    assert isinstance(sep, SeparatingHyperplane)
    delta = (sep.beta + sep.gamma) / 2
    if delta >= 0:
        raise InternalCertificateError("strict threshold must be negative")
    return _certificate_from_functional(problem, sep.f, delta, STRICT)


def separate_strict_boundary(problem: SeparationProblem) -> SeparationCertificate:
    """Strict separation with A replaced by its boundary cone."""
    if not problem.K.is_pointed():
        raise NotPointed("strict separation requires a pointed K")
    report = check_hypotheses(problem.with_variant(STRICT_BOUNDARY))
    if not report.passed:
        raise HypothesisFailed(report)
    boundary = boundary_cone(problem.A)
    sub = SeparationProblem(problem.K, boundary, problem.psi, STRICT)
    return separate_strict(sub)


def verify_certificate(
    problem: SeparationProblem, cert: SeparationCertificate
) -> VerificationReport:
    """Recompute every inequality of the certificate from scratch on the
    exact vertex data; reports findings, never raises.

    Also re-derives the converse facts: a sharp certificate with positive
    augmentation forces the closed hulls apart, which is recomputed
    independently here.
    """
    checks: list[CheckResult] = []
    aug = cert.aug
    x_star, alpha = aug.x_star, aug.alpha
    psi = problem.psi

    checks.append(CheckResult("x* nonzero", not x_star.is_zero()))
    checks.append(CheckResult("alpha nonnegative", alpha >= 0))

    a_min, a_argmin = problem.s_a0.min_of(x_star)
    k_max, k_argmax = problem.s_minus_k.max_of(x_star)
    weak_a = a_min >= -alpha
    weak_k = k_max <= -alpha
    checks.append(
        CheckResult(
            "phi >= 0 on A base",
            weak_a,
            witness=None if weak_a else a_argmin,
            note=f"min x* over B_A = {rat_str(a_min)} vs -alpha = {rat_str(-alpha)}",
        )
    )
    checks.append(
        CheckResult(
            "phi <= 0 on -K base",
            weak_k,
            witness=None if weak_k else k_argmax,
            note=f"max x* over -B_K = {rat_str(k_max)} vs -alpha = {rat_str(-alpha)}",
        )
    )
    weak_ok = weak_a and weak_k and not x_star.is_zero()

    strict_a = a_min > -alpha
    strict_k = k_max < -alpha
    checks.append(
        CheckResult(
            "phi > 0 on A base (strict)",
            strict_a,
            witness=None if strict_a else a_argmin,
        )
    )
    checks.append(
        CheckResult(
            "phi < 0 on -K base (strict)",
            strict_k,
            witness=None if strict_k else k_argmax,
        )
    )
    fresh_class = classify_augmented(problem.K, psi, aug, base=problem.s_k)
    checks.append(
        CheckResult("a+ classification", fresh_class.a_plus == "yes")
    )
    strict_ok = (
        weak_ok and strict_a and strict_k and alpha > 0
        and fresh_class.a_sharp == "yes"
    )
    if strict_ok:
        checks.append(CheckResult("a# classification", True))
        sep = separate_polytopes(
            problem.s_a0.hull_points(), problem.s_minus_k.hull_points(), "strict"
        )
        checks.append(
            CheckResult(
                "converse: hulls disjoint",
                isinstance(sep, SeparatingHyperplane),
                witness=None if isinstance(sep, SeparatingHyperplane) else sep.point,
            )
        )
        level = level_set_cone(aug, psi)
        verdict = classify_separation(problem.K.negated(), problem.A, level)
        checks.append(
            CheckResult(
                "level-set cone separates strictly",
                verdict.achieved == STRICT,
            )
        )
        strict_ok = strict_ok and all(c.holds for c in checks[-2:])

    proper_ok = weak_ok and _proper_side_strict(problem, aug, checks)

    if strict_ok:
        achieved = STRICT
    elif proper_ok:
        achieved = PROPER
    elif weak_ok:
        achieved = WEAK
    else:
        achieved = "none"
    ok = weak_ok
    return VerificationReport(ok=ok, achieved=achieved, checks=tuple(checks))


def _proper_side_strict(
    problem: SeparationProblem, aug: AugmentedFunctional, checks: list[CheckResult]
) -> bool:
    """Strict negativity of phi on the per-piece interiors of -K: by the
    concavity dichotomy the residual x* - alpha psi on a solid piece of K is
    either identically zero or positive inside; sampled interior rays
    double-check the sign exactly."""
    from .augdual import _residual_vanishes

    if not problem.K.is_solid():
        checks.append(CheckResult("cor(-K) strictness", False, note="K not solid"))
        return False
    x_star, alpha = aug.x_star, aug.alpha
    n = problem.K.dim
    ok = True
    for piece in problem.K.pieces:
        if piece.is_zero() or not piece.is_solid(n):
            continue
        single = ConeUnion([piece])
        if _residual_vanishes(single, problem.psi, x_star, alpha):
            ok = False
            break
        interior_point = Vector.zero(n)
        for g in piece.generators:
            interior_point = interior_point + g
        if x_star(interior_point) - alpha * problem.psi(interior_point) <= 0:
            ok = False
            break
    checks.append(CheckResult("cor(-K) strictness", ok))
    return ok


# ---------------------------------------------------------------------------
# Separation-by-cones classification (the geometric definitions)
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class SeparationByConesVerdict:
    achieved: str  # strict | proper | weak | none
    weak: bool
    proper: bool
    strict: bool
    details: tuple[CheckResult, ...]

    def to_json(self) -> dict:
        return {
            "achieved": self.achieved,
            "weak": self.weak,
            "proper": self.proper,
            "strict": self.strict,
            "details": [c.to_json() for c in self.details],
        }


def _facets_of(C) -> list[Functional]:
    if isinstance(C, ConvexConePiece):
        return list(C.facets)
    if hasattr(C, "cone_facets"):
        return list(C.cone_facets)
    return list(C)


def classify_separation(
    omega1: ConeUnion, omega2: ConeUnion, C
) -> SeparationByConesVerdict:
    """Decide how the convex cone C (H-representation) separates the cone
    pair: weakly (omega1 inside cl C, omega2 missing int C), properly
    (additionally a point off bd C), or strictly (omega1 minus the origin
    interior, omega2 minus the origin outside cl C)."""
    facets = _facets_of(C)
    details: list[CheckResult] = []

    inside = all(
        all(f(g) >= 0 for f in facets) for g in omega1.all_generators()
    )
    details.append(CheckResult("omega1 inside cl C", inside))
    misses_interior = True
    for piece in omega2.pieces:
        if piece.is_zero():
            continue
        witness = _piece_meets_strict(piece, facets)
        if witness is not None:
            misses_interior = False
            details.append(
                CheckResult("omega2 avoids int C", False, witness=witness)
            )
            break
    if misses_interior:
        details.append(CheckResult("omega2 avoids int C", True))
    weak = inside and misses_interior

    off_boundary = False
    if weak:
        for union in (omega1, omega2):
            for piece in union.pieces:
                if piece.is_zero():
                    continue
                if not all(all(f(g) >= 0 for f in facets) for g in piece.generators):
                    off_boundary = True  # a point outside C at all
                    break
                if _piece_meets_strict(piece, facets) is not None:
                    off_boundary = True
                    break
            if off_boundary:
                break
        details.append(CheckResult("a point off bd C", off_boundary))
    proper = weak and off_boundary

    o1_strict = all(
        _piece_inside_interior(piece, facets)
        for piece in omega1.pieces
        if not piece.is_zero()
    )
    details.append(CheckResult("omega1\\{0} inside int C", o1_strict))
    o2_strict = all(
        _piece_avoids_cone(piece, facets)
        for piece in omega2.pieces
        if not piece.is_zero()
    )
    details.append(CheckResult("omega2\\{0} outside cl C", o2_strict))
    strict = o1_strict and o2_strict

    if strict and not proper:
        proper = True  # the chain strict => proper => weak is definitional
    if proper and not weak:
        weak = True
    achieved = STRICT if strict else PROPER if proper else WEAK if weak else "none"
    return SeparationByConesVerdict(
        achieved=achieved,
        weak=weak,
        proper=proper,
        strict=strict,
        details=tuple(details),
    )


def _piece_meets_strict(piece: ConvexConePiece, facets) -> Vector | None:
    """A point of the piece with every C-facet strictly positive, or None."""
    n = piece.dim
    width = n + 1
    constraints = []
    for pf in piece.facets:
        row = list(pf.coeffs) + [ZERO]
        constraints.append((Functional(Vector(row)), GE, ZERO))
    for f in facets:
        row = list(f.coeffs) + [-ONE]
        constraints.append((Functional(Vector(row)), GE, ZERO))  # f(x) >= t
    for j in range(n):
        constraints.append((Functional(Vector.unit(width, j)), LE, ONE))
        constraints.append((Functional(Vector.unit(width, j)), GE, -ONE))
    constraints.append((Functional(Vector.unit(width, n)), LE, ONE))
    out = solve_lp(Functional(Vector.unit(width, n)), constraints, "max")
    if isinstance(out, Optimal) and out.value > 0:
        return Vector(out.point.coords[:n])
    return None


def _piece_inside_interior(piece: ConvexConePiece, facets) -> bool:
    """piece \\ {0} inside {x : all facets > 0}: no facet's zero side may
    touch the piece off the origin."""
    for f in facets:
        limited = list(piece.facets) + [-f]
        gens = [g for g in cone_generators_from_facets(limited) if not g.is_zero()]
        if gens:
            return False
    return True


def _piece_avoids_cone(piece: ConvexConePiece, facets) -> bool:
    """piece cap C = {0}."""
    combined = list(piece.facets) + list(facets)
    gens = [g for g in cone_generators_from_facets(combined) if not g.is_zero()]
    return not gens


# ---------------------------------------------------------------------------
# Equivalence matrices
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class EquivalenceReport:
    convex: bool
    items: dict
    implications: dict

    def to_json(self) -> dict:
        return {
            "convex": self.convex,
            "items": dict(self.items),
            "implications": {f"{a}=>{b}": v for (a, b), v in self.implications.items()},
        }


def _cones_meet_off_origin(A: ConeUnion, B: ConeUnion) -> bool:
    for pa in A.pieces:
        if pa.is_zero():
            continue
        for pb in B.pieces:
            if pb.is_zero():
                continue
            gens = cone_generators_from_facets(list(pa.facets) + list(pb.facets))
            if any(not g.is_zero() for g in gens):
                return True
    return False


def _meets_per_piece_interior(A: ConeUnion, B: ConeUnion) -> bool:
    """A cap (per-piece interiors of B) nonempty; exact per piece pair."""
    n = A.dim
    for pb in B.pieces:
        if pb.is_zero() or not pb.is_solid(n):
            continue
        for pa in A.pieces:
            if pa.is_zero():
                continue
            if _piece_meets_strict(pa, list(pb.facets)) is not None:
                return True
    return False


def equivalence_report(problem: SeparationProblem) -> EquivalenceReport:
    """Evaluate the proper- and strict-chain assertions independently and
    report the observed implication matrix.

    For convex data all assertions in a chain are equivalent; for nonconvex
    inputs only the one-way implications are guaranteed, and the matrix shows
    exactly which direction failed.
    """
    convex = len(problem.K.pieces) == 1 and len(problem.A.pieces) == 1
    items: dict[str, bool] = {}

    smk = problem.s_minus_k.hull_points()
    sa0 = problem.s_a0.hull_points()
    n = problem.K.dim

    if _polytope_solid(smk, n):
        items["S_A^0 cap cor S_-K empty"] = _meets_interior(sa0, smk) is None
    else:
        items["S_A^0 cap cor S_-K empty"] = True
    minus_k = problem.K.negated()
    items["A cap cor(-K) empty"] = not _meets_per_piece_interior(problem.A, minus_k)
    items["linear proper separator exists"] = _linear_proper_exists(problem)
    try:
        separate_proper(problem.with_variant(PROPER))
        items["proper certificate exists"] = True
    except (HypothesisFailed, NotSolid):
        items["proper certificate exists"] = False

    sep = separate_polytopes(sa0, smk, "strict")
    items["cl S_A^0 cap cl S_-K empty"] = isinstance(sep, SeparatingHyperplane)
    try:
        separate_strict(problem.with_variant(STRICT))
        items["strict certificate exists"] = True
    except (HypothesisFailed, NotPointed):
        items["strict certificate exists"] = False
    origin_out = not point_in_hull(
        problem.s_minus_k.nonzero_vertices(), Vector.zero(n)
    ).member
    items["A cap (-K\\{0}) empty and 0 outside S_-K"] = (
        not _cones_meet_off_origin(problem.A, minus_k)
    ) and origin_out

    implications = {}
    names = list(items)
    for a in names:
        for b in names:
            if a != b:
                implications[(a, b)] = (not items[a]) or items[b]
    return EquivalenceReport(convex=convex, items=items, implications=implications)


def _linear_proper_exists(problem: SeparationProblem) -> bool:
    """Whether some x' in K+ \\ {0} satisfies x' >= 0 on A and x' < 0 on the
    per-piece interiors of -K: an exact margin LP over the generators plus
    one interior point per solid piece."""
    n = problem.K.dim
    minus_k = problem.K.negated()
    solid_pieces = [
        p for p in minus_k.pieces if not p.is_zero() and p.is_solid(n)
    ]
    if not solid_pieces:
        return False
    width = n + 1
    constraints = []
    for g in problem.A.all_generators():
        row = list(g.coords) + [ZERO]
        constraints.append((Functional(Vector(row)), GE, ZERO))
    for g in minus_k.all_generators():
        row = list(g.coords) + [ZERO]
        constraints.append((Functional(Vector(row)), LE, ZERO))
    for p in solid_pieces:
        interior = Vector.zero(n)
        for g in p.generators:
            interior = interior + g
        row = list(interior.coords) + [ONE]
        constraints.append((Functional(Vector(row)), LE, ZERO))  # f(int) <= -t
    for j in range(n):
        constraints.append((Functional(Vector.unit(width, j)), LE, ONE))
        constraints.append((Functional(Vector.unit(width, j)), GE, -ONE))
    constraints.append((Functional(Vector.unit(width, n)), LE, ONE))
    out = solve_lp(Functional(Vector.unit(width, n)), constraints, "max")
    return isinstance(out, Optimal) and out.value > 0
