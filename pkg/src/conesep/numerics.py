"""Exact rational scalars, vectors, functionals, linear algebra, and a
certified linear-programming oracle.

Every quantity is a :class:`fractions.Fraction`; no floating point enters any
computation.  The LP solver is a dense two-phase primal simplex with Bland's
rule, so it terminates on every input and is deterministic for a fixed
constraint ordering.  Each outcome carries a certificate that is re-verified
by substitution before it is returned:

* ``Optimal``    -- primal point, dual multipliers, equal objective values,
                    complementary slackness;
* ``Infeasible`` -- nonnegative combination of the constraints contracting to
                    ``0 <= -1``;
* ``Unbounded``  -- an explicit feasible improving ray.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Sequence

from .errors import (
    DegenerateInput,
    DimensionMismatch,
    InternalCertificateError,
)

Scalar = Fraction

ZERO = Fraction(0)
ONE = Fraction(1)

LE, EQ, GE = "<=", "=", ">="
_RELATIONS = (LE, EQ, GE)


def rat(value) -> Fraction:
    """Coerce ints, strings like ``"p/q"``, and Fractions to an exact rational."""
    if isinstance(value, Fraction):
        return value
    if isinstance(value, bool):
        raise TypeError("booleans are not scalars")
    if isinstance(value, int):
        return Fraction(value)
    if isinstance(value, str):
        return Fraction(value)
    raise TypeError(f"cannot coerce {value!r} to an exact rational")


def rat_str(value: Fraction) -> str:
    """Serialize a rational as ``"p/q"``, or ``"p"`` when the denominator is 1."""
    q = rat(value)
    return str(q.numerator) if q.denominator == 1 else f"{q.numerator}/{q.denominator}"


@dataclass(frozen=True)
class Vector:
    """Immutable coordinate vector over the rationals."""

    coords: tuple[Fraction, ...]

    def __init__(self, coords: Iterable) -> None:
        object.__setattr__(self, "coords", tuple(rat(c) for c in coords))

    @property
    def dim(self) -> int:
        return len(self.coords)

    @staticmethod
    def zero(dim: int) -> "Vector":
        return Vector([ZERO] * dim)

    @staticmethod
    def unit(dim: int, index: int) -> "Vector":
        coords = [ZERO] * dim
        coords[index] = ONE
        return Vector(coords)

    def __getitem__(self, i: int) -> Fraction:
        return self.coords[i]

    def __iter__(self):
        return iter(self.coords)

    def __add__(self, other: "Vector") -> "Vector":
        self._check(other)
        return Vector(a + b for a, b in zip(self.coords, other.coords))

    def __sub__(self, other: "Vector") -> "Vector":
        self._check(other)
        return Vector(a - b for a, b in zip(self.coords, other.coords))

    def __neg__(self) -> "Vector":
        return Vector(-a for a in self.coords)

    def scale(self, factor) -> "Vector":
        f = rat(factor)
        return Vector(f * a for a in self.coords)

    def dot(self, other: "Vector") -> Fraction:
        self._check(other)
        return sum((a * b for a, b in zip(self.coords, other.coords)), ZERO)

    def is_zero(self) -> bool:
        return all(a == 0 for a in self.coords)

    def _check(self, other: "Vector") -> None:
        if self.dim != other.dim:
            raise DimensionMismatch(f"dim {self.dim} vs {other.dim}")

    def to_json(self) -> list[str]:
        return [rat_str(c) for c in self.coords]

    @staticmethod
    def from_json(data: Sequence) -> "Vector":
        return Vector(rat(c) for c in data)

    def __repr__(self) -> str:
        return "Vector(" + ", ".join(rat_str(c) for c in self.coords) + ")"


@dataclass(frozen=True)
class Functional:
    """Linear functional represented by its coefficient vector; application
    is the dot product, so in finite dimension the dual space is identified
    with the primal one."""

    coeffs: Vector

    def __init__(self, coeffs) -> None:
        vec = coeffs if isinstance(coeffs, Vector) else Vector(coeffs)
        object.__setattr__(self, "coeffs", vec)

    @property
    def dim(self) -> int:
        return self.coeffs.dim

    def __call__(self, x: Vector) -> Fraction:
        return self.coeffs.dot(x)

    def __add__(self, other: "Functional") -> "Functional":
        return Functional(self.coeffs + other.coeffs)

    def __sub__(self, other: "Functional") -> "Functional":
        return Functional(self.coeffs - other.coeffs)

    def __neg__(self) -> "Functional":
        return Functional(-self.coeffs)

    def scale(self, factor) -> "Functional":
        return Functional(self.coeffs.scale(factor))

    def is_zero(self) -> bool:
        return self.coeffs.is_zero()

    def to_json(self) -> list[str]:
        return self.coeffs.to_json()

    def __repr__(self) -> str:
        return "Functional(" + ", ".join(rat_str(c) for c in self.coeffs) + ")"


# ---------------------------------------------------------------------------
# Exact dense linear algebra
# ---------------------------------------------------------------------------


def _as_rows(rows) -> list[list[Fraction]]:
    out = []
    for r in rows:
        if isinstance(r, Functional):
            out.append([rat(c) for c in r.coeffs])
        elif isinstance(r, Vector):
            out.append([rat(c) for c in r])
        else:
            out.append([rat(c) for c in r])
    return out


def rref(rows: list[list[Fraction]]) -> tuple[list[list[Fraction]], list[int]]:
    """Reduced row echelon form; returns (rows, pivot column indices)."""
    mat = [list(r) for r in rows]
    if not mat:
        return [], []
    m, n = len(mat), len(mat[0])
    pivots: list[int] = []
    row = 0
    for col in range(n):
        pivot_row = next((i for i in range(row, m) if mat[i][col] != 0), None)
        if pivot_row is None:
            continue
        mat[row], mat[pivot_row] = mat[pivot_row], mat[row]
        inv = ONE / mat[row][col]
        mat[row] = [inv * v for v in mat[row]]
        for i in range(m):
            if i != row and mat[i][col] != 0:
                factor = mat[i][col]
                mat[i] = [a - factor * b for a, b in zip(mat[i], mat[row])]
        pivots.append(col)
        row += 1
        if row == m:
            break
    return mat[:row], pivots


def matrix_rank(rows) -> int:
    return len(rref(_as_rows(rows))[1])


def nullspace_basis(rows, dim: int | None = None) -> list[Vector]:
    """Basis of the joint kernel of the given functionals (or row vectors).

    Each basis vector is annihilated by every row; their span is exactly the
    kernel.  An empty row list means the kernel is the whole space.
    """
    mat = _as_rows(rows)
    if dim is None:
        if not mat:
            raise DimensionMismatch("dimension required for an empty row list")
        dim = len(mat[0])
    for r in mat:
        if len(r) != dim:
            raise DimensionMismatch("row dimension differs from ambient dimension")
    reduced, pivots = rref(mat)
    free_cols = [c for c in range(dim) if c not in pivots]
    basis = []
    for free in free_cols:
        coords = [ZERO] * dim
        coords[free] = ONE
        for row_idx, pivot_col in enumerate(pivots):
            coords[pivot_col] = -reduced[row_idx][free]
        basis.append(Vector(coords))
    return basis


def solve_square(matrix: list[list[Fraction]], rhs: list[Fraction]) -> list[Fraction] | None:
    """Solve a square system exactly; None when singular."""
    n = len(matrix)
    aug = [list(matrix[i]) + [rhs[i]] for i in range(n)]
    for col in range(n):
        pivot = next((i for i in range(col, n) if aug[i][col] != 0), None)
        if pivot is None:
            return None
        aug[col], aug[pivot] = aug[pivot], aug[col]
        inv = ONE / aug[col][col]
        aug[col] = [inv * v for v in aug[col]]
        for i in range(n):
            if i != col and aug[i][col] != 0:
                f = aug[i][col]
                aug[i] = [a - f * b for a, b in zip(aug[i], aug[col])]
    return [aug[i][n] for i in range(n)]


def span_basis(vectors: Iterable[Vector]) -> list[Vector]:
    """A basis (subset-echelon) of the span of the given vectors."""
    rows = _as_rows(vectors)
    if not rows:
        return []
    reduced, pivots = rref(rows)
    return [Vector(r) for r in reduced]


# ---------------------------------------------------------------------------
# Linear programming
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class Optimal:
    value: Fraction
    point: Vector
    dual: tuple[Fraction, ...]


@dataclass(frozen=True)
class Infeasible:
    """Farkas certificate: ``multipliers`` combine the constraints (in their
    original orientation) into ``farkas(x) >= offset`` with ``farkas = 0`` and
    ``offset > 0`` -- i.e. the contradiction ``0 <= -1`` after flipping to
    <=-form and scaling."""

    farkas: Functional
    offset: Fraction
    multipliers: tuple[Fraction, ...]


@dataclass(frozen=True)
class Unbounded:
    ray: Vector


LPOutcome = Optimal | Infeasible | Unbounded

Constraint = tuple[Functional, str, Fraction]


class _Tableau:
    """Dense simplex tableau over Fractions with Bland's rule."""

    def __init__(self, rows: list[list[Fraction]], rhs: list[Fraction], basis: list[int]):
        self.rows = rows
        self.rhs = rhs
        self.basis = basis
        self.ncols = len(rows[0]) if rows else 0

    def reduced_costs(self, cost: list[Fraction]) -> list[Fraction]:
        red = list(cost)
        for i, b in enumerate(self.basis):
            cb = cost[b]
            if cb != 0:
                row = self.rows[i]
                for j in range(self.ncols):
                    if row[j] != 0:
                        red[j] -= cb * row[j]
        return red

    def objective_value(self, cost: list[Fraction]) -> Fraction:
        return sum((cost[b] * self.rhs[i] for i, b in enumerate(self.basis)), ZERO)

    def pivot(self, row_idx: int, col: int) -> None:
        rows, rhs = self.rows, self.rhs
        inv = ONE / rows[row_idx][col]
        rows[row_idx] = [inv * v for v in rows[row_idx]]
        rhs[row_idx] = inv * rhs[row_idx]
        prow, prhs = rows[row_idx], rhs[row_idx]
        for i in range(len(rows)):
            if i == row_idx:
                continue
            f = rows[i][col]
            if f != 0:
                rows[i] = [a - f * b for a, b in zip(rows[i], prow)]
                rhs[i] -= f * prhs
        self.basis[row_idx] = col

    def run(self, cost: list[Fraction], allowed: set[int]) -> tuple[str, int | None]:
        """Minimize cost over the current dictionary.  Returns ('optimal', None)
        or ('unbounded', entering_column).  Bland: smallest eligible entering
        index; leaving by minimum ratio, ties to the smallest basis index."""
        while True:
            red = self.reduced_costs(cost)
            entering = next(
                (j for j in range(self.ncols) if j in allowed and red[j] < 0), None
            )
            if entering is None:
                return "optimal", None
            leave_row = None
            best_ratio = None
            for i, row in enumerate(self.rows):
                coef = row[entering]
                if coef > 0:
                    ratio = self.rhs[i] / coef
                    if (
                        best_ratio is None
                        or ratio < best_ratio
                        or (ratio == best_ratio and self.basis[i] < self.basis[leave_row])
                    ):
                        best_ratio = ratio
                        leave_row = i
            if leave_row is None:
                return "unbounded", entering
            self.pivot(leave_row, entering)


def solve_lp(
    objective: Functional,
    constraints: Sequence[Constraint],
    sense: str = "min",
) -> LPOutcome:
    """Solve min/max of a linear objective subject to ``f(x) {<=,=,>=} b``
    constraints over free variables, in exact rational arithmetic.

    The returned outcome is certified: it has already passed
    :func:`verify_lp_outcome` before being handed back.
    """
    if sense not in ("min", "max"):
        raise ValueError("sense must be 'min' or 'max'")
    if not constraints:
        raise DegenerateInput("constraint list must be nonempty")
    n = objective.dim
    rows: list[tuple[list[Fraction], str, Fraction]] = []
    for f, rel, b in constraints:
        if rel not in _RELATIONS:
            raise ValueError(f"unknown relation {rel!r}")
        if f.dim != n:
            raise DimensionMismatch(
                f"constraint dimension {f.dim} differs from objective dimension {n}"
            )
        rows.append(([rat(c) for c in f.coeffs], rel, rat(b)))
    cmin = [rat(c) for c in objective.coeffs]
    if sense == "max":
        cmin = [-c for c in cmin]

    # Standard form: x = u - v; one slack per inequality (a.x + s = b for <=,
    # a.x - s = b for >=); rows scaled to b >= 0.  A slack whose coefficient
    # survives normalization as +1 serves as the initial basic variable, so
    # artificials are only needed for equalities and tight-side inequalities.
    m = len(rows)
    ineq_rows = [i for i, r in enumerate(rows) if r[1] != EQ]
    s_col = {i: 2 * n + k for k, i in enumerate(ineq_rows)}
    width = 2 * n + len(ineq_rows)

    tab_rows: list[list[Fraction]] = []
    tab_rhs: list[Fraction] = []
    row_sign: list[Fraction] = []
    slack_cols: list[tuple[int, Fraction] | None] = []
    basis_kind: list[str] = []
    for i, (a, rel, b) in enumerate(rows):
        sign = -ONE if b < 0 else ONE
        row = [ZERO] * width
        for j in range(n):
            row[j] = sign * a[j]
            row[n + j] = -sign * a[j]
        if rel != EQ:
            s_coeff = sign * (ONE if rel == LE else -ONE)
            row[s_col[i]] = s_coeff
            slack_cols.append((s_col[i], s_coeff))
            basis_kind.append("slack" if s_coeff == ONE else "artificial")
        else:
            slack_cols.append(None)
            basis_kind.append("artificial")
        tab_rows.append(row)
        tab_rhs.append(sign * b)
        row_sign.append(sign)

    art_rows = [i for i in range(m) if basis_kind[i] == "artificial"]
    art_col = {i: width + k for k, i in enumerate(art_rows)}
    total = width + len(art_rows)
    basis: list[int] = []
    for i in range(m):
        ext = [ZERO] * len(art_rows)
        if i in art_col:
            ext[art_col[i] - width] = ONE
            basis.append(art_col[i])
        else:
            basis.append(s_col[i])
        tab_rows[i] = tab_rows[i] + ext

    tab = _Tableau(tab_rows, tab_rhs, basis)
    tab.ncols = total
    cost1 = [ZERO] * width + [ONE] * len(art_rows)
    coeff_rows = [
        [row_sign[i] * rows[i][0][j] for j in range(n)] for i in range(m)
    ]
    if art_rows:
        status, _ = tab.run(cost1, set(range(total)))
        assert status == "optimal"  # phase 1 is bounded below by zero
        if tab.objective_value(cost1) > 0:
            y = _dual_from_basis(
                coeff_rows,
                slack_cols,
                [art_col.get(i) for i in range(m)],
                tab.basis,
                cost1,
                n,
            )
            multipliers = tuple(row_sign[i] * y[i] for i in range(m))
            outcome = _build_infeasible(constraints, multipliers)
            verify_lp_outcome(objective, constraints, sense, outcome)
            return outcome

    # Drive artificials out of the basis; drop rows that went redundant.
    art0 = width
    keep = []
    for i in range(m):
        if tab.basis[i] >= art0:
            pivot_col = next((j for j in range(width) if tab.rows[i][j] != 0), None)
            if pivot_col is None:
                continue  # redundant row
            tab.pivot(i, pivot_col)
        keep.append(i)

    tab2 = _Tableau(
        [tab.rows[i][:width] for i in keep],
        [tab.rhs[i] for i in keep],
        [tab.basis[i] for i in keep],
    )
    tab2.ncols = width
    cost2 = cmin + [-c for c in cmin] + [ZERO] * (width - 2 * n)
    status, entering = tab2.run(cost2, set(range(width)))

    if status == "unbounded":
        outcome = Unbounded(ray=_ray_from_tableau(tab2, entering, n, width))
        verify_lp_outcome(objective, constraints, sense, outcome)
        return outcome

    z = [ZERO] * width
    for i, b in enumerate(tab2.basis):
        z[b] = tab2.rhs[i]
    point = Vector([z[j] - z[n + j] for j in range(n)])
    y_partial = _dual_from_basis(
        [coeff_rows[i] for i in keep],
        [slack_cols[i] for i in keep],
        [None] * len(keep),
        tab2.basis,
        cost2,
        n,
    )
    multipliers = [ZERO] * m
    for idx, i in enumerate(keep):
        multipliers[i] = row_sign[i] * y_partial[idx]
    if sense == "max":
        multipliers = [-t for t in multipliers]
    value = objective(point)
    outcome = Optimal(value=value, point=point, dual=tuple(multipliers))
    verify_lp_outcome(objective, constraints, sense, outcome)
    return outcome


def _dual_from_basis(coeff_rows, slack_cols, art_cols, basis, cost, n):
    """Recover duals of the sign-normalized rows by solving B^T y = c_B.

    ``coeff_rows[i]`` is the normalized coefficient list (length n) of row i,
    ``slack_cols[i]`` is (column index, coefficient) or None, and
    ``art_cols[i]`` is the artificial column index or None.
    """
    m = len(coeff_rows)

    def column(j: int) -> list[Fraction]:
        col = [ZERO] * m
        if j < n:
            for i in range(m):
                col[i] = coeff_rows[i][j]
        elif j < 2 * n:
            for i in range(m):
                col[i] = -coeff_rows[i][j - n]
        else:
            for i in range(m):
                sc = slack_cols[i]
                if sc is not None and sc[0] == j:
                    col[i] = sc[1]
                elif art_cols[i] == j:
                    col[i] = ONE
        return col

    bmat = [[ZERO] * m for _ in range(m)]
    cb = [ZERO] * m
    for k, var in enumerate(basis):
        col = column(var)
        for i in range(m):
            bmat[i][k] = col[i]
        cb[k] = cost[var] if var < len(cost) else ZERO
    bt = [[bmat[i][k] for i in range(m)] for k in range(m)]
    y = solve_square(bt, cb)
    if y is None:
        raise InternalCertificateError("singular basis while extracting duals")
    return y


def _build_infeasible(constraints, multipliers) -> Infeasible:
    n = constraints[0][0].dim
    combo = Vector.zero(n)
    offset = ZERO
    for (f, rel, b), lam in zip(constraints, multipliers):
        if lam == 0:
            continue
        combo = combo + f.coeffs.scale(lam)
        offset += lam * rat(b)
    # Orientation: sum lam_i f_i(x) >= offset is implied by the system while
    # combo = 0 and offset > 0, i.e. 0 >= offset > 0 is absurd.
    scale = ONE / offset if offset != 0 else ONE
    return Infeasible(
        farkas=Functional(combo.scale(scale)),
        offset=offset * scale,
        multipliers=tuple(m * scale for m in multipliers),
    )


def _ray_from_tableau(tab: _Tableau, entering: int, n: int, width: int) -> Vector:
    direction = [ZERO] * width
    direction[entering] = ONE
    for i, b in enumerate(tab.basis):
        direction[b] = -tab.rows[i][entering]
    return Vector([direction[j] - direction[n + j] for j in range(n)])


def verify_lp_outcome(
    objective: Functional,
    constraints: Sequence[Constraint],
    sense: str,
    outcome: LPOutcome,
) -> None:
    """Re-verify an LP outcome by exact substitution; raises
    InternalCertificateError on any violation."""
    if isinstance(outcome, Optimal):
        _verify_optimal(objective, constraints, sense, outcome)
    elif isinstance(outcome, Infeasible):
        _verify_infeasible(constraints, outcome)
    elif isinstance(outcome, Unbounded):
        _verify_unbounded(objective, constraints, sense, outcome)
    else:  # pragma: no cover
        raise InternalCertificateError(f"unknown outcome {outcome!r}")


def _satisfies(f: Functional, rel: str, b, x: Vector) -> bool:
    val = f(x)
    b = rat(b)
    if rel == LE:
        return val <= b
    if rel == GE:
        return val >= b
    return val == b


def _verify_optimal(objective, constraints, sense, outcome: Optimal) -> None:
    x = outcome.point
    for f, rel, b in constraints:
        if not _satisfies(f, rel, b, x):
            raise InternalCertificateError("optimal point violates a constraint")
    if objective(x) != outcome.value:
        raise InternalCertificateError("objective value mismatch")
    # Dual feasibility and strong duality.  Convention: for sense=min the
    # multipliers satisfy sum lam_i f_i = objective with lam >= 0 on >= rows
    # and lam <= 0 on <= rows; for sense=max the signs flip and the combined
    # functional equals the objective as well.
    combo = Vector.zero(objective.dim)
    bound = ZERO
    for (f, rel, b), lam in zip(constraints, outcome.dual):
        sign_ok = True
        if rel == GE:
            sign_ok = lam >= 0 if sense == "min" else lam <= 0
        elif rel == LE:
            sign_ok = lam <= 0 if sense == "min" else lam >= 0
        if not sign_ok:
            raise InternalCertificateError("dual multiplier has a wrong sign")
        combo = combo + f.coeffs.scale(lam)
        bound += lam * rat(b)
    if combo != objective.coeffs:
        raise InternalCertificateError("dual combination does not match objective")
    if bound != outcome.value:
        raise InternalCertificateError("dual objective differs from primal value")
    for (f, rel, b), lam in zip(constraints, outcome.dual):
        if lam != 0 and f(x) != rat(b):
            raise InternalCertificateError("complementary slackness violated")


def _verify_infeasible(constraints, outcome: Infeasible) -> None:
    combo = Vector.zero(constraints[0][0].dim)
    offset = ZERO
    for (f, rel, b), lam in zip(constraints, outcome.multipliers):
        if rel == GE and lam < 0:
            raise InternalCertificateError("negative multiplier on a >= constraint")
        if rel == LE and lam > 0:
            raise InternalCertificateError("positive multiplier on a <= constraint")
        combo = combo + f.coeffs.scale(lam)
        offset += lam * rat(b)
    if not combo.is_zero():
        raise InternalCertificateError("Farkas combination is not the zero functional")
    if offset <= 0:
        raise InternalCertificateError("Farkas combination fails to contradict")
    if outcome.farkas.coeffs != combo or outcome.offset != offset:
        raise InternalCertificateError("stored Farkas data inconsistent")


def _verify_unbounded(objective, constraints, sense, outcome: Unbounded) -> None:
    r = outcome.ray
    if r.is_zero():
        raise InternalCertificateError("unbounded ray is zero")
    for f, rel, b in constraints:
        val = f(r)
        if rel == GE and val < 0:
            raise InternalCertificateError("ray leaves the feasible set (>=)")
        if rel == LE and val > 0:
            raise InternalCertificateError("ray leaves the feasible set (<=)")
        if rel == EQ and val != 0:
            raise InternalCertificateError("ray leaves the feasible set (=)")
    improvement = objective(r)
    if sense == "min" and improvement >= 0:
        raise InternalCertificateError("ray does not improve a min objective")
    if sense == "max" and improvement <= 0:
        raise InternalCertificateError("ray does not improve a max objective")


# ---------------------------------------------------------------------------
# Hull membership and polytope separation
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class HullMembership:
    member: bool
    weights: tuple[Fraction, ...] | None
    separator: Functional | None
    threshold: Fraction | None


def point_in_hull(points: Sequence[Vector], q: Vector) -> HullMembership:
    """Decide ``q in conv(points)`` with an exact certificate either way.

    Member: convex weights with ``sum w_i p_i = q``.  Non-member: a functional
    ``f`` and threshold ``c`` with ``f(q) < c <= f(p_i)`` for every i.
    """
    if not points:
        raise DegenerateInput("point list must be nonempty")
    n = q.dim
    for p in points:
        if p.dim != n:
            raise DimensionMismatch("hull point dimension differs from query")
    k = len(points)
    constraints: list[Constraint] = []
    # Coordinates of sum w_i p_i = q, then sum w_i = 1, then w_i >= 0.
    for j in range(n):
        constraints.append(
            (Functional(Vector([p[j] for p in points])), EQ, q[j])
        )
    constraints.append((Functional(Vector([ONE] * k)), EQ, ONE))
    for i in range(k):
        constraints.append((Functional(Vector.unit(k, i)), GE, ZERO))
    outcome = solve_lp(Functional(Vector.zero(k)), constraints, "min")
    if isinstance(outcome, Optimal):
        return HullMembership(
            member=True,
            weights=tuple(outcome.point.coords),
            separator=None,
            threshold=None,
        )
    assert isinstance(outcome, Infeasible)
    # Farkas multipliers: mu_j on coordinate rows, nu on the sum row, tau_i >= 0
    # on the sign rows give  sum_j mu_j p_i[j] + nu + tau_i = 0 for each i and
    # sum_j mu_j q_j + nu > 0.  Then f := -mu separates with c := nu.
    mu = outcome.multipliers[:n]
    nu = outcome.multipliers[n]
    f = Functional(Vector([-m for m in mu]))
    c = nu
    for p in points:
        if not f(p) >= c:
            raise InternalCertificateError("hull separator fails on a point")
    if not f(q) < c:
        raise InternalCertificateError("hull separator fails on the query")
    return HullMembership(member=False, weights=None, separator=f, threshold=c)


@dataclass(frozen=True)
class SeparatingHyperplane:
    f: Functional
    beta: Fraction
    gamma: Fraction
    strict: bool

    def __post_init__(self):
        if self.f.is_zero():
            raise ZeroFunctionalError()
        if self.beta < self.gamma:
            raise InternalCertificateError("beta < gamma in a separating hyperplane")
        if self.strict and self.beta <= self.gamma:
            raise InternalCertificateError("strict hyperplane without a gap")


class ZeroFunctionalError(InternalCertificateError):
    def __init__(self):
        super().__init__("separating hyperplane with zero functional")


@dataclass(frozen=True)
class IntersectionWitness:
    point: Vector
    weights_p: tuple[Fraction, ...]
    weights_q: tuple[Fraction, ...]


def separate_polytopes(
    P: Sequence[Vector], Q: Sequence[Vector], mode: str = "strict"
) -> SeparatingHyperplane | IntersectionWitness:
    """Separate conv(P) from conv(Q).

    strict: when the hulls are disjoint, returns the hyperplane maximizing the
    additive gap ``beta - gamma`` under the normalization ``|f_j| <= 1`` with
    ``min_P f >= beta > gamma >= max_Q f``; otherwise a common point with
    convex weights for both hulls.  weak: any ``f != 0`` with
    ``min_P f >= max_Q f`` when one exists (hulls may touch).
    """
    if mode not in ("weak", "strict"):
        raise ValueError("mode must be 'weak' or 'strict'")
    if not P or not Q:
        raise DegenerateInput("vertex lists must be nonempty")
    n = P[0].dim
    for v in itertools.chain(P, Q):
        if v.dim != n:
            raise DimensionMismatch("vertex dimension mismatch")

    if mode == "strict":
        f, beta, gamma = _max_gap(P, Q, n, pin=None)
        if beta > gamma:
            return SeparatingHyperplane(f=f, beta=beta, gamma=gamma, strict=True)
        return _common_point(P, Q, n)

    best = None
    for j in range(n):
        for sigma in (ONE, -ONE):
            f, beta, gamma = _max_gap(P, Q, n, pin=(j, sigma))
            if beta >= gamma and (best is None or beta - gamma > best[1] - best[2]):
                best = (f, beta, gamma)
    if best is not None:
        f, beta, gamma = best
        return SeparatingHyperplane(f=f, beta=beta, gamma=gamma, strict=beta > gamma)
    return _common_point(P, Q, n)


def _max_gap(P, Q, n, pin):
    """Maximize beta - gamma over f in the box, f.p >= beta, f.q <= gamma."""
    # Variables: (f_1..f_n, beta, gamma).
    width = n + 2
    constraints: list[Constraint] = []
    for p in P:
        row = list(p.coords) + [-ONE, ZERO]
        constraints.append((Functional(Vector(row)), GE, ZERO))
    for q in Q:
        row = [-c for c in q.coords] + [ZERO, ONE]
        constraints.append((Functional(Vector(row)), GE, ZERO))
    for j in range(n):
        constraints.append((Functional(Vector.unit(width, j)), LE, ONE))
        constraints.append((Functional(Vector.unit(width, j)), GE, -ONE))
    if pin is not None:
        j, sigma = pin
        constraints.append((Functional(Vector.unit(width, j)), EQ, sigma))
    obj = [ZERO] * width
    obj[n] = ONE
    obj[n + 1] = -ONE
    outcome = solve_lp(Functional(Vector(obj)), constraints, "max")
    assert isinstance(outcome, Optimal)
    x = outcome.point
    return Functional(Vector(x.coords[:n])), x[n], x[n + 1]


def _common_point(P, Q, n) -> IntersectionWitness:
    k, l = len(P), len(Q)
    width = k + l
    constraints: list[Constraint] = []
    for j in range(n):
        row = [p[j] for p in P] + [-q[j] for q in Q]
        constraints.append((Functional(Vector(row)), EQ, ZERO))
    constraints.append(
        (Functional(Vector([ONE] * k + [ZERO] * l)), EQ, ONE)
    )
    constraints.append(
        (Functional(Vector([ZERO] * k + [ONE] * l)), EQ, ONE)
    )
    for i in range(width):
        constraints.append((Functional(Vector.unit(width, i)), GE, ZERO))
    outcome = solve_lp(Functional(Vector.zero(width)), constraints, "min")
    if not isinstance(outcome, Optimal):
        raise InternalCertificateError(
            "no common point found although the gap LP reported contact"
        )
    w = outcome.point
    lam = tuple(w.coords[:k])
    mu = tuple(w.coords[k:])
    point = Vector.zero(n)
    for wi, p in zip(lam, P):
        point = point + p.scale(wi)
    return IntersectionWitness(point=point, weights_p=lam, weights_q=mu)
