"""Best-coapproximation solver for subspaces of l1^n.

Empty zero set: a coefficient vector alpha solves the problem iff it
satisfies one linear equation per norming-set pair,

    sum_j alpha_j * (x . a_j) = x . b        for every sign vector x,

and a basis of the sign-vector span carries the same information, so the
assembled system is square-ish, exact, and either inconsistent (no best
coapproximation) or uniquely solvable.

Non-empty zero set Z: dropping the Z coordinates leaves a zero-set-free
problem, and the mass the target carries on Z acts as slack.  alpha is a
best coapproximation iff for every norming-set sign vector x of the
reduced basis

    | x . (sigma(b) - sigma(A) alpha) |  <=  sum_{i in Z} |b_i|,

which reduces to the equality system when the slack vanishes and to
"every alpha with ||A alpha||_1 <= ||b||_1" when the reduced target is
zero.  The feasible set is a polytope; its lexicographically extreme
points (in subspace-vector order) make the reported outcome canonical
and independent of the particular basis supplied.
"""
from __future__ import annotations

from dataclasses import dataclass
from enum import Enum
from functools import cached_property

from .errors import (
    DimensionError,
    EmptyZeroSetError,
    InternalInconsistencyError,
    NoCoapproximationError,
)
from .exact import (
    Mat,
    Q,
    SystemStatus,
    Vec,
    is_zero,
    l1_norm,
    rank,
    solve_linear,
    solve_minimax_lp,
    vec_add,
    vec_scale,
)
from .lp import LpStatus, lp_min
from .norming import (
    NormingSet,
    build_arrangement,
    enumerate_cells,
    minimal_norming_set,
    norming_dot,
)
from .subspace import (
    ComponentProfile,
    ReducedInstance,
    SubspaceBasis,
    apply_rho,
    build_profile,
    reduce_sigma,
)


class PreparedBasis:
    """A validated basis plus lazily-built analysis artifacts.

    Everything here depends only on the subspace (profile, reduction,
    arrangement, norming set), so one instance can serve many targets.
    """

    def __init__(self, basis: SubspaceBasis):
        self.basis = basis

    @cached_property
    def profile(self) -> ComponentProfile:
        return build_profile(self.basis)

    @cached_property
    def reduced(self) -> ReducedInstance:
        return reduce_sigma(self.basis, self.profile)

    @cached_property
    def norming(self) -> NormingSet:
        arr = build_arrangement(self.reduced, self.profile)
        cells = enumerate_cells(arr)
        norming = minimal_norming_set(arr, cells, self.reduced)
        if not (self.basis.m <= norming.span_dim <= self.profile.d):
            raise InternalInconsistencyError("rank sandwich m <= q <= d violated")
        return norming

    @cached_property
    def system_rows(self) -> Mat:
        """Equality rows, one per system-basis sign vector.

        Reduced coordinates throughout (identical to ambient ones when
        the zero set is empty); same for the rhs helpers below.
        """
        cols = self.reduced.basis.columns
        return tuple(
            tuple(norming_dot(x, col) for col in cols)
            for x in self.norming.system_basis
        )

    @cached_property
    def feasibility_rows(self) -> Mat:
        """Inequality rows, one per norming-set pair (all of them)."""
        cols = self.reduced.basis.columns
        return tuple(
            tuple(norming_dot(x, col) for col in cols)
            for x in self.norming.representatives
        )

    def system_rhs(self, b_reduced: Vec) -> Vec:
        return tuple(norming_dot(x, b_reduced) for x in self.norming.system_basis)

    def feasibility_rhs(self, b_reduced: Vec) -> Vec:
        return tuple(norming_dot(x, b_reduced) for x in self.norming.representatives)


def prepare(basis: SubspaceBasis) -> PreparedBasis:
    return PreparedBasis(basis)


class OutcomeKind(Enum):
    NOT_EXISTS = "not-exists"
    UNIQUE = "unique"
    POLYTOPE = "polytope"


@dataclass(frozen=True)
class PolytopeConstraints:
    """The feasible coefficient set {alpha : |rows.alpha - rhs| <= slack}."""

    rows: Mat
    rhs: Vec
    slack: Q

    def satisfied_by(self, alpha: Vec) -> bool:
        return all(
            abs(sum((r[j] * alpha[j] for j in range(len(alpha))), Q(0)) - b) <= self.slack
            for r, b in zip(self.rows, self.rhs)
        )


@dataclass(frozen=True)
class CoapproxOutcome:
    kind: OutcomeKind
    coefficients: Vec | None = None
    vector: Vec | None = None
    constraints: PolytopeConstraints | None = None
    witness: Vec | None = None

    @property
    def chosen_alpha(self) -> Vec:
        alpha = self.coefficients if self.coefficients is not None else self.witness
        if alpha is None:
            raise NoCoapproximationError("outcome carries no coefficient vector")
        return alpha


def _not_exists() -> CoapproxOutcome:
    return CoapproxOutcome(kind=OutcomeKind.NOT_EXISTS)


def _unique(basis: SubspaceBasis, alpha: Vec) -> CoapproxOutcome:
    return CoapproxOutcome(
        kind=OutcomeKind.UNIQUE, coefficients=alpha, vector=basis.combine(alpha)
    )


def solve_empty_zero_set(basis: SubspaceBasis, norming: NormingSet, b: Vec) -> CoapproxOutcome:
    """Equality-system solve for a basis whose zero set is empty."""
    if any(is_zero(row) for row in basis.matrix):
        raise DimensionError("solve_empty_zero_set requires an empty zero set")
    if len(b) != basis.n:
        raise DimensionError("target length does not match ambient dimension")
    rows = tuple(
        tuple(norming_dot(x, col) for col in basis.columns) for x in norming.system_basis
    )
    rhs = tuple(norming_dot(x, b) for x in norming.system_basis)
    res = solve_linear(rows, rhs)
    if res.status is SystemStatus.NO_SOLUTION:
        return _not_exists()
    if res.status is SystemStatus.AFFINE_FAMILY:
        raise InternalInconsistencyError(
            "underdetermined system contradicts uniqueness on empty zero set"
        )
    return _unique(basis, res.solution)


def lex_extreme_alpha(
    basis: SubspaceBasis, constraints: PolytopeConstraints, direction: int
) -> Vec:
    """Coefficients of the lexicographically extreme feasible vector.

    Lexicographic order is taken on the subspace element A.alpha
    coordinate by coordinate (direction +1 minimizes, -1 maximizes), so
    the resulting point is a property of the subspace and target alone.
    The point is found by at most m tiny LPs, pinning one independent
    coordinate functional per step.
    """
    m = basis.m
    a_ub = []
    b_ub = []
    for row, rv in zip(constraints.rows, constraints.rhs):
        a_ub.append(row)
        b_ub.append(rv + constraints.slack)
        a_ub.append(tuple(-x for x in row))
        b_ub.append(constraints.slack - rv)
    a_eq: list[Vec] = []
    b_eq: list[Q] = []
    pinned: list[Vec] = []
    for arow in basis.matrix:
        if is_zero(arow):
            continue
        if rank(pinned + [arow]) == len(pinned):
            continue
        cost = tuple(Q(direction) * x for x in arow)
        res = lp_min(cost, tuple(a_ub), tuple(b_ub), tuple(a_eq), tuple(b_eq))
        if res.status is not LpStatus.OPTIMAL:  # pragma: no cover
            raise InternalInconsistencyError("lex support LP must be solvable")
        value = sum((ar * x for ar, x in zip(arow, res.x)), Q(0))
        a_eq.append(arow)
        b_eq.append(value)
        pinned.append(arow)
        if len(pinned) == m:
            break
    res = solve_linear(tuple(pinned), tuple(b_eq))
    if res.status is not SystemStatus.UNIQUE:  # pragma: no cover
        raise InternalInconsistencyError("lex extreme point not pinned down")
    return res.solution


def solve_general(
    basis: SubspaceBasis, profile: ComponentProfile | None, b: Vec, *,
    prepared: PreparedBasis | None = None,
) -> CoapproxOutcome:
    """Decide existence and compute best coapproximation(s) to b.

    Delegates to the equality system when the zero set is empty;
    otherwise builds the slack-feasibility polytope over all norming-set
    pairs of the reduced basis.
    """
    pb = prepared if prepared is not None else prepare(basis)
    if len(b) != basis.n:
        raise DimensionError("target length does not match ambient dimension")
    membership = solve_linear(basis.matrix, b)
    if membership.status is SystemStatus.UNIQUE:
        return _unique(basis, membership.solution)
    if not pb.profile.zero_set:
        return solve_empty_zero_set(basis, pb.norming, b)

    reduced = pb.reduced
    slack = sum((abs(b[i]) for i in pb.profile.zero_set), Q(0))
    rows = pb.feasibility_rows
    rhs = pb.feasibility_rhs(reduced.sigma(b))
    t_star, _ = solve_minimax_lp(rows, rhs)
    if t_star > slack:
        return _not_exists()
    constraints = PolytopeConstraints(rows=rows, rhs=rhs, slack=slack)
    lo = lex_extreme_alpha(basis, constraints, +1)
    hi = lex_extreme_alpha(basis, constraints, -1)
    if lo == hi:
        return _unique(basis, lo)
    tight = PolytopeConstraints(rows=rows, rhs=rhs, slack=t_star)
    witness = lex_extreme_alpha(basis, tight, +1)
    return CoapproxOutcome(
        kind=OutcomeKind.POLYTOPE,
        constraints=constraints,
        witness=witness,
        vector=basis.combine(witness),
    )


@dataclass(frozen=True)
class ExistenceThreshold:
    """Critical zero-set mass: targets on the fiber with less mass have
    no best coapproximation, with at least this much always do."""

    delta0: Q
    minimizing_alpha: Vec


def existence_threshold(
    basis: SubspaceBasis, profile: ComponentProfile | None, b: Vec, *,
    prepared: PreparedBasis | None = None,
) -> ExistenceThreshold:
    pb = prepared if prepared is not None else prepare(basis)
    if len(b) != basis.n:
        raise DimensionError("target length does not match ambient dimension")
    if not pb.profile.zero_set:
        raise EmptyZeroSetError("threshold is defined only for non-empty zero sets")
    rhs = pb.feasibility_rhs(pb.reduced.sigma(b))
    delta0, alpha = solve_minimax_lp(pb.feasibility_rows, rhs)
    rho_mass = l1_norm(apply_rho(b, pb.profile))
    if delta0 > rho_mass:  # pragma: no cover
        raise InternalInconsistencyError("threshold exceeds the rho-mass upper bound")
    return ExistenceThreshold(delta0=delta0, minimizing_alpha=alpha)


@dataclass(frozen=True)
class Projection:
    """The norm-one projection of span{b, Y} onto Y.

    Fixing Y pointwise and sending b to its best coapproximation
    determines the map; apply() evaluates it at a + gamma*b for a given
    by subspace coefficients.
    """

    basis: SubspaceBasis
    target: Vec
    alpha: Vec
    image_of_target: Vec

    def apply(self, coeffs: Vec, gamma: Q) -> Vec:
        return vec_add(self.basis.combine(coeffs), vec_scale(Q(gamma), self.image_of_target))

    def input_vector(self, coeffs: Vec, gamma: Q) -> Vec:
        return vec_add(self.basis.combine(coeffs), vec_scale(Q(gamma), self.target))


def projection_map(basis: SubspaceBasis, b: Vec, outcome: CoapproxOutcome) -> Projection:
    if outcome.kind is OutcomeKind.NOT_EXISTS:
        raise NoCoapproximationError("no best coapproximation, so no norm-one projection")
    alpha = outcome.chosen_alpha
    return Projection(
        basis=basis, target=b, alpha=alpha, image_of_target=basis.combine(alpha)
    )
