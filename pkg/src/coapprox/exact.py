"""Exact rational scalars, vectors, matrices and the two small
optimization kernels everything else is built on.

No floating point is used anywhere: existence decisions downstream
(sign cells, ranks, system consistency) are discontinuous in the data,
so every quantity is a `fractions.Fraction`.
"""
from __future__ import annotations

import math
import re
from dataclasses import dataclass
from enum import Enum
from fractions import Fraction
from typing import Iterable, Sequence

from .errors import CapacityError, ValidationError

Q = Fraction
Vec = tuple[Q, ...]
Mat = tuple[Vec, ...]

_RATIONAL_RE = re.compile(r"^[+-]?\d+(/\d+)?$")

MINIMAX_MAX_ROWS = 64


def parse_rational(text: str) -> Q:
    """Parse the strict text form: optional sign, integer, optional '/den'.

    Rejects floats, exponents and zero denominators; this is the grammar
    used verbatim in all JSON I/O.
    """
    s = text.strip()
    if not _RATIONAL_RE.match(s):
        raise ValidationError(f"not a rational literal: {text!r}")
    if "/" in s and int(s.split("/")[1]) == 0:
        raise ValidationError(f"zero denominator: {text!r}")
    return Q(s)


def format_rational(x: Q) -> str:
    """Inverse of parse_rational; '13' or '-3/7', always lowest terms."""
    return str(x)


def vec(items: Iterable) -> Vec:
    """Coerce ints/strings/Fractions into an immutable rational vector."""
    out = []
    for item in items:
        if isinstance(item, str):
            out.append(parse_rational(item))
        else:
            out.append(Q(item))
    return tuple(out)


def mat(rows: Iterable[Iterable]) -> Mat:
    return tuple(vec(r) for r in rows)


def zero_vec(n: int) -> Vec:
    return (Q(0),) * n


def is_zero(v: Vec) -> bool:
    return all(x == 0 for x in v)


def l1_norm(v: Vec) -> Q:
    return sum((abs(x) for x in v), Q(0))


def dot(u: Vec, v: Vec) -> Q:
    return sum((a * b for a, b in zip(u, v, strict=True)), Q(0))


def vec_add(u: Vec, v: Vec) -> Vec:
    return tuple(a + b for a, b in zip(u, v, strict=True))


def vec_sub(u: Vec, v: Vec) -> Vec:
    return tuple(a - b for a, b in zip(u, v, strict=True))


def vec_scale(c: Q, v: Vec) -> Vec:
    return tuple(c * x for x in v)


def mat_vec(rows: Mat, x: Vec) -> Vec:
    return tuple(dot(r, x) for r in rows)


def transpose(rows: Mat) -> Mat:
    return tuple(zip(*rows)) if rows else ()


def rank(rows: Sequence[Vec]) -> int:
    """Exact rank by Gaussian elimination (entries coerced to Fraction)."""
    work = [[Q(x) for x in r] for r in rows]
    nrows = len(work)
    ncols = len(work[0]) if work else 0
    r = 0
    for c in range(ncols):
        piv = next((i for i in range(r, nrows) if work[i][c] != 0), None)
        if piv is None:
            continue
        work[r], work[piv] = work[piv], work[r]
        pv = work[r][c]
        for i in range(r + 1, nrows):
            f = work[i][c]
            if f == 0:
                continue
            ratio = f / pv
            work[i] = [a - ratio * b for a, b in zip(work[i], work[r])]
        r += 1
        if r == nrows:
            break
    return r


def integerize(v: Vec) -> Vec:
    """Scale by the positive rational that makes entries coprime integers.

    The direction of the vector is preserved (no sign flip).
    """
    if is_zero(v):
        return v
    denom_lcm = 1
    for x in v:
        denom_lcm = denom_lcm * x.denominator // math.gcd(denom_lcm, x.denominator)
    ints = [int(x * denom_lcm) for x in v]
    g = 0
    for k in ints:
        g = math.gcd(g, k)
    return tuple(Q(k // g) for k in ints)


class SystemStatus(Enum):
    NO_SOLUTION = "no-solution"
    UNIQUE = "unique"
    AFFINE_FAMILY = "affine-family"


@dataclass(frozen=True)
class LinearSystemResult:
    status: SystemStatus
    solution: Vec | None
    nullspace_basis: tuple[Vec, ...]


def solve_linear(rows: Mat, rhs: Vec) -> LinearSystemResult:
    """Solve rows·x = rhs exactly by Gauss-Jordan elimination.

    Inconsistency is a status, not an error.  For AFFINE_FAMILY the
    particular solution has zeros on the free coordinates and the
    nullspace basis has one vector per free coordinate.
    """
    if not rows or not rows[0]:
        raise ValidationError("empty linear system")
    nrows = len(rows)
    ncols = len(rows[0])
    if len(rhs) != nrows:
        raise ValidationError("right-hand side length does not match row count")
    aug = [[Q(x) for x in r] + [Q(b)] for r, b in zip(rows, rhs)]
    pivot_cols: list[int] = []
    r = 0
    for c in range(ncols):
        piv = next((i for i in range(r, nrows) if aug[i][c] != 0), None)
        if piv is None:
            continue
        aug[r], aug[piv] = aug[piv], aug[r]
        pv = aug[r][c]
        aug[r] = [x / pv for x in aug[r]]
        for i in range(nrows):
            if i != r and aug[i][c] != 0:
                f = aug[i][c]
                aug[i] = [a - f * b for a, b in zip(aug[i], aug[r])]
        pivot_cols.append(c)
        r += 1
        if r == nrows:
            break
    for i in range(r, nrows):
        if aug[i][ncols] != 0:
            return LinearSystemResult(SystemStatus.NO_SOLUTION, None, ())
    solution = [Q(0)] * ncols
    for i, c in enumerate(pivot_cols):
        solution[c] = aug[i][ncols]
    free_cols = [c for c in range(ncols) if c not in pivot_cols]
    if not free_cols:
        return LinearSystemResult(SystemStatus.UNIQUE, tuple(solution), ())
    null_basis = []
    for fc in free_cols:
        v = [Q(0)] * ncols
        v[fc] = Q(1)
        for i, c in enumerate(pivot_cols):
            v[c] = -aug[i][fc]
        null_basis.append(tuple(v))
    return LinearSystemResult(SystemStatus.AFFINE_FAMILY, tuple(solution), tuple(null_basis))


class _AllReals:
    def __contains__(self, _x) -> bool:
        return True

    def __repr__(self) -> str:  # pragma: no cover
        return "AllReals"


ALL_REALS = _AllReals()


@dataclass(frozen=True)
class Interval:
    """Closed rational interval [lo, hi] (lo == hi for a single point)."""

    lo: Q
    hi: Q

    def __contains__(self, x) -> bool:
        return self.lo <= x <= self.hi


def minimize_1d_l1(y: Vec, z: Vec):
    """Exact global minimum of the convex map t -> ||y + t*z||_1.

    Returns (min_value, minimizer) where the minimizer is a closed
    Interval, or ALL_REALS when z is the zero vector.  Works by weighted
    median over the breakpoints -y_i/z_i with weights |z_i|.
    """
    if len(y) != len(z):
        raise ValidationError("minimize_1d_l1 needs vectors of equal length")
    weights: dict[Q, Q] = {}
    for yi, zi in zip(y, z):
        if zi != 0:
            t = -yi / zi
            weights[t] = weights.get(t, Q(0)) + abs(zi)
    if not weights:
        return l1_norm(y), ALL_REALS
    breakpoints = sorted(weights)
    total = sum(weights.values())
    acc = Q(0)
    for j, t in enumerate(breakpoints):
        acc += weights[t]
        if 2 * acc >= total:
            if 2 * acc == total:
                lo, hi = t, breakpoints[j + 1]
            else:
                lo = hi = t
            break
    value = sum((abs(yi + lo * zi) for yi, zi in zip(y, z)), Q(0))
    return value, Interval(lo, hi)


def solve_minimax_lp(rows: Mat, rhs: Vec) -> tuple[Q, Vec]:
    """min over x of max_p |rhs_p - rows_p . x|, exactly.

    Returns (t_star, x_star) with x_star attaining t_star.  The problem
    is always feasible and bounded below by 0.  Guarded at
    MINIMAX_MAX_ROWS rows; this is a desk-scale kernel.
    """
    from .lp import LpStatus, lp_min

    nrows = len(rows)
    if nrows == 0 or not rows[0]:
        raise ValidationError("minimax needs at least one row and one column")
    if nrows > MINIMAX_MAX_ROWS:
        raise CapacityError(f"minimax kernel capped at {MINIMAX_MAX_ROWS} rows, got {nrows}")
    m = len(rows[0])
    if len(rhs) != nrows:
        raise ValidationError("minimax rhs length does not match row count")
    # Variables (x, t); minimize t subject to +-(rows.x - rhs) <= t.
    cost = zero_vec(m) + (Q(1),)
    a_ub = []
    b_ub = []
    for row, b in zip(rows, rhs):
        a_ub.append(tuple(row) + (Q(-1),))
        b_ub.append(b)
        a_ub.append(tuple(-x for x in row) + (Q(-1),))
        b_ub.append(-b)
    res = lp_min(cost, tuple(a_ub), tuple(b_ub))
    if res.status is not LpStatus.OPTIMAL:  # pragma: no cover
        raise ValidationError(f"minimax LP unexpectedly {res.status.value}")
    return res.value, res.x[:m]
