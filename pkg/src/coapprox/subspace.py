"""Row-structure analysis of a subspace basis of l1^n.

The n x m matrix whose columns are the basis vectors is examined row by
row: rows that are exact scalar multiples of each other form one
component class, identically-zero rows form the zero set.  Both are
properties of the subspace itself, not of the chosen basis.  The sigma
map drops the zero-set coordinates, the rho map zeroes them in place.
"""
from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property

from .errors import DimensionError, RankDeficientError, ZeroSubspaceError
from .exact import Mat, Q, Vec, is_zero, rank


@dataclass(frozen=True)
class SubspaceBasis:
    """Basis of an m-dimensional subspace of l1^n.

    `matrix` is row-major n x m; column k is the k-th basis vector.
    Constructed through validate_basis, which guarantees full column
    rank.  All indices in this package are 0-based; the CLI converts to
    1-based coordinates on output.
    """

    n: int
    m: int
    matrix: Mat

    @cached_property
    def columns(self) -> tuple[Vec, ...]:
        return tuple(zip(*self.matrix))

    def combine(self, coeffs: Vec) -> Vec:
        """The subspace element with the given coefficients."""
        return tuple(
            sum((row[j] * coeffs[j] for j in range(self.m)), Q(0))
            for row in self.matrix
        )


@dataclass(frozen=True)
class ComponentClass:
    representative: int
    members: tuple[tuple[int, Q], ...]  # (coordinate, constant vs representative)


@dataclass(frozen=True)
class ComponentProfile:
    classes: tuple[ComponentClass, ...]
    zero_set: tuple[int, ...]
    d: int

    @cached_property
    def class_of(self) -> dict[int, tuple[int, Q]]:
        """coordinate -> (class index, proportionality constant)."""
        out = {}
        for c_idx, cls in enumerate(self.classes):
            for coord, const in cls.members:
                out[coord] = (c_idx, const)
        return out

    def partition(self) -> frozenset[frozenset[int]]:
        """The class structure as a bare partition, for invariance checks."""
        return frozenset(
            frozenset(coord for coord, _ in cls.members) for cls in self.classes
        )


def validate_basis(matrix: Mat) -> SubspaceBasis:
    """Check shape and full column rank; return the usable basis."""
    if not matrix or not matrix[0]:
        raise DimensionError("basis matrix must have at least one row and one column")
    n = len(matrix)
    m = len(matrix[0])
    if any(len(row) != m for row in matrix):
        raise DimensionError("ragged basis matrix")
    if m > n:
        raise DimensionError(f"more basis vectors ({m}) than ambient dimension ({n})")
    if rank(matrix) != m:
        raise RankDeficientError("basis vectors are linearly dependent")
    return SubspaceBasis(n=n, m=m, matrix=matrix)


def build_profile(basis: SubspaceBasis) -> ComponentProfile:
    """Group rows into proportionality classes and collect the zero set.

    The representative of each class is its smallest row index and has
    constant 1; the constant stored for any member is exact.
    """
    reps: list[int] = []
    members: list[list[tuple[int, Q]]] = []
    zero_set: list[int] = []
    rows = basis.matrix
    for i, row in enumerate(rows):
        if is_zero(row):
            zero_set.append(i)
            continue
        placed = False
        for c_idx, rep in enumerate(reps):
            rep_row = rows[rep]
            j0 = next(j for j, x in enumerate(rep_row) if x != 0)
            if row[j0] == 0:
                continue
            c = row[j0] / rep_row[j0]
            if all(row[j] == c * rep_row[j] for j in range(basis.m)):
                members[c_idx].append((i, c))
                placed = True
                break
        if not placed:
            reps.append(i)
            members.append([(i, Q(1))])
    classes = tuple(
        ComponentClass(representative=rep, members=tuple(mem))
        for rep, mem in zip(reps, members)
    )
    return ComponentProfile(classes=classes, zero_set=tuple(zero_set), d=len(classes))


@dataclass(frozen=True)
class ReducedInstance:
    """Zero-set-free image of a basis under the coordinate-dropping map.

    kept_indices records, in order, which original coordinates survive;
    it is enough to lift reduced vectors back (zeros on the dropped
    coordinates) and to apply rho.
    """

    kept_indices: tuple[int, ...]
    basis: SubspaceBasis
    zero_set: tuple[int, ...]
    original_n: int

    def sigma(self, v: Vec) -> Vec:
        if len(v) != self.original_n:
            raise DimensionError("sigma expects an ambient-length vector")
        return tuple(v[i] for i in self.kept_indices)

    def lift(self, w: Vec) -> Vec:
        """Embed a reduced vector back into l1^n with zeros on the zero set."""
        if len(w) != len(self.kept_indices):
            raise DimensionError("lift expects a reduced-length vector")
        out = [Q(0)] * self.original_n
        for pos, i in enumerate(self.kept_indices):
            out[i] = w[pos]
        return tuple(out)


def reduce_sigma(basis: SubspaceBasis, profile: ComponentProfile) -> ReducedInstance:
    """Drop the zero-set coordinates; the result has an empty zero set."""
    if len(profile.zero_set) == basis.n:
        raise ZeroSubspaceError("all coordinate rows are zero")
    zero = set(profile.zero_set)
    kept = tuple(i for i in range(basis.n) if i not in zero)
    reduced_matrix = tuple(basis.matrix[i] for i in kept)
    reduced = SubspaceBasis(n=len(kept), m=basis.m, matrix=reduced_matrix)
    return ReducedInstance(
        kept_indices=kept,
        basis=reduced,
        zero_set=profile.zero_set,
        original_n=basis.n,
    )


def apply_rho(v: Vec, profile: ComponentProfile) -> Vec:
    """Zero exactly the zero-set coordinates of v."""
    zero = set(profile.zero_set)
    return tuple(Q(0) if i in zero else x for i, x in enumerate(v))
