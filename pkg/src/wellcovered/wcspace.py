"""Well-covered spaces: the MIS constraint system, its exact nullspace, and
weighting verification.

A weighting f (one field scalar per vertex) is well-covered when the sum of
f over every maximal independent set is the same.  Encoding constancy as
pairwise differences against the first MIS gives a homogeneous system whose
nullspace is exactly the well-covered space; its dimension is the
well-covered dimension.

For large MIS lists the constraint matrix is never materialized.  A fast
incremental elimination modulo a prime selects a small spanning subset of
difference rows; the exact reduced echelon computation then runs on that
subset only.  Over a prime field the selection is itself exact.  Over the
rationals the prime is only a heuristic filter, so every candidate basis
vector is verified against the full MIS list with exact integer sums, and
any violated difference row is added back until verification passes; the
final result is exact regardless of the filter prime.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence

from .graph import Graph
from .linalg import (FieldSpec, Matrix, QQ, integerize, nullspace_basis)
from .mis import DEFAULT_MIS_CAP, MisList, enumerate_mis

# Mersenne prime used only to pre-filter rows in the rationals path; results
# never depend on this choice.
_FILTER_PRIME = 2**31 - 1


@dataclass(frozen=True)
class Weighting:
    """A vertex-indexed vector of exact field scalars."""

    graph: Graph
    field: FieldSpec
    values: tuple

    def __post_init__(self) -> None:
        if len(self.values) != self.graph.n:
            raise ValueError(
                f"weighting length {len(self.values)} != vertex count {self.graph.n}")

    def to_json(self) -> list:
        return [self.field.scalar_to_json(x) for x in self.values]


@dataclass(frozen=True)
class WeightingCheck:
    """Outcome of checking a weighting for constant MIS sums.  On failure the
    witness pair holds two maximal independent sets with different sums."""

    ok: bool
    witness: tuple[tuple[int, ...], tuple[int, ...]] | None = None
    sums: tuple | None = None

    def __bool__(self) -> bool:
        return self.ok


@dataclass(frozen=True)
class WcSpace:
    """Basis and dimension of the well-covered space over one field."""

    graph: Graph
    field: FieldSpec
    basis: tuple[Weighting, ...]
    dimension: int
    mis_count: int

    @property
    def constraint_rank(self) -> int:
        return self.graph.n - self.dimension

    def basis_vectors(self) -> list[list]:
        return [list(w.values) for w in self.basis]


def constraint_matrix(g: Graph, mis: MisList, field: FieldSpec) -> Matrix:
    """Full pairwise-difference constraint system: row k is the indicator of
    MIS k+1 minus the indicator of MIS 0.  Its nullspace is the well-covered
    space over the given field."""
    if len(mis) == 0:
        raise ValueError("a valid graph always has at least one MIS")
    tuples = mis.as_sorted_tuples()
    rows = []
    for k in range(1, len(tuples)):
        row = [0] * g.n
        for v in tuples[k]:
            row[v] += 1
        for v in tuples[0]:
            row[v] -= 1
        rows.append(row)
    return Matrix.from_rows(rows, field, cols=g.n)


def _difference_row(tuples: Sequence[tuple[int, ...]], k: int, n: int) -> list[int]:
    row = [0] * n
    for v in tuples[k]:
        row[v] += 1
    for v in tuples[0]:
        row[v] -= 1
    return row


def _select_spanning_rows(tuples: Sequence[tuple[int, ...]], n: int,
                          p: int) -> list[int]:
    """Indices k whose difference row extends the row space modulo p.

    Incremental echelon elimination; each kept row is normalized to a leading
    one.  Rows reducing to zero mod p are dropped.
    """
    pivots: dict[int, list[int]] = {}
    picked: list[int] = []
    for k in range(1, len(tuples)):
        row = _difference_row(tuples, k, n)
        for c in range(n):
            x = row[c] % p
            if x == 0:
                continue
            pivot_row = pivots.get(c)
            if pivot_row is None:
                inv = pow(x, p - 2, p)
                pivots[c] = [(e * inv) % p for e in row]
                picked.append(k)
                break
            row = [(a - x * b) % p for a, b in zip(row, pivot_row)]
    return picked


def _first_nonconstant_sum(tuples: Sequence[tuple[int, ...]],
                           int_vec: Sequence[int]) -> int | None:
    """Index of the first MIS whose integer-weight sum differs from MIS 0."""
    base = sum(int_vec[v] for v in tuples[0])
    for k in range(1, len(tuples)):
        if sum(int_vec[v] for v in tuples[k]) != base:
            return k
    return None


def well_covered_space(g: Graph, field: FieldSpec, mis: MisList | None = None,
                       cap: int = DEFAULT_MIS_CAP) -> WcSpace:
    """Exact basis of the well-covered space and its dimension.

    Deterministic: basis vectors come from free-column parameterization of
    the reduced echelon form, and rational vectors are rescaled to coprime
    integers with positive leading entry.
    """
    if mis is None:
        mis = enumerate_mis(g, cap)
    elif mis.graph != g:
        raise ValueError("MIS list belongs to a different graph")
    tuples = mis.as_sorted_tuples()
    n = g.n
    filter_p = _FILTER_PRIME if field.is_rationals else field.p
    selected = _select_spanning_rows(tuples, n, filter_p)

    while True:
        rows = [_difference_row(tuples, k, n) for k in selected]
        matrix = Matrix.from_rows(rows, field, cols=n)
        raw_basis = nullspace_basis(matrix)
        if not field.is_rationals:
            basis_vectors = raw_basis
            break
        basis_vectors = []
        extra_row: int | None = None
        for vec in raw_basis:
            ints = integerize(vec)
            bad = _first_nonconstant_sum(tuples, ints)
            if bad is not None:
                extra_row = bad
                break
            basis_vectors.append([Fraction(x) for x in ints])
        if extra_row is None:
            break
        selected.append(extra_row)

    basis = tuple(
        Weighting(graph=g, field=field, values=tuple(vec))
        for vec in basis_vectors)
    return WcSpace(graph=g, field=field, basis=basis,
                   dimension=len(basis), mis_count=len(tuples))


def wcdim(g: Graph, field: FieldSpec = QQ, mis: MisList | None = None,
          cap: int = DEFAULT_MIS_CAP) -> int:
    """Dimension of the well-covered space over the given field."""
    return well_covered_space(g, field, mis=mis, cap=cap).dimension


def verify_weighting(g: Graph, f: Weighting, mis: MisList) -> WeightingCheck:
    """Check that the weighting sums to the same value over every MIS."""
    if f.graph != g:
        raise ValueError("weighting belongs to a different graph")
    if mis.graph != g:
        raise ValueError("MIS list belongs to a different graph")
    field = f.field
    tuples = mis.as_sorted_tuples()
    first = tuples[0]
    base = field.zero()
    for v in first:
        base = field.add(base, f.values[v])
    for k in range(1, len(tuples)):
        acc = field.zero()
        for v in tuples[k]:
            acc = field.add(acc, f.values[v])
        if acc != base:
            return WeightingCheck(ok=False, witness=(first, tuples[k]),
                                  sums=(base, acc))
    return WeightingCheck(ok=True)


def is_well_covered(g: Graph, cap: int = DEFAULT_MIS_CAP) -> bool:
    """True iff every maximal independent set has the same cardinality."""
    mis = enumerate_mis(g, cap)
    return len({len(s) for s in mis.sets}) == 1


def indicator_weighting(g: Graph, vs, field: FieldSpec = QQ) -> Weighting:
    """Weighting that is one on the given set and zero elsewhere."""
    s = g._check_subset(vs)
    values = tuple(field.one() if v in s else field.zero() for v in g.vertices)
    return Weighting(graph=g, field=field, values=values)


def wcspace_report(space: WcSpace, graph_id: str) -> dict:
    """JSON-ready report for one graph and one field."""
    basis = []
    for w in space.basis:
        if space.field.is_rationals:
            basis.append(integerize(w.values))
        else:
            basis.append([int(x) for x in w.values])
    return {
        "graph": graph_id,
        "field": space.field.to_json(),
        "mis_count": space.mis_count,
        "dimension": space.dimension,
        "constraint_rank": space.constraint_rank,
        "basis": basis,
    }
