"""Exact field arithmetic and row reduction: rationals and prime fields.

Scalars are plain values: fractions.Fraction over the rationals, ints in
0..p-1 over GF(p).  A FieldSpec carries the arithmetic; matrices and vectors
never round and never overflow.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import gcd, isqrt
from typing import Sequence

Scalar = object  # Fraction over the rationals, int residue over GF(p)

_MAX_PRIME = 2**61


def _is_prime(p: int) -> bool:
    if p < 2:
        return False
    if p % 2 == 0:
        return p == 2
    d = 3
    limit = isqrt(p)
    while d <= limit:
        if p % d == 0:
            return False
        d += 2
    return True


@dataclass(frozen=True)
class FieldSpec:
    """An exact coefficient field: the rationals, or GF(p) for a prime p."""

    kind: str
    p: int | None = None

    def __post_init__(self) -> None:
        if self.kind == "rationals":
            if self.p is not None:
                raise ValueError("rationals take no modulus")
        elif self.kind == "prime_field":
            if self.p is None or not (2 <= self.p < _MAX_PRIME):
                raise ValueError(f"prime modulus out of range: {self.p}")
            if not _is_prime(self.p):
                raise ValueError(f"{self.p} is not prime")
        else:
            raise ValueError(f"unknown field kind {self.kind!r}")

    # constructors ----------------------------------------------------------

    @classmethod
    def rationals(cls) -> "FieldSpec":
        return cls("rationals")

    @classmethod
    def gf(cls, p: int) -> "FieldSpec":
        return cls("prime_field", p)

    @classmethod
    def parse(cls, token: str) -> "FieldSpec":
        """Parse a CLI field token: 'q' or 'gf:<p>'."""
        t = token.strip().lower()
        if t == "q":
            return cls.rationals()
        if t.startswith("gf:"):
            try:
                return cls.gf(int(t[3:]))
            except ValueError as exc:
                raise ValueError(f"bad field token {token!r}: {exc}") from None
        raise ValueError(f"bad field token {token!r} (expected 'q' or 'gf:<p>')")

    @property
    def is_rationals(self) -> bool:
        return self.kind == "rationals"

    def label(self) -> str:
        return "Q" if self.is_rationals else f"GF({self.p})"

    def to_json(self) -> dict:
        if self.is_rationals:
            return {"kind": "rationals"}
        return {"kind": "prime_field", "p": self.p}

    # scalar arithmetic -------------------------------------------------------

    def zero(self) -> Scalar:
        return Fraction(0) if self.is_rationals else 0

    def one(self) -> Scalar:
        return Fraction(1) if self.is_rationals else 1

    def from_int(self, k: int) -> Scalar:
        return Fraction(k) if self.is_rationals else k % self.p

    def add(self, a: Scalar, b: Scalar) -> Scalar:
        return a + b if self.is_rationals else (a + b) % self.p

    def sub(self, a: Scalar, b: Scalar) -> Scalar:
        return a - b if self.is_rationals else (a - b) % self.p

    def mul(self, a: Scalar, b: Scalar) -> Scalar:
        return a * b if self.is_rationals else (a * b) % self.p

    def neg(self, a: Scalar) -> Scalar:
        return -a if self.is_rationals else (-a) % self.p

    def inv(self, a: Scalar) -> Scalar:
        """Multiplicative inverse; extended Euclid over GF(p)."""
        if self.is_rationals:
            if a == 0:
                raise ZeroDivisionError("inverse of zero")
            return Fraction(1) / a
        a %= self.p
        if a == 0:
            raise ZeroDivisionError("inverse of zero")
        r0, r1 = self.p, a
        s0, s1 = 0, 1
        while r1:
            q = r0 // r1
            r0, r1 = r1, r0 - q * r1
            s0, s1 = s1, s0 - q * s1
        return s0 % self.p

    def is_zero(self, a: Scalar) -> bool:
        return a == 0

    def scalar_to_json(self, a: Scalar):
        if self.is_rationals:
            f = Fraction(a)
            return f"{f.numerator}/{f.denominator}"
        return int(a)

    def scalar_from_json(self, obj) -> Scalar:
        if self.is_rationals:
            num, den = str(obj).split("/")
            return Fraction(int(num), int(den))
        return int(obj) % self.p


QQ = FieldSpec.rationals()
GF2 = FieldSpec.gf(2)
GF3 = FieldSpec.gf(3)
DEFAULT_FIELDS = (QQ, GF2, GF3)


@dataclass(frozen=True)
class Matrix:
    """Dense row-major matrix over a FieldSpec.  rows == 0 is allowed."""

    rows: int
    cols: int
    entries: tuple[tuple[Scalar, ...], ...]
    field: FieldSpec

    def __post_init__(self) -> None:
        if len(self.entries) != self.rows:
            raise ValueError("row count does not match entries")
        for row in self.entries:
            if len(row) != self.cols:
                raise ValueError("ragged matrix")

    @classmethod
    def from_rows(cls, rows: Sequence[Sequence[Scalar]], field: FieldSpec,
                  cols: int | None = None) -> "Matrix":
        if not rows and cols is None:
            raise ValueError("empty matrix needs an explicit column count")
        width = cols if cols is not None else len(rows[0])
        ent = tuple(tuple(field.from_int(x) if isinstance(x, int) else x for x in r)
                    for r in rows)
        return cls(len(ent), width, ent, field)

    def mat_vec(self, vec: Sequence[Scalar]) -> list[Scalar]:
        f = self.field
        out = []
        for row in self.entries:
            acc = f.zero()
            for a, x in zip(row, vec):
                acc = f.add(acc, f.mul(a, x))
            out.append(acc)
        return out

    def to_json(self) -> dict:
        f = self.field
        return {
            "field": f.to_json(),
            "rows": self.rows,
            "cols": self.cols,
            "entries": [[f.scalar_to_json(x) for x in row] for row in self.entries],
        }


def _rational_pivot_weight(x: Fraction) -> int:
    # prefer small numerator/denominator bit sizes to limit coefficient growth
    return abs(x.numerator).bit_length() + x.denominator.bit_length()


def rref(m: Matrix) -> tuple[Matrix, int, list[int]]:
    """Reduced row echelon form with exact arithmetic.

    Returns (reduced matrix, rank, pivot column indices).  Pivots are leading
    ones with zeros above and below.  Over the rationals the pivot within a
    column is the nonzero entry of smallest bit size; this choice only
    affects intermediate coefficient growth, never the result.
    """
    f = m.field
    work = [list(row) for row in m.entries]
    nrows, ncols = m.rows, m.cols
    pivot_cols: list[int] = []
    r = 0
    for c in range(ncols):
        if r >= nrows:
            break
        candidates = [i for i in range(r, nrows) if not f.is_zero(work[i][c])]
        if not candidates:
            continue
        if f.is_rationals:
            best = min(candidates, key=lambda i: _rational_pivot_weight(work[i][c]))
        else:
            best = candidates[0]
        work[r], work[best] = work[best], work[r]
        inv = f.inv(work[r][c])
        work[r] = [f.mul(inv, x) for x in work[r]]
        for i in range(nrows):
            if i != r and not f.is_zero(work[i][c]):
                factor = work[i][c]
                row_i, row_r = work[i], work[r]
                work[i] = [f.sub(a, f.mul(factor, b)) for a, b in zip(row_i, row_r)]
        pivot_cols.append(c)
        r += 1
    reduced = Matrix(nrows, ncols, tuple(tuple(row) for row in work), f)
    return reduced, len(pivot_cols), pivot_cols


def nullspace_basis(m: Matrix) -> list[list[Scalar]]:
    """Deterministic basis of {x : Mx = 0} via free-column parameterization.

    Free columns are taken in increasing order; basis vector k has a one in
    the k-th free column.  Basis size is cols - rank.
    """
    f = m.field
    reduced, rank, pivot_cols = rref(m)
    pivot_set = set(pivot_cols)
    free_cols = [c for c in range(m.cols) if c not in pivot_set]
    basis = []
    for free in free_cols:
        vec = [f.zero()] * m.cols
        vec[free] = f.one()
        for i, pc in enumerate(pivot_cols):
            vec[pc] = f.neg(reduced.entries[i][free])
        basis.append(vec)
    return basis


def rank_of_rows(vectors: Sequence[Sequence[Scalar]], field: FieldSpec,
                 length: int) -> int:
    if not vectors:
        return 0
    _, rank, _ = rref(Matrix.from_rows(vectors, field, cols=length))
    return rank


def span_equal(a: Sequence[Sequence[Scalar]], b: Sequence[Sequence[Scalar]],
               field: FieldSpec, length: int | None = None) -> bool:
    """True iff the two vector lists span the same subspace."""
    lengths = {len(v) for v in a} | {len(v) for v in b}
    if length is not None:
        lengths.add(length)
    if len(lengths) > 1:
        raise ValueError(f"mixed vector lengths: {sorted(lengths)}")
    if not lengths:
        return True
    dim = lengths.pop()
    ra = rank_of_rows(a, field, dim)
    rb = rank_of_rows(b, field, dim)
    rab = rank_of_rows(list(a) + list(b), field, dim)
    return ra == rb == rab


def integerize(vec: Sequence[Fraction]) -> list[int]:
    """Scale a rational vector to coprime integers, first nonzero positive.

    The zero vector maps to all zeros.  Used only for presentation; scaling
    never changes membership in a linear space.
    """
    fracs = [Fraction(x) for x in vec]
    lcm = 1
    for x in fracs:
        lcm = lcm * x.denominator // gcd(lcm, x.denominator)
    ints = [int(x * lcm) for x in fracs]
    content = 0
    for x in ints:
        content = gcd(content, abs(x))
    if content > 1:
        ints = [x // content for x in ints]
    for x in ints:
        if x != 0:
            if x < 0:
                ints = [-y for y in ints]
            break
    return ints


def vector_to_json(vec: Sequence[Scalar], field: FieldSpec) -> dict:
    return {
        "field": field.to_json(),
        "entries": [field.scalar_to_json(x) for x in vec],
    }
