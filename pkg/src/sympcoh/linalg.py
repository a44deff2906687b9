"""Exact linear algebra over the rationals.

Everything in this package runs on ``fractions.Fraction``; no floating point
appears anywhere.  Ranks are computed by fraction-free (Bareiss) elimination
on denominator-cleared integer rows, which keeps intermediate entries bounded.
Kernels and subspace bases come from Gauss-Jordan reduction and are always
stored in reduced row echelon form with leading entry 1, so equal subspaces
carry identical bases and every derived output is reproducible byte for byte.
"""

from fractions import Fraction
from math import lcm
from typing import Iterable, NamedTuple, Sequence

_ZERO = Fraction(0)
_ONE = Fraction(1)


class DimensionMismatch(ValueError):
    """Operands live in incompatible spaces."""


class ContainmentError(ValueError):
    """A required subspace inclusion fails to hold."""


def _fraction_row(row: Iterable) -> tuple:
    return tuple(Fraction(x) for x in row)


class RationalMatrix:
    """Dense matrix of exact rationals with a fixed shape.

    Zero-row and zero-column matrices are legal; they show up naturally as
    operators into or out of trivial graded pieces.
    """

    __slots__ = ("rows", "cols", "entries")

    def __init__(self, entries, rows: int | None = None, cols: int | None = None):
        ents = tuple(_fraction_row(r) for r in entries)
        if rows is None:
            rows = len(ents)
        if cols is None:
            cols = len(ents[0]) if ents else 0
        if len(ents) != rows or any(len(r) != cols for r in ents):
            raise DimensionMismatch("ragged or mis-sized matrix data")
        self.rows = rows
        self.cols = cols
        self.entries = ents

    @classmethod
    def identity(cls, n: int) -> "RationalMatrix":
        return cls([[_ONE if i == j else _ZERO for j in range(n)] for i in range(n)])

    @classmethod
    def zero(cls, rows: int, cols: int) -> "RationalMatrix":
        return cls([[_ZERO] * cols for _ in range(rows)], rows=rows, cols=cols)

    def transpose(self) -> "RationalMatrix":
        return RationalMatrix(
            [[self.entries[i][j] for i in range(self.rows)] for j in range(self.cols)],
            rows=self.cols,
            cols=self.rows,
        )

    def __matmul__(self, other: "RationalMatrix") -> "RationalMatrix":
        if self.cols != other.rows:
            raise DimensionMismatch(
                f"cannot multiply {self.rows}x{self.cols} by {other.rows}x{other.cols}"
            )
        out = [[_ZERO] * other.cols for _ in range(self.rows)]
        for i in range(self.rows):
            srow = self.entries[i]
            orow = out[i]
            for k in range(self.cols):
                a = srow[k]
                if a == 0:
                    continue
                brow = other.entries[k]
                for j in range(other.cols):
                    b = brow[j]
                    if b != 0:
                        orow[j] += a * b
        return RationalMatrix(out, rows=self.rows, cols=other.cols)

    def __eq__(self, other) -> bool:
        if not isinstance(other, RationalMatrix):
            return NotImplemented
        return (
            self.rows == other.rows
            and self.cols == other.cols
            and self.entries == other.entries
        )

    def __hash__(self):
        return hash((self.rows, self.cols, self.entries))

    def is_zero(self) -> bool:
        return all(x == 0 for row in self.entries for x in row)

    def column(self, j: int) -> tuple:
        return tuple(self.entries[i][j] for i in range(self.rows))

    def columns(self) -> list:
        return [self.column(j) for j in range(self.cols)]

    def inverse(self) -> "RationalMatrix":
        if self.rows != self.cols:
            raise DimensionMismatch("only square matrices can be inverted")
        n = self.rows
        work = [list(row) + [_ONE if i == j else _ZERO for j in range(n)]
                for i, row in enumerate(self.entries)]
        r = 0
        for c in range(n):
            piv = next((i for i in range(r, n) if work[i][c] != 0), None)
            if piv is None:
                raise ValueError("matrix is singular")
            work[r], work[piv] = work[piv], work[r]
            inv = 1 / work[r][c]
            work[r] = [x * inv for x in work[r]]
            for i in range(n):
                if i != r and work[i][c] != 0:
                    f = work[i][c]
                    work[i] = [a - f * b for a, b in zip(work[i], work[r])]
            r += 1
        return RationalMatrix([row[n:] for row in work])

    def __repr__(self):
        return f"RationalMatrix({self.rows}x{self.cols})"


def stack_rows(top: RationalMatrix, bottom: RationalMatrix) -> RationalMatrix:
    if top.cols != bottom.cols:
        raise DimensionMismatch("row stacking requires equal column counts")
    return RationalMatrix(
        list(top.entries) + list(bottom.entries),
        rows=top.rows + bottom.rows,
        cols=top.cols,
    )


def concat_cols(left: RationalMatrix, right: RationalMatrix) -> RationalMatrix:
    if left.rows != right.rows:
        raise DimensionMismatch("column concatenation requires equal row counts")
    return RationalMatrix(
        [list(a) + list(b) for a, b in zip(left.entries, right.entries)],
        rows=left.rows,
        cols=left.cols + right.cols,
    )


def matvec(m: RationalMatrix, v: Sequence) -> tuple:
    if len(v) != m.cols:
        raise DimensionMismatch(f"vector length {len(v)} != {m.cols} columns")
    out = []
    for row in m.entries:
        s = _ZERO
        for a, b in zip(row, v):
            if a != 0 and b != 0:
                s += a * b
        out.append(s)
    return tuple(out)


def _integer_rows(entries) -> list:
    """Scale each row by the lcm of its denominators; rank is unchanged."""
    out = []
    for row in entries:
        mult = lcm(*(f.denominator for f in row)) if row else 1
        out.append([int(f * mult) for f in row])
    return out


def _bareiss_rank(rows: list) -> int:
    """Rank of an integer matrix by fraction-free elimination.

    All divisions below are exact by the Bareiss identity, so the whole
    computation stays in (arbitrary precision) integers.
    """
    m = len(rows)
    n = len(rows[0]) if m else 0
    r = 0
    prev = 1
    for c in range(n):
        piv = None
        for i in range(r, m):
            if rows[i][c]:
                piv = i
                break
        if piv is None:
            continue
        if piv != r:
            rows[r], rows[piv] = rows[piv], rows[r]
        p = rows[r][c]
        for i in range(r + 1, m):
            ric = rows[i][c]
            if ric == 0 and p == prev:
                continue
            rowi = rows[i]
            rowr = rows[r]
            if ric == 0:
                for j in range(c, n):
                    rowi[j] = rowi[j] * p // prev
            else:
                for j in range(c, n):
                    rowi[j] = (rowi[j] * p - ric * rowr[j]) // prev
        prev = p
        r += 1
        if r == m:
            break
    return r


def rank(m: RationalMatrix) -> int:
    """Rank over the rationals via Bareiss elimination."""
    if m.rows == 0 or m.cols == 0:
        return 0
    return _bareiss_rank(_integer_rows(m.entries))


def det(m: RationalMatrix) -> Fraction:
    """Determinant by exact Gaussian elimination with column pivoting."""
    if m.rows != m.cols:
        raise DimensionMismatch("determinant needs a square matrix")
    n = m.rows
    if n == 0:
        return _ONE
    work = [list(row) for row in m.entries]
    sign = 1
    result = _ONE
    for c in range(n):
        piv = next((i for i in range(c, n) if work[i][c] != 0), None)
        if piv is None:
            return _ZERO
        if piv != c:
            work[c], work[piv] = work[piv], work[c]
            sign = -sign
        p = work[c][c]
        result *= p
        for i in range(c + 1, n):
            if work[i][c] != 0:
                f = work[i][c] / p
                work[i] = [a - f * b for a, b in zip(work[i], work[c])]
    return sign * result


def int_det(rows: Sequence[Sequence[int]]) -> int:
    """Determinant of a small integer matrix, fraction-free."""
    n = len(rows)
    if n == 0:
        return 1
    work = [list(r) for r in rows]
    sign = 1
    prev = 1
    for c in range(n - 1):
        piv = next((i for i in range(c, n) if work[i][c]), None)
        if piv is None:
            return 0
        if piv != c:
            work[c], work[piv] = work[piv], work[c]
            sign = -sign
        p = work[c][c]
        for i in range(c + 1, n):
            ric = work[i][c]
            for j in range(c + 1, n):
                work[i][j] = (work[i][j] * p - ric * work[c][j]) // prev
        prev = p
    return sign * work[n - 1][n - 1]


def _rref(rows: list) -> tuple[list, list]:
    """In-place reduced row echelon form; returns (nonzero rows, pivot cols)."""
    m = len(rows)
    n = len(rows[0]) if m else 0
    pivots = []
    r = 0
    for c in range(n):
        piv = next((i for i in range(r, m) if rows[i][c] != 0), None)
        if piv is None:
            continue
        rows[r], rows[piv] = rows[piv], rows[r]
        inv = 1 / rows[r][c]
        rows[r] = [x * inv for x in rows[r]]
        for i in range(m):
            if i != r and rows[i][c] != 0:
                f = rows[i][c]
                rows[i] = [a - f * b for a, b in zip(rows[i], rows[r])]
        pivots.append(c)
        r += 1
        if r == m:
            break
    return rows[:r], pivots


class Subspace:
    """Linear subspace of Q^n, stored by its canonical (RREF) basis.

    The basis rows are independent by construction, have leading entry 1 and
    do not depend on the order or scaling of the spanning vectors supplied.
    """

    __slots__ = ("ambient_dim", "basis")

    def __init__(self, ambient_dim: int, basis: Sequence[Sequence] = ()):
        self.ambient_dim = ambient_dim
        rows = [list(_fraction_row(v)) for v in basis]
        for v in rows:
            if len(v) != ambient_dim:
                raise DimensionMismatch("basis vector has wrong length")
        reduced, _ = _rref(rows)
        self.basis = tuple(tuple(v) for v in reduced if any(x != 0 for x in v))

    @classmethod
    def zero(cls, ambient_dim: int) -> "Subspace":
        return cls(ambient_dim)

    @classmethod
    def full(cls, ambient_dim: int) -> "Subspace":
        return cls(ambient_dim, RationalMatrix.identity(ambient_dim).entries)

    @property
    def dim(self) -> int:
        return len(self.basis)

    def _check_ambient(self, other: "Subspace") -> None:
        if self.ambient_dim != other.ambient_dim:
            raise DimensionMismatch(
                f"ambient dimensions differ: {self.ambient_dim} vs {other.ambient_dim}"
            )

    def contains_vector(self, v: Sequence) -> bool:
        if len(v) != self.ambient_dim:
            raise DimensionMismatch("vector has wrong length")
        resid = list(_fraction_row(v))
        for row in self.basis:
            lead = next(i for i, x in enumerate(row) if x != 0)
            f = resid[lead]
            if f != 0:
                for i in range(lead, self.ambient_dim):
                    resid[i] -= f * row[i]
        return all(x == 0 for x in resid)

    def contains(self, other: "Subspace") -> bool:
        self._check_ambient(other)
        return all(self.contains_vector(v) for v in other.basis)

    def intersect(self, other: "Subspace") -> "Subspace":
        """Basis of the intersection, via the kernel of the stacked system."""
        self._check_ambient(other)
        p, q = self.dim, other.dim
        if p == 0 or q == 0:
            return Subspace.zero(self.ambient_dim)
        system = RationalMatrix(
            [
                [self.basis[i][r] for i in range(p)]
                + [-other.basis[j][r] for j in range(q)]
                for r in range(self.ambient_dim)
            ]
        )
        vectors = []
        for coeffs in kernel(system).basis:
            vec = [_ZERO] * self.ambient_dim
            for i in range(p):
                c = coeffs[i]
                if c != 0:
                    for r in range(self.ambient_dim):
                        vec[r] += c * self.basis[i][r]
            vectors.append(vec)
        return Subspace(self.ambient_dim, vectors)

    def sum(self, other: "Subspace") -> "Subspace":
        self._check_ambient(other)
        return Subspace(self.ambient_dim, list(self.basis) + list(other.basis))

    def quotient_dim(self, sub: "Subspace") -> int:
        """dim(self / sub); raises unless sub really is contained in self."""
        self._check_ambient(sub)
        if not self.contains(sub):
            raise ContainmentError("claimed subspace is not contained in the space")
        return self.dim - sub.dim

    def __eq__(self, other) -> bool:
        if not isinstance(other, Subspace):
            return NotImplemented
        return self.ambient_dim == other.ambient_dim and self.basis == other.basis

    def __hash__(self):
        return hash((self.ambient_dim, self.basis))

    def __repr__(self):
        return f"Subspace(dim {self.dim} of Q^{self.ambient_dim})"


def kernel(m: RationalMatrix) -> Subspace:
    """Canonical basis of the null space; its dimension is cols - rank."""
    if m.cols == 0:
        return Subspace.zero(0)
    if m.rows == 0:
        return Subspace.full(m.cols)
    rows, pivots = _rref([list(r) for r in m.entries])
    pivot_set = set(pivots)
    vectors = []
    for free in range(m.cols):
        if free in pivot_set:
            continue
        vec = [_ZERO] * m.cols
        vec[free] = _ONE
        for i, p in enumerate(pivots):
            vec[p] = -rows[i][free]
        vectors.append(vec)
    return Subspace(m.cols, vectors)


def column_space(m: RationalMatrix) -> Subspace:
    """Span of the columns, as a subspace of Q^rows."""
    return Subspace(m.rows, m.columns())


class InducedMap(NamedTuple):
    rank: int
    injective: bool
    surjective: bool


def induced_map_rank(
    f: RationalMatrix,
    v1: Subspace,
    w1: Subspace,
    v2: Subspace,
    w2: Subspace,
) -> InducedMap:
    """Rank data of the map V1/W1 -> V2/W2 induced by f.

    The inclusions W1 <= V1, W2 <= V2, f(V1) <= V2 and f(W1) <= W2 are all
    verified, never assumed; a violation raises ContainmentError.
    """
    if f.cols != v1.ambient_dim or f.rows != v2.ambient_dim:
        raise DimensionMismatch("map shape does not match the ambient spaces")
    if not v1.contains(w1):
        raise ContainmentError("W1 is not contained in V1")
    if not v2.contains(w2):
        raise ContainmentError("W2 is not contained in V2")
    images = [matvec(f, v) for v in v1.basis]
    for img in images:
        if not v2.contains_vector(img):
            raise ContainmentError("f does not map V1 into V2")
    for w in w1.basis:
        if not w2.contains_vector(matvec(f, w)):
            raise ContainmentError("f does not map W1 into W2")
    pushed = Subspace(v2.ambient_dim, list(w2.basis) + images)
    r = pushed.dim - w2.dim
    return InducedMap(
        rank=r,
        injective=(r == v1.dim - w1.dim),
        surjective=(r == v2.dim - w2.dim),
    )
