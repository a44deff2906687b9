"""Exterior algebra of (R^n)* with exact rational coefficients.

Basis forms e^{i1...ik} are encoded as bitmasks: bit (i-1) set means the
generator e^i occurs, so wedge products and interior products reduce to
integer bit fiddling.  Generator labels are 1-based everywhere in the public
interface, matching the usual e^1, ..., e^n coframe notation.

Sign conventions, fixed once and used by every operator built on top:

* e^{I} ^ e^{J} carries (-1)^inversions, counting pairs (i in I, j in J)
  with i > j;
* the interior product with e_i removes the label i with sign
  (-1)^(position of i in the ascending index list - 1);
* a bivector P contracts a k-form as  sum_{i<j} P^{ij} i_{e_i} i_{e_j}.

The composite conventions are pinned operationally by the commutator
identity [contraction, wedge-with-omega] = (n-k) id, which is exercised by
the test suite for every catalog algebra.
"""

from fractions import Fraction
from itertools import combinations
from typing import Callable, Iterable, Mapping, Sequence

from .linalg import DimensionMismatch, RationalMatrix

_ZERO = Fraction(0)

MAX_GENERATORS = 63  # bitmask encoding bound; far above any catalog entry


def mask_from_indices(indices: Iterable[int], n: int) -> int:
    """Bitmask of a strictly increasing sequence of 1-based labels."""
    mask = 0
    prev = 0
    for i in indices:
        if not 1 <= i <= n:
            raise ValueError(f"generator label {i} out of range 1..{n}")
        if i <= prev:
            raise ValueError("indices must be strictly increasing")
        mask |= 1 << (i - 1)
        prev = i
    return mask


def indices_from_mask(mask: int) -> tuple:
    """Ascending 1-based labels of a bitmask."""
    out = []
    while mask:
        low = mask & -mask
        out.append(low.bit_length())
        mask ^= low
    return tuple(out)


def basis_masks(n: int, k: int) -> list:
    """Degree-k basis masks in lexicographic order of their index tuples.

    This ordering is normative for every matrix built in the package.
    """
    if k < 0 or k > n:
        return []
    return [sum(1 << (i - 1) for i in combo) for combo in combinations(range(1, n + 1), k)]


def merge_sign(m1: int, m2: int) -> int:
    """Sign of e^{I} ^ e^{J} when merging sorted index sets; 0 on overlap."""
    if m1 & m2:
        return 0
    swaps = 0
    m = m2
    while m:
        low = m & -m
        swaps += (m1 >> low.bit_length()).bit_count()
        m ^= low
    return -1 if swaps & 1 else 1


def _interior(bit: int, mask: int) -> tuple[int, int]:
    """Interior product with e_(bit+1) on a basis mask: (sign, new mask)."""
    b = 1 << bit
    if not mask & b:
        return 0, mask
    below = (mask & (b - 1)).bit_count()
    return (-1 if below & 1 else 1), mask ^ b


class KForm:
    """Homogeneous degree-k form with exact rational coefficients.

    Zero coefficients are never stored.  A zero form still remembers its
    degree, so degree-dependent operators stay well defined on it.
    """

    __slots__ = ("n", "degree", "coeffs")

    def __init__(self, n: int, degree: int, coeffs: Mapping[int, Fraction] | None = None):
        if not 0 <= n <= MAX_GENERATORS:
            raise ValueError(f"ambient dimension must be in 0..{MAX_GENERATORS}")
        if degree < 0:
            raise ValueError("degree must be nonnegative")
        clean = {}
        if coeffs:
            if degree > n:
                raise ValueError(f"no nonzero forms of degree {degree} on R^{n}")
            top = 1 << n
            for mask, c in coeffs.items():
                c = Fraction(c)
                if c == 0:
                    continue
                if mask < 0 or mask >= top:
                    raise ValueError("multi-index out of range")
                if mask.bit_count() != degree:
                    raise ValueError("multi-index degree mismatch")
                clean[mask] = c
        self.n = n
        self.degree = degree
        self.coeffs = clean

    @classmethod
    def zero(cls, n: int, degree: int) -> "KForm":
        return cls(n, degree)

    @classmethod
    def basis(cls, n: int, indices: Sequence[int], coefficient=1) -> "KForm":
        """Basis form e^{indices}; unsorted labels are normalized with sign."""
        idx = list(indices)
        if len(set(idx)) != len(idx):
            raise ValueError("repeated index in a basis form")
        sign = 1
        for i in range(len(idx)):
            for j in range(i + 1, len(idx)):
                if idx[i] > idx[j]:
                    sign = -sign
        mask = mask_from_indices(sorted(idx), n)
        return cls(n, len(idx), {mask: Fraction(coefficient) * sign})

    @classmethod
    def constant(cls, n: int, value) -> "KForm":
        return cls(n, 0, {0: Fraction(value)})

    def is_zero(self) -> bool:
        return not self.coeffs

    def terms(self):
        """(mask, coefficient) pairs in the normative lexicographic order."""
        return sorted(self.coeffs.items(), key=lambda t: indices_from_mask(t[0]))

    def coefficient(self, indices: Sequence[int]) -> Fraction:
        return self.coeffs.get(mask_from_indices(sorted(indices), self.n), _ZERO)

    def __add__(self, other: "KForm") -> "KForm":
        if self.n != other.n:
            raise DimensionMismatch("forms live on different ambient spaces")
        if self.degree != other.degree:
            # the zero form belongs to every degree; only it may cross over
            if not self.coeffs:
                return KForm(other.n, other.degree, dict(other.coeffs))
            if not other.coeffs:
                return KForm(self.n, self.degree, dict(self.coeffs))
            raise DimensionMismatch("forms have different degrees")
        out = dict(self.coeffs)
        for mask, c in other.coeffs.items():
            out[mask] = out.get(mask, _ZERO) + c
        return KForm(self.n, self.degree, out)

    def __sub__(self, other: "KForm") -> "KForm":
        return self + (-other)

    def __neg__(self) -> "KForm":
        return KForm(self.n, self.degree, {m: -c for m, c in self.coeffs.items()})

    def __mul__(self, scalar) -> "KForm":
        s = Fraction(scalar)
        return KForm(self.n, self.degree, {m: c * s for m, c in self.coeffs.items()})

    __rmul__ = __mul__

    def __eq__(self, other) -> bool:
        if not isinstance(other, KForm):
            return NotImplemented
        if self.n != other.n:
            return False
        if not self.coeffs and not other.coeffs:
            return True
        return self.degree == other.degree and self.coeffs == other.coeffs

    def __hash__(self):
        degree = self.degree if self.coeffs else -1
        return hash((self.n, degree, frozenset(self.coeffs.items())))

    def to_vector(self) -> tuple:
        """Coefficient vector in the lexicographic basis of its degree."""
        return tuple(self.coeffs.get(m, _ZERO) for m in basis_masks(self.n, self.degree))

    @classmethod
    def from_vector(cls, n: int, degree: int, vec: Sequence) -> "KForm":
        masks = basis_masks(n, degree)
        if len(vec) != len(masks):
            raise DimensionMismatch("coefficient vector has wrong length")
        return cls(n, degree, dict(zip(masks, (Fraction(v) for v in vec))))

    def __repr__(self):
        if not self.coeffs:
            return f"KForm({self.n}, deg {self.degree}, 0)"
        body = " + ".join(
            f"{c}*e{''.join(map(str, indices_from_mask(m)))}" for m, c in self.terms()
        )
        return f"KForm({self.n}, deg {self.degree}, {body})"


def wedge(a: KForm, b: KForm) -> KForm:
    """Exterior product; bilinear, graded-commutative."""
    if a.n != b.n:
        raise DimensionMismatch("forms live on different ambient spaces")
    degree = a.degree + b.degree
    if degree > a.n:
        return KForm(a.n, degree)
    out: dict = {}
    for m1, c1 in a.coeffs.items():
        for m2, c2 in b.coeffs.items():
            s = merge_sign(m1, m2)
            if s == 0:
                continue
            mask = m1 | m2
            out[mask] = out.get(mask, _ZERO) + c1 * c2 * s
    return KForm(a.n, degree, out)


class Bivector:
    """Antisymmetric bivector, stored by its strictly upper coefficients.

    Used as the Poisson tensor inverse to a nondegenerate 2-form.
    """

    __slots__ = ("n", "coeffs")

    def __init__(self, n: int, coeffs: Mapping[tuple[int, int], Fraction]):
        self.n = n
        clean = {}
        for (i, j), c in coeffs.items():
            if not (1 <= i < j <= n):
                raise ValueError("bivector keys must satisfy 1 <= i < j <= n")
            c = Fraction(c)
            if c != 0:
                clean[(i, j)] = c
        self.coeffs = clean

    def full_matrix(self) -> RationalMatrix:
        rows = [[_ZERO] * self.n for _ in range(self.n)]
        for (i, j), c in self.coeffs.items():
            rows[i - 1][j - 1] = c
            rows[j - 1][i - 1] = -c
        return RationalMatrix(rows)

    def __eq__(self, other):
        if not isinstance(other, Bivector):
            return NotImplemented
        return self.n == other.n and self.coeffs == other.coeffs

    def __repr__(self):
        return f"Bivector(n={self.n}, {len(self.coeffs)} terms)"


def two_form_matrix(omega: KForm) -> RationalMatrix:
    """Antisymmetric coefficient matrix W with W[i][j] = omega(e_i, e_j)."""
    if omega.degree != 2:
        raise ValueError("expected a 2-form")
    n = omega.n
    rows = [[_ZERO] * n for _ in range(n)]
    for mask, c in omega.coeffs.items():
        i, j = indices_from_mask(mask)
        rows[i - 1][j - 1] = c
        rows[j - 1][i - 1] = -c
    return RationalMatrix(rows)


def poisson_bivector(omega: KForm) -> Bivector:
    """Inverse of a nondegenerate 2-form, as a bivector.

    Raises ValueError when the coefficient matrix is singular.
    """
    inv = two_form_matrix(omega).inverse()
    coeffs = {}
    for i in range(1, omega.n + 1):
        for j in range(i + 1, omega.n + 1):
            c = inv.entries[i - 1][j - 1]
            if c != 0:
                coeffs[(i, j)] = c
    return Bivector(omega.n, coeffs)


def contract(p: Bivector, a: KForm) -> KForm:
    """Contraction sum_{i<j} P^{ij} i_{e_i} i_{e_j} a; degree drops by two.

    Forms of degree below two contract to the zero 0-form.
    """
    if p.n != a.n:
        raise DimensionMismatch("bivector and form live on different spaces")
    if a.degree < 2:
        return KForm(a.n, 0)
    out: dict = {}
    for (i, j), pij in p.coeffs.items():
        bi, bj = i - 1, j - 1
        for mask, c in a.coeffs.items():
            s2, m2 = _interior(bj, mask)
            if s2 == 0:
                continue
            s1, m1 = _interior(bi, m2)
            if s1 == 0:
                continue
            val = pij * c * (s1 * s2)
            out[m1] = out.get(m1, _ZERO) + val
    return KForm(a.n, a.degree - 2, out)


def pullback_along(m: RationalMatrix, a: KForm) -> KForm:
    """Pullback of a along the linear map with matrix m.

    The matrix sends a source space of dimension ``m.cols`` to the target
    space of dimension ``m.rows`` where ``a`` lives; each target coframe
    generator e^i pulls back to the i-th row of the matrix.
    """
    if m.rows != a.n:
        raise DimensionMismatch("form does not live on the map's target space")
    src = m.cols
    result: dict = {}
    for mask, c in a.coeffs.items():
        partial = {0: c}
        rem = mask
        while rem and partial:
            low = rem & -rem
            rem ^= low
            row = m.entries[low.bit_length() - 1]
            nxt: dict = {}
            for pm, pc in partial.items():
                for col in range(src):
                    v = row[col]
                    if v == 0:
                        continue
                    s = merge_sign(pm, 1 << col)
                    if s == 0:
                        continue
                    key = pm | (1 << col)
                    nxt[key] = nxt.get(key, _ZERO) + pc * v * s
            partial = nxt
        for pm, pc in partial.items():
            result[pm] = result.get(pm, _ZERO) + pc
    return KForm(src, a.degree, result)


def j_action(j: RationalMatrix, a: KForm) -> KForm:
    """Action (J a)(v_1, ..., v_k) = a(J v_1, ..., J v_k) on forms."""
    if j.rows != j.cols:
        raise DimensionMismatch("structure matrix must be square")
    return pullback_along(j, a)


def j_derivation(j: RationalMatrix, a: KForm) -> KForm:
    """Derivation extension of J: replace one wedge slot at a time.

    On forms of pure complex bidegree (p, q) this operator acts with
    eigenvalue i(p - q), which is what the bigrading projectors use.
    """
    if j.rows != j.cols or j.rows != a.n:
        raise DimensionMismatch("structure matrix does not match the form")
    out: dict = {}
    for mask, c in a.coeffs.items():
        rem = mask
        while rem:
            low = rem & -rem
            rem ^= low
            rest = mask ^ low
            row = j.entries[low.bit_length() - 1]
            prefix = rest & (low - 1)
            suffix = rest ^ prefix
            for col in range(a.n):
                v = row[col]
                if v == 0:
                    continue
                b = 1 << col
                s1 = merge_sign(prefix, b)
                if s1 == 0:
                    continue
                s2 = merge_sign(prefix | b, suffix)
                if s2 == 0:
                    continue
                key = prefix | b | suffix
                out[key] = out.get(key, _ZERO) + c * v * s1 * s2
    return KForm(a.n, a.degree, out)


def matrix_of(
    op: Callable[[KForm], KForm],
    n_in: int,
    k_in: int,
    n_out: int,
    k_out: int,
) -> RationalMatrix:
    """Matrix of a linear operator between graded pieces.

    Columns are indexed by the degree-``k_in`` basis of R^``n_in`` and rows
    by the degree-``k_out`` basis of R^``n_out``, both in lexicographic
    order.
    """
    cols = basis_masks(n_in, k_in)
    rows = basis_masks(n_out, k_out)
    row_index = {m: i for i, m in enumerate(rows)}
    entries = [[_ZERO] * len(cols) for _ in rows]
    for jcol, mask in enumerate(cols):
        image = op(KForm(n_in, k_in, {mask: Fraction(1)}))
        if image.coeffs and (image.degree != k_out or image.n != n_out):
            raise DimensionMismatch("operator image has unexpected grading")
        for m, c in image.coeffs.items():
            entries[row_index[m]][jcol] = c
    return RationalMatrix(entries, rows=len(rows), cols=len(cols))
