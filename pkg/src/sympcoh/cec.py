"""Chevalley-Eilenberg complex of a Lie algebra given by structure equations.

A Lie algebra is recorded dually: the ambient dimension n together with the
differential of each coframe generator as an invariant 2-form.  The exterior
differential extends to all degrees as an anti-derivation,

    d(e^{i1...ik}) = sum_j (-1)^(j-1) e^{i1} ^ ... ^ de^{ij} ^ ... ^ e^{ik},

and d o d = 0 is exactly the Jacobi identity.  The cohomology of this finite
complex is the invariant (left-invariant) de Rham cohomology of any compact
quotient of the corresponding simply connected group.
"""

from fractions import Fraction
from math import comb

from .forms import KForm, matrix_of, merge_sign
from .linalg import DimensionMismatch, RationalMatrix, Subspace, rank

_ZERO = Fraction(0)


class LieAlgebra:
    """Dimension n plus the 2-form differential of each coframe generator.

    Construction checks shapes only; the Jacobi identity is a separate,
    reportable check (see ``validate``) so that ill-formed structure
    equations can be diagnosed rather than rejected blindly.
    """

    __slots__ = ("dim", "gen_differentials")

    def __init__(self, dim: int, gen_differentials):
        gens = tuple(gen_differentials)
        if len(gens) != dim:
            raise DimensionMismatch("need one generator differential per dimension")
        for g in gens:
            if not isinstance(g, KForm) or g.n != dim or g.degree != 2:
                raise DimensionMismatch("generator differentials must be 2-forms on R^dim")
        self.dim = dim
        self.gen_differentials = gens

    @classmethod
    def abelian(cls, dim: int) -> "LieAlgebra":
        return cls(dim, [KForm.zero(dim, 2) for _ in range(dim)])

    def __eq__(self, other):
        if not isinstance(other, LieAlgebra):
            return NotImplemented
        return self.dim == other.dim and self.gen_differentials == other.gen_differentials

    def __hash__(self):
        return hash((self.dim, self.gen_differentials))

    def __repr__(self):
        return f"LieAlgebra(dim={self.dim})"


def differential(g: LieAlgebra, a: KForm) -> KForm:
    """Exterior differential, extended from the generators as an anti-derivation."""
    if a.n != g.dim:
        raise DimensionMismatch("form does not live on the algebra's space")
    out: dict = {}
    for mask, c in a.coeffs.items():
        slot_sign = 1
        rem = mask
        while rem:
            low = rem & -rem
            rem ^= low
            dgen = g.gen_differentials[low.bit_length() - 1]
            if dgen.coeffs:
                prefix = mask & (low - 1)
                suffix = (mask ^ low) ^ prefix
                for dm, dc in dgen.coeffs.items():
                    s1 = merge_sign(prefix, dm)
                    if s1 == 0:
                        continue
                    s2 = merge_sign(prefix | dm, suffix)
                    if s2 == 0:
                        continue
                    key = prefix | dm | suffix
                    out[key] = out.get(key, _ZERO) + c * dc * (slot_sign * s1 * s2)
            slot_sign = -slot_sign
    return KForm(g.dim, a.degree + 1, out)


def validate(g: LieAlgebra) -> int | None:
    """Jacobi check: d(de^m) must vanish for every generator.

    Returns None when the structure equations define a Lie algebra, else the
    1-based index of the first generator whose differential is not closed.
    """
    for m, dgen in enumerate(g.gen_differentials, start=1):
        if not differential(g, dgen).is_zero():
            return m
    return None


def d_matrix(g: LieAlgebra, k: int) -> RationalMatrix:
    """Matrix of d_k : degree k -> degree k+1 in the lexicographic bases."""
    if not 0 <= k <= g.dim:
        raise ValueError(f"degree {k} out of range 0..{g.dim}")
    return matrix_of(lambda a: differential(g, a), g.dim, k, g.dim, k + 1)


class BettiTable:
    """Invariant de Rham dimensions b_0 ... b_n of a validated algebra."""

    __slots__ = ("b",)

    def __init__(self, b):
        self.b = tuple(int(x) for x in b)

    def euler_characteristic(self) -> int:
        return sum((-1) ** k * bk for k, bk in enumerate(self.b))

    def __eq__(self, other):
        if isinstance(other, BettiTable):
            return self.b == other.b
        return self.b == tuple(other)

    def __iter__(self):
        return iter(self.b)

    def __getitem__(self, k):
        return self.b[k]

    def __repr__(self):
        return f"BettiTable{self.b}"


def betti(g: LieAlgebra) -> BettiTable:
    """b_k = dim ker d_k - rank d_(k-1), computed exactly from ranks."""
    bad = validate(g)
    if bad is not None:
        raise ValueError(f"structure equations violate Jacobi at generator {bad}")
    n = g.dim
    ranks = [rank(d_matrix(g, k)) for k in range(n + 1)]
    b = []
    for k in range(n + 1):
        below = ranks[k - 1] if k > 0 else 0
        b.append(comb(n, k) - ranks[k] - below)
    return BettiTable(b)


def _bracket_vectors(g: LieAlgebra) -> dict:
    """[e_i, e_j] for i < j, read off the structure equations.

    With de^k = sum a^k_{ij} e^{ij} the dual pairing gives
    [e_i, e_j] = -sum_k a^k_{ij} e_k.
    """
    n = g.dim
    out: dict = {}
    for k, dgen in enumerate(g.gen_differentials):
        for mask, c in dgen.coeffs.items():
            low = mask & -mask
            i = low.bit_length() - 1
            j = (mask ^ low).bit_length() - 1
            vec = out.setdefault((i, j), [_ZERO] * n)
            vec[k] -= c
    return out


def is_nilpotent(g: LieAlgebra) -> bool:
    """Lower central series test on the brackets recovered from d."""
    n = g.dim
    brackets = _bracket_vectors(g)

    def ad(i: int, vec) -> list:
        out = [_ZERO] * n
        for j, vj in enumerate(vec):
            if vj == 0 or j == i:
                continue
            key = (i, j) if i < j else (j, i)
            bv = brackets.get(key)
            if bv is None:
                continue
            sgn = 1 if i < j else -1
            for k in range(n):
                if bv[k] != 0:
                    out[k] += sgn * vj * bv[k]
        return out

    current = Subspace.full(n)
    while current.dim:
        nxt = Subspace(n, [ad(i, v) for i in range(n) for v in current.basis])
        if nxt.dim == current.dim:
            return False
        current = nxt
    return True
