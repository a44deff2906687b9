"""Symplectic operators and cohomologies on the invariant complex.

Given a closed nondegenerate invariant 2-form omega on a 2n-dimensional Lie
algebra, this module provides the Lefschetz operator L = omega ^ ., its
adjoint Lambda (contraction with the Poisson bivector omega^{-1}), the
symplectic star, and the codifferential

    d^Lambda = d Lambda - Lambda d = (-1)^(k+1) * star d star,

together with the cohomologies it cuts out of the invariant complex:

* the d^Lambda-cohomology    ker d^Lambda / im d^Lambda,
* the Bott-Chern groups      (ker d  ^ ker d^Lambda) / im d d^Lambda,
* the Aeppli groups          ker d d^Lambda / (im d + im d^Lambda),

all per degree, all over exact rationals.  The star operator is built from
the Poisson pairing on k-forms, so no sign convention is taken on faith: the
test suite locks star star = id and the two expressions for d^Lambda against
each other for every catalog structure.

The non-HLC degree of a structure in degree k is the gap between the
Bott-Chern and de Rham dimensions; it vanishes in every degree exactly when
the hard Lefschetz maps on invariant cohomology are bijective.
"""

from fractions import Fraction
from math import comb, factorial, lcm
from typing import NamedTuple

from . import cec
from .forms import (
    KForm,
    basis_masks,
    contract,
    indices_from_mask,
    matrix_of,
    merge_sign,
    poisson_bivector,
    wedge,
)
from .linalg import (
    InducedMap,
    RationalMatrix,
    Subspace,
    column_space,
    concat_cols,
    induced_map_rank,
    int_det,
    kernel,
    matvec,
    rank,
    stack_rows,
)

_ZERO = Fraction(0)


class NotClosedError(ValueError):
    """The candidate 2-form is not closed; carries the residual 3-form."""

    def __init__(self, residual: KForm):
        self.residual = residual
        super().__init__(f"2-form is not closed; d(omega) = {residual!r}")


class DegenerateError(ValueError):
    """The candidate 2-form has vanishing top power."""


class ConsistencyError(RuntimeError):
    """An operator containment that must hold by theory failed; sign bug."""


class SymplecticStructure:
    """Validated closed nondegenerate invariant 2-form with derived data.

    Matrices of the operators are cached per degree; all cached values are
    pure functions of the immutable inputs.
    """

    def __init__(self, algebra: cec.LieAlgebra, omega: KForm):
        bad = cec.validate(algebra)
        if bad is not None:
            raise ValueError(f"structure equations violate Jacobi at generator {bad}")
        if omega.n != algebra.dim or omega.degree != 2:
            raise ValueError("omega must be a 2-form on the algebra's space")
        residual = cec.differential(algebra, omega)
        if not residual.is_zero():
            raise NotClosedError(residual)
        if algebra.dim % 2:
            raise DegenerateError("odd-dimensional spaces carry no symplectic form")
        half = algebra.dim // 2
        top = omega
        for _ in range(half - 1):
            top = wedge(top, omega)
        if top.is_zero():
            raise DegenerateError("top power of omega vanishes")
        self.algebra = algebra
        self.omega = omega
        self.half_dim = half
        self.poisson = poisson_bivector(omega)
        full_mask = (1 << algebra.dim) - 1
        # normalized volume omega^n / n!
        self._volume_coeff = top.coeffs[full_mask] / factorial(half)
        self._d_mats: dict = {}
        self._dlam_mats: dict = {}
        self._ddlam_mats: dict = {}
        self._star_mats: dict = {}
        self._spaces: dict = {}
        self._omega_powers = {0: KForm.constant(algebra.dim, 1), 1: omega}

    # ---- cached operator matrices -------------------------------------

    def d_mat(self, k: int) -> RationalMatrix:
        n = self.algebra.dim
        if k < 0 or k > n:
            return RationalMatrix.zero(len(basis_masks(n, k + 1)), len(basis_masks(n, k)))
        if k not in self._d_mats:
            self._d_mats[k] = cec.d_matrix(self.algebra, k)
        return self._d_mats[k]

    def dlam_mat(self, k: int) -> RationalMatrix:
        n = self.algebra.dim
        if k < 1 or k > n:
            return RationalMatrix.zero(len(basis_masks(n, k - 1)), len(basis_masks(n, k)))
        if k not in self._dlam_mats:
            self._dlam_mats[k] = matrix_of(
                lambda a: d_lambda(self, a), n, k, n, k - 1
            )
        return self._dlam_mats[k]

    def ddlam_mat(self, k: int) -> RationalMatrix:
        """Matrix of d o d^Lambda landing back in degree k."""
        if k not in self._ddlam_mats:
            self._ddlam_mats[k] = self.d_mat(k - 1) @ self.dlam_mat(k)
        return self._ddlam_mats[k]

    def omega_power(self, j: int) -> KForm:
        while j not in self._omega_powers:
            m = max(self._omega_powers)
            self._omega_powers[m + 1] = wedge(self._omega_powers[m], self.omega)
        return self._omega_powers[j]

    def star_mat(self, k: int) -> RationalMatrix:
        if k not in self._star_mats:
            self._star_mats[k] = self._build_star(k)
        return self._star_mats[k]

    def _build_star(self, k: int) -> RationalMatrix:
        """Matrix of the symplectic star on degree k.

        Defined by beta ^ star(alpha) = <beta, alpha> omega^n/n!, where the
        pairing on basis k-forms is the k x k minor determinant of the
        Poisson matrix.  Since wedging into the top degree pairs each basis
        form with its complement only, the matrix is written down directly.
        """
        n = self.algebra.dim
        masks = basis_masks(n, k)
        out_masks = basis_masks(n, n - k)
        row_index = {m: i for i, m in enumerate(out_masks)}
        p_full = self.poisson.full_matrix().entries
        den = lcm(*(x.denominator for row in p_full for x in row)) if n else 1
        p_int = [[int(x * den) for x in row] for row in p_full]
        scale = Fraction(1, den**k) * self._volume_coeff
        full_mask = (1 << n) - 1
        entries = [[_ZERO] * len(masks) for _ in out_masks]
        idx = {m: [i - 1 for i in indices_from_mask(m)] for m in masks}
        for m in masks:
            comp = full_mask ^ m
            sgn = merge_sign(m, comp)
            factor = scale / sgn
            row = entries[row_index[comp]]
            rows_m = idx[m]
            for jcol, mp in enumerate(masks):
                cols_mp = idx[mp]
                d = int_det([[p_int[a][b] for b in cols_mp] for a in rows_m])
                if d:
                    row[jcol] = d * factor
        return RationalMatrix(entries, rows=len(out_masks), cols=len(masks))

    # ---- cohomology building blocks ------------------------------------

    def _rank_d(self, k: int) -> int:
        key = ("rank_d", k)
        cache = self.__dict__.setdefault("_rank_cache", {})
        if key not in cache:
            cache[key] = rank(self.d_mat(k))
        return cache[key]

    def _rank_dlam(self, k: int) -> int:
        cache = self.__dict__.setdefault("_rank_cache", {})
        key = ("rank_dlam", k)
        if key not in cache:
            cache[key] = rank(self.dlam_mat(k))
        return cache[key]

    def betti(self, k: int) -> int:
        n = self.algebra.dim
        if k < 0 or k > n:
            return 0
        below = self._rank_d(k - 1) if k > 0 else 0
        return comb(n, k) - self._rank_d(k) - below

    def _space(self, key, build) -> Subspace:
        if key not in self._spaces:
            self._spaces[key] = build()
        return self._spaces[key]

    def ker_d(self, k: int) -> Subspace:
        return self._space(("ker_d", k), lambda: kernel(self.d_mat(k)))

    def im_d(self, k: int) -> Subspace:
        """Image of d from below, inside degree k."""

        def build():
            n = self.algebra.dim
            if k <= 0 or k > n:
                return Subspace.zero(len(basis_masks(n, k)))
            return column_space(self.d_mat(k - 1))

        return self._space(("im_d", k), build)

    def ker_bc(self, k: int) -> Subspace:
        return self._space(
            ("ker_bc", k),
            lambda: kernel(stack_rows(self.d_mat(k), self.dlam_mat(k))),
        )

    def im_ddlam(self, k: int) -> Subspace:
        return self._space(("im_ddlam", k), lambda: column_space(self.ddlam_mat(k)))

    def ker_ddlam(self, k: int) -> Subspace:
        return self._space(("ker_ddlam", k), lambda: kernel(self.ddlam_mat(k)))

    def im_sum(self, k: int) -> Subspace:
        """im d + im d^Lambda inside degree k."""
        return self._space(
            ("im_sum", k),
            lambda: column_space(concat_cols(self.d_mat(k - 1), self.dlam_mat(k + 1))),
        )


def make(algebra: cec.LieAlgebra, omega: KForm) -> SymplecticStructure:
    """Validate (closedness, nondegeneracy) and build the derived structure."""
    return SymplecticStructure(algebra, omega)


# ---- the operators on forms ---------------------------------------------


def lefschetz(s: SymplecticStructure, a: KForm) -> KForm:
    """L(a) = omega ^ a."""
    return wedge(s.omega, a)


def dual_lefschetz(s: SymplecticStructure, a: KForm) -> KForm:
    """Lambda(a): contraction with the Poisson bivector; degree drops by 2."""
    return contract(s.poisson, a)


def d_lambda(s: SymplecticStructure, a: KForm) -> KForm:
    """Symplectic codifferential d Lambda - Lambda d; degree drops by 1."""
    k = a.degree
    n = s.algebra.dim
    if a.n != n:
        raise ValueError("form does not live on the structure's space")
    if k == 0:
        return KForm.zero(n, 0)
    out = KForm.zero(n, k - 1)
    if k >= 2:
        out = out + cec.differential(s.algebra, contract(s.poisson, a))
    return out - contract(s.poisson, cec.differential(s.algebra, a))


def star(s: SymplecticStructure, a: KForm) -> KForm:
    """Symplectic star, degree k -> 2n-k; an involution."""
    n = s.algebra.dim
    if a.n != n:
        raise ValueError("form does not live on the structure's space")
    k = a.degree
    vec = matvec(s.star_mat(k), a.to_vector())
    return KForm.from_vector(n, n - k, vec)


def star_d_star(s: SymplecticStructure, a: KForm) -> KForm:
    """(-1)^(k+1) star d star; must agree with d_lambda everywhere."""
    k = a.degree
    inner = star(s, a)
    if inner.degree >= s.algebra.dim:
        return KForm.zero(s.algebra.dim, max(k - 1, 0))
    out = star(s, cec.differential(s.algebra, inner))
    return out if (k + 1) % 2 == 0 else -out


# ---- cohomology dimensions ----------------------------------------------


def h_dlambda(s: SymplecticStructure, k: int) -> int:
    """dim of ker d^Lambda / im d^Lambda in degree k."""
    n = s.algebra.dim
    if k < 0 or k > n:
        return 0
    ker_dim = comb(n, k) - s._rank_dlam(k)
    return ker_dim - s._rank_dlam(k + 1)


def h_bottchern(s: SymplecticStructure, k: int) -> int:
    """dim of (ker d ^ ker d^Lambda) / im d d^Lambda in degree k.

    The containment im d d^Lambda <= ker d ^ ker d^Lambda is verified at
    runtime; its failure would mean an operator sign bug, not bad input.
    """
    n = s.algebra.dim
    if k < 0 or k > n:
        return 0
    ddlam = s.ddlam_mat(k)
    if not (s.d_mat(k) @ ddlam).is_zero() or not (s.dlam_mat(k) @ ddlam).is_zero():
        raise ConsistencyError("im d d^Lambda escapes ker d ^ ker d^Lambda")
    ker_dim = comb(n, k) - rank(stack_rows(s.d_mat(k), s.dlam_mat(k)))
    return ker_dim - rank(ddlam)


def h_aeppli(s: SymplecticStructure, k: int) -> int:
    """dim of ker d d^Lambda / (im d + im d^Lambda) in degree k."""
    n = s.algebra.dim
    if k < 0 or k > n:
        return 0
    ddlam = s.ddlam_mat(k)
    denom = concat_cols(s.d_mat(k - 1), s.dlam_mat(k + 1))
    if not (ddlam @ denom).is_zero():
        raise ConsistencyError("im d + im d^Lambda escapes ker d d^Lambda")
    ker_dim = comb(n, k) - rank(ddlam)
    return ker_dim - rank(denom)


class NaturalMaps(NamedTuple):
    bc_to_dr: InducedMap
    dr_to_a: InducedMap


def natural_map_ranks(s: SymplecticStructure, k: int) -> NaturalMaps:
    """Rank data of the identity-induced maps H_BC -> H_dR -> H_A in degree k."""
    n = s.algebra.dim
    ident = RationalMatrix.identity(comb(n, k))
    bc_to_dr = induced_map_rank(ident, s.ker_bc(k), s.im_ddlam(k), s.ker_d(k), s.im_d(k))
    dr_to_a = induced_map_rank(ident, s.ker_d(k), s.im_d(k), s.ker_ddlam(k), s.im_sum(k))
    return NaturalMaps(bc_to_dr, dr_to_a)


def lefschetz_power_map(s: SymplecticStructure, j: int) -> InducedMap:
    """Induced map of wedging with omega^j from degree n-j to degree n+j."""
    n = s.algebra.dim
    half = s.half_dim
    power = s.omega_power(j)
    mat = matrix_of(lambda a: wedge(power, a), n, half - j, n, half + j)
    return induced_map_rank(
        mat, s.ker_d(half - j), s.im_d(half - j), s.ker_d(half + j), s.im_d(half + j)
    )


class CohomologyReport:
    """Per-degree table of the invariant cohomology dimensions and verdicts.

    Indices run over 0..2n.  ``delta`` is reported as twice ``delta_tilde``;
    the Aeppli dimensions are computed independently and the equality with
    the Bott-Chern dimensions is asserted before the report is returned.
    """

    __slots__ = (
        "dim",
        "b",
        "h_dlambda",
        "h_bottchern",
        "h_aeppli",
        "delta",
        "delta_tilde",
        "lefschetz_ranks",
        "natural_maps",
        "hlc",
        "ddlambda_lemma",
    )

    def __init__(self, **kw):
        for name in self.__slots__:
            setattr(self, name, kw[name])

    def __repr__(self):
        return (
            f"CohomologyReport(dim={self.dim}, hlc={self.hlc}, "
            f"delta_tilde={self.delta_tilde})"
        )


def report(s: SymplecticStructure) -> CohomologyReport:
    """Full cohomology table with HLC and d d^Lambda-lemma verdicts."""
    n = s.algebra.dim
    b = tuple(s.betti(k) for k in range(n + 1))
    h_dl = tuple(h_dlambda(s, k) for k in range(n + 1))
    h_bc = tuple(h_bottchern(s, k) for k in range(n + 1))
    h_a = tuple(h_aeppli(s, k) for k in range(n + 1))
    for k in range(n + 1):
        if h_bc[k] != h_a[k]:
            raise ConsistencyError(
                f"Bott-Chern/Aeppli dimensions disagree in degree {k}"
            )
        if h_bc[k] != h_bc[n - k]:
            raise ConsistencyError(f"Bott-Chern duality fails in degree {k}")
    delta_tilde = tuple(h_bc[k] - b[k] for k in range(n + 1))
    delta = tuple(2 * dt for dt in delta_tilde)
    lef = tuple(lefschetz_power_map(s, j) for j in range(s.half_dim + 1))
    natural = tuple(natural_map_ranks(s, k) for k in range(n + 1))
    return CohomologyReport(
        dim=n,
        b=b,
        h_dlambda=h_dl,
        h_bottchern=h_bc,
        h_aeppli=h_a,
        delta=delta,
        delta_tilde=delta_tilde,
        lefschetz_ranks=tuple(m.rank for m in lef),
        natural_maps=natural,
        hlc=all(m.injective and m.surjective for m in lef),
        ddlambda_lemma=all(dt == 0 for dt in delta_tilde),
    )
