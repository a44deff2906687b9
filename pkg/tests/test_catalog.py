import random
from fractions import Fraction

import pytest

from helpers import SYMPLECTIC_NAMES, sample_symplectic
from sympcoh import acx, catalog, cec, symplectic as sp
from sympcoh.catalog import complex_to_real, standard_block_j
from sympcoh.forms import KForm
from sympcoh.linalg import kernel
from sympcoh.parser import render_salamon

F = Fraction


def e(n, *indices):
    return KForm.basis(n, indices)


def test_names_and_get():
    assert catalog.names() == [
        "kodaira",
        "g1_g34m",
        "g41",
        "torus4",
        "hyperelliptic",
        "torus8",
        "etabeta5",
    ]
    with pytest.raises(KeyError):
        catalog.get("nope")


def test_all_algebras_satisfy_jacobi():
    for name in catalog.names():
        assert cec.validate(catalog.get(name).algebra) is None, name


def test_structure_equations_are_the_published_ones():
    assert render_salamon(catalog.get("kodaira").algebra) == "(0,0,0,23)"
    assert render_salamon(catalog.get("g1_g34m").algebra) == "(0,0,-23,24)"
    assert render_salamon(catalog.get("g41").algebra) == "(0,0,12,13)"
    assert render_salamon(catalog.get("torus4").algebra) == "(0,0,0,0)"
    assert render_salamon(catalog.get("hyperelliptic").algebra) == "(0,0,-24,23)"


def test_default_omegas_are_symplectic():
    for name in SYMPLECTIC_NAMES:
        entry = catalog.get(name)
        sp.make(entry.algebra, entry.default_omega)  # must not raise


def test_default_j_validates():
    for name in catalog.names():
        entry = catalog.get(name)
        acx.validate_acs(entry.algebra, entry.default_j)


def test_nilpotency_flags_match_computation():
    for name in catalog.names():
        entry = catalog.get(name)
        assert cec.is_nilpotent(entry.algebra) == entry.nilpotent, name


def test_expects_hlc_flags():
    flags = {name: catalog.get(name).expects_hlc for name in catalog.names()}
    assert flags == {
        "kodaira": False,
        "g1_g34m": True,
        "g41": False,
        "torus4": True,
        "hyperelliptic": True,
        "torus8": True,
        "etabeta5": None,
    }


# --- the ten-dimensional nilmanifold -------------------------------------------


def test_etabeta5_real_structure_equations():
    # expand (e1+ie2)^(e3+ie4) = e13 - e24 + i(e14 + e23) by hand and read
    # off the real and imaginary parts of -phi^12 - phi^34
    eta = catalog.get("etabeta5").algebra
    d9 = -e(10, 1, 3) + e(10, 2, 4) - e(10, 5, 7) + e(10, 6, 8)
    d10 = -e(10, 1, 4) - e(10, 2, 3) - e(10, 5, 8) - e(10, 6, 7)
    assert eta.gen_differentials[8] == d9
    assert eta.gen_differentials[9] == d10
    for k in range(8):
        assert eta.gen_differentials[k].is_zero()


def test_complex_to_real_trivial():
    g = complex_to_real([{}])
    assert g.dim == 2
    assert all(d.is_zero() for d in g.gen_differentials)


def test_complex_to_real_single_term_variants():
    # d phi^2 = phi^1 ^ phi^2 gives de3 = e13 - e24, de4 = e14 + e23
    g = complex_to_real([{}, {(1, 2): (1, 0)}])
    assert g.gen_differentials[2] == e(4, 1, 3) - e(4, 2, 4)
    assert g.gen_differentials[3] == e(4, 1, 4) + e(4, 2, 3)
    # and the sign flips through linearly
    h = complex_to_real([{}, {(1, 2): (-1, 0)}])
    assert h.gen_differentials[2] == -e(4, 1, 3) + e(4, 2, 4)
    # purely imaginary coefficient rotates the pair
    k = complex_to_real([{}, {(1, 2): (0, 1)}])
    assert k.gen_differentials[2] == -(e(4, 1, 4) + e(4, 2, 3))
    assert k.gen_differentials[3] == e(4, 1, 3) - e(4, 2, 4)


def test_complex_to_real_rejects_bad_pairs():
    with pytest.raises(ValueError):
        complex_to_real([{(1, 1): (1, 0)}])
    with pytest.raises(ValueError):
        complex_to_real([{(2, 1): (1, 0)}])


def test_exact_two_form_behind_the_anti_invariant_kernel():
    # the real and imaginary parts of phi^12 + phi^34 are exactly -de9, -de10
    eta = catalog.get("etabeta5").algebra
    real_part = e(10, 1, 3) - e(10, 2, 4) + e(10, 5, 7) - e(10, 6, 8)
    imag_part = e(10, 1, 4) + e(10, 2, 3) + e(10, 5, 8) + e(10, 6, 7)
    assert real_part == -eta.gen_differentials[8]
    assert imag_part == -eta.gen_differentials[9]
    # both are closed and exact: they are the image of the last generators
    assert cec.differential(eta, real_part).is_zero()


def test_etabeta5_admits_no_invariant_symplectic_structure():
    # every closed invariant 2-form is supported on the first eight
    # generators, hence pairs the last two directions with nothing and is
    # degenerate; this is a finite check on the kernel basis.
    eta = catalog.get("etabeta5").algebra
    closed = kernel(cec.d_matrix(eta, 2))
    assert closed.dim == 28
    from sympcoh.forms import basis_masks

    masks = basis_masks(10, 2)
    high_bits = (1 << 8) | (1 << 9)
    for vec in closed.basis:
        for mask, value in zip(masks, vec):
            if value != 0:
                assert mask & high_bits == 0
    # consequently sampling closed nondegenerate forms must fail
    rng = random.Random(17)
    with pytest.raises(AssertionError):
        sample_symplectic(eta, rng, tries=40)


def test_etabeta5_fundamental_form_is_compatible_but_not_closed():
    eta = catalog.get("etabeta5")
    a = acx.AlmostComplexStructure(eta.algebra, eta.default_j)
    assert acx.compatibility(eta.fundamental_two_form, a) == acx.COMPATIBLE
    with pytest.raises(sp.NotClosedError):
        sp.make(eta.algebra, eta.fundamental_two_form)


# --- genericity of the default instances ----------------------------------------


def test_three_random_instances_per_entry_reproduce_default_dimensions(reports):
    rng = random.Random(20250811)
    for name in SYMPLECTIC_NAMES:
        entry = catalog.get(name)
        expected = reports[name]
        n = entry.algebra.dim
        for _ in range(3):
            s = sample_symplectic(entry.algebra, rng)
            for k in range(n + 1):
                assert sp.h_bottchern(s, k) == expected.h_bottchern[k], (name, k)


def test_expected_hlc_matches_reports(reports):
    for name in SYMPLECTIC_NAMES:
        assert reports[name].hlc == catalog.get(name).expects_hlc, name


def test_standard_block_j_shape():
    with pytest.raises(ValueError):
        standard_block_j(5)
    j = standard_block_j(6)
    assert (j @ j).entries[0][0] == -1
