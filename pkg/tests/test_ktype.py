from fractions import Fraction

import pytest

from fmk.errors import UnsupportedRankError
from fmk.exact import monomial_count
from fmk.ktype import (
    KTypeFormula, composition_series, finite_model_check, full_series,
    harmonic_dim, kernel_image_ktypes,
)
from fmk.slstruct import parity_of_int

from oracles import laplacian_harmonic_dim


def test_harmonic_dim_small_values():
    assert harmonic_dim(3, 2) == 5
    assert harmonic_dim(4, 1) == 4
    assert harmonic_dim(5, 0) == 1
    for m in range(0, 9):
        assert harmonic_dim(3, m) == 2 * m + 1


def test_harmonic_dim_against_laplacian_oracle():
    for n in range(2, 6):
        for m in range(0, 9):
            assert harmonic_dim(n, m) == laplacian_harmonic_dim(n, m), (n, m)


def test_formula_parity_coherence():
    f = KTypeFormula(3, "finite", "+", 4)
    assert f.degrees_up_to(10) == [0, 2, 4]
    assert all(parity_of_int(m) == "+" for m in f.degrees_up_to(10))
    with pytest.raises(ValueError):
        KTypeFormula(3, "finite", "-", 4)  # bound parity mismatch
    t = KTypeFormula(4, "tail", "-", 5)
    assert t.degrees_up_to(9) == [5, 7, 9]


def test_composition_series_case_a():
    rep = composition_series(3, -2, "+")
    assert not rep.irreducible and rep.case == "A"
    assert [t.dim for t in rep.sub.terms_up_to(10)] == [1, 5]
    assert rep.sub.total_dim() == 6
    assert rep.quotient.kind == "tail" and rep.quotient.bound == 4


def test_composition_series_irreducible_cases():
    assert composition_series(3, Fraction(1, 2), "+").irreducible
    assert composition_series(3, Fraction(1, 2), "-").irreducible
    # integer but parity mismatch
    assert composition_series(3, -2, "-").irreducible
    # integers strictly between the two families
    assert composition_series(4, 2, "+").irreducible
    assert composition_series(4, 2, "-").irreducible


def test_composition_series_case_b():
    rep = composition_series(3, 3, "+")  # lam = n + 0, parity (+) matches
    assert rep.case == "B"
    assert rep.sub.kind == "tail" and rep.sub.bound == 2
    assert rep.quotient.kind == "finite" and rep.quotient.total_dim() == 1


def test_sub_and_quotient_tile_the_full_series():
    for n in (3, 4):
        for lam, alpha in [(-2, "+"), (-3, "-"), (n, "+"), (n + 1, "-")]:
            rep = composition_series(n, lam, alpha)
            if rep.irreducible:
                continue
            for bound in (8, 13):
                got = sorted(
                    rep.sub.degrees_up_to(bound) + rep.quotient.degrees_up_to(bound)
                )
                assert got == full_series(n, alpha).degrees_up_to(bound)


def test_rank_two_rejected():
    with pytest.raises(UnsupportedRankError):
        composition_series(2, -1, "-")
    with pytest.raises(UnsupportedRankError):
        kernel_image_ktypes(2, 1, "+")
    with pytest.raises(UnsupportedRankError):
        finite_model_check(2, 1)


def test_kernel_image_table_examples():
    ki = kernel_image_ktypes(3, 3, "+")
    assert [t.dim for t in ki.kernel.terms_up_to(10)] == [1, 5]
    assert ki.kernel.total_dim() == 6
    assert ki.image.kind == "tail" and ki.image.bound == 4

    ki2 = kernel_image_ktypes(3, 2, "+")
    assert ki2.kernel.kind == "zero"
    assert ki2.image.kind == "full" and ki2.image.parity == "+"

    ki3 = kernel_image_ktypes(4, 2, "-")
    assert [t.dim for t in ki3.kernel.terms_up_to(10)] == [4]
    assert ki3.image.kind == "tail" and ki3.image.bound == 3


def test_kernel_image_degree_zero():
    ki = kernel_image_ktypes(3, 0, "-")
    assert ki.kernel.kind == "zero" and ki.image.kind == "full"


def test_finite_table_dimension_identity():
    # total of the finite kernel table equals the binomial count of
    # polynomials of degree below k on the cell
    for n in (3, 4, 5):
        for k in range(1, 7):
            alpha = parity_of_int(1 - k)
            ki = kernel_image_ktypes(n, k, alpha)
            assert ki.kernel.total_dim() == monomial_count(n, k - 1), (n, k)


def test_finite_model_checks():
    rep = finite_model_check(3, 3)
    assert rep.passed and rep.kernel_dim == 6 and rep.table_dim == 6
    rep = finite_model_check(3, 1)
    assert rep.passed and rep.kernel_dim == 1
    rep = finite_model_check(4, 2)
    assert rep.passed and rep.kernel_dim == 4 == harmonic_dim(4, 1)


def test_finite_model_report_json():
    rep = finite_model_check(3, 2)
    data = rep.to_json()
    assert data["passed"] and data["kernel_matches_low_degrees"]
