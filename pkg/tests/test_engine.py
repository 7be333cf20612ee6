import json
import pathlib
from fractions import Fraction

import pytest

from fmk.engine import (
    ClassificationRecord, DiffOperatorSpec, VermaHomSpec, ad_sharp_operator,
    assemble_fsystem, build_operator, classify, impose_equivariance,
    reducibility, solve_degree,
)
from fmk.errors import ConsistencyError
from fmk.exact import Polynomial, mi_unit, monomial_basis, monomial_count
from fmk.ratfunc import LAM
from fmk.slstruct import ParabolicData
from fmk.weyl import WeylElement

GOLDEN = pathlib.Path(__file__).parent / "golden"


# ---------------------------------------------------------------------------
# assembly
# ---------------------------------------------------------------------------

def test_assembled_operator_normal_form():
    # each dual-side operator is d_j (1 - lam - E) in normal order
    for n in (2, 3, 4):
        fs = assemble_fsystem(n, None)
        nvars = n - 1
        for j, op in enumerate(fs.ops):
            dj = WeylElement.derivative("zeta", mi_unit(nvars, j))
            expected = dj * (
                WeylElement.identity("zeta", nvars, 1 - LAM)
                - WeylElement.euler("zeta", nvars)
            )
            assert op == expected


def test_assembly_euler_identity_structural():
    # -zeta_j o op_j == theta_j (lam - 1 + E) is enforced at assembly time
    for n in (2, 3, 4, 5):
        fs = assemble_fsystem(n, None)
        nvars = n - 1
        euler = WeylElement.euler("zeta", nvars)
        for j, op in enumerate(fs.ops):
            lhs = WeylElement.monomial("zeta", mi_unit(nvars, j)).scale(-1) * op
            rhs = WeylElement.theta("zeta", nvars, j) * (
                WeylElement.identity("zeta", nvars, LAM - 1) + euler
            )
            assert lhs == rhs


def test_assembly_restricted_to_degree_acts_as_scaled_theta():
    # on homogeneous degree k the combination acts as (lam - 1 + k) theta_j
    n, lam = 3, Fraction(3, 4)
    fs = assemble_fsystem(n, lam)
    for k in range(0, 5):
        for j, op in enumerate(fs.ops):
            zjop = WeylElement.monomial("zeta", mi_unit(2, j)).scale(-1) * op
            for mi in monomial_basis(2, k):
                p = Polynomial.monomial("zeta", mi)
                expected = p.scale((lam - 1 + k) * mi[j])
                assert zjop.apply(p) == expected


def test_operators_kill_constants():
    fs = assemble_fsystem(4, Fraction(7, 5))
    one = Polynomial.constant("zeta", 3, 1)
    for op in fs.ops:
        assert op.apply(one).is_zero()
        assert op.order() >= 1


# ---------------------------------------------------------------------------
# solving
# ---------------------------------------------------------------------------

def test_full_kernel_at_special_parameter():
    sol = solve_degree(assemble_fsystem(3, Fraction(-1)), 2)
    assert sol.kernel_dim == 3 == monomial_count(2, 2)
    assert sol.hom_dimension == 1
    psi = sol.hom_basis[0]
    for mi in monomial_basis(2, 2):
        assert psi.components[mi] == Polynomial.monomial("zeta", mi)


def test_zero_kernel_off_special_parameter():
    sol = solve_degree(assemble_fsystem(3, Fraction(0)), 2)
    assert sol.kernel_dim == 0 and sol.hom_dimension == 0


def test_degree_zero_is_constants_for_any_parameter():
    for lam in (Fraction(0), Fraction(5, 7), Fraction(-3)):
        sol = solve_degree(assemble_fsystem(4, lam), 0)
        assert sol.kernel_dim == 1 and sol.hom_dimension == 1


def test_generic_solver_discovers_special_parameter():
    g = solve_degree(assemble_fsystem(3, None), 3)
    assert g.kernel_dim == 0 and g.hom_dimension == 0
    assert len(g.exceptional) == 1
    e = g.exceptional[0]
    assert e.lam == Fraction(-2)
    assert e.kernel_dim == monomial_count(2, 3)
    assert e.hom_dimension == 1


def test_forced_target_parameter():
    # accepted solutions force nu - lam = n k / (n - 1)
    for n, k in [(2, 3), (3, 2), (4, 1), (5, 4)]:
        sol = solve_degree(assemble_fsystem(n, Fraction(1 - k)), k)
        assert sol.nu - sol.lam == Fraction(n * k, n - 1)
        assert sol.beta_shift == k % 2


def test_equivariance_accepts_diagonal_solution_and_rejects_perturbation():
    n, k = 3, 2
    pd = ParabolicData(n)
    cols = monomial_basis(2, k)
    kernel = [Polynomial.monomial("zeta", mi) for mi in cols]
    res = impose_equivariance(kernel, n, k, Fraction(1 - k), pd)
    assert len(res.hom_basis) == 1
    # the surviving map sends each label to its own monomial line
    psi = res.hom_basis[0]
    assert psi.components[(2, 0)] == Polynomial.monomial("zeta", (2, 0))

    # a perturbed candidate with one off-diagonal component must not survive:
    # restrict the kernel to a subspace whose only weight-compatible vectors
    # are off-diagonal, leaving nothing equivariant
    skew = [
        Polynomial.monomial("zeta", (2, 0)) + Polynomial.monomial("zeta", (1, 1)),
        Polynomial.monomial("zeta", (0, 2)),
    ]
    res2 = impose_equivariance(skew, n, k, Fraction(1 - k), pd)
    assert res2.hom_basis == []


def test_ad_sharp_rejects_nonlevi():
    pd = ParabolicData(3)
    with pytest.raises(ConsistencyError):
        ad_sharp_operator(pd.nminus_basis[0], pd)


# ---------------------------------------------------------------------------
# output forms
# ---------------------------------------------------------------------------

def test_symbol_inverse_bol_case():
    # one variable: the degree-k operator is the k-th derivative
    b = build_operator(2, 3)
    assert b.operator.components == {(3,): {(3,): Fraction(1)}}
    f = Polynomial("x", 1, {(5,): 1})
    img = b.operator.apply(f)
    assert img[(3,)] == Polynomial("x", 1, {(2,): 60})


def test_symbol_inverse_structure_general():
    b = build_operator(3, 2)
    for mi in monomial_basis(2, 2):
        assert b.operator.components[mi] == {mi: Fraction(1)}


def test_identity_operator_at_degree_zero():
    b = build_operator(4, 0)
    zero = (0, 0, 0)
    assert b.operator.components == {zero: {zero: Fraction(1)}}


def test_fc_inverse_gives_lowering_monomials():
    b = build_operator(3, 2)
    for mi in monomial_basis(2, 2):
        assert b.hom.components[mi] == Polynomial("nminus", 2, {mi: 1})


def test_fc_round_trip_through_solver():
    # the dual-side image of each lowering monomial solves the system
    n, k = 3, 3
    fs = assemble_fsystem(n, Fraction(1 - k))
    b = build_operator(n, k)
    for mi, img in b.hom.components.items():
        zeta_img = Polynomial("zeta", 2, dict(img.terms))
        for op in fs.ops:
            assert op.apply(zeta_img).is_zero()


def test_operator_spec_json_round_trip():
    b = build_operator(3, 2)
    assert DiffOperatorSpec.from_json(b.operator.to_json()) == b.operator
    assert VermaHomSpec.from_json(b.hom.to_json()) == b.hom


# ---------------------------------------------------------------------------
# classification
# ---------------------------------------------------------------------------

def test_classify_families_and_parameters():
    recs = classify(3, 2)
    by_family = {}
    for r in recs:
        by_family.setdefault(r.family, []).append(r)
    assert len(by_family["identity"]) == 1
    assert len(by_family["Lambda_G"]) == 2
    g2 = [r for r in by_family["Lambda_G"] if r.k == 2][0]
    assert g2.lam == -1 and g2.nu == 2 and g2.hom_dim == 1
    v2 = [r for r in by_family["Lambda_gP"] if r.k == 2][0]
    assert v2.s == 1 and v2.r == -2
    assert all(r.hom_dim == 1 for r in recs)


def test_classify_concrete_parity():
    recs = classify(3, 2, alpha="-")
    g1 = [r for r in recs if r.family == "Lambda_G" and r.k == 1][0]
    assert g1.alpha == "-" and g1.beta == "+"
    g2 = [r for r in recs if r.family == "Lambda_G" and r.k == 2][0]
    assert g2.alpha == "-" and g2.beta == "-"


def test_classify_rank_two_uses_trivial_fiber_label():
    recs = classify(2, 3)
    for r in recs:
        assert r.fiber == "triv"
    g3 = [r for r in recs if r.family == "Lambda_G" and r.k == 3][0]
    assert g3.lam == -2 and g3.nu == 4


def test_classify_kmax_zero_is_identity_only():
    recs = classify(3, 0)
    assert len(recs) == 1 and recs[0].family == "identity"


def test_classification_record_json_round_trip():
    for r in classify(3, 2):
        assert ClassificationRecord.from_json(r.to_json()) == r



@pytest.mark.parametrize("n,kmax,name", [(3, 2, "classify_n3_kmax2.json"), (2, 3, "classify_n2_kmax3.json")])
def test_classification_golden_files(n, kmax, name):
    got = [r.to_json() for r in classify(n, kmax)]
    expected = json.loads((GOLDEN / name).read_text())
    assert got == expected


# ---------------------------------------------------------------------------
# reducibility
# ---------------------------------------------------------------------------

def test_reducibility_verdicts():
    assert reducibility(4, 2).reducible and reducibility(4, 2).witness_degree == 3
    assert not reducibility(4, -1).reducible
    assert not reducibility(3, Fraction(1, 2)).reducible
    assert reducibility(3, 0).witness_degree == 1


def test_reducibility_scan():
    values = [Fraction(v, 2) for v in range(-6, 11)]
    for n in (3, 4):
        reducible_at = [s for s in values if reducibility(n, s).reducible]
        assert reducible_at == [Fraction(v) for v in range(0, 6)]
