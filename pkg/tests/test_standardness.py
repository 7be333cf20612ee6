import random
from fractions import Fraction

import pytest

from fmk.errors import UnsupportedRankError
from fmk.slstruct import Weight
from fmk.standardness import (
    RootSystemA, boe_check, levi_dominant_integral, linkage_search,
    mu_eta_weights, standardness_report,
)


def test_root_system_counts():
    for n in (3, 4, 5):
        rs = RootSystemA(n)
        assert len(rs.positive_roots) == n * (n - 1) // 2
        assert len(rs.simple_roots) == n - 1
        assert len(rs.levi_simple_roots) == n - 2


def test_weights_small_case():
    mu, eta = mu_eta_weights(3, 1)
    assert eta == Weight([1, 0, -1])
    assert mu == Weight([0, 1, -1])


def test_weights_degree_zero_coincide():
    for n in (3, 4, 5):
        mu, eta = mu_eta_weights(n, 0)
        assert mu == eta


def test_weights_related_by_coordinate_swap():
    for n in (3, 4, 5):
        for k in range(1, 6):
            mu, eta = mu_eta_weights(n, k)
            swapped = Weight((eta.coords[1], eta.coords[0]) + eta.coords[2:])
            assert swapped == mu


def test_weights_reject_rank_two():
    with pytest.raises(UnsupportedRankError):
        mu_eta_weights(2, 1)


def test_reflection_involution_randomized():
    rng = random.Random(555)
    rs = RootSystemA(4)
    for _ in range(200):
        w = Weight([Fraction(rng.randint(-6, 6), rng.randint(1, 3)) for _ in range(4)])
        beta = rng.choice(rs.positive_roots)
        assert w.reflect(beta).reflect(beta) == w


def test_pairing_invariance_under_reflections():
    rng = random.Random(808)
    rs = RootSystemA(4)
    for _ in range(200):
        u = Weight([Fraction(rng.randint(-5, 5)) for _ in range(4)])
        v = Weight([Fraction(rng.randint(-5, 5)) for _ in range(4)])
        beta = rng.choice(rs.positive_roots)
        assert u.reflect(beta).dot(v.reflect(beta)) == u.dot(v)


def test_linkage_single_step():
    rs = RootSystemA(3)
    mu, eta = mu_eta_weights(3, 1)
    links = linkage_search(eta, mu, rs, 2)
    assert len(links) == 1
    assert links[0].length == 1
    assert links[0].roots[0] == Weight([1, -1, 0])
    assert links[0].first_reflected() == mu


def test_linkage_trivial_self_link():
    rs = RootSystemA(3)
    eta = mu_eta_weights(3, 2)[1]
    links = linkage_search(eta, eta, rs, 1)
    assert any(l.length == 0 for l in links)


def test_linkage_off_orbit_weight_is_unreachable():
    rs = RootSystemA(3)
    mu, eta = mu_eta_weights(3, 1)
    off = Weight([Fraction(17), Fraction(5), Fraction(1)])
    assert linkage_search(eta, off, rs, 3) == []


def test_single_link_across_the_grid():
    for n in (3, 4, 5):
        rs = RootSystemA(n)
        first = rs.positive_roots[0]
        for k in range(1, 6):
            mu, eta = mu_eta_weights(n, k)
            links = linkage_search(eta, mu, rs, 3)
            assert len(links) == 1 and links[0].length == 1, (n, k)
            assert links[0].roots[0] == first


def test_boe_criterion_standard_case():
    rs = RootSystemA(3)
    mu, eta = mu_eta_weights(3, 1)
    rep = boe_check(eta, mu, rs)
    assert rep.standard_nonzero and not rep.failures
    # the reflected weight pairs to 2 with the Levi simple coroot
    assert mu.pair_coroot(Weight([0, 1, -1])) == 2
    assert levi_dominant_integral(mu, rs)


def test_boe_criterion_identity_case():
    rs = RootSystemA(4)
    mu, eta = mu_eta_weights(4, 0)
    rep = boe_check(eta, mu, rs)
    assert rep.standard_nonzero and rep.identity_case


def test_boe_criterion_synthetic_failure():
    # a hand-built pair whose only link lands outside the dominant cone:
    # the reflected weight pairs to zero with a Levi simple coroot
    rs = RootSystemA(3)
    eta = Weight([1, 0, 1])
    mu = Weight([0, 1, 1])
    links = linkage_search(eta, mu, rs, 2)
    assert any(l.length == 1 for l in links)
    rep = boe_check(eta, mu, rs, 2)
    assert not rep.standard_nonzero
    assert rep.failures


def test_standardness_report_all_standard():
    for n, kmax in [(3, 5), (5, 3)]:
        rows = standardness_report(n, kmax)
        assert len(rows) == kmax + 1
        for row in rows:
            assert row.verdict == "standard"
            assert row.mu_levi_dominant
            assert row.same_orbit
            if row.k >= 1:
                nontrivial = [s for s in row.report.sequences if s.length > 0]
                assert len(nontrivial) == 1 and nontrivial[0].length == 1


def test_report_json_shape():
    row = standardness_report(3, 1)[1]
    data = row.to_json()
    assert data["verdict"] == "standard"
    assert data["mu"] == ["0", "1", "-1"]
    assert len(data["links"]) == 1
