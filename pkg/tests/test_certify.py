from fractions import Fraction

import pytest

from weylcert.certify import (CONSTRAINED, INCONCLUSIVE, NON_UNITARY,
                              ModuleProfile, certify, refl_link_graph,
                              spectral_gap)
from weylcert.fixtures import (A3_ROWS, C3_ROWS, a3_profile, c3_profile,
                               scenario_profiles)
from weylcert.orbits import HypothesisError, exceptional, sl, so, sp


def test_profile_validation():
    with pytest.raises(ValueError):
        ModuleProfile(exceptional("F4"), (1, 1, 1, 1), ((4,),))
    with pytest.raises(ValueError):
        ModuleProfile(sl(4), (1, 0, -1), ((3, 1),))      # wrong length
    with pytest.raises(ValueError):
        ModuleProfile(sl(4), (1, 0, 0, -1), ())          # no wtypes
    with pytest.raises(ValueError):
        ModuleProfile(sl(4), (1, 0, 0, -1), ((3, 2),))   # bad label
    p = ModuleProfile(sp(6), ("3/2", "1/2", "1/2"), (((1,), (1, 1)),))
    assert p.nu == (Fraction(3, 2), Fraction(1, 2), Fraction(1, 2))
    assert p.nu_norm_sq() == Fraction(11, 4)


def test_sign_twisted_profile():
    p = ModuleProfile(sl(4), (1, 0, 0, -1), ((3, 1), (2, 2)))
    q = p.sign_twisted()
    assert set(q.wtypes) == {(2, 1, 1), (2, 2)}
    assert q.sign_twisted().wtypes == p.wtypes


def test_no_hermitian_form_rule():
    p = ModuleProfile(sl(4), (1, 0, 0, -1), ((3, 1),), is_hermitian=False)
    rep = certify(p)
    assert rep.verdict == NON_UNITARY
    assert rep.witnesses[0].rule == "no-hermitian-form"


def test_global_bound_rule():
    p = ModuleProfile(sl(4), (10, 0, 0, -10), ((4,),))
    rep = certify(p)
    assert rep.verdict == NON_UNITARY
    w = rep.witnesses[0]
    assert w.rule == "global-bound" and w.orbit.data == (4,)
    assert rep.region.startswith("above-regular")


def test_subregular_good_type_witness_a5():
    p = ModuleProfile(sl(6), (2, 1, 0, 0, -1, -2), ((3, 2, 1),))
    rep = certify(p)
    assert rep.verdict == NON_UNITARY
    w = rep.witnesses[0]
    assert w.rule == "good-type" and w.orbit.data == (5, 1)
    assert w.wtype == (3, 2, 1)
    assert w.nu_norm_sq == w.h_half_norm_sq == 10


def test_theta_hit_constrains_to_orbit():
    row = next(r for r in C3_ROWS if r.name == "5_t")
    rep = certify(c3_profile(row))
    assert rep.verdict == CONSTRAINED
    assert rep.witnesses[0].rule == "theta-hit"
    assert rep.witnesses[0].orbit.data == (4, 2)
    assert any("lies in the W-orbit" in line for line in rep.log)


def test_orbit_rigidity_rule():
    # same norm as h_sr/2 for sl(4) but a different W-orbit
    p = ModuleProfile(sl(4), (1, 1, 0, 0), ((2, 2),))
    rep = certify(p)
    assert rep.verdict == NON_UNITARY
    assert rep.witnesses[0].rule == "orbit-rigidity"
    assert any("does not lie" in line for line in rep.log)


def test_inconclusive_below_all_norms():
    p = ModuleProfile(sl(4), (Fraction(1, 2), 0, 0, Fraction(-1, 2)),
                      ((2, 2),))
    rep = certify(p)
    assert rep.verdict == INCONCLUSIVE
    assert not rep.witnesses


def test_split_labels_are_set_aside():
    nu = (3, 2, 1, 0)
    p = ModuleProfile(so(8), nu, (((2,), (2,), "+"),))
    rep = certify(p)
    assert rep.verdict == INCONCLUSIVE
    assert any("set aside" in line for line in rep.log)


def test_scenario_soundness():
    for fam, row, prof in scenario_profiles():
        rep = certify(prof)
        if row.unitary:
            assert rep.verdict != NON_UNITARY, (fam, row.name)
        if not row.hermitian:
            assert rep.verdict == NON_UNITARY


def test_w_invariance_of_verdict():
    base = ModuleProfile(sl(6), (2, 1, 0, 0, -1, -2), ((3, 2, 1),))
    for nu in ((0, -1, 2, -2, 1, 0), (-2, -1, 0, 0, 1, 2)):
        assert certify(ModuleProfile(sl(6), nu, ((3, 2, 1),))).verdict \
            == certify(base).verdict
    # sign flips in type B
    for nu in ((Fraction(3, 2), Fraction(-1, 2), Fraction(1, 2)),
               (Fraction(-1, 2), Fraction(-3, 2), Fraction(1, 2))):
        rep = certify(ModuleProfile(sp(6), nu, (((1,), (1, 1)),)))
        assert rep.verdict == CONSTRAINED


def test_scaling_up_stays_non_unitary():
    base_nu = (2, 1, 0, 0, -1, -2)
    for c in (Fraction(3, 2), 2, 3):
        nu = tuple(c * x for x in base_nu)
        rep = certify(ModuleProfile(sl(6), nu, ((3, 2, 1),)))
        assert rep.verdict == NON_UNITARY


def test_iwahori_matsumoto_twist_agreement():
    p = ModuleProfile(sl(6), (2, 1, 0, 0, -1, -2), ((3, 2, 1),))
    assert certify(p).verdict == certify(p.sign_twisted()).verdict


def test_gap_endpoints():
    g = spectral_gap(sl(6), Fraction(35, 2))
    assert g.region == "equals-regular"
    assert dict(g.endpoints) == {"regular": Fraction(35, 2),
                                 "subregular": 10}
    g = spectral_gap(sl(6), 12)
    assert g.region == "(sr,r)-gap"
    g = spectral_gap(sl(6), 7)
    assert g.region == "(ssr,sr)-gap"
    assert dict(g.endpoints)["subsubregular"] == Fraction(11, 2)
    g = spectral_gap(so(9), 20)
    assert g.region == "(sr,r)-gap"
    assert dict(g.endpoints) == {"regular": 30, "subregular": 14}


def test_gap_refusals():
    with pytest.raises(HypothesisError):
        spectral_gap(sp(8), 5)          # below subregular, symplectic
    with pytest.raises(HypothesisError):
        spectral_gap(so(8), 5)          # below subregular, even so
    with pytest.raises(HypothesisError):
        spectral_gap(sl(4), 1)          # below subregular, rank 3
    with pytest.raises(HypothesisError):
        spectral_gap(exceptional("F4"), 10)
    with pytest.raises(HypothesisError):
        spectral_gap(so(4), 10)         # not simple
    with pytest.raises(HypothesisError):
        spectral_gap(sl(2), 1)          # rank 1
    with pytest.raises(ValueError):
        spectral_gap(sl(6), -1)


def test_gap_above_regular_allows_everything():
    assert spectral_gap(sp(8), 22).region == "above-regular"
    assert spectral_gap(sp(8), 21).region == "equals-regular"
    assert spectral_gap(sp(8), 10).region == "(sr,r)-gap"
    assert spectral_gap(sp(8), 9).region == "equals-subregular"


def test_refl_link_graph_obstruction_by_family():
    for t, expect in ((sl(6), True), (so(9), True),
                      (sp(8), False), (so(8), False)):
        g = refl_link_graph(t)
        assert g.obstruction_holds == expect
        assert not g.h_set & g.l_set
        # no edge joins the two camps
        for a, b in g.edges:
            assert not (a in g.h_set and b in g.l_set)
            assert not (a in g.l_set and b in g.h_set)


def test_refl_link_graph_vertices_default_to_good_sr():
    from weylcert.springer import good_set
    g = refl_link_graph(sl(6))
    assert set(g.vertices) == good_set(sl(6), "subregular")


def test_refl_link_graph_explicit_vertices():
    g = refl_link_graph(sl(6), wtypes=((6,),))
    assert g.vertices == ((6,),)
    assert g.obstruction_holds
