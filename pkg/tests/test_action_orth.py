import numpy as np
import pytest

from spincover._oracles import a1_orbit_sizes, lift_sigma_naive
from spincover.action_orth import (act_A1, alpha_rep, classify_A1, classify_form,
                                   equivalence_witness, expected_A1_sizes, jn_check,
                                   lemma01_check, lemma_checks, lift_F_sigma, orth_generators,
                                   psi_of, stabilizer_check, stabilizer_generators, theta_of)
from spincover.gf2core import GF2Mat, GF2Vec, all_vectors
from spincover.grouptool import (FormSpace, Isometry, NotIsometryError, closure,
                                 enumerate_isometries)
from spincover.homology import SectionParams, TotalN, sigma_eval, specials


def _np(m):
    return np.array([[m[i, j] for j in range(m.cols)] for i in range(m.rows)])


def test_swap_lift_worked_values():
    swap = Isometry(FormSpace.dot(2), GF2Mat.from_str("01\n10"))
    assert str(lift_F_sigma(swap, SectionParams.make(1, rho="00")).d) == "00"
    assert str(lift_F_sigma(swap, SectionParams.make(1, rho="10")).d) == "11"


def test_lift_requires_orthogonal():
    with pytest.raises(NotIsometryError):
        lift_F_sigma(Isometry(FormSpace.dot(2), GF2Mat.from_str("11\n01")), SectionParams.make(1))


@pytest.mark.parametrize("g", [1, 2, 3])
def test_lift_matches_defining_relation_oracle(g):
    group = enumerate_isometries(FormSpace.dot(g + 1))
    for rho in all_vectors(g + 1):
        p = SectionParams.make(g, rho=rho)
        for F in group:
            ours = _np(lift_F_sigma(F, p).mat)
            assert np.array_equal(ours, lift_sigma_naive(_np(F.mat), rho.to_list()))


@pytest.mark.parametrize("g", [1, 2])
def test_lift_commutes_with_section(g):
    group = enumerate_isometries(FormSpace.dot(g + 1))
    for rho in all_vectors(g + 1):
        p = SectionParams.make(g, rho=rho)
        for F in group:
            L = lift_F_sigma(F, p).mat
            for x in all_vectors(g + 1):
                assert L @ sigma_eval(p, x) == sigma_eval(p, F(x))


@pytest.mark.parametrize("g", [1, 2, 3])
def test_orbit_sizes_match_union_find(g, fixtures):
    for rho in all_vectors(g + 1):
        rep = classify_A1(g, SectionParams.make(g, rho=rho))
        assert sorted(rep.sizes) == a1_orbit_sizes(g, rho.to_list())
    assert sorted(classify_A1(g, SectionParams.make(g)).sizes) == fixtures[f"a1_sizes_g{g}"]["expected"]


@pytest.mark.parametrize("g,sizes", [(1, [1, 1, 2]), (2, [1, 1, 3, 3]), (3, [1, 1, 6, 8]),
                                     (4, [1, 1, 15, 15]), (5, [1, 1, 30, 32])])
def test_parity_formula(g, sizes):
    assert expected_A1_sizes(g) == sizes
    assert sum(sizes) == 2 ** (g + 1)


@pytest.mark.parametrize("g", [2, 3, 4])
def test_generator_orbits_equal_full_group_orbits(g):
    for rho in ("0" * (g + 1), "1" * (g + 1), "1" + "0" * g):
        p = SectionParams.make(g, rho=rho)
        assert classify_A1(g, p, True).partition() == classify_A1(g, p, False).partition()


def test_fixed_points_are_sections_of_theta0_theta1():
    g = 3
    p = SectionParams.make(g, rho="1010")
    rep = classify_A1(g, p)
    fixed = {o.label: o.members[0] for o in rep.orbits if o.size == 1}
    assert theta_of(fixed["psi0"], p) == GF2Vec.zero(4)
    assert theta_of(fixed["psi1"], p) == GF2Vec.ones(4)
    assert psi_of(GF2Vec.zero(4), p) == fixed["psi0"]


def test_labels_follow_value_sum():
    g = 3
    p = SectionParams.make(g, rho="1100")
    for o in classify_A1(g, p).orbits:
        if o.label.startswith("sum"):
            for psi in o.members:
                assert int(o.label[-1]) == (psi.base_values + p.rho).weight() % 2


def test_classify_form():
    assert classify_form(GF2Vec.from_str("000")) == "theta0"
    assert classify_form(GF2Vec.from_str("111")) == "theta1"
    assert classify_form(GF2Vec.from_str("100")) == "orb1"
    assert classify_form(GF2Vec.from_str("110")) == "orb0"


@pytest.mark.parametrize("n", [3, 4, 5])
def test_equivalence_witness_exhaustive(n):
    for a in all_vectors(n):
        for b in all_vectors(n):
            T = equivalence_witness(a, b)
            same = a == b or (classify_form(a) == classify_form(b) and classify_form(a).startswith("orb"))
            assert (T is not None) == same
            if T is not None:
                assert T.mat.lmul(a) == b


def test_action_is_right_action():
    g = 2
    p = SectionParams.make(g, rho="011")
    group = enumerate_isometries(FormSpace.dot(3))
    for psi in specials(TotalN(g)):
        for F in group[::5]:
            for G in group[::7]:
                assert act_A1(act_A1(psi, F, p), G, p) == act_A1(psi, F @ G, p)


@pytest.mark.parametrize("g", [1, 2, 3])
def test_jn(g):
    for rho in all_vectors(g + 1):
        assert jn_check(g, SectionParams.make(g, rho=rho)).passed


def test_jn_generator_shortcut_on_larger_group():
    assert jn_check(4, SectionParams.make(4, rho="10110")).passed


@pytest.mark.parametrize("g", range(1, 5))
def test_lemma01(g):
    for rho in all_vectors(g + 1):
        assert lemma01_check(g, SectionParams.make(g, rho=rho)).passed


@pytest.mark.parametrize("g", range(1, 6))
def test_lemmas_uti_trans(g):
    assert lemma_checks(g).passed


@pytest.mark.parametrize("g,which", [(g, 1) for g in range(1, 6)] + [(g, 0) for g in range(1, 5)])
def test_stabilizers(g, which):
    rep = stabilizer_check(g, which)
    assert rep.passed, rep.details


def test_transvection_generator_needed_exactly_from_threshold():
    assert stabilizer_generators(3, 1)[1] == []
    assert len(stabilizer_generators(4, 1)[1]) == 1
    assert stabilizer_generators(2, 0)[1] == []
    assert len(stabilizer_generators(3, 0)[1]) == 1
    d = stabilizer_check(4, 1).details
    assert d["closure_without_transvection"] < d["stabilizer_order"]


def test_alpha_representatives():
    assert str(alpha_rep(3, 0)) == "1100"
    assert str(alpha_rep(3, 1)) == "1000"
    with pytest.raises(ValueError):
        alpha_rep(3, 2)


@pytest.mark.parametrize("n", [4, 5, 6])
def test_orth_generators_generate(n):
    space = FormSpace.dot(n)
    assert len(closure(orth_generators(n), space)) == len(enumerate_isometries(space))
