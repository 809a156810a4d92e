import pytest

from spincover.gf2core import GF2Mat, GF2Vec
from spincover.grouptool import FormSpace, Isometry, NotIsometryError, enumerate_isometries, is_isometry
from spincover.homology import OSurface, SectionParams, SpecialCovering, TotalN, presentation, specials
from spincover.liftweak import (KernelNotPreserved, TotalAut, assemble_extension, from_ee_basis,
                                is_lift_pair, is_realizable, lemma_gene_extend, lift_to_symp,
                                project_to_orth, proof_rho, s_matrix, thm_an_crosscheck,
                                to_ee_basis, weak_class, weak_witness)
from spincover.action_orth import classify_A1
from spincover.verify import _realizable_auts, block_symplectic


def test_s_matrix():
    assert str(s_matrix(3)) == "011\n101\n110"


def test_basis_change_roundtrip():
    sp = OSurface(2).space
    for f in enumerate_isometries(sp)[::17]:
        assert from_ee_basis(to_ee_basis(f)) == f.mat


@pytest.mark.parametrize("g", [1, 2, 3, 4])
def test_lift_then_project(g):
    expect = 1 if g % 2 == 0 else 2
    for F in enumerate_isometries(FormSpace.dot(g + 1)):
        f = lift_to_symp(F)
        assert is_isometry(f.space, f.mat)
        assert is_lift_pair(f, F)
        proj = project_to_orth(f)
        assert len(proj) == expect and F in proj


def test_lift_rejects_non_orthogonal():
    with pytest.raises(NotIsometryError):
        lift_to_symp(Isometry(FormSpace.dot(2), GF2Mat.from_str("11\n01")))


def test_project_rejects_kernel_movers():
    sp = OSurface(1).space
    # T_{c_2} sends e'_1 = c_1 + c_2 outside span(e'_1)
    from spincover.grouptool import transvection
    f = transvection(sp, OSurface(1).c(2))
    with pytest.raises(KernelNotPreserved):
        project_to_orth(f)


def test_project_empty_when_restriction_not_orthogonal():
    # at g = 2 every invertible A preserves S, so go to g = 3
    A = GF2Mat.from_str("110\n010\n001")
    f = block_symplectic(A, GF2Mat.zeros(3, 3))
    assert is_isometry(f.space, f.mat)
    assert A.T @ s_matrix(3) @ A != s_matrix(3)
    assert project_to_orth(f) == []


@pytest.mark.parametrize("g", [1, 2])
def test_projection_agrees_with_brute_force(g):
    O = enumerate_isometries(FormSpace.dot(g + 1))
    for f in enumerate_isometries(OSurface(g).space):
        try:
            proj = project_to_orth(f)
        except KernelNotPreserved:
            assert not any(is_lift_pair(f, F) for F in O)
            continue
        assert set(proj) == {F for F in O if is_lift_pair(f, F)}


@pytest.mark.parametrize("n", [2, 3, 4, 5, 6])
def test_hyperplane_extension_counts(n):
    hb = [GF2Vec(n, 1 | (1 << i)) for i in range(1, n)]
    v = GF2Vec.unit(n, 0)
    expect = 2 if n % 2 == 0 else 1
    for F in enumerate_isometries(FormSpace.dot(n))[::7]:
        sols = lemma_gene_extend(hb, [F(x) for x in hb], v)
        assert len(sols) == expect
        assert F(v) in sols
        for w in sols:
            M = assemble_extension(hb, [F(x) for x in hb], v, w)
            assert is_isometry(FormSpace.dot(n), M)


def test_extension_needs_v_outside_h():
    hb = [GF2Vec.from_str("110"), GF2Vec.from_str("101")]
    with pytest.raises(ValueError):
        lemma_gene_extend(hb, hb, GF2Vec.from_str("011"))


def test_weak_witness_and_class():
    a = SpecialCovering.on_n(2, "110")
    b = SpecialCovering.on_n(2, "000")
    w = weak_witness(a, b)
    assert w is not None and is_realizable(w)
    assert a.compose(w.mat) == b
    assert str(w.delta) == "110"
    assert weak_witness(a, SpecialCovering.on_n(2, "100")) is None


def test_realizability_conditions():
    g = 1
    ok = TotalAut(g, GF2Mat.from_str("100\n010\n111"))
    assert is_realizable(ok)
    odd_delta = TotalAut(g, GF2Mat.from_str("100\n010\n101"))
    assert not is_realizable(odd_delta)
    moves_h = TotalAut(g, GF2Mat.from_str("101\n010\n001"))
    assert not is_realizable(moves_h)
    not_orth = TotalAut(g, GF2Mat.from_str("110\n010\n001"))
    assert not is_realizable(not_orth)


@pytest.mark.parametrize("g", [1, 2, 3])
def test_realizable_maps_form_a_group(g):
    auts = _realizable_auts(g, enumerate_isometries(FormSpace.dot(g + 1)))
    mats = {a.mat for a in auts}
    for a in auts[::5]:
        for b in auts[::7]:
            assert a.mat @ b.mat in mats


@pytest.mark.parametrize("g", range(1, 6))
def test_class_equals_epsilon(g):
    for psi in specials(TotalN(g)):
        assert weak_class(psi) == presentation(psi).epsilon


@pytest.mark.parametrize("g,pairs", [(1, 16), (2, 64), (3, 256), (4, 1024)])
def test_four_properties_agree(g, pairs):
    rep = thm_an_crosscheck(g)
    assert rep.passed and rep.details["pairs"] == pairs


def test_proof_rho_makes_both_non_fixed():
    g = 3
    for a in specials(TotalN(g)):
        for b in specials(TotalN(g)):
            if a == b or weak_class(a) != weak_class(b):
                continue
            rho = proof_rho(a, b)
            rep = classify_A1(g, SectionParams.make(g, rho=rho))
            assert rep.orbit_of(a) == rep.orbit_of(b)


def test_proof_rho_needs_two_differences():
    with pytest.raises(ValueError):
        proof_rho(SpecialCovering.on_n(2, "100"), SpecialCovering.on_n(2, "000"))
