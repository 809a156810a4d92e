import pytest

from spincover._oracles import epi_naive, s_naive, symp_gram
from spincover.gf2core import GF2Vec, ShapeError, all_vectors, kernel
from spincover.grouptool import pair
from spincover.homology import (NotSpecialError, NSurface, OSurface, SectionParams,
                                SpecialCovering, TotalN, TotalO, bar, epi_set, in_epi,
                                p_n_star, p_o_star, pi_star, presentation, pull_back,
                                s_eval, sigma_eval, specials, tilde_pi_star, unbar)


@pytest.mark.parametrize("g", range(1, 9))
def test_counts(g):
    assert len(specials(TotalN(g))) == 2 ** (g + 1)
    assert len(epi_set(g)) == 2 ** g


def test_g1_listing():
    assert [str(p) for p in specials(TotalN(1))] == ["00", "01", "10", "11"]
    assert [str(m.phi) for m in epi_set(1)] == ["00", "11"]


def test_special_requires_value_one_on_h():
    with pytest.raises(NotSpecialError):
        SpecialCovering(TotalN(1), GF2Vec.from_str("000"))
    with pytest.raises(ShapeError):
        SpecialCovering.on_n(2, "10")


def test_section_params_shape():
    with pytest.raises(ShapeError):
        SectionParams.make(2, rho="10")
    with pytest.raises(ShapeError):
        SectionParams.make(2, r="101")
    p = SectionParams.make(2, r="1000")
    assert str(p.beta) == "01" and str(p.t) == "0010" and p.r_const == 0
    assert SectionParams.make(2, r="1010").is_exceptional()
    assert not SectionParams.make(2, r="1011").is_exceptional()
    assert SectionParams.make(2, r="1111").r_const == 0
    assert SectionParams.make(2, r="1100").r_const == 1


@pytest.mark.parametrize("g", [1, 2, 3, 4])
def test_pi_star_shape(g):
    P = pi_star(g)
    assert P.rank() == g
    for i in range(1, g + 1):
        col = P @ OSurface(g).c(2 * i - 1)
        assert col == P @ OSurface(g).c(2 * i) == NSurface(g).v(0) + NSurface(g).v(i)
    assert all(not (P @ k) for k in OSurface(g).kernel_basis())
    # the kernel is spanned by e'_i, which is Lagrangian
    assert len(kernel(P)) == g
    sp = OSurface(g).space
    ker = OSurface(g).kernel_basis()
    assert all(not pair(sp, a, b) for a in ker for b in ker)


@pytest.mark.parametrize("g", [1, 2, 3])
def test_square_of_structure_maps(g):
    assert p_n_star(g) @ tilde_pi_star(g) == pi_star(g) @ p_o_star(g)
    assert tilde_pi_star(g) @ TotalO(g).h() == TotalN(g).h()


def test_bar_unbar():
    x = GF2Vec.from_str("101")
    assert str(bar(x)) == "1010"
    assert unbar(bar(x)) == x


@pytest.mark.parametrize("g", [1, 2, 3])
def test_pull_back_matches_oracle(g):
    ours = sorted(tuple(m.phi.values.to_list()) for m in epi_set(g))
    assert ours == epi_naive(g)
    assert all(in_epi(m.phi) for m in epi_set(g))
    for m in epi_set(g):
        a, b = m.psis
        assert pull_back(a) == pull_back(b) == m.phi
        assert unbar(a.values) + unbar(b.values) == GF2Vec.ones(g + 1)


@pytest.mark.parametrize("g", [1, 2])
def test_quadratic_section_matches_recursive_oracle(g):
    gram = symp_gram(g)
    for r in all_vectors(2 * g):
        p = SectionParams.make(g, r=r)
        for a in all_vectors(2 * g):
            assert s_eval(p, a).to_list() == s_naive(a.to_list(), r.to_list(), gram).tolist()


def test_quadratic_section_worked_value():
    p = SectionParams.make(1, r="00")
    assert str(s_eval(p, GF2Vec.from_str("11"))) == "111"


def test_linear_section():
    p = SectionParams.make(2, rho="110")
    assert str(sigma_eval(p, GF2Vec.from_str("100"))) == "1001"
    assert str(sigma_eval(p, GF2Vec.from_str("110"))) == "1100"
    assert p_n_star(2) @ sigma_eval(p, GF2Vec.from_str("011")) == GF2Vec.from_str("011")


def test_presentation_text():
    p0 = presentation(SpecialCovering.on_n(1, "00"))
    assert p0.epsilon == 0
    assert p0.relators[-1] == "w0^2 w1^2"
    p1 = presentation(SpecialCovering.on_n(1, "10"))
    assert p1.epsilon == 1
    assert str(p1) == "<w0,w1,k | [w0,k], [w1,k], w0^2 w1^2 k^1>"
    assert p1.embedding == {"w0": "u0 h^1", "w1": "u1", "k": "h^2"}


def test_presentation_only_for_non_orientable_side():
    with pytest.raises(TypeError):
        presentation(epi_set(1)[0].phi)


@pytest.mark.parametrize("g", range(1, 6))
def test_epsilon_is_value_sum(g):
    for psi in specials(TotalN(g)):
        assert presentation(psi).epsilon == psi.base_values.weight() % 2
