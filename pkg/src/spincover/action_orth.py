"""The orthogonal group of the non-orientable side acting on special coverings.

An orthogonal ``F`` is lifted to the total space through the linear
section ``sigma`` (``F_sigma(sigma(v_i)) = sigma(F(v_i))``, ``F_sigma(h) = h``),
and acts on the right by ``psi -> psi ∘ F_sigma``.  Pulling back along
``sigma`` turns every covering into a linear form ``theta = psi ∘ sigma`` on
``Z_2^{g+1}``, which is where the classification really happens.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from itertools import combinations
from typing import Sequence

from .gf2core import GF2Mat, GF2Vec, all_vectors
from .grouptool import (FormSpace, Isometry, NotIsometryError, OrbitReport, closure,
                        enumerate_isometries, is_isometry, orbit_decompose, permutation,
                        transposition, transvection)
from .homology import SectionParams, SpecialCovering, TotalN, specials


@dataclass(frozen=True)
class LiftedAut:
    g: int
    mat: GF2Mat

    @property
    def block(self) -> GF2Mat:
        n = self.g + 1
        return GF2Mat(n, n, self.mat.data[:n])

    @property
    def d(self) -> GF2Vec:
        return GF2Vec(self.g + 1, self.mat.data[self.g + 1] & ((1 << (self.g + 1)) - 1))


def lift_F_sigma(F: Isometry, params: SectionParams) -> LiftedAut:
    """Matrix ``[[A, 0], [d, 1]]`` with ``d_j = sum_i rho_i a_ij + rho_j``."""
    g = params.g
    A = F.mat
    if A.shape != (g + 1, g + 1) or not is_isometry(FormSpace.dot(g + 1), A):
        raise NotIsometryError("lift_F_sigma needs an orthogonal map of Z_2^{g+1}")
    d = A.lmul(params.rho) + params.rho
    rows = A.data + (d.bits | (1 << (g + 1)),)
    return LiftedAut(g, GF2Mat(g + 2, g + 2, rows))


def act_A1(psi: SpecialCovering, F: Isometry, params: SectionParams) -> SpecialCovering:
    return psi.compose(lift_F_sigma(F, params).mat)


def theta_of(psi: SpecialCovering, params: SectionParams) -> GF2Vec:
    """The linear form ``psi ∘ sigma``, i.e. ``theta(v_i) = psi(vbar_i) + rho_i``."""
    return psi.base_values + params.rho


def psi_of(theta: GF2Vec, params: SectionParams) -> SpecialCovering:
    return SpecialCovering.on_n(params.g, theta + params.rho)


def classify_form(theta: GF2Vec) -> str:
    if not theta:
        return "theta0"
    if theta.weight() == theta.n:
        return "theta1"
    return f"orb{theta.weight() & 1}"


def _compose_form(theta: GF2Vec, m: GF2Mat) -> GF2Vec:
    return m.lmul(theta)


def _to_canonical(theta: GF2Vec) -> Isometry:
    """An orthogonal ``T`` with ``theta ∘ T`` equal to ``(1, lam, 0, ..., 0)``.

    A permutation first brings a 0 to position 0 and a 1 to position 1;
    then the transvection along ``a = (1, 1 + lam, m_2, ..., m_g)`` with
    ``lam = m_2 + ... + m_g`` finishes the job.
    """
    n = theta.n
    space = FormSpace.dot(n)
    m = list(theta)
    zero = m.index(0)
    one = m.index(1)
    rest = [i for i in range(n) if i not in (zero, one)]
    # P sends v_0 -> v_zero, v_1 -> v_one, v_k -> v_rest[k-2]
    perm = [zero, one] + rest
    P = permutation(space, perm)
    mm = list(_compose_form(theta, P.mat))
    lam = sum(mm[2:]) & 1
    a = GF2Vec.from_list([1, 1 ^ lam] + mm[2:])
    T = P @ transvection(space, a)
    return T


def equivalence_witness(theta: GF2Vec, theta2: GF2Vec) -> Isometry | None:
    """An orthogonal ``T`` with ``theta ∘ T = theta2``, or None if none exists."""
    space = FormSpace.dot(theta.n)
    if theta == theta2:
        return Isometry.identity(space)
    lab = classify_form(theta)
    if lab != classify_form(theta2) or lab in ("theta0", "theta1"):
        return None
    T1 = _to_canonical(theta)
    T2 = _to_canonical(theta2)
    if _compose_form(theta, T1.mat) != _compose_form(theta2, T2.mat):
        raise AssertionError("canonical forms disagree within one class")
    return T1 @ T2.inverse()


def orth_generators(n: int) -> list[Isometry]:
    """Coordinate transpositions plus transvections along weight-4 vectors."""
    space = FormSpace.dot(n)
    gens = [transposition(space, i, j) for i, j in combinations(range(n), 2)]
    for quad in combinations(range(n), 4):
        gens.append(transvection(space, GF2Vec.from_list(int(i in quad) for i in range(n))))
    return gens


def _covering_label(params: SectionParams):
    def label(psi: SpecialCovering) -> str:
        lab = classify_form(theta_of(psi, params))
        return {"theta0": "psi0", "theta1": "psi1"}.get(lab, "sum" + lab[-1])
    return label


def classify_A1(g: int, params: SectionParams, full_group: bool | None = None) -> OrbitReport:
    """Orbits of the ``A_1^sigma`` action on all ``2^(g+1)`` special coverings.

    Labels are ``psi0`` / ``psi1`` for the two fixed points and ``sum0`` /
    ``sum1`` for the remaining classes, by ``sum_i (psi(vbar_i) + rho_i)``.
    By default the whole group is used for ``g+1 <= 5`` and the generator
    set of :func:`orth_generators` beyond.
    """
    if params.g != g:
        raise ValueError("params built for a different genus")
    n = g + 1
    if full_group is None:
        full_group = n <= 5
    gens = enumerate_isometries(FormSpace.dot(n)) if full_group else orth_generators(n)
    lifts = [lift_F_sigma(F, params).mat for F in gens]
    report = orbit_decompose(specials(TotalN(g)), lifts, lambda psi, m: psi.compose(m),
                             label=_covering_label(params))
    return report.sort_by_size()


def expected_A1_sizes(g: int) -> list[int]:
    """Orbit sizes predicted by the classification, sorted ascending."""
    half = 2 ** g
    if g == 1:
        rest = [2]
    elif g % 2 == 0:
        rest = [half - 1, half - 1]
    else:
        rest = [half - 2, half]
    return sorted([1, 1] + rest)


@dataclass
class Report:
    name: str
    passed: bool
    details: dict = field(default_factory=dict)

    def to_dict(self) -> dict:
        return {"name": self.name, "passed": self.passed, "details": self.details}


def jn_check(g: int, params: SectionParams, group: Sequence[Isometry] | None = None) -> Report:
    """``F -> F_sigma`` is an injective homomorphism on the whole orthogonal group.

    Products are checked on all pairs for small groups.  Otherwise the right
    factor runs over a generating set (checked to close up to the group),
    which suffices by induction on word length.
    """
    space = FormSpace.dot(g + 1)
    group = list(group) if group is not None else enumerate_isometries(space)
    lifted = {F.mat: lift_F_sigma(F, params).mat for F in group}
    injective = len(set(lifted.values())) == len(lifted)
    right = group
    if len(group) > 100:
        right = orth_generators(g + 1)
        if len(closure(right, space)) != len(group):
            return Report("J_n", False, {"order": len(group), "generators_span": False})
    bad = None
    for F in group:
        for G in right:
            if lifted[(F @ G).mat] != lifted[F.mat] @ lifted[G.mat]:
                bad = (str(F), str(G))
                break
        if bad:
            break
    return Report("J_n", injective and bad is None,
                  {"order": len(group), "injective": injective, "homomorphism": bad is None,
                   "counterexample": bad})


def lemma01_check(g: int, params: SectionParams) -> Report:
    """Sums of ``psi(vbar_i)`` for the two distinguished coverings."""
    n = g + 1
    psi0 = psi_of(GF2Vec.zero(n), params)
    psi1 = psi_of(GF2Vec.ones(n), params)
    rho_sum = params.rho.weight() & 1
    s0 = psi0.base_values.weight() & 1
    s1 = psi1.base_values.weight() & 1
    ok = s0 == rho_sum and s1 == (n + rho_sum) & 1
    return Report("distinguished coverings", ok, {"sum_psi0": s0, "sum_psi1": s1, "sum_rho": rho_sum})


def alpha_rep(g: int, which: int) -> GF2Vec:
    """The representatives ``alpha_0 = (1,1,0,..)`` and ``alpha_1 = (1,0,..)``."""
    if which == 0:
        return GF2Vec(g + 1, 0b11)
    if which == 1:
        return GF2Vec(g + 1, 0b1)
    raise ValueError("which must be 0 or 1")


def stabilizer_generators(g: int, which: int) -> tuple[list[Isometry], list[Isometry]]:
    """The stated isotropy generators, split as (basic, transvections).

    ``alpha_1``: transpositions of ``v_1..v_g``, plus ``T_{v_1+v_2+v_3+v_4}`` when ``g >= 4``.
    ``alpha_0``: ``O(Z_2^2) x O(Z_2^{g-1})`` (swap of ``v_0, v_1``; transpositions of
    ``v_2..v_g``; ``T_{v_2+..+v_5}`` when ``g-1 >= 4``), plus ``T_{v_0+v_1+v_2+v_3}`` when ``g >= 3``.
    """
    n = g + 1
    space = FormSpace.dot(n)

    def tv(idx):
        return transvection(space, GF2Vec.from_list(int(i in idx) for i in range(n)))

    basic: list[Isometry] = []
    extra: list[Isometry] = []
    if which == 1:
        basic += [transposition(space, i, j) for i, j in combinations(range(1, n), 2)]
        if g >= 4:
            extra.append(tv((1, 2, 3, 4)))
    elif which == 0:
        basic.append(transposition(space, 0, 1))
        basic += [transposition(space, i, j) for i, j in combinations(range(2, n), 2)]
        if g - 1 >= 4:
            basic.append(tv((2, 3, 4, 5)))
        if g >= 3:
            extra.append(tv((0, 1, 2, 3)))
    else:
        raise ValueError("which must be 0 or 1")
    return basic, extra


def stabilizer_check(g: int, which: int, group: Sequence[Isometry] | None = None) -> Report:
    """Compare the isotropy subgroup of ``alpha_which`` with its claimed generators."""
    n = g + 1
    space = FormSpace.dot(n)
    group = list(group) if group is not None else enumerate_isometries(space)
    alpha = alpha_rep(g, which)
    stab = {F.mat for F in group if _compose_form(alpha, F.mat) == alpha}
    basic, extra = stabilizer_generators(g, which)
    gen_closure = {F.mat for F in closure(basic + extra, space)}
    details = {"g": g, "alpha": which, "group_order": len(group), "stabilizer_order": len(stab),
               "closure_order": len(gen_closure), "transvection_generators": len(extra)}
    ok = stab == gen_closure
    if extra:
        # the extra transvection is really needed
        without = {F.mat for F in closure(basic, space)}
        details["closure_without_transvection"] = len(without)
        ok = ok and len(without) < len(stab)
    if which == 1:
        v0 = GF2Vec.unit(n, 0)
        fixes_v0 = {F.mat for F in group if F(v0) == v0}
        details["equals_fix_v0"] = stab == fixes_v0
        ok = ok and stab == fixes_v0
        # restriction to span(v_1..v_g) is a bijection onto O(Z_2^g)
        if g >= 1:
            sub = FormSpace.dot(g)
            restrict = set()
            for m in stab:
                rows = tuple(m.data[i] >> 1 for i in range(1, n))
                restrict.add(GF2Mat(g, g, rows))
            target = {F.mat for F in enumerate_isometries(sub)}
            details["restriction_bijective"] = restrict == target and len(restrict) == len(stab)
            ok = ok and details["restriction_bijective"]
    else:
        w = GF2Vec(n, 0b11)
        fixes_w = {F.mat for F in group if F(w) == w}
        details["equals_fix_v0_plus_v1"] = stab == fixes_w
        ok = ok and stab == fixes_w
    return Report(f"isotropy alpha{which}", ok, details)


def lemma_checks(g: int) -> Report:
    """Every orthogonal map fixes ``sum v_i``; ``O(Z_2^g)`` is transitive on ``H_0`` and ``H_1``."""
    group = enumerate_isometries(FormSpace.dot(g + 1))
    vsum = GF2Vec.ones(g + 1)
    uti = all(F(vsum) == vsum for F in group)

    sub = enumerate_isometries(FormSpace.dot(g))
    e = GF2Vec.ones(g)
    H = [x for x in all_vectors(g) if x and x != e]
    H0 = [x for x in H if not x.dot(e)]
    H1 = [x for x in H if x.dot(e)]
    orbit_counts = {}
    for name, pts in (("H0", H0), ("H1", H1)):
        rep = orbit_decompose(pts, sub, lambda x, F: F(x))
        orbit_counts[name] = len(rep.orbits)
    trans = all(c <= 1 for c in orbit_counts.values())
    return Report("fixed vector and transitivity", uti and trans,
                  {"uti": uti, "orbits": orbit_counts, "H0_size": len(H0), "H1_size": len(H1)})
