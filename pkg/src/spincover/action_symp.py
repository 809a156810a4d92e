"""Symplectic maps of the orientable double cover acting on E_pi.

A symplectic ``f`` (matrix ``L`` in the basis ``c``) lifts through the
quadratic section to ``f_s`` with matrix ``[[L, 0], [Delta, 1]]`` on
``cbar_1..cbar_{2g}, h``, where

    Delta_j = sum_i a_ij r_i + S_j + r_j,   S_j = sum_i a_{2i,j} a_{2i-1,j}

and acts by ``phi -> phi ∘ f_s``.  The subgroups involved are

* ``G_s``: the ``f`` whose lift preserves ``ker tilde_pi_*`` (so E_pi is stable);
* ``K_t``: the ``f`` with ``Im(f - id)`` orthogonal to ``ker pi_* + Z_2 t``,
  generated by the transvections it contains.

Orbits of either on E_pi are the level sets of the Arf invariant of
``phi ∘ s``, except for the single-orbit case ``t = 0``.
"""
from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence

from .action_orth import Report
from .gf2core import GF2Mat, GF2Vec, span
from .grouptool import (Isometry, OrbitReport, QuadForm, TooLargeError, arf,
                        enumerate_isometries, is_isometry, orbit_decompose, pair, transvection)
from .homology import (OSurface, SectionParams, SpecialCovering, TotalO, bar, epi_set,
                       in_epi, pull_back, tilde_pi_star)


class NotSymplecticError(ValueError):
    pass


class PreconditionError(ValueError):
    pass


class FactorizationDefect(RuntimeError):
    """The peeling loop failed to terminate within its step bound."""


@dataclass(frozen=True)
class LiftedSymp:
    g: int
    mat: GF2Mat

    @property
    def delta(self) -> GF2Vec:
        return GF2Vec(2 * self.g, self.mat.data[2 * self.g] & ((1 << (2 * self.g)) - 1))


def _check_symplectic(f: Isometry, g: int) -> None:
    space = OSurface(g).space
    if f.mat.shape != (2 * g, 2 * g) or not is_isometry(space, f.mat):
        raise NotSymplecticError("expected a symplectic map of Z_2^{2g} in the basis c")


def f_s_matrix(f: Isometry, params: SectionParams) -> LiftedSymp:
    g = params.g
    _check_symplectic(f, g)
    L = f.mat
    S = 0
    for i in range(g):
        S ^= L.data[2 * i] & L.data[2 * i + 1]
    delta = L.lmul(params.r).bits ^ S ^ params.r.bits
    rows = L.data + (delta | (1 << (2 * g)),)
    return LiftedSymp(g, GF2Mat(2 * g + 1, 2 * g + 1, rows))


def act_symp(phi: SpecialCovering, f: Isometry, params: SectionParams) -> SpecialCovering:
    return phi.compose(f_s_matrix(f, params).mat)


def in_Gs(f: Isometry, params: SectionParams) -> bool:
    """``f_s`` maps ``ker tilde_pi_*`` into itself."""
    g = params.g
    fs = f_s_matrix(f, params).mat
    tp = tilde_pi_star(g)
    return all(not (tp @ (fs @ k)) for k in TotalO(g).kernel_basis())


def in_Kt(f: Isometry, params: SectionParams) -> bool:
    """``Im(f - id)`` is orthogonal to ``ker pi_*`` and to ``t``."""
    g = params.g
    osurf = OSurface(g)
    targets = osurf.kernel_basis() + [params.t]
    diff = f.mat + GF2Mat.identity(2 * g)
    return all(pair(osurf.space, col, y) == 0 for col in diff.columns() for y in targets)


def kt_generators(g: int, params: SectionParams) -> list[Isometry]:
    """All transvections ``T_Y`` with ``0 != Y in ker pi_*`` and ``Y.t = 0``."""
    osurf = OSurface(g)
    out = []
    for Y in sorted(span(osurf.kernel_basis()), key=str):
        if Y and not pair(osurf.space, Y, params.t):
            out.append(transvection(osurf.space, Y))
    return out


def kt_subspace(g: int, params: SectionParams) -> list[GF2Vec]:
    """Spanning list of ``ker pi_* + Z_2 t``."""
    return OSurface(g).kernel_basis() + [params.t]


def _search_order(n: int) -> list[int]:
    # unit vectors, then sums of two, each in ascending bitstring order
    singles = [1 << i for i in range(n)]
    doubles = [(1 << i) | (1 << j) for i in range(n) for j in range(i + 1, n)]

    def key(b):
        return str(GF2Vec(n, b))
    return sorted(singles, key=key) + sorted(doubles, key=key)


def factorize_transvections(f: Isometry, V: Sequence[GF2Vec]) -> list[GF2Vec]:
    """Vectors ``Y_1..Y_m`` with ``f = T_{Y_1} ∘ ... ∘ T_{Y_m}`` and every ``Y_k`` orthogonal to ``V``.

    Peels one transvection at a time.  If some ``z`` has ``f(z).z = 1`` the
    factor is ``Y = f(z) - z``; otherwise any moved ``u`` gives
    ``e = f(u) - u`` and the next step is back in the first case.  Candidates
    are scanned over unit vectors then pairs of unit vectors, which is enough
    to find a ``z`` whenever one exists.
    """
    space = f.space
    n = space.dim
    ident = GF2Mat.identity(n)
    diff = f.mat + ident
    for col in diff.columns():
        for v in V:
            if pair(space, col, v):
                raise PreconditionError("Im(f - id) is not orthogonal to V")
    order = _search_order(n)
    cur = f.mat
    out: list[GF2Vec] = []
    bound = max(2 * n, 1)
    while cur != ident:
        if len(out) >= bound:
            raise FactorizationDefect(f"no termination after {bound} steps")
        Y = None
        for zb in order:
            z = GF2Vec(n, zb)
            if pair(space, cur @ z, z):
                Y = (cur @ z) + z
                break
        if Y is None:
            for zb in order[:n]:
                z = GF2Vec(n, zb)
                if cur @ z != z:
                    Y = (cur @ z) + z
                    break
        out.append(Y)
        cur = transvection(space, Y).mat @ cur
    return out


def replay(space, factors: Sequence[GF2Vec]) -> GF2Mat:
    m = GF2Mat.identity(space.dim)
    for Y in factors:
        m = m @ transvection(space, Y).mat
    return m


def quad_form_of(phi: SpecialCovering, params: SectionParams) -> QuadForm:
    """``phi ∘ s`` as a quadratic refinement of the intersection form."""
    g = params.g
    vals = GF2Vec(2 * g, phi.values.bits & ((1 << (2 * g)) - 1)) + params.r
    return QuadForm(OSurface(g).space, vals)


def arf_of(phi: SpecialCovering, params: SectionParams) -> int:
    return arf(quad_form_of(phi, params), OSurface(params.g).symplectic_pairs())


def arf_closed_form(phi: SpecialCovering, params: SectionParams) -> tuple[int, int]:
    """``(Arf of phi ∘ s over (e_i, e'_i), r_const + phi(bar t))``; the two agree on E_pi."""
    if not in_epi(phi):
        raise ValueError(f"{phi} is not in E_pi")
    closed = params.r_const ^ phi(bar(params.t))
    return arf_of(phi, params), closed


def gs_elements(g: int, params: SectionParams, limit_g: int = 3) -> list[Isometry]:
    if g > limit_g:
        raise TooLargeError(f"G_s is only enumerated up to g = {limit_g}")
    return [f for f in enumerate_isometries(OSurface(g).space) if in_Gs(f, params)]


def classify_epi(g: int, params: SectionParams, mode: str = "kt",
                 gs_limit_g: int = 3) -> OrbitReport:
    """Orbits of ``phi -> phi ∘ f_s`` on E_pi, labelled by the Arf invariant of ``phi ∘ s``.

    ``mode`` is ``kt`` (transvection generators of ``K_t``), ``gs`` (every
    element of ``G_s``, by filtering the whole symplectic group) or ``both``
    (compute the two and require the same partition).
    """
    if params.g != g:
        raise ValueError("params built for a different genus")
    if mode not in ("kt", "gs", "both"):
        raise ValueError(f"unknown mode {mode!r}")
    points = [m.phi for m in epi_set(g)]

    def label(phi):
        return arf_of(phi, params)

    def act(phi, m):
        return phi.compose(m)

    reports = {}
    if mode in ("kt", "both"):
        gens = [f_s_matrix(f, params).mat for f in kt_generators(g, params)]
        reports["kt"] = orbit_decompose(points, gens, act, label=None)
    if mode in ("gs", "both"):
        gens = [f_s_matrix(f, params).mat for f in gs_elements(g, params, gs_limit_g)]
        reports["gs"] = orbit_decompose(points, gens, act, label=None)
    if mode == "both" and reports["kt"].partition() != reports["gs"].partition():
        raise AssertionError("K_t and G_s orbits differ")
    report = reports["gs" if mode == "gs" else "kt"]
    for orb in report.orbits:
        labs = sorted({label(p) for p in orb.members})
        orb.label = labs[0] if len(labs) == 1 else "mixed"
    return report.sort_by_size()


def kt_in_gs_check(g: int, params: SectionParams, samples: Sequence[Isometry] | None = None) -> Report:
    """Every element of ``K_t`` (or of the given sample) lies in ``G_s``."""
    osurf = OSurface(g)
    if samples is None:
        samples = [f for f in enumerate_isometries(osurf.space) if in_Kt(f, params)]
    bad = [str(f) for f in samples if not in_Gs(f, params)]
    # lifts of kernel transvections fix the basis ebar'_i of ker tilde_pi_*
    tot = TotalO(g)
    fixes = True
    for Y in span(osurf.kernel_basis()):
        fs = f_s_matrix(transvection(osurf.space, Y), params).mat
        if any(fs @ tot.ebar_prime(i) != tot.ebar_prime(i) for i in range(1, g + 1)):
            fixes = False
    return Report("K_t in G_s", not bad and fixes,
                  {"checked": len(samples), "failures": bad[:1], "generators_fix_kernel": fixes})


def cor_witness(psi: SpecialCovering, psi2: SpecialCovering, params: SectionParams) -> Isometry | None:
    """A transvection ``T_V`` in ``K_t`` with ``psi ∘ tilde_pi_* ∘ (T_V)_s = psi2 ∘ tilde_pi_*``.

    ``delta_j = (psi2 - psi)(vbar_j)``; the witness exists iff
    ``sum_{j>=1} beta_j (delta_0 + delta_j) = 0`` and then
    ``V = sum_{j>=1} (delta_0 + delta_j) e'_j``.
    """
    g = params.g
    delta = psi.base_values + psi2.base_values
    beta = params.beta
    coeff = [delta[0] ^ delta[j] for j in range(1, g + 1)]
    if sum(b & c for b, c in zip(beta, coeff)) & 1:
        return None
    osurf = OSurface(g)
    V = GF2Vec.zero(2 * g)
    for j, c in enumerate(coeff, start=1):
        if c:
            V = V + osurf.e_prime(j)
    T = transvection(osurf.space, V)
    if pull_back(psi).compose(f_s_matrix(T, params).mat) != pull_back(psi2):
        raise AssertionError("transvection witness does not map psi to psi2")
    return T
