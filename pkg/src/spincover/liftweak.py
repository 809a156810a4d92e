"""Lifting orthogonal maps to symplectic ones and back; weak equivalence.

Bases: ``(e_1..e_g, e'_1..e'_g)`` upstairs and ``(v_0, v_0+v_1, .., v_0+v_g)``
downstairs.  A symplectic ``f`` lifts an ``F`` (``F ∘ pi_* = pi_* ∘ f``)
exactly when ``f`` keeps ``ker pi_*`` and both act on ``Im pi_*`` by the same
``g x g`` block ``A``.  ``Im pi_*`` is the hyperplane orthogonal to
``E = v_0 + .. + v_g``, and ``A`` is orthogonal for the restricted form
``S_ij = 1 + delta_ij``.

Weak equivalence of special coverings is decided on homology: an
automorphism of the total space is realizable iff it fixes ``h``, its base
part is orthogonal and its fiber part kills ``E``.
"""
from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from itertools import product

from .action_orth import Report, classify_A1
from .gf2core import GF2Mat, GF2Vec, all_vectors, mat_inv, solve
from .grouptool import FormSpace, Isometry, NotIsometryError, is_isometry
from .homology import (NSurface, OSurface, SectionParams, SpecialCovering, TotalN,
                       pi_star, presentation, specials)


class KernelNotPreserved(ValueError):
    """The symplectic map does not preserve ``ker pi_*``."""


class ExtensionDefect(RuntimeError):
    pass


def s_matrix(g: int) -> GF2Mat:
    """Dot products of ``v_0+v_i`` and ``v_0+v_j``: ``1 + delta_ij``."""
    full = (1 << g) - 1
    return GF2Mat(g, g, tuple(full ^ (1 << i) for i in range(g)))


@lru_cache(maxsize=None)
def _basis_change(g: int) -> tuple[GF2Mat, GF2Mat]:
    P = OSurface(g).change_of_basis()
    return P, mat_inv(P)


def to_ee_basis(f: Isometry) -> GF2Mat:
    """Matrix of ``f`` in the basis ``(e, e')``."""
    P, Pinv = _basis_change(f.mat.rows // 2)
    return Pinv @ f.mat @ P


def from_ee_basis(m: GF2Mat) -> GF2Mat:
    P, Pinv = _basis_change(m.rows // 2)
    return P @ m @ Pinv


def _blocks(m: GF2Mat, k: int) -> tuple[GF2Mat, GF2Mat, GF2Mat, GF2Mat]:
    lo = (1 << k) - 1
    rows = m.data
    n = m.cols - k
    A = GF2Mat(k, k, tuple(r & lo for r in rows[:k]))
    B = GF2Mat(k, n, tuple(r >> k for r in rows[:k]))
    C = GF2Mat(m.rows - k, k, tuple(r & lo for r in rows[k:]))
    D = GF2Mat(m.rows - k, n, tuple(r >> k for r in rows[k:]))
    return A, B, C, D


def is_lift_pair(f: Isometry, F: Isometry) -> bool:
    g = F.mat.rows - 1
    P = pi_star(g)
    return F.mat @ P == P @ f.mat


def lemma_gene_extend(h_basis: list[GF2Vec], h_images: list[GF2Vec], v: GF2Vec) -> list[GF2Vec]:
    """Solutions ``v'`` outside ``H`` of ``v'.Fhat(x) = v.x`` for ``x`` in ``H``.

    ``H`` is the hyperplane spanned by ``h_basis`` and ``Fhat`` the isometry
    of ``H`` sending ``h_basis[k]`` to ``h_images[k]``.  There are always two
    solutions differing by the normal vector ``E`` of ``H``; both lie outside
    ``H`` when ``E`` is in ``H``, exactly one otherwise.
    """
    n = v.n
    normal = _normal(h_basis, n)
    if v.dot(normal) != 1:
        raise ValueError("v must lie outside H")
    system = GF2Mat.from_rows([list(y) for y in h_images], cols=n)
    rhs = GF2Vec.from_list(v.dot(x) for x in h_basis)
    sol = solve(system, rhs)
    if sol is None:
        raise ExtensionDefect("extension system is inconsistent")
    part, ker = sol
    if len(ker) != 1:
        raise ExtensionDefect(f"expected a one-dimensional solution space, got {len(ker)}")
    cands = [part, part + ker[0]]
    return sorted((w for w in cands if w.dot(normal) == 1), key=str)


def _normal(h_basis: list[GF2Vec], n: int) -> GF2Vec:
    rows = GF2Mat.from_rows([list(x) for x in h_basis], cols=n)
    sol = solve(rows, GF2Vec.zero(len(h_basis)))
    ker = sol[1]
    if len(ker) != 1:
        raise ValueError("basis does not span a hyperplane")
    return ker[0]


def assemble_extension(h_basis, h_images, v: GF2Vec, v_image: GF2Vec) -> GF2Mat:
    """Matrix (standard basis) of the map equal to ``Fhat`` on ``H`` and ``v -> v_image``."""
    src = GF2Mat.from_columns(list(h_basis) + [v])
    dst = GF2Mat.from_columns(list(h_images) + [v_image])
    inv = mat_inv(src)
    if inv is None:
        raise ValueError("H basis plus v is not a basis")
    return dst @ inv


def project_to_orth(f: Isometry) -> list[Isometry]:
    """Orthogonal projections of a symplectic ``f``: one for ``g`` even, two for ``g`` odd.

    Returns ``[]`` if ``A`` fails ``A^t S A = S``.  Raises
    :class:`KernelNotPreserved` when ``f`` moves ``ker pi_*``.
    """
    g = f.mat.rows // 2
    if not is_isometry(OSurface(g).space, f.mat):
        raise NotIsometryError("project_to_orth needs a symplectic map")
    M = to_ee_basis(f)
    A, B, _, _ = _blocks(M, g)
    if B.data != (0,) * g:
        raise KernelNotPreserved("f does not preserve ker pi_*")
    S = s_matrix(g)
    if A.T @ S @ A != S:
        return []
    # Fhat on H = Im pi_*, basis v_0 + v_i, image columns from A
    h_basis = [GF2Vec(g + 1, 1 | (1 << i)) for i in range(1, g + 1)]
    h_images = [GF2Vec(g + 1, _from_h_coords(A.column(j))) for j in range(g)]
    v0 = GF2Vec.unit(g + 1, 0)
    out = []
    for w in lemma_gene_extend(h_basis, h_images, v0):
        F = Isometry(NSurface(g).space, assemble_extension(h_basis, h_images, v0, w))
        if not is_isometry(F.space, F.mat):
            raise ExtensionDefect("assembled extension is not orthogonal")
        if not is_lift_pair(f, F):
            raise ExtensionDefect("projection does not commute with pi_*")
        out.append(F)
    return out


def _from_h_coords(coords: GF2Vec) -> int:
    # sum_i a_i (v_0 + v_i) in v coordinates
    bits = coords.bits << 1
    if coords.weight() & 1:
        bits |= 1
    return bits


def lift_to_symp(F: Isometry) -> Isometry:
    """The symplectic lift with blocks ``A``, ``C = 0``, ``D = (A^t)^-1`` in the basis ``(e, e')``."""
    g = F.mat.rows - 1
    if not is_isometry(FormSpace.dot(g + 1), F.mat):
        raise NotIsometryError("lift_to_symp needs an orthogonal map")
    cols = []
    for j in range(1, g + 1):
        y = F(GF2Vec(g + 1, 1 | (1 << j)))
        if y.weight() & 1:
            raise ExtensionDefect("F does not preserve Im pi_*")
        cols.append(GF2Vec(g, y.bits >> 1))
    A = GF2Mat.from_columns(cols, rows=g)
    At_inv = mat_inv(A.T)
    if At_inv is None:
        raise ExtensionDefect("restriction of an orthogonal map to Im pi_* is singular")
    rows = tuple(A.data) + tuple(r << g for r in At_inv.data)
    M = GF2Mat(2 * g, 2 * g, rows)
    return Isometry(OSurface(g).space, from_ee_basis(M))


@dataclass(frozen=True)
class TotalAut:
    """An automorphism of ``H_1`` of the total space over the non-orientable side."""

    g: int
    mat: GF2Mat

    @property
    def base(self) -> GF2Mat:
        """``F``: the ``v``-part of ``Ftilde(vbar_j)``."""
        n = self.g + 1
        lo = (1 << n) - 1
        return GF2Mat(n, n, tuple(r & lo for r in self.mat.data[:n]))

    @property
    def delta(self) -> GF2Vec:
        n = self.g + 1
        return GF2Vec(n, self.mat.data[n] & ((1 << n) - 1))

    def fixes_h(self) -> bool:
        return self.mat.column(self.g + 1) == TotalN(self.g).h()


def is_realizable(Ft: TotalAut) -> bool:
    g = Ft.g
    if not Ft.fixes_h():
        return False
    if not is_isometry(FormSpace.dot(g + 1), Ft.base):
        return False
    return Ft.delta.weight() % 2 == 0


def weak_class(psi: SpecialCovering) -> int:
    return psi.base_values.weight() & 1


def weak_witness(psi: SpecialCovering, psi2: SpecialCovering) -> TotalAut | None:
    """``[[I, 0], [delta, 1]]`` with ``delta_j = (psi2 - psi)(vbar_j)`` when realizable."""
    if weak_class(psi) != weak_class(psi2):
        return None
    g = psi.host.g
    delta = psi.base_values + psi2.base_values
    rows = tuple(1 << i for i in range(g + 1)) + (delta.bits | (1 << (g + 1)),)
    Ft = TotalAut(g, GF2Mat(g + 2, g + 2, rows))
    if not is_realizable(Ft) or psi.compose(Ft.mat) != psi2:
        raise AssertionError("weak witness failed its own checks")
    return Ft


def proof_rho(psi: SpecialCovering, psi2: SpecialCovering) -> GF2Vec:
    """The section choice making ``psi`` and ``psi2`` non-fixed points.

    With ``i < j`` the first two indices where they differ:
    ``rho_i = psi(vbar_i)``, ``rho_j = psi2(vbar_j)``, other bits zero.
    """
    diff = (psi.base_values + psi2.base_values).support()
    if len(diff) < 2:
        raise ValueError("coverings must differ in at least two places")
    i, j = diff[:2]
    bits = (psi.base_values[i] << i) | (psi2.base_values[j] << j)
    return GF2Vec(psi.host.g + 1, bits)


def thm_an_crosscheck(g: int) -> Report:
    """All four weak-equivalence criteria agree on every pair of coverings."""
    covs = specials(TotalN(g))
    # orbit index of each covering under A_1^sigma, for every rho
    orbit_maps = []
    for rho in all_vectors(g + 1):
        rep = classify_A1(g, SectionParams.make(g, rho=rho), full_group=False)
        orbit_maps.append((rho, {p: k for k, o in enumerate(rep.orbits) for p in o.members}))
    pairs = 0
    bad = None
    proof_ok = True
    for a, b in product(covs, covs):
        pairs += 1
        p1 = weak_witness(a, b) is not None
        p2 = presentation(a).epsilon == presentation(b).epsilon
        p3 = weak_class(a) == weak_class(b)
        p4 = any(m[a] == m[b] for _, m in orbit_maps)
        if not (p1 == p2 == p3 == p4):
            bad = {"psi": str(a), "psi2": str(b), "props": [p1, p2, p3, p4]}
            break
        if p3 and a != b:
            rho = proof_rho(a, b)
            m = dict(orbit_maps)[rho]
            if m[a] != m[b]:
                proof_ok = False
    return Report("weak equivalence criteria", bad is None and proof_ok,
                  {"g": g, "pairs": pairs, "counterexample": bad, "proof_rho_witness": proof_ok})
