"""Mod-2 homology of the surfaces, their circle bundles and the structure maps.

Coordinates used throughout:

* ``N`` side, dimension ``g+1``: ``v_0..v_g`` (dot form).
* ``F`` side, dimension ``2g``: ``c_1..c_{2g}`` stored at indices
  ``0..2g-1`` (symplectic form).  ``e_i = c_{2i-1}`` and
  ``e'_i = c_{2i-1} + c_{2i}`` for ``i = 1..g``.
* Total space over ``N``, dimension ``g+2``: ``vbar_0..vbar_g, h``.
* Total space over ``F``, dimension ``2g+1``: ``cbar_1..cbar_{2g}, h``.

The fiber class ``h`` is always the last coordinate.  The circle bundle is
the trivial one throughout.
"""
from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property, lru_cache

from .gf2core import GF2Mat, GF2Vec, ShapeError, parity
from .grouptool import FormSpace, pair


@dataclass(frozen=True)
class NSurface:
    g: int

    def __post_init__(self):
        if self.g < 1:
            raise ValueError(f"genus parameter must be >= 1, got {self.g}")

    @property
    def dim(self) -> int:
        return self.g + 1

    @cached_property
    def space(self) -> FormSpace:
        return FormSpace.dot(self.g + 1)

    def v(self, i: int) -> GF2Vec:
        return GF2Vec.unit(self.dim, i)

    def v_sum(self) -> GF2Vec:
        return GF2Vec.ones(self.dim)


@dataclass(frozen=True)
class OSurface:
    g: int

    def __post_init__(self):
        if self.g < 1:
            raise ValueError(f"genus parameter must be >= 1, got {self.g}")

    @property
    def dim(self) -> int:
        return 2 * self.g

    @cached_property
    def space(self) -> FormSpace:
        return FormSpace.symplectic(self.g)

    def c(self, i: int) -> GF2Vec:
        """``c_i`` with the 1-based index used for the symplectic basis."""
        return GF2Vec.unit(self.dim, i - 1)

    def e(self, i: int) -> GF2Vec:
        return self.c(2 * i - 1)

    def e_prime(self, i: int) -> GF2Vec:
        return self.c(2 * i - 1) + self.c(2 * i)

    def symplectic_pairs(self) -> list[tuple[GF2Vec, GF2Vec]]:
        return [(self.e(i), self.e_prime(i)) for i in range(1, self.g + 1)]

    def kernel_basis(self) -> list[GF2Vec]:
        return [self.e_prime(i) for i in range(1, self.g + 1)]

    def change_of_basis(self) -> GF2Mat:
        """Columns are ``e_1..e_g, e'_1..e'_g`` in ``c`` coordinates."""
        return GF2Mat.from_columns([self.e(i) for i in range(1, self.g + 1)]
                                   + self.kernel_basis())


@dataclass(frozen=True)
class TotalN:
    g: int

    @property
    def dim(self) -> int:
        return self.g + 2

    @property
    def h_index(self) -> int:
        return self.g + 1

    def h(self) -> GF2Vec:
        return GF2Vec.unit(self.dim, self.h_index)

    def vbar(self, i: int) -> GF2Vec:
        return GF2Vec.unit(self.dim, i)


@dataclass(frozen=True)
class TotalO:
    g: int

    @property
    def dim(self) -> int:
        return 2 * self.g + 1

    @property
    def h_index(self) -> int:
        return 2 * self.g

    def h(self) -> GF2Vec:
        return GF2Vec.unit(self.dim, self.h_index)

    def cbar(self, i: int) -> GF2Vec:
        return GF2Vec.unit(self.dim, i - 1)

    def ebar(self, i: int) -> GF2Vec:
        return self.cbar(2 * i - 1)

    def ebar_prime(self, i: int) -> GF2Vec:
        return self.cbar(2 * i - 1) + self.cbar(2 * i)

    def kernel_basis(self) -> list[GF2Vec]:
        return [self.ebar_prime(i) for i in range(1, self.g + 1)]


def bar(x: GF2Vec) -> GF2Vec:
    """The trivialisation section ``x -> xbar`` (append a zero fiber coordinate)."""
    return GF2Vec(x.n + 1, x.bits)


def unbar(y: GF2Vec) -> GF2Vec:
    """Projection of a total space onto its base: drop the fiber coordinate."""
    return GF2Vec(y.n - 1, y.bits & ((1 << (y.n - 1)) - 1))


class NotSpecialError(ValueError):
    pass


@dataclass(frozen=True)
class SpecialCovering:
    """A linear form on a total-space homology taking the value 1 on ``h``."""

    host: TotalN | TotalO
    values: GF2Vec

    def __post_init__(self):
        if self.values.n != self.host.dim:
            raise ShapeError(f"form of length {self.values.n} on a total space of dimension {self.host.dim}")
        if not self.values[self.host.h_index]:
            raise NotSpecialError(f"value on h must be 1: {self.values}")

    @classmethod
    def on_n(cls, g: int, base_values: GF2Vec | str) -> "SpecialCovering":
        """The covering with ``psi(vbar_i)`` given by ``base_values``."""
        if isinstance(base_values, str):
            base_values = GF2Vec.from_str(base_values)
        if base_values.n != g + 1:
            raise ShapeError(f"need g+1 = {g + 1} values, got {base_values.n}")
        return cls(TotalN(g), GF2Vec(g + 2, base_values.bits | (1 << (g + 1))))

    def __call__(self, x: GF2Vec) -> int:
        return self.values.dot(x)

    @property
    def base_values(self) -> GF2Vec:
        """Values on the non-fiber basis vectors."""
        return unbar(self.values)

    def compose(self, m: GF2Mat) -> "SpecialCovering":
        """``self ∘ m`` for an endomorphism ``m`` of the total space."""
        return SpecialCovering(self.host, m.lmul(self.values))

    def __str__(self) -> str:
        return str(self.base_values)


@dataclass(frozen=True)
class SectionParams:
    """Choices fixing the linear section ``sigma`` and the quadratic section ``s``.

    ``rho`` has ``g+1`` bits: ``sigma(v_i) = vbar_i + rho_i h``.
    ``r`` has ``2g`` bits: ``s(c_i) = cbar_i + r_i h``.
    """

    g: int
    rho: GF2Vec
    r: GF2Vec

    def __post_init__(self):
        if self.rho.n != self.g + 1:
            raise ShapeError(f"rho needs {self.g + 1} bits, got {self.rho.n}")
        if self.r.n != 2 * self.g:
            raise ShapeError(f"r needs {2 * self.g} bits, got {self.r.n}")

    @classmethod
    def make(cls, g: int, rho: str | GF2Vec | None = None, r: str | GF2Vec | None = None) -> "SectionParams":
        if rho is None:
            rho = GF2Vec.zero(g + 1)
        elif isinstance(rho, str):
            rho = GF2Vec.from_str(rho)
        if r is None:
            r = GF2Vec.zero(2 * g)
        elif isinstance(r, str):
            r = GF2Vec.from_str(r)
        return cls(g, rho, r)

    @property
    def beta(self) -> GF2Vec:
        r = self.r
        return GF2Vec.from_list(r[2 * i] ^ r[2 * i + 1] ^ 1 for i in range(self.g))

    @property
    def t(self) -> GF2Vec:
        """``t = sum_i beta_i e_i`` in ``c`` coordinates."""
        bits = 0
        for i, b in enumerate(self.beta):
            if b:
                bits |= 1 << (2 * i)
        return GF2Vec(2 * self.g, bits)

    @property
    def r_const(self) -> int:
        r = self.r
        return sum(r[2 * i] & r[2 * i + 1] for i in range(self.g)) & 1

    def is_exceptional(self) -> bool:
        """True when ``r_{2i-1} + r_{2i} = 1`` for every ``i`` (equivalently ``t = 0``)."""
        return not self.t


@lru_cache(maxsize=None)
def pi_star(g: int) -> GF2Mat:
    """Orientation cover on homology, ``c_{2i-1}, c_{2i} -> v_0 + v_i``."""
    cols = []
    for i in range(1, g + 1):
        col = GF2Vec(g + 1, 1 | (1 << i))
        cols += [col, col]
    return GF2Mat.from_columns(cols, rows=g + 1)


@lru_cache(maxsize=None)
def tilde_pi_star(g: int) -> GF2Mat:
    """The induced map of total spaces; ``cbar_j -> bar(pi_*(c_j))`` and ``h -> h``."""
    base = pi_star(g)
    cols = [bar(c) for c in base.columns()] + [GF2Vec.unit(g + 2, g + 1)]
    return GF2Mat.from_columns(cols, rows=g + 2)


def p_n_star(g: int) -> GF2Mat:
    return GF2Mat(g + 1, g + 2, tuple(1 << i for i in range(g + 1)))


def p_o_star(g: int) -> GF2Mat:
    return GF2Mat(2 * g, 2 * g + 1, tuple(1 << i for i in range(2 * g)))


def specials(host: TotalN) -> list[SpecialCovering]:
    """All ``2^(g+1)`` special coverings, ascending in ``(psi(vbar_0), ..., psi(vbar_g))``."""
    if not isinstance(host, TotalN):
        raise TypeError("specials() enumerates coverings of the bundle over the non-orientable surface")
    from .gf2core import all_vectors
    return [SpecialCovering.on_n(host.g, x) for x in all_vectors(host.g + 1)]


@dataclass(frozen=True)
class EpiMember:
    """An element ``phi`` of E_pi and the two ``psi`` with ``phi = psi ∘ tilde_pi_*``."""

    phi: SpecialCovering
    psis: tuple[SpecialCovering, SpecialCovering]


def pull_back(psi: SpecialCovering) -> SpecialCovering:
    """``psi ∘ tilde_pi_*``."""
    g = psi.host.g
    return SpecialCovering(TotalO(g), tilde_pi_star(g).lmul(psi.values))


def epi_set(g: int) -> list[EpiMember]:
    """The ``2^g`` special coverings of the orientable side that come from below."""
    host = TotalO(g)
    groups: dict[GF2Vec, list[SpecialCovering]] = {}
    for psi in specials(TotalN(g)):
        phi = pull_back(psi)
        groups.setdefault(phi.values, []).append(psi)
    out = []
    for vals in sorted(groups, key=str):
        psis = groups[vals]
        if len(psis) != 2:
            raise AssertionError(f"pull-back is not 2-to-1 at {vals}: {len(psis)} preimages")
        out.append(EpiMember(SpecialCovering(host, vals), (psis[0], psis[1])))
    return out


def in_epi(phi: SpecialCovering) -> bool:
    """Membership in E_pi: ``phi`` vanishes on ``ker tilde_pi_*``."""
    host = phi.host
    return all(phi(k) == 0 for k in host.kernel_basis())


def sigma_eval(params: SectionParams, x: GF2Vec) -> GF2Vec:
    """Linear section ``sigma(v_i) = vbar_i + rho_i h``, extended linearly."""
    if x.n != params.g + 1:
        raise ShapeError(f"expected a vector of length {params.g + 1}")
    return GF2Vec(params.g + 2, x.bits | (parity(x.bits & params.rho.bits) << (params.g + 1)))


def s_eval(params: SectionParams, a: GF2Vec) -> GF2Vec:
    """Quadratic section: ``s(sum x_i c_i) = sum x_i (cbar_i + r_i h) + (sum_i x_{2i-1} x_{2i}) h``."""
    g = params.g
    if a.n != 2 * g:
        raise ShapeError(f"expected a vector of length {2 * g}")
    x = a.bits
    corr = parity(x & (x >> 1) & _pair_low_mask(g))
    hbit = parity(x & params.r.bits) ^ corr
    return GF2Vec(2 * g + 1, x | (hbit << (2 * g)))


def _pair_low_mask(g: int) -> int:
    # bits 0, 2, 4, ...: positions of c_1, c_3, ... whose partner sits one bit higher
    return int("01" * g, 2) if g else 0


@dataclass(frozen=True)
class Presentation:
    g: int
    epsilon: int
    embedding_exponents: tuple[int, ...]

    @property
    def generators(self) -> list[str]:
        return [f"w{i}" for i in range(self.g + 1)] + ["k"]

    @property
    def relators(self) -> list[str]:
        rels = [f"[w{i},k]" for i in range(self.g + 1)]
        main = " ".join(f"w{i}^2" for i in range(self.g + 1))
        if self.epsilon:
            main += " k^1"
        return rels + [main]

    @property
    def embedding(self) -> dict[str, str]:
        emb = {}
        for i, e in enumerate(self.embedding_exponents):
            emb[f"w{i}"] = f"u{i} h^{e}" if e else f"u{i}"
        emb["k"] = "h^2"
        return emb

    def __str__(self) -> str:
        return f"<{','.join(self.generators)} | {', '.join(self.relators)}>"

    def to_dict(self) -> dict:
        return {"generators": self.generators, "relators": self.relators,
                "epsilon": self.epsilon, "embedding": self.embedding}


def presentation(psi: SpecialCovering) -> Presentation:
    """Closed-form presentation of the kernel of ``psi`` on the fundamental group."""
    if not isinstance(psi.host, TotalN):
        raise TypeError("presentation() is defined for coverings over the non-orientable side")
    base = psi.base_values
    return Presentation(psi.host.g, base.weight() & 1, tuple(base))


def symplectic_pair(g: int, u: GF2Vec, v: GF2Vec) -> int:
    return pair(OSurface(g).space, u, v)
