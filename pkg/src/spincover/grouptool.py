"""Bilinear forms over GF(2), their isometry groups and orbit machinery.

Two kinds of form space occur:

* the *dot* space ``Z_2^n`` with the identity Gram matrix, and
* the *symplectic* space ``Z_2^{2g}`` in the basis ``c_1..c_{2g}``, where
  the only nonzero products are ``c_{2i-1}.c_{2i} = 1``.

Isometry groups are tiny at the genera we care about, so whole groups are
enumerated by backtracking over frames and generated subgroups by
breadth-first closure.  Both are guarded against blowing up.
"""
from __future__ import annotations

from collections import deque
from dataclasses import dataclass, field
from functools import lru_cache
from typing import Any, Callable, Hashable, Iterable, Sequence

from .gf2core import GF2Mat, GF2Vec, ShapeError, mat_inv, parity

DOT_ENUM_LIMIT = 7
SYMP_ENUM_LIMIT = 6


class NotIsometryError(ValueError):
    pass


class NonIsotropicError(ValueError):
    """A dot-form transvection was requested for a vector with ``y.y = 1``."""


class TooLargeError(RuntimeError):
    """Full-group enumeration refused; use generators instead."""


class NotClosedError(ValueError):
    def __init__(self, point):
        super().__init__(f"action leaves the point set at {point}")
        self.point = point


@dataclass(frozen=True)
class FormSpace:
    dim: int
    gram: GF2Mat
    kind: str = "custom"

    def __post_init__(self):
        if self.gram.shape != (self.dim, self.dim):
            raise ShapeError(f"gram is {self.gram.shape}, expected {self.dim}x{self.dim}")
        if self.gram.T != self.gram:
            raise ValueError("gram matrix is not symmetric")

    @classmethod
    def dot(cls, n: int) -> "FormSpace":
        return _dot_space(n)

    @classmethod
    def symplectic(cls, g: int) -> "FormSpace":
        return _symplectic_space(g)

    def is_alternating(self) -> bool:
        return all(not self.gram[i, i] for i in range(self.dim))

    def vec(self, bits: int = 0) -> GF2Vec:
        return GF2Vec(self.dim, bits)


@lru_cache(maxsize=None)
def _dot_space(n: int) -> FormSpace:
    return FormSpace(n, GF2Mat.identity(n), "dot")


@lru_cache(maxsize=None)
def _symplectic_space(g: int) -> FormSpace:
    rows = tuple(1 << (i ^ 1) for i in range(2 * g))
    return FormSpace(2 * g, GF2Mat(2 * g, 2 * g, rows), "symplectic")


def pair(space: FormSpace, u: GF2Vec, v: GF2Vec) -> int:
    """``u^t . gram . v`` over GF(2)."""
    if u.n != space.dim or v.n != space.dim:
        raise ShapeError(f"vectors of length {u.n}, {v.n} in a space of dimension {space.dim}")
    return parity(u.bits & (space.gram @ v).bits)


def _pair_bits(gram_rows: tuple[int, ...], u: int, v: int) -> int:
    # u^t G v with G symmetric: parity of u & (G v)
    gv = 0
    i = 0
    while v:
        if v & 1:
            gv ^= gram_rows[i]
        v >>= 1
        i += 1
    return parity(u & gv)


def is_isometry(space: FormSpace, m: GF2Mat) -> bool:
    if m.shape != (space.dim, space.dim):
        raise ShapeError(f"matrix {m.shape} in a space of dimension {space.dim}")
    if m.T @ space.gram @ m != space.gram:
        return False
    return mat_inv(m) is not None


@dataclass(frozen=True)
class Isometry:
    space: FormSpace = field(compare=False, hash=False, repr=False)
    mat: GF2Mat

    @classmethod
    def checked(cls, space: FormSpace, mat: GF2Mat) -> "Isometry":
        if not is_isometry(space, mat):
            raise NotIsometryError(f"matrix does not preserve the {space.kind} form:\n{mat}")
        return cls(space, mat)

    @classmethod
    def identity(cls, space: FormSpace) -> "Isometry":
        return cls(space, GF2Mat.identity(space.dim))

    def __matmul__(self, other):
        if isinstance(other, Isometry):
            return Isometry(self.space, self.mat @ other.mat)
        if isinstance(other, GF2Vec):
            return self.mat @ other
        return NotImplemented

    def __call__(self, v: GF2Vec) -> GF2Vec:
        return self.mat @ v

    def inverse(self) -> "Isometry":
        inv = mat_inv(self.mat)
        if inv is None:
            raise NotIsometryError("singular matrix")
        return Isometry(self.space, inv)

    def is_identity(self) -> bool:
        return self.mat == GF2Mat.identity(self.space.dim)

    def __str__(self) -> str:
        return str(self.mat)


def transvection(space: FormSpace, y: GF2Vec) -> Isometry:
    """The map ``x -> x + <x, y> y``."""
    if y.n != space.dim:
        raise ShapeError(f"vector of length {y.n} in a space of dimension {space.dim}")
    if pair(space, y, y):
        raise NonIsotropicError(f"transvection vector {y} has <y,y> = 1")
    gy = (space.gram @ y).bits
    rows = tuple((1 << i) ^ (gy if (y.bits >> i) & 1 else 0) for i in range(space.dim))
    return Isometry(space, GF2Mat(space.dim, space.dim, rows))


def permutation(space: FormSpace, perm: Sequence[int]) -> Isometry:
    """The coordinate permutation sending basis vector ``j`` to ``perm[j]``."""
    n = space.dim
    if sorted(perm) != list(range(n)):
        raise ValueError(f"not a permutation of range({n}): {perm}")
    cols = [GF2Vec.unit(n, perm[j]) for j in range(n)]
    return Isometry(space, GF2Mat.from_columns(cols))


def transposition(space: FormSpace, i: int, j: int) -> Isometry:
    perm = list(range(space.dim))
    perm[i], perm[j] = perm[j], perm[i]
    return permutation(space, perm)


def enumerate_isometries(space: FormSpace, limit: int | None = None) -> list[Isometry]:
    """Every isometry of ``space``, each once, by frame backtracking.

    The images ``w_0, w_1, ...`` of the basis are chosen one at a time so
    that ``<w_i, w_j> = gram[i, j]`` for all ``j <= i``.  A nondegenerate
    Gram matrix makes every such frame a basis, so no independence test is
    needed.
    """
    if limit is None:
        limit = SYMP_ENUM_LIMIT if space.is_alternating() else DOT_ENUM_LIMIT
    n = space.dim
    if n > limit:
        raise TooLargeError(f"refusing to enumerate the isometries of a {space.kind} "
                            f"space of dimension {n} (limit {limit}); use generators")
    if mat_inv(space.gram) is None:
        raise ValueError("degenerate form: frame backtracking needs a nondegenerate gram")
    g = space.gram.data
    gram_rows = g
    by_norm: dict[int, list[int]] = {0: [], 1: []}
    for x in range(1 << n):
        by_norm[_pair_bits(gram_rows, x, x)].append(x)
    # G w for every candidate, so <w_i, w_j> is one AND + parity
    gw = {x: _apply_rows(gram_rows, x) for x in range(1 << n)}

    out: list[Isometry] = []
    frame: list[int] = []

    def extend(i: int):
        if i == n:
            out.append(Isometry(space, GF2Mat.from_columns([GF2Vec(n, w) for w in frame], rows=n)))
            return
        want = [(g[i] >> j) & 1 for j in range(i)]
        for w in by_norm[(g[i] >> i) & 1]:
            gw_w = gw[w]
            if all(parity(gw_w & frame[j]) == want[j] for j in range(i)):
                frame.append(w)
                extend(i + 1)
                frame.pop()

    extend(0)
    return out


def _apply_rows(rows: tuple[int, ...], x: int) -> int:
    out = 0
    for i, r in enumerate(rows):
        if parity(r & x):
            out |= 1 << i
    return out


def closure(gens: Iterable[Isometry], space: FormSpace | None = None, limit: int = 2_000_000) -> set[Isometry]:
    """The subgroup generated by ``gens`` (breadth-first product closure)."""
    gens = list(gens)
    if space is None:
        if not gens:
            raise ValueError("closure of no generators needs an explicit space")
        space = gens[0].space
    for s in gens:
        if s.space != space:
            raise ValueError("generators act on different spaces")
    ident = GF2Mat.identity(space.dim)
    seen = {ident}
    queue = deque([ident])
    gmats = list({s.mat for s in gens})
    while queue:
        m = queue.popleft()
        for s in gmats:
            p = m @ s
            if p not in seen:
                if len(seen) >= limit:
                    raise TooLargeError(f"closure exceeded {limit} elements")
                seen.add(p)
                queue.append(p)
    return {Isometry(space, m) for m in seen}


@dataclass
class Orbit:
    label: Any
    members: list

    @property
    def size(self) -> int:
        return len(self.members)


@dataclass
class OrbitReport:
    orbits: list[Orbit]

    @property
    def sizes(self) -> list[int]:
        return [o.size for o in self.orbits]

    def orbit_of(self, point) -> int:
        for k, o in enumerate(self.orbits):
            if point in o.members:
                return k
        raise KeyError(point)

    def partition(self) -> set[frozenset]:
        return {frozenset(o.members) for o in self.orbits}

    def sort_by_size(self) -> "OrbitReport":
        self.orbits.sort(key=lambda o: (o.size, _key(o.members[0])))
        return self

    def to_dict(self) -> dict:
        return {"orbits": [{"label": o.label, "size": o.size,
                            "members": [_key(m) for m in o.members]} for o in self.orbits]}


def _key(point) -> str:
    return str(point)


def orbit_decompose(points: Iterable[Hashable], gens: Sequence, act: Callable,
                    label: Callable | None = None) -> OrbitReport:
    """Partition ``points`` into orbits of the group generated by ``gens``.

    ``act(point, gen)`` returns the image point.  Orbits are grown by
    breadth-first search from the smallest unvisited point (bitstring
    order), members are listed in bitstring order and orbits are ordered by
    their smallest member, so output is stable across runs.  When ``label``
    is given, every member of an orbit must carry the same label.
    """
    pts = sorted(set(points), key=_key)
    pool = set(pts)
    seen: set = set()
    orbits = []
    for seed in pts:
        if seed in seen:
            continue
        seen.add(seed)
        members = [seed]
        queue = deque([seed])
        while queue:
            p = queue.popleft()
            for s in gens:
                q = act(p, s)
                if q not in pool:
                    raise NotClosedError(q)
                if q not in seen:
                    seen.add(q)
                    members.append(q)
                    queue.append(q)
        members.sort(key=_key)
        lab = None
        if label is not None:
            labs = {label(m) for m in members}
            if len(labs) != 1:
                raise ValueError(f"orbit of {seed} mixes labels {sorted(map(str, labs))}")
            lab = labs.pop()
        orbits.append(Orbit(lab, members))
    return OrbitReport(orbits)


@dataclass(frozen=True)
class QuadForm:
    """A quadratic refinement ``q`` of the form on ``space``.

    Stored by its values on the standard basis; elsewhere it is determined
    by ``q(x + y) = q(x) + q(y) + x.y``.
    """

    space: FormSpace = field(compare=False, hash=False, repr=False)
    values: GF2Vec

    def __post_init__(self):
        if self.values.n != self.space.dim:
            raise ShapeError("values must be given on every basis vector")
        if not self.space.is_alternating():
            raise ValueError("quadratic refinements need an alternating form")

    def __call__(self, x: GF2Vec) -> int:
        if x.n != self.space.dim:
            raise ShapeError(f"vector of length {x.n} in dimension {self.space.dim}")
        acc = parity(x.bits & self.values.bits)
        rows = self.space.gram.data
        b = x.bits
        while b:
            low = b & -b
            i = low.bit_length() - 1
            # cross terms x_i x_j <b_i, b_j> for j > i
            acc ^= parity(rows[i] & x.bits & ~((low << 1) - 1))
            b ^= low
        return acc


def is_symplectic_basis(space: FormSpace, pairs: Sequence[tuple[GF2Vec, GF2Vec]]) -> bool:
    if 2 * len(pairs) != space.dim:
        return False
    for i, (e, f) in enumerate(pairs):
        for j, (e2, f2) in enumerate(pairs):
            if pair(space, e, f2) != (i == j):
                return False
            if pair(space, e, e2) or pair(space, f, f2):
                return False
    return True


def arf(q: QuadForm, sympl_basis: Sequence[tuple[GF2Vec, GF2Vec]]) -> int:
    """Arf invariant ``sum_i q(e_i) q(e'_i)`` over a symplectic basis."""
    if not is_symplectic_basis(q.space, sympl_basis):
        raise ValueError("pairs do not form a symplectic basis")
    return sum(q(e) * q(f) for e, f in sympl_basis) & 1
