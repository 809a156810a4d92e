"""Naive brute-force oracles and the frozen fixture file built from them.

Everything here works on plain numpy 0/1 arrays and never touches the
bit-packed code paths, so a bug in the optimized library cannot leak into
the expected values.  Not part of the public API.
"""
from __future__ import annotations

import itertools
import json
from pathlib import Path

import numpy as np

FIXTURE_PATH = Path(__file__).with_name("fixtures.json")
MAX_ORACLE_DIM = 4


def all_matrices(dim: int) -> np.ndarray:
    if dim > MAX_ORACLE_DIM:
        raise ValueError(f"oracle enumerates 2^(dim^2) matrices; dim {dim} > {MAX_ORACLE_DIM}")
    n = dim * dim
    idx = np.arange(1 << n, dtype=np.int64)
    bits = (idx[:, None] >> np.arange(n)) & 1
    return bits.reshape(-1, dim, dim).astype(np.int64)


def naive_matmul(a, b) -> np.ndarray:
    a = np.asarray(a, dtype=np.int64)
    b = np.asarray(b, dtype=np.int64)
    out = np.zeros((a.shape[0], b.shape[1]), dtype=np.int64)
    for i in range(a.shape[0]):
        for j in range(b.shape[1]):
            acc = 0
            for k in range(a.shape[1]):
                acc ^= int(a[i, k]) & int(b[k, j])
            out[i, j] = acc
    return out


def naive_rank(a) -> int:
    m = np.array(a, dtype=np.int64) % 2
    r = 0
    rows, cols = m.shape
    for c in range(cols):
        piv = next((i for i in range(r, rows) if m[i, c]), None)
        if piv is None:
            continue
        m[[r, piv]] = m[[piv, r]]
        for i in range(rows):
            if i != r and m[i, c]:
                m[i] ^= m[r]
        r += 1
    return r


def dot_gram(n: int) -> np.ndarray:
    return np.eye(n, dtype=np.int64)


def symp_gram(g: int) -> np.ndarray:
    k = np.zeros((2 * g, 2 * g), dtype=np.int64)
    for i in range(g):
        k[2 * i, 2 * i + 1] = k[2 * i + 1, 2 * i] = 1
    return k


def preserves(gram: np.ndarray):
    def pred(mats: np.ndarray) -> np.ndarray:
        prod = np.einsum("nji,jk,nkl->nil", mats, gram, mats) % 2
        return np.all(prod == gram, axis=(1, 2))
    return pred


def oracle_enumerate_matrices(dim: int, predicate) -> np.ndarray:
    """All ``dim x dim`` 0/1 matrices satisfying the vectorized predicate."""
    mats = all_matrices(dim)
    return mats[predicate(mats)]


def invertible_mask(mats: np.ndarray) -> np.ndarray:
    return np.array([naive_rank(m) == m.shape[0] for m in mats])


def oracle_orbit_naive(points, group, action) -> list[set]:
    """Union-find over every (point, group element) pair."""
    points = list(points)
    index = {p: i for i, p in enumerate(points)}
    parent = list(range(len(points)))

    def find(i):
        while parent[i] != i:
            parent[i] = parent[parent[i]]
            i = parent[i]
        return i

    for p in points:
        for gelt in group:
            q = action(p, gelt)
            a, b = find(index[p]), find(index[q])
            if a != b:
                parent[a] = b
    classes: dict[int, set] = {}
    for p in points:
        classes.setdefault(find(index[p]), set()).add(p)
    return list(classes.values())


# -- total-space actions rebuilt from their defining relations -----------------

def lift_sigma_naive(A: np.ndarray, rho) -> np.ndarray:
    """``F_sigma`` from ``F_sigma(sigma(v_i)) = sigma(F v_i)``, ``F_sigma(h) = h``."""
    n = A.shape[0]
    rho = np.asarray(rho, dtype=np.int64)
    X = np.zeros((n + 1, n + 1), dtype=np.int64)
    X[:n, :n] = np.eye(n, dtype=np.int64)
    X[n, :n] = rho
    X[n, n] = 1
    Y = np.zeros_like(X)
    for i in range(n):
        fv = A[:, i]
        Y[:n, i] = fv
        Y[n, i] = int(fv @ rho) % 2
    Y[n, n] = 1
    # X is unipotent of order 2, so X^-1 = X
    return naive_matmul(Y, X)


def s_naive(x, r, gram) -> np.ndarray:
    """Quadratic section built one basis vector at a time from ``s(a+b) = s(a)+s(b)+(a.b)h``."""
    x = [int(b) for b in x]
    n = len(x)
    acc = np.zeros(n + 1, dtype=np.int64)
    partial = np.zeros(n, dtype=np.int64)
    for i in range(n):
        if not x[i]:
            continue
        d = np.zeros(n + 1, dtype=np.int64)
        d[i] = 1
        d[n] = r[i]
        cross = int(partial @ gram[:, i]) % 2
        acc = (acc + d) % 2
        acc[n] ^= cross
        partial[i] = 1
    return acc


def lift_s_naive(L: np.ndarray, r, gram) -> np.ndarray:
    """``f_s`` from ``f_s(s(c_i)) = s(f(c_i))``, ``f_s(h) = h``."""
    n = L.shape[0]
    X = np.zeros((n + 1, n + 1), dtype=np.int64)
    Y = np.zeros((n + 1, n + 1), dtype=np.int64)
    for i in range(n):
        e = np.zeros(n, dtype=np.int64)
        e[i] = 1
        X[:, i] = s_naive(e, r, gram)
        Y[:, i] = s_naive(L[:, i], r, gram)
    X[n, n] = Y[n, n] = 1
    return naive_matmul(Y, X)


def _forms(n: int):
    return [tuple(b) for b in itertools.product((0, 1), repeat=n)]


def _compose_form(form, M) -> tuple:
    return tuple(int(x) for x in (np.asarray(form) @ M) % 2)


def a1_orbit_sizes(g: int, rho) -> list[int]:
    n = g + 1
    group = oracle_enumerate_matrices(n, preserves(dot_gram(n)))
    lifts = [lift_sigma_naive(A, rho) for A in group]
    pts = [f + (1,) for f in _forms(n)]
    orbits = oracle_orbit_naive(pts, lifts, _compose_form)
    return sorted(len(o) for o in orbits)


def epi_naive(g: int) -> list[tuple]:
    """Pull back every special form through ``tilde_pi_*`` built from its definition."""
    n = 2 * g
    P = np.zeros((g + 2, n + 1), dtype=np.int64)
    for i in range(g):
        for c in (2 * i, 2 * i + 1):
            P[0, c] = 1
            P[i + 1, c] = 1
    P[g + 1, n] = 1
    return sorted({_compose_form(f + (1,), P) for f in _forms(g + 1)})


def epi_orbit_sizes_gs(g: int, r) -> list[int]:
    """Orbits on E_pi under every symplectic map whose lift keeps E_pi stable."""
    n = 2 * g
    gram = symp_gram(g)
    group = oracle_enumerate_matrices(n, preserves(gram))
    pts = epi_naive(g)
    ptset = set(pts)
    acting = []
    for L in group:
        fs = lift_s_naive(L, r, gram)
        if all(_compose_form(p, fs) in ptset for p in pts):
            acting.append(fs)
    return sorted(len(o) for o in oracle_orbit_naive(pts, acting, _compose_form))


# -- fixtures ------------------------------------------------------------------

def _fixture(name, inp, expected, oracle):
    return {"name": name, "input": inp, "expected": expected, "oracle": oracle}


def build_fixtures() -> list[dict]:
    fx = []
    n_gl2 = int(invertible_mask(all_matrices(2)).sum())
    fx.append(_fixture("gl2_order", "all 16 2x2 matrices", n_gl2, "rank filter"))
    for dim in (2, 3, 4):
        cnt = len(oracle_enumerate_matrices(dim, preserves(dot_gram(dim))))
        fx.append(_fixture(f"orth_dot_{dim}", f"dot form, dim {dim}", cnt, "matrix enumeration"))
    for g in (1, 2):
        cnt = len(oracle_enumerate_matrices(2 * g, preserves(symp_gram(g))))
        fx.append(_fixture(f"symp_{g}", f"symplectic form, g={g}", cnt, "matrix enumeration"))
    for g in (1, 2, 3):
        sizes = a1_orbit_sizes(g, [0] * (g + 1))
        fx.append(_fixture(f"a1_sizes_g{g}", f"rho=0, g={g}", sizes, "union-find over full O"))
    for g in (1, 2):
        for r in itertools.product((0, 1), repeat=2 * g):
            rs = "".join(map(str, r))
            fx.append(_fixture(f"epi_gs_sizes_g{g}_r{rs}", f"g={g}, r={rs}",
                               epi_orbit_sizes_gs(g, list(r)), "union-find over G_s filter"))
    # lifted matrices for the worked formula examples
    swap = np.array([[0, 1], [1, 0]], dtype=np.int64)
    for rho in ((0, 0), (1, 0)):
        d = lift_sigma_naive(swap, rho)[2, :2].tolist()
        fx.append(_fixture(f"lift_swap_rho{''.join(map(str, rho))}", "g=1, F=swap", d,
                           "defining relations"))
    tc1 = np.array([[1, 1], [0, 1]], dtype=np.int64)
    delta = lift_s_naive(tc1, [0, 0], symp_gram(1))[2, :2].tolist()
    fx.append(_fixture("fs_Tc1_r00", "g=1, f=T_c1, r=00", delta, "defining relations"))
    s11 = s_naive([1, 1], [0, 0], symp_gram(1)).tolist()
    fx.append(_fixture("s_c1_plus_c2", "g=1, r=00, a=c1+c2", s11, "quadratic law recursion"))
    return fx


def write_fixtures(path: Path | str = FIXTURE_PATH) -> Path:
    path = Path(path)
    doc = {"schema": "spincover/1", "fixtures": build_fixtures()}
    path.write_text(json.dumps(doc, indent=1, sort_keys=True) + "\n")
    return path


def load_fixtures(path: Path | str = FIXTURE_PATH) -> dict[str, dict]:
    doc = json.loads(Path(path).read_text())
    return {f["name"]: f for f in doc["fixtures"]}
