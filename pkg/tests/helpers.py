"""Fixture builders shared by the test modules."""

from __future__ import annotations

import random
from fractions import Fraction
from itertools import product

from linpn.exactmath import Mat, MPoly, mat_det, mat_inverse
from linpn.gln import GlnSemidirectConfig, build_gln
from linpn.lsa import AlgebraSpec, LieAlgebraSpec
from linpn.nijenhuis import LinearTensorField
from linpn.symplectic import Cocycle2, SymplecticLieAlgebra, coboundary


def rand_q(rng: random.Random, lo: int = -3, hi: int = 3) -> Fraction:
    return Fraction(rng.randint(lo, hi), rng.choice((1, 1, 2, 3)))


def rand_point(rng: random.Random, n: int) -> tuple:
    return tuple(rand_q(rng, -5, 5) for _ in range(n))


def random_algebra(rng: random.Random, n: int, density: float = 0.5) -> AlgebraSpec:
    return AlgebraSpec(
        n,
        [[[rand_q(rng) if rng.random() < density else 0 for _ in range(n)] for _ in range(n)] for _ in range(n)],
    )


def matrix_algebra(k: int) -> AlgebraSpec:
    """k x k matrices, basis E_ab at index a*k + b; E_ab E_cd = delta_bc E_ad."""
    n = k * k
    entries = []
    for a, b, c, d in product(range(k), repeat=4):
        if b == c:
            entries.append((a * k + b, c * k + d, a * k + d, 1))
    return AlgebraSpec.from_entries(n, entries)


def sl2() -> LieAlgebraSpec:
    # H=0, X+=1, X-=2: [H,X+]=2X+, [H,X-]=-2X-, [X+,X-]=H
    return LieAlgebraSpec.from_entries(
        3, [(0, 1, 1, 2), (1, 0, 1, -2), (0, 2, 2, -2), (2, 0, 2, 2), (1, 2, 0, 1), (2, 1, 0, -1)]
    )


def heisenberg_plus_line() -> tuple[LieAlgebraSpec, Mat]:
    """h3 + R with [e1,e2]=e3 (zero-based [e0,e1]=e2) and omega = e0*^e3* + e1*^e2*."""
    lie = LieAlgebraSpec.from_entries(4, [(0, 1, 2, 1), (1, 0, 2, -1)])
    W = Mat.from_rows([[0, 0, 0, 1], [0, 0, 1, 0], [0, -1, 0, 0], [-1, 0, 0, 0]])
    return lie, W


def aff_sum(k: int) -> LieAlgebraSpec:
    """Direct sum of k copies of aff(1): [a_i, b_i] = b_i."""
    entries = []
    for i in range(k):
        a, b = 2 * i, 2 * i + 1
        entries += [(a, b, b, 1), (b, a, b, -1)]
    return LieAlgebraSpec.from_entries(2 * k, entries)


def random_invertible(rng: random.Random, n: int) -> Mat:
    while True:
        P = Mat.from_func(n, n, lambda i, j: rng.randint(-2, 2))
        if mat_det(P) != 0:
            return P


def transport(lie: LieAlgebraSpec, W: Mat, P: Mat) -> tuple[LieAlgebraSpec, Mat]:
    """Rewrite bracket and form in the basis e'_i = sum_a P[a, i] e_a."""
    n = lie.dim
    Pi = mat_inverse(P)
    c = [[[Fraction(0)] * n for _ in range(n)] for _ in range(n)]
    for i, j in product(range(n), repeat=2):
        v = [Fraction(0)] * n
        for a, b in product(range(n), repeat=2):
            s = P[a, i] * P[b, j]
            if s:
                for m in range(n):
                    v[m] += s * lie.c[a][b][m]
        for k in range(n):
            c[i][j][k] = sum((Pi[k, m] * v[m] for m in range(n)), Fraction(0))
    return LieAlgebraSpec(n, c), P.T @ W @ P


def random_symplectic(rng: random.Random, kind: str | None = None, max_dim: int = 6) -> SymplecticLieAlgebra:
    """A random symplectic Lie algebra of dimension at most ``max_dim``."""
    kinds = ["gl1", "aff2", "heis"] + (["gl2"] if max_dim >= 6 else [])
    kind = kind or rng.choice(kinds)
    while True:
        if kind == "gl1":
            cfg = GlnSemidirectConfig(1, Mat.from_rows([[rand_q(rng)]]), [rand_q(rng)])
        elif kind == "gl2":
            cfg = GlnSemidirectConfig(
                2, Mat.from_func(2, 2, lambda i, j: rand_q(rng)), [rand_q(rng), rand_q(rng)]
            )
        if kind in ("gl1", "gl2"):
            try:
                lie, w = build_gln(cfg)
            except ValueError:
                continue
            W = w.omega
        elif kind == "aff2":
            lie = aff_sum(2)
            W = coboundary(lie, [rand_q(rng) for _ in range(4)])
            if mat_det(W) == 0:
                continue
        else:
            lie, W = heisenberg_plus_line()
        lie, W = transport(lie, W, random_invertible(rng, lie.dim))
        return SymplecticLieAlgebra(lie, Cocycle2(W))


def omega_symmetric_tensor(rng: random.Random, W: Mat) -> LinearTensorField:
    """Random linear N with N(p)^T W antisymmetric for every p."""
    n = W.rows
    Wit = mat_inverse(W.T)
    A = [[[Fraction(0)] * n for _ in range(n)] for _ in range(n)]  # A[l][m][i]
    for l in range(n):
        for m in range(n):
            for i in range(m + 1, n):
                v = rand_q(rng)
                A[l][m][i], A[l][i][m] = v, -v
    coeffs = [
        [[-sum((Wit[k, m] * A[l][m][i] for m in range(n)), Fraction(0)) for l in range(n)] for i in range(n)]
        for k in range(n)
    ]
    return LinearTensorField(n, coeffs)


def vf_bracket(U: list, V: list) -> list:
    """Lie bracket of polynomial vector fields: [U,V]^k = U(V^k) - V(U^k)."""
    n = len(U)
    return [
        sum((U[l] * V[k].partial(l) - V[l] * U[k].partial(l) for l in range(n)), MPoly.zero(n))
        for k in range(n)
    ]


def apply_polymat(M: list, V: list) -> list:
    n = len(V)
    return [sum((M[k][i] * V[i] for i in range(n)), MPoly.zero(n)) for k in range(n)]
