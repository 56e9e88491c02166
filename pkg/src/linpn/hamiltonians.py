"""Trace polynomials ``H_n = (1/n) Tr (R_x)^n`` and their involution.

``R_x`` is the right multiplication of a left-symmetric algebra with the
point ``x`` kept symbolic, so every ``H_n`` is an exact homogeneous
polynomial of degree ``n``.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence

from .errors import DimensionError, PreconditionError
from .exactmath import (
    Mat,
    MPoly,
    mat_rank,
    poly_eval,
    polymat_mul,
    polymat_trace,
)
from .lsa import AlgebraSpec, derived_lie, jacobi_defect, left_symmetry_defect
from .nijenhuis import (
    LinearBivector,
    dF_defect,
    lambda_from_omega,
    lambda_n,
    nijenhuis_from_algebra,
    omega_symmetry_defect,
    schouten_defect,
    torsion_defect,
)
from .report import Report
from .symplectic import SymplecticLieAlgebra, cocycle_defect, is_unimodular

DEFAULT_SEED = 0xC0FFEE


def symbolic_right_mult(A: AlgebraSpec) -> list[list[MPoly]]:
    """``R_x`` with entry ``(k, i) = sum_l R^k_{il} x^l``."""
    n = A.dim
    return [[MPoly.linear([A.R[i][l][k] for l in range(n)]) for i in range(n)] for k in range(n)]


def hamiltonians(A: AlgebraSpec, max_n: int) -> list[MPoly]:
    """``[H_1, ..., H_max_n]`` computed from successive powers of ``R_x``."""
    if max_n < 1:
        raise ValueError("max_n must be at least 1")
    if A.dim == 0:
        return [MPoly.zero(0) for _ in range(max_n)]
    Rx = symbolic_right_mult(A)
    out = []
    power = Rx
    for n in range(1, max_n + 1):
        if n > 1:
            power = polymat_mul(power, Rx)
        out.append(polymat_trace(power) * Fraction(1, n))
    return out


def hamiltonian(A: AlgebraSpec, n: int) -> MPoly:
    if n < 1:
        raise ValueError("n must be at least 1")
    return hamiltonians(A, n)[-1]


@dataclass
class HamiltonianFamily:
    algebra: AlgebraSpec
    max_n: int
    polys: list

    @classmethod
    def build(cls, A: AlgebraSpec, max_n: int) -> "HamiltonianFamily":
        return cls(A, max_n, hamiltonians(A, max_n))

    def __getitem__(self, n: int) -> MPoly:
        """``H_n`` (1-based, as written in formulas)."""
        if not 1 <= n <= self.max_n:
            raise IndexError(n)
        return self.polys[n - 1]


def differential(f: MPoly) -> list[MPoly]:
    return f.gradient()


def _require_left_symmetric(A: AlgebraSpec) -> None:
    if left_symmetry_defect(A):
        raise PreconditionError("algebra is not left-symmetric")


def recursion_residual(A: AlgebraSpec, n: int, family: Sequence[MPoly] | None = None) -> list[MPoly]:
    """``(R_x)^T dH_n - dH_{n+1}`` componentwise."""
    H = family if family is not None and len(family) > n else hamiltonians(A, n + 1)
    Rx = symbolic_right_mult(A)
    dn = differential(H[n - 1])
    dn1 = differential(H[n])
    d = A.dim
    return [
        sum((Rx[k][i] * dn[k] for k in range(d) if Rx[k][i] and dn[k]), MPoly.zero(d)) - dn1[i]
        for i in range(d)
    ]


def recursion_defect(A: AlgebraSpec, n: int, family: Sequence[MPoly] | None = None) -> Fraction:
    """Largest coefficient of ``N* dH_n - dH_{n+1}``; zero certifies the chain link."""
    _require_left_symmetric(A)
    if n < 1:
        raise ValueError("n must be at least 1")
    return max((p.max_abs_coeff() for p in recursion_residual(A, n, family)), default=Fraction(0))


def poisson_bracket(P: LinearBivector, f: MPoly, g: MPoly) -> MPoly:
    """``{f, g} = sum_ij Pi^{ij} d_i f d_j g``."""
    n = P.dim
    if f.nvars != n or g.nvars != n:
        raise DimensionError("polynomial and bivector dimensions differ")
    df, dg = f.gradient(), g.gradient()
    out = MPoly.zero(n)
    for i in range(n):
        if not df[i]:
            continue
        for j in range(n):
            if i == j or not dg[j]:
                continue
            pij = P.entry(i, j)
            if pij:
                out = out + pij * df[i] * dg[j]
    return out


def hamiltonian_vector_field(P: LinearBivector, f: MPoly) -> list[MPoly]:
    """``Lambda# df`` with components ``sum_j Pi^{ij} d_j f``."""
    n = P.dim
    df = f.gradient()
    return [
        sum((P.entry(i, j) * df[j] for j in range(n) if df[j]), MPoly.zero(n)) for i in range(n)
    ]


def lenard_defect(P: LinearBivector, PN: LinearBivector, f: MPoly, g: MPoly) -> Fraction:
    """Largest coefficient of ``Lambda_N# df - Lambda# dg``."""
    a = hamiltonian_vector_field(PN, f)
    b = hamiltonian_vector_field(P, g)
    return max(((u - v).max_abs_coeff() for u, v in zip(a, b)), default=Fraction(0))


def random_point(rng: random.Random, n: int) -> tuple[Fraction, ...]:
    """Coordinates ``k/d`` with ``k`` in ``{-10..10} \\ {0}`` and ``d`` in ``{1, 2, 3}``."""
    nonzero = [k for k in range(-10, 11) if k]
    return tuple(Fraction(rng.choice(nonzero), rng.choice((1, 2, 3))) for _ in range(n))


def independence_rank(
    polys: Sequence[MPoly], seed: int = DEFAULT_SEED, attempts: int = 10
) -> tuple[int, tuple[Fraction, ...] | None]:
    """Maximal Jacobian rank of ``polys`` over seeded random rational points.

    A single full-rank witness certifies independence on a dense open set,
    since rank deficiency is a Zariski-closed condition.
    """
    if not polys:
        raise ValueError("need at least one polynomial")
    n = polys[0].nvars
    grads = [p.gradient() for p in polys]
    target = min(len(polys), n)
    rng = random.Random(seed)
    best, witness = 0, None
    for _ in range(attempts):
        pt = random_point(rng, n)
        J = Mat.from_rows([[poly_eval(g, pt) for g in row] for row in grads])
        r = mat_rank(J)
        if witness is None or r > best:
            best, witness = r, pt
        if best == target:
            break
    return best, witness


def certify_algebra(A: AlgebraSpec, max_n: int, report: Report | None = None) -> Report:
    """Left-symmetry, torsion and recursion checks on a bare algebra."""
    report = report if report is not None else Report()
    lsd = left_symmetry_defect(A)
    report.add("left_symmetry", lsd)
    report.add("jacobi(derived)", jacobi_defect(derived_lie(A)))
    report.add("torsion", torsion_defect(nijenhuis_from_algebra(A)))
    H = hamiltonians(A, max_n + 1)
    if lsd == 0:
        for n in range(1, max_n):
            report.add(f"recursion(n={n})", recursion_defect(A, n, H), "N* dH_n = dH_{n+1}")
    report.hamiltonians = H[:max_n]
    return report


def involution_certificate(S: SymplecticLieAlgebra, max_n: int) -> Report:
    """Full Poisson-Nijenhuis and involution certificate for ``H_1..H_max_n``."""
    if max_n < 2:
        raise ValueError("max_n must be at least 2")
    A = S.lsa
    w = S.omega
    N = nijenhuis_from_algebra(A)
    report = Report()
    report.add("jacobi", jacobi_defect(S.lie))
    report.add("cocycle", cocycle_defect(S.lie, w))
    report.add("left_symmetry", left_symmetry_defect(A))
    report.add("torsion", torsion_defect(N))
    report.add("omega_symmetry", omega_symmetry_defect(N, w))
    report.add("dF", dF_defect(N, w))
    Lam = lambda_from_omega(w)
    LamN = lambda_n(Lam, N)
    report.add("schouten(Lambda)", schouten_defect(Lam))
    report.add("schouten(Lambda_N)", schouten_defect(LamN))

    H = hamiltonians(A, max_n + 1)
    for n in range(1, max_n):
        report.add(f"recursion(n={n})", recursion_defect(A, n, H), "N* dH_n = dH_{n+1}")
        report.add(
            f"lenard(n={n})",
            lenard_defect(Lam, LamN, H[n - 1], H[n]),
            "Lambda_N# dH_n = Lambda# dH_{n+1}",
        )
    for name, P in (("Lambda", Lam), ("Lambda_N", LamN)):
        for n in range(1, max_n + 1):
            for m in range(n, max_n + 1):
                br = poisson_bracket(P, H[n - 1], H[m - 1])
                report.add(
                    f"bracket_{name}(H{n},H{m})",
                    br.max_abs_coeff(),
                    "" if br.is_zero() else f"{{H{n},H{m}}} = {br}",
                )
    if is_unimodular(S.lie):
        vanish = max((h.max_abs_coeff() for h in H[:max_n]), default=Fraction(0))
        report.add("unimodular", vanish, "unimodular: trace polynomials vanish")
    report.hamiltonians = H[:max_n]
    return report
