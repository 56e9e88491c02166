"""Linear Nijenhuis tensors, linear Poisson bivectors and their compatibility.

Normalizations
--------------
Torsion is normalized as ``T_p(x, y) = [x, y, p] - [y, x, p]`` (associator
form).  This equals ``[NX, NY] - N([NX, Y] + [X, NY]) + N^2 [X, Y]`` computed
from vector-field brackets, i.e. half of the usual ``[N, N]``.

The coordinate formula returned by :func:`torsion_coord` is transcribed
term-for-term; contracted with ``(x, y, p)`` it equals
``LEMMA_TORSION_FACTOR * torsion_assoc(A, p, x, y)``.

For the Schouten bracket the package uses the trivector
``S^{ijk} = sum_l Pi^{li} d_l Pi^{jk} + cyclic(i, j, k)``.  For an
omega-symmetric linear ``N`` and the constant ``Lambda`` inverse to omega,
``S`` of ``Lambda_N`` evaluated on covectors with images ``X, Y, Z`` under
``Lambda#`` satisfies::

    S = SCHOUTEN_DF_WEIGHT * cyc dF(N X, Y, Z)
        + SCHOUTEN_TORSION_WEIGHT * cyc omega(T(X, Y), Z)

All three constants are re-derived by brute force in the test suite.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from itertools import product
from typing import Sequence

from .errors import DimensionError, PreconditionError, StructureError
from .exactmath import Mat, MPoly, as_vector, basis_vector
from .lsa import AlgebraSpec, associator
from .symplectic import Cocycle2

LEMMA_TORSION_FACTOR = Fraction(-1)
SCHOUTEN_DF_WEIGHT = Fraction(1, 3)
SCHOUTEN_TORSION_WEIGHT = Fraction(1, 3)


@dataclass(frozen=True)
class LinearTensorField:
    """``N(p)^k_i = sum_l coeffs[k][i][l] * x^l(p)``."""

    dim: int
    coeffs: tuple

    def __post_init__(self):
        n = self.dim
        c = self.coeffs
        if len(c) != n or any(len(a) != n or any(len(b) != n for b in a) for a in c):
            raise DimensionError(f"tensor coefficients must be {n}x{n}x{n}")
        object.__setattr__(
            self, "coeffs", tuple(tuple(tuple(Fraction(v) for v in b) for b in a) for a in c)
        )

    def at(self, p: Sequence) -> Mat:
        """The endomorphism ``N(p)`` as a matrix."""
        p = as_vector(p, self.dim)
        n = self.dim
        return Mat.from_func(
            n,
            n,
            lambda k, i: sum((c * x for c, x in zip(self.coeffs[k][i], p) if c and x), Fraction(0)),
        )

    def to_algebra(self) -> AlgebraSpec:
        """The algebra with ``e_i . e_l = N(e_l) e_i``."""
        n = self.dim
        return AlgebraSpec(
            n, [[[self.coeffs[k][i][l] for k in range(n)] for l in range(n)] for i in range(n)]
        )

    def symbolic(self) -> list[list[MPoly]]:
        n = self.dim
        return [[MPoly.linear(self.coeffs[k][i]) for i in range(n)] for k in range(n)]


@dataclass(frozen=True)
class LinearBivector:
    """``Pi^{ij}(x) = const_part[i, j] + sum_l lin_part[i][j][l] * x^l``."""

    dim: int
    const_part: Mat
    lin_part: tuple

    def __post_init__(self):
        n = self.dim
        cp = self.const_part if isinstance(self.const_part, Mat) else Mat.from_rows(self.const_part)
        if cp.shape != (n, n):
            raise DimensionError("constant part has wrong shape")
        lp = tuple(tuple(tuple(Fraction(v) for v in b) for b in a) for a in self.lin_part)
        if len(lp) != n or any(len(a) != n or any(len(b) != n for b in a) for a in lp):
            raise DimensionError(f"linear part must be {n}x{n}x{n}")
        for i in range(n):
            for j in range(i, n):
                if cp[i, j] != -cp[j, i]:
                    raise StructureError(f"bivector constant part not antisymmetric at ({i},{j})")
                for l in range(n):
                    if lp[i][j][l] != -lp[j][i][l]:
                        raise StructureError(
                            f"bivector linear part not antisymmetric at ({i},{j}) in x{l + 1}"
                        )
        object.__setattr__(self, "const_part", cp)
        object.__setattr__(self, "lin_part", lp)

    @classmethod
    def constant(cls, m: Mat) -> "LinearBivector":
        n = m.rows
        return cls(n, m, [[[0] * n for _ in range(n)] for _ in range(n)])

    @property
    def is_constant(self) -> bool:
        return not any(v for a in self.lin_part for b in a for v in b)

    def entry(self, i: int, j: int) -> MPoly:
        return MPoly.linear(self.lin_part[i][j], self.const_part[i, j])

    def at(self, p: Sequence) -> Mat:
        p = as_vector(p, self.dim)
        n = self.dim
        return Mat.from_func(
            n,
            n,
            lambda i, j: self.const_part[i, j]
            + sum((c * x for c, x in zip(self.lin_part[i][j], p)), Fraction(0)),
        )


def nijenhuis_from_algebra(A: AlgebraSpec) -> LinearTensorField:
    """``N(p) = R_p``, i.e. ``N(p) x = x . p``."""
    n = A.dim
    return LinearTensorField(
        n, [[[A.R[i][l][k] for l in range(n)] for i in range(n)] for k in range(n)]
    )


def torsion_coord(T: LinearTensorField) -> tuple:
    """Coordinate torsion coefficients ``Q[i][j][k][l]``.

    ``Q[i][j][k][l]`` is the coefficient of ``x^l`` in the ``e_k`` component
    of the torsion on ``(e_i, e_j)``, from the closed formula

        -R^k_{ml} (R^m_{ij} - R^m_{ji}) - (R^m_{il} R^k_{jm} - R^m_{jl} R^k_{im})

    with ``R^k_{ij} = N^k_{i,j}``.
    """
    n = T.dim
    N = T.coeffs

    def R(k, i, j):  # R^k_{ij}
        return N[k][i][j]

    out = []
    for i in range(n):
        oi = []
        for j in range(n):
            oj = []
            for k in range(n):
                ok = []
                for l in range(n):
                    s = Fraction(0)
                    for m in range(n):
                        s -= R(k, m, l) * (R(m, i, j) - R(m, j, i))
                        s -= R(m, i, l) * R(k, j, m) - R(m, j, l) * R(k, i, m)
                    ok.append(s)
                oj.append(tuple(ok))
            oi.append(tuple(oj))
        out.append(tuple(oi))
    return tuple(out)


def contract_torsion_coord(Q: tuple, p: Sequence, x: Sequence, y: Sequence) -> tuple:
    """``sum Q[i][j][k][l] x^i y^j p^l`` as a vector indexed by ``k``."""
    n = len(Q)
    out = [Fraction(0)] * n
    for i, j, l in product(range(n), repeat=3):
        s = x[i] * y[j] * p[l]
        if s:
            for k in range(n):
                out[k] += s * Q[i][j][k][l]
    return tuple(out)


def torsion_assoc(A: AlgebraSpec, p: Sequence, x: Sequence, y: Sequence) -> tuple:
    """``[x, y, p] - [y, x, p]``."""
    a = associator(A, x, y, p)
    b = associator(A, y, x, p)
    return tuple(u - v for u, v in zip(a, b))


def torsion_defect(T: LinearTensorField) -> Fraction:
    """Largest coordinate-torsion coefficient; zero iff ``N`` is Nijenhuis."""
    return max((abs(v) for a in torsion_coord(T) for b in a for c in b for v in c), default=Fraction(0))


def lambda_from_omega(w: Cocycle2) -> LinearBivector:
    """Constant Poisson tensor with ``Lambda# = flat^{-1}``."""
    w = w if isinstance(w, Cocycle2) else Cocycle2(w)
    return LinearBivector.constant(w.sharp)


def lambda_n(L: LinearBivector, T: LinearTensorField) -> LinearBivector:
    """``Lambda_N(a, b) = Lambda(a, N* b)``.

    Raises
    ------
    StructureError
        If the result is not antisymmetric, which for an invertible
        ``Lambda`` means ``N`` is not omega-symmetric.
    """
    if not L.is_constant:
        raise PreconditionError("lambda_n needs a constant bivector")
    if L.dim != T.dim:
        raise DimensionError("bivector and tensor dimensions differ")
    n = L.dim
    P = L.const_part
    N = T.coeffs
    lin = [
        [[sum((P[i, m] * N[j][m][l] for m in range(n)), Fraction(0)) for l in range(n)] for j in range(n)]
        for i in range(n)
    ]
    try:
        return LinearBivector(n, Mat.zeros(n), lin)
    except StructureError as exc:
        raise StructureError(f"Lambda_N not antisymmetric: N is not omega-symmetric ({exc})") from None


def omega_symmetry_violations(T: LinearTensorField, w: Cocycle2):
    w = w if isinstance(w, Cocycle2) else Cocycle2(w)
    n = T.dim
    if w.dim != n:
        raise DimensionError("tensor and form dimensions differ")
    W = w.omega
    bad = []
    for l in range(n):
        Np = T.at(basis_vector(n, l))
        M = Np.T @ W  # M[i, j] = omega(N e_i, e_j)
        for i in range(n):
            for j in range(i, n):
                # omega(N e_i, e_j) - omega(e_i, N e_j) = M[i,j] + M[j,i]
                d = M[i, j] + M[j, i]
                if d:
                    bad.append(((l, i, j), d))
    return bad


def omega_symmetry_defect(T: LinearTensorField, w: Cocycle2) -> Fraction:
    """Largest ``|omega(N(e_l) e_i, e_j) - omega(e_i, N(e_l) e_j)|``."""
    return max((abs(d) for _, d in omega_symmetry_violations(T, w)), default=Fraction(0))


def dF_form(T: LinearTensorField, w: Cocycle2) -> tuple:
    """Constant coefficients ``dF[i][j][k] = dF(e_i, e_j, e_k)`` of ``F = omega(N., .)``."""
    w = w if isinstance(w, Cocycle2) else Cocycle2(w)
    if omega_symmetry_defect(T, w):
        raise PreconditionError("F is not a 2-form: N is not omega-symmetric")
    n = T.dim
    W = w.omega
    N = T.coeffs
    # F[a][b][l]: coefficient of x^l in omega(N(p) e_a, e_b)
    F = [
        [[sum((N[k][a][l] * W[k, b] for k in range(n)), Fraction(0)) for l in range(n)] for b in range(n)]
        for a in range(n)
    ]
    return tuple(
        tuple(tuple(F[j][k][i] - F[i][k][j] + F[i][j][k] for k in range(n)) for j in range(n))
        for i in range(n)
    )


def dF_defect(T: LinearTensorField, w: Cocycle2) -> Fraction:
    """Largest ``|dF(e_i, e_j, e_k)|``; zero iff ``F`` is closed."""
    return max((abs(v) for a in dF_form(T, w) for b in a for v in b), default=Fraction(0))


def schouten_trivector(P: LinearBivector) -> list:
    """Components ``S[i][j][k]`` (polynomials) of the Schouten trivector of ``P``."""
    n = P.dim
    Pi = [[P.entry(i, j) for j in range(n)] for i in range(n)]
    D = P.lin_part  # d_l Pi^{jk} = D[j][k][l]
    S = []
    for i in range(n):
        Si = []
        for j in range(n):
            Sj = []
            for k in range(n):
                s = MPoly.zero(n)
                for l in range(n):
                    for a, b, c in ((i, j, k), (j, k, i), (k, i, j)):
                        if D[b][c][l]:
                            s = s + Pi[l][a] * D[b][c][l]
                Sj.append(s)
            Si.append(Sj)
        S.append(Si)
    return S


def schouten_defect(P: LinearBivector) -> Fraction:
    """Largest coefficient of the Schouten trivector; zero iff ``P`` is Poisson."""
    n = P.dim
    S = schouten_trivector(P)
    return max(
        (S[i][j][k].max_abs_coeff() for i in range(n) for j in range(i + 1, n) for k in range(j + 1, n)),
        default=Fraction(0),
    )


def schouten_from_torsion(T: LinearTensorField, w: Cocycle2) -> list:
    """Trivector of ``Lambda_N`` predicted from ``dF`` and the torsion.

    Evaluated on covectors ``e^a, e^b, e^c`` whose images under ``Lambda#``
    are ``X, Y, Z``, component ``[a][b][c]`` is::

        SCHOUTEN_DF_WEIGHT * (dF(NX,Y,Z) + dF(NY,Z,X) + dF(NZ,X,Y))
        + SCHOUTEN_TORSION_WEIGHT * (omega(T(X,Y),Z) + omega(T(Y,Z),X) + omega(T(Z,X),Y))

    Requires ``N`` omega-symmetric.
    """
    w = w if isinstance(w, Cocycle2) else Cocycle2(w)
    n = T.dim
    dF = dF_form(T, w)
    A = T.to_algebra()
    W = w.omega
    sharp = w.sharp
    imgs = [sharp.col(a) for a in range(n)]  # Lambda#(e^a)
    Nsym = T.symbolic()
    E = [basis_vector(n, l) for l in range(n)]

    def n_apply(X):  # N(x) X with symbolic point
        return [sum((Nsym[k][i] * X[i] for i in range(n) if X[i]), MPoly.zero(n)) for k in range(n)]

    def dF_poly(U, Y, Z):  # U polynomial vector, Y, Z constant
        s = MPoly.zero(n)
        for i in range(n):
            if not U[i]:
                continue
            c = sum((dF[i][j][k] * Y[j] * Z[k] for j in range(n) for k in range(n)), Fraction(0))
            if c:
                s = s + U[i] * c
        return s

    def om_tor(X, Y, Z):  # omega(T_x(X, Y), Z) as a linear polynomial
        coeffs = []
        for l in range(n):
            t = torsion_assoc(A, E[l], X, Y)
            coeffs.append(sum((t[k] * W[k, m] * Z[m] for k in range(n) for m in range(n)), Fraction(0)))
        return MPoly.linear(coeffs)

    NX = [n_apply(X) for X in imgs]
    out = []
    for a in range(n):
        row = []
        for b in range(n):
            col = []
            for c in range(n):
                X, Y, Z = imgs[a], imgs[b], imgs[c]
                d = dF_poly(NX[a], Y, Z) + dF_poly(NX[b], Z, X) + dF_poly(NX[c], X, Y)
                t = om_tor(X, Y, Z) + om_tor(Y, Z, X) + om_tor(Z, X, Y)
                col.append(d * SCHOUTEN_DF_WEIGHT + t * SCHOUTEN_TORSION_WEIGHT)
            row.append(col)
        out.append(row)
    return out
