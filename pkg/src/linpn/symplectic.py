"""Symplectic Lie algebras and their canonical left-symmetric product.

Sign convention: ``flat(x)(y) = omega(x, y)``.  With ``W[i][j] =
omega(e_i, e_j)`` the matrix of ``flat`` acting on column vectors is ``W^T``
and ``sharp`` is its inverse.  The Poisson tensor built from ``omega`` in
:mod:`linpn.nijenhuis` uses the same ``sharp``.
"""

from __future__ import annotations

from fractions import Fraction
from itertools import product
from typing import Sequence

from .errors import DegenerateError, DimensionError, PreconditionError, StructureError
from .exactmath import Mat, mat_inverse, mat_mul
from .lsa import (
    AlgebraSpec,
    LieAlgebraSpec,
    ad,
    derived_lie,
    jacobi_defect,
    left_symmetry_defect,
)


def _as_mat(w) -> Mat:
    if isinstance(w, Cocycle2):
        return w.omega
    if isinstance(w, Mat):
        return w
    return Mat.from_rows(w)


def _check_antisymmetric(w: Mat) -> None:
    if not w.is_square:
        raise DimensionError(f"omega must be square, got {w.shape}")
    for i in range(w.rows):
        for j in range(i, w.cols):
            if w[i, j] != -w[j, i]:
                raise StructureError(f"omega not antisymmetric at ({i},{j})")


class Cocycle2:
    """A non-degenerate antisymmetric bilinear form ``omega``.

    Construction fails with :class:`DegenerateError` when ``omega`` is
    singular.  The cocycle identity depends on a Lie bracket and is checked
    when the form is paired with one (:class:`SymplecticLieAlgebra`).
    """

    __slots__ = ("omega", "flat", "sharp")

    def __init__(self, omega):
        w = _as_mat(omega)
        _check_antisymmetric(w)
        self.omega = w
        self.flat = w.T
        try:
            self.sharp = mat_inverse(self.flat)
        except DegenerateError as exc:
            raise DegenerateError(f"degenerate 2-form: {exc}") from None

    @property
    def dim(self) -> int:
        return self.omega.rows

    def __call__(self, x: Sequence, y: Sequence) -> Fraction:
        wy = self.omega @ y
        return sum((a * b for a, b in zip(x, wy)), Fraction(0))

    def __eq__(self, other) -> bool:
        return isinstance(other, Cocycle2) and self.omega == other.omega

    def __hash__(self) -> int:
        return hash(self.omega)

    def __repr__(self) -> str:
        return f"Cocycle2({self.omega!r})"


def coboundary(L: LieAlgebraSpec, nu: Sequence) -> Mat:
    """Matrix of ``omega(x, y) = nu([x, y])`` for a 1-form ``nu``."""
    n = L.dim
    nu = [Fraction(v) for v in nu]
    if len(nu) != n:
        raise DimensionError("one-form length does not match the Lie algebra")
    return Mat.from_func(
        n, n, lambda i, j: sum((L.c[i][j][k] * nu[k] for k in range(n)), Fraction(0))
    )


def cocycle_violations(L: LieAlgebraSpec, w) -> list[tuple[tuple[int, int, int], Fraction]]:
    w = _as_mat(w)
    n = L.dim
    if w.shape != (n, n):
        raise DimensionError(f"omega is {w.shape}, Lie algebra has dimension {n}")
    _check_antisymmetric(w)
    c = L.c

    def om_br(i, j, k):  # omega([e_i, e_j], e_k)
        return sum((c[i][j][m] * w[m, k] for m in range(n) if c[i][j][m]), Fraction(0))

    bad = []
    for i in range(n):
        for j in range(i + 1, n):
            for k in range(j + 1, n):
                s = om_br(i, j, k) + om_br(j, k, i) + om_br(k, i, j)
                if s:
                    bad.append(((i, j, k), s))
    return bad


def cocycle_defect(L: LieAlgebraSpec, w) -> Fraction:
    """Largest ``|omega([e_i,e_j],e_k) + cyclic|``; zero iff ``w`` is a 2-cocycle."""
    return max((abs(s) for _, s in cocycle_violations(L, w)), default=Fraction(0))


def is_unimodular(L: LieAlgebraSpec) -> bool:
    n = L.dim
    return all(sum((L.c[i][j][j] for j in range(n)), Fraction(0)) == 0 for i in range(n))


def lsa_from_symplectic(L: LieAlgebraSpec, w) -> AlgebraSpec:
    """Left-symmetric product defined by ``omega(x.y, z) = -omega(y, [x, z])``.

    Computed as ``L_x = sharp . ad*(x) . flat`` where ``ad*(x) = -ad(x)^T`` is
    the coadjoint action; the result is re-verified before it is returned.
    """
    w = w if isinstance(w, Cocycle2) else Cocycle2(w)
    n = L.dim
    if w.dim != n:
        raise DimensionError(f"omega has dimension {w.dim}, Lie algebra {n}")
    if jacobi_defect(L):
        raise PreconditionError("bracket violates the Jacobi identity")
    if cocycle_defect(L, w):
        raise PreconditionError("omega violates the cocycle identity")

    R = [[[Fraction(0)] * n for _ in range(n)] for _ in range(n)]
    for i in range(n):
        E = [Fraction(int(k == i)) for k in range(n)]
        Li = mat_mul(mat_mul(w.sharp, -ad(L, E).T), w.flat)
        for j, k in product(range(n), repeat=2):
            R[i][j][k] = Li[k, j]
    A = AlgebraSpec(n, R)
    if left_symmetry_defect(A) or derived_lie(A) != L:
        raise StructureError("constructed product failed re-verification")
    return A


class SymplecticLieAlgebra:
    """A Lie algebra with a non-degenerate 2-cocycle, plus its cached LSA.

    The constructor verifies the Jacobi identity, the cocycle identity,
    non-degeneracy, left-symmetry of the derived product, the defining
    relation ``omega(x.y, z) = -omega(y, [x, z])`` and that the commutator of
    the product gives back the bracket.  An instance is always valid.
    """

    __slots__ = ("lie", "omega", "lsa")

    def __init__(self, lie: LieAlgebraSpec, omega):
        self.lie = lie
        self.omega = omega if isinstance(omega, Cocycle2) else Cocycle2(omega)
        if self.omega.dim != lie.dim:
            raise DimensionError("omega and Lie algebra dimensions differ")
        self.lsa = lsa_from_symplectic(lie, self.omega)
        if defining_relation_defect(self.lie, self.omega, self.lsa):
            raise StructureError("product does not satisfy omega(x.y,z) = -omega(y,[x,z])")

    @property
    def dim(self) -> int:
        return self.lie.dim

    def __repr__(self) -> str:
        return f"SymplecticLieAlgebra(dim={self.dim})"


def defining_relation_defect(L: LieAlgebraSpec, w: Cocycle2, A: AlgebraSpec) -> Fraction:
    """Largest ``|omega(e_i.e_j, e_k) + omega(e_j, [e_i, e_k])|`` over basis triples."""
    n = L.dim
    W = w.omega
    worst = Fraction(0)
    for i, j, k in product(range(n), repeat=3):
        lhs = sum((A.R[i][j][m] * W[m, k] for m in range(n)), Fraction(0))
        rhs = -sum((L.c[i][k][m] * W[j, m] for m in range(n)), Fraction(0))
        worst = max(worst, abs(lhs - rhs))
    return worst
