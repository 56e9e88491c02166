"""Left-symmetric algebras given by structure constants.

Index convention, used everywhere in the package: ``R[i][j][k]`` is the
coefficient of ``e_k`` in ``e_i . e_j`` (``i`` is the LEFT factor).  Lie
algebras use the same layout, ``c[i][j][k]`` being the coefficient of
``e_k`` in ``[e_i, e_j]``.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from itertools import product
from typing import Iterable, Sequence

from .errors import DimensionError, StructureError
from .exactmath import Mat, as_vector, basis_vector

Vector = tuple  # tuple[Fraction, ...]
Tensor3 = tuple  # tuple[tuple[tuple[Fraction, ...], ...], ...]


def _freeze3(data, n: int) -> Tensor3:
    try:
        out = tuple(
            tuple(tuple(Fraction(data[i][j][k]) for k in range(n)) for j in range(n))
            for i in range(n)
        )
    except IndexError as exc:
        raise DimensionError(f"structure constants must be {n}x{n}x{n}") from exc
    if len(data) != n or any(len(r) != n or any(len(s) != n for s in r) for r in data):
        raise DimensionError(f"structure constants must be {n}x{n}x{n}")
    return out


def _zeros3(n: int) -> list:
    return [[[Fraction(0)] * n for _ in range(n)] for _ in range(n)]


def _from_entries(n: int, entries: Iterable[Sequence]) -> list:
    data = _zeros3(n)
    seen = set()
    for i, j, k, v in entries:
        key = (int(i), int(j), int(k))
        if not all(0 <= t < n for t in key):
            raise DimensionError(f"index {key} out of range for dimension {n}")
        if key in seen:
            raise StructureError(f"duplicate structure constant {key}")
        seen.add(key)
        data[key[0]][key[1]][key[2]] = Fraction(v)
    return data


def _nonzero_entries(t: Tensor3) -> list[tuple[int, int, int, Fraction]]:
    n = len(t)
    return [(i, j, k, t[i][j][k]) for i, j, k in product(range(n), repeat=3) if t[i][j][k]]


@dataclass(frozen=True)
class AlgebraSpec:
    """A finite-dimensional algebra ``e_i . e_j = sum_k R[i][j][k] e_k``.

    Left-symmetry is not enforced here; it is checked by
    :func:`left_symmetry_defect`.
    """

    dim: int
    R: Tensor3

    def __post_init__(self):
        if self.dim < 0:
            raise DimensionError("dimension must be non-negative")
        object.__setattr__(self, "R", _freeze3(self.R, self.dim))

    @classmethod
    def zero(cls, dim: int) -> "AlgebraSpec":
        return cls(dim, _zeros3(dim))

    @classmethod
    def from_entries(cls, dim: int, entries: Iterable[Sequence]) -> "AlgebraSpec":
        """Build from ``(i, j, k, value)`` tuples; unlisted entries are zero."""
        return cls(dim, _from_entries(dim, entries))

    def entries(self) -> list[tuple[int, int, int, Fraction]]:
        return _nonzero_entries(self.R)

    def product(self, i: int, j: int) -> Vector:
        return self.R[i][j]


@dataclass(frozen=True)
class LieAlgebraSpec:
    """Antisymmetric structure constants ``[e_i, e_j] = sum_k c[i][j][k] e_k``.

    Non-antisymmetric input is rejected, never repaired.  The Jacobi identity
    is checked separately by :func:`jacobi_defect`.
    """

    dim: int
    c: Tensor3

    def __post_init__(self):
        c = _freeze3(self.c, self.dim)
        n = self.dim
        for i, j, k in product(range(n), repeat=3):
            if c[i][j][k] != -c[j][i][k]:
                raise StructureError(
                    f"bracket not antisymmetric at (i,j,k)=({i},{j},{k}): "
                    f"{c[i][j][k]} vs {c[j][i][k]}"
                )
        object.__setattr__(self, "c", c)

    @classmethod
    def abelian(cls, dim: int) -> "LieAlgebraSpec":
        return cls(dim, _zeros3(dim))

    @classmethod
    def from_entries(cls, dim: int, entries: Iterable[Sequence]) -> "LieAlgebraSpec":
        return cls(dim, _from_entries(dim, entries))

    def entries(self) -> list[tuple[int, int, int, Fraction]]:
        return _nonzero_entries(self.c)


# --------------------------------------------------------------------------
# products
# --------------------------------------------------------------------------


def _bilinear(t: Tensor3, x: Vector, y: Vector) -> Vector:
    n = len(t)
    out = [Fraction(0)] * n
    for i, xi in enumerate(x):
        if not xi:
            continue
        ti = t[i]
        for j, yj in enumerate(y):
            if not yj:
                continue
            s = xi * yj
            for k, c in enumerate(ti[j]):
                if c:
                    out[k] += s * c
    return tuple(out)


def multiply(A: AlgebraSpec, x: Sequence, y: Sequence) -> Vector:
    """Bilinear product ``x . y``."""
    return _bilinear(A.R, as_vector(x, A.dim), as_vector(y, A.dim))


def associator(A: AlgebraSpec, x: Sequence, y: Sequence, z: Sequence) -> Vector:
    """``[x, y, z] = (x.y).z - x.(y.z)``."""
    x, y, z = (as_vector(v, A.dim) for v in (x, y, z))
    left = _bilinear(A.R, _bilinear(A.R, x, y), z)
    right = _bilinear(A.R, x, _bilinear(A.R, y, z))
    return tuple(a - b for a, b in zip(left, right))


def left_symmetry_violations(A: AlgebraSpec) -> list[tuple[tuple[int, int, int], Vector]]:
    """Basis triples where ``[e_i,e_j,e_k] - [e_j,e_i,e_k]`` is nonzero.

    Only ``i < j`` is swept since the expression is antisymmetric in ``(i, j)``.
    """
    n = A.dim
    E = [basis_vector(n, i) for i in range(n)]
    bad = []
    for i in range(n):
        for j in range(i + 1, n):
            for k in range(n):
                d = tuple(
                    a - b
                    for a, b in zip(associator(A, E[i], E[j], E[k]), associator(A, E[j], E[i], E[k]))
                )
                if any(d):
                    bad.append(((i, j, k), d))
    return bad


def left_symmetry_defect(A: AlgebraSpec) -> Fraction:
    """Largest coefficient of ``[e_i,e_j,e_k] - [e_j,e_i,e_k]``; zero iff left-symmetric."""
    return max(
        (abs(c) for _, d in left_symmetry_violations(A) for c in d), default=Fraction(0)
    )


def derived_lie(A: AlgebraSpec) -> LieAlgebraSpec:
    """Commutator bracket ``[x, y] = x.y - y.x``."""
    n = A.dim
    R = A.R
    return LieAlgebraSpec(
        n,
        [[[R[i][j][k] - R[j][i][k] for k in range(n)] for j in range(n)] for i in range(n)],
    )


def bracket(L: LieAlgebraSpec, x: Sequence, y: Sequence) -> Vector:
    return _bilinear(L.c, as_vector(x, L.dim), as_vector(y, L.dim))


def jacobi_violations(L: LieAlgebraSpec) -> list[tuple[tuple[int, int, int], Vector]]:
    n = L.dim
    E = [basis_vector(n, i) for i in range(n)]
    bad = []
    # totally antisymmetric in (i, j, k): i < j < k suffices
    for i in range(n):
        for j in range(i + 1, n):
            for k in range(j + 1, n):
                a = bracket(L, E[i], bracket(L, E[j], E[k]))
                b = bracket(L, E[j], bracket(L, E[k], E[i]))
                c = bracket(L, E[k], bracket(L, E[i], E[j]))
                s = tuple(p + q + r for p, q, r in zip(a, b, c))
                if any(s):
                    bad.append(((i, j, k), s))
    return bad


def jacobi_defect(L: LieAlgebraSpec) -> Fraction:
    """Largest coefficient of the Jacobiator over basis triples; zero iff Lie."""
    return max((abs(c) for _, s in jacobi_violations(L) for c in s), default=Fraction(0))


# --------------------------------------------------------------------------
# multiplication operators and invariants
# --------------------------------------------------------------------------


def right_mult(A: AlgebraSpec, x: Sequence) -> Mat:
    """Matrix of ``R_x : y -> y . x``; column ``i`` is ``e_i . x``."""
    x = as_vector(x, A.dim)
    n = A.dim
    cols = [_bilinear(A.R, basis_vector(n, i), x) for i in range(n)]
    return Mat.from_columns(cols) if n else Mat.zeros(0)


def left_mult(A: AlgebraSpec, x: Sequence) -> Mat:
    """Matrix of ``L_x : y -> x . y``."""
    x = as_vector(x, A.dim)
    n = A.dim
    cols = [_bilinear(A.R, x, basis_vector(n, i)) for i in range(n)]
    return Mat.from_columns(cols) if n else Mat.zeros(0)


def ad(L: LieAlgebraSpec, x: Sequence) -> Mat:
    """Matrix of ``ad(x) : y -> [x, y]``."""
    x = as_vector(x, L.dim)
    n = L.dim
    cols = [_bilinear(L.c, x, basis_vector(n, i)) for i in range(n)]
    return Mat.from_columns(cols) if n else Mat.zeros(0)


def tau(A: AlgebraSpec) -> Vector:
    """The trace functional ``tau(x) = Tr R_x`` as its component covector."""
    n = A.dim
    # Tr R_{e_l} = sum_i (e_i . e_l)_i
    return tuple(sum((A.R[i][l][i] for i in range(n)), Fraction(0)) for l in range(n))


def b_form(A: AlgebraSpec) -> Mat:
    """Gram matrix of ``b(x, y) = Tr R_x R_y``."""
    n = A.dim
    Rs = [right_mult(A, basis_vector(n, i)) for i in range(n)]
    return Mat.from_func(n, n, lambda i, j: (Rs[i] @ Rs[j]).trace())


def apply_covector(form: Sequence, v: Sequence) -> Fraction:
    return sum((a * b for a, b in zip(form, v)), Fraction(0))
