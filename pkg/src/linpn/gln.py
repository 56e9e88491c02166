"""The symplectic Lie algebras gl(n) x| R^n and the n = 2 worked example.

Elements are pairs ``(A, x)`` with bracket ``[(A,x),(B,y)] = (AB - BA, Ay - Bx)``.
The 2-cocycle is the coboundary of ``nu(A, x) = Tr(M A) + g(x)``::

    omega((A,x),(B,y)) = g(Ay) - g(Bx) + Tr([M, A] B)
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence

from .errors import DegenerateError, DimensionError
from .exactmath import Mat, MPoly, mat_inverse, mat_vec
from .hamiltonians import hamiltonians
from .lsa import LieAlgebraSpec
from .symplectic import Cocycle2, SymplecticLieAlgebra

Element = tuple  # (Mat n x n, tuple of length n)


@dataclass(frozen=True)
class GlnSemidirectConfig:
    n: int
    M: Mat
    g: tuple

    def __post_init__(self):
        if self.n < 1:
            raise ValueError("n must be at least 1")
        M = self.M if isinstance(self.M, Mat) else Mat.from_rows(self.M)
        if M.shape != (self.n, self.n):
            raise DimensionError(f"M must be {self.n}x{self.n}")
        g = tuple(Fraction(v) for v in self.g)
        if len(g) != self.n:
            raise DimensionError(f"g must have length {self.n}")
        object.__setattr__(self, "M", M)
        object.__setattr__(self, "g", g)

    @property
    def dim(self) -> int:
        return self.n * self.n + self.n


def example_config(a=1, l=0) -> GlnSemidirectConfig:
    """``n = 2``, ``M = ((l, 1), (0, l))``, ``g(x) = a <e_1, x>``."""
    a, l = Fraction(a), Fraction(l)
    return GlnSemidirectConfig(2, Mat.from_rows([[l, 1], [0, l]]), (a, Fraction(0)))


def _pair(A: Mat, x: Sequence) -> Element:
    return (A, tuple(Fraction(v) for v in x))


def standard_basis(n: int) -> list[Element]:
    """Translations ``(0, e_i)`` then matrix units ``(E_ab, 0)`` row-major."""
    zero_m, zero_v = Mat.zeros(n), (0,) * n
    out = [_pair(zero_m, [int(k == i) for k in range(n)]) for i in range(n)]
    for a in range(n):
        for b in range(n):
            out.append(_pair(Mat.from_func(n, n, lambda i, j: int((i, j) == (a, b))), zero_v))
    return out


def example_basis(n: int = 2) -> list[Element]:
    """``v1 = (0,e1), v2 = (0,e2), v3 = (1,0), v4 = (H,0), v5 = (X+,0), v6 = (X-,0)``."""
    if n != 2:
        raise ValueError("the example basis is only defined for n = 2")
    z = (0, 0)
    return [
        _pair(Mat.zeros(2), (1, 0)),
        _pair(Mat.zeros(2), (0, 1)),
        _pair(Mat.identity(2), z),
        _pair(Mat.from_rows([[1, 0], [0, -1]]), z),
        _pair(Mat.from_rows([[0, 1], [0, 0]]), z),
        _pair(Mat.from_rows([[0, 0], [1, 0]]), z),
    ]


EXAMPLE_BASIS_LABELS = ("(0,e1)", "(0,e2)", "(1,0)", "(H,0)", "(X+,0)", "(X-,0)")


def gl_bracket(u: Element, v: Element) -> Element:
    A, x = u
    B, y = v
    return (A @ B - B @ A, tuple(p - q for p, q in zip(mat_vec(A, y), mat_vec(B, x))))


def gl_omega(cfg: GlnSemidirectConfig, u: Element, v: Element) -> Fraction:
    A, x = u
    B, y = v
    g = cfg.g
    M = cfg.M
    gAy = sum((gi * t for gi, t in zip(g, mat_vec(A, y))), Fraction(0))
    gBx = sum((gi * t for gi, t in zip(g, mat_vec(B, x))), Fraction(0))
    return gAy - gBx + ((M @ A - A @ M) @ B).trace()


def nu(cfg: GlnSemidirectConfig, u: Element) -> Fraction:
    A, x = u
    return (cfg.M @ A).trace() + sum((gi * t for gi, t in zip(cfg.g, x)), Fraction(0))


def _flatten(u: Element) -> tuple:
    A, x = u
    return tuple(x) + A.entries


class _Coordinates:
    def __init__(self, basis: Sequence[Element]):
        B = Mat.from_columns([_flatten(b) for b in basis])
        self.inverse = mat_inverse(B)

    def __call__(self, u: Element) -> tuple:
        return mat_vec(self.inverse, _flatten(u))


def default_basis(n: int) -> list[Element]:
    return example_basis() if n == 2 else standard_basis(n)


def build_gln(
    config: GlnSemidirectConfig, basis: Sequence[Element] | None = None
) -> tuple[LieAlgebraSpec, Cocycle2]:
    """Structure constants and symplectic form of gl(n) x| R^n.

    The basis defaults to :func:`example_basis` for ``n = 2`` and to
    :func:`standard_basis` otherwise.

    Raises
    ------
    DegenerateError
        If ``omega`` is degenerate for the chosen ``(M, g)``.
    """
    n = config.n
    basis = list(basis) if basis is not None else default_basis(n)
    d = config.dim
    if len(basis) != d:
        raise DimensionError(f"basis must have {d} elements")
    coords = _Coordinates(basis)
    c = [[list(coords(gl_bracket(basis[i], basis[j]))) for j in range(d)] for i in range(d)]
    lie = LieAlgebraSpec(d, c)
    W = Mat.from_func(d, d, lambda i, j: gl_omega(config, basis[i], basis[j]))
    try:
        omega = Cocycle2(W)
    except DegenerateError as exc:
        raise DegenerateError(
            f"omega is degenerate for M={config.M!r}, g={[str(v) for v in config.g]}: {exc}"
        ) from None
    return lie, omega


def build_symplectic(config: GlnSemidirectConfig, basis=None) -> SymplecticLieAlgebra:
    lie, omega = build_gln(config, basis)
    return SymplecticLieAlgebra(lie, omega)


def example_coordinate_change(a=1) -> Mat:
    """Matrix ``C`` with ``xbar = C x`` for the diagonalizing change of coordinates."""
    a = Fraction(a)
    if a == 0:
        raise ValueError("the coordinate change needs a != 0")
    return Mat.from_rows(
        [
            [1, 0, 0, 0, -1, 2 / a],
            [0, 1, 0, 0, 0, 0],
            [0, 0, 1, -1, 0, 0],
            [0, 0, 0, 1, 0, 0],
            [1, 0, 0, 0, 1, 0],
            [0, 0, 0, 0, 0, 1],
        ]
    )


def to_example_coordinates(p: MPoly, a=1) -> MPoly:
    """Rewrite ``p(xbar)`` in the new coordinates ``x``."""
    return p.linear_substitution(example_coordinate_change(a))


def example_targets(a=1) -> list[MPoly]:
    """Reference closed forms of ``H_1, H_2, H_3`` for parameter ``a`` (``l`` does not appear)."""
    a = Fraction(a)
    x1, x2, x3, x4, x5, _ = (MPoly.var(6, i) for i in range(6))
    h1 = -4 * x3 + 4 * x4
    h2 = (-4 * a * x1**2 + 4 * x3**2 + 8 * x4**2 + 4 * a * x5**2) * Fraction(1, 2)
    h3 = (
        -4 * x3**3
        + 16 * x4**3
        + 6 * a * (x1 - x5) * (x1 + x5) * (x3 - 2 * x4)
        - 6 * a * x2 * (x1 + x5) ** 2
    ) * Fraction(1, 3)
    return [h1, h2, h3]


def compare(computed: MPoly, target: MPoly) -> str:
    if computed == target:
        return "exact"
    if computed == -target:
        return "global-sign"
    return "mismatch"


def reproduce_example(a=1, l=0) -> dict:
    """Run the full pipeline for the n = 2 example and compare with the reference closed forms."""
    a, l = Fraction(a), Fraction(l)
    S = build_symplectic(example_config(a, l))
    computed = [to_example_coordinates(h, a) for h in hamiltonians(S.lsa, 3)]
    targets = example_targets(a)
    outcomes = [compare(c, t) for c, t in zip(computed, targets)]
    return {
        "a": a,
        "l": l,
        "computed": computed,
        "targets": targets,
        "outcomes": outcomes,
        "symplectic": S,
    }
