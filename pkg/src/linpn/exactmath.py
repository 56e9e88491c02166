"""Exact scalars, dense rational matrices and sparse multivariate polynomials.

Every quantity in the package is a :class:`fractions.Fraction`; nothing here
ever touches a float.  Matrices are small and dense, polynomials are sparse
maps from exponent tuples to coefficients.
"""

from __future__ import annotations

import re
from fractions import Fraction
from typing import Iterable, Mapping, Sequence

from .errors import DegenerateError, DimensionError

Rational = Fraction

_RATIONAL_RE = re.compile(r"^\s*([+-]?\d+)(?:\s*/\s*(\d+))?\s*$")


def parse_rational(value) -> Fraction:
    """Parse ``"p/q"``, ``"p"`` or an ``int`` into a Fraction.

    Floats are refused: they cannot be read back exactly.
    """
    if isinstance(value, Fraction):
        return value
    if isinstance(value, bool):
        raise ValueError(f"not a rational: {value!r}")
    if isinstance(value, int):
        return Fraction(value)
    if isinstance(value, str):
        m = _RATIONAL_RE.match(value)
        if m is None:
            raise ValueError(f"not a rational: {value!r}")
        num = int(m.group(1))
        den = int(m.group(2)) if m.group(2) is not None else 1
        if den == 0:
            raise ValueError(f"zero denominator: {value!r}")
        return Fraction(num, den)
    raise ValueError(f"not a rational: {value!r}")


def format_rational(q) -> str:
    """``"p/q"``, or ``"p"`` when the denominator is one."""
    return str(Fraction(q))


def as_vector(x: Iterable, n: int | None = None) -> tuple[Fraction, ...]:
    v = tuple(Fraction(c) for c in x)
    if n is not None and len(v) != n:
        raise DimensionError(f"expected vector of length {n}, got {len(v)}")
    return v


def basis_vector(n: int, i: int) -> tuple[Fraction, ...]:
    return tuple(Fraction(1) if k == i else Fraction(0) for k in range(n))


# --------------------------------------------------------------------------
# matrices
# --------------------------------------------------------------------------


class Mat:
    """Immutable dense matrix with Fraction entries stored row-major."""

    __slots__ = ("rows", "cols", "entries")

    def __init__(self, rows: int, cols: int, entries: Iterable):
        entries = tuple(Fraction(e) for e in entries)
        if len(entries) != rows * cols:
            raise DimensionError(
                f"{rows}x{cols} matrix needs {rows * cols} entries, got {len(entries)}"
            )
        object.__setattr__(self, "rows", rows)
        object.__setattr__(self, "cols", cols)
        object.__setattr__(self, "entries", entries)

    def __setattr__(self, name, value):
        raise AttributeError("Mat is immutable")

    @classmethod
    def from_rows(cls, rows: Sequence[Sequence]) -> "Mat":
        rows = [list(r) for r in rows]
        ncols = len(rows[0]) if rows else 0
        if any(len(r) != ncols for r in rows):
            raise DimensionError("ragged matrix rows")
        return cls(len(rows), ncols, (e for r in rows for e in r))

    @classmethod
    def from_func(cls, rows: int, cols: int, f) -> "Mat":
        return cls(rows, cols, (f(i, j) for i in range(rows) for j in range(cols)))

    @classmethod
    def identity(cls, n: int) -> "Mat":
        return cls.from_func(n, n, lambda i, j: 1 if i == j else 0)

    @classmethod
    def zeros(cls, rows: int, cols: int | None = None) -> "Mat":
        cols = rows if cols is None else cols
        return cls(rows, cols, [0] * (rows * cols))

    @classmethod
    def from_columns(cls, columns: Sequence[Sequence]) -> "Mat":
        return cls.from_rows(list(zip(*columns))) if columns else cls(0, 0, [])

    @property
    def shape(self) -> tuple[int, int]:
        return (self.rows, self.cols)

    @property
    def is_square(self) -> bool:
        return self.rows == self.cols

    def __getitem__(self, ij: tuple[int, int]) -> Fraction:
        i, j = ij
        if not (0 <= i < self.rows and 0 <= j < self.cols):
            raise IndexError(ij)
        return self.entries[i * self.cols + j]

    def row(self, i: int) -> tuple[Fraction, ...]:
        return self.entries[i * self.cols : (i + 1) * self.cols]

    def col(self, j: int) -> tuple[Fraction, ...]:
        return self.entries[j :: self.cols]

    def tolist(self) -> list[list[Fraction]]:
        return [list(self.row(i)) for i in range(self.rows)]

    def transpose(self) -> "Mat":
        return Mat.from_func(self.cols, self.rows, lambda i, j: self[j, i])

    T = property(transpose)

    def trace(self) -> Fraction:
        if not self.is_square:
            raise DimensionError("trace of a non-square matrix")
        return sum((self[i, i] for i in range(self.rows)), Fraction(0))

    def is_zero(self) -> bool:
        return not any(self.entries)

    def max_abs(self) -> Fraction:
        return max((abs(e) for e in self.entries), default=Fraction(0))

    def _check_same_shape(self, other: "Mat") -> None:
        if self.shape != other.shape:
            raise DimensionError(f"shape mismatch {self.shape} vs {other.shape}")

    def __add__(self, other: "Mat") -> "Mat":
        self._check_same_shape(other)
        return Mat(self.rows, self.cols, (a + b for a, b in zip(self.entries, other.entries)))

    def __sub__(self, other: "Mat") -> "Mat":
        self._check_same_shape(other)
        return Mat(self.rows, self.cols, (a - b for a, b in zip(self.entries, other.entries)))

    def __neg__(self) -> "Mat":
        return Mat(self.rows, self.cols, (-a for a in self.entries))

    def __mul__(self, scalar) -> "Mat":
        if isinstance(scalar, Mat):
            return NotImplemented
        s = Fraction(scalar)
        return Mat(self.rows, self.cols, (s * a for a in self.entries))

    __rmul__ = __mul__

    def __matmul__(self, other):
        if isinstance(other, Mat):
            return mat_mul(self, other)
        return mat_vec(self, other)

    def __eq__(self, other) -> bool:
        if not isinstance(other, Mat):
            return NotImplemented
        return self.shape == other.shape and self.entries == other.entries

    def __hash__(self) -> int:
        return hash((self.rows, self.cols, self.entries))

    def __repr__(self) -> str:
        body = ", ".join(
            "[" + ", ".join(format_rational(e) for e in self.row(i)) + "]"
            for i in range(self.rows)
        )
        return f"Mat([{body}])"


def mat_mul(a: Mat, b: Mat) -> Mat:
    if a.cols != b.rows:
        raise DimensionError(f"cannot multiply {a.shape} by {b.shape}")
    bcols = [b.col(j) for j in range(b.cols)]
    out = []
    for i in range(a.rows):
        r = a.row(i)
        for c in bcols:
            out.append(sum((x * y for x, y in zip(r, c) if x and y), Fraction(0)))
    return Mat(a.rows, b.cols, out)


def mat_vec(a: Mat, v: Sequence) -> tuple[Fraction, ...]:
    v = as_vector(v, a.cols)
    return tuple(
        sum((x * y for x, y in zip(a.row(i), v) if x and y), Fraction(0))
        for i in range(a.rows)
    )


def _echelon(rows: list[list[Fraction]], ncols: int) -> tuple[list[list[Fraction]], list[int], int]:
    """Forward elimination in place; returns (rows, pivot columns, row swaps)."""
    pivots = []
    swaps = 0
    r = 0
    for c in range(ncols):
        p = next((i for i in range(r, len(rows)) if rows[i][c] != 0), None)
        if p is None:
            continue
        if p != r:
            rows[r], rows[p] = rows[p], rows[r]
            swaps += 1
        piv = rows[r][c]
        for i in range(r + 1, len(rows)):
            f = rows[i][c]
            if f:
                f = f / piv
                ri, rr = rows[i], rows[r]
                for k in range(c, len(ri)):
                    if rr[k]:
                        ri[k] -= f * rr[k]
        pivots.append(c)
        r += 1
        if r == len(rows):
            break
    return rows, pivots, swaps


def mat_rank(a: Mat) -> int:
    _, pivots, _ = _echelon(a.tolist(), a.cols)
    return len(pivots)


def mat_det(a: Mat) -> Fraction:
    if not a.is_square:
        raise DimensionError("determinant of a non-square matrix")
    rows, pivots, swaps = _echelon(a.tolist(), a.cols)
    if len(pivots) < a.rows:
        return Fraction(0)
    d = Fraction(-1 if swaps % 2 else 1)
    for i in range(a.rows):
        d *= rows[i][i]
    return d


def mat_inverse(a: Mat) -> Mat:
    """Exact inverse by Gauss-Jordan elimination on ``[a | I]``.

    Raises
    ------
    DegenerateError
        If ``a`` is singular.  For a symplectic form this means the
        2-cocycle is degenerate.
    """
    if not a.is_square:
        raise DimensionError(f"inverse of non-square {a.shape} matrix")
    n = a.rows
    aug = [list(a.row(i)) + [Fraction(int(i == j)) for j in range(n)] for i in range(n)]
    aug, pivots, _ = _echelon(aug, n)
    if len(pivots) < n:
        raise DegenerateError(f"matrix is singular (rank {len(pivots)} < {n})")
    for r in range(n - 1, -1, -1):
        piv = aug[r][r]
        aug[r] = [x / piv for x in aug[r]]
        for i in range(r):
            f = aug[i][r]
            if f:
                aug[i] = [x - f * y for x, y in zip(aug[i], aug[r])]
    return Mat(n, n, (x for row in aug for x in row[n:]))


def mat_power(a: Mat, k: int) -> Mat:
    out = Mat.identity(a.rows)
    for _ in range(k):
        out = mat_mul(out, a)
    return out


# --------------------------------------------------------------------------
# polynomials
# --------------------------------------------------------------------------


def _grlex_key(exps: tuple[int, ...]):
    # descending graded-lex when sorted ascending on this key
    return (-sum(exps), tuple(-e for e in exps))


class MPoly:
    """Sparse polynomial in ``x1..xn`` with Fraction coefficients.

    ``terms`` maps exponent tuples to nonzero coefficients.  Instances are
    treated as immutable; every operation returns a new polynomial.

    >>> x = MPoly.var(2, 0); y = MPoly.var(2, 1)
    >>> str((x + y) ** 2)
    'x1^2 + 2*x1*x2 + x2^2'
    """

    __slots__ = ("nvars", "_terms", "_hash")

    def __init__(self, nvars: int, terms: Mapping[Sequence[int], object] | None = None):
        self.nvars = nvars
        clean: dict[tuple[int, ...], Fraction] = {}
        for exps, c in (terms or {}).items():
            exps = tuple(int(e) for e in exps)
            if len(exps) != nvars or any(e < 0 for e in exps):
                raise DimensionError(f"bad exponent vector {exps} for {nvars} variables")
            c = Fraction(c)
            if c:
                clean[exps] = clean.get(exps, Fraction(0)) + c
                if not clean[exps]:
                    del clean[exps]
        self._terms = clean
        self._hash = None

    @classmethod
    def _raw(cls, nvars: int, terms: dict) -> "MPoly":
        p = cls.__new__(cls)
        p.nvars = nvars
        p._terms = terms
        p._hash = None
        return p

    @classmethod
    def zero(cls, nvars: int) -> "MPoly":
        return cls._raw(nvars, {})

    @classmethod
    def const(cls, nvars: int, c) -> "MPoly":
        c = Fraction(c)
        return cls._raw(nvars, {(0,) * nvars: c} if c else {})

    @classmethod
    def var(cls, nvars: int, i: int) -> "MPoly":
        if not 0 <= i < nvars:
            raise DimensionError(f"variable index {i} out of range for {nvars} variables")
        return cls._raw(nvars, {tuple(int(k == i) for k in range(nvars)): Fraction(1)})

    @classmethod
    def linear(cls, coeffs: Sequence, constant=0) -> "MPoly":
        """``constant + sum_l coeffs[l] * x_l``."""
        n = len(coeffs)
        terms = {tuple(int(k == l) for k in range(n)): c for l, c in enumerate(coeffs)}
        terms[(0,) * n] = constant
        return cls(n, terms)

    # -- access ------------------------------------------------------------

    @property
    def terms(self) -> dict[tuple[int, ...], Fraction]:
        return dict(self._terms)

    def items(self) -> list[tuple[tuple[int, ...], Fraction]]:
        """Terms in canonical (descending graded-lex) order."""
        return sorted(self._terms.items(), key=lambda t: _grlex_key(t[0]))

    def coeff(self, exps: Sequence[int]) -> Fraction:
        return self._terms.get(tuple(exps), Fraction(0))

    def is_zero(self) -> bool:
        return not self._terms

    def __bool__(self) -> bool:
        return bool(self._terms)

    def __len__(self) -> int:
        return len(self._terms)

    def degree(self) -> int:
        """Total degree; ``-1`` for the zero polynomial."""
        return max((sum(e) for e in self._terms), default=-1)

    def is_homogeneous(self, d: int | None = None) -> bool:
        degs = {sum(e) for e in self._terms}
        if not degs:
            return True
        return len(degs) == 1 and (d is None or degs == {d})

    def max_abs_coeff(self) -> Fraction:
        return max((abs(c) for c in self._terms.values()), default=Fraction(0))

    # -- arithmetic --------------------------------------------------------

    def _coerce(self, other) -> "MPoly":
        if isinstance(other, MPoly):
            if other.nvars != self.nvars:
                raise DimensionError(f"nvars mismatch: {self.nvars} vs {other.nvars}")
            return other
        try:
            return MPoly.const(self.nvars, other)
        except (TypeError, ValueError):
            return NotImplemented

    def __add__(self, other) -> "MPoly":
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        out = dict(self._terms)
        for e, c in other._terms.items():
            s = out.get(e, 0) + c
            if s:
                out[e] = s
            else:
                out.pop(e, None)
        return MPoly._raw(self.nvars, out)

    __radd__ = __add__

    def __neg__(self) -> "MPoly":
        return MPoly._raw(self.nvars, {e: -c for e, c in self._terms.items()})

    def __sub__(self, other) -> "MPoly":
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return self + (-other)

    def __rsub__(self, other) -> "MPoly":
        return (-self) + other

    def __mul__(self, other) -> "MPoly":
        if not isinstance(other, MPoly):
            try:
                s = Fraction(other)
            except (TypeError, ValueError):
                return NotImplemented
            if not s:
                return MPoly.zero(self.nvars)
            return MPoly._raw(self.nvars, {e: s * c for e, c in self._terms.items()})
        other = self._coerce(other)
        out: dict[tuple[int, ...], Fraction] = {}
        for e1, c1 in self._terms.items():
            for e2, c2 in other._terms.items():
                e = tuple(a + b for a, b in zip(e1, e2))
                out[e] = out.get(e, 0) + c1 * c2
        return MPoly._raw(self.nvars, {e: c for e, c in out.items() if c})

    __rmul__ = __mul__

    def __truediv__(self, scalar) -> "MPoly":
        return self * (1 / Fraction(scalar))

    def __pow__(self, k: int) -> "MPoly":
        if not isinstance(k, int) or k < 0:
            raise ValueError("exponent must be a non-negative integer")
        out = MPoly.const(self.nvars, 1)
        base = self
        while k:
            if k & 1:
                out = out * base
            k >>= 1
            if k:
                base = base * base
        return out

    def __eq__(self, other) -> bool:
        if isinstance(other, MPoly):
            return self.nvars == other.nvars and self._terms == other._terms
        try:
            return self._terms == MPoly.const(self.nvars, other)._terms
        except (TypeError, ValueError):
            return NotImplemented

    def __hash__(self) -> int:
        if self._hash is None:
            self._hash = hash((self.nvars, frozenset(self._terms.items())))
        return self._hash

    # -- calculus and evaluation ------------------------------------------

    def partial(self, i: int) -> "MPoly":
        if not 0 <= i < self.nvars:
            raise DimensionError(f"variable index {i} out of range for {self.nvars} variables")
        out = {}
        for e, c in self._terms.items():
            if e[i]:
                d = list(e)
                d[i] -= 1
                out[tuple(d)] = c * e[i]
        return MPoly._raw(self.nvars, out)

    def gradient(self) -> list["MPoly"]:
        return [self.partial(i) for i in range(self.nvars)]

    def __call__(self, point: Sequence) -> Fraction:
        return poly_eval(self, point)

    def compose(self, substitutions: Sequence["MPoly"]) -> "MPoly":
        """Substitute ``x_i -> substitutions[i]`` simultaneously."""
        if len(substitutions) != self.nvars:
            raise DimensionError("need one substitution per variable")
        m = substitutions[0].nvars if substitutions else 0
        powers: list[dict[int, MPoly]] = [{0: MPoly.const(m, 1)} for _ in substitutions]

        def pw(i: int, k: int) -> MPoly:
            cache = powers[i]
            if k not in cache:
                cache[k] = pw(i, k - 1) * substitutions[i]
            return cache[k]

        out = MPoly.zero(m)
        for e, c in self._terms.items():
            t = MPoly.const(m, c)
            for i, k in enumerate(e):
                if k:
                    t = t * pw(i, k)
            out = out + t
        return out

    def linear_substitution(self, matrix: Mat) -> "MPoly":
        """``p(x) -> p(matrix @ x)`` for a square matrix of matching size."""
        if matrix.cols != self.nvars or matrix.rows != self.nvars:
            raise DimensionError("substitution matrix must be nvars x nvars")
        subs = [MPoly.linear(matrix.row(i)) for i in range(matrix.rows)]
        return self.compose(subs)

    # -- serialization -----------------------------------------------------

    def to_json(self) -> list[dict]:
        return [{"coeff": format_rational(c), "exps": list(e)} for e, c in self.items()]

    @classmethod
    def from_json(cls, data: Sequence[Mapping], nvars: int | None = None) -> "MPoly":
        terms: dict[tuple[int, ...], Fraction] = {}
        for t in data:
            e = tuple(t["exps"])
            if e in terms:
                raise ValueError(f"duplicate exponent vector {list(e)}")
            terms[e] = parse_rational(t["coeff"])
        if nvars is None:
            if not terms:
                raise ValueError("cannot infer nvars of an empty polynomial")
            nvars = len(next(iter(terms)))
        return cls(nvars, terms)

    def __str__(self) -> str:
        if not self._terms:
            return "0"
        parts = []
        for e, c in self.items():
            mono = "*".join(
                f"x{i + 1}" + (f"^{k}" if k > 1 else "") for i, k in enumerate(e) if k
            )
            mag = abs(c)
            if not mono:
                body = format_rational(mag)
            elif mag == 1:
                body = mono
            else:
                body = f"{format_rational(mag)}*{mono}"
            sign = "-" if c < 0 else "+"
            parts.append((sign, body))
        s0, b0 = parts[0]
        head = ("-" if s0 == "-" else "") + b0
        return head + "".join(f" {s} {b}" for s, b in parts[1:])

    def __repr__(self) -> str:
        return f"MPoly({self.nvars}, {str(self)!r})"


def poly_add(f: MPoly, g: MPoly) -> MPoly:
    return f + g


def poly_scale(f: MPoly, c) -> MPoly:
    return f * Fraction(c)


def poly_mul(f: MPoly, g: MPoly) -> MPoly:
    if not isinstance(g, MPoly):
        raise TypeError("poly_mul expects two polynomials; use poly_scale for scalars")
    return f * g


def poly_partial(f: MPoly, i: int) -> MPoly:
    return f.partial(i)


def poly_eval(f: MPoly, point: Sequence) -> Fraction:
    p = as_vector(point)
    if len(p) != f.nvars:
        raise DimensionError(f"point of length {len(p)} for {f.nvars} variables")
    total = Fraction(0)
    for e, c in f._terms.items():
        t = c
        for x, k in zip(p, e):
            if k:
                t *= x**k
        total += t
    return total


# --------------------------------------------------------------------------
# matrices of polynomials
# --------------------------------------------------------------------------

PolyMatrix = list  # list[list[MPoly]], square


def polymat_mul(a: PolyMatrix, b: PolyMatrix) -> PolyMatrix:
    n, m, k = len(a), len(b), len(b[0]) if b else 0
    if a and len(a[0]) != m:
        raise DimensionError("polynomial matrix shapes do not match")
    nv = a[0][0].nvars
    out = []
    for i in range(n):
        row = []
        for j in range(k):
            s = MPoly.zero(nv)
            for l in range(m):
                if a[i][l] and b[l][j]:
                    s = s + a[i][l] * b[l][j]
            row.append(s)
        out.append(row)
    return out


def polymat_trace(a: PolyMatrix) -> MPoly:
    s = MPoly.zero(a[0][0].nvars)
    for i in range(len(a)):
        s = s + a[i][i]
    return s


def polymat_eval(a: PolyMatrix, point: Sequence) -> Mat:
    return Mat.from_rows([[poly_eval(e, point) for e in row] for row in a])
