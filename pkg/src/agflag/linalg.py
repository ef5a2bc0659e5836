"""Dense exact matrices and univariate polynomials over F_q.

Entries are stored as integer reprs next to their ``FieldSpec``; elimination
runs on the field's lookup tables so a 70 x 70 reduction over F_16 stays cheap.
"""

from __future__ import annotations

from dataclasses import dataclass

from .errors import SpecMismatch
from .gf import FieldElement, FieldSpec


def _as_int(F: FieldSpec, v) -> int:
    if isinstance(v, FieldElement):
        if v.spec != F:
            raise SpecMismatch(f"{v.spec!r} vs {F!r}")
        return v.value
    return int(v)


class Poly:
    """Polynomial over F_q, constant coefficient first, no trailing zeros."""

    __slots__ = ("spec", "coeffs")

    def __init__(self, spec: FieldSpec, coeffs=()):
        cs = [_as_int(spec, c) for c in coeffs]
        while cs and cs[-1] == 0:
            cs.pop()
        self.spec = spec
        self.coeffs = tuple(cs)

    @classmethod
    def from_roots(cls, spec: FieldSpec, roots) -> Poly:
        p = cls(spec, [1])
        for a in roots:
            p = p * cls(spec, [spec.neg(_as_int(spec, a)), 1])
        return p

    @classmethod
    def monomial(cls, spec: FieldSpec, s: int) -> Poly:
        return cls(spec, [0] * s + [1])

    @property
    def degree(self) -> int:
        """-1 for the zero polynomial."""
        return len(self.coeffs) - 1

    def is_zero(self) -> bool:
        return not self.coeffs

    def __eq__(self, other):
        return isinstance(other, Poly) and self.spec == other.spec and self.coeffs == other.coeffs

    def __hash__(self):
        return hash((self.spec, self.coeffs))

    def __mul__(self, other: Poly) -> Poly:
        if other.spec != self.spec:
            raise SpecMismatch("polynomials over different fields")
        F = self.spec
        if not self.coeffs or not other.coeffs:
            return Poly(F)
        out = [0] * (len(self.coeffs) + len(other.coeffs) - 1)
        for i, a in enumerate(self.coeffs):
            if a:
                for j, b in enumerate(other.coeffs):
                    out[i + j] = F.add(out[i + j], F.mul(a, b))
        return Poly(F, out)

    def __pow__(self, e: int) -> Poly:
        out = Poly(self.spec, [1])
        for _ in range(e):
            out = out * self
        return out

    def __call__(self, alpha) -> int:
        F = self.spec
        x = _as_int(F, alpha)
        acc = 0
        for c in reversed(self.coeffs):
            acc = F.add(F.mul(acc, x), c)
        return acc

    def divide_linear(self, alpha: int) -> tuple[Poly, int]:
        """Synthetic division by (x - alpha): returns (quotient, remainder)."""
        F = self.spec
        if not self.coeffs:
            return Poly(F), 0
        n = len(self.coeffs) - 1
        quot = [0] * n
        acc = 0
        for i in range(n, 0, -1):
            acc = F.add(F.mul(acc, alpha), self.coeffs[i])
            quot[i - 1] = acc
        rem = F.add(F.mul(acc, alpha), self.coeffs[0])
        return Poly(F, quot), rem

    def order_at(self, alpha: int) -> int:
        """Multiplicity of alpha as a root (zero polynomial is not allowed)."""
        if not self.coeffs:
            raise ValueError("order of the zero polynomial is infinite")
        k, h = 0, self
        while True:
            quot, rem = h.divide_linear(alpha)
            if rem:
                return k
            k, h = k + 1, quot

    def strip_root(self, alpha: int, k: int) -> Poly:
        h = self
        for _ in range(k):
            h, rem = h.divide_linear(alpha)
            assert rem == 0
        return h

    def __repr__(self):
        return f"Poly({list(self.coeffs)})"


def poly_eval(h: Poly, alpha: FieldElement) -> FieldElement:
    if alpha.spec != h.spec:
        raise SpecMismatch(f"{alpha.spec!r} vs {h.spec!r}")
    return FieldElement(h.spec, h(alpha.value))


@dataclass(frozen=True)
class Matrix:
    spec: FieldSpec
    rows: int
    cols: int
    data: tuple  # tuple of row tuples of integer reprs

    @classmethod
    def from_rows(cls, spec: FieldSpec, rows, cols: int | None = None) -> Matrix:
        data = tuple(tuple(_as_int(spec, v) for v in r) for r in rows)
        if cols is None:
            cols = len(data[0]) if data else 0
        if any(len(r) != cols for r in data):
            raise ValueError("ragged matrix")
        return cls(spec, len(data), cols, data)

    @classmethod
    def zeros(cls, spec: FieldSpec, rows: int, cols: int) -> Matrix:
        return cls(spec, rows, cols, tuple((0,) * cols for _ in range(rows)))

    @classmethod
    def identity(cls, spec: FieldSpec, n: int) -> Matrix:
        return cls(spec, n, n, tuple(tuple(int(i == j) for j in range(n)) for i in range(n)))

    def entry(self, i: int, j: int) -> FieldElement:
        return FieldElement(self.spec, self.data[i][j])

    def tolist(self) -> list[list[int]]:
        return [list(r) for r in self.data]

    def transpose(self) -> Matrix:
        return Matrix(self.spec, self.cols, self.rows, tuple(zip(*self.data)) if self.rows else ())

    def __matmul__(self, other: Matrix) -> Matrix:
        if other.spec != self.spec:
            raise SpecMismatch("matrices over different fields")
        if self.cols != other.rows:
            raise ValueError(f"shape mismatch {self.rows}x{self.cols} @ {other.rows}x{other.cols}")
        F = self.spec
        cols_b = list(zip(*other.data)) if other.rows else [()] * other.cols
        out = []
        for r in self.data:
            row = []
            for c in cols_b:
                acc = 0
                for a, b in zip(r, c):
                    if a and b:
                        acc = F.add(acc, F.mul(a, b))
                row.append(acc)
            out.append(tuple(row))
        return Matrix(F, self.rows, other.cols, tuple(out))

    def is_zero(self) -> bool:
        return all(v == 0 for r in self.data for v in r)

    def scale_columns(self, x) -> Matrix:
        F = self.spec
        xs = [_as_int(F, v) for v in x]
        return Matrix(F, self.rows, self.cols, tuple(tuple(F.mul(a, s) for a, s in zip(r, xs)) for r in self.data))

    def stack(self, other: Matrix) -> Matrix:
        if other.cols != self.cols:
            raise ValueError("column mismatch")
        return Matrix(self.spec, self.rows + other.rows, self.cols, self.data + other.data)


def _row_combiner(F: FieldSpec):
    """Return f(row, prow, c) computing row - c * prow on integer lists."""
    mt, at = F.mul_table, F.add_table
    if mt is not None and F.p == 2:
        def comb(row, prow, c):
            mrow = mt[c]
            return [a ^ mrow[b] for a, b in zip(row, prow)]
    elif mt is not None:
        def comb(row, prow, c):
            mrow = mt[F.neg(c)]
            return [at[a][mrow[b]] for a, b in zip(row, prow)]
    else:
        def comb(row, prow, c):
            nc = F.neg(c)
            return [F.add(a, F.mul(nc, b)) for a, b in zip(row, prow)]
    return comb


def _scale_row(F: FieldSpec, row, c):
    if F.mul_table is not None:
        mrow = F.mul_table[c]
        return [mrow[b] for b in row]
    return [F.mul(c, b) for b in row]


def rref_rows(F: FieldSpec, rows, ncols: int) -> tuple[list[list[int]], list[int]]:
    """Reduced row-echelon form of integer rows; returns (nonzero rows, pivots)."""
    work = [list(r) for r in rows]
    comb = _row_combiner(F)
    pivots: list[int] = []
    r = 0
    for col in range(ncols):
        piv = next((i for i in range(r, len(work)) if work[i][col]), None)
        if piv is None:
            continue
        work[r], work[piv] = work[piv], work[r]
        prow = _scale_row(F, work[r], F.inv(work[r][col]))
        work[r] = prow
        for i in range(len(work)):
            if i != r and work[i][col]:
                work[i] = comb(work[i], prow, work[i][col])
        pivots.append(col)
        r += 1
        if r == len(work):
            break
    return work[:r], pivots


def rref(M: Matrix) -> tuple[Matrix, int, list[int]]:
    """Reduced row-echelon form with the input's shape (zero rows kept at the bottom)."""
    red, pivots = rref_rows(M.spec, M.data, M.cols)
    rank = len(red)
    data = tuple(tuple(r) for r in red) + tuple((0,) * M.cols for _ in range(M.rows - rank))
    return Matrix(M.spec, M.rows, M.cols, data), rank, pivots


def rank(M: Matrix) -> int:
    return len(rref_rows(M.spec, M.data, M.cols)[0])


def row_space(M: Matrix) -> Matrix:
    """Canonical basis of the row space: the nonzero rows of the rref."""
    red, _ = rref_rows(M.spec, M.data, M.cols)
    return Matrix(M.spec, len(red), M.cols, tuple(tuple(r) for r in red))


def nullspace_rows(F: FieldSpec, red: list[list[int]], pivots: list[int], ncols: int) -> list[list[int]]:
    pivset = set(pivots)
    basis = []
    for free in range(ncols):
        if free in pivset:
            continue
        v = [0] * ncols
        v[free] = 1
        for row, pc in zip(red, pivots):
            if row[free]:
                v[pc] = F.neg(row[free])
        basis.append(v)
    return basis


def nullspace(M: Matrix) -> Matrix:
    """Basis of {v : M v^T = 0}, one row per free column in increasing order."""
    red, pivots = rref_rows(M.spec, M.data, M.cols)
    basis = nullspace_rows(M.spec, red, pivots, M.cols)
    return Matrix(M.spec, len(basis), M.cols, tuple(tuple(v) for v in basis))


def same_row_space(A: Matrix, B: Matrix) -> bool:
    return row_space(A).data == row_space(B).data


class EchelonBasis:
    """Incrementally maintained reduced basis; ``add`` reports whether a vector was new."""

    def __init__(self, spec: FieldSpec, ncols: int):
        self.spec = spec
        self.ncols = ncols
        self.rows: list[list[int]] = []
        self.pivots: list[int] = []
        self._comb = _row_combiner(spec)

    def reduce(self, v) -> list[int]:
        v = list(v)
        for row, pc in zip(self.rows, self.pivots):
            if v[pc]:
                v = self._comb(v, row, v[pc])
        return v

    def add(self, v) -> bool:
        F = self.spec
        v = self.reduce(v)
        pc = next((i for i, a in enumerate(v) if a), None)
        if pc is None:
            return False
        v = _scale_row(F, v, F.inv(v[pc]))
        for i, row in enumerate(self.rows):
            if row[pc]:
                self.rows[i] = self._comb(row, v, row[pc])
        self.rows.append(v)
        self.pivots.append(pc)
        return True

    def __len__(self):
        return len(self.rows)

    def sorted_rows(self) -> tuple[list[list[int]], list[int]]:
        order = sorted(range(len(self.pivots)), key=self.pivots.__getitem__)
        return [self.rows[i] for i in order], [self.pivots[i] for i in order]
