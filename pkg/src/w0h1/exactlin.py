"""Exact linear algebra over the rationals and permutation utilities.

Rationals are :class:`fractions.Fraction` (arbitrary precision, always
reduced, positive denominator).  Matrices are small, dense and immutable.
"""

from __future__ import annotations

from collections.abc import Iterable, Sequence
from fractions import Fraction

Rational = Fraction


class DimensionError(ValueError):
    """Shapes of matrices, vectors or permutations do not fit together."""


def as_rational(x) -> Fraction:
    """Coerce an int, Fraction or ``"p/q"`` string to a Fraction.

    Floats are refused: exact values must never pass through binary floating point.
    """
    if isinstance(x, bool) or isinstance(x, float):
        raise TypeError(f"refusing inexact value {x!r}")
    if isinstance(x, (int, Fraction)):
        return Fraction(x)
    if isinstance(x, str):
        return Fraction(x.strip())
    raise TypeError(f"cannot interpret {x!r} as a rational")


def rational_str(q: Fraction) -> str:
    return str(q.numerator) if q.denominator == 1 else f"{q.numerator}/{q.denominator}"


class QMatrix:
    """Dense immutable matrix with Fraction entries, stored row-major."""

    __slots__ = ("rows", "cols", "_entries")

    def __init__(self, rows: int, cols: int, entries: Iterable = ()):
        entries = tuple(as_rational(x) for x in entries)
        if rows < 0 or cols < 0:
            raise DimensionError("negative matrix dimension")
        if len(entries) != rows * cols:
            raise DimensionError(
                f"{rows}x{cols} matrix needs {rows * cols} entries, got {len(entries)}"
            )
        self.rows = rows
        self.cols = cols
        self._entries = entries

    @classmethod
    def from_rows(cls, rows: Sequence[Sequence], cols: int | None = None) -> QMatrix:
        rows = [list(r) for r in rows]
        if cols is None:
            cols = len(rows[0]) if rows else 0
        for i, r in enumerate(rows):
            if len(r) != cols:
                raise DimensionError(f"row {i} has length {len(r)}, expected {cols}")
        return cls(len(rows), cols, (x for r in rows for x in r))

    @classmethod
    def zeros(cls, rows: int, cols: int) -> QMatrix:
        return cls(rows, cols, [0] * (rows * cols))

    @classmethod
    def identity(cls, n: int) -> QMatrix:
        return cls(n, n, [int(i == j) for i in range(n) for j in range(n)])

    @property
    def shape(self) -> tuple[int, int]:
        return self.rows, self.cols

    @property
    def entries(self) -> tuple[Fraction, ...]:
        return self._entries

    def __getitem__(self, ij: tuple[int, int]) -> Fraction:
        i, j = ij
        if not (0 <= i < self.rows and 0 <= j < self.cols):
            raise IndexError(ij)
        return self._entries[i * self.cols + j]

    def row(self, i: int) -> tuple[Fraction, ...]:
        return self._entries[i * self.cols:(i + 1) * self.cols]

    def to_rows(self) -> list[list[Fraction]]:
        return [list(self.row(i)) for i in range(self.rows)]

    def __eq__(self, other) -> bool:
        if not isinstance(other, QMatrix):
            return NotImplemented
        return self.shape == other.shape and self._entries == other._entries

    def __hash__(self) -> int:
        return hash((self.rows, self.cols, self._entries))

    def __repr__(self) -> str:
        body = ", ".join("[" + ", ".join(rational_str(x) for x in self.row(i)) + "]"
                         for i in range(self.rows))
        return f"QMatrix({self.rows}x{self.cols}: [{body}])"

    def _check_same_shape(self, other: QMatrix) -> None:
        if self.shape != other.shape:
            raise DimensionError(f"shape mismatch {self.shape} vs {other.shape}")

    def __add__(self, other: QMatrix) -> QMatrix:
        self._check_same_shape(other)
        return QMatrix(self.rows, self.cols,
                       (a + b for a, b in zip(self._entries, other._entries)))

    def __sub__(self, other: QMatrix) -> QMatrix:
        self._check_same_shape(other)
        return QMatrix(self.rows, self.cols,
                       (a - b for a, b in zip(self._entries, other._entries)))

    def __neg__(self) -> QMatrix:
        return QMatrix(self.rows, self.cols, (-a for a in self._entries))

    def __matmul__(self, other: QMatrix) -> QMatrix:
        if self.cols != other.rows:
            raise DimensionError(f"cannot multiply {self.shape} by {other.shape}")
        out = []
        ocols = [other.column(j) for j in range(other.cols)]
        for i in range(self.rows):
            r = self.row(i)
            out.extend(sum((a * b for a, b in zip(r, c)), Fraction(0)) for c in ocols)
        return QMatrix(self.rows, other.cols, out)

    def column(self, j: int) -> tuple[Fraction, ...]:
        return self._entries[j::self.cols] if self.cols else ()

    def matvec(self, v: Sequence) -> tuple[Fraction, ...]:
        if len(v) != self.cols:
            raise DimensionError(f"vector of length {len(v)} for {self.shape} matrix")
        v = [as_rational(x) for x in v]
        return tuple(sum((a * b for a, b in zip(self.row(i), v)), Fraction(0))
                     for i in range(self.rows))

    def __pow__(self, k: int) -> QMatrix:
        if self.rows != self.cols:
            raise DimensionError("power of a non-square matrix")
        if k < 0:
            raise ValueError("negative matrix power")
        result, base = QMatrix.identity(self.rows), self
        while k:
            if k & 1:
                result = result @ base
            base = base @ base
            k >>= 1
        return result

    def transpose(self) -> QMatrix:
        return QMatrix(self.cols, self.rows,
                       (self[i, j] for j in range(self.cols) for i in range(self.rows)))

    def trace(self) -> Fraction:
        if self.rows != self.cols:
            raise DimensionError("trace of a non-square matrix")
        return sum((self[i, i] for i in range(self.rows)), Fraction(0))

    def rref(self) -> tuple[QMatrix, list[int]]:
        """Reduced row echelon form and the pivot columns.

        Pivoting takes the first nonzero entry at or below the current row.
        """
        a = self.to_rows()
        pivots: list[int] = []
        r = 0
        for c in range(self.cols):
            if r == self.rows:
                break
            p = next((i for i in range(r, self.rows) if a[i][c] != 0), None)
            if p is None:
                continue
            a[r], a[p] = a[p], a[r]
            inv = 1 / a[r][c]
            a[r] = [x * inv for x in a[r]]
            for i in range(self.rows):
                if i != r and a[i][c] != 0:
                    f = a[i][c]
                    a[i] = [x - f * y for x, y in zip(a[i], a[r])]
            pivots.append(c)
            r += 1
        return QMatrix.from_rows(a, self.cols), pivots

    def rank(self) -> int:
        return len(self.rref()[1])

    def nullity(self) -> int:
        return self.cols - self.rank()


def kernel_basis(m: QMatrix) -> list[tuple[Fraction, ...]]:
    """Canonical basis of ``{v : m v = 0}``.

    One vector per free column of the reduced echelon form, in increasing
    column order; each has a 1 at its free column and 0 at the other free
    columns.
    """
    r, pivots = m.rref()
    pivot_set = set(pivots)
    basis = []
    for f in range(m.cols):
        if f in pivot_set:
            continue
        v = [Fraction(0)] * m.cols
        v[f] = Fraction(1)
        for row, pc in enumerate(pivots):
            v[pc] = -r[row, f]
        basis.append(tuple(v))
    return basis


def fixed_subspace_dim(gens: Sequence[QMatrix], n: int) -> int:
    """Dimension of the subspace of ``Q^n`` fixed by every matrix in ``gens``."""
    if not gens:
        return n
    blocks = []
    ident = QMatrix.identity(n)
    for g in gens:
        if g.shape != (n, n):
            raise DimensionError(f"generator of shape {g.shape}, expected {(n, n)}")
        blocks.extend((g - ident).to_rows())
    return QMatrix.from_rows(blocks, n).nullity()


class Permutation:
    """Bijection of ``{0, ..., n-1}`` given by its image list.

    Composition follows function composition: ``(p * q)(i) == p(q(i))``.
    """

    __slots__ = ("images",)

    def __init__(self, images: Iterable[int]):
        images = tuple(int(i) for i in images)
        if sorted(images) != list(range(len(images))):
            raise ValueError(f"{list(images)} is not a permutation of 0..{len(images) - 1}")
        self.images = images

    @classmethod
    def identity(cls, n: int) -> Permutation:
        return cls(range(n))

    @classmethod
    def from_cycles(cls, n: int, *cycles: Sequence[int]) -> Permutation:
        images = list(range(n))
        for cyc in cycles:
            for a, b in zip(cyc, list(cyc[1:]) + [cyc[0]]):
                images[a] = b
        return cls(images)

    @classmethod
    def shift(cls, n: int, s: int) -> Permutation:
        """Translation ``i -> i + s`` on ``Z/n``."""
        return cls((i + s) % n for i in range(n))

    @property
    def size(self) -> int:
        return len(self.images)

    def __call__(self, i: int) -> int:
        return self.images[i]

    def __mul__(self, other: Permutation) -> Permutation:
        if self.size != other.size:
            raise DimensionError(f"composing permutations of sizes {self.size}, {other.size}")
        return Permutation(self.images[j] for j in other.images)

    def inverse(self) -> Permutation:
        inv = [0] * self.size
        for i, j in enumerate(self.images):
            inv[j] = i
        return Permutation(inv)

    def is_identity(self) -> bool:
        return all(i == j for i, j in enumerate(self.images))

    def __eq__(self, other) -> bool:
        return isinstance(other, Permutation) and self.images == other.images

    def __hash__(self) -> int:
        return hash(self.images)

    def __repr__(self) -> str:
        return f"Permutation({list(self.images)})"


def permutation_matrix(p: Permutation) -> QMatrix:
    """Matrix with ``M[p(i)][i] = 1``, so that ``matrix(p*q) == matrix(p) @ matrix(q)``."""
    n = p.size
    entries = [0] * (n * n)
    for i in range(n):
        entries[p(i) * n + i] = 1
    return QMatrix(n, n, entries)


class UnionFind:
    def __init__(self, items: Iterable = ()):
        self.parent = {}
        for x in items:
            self.add(x)

    def add(self, x) -> None:
        self.parent.setdefault(x, x)

    def find(self, x):
        root = x
        while self.parent[root] != root:
            root = self.parent[root]
        while self.parent[x] != root:
            self.parent[x], x = root, self.parent[x]
        return root

    def union(self, x, y) -> None:
        rx, ry = self.find(x), self.find(y)
        if rx != ry:
            self.parent[ry] = rx

    def count(self) -> int:
        return sum(1 for x, p in self.parent.items() if x == p)

    def classes(self) -> list[list]:
        groups: dict = {}
        for x in self.parent:
            groups.setdefault(self.find(x), []).append(x)
        return list(groups.values())


def orbits(n: int, gens: Sequence[Permutation]) -> list[list[int]]:
    """Orbits of the group generated by ``gens`` on ``{0..n-1}``, sorted by least element."""
    uf = UnionFind(range(n))
    for g in gens:
        if g.size != n:
            raise DimensionError(f"permutation on {g.size} points acting on a set of size {n}")
        for i in range(n):
            uf.union(i, g(i))
    return sorted((sorted(c) for c in uf.classes()), key=lambda c: c[0])


def orbit_count(n: int, gens: Sequence[Permutation]) -> int:
    return len(orbits(n, gens))


def generated_group(gens: Sequence[Permutation], n: int, cap: int | None = None
                    ) -> set[Permutation] | None:
    """All elements of the group generated by ``gens``, by breadth-first closure.

    Returns None once more than ``cap`` elements have been found.
    """
    ident = Permutation.identity(n)
    seen = {ident}
    frontier = [ident]
    while frontier:
        nxt = []
        for h in frontier:
            for g in gens:
                x = g * h
                if x not in seen:
                    seen.add(x)
                    if cap is not None and len(seen) > cap:
                        return None
                    nxt.append(x)
        frontier = nxt
    return seen
