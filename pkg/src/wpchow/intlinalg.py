"""Integer matrix normal forms and abelian-group cokernels.

Everything here runs over Python's arbitrary-precision integers; matrices
are plain lists of lists in row-major order.  The Smith normal form uses
gcd-based pivoting and always picks a nonzero entry of least absolute
value as the next pivot, which keeps intermediate entries small at the
scales this package needs (matrices stay well under 50x50).

Hermite normal form powers lattice-membership questions (is a vector an
integer combination of the rows?); Smith normal form powers group shapes.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Optional, Sequence

IntMatrix = list[list[int]]

__all__ = [
    "AbelianGroupShape",
    "IntMatrix",
    "cokernel",
    "determinant",
    "hermite_normal_form",
    "identity",
    "invariant_factors",
    "mat_mul",
    "smith_normal_form",
    "solve_integer",
]


def identity(n: int) -> IntMatrix:
    return [[1 if i == j else 0 for j in range(n)] for i in range(n)]


def mat_mul(a: IntMatrix, b: IntMatrix) -> IntMatrix:
    if a and b and len(a[0]) != len(b):
        raise ValueError("inner dimensions do not match")
    cols = len(b[0]) if b else 0
    return [
        [sum(row[k] * b[k][j] for k in range(len(b))) for j in range(cols)]
        for row in a
    ]


def determinant(matrix: IntMatrix) -> int:
    """Exact determinant via fraction-free (Bareiss) elimination."""
    n = len(matrix)
    if any(len(row) != n for row in matrix):
        raise ValueError("determinant requires a square matrix")
    if n == 0:
        return 1
    a = [list(row) for row in matrix]
    sign = 1
    previous = 1
    for k in range(n - 1):
        if a[k][k] == 0:
            for i in range(k + 1, n):
                if a[i][k] != 0:
                    a[k], a[i] = a[i], a[k]
                    sign = -sign
                    break
            else:
                return 0
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                a[i][j] = (a[i][j] * a[k][k] - a[i][k] * a[k][j]) // previous
            a[i][k] = 0
        previous = a[k][k]
    return sign * a[n - 1][n - 1]


def _copy(matrix: Sequence[Sequence[int]]) -> IntMatrix:
    rows = []
    width = None
    for row in matrix:
        row = [int(v) for v in row]
        if width is None:
            width = len(row)
        elif len(row) != width:
            raise ValueError("ragged matrix")
        rows.append(row)
    return rows


def smith_normal_form(matrix: Sequence[Sequence[int]]) -> tuple[IntMatrix, IntMatrix, IntMatrix]:
    """Return unimodular ``(U, D, V)`` with ``U @ M @ V == D``.

    ``D`` is diagonal with non-negative entries satisfying the divisibility
    chain d1 | d2 | ... .
    """
    d = _copy(matrix)
    m = len(d)
    n = len(d[0]) if d else 0
    u = identity(m)
    v = identity(n)

    def swap_rows(i, j):
        d[i], d[j] = d[j], d[i]
        u[i], u[j] = u[j], u[i]

    def swap_cols(i, j):
        for row in d:
            row[i], row[j] = row[j], row[i]
        for row in v:
            row[i], row[j] = row[j], row[i]

    def add_row(src, dst, q):
        # row dst += q * row src
        d[dst] = [a + q * b for a, b in zip(d[dst], d[src])]
        u[dst] = [a + q * b for a, b in zip(u[dst], u[src])]

    def add_col(src, dst, q):
        for row in d:
            row[dst] += q * row[src]
        for row in v:
            row[dst] += q * row[src]

    def move_min_pivot(t):
        """Swap a least-|value| nonzero entry of the trailing block to (t, t)."""
        best = None
        where = None
        for i in range(t, m):
            for j in range(t, n):
                value = abs(d[i][j])
                if value and (best is None or value < best):
                    best, where = value, (i, j)
        if where is None:
            return False
        i, j = where
        if i != t:
            swap_rows(t, i)
        if j != t:
            swap_cols(t, j)
        return True

    def clear_column(t):
        # Zero the entries below (t, t).  Divisible entries are removed by
        # subtracting a multiple of the pivot row (row t untouched); a
        # non-divisible entry triggers a Euclid step that shrinks |pivot|.
        for i in range(t + 1, m):
            while d[i][t] != 0:
                if d[i][t] % d[t][t] == 0:
                    add_row(t, i, -(d[i][t] // d[t][t]))
                else:
                    add_row(i, t, -(d[t][t] // d[i][t]))
                    swap_rows(t, i)

    def clear_row(t):
        for j in range(t + 1, n):
            while d[t][j] != 0:
                if d[t][j] % d[t][t] == 0:
                    add_col(t, j, -(d[t][j] // d[t][t]))
                else:
                    add_col(j, t, -(d[t][t] // d[t][j]))
                    swap_cols(t, j)

    t = 0
    while t < min(m, n):
        if not move_min_pivot(t):
            break
        while True:
            clear_column(t)
            clear_row(t)
            # A Euclid step inside clear_row may have dirtied column t; only
            # finitely many such steps can happen because each one strictly
            # shrinks |pivot|.
            if any(d[i][t] != 0 for i in range(t + 1, m)):
                continue
            # Row and column are clear; enforce that the pivot divides the
            # whole trailing block (fold an offending row into row t).
            pivot = d[t][t]
            offender = None
            for i in range(t + 1, m):
                if any(value % pivot for value in d[i][t + 1 :]):
                    offender = i
                    break
            if offender is None:
                break
            add_row(offender, t, 1)
        t += 1

    for i in range(min(m, n)):
        if d[i][i] < 0:
            d[i] = [-value for value in d[i]]
            u[i] = [-value for value in u[i]]
    return u, d, v


def invariant_factors(matrix: Sequence[Sequence[int]]) -> list[int]:
    """Nonzero diagonal of the Smith form, in divisibility order."""
    _, d, _ = smith_normal_form(matrix)
    size = min(len(d), len(d[0]) if d else 0)
    return [d[i][i] for i in range(size) if d[i][i] != 0]


def hermite_normal_form(matrix: Sequence[Sequence[int]]) -> tuple[IntMatrix, IntMatrix]:
    """Row Hermite normal form: returns ``(H, U)`` with ``H == U @ M``.

    Pivots are positive, entries above each pivot are reduced into
    ``[0, pivot)``, and zero rows sit at the bottom.
    """
    h = _copy(matrix)
    m = len(h)
    u = identity(m)
    n = len(h[0]) if h else 0

    def swap(i, j):
        h[i], h[j] = h[j], h[i]
        u[i], u[j] = u[j], u[i]

    def add(src, dst, q):
        h[dst] = [a + q * b for a, b in zip(h[dst], h[src])]
        u[dst] = [a + q * b for a, b in zip(u[dst], u[src])]

    r = 0
    for c in range(n):
        nonzero = [i for i in range(r, m) if h[i][c] != 0]
        if not nonzero:
            continue
        best = min(nonzero, key=lambda i: abs(h[i][c]))
        if best != r:
            swap(r, best)
        for i in range(r + 1, m):
            while h[i][c] != 0:
                q = h[r][c] // h[i][c]
                add(i, r, -q)
                swap(r, i)
        if h[r][c] < 0:
            h[r] = [-value for value in h[r]]
            u[r] = [-value for value in u[r]]
        for k in range(r):
            q = h[k][c] // h[r][c]
            if q:
                add(r, k, -q)
        r += 1
    return h, u


def solve_integer(matrix: Sequence[Sequence[int]], target: Sequence[int]) -> Optional[list[int]]:
    """Solve ``x @ M == b`` over the integers, or return ``None``.

    ``x`` ranges over integer row vectors of length ``rows(M)``; ``b`` must
    have length ``cols(M)``.  A returned solution is exact; ``None`` means
    ``b`` is not in the row lattice of ``M``.
    """
    rows = _copy(matrix)
    b = [int(value) for value in target]
    m = len(rows)
    n = len(rows[0]) if rows else len(b)
    if any(len(row) != len(b) for row in rows):
        raise ValueError("target length must equal the number of matrix columns")
    if m == 0:
        return [] if not any(b) else None
    h, u = hermite_normal_form(rows)
    pivot_row = {}
    for i in range(m):
        for c in range(n):
            if h[i][c] != 0:
                pivot_row[c] = i
                break
    y = [0] * m
    residue = list(b)
    for c in range(n):
        if residue[c] == 0:
            continue
        i = pivot_row.get(c)
        if i is None or residue[c] % h[i][c] != 0:
            return None
        q = residue[c] // h[i][c]
        y[i] = q
        residue = [value - q * hv for value, hv in zip(residue, h[i])]
    if any(residue):
        return None
    return [sum(y[i] * u[i][j] for i in range(m)) for j in range(m)]


@dataclass(frozen=True)
class AbelianGroupShape:
    """Finitely generated abelian group: free rank plus invariant factors.

    ``torsion`` is the chain d1 | d2 | ... with every factor >= 2; the
    trivial factor 1 is never stored.
    """

    free_rank: int
    torsion: tuple[int, ...] = ()

    def __post_init__(self):
        if self.free_rank < 0:
            raise ValueError("free rank must be non-negative")
        previous = None
        for factor in self.torsion:
            if factor < 2:
                raise ValueError("torsion factors must be >= 2")
            if previous is not None and factor % previous != 0:
                raise ValueError("torsion factors must form a divisibility chain")
            previous = factor

    @classmethod
    def trivial(cls) -> "AbelianGroupShape":
        return cls(0, ())

    @classmethod
    def free(cls, rank: int) -> "AbelianGroupShape":
        return cls(rank, ())

    @classmethod
    def cyclic(cls, order: int) -> "AbelianGroupShape":
        """Z/order, with Z/0 = Z and Z/1 trivial."""
        if order < 0:
            raise ValueError("order must be non-negative")
        if order == 0:
            return cls(1, ())
        if order == 1:
            return cls(0, ())
        return cls(0, (order,))

    @property
    def is_trivial(self) -> bool:
        return self.free_rank == 0 and not self.torsion

    def direct_sum(self, *others: "AbelianGroupShape") -> "AbelianGroupShape":
        groups = (self, *others)
        rank = sum(g.free_rank for g in groups)
        factors = [d for g in groups for d in g.torsion]
        if not factors:
            return AbelianGroupShape(rank, ())
        size = len(factors)
        diagonal = [[factors[i] if i == j else 0 for j in range(size)] for i in range(size)]
        recombined = cokernel(diagonal, size)
        return AbelianGroupShape(rank, recombined.torsion)

    def __str__(self) -> str:
        parts = []
        if self.free_rank == 1:
            parts.append("Z")
        elif self.free_rank > 1:
            parts.append(f"Z^{self.free_rank}")
        parts.extend(f"Z/{d}" for d in self.torsion)
        return " x ".join(parts) if parts else "0"


def cokernel(rows: Iterable[Sequence[int]], ambient_rank: int) -> AbelianGroupShape:
    """Shape of Z^n modulo the lattice spanned by the given rows."""
    if ambient_rank < 0:
        raise ValueError("ambient rank must be non-negative")
    lattice = [list(map(int, row)) for row in rows]
    for row in lattice:
        if len(row) != ambient_rank:
            raise ValueError("every row must have length equal to the ambient rank")
    if not lattice:
        return AbelianGroupShape(ambient_rank, ())
    factors = invariant_factors(lattice)
    free = ambient_rank - len(factors)
    torsion = tuple(d for d in factors if d >= 2)
    return AbelianGroupShape(free, torsion)
