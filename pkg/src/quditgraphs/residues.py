"""Exact arithmetic and linear algebra over Z_d and over GF(q) for prime q.

Everything here works on plain Python integers, so results are exact for any
modulus. Systems A·x = b (mod d) are solved two ways:

* prime modulus: Gaussian elimination over the field (``PrimeSolver``),
* any modulus: Smith normal form of the integer lift of A with explicit
  unimodular transforms (``SmithSolver``), which also yields the exact
  solution count.

Both solvers factor the matrix once and can then answer many right-hand
sides, which is what the census machinery leans on.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from itertools import product
from typing import Iterable, Sequence


class NonPrimeModulus(ValueError):
    """A field-only routine was called with a composite modulus."""


def factorize(n: int) -> tuple[tuple[int, int], ...]:
    """Prime factorization of n >= 2 by trial division, as (prime, exponent) pairs."""
    if n < 2:
        raise ValueError(f"cannot factorize {n}")
    factors = []
    p = 2
    while p * p <= n:
        if n % p == 0:
            e = 0
            while n % p == 0:
                n //= p
                e += 1
            factors.append((p, e))
        p += 1 if p == 2 else 2
    if n > 1:
        factors.append((n, 1))
    return tuple(factors)


@dataclass(frozen=True)
class Modulus:
    """A ring modulus d >= 2 with its factorization computed up front."""

    d: int
    factorization: tuple[tuple[int, int], ...] = field(init=False, compare=False)

    def __post_init__(self) -> None:
        if self.d < 2:
            raise ValueError(f"modulus must be >= 2, got {self.d}")
        object.__setattr__(self, "factorization", factorize(self.d))

    @property
    def is_prime(self) -> bool:
        (_, e), *rest = self.factorization
        return not rest and e == 1


@dataclass(frozen=True)
class Residue:
    """An element of Z_d. Arithmetic is only defined between equal moduli."""

    value: int
    modulus: Modulus

    def __post_init__(self) -> None:
        if not 0 <= self.value < self.modulus.d:
            raise ValueError(f"value {self.value} not reduced mod {self.modulus.d}")

    def _coerce(self, other: "Residue") -> int:
        if self.modulus.d != other.modulus.d:
            raise ValueError("mixed moduli")
        return other.value

    def __add__(self, other: "Residue") -> "Residue":
        return Residue((self.value + self._coerce(other)) % self.modulus.d, self.modulus)

    def __sub__(self, other: "Residue") -> "Residue":
        return Residue((self.value - self._coerce(other)) % self.modulus.d, self.modulus)

    def __mul__(self, other: "Residue") -> "Residue":
        return Residue((self.value * self._coerce(other)) % self.modulus.d, self.modulus)

    def __neg__(self) -> "Residue":
        return Residue(-self.value % self.modulus.d, self.modulus)

    def __pow__(self, exponent: int) -> "Residue":
        return Residue(pow(self.value, exponent, self.modulus.d), self.modulus)


def mod_inverse(a: Residue) -> Residue | None:
    """Multiplicative inverse of a in Z_d, or None when gcd(a, d) > 1."""
    try:
        return Residue(pow(a.value, -1, a.modulus.d), a.modulus)
    except ValueError:
        return None


@dataclass(frozen=True)
class RingMatrix:
    """Dense matrix over Z_d, entries stored row-major and reduced mod d."""

    rows: int
    cols: int
    entries: tuple[int, ...]
    modulus: Modulus

    def __post_init__(self) -> None:
        if self.rows < 0 or self.cols < 0:
            raise ValueError("negative dimensions")
        if len(self.entries) != self.rows * self.cols:
            raise ValueError("entry count does not match dimensions")
        d = self.modulus.d
        if any(not 0 <= x < d for x in self.entries):
            raise ValueError("entries not reduced mod d")

    @classmethod
    def from_rows(cls, rows: Sequence[Sequence[int]], d: int) -> "RingMatrix":
        modulus = Modulus(d)
        nrows = len(rows)
        ncols = len(rows[0]) if nrows else 0
        flat = tuple(x % d for row in rows for x in row)
        return cls(nrows, ncols, flat, modulus)

    @classmethod
    def identity(cls, n: int, d: int) -> "RingMatrix":
        return cls.from_rows([[1 if i == j else 0 for j in range(n)] for i in range(n)], d)

    def __getitem__(self, ij: tuple[int, int]) -> int:
        i, j = ij
        return self.entries[i * self.cols + j]

    def row(self, i: int) -> tuple[int, ...]:
        return self.entries[i * self.cols : (i + 1) * self.cols]

    def row_lists(self) -> list[list[int]]:
        return [list(self.row(i)) for i in range(self.rows)]

    def mul_vector(self, x: Sequence[int]) -> tuple[int, ...]:
        if len(x) != self.cols:
            raise ValueError("vector length mismatch")
        d = self.modulus.d
        return tuple(
            sum(a * v for a, v in zip(self.row(i), x)) % d for i in range(self.rows)
        )

    def kron(self, other: "RingMatrix") -> "RingMatrix":
        """Kronecker product, reduced mod d."""
        if self.modulus.d != other.modulus.d:
            raise ValueError("mixed moduli")
        d = self.modulus.d
        rows = []
        for i in range(self.rows):
            for k in range(other.rows):
                rows.append(
                    [
                        self[i, j] * other[k, l] % d
                        for j in range(self.cols)
                        for l in range(other.cols)
                    ]
                )
        return RingMatrix.from_rows(rows, d) if rows else RingMatrix(0, 0, (), self.modulus)


@dataclass(frozen=True)
class SolutionSet:
    """All solutions of one linear system over Z_d.

    ``generators`` describes the solution affine sublattice: each entry is a
    (direction, order) pair, and the full set is
    ``particular + sum_j c_j * direction_j (mod d)`` for c_j in range(order_j).
    The directions are independent mod d, so ``count`` equals the product of
    the orders.
    """

    modulus: Modulus
    consistent: bool
    particular: tuple[int, ...] | None
    count: int
    generators: tuple[tuple[tuple[int, ...], int], ...] = ()

    def __post_init__(self) -> None:
        if self.consistent != (self.particular is not None) or self.consistent != (self.count >= 1):
            raise ValueError("inconsistent SolutionSet fields")

    def solutions(self, cap: int | None = None) -> list[tuple[int, ...]]:
        """Enumerate every solution, sorted lexicographically.

        Raises ValueError when the exact count exceeds ``cap``.
        """
        if not self.consistent:
            return []
        if cap is not None and self.count > cap:
            raise ValueError(f"solution count {self.count} exceeds cap {cap}")
        d = self.modulus.d
        base = self.particular
        assert base is not None
        out = []
        ranges = [range(order) for _, order in self.generators]
        for coeffs in product(*ranges):
            vec = list(base)
            for c, (direction, _) in zip(coeffs, self.generators):
                if c:
                    for i, g in enumerate(direction):
                        vec[i] = (vec[i] + c * g) % d
            out.append(tuple(vec))
        out.sort()
        if len(out) != self.count:
            raise AssertionError("generator enumeration does not match count")
        return out


def _no_solution(modulus: Modulus) -> SolutionSet:
    return SolutionSet(modulus, False, None, 0, ())


class PrimeSolver:
    """Row-reduce a matrix over GF(q) once, then solve many right-hand sides."""

    def __init__(self, matrix: RingMatrix):
        if not matrix.modulus.is_prime:
            raise NonPrimeModulus(f"modulus {matrix.modulus.d} is not prime")
        self.matrix = matrix
        self.q = matrix.modulus.d
        q = self.q
        m, n = matrix.rows, matrix.cols
        a = matrix.row_lists()
        # Carry the identity along so that u @ A = reduced form.
        u = [[1 if i == j else 0 for j in range(m)] for i in range(m)]
        pivots: list[int] = []
        r = 0
        for col in range(n):
            pivot_row = next((i for i in range(r, m) if a[i][col] % q), None)
            if pivot_row is None:
                continue
            a[r], a[pivot_row] = a[pivot_row], a[r]
            u[r], u[pivot_row] = u[pivot_row], u[r]
            inv = pow(a[r][col], -1, q)
            a[r] = [x * inv % q for x in a[r]]
            u[r] = [x * inv % q for x in u[r]]
            for i in range(m):
                if i != r and a[i][col]:
                    factor = a[i][col]
                    a[i] = [(x - factor * p) % q for x, p in zip(a[i], a[r])]
                    u[i] = [(x - factor * p) % q for x, p in zip(u[i], u[r])]
            pivots.append(col)
            r += 1
            if r == m:
                break
        self.reduced = a
        self.transform = u
        self.pivots = pivots
        self.rank = len(pivots)
        self.free_cols = [j for j in range(n) if j not in set(pivots)]

    def kernel_basis(self) -> list[tuple[int, ...]]:
        """Basis of {x : A x = 0}, one vector per free column."""
        q, n = self.q, self.matrix.cols
        basis = []
        for j in self.free_cols:
            vec = [0] * n
            vec[j] = 1
            for r, p in enumerate(self.pivots):
                vec[p] = -self.reduced[r][j] % q
            basis.append(tuple(vec))
        return basis

    def left_nullspace(self) -> list[tuple[int, ...]]:
        """Canonical basis of {y : y^T A = 0}, each vector with leading entry 1."""
        rows = [tuple(self.transform[i]) for i in range(self.rank, self.matrix.rows)]
        return _row_space_basis(rows, self.q)

    def solve(self, rhs: Sequence[int]) -> SolutionSet:
        q = self.q
        m, n = self.matrix.rows, self.matrix.cols
        if len(rhs) != m:
            raise ValueError("rhs length mismatch")
        c = [sum(u_ij * b for u_ij, b in zip(self.transform[i], rhs)) % q for i in range(m)]
        modulus = self.matrix.modulus
        if any(c[i] for i in range(self.rank, m)):
            return _no_solution(modulus)
        x = [0] * n
        for r, p in enumerate(self.pivots):
            x[p] = c[r]
        generators = tuple((vec, q) for vec in self.kernel_basis())
        return SolutionSet(modulus, True, tuple(x), q ** len(self.free_cols), generators)


def _row_space_basis(rows: Iterable[tuple[int, ...]], q: int) -> list[tuple[int, ...]]:
    """Reduced row-echelon basis of the span of ``rows`` over GF(q)."""
    work = [list(r) for r in rows]
    if not work:
        return []
    n = len(work[0])
    basis: list[list[int]] = []
    for row in work:
        for b in basis:
            lead = next(j for j, x in enumerate(b) if x)
            if row[lead]:
                f = row[lead]
                row[:] = [(x - f * y) % q for x, y in zip(row, b)]
        if any(row):
            lead = next(j for j, x in enumerate(row) if x)
            inv = pow(row[lead], -1, q)
            basis.append([x * inv % q for x in row])
            basis.sort(key=lambda b: next(j for j, x in enumerate(b) if x))
    # Back-substitute to make the basis fully reduced.
    for i, b in enumerate(basis):
        for other in basis[:i]:
            lead = next(j for j, x in enumerate(b) if x)
            if other[lead]:
                f = other[lead]
                other[:] = [(x - f * y) % q for x, y in zip(other, b)]
    return [tuple(b) for b in basis]


def smith_normal_form(
    rows: Sequence[Sequence[int]],
) -> tuple[list[list[int]], list[list[int]], list[list[int]]]:
    """Smith normal form of an integer matrix.

    Returns (D, U, V) with U·A·V = D, U and V unimodular, D diagonal with
    non-negative entries satisfying the divisibility chain d1 | d2 | ...
    """
    m = len(rows)
    n = len(rows[0]) if m else 0
    a = [[int(x) for x in row] for row in rows]
    u = [[1 if i == j else 0 for j in range(m)] for i in range(m)]
    v = [[1 if i == j else 0 for j in range(n)] for i in range(n)]

    def swap_rows(i, j):
        a[i], a[j] = a[j], a[i]
        u[i], u[j] = u[j], u[i]

    def swap_cols(i, j):
        for row in a:
            row[i], row[j] = row[j], row[i]
        for row in v:
            row[i], row[j] = row[j], row[i]

    def add_row(src, dst, factor):
        a[dst] = [x + factor * y for x, y in zip(a[dst], a[src])]
        u[dst] = [x + factor * y for x, y in zip(u[dst], u[src])]

    def add_col(src, dst, factor):
        for row in a:
            row[dst] += factor * row[src]
        for row in v:
            row[dst] += factor * row[src]

    def negate_row(i):
        a[i] = [-x for x in a[i]]
        u[i] = [-x for x in u[i]]

    for t in range(min(m, n)):
        while True:
            # Move the smallest nonzero entry of the trailing block to (t, t).
            best = None
            for i in range(t, m):
                for j in range(t, n):
                    if a[i][j] and (best is None or abs(a[i][j]) < abs(a[best[0]][best[1]])):
                        best = (i, j)
            if best is None:
                break
            if best[0] != t:
                swap_rows(t, best[0])
            if best[1] != t:
                swap_cols(t, best[1])
            if a[t][t] < 0:
                negate_row(t)
            # Clear the rest of column t and row t.
            dirty = False
            for i in range(t + 1, m):
                if a[i][t]:
                    add_row(t, i, -(a[i][t] // a[t][t]))
                    dirty = dirty or bool(a[i][t])
            for j in range(t + 1, n):
                if a[t][j]:
                    add_col(t, j, -(a[t][j] // a[t][t]))
                    dirty = dirty or bool(a[t][j])
            if dirty:
                continue
            # Enforce divisibility: the pivot must divide the whole block.
            offender = None
            for i in range(t + 1, m):
                for j in range(t + 1, n):
                    if a[i][j] % a[t][t]:
                        offender = i
                        break
                if offender is not None:
                    break
            if offender is None:
                break
            add_row(offender, t, 1)
        if t < min(m, n) and a[t][t] < 0:
            negate_row(t)
    d = [[a[i][j] if i == j else 0 for j in range(n)] for i in range(m)]
    return d, u, v


class SmithSolver:
    """Solve A·x = b (mod d) for arbitrary d via the Smith form of A's integer lift."""

    def __init__(self, matrix: RingMatrix):
        self.matrix = matrix
        self.d = matrix.modulus.d
        if matrix.rows == 0:
            dmat: list[list[int]] = []
            u: list[list[int]] = []
            v = [[1 if i == j else 0 for j in range(matrix.cols)] for i in range(matrix.cols)]
        else:
            dmat, u, v = smith_normal_form(matrix.row_lists())
        self.diag = [dmat[i][i] for i in range(min(matrix.rows, matrix.cols))]
        self.u = u
        self.v = v

    def solve(self, rhs: Sequence[int]) -> SolutionSet:
        d = self.d
        m, n = self.matrix.rows, self.matrix.cols
        if len(rhs) != m:
            raise ValueError("rhs length mismatch")
        modulus = self.matrix.modulus
        c = [sum(u_ij * b for u_ij, b in zip(self.u[i], rhs)) % d for i in range(m)]
        # Substituting x = V y turns A x = b into the diagonal system D y = U b.
        y = [0] * n
        generators: list[tuple[tuple[int, ...], int]] = []
        count = 1
        for i in range(n):
            di = self.diag[i] if i < len(self.diag) else 0
            g = math.gcd(di, d)
            if i < m or di:
                ci = c[i] if i < m else 0
                if g == d:
                    if ci % d:
                        return _no_solution(modulus)
                    y[i] = 0
                else:
                    if ci % g:
                        return _no_solution(modulus)
                    step = d // g
                    y[i] = (ci // g) * pow(di // g, -1, step) % step
                count *= g
                if g > 1:
                    generators.append((self._v_column(i, d // g), g))
            else:
                # Column with no diagonal constraint at all: fully free.
                count *= d
                generators.append((self._v_column(i, 1), d))
        # Rows beyond the diagonal demand c_i = 0 outright.
        for i in range(n, m):
            if c[i] % d:
                return _no_solution(modulus)
        x = tuple(
            sum(self.v[r][j] * y[j] for j in range(n)) % d for r in range(n)
        )
        return SolutionSet(modulus, True, x, count, tuple(generators))

    def _v_column(self, j: int, scale: int) -> tuple[int, ...]:
        d = self.d
        return tuple(self.v[r][j] * scale % d for r in range(len(self.v)))


def solve_prime(matrix: RingMatrix, rhs: Sequence[int]) -> SolutionSet:
    """Solve A·x = b over GF(q) by Gaussian elimination (q prime)."""
    return PrimeSolver(matrix).solve(rhs)


def solve_residue(matrix: RingMatrix, rhs: Sequence[int]) -> SolutionSet:
    """Solve A·x = b (mod d) for any d >= 2, with the exact solution count."""
    return SmithSolver(matrix).solve(rhs)


def left_nullspace_prime(matrix: RingMatrix) -> list[tuple[int, ...]]:
    """Canonical basis of the left nullspace {y : y^T A = 0} over GF(q)."""
    return PrimeSolver(matrix).left_nullspace()


@dataclass(frozen=True)
class PrimePowerConsistency:
    """Rank data for one prime-power factor p^e of the modulus."""

    prime: int
    exponent: int
    rank: int
    rank_augmented: int
    consistent: bool


@dataclass(frozen=True)
class RankReport:
    per_factor: tuple[PrimePowerConsistency, ...]
    consistent: bool


def rank_and_consistency(matrix: RingMatrix, rhs: Sequence[int]) -> RankReport:
    """Per prime-power report: GF(p) ranks of A and [A|b], consistency mod p^e.

    For prime d this is the classic rank test; for composite d the system is
    consistent iff it is consistent modulo every prime-power factor (CRT).
    """
    if len(rhs) != matrix.rows:
        raise ValueError("rhs length mismatch")

    def reduced(mod: int, augment: bool) -> RingMatrix:
        cols = matrix.cols + (1 if augment else 0)
        entries = []
        for i in range(matrix.rows):
            entries.extend(x % mod for x in matrix.row(i))
            if augment:
                entries.append(rhs[i] % mod)
        return RingMatrix(matrix.rows, cols, tuple(entries), Modulus(mod))

    reports = []
    for p, e in matrix.modulus.factorization:
        rank_a = PrimeSolver(reduced(p, augment=False)).rank
        rank_aug = PrimeSolver(reduced(p, augment=True)).rank
        if e == 1:
            consistent = rank_a == rank_aug
        else:
            pe = p**e
            consistent = SmithSolver(reduced(pe, augment=False)).solve(
                [b % pe for b in rhs]
            ).consistent
        reports.append(PrimePowerConsistency(p, e, rank_a, rank_aug, consistent))
    return RankReport(tuple(reports), all(r.consistent for r in reports))
