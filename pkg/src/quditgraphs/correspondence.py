"""Phase tables vs edge weights: build, solve, and count the linear systems.

A canonical phase table f (f(0,...,0) = 0) is reachable from an edge map iff
the system

    sum_e m_e * prod_{v in e} i_v^{s_v}  =  f(i)   (mod d),  one equation per
    nonzero index tuple i,

has a solution in the edge weights m_e. In hypergraph mode the variables are
the 2^n - 1 plain hyperedges; in multihypergraph mode all d^n - 1 decorated
edges. Equations are ordered by ascending flat index of the tuple (mixed
radix, i_0 most significant); variables follow the enumeration order of the
graphs module. Solving goes through Gaussian elimination over GF(q) for prime
d and through the Smith normal form for composite d, so solution counts are
exact. ``census`` classifies every canonical table at fixed (d, n).
"""

from __future__ import annotations

import hashlib
import json
from collections import Counter
from dataclasses import dataclass
from functools import lru_cache
from itertools import combinations, product

import numpy as np

from .graphs import (
    MultiHyperedge,
    WeightedEdgeMap,
    enumerate_hyperedges,
    enumerate_multihyperedges,
)
from .residues import (
    NonPrimeModulus,
    PrimeSolver,
    RingMatrix,
    SmithSolver,
    SolutionSet,
)
from .states import PhaseFunction, SizeLimit, build_state, digits_of

HYPERGRAPH = "hypergraph"
MULTIHYPERGRAPH = "multihypergraph"
MODES = (HYPERGRAPH, MULTIHYPERGRAPH)

DEFAULT_CENSUS_BUDGET = 10**7
DEFAULT_BLOCK_LIMIT = 2**24


class NonCanonical(ValueError):
    """The phase table has f(0, ..., 0) != 0."""


class RoundTripFailure(RuntimeError):
    """A solved edge map failed to rebuild its own phase table (solver bug)."""


class BudgetExceeded(RuntimeError):
    """The census would need more solver calls than the configured budget."""


def _check_mode(mode: str) -> str:
    if mode not in MODES:
        raise ValueError(f"mode must be one of {MODES}, got {mode!r}")
    return mode


def coefficient(index_tuple: tuple[int, ...], edge: MultiHyperedge, d: int) -> int:
    """prod_{v in e} i_v^{s_v} mod d; zero unless the edge support lies inside
    the tuple's support."""
    out = 1
    for v, s in zip(edge.vertices, edge.exponents):
        out = out * pow(index_tuple[v], s, d) % d
        if not out:
            return 0
    return out


@lru_cache(maxsize=None)
def _system_parts(
    d: int, n: int, mode: str
) -> tuple[tuple[MultiHyperedge, ...], tuple[tuple[int, ...], ...], RingMatrix]:
    variables = tuple(
        enumerate_hyperedges(n) if mode == HYPERGRAPH else enumerate_multihyperedges(n, d)
    )
    tuples = tuple(digits_of(i, d, n) for i in range(1, d**n))
    rows = [[coefficient(t, e, d) for e in variables] for t in tuples]
    return variables, tuples, RingMatrix.from_rows(rows, d)


@dataclass(frozen=True)
class CorrespondenceSystem:
    """The coefficient matrix and right-hand side for one phase table."""

    d: int
    n: int
    mode: str
    variables: tuple[MultiHyperedge, ...]
    tuples: tuple[tuple[int, ...], ...]
    matrix: RingMatrix
    rhs: tuple[int, ...]

    def fingerprint(self) -> str:
        """Hash of the matrix and its orderings (rhs-independent)."""
        payload = {
            "d": self.d,
            "n": self.n,
            "mode": self.mode,
            "variables": [
                [list(e.vertices), list(e.exponents)] for e in self.variables
            ],
            "tuples": [list(t) for t in self.tuples],
            "entries": list(self.matrix.entries),
        }
        blob = json.dumps(payload, sort_keys=True, separators=(",", ":"))
        return hashlib.sha256(blob.encode()).hexdigest()[:16]


def build_system(table: PhaseFunction, mode: str) -> CorrespondenceSystem:
    """One equation per nonzero index tuple, all variables on the left."""
    _check_mode(mode)
    if not table.is_canonical:
        raise NonCanonical("phase table must have f(0, ..., 0) = 0")
    variables, tuples, matrix = _system_parts(table.d, table.n, mode)
    rhs = tuple(int(x) for x in table.table[1:])
    return CorrespondenceSystem(table.d, table.n, mode, variables, tuples, matrix, rhs)


@dataclass(frozen=True)
class SolveOutcome:
    """Result of solving one correspondence system.

    ``edge_map`` is rebuilt from the particular solution when consistent and
    is always round-trip checked against the input table.
    """

    mode: str
    system: CorrespondenceSystem
    solution: SolutionSet
    edge_map: WeightedEdgeMap | None

    def edge_maps(self, cap: int | None = None) -> list[WeightedEdgeMap]:
        """Every solution as an edge map, in lexicographic weight-vector order."""
        return [
            _vector_to_map(self.system, vec) for vec in self.solution.solutions(cap=cap)
        ]


def _vector_to_map(system: CorrespondenceSystem, vector: tuple[int, ...]) -> WeightedEdgeMap:
    weights = {e: w for e, w in zip(system.variables, vector) if w % system.d}
    return WeightedEdgeMap(system.d, system.n, weights)


def _checked_outcome(
    table: PhaseFunction, system: CorrespondenceSystem, solution: SolutionSet
) -> SolveOutcome:
    edge_map = None
    if solution.consistent:
        assert solution.particular is not None
        edge_map = _vector_to_map(system, solution.particular)
        if build_state(edge_map) != table:
            raise RoundTripFailure(
                f"solved weights do not rebuild the table (fingerprint {system.fingerprint()})"
            )
    return SolveOutcome(system.mode, system, solution, edge_map)


def solve_weights(table: PhaseFunction, mode: str) -> SolveOutcome:
    """Decide reachability of a canonical table and count all weight solutions."""
    system = build_system(table, mode)
    if system.matrix.modulus.is_prime:
        solution = PrimeSolver(system.matrix).solve(system.rhs)
    else:
        solution = SmithSolver(system.matrix).solve(system.rhs)
    return _checked_outcome(table, system, solution)


def coefficient_block(d: int, size: int, limit: int | None = None) -> RingMatrix:
    """size-fold Kronecker power of the (d-1)x(d-1) digit-power matrix
    V[i][s] = i^s mod d (i, s in 1..d-1)."""
    if d < 2 or size < 1:
        raise ValueError("need d >= 2 and size >= 1")
    cap = DEFAULT_BLOCK_LIMIT if limit is None else limit
    if (d - 1) ** size >= cap:
        raise SizeLimit(f"block of {(d - 1) ** size} rows meets or exceeds the limit {cap}")
    base = RingMatrix.from_rows(
        [[pow(i, s, d) for s in range(1, d)] for i in range(1, d)], d
    )
    block = base
    for _ in range(size - 1):
        block = block.kron(base)
    return block


def _tensor_apply(matrix: np.ndarray, vec: np.ndarray, t: int, d: int) -> np.ndarray:
    """Apply matrix (x) ... (x) matrix (t factors) to vec, mod d."""
    ten = vec.reshape((d - 1,) * t)
    for axis in range(t):
        ten = np.tensordot(matrix, ten, axes=([1], [axis])) % d
        ten = np.moveaxis(ten, 0, axis)
    return ten.reshape(-1)


def _prime_inverse(matrix: RingMatrix) -> np.ndarray:
    solver = PrimeSolver(matrix)
    if solver.rank != matrix.rows or matrix.rows != matrix.cols:
        raise ValueError("matrix is not invertible")
    return np.array(solver.transform, dtype=np.int64)


def block_solve_prime(table: PhaseFunction) -> SolveOutcome:
    """Multihypergraph solve for prime d by ascending-support blocks.

    Each support set of size t contributes an invertible (d-1)^t block, the
    t-fold Kronecker power of the digit-power matrix, so the unique solution
    is found group by group without eliminating the full system.
    """
    d, n = table.d, table.n
    system = build_system(table, MULTIHYPERGRAPH)
    if not system.matrix.modulus.is_prime:
        raise NonPrimeModulus(f"modulus {d} is not prime")
    vinv = _prime_inverse(coefficient_block(d, 1))
    weights: dict[MultiHyperedge, int] = {}
    digit_axis = list(range(1, d))
    for t in range(1, n + 1):
        for support in combinations(range(n), t):
            assignments = list(product(digit_axis, repeat=t))
            rhs = np.empty(len(assignments), dtype=np.int64)
            for row, assignment in enumerate(assignments):
                index = [0] * n
                for v, value in zip(support, assignment):
                    index[v] = value
                known = 0
                for size in range(1, t):
                    for sub in combinations(support, size):
                        for exps in product(digit_axis, repeat=size):
                            edge = MultiHyperedge(sub, exps)
                            w = weights.get(edge)
                            if w:
                                known += w * coefficient(tuple(index), edge, d)
                rhs[row] = (table.entry(index) - known) % d
            solved = _tensor_apply(vinv, rhs, t, d)
            for exps, value in zip(product(digit_axis, repeat=t), solved):
                if value % d:
                    weights[MultiHyperedge(support, exps)] = int(value % d)
    edge_map = WeightedEdgeMap(d, n, weights)
    particular = tuple(weights.get(e, 0) for e in system.variables)
    solution = SolutionSet(system.matrix.modulus, True, particular, 1, ())
    return _checked_outcome(table, system, solution)


def representability_constraints(d: int, n: int, mode: str) -> list[tuple[int, ...]]:
    """Left-nullspace basis of the coefficient matrix (prime d only).

    A canonical table is reachable iff every basis vector y has
    y . rhs = 0 (mod d), rhs taken in equation order.
    """
    _check_mode(mode)
    _, _, matrix = _system_parts(d, n, mode)
    if not matrix.modulus.is_prime:
        raise NonPrimeModulus(f"modulus {d} is not prime")
    return PrimeSolver(matrix).left_nullspace()


@dataclass(frozen=True)
class CensusReport:
    """Exhaustive classification of all canonical tables at fixed (d, n)."""

    d: int
    n: int
    mode: str
    total_states: int
    reachable: int
    histogram: tuple[tuple[int, int], ...]  # (solution_count, #tables), sorted
    solution_sum: int
    weight_assignments: int
    matrix_fingerprint: str

    def histogram_dict(self) -> dict[int, int]:
        return dict(self.histogram)

    def to_dict(self) -> dict:
        return {
            "d": self.d,
            "n": self.n,
            "mode": self.mode,
            "total_states": self.total_states,
            "reachable": self.reachable,
            "histogram": {str(k): v for k, v in self.histogram},
            "solution_sum": self.solution_sum,
            "weight_assignments": self.weight_assignments,
            "matrix_fingerprint": self.matrix_fingerprint,
        }


def census(
    d: int, n: int, mode: str, budget: int | None = None
) -> CensusReport:
    """Solve every canonical phase table at (d, n) and tally multiplicities.

    The coefficient matrix is factored once; each of the d^(d^n - 1) tables
    costs one transformed-rhs solve. Refuses cleanly when the table count
    exceeds the budget.
    """
    _check_mode(mode)
    cap = DEFAULT_CENSUS_BUDGET if budget is None else budget
    total = d ** (d**n - 1)
    if total > cap:
        raise BudgetExceeded(f"census needs {total} solver calls, budget is {cap}")
    variables, tuples, matrix = _system_parts(d, n, mode)
    solver = PrimeSolver(matrix) if matrix.modulus.is_prime else SmithSolver(matrix)
    histogram: Counter[int] = Counter()
    reachable = 0
    solution_sum = 0
    for rhs in product(range(d), repeat=d**n - 1):
        result = solver.solve(rhs)
        histogram[result.count] += 1
        if result.consistent:
            reachable += 1
            solution_sum += result.count
    fingerprint = CorrespondenceSystem(
        d, n, mode, variables, tuples, matrix, (0,) * matrix.rows
    ).fingerprint()
    return CensusReport(
        d=d,
        n=n,
        mode=mode,
        total_states=total,
        reachable=reachable,
        histogram=tuple(sorted(histogram.items())),
        solution_sum=solution_sum,
        weight_assignments=d ** len(variables),
        matrix_fingerprint=fingerprint,
    )
