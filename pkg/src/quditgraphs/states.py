"""States of n qudits as exact phase functions f: Z_d^n -> Z_d.

A table entry f(i) is the power of omega_d = exp(2*pi*1j/d) multiplying the
basis ket |i_0, ..., i_{n-1}>; the amplitude is d^{-n/2} * omega_d^{f(i)}.
Index convention: i_0 is the most significant digit, so the flat index of
(i_0, ..., i_{n-1}) is sum_j i_j * d^{n-1-j}.

All diagonal gates act by adding an integer exponent table mod d, so gate
application is exact and order-independent.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence

import numpy as np

from .graphs import MultiHyperedge, WeightedEdgeMap

DEFAULT_TABLE_LIMIT = 2**24


class SizeLimit(ValueError):
    """Table would meet or exceed the configured entry limit."""


class VertexOutOfRange(ValueError):
    """A gate referenced a vertex index >= n."""


class DimensionMismatch(ValueError):
    """Two states with different (d, n) were compared."""


def _check_size(d: int, n: int, limit: int | None) -> int:
    size = d**n
    cap = DEFAULT_TABLE_LIMIT if limit is None else limit
    if size >= cap:
        raise SizeLimit(f"table of {size} entries meets or exceeds the limit {cap}")
    return size


def _freeze(table: np.ndarray) -> np.ndarray:
    table = np.ascontiguousarray(table, dtype=np.int64)
    table.setflags(write=False)
    return table


@dataclass(frozen=True, eq=False)
class PhaseFunction:
    """Exponent table of a state; canonical means f(0, ..., 0) = 0."""

    d: int
    n: int
    table: np.ndarray

    def __post_init__(self) -> None:
        if self.d < 2 or self.n < 1:
            raise ValueError("need d >= 2 and n >= 1")
        table = np.asarray(self.table)
        if table.shape != (self.d**self.n,):
            raise ValueError(f"table must have d^n = {self.d ** self.n} entries")
        if table.size and (table.min() < 0 or table.max() >= self.d):
            raise ValueError("table entries must lie in [0, d)")
        object.__setattr__(self, "table", _freeze(table))

    @property
    def is_canonical(self) -> bool:
        return int(self.table[0]) == 0

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, PhaseFunction):
            return NotImplemented
        return (
            self.d == other.d
            and self.n == other.n
            and bool(np.array_equal(self.table, other.table))
        )

    __hash__ = None  # type: ignore[assignment]

    def entry(self, digits: Sequence[int]) -> int:
        return int(self.table[index_of(digits, self.d)])


# The stabilizer machinery moves states out of canonical form (a shifted table
# may have f(0,...,0) != 0); the class itself does not require canonicity.
GeneralState = PhaseFunction


def index_of(digits: Sequence[int], d: int) -> int:
    """Flat index of a digit tuple, i_0 most significant."""
    idx = 0
    for digit in digits:
        idx = idx * d + digit
    return idx


def digits_of(index: int, d: int, n: int) -> tuple[int, ...]:
    digits = []
    for _ in range(n):
        index, r = divmod(index, d)
        digits.append(r)
    return tuple(reversed(digits))


def digit_values(d: int, n: int, vertex: int) -> np.ndarray:
    """Array of length d^n holding digit i_vertex of every flat index."""
    if not 0 <= vertex < n:
        raise VertexOutOfRange(f"vertex {vertex} out of range [0, {n})")
    idx = np.arange(d**n, dtype=np.int64)
    return (idx // d ** (n - 1 - vertex)) % d


def monomial_table(d: int, n: int, edge: MultiHyperedge) -> np.ndarray:
    """Table of prod_{v in edge} i_v^{s_v} mod d over all d^n indices."""
    if edge.vertices[-1] >= n:
        raise VertexOutOfRange(f"edge {edge} references a vertex >= {n}")
    acc = np.ones(d**n, dtype=np.int64)
    for v, s in zip(edge.vertices, edge.exponents):
        lut = np.array([pow(i, s, d) for i in range(d)], dtype=np.int64)
        acc = acc * lut[digit_values(d, n, v)] % d
    return acc


def plus_state(n: int, d: int, limit: int | None = None) -> PhaseFunction:
    """|+_d>^{(x)n}: the uniform superposition, i.e. the all-zero table."""
    size = _check_size(d, n, limit)
    return PhaseFunction(d, n, np.zeros(size, dtype=np.int64))


def apply_multi_cz(state: PhaseFunction, edge: MultiHyperedge, power: int) -> PhaseFunction:
    """Apply the edge's controlled phase gate ``power`` times:
    f'(i) = f(i) + power * prod_v i_v^{s_v} (mod d)."""
    m = power % state.d
    if m == 0:
        return state
    table = (state.table + m * monomial_table(state.d, state.n, edge)) % state.d
    return PhaseFunction(state.d, state.n, table)


def apply_uv(state: PhaseFunction, vertex: int, coefficients: Sequence[int]) -> PhaseFunction:
    """Apply the single-vertex diagonal gate with h(k) = sum_j a_j k^j.

    ``coefficients`` is (a_0, ..., a_eta); a_0 contributes a global phase.
    The monomial gate h(k) = k^eta is ``coefficients = (0,)*eta + (1,)``;
    with eta = 1 this is the single-vertex ring gate Z.
    """
    d = state.d
    h = np.array(
        [sum(a * pow(k, j, d) for j, a in enumerate(coefficients)) % d for k in range(d)],
        dtype=np.int64,
    )
    if not h.any():
        return state
    table = (state.table + h[digit_values(d, state.n, vertex)]) % d
    return PhaseFunction(d, state.n, table)


def monomial_coefficients(eta: int) -> tuple[int, ...]:
    """Coefficient vector of h(k) = k^eta."""
    if eta < 1:
        raise ValueError("eta must be >= 1")
    return (0,) * eta + (1,)


def build_state(edge_map: WeightedEdgeMap, limit: int | None = None) -> PhaseFunction:
    """State of a weighted edge map: f(i) = sum_e m_e prod_{v in e} i_v^{s_v} mod d.

    Every monomial vanishes at (0, ..., 0), so the result is canonical; the
    order of edge application never matters (all gates are diagonal).
    """
    d, n = edge_map.d, edge_map.n
    size = _check_size(d, n, limit)
    table = np.zeros(size, dtype=np.int64)
    for edge, weight in edge_map.items():
        table = (table + weight * monomial_table(d, n, edge)) % d
    return PhaseFunction(d, n, table)


def states_equal(a: PhaseFunction, b: PhaseFunction) -> bool:
    """Equality up to global phase: tables match after subtracting f(0,...,0)."""
    if a.d != b.d or a.n != b.n:
        raise DimensionMismatch(f"({a.d}, {a.n}) vs ({b.d}, {b.n})")
    ta = (a.table - a.table[0]) % a.d
    tb = (b.table - b.table[0]) % b.d
    return bool(np.array_equal(ta, tb))


def canonicalize(state: PhaseFunction) -> PhaseFunction:
    """Subtract f(0, ..., 0) from every entry."""
    if state.is_canonical:
        return state
    return PhaseFunction(state.d, state.n, (state.table - state.table[0]) % state.d)


@dataclass(frozen=True, eq=False)
class DenseState:
    """Explicit amplitude vector; always unit norm by construction."""

    d: int
    n: int
    amplitudes: np.ndarray

    def __post_init__(self) -> None:
        amps = np.ascontiguousarray(self.amplitudes, dtype=np.complex128)
        if amps.shape != (self.d**self.n,):
            raise ValueError("amplitude count must be d^n")
        norm = float(np.sum(np.abs(amps) ** 2))
        if abs(norm - 1.0) > 1e-12:
            raise ValueError(f"state norm deviates from 1 by {abs(norm - 1.0):.3e}")
        amps.setflags(write=False)
        object.__setattr__(self, "amplitudes", amps)


def to_dense(state: PhaseFunction, limit: int | None = None) -> DenseState:
    """Amplitudes d^{-n/2} * exp(2*pi*1j*f(i)/d)."""
    _check_size(state.d, state.n, limit)
    phases = np.exp(2j * np.pi * state.table / state.d)
    return DenseState(state.d, state.n, phases * state.d ** (-state.n / 2))


def dense_text(state: DenseState) -> str:
    """Text export, one line per amplitude: 'index re im' at 17 significant digits."""
    lines = [
        f"{i} {amp.real:.17g} {amp.imag:.17g}" for i, amp in enumerate(state.amplitudes)
    ]
    return "\n".join(lines) + "\n"


# --- JSON serialization of phase tables --------------------------------------


def phases_to_dict(state: PhaseFunction) -> dict:
    return {"d": state.d, "n": state.n, "phases": [int(x) for x in state.table]}


def phases_from_dict(payload: object) -> PhaseFunction:
    from .graphs import SchemaError, _expect_int, _expect_int_list

    if not isinstance(payload, dict):
        raise SchemaError("$", f"expected an object, got {payload!r}")
    for key in ("d", "n", "phases"):
        if key not in payload:
            raise SchemaError(key, "missing required field")
    d = _expect_int(payload["d"], "d", minimum=2)
    n = _expect_int(payload["n"], "n", minimum=1)
    phases = _expect_int_list(payload["phases"], "phases")
    if len(phases) != d**n:
        raise SchemaError("phases", f"expected d^n = {d ** n} entries, got {len(phases)}")
    for i, x in enumerate(phases):
        if not 0 <= x < d:
            raise SchemaError(f"phases[{i}]", f"entry out of range [0, {d})")
    return PhaseFunction(d, n, np.array(phases, dtype=np.int64))
