"""Forward simulation: propagate a Fock input through a mode matrix and
apply a photon-counting heralding measurement.

Conventions.  The mode matrix acts on creation operators as
adag_i = sum_j M[i,j] adag_out_j, so an input |n_1..n_N> becomes the
polynomial prod_i (row_i . adag_out)^{n_i} / sqrt(prod n_i!) applied to
vacuum.  Heralding m_l photons in a set of modes selects the terms with
exactly those exponents; under the default "amplitude" convention the
extracted coefficient picks up sqrt(prod m_l!), which makes outcome
probabilities over all patterns sum to one for unitary matrices.  The
"coefficient" convention omits that factor (the two agree when every
m_l <= 1).
"""

from __future__ import annotations

from dataclasses import dataclass
from math import factorial, prod, sqrt

import numpy as np

from loqsg import fockpoly
from loqsg.fockpoly import OperatorPoly, check_occupations
from loqsg.kernels import permanent

__all__ = [
    "MeasurementPattern",
    "HeraldedOutput",
    "is_unitary",
    "is_contraction",
    "build_output_poly",
    "herald",
    "outcome_probabilities",
    "amplitude_via_permanent",
    "heralded_state_via_permanent",
    "fidelity",
    "state_overlap",
    "state_norm_sq",
]

CONVENTIONS = ("amplitude", "coefficient")


def as_matrix(m) -> np.ndarray:
    a = np.asarray(m, dtype=np.complex128)
    if a.ndim != 2 or a.shape[0] != a.shape[1]:
        raise ValueError("mode matrix must be square")
    return a


def is_unitary(m, tol: float = 1e-10) -> bool:
    a = as_matrix(m)
    return np.abs(a.conj().T @ a - np.eye(a.shape[0])).max() <= tol


def is_contraction(m, tol: float = 1e-10) -> bool:
    a = as_matrix(m)
    return np.linalg.svd(a, compute_uv=False)[0] <= 1.0 + tol


@dataclass(frozen=True)
class MeasurementPattern:
    """Photon counts demanded on a set of distinct measured modes."""

    modes: tuple
    counts: tuple

    def __post_init__(self):
        object.__setattr__(self, "modes", tuple(int(i) for i in self.modes))
        object.__setattr__(self, "counts", tuple(int(c) for c in self.counts))
        if len(self.modes) != len(self.counts):
            raise ValueError("modes and counts must have equal length")
        if len(set(self.modes)) != len(self.modes):
            raise ValueError("measured modes must be distinct")
        if any(c < 0 for c in self.counts):
            raise ValueError("photon counts must be non-negative")

    @property
    def total(self) -> int:
        return sum(self.counts)

    def as_pattern(self) -> dict:
        return dict(zip(self.modes, self.counts))


@dataclass
class HeraldedOutput:
    """Unnormalized heralded state on the unmeasured modes.

    success_probability is the squared norm of the state; it is a physical
    probability only when the mode matrix is unitary.  raw_amplitude is the
    overlap with a supplied normalized target (None when no target given).
    """

    state: dict
    success_probability: float
    raw_amplitude: complex | None = None
    unmeasured_modes: tuple = ()


def build_output_poly(matrix, input_state) -> OperatorPoly:
    """Expansion of prod_i (sum_j M[i,j] adag_j)^{n_i} / sqrt(prod n_i!)."""
    a = as_matrix(matrix)
    n = check_occupations(input_state)
    if a.shape[0] != len(n):
        raise ValueError("matrix dimension does not match input mode count")
    poly = OperatorPoly.one(len(n))
    for i, ni in enumerate(n):
        if ni:
            poly = poly * fockpoly.linear_form_power(a[i], ni)
    return poly.scale(1.0 / sqrt(prod(factorial(x) for x in n)))


def herald(
    matrix,
    input_state,
    meas: MeasurementPattern,
    target: dict | None = None,
    convention: str = "amplitude",
) -> HeraldedOutput:
    """Project the output on a photon-count pattern in the measured modes.

    Heralding more photons than the input carries yields the zero state with
    probability 0 (not an error).
    """
    if convention not in CONVENTIONS:
        raise ValueError(f"unknown convention {convention!r}")
    a = as_matrix(matrix)
    n = check_occupations(input_state)
    if any(not 0 <= mode < a.shape[0] for mode in meas.modes):
        raise ValueError("measured mode out of range")
    unmeasured = tuple(i for i in range(a.shape[0]) if i not in meas.modes)
    if meas.total > sum(n):
        return HeraldedOutput({}, 0.0, None, unmeasured)
    f = build_output_poly(a, n)
    g = fockpoly.coefficient_extract(f, meas.as_pattern())
    if convention == "amplitude":
        g = g.scale(sqrt(prod(factorial(c) for c in meas.counts)))
    state = fockpoly.state_from_poly(g)
    p = sum(abs(amp) ** 2 for amp in state.values())
    raw = None
    if target is not None:
        tnorm = sqrt(state_norm_sq(target))
        if tnorm == 0:
            raise ValueError("zero-norm target")
        raw = state_overlap(target, state) / tnorm
    return HeraldedOutput(state, float(p), raw, unmeasured)


def outcome_probabilities(matrix, input_state, measured_modes, convention="amplitude"):
    """Probability of every photon-count pattern on the measured modes.

    Enumerates all count vectors summing to at most the input photon number;
    for a unitary matrix the probabilities sum to one.
    """
    n_total = sum(input_state)
    modes = tuple(measured_modes)
    out = {}
    for counts in _count_vectors(len(modes), n_total):
        res = herald(matrix, input_state, MeasurementPattern(modes, counts),
                     convention=convention)
        out[counts] = res.success_probability
    return out


def _count_vectors(k, max_total):
    if k == 0:
        yield ()
        return
    for first in range(max_total + 1):
        for rest in _count_vectors(k - 1, max_total - first):
            yield (first,) + rest


def amplitude_via_permanent(matrix, input_state, output_state) -> complex:
    """<output| U(M) |input> by the permanent of the repeated submatrix.

    Independent of the polynomial expansion path: rows are repeated per
    input occupation, columns per output occupation, and the permanent is
    divided by sqrt(prod n_i! prod k_j!).  Returns 0 on photon-number
    mismatch.
    """
    a = as_matrix(matrix)
    n = check_occupations(input_state)
    k = check_occupations(output_state)
    if len(n) != a.shape[0] or len(k) != a.shape[0]:
        raise ValueError("state length does not match matrix dimension")
    if sum(n) != sum(k):
        return 0j
    rows = [i for i, ni in enumerate(n) for _ in range(ni)]
    cols = [j for j, kj in enumerate(k) for _ in range(kj)]
    sub = a[np.ix_(rows, cols)]
    norm = sqrt(prod(factorial(x) for x in n) * prod(factorial(x) for x in k))
    return permanent(sub) / norm


def heralded_state_via_permanent(matrix, input_state, meas: MeasurementPattern):
    """Heralded state computed entirely from permanents (oracle path)."""
    a = as_matrix(matrix)
    n = check_occupations(input_state)
    unmeasured = tuple(i for i in range(a.shape[0]) if i not in meas.modes)
    rest = sum(n) - meas.total
    state = {}
    if rest < 0:
        return state, unmeasured
    fixed = meas.as_pattern()
    for counts in _count_vectors(len(unmeasured), rest):
        if sum(counts) != rest:
            continue
        full = [0] * a.shape[0]
        for mode, c in zip(unmeasured, counts):
            full[mode] = c
        for mode, c in fixed.items():
            full[mode] = c
        amp = amplitude_via_permanent(a, n, tuple(full))
        if amp != 0:
            state[counts] = amp
    return state, unmeasured


def state_overlap(bra: dict, ket: dict) -> complex:
    return sum(bra[k].conjugate() * ket[k] for k in bra.keys() & ket.keys())


def state_norm_sq(state: dict) -> float:
    return float(sum(abs(v) ** 2 for v in state.values()))


def fidelity(state: dict, target: dict) -> float:
    """|<target|state>|^2 / (<state|state> <target|target>)."""
    ns = state_norm_sq(state)
    nt = state_norm_sq(target)
    if ns == 0 or nt == 0:
        raise ValueError("zero-norm input to fidelity")
    return abs(state_overlap(target, state)) ** 2 / (ns * nt)
