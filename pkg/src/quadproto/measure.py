"""Projective product-basis measurements on pure states.

A plan is an ordered list of steps; each step measures a disjoint set of
qubits in a named basis.  Subspace bases are completed automatically with
Gram-Schmidt vectors labeled ``perp0``, ``perp1``, ...  Enumeration walks
every outcome combination exactly (no sampling), returning normalized
residual states together with the original indices of the surviving qubits.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Sequence

import numpy as np

from .catalog import NamedBasis
from .states import PureState

__all__ = [
    "MeasurementStep",
    "MeasurementPlan",
    "OutcomeBranch",
    "complete_basis",
    "enumerate_outcomes",
    "perp_probability",
    "sample_counts",
]

DROP_TOL = 1e-12
PERP_ALARM = 1e-10


def complete_basis(basis: NamedBasis) -> NamedBasis:
    """Extend a subspace basis to a complete one.

    Computational unit vectors are Gram-Schmidt orthogonalized against the
    declared vectors (and each other) in index order; survivors are appended
    with labels perp0, perp1, ...
    """
    if basis.complete:
        return basis
    d = basis.dim
    rows = [v.amplitudes for v in basis.vectors]
    labels = list(basis.labels)
    k = 0
    for i in range(d):
        if len(rows) == d:
            break
        cand = np.zeros(d, dtype=np.complex128)
        cand[i] = 1.0
        for r in rows:
            cand -= np.vdot(r, cand) * r
        norm = np.linalg.norm(cand)
        # 0.5 keeps the selection far from roundoff ambiguity
        if norm > 0.5:
            rows.append(cand / norm)
            labels.append("perp%d" % k)
            k += 1
    if len(rows) != d:
        # fall back to accepting any numerically independent column
        for i in range(d):
            if len(rows) == d:
                break
            cand = np.zeros(d, dtype=np.complex128)
            cand[i] = 1.0
            for r in rows:
                cand -= np.vdot(r, cand) * r
            norm = np.linalg.norm(cand)
            if norm > 1e-6:
                rows.append(cand / norm)
                labels.append("perp%d" % k)
                k += 1
    if len(rows) != d:
        raise ValueError("failed to complete basis %r" % basis.name)
    return NamedBasis(basis.name, tuple(labels),
                      tuple(PureState(r) for r in rows))


@dataclass(frozen=True)
class MeasurementStep:
    """One projective measurement: ``basis`` applied to ``qubits``.

    The i-th qubit of every basis vector corresponds to ``qubits[i]`` of the
    register being measured, so the tuple order is meaningful.
    """

    qubits: tuple[int, ...]
    basis: NamedBasis
    party: str = "Alice"

    def __post_init__(self) -> None:
        if len(set(self.qubits)) != len(self.qubits):
            raise ValueError("repeated qubit in measurement step")
        if self.basis.num_qubits != len(self.qubits):
            raise ValueError(
                "basis %r is on %d qubits but the step names %d"
                % (self.basis.name, self.basis.num_qubits, len(self.qubits))
            )


@dataclass(frozen=True)
class MeasurementPlan:
    steps: tuple[MeasurementStep, ...]

    def __post_init__(self) -> None:
        seen: set[int] = set()
        for step in self.steps:
            overlap = seen & set(step.qubits)
            if overlap:
                raise ValueError("qubits %s measured twice" % sorted(overlap))
            seen.update(step.qubits)

    @property
    def measured_qubits(self) -> tuple[int, ...]:
        return tuple(q for step in self.steps for q in step.qubits)

    def validate_for(self, num_qubits: int) -> None:
        bad = [q for q in self.measured_qubits if not 0 <= q < num_qubits]
        if bad:
            raise ValueError("plan touches qubits %s outside a %d-qubit register"
                             % (bad, num_qubits))

    def parties(self) -> list[str]:
        out: list[str] = []
        for step in self.steps:
            if step.party not in out:
                out.append(step.party)
        return out


@dataclass(frozen=True)
class OutcomeBranch:
    """One complete outcome combination of a plan."""

    labels: tuple[str, ...]
    probability: float
    state: PureState | None         # None when every qubit was measured
    kept_qubits: tuple[int, ...]    # original indices, ascending
    perp: bool

    @property
    def key(self) -> str:
        return ",".join(self.labels)


def _contract_step(vec: np.ndarray, num_qubits: int, positions: Sequence[int],
                   basis_matrix: np.ndarray) -> tuple[np.ndarray, list[int]]:
    """Project one step; rows of the result are unnormalized residuals."""
    rest = [q for q in range(num_qubits) if q not in positions]
    t = vec.reshape([2] * num_qubits)
    t = t.transpose(list(positions) + rest)
    t = t.reshape(basis_matrix.shape[1], -1)
    return basis_matrix.conj() @ t, rest


def enumerate_outcomes(state: PureState, plan: MeasurementPlan,
                       drop_tol: float = DROP_TOL) -> list[OutcomeBranch]:
    """All outcome branches with probability above ``drop_tol``.

    Probabilities always sum to one before dropping; the returned branches
    carry normalized residual states on the unmeasured qubits.
    """
    if drop_tol < 0.0:
        raise ValueError("drop_tol must be nonnegative")
    plan.validate_for(state.num_qubits)
    completed = [complete_basis(step.basis) for step in plan.steps]

    # original index of the qubit at each current position
    orig = list(range(state.num_qubits))
    branches: list[tuple[tuple[str, ...], np.ndarray]] = [((), state.amplitudes)]
    for step, basis in zip(plan.steps, completed):
        positions = [orig.index(q) for q in step.qubits]
        matrix = basis.matrix()
        nq = len(orig)
        next_branches: list[tuple[tuple[str, ...], np.ndarray]] = []
        for labels, vec in branches:
            rows, rest = _contract_step(vec, nq, positions, matrix)
            for label, row in zip(basis.labels, rows):
                if float(np.vdot(row, row).real) > drop_tol:
                    next_branches.append((labels + (label,), row))
        branches = next_branches
        orig = [orig[p] for p in range(nq) if p not in positions]

    kept = tuple(orig)
    out: list[OutcomeBranch] = []
    for labels, vec in branches:
        p = float(np.vdot(vec, vec).real)
        if p <= drop_tol:
            continue
        residual = PureState(vec / np.sqrt(p)) if vec.size > 1 else None
        perp = any(lbl.startswith("perp") for lbl in labels)
        out.append(OutcomeBranch(labels, p, residual, kept, perp))
    return out


def perp_probability(branches: Iterable[OutcomeBranch]) -> float:
    """Total probability landing in auto-completed basis directions."""
    return sum(b.probability for b in branches if b.perp)


def sample_counts(state: PureState, plan: MeasurementPlan, shots: int,
                  rng: np.random.Generator) -> dict[str, int]:
    """Multinomial outcome counts keyed by comma-joined labels."""
    branches = enumerate_outcomes(state, plan)
    probs = np.array([b.probability for b in branches])
    probs = probs / probs.sum()
    draws = rng.multinomial(shots, probs)
    return {b.key: int(c) for b, c in zip(branches, draws) if c}
