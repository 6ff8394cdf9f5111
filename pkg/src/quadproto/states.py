"""Exact pure-state linear algebra for small qubit registers.

Big-endian labeling throughout: qubit 0 is the leftmost symbol of a ket
label, so in |011> qubit 0 is |0> and qubits 1, 2 are |1>.  States and
operators are immutable values; every operation returns a fresh object.
"""
from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Mapping, Sequence

import numpy as np

MAX_QUBITS = 12
NORM_TOL = 1e-12
UNITARY_TOL = 1e-12
PSD_TOL = 1e-10


class CapacityError(ValueError):
    """A register would exceed the supported qubit count."""


def _lock(arr: np.ndarray) -> np.ndarray:
    arr.setflags(write=False)
    return arr


def _qubit_count(dim: int) -> int:
    n = dim.bit_length() - 1
    if dim <= 0 or dim != 1 << n:
        raise ValueError(f"dimension {dim} is not a power of two")
    return n


@dataclass(frozen=True, eq=False)
class PureState:
    """Normalized complex amplitudes over the 2**n computational labels."""

    amplitudes: np.ndarray

    def __post_init__(self) -> None:
        arr = np.array(self.amplitudes, dtype=np.complex128)
        if arr.ndim != 1:
            raise ValueError("amplitudes must be a flat vector")
        n = _qubit_count(arr.size)
        if n > MAX_QUBITS:
            raise CapacityError(f"{n} qubits exceeds the {MAX_QUBITS}-qubit capacity")
        norm = float(np.linalg.norm(arr))
        # written so NaN fails too
        if not abs(norm - 1.0) <= NORM_TOL:
            raise ValueError(f"state norm {norm!r} deviates from 1 beyond {NORM_TOL}")
        object.__setattr__(self, "amplitudes", _lock(arr))

    @property
    def num_qubits(self) -> int:
        return self.amplitudes.size.bit_length() - 1

    @property
    def dim(self) -> int:
        return self.amplitudes.size

    @classmethod
    def from_kets(cls, terms: Mapping[str, complex] | Iterable[tuple[str, complex]],
                  normalize: bool = False) -> "PureState":
        """Build a state from {label: amplitude} ket terms.

        Labels are bit strings of one common length.  With normalize=True the
        vector is rescaled to unit norm, so printed prefactors can be ignored.
        """
        items = list(terms.items()) if isinstance(terms, Mapping) else list(terms)
        if not items:
            raise ValueError("at least one ket term is required")
        width = len(items[0][0])
        vec = np.zeros(1 << width, dtype=np.complex128)
        for label, amp in items:
            if len(label) != width or set(label) - {"0", "1"}:
                raise ValueError(f"bad ket label {label!r}")
            vec[int(label, 2)] += amp
        if normalize:
            norm = np.linalg.norm(vec)
            if norm < NORM_TOL:
                raise ValueError("cannot normalize the zero vector")
            vec = vec / norm
        return cls(vec)

    def ket_terms(self, tol: float = 1e-12) -> list[tuple[str, complex]]:
        """Nonzero (label, amplitude) pairs in label order."""
        n = self.num_qubits
        return [(format(i, f"0{n}b") if n else "", complex(a))
                for i, a in enumerate(self.amplitudes) if abs(a) > tol]


def basis_state(label: str) -> PureState:
    """Computational basis ket for a bit-string label."""
    return PureState.from_kets({label: 1.0})


@dataclass(frozen=True, eq=False)
class LocalUnitary:
    """Unitary matrix on a small register, checked to UNITARY_TOL."""

    matrix: np.ndarray
    name: str = ""

    def __post_init__(self) -> None:
        mat = np.array(self.matrix, dtype=np.complex128)
        if mat.ndim != 2 or mat.shape[0] != mat.shape[1]:
            raise ValueError("unitary must be square")
        _qubit_count(mat.shape[0])
        dev = np.abs(mat.conj().T @ mat - np.eye(mat.shape[0])).max()
        if dev > UNITARY_TOL:
            raise ValueError(f"matrix fails unitarity by {dev:.3e}")
        object.__setattr__(self, "matrix", _lock(mat))
        object.__setattr__(self, "name", str(self.name))

    @property
    def num_qubits(self) -> int:
        return self.matrix.shape[0].bit_length() - 1


@dataclass(frozen=True, eq=False)
class DensityMatrix:
    """Hermitian, unit-trace, positive-semidefinite operator."""

    matrix: np.ndarray

    def __post_init__(self) -> None:
        mat = np.array(self.matrix, dtype=np.complex128)
        if mat.ndim != 2 or mat.shape[0] != mat.shape[1]:
            raise ValueError("density matrix must be square")
        _qubit_count(mat.shape[0])
        if np.abs(mat - mat.conj().T).max() > 1e-12:
            raise ValueError("density matrix is not Hermitian within 1e-12")
        if abs(np.trace(mat).real - 1.0) > 1e-12 or abs(np.trace(mat).imag) > 1e-12:
            raise ValueError("density matrix trace deviates from 1")
        if np.linalg.eigvalsh(mat).min() < -PSD_TOL:
            raise ValueError("density matrix has an eigenvalue below -1e-10")
        object.__setattr__(self, "matrix", _lock(mat))

    @property
    def num_qubits(self) -> int:
        return self.matrix.shape[0].bit_length() - 1


# Single-qubit constants.  is2 denotes i*sigma_2, the real rotation used in
# correction tables so that every allowed operation has real entries.
SIGMA = {
    "s0": np.eye(2, dtype=np.complex128),
    "s1": np.array([[0, 1], [1, 0]], dtype=np.complex128),
    "s2": np.array([[0, -1j], [1j, 0]], dtype=np.complex128),
    "is2": np.array([[0, 1], [-1, 0]], dtype=np.complex128),
    "s3": np.array([[1, 0], [0, -1]], dtype=np.complex128),
}
for _m in SIGMA.values():
    _m.setflags(write=False)

CZ_MATRIX = _lock(np.diag([1, 1, 1, -1]).astype(np.complex128))


def pauli(name: str) -> LocalUnitary:
    """One of s0, s1, s2, is2, s3 as a LocalUnitary."""
    return LocalUnitary(SIGMA[name], name=name)


def controlled_phase() -> LocalUnitary:
    """Two-qubit controlled phase, diag(1, 1, 1, -1)."""
    return LocalUnitary(CZ_MATRIX, name="cz")


def tensor(a: PureState, b: PureState) -> PureState:
    """Kronecker product; a's qubits occupy the leading label positions."""
    if a.num_qubits + b.num_qubits > MAX_QUBITS:
        raise CapacityError("tensor product exceeds the qubit capacity")
    return PureState(np.kron(a.amplitudes, b.amplitudes))


def _resolve_matrix(u: LocalUnitary | np.ndarray) -> np.ndarray:
    if isinstance(u, LocalUnitary):
        return u.matrix
    return LocalUnitary(np.asarray(u)).matrix


def apply_local(state: PureState, u: LocalUnitary | np.ndarray,
                targets: Sequence[int]) -> PureState:
    """Apply a unitary to the listed qubits, identity elsewhere.

    The order of targets fixes which qubit each tensor factor of u acts on.
    """
    mat = _resolve_matrix(u)
    targets = tuple(targets)
    n = state.num_qubits
    if len(set(targets)) != len(targets):
        raise ValueError("duplicate target qubit")
    if any(t < 0 or t >= n for t in targets):
        raise ValueError("target qubit out of range")
    if mat.shape[0] != 1 << len(targets):
        raise ValueError("operator size does not match target count")
    rest = [i for i in range(n) if i not in targets]
    perm = list(targets) + rest
    psi = state.amplitudes.reshape([2] * n).transpose(perm)
    psi = mat @ psi.reshape(1 << len(targets), -1)
    psi = psi.reshape([2] * n).transpose(np.argsort(perm)).reshape(-1)
    return PureState(psi)


def permute_qubits(state: PureState, perm: Sequence[int]) -> PureState:
    """Relabel qubits: qubit i of the input becomes qubit perm[i]."""
    n = state.num_qubits
    perm = tuple(perm)
    if sorted(perm) != list(range(n)):
        raise ValueError("perm must be a permutation of range(num_qubits)")
    inverse = np.argsort(perm)
    out = state.amplitudes.reshape([2] * n).transpose(inverse).reshape(-1)
    return PureState(out)


def inner(a: PureState, b: PureState) -> complex:
    """<a|b> with the left argument conjugated."""
    if a.num_qubits != b.num_qubits:
        raise ValueError("states live on different registers")
    return complex(np.vdot(a.amplitudes, b.amplitudes))


def fidelity(a: PureState, b: PureState) -> float:
    """|<a|b>|**2, insensitive to global phase on either state."""
    return float(abs(inner(a, b)) ** 2)


def reduced_density(state: PureState, keep: Sequence[int]) -> DensityMatrix:
    """Partial trace onto the kept qubits, ordered as listed."""
    keep = tuple(keep)
    n = state.num_qubits
    if not keep or len(set(keep)) != len(keep):
        raise ValueError("keep must be a nonempty set of distinct qubits")
    if any(q < 0 or q >= n for q in keep):
        raise ValueError("kept qubit out of range")
    env = [i for i in range(n) if i not in keep]
    psi = state.amplitudes.reshape([2] * n).transpose(list(keep) + env)
    psi = psi.reshape(1 << len(keep), -1)
    return DensityMatrix(psi @ psi.conj().T)


def purity(rho: DensityMatrix | np.ndarray) -> float:
    """Tr(rho**2); equals 1 exactly for pure states."""
    mat = rho.matrix if isinstance(rho, DensityMatrix) else np.asarray(rho)
    return float(np.trace(mat @ mat).real)


def random_state(num_qubits: int, rng: np.random.Generator) -> PureState:
    """Haar-distributed pure state drawn from the given generator."""
    vec = rng.normal(size=1 << num_qubits) + 1j * rng.normal(size=1 << num_qubits)
    return PureState(vec / np.linalg.norm(vec))


def random_unitary(num_qubits: int, rng: np.random.Generator) -> LocalUnitary:
    """Haar-distributed unitary via QR of a Ginibre matrix."""
    dim = 1 << num_qubits
    z = rng.normal(size=(dim, dim)) + 1j * rng.normal(size=(dim, dim))
    q, r = np.linalg.qr(z)
    q = q * (np.diagonal(r) / np.abs(np.diagonal(r)))
    return LocalUnitary(q)
