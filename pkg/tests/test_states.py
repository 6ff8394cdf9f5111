"""Core state container and operator plumbing."""

import numpy as np
import pytest

from quadproto.states import (
    MAX_QUBITS,
    CapacityError,
    PureState,
    apply_local,
    basis_state,
    controlled_phase,
    fidelity,
    inner,
    pauli,
    permute_qubits,
    purity,
    random_state,
    random_unitary,
    reduced_density,
    tensor,
)


def test_from_kets_round_trip():
    st = PureState.from_kets({"010": 0.6, "111": 0.8j})
    assert dict(st.ket_terms()) == {"010": (0.6 + 0j), "111": 0.8j}


def test_from_kets_normalize_drops_prefactor():
    st = PureState.from_kets({"00": 1, "11": 1}, normalize=True)
    assert abs(st.amplitudes[0] - 1 / np.sqrt(2)) < 1e-15


def test_from_kets_accumulates_duplicate_labels():
    st = PureState.from_kets([("0", 0.5), ("0", 0.5), ("1", 1 / np.sqrt(2))],
                             normalize=True)
    ratio = abs(st.amplitudes[0]) / abs(st.amplitudes[1])
    assert abs(ratio - np.sqrt(2)) < 1e-12


def test_unnormalized_rejected():
    with pytest.raises(ValueError):
        PureState(np.array([1.0, 1.0]))


def test_bad_labels_rejected():
    with pytest.raises(ValueError):
        PureState.from_kets({"0x": 1.0})
    with pytest.raises(ValueError):
        PureState.from_kets({"0": 1.0, "00": 1.0})


def test_capacity_cap():
    with pytest.raises(CapacityError):
        vec = np.zeros(2 ** (MAX_QUBITS + 1))
        vec[0] = 1.0
        PureState(vec)


def test_big_endian_labeling():
    # qubit 0 is the leftmost symbol: |10> flips qubit 0, not qubit 1
    st = apply_local(basis_state("00"), pauli("s1"), (0,))
    assert dict(st.ket_terms()) == {"10": (1 + 0j)}
    st = apply_local(basis_state("00"), pauli("s1"), (1,))
    assert dict(st.ket_terms()) == {"01": (1 + 0j)}


def test_apply_local_matches_dense_kron():
    rng = np.random.default_rng(7)
    for _ in range(50):
        n = int(rng.integers(2, 5))
        st = random_state(n, rng)
        target = int(rng.integers(0, n))
        u = random_unitary(1, rng)
        moved = apply_local(st, u, (target,))
        mats = [u.matrix if q == target else np.eye(2) for q in range(n)]
        full = mats[0]
        for m in mats[1:]:
            full = np.kron(full, m)
        assert np.allclose(moved.amplitudes, full @ st.amplitudes, atol=1e-12)


def test_apply_local_two_qubit_nonadjacent():
    rng = np.random.default_rng(11)
    st = random_state(3, rng)
    cz = controlled_phase()
    a = apply_local(st, cz, (0, 2))
    # oracle: permute target pair to the front, apply, permute back
    b = permute_qubits(st, (0, 2, 1))
    b = apply_local(b, cz, (0, 1))
    b = permute_qubits(b, (0, 2, 1))
    assert np.allclose(a.amplitudes, b.amplitudes, atol=1e-12)


def test_permute_round_trip():
    rng = np.random.default_rng(3)
    st = random_state(4, rng)
    perm = (2, 0, 3, 1)
    inverse = tuple(np.argsort(perm))
    back = permute_qubits(permute_qubits(st, perm), inverse)
    assert np.allclose(back.amplitudes, st.amplitudes, atol=1e-14)


def test_inner_fidelity_consistency():
    rng = np.random.default_rng(5)
    a, b = random_state(3, rng), random_state(3, rng)
    assert abs(fidelity(a, b) - abs(inner(a, b)) ** 2) < 1e-14
    assert abs(fidelity(a, a) - 1.0) < 1e-14


def test_tensor_orders_registers():
    st = tensor(basis_state("1"), basis_state("00"))
    assert dict(st.ket_terms()) == {"100": (1 + 0j)}


def test_reduced_density_pure_product():
    st = tensor(basis_state("0"), PureState.from_kets({"0": 1, "1": 1},
                                                      normalize=True))
    rho = reduced_density(st, (1,))
    assert abs(purity(rho) - 1.0) < 1e-12
    assert np.allclose(rho.matrix, np.full((2, 2), 0.5), atol=1e-12)


def test_reduced_density_entangled_half():
    bell = PureState.from_kets({"00": 1, "11": 1}, normalize=True)
    rho = reduced_density(bell, (0,))
    assert abs(purity(rho) - 0.5) < 1e-12


def test_pauli_algebra():
    s1, s2, s3 = (pauli(n).matrix for n in ("s1", "s2", "s3"))
    assert np.allclose(s1 @ s2, 1j * s3)
    assert np.allclose(pauli("is2").matrix, 1j * s2)


def test_randomized_core_consistency():
    # randomized block covering container + operator invariants
    rng = np.random.default_rng(2024)
    cases = 0
    for _ in range(200):
        n = int(rng.integers(1, 6))
        st = random_state(n, rng)
        assert abs(np.linalg.norm(st.amplitudes) - 1.0) < 1e-12
        u = random_unitary(1, rng)
        q = int(rng.integers(0, n))
        rotated = apply_local(st, u, (q,))
        # unitaries preserve overlaps
        other = random_state(n, rng)
        rotated_other = apply_local(other, u, (q,))
        assert abs(inner(rotated, rotated_other) - inner(st, other)) < 1e-10
        # purity of any marginal is within [1/2^k, 1]
        keep = tuple(sorted(rng.choice(n, size=max(1, n // 2), replace=False)))
        p = purity(reduced_density(st, keep))
        assert 1.0 / 2 ** len(keep) - 1e-12 <= p <= 1.0 + 1e-12
        cases += 1
    assert cases == 200


def test_random_state_seeded_determinism():
    a = random_state(3, np.random.default_rng(9))
    b = random_state(3, np.random.default_rng(9))
    assert np.array_equal(a.amplitudes, b.amplitudes)


def test_random_unitary_is_unitary():
    rng = np.random.default_rng(13)
    for n in (1, 2):
        u = random_unitary(n, rng).matrix
        assert np.allclose(u @ u.conj().T, np.eye(2 ** n), atol=1e-12)


def test_amplitudes_locked():
    st = basis_state("01")
    with pytest.raises(ValueError):
        st.amplitudes[0] = 1.0
