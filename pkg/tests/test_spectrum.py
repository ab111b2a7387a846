import math

import numpy as np
import pytest

from tiltwell import (
    ModelParams,
    build_hamiltonian,
    decompose,
    eigendecompose,
    hamiltonian_bands,
    near_degenerate_pair_at_resonance,
    pair_gap_highprec,
    resonant_splitting,
    splitting_top_pair,
    symmetric_splitting,
)

from oracles import inverse_iteration_vector, sturm_eigenvalues


def test_two_state_eigenvalues():
    d = eigendecompose(np.array([[0.0, -1.0], [-1.0, 0.0]]))
    assert np.allclose(d.eigenvalues, [-1.0, 1.0], atol=1e-15)


def test_free_three_state_eigenvalues():
    h = build_hamiltonian(ModelParams(n_atoms=2, hopping=1.0))
    d = eigendecompose(h)
    assert np.allclose(d.eigenvalues, [-2.0, 0.0, 2.0], atol=1e-14)


def test_top_pair_gap_against_block_diagonalization():
    # N=2, J = 0.1 U: parity blocks give top gap (sqrt(1.04) - 1) U exactly
    params = ModelParams(n_atoms=2, hopping=0.1, interaction=1.0)
    gap = splitting_top_pair(decompose(params))
    assert gap == pytest.approx(0.01980390271855703, rel=1e-12)


def test_top_pair_two_state():
    gap = splitting_top_pair(decompose(ModelParams(n_atoms=1, hopping=1.0)))
    assert gap == pytest.approx(2.0, rel=1e-14)


def test_orthonormality_and_reconstruction():
    rng = np.random.default_rng(42)
    for _ in range(15):
        n = int(rng.integers(1, 30))
        params = ModelParams(
            n_atoms=n,
            hopping=float(rng.uniform(0, 2)),
            interaction=float(rng.uniform(-1, 1)),
            tilt=float(rng.uniform(-3, 3)),
        )
        h = build_hamiltonian(params)
        d = eigendecompose(h)
        v = d.eigenvectors
        assert np.max(np.abs(v.T @ v - np.eye(n + 1))) <= 1e-10
        recon = v @ np.diag(d.eigenvalues) @ v.T
        assert np.max(np.abs(recon - h)) <= 1e-10 * max(np.max(np.abs(h)), 1.0)
        # trace identity
        assert np.sum(d.eigenvalues) == pytest.approx(
            np.trace(h), rel=1e-10, abs=1e-10
        )


def test_eigenvalues_ascending_and_signs_deterministic():
    params = ModelParams(n_atoms=12, hopping=0.6, interaction=0.8, tilt=0.5)
    d1 = decompose(params)
    d2 = decompose(params)
    assert np.all(np.diff(d1.eigenvalues) >= 0)
    assert np.array_equal(d1.eigenvalues, d2.eigenvalues)
    assert np.array_equal(d1.eigenvectors, d2.eigenvectors)
    for col in d1.eigenvectors.T:
        assert col[np.argmax(np.abs(col))] > 0


def test_parity_of_eigenvectors_symmetric_well():
    # resolvable spectra only; parity defect <= 1e-8 under n -> N - n
    for n, zeta in ((4, 0.5), (6, 0.8), (10, math.inf)):
        u = 0.0 if math.isinf(zeta) else 1.0
        j = 1.0 if math.isinf(zeta) else zeta * u
        d = decompose(ModelParams(n_atoms=n, hopping=j, interaction=u))
        for col in d.eigenvectors.T:
            defect = min(
                np.max(np.abs(col - col[::-1])), np.max(np.abs(col + col[::-1]))
            )
            assert defect <= 1e-8


def test_against_sturm_bisection_oracle():
    rng = np.random.default_rng(77)
    for _ in range(10):
        n = int(rng.integers(1, 7))
        params = ModelParams(
            n_atoms=n,
            hopping=float(rng.uniform(0.1, 2)),
            interaction=float(rng.uniform(-1, 1)),
            tilt=float(rng.uniform(-2, 2)),
        )
        h = build_hamiltonian(params)
        d = eigendecompose(h)
        diag, off = hamiltonian_bands(params)
        reference = sturm_eigenvalues(diag, off)
        assert np.allclose(d.eigenvalues, reference, atol=1e-8 * max(1, np.max(np.abs(h))))
        # vectors: inverse iteration agrees up to sign for isolated eigenvalues
        gaps = np.diff(d.eigenvalues)
        for k in range(n + 1):
            isolated = (k == 0 or gaps[k - 1] > 1e-6) and (
                k == n or gaps[k] > 1e-6
            )
            if not isolated:
                continue
            v_ref = inverse_iteration_vector(h, reference[k])
            assert abs(abs(v_ref @ d.eigenvectors[:, k]) - 1.0) <= 1e-8


def test_input_validation():
    with pytest.raises(ValueError):
        eigendecompose(np.array([[0.0, 1.0], [2.0, 0.0]]))  # not symmetric
    full = np.ones((4, 4))
    with pytest.raises(ValueError):
        eigendecompose(full)  # not tridiagonal
    with pytest.raises(ValueError):
        eigendecompose(np.ones((3, 2)))


# ---------------------------------------------------------------- resonant pair

def test_resonant_pair_first_resonance_three_states():
    params = ModelParams(n_atoms=2, hopping=0.1, interaction=1.0, tilt=2.0)
    pair = near_degenerate_pair_at_resonance(decompose(params), p=1)
    assert pair is not None
    assert pair.branch_indices == (0, 1)
    # degenerate 2x2 coupling -J*sqrt(2) gives a 2*sqrt(2)*J splitting
    assert pair.gap == pytest.approx(0.28284271247461906, rel=5e-3)
    assert pair.balanced


def test_resonant_pair_seven_atoms_second_resonance():
    params = ModelParams(n_atoms=7, hopping=0.1, interaction=1.0, tilt=4.0)
    pair = near_degenerate_pair_at_resonance(decompose(params), p=2)
    assert pair is not None
    assert pair.branch_indices == (0, 5)
    assert pair.support >= 0.9
    assert pair.asymmetry <= 0.05
    formula = resonant_splitting(7, 2, 0.1, 1.0).to_float()
    assert pair.gap == pytest.approx(formula, rel=0.10)


def test_off_resonance_reports_none():
    params = ModelParams(n_atoms=7, hopping=0.1, interaction=1.0, tilt=3.0)
    decomp = decompose(params)
    assert near_degenerate_pair_at_resonance(decomp, p=1) is None
    assert near_degenerate_pair_at_resonance(decomp, p=2) is None


def test_resonant_pair_invalid_p():
    decomp = decompose(ModelParams(n_atoms=3, hopping=0.1, interaction=1.0))
    with pytest.raises(ValueError):
        near_degenerate_pair_at_resonance(decomp, p=3)
    with pytest.raises(ValueError):
        near_degenerate_pair_at_resonance(decomp, p=-1)


# ---------------------------------------------------------------- high precision

def test_highprec_gap_matches_double_when_resolvable():
    params = ModelParams(n_atoms=2, hopping=0.1, interaction=1.0)
    diag, off = hamiltonian_bands(params)
    gap = pair_gap_highprec(diag, off, 1)
    assert gap.to_float() == pytest.approx(0.01980390271855703, rel=1e-10)


def test_highprec_gap_below_double_floor():
    # N=10, zeta=0.05: splitting ~1e-20 of the interaction unit, far below
    # eps * ||H||; extended precision must still match perturbation theory
    zeta = 0.05
    params = ModelParams(n_atoms=10, hopping=zeta, interaction=1.0)
    diag, off = hamiltonian_bands(params)
    gap = pair_gap_highprec(diag, off, 9)
    formula = symmetric_splitting(10, zeta, 1.0)
    assert gap.ln_magnitude < math.log(1e-18)
    rel = abs(math.expm1(gap.ln_magnitude - formula.ln_magnitude))
    assert rel <= 3 * zeta**2


def test_highprec_gap_index_validation():
    diag, off = hamiltonian_bands(ModelParams(n_atoms=3, hopping=0.2, interaction=1.0))
    with pytest.raises(ValueError):
        pair_gap_highprec(diag, off, 3)
