import numpy as np
import pytest
from hypothesis import given, strategies as st

from hybridmeasure.classical import TransitionMatrix, apply_kraus, kraus_from_transition
from hybridmeasure.errors import (
    ClassicalityError,
    DimensionError,
    NormalizationError,
    StateValidationError,
    UndefinedConditionalError,
)
from hybridmeasure.hybrid import (
    HybridState,
    apply_pointer_channel,
    assemble_hybrid,
    conditional_state,
    pointer_probability,
    product_state,
    reduce_to_apparatus,
    reduce_to_system,
    validate_hybrid_matrix,
)
from hybridmeasure.linalg import basis_projector, kron, partial_trace_apparatus, partial_trace_system
from hybridmeasure.quantum import QuantumState
from hybridmeasure.random_instances import random_hybrid, random_transition, random_unit_vector

seeds = st.integers(0, 2**32 - 1)
dims = st.integers(1, 4)


def oracle_matrix(weights, blocks):
    """sum_i p_i |E_i><E_i| (x) rho_i written out with explicit Kronecker products."""
    n = len(weights)
    return sum(
        w * kron(basis_projector(n, i), b.matrix) for i, (w, b) in enumerate(zip(weights, blocks)) if b is not None
    )


class TestAssemble:
    def test_single_pointer(self, rng):
        rho = QuantumState(np.diag([0.3, 0.7]))
        s = assemble_hybrid([1.0], [rho])
        np.testing.assert_allclose(s.materialize(), rho.matrix)

    def test_identical_blocks_factorize(self):
        plus = QuantumState.pure([1, 1])
        s = assemble_hybrid([0.5, 0.5], [plus, plus])
        np.testing.assert_allclose(s.materialize(), kron(np.diag([0.5, 0.5]), plus.matrix), atol=1e-15)
        np.testing.assert_allclose(reduce_to_system(s).matrix, plus.matrix, atol=1e-15)

    def test_weight_sum(self):
        with pytest.raises(NormalizationError):
            assemble_hybrid([0.5, 0.6], [np.eye(2) / 2, np.eye(2) / 2])

    def test_invalid_block_named(self):
        with pytest.raises(StateValidationError) as info:
            assemble_hybrid([0.5, 0.5], [np.eye(2) / 2, np.diag([1.5, -0.5])])
        assert info.value.block == 1

    def test_zero_weight_block_absent(self):
        s = assemble_hybrid([1.0, 0.0], [np.eye(2) / 2, np.diag([7.0, 7.0])])
        assert s.blocks[1] is None

    def test_missing_block_needs_zero_weight(self):
        with pytest.raises(StateValidationError):
            HybridState(np.array([0.5, 0.5]), (QuantumState.maximally_mixed(2), None))

    def test_mixed_dims(self):
        with pytest.raises(DimensionError):
            assemble_hybrid([0.5, 0.5], [np.eye(2) / 2, np.eye(3) / 3])

    @given(seeds, dims, dims)
    def test_materialize_matches_oracle(self, seed, n, d):
        s = random_hybrid(seed, n, d)
        np.testing.assert_allclose(s.materialize(), oracle_matrix(s.weights, s.blocks), atol=1e-15)


class TestValidate:
    def test_maximally_mixed(self):
        s = validate_hybrid_matrix(kron(np.diag([0.5, 0.5]), np.eye(2) / 2), 2, 2)
        np.testing.assert_allclose(s.weights, [0.5, 0.5])
        for b in s.blocks:
            np.testing.assert_allclose(b.matrix, np.eye(2) / 2)

    def test_bell_state(self):
        v = np.array([1, 0, 0, 1]) / np.sqrt(2)
        with pytest.raises(ClassicalityError) as info:
            validate_hybrid_matrix(np.outer(v, v), 2, 2)
        assert info.value.block == (0, 1)
        assert info.value.magnitude == pytest.approx(0.5)

    def test_trace(self):
        with pytest.raises(StateValidationError, match="trace"):
            validate_hybrid_matrix(0.9 * np.eye(4) / 4, 2, 2)

    def test_not_hermitian(self):
        m = np.eye(4) / 4
        m[0, 1] = 0.1
        with pytest.raises(StateValidationError, match="Hermitian"):
            validate_hybrid_matrix(m, 2, 2)

    def test_not_positive(self):
        m = np.diag([0.6, -0.1, 0.25, 0.25])
        with pytest.raises(StateValidationError, match="positive"):
            validate_hybrid_matrix(m, 2, 2)

    def test_shape(self):
        with pytest.raises(DimensionError):
            validate_hybrid_matrix(np.eye(4) / 4, 2, 3)

    def test_zero_weight_pointer(self):
        m = kron(np.diag([1.0, 0.0]), np.eye(2) / 2)
        s = validate_hybrid_matrix(m, 2, 2)
        assert s.blocks[1] is None

    @given(seeds, dims, dims)
    def test_round_trip(self, seed, n, d):
        s = random_hybrid(seed, n, d)
        parsed = validate_hybrid_matrix(s.materialize(), n, d)
        np.testing.assert_allclose(parsed.weights, s.weights, atol=1e-12)
        for a, b in zip(parsed.blocks, s.blocks):
            np.testing.assert_allclose(a.matrix, b.matrix, atol=1e-12)
        again = assemble_hybrid(parsed.weights, parsed.blocks)
        np.testing.assert_allclose(again.materialize(), s.materialize(), atol=1e-12)

    @given(seeds, st.integers(2, 4), dims)
    def test_coherence_detected(self, seed, n, d):
        r = np.random.default_rng(seed)
        m = random_hybrid(r, n, d).materialize()
        i, j = r.choice(n, size=2, replace=False)
        m[i * d, j * d] += 1e-6
        m[j * d, i * d] += 1e-6
        with pytest.raises((ClassicalityError, StateValidationError)):
            validate_hybrid_matrix(m, n, d)


class TestReductions:
    def test_pointer_probability(self, rng):
        s = random_hybrid(rng, 3, 2)
        m = s.materialize()
        for i in range(3):
            oracle = np.trace(kron(basis_projector(3, i), np.eye(2)) @ m).real
            assert abs(pointer_probability(s, i) - oracle) <= 1e-12
        with pytest.raises(IndexError):
            pointer_probability(s, 3)

    def test_product_state(self, rng):
        rho = QuantumState(np.diag([0.25, 0.75]))
        s = product_state(rho, 1)
        assert pointer_probability(s, 0) == 1.0
        assert conditional_state(s, 0) == rho
        np.testing.assert_array_equal(reduce_to_apparatus(s).probabilities, [1.0])

    def test_cat_weights(self):
        s = assemble_hybrid([0.5, 0.5], [QuantumState.pure([1, 0]), QuantumState.pure([0, 1])])
        assert pointer_probability(s, 0) == pointer_probability(s, 1) == 0.5
        np.testing.assert_array_equal(reduce_to_apparatus(s).probabilities, [0.5, 0.5])

    def test_undefined_conditional(self):
        s = product_state(QuantumState.maximally_mixed(2), 2, 0)
        with pytest.raises(UndefinedConditionalError):
            conditional_state(s, 1)

    def test_single_block_system(self, rng):
        rho = QuantumState(np.diag([0.1, 0.9]))
        np.testing.assert_allclose(reduce_to_system(product_state(rho, 3, 2)).matrix, rho.matrix)

    @given(seeds, dims, dims)
    def test_against_partial_traces(self, seed, n, d):
        s = random_hybrid(seed, n, d)
        m = s.materialize()
        np.testing.assert_allclose(reduce_to_apparatus(s).matrix(), partial_trace_system(m, n, d), atol=1e-12)
        np.testing.assert_allclose(reduce_to_system(s).matrix, partial_trace_apparatus(m, n, d), atol=1e-12)
        assert abs(s.weights.sum() - np.trace(m).real) <= 1e-12
        assert abs(np.trace(reduce_to_system(s).matrix) - np.trace(m)) <= 1e-12

    @given(seeds, dims, dims)
    def test_extraction_formula(self, seed, n, d):
        s = random_hybrid(seed, n, d)
        m = s.materialize()
        for i in range(n):
            proj = kron(basis_projector(n, i), np.eye(d))
            block = partial_trace_apparatus(proj @ m, n, d) / s.weights[i]
            np.testing.assert_allclose(block, conditional_state(s, i).matrix, atol=1e-12)

    @given(seeds, dims, dims)
    def test_positivity_inheritance(self, seed, n, d):
        r = np.random.default_rng(seed)
        s = random_hybrid(r, n, d)
        for _ in range(5):
            phi = random_unit_vector(r, d)
            for _, _, b in s.present():
                assert np.real(phi.conj() @ b.matrix @ phi) >= -1e-12


class TestPointerChannel:
    @given(seeds, dims, dims)
    def test_matches_lifted_kraus(self, seed, n, d):
        r = np.random.default_rng(seed)
        s, t = random_hybrid(r, n, d), random_transition(r, n)
        lifted = [kron(k, np.eye(d)) for k in kraus_from_transition(t)]
        oracle = apply_kraus(lifted, s.materialize())
        np.testing.assert_allclose(apply_pointer_channel(s, t).materialize(), oracle, atol=1e-12)

    def test_swap(self):
        a, b = QuantumState.pure([1, 0]), QuantumState.pure([0, 1])
        s = apply_pointer_channel(assemble_hybrid([0.3, 0.7], [a, b]), TransitionMatrix([[0, 1], [1, 0]]))
        np.testing.assert_allclose(s.weights, [0.7, 0.3])
        assert s.blocks[0] == b and s.blocks[1] == a

    def test_dimension(self):
        with pytest.raises(DimensionError):
            apply_pointer_channel(product_state(QuantumState.pure([1, 0])), TransitionMatrix(np.eye(2)))
