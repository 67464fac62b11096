import numpy as np
import pytest
from hypothesis import given, strategies as st

from hybridmeasure.classical import (
    ClassicalObservable,
    ClassicalState,
    MarkovGenerator,
    TransitionMatrix,
    apply_channel,
    apply_kraus,
    classical_expectation,
    clean_probabilities,
    detailed_balance_holds,
    elementary_kraus,
    evolve_master,
    kraus_from_transition,
    shannon_information,
)
from hybridmeasure.errors import DimensionError, NormalizationError, ValidationError
from hybridmeasure.linalg import general_exp
from hybridmeasure.random_instances import (
    random_classical_state,
    random_generator,
    random_probabilities,
    random_transition,
)

seeds = st.integers(0, 2**32 - 1)
sizes = st.integers(1, 8)


def balanced_generator(rng, pi):
    """Generator with stationary distribution ``pi`` in detailed balance."""
    n = pi.size
    s = rng.exponential(size=(n, n))
    s = s + s.T
    g = s * pi[:, None]
    np.fill_diagonal(g, 0.0)
    np.fill_diagonal(g, -g.sum(axis=0))
    return MarkovGenerator(g)


class TestState:
    def test_roundoff_clamp(self):
        p = clean_probabilities([1.0 + 5e-13, -5e-13])
        assert p[1] == 0.0 and p.sum() == pytest.approx(1.0, abs=1e-15)

    def test_negative_rejected(self):
        with pytest.raises(ValidationError):
            ClassicalState([1.1, -0.1])

    def test_sum_rejected(self):
        with pytest.raises(NormalizationError):
            ClassicalState([0.5, 0.4])

    def test_matrix_is_diagonal(self):
        m = ClassicalState([0.2, 0.8]).matrix()
        np.testing.assert_array_equal(m, np.diag([0.2, 0.8]))

    def test_energies_length(self):
        with pytest.raises(DimensionError):
            ClassicalState([0.5, 0.5], energies=[1.0])

    def test_duplicate_energies_allowed(self):
        s = ClassicalState([0.5, 0.5], energies=[1.0, 1.0])
        assert s.pointer_count == 2

    def test_immutable(self):
        s = ClassicalState([0.5, 0.5])
        with pytest.raises(ValueError):
            s.probabilities[0] = 1.0


class TestValidation:
    def test_generator_column_sum(self):
        with pytest.raises(ValidationError, match="column 1"):
            MarkovGenerator([[-1.0, 0.5], [1.0, 0.0]])

    def test_generator_negative_rate(self):
        with pytest.raises(ValidationError):
            MarkovGenerator([[1.0, 0.0], [-1.0, 0.0]])

    def test_transition_names_column(self):
        with pytest.raises(ValidationError, match="column 1"):
            kraus_from_transition(np.array([[1.0, 0.3], [0.0, 0.3]]))

    def test_transition_negative_names_column(self):
        with pytest.raises(ValidationError, match="column 0"):
            TransitionMatrix([[1.2, 0.0], [-0.2, 1.0]])


class TestKraus:
    def test_identity(self):
        ks = kraus_from_transition(TransitionMatrix(np.eye(3)))
        for j, k in enumerate(ks):
            expected = np.zeros((3, 3))
            expected[j, j] = 1
            np.testing.assert_array_equal(k, expected)

    def test_swap(self):
        k1, k2 = kraus_from_transition(TransitionMatrix([[0.0, 1.0], [1.0, 0.0]]))
        np.testing.assert_array_equal(k1, [[0, 1], [0, 0]])
        np.testing.assert_array_equal(k2, [[0, 0], [1, 0]])

    @given(seeds, sizes)
    def test_trace_preserving_on_diagonal(self, seed, n):
        ks = kraus_from_transition(random_transition(seed, n))
        total = sum(k.conj().T @ k for k in ks)
        np.testing.assert_allclose(np.diag(total), 1.0, atol=1e-10)

    def test_pointer_kraus_not_operator_complete(self):
        ks = kraus_from_transition(TransitionMatrix([[0.5, 0.5], [0.5, 0.5]]))
        total = sum(k.conj().T @ k for k in ks)
        np.testing.assert_allclose(total, np.ones((2, 2)), atol=1e-15)

    @given(seeds, sizes)
    def test_elementary_completeness(self, seed, n):
        ks = elementary_kraus(random_transition(seed, n))
        total = sum(k.conj().T @ k for k in ks)
        np.testing.assert_allclose(total, np.eye(n), atol=1e-10)

    @given(seeds, sizes)
    def test_elementary_same_action(self, seed, n):
        r = np.random.default_rng(seed)
        t = random_transition(r, n)
        rho = random_classical_state(r, n).matrix()
        np.testing.assert_allclose(
            apply_kraus(elementary_kraus(t), rho), apply_kraus(kraus_from_transition(t), rho), atol=1e-12
        )

    @given(seeds, sizes)
    def test_dual_representation(self, seed, n):
        r = np.random.default_rng(seed)
        t = random_transition(r, n)
        s = random_classical_state(r, n)
        out = apply_kraus(kraus_from_transition(t), s.matrix())
        np.testing.assert_allclose(np.diag(out).real, apply_channel(s, t).probabilities, atol=1e-12)
        np.testing.assert_allclose(out - np.diag(np.diag(out)), 0, atol=1e-15)


class TestChannel:
    def test_identity(self):
        s = ClassicalState([0.3, 0.7])
        np.testing.assert_array_equal(apply_channel(s, TransitionMatrix(np.eye(2))).probabilities, [0.3, 0.7])

    def test_swap(self):
        s = apply_channel(ClassicalState([0.3, 0.7]), TransitionMatrix([[0.0, 1.0], [1.0, 0.0]]))
        np.testing.assert_allclose(s.probabilities, [0.7, 0.3])

    def test_dimension_mismatch(self):
        with pytest.raises(DimensionError):
            apply_channel(ClassicalState([1.0]), TransitionMatrix(np.eye(2)))

    def test_positivity_randomized(self, rng):
        for _ in range(1000):
            n = int(rng.integers(1, 9))
            out = apply_channel(random_classical_state(rng, n), random_transition(rng, n))
            assert out.probabilities.min() >= -1e-12

    @given(seeds, sizes, st.floats(0, 5))
    def test_generator_channel_consistency(self, seed, n, t):
        r = np.random.default_rng(seed)
        g = random_generator(r, n)
        s = random_classical_state(r, n)
        via_t = apply_channel(s, g.transition(t)).probabilities
        np.testing.assert_allclose(via_t, evolve_master(s, g, t).probabilities, atol=1e-10)


class TestMaster:
    def test_zero_generator(self):
        s = ClassicalState([0.25, 0.75])
        g = MarkovGenerator(np.zeros((2, 2)))
        for t in (0.0, 1.0, 100.0):
            np.testing.assert_array_equal(evolve_master(s, g, t).probabilities, s.probabilities)

    def test_decay_half(self):
        g = MarkovGenerator([[-1.0, 0.0], [1.0, 0.0]])
        p = evolve_master(ClassicalState([1.0, 0.0]), g, np.log(2)).probabilities
        np.testing.assert_allclose(p, [0.5, 0.5], atol=1e-12)

    @pytest.mark.parametrize("gamma", [0.1, 1.0, 3.7])
    def test_decay_closed_form(self, gamma):
        g = MarkovGenerator([[-gamma, 0.0], [gamma, 0.0]])
        for t in np.linspace(0, 10, 21):
            p = evolve_master(ClassicalState([1.0, 0.0]), g, t).probabilities
            assert abs(p[0] - np.exp(-gamma * t)) <= 1e-10

    @given(seeds, sizes)
    def test_trace_preserved(self, seed, n):
        r = np.random.default_rng(seed)
        g, s = random_generator(r, n), random_classical_state(r, n)
        for t in (0.1, 1.0, 10.0):
            p = evolve_master(s, g, t).probabilities
            assert abs(p.sum() - 1.0) <= 1e-10
            assert p.min() >= -1e-12

    @given(seeds, sizes, st.floats(0, 1), st.floats(0, 5))
    def test_linearity(self, seed, n, lam, t):
        r = np.random.default_rng(seed)
        g = random_generator(r, n)
        a, b = random_probabilities(r, n), random_probabilities(r, n)
        mix = evolve_master(ClassicalState(lam * a + (1 - lam) * b), g, t).probabilities
        sep = lam * evolve_master(ClassicalState(a), g, t).probabilities + (1 - lam) * evolve_master(
            ClassicalState(b), g, t
        ).probabilities
        np.testing.assert_allclose(mix, sep, atol=1e-10)

    def test_negative_time(self):
        with pytest.raises(ValueError):
            evolve_master(ClassicalState([1.0]), MarkovGenerator([[0.0]]), -1.0)

    def test_transition_is_exp(self, rng):
        g = random_generator(rng, 4)
        np.testing.assert_allclose(g.transition(0.7).entries, general_exp(g.entries, 0.7), atol=1e-14)


class TestDetailedBalance:
    def test_zero_generator(self):
        assert detailed_balance_holds(MarkovGenerator(np.zeros((3, 3))), ClassicalState([0.2, 0.3, 0.5]))

    def test_symmetric_uniform(self):
        g = np.array([[-2.0, 1.0, 1.0], [1.0, -1.5, 0.5], [1.0, 0.5, -1.5]])
        assert detailed_balance_holds(MarkovGenerator(g), ClassicalState.uniform(3))

    def test_decay(self):
        g = MarkovGenerator([[-1.0, 0.0], [1.0, 0.0]])
        assert not detailed_balance_holds(g, ClassicalState([1.0, 0.0]))
        assert detailed_balance_holds(g, ClassicalState([0.0, 1.0]))

    @given(seeds, st.integers(2, 8))
    def test_balance_implies_stationary(self, seed, n):
        r = np.random.default_rng(seed)
        pi = random_probabilities(r, n)
        g = balanced_generator(r, pi)
        s = ClassicalState(pi)
        assert detailed_balance_holds(g, s, 1e-12)
        for t in (0.5, 2.0, 10.0):
            np.testing.assert_allclose(evolve_master(s, g, t).probabilities, pi, atol=1e-9)


class TestInformation:
    def test_certain(self):
        assert shannon_information(ClassicalState([1.0, 0.0])) == 0.0

    def test_coin(self):
        assert shannon_information(ClassicalState([0.5, 0.5])) == pytest.approx(np.log(2), abs=1e-15)

    def test_uniform_four(self):
        assert shannon_information(ClassicalState.uniform(4)) == pytest.approx(np.log(4), abs=1e-15)

    def test_k_scales(self):
        assert shannon_information(ClassicalState([0.5, 0.5]), 2.5) == pytest.approx(2.5 * np.log(2))

    @given(seeds, sizes)
    def test_bounds_and_permutation(self, seed, n):
        r = np.random.default_rng(seed)
        p = random_probabilities(r, n)
        h = shannon_information(ClassicalState(p))
        assert 0.0 <= h <= np.log(n) + 1e-12
        assert shannon_information(ClassicalState(r.permutation(p))) == pytest.approx(h, abs=1e-12)


class TestExpectation:
    def test_identity_observable(self, rng):
        s = random_classical_state(rng, 2)
        assert classical_expectation(ClassicalObservable([1.0, 1.0]), s) == pytest.approx(1.0)

    def test_cancellation(self):
        assert classical_expectation(ClassicalObservable([1.0, -1.0]), ClassicalState([0.5, 0.5])) == 0.0

    @given(seeds, sizes)
    def test_matrix_trace_form(self, seed, n):
        r = np.random.default_rng(seed)
        f = ClassicalObservable(r.normal(size=n))
        s = random_classical_state(r, n)
        direct = classical_expectation(f, s)
        assert abs(direct - np.trace(f.matrix() @ s.matrix()).real) <= 1e-12

    def test_mismatch(self):
        with pytest.raises(DimensionError):
            classical_expectation(ClassicalObservable([1.0]), ClassicalState([0.5, 0.5]))
