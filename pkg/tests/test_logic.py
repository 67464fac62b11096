import itertools

import numpy as np
import pytest
from hypothesis import given, strategies as st

from hybridmeasure.errors import CompatibilityError, DimensionError, ValidationError
from hybridmeasure.logic import (
    Proposition,
    boolean_sublattice_check,
    compatible,
    complement,
    conjunction,
    disjunction,
    from_pointer_subset,
    power_set_family,
    truth_probability,
)
from hybridmeasure.quantum import QuantumState
from hybridmeasure.random_instances import random_quantum_state

seeds = st.integers(0, 2**32 - 1)
ALIVE = from_pointer_subset(2, [0])
DEAD = from_pointer_subset(2, [1])
P0 = Proposition.from_vector([1, 0])
PPLUS = Proposition.from_vector([1, 1])


def random_projector(rng, d, k):
    q, _ = np.linalg.qr(rng.normal(size=(d, d)) + 1j * rng.normal(size=(d, d)))
    return Proposition(q[:, :k] @ q[:, :k].conj().T), q[:, :k]


class TestProposition:
    def test_not_idempotent(self):
        with pytest.raises(ValidationError):
            Proposition(np.diag([1.0, 0.5]))

    def test_not_hermitian(self):
        with pytest.raises(ValidationError):
            Proposition(np.array([[1.0, 1.0], [0.0, 0.0]]))

    def test_snapping(self, rng):
        p, _ = random_projector(rng, 4, 2)
        noisy = p.projector + 1e-12 * np.diag([1, -1, 1, -1])
        snapped = Proposition(noisy)
        assert np.max(np.abs(snapped.projector @ snapped.projector - snapped.projector)) <= 1e-14

    def test_diagonal_exact(self):
        assert np.array_equal(ALIVE.projector, np.diag([1, 0]))


class TestSubsets:
    @pytest.mark.parametrize("n", [1, 3, 5])
    def test_full_and_empty(self, n):
        assert np.array_equal(from_pointer_subset(n, range(n)).projector, np.eye(n))
        assert np.array_equal(from_pointer_subset(n, []).projector, np.zeros((n, n)))

    def test_cat_alive_or_dead(self):
        assert np.array_equal(from_pointer_subset(2, [0, 1]).projector, np.eye(2))

    def test_bounds(self):
        with pytest.raises(IndexError):
            from_pointer_subset(2, [2])


class TestConnectives:
    def test_compatibility(self):
        assert compatible(ALIVE, DEAD)
        assert not compatible(P0, PPLUS)
        assert compatible(PPLUS, Proposition.identity(2))

    def test_dimension(self):
        with pytest.raises(DimensionError):
            compatible(ALIVE, Proposition.identity(3))

    def test_cat_exact(self):
        assert np.array_equal(conjunction(ALIVE, DEAD).projector, np.zeros((2, 2)))
        assert np.array_equal(disjunction(ALIVE, DEAD).projector, np.eye(2))
        assert complement(ALIVE) == DEAD

    def test_incompatible_raises(self):
        with pytest.raises(CompatibilityError):
            conjunction(P0, PPLUS)
        with pytest.raises(CompatibilityError):
            disjunction(P0, PPLUS)

    @given(seeds, st.integers(1, 5), st.data())
    def test_identities(self, seed, d, data):
        r = np.random.default_rng(seed)
        p, _ = random_projector(r, d, data.draw(st.integers(0, d)))
        one, zero = Proposition.identity(d), Proposition.zero(d)
        assert conjunction(p, p).close_to(p)
        assert conjunction(p, one).close_to(p)
        assert disjunction(p, zero).close_to(p)
        assert disjunction(p, p).close_to(p)
        assert complement(complement(p)).close_to(p)

    @given(st.integers(1, 6), st.data())
    def test_de_morgan(self, n, data):
        a = data.draw(st.sets(st.integers(0, n - 1)))
        b = data.draw(st.sets(st.integers(0, n - 1)))
        p, q = from_pointer_subset(n, a), from_pointer_subset(n, b)
        lhs = complement(disjunction(p, q))
        rhs = conjunction(complement(p), complement(q))
        assert lhs.close_to(rhs, 1e-10)
        assert lhs == from_pointer_subset(n, set(range(n)) - (a | b))


class TestTruth:
    def test_eigenstate(self):
        assert truth_probability(P0, QuantumState.pure([1, 0])) == 1.0

    def test_cat(self):
        assert truth_probability(ALIVE, QuantumState(np.eye(2) / 2)) == 0.5

    def test_zero(self, rng):
        assert truth_probability(Proposition.zero(3), random_quantum_state(rng, 3)) == 0.0

    def test_dimension(self):
        with pytest.raises(DimensionError):
            truth_probability(ALIVE, QuantumState(np.eye(3) / 3))

    @given(seeds, st.integers(1, 6), st.data())
    def test_range_vector_certain(self, seed, d, data):
        r = np.random.default_rng(seed)
        p, q = random_projector(r, d, data.draw(st.integers(1, d)))
        v = q @ (r.normal(size=q.shape[1]) + 1j * r.normal(size=q.shape[1]))
        assert abs(truth_probability(p, QuantumState.pure(v)) - 1.0) <= 1e-10


class TestSublattice:
    @pytest.mark.parametrize("n", range(1, 7))
    def test_power_sets(self, n):
        family = power_set_family(n)
        assert len(family) == 2**n
        assert boolean_sublattice_check(family)

    def test_noncommuting_pair(self):
        assert not boolean_sublattice_check([P0, PPLUS])

    def test_trivial(self):
        assert boolean_sublattice_check([Proposition.zero(3), Proposition.identity(3)])

    def test_not_closed(self):
        assert not boolean_sublattice_check([ALIVE, Proposition.zero(2), Proposition.identity(2)])

    def test_rotated_power_set(self, rng):
        q, _ = np.linalg.qr(rng.normal(size=(3, 3)) + 1j * rng.normal(size=(3, 3)))
        family = [Proposition(q @ p.projector @ q.conj().T) for p in power_set_family(3)]
        assert boolean_sublattice_check(family)

    @given(st.integers(1, 6), st.data())
    def test_distributive_on_random_triples(self, n, data):
        subsets = [data.draw(st.sets(st.integers(0, n - 1))) for _ in range(3)]
        p, q, r = (from_pointer_subset(n, s) for s in subsets)
        lhs = conjunction(p, disjunction(q, r))
        rhs = disjunction(conjunction(p, q), conjunction(p, r))
        assert lhs.close_to(rhs, 1e-10)

    def test_all_triples_n3(self):
        fam = power_set_family(3)
        for p, q, r in itertools.product(fam, repeat=3):
            assert conjunction(p, disjunction(q, r)) == disjunction(conjunction(p, q), conjunction(p, r))
