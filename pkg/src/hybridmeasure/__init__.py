"""
hybridmeasure: quantum measurement with a classical apparatus.

A measuring apparatus with pointer states ``|E_i>`` is coupled to a quantum
system so that the joint state keeps the block form
``sum_i p_i |E_i><E_i| (x) rho_S^(i)``. The package provides the classical
and quantum dynamics, the classicality-compatible measurement Hamiltonian,
registration and Born-rule reduction, information bookkeeping, a Boolean
proposition calculus and seeded trajectory scenarios.
"""

from .classical import (
    ClassicalObservable,
    ClassicalState,
    MarkovGenerator,
    TransitionMatrix,
    apply_channel,
    apply_kraus,
    classical_expectation,
    detailed_balance_holds,
    elementary_kraus,
    evolve_master,
    kraus_from_transition,
    shannon_information,
)
from .errors import (
    ClassicalityError,
    CompatibilityError,
    ConfigError,
    ContractError,
    DimensionError,
    ImpossibleOutcomeError,
    NormalizationError,
    StateValidationError,
    UndefinedConditionalError,
    ValidationError,
)
from .hybrid import (
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
from .linalg import (
    PAULI_X,
    PAULI_Y,
    PAULI_Z,
    commutator,
    general_exp,
    is_hermitian,
    is_positive_semidefinite,
    kron,
    partial_trace_apparatus,
    partial_trace_system,
    unitary_exp,
)
from .logic import (
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
from .measurement import (
    ClassicalityVerdict,
    CompletionEvent,
    Context,
    GeneralHamiltonian,
    InformationLedger,
    MeasurementHamiltonian,
    build_measurement_hamiltonian,
    check_classicality,
    classify_context,
    coherence_growth_prediction,
    complete_measurement,
    complete_outcome,
    evolve_hybrid,
    exact_pointer_coherence,
    information_ledger,
    register,
    register_outcome,
    stern_gerlach_hamiltonian,
)
from .quantum import (
    MeasurementBasis,
    QuantumState,
    born_probabilities,
    born_probability,
    reduce_state,
    von_neumann_entropy,
    von_neumann_evolve,
)
from .scenarios import (
    Action,
    ScenarioConfig,
    build_scenario,
    config_from_dict,
    config_to_dict,
    run_trajectories,
)
from .formats import emit_outputs

__version__ = "0.1.0"
