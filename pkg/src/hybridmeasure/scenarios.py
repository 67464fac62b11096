"""
Scenario configuration and seeded trajectory execution.

A scenario fixes the pointer labels and initial hybrid state, the
measurement Hamiltonian, the declared measurement bases and Markov
generators, and a schedule of actions:

``evolve``    unitary measurement interaction for ``dt``
``markov``    classical pointer dynamics under a named generator for ``dt``
``register``  reveal a pointer (sampled)
``complete``  register if needed, then reduce in a named basis (sampled)
``observe``   a later observer reads an already completed measurement;
              the state is left untouched

Each trajectory draws from its own stream, seeded from
``SeedSequence(seed, spawn_key=(index,))``, so results depend only on the
config and the master seed. States reached along a given outcome history
are computed once and shared by every trajectory taking that branch.
"""

from __future__ import annotations

import copy
import math
from collections import Counter
from dataclasses import dataclass, field, replace

import numpy as np

from .classical import MarkovGenerator
from .errors import ConfigError
from .formats import matrix_from_json, matrix_to_json, state_from_json, vector_from_json
from .hybrid import HybridState, apply_pointer_channel, reduce_to_system
from .linalg import PAULI_X, DEFAULT_HBAR
from .measurement import (
    MeasurementHamiltonian,
    build_measurement_hamiltonian,
    evolve_hybrid,
    information_ledger,
    register_outcome,
    sample_index,
    stern_gerlach_hamiltonian,
)
from .quantum import MeasurementBasis, QuantumState, born_probabilities

KINDS = ("stern_gerlach", "cat", "wigner_friend", "custom")
ACTIONS = ("evolve", "markov", "register", "complete", "observe")
BUILTIN_BASES = ("computational", "pm")


@dataclass(frozen=True)
class Action:
    action: str
    dt: float = 0.0
    basis: str | None = None
    generator: str | None = None

    def as_dict(self) -> dict:
        d = {"action": self.action}
        if self.action in ("evolve", "markov"):
            d["dt"] = self.dt
        if self.basis is not None:
            d["basis"] = self.basis
        if self.generator is not None:
            d["generator"] = self.generator
        return d


@dataclass(frozen=True, eq=False)
class ScenarioConfig:
    kind: str
    labels: tuple[str, ...]
    initial: HybridState
    hamiltonian: MeasurementHamiltonian
    schedule: tuple[Action, ...]
    bases: dict = field(default_factory=dict)
    generators: dict = field(default_factory=dict)
    seed: int = 0
    trajectories: int = 1000
    k_const: float = 1.0
    hbar: float = DEFAULT_HBAR
    report_basis: str = "computational"

    @property
    def system_dim(self) -> int:
        return self.initial.system_dim

    def basis(self, name: str) -> MeasurementBasis:
        if name in self.bases:
            return self.bases[name]
        if name == "computational":
            return MeasurementBasis.computational(self.system_dim)
        if name == "pm" and self.system_dim == 2:
            return MeasurementBasis.plus_minus()
        raise ConfigError(f"undeclared basis {name!r}")


def validate_config(cfg: ScenarioConfig) -> ScenarioConfig:
    """
    Check every cross-reference before anything runs.

    Raises
    ------
    ConfigError
        On unknown kinds or actions, undeclared bases or generators,
        negative time steps, dimension mismatches, or an ``observe`` that
        is not preceded by a ``complete`` (with no ``markov`` in between).
    """
    if cfg.kind not in KINDS:
        raise ConfigError(f"unknown scenario kind {cfg.kind!r}; expected one of {KINDS}")
    if cfg.trajectories < 1:
        raise ConfigError("trajectories must be >= 1")
    if cfg.k_const <= 0 or cfg.hbar <= 0:
        raise ConfigError("k_const and hbar must be positive")
    n, d = cfg.initial.apparatus_dim, cfg.initial.system_dim
    if len(cfg.labels) != n or len(set(cfg.labels)) != n:
        raise ConfigError(f"need {n} distinct pointer labels, got {list(cfg.labels)}")
    if (cfg.hamiltonian.apparatus_dim, cfg.hamiltonian.system_dim) != (n, d):
        raise ConfigError(
            f"Hamiltonian is {cfg.hamiltonian.apparatus_dim}x{cfg.hamiltonian.system_dim}, "
            f"state is {n}x{d}"
        )
    for name, b in cfg.bases.items():
        if b.dimension != d:
            raise ConfigError(f"basis {name!r} has dimension {b.dimension}, system has {d}")
    for name, g in cfg.generators.items():
        if g.dimension != n:
            raise ConfigError(f"generator {name!r} has dimension {g.dimension}, apparatus has {n}")
    cfg.basis(cfg.report_basis)
    completed = False
    for i, a in enumerate(cfg.schedule):
        where = f"schedule[{i}] ({a.action})"
        if a.action not in ACTIONS:
            raise ConfigError(f"{where}: unknown action; expected one of {ACTIONS}")
        if a.action in ("evolve", "markov"):
            if not (a.dt >= 0 and math.isfinite(a.dt)):
                raise ConfigError(f"{where}: dt must be a finite number >= 0")
        if a.action == "markov":
            if a.generator not in cfg.generators:
                raise ConfigError(f"{where}: undeclared generator {a.generator!r}")
            completed = False
        if a.action == "complete":
            if a.basis is None:
                raise ConfigError(f"{where}: needs a basis")
            try:
                cfg.basis(a.basis)
            except ConfigError as exc:
                raise ConfigError(f"{where}: {exc}") from None
            completed = True
        if a.action == "observe" and not completed:
            raise ConfigError(f"{where}: nothing to observe; a 'complete' must come first")
    return cfg


# -- built-in scenarios -------------------------------------------------------

def _pm_blocks():
    plus = QuantumState.pure([1, 1])
    return (plus, plus)


def build_scenario(kind: str, **params) -> ScenarioConfig:
    """
    Construct one of the built-in scenarios.

    Common parameters: ``g`` (coupling), ``hbar``, ``seed``,
    ``trajectories``, ``k_const``, ``schedule`` (list of action dicts), and
    ``dt`` for the default interaction step.

    ``stern_gerlach``: pointers spot-up/spot-down with weights 1/2, system
    ``|+>`` under both, ``H_S = 0`` and ``V = +g sigma_z, -g sigma_z``.
    Default schedule evolves to ``omega t = pi/4`` then registers and
    completes in the ``{|+>, |->}`` basis.

    ``cat``: pointers alive/dead with weights 1/2; the atom is non-decayed
    under ``alive`` and decayed under ``dead``. The alive block undergoes a
    Rabi-type rotation ``V_alive = g sigma_x`` (angle ``g t / hbar``), the
    dead block is left alone.

    ``wigner_friend``: pointers no/yes with weights 1/2, atom blocks as in
    ``cat`` and no interaction unless ``g`` is given. The friend registers
    and completes inside the chamber; the outer observer's query comes
    strictly afterwards.

    ``custom``: requires ``labels``, ``weights``, ``blocks``, ``hamiltonian``
    and ``schedule``.
    """
    params = dict(params)
    common = {
        "seed": int(params.pop("seed", 0)),
        "trajectories": int(params.pop("trajectories", 1000)),
        "k_const": float(params.pop("k_const", 1.0)),
        "hbar": float(params.pop("hbar", DEFAULT_HBAR)),
    }
    schedule = params.pop("schedule", None)
    hbar = common["hbar"]
    atom_basis = MeasurementBasis(np.eye(2), labels=("non-decayed", "decayed"))

    if kind == "stern_gerlach":
        g = float(params.pop("g", 1.0))
        omega = g / hbar
        dt = float(params.pop("dt", math.pi / (4 * omega) if omega else math.pi / 4))
        cfg = ScenarioConfig(
            kind=kind,
            labels=("spot-up", "spot-down"),
            initial=HybridState(np.array([0.5, 0.5]), _pm_blocks()),
            hamiltonian=stern_gerlach_hamiltonian(g),
            schedule=(Action("evolve", dt), Action("register"), Action("complete", basis="pm")),
            bases={"pm": MeasurementBasis.plus_minus()},
            report_basis="pm",
            **common,
        )
    elif kind in ("cat", "wigner_friend"):
        g = float(params.pop("g", 0.5 if kind == "cat" else 0.0))
        dt = float(params.pop("dt", 1.0))
        nd, dec = QuantumState.pure([1, 0]), QuantumState.pure([0, 1])
        ham = build_measurement_hamiltonian([0.0, 0.0], np.zeros((2, 2)), [g * PAULI_X, np.zeros((2, 2))])
        if kind == "cat":
            labels = ("alive", "dead")
            default = (Action("evolve", dt), Action("register"), Action("complete", basis="atom"))
        else:
            labels = ("no", "yes")
            # Friend: evolve, register, complete. Outer observer: observe.
            default = (
                Action("evolve", dt),
                Action("register"),
                Action("complete", basis="atom"),
                Action("observe"),
            )
        cfg = ScenarioConfig(
            kind=kind,
            labels=labels,
            initial=HybridState(np.array([0.5, 0.5]), (nd, dec)),
            hamiltonian=ham,
            schedule=default,
            bases={"atom": atom_basis},
            report_basis="atom",
            **common,
        )
    elif kind == "custom":
        try:
            labels = tuple(params.pop("labels"))
            initial = HybridState(np.asarray(params.pop("weights"), float), tuple(params.pop("blocks")))
            ham = params.pop("hamiltonian")
            sched = schedule if schedule is not None else params.pop("schedule")
        except KeyError as exc:
            raise ConfigError(f"custom scenario is missing {exc.args[0]!r}") from None
        schedule = None
        cfg = ScenarioConfig(
            kind=kind,
            labels=labels,
            initial=initial,
            hamiltonian=ham,
            schedule=tuple(_parse_action(a, i) for i, a in enumerate(sched)),
            bases=dict(params.pop("bases", {})),
            generators=dict(params.pop("generators", {})),
            report_basis=params.pop("report_basis", "computational"),
            **common,
        )
    else:
        raise ConfigError(f"unknown scenario kind {kind!r}; expected one of {KINDS}")

    if params:
        raise ConfigError(f"unexpected parameters for {kind}: {sorted(params)}")
    if schedule is not None:
        cfg = replace(cfg, schedule=tuple(_parse_action(a, i) for i, a in enumerate(schedule)))
    return validate_config(cfg)


# -- JSON config --------------------------------------------------------------

def _parse_action(a, i: int) -> Action:
    if isinstance(a, Action):
        return a
    if not isinstance(a, dict) or "action" not in a:
        raise ConfigError(f"schedule[{i}]: expected an object with an 'action' field")
    extra = set(a) - {"action", "dt", "basis", "generator"}
    if extra:
        raise ConfigError(f"schedule[{i}]: unknown fields {sorted(extra)}")
    try:
        dt = float(a.get("dt", 0.0))
    except (TypeError, ValueError):
        raise ConfigError(f"schedule[{i}]: dt must be a number") from None
    return Action(str(a["action"]), dt, a.get("basis"), a.get("generator"))


def config_to_dict(cfg: ScenarioConfig) -> dict:
    """Full JSON form of a config; :func:`config_from_dict` inverts it."""
    return {
        "kind": cfg.kind,
        "apparatus": {
            "labels": list(cfg.labels),
            "energies": [float(e) for e in cfg.hamiltonian.energies],
            "weights": [float(w) for w in cfg.initial.weights],
        },
        "system": {
            "dim": cfg.system_dim,
            "initial": {
                "blocks": [None if b is None else {"matrix": matrix_to_json(b.matrix)}
                           for b in cfg.initial.blocks]
            },
        },
        "hamiltonian": {
            "h_s": matrix_to_json(cfg.hamiltonian.system_hamiltonian),
            "potentials": [matrix_to_json(v) for v in cfg.hamiltonian.potentials],
        },
        "bases": {
            name: {"vectors": matrix_to_json(b.vectors.T), "labels": list(b.labels)}
            for name, b in cfg.bases.items()
        },
        "generators": {name: g.entries.tolist() for name, g in cfg.generators.items()},
        "schedule": [a.as_dict() for a in cfg.schedule],
        "report_basis": cfg.report_basis,
        "seed": cfg.seed,
        "trajectories": cfg.trajectories,
        "k_const": cfg.k_const,
        "hbar": cfg.hbar,
    }


def _get(doc: dict, key: str, what: str):
    if key not in doc:
        raise ConfigError(f"{what}: missing {key!r}")
    return doc[key]


def config_from_dict(doc: dict) -> ScenarioConfig:
    """
    Parse a scenario document.

    For the built-in kinds every section is optional and overrides the
    built-in default; ``hamiltonian: {"g": ...}`` sets the coupling. The
    ``custom`` kind needs ``apparatus``, ``system``, ``hamiltonian`` (with
    ``potentials``) and ``schedule``.

    ``system.initial`` is ``{"pure": v}`` or ``{"matrix": m}`` (one state
    under every pointer) or ``{"blocks": [...]}`` (one per pointer, ``null``
    allowed for zero weight).
    """
    if not isinstance(doc, dict):
        raise ConfigError("scenario config must be a JSON object")
    known = {"kind", "apparatus", "system", "hamiltonian", "bases", "generators",
             "schedule", "report_basis", "seed", "trajectories", "k_const", "hbar"}
    unknown = set(doc) - known
    if unknown:
        raise ConfigError(f"unknown config fields {sorted(unknown)}")
    doc = copy.deepcopy(doc)
    kind = doc.get("kind", "custom")
    try:
        if kind in ("stern_gerlach", "cat", "wigner_friend"):
            doc = _merge_builtin(kind, doc)
        return _parse_full(doc)
    except ConfigError:
        raise
    except (ValueError, TypeError, KeyError, IndexError) as exc:
        raise ConfigError(f"invalid scenario config: {exc}") from exc


def _merge_builtin(kind: str, doc: dict) -> dict:
    """Overlay a partial document on the full form of a built-in scenario."""
    ham = dict(doc.get("hamiltonian", {}))
    params = {k: doc[k] for k in ("seed", "trajectories", "k_const", "hbar") if k in doc}
    if "g" in ham:
        params["g"] = float(ham.pop("g"))
    base = config_to_dict(build_scenario(kind, **params))
    for key, val in doc.items():
        if key == "hamiltonian":
            base[key].update(ham)
        elif key in ("apparatus", "system", "bases", "generators") and isinstance(val, dict):
            base[key].update(val)
        else:
            base[key] = val
    return base


def _parse_full(doc: dict) -> ScenarioConfig:
    kind = doc.get("kind", "custom")
    app = _get(doc, "apparatus", "config")
    labels = tuple(str(x) for x in _get(app, "labels", "apparatus"))
    n = len(labels)
    weights = np.asarray(app.get("weights", [1.0 / n] * n), dtype=float)
    energies = app.get("energies", [0.0] * n)

    system = _get(doc, "system", "config")
    init = _get(system, "initial", "system")
    if isinstance(init, dict) and "blocks" in init:
        blocks = tuple(None if b is None else state_from_json(b, f"system.initial.blocks[{i}]")
                       for i, b in enumerate(init["blocks"]))
    else:
        s = state_from_json(init, "system.initial")
        blocks = tuple(s for _ in range(n))
    blocks = tuple(None if w == 0 else b for w, b in zip(weights, blocks)) if len(blocks) == n else blocks
    initial = HybridState(weights, blocks)
    d = initial.system_dim
    if "dim" in system and int(system["dim"]) != d:
        raise ConfigError(f"system.dim is {system['dim']} but the initial state is {d}-dimensional")

    ham = _get(doc, "hamiltonian", "config")
    if "potentials" not in ham:
        raise ConfigError("hamiltonian needs 'potentials' (and optionally 'h_s') for this kind")
    pots = [matrix_from_json(v, f"potential {i}") for i, v in enumerate(ham["potentials"])]
    h_s = matrix_from_json(ham["h_s"], "h_s") if "h_s" in ham else np.zeros((d, d))
    hamiltonian = build_measurement_hamiltonian(energies, h_s, pots)

    bases = {}
    for name, b in doc.get("bases", {}).items():
        if isinstance(b, dict):
            vecs = [vector_from_json(v, f"basis {name}") for v in _get(b, "vectors", f"basis {name}")]
            bases[name] = MeasurementBasis(np.column_stack(vecs), labels=tuple(b.get("labels", ())))
        else:
            vecs = [vector_from_json(v, f"basis {name}") for v in b]
            bases[name] = MeasurementBasis(np.column_stack(vecs))
    generators = {name: MarkovGenerator(np.asarray(g, dtype=float))
                  for name, g in doc.get("generators", {}).items()}
    schedule = tuple(_parse_action(a, i) for i, a in enumerate(_get(doc, "schedule", "config")))
    cfg = ScenarioConfig(
        kind=kind,
        labels=labels,
        initial=initial,
        hamiltonian=hamiltonian,
        schedule=schedule,
        bases=bases,
        generators=generators,
        seed=int(doc.get("seed", 0)),
        trajectories=int(doc.get("trajectories", 1000)),
        k_const=float(doc.get("k_const", 1.0)),
        hbar=float(doc.get("hbar", DEFAULT_HBAR)),
        report_basis=str(doc.get("report_basis", "computational")),
    )
    return validate_config(cfg)


# -- execution ----------------------------------------------------------------

def _fmt(x: float | None) -> str:
    return "" if x is None else repr(float(x))


@dataclass(frozen=True, eq=False)
class Event:
    step: int
    time: float
    action: str
    outcome: str | None
    probability: float | None
    i_apparatus: float
    i_system: float
    i_total: float
    weights: tuple
    system_diagonal: tuple
    pointer: int | None = None
    outcome_index: int | None = None

    def csv_fields(self) -> tuple:
        return (
            _fmt(self.time), self.action, self.outcome or "", _fmt(self.probability),
            _fmt(self.i_apparatus), _fmt(self.i_system), _fmt(self.i_total),
        )


@dataclass(frozen=True, eq=False)
class TrajectoryRecord:
    trajectory_index: int
    events: tuple


@dataclass(frozen=True, eq=False)
class RunResult:
    config: ScenarioConfig
    records: list
    aggregate: dict


class _Node:
    """A state reached after some schedule prefix and outcome history."""

    __slots__ = ("state", "time", "children", "probs", "born", "events")

    def __init__(self, state: HybridState, time: float):
        self.state = state
        self.time = time
        self.children = {}
        self.probs = None
        self.born = {}
        self.events = {}


class _Runner:
    def __init__(self, cfg: ScenarioConfig):
        self.cfg = cfg
        self.report = cfg.basis(cfg.report_basis)
        self.bases = {a.basis: cfg.basis(a.basis) for a in cfg.schedule if a.basis}

    def event(self, step, time, action, state, outcome=None, prob=None, pointer=None, index=None):
        led = information_ledger(state, self.cfg.k_const)
        diag = born_probabilities(reduce_to_system(state), self.report)
        return Event(step, float(time), action, outcome, prob, led.i_apparatus, led.i_system,
                     led.i_total, tuple(float(w) for w in state.weights),
                     tuple(float(x) for x in diag), pointer, index)

    def child(self, node: _Node, key, make):
        c = node.children.get(key)
        if c is None:
            c = node.children[key] = make()
        return c

    def register_step(self, node, step, rng, events):
        if node.probs is None:
            node.probs = np.array(node.state.weights)
        l = sample_index(node.probs, rng)
        child = self.child(node, ("register", l),
                           lambda: _Node(register_outcome(node.state, l), node.time))
        ev = node.events.get(("register", l))
        if ev is None:
            ev = node.events[("register", l)] = self.event(
                step, node.time, "register", child.state, self.cfg.labels[l],
                float(node.probs[l]), l, l)
        events.append(ev)
        return child

    def step(self, node: _Node, s: int, a: Action, rng, events) -> _Node:
        cfg = self.cfg
        if a.action == "evolve":
            child = self.child(node, "evolve", lambda: _Node(
                evolve_hybrid(node.state, cfg.hamiltonian, a.dt, cfg.hbar), node.time + a.dt))
        elif a.action == "markov":
            child = self.child(node, "markov", lambda: _Node(
                apply_pointer_channel(node.state, cfg.generators[a.generator].transition(a.dt)),
                node.time + a.dt))
        elif a.action == "register":
            return self.register_step(node, s, rng, events)
        elif a.action == "complete":
            if node.state.registered_pointer() is None:
                node = self.register_step(node, s, rng, events)
            l = node.state.registered_pointer()
            basis = self.bases[a.basis]
            key = ("complete", a.basis)
            probs = node.born.get(a.basis)
            if probs is None:
                probs = node.born[a.basis] = born_probabilities(node.state.blocks[l], basis)
            m = sample_index(probs, rng)
            child = self.child(node, key + (m,), lambda: _Node(
                HybridState(node.state.weights, tuple(
                    QuantumState(basis.projector(m)) if i == l else None
                    for i in range(node.state.apparatus_dim))),
                node.time))
            ev = node.events.get(key + (m,))
            if ev is None:
                ev = node.events[key + (m,)] = self.event(
                    s, child.time, "complete", child.state, basis.labels[m], float(probs[m]), l, m)
            events.append(ev)
            return child
        elif a.action == "observe":
            l = node.state.registered_pointer()
            ev = node.events.get("observe")
            if ev is None:
                ev = node.events["observe"] = self.event(
                    s, node.time, "observe", node.state, cfg.labels[l], 1.0, l, l)
            events.append(ev)
            return node
        else:  # pragma: no cover - rejected by validate_config
            raise ConfigError(f"unknown action {a.action!r}")
        ev = child.events.get("arrive")
        if ev is None:
            ev = child.events["arrive"] = self.event(s, child.time, a.action, child.state)
        events.append(ev)
        return child


def trajectory_rng(seed: int, index: int) -> np.random.Generator:
    """Independent stream for trajectory ``index`` under master ``seed``."""
    return np.random.default_rng(np.random.SeedSequence(seed, spawn_key=(index,)))


def run_trajectories(config: ScenarioConfig) -> RunResult:
    """Run every trajectory of ``config`` and aggregate the statistics."""
    cfg = validate_config(config)
    runner = _Runner(cfg)
    root = _Node(cfg.initial, 0.0)
    init_event = runner.event(-1, 0.0, "init", cfg.initial)
    records = []
    for t_idx in range(cfg.trajectories):
        rng = trajectory_rng(cfg.seed, t_idx)
        events = [init_event]
        node = root
        for s, a in enumerate(cfg.schedule):
            node = runner.step(node, s, a, rng, events)
        records.append(TrajectoryRecord(t_idx, tuple(events)))
    return RunResult(cfg, records, aggregate(cfg, records))


def _wilson(k: int, n: int, z: float = 1.959963984540054) -> tuple[float, float]:
    if n == 0:
        return (0.0, 1.0)
    p = k / n
    denom = 1 + z * z / n
    centre = (p + z * z / (2 * n)) / denom
    half = z * math.sqrt(p * (1 - p) / n + z * z / (4 * n * n)) / denom
    return (max(0.0, centre - half), min(1.0, centre + half))


def aggregate(cfg: ScenarioConfig, records) -> dict:
    """
    Outcome counts, binomial confidence intervals and mean information series.

    Sampling steps are keyed ``"<step>:<action>"``. Completion steps also get
    ``"<step>:complete|<pointer>"`` entries counting outcomes conditional on
    the registered pointer.
    """
    counts: dict[str, Counter] = {}
    # Events are shared between trajectories on the same branch, so tally
    # distinct objects and form exact weighted means afterwards.
    tallies: dict[tuple, dict] = {}
    for rec in records:
        for ev in rec.events:
            slot = tallies.setdefault((ev.step, ev.action), {})
            if id(ev) in slot:
                slot[id(ev)][1] += 1
            else:
                slot[id(ev)] = [ev, 1]
            if ev.outcome is None:
                continue
            counts.setdefault(f"{ev.step}:{ev.action}", Counter())[ev.outcome] += 1
            if ev.action == "complete":
                cond = f"{ev.step}:complete|{cfg.labels[ev.pointer]}"
                counts.setdefault(cond, Counter())[ev.outcome] += 1
    outcome_counts = {k: dict(sorted(c.items())) for k, c in counts.items()}
    frequency_ci = {}
    for k, c in outcome_counts.items():
        total = sum(c.values())
        entry = {}
        for label, cnt in c.items():
            f = cnt / total
            lo, hi = _wilson(cnt, total)
            entry[label] = {
                "count": cnt,
                "total": total,
                "frequency": f,
                "stderr": math.sqrt(f * (1 - f) / total),
                "ci95": [lo, hi],
            }
        frequency_ci[k] = entry
    entropy_series = []
    for (step, action), slot in tallies.items():
        total = sum(c for _, c in slot.values())

        def mean(attr):
            return math.fsum(getattr(ev, attr) * c for ev, c in slot.values()) / total

        entropy_series.append({
            "step": step, "action": action, "t": mean("time"), "I_A": mean("i_apparatus"),
            "I_S": mean("i_system"), "I_AS": mean("i_total"), "count": total,
        })
    return {
        "config_echo": config_to_dict(cfg),
        "seed": cfg.seed,
        "trajectories": len(records),
        "outcome_counts": outcome_counts,
        "frequency_ci": frequency_ci,
        "entropy_series": entropy_series,
    }
