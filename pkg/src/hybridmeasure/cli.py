"""
Command-line interface.

Verbs
-----
run    execute a scenario and write trajectory CSV / aggregate JSON
check  classicality verdict for a Hamiltonian file
info   information ledger of a state file
props  proposition calculus on the cat pointers

Exit codes: 0 success, 2 config error, 3 classicality violation (``check``),
4 I/O error.
"""

from __future__ import annotations

import argparse
import json
import sys

import numpy as np

from .errors import ClassicalityError
from .formats import (
    dump_json,
    emit_outputs,
    hamiltonian_from_dict,
    hybrid_from_dict,
    load_json,
    matrix_from_json,
    matrix_to_json,
    state_from_json,
)
from .hybrid import HybridState, validate_hybrid_matrix
from .linalg import DEFAULT_TOL
from .logic import (
    Proposition,
    boolean_sublattice_check,
    complement,
    conjunction,
    disjunction,
    from_pointer_subset,
    power_set_family,
    truth_probability,
)
from .measurement import MeasurementHamiltonian, check_classicality, information_ledger
from .quantum import QuantumState, von_neumann_entropy
from .scenarios import KINDS, build_scenario, config_from_dict, run_trajectories

EXIT_OK = 0
EXIT_CONFIG = 2
EXIT_VIOLATION = 3
EXIT_IO = 4


class _Parser(argparse.ArgumentParser):
    """Report usage errors with the config-error exit code."""

    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(EXIT_CONFIG, f"{self.prog}: error: {message}\n")


def build_parser() -> argparse.ArgumentParser:
    p = _Parser(prog="hybridmeasure", description="Hybrid quantum-classical measurement simulator")
    sub = p.add_subparsers(dest="verb", required=True, parser_class=_Parser)

    r = sub.add_parser("run", help="execute a scenario")
    src = r.add_mutually_exclusive_group(required=True)
    src.add_argument("--scenario", choices=[k for k in KINDS if k != "custom"])
    src.add_argument("--config", metavar="JSON", help="scenario config file")
    r.add_argument("--seed", type=int)
    r.add_argument("--trajectories", type=int)
    r.add_argument("--out-dir", default=".")
    r.add_argument("--format", choices=("csv", "json", "both"), default="both")

    c = sub.add_parser("check", help="classicality verdict for a Hamiltonian file")
    c.add_argument("file")
    c.add_argument("--tolerance", type=float, default=DEFAULT_TOL)

    i = sub.add_parser("info", help="information ledger of a state file")
    i.add_argument("file")
    i.add_argument("--k", dest="k_const", type=float, default=1.0, help="constant K (default 1)")
    i.add_argument("--tolerance", type=float, default=DEFAULT_TOL)

    sub.add_parser("props", help="proposition calculus on the cat pointers")
    return p


def _cmd_run(args) -> int:
    overrides = {k: v for k, v in (("seed", args.seed), ("trajectories", args.trajectories))
                 if v is not None}
    if args.config:
        doc = load_json(args.config)
        if not isinstance(doc, dict):
            return _config_error("scenario config must be a JSON object")
        cfg = config_from_dict({**doc, **overrides})
    else:
        cfg = build_scenario(args.scenario, **overrides)
    result = run_trajectories(cfg)
    written = emit_outputs(result, args.format, args.out_dir)
    summary = {
        "kind": cfg.kind,
        "seed": cfg.seed,
        "trajectories": cfg.trajectories,
        "outcome_counts": result.aggregate["outcome_counts"],
        "written": [str(w) for w in written],
    }
    sys.stdout.write(dump_json(summary))
    return EXIT_OK


def _cmd_check(args) -> int:
    h = hamiltonian_from_dict(load_json(args.file))
    if isinstance(h, MeasurementHamiltonian):
        h = h.as_general()
    verdict = check_classicality(h, tol=args.tolerance)
    out = {"classical": verdict.classical, "tolerance": args.tolerance}
    if verdict.classical:
        dec = verdict.decomposition
        out["decomposition"] = {
            "energies": [float(e) for e in dec.energies],
            "h_s": matrix_to_json(dec.system_hamiltonian),
            "potentials": [matrix_to_json(v) for v in dec.potentials],
        }
    else:
        out["witness"] = list(verdict.witness)
        out["magnitude"] = verdict.magnitude
        out["witness_block"] = matrix_to_json(verdict.witness_block)
    sys.stdout.write(dump_json(out))
    return EXIT_OK if verdict.classical else EXIT_VIOLATION


def _load_state(doc, tol):
    """Hybrid ``{weights, blocks}``, full joint ``{matrix, n, d}``, or a system state."""
    if isinstance(doc, dict) and "weights" in doc:
        return hybrid_from_dict(doc)
    if isinstance(doc, dict) and "matrix" in doc and "n" in doc:
        d = int(doc.get("d", 0)) or np.asarray(doc["matrix"]).shape[0] // int(doc["n"])
        return validate_hybrid_matrix(matrix_from_json(doc["matrix"]), int(doc["n"]), d, tol)
    return state_from_json(doc)


def _cmd_info(args) -> int:
    state = _load_state(load_json(args.file), args.tolerance)
    if isinstance(state, HybridState):
        out = information_ledger(state, args.k_const).as_dict()
        out["weights"] = [float(w) for w in state.weights]
    else:
        out = {"I_S": von_neumann_entropy(state, args.k_const), "K": args.k_const}
    sys.stdout.write(dump_json(out))
    return EXIT_OK


def _cmd_props(args) -> int:
    alive, dead = from_pointer_subset(2, [0]), from_pointer_subset(2, [1])
    cat = QuantumState(np.diag([0.5, 0.5]))
    zero_q = Proposition.from_vector([1, 0])
    plus_q = Proposition.from_vector([1, 1])
    out = {
        "alive_and_dead_is_zero": bool(np.array_equal(conjunction(alive, dead).projector, np.zeros((2, 2)))),
        "alive_or_dead_is_identity": bool(np.array_equal(disjunction(alive, dead).projector, np.eye(2))),
        "not_alive_is_dead": complement(alive) == dead,
        "truth_probability": {"alive": truth_probability(alive, cat), "dead": truth_probability(dead, cat)},
        "pointer_power_set_is_boolean": boolean_sublattice_check(power_set_family(2)),
        "proj0_projplus_is_boolean": boolean_sublattice_check([zero_q, plus_q]),
    }
    sys.stdout.write(dump_json(out))
    return EXIT_OK


def _config_error(msg: str) -> int:
    sys.stderr.write(f"config error: {msg}\n")
    return EXIT_CONFIG


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    handler = {"run": _cmd_run, "check": _cmd_check, "info": _cmd_info, "props": _cmd_props}[args.verb]
    try:
        return handler(args)
    except OSError as exc:
        sys.stderr.write(f"I/O error: {exc}\n")
        return EXIT_IO
    except ClassicalityError as exc:
        return _config_error(f"state is not a hybrid state: {exc}")
    except (ValueError, TypeError, KeyError, IndexError, json.JSONDecodeError) as exc:
        return _config_error(str(exc))
