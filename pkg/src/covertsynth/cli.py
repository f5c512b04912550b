"""Command-line interface.

Exit codes: 0 solution / true, 1 no solution / false, 2 input error,
3 an enumeration bound was exceeded.
"""

from __future__ import annotations

import argparse
import os
import sys
from pathlib import Path

from . import modelfile, pipeline, verification
from .dot import export_dot
from .fsa import ModelError
from .modelfile import ModelFile, write_atomic
from .synthesis import NoSolution

EXIT_TRUE, EXIT_FALSE, EXIT_INPUT, EXIT_BOUND = 0, 1, 2, 3

# states of these intermediates worth highlighting in DOT output
_SINKS = {"OCNS_A": "cov_brk", "S_down_A": "risk", "S_down_A_bar": "risk"}


def _colour(text: str, code: str, stream) -> str:
    if os.environ.get("NO_COLOR") is not None or not getattr(stream, "isatty", lambda: False)():
        return text
    return f"\033[{code}m{text}\033[0m"


def _error(msg: str) -> None:
    print(f"{_colour('error:', '1;31', sys.stderr)} {msg}", file=sys.stderr)


def _note(msg: str) -> None:
    print(f"{_colour('note:', '1;33', sys.stderr)} {msg}", file=sys.stderr)


def _load(path: str, args) -> ModelFile:
    return modelfile.load(path, max_commands=args.max_commands)


def _problem(mf: ModelFile, need_attack: bool = True):
    if mf.alphabet is None:
        raise ModelError("the model file has no alphabet")
    if need_attack and mf.attack is None:
        raise ModelError("the model file has no attack block")
    return mf.require("plant"), mf.automata.get("observations")


def _emit(args, name: str, mf: ModelFile, highlight=()) -> None:
    if args.emit_intermediates:
        out = Path(args.emit_intermediates)
        write_atomic(out / f"{name}.json", modelfile.dumps(mf))
        if args.dot:
            a = next(iter(mf.automata.values()))
            write_atomic(out / f"{name}.dot", export_dot(a, highlight, name))


def _write_result(args, mf: ModelFile, highlight=()) -> None:
    a = next(iter(mf.automata.values()))
    if args.output:
        write_atomic(args.output, modelfile.dumps(mf))
        if args.dot:
            write_atomic(Path(args.output).with_suffix(".dot"), export_dot(a, highlight))
    elif args.dot:
        sys.stdout.write(export_dot(a, highlight))


def _damage_states(attacker, product, g):
    """Attacker states whose estimate contains a damaged plant state."""
    return [q for q in attacker.states
            if any(product.labels[p][0] in g.marked for p in attacker.labels[q])]


# ---------------------------------------------------------------------------
# subcommands
# ---------------------------------------------------------------------------

def cmd_synth_ns(args) -> int:
    mf = _load(args.model, args)
    g, _ = _problem(mf, need_attack=False)
    ns = pipeline.procedure1(g, mf.alphabet, sound_only=args.sound_only)
    if isinstance(ns, NoSolution):
        print(f"no safe supervisor: {ns.reason} (pruning round {ns.iteration})")
        return EXIT_FALSE
    print(f"NS: {ns.n_states} states, {ns.n_transitions} transitions")
    _write_result(args, modelfile.single("NS", ns, mf.alphabet))
    return EXIT_TRUE


def cmd_build_models(args) -> int:
    mf = _load(args.model, args)
    g, m_o = _problem(mf)
    if m_o is None:
        raise ModelError("the model file has no 'observations' automaton")
    built = pipeline.build_all(g, m_o, mf.attack, sound_only=args.sound_only)
    if isinstance(built, NoSolution):
        print(f"no safe supervisor: {built.reason}")
        return EXIT_FALSE
    wanted = set(args.only.split(",")) if args.only else set(built)
    unknown = wanted - set(built)
    if unknown:
        raise ModelError(f"unknown models {sorted(unknown)}; choose from {sorted(built)}")
    if not args.emit_intermediates and not args.output:
        _note("nothing is written without --emit-intermediates DIR")
    target = args.emit_intermediates or args.output
    for name in sorted(wanted):
        a = built[name]
        print(f"{name}: {a.n_states} states, {a.n_transitions} transitions")
        if target:
            hl = [q for q in a.states if a.labels[q] == _SINKS.get(name)]
            write_atomic(Path(target) / f"{name}.json",
                         modelfile.dumps(modelfile.single(name, a, mf.alphabet, mf.attack)))
            if args.dot:
                write_atomic(Path(target) / f"{name}.dot", export_dot(a, hl, name))
    return EXIT_TRUE


def cmd_synth_attacker(args) -> int:
    mf = _load(args.model, args)
    g, m_o = _problem(mf)
    if m_o is None:
        raise ModelError("the model file has no 'observations' automaton")
    out = pipeline.synth_attacker(g, m_o, mf.attack, sound_only=args.sound_only)
    if args.emit_intermediates:
        for name, a in out.intermediates.items():
            if name in ("P", "attacker"):
                continue
            hl = [q for q in a.states if a.labels[q] == _SINKS.get(name)]
            _emit(args, name, modelfile.single(name, a, mf.alphabet, mf.attack), hl)
    sizes = ", ".join(f"{k}={v}" for k, v in out.sizes.items())
    print(f"sizes: {sizes}")
    print(f"mode: {out.mode}; time: {out.seconds:.3f}s")
    if not out.solved:
        print(f"no solution: {out.reason}")
        return EXIT_FALSE
    att = out.attacker
    hl = _damage_states(att, out.intermediates["P"], g)
    print(f"attacker: {att.n_states} states, {att.n_transitions} transitions")
    _write_result(args, modelfile.single("attacker", att, mf.alphabet, mf.attack), hl)
    return EXIT_TRUE


def cmd_verify(args) -> int:
    mf = _load(args.model, args)
    g, m_o = _problem(mf)
    if m_o is None:
        raise ModelError("the model file has no 'observations' automaton")
    att_file = _load(args.attacker, args)
    attacker = att_file.require("attacker")
    foreign = attacker.events - mf.attack.attacker_events
    if foreign:
        raise ModelError(f"attacker uses unknown events {sorted(foreign)}")
    report = verification.verify_successful(attacker, g, m_o, mf.attack, args.bound, args.count_bound)
    print(f"checked {report.n_supervisors} supervisors"
          + (" (enumeration truncated at the count bound)" if report.truncated else ""))
    for cx in report.counterexamples:
        trace = " ".join(cx.trace) if cx.trace is not None else "-"
        print(f"counterexample: supervisor {cx.supervisor}, {cx.kind}, trace: {trace}")
    print(f"{len(report.counterexamples)} counterexamples")
    return EXIT_TRUE if report.ok else EXIT_FALSE


def cmd_consistent(args) -> int:
    mf = _load(args.model, args)
    g, m_o = _problem(mf, need_attack=False)
    if m_o is None:
        raise ModelError("the model file has no 'observations' automaton")
    sup = _load(args.supervisor, args).require("supervisor")
    ok = verification.check_consistency(g, sup, m_o, mf.alphabet)
    print("consistent" if ok else "not consistent")
    return EXIT_TRUE if ok else EXIT_FALSE


def cmd_enumerate_sup(args) -> int:
    mf = _load(args.model, args)
    g, m_o = _problem(mf, need_attack=False)
    enum = verification.enumerate_consistent_supervisors(g, m_o, mf.alphabet, args.bound, args.count_bound)
    print(f"{len(enum)} supervisors" + (" (truncated)" if enum.truncated else ""))
    target = args.output or args.emit_intermediates
    if target:
        for s in enum:
            write_atomic(Path(target) / f"{s.name}.json",
                         modelfile.dumps(modelfile.single("supervisor", s, mf.alphabet)))
    if enum.truncated:
        return EXIT_BOUND
    return EXIT_TRUE if len(enum) else EXIT_FALSE


# ---------------------------------------------------------------------------

def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--sound-only", action="store_true",
                        help="allow unobservable controllable events (result is sound, maybe not supremal)")
    common.add_argument("--max-commands", type=int, default=4096, metavar="N",
                        help="limit for automatically generated command sets (default 4096)")
    common.add_argument("--emit-intermediates", metavar="DIR", help="write intermediate models to DIR")
    common.add_argument("--dot", action="store_true", help="also produce Graphviz output")
    common.add_argument("-o", "--output", help="output file (or directory for multi-file commands)")

    bounds = argparse.ArgumentParser(add_help=False)
    bounds.add_argument("--bound", type=int, default=None, metavar="N",
                        help="maximum supervisor states (default: observation states + 1)")
    bounds.add_argument("--count-bound", type=int, default=10_000, metavar="N",
                        help="maximum number of supervisors (default 10000)")

    parser = argparse.ArgumentParser(prog="covertsynth",
                                     description="Covert sensor-actuator attacker synthesis.")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("synth-ns", parents=[common], help="supremal safe command-level supervisor")
    p.add_argument("model")
    p.set_defaults(func=cmd_synth_ns)

    p = sub.add_parser("build-models", parents=[common], help="construct the intermediate models")
    p.add_argument("model")
    p.add_argument("--only", metavar="NAMES", help="comma-separated subset, e.g. AC,CE_A,OCNS_A")
    p.set_defaults(func=cmd_build_models)

    p = sub.add_parser("synth-attacker", parents=[common], help="full attacker synthesis")
    p.add_argument("model")
    p.set_defaults(func=cmd_synth_attacker)

    p = sub.add_parser("verify", parents=[common, bounds],
                       help="check an attacker against enumerated supervisors")
    p.add_argument("attacker")
    p.add_argument("model")
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("consistent", parents=[common], help="is a supervisor consistent with the observations")
    p.add_argument("supervisor")
    p.add_argument("model")
    p.set_defaults(func=cmd_consistent)

    p = sub.add_parser("enumerate-sup", parents=[common, bounds],
                       help="list safe supervisors consistent with the observations")
    p.add_argument("model")
    p.set_defaults(func=cmd_enumerate_sup)
    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except (ModelError, OSError) as exc:
        _error(str(exc))
        return EXIT_INPUT


if __name__ == "__main__":
    sys.exit(main())
