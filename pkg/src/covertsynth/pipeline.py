"""From plant, recorded observations and attack constraint to an attacker."""

from __future__ import annotations

import time
from dataclasses import dataclass, field
from typing import Mapping

from . import models
from .fsa import Alphabet, Automaton, ModelError, is_marker_reachable, sync_product
from .models import AttackConstraint
from .synthesis import ControlConstraint, NoSolution, saturate, supremal_safe_supervisor


@dataclass
class SynthesisOutcome:
    attacker: Automaton | None
    reason: str = ""
    sizes: dict[str, int] = field(default_factory=dict)
    marker_reachable: bool = False
    seconds: float = 0.0
    mode: str = "complete"
    intermediates: Mapping[str, Automaton] = field(default_factory=dict)

    @property
    def solved(self) -> bool:
        return self.attacker is not None


def _plain_command_constraint(alphabet: Alphabet) -> ControlConstraint:
    unc = alphabet.uncontrollable_command
    return ControlConstraint(alphabet.gamma - {unc}, alphabet.observable | alphabet.gamma)


def procedure1(g: Automaton, alphabet: Alphabet, *, sound_only: bool = False) -> Automaton | NoSolution:
    """Supremal safe supervisor over commands (nondeterministic in the
    sense that several commands may be offered at a control state).

    Damage states are the marked states of ``g``.
    """
    if not sound_only and not alphabet.control_observation_ok:
        raise ModelError("controllable events must be observable (or use sound-only mode)")
    ce = models.build_CE(alphabet)
    plant = sync_product(g, ce, name="G_CE")
    bad = [p for p in plant.states if plant.labels[p][0] in g.marked]
    ns = supremal_safe_supervisor(plant, bad, _plain_command_constraint(alphabet), name="NS")
    if isinstance(ns, NoSolution):
        return ns
    ns = Automaton(ns.events, ns.trans, ns.initial, ns.marked, ns.labels, "NS", {**ns.meta, "plant": plant})
    reaction = models.ns_reaction_states(ns, alphabet)
    # reaction states never block unobservable plant moves
    ns = saturate(ns, alphabet.unobservable, reaction)
    _check_bipartite(ns, alphabet, reaction)
    return ns


def _check_bipartite(ns: Automaton, alphabet: Alphabet, reaction: frozenset[int]) -> None:
    for q, e, t in ns.transitions():
        if e in alphabet.gamma:
            ok = q not in reaction and t in reaction
        elif e in alphabet.observable:
            ok = q in reaction and t not in reaction
        else:
            ok = q in reaction and t == q
        if not ok:
            raise ModelError(f"synthesized supervisor is not bipartite at {q} -{e}-> {t}")


def procedure2(
    g: Automaton,
    ce_a: Automaton,
    ac_auto: Automaton,
    ocns_a: Automaton,
    sdown_bar: Automaton,
    ac: AttackConstraint,
    *,
    sound_only: bool = False,
) -> SynthesisOutcome:
    start = time.perf_counter()
    cov_brk = ocns_a.meta["sink"]
    parts = (g, ce_a, ac_auto, ocns_a.fully_marked(), sdown_bar)
    for a in parts[1:]:
        if not a.events <= ac.attacker_events:
            raise ModelError(f"{a.name} uses events outside the attack alphabet")
    product = sync_product(*parts, name="P")
    bad = [p for p in product.states
           if product.labels[p][0] not in g.marked and product.labels[p][3] == cov_brk]
    constraint = ac.attacker_constraint()
    sizes = {"P": product.n_states, "P_bad": len(bad)}
    att = supremal_safe_supervisor(product, bad, constraint, sound_only=sound_only, name="attacker")
    mode = "sound-incomplete" if sound_only else "complete"
    if isinstance(att, NoSolution):
        return SynthesisOutcome(None, att.reason, sizes, False, time.perf_counter() - start, mode,
                                {"P": product})
    loop = sync_product(product, att)
    reachable = is_marker_reachable(loop)
    sizes["attacker"] = att.n_states
    sizes["closed_loop"] = loop.n_states
    if not reachable:
        return SynthesisOutcome(None, "no damage state is reachable under the covert attacker", sizes,
                                False, time.perf_counter() - start, mode, {"P": product})
    blocked_ok = ac.attacker_events - constraint.controllable
    att = saturate(att, blocked_ok)
    return SynthesisOutcome(att, "", sizes, True, time.perf_counter() - start, mode, {"P": product})


def build_all(g: Automaton, m_o: Automaton, ac: AttackConstraint, *, sound_only: bool = False,
              literal_risk: bool = False) -> dict[str, Automaton] | NoSolution:
    """Every intermediate model, keyed by a short name."""
    alphabet = ac.alphabet
    ns = procedure1(g, alphabet, sound_only=sound_only)
    if isinstance(ns, NoSolution):
        return ns
    out = {"NS": ns}
    out["CE"] = models.build_CE(alphabet)
    out["AC"] = models.build_AC(alphabet, ac)
    out["CE_A"] = models.build_CEA(alphabet, ac)
    out["OC"] = models.build_OC(m_o, alphabet)
    out["OCNS"] = models.build_OCNS(ns, out["OC"])
    out["OCNS_A"] = models.build_OCNSA(out["OCNS"], alphabet, ac, models.ns_reaction_states(ns, alphabet))
    out["S_down"] = models.build_Sdown(m_o, alphabet)
    out["S_down_A"] = models.build_SdownA(out["S_down"], alphabet, ac, literal_risk=literal_risk)
    out["S_down_A_bar"] = models.build_SdownA_bar(out["S_down_A"], alphabet, ac)
    _check_sizes(out, alphabet, m_o)
    return out


def _check_sizes(built: Mapping[str, Automaton], alphabet: Alphabet, m_o: Automaton) -> None:
    expected = {
        "AC": 3,
        "CE_A": len(alphabet.gamma) + 1,
        "S_down_A_bar": m_o.n_states + 2,
        "OCNS_A": built["OCNS"].n_states + 1,
    }
    for key, n in expected.items():
        if built[key].n_states != n:
            raise AssertionError(f"{key} has {built[key].n_states} states, expected {n}")


def synth_attacker(g: Automaton, m_o: Automaton, ac: AttackConstraint, *, sound_only: bool = False,
                   literal_risk: bool = False) -> SynthesisOutcome:
    start = time.perf_counter()
    built = build_all(g, m_o, ac, sound_only=sound_only, literal_risk=literal_risk)
    if isinstance(built, NoSolution):
        return SynthesisOutcome(None, "no safe supervisor exists: " + built.reason,
                                seconds=time.perf_counter() - start,
                                mode="sound-incomplete" if sound_only else "complete")
    outcome = procedure2(g, built["CE_A"], built["AC"], built["OCNS_A"], built["S_down_A_bar"], ac,
                         sound_only=sound_only)
    outcome.sizes = {**{k: a.n_states for k, a in built.items()}, **outcome.sizes}
    outcome.intermediates = {**built, **outcome.intermediates}
    if outcome.attacker is not None:
        outcome.intermediates["attacker"] = outcome.attacker
    outcome.seconds = time.perf_counter() - start
    return outcome
