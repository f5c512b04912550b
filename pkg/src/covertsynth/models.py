"""Builders for the component automata of the attack model.

Each builder is a pure function.  Fresh states added by a builder carry the
reserved labels ``detect``, ``cov_brk``, ``risk`` and ``dump``; command-level
states of bipartite supervisors are labelled ``("com", x)`` and reaction
states ``("rea", x)``.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable

from .fsa import (
    STOP,
    Alphabet,
    Automaton,
    ModelError,
    complete,
    observer_project,
    reachable_states,
    sharp,
    sync_product,
)
from .synthesis import ControlConstraint

DETECT, COV_BRK, RISK, DUMP = "detect", "cov_brk", "risk", "dump"


@dataclass(frozen=True)
class AttackConstraint:
    """Compromised sensor events and attackable actuator events."""

    alphabet: Alphabet
    compromised: frozenset[str]
    attackable: frozenset[str]

    def __post_init__(self):
        object.__setattr__(self, "compromised", frozenset(self.compromised))
        object.__setattr__(self, "attackable", frozenset(self.attackable))
        if not self.compromised <= self.alphabet.observable:
            raise ModelError("compromised sensor events must be observable")
        if not self.attackable <= self.alphabet.controllable:
            raise ModelError("attackable actuator events must be controllable")

    @property
    def relabelled(self) -> frozenset[str]:
        return frozenset(sharp(e) for e in self.compromised)

    @property
    def attacker_events(self) -> frozenset[str]:
        """Full alphabet seen by attack-level automata."""
        a = self.alphabet
        return a.events | a.gamma | self.relabelled | {STOP}

    def attacker_constraint(self) -> ControlConstraint:
        extra = self.relabelled | {STOP}
        return ControlConstraint(self.attackable | extra, self.alphabet.observable | extra)


# ---------------------------------------------------------------------------
# validators
# ---------------------------------------------------------------------------

def validate_observations(m_o: Automaton, alphabet: Alphabet) -> int:
    """Check the observation automaton and return its deadlocked state."""
    if not m_o.events <= alphabet.observable:
        raise ModelError("observation automaton uses non-observable events")
    if reachable_states(m_o) != frozenset(m_o.states):
        raise ModelError("observation automaton has unreachable states")
    # acyclic <=> finite language for a reachable deterministic automaton
    colour = [0] * m_o.n_states
    stack = [(m_o.initial, iter(m_o.trans[m_o.initial].values()))]
    colour[m_o.initial] = 1
    while stack:
        q, it = stack[-1]
        t = next(it, None)
        if t is None:
            colour[q] = 2
            stack.pop()
        elif colour[t] == 1:
            raise ModelError("observation automaton has a cycle (infinite observation set)")
        elif colour[t] == 0:
            colour[t] = 1
            stack.append((t, iter(m_o.trans[t].values())))
    dead = [q for q in m_o.states if not m_o.trans[q]]
    if len(dead) != 1:
        raise ModelError(f"observation automaton needs exactly one deadlocked state, found {len(dead)}")
    return dead[0]


def validate_supervisor(s: Automaton, alphabet: Alphabet) -> None:
    """Structural supervisor requirements: never blocks uncontrollable events,
    unobservable events only self-loop, and each enabled set is a command."""
    if not s.events <= alphabet.events:
        raise ModelError("supervisor uses events outside the plant alphabet")
    for q in s.states:
        en = s.enabled(q)
        missing = alphabet.uncontrollable - en
        if missing:
            raise ModelError(f"supervisor state {s.labels[q]!r} disables uncontrollable {sorted(missing)}")
        for e in en & alphabet.unobservable:
            if s.trans[q][e] != q:
                raise ModelError(f"unobservable {e!r} changes supervisor state {s.labels[q]!r}")
        try:
            alphabet.command_for(en)
        except ModelError:
            raise ModelError(
                f"supervisor state {s.labels[q]!r} enables {sorted(en)}, which is not a command"
            ) from None


def is_control_state(a: Automaton, q: int, alphabet: Alphabet) -> bool:
    return bool(a.enabled(q) & alphabet.gamma)


# ---------------------------------------------------------------------------
# attack constraint template, command execution
# ---------------------------------------------------------------------------

def build_AC(alphabet: Alphabet, ac: AttackConstraint) -> Automaton:
    init, q0, q1 = 0, 1, 2
    rows = [{}, {}, {}]
    for e in alphabet.unobservable | alphabet.gamma:
        rows[init][e] = init
    for e in ac.compromised:
        rows[init][e] = q0
        rows[q0][sharp(e)] = q1
    for e in alphabet.observable - ac.compromised:
        rows[init][e] = q1
    rows[q0][STOP] = init
    rows[q1][STOP] = init
    return Automaton(ac.attacker_events, tuple(rows), init, {0, 1, 2},
                     ("ac_init", "ac_0", "ac_1"), "AC")


def build_CE(alphabet: Alphabet, ac: AttackConstraint | None = None) -> Automaton:
    """Command execution; with ``ac`` the attacked version is built."""
    names = sorted(alphabet.gamma)
    init = 0
    rows: list[dict[str, int]] = [{}]
    for i, g in enumerate(names, start=1):
        rows[init][g] = i
        row: dict[str, int] = {}
        members = alphabet.commands[g]
        for e in members & alphabet.unobservable:
            row[e] = i
        for e in members & alphabet.observable:
            row[e] = init
        if ac is not None:
            for e in ac.attackable & alphabet.unobservable:
                row[e] = i
            for e in ac.attackable & alphabet.observable:
                row[e] = init
        rows.append(row)
    if ac is not None:
        for e in alphabet.uncontrollable:
            rows[init][e] = init
    labels = ("ce_init",) + tuple(("ce", g) for g in names)
    return Automaton(alphabet.events | alphabet.gamma, tuple(rows), init, range(len(rows)),
                     labels, "CE_A" if ac is not None else "CE")


def build_CEA(alphabet: Alphabet, ac: AttackConstraint) -> Automaton:
    return build_CE(alphabet, ac)


# ---------------------------------------------------------------------------
# bipartite supervisors
# ---------------------------------------------------------------------------

def build_BTS(s: Automaton, alphabet: Alphabet) -> Automaton:
    """Bipartite form: control state ``("com", q)`` issues the command
    enabled at ``q``; reaction state ``("rea", q)`` waits for the plant."""
    validate_supervisor(s, alphabet)
    n = s.n_states
    rows: list[dict[str, int]] = [dict() for _ in range(2 * n)]
    for q in s.states:
        rows[q][alphabet.command_for(s.enabled(q))] = n + q
        for e, t in s.trans[q].items():
            rows[n + q][e] = t if e in alphabet.observable else n + q
    labels = tuple(("com", s.labels[q]) for q in s.states) + tuple(("rea", s.labels[q]) for q in s.states)
    return Automaton(alphabet.events | alphabet.gamma, tuple(rows), s.initial, range(2 * n), labels, "BT")


def build_BTS_M(bts: Automaton, g: Automaton, ce: Automaton, alphabet: Alphabet) -> Automaton:
    monitor = observer_project(sync_product(g, ce), alphabet.observable | alphabet.gamma, name="monitor")
    out = sync_product(bts, monitor, name="BT_M")
    return Automaton(out.events, out.trans, out.initial, out.states, out.labels, out.name, out.meta)


def _reaction_states(a: Automaton, alphabet: Alphabet, metadata: Iterable[int] | None) -> frozenset[int]:
    structural = frozenset(q for q in a.states if not is_control_state(a, q, alphabet))
    if metadata is None:
        return structural
    metadata = frozenset(metadata)
    # a control state may legitimately be dead (no command left), so only
    # one direction of the structural test is binding
    clash = metadata - structural
    if clash:
        raise ModelError(f"states {sorted(clash)} marked as reaction states but issue commands")
    return metadata


def _attack_lift(
    base: Automaton,
    alphabet: Alphabet,
    ac: AttackConstraint,
    reaction: frozenset[int],
    sink: str,
    name: str,
) -> Automaton:
    """Shared construction of the attacked supervisor models.

    Compromised transitions are relabelled and keep a plain self-loop,
    attackable events that the supervisor cannot see are tolerated at
    reaction states, and any observation the supervisor does not expect at a
    reaction state leads to ``sink``.
    """
    n = base.n_states
    sink_id = n
    rows: list[dict[str, int]] = []
    for q in base.states:
        row: dict[str, int] = {}
        for e, t in base.trans[q].items():
            if e in ac.compromised:
                row[sharp(e)] = t
                row[e] = q
            else:
                row[e] = t
        if q in reaction:
            for e in ac.attackable & (alphabet.unobservable | ac.compromised):
                row.setdefault(e, q)
            for e in alphabet.observable - ac.compromised:
                if e not in base.trans[q]:
                    row[e] = sink_id
            for e in ac.compromised:
                if e not in base.trans[q]:
                    row[sharp(e)] = sink_id
        rows.append(row)
    rows.append({})
    events = alphabet.events | alphabet.gamma | ac.relabelled
    return Automaton(events, tuple(rows), base.initial, range(n + 1), base.labels + (sink,), name,
                     {"reaction": reaction, "sink": sink_id, **base.meta})


def build_BTS_A(bts_m: Automaton, alphabet: Alphabet, ac: AttackConstraint,
                reaction_states: Iterable[int] | None = None) -> Automaton:
    if reaction_states is None and "factors" in bts_m.meta:
        bts = bts_m.meta["factors"][0]
        reaction_states = [q for q in bts_m.states if bts.labels[bts_m.labels[q][0]][0] == "rea"]
    reaction = _reaction_states(bts_m, alphabet, reaction_states)
    return _attack_lift(bts_m, alphabet, ac, reaction, DETECT, "BT_A")


# ---------------------------------------------------------------------------
# observation-consistent supervisors
# ---------------------------------------------------------------------------

def build_OC(m_o: Automaton, alphabet: Alphabet) -> Automaton:
    """Commands and observations compatible with the recorded observations.

    Layout: ``("rea", q)`` for q in M_o, then ``("com", q)``, then ``dump``.
    """
    validate_observations(m_o, alphabet)
    n = m_o.n_states
    dump = 2 * n
    rows: list[dict[str, int]] = [dict() for _ in range(2 * n + 1)]
    for q in m_o.states:
        en = m_o.enabled(q)
        com = n + q
        for g, members in alphabet.commands.items():
            if en <= members:
                rows[com][g] = q
        for e in alphabet.observable:
            t = m_o.trans[q].get(e)
            rows[q][e] = n + t if t is not None else dump
        for e in alphabet.unobservable:
            rows[q][e] = q
    for e in alphabet.events | alphabet.gamma:
        rows[dump][e] = dump
    labels = tuple(("rea", m_o.labels[q]) for q in m_o.states) + \
        tuple(("com", m_o.labels[q]) for q in m_o.states) + (DUMP,)
    return Automaton(alphabet.events | alphabet.gamma, tuple(rows), n + m_o.initial,
                     range(2 * n + 1), labels, "OC")


def build_OCNS(ns: Automaton, oc: Automaton) -> Automaton:
    out = sync_product(ns, oc, name="OCNS")
    return Automaton(out.events, out.trans, out.initial, out.states, out.labels, out.name, out.meta)


def ns_reaction_states(ns: Automaton, alphabet: Alphabet) -> frozenset[int]:
    """Reaction states of a synthesized NS, read from the command-execution
    component of its macro-state labels (falls back to the structural test)."""
    plant = ns.meta.get("plant")
    if plant is None:
        return frozenset(q for q in ns.states if not is_control_state(ns, q, alphabet))
    ce = plant.meta["factors"][1]
    out = set()
    for q in ns.states:
        ce_states = {plant.labels[p][1] for p in ns.labels[q]}
        if ce.initial not in ce_states:
            out.add(q)
    return frozenset(out)


def build_OCNSA(ocns: Automaton, alphabet: Alphabet, ac: AttackConstraint,
                ns_reaction: Iterable[int] | None = None) -> Automaton:
    if ns_reaction is not None:
        ns_reaction = frozenset(ns_reaction)
        meta = [q for q in ocns.states if ocns.labels[q][0] in ns_reaction]
    else:
        meta = None
    reaction = _reaction_states(ocns, alphabet, meta)
    return _attack_lift(ocns, alphabet, ac, reaction, COV_BRK, "OCNS_A")


# ---------------------------------------------------------------------------
# least permissive consistent supervisor
# ---------------------------------------------------------------------------

def build_Sdown(m_o: Automaton, alphabet: Alphabet) -> Automaton:
    dl = validate_observations(m_o, alphabet)
    rows = []
    for q in m_o.states:
        row = dict(m_o.trans[q])
        for e in alphabet.uncontrollable & alphabet.unobservable:
            row[e] = q
        for e in alphabet.uncontrollable & alphabet.observable:
            row.setdefault(e, dl)
        rows.append(row)
    return Automaton(alphabet.events, tuple(rows), m_o.initial, m_o.states, m_o.labels, "S_down",
                     {"deadlock": dl})


def build_SdownA(sdown: Automaton, alphabet: Alphabet, ac: AttackConstraint,
                 *, literal_risk: bool = False) -> Automaton:
    """Attacked version of the least permissive supervisor.

    The added risk state has no outgoing transitions: like ``detect`` it
    ends the run of the supervisor.

    An unexpected plain observation leads to risk only if the attacker can
    force it (an attackable actuator event).  Any other such event cannot
    occur under the least permissive supervisor, so it is left undefined
    and ends up in the unmarked dump after completion.  ``literal_risk``
    restores the unrestricted rule, which lets damage be claimed on runs
    that some consistent supervisor rules out.
    """
    risky = alphabet.observable - ac.compromised
    if not literal_risk:
        risky &= ac.attackable
    n = sdown.n_states
    risk = n
    rows = []
    for q in sdown.states:
        row: dict[str, int] = {}
        for e, t in sdown.trans[q].items():
            if e in ac.compromised:
                row[sharp(e)] = t
                row[e] = q
            else:
                row[e] = t
        for e in ac.attackable & (alphabet.unobservable | ac.compromised):
            row.setdefault(e, q)
        for e in risky:
            if e not in sdown.trans[q]:
                row[e] = risk
        for e in ac.compromised:
            if e not in sdown.trans[q]:
                row[sharp(e)] = risk
        rows.append(row)
    rows.append({})
    return Automaton(alphabet.events | ac.relabelled, tuple(rows), sdown.initial, range(n + 1),
                     sdown.labels + (RISK,), "S_down_A")


def build_SdownA_bar(sdown_a: Automaton, alphabet: Alphabet, ac: AttackConstraint) -> Automaton:
    out = complete(sdown_a, DUMP, alphabet.events | ac.relabelled, name="S_down_A_bar")
    return out.with_marked(range(sdown_a.n_states))
