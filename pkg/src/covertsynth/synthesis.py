"""Maximally permissive safe supervisors under partial observation.

The synthesis engine works on the observer of the plant: a supervisor state
is the set of plant states consistent with what has been observed so far.
Macro-states that contain a forbidden plant state are deleted, followed by
every macro-state from which an uncontrollable observable event leads to a
deleted one, until nothing changes.  When every controllable event is also
observable this yields the supremal controllable and normal sublanguage of
the safe behavior.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable

from .fsa import Automaton, ModelError, explore, observer_project, reachable_states, sync_product


@dataclass(frozen=True)
class ControlConstraint:
    """Which events a supervisor may disable and which it can see."""

    controllable: frozenset[str]
    observable: frozenset[str]

    def __post_init__(self):
        object.__setattr__(self, "controllable", frozenset(self.controllable))
        object.__setattr__(self, "observable", frozenset(self.observable))

    def check_against(self, events: frozenset[str], sound_only: bool = False) -> None:
        if not self.controllable <= events:
            raise ModelError(f"controllable events {sorted(self.controllable - events)} not in plant alphabet")
        if not self.observable <= events:
            raise ModelError(f"observable events {sorted(self.observable - events)} not in plant alphabet")
        if not sound_only and not self.controllable <= self.observable:
            raise ModelError(
                "some controllable events are unobservable "
                f"({sorted(self.controllable - self.observable)}); use sound-only mode"
            )

    def effective(self) -> ControlConstraint:
        """Drop unobservable events from the controllable set."""
        return ControlConstraint(self.controllable & self.observable, self.observable)


@dataclass(frozen=True)
class NoSolution:
    """Synthesis found no safe supervisor.

    ``iteration`` is the pruning round (0 = initial bad set) in which the
    initial macro-state was deleted.
    """

    reason: str
    iteration: int = 0

    def __bool__(self):
        return False


def supremal_safe_supervisor(
    plant: Automaton,
    bad: Iterable[int],
    constraint: ControlConstraint,
    *,
    sound_only: bool = False,
    name: str = "supervisor",
) -> Automaton | NoSolution:
    """Supremal safe, controllable and normal supervisor for ``plant``.

    The result's alphabet is the plant's.  Its labels are frozensets of
    plant state ids, all states are marked.  Unobservable events appear as
    self-loops exactly where some plant state in the estimate enables them.

    With ``sound_only`` set, controllable events that are unobservable are
    handled as uncontrollable: the answer is still safe but may be less
    permissive than the true supremal one.
    """
    constraint.check_against(plant.events, sound_only)
    if sound_only:
        constraint = constraint.effective()
    bad = frozenset(bad)
    if any(not 0 <= q < plant.n_states for q in bad):
        raise ModelError("bad set is not a subset of the plant states")

    obs = observer_project(plant, constraint.observable)
    uncontrollable = plant.events - constraint.controllable
    watched = constraint.observable & uncontrollable

    dead = {x for x in obs.states if obs.labels[x] & bad}
    rounds = 0
    if obs.initial in dead:
        return NoSolution("the initial estimate already contains a forbidden state", rounds)

    preds: dict[int, set[int]] = {}
    for x, e, y in obs.transitions():
        if e in watched and x != y:
            preds.setdefault(y, set()).add(x)
    frontier = set(dead)
    while frontier:
        rounds += 1
        new = set()
        for y in frontier:
            for x in preds.get(y, ()):
                if x not in dead:
                    new.add(x)
        dead |= new
        frontier = new
        if obs.initial in dead:
            return NoSolution("an uncontrollable event forces the plant into a forbidden state", rounds)

    hidden = plant.events - constraint.observable
    enabled_cache: dict[int, frozenset[str]] = {}

    def enabled_in(x):
        en = enabled_cache.get(x)
        if en is None:
            en = frozenset().union(*(plant.trans[q].keys() for q in obs.labels[x]))
            enabled_cache[x] = en
        return en

    def successors(x):
        en = enabled_in(x)
        for e, y in obs.trans[x].items():
            if e in hidden:
                if e in en:
                    yield e, x
            elif e in en and y not in dead:
                yield e, y

    sup = explore(plant.events, obs.initial, successors, name=name)
    labels = tuple(obs.labels[x] for x in sup.labels)
    return Automaton(sup.events, sup.trans, sup.initial, sup.states, labels, name,
                     {"pruning_rounds": rounds})


def saturate(sup: Automaton, events: Iterable[str], where: Iterable[int] | None = None) -> Automaton:
    """Add self-loops on ``events`` wherever they are undefined.

    Used to turn a closed-loop style supervisor into one that never blocks
    events it is not allowed to disable; the closed loop is unchanged.
    """
    events = frozenset(events)
    where = sup.states if where is None else frozenset(where)
    rows = []
    for q in sup.states:
        row = dict(sup.trans[q])
        if q in where:
            for e in events:
                row.setdefault(e, q)
        rows.append(row)
    return Automaton(sup.events | events, tuple(rows), sup.initial, sup.marked, sup.labels, sup.name, sup.meta)


def closed_loop(plant: Automaton, sup: Automaton) -> Automaton:
    return sync_product(plant, sup, name="closed_loop")


def check_safety(plant: Automaton, bad: Iterable[int], sup: Automaton) -> bool:
    bad = frozenset(bad)
    loop = closed_loop(plant, sup)
    return not any(loop.labels[q][0] in bad for q in loop.states)


def check_controllability(plant: Automaton, sup: Automaton, constraint: ControlConstraint) -> bool:
    """No reachable closed-loop state has an uncontrollable plant move the supervisor blocks."""
    loop = closed_loop(plant, sup)
    for q in reachable_states(loop):
        p, s = loop.labels[q]
        for e in plant.trans[p]:
            if e in sup.events and e not in constraint.controllable and e not in sup.trans[s]:
                return False
    return True


def check_normality(sup: Automaton, constraint: ControlConstraint) -> bool:
    """Every unobservable transition of ``sup`` is a self-loop."""
    return all(q == t for q, e, t in sup.transitions() if e not in constraint.observable)
