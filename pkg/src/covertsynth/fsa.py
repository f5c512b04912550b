"""Deterministic finite automata over named events.

States are dense integers ``0..n-1``; every automaton also carries one label
per state (a product tuple, a frozenset for observer macro-states, or a plain
string for hand-built models).  Automata are never mutated after
construction: every operation here returns a new one.

Numbering is canonical.  :func:`explore` assigns ids in breadth-first order
with events visited in sorted order, so building the same automaton twice
gives bit-identical results.
"""

from __future__ import annotations

import itertools
from collections import deque
from dataclasses import dataclass, field
from types import MappingProxyType
from typing import Callable, Hashable, Iterable, Iterator, Mapping, Sequence

STOP = "stop"
SHARP = "#"
RESERVED_STATE_LABELS = frozenset({"detect", "cov_brk", "risk", "dump"})


class ModelError(ValueError):
    """Raised when a model violates a structural invariant."""


def sharp(event: str) -> str:
    """Relabelled copy of a compromised event, as seen by the supervisor."""
    return event + SHARP


def unsharp(event: str) -> str:
    if not event.endswith(SHARP):
        raise ValueError(f"{event!r} is not a relabelled event")
    return event[: -len(SHARP)]


# ---------------------------------------------------------------------------
# Alphabet
# ---------------------------------------------------------------------------

def command_name(members: Iterable[str], controllable: Iterable[str]) -> str:
    """Default name of a command: its controllable members in sorted order."""
    ctl = sorted(set(members) & set(controllable))
    return "v[" + ",".join(ctl) + "]"


@dataclass(frozen=True)
class Alphabet:
    """Plant events with their attributes plus the control commands.

    ``commands`` maps each command name to the set of plant events it
    enables.  Every command contains all uncontrollable events.
    """

    events: frozenset[str]
    observable: frozenset[str]
    controllable: frozenset[str]
    commands: Mapping[str, frozenset[str]]

    def __post_init__(self):
        object.__setattr__(self, "events", frozenset(self.events))
        object.__setattr__(self, "observable", frozenset(self.observable))
        object.__setattr__(self, "controllable", frozenset(self.controllable))
        cmds = {k: frozenset(v) for k, v in sorted(dict(self.commands).items())}
        object.__setattr__(self, "commands", MappingProxyType(cmds))
        self._validate()

    def _validate(self):
        for e in self.events:
            if not e or e == STOP or e.endswith(SHARP):
                raise ModelError(f"illegal plant event name {e!r}")
        if not self.observable <= self.events:
            raise ModelError("observable events must be plant events")
        if not self.controllable <= self.events:
            raise ModelError("controllable events must be plant events")
        for name, members in self.commands.items():
            if name in self.events or name == STOP or name.endswith(SHARP):
                raise ModelError(f"command name {name!r} collides with an event")
            if not members <= self.events:
                raise ModelError(f"command {name!r} names unknown events {sorted(members - self.events)}")
            if not self.uncontrollable <= members:
                raise ModelError(
                    f"command {name!r} omits uncontrollable events "
                    f"{sorted(self.uncontrollable - members)}"
                )
        if len(set(self.commands.values())) != len(self.commands):
            raise ModelError("two commands enable the same event set")

    @classmethod
    def with_all_commands(cls, events, observable, controllable, *, max_commands: int = 4096):
        """Alphabet whose command set is every ``gamma`` with ``uncontrollable <= gamma``."""
        events = frozenset(events)
        controllable = frozenset(controllable)
        ctl = sorted(controllable)
        if 2 ** len(ctl) > max_commands:
            raise ModelError(
                f"full command set has 2^{len(ctl)} members, above the limit of "
                f"{max_commands}; raise the limit or list commands explicitly"
            )
        unc = events - controllable
        commands = {}
        for r in range(len(ctl) + 1):
            for subset in itertools.combinations(ctl, r):
                members = unc | frozenset(subset)
                commands[command_name(members, controllable)] = members
        return cls(events, observable, controllable, commands)

    @property
    def uncontrollable(self) -> frozenset[str]:
        return self.events - self.controllable

    @property
    def unobservable(self) -> frozenset[str]:
        return self.events - self.observable

    @property
    def gamma(self) -> frozenset[str]:
        return frozenset(self.commands)

    @property
    def uncontrollable_command(self) -> str | None:
        """Name of the command that enables only uncontrollable events, if present."""
        for name, members in self.commands.items():
            if members == self.uncontrollable:
                return name
        return None

    def command_for(self, members: Iterable[str]) -> str:
        members = frozenset(members)
        for name, m in self.commands.items():
            if m == members:
                return name
        raise ModelError(f"no command enables exactly {sorted(members)}")

    @property
    def control_observation_ok(self) -> bool:
        """True when every controllable event is observable."""
        return self.controllable <= self.observable


# ---------------------------------------------------------------------------
# Automaton
# ---------------------------------------------------------------------------

@dataclass(frozen=True, eq=False)
class Automaton:
    events: frozenset[str]
    trans: tuple[Mapping[str, int], ...]
    initial: int
    marked: frozenset[int]
    labels: tuple[Hashable, ...]
    name: str = ""
    meta: Mapping[str, object] = field(default_factory=dict)

    def __post_init__(self):
        n = len(self.trans)
        object.__setattr__(self, "events", frozenset(self.events))
        object.__setattr__(self, "marked", frozenset(self.marked))
        object.__setattr__(
            self, "trans", tuple(MappingProxyType(dict(sorted(t.items()))) for t in self.trans)
        )
        object.__setattr__(self, "labels", tuple(self.labels))
        object.__setattr__(self, "meta", MappingProxyType(dict(self.meta)))
        if len(self.labels) != n:
            raise ModelError("one label per state is required")
        if n == 0:
            raise ModelError("automaton has no initial state")
        if not 0 <= self.initial < n:
            raise ModelError(f"initial state {self.initial} out of range")
        if any(not 0 <= q < n for q in self.marked):
            raise ModelError("marked state out of range")
        for q, row in enumerate(self.trans):
            for e, t in row.items():
                if e not in self.events:
                    raise ModelError(f"transition on {e!r} outside the alphabet")
                if not 0 <= t < n:
                    raise ModelError(f"transition {q} -{e}-> {t} leaves the state set")

    # -- basic queries -----------------------------------------------------
    @property
    def n_states(self) -> int:
        return len(self.trans)

    @property
    def states(self) -> range:
        return range(len(self.trans))

    def step(self, q: int, event: str) -> int | None:
        return self.trans[q].get(event)

    def enabled(self, q: int) -> frozenset[str]:
        return frozenset(self.trans[q])

    def run(self, string: Iterable[str], start: int | None = None) -> int | None:
        q = self.initial if start is None else start
        for e in string:
            q = self.trans[q].get(e)
            if q is None:
                return None
        return q

    def accepts(self, string: Iterable[str]) -> bool:
        return self.run(string) is not None

    def transitions(self) -> Iterator[tuple[int, str, int]]:
        for q, row in enumerate(self.trans):
            for e, t in row.items():
                yield q, e, t

    @property
    def n_transitions(self) -> int:
        return sum(len(row) for row in self.trans)

    def state_of(self, label: Hashable) -> int | None:
        """Id of the (first) state carrying ``label``."""
        for q, lab in enumerate(self.labels):
            if lab == label:
                return q
        return None

    def is_deterministic(self) -> bool:
        # the mapping representation cannot hold two successors per event
        return all(isinstance(row, Mapping) for row in self.trans)

    def renamed(self, name: str) -> Automaton:
        return Automaton(self.events, self.trans, self.initial, self.marked, self.labels, name, self.meta)

    def with_marked(self, marked: Iterable[int]) -> Automaton:
        return Automaton(self.events, self.trans, self.initial, frozenset(marked), self.labels, self.name, self.meta)

    def fully_marked(self) -> Automaton:
        return self.with_marked(self.states)

    def __repr__(self):
        return (f"Automaton({self.name or '?'}: {self.n_states} states, "
                f"{self.n_transitions} transitions, {len(self.events)} events)")


def from_transitions(
    events: Iterable[str],
    transitions: Iterable[tuple[Hashable, str, Hashable]],
    initial: Hashable,
    marked: Iterable[Hashable] = (),
    states: Sequence[Hashable] | None = None,
    name: str = "",
) -> Automaton:
    """Build an automaton from labelled transition triples.

    State ids follow ``states`` when given, otherwise first appearance
    (initial state first).  Raises :class:`ModelError` on nondeterminism.
    """
    order: dict[Hashable, int] = {}

    def idx(lab):
        if lab not in order:
            if states is not None:
                raise ModelError(f"transition uses undeclared state {lab!r}")
            order[lab] = len(order)
        return order[lab]

    if states is not None:
        for lab in states:
            if lab in order:
                raise ModelError(f"duplicate state {lab!r}")
            order[lab] = len(order)
        if initial not in order:
            raise ModelError(f"initial state {initial!r} is not declared")
    idx(initial)
    rows: dict[int, dict[str, int]] = {}
    for src, e, dst in transitions:
        s, d = idx(src), idx(dst)
        row = rows.setdefault(s, {})
        if e in row and row[e] != d:
            raise ModelError(f"nondeterministic transition from {src!r} on {e!r}")
        row[e] = d
    marked_ids = set()
    for lab in marked:
        if lab not in order:
            raise ModelError(f"marked state {lab!r} is not declared")
        marked_ids.add(order[lab])
    labels = [None] * len(order)
    for lab, i in order.items():
        labels[i] = lab
    trans = [rows.get(i, {}) for i in range(len(order))]
    return Automaton(frozenset(events), tuple(trans), order[initial], frozenset(marked_ids), tuple(labels), name)


def explore(
    events: Iterable[str],
    initial: Hashable,
    successors: Callable[[Hashable], Iterable[tuple[str, Hashable]]],
    is_marked: Callable[[Hashable], bool] = lambda _: True,
    name: str = "",
) -> Automaton:
    """Breadth-first construction of the part reachable from ``initial``.

    ``successors(label)`` yields ``(event, label')`` pairs.  Ids are handed
    out in discovery order with successors sorted by event, which makes the
    result canonical.
    """
    ids = {initial: 0}
    labels = [initial]
    trans: list[dict[str, int]] = []
    queue = deque([initial])
    while queue:
        lab = queue.popleft()
        row = {}
        for e, nxt in sorted(successors(lab), key=lambda p: p[0]):
            if e in row:
                raise ModelError(f"nondeterministic successor on {e!r}")
            if nxt not in ids:
                ids[nxt] = len(labels)
                labels.append(nxt)
                queue.append(nxt)
            row[e] = ids[nxt]
        trans.append(row)
    marked = frozenset(i for i, lab in enumerate(labels) if is_marked(lab))
    return Automaton(frozenset(events), tuple(trans), 0, marked, tuple(labels), name)


# ---------------------------------------------------------------------------
# Operations
# ---------------------------------------------------------------------------

def sync_product(*automata: Automaton, name: str = "") -> Automaton:
    """Reachable synchronous product.

    Shared events synchronise, private events interleave.  The state label
    of the result is the tuple of component state *ids*; the components
    themselves are kept in ``meta['factors']`` so callers can resolve them.
    """
    if not automata:
        raise ValueError("sync_product needs at least one automaton")
    events = frozenset().union(*(a.events for a in automata))
    owners = {e: tuple(i for i, a in enumerate(automata) if e in a.events) for e in events}

    def successors(state):
        # candidate events: any event enabled by some component
        cand = set()
        for a, q in zip(automata, state):
            cand.update(a.trans[q])
        for e in cand:
            nxt = list(state)
            for i in owners[e]:
                t = automata[i].trans[state[i]].get(e)
                if t is None:
                    break
                nxt[i] = t
            else:
                yield e, tuple(nxt)

    init = tuple(a.initial for a in automata)
    prod = explore(
        events, init, successors,
        lambda s: all(q in a.marked for a, q in zip(automata, s)),
        name,
    )
    return Automaton(prod.events, prod.trans, prod.initial, prod.marked, prod.labels, name,
                     {"factors": tuple(automata)})


def unobservable_reach(a: Automaton, start: int | Iterable[int], observable: Iterable[str]) -> frozenset[int]:
    """States reachable from ``start`` using only events outside ``observable``."""
    observable = frozenset(observable)
    if isinstance(start, int):
        if not 0 <= start < a.n_states:
            raise ModelError(f"unknown state {start}")
        start = (start,)
    seen = set(start)
    stack = list(seen)
    while stack:
        q = stack.pop()
        for e, t in a.trans[q].items():
            if e not in observable and t not in seen:
                seen.add(t)
                stack.append(t)
    return frozenset(seen)


def observer_project(a: Automaton, observable: Iterable[str], name: str = "") -> Automaton:
    """Projection-determinization of ``a`` onto ``observable``.

    States are non-empty subsets of ``a``'s states (labels are frozensets
    of ids).  Observable events move between unobservable reaches; every
    other event of ``a``'s alphabet self-loops everywhere, so the result
    keeps ``a``'s alphabet.  All states are marked.
    """
    observable = frozenset(observable) & a.events
    hidden = a.events - observable
    closure_cache: dict[int, frozenset[int]] = {}

    def closure(q):
        c = closure_cache.get(q)
        if c is None:
            c = closure_cache[q] = unobservable_reach(a, q, observable)
        return c

    def successors(macro):
        moves: dict[str, set[int]] = {}
        for q in macro:
            for e, t in a.trans[q].items():
                if e in observable:
                    moves.setdefault(e, set()).update(closure(t))
        for e, dst in moves.items():
            yield e, frozenset(dst)
        for e in hidden:
            yield e, macro

    return explore(a.events, closure(a.initial), successors, name=name)


def project_string(s: Iterable[str], keep: Iterable[str]) -> tuple[str, ...]:
    keep = frozenset(keep)
    return tuple(e for e in s if e in keep)


def reachable_states(a: Automaton) -> frozenset[int]:
    seen = {a.initial}
    stack = [a.initial]
    while stack:
        q = stack.pop()
        for t in a.trans[q].values():
            if t not in seen:
                seen.add(t)
                stack.append(t)
    return frozenset(seen)


def _restrict(a: Automaton, keep: Iterable[int], name: str | None = None) -> Automaton:
    keep = frozenset(keep)
    if a.initial not in keep:
        raise ModelError("initial state removed")

    def successors(q):
        for e, t in a.trans[q].items():
            if t in keep:
                yield e, t

    out = explore(a.events, a.initial, successors, lambda q: q in a.marked,
                  a.name if name is None else name)
    labels = tuple(a.labels[q] for q in out.labels)
    return Automaton(out.events, out.trans, out.initial, out.marked, labels, out.name, a.meta)


def trim_reachable(a: Automaton) -> Automaton:
    """Keep states reachable from the initial state (renumbered canonically)."""
    return _restrict(a, a.states)


def remove_states(a: Automaton, bad: Iterable[int]) -> Automaton | None:
    """Delete ``bad`` states with their transitions, then trim.

    Returns ``None`` when the initial state itself is removed.
    """
    bad = frozenset(bad)
    if any(not 0 <= q < a.n_states for q in bad):
        raise ModelError("bad set is not a subset of the states")
    if a.initial in bad:
        return None
    return _restrict(a, set(a.states) - bad)


def is_marker_reachable(a: Automaton) -> bool:
    return bool(reachable_states(a) & a.marked)


def complete(a: Automaton, dump: Hashable, over: Iterable[str], name: str | None = None) -> Automaton:
    """Send every undefined transition on ``over`` to a fresh unmarked dump state.

    The dump state carries self-loops on all of ``over``.
    """
    if dump in a.labels:
        raise ModelError(f"dump label {dump!r} already used")
    over = frozenset(over)
    n = a.n_states
    rows = []
    for q in a.states:
        row = dict(a.trans[q])
        for e in over:
            row.setdefault(e, n)
        rows.append(row)
    rows.append({e: n for e in over})
    return Automaton(a.events | over, tuple(rows), a.initial, a.marked, a.labels + (dump,),
                     a.name if name is None else name, a.meta)


def enumerate_language(a: Automaton, max_len: int, marked_only: bool = False) -> set[tuple[str, ...]]:
    """All strings of length <= ``max_len`` in L(a) (or L_m(a))."""
    out = set()
    frontier = [((), a.initial)]
    for depth in range(max_len + 1):
        nxt = []
        for s, q in frontier:
            if not marked_only or q in a.marked:
                out.add(s)
            if depth < max_len:
                for e, t in a.trans[q].items():
                    nxt.append((s + (e,), t))
        frontier = nxt
    return out


def shortest_path(a: Automaton, targets: Iterable[int] | Callable[[int], bool]) -> tuple[str, ...] | None:
    """Shortest event string from the initial state into ``targets``."""
    test = targets if callable(targets) else frozenset(targets).__contains__
    parent: dict[int, tuple[int, str] | None] = {a.initial: None}
    queue = deque([a.initial])
    while queue:
        q = queue.popleft()
        if test(q):
            path = []
            while parent[q] is not None:
                q, e = parent[q]
                path.append(e)
            return tuple(reversed(path))
        for e, t in a.trans[q].items():
            if t not in parent:
                parent[t] = (q, e)
                queue.append(t)
    return None


def inclusion_counterexample(a: Automaton, b: Automaton, marked: bool = False) -> tuple[str, ...] | None:
    """Shortest string in L(a) but not in L(b), or ``None`` if L(a) ⊆ L(b).

    Events are compared by name, so strings of ``a`` using events foreign
    to ``b`` are counterexamples.  With ``marked=True`` the marked
    languages are compared as well.
    """
    start = (a.initial, b.initial)
    parent = {start: None}
    queue = deque([start])

    def path(node, last=None):
        out = [] if last is None else [last]
        while parent[node] is not None:
            node, e = parent[node]
            out.append(e)
        return tuple(reversed(out))

    while queue:
        node = queue.popleft()
        qa, qb = node
        if marked and qa in a.marked and qb not in b.marked:
            return path(node)
        for e, ta in a.trans[qa].items():
            tb = b.trans[qb].get(e)
            if tb is None:
                return path(node, e)
            nxt = (ta, tb)
            if nxt not in parent:
                parent[nxt] = (node, e)
                queue.append(nxt)
    return None


def is_sublanguage(a: Automaton, b: Automaton, marked: bool = False) -> bool:
    return inclusion_counterexample(a, b, marked) is None


def language_equal(a: Automaton, b: Automaton, marked: bool = False) -> bool:
    return is_sublanguage(a, b, marked) and is_sublanguage(b, a, marked)


def minimize(a: Automaton, name: str | None = None) -> Automaton:
    """Minimal trim-reachable DFA with the same closed and marked languages.

    Moore partition refinement over the partial transition function: an
    undefined transition is treated as a move to an implicit dead class.
    """
    a = trim_reachable(a)
    events = sorted(a.events)
    block = {q: (q in a.marked) for q in a.states}
    n_blocks = len(set(block.values()))
    while True:
        sig = {q: (block[q],) + tuple(block.get(a.trans[q].get(e), None) if e in a.trans[q] else None
                                      for e in events) for q in a.states}
        ids: dict[tuple, int] = {}
        new = {q: ids.setdefault(sig[q], len(ids)) for q in a.states}
        if len(ids) == n_blocks:
            block = new
            break
        block, n_blocks = new, len(ids)

    def successors(b):
        rep = members[b][0]
        for e, t in a.trans[rep].items():
            yield e, block[t]

    members: dict[int, list[int]] = {}
    for q in a.states:
        members.setdefault(block[q], []).append(q)
    out = explore(a.events, block[a.initial], successors,
                  lambda b: members[b][0] in a.marked, a.name if name is None else name)
    labels = tuple(frozenset(members[b]) for b in out.labels)
    return Automaton(out.events, out.trans, out.initial, out.marked, labels, out.name)


def universal(events: Iterable[str], name: str = "") -> Automaton:
    """One marked state with a self-loop on every event."""
    events = frozenset(events)
    return Automaton(events, ({e: 0 for e in events},), 0, frozenset({0}), ("u",), name)


def component_ids(product: Automaton, state: int) -> tuple[int, ...]:
    return product.labels[state]
