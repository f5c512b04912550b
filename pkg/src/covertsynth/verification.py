"""Executable checks of attacker success plus brute-force oracles.

Nothing here reuses the synthesis engine: supervisors are enumerated
directly, attacker policies are searched directly, and every verdict is
computed on explicit closed-loop automata.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from typing import Iterable, Iterator, Sequence

from . import models
from .fsa import (
    STOP,
    Alphabet,
    Automaton,
    ModelError,
    enumerate_language,
    from_transitions,
    inclusion_counterexample,
    observer_project,
    reachable_states,
    shortest_path,
    sync_product,
)
from .models import AttackConstraint
from .synthesis import ControlConstraint


# ---------------------------------------------------------------------------
# single-supervisor checks
# ---------------------------------------------------------------------------

def supervised_plant(g: Automaton, s: Automaton, alphabet: Alphabet) -> Automaton:
    """G ‖ CE ‖ BT(S): the attack-free closed loop at command level."""
    return sync_product(g, models.build_CE(alphabet), models.build_BTS(s, alphabet), name="G_CE_BT")


def check_consistency(g: Automaton, s: Automaton, m_o: Automaton, alphabet: Alphabet) -> bool:
    """Can the closed loop under ``s`` produce every recorded observation?"""
    loop = supervised_plant(g, s, alphabet)
    obs = observer_project(loop, alphabet.observable)
    return inclusion_counterexample(m_o, obs) is None


def check_supervisor_safety(g: Automaton, s: Automaton, alphabet: Alphabet) -> bool:
    loop = supervised_plant(g, s, alphabet)
    return not any(loop.labels[q][0] in g.marked for q in loop.states)


def attacked_supervisor(g: Automaton, s: Automaton, ac: AttackConstraint) -> Automaton:
    """BT(S)^A for a plain supervisor ``s``."""
    alphabet = ac.alphabet
    bts = models.build_BTS(s, alphabet)
    bts_m = models.build_BTS_M(bts, g, models.build_CE(alphabet), alphabet)
    return models.build_BTS_A(bts_m, alphabet, ac)


def attacked_plant(g: Automaton, s: Automaton, ac: AttackConstraint) -> Automaton:
    """G ‖ CE^A ‖ AC ‖ BT(S)^A: what an attacker controls when facing ``s``."""
    alphabet = ac.alphabet
    return sync_product(
        g, models.build_CEA(alphabet, ac), models.build_AC(alphabet, ac), attacked_supervisor(g, s, ac),
        name="C_S",
    )


def _attack_loop(attacked: Automaton, attacker: Automaton) -> Automaton:
    return sync_product(attacked, attacker, name="B")


def _violation(loop: Automaton, g: Automaton, detect: int):
    def bad(q):
        lab = loop.labels[q]
        plant_state = loop.meta["factors"][0].labels[lab[0]][0]
        return plant_state not in g.marked and loop.meta["factors"][0].labels[lab[0]][3] == detect
    return bad


def covertness_witness(attacked: Automaton, attacker: Automaton, g: Automaton) -> tuple[str, ...] | None:
    """Shortest run that reaches detection before any damage, or ``None``."""
    detect = attacked.meta["factors"][3].meta["sink"]
    loop = _attack_loop(attacked, attacker)
    return shortest_path(loop, _violation(loop, g, detect))


def damage_witness(attacked: Automaton, attacker: Automaton) -> tuple[str, ...] | None:
    loop = _attack_loop(attacked, attacker)
    return shortest_path(loop, loop.marked)


def check_covert(attacked: Automaton, attacker: Automaton, g: Automaton) -> bool:
    return covertness_witness(attacked, attacker, g) is None


def check_damage(attacked: Automaton, attacker: Automaton) -> bool:
    return damage_witness(attacked, attacker) is not None


# ---------------------------------------------------------------------------
# supervisor enumeration
# ---------------------------------------------------------------------------

@dataclass
class Enumeration:
    supervisors: list[Automaton]
    truncated: bool

    def __iter__(self):
        return iter(self.supervisors)

    def __len__(self):
        return len(self.supervisors)


class _Search:
    """Depth-first enumeration of supervisors by their relevant behavior.

    A partial supervisor records a command for some states and targets for
    some observable transitions.  ``triples`` holds the reachable
    combinations (supervisor state, plant estimate, observation state);
    only choices that the closed loop can actually exercise are branched on,
    everything else is filled in canonically at the end.
    """

    def __init__(self, g, m_o, alphabet, state_bound, require_consistency=True):
        self.g = g
        self.m_o = m_o
        self.a = alphabet
        self.bound = state_bound
        self.consistency = require_consistency and m_o is not None
        self.cmds = sorted(alphabet.gamma)
        self.hidden = alphabet.unobservable

    def reach(self, x, cmd):
        members = self.a.commands[cmd]
        seen = set(x)
        stack = list(x)
        while stack:
            q = stack.pop()
            for e, t in self.g.trans[q].items():
                if e in self.hidden and e in members and t not in seen:
                    seen.add(t)
                    stack.append(t)
        return frozenset(seen)

    def moves(self, y, cmd):
        """Observable successor estimates from ``y`` under ``cmd``."""
        members = self.a.commands[cmd]
        out: dict[str, set[int]] = {}
        for q in y:
            for e, t in self.g.trans[q].items():
                if e in members and e in self.a.observable:
                    out.setdefault(e, set()).add(t)
        return {e: frozenset(v) for e, v in out.items()}

    def admissible(self, x, m, cmd):
        y = self.reach(x, cmd)
        if y & self.g.marked:
            return False
        mv = self.moves(y, cmd)
        if any(t & self.g.marked for t in mv.values()):
            return False
        if self.consistency and m is not None:
            for e in self.m_o.trans[m]:
                if e not in mv:
                    return False
        return True

    def close(self, cmd, trans, triples):
        """Propagate triples through decided transitions; None on violation."""
        triples = set(triples)
        stack = list(triples)
        while stack:
            s, x, m = stack.pop()
            c = cmd[s]
            if c is None:
                continue
            y = self.reach(x, c)
            for e, xt in self.moves(y, c).items():
                t = trans.get((s, e))
                if t is None:
                    continue
                mt = None if m is None else self.m_o.trans[m].get(e)
                new = (t, xt, mt)
                if new in triples:
                    continue
                if cmd[t] is not None and not self.admissible(xt, mt, cmd[t]):
                    return None
                triples.add(new)
                stack.append(new)
        return triples

    def next_decision(self, cmd, trans, triples):
        best = None
        for s, x, m in triples:
            if cmd[s] is None:
                key = (s, 0, "")
            else:
                y = self.reach(x, cmd[s])
                pend = [e for e in self.moves(y, cmd[s]) if (s, e) not in trans]
                if not pend:
                    continue
                key = (s, 1, min(pend))
            if best is None or key < best:
                best = key
        return best

    def run(self) -> Iterator[tuple[list[str], dict, set]]:
        init = (0, frozenset({self.g.initial}), None if self.m_o is None else self.m_o.initial)
        yield from self._dfs([None], {}, {init})

    def signature(self, cmd, trans, triples):
        """Canonical form of what the monitored supervisor can do.

        Nodes are (supervisor state, plant estimate) pairs; two supervisors
        with the same minimized node graph issue the same commands after
        the same observations and so behave identically under attack.
        """
        nodes = sorted({(s, x) for s, x, _ in triples}, key=lambda n: (n[0], sorted(n[1])))
        index = {n: i for i, n in enumerate(nodes)}
        out, succ = [], []
        for s, x in nodes:
            c = cmd[s]
            mv = self.moves(self.reach(x, c), c)
            out.append((c, tuple(sorted(mv))))
            succ.append({e: index[(trans[(s, e)], xt)] for e, xt in mv.items()})
        block = [out[i] for i in range(len(nodes))]
        n_blocks = len(set(block))
        while True:
            sig = [(block[i],) + tuple(sorted((e, block[j]) for e, j in succ[i].items()))
                   for i in range(len(nodes))]
            ids: dict = {}
            new = [ids.setdefault(k, len(ids)) for k in sig]
            if len(ids) == n_blocks:
                block = new
                break
            block, n_blocks = new, len(ids)
        rep = {}
        for i, b in enumerate(block):
            rep.setdefault(b, i)
        start = block[index[(0, frozenset({self.g.initial}))]]
        order = {start: 0}
        queue = [start]
        rows = []
        for b in queue:
            i = rep[b]
            row = []
            for e in sorted(succ[i]):
                t = block[succ[i][e]]
                if t not in order:
                    order[t] = len(order)
                    queue.append(t)
                row.append((e, order[t]))
            rows.append((out[i][0], tuple(row)))
        return tuple(rows)

    def _dfs(self, cmd, trans, triples):
        dec = self.next_decision(cmd, trans, triples)
        if dec is None:
            yield list(cmd), dict(trans), triples
            return
        s, kind, e = dec
        if kind == 0:
            here = [(x, m) for (t, x, m) in triples if t == s]
            for c in self.cmds:
                if all(self.admissible(x, m, c) for x, m in here):
                    new_cmd = list(cmd)
                    new_cmd[s] = c
                    closed = self.close(new_cmd, trans, triples)
                    if closed is not None:
                        yield from self._dfs(new_cmd, trans, closed)
            return
        n = len(cmd)
        for t in range(min(n + 1, self.bound)):
            new_cmd = cmd if t < n else cmd + [None]
            new_trans = dict(trans)
            new_trans[(s, e)] = t
            closed = self.close(new_cmd, new_trans, triples)
            if closed is not None:
                yield from self._dfs(new_cmd, new_trans, closed)


def _materialize(cmd: Sequence[str], trans: dict, alphabet: Alphabet, index: int) -> Automaton:
    triples = []
    for s, c in enumerate(cmd):
        for e in sorted(alphabet.commands[c]):
            t = trans.get((s, e), s) if e in alphabet.observable else s
            triples.append((s, e, t))
    return from_transitions(alphabet.events, triples, 0, range(len(cmd)), states=list(range(len(cmd))),
                            name=f"S{index}")


def enumerate_consistent_supervisors(
    g: Automaton,
    m_o: Automaton | None,
    alphabet: Alphabet,
    state_bound: int | None = None,
    count_bound: int = 10_000,
    *,
    recheck: bool = True,
    distinct: bool = True,
) -> Enumeration:
    """Safe supervisors (with at most ``state_bound`` states) consistent with ``m_o``.

    Results come in order of increasing state count.  Supervisors that
    differ only in transitions the closed loop can never take are reported
    once; with ``distinct`` (the default) so are supervisors whose monitored
    behavior coincides with an earlier, smaller one.  ``m_o=None`` drops
    the consistency filter.
    With ``recheck`` every result is re-validated by the automaton-level
    consistency and safety checks.
    """
    if state_bound is None:
        state_bound = (m_o.n_states if m_o is not None else 1) + 1
    out: list[Automaton] = []
    seen = set()
    truncated = False
    for size in range(1, state_bound + 1):
        search = _Search(g, m_o, alphabet, size)
        for cmd, trans, triples in search.run():
            if len(cmd) != size:
                continue
            if distinct:
                key = search.signature(cmd, trans, triples)
                if key in seen:
                    continue
                seen.add(key)
            if len(out) >= count_bound:
                truncated = True
                break
            sup = _materialize(cmd, trans, alphabet, len(out))
            if recheck:
                if not check_supervisor_safety(g, sup, alphabet):
                    raise AssertionError(f"enumerator produced an unsafe supervisor {sup.name}")
                if m_o is not None and not check_consistency(g, sup, m_o, alphabet):
                    raise AssertionError(f"enumerator produced an inconsistent supervisor {sup.name}")
            out.append(sup)
        if truncated:
            break
    return Enumeration(out, truncated)


# ---------------------------------------------------------------------------
# attacker success
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class Counterexample:
    supervisor: int
    kind: str  # "covertness" or "damage"
    trace: tuple[str, ...] | None


@dataclass
class Report:
    n_supervisors: int
    truncated: bool
    counterexamples: list[Counterexample] = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return not self.counterexamples


def verify_successful(
    attacker: Automaton,
    g: Automaton,
    m_o: Automaton,
    ac: AttackConstraint,
    state_bound: int | None = None,
    count_bound: int = 10_000,
    supervisors: Iterable[Automaton] | None = None,
) -> Report:
    """Check covertness and damage-reachability against every enumerated supervisor."""
    if supervisors is None:
        enum = enumerate_consistent_supervisors(g, m_o, ac.alphabet, state_bound, count_bound)
        sups, truncated = enum.supervisors, enum.truncated
    else:
        sups, truncated = list(supervisors), False
    report = Report(len(sups), truncated)
    for i, s in enumerate(sups):
        attacked = attacked_plant(g, s, ac)
        w = covertness_witness(attacked, attacker, g)
        if w is not None:
            report.counterexamples.append(Counterexample(i, "covertness", w))
        if damage_witness(attacked, attacker) is None:
            report.counterexamples.append(Counterexample(i, "damage", None))
    return report


def replay(loop_parts: Sequence[Automaton], trace: Iterable[str]) -> tuple[int, ...] | None:
    """Component states reached by ``trace`` in the product of ``loop_parts``."""
    prod = sync_product(*loop_parts)
    q = prod.run(trace)
    return None if q is None else prod.labels[q]


# ---------------------------------------------------------------------------
# brute-force attacker policies
# ---------------------------------------------------------------------------

@dataclass
class Policy:
    """Attacker policy on observation strings up to a depth.

    ``choice[w]`` is the set of attacker-controllable events enabled after
    observing ``w``; beyond the table nothing controllable is enabled.
    """

    choice: dict[tuple[str, ...], frozenset[str]]
    depth: int

    def automaton(self, ac: AttackConstraint) -> Automaton:
        con = ac.attacker_constraint()
        events = ac.attacker_events
        uncontrolled = events - con.controllable
        obs = con.observable
        sink = "beyond"
        triples = []
        nodes = sorted(self.choice, key=lambda w: (len(w), w))
        for w in nodes:
            allowed = uncontrolled | self.choice[w]
            for e in sorted(allowed):
                if e not in obs:
                    triples.append((w, e, w))
                elif len(w) < self.depth:
                    child = w + (e,)
                    triples.append((w, e, child if child in self.choice else sink))
                else:
                    triples.append((w, e, sink))
        for e in sorted(uncontrolled):
            triples.append((sink, e, sink))
        states = nodes + [sink]
        return from_transitions(events, triples, (), states, states=states, name="policy")


class _PolicySearch:
    """Search over attacker policies, one choice per observation string.

    Every supervisor contributes its own attacked plant; a policy node holds
    one state estimate per plant.  Choices are made at observation strings
    of length up to ``depth``; longer strings fall back to enabling nothing
    controllable, which is evaluated exactly by :meth:`tail`.
    """

    def __init__(self, plants: Sequence[Automaton], g: Automaton, ac: AttackConstraint, depth: int):
        self.plants = plants
        self.n = len(plants)
        self.g = g
        self.depth = depth
        con = ac.attacker_constraint()
        self.ctl = con.controllable
        self.obs = con.observable
        self.unc = ac.attacker_events - self.ctl
        self.detect = [p.meta["factors"][3].meta["sink"] for p in plants]

    def _bad(self, i, q):
        lab = self.plants[i].labels[q]
        return lab[0] not in self.g.marked and lab[3] == self.detect[i]

    def _damaged(self, i, q):
        return self.plants[i].labels[q][0] in self.g.marked

    def _closure(self, i, states, allowed, observable_too=False):
        p = self.plants[i]
        seen = set(states)
        stack = list(seen)
        while stack:
            q = stack.pop()
            for e, t in p.trans[q].items():
                if (observable_too or e not in self.obs) and (e in self.unc or e in allowed) and t not in seen:
                    seen.add(t)
                    stack.append(t)
        return seen

    def tail(self, ests):
        """Damage mask once the table ends, or ``None`` if detection can occur."""
        mask = 0
        for i in range(self.n):
            reach = self._closure(i, ests[i], frozenset(), observable_too=True)
            if any(self._bad(i, q) for q in reach):
                return None
            if any(self._damaged(i, q) for q in reach):
                mask |= 1 << i
        return mask

    def offered(self, ests):
        out = set()
        for i in range(self.n):
            for q in self._closure(i, ests[i], self.ctl):
                out.update(e for e in self.plants[i].trans[q] if e in self.ctl)
        return sorted(out)

    def expand(self, ests, allowed):
        """(damage mask, successor estimates by event) or ``None`` on detection."""
        closed = [self._closure(i, ests[i], allowed) for i in range(self.n)]
        mask = 0
        for i in range(self.n):
            for q in closed[i]:
                if self._bad(i, q):
                    return None
                if self._damaged(i, q):
                    mask |= 1 << i
        succ: dict[str, list[set[int]]] = {}
        for i in range(self.n):
            for q in closed[i]:
                for e, t in self.plants[i].trans[q].items():
                    if e in self.obs and (e in self.unc or e in allowed):
                        succ.setdefault(e, [set() for _ in range(self.n)])[i].add(t)
        return mask, {e: tuple(frozenset(x) for x in v) for e, v in sorted(succ.items())}

    def root(self):
        return tuple(frozenset({p.initial}) for p in self.plants)

    def choices(self, ests):
        offered = self.offered(ests)
        for r in range(len(offered) + 1):
            for subset in itertools.combinations(offered, r):
                yield frozenset(subset)

    # -- enumeration ------------------------------------------------------
    def search(self, want: int = 1, node_limit: int = 2_000_000) -> list[Policy]:
        """Up to ``want`` successful policies, in a fixed order."""
        full = (1 << self.n) - 1
        found: list[Policy] = []
        visits = 0

        def dfs(queue, choice, mask):
            nonlocal visits
            visits += 1
            if visits > node_limit:
                raise RuntimeError("policy search exceeded its node limit")
            if not queue:
                if mask == full:
                    found.append(Policy(dict(choice), self.depth))
                return len(found) >= want
            (w, ests), rest = queue[0], queue[1:]
            for allowed in self.choices(ests):
                step = self.expand(ests, allowed)
                if step is None:
                    continue
                m, succ = step
                children = []
                dead = False
                for e, child in succ.items():
                    if len(w) + 1 > self.depth:
                        tm = self.tail(child)
                        if tm is None:
                            dead = True
                            break
                        m |= tm
                    else:
                        children.append((w + (e,), child))
                if dead:
                    continue
                choice[w] = allowed
                if dfs(rest + children, choice, mask | m):
                    return True
                del choice[w]
            return False

        dfs([((), self.root())], {}, 0)
        return found

    # -- existence --------------------------------------------------------
    def exists(self) -> Policy | None:
        """A successful policy, or ``None`` if there is none up to the depth.

        Memoised on estimates: each subtree reports the maximal sets of
        supervisors it can damage while staying covert, with a witness
        policy fragment for each.
        """
        full = (1 << self.n) - 1
        memo: dict = {}

        def maximal(res):
            keep = {}
            for m in sorted(res, key=lambda m: -bin(m).count("1")):
                if not any(m | k == k for k in keep):
                    keep[m] = res[m]
            return keep

        def solve(ests, d):
            key = (ests, d)
            if key in memo:
                return memo[key]
            if d > self.depth:
                tm = self.tail(ests)
                memo[key] = {} if tm is None else {tm: {}}
                return memo[key]
            results: dict = {}
            for allowed in self.choices(ests):
                step = self.expand(ests, allowed)
                if step is None:
                    continue
                base, succ = step
                combos = {base: {(): allowed}}
                for e, child in succ.items():
                    sub = solve(child, d + 1)
                    if not sub:
                        combos = {}
                        break
                    nxt = {}
                    for m, frag in combos.items():
                        for cm, cfrag in sub.items():
                            merged = dict(frag)
                            merged.update({(e,) + w: c for w, c in cfrag.items()})
                            nxt.setdefault(m | cm, merged)
                    combos = maximal(nxt)
                for m, frag in combos.items():
                    results.setdefault(m, frag)
                if full in results:
                    break
            memo[key] = maximal(results)
            return memo[key]

        res = solve(self.root(), 0)
        if full in res:
            return Policy(dict(res[full]), self.depth)
        return None


def search_attacker_policies(
    g: Automaton,
    supervisors: Sequence[Automaton],
    ac: AttackConstraint,
    depth: int = 4,
    want: int = 1,
    node_limit: int = 2_000_000,
) -> list[Policy]:
    """Successful attacker policies (up to ``want`` of them) by exhaustive search.

    A policy succeeds when, against every supervisor in ``supervisors``,
    detection never happens away from damage and damage is reachable.
    """
    plants = [attacked_plant(g, s, ac) for s in supervisors]
    return _PolicySearch(plants, g, ac, depth).search(want, node_limit)


def exists_successful_policy(
    g: Automaton,
    supervisors: Sequence[Automaton],
    ac: AttackConstraint,
    depth: int = 4,
) -> Policy | None:
    """Decide by exhaustive search whether some attacker policy over
    observation strings up to ``depth`` succeeds against all ``supervisors``."""
    plants = [attacked_plant(g, s, ac) for s in supervisors]
    return _PolicySearch(plants, g, ac, depth).exists()


# ---------------------------------------------------------------------------
# synthesis oracle
# ---------------------------------------------------------------------------

def _minimal_policy_safe(plant: Automaton, bad: frozenset[int], constraint: ControlConstraint,
                         s: tuple[str, ...]) -> bool:
    """Is the least permissive policy that allows ``s`` safe?

    After observing the i-th prefix of P_o(s) the policy enables only the
    controllable event that ``s`` uses next; off that track it enables no
    controllable events.
    """
    obs_s = [e for e in s if e in constraint.observable]
    enable: dict[int, set[str]] = {}
    k = 0
    for e in s:
        if e in constraint.controllable:
            enable.setdefault(k, set()).add(e)
        if e in constraint.observable:
            k += 1
    off = -1
    seen = {(plant.initial, 0)}
    stack = [(plant.initial, 0)]
    while stack:
        q, i = stack.pop()
        if q in bad:
            return False
        for e, t in plant.trans[q].items():
            if e in constraint.controllable and (i == off or e not in enable.get(i, ())):
                continue
            if e in constraint.observable:
                j = i + 1 if i != off and i < len(obs_s) and obs_s[i] == e else off
            else:
                j = i
            if (t, j) not in seen:
                seen.add((t, j))
                stack.append((t, j))
    return True


def policy_union_language(plant: Automaton, bad: Iterable[int], constraint: ControlConstraint,
                          max_len: int) -> set[tuple[str, ...]]:
    """Union of closed-loop languages of all safe policies, truncated at ``max_len``.

    Requires every controllable event to be observable.
    """
    if not constraint.controllable <= constraint.observable:
        raise ModelError("the oracle needs controllable events to be observable")
    bad = frozenset(bad)
    return {s for s in enumerate_language(plant, max_len) if _minimal_policy_safe(plant, bad, constraint, s)}


def literal_policy_union(plant: Automaton, bad: Iterable[int], constraint: ControlConstraint,
                         depth: int) -> set[tuple[str, ...]]:
    """Same union computed by listing every policy table explicitly.

    Exponential; for cross-checking on toy plants only.  Policies are
    tables over observation strings up to ``depth`` and the union is
    reported on strings up to length ``depth``.
    """
    bad = frozenset(bad)
    ctl = sorted(constraint.controllable)
    obs = sorted(constraint.observable)
    nodes = [w for r in range(depth + 1) for w in itertools.product(obs, repeat=r)]
    options = [frozenset(c) for r in range(len(ctl) + 1) for c in itertools.combinations(ctl, r)]
    union: set[tuple[str, ...]] = set()
    for table in itertools.product(options, repeat=len(nodes)):
        policy = dict(zip(nodes, table))
        strings, safe = _run_policy(plant, bad, constraint, policy, depth)
        if safe:
            union |= strings
    return union


def _run_policy(plant, bad, constraint, policy, depth):
    def allowed(w):
        return policy.get(w, frozenset()) if w is not None else frozenset()

    def step(w, e):
        if w is None or e not in constraint.observable:
            return w
        nw = w + (e,)
        return nw if len(nw) <= depth else None

    # safety over (plant state, policy node); None is past the table
    seen = {(plant.initial, ())}
    stack = [(plant.initial, ())]
    while stack:
        q, w = stack.pop()
        if q in bad:
            return set(), False
        for e, t in plant.trans[q].items():
            if e in constraint.controllable and e not in allowed(w):
                continue
            nxt = (t, step(w, e))
            if nxt not in seen:
                seen.add(nxt)
                stack.append(nxt)
    strings = set()
    frontier = [((), (), plant.initial)]
    while frontier:
        s, w, q = frontier.pop()
        strings.add(s)
        if len(s) == depth:
            continue
        for e, t in plant.trans[q].items():
            if e in constraint.controllable and e not in allowed(w):
                continue
            frontier.append((s + (e,), step(w, e), t))
    return strings, True
