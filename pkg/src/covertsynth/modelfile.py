"""JSON model files.

A model file holds an optional alphabet, an optional attack block and any
number of named automata::

    {
      "format": "covertsynth-model/1",
      "alphabet": {
        "events": [{"name": "L", "observable": true, "controllable": false}, ...],
        "commands": [{"name": "v1", "members": ["EH", "EL", "H", "L"]}, ...]
      },
      "attack": {"compromised": ["H", "L"], "attackable": ["close"]},
      "automata": {
        "plant": {
          "events": ["L", "H", ...],
          "states": [{"name": "idle", "marked": false}, ...],
          "initial": "idle",
          "transitions": [["idle", "L", "low"], ...]
        }
      }
    }

``commands`` may be omitted, in which case every command containing the
uncontrollable events is generated.  In a plant the marked states are the
damage states.  :func:`dumps` writes the canonical form; loading a
canonical file and dumping it again reproduces it byte for byte.
"""

from __future__ import annotations

import json
import os
import tempfile
from dataclasses import dataclass, field
from pathlib import Path
from typing import Any, Hashable, Mapping

from .fsa import (
    RESERVED_STATE_LABELS,
    SHARP,
    STOP,
    Alphabet,
    Automaton,
    ModelError,
)
from .models import AttackConstraint

FORMAT = "covertsynth-model/1"


class ModelFileError(ModelError):
    def __init__(self, where: str, message: str):
        super().__init__(f"{where}: {message}" if where else message)
        self.where = where


@dataclass
class ModelFile:
    alphabet: Alphabet | None = None
    attack: AttackConstraint | None = None
    automata: dict[str, Automaton] = field(default_factory=dict)
    explicit_commands: bool = True

    def require(self, role: str) -> Automaton:
        try:
            return self.automata[role]
        except KeyError:
            raise ModelFileError("automata", f"missing automaton {role!r}") from None


# ---------------------------------------------------------------------------
# loading
# ---------------------------------------------------------------------------

def _expect(cond: bool, where: str, message: str) -> None:
    if not cond:
        raise ModelFileError(where, message)


def _names(value: Any, where: str) -> list[str]:
    _expect(isinstance(value, list) and all(isinstance(v, str) for v in value), where,
            "expected a list of strings")
    _expect(len(set(value)) == len(value), where, "duplicate names")
    return value


def _load_alphabet(block: Any, max_commands: int) -> tuple[Alphabet, bool]:
    _expect(isinstance(block, dict), "alphabet", "expected an object")
    events = block.get("events")
    _expect(isinstance(events, list) and events, "alphabet.events", "expected a non-empty list")
    names, obs, ctl = [], set(), set()
    for i, ev in enumerate(events):
        where = f"alphabet.events[{i}]"
        _expect(isinstance(ev, dict) and isinstance(ev.get("name"), str), where, "expected an object with a name")
        unknown = set(ev) - {"name", "observable", "controllable"}
        _expect(not unknown, where, f"unknown fields {sorted(unknown)}")
        name = ev["name"]
        _expect(name != STOP and not name.endswith(SHARP), where, f"event name {name!r} is reserved")
        _expect(name not in names, where, f"duplicate event {name!r}")
        names.append(name)
        for flag, bucket in (("observable", obs), ("controllable", ctl)):
            val = ev.get(flag, False)
            _expect(isinstance(val, bool), f"{where}.{flag}", "expected true or false")
            if val:
                bucket.add(name)
    try:
        if "commands" not in block:
            return Alphabet.with_all_commands(names, obs, ctl, max_commands=max_commands), False
        commands = {}
        for i, cmd in enumerate(block["commands"]):
            where = f"alphabet.commands[{i}]"
            _expect(isinstance(cmd, dict) and isinstance(cmd.get("name"), str), where,
                    "expected an object with a name")
            _expect(cmd["name"] not in commands, where, f"duplicate command {cmd['name']!r}")
            commands[cmd["name"]] = frozenset(_names(cmd.get("members"), f"{where}.members"))
        return Alphabet(frozenset(names), frozenset(obs), frozenset(ctl), commands), True
    except ModelFileError:
        raise
    except ModelError as exc:
        raise ModelFileError("alphabet", str(exc)) from None


def _load_automaton(block: Any, role: str, allowed_events: frozenset[str] | None,
                    allow_reserved: bool) -> Automaton:
    where = f"automata.{role}"
    _expect(isinstance(block, dict), where, "expected an object")
    unknown = set(block) - {"events", "states", "initial", "transitions"}
    _expect(not unknown, where, f"unknown fields {sorted(unknown)}")
    events = _names(block.get("events", []), f"{where}.events")
    if allowed_events is not None:
        foreign = sorted(set(events) - allowed_events)
        _expect(not foreign, f"{where}.events", f"events {foreign} are not declared in the alphabet")
    states = block.get("states", [])
    _expect(isinstance(states, list), f"{where}.states", "expected a list")
    _expect(bool(states) and "initial" in block, where, "no initial state")
    names, marked = [], set()
    for i, st in enumerate(states):
        sw = f"{where}.states[{i}]"
        _expect(isinstance(st, dict) and isinstance(st.get("name"), str), sw, "expected an object with a name")
        name = st["name"]
        _expect(name not in names, sw, f"duplicate state {name!r}")
        if not allow_reserved:
            _expect(name not in RESERVED_STATE_LABELS, sw, f"state name {name!r} is reserved")
        names.append(name)
        flag = st.get("marked", False)
        _expect(isinstance(flag, bool), f"{sw}.marked", "expected true or false")
        if flag:
            marked.add(i)
    index = {n: i for i, n in enumerate(names)}
    init = block["initial"]
    _expect(init in index, f"{where}.initial", f"unknown state {init!r}")
    rows: list[dict[str, int]] = [dict() for _ in names]
    trans = block.get("transitions", [])
    _expect(isinstance(trans, list), f"{where}.transitions", "expected a list")
    evset = set(events)
    for i, tr in enumerate(trans):
        tw = f"{where}.transitions[{i}]"
        _expect(isinstance(tr, list) and len(tr) == 3 and all(isinstance(x, str) for x in tr), tw,
                "expected [source, event, target]")
        src, ev, dst = tr
        _expect(src in index, tw, f"unknown state {src!r}")
        _expect(dst in index, tw, f"unknown state {dst!r}")
        _expect(ev in evset, tw, f"event {ev!r} is not in this automaton's events")
        row = rows[index[src]]
        _expect(ev not in row or row[ev] == index[dst], tw, f"second {ev!r} transition from {src!r}")
        row[ev] = index[dst]
    return Automaton(frozenset(events), tuple(rows), index[init], frozenset(marked), tuple(names), role)


def loads(text: str, *, allow_reserved: bool = False, max_commands: int = 4096) -> ModelFile:
    try:
        data = json.loads(text)
    except json.JSONDecodeError as exc:
        raise ModelFileError(f"line {exc.lineno} column {exc.colno}", exc.msg) from None
    _expect(isinstance(data, dict), "", "top level must be an object")
    _expect(data.get("format") == FORMAT, "format", f"expected {FORMAT!r}")
    unknown = set(data) - {"format", "alphabet", "attack", "automata"}
    _expect(not unknown, "", f"unknown fields {sorted(unknown)}")
    alphabet, explicit = (None, True)
    if "alphabet" in data:
        alphabet, explicit = _load_alphabet(data["alphabet"], max_commands)
    attack = None
    if "attack" in data:
        _expect(alphabet is not None, "attack", "an attack block needs an alphabet")
        block = data["attack"]
        _expect(isinstance(block, dict), "attack", "expected an object")
        try:
            attack = AttackConstraint(
                alphabet,
                frozenset(_names(block.get("compromised", []), "attack.compromised")),
                frozenset(_names(block.get("attackable", []), "attack.attackable")),
            )
        except ModelFileError:
            raise
        except ModelError as exc:
            raise ModelFileError("attack", str(exc)) from None
    allowed = None
    if alphabet is not None:
        allowed = alphabet.events | alphabet.gamma
        if attack is not None:
            allowed = allowed | attack.relabelled | {STOP}
    automata = {}
    block = data.get("automata", {})
    _expect(isinstance(block, dict), "automata", "expected an object")
    for role in block:
        automata[role] = _load_automaton(block[role], role, allowed, allow_reserved)
    return ModelFile(alphabet, attack, automata, explicit)


def load(path: str | os.PathLike, **kwargs) -> ModelFile:
    return loads(Path(path).read_text(encoding="utf-8"), **kwargs)


# ---------------------------------------------------------------------------
# saving
# ---------------------------------------------------------------------------

def state_names(a: Automaton) -> list[str]:
    """Printable, unique state names (falls back to ids on collisions)."""
    def show(lab: Hashable) -> str:
        if isinstance(lab, str):
            return lab
        if isinstance(lab, frozenset):
            return "{" + ",".join(sorted(show(x) for x in lab)) + "}"
        if isinstance(lab, tuple):
            return "(" + ",".join(show(x) for x in lab) + ")"
        return str(lab)

    names = [show(lab) for lab in a.labels]
    if len(set(names)) != len(names):
        names = [str(q) for q in a.states]
    return names


def automaton_to_dict(a: Automaton) -> dict:
    names = state_names(a)
    return {
        "events": sorted(a.events),
        "states": [{"name": names[q], "marked": q in a.marked} for q in a.states],
        "initial": names[a.initial],
        "transitions": [[names[q], e, names[t]] for q, e, t in a.transitions()],
    }


def to_dict(mf: ModelFile) -> dict:
    out: dict[str, Any] = {"format": FORMAT}
    if mf.alphabet is not None:
        a = mf.alphabet
        block: dict[str, Any] = {
            "events": [{"name": e, "observable": e in a.observable, "controllable": e in a.controllable}
                       for e in sorted(a.events)],
        }
        if mf.explicit_commands:
            block["commands"] = [{"name": n, "members": sorted(m)} for n, m in a.commands.items()]
        out["alphabet"] = block
    if mf.attack is not None:
        out["attack"] = {"compromised": sorted(mf.attack.compromised),
                         "attackable": sorted(mf.attack.attackable)}
    out["automata"] = {role: automaton_to_dict(a) for role, a in mf.automata.items()}
    return out


def _flat(value: Any) -> bool:
    if isinstance(value, list):
        return all(not isinstance(v, (list, dict)) for v in value)
    if isinstance(value, dict):
        return all(not isinstance(v, (list, dict)) or (isinstance(v, list) and _flat(v))
                   for v in value.values())
    return True


def _render(value: Any, indent: int) -> str:
    """JSON with one line per structural item; flat containers stay inline."""
    if _flat(value):
        return json.dumps(value, ensure_ascii=False)
    pad = "  " * (indent + 1)
    if isinstance(value, dict):
        items = [f"{pad}{json.dumps(k, ensure_ascii=False)}: {_render(v, indent + 1)}" for k, v in value.items()]
        return "{\n" + ",\n".join(items) + "\n" + "  " * indent + "}"
    items = [pad + _render(v, indent + 1) for v in value]
    return "[\n" + ",\n".join(items) + "\n" + "  " * indent + "]"


def dumps(mf: ModelFile) -> str:
    return _render(to_dict(mf), 0) + "\n"


def write_atomic(path: str | os.PathLike, text: str) -> None:
    """Write ``text`` to ``path`` via a temporary file and rename."""
    path = Path(path)
    path.parent.mkdir(parents=True, exist_ok=True)
    fd, tmp = tempfile.mkstemp(dir=path.parent, prefix=f".{path.name}.", suffix=".tmp")
    try:
        with os.fdopen(fd, "w", encoding="utf-8") as fh:
            fh.write(text)
        os.replace(tmp, path)
    except BaseException:
        if os.path.exists(tmp):
            os.unlink(tmp)
        raise


def save(path: str | os.PathLike, mf: ModelFile) -> None:
    write_atomic(path, dumps(mf))


def single(role: str, a: Automaton, alphabet: Alphabet | None = None,
           attack: AttackConstraint | None = None) -> ModelFile:
    return ModelFile(alphabet, attack, {role: a})


def roles(mf: ModelFile) -> Mapping[str, Automaton]:
    return mf.automata
