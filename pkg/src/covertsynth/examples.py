"""Ready-made instances: the water tank and small toy plants."""

from __future__ import annotations

from .fsa import Alphabet, Automaton, from_transitions
from .models import AttackConstraint

TANK_EVENTS = ("L", "H", "EL", "EH", "close", "open")


def tank_alphabet() -> Alphabet:
    levels = frozenset({"L", "H", "EL", "EH"})
    commands = {
        "v1": levels,
        "v2": levels | {"close"},
        "v3": levels | {"open"},
        "v4": levels | {"close", "open"},
    }
    return Alphabet(frozenset(TANK_EVENTS), frozenset(TANK_EVENTS), frozenset({"close", "open"}), commands)


def tank_plant() -> Automaton:
    """Level sensing followed by a valve action.

    Closing the valve on a high level overflows the tank (state ``EH``),
    opening it on a low level drains it (state ``EL``).  Both are damage
    states, i.e. marked.
    """
    return from_transitions(
        TANK_EVENTS,
        [
            ("idle", "L", "low"),
            ("idle", "H", "high"),
            ("low", "close", "idle"),
            ("high", "open", "idle"),
            ("low", "open", "EL"),
            ("high", "close", "EH"),
        ],
        "idle",
        marked=["EL", "EH"],
        states=["idle", "low", "high", "EL", "EH"],
        name="G",
    )


def tank_observations() -> Automaton:
    return from_transitions(
        ("L", "H", "close", "open"),
        [("0", "L", "1"), ("0", "H", "2"), ("1", "close", "3"), ("2", "open", "3")],
        "0",
        states=["0", "1", "2", "3"],
        name="M_o",
    )


def tank_attack(alphabet: Alphabet | None = None) -> AttackConstraint:
    alphabet = alphabet or tank_alphabet()
    return AttackConstraint(alphabet, frozenset({"L", "H", "EL", "EH"}), frozenset({"close", "open"}))


def water_tank() -> tuple[Automaton, Automaton, AttackConstraint]:
    """(plant, observation automaton, attack constraint) of the water tank."""
    return tank_plant(), tank_observations(), tank_attack()


def tiny_instance(compromised=("a", "b"), attackable=(), recorded=True):
    """Three-event miniature of the tank.

    ``a`` and ``b`` are sensor readings, ``c`` a valve action that is
    harmless after ``a`` and damaging after ``b``.  With ``recorded`` the
    observations contain ``a c``; otherwise only the empty string.
    """
    events = ("a", "b", "c")
    alphabet = Alphabet(
        frozenset(events), frozenset(events), frozenset({"c"}),
        {"w0": frozenset({"a", "b"}), "w1": frozenset({"a", "b", "c"})},
    )
    g = from_transitions(
        events,
        [("0", "a", "1"), ("0", "b", "2"), ("1", "c", "0"), ("2", "c", "bad")],
        "0", marked=["bad"], states=["0", "1", "2", "bad"], name="G",
    )
    if recorded:
        m_o = from_transitions(("a", "c"), [("0", "a", "1"), ("1", "c", "2")], "0",
                               states=["0", "1", "2"], name="M_o")
    else:
        m_o = from_transitions((), [], "0", states=["0"], name="M_o")
    ac = AttackConstraint(alphabet, frozenset(compromised), frozenset(attackable))
    return g, m_o, ac
