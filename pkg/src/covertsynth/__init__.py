"""Synthesis of covert sensor-actuator attackers from recorded observations."""

from .fsa import Alphabet, Automaton, ModelError
from .models import AttackConstraint
from .pipeline import SynthesisOutcome, procedure1, procedure2, synth_attacker
from .synthesis import ControlConstraint, NoSolution, supremal_safe_supervisor

__all__ = [
    "Alphabet",
    "AttackConstraint",
    "Automaton",
    "ControlConstraint",
    "ModelError",
    "NoSolution",
    "SynthesisOutcome",
    "procedure1",
    "procedure2",
    "supremal_safe_supervisor",
    "synth_attacker",
]
__version__ = "0.1.0"
