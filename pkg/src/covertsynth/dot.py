"""Graphviz rendering."""

from __future__ import annotations

from typing import Iterable

from .fsa import Automaton
from .modelfile import state_names


def _quote(s: str) -> str:
    return '"' + s.replace("\\", "\\\\").replace('"', '\\"') + '"'


def export_dot(a: Automaton, highlight: Iterable[int] = (), title: str | None = None) -> str:
    """DOT text for ``a``.

    Marked states are drawn as double circles and ``highlight`` states are
    filled blue.  Parallel edges are merged into one comma-separated label.
    """
    highlight = frozenset(highlight)
    names = state_names(a)
    lines = [f"digraph {_quote(title or a.name or 'automaton')} {{", "  rankdir=LR;",
             '  __start [shape=point, label=""];']
    for q in a.states:
        attrs = [f"label={_quote(names[q])}",
                 "shape=doublecircle" if q in a.marked else "shape=circle"]
        if q in highlight:
            attrs += ["style=filled", 'fillcolor="#9ecae1"', 'color="#08519c"']
        lines.append(f"  s{q} [{', '.join(attrs)}];")
    lines.append(f"  __start -> s{a.initial};")
    edges: dict[tuple[int, int], list[str]] = {}
    for q, e, t in a.transitions():
        edges.setdefault((q, t), []).append(e)
    for (q, t), evs in sorted(edges.items()):
        lines.append(f"  s{q} -> s{t} [label={_quote(', '.join(sorted(evs)))}];")
    lines.append("}")
    return "\n".join(lines) + "\n"
