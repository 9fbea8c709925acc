"""Graphviz DOT rendering of frameworks.

Every attack and support becomes a small labelled midpoint node, so an
interaction that targets another interaction can point at that node.
"""

from __future__ import annotations

from .framework import Framework, all_elements


def _q(name):
    return '"' + name.replace('"', r'\"') + '"'


def export_dot(f: Framework) -> str:
    lines = ["digraph framework {"]
    if f.args or f.attacks or f.supports:
        lines.append("  rankdir=LR;")
    for name in all_elements(f):
        if name in f.args:
            lines.append(f"  {_q(name)} [shape=ellipse];")
        elif name in f.attacks:
            lines.append(f"  {_q(name)} [shape=box, style=rounded, fontsize=9, label={_q(name)}];")
        else:
            lines.append(f"  {_q(name)} [shape=box, style=\"rounded,bold\", fontsize=9, "
                         f"label={_q(name)}];")
    for name in all_elements(f):
        if name in f.attacks:
            src, tgt = f.attacks[name]
            lines.append(f"  {_q(src)} -> {_q(name)} [arrowhead=none];")
            lines.append(f"  {_q(name)} -> {_q(tgt)};")
        elif name in f.supports:
            src, tgt = f.supports[name]
            lines.append(f"  {_q(src)} -> {_q(name)} [arrowhead=none, style=bold, color=\"black:black\"];")
            lines.append(f"  {_q(name)} -> {_q(tgt)} [style=bold, color=\"black:black\", arrowhead=empty];")
    lines.append("}")
    return "\n".join(lines) + "\n"
