"""Framework text format, plus text/JSON emitters for programs and models.

Grammar (whitespace and ``%`` line comments are insignificant)::

    file := ("#kind:" kind)? stmt*
    stmt := "arg(" name ")."
          | "att(" name "," name ["," name] ")."
          | "sup(" name "," name ["," name] ")."

Three-name forms are ``(id, source, target)``; two-name forms are
``(source, target)`` and receive generated ids ``att_1, att_2, ...`` /
``sup_1, ...`` in order of appearance.
"""

from __future__ import annotations

import json
import re
from dataclasses import dataclass

from .errors import AutoNameClash, ParseError, ValidationError
from .framework import Framework, Kind, all_elements, validate


@dataclass(frozen=True)
class SourceSpan:
    line: int
    column: int


_TOKEN_RE = re.compile(r"""
    (?P<ws>[ \t\r\n]+)
  | (?P<comment>%[^\n]*)
  | (?P<header>\#kind:)
  | (?P<name>[A-Za-z_][A-Za-z0-9_]*)
  | (?P<punct>[(),.])
""", re.VERBOSE)


def _tokenize(text):
    pos = 0
    line, line_start = 1, 0
    tokens = []
    while pos < len(text):
        m = _TOKEN_RE.match(text, pos)
        span = SourceSpan(line, pos - line_start + 1)
        if m is None:
            raise ParseError(f"unexpected character {text[pos]!r}", span)
        kind = m.lastgroup
        value = m.group()
        if kind not in ("ws", "comment"):
            tokens.append((kind, value, span))
        nl = value.count("\n")
        if nl:
            line += nl
            line_start = m.start() + value.rindex("\n") + 1
        pos = m.end()
    tokens.append(("eof", "", SourceSpan(line, pos - line_start + 1)))
    return tokens


class _Parser:
    def __init__(self, text):
        self.tokens = _tokenize(text)
        self.i = 0

    def peek(self):
        return self.tokens[self.i]

    def take(self, kind, value=None, what=None):
        tok = self.tokens[self.i]
        if tok[0] != kind or (value is not None and tok[1] != value):
            expected = what or (repr(value) if value is not None else kind)
            found = "end of input" if tok[0] == "eof" else repr(tok[1])
            raise ParseError(f"expected {expected}, found {found}", tok[2])
        self.i += 1
        return tok

    def parse(self):
        kind = Kind.AF
        if self.peek()[0] == "header":
            self.take("header")
            tag = self.take("name", what="framework kind")
            try:
                kind = Kind.parse(tag[1])
            except ValueError:
                raise ParseError(f"unknown framework kind {tag[1]!r}", tag[2]) from None
        stmts = []
        while self.peek()[0] != "eof":
            stmts.append(self.statement())
        return kind, stmts

    def statement(self):
        head = self.take("name", what="'arg', 'att' or 'sup'")
        if head[1] not in ("arg", "att", "sup"):
            raise ParseError(f"unknown statement {head[1]!r}", head[2])
        self.take("punct", "(")
        names = [self.take("name", what="identifier")]
        while self.peek()[:2] == ("punct", ","):
            self.take("punct", ",")
            names.append(self.take("name", what="identifier"))
        self.take("punct", ")")
        self.take("punct", ".")
        allowed = (1,) if head[1] == "arg" else (2, 3)
        if len(names) not in allowed:
            raise ParseError(f"{head[1]}/{len(names)} is not a valid statement "
                             f"(expected {' or '.join(map(str, allowed))} names)", head[2])
        return head[1], [(n[1], n[2]) for n in names], head[2]


def parse_framework(text: str) -> Framework:
    """Parse and validate a framework; raises ParseError or ValidationError."""
    kind, stmts = _Parser(text).parse()
    args = {}
    inter = {"att": {}, "sup": {}}
    spans = {}
    declared = {}
    generated = {}
    counters = {"att": 0, "sup": 0}

    def declare(name, span, what):
        if name in declared:
            raise ParseError(f"{name!r} already declared as {declared[name]}", span)
        declared[name] = what
        spans[name] = span

    for head, names, span in stmts:
        if head == "arg":
            name, nspan = names[0]
            declare(name, nspan, "argument")
            args[name] = None
            continue
        if len(names) == 3:
            (ident, ispan), (src, _), (tgt, _) = names
        else:
            counters[head] += 1
            ident, ispan = f"{head}_{counters[head]}", span
            (src, _), (tgt, _) = names
            generated[ident] = ispan
        if ident in declared:
            # either side of the collision may be the generated one
            if ident in generated or declared[ident] == "generated":
                raise AutoNameClash(f"{ident!r} collides with a generated interaction id", ispan)
            raise ParseError(f"{ident!r} already declared as {declared[ident]}", ispan)
        declare(ident, ispan, "generated" if ident in generated else
                ("attack" if head == "att" else "support"))
        inter[head][ident] = (src, tgt)

    f = Framework(kind, frozenset(args), inter["att"], inter["sup"])
    violations = validate(f)
    if violations:
        raise ValidationError(violations, spans)
    return f


def emit_framework(f: Framework) -> str:
    lines = [f"#kind: {f.kind.value}"]
    for name in all_elements(f):
        if name in f.args:
            lines.append(f"arg({name}).")
        elif name in f.attacks:
            s, t = f.attacks[name]
            lines.append(f"att({name},{s},{t}).")
        else:
            s, t = f.supports[name]
            lines.append(f"sup({name},{s},{t}).")
    return "\n".join(lines) + "\n"


def emit_model(m, u) -> str:
    """One JSON object with ``pos``/``neg``/``undef`` lists in universe order."""
    pos = [a for a in u if a in m.pos]
    neg = [a for a in u if a in m.neg]
    undef = [a for a in u if a not in m.pos and a not in m.neg]
    return json.dumps({"pos": pos, "neg": neg, "undef": undef}, separators=(",", ":"))


def emit_extension(ext, u) -> str:
    """Extension completion rendered with ``in``/``out``/``undec`` keys."""
    return json.dumps({"in": [a for a in u if a in ext.pos],
                       "out": [a for a in u if a in ext.neg],
                       "undec": [a for a in u if a not in ext.pos and a not in ext.neg]},
                      separators=(",", ":"))


def _lit_text(lit, normal=False):
    if lit.positive:
        return lit.atom
    return ("not " if normal else "~") + lit.atom


def _formula_text(b, top=True):
    from .program import And, Lit, Or, TrueConst
    if isinstance(b, TrueConst):
        return "true"
    if isinstance(b, Lit):
        return _lit_text(b)
    if isinstance(b, Or):
        return "(" + " | ".join(_formula_text(x, False) for x in b.items) + ")"
    if isinstance(b, And):
        inner = " & ".join(_formula_text(x, False) for x in b.items)
        return inner if top else "(" + inner + ")"
    raise TypeError(f"not a body formula: {b!r}")


def emit_program(p) -> str:
    from .program import NormalProgram
    lines = []
    if isinstance(p, NormalProgram):
        for head, body in p.rules:
            if body:
                lines.append(f"{head} :- " + ", ".join(_lit_text(l, True) for l in body) + ".")
            else:
                lines.append(f"{head}.")
    else:
        for atom in p.atoms:
            lines.append(f"{atom} <- {_formula_text(p.rules[atom])}.")
    return "\n".join(lines) + ("\n" if lines else "")
