"""
Text form of group elements.

Grammar::

    element := 'e' | term ('*' term)*
    term    := 's' INT | 'd(' INT (',' INT)* ')'

Terms are multiplied left to right. The canonical form writes the
permutation part as its lexicographically smallest reduced word followed by
the diagonal part, which is dropped when trivial:

>>> from monohecke.group import GroupParams
>>> P = GroupParams(2, 2)
>>> format_element(parse_element("d(1,0)*s1", P))
's1*d(0,1)'
>>> format_element(parse_element("e", P))
'e'
"""

from __future__ import annotations

import re

from .group import GroupElement, GroupParams, multiply, reduced_word

__all__ = ["ParseError", "parse_element", "format_element"]


class ParseError(ValueError):
    """Malformed element expression; ``pos`` is the 0-based offset."""

    def __init__(self, msg: str, text: str, pos: int):
        super().__init__(f"{msg} at position {pos} in {text!r}")
        self.text = text
        self.pos = pos


_TOKEN = re.compile(r"\s*(?:(?P<s>s(?P<sidx>\d+))|(?P<d>d\()|(?P<e>e)(?![\w(]))")
_INT = re.compile(r"\s*(-?\d+)\s*")


def parse_element(text: str, params: GroupParams) -> GroupElement:
    pos = 0
    result = params.identity()
    seen = False
    while True:
        m = _TOKEN.match(text, pos)
        if not m:
            raise ParseError("expected 's<k>', 'd(...)' or 'e'", text, _skip(text, pos))
        if m.group("s"):
            i = int(m.group("sidx"))
            if not 1 <= i <= params.n - 1:
                raise ParseError(f"generator s{i} out of range 1..{params.n - 1}", text, m.start("s"))
            term = params.s(i)
            pos = m.end()
        elif m.group("d"):
            start = m.start("d")
            pos = m.end()
            exps = []
            while True:
                im = _INT.match(text, pos)
                if not im:
                    raise ParseError("expected integer", text, _skip(text, pos))
                exps.append(int(im.group(1)))
                pos = im.end()
                if text.startswith(",", pos):
                    pos += 1
                elif text.startswith(")", pos):
                    pos += 1
                    break
                else:
                    raise ParseError("expected ',' or ')'", text, pos)
            if len(exps) != params.n:
                raise ParseError(f"d(...) needs {params.n} entries, got {len(exps)}", text, start)
            term = params.diag(exps)
        else:
            term = params.identity()
            pos = m.end()
        result = multiply(result, term)
        seen = True
        rest = _skip(text, pos)
        if rest == len(text):
            break
        if text[rest] != "*":
            raise ParseError("expected '*'", text, rest)
        pos = rest + 1
    if not seen:
        raise ParseError("empty expression", text, 0)
    return result


def _skip(text: str, pos: int) -> int:
    while pos < len(text) and text[pos].isspace():
        pos += 1
    return pos


def format_element(x: GroupElement) -> str:
    parts = [f"s{i}" for i in reduced_word(x.perm)]
    if any(x.exps):
        parts.append("d(" + ",".join(str(e) for e in x.exps) + ")")
    return "*".join(parts) if parts else "e"
