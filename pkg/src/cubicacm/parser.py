"""Text syntax for divisor classes.

::

    expr  := ["+"|"-"] term (("+"|"-") term)*
    term  := [integer ["*"]] atom
    atom  := "l" | "b1".."b6" | "H" | "K" | "[" 7 integers "]" | named
    named := "L[i]" | "L[i,j]" | "L^[j]" | "C[i]" | "C^[i,j]" | "C^[j]"
           | "T[]" | "T[i,j,k]" | "T[i|j]" | "T^[i,j,k]" | "T^[]"

Indices run over 1..6 and may not repeat. Whitespace is ignored between
tokens. ``format_class`` prints the canonical coordinate form, which parses
back to the same class.
"""
from __future__ import annotations

import re
from typing import List, NamedTuple, Optional, Tuple

from .catalog import Label, LabelError, label_of, label_text, named_class
from .lattice import ELL, H, K, DivisorClass, b

# (head, arity) -> family; T[i|j] is handled separately
_NAMED = {
    ("L", 1): "L_i", ("L", 2): "L_ij", ("L^", 1): "L^j",
    ("C", 1): "C_i", ("C^", 2): "C^ij", ("C^", 1): "C^j",
    ("T", 0): "T_0", ("T", 3): "T_ijk", ("T^", 3): "T^ijk", ("T^", 0): "T^0",
}

_TOKEN = re.compile(r"""
    (?P<ws>\s+)
  | (?P<int>\d+)
  | (?P<name>[A-Za-z]\w*\^?)
  | (?P<op>[-+*\[\],|])
""", re.VERBOSE)


class ParseError(ValueError):
    """Malformed class expression; ``position`` is a 0-based column."""

    def __init__(self, message: str, position: int, text: str = "") -> None:
        self.position = position
        self.text = text
        super().__init__(f"{message} at position {position}")

    def caret(self) -> str:
        return f"{self.text}\n{' ' * self.position}^"


class _Tok(NamedTuple):
    kind: str
    value: str
    pos: int


def _tokenize(text: str) -> List[_Tok]:
    toks, pos = [], 0
    while pos < len(text):
        m = _TOKEN.match(text, pos)
        if not m:
            raise ParseError(f"unexpected character {text[pos]!r}", pos, text)
        if m.lastgroup != "ws":
            toks.append(_Tok(m.lastgroup, m.group(), pos))
        pos = m.end()
    toks.append(_Tok("end", "", len(text)))
    return toks


class _Parser:
    def __init__(self, text: str) -> None:
        self.text = text
        self.toks = _tokenize(text)
        self.i = 0

    @property
    def tok(self) -> _Tok:
        return self.toks[self.i]

    def error(self, message: str, pos: Optional[int] = None) -> ParseError:
        return ParseError(message, self.tok.pos if pos is None else pos, self.text)

    def take(self, value: str) -> _Tok:
        if self.tok.value != value:
            found = self.tok.value or "end of input"
            raise self.error(f"expected {value!r}, found {found!r}")
        tok = self.tok
        self.i += 1
        return tok

    def accept(self, value: str) -> bool:
        if self.tok.kind == "op" and self.tok.value == value:
            self.i += 1
            return True
        return False

    def expr(self) -> DivisorClass:
        sign = -1 if self.accept("-") else 1
        if sign == 1:
            self.accept("+")
        total = sign * self.term()
        while self.tok.kind == "op" and self.tok.value in "+-":
            sign = 1 if self.tok.value == "+" else -1
            self.i += 1
            total = total + sign * self.term()
        if self.tok.kind != "end":
            raise self.error(f"unexpected {self.tok.value!r}")
        return total

    def term(self) -> DivisorClass:
        coef = 1
        if self.tok.kind == "int":
            coef = int(self.tok.value)
            self.i += 1
            self.accept("*")
        return coef * self.atom()

    def integer(self) -> int:
        sign = -1 if self.accept("-") else 1
        if self.tok.kind != "int":
            raise self.error("expected an integer")
        value = int(self.tok.value)
        self.i += 1
        return sign * value

    def index(self) -> Tuple[int, int]:
        tok = self.tok
        if tok.kind != "int":
            raise self.error("expected an index")
        self.i += 1
        value = int(tok.value)
        if not 1 <= value <= 6:
            raise self.error(f"index {value} outside 1..6", tok.pos)
        return value, tok.pos

    def atom(self) -> DivisorClass:
        tok = self.tok
        if tok.kind == "op" and tok.value == "[":
            self.i += 1
            coords = [self.integer()]
            while self.accept(","):
                coords.append(self.integer())
            close = self.tok.pos
            self.take("]")
            if len(coords) != 7:
                raise self.error(f"expected 7 coordinates, got {len(coords)}", close)
            return DivisorClass(coords)
        if tok.kind != "name":
            raise self.error(f"expected a class, found {tok.value or 'end of input'!r}")
        self.i += 1
        word = tok.value
        if word == "l":
            return ELL
        if word == "H":
            return H
        if word == "K":
            return K
        m = re.fullmatch(r"b(\d+)", word)
        if m:
            i = int(m.group(1))
            if not 1 <= i <= 6:
                raise self.error(f"index {i} outside 1..6", tok.pos + 1)
            return b(i)
        if word in ("L", "C", "T", "L^", "C^", "T^"):
            return self.named(word, tok.pos)
        raise self.error(f"unknown name {word!r}", tok.pos)

    def named(self, head: str, pos: int) -> DivisorClass:
        self.take("[")
        indices: List[Tuple[int, int]] = []
        bar = False
        if self.tok.kind == "int":
            indices.append(self.index())
            if head == "T" and self.accept("|"):
                bar = True
                indices.append(self.index())
            else:
                while self.accept(","):
                    indices.append(self.index())
        self.take("]")
        seen = set()
        for value, p in indices:
            if value in seen:
                raise self.error(f"repeated index {value}", p)
            seen.add(value)
        idx = tuple(v for v, _ in indices)
        if bar:
            family = "T_i^j"
        else:
            family = _NAMED.get((head, len(idx)))
            if family is None:
                raise self.error(f"{head}[...] does not take {len(idx)} indices", pos)
            idx = tuple(sorted(idx))
        try:
            return named_class(Label(family, idx))
        except LabelError as exc:  # pragma: no cover - guarded above
            raise self.error(str(exc), pos) from exc


def parse_class(text: str) -> DivisorClass:
    """Parse an expression such as ``H - L[1,2]`` or ``2*b1 + [1,0,0,0,0,0,0]``."""
    return _Parser(text).expr()


_BASIS = ("l", "b1", "b2", "b3", "b4", "b5", "b6")


def format_class(d) -> str:
    """Canonical coordinate form, e.g. ``3l - b1 - b2``; zero prints as ``0l``."""
    parts = []
    for coef, name in zip(DivisorClass(d), _BASIS):
        if coef == 0:
            continue
        mag = "" if abs(coef) == 1 else str(abs(coef))
        if not parts:
            parts.append(("-" if coef < 0 else "") + mag + name)
        else:
            parts.append(("- " if coef < 0 else "+ ") + mag + name)
    return " ".join(parts) if parts else "0l"


def format_label(d) -> Optional[str]:
    """Name of a line, conic or cubic in the input syntax, else None."""
    lab = label_of(DivisorClass(d))
    return None if lab is None else label_text(lab)
