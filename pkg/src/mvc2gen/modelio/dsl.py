"""Reader for the ``.uml`` textual notation of source models.

Example::

    // three-level master/detail chain
    package shop {
      class Customer { crud }
      class Order parent Customer {
        attr date : Date;
        <<retrieve>> op Retrieve;
        op Archive;
      }
    }

The ``package`` wrapper is optional; without it the package name is empty.
Statement terminators ``;`` are optional. ``crud`` declares Create, Delete,
Retrieve and Update, in that order, each carrying its stereotype.
"""

from __future__ import annotations

import re
from dataclasses import dataclass

from mvc2gen.errors import ParseError
from mvc2gen.pim import CRUD_KEYWORDS, ClassDecl, UmlModel, build_model

KEYWORDS = frozenset({"package", "class", "parent", "attr", "op", "crud"})
CRUD_EXPANSION = ("Create", "Delete", "Retrieve", "Update")
_STEREOTYPES = {k.lower(): k for k in CRUD_KEYWORDS}

_TOKEN_RE = re.compile(
    r"(?P<skip>[ \t\r\n]+|//[^\n]*)"
    r"|(?P<open><<)|(?P<close>>>)"
    r"|(?P<punct>[{}:;])"
    r"|(?P<word>[A-Za-z_][A-Za-z0-9_.]*)"
)


@dataclass(frozen=True)
class Token:
    kind: str  # "word", "punct", "open", "close", "eof"
    text: str
    line: int
    column: int


def tokenize(text: str) -> list[Token]:
    tokens = []
    pos, line, line_start = 0, 1, 0
    while pos < len(text):
        m = _TOKEN_RE.match(text, pos)
        if m is None:
            raise ParseError("parse-error", f"unexpected character {text[pos]!r}",
                             line=line, column=pos - line_start + 1)
        if m.lastgroup != "skip":
            tokens.append(Token(m.lastgroup, m.group(), line, pos - line_start + 1))
        chunk = m.group()
        if "\n" in chunk:
            line += chunk.count("\n")
            line_start = pos + chunk.rindex("\n") + 1
        pos = m.end()
    tokens.append(Token("eof", "", line, pos - line_start + 1))
    return tokens


class _Parser:
    def __init__(self, text: str):
        self.tokens = tokenize(text)
        self.i = 0

    @property
    def tok(self) -> Token:
        return self.tokens[self.i]

    def error(self, message: str, tok: Token | None = None, code: str = "parse-error") -> ParseError:
        tok = tok or self.tok
        return ParseError(code, message, line=tok.line, column=tok.column)

    def at(self, text: str) -> bool:
        return self.tok.text == text and self.tok.kind != "eof"

    def expect(self, text: str) -> Token:
        if not self.at(text):
            shown = self.tok.text or "end of input"
            raise self.error(f"expected {text!r}, found {shown!r}")
        return self.advance()

    def advance(self) -> Token:
        tok = self.tok
        self.i += 1
        return tok

    def name(self, what: str) -> Token:
        tok = self.tok
        if tok.kind != "word" or tok.text in KEYWORDS:
            raise self.error(f"expected {what} name, found {tok.text or 'end of input'!r}")
        return self.advance()

    def skip_semicolon(self) -> None:
        if self.at(";"):
            self.advance()

    def parse(self) -> UmlModel:
        package = ""
        wrapped = self.at("package")
        if wrapped:
            self.advance()
            package = self.name("package").text
            self.expect("{")
        decls: list[ClassDecl] = []
        positions: dict[str, Token] = {}
        parents: list[Token] = []
        while self.at("class"):
            decl, name_tok, parent_tok = self.class_decl()
            if decl.name in positions:
                raise self.error(f"class {decl.name!r} declared twice", name_tok, "duplicate-class")
            positions[decl.name] = name_tok
            if parent_tok is not None:
                parents.append(parent_tok)
            decls.append(decl)
        if wrapped:
            self.expect("}")
        if self.tok.kind != "eof":
            raise self.error(f"expected 'class', found {self.tok.text!r}")
        for tok in parents:
            if tok.text not in positions:
                raise self.error(f"unknown parent class {tok.text!r}", tok, "unknown-parent")
        return build_model(package, decls, unknown_parent="unknown-parent")

    def class_decl(self) -> tuple[ClassDecl, Token, Token | None]:
        self.expect("class")
        name_tok = self.name("class")
        parent_tok = None
        if self.at("parent"):
            self.advance()
            parent_tok = self.name("parent class")
        decl = ClassDecl(name_tok.text, parent_tok.text if parent_tok else None)
        self.expect("{")
        while not self.at("}"):
            self.member(decl)
        self.expect("}")
        return decl, name_tok, parent_tok

    def member(self, decl: ClassDecl) -> None:
        if self.at("attr"):
            self.advance()
            attr = self.name("attribute").text
            self.expect(":")
            decl.attributes.append((attr, self.name("type").text))
        elif self.at("op"):
            self.advance()
            decl.operations.append((self.name("operation").text, None))
        elif self.tok.kind == "open":
            self.advance()
            raw = self.name("stereotype").text
            self.expect(">>")
            self.expect("op")
            decl.operations.append((self.name("operation").text, _STEREOTYPES.get(raw.lower(), raw)))
        elif self.at("crud"):
            self.advance()
            decl.operations.extend((k, k) for k in CRUD_EXPANSION)
        else:
            raise self.error(f"expected a class member, found {self.tok.text or 'end of input'!r}")
        self.skip_semicolon()


def parse_pim_dsl(text: str) -> UmlModel:
    return _Parser(text).parse()
