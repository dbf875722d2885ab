"""Input language for rings, ideals, modules, forms, and verification tasks.

One global ring per script, semicolon-terminated statements, '#' line
comments.  Variable declaration order fixes the monomial-order ranking,
so scripts reproduce degrevlex results exactly.

    ring x1 x2 y1;
    ideal I = x1*y1, x2*y1;
    module M = R/I;
    forms F = y1 - x1;
    verify M F i=1;
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import cmp_to_key
from typing import Iterator, Optional, Sequence

from hilbcalc.polyring import (
    DegRevLex,
    LinearForm,
    Polynomial,
    compare_monomials,
)

KEYWORDS = frozenset(
    {
        "ring",
        "ideal",
        "module",
        "forms",
        "shift",
        "series",
        "coeffs",
        "depth",
        "superficial",
        "admissible",
        "verify",
        "oracle",
        "i",
    }
)

# '/' is not needed by polynomial literals (rationals lex as one token)
# but module declarations spell R/I with it
OPERATORS = frozenset("+-*^=,();/")

COMMAND_KEYWORDS = frozenset(
    {"series", "coeffs", "depth", "superficial", "admissible", "verify", "oracle"}
)
STATEMENT_KEYWORDS = frozenset({"ring", "ideal", "module", "forms"}) | COMMAND_KEYWORDS


class DslError(ValueError):
    """Common base so drivers can map language errors to one exit path."""

    def __init__(self, message: str, line: int, column: int):
        super().__init__(f"{line}:{column}: {message}")
        self.line = line
        self.column = column


class LexError(DslError):
    pass


class ParseError(DslError):
    def __init__(self, message: str, line: int, column: int, expected=()):
        self.expected = frozenset(expected)
        if self.expected:
            message += f" (expected {', '.join(sorted(self.expected))})"
        super().__init__(message, line, column)


class SemanticError(DslError):
    pass


@dataclass(frozen=True)
class Token:
    kind: str  # "ident", "int", "rat", a keyword, or an operator char
    text: str
    line: int
    column: int


def tokenize(text: str) -> list[Token]:
    tokens: list[Token] = []
    line = 1
    col = 1
    pos = 0
    n = len(text)
    while pos < n:
        ch = text[pos]
        if ch == "\n":
            line += 1
            col = 1
            pos += 1
            continue
        if ch.isspace():
            pos += 1
            col += 1
            continue
        if ch == "#":
            while pos < n and text[pos] != "\n":
                pos += 1
            continue
        start_col = col
        if ch.isalpha() or ch == "_":
            end = pos
            while end < n and (text[end].isalnum() or text[end] == "_"):
                end += 1
            word = text[pos:end]
            kind = word if word in KEYWORDS else "ident"
            tokens.append(Token(kind, word, line, start_col))
            col += end - pos
            pos = end
            continue
        if ch.isdigit():
            end = pos
            while end < n and text[end].isdigit():
                end += 1
            # a/b with no interior whitespace is one rational literal
            if end < n and text[end] == "/" and end + 1 < n and text[end + 1].isdigit():
                end += 1
                while end < n and text[end].isdigit():
                    end += 1
                tokens.append(Token("rat", text[pos:end], line, start_col))
            else:
                tokens.append(Token("int", text[pos:end], line, start_col))
            col += end - pos
            pos = end
            continue
        if ch in OPERATORS:
            tokens.append(Token(ch, ch, line, start_col))
            pos += 1
            col += 1
            continue
        raise LexError(f"illegal character {ch!r}", line, col)
    return tokens


# ---------------------------------------------------------------------------
# syntax tree


@dataclass(frozen=True)
class RingDecl:
    variables: tuple[str, ...]


@dataclass(frozen=True)
class IdealDecl:
    name: str
    generators: tuple[Polynomial, ...]


@dataclass(frozen=True)
class ModuleDecl:
    name: str
    ideal_name: str
    shift: int = 0


@dataclass(frozen=True)
class FormsDecl:
    name: str
    forms: tuple[LinearForm, ...]


@dataclass(frozen=True)
class SeriesCmd:
    module: str


@dataclass(frozen=True)
class CoeffsCmd:
    module: str


@dataclass(frozen=True)
class DepthCmd:
    module: str


@dataclass(frozen=True)
class SuperficialCmd:
    module: str
    forms: str


@dataclass(frozen=True)
class AdmissibleCmd:
    module: str
    forms: str


@dataclass(frozen=True)
class VerifyCmd:
    module: str
    forms: str
    index: int


@dataclass(frozen=True)
class OracleCmd:
    module: str
    degree: int


Statement = object  # any of the decl/cmd dataclasses above


@dataclass(frozen=True)
class Script:
    statements: tuple

    @property
    def ring(self) -> RingDecl:
        for s in self.statements:
            if isinstance(s, RingDecl):
                return s
        raise SemanticError("script declares no ring", 0, 0)

    @property
    def variables(self) -> tuple[str, ...]:
        return self.ring.variables

    def ideals(self) -> dict[str, IdealDecl]:
        return {s.name: s for s in self.statements if isinstance(s, IdealDecl)}

    def modules(self) -> dict[str, ModuleDecl]:
        return {s.name: s for s in self.statements if isinstance(s, ModuleDecl)}

    def form_groups(self) -> dict[str, FormsDecl]:
        return {s.name: s for s in self.statements if isinstance(s, FormsDecl)}

    def commands(self) -> Iterator[Statement]:
        for s in self.statements:
            if not isinstance(s, (RingDecl, IdealDecl, ModuleDecl, FormsDecl)):
                yield s


_EOF = Token("end of input", "", 0, 0)


class _Parser:
    def __init__(self, tokens: Sequence[Token]):
        self.tokens = list(tokens)
        self.pos = 0
        if self.tokens:
            last = self.tokens[-1]
            self.eof = Token(
                "end of input", "", last.line, last.column + max(len(last.text), 1)
            )
        else:
            self.eof = Token("end of input", "", 1, 1)
        self.variables: Optional[tuple[str, ...]] = None
        self.var_index: dict[str, int] = {}
        # one table: names for ideals, modules, and form groups all share it
        self.symbols: dict[str, str] = {}

    def peek(self) -> Token:
        return self.tokens[self.pos] if self.pos < len(self.tokens) else self.eof

    def advance(self) -> Token:
        tok = self.peek()
        if self.pos < len(self.tokens):
            self.pos += 1
        return tok

    def expect(self, kind: str, label: Optional[str] = None) -> Token:
        tok = self.peek()
        if tok.kind != kind:
            raise ParseError(
                f"unexpected {describe(tok)}",
                tok.line,
                tok.column,
                expected=[label or kind],
            )
        return self.advance()

    # -- statements --------------------------------------------------------

    def parse_script(self) -> Script:
        statements: list[Statement] = []
        if self.peek().kind == "end of input":
            tok = self.peek()
            raise ParseError(
                "empty script", tok.line, tok.column, expected=["a statement"]
            )
        while self.peek().kind != "end of input":
            statements.append(self.parse_statement())
        if self.variables is None:
            raise SemanticError("script declares no ring", 1, 1)
        return Script(tuple(statements))

    def parse_statement(self) -> Statement:
        tok = self.peek()
        if tok.kind not in STATEMENT_KEYWORDS:
            raise ParseError(
                f"unexpected {describe(tok)}",
                tok.line,
                tok.column,
                expected=sorted(STATEMENT_KEYWORDS),
            )
        handler = getattr(self, f"_parse_{tok.kind}")
        stmt = handler()
        self.expect(";")
        return stmt

    def _parse_ring(self) -> RingDecl:
        tok = self.advance()
        if self.variables is not None:
            raise SemanticError(
                "a script declares exactly one ring", tok.line, tok.column
            )
        names: list[str] = []
        while self.peek().kind == "ident":
            v = self.advance()
            if v.text in names:
                raise SemanticError(
                    f"variable {v.text} declared twice", v.line, v.column
                )
            if v.text == "R":
                raise SemanticError(
                    "R names the ambient ring and cannot be a variable",
                    v.line,
                    v.column,
                )
            names.append(v.text)
        if not names:
            nxt = self.peek()
            raise ParseError(
                f"unexpected {describe(nxt)}",
                nxt.line,
                nxt.column,
                expected=["a variable name"],
            )
        self.variables = tuple(names)
        self.var_index = {name: k for k, name in enumerate(names)}
        return RingDecl(self.variables)

    def _declare(self, tok: Token, kind: str) -> str:
        if tok.text in self.symbols:
            raise SemanticError(
                f"{tok.text} already declared as {self.symbols[tok.text]}",
                tok.line,
                tok.column,
            )
        self.symbols[tok.text] = kind
        return tok.text

    def _lookup(self, tok: Token, kind: str) -> str:
        declared = self.symbols.get(tok.text)
        if declared is None:
            raise SemanticError(f"undeclared name {tok.text}", tok.line, tok.column)
        if declared != kind:
            raise SemanticError(
                f"{tok.text} names {declared}, not {kind}", tok.line, tok.column
            )
        return tok.text

    def _parse_ideal(self) -> IdealDecl:
        self.advance()
        name_tok = self.expect("ident", "an ideal name")
        name = self._declare(name_tok, "ideal")
        self.expect("=")
        gens = [self.parse_polynomial()]
        while self.peek().kind == ",":
            self.advance()
            gens.append(self.parse_polynomial())
        kept = tuple(g for g in gens if not g.is_zero)
        # the zero ideal has no literal spelling, so an empty list here
        # would break the print/parse round trip
        if not kept:
            raise SemanticError(
                f"every generator of {name} cancels to zero",
                name_tok.line,
                name_tok.column,
            )
        return IdealDecl(name, kept)

    def _parse_module(self) -> ModuleDecl:
        self.advance()
        name_tok = self.expect("ident", "a module name")
        self.expect("=")
        r = self.expect("ident", "R")
        if r.text != "R":
            raise ParseError(
                f"unexpected {describe(r)}", r.line, r.column, expected=["R"]
            )
        self.expect("/")
        ideal_name = self._lookup(self.expect("ident", "an ideal name"), "ideal")
        shift = 0
        if self.peek().kind == "shift":
            self.advance()
            shift = int(self.expect("int", "an integer").text)
        name = self._declare(name_tok, "module")
        return ModuleDecl(name, ideal_name, shift)

    def _parse_forms(self) -> FormsDecl:
        self.advance()
        name = self._declare(self.expect("ident", "a forms name"), "forms")
        self.expect("=")
        members = [self.parse_linear_form()]
        while self.peek().kind == ",":
            self.advance()
            members.append(self.parse_linear_form())
        return FormsDecl(name, tuple(members))

    def _parse_series(self) -> SeriesCmd:
        self.advance()
        return SeriesCmd(self._lookup(self.expect("ident", "a module name"), "module"))

    def _parse_coeffs(self) -> CoeffsCmd:
        self.advance()
        return CoeffsCmd(self._lookup(self.expect("ident", "a module name"), "module"))

    def _parse_depth(self) -> DepthCmd:
        self.advance()
        return DepthCmd(self._lookup(self.expect("ident", "a module name"), "module"))

    def _parse_superficial(self) -> SuperficialCmd:
        self.advance()
        m = self._lookup(self.expect("ident", "a module name"), "module")
        f = self._lookup(self.expect("ident", "a forms name"), "forms")
        return SuperficialCmd(m, f)

    def _parse_admissible(self) -> AdmissibleCmd:
        self.advance()
        m = self._lookup(self.expect("ident", "a module name"), "module")
        f = self._lookup(self.expect("ident", "a forms name"), "forms")
        return AdmissibleCmd(m, f)

    def _parse_verify(self) -> VerifyCmd:
        self.advance()
        m = self._lookup(self.expect("ident", "a module name"), "module")
        f = self._lookup(self.expect("ident", "a forms name"), "forms")
        self.expect("i")
        self.expect("=")
        index = int(self.expect("int", "an integer").text)
        return VerifyCmd(m, f, index)

    def _parse_oracle(self) -> OracleCmd:
        self.advance()
        m = self._lookup(self.expect("ident", "a module name"), "module")
        degree = int(self.expect("int", "an integer").text)
        return OracleCmd(m, degree)

    # -- polynomial literals ------------------------------------------------

    def _require_ring(self, tok: Token) -> None:
        if self.variables is None:
            raise SemanticError(
                "polynomial literal before the ring declaration", tok.line, tok.column
            )

    def parse_polynomial(self) -> Polynomial:
        start = self.peek()
        self._require_ring(start)
        sign = 1
        if self.peek().kind in ("+", "-"):
            if self.advance().kind == "-":
                sign = -1
        poly = self.parse_term() * sign
        while self.peek().kind in ("+", "-"):
            op = self.advance().kind
            term = self.parse_term()
            poly = poly + term if op == "+" else poly - term
        degrees = {sum(m) for m in poly.terms}
        if len(degrees) > 1:
            raise SemanticError(
                f"inhomogeneous polynomial: mixes degrees {sorted(degrees)}",
                start.line,
                start.column,
            )
        return poly

    def parse_term(self) -> Polynomial:
        d = len(self.variables)
        tok = self.peek()
        coeff = Fraction(1)
        if tok.kind in ("int", "rat"):
            self.advance()
            coeff = Fraction(tok.text)
            if self.peek().kind == "*":
                self.advance()
        factors = 0
        poly = Polynomial.one(d) * coeff
        while True:
            v = self.expect("ident", "a ring variable")
            idx = self.var_index.get(v.text)
            if idx is None:
                raise SemanticError(
                    f"undeclared name {v.text}", v.line, v.column
                )
            exponent = 1
            if self.peek().kind == "^":
                self.advance()
                exponent = int(self.expect("int", "an integer").text)
            e = [0] * d
            e[idx] = exponent
            poly = poly * Polynomial.from_monomial(d, tuple(e))
            factors += 1
            if self.peek().kind == "*":
                self.advance()
                continue
            if self.peek().kind == "ident":
                continue
            return poly

    def parse_linear_form(self) -> LinearForm:
        start = self.peek()
        poly = self.parse_polynomial()
        degrees = sorted({sum(m) for m in poly.terms})
        if degrees != [1]:
            shown = degrees if degrees else "the zero form"
            raise SemanticError(
                f"form must have degree exactly 1, got {shown}",
                start.line,
                start.column,
            )
        d = len(self.variables)
        coeffs = [Fraction(0)] * d
        for m, c in poly.terms.items():
            coeffs[next(k for k, e in enumerate(m) if e)] = c
        return LinearForm(tuple(coeffs))


def describe(tok: Token) -> str:
    if tok.kind == "ident":
        return f"identifier {tok.text}"
    if tok.kind in ("int", "rat"):
        return f"literal {tok.text}"
    if tok.kind == "end of input":
        return "end of input"
    return f"{tok.text!r}"


def parse(tokens: Sequence[Token]) -> Script:
    return _Parser(tokens).parse_script()


def parse_text(text: str) -> Script:
    return parse(tokenize(text))


# ---------------------------------------------------------------------------
# pretty-printing; parse(pretty_print(s)) is structurally s again


def format_polynomial(poly: Polynomial, variables: Sequence[str]) -> str:
    if poly.is_zero:
        return "0"
    order = DegRevLex(poly.nvars)
    monomials = sorted(
        poly.terms,
        key=cmp_to_key(lambda a, b: compare_monomials(a, b, order)),
        reverse=True,
    )
    pieces: list[str] = []
    for m in monomials:
        c = poly.terms[m]
        factors = []
        for k, e in enumerate(m):
            if e == 1:
                factors.append(variables[k])
            elif e > 1:
                factors.append(f"{variables[k]}^{e}")
        mag = abs(c)
        if mag != 1 or not factors:
            factors.insert(0, str(mag))
        body = "*".join(factors)
        if not pieces:
            pieces.append(body if c > 0 else f"-{body}")
        else:
            pieces.append(f"{'+' if c > 0 else '-'} {body}")
    return " ".join(pieces)


def format_form(form: LinearForm, variables: Sequence[str]) -> str:
    return format_polynomial(form.to_polynomial(), variables)


def pretty_print(script: Script) -> str:
    variables = script.variables
    lines: list[str] = []
    for s in script.statements:
        if isinstance(s, RingDecl):
            lines.append(f"ring {' '.join(s.variables)};")
        elif isinstance(s, IdealDecl):
            gens = ", ".join(format_polynomial(g, variables) for g in s.generators)
            lines.append(f"ideal {s.name} = {gens};")
        elif isinstance(s, ModuleDecl):
            tail = f" shift {s.shift}" if s.shift else ""
            lines.append(f"module {s.name} = R/{s.ideal_name}{tail};")
        elif isinstance(s, FormsDecl):
            members = ", ".join(format_form(f, variables) for f in s.forms)
            lines.append(f"forms {s.name} = {members};")
        elif isinstance(s, SeriesCmd):
            lines.append(f"series {s.module};")
        elif isinstance(s, CoeffsCmd):
            lines.append(f"coeffs {s.module};")
        elif isinstance(s, DepthCmd):
            lines.append(f"depth {s.module};")
        elif isinstance(s, SuperficialCmd):
            lines.append(f"superficial {s.module} {s.forms};")
        elif isinstance(s, AdmissibleCmd):
            lines.append(f"admissible {s.module} {s.forms};")
        elif isinstance(s, VerifyCmd):
            lines.append(f"verify {s.module} {s.forms} i={s.index};")
        elif isinstance(s, OracleCmd):
            lines.append(f"oracle {s.module} {s.degree};")
        else:
            raise TypeError(f"unknown statement {s!r}")
    return "\n".join(lines) + "\n"
