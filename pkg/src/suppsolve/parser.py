"""Text syntax for ground normal logic programs.

Statements are ``h.``, ``h :- lit, ..., lit.`` and ``:- lit, ..., lit.``
with ``lit ::= atom | "not" atom``.  Atom names are lowercase-initial
identifiers; ``not`` is reserved; ``%`` starts a comment running to end of
line.  Printed programs are valid input for Clingo-style solvers running
on ground programs.
"""

from typing import Optional

from .core import Program, Rule, SymbolTable

# Auxiliary atoms introduced by the transformation use this prefix; it is
# rejected in input so freshness holds by construction.
RESERVED_PREFIX = "_dm_"


class ParseError(Exception):
    """Parse failure with a 1-based source position.

    ``kind`` is one of ``lex``, ``syntax``, ``reserved-prefix`` and
    ``non-ground``.
    """

    def __init__(self, line: int, column: int, message: str, kind: str = "syntax"):
        super().__init__(f"{line}:{column}: {message}")
        self.line = line
        self.column = column
        self.message = message
        self.kind = kind


_IDENT_START = set("abcdefghijklmnopqrstuvwxyz")
_IDENT_START_RESERVED = _IDENT_START | {"_"}
_IDENT_CONT = set("abcdefghijklmnopqrstuvwxyzABCDEFGHIJKLMNOPQRSTUVWXYZ0123456789_")
_UPPER = set("ABCDEFGHIJKLMNOPQRSTUVWXYZ")


class _Token:
    __slots__ = ("kind", "text", "line", "column")

    def __init__(self, kind: str, text: str, line: int, column: int):
        self.kind = kind  # "ident", "not", ":-", ",", "."
        self.text = text
        self.line = line
        self.column = column


def _tokenize(text: str, allow_reserved: bool) -> list[_Token]:
    tokens: list[_Token] = []
    line, col = 1, 1
    i, n = 0, len(text)
    ident_start = _IDENT_START_RESERVED if allow_reserved else _IDENT_START
    while i < n:
        c = text[i]
        if c == "\n":
            line += 1
            col = 1
            i += 1
        elif c in " \t\r":
            i += 1
            col += 1
        elif c == "%":
            while i < n and text[i] != "\n":
                i += 1
        elif c == ":" and i + 1 < n and text[i + 1] == "-":
            tokens.append(_Token(":-", ":-", line, col))
            i += 2
            col += 2
        elif c in (",", "."):
            tokens.append(_Token(c, c, line, col))
            i += 1
            col += 1
        elif c in ident_start:
            start = i
            start_col = col
            while i < n and text[i] in _IDENT_CONT:
                i += 1
                col += 1
            word = text[start:i]
            if word == "not":
                tokens.append(_Token("not", word, line, start_col))
            else:
                tokens.append(_Token("ident", word, line, start_col))
        elif c in _UPPER:
            start_col = col
            start = i
            while i < n and text[i] in _IDENT_CONT:
                i += 1
                col += 1
            raise ParseError(
                line, start_col,
                f"variable {text[start:i]!r} in input: only ground programs are accepted",
                kind="non-ground",
            )
        elif c == "_" and not allow_reserved:
            start = i
            while i < n and text[i] in _IDENT_CONT:
                i += 1
            word = text[start:i]
            kind = "reserved-prefix" if word.startswith(RESERVED_PREFIX) else "lex"
            raise ParseError(
                line, col,
                f"atom name {word!r} may not start with an underscore"
                if kind == "lex"
                else f"atom name {word!r} uses the reserved prefix {RESERVED_PREFIX!r}",
                kind=kind,
            )
        else:
            raise ParseError(line, col, f"unexpected character {c!r}", kind="lex")
    return tokens


def parse(text: str, allow_reserved: bool = False) -> Program:
    """Parse program source into a :class:`Program`.

    Rule order equals statement order and facts become rules with an empty
    body.  ``allow_reserved`` admits underscore-initial atom names,
    including the ``_dm_`` prefix; it is meant for re-reading already
    transformed programs and is off for ordinary input.
    """
    tokens = _tokenize(text, allow_reserved)
    symbols = SymbolTable()
    rules: list[Rule] = []
    pos = 0

    def peek() -> Optional[_Token]:
        return tokens[pos] if pos < len(tokens) else None

    def fail(tok: Optional[_Token], message: str) -> ParseError:
        if tok is None:
            last_line = tokens[-1].line if tokens else 1
            return ParseError(last_line, 1, message + " (unexpected end of input)")
        return ParseError(tok.line, tok.column, message)

    def expect(kind: str, what: str) -> _Token:
        nonlocal pos
        tok = peek()
        if tok is None or tok.kind != kind:
            raise fail(tok, f"expected {what}")
        pos += 1
        return tok

    def parse_body() -> tuple[set[int], set[int]]:
        nonlocal pos
        body_pos: set[int] = set()
        body_neg: set[int] = set()
        while True:
            tok = peek()
            negated = False
            if tok is not None and tok.kind == "not":
                pos += 1
                negated = True
            atom_tok = expect("ident", "atom name")
            atom = symbols.intern(atom_tok.text)
            (body_neg if negated else body_pos).add(atom)
            tok = peek()
            if tok is not None and tok.kind == ",":
                pos += 1
                continue
            break
        return body_pos, body_neg

    while pos < len(tokens):
        tok = tokens[pos]
        if tok.kind == ":-":  # constraint
            pos += 1
            body_pos, body_neg = parse_body()
            expect(".", "'.' at end of statement")
            rules.append(Rule(None, frozenset(body_pos), frozenset(body_neg)))
        elif tok.kind == "ident":
            head = symbols.intern(tok.text)
            pos += 1
            nxt = peek()
            if nxt is not None and nxt.kind == ".":
                pos += 1
                rules.append(Rule(head))
            elif nxt is not None and nxt.kind == ":-":
                pos += 1
                body_pos, body_neg = parse_body()
                expect(".", "'.' at end of statement")
                rules.append(Rule(head, frozenset(body_pos), frozenset(body_neg)))
            else:
                raise fail(nxt, "expected '.' or ':-' after rule head")
        else:
            raise fail(tok, "expected rule head or ':-'")

    return Program(symbols, tuple(rules))


def format_rule(program: Program, r: Rule) -> str:
    """One statement, body literals in symbol-table order, positives first."""
    names = program.symbols.names
    lits = [names[a] for a in sorted(r.pos)] + [f"not {names[a]}" for a in sorted(r.neg)]
    if r.head is None:
        return ":- " + ", ".join(lits) + "."
    head = names[r.head]
    if not lits:
        return head + "."
    return head + " :- " + ", ".join(lits) + "."


def print_program(program: Program) -> str:
    """Render a program, one statement per line.

    The layout is bit-exact: a single space after ``:-`` and after each
    comma, lines joined by newlines, no trailing newline.  Parsing the
    result yields a structurally equal program.
    """
    return "\n".join(format_rule(program, r) for r in program.rules)
