"""Expression front end: text -> ExprAst -> NormalForm.

Grammar (whitespace ignored, juxtaposition is the noncommutative product)::

    expr   := signed (('+' | '-') signed)*
    signed := '-' signed | term
    term   := factor (('*')? factor)*
    factor := atom ('^' nat)?
    atom   := 'a' | 'A' | 'a†' | 'ad' | 'I' | integer | '(' expr ')'
"""

from dataclasses import dataclass
from functools import reduce
from typing import List, Optional, Sequence, Tuple, Union

from .algebra import (
    NormalForm,
    add,
    multiply,
    normal_order_word,
    power,
    scalar_mul,
)
from .config import DEFAULT_EXPONENT_LIMIT
from .word_path import Letter, Word


class ParseError(ValueError):
    """Syntax error with a 0-based UTF-8 byte offset and the tokens that would fit."""

    def __init__(
        self,
        offset: int,
        expected: Sequence[str] = (),
        found: str = "",
        message: Optional[str] = None,
    ):
        self.offset = offset
        self.expected = tuple(sorted(set(expected)))
        self.found = found
        if message is None:
            message = (
                f"syntax error at byte {offset}: expected {' or '.join(self.expected)}, "
                f"found {found}"
            )
        super().__init__(message)


# --- AST ---


@dataclass(frozen=True)
class Scalar:
    value: int


@dataclass(frozen=True)
class Gen:
    letter: Letter


@dataclass(frozen=True)
class Identity:
    pass


@dataclass(frozen=True)
class Sum:
    terms: Tuple["ExprAst", ...]


@dataclass(frozen=True)
class Product:
    factors: Tuple["ExprAst", ...]


@dataclass(frozen=True)
class Power:
    base: "ExprAst"
    exponent: int


@dataclass(frozen=True)
class Negate:
    operand: "ExprAst"


ExprAst = Union[Scalar, Gen, Identity, Sum, Product, Power, Negate]


# --- TOKENIZER ---


@dataclass(frozen=True)
class _Token:
    kind: str
    text: str
    offset: int


_PUNCTUATION = "+-*^()"
_ATOM_STARTS = ("'a'", "'A'", "'I'", "integer", "'('")
_END = "end of input"


def _describe(token: _Token) -> str:
    return _END if token.kind == "EOF" else repr(token.text)


def tokenize(text: str) -> List[_Token]:
    tokens: List[_Token] = []
    i = 0
    offset = 0
    while i < len(text):
        ch = text[i]
        if ch.isspace():
            i += 1
            offset += len(ch.encode("utf-8"))
            continue
        if ch == "a" and i + 1 < len(text) and text[i + 1] in ("†", "d"):
            kind, lexeme = "A", text[i:i + 2]
        elif ch in ("a", "A", "I") or ch in _PUNCTUATION:
            kind, lexeme = ch, ch
        elif ch.isascii() and ch.isdigit():
            end = i
            while end < len(text) and text[end].isascii() and text[end].isdigit():
                end += 1
            kind, lexeme = "INT", text[i:end]
        elif ch == "†":
            raise ParseError(offset, ("'a' before '†'",), repr(ch))
        else:
            raise ParseError(offset, _ATOM_STARTS + ("'+'", "'-'", "'*'", "'^'", "')'"), repr(ch))
        tokens.append(_Token(kind, lexeme, offset))
        i += len(lexeme)
        offset += len(lexeme.encode("utf-8"))
    tokens.append(_Token("EOF", "", offset))
    return tokens


# --- PARSER ---


class _Parser:
    def __init__(self, tokens: List[_Token], exponent_limit: int):
        self.tokens = tokens
        self.pos = 0
        self.exponent_limit = exponent_limit

    def peek(self) -> _Token:
        return self.tokens[self.pos]

    def advance(self) -> _Token:
        token = self.tokens[self.pos]
        self.pos += 1
        return token

    def fail(self, expected: Sequence[str]) -> ParseError:
        token = self.peek()
        return ParseError(token.offset, expected, _describe(token))

    def parse_expr(self) -> ExprAst:
        terms = [self.parse_signed()]
        while self.peek().kind in ("+", "-"):
            op = self.advance()
            operand = self.parse_signed()
            terms.append(Negate(operand) if op.kind == "-" else operand)
        return terms[0] if len(terms) == 1 else Sum(tuple(terms))

    def parse_signed(self) -> ExprAst:
        if self.peek().kind == "-":
            self.advance()
            return Negate(self.parse_signed())
        return self.parse_term()

    def parse_term(self) -> ExprAst:
        factors = [self.parse_factor()]
        while True:
            kind = self.peek().kind
            if kind == "*":
                self.advance()
                factors.append(self.parse_factor())
            elif kind in ("a", "A", "I", "INT", "("):
                factors.append(self.parse_factor())
            else:
                break
        return factors[0] if len(factors) == 1 else Product(tuple(factors))

    def parse_factor(self) -> ExprAst:
        base = self.parse_atom()
        if self.peek().kind != "^":
            return base
        self.advance()
        token = self.peek()
        if token.kind != "INT":
            raise self.fail(("integer",))
        self.advance()
        exponent = int(token.text)
        if exponent > self.exponent_limit:
            raise ParseError(
                token.offset,
                ("integer",),
                token.text,
                message=(
                    f"exponent {exponent} at byte {token.offset} exceeds limit "
                    f"{self.exponent_limit}"
                ),
            )
        return Power(base, exponent)

    def parse_atom(self) -> ExprAst:
        token = self.peek()
        if token.kind == "a":
            self.advance()
            return Gen(Letter.ANNIHILATOR)
        if token.kind == "A":
            self.advance()
            return Gen(Letter.CREATOR)
        if token.kind == "I":
            self.advance()
            return Identity()
        if token.kind == "INT":
            self.advance()
            return Scalar(int(token.text))
        if token.kind == "(":
            self.advance()
            inner = self.parse_expr()
            if self.peek().kind != ")":
                raise self.fail(("')'", "'+'", "'-'", "'*'", "'^'") + _ATOM_STARTS)
            self.advance()
            return inner
        raise self.fail(_ATOM_STARTS + ("'-'",))


def parse(text: str, exponent_limit: int = DEFAULT_EXPONENT_LIMIT) -> ExprAst:
    """Parse ``text`` into an ExprAst.

    Raises:
        ParseError: On a syntax error or an exponent above ``exponent_limit``.
    """
    parser = _Parser(tokenize(text), exponent_limit)
    ast = parser.parse_expr()
    if parser.peek().kind != "EOF":
        raise parser.fail((_END, "'+'", "'-'", "'*'", "'^'") + _ATOM_STARTS)
    return ast


# --- EVALUATION ---


def word_of(ast: ExprAst) -> Optional[Word]:
    """The word spelled by a bare generator or a product of bare generators, else None."""
    if isinstance(ast, Gen):
        return Word((ast.letter,))
    if isinstance(ast, Product) and all(isinstance(f, Gen) for f in ast.factors):
        return Word(tuple(f.letter for f in ast.factors))
    return None


def _evaluate_product(factors: Sequence[ExprAst]) -> NormalForm:
    # Runs of bare generators go through the rook route as one word.
    pieces: List[NormalForm] = []
    run: List[Letter] = []
    for factor in factors:
        if isinstance(factor, Gen):
            run.append(factor.letter)
            continue
        if run:
            pieces.append(normal_order_word(Word(tuple(run))))
            run = []
        pieces.append(evaluate(factor))
    if run:
        pieces.append(normal_order_word(Word(tuple(run))))
    return reduce(multiply, pieces, NormalForm.identity())


def evaluate(ast: ExprAst) -> NormalForm:
    if isinstance(ast, Scalar):
        return NormalForm.monomial(0, 0, ast.value)
    if isinstance(ast, Gen):
        if ast.letter is Letter.CREATOR:
            return NormalForm.monomial(1, 0)
        return NormalForm.monomial(0, 1)
    if isinstance(ast, Identity):
        return NormalForm.identity()
    if isinstance(ast, Sum):
        return reduce(add, (evaluate(term) for term in ast.terms), NormalForm.zero())
    if isinstance(ast, Product):
        return _evaluate_product(ast.factors)
    if isinstance(ast, Power):
        return power(evaluate(ast.base), ast.exponent)
    if isinstance(ast, Negate):
        return scalar_mul(-1, evaluate(ast.operand))
    raise TypeError(f"not an expression node: {ast!r}")


def normalize(text: str, exponent_limit: int = DEFAULT_EXPONENT_LIMIT) -> NormalForm:
    return evaluate(parse(text, exponent_limit))
