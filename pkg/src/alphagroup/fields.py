"""Scalar-field expressions in the coordinates x, y, z, t.

Fields are parsed into immutable expression trees and evaluated to real
numbers.  The grammar (whitespace-insensitive):

    expr   := term (('+' | '-') term)*          # left associative
    term   := unary (('*' | '/') unary)*        # left associative
    unary  := '-' unary | power
    power  := atom ('^' unary)?                 # right associative
    atom   := NUMBER | VAR | FUNC '(' expr ')' | '(' expr ')'

    VAR    := 'x' | 'y' | 'z' | 't'
    FUNC   := 'sin' | 'cos' | 'exp' | 'sqrt' | 'abs'
    NUMBER := unsigned decimal literal with optional fraction/exponent

Exponentiation with a negative base is only defined for integer-valued
nonnegative exponents; anything else raises :class:`EvalError` at
evaluation time, so fields never take complex values.

Metric-definition files are line oriented:

    # comment lines and blank lines are ignored
    name = "<label>"          # optional, at most once
    g[r][c] = <expression>    # r, c in 1..4; unassigned slots are 0

Parsing is total: any input yields either a tree or a positioned
:class:`ParseError`.  Nesting deeper than ``MAX_NESTING`` levels is
rejected (positioned error) rather than exhausting the interpreter stack.
"""

from __future__ import annotations

import math
import re
from dataclasses import dataclass
from typing import Mapping

from .errors import (ComponentIndexError, DuplicateComponentError, EvalError,
                     ParseError, UnknownIdentifierError)

VARIABLES = ("x", "y", "z", "t")
FUNCTIONS = ("sin", "cos", "exp", "sqrt", "abs")

#: Maximum parenthesis/operator nesting depth accepted by the parser.
MAX_NESTING = 200

# Rendering precedence levels; parenthesisation in render() keys off these.
_PREC_ADD = 1
_PREC_MUL = 2
_PREC_UNARY = 3
_PREC_POW = 4
_PREC_ATOM = 5

_BINOP_PREC = {"+": _PREC_ADD, "-": _PREC_ADD,
               "*": _PREC_MUL, "/": _PREC_MUL, "^": _PREC_POW}


class ScalarField:
    """Base class for expression-tree nodes.

    Trees are immutable; equality is structural.  ``evaluate`` takes the
    four coordinate values and returns a finite float or raises
    :class:`EvalError`.
    """

    precedence = _PREC_ATOM

    def evaluate(self, x: float, y: float, z: float, t: float) -> float:
        raise NotImplementedError

    def render(self) -> str:
        raise NotImplementedError

    def __str__(self) -> str:
        return self.render()


def _require_finite(value: float, what: str) -> float:
    if not math.isfinite(value):
        raise EvalError(f"non-finite result in {what}")
    return value


@dataclass(frozen=True)
class Num(ScalarField):
    value: float

    def __post_init__(self):
        if not math.isfinite(self.value):
            raise ValueError("literal must be finite")

    def evaluate(self, x, y, z, t):
        return self.value

    def render(self):
        return repr(self.value)


@dataclass(frozen=True)
class Var(ScalarField):
    name: str

    def __post_init__(self):
        if self.name not in VARIABLES:
            raise ValueError(f"unknown variable {self.name!r}")

    def evaluate(self, x, y, z, t):
        if self.name == "x":
            return x
        if self.name == "y":
            return y
        if self.name == "z":
            return z
        return t

    def render(self):
        return self.name


@dataclass(frozen=True)
class Neg(ScalarField):
    operand: ScalarField

    precedence = _PREC_UNARY

    def evaluate(self, x, y, z, t):
        return -self.operand.evaluate(x, y, z, t)

    def render(self):
        inner = self.operand.render()
        if self.operand.precedence < _PREC_UNARY:
            inner = f"({inner})"
        return f"-{inner}"


@dataclass(frozen=True)
class BinOp(ScalarField):
    op: str
    left: ScalarField
    right: ScalarField

    def __post_init__(self):
        if self.op not in _BINOP_PREC:
            raise ValueError(f"unknown operator {self.op!r}")

    @property
    def precedence(self):
        return _BINOP_PREC[self.op]

    def evaluate(self, x, y, z, t):
        lhs = self.left.evaluate(x, y, z, t)
        rhs = self.right.evaluate(x, y, z, t)
        op = self.op
        if op == "+":
            return _require_finite(lhs + rhs, "'+'")
        if op == "-":
            return _require_finite(lhs - rhs, "'-'")
        if op == "*":
            return _require_finite(lhs * rhs, "'*'")
        if op == "/":
            if rhs == 0.0:
                raise EvalError("division by zero")
            return _require_finite(lhs / rhs, "'/'")
        return self._power(lhs, rhs)

    @staticmethod
    def _power(base: float, exponent: float) -> float:
        if base < 0.0:
            # Keep fields real-valued: a negative base only admits
            # integer exponents >= 0.
            if not float(exponent).is_integer():
                raise EvalError(
                    f"negative base {base:g} with non-integer exponent {exponent:g}")
            if exponent < 0.0:
                raise EvalError(
                    f"negative base {base:g} with negative exponent {exponent:g}")
        try:
            result = math.pow(base, exponent)
        except (ValueError, OverflowError) as exc:
            raise EvalError(f"invalid power {base:g}^{exponent:g}") from exc
        return _require_finite(result, "'^'")

    def render(self):
        lhs = self.left.render()
        rhs = self.right.render()
        if self.op == "^":
            if self.left.precedence <= _PREC_POW:
                lhs = f"({lhs})"
            if self.right.precedence < _PREC_UNARY:
                rhs = f"({rhs})"
            return f"{lhs}^{rhs}"
        prec = self.precedence
        if self.left.precedence < prec:
            lhs = f"({lhs})"
        if self.right.precedence <= prec:
            rhs = f"({rhs})"
        return f"{lhs} {self.op} {rhs}"


@dataclass(frozen=True)
class Func(ScalarField):
    name: str
    arg: ScalarField

    def __post_init__(self):
        if self.name not in FUNCTIONS:
            raise ValueError(f"unknown function {self.name!r}")

    def evaluate(self, x, y, z, t):
        value = self.arg.evaluate(x, y, z, t)
        name = self.name
        if name == "sqrt":
            if value < 0.0:
                raise EvalError(f"sqrt of negative argument {value:g}")
            return math.sqrt(value)
        if name == "abs":
            return abs(value)
        try:
            if name == "sin":
                return math.sin(value)
            if name == "cos":
                return math.cos(value)
            result = math.exp(value)
        except OverflowError as exc:
            raise EvalError(f"overflow in {name}({value:g})") from exc
        return _require_finite(result, f"'{name}'")

    def render(self):
        return f"{self.name}({self.arg.render()})"


ZERO_FIELD = Num(0.0)


# -- tokenizer ------------------------------------------------------------

_TOKEN_RE = re.compile(
    r"""(?P<num>(?:\d+\.\d*|\.\d+|\d+)(?:[eE][+-]?\d+)?)
      | (?P<ident>[A-Za-z_][A-Za-z_0-9]*)
      | (?P<op>[-+*/^()])
    """,
    re.VERBOSE,
)

_WHITESPACE = " \t\r\n\f\v"


@dataclass(frozen=True)
class _Token:
    kind: str  # num | ident | op | eof
    text: str
    pos: int   # character position in the source


def _byte_offset(source: str, pos: int) -> int:
    return len(source[:pos].encode("utf-8", errors="surrogatepass"))


def _tokenize(source: str) -> list[_Token]:
    tokens = []
    pos = 0
    n = len(source)
    while pos < n:
        if source[pos] in _WHITESPACE:
            pos += 1
            continue
        m = _TOKEN_RE.match(source, pos)
        if m is None:
            raise ParseError(f"unexpected character {source[pos]!r}",
                             offset=_byte_offset(source, pos))
        kind = m.lastgroup
        tokens.append(_Token(kind, m.group(), pos))
        pos = m.end()
    tokens.append(_Token("eof", "", n))
    return tokens


# -- recursive-descent parser ----------------------------------------------


class _Parser:
    def __init__(self, source: str):
        self.source = source
        self.tokens = _tokenize(source)
        self.index = 0

    def peek(self) -> _Token:
        return self.tokens[self.index]

    def advance(self) -> _Token:
        token = self.tokens[self.index]
        self.index += 1
        return token

    def error(self, message: str, token: _Token | None = None) -> ParseError:
        token = token or self.peek()
        return ParseError(message, offset=_byte_offset(self.source, token.pos))

    def check_depth(self, depth: int):
        if depth > MAX_NESTING:
            raise self.error(f"expression nests deeper than {MAX_NESTING} levels")

    def parse_expr(self, depth: int) -> ScalarField:
        self.check_depth(depth)
        node = self.parse_term(depth)
        while self.peek().kind == "op" and self.peek().text in "+-":
            op = self.advance().text
            node = BinOp(op, node, self.parse_term(depth))
        return node

    def parse_term(self, depth: int) -> ScalarField:
        node = self.parse_unary(depth)
        while self.peek().kind == "op" and self.peek().text in "*/":
            op = self.advance().text
            node = BinOp(op, node, self.parse_unary(depth))
        return node

    def parse_unary(self, depth: int) -> ScalarField:
        self.check_depth(depth)
        if self.peek().kind == "op" and self.peek().text == "-":
            self.advance()
            return Neg(self.parse_unary(depth + 1))
        return self.parse_power(depth)

    def parse_power(self, depth: int) -> ScalarField:
        node = self.parse_atom(depth)
        if self.peek().kind == "op" and self.peek().text == "^":
            self.advance()
            node = BinOp("^", node, self.parse_unary(depth + 1))
        return node

    def parse_atom(self, depth: int) -> ScalarField:
        token = self.peek()
        if token.kind == "num":
            self.advance()
            value = float(token.text)
            if not math.isfinite(value):
                raise self.error("numeric literal overflows", token)
            return Num(value)
        if token.kind == "ident":
            self.advance()
            if token.text in VARIABLES:
                return Var(token.text)
            if token.text in FUNCTIONS:
                if not (self.peek().kind == "op" and self.peek().text == "("):
                    raise self.error(f"expected '(' after function {token.text!r}")
                self.advance()
                arg = self.parse_expr(depth + 1)
                self.expect_close()
                return Func(token.text, arg)
            raise UnknownIdentifierError(
                f"unknown identifier {token.text!r}",
                offset=_byte_offset(self.source, token.pos))
        if token.kind == "op" and token.text == "(":
            self.advance()
            node = self.parse_expr(depth + 1)
            self.expect_close()
            return node
        if token.kind == "eof":
            raise self.error("unexpected end of input", token)
        raise self.error(f"unexpected token {token.text!r}", token)

    def expect_close(self):
        token = self.peek()
        if not (token.kind == "op" and token.text == ")"):
            raise self.error("expected ')'", token)
        self.advance()


def parse_field(source: str) -> ScalarField:
    """Parse an expression into a :class:`ScalarField` tree."""
    parser = _Parser(source)
    tree = parser.parse_expr(0)
    trailing = parser.peek()
    if trailing.kind != "eof":
        raise parser.error(f"unexpected trailing input {trailing.text!r}", trailing)
    return tree


def eval_field(field: ScalarField, x: float, y: float, z: float, t: float) -> float:
    """Evaluate ``field`` at the given coordinates."""
    return field.evaluate(x, y, z, t)


# -- metric-definition files -------------------------------------------------

_NAME_RE = re.compile(r'^name\s*=\s*"([^"]*)"\s*$')
_COMPONENT_RE = re.compile(r"^g\s*\[\s*(\d+)\s*\]\s*\[\s*(\d+)\s*\]\s*=\s*(.+)$")


@dataclass(frozen=True)
class MetricDefinition:
    """Parsed metric file: a label plus a sparse 4x4 grid of fields."""

    name: str | None
    components: Mapping[tuple[int, int], ScalarField]

    def field_at(self, row: int, col: int) -> ScalarField:
        if not (1 <= row <= 4 and 1 <= col <= 4):
            raise ValueError(f"component index g[{row}][{col}] outside 1..4")
        return self.components.get((row, col), ZERO_FIELD)


def parse_metric_file(source: str) -> MetricDefinition:
    """Parse a metric-definition file (see module docstring for the format)."""
    name: str | None = None
    components: dict[tuple[int, int], ScalarField] = {}
    for lineno, raw in enumerate(source.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        m = _NAME_RE.match(line)
        if m:
            if name is not None:
                raise ParseError("duplicate name line", line=lineno)
            name = m.group(1)
            continue
        m = _COMPONENT_RE.match(line)
        if m is None:
            raise ParseError(
                "expected 'g[r][c] = <expression>' or 'name = \"<label>\"'",
                line=lineno)
        row, col = int(m.group(1)), int(m.group(2))
        if not (1 <= row <= 4 and 1 <= col <= 4):
            raise ComponentIndexError(
                f"component index g[{row}][{col}] outside 1..4", line=lineno)
        if (row, col) in components:
            raise DuplicateComponentError(
                f"g[{row}][{col}] assigned twice", line=lineno)
        try:
            components[row, col] = parse_field(m.group(3))
        except ParseError as exc:
            raise type(exc)(exc.message, offset=exc.offset, line=lineno) from exc
    return MetricDefinition(name, components)
