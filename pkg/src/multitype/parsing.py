"""Text input format: variable declarations plus one generator per line.

    # comments run to end of line
    vars: z1 z2 z3
    gens:
    z1 - z2 + z3^2
    z1^2 - z2^2

Expressions support integer and p/q rational coefficients, the imaginary unit
``i``, exponentiation with ^, parentheses, and multiplication by juxtaposition
(the * is optional across a token boundary: whitespace, parentheses, or a
digit-to-letter transition; identifiers lex greedily, so ``z1z2`` is a single
name).  Generators must be polynomials over exactly the declared variables and
must vanish at the origin.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence

from .errors import ConstantTermError, InputSyntaxError
from .gaussian import GaussianRational
from .kolar import RunConfig
from .polynomial import Polynomial


@dataclass(frozen=True)
class InputSpec:
    variable_names: tuple[str, ...]
    generators: tuple[Polynomial, ...]
    config: RunConfig


@dataclass(frozen=True)
class _Token:
    kind: str  # INT, NAME, OP
    text: str
    line: int
    column: int


def _tokenize(text: str, line: int) -> list[_Token]:
    tokens = []
    pos = 0
    while pos < len(text):
        ch = text[pos]
        if ch.isspace():
            pos += 1
            continue
        if ch == "#":
            break
        if ch.isdigit():
            start = pos
            while pos < len(text) and text[pos].isdigit():
                pos += 1
            tokens.append(_Token("INT", text[start:pos], line, start + 1))
            continue
        if ch.isalpha() or ch == "_":
            start = pos
            while pos < len(text) and (text[pos].isalnum() or text[pos] == "_"):
                pos += 1
            tokens.append(_Token("NAME", text[start:pos], line, start + 1))
            continue
        if ch in "+-*^()/":
            tokens.append(_Token("OP", ch, line, pos + 1))
            pos += 1
            continue
        raise InputSyntaxError(f"unexpected character {ch!r}", line, pos + 1)
    return tokens


class _ExpressionParser:
    """Recursive descent over one generator line."""

    def __init__(self, tokens: list[_Token], variables: dict[str, int], line: int):
        self.tokens = tokens
        self.variables = variables
        self.line = line
        self.pos = 0
        self.nvars = len(variables)

    def _peek(self) -> _Token | None:
        return self.tokens[self.pos] if self.pos < len(self.tokens) else None

    def _next(self) -> _Token:
        token = self._peek()
        if token is None:
            last = self.tokens[-1] if self.tokens else None
            column = (last.column + len(last.text)) if last else 1
            raise InputSyntaxError("unexpected end of expression", self.line, column)
        self.pos += 1
        return token

    def parse(self) -> Polynomial:
        result = self._expression()
        leftover = self._peek()
        if leftover is not None:
            raise InputSyntaxError(
                f"unexpected {leftover.text!r}", leftover.line, leftover.column
            )
        return result

    def _expression(self) -> Polynomial:
        token = self._peek()
        negate = False
        if token is not None and token.kind == "OP" and token.text in "+-":
            self._next()
            negate = token.text == "-"
        result = self._term()
        if negate:
            result = -result
        while True:
            token = self._peek()
            if token is None or token.kind != "OP" or token.text not in "+-":
                break
            self._next()
            rhs = self._term()
            result = result - rhs if token.text == "-" else result + rhs
        return result

    def _term(self) -> Polynomial:
        result = self._factor()
        while True:
            token = self._peek()
            if token is None:
                break
            if token.kind == "OP" and token.text == "*":
                self._next()
                result = result * self._factor()
                continue
            if token.kind in ("INT", "NAME") or (
                token.kind == "OP" and token.text == "("
            ):
                result = result * self._factor()
                continue
            break
        return result

    def _factor(self) -> Polynomial:
        base = self._atom()
        token = self._peek()
        if token is not None and token.kind == "OP" and token.text == "^":
            self._next()
            exponent = self._next()
            if exponent.kind != "INT":
                raise InputSyntaxError(
                    "exponent must be a nonnegative integer",
                    exponent.line,
                    exponent.column,
                )
            return base ** int(exponent.text)
        return base

    def _atom(self) -> Polynomial:
        token = self._next()
        if token.kind == "OP" and token.text == "-":
            return -self._atom()
        if token.kind == "OP" and token.text == "(":
            inner = self._expression()
            closing = self._next()
            if closing.kind != "OP" or closing.text != ")":
                raise InputSyntaxError(
                    "expected closing parenthesis", closing.line, closing.column
                )
            return inner
        if token.kind == "INT":
            numerator = int(token.text)
            nxt = self._peek()
            if nxt is not None and nxt.kind == "OP" and nxt.text == "/":
                self._next()
                denom = self._next()
                if denom.kind != "INT" or int(denom.text) == 0:
                    raise InputSyntaxError(
                        "denominator must be a nonzero integer",
                        denom.line,
                        denom.column,
                    )
                return Polynomial.constant(
                    self.nvars, Fraction(numerator, int(denom.text))
                )
            return Polynomial.constant(self.nvars, numerator)
        if token.kind == "NAME":
            if token.text == "i":
                return Polynomial.constant(self.nvars, GaussianRational(0, 1))
            index = self.variables.get(token.text)
            if index is None:
                raise InputSyntaxError(
                    f"undeclared variable {token.text!r}", token.line, token.column
                )
            return Polynomial.variable(self.nvars, index)
        raise InputSyntaxError(f"unexpected {token.text!r}", token.line, token.column)


def parse_expression(
    text: str, variable_names: Sequence[str], line: int = 1
) -> Polynomial:
    variables = {name: i for i, name in enumerate(variable_names)}
    tokens = _tokenize(text, line)
    if not tokens:
        raise InputSyntaxError("empty expression", line, 1)
    return _ExpressionParser(tokens, variables, line).parse()


def parse_input(text: str, config: RunConfig | None = None) -> InputSpec:
    """Parse a full input document into generators over declared variables."""
    config = config or RunConfig()
    variable_names: list[str] | None = None
    generators: list[Polynomial] = []
    in_gens = False
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        if line.startswith("vars:"):
            if variable_names is not None:
                raise InputSyntaxError("duplicate vars: section", lineno, 1)
            names = line[len("vars:"):].split()
            if not names:
                raise InputSyntaxError("no variables declared", lineno, 1)
            if len(set(names)) != len(names):
                raise InputSyntaxError("duplicate variable name", lineno, 1)
            if "i" in names:
                raise InputSyntaxError(
                    "'i' is reserved for the imaginary unit", lineno, 1
                )
            variable_names = names
            continue
        if line.startswith("gens:"):
            if variable_names is None:
                raise InputSyntaxError("gens: before vars:", lineno, 1)
            in_gens = True
            rest = line[len("gens:"):].strip()
            if rest:
                generators.append(parse_expression(rest, variable_names, lineno))
            continue
        if not in_gens:
            raise InputSyntaxError(
                "expected a vars: or gens: header", lineno, 1
            )
        generators.append(parse_expression(line, variable_names, lineno))

    if variable_names is None:
        raise InputSyntaxError("missing vars: section", 1, 1)
    if not generators:
        raise InputSyntaxError("no generators given", 1, 1)
    for g in generators:
        if not g.vanishes_at_origin():
            raise ConstantTermError(
                f"generator {g} does not vanish at the origin"
            )
    return InputSpec(
        variable_names=tuple(variable_names),
        generators=tuple(generators),
        config=config,
    )
