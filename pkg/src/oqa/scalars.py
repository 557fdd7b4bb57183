"""Exact scalar arithmetic over the rationals extended by named parameters.

A scalar is a quotient of two multivariate Laurent polynomials with rational
coefficients.  This is enough to express every coefficient the library needs
(things like ``a^2``, ``a - a^-1``, ``1/2*nu``) while keeping equality exactly
decidable: two scalars are equal iff cross-multiplication gives identical
polynomials.  Only monomial and integer-content reduction is performed on the
quotient; full multivariate gcd normalisation is deliberately out of scope.

All values are immutable; every operation returns a new object.
"""

from __future__ import annotations

import re
from fractions import Fraction
from math import gcd

# Rational numbers are stdlib fractions: arbitrary precision, positive
# denominator, always reduced.
Rational = Fraction

# Exponents stay well inside machine range; anything past this is a bug.
_EXP_LIMIT = 1 << 60


class ScalarError(Exception):
    """Base class for scalar arithmetic errors."""


class ScalarParseError(ScalarError):
    """Raised on malformed scalar text; carries the offending position."""

    def __init__(self, message, position):
        super().__init__(f"{message} (at position {position})")
        self.position = position


class EvaluationError(ScalarError):
    """Raised when an assignment is incomplete or makes a denominator vanish."""


def _as_fraction(value):
    if isinstance(value, Fraction):
        return value
    if isinstance(value, int):
        return Fraction(value)
    raise TypeError(f"expected a rational number, got {type(value).__name__}")


def _merge_params(left, right):
    if left == right:
        return left
    merged = list(left)
    for name in right:
        if name not in merged:
            merged.append(name)
    return tuple(merged)


class LaurentPoly:
    """Sparse multivariate Laurent polynomial over the rationals.

    ``terms`` maps exponent tuples (one integer per parameter, negatives
    allowed) to nonzero rational coefficients.
    """

    __slots__ = ("params", "terms")

    def __init__(self, params, terms):
        self.params = tuple(params)
        clean = {}
        width = len(self.params)
        for exps, coeff in terms.items():
            coeff = _as_fraction(coeff)
            if coeff == 0:
                continue
            exps = tuple(exps)
            if len(exps) != width:
                raise ValueError(
                    f"exponent vector {exps} has arity {len(exps)}, expected {width}"
                )
            for e in exps:
                if abs(e) > _EXP_LIMIT:
                    raise OverflowError(f"exponent {e} out of range")
            clean[exps] = coeff
        self.terms = clean

    @classmethod
    def zero(cls, params):
        return cls(params, {})

    @classmethod
    def constant(cls, value, params):
        value = _as_fraction(value)
        if value == 0:
            return cls.zero(params)
        return cls(params, {(0,) * len(params): value})

    @classmethod
    def one(cls, params):
        return cls.constant(1, params)

    @classmethod
    def variable(cls, name, params):
        params = tuple(params)
        if name not in params:
            raise ValueError(f"unknown parameter {name!r}")
        exps = tuple(1 if p == name else 0 for p in params)
        return cls(params, {exps: Fraction(1)})

    def is_zero(self):
        return not self.terms

    def is_constant(self):
        return all(all(e == 0 for e in exps) for exps in self.terms)

    def constant_value(self):
        if not self.is_constant():
            raise ValueError(f"{self} is not constant")
        return sum(self.terms.values(), Fraction(0))

    def is_monomial(self):
        return len(self.terms) == 1

    def extend(self, params):
        """Reinterpret over a superset of parameters (order-preserving)."""
        params = tuple(params)
        if params == self.params:
            return self
        positions = []
        for name in self.params:
            if name not in params:
                raise ValueError(f"parameter {name!r} missing from {params}")
            positions.append(params.index(name))
        width = len(params)
        terms = {}
        for exps, coeff in self.terms.items():
            new = [0] * width
            for pos, e in zip(positions, exps):
                new[pos] = e
            terms[tuple(new)] = coeff
        return LaurentPoly(params, terms)

    def _aligned(self, other):
        if not isinstance(other, LaurentPoly):
            other = LaurentPoly.constant(other, self.params)
        params = _merge_params(self.params, other.params)
        return self.extend(params), other.extend(params), params

    def __add__(self, other):
        a, b, params = self._aligned(other)
        terms = dict(a.terms)
        for exps, coeff in b.terms.items():
            total = terms.get(exps, Fraction(0)) + coeff
            if total == 0:
                terms.pop(exps, None)
            else:
                terms[exps] = total
        return LaurentPoly(params, terms)

    __radd__ = __add__

    def __neg__(self):
        return LaurentPoly(self.params, {e: -c for e, c in self.terms.items()})

    def __sub__(self, other):
        a, b, _ = self._aligned(other)
        return a + (-b)

    def __rsub__(self, other):
        a, b, _ = self._aligned(other)
        return b + (-a)

    def __mul__(self, other):
        a, b, params = self._aligned(other)
        terms = {}
        for e1, c1 in a.terms.items():
            for e2, c2 in b.terms.items():
                exps = tuple(x + y for x, y in zip(e1, e2))
                total = terms.get(exps, Fraction(0)) + c1 * c2
                if total == 0:
                    terms.pop(exps, None)
                else:
                    terms[exps] = total
        return LaurentPoly(params, terms)

    __rmul__ = __mul__

    def __pow__(self, n):
        if not isinstance(n, int) or n < 0:
            raise ValueError("LaurentPoly powers must be nonnegative integers")
        result = LaurentPoly.one(self.params)
        base = self
        while n:
            if n & 1:
                result = result * base
            base = base * base if n > 1 else base
            n >>= 1
        return result

    def __eq__(self, other):
        if not isinstance(other, LaurentPoly):
            if isinstance(other, (int, Fraction)):
                other = LaurentPoly.constant(other, self.params)
            else:
                return NotImplemented
        a, b, _ = self._aligned(other)
        return a.terms == b.terms

    __hash__ = None

    def shift(self, offsets):
        """Multiply by the monomial with the given exponent vector."""
        terms = {
            tuple(e + o for e, o in zip(exps, offsets)): c
            for exps, c in self.terms.items()
        }
        return LaurentPoly(self.params, terms)

    def scale(self, factor):
        factor = _as_fraction(factor)
        if factor == 0:
            return LaurentPoly.zero(self.params)
        return LaurentPoly(self.params, {e: c * factor for e, c in self.terms.items()})

    def content(self):
        """Positive rational c with self/c integral and coefficient gcd 1."""
        if not self.terms:
            return Fraction(1)
        num = 0
        den = 1
        for coeff in self.terms.values():
            num = gcd(num, abs(coeff.numerator))
            den = den * coeff.denominator // gcd(den, coeff.denominator)
        return Fraction(num, den)

    def leading_coefficient(self):
        if not self.terms:
            return Fraction(0)
        return self.terms[max(self.terms)]

    def substitute(self, assignment):
        """Set some parameters to rationals; returns a poly in the rest."""
        fixed = {}
        for name, value in assignment.items():
            if name in self.params:
                fixed[self.params.index(name)] = _as_fraction(value)
        remaining = tuple(
            p for i, p in enumerate(self.params) if i not in fixed
        )
        keep = [i for i in range(len(self.params)) if i not in fixed]
        terms = {}
        for exps, coeff in self.terms.items():
            value = coeff
            for i, v in fixed.items():
                e = exps[i]
                if v == 0 and e < 0:
                    raise EvaluationError(
                        f"negative power of parameter {self.params[i]!r} at zero"
                    )
                value *= v**e
            if value == 0:
                continue
            key = tuple(exps[i] for i in keep)
            total = terms.get(key, Fraction(0)) + value
            if total == 0:
                terms.pop(key, None)
            else:
                terms[key] = total
        return LaurentPoly(remaining, terms)

    def __str__(self):
        if not self.terms:
            return "0"
        pieces = []
        for exps in sorted(self.terms, reverse=True):
            coeff = self.terms[exps]
            factors = []
            for name, e in zip(self.params, exps):
                if e == 0:
                    continue
                factors.append(name if e == 1 else f"{name}^{e}")
            mag = abs(coeff)
            if not factors or mag != 1:
                factors.insert(0, str(mag))
            text = "*".join(factors)
            if not pieces:
                pieces.append(f"-{text}" if coeff < 0 else text)
            else:
                pieces.append(f"- {text}" if coeff < 0 else f"+ {text}")
        return " ".join(pieces)

    def __repr__(self):
        return f"LaurentPoly({self})"


class Scalar:
    """Quotient of Laurent polynomials; the field the whole library works over.

    The denominator is normalised away whenever it is a single monomial (a
    monomial always divides exactly in the Laurent world), so in practice the
    denominator is 1 unless a computation genuinely produced a multi-term one.
    """

    __slots__ = ("num", "den")

    def __init__(self, num, den=None):
        if den is None:
            den = LaurentPoly.one(num.params)
        if den.is_zero():
            raise ZeroDivisionError("scalar with zero denominator")
        params = _merge_params(num.params, den.params)
        num = num.extend(params)
        den = den.extend(params)
        if num.is_zero():
            den = LaurentPoly.one(params)
        elif den.is_monomial():
            (exps, coeff), = den.terms.items()
            num = num.shift(tuple(-e for e in exps)).scale(1 / coeff)
            den = LaurentPoly.one(params)
        else:
            mins = [
                min(exps[i] for exps in list(num.terms) + list(den.terms))
                for i in range(len(params))
            ]
            if any(mins):
                offset = tuple(-m for m in mins)
                num = num.shift(offset)
                den = den.shift(offset)
            c_num = num.content()
            c_den = den.content()
            common = Fraction(
                gcd(c_num.numerator, c_den.numerator),
                c_num.denominator
                * c_den.denominator
                // gcd(c_num.denominator, c_den.denominator),
            )
            if den.leading_coefficient() < 0:
                common = -common
            if common != 1:
                num = num.scale(1 / common)
                den = den.scale(1 / common)
        self.num = num
        self.den = den

    @property
    def params(self):
        return self.num.params

    @classmethod
    def zero(cls, params=()):
        return cls(LaurentPoly.zero(params))

    @classmethod
    def one(cls, params=()):
        return cls(LaurentPoly.one(params))

    @classmethod
    def from_rational(cls, value, params=()):
        return cls(LaurentPoly.constant(value, params))

    @classmethod
    def parameter(cls, name, params):
        return cls(LaurentPoly.variable(name, params))

    def is_zero(self):
        return self.num.is_zero()

    def is_one(self):
        return scalar_eq(self, Scalar.one(self.params))

    def is_constant(self):
        return self.num.is_constant() and self.den.is_constant()

    def constant_value(self):
        return self.num.constant_value() / self.den.constant_value()

    def extend(self, params):
        return Scalar(self.num.extend(params), self.den.extend(params))

    def _coerce(self, other):
        if isinstance(other, Scalar):
            return other
        if isinstance(other, (int, Fraction)):
            return Scalar.from_rational(other, self.params)
        raise TypeError(f"cannot combine Scalar with {type(other).__name__}")

    def __add__(self, other):
        other = self._coerce(other)
        return Scalar(
            self.num * other.den + other.num * self.den, self.den * other.den
        )

    __radd__ = __add__

    def __neg__(self):
        return Scalar(-self.num, self.den)

    def __sub__(self, other):
        return self + (-self._coerce(other))

    def __rsub__(self, other):
        return self._coerce(other) - self

    def __mul__(self, other):
        other = self._coerce(other)
        return Scalar(self.num * other.num, self.den * other.den)

    __rmul__ = __mul__

    def reciprocal(self):
        if self.is_zero():
            raise ZeroDivisionError("reciprocal of zero scalar")
        return Scalar(self.den, self.num)

    def __truediv__(self, other):
        return self * self._coerce(other).reciprocal()

    def __rtruediv__(self, other):
        return self._coerce(other) * self.reciprocal()

    def __pow__(self, n):
        if not isinstance(n, int):
            raise TypeError("scalar powers must be integers")
        if n < 0:
            return self.reciprocal() ** (-n)
        result = Scalar.one(self.params)
        base = self
        while n:
            if n & 1:
                result = result * base
            base = base * base if n > 1 else base
            n >>= 1
        return result

    def __eq__(self, other):
        if isinstance(other, (int, Fraction)):
            other = Scalar.from_rational(other, self.params)
        if not isinstance(other, Scalar):
            return NotImplemented
        return scalar_eq(self, other)

    __hash__ = None

    def substitute(self, assignment):
        num = self.num.substitute(assignment)
        den = self.den.substitute(assignment)
        if den.is_zero():
            raise EvaluationError("denominator vanishes under the assignment")
        return Scalar(num, den)

    def __str__(self):
        if self.den == LaurentPoly.one(self.params):
            return str(self.num)
        return f"({self.num}) * ({self.den})^-1"

    def __repr__(self):
        return f"Scalar({self})"


def scalar_eq(s1, s2):
    """Exact equality by cross-multiplication."""
    params = _merge_params(s1.params, s2.params)
    a = s1.extend(params)
    b = s2.extend(params)
    return a.num * b.den == b.num * a.den


def eval_scalar(scalar, assignment):
    """Evaluate at a full rational assignment; exact, raises on bad input."""
    missing = [p for p in scalar.params if p not in assignment]
    if missing:
        raise EvaluationError(f"missing parameters: {', '.join(missing)}")
    result = scalar.substitute(assignment)
    return result.num.constant_value() / result.den.constant_value()


_TOKEN_RE = re.compile(
    r"\s*(?:(?P<int>\d+)|(?P<name>[A-Za-z_][A-Za-z_0-9]*)|(?P<op>[-+*/^()]))"
)


def _tokenize(text):
    tokens = []
    pos = 0
    while pos < len(text):
        match = _TOKEN_RE.match(text, pos)
        if match is None or match.end() == pos:
            stripped = text[pos:].lstrip()
            if not stripped:
                break
            raise ScalarParseError(
                f"unexpected character {stripped[0]!r}", len(text) - len(stripped)
            )
        pos = match.end()
        if match.lastgroup == "int":
            tokens.append(("int", int(match.group("int")), match.start("int")))
        elif match.lastgroup == "name":
            tokens.append(("name", match.group("name"), match.start("name")))
        else:
            tokens.append(("op", match.group("op"), match.start("op")))
    tokens.append(("end", None, len(text)))
    return tokens


class _Parser:
    def __init__(self, tokens, params):
        self.tokens = tokens
        self.pos = 0
        self.params = tuple(params)

    def peek(self):
        return self.tokens[self.pos]

    def advance(self):
        token = self.tokens[self.pos]
        self.pos += 1
        return token

    def expect_op(self, symbol):
        kind, value, position = self.peek()
        if kind != "op" or value != symbol:
            raise ScalarParseError(f"expected {symbol!r}", position)
        return self.advance()

    def parse(self):
        value = self.expression()
        kind, _, position = self.peek()
        if kind != "end":
            raise ScalarParseError("trailing input", position)
        return value

    def expression(self):
        value = self.term()
        while True:
            kind, symbol, _ = self.peek()
            if kind == "op" and symbol in "+-":
                self.advance()
                rhs = self.term()
                value = value + rhs if symbol == "+" else value - rhs
            else:
                return value

    def term(self):
        value = self.unary()
        while True:
            kind, symbol, position = self.peek()
            if kind == "op" and symbol == "*":
                self.advance()
                value = value * self.unary()
            elif kind == "op" and symbol == "/":
                self.advance()
                divisor = self.unary()
                if not divisor.is_constant():
                    raise ScalarParseError(
                        "division is only allowed by constant subexpressions",
                        position,
                    )
                if divisor.is_zero():
                    raise ScalarParseError("division by zero", position)
                value = value / divisor
            else:
                return value

    def unary(self):
        kind, symbol, _ = self.peek()
        if kind == "op" and symbol in "+-":
            self.advance()
            value = self.unary()
            return -value if symbol == "-" else value
        return self.power()

    def power(self):
        base = self.atom()
        kind, symbol, position = self.peek()
        if kind == "op" and symbol == "^":
            self.advance()
            exponent = self.exponent()
            if exponent < 0 and base.is_zero():
                raise ScalarParseError("negative power of zero", position)
            return base**exponent
        return base

    def exponent(self):
        sign = 1
        kind, symbol, _ = self.peek()
        if kind == "op" and symbol in "+-":
            self.advance()
            if symbol == "-":
                sign = -1
            kind, symbol, _ = self.peek()
        kind, value, position = self.peek()
        if kind != "int":
            raise ScalarParseError("expected an integer exponent", position)
        self.advance()
        return sign * value

    def atom(self):
        kind, value, position = self.advance()
        if kind == "int":
            return Scalar.from_rational(value, self.params)
        if kind == "name":
            if value not in self.params:
                raise ScalarParseError(f"unknown parameter {value!r}", position)
            return Scalar.parameter(value, self.params)
        if kind == "op" and value == "(":
            inner = self.expression()
            self.expect_op(")")
            return inner
        raise ScalarParseError("expected a number, parameter or '('", position)


def parse_scalar(text, parameters):
    """Parse scalar text over the given parameter names.

    The grammar covers integers, rationals ``p/q``, parameter names, ``^``
    with (possibly negative) integer exponents, ``+ - * ( )`` and unary minus;
    ``/`` only divides by nonzero constant subexpressions.  Printing a scalar
    and re-parsing it gives an equal scalar.
    """
    return _Parser(_tokenize(text), parameters).parse()
