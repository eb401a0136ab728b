"""Exact arithmetic on gross-numbers.

A gross-number is a finite sum of terms ``c * ①^p`` with exact rational
coefficient ``c`` and exact rational exponent ``p``, where ① (grossone) is
the infinite unit: the number of elements of the set of natural numbers,
larger than every finite integer.  Values are kept in a unique canonical
form (strictly descending exponents, no zero coefficients, zero is the
empty sum), which makes equality structural and comparison decidable by
the sign of the leading coefficient.

No floating point is used anywhere; decimal literals are converted to
exact fractions during parsing.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass
from fractions import Fraction

from .errors import DivideByZero, NotExact, ParseError

__all__ = [
    "GrossNumber",
    "Sign",
    "NumberClass",
    "GROSSONE",
    "ZERO",
    "ONE",
    "finite",
    "gross_term",
    "add",
    "sub",
    "mul",
    "div_exact",
    "cmp",
    "classify",
    "parse_numeral",
    "parse_numeral_prefix",
    "format_numeral",
]

Rational = int | Fraction
#: One addend of a gross-number: (exponent, coefficient), coefficient != 0.
Term = tuple[Fraction, Fraction]

GROSS_SYMBOL = "①"  # ①
GROSS_ASCII = "G1"
_SIGN_CHARS = frozenset("+-−")  # ASCII plus/minus and the Unicode minus sign
_MINUS_CHARS = frozenset("-−")
# str.isdigit() accepts the circled digit of the grossone symbol itself, so
# number scanning must be restricted to plain ASCII digits.  A set also keeps
# the end-of-input "" from matching the way substring tests would.
_DIGITS = frozenset("0123456789")


class Sign(enum.IntEnum):
    """Three-way comparison outcome, ordered NEGATIVE < ZERO < POSITIVE."""

    NEGATIVE = -1
    ZERO = 0
    POSITIVE = 1


@dataclass(frozen=True)
class NumberClass:
    """Classification flags of a gross-number.

    ``is_finite`` and ``is_infinite`` are mutually exclusive for nonzero
    values without purely infinitesimal content; ``is_infinitesimal`` holds
    exactly when the value is nonzero and every exponent is negative.
    """

    is_integer: bool
    is_finite: bool
    is_infinite: bool
    is_infinitesimal: bool


def _as_fraction(value: Rational) -> Fraction:
    if isinstance(value, Fraction):
        return value
    if isinstance(value, int):
        return Fraction(value)
    raise TypeError(f"expected an exact rational, got {type(value).__name__}")


@dataclass(frozen=True)
class GrossNumber:
    """Canonical finite sum of terms ``c * ①^p``.

    ``terms`` is ordered by strictly descending exponent and never contains
    a zero coefficient; the empty tuple is zero.  Instances are immutable
    and safe to share between threads.
    """

    terms: tuple[Term, ...] = ()

    def __post_init__(self):
        prev = None
        for item in self.terms:
            if not (isinstance(item, tuple) and len(item) == 2):
                raise ValueError(f"malformed term {item!r}")
            exponent, coefficient = item
            if not isinstance(exponent, Fraction) or not isinstance(coefficient, Fraction):
                raise ValueError("term entries must be Fractions")
            if coefficient == 0:
                raise ValueError("zero coefficient in canonical form")
            if prev is not None and exponent >= prev:
                raise ValueError("exponents must be strictly descending")
            prev = exponent

    # ---------------------------------------------------------------- factories

    @staticmethod
    def from_terms(pairs) -> "GrossNumber":
        """Build the canonical gross-number from (exponent, coefficient) pairs.

        Like exponents are merged and zero coefficients dropped, so any
        ordering or duplication in the input yields the same value.
        """
        merged: dict[Fraction, Fraction] = {}
        for exponent, coefficient in pairs:
            e = _as_fraction(exponent)
            c = merged.get(e, Fraction(0)) + _as_fraction(coefficient)
            if c == 0:
                merged.pop(e, None)
            else:
                merged[e] = c
        ordered = tuple(sorted(merged.items(), key=lambda t: t[0], reverse=True))
        return GrossNumber(ordered)

    # ---------------------------------------------------------------- queries

    @property
    def is_zero(self) -> bool:
        return not self.terms

    def leading(self) -> Term:
        """Highest-exponent term; the value's magnitude class and sign live here."""
        if not self.terms:
            raise ValueError("zero has no leading term")
        return self.terms[0]

    def sign(self) -> Sign:
        if not self.terms:
            return Sign.ZERO
        return Sign.POSITIVE if self.terms[0][1] > 0 else Sign.NEGATIVE

    def coefficient(self, exponent: Rational) -> Fraction:
        e = _as_fraction(exponent)
        for exp, coeff in self.terms:
            if exp == e:
                return coeff
        return Fraction(0)

    def as_fraction(self) -> Fraction:
        """The value as an exact rational; requires a pure finite value."""
        if not self.terms:
            return Fraction(0)
        if len(self.terms) == 1 and self.terms[0][0] == 0:
            return self.terms[0][1]
        raise ValueError(f"{self} is not a plain rational")

    def as_int(self) -> int:
        q = self.as_fraction()
        if q.denominator != 1:
            raise ValueError(f"{self} is not a plain integer")
        return q.numerator

    # ---------------------------------------------------------------- arithmetic

    def __add__(self, other) -> "GrossNumber":
        other = _coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return GrossNumber.from_terms(self.terms + other.terms)

    __radd__ = __add__

    def __neg__(self) -> "GrossNumber":
        return GrossNumber(tuple((e, -c) for e, c in self.terms))

    def __sub__(self, other) -> "GrossNumber":
        other = _coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other) -> "GrossNumber":
        other = _coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return other + (-self)

    def __mul__(self, other) -> "GrossNumber":
        other = _coerce(other)
        if other is NotImplemented:
            return NotImplemented
        acc: dict[Fraction, Fraction] = {}
        for e1, c1 in self.terms:
            for e2, c2 in other.terms:
                e = e1 + e2
                acc[e] = acc.get(e, Fraction(0)) + c1 * c2
        return GrossNumber.from_terms(acc.items())

    __rmul__ = __mul__

    def __truediv__(self, other) -> "GrossNumber":
        other = _coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return div_exact(self, other)

    def __pow__(self, power: int) -> "GrossNumber":
        if not isinstance(power, int) or power < 0:
            raise ValueError("only nonnegative integer powers are defined")
        result = ONE
        base = self
        n = power
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    # ---------------------------------------------------------------- ordering

    def _compare(self, other) -> Sign:
        other = _coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return (self - other).sign()

    def __lt__(self, other):
        s = self._compare(other)
        return NotImplemented if s is NotImplemented else s == Sign.NEGATIVE

    def __le__(self, other):
        s = self._compare(other)
        return NotImplemented if s is NotImplemented else s != Sign.POSITIVE

    def __gt__(self, other):
        s = self._compare(other)
        return NotImplemented if s is NotImplemented else s == Sign.POSITIVE

    def __ge__(self, other):
        s = self._compare(other)
        return NotImplemented if s is NotImplemented else s != Sign.NEGATIVE

    def __eq__(self, other):
        if isinstance(other, GrossNumber):
            return self.terms == other.terms
        if isinstance(other, (int, Fraction)):
            return self.terms == _coerce(other).terms
        return NotImplemented

    def __hash__(self):
        # Finite rationals hash like the rational they equal, so mixed-type
        # dict keys stay consistent with __eq__.
        if not self.terms:
            return hash(0)
        if len(self.terms) == 1 and self.terms[0][0] == 0:
            return hash(self.terms[0][1])
        return hash(self.terms)

    def __str__(self) -> str:
        return format_numeral(self)

    def __repr__(self) -> str:
        return f"GrossNumber({format_numeral(self)!r})"


def _coerce(value) -> GrossNumber:
    if isinstance(value, GrossNumber):
        return value
    if isinstance(value, (int, Fraction)):
        if value == 0:
            return ZERO
        return GrossNumber(((Fraction(0), _as_fraction(value)),))
    return NotImplemented


def _strict(value) -> GrossNumber:
    coerced = _coerce(value)
    if coerced is NotImplemented:
        raise TypeError(f"cannot interpret {value!r} as a gross-number")
    return coerced


def finite(value: Rational) -> GrossNumber:
    """The gross-number equal to a plain rational."""
    return _strict(value)


def gross_term(coefficient: Rational = 1, exponent: Rational = 1) -> GrossNumber:
    """The single term ``coefficient * ①^exponent``."""
    c = _as_fraction(coefficient)
    if c == 0:
        return ZERO
    return GrossNumber(((_as_fraction(exponent), c),))


ZERO = GrossNumber()
ONE = GrossNumber(((Fraction(0), Fraction(1)),))
GROSSONE = GrossNumber(((Fraction(1), Fraction(1)),))


# -------------------------------------------------------------------- operations


def add(x: GrossNumber, y: GrossNumber) -> GrossNumber:
    """Exact termwise sum in canonical form."""
    return _strict(x) + _strict(y)


def sub(x: GrossNumber, y: GrossNumber) -> GrossNumber:
    return _strict(x) - _strict(y)


def mul(x: GrossNumber, y: GrossNumber) -> GrossNumber:
    """Exact distributive product; exponents of terms add."""
    return _strict(x) * _strict(y)


def div_exact(x: GrossNumber, y: GrossNumber) -> GrossNumber:
    """The q with q*y == x, whenever a finite-term q exists.

    Both operands are rescaled by a power of ① so their lowest exponents
    sit at zero, which turns the question into plain divisibility of
    polynomial-shaped sums; descending long division then either clears
    the remainder (exact quotient, shifted back) or bottoms out below the
    divisor's leading exponent, and in that case no finite-term quotient
    exists at all: NotExact.  Single-term divisors always divide out.
    """
    x = _strict(x)
    y = _strict(y)
    if y.is_zero:
        raise DivideByZero("division by zero")
    if x.is_zero:
        return ZERO
    shift = x.terms[-1][0] - y.terms[-1][0]
    lead_exp, lead_coeff = y.leading()
    quotient: dict[Fraction, Fraction] = {}
    remainder = x
    # Remainder exponents stay at or above the trailing exponent of x, and
    # each step lowers the leading exponent within a fixed discrete
    # lattice of rationals, so the loop always finishes.
    while not remainder.is_zero:
        rem_exp, rem_coeff = remainder.leading()
        if rem_exp - lead_exp < shift:
            raise NotExact(f"{y} does not divide {x}")
        q_exp = rem_exp - lead_exp
        q_coeff = rem_coeff / lead_coeff
        quotient[q_exp] = quotient.get(q_exp, Fraction(0)) + q_coeff
        remainder = remainder - gross_term(q_coeff, q_exp) * y
    return GrossNumber.from_terms(quotient.items())


def cmp(x: GrossNumber, y: GrossNumber) -> Sign:
    """Sign of x - y, decided by the leading coefficient of the difference.

    Sound because coefficients are finite rationals and ① dominates every
    finite value, so the highest-exponent term always wins.
    """
    return (_strict(x) - _strict(y)).sign()


def classify(x: GrossNumber) -> NumberClass:
    """Integer / finite / infinite / infinitesimal flags of a value.

    Integrality follows the grossone convention that ① is divisible by
    every finite positive integer: a value is an integer when it has no
    negative exponents, its exponent-0 coefficient is a plain integer, and
    its positive-exponent coefficients are arbitrary rationals.
    """
    x = _strict(x)
    if x.is_zero:
        return NumberClass(is_integer=True, is_finite=True, is_infinite=False, is_infinitesimal=False)
    lead_exp = x.terms[0][0]
    is_integer = True
    for exponent, coefficient in x.terms:
        if exponent < 0:
            is_integer = False
        elif exponent == 0 and coefficient.denominator != 1:
            is_integer = False
    return NumberClass(
        is_integer=is_integer,
        is_finite=lead_exp == 0,
        is_infinite=lead_exp > 0,
        is_infinitesimal=lead_exp < 0,
    )


# -------------------------------------------------------------------- formatting


def _rational_str(q: Fraction) -> str:
    if q.denominator == 1:
        return str(q.numerator)
    return f"{q.numerator}/{q.denominator}"


def _exponent_str(e: Fraction) -> str:
    # Integer exponents print bare (sign included); fractional ones take
    # parentheses so the quotient cannot be misread as part of the sum.
    if e.denominator == 1:
        return str(e.numerator)
    return f"({e.numerator}/{e.denominator})"


def _term_str(exponent: Fraction, coefficient: Fraction) -> str:
    if exponent == 0:
        return _rational_str(coefficient)
    if coefficient == 1:
        head = ""
    elif coefficient == -1:
        head = "-"
    else:
        head = _rational_str(coefficient)
    base = GROSS_SYMBOL if exponent == 1 else f"{GROSS_SYMBOL}^{_exponent_str(exponent)}"
    return head + base


def format_numeral(x: GrossNumber, ascii_mode: bool = False) -> str:
    """Canonical rendering; ``parse_numeral(format_numeral(x)) == x``.

    ``ascii_mode`` writes the base as ``G1`` instead of ``①``.
    """
    x = _strict(x)
    if x.is_zero:
        return "0"
    chunks = []
    for exponent, coefficient in x.terms:
        piece = _term_str(exponent, coefficient)
        if chunks and not piece.startswith("-"):
            chunks.append("+")
        chunks.append(piece)
    text = "".join(chunks)
    return text.replace(GROSS_SYMBOL, GROSS_ASCII) if ascii_mode else text


# -------------------------------------------------------------------- parsing


class _Scanner:
    """Character scanner for the numeral grammar.

    Grammar (whitespace allowed between tokens):

        numeral  := sign? term (sign term)*
        term     := rational | rational '*'? gross | gross
        gross    := ('①' | 'G1') ('^' exponent)?
        exponent := '(' sign? rational ')' | sign? rational
        rational := number | integer '/' integer
        number   := digits ('.' digits)?
    """

    def __init__(self, text: str, pos: int = 0):
        self.text = text
        self.pos = pos

    def fail(self, message: str, pos: int | None = None):
        raise ParseError(message, self.text, self.pos if pos is None else pos)

    def peek(self) -> str:
        return self.text[self.pos] if self.pos < len(self.text) else ""

    def skip_ws(self):
        while self.pos < len(self.text) and self.text[self.pos].isspace():
            self.pos += 1

    def at_gross(self) -> bool:
        return self.text.startswith(GROSS_SYMBOL, self.pos) or self.text.startswith(
            GROSS_ASCII, self.pos
        )

    def take_gross(self):
        self.pos += 1 if self.text.startswith(GROSS_SYMBOL, self.pos) else 2

    def take_sign(self) -> int | None:
        ch = self.peek()
        if ch in _SIGN_CHARS:
            self.pos += 1
            return -1 if ch in _MINUS_CHARS else 1
        return None

    def parse_number(self) -> Fraction:
        start = self.pos
        while self.peek() in _DIGITS:
            self.pos += 1
        if self.pos == start:
            self.fail("expected a number")
        int_part = self.text[start : self.pos]
        # A dot starts a decimal part only when digits follow, so the '..'
        # delimiter of interval syntax never gets swallowed.
        if self.peek() == "." and self.text[self.pos + 1 : self.pos + 2] in _DIGITS:
            self.pos += 1
            frac_start = self.pos
            while self.peek() in _DIGITS:
                self.pos += 1
            frac_part = self.text[frac_start : self.pos]
            return Fraction(int(int_part + frac_part), 10 ** len(frac_part))
        return Fraction(int(int_part))

    def parse_rational(self) -> Fraction:
        value = self.parse_number()
        if self.peek() == "/":
            if value.denominator != 1:
                self.fail("fraction parts must be integers")
            self.pos += 1
            denom_pos = self.pos
            denom = self.parse_number()
            if denom.denominator != 1:
                self.fail("fraction parts must be integers", denom_pos)
            if denom == 0:
                self.fail("zero denominator", denom_pos)
            return value / denom
        return value

    def parse_exponent(self) -> Fraction:
        self.skip_ws()
        if self.peek() == "(":
            self.pos += 1
            self.skip_ws()
            sign = self.take_sign() or 1
            self.skip_ws()
            value = self.parse_rational()
            self.skip_ws()
            if self.peek() != ")":
                self.fail("expected ')' closing the exponent")
            self.pos += 1
            return sign * value
        sign = self.take_sign() or 1
        return sign * self.parse_rational()

    def parse_term(self) -> tuple[Fraction, Fraction]:
        if self.at_gross():
            coefficient = Fraction(1)
        else:
            coefficient = self.parse_rational()
            mark = self.pos
            self.skip_ws()
            starred = self.peek() == "*"
            if starred:
                self.pos += 1
                self.skip_ws()
            if not self.at_gross():
                if starred:
                    self.fail(f"expected {GROSS_SYMBOL} after '*'")
                self.pos = mark
                return Fraction(0), coefficient
        self.take_gross()
        if self.peek() == "^":
            self.pos += 1
            exponent = self.parse_exponent()
        else:
            exponent = Fraction(1)
        return exponent, coefficient

    def parse_sum(self) -> GrossNumber:
        terms: list[tuple[Fraction, Fraction]] = []
        self.skip_ws()
        sign = self.take_sign() or 1
        self.skip_ws()
        while True:
            exponent, coefficient = self.parse_term()
            terms.append((exponent, sign * coefficient))
            mark = self.pos
            self.skip_ws()
            nxt = self.take_sign()
            if nxt is None:
                self.pos = mark
                break
            sign = nxt
            self.skip_ws()
        return GrossNumber.from_terms(terms)


def parse_numeral_prefix(text: str, pos: int = 0) -> tuple[GrossNumber, int]:
    """Parse the longest numeral starting at ``pos``; returns (value, end)."""
    scanner = _Scanner(text, pos)
    value = scanner.parse_sum()
    return value, scanner.pos


def parse_numeral(text: str) -> GrossNumber:
    """Parse a complete numeral; raises ParseError with a position otherwise."""
    scanner = _Scanner(text)
    value = scanner.parse_sum()
    scanner.skip_ws()
    if scanner.pos != len(text):
        scanner.fail("unexpected trailing input")
    return value
