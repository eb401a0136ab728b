"""Numbers defined by inverting a strictly increasing function.

For a strictly increasing g on positive integers and a positive integer
kappa with g(1) <= kappa, there is exactly one x with g(x) <= kappa <
g(x+1).  That x may have no closed form in gross-number arithmetic (the
integer square root of ① is the standard example), yet it is a perfectly
definite number: it can be compared against probes y whenever g(y) and
g(y+1) are themselves computable.  This module keeps such numbers as
symbolic tokens, resolves them outright when kappa is finite, and offers
the partial comparison, returning the Incomparable sentinel instead of
guessing when g cannot be evaluated at the probe.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .errors import BelowRange, BoundExceeded, NotFinite, ParseError
from .gnum import GrossNumber, Sign, classify, finite, format_numeral, parse_numeral

__all__ = [
    "MonotoneFn",
    "Pow",
    "ExpBase",
    "Affine",
    "DefinedNumeral",
    "INCOMPARABLE",
    "define_by_inverse",
    "resolve_finite",
    "cmp_defined",
    "DefinitionSession",
    "parse_defined",
    "format_defined",
]


class MonotoneFn:
    """A function strictly increasing on positive integers."""

    def evaluate(self, x: GrossNumber) -> GrossNumber | None:
        """g(x) as a gross-number, or None when no such value exists here."""
        raise NotImplementedError


@dataclass(frozen=True)
class Pow(MonotoneFn):
    """g(x) = x**k for a fixed integer k >= 2; evaluable everywhere."""

    k: int

    def __post_init__(self):
        if self.k < 2:
            raise ValueError("exponent must be at least 2")

    def evaluate(self, x: GrossNumber) -> GrossNumber:
        return x**self.k


@dataclass(frozen=True)
class ExpBase(MonotoneFn):
    """g(x) = b**x for a fixed integer b >= 2.

    Evaluable only at finite integers: b**① is not a finite sum of
    ①-powers, so probes at infinite points give None rather than a
    made-up value.
    """

    b: int

    def __post_init__(self):
        if self.b < 2:
            raise ValueError("base must be at least 2")

    def evaluate(self, x: GrossNumber) -> GrossNumber | None:
        kind = classify(x)
        if not (kind.is_finite and kind.is_integer):
            return None
        n = x.as_int()
        if n < 0:
            return None
        return finite(self.b**n)


@dataclass(frozen=True)
class Affine(MonotoneFn):
    """g(x) = a*x + c with rational a > 0; evaluable everywhere."""

    a: Fraction
    c: Fraction = Fraction(0)

    def __post_init__(self):
        object.__setattr__(self, "a", Fraction(self.a))
        object.__setattr__(self, "c", Fraction(self.c))
        if self.a <= 0:
            raise ValueError("slope must be positive")

    def evaluate(self, x: GrossNumber) -> GrossNumber:
        return x * self.a + self.c


@dataclass(frozen=True)
class DefinedNumeral:
    """The unique x with g(x) <= kappa < g(x+1), held symbolically."""

    g: MonotoneFn
    kappa: GrossNumber

    def __str__(self) -> str:
        return format_defined(self)


class _Incomparable:
    """Sentinel for comparisons the catalog cannot decide."""

    _instance = None

    def __new__(cls):
        if cls._instance is None:
            cls._instance = super().__new__(cls)
        return cls._instance

    def __repr__(self):
        return "Incomparable"


INCOMPARABLE = _Incomparable()


def define_by_inverse(g: MonotoneFn, kappa: GrossNumber | int) -> DefinedNumeral:
    """Name the x with g(x) <= kappa < g(x+1); no resolution is attempted."""
    kappa = kappa if isinstance(kappa, GrossNumber) else finite(kappa)
    kind = classify(kappa)
    if not kind.is_integer:
        raise ValueError(f"kappa must be a gross-integer, got {kappa}")
    g1 = g.evaluate(finite(1))
    if g1 is None:
        raise ValueError("g must be evaluable at 1")
    if kappa < g1:
        raise BelowRange(f"kappa {kappa} is below g(1) = {g1}; no positive x qualifies")
    return DefinedNumeral(g=g, kappa=kappa)


def resolve_finite(d: DefinedNumeral) -> GrossNumber:
    """Concrete value of a defined numeral with finite kappa.

    Doubles an upper probe until g passes kappa, then bisects; exactness
    of the arithmetic makes the boundary test sharp.
    """
    if not classify(d.kappa).is_finite:
        raise NotFinite(f"kappa {d.kappa} is not finite")
    hi = 1
    while _le(d.g.evaluate(finite(hi + 1)), d.kappa):
        hi *= 2
    lo = 1
    # Invariant: g(lo) <= kappa < g(hi+1).
    while lo < hi:
        mid = (lo + hi + 1) // 2
        if _le(d.g.evaluate(finite(mid)), d.kappa):
            lo = mid
        else:
            hi = mid - 1
    return finite(lo)


def _le(value: GrossNumber | None, bound: GrossNumber) -> bool:
    return value is not None and value <= bound


def cmp_defined(d: DefinedNumeral, y: GrossNumber | int) -> Sign | _Incomparable:
    """Place a defined numeral relative to a positive-integer probe.

    d < y iff kappa < g(y); d > y iff g(y+1) <= kappa; otherwise d = y.
    When g cannot be evaluated at the probe the answer is the Incomparable
    sentinel, a value rather than an error.
    """
    y = y if isinstance(y, GrossNumber) else finite(y)
    gy = d.g.evaluate(y)
    if gy is None:
        return INCOMPARABLE
    if d.kappa < gy:
        return Sign.NEGATIVE
    gy1 = d.g.evaluate(y + 1)
    if gy1 is None:
        return INCOMPARABLE
    if gy1 <= d.kappa:
        return Sign.POSITIVE
    return Sign.ZERO


class DefinitionSession:
    """Bounded registry of defined numerals.

    Whatever is introduced must be introduced by finitely many operations;
    the session makes that bound explicit and refuses to run past it.
    """

    def __init__(self, max_definitions: int = 1000):
        if max_definitions < 1:
            raise ValueError("max_definitions must be at least 1")
        self.max_definitions = max_definitions
        self._defined: list[DefinedNumeral] = []

    def define(self, g: MonotoneFn, kappa: GrossNumber | int) -> DefinedNumeral:
        if len(self._defined) >= self.max_definitions:
            raise BoundExceeded(
                f"session already holds {self.max_definitions} definitions"
            )
        d = define_by_inverse(g, kappa)
        self._defined.append(d)
        return d

    @property
    def defined(self) -> tuple[DefinedNumeral, ...]:
        return tuple(self._defined)


# -------------------------------------------------------------------- CLI forms


def format_defined(d: DefinedNumeral, ascii_mode: bool = False) -> str:
    kappa = format_numeral(d.kappa, ascii_mode=ascii_mode)
    if isinstance(d.g, Pow) and d.g.k == 2:
        return f"sqrtfloor({kappa})"
    if isinstance(d.g, Pow):
        return f"invfloor(pow {d.g.k}, {kappa})"
    if isinstance(d.g, ExpBase):
        return f"logfloor({d.g.b}, {kappa})"
    if isinstance(d.g, Affine):
        return f"invfloor(affine {d.g.a} {d.g.c}, {kappa})"
    return f"invfloor(?, {kappa})"


def parse_defined(text: str) -> DefinedNumeral:
    """Parse the CLI forms sqrtfloor(k), logfloor(b, k), invfloor(pow n, k)."""
    stripped = text.strip()
    head, sep, rest = stripped.partition("(")
    if not sep or not rest.endswith(")"):
        raise ParseError("expected name(...)", text, 0)
    head = head.strip()
    body = rest[:-1]
    if head == "sqrtfloor":
        return define_by_inverse(Pow(2), parse_numeral(body))
    if head == "logfloor":
        base_text, comma, kappa_text = body.partition(",")
        if not comma:
            raise ParseError("logfloor needs a base and a numeral", text, 0)
        try:
            base = int(base_text.strip())
        except ValueError:
            raise ParseError("logfloor base must be an integer", text, 0) from None
        return define_by_inverse(ExpBase(base), parse_numeral(kappa_text))
    if head == "invfloor":
        fn_text, comma, kappa_text = body.partition(",")
        if not comma:
            raise ParseError("invfloor needs a function and a numeral", text, 0)
        fields = fn_text.split()
        if len(fields) == 2 and fields[0] == "pow":
            try:
                k = int(fields[1])
            except ValueError:
                raise ParseError("pow exponent must be an integer", text, 0) from None
            return define_by_inverse(Pow(k), parse_numeral(kappa_text))
        raise ParseError(f"unrecognized function {fn_text.strip()!r}", text, 0)
    raise ParseError(f"unrecognized defined-numeral form {head!r}", text, 0)
