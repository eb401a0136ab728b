"""Finite unions of integer intervals with gross-number endpoints.

An :class:`IntervalSet` describes a set of gross-integers as a canonical
union of closed intervals ``[lo..hi]``: parts are sorted, pairwise
disjoint, and never adjacent (``[1..3] | [4..6]`` collapses to ``[1..6]``).
Canonical form makes structural equality coincide with set equality and
gives every set a well defined element count, even when the endpoints are
infinite like ``[1..①]``.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .errors import (
    EmptyIntervalRejected,
    EmptySet,
    NonIntegerEndpoint,
    NonIntegerOffset,
    NotSubsetOfRange,
    ParseError,
)
from .gnum import GROSSONE, ZERO, GrossNumber, classify, finite, parse_numeral_prefix

__all__ = [
    "GrossInterval",
    "IntervalSet",
    "EMPTY",
    "interval",
    "make_set",
    "union",
    "intersect",
    "difference",
    "cardinality",
    "extrema",
    "contains",
    "is_subset",
    "is_initial_segment",
    "is_final_segment",
    "convex_hull",
    "map_affine",
    "union_initial_segments",
    "parse_set_expression",
]


def _check_integer(value: GrossNumber, role: str) -> GrossNumber:
    if not classify(value).is_integer:
        raise NonIntegerEndpoint(f"{role} {value} is not a gross-integer")
    return value


def _coerce_endpoint(value) -> GrossNumber:
    if isinstance(value, GrossNumber):
        return value
    if isinstance(value, int):
        return finite(value)
    if isinstance(value, Fraction) and value.denominator == 1:
        return finite(value)
    raise TypeError(f"cannot use {value!r} as an interval endpoint")


@dataclass(frozen=True)
class GrossInterval:
    """Closed integer interval ``[lo..hi]`` with ``lo <= hi``.

    Endpoints are gross-integers; empty intervals are rejected rather than
    normalized away, because an explicit empty part never has a canonical
    place in an interval union.
    """

    lo: GrossNumber
    hi: GrossNumber

    def __post_init__(self):
        _check_integer(self.lo, "lower endpoint")
        _check_integer(self.hi, "upper endpoint")
        if self.lo > self.hi:
            raise EmptyIntervalRejected(f"[{self.lo}..{self.hi}] has no elements")

    def count(self) -> GrossNumber:
        return self.hi - self.lo + 1

    def __str__(self) -> str:
        return f"[{self.lo}..{self.hi}]"


def interval(lo, hi) -> GrossInterval:
    """Interval from plain ints, Fractions or gross-numbers."""
    return GrossInterval(_coerce_endpoint(lo), _coerce_endpoint(hi))


@dataclass(frozen=True)
class IntervalSet:
    """Canonical finite union of disjoint, non-adjacent intervals."""

    parts: tuple[GrossInterval, ...] = ()

    def __post_init__(self):
        prev = None
        for part in self.parts:
            if not isinstance(part, GrossInterval):
                raise TypeError(f"parts must be GrossInterval, got {part!r}")
            if prev is not None and part.lo <= prev.hi + 1:
                raise ValueError(f"parts {prev} and {part} are unsorted, overlapping or adjacent")
            prev = part

    @property
    def is_empty(self) -> bool:
        return not self.parts

    def __contains__(self, value) -> bool:
        return contains(self, value)

    def __or__(self, other: "IntervalSet") -> "IntervalSet":
        return union(self, other)

    def __and__(self, other: "IntervalSet") -> "IntervalSet":
        return intersect(self, other)

    def __sub__(self, other: "IntervalSet") -> "IntervalSet":
        return difference(self, other)

    def __str__(self) -> str:
        if not self.parts:
            return "{}"
        return "|".join(str(part) for part in self.parts)

    def __repr__(self) -> str:
        return f"IntervalSet({self})"


EMPTY = IntervalSet()


def make_set(intervals) -> IntervalSet:
    """Canonical set from any iterable of intervals (overlap allowed)."""
    pending = sorted(intervals, key=lambda p: (p.lo, p.hi))
    merged: list[GrossInterval] = []
    for part in pending:
        if merged and part.lo <= merged[-1].hi + 1:
            if part.hi > merged[-1].hi:
                merged[-1] = GrossInterval(merged[-1].lo, part.hi)
        else:
            merged.append(part)
    return IntervalSet(tuple(merged))


def from_ints(values) -> IntervalSet:
    """Set of plain Python ints; handy for small explicit sets."""
    ordered = sorted(set(values))
    runs: list[GrossInterval] = []
    for v in ordered:
        if runs and finite(v) == runs[-1].hi + 1:
            runs[-1] = GrossInterval(runs[-1].lo, finite(v))
        else:
            runs.append(interval(v, v))
    return IntervalSet(tuple(runs))


def as_int_pairs(s: IntervalSet) -> list[tuple[int, int]]:
    """Endpoint pairs as plain ints; fails if any endpoint is infinite."""
    return [(part.lo.as_int(), part.hi.as_int()) for part in s.parts]


# ------------------------------------------------------------------ set algebra


def union(a: IntervalSet, b: IntervalSet) -> IntervalSet:
    return make_set(a.parts + b.parts)


def intersect(a: IntervalSet, b: IntervalSet) -> IntervalSet:
    out: list[GrossInterval] = []
    for p in a.parts:
        for q in b.parts:
            lo = p.lo if p.lo >= q.lo else q.lo
            hi = p.hi if p.hi <= q.hi else q.hi
            if lo <= hi:
                out.append(GrossInterval(lo, hi))
    return make_set(out)


def difference(a: IntervalSet, b: IntervalSet) -> IntervalSet:
    out: list[GrossInterval] = []
    for p in a.parts:
        segments = [p]
        for q in b.parts:
            nxt: list[GrossInterval] = []
            for seg in segments:
                if q.hi < seg.lo or q.lo > seg.hi:
                    nxt.append(seg)
                    continue
                if q.lo > seg.lo:
                    nxt.append(GrossInterval(seg.lo, q.lo - 1))
                if q.hi < seg.hi:
                    nxt.append(GrossInterval(q.hi + 1, seg.hi))
            segments = nxt
        out.extend(segments)
    return make_set(out)


def cardinality(s: IntervalSet) -> GrossNumber:
    """Exact element count; ``[1..①]`` has ① elements, not a limit symbol."""
    total = ZERO
    for part in s.parts:
        total = total + part.count()
    return total


def extrema(s: IntervalSet) -> tuple[GrossNumber, GrossNumber]:
    """(minimum, maximum) of a nonempty set."""
    if not s.parts:
        raise EmptySet("empty set has no extrema")
    return s.parts[0].lo, s.parts[-1].hi


def contains(s: IntervalSet, value) -> bool:
    x = _coerce_endpoint(value)
    if not classify(x).is_integer:
        return False
    for part in s.parts:
        if part.lo <= x <= part.hi:
            return True
        if part.lo > x:
            break
    return False


def is_subset(a: IntervalSet, b: IntervalSet) -> bool:
    return difference(a, b).is_empty


def convex_hull(s: IntervalSet) -> IntervalSet:
    """Smallest single interval containing the set."""
    if not s.parts:
        raise EmptySet("empty set has no hull")
    lo, hi = extrema(s)
    return IntervalSet((GrossInterval(lo, hi),))


def map_affine(s: IntervalSet, sign: int, offset) -> IntervalSet:
    """Image of the set under ``x -> sign*x + offset`` with sign in {+1, -1}.

    Such maps are exactly the order-preserving or order-reversing rigid
    motions of the integers, so images of intervals stay intervals.
    """
    if sign not in (1, -1):
        raise ValueError("sign must be +1 or -1")
    shift = _coerce_endpoint(offset) if not isinstance(offset, GrossNumber) else offset
    if not classify(shift).is_integer:
        raise NonIntegerOffset(f"offset {shift} is not a gross-integer")
    out = []
    for part in s.parts:
        a = part.lo * sign + shift
        b = part.hi * sign + shift
        out.append(GrossInterval(a, b) if sign == 1 else GrossInterval(b, a))
    return make_set(out)


def is_initial_segment(s: IntervalSet, bound: GrossNumber | int = GROSSONE) -> GrossNumber | None:
    """The n with s == [1..n], or None; s must live inside [1..bound].

    This is the shape a set must have to be measured by the identity map.
    """
    bound = _coerce_endpoint(bound)
    whole = IntervalSet((GrossInterval(finite(1), bound),))
    if not is_subset(s, whole):
        raise NotSubsetOfRange(f"{s} is not a subset of [1..{bound}]")
    if len(s.parts) == 1 and s.parts[0].lo == 1:
        return s.parts[0].hi
    return None


def is_final_segment(s: IntervalSet, bound: GrossNumber | int = GROSSONE) -> GrossNumber | None:
    """The n with s == [n..bound], or None; s must live inside [1..bound]."""
    bound = _coerce_endpoint(bound)
    # Reflect through the range so final segments of [1..bound] become
    # initial ones, then translate the witness back.
    mirrored = map_affine(s, -1, bound + 1)
    length = is_initial_segment(mirrored, bound)
    if length is None:
        return None
    return bound + 1 - length


def union_initial_segments(bound: GrossNumber | int = GROSSONE) -> IntervalSet:
    """Union of [1..n] over all n strictly below ``bound``.

    For bound ① this is [1..①-1]: every proper initial segment stops short
    of the last natural number, so their union still misses ①.
    """
    bound = _coerce_endpoint(bound)
    top = bound - 1
    if finite(1) > top:
        return EMPTY
    return IntervalSet((GrossInterval(finite(1), top),))


# ------------------------------------------------------------------ expressions


class _SetScanner:
    """Recursive-descent parser for set expressions.

    Grammar (whitespace allowed between tokens; '|' and '\\' bind equally
    and associate left, '&' binds tighter):

        expr    := term (('|' | '\\') term)*
        term    := factor ('&' factor)*
        factor  := '[' numeral '..' numeral ']'
                 | '{' numeral (',' numeral)* '}'
                 | '(' expr ')'
                 | 'iota' '(' expr ',' numeral ')'
                 | 'reflect' '(' expr ',' numeral ')'
                 | 'hull' '(' expr ')'

    ``iota(S, k)`` maps x to k+1-x (the reversal of [1..k]); ``reflect(S, a)``
    mirrors through the point a; ``hull(S)`` is the convex hull.
    """

    def __init__(self, text: str):
        self.text = text
        self.pos = 0

    def fail(self, message: str):
        raise ParseError(message, self.text, self.pos)

    def skip_ws(self):
        while self.pos < len(self.text) and self.text[self.pos].isspace():
            self.pos += 1

    def peek(self) -> str:
        return self.text[self.pos] if self.pos < len(self.text) else ""

    def expect(self, token: str):
        self.skip_ws()
        if not self.text.startswith(token, self.pos):
            self.fail(f"expected {token!r}")
        self.pos += len(token)

    def read_numeral(self) -> GrossNumber:
        self.skip_ws()
        value, end = parse_numeral_prefix(self.text, self.pos)
        self.pos = end
        return value

    def read_name(self) -> str:
        self.skip_ws()
        start = self.pos
        while self.peek().isalpha():
            self.pos += 1
        return self.text[start : self.pos]

    def parse_factor(self) -> IntervalSet:
        self.skip_ws()
        ch = self.peek()
        if ch == "[":
            self.pos += 1
            lo = self.read_numeral()
            self.expect("..")
            hi = self.read_numeral()
            self.expect("]")
            return IntervalSet((GrossInterval(lo, hi),))
        if ch == "{":
            self.pos += 1
            self.skip_ws()
            if self.peek() == "}":
                self.pos += 1
                return EMPTY
            elements = [self.read_numeral()]
            self.skip_ws()
            while self.peek() == ",":
                self.pos += 1
                elements.append(self.read_numeral())
                self.skip_ws()
            self.expect("}")
            return make_set(GrossInterval(e, e) for e in elements)
        if ch == "(":
            self.pos += 1
            inner = self.parse_expr()
            self.expect(")")
            return inner
        name = self.read_name()
        if name == "iota":
            self.expect("(")
            inner = self.parse_expr()
            self.expect(",")
            kappa = self.read_numeral()
            self.expect(")")
            return map_affine(inner, -1, kappa + 1)
        if name == "reflect":
            self.expect("(")
            inner = self.parse_expr()
            self.expect(",")
            center = self.read_numeral()
            self.expect(")")
            return map_affine(inner, -1, center * 2)
        if name == "hull":
            self.expect("(")
            inner = self.parse_expr()
            self.expect(")")
            return convex_hull(inner)
        self.fail("expected an interval, enumeration, '(' or a function name")

    def parse_term(self) -> IntervalSet:
        result = self.parse_factor()
        while True:
            self.skip_ws()
            if self.peek() == "&":
                self.pos += 1
                result = intersect(result, self.parse_factor())
            else:
                return result

    def parse_expr(self) -> IntervalSet:
        result = self.parse_term()
        while True:
            self.skip_ws()
            op = self.peek()
            if op == "|":
                self.pos += 1
                result = union(result, self.parse_term())
            elif op == "\\":
                self.pos += 1
                result = difference(result, self.parse_term())
            else:
                return result


def parse_set_expression(text: str) -> IntervalSet:
    """Evaluate a set expression; see :class:`_SetScanner` for the grammar."""
    scanner = _SetScanner(text)
    result = scanner.parse_expr()
    scanner.skip_ws()
    if scanner.pos != len(text):
        scanner.fail("unexpected trailing input")
    return result
