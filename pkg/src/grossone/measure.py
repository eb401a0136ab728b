"""Explicit measurements: described bijections from [1..mu] onto a set.

A set has mu elements exactly when someone can write down a bijection
from [1..mu] onto it.  Here "write down" means a finite list of
order-preserving shift pieces: consecutive index blocks, each moved by a
fixed integer offset.  That class is closed under the constructions this
module provides (concatenation for disjoint unions, composition with
further piecewise shifts, canonical injections between measured sets,
complements inside a measured whole, and the split of two equal-sized
overlapping sets), so every result is again an explicit measurement
rather than an existence claim.
"""

from __future__ import annotations

import json
from dataclasses import dataclass

from .errors import (
    BoundExceeded,
    EmptySet,
    InvalidMeasurement,
    NonIntegerOffset,
    NotABijection,
    NotASubset,
    OverlappingTargets,
    ParseError,
    PreconditionViolated,
)
from .gnum import GrossNumber, Sign, classify, cmp, finite, format_numeral, parse_numeral
from .sets import (
    GrossInterval,
    IntervalSet,
    cardinality,
    difference,
    intersect,
    interval,
    is_subset,
    make_set,
    union,
)

__all__ = [
    "AffinePiece",
    "Measurement",
    "canonical_measurement",
    "min_extraction_measurement",
    "concat",
    "transport",
    "invert_pieces",
    "compare_measured",
    "canonical_injection",
    "complement_measurement",
    "intersection_split",
    "serialized_numerals",
    "to_text",
    "from_text",
    "to_jsonable",
    "from_jsonable",
    "to_json",
    "from_json",
]

#: Default cap on literal one-element-at-a-time extraction steps.
EXTRACTION_BOUND = 100_000


def _check_positive_integer(value: GrossNumber, what: str):
    kind = classify(value)
    if not kind.is_integer or value.sign() != Sign.POSITIVE:
        raise InvalidMeasurement(f"{what} must be a positive gross-integer, got {value}")


@dataclass(frozen=True)
class AffinePiece:
    """One block of a measurement: indexes in ``domain`` shifted by ``offset``."""

    domain: GrossInterval
    offset: GrossNumber

    def __post_init__(self):
        if not isinstance(self.domain, GrossInterval):
            raise TypeError("domain must be a GrossInterval")
        shift = self.offset if isinstance(self.offset, GrossNumber) else finite(self.offset)
        object.__setattr__(self, "offset", shift)
        if not classify(shift).is_integer:
            raise NonIntegerOffset(f"offset {shift} is not a gross-integer")

    @property
    def image(self) -> GrossInterval:
        return GrossInterval(self.domain.lo + self.offset, self.domain.hi + self.offset)

    def __str__(self) -> str:
        return f"{self.domain} -> {self.image}"


@dataclass(frozen=True)
class Measurement:
    """A validated bijection from [1..mu] onto ``target``.

    Construction re-checks the full invariant, so any Measurement in hand
    is a genuine measurement: domains partition [1..mu] contiguously,
    images are pairwise disjoint and cover the target exactly, and mu
    equals the target's element count.
    """

    mu: GrossNumber
    pieces: tuple[AffinePiece, ...]
    target: IntervalSet

    def __post_init__(self):
        object.__setattr__(self, "pieces", tuple(self.pieces))
        _check_positive_integer(self.mu, "mu")
        if not self.pieces:
            raise InvalidMeasurement("a measurement needs at least one piece")
        expected_lo = finite(1)
        for piece in self.pieces:
            if not isinstance(piece, AffinePiece):
                raise TypeError("pieces must be AffinePiece values")
            if piece.domain.lo != expected_lo:
                raise InvalidMeasurement(
                    f"piece domains must be contiguous from 1: expected lo {expected_lo}, "
                    f"got {piece.domain.lo}"
                )
            expected_lo = piece.domain.hi + 1
        if self.pieces[-1].domain.hi != self.mu:
            raise InvalidMeasurement(
                f"piece domains must end at mu={self.mu}, got {self.pieces[-1].domain.hi}"
            )
        images = make_set(piece.image for piece in self.pieces)
        if cardinality(images) != self.mu:
            raise InvalidMeasurement("piece images must be pairwise disjoint")
        if images != self.target:
            raise InvalidMeasurement("piece images must cover exactly the target")
        if cardinality(self.target) != self.mu:
            raise InvalidMeasurement("mu must equal the element count of the target")

    def apply(self, x) -> GrossNumber:
        """Image of index x; x must lie in [1..mu]."""
        x = x if isinstance(x, GrossNumber) else finite(x)
        for piece in self.pieces:
            if piece.domain.lo <= x <= piece.domain.hi:
                return x + piece.offset
        raise ValueError(f"{x} is outside [1..{self.mu}]")

    def invert(self, y) -> GrossNumber:
        """Index mapping to y; y must lie in the target."""
        y = y if isinstance(y, GrossNumber) else finite(y)
        for piece in self.pieces:
            if piece.domain.lo + piece.offset <= y <= piece.domain.hi + piece.offset:
                return y - piece.offset
        raise ValueError(f"{y} is not in the measured set")

    def __str__(self) -> str:
        return to_text(self).rstrip("\n")


# ---------------------------------------------------------------- constructions


def canonical_measurement(s: IntervalSet) -> Measurement:
    """The order-preserving measurement: k-th smallest element gets index k.

    Each part of the set becomes one piece whose offset aligns the next
    free index block with the part's left endpoint.
    """
    if s.is_empty:
        raise EmptySet("the empty set has no measurement")
    pieces = []
    used = finite(0)
    for part in s.parts:
        domain_lo = used + 1
        used = used + part.count()
        pieces.append(AffinePiece(GrossInterval(domain_lo, used), part.lo - domain_lo))
    return Measurement(mu=used, pieces=tuple(pieces), target=s)


def min_extraction_measurement(s: IntervalSet, bound: int = EXTRACTION_BOUND) -> Measurement:
    """Measurement built by repeatedly extracting the minimum element.

    Runs the construction literally, one element per step, for finite sets
    of at most ``bound`` elements; larger finite sets are refused, since
    the procedure is only legitimate as a finite number of operations.
    For sets with infinitely many elements the extraction order is forced
    (step n always picks the n-th smallest element), so the closed-form
    order-preserving measurement is returned instead of an endless loop;
    the result is the same measurement the extraction defines.
    """
    if s.is_empty:
        raise EmptySet("the empty set has no measurement")
    size = cardinality(s)
    if classify(size).is_infinite:
        return canonical_measurement(s)
    steps = size.as_int()
    if steps > bound:
        raise BoundExceeded(f"{steps} extraction steps exceed the configured bound {bound}")
    try:
        int_pairs = [(part.lo.as_int(), part.hi.as_int()) for part in s.parts]
    except ValueError:
        int_pairs = None
    if int_pairs is not None:
        return _extract_over_ints(int_pairs, s)
    return _extract_symbolic(s, steps)


def _extract_over_ints(pairs: list[tuple[int, int]], target: IntervalSet) -> Measurement:
    runs: list[tuple[int, int, int]] = []  # (domain lo, domain hi, offset)
    index = 0
    for lo, hi in pairs:
        value = lo
        while value <= hi:
            index += 1
            offset = value - index
            if runs and runs[-1][2] == offset and runs[-1][1] == index - 1:
                runs[-1] = (runs[-1][0], index, offset)
            else:
                runs.append((index, index, offset))
            value += 1
    pieces = tuple(
        AffinePiece(interval(dlo, dhi), finite(off)) for dlo, dhi, off in runs
    )
    return Measurement(mu=finite(index), pieces=pieces, target=target)


def _extract_symbolic(s: IntervalSet, steps: int) -> Measurement:
    # Finitely many elements but at least one symbolic endpoint, e.g.
    # [①-3..①]; the loop runs with exact gross-number arithmetic.
    remaining = s
    runs: list[tuple[GrossNumber, GrossNumber, GrossNumber]] = []
    index = finite(0)
    for _ in range(steps):
        smallest = remaining.parts[0].lo
        remaining = difference(remaining, IntervalSet((GrossInterval(smallest, smallest),)))
        index = index + 1
        offset = smallest - index
        if runs and runs[-1][2] == offset and runs[-1][1] == index - 1:
            runs[-1] = (runs[-1][0], index, offset)
        else:
            runs.append((index, index, offset))
    pieces = tuple(AffinePiece(GrossInterval(dlo, dhi), off) for dlo, dhi, off in runs)
    return Measurement(mu=index, pieces=pieces, target=s)


def concat(first: Measurement, rest: Measurement) -> Measurement:
    """Measurement of a disjoint union; mu values add exactly.

    The second measurement's index block is appended after the first's,
    which is why the element count of a whole is the count of a part plus
    the count of the complement.
    """
    if not intersect(first.target, rest.target).is_empty:
        raise OverlappingTargets(
            f"targets share {intersect(first.target, rest.target)}"
        )
    shifted = tuple(
        AffinePiece(
            GrossInterval(p.domain.lo + first.mu, p.domain.hi + first.mu),
            p.offset - first.mu,
        )
        for p in rest.pieces
    )
    return Measurement(
        mu=first.mu + rest.mu,
        pieces=first.pieces + shifted,
        target=union(first.target, rest.target),
    )


def invert_pieces(pieces) -> tuple[AffinePiece, ...]:
    """Pieces of the inverse bijection, sorted by their new domains."""
    flipped = [AffinePiece(p.image, -p.offset) for p in pieces]
    flipped.sort(key=lambda p: p.domain.lo)
    return tuple(flipped)


def _merge_pieces(pieces: list[AffinePiece]) -> tuple[AffinePiece, ...]:
    pieces = sorted(pieces, key=lambda p: p.domain.lo)
    merged: list[AffinePiece] = []
    for piece in pieces:
        if (
            merged
            and merged[-1].offset == piece.offset
            and piece.domain.lo == merged[-1].domain.hi + 1
        ):
            merged[-1] = AffinePiece(
                GrossInterval(merged[-1].domain.lo, piece.domain.hi), piece.offset
            )
        else:
            merged.append(piece)
    return tuple(merged)


def _compose(first, second) -> tuple[AffinePiece, ...]:
    """Pieces of x -> second(first(x)); first's images must lie in second's domains."""
    out: list[AffinePiece] = []
    for p in first:
        img = p.image
        for q in second:
            lo = img.lo if img.lo >= q.domain.lo else q.domain.lo
            hi = img.hi if img.hi <= q.domain.hi else q.domain.hi
            if lo <= hi:
                out.append(
                    AffinePiece(GrossInterval(lo - p.offset, hi - p.offset), p.offset + q.offset)
                )
    return _merge_pieces(out)


def transport(m: Measurement, bijection) -> Measurement:
    """Push a measurement through a further piecewise-shift bijection.

    ``bijection`` is a list of AffinePiece whose domains partition
    m.target and whose images are pairwise disjoint; the result measures
    the image set with the same mu.
    """
    pieces = tuple(bijection)
    if not pieces:
        raise NotABijection("a bijection needs at least one piece")
    for piece in pieces:
        if not isinstance(piece, AffinePiece):
            raise TypeError("bijection must consist of AffinePiece values")
    domains = make_set(p.domain for p in pieces)
    total = finite(0)
    for p in pieces:
        total = total + p.domain.count()
    if cardinality(domains) != total:
        raise NotABijection("bijection domains overlap")
    if domains != m.target:
        raise NotABijection("bijection domains do not partition the measured set")
    images = make_set(p.image for p in pieces)
    if cardinality(images) != total:
        raise NotABijection("bijection images overlap")
    return Measurement(mu=m.mu, pieces=_compose(m.pieces, pieces), target=images)


def compare_measured(first: Measurement, second: Measurement) -> Sign:
    """Order the sizes of two measured sets.

    Negative or Zero comes with an explicit injection of the first set
    into the second (see canonical_injection); injections both ways force
    Zero, the exact-arithmetic form of the Cantor-Bernstein conclusion.
    """
    return cmp(first.mu, second.mu)


def canonical_injection(first: Measurement, second: Measurement) -> tuple[AffinePiece, ...]:
    """An explicit injection first.target -> second.target when sizes allow.

    Routes each element back to its index and forward through the second
    measurement: x -> second(first⁻¹(x)).  Requires mu of the first to be
    at most mu of the second so every index stays in range.
    """
    if compare_measured(first, second) == Sign.POSITIVE:
        raise PreconditionViolated(
            f"no canonical injection: {first.mu} elements into {second.mu}"
        )
    clipped: list[AffinePiece] = []
    for piece in second.pieces:
        if piece.domain.lo > first.mu:
            break
        hi = piece.domain.hi if piece.domain.hi <= first.mu else first.mu
        clipped.append(AffinePiece(GrossInterval(piece.domain.lo, hi), piece.offset))
    return _compose(invert_pieces(first.pieces), clipped)


def complement_measurement(whole: Measurement, part: Measurement) -> Measurement:
    """Measurement of everything in the whole but not in the part.

    Witnesses that a measured subset is co-measured: the remainder's mu is
    exactly whole.mu - part.mu, strictly positive for a proper subset.
    """
    if not is_subset(part.target, whole.target):
        raise NotASubset(f"{part.target} is not a subset of {whole.target}")
    remainder = difference(whole.target, part.target)
    if remainder.is_empty:
        raise EmptySet("the part is the entire set; nothing remains to measure")
    return canonical_measurement(remainder)


def intersection_split(first: Measurement, second: Measurement) -> tuple[Measurement, Measurement]:
    """Measure both one-sided differences of two equal-sized overlapping sets.

    For distinct sets of the same size that share elements, what the first
    has beyond the intersection and what the second has beyond it are both
    nonempty and have the same number of elements.
    """
    if compare_measured(first, second) != Sign.ZERO:
        raise PreconditionViolated(
            f"the sets must have the same number of elements, got {first.mu} and {second.mu}"
        )
    a, b = first.target, second.target
    if intersect(a, b).is_empty:
        raise PreconditionViolated("the sets must share at least one element")
    if a == b:
        raise PreconditionViolated("the sets must be distinct")
    only_first = canonical_measurement(difference(a, b))
    only_second = canonical_measurement(difference(b, a))
    return only_first, only_second


# ---------------------------------------------------------------- serialization


def serialized_numerals(m: Measurement) -> list[GrossNumber]:
    """Every numeral a writer needs in order to spell the measurement out.

    In order: mu, then each piece's domain endpoints plus its offset when
    the offset is nonzero (an identity block needs no shift numeral), then
    the target's interval endpoints.  Measuring a set inside a numeral
    system means exactly that each of these is expressible there.
    """
    out = [m.mu]
    for piece in m.pieces:
        out.append(piece.domain.lo)
        out.append(piece.domain.hi)
        if not piece.offset.is_zero:
            out.append(piece.offset)
    for part in m.target.parts:
        out.append(part.lo)
        out.append(part.hi)
    return out


def to_text(m: Measurement, ascii_mode: bool = False) -> str:
    """Line-based form: one mu line, then piece lines, then target lines.

    ``piece`` lines carry domain-lo, domain-hi and, when nonzero, the
    offset; ``target`` lines carry one interval each.
    """

    def fmt(x: GrossNumber) -> str:
        return format_numeral(x, ascii_mode=ascii_mode)

    lines = [f"mu {fmt(m.mu)}"]
    for piece in m.pieces:
        entry = f"piece {fmt(piece.domain.lo)} {fmt(piece.domain.hi)}"
        if not piece.offset.is_zero:
            entry += f" {fmt(piece.offset)}"
        lines.append(entry)
    for part in m.target.parts:
        lines.append(f"target [{fmt(part.lo)}..{fmt(part.hi)}]")
    return "\n".join(lines) + "\n"


def from_text(text: str) -> Measurement:
    """Parse the line-based form; the result is re-validated on construction."""
    mu: GrossNumber | None = None
    pieces: list[AffinePiece] = []
    targets: list[GrossInterval] = []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line:
            continue
        fields = line.split()
        kind, args = fields[0], fields[1:]
        try:
            if kind == "mu" and len(args) == 1:
                mu = parse_numeral(args[0])
            elif kind == "piece" and len(args) in (2, 3):
                lo, hi = parse_numeral(args[0]), parse_numeral(args[1])
                offset = parse_numeral(args[2]) if len(args) == 3 else finite(0)
                pieces.append(AffinePiece(GrossInterval(lo, hi), offset))
            elif kind == "target" and len(args) == 1:
                body = args[0]
                if not (body.startswith("[") and body.endswith("]") and ".." in body):
                    raise ParseError("expected [lo..hi]", raw, 0)
                lo_text, hi_text = body[1:-1].split("..", 1)
                targets.append(GrossInterval(parse_numeral(lo_text), parse_numeral(hi_text)))
            else:
                raise ParseError(f"unrecognized line {line!r}", raw, 0)
        except ParseError as exc:
            raise ParseError(f"line {lineno}: {exc.args[0]}", raw, exc.position) from None
    if mu is None:
        raise InvalidMeasurement("missing mu line")
    return Measurement(mu=mu, pieces=tuple(pieces), target=make_set(targets))


def to_jsonable(m: Measurement, ascii_mode: bool = False) -> dict:
    """JSON-ready dict with every numeral as a string in the numeral grammar."""

    def fmt(x: GrossNumber) -> str:
        return format_numeral(x, ascii_mode=ascii_mode)

    pieces = []
    for piece in m.pieces:
        entry = {"lo": fmt(piece.domain.lo), "hi": fmt(piece.domain.hi)}
        if not piece.offset.is_zero:
            entry["offset"] = fmt(piece.offset)
        pieces.append(entry)
    return {
        "mu": fmt(m.mu),
        "pieces": pieces,
        "target": [{"lo": fmt(part.lo), "hi": fmt(part.hi)} for part in m.target.parts],
    }


def from_jsonable(data: dict) -> Measurement:
    mu = parse_numeral(data["mu"])
    pieces = tuple(
        AffinePiece(
            GrossInterval(parse_numeral(entry["lo"]), parse_numeral(entry["hi"])),
            parse_numeral(entry.get("offset", "0")),
        )
        for entry in data["pieces"]
    )
    target = make_set(
        GrossInterval(parse_numeral(entry["lo"]), parse_numeral(entry["hi"]))
        for entry in data["target"]
    )
    return Measurement(mu=mu, pieces=pieces, target=target)


def to_json(m: Measurement, ascii_mode: bool = False) -> str:
    return json.dumps(to_jsonable(m, ascii_mode=ascii_mode), ensure_ascii=False, sort_keys=True)


def from_json(text: str) -> Measurement:
    return from_jsonable(json.loads(text))
