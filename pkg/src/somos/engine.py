"""Exact evaluation of bilinear recurrences of the Somos type.

A spec of order k defines the recurrence

    a_n * a_{n-k} = sum over summand pairs (i, j) of a_{n-i} * a_{n-j}

with i + j = k, so every new term is the bilinear sum divided by a_{n-k}.
All arithmetic is exact: integer mode performs checked integer division
and surfaces any non-exact quotient as a first-class witness, rational
mode continues with exact fractions (always in lowest terms, positive
denominator).
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Iterator, Union

from .errors import (
    IndexOutOfRangeError,
    InvalidSpecError,
    NonIntegralTermError,
    ZeroDenominatorError,
)

Term = Union[int, Fraction]

INTEGER = "integer"
RATIONAL = "rational"

FULL = "full"
# generate() keeps everything up to this many terms; above it, a window of
# 4k terms is retained (certificates reach back exactly 2k indices).
FULL_RETENTION_CEILING = 10_000


@dataclass(frozen=True)
class SequenceSpec:
    """Defining data of one bilinear recurrence.

    order: the lag k of the dividing term.
    summands: pairs (i, j), 1 <= i <= j <= k-1 and i + j = k.
    initials: exactly k starting values a_0 .. a_{k-1}.
    """

    order: int
    summands: tuple[tuple[int, int], ...]
    initials: tuple[int, ...]
    name: str | None = None

    def __post_init__(self):
        object.__setattr__(
            self, "summands", tuple((int(i), int(j)) for i, j in self.summands)
        )
        object.__setattr__(self, "initials", tuple(int(v) for v in self.initials))

    def validate(self) -> None:
        """Raise InvalidSpecError unless all structural invariants hold."""
        if self.order < 1:
            raise InvalidSpecError(f"order must be positive, got {self.order}")
        if not self.summands:
            raise InvalidSpecError("summands must be nonempty")
        seen = set()
        for i, j in self.summands:
            if not (1 <= i <= j <= self.order - 1):
                raise InvalidSpecError(f"summand ({i}, {j}) out of range for order {self.order}")
            if i + j != self.order:
                raise InvalidSpecError(
                    f"summand ({i}, {j}) is not weight-homogeneous: {i}+{j} != {self.order}"
                )
            if (i, j) in seen:
                raise InvalidSpecError(f"duplicate summand ({i}, {j})")
            seen.add((i, j))
        if len(self.initials) != self.order:
            raise InvalidSpecError(
                f"expected {self.order} initial values, got {len(self.initials)}"
            )

    def all_ones_initials(self) -> bool:
        return all(v == 1 for v in self.initials)


@dataclass(frozen=True)
class NonIntegralEvent:
    """Witness that the bilinear sum was not divisible by a_{n-k}.

    remainder is reduced modulo |denominator|, so 0 < remainder < |denominator|.
    """

    index: int
    numerator: int
    denominator: int
    remainder: int


class SequenceBuffer:
    """Indexed history of computed terms.

    terms[m] is the sequence value at absolute index start_index + m.
    With an integer retention window w, only the w most recent terms are
    kept and start_index advances as older ones are discarded.
    """

    def __init__(self, terms, start_index: int = 0, retention="full"):
        if retention != FULL:
            retention = int(retention)
            if retention < 2:
                raise ValueError(f"retention window must be >= 2, got {retention}")
        self._terms = list(terms)
        self._start = int(start_index)
        self.retention = retention

    @property
    def start_index(self) -> int:
        return self._start

    @property
    def next_index(self) -> int:
        return self._start + len(self._terms)

    def __len__(self) -> int:
        return len(self._terms)

    def term(self, index: int) -> Term:
        """Value at absolute index; IndexOutOfRangeError if not retained."""
        if index < self._start or index >= self.next_index:
            raise IndexOutOfRangeError(
                f"index {index} not in buffer range [{self._start}, {self.next_index})"
            )
        return self._terms[index - self._start]

    def has_range(self, lo: int, hi: int) -> bool:
        """Whether all indices lo..hi (inclusive) are retained."""
        return lo >= self._start and hi < self.next_index

    def append(self, value: Term) -> None:
        self._terms.append(value)
        if self.retention != FULL and len(self._terms) > self.retention:
            drop = len(self._terms) - self.retention
            del self._terms[:drop]
            self._start += drop

    def items(self) -> Iterator[tuple[int, Term]]:
        for offset, value in enumerate(self._terms):
            yield self._start + offset, value

    def values(self) -> list[Term]:
        return list(self._terms)

    def __repr__(self) -> str:
        return (
            f"SequenceBuffer(start_index={self._start}, len={len(self._terms)}, "
            f"retention={self.retention!r})"
        )


def somos5_spec() -> SequenceSpec:
    """The classic Somos-5 instance: k=5, summands (1,4) and (2,3), all-ones start."""
    return SequenceSpec(order=5, summands=((1, 4), (2, 3)), initials=(1,) * 5, name="somos-5")


def new_state(spec: SequenceSpec, retention="full") -> SequenceBuffer:
    """Fresh buffer holding exactly the k initial terms at indices 0..k-1."""
    spec.validate()
    if retention != FULL and int(retention) < 2 * spec.order:
        raise ValueError(
            f"retention window {retention} is below 2*order = {2 * spec.order}"
        )
    return SequenceBuffer(spec.initials, start_index=0, retention=retention)


def next_term(buffer: SequenceBuffer, spec: SequenceSpec, mode: str = INTEGER):
    """Compute the term at buffer.next_index and append it.

    Integer mode returns the new term when the division is exact; on a
    non-exact division it returns a NonIntegralEvent and leaves the
    buffer unchanged.  Rational mode always appends the exact quotient.
    Raises ZeroDenominatorError when a_{n-k} is zero in either mode.
    """
    if mode not in (INTEGER, RATIONAL):
        raise ValueError(f"unknown mode {mode!r}")
    k = spec.order
    n = buffer.next_index
    if len(buffer) < k:
        raise IndexOutOfRangeError(
            f"buffer holds {len(buffer)} terms, need the last {k} to step"
        )
    denominator = buffer.term(n - k)
    if denominator == 0:
        raise ZeroDenominatorError(n)
    numerator = sum(buffer.term(n - i) * buffer.term(n - j) for i, j in spec.summands)
    if mode == RATIONAL:
        value = Fraction(numerator) / Fraction(denominator)
        buffer.append(value)
        return value
    remainder = numerator % abs(denominator)
    if remainder:
        return NonIntegralEvent(n, numerator, denominator, remainder)
    value = numerator // denominator
    buffer.append(value)
    return value


def generate(
    spec: SequenceSpec, count: int, mode: str = INTEGER, retention=None
) -> SequenceBuffer:
    """Generate terms at indices 0..count-1.

    In integer mode the first non-exact division aborts the run by
    raising NonIntegralTermError, which carries the witness event and
    the partial buffer.
    """
    spec.validate()
    if count < spec.order:
        raise ValueError(f"count must be at least the order {spec.order}, got {count}")
    if retention is None:
        retention = FULL if count <= FULL_RETENTION_CEILING else 4 * spec.order
    buffer = new_state(spec, retention=retention)
    while buffer.next_index < count:
        result = next_term(buffer, spec, mode)
        if isinstance(result, NonIntegralEvent):
            raise NonIntegralTermError(result, buffer)
    return buffer


def as_integer(value: Term) -> int:
    """Coerce a term to int; ValueError if it is a non-integral fraction."""
    if isinstance(value, Fraction):
        if value.denominator != 1:
            raise ValueError(f"term {value} is not an integer")
        return int(value)
    return value


def digit_count(value) -> int:
    """Number of decimal digits of |value|; digit_count(0) == 1.

    Avoids str() so it works on terms past any interpreter digit guard.
    """
    value = abs(as_integer(value))
    if value == 0:
        return 1
    # 30103/100000 slightly overestimates log10(2); correct in both directions.
    estimate = value.bit_length() * 30103 // 100000
    power = 10**estimate
    while power > value:
        estimate -= 1
        power //= 10
    while power * 10 <= value:
        estimate += 1
        power *= 10
    return estimate + 1


def first_recurrence_violation(buffer: SequenceBuffer, spec: SequenceSpec):
    """Re-verify a_n * a_{n-k} == bilinear sum over every covered index.

    Returns the first index where the identity fails, or None.  Works on
    integer and rational buffers alike.
    """
    k = spec.order
    lo = max(buffer.start_index + k, k)
    for n in range(lo, buffer.next_index):
        lhs = buffer.term(n) * buffer.term(n - k)
        rhs = sum(buffer.term(n - i) * buffer.term(n - j) for i, j in spec.summands)
        if lhs != rhs:
            return n
    return None


def is_positive_nondecreasing(buffer: SequenceBuffer) -> bool:
    """Runtime check: every retained term >= its predecessor >= 1."""
    previous = None
    for _, value in buffer.items():
        if value < 1:
            return False
        if previous is not None and value < previous:
            return False
        previous = value
    return True
