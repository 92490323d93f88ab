"""Per-index divisibility certificates for the Somos-5 recurrence.

A certificate at index n re-derives, in exact integer arithmetic, that
a_{n-5} divides the bilinear numerator a_{n-1}a_{n-4} + a_{n-2}a_{n-3}:

  * the five index-shift identities, i.e. the defining recurrence
    re-instantiated at n-1 .. n-5 (each reaches back to a_{n-10}),
  * the cancellation precondition gcd(a_{n-5}, a_{n-8}a_{n-9}) = 1, which
    lets the multiplier a_{n-8}a_{n-9} be removed again at the end,
  * an eight-step reduction chain that multiplies the numerator by
    a_{n-8}a_{n-9}, rewrites it with the shift identities, drops explicit
    multiples of a_{n-5}, and ends at a_{n-3}a_{n-4}a_{n-5}a_{n-10}, which
    carries a_{n-5} as a literal factor.

Every step is materialized as a concrete integer.  Exact-rewrite steps
must reproduce the previous value bit-for-bit; drop-multiple steps must
differ from it by exactly the recomputed discarded products, each an
exact multiple of a_{n-5}.  The chain shape is specific to order 5;
other orders get integrality scanning instead (see scanner).

Certificates start at n = 10 because the chain references a_{n-10}; the
ten earlier terms are integral by inspection.
"""

from __future__ import annotations

from dataclasses import dataclass

from .coprime import VerificationReport, gcd
from .engine import SequenceBuffer, SequenceSpec, as_integer
from .errors import IndexOutOfRangeError, InvalidChainError, ZeroDenominatorError

EXACT_REWRITE = "exact-rewrite"
DROP_MULTIPLE = "drop-multiple"

CERTIFICATE_START = 10


@dataclass(frozen=True)
class IndexShiftIdentity:
    """The recurrence at index n - shift: a_{n-s}a_{n-s-5} = a_{n-s-1}a_{n-s-4} + a_{n-s-2}a_{n-s-3}."""

    shift: int
    lhs: int
    rhs: int
    holds: bool


@dataclass(frozen=True)
class ChainStep:
    """One displayed line of the reduction chain.

    Step 0 is the starting expression.  For later steps, an exact-rewrite
    must equal the previous value; a drop-multiple must fall short of it
    by dropped_multiple, itself an exact multiple of the modulus.
    verified records whether the step met its own condition.
    """

    step_no: int
    kind: str
    value: int
    congruent_to_prev: bool
    verified: bool
    dropped_multiple: int | None = None


@dataclass(frozen=True)
class DivisibilityCertificate:
    """Machine-checkable transcript that a_{n-5} divides the bilinear numerator."""

    index: int
    modulus: int
    precondition_gcd: int
    shifts: tuple[IndexShiftIdentity, ...]
    chain: tuple[ChainStep, ...]
    numerator_residue: int
    valid: bool


def _require_window(buffer: SequenceBuffer, n: int) -> None:
    if n < CERTIFICATE_START:
        raise IndexOutOfRangeError(
            f"certificates start at n = {CERTIFICATE_START}, got n = {n}"
        )
    if not buffer.has_range(n - 10, n - 1):
        raise IndexOutOfRangeError(
            f"certificate at n = {n} needs indices {n - 10}..{n - 1}, buffer holds "
            f"[{buffer.start_index}, {buffer.next_index})"
        )


def check_index_shifts(buffer: SequenceBuffer, n: int) -> tuple[IndexShiftIdentity, ...]:
    """Evaluate the five shifted recurrence identities exactly, shifts 5 down to 1."""
    _require_window(buffer, n)
    identities = []
    for s in range(5, 0, -1):
        lhs = as_integer(buffer.term(n - s)) * as_integer(buffer.term(n - s - 5))
        rhs = as_integer(buffer.term(n - s - 1)) * as_integer(buffer.term(n - s - 4)) + as_integer(
            buffer.term(n - s - 2)
        ) * as_integer(buffer.term(n - s - 3))
        identities.append(IndexShiftIdentity(shift=s, lhs=lhs, rhs=rhs, holds=lhs == rhs))
    return tuple(identities)


def cancellation_precondition(buffer: SequenceBuffer, n: int) -> int:
    """gcd(a_{n-5}, a_{n-8} * a_{n-9}); must be 1 for the multiplier to cancel."""
    if not buffer.has_range(n - 9, n - 5):
        raise IndexOutOfRangeError(
            f"precondition at n = {n} needs indices {n - 9}..{n - 5}"
        )
    return gcd(
        as_integer(buffer.term(n - 5)),
        as_integer(buffer.term(n - 8)) * as_integer(buffer.term(n - 9)),
    )


def build_certificate(
    buffer: SequenceBuffer, n: int, strict: bool = False
) -> DivisibilityCertificate:
    """Evaluate every line of the reduction chain at index n.

    Returns the certificate whether or not it is valid, so callers can
    inspect which step broke; strict=True raises InvalidChainError on an
    invalid certificate instead (an invalid chain on a generated Somos-5
    buffer signals an engine bug).
    """
    _require_window(buffer, n)
    t = {d: as_integer(buffer.term(n - d)) for d in range(1, 11)}
    m = t[5]
    if m == 0:
        raise ZeroDenominatorError(n - 5, f"chain modulus a_{n - 5} is zero")

    numerator = t[1] * t[4] + t[2] * t[3]
    shifts = check_index_shifts(buffer, n)
    precondition_gcd = gcd(m, t[8] * t[9])

    # The eight displayed lines: multiply by a_{n-8}a_{n-9}, distribute,
    # substitute the shift identities, drop explicit multiples of a_{n-5},
    # factor, and finish at a_{n-3}a_{n-4}a_{n-5}a_{n-10}.
    lines = [
        (t[8] * t[9] * numerator, EXACT_REWRITE, None),
        (t[8] * t[9] * t[1] * t[4] + t[8] * t[9] * t[2] * t[3], EXACT_REWRITE, None),
        (
            t[8] * t[1] * (t[5] * t[8] + t[6] * t[7])
            + t[9] * t[2] * (t[4] * t[7] + t[5] * t[6]),
            EXACT_REWRITE,
            None,
        ),
        (
            t[8] * t[1] * t[6] * t[7] + t[9] * t[2] * t[4] * t[7],
            DROP_MULTIPLE,
            t[8] * t[1] * t[5] * t[8] + t[9] * t[2] * t[5] * t[6],
        ),
        (
            t[8] * t[7] * (t[2] * t[5] + t[3] * t[4])
            + t[9] * t[4] * (t[3] * t[6] + t[4] * t[5]),
            EXACT_REWRITE,
            None,
        ),
        (
            t[8] * t[7] * t[3] * t[4] + t[9] * t[4] * t[3] * t[6],
            DROP_MULTIPLE,
            t[8] * t[7] * t[2] * t[5] + t[9] * t[4] * t[4] * t[5],
        ),
        (t[3] * t[4] * (t[8] * t[7] + t[9] * t[6]), EXACT_REWRITE, None),
        (t[3] * t[4] * t[5] * t[10], EXACT_REWRITE, None),
    ]

    chain = []
    previous = None
    for step_no, (value, kind, dropped) in enumerate(lines):
        if previous is None:
            congruent = True
            verified = True
        else:
            congruent = (previous - value) % m == 0
            if kind == EXACT_REWRITE:
                verified = value == previous
            else:
                verified = previous - value == dropped and dropped % m == 0
        chain.append(
            ChainStep(
                step_no=step_no,
                kind=kind,
                value=value,
                congruent_to_prev=congruent,
                verified=verified,
                dropped_multiple=dropped,
            )
        )
        previous = value

    numerator_residue = numerator % m
    valid = (
        precondition_gcd == 1
        and all(identity.holds for identity in shifts)
        and all(step.verified for step in chain)
        and chain[-1].value % m == 0
        and numerator_residue == 0
    )
    certificate = DivisibilityCertificate(
        index=n,
        modulus=m,
        precondition_gcd=precondition_gcd,
        shifts=shifts,
        chain=tuple(chain),
        numerator_residue=numerator_residue,
        valid=valid,
    )
    if strict and not valid:
        raise InvalidChainError(f"certificate at n = {n} is invalid")
    return certificate


def verify_integrality(buffer: SequenceBuffer, spec: SequenceSpec, n: int) -> bool:
    """True iff the certificate at n is valid and direct division agrees.

    The two routes must coincide: the chain establishes that a_{n-5}
    divides the bilinear numerator, and integer-mode division of the
    spec's own recurrence must succeed with the same quotient.
    """
    certificate = build_certificate(buffer, n)
    if not certificate.valid:
        return False
    k = spec.order
    if not buffer.has_range(n - k, n - 1):
        raise IndexOutOfRangeError(f"verify at n = {n} needs indices {n - k}..{n - 1}")
    denominator = as_integer(buffer.term(n - k))
    numerator = sum(
        as_integer(buffer.term(n - i)) * as_integer(buffer.term(n - j))
        for i, j in spec.summands
    )
    if denominator == 0 or numerator % denominator != 0:
        return False
    chain_numerator = as_integer(buffer.term(n - 1)) * as_integer(
        buffer.term(n - 4)
    ) + as_integer(buffer.term(n - 2)) * as_integer(buffer.term(n - 3))
    return numerator // denominator == chain_numerator // certificate.modulus


def certify_range(
    buffer: SequenceBuffer, start: int | None = None, stop: int | None = None
) -> VerificationReport:
    """Build certificates for every n in [start, stop) and aggregate the outcome."""
    if start is None:
        start = max(CERTIFICATE_START, buffer.start_index + 10)
    if stop is None:
        stop = buffer.next_index
    checked = 0
    for n in range(start, stop):
        certificate = build_certificate(buffer, n)
        checked += 1
        if not certificate.valid:
            return VerificationReport(
                check="certificate",
                start=start,
                stop=stop,
                checked=checked,
                passed=False,
                first_failure_index=n,
                first_failure_reason=_failure_reason(certificate),
            )
    return VerificationReport(
        check="certificate", start=start, stop=stop, checked=checked, passed=True
    )


def _failure_reason(certificate: DivisibilityCertificate) -> str:
    if certificate.precondition_gcd != 1:
        return f"precondition gcd = {certificate.precondition_gcd}"
    for identity in certificate.shifts:
        if not identity.holds:
            return f"shift identity at offset {identity.shift} fails"
    for step in certificate.chain:
        if not step.verified:
            return f"chain step {step.step_no} ({step.kind}) fails"
    return f"numerator residue {certificate.numerator_residue} != 0"
