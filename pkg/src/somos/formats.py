"""OEIS b-file parsing/emission and a stable JSON report schema.

All arithmetic payloads (term values, gcds, residues) are rendered as
decimal strings so no JSON consumer can lose precision; structural
fields (indices, counts, offsets) stay plain numbers.  Emission is
deterministic: fixed key order, no timestamps, byte-identical output for
identical inputs.  The schema carries a version field, currently "1".
"""

from __future__ import annotations

import json
import re
import sys
from dataclasses import dataclass
from fractions import Fraction

from .certificate import DivisibilityCertificate
from .coprime import CoprimeWindowReport, LemmaHarnessReport, VerificationReport
from .engine import FULL, NonIntegralEvent, SequenceBuffer, SequenceSpec, as_integer
from .errors import GapError, ParseError
from .scanner import BreakdownReport, NoncoprimeWitness

SCHEMA_VERSION = "1"

_INT_FIELD = re.compile(r"[+-]?[0-9]+")


def to_decimal(value: int) -> str:
    """Exact decimal string, bypassing the interpreter digit guard if needed."""
    try:
        return str(value)
    except ValueError:
        return _without_digit_guard(str, value)


def from_decimal(text: str) -> int:
    """Parse a decimal literal of any length."""
    try:
        return int(text)
    except ValueError:
        if _INT_FIELD.fullmatch(text.strip()):
            return _without_digit_guard(int, text)
        raise


def _without_digit_guard(convert, argument):
    # int<->str guards exist on 3.11+ only; this branch is unreachable below.
    limit = sys.get_int_max_str_digits()
    sys.set_int_max_str_digits(0)
    try:
        return convert(argument)
    finally:
        sys.set_int_max_str_digits(limit)


@dataclass(frozen=True)
class BFile:
    """Ordered (index, value) pairs with indices increasing by exactly 1."""

    entries: tuple[tuple[int, int], ...]

    def __post_init__(self):
        object.__setattr__(
            self, "entries", tuple((int(i), int(v)) for i, v in self.entries)
        )
        for (prev_index, _), (index, _) in zip(self.entries, self.entries[1:]):
            if index != prev_index + 1:
                raise ValueError(
                    f"entry indices must increase by 1 ({prev_index} then {index})"
                )


def parse_bfile(text: str) -> BFile:
    """Parse OEIS b-file text: '<index> <value>' lines, '#' comments, blanks."""
    entries = []
    expected = None
    for line_no, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        fields = line.split()
        if len(fields) != 2 or not all(_INT_FIELD.fullmatch(f) for f in fields):
            raise ParseError(line_no, f"expected '<index> <value>', got {raw!r}")
        index = int(fields[0])
        value = from_decimal(fields[1])
        if expected is not None and index != expected:
            raise GapError(line_no, expected, index)
        expected = index + 1
        entries.append((index, value))
    return BFile(tuple(entries))


def emit_bfile(source: SequenceBuffer | BFile) -> str:
    """Render '<index> <value>\\n' lines; exact round trip with parse_bfile."""
    if isinstance(source, BFile):
        items = source.entries
    else:
        if source.retention != FULL:
            raise ValueError("b-file export requires a full-retention buffer")
        items = source.items()
    return "".join(f"{index} {to_decimal(as_integer(value))}\n" for index, value in items)


def buffer_from_bfile(bfile: BFile) -> SequenceBuffer:
    """Load b-file entries into a full-retention buffer at their own indices."""
    start = bfile.entries[0][0] if bfile.entries else 0
    return SequenceBuffer([value for _, value in bfile.entries], start_index=start)


def term_text(value) -> str:
    """Decimal rendering of a term; exact fractions render as 'p/q'."""
    if isinstance(value, Fraction) and value.denominator != 1:
        return f"{to_decimal(value.numerator)}/{to_decimal(value.denominator)}"
    return to_decimal(as_integer(value))


def emit_terms_json(buffer: SequenceBuffer, name: str | None = None) -> str:
    """Versioned JSON list of a buffer's terms as exact decimal strings."""
    payload = {
        "schema_version": SCHEMA_VERSION,
        "kind": "terms",
        "name": name,
        "start_index": buffer.start_index,
        "terms": [term_text(value) for _, value in buffer.items()],
    }
    return json.dumps(payload, indent=2)


def emit_report_json(report) -> str:
    """Serialize any report/certificate type to its versioned JSON form."""
    return json.dumps(_payload(report), indent=2)


def _payload(report) -> dict:
    if isinstance(report, DivisibilityCertificate):
        return _certificate_payload(report)
    if isinstance(report, CoprimeWindowReport):
        return {
            "schema_version": SCHEMA_VERSION,
            "kind": "coprime_window_report",
            "index": report.index,
            "depth": report.depth,
            "gcds": [to_decimal(g) for g in report.gcds],
            "pass": report.passed,
        }
    if isinstance(report, VerificationReport):
        return {
            "schema_version": SCHEMA_VERSION,
            "kind": "verification_report",
            "check": report.check,
            "start": report.start,
            "stop": report.stop,
            "checked": report.checked,
            "passed": report.passed,
            "first_failure_index": report.first_failure_index,
            "first_failure_reason": report.first_failure_reason,
        }
    if isinstance(report, BreakdownReport):
        return {
            "schema_version": SCHEMA_VERSION,
            "kind": "breakdown_report",
            "spec": _spec_payload(report.spec),
            "terms_checked": report.terms_checked,
            "depth": report.depth,
            "first_nonintegral": _event_payload(report.first_nonintegral),
            "first_noncoprime": _witness_payload(report.first_noncoprime),
        }
    if isinstance(report, LemmaHarnessReport):
        return {
            "schema_version": SCHEMA_VERSION,
            "kind": "lemma_harness_report",
            "seed": report.seed,
            "samples": report.samples,
            "bound": report.bound,
            "passed": report.passed,
            "results": [
                {
                    "lemma": r.lemma,
                    "samples": r.samples,
                    "failures": r.failures,
                    "first_counterexample": None
                    if r.first_counterexample is None
                    else [to_decimal(v) for v in r.first_counterexample],
                }
                for r in report.results
            ],
        }
    raise TypeError(f"no JSON schema for {type(report).__name__}")


def _certificate_payload(certificate: DivisibilityCertificate) -> dict:
    return {
        "schema_version": SCHEMA_VERSION,
        "kind": "divisibility_certificate",
        "index": certificate.index,
        "modulus": to_decimal(certificate.modulus),
        "precondition_gcd": to_decimal(certificate.precondition_gcd),
        "shifts": [
            {
                "shift": s.shift,
                "lhs": to_decimal(s.lhs),
                "rhs": to_decimal(s.rhs),
                "holds": s.holds,
            }
            for s in certificate.shifts
        ],
        "chain": [
            {
                "step": step.step_no,
                "kind": step.kind,
                "value": to_decimal(step.value),
                "congruent_to_prev": step.congruent_to_prev,
                "verified": step.verified,
                "dropped_multiple": None
                if step.dropped_multiple is None
                else to_decimal(step.dropped_multiple),
            }
            for step in certificate.chain
        ],
        "numerator_residue": to_decimal(certificate.numerator_residue),
        "valid": certificate.valid,
    }


def _spec_payload(spec: SequenceSpec) -> dict:
    return {
        "name": spec.name,
        "order": spec.order,
        "summands": [list(pair) for pair in spec.summands],
        "initials": [to_decimal(v) for v in spec.initials],
    }


def _event_payload(event: NonIntegralEvent | None):
    if event is None:
        return None
    return {
        "index": event.index,
        "numerator": to_decimal(event.numerator),
        "denominator": to_decimal(event.denominator),
        "remainder": to_decimal(event.remainder),
    }


def _witness_payload(witness: NoncoprimeWitness | None):
    if witness is None:
        return None
    return {"index": witness.index, "offset": witness.offset, "gcd": to_decimal(witness.gcd)}
