"""Gcd toolkit, executable coprimality facts, and the predecessor-window verifier.

The three gcd facts checked here (and the modular cancellation fact in
the same harness) are proven, so any sampled counterexample signals an
implementation bug rather than new mathematics:

    product:      gcd(a,x) = gcd(a,y) = 1  <=>  gcd(a, x*y) = 1
    pairwise:     all four of gcd(a,x), gcd(a,y), gcd(b,x), gcd(b,y) = 1
                  <=>  gcd(a*b, x*y) = 1
    shift:        gcd(x+y, y) = gcd(x, y)  (implies the coprime biconditional)
    cancellation: for gcd(b,z) = 1,  z | y*b  <=>  z | y
"""

from __future__ import annotations

import math
import random
from dataclasses import dataclass

from .engine import SequenceBuffer, as_integer
from .errors import IndexOutOfRangeError

LEMMA_NAMES = ("product", "pairwise", "shift", "cancellation")

DEFAULT_SAMPLES = 10_000
DEFAULT_BOUND = 10**6


def gcd(a: int, b: int) -> int:
    """Greatest common divisor, always nonnegative.

    gcd(0, b) == |b| and gcd(0, 0) == 0; negative inputs are allowed.
    """
    return math.gcd(a, b)


def check_lemma_product(a: int, x: int, y: int, gcd_fn=gcd) -> bool:
    """Whether the product-closure biconditional holds for this triple."""
    both_coprime = gcd_fn(a, x) == 1 and gcd_fn(a, y) == 1
    return both_coprime == (gcd_fn(a, x * y) == 1)


def check_lemma_pairwise(a: int, b: int, x: int, y: int, gcd_fn=gcd) -> bool:
    """Whether the four-way pairwise biconditional holds for this quadruple."""
    all_pairs = (
        gcd_fn(a, x) == 1
        and gcd_fn(a, y) == 1
        and gcd_fn(b, x) == 1
        and gcd_fn(b, y) == 1
    )
    return all_pairs == (gcd_fn(a * b, x * y) == 1)


def check_lemma_shift(x: int, y: int, gcd_fn=gcd) -> bool:
    """Whether gcd(x+y, y) == gcd(x, y) exactly (the strong shift form)."""
    return gcd_fn(x + y, y) == gcd_fn(x, y)


def check_lemma_cancellation(y: int, b: int, z: int) -> bool:
    """Whether z | y*b <=> z | y; only meaningful when gcd(b, z) == 1."""
    return ((y * b) % z == 0) == (y % z == 0)


@dataclass(frozen=True)
class LemmaCheckResult:
    """Outcome of one randomized suite."""

    lemma: str
    samples: int
    failures: int
    first_counterexample: tuple[int, ...] | None


@dataclass(frozen=True)
class LemmaHarnessReport:
    seed: int
    samples: int
    bound: int
    results: tuple[LemmaCheckResult, ...]

    @property
    def passed(self) -> bool:
        return all(r.failures == 0 for r in self.results)


def run_lemma_harness(
    seed: int = 0,
    samples: int = DEFAULT_SAMPLES,
    bound: int = DEFAULT_BOUND,
    gcd_fn=gcd,
) -> LemmaHarnessReport:
    """Run all four randomized suites with a single seeded generator.

    gcd_fn exists so tests can inject a broken gcd and watch the
    counterexample counters move; production callers leave the default.
    """
    rng = random.Random(seed)
    results = []
    for lemma in LEMMA_NAMES:
        failures = 0
        first = None
        for _ in range(samples):
            if lemma == "product":
                args = (rng.randint(1, bound), rng.randint(1, bound), rng.randint(1, bound))
                ok = check_lemma_product(*args, gcd_fn=gcd_fn)
            elif lemma == "pairwise":
                args = tuple(rng.randint(1, bound) for _ in range(4))
                ok = check_lemma_pairwise(*args, gcd_fn=gcd_fn)
            elif lemma == "shift":
                args = (rng.randint(1, bound), rng.randint(1, bound))
                ok = check_lemma_shift(*args, gcd_fn=gcd_fn)
            else:
                y = rng.randint(1, bound)
                z = rng.randint(1, bound)
                b = rng.randint(1, bound)
                while gcd_fn(b, z) != 1:
                    b = rng.randint(1, bound)
                args = (y, b, z)
                ok = check_lemma_cancellation(y, b, z)
            if not ok:
                failures += 1
                if first is None:
                    first = args
        results.append(
            LemmaCheckResult(
                lemma=lemma, samples=samples, failures=failures, first_counterexample=first
            )
        )
    return LemmaHarnessReport(seed=seed, samples=samples, bound=bound, results=tuple(results))


@dataclass(frozen=True)
class CoprimeWindowReport:
    """gcd of a term with each of its depth immediate predecessors."""

    index: int
    depth: int
    gcds: tuple[int, ...]
    passed: bool


def verify_coprime_window(buffer: SequenceBuffer, n: int, depth: int = 4) -> CoprimeWindowReport:
    """Report gcd(a_n, a_{n-i}) for i = 1..depth; passes when all equal 1."""
    if depth not in (1, 2, 3, 4):
        raise ValueError(f"depth must be in 1..4, got {depth}")
    if not buffer.has_range(n - depth, n):
        raise IndexOutOfRangeError(
            f"window {n - depth}..{n} not covered by buffer "
            f"[{buffer.start_index}, {buffer.next_index})"
        )
    value = as_integer(buffer.term(n))
    gcds = tuple(gcd(value, as_integer(buffer.term(n - i))) for i in range(1, depth + 1))
    return CoprimeWindowReport(index=n, depth=depth, gcds=gcds, passed=all(g == 1 for g in gcds))


@dataclass(frozen=True)
class VerificationReport:
    """Aggregate pass/fail over an index range, with the first failure witness."""

    check: str
    start: int
    stop: int
    checked: int
    passed: bool
    first_failure_index: int | None = None
    first_failure_reason: str | None = None


def verify_coprime_range(
    buffer: SequenceBuffer,
    depth: int = 4,
    start: int | None = None,
    stop: int | None = None,
) -> VerificationReport:
    """Run coprime windows for every n in [start, stop); default full coverage."""
    if start is None:
        start = max(depth, buffer.start_index + depth)
    if stop is None:
        stop = buffer.next_index
    checked = 0
    for n in range(start, stop):
        report = verify_coprime_window(buffer, n, depth)
        checked += 1
        if not report.passed:
            offender = next(i + 1 for i, g in enumerate(report.gcds) if g != 1)
            return VerificationReport(
                check="coprime-window",
                start=start,
                stop=stop,
                checked=checked,
                passed=False,
                first_failure_index=n,
                first_failure_reason=(
                    f"gcd(a_{n}, a_{n - offender}) = {report.gcds[offender - 1]}"
                ),
            )
    return VerificationReport(
        check="coprime-window", start=start, stop=stop, checked=checked, passed=True
    )
