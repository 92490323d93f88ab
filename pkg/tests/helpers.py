"""Independent oracles used to freeze expected values.

Nothing here imports the package under test: the brute-force rational
recursion is the reference the engine is judged against.
"""

from __future__ import annotations

from fractions import Fraction


def fraction_terms(order, summands, count, initials=None):
    """Evaluate the recurrence a_n = (sum a_{n-i} a_{n-j}) / a_{n-k} with Fractions."""
    if initials is None:
        initials = [1] * order
    terms = [Fraction(v) for v in initials]
    while len(terms) < count:
        n = len(terms)
        numerator = sum(terms[n - i] * terms[n - j] for i, j in summands)
        terms.append(numerator / terms[n - order])
    return terms


def first_fractional_index(terms):
    """Index of the first term with denominator != 1, or None."""
    for index, value in enumerate(terms):
        if value.denominator != 1:
            return index
    return None


SOMOS_SUMMANDS = {
    4: ((1, 3), (2, 2)),
    5: ((1, 4), (2, 3)),
    6: ((1, 5), (2, 4), (3, 3)),
    7: ((1, 6), (2, 5), (3, 4)),
    8: ((1, 7), (2, 6), (3, 5), (4, 4)),
}
