"""Gini fairness score over active levels, and the pruning lower bound.

The score of a level multiset S is

    FS = sum_i sum_j |s_i - s_j| / (2 |S| sum_m s_m)

computed here in O(n log n) through the sorted form

    FS = (sum_i (2i - 1) s_(i)) / (|S| sum_j s_j) - 1

with s_(1) <= ... <= s_(n).  The identity holds with ties, not only under
the strict ordering usually quoted.  The score lies in [0, 1): it is 0 iff
all levels are equal, and never reaches 1 for a finite positive multiset.
"""

from .errors import IfcsError


def _check_levels(levels):
    if not levels:
        raise IfcsError("fairness score of an empty community is undefined")
    for s in levels:
        if s <= 0:
            raise IfcsError("active levels must be positive, got %r" % (s,))


def gini_double_sum(levels):
    """sum_i sum_j |s_i - s_j| over ordered pairs, via sorted prefix sums."""
    _check_levels(levels)
    ordered = sorted(levels)
    total = 0.0
    prefix = 0.0
    for i, s in enumerate(ordered):
        # s exceeds each of the i earlier values by (s - earlier)
        total += i * s - prefix
        prefix += s
    return 2.0 * total


def fairness_score_sorted(levels):
    """Fairness score of an already sorted (non-decreasing) level list."""
    _check_levels(levels)
    n = len(levels)
    weighted = 0
    total = 0
    prev = None
    for i, s in enumerate(levels, start=1):
        if prev is not None and s < prev:
            raise IfcsError("levels are not sorted non-decreasingly")
        prev = s
        weighted += (2 * i - 1) * s
        total += s
    # single division: integer levels give one exactly rounded quotient, so
    # communities with equal scores compare equal regardless of size
    return (weighted - n * total) / (n * total)


def fairness_score(levels):
    """Fairness score of an arbitrary positive level multiset."""
    _check_levels(levels)
    return fairness_score_sorted(sorted(levels))


def _median(sorted_values):
    n = len(sorted_values)
    mid = n // 2
    if n % 2:
        return float(sorted_values[mid])
    return (sorted_values[mid - 1] + sorted_values[mid]) / 2.0


def lower_bound(observed, candidate_size):
    """Lower bound on the fairness score of any community completing ``observed``.

    ``observed`` are the active levels of the members computed so far;
    ``candidate_size`` caps how many members the finished community may have.
    The bound pads the observation with medians (minimizing the numerator)
    while charging the denominator as if every unseen member sat at the
    observed maximum (maximizing it), so it never exceeds the score of any
    completion.
    """
    _check_levels(observed)
    if candidate_size < len(observed):
        raise IfcsError(
            "candidate size %d smaller than %d observed members"
            % (candidate_size, len(observed)))
    ordered = sorted(observed)
    n_free = candidate_size - len(ordered)
    padded = sorted(ordered + [_median(ordered)] * n_free)
    numerator = gini_double_sum(padded)
    denominator = 2.0 * candidate_size * (sum(ordered) + n_free * ordered[-1])
    return numerator / denominator
