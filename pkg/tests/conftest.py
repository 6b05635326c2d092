"""Shared brute-force oracles, deliberately independent of the library's
DP code paths: literal multiset enumeration and literal signed sums."""

from collections import Counter
from itertools import combinations_with_replacement

from ospkostka.oddroots import odd_positive_roots


def brute_force_partition_table(data, dmax):
    """Counter {(BiWeight, d): count} by enumerating every multiset of at
    most dmax positive odd roots.  O(|roots|^d); test use only."""
    table = Counter()
    roots = odd_positive_roots(data)
    for d in range(dmax + 1):
        for combo in combinations_with_replacement(roots, d):
            total = data.zero()
            for beta in combo:
                total = total + beta
            table[(total, d)] += 1
    return table


def brute_force_l_coeffs(data, alpha, dmax):
    """Coefficients of L_alpha up to degree dmax, via the literal table."""
    table = brute_force_partition_table(data, dmax)
    return tuple(table.get((alpha, d), 0) for d in range(dmax + 1))
