"""Shared oracles for the test suite.

Everything in this file is computed from first principles with the standard
library only: enumeration by brute force, the pentagonal-number recurrence,
permutation-character reduction, and direct differentiation. Tests freeze
package results against these independent routes, so nothing here may import
from the package's computational internals.
"""

from __future__ import annotations

import itertools
from fractions import Fraction
from functools import cache
from math import comb, factorial


def oracle_partition_count(n: int) -> int:
    """p(n) by Euler's pentagonal-number recurrence."""
    counts = [1]
    for m in range(1, n + 1):
        total = 0
        k = 1
        while True:
            g1 = k * (3 * k - 1) // 2
            g2 = k * (3 * k + 1) // 2
            if g1 > m and g2 > m:
                break
            sign = 1 if k % 2 else -1
            if g1 <= m:
                total += sign * counts[m - g1]
            if g2 <= m:
                total += sign * counts[m - g2]
            k += 1
        counts.append(total)
    return counts[n]


def oracle_partitions(n: int) -> set[tuple[int, ...]]:
    """All partitions of n, as the sorted compositions (brute force)."""
    if n == 0:
        return {()}
    found = set()
    for cuts in itertools.product([0, 1], repeat=n - 1):
        parts = []
        current = 1
        for cut in cuts:
            if cut:
                parts.append(current)
                current = 1
            else:
                current += 1
        parts.append(current)
        found.add(tuple(sorted(parts, reverse=True)))
    return found


@cache
def oracle_syt_count(lam: tuple[int, ...]) -> int:
    """Standard fillings counted by peeling corners, no hook formula."""
    if not lam:
        return 1
    total = 0
    for i, row in enumerate(lam):
        below = lam[i + 1] if i + 1 < len(lam) else 0
        if row > below:
            smaller = tuple(r - (j == i) for j, r in enumerate(lam))
            smaller = tuple(r for r in smaller if r)
            total += oracle_syt_count(smaller)
    return total


def oracle_cycle_type(perm: tuple[int, ...]) -> tuple[int, ...]:
    seen = [False] * len(perm)
    lengths = []
    for start in range(len(perm)):
        if seen[start]:
            continue
        length = 0
        j = start
        while not seen[j]:
            seen[j] = True
            j = perm[j]
            length += 1
        lengths.append(length)
    return tuple(sorted(lengths, reverse=True))


@cache
def oracle_cycle_census(n: int) -> dict[tuple[int, ...], int]:
    """Class sizes by counting every permutation of S_n (n <= 7 or so)."""
    census: dict[tuple[int, ...], int] = {}
    for perm in itertools.permutations(range(n)):
        t = oracle_cycle_type(perm)
        census[t] = census.get(t, 0) + 1
    return census


def _revlex(parts) -> list[tuple[int, ...]]:
    return sorted(parts, reverse=True)


def _perm_character_value(mu: tuple[int, ...], rho: tuple[int, ...]) -> int:
    """Permutation character of the Young subgroup S_mu at cycle type rho.

    Counts the assignments of the cycles of rho to the rows of mu filling
    each row exactly. This is the coefficient extraction from the product of
    power sums, done by explicit search.
    """

    def assign(cycles, loads):
        if not cycles:
            return 1
        first, rest = cycles[0], cycles[1:]
        total = 0
        for i, load in enumerate(loads):
            if load >= first:
                total += assign(rest, loads[:i] + (load - first,) + loads[i + 1:])
        return total

    return assign(tuple(rho), tuple(mu))


@cache
def oracle_character_table(n: int) -> dict[tuple[int, ...], dict[tuple[int, ...], int]]:
    """Irreducible characters of S_n by reducing permutation characters.

    Rows of the transition matrix from permutation to irreducible characters
    are unitriangular against reverse-lex order, so subtracting the already
    known irreducibles from each permutation character in that order leaves
    exactly the new irreducible.
    """
    census = oracle_cycle_census(n)
    classes = _revlex(census)
    order = factorial(n)

    def inner(a, b):
        total = sum(census[c] * a[c] * b[c] for c in classes)
        q = Fraction(total, order)
        assert q.denominator == 1
        return q.numerator

    table: dict[tuple[int, ...], dict[tuple[int, ...], int]] = {}
    for mu in _revlex(census):
        row = {rho: _perm_character_value(mu, rho) for rho in classes}
        for lam, known in table.items():
            m = inner(row, known)
            if m:
                row = {rho: row[rho] - m * known[rho] for rho in classes}
        assert inner(row, row) == 1
        table[mu] = row
    return table


def oracle_is_horizontal_strip(inner: tuple[int, ...], outer: tuple[int, ...]) -> bool:
    """outer/inner is a horizontal strip: containment plus no stacked cells."""
    if len(inner) > len(outer):
        return False
    padded = tuple(inner) + (0,) * (len(outer) - len(inner))
    for i, out_row in enumerate(outer):
        if out_row < padded[i]:
            return False
        if i + 1 < len(outer) and outer[i + 1] > padded[i]:
            return False
    return True


def oracle_apply_operator(q_coeffs, p_degree: int, p_coeffs) -> list[Fraction]:
    """q(d/dx, d/dy) applied to p, coefficient list of the result.

    q = sum_j q_coeffs[j] x^(k-j) y^j with k = len(q_coeffs) - 1, and
    p = sum_i p_coeffs[i] x^(n-i) y^i. Differentiation is carried out one
    monomial at a time with falling factorials.
    """
    k = len(q_coeffs) - 1
    n = p_degree

    def falling(x, m):
        out = 1
        for t in range(m):
            out *= x - t
        return out

    result = [Fraction(0)] * (n - k + 1)
    for j, b in enumerate(q_coeffs):
        if not b:
            continue
        for i, a in enumerate(p_coeffs):
            if not a:
                continue
            # d/dx^(k-j) d/dy^j on x^(n-i) y^i
            if n - i < k - j or i < j:
                continue
            c = Fraction(b) * Fraction(a) * falling(n - i, k - j) * falling(i, j)
            result[i - j] += c
    return result


def oracle_power_sum_coeffs(n: int, points, weights) -> list[Fraction]:
    """Coefficients of sum_i w_i (a_i x + b_i y)^n by direct expansion."""
    coeffs = [Fraction(0)] * (n + 1)
    for (a, b), w in zip(points, weights):
        for j in range(n + 1):
            coeffs[j] += Fraction(w) * comb(n, j) * Fraction(a) ** (n - j) * Fraction(b) ** j
    return coeffs
