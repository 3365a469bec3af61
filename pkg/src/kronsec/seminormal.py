"""Young's seminormal representation of S_n with exact rational matrices.

The basis is the set of standard tableaux of the given shape in last-letter
order (compare the rows holding n, then n-1, and so on). Each adjacent
transposition s_i acts on a basis vector v_T through the axial distance
d = content(i+1) - content(i) in T:

    same row of T      ->  v_T
    same column of T   -> -v_T
    otherwise          ->  (1/d) v_T + beta v_{sT},  sT = T with i, i+1 swapped,
                           beta = 1 when d > 0, else 1 - 1/d^2

so every entry is a Fraction and the defining S_n relations hold exactly,
not approximately. Traces of word products are therefore literal
character values and can be checked against the border-strip recursion.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import cache

from .errors import CapacityError, ConsistencyError, DomainError
from .partitions import Partition, dimension, format_partition, size, validate_partition
from .permutations import perm_of_word
from . import ratmat

DEFAULT_DIM_CAP = 2000

Tableau = tuple[tuple[int, ...], ...]


@cache
def standard_tableaux(lam: Partition) -> tuple[Tableau, ...]:
    """All standard Young tableaux of shape lam, in last-letter order."""
    n = size(lam)
    if n == 0:
        return ((),)
    rows = len(lam)
    grid = [[0] * lam[i] for i in range(rows)]
    heights = [0] * lam[0]  # filled cells per column
    lengths = [0] * rows  # filled cells per row
    found: list[Tableau] = []

    def place(v: int):
        if v > n:
            found.append(tuple(tuple(row) for row in grid))
            return
        for i in range(rows):
            j = lengths[i]
            if j >= lam[i]:
                continue
            if heights[j] != i:
                continue
            grid[i][j] = v
            lengths[i] += 1
            heights[j] += 1
            place(v + 1)
            lengths[i] -= 1
            heights[j] -= 1

    place(1)
    found.sort(key=_last_letter_key)
    return tuple(found)


def _last_letter_key(t: Tableau) -> tuple[int, ...]:
    n = sum(len(row) for row in t)
    row_of = {}
    for i, row in enumerate(t):
        for v in row:
            row_of[v] = i
    return tuple(row_of[v] for v in range(n, 0, -1))


def _positions(t: Tableau) -> dict[int, tuple[int, int]]:
    return {v: (i, j) for i, row in enumerate(t) for j, v in enumerate(row)}


def _swap_values(t: Tableau, a: int, b: int) -> Tableau:
    sub = {a: b, b: a}
    return tuple(tuple(sub.get(v, v) for v in row) for row in t)


@dataclass(frozen=True)
class SeminormalRep:
    """Exact matrices for the adjacent transpositions s_1 .. s_{n-1}."""

    shape: Partition
    n: int
    dim: int
    tableaux: tuple[Tableau, ...]
    generators: tuple[tuple[tuple[Fraction, ...], ...], ...]

    def generator(self, i: int) -> ratmat.Matrix:
        """Matrix of s_i = (i, i+1), 1-based, as mutable ratmat rows."""
        if not 1 <= i <= self.n - 1:
            raise DomainError(f"generator index must satisfy 1 <= i <= {self.n - 1}, got {i}")
        return [list(row) for row in self.generators[i - 1]]


def build_rep(lam: Partition, dim_cap: int = DEFAULT_DIM_CAP) -> SeminormalRep:
    """Construct the seminormal representation for shape lam."""
    lam = validate_partition(lam)
    n = size(lam)
    if n < 1:
        raise DomainError("seminormal representation needs a nonempty shape")
    dim = dimension(lam)
    if dim > dim_cap:
        raise CapacityError(
            f"shape {format_partition(lam)} has dimension {dim} > configured bound {dim_cap}"
        )
    tabs = standard_tableaux(lam)
    if len(tabs) != dim:
        raise ConsistencyError(
            f"tableau count {len(tabs)} disagrees with hook-length dimension {dim} "
            f"for {format_partition(lam)}"
        )
    index = {t: c for c, t in enumerate(tabs)}
    gens = []
    for i in range(1, n):
        cols: list[list[tuple[int, Fraction]]] = []
        for c, t in enumerate(tabs):
            pos = _positions(t)
            (ri, ci), (rj, cj) = pos[i], pos[i + 1]
            if ri == rj:
                cols.append([(c, Fraction(1))])
            elif ci == cj:
                cols.append([(c, Fraction(-1))])
            else:
                d = (cj - rj) - (ci - ri)
                a = Fraction(1, d)
                other = index[_swap_values(t, i, i + 1)]
                beta = Fraction(1) if d > 0 else 1 - a * a
                cols.append([(c, a), (other, beta)])
        matrix = [[Fraction(0)] * dim for _ in range(dim)]
        for c, entries in enumerate(cols):
            for r, v in entries:
                matrix[r][c] = v
        gens.append(tuple(tuple(row) for row in matrix))
    return SeminormalRep(shape=lam, n=n, dim=dim, tableaux=tabs, generators=tuple(gens))


def _sparse_rows(matrix) -> list[list[tuple[int, Fraction]]]:
    return [[(j, v) for j, v in enumerate(row) if v] for row in matrix]


def evaluate_word(rep: SeminormalRep, word) -> ratmat.Matrix:
    """Exact matrix of the word product s_{w1} s_{w2} ... (leftmost applied last).

    Generators have at most two entries per row, so the product is built by
    repeated sparse row combination instead of dense cubic multiplies.
    """
    for letter in word:
        if not 1 <= letter <= rep.n - 1:
            raise DomainError(
                f"word letter {letter} out of range 1..{rep.n - 1} for shape "
                f"{format_partition(rep.shape)}"
            )
    product = ratmat.identity(rep.dim)
    for letter in reversed(word):
        sparse = _sparse_rows(rep.generators[letter - 1])
        product = [
            _combine_rows(sparse[r], product, rep.dim) for r in range(rep.dim)
        ]
    return product


def _combine_rows(entries, matrix, dim) -> list[Fraction]:
    if len(entries) == 1:
        j, v = entries[0]
        return [v * x for x in matrix[j]]
    (j1, v1), (j2, v2) = entries
    row1, row2 = matrix[j1], matrix[j2]
    return [v1 * row1[k] + v2 * row2[k] for k in range(dim)]


def word_trace(rep: SeminormalRep, word) -> Fraction:
    """Trace of the word product; equals the character at the word's cycle type."""
    return ratmat.trace(evaluate_word(rep, word))


def word_cycle_type(rep: SeminormalRep, word) -> Partition:
    from .permutations import cycle_type

    return cycle_type(perm_of_word(rep.n, list(word)))


def check_relations(rep: SeminormalRep) -> dict[str, bool]:
    """Exact verification of the defining S_n relations on the generators."""
    n, dim = rep.n, rep.dim
    ident = ratmat.identity(dim)
    gens = [rep.generator(i) for i in range(1, n)]
    involution = all(ratmat.mat_eq(ratmat.mat_mul(g, g), ident) for g in gens)
    braid = True
    for i in range(n - 2):
        a, b = gens[i], gens[i + 1]
        lhs = ratmat.mat_mul(ratmat.mat_mul(a, b), a)
        rhs = ratmat.mat_mul(ratmat.mat_mul(b, a), b)
        if not ratmat.mat_eq(lhs, rhs):
            braid = False
            break
    commutation = True
    for i in range(n - 1):
        for j in range(i + 2, n - 1):
            if not ratmat.mat_eq(
                ratmat.mat_mul(gens[i], gens[j]), ratmat.mat_mul(gens[j], gens[i])
            ):
                commutation = False
                break
        if not commutation:
            break
    return {"involution": involution, "braid": braid, "commutation": commutation}


def spherical_relation_image(rep: SeminormalRep) -> ratmat.Matrix:
    """Image of the relation word 1, 2, ..., n-1, n-1, ..., 2, 1.

    In S_n the word telescopes to the identity, so the returned matrix must be
    exactly the identity; callers treat anything else as a broken build.
    """
    word = list(range(1, rep.n)) + list(range(rep.n - 1, 0, -1))
    return evaluate_word(rep, word)
