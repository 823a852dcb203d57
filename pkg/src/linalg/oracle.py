"""Brute-force dense oracle.

Plain Fraction Gaussian elimination on list-of-lists matrices, built
straight from the raw boundary and signed-permutation data. Nothing here
touches sympy or the sparse pipeline, so agreement between the two is a
real cross-check. Only meant for small complexes.
"""

from fractions import Fraction
from typing import List, Sequence, Tuple

Dense = List[List[Fraction]]


def _copy(rows: Sequence[Sequence[Fraction]]) -> Dense:
    return [[Fraction(x) for x in row] for row in rows]


def row_echelon(m: Dense) -> List[int]:
    """Forward elimination in place; returns the pivot columns."""
    n_rows = len(m)
    if n_rows == 0:
        return []
    n_cols = len(m[0])
    pivots = []
    piv_r = 0
    for piv_c in range(n_cols):
        if piv_r == n_rows:
            break
        for i_row in range(piv_r, n_rows):
            if m[i_row][piv_c] != 0:
                break
        else:
            continue
        if i_row != piv_r:
            m[piv_r], m[i_row] = m[i_row], m[piv_r]
        fp = m[piv_r][piv_c]
        for r in range(piv_r + 1, n_rows):
            fr = m[r][piv_c]
            if fr == 0:
                continue
            frp = fr / fp
            for c in range(piv_c, n_cols):
                m[r][c] -= m[piv_r][c] * frp
        pivots.append(piv_c)
        piv_r += 1
    return pivots


def oracle_rank(rows: Sequence[Sequence[Fraction]]) -> int:
    if not rows or not rows[0]:
        return 0
    return len(row_echelon(_copy(rows)))


def columns_rank(vectors: Sequence[Sequence[Fraction]]) -> int:
    """Rank of a family of vectors (rank is transpose-invariant)."""
    return oracle_rank(vectors)


def oracle_incidence(K, p: int) -> Dense:
    """Dense coboundary d_p as rows indexed by (p+1)-cells."""
    rows = [[Fraction(0)] * len(K.cells[p]) for _ in K.cells[p + 1]]
    for j, faces in enumerate(K.boundaries[p + 1]):
        for i, coefficient in faces:
            rows[j][i] += coefficient
    return rows


def _apply(rows: Dense, vector: Sequence[Fraction]) -> List[Fraction]:
    return [sum((a * b for a, b in zip(row, vector)), Fraction(0)) for row in rows]


def oracle_subcomplex_rank(K, p: int, spans: Sequence[Sequence[Sequence[Fraction]]]) -> int:
    """Cohomology rank of the subcomplex spanned degreewise by ``spans``.

    ``spans[q]`` is any spanning family (dependent vectors allowed) of the
    degree-q part; the subcomplex must be closed under d.
    """
    top = len(K.cells) - 1
    span_p = [list(v) for v in spans[p]]
    dim_p = columns_rank(span_p)
    image_p = 0
    if p < top and span_p:
        d = oracle_incidence(K, p)
        image_p = columns_rank([_apply(d, v) for v in span_p])
    image_prev = 0
    if p > 0 and spans[p - 1]:
        d = oracle_incidence(K, p - 1)
        image_prev = columns_rank([_apply(d, v) for v in spans[p - 1]])
    return dim_p - image_p - image_prev


def _unit(n: int, i: int) -> List[Fraction]:
    v = [Fraction(0)] * n
    v[i] = Fraction(1)
    return v


def oracle_betti(K) -> List[int]:
    spans = [[_unit(len(cells), i) for i in range(len(cells))] for cells in K.cells]
    return [oracle_subcomplex_rank(K, p, spans) for p in range(len(K.cells))]


def _image_of_unit(element, p: int, i: int, n: int) -> List[Fraction]:
    target, sign = element[p][i]
    v = [Fraction(0)] * n
    v[target] = Fraction(sign)
    return v


def orbit_sums(A, p: int) -> List[List[Fraction]]:
    """Σ_g g.e_i over every group element, for every cell i."""
    n = len(A.complex.cells[p])
    sums = []
    for i in range(n):
        total = [Fraction(0)] * n
        for element in A.group.elements:
            target, sign = element[p][i]
            total[target] += sign
        sums.append(total)
    return sums


def difference_vectors(A, p: int) -> List[List[Fraction]]:
    """e_i − g.e_i over every group element and cell."""
    n = len(A.complex.cells[p])
    vectors = []
    for element in A.group.elements:
        for i in range(n):
            v = [-x for x in _image_of_unit(element, p, i, n)]
            v[i] += 1
            vectors.append(v)
    return vectors


def oracle_subspace_dims(A, p: int) -> Tuple[int, int]:
    """(dim V^Γ, dim V_Γ) in degree p from orbit sums and all differences."""
    return columns_rank(orbit_sums(A, p)), columns_rank(difference_vectors(A, p))


def oracle_equivariant_ranks(A) -> Tuple[List[int], List[int]]:
    """Cohomology ranks of the invariant and coinvariant subcomplexes."""
    K = A.complex
    degrees = range(len(K.cells))
    invariant = [orbit_sums(A, p) for p in degrees]
    coinvariant = [difference_vectors(A, p) for p in degrees]
    return (
        [oracle_subcomplex_rank(K, p, invariant) for p in degrees],
        [oracle_subcomplex_rank(K, p, coinvariant) for p in degrees],
    )
