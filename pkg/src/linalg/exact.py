"""Exact rational linear algebra on sparse sympy DomainMatrix objects.

All matrices are sparse DomainMatrix over QQ. Vectors are columns; a
"basis" is a matrix whose columns are linearly independent. Pivot
selection follows sympy's reduced row echelon form, which scans columns
left to right, so bases drawn from a spanning set keep the earliest
(smallest-index) generators.
"""

from fractions import Fraction
from typing import Dict, Iterable, List, Mapping, Optional, Sequence, Tuple, Union

from sympy import QQ
from sympy.polys.matrices import DomainMatrix

Scalar = Union[int, Fraction, str]
SparseVector = Dict[int, Fraction]


def to_qq(value):
    """Convert an int, Fraction, "p/q" string or QQ element to QQ."""
    if QQ.of_type(value):
        return value
    if isinstance(value, bool):
        raise TypeError("booleans are not rational scalars")
    if isinstance(value, int):
        return QQ(value)
    if isinstance(value, str):
        value = Fraction(value)
    if isinstance(value, Fraction):
        return QQ(value.numerator, value.denominator)
    raise TypeError(f"cannot convert {type(value).__name__} to a rational")


def to_fraction(value) -> Fraction:
    """Convert a QQ element (any ground type) to Fraction."""
    return Fraction(int(QQ.numer(value)), int(QQ.denom(value)))


def fraction_text(value) -> str:
    """Render a rational as "p" or "p/q"."""
    return str(to_fraction(to_qq(value)))


def _rows(M: DomainMatrix) -> Dict[int, Dict[int, object]]:
    """Underlying dict-of-dicts of a sparse matrix."""
    return M.to_sparse().rep


def matrix(shape: Tuple[int, int], entries: Mapping[Tuple[int, int], Scalar]) -> DomainMatrix:
    """Build a sparse matrix from (row, col) -> value entries, dropping zeros."""
    dod: Dict[int, Dict[int, object]] = {}
    for (i, j), value in entries.items():
        q = to_qq(value)
        if q:
            dod.setdefault(i, {})[j] = q
    return DomainMatrix(dod, shape, QQ)


def zeros(rows: int, cols: int) -> DomainMatrix:
    return DomainMatrix({}, (rows, cols), QQ)


def identity(n: int) -> DomainMatrix:
    return DomainMatrix({i: {i: QQ(1)} for i in range(n)}, (n, n), QQ)


def from_columns(columns: Sequence[Mapping[int, Scalar]], nrows: int) -> DomainMatrix:
    """Matrix whose k-th column is the k-th sparse vector."""
    dod: Dict[int, Dict[int, object]] = {}
    for k, column in enumerate(columns):
        for i, value in column.items():
            q = to_qq(value)
            if q:
                dod.setdefault(i, {})[k] = q
    return DomainMatrix(dod, (nrows, len(columns)), QQ)


def columns(M: DomainMatrix) -> List[Dict[int, object]]:
    """Sparse columns of M as dicts of QQ entries."""
    cols: List[Dict[int, object]] = [{} for _ in range(M.shape[1])]
    for i, row in _rows(M).items():
        for j, value in row.items():
            cols[j][i] = value
    return cols


def column(M: DomainMatrix, k: int) -> SparseVector:
    """k-th column of M as a sparse Fraction vector."""
    return {i: to_fraction(row[k]) for i, row in _rows(M).items() if k in row}


def entries(M: DomainMatrix) -> Dict[Tuple[int, int], Fraction]:
    return {
        (i, j): to_fraction(value)
        for i, row in _rows(M).items()
        for j, value in row.items()
    }


def to_lists(M: DomainMatrix) -> List[List[Fraction]]:
    """Dense row lists of Fractions (for reports and small matrices)."""
    rows, cols = M.shape
    dense = [[Fraction(0)] * cols for _ in range(rows)]
    for (i, j), value in entries(M).items():
        dense[i][j] = value
    return dense


def is_zero(M: DomainMatrix) -> bool:
    return not any(_rows(M).values())


def hstack(mats: Sequence[DomainMatrix], nrows: Optional[int] = None) -> DomainMatrix:
    """Concatenate columns; ``nrows`` is needed when ``mats`` is empty."""
    if nrows is None:
        if not mats:
            raise ValueError("hstack of no matrices needs nrows")
        nrows = mats[0].shape[0]
    dod: Dict[int, Dict[int, object]] = {}
    offset = 0
    for M in mats:
        if M.shape[0] != nrows:
            raise ValueError(f"row mismatch in hstack: {M.shape[0]} != {nrows}")
        for i, row in _rows(M).items():
            target = dod.setdefault(i, {})
            for j, value in row.items():
                target[j + offset] = value
        offset += M.shape[1]
    return DomainMatrix({i: r for i, r in dod.items() if r}, (nrows, offset), QQ)


def vstack(mats: Sequence[DomainMatrix], ncols: Optional[int] = None) -> DomainMatrix:
    """Concatenate rows; ``ncols`` is needed when ``mats`` is empty."""
    if ncols is None:
        if not mats:
            raise ValueError("vstack of no matrices needs ncols")
        ncols = mats[0].shape[1]
    dod: Dict[int, Dict[int, object]] = {}
    offset = 0
    for M in mats:
        if M.shape[1] != ncols:
            raise ValueError(f"column mismatch in vstack: {M.shape[1]} != {ncols}")
        for i, row in _rows(M).items():
            if row:
                dod[i + offset] = dict(row)
        offset += M.shape[0]
    return DomainMatrix(dod, (offset, ncols), QQ)


def matmul(A: DomainMatrix, B: DomainMatrix) -> DomainMatrix:
    if A.shape[1] != B.shape[0]:
        raise ValueError(f"shape mismatch in product: {A.shape} x {B.shape}")
    if 0 in A.shape or 0 in B.shape:
        return zeros(A.shape[0], B.shape[1])
    return A.to_sparse().matmul(B.to_sparse())


def add(A: DomainMatrix, B: DomainMatrix) -> DomainMatrix:
    return combine(A, B, QQ(1))


def subtract(A: DomainMatrix, B: DomainMatrix) -> DomainMatrix:
    return combine(A, B, QQ(-1))


def combine(A: DomainMatrix, B: DomainMatrix, coefficient) -> DomainMatrix:
    """A + coefficient * B."""
    if A.shape != B.shape:
        raise ValueError(f"shape mismatch: {A.shape} vs {B.shape}")
    c = to_qq(coefficient)
    dod = {i: dict(row) for i, row in _rows(A).items()}
    for i, row in _rows(B).items():
        target = dod.setdefault(i, {})
        for j, value in row.items():
            total = target.get(j, QQ(0)) + c * value
            if total:
                target[j] = total
            else:
                target.pop(j, None)
    return DomainMatrix({i: r for i, r in dod.items() if r}, A.shape, QQ)


def scale(M: DomainMatrix, coefficient) -> DomainMatrix:
    c = to_qq(coefficient)
    if not c:
        return zeros(*M.shape)
    dod = {i: {j: c * v for j, v in row.items()} for i, row in _rows(M).items() if row}
    return DomainMatrix(dod, M.shape, QQ)


def transpose(M: DomainMatrix) -> DomainMatrix:
    rows, cols = M.shape
    dod: Dict[int, Dict[int, object]] = {}
    for i, row in _rows(M).items():
        for j, value in row.items():
            dod.setdefault(j, {})[i] = value
    return DomainMatrix(dod, (cols, rows), QQ)


def select_columns(M: DomainMatrix, keep: Sequence[int]) -> DomainMatrix:
    position = {j: k for k, j in enumerate(keep)}
    dod: Dict[int, Dict[int, object]] = {}
    for i, row in _rows(M).items():
        for j, value in row.items():
            if j in position:
                dod.setdefault(i, {})[position[j]] = value
    return DomainMatrix(dod, (M.shape[0], len(keep)), QQ)


def select_rows(M: DomainMatrix, keep: Sequence[int]) -> DomainMatrix:
    rows = _rows(M)
    dod = {k: dict(rows[i]) for k, i in enumerate(keep) if rows.get(i)}
    return DomainMatrix(dod, (len(keep), M.shape[1]), QQ)


def rref(M: DomainMatrix) -> Tuple[Dict[int, Dict[int, object]], Tuple[int, ...]]:
    """Reduced row echelon form as (rows dict, pivot columns)."""
    if 0 in M.shape or is_zero(M):
        return {}, ()
    reduced, pivots = M.to_sparse().rref()
    return _rows(reduced), tuple(pivots)


def rank(M: DomainMatrix) -> int:
    return len(rref(M)[1])


def pivot_columns(M: DomainMatrix) -> Tuple[int, ...]:
    return rref(M)[1]


def column_basis(M: DomainMatrix) -> DomainMatrix:
    """Independent columns of M spanning its column space (earliest first)."""
    return select_columns(M, pivot_columns(M))


def nullspace_basis(M: DomainMatrix) -> DomainMatrix:
    """Columns spanning ker M, one per free column of the echelon form."""
    ncols = M.shape[1]
    reduced, pivots = rref(M)
    pivot_set = set(pivots)
    free = [j for j in range(ncols) if j not in pivot_set]
    vectors = []
    for f in free:
        vector = {f: QQ(1)}
        for r, pc in enumerate(pivots):
            value = reduced.get(r, {}).get(f)
            if value:
                vector[pc] = -value
        vectors.append(vector)
    return from_columns(vectors, ncols)


def in_span(A: DomainMatrix, V: DomainMatrix) -> bool:
    """Every column of V lies in the column span of A."""
    if V.shape[1] == 0:
        return True
    return rank(hstack([A, V])) == rank(A)


def solve_many(A: DomainMatrix, B: DomainMatrix) -> Tuple[Optional[List[SparseVector]], Optional[int]]:
    """Solve A x_k = b_k for every column b_k of B.

    Returns (solutions, None) when all systems are consistent, otherwise
    (None, k) with k the first right-hand side outside the span of A.
    Free variables are set to zero, so solutions are deterministic.
    """
    ncols = A.shape[1]
    if B.shape[1] == 0:
        return [], None
    reduced, pivots = rref(hstack([A, B]))
    for pc in pivots:
        if pc >= ncols:
            return None, pc - ncols
    solutions: List[SparseVector] = []
    for k in range(B.shape[1]):
        x: SparseVector = {}
        for r, pc in enumerate(pivots):
            value = reduced.get(r, {}).get(ncols + k)
            if value:
                x[pc] = to_fraction(value)
        solutions.append(x)
    return solutions, None


def solve(A: DomainMatrix, b: Mapping[int, Scalar]) -> Optional[SparseVector]:
    """Solve A x = b, or None when b is outside the column span of A."""
    solutions, failed = solve_many(A, from_columns([b], A.shape[0]))
    if failed is not None:
        return None
    return solutions[0]


def apply(M: DomainMatrix, vector: Mapping[int, Scalar]) -> SparseVector:
    """M @ vector for a sparse vector."""
    result: Dict[int, object] = {}
    qv = {j: to_qq(v) for j, v in vector.items()}
    for i, row in _rows(M).items():
        total = QQ(0)
        for j, value in row.items():
            if j in qv:
                total += value * qv[j]
        if total:
            result[i] = total
    return {i: to_fraction(v) for i, v in result.items()}


def intersection_basis(A: DomainMatrix, B: DomainMatrix) -> DomainMatrix:
    """Basis of span(A) ∩ span(B), expressed in ambient coordinates."""
    nrows = A.shape[0]
    A = column_basis(A)
    B = column_basis(B)
    if A.shape[1] == 0 or B.shape[1] == 0:
        return zeros(nrows, 0)
    kernel = nullspace_basis(hstack([A, scale(B, -1)]))
    top = select_rows(kernel, list(range(A.shape[1])))
    return column_basis(matmul(A, top))


def sum_basis(mats: Iterable[DomainMatrix], nrows: int) -> DomainMatrix:
    return column_basis(hstack(list(mats), nrows))


def intersection_dim(A: DomainMatrix, B: DomainMatrix) -> int:
    return rank(A) + rank(B) - rank(hstack([A, B]))


def gram(left: DomainMatrix, weights: DomainMatrix, right: DomainMatrix) -> DomainMatrix:
    """Matrix of pairings left^T W right."""
    return matmul(transpose(left), matmul(weights, right))
