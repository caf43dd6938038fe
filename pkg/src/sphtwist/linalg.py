"""Dense exact linear algebra over the engine's scalar fields.

Matrices are lists of lists of scalars (Fraction or Fp).  Everything here is
plain Gaussian elimination; sizes stay small because complexes are kept
minimal, so there is no need for anything fancier.
"""


def mat_rank(rows):
    """Rank of a matrix, destructively computed on a copy."""
    if not rows:
        return 0
    m = [list(r) for r in rows]
    ncols = len(m[0])
    rank = 0
    row = 0
    for col in range(ncols):
        pivot = None
        for r in range(row, len(m)):
            if m[r][col]:
                pivot = r
                break
        if pivot is None:
            continue
        m[row], m[pivot] = m[pivot], m[row]
        pv = m[row][col]
        for r in range(row + 1, len(m)):
            if m[r][col]:
                factor = m[r][col] / pv
                for c in range(col, ncols):
                    m[r][c] = m[r][c] - factor * m[row][c]
        rank += 1
        row += 1
        if row == len(m):
            break
    return rank


def nullspace(rows, ncols, one):
    """Basis of the right kernel of a matrix with ``ncols`` columns.

    ``rows`` may be empty (kernel is everything).  ``one`` is the field's
    multiplicative unit, used to build the basis vectors.
    """
    zero = one - one
    m = [list(r) for r in rows]
    pivots = []  # (row, col)
    row = 0
    for col in range(ncols):
        pivot = None
        for r in range(row, len(m)):
            if m[r][col]:
                pivot = r
                break
        if pivot is None:
            continue
        m[row], m[pivot] = m[pivot], m[row]
        pv = m[row][col]
        m[row] = [x / pv for x in m[row]]
        for r in range(len(m)):
            if r != row and m[r][col]:
                factor = m[r][col]
                m[r] = [a - factor * b for a, b in zip(m[r], m[row])]
        pivots.append((row, col))
        row += 1
        if row == len(m):
            break
    pivot_cols = {c for _, c in pivots}
    free_cols = [c for c in range(ncols) if c not in pivot_cols]
    basis = []
    for fc in free_cols:
        v = [zero] * ncols
        v[fc] = one
        for r, c in pivots:
            v[c] = -m[r][fc]
        basis.append(v)
    return basis


def mat_det(rows):
    """Determinant of a square scalar matrix (returns a field scalar)."""
    n = len(rows)
    if n == 0:
        return None  # caller treats the empty matrix as invertible
    m = [list(r) for r in rows]
    det = m[0][0] - m[0][0]  # zero of the field
    det = det + 1
    for col in range(n):
        pivot = None
        for r in range(col, n):
            if m[r][col]:
                pivot = r
                break
        if pivot is None:
            return det * 0
        if pivot != col:
            m[col], m[pivot] = m[pivot], m[col]
            det = -det
        pv = m[col][col]
        det = det * pv
        for r in range(col + 1, n):
            if m[r][col]:
                factor = m[r][col] / pv
                for c in range(col, n):
                    m[r][c] = m[r][c] - factor * m[col][c]
    return det
