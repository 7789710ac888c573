"""Exact sparse Gaussian elimination over a field of exact scalars."""
from .errors import SingularError


def solve(rows, rhs, ncols):
    """Solve ``A x = b`` for square ``A`` given as a list of sparse rows.

    ``rows[i]`` maps column index to a nonzero field element.  Pivoting takes
    the first remaining row with a nonzero entry in the current column.
    Raises SingularError when some column has no pivot.  Inputs are not
    modified.
    """
    rows = [dict(r) for r in rows]
    rhs = list(rhs)
    nrows = len(rows)
    if nrows != ncols:
        raise ValueError("solve expects a square system")
    pivot_of = [None] * ncols
    free = list(range(nrows))
    for col in range(ncols):
        prow = None
        for k, r in enumerate(free):
            if col in rows[r]:
                prow = free.pop(k)
                break
        if prow is None:
            raise SingularError(f"no pivot in column {col}")
        pivot_of[col] = prow
        prow_d = rows[prow]
        inv = prow_d[col].inverse()
        for c in prow_d:
            prow_d[c] = prow_d[c] * inv
        rhs[prow] = rhs[prow] * inv
        for r in free:
            row = rows[r]
            f = row.get(col)
            if f is None:
                continue
            for c, v in prow_d.items():
                if c in row:
                    nv = row[c] - f * v
                    if nv:
                        row[c] = nv
                    else:
                        del row[c]
                else:
                    row[c] = -(f * v)
            rhs[r] = rhs[r] - f * rhs[prow]
    # back substitution; pivot rows are unit upper triangular in pivot order
    x = [None] * ncols
    for col in range(ncols - 1, -1, -1):
        r = pivot_of[col]
        acc = rhs[r]
        for c, v in rows[r].items():
            if c != col:
                acc = acc - v * x[c]
        x[col] = acc
    return x


def first_dependency(vectors):
    """``(d, c)`` with ``v_d = sum_i c[i] v_i`` for the first dependent ``v_d``.

    ``vectors`` is an iterable of sparse dicts; vectors are reduced against
    an echelon basis built so far.  ``c`` is sparse (missing means zero).
    Returns ``None`` if the iterable is exhausted first.
    """
    basis = []  # (pivot column, reduced row, combination over earlier inputs)
    for d, v in enumerate(vectors):
        row = dict(v)
        comb = {}  # row == v_d + sum comb[i] v_i
        for col, brow, bcomb in basis:
            f = row.get(col)
            if f is None:
                continue
            for c, x in brow.items():
                nv = row[c] - f * x if c in row else -(f * x)
                if nv:
                    row[c] = nv
                else:
                    row.pop(c, None)
            for i, x in bcomb.items():
                nv = comb[i] - f * x if i in comb else -(f * x)
                if nv:
                    comb[i] = nv
                else:
                    comb.pop(i, None)
        if not row:
            return d, {i: -x for i, x in comb.items()}
        col = min(row)
        inv = row[col].inverse()
        row = {c: x * inv for c, x in row.items()}
        bcomb = {i: x * inv for i, x in comb.items()}
        bcomb[d] = inv
        basis.append((col, row, bcomb))
    return None
