"""Row reduction over prime fields. Vectors are tuples of residues."""
from __future__ import annotations

__all__ = ["is_prime", "rref", "rank_mod_p", "nullspace", "span_intersection"]


def is_prime(p: int) -> bool:
    if p < 2:
        return False
    d = 2
    while d * d <= p:
        if p % d == 0:
            return False
        d += 1
    return True


def rref(vectors, p: int, width: int | None = None) -> tuple:
    """Reduced row echelon basis of the span of the given vectors.

    The result is unique for the subspace, which makes it usable as a key.
    """
    rows = [list(v) for v in vectors]
    if width is None:
        width = len(rows[0]) if rows else 0
    out = []
    for col in range(width):
        pivot = next((i for i, r in enumerate(rows) if r[col] % p), None)
        if pivot is None:
            continue
        row = rows.pop(pivot)
        inv = pow(row[col], p - 2, p)
        row = [(x * inv) % p for x in row]
        for other in rows:
            f = other[col] % p
            if f:
                for j in range(width):
                    other[j] = (other[j] - f * row[j]) % p
        for other in out:
            f = other[col]
            if f:
                for j in range(width):
                    other[j] = (other[j] - f * row[j]) % p
        out.append(row)
    return tuple(tuple(r) for r in out)


def rank_mod_p(vectors, p: int) -> int:
    """Rank of a list of equal-length vectors."""
    rows = [list(v) for v in vectors]
    if not rows:
        return 0
    width = len(rows[0])
    rank = 0
    for col in range(width):
        pivot = next((i for i in range(rank, len(rows)) if rows[i][col] % p), None)
        if pivot is None:
            continue
        rows[rank], rows[pivot] = rows[pivot], rows[rank]
        inv = pow(rows[rank][col], p - 2, p)
        prow = [(x * inv) % p for x in rows[rank]]
        rows[rank] = prow
        for i in range(rank + 1, len(rows)):
            f = rows[i][col] % p
            if f:
                rows[i] = [(a - f * b) % p for a, b in zip(rows[i], prow)]
        rank += 1
        if rank == len(rows):
            break
    return rank


def nullspace(columns, p: int) -> list:
    """Basis of {c : sum_i c_i * columns[i] = 0}."""
    k = len(columns)
    if k == 0:
        return []
    height = len(columns[0])
    # rows of the matrix whose columns are the given vectors
    matrix = [[columns[j][i] % p for j in range(k)] for i in range(height)]
    reduced = rref(matrix, p, width=k)
    pivots = []
    for row in reduced:
        pivots.append(next(j for j, x in enumerate(row) if x))
    free = [j for j in range(k) if j not in pivots]
    basis = []
    for f in free:
        vec = [0] * k
        vec[f] = 1
        for row, pc in zip(reduced, pivots):
            vec[pc] = (-row[f]) % p
        basis.append(tuple(vec))
    return basis


def span_intersection(xs, ws, p: int, height: int) -> tuple:
    """Canonical basis of span(xs) ∩ span(ws).

    Solves sum a_i x_i = sum b_j w_j through the kernel of [xs | -ws] and
    maps each kernel vector back to sum a_i x_i.
    """
    if not xs or not ws:
        return ()
    cols = list(xs) + [tuple((-c) % p for c in w) for w in ws]
    vectors = []
    for coeffs in nullspace(cols, p):
        v = [0] * height
        for a, x in zip(coeffs, xs):
            if a:
                for i in range(height):
                    v[i] = (v[i] + a * x[i]) % p
        vectors.append(v)
    return rref(vectors, p, width=height)
