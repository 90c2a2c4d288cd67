"""Slow, independent reference computations used only by the tests."""

from itertools import combinations
from math import gcd


def cofactor_det(rows):
    n = len(rows)
    if n == 0:
        return 1
    if n == 1:
        return rows[0][0]
    total = 0
    for j in range(n):
        if rows[0][j]:
            minor = [r[:j] + r[j + 1:] for r in rows[1:]]
            total += (-1) ** j * rows[0][j] * cofactor_det(minor)
    return total


def minor_gcd(rows, k):
    """gcd of all k x k minors (the k-th determinantal divisor)."""
    m, n = len(rows), len(rows[0]) if rows else 0
    g = 0
    for ri in combinations(range(m), k):
        for ci in combinations(range(n), k):
            g = gcd(g, cofactor_det([[rows[i][j] for j in ci] for i in ri]))
    return g


def max_nonzero_minor(rows):
    m, n = len(rows), len(rows[0]) if rows else 0
    return max((k for k in range(min(m, n) + 1) if minor_gcd(rows, k)), default=0)


def _ext_gcd(a, b):
    if b == 0:
        return (abs(a), 1 if a >= 0 else -1, 0)
    g, x, y = _ext_gcd(b, a % b)
    return g, y, x - (a // b) * y


def hermite_columns(rows):
    """Lower-triangular basis of the column lattice, by integer column operations.

    Assumes the lattice has full rank (finite cokernel). Returns columns
    h_0..h_{r-1} with h_i[i] > 0 and h_i[j] = 0 for j < i.
    """
    r = len(rows)
    cols = [[rows[i][j] for i in range(r)] for j in range(len(rows[0]))]
    basis = []
    for i in range(r):
        pivot = None
        rest = []
        for c in cols:
            if c[i] == 0:
                rest.append(c)
                continue
            if pivot is None:
                pivot = c
                continue
            g, x, y = _ext_gcd(pivot[i], c[i])
            a, b = pivot[i] // g, c[i] // g
            new_pivot = [x * p + y * q for p, q in zip(pivot, c)]
            other = [b * p - a * q for p, q in zip(pivot, c)]
            pivot = new_pivot
            rest.append(other)
        assert pivot is not None, "column lattice is not of full rank"
        if pivot[i] < 0:
            pivot = [-x for x in pivot]
        basis.append(pivot)
        cols = rest
    return basis


def coset_count(rows):
    """|Z^r / column lattice| by breadth-first enumeration of the quotient group."""
    r = len(rows)
    basis = hermite_columns(rows)

    def reduce(v):
        v = list(v)
        for i, h in enumerate(basis):
            q = v[i] // h[i]
            if q:
                v = [a - q * b for a, b in zip(v, h)]
        return tuple(v)

    zero = tuple([0] * r)
    seen = {zero}
    frontier = [zero]
    while frontier:
        nxt = []
        for v in frontier:
            for i in range(r):
                w = list(v)
                w[i] += 1
                w = reduce(w)
                if w not in seen:
                    seen.add(w)
                    nxt.append(w)
        frontier = nxt
    return len(seen)


def wedge(forms):
    """Product of 1-forms in the exterior algebra on m generators.

    Each form is a coefficient list of length m; the result maps sorted
    index tuples to integer coefficients.
    """
    acc = {(): 1}
    for form in forms:
        nxt = {}
        for idx, c in acc.items():
            for j, a in enumerate(form):
                if a == 0 or j in idx:
                    continue
                # moving e_j past the generators of larger index flips the sign
                sign = (-1) ** sum(1 for t in idx if t > j)
                key = tuple(sorted(idx + (j,)))
                nxt[key] = nxt.get(key, 0) + sign * c * a
        acc = {k: v for k, v in nxt.items() if v}
    return acc


def schubert_euler(r, k):
    """Euler characteristic of the real Grassmannian G_{r,k} from its Schubert cells.

    Cells are indexed by partitions in a k x (r-k) box, a cell of dimension
    d contributing (-1)^d; the signed count is the Gaussian binomial at q = -1,
    computed here by Pascal-type recursion.
    """
    table = [[0] * (k + 1) for _ in range(r + 1)]
    for n in range(r + 1):
        table[n][0] = 1
        for j in range(1, min(n, k) + 1):
            # [n, j] = [n-1, j-1] + q^j [n-1, j]
            table[n][j] = table[n - 1][j - 1] + (-1) ** j * table[n - 1][j]
    return table[r][k]


def partitions_in_box(rows, width):
    if rows == 0:
        yield ()
        return
    for first in range(width + 1):
        for rest in partitions_in_box(rows - 1, first):
            yield (first,) + rest
