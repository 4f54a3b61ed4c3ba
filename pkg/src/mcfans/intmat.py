"""Small exact linear algebra helpers (lists of lists, int/Fraction entries).

Everything here is exact: integer matrices stay integer where possible and
anything that needs division goes through fractions.Fraction.
"""

from fractions import Fraction


# --- constructors / basics ---

def identity(n):
    return [[1 if i == j else 0 for j in range(n)] for i in range(n)]


def zeros(rows, cols):
    return [[0] * cols for _ in range(rows)]


def transpose(a):
    return [list(col) for col in zip(*a)] if a else []


def copy_matrix(a):
    return [list(row) for row in a]


def mat_eq(a, b):
    if len(a) != len(b):
        return False
    return all(len(ra) == len(rb) and all(x == y for x, y in zip(ra, rb))
               for ra, rb in zip(a, b))


def mat_mul(a, b):
    """Matrix product a*b."""
    if a and b and len(a[0]) != len(b):
        raise ValueError(f"shape mismatch: {len(a)}x{len(a[0])} * {len(b)}x{len(b[0])}")
    bt = transpose(b)
    return [[sum(x * y for x, y in zip(row, col)) for col in bt] for row in a]


def mat_vec(a, v):
    """Matrix-vector product a*v."""
    if a and len(a[0]) != len(v):
        raise ValueError("shape mismatch in mat_vec")
    return [sum(x * y for x, y in zip(row, v)) for row in a]


def vec_dot(u, v):
    if len(u) != len(v):
        raise ValueError("length mismatch in vec_dot")
    return sum(x * y for x, y in zip(u, v))


def scale_rows(d, a):
    """diag(d) * a."""
    return [[d[i] * x for x in row] for i, row in enumerate(a)]


def scale_cols(a, d):
    """a * diag(d)."""
    return [[x * d[j] for j, x in enumerate(row)] for row in a]


def as_int_matrix(a):
    """Convert to plain ints, raising if any entry is not integral."""
    out = []
    for row in a:
        new = []
        for x in row:
            f = Fraction(x)
            if f.denominator != 1:
                raise ValueError(f"non-integral entry {x}")
            new.append(int(f))
        out.append(new)
    return out


# --- elimination-based routines ---

def det(a):
    """Determinant via fraction-free Bareiss; integer input gives integer output."""
    n = len(a)
    if n == 0:
        return 1
    m = copy_matrix(a)
    sign = 1
    prev = 1
    for k in range(n - 1):
        if m[k][k] == 0:
            for i in range(k + 1, n):
                if m[i][k] != 0:
                    m[k], m[i] = m[i], m[k]
                    sign = -sign
                    break
            else:
                return 0
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                m[i][j] = (m[i][j] * m[k][k] - m[i][k] * m[k][j]) // prev \
                    if isinstance(m[i][j], int) and isinstance(prev, int) \
                    else (m[i][j] * m[k][k] - m[i][k] * m[k][j]) / prev
            m[i][k] = 0
        prev = m[k][k]
    return sign * m[n - 1][n - 1]


def rref(a):
    """Reduced row echelon form over Fraction. Returns (matrix, pivot_cols)."""
    m = [[Fraction(x) for x in row] for row in a]
    rows = len(m)
    cols = len(m[0]) if rows else 0
    pivots = []
    r = 0
    for c in range(cols):
        pivot = next((i for i in range(r, rows) if m[i][c] != 0), None)
        if pivot is None:
            continue
        m[r], m[pivot] = m[pivot], m[r]
        pv = m[r][c]
        m[r] = [x / pv for x in m[r]]
        for i in range(rows):
            if i != r and m[i][c] != 0:
                f = m[i][c]
                m[i] = [x - f * y for x, y in zip(m[i], m[r])]
        pivots.append(c)
        r += 1
        if r == rows:
            break
    return m, pivots


def rank(a):
    if not a or not a[0]:
        return 0
    return len(rref(a)[1])


def nullspace(a):
    """Basis (list of Fraction vectors) of the right null space of a."""
    if not a:
        return []
    cols = len(a[0])
    m, pivots = rref(a)
    free = [c for c in range(cols) if c not in pivots]
    basis = []
    for fc in free:
        v = [Fraction(0)] * cols
        v[fc] = Fraction(1)
        for r, pc in enumerate(pivots):
            v[pc] = -m[r][fc]
        basis.append(v)
    return basis


def left_nullspace(a):
    """Basis of {y : y^T a = 0}."""
    return nullspace(transpose(a))


def inverse(a):
    """Exact inverse as a Fraction matrix; raises ValueError if singular."""
    n = len(a)
    aug = [[Fraction(x) for x in row] + [Fraction(1 if i == j else 0) for j in range(n)]
           for i, row in enumerate(a)]
    m, pivots = rref(aug)
    if pivots[:n] != list(range(n)):
        raise ValueError("matrix is singular")
    return [row[n:] for row in m[:n]]


def solve(a, b):
    """Solve a x = b exactly (a square nonsingular); returns Fraction vector."""
    inv = inverse(a)
    return mat_vec(inv, b)
