"""Slope-graded seed mutation.

A state carries the current exchange matrix B, the nonnegative column matrix
|C| and a slope (grade) per column, for a fixed level m.  mu_plus raises the
slope at one vertex and fires the neighbouring columns; mu_minus is its exact
inverse, reconstructed from the B-consistency invariant
B = D^{-1} C^T D B0 C  (C the signed matrix with columns (-1)^{s_j} |c_j|).
"""

from itertools import product

from . import seed as seedmod
from .errors import NotInvertibleHere, SignIncoherence, SlopeAtMax, SlopeAtMin
from .intmat import det, mat_mul, scale_rows, transpose


class GradedVector:
    """A nonnegative integer vector together with its slope."""

    __slots__ = ("coords", "grade")

    def __init__(self, coords, grade):
        self.coords = tuple(int(x) for x in coords)
        self.grade = int(grade)

    def __eq__(self, other):
        return (isinstance(other, GradedVector)
                and self.coords == other.coords and self.grade == other.grade)

    def __hash__(self):
        return hash((self.coords, self.grade))

    def __repr__(self):
        return f"GradedVector({self.coords}, slope={self.grade})"

    def to_json(self):
        return {"dim": list(self.coords), "slope": self.grade}


class MutationContext:
    """Fixed data of a mutation run: the quiver, B0 and the level m."""

    def __init__(self, quiver, m):
        if m < 1:
            raise ValueError(f"level m must be >= 1, got {m}")
        self.quiver = quiver
        self.m = int(m)
        self.B0 = quiver.exchange
        self.n = quiver.n

    def __repr__(self):
        return f"MutationContext({self.quiver!r}, m={self.m})"


class MutationState:
    """Immutable mutation state (B, |C|, slopes) in a context."""

    __slots__ = ("context", "B", "absC", "slopes")

    def __init__(self, context, B, absC, slopes):
        self.context = context
        self.B = tuple(tuple(int(x) for x in row) for row in B)
        self.absC = tuple(tuple(int(x) for x in row) for row in absC)
        self.slopes = tuple(int(s) for s in slopes)

    def _key(self):
        return (self.context.quiver.key(), self.context.m,
                self.B, self.absC, self.slopes)

    def __eq__(self, other):
        return isinstance(other, MutationState) and self._key() == other._key()

    def __hash__(self):
        return hash(self._key())

    def __repr__(self):
        return (f"MutationState(B={self.B}, absC={self.absC}, "
                f"slopes={self.slopes}, m={self.context.m})")

    def column(self, j):
        """|c_j| (0-based j) as a tuple."""
        return tuple(self.absC[i][j] for i in range(self.context.n))

    def graded_column(self, j):
        return GradedVector(self.column(j), self.slopes[j])


def initial_state(ctx):
    """All slopes 0, |C| = identity, B = B0."""
    n = ctx.n
    absC = tuple(tuple(1 if i == j else 0 for j in range(n)) for i in range(n))
    return MutationState(ctx, ctx.B0, absC, (0,) * n)


def signed_c_matrix(st):
    """C with columns (-1)^{s_j} |c_j|."""
    n = st.context.n
    return tuple(tuple((-1) ** st.slopes[j] * st.absC[i][j] for j in range(n))
                 for i in range(n))


def is_terminal(st):
    return all(s == st.context.m for s in st.slopes)


def _b_from_signed_c(ctx, c):
    """B = D^{-1} C^T D B0 C; raises ValueError if non-integral."""
    d = list(ctx.quiver.symmetrizer)
    db0 = scale_rows(d, [list(r) for r in ctx.B0])
    t = mat_mul(mat_mul([list(r) for r in transpose(c)], db0),
                [list(r) for r in c])
    out = []
    for i, row in enumerate(t):
        new = []
        for x in row:
            if x % d[i] != 0:
                raise ValueError("B-consistency product is not integral")
            new.append(x // d[i])
        out.append(tuple(new))
    return tuple(out)


def mu_plus(st, k):
    """Positive mutation at vertex k (1-based). Raises SlopeAtMax/SignIncoherence."""
    ctx = st.context
    n = ctx.n
    kk = k - 1
    if not 0 <= kk < n:
        raise ValueError(f"vertex index {k} out of range 1..{n}")
    sk = st.slopes[kk]
    if sk == ctx.m:
        raise SlopeAtMax(f"slope at vertex {k} already equals m = {ctx.m}")
    cols = [list(st.column(j)) for j in range(n)]
    slopes = list(st.slopes)
    ck = cols[kk]
    for j in range(n):
        if j == kk:
            continue
        b = st.B[kk][j]
        if b <= 0:
            continue
        if slopes[j] == sk:
            cols[j] = [x + b * y for x, y in zip(cols[j], ck)]
        elif slopes[j] == sk + 1:
            w = [x - b * y for x, y in zip(cols[j], ck)]
            if all(x >= 0 for x in w) and any(x > 0 for x in w):
                cols[j] = w
            elif all(x <= 0 for x in w) and any(x < 0 for x in w):
                cols[j] = [-x for x in w]
                slopes[j] = sk
            else:
                raise SignIncoherence(
                    f"column {j + 1} lost sign coherence while mutating at {k}")
    slopes[kk] = sk + 1
    abs_c = tuple(tuple(cols[j][i] for j in range(n)) for i in range(n))
    signed = tuple(tuple((-1) ** slopes[j] * abs_c[i][j] for j in range(n))
                   for i in range(n))
    new_b = _b_from_signed_c(ctx, signed)
    return MutationState(ctx, new_b, abs_c, slopes)


def mu_minus(st, k):
    """Inverse mutation at vertex k (1-based).

    The old B row at k is the negated current row (a consequence of the
    B-consistency invariant), which pins the preimage columns up to one
    two-way ambiguity per column; every candidate is round-tripped through
    mu_plus and the one that reproduces st is returned.
    """
    ctx = st.context
    n = ctx.n
    kk = k - 1
    if not 0 <= kk < n:
        raise ValueError(f"vertex index {k} out of range 1..{n}")
    if st.slopes[kk] == 0:
        raise SlopeAtMin(f"slope at vertex {k} is already 0")
    sigma = st.slopes[kk] - 1
    cols = [list(st.column(j)) for j in range(n)]
    ck = cols[kk]
    choices = []
    for j in range(n):
        if j == kk:
            choices.append([(ck, sigma)])
            continue
        sj = st.slopes[j]
        b = -st.B[kk][j]
        if b <= 0 or sj not in (sigma, sigma + 1):
            choices.append([(cols[j], sj)])
            continue
        if sj == sigma + 1:
            old = [x + b * y for x, y in zip(cols[j], ck)]
            choices.append([(old, sj)])
            continue
        # sj == sigma: the column either kept its slope (same-slope firing,
        # old = new - b*ck) or dropped to it (old = b*ck - new at slope sigma+1)
        cand = []
        w = [x - b * y for x, y in zip(cols[j], ck)]
        if all(x >= 0 for x in w) and any(x > 0 for x in w):
            cand.append((w, sigma))
        v = [-x for x in w]
        if all(x >= 0 for x in v) and any(x > 0 for x in v):
            cand.append((v, sigma + 1))
        if not cand:
            raise NotInvertibleHere(
                f"no admissible preimage column {j + 1} under mu_minus at {k}")
        choices.append(cand)
    for combo in product(*choices):
        abs_c = tuple(tuple(combo[j][0][i] for j in range(n)) for i in range(n))
        slopes = tuple(c[1] for c in combo)
        signed = tuple(tuple((-1) ** slopes[j] * abs_c[i][j] for j in range(n))
                       for i in range(n))
        try:
            old_b = _b_from_signed_c(ctx, signed)
        except ValueError:
            continue
        candidate = MutationState(ctx, old_b, abs_c, slopes)
        try:
            if mu_plus(candidate, k) == st:
                return candidate
        except (SlopeAtMax, SignIncoherence):
            continue
    raise NotInvertibleHere(f"no preimage of the state round-trips at vertex {k}")


# --- validation ---

class ValidationReport:
    def __init__(self, problems):
        self.problems = list(problems)

    @property
    def ok(self):
        return not self.problems

    def __bool__(self):
        return self.ok

    def __repr__(self):
        return f"ValidationReport(ok={self.ok}, problems={self.problems})"


def validate_state(st):
    """Structural checks: shapes, slope bounds, sign coherence, det C = +-1,
    B-consistency and skew-symmetrizability of the current B."""
    ctx = st.context
    n = ctx.n
    problems = []
    if len(st.B) != n or any(len(r) != n for r in st.B):
        problems.append("B has wrong shape")
    if len(st.absC) != n or any(len(r) != n for r in st.absC):
        problems.append("absC has wrong shape")
    if len(st.slopes) != n:
        problems.append("slopes has wrong length")
    if problems:
        return ValidationReport(problems)
    for j, s in enumerate(st.slopes):
        if not 0 <= s <= ctx.m:
            problems.append(f"slope {s} at column {j + 1} outside 0..{ctx.m}")
    for j in range(n):
        col = st.column(j)
        if any(x < 0 for x in col):
            problems.append(f"column {j + 1} has a negative entry")
        if all(x == 0 for x in col):
            problems.append(f"column {j + 1} is zero")
    if not problems:
        signed = signed_c_matrix(st)
        d = det([list(r) for r in signed])
        if d not in (1, -1):
            problems.append(f"det C = {d}, expected +-1")
        try:
            expect = _b_from_signed_c(ctx, signed)
        except ValueError:
            problems.append("B-consistency product is not integral")
        else:
            if expect != st.B:
                problems.append("B != D^-1 C^T D B0 C")
        db = scale_rows(list(ctx.quiver.symmetrizer), [list(r) for r in st.B])
        if any(db[i][j] != -db[j][i] for i in range(n) for j in range(n)):
            problems.append("D B is not skew-symmetric")
    return ValidationReport(problems)


# --- serialization ---

_PRESET_NAMES = {"a2", "a3", "a2tilde"}


def state_to_json(st):
    q = st.context.quiver
    if q.name and (q.name in _PRESET_NAMES or q.name.startswith("a_n:")):
        qjson = q.name
    else:
        qjson = q.to_json()
    return {"B": [list(r) for r in st.B],
            "absC": [list(r) for r in st.absC],
            "slopes": list(st.slopes),
            "m": st.context.m,
            "quiver": qjson}


def state_from_json(data, context=None):
    if context is None:
        qdata = data["quiver"]
        quiver = seedmod.preset(qdata) if isinstance(qdata, str) \
            else seedmod.ValuedQuiver.from_json(qdata)
        context = MutationContext(quiver, data["m"])
    elif context.m != data["m"]:
        raise ValueError("context level m disagrees with serialized state")
    return MutationState(context, data["B"], data["absC"], data["slopes"])
