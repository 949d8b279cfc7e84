"""Dense exact matrices and the linear-algebra kernel.

Matrices are immutable; entries are canonical raw values of the matrix's
ring.  Over fields the workhorse is row reduction (:func:`rref`); over the
integers it is the Smith normal form, which also decides solvability of
integer systems exactly.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, NamedTuple, Sequence

from .arith import ZZ, NotInvertible, Ring, ring_from_json


class ShapeError(ValueError):
    pass


class Matrix:
    __slots__ = ("ring", "nrows", "ncols", "rows", "_hash")

    def __init__(self, ring: Ring, rows: Iterable[Iterable], nrows: int | None = None,
                 ncols: int | None = None, _canonical: bool = False):
        if _canonical:
            rows = tuple(r if type(r) is tuple else tuple(r) for r in rows)
        else:
            c = ring.canonical
            rows = tuple(tuple(c(x) for x in row) for row in rows)
        if nrows is None:
            nrows = len(rows)
        if ncols is None:
            ncols = len(rows[0]) if rows else 0
        if len(rows) != nrows or any(len(r) != ncols for r in rows):
            raise ShapeError(f"ragged or mis-sized rows for a {nrows}x{ncols} matrix")
        self.ring = ring
        self.nrows = nrows
        self.ncols = ncols
        self.rows = rows
        self._hash = None

    # construction -----------------------------------------------------

    @classmethod
    def zeros(cls, ring, nrows, ncols):
        z = ring.zero()
        return cls(ring, [[z] * ncols for _ in range(nrows)], nrows, ncols, _canonical=True)

    @classmethod
    def identity(cls, ring, n):
        z, o = ring.zero(), ring.one()
        return cls(ring, [[o if i == j else z for j in range(n)] for i in range(n)], n, n,
                   _canonical=True)

    @classmethod
    def diagonal(cls, ring, diag, nrows=None, ncols=None):
        nrows = len(diag) if nrows is None else nrows
        ncols = len(diag) if ncols is None else ncols
        rows = [[0] * ncols for _ in range(nrows)]
        for i, d in enumerate(diag):
            rows[i][i] = d
        return cls(ring, rows, nrows, ncols)

    @classmethod
    def from_columns(cls, ring, cols, nrows):
        cols = [tuple(c) for c in cols]
        return cls(ring, [[col[i] for col in cols] for i in range(nrows)], nrows, len(cols))

    @classmethod
    def column_vector(cls, ring, values):
        values = list(values)
        return cls(ring, [[v] for v in values], len(values), 1)

    # basic access -----------------------------------------------------

    @property
    def shape(self):
        return self.nrows, self.ncols

    def __getitem__(self, ij):
        i, j = ij
        return self.rows[i][j]

    def col(self, j):
        return tuple(r[j] for r in self.rows)

    def columns(self):
        return [self.col(j) for j in range(self.ncols)]

    @property
    def T(self):
        return Matrix(self.ring, [self.col(j) for j in range(self.ncols)], self.ncols, self.nrows,
                      _canonical=True)

    def submatrix(self, rows: Sequence[int], cols: Sequence[int]):
        return Matrix(self.ring, [[self.rows[i][j] for j in cols] for i in rows], len(rows),
                      len(cols), _canonical=True)

    def block(self, r0, r1, c0, c1):
        return Matrix(self.ring, [row[c0:c1] for row in self.rows[r0:r1]], r1 - r0, c1 - c0,
                      _canonical=True)

    def is_zero(self):
        return all(x == 0 for row in self.rows for x in row)

    def is_square(self):
        return self.nrows == self.ncols

    def tolist(self):
        return [list(r) for r in self.rows]

    # arithmetic -------------------------------------------------------

    def _same(self, other):
        if not isinstance(other, Matrix):
            return NotImplemented
        if other.ring != self.ring:
            raise ValueError(f"backend mismatch {self.ring} vs {other.ring}")
        if other.shape != self.shape:
            raise ShapeError(f"shape mismatch {self.shape} vs {other.shape}")

    def __add__(self, other):
        self._same(other)
        c = self.ring.canonical
        return Matrix(self.ring, [tuple(c(a + b) for a, b in zip(r, s))
                                  for r, s in zip(self.rows, other.rows)],
                      self.nrows, self.ncols, _canonical=True)

    def __sub__(self, other):
        self._same(other)
        c = self.ring.canonical
        return Matrix(self.ring, [tuple(c(a - b) for a, b in zip(r, s))
                                  for r, s in zip(self.rows, other.rows)],
                      self.nrows, self.ncols, _canonical=True)

    def __neg__(self):
        c = self.ring.canonical
        return Matrix(self.ring, [tuple(c(-a) for a in r) for r in self.rows], self.nrows,
                      self.ncols, _canonical=True)

    def scale(self, s):
        c = self.ring.canonical
        s = c(s)
        return Matrix(self.ring, [tuple(c(s * a) for a in r) for r in self.rows], self.nrows,
                      self.ncols, _canonical=True)

    def __matmul__(self, other):
        if not isinstance(other, Matrix):
            return NotImplemented
        if other.ring != self.ring:
            raise ValueError(f"backend mismatch {self.ring} vs {other.ring}")
        if self.ncols != other.nrows:
            raise ShapeError(f"cannot multiply {self.shape} by {other.shape}")
        c = self.ring.canonical
        cols = [other.col(j) for j in range(other.ncols)]
        rows = []
        for r in self.rows:
            nz = [(k, a) for k, a in enumerate(r) if a != 0]
            rows.append(tuple(c(sum(a * col[k] for k, a in nz)) for col in cols))
        return Matrix(self.ring, rows, self.nrows, other.ncols, _canonical=True)

    def apply(self, vec):
        c = self.ring.canonical
        return tuple(c(sum(a * v for a, v in zip(r, vec))) for r in self.rows)

    def __eq__(self, other):
        if not isinstance(other, Matrix):
            return NotImplemented
        return (self.ring == other.ring and self.shape == other.shape
                and self.rows == other.rows)

    def __hash__(self):
        if self._hash is None:
            self._hash = hash((self.ring, self.nrows, self.ncols, self.rows))
        return self._hash

    def __repr__(self):
        body = "; ".join(" ".join(self.ring.format(x) for x in r) for r in self.rows)
        return f"Matrix({self.ring!r}, {self.nrows}x{self.ncols}, [{body}])"

    # serialisation ----------------------------------------------------

    def to_json(self):
        f = self.ring.format
        return {"rows": self.nrows, "cols": self.ncols,
                "entries": [[f(x) for x in r] for r in self.rows]}

    @classmethod
    def from_json(cls, ring, obj):
        if isinstance(obj, list):
            nrows = len(obj)
            ncols = len(obj[0]) if obj else 0
            entries = obj
        else:
            extra = set(obj) - {"rows", "cols", "entries"}
            if extra:
                raise ValueError(f"unknown matrix fields {sorted(extra)}")
            nrows, ncols = int(obj["rows"]), int(obj["cols"])
            entries = obj.get("entries", [])
            if nrows and not ncols and not entries:
                entries = [[] for _ in range(nrows)]
        return cls(ring, [[ring.parse(x) for x in row] for row in entries], nrows, ncols)


def hstack(blocks: Sequence[Matrix], ring=None, nrows=None) -> Matrix:
    if not blocks:
        return Matrix.zeros(ring, nrows or 0, 0)
    ring = blocks[0].ring
    nrows = blocks[0].nrows
    if any(b.nrows != nrows for b in blocks):
        raise ShapeError("hstack row mismatch")
    rows = [sum((b.rows[i] for b in blocks), ()) for i in range(nrows)]
    return Matrix(ring, rows, nrows, sum(b.ncols for b in blocks), _canonical=True)


def vstack(blocks: Sequence[Matrix], ring=None, ncols=None) -> Matrix:
    if not blocks:
        return Matrix.zeros(ring, 0, ncols or 0)
    ring = blocks[0].ring
    ncols = blocks[0].ncols
    if any(b.ncols != ncols for b in blocks):
        raise ShapeError("vstack column mismatch")
    rows = [r for b in blocks for r in b.rows]
    return Matrix(ring, rows, len(rows), ncols, _canonical=True)


def block_matrix(grid: Sequence[Sequence[Matrix]]) -> Matrix:
    return vstack([hstack(list(row)) for row in grid])


# ---------------------------------------------------------------------------
# row reduction over fields

def _require_field(A):
    if not A.ring.is_field:
        raise TypeError(f"row reduction needs a field backend, got {A.ring!r}; "
                        "use hermite_normal_form or smith_normal_form over ZZ")


def _rref_rows(ring, rows, ncols, limit=None):
    """In-place reduction of ``rows`` on the first ``limit`` columns."""
    limit = ncols if limit is None else limit
    if hasattr(ring, "p"):
        return _rref_rows_mod(ring.p, rows, limit)
    c = ring.canonical
    pivots = []
    r = 0
    m = len(rows)
    for j in range(limit):
        if r >= m:
            break
        piv = next((i for i in range(r, m) if rows[i][j] != 0), None)
        if piv is None:
            continue
        rows[r], rows[piv] = rows[piv], rows[r]
        inv = ring.inverse(rows[r][j])
        if inv != 1:
            rows[r] = [c(inv * x) for x in rows[r]]
        pr = rows[r]
        for i in range(m):
            if i != r and rows[i][j] != 0:
                f = rows[i][j]
                rows[i] = [c(x - f * y) for x, y in zip(rows[i], pr)]
        pivots.append(j)
        r += 1
    return pivots


def _rref_rows_mod(p, rows, limit):
    pivots = []
    r = 0
    m = len(rows)
    for j in range(limit):
        if r >= m:
            break
        piv = next((i for i in range(r, m) if rows[i][j] % p), None)
        if piv is None:
            continue
        rows[r], rows[piv] = rows[piv], rows[r]
        inv = pow(rows[r][j], p - 2, p)
        pr = rows[r] = [(inv * x) % p for x in rows[r]]
        for i in range(m):
            f = rows[i][j]
            if i != r and f:
                rows[i] = [(x - f * y) % p for x, y in zip(rows[i], pr)]
        pivots.append(j)
        r += 1
    return pivots


def rref(A: Matrix):
    """Return ``(R, pivots, T)`` with ``T @ A == R`` in reduced row echelon form."""
    _require_field(A)
    ring = A.ring
    m, n = A.shape
    one, zero = ring.one(), ring.zero()
    rows = [list(A.rows[i]) + [one if k == i else zero for k in range(m)] for i in range(m)]
    pivots = _rref_rows(ring, rows, n + m, limit=n)
    R = Matrix(ring, [tuple(r[:n]) for r in rows], m, n, _canonical=True)
    T = Matrix(ring, [tuple(r[n:]) for r in rows], m, m, _canonical=True)
    return R, pivots, T


def rank(A: Matrix) -> int:
    if A.ring.is_field:
        rows = [list(r) for r in A.rows]
        return len(_rref_rows(A.ring, rows, A.ncols))
    return sum(1 for d in smith_normal_form(A).diagonal if d != 0)


# ---------------------------------------------------------------------------
# Smith normal form (generic Euclidean elimination)

@dataclass(frozen=True)
class SmithDecomposition:
    U: Matrix
    D: Matrix
    V: Matrix

    @property
    def diagonal(self):
        return [self.D[i, i] for i in range(min(self.D.shape))]

    @property
    def rank(self):
        return sum(1 for d in self.diagonal if d != 0)


def _diagonalize(A: Matrix):
    ring = A.ring
    c = ring.canonical
    norm = ring.norm
    m, n = A.shape
    M = [list(r) for r in A.rows]
    U = [[1 if i == j else 0 for j in range(m)] for i in range(m)]
    V = [[1 if i == j else 0 for j in range(n)] for i in range(n)]

    def row_op(dst, src, q):
        # row[dst] -= q * row[src]
        M[dst] = [c(x - q * y) for x, y in zip(M[dst], M[src])]
        U[dst] = [c(x - q * y) for x, y in zip(U[dst], U[src])]

    def col_op(dst, src, q):
        for row in M:
            row[dst] = c(row[dst] - q * row[src])
        for row in V:
            row[dst] = c(row[dst] - q * row[src])

    def swap_rows(i, j):
        if i != j:
            M[i], M[j] = M[j], M[i]
            U[i], U[j] = U[j], U[i]

    def swap_cols(i, j):
        if i != j:
            for row in M:
                row[i], row[j] = row[j], row[i]
            for row in V:
                row[i], row[j] = row[j], row[i]

    t = 0
    while t < min(m, n):
        best = None
        for i in range(t, m):
            for j in range(t, n):
                x = M[i][j]
                if x != 0:
                    nx = norm(x)
                    if best is None or nx < best[0]:
                        best = (nx, i, j)
                        if nx == 1:
                            break
            if best is not None and best[0] == 1:
                break
        if best is None:
            break
        swap_rows(t, best[1])
        swap_cols(t, best[2])
        while True:
            clean = True
            for i in range(t + 1, m):
                if M[i][t] != 0:
                    q, r = ring.divmod(M[i][t], M[t][t])
                    row_op(i, t, q)
                    if r != 0:
                        clean = False
            for j in range(t + 1, n):
                if M[t][j] != 0:
                    q, r = ring.divmod(M[t][j], M[t][t])
                    col_op(j, t, q)
                    if r != 0:
                        clean = False
            if not clean:
                # move the smallest remaining entry of row/column t into the pivot
                cands = [(norm(M[i][t]), i, t) for i in range(t, m) if M[i][t] != 0]
                cands += [(norm(M[t][j]), t, j) for j in range(t + 1, n) if M[t][j] != 0]
                _, i, j = min(cands)
                swap_rows(t, i)
                swap_cols(t, j)
                continue
            if not ring.is_field:
                bad = next(((i, j) for i in range(t + 1, m) for j in range(t + 1, n)
                            if M[i][j] % M[t][t] != 0), None)
                if bad is not None:
                    # fold the offending row into the pivot row and re-clear
                    row_op(t, bad[0], -1)
                    continue
            break
        d = M[t][t]
        if ring.is_field:
            inv = ring.inverse(d)
            M[t] = [c(inv * x) for x in M[t]]
            U[t] = [c(inv * x) for x in U[t]]
        elif d < 0:
            M[t] = [-x for x in M[t]]
            U[t] = [-x for x in U[t]]
        t += 1
    return (Matrix(ring, U, m, m), Matrix(ring, M, m, n), Matrix(ring, V, n, n))


def smith_normal_form(A: Matrix) -> SmithDecomposition:
    """Diagonalise ``A`` as ``U @ A @ V == D`` with unimodular ``U``, ``V``.

    Over ZZ the diagonal is nonnegative with ``d1 | d2 | ...``.  Over a
    field the same routine yields a rank normal form with ones and zeros.
    Pivots are chosen by minimal absolute value with (row, col) tie-break,
    so the result is reproducible.
    """
    U, D, V = _diagonalize(A)
    if U @ A @ V != D:  # self-check, cheap at these sizes
        raise AssertionError("Smith decomposition failed verification")
    return SmithDecomposition(U, D, V)


def hermite_normal_form(A: Matrix):
    """Row-style Hermite normal form over ZZ: returns ``(H, U)`` with ``U @ A == H``."""
    if A.ring != ZZ:
        raise TypeError("Hermite normal form is computed over ZZ")
    m, n = A.shape
    H = [list(r) for r in A.rows]
    U = [[1 if i == j else 0 for j in range(m)] for i in range(m)]
    r = 0
    for j in range(n):
        if r >= m:
            break
        while True:
            nz = [i for i in range(r, m) if H[i][j] != 0]
            if not nz:
                break
            p = min(nz, key=lambda i: (abs(H[i][j]), i))
            H[r], H[p] = H[p], H[r]
            U[r], U[p] = U[p], U[r]
            done = True
            for i in range(r + 1, m):
                if H[i][j]:
                    q = H[i][j] // H[r][j]
                    H[i] = [x - q * y for x, y in zip(H[i], H[r])]
                    U[i] = [x - q * y for x, y in zip(U[i], U[r])]
                    if H[i][j]:
                        done = False
            if done:
                break
        if H[r][j] == 0:
            continue
        if H[r][j] < 0:
            H[r] = [-x for x in H[r]]
            U[r] = [-x for x in U[r]]
        for i in range(r):
            q = H[i][j] // H[r][j]
            if q:
                H[i] = [x - q * y for x, y in zip(H[i], H[r])]
                U[i] = [x - q * y for x, y in zip(U[i], U[r])]
        r += 1
    return Matrix(ZZ, H, m, n), Matrix(ZZ, U, m, m)


# ---------------------------------------------------------------------------
# kernels, solving, inversion

def kernel_basis(A: Matrix) -> Matrix:
    """Columns spanning ``ker A`` (a lattice basis over ZZ)."""
    ring = A.ring
    n = A.ncols
    if ring.is_field:
        R, pivots, _ = rref(A)
        free = [j for j in range(n) if j not in set(pivots)]
        cols = []
        for f in free:
            v = [ring.zero()] * n
            v[f] = ring.one()
            for i, pj in enumerate(pivots):
                v[pj] = ring.neg(R[i, f])
            cols.append(v)
        return Matrix.from_columns(ring, cols, n)
    snf = smith_normal_form(A)
    r = snf.rank
    return snf.V.block(0, n, r, n)


class Solution(NamedTuple):
    x: Matrix
    kernel: Matrix


@dataclass(frozen=True)
class Unsolvable:
    """Certificate that ``A X = B`` has no solution.

    ``row`` indexes the transformed system ``U A V Y = U B``; ``value`` is
    the right-hand side entry that the diagonal entry ``divisor`` fails to
    divide (``divisor`` is 0 for an inconsistent zero row).
    """
    row: int
    column: int
    value: object
    divisor: object

    def __bool__(self):
        return False


def solve(A: Matrix, B: Matrix):
    """Solve ``A @ X == B`` exactly.

    Returns a :class:`Solution` (one solution plus a kernel basis of ``A``)
    or an :class:`Unsolvable` certificate, which is falsy.
    """
    if A.ring != B.ring:
        raise ValueError(f"backend mismatch {A.ring} vs {B.ring}")
    if A.nrows != B.nrows:
        raise ShapeError(f"cannot solve {A.shape} against {B.shape}")
    ring = A.ring
    m, n = A.shape
    k = B.ncols
    if ring.is_field:
        R, pivots, T = rref(A)
        TB = T @ B
        r = len(pivots)
        for i in range(r, m):
            for j in range(k):
                if TB[i, j] != 0:
                    return Unsolvable(i, j, TB[i, j], ring.zero())
        X = [[ring.zero()] * k for _ in range(n)]
        for i, pj in enumerate(pivots):
            X[pj] = list(TB.rows[i])
        return Solution(Matrix(ring, X, n, k), kernel_basis(A))
    snf = smith_normal_form(A)
    UB = snf.U @ B
    diag = snf.diagonal
    Y = [[0] * k for _ in range(n)]
    for i in range(m):
        d = diag[i] if i < len(diag) else 0
        for j in range(k):
            v = UB[i, j]
            if d == 0:
                if v != 0:
                    return Unsolvable(i, j, v, 0)
            elif v % d:
                return Unsolvable(i, j, v, d)
            else:
                Y[i][j] = v // d
    X = snf.V @ Matrix(ring, Y, n, k)
    r = snf.rank
    return Solution(X, snf.V.block(0, n, r, n))


def invert(A: Matrix) -> Matrix:
    if not A.is_square():
        raise ShapeError(f"cannot invert a {A.shape} matrix")
    sol = solve(A, Matrix.identity(A.ring, A.nrows))
    if not sol or sol.kernel.ncols:
        raise NotInvertible("matrix is singular" if A.ring.is_field
                            else "matrix is not unimodular over ZZ")
    return sol.x


def is_invertible(A: Matrix) -> bool:
    if not A.is_square():
        return False
    if A.ring.is_field:
        return rank(A) == A.nrows
    snf = smith_normal_form(A)
    return all(d == 1 for d in snf.diagonal)


# ---------------------------------------------------------------------------
# systems with moduli (integer coordinates of finitely generated groups)

def _with_moduli(A: Matrix, moduli):
    extra = [i for i, q in enumerate(moduli) if q]
    if not extra:
        return A
    cols = []
    for i in extra:
        col = [0] * A.nrows
        col[i] = moduli[i]
        cols.append(col)
    return hstack([A, Matrix.from_columns(A.ring, cols, A.nrows)])


def solve_mod(A: Matrix, b: Sequence, moduli: Sequence[int] | None = None):
    """Find ``x`` with ``A x == b`` entrywise modulo ``moduli`` (0 = exact).

    Returns the tuple ``x`` or an :class:`Unsolvable` certificate.
    """
    moduli = list(moduli) if moduli is not None else [0] * A.nrows
    if len(moduli) != A.nrows or len(b) != A.nrows:
        raise ShapeError("right-hand side and moduli must match the row count")
    Aug = _with_moduli(A, moduli)
    sol = solve(Aug, Matrix.column_vector(A.ring, b))
    if not sol:
        return sol
    return sol.x.col(0)[:A.ncols]


def kernel_mod(A: Matrix, moduli: Sequence[int] | None = None) -> Matrix:
    """Basis (columns) of ``{x : A x == 0 mod moduli}``."""
    moduli = list(moduli) if moduli is not None else [0] * A.nrows
    n = A.ncols
    K = kernel_basis(_with_moduli(A, moduli))
    gens = K.block(0, n, 0, K.ncols)
    return span_basis(gens)


def span_basis(G: Matrix) -> Matrix:
    """A basis (columns) of the column span (lattice span over ZZ) of ``G``."""
    ring = G.ring
    if G.ncols == 0:
        return G
    if ring.is_field:
        _, pivots, _ = rref(G)
        return G.submatrix(range(G.nrows), pivots)
    snf = smith_normal_form(G)
    GV = G @ snf.V
    return GV.block(0, G.nrows, 0, snf.rank)


class Quotient(NamedTuple):
    """``span(big) / span(small)`` in invariant-factor coordinates.

    ``orders[i]`` is the order of the i-th generator (0 = infinite / field
    coordinate), torsion first.  ``proj`` maps coordinates relative to the
    ``big`` basis to quotient coordinates; ``lift`` has one column per
    quotient generator, expressed in the ambient space.
    """
    orders: tuple
    proj: Matrix
    lift: Matrix
    big: Matrix

    def coordinates(self, vec):
        sol = solve(self.big, Matrix.column_vector(self.big.ring, vec))
        if not sol:
            raise ValueError("vector does not lie in the numerator")
        y = self.proj.apply(sol.x.col(0))
        return tuple(v % q if q else v for v, q in zip(y, self.orders))


def lattice_quotient(big: Matrix, small: Matrix) -> Quotient:
    """Quotient of the span of ``big`` (a basis) by the span of ``small``."""
    ring = big.ring
    r = big.ncols
    if small.ncols:
        sol = solve(big, small)
        if not sol:
            raise ValueError("denominator is not contained in the numerator")
        C = sol.x
    else:
        C = Matrix.zeros(ring, r, 0)
    snf = smith_normal_form(C)
    diag = snf.diagonal
    keep, orders = [], []
    for i in range(r):
        d = diag[i] if i < len(diag) else 0
        if d == 0 or (not ring.is_field and d != 1):
            keep.append(i)
            orders.append(0 if ring.is_field else d)
    # torsion generators first, free ones last (SNF order already does this)
    Uinv = invert(snf.U) if r else snf.U
    proj = snf.U.submatrix(keep, range(r))
    lift = big @ Uinv.submatrix(range(r), keep) if r else Matrix.zeros(ring, big.nrows, 0)
    return Quotient(tuple(orders), proj, lift, big)


def matrix_from_json(obj, ring=None):
    if ring is None:
        ring = ring_from_json(obj["coefficients"])
    return Matrix.from_json(ring, obj)
