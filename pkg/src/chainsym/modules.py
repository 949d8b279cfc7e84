"""Coefficient objects: vector spaces over a field, or f.g. abelian groups.

Every object has a list of generator orders.  Over a field all orders are 0
(free coordinates of F^n).  Over ZZ the canonical object has torsion
generators first, with invariant factors n1 | n2 | ... (each >= 2), then
``rank`` free generators (order 0).  Maps are integer matrices acting on
these generators, column j being the image of generator j.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import product
from math import gcd, prod
from typing import Sequence

from .arith import ZZ, BackendMismatch, Ring
from .matrix import Matrix, Unsolvable, invert, kernel_mod, smith_normal_form, solve_mod

DEFAULT_ENUMERATION_BOUND = 1 << 16


class TorsionError(ValueError):
    """A matrix does not define a homomorphism between the given groups."""


def normalize_orders(orders: Sequence[int]):
    """Invariant-factor form of ``⊕ Z/orders[i]`` (0 meaning Z).

    Returns ``(canonical_orders, P, L)`` where ``P`` sends old coordinates to
    canonical ones and column i of ``L`` is canonical generator i written in
    old coordinates.
    """
    n = len(orders)
    if n == 0:
        return (), Matrix.zeros(ZZ, 0, 0), Matrix.zeros(ZZ, 0, 0)
    snf = smith_normal_form(Matrix.diagonal(ZZ, list(orders)))
    diag = snf.diagonal
    keep = [i for i, d in enumerate(diag) if d != 1]
    Uinv = invert(snf.U)
    P = snf.U.submatrix(keep, range(n))
    L = Uinv.submatrix(range(n), keep)
    return tuple(diag[i] for i in keep), P, L


@dataclass(frozen=True)
class CoeffObject:
    ring: Ring
    rank: int = 0
    torsion: tuple = ()

    def __post_init__(self):
        object.__setattr__(self, "torsion", tuple(int(t) for t in self.torsion))
        if self.rank < 0:
            raise ValueError("rank must be nonnegative")
        if self.ring.is_field:
            if self.torsion:
                raise ValueError("vector spaces carry no torsion")
        else:
            t = self.torsion
            if any(x < 2 for x in t) or any(t[i + 1] % t[i] for i in range(len(t) - 1)):
                raise ValueError(f"torsion {list(t)} is not an invariant-factor chain")

    # constructors -----------------------------------------------------

    @classmethod
    def vector_space(cls, ring, dim):
        if not ring.is_field:
            raise TypeError("vector_space needs a field backend")
        return cls(ring, dim)

    @classmethod
    def abelian(cls, rank=0, torsion=()):
        return cls(ZZ, rank, tuple(torsion))

    @classmethod
    def zero(cls, ring):
        return cls(ring, 0)

    @classmethod
    def from_orders(cls, ring, orders):
        """Normalise an arbitrary cyclic decomposition; see :func:`normalize_orders`."""
        if ring.is_field:
            if any(orders):
                raise ValueError("field coordinates have order 0")
            n = len(orders)
            I = Matrix.identity(ring, n)
            return cls(ring, n), I, I
        canon, P, L = normalize_orders(orders)
        tors = tuple(d for d in canon if d)
        return cls(ZZ, len(canon) - len(tors), tors), P, L

    # structure --------------------------------------------------------

    @property
    def dim(self):
        if not self.ring.is_field:
            raise TypeError("dim is defined for vector spaces; use rank/torsion")
        return self.rank

    @property
    def orders(self) -> tuple:
        return self.torsion + (0,) * self.rank

    @property
    def ngens(self) -> int:
        return self.rank + len(self.torsion)

    def is_zero(self):
        return self.ngens == 0

    def is_free(self):
        return not self.torsion

    def is_finite(self) -> bool:
        if self.ring.is_field:
            return self.rank == 0 or hasattr(self.ring, "p")
        return self.rank == 0

    def order(self) -> int:
        if not self.is_finite():
            raise ValueError(f"{self} is infinite")
        if self.ring.is_field:
            return self.ring.p ** self.rank if self.rank else 1
        return prod(self.torsion)

    def reduce(self, vec):
        return tuple(self.ring.canonical(v % q) if q else self.ring.canonical(v)
                     for v, q in zip(vec, self.orders))

    def enumerate_elements(self, bound: int = DEFAULT_ENUMERATION_BOUND):
        if not self.is_finite():
            raise ValueError(f"cannot enumerate the infinite object {self}")
        if self.order() > bound:
            raise ValueError(f"{self} has {self.order()} elements, above the bound {bound}")
        if self.ring.is_field:
            ranges = [range(self.ring.p)] * self.rank
        else:
            ranges = [range(t) for t in self.torsion]
        return product(*ranges)

    def direct_sum(self, *others):
        objs = (self,) + others
        if any(o.ring != self.ring for o in objs):
            raise BackendMismatch("direct sum across backends")
        if self.ring.is_field:
            return CoeffObject(self.ring, sum(o.rank for o in objs))
        if all(o.is_free() for o in objs):
            return CoeffObject(ZZ, sum(o.rank for o in objs))
        raise ValueError("direct sums with torsion are not kept in block form; "
                         "use CoeffObject.from_orders")

    def to_json(self):
        if self.ring.is_field:
            return {"dim": self.rank}
        return {"rank": self.rank, "torsion": list(self.torsion)}

    @classmethod
    def from_json(cls, ring, obj):
        """Parse an object; ZZ torsion lists are normalised.

        Returns ``(object, P, L)`` with the coordinate changes of
        :meth:`from_orders` (identities when already canonical).
        """
        if ring.is_field:
            extra = set(obj) - {"dim"}
            if extra:
                raise ValueError(f"unknown object fields {sorted(extra)}")
            return cls.from_orders(ring, [0] * int(obj.get("dim", 0)))
        extra = set(obj) - {"rank", "torsion"}
        if extra:
            raise ValueError(f"unknown object fields {sorted(extra)}")
        tors = [int(t) for t in obj.get("torsion", [])]
        if any(t < 1 for t in tors):
            raise ValueError("torsion orders must be positive")
        return cls.from_orders(ZZ, tors + [0] * int(obj.get("rank", 0)))

    def __str__(self):
        if self.ring.is_field:
            return f"{self.ring!r}^{self.rank}"
        parts = [f"Z/{t}" for t in self.torsion] + (["Z^%d" % self.rank] if self.rank > 1 else
                                                     ["Z"] if self.rank else [])
        return " + ".join(parts) if parts else "0"


class ModuleMap:
    """A homomorphism between coefficient objects, as an integer/field matrix."""

    __slots__ = ("domain", "codomain", "matrix")

    def __init__(self, domain: CoeffObject, codomain: CoeffObject, matrix, check=True):
        if domain.ring != codomain.ring:
            raise BackendMismatch(f"{domain.ring} vs {codomain.ring}")
        ring = domain.ring
        if not isinstance(matrix, Matrix):
            matrix = Matrix(ring, matrix, codomain.ngens, domain.ngens)
        if matrix.ring != ring:
            raise BackendMismatch(f"matrix over {matrix.ring}, objects over {ring}")
        if matrix.shape != (codomain.ngens, domain.ngens):
            raise ValueError(f"matrix shape {matrix.shape} does not match "
                             f"{codomain.ngens}x{domain.ngens}")
        if codomain.torsion:
            cod = codomain.orders
            matrix = Matrix(ring, [tuple(x % q if q else x for x in row)
                                   for row, q in zip(matrix.rows, cod)],
                            matrix.nrows, matrix.ncols, _canonical=True)
        if check and domain.torsion and not ring.is_field:
            for j, n in enumerate(domain.orders):
                if not n:
                    continue
                for i, N in enumerate(codomain.orders):
                    m = matrix[i, j]
                    if (N == 0 and m != 0) or (N and (n * m) % N):
                        raise TorsionError(
                            f"generator {j} of order {n} cannot map to {m} "
                            f"in a summand of order {N or 'infinity'}")
        self.domain = domain
        self.codomain = codomain
        self.matrix = matrix

    @classmethod
    def zero(cls, dom, cod):
        return cls(dom, cod, Matrix.zeros(dom.ring, cod.ngens, dom.ngens), check=False)

    @classmethod
    def identity(cls, obj):
        return cls(obj, obj, Matrix.identity(obj.ring, obj.ngens), check=False)

    @property
    def ring(self):
        return self.domain.ring

    def _compatible(self, other):
        if self.domain != other.domain or self.codomain != other.codomain:
            raise ValueError("maps have different domain or codomain")

    def __add__(self, other):
        self._compatible(other)
        return ModuleMap(self.domain, self.codomain, self.matrix + other.matrix, check=False)

    def __sub__(self, other):
        self._compatible(other)
        return ModuleMap(self.domain, self.codomain, self.matrix - other.matrix, check=False)

    def __neg__(self):
        return ModuleMap(self.domain, self.codomain, -self.matrix, check=False)

    def scale(self, s):
        return ModuleMap(self.domain, self.codomain, self.matrix.scale(s), check=False)

    def __matmul__(self, other):
        """Composition ``self ∘ other``."""
        if other.codomain != self.domain:
            raise ValueError(f"cannot compose: {other.codomain} is not {self.domain}")
        return ModuleMap(other.domain, self.codomain, self.matrix @ other.matrix, check=False)

    def is_zero(self):
        return self.matrix.is_zero()

    def __eq__(self, other):
        if not isinstance(other, ModuleMap):
            return NotImplemented
        return (self.domain == other.domain and self.codomain == other.codomain
                and self.matrix == other.matrix)

    def __hash__(self):
        return hash((self.domain, self.codomain, self.matrix))

    def __repr__(self):
        return f"ModuleMap({self.domain} -> {self.codomain}, {self.matrix.tolist()})"


# ---------------------------------------------------------------------------
# parametrised families of maps

@dataclass(frozen=True)
class _Param:
    slot: int
    row: int
    col: int
    step: int    # entry = step * coordinate
    order: int   # coordinate order (0 = free)


class FamilySpace:
    """The group of families ``(m_s : dom_s -> cod_s)`` of homomorphisms.

    Coordinates ("params") follow the entrywise description
    Hom(Z/n, Z/N) = Z/gcd(n, N), generated by N/gcd(n, N).  Entries of the
    matrices themselves are the "ambient" coordinates, taken modulo the
    order of the target generator.
    """

    def __init__(self, ring: Ring, slots: Sequence[tuple]):
        self.ring = ring
        self.slots = [(d, c) for d, c in slots]
        params = []
        ambient_moduli = []
        offsets = []
        for s, (dom, cod) in enumerate(self.slots):
            offsets.append(len(ambient_moduli))
            for i, N in enumerate(cod.orders):
                for j, n in enumerate(dom.orders):
                    ambient_moduli.append(N)
                    if ring.is_field:
                        params.append(_Param(s, i, j, 1, 0))
                        continue
                    if n == 0:
                        step, order = 1, N
                    elif N == 0:
                        continue  # torsion into Z is zero
                    else:
                        g = gcd(n, N)
                        step, order = N // g, g
                    if order != 1:
                        params.append(_Param(s, i, j, step, order))
        self.params = params
        self.ambient_moduli = ambient_moduli
        self._offsets = offsets

    @property
    def nparams(self):
        return len(self.params)

    @property
    def orders(self):
        return [p.order for p in self.params]

    @property
    def namb(self):
        return len(self.ambient_moduli)

    def zero_family(self):
        return [ModuleMap.zero(d, c) for d, c in self.slots]

    def decode(self, coords) -> list:
        mats = [[[0] * d.ngens for _ in range(c.ngens)] for d, c in self.slots]
        for p, x in zip(self.params, coords):
            mats[p.slot][p.row][p.col] = p.step * x
        return [ModuleMap(d, c, Matrix(self.ring, m, c.ngens, d.ngens), check=False)
                for (d, c), m in zip(self.slots, mats)]

    def ambient(self, family) -> tuple:
        out = []
        for (dom, cod), m in zip(self.slots, family):
            mat = m.matrix if isinstance(m, ModuleMap) else m
            for i, N in enumerate(cod.orders):
                for j in range(dom.ngens):
                    v = mat[i, j]
                    out.append(v % N if N else v)
        return tuple(out)

    def encode(self, family) -> tuple:
        out = []
        for p in self.params:
            m = family[p.slot]
            mat = m.matrix if isinstance(m, ModuleMap) else m
            v = mat[p.row, p.col]
            if self.ring.is_field:
                out.append(v)
                continue
            if v % p.step:
                raise TorsionError("entry is not a multiple of the Hom generator")
            q = v // p.step
            out.append(q % p.order if p.order else q)
        return tuple(out)

    def reduce(self, coords):
        return tuple(x % q if q else x for x, q in zip(coords, self.orders))

    def linear_map(self, fn, target: "FamilySpace", as_params=False) -> Matrix:
        """Matrix of a linear ``fn: family -> family`` from params to target coordinates."""
        cols = []
        for e in range(self.nparams):
            unit = [0] * self.nparams
            unit[e] = 1
            img = fn(self.decode(unit))
            cols.append(target.encode(img) if as_params else target.ambient(img))
        nrows = target.nparams if as_params else target.namb
        return Matrix.from_columns(self.ring, cols, nrows)

    def solve(self, M: Matrix, rhs, target: "FamilySpace"):
        """Params ``x`` with ``fn(decode(x)) == rhs`` given ``M = linear_map(fn, target)``."""
        b = target.ambient(rhs) if not isinstance(rhs, tuple) else rhs
        x = solve_mod(M, b, target.ambient_moduli)
        if isinstance(x, Unsolvable):
            return x
        return self.reduce(x)

    def kernel(self, M: Matrix, target: "FamilySpace") -> Matrix:
        """Lattice basis of params killed by ``M`` (includes the param relations)."""
        K = kernel_mod(M, target.ambient_moduli)
        return K

    def relations(self) -> Matrix:
        """Columns ``order * e_i`` for the torsion params."""
        cols = []
        for i, q in enumerate(self.orders):
            if q:
                v = [0] * self.nparams
                v[i] = q
                cols.append(v)
        return Matrix.from_columns(self.ring, cols, self.nparams)

    def elements(self, bound=DEFAULT_ENUMERATION_BOUND):
        if self.ring.is_field:
            if not hasattr(self.ring, "p"):
                raise ValueError("cannot enumerate an infinite family space")
            ranges = [range(self.ring.p)] * self.nparams
        else:
            if any(q == 0 for q in self.orders):
                raise ValueError("cannot enumerate an infinite family space")
            ranges = [range(q) for q in self.orders]
        total = prod(len(r) for r in ranges)
        if total > bound:
            raise ValueError(f"{total} families exceed the bound {bound}")
        return product(*ranges)


def hom_group(M: CoeffObject, N: CoeffObject):
    """``Hom(M, N)`` as a canonical object plus generator maps."""
    if M.ring != N.ring:
        raise BackendMismatch(f"{M.ring} vs {N.ring}")
    space = FamilySpace(M.ring, [(M, N)])
    obj, P, L = CoeffObject.from_orders(M.ring, space.orders)
    gens = []
    for i in range(obj.ngens):
        coords = L.col(i)
        gens.append(space.decode(space.reduce(coords))[0])
    return obj, gens


def hom_coordinates(M: CoeffObject, N: CoeffObject, f: ModuleMap):
    """Coordinates of ``f`` with respect to the generators of :func:`hom_group`."""
    space = FamilySpace(M.ring, [(M, N)])
    obj, P, _ = CoeffObject.from_orders(M.ring, space.orders)
    x = space.encode([f])
    return obj.reduce(P.apply(x)) if obj.ngens else ()


def automorphism_count(M: CoeffObject, bound: int = DEFAULT_ENUMERATION_BOUND):
    """``|Aut(M)|``, or None when infinite.

    Over ZZ, ``Aut(T ⊕ Z^r)`` is finite only for r <= 1; then it is
    ``Aut(T) × Hom(Z^r, T) × {±1}^r``.
    """
    ring = M.ring
    if ring.is_field:
        if not hasattr(ring, "p"):
            return 1 if M.rank == 0 else None
        q, n = ring.p, M.rank
        return prod(q ** n - q ** i for i in range(n))
    if M.rank >= 2:
        return None
    T = CoeffObject(ZZ, 0, M.torsion)
    count = 0
    if T.ngens:
        space = FamilySpace(ZZ, [(T, T)])
        n = T.ngens
        for x in space.elements(bound):
            m = space.decode(x)[0].matrix
            aug = Matrix(ZZ, [list(m.rows[i]) + [T.torsion[j] if i == j else 0 for j in range(n)]
                              for i in range(n)], n, 2 * n)
            diag = smith_normal_form(aug).diagonal
            if len(diag) == n and all(abs(d) == 1 for d in diag):
                count += 1
    else:
        count = 1
    return count * T.order() ** M.rank * 2 ** M.rank
