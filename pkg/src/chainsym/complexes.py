"""Bounded chain complexes, chain maps, homotopies and the Hom complex.

A complex lives on a degree window ``[lo, hi]``; the differential
``d(k): A_{k+1} -> A_k`` is stored for ``lo <= k < hi``.  Everything outside
the window is the zero object.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from functools import lru_cache
from typing import Mapping

from .arith import BackendMismatch, Ring
from .matrix import (Matrix, Unsolvable, hstack, invert, kernel_basis, kernel_mod,
                     lattice_quotient, rref, smith_normal_form, solve, solve_mod,
                     span_basis)
from .modules import CoeffObject, FamilySpace, ModuleMap


class ComplexError(ValueError):
    pass


class NotSplit(ValueError):
    pass


def _as_map(dom, cod, m):
    if isinstance(m, ModuleMap):
        if m.domain != dom or m.codomain != cod:
            raise ComplexError(f"component has type {m.domain} -> {m.codomain}, "
                               f"expected {dom} -> {cod}")
        return m
    return ModuleMap(dom, cod, m)


def _raw(ring, m):
    if isinstance(m, ModuleMap):
        return m.matrix
    return m if isinstance(m, Matrix) else Matrix(ring, m)


class ChainComplex:
    def __init__(self, ring: Ring, lo: int, hi: int, objects: Mapping[int, CoeffObject],
                 differentials: Mapping[int, object] | None = None):
        self.ring = ring
        self.lo, self.hi = int(lo), int(hi)
        if self.lo > self.hi:
            self.lo, self.hi = 0, -1
        objs = {}
        for k in range(self.lo, self.hi + 1):
            o = objects.get(k, CoeffObject.zero(ring))
            if o.ring != ring:
                raise BackendMismatch(f"object in degree {k} is over {o.ring}, not {ring}")
            objs[k] = o
        for k, o in objects.items():
            if not (self.lo <= k <= self.hi) and not o.is_zero():
                raise ComplexError(f"nonzero object in degree {k} outside the window")
        self._objects = objs
        differentials = differentials or {}
        diffs = {}
        for k in range(self.lo, self.hi):
            m = differentials.get(k)
            dom, cod = objs[k + 1], objs[k]
            diffs[k] = ModuleMap.zero(dom, cod) if m is None else _as_map(dom, cod, m)
        for k in differentials:
            if not (self.lo <= k < self.hi):
                m = differentials[k]
                mat = _raw(ring, m)
                if not mat.is_zero():
                    raise ComplexError(f"differential d_{k} lies outside the window")
        self._diffs = diffs
        for k in range(self.lo, self.hi - 1):
            if not (diffs[k] @ diffs[k + 1]).is_zero():
                raise ComplexError(f"d_{k} ∘ d_{k + 1} is not zero")
        self._key = None

    # access -----------------------------------------------------------

    @property
    def window(self):
        return self.lo, self.hi

    def degrees(self):
        return range(self.lo, self.hi + 1)

    def obj(self, k) -> CoeffObject:
        return self._objects.get(k) or CoeffObject.zero(self.ring)

    def d(self, k) -> ModuleMap:
        """``d_k: A_{k+1} -> A_k``."""
        m = self._diffs.get(k)
        if m is None:
            return ModuleMap.zero(self.obj(k + 1), self.obj(k))
        return m

    def is_zero(self):
        return all(o.is_zero() for o in self._objects.values())

    def key(self):
        if self._key is None:
            self._key = (self.ring, self.lo, self.hi,
                         tuple(self._objects[k] for k in self.degrees()),
                         tuple(self._diffs[k].matrix for k in range(self.lo, self.hi)))
        return self._key

    def __eq__(self, other):
        if not isinstance(other, ChainComplex):
            return NotImplemented
        if self is other:
            return True
        # zero objects at the window edges do not matter
        lo, hi = min(self.lo, other.lo), max(self.hi, other.hi)
        if self.ring != other.ring:
            return False
        return (all(self.obj(k) == other.obj(k) for k in range(lo, hi + 1))
                and all(self.d(k) == other.d(k) for k in range(lo, hi)))

    def __hash__(self):
        return hash(tuple(self.obj(k) for k in self.degrees() if not self.obj(k).is_zero()))

    def __repr__(self):
        objs = ", ".join(f"{k}: {self.obj(k)}" for k in self.degrees())
        return f"ChainComplex({self.ring!r}, [{self.lo}, {self.hi}], {{{objs}}})"

    def dims(self):
        return {k: self.obj(k).ngens for k in self.degrees()}


def zero_complex(ring):
    return ChainComplex(ring, 0, -1, {})


def translate(A: ChainComplex, n: int) -> ChainComplex:
    """``A[n]_k = A_{k+n}`` with differential ``(-1)^n d_{k+n}``."""
    sign = -1 if n % 2 else 1
    objs = {k - n: A.obj(k) for k in A.degrees()}
    diffs = {k - n: A.d(k).scale(sign) for k in range(A.lo, A.hi)}
    return ChainComplex(A.ring, A.lo - n, A.hi - n, objs, diffs)


def _check_pair(A, B):
    if A.ring != B.ring:
        raise BackendMismatch(f"{A.ring} vs {B.ring}")


class ChainMap:
    """Degree-0 morphism of complexes; components default to zero."""

    def __init__(self, domain: ChainComplex, codomain: ChainComplex, components=None,
                 check=True):
        _check_pair(domain, codomain)
        self.domain, self.codomain = domain, codomain
        components = components or {}
        comps = {}
        for k in self.degrees():
            m = components.get(k)
            dom, cod = domain.obj(k), codomain.obj(k)
            comps[k] = ModuleMap.zero(dom, cod) if m is None else _as_map(dom, cod, m)
        for k, m in components.items():
            if k not in comps:
                mat = _raw(domain.ring, m)
                if not mat.is_zero():
                    raise ComplexError(f"component f_{k} has no room in degree {k}")
        self.components = comps
        if check:
            for k in range(min(domain.lo, codomain.lo) - 1, max(domain.hi, codomain.hi) + 1):
                lhs = self[k] @ domain.d(k)
                rhs = codomain.d(k) @ self[k + 1]
                if lhs != rhs:
                    raise ComplexError(f"square in degree {k} does not commute")

    def degrees(self):
        lo = max(self.domain.lo, self.codomain.lo)
        hi = min(self.domain.hi, self.codomain.hi)
        return range(lo, hi + 1)

    def __getitem__(self, k) -> ModuleMap:
        m = self.components.get(k)
        if m is None:
            return ModuleMap.zero(self.domain.obj(k), self.codomain.obj(k))
        return m

    @classmethod
    def identity(cls, A):
        return cls(A, A, {k: ModuleMap.identity(A.obj(k)) for k in A.degrees()}, check=False)

    @classmethod
    def zero(cls, A, B):
        return cls(A, B, {}, check=False)

    def _same(self, other):
        if self.domain != other.domain or self.codomain != other.codomain:
            raise ComplexError("chain maps have different endpoints")

    def __add__(self, other):
        self._same(other)
        return ChainMap(self.domain, self.codomain,
                        {k: self[k] + other[k] for k in self.degrees()}, check=False)

    def __sub__(self, other):
        self._same(other)
        return ChainMap(self.domain, self.codomain,
                        {k: self[k] - other[k] for k in self.degrees()}, check=False)

    def __neg__(self):
        return ChainMap(self.domain, self.codomain, {k: -self[k] for k in self.degrees()},
                        check=False)

    def __matmul__(self, other: "ChainMap"):
        if other.codomain != self.domain:
            raise ComplexError("chain maps are not composable")
        return ChainMap(other.domain, self.codomain,
                        {k: self[k] @ other[k] for k in self.degrees()
                         if k in other.degrees()}, check=False)

    def is_zero(self):
        return all(m.is_zero() for m in self.components.values())

    def __eq__(self, other):
        if not isinstance(other, ChainMap):
            return NotImplemented
        return (self.domain == other.domain and self.codomain == other.codomain
                and all(self[k] == other[k] for k in self.degrees()))

    def __hash__(self):
        return hash(tuple(self[k].matrix for k in self.degrees()))

    def key(self):
        return tuple(self[k].matrix.rows for k in self.degrees())

    def __repr__(self):
        return "ChainMap(" + ", ".join(f"{k}: {self[k].matrix.tolist()}"
                                       for k in self.degrees()) + ")"


class Homotopy:
    """A degree-``n`` family ``h_k: A_k -> B_{k+n}``."""

    def __init__(self, domain: ChainComplex, codomain: ChainComplex, degree: int,
                 components=None):
        _check_pair(domain, codomain)
        self.domain, self.codomain, self.degree = domain, codomain, int(degree)
        components = components or {}
        comps = {}
        for k in self.degrees():
            m = components.get(k)
            dom, cod = domain.obj(k), codomain.obj(k + self.degree)
            comps[k] = ModuleMap.zero(dom, cod) if m is None else _as_map(dom, cod, m)
        for k, m in components.items():
            if k not in comps:
                mat = _raw(domain.ring, m)
                if not mat.is_zero():
                    raise ComplexError(f"component h_{k} has no room")
        self.components = comps

    def degrees(self):
        lo = max(self.domain.lo, self.codomain.lo - self.degree)
        hi = min(self.domain.hi, self.codomain.hi - self.degree)
        return range(lo, hi + 1)

    def __getitem__(self, k) -> ModuleMap:
        m = self.components.get(k)
        if m is None:
            return ModuleMap.zero(self.domain.obj(k), self.codomain.obj(k + self.degree))
        return m

    @classmethod
    def zero(cls, A, B, n=1):
        return cls(A, B, n, {})

    def _same(self, other):
        if (self.domain != other.domain or self.codomain != other.codomain
                or self.degree != other.degree):
            raise ComplexError("homotopies have different endpoints or degree")

    def __add__(self, other):
        self._same(other)
        return Homotopy(self.domain, self.codomain, self.degree,
                        {k: self[k] + other[k] for k in self.degrees()})

    def __sub__(self, other):
        self._same(other)
        return Homotopy(self.domain, self.codomain, self.degree,
                        {k: self[k] - other[k] for k in self.degrees()})

    def __neg__(self):
        return Homotopy(self.domain, self.codomain, self.degree,
                        {k: -self[k] for k in self.degrees()})

    def is_zero(self):
        return all(m.is_zero() for m in self.components.values())

    def __eq__(self, other):
        if not isinstance(other, Homotopy):
            return NotImplemented
        return (self.domain == other.domain and self.codomain == other.codomain
                and self.degree == other.degree
                and all(self[k] == other[k] for k in self.degrees()))

    def __hash__(self):
        return hash(tuple(self[k].matrix for k in self.degrees()))

    def __repr__(self):
        return f"Homotopy(deg {self.degree}, " + ", ".join(
            f"{k}: {self[k].matrix.tolist()}" for k in self.degrees()) + ")"


def boundary(h: Homotopy) -> Homotopy | ChainMap:
    """``d h - (-1)^n h d`` for a degree-``n`` homotopy (a chain map when n = 1)."""
    A, B, n = h.domain, h.codomain, h.degree
    sign = -1 if n % 2 else 1
    comps = {}
    tgt = Homotopy.zero(A, B, n - 1)
    for k in tgt.degrees():
        comps[k] = B.d(k + n - 1) @ h[k] - (h[k - 1] @ A.d(k - 1)).scale(sign)
    if n == 1:
        return ChainMap(A, B, comps, check=False)
    return Homotopy(A, B, n - 1, comps)


# ---------------------------------------------------------------------------
# homology

@dataclass(frozen=True)
class HomologyData:
    degree: int
    Z: CoeffObject
    B: CoeffObject
    H: CoeffObject
    quotient: object = field(repr=False)

    def project(self, vec):
        """Class of a cycle (vector in A_k) in H_k coordinates."""
        if self.H.ngens == 0:
            return ()
        return self.H.reduce(self.quotient.coordinates(vec))

    def lift(self, coords):
        """A cycle representing the given homology class."""
        L = self.quotient.lift
        return tuple(sum(L[i, j] * c for j, c in enumerate(coords)) for i in range(L.nrows))

    def lift_matrix(self) -> Matrix:
        return self.quotient.lift


def _object_from_orders(ring, orders):
    if ring.is_field:
        return CoeffObject(ring, len(orders))
    tors = tuple(o for o in orders if o)
    return CoeffObject(ring, len(orders) - len(tors), tors)


def _diag_relations(ring, orders):
    cols = []
    for i, q in enumerate(orders):
        if q:
            v = [0] * len(orders)
            v[i] = q
            cols.append(v)
    return Matrix.from_columns(ring, cols, len(orders))


def homology(A: ChainComplex, k: int) -> HomologyData:
    ring = A.ring
    Ak = A.obj(k)
    n = Ak.ngens
    Kb = kernel_mod(A.d(k - 1).matrix, list(A.obj(k - 1).orders))
    rel = _diag_relations(ring, Ak.orders)
    if n == 0:
        z = CoeffObject.zero(ring)
        q = lattice_quotient(Matrix.zeros(ring, 0, 0), Matrix.zeros(ring, 0, 0))
        return HomologyData(k, z, z, z, q)
    img = hstack([A.d(k).matrix, rel])
    q = lattice_quotient(Kb, img)
    Zq = lattice_quotient(Kb, rel)
    Bspan = span_basis(img)
    Bq = lattice_quotient(Bspan, rel) if Bspan.ncols else None
    Z = _object_from_orders(ring, Zq.orders)
    B = _object_from_orders(ring, Bq.orders) if Bq else CoeffObject.zero(ring)
    H = _object_from_orders(ring, q.orders)
    return HomologyData(k, Z, B, H, q)


def homology_all(A: ChainComplex):
    return {k: homology(A, k) for k in A.degrees()}


# ---------------------------------------------------------------------------
# Hom complex

class HomComplex:
    """``Hom(A, B)``: degree-n piece collects degree-n homotopies A -> B.

    The differential is ``D(h)_k = d^B h_k - (-1)^n h_{k-1} d^A``.
    """

    def __init__(self, A: ChainComplex, B: ChainComplex):
        _check_pair(A, B)
        self.A, self.B = A, B
        self.ring = A.ring
        if A.is_zero() or B.is_zero() or A.lo > A.hi or B.lo > B.hi:
            self.lo, self.hi = 0, -1
        else:
            self.lo, self.hi = B.lo - A.hi, B.hi - A.lo
        self._spaces = {}
        self._amb = {}
        self._par = {}
        self._hom = {}

    def degrees_of(self, n):
        return Homotopy.zero(self.A, self.B, n).degrees()

    def space(self, n) -> FamilySpace:
        if n not in self._spaces:
            ks = list(self.degrees_of(n))
            self._spaces[n] = FamilySpace(self.ring, [(self.A.obj(k), self.B.obj(k + n))
                                                      for k in ks])
        return self._spaces[n]

    def to_homotopy(self, family, n):
        ks = list(self.degrees_of(n))
        comps = dict(zip(ks, family))
        if n == 0:
            return ChainMap(self.A, self.B, comps, check=False)
        return Homotopy(self.A, self.B, n, comps)

    def to_family(self, h):
        n = 0 if isinstance(h, ChainMap) else h.degree
        return [h[k] for k in self.degrees_of(n)]

    def decode(self, coords, n):
        return self.to_homotopy(self.space(n).decode(coords), n)

    def encode(self, h):
        n = 0 if isinstance(h, ChainMap) else h.degree
        return self.space(n).encode(self.to_family(h))

    def ambient(self, h):
        n = 0 if isinstance(h, ChainMap) else h.degree
        return self.space(n).ambient(self.to_family(h))

    def differential_matrix(self, n, as_params=False) -> Matrix:
        """Matrix of ``D_n: Hom_n -> Hom_{n-1}`` (params to ambient, or to params)."""
        cache = self._par if as_params else self._amb
        if n not in cache:
            src, tgt = self.space(n), self.space(n - 1)

            def fn(fam, n=n):
                h = Homotopy(self.A, self.B, n, dict(zip(self.degrees_of(n), fam)))
                return self.to_family(boundary(h))
            cache[n] = src.linear_map(fn, tgt, as_params=as_params)
        return cache[n]

    def differential(self, h):
        n = 0 if isinstance(h, ChainMap) else h.degree
        if n == 0:
            h = Homotopy(self.A, self.B, 0, {k: h[k] for k in self.degrees_of(0)})
        return boundary(h)

    def cycles(self, n) -> Matrix:
        M = self.differential_matrix(n)
        return kernel_mod(M, self.space(n - 1).ambient_moduli)

    def homology(self, n):
        """``H_n`` as a :class:`~chainsym.matrix.Quotient` in param coordinates."""
        if n not in self._hom:
            Z = self.cycles(n)
            S = self.space(n)
            img = self.differential_matrix(n + 1, as_params=True)
            den = hstack([img, S.relations()])
            self._hom[n] = lattice_quotient(Z, den)
        return self._hom[n]

    def homology_object(self, n) -> CoeffObject:
        return _object_from_orders(self.ring, self.homology(n).orders)

    def classify(self, h):
        """Homology coordinates of a cycle (a chain map when n = 0)."""
        q = self.homology(0 if isinstance(h, ChainMap) else h.degree)
        if not q.orders:
            return ()
        return q.coordinates(self.encode(h))

    def lift(self, coords, n):
        q = self.homology(n)
        L = q.lift
        x = tuple(sum(L[i, j] * c for j, c in enumerate(coords)) for i in range(L.nrows))
        return self.decode(self.space(n).reduce(x), n)

    def solve_boundary(self, target, n):
        """A degree-``n`` family whose boundary equals ``target``, or None."""
        M = self.differential_matrix(n)
        x = self.space(n).solve(M, self.ambient(target), self.space(n - 1))
        if isinstance(x, Unsolvable):
            return None
        return self.decode(x, n)

    def as_chain_complex(self) -> ChainComplex:
        """The Hom complex with every piece put in canonical form."""
        ring = self.ring
        objs, P, L = {}, {}, {}
        for n in range(self.lo, self.hi + 1):
            objs[n], P[n], L[n] = CoeffObject.from_orders(ring, self.space(n).orders)
        diffs = {}
        for n in range(self.lo, self.hi):
            M = self.differential_matrix(n + 1, as_params=True)
            diffs[n] = ModuleMap(objs[n + 1], objs[n], P[n] @ M @ L[n + 1])
        return ChainComplex(ring, self.lo, self.hi, objs, diffs)


@lru_cache(maxsize=256)
def _hom_cached(A_key, B_key, A, B):
    return HomComplex(A, B)


def hom_complex(A: ChainComplex, B: ChainComplex) -> HomComplex:
    return _hom_cached(A.key(), B.key(), A, B)


def is_null_homotopic(f: ChainMap):
    """A chain contraction ``h`` with ``f = d h + h d``, or None."""
    H = hom_complex(f.domain, f.codomain)
    return H.solve_boundary(f, 1)


def chain_map_space(A: ChainComplex, B: ChainComplex):
    """Lattice basis (params of Hom_0) of chain maps, solved from the squares directly."""
    S = FamilySpace(A.ring, [(A.obj(k), B.obj(k)) for k in range(max(A.lo, B.lo),
                                                                 min(A.hi, B.hi) + 1)])
    ks = list(range(max(A.lo, B.lo), min(A.hi, B.hi) + 1))
    sq = list(range(min(A.lo, B.lo) - 1, max(A.hi, B.hi) + 1))
    T = FamilySpace(A.ring, [(A.obj(k + 1), B.obj(k)) for k in sq])

    def fn(fam):
        f = ChainMap(A, B, dict(zip(ks, fam)), check=False)
        return [f[k] @ A.d(k) - B.d(k) @ f[k + 1] for k in sq]
    M = S.linear_map(fn, T)
    return S, kernel_mod(M, T.ambient_moduli)


# ---------------------------------------------------------------------------
# splitting

@dataclass
class SplittingResult:
    maps: dict | None
    failed_degree: int | None = None
    certificate: Unsolvable | None = None

    def __bool__(self):
        return self.maps is not None


def find_splitting(A: ChainComplex) -> SplittingResult:
    """Maps ``s_k: A_k -> A_{k+1}`` with ``d_k s_k d_k = d_k``, degree by degree."""
    maps = {}
    for k in range(A.lo, A.hi):
        d = A.d(k)
        S = FamilySpace(A.ring, [(A.obj(k), A.obj(k + 1))])
        T = FamilySpace(A.ring, [(A.obj(k + 1), A.obj(k))])
        M = S.linear_map(lambda fam: [d @ fam[0] @ d], T)
        x = solve_mod(M, T.ambient([d]), T.ambient_moduli)
        if isinstance(x, Unsolvable):
            return SplittingResult(None, k, x)
        maps[k] = S.decode(S.reduce(x))[0]
    return SplittingResult(maps)


class SplitComplex(ChainComplex):
    """The canonical split complex ``A_k = B_k ⊕ H_k ⊕ B_{k-1}``, ``d = ι∘π``."""

    def __init__(self, ring, lo, hi, B: Mapping[int, CoeffObject], H: Mapping[int, CoeffObject]):
        zero = CoeffObject.zero(ring)
        self.B = {k: B.get(k, zero) for k in range(lo - 1, hi + 1)}
        self.B[lo - 1] = zero
        self.B[hi] = zero
        for k, b in B.items():
            if not b.is_zero() and not (lo <= k < hi):
                raise ComplexError(f"B_{k} must vanish outside [{lo}, {hi - 1}]")
        self.H = {k: H.get(k, zero) for k in range(lo, hi + 1)}
        for k, h in H.items():
            if not h.is_zero() and not (lo <= k <= hi):
                raise ComplexError(f"H_{k} lies outside the window")
        for o in list(self.B.values()) + list(self.H.values()):
            if o.ring != ring:
                raise BackendMismatch("objects over different backends")
            if o.torsion:
                raise ComplexError("canonical split complexes need torsion-free objects")
        objs = {k: CoeffObject(ring, self.b(k) + self.h(k) + self.b(k - 1))
                for k in range(lo, hi + 1)}
        diffs = {}
        for k in range(lo, hi):
            rows = [[0] * objs[k + 1].ngens for _ in range(objs[k].ngens)]
            off = self.b(k + 1) + self.h(k + 1)
            for i in range(self.b(k)):
                rows[i][off + i] = 1
            diffs[k] = Matrix(ring, rows, objs[k].ngens, objs[k + 1].ngens)
        super().__init__(ring, lo, hi, objs, diffs)

    def b(self, k):
        o = self.B.get(k)
        return o.ngens if o else 0

    def h(self, k):
        o = self.H.get(k)
        return o.ngens if o else 0

    def slices(self, k):
        """Index ranges of the three summands of ``A_k``."""
        b, h, b1 = self.b(k), self.h(k), self.b(k - 1)
        return (range(0, b), range(b, b + h), range(b + h, b + h + b1))


def canonical_split_complex(ring, lo, hi, B, H) -> SplitComplex:
    return SplitComplex(ring, lo, hi, B, H)


@dataclass
class SplitData:
    B: dict
    H: dict
    complex: SplitComplex
    iso: ChainMap      # A -> canonical
    inverse: ChainMap  # canonical -> A


def split_normal_form(A: ChainComplex) -> SplitData:
    """Strict isomorphism of ``A`` with its canonical split complex."""
    ring = A.ring
    if not find_splitting(A):
        raise NotSplit("complex admits no splitting maps")
    if not ring.is_field and any(A.obj(k).torsion for k in A.degrees()):
        raise NotSplit("split normal form over ZZ is implemented for torsion-free complexes")
    lo, hi = A.lo, A.hi
    Bb, L = {}, {}
    for k in A.degrees():
        L[k] = Matrix.zeros(ring, A.obj(k).ngens, 0)
        Bb[k] = Matrix.zeros(ring, A.obj(k).ngens, 0)
    for k in range(lo, hi):
        d = A.d(k).matrix
        if ring.is_field:
            _, piv, _ = rref(d)
            Bb[k] = d.submatrix(range(d.nrows), piv)
            I = Matrix.identity(ring, d.ncols)
            L[k + 1] = I.submatrix(range(d.ncols), piv)
        else:
            snf = smith_normal_form(d)
            r = snf.rank
            Uinv = invert(snf.U)
            Bb[k] = Uinv.block(0, d.nrows, 0, r)
            L[k + 1] = snf.V.block(0, d.ncols, 0, r)
    P, Hb = {}, {}
    for k in A.degrees():
        n = A.obj(k).ngens
        Zb = kernel_basis(A.d(k - 1).matrix) if k > lo else Matrix.identity(ring, n)
        r = Bb[k].ncols
        if ring.is_field:
            M = hstack([Bb[k], Zb])
            _, piv, _ = rref(M)
            Hb[k] = Zb.submatrix(range(n), [j - r for j in piv if j >= r])
        else:
            C = solve(Zb, Bb[k]).x
            snf = smith_normal_form(C)
            ZU = Zb @ invert(snf.U)
            Hb[k] = ZU.block(0, n, r, ZU.ncols)
        P[k] = hstack([Bb[k], Hb[k], L[k]], ring, n)
        if P[k].ncols != n:
            raise NotSplit(f"degree {k}: boundary, homology and lift ranks do not add up")
    Bobj = {k: CoeffObject(ring, Bb[k].ncols) for k in range(lo, hi)}
    Hobj = {k: CoeffObject(ring, Hb[k].ncols) for k in A.degrees()}
    S = SplitComplex(ring, lo, hi, Bobj, Hobj)
    inv = ChainMap(S, A, {k: P[k] for k in A.degrees()})
    iso = ChainMap(A, S, {k: invert(P[k]) for k in A.degrees()})
    if iso @ inv != ChainMap.identity(S) or inv @ iso != ChainMap.identity(A):
        raise AssertionError("split normal form failed to verify")
    return SplitData(Bobj, Hobj, S, iso, inv)
