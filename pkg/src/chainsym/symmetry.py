"""Symmetries of a chain complex: π0, π1, the action, and the block calculus.

On a canonical split complex ``S_k = B_k ⊕ H_k ⊕ B_{k-1}`` every chain
endomorphism has the block shape::

    f_k = [[phi_k, a_k, c_k    ],
           [0,     psi_k, b_k  ],
           [0,     0, phi_{k-1}]]

and its homotopy class only depends on ``psi``.  Self-homotopies ``g`` with
``d g + g d = 0`` have the analogous shape with (3,3) entry ``-rho_{k-1}``
and their class only depends on the ``xi`` block ``H_k -> H_{k+1}``.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from itertools import product
from math import prod

from .complexes import (ChainComplex, ChainMap, ComplexError, Homotopy, NotSplit, SplitComplex,
                        boundary, hom_complex, homology, split_normal_form, translate)
from .matrix import Matrix, block_matrix, invert, is_invertible
from .modules import CoeffObject
from .twocat import TwoMorphism, hcompose, vcompose

DEFAULT_GROUP_BOUND = 4096


def _zeros(ring, r, c):
    return Matrix.zeros(ring, r, c)


def _ident(ring, n):
    return Matrix.identity(ring, n)


def _blk(M, rows, cols):
    return M.submatrix(list(rows), list(cols))


# ---------------------------------------------------------------------------
# block forms

@dataclass
class EndoBlockForm:
    """Per degree ``(phi, psi, a, b, c)`` of an endomorphism of a split complex."""
    S: SplitComplex
    phi: dict
    psi: dict
    a: dict
    b: dict
    c: dict

    def __eq__(self, other):
        if not isinstance(other, EndoBlockForm):
            return NotImplemented
        return (self.phi == other.phi and self.psi == other.psi and self.a == other.a
                and self.b == other.b and self.c == other.c)

    def key(self):
        ks = list(self.S.degrees())
        return tuple((self.phi[k].rows, self.psi[k].rows, self.a[k].rows, self.b[k].rows,
                      self.c[k].rows) for k in ks)


def endo_blocks(S: SplitComplex, phi=None, psi=None, a=None, b=None, c=None) -> EndoBlockForm:
    """Fill in unspecified blocks with zeros (``phi``/``psi`` default to identities)."""
    R = S.ring
    ks = list(S.degrees())
    phi = dict(phi) if phi is not None else {k: _ident(R, S.b(k)) for k in ks}
    psi = dict(psi) if psi is not None else {k: _ident(R, S.h(k)) for k in ks}
    for k in ks:
        phi.setdefault(k, _ident(R, S.b(k)))
        psi.setdefault(k, _ident(R, S.h(k)))
    a = dict(a or {})
    b = dict(b or {})
    c = dict(c or {})
    for k in ks:
        a.setdefault(k, _zeros(R, S.b(k), S.h(k)))
        b.setdefault(k, _zeros(R, S.h(k), S.b(k - 1)))
        c.setdefault(k, _zeros(R, S.b(k), S.b(k - 1)))
    return EndoBlockForm(S, phi, psi, a, b, c)


def _phi_prev(form, k):
    S = form.S
    if k - 1 in form.phi:
        return form.phi[k - 1]
    return _zeros(S.ring, S.b(k - 1), S.b(k - 1))


def endo_from_blocks(form: EndoBlockForm) -> ChainMap:
    S = form.S
    R = S.ring
    comps = {}
    for k in S.degrees():
        b0, h0, b1 = S.b(k), S.h(k), S.b(k - 1)
        comps[k] = block_matrix([
            [form.phi[k], form.a[k], form.c[k]],
            [_zeros(R, h0, b0), form.psi[k], form.b[k]],
            [_zeros(R, b1, b0), _zeros(R, b1, h0), _phi_prev(form, k)],
        ])
    return ChainMap(S, S, comps)


def blocks_from_endo(f: ChainMap) -> EndoBlockForm:
    S = f.domain
    if not isinstance(S, SplitComplex) or f.codomain is not S and f.codomain != S:
        raise ComplexError("expected an endomorphism of a canonical split complex")
    phi, psi, a, b, c = {}, {}, {}, {}, {}
    for k in S.degrees():
        M = f[k].matrix
        iB, iH, iB1 = S.slices(k)
        if not (_blk(M, iH, iB).is_zero() and _blk(M, iB1, iB).is_zero()
                and _blk(M, iB1, iH).is_zero()):
            raise ComplexError(f"degree {k}: lower-left blocks of f are not zero")
        phi[k] = _blk(M, iB, iB)
        psi[k] = _blk(M, iH, iH)
        a[k] = _blk(M, iB, iH)
        b[k] = _blk(M, iH, iB1)
        c[k] = _blk(M, iB, iB1)
    form = EndoBlockForm(S, phi, psi, a, b, c)
    for k in S.degrees():
        M = f[k].matrix
        _, _, iB1 = S.slices(k)
        if _blk(M, iB1, iB1) != _phi_prev(form, k):
            raise ComplexError(f"degree {k}: (3,3) block differs from phi_{k - 1}")
    return form


def block_product(fp: EndoBlockForm, f: EndoBlockForm) -> EndoBlockForm:
    """Blocks of ``f' ∘ f``."""
    S = f.S
    out = {"phi": {}, "psi": {}, "a": {}, "b": {}, "c": {}}
    for k in S.degrees():
        p1 = _phi_prev(f, k)
        out["phi"][k] = fp.phi[k] @ f.phi[k]
        out["psi"][k] = fp.psi[k] @ f.psi[k]
        out["a"][k] = fp.phi[k] @ f.a[k] + fp.a[k] @ f.psi[k]
        out["b"][k] = fp.psi[k] @ f.b[k] + fp.b[k] @ p1
        out["c"][k] = fp.phi[k] @ f.c[k] + fp.a[k] @ f.b[k] + fp.c[k] @ p1
    return EndoBlockForm(S, **out)


@dataclass
class HomotopyBlockForm:
    """Per degree ``(alpha, beta, gamma, delta, epsilon)`` plus the forced entries."""
    alpha: dict
    beta: dict
    gamma: dict
    delta: dict
    epsilon: dict


def homotopy_witness(f: EndoBlockForm, fp: EndoBlockForm, free: HomotopyBlockForm | None = None
                     ) -> Homotopy:
    """Homotopy ``h`` with ``f' = f + d h + h d``, assuming ``psi == psi'``.

    ``free`` supplies the unconstrained blocks (zeros by default).
    """
    S = f.S
    R = S.ring
    ks = list(S.degrees())

    def get(dct, k, r, c):
        if free is None or k not in getattr(free, dct):
            return _zeros(R, r, c)
        return getattr(free, dct)[k]

    comps = {}
    for k in ks:
        bk, hk, bk1 = S.b(k), S.h(k), S.b(k - 1)
        bn, hn = S.b(k + 1), S.h(k + 1)
        alpha = get("alpha", k, bn, bk)
        alpha_prev = get("alpha", k - 1, bk, bk1)
        beta = get("beta", k, hn, hk)
        gamma = get("gamma", k, bn, hk)
        delta = get("delta", k, bn, bk1)
        eps = get("epsilon", k, hn, bk1)
        if k + 1 in fp.b:
            db = fp.b[k + 1] - f.b[k + 1]
        else:
            db = _zeros(R, hn, bk)
        comps[k] = block_matrix([
            [alpha, gamma, delta],
            [db, beta, eps],
            [fp.phi[k] - f.phi[k], fp.a[k] - f.a[k], fp.c[k] - f.c[k] - alpha_prev],
        ])
    return Homotopy(S, S, 1, comps)


def homotopic_endos(f: EndoBlockForm, fp: EndoBlockForm):
    """``(True, h)`` when ``psi == psi'`` with an explicit witness, else ``(False, None)``."""
    if any(f.psi[k] != fp.psi[k] for k in f.S.degrees()):
        return False, None
    h = homotopy_witness(f, fp)
    F = endo_from_blocks(f)
    Fp = endo_from_blocks(fp)
    if F + boundary(h) != Fp:
        raise AssertionError("block homotopy witness failed to verify")
    return True, h


def homotopy_blocks(h: Homotopy) -> HomotopyBlockForm:
    """Free blocks of a degree-1 self-homotopy of a split complex."""
    S = h.domain
    out = HomotopyBlockForm({}, {}, {}, {}, {})
    for k in S.degrees():
        M = h[k].matrix
        iB, iH, iB1 = S.slices(k)
        nB, nH, _ = S.slices(k + 1)
        out.alpha[k] = _blk(M, nB, iB)
        out.beta[k] = _blk(M, nH, iH)
        out.gamma[k] = _blk(M, nB, iH)
        out.delta[k] = _blk(M, nB, iB1)
        out.epsilon[k] = _blk(M, nH, iB1)
    return out


def two_homotopy_witness(h: Homotopy, hp: Homotopy) -> Homotopy | None:
    """Degree-2 ``h2`` with ``h' = h + d h2 - h2 d`` when the beta blocks agree."""
    S = h.domain
    R = S.ring
    if boundary(h) != boundary(hp):
        raise ValueError("homotopies connect different pairs of maps")
    x, y = homotopy_blocks(h), homotopy_blocks(hp)
    if any(x.beta[k] != y.beta[k] for k in S.degrees()):
        return None
    comps = {}
    for k in Homotopy.zero(S, S, 2).degrees():
        b2, h2 = S.b(k + 2), S.h(k + 2)
        hk, bk, bk1 = S.h(k), S.b(k), S.b(k - 1)
        if k + 1 in x.epsilon:
            de = x.epsilon[k + 1] - y.epsilon[k + 1]
        else:
            de = _zeros(R, h2, bk)
        comps[k] = block_matrix([
            [_zeros(R, b2, bk), _zeros(R, b2, hk), _zeros(R, b2, bk1)],
            [de, _zeros(R, h2, hk), _zeros(R, h2, bk1)],
            [y.alpha[k] - x.alpha[k], y.gamma[k] - x.gamma[k], y.delta[k] - x.delta[k]],
        ])
    h2 = Homotopy(S, S, 2, comps)
    if h + boundary(h2) != hp:
        raise AssertionError("block 2-homotopy witness failed to verify")
    return h2


def pseudoinverse(f: EndoBlockForm, variant: int = 1) -> EndoBlockForm:
    """``(id, psi^-1, 0, 0, 0)`` (variant 1) or ``(0, psi^-1, 0, 0, 0)`` (variant 0)."""
    S = f.S
    psi_inv = {}
    for k in S.degrees():
        if not is_invertible(f.psi[k]):
            raise ValueError(f"psi_{k} is not invertible, f is not a self-equivalence")
        psi_inv[k] = invert(f.psi[k]) if f.psi[k].nrows else f.psi[k]
    return section(S, psi_inv, variant)


def section(S: SplitComplex, psi: dict, variant: int = 1) -> EndoBlockForm:
    """``s1(psi) = (id, psi, 0, 0, 0)`` and ``s0(psi) = (0, psi, 0, 0, 0)``."""
    R = S.ring
    if variant == 1:
        phi = {k: _ident(R, S.b(k)) for k in S.degrees()}
    else:
        phi = {k: _zeros(R, S.b(k), S.b(k)) for k in S.degrees()}
    return endo_blocks(S, phi=phi, psi=psi)


def shift_from_xi(S: SplitComplex, xi: dict) -> Homotopy:
    """Self-homotopy with only the ``H_k -> H_{k+1}`` blocks ``xi_k`` nonzero."""
    R = S.ring
    comps = {}
    for k in Homotopy.zero(S, S, 1).degrees():
        M = [[0] * S.obj(k).ngens for _ in range(S.obj(k + 1).ngens)]
        X = xi.get(k)
        if X is not None:
            iB, iH, _ = S.slices(k)
            nB, nH, _ = S.slices(k + 1)
            for r, i in enumerate(nH):
                for c, j in enumerate(iH):
                    M[i][j] = X[r, c]
        comps[k] = Matrix(R, M, S.obj(k + 1).ngens, S.obj(k).ngens)
    return Homotopy(S, S, 1, comps)


def conjugate(psi: dict, xi: dict, S: SplitComplex) -> dict:
    """``(xi ◁ psi)_k = psi_{k+1}^-1 ∘ xi_k ∘ psi_k``."""
    out = {}
    for k, X in xi.items():
        P1 = psi.get(k + 1)
        if P1 is None or P1.nrows == 0 or psi[k].nrows == 0:
            out[k] = X
            continue
        out[k] = invert(P1) @ X @ psi[k]
    return out


# ---------------------------------------------------------------------------
# group-theoretic helpers

def gl_order(n: int, q: int) -> int:
    return prod(q ** n - q ** i for i in range(n))


def enumerate_gl(ring, n, bound=DEFAULT_GROUP_BOUND):
    """All invertible n x n matrices over a prime field, in lexicographic order."""
    p = ring.p
    if p ** (n * n) > bound * 64:
        raise ValueError(f"GL_{n}(F_{p}) is too large to enumerate")
    out = []
    for entries in product(range(p), repeat=n * n):
        M = Matrix(ring, [entries[i * n:(i + 1) * n] for i in range(n)], n, n)
        if is_invertible(M):
            out.append(M)
    return out


def _all_hom(ring, r, c):
    p = ring.p
    for entries in product(range(p), repeat=r * c):
        yield Matrix(ring, [entries[i * c:(i + 1) * c] for i in range(r)], r, c)


# ---------------------------------------------------------------------------
# generic path

@dataclass
class GenericPi0:
    """Unit group of H0(End(A)) with elements given by class coordinates."""
    ring_order: int
    elements: list            # coordinate tuples of unit classes
    identity: tuple
    table: dict | None        # (x, y) -> x·y, meaning the class of x ∘ y
    representatives: dict     # coords -> ChainMap
    inverse: dict

    @property
    def order(self):
        return len(self.elements)


class EndRing:
    """H0(End(A)) through structure constants on its generators."""

    def __init__(self, A: ChainComplex):
        self.A = A
        self.H = hom_complex(A, A)
        self.obj = self.H.homology_object(0)
        n = self.obj.ngens
        basis = [self.lift(tuple(int(i == j) for j in range(n))) for i in range(n)]
        self.const = {(i, j): self.classify(basis[i] @ basis[j])
                      for i in range(n) for j in range(n)}
        self.one = self.classify(ChainMap.identity(A))

    def classify(self, f: ChainMap):
        return self.obj.reduce(self.H.classify(f))

    def lift(self, x) -> ChainMap:
        return self.H.lift(x, 0)

    def mul(self, x, y):
        n = self.obj.ngens
        acc = [0] * n
        for i in range(n):
            if not x[i]:
                continue
            for j in range(n):
                if y[j]:
                    c = self.const[(i, j)]
                    s = x[i] * y[j]
                    for t in range(n):
                        acc[t] += s * c[t]
        return self.obj.reduce(acc)


def generic_pi0(A: ChainComplex, bound: int = 256):
    """Exhaustive unit group of H0(End(A)); ``None`` when infinite or above ``bound``."""
    R = EndRing(A)
    if not R.obj.is_finite() or R.obj.order() > bound:
        return None
    elems = [R.obj.reduce(x) for x in R.obj.enumerate_elements(bound)]
    one = R.one
    units, inverse = [], {}
    for x in elems:
        for y in elems:
            if R.mul(x, y) == one and R.mul(y, x) == one:
                units.append(x)
                inverse[x] = y
                break
    table = {(x, y): R.mul(x, y) for x in units for y in units}
    reps = {x: R.lift(x) for x in units}
    return GenericPi0(R.obj.order(), units, one, table, reps, inverse)


def generic_unit_count(A: ChainComplex, bound: int = 1 << 14) -> int | None:
    """Number of units of a finite H0(End(A)) over a prime field (left-multiplication rank)."""
    R = EndRing(A)
    if not A.ring.is_field or not R.obj.is_finite() or R.obj.order() > bound:
        return None
    n = R.obj.ngens
    ring = A.ring
    Lbasis = []
    for i in range(n):
        cols = [R.mul(tuple(int(t == i) for t in range(n)), tuple(int(t == j) for t in range(n)))
                for j in range(n)]
        Lbasis.append(Matrix.from_columns(ring, cols, n))
    count = 0
    for x in R.obj.enumerate_elements(bound):
        M = Matrix.zeros(ring, n, n)
        for i, xi in enumerate(x):
            if xi:
                M = M + Lbasis[i].scale(xi)
        if is_invertible(M):
            count += 1
    return count


class Pi1Data:
    """π1 = H0(Hom(A, A[1])) with lifts to self-homotopies of A."""

    def __init__(self, A: ChainComplex):
        self.A = A
        self.A1 = translate(A, 1)
        self.H = hom_complex(A, self.A1)
        self.obj = self.H.homology_object(0)

    def lift(self, x) -> Homotopy:
        g = self.H.lift(x, 0)
        return Homotopy(self.A, self.A, 1, {k: g[k].matrix for k in g.degrees()})

    def classify(self, h: Homotopy):
        g = ChainMap(self.A, self.A1, {k: h[k].matrix for k in h.degrees()}, check=False)
        return self.obj.reduce(self.H.classify(g))

    def elements(self, bound=DEFAULT_GROUP_BOUND):
        return [self.obj.reduce(x) for x in self.obj.enumerate_elements(bound)]


def generic_action(A: ChainComplex, f: ChainMap, fstar: ChainMap, h: Homotopy) -> Homotopy:
    """``f*[1] ∘ g ∘ f`` for a self-homotopy ``g`` viewed as a map ``A -> A[1]``."""
    return Homotopy(A, A, 1, {k: fstar[k + 1] @ h[k] @ f[k] for k in h.degrees()})


def induced_on_homology(f: ChainMap) -> dict:
    """``H_k(f)`` as matrices in the homology coordinates of domain and codomain."""
    out = {}
    for k in f.domain.degrees():
        src, tgt = homology(f.domain, k), homology(f.codomain, k)
        cols = []
        for i in range(src.H.ngens):
            z = src.lift(tuple(int(t == i) for t in range(src.H.ngens)))
            cols.append(tgt.project(f[k].matrix.apply(z)))
        out[k] = Matrix.from_columns(f.domain.ring, cols, tgt.H.ngens)
    return out


# ---------------------------------------------------------------------------
# split path and reports

@dataclass
class SplitSymmetry:
    """Symmetry data of a split complex, transported to its canonical form."""
    A: ChainComplex
    data: object      # SplitData

    @property
    def S(self) -> SplitComplex:
        return self.data.complex

    @property
    def h(self):
        return {k: self.S.h(k) for k in self.S.degrees()}

    def pi0_order(self):
        ring = self.A.ring
        if not hasattr(ring, "p"):
            return None if any(self.h.values()) else 1
        return prod(gl_order(n, ring.p) for n in self.h.values())

    def pi1_order(self):
        ring = self.A.ring
        dims = sum(self.S.h(k) * self.S.h(k + 1) for k in self.S.degrees())
        if not hasattr(ring, "p"):
            return None if dims else 1
        return ring.p ** dims

    def pi1_object(self):
        dims = sum(self.S.h(k) * self.S.h(k + 1) for k in self.S.degrees())
        ring = self.A.ring
        return CoeffObject(ring, dims)

    def to_canonical(self, f: ChainMap) -> ChainMap:
        return self.data.iso @ f @ self.data.inverse

    def from_canonical(self, f: ChainMap) -> ChainMap:
        return self.data.inverse @ f @ self.data.iso

    def psi_of(self, f: ChainMap) -> dict:
        return blocks_from_endo(self.to_canonical(f)).psi

    def xi_of(self, h: Homotopy) -> dict:
        iso, inv = self.data.iso, self.data.inverse
        S = self.S
        g = Homotopy(S, S, 1, {k: iso[k + 1] @ h[k] @ inv[k] for k in h.degrees()})
        beta = homotopy_blocks(g).beta
        return {k: beta[k] for k in S.degrees() if k + 1 <= S.hi}

    def f_psi(self, psi: dict) -> ChainMap:
        return endo_from_blocks(section(self.S, psi, 1))

    def lift_psi(self, psi: dict) -> ChainMap:
        return self.from_canonical(self.f_psi(psi))

    def lift_xi(self, xi: dict) -> Homotopy:
        iso, inv = self.data.iso, self.data.inverse
        g = shift_from_xi(self.S, xi)
        return Homotopy(self.A, self.A, 1, {k: inv[k + 1] @ g[k] @ iso[k] for k in g.degrees()})

    def pi0_elements(self, bound=DEFAULT_GROUP_BOUND):
        ring = self.A.ring
        ks = list(self.S.degrees())
        factors = [enumerate_gl(ring, self.S.h(k), bound) for k in ks]
        out = []
        for combo in product(*factors):
            out.append(dict(zip(ks, combo)))
            if len(out) > bound:
                raise ValueError("π0 is above the enumeration bound")
        return out

    def pi1_elements(self, bound=DEFAULT_GROUP_BOUND):
        ring = self.A.ring
        ks = [k for k in self.S.degrees() if k + 1 <= self.S.hi]
        total = self.pi1_order()
        if total is None or total > bound:
            raise ValueError("π1 is above the enumeration bound")
        spaces = [list(_all_hom(ring, self.S.h(k + 1), self.S.h(k))) for k in ks]
        return [dict(zip(ks, combo)) for combo in product(*spaces)]


def split_symmetry(A: ChainComplex) -> SplitSymmetry | None:
    try:
        return SplitSymmetry(A, split_normal_form(A))
    except NotSplit:
        return None


def pi0(A: ChainComplex, bound: int = 256) -> dict:
    """Description of π0; split complexes get the factored form."""
    sym = split_symmetry(A)
    out = {}
    if sym is not None:
        ring = A.ring
        out["path"] = "split"
        out["factors"] = [{"degree": k, "group": f"GL_{sym.S.h(k)}({ring!r})"}
                          for k in sym.S.degrees()]
        out["order"] = sym.pi0_order()
    gen = None
    if sym is None or (sym.pi0_order() or 0) <= bound:
        try:
            gen = generic_pi0(A, bound)
        except ValueError:
            gen = None
    if gen is not None:
        out.setdefault("path", "generic")
        out["generic"] = gen
        out.setdefault("order", gen.order)
    elif sym is None:
        out["path"] = "unresolved"
    return out


def pi1(A: ChainComplex) -> dict:
    P = Pi1Data(A)
    out = {"generic": P.obj, "data": P}
    sym = split_symmetry(A)
    if sym is not None:
        out["split"] = sym.pi1_object()
        out["agree"] = sym.pi1_object() == P.obj
    return out


def action(A: ChainComplex, psi: dict, xi: dict, sym: SplitSymmetry | None = None) -> dict:
    """Split-path action ``xi ◁ psi`` (conjugation)."""
    sym = sym or split_symmetry(A)
    if sym is None:
        raise NotSplit("the conjugation formula needs a split complex")
    return conjugate(psi, xi, sym.S)


def generic_action_on_classes(A, pi0g: GenericPi0, P: Pi1Data, x, u):
    f = pi0g.representatives[x]
    fstar = pi0g.representatives[pi0g.inverse[x]]
    return P.classify(generic_action(A, f, fstar, P.lift(u)))


@dataclass
class PostnikovWitness:
    status: str
    pairs_checked: int
    s1_multiplicative: bool
    s0_multiplicative: bool
    s1_unital: bool
    s0_unital: bool
    strict_closure: bool

    def to_json(self):
        return dict(self.__dict__)


def postnikov_witness(A: ChainComplex, bound: int = 64, seed: int = 0) -> PostnikovWitness:
    sym = split_symmetry(A)
    if sym is None:
        raise NotSplit("the monoid sections need a split complex")
    S = sym.S
    ring = A.ring
    if hasattr(ring, "p") and (sym.pi0_order() or 0) <= bound:
        elems = sym.pi0_elements()
        pairs = [(x, y) for x in elems for y in elems]
    else:
        rng = random.Random(seed)
        elems = [_random_psi(sym, rng) for _ in range(8)]
        pairs = [(x, y) for x in elems for y in elems]
    ok1 = ok0 = closure = True
    for x, y in pairs:
        xy = {k: x[k] @ y[k] for k in S.degrees()}
        for variant in (1, 0):
            lhs = block_product(section(S, x, variant), section(S, y, variant))
            if lhs != section(S, xy, variant):
                if variant == 1:
                    ok1 = False
                else:
                    ok0 = False
        if sym.f_psi(x) @ sym.f_psi(y) != sym.f_psi(xy):
            closure = False
    ident = {k: _ident(ring, S.h(k)) for k in S.degrees()}
    s1u = endo_from_blocks(section(S, ident, 1)) == ChainMap.identity(S)
    s0u = endo_from_blocks(section(S, ident, 0)) == ChainMap.identity(S)
    status = "trivial" if (ok1 and closure and s1u) else "unresolved"
    return PostnikovWitness(status, len(pairs), ok1, ok0, s1u, s0u, closure)


def _random_psi(sym, rng):
    ring = sym.A.ring
    out = {}
    for k in sym.S.degrees():
        n = sym.S.h(k)
        if hasattr(ring, "p"):
            from .generators import random_invertible
            out[k] = random_invertible(ring, rng, n)
        else:
            out[k] = _ident(ring, n)
    return out


# ---------------------------------------------------------------------------
# the equivalence with the semidirect-product model

@dataclass
class EquivalenceFunctor:
    sym: SplitSymmetry

    def on_object(self, psi: dict) -> ChainMap:
        return self.sym.f_psi(psi)

    def on_morphism(self, xi: dict, psi: dict) -> TwoMorphism:
        S = self.sym.S
        block = {k: psi[k + 1] @ X for k, X in xi.items()}
        return TwoMorphism(self.on_object(psi), shift_from_xi(S, block))

    def mu(self, psi, psip) -> TwoMorphism:
        """Structure 2-cell F(psi) ⊗ F(psi') => F(psi psi'), an identity."""
        return TwoMorphism(self.on_object(psi) @ self.on_object(psip))


def equivalence_functor(A: ChainComplex, bound: int = 64, seed: int = 0):
    """Build F and check it on small instances; returns ``(F, report)``."""
    sym = split_symmetry(A)
    if sym is None:
        raise NotSplit("the equivalence functor needs a split complex")
    F = EquivalenceFunctor(sym)
    S = sym.S
    ring = A.ring
    rng = random.Random(seed)
    ks = list(S.degrees())
    ident = {k: _ident(ring, S.h(k)) for k in ks}
    report = {"unit": F.on_object(ident) == ChainMap.identity(S)}
    finite = hasattr(ring, "p")
    if finite and (sym.pi0_order() or 0) <= bound:
        G = sym.pi0_elements()
    else:
        G = [_random_psi(sym, rng) for _ in range(6)]
    if finite and (sym.pi1_order() or 0) <= bound:
        Aset = sym.pi1_elements()
    else:
        Aset = [{k: _rand_hom(ring, rng, S.h(k + 1), S.h(k)) for k in ks if k + 1 <= S.hi}
                for _ in range(4)]
    strict = all(F.on_object(x) @ F.on_object(y) == F.on_object(_mul(x, y, ks))
                 for x in G for y in G)
    report["strict_monoidal"] = strict
    report["mu_identity"] = strict and all(F.mu(x, y).h.is_zero() for x in G[:4] for y in G[:4])
    # functoriality on 2-cells: vertical composite of F(xi) and F(xi') is F(xi + xi')
    vert = True
    for x in G[:6]:
        for u in Aset[:6]:
            for v in Aset[:6]:
                t = vcompose(F.on_morphism(v, x), F.on_morphism(u, x))
                uv = {k: u[k] + v[k] for k in u}
                if t.h != F.on_morphism(uv, x).h:
                    vert = False
    report["functorial"] = vert
    tens = True
    for x in G[:4]:
        for y in G[:4]:
            for u in Aset[:3]:
                for v in Aset[:3]:
                    lhs = hcompose(F.on_morphism(u, x), F.on_morphism(v, y))
                    w = conjugate(y, u, S)
                    rhs = F.on_morphism({k: w[k] + v[k] for k in u}, _mul(x, y, ks))
                    if lhs != rhs:
                        tens = False
    report["monoidal"] = tens
    # essential surjectivity: random self-equivalences are homotopic to some f_psi
    from .generators import random_chain_map
    ess = True
    if finite:
        for _ in range(6):
            f = random_chain_map(S, S, rng)
            form = blocks_from_endo(f)
            if all(is_invertible(form.psi[k]) for k in ks):
                ok, _w = homotopic_endos(form, section(S, form.psi, 1))
                ess = ess and ok
    report["essentially_surjective"] = ess
    # fully faithful on 2-cells: class of a self-homotopy of f_psi is fixed by beta
    ff = True
    if finite:
        P = Pi1Data(S)
        for x in G[:3]:
            fx = F.on_object(x)
            for _ in range(3):
                u = P.elements()[rng.randrange(P.obj.order())] if P.obj.ngens else ()
                h = P.lift(u) if P.obj.ngens else Homotopy.zero(S, S, 1)
                beta = homotopy_blocks(h).beta
                xi = {k: invert(x[k + 1]) @ beta[k] if x[k + 1].nrows else beta[k]
                      for k in ks if k + 1 <= S.hi}
                if TwoMorphism(fx, h) != F.on_morphism(xi, x):
                    ff = False
    report["fully_faithful"] = ff
    report["pass"] = all(v for v in report.values())
    return F, report


def _mul(x, y, ks):
    return {k: x[k] @ y[k] for k in ks}


def _rand_hom(ring, rng, r, c):
    if hasattr(ring, "p"):
        return Matrix(ring, [[rng.randrange(ring.p) for _ in range(c)] for _ in range(r)], r, c)
    return Matrix(ring, [[rng.randint(-3, 3) for _ in range(c)] for _ in range(r)], r, c)


def theorem_verify(A: ChainComplex, bound: int = 256, seed: int = 0) -> dict:
    """Compare split-path predictions with independently computed invariants."""
    report = {}
    sym = split_symmetry(A)
    P = Pi1Data(A)
    gen_pi0 = None
    try:
        gen_pi0 = generic_pi0(A, bound)
    except ValueError:
        gen_pi0 = None
    if sym is None:
        report["theorem"] = "not-applicable"
        report["reason"] = "complex is not split"
        report["pi0_generic_order"] = gen_pi0.order if gen_pi0 else None
        report["pi1_generic"] = str(P.obj)
        return report
    checks = {}
    split0, split1 = sym.pi0_order(), sym.pi1_order()
    report["pi0_split_order"] = split0
    report["pi1_split_order"] = split1
    g0 = gen_pi0.order if gen_pi0 else (generic_unit_count(A) if hasattr(A.ring, "p") else None)
    report["pi0_generic_order"] = g0
    if g0 is not None and split0 is not None:
        checks["pi0"] = g0 == split0
    g1 = P.obj.order() if P.obj.is_finite() else None
    report["pi1_generic_order"] = g1
    checks["pi1"] = P.obj == sym.pi1_object() if g1 is None else g1 == split1
    # action: generic conjugation f*[1] g f against psi^-1 xi psi
    rng = random.Random(seed)
    act_ok = True
    if hasattr(A.ring, "p"):
        G = sym.pi0_elements() if split0 <= 64 else [_random_psi(sym, rng) for _ in range(8)]
        U = sym.pi1_elements() if split1 <= 64 else \
            [sym.xi_of(P.lift(tuple(rng.randrange(A.ring.p) for _ in range(P.obj.ngens))))
             for _ in range(8)]
        for psi in G:
            f = sym.lift_psi(psi)
            fstar = sym.lift_psi({k: invert(m) if m.nrows else m for k, m in psi.items()})
            for xi in U:
                h = sym.lift_xi(xi)
                moved = generic_action(A, f, fstar, h)
                expected = sym.lift_xi(conjugate(psi, xi, sym.S))
                if P.classify(moved) != P.classify(expected):
                    act_ok = False
    checks["action"] = act_ok
    post = postnikov_witness(A, seed=seed)
    report["postnikov"] = post.status
    checks["postnikov"] = post.status == "trivial"
    report["checks"] = checks
    report["theorem"] = "pass" if all(checks.values()) else "fail"
    return report
