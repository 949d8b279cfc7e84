"""Brute-force ground truth over prime fields.

Everything here works on flattened coordinate vectors with a small
echelon reducer of its own, so that the numbers it produces do not go
through the Smith-form and lattice machinery used by the main engine.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from itertools import product
from math import log

from .complexes import ChainComplex, ChainMap, Homotopy, boundary, hom_complex, translate
from .matrix import Matrix
from .skeletal import (ConcreteFiniteTwoGroup, FiniteAbelianGroup, action_is_representative_independent,
                       cocycle_check, cohomologous_check, is_normalized, sinh_extract,
                       verify_equivalence)
from .twocat import TwoMorphism, hcompose


class BudgetExceeded(RuntimeError):
    pass


@dataclass(frozen=True)
class EnumerationBudget:
    max_dim: int | None = None      # solution-space dimension; None = default for p
    max_objects: int = 512
    max_sinh_work: int = 6000       # |G|^3 + |G|^2 |A|^2 + objects^2 |A| / |G|

    def dim_limit(self, p: int) -> int:
        if self.max_dim is not None:
            return self.max_dim
        if p == 2:
            return 14
        if p == 3:
            return 9
        return max(1, int(14 * log(2) / log(p)))


def _require_prime_field(A):
    ring = A.ring
    if not (ring.is_field and hasattr(ring, "p")):
        raise ValueError("the oracle needs a finite prime field backend")
    return ring.p


# ---------------------------------------------------------------------------
# coordinates and reduction

class _Coords:
    """Flattening of degree-``n`` families ``A_k -> B_{k+n}`` (row-major, ascending k)."""

    def __init__(self, A, B, n):
        self.A, self.B, self.n = A, B, n
        self.ring = A.ring
        self.ks = list(Homotopy.zero(A, B, n).degrees())
        self.shapes = [(B.obj(k + n).ngens, A.obj(k).ngens) for k in self.ks]
        self.size = sum(r * c for r, c in self.shapes)

    def to_family(self, vec, as_homotopy=False):
        out, pos = {}, 0
        for k, (r, c) in zip(self.ks, self.shapes):
            rows = [list(vec[pos + i * c: pos + (i + 1) * c]) for i in range(r)]
            out[k] = Matrix(self.ring, rows, r, c)
            pos += r * c
        if self.n == 0 and not as_homotopy:
            return ChainMap(self.A, self.B, out, check=False)
        return Homotopy(self.A, self.B, self.n, out)

    def flatten(self, h):
        out = []
        for k in self.ks:
            for row in h[k].matrix.rows:
                out.extend(int(x) for x in row)
        return tuple(out)

    def units(self):
        for i in range(self.size):
            yield tuple(int(j == i) for j in range(self.size))


class _Reducer:
    """Echelon basis of a subspace of F_p^n with optional preimage tags."""

    def __init__(self, p, n, ntag=0):
        self.p, self.n, self.ntag = p, n, ntag
        self.rows = []   # (pivot, vector, tag), sorted by pivot

    def _reduce(self, v, tag):
        p = self.p
        v, tag = list(v), list(tag)
        coeffs = []
        for piv, row, rtag in self.rows:
            c = v[piv] % p
            if c:
                for i in range(self.n):
                    v[i] = (v[i] - c * row[i]) % p
                for i in range(self.ntag):
                    tag[i] = (tag[i] - c * rtag[i]) % p
            coeffs.append(c)
        return [x % p for x in v], tag

    def add(self, v, tag=()):
        """Insert ``v``; returns None if it was new, else the kernel tag it produced."""
        tag = tuple(tag) or (0,) * self.ntag
        r, t = self._reduce(v, tag)
        nz = [i for i, x in enumerate(r) if x]
        if not nz:
            return tuple(t)
        piv = nz[0]
        inv = pow(r[piv], self.p - 2, self.p)
        r = [(x * inv) % self.p for x in r]
        t = [(x * inv) % self.p for x in t]
        self.rows.append((piv, r, t))
        self.rows.sort(key=lambda e: e[0])
        return None

    def canonical(self, v):
        return tuple(self._reduce(v, (0,) * self.ntag)[0])

    def preimage(self, v):
        """Tag combination hitting ``v`` (negated reduction), or None if ``v`` is outside."""
        r, t = self._reduce(v, (0,) * self.ntag)
        if any(r):
            return None
        return tuple((-x) % self.p for x in t)

    @property
    def dim(self):
        return len(self.rows)


def _image_reducer(p, src: _Coords, tgt: _Coords):
    """Image of the Hom-complex boundary ``src -> tgt`` with preimage tags; also the kernel."""
    R = _Reducer(p, tgt.size, src.size)
    kernel = []
    for e in src.units():
        img = tgt.flatten(boundary(src.to_family(e, as_homotopy=True)))
        k = R.add(img, e)
        if k is not None:
            kernel.append(k)
    return R, kernel


def _span(p, basis):
    for coeffs in product(range(p), repeat=len(basis)):
        v = [0] * (len(basis[0]) if basis else 0)
        for c, b in zip(coeffs, basis):
            if c:
                for i, x in enumerate(b):
                    v[i] = (v[i] + c * x) % p
        yield tuple(v)


# ---------------------------------------------------------------------------
# enumeration

class HomOracle:
    """Chain maps ``A -> B`` and their homotopy classes, by enumeration."""

    def __init__(self, A: ChainComplex, B: ChainComplex, budget: EnumerationBudget | None = None):
        self.p = _require_prime_field(A)
        self.A, self.B = A, B
        self.budget = budget or EnumerationBudget()
        self.C0 = _Coords(A, B, 0)
        self.Cm1 = _Coords(A, B, -1)
        self.C1 = _Coords(A, B, 1)
        _, self.map_basis = _image_reducer(self.p, self.C0, self.Cm1)
        self.N, _ = _image_reducer(self.p, self.C1, self.C0)

    @property
    def dim(self):
        return len(self.map_basis)

    def maps(self) -> list:
        limit = self.budget.dim_limit(self.p)
        if self.dim > limit:
            raise BudgetExceeded(f"chain-map space has dimension {self.dim} > {limit}")
        return sorted(_span(self.p, self.map_basis)) if self.map_basis else [(0,) * self.C0.size]

    def chain_map(self, vec) -> ChainMap:
        return self.C0.to_family(vec)

    def class_of(self, vec):
        return self.N.canonical(vec)

    def classes(self) -> dict:
        out = {}
        for v in self.maps():
            out.setdefault(self.class_of(v), []).append(v)
        return out


def enumerate_chain_maps(A, B, budget: EnumerationBudget | None = None) -> list:
    H = HomOracle(A, B, budget)
    return [H.chain_map(v) for v in H.maps()]


def enumerate_classes(A, B, budget: EnumerationBudget | None = None) -> list:
    """``[(representative, members)]``; the representative is the reduced member."""
    H = HomOracle(A, B, budget)
    return [(H.chain_map(k), [H.chain_map(v) for v in vs])
            for k, vs in sorted(H.classes().items())]


# ---------------------------------------------------------------------------
# Equiv(A)

class EquivTwoGroup(ConcreteFiniteTwoGroup):
    """Self-equivalences of ``A`` and homotopy classes of homotopies between them.

    Objects are indices into the lexicographically sorted list of
    self-equivalences; a morphism is ``(src, tgt, key)`` with ``key`` the
    reduced coordinate vector of a connecting homotopy modulo boundaries
    of degree-2 homotopies.  Tensor is composition, ``x ⊗ y = x ∘ y``.
    """

    strict = True

    def __init__(self, A: ChainComplex, budget: EnumerationBudget | None = None,
                 variant: str = "A"):
        self.A = A
        self.variant = variant
        self.budget = budget or EnumerationBudget()
        self.end = HomOracle(A, A, self.budget)
        p = self.p = self.end.p
        self.C0, self.C1, self.C2 = self.end.C0, self.end.C1, _Coords(A, A, 2)
        # D1 with preimages, its kernel K1, and the degree-2 boundaries D2
        self.D1, K1 = _image_reducer(p, self.C1, self.C0)
        self.D2, _ = _image_reducer(p, self.C2, self.C1)
        comp = _Reducer(p, self.C1.size)
        for row in self.D2.rows:
            comp.add(row[1])
        self.pi1_basis = []
        for v in K1:
            if comp.add(v) is None:
                self.pi1_basis.append(self.D2.canonical(v))
        self._build_objects()
        self._cm = {}
        self._tensor = {}
        self._tensor_mor = {}

    # classes and objects ---------------------------------------------------

    def _build_objects(self):
        end = self.end
        maps = end.maps()
        classes = {}
        for v in maps:
            classes.setdefault(end.class_of(v), []).append(v)
        self.class_reps = sorted(classes)
        ident = end.class_of(self.C0.flatten(ChainMap.identity(self.A)))
        self.identity_class = ident
        # in a finite monoid x is a unit iff some power of x is the identity
        inverse = {}
        for x in self.class_reps:
            prev, cur, seen = ident, x, set()
            while cur not in seen:
                if cur == ident:
                    inverse[x] = prev
                    break
                seen.add(cur)
                prev, cur = cur, end.class_of(self._compose_vec(cur, x))
        self.unit_classes = [x for x in self.class_reps if x in inverse]
        self.class_inverse = inverse
        objs = sorted(v for v in maps if end.class_of(v) in inverse)
        if len(objs) > self.budget.max_objects:
            raise BudgetExceeded(f"{len(objs)} self-equivalences > {self.budget.max_objects}")
        self.obj_vecs = objs
        self.index = {v: i for i, v in enumerate(objs)}
        self.obj_class = [end.class_of(v) for v in objs]
        self._unit = self.index[self.C0.flatten(ChainMap.identity(self.A))]

    def class_mul(self, x, y):
        return self.end.class_of(self._compose_vec(x, y))

    def _compose_vec(self, x, y):
        """Flattened ``x ∘ y`` for flattened endomorphisms."""
        p = self.p
        out, pos = [], 0
        for r, c in self.C0.shapes:
            X = [x[pos + i * c: pos + (i + 1) * c] for i in range(r)]
            Y = [y[pos + i * c: pos + (i + 1) * c] for i in range(r)]
            for i in range(r):
                for j in range(c):
                    out.append(sum(X[i][t] * Y[t][j] for t in range(c)) % p)
            pos += r * c
        return tuple(out)

    def chain_map(self, i) -> ChainMap:
        if i not in self._cm:
            self._cm[i] = self.C0.to_family(self.obj_vecs[i])
        return self._cm[i]

    def homotopy(self, key) -> Homotopy:
        return self.C1.to_family(key)

    # interface -------------------------------------------------------------

    def objects(self):
        return list(range(len(self.obj_vecs)))

    def unit(self):
        return self._unit

    def class_key(self, x):
        return self.obj_class[x]

    def _key(self, h):
        return self.D2.canonical(h)

    def hom(self, x, y):
        diff = tuple((a - b) % self.p for a, b in zip(self.obj_vecs[y], self.obj_vecs[x]))
        h0 = self.D1.preimage(diff)
        if h0 is None:
            return []
        out = []
        for v in _span(self.p, self.pi1_basis) if self.pi1_basis else [(0,) * self.C1.size]:
            out.append((x, y, self._key(tuple((a + b) % self.p for a, b in zip(h0, v)))))
        return sorted(out)

    def first_morphism(self, x, y):
        diff = tuple((a - b) % self.p for a, b in zip(self.obj_vecs[y], self.obj_vecs[x]))
        h0 = self.D1.preimage(diff)
        return None if h0 is None else (x, y, self._key(h0))

    def src(self, m):
        return m[0]

    def tgt(self, m):
        return m[1]

    def identity(self, x):
        return (x, x, (0,) * self.C1.size)

    def compose(self, m2, m1):
        if m1[1] != m2[0]:
            raise ValueError("morphisms are not composable")
        # reduced keys span a complement of the degree-2 boundaries, so sums stay reduced
        p = self.p
        return (m1[0], m2[1], tuple((a + b) % p for a, b in zip(m1[2], m2[2])))

    def inverse(self, m):
        p = self.p
        return (m[1], m[0], tuple((-a) % p for a in m[2]))

    def tensor(self, x, y):
        if (x, y) not in self._tensor:
            v = self._compose_vec(self.obj_vecs[x], self.obj_vecs[y])
            self._tensor[x, y] = self.index[v]
        return self._tensor[x, y]

    def two_morphism(self, m) -> TwoMorphism:
        return TwoMorphism(self.chain_map(m[0]), self.homotopy(m[2]))

    def tensor_mor(self, m, mp):
        if (m, mp) not in self._tensor_mor:
            t = hcompose(self.two_morphism(m), self.two_morphism(mp), self.variant)
            key = self._key(self.C1.flatten(t.h))
            self._tensor_mor[m, mp] = (self.tensor(m[0], mp[0]), self.tensor(m[1], mp[1]), key)
        return self._tensor_mor[m, mp]

    def pi1_group(self):
        A = FiniteAbelianGroup([self.p] * len(self.pi1_basis))
        I = self._unit
        units = []
        for a in A.elements():
            coords = A.coords(a)
            v = [0] * self.C1.size
            for c, b in zip(coords, self.pi1_basis):
                for i, x in enumerate(b):
                    v[i] = (v[i] + c * x) % self.p
            units.append((I, I, self._key(tuple(v))))
        return A, units

    def left_dual(self, x):
        cache = self.__dict__.setdefault("_ldual", {})
        if x not in cache:
            inv_cls = self.class_inverse[self.obj_class[x]]
            y = min(i for i, c in enumerate(self.obj_class) if c == inv_cls)
            cache[x] = (y, self.first_morphism(self.tensor(y, x), self._unit))
        return cache[x]

    def right_dual(self, x):
        cache = self.__dict__.setdefault("_rdual", {})
        if x not in cache:
            inv_cls = self.class_inverse[self.obj_class[x]]
            y = min(i for i, c in enumerate(self.obj_class) if c == inv_cls)
            cache[x] = (y, self.first_morphism(self.tensor(x, y), self._unit))
        return cache[x]

    # summaries -------------------------------------------------------------

    @property
    def pi0_order(self):
        return len(self.unit_classes)

    @property
    def pi1_order(self):
        return self.p ** len(self.pi1_basis)


def build_equiv_2group(A: ChainComplex, budget: EnumerationBudget | None = None,
                       variant: str = "A") -> EquivTwoGroup:
    return EquivTwoGroup(A, budget, variant)


# ---------------------------------------------------------------------------
# cross-check

def _dump_complex(A):
    from .io import complex_to_json
    return complex_to_json(A)


def _gl(n, p):
    out = 1
    for i in range(n):
        out *= p ** n - p ** i
    return out


def cross_check(A: ChainComplex, budget: EnumerationBudget | None = None, seed: int = 0,
                shifts=(1, 2)) -> dict:
    """Compare the oracle against the algebraic engine; report per-check verdicts."""
    from .complexes import homology
    from .symmetry import conjugate, split_symmetry

    p = _require_prime_field(A)
    E = build_equiv_2group(A, budget)
    checks, counts, bad = {}, {}, []

    def record(name, ok, payload=None):
        checks[name] = bool(ok)
        if not ok:
            bad.append({"check": name, **(payload or {})})

    h = {k: homology(A, k).H.ngens for k in A.degrees()}
    pi0_expected = 1
    for k in A.degrees():
        pi0_expected *= _gl(h[k], p)
    pi1_expected = p ** sum(h[k] * h.get(k + 1, 0) for k in A.degrees())
    counts.update(pi0_oracle=E.pi0_order, pi1_oracle=E.pi1_order, pi0_formula=pi0_expected,
                  pi1_formula=pi1_expected, objects=len(E.obj_vecs),
                  chain_maps=p ** E.end.dim, end_classes=len(E.class_reps))
    record("pi0_order", E.pi0_order == pi0_expected,
           {"oracle": E.pi0_order, "expected": pi0_expected})
    record("pi1_order", E.pi1_order == pi1_expected,
           {"oracle": E.pi1_order, "expected": pi1_expected})

    # chain-map and class counts against the algebraic hom complex
    H0 = hom_complex(A, A)
    alg_end = 1
    for q in H0.homology(0).orders:
        alg_end *= q or p
    record("end_class_count", len(E.class_reps) == alg_end,
           {"oracle": len(E.class_reps), "algebraic": alg_end})
    for n in shifts:
        B = translate(A, n)
        Ho = HomOracle(A, B, E.budget)
        oracle_n = len(Ho.classes())
        alg = 1
        for q in hom_complex(A, B).homology(0).orders:
            alg *= q or p
        formula = p ** sum(h[k] * h.get(k + n, 0) for k in A.degrees())
        counts[f"shift_{n}_classes"] = oracle_n
        record(f"shift_{n}_class_count", oracle_n == alg == formula,
               {"oracle": oracle_n, "algebraic": alg, "formula": formula})

    # strict associativity and unitality of the tensor
    reps = [min(i for i, c in enumerate(E.obj_class) if c == u) for u in E.unit_classes]
    A1, units = E.pi1_group()
    mors = [E.tensor_mor(E.identity(x), u) for x in reps[:3] for u in units[:3]]
    assoc = all(E.tensor_mor(E.tensor_mor(a, b), c) == E.tensor_mor(a, E.tensor_mor(b, c))
                for a in mors for b in mors for c in mors)
    I = E.identity(E.unit())
    unital = all(E.tensor_mor(I, a) == a == E.tensor_mor(a, I) for a in mors)
    record("tensor_strict", assoc and unital)

    # action: oracle γ_x^-1 δ_x against conjugation in split coordinates
    sym = split_symmetry(A)
    index = {u: i for i, u in enumerate(units)}
    act_ok = True
    for x in reps:
        psi = sym.psi_of(E.chain_map(x))
        for a, u in enumerate(units):
            oracle = index.get(E.gamma_inv(x, E.delta(x, u)))
            conj = conjugate(psi, sym.xi_of(E.homotopy(u[2])), sym.S)
            expected = index.get((E.unit(), E.unit(), E._key(E.C1.flatten(sym.lift_xi(conj)))))
            if oracle is None or oracle != expected:
                act_ok = False
                bad.append({"check": "action", "object": list(E.obj_vecs[x]), "pi1": a,
                            "oracle": oracle, "conjugation": expected})
    record("action", act_ok)
    gamma_ok = all(E.gamma_inv(x, E.gamma(x, u)) == u for x in reps for u in units)
    record("gamma_round_trip", gamma_ok)

    G, n1 = E.pi0_order, E.pi1_order
    nobj = len(E.obj_vecs)
    work = G ** 3 + G ** 2 * n1 ** 2 + nobj * nobj * n1 // G
    counts["sinh_work"] = work
    if work <= E.budget.max_sinh_work:
        res = sinh_extract(E)
        t = res.two_group
        record("sinh_action_matches", all(
            t.act(res.class_of[x], a) == index[E.gamma_inv(x, E.delta(x, u))]
            for x in reps for a, u in enumerate(units)))
        record("action_representative_independent", action_is_representative_independent(E, res))
        record("gamma_bijective_all_objects", all(
            len({E.gamma(x, u) for u in units}) == len(units) ==
            len({E.delta(x, u) for u in units}) for x in E.objects()))
        record("cocycle", cocycle_check(t.G, t.A, t.act_table, t.z_table))
        record("normalized", is_normalized(t.G, t.z_table))
        zero = [[[0] * t.G.order for _ in t.G.elements()] for _ in t.G.elements()]
        ex = cohomologous_check(t.G, t.A, t.act_table, t.z_table, zero, method="exhaustive")
        lin = cohomologous_check(t.G, t.A, t.act_table, t.z_table, zero)
        counts["coboundary_search"] = {True: "witness found", False: "no witness",
                                       None: "undecided at bound"}[ex.verdict]
        record("z_cohomologous_to_zero", lin.verdict is True and ex.verdict is not False)
        ver = verify_equivalence(res, E)
        for name in ("F_star_F_identity", "iota_natural", "coherence", "mu_natural"):
            record(name, ver[name])
        counts["sinh"] = "checked"
    else:
        counts["sinh"] = "above sinh budget"
    ok = all(checks.values())
    report = {"pass": ok, "checks": checks, "counts": counts, "seed": seed}
    if not ok:
        report["counterexamples"] = bad[:5]
        report["complex"] = _dump_complex(A)
    return report


def random_cross_check(ring, seed: int, length: int = 3, max_dim: int = 3,
                       budget: EnumerationBudget | None = None) -> dict:
    from .generators import random_split_complex
    A = random_split_complex(ring, random.Random(seed), length=length, max_dim=max_dim)
    return cross_check(A, budget, seed)
