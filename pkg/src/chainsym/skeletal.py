"""Finite 2-groups in semidirect-product form, cocycles, and Sinh extraction.

Conventions.  ``act(g, a)`` is the *right* action ``a ◁ g``, so
``act(g h, a) = act(h, act(g, a))``.  Morphisms of the skeletal model are
pairs ``(a, g)``; composition adds ``a``, and the tensor product is::

    (a, g) ⊗ (a', g') = (act(g', a) + a', g g')

with associator ``(z(g, g', g''), g g' g'')``.  The pentagon then reads

    z(g2,g3,g4) - z(g1g2,g3,g4) + z(g1,g2g3,g4) - z(g1,g2,g3g4) + act(g4, z(g1,g2,g3)) = 0.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from itertools import product
from math import prod

from .arith import ZZ, PrimeField
from .matrix import Matrix, Unsolvable, solve_mod


# ---------------------------------------------------------------------------
# finite groups

class FiniteGroup:
    """A group given by its multiplication table on ``0..n-1``."""

    def __init__(self, table, labels=None, check=True):
        self.table = [list(r) for r in table]
        n = len(self.table)
        self.n = n
        self.labels = list(labels) if labels is not None else list(range(n))
        if any(len(r) != n for r in self.table):
            raise ValueError("multiplication table is not square")
        ids = [e for e in range(n) if all(self.table[e][x] == x == self.table[x][e]
                                          for x in range(n))]
        if not ids:
            raise ValueError("no identity element")
        self.e = ids[0]
        self._inv = {}
        for x in range(n):
            inv = [y for y in range(n) if self.table[x][y] == self.e]
            if not inv:
                raise ValueError(f"element {x} has no inverse")
            self._inv[x] = inv[0]
        if check:
            for x, y, w in product(range(n), repeat=3):
                if self.table[self.table[x][y]][w] != self.table[x][self.table[y][w]]:
                    raise ValueError("multiplication is not associative")

    def mul(self, x, y):
        return self.table[x][y]

    def inv(self, x):
        return self._inv[x]

    @property
    def order(self):
        return self.n

    def elements(self):
        return range(self.n)

    @classmethod
    def cyclic(cls, n):
        return cls([[(i + j) % n for j in range(n)] for i in range(n)])

    @classmethod
    def trivial(cls):
        return cls([[0]])

    def to_json(self):
        return self.table


class FiniteAbelianGroup:
    """``⊕ Z/orders[i]``; element serials are mixed-radix (first coordinate fastest)."""

    def __init__(self, orders):
        self.orders = tuple(int(q) for q in orders)
        if any(q < 2 for q in self.orders):
            raise ValueError("cyclic factors must have order >= 2")
        self.n = prod(self.orders) if self.orders else 1

    @property
    def order(self):
        return self.n

    def elements(self):
        return range(self.n)

    def coords(self, i):
        out = []
        for q in self.orders:
            out.append(i % q)
            i //= q
        return tuple(out)

    def index(self, coords):
        i, mult = 0, 1
        for c, q in zip(coords, self.orders):
            i += (c % q) * mult
            mult *= q
        return i

    def add(self, x, y):
        return self.index(tuple(a + b for a, b in zip(self.coords(x), self.coords(y))))

    def sub(self, x, y):
        return self.index(tuple(a - b for a, b in zip(self.coords(x), self.coords(y))))

    def neg(self, x):
        return self.index(tuple(-a for a in self.coords(x)))

    def sum(self, items):
        acc = [0] * len(self.orders)
        for x in items:
            for i, c in enumerate(self.coords(x)):
                acc[i] += c
        return self.index(acc)

    zero = 0

    def generator(self, i):
        return self.index(tuple(int(j == i) for j in range(len(self.orders))))

    def to_json(self):
        return list(self.orders)


# ---------------------------------------------------------------------------
# the skeletal model

class SkeletalTwoGroup:
    def __init__(self, G: FiniteGroup, A: FiniteAbelianGroup, act, z=None, check=True):
        self.G, self.A = G, A
        self.act_table = [list(r) for r in act]
        n = G.order
        if z is None:
            z = [[[0] * n for _ in range(n)] for _ in range(n)]
        self.z_table = [[list(r) for r in m] for m in z]
        if check:
            if not is_action(G, A, self.act_table):
                raise ValueError("act is not a right action by automorphisms")
            if not is_normalized(G, self.z_table):
                raise ValueError("z is not normalized")
            if not cocycle_check(G, A, self.act_table, self.z_table):
                raise ValueError("z is not a 3-cocycle")

    def act(self, g, a):
        return self.act_table[g][a]

    def z(self, g1, g2, g3):
        return self.z_table[g1][g2][g3]

    def to_json(self):
        return {"G": self.G.to_json(), "A": self.A.to_json(), "action": self.act_table,
                "z": self.z_table}

    @classmethod
    def from_json(cls, obj, check=True):
        extra = set(obj) - {"G", "A", "action", "z"}
        if extra:
            raise ValueError(f"unknown fields {sorted(extra)}")
        G = FiniteGroup(obj["G"])
        A = FiniteAbelianGroup(obj["A"])
        return cls(G, A, obj["action"], obj.get("z"), check=check)

    @classmethod
    def trivial_action(cls, G, A, z=None, check=True):
        return cls(G, A, [list(A.elements()) for _ in G.elements()], z, check)


def is_action(G, A, act) -> bool:
    for g in G.elements():
        if act[g][A.zero] != A.zero:
            return False
        for a in A.elements():
            for b in A.elements():
                if act[g][A.add(a, b)] != A.add(act[g][a], act[g][b]):
                    return False
    if any(act[G.e][a] != a for a in A.elements()):
        return False
    for g in G.elements():
        for h in G.elements():
            gh = G.mul(g, h)
            if any(act[gh][a] != act[h][act[g][a]] for a in A.elements()):
                return False
    return True


def is_normalized(G, z) -> bool:
    e = G.e
    return all(z[g1][g2][g3] == 0 for g1, g2, g3 in product(G.elements(), repeat=3)
               if e in (g1, g2, g3))


def cocycle_defect(G, A, act, z, g1, g2, g3, g4):
    m = G.mul
    return A.sum([z[g2][g3][g4], A.neg(z[m(g1, g2)][g3][g4]), z[g1][m(g2, g3)][g4],
                  A.neg(z[g1][g2][m(g3, g4)]), act[g4][z[g1][g2][g3]]])


def cocycle_check(G, A, act, z) -> bool:
    return all(cocycle_defect(G, A, act, z, *gs) == A.zero
               for gs in product(G.elements(), repeat=4))


def coboundary_of(G, A, act, c):
    """``(δc)(g1,g2,g3) = c(g2,g3) - c(g1g2,g3) + c(g1,g2g3) - act(g3, c(g1,g2))``."""
    n = G.order
    m = G.mul
    out = [[[0] * n for _ in range(n)] for _ in range(n)]
    for g1, g2, g3 in product(range(n), repeat=3):
        out[g1][g2][g3] = A.sum([c[g2][g3], A.neg(c[m(g1, g2)][g3]), c[g1][m(g2, g3)],
                                 A.neg(act[g3][c[g1][g2]])])
    return out


def _action_matrices(A, act, G):
    """Integer matrices of ``act(g, -)`` on the coordinates of ``A``."""
    r = len(A.orders)
    mats = []
    for g in G.elements():
        cols = [A.coords(act[g][A.generator(i)]) for i in range(r)]
        mats.append([[cols[j][i] for j in range(r)] for i in range(r)])
    return mats


@dataclass
class CohomologyVerdict:
    verdict: bool | None   # None = undecided at the configured bound
    witness: list | None = None
    method: str = "linear"

    def __bool__(self):
        return bool(self.verdict)


def cohomologous_check(G, A, act, z1, z2, method: str = "linear",
                       bound: int = 1 << 20) -> CohomologyVerdict:
    """Decide whether ``z1 - z2 = δc`` for a normalized 2-cochain ``c``.

    ``linear`` solves the system exactly over the coordinates of ``A`` (a
    proof either way).  ``exhaustive`` walks the tree of normalized cochains
    depth first, cutting a branch as soon as an equation whose cells are all
    assigned fails; it answers ``None`` after visiting ``bound`` nodes.
    """
    n = G.order
    others = [g for g in G.elements() if g != G.e]
    pairs = [(g1, g2) for g1 in others for g2 in others]
    diff = [[[A.sub(z1[a][b][c], z2[a][b][c]) for c in range(n)] for b in range(n)]
            for a in range(n)]

    def assemble(values):
        c = [[0] * n for _ in range(n)]
        for (g1, g2), v in zip(pairs, values):
            c[g1][g2] = v
        return c

    if method == "exhaustive":
        return _exhaustive_search(G, A, act, diff, pairs, assemble, bound)
    if method != "linear":
        raise ValueError(f"unknown method {method!r}")
    r = len(A.orders)
    if r == 0 or not pairs:
        ok = all(x == A.zero for plane in diff for row in plane for x in row)
        return CohomologyVerdict(ok, assemble([0] * len(pairs)) if ok else None)
    mats = _action_matrices(A, act, G)
    var = {p: i for i, p in enumerate(pairs)}
    m = G.mul
    rows, rhs, moduli = [], [], []
    nvars = len(pairs) * r
    for g1, g2, g3 in product(range(n), repeat=3):
        target = A.coords(diff[g1][g2][g3])
        for t in range(r):
            row = [0] * nvars
            for sign, p, mat in ((1, (g2, g3), None), (-1, (m(g1, g2), g3), None),
                                 (1, (g1, m(g2, g3)), None), (-1, (g1, g2), mats[g3])):
                if p not in var:
                    continue
                base = var[p] * r
                if mat is None:
                    row[base + t] += sign
                else:
                    for s in range(r):
                        row[base + s] += sign * mat[t][s]
            rows.append(row)
            rhs.append(target[t])
            moduli.append(A.orders[t])
    seen, keep = set(), []
    for i, (row, b, q) in enumerate(zip(rows, rhs, moduli)):
        key = (tuple(x % q for x in row), b % q, q)
        if key not in seen and (any(key[0]) or key[1]):
            seen.add(key)
            keep.append(i)
    rows = [rows[i] for i in keep] or [[0] * nvars]
    rhs = [rhs[i] for i in keep] or [0]
    moduli = [moduli[i] for i in keep] or [A.orders[0]]
    qs = set(A.orders)
    if len(qs) == 1 and _is_prime(next(iter(qs))):
        F = PrimeField(next(iter(qs)))
        x = solve_mod(Matrix(F, rows, len(rows), nvars), rhs, [0] * len(rows))
    else:
        x = solve_mod(Matrix(ZZ, rows, len(rows), nvars), rhs, moduli)
    if isinstance(x, Unsolvable):
        return CohomologyVerdict(False, None)
    values = [A.index(tuple(x[var[p] * r + t] for t in range(r))) for p in pairs]
    c = assemble(values)
    if coboundary_of(G, A, act, c) != diff:
        raise AssertionError("coboundary witness failed to verify")
    return CohomologyVerdict(True, c)


def _exhaustive_search(G, A, act, diff, pairs, assemble, bound):
    n = G.order
    m = G.mul
    pos = {p: i for i, p in enumerate(pairs)}
    # each equation is checked once its last unknown cell is assigned
    buckets = [[] for _ in pairs]
    fixed_ok = True
    for g1, g2, g3 in product(range(n), repeat=3):
        cells = [(g2, g3), (m(g1, g2), g3), (g1, m(g2, g3)), (g1, g2)]
        idx = [pos[c] for c in cells if c in pos]
        if idx:
            buckets[max(idx)].append((g1, g2, g3, cells))
        elif diff[g1][g2][g3] != A.zero:
            fixed_ok = False
    if not fixed_ok:
        return CohomologyVerdict(False, None, "exhaustive")
    if not pairs:
        return CohomologyVerdict(True, assemble([]), "exhaustive")
    c = [[0] * n for _ in range(n)]
    elems = list(A.elements())
    visited = 0

    def holds(g1, g2, g3, cells):
        a, b, d, e = (c[x][y] for x, y in cells)
        return A.sum([a, A.neg(b), d, A.neg(act[g3][e])]) == diff[g1][g2][g3]

    # iterative depth-first search over the values of the cells in order
    choice = [-1] * len(pairs)
    i = 0
    while i >= 0:
        choice[i] += 1
        if choice[i] == len(elems):
            choice[i] = -1
            g1, g2 = pairs[i]
            c[g1][g2] = 0
            i -= 1
            continue
        visited += 1
        if visited > bound:
            return CohomologyVerdict(None, None, "exhaustive")
        g1, g2 = pairs[i]
        c[g1][g2] = elems[choice[i]]
        if all(holds(*eq) for eq in buckets[i]):
            if i == len(pairs) - 1:
                w = assemble([c[x][y] for x, y in pairs])
                if coboundary_of(G, A, act, w) != diff:
                    raise AssertionError("coboundary witness failed to verify")
                return CohomologyVerdict(True, w, "exhaustive")
            i += 1
    return CohomologyVerdict(False, None, "exhaustive")


def _is_prime(q):
    return q >= 2 and all(q % i for i in range(2, int(q ** 0.5) + 1))


class SplitModelOps:
    """Composition and tensor evaluators of the skeletal model."""

    def __init__(self, t: SkeletalTwoGroup):
        self.t = t

    def compose(self, m2, m1):
        (a2, g2), (a1, g1) = m2, m1
        if g1 != g2:
            raise ValueError("morphisms are not composable")
        return (self.t.A.add(a2, a1), g1)

    def identity(self, g):
        return (self.t.A.zero, g)

    def inverse(self, m):
        return (self.t.A.neg(m[0]), m[1])

    def tensor(self, m, mp):
        (a, g), (ap, gp) = m, mp
        t = self.t
        return (t.A.add(t.act(gp, a), ap), t.G.mul(g, gp))

    def tensor_obj(self, g, gp):
        return self.t.G.mul(g, gp)

    def associator(self, g1, g2, g3):
        G = self.t.G
        return (self.t.z(g1, g2, g3), G.mul(G.mul(g1, g2), g3))


def split_model_ops(t: SkeletalTwoGroup) -> SplitModelOps:
    return SplitModelOps(t)


def check_model_axioms(t: SkeletalTwoGroup) -> dict:
    """Exhaustive monoidal-groupoid checks for the skeletal model."""
    ops = SplitModelOps(t)
    G, A = t.G, t.A
    mors = [(a, g) for g in G.elements() for a in A.elements()]
    res = {}
    res["identities"] = all(ops.compose(ops.identity(g), (a, g)) == (a, g) ==
                            ops.compose((a, g), ops.identity(g)) for a, g in mors)
    res["inverses"] = all(ops.compose(ops.inverse(m), m) == ops.identity(m[1]) for m in mors)
    interchange = True
    for g, gp in product(G.elements(), repeat=2):
        for a, b, ap, bp in product(A.elements(), repeat=4):
            lhs = ops.tensor(ops.compose((b, g), (a, g)), ops.compose((bp, gp), (ap, gp)))
            rhs = ops.compose(ops.tensor((b, g), (bp, gp)), ops.tensor((a, g), (ap, gp)))
            if lhs != rhs:
                interchange = False
                break
        if not interchange:
            break
    res["interchange"] = interchange
    res["unit"] = all(ops.tensor(ops.identity(G.e), m) == m == ops.tensor(m, ops.identity(G.e))
                      for m in mors)
    nat = True
    for (a, g), (b, h), (c, k) in product(mors, repeat=3) if len(mors) <= 24 else []:
        left = ops.tensor(ops.tensor((a, g), (b, h)), (c, k))
        right = ops.tensor((a, g), ops.tensor((b, h), (c, k)))
        if left != right:
            nat = False
            break
    res["associator_natural"] = nat
    res["pentagon"] = pentagon_check(t)
    return res


def pentagon_check(t: SkeletalTwoGroup) -> bool:
    """Pentagon for the associator ``(z, g g' g'')``, evaluated with the model's tensor."""
    ops = SplitModelOps(t)
    G = t.G
    m = G.mul
    for g1, g2, g3, g4 in product(G.elements(), repeat=4):
        lhs = ops.compose(ops.associator(g1, g2, m(g3, g4)),
                          ops.associator(m(g1, g2), g3, g4))
        rhs = ops.compose(ops.tensor(ops.identity(g1), ops.associator(g2, g3, g4)),
                          ops.compose(ops.associator(g1, m(g2, g3), g4),
                                      ops.tensor(ops.associator(g1, g2, g3), ops.identity(g4))))
        if lhs != rhs:
            return False
    return True


# ---------------------------------------------------------------------------
# concrete finite 2-groups (strict monoidal groupoids)

class ConcreteFiniteTwoGroup:
    """Interface; subclasses supply objects, hom-sets, composition and tensor."""

    strict = True

    def objects(self) -> list: ...
    def unit(self): ...
    def hom(self, x, y) -> list: ...
    def src(self, m): ...
    def tgt(self, m): ...
    def compose(self, m2, m1): ...
    def identity(self, x): ...
    def inverse(self, m): ...
    def tensor(self, x, y): ...
    def tensor_mor(self, m, mp): ...

    def pi1_group(self):
        """``(FiniteAbelianGroup, list of automorphisms of the unit by serial)``."""
        raise NotImplementedError

    def class_key(self, x):
        """Optional invariant separating isomorphism classes (None = search)."""
        return None

    # derived structure --------------------------------------------------

    def gamma(self, x, u):
        return self.tensor_mor(self.identity(x), u)

    def delta(self, x, u):
        return self.tensor_mor(u, self.identity(x))

    def first_morphism(self, x, y):
        hs = self.hom(x, y)
        return hs[0] if hs else None

    def left_dual(self, x):
        """``(x*, eps)`` with ``eps: x* ⊗ x -> I``."""
        cache = self.__dict__.setdefault("_ldual", {})
        if x not in cache:
            I = self.unit()
            for y in self.objects():
                m = self.first_morphism(self.tensor(y, x), I)
                if m is not None:
                    cache[x] = (y, m)
                    break
            else:
                raise ValueError(f"object {x!r} has no pseudoinverse")
        return cache[x]

    def right_dual(self, x):
        """``(x*, eps)`` with ``eps: x ⊗ x* -> I``."""
        cache = self.__dict__.setdefault("_rdual", {})
        if x not in cache:
            I = self.unit()
            for y in self.objects():
                m = self.first_morphism(self.tensor(x, y), I)
                if m is not None:
                    cache[x] = (y, m)
                    break
            else:
                raise ValueError(f"object {x!r} has no pseudoinverse")
        return cache[x]

    def gamma_inv(self, x, phi):
        y, eps = self.left_dual(x)
        return self.compose(eps, self.compose(self.tensor_mor(self.identity(y), phi),
                                              self.inverse(eps)))

    def delta_inv(self, x, phi):
        y, eps = self.right_dual(x)
        return self.compose(eps, self.compose(self.tensor_mor(phi, self.identity(y)),
                                              self.inverse(eps)))


class SkeletalConcrete(ConcreteFiniteTwoGroup):
    """The skeletal model viewed as a concrete 2-group (strict when z = 0)."""

    def __init__(self, t: SkeletalTwoGroup):
        self.t = t
        self.ops = SplitModelOps(t)
        self.strict = all(x == 0 for p in t.z_table for r in p for x in r)

    def objects(self):
        return list(self.t.G.elements())

    def unit(self):
        return self.t.G.e

    def hom(self, x, y):
        return [(a, x) for a in self.t.A.elements()] if x == y else []

    def src(self, m):
        return m[1]

    tgt = src

    def compose(self, m2, m1):
        return self.ops.compose(m2, m1)

    def identity(self, x):
        return self.ops.identity(x)

    def inverse(self, m):
        return self.ops.inverse(m)

    def tensor(self, x, y):
        return self.t.G.mul(x, y)

    def tensor_mor(self, m, mp):
        return self.ops.tensor(m, mp)

    def pi1_group(self):
        return self.t.A, [(a, self.t.G.e) for a in self.t.A.elements()]

    def class_key(self, x):
        return x


@dataclass
class SinhResult:
    two_group: SkeletalTwoGroup
    reps: list                 # x_g by class index
    class_of: dict             # object -> class index
    iota: dict                 # object -> morphism y -> x_{g_y}
    pi1: list                  # serial -> automorphism of the unit
    pi1_index: dict            # automorphism of the unit -> serial
    z: list = field(repr=False, default=None)

    def F_obj(self, g):
        return self.reps[g]

    def mu(self, c, g, gp):
        """``μ_{g,g'} = ι_{x_g ⊗ x_g'}: F(g) ⊗ F(g') -> F(g g')``."""
        return self.iota[c.tensor(self.reps[g], self.reps[gp])]

    def F_mor(self, c, a, g):
        return c.gamma(self.reps[g], self.pi1[a])

    def F_star_mor(self, c, phi):
        x, y = c.src(phi), c.tgt(phi)
        g = self.class_of[x]
        inner = c.compose(self.iota[y], c.compose(phi, c.inverse(self.iota[x])))
        return self.pi1_index[c.gamma_inv(self.reps[g], inner)], g


def _classes(c: ConcreteFiniteTwoGroup):
    objs = c.objects()
    keys = [c.class_key(x) for x in objs]
    if all(k is not None for k in keys):
        groups = {}
        for x, k in zip(objs, keys):
            groups.setdefault(k, []).append(x)
        return list(groups.values())
    remaining = list(objs)
    out = []
    while remaining:
        x = remaining.pop(0)
        cls = [x] + [y for y in remaining if c.hom(x, y)]
        remaining = [y for y in remaining if y not in cls]
        out.append(cls)
    return out


def sinh_extract(c: ConcreteFiniteTwoGroup) -> SinhResult:
    """Skeletal model of a strict finite 2-group from deterministic choices."""
    if not c.strict:
        raise ValueError("extraction is implemented for strict monoidal groupoids")
    I = c.unit()
    order = {x: i for i, x in enumerate(c.objects())}
    classes = _classes(c)
    classes.sort(key=lambda cl: (I not in cl, min(order[x] for x in cl)))
    reps, class_of = [], {}
    for gi, cl in enumerate(classes):
        rep = I if I in cl else min(cl, key=order.__getitem__)
        reps.append(rep)
        for x in cl:
            class_of[x] = gi
    n = len(classes)
    table = [[class_of[c.tensor(reps[g], reps[h])] for h in range(n)] for g in range(n)]
    G = FiniteGroup(table)
    A, units = c.pi1_group()
    index = {u: i for i, u in enumerate(units)}
    iota = {}
    for x in c.objects():
        rep = reps[class_of[x]]
        iota[x] = c.identity(x) if x == rep else c.first_morphism(x, rep)
    act = [[index[c.gamma_inv(reps[g], c.delta(reps[g], units[a]))] for a in A.elements()]
           for g in range(n)]
    z = [[[0] * n for _ in range(n)] for _ in range(n)]
    for g1, g2, g3 in product(range(n), repeat=3):
        x1, x2, x3 = reps[g1], reps[g2], reps[g3]
        x12 = reps[G.mul(g1, g2)]
        x23 = reps[G.mul(g2, g3)]
        x123 = reps[G.mul(G.mul(g1, g2), g3)]
        chain = c.compose(
            iota[c.tensor(x1, x23)],
            c.compose(c.tensor_mor(c.identity(x1), iota[c.tensor(x2, x3)]),
                      c.compose(c.tensor_mor(c.inverse(iota[c.tensor(x1, x2)]), c.identity(x3)),
                                c.inverse(iota[c.tensor(x12, x3)]))))
        z[g1][g2][g3] = index[c.gamma_inv(x123, chain)]
    t = SkeletalTwoGroup(G, A, act, z, check=False)
    return SinhResult(t, reps, class_of, iota, units, index, z)


def verify_equivalence(res: SinhResult, c: ConcreteFiniteTwoGroup, mu=None) -> dict:
    """Exhaustive checks of ``F* F = id``, ``ι: id => F F*`` and the coherence of ``(F, μ)``."""
    t = res.two_group
    G, A = t.G, t.A
    mu = mu or {}

    def MU(g, gp):
        return mu.get((g, gp)) or res.mu(c, g, gp)

    out = {}
    out["normalized"] = is_normalized(G, t.z_table)
    out["cocycle"] = cocycle_check(G, A, t.act_table, t.z_table)
    out["unit"] = res.reps[G.e] == c.unit()
    ok = all(res.class_of[res.reps[g]] == g for g in G.elements())
    ok = ok and all(res.F_star_mor(c, res.F_mor(c, a, g)) == (a, g)
                    for g in G.elements() for a in A.elements())
    out["F_star_F_identity"] = ok
    nat = True
    objs = c.objects()
    for x in objs:
        for y in objs:
            if res.class_of[x] != res.class_of[y]:
                continue
            for phi in c.hom(x, y):
                a, g = res.F_star_mor(c, phi)
                lhs = c.compose(res.iota[y], phi)
                rhs = c.compose(res.F_mor(c, a, g), res.iota[x])
                if lhs != rhs:
                    nat = False
    out["iota_natural"] = nat
    coh = True
    for g1, g2, g3 in product(G.elements(), repeat=3):
        g12, g23 = G.mul(g1, g2), G.mul(g2, g3)
        x3 = res.reps[g3]
        x1 = res.reps[g1]
        lhs = c.compose(res.F_mor(c, t.z(g1, g2, g3), G.mul(g12, g3)),
                        c.compose(MU(g12, g3), c.tensor_mor(MU(g1, g2), c.identity(x3))))
        rhs = c.compose(MU(g1, g23), c.tensor_mor(c.identity(x1), MU(g2, g3)))
        if lhs != rhs:
            coh = False
    out["coherence"] = coh
    natmu = True
    for g, gp in product(G.elements(), repeat=2):
        for a, ap in product(A.elements(), repeat=2):
            lhs = c.compose(MU(g, gp), c.tensor_mor(res.F_mor(c, a, g), res.F_mor(c, ap, gp)))
            s = (A.add(t.act(gp, a), ap), G.mul(g, gp))
            rhs = c.compose(res.F_mor(c, *s), MU(g, gp))
            if lhs != rhs:
                natmu = False
    out["mu_natural"] = natmu
    out["pass"] = all(out.values())
    return out


def action_is_representative_independent(c: ConcreteFiniteTwoGroup, res: SinhResult) -> bool:
    """``γ_x^-1 δ_x(u)`` depends only on the class of ``x``."""
    for x in c.objects():
        g = res.class_of[x]
        for a, u in enumerate(res.pi1):
            v = c.gamma_inv(x, c.delta(x, u))
            if res.pi1_index[v] != res.two_group.act(g, a):
                return False
    return True
