"""Acceptance criteria 1-10, exact arithmetic, zero tolerance.

Each criterion records one PASS/FAIL line; the lines are printed as they
are produced and again in the pytest terminal summary.  Running this file
directly prints the same lines without pytest.
"""

from __future__ import annotations

import io
import itertools
import math
import random
from pathlib import Path

import chainsym
from chainsym.arith import PrimeField
from chainsym.cli import run
from chainsym.complexes import (ChainMap, Homotopy, boundary, canonical_split_complex,
                                find_splitting, hom_complex, homology, translate)
from chainsym.generators import (random_chain_map, random_complex, random_homotopy,
                                 random_split_complex)
from chainsym.io import load_complex
from chainsym.matrix import Matrix, is_invertible
from chainsym.modules import CoeffObject, automorphism_count
from chainsym.oracle import (BudgetExceeded, HomOracle, build_equiv_2group, cross_check,
                             enumerate_chain_maps)
from chainsym.symmetry import (EndRing, Pi1Data, blocks_from_endo, endo_from_blocks, equivalence_functor,
                               generic_pi0, homotopic_endos, pseudoinverse, split_symmetry,
                               theorem_verify, two_homotopy_witness)
from chainsym.twocat import TwoMorphism, hcompose, homotopy_class_eq, interchange_check, vcompose

FIXTURES = Path(chainsym.__file__).parent / "fixtures"
F2, F3 = PrimeField(2), PrimeField(3)

RESULTS: dict[int, str] = {}


def report(n, ok, detail):
    line = f"criterion {n:>2}: {'PASS' if ok else 'FAIL'}  {detail}"
    RESULTS[n] = line
    print(line)
    assert ok, line


def fixture(name):
    return load_complex(FIXTURES / f"{name}.json")


def gl_order(n, p):
    return math.prod(p ** n - p ** i for i in range(n))


def units_mod(m):
    return [a for a in range(m) if math.gcd(a, m) == 1] if m > 1 else [0]


# random split complexes shared by criteria 3, 8 and 9
_ORACLE_RUNS: list = []


def oracle_runs(target=50):
    """In-budget cross-check reports on random split complexes, seeds in order."""
    if len(_ORACLE_RUNS) >= target:
        return _ORACLE_RUNS
    seed = 0
    _ORACLE_RUNS.clear()
    while len(_ORACLE_RUNS) < target:
        ring = (F2, F3)[seed % 2]
        A = random_split_complex(ring, random.Random(seed), length=3, max_dim=3)
        try:
            _ORACLE_RUNS.append((seed, A, cross_check(A, seed=seed)))
        except BudgetExceeded:
            pass
        seed += 1
    return _ORACLE_RUNS


# 1 ---------------------------------------------------------------------------

def test_criterion_1_ex1_reproduction():
    details, ok = [], True
    for k in (1, 2, 3):
        A = fixture(f"ex1_k{k}")
        g = generic_pi0(A)
        m = 2 * k
        # name each class by the integer n with class = n * [id]; H0(End) is cyclic on [id]
        name = {}
        R = EndRing(A)
        for n in range(m):
            name.setdefault(R.obj.reduce([n * c for c in R.one]), n)
        units = sorted(name[x] for x in g.elements)
        table_ok = all(name[g.table[(x, y)]] == (name[x] * name[y]) % m
                       for x in g.elements for y in g.elements)
        pi1_order = Pi1Data(A).obj.order()
        good = (R.obj.order() == m and units == units_mod(m) and table_ok
                and g.order == len(units_mod(m)) and pi1_order == 1)
        ok = ok and good
        details.append(f"k={k}: |pi0|={g.order} pi1={pi1_order}")
    report(1, ok, "; ".join(details))


# 2 ---------------------------------------------------------------------------

def _verify_splitting(A, maps):
    for k in range(A.lo, A.hi):
        d = A.d(k).matrix
        if d @ maps[k].matrix @ d != d:
            return False
    return True


def test_criterion_2_splitting_criterion():
    n, ok = 0, True
    for seed in range(120):
        ring = (F2, F3)[seed % 2]
        A = random_complex(ring, random.Random(1000 + seed), length=4, max_dim=4)
        res = find_splitting(A)
        ok = ok and bool(res) and _verify_splitting(A, res.maps)
        n += 1
    ex1 = find_splitting(fixture("ex1_k1"))
    certified = not ex1 and ex1.certificate is not None and ex1.failed_degree == 0
    report(2, ok and certified, f"{n} random complexes split and verified; ex1 certified "
           f"non-split: {certified}")


# 3 ---------------------------------------------------------------------------

def test_criterion_3_pi0_pi1_action_formulas():
    runs = oracle_runs()
    names = ("pi0_order", "pi1_order", "action")
    bad = [(s, r["counterexamples"]) for s, _, r in runs
           if not all(r["checks"][c] for c in names)]
    # formula sides recomputed here from homology dimensions
    for s, A, r in runs:
        p = A.ring.p
        h = {k: homology(A, k).H.ngens for k in A.degrees()}
        g0 = math.prod(gl_order(h[k], p) for k in h)
        g1 = p ** sum(h[k] * h.get(k + 1, 0) for k in h)
        if (r["counts"]["pi0_oracle"], r["counts"]["pi1_oracle"]) != (g0, g1):
            bad.append((s, "formula"))
    report(3, not bad and len(runs) >= 50,
           f"{len(runs)} in-budget random split complexes over F_2/F_3, failures: {bad[:3]}")


# 4 ---------------------------------------------------------------------------

def test_criterion_4_split_exact_trivial():
    A = fixture("split_exact_f2")
    sym = split_symmetry(A)
    E = build_equiv_2group(A)
    unit_classes = len(E.unit_classes)
    cells = len(E.hom(E.unit(), E.unit()))
    ok = (sym.pi0_order() == 1 and sym.pi1_order() == 1 and E.pi0_order == 1
          and E.pi1_order == 1 and unit_classes == 1 and cells == 1
          and cross_check(A)["pass"])
    report(4, ok, f"pi0={E.pi0_order} pi1={E.pi1_order} object-classes={unit_classes} "
           f"2-cells of unit={cells}")


# 5 ---------------------------------------------------------------------------

def test_criterion_5_general_linear_example():
    expected = {"gl_monic_f2": (6, 1), "gl_epi_f2": (6, 1), "gl_iso_f2": (1, 1)}
    ok, details = True, []
    for name, (o0, o1) in expected.items():
        A = fixture(name)
        tv = theorem_verify(A)
        E = build_equiv_2group(A)
        got = (E.pi0_order, E.pi1_order)
        good = (got == (o0, o1) and tv["theorem"] == "pass"
                and (tv["pi0_split_order"], tv["pi1_split_order"]) == (o0, o1))
        ok = ok and good
        details.append(f"{name}: pi0={got[0]} pi1={got[1]}")
    # monic and epi mirror each other: H sits in degree 0 resp. 1 with the same dimension
    hm = {k: homology(fixture("gl_monic_f2"), k).H.ngens for k in (0, 1)}
    he = {k: homology(fixture("gl_epi_f2"), k).H.ngens for k in (0, 1)}
    ok = ok and hm == {0: 2, 1: 0} and he == {0: 0, 1: 2}
    report(5, ok, "; ".join(details))


# 6 ---------------------------------------------------------------------------

def test_criterion_6_two_category_axioms():
    rng = random.Random(6)
    pairs = grids = 0
    vert_ok = variants_ok = inter_ok = True
    while pairs < 200:
        ring = (F2, F3)[pairs % 2]
        A, B, C = (random_split_complex(ring, rng, 3, 3) for _ in range(3))
        f = random_chain_map(A, B, rng)
        g = random_chain_map(B, C, rng)
        a = TwoMorphism(f, random_homotopy(A, B, rng))
        b = TwoMorphism(a.codomain(), random_homotopy(A, B, rng))
        e = TwoMorphism(b.codomain(), random_homotopy(A, B, rng))
        c = TwoMorphism(g, random_homotopy(B, C, rng))
        d = TwoMorphism(c.codomain(), random_homotopy(B, C, rng))
        # vertical composition: strict equality of representatives
        l = vcompose(e, vcompose(b, a))
        r = vcompose(vcompose(e, b), a)
        i1 = vcompose(a, TwoMorphism.identity(f))
        i2 = vcompose(TwoMorphism.identity(a.codomain()), a)
        vert_ok = vert_ok and l.f == r.f and l.h == r.h and i1.h == a.h == i2.h
        va, vb = hcompose(c, a, "A"), hcompose(c, a, "B")
        variants_ok = variants_ok and va.f == vb.f and homotopy_class_eq(va.h, vb.h)[0]
        pairs += 1
        inter_ok = inter_ok and interchange_check(a, b, c, d, "A")
        grids += 1
    ok = vert_ok and variants_ok and inter_ok
    report(6, ok, f"vertical strict={vert_ok}; variants homotopic on {pairs} pairs={variants_ok}; "
           f"interchange on {grids} grids={inter_ok}")


# 7 ---------------------------------------------------------------------------

def _tiny_split_complexes():
    """Canonical split complexes over F_2 with window [0, 1] and objects of dimension <= 2."""
    one = lambda n: CoeffObject(F2, n)
    out = []
    for b0, h0, h1 in itertools.product(range(3), repeat=3):
        if b0 + h0 <= 2 and h1 + b0 <= 2:
            out.append(canonical_split_complex(F2, 0, 1, {0: one(b0)}, {0: one(h0), 1: one(h1)}))
    return out


def test_criterion_7_block_calculus():
    bij = homot = two_cells = pinv = True
    n_maps = n_pairs = n_h = 0
    for S in _tiny_split_complexes():
        maps = enumerate_chain_maps(S, S)
        forms = [blocks_from_endo(f) for f in maps]
        # bijection: every chain map is block upper triangular, round trip is exact
        bij = bij and all(endo_from_blocks(x) == f for x, f in zip(forms, maps))
        bij = bij and len({x.key() for x in forms}) == len(maps)
        free = sum(S.b(k) ** 2 + S.h(k) ** 2 + S.b(k) * S.h(k) + S.h(k) * S.b(k - 1)
                   + S.b(k) * S.b(k - 1) for k in S.degrees())
        bij = bij and len(maps) == 2 ** free  # every block tuple is reached
        n_maps += len(maps)
        # f ~ f' exactly when psi = psi', classes taken from the oracle
        Ho = HomOracle(S, S)
        vecs = Ho.maps()
        cls = [Ho.class_of(v) for v in vecs]
        psis = [tuple(sorted((k, x.psi[k].rows) for k in x.psi))
                for x in (blocks_from_endo(Ho.chain_map(v)) for v in vecs)]
        for i, j in itertools.product(range(len(vecs)), repeat=2):
            homot = homot and ((cls[i] == cls[j]) == (psis[i] == psis[j]))
            n_pairs += 1
        # witnesses against the canonical section, and pseudoinverses
        for x in forms:
            ok_w, _ = homotopic_endos(x, blocks_from_endo(endo_from_blocks(x)))
            homot = homot and ok_w
            if all(is_invertible(x.psi[k]) for k in x.psi):
                F = endo_from_blocks(x)
                ident = ChainMap.identity(S)
                for variant in (1, 0):
                    G = endo_from_blocks(pseudoinverse(x, variant))
                    pinv = pinv and Ho.class_of(Ho.C0.flatten(G @ F)) == Ho.class_of(Ho.C0.flatten(ident)) \
                        and Ho.class_of(Ho.C0.flatten(F @ G)) == Ho.class_of(Ho.C0.flatten(ident))
        # h ~ h' exactly when beta = beta', over all self-homotopies with equal boundary
        hs = _all_homotopies(S)
        groups = {}
        for h in hs:
            groups.setdefault(boundary(h).key(), []).append(h)
        for grp in groups.values():
            for h, hp in itertools.product(grp, repeat=2):
                w = two_homotopy_witness(h, hp)
                two_cells = two_cells and (w is not None) == homotopy_class_eq(h, hp)[0]
                n_h += 1
    ok = bij and homot and two_cells and pinv
    report(7, ok, f"bijection on {n_maps} maps={bij}; f~f' iff psi=psi' on {n_pairs} pairs={homot}; "
           f"h~h' iff beta=beta' on {n_h} pairs={two_cells}; pseudoinverses={pinv}")


def _all_homotopies(S):
    z = Homotopy.zero(S, S, 1)
    ks = list(z.degrees())
    shapes = [(z[k].matrix.nrows, z[k].matrix.ncols) for k in ks]
    total = sum(r * c for r, c in shapes)
    out = []
    for bits in itertools.product(range(2), repeat=total):
        comps, pos = {}, 0
        for k, (r, c) in zip(ks, shapes):
            comps[k] = Matrix(F2, [list(bits[pos + i * c: pos + (i + 1) * c]) for i in range(r)],
                              r, c)
            pos += r * c
        out.append(Homotopy(S, S, 1, comps))
    return out


# 8 ---------------------------------------------------------------------------

SINH_NAMES = ("cocycle", "normalized", "z_cohomologous_to_zero", "F_star_F_identity",
              "iota_natural", "coherence", "mu_natural", "sinh_action_matches")


def test_criterion_8_sinh_pipeline():
    instances = [(name, fixture(name)) for name in
                 ("split_exact_f2", "zero_diff_f2", "zero_diff_f3", "gl_monic_f2", "gl_epi_f2",
                  "gl_iso_f2", "random_split_f2")]
    checked = exhaustive = 0
    ok, bad = True, []
    reports = [(n, A, cross_check(A)) for n, A in instances]
    reports += [(f"seed {s}", A, r) for s, A, r in oracle_runs()]
    for name, A, r in reports:
        if r["counts"]["sinh"] != "checked":
            continue
        checked += 1
        good = all(r["checks"][c] for c in SINH_NAMES)
        # the coboundary search must find an explicit witness
        good = good and r["counts"]["coboundary_search"] == "witness found"
        exhaustive += r["counts"]["coboundary_search"] == "witness found"
        _, rep = equivalence_functor(A)
        good = good and rep["mu_identity"] and rep["strict_monoidal"]
        if not good:
            bad.append(name)
        ok = ok and good
    report(8, ok and checked >= 10,
           f"{checked} oracle 2-groups within the Sinh budget, exhaustive coboundary witness on "
           f"{exhaustive}, failures: {bad[:3]}")


# 9 ---------------------------------------------------------------------------

def test_criterion_9_higher_shifts():
    n = 0
    ok = True
    for s, A, r in oracle_runs():
        ok = ok and r["checks"]["shift_1_class_count"] and r["checks"]["shift_2_class_count"]
        n += 1
    # larger instances: algebraic count only
    for seed in range(20):
        ring = (F2, F3)[seed % 2]
        A = random_split_complex(ring, random.Random(500 + seed), length=4, max_dim=4)
        p = ring.p
        h = {k: homology(A, k).H.ngens for k in A.degrees()}
        for m in (1, 2):
            orders = hom_complex(A, translate(A, m)).homology(0).orders
            alg = math.prod(q or p for q in orders)
            ok = ok and alg == p ** sum(h[k] * h.get(k + m, 0) for k in h)
        n += 1
    report(9, ok, f"|H0(Hom(A, A[n]))| = prod p^(h_k h_k+n) for n = 1, 2 on {n} complexes")


# 10 --------------------------------------------------------------------------

def test_criterion_10_negative_control():
    A = fixture("ex1_k2")
    tv = theorem_verify(A)
    g = generic_pi0(A)
    aut = math.prod(automorphism_count(homology(A, k).H) for k in A.degrees())
    out, err = io.StringIO(), io.StringIO()
    code = run(["theorem-verify", str(FIXTURES / "ex1_k2.json")], stdout=out, stderr=err)
    ok = (tv["theorem"] == "not-applicable" and split_symmetry(A) is None and g.order == 2
          and aut == len(units_mod(2)) == 1 and g.order != aut and code == 2
          and '"theorem": "not-applicable"' in out.getvalue())
    report(10, ok, f"theorem {tv['theorem']}, generic |pi0|={g.order}, prod |Aut(H_k)|={aut}, "
           f"cli exit {code}")


if __name__ == "__main__":
    tests = [fn for name, fn in globals().items() if name.startswith("test_criterion_")]
    for fn in sorted(tests, key=lambda fn: int(fn.__name__.split("_")[2])):
        try:
            fn()
        except AssertionError:
            pass
