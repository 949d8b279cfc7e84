"""Command-line front end.

Machine output is one JSON document on stdout; a short human summary goes
to stderr (or to stdout with ``--format text``).  Exit codes: 0 success or
pass, 1 a check failed, 2 unresolved or not applicable, 3 usage or parse
error.
"""

from __future__ import annotations

import argparse
import random
import sys

from . import io
from .complexes import (ComplexError, NotSplit, find_splitting, hom_complex, homology,
                        split_normal_form)
from .modules import automorphism_count
from .oracle import BudgetExceeded, EnumerationBudget, build_equiv_2group, cross_check
from .skeletal import (SkeletalConcrete, cocycle_check, cohomologous_check, sinh_extract,
                       verify_equivalence)
from .symmetry import (Pi1Data, conjugate, generic_action_on_classes, generic_pi0,
                       split_symmetry, theorem_verify)
from .twocat import hcompose, homotopy_class_eq, vcompose

EXIT_OK, EXIT_FAIL, EXIT_UNRESOLVED, EXIT_USAGE = 0, 1, 2, 3

COMMANDS = ("analyze", "homology", "split-check", "normal-form", "pi0", "pi1", "action",
            "theorem-verify", "sinh", "oracle-check", "compose")


class UsageError(Exception):
    pass


# ---------------------------------------------------------------------------
# report builders

def _group_order(obj):
    return obj.order() if obj.is_finite() else None


def homology_report(A):
    out = {}
    for k in A.degrees():
        H = homology(A, k).H
        out[str(k)] = {"object": str(H), "orders": list(H.orders), "order": _group_order(H)}
    return out


def _coords(x):
    return [int(c) for c in x]


def pi0_report(A, bound=256):
    sym = split_symmetry(A)
    out = {}
    if sym is not None:
        ring = A.ring
        out["path"] = "split"
        out["factors"] = [{"degree": k, "group": f"GL_{sym.S.h(k)}({ring!r})"}
                          for k in sym.S.degrees() if sym.S.h(k)]
        out["order"] = sym.pi0_order()
    try:
        gen = generic_pi0(A, bound) if sym is None or (sym.pi0_order() or 0) <= bound else None
    except ValueError:
        gen = None
    if gen is not None:
        end = hom_complex(A, A).homology_object(0)
        out.setdefault("path", "generic")
        out["order"] = gen.order
        out["H0_End"] = str(end)
        idx = {x: i for i, x in enumerate(gen.elements)}
        out["elements"] = [_coords(x) for x in gen.elements]
        out["identity"] = _coords(gen.identity)
        out["table"] = [[idx[gen.table[x, y]] for y in gen.elements] for x in gen.elements]
        if len(end.orders) == 1 and end.orders[0] and gen.identity == (1,):
            out["description"] = f"Z*_{end.orders[0]} (order {gen.order})"
    if "description" not in out:
        if out.get("path") == "split":
            out["description"] = (" x ".join(f["group"] for f in out["factors"]) or "trivial") \
                + f" (order {out['order']})"
        elif out.get("order") is not None:
            out["description"] = f"U(H0(End)) (order {out['order']})"
    if not out:
        out["path"] = "unresolved"
        out["reason"] = "no splitting and H0(End) is infinite or above the enumeration bound"
    return out


def pi1_report(A):
    P = Pi1Data(A)
    out = {"object": str(P.obj), "orders": list(P.obj.orders), "order": _group_order(P.obj),
           "computed_as": "H0(Hom(A, A[1]))"}
    sym = split_symmetry(A)
    if sym is not None:
        dims = {str(k): sym.S.h(k) * sym.S.h(k + 1) for k in sym.S.degrees()
                if sym.S.h(k) * sym.S.h(k + 1)}
        out["split_factors"] = {"Hom(H_k, H_k+1) dims": dims}
        out["agree"] = sym.pi1_object() == P.obj
    return out


def action_report(A, bound=4096):
    """Action table of π0 on π1: row = π0 element, column = π1 element."""
    try:
        gen = generic_pi0(A, 256)
    except ValueError:
        gen = None
    P = Pi1Data(A)
    if gen is None or not P.obj.is_finite() or gen.order * P.obj.order() > bound:
        return None
    pis = P.elements()
    idx = {u: i for i, u in enumerate(pis)}
    table = [[idx[generic_action_on_classes(A, gen, P, x, u)] for u in pis]
             for x in gen.elements]
    out = {"pi0_elements": [_coords(x) for x in gen.elements],
           "pi1_elements": [_coords(u) for u in pis], "table": table,
           "convention": "right action: entry [x][u] is the class of u ◁ x"}
    sym = split_symmetry(A)
    if sym is not None:
        agree = True
        for i, x in enumerate(gen.elements):
            psi = sym.psi_of(gen.representatives[x])
            for j, u in enumerate(pis):
                xi = sym.xi_of(P.lift(u))
                moved = sym.lift_xi(conjugate(psi, xi, sym.S))
                if idx[P.classify(moved)] != table[i][j]:
                    agree = False
        out["conjugation_agrees"] = agree
    return out


def analyze_report(A, seed=0):
    s = find_splitting(A)
    out = {"window": [A.lo, A.hi], "coefficients": A.ring.to_json(),
           "homology": homology_report(A), "split": bool(s),
           "pi0": pi0_report(A), "pi1": pi1_report(A)}
    act = action_report(A)
    if act is not None:
        out["action_table"] = act
    tv = theorem_verify(A, seed=seed)
    out["postnikov"] = tv.get("postnikov", "unresolved")
    out["theorem"] = tv["theorem"]
    auts = [automorphism_count(homology(A, k).H) for k in A.degrees()]
    out["aut_homology_order"] = None if None in auts else _prod(auts)
    return out


def _prod(xs):
    out = 1
    for x in xs:
        out *= x
    return out


def _summary_lines(cmd, report):
    if cmd == "homology":
        return [f"H_{k} = {v['object']}" for k, v in report["homology"].items()]
    if cmd in ("pi0", "pi1"):
        r = report[cmd]
        return [f"{cmd}: {r.get('description', r.get('object', r.get('path')))}"]
    lines = []
    for key in ("split", "theorem", "postnikov", "pass", "status"):
        if key in report:
            lines.append(f"{key}: {report[key]}")
    return lines or [f"{cmd}: done"]


# ---------------------------------------------------------------------------
# commands

def _one(inputs):
    if len(inputs) != 1:
        raise UsageError("this command takes exactly one input complex")
    return io.load_complex(inputs[0])


def cmd_analyze(args, inputs):
    A = _one(inputs)
    rep = analyze_report(A, args.seed)
    return rep, EXIT_FAIL if rep["theorem"] == "fail" else EXIT_OK


def cmd_homology(args, inputs):
    A = _one(inputs)
    return {"homology": homology_report(A)}, EXIT_OK


def cmd_split_check(args, inputs):
    A = _one(inputs)
    s = find_splitting(A)
    out = {"split": bool(s)}
    if s:
        out["maps"] = io.matrix_dict_to_json(s.maps)
    else:
        out["failed_degree"] = s.failed_degree
        c = s.certificate
        if c is not None:
            out["certificate"] = {"row": c.row, "column": c.column, "value": str(c.value),
                                  "divisor": str(c.divisor)}
        out["reason"] = "no splitting maps exist"
    return out, EXIT_OK


def cmd_normal_form(args, inputs):
    A = _one(inputs)
    try:
        data = split_normal_form(A)
    except NotSplit as exc:
        return {"split": False, "reason": str(exc)}, EXIT_UNRESOLVED
    S = data.complex
    return {"split": True,
            "B": {str(k): S.b(k) for k in range(S.lo, S.hi)},
            "H": {str(k): S.h(k) for k in S.degrees()},
            "normal_form": io.complex_to_json(S),
            "iso": io.chain_map_to_json(data.iso),
            "inverse": io.chain_map_to_json(data.inverse)}, EXIT_OK


def cmd_pi0(args, inputs):
    A = _one(inputs)
    r = pi0_report(A)
    return {"pi0": r}, EXIT_UNRESOLVED if r["path"] == "unresolved" else EXIT_OK


def cmd_pi1(args, inputs):
    A = _one(inputs)
    return {"pi1": pi1_report(A)}, EXIT_OK


def cmd_action(args, inputs):
    A = _one(inputs)
    r = action_report(A)
    if r is None:
        return {"action_table": None,
                "reason": "π0 or π1 is infinite or above the enumeration bound"}, EXIT_UNRESOLVED
    return {"action_table": r}, EXIT_FAIL if r.get("conjugation_agrees") is False else EXIT_OK


def cmd_theorem_verify(args, inputs):
    A = _one(inputs)
    r = theorem_verify(A, seed=args.seed)
    rep = {"pi0": pi0_report(A), "pi1": pi1_report(A), "postnikov": r.get("postnikov", "unresolved"),
           "theorem": r["theorem"], "details": r}
    code = {"pass": EXIT_OK, "fail": EXIT_FAIL}.get(r["theorem"], EXIT_UNRESOLVED)
    return rep, code


def _budget(args):
    return EnumerationBudget(max_dim=args.budget) if args.budget is not None else EnumerationBudget()


def cmd_sinh(args, inputs):
    if len(inputs) != 1:
        raise UsageError("sinh takes exactly one input (complex or skeletal 2-group)")
    obj = io.load_json(inputs[0])
    if isinstance(obj, dict) and "G" in obj:
        c = SkeletalConcrete(io.skeletal_from_json(obj))
        if not c.strict:
            return {"status": "not-applicable",
                    "reason": "extraction needs a strict monoidal structure (z = 0)"}, EXIT_UNRESOLVED
        source = "skeletal"
    else:
        A = io.complex_from_json(obj)
        if not hasattr(A.ring, "p"):
            return {"status": "not-applicable",
                    "reason": "Equiv(A) is built by enumeration over prime fields only"}, \
                EXIT_UNRESOLVED
        try:
            c = build_equiv_2group(A, _budget(args), args.variant)
        except BudgetExceeded as exc:
            return {"status": "unresolved", "reason": str(exc)}, EXIT_UNRESOLVED
        source = "oracle Equiv(A)"
    res = sinh_extract(c)
    t = res.two_group
    ver = verify_equivalence(res, c)
    zero = [[[0] * t.G.order for _ in t.G.elements()] for _ in t.G.elements()]
    lin = cohomologous_check(t.G, t.A, t.act_table, t.z_table, zero)
    ex = cohomologous_check(t.G, t.A, t.act_table, t.z_table, zero, method="exhaustive")
    ok = ver["pass"] and cocycle_check(t.G, t.A, t.act_table, t.z_table)
    rep = {"source": source, "two_group": io.skeletal_to_json(t), "checks": ver,
           "cohomologous_to_zero": {"linear": lin.verdict, "exhaustive": ex.verdict,
                                    "witness": lin.witness},
           "pass": ok, "status": "pass" if ok else "fail"}
    return rep, EXIT_OK if ok else EXIT_FAIL


def cmd_oracle_check(args, inputs):
    if len(inputs) > 1:
        raise UsageError("oracle-check takes at most one input complex")
    if inputs:
        A = _one(inputs)
    else:
        from .arith import PrimeField
        from .generators import random_split_complex
        A = random_split_complex(PrimeField(2), random.Random(args.seed))
    if not hasattr(A.ring, "p"):
        return {"status": "not-applicable", "reason": "the oracle needs a prime field"}, \
            EXIT_UNRESOLVED
    try:
        rep = cross_check(A, _budget(args), seed=args.seed)
    except BudgetExceeded as exc:
        return {"status": "unresolved", "reason": str(exc)}, EXIT_UNRESOLVED
    rep["status"] = "pass" if rep["pass"] else "fail"
    return rep, EXIT_OK if rep["pass"] else EXIT_FAIL


def cmd_compose(args, inputs):
    if len(inputs) < 2:
        raise UsageError("compose needs the complexes as --input A --input B [--input C ...]")
    cx = [io.load_complex(p) for p in inputs]
    cells = [io.load_json(p) for p in args.cell]
    if not cells:
        raise UsageError("compose needs 2-cells given with --cell")
    if args.vertical:
        if len(cx) != 2:
            raise UsageError("vertical composition takes exactly two complexes")
        ts = [io.two_morphism_from_json(c, cx[0], cx[1]) for c in cells]
        out = ts[0]
        for t in ts[1:]:
            out = vcompose(t, out)
    else:
        if len(cells) != len(cx) - 1:
            raise UsageError("horizontal composition takes one cell per consecutive pair")
        ts = [io.two_morphism_from_json(c, cx[i], cx[i + 1]) for i, c in enumerate(cells)]
        out = ts[0]
        other = ts[0]
        for t in ts[1:]:
            out = hcompose(t, out, args.variant)
            other = hcompose(t, other, "B" if args.variant == "A" else "A")
    rep = {"result": io.two_morphism_to_json(out),
           "codomain": io.chain_map_to_json(out.codomain())}
    if not args.vertical and len(ts) > 1:
        rep["variants_homotopic"] = homotopy_class_eq(out.h, other.h)[0]
    return rep, EXIT_OK


HANDLERS = {
    "analyze": cmd_analyze, "homology": cmd_homology, "split-check": cmd_split_check,
    "normal-form": cmd_normal_form, "pi0": cmd_pi0, "pi1": cmd_pi1, "action": cmd_action,
    "theorem-verify": cmd_theorem_verify, "sinh": cmd_sinh, "oracle-check": cmd_oracle_check,
    "compose": cmd_compose,
}


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise UsageError(message)


def build_parser():
    p = _Parser(prog="chainsym", description="Symmetry 2-groups of chain complexes.")
    p.add_argument("command", choices=COMMANDS)
    p.add_argument("paths", nargs="*", help="input files")
    p.add_argument("--input", action="append", default=[], metavar="PATH")
    p.add_argument("--cell", action="append", default=[], metavar="PATH",
                   help="2-cell file for compose")
    p.add_argument("--vertical", action="store_true", help="compose cells vertically")
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--budget", type=int, default=None,
                   help="oracle bound on the chain-map solution-space dimension")
    p.add_argument("--variant", choices=("A", "B"), default="A")
    p.add_argument("--format", choices=("json", "text"), default="json")
    return p


def run(argv=None, stdout=None, stderr=None) -> int:
    stdout = stdout or sys.stdout
    stderr = stderr or sys.stderr
    try:
        args = build_parser().parse_intermixed_args(argv)
        if args.budget is not None and args.budget < 0:
            raise UsageError("--budget must be nonnegative")
        inputs = list(args.input) + list(args.paths)
        report, code = HANDLERS[args.command](args, inputs)
    except UsageError as exc:
        print(f"usage error: {exc}", file=stderr)
        return EXIT_USAGE
    except (io.ParseError, ComplexError) as exc:
        print(f"parse error: {exc}", file=stderr)
        return EXIT_USAGE
    report = {"command": args.command, **report}
    lines = _summary_lines(args.command, report)
    if args.format == "json":
        print(io.dumps(_jsonable(report)), file=stdout)
        for line in lines:
            print(line, file=stderr)
    else:
        for line in lines:
            print(line, file=stdout)
    return code


def _jsonable(x):
    if isinstance(x, dict):
        return {str(k): _jsonable(v) for k, v in x.items()}
    if isinstance(x, (list, tuple)):
        return [_jsonable(v) for v in x]
    if isinstance(x, (bool, int, float, str)) or x is None:
        return x
    if hasattr(x, "to_json"):
        return x.to_json()
    return str(x)


def main():
    sys.exit(run())


if __name__ == "__main__":
    main()
