"""Command-line front end.

Exit status: 0 on success, 1 when a verification fails, 2 on bad arguments.
Results go to stdout; diagnostics go to stderr.
"""

from __future__ import annotations

import argparse
import json
import sys
from typing import Any, Sequence

from . import cores, eisenstein, geometry, identities
from .verify import run_all


class UsageError(Exception):
    pass


def _pt(p: tuple[int, ...]) -> str:
    return "(" + ",".join(map(str, p)) + ")"


def _set(items: list[tuple[int, ...]]) -> str:
    return "{" + ", ".join(_pt(p) for p in items) + "}"


def _nonneg(name: str, value: int) -> int:
    if value < 0:
        raise UsageError(f"--{name} must be nonnegative, got {value}")
    return value


def cmd_solve(args: argparse.Namespace) -> tuple[dict[str, Any], list[str], bool]:
    k = _nonneg("k", args.k)
    sols = sorted(geometry.solutions_bruteforce(k))
    data: dict[str, Any] = {"k": k, "count": len(sols), "solutions": geometry.solutions_to_json(sols)}
    lines = [f"U_{k} = {_set([s.point for s in sols])}", f"|U_{k}| = {len(sols)}"]
    if k % 12 == 4:
        orbs = geometry.group_orbits(set(sols))
        data["orbits"] = geometry.orbits_to_json(orbs)
        data["cranks"] = [[list(geometry.crank(s)) for s in orb] for orb in orbs]
        lines.append(f"{len(orbs)} orbits under R (listed from the member with residues (1,1)):")
        for orb in orbs:
            lines.append(f"  rep {_pt(orb[0].point)}: " + " -> ".join(_pt(s.point) for s in orb))
            lines.append("    crank: " + " -> ".join(_pt(geometry.crank(s)) for s in orb))
    return data, lines, True


def cmd_cores(args: argparse.Namespace) -> tuple[dict[str, Any], list[str], bool]:
    n = _nonneg("n", args.n)
    vecs = sorted(cores.enumerate_charvecs(n), key=lambda c: c.triple)
    reps = sorted(cores.theta(c).point for c in vecs)
    data: dict[str, Any] = {
        "n": n,
        "a3": len(vecs),
        "charvecs": [cores.charvec_to_json(c) for c in vecs],
        "solutions": [list(p) for p in reps],
    }
    lines = [f"C_{n} = {_set([c.triple for c in vecs])}", f"F_{n} = {_set(reps)}"]
    if args.partitions:
        data["frobenius"] = []
        data["partitions"] = []
        for c in vecs:
            f = cores.charvec_to_frobenius(c)
            lam = cores.frobenius_to_partition(f)
            data["frobenius"].append(cores.frobenius_to_json(f))
            data["partitions"].append(cores.partition_to_json(lam))
            lines.append(f"  {_pt(c.triple)}: F = {f}  lambda = {lam}")
    return data, lines, True


def cmd_count(args: argparse.Namespace) -> tuple[dict[str, Any], list[str], bool]:
    n = _nonneg("n", args.n)
    a, s = cores.a3(n), cores.asc3(n)
    u = len(geometry.solutions_bruteforce(12 * n + 4))
    data = {"n": n, "a3": a, "asc3": s, "u": u}
    lines = [f"a3({n}) = {a}", f"asc3({n}) = {s}", f"|U_{12 * n + 4}| = {u}"]
    return data, lines, True


def cmd_factor(args: argparse.Namespace) -> tuple[dict[str, Any], list[str], bool]:
    M = args.m
    if M <= 0:
        raise UsageError(f"--m must be positive, got {M}")
    if M % 3 == 0:
        raise UsageError(f"--m must not be divisible by 3, got {M}")
    nd = eisenstein.norm_data(M)
    reps = eisenstein.norm_representations(M)
    splits = []
    for p, e in nd.split:
        x = eisenstein.split_prime(p)
        splits.append({"p": p, "nu": e, "x_p": str(x), "half": list(x.half)})
    data = {
        "M": M,
        "factors": [list(pe) for pe in nd.factors],
        "representable": nd.representable,
        "q": nd.q,
        "splittings": splits,
        "V_size": nd.num_classes,
        "representations": [list(z.half) for z in reps],
    }
    lines = [f"{M} = " + (" * ".join(f"{p}^{e}" for p, e in nd.factors) or "1")]
    if not nd.representable:
        bad = [p for p, e in nd.inert if e % 2]
        lines.append(f"not a norm: odd exponent at primes 2 mod 3 {bad}")
    else:
        lines.append(f"q = {nd.q}")
        for s in splits:
            lines.append(f"  x_{s['p']} = {s['x_p']} = {_pt(tuple(s['half']))}/2   (nu = {s['nu']})")
        lines.append(f"|V| = {nd.num_classes}")
        lines.append("canonical elements of norm M: " + ", ".join(eisenstein.format_half(z) for z in reps))
    return data, lines, True


def cmd_verify(args: argparse.Namespace) -> tuple[dict[str, Any], list[str], bool]:
    n_max = _nonneg("max", args.max)
    results = run_all(n_max)
    data = {
        "max": n_max,
        "suites": [
            {"name": r.name, "upto": r.upto, "checked": r.checked, "passed": r.passed, "failures": r.failures[:10]}
            for r in results
        ],
    }
    width = max(len(r.name) for r in results)
    lines = [f"{'suite':<{width}}  {'n<=':>5}  {'checked':>7}  result"]
    for r in results:
        lines.append(f"{r.name:<{width}}  {r.upto:>5}  {r.checked:>7}  {'PASS' if r.passed else 'FAIL'}")
        lines.extend(f"    {f}" for f in r.failures[:10])
    return data, lines, all(r.passed for r in results)


def _identity_reports(args: argparse.Namespace) -> list[dict[str, Any]]:
    ids = identities
    if args.name == "hs":
        if args.k is None or args.n is None:
            raise UsageError("identity hs needs --k and --n")
        k, n = args.k, _nonneg("n", args.n)
        if not ids.hs_valid(k):
            raise UsageError(f"k = {k} is divisible by 3 or has a non-square part made of primes 2 mod 3")
        N = k * n + (k - 1) // 3
        return [ids.report("a3(kn+(k-1)/3) from a3(n)", {"k": k, "n": n, "N": N}, ids.hs_count(k, n), cores.a3(N))]

    if args.name == "amazing":
        if args.n is None:
            raise UsageError("identity amazing needs --n (and optionally --k, default 0)")
        n, k = _nonneg("n", args.n), _nonneg("k", args.k or 0)
        N = ids.amazing_N(n, k)
        left, right = cores.enumerate_charvecs(n), cores.enumerate_charvecs(n + 3**k)
        image = sorted(ids.alpha(c, c2).triple for c in left for c2 in right)
        target = sorted(c.triple for c in cores.enumerate_charvecs(N))
        params = {"n": n, "k": k, "N": N}
        return [
            ids.report("a3(N) = a3(n) a3(n+3^k)", params, cores.a3(N), cores.a3(n) * cores.a3(n + 3**k)),
            ids.report("alpha maps C_n x C_n+3^k onto C_N", params, image, target),
        ]

    # han
    if args.N is not None:
        N = _nonneg("N", args.N)
        if cores.a3(N) != 0:
            raise UsageError(f"a3({N}) = {cores.a3(N)}; decomposition needs a3(N) = 0")
        w = ids.han_iii_decompose(N)
        params = {"N": N, "form": w.form, "n": w.n, "m": w.m, "k": w.k, "p": w.p}
        return [ids.report("N rebuilt from Han form " + w.form, params, w.value(), N)]
    if args.k is not None:
        if args.n is None or args.m is None:
            raise UsageError("identity han with --k needs --n and --m")
        v = ids.han_ii_fixed(args.n, args.m, args.k)
        params = {"n": args.n, "m": args.m, "k": args.k, "N": v.N, "hypothesis": v.hypothesis, "witness": v.witness}
        return [ids.report("a3(N) = 0 for Han form (ii)", params, v.a3, 0)]
    if args.m is not None:
        n = _nonneg("n", args.n or 0)
        if args.m < 1:
            raise UsageError("--m must be at least 1")
        N = ids.han_i(n, args.m)
        return [ids.report("a3(N) = 0 for Han form (i)", {"n": n, "m": args.m, "N": N}, cores.a3(N), 0)]
    N, count = ids.han_ii_counterexample()
    brute = len(cores.enumerate_3cores_bruteforce(N)) if N <= cores.brute_max() else None
    return [
        ids.report("Han form (ii) as stated fails at N=58", {"n": 0, "m": 1, "k": 6, "N": N}, count, 2),
        ids.report("partition oracle count at N=58", {"N": N}, brute, count),
    ]


def cmd_identity(args: argparse.Namespace) -> tuple[dict[str, Any], list[str], bool]:
    reports = _identity_reports(args)
    lines = [
        f"[{'PASS' if r['verdict'] else 'FAIL'}] {r['claim']}  {json.dumps(r['parameters'])}  lhs={r['lhs']} rhs={r['rhs']}"
        for r in reports
    ]
    return {"reports": reports}, lines, all(r["verdict"] for r in reports)


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="corecrank", description=__doc__.splitlines()[0])
    parser.add_argument("--format", choices=("text", "json"), default="text")
    sub = parser.add_subparsers(dest="verb", required=True)

    p = sub.add_parser("solve", help="list the solutions of x^2+3y^2=K")
    p.add_argument("--k", type=int, required=True)
    p.set_defaults(func=cmd_solve)

    p = sub.add_parser("cores", help="list the 3-cores of N")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--partitions", action="store_true")
    p.set_defaults(func=cmd_cores)

    p = sub.add_parser("count", help="a3(N), asc3(N) and |U_12N+4|")
    p.add_argument("--n", type=int, required=True)
    p.set_defaults(func=cmd_count)

    p = sub.add_parser("factor", help="elements of norm M in Z[w]")
    p.add_argument("--m", type=int, required=True)
    p.set_defaults(func=cmd_factor)

    p = sub.add_parser("verify", help="run the brute-force cross-checks up to N")
    p.add_argument("--max", type=int, required=True)
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("identity", help="check one of the counting identities")
    p.add_argument("--name", choices=("hs", "amazing", "han"), required=True)
    p.add_argument("--k", type=int)
    p.add_argument("--n", type=int)
    p.add_argument("--m", type=int)
    p.add_argument("--N", type=int)
    p.set_defaults(func=cmd_identity)
    return parser


def main(argv: Sequence[str] | None = None) -> int:
    parser = build_parser()
    # ``--format`` is accepted on either side of the verb.
    argv = list(sys.argv[1:] if argv is None else argv)
    fmt = None
    for i, tok in enumerate(argv):
        if tok.startswith("--format="):
            fmt = tok.split("=", 1)[1]
            del argv[i]
            break
        if tok == "--format" and i + 1 < len(argv):
            fmt = argv[i + 1]
            del argv[i : i + 2]
            break
    if fmt is not None:
        argv = ["--format", fmt] + argv
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    try:
        data, lines, ok = args.func(args)
    except (UsageError, ValueError) as exc:
        print(f"corecrank: error: {exc}", file=sys.stderr)
        return 2
    if args.format == "json":
        print(json.dumps(data))
    else:
        print("\n".join(lines))
    if not ok:
        print("corecrank: verification failed", file=sys.stderr)
        return 1
    return 0


if __name__ == "__main__":
    sys.exit(main())
