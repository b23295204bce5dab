"""Command-line interface.

Subcommands: stats, matrix, bijection, shuffle, formula, verify.
Exit codes: 0 success (and every check passed), 1 a verification check
failed, 2 usage error, 3 request over the size limit.

Environment: MAJPERM_BACKEND picks the kernel build, MAJPERM_JOBS the
default worker count, MAJPERM_LIMIT the default enumeration ceiling
(12 unless raised, never above 14).
"""

from __future__ import annotations

import argparse
import os
import sys

from . import formulas, parallel, tableaux, verify
from .bijections import (cycle_map, nested_cycle_map, prefix_max_orbit,
                         split)
from .matrices import (ResidueMatrix, StatPair, count_matrix,
                       parse_statpair)
from .perms import (DEFAULT_ENUM_LIMIT, MAX_ENUM_N, SizeLimitError,
                    format_perm, imaj, inv, inverse, maj, parse_perm)
from .reports import FAIL, reports_to_json
from .shuffles import (shuffle_at, shuffle_gamma, shuffle_plus, wt_gamma,
                       wt_index)


def _default_limit() -> int:
    raw = os.environ.get("MAJPERM_LIMIT", "").strip()
    if not raw:
        return DEFAULT_ENUM_LIMIT
    return min(int(raw), MAX_ENUM_N)


def _render_matrix(m: ResidueMatrix, fmt: str) -> str:
    if fmt == "json":
        return m.to_json()
    if fmt == "csv":
        return m.to_csv().rstrip("\n")
    width = max(len(str(e)) for row in m.rows for e in row)
    lines = [f"S_{m.n} counts mod ({m.k}, {m.l}), {m.statpair.value}"]
    for row in m.rows:
        lines.append("  ".join(str(e).rjust(width) for e in row))
    return "\n".join(lines)


def _int_list(text: str) -> tuple[int, ...]:
    return tuple(int(t) for t in text.split(",") if t.strip())


def _build_parser() -> argparse.ArgumentParser:
    top = argparse.ArgumentParser(
        prog="majperm",
        description="Congruence classes of permutation statistics over S_n")
    sub = top.add_subparsers(dest="command", required=True)

    p = sub.add_parser("stats", help="maj, inv, imaj and the inverse word")
    p.add_argument("perm", help="one-line word, e.g. 6371452 or 10,3,...")
    p.add_argument("--format", choices=("text", "json"), default="text")

    p = sub.add_parser("matrix", help="k x l congruence-class count matrix")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--k", type=int, required=True)
    p.add_argument("--l", type=int, required=True)
    p.add_argument("--statpair", default="maj-imaj",
                   choices=[sp.value for sp in StatPair])
    p.add_argument("--method", default="enum",
                   choices=("enum", "syt", "formula"))
    p.add_argument("--format", default="json",
                   choices=("json", "csv", "table"))
    p.add_argument("--jobs", type=int, default=None)
    p.add_argument("--limit", type=int, default=None)

    p = sub.add_parser("bijection", help="apply one of the explicit maps")
    bsub = p.add_subparsers(dest="map", required=True)
    b = bsub.add_parser("fl", help="cycle the index set of values <= l")
    b.add_argument("--perm", required=True)
    b.add_argument("--l", type=int, required=True)
    b.add_argument("--n", type=int, default=None)
    b.add_argument("--inverse", action="store_true",
                   help="apply the inverse map instead")
    b = bsub.add_parser("g", help="cycle inside the bottom-kd subword")
    b.add_argument("--perm", required=True)
    b.add_argument("--d", type=int, required=True)
    b.add_argument("--k", type=int, required=True)
    b.add_argument("--n", type=int, default=None)
    b = bsub.add_parser("orbit", help="prefix-maximum reinsertion orbit")
    b.add_argument("--perm", required=True)
    b.add_argument("--k", type=int, required=True)
    b.add_argument("--n", type=int, default=None)

    p = sub.add_parser("shuffle", help="shuffle sets and their weights")
    p.add_argument("--pi", required=True)
    p.add_argument("--sigma", required=True)
    mode = p.add_mutually_exclusive_group()
    mode.add_argument("--gamma", type=_int_list, default=None,
                      help="gap composition, e.g. 1,2")
    mode.add_argument("--at", type=_int_list, default=None,
                      help="index set for the small values, e.g. 1,3,4")

    p = sub.add_parser("formula", help="closed-form values")
    fsub = p.add_subparsers(dest="family", required=True)
    f = fsub.add_parser("mnnn", help="divisor-sum entry for k = l = n")
    f.add_argument("--n", type=int, required=True)
    f.add_argument("--i", type=int, required=True)
    f.add_argument("--j", type=int, required=True)
    f = fsub.add_parser("prime", help="p x p matrix of S_p (or S_{p+1})")
    f.add_argument("--p", type=int, required=True)
    f.add_argument("--plus1", action="store_true")
    f.add_argument("--format", default="json",
                   choices=("json", "csv", "table"))
    f = fsub.add_parser("prime-power",
                        help="p^r x p^r matrix of S_{p^r}")
    f.add_argument("--p", type=int, required=True)
    f.add_argument("--r", type=int, required=True)
    f.add_argument("--format", default="json",
                   choices=("json", "csv", "table"))
    f = fsub.add_parser("b-rec", help="2 x 2 matrix by the recursion")
    f.add_argument("--n", type=int, required=True)
    f.add_argument("--normalized", action="store_true",
                   help="print the normalized matrix instead")
    f.add_argument("--format", default="json",
                   choices=("json", "csv", "table"))

    p = sub.add_parser("verify", help="run registered theorem checks")
    p.add_argument("theorem", nargs="?", default=None,
                   help="a theorem id, or 'all'")
    p.add_argument("--list", action="store_true",
                   help="list known theorem ids and exit")
    for flag in ("n-max", "nn-max", "d-max", "k-max", "np-max", "n-max-sets",
                 "n", "k", "l", "d", "p", "r", "i", "j", "item"):
        p.add_argument(f"--{flag}", type=int, default=None)
    p.add_argument("--jobs", type=int, default=None)
    p.add_argument("--limit", type=int, default=None)
    p.add_argument("--format", choices=("json", "text"), default="json")
    return top


def _cmd_stats(args) -> int:
    w = parse_perm(args.perm)
    values = {"perm": format_perm(w), "maj": maj(w), "inv": inv(w),
              "imaj": imaj(w), "inverse": format_perm(inverse(w))}
    if args.format == "json":
        import json
        print(json.dumps(values, separators=(",", ":")))
    else:
        print(f"maj={values['maj']} inv={values['inv']} "
              f"imaj={values['imaj']} inverse={values['inverse']}")
    return 0


def _cmd_matrix(args) -> int:
    limit = args.limit if args.limit is not None else _default_limit()
    limit = min(limit, MAX_ENUM_N)
    statpair = parse_statpair(args.statpair)
    if args.method == "enum":
        jobs = args.jobs if args.jobs is not None else parallel.default_jobs()
        parallel.compute_table(args.n, statpair, jobs, limit)
        m = count_matrix(args.n, args.k, args.l, statpair, limit)
    elif args.method == "syt":
        if statpair is not StatPair.MAJ_IMAJ:
            raise ValueError("the tableau method computes the maj-imaj pair")
        m = tableaux.joint_matrix_syt(args.n, args.k, args.l, limit)
    else:
        if args.k == args.l == args.n:
            m = formulas.mnnn_matrix(args.n)
        elif args.k == args.l == args.n - 1:
            m = formulas.n_plus_1_matrix(args.n - 1)
        else:
            raise ValueError(
                "closed forms cover k = l = n (divisor sum) and "
                "k = l = n - 1 (the +1 shift); other moduli need "
                "--method enum or syt")
        if statpair is not StatPair.MAJ_IMAJ:
            raise ValueError("closed forms carry the maj-imaj tag")
    print(_render_matrix(m, args.format))
    return 0


def _residue_line(name: str, before: int, after: int, modulus: int) -> str:
    return (f"{name}: {before} -> {after} "
            f"(mod {modulus}: {before % modulus} -> {after % modulus})")


def _cmd_bijection(args) -> int:
    w = parse_perm(args.perm)
    n = len(w)
    if args.n is not None and args.n != n:
        raise ValueError(f"--n {args.n} does not match the word length {n}")
    if args.map == "fl":
        if args.inverse:
            from .bijections import cycle_map_inverse
            image = cycle_map_inverse(w, args.l)
        else:
            image = cycle_map(w, args.l)
        print(f"image={format_perm(image)}")
        print(_residue_line("inv", inv(w), inv(image), n))
        print(_residue_line("imaj", imaj(w), imaj(image), args.l))
    elif args.map == "g":
        image = nested_cycle_map(w, args.d, args.k)
        print(f"image={format_perm(image)}")
        print(_residue_line("inv", inv(w), inv(image), args.k * args.d))
        print(_residue_line("imaj", imaj(w), imaj(image), args.d))
    else:
        orbit = prefix_max_orbit(w, args.k)
        for member in orbit:
            print(f"{format_perm(member)} inv={inv(member)} "
                  f"inv%{args.k}={inv(member) % args.k}")
    return 0


def _cmd_shuffle(args) -> int:
    pi = parse_perm(args.pi)
    sigma = parse_perm(args.sigma)
    if args.gamma is not None:
        members = shuffle_gamma(pi, sigma, args.gamma)
        for word in members:
            print(format_perm(word))
        print(f"wt_gamma={wt_gamma(args.gamma, len(pi))}")
        if members:
            anchored = min(split(word, len(pi)).positions
                           for word in members)
            print(f"wt_index(anchor)={wt_index(anchored, len(pi))}")
    elif args.at is not None:
        members = shuffle_at([pi], [sigma], args.at)
        for word in members:
            print(format_perm(word))
        print(f"wt_index={wt_index(args.at, len(pi))}")
    else:
        members = shuffle_plus(pi, sigma)
        for word in members:
            print(format_perm(word))
        print(f"count={len(members)}")
    return 0


def _cmd_formula(args) -> int:
    if args.family == "mnnn":
        print(formulas.mnnn(args.n, args.i, args.j))
        return 0
    if args.family == "prime":
        m = formulas.prime_matrix_plus1(args.p) if args.plus1 \
            else formulas.prime_matrix(args.p)
        print(_render_matrix(m, args.format))
        return 0
    if args.family == "prime-power":
        print(_render_matrix(formulas.prime_power_matrix(args.p, args.r),
                             args.format))
        return 0
    if args.normalized:
        rows = formulas.c_matrix(args.n)
        if args.format == "json":
            import json
            print(json.dumps({"n": args.n,
                              "rows": [[str(e) for e in row]
                                       for row in rows]},
                             separators=(",", ":")))
        else:
            for row in rows:
                print(",".join(str(e) for e in row))
    else:
        print(_render_matrix(formulas.b_matrix(args.n), args.format))
    return 0


def _cmd_verify(args) -> int:
    if args.list:
        for tid in verify.available():
            print(tid)
        return 0
    if args.theorem is None:
        raise ValueError("a theorem id (or 'all') is required unless "
                         "--list is given")
    overrides = {}
    for flag in ("n_max", "nn_max", "d_max", "k_max", "np_max", "n_max_sets",
                 "n", "k", "l", "d", "p", "r", "i", "j", "item"):
        value = getattr(args, flag)
        if value is not None:
            overrides[flag] = value
    limit = args.limit if args.limit is not None else _default_limit()
    limit = min(limit, MAX_ENUM_N)
    jobs = args.jobs if args.jobs is not None else parallel.default_jobs()
    ids = verify.available() if args.theorem == "all" else [args.theorem]
    reports = []
    for tid in ids:
        if jobs > 1:
            for n, sp in verify.tables_needed(tid, overrides):
                if n <= limit:
                    parallel.compute_table(n, sp, jobs, limit)
        reports.extend(verify.run(tid, overrides, limit))
    if args.format == "json":
        print(reports_to_json(reports))
    else:
        for r in reports:
            tag = r.status.upper()
            extra = f"  [{r.witness}]" if r.witness else ""
            print(f"{tag:7s} {r.theorem_id} {r.params}{extra}")
    failures = sum(1 for r in reports if r.status == FAIL)
    total = len(reports)
    print(f"{total - failures}/{total} checks passed", file=sys.stderr)
    return 1 if failures else 0


def main(argv=None) -> int:
    parser = _build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    try:
        if args.command == "stats":
            return _cmd_stats(args)
        if args.command == "matrix":
            return _cmd_matrix(args)
        if args.command == "bijection":
            return _cmd_bijection(args)
        if args.command == "shuffle":
            return _cmd_shuffle(args)
        if args.command == "formula":
            return _cmd_formula(args)
        return _cmd_verify(args)
    except SizeLimitError as exc:
        print(f"majperm: {exc}", file=sys.stderr)
        return 3
    except (ValueError, ArithmeticError) as exc:
        print(f"majperm: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
