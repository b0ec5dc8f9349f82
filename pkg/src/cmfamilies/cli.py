"""Command-line frontend: families | cuspidal | rigid | leaves | symbols | verify.

Output is deterministic: canonical family order, sorted labels, sorted JSON
keys.  Exit codes: 0 success, 1 verification failure, 2 validation error.
"""
from __future__ import annotations

import argparse
import json
import sys

from .cuspidal import (
    annotated_families,
    leaves_B,
    leaves_D,
    rigid_modules,
)
from .exact import CherednikParameter, parse_rational
from .families import FamilyPartition, irr_labels
from .partitions import format_bipartition, format_d_label, parse_bipartition
from .symbols import bar, symbol_of
from .verify import JOBS_ENV_VAR, run_suites


class ValidationError(Exception):
    pass


def _build_param(args) -> CherednikParameter:
    t = args.type
    try:
        if t == "A":
            if args.c is None:
                raise ValidationError("type A needs --c")
            return CherednikParameter.type_A(parse_rational(args.c))
        if t == "B":
            if args.c1 is None or args.kappa is None:
                raise ValidationError("type B needs --c1 and --kappa")
            return CherednikParameter.type_B(parse_rational(args.c1), parse_rational(args.kappa))
        if t == "D":
            if args.kappa is None:
                raise ValidationError("type D needs --kappa")
            return CherednikParameter.type_D(parse_rational(args.kappa))
        if args.a is None or args.b is None:
            raise ValidationError("type I2 needs --a and --b")
        return CherednikParameter.type_I2(parse_rational(args.a), parse_rational(args.b), m=args.m)
    except (ValueError, ZeroDivisionError) as exc:
        raise ValidationError(str(exc)) from None


def _size(args) -> int:
    if args.type == "I2":
        if args.m is None:
            raise ValidationError("type I2 needs --m (with m >= 5)")
        if args.m < 5:
            raise ValidationError("need m >= 5")
        return args.m
    if args.n is None:
        raise ValidationError(f"type {args.type} needs --n")
    if args.n < 1 or (args.type == "D" and args.n < 2):
        raise ValidationError("size out of range")
    return args.n


def _label_str(type_tag: str, label) -> str:
    if type_tag == "A":
        return "[" + ",".join(str(p) for p in label) + "]"
    if type_tag == "B":
        return format_bipartition(label)
    if type_tag == "D":
        return format_d_label(label)
    return str(label)


def _label_json(type_tag: str, label):
    if type_tag == "A":
        return list(label)
    if type_tag == "B":
        return [list(label[0]), list(label[1])]
    if type_tag == "D":
        return [list(label[0]), list(label[1]), label[2]]
    return label


def _partition_json(fp: FamilyPartition) -> dict:
    fams = []
    for f in fp.families:
        fams.append(
            {
                "members": [_label_json(fp.type_tag, x) for x in f.members],
                "is_singleton": f.is_singleton,
                "cuspidal": f.cuspidal,
                "leaf_label": f.leaf_label,
            }
        )
    key = "m" if fp.type_tag == "I2" else "n"
    return {
        "type": fp.type_tag,
        key: fp.size,
        "param": fp.param.to_json(),
        "method": fp.method,
        "families": fams,
    }


def _partition_text(fp: FamilyPartition) -> str:
    lines = [f"{fp.type_tag} size={fp.size} param={fp.param.to_json()} method={fp.method}"]
    for f in fp.families:
        mark = " (cuspidal)" if f.cuspidal else ""
        lines.append("  {" + ", ".join(_label_str(fp.type_tag, x) for x in f.members) + "}" + mark)
    return "\n".join(lines)


def _singleton_partition(type_tag: str, size: int, param, method: str) -> FamilyPartition:
    from .families import Family, _canonical

    fams = [Family.of([lab]) for lab in irr_labels(type_tag, size)]
    return _canonical(fams, type_tag=type_tag, size=size, param=param, method=method)


def _emit(args, payload_json, payload_text: str) -> None:
    if args.format == "json":
        print(json.dumps(payload_json, sort_keys=True, indent=2))
    else:
        print(payload_text)


def cmd_families(args) -> int:
    param = _build_param(args)
    size = _size(args)
    methods = ["CM", "Lusztig"] if args.method == "both" else [args.method]
    parts = []
    for method in methods:
        if args.generic:
            # generic (e.g. irrational) parameters: all families are singletons
            parts.append(_singleton_partition(args.type, size, param, method))
        else:
            try:
                parts.append(annotated_families(args.type, size, param, method))
            except ValueError as exc:
                raise ValidationError(str(exc)) from None
    if args.format == "json":
        out = [_partition_json(fp) for fp in parts]
        payload = out[0] if len(out) == 1 else {
            "partitions": out,
            "equal": parts[0].as_sets() == parts[1].as_sets(),
        }
        _emit(args, payload, "")
    else:
        text = "\n".join(_partition_text(fp) for fp in parts)
        if len(parts) == 2:
            text += f"\nequal: {parts[0].as_sets() == parts[1].as_sets()}"
        print(text)
    return 0


def cmd_cuspidal(args) -> int:
    param = _build_param(args)
    size = _size(args)
    methods = ["CM", "Lusztig"] if args.method == "both" else [args.method]
    out = []
    for method in methods:
        try:
            fp = annotated_families(args.type, size, param, method)
        except ValueError as exc:
            raise ValidationError(str(exc)) from None
        out.append(replace_families_cuspidal_only(fp))
    if args.format == "json":
        payload = [_partition_json(fp) for fp in out]
        _emit(args, payload[0] if len(payload) == 1 else payload, "")
    else:
        print("\n".join(_partition_text(fp) for fp in out))
    return 0


def replace_families_cuspidal_only(fp: FamilyPartition) -> FamilyPartition:
    from dataclasses import replace

    return replace(fp, families=tuple(f for f in fp.families if f.cuspidal))


def cmd_rigid(args) -> int:
    param = _build_param(args)
    size = _size(args)
    mode = {"closed": "closed_form", "oracle": "equation_oracle"}.get(args.mode, args.mode)
    try:
        labels = rigid_modules(args.type, size, param, mode)
    except ValueError as exc:
        raise ValidationError(str(exc)) from None
    payload = {
        "type": args.type,
        "m" if args.type == "I2" else "n": size,
        "param": param.to_json(),
        "mode": mode,
        "rigid": [_label_json(args.type, lab) for lab in labels],
    }
    text = "\n".join(_label_str(args.type, lab) for lab in labels) or "(none)"
    _emit(args, payload, text)
    return 0


def cmd_leaves(args) -> int:
    param = _build_param(args)
    size = _size(args)
    try:
        if args.type == "B":
            lp = leaves_B(size, param.c1, param.kappa)
        elif args.type == "D":
            lp = leaves_D(size, param.kappa)
        else:
            raise ValidationError("leaves are computed for types B and D")
    except ValueError as exc:
        raise ValidationError(str(exc)) from None
    payload = lp.to_json()
    text = "\n".join(
        f"L_{e['k']} dim={e['dim']} parabolic={e['parabolic']} below={e['below']}"
        for e in payload
    )
    _emit(args, payload, text)
    return 0


def cmd_symbols(args) -> int:
    if args.type != "B":
        raise ValidationError("symbols are computed for type B")
    param = _build_param(args)
    try:
        bp = parse_bipartition(args.bp)
    except ValueError as exc:
        raise ValidationError(str(exc)) from None
    n = sum(bp[0]) + sum(bp[1])
    N = args.enn if args.enn is not None else max(n, 1)
    try:
        s = symbol_of(bp, N, param.c1, param.kappa)
        if args.bar is not None:
            s = bar(s, args.bar)
    except (ValueError, AssertionError) as exc:
        raise ValidationError(str(exc)) from None
    text = "({} ; {})".format(
        ",".join(str(b) for b in s.beta), ",".join(str(g) for g in s.gamma)
    )
    _emit(args, s.to_json(), text)
    return 0


def cmd_verify(args) -> int:
    keys = None if args.suite == "all" else [k.strip() for k in args.suite.split(",")]
    try:
        results = run_suites(keys, jobs=args.jobs)
    except KeyError as exc:
        raise ValidationError(str(exc)) from None
    ok = True
    for r in results:
        print(f"[{'PASS' if r.passed else 'FAIL'}] {r.name}: {r.detail}")
        ok = ok and r.passed
    return 0 if ok else 1


def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(
        prog="cmfamilies",
        description="Calogero-Moser and Lusztig families, cuspidal families, "
        "symplectic leaves and rigid modules for types A, B, D and I2(m).",
    )
    sub = ap.add_subparsers(dest="subcommand", required=True)

    def common(p, need_method=False):
        p.add_argument("--type", required=True, choices=["A", "B", "D", "I2"])
        p.add_argument("--n", type=int)
        p.add_argument("--m", type=int, help="dihedral order parameter (I2 only)")
        p.add_argument("--c", help="type A weight, rational p/q")
        p.add_argument("--c1", help="type B weight of the eps-class")
        p.add_argument("--kappa", help="type B/D weight of the transposition class")
        p.add_argument("--a", help="I2 weight of the t-class")
        p.add_argument("--b", help="I2 weight of the s-class")
        p.add_argument("--format", choices=["json", "text"], default="json")
        if need_method:
            p.add_argument("--method", choices=["CM", "Lusztig", "both"], default="CM")

    p = sub.add_parser("families", help="family partition of Irr W")
    common(p, need_method=True)
    p.add_argument("--generic", action="store_true",
                   help="treat the parameter as generic: all families singletons")
    p.set_defaults(func=cmd_families)

    p = sub.add_parser("cuspidal", help="cuspidal families only")
    common(p, need_method=True)
    p.set_defaults(func=cmd_cuspidal)

    p = sub.add_parser("rigid", help="rigid modules")
    common(p)
    p.add_argument("--mode", choices=["closed", "oracle", "closed_form", "equation_oracle"],
                   default="closed_form")
    p.set_defaults(func=cmd_rigid)

    p = sub.add_parser("leaves", help="symplectic-leaf poset (types B and D)")
    common(p)
    p.set_defaults(func=cmd_leaves)

    p = sub.add_parser("symbols", help="type-B symbol of a bipartition")
    common(p)
    p.add_argument("--bp", required=True, help='bipartition, e.g. "[2,1|1]"')
    p.add_argument("--enn", type=int, help="row length N (default: max(n,1))")
    p.add_argument("--bar", type=int, help="apply the sign-twist bar at this t")
    p.set_defaults(func=cmd_symbols)

    p = sub.add_parser("verify", help="run the theorem-verification suites")
    p.add_argument("--suite", default="all",
                   help='"all" or comma-separated suite numbers, e.g. "1,7"')
    p.add_argument("--max-n", type=int, default=None,
                   help="accepted for compatibility; suites use their stated grids")
    p.add_argument("--jobs", type=int, default=None,
                   help=f"parallel suite workers (default: ${JOBS_ENV_VAR} or 1)")
    p.set_defaults(func=cmd_verify)
    return ap


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except ValidationError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
