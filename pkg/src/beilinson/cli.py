"""Command-line interface.

Subcommands construct representations, check module-theoretic properties,
compute Jordan types, walk Auslander-Reiten orbits, and compare modules.
Every numeric flag can also be supplied through an environment variable
with the ``BNR_`` prefix (e.g. ``BNR_P=5`` stands in for ``--p 5``).
"""

from __future__ import annotations

import argparse
import json
import os
import sys

from . import emod, kronecker, properties, reps

ENV_PREFIX = "BNR_"


def _env_default(name: str):
    return os.environ.get(ENV_PREFIX + name.upper().replace("-", "_"))


def _add_int(parser: argparse.ArgumentParser, name: str, required: bool = False,
             default=None, help: str = ""):
    env = _env_default(name)
    if env is not None:
        default, required = int(env), False
    parser.add_argument(f"--{name}", type=int, required=required and default is None,
                        default=default, help=help)


def _parse_coeffs(text: str) -> tuple[int, ...]:
    return tuple(int(part) for part in text.replace(",", " ").split())


def _alpha_from_args(args, p: int | None = None) -> reps.ProjPoint:
    raw = args.alpha or _env_default("alpha")
    if raw is None:
        raise SystemExit("an --alpha value such as '1,0,0' is required here")
    return reps.ProjPoint(p if p is not None else args.p, _parse_coeffs(raw))


def _build_rep(args) -> reps.BeilinsonRep:
    kind = args.family
    if kind is None:
        raise SystemExit("supply either --rep FILE or a --family with its parameters")
    if args.p is None or args.r is None:
        raise SystemExit("--p and --r are required when constructing a family member")
    if kind == "projective":
        return reps.projective(args.p, args.n, args.r, args.i)
    if kind == "injective":
        return reps.injective(args.p, args.n, args.r, args.i)
    if kind == "simple":
        return reps.simple(args.p, args.n, args.r, args.i)
    if kind == "m":
        return reps.m_module(args.p, args.n, args.r, args.m, args.d)
    if kind == "w":
        return reps.w_module(args.p, args.n, args.r, args.m, args.d)
    if kind == "x":
        return reps.x_module(args.p, args.n, args.r, _alpha_from_args(args),
                             args.i, args.j)
    if kind == "e":
        lam = _parse_coeffs(args.lam or _env_default("lam") or "")
        if not lam:
            raise SystemExit("--lam is required for the e family")
        return kronecker.e_lambda(args.p, args.r, lam)
    raise SystemExit(f"unknown family {kind!r}")


def _load_rep(path: str) -> reps.BeilinsonRep:
    with open(path, "r", encoding="utf-8") as handle:
        return reps.BeilinsonRep.from_json(handle.read())


def _emit(payload, args) -> None:
    if args.format == "json":
        print(json.dumps(payload, indent=2, sort_keys=True))
    else:
        if isinstance(payload, dict):
            for key, value in payload.items():
                print(f"{key}: {value}")
        else:
            print(payload)


def _common_rep_flags(parser: argparse.ArgumentParser,
                      require_config: bool = False) -> None:
    _add_int(parser, "p", required=require_config,
             help="prime field characteristic")
    _add_int(parser, "n", default=2, help="number of vertices")
    _add_int(parser, "r", required=require_config,
             help="number of arrows per level")
    _add_int(parser, "m", help="top-degree parameter for the m/w families")
    _add_int(parser, "d", help="length parameter for the m/w families")
    _add_int(parser, "i", default=0, help="vertex index")
    _add_int(parser, "j", default=1, help="power of the linear form")
    parser.add_argument("--alpha", default=None,
                        help="comma-separated point coordinates, e.g. 1,0,0")
    parser.add_argument("--lam", default=None,
                        help="comma-separated scalars for the e family")


def _format_flag(parser: argparse.ArgumentParser) -> None:
    parser.add_argument("--format", choices=("text", "json"),
                        default=_env_default("format") or "text")


def cmd_construct(args) -> int:
    rep = _build_rep(args)
    text = rep.to_json()
    if args.out:
        with open(args.out, "w", encoding="utf-8") as handle:
            handle.write(text + "\n")
        print(f"wrote {args.out} (dims={rep.dims})")
    else:
        print(text)
    return 0


def cmd_check(args) -> int:
    rep = _load_rep(args.rep) if args.rep else _build_rep(args)
    checker = {
        "eip": properties.is_eip_def,
        "ekp": properties.is_ekp_def,
        "eip-hom": properties.is_eip_hom,
        "ekp-hom": properties.is_ekp_hom,
        "cjt": properties.constant_jordan_type,
    }[args.property]
    report = checker(rep, jobs=args.jobs)
    payload = json.loads(report.to_json())
    payload["jobs"] = args.jobs
    _emit(payload, args)
    return 0 if report.verdict else 1


def cmd_jordan_type(args) -> int:
    rep = _load_rep(args.rep) if args.rep else _build_rep(args)
    module = emod.forget(rep)
    if args.all_alpha:
        rows = []
        for point in reps.proj_points(rep.p, rep.r):
            jt = emod.jordan_type(module, point)
            rows.append({"alpha": list(point.coords), "jordan_type": str(jt),
                         "blocks": list(jt.counts)})
        _emit({"p": rep.p, "r": rep.r, "dims": list(rep.dims),
               "points": rows}, args)
    else:
        point = (_alpha_from_args(args, rep.p) if args.alpha
                 else reps.proj_points(rep.p, rep.r)[0])
        jt = emod.jordan_type(module, point)
        _emit({"alpha": list(point.coords), "jordan_type": str(jt),
               "blocks": list(jt.counts)}, args)
    return 0


def cmd_tau_orbit(args) -> int:
    rep = _load_rep(args.rep) if args.rep else _build_rep(args)
    info = kronecker.classify(rep, k_max=args.k_max)
    _emit({"dims": list(rep.dims), "kind": info.kind, "exponent": info.exponent,
           "bound": info.bound, "tits_form": info.tits_value,
           "k_max": args.k_max}, args)
    return 0


def cmd_width(args) -> int:
    rep = _load_rep(args.rep) if args.rep else _build_rep(args)
    report = kronecker.width(rep, k_max=args.k_max, jobs=args.jobs,
                             base_label=args.family or "module")
    if args.dot:
        with open(args.dot, "w", encoding="utf-8") as handle:
            handle.write(report.to_dot())
        print(f"wrote {args.dot}")
    _emit(json.loads(report.to_json()), args)
    return 0


def cmd_end_ring(args) -> int:
    rep = _load_rep(args.rep) if args.rep else _build_rep(args)
    _, info = emod.end_algebra(emod.forget(rep), seed=args.seed)
    _emit({"dimension": info.dimension, "commutative": info.commutative,
           "local": info.local, "regime": info.regime, "seed": args.seed}, args)
    return 0


def cmd_iso(args) -> int:
    left = _load_rep(args.left)
    right = _load_rep(args.right)
    if args.as_modules:
        verdict = emod.is_isomorphic(emod.forget(left), emod.forget(right),
                                     seed=args.seed)
    else:
        verdict = reps.rep_isomorphic(left, right, seed=args.seed)
    _emit({"verdict": verdict, "seed": args.seed}, args)
    return 0 if verdict == "yes" else 1


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="beilinson",
        description="Exact arithmetic for Beilinson quiver representations "
                    "and elementary abelian group algebra modules.")
    sub = parser.add_subparsers(dest="command", required=True)

    construct = sub.add_parser("construct", help="build a family member as JSON")
    construct.add_argument("family",
                           choices=("projective", "injective", "simple", "m",
                                    "w", "x", "e"))
    _common_rep_flags(construct, require_config=True)
    construct.add_argument("--out", default=None, help="output path (stdout if omitted)")
    construct.set_defaults(func=cmd_construct)

    def module_input(cmd, with_family=True):
        if with_family:
            cmd.add_argument("--family", default=None,
                             choices=("projective", "injective", "simple",
                                      "m", "w", "x", "e"))
        cmd.add_argument("--rep", default=None,
                         help="path to a representation JSON file")
        _common_rep_flags(cmd)
        _format_flag(cmd)

    check = sub.add_parser("check", help="decide a point-wise module property")
    check.add_argument("property", choices=("eip", "ekp", "eip-hom", "ekp-hom", "cjt"))
    module_input(check)
    _add_int(check, "jobs", default=1)
    check.set_defaults(func=cmd_check)

    jt = sub.add_parser("jordan-type", help="Jordan type at one or all points")
    module_input(jt)
    jt.add_argument("--all-alpha", action="store_true")
    jt.set_defaults(func=cmd_jordan_type)

    orbit = sub.add_parser("tau-orbit", help="classify within the translate orbit")
    module_input(orbit)
    _add_int(orbit, "k-max", default=8)
    orbit.set_defaults(func=cmd_tau_orbit)

    width_cmd = sub.add_parser("width", help="width invariant of the translate orbit")
    module_input(width_cmd)
    _add_int(width_cmd, "k-max", default=8)
    _add_int(width_cmd, "jobs", default=1)
    width_cmd.add_argument("--dot", default=None, help="also write a DOT graph here")
    width_cmd.set_defaults(func=cmd_width)

    end_ring = sub.add_parser("end-ring", help="endomorphism ring structure report")
    module_input(end_ring)
    _add_int(end_ring, "seed", default=0)
    end_ring.set_defaults(func=cmd_end_ring)

    iso = sub.add_parser("iso", help="compare two stored representations")
    iso.add_argument("left")
    iso.add_argument("right")
    iso.add_argument("--as-modules", action="store_true",
                     help="compare the underlying group algebra modules")
    _add_int(iso, "seed", default=0)
    _format_flag(iso)
    iso.set_defaults(func=cmd_iso)

    return parser


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    return args.func(args)


if __name__ == "__main__":
    sys.exit(main())
