"""Command-line front end.

Data syntax:
  * weights: "[a1,...,ar]" in fundamental-weight coordinates;
  * affine elements: whitespace/'*'-separated products of tokens
    "e", "s<k>" (simple reflections; "s0" is the affine one), "t[...]"
    (translations) and "o[...]" (the length-0 element in the Z.Phi-class of
    the bracketed weight), e.g. "s1 s2*t[1,0]";
  * character files: JSON {"basis": "Weyl"|"good",
                           "mults": [{"weight": [...], "count": n}, ...]}.

Exit codes: 0 success, 1 verification failure, 2 usage or parse error.
A JSON cache of Kostant partition tables can be supplied with --cache or the
EXOTIC_CACHE_DIR environment variable; stale versions are ignored.
"""

from __future__ import annotations

import argparse
import json
import os
import sys

from .laurent import LaurentPoly
from .rootdata import RootSystem, RootSystemError, build_root_system
from . import affweyl, charring, exotic_k, heckebraid, tiltmult, verify
from .affweyl import AffineElement
from .charring import CharacterMultiset
from .exotic_k import KClass
from .heckebraid import HeckeElement

CACHE_VERSION = 1


class CliError(ValueError):
    pass


# ---------------------------------------------------------------------------
# Parsing


def parse_weight(rs: RootSystem, text: str):
    try:
        coords = json.loads(text)
    except json.JSONDecodeError as exc:
        raise CliError(f"bad weight literal {text!r}: {exc}") from None
    if (
        not isinstance(coords, list)
        or len(coords) != rs.rank
        or not all(isinstance(c, int) for c in coords)
    ):
        raise CliError(f"weight {text!r} must be {rs.rank} integers")
    return tuple(coords)


def parse_element(rs: RootSystem, text: str) -> AffineElement:
    x = affweyl.identity(rs)
    gens = affweyl.simple_generators(rs)
    for token in text.replace("*", " ").split():
        if token == "e":
            continue
        if token.startswith("t[") and token.endswith("]"):
            x = affweyl.aff_mul(rs, x, affweyl.t_lambda(rs, parse_weight(rs, token[1:])))
        elif token.startswith("o[") and token.endswith("]"):
            x = affweyl.aff_mul(
                rs, x, affweyl.omega_of_weight(rs, parse_weight(rs, token[1:]))
            )
        elif token.startswith("s"):
            try:
                gid = int(token[1:])
            except ValueError:
                raise CliError(f"bad generator token {token!r}") from None
            if gid not in gens:
                raise CliError(f"no simple reflection {token!r} in {rs.spec}")
            x = affweyl.aff_mul(rs, x, gens[gid])
        else:
            raise CliError(f"bad element token {token!r}")
    return x


def parse_omega_arg(rs: RootSystem, text: str) -> AffineElement:
    if text == "e":
        return affweyl.identity(rs)
    if text == "omega":
        nontrivial = [
            om for om in affweyl.omega_elements(rs).values()
            if om != affweyl.identity(rs)
        ]
        if len(nontrivial) != 1:
            raise CliError(
                "'omega' is ambiguous here; use o[...] with a class representative"
            )
        return nontrivial[0]
    if text.startswith("o[") and text.endswith("]"):
        return affweyl.omega_of_weight(rs, parse_weight(rs, text[1:]))
    x = parse_element(rs, text)
    if affweyl.aff_length(rs, x) != 0:
        raise CliError(f"element {text!r} does not have length 0")
    return x


def parse_simple_ids(rs: RootSystem, tokens) -> list:
    gens = affweyl.simple_generators(rs)
    out = []
    for token in tokens:
        if not token.startswith("s"):
            raise CliError(f"expected a generator token, got {token!r}")
        try:
            gid = int(token[1:])
        except ValueError:
            raise CliError(f"bad generator token {token!r}") from None
        if gid not in gens:
            raise CliError(f"no simple reflection {token!r} in {rs.spec}")
        out.append(gid)
    return out


def load_character(rs: RootSystem, path: str) -> CharacterMultiset:
    try:
        with open(path) as fh:
            doc = json.load(fh)
    except (OSError, json.JSONDecodeError) as exc:
        raise CliError(f"cannot read character file {path}: {exc}") from None
    if not isinstance(doc, dict) or "basis" not in doc or "mults" not in doc:
        raise CliError("character file needs 'basis' and 'mults' fields")
    mults = {}
    for rec in doc["mults"]:
        w = tuple(rec["weight"])
        if len(w) != rs.rank:
            raise CliError(f"character weight {w} has wrong rank")
        mults[w] = mults.get(w, 0) + int(rec["count"])
    try:
        return CharacterMultiset.of(rs, mults, doc["basis"])
    except ValueError as exc:
        raise CliError(str(exc)) from None


# ---------------------------------------------------------------------------
# Rendering


def weight_str(lam) -> str:
    return "[" + ",".join(str(c) for c in lam) + "]"


def element_str(rs: RootSystem, x: AffineElement) -> str:
    omega, word = affweyl.reduced_word(rs, x)
    parts = []
    if omega != affweyl.identity(rs):
        parts.append("o" + weight_str(omega.t))
    parts.extend(f"s{gid}" for gid in word)
    return " ".join(parts) if parts else "e"


def element_json(x: AffineElement) -> dict:
    return {"finite": [list(r) for r in x.w], "translation": list(x.t)}


def poly_str(p: LaurentPoly) -> str:
    return str(p)


def _coef_prefix(p: LaurentPoly) -> str:
    if p == LaurentPoly.one():
        return ""
    s = str(p)
    if len(p.c) > 1 or s.startswith("-"):
        return f"({s})*"
    return f"{s}*"


def hecke_str(rs: RootSystem, xi: HeckeElement) -> str:
    if not xi.terms:
        return "0"
    items = sorted(
        xi.terms.items(),
        key=lambda kv: _hecke_sort_key(rs, kv[0]),
    )
    return " + ".join(
        f"{_coef_prefix(p)}T[{element_str(rs, x)}]" for x, p in items
    )


def _hecke_sort_key(rs, x):
    omega, word = affweyl.reduced_word(rs, x)
    return (affweyl.aff_length(rs, x), omega.t, word)


def hecke_json(rs: RootSystem, xi: HeckeElement) -> list:
    items = sorted(xi.terms.items(), key=lambda kv: _hecke_sort_key(rs, kv[0]))
    return [
        {"element": element_json(x), "word": element_str(rs, x), "poly": p.pairs()}
        for x, p in items
    ]


def kclass_str(c: KClass) -> str:
    if not c.terms:
        return "0"
    return " + ".join(
        f"{_coef_prefix(p)}m{weight_str(w)}"
        for w, p in sorted(c.terms.items(), reverse=True)
    )


def kclass_json(c: KClass) -> list:
    return [
        {"weight": list(w), "poly": p.pairs()} for w, p in sorted(c.terms.items())
    ]


def character_json(cm: CharacterMultiset) -> dict:
    return {
        "basis": cm.basis_kind,
        "mults": [{"weight": list(w), "count": n} for w, n in cm.mults],
    }


# ---------------------------------------------------------------------------
# Kostant cache persistence


def _cache_path(args):
    if args.cache:
        return args.cache
    env = os.environ.get("EXOTIC_CACHE_DIR")
    if env:
        return os.path.join(env, "exotictilt-cache.json")
    return None


def load_cache(rs: RootSystem, path):
    if not path or not os.path.exists(path):
        return
    try:
        with open(path) as fh:
            doc = json.load(fh)
    except (OSError, json.JSONDecodeError):
        return
    if not isinstance(doc, dict) or doc.get("version") != CACHE_VERSION:
        return
    table = doc.get("kostant", {}).get(rs.spec, {})
    memo = rs.memo("kostant")
    for key, pairs in table.items():
        try:
            mu = tuple(int(t) for t in key.split(","))
            if len(mu) != rs.rank:
                continue
            memo[mu] = LaurentPoly.from_pairs(pairs)
        except (ValueError, TypeError):
            continue


def save_cache(rs: RootSystem, path):
    if not path:
        return
    doc = {"version": CACHE_VERSION, "kostant": {}}
    if os.path.exists(path):
        try:
            with open(path) as fh:
                old = json.load(fh)
            if isinstance(old, dict) and old.get("version") == CACHE_VERSION:
                doc = old
        except (OSError, json.JSONDecodeError):
            pass
    table = doc.setdefault("kostant", {}).setdefault(rs.spec, {})
    for mu, poly in rs.memo("kostant").items():
        table[",".join(str(c) for c in mu)] = poly.pairs()
    os.makedirs(os.path.dirname(os.path.abspath(path)), exist_ok=True)
    with open(path, "w") as fh:
        json.dump(doc, fh, sort_keys=True)


# ---------------------------------------------------------------------------
# Commands


def _emit(args, text_form, json_form):
    print(json.dumps(json_form, sort_keys=True) if args.json else text_form)


def cmd_rootinfo(rs, args):
    pos = [list(r.coords) for r in rs.positive_roots]
    comps = [
        {"indices": [i + 1 for i in idx], "highest_root": list(h.coords)}
        for idx, h in rs.components
    ]
    doc = {
        "spec": rs.spec,
        "rank": rs.rank,
        "cartan_matrix": [list(r) for r in rs.cartan_matrix],
        "positive_roots": pos,
        "weyl_order": len(rs.weyl_group()),
        "omega_order": len(affweyl.omega_elements(rs)),
        "components": comps,
    }
    text = (
        f"{rs.spec}: rank {rs.rank}, {len(pos)} positive roots, "
        f"|W| = {doc['weyl_order']}, |Omega| = {doc['omega_order']}"
    )
    _emit(args, text, doc)
    return 0


def cmd_length(rs, args):
    x = parse_element(rs, args.element)
    ll = affweyl.aff_length(rs, x)
    _emit(args, str(ll), {"element": element_json(x), "length": ll})
    return 0


def cmd_reduced(rs, args):
    x = parse_element(rs, args.element)
    omega, word = affweyl.reduced_word(rs, x)
    text = element_str(rs, x)
    doc = {
        "omega": element_json(omega),
        "word": [f"s{g}" for g in word],
        "length": len(word),
    }
    _emit(args, text, doc)
    return 0


def cmd_wlambda(rs, args):
    lam = parse_weight(rs, args.weight)
    elt, delta = affweyl.w_lambda(rs, lam)
    text = f"w_lambda = {element_str(rs, elt)}, delta = {delta}"
    _emit(args, text, {"element": element_json(elt), "delta": delta})
    return 0


def cmd_bruhat(rs, args):
    x = parse_element(rs, args.x)
    y = parse_element(rs, args.y)
    res = affweyl.bruhat_leq(rs, x, y)
    _emit(args, "true" if res else "false", {"leq": res})
    return 0


def cmd_hecke_mul(rs, args):
    xi = HeckeElement.basis(parse_element(rs, args.x))
    eta = HeckeElement.basis(parse_element(rs, args.y))
    prod = heckebraid.hecke_mul(rs, xi, eta)
    _emit(args, hecke_str(rs, prod), hecke_json(rs, prod))
    return 0


def cmd_theta(rs, args):
    lam = parse_weight(rs, args.weight)
    th = heckebraid.theta(rs, lam)
    _emit(args, hecke_str(rs, th), hecke_json(rs, th))
    return 0


def cmd_kclass(rs, args):
    if args.kind == "line":
        c = exotic_k.line_bundle_class(rs, parse_weight(rs, args.args[0]))
    elif args.kind == "delta":
        c = exotic_k.delta_class(rs, parse_weight(rs, args.args[0]))
    elif args.kind == "nabla":
        c = exotic_k.nabla_class(rs, parse_weight(rs, args.args[0]))
    elif args.kind == "bs":
        omega = parse_omega_arg(rs, args.args[0])
        seq = parse_simple_ids(rs, args.args[1:])
        c = exotic_k.bott_samelson_class(rs, omega, seq, reverse=args.reverse)
    else:
        raise CliError(f"unknown kclass kind {args.kind!r}")
    _emit(args, kclass_str(c), kclass_json(c))
    return 0


def cmd_qanalogue(rs, args):
    lam = parse_weight(rs, args.lam)
    mu = parse_weight(rs, args.mu)
    p = charring.lusztig_q(rs, lam, mu)
    _emit(args, poly_str(p), p.pairs())
    return 0


def cmd_gamma(rs, args):
    lam = parse_weight(rs, args.lam)
    nu = parse_weight(rs, args.nu)
    p = tiltmult.gamma_graded_char(rs, lam, nu)
    _emit(args, poly_str(p), p.pairs())
    return 0


def cmd_tilt(rs, args):
    if args.kind in ("std", "costd"):
        cm = load_character(rs, args.charfile)
        mu = parse_weight(rs, args.weight)
        fn = tiltmult.std_mult if args.kind == "std" else tiltmult.costd_mult
        p = fn(rs, cm, mu)
        _emit(args, poly_str(p), p.pairs())
        return 0
    # dominant
    lam = parse_weight(rs, args.weight)
    tilt_char = load_character(rs, args.tilt_char) if args.tilt_char else None
    c = tiltmult.dominant_tilting_class(rs, lam, tilt_char)
    _emit(args, kclass_str(c), kclass_json(c))
    return 0


def cmd_reconcile(rs, args):
    cm = load_character(rs, args.charfile)
    rep = tiltmult.reconcile(rs, cm)
    doc = {"status": rep.status, "detail": rep.detail}
    text = rep.status if rep.matched else (
        "mismatch at " + ", ".join(str(d["weight"]) for d in rep.detail)
    )
    _emit(args, text, doc)
    return 0 if rep.matched else 1


def cmd_verify(rs, args):
    reports = verify.run_suites(rs, args.suite, args.radius, args.seed)
    ok = all(r.passed for r in reports)
    if args.json:
        doc = [
            {
                "name": r.name,
                "passed": r.passed,
                "checked": r.checked,
                "failures": r.failures[:10],
            }
            for r in reports
        ]
        print(json.dumps(doc, sort_keys=True))
    else:
        for r in reports:
            print(r.summary())
    return 0 if ok else 1


# ---------------------------------------------------------------------------
# Argument parsing and dispatch


def build_parser():
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--json", action="store_true", default=argparse.SUPPRESS,
                        help="emit JSON on stdout")
    common.add_argument("--cache", default=argparse.SUPPRESS,
                        help="path of the Kostant-table cache file")
    common.add_argument("--seed", type=int, default=argparse.SUPPRESS,
                        help="seed for randomized verification suites")
    parser = argparse.ArgumentParser(
        prog="exotictilt",
        description="Exact affine Hecke / exotic K-theory calculator",
        parents=[common],
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def add(name, fn, *spec_args):
        p = sub.add_parser(name, parents=[common])
        p.add_argument("spec", help="root-system type, e.g. A2 or A1xA1")
        for arg_name, kwargs in spec_args:
            p.add_argument(arg_name, **kwargs)
        p.set_defaults(fn=fn)
        return p

    add("rootinfo", cmd_rootinfo)
    add("length", cmd_length, ("element", {}))
    add("reduced", cmd_reduced, ("element", {}))
    add("wlambda", cmd_wlambda, ("weight", {}))
    add("bruhat", cmd_bruhat, ("x", {}), ("y", {}))
    add("hecke-mul", cmd_hecke_mul, ("x", {}), ("y", {}))
    add("theta", cmd_theta, ("weight", {}))

    pk = sub.add_parser("kclass", parents=[common])
    pk.add_argument("kind", choices=["line", "delta", "nabla", "bs"])
    pk.add_argument("spec")
    pk.add_argument("args", nargs="+")
    pk.add_argument("--reverse", action="store_true",
                    help="apply Bott-Samelson letters in reversed order")
    pk.set_defaults(fn=cmd_kclass)

    add("qanalogue", cmd_qanalogue, ("lam", {}), ("mu", {}))
    add("gamma", cmd_gamma, ("lam", {}), ("nu", {}))

    pt = sub.add_parser("tilt", parents=[common])
    pt.add_argument("kind", choices=["std", "costd", "dominant"])
    pt.add_argument("spec")
    pt.add_argument("--tilt-char", dest="tilt_char")
    pt.add_argument("rest", nargs="+")
    pt.set_defaults(fn=cmd_tilt)

    add("reconcile", cmd_reconcile, ("charfile", {}))

    pv = add("verify", cmd_verify)
    pv.add_argument("--radius", type=int, default=2)
    pv.add_argument("--suite", default="all",
                    choices=["bernstein", "module", "order", "all"])
    return parser


def run(argv) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return 2 if exc.code not in (0, None) else 0
    args.json = getattr(args, "json", False)
    args.cache = getattr(args, "cache", None)
    args.seed = getattr(args, "seed", 0)
    try:
        rs = build_root_system(args.spec)
    except RootSystemError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    if args.command == "tilt":
        if args.kind in ("std", "costd"):
            if len(args.rest) != 2:
                print("error: tilt std|costd <spec> <charfile> <weight>",
                      file=sys.stderr)
                return 2
            args.charfile, args.weight = args.rest
        else:
            if len(args.rest) != 1:
                print("error: tilt dominant <spec> <weight> [--tilt-char file]",
                      file=sys.stderr)
                return 2
            args.weight = args.rest[0]
    cache_path = _cache_path(args)
    load_cache(rs, cache_path)
    try:
        code = args.fn(rs, args)
    except (CliError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    save_cache(rs, cache_path)
    return code


def main():
    sys.exit(run(sys.argv[1:]))


if __name__ == "__main__":
    main()
