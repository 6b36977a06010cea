"""Command-line front end.

Exit status: 0 on success, 1 on domain errors (non-invertible element,
failed divisibility, exceeded budget, ...), 2 on usage errors including an
invalid prime.  Output is deterministic; `--json` switches every
subcommand to a single well-formed JSON document on stdout.
"""

from __future__ import annotations

import argparse
import json
import sys

from . import automorphisms as autos
from .errors import SkewRingError
from .ring import PrimeModulus, classify, inv
from .skew_cyclic import (
    DEFAULT_DISTANCE_BUDGET,
    build_code,
    min_hamming_distance,
    theta_shift,
)
from .textio import (
    codeword_json,
    element_json,
    parse_codeword,
    parse_element,
    parse_poly,
    poly_json,
)

PROG = "skewring"


def _add_prime(parser):
    parser.add_argument("--prime", type=int, required=True, metavar="P",
                        help="odd prime modulus")


def _add_json(parser):
    parser.add_argument("--json", action="store_true", help="emit JSON")


def _add_theta(parser):
    parser.add_argument("--theta", type=int, required=True, choices=range(1, 7),
                        metavar="I", help="automorphism id in 1..6")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog=PROG,
        description="Exact algebra over F_p[v]/(v^3 - v): automorphisms, "
        "skew polynomials and skew cyclic codes.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p_autos = sub.add_parser("autos", help="list the six automorphisms")
    _add_prime(p_autos)
    p_autos.add_argument("--brute-force", action="store_true",
                         help="cross-check against the exhaustive enumerator")
    _add_json(p_autos)

    p_endos = sub.add_parser(
        "endos", help="list all candidate images t of v with t^3 = t")
    _add_prime(p_endos)
    _add_json(p_endos)

    p_table = sub.add_parser("table", help="6x6 composition table")
    _add_prime(p_table)
    _add_json(p_table)

    p_elem = sub.add_parser("elem", help="element arithmetic")
    elem_sub = p_elem.add_subparsers(dest="elem_command", required=True)
    for name, nargs in (("mul", 2), ("inv", 1), ("classify", 1)):
        sp = elem_sub.add_parser(name)
        _add_prime(sp)
        sp.add_argument("elements", nargs=nargs, metavar="ELEM",
                        help="element literal a,b,c")
        _add_json(sp)

    p_poly = sub.add_parser("poly", help="skew polynomial arithmetic")
    poly_sub = p_poly.add_subparsers(dest="poly_command", required=True)
    for name in ("mul", "divmod"):
        sp = poly_sub.add_parser(name)
        _add_prime(sp)
        _add_theta(sp)
        sp.add_argument("f", metavar="F", help="polynomial literal")
        sp.add_argument("g", metavar="G", help="polynomial literal")
        _add_json(sp)

    p_code = sub.add_parser("code", help="skew cyclic codes")
    code_sub = p_code.add_subparsers(dest="code_command", required=True)
    sp = code_sub.add_parser("build")
    _add_prime(sp)
    _add_theta(sp)
    sp.add_argument("-n", type=int, required=True, dest="length",
                    metavar="N", help="code length")
    sp.add_argument("-g", required=True, dest="generator", metavar="POLY",
                    help="monic generator polynomial literal")
    sp.add_argument("--min-distance", action="store_true",
                    help="compute the minimum Hamming distance exhaustively")
    sp.add_argument("--budget", type=int, default=DEFAULT_DISTANCE_BUDGET,
                    help="enumeration budget for --min-distance")
    _add_json(sp)
    sp = code_sub.add_parser("shift")
    _add_prime(sp)
    _add_theta(sp)
    sp.add_argument("codeword", metavar="CODEWORD",
                    help="codeword literal: n element triples joined by ';'")
    _add_json(sp)

    p_serve = sub.add_parser("serve", help="run the HTTP API")
    p_serve.add_argument("--host", default="127.0.0.1")
    p_serve.add_argument("--port", type=int, default=8000)

    return parser


# ---------------------------------------------------------------------------
# Subcommand handlers.  Each returns the JSON-able result document; text
# rendering happens alongside so both modes report identical data.
# ---------------------------------------------------------------------------


def _cmd_autos(args, pm):
    rows = [
        {"id": i, "v_image": element_json(autos.theta_image_of_v(i, pm))}
        for i in autos.AUTOMORPHISM_IDS
    ]
    oracle = None
    if args.brute_force:
        found = autos.enumerate_automorphisms_bruteforce(pm)
        found_ids = sorted(aut_id for _, aut_id in found)
        ok = len(found) == 6 and found_ids == list(autos.AUTOMORPHISM_IDS)
        oracle = "OK" if ok else "MISMATCH"
    doc = {"prime": pm.p, "automorphisms": rows, "oracle": oracle}
    if args.json:
        print(json.dumps(doc))
    else:
        for row in rows:
            v = row["v_image"]
            print(f"theta_{row['id']}: v -> {v['a']},{v['b']},{v['c']}")
        if oracle is not None:
            print(f"oracle check: {oracle} ({len(rows)} automorphisms)")
    return 0 if oracle in (None, "OK") else 1


def _cmd_endos(args, pm):
    cands = autos.enumerate_endomorphism_candidates(pm)
    rows = []
    for c in cands:
        row = {
            "v_image": element_json(c.image_of_v),
            "injective": c.injective,
            "automorphism_id": c.automorphism_id,
            "collision": None
            if c.collision is None
            else [element_json(c.collision[0]), element_json(c.collision[1])],
        }
        rows.append(row)
    doc = {"prime": pm.p, "count": len(rows), "candidates": rows}
    if args.json:
        print(json.dumps(doc))
    else:
        for c in cands:
            if c.injective:
                print(f"{c.image_of_v}  automorphism id={c.automorphism_id}")
            else:
                z1, z2 = c.collision
                print(f"{c.image_of_v}  non-injective  collision: {z1} ~ {z2}")
        print(f"total: {len(cands)} candidates")
    return 0


def _cmd_table(args, pm):
    table = autos.group_table(pm)
    doc = {"prime": pm.p, "table": [list(row) for row in table.rows]}
    if args.json:
        print(json.dumps(doc))
    else:
        for row in table.rows:
            print(" ".join(str(k) for k in row))
    return 0


def _cmd_elem(args, pm):
    elems = [parse_element(s, pm) for s in args.elements]
    if args.elem_command == "mul":
        result = elems[0] * elems[1]
        doc = element_json(result)
        print(json.dumps(doc) if args.json else str(result))
    elif args.elem_command == "inv":
        result = inv(elems[0])
        doc = element_json(result)
        print(json.dumps(doc) if args.json else str(result))
    else:
        cls = classify(elems[0])
        doc = {
            "kind": cls.kind,
            "conditions": list(cls.conditions),
            "is_unit": cls.is_unit,
        }
        if args.json:
            print(json.dumps(doc))
        elif cls.conditions:
            print(f"{cls.kind} ({', '.join(cls.conditions)})")
        else:
            print(cls.kind)
    return 0


def _cmd_poly(args, pm):
    f = parse_poly(args.f, args.theta, pm)
    g = parse_poly(args.g, args.theta, pm)
    if args.poly_command == "mul":
        result = f * g
        if args.json:
            print(json.dumps({"result": poly_json(result)}))
        else:
            print(result)
    else:
        q, r = f.right_divmod(g)
        if args.json:
            print(json.dumps({"q": poly_json(q), "r": poly_json(r)}))
        else:
            print(f"q = {q}")
            print(f"r = {r}")
    return 0


def _cmd_code(args, pm):
    if args.code_command == "shift":
        word = parse_codeword(args.codeword, pm)
        shifted = theta_shift(word, args.theta)
        if args.json:
            print(json.dumps({"result": codeword_json(shifted)}))
        else:
            print(shifted)
        return 0
    g = parse_poly(args.generator, args.theta, pm)
    code = build_code(pm, args.theta, args.length, g)
    dist = min_hamming_distance(code, args.budget) if args.min_distance else None
    doc = {
        "n": code.n,
        "k": code.k,
        "q": f"{pm.p}^{3 * code.k}",
        "cardinality": code.cardinality,
        "theta": code.theta,
        "generator": poly_json(code.generator),
        "min_distance": dist,
    }
    if args.json:
        print(json.dumps(doc))
    else:
        print(f"n: {code.n}")
        print(f"k: {code.k}")
        print(f"theta: {code.theta}")
        print(f"cardinality: {doc['q']} = {code.cardinality}")
        print(f"generator: {code.generator}")
        print("right divisor check: OK")
        if dist is not None:
            print(f"min_distance: {dist}")
    return 0


def _cmd_serve(args):
    import uvicorn

    from .service import app

    uvicorn.run(app, host=args.host, port=args.port)
    return 0


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return exc.code if isinstance(exc.code, int) else 2

    if args.command == "serve":
        return _cmd_serve(args)

    try:
        pm = PrimeModulus(args.prime)
    except ValueError as exc:
        print(f"{PROG}: error: {exc}", file=sys.stderr)
        return 2

    try:
        if args.command == "autos":
            return _cmd_autos(args, pm)
        if args.command == "endos":
            return _cmd_endos(args, pm)
        if args.command == "table":
            return _cmd_table(args, pm)
        if args.command == "elem":
            return _cmd_elem(args, pm)
        if args.command == "poly":
            return _cmd_poly(args, pm)
        if args.command == "code":
            return _cmd_code(args, pm)
    except ValueError as exc:  # LiteralError, bad length, bad id
        print(f"{PROG}: error: {exc}", file=sys.stderr)
        return 2
    except SkewRingError as exc:
        print(f"{PROG}: error: {type(exc).__name__}: {exc}", file=sys.stderr)
        return 1
    raise AssertionError(f"unhandled command {args.command}")


def entrypoint():
    sys.exit(main())


if __name__ == "__main__":
    entrypoint()
