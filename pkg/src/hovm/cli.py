"""Command line interface: JSON jobs in, sorted JSON out.

Exit codes: 0 success, 2 validation error, 3 verification mismatch.  All
output is deterministic for a fixed (input, seed); --threads (or the
HOVM_THREADS environment variable) is accepted for interface stability
but never changes results.
"""

import argparse
import json
import math
import os
import sys

from . import rootdata
from .cat_o import build_block, kl_bases, reciprocity_table, simples_in_block
from .holes import CapExceeded, ZeroModuleError, minimalize, order_k_truncations
from .resolutions import (
    dihedral_candidate,
    euler_char,
    koszul_resolution,
    taylor_resolution,
    verify_complex,
)
from .verify import run_suite
from .weights import HighestWeight, integrability
from .weightsets import (
    HovmSpec,
    altwts_check,
    inclusion_exclusion_char,
    psi_k,
    weight_member,
    weight_set,
    weight_set_minkowski,
)

HEIGHT_DEFAULT = 10
HEIGHT_CAP = 30


class ValidationError(ValueError):
    pass


def _load_payload(args):
    if getattr(args, "input", None):
        with open(args.input) as fh:
            text = fh.read()
    else:
        text = sys.stdin.read()
    try:
        payload = json.loads(text)
    except json.JSONDecodeError as e:
        raise ValidationError("malformed JSON input: %s" % e)
    if not isinstance(payload, dict):
        raise ValidationError("input must be a JSON object")
    return payload


def _gcm_of(payload):
    if "algebra" not in payload:
        raise ValidationError("missing 'algebra'")
    try:
        return rootdata.parse_gcm(payload["algebra"])
    except (ValueError, TypeError) as e:
        raise ValidationError(str(e))


def _lam_of(payload, gcm):
    if "lambda" not in payload:
        raise ValidationError("missing 'lambda'")
    try:
        return HighestWeight(gcm, payload["lambda"])
    except (ValueError, TypeError) as e:
        raise ValidationError(str(e))


def _holes_of(payload, gcm, lam=None, context=None):
    raw = payload.get("holes", [])
    if not isinstance(raw, list) or any(not isinstance(h, list) for h in raw):
        raise ValidationError("'holes' must be an array of node arrays")
    graph = rootdata.DynkinGraph(gcm)
    if context is None:
        context = integrability(lam)
    try:
        return minimalize(graph, context, [frozenset(h) for h in raw])
    except ValueError as e:
        raise ValidationError(str(e))


def _spec_of(payload):
    gcm = _gcm_of(payload)
    lam = _lam_of(payload, gcm)
    try:
        return HovmSpec(lam, _holes_of(payload, gcm, lam))
    except ValueError as e:
        raise ValidationError(str(e))


def _height_of(args, payload):
    N = args.height if args.height is not None else payload.get("N", HEIGHT_DEFAULT)
    if not isinstance(N, int) or N < 0:
        raise ValidationError("height must be a nonnegative integer")
    if N > HEIGHT_CAP and not args.allow_large_height:
        raise ValidationError(
            "height %d exceeds the cap %d (pass --allow-large-height)"
            % (N, HEIGHT_CAP)
        )
    return N


def _sorted_vectors(vectors):
    return [list(c) for c in sorted(vectors)]


def _is_sl2n(gcm):
    return all(
        gcm.a[i][j] == 0 for i in range(gcm.n) for j in range(gcm.n) if i != j
    )


def cmd_weights(args):
    payload = _load_payload(args)
    spec = _spec_of(payload)
    N = _height_of(args, payload)
    return {"N": N, "weights": _sorted_vectors(weight_set(spec, N))}, 0


def cmd_member(args):
    payload = _load_payload(args)
    spec = _spec_of(payload)
    depth = payload.get("depth")
    if not isinstance(depth, list) or len(depth) != spec.gcm.n:
        raise ValidationError("'depth' must be an array of length n")
    return {"member": weight_member(spec, tuple(depth))}, 0


def cmd_check(args):
    """Cross-check the independent weight-set code paths on one instance."""
    payload = _load_payload(args)
    spec = _spec_of(payload)
    N = _height_of(args, payload)
    base = weight_set(spec, N)
    checks = {
        "minkowski": weight_set_minkowski(spec, N) == base,
        "psi_1": psi_k(spec, 1, N) == base,
        "psi_2": psi_k(spec, 2, N) == base,
        "psi_inf": psi_k(spec, math.inf, N) == base,
        "alternate_union": altwts_check(spec, N),
    }
    ok = all(checks.values())
    return {"consistent": ok, "checks": checks, "N": N}, 0 if ok else 3


def cmd_char(args):
    payload = _load_payload(args)
    spec = _spec_of(payload)
    N = _height_of(args, payload)
    if args.method in ("union", "inclusion-exclusion"):
        if not _is_sl2n(spec.gcm):
            raise ValidationError(
                "method %r is defined over sl2^n only" % args.method
            )
        if args.method == "union":
            from .characters import FormalCharacter

            char = FormalCharacter(N, dict.fromkeys(weight_set(spec, N), 1))
        else:
            char = inclusion_exclusion_char(spec, N)
    else:
        build = koszul_resolution if args.method == "koszul" else taylor_resolution
        try:
            res = build(spec.lam, spec.holes)
        except ValueError as e:
            raise ValidationError(str(e))
        char = euler_char(res, N)
    return {"method": args.method, "char": char.to_json()}, 0


def cmd_resolution(args):
    payload = _load_payload(args)
    spec = _spec_of(payload)
    N = _height_of(args, payload)
    if args.setting == "dihedral":
        hs = spec.holes.min_holes
        if len(hs) != 2:
            raise ValidationError("the dihedral setting needs exactly two holes")
        try:
            levels, char, report = dihedral_candidate(spec.lam, hs[0], hs[1], N)
        except ValueError as e:
            raise ValidationError(str(e))
        return {
            "setting": "dihedral",
            "levels": [
                {"t": t, "weights": sorted(list(w) for _, w in levels[t])}
                for t in sorted(levels)
            ],
            "euler_char": char.to_json(),
            "report": report,
        }, 0
    build = koszul_resolution if args.setting == "koszul" else taylor_resolution
    try:
        res = build(spec.lam, spec.holes)
    except ValueError as e:
        raise ValidationError(str(e))
    char = euler_char(res, N)
    report = {
        "d_squared_zero": verify_complex(res),
        "euler_nonnegative": all(m >= 0 for m in char.coeffs.values()),
        "support_matches_weight_set": char.support() == weight_set(spec, N),
    }
    out = res.to_json()
    out.update({"setting": args.setting, "euler_char": char.to_json(), "report": report})
    return out, 0 if all(report.values()) else 3


def cmd_approx(args):
    payload = _load_payload(args)
    spec = _spec_of(payload)
    N = _height_of(args, payload)
    graph = rootdata.DynkinGraph(spec.gcm)
    J = integrability(spec.lam)
    upper, lower = order_k_truncations(graph, spec.holes, args.k, J)
    holeset = upper if args.side == "upper" else lower
    approx = HovmSpec(spec.lam, holeset)
    return {
        "k": args.k,
        "side": args.side,
        "holes": holeset.to_json(),
        "weights": _sorted_vectors(weight_set(approx, N)),
    }, 0


def _blockholes_of(payload):
    gcm = _gcm_of(payload)
    if not _is_sl2n(gcm):
        raise ValidationError("block data is defined over sl2^n only")
    lam = _lam_of(payload, gcm)
    block = build_block(lam)
    holes = _holes_of(payload, gcm, context=frozenset(gcm.nodes))
    return simples_in_block(block, holes)


def cmd_reciprocity(args):
    payload = _load_payload(args)
    bh = _blockholes_of(payload)
    table = reciprocity_table(bh)
    records = [
        {"K": sorted(K), "K2": sorted(K2), **entry}
        for (K, K2), entry in table.items()
    ]
    records.sort(key=lambda r: (len(r["K"]), r["K"], len(r["K2"]), r["K2"]))
    ok = all(r["equal"] for r in records)
    return {
        "k_star": sorted(bh.block.k_star),
        "simple_index": sorted(
            (sorted(K) for K in bh.simple_index), key=lambda s: (len(s), s)
        ),
        "table": records,
        "all_equal": ok,
    }, 0 if ok else 3


def cmd_kl(args):
    payload = _load_payload(args)
    bh = _blockholes_of(payload)
    bases = kl_bases(bh)
    index = bases["index"]

    def matrix(rows):
        return [
            {"K": sorted(K), "coeffs": [rows[K][K2] for K2 in index]}
            for K in index
        ]

    identity = all(
        bases["product"][(K, K2)] == (1 if K == K2 else 0)
        for K in index
        for K2 in index
    )
    return {
        "index": [sorted(K) for K in index],
        "T_in_C": matrix(bases["T_in_C"]),
        "C_in_T": matrix(bases["C_in_T"]),
        "mutually_inverse": identity,
    }, 0 if identity else 3


def cmd_order_product(args):
    payload = _load_payload(args)
    gcm = _gcm_of(payload)
    raw = payload.get("holes", [])
    if not isinstance(raw, list) or any(not isinstance(h, list) for h in raw):
        raise ValidationError("'holes' must be an array of node arrays")
    from .weyl import order_of_hole_product

    try:
        m = order_of_hole_product(gcm, [frozenset(h) for h in raw])
    except ValueError as e:
        raise ValidationError(str(e))
    return {"order": m}, 0


def cmd_verify(args):
    try:
        report = run_suite(args.suite, args.seed, args.trials)
    except ValueError as e:
        raise ValidationError(str(e))
    return report, 0 if report["status"] == "ok" else 3


def build_parser():
    parser = argparse.ArgumentParser(
        prog="hovm",
        description="Weight sets, characters, resolutions and block data "
        "for higher order Verma modules.",
    )
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument(
        "--threads",
        type=int,
        default=int(os.environ.get("HOVM_THREADS", "1")),
        help="worker bound; results never depend on it",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def job(name, help_text, **extra):
        p = sub.add_parser(name, help=help_text, parents=[common])
        p.add_argument("--input", help="read the JSON job from a file, not stdin")
        p.add_argument("--height", type=int, default=None, help="cutoff N")
        p.add_argument(
            "--allow-large-height",
            action="store_true",
            help="lift the hard cap of %d" % HEIGHT_CAP,
        )
        return p

    job("weights", "enumerate the weight set up to the cutoff")
    job("member", "test one depth vector for membership")
    job("check", "cross-check the weight-set formulas on one instance")
    p = job("char", "truncated formal character")
    p.add_argument(
        "--method",
        choices=["union", "inclusion-exclusion", "koszul", "taylor"],
        default="union",
    )
    p = job("resolution", "BGG-type resolution data")
    p.add_argument(
        "--setting", choices=["koszul", "taylor", "dihedral"], required=True
    )
    p = job("approx", "order-k truncation of the hole set")
    p.add_argument("--k", type=int, required=True)
    p.add_argument("--side", choices=["upper", "lower"], required=True)
    job("reciprocity", "BGG reciprocity table of a block")
    job("kl", "truncated Kazhdan-Lusztig change-of-basis matrices")
    job("order-product", "order of a product of hole reflections")
    p = sub.add_parser(
        "verify", help="seeded randomized oracle suites", parents=[common]
    )
    p.add_argument(
        "--suite",
        choices=["weights", "chars", "reciprocity", "kl", "resolutions"],
        required=True,
    )
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--trials", type=int, default=50)
    return parser


_DISPATCH = {
    "weights": cmd_weights,
    "member": cmd_member,
    "check": cmd_check,
    "char": cmd_char,
    "resolution": cmd_resolution,
    "approx": cmd_approx,
    "reciprocity": cmd_reciprocity,
    "kl": cmd_kl,
    "order-product": cmd_order_product,
    "verify": cmd_verify,
}


def main(argv=None):
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        result, code = _DISPATCH[args.command](args)
    except (ValidationError, ZeroModuleError, CapExceeded) as e:
        print(json.dumps({"error": str(e)}, sort_keys=True))
        return 2
    print(json.dumps(result, sort_keys=True, indent=2))
    return code


if __name__ == "__main__":
    sys.exit(main())
