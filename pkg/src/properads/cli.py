"""Command-line front end.

JSON is read from --input (or stdin) and written to --output (or stdout).
Exit codes: 0 = success / property holds, 1 = property violation (a JSON
witness with a "kind" field is printed), 2 = parse or validation error.
"""

from __future__ import annotations

import argparse
import json
import sys

from . import cospan as csp
from . import finset
from . import freemon
from . import levelgraph as lg
from . import properad as prp
from . import segal
from . import verify
from .cospan import (Chain, Cospan, FinCommMonoid, ProjCospan, Span, WeightedCospan,
                     BoundExceeded)
from .finset import FinSetError
from .properad import PropError


class CliError(ValueError):
    pass


def _read(args):
    if getattr(args, "input", None):
        with open(args.input, "r", encoding="utf-8") as fh:
            text = fh.read()
    else:
        text = sys.stdin.read()
    try:
        return json.loads(text)
    except json.JSONDecodeError as exc:
        raise CliError(f"invalid JSON input: {exc}") from exc


def _write(args, payload):
    text = payload if isinstance(payload, str) else json.dumps(
        payload, sort_keys=True, default=str)
    if getattr(args, "output", None):
        with open(args.output, "w", encoding="utf-8") as fh:
            fh.write(text + "\n")
    else:
        print(text)


def _violation(args, kind, **detail):
    _write(args, {"kind": kind, **detail})
    return 1


def _parse_properad(data) -> prp.DiscreteProperad:
    kind = data.get("type")
    if kind == "endo":
        monoid = FinCommMonoid.from_json(data["monoid"])
        return prp.endomorphism_properad(monoid, int(data.get("max_arity", 3)))
    if kind == "free":
        gens = [(g["name"], tuple(g.get("inputs", ())), tuple(g.get("outputs", ())))
                for g in data["generators"]]
        return segal.free_properad(gens, int(data.get("num_colors", 1)),
                                   int(data.get("max_vertices", 4)))
    raise CliError("properad description must have type 'endo' or 'free'")


def cmd_compose(args):
    data = _read(args)
    first, second = data["first"], data["second"]
    if args.kind == "cospan":
        out = csp.compose_cospans(Cospan.from_json(first), Cospan.from_json(second))
    elif args.kind == "span":
        out = csp.compose_spans(Span.from_json(first), Span.from_json(second))
    elif args.kind == "proj":
        out = csp.compose_proj(ProjCospan.from_json(first), ProjCospan.from_json(second))
    elif args.kind == "weighted":
        monoid = FinCommMonoid.from_json(data["monoid"])
        out = csp.compose_weighted(WeightedCospan.from_json(first, monoid),
                                   WeightedCospan.from_json(second, monoid))
    else:
        chains = Chain.from_json(first), Chain.from_json(second)
        if chains[0].boundaries[-1] != chains[1].boundaries[0]:
            raise CliError("chains do not concatenate")
        out = Chain(chains[0].boundaries + chains[1].boundaries[1:],
                    chains[0].lefts + chains[1].lefts,
                    chains[0].rights + chains[1].rights)
    _write(args, out.to_json())
    return 0


def cmd_canonical(args):
    data = _read(args)
    kind = data["kind"]
    obj = data["object"]
    if kind == "cospan":
        can, aut = csp.canonicalize_cospan(Cospan.from_json(obj))
    elif kind == "span":
        can, aut = csp.canonicalize_span(Span.from_json(obj))
    elif kind == "chain":
        can, aut = csp.canonicalize_chain(Chain.from_json(obj))
    elif kind == "proj":
        can, aut = csp.proj_canonical(Cospan.from_json(obj)), 1
    else:
        raise CliError(f"unknown object kind {kind!r}")
    _write(args, {"kind": kind, "object": can.to_json(), "aut_order": aut})
    return 0


def cmd_classify_hom(args):
    h = freemon.MonHom.from_json(_read(args))
    cls = freemon.classify_hom(h)
    out = {"tag": cls.tag.value}
    if cls.factorization is not None:
        t, f = cls.factorization
        out["transfer"] = t.to_json()
        out["free"] = f.to_json()
    _write(args, out)
    return 0


def cmd_factorize_hom(args):
    h = freemon.MonHom.from_json(_read(args))
    t, f = freemon.ctf_eqf_factorize(h)
    _write(args, {"transfer": t.to_json(), "free": f.to_json()})
    return 0


def cmd_check_free_submonoid(args):
    data = _read(args)
    sub = freemon.Submonoid(int(data["ambient"]),
                            tuple(freemon.Multiset(tuple(int(v) for v in g))
                                  for g in data["generators"]))
    ok, witness = freemon.is_free_submonoid(sub, int(data.get("degree_bound", 6)))
    if ok:
        _write(args, {"free": True})
        return 0
    return _violation(args, "submonoid_not_free", witness=witness)


def cmd_decompose_chain(args):
    ch = Chain.from_json(_read(args))
    _write(args, {"pieces": [p.to_json() for p in csp.decompose_chain(ch)]})
    return 0


def cmd_verify_levelwise_free(args):
    report = csp.verify_levelwise_free(args.height, args.bound)
    if report["ok"]:
        _write(args, report)
        return 0
    return _violation(args, "levelwise_freeness", **report)


def cmd_check_properad(args):
    P = _parse_properad(_read(args))
    report = prp.check_axioms(P, size_bound=args.bound)
    if report["ok"]:
        _write(args, report)
        return 0
    return _violation(args, "properad_axioms", **report)


def cmd_free_properad(args):
    data = _read(args)
    data.setdefault("type", "free")
    P = _parse_properad(data)
    ops = [{"op": str(op), "inputs": list(P.profile(op)[0]),
            "outputs": list(P.profile(op)[1]),
            "vertices": P.dag_reps[op].num_vertices}
           for op in P.all_ops()]
    _write(args, {"num_colors": P.num_colors, "ops": ops})
    return 0


def cmd_is_monic(args):
    P = _parse_properad(_read(args))
    _write(args, {"monic": prp.is_monic(P)})
    return 0


def cmd_admissible(args):
    if args.mode == "enumerate":
        out = [s.to_json() for s in prp.enumerate_admissible(args.box)]
        _write(args, {"box": args.box, "admissible": out})
        return 0
    data = _read(args)
    pairs = [(int(a), int(b)) for a, b in data["members"]]
    box = int(data.get("box", args.box))
    ok, witness = prp.is_admissible(pairs, box)
    if ok:
        _write(args, {"admissible": True})
        return 0
    return _violation(args, "not_admissible", **witness)


def cmd_endo_properad(args):
    monoid = FinCommMonoid.from_json(_read(args))
    P = prp.endomorphism_properad(monoid, args.max_arity)
    arities = {}
    for op in P.all_ops():
        arities.setdefault(P.arity(op), 0)
        arities[P.arity(op)] += 1
    _write(args, {"colors": P.num_colors,
                  "ops_by_arity": {f"{k},{l}": n for (k, l), n in sorted(arities.items())}})
    return 0


def cmd_realize(args):
    x = lg.LevelObject.from_json(_read(args))
    g = lg.realize(x)
    _write(args, lg.dag_to_dot(g))
    return 0


def cmd_check_segal(args):
    P = _parse_properad(_read(args))
    report = segal.check_segal(segal.induced_value_fn(P), 2, args.bound)
    if report["ok"]:
        _write(args, report)
        return 0
    return _violation(args, "segal_condition", **report)


def cmd_envelope(args):
    P = _parse_properad(_read(args))
    env = segal.envelope_nerve(P, 2, args.bound)
    _write(args, env.to_json())
    return 0


def cmd_check_pre_properad(args):
    data = _read(args)
    if data.get("source") == "span":
        env = segal.span_nerve_data(int(data.get("size_bound", 4)),
                                    bool(data.get("surjective_only", False)))
    else:
        P = _parse_properad(data["properad"])
        env = segal.envelope_nerve(P, 2, int(data.get("size_bound", 4)))
    report = segal.check_pre_properad(env)
    if report["ok"]:
        _write(args, report)
        return 0
    return _violation(args, "pre_properad", **report)


def cmd_is_complete(args):
    P = _parse_properad(_read(args))
    _write(args, {"complete": segal.is_complete(P)})
    return 0


def cmd_verify_all(args):
    report = verify.run_all()
    _write(args, report)
    return 0 if report["ok"] else 1


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="properads",
        description="compose, canonicalize, and verify cospan/properad structures")
    sub = parser.add_subparsers(dest="command", required=True)

    def add(name, fn, **kwargs):
        p = sub.add_parser(name, **kwargs)
        p.add_argument("--input", help="input JSON path (default: stdin)")
        p.add_argument("--output", help="output path (default: stdout)")
        p.set_defaults(fn=fn)
        return p

    p = add("compose", cmd_compose, help="compose two objects")
    p.add_argument("kind", choices=["cospan", "proj", "span", "weighted", "chain"])
    add("canonical", cmd_canonical, help="canonical form and automorphism order")
    add("classify-hom", cmd_classify_hom, help="free/transfer/mixed classification")
    add("factorize-hom", cmd_factorize_hom, help="transfer-then-free factorization")
    p = add("check-free-submonoid", cmd_check_free_submonoid,
            help="audit freeness of a listed submonoid")
    add("decompose-chain", cmd_decompose_chain, help="connected summands of a chain")
    p = add("verify-levelwise-free", cmd_verify_levelwise_free,
            help="free decomposition of chains at a height")
    p.add_argument("--height", type=int, default=1)
    p.add_argument("--bound", type=int, default=4)
    p = add("check-properad", cmd_check_properad, help="unit and order-independence axioms")
    p.add_argument("--bound", type=int, default=3)
    add("free-properad", cmd_free_properad, help="enumerate free properad operations")
    add("is-monic", cmd_is_monic, help="every operation single-output?")
    p = add("admissible", cmd_admissible, help="arity-set admissibility")
    p.add_argument("mode", choices=["check", "enumerate"])
    p.add_argument("--box", type=int, default=3)
    p = add("endo-properad", cmd_endo_properad, help="endomorphism properad of a monoid")
    p.add_argument("--max-arity", type=int, default=3)
    p = add("realize", cmd_realize, help="level object to DOT graph")
    p.add_argument("--dot", action="store_true", default=True)
    p = add("check-segal", cmd_check_segal, help="segmentation and decomposition")
    p.add_argument("--bound", type=int, default=4)
    p = add("envelope", cmd_envelope, help="simplicial monoid data of a properad")
    p.add_argument("--bound", type=int, default=4)
    add("check-pre-properad", cmd_check_pre_properad, help="pre-properad audit")
    add("is-complete", cmd_is_complete, help="no non-identity invertibles")
    add("verify-all", cmd_verify_all, help="run the full verification battery")
    return parser


def run(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return 2 if exc.code not in (0, None) else 0
    try:
        return args.fn(args)
    except (CliError, KeyError, TypeError, ValueError, FinSetError,
            PropError, BoundExceeded, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


def main() -> None:
    sys.exit(run())


if __name__ == "__main__":
    main()
