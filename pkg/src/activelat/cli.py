"""Command-line front end.

Exit codes: 0 success, 1 verification mismatch, 2 input error, 3 cap
exceeded (always for ``lattice``/``homology``/``flats``; ``verify`` only
with ``--strict``).
"""

from __future__ import annotations

import argparse
import json
import os
import sys

from . import families
from .complexes import atom_join_complex, dual_top_restriction, independence_complex, order_complex
from .corpus import (
    Instance,
    rows_to_csv,
    run_corpus,
    run_suite,
    small_corpus,
    standard_corpus,
)
from .errors import CapExceededError, MalformedInputError, NotAMatroidError, ParseError
from .flats import flat_lattice, mobius_closed_form, reduced_mobius
from .homology import homology
from .lattice import build_external_lattice
from .matroid import parse_matroid, reorder

EXIT_OK, EXIT_MISMATCH, EXIT_INPUT, EXIT_CAP = 0, 1, 2, 3


def caps_from_env(environ=os.environ) -> dict:
    """``ACTIVELAT_CAPS="max_bases=5000,max_faces=200000"``."""
    caps = {}
    raw = environ.get("ACTIVELAT_CAPS", "").strip()
    if not raw:
        return caps
    for item in raw.split(","):
        key, _, val = item.partition("=")
        key = key.strip().replace("-", "_")
        if key not in ("max_bases", "max_faces"):
            raise MalformedInputError(f"unknown cap {key!r} in ACTIVELAT_CAPS")
        caps[key] = int(val)
    return caps


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="activelat", description=__doc__.splitlines()[0])
    common = argparse.ArgumentParser(add_help=False)
    src = common.add_argument_group("input")
    src.add_argument("--input", metavar="FILE", help="matroid text file ('-' for stdin)")
    src.add_argument("--family", choices=families.FAMILIES)
    src.add_argument("--n", type=int)
    src.add_argument("--k", type=int)
    src.add_argument("--order", metavar="PERM", help="comma- or space-separated permutation of 0..n-1")
    out = common.add_argument_group("output and limits")
    out.add_argument("--json", action="store_true")
    out.add_argument("--max-bases", type=int)
    out.add_argument("--max-faces", type=int)
    out.add_argument("--seed", type=int, default=0)
    out.add_argument("--strict", action="store_true")

    sub = p.add_subparsers(dest="command", required=True)
    sub.add_parser("lattice", parents=[common], help="build and print the external lattice")
    h = sub.add_parser("homology", parents=[common], help="reduced integer homology of a complex")
    h.add_argument("--complex", choices=("delta", "in-dual-top", "independence", "atom-join"), default="delta")
    v = sub.add_parser("verify", parents=[common], help="run the theorem checks")
    v.add_argument("--corpus", choices=("small", "standard"))
    v.add_argument("--slow", action="store_true", help="include K5 in the standard corpus")
    sub.add_parser("mobius", parents=[common], help="Möbius function of L(M), computed and closed form")
    sub.add_parser("flats", parents=[common], help="lattice of flats")
    c = sub.add_parser("corpus", parents=[common], help="CSV summary over a corpus")
    c.add_argument("--corpus", choices=("small", "standard"), default="small")
    c.add_argument("--csv", metavar="FILE", help="write CSV here instead of stdout")
    c.add_argument("--jobs", type=int, default=1)
    c.add_argument("--timing", action="store_true", help="fill runtime_ms (output is then not reproducible)")
    c.add_argument("--slow", action="store_true")
    return p


def _caps(args) -> dict:
    caps = {"max_bases": 5000, "max_faces": 200_000}
    caps.update(caps_from_env())
    if args.max_bases is not None:
        caps["max_bases"] = args.max_bases
    if args.max_faces is not None:
        caps["max_faces"] = args.max_faces
    if caps["max_bases"] <= 0 or caps["max_faces"] <= 0:
        raise MalformedInputError("caps must be positive")
    return caps


def _parse_order(text):
    return [int(x) for x in text.replace(",", " ").split()]


def load_instance(args) -> Instance:
    if args.input and args.family:
        raise MalformedInputError("give either --input or --family, not both")
    if args.input:
        if args.input == "-":
            text = sys.stdin.read()
        else:
            try:
                with open(args.input, encoding="utf-8") as fh:
                    text = fh.read()
            except OSError as exc:
                raise MalformedInputError(str(exc)) from None
        m = parse_matroid(text)
        inst = Instance(os.path.basename(args.input), m.kind, m, m.size, m.rank if m.kind == "uniform" else None)
    elif args.family:
        if args.n is None:
            raise MalformedInputError("--family needs --n")
        m = families.make(args.family, args.n, args.k)
        name = f"{args.family}{args.n}" + (f",{args.k}" if args.k is not None else "")
        inst = Instance(name, args.family, m, args.n, args.k)
    else:
        raise MalformedInputError("no input: use --input FILE or --family NAME --n N")
    if args.order:
        perm = _parse_order(args.order)
        inst.matroid = reorder(inst.matroid, perm)
        inst.order = tuple(perm)
    return inst


def _emit(args, payload: dict, text: str):
    if args.json:
        payload = dict(payload, seed=args.seed)
        print(json.dumps(payload, sort_keys=True))
    else:
        print(text)


def cmd_lattice(args, caps) -> int:
    inst = load_instance(args)
    lat = build_external_lattice(inst.matroid, max_bases=caps["max_bases"])
    seq = lat.rank_sequence()
    payload = lat.to_dict()
    payload["rank_sequence"] = seq
    lines = [f"{inst.name}: {len(lat.bases)} bases, lattice rank {lat.rank[lat.top]}, mu = {payload['mobius']}"]
    lines.append("rank sequence: " + ",".join(map(str, seq)))
    for i, e in enumerate(payload["elements"]):
        lines.append(f"  [{i}] rank {lat.rank[i]}: {e}")
    lines.append("covers: " + " ".join(f"{a}<{b}" for a, b in lat.covers))
    _emit(args, payload, "\n".join(lines))
    return EXIT_OK


def cmd_homology(args, caps) -> int:
    inst = load_instance(args)
    m = inst.matroid
    if args.complex == "delta":
        c = order_complex(build_external_lattice(m, max_bases=caps["max_bases"]).poset)
    elif args.complex == "in-dual-top":
        c = independence_complex(dual_top_restriction(m))
    elif args.complex == "independence":
        c = independence_complex(m)
    else:
        c = atom_join_complex(build_external_lattice(m, max_bases=caps["max_bases"]))
    prof = homology(c, caps["max_faces"])
    _emit(args, {"complex": args.complex, "homology": prof.to_dict(), "facets": json.loads(c.to_json())},
          f"{inst.name} {args.complex}: {prof}")
    return EXIT_OK


def cmd_mobius(args, caps) -> int:
    inst = load_instance(args)
    lat = build_external_lattice(inst.matroid, max_bases=caps["max_bases"])
    mu = lat.mobius()
    cf = mobius_closed_form(inst.matroid)
    _emit(args, {"mobius": mu, "closed_form": cf}, f"{inst.name}: mu(L) = {mu}, closed form {cf}")
    return EXIT_OK if mu == cf else EXIT_MISMATCH


def cmd_flats(args, caps) -> int:
    inst = load_instance(args)
    fl = flat_lattice(inst.matroid)
    payload = fl.to_dict()
    payload["reduced_mobius"] = reduced_mobius(inst.matroid)
    lines = [f"{inst.name}: {len(fl.flats)} flats, mu = {payload['mobius']}, reduced mu = {payload['reduced_mobius']}"]
    lines += [f"  rank {r}: {f}" for r, f in zip(fl.ranks, payload["flats"])]
    _emit(args, payload, "\n".join(lines))
    return EXIT_OK


def _corpus(args):
    if args.corpus == "standard":
        return standard_corpus(seed=args.seed, include_slow=args.slow)
    return small_corpus(seed=args.seed)


def cmd_verify(args, caps) -> int:
    instances = _corpus(args) if args.corpus else [load_instance(args)]
    failed = skipped = False
    report = []
    for inst in instances:
        res = run_suite(inst, max_bases=caps["max_bases"], max_faces=caps["max_faces"])
        failed |= not res.ok
        skipped |= res.skipped
        report.append(res)
    if args.json:
        payload = {
            "seed": args.seed,
            "instances": [
                {"instance": r.instance, "checks": [{"name": c.name, "status": c.status, "computed": repr(c.computed),
                                                     "expected": repr(c.expected)} for c in r.checks]}
                for r in report
            ],
        }
        print(json.dumps(payload, sort_keys=True))
    else:
        for r in report:
            print(f"{r.instance}: {'PASS' if r.ok else 'FAIL'}")
            for c in r.checks:
                print(f"  {c.status:7s} {c.name}: computed {c.computed!r}, expected {c.expected!r}")
        print(f"seed {args.seed}: {'FAIL' if failed else 'PASS'} over {len(report)} instance(s)")
    if failed:
        return EXIT_MISMATCH
    if skipped:
        print("warning: some checks were skipped because a cap was exceeded", file=sys.stderr)
        if args.strict:
            return EXIT_CAP
    return EXIT_OK


def cmd_corpus(args, caps) -> int:
    rows = run_corpus(_corpus(args), jobs=args.jobs, timing=args.timing)
    text = f"# seed={args.seed}\n" + rows_to_csv(rows)
    if args.csv:
        with open(args.csv, "w", encoding="utf-8", newline="") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)
    zero = sum(r["mu_zero"] for r in rows)
    print(f"{zero}/{len(rows)} instances have mu = 0", file=sys.stderr)
    return EXIT_OK


COMMANDS = {
    "lattice": cmd_lattice,
    "homology": cmd_homology,
    "verify": cmd_verify,
    "mobius": cmd_mobius,
    "flats": cmd_flats,
    "corpus": cmd_corpus,
}


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        caps = _caps(args)
        return COMMANDS[args.command](args, caps)
    except (ParseError, MalformedInputError, NotAMatroidError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT
    except CapExceededError as exc:
        print(f"cap exceeded: {exc}", file=sys.stderr)
        return EXIT_CAP


if __name__ == "__main__":
    sys.exit(main())
