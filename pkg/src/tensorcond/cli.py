"""Command-line entry point.

Subcommands: verify (property suites over the corpus), bound (one local
pair), global (factored global bounds), sharpness (the Jacobian family),
table (character table), replay (re-run a counterexample document).

Exit codes: 0 all checks pass, 1 violation (a counterexample document is
emitted), 2 malformed input.  Machine output is a line-delimited JSON
stream; exact rationals are serialized as "p/q" strings, never floats.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
from typing import List, Optional

from .chars import character_table
from .corpus import load_corpus
from .errors import InputError, TensorCondError
from .globalbound import (GlobalDatum, PrimeLocalPair, PrimeSummary,
                          rankin_selberg_bound)
from .groups import build_group, filtration_from_generators
from .jacobians import (smallest_valid_unit, validate_params, verify_sharpness)
from .suites import DEFAULT_SEEDS, SUITES, replay, run_suite_range
from .weildeligne import (AbVarDatum, InertiaModel, conductor_bound,
                          degree_correction, tensor, uniform_bound)

WORKERS_ENV = "TENSORCOND_WORKERS"


def _emit(doc: dict, machine: bool) -> None:
    if machine:
        print(json.dumps(doc, sort_keys=True))


def _load_document(path: str) -> dict:
    try:
        if path == "-":
            return json.load(sys.stdin)
        with open(path, "r", encoding="utf-8") as fh:
            return json.load(fh)
    except (OSError, json.JSONDecodeError) as err:
        raise InputError(f"cannot read input document: {err}") from err


def _require(doc: dict, key: str, context: str):
    if key not in doc:
        raise InputError(f"{context}: missing field {key!r}")
    return doc[key]


def _build_model(doc: dict) -> InertiaModel:
    group = build_group(_require(doc, "group", "model"))
    chain = _require(doc, "chain", "model")
    if not isinstance(chain, list):
        raise InputError("model.chain: expected a list of generator lists")
    filt = filtration_from_generators(group, chain)
    return InertiaModel(group, filt, int(_require(doc, "p", "model")))


def _build_abvar(model: InertiaModel, doc: dict, label: str) -> AbVarDatum:
    T = character_table(model.group)
    tau = _require(doc, "tau", label)
    sigma = _require(doc, "sigma", label)
    for vec in (tau, sigma):
        if not isinstance(vec, list) or len(vec) != len(T) \
                or not all(isinstance(x, int) and x >= 0 for x in vec):
            raise InputError(
                f"{label}: multiplicity vector must list one nonnegative "
                f"integer per irreducible ({len(T)} for this group, in the "
                f"order printed by the table subcommand)")
    try:
        return AbVarDatum(model, T.assemble(tau), T.assemble(sigma))
    except (ValueError, TensorCondError) as err:
        raise InputError(f"{label}: {err}") from err


# -- subcommand: verify -----------------------------------------------------------


def _worker_count(args) -> int:
    if args.workers is not None:
        return max(1, args.workers)
    env = os.environ.get(WORKERS_ENV)
    return max(1, int(env)) if env else 1


_POOL_STATE = {}


def _pool_init(corpus_path):
    _POOL_STATE["corpus"] = load_corpus(corpus_path)


def _pool_eval(job):
    name, start, count, base_seed = job
    results = run_suite_range(name, _POOL_STATE["corpus"], start, count, base_seed)
    return [(r.index, r.to_json()) for r in results]


def _run_verify(args, machine: bool) -> int:
    corpus = load_corpus(args.corpus)
    names = list(SUITES) if "all" in args.suite else args.suite
    for name in names:
        if name not in SUITES:
            raise InputError(f"unknown suite {name!r}; choose from "
                             f"{', '.join(sorted(SUITES))} or all")
    workers = _worker_count(args)
    failures = 0
    for name in names:
        seeds = args.seeds if args.seeds is not None else DEFAULT_SEEDS[name]
        if workers == 1 or seeds < 4 * workers:
            docs = [(r.index, r.to_json())
                    for r in run_suite_range(name, corpus, 0, seeds, args.seed)]
        else:
            from concurrent.futures import ProcessPoolExecutor
            chunk = (seeds + workers - 1) // workers
            jobs = [(name, lo, min(chunk, seeds - lo), args.seed)
                    for lo in range(0, seeds, chunk)]
            with ProcessPoolExecutor(max_workers=workers, initializer=_pool_init,
                                     initargs=(args.corpus,)) as pool:
                docs = [item for part in pool.map(_pool_eval, jobs) for item in part]
        docs.sort(key=lambda t: t[0])
        bad = [d for _, d in docs if not d["ok"]]
        checks = sum(d["checks"] for _, d in docs)
        if machine:
            for _, d in docs:
                print(json.dumps(d, sort_keys=True))
            print(json.dumps({"suite": name, "summary": True, "items": len(docs),
                              "checks": checks, "failures": len(bad)},
                             sort_keys=True))
        else:
            verdict = "ok" if not bad else f"{len(bad)} FAILURES"
            print(f"{name}: {len(docs)} items, {checks} checks, {verdict}")
            for d in bad:
                print(json.dumps(d["counterexample"], sort_keys=True))
        failures += len(bad)
    return 1 if failures else 0


# -- subcommand: bound ------------------------------------------------------------


def _run_bound(args, machine: bool) -> int:
    doc = _load_document(args.input)
    model = _build_model(_require(doc, "model", "document"))
    A = _build_abvar(model, _require(doc, "A", "document"), "A")
    B = _build_abvar(model, _require(doc, "B", "document"), "B")
    lhs, rhs_main, c_p = conductor_bound(A, B)
    _, rhs_uniform, _ = uniform_bound(A, B)
    prod = tensor(A.rho, B.rho)
    out = {
        "a_A": str(A.artin()), "a_B": str(B.artin()),
        "sw_A": str(A.swan()), "sw_B": str(B.swan()),
        "dim_A": A.dim, "dim_B": B.dim,
        "deg_A": A.deg(), "deg_B": B.deg(), "deg_tensor": prod.degree(),
        "degree_correction": degree_correction(A, B),
        "lhs": str(lhs), "rhs_main": str(rhs_main),
        "rhs_uniform": str(rhs_uniform), "C_p": c_p,
        "sw_tensor": str(prod.swan_conductor()),
        "bound_holds": lhs <= rhs_main,
    }
    if machine:
        print(json.dumps(out, sort_keys=True))
    else:
        for k, v in out.items():
            print(f"{k:18s} {v}")
    return 0 if out["bound_holds"] else 1


# -- subcommand: global -----------------------------------------------------------


def _run_global(args, machine: bool) -> int:
    doc = _load_document(args.input)
    dim_a = int(_require(doc, "dimA", "document"))
    dim_b = int(_require(doc, "dimB", "document"))
    records = []
    for rec in _require(doc, "primes", "document"):
        p = int(_require(rec, "p", "prime record"))
        mode = _require(rec, "mode", "prime record")
        if mode == "summary":
            records.append(PrimeSummary(
                p, int(_require(rec, "vA", "summary")),
                int(_require(rec, "vB", "summary")),
                int(_require(rec, "degA", "summary")),
                int(_require(rec, "degB", "summary")),
                int(_require(rec, "degAB", "summary"))))
        elif mode == "full":
            model = _build_model(_require(rec, "model", "prime record"))
            A = _build_abvar(model, _require(rec, "A", "prime record"), "A")
            B = _build_abvar(model, _require(rec, "B", "prime record"), "B")
            records.append(PrimeLocalPair(p, A, B))
        else:
            raise InputError(f"prime record: unknown mode {mode!r}")
    try:
        datum = GlobalDatum(dim_a, dim_b, tuple(records))
        report = rankin_selberg_bound(datum)
    except TensorCondError as err:
        raise InputError(str(err)) from err
    ok = report.all_checks_pass()
    out = {"bound": report.bound.to_json(), "d_term": report.d.to_json(),
           "per_prime_check": "pass" if ok else "fail",
           "per_prime": list(report.per_prime)}
    if machine:
        print(json.dumps(out, sort_keys=True))
    else:
        print(f"bound: {report.bound}")
        print(f"d_term: {report.d}")
        print(f"per-prime check: {out['per_prime_check']}")
        for rec in report.per_prime:
            print(f"  p={rec['p']}: bound exponent {rec['bound_exp']}"
                  + (f", a(tensor) = {rec['a_tensor']}" if "a_tensor" in rec else ""))
    return 0 if ok else 1


# -- subcommand: sharpness ---------------------------------------------------------


def _run_sharpness(args, machine: bool) -> int:
    if args.max_p is not None:
        primes = [p for p in range(3, args.max_p + 1)
                  if all(p % d for d in range(2, p))]
    else:
        primes = [args.p]
    all_equal = True
    for p in primes:
        a = args.a if (args.a is not None and len(primes) == 1) else smallest_valid_unit(p)
        try:
            params = validate_params(p, a)
        except TensorCondError as err:
            raise InputError(str(err)) from err
        report = verify_sharpness(params)
        all_equal = all_equal and report.equal
        if machine:
            print(json.dumps(report.to_json(), sort_keys=True))
        else:
            print(f"p={p} a={a}: Sw_a={report.sw_a} Sw_p={report.sw_p} "
                  f"Sw_tensor={report.sw_tensor} a_tensor={report.a_tensor} "
                  f"thm_rhs={report.conductor_rhs} equal={report.equal}")
    return 0 if all_equal else 1


# -- subcommand: table -------------------------------------------------------------


def _run_table(args, machine: bool) -> int:
    try:
        spec = json.loads(args.group)
    except json.JSONDecodeError as err:
        raise InputError(f"group spec is not valid JSON: {err}") from err
    try:
        G = build_group(spec)
    except TensorCondError as err:
        raise InputError(str(err)) from err
    T = character_table(G)
    if machine:
        doc = {"group": G.spec, "order": G.order, "exponent": G.exponent,
               "classes": [{"size": s, "rep": r, "rep_order": G.element_orders[r]}
                           for s, r in zip(G.class_sizes, G.class_reps)],
               "irreducibles": [{"degree": ch.dim,
                                 "values": [v.to_json() for v in ch.values]}
                                for ch in T.irreducibles]}
        print(json.dumps(doc, sort_keys=True))
    else:
        print(f"{G.name}: order {G.order}, {len(G.classes)} classes, "
              f"exponent {G.exponent}")
        print("class sizes: " + " ".join(str(s) for s in G.class_sizes))
        for i, ch in enumerate(T.irreducibles):
            print(f"chi_{i} (dim {ch.dim}): " + "  ".join(str(v) for v in ch.values))
    return 0


# -- subcommand: replay --------------------------------------------------------------


def _run_replay(args, machine: bool) -> int:
    doc = _load_document(args.input)
    try:
        verdict = replay(doc)
    except (KeyError, ValueError, TensorCondError) as err:
        raise InputError(f"cannot replay document: {err}") from err
    print(json.dumps(verdict, sort_keys=True))
    return 0 if verdict["ok"] else 1


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--format", choices=("human", "machine"), default="human",
                        help="machine prints line-delimited JSON")
    parser = argparse.ArgumentParser(
        prog="tensorcond",
        description="Exact conductor exponents for group filtrations and "
                    "Weil-Deligne block data, with verification suites.")
    sub = parser.add_subparsers(dest="command", required=True)

    p_verify = sub.add_parser("verify", parents=[common],
                              help="run property suites over the corpus")
    p_verify.add_argument("--suite", action="append", required=True,
                          help="suite name or 'all' (repeatable)")
    p_verify.add_argument("--seeds", type=int, default=None,
                          help="items per suite (default: per-suite)")
    p_verify.add_argument("--seed", type=int, default=0, help="base seed")
    p_verify.add_argument("--corpus", default=None, help="corpus JSON path")
    p_verify.add_argument("--workers", type=int, default=None,
                          help=f"worker processes (or ${WORKERS_ENV})")

    p_bound = sub.add_parser("bound", parents=[common], help="conductor bounds for one local pair")
    p_bound.add_argument("--input", required=True, help="JSON document or - for stdin")

    p_global = sub.add_parser("global", parents=[common], help="global factored conductor bound")
    p_global.add_argument("--input", required=True, help="JSON document or - for stdin")

    p_sharp = sub.add_parser("sharpness", parents=[common], help="Jacobian family equalities")
    p_sharp.add_argument("--p", type=int, default=3, help="odd prime")
    p_sharp.add_argument("--a", type=int, default=None,
                         help="unit representative (default: smallest valid)")
    p_sharp.add_argument("--max-p", type=int, default=None,
                         help="sweep every odd prime up to this bound")

    p_table = sub.add_parser("table", parents=[common], help="print a character table")
    p_table.add_argument("--group", required=True,
                         help='group spec JSON, e.g. {"kind": "affine", "p": 5}')

    p_replay = sub.add_parser("replay", parents=[common], help="re-run a counterexample document")
    p_replay.add_argument("--input", required=True, help="JSON document or - for stdin")

    return parser


_RUNNERS = {
    "verify": _run_verify,
    "bound": _run_bound,
    "global": _run_global,
    "sharpness": _run_sharpness,
    "table": _run_table,
    "replay": _run_replay,
}


def main(argv: Optional[List[str]] = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    machine = args.format == "machine"
    try:
        return _RUNNERS[args.command](args, machine)
    except InputError as err:
        print(f"input error: {err}", file=sys.stderr)
        return 2
    except TensorCondError as err:
        print(f"error: {err}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
