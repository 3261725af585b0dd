"""Seeded property suites over the shipped corpus.

Every suite item is generated deterministically from (suite, base seed,
index), evaluated exactly, and summarised as an ItemResult.  A failing item
carries a self-contained counterexample document (group spec, chain
generators, character multiplicity vectors, both sides) that `replay` can
re-evaluate to the same verdict.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from fractions import Fraction
from typing import Callable, Dict, Iterable, List, Optional, Tuple

from .chars import (ClassFunction, CharacterTable, character_table, fixed_dim,
                    gen_character, gen_rational, gen_symplectic)
from .corpus import Corpus, CorpusChain
from .errors import TensorCondError
from .filtration import (min_sum_bound, pgroup_tensor_bound,
                         symplectic_tensor_bound, tensor_level_identity)
from .globalbound import (GlobalDatum, PrimeLocalPair, rankin_selberg_bound,
                          self_tensor_bound_report)
from .groups import build_group, filtration_from_generators
from .jacobians import (disc_valuation, smallest_valid_unit, validate_params,
                        verify_sharpness)
from .weildeligne import (AbVarDatum, InertiaModel, conductor_bound,
                          degree_correction, degree_gap, improvement_constant,
                          semistable_equality, swan_bound, tame_identity,
                          uniform_bound)

SHARPNESS_PRIMES = (3, 5, 7, 11, 13)


@dataclass
class ItemResult:
    suite: str
    index: int
    ok: bool
    detail: dict
    checks: int = 1
    counterexample: Optional[dict] = None

    def to_json(self) -> dict:
        doc = {"suite": self.suite, "index": self.index, "ok": self.ok,
               "checks": self.checks, "detail": self.detail}
        if self.counterexample is not None:
            doc["counterexample"] = self.counterexample
        return doc


def _rng(suite: str, base_seed: int, index: int, tag: str = "") -> random.Random:
    return random.Random(f"{suite}:{base_seed}:{index}:{tag}")


def _seed(suite: str, base_seed: int, index: int, tag: str) -> str:
    return f"{suite}:{base_seed}:{index}:{tag}"


def _chain_doc(chain: CorpusChain) -> dict:
    return {"group": chain.filtration.parent.spec,
            "subgroups": [list(g) for g in chain.generator_lists],
            "model_p": chain.model_p}


def _rebuild_chain(doc: dict):
    group = build_group(doc["group"])
    filt = filtration_from_generators(group, doc["subgroups"])
    return group, filt, doc.get("model_p")


def _mults(T: CharacterTable, chi: ClassFunction) -> List[int]:
    return list(T.multiplicities(chi))


# -- abelian-variety datum generation ------------------------------------------


def _symplectic_rational_atoms(T: CharacterTable) -> List[Tuple[Tuple[int, ...], int]]:
    """Galois-orbit sums adjusted to be symplectic as well as rational."""
    atoms = []
    r = len(T)
    for orbit in T.galois_orbits:
        vec = [0] * r
        mult = 2 if T.fs_indicators[orbit[0]] == 1 else 1
        for i in orbit:
            vec[i] = mult
        atoms.append((tuple(vec), mult * sum(T.degrees[i] for i in orbit)))
    return atoms


def _rational_orbit_atoms(T: CharacterTable) -> List[Tuple[Tuple[int, ...], int]]:
    atoms = []
    r = len(T)
    for orbit in T.galois_orbits:
        vec = [0] * r
        for i in orbit:
            vec[i] = 1
        atoms.append((tuple(vec), sum(T.degrees[i] for i in orbit)))
    return atoms


def gen_abvar(model: InertiaModel, seed, tau_budget: int = 8,
              sigma_budget: int = 4, force_ramified: bool = False,
              target_dim: Optional[int] = None) -> AbVarDatum:
    """Seeded random valid abelian-variety datum over the model.

    tau is a sum of symplectic-and-rational orbit atoms, sigma a sum of
    orbit atoms (self-dual and rational by construction), so the shape
    invariants hold by design.  With ``target_dim`` the total dimension
    tau + 2 sigma is made exactly that (padding sigma with trivials);
    with ``force_ramified`` tau gets a G_0-nontrivial atom, which makes
    the conductor exponent at least 2.
    """
    T = character_table(model.group)
    rng = random.Random(f"abvar:{seed}")
    tau_atoms = _symplectic_rational_atoms(T)
    sig_atoms = _rational_orbit_atoms(T)
    r = len(T)
    triv = T.index_of_trivial()
    tau_m = [0] * r
    sig_m = [0] * r

    def add(vec, mults):
        for i, m in enumerate(vec):
            mults[i] += m

    if target_dim is None:
        dim = 0
        for _ in range(rng.randint(0, 4)):
            cands = [a for a in tau_atoms if dim + a[1] <= tau_budget]
            if not cands:
                break
            vec, d = rng.choice(cands)
            add(vec, tau_m)
            dim += d
        dim = 0
        for _ in range(rng.randint(0, 3)):
            cands = [a for a in sig_atoms if dim + a[1] <= sigma_budget]
            if not cands:
                break
            vec, d = rng.choice(cands)
            add(vec, sig_m)
            dim += d
        if force_ramified and not any(m for i, m in enumerate(tau_m) if i != triv):
            nontrivial = [a for a in tau_atoms
                          if any(m for i, m in enumerate(a[0]) if i != triv)]
            vec, _ = rng.choice(nontrivial)
            add(vec, tau_m)
    else:
        assert target_dim % 2 == 0 and target_dim >= 2
        rem = target_dim
        for _ in range(rng.randint(0, 6)):
            cands = [("tau", a) for a in tau_atoms if a[1] <= rem]
            cands += [("sig", a) for a in sig_atoms if 2 * a[1] <= rem]
            if not cands:
                break
            kind, (vec, d) = rng.choice(cands)
            if kind == "tau":
                add(vec, tau_m)
                rem -= d
            else:
                add(vec, sig_m)
                rem -= 2 * d
        sig_m[triv] += rem // 2

    return AbVarDatum(model, T.assemble(tau_m), T.assemble(sig_m))


def gen_semistable(model: InertiaModel, seed, max_m: int = 2,
                   max_n: int = 3) -> AbVarDatum:
    """Random semistable datum: tau = 2m copies of trivial, sigma = n copies."""
    rng = random.Random(f"ss:{seed}")
    m = 2 * rng.randint(0, max_m)
    n = rng.randint(0, max_n)
    triv = ClassFunction.trivial(model.group)
    tau = triv.scale(m) if m else ClassFunction.zero(model.group)
    sigma = triv.scale(n) if n else ClassFunction.zero(model.group)
    return AbVarDatum(model, tau, sigma)


def _abvar_doc(T: CharacterTable, datum: AbVarDatum) -> dict:
    return {"tau": _mults(T, datum.tau), "sigma": _mults(T, datum.sigma)}


def _rebuild_abvar(model: InertiaModel, doc: dict) -> AbVarDatum:
    T = character_table(model.group)
    return AbVarDatum(model, T.assemble(doc["tau"]), T.assemble(doc["sigma"]))


# -- individual suites -----------------------------------------------------------


def suite_step_identity(corpus: Corpus, indices: Iterable[int],
                        base_seed: int) -> List[ItemResult]:
    """Per-level tensor identity, both sides by independent averages."""
    chains = corpus.all_chains()
    out = []
    for i in indices:
        chain = chains[i % len(chains)]
        G = chain.filtration.parent
        T = character_table(G)
        t1 = gen_character(G, _seed("step", base_seed, i, "a"), 10)
        t2 = gen_character(G, _seed("step", base_seed, i, "b"), 10)
        sides = [tensor_level_identity(t1, t2, chain.filtration, lvl)
                 for lvl in range(len(chain.filtration))]
        bad = next((lvl for lvl, (l, r) in enumerate(sides) if l != r), None)
        detail = {"chain": chain.label, "sides": [[l, r] for l, r in sides]}
        ce = None
        if bad is not None:
            ce = {"suite": "step-identity", "chain": _chain_doc(chain),
                  "tau1": _mults(T, t1), "tau2": _mults(T, t2), "level": bad,
                  "lhs": str(sides[bad][0]), "rhs": str(sides[bad][1])}
        out.append(ItemResult("step-identity", i, bad is None, detail,
                              checks=len(sides), counterexample=ce))
    return out


def suite_min_sum(corpus: Corpus, indices: Iterable[int],
                  base_seed: int) -> List[ItemResult]:
    """Random gap sequences: weighted product sum dominates M times the min."""
    out = []
    for i in indices:
        rng = _rng("minsum", base_seed, i)
        M = Fraction(rng.randint(1, 6), rng.randint(1, 3))
        n = rng.randint(1, 6)

        def gap_sequence():
            k = rng.randint(0, n)
            incs = sorted((Fraction(rng.randint(0, 8), rng.randint(1, 2))
                           for _ in range(k)), reverse=True)
            return [M + inc for inc in incs] + [Fraction(0)] * (n - k)

        a, b = gap_sequence(), gap_sequence()
        d = [Fraction(rng.randint(1, 5)) for _ in range(n)]
        lhs, rhs = min_sum_bound(M, a, b, d)
        ok = lhs >= rhs
        detail = {"M": str(M), "lhs": str(lhs), "rhs": str(rhs)}
        ce = None
        if not ok:
            ce = {"suite": "min-sum", "M": str(M), "a": [str(x) for x in a],
                  "b": [str(x) for x in b], "d": [str(x) for x in d],
                  "lhs": str(lhs), "rhs": str(rhs)}
        out.append(ItemResult("min-sum", i, ok, detail, counterexample=ce))
    return out


def _bound_suite(name: str, corpus: Corpus, indices: Iterable[int],
                 base_seed: int, pgroup_only: bool) -> List[ItemResult]:
    pool = corpus.pgroup_chains() if pgroup_only \
        else [(None, c) for c in corpus.all_chains()]
    out = []
    for i in indices:
        p, chain = pool[i % len(pool)]
        G = chain.filtration.parent
        T = character_table(G)
        if pgroup_only:
            t1 = gen_rational(G, _seed(name, base_seed, i, "a"), 10)
            t2 = gen_rational(G, _seed(name, base_seed, i, "b"), 10)
            lhs, rhs = pgroup_tensor_bound(t1, t2, chain.filtration, p)
        else:
            t1 = gen_symplectic(G, _seed(name, base_seed, i, "a"), 10)
            t2 = gen_symplectic(G, _seed(name, base_seed, i, "b"), 10)
            lhs, rhs = symplectic_tensor_bound(t1, t2, chain.filtration)
        ok = lhs <= rhs
        detail = {"chain": chain.label, "lhs": str(lhs), "rhs": str(rhs)}
        ce = None
        if not ok:
            ce = {"suite": name, "chain": _chain_doc(chain), "p": p,
                  "tau1": _mults(T, t1), "tau2": _mults(T, t2),
                  "lhs": str(lhs), "rhs": str(rhs)}
        out.append(ItemResult(name, i, ok, detail, counterexample=ce))
    return out


def suite_symplectic_bound(corpus, indices, base_seed):
    return _bound_suite("symplectic-bound", corpus, indices, base_seed, False)


def suite_pgroup_bound(corpus, indices, base_seed):
    return _bound_suite("pgroup-bound", corpus, indices, base_seed, True)


def _entry_subgroups(entry):
    """Every distinct subgroup appearing in the entry's chains."""
    seen = {}
    for chain in entry.chains:
        for j, H in enumerate(chain.filtration.chain):
            seen.setdefault(H.elements, (chain, j, H))
    return list(seen.values())


def suite_symplectic_parity(corpus: Corpus, indices: Iterable[int],
                            base_seed: int) -> List[ItemResult]:
    """Symplectic characters have even nonfixed dimension on every subgroup."""
    out = []
    for i in indices:
        entry = corpus.entries[i % len(corpus.entries)]
        G = entry.group
        T = character_table(G)
        tau = gen_symplectic(G, _seed("parity", base_seed, i, "t"), 10)
        subgroups = _entry_subgroups(entry)
        bad = next(((chain, j, g) for chain, j, H in subgroups
                    if (g := tau.dim - fixed_dim(tau, H)) % 2), None)
        detail = {"entry": entry.name,
                  "gaps": [tau.dim - fixed_dim(tau, H) for _, _, H in subgroups]}
        ce = None
        if bad is not None:
            chain, j, g = bad
            ce = {"suite": "symplectic-parity", "chain": _chain_doc(chain),
                  "tau": _mults(T, tau), "level": j, "gap": g}
        out.append(ItemResult("symplectic-parity", i, bad is None, detail,
                              checks=len(subgroups), counterexample=ce))
    return out


def suite_pgroup_gap(corpus: Corpus, indices: Iterable[int],
                     base_seed: int) -> List[ItemResult]:
    """On p-groups, rational characters have nonfixed dim 0 or >= p-1."""
    pool = [(e, e.pgroup_prime()) for e in corpus.entries
            if e.pgroup_prime() is not None]
    out = []
    for i in indices:
        entry, p = pool[i % len(pool)]
        G = entry.group
        T = character_table(G)
        tau = gen_rational(G, _seed("gap", base_seed, i, "t"), 10)
        subgroups = _entry_subgroups(entry)
        bad = next(((chain, j, g) for chain, j, H in subgroups
                    if (g := tau.dim - fixed_dim(tau, H)) != 0 and g < p - 1),
                   None)
        detail = {"entry": entry.name, "p": p,
                  "gaps": [tau.dim - fixed_dim(tau, H) for _, _, H in subgroups]}
        ce = None
        if bad is not None:
            chain, j, g = bad
            ce = {"suite": "pgroup-gap", "chain": _chain_doc(chain), "p": p,
                  "tau": _mults(T, tau), "level": j, "gap": g}
        out.append(ItemResult("pgroup-gap", i, bad is None, detail,
                              checks=len(subgroups), counterexample=ce))
    return out


def _wd_items(name: str, corpus: Corpus, indices: Iterable[int], base_seed: int,
              evaluate: Callable) -> List[ItemResult]:
    chains = corpus.model_chains()
    out = []
    for i in indices:
        chain = chains[i % len(chains)]
        model = chain.model()
        ok, detail, inputs = evaluate(name, model, base_seed, i)
        ce = None
        if not ok:
            ce = {"suite": name, "chain": _chain_doc(chain), **inputs, **detail}
        detail["chain"] = chain.label
        out.append(ItemResult(name, i, ok, detail, counterexample=ce))
    return out


def suite_semistable(corpus, indices, base_seed):
    def evaluate(name, model, base, i):
        T = character_table(model.group)
        A = gen_semistable(model, _seed(name, base, i, "A"))
        B = gen_abvar(model, _seed(name, base, i, "B"))
        lhs, rhs = semistable_equality(A, B)
        detail = {"lhs": str(lhs), "rhs": str(rhs)}
        return lhs == rhs, detail, {"A": _abvar_doc(T, A), "B": _abvar_doc(T, B)}
    return _wd_items("semistable", corpus, indices, base_seed, evaluate)


def suite_swan_bound(corpus, indices, base_seed):
    def evaluate(name, model, base, i):
        T = character_table(model.group)
        A = gen_abvar(model, _seed(name, base, i, "A"))
        B = gen_abvar(model, _seed(name, base, i, "B"))
        lhs, rhs = swan_bound(A, B)
        detail = {"lhs": str(lhs), "rhs": str(rhs)}
        return lhs <= rhs, detail, {"A": _abvar_doc(T, A), "B": _abvar_doc(T, B)}
    return _wd_items("swan-bound", corpus, indices, base_seed, evaluate)


def suite_tame_identity(corpus, indices, base_seed):
    def evaluate(name, model, base, i):
        T = character_table(model.group)
        A = gen_abvar(model, _seed(name, base, i, "A"), force_ramified=True)
        B = gen_abvar(model, _seed(name, base, i, "B"), force_ramified=True)
        lhs, rhs = tame_identity(A, B)
        detail = {"lhs": str(lhs), "rhs": str(rhs)}
        return lhs == rhs, detail, {"A": _abvar_doc(T, A), "B": _abvar_doc(T, B)}
    return _wd_items("tame-identity", corpus, indices, base_seed, evaluate)


def suite_conductor_bound(corpus, indices, base_seed):
    def evaluate(name, model, base, i):
        T = character_table(model.group)
        A = gen_abvar(model, _seed(name, base, i, "A"))
        B = gen_abvar(model, _seed(name, base, i, "B"))
        lhs, rhs, C = conductor_bound(A, B)
        ok = lhs <= rhs
        # the bound collapses to the semistable closed form when a <= 1
        aA, aB = A.artin(), B.artin()
        corr = degree_correction(A, B)
        if aA <= 1:
            ok = ok and lhs == A.dim * aB + B.deg() * aA - corr
        elif aB <= 1:
            ok = ok and lhs == B.dim * aA + A.deg() * aB - corr
        detail = {"lhs": str(lhs), "rhs": str(rhs), "C": C}
        return ok, detail, {"A": _abvar_doc(T, A), "B": _abvar_doc(T, B)}
    return _wd_items("conductor-bound", corpus, indices, base_seed, evaluate)


def suite_uniform_bound(corpus, indices, base_seed):
    def evaluate(name, model, base, i):
        T = character_table(model.group)
        A = gen_abvar(model, _seed(name, base, i, "A"))
        B = gen_abvar(model, _seed(name, base, i, "B"))
        lhs, rhs, corr = uniform_bound(A, B)
        ok = lhs <= rhs
        if improvement_constant(A, B) >= 2:
            # the refined bound is at least as strong in this regime
            ok = ok and conductor_bound(A, B)[1] <= rhs
        detail = {"lhs": str(lhs), "rhs": str(rhs), "corr": str(corr)}
        return ok, detail, {"A": _abvar_doc(T, A), "B": _abvar_doc(T, B)}
    return _wd_items("uniform-bound", corpus, indices, base_seed, evaluate)


def suite_degree_gap(corpus, indices, base_seed):
    def evaluate(name, model, base, i):
        T = character_table(model.group)
        A = gen_abvar(model, _seed(name, base, i, "A"))
        gap = degree_gap(A)
        ok = gap >= 0 and (A.artin() == 0 or gap >= 1)
        detail = {"gap": gap, "artin": str(A.artin())}
        return ok, detail, {"A": _abvar_doc(T, A)}
    return _wd_items("degree-gap", corpus, indices, base_seed, evaluate)


def suite_global(corpus: Corpus, indices: Iterable[int],
                 base_seed: int) -> List[ItemResult]:
    """Full-mode global data: per-prime divisibility of the factored bounds."""
    pool = corpus.integral_model_chains()
    labels = (2, 3, 5, 7, 11)
    out = []
    for i in indices:
        rng = _rng("global", base_seed, i)
        dim_a = rng.randint(1, 3)
        dim_b = rng.randint(1, 3)
        nprimes = rng.randint(1, 3)
        primes = sorted(rng.sample(labels, nprimes))
        records = []
        docs = []
        for p in primes:
            chain = pool[rng.randrange(len(pool))]
            model = chain.model()
            T = character_table(model.group)
            A = gen_abvar(model, _seed("global", base_seed, i, f"A{p}"),
                          target_dim=2 * dim_a)
            B = gen_abvar(model, _seed("global", base_seed, i, f"B{p}"),
                          target_dim=2 * dim_b)
            records.append(PrimeLocalPair(p, A, B))
            docs.append({"p": p, "chain": _chain_doc(chain),
                         "A": _abvar_doc(T, A), "B": _abvar_doc(T, B)})
        try:
            datum = GlobalDatum(dim_a, dim_b, tuple(records))
            report = rankin_selberg_bound(datum)
            self_datum = GlobalDatum(dim_a, dim_a, tuple(
                PrimeLocalPair(r.p, r.A, r.A) for r in records))
            self_report = self_tensor_bound_report(self_datum)
            ok = report.all_checks_pass() and self_report.all_checks_pass()
            detail = {"bound": report.bound.to_json(),
                      "d_term": report.d.to_json(),
                      "per_prime": list(report.per_prime),
                      "self_bound": self_report.bound.to_json(),
                      "self_per_prime": list(self_report.per_prime)}
        except TensorCondError as err:
            ok = False
            detail = {"error": str(err)}
        ce = None
        if not ok:
            ce = {"suite": "global", "dim_a": dim_a, "dim_b": dim_b,
                  "primes": docs, **detail}
        out.append(ItemResult("global", i, ok, detail, checks=len(primes),
                              counterexample=ce))
    return out


def suite_sharpness(corpus: Corpus, indices: Iterable[int],
                    base_seed: int) -> List[ItemResult]:
    """Sharpness sweep plus the discriminant-valuation closed form."""
    out = []
    for i in indices:
        p = SHARPNESS_PRIMES[i % len(SHARPNESS_PRIMES)]
        a = smallest_valid_unit(p)
        report = verify_sharpness(validate_params(p, a))
        closed_form_ok = all(
            disc_valuation(p, alpha) == p + (p - 1) * _vp(p, alpha)
            for alpha in (a, p, p * p, a * p, a + p))
        ok = report.equal and closed_form_ok
        detail = report.to_json()
        detail["disc_closed_form"] = closed_form_ok
        ce = None if ok else {"suite": "sharpness", "p": p, "a": a, **detail}
        out.append(ItemResult("sharpness", i, ok, detail, checks=6,
                              counterexample=ce))
    return out


def _vp(p: int, n: int) -> int:
    v = 0
    n = abs(n)
    while n % p == 0:
        n //= p
        v += 1
    return v


SUITES: Dict[str, Callable[[Corpus, Iterable[int], int], List[ItemResult]]] = {
    "step-identity": suite_step_identity,
    "min-sum": suite_min_sum,
    "symplectic-bound": suite_symplectic_bound,
    "pgroup-bound": suite_pgroup_bound,
    "symplectic-parity": suite_symplectic_parity,
    "pgroup-gap": suite_pgroup_gap,
    "semistable": suite_semistable,
    "swan-bound": suite_swan_bound,
    "tame-identity": suite_tame_identity,
    "conductor-bound": suite_conductor_bound,
    "uniform-bound": suite_uniform_bound,
    "degree-gap": suite_degree_gap,
    "global": suite_global,
    "sharpness": suite_sharpness,
}

DEFAULT_SEEDS: Dict[str, int] = {
    "step-identity": 1000,
    "min-sum": 500,
    "symplectic-bound": 500,
    "pgroup-bound": 500,
    "symplectic-parity": 300,
    "pgroup-gap": 300,
    "semistable": 200,
    "swan-bound": 500,
    "tame-identity": 500,
    "conductor-bound": 500,
    "uniform-bound": 500,
    "degree-gap": 500,
    "global": 100,
    "sharpness": 5,
}


def run_suite(name: str, corpus: Corpus, seeds: Optional[int] = None,
              base_seed: int = 0) -> List[ItemResult]:
    if name not in SUITES:
        raise ValueError(f"unknown suite {name!r}; choose from {sorted(SUITES)}")
    if seeds is None:
        seeds = DEFAULT_SEEDS[name]
    return SUITES[name](corpus, range(seeds), base_seed)


def run_suite_range(name: str, corpus: Corpus, start: int, count: int,
                    base_seed: int = 0) -> List[ItemResult]:
    """Evaluate a contiguous index range; items only depend on their index."""
    return SUITES[name](corpus, range(start, start + count), base_seed)


def serialize_counterexample(result: ItemResult) -> dict:
    """The self-contained document for a failing item, as replay() expects."""
    if result.counterexample is None:
        raise ValueError(f"item {result.suite}#{result.index} did not fail")
    return result.counterexample


# -- counterexample replay ------------------------------------------------------


def replay(doc: dict) -> dict:
    """Re-evaluate a counterexample document; returns both sides and verdict."""
    suite = doc["suite"]
    if suite == "min-sum":
        lhs, rhs = min_sum_bound(Fraction(doc["M"]),
                                 [Fraction(x) for x in doc["a"]],
                                 [Fraction(x) for x in doc["b"]],
                                 [Fraction(x) for x in doc["d"]])
        return {"lhs": str(lhs), "rhs": str(rhs), "ok": lhs >= rhs}

    if suite == "sharpness":
        report = verify_sharpness(validate_params(doc["p"], doc["a"]))
        return {"lhs": str(report.a_tensor), "rhs": str(report.conductor_rhs),
                "ok": report.equal}

    if suite == "global":
        records = []
        for rec in doc["primes"]:
            group, filt, model_p = _rebuild_chain(rec["chain"])
            model = InertiaModel(group, filt, model_p)
            A = _rebuild_abvar(model, rec["A"])
            B = _rebuild_abvar(model, rec["B"])
            records.append(PrimeLocalPair(rec["p"], A, B))
        datum = GlobalDatum(doc["dim_a"], doc["dim_b"], tuple(records))
        report = rankin_selberg_bound(datum)
        return {"bound": report.bound.to_json(), "ok": report.all_checks_pass()}

    group, filt, model_p = _rebuild_chain(doc["chain"])
    T = character_table(group)

    if suite == "step-identity":
        t1, t2 = T.assemble(doc["tau1"]), T.assemble(doc["tau2"])
        lhs, rhs = tensor_level_identity(t1, t2, filt, doc["level"])
        return {"lhs": str(lhs), "rhs": str(rhs), "ok": lhs == rhs}
    if suite == "symplectic-bound":
        t1, t2 = T.assemble(doc["tau1"]), T.assemble(doc["tau2"])
        lhs, rhs = symplectic_tensor_bound(t1, t2, filt)
        return {"lhs": str(lhs), "rhs": str(rhs), "ok": lhs <= rhs}
    if suite == "pgroup-bound":
        t1, t2 = T.assemble(doc["tau1"]), T.assemble(doc["tau2"])
        lhs, rhs = pgroup_tensor_bound(t1, t2, filt, doc["p"])
        return {"lhs": str(lhs), "rhs": str(rhs), "ok": lhs <= rhs}
    if suite == "symplectic-parity":
        tau = T.assemble(doc["tau"])
        gap = tau.dim - fixed_dim(tau, filt[doc["level"]])
        return {"lhs": str(gap), "rhs": "even", "ok": gap % 2 == 0}
    if suite == "pgroup-gap":
        tau = T.assemble(doc["tau"])
        gap = tau.dim - fixed_dim(tau, filt[doc["level"]])
        ok = gap == 0 or gap >= doc["p"] - 1
        return {"lhs": str(gap), "rhs": f">= {doc['p'] - 1} or 0", "ok": ok}

    model = InertiaModel(group, filt, model_p)
    A = _rebuild_abvar(model, doc["A"])
    if suite == "degree-gap":
        gap = degree_gap(A)
        ok = gap >= 0 and (A.artin() == 0 or gap >= 1)
        return {"lhs": str(gap), "rhs": ">= 1 if ramified", "ok": ok}
    B = _rebuild_abvar(model, doc["B"])
    if suite == "semistable":
        lhs, rhs = semistable_equality(A, B)
        return {"lhs": str(lhs), "rhs": str(rhs), "ok": lhs == rhs}
    if suite == "swan-bound":
        lhs, rhs = swan_bound(A, B)
        return {"lhs": str(lhs), "rhs": str(rhs), "ok": lhs <= rhs}
    if suite == "tame-identity":
        lhs, rhs = tame_identity(A, B)
        return {"lhs": str(lhs), "rhs": str(rhs), "ok": lhs == rhs}
    if suite == "conductor-bound":
        lhs, rhs, _ = conductor_bound(A, B)
        return {"lhs": str(lhs), "rhs": str(rhs), "ok": lhs <= rhs}
    if suite == "uniform-bound":
        lhs, rhs, _ = uniform_bound(A, B)
        return {"lhs": str(lhs), "rhs": str(rhs), "ok": lhs <= rhs}
    raise ValueError(f"cannot replay suite {suite!r}")
