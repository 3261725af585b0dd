import json

import pytest

from tensorcond.corpus import CORPUS_VERSION, CorpusError, load_corpus
from tensorcond.suites import (DEFAULT_SEEDS, SUITES, gen_abvar, replay,
                               run_suite, run_suite_range)

EXPECTED_ENTRIES = {"c4", "c8", "c9", "c5", "c25", "q8", "d4", "heis3",
                    "ea9", "aff5"}


@pytest.fixture(scope="module")
def corpus():
    return load_corpus()


def test_corpus_contents(corpus):
    assert {e.name for e in corpus.entries} == EXPECTED_ENTRIES
    assert corpus.version == CORPUS_VERSION
    # at least one chain with a non-normal step ships in the corpus
    nonnormal = [c for c in corpus.all_chains()
                 if any(not s.is_normal() for s in c.filtration.chain)]
    assert nonnormal
    # every model chain has a p-group at wild level
    for c in corpus.model_chains():
        assert c.filtration[1].is_pgroup(c.model_p) if len(c.filtration) > 1 else True


def test_corpus_pgroup_coverage(corpus):
    primes = {p for p, _ in corpus.pgroup_chains()}
    assert {2, 3, 5} <= primes


def test_corpus_version_check(tmp_path):
    bad = tmp_path / "corpus.json"
    bad.write_text(json.dumps({"version": 99, "entries": []}))
    with pytest.raises(CorpusError):
        load_corpus(str(bad))
    bad.write_text("not json")
    with pytest.raises(CorpusError):
        load_corpus(str(bad))


def test_every_suite_green_briefly(corpus):
    for name in SUITES:
        results = run_suite(name, corpus, seeds=6, base_seed=1)
        assert len(results) == 6
        assert all(r.ok for r in results), [r.detail for r in results if not r.ok]


def test_suite_range_matches_full_run(corpus):
    full = run_suite("swan-bound", corpus, seeds=8, base_seed=3)
    part = run_suite_range("swan-bound", corpus, 4, 4, base_seed=3)
    for a, b in zip(full[4:], part):
        assert a.index == b.index and a.detail == b.detail


def test_determinism(corpus):
    a = run_suite("conductor-bound", corpus, seeds=10, base_seed=7)
    b = run_suite("conductor-bound", corpus, seeds=10, base_seed=7)
    assert [r.to_json() for r in a] == [r.to_json() for r in b]
    c = run_suite("conductor-bound", corpus, seeds=10, base_seed=8)
    assert [r.to_json() for r in a] != [r.to_json() for r in c]


def test_gen_abvar_target_dim(corpus):
    for chain in corpus.integral_model_chains():
        model = chain.model()
        for target in (2, 4, 6):
            datum = gen_abvar(model, f"t:{chain.label}:{target}",
                              target_dim=target)
            assert datum.dim == target


def test_counterexample_replay_roundtrip(corpus):
    """Force failures by corrupting inputs; the dump must replay to the
    same lhs/rhs values it records."""
    results = run_suite("step-identity", corpus, seeds=5, base_seed=0)
    for r in results:
        assert r.counterexample is None
    # build a synthetic counterexample document from a passing item and
    # check that replay reproduces the recorded sides
    from tensorcond.chars import character_table, gen_character
    from tensorcond.filtration import tensor_level_identity
    from tensorcond.suites import _chain_doc, _mults
    chain = corpus.all_chains()[0]
    G = chain.filtration.parent
    T = character_table(G)
    t1 = gen_character(G, "r1", 8)
    t2 = gen_character(G, "r2", 8)
    lhs, rhs = tensor_level_identity(t1, t2, chain.filtration, 1)
    doc = {"suite": "step-identity", "chain": _chain_doc(chain),
           "tau1": _mults(T, t1), "tau2": _mults(T, t2), "level": 1,
           "lhs": str(lhs), "rhs": str(rhs)}
    verdict = replay(doc)
    assert verdict["lhs"] == doc["lhs"] and verdict["rhs"] == doc["rhs"]
    assert verdict["ok"]
    # documents survive a JSON round trip
    verdict2 = replay(json.loads(json.dumps(doc)))
    assert verdict2 == verdict


def test_replay_covers_wd_suites(corpus):
    from tensorcond.chars import character_table
    from tensorcond.suites import _abvar_doc, _chain_doc
    from tensorcond.weildeligne import swan_bound
    chain = corpus.model_chains()[5]
    model = chain.model()
    T = character_table(model.group)
    A = gen_abvar(model, "rp:a")
    B = gen_abvar(model, "rp:b")
    lhs, rhs = swan_bound(A, B)
    doc = {"suite": "swan-bound", "chain": _chain_doc(chain),
           "A": _abvar_doc(T, A), "B": _abvar_doc(T, B),
           "lhs": str(lhs), "rhs": str(rhs)}
    verdict = replay(json.loads(json.dumps(doc)))
    assert verdict["ok"] and verdict["lhs"] == str(lhs)


def test_default_seed_table_covers_all_suites():
    assert set(DEFAULT_SEEDS) == set(SUITES)


def test_forced_failure_replays_to_failure(corpus):
    """A document recording a genuine violation replays to ok = False: here
    a 3-group gap document deliberately claims the threshold of p = 7."""
    from tensorcond.chars import character_table, dsum, ClassFunction
    from tensorcond.suites import (ItemResult, _chain_doc, _mults,
                                   serialize_counterexample)
    chain = next(c for c in corpus.all_chains() if c.entry_name == "c9")
    G = chain.filtration.parent
    T = character_table(G)
    # the size-2 Galois orbit (the order-3 characters) has gap 2 on G itself
    orbit = next(o for o in T.galois_orbits if len(o) == 2)
    tau = ClassFunction.zero(G)
    for i in orbit:
        tau = dsum(tau, T.irreducibles[i])
    doc = {"suite": "pgroup-gap", "chain": _chain_doc(chain), "p": 7,
           "tau": _mults(T, tau), "level": 0}
    verdict1 = replay(doc)
    assert verdict1["ok"] is False and verdict1["lhs"] == "2"
    verdict2 = replay(json.loads(json.dumps(doc)))
    assert verdict1 == verdict2
    item = ItemResult("pgroup-gap", 0, False, {}, counterexample=doc)
    assert serialize_counterexample(item) == doc
    with pytest.raises(ValueError):
        serialize_counterexample(ItemResult("pgroup-gap", 0, True, {}))
