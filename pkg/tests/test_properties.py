"""Invariant checks over randomized synthetic documents.

Each document runs through the full pipeline with an observer that inspects
the shared state after every sieve slot: the chain partition must stay a
partition, links must stay inside their chains, earlier resolutions must
never be overwritten, and the final output must be deterministic, free of
forward links, and free of self-relations.
"""

import json

from biocoref import resolver
from biocoref.sieves import SIEVE_ORDER
from biocoref.standoff import load_document

from synth import synth_corpus

N_DOCS = 300  # the acceptance suite runs the full 1000; keep this tier fast


def _mention_starts(doc):
    starts = {e.id: e.start for e in doc.entities}
    starts.update({ev.id: ev.trigger_start for ev in doc.events})
    return starts


def _mention_ends(doc):
    ends = {e.id: e.end for e in doc.entities}
    ends.update({ev.id: ev.trigger_end for ev in doc.events})
    return ends


def check_document(doc, config):
    seen_sieves = []
    linked_history = []

    def observer(name, state):
        seen_sieves.append(name)
        groups = state.uf.groups()
        members = [m for g in groups.values() for m in g]
        assert len(members) == len(set(members)), "chain partition overlap"
        for root, group in groups.items():
            assert all(state.uf.find(m) == root for m in group)
        for link in state.links:
            assert link.antecedent_ids, "empty antecedent list"
            assert link.anaphor_id not in link.antecedent_ids
            for ant in link.antecedent_ids:
                assert state.uf.same(link.anaphor_id, ant), "link outside its chain"
        linked_history.append({l.anaphor_id for l in state.links})

    res = resolver.resolve_document(doc, config, observer=observer)

    assert seen_sieves == list(SIEVE_ORDER)
    # Precedence: the set of resolved anaphors only ever grows, and each
    # anaphor is linked exactly once.
    for before, after in zip(linked_history, linked_history[1:]):
        assert before <= after
    anaphors = [l.anaphor_id for l in res.links]
    assert len(anaphors) == len(set(anaphors))

    # No cataphora: every antecedent starts strictly before its anaphor,
    # and never overlaps or follows the anaphor's candidate span.
    starts = _mention_starts(doc)
    ends = _mention_ends(doc)
    candidate_spans = {c.mention_id: (c.start, c.end) for c in res.candidates}
    for link in res.links:
        anaphor_start = candidate_spans[link.anaphor_id][0]
        for ant in link.antecedent_ids:
            assert starts[ant] < starts[link.anaphor_id], "forward link"
            assert ends[ant] <= anaphor_start, "antecedent overlaps its anaphor"

    # No event pairs two chain mates as its participants.
    chain_index = {}
    for i, chain in enumerate(res.chains):
        for m in chain:
            chain_index[m] = i
    for ev in res.completed:
        keys = [chain_index.get(a.ref, a.ref) for a in ev.args]
        assert len(keys) == len(set(keys)), f"self-relation in {ev.id}"

    # Counters reconcile.
    c = res.counters
    assert c["anaphors_detected"] == c["anaphors_resolved"] + c["anaphors_dropped"]
    return res


def test_invariants_on_synthetic_corpus(config):
    docs = synth_corpus(seed=20260808, count=N_DOCS)
    assert len({d["doc_id"] for d in docs}) == N_DOCS
    for raw in docs:
        doc = load_document(json.dumps(raw))
        check_document(doc, config)


def test_determinism_on_synthetic_sample(config):
    for raw in synth_corpus(seed=99, count=40):
        doc_a = load_document(json.dumps(raw))
        doc_b = load_document(json.dumps(raw))
        out_a = resolver.resolve_document(doc_a, config).to_bytes(emit_provenance=True)
        out_b = resolver.resolve_document(doc_b, config).to_bytes(emit_provenance=True)
        assert out_a == out_b


def test_invariants_on_fixture_corpus(resolved_corpus, config):
    for doc_id, (doc, _) in resolved_corpus.items():
        check_document(doc, config)


def test_antecedents_are_never_anaphors(config):
    # A detected candidate must not serve as an antecedent for another one.
    for raw in synth_corpus(seed=4242, count=120):
        doc = load_document(json.dumps(raw))
        res = resolver.resolve_document(doc, config)
        candidate_ids = {c.mention_id for c in res.candidates}
        for link in res.links:
            assert not (set(link.antecedent_ids) & candidate_ids)


def test_full_entity_mentions_survive(config):
    # Cleanup removes only unresolved anaphors, never plain mentions.
    for raw in synth_corpus(seed=7, count=80):
        doc = load_document(json.dumps(raw))
        res = resolver.resolve_document(doc, config)
        candidate_ids = {c.mention_id for c in res.candidates}
        for ent in doc.entities:
            if ent.id not in candidate_ids:
                assert any(e.id == ent.id for e in res.doc.entities)
