import json

from biocoref import resolver
from biocoref.completion import assign_multi_anaphors
from biocoref.fixtures import Ent, Ev, _doc
from biocoref.standoff import load_document

from conftest import completed_key, load_fixture


def _resolve(raw):
    doc = load_document(json.dumps(raw))
    return resolver.resolve_document(doc, resolver.ResolverConfig.default())


def test_conjoined_themes_split_against_fixed_participant(corpus):
    res = _resolve(corpus["ex5_ras_binding"])
    got = {completed_key(c) for c in res.completed}
    assert got == {
        ("Binding", frozenset({("theme1", "T1"), ("theme2", "T3")}), "Unspecified", False),
        ("Binding", frozenset({("theme1", "T2"), ("theme2", "T3")}), "Unspecified", False),
    }
    # Conjoined entities never pair with each other.
    for c in res.completed:
        refs = {a.ref for a in c.args}
        assert not {"T1", "T2"} <= refs


def test_plural_anaphor_split(corpus):
    res = _resolve(corpus["ex16_baf_emerin"])
    pairs = sorted(tuple(sorted(a.ref for a in c.args)) for c in res.completed)
    assert pairs == [("T1", "T4"), ("T2", "T4")]
    assert all(c.provenance == ("T3",) for c in res.completed)
    assert sorted(c.id for c in res.completed) == ["E1.c0", "E1.c1"]


def test_event_without_anaphors_passes_through():
    d = _doc("plain", ["RAF1 phosphorylates MEK1."],
             [Ent("T1", 0, "RAF1", "Protein"), Ent("T2", 0, "MEK1", "Protein")],
             [Ev("E1", 0, "phosphorylates", "Phosphorylation",
                 [("cause", "T1"), ("theme", "T2")])])
    res = _resolve(d)
    assert len(res.completed) == 1
    c = res.completed[0]
    assert c.id == "E1" and c.derived_from == "E1" and c.provenance == ()
    assert [(a.role, a.ref) for a in c.args] == [("cause", "T1"), ("theme", "T2")]


def test_assign_multi_anaphors_left_to_right():
    # Text-order pairing: first anaphor takes the first group.
    assert assign_multi_anaphors(["it", "its"], [["c-Cbl"], ["MLK3"]]) == [
        ("it", ["c-Cbl"]), ("its", ["MLK3"])]


def test_assign_multi_anaphors_degenerate_and_partial():
    assert assign_multi_anaphors(["it"], [["X"]]) == [("it", ["X"])]
    assert assign_multi_anaphors(["it", "its"], [["X"]]) == [("it", ["X"]), ("its", None)]


def test_engine_matches_left_to_right_assignment(corpus, config):
    doc = load_fixture(corpus, "ex6_ccbl_mlk3")
    res = resolver.resolve_document(doc, config)
    by_anaphor = {l.anaphor_id: list(l.antecedent_ids) for l in res.links}
    anaphors = sorted(by_anaphor)  # T3 before T4 matches text order here
    groups = [by_anaphor[a] for a in anaphors]
    assert assign_multi_anaphors(anaphors, groups) == [
        ("T3", ["T1"]), ("T4", ["T2"])]


def test_regulation_duplicated_per_split_child():
    d = _doc("regdup",
             ["RAF1 and MEK1 form a complex with ERK2.",
              "This binding results in STAT3 activation."],
             [Ent("T1", 0, "RAF1", "Protein"), Ent("T2", 0, "MEK1", "Protein"),
              Ent("T3", 0, "ERK2", "Protein"), Ent("T4", 1, "STAT3", "Protein")],
             [Ev("E1", 0, "complex", "Binding",
                 [("theme1", "T1"), ("theme1", "T2"), ("theme2", "T3")]),
              Ev("E2", 1, "binding", "Binding", []),
              Ev("E3", 1, "activation", "Activation", [("theme", "T4")]),
              Ev("E4", 1, "results", "Regulation",
                 [("controller", "E2"), ("controlled", "E3")])])
    res = _resolve(d)
    regs = [c for c in res.completed if c.event_type == "Regulation"]
    assert sorted(c.args[0].ref for c in regs) == ["E1.c0", "E1.c1"]
    assert all(c.args[1].ref == "E3" for c in regs)
    assert all("E2" in c.provenance for c in regs)


def test_self_relation_suppressed():
    d = _doc("selfbind", ["STAT3 binds STAT3 directly."],
             [Ent("T1", 0, "STAT3", "Protein"),
              Ent("T2", 0, "STAT3", "Protein", occ=2)],
             [Ev("E1", 0, "binds", "Binding", [("theme1", "T1"), ("theme2", "T2")])])
    res = _resolve(d)
    assert res.completed == []
    assert res.dropped_events == {"E1": "self_relation"}


def test_split_count_is_product_of_role_multiplicities():
    d = _doc("product", ["RAF1 and MEK1 bind ERK2 and STAT3 together."],
             [Ent("T1", 0, "RAF1", "Protein"), Ent("T2", 0, "MEK1", "Protein"),
              Ent("T3", 0, "ERK2", "Protein"), Ent("T4", 0, "STAT3", "Protein")],
             [Ev("E1", 0, "bind", "Binding",
                 [("theme1", "T1"), ("theme1", "T2"),
                  ("theme2", "T3"), ("theme2", "T4")])])
    res = _resolve(d)
    pairs = sorted(tuple(a.ref for a in c.args) for c in res.completed)
    assert pairs == [("T1", "T3"), ("T1", "T4"), ("T2", "T3"), ("T2", "T4")]


def test_incomplete_after_substitution_is_dropped():
    d = _doc("gap", ["The interaction with MEK1 was strong."],
             [Ent("T1", 0, "MEK1", "Protein")],
             [Ev("E1", 0, "interaction", "Binding", [("theme2", "T1")])])
    res = _resolve(d)
    assert res.completed == []
    assert res.dropped_events == {"E1": "incomplete_after_substitution"}


def test_derived_from_preserves_source_event(resolved_corpus):
    for doc_id, (doc, res) in resolved_corpus.items():
        event_ids = {ev.id for ev in doc.events}
        for c in res.completed:
            assert c.derived_from in event_ids, doc_id
