"""The deterministic resolution sieves.

Passes run in a fixed order, from the most precise to the most permissive:

    1. exact_string      cluster identical entity surfaces (chain merges only)
    2. shared_grounding  cluster mentions grounded to one canonical ID
    3. mutant_match      "all six FGFR3 mutants" back to spelled-out mutants
    4. strict_head       definite NPs fully contained in an earlier mention
    5. pronominal        it/its/they/their/both via the linear search
    6. class_np          "the protein", "this kinase", mutant shorthand NPs
    7. event_coref       incomplete nominal events inside regulations
    8. cleanup           drop whatever found no antecedent

Sieves only ever add links and chain merges; an anaphor resolved by one
sieve is never touched by a later one. Cleanup is the only pass that
removes anything. Relaxed matching passes common in open-domain resolvers
(relaxed string match, relaxed head match, and kin) are deliberately absent:
they are too permissive for this domain.
"""

from __future__ import annotations

import re
from dataclasses import dataclass, field, replace

from . import detection as det
from .detection import AnaphorCandidate, TriggerDictionary
from .grounding import GroundingTable
from .index import DocIndex
from .model import CorefLink, Document, EntityMention, EventMention
from .schema import ArgSchema, structurally_complete, with_completeness
from .search import (
    ACCEPTED,
    SearchConstraints,
    build_constraints,
    event_antecedent_search,
    expand_target_class,
    linear_search,
    verdict_for,
)
from .unionfind import UnionFind

SIEVE_ORDER = (
    "exact_string",
    "shared_grounding",
    "mutant_match",
    "strict_head",
    "pronominal",
    "class_np",
    "event_coref",
    "cleanup",
)

SIEVE_RANK = {name: i + 1 for i, name in enumerate(SIEVE_ORDER)}

_SURFACE_COMPONENTS = re.compile(r"[\s\-/()]+")


@dataclass(slots=True)
class CorefState:
    """Shared mutable state threaded through the pipeline.

    Chains are disjoint sets over mention IDs; links are append-only; a
    resolved anaphor is never re-resolved.
    """

    uf: UnionFind = field(default_factory=UnionFind)
    links: list[CorefLink] = field(default_factory=list)
    resolved: set[str] = field(default_factory=set)
    sieve_cursor: int = 0

    def chains(self) -> list[list[str]]:
        """Non-singleton chains, each sorted, in deterministic order."""
        groups = [g for g in self.uf.groups().values() if len(g) > 1]
        return sorted(groups)

    def link_for(self, anaphor_id: str) -> CorefLink | None:
        for link in self.links:
            if link.anaphor_id == anaphor_id:
                return link
        return None


@dataclass(slots=True)
class ResolveContext:
    index: DocIndex
    lexicon: TriggerDictionary
    schema: ArgSchema
    grounding: GroundingTable
    candidates: list[AnaphorCandidate]
    candidate_ids: frozenset[str]
    trace: dict[str, dict] | None = None

    def record(self, anaphor_id: str, sieve: str, status: str,
               considered: list | None = None, antecedents: list[str] | None = None) -> None:
        if self.trace is None:
            return
        attempt: dict = {"sieve": sieve, "status": status}
        if considered:
            attempt["considered"] = considered
        if antecedents:
            attempt["antecedents"] = antecedents
        self.trace[anaphor_id]["attempts"].append(attempt)


def _full_entities(ctx: ResolveContext) -> list[EntityMention]:
    """Entity mentions that are not themselves anaphor candidates."""
    return [e for e in ctx.index.entities if e.id not in ctx.candidate_ids]


def _link(ctx: ResolveContext, state: CorefState, anaphor: AnaphorCandidate,
          antecedents: list[str], sieve: str, considered: list | None = None) -> None:
    state.links.append(CorefLink(
        anaphor_id=anaphor.mention_id,
        antecedent_ids=tuple(antecedents),
        sieve_name=sieve,
        confidence_rank=SIEVE_RANK[sieve],
    ))
    state.resolved.add(anaphor.mention_id)
    for ant in antecedents:
        state.uf.union(anaphor.mention_id, ant)
    ctx.record(anaphor.mention_id, sieve, "linked", considered=considered,
               antecedents=antecedents)


def _specified_labels(ent: EntityMention) -> tuple[str, ...]:
    return tuple(sorted(m.label for m in ent.mutations if m.specified))


def sieve_exact_string(ctx: ResolveContext, state: CorefState) -> None:
    """Merge full entity mentions with character-identical surfaces.

    Case-sensitive by design: surface identity means the same characters in
    the same order, nothing looser. Produces chain merges, not links.
    """
    by_surface: dict[str, list[EntityMention]] = {}
    for ent in _full_entities(ctx):
        by_surface.setdefault(ent.surface, []).append(ent)
    for ents in by_surface.values():
        for first, other in zip(ents, ents[1:]):
            state.uf.union(first.id, other.id)


def sieve_shared_grounding(ctx: ResolveContext, state: CorefState) -> None:
    """Merge full entity mentions grounded to the same canonical ID.

    A grounding ID supplied on the mention wins over table lookup. Mentions
    whose spelled-out mutations differ are left apart: N540K-FGFR3 and
    K650E-FGFR3 share a gene but are not the same molecule.
    """
    by_key: dict[tuple, list[EntityMention]] = {}
    for ent in _full_entities(ctx):
        gid = ent.grounding_id or ctx.grounding.ground(ent.surface)
        if gid is None:
            continue
        by_key.setdefault((gid, _specified_labels(ent)), []).append(ent)
    for ents in by_key.values():
        for first, other in zip(ents, ents[1:]):
            state.uf.union(first.id, other.id)


def _same_protein(ent: EntityMention, protein_surface: str, grounding: GroundingTable) -> bool:
    target_gid = grounding.ground(protein_surface)
    if target_gid is not None:
        ent_gid = ent.grounding_id or grounding.ground(ent.surface)
        if ent_gid == target_gid:
            return True
    return protein_surface in _SURFACE_COMPONENTS.split(ent.surface)


def sieve_mutant_match(ctx: ResolveContext, state: CorefState) -> None:
    """Resolve protein-named mutant NPs with unknown mutations.

    "All six FGFR3 mutants" links to every prior FGFR3 mention whose
    mutation is spelled out, one-to-many when the anaphor is plural. An
    explicit numeral is strict: six means six, anything less stays
    unresolved rather than asserting the wrong biology.
    """
    for cand in ctx.candidates:
        if cand.kind != det.MUTANT_NP or cand.mutant_subkind != det.PROTEIN_ONLY:
            continue
        if cand.mention_id in state.resolved:
            ctx.record(cand.mention_id, "mutant_match", "skipped_resolved")
            continue
        protein = cand.mutant_payload or ""

        def mutant_test(ent: EntityMention) -> str | None:
            if not any(m.specified for m in ent.mutations):
                return "excluded_no_specified_mutation"
            if not _same_protein(ent, protein, ctx.grounding):
                return "excluded_protein_mismatch"
            return None

        cons = build_constraints(ctx.index, cand, ctx.schema,
                                 banned=ctx.candidate_ids, antecedent_test=mutant_test)
        considered: list = [] if ctx.trace is not None else None
        result = linear_search(ctx.index, cand, cons, state.uf, trace=considered)
        if result.satisfied:
            _link(ctx, state, cand, result.ids, "mutant_match", considered)
        else:
            ctx.record(cand.mention_id, "mutant_match", "no_match", considered=considered)


def _np_words(ctx: ResolveContext, start: int, end: int, surface: str) -> list[str]:
    tokens = ctx.index.tokens_in(start, end)
    if tokens:
        return [t.surface for t in tokens]
    return surface.split()


def sieve_strict_head(ctx: ResolveContext, state: CorefState) -> None:
    """Link a definite NP to the nearest prior mention containing all its words.

    The head word must appear in the antecedent and every non-stopword of the
    anaphor must too. "The phosphorylated protein" matches "phosphorylated
    ASPP2 protein"; "the activated ASPP2" does not, because "activated" is
    absent. Matching is mention-local and ignores chain members.
    """
    for cand in ctx.candidates:
        if cand.kind != det.CLASS_NP:
            continue
        if cand.mention_id in state.resolved:
            ctx.record(cand.mention_id, "strict_head", "skipped_resolved")
            continue
        words = _np_words(ctx, cand.start, cand.end, cand.surface)
        if len(words) < 2:
            continue
        content = [w.lower() for w in words if not ctx.lexicon.is_stopword(w)]
        if not content:
            continue
        head = content[-1]
        cons = build_constraints(ctx.index, cand, ctx.schema, banned=ctx.candidate_ids)
        considered: list = [] if ctx.trace is not None else None
        linked = False
        pool = [e for e in ctx.index.entities if e.start < cand.start]
        for ent in sorted(pool, key=lambda e: (-e.start, e.id)):
            verdict = verdict_for(ent, cand, cons, state.uf, [])
            if verdict == ACCEPTED:
                ant_words = [w.lower() for w in _np_words(ctx, ent.start, ent.end, ent.surface)]
                if head not in ant_words or not all(w in ant_words for w in content):
                    verdict = "excluded_word_containment"
            if considered is not None:
                considered.append({"id": ent.id, "verdict": verdict})
            if verdict == ACCEPTED:
                _link(ctx, state, cand, [ent.id], "strict_head", considered)
                linked = True
                break
        if not linked:
            ctx.record(cand.mention_id, "strict_head", "no_match", considered=considered)


def sieve_pronominal(ctx: ResolveContext, state: CorefState) -> None:
    """Resolve pronouns with the linear search under event constraints.

    Candidates go left to right, and each resolution immediately extends a
    chain, so a later pronoun in the same event complex cannot reuse an
    earlier pronoun's antecedent: with several anaphors and no better signal,
    assignment falls out left to right.
    """
    for cand in ctx.candidates:
        if cand.kind != det.PRONOUN:
            continue
        if cand.mention_id in state.resolved:
            ctx.record(cand.mention_id, "pronominal", "skipped_resolved")
            continue
        cons = build_constraints(ctx.index, cand, ctx.schema, banned=ctx.candidate_ids)
        considered: list = [] if ctx.trace is not None else None
        result = linear_search(ctx.index, cand, cons, state.uf, trace=considered)
        if result.satisfied:
            _link(ctx, state, cand, result.ids, "pronominal", considered)
        else:
            ctx.record(cand.mention_id, "pronominal", "no_match", considered=considered)


def sieve_class_np(ctx: ResolveContext, state: CorefState) -> None:
    """Resolve class-referential NPs and mutant shorthand routed through them.

    "The protein" searches only for proteins; generic mutant NPs require an
    antecedent carrying some mutation record; mutation-labelled NPs ("the
    K134A mutant") first demand a matching spelled-out mutation and fall
    back to the bare protein when no mention carries the label, which still
    names the right molecule even if not the right variant.
    """
    for cand in ctx.candidates:
        is_class = cand.kind == det.CLASS_NP and cand.target_class is not None
        is_mutant = cand.kind == det.MUTANT_NP and cand.mutant_subkind in (
            det.GENERIC_MUTANT, det.MUTATION_ONLY)
        if not (is_class or is_mutant):
            continue
        if cand.mention_id in state.resolved:
            ctx.record(cand.mention_id, "class_np", "skipped_resolved")
            continue

        passes: list[tuple[str, object]] = []
        if cand.mutant_subkind == det.MUTATION_ONLY:
            label = cand.mutant_payload

            def label_test(ent: EntityMention, _label=label) -> str | None:
                if any(m.specified and m.label == _label for m in ent.mutations):
                    return None
                return "excluded_mutation_label"

            passes.append(("mutation_label", label_test))
            passes.append(("protein_fallback", None))
        elif cand.mutant_subkind == det.GENERIC_MUTANT:

            def any_mutation_test(ent: EntityMention) -> str | None:
                return None if ent.mutations else "excluded_no_mutation"

            passes.append(("any_mutation", any_mutation_test))
        else:
            passes.append(("class", None))

        for pass_name, test in passes:
            cons = build_constraints(ctx.index, cand, ctx.schema,
                                     banned=ctx.candidate_ids, antecedent_test=test)
            considered: list = [] if ctx.trace is not None else None
            result = linear_search(ctx.index, cand, cons, state.uf, trace=considered)
            if result.satisfied:
                _link(ctx, state, cand, result.ids, "class_np", considered)
                break
            ctx.record(cand.mention_id, "class_np", f"no_match_{pass_name}", considered=considered)


def sieve_event_coref(ctx: ResolveContext, state: CorefState) -> None:
    """Link incomplete nominal event anaphors to prior complete events.

    Search is restricted to events of the same type, nearest first, this
    sentence then the previous one. Anaphors naming regulation-type events
    ("the promotion") are never searched: recursion stops one level down.
    """
    for cand in ctx.candidates:
        if cand.kind != det.NOMINAL_EVENT:
            continue
        if cand.mention_id in state.resolved:
            ctx.record(cand.mention_id, "event_coref", "skipped_resolved")
            continue
        target_type = cand.target_class or ""
        if target_type in ctx.schema.regulation_types:
            ctx.record(cand.mention_id, "event_coref", "skipped_regulation")
            continue
        excluded: set[str] = set()
        for event_id, _role in cand.hosts:
            excluded.add(event_id)
            host = ctx.index.by_id[event_id]
            assert isinstance(host, EventMention)
            for arg in host.args:
                if arg.ref != cand.mention_id:
                    excluded.add(arg.ref)
        considered: list = [] if ctx.trace is not None else None
        result = event_antecedent_search(ctx.index, cand, target_type,
                                         frozenset(excluded), state.uf, trace=considered)
        if result.satisfied:
            _link(ctx, state, cand, result.ids, "event_coref", considered)
        else:
            ctx.record(cand.mention_id, "event_coref", "no_match", considered=considered)


def sieve_cleanup(ctx: ResolveContext, state: CorefState
                  ) -> tuple[Document, dict[str, str], dict[str, str]]:
    """Remove every candidate that found no antecedent, then cascade.

    Events lose arguments that referenced removed mentions; an event that is
    no longer schema-complete afterwards is removed too, and removals ripple
    up through regulations. Returns the cleaned document plus removal reasons
    for mentions and events.
    """
    doc = ctx.index.doc
    dropped: dict[str, str] = {}
    for cand in ctx.candidates:
        if cand.mention_id not in state.resolved:
            dropped[cand.mention_id] = "unresolved_anaphor"
            ctx.record(cand.mention_id, "cleanup", "dropped")

    live: dict[str, EventMention] = {ev.id: ev for ev in doc.events if ev.id not in dropped}
    changed = True
    while changed:
        changed = False
        for ev_id in list(live):
            ev = live[ev_id]
            kept_args = tuple(a for a in ev.args if a.ref not in dropped)
            if len(kept_args) == len(ev.args):
                continue
            changed = True
            stripped = replace(ev, args=kept_args)
            if structurally_complete(stripped, ctx.schema):
                live[ev_id] = stripped
            else:
                dropped[ev_id] = "argument_removed"
                del live[ev_id]

    entity_ids = {e.id for e in doc.entities}
    dropped_mentions = {k: v for k, v in dropped.items() if k in entity_ids}
    dropped_events = {k: v for k, v in dropped.items() if k not in entity_ids}

    cleaned = Document(
        doc_id=doc.doc_id,
        text=doc.text,
        sentences=doc.sentences,
        entities=tuple(e for e in doc.entities if e.id not in dropped),
        events=tuple(live[ev.id] for ev in doc.events if ev.id in live),
    )
    return with_completeness(cleaned, ctx.schema), dropped_mentions, dropped_events


RESOLUTION_SIEVES = {
    "exact_string": sieve_exact_string,
    "shared_grounding": sieve_shared_grounding,
    "mutant_match": sieve_mutant_match,
    "strict_head": sieve_strict_head,
    "pronominal": sieve_pronominal,
    "class_np": sieve_class_np,
    "event_coref": sieve_event_coref,
}
