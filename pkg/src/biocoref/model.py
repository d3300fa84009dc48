"""Document and mention data model for standoff-annotated biomedical text.

All offsets are character offsets into the Unicode document text, never byte
offsets; multi-byte characters such as Greek letters count as one position.
Documents are immutable after construction and safe to share across threads.
"""

from __future__ import annotations

import re
from dataclasses import dataclass

ENTITY_CLASSES = frozenset({
    "Protein",
    "Gene",
    "GeneOrGeneProduct",
    "Family",
    "SimpleChemical",
    "CellularComponent",
    "Site",
})

MUTATION_KINDS = frozenset({
    "PointSubstitution",
    "Deletion",
    "Truncation",
    "Insertion",
    "UnknownMutation",
})

POLARITIES = frozenset({"Positive", "Negative", "Unspecified"})

POS_HINTS = frozenset({"DET", "PRON", "NOUN", "OTHER"})

# Point substitutions are written as reference residue, position, new residue.
POINT_SUBSTITUTION_RE = re.compile(r"^[A-Z]\d+[A-Z]$")


class MalformedInput(ValueError):
    """Raised when input bytes are not parseable as a document at all."""


class SchemaViolation(ValueError):
    """Raised when parseable input violates the document schema.

    The message always names the offending ID or character offset.
    """


@dataclass(frozen=True, slots=True)
class Token:
    start: int
    end: int
    surface: str
    pos_hint: str | None = None


@dataclass(frozen=True, slots=True)
class Sentence:
    index: int
    start: int
    end: int
    tokens: tuple[Token, ...] = ()


@dataclass(frozen=True, slots=True)
class MutationRecord:
    kind: str
    label: str | None = None

    @property
    def specified(self) -> bool:
        """True when the mutation identity is spelled out (a label exists)."""
        return self.label is not None


@dataclass(frozen=True, slots=True)
class EntityMention:
    id: str
    start: int
    end: int
    label: str
    surface: str
    grounding_id: str | None = None
    mutations: tuple[MutationRecord, ...] = ()


@dataclass(frozen=True, slots=True)
class EventArg:
    role: str
    ref: str


@dataclass(frozen=True, slots=True)
class EventMention:
    id: str
    trigger_start: int
    trigger_end: int
    event_type: str
    args: tuple[EventArg, ...] = ()
    polarity: str = "Unspecified"
    complete: bool = False


@dataclass(frozen=True, slots=True)
class CorefLink:
    """One anaphor resolved to an ordered, non-empty list of antecedents.

    Every antecedent starts strictly before the anaphor: the resolver never
    links forward in the text.
    """

    anaphor_id: str
    antecedent_ids: tuple[str, ...]
    sieve_name: str
    confidence_rank: int


@dataclass(frozen=True, slots=True)
class CompletedEvent:
    """A fully specified event emitted after substitution and splitting."""

    id: str
    trigger_start: int
    trigger_end: int
    event_type: str
    args: tuple[EventArg, ...]
    polarity: str
    derived_from: str
    provenance: tuple[str, ...] = ()


@dataclass(frozen=True, slots=True)
class Document:
    doc_id: str
    text: str
    sentences: tuple[Sentence, ...] = ()
    entities: tuple[EntityMention, ...] = ()
    events: tuple[EventMention, ...] = ()


def mention_start(doc: Document, mention_id: str, _cache: dict | None = None) -> int:
    """Earliest character offset of a mention (entity start or trigger start)."""
    for ent in doc.entities:
        if ent.id == mention_id:
            return ent.start
    for ev in doc.events:
        if ev.id == mention_id:
            return ev.trigger_start
    raise KeyError(mention_id)


def validate_document(doc: Document, entity_classes: frozenset[str] = ENTITY_CLASSES,
                      event_types: frozenset[str] | None = None) -> None:
    """Check every document invariant, raising SchemaViolation on the first failure.

    ``event_types`` defaults to accepting any type; the standoff loader passes
    the configured inventory so unknown types are rejected at the boundary.
    """
    text_len = len(doc.text)
    prev_end = 0
    for i, sent in enumerate(doc.sentences):
        if sent.index != i:
            raise SchemaViolation(f"sentence {sent.index}: expected index {i}")
        if sent.start < prev_end or sent.end > text_len or sent.start >= sent.end:
            raise SchemaViolation(f"sentence {sent.index}: bad span [{sent.start},{sent.end})")
        prev_end = sent.end
        tok_end = sent.start
        for tok in sent.tokens:
            if tok.start < tok_end or tok.end > sent.end or tok.start >= tok.end:
                raise SchemaViolation(f"sentence {sent.index}: bad token span [{tok.start},{tok.end})")
            if tok.surface != doc.text[tok.start:tok.end]:
                raise SchemaViolation(f"token at {tok.start}: surface mismatch")
            if tok.pos_hint is not None and tok.pos_hint not in POS_HINTS:
                raise SchemaViolation(f"token at {tok.start}: unknown pos hint {tok.pos_hint!r}")
            tok_end = tok.end

    seen: set[str] = set()
    for ent in doc.entities:
        if ent.id in seen:
            raise SchemaViolation(f"duplicate mention id {ent.id}")
        seen.add(ent.id)
        if not (0 <= ent.start < ent.end <= text_len):
            raise SchemaViolation(f"{ent.id}: span [{ent.start},{ent.end}) out of bounds")
        if ent.label not in entity_classes:
            raise SchemaViolation(f"{ent.id}: unknown entity class {ent.label!r}")
        if ent.surface != doc.text[ent.start:ent.end]:
            raise SchemaViolation(f"{ent.id}: surface does not match covered text")
        if not _covered_by_sentence(doc, ent.start, ent.end):
            raise SchemaViolation(f"{ent.id}: span not covered by any sentence")
        for mut in ent.mutations:
            if mut.kind not in MUTATION_KINDS:
                raise SchemaViolation(f"{ent.id}: unknown mutation kind {mut.kind!r}")
            if mut.kind == "PointSubstitution":
                if mut.label is None or not POINT_SUBSTITUTION_RE.match(mut.label):
                    raise SchemaViolation(f"{ent.id}: point substitution needs a label like S34A")

    event_ids = set()
    for ev in doc.events:
        if ev.id in seen or ev.id in event_ids:
            raise SchemaViolation(f"duplicate mention id {ev.id}")
        event_ids.add(ev.id)
        if not (0 <= ev.trigger_start < ev.trigger_end <= text_len):
            raise SchemaViolation(f"{ev.id}: trigger span out of bounds")
        if not _covered_by_sentence(doc, ev.trigger_start, ev.trigger_end):
            raise SchemaViolation(f"{ev.id}: trigger not covered by any sentence")
        if event_types is not None and ev.event_type not in event_types:
            raise SchemaViolation(f"{ev.id}: unknown event type {ev.event_type!r}")
        if ev.polarity not in POLARITIES:
            raise SchemaViolation(f"{ev.id}: unknown polarity {ev.polarity!r}")

    known = seen | event_ids
    for ev in doc.events:
        for arg in ev.args:
            if arg.ref not in known:
                raise SchemaViolation(f"{arg.ref}")

    _reject_event_cycles(doc, event_ids)


def _covered_by_sentence(doc: Document, start: int, end: int) -> bool:
    return any(s.start <= start and end <= s.end for s in doc.sentences)


def _reject_event_cycles(doc: Document, event_ids: set[str]) -> None:
    children = {ev.id: [a.ref for a in ev.args if a.ref in event_ids] for ev in doc.events}
    state: dict[str, int] = {}

    def visit(node: str, trail: list[str]) -> None:
        mark = state.get(node)
        if mark == 2:
            return
        if mark == 1:
            raise SchemaViolation(f"{node}: event reference cycle via {'->'.join(trail)}")
        state[node] = 1
        for child in children[node]:
            visit(child, trail + [child])
        state[node] = 2

    for ev_id in children:
        visit(ev_id, [ev_id])
