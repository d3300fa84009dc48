"""Reading and writing the standoff JSON interchange format.

Input schema (one document per file, or one per line in an NDJSON stream):

    { "doc_id": str, "text": str,
      "sentences": [ {"index": int, "start": int, "end": int,
                      "tokens": [{"start": int, "end": int, "pos": str?}]} ],
      "entities": [ {"id": str, "start": int, "end": int, "label": str,
                     "grounding": str?, "mutations": [{"kind": str, "label": str?}]} ],
      "events":   [ {"id": str, "trigger_start": int, "trigger_end": int,
                     "type": str, "polarity": str?,
                     "args": [{"role": str, "ref": str}]} ] }

Result files add "links" and "completed_events". Serialization is canonical:
the same inputs always produce byte-identical output.
"""

from __future__ import annotations

import json
from typing import Any

from .model import (
    CompletedEvent,
    CorefLink,
    Document,
    EntityMention,
    EventArg,
    EventMention,
    MalformedInput,
    MutationRecord,
    SchemaViolation,
    Sentence,
    Token,
    mention_start,
    validate_document,
)
from .schema import ArgSchema, default_schema, with_completeness

SIEVE_RANKS = {
    "exact_string": 1,
    "shared_grounding": 2,
    "mutant_match": 3,
    "strict_head": 4,
    "pronominal": 5,
    "class_np": 6,
    "event_coref": 7,
    "cleanup": 8,
}


def _require(obj: dict, key: str, where: str) -> Any:
    if not isinstance(obj, dict) or key not in obj:
        raise SchemaViolation(f"{where}: missing field {key!r}")
    return obj[key]


def _require_int(obj: dict, key: str, where: str) -> int:
    value = _require(obj, key, where)
    if not isinstance(value, int) or isinstance(value, bool):
        raise SchemaViolation(f"{where}: field {key!r} must be an integer")
    return value


def _require_str(obj: dict, key: str, where: str) -> str:
    value = _require(obj, key, where)
    if not isinstance(value, str):
        raise SchemaViolation(f"{where}: field {key!r} must be a string")
    return value


def load_document(data: bytes | str, schema: ArgSchema | None = None) -> Document:
    """Parse one standoff JSON document and validate every invariant.

    Loading is pure: the same bytes always yield the same Document. Event
    completeness is computed against ``schema`` (the bundled default when
    omitted), so unknown event types are rejected here.
    """
    if isinstance(data, bytes):
        try:
            data = data.decode("utf-8")
        except UnicodeDecodeError as exc:
            raise MalformedInput(str(exc)) from None
    try:
        raw = json.loads(data)
    except json.JSONDecodeError as exc:
        raise MalformedInput(str(exc)) from None
    if not isinstance(raw, dict):
        raise MalformedInput("document must be a JSON object")
    return document_from_dict(raw, schema=schema)


def document_from_dict(raw: dict, schema: ArgSchema | None = None) -> Document:
    if schema is None:
        schema = default_schema()
    doc_id = _require_str(raw, "doc_id", "document")
    text = _require_str(raw, "text", doc_id)

    sentences = []
    for s in _require(raw, "sentences", doc_id):
        tokens = tuple(
            Token(
                start=_require_int(t, "start", f"{doc_id} token"),
                end=_require_int(t, "end", f"{doc_id} token"),
                surface=text[t["start"]:t["end"]],
                pos_hint=t.get("pos"),
            )
            for t in s.get("tokens", ())
        )
        sentences.append(Sentence(
            index=_require_int(s, "index", f"{doc_id} sentence"),
            start=_require_int(s, "start", f"{doc_id} sentence"),
            end=_require_int(s, "end", f"{doc_id} sentence"),
            tokens=tokens,
        ))

    entities = []
    for e in _require(raw, "entities", doc_id):
        ent_id = _require_str(e, "id", f"{doc_id} entity")
        start = _require_int(e, "start", ent_id)
        end = _require_int(e, "end", ent_id)
        mutations = tuple(
            MutationRecord(kind=_require_str(m, "kind", ent_id), label=m.get("label"))
            for m in e.get("mutations", ())
        )
        entities.append(EntityMention(
            id=ent_id,
            start=start,
            end=end,
            label=_require_str(e, "label", ent_id),
            surface=text[start:end] if 0 <= start <= end <= len(text) else "",
            grounding_id=e.get("grounding"),
            mutations=mutations,
        ))

    events = []
    for ev in _require(raw, "events", doc_id):
        ev_id = _require_str(ev, "id", f"{doc_id} event")
        args = tuple(
            EventArg(role=_require_str(a, "role", ev_id), ref=_require_str(a, "ref", ev_id))
            for a in ev.get("args", ())
        )
        events.append(EventMention(
            id=ev_id,
            trigger_start=_require_int(ev, "trigger_start", ev_id),
            trigger_end=_require_int(ev, "trigger_end", ev_id),
            event_type=_require_str(ev, "type", ev_id),
            args=args,
            polarity=ev.get("polarity", "Unspecified"),
        ))

    doc = Document(
        doc_id=doc_id,
        text=text,
        sentences=tuple(sentences),
        entities=tuple(entities),
        events=tuple(events),
    )
    validate_document(doc, event_types=schema.event_types)

    # Validate argument roles against the schema so junk roles fail loudly.
    for ev in doc.events:
        roles = schema.roles_for(ev.event_type)
        for arg in ev.args:
            if arg.role not in roles:
                raise SchemaViolation(f"{ev.id}: role {arg.role!r} not in schema for {ev.event_type}")

    return with_completeness(doc, schema)


def _sentence_dict(sent: Sentence) -> dict:
    tokens = []
    for tok in sent.tokens:
        td: dict[str, Any] = {"start": tok.start, "end": tok.end}
        if tok.pos_hint is not None:
            td["pos"] = tok.pos_hint
        tokens.append(td)
    return {"index": sent.index, "start": sent.start, "end": sent.end, "tokens": tokens}


def _entity_dict(ent: EntityMention) -> dict:
    d: dict[str, Any] = {"id": ent.id, "start": ent.start, "end": ent.end, "label": ent.label}
    if ent.grounding_id is not None:
        d["grounding"] = ent.grounding_id
    if ent.mutations:
        muts = []
        for m in ent.mutations:
            md: dict[str, Any] = {"kind": m.kind}
            if m.label is not None:
                md["label"] = m.label
            muts.append(md)
        d["mutations"] = muts
    return d


def _event_dict(ev: EventMention | CompletedEvent) -> dict:
    d: dict[str, Any] = {
        "id": ev.id,
        "trigger_start": ev.trigger_start,
        "trigger_end": ev.trigger_end,
        "type": ev.event_type,
    }
    if ev.polarity != "Unspecified":
        d["polarity"] = ev.polarity
    d["args"] = [{"role": a.role, "ref": a.ref} for a in ev.args]
    if isinstance(ev, CompletedEvent):
        d["derived_from"] = ev.derived_from
        d["provenance"] = list(ev.provenance)
    return d


def document_to_dict(doc: Document) -> dict:
    return {
        "doc_id": doc.doc_id,
        "text": doc.text,
        "sentences": [_sentence_dict(s) for s in doc.sentences],
        "entities": [_entity_dict(e) for e in doc.entities],
        "events": [_event_dict(ev) for ev in doc.events],
    }


def save_result(doc: Document, links: tuple[CorefLink, ...] | list = (),
                completed: tuple[CompletedEvent, ...] | list = (),
                chains: list[list[str]] | None = None,
                trace: list | None = None) -> bytes:
    """Serialize a resolved document; rejects links or events that violate
    their invariants against ``doc``. Output is deterministic byte-for-byte.
    """
    known = {e.id for e in doc.entities} | {ev.id for ev in doc.events}
    completed_ids = {c.id for c in completed}
    for link in links:
        if not link.antecedent_ids:
            raise SchemaViolation(f"link {link.anaphor_id}: empty antecedent list")
        if link.anaphor_id in link.antecedent_ids:
            raise SchemaViolation(f"link {link.anaphor_id}: anaphor cannot be its own antecedent")
        if link.anaphor_id not in known:
            raise SchemaViolation(f"link anaphor {link.anaphor_id} not in document")
        a_start = mention_start(doc, link.anaphor_id)
        for ant in link.antecedent_ids:
            if ant not in known:
                raise SchemaViolation(f"link antecedent {ant} not in document")
            if mention_start(doc, ant) >= a_start:
                raise SchemaViolation(f"link {link.anaphor_id}: antecedent {ant} does not precede anaphor")
    for ev in completed:
        if ev.derived_from not in known:
            raise SchemaViolation(f"completed event {ev.id}: unknown source {ev.derived_from}")
        for arg in ev.args:
            if arg.ref not in known and arg.ref not in completed_ids:
                raise SchemaViolation(f"completed event {ev.id}: dangling ref {arg.ref}")

    out = document_to_dict(doc)
    out["links"] = [
        {"anaphor": l.anaphor_id, "antecedents": list(l.antecedent_ids), "sieve": l.sieve_name}
        for l in links
    ]
    out["completed_events"] = [_event_dict(c) for c in completed]
    if chains is not None:
        out["chains"] = chains
    if trace is not None:
        out["trace"] = trace
    return (json.dumps(out, ensure_ascii=False, indent=2) + "\n").encode("utf-8")


def load_result(data: bytes | str, schema: ArgSchema | None = None
                ) -> tuple[Document, tuple[CorefLink, ...], tuple[CompletedEvent, ...]]:
    """Inverse of save_result; ignores provenance extras it does not model."""
    if isinstance(data, bytes):
        data = data.decode("utf-8")
    try:
        raw = json.loads(data)
    except json.JSONDecodeError as exc:
        raise MalformedInput(str(exc)) from None
    doc = document_from_dict(raw, schema=schema)
    links = tuple(
        CorefLink(
            anaphor_id=l["anaphor"],
            antecedent_ids=tuple(l["antecedents"]),
            sieve_name=l["sieve"],
            confidence_rank=SIEVE_RANKS.get(l["sieve"], 0),
        )
        for l in raw.get("links", ())
    )
    completed = tuple(
        CompletedEvent(
            id=c["id"],
            trigger_start=c["trigger_start"],
            trigger_end=c["trigger_end"],
            event_type=c["type"],
            args=tuple(EventArg(a["role"], a["ref"]) for a in c.get("args", ())),
            polarity=c.get("polarity", "Unspecified"),
            derived_from=c["derived_from"],
            provenance=tuple(c.get("provenance", ())),
        )
        for c in raw.get("completed_events", ())
    )
    return doc, links, completed
