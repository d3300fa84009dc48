"""Event argument schemas: per-type role inventories and completeness checks.

The event type inventory lives in a JSON config file rather than code so a
deployment can rename or extend reaction types without touching the resolver.
A role whose class list contains the pseudo-class ``Event`` accepts event
mentions as fillers; any type with such a role is treated as a regulation,
which caps anaphoric event search at one level of nesting.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, replace
from importlib.resources import files

from .model import Document, EventMention, MalformedInput, SchemaViolation

EVENT_PSEUDO_CLASS = "Event"


class SchemaMissing(KeyError):
    """Raised when an event type has no schema row."""


@dataclass(frozen=True, slots=True)
class RoleSpec:
    classes: frozenset[str]
    count: int  # required minimum; 0 marks an optional role

    @property
    def allows_events(self) -> bool:
        return EVENT_PSEUDO_CLASS in self.classes


@dataclass(frozen=True, slots=True)
class ArgSchema:
    types: dict[str, dict[str, RoleSpec]]

    @property
    def event_types(self) -> frozenset[str]:
        return frozenset(self.types)

    @property
    def regulation_types(self) -> frozenset[str]:
        return frozenset(
            t for t, roles in self.types.items()
            if any(spec.allows_events for spec in roles.values())
        )

    def roles_for(self, event_type: str) -> dict[str, RoleSpec]:
        try:
            return self.types[event_type]
        except KeyError:
            raise SchemaMissing(event_type) from None

    def role_spec(self, event_type: str, role: str) -> RoleSpec:
        roles = self.roles_for(event_type)
        try:
            return roles[role]
        except KeyError:
            raise SchemaMissing(f"{event_type}.{role}") from None


def load_schema(data: bytes | str) -> ArgSchema:
    if isinstance(data, bytes):
        data = data.decode("utf-8")
    try:
        raw = json.loads(data)
    except json.JSONDecodeError as exc:
        raise MalformedInput(f"schema config: {exc}") from None
    if not isinstance(raw, dict):
        raise SchemaViolation("schema config: top level must be an object")
    types: dict[str, dict[str, RoleSpec]] = {}
    for event_type, roles in raw.items():
        if not isinstance(roles, dict) or not roles:
            raise SchemaViolation(f"schema config: {event_type} needs at least one role")
        specs: dict[str, RoleSpec] = {}
        for role, spec in roles.items():
            classes = spec.get("classes")
            count = spec.get("count")
            if not isinstance(classes, list) or not isinstance(count, int) or count < 0:
                raise SchemaViolation(f"schema config: bad role spec {event_type}.{role}")
            specs[role] = RoleSpec(frozenset(classes), count)
        types[event_type] = specs
    return ArgSchema(types)


def load_schema_file(path) -> ArgSchema:
    with open(path, "rb") as fh:
        return load_schema(fh.read())


def default_schema() -> ArgSchema:
    return load_schema(files("biocoref").joinpath("data/schema.json").read_bytes())


def structurally_complete(event: EventMention, schema: ArgSchema) -> bool:
    """Every required role is filled at least ``count`` times."""
    filled: dict[str, int] = {}
    for arg in event.args:
        filled[arg.role] = filled.get(arg.role, 0) + 1
    return all(filled.get(role, 0) >= spec.count
               for role, spec in schema.roles_for(event.event_type).items())


def completeness_map(doc: Document, schema: ArgSchema,
                     dropped: frozenset[str] = frozenset()) -> dict[str, bool]:
    """Completeness per event, recursing through event-valued arguments.

    An event is complete only if its own arity is satisfied and every event
    it references is itself complete (and not dropped).
    """
    all_event_ids = {ev.id for ev in doc.events}
    events = {ev.id: ev for ev in doc.events if ev.id not in dropped}
    memo: dict[str, bool] = {}

    def check(ev_id: str) -> bool:
        if ev_id in memo:
            return memo[ev_id]
        ev = events.get(ev_id)
        if ev is None:
            memo[ev_id] = False
            return False
        memo[ev_id] = False  # cycle guard; load validation already rejects cycles
        ok = structurally_complete(ev, schema)
        if ok:
            for arg in ev.args:
                if arg.ref in all_event_ids and not check(arg.ref):
                    ok = False
                    break
        memo[ev_id] = ok
        return ok

    return {ev_id: check(ev_id) for ev_id in events}


def with_completeness(doc: Document, schema: ArgSchema) -> Document:
    """Return a copy of ``doc`` whose events carry recomputed complete flags."""
    complete = completeness_map(doc, schema)
    events = tuple(replace(ev, complete=complete.get(ev.id, False)) for ev in doc.events)
    return Document(doc.doc_id, doc.text, doc.sentences, doc.entities, events)
