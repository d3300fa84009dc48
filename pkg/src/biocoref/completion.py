"""Event completion: substitute antecedents for anaphors and split n-ary events.

Every surviving event mention is turned into zero or more fully specified
binary-style events. A role holding several fillers, whether conjoined raw
mentions or the antecedents of one plural anaphor, splits the event into one
copy per filler; fillers of a role pair with the other roles' participants,
never with each other. Regulations wrapping a split event are duplicated per
split child. Events whose two participants end up in one coreference chain
are suppressed: nothing reacts with itself here.
"""

from __future__ import annotations

from itertools import product

from .model import CompletedEvent, CorefLink, Document, EventArg
from .schema import ArgSchema
from .unionfind import UnionFind


def assign_multi_anaphors(anaphors: list[str], groups: list[list[str]]
                          ) -> list[tuple[str, list[str] | None]]:
    """Pair an event's anaphors with antecedent groups by text order.

    With no better signal, the first anaphor takes the first group and so on;
    anaphors beyond the available groups stay unresolved.
    """
    return [(a, groups[i] if i < len(groups) else None) for i, a in enumerate(anaphors)]


def complete_events(doc: Document, schema: ArgSchema, links: list[CorefLink],
                    uf: UnionFind, pre_dropped: dict[str, str]
                    ) -> tuple[list[CompletedEvent], dict[str, str]]:
    """Emit the final event set for a cleaned document.

    ``pre_dropped`` holds removal reasons from cleanup (for reporting only;
    the document is already cleaned). Returns the completed events plus the
    events dropped here (still incomplete after substitution, or suppressed
    as self-relations).
    """
    links_by_anaphor = {l.anaphor_id: l for l in links}
    events = {ev.id: ev for ev in doc.events}
    entity_ids = {e.id for e in doc.entities}
    dropped: dict[str, str] = {}
    memo: dict[str, list[CompletedEvent]] = {}

    def complete(ev_id: str) -> list[CompletedEvent]:
        if ev_id in memo:
            return memo[ev_id]
        ev = events.get(ev_id)
        if ev is None:
            memo[ev_id] = []
            return []
        if ev.id in links_by_anaphor:
            # A resolved event anaphor stands for its antecedent event.
            target = links_by_anaphor[ev.id].antecedent_ids[0]
            memo[ev_id] = complete(target)
            return memo[ev_id]
        memo[ev_id] = []

        role_order: list[str] = []
        fillers: dict[str, list[tuple[str, frozenset[str]]]] = {}
        for arg in ev.args:
            if arg.role not in fillers:
                fillers[arg.role] = []
                role_order.append(arg.role)
            if arg.ref in entity_ids:
                link = links_by_anaphor.get(arg.ref)
                if link is None:
                    fillers[arg.role].append((arg.ref, frozenset()))
                else:
                    for ant in link.antecedent_ids:
                        fillers[arg.role].append((ant, frozenset({arg.ref})))
            else:
                link = links_by_anaphor.get(arg.ref)
                base = frozenset({arg.ref}) if link is not None else frozenset()
                for child in complete(arg.ref):
                    fillers[arg.role].append((child.id, base | frozenset(child.provenance)))

        for role, spec in schema.roles_for(ev.event_type).items():
            if len(fillers.get(role, ())) < spec.count:
                dropped[ev.id] = "incomplete_after_substitution"
                return []

        active_roles = [r for r in role_order if fillers[r]]
        combos = list(product(*(fillers[r] for r in active_roles)))
        out: list[CompletedEvent] = []
        suppressed = 0
        for combo in combos:
            roots = [uf.find(fid) for fid, _ in combo]
            if len(set(roots)) < len(roots):
                suppressed += 1
                continue
            provenance: set[str] = set()
            for _, prov in combo:
                provenance.update(prov)
            out.append(CompletedEvent(
                id=ev.id,  # re-numbered below when the event splits
                trigger_start=ev.trigger_start,
                trigger_end=ev.trigger_end,
                event_type=ev.event_type,
                args=tuple(EventArg(role, fid) for role, (fid, _) in zip(active_roles, combo)),
                polarity=ev.polarity,
                derived_from=ev.id,
                provenance=tuple(sorted(provenance)),
            ))
        if not out:
            dropped[ev.id] = "self_relation" if suppressed else "incomplete_after_substitution"
        elif len(out) > 1:
            out = [CompletedEvent(
                id=f"{c.derived_from}.c{i}", trigger_start=c.trigger_start,
                trigger_end=c.trigger_end, event_type=c.event_type, args=c.args,
                polarity=c.polarity, derived_from=c.derived_from, provenance=c.provenance,
            ) for i, c in enumerate(out)]
        memo[ev_id] = out
        return out

    completed: list[CompletedEvent] = []
    for ev in doc.events:
        if ev.id in links_by_anaphor:
            continue  # resolved event anaphors are represented by their antecedents
        completed.extend(complete(ev.id))
    return completed, dropped
