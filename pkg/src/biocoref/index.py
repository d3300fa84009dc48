"""Per-document lookup structures shared by detection and the sieves."""

from __future__ import annotations

from bisect import bisect_right

from .model import Document, EntityMention, EventMention, Token


class DocIndex:
    """Read-only views over one document: sorted mentions, sentence lookup."""

    def __init__(self, doc: Document) -> None:
        self.doc = doc
        self.entities = sorted(doc.entities, key=lambda e: (e.start, e.end, e.id))
        self.events = sorted(doc.events, key=lambda ev: (ev.trigger_start, ev.trigger_end, ev.id))
        self.by_id: dict[str, EntityMention | EventMention] = {}
        for ent in doc.entities:
            self.by_id[ent.id] = ent
        for ev in doc.events:
            self.by_id[ev.id] = ev
        self._sent_starts = [s.start for s in doc.sentences]
        self.entities_by_sentence: dict[int, list[EntityMention]] = {}
        for ent in self.entities:
            self.entities_by_sentence.setdefault(self.sentence_index_at(ent.start), []).append(ent)
        self.events_by_sentence: dict[int, list[EventMention]] = {}
        for ev in self.events:
            self.events_by_sentence.setdefault(self.sentence_index_at(ev.trigger_start), []).append(ev)

    def sentence_index_at(self, pos: int) -> int:
        """Index of the sentence containing character position ``pos``, or -1."""
        i = bisect_right(self._sent_starts, pos) - 1
        if i >= 0 and pos < self.doc.sentences[i].end:
            return i
        return -1

    def tokens_in(self, start: int, end: int) -> list[Token]:
        """Tokens overlapping the span [start, end)."""
        si = self.sentence_index_at(start)
        if si < 0:
            return []
        return [t for t in self.doc.sentences[si].tokens if t.start < end and t.end > start]

    def token_before(self, pos: int) -> Token | None:
        """Last token ending at or before ``pos`` within the same sentence."""
        si = self.sentence_index_at(pos)
        if si < 0:
            return None
        best = None
        for t in self.doc.sentences[si].tokens:
            if t.end <= pos:
                best = t
            else:
                break
        return best

    def mention_start(self, mention_id: str) -> int:
        m = self.by_id[mention_id]
        return m.start if isinstance(m, EntityMention) else m.trigger_start

    def mention_end(self, mention_id: str) -> int:
        m = self.by_id[mention_id]
        return m.end if isinstance(m, EntityMention) else m.trigger_end
