"""Disjoint-set structure used to maintain coreference chains."""

from __future__ import annotations


class UnionFind:
    """Union-find over string mention IDs with path compression.

    IDs not yet seen are implicit singletons; find() registers them.
    """

    def __init__(self) -> None:
        self.parent: dict[str, str] = {}
        self.rank: dict[str, int] = {}

    def find(self, x: str) -> str:
        if x not in self.parent:
            self.parent[x] = x
            self.rank[x] = 0
            return x
        root = x
        while self.parent[root] != root:
            root = self.parent[root]
        while self.parent[x] != root:
            self.parent[x], x = root, self.parent[x]
        return root

    def union(self, x: str, y: str) -> None:
        rx, ry = self.find(x), self.find(y)
        if rx == ry:
            return
        if self.rank[rx] < self.rank[ry]:
            rx, ry = ry, rx
        self.parent[ry] = rx
        if self.rank[rx] == self.rank[ry]:
            self.rank[rx] += 1

    def same(self, x: str, y: str) -> bool:
        return self.find(x) == self.find(y)

    def groups(self) -> dict[str, list[str]]:
        """Map each root to the sorted members of its set (seen IDs only)."""
        out: dict[str, list[str]] = {}
        for member in self.parent:
            out.setdefault(self.find(member), []).append(member)
        for members in out.values():
            members.sort()
        return out
