"""Partitioning a finite set of words into classes."""

from __future__ import annotations

from collections import defaultdict, deque
from collections.abc import Callable, Iterable
from dataclasses import dataclass, field

from .words import Word, length_lex_key


class UnionFind:
    def __init__(self, items):
        self.parent = {x: x for x in items}
        self.size = {x: 1 for x in self.parent}

    def find(self, x):
        root = x
        while self.parent[root] != root:
            root = self.parent[root]
        while self.parent[x] != root:
            self.parent[x], x = root, self.parent[x]
        return root

    def union(self, x, y):
        x, y = self.find(x), self.find(y)
        if x == y:
            return
        if self.size[x] < self.size[y]:
            x, y = y, x
        self.parent[y] = x
        self.size[x] += self.size[y]

    def classes(self) -> dict:
        out = defaultdict(list)
        for x in self.parent:
            out[self.find(x)].append(x)
        return out


def labels_from_key(words: Iterable[Word], key: Callable[[Word], object]) -> dict:
    return {w: key(w) for w in words}


def bfs_labels(words: Iterable[Word], neighbors: Callable[[Word], set]) -> dict:
    """Label each word by the length-lex least member of its connected component.

    ``neighbors`` must be symmetric and must not leave ``words``.
    """
    universe = set(words)
    labels: dict[Word, Word] = {}
    for seed in sorted(universe, key=length_lex_key):
        if seed in labels:
            continue
        labels[seed] = seed
        queue = deque([seed])
        while queue:
            u = queue.popleft()
            for v in neighbors(u):
                if v not in universe:
                    raise AssertionError(f"rewrite {u} -> {v} leaves the enumerated stratum")
                if v not in labels:
                    labels[v] = seed
                    queue.append(v)
    return labels


def union_labels(words: Iterable[Word], keys: Iterable[Callable[[Word], object]]) -> dict:
    """Classes of the transitive closure of "some key agrees"."""
    words = list(words)
    uf = UnionFind(words)
    for key in keys:
        first: dict = {}
        for w in words:
            k = key(w)
            if k in first:
                uf.union(first[k], w)
            else:
                first[k] = w
    reps = {}
    for w in sorted(words, key=length_lex_key):
        reps.setdefault(uf.find(w), w)
    return {w: reps[uf.find(w)] for w in words}


def count_classes(labels: dict) -> int:
    return len(set(labels.values()))


@dataclass
class PartitionComparison:
    pairs_checked: int = 0
    first_only: int = 0
    second_only: int = 0
    examples: list = field(default_factory=list)

    @property
    def violations(self) -> int:
        return self.first_only + self.second_only


def _pairs(n: int) -> int:
    return n * (n - 1) // 2


def compare_partitions(words, first: dict, second: dict, limit: int = 20) -> PartitionComparison:
    """Count unordered pairs on which two partitions of ``words`` disagree.

    ``first_only`` counts pairs in one class of ``first`` but split by
    ``second``; ``second_only`` the reverse. Up to ``limit`` disagreeing
    pairs are kept as examples, tagged with which side merged them.
    """
    words = sorted(words, key=length_lex_key)
    cmp = PartitionComparison(pairs_checked=_pairs(len(words)))
    by_first = defaultdict(list)
    by_second = defaultdict(list)
    cells = defaultdict(int)
    for w in words:
        by_first[first[w]].append(w)
        by_second[second[w]].append(w)
        cells[first[w], second[w]] += 1
    joint = sum(_pairs(c) for c in cells.values())
    cmp.first_only = sum(_pairs(len(g)) for g in by_first.values()) - joint
    cmp.second_only = sum(_pairs(len(g)) for g in by_second.values()) - joint
    for tag, groups, other in (("first", by_first, second), ("second", by_second, first)):
        for group in groups.values():
            if len({other[u] for u in group}) < 2:
                continue
            for i, u in enumerate(group):
                for v in group[i + 1 :]:
                    if len(cmp.examples) >= limit:
                        return cmp
                    if other[u] != other[v]:
                        cmp.examples.append((tag, u, v))
    return cmp
