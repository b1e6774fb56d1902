"""Incremental max-flow on the transport network between two atom lists.

The network is source -> left atom (capacity = multiplicity) -> right atom
(unbounded, only for admitted pairs) -> sink (capacity = multiplicity).
Admitting more pairs only enlarges the residual graph, so the current flow
stays valid and augmentation resumes from it.
"""

from __future__ import annotations

from collections import deque
from typing import Sequence


class TransportFlow:
    def __init__(self, left: Sequence[int], right: Sequence[int]):
        self.n_left = len(left)
        self.n_right = len(right)
        n = self.n_left + self.n_right + 2
        self.source, self.sink = 0, n - 1
        self._big = sum(left) + sum(right) + 1
        self.cap = [dict() for _ in range(n)]
        for i, w in enumerate(left):
            self._arc(self.source, 1 + i, w)
        for j, w in enumerate(right):
            self._arc(1 + self.n_left + j, self.sink, w)
        self.value = 0
        self._admitted = set()

    def _arc(self, u: int, v: int, c: int) -> None:
        self.cap[u][v] = self.cap[u].get(v, 0) + c
        self.cap[v].setdefault(u, 0)

    def admit(self, i: int, j: int) -> None:
        """Open the pair (left i, right j); idempotent."""
        if (i, j) not in self._admitted:
            self._admitted.add((i, j))
            self._arc(1 + i, 1 + self.n_left + j, self._big)

    def augment(self) -> int:
        """Push flow until no augmenting path remains; return the total value."""
        while True:
            parent = {self.source: None}
            queue = deque([self.source])
            while queue and self.sink not in parent:
                u = queue.popleft()
                for v, c in self.cap[u].items():
                    if c > 0 and v not in parent:
                        parent[v] = u
                        queue.append(v)
            if self.sink not in parent:
                return self.value
            bottleneck = None
            v = self.sink
            while parent[v] is not None:
                u = parent[v]
                c = self.cap[u][v]
                bottleneck = c if bottleneck is None else min(bottleneck, c)
                v = u
            v = self.sink
            while parent[v] is not None:
                u = parent[v]
                self.cap[u][v] -= bottleneck
                self.cap[v][u] += bottleneck
                v = u
            self.value += bottleneck
