"""Union-find congruence closure over a fixed, subterm-closed term set."""
from __future__ import annotations

from ..logic import App, Term


class CongruenceClosure:
    def __init__(self, terms: tuple[Term, ...]):
        self.terms = terms
        self.index = {t: i for i, t in enumerate(terms)}
        self.parent = list(range(len(terms)))
        self._apps = [
            (i, t.head, tuple(self.index[a] for a in t.args))
            for i, t in enumerate(terms)
            if isinstance(t, App) and t.args
        ]

    def find(self, i: int) -> int:
        root = i
        while self.parent[root] != root:
            root = self.parent[root]
        while self.parent[i] != root:
            self.parent[i], i = root, self.parent[i]
        return root

    def union(self, i: int, j: int) -> bool:
        ri, rj = self.find(i), self.find(j)
        if ri == rj:
            return False
        if rj < ri:
            ri, rj = rj, ri
        self.parent[rj] = ri
        return True

    def close(self) -> None:
        """Merge applications whose heads agree and whose arguments are merged."""
        changed = True
        while changed:
            changed = False
            table: dict[tuple, int] = {}
            for i, head, args in self._apps:
                sig = (head, tuple(self.find(a) for a in args))
                j = table.setdefault(sig, i)
                if j != i and self.union(i, j):
                    changed = True

    def merge_all(self, pairs) -> None:
        for s, t in pairs:
            self.union(self.index[s], self.index[t])
        self.close()

    def same(self, s: Term, t: Term) -> bool:
        return self.find(self.index[s]) == self.find(self.index[t])
