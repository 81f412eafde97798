from typing import Dict, Tuple


class DisjointSubsets:
    """Union-find over the carrier {0..n-1}.

    The representative of a block is always its smallest element, so the
    block labelling read back from `labels` does not depend on merge order.
    """

    def __init__(self, size: int):
        self._parent = list(range(size))

    def rep(self, key: int) -> int:
        root = key
        while self._parent[root] != root:
            root = self._parent[root]
        while self._parent[key] != root:
            self._parent[key], key = root, self._parent[key]
        return root

    def unify(self, key1: int, key2: int) -> Tuple[int, int]:
        """Merge the blocks of both keys; returns the two former representatives,
        equal when nothing changed."""
        rep1 = self.rep(key1)
        rep2 = self.rep(key2)
        if rep1 == rep2:
            return rep1, rep2
        low, high = min(rep1, rep2), max(rep1, rep2)
        self._parent[high] = low
        return low, high

    def labels(self) -> Tuple[int, ...]:
        # restricted growth string: blocks numbered by first appearance
        numbering: Dict[int, int] = {}
        result = []
        for key in range(len(self._parent)):
            rep = self.rep(key)
            if rep not in numbering:
                numbering[rep] = len(numbering)
            result.append(numbering[rep])
        return tuple(result)
