"""Generic finite poset and lattice machinery.

Elements are opaque hashable keys; the engine never inspects their
structure.  The order is kept as a dense boolean matrix, cover relations
as an adjacency list (the transitive reduction).
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from functools import cached_property
from typing import Callable, Hashable, Iterable, Iterator, Sequence

import numpy as np


class PosetError(ValueError):
    """Invalid order data (non-poset oracle, unbounded poset, ...)."""


@dataclass
class LatticeCheck:
    """Outcome of the lattice test; meet/join tables on success, a
    witness pair without unique meet or join otherwise."""

    is_lattice: bool
    meet: np.ndarray | None = None
    join: np.ndarray | None = None
    witness: tuple[Hashable, Hashable] | None = None
    reason: str = ""


class FinitePoset:
    def __init__(self, keys: Sequence[Hashable], leq: np.ndarray,
                 covers: list[tuple[int, int]]):
        self.keys = tuple(keys)
        self.leq = leq
        self.covers = covers
        self._index = {k: i for i, k in enumerate(self.keys)}
        if len(self._index) != len(self.keys):
            raise PosetError("duplicate element keys")

    # -- construction ---------------------------------------------------

    @classmethod
    def from_order_oracle(cls, keys: Sequence[Hashable],
                          leq_fn: Callable[[Hashable, Hashable], bool]) -> "FinitePoset":
        keys = tuple(keys)
        n = len(keys)
        leq = np.zeros((n, n), dtype=bool)
        for i, a in enumerate(keys):
            for j, b in enumerate(keys):
                leq[i, j] = leq_fn(a, b)
        cls._check_partial_order(keys, leq)
        return cls(keys, leq, _transitive_reduction(leq))

    @classmethod
    def from_leq_matrix(cls, keys: Sequence[Hashable], leq: np.ndarray) -> "FinitePoset":
        cls._check_partial_order(tuple(keys), leq)
        return cls(keys, leq, _transitive_reduction(leq))

    @classmethod
    def from_covers(cls, keys: Sequence[Hashable],
                    cover_pairs: Iterable[tuple[int, int]],
                    validate: bool | None = None) -> "FinitePoset":
        """Build from cover index pairs (i, j) meaning key[i] is covered
        by key[j]; the order is the reflexive-transitive closure.

        validate=True additionally recomputes the transitive reduction
        and insists the given covers match (defaults to on for posets of
        at most 2000 elements, where the cubic check is cheap).
        """
        keys = tuple(keys)
        n = len(keys)
        covers = sorted(set((int(i), int(j)) for i, j in cover_pairs))
        for i, j in covers:
            if i == j or not (0 <= i < n and 0 <= j < n):
                raise PosetError(f"bad cover pair ({i}, {j})")
        up: list[list[int]] = [[] for _ in range(n)]
        indeg_down = [0] * n
        for i, j in covers:
            up[i].append(j)
            indeg_down[j] += 1
        order = _topological_order(n, up, indeg_down)
        leq = np.zeros((n, n), dtype=bool)
        for v in reversed(order):
            leq[v, v] = True
            for w in up[v]:
                leq[v] |= leq[w]
        if validate is None:
            validate = n <= 2000
        if validate:
            red = _transitive_reduction(leq)
            if sorted(red) != covers:
                raise PosetError("given covers are not the transitive reduction")
        return cls(keys, leq, covers)

    @staticmethod
    def _check_partial_order(keys: tuple, leq: np.ndarray) -> None:
        n = len(keys)
        if not np.all(np.diag(leq)):
            i = int(np.flatnonzero(~np.diag(leq))[0])
            raise PosetError(f"not reflexive at {keys[i]!r}")
        sym = leq & leq.T & ~np.eye(n, dtype=bool)
        if sym.any():
            i, j = map(int, np.argwhere(sym)[0])
            raise PosetError(f"antisymmetry fails on ({keys[i]!r}, {keys[j]!r})")
        closed = leq.astype(np.uint8) @ leq.astype(np.uint8) > 0
        bad = closed & ~leq
        if bad.any():
            i, j = map(int, np.argwhere(bad)[0])
            k = int(np.flatnonzero(leq[i] & leq[:, j])[0])
            raise PosetError(
                f"transitivity fails: {keys[i]!r} <= {keys[k]!r} <= {keys[j]!r} "
                f"but not {keys[i]!r} <= {keys[j]!r}")

    # -- basic structure -------------------------------------------------

    def __len__(self) -> int:
        return len(self.keys)

    def index(self, key: Hashable) -> int:
        return self._index[key]

    @cached_property
    def upper_covers(self) -> list[list[int]]:
        out: list[list[int]] = [[] for _ in self.keys]
        for i, j in self.covers:
            out[i].append(j)
        for lst in out:
            lst.sort()
        return out

    @cached_property
    def lower_covers(self) -> list[list[int]]:
        out: list[list[int]] = [[] for _ in self.keys]
        for i, j in self.covers:
            out[j].append(i)
        for lst in out:
            lst.sort()
        return out

    @cached_property
    def bottom(self) -> int | None:
        mins = np.flatnonzero(self.leq.all(axis=1))
        return int(mins[0]) if len(mins) == 1 else None

    @cached_property
    def top(self) -> int | None:
        maxs = np.flatnonzero(self.leq.all(axis=0))
        return int(maxs[0]) if len(maxs) == 1 else None

    def _require_bounded(self) -> tuple[int, int]:
        if self.bottom is None or self.top is None:
            raise PosetError("poset is not bounded")
        return self.bottom, self.top

    @cached_property
    def height(self) -> np.ndarray:
        """Longest-chain length from a minimal element, per element."""
        h = np.zeros(len(self.keys), dtype=np.int64)
        for v in self._topo:
            for w in self.upper_covers[v]:
                h[w] = max(h[w], h[v] + 1)
        return h

    @cached_property
    def _topo(self) -> list[int]:
        up = self.upper_covers
        indeg = [len(self.lower_covers[v]) for v in range(len(self.keys))]
        return _topological_order(len(self.keys), up, indeg)

    # -- chains ----------------------------------------------------------

    def maximal_chains(self) -> list[tuple[int, ...]]:
        """All bottom-to-top saturated chains as index tuples, emitted in
        lexicographic order of element indices."""
        bot, top = self._require_bounded()
        out: list[tuple[int, ...]] = []
        stack = [bot]

        def dfs(v: int) -> None:
            if v == top:
                out.append(tuple(stack))
                return
            for w in self.upper_covers[v]:
                stack.append(w)
                dfs(w)
                stack.pop()

        dfs(bot)
        return out

    def iter_maximal_chains(self) -> Iterator[tuple[int, ...]]:
        bot, top = self._require_bounded()
        stack = [bot]

        def dfs(v: int) -> Iterator[tuple[int, ...]]:
            if v == top:
                yield tuple(stack)
                return
            for w in self.upper_covers[v]:
                stack.append(w)
                yield from dfs(w)
                stack.pop()

        yield from dfs(bot)

    def count_maximal_chains(self) -> int:
        """Number of maximal chains without materializing them."""
        bot, top = self._require_bounded()
        paths = [0] * len(self.keys)
        paths[bot] = 1
        for v in self._topo:
            for w in self.upper_covers[v]:
                paths[w] += paths[v]
        return paths[top]

    def interval_maximal_chains(self, x: int, y: int) -> list[tuple[int, ...]]:
        """All saturated x-to-y chains (covers of the interval coincide
        with covers of the full poset)."""
        if not self.leq[x, y]:
            raise PosetError("not a comparable pair")
        out: list[tuple[int, ...]] = []
        stack = [x]

        def dfs(v: int) -> None:
            if v == y:
                out.append(tuple(stack))
                return
            for w in self.upper_covers[v]:
                if self.leq[w, y]:
                    stack.append(w)
                    dfs(w)
                    stack.pop()

        dfs(x)
        return out

    # -- gradedness and rank ----------------------------------------------

    def is_graded(self) -> tuple[bool, np.ndarray | None]:
        """True iff all maximal chains have equal length; on success also
        the rank function (length of any bottom-to-x saturated chain)."""
        self._require_bounded()
        n = len(self.keys)
        lo = np.full(n, -1, dtype=np.int64)  # shortest chain from bottom
        lo[self.bottom] = 0
        for v in self._topo:
            for w in self.upper_covers[v]:
                if lo[w] < 0 or lo[v] + 1 < lo[w]:
                    lo[w] = lo[v] + 1
        # graded iff for every cover the height step is exactly one and
        # shortest/longest bottom distances agree everywhere
        if not np.array_equal(lo, self.height):
            return False, None
        if any(self.height[j] != self.height[i] + 1 for i, j in self.covers):
            return False, None
        return True, self.height.copy()

    def rank(self) -> int:
        self._require_bounded()
        return int(self.height[self.top])

    # -- Moebius function --------------------------------------------------

    def moebius(self) -> "MoebiusTable":
        """Moebius values for all comparable pairs, by the standard
        recursion evaluated in decreasing height order below each y."""
        n = len(self.keys)
        values: dict[tuple[int, int], int] = {}
        leq = self.leq
        for y in range(n):
            below = np.flatnonzero(leq[:, y])
            mu: dict[int, int] = {y: 1}
            for x in sorted(below, key=lambda v: -int(self.height[v])):
                if x == y:
                    continue
                s = sum(mu[z] for z in below if leq[x, z] and z != x and z in mu)
                mu[x] = -s
            for x, v in mu.items():
                values[(x, y)] = v
        return MoebiusTable(self, values)

    def moebius_bottom_top(self) -> int:
        bot, top = self._require_bounded()
        leq = self.leq
        below = np.flatnonzero(leq[:, top])
        mu: dict[int, int] = {top: 1}
        for x in sorted(below, key=lambda v: -int(self.height[v])):
            if x == top:
                continue
            mu[x] = -sum(mu[z] for z in below if leq[x, z] and z != x)
        return mu[bot]

    # -- lattice structure ---------------------------------------------------

    def lattice_check(self) -> LatticeCheck:
        """Test whether every pair has a unique least upper bound and
        greatest lower bound; returns meet/join tables on success."""
        n = len(self.keys)
        join = np.full((n, n), -1, dtype=np.int64)
        meet = np.full((n, n), -1, dtype=np.int64)
        h = self.height
        leq = self.leq
        for i in range(n):
            for j in range(i, n):
                ub = leq[i] & leq[j]
                z = _unique_extremum(ub, h, leq, least=True)
                if z is None:
                    return LatticeCheck(False, witness=(self.keys[i], self.keys[j]),
                                        reason="no unique join")
                join[i, j] = join[j, i] = z
                lb = leq[:, i] & leq[:, j]
                z = _unique_extremum(lb, h, leq, least=False)
                if z is None:
                    return LatticeCheck(False, witness=(self.keys[i], self.keys[j]),
                                        reason="no unique meet")
                meet[i, j] = meet[j, i] = z
        return LatticeCheck(True, meet=meet, join=join)

    def is_modular_pair(self, x: int, z: int, tables: LatticeCheck) -> bool:
        """xMz: (y v x) ^ z == y v (x ^ z) for every y <= z."""
        if not tables.is_lattice:
            raise PosetError("modular pairs are defined only in lattices")
        join, meet = tables.join, tables.meet
        xz = meet[x, z]
        for y in np.flatnonzero(self.leq[:, z]):
            if meet[join[y, x], z] != join[y, xz]:
                return False
        return True

    def is_left_modular(self, x: int, tables: LatticeCheck) -> bool:
        return all(self.is_modular_pair(x, z, tables) for z in range(len(self.keys)))

    def is_left_modular_chain(self, chain: Sequence[int],
                              tables: LatticeCheck) -> bool:
        """True iff the (maximal) chain consists of left-modular elements."""
        if not self._is_maximal_chain(chain):
            raise PosetError("chain is not maximal")
        return all(self.is_left_modular(x, tables) for x in chain)

    def _is_maximal_chain(self, chain: Sequence[int]) -> bool:
        bot, top = self._require_bounded()
        if not chain or chain[0] != bot or chain[-1] != top:
            return False
        return all(b in self.upper_covers[a] for a, b in zip(chain, chain[1:]))

    # -- export ------------------------------------------------------------

    def to_json(self) -> str:
        return json.dumps({
            "elements": [str(k) for k in self.keys],
            "covers": [[i, j] for i, j in sorted(self.covers)],
        }, sort_keys=True)

    @classmethod
    def from_json(cls, text: str) -> "FinitePoset":
        data = json.loads(text)
        return cls.from_covers(data["elements"],
                               [tuple(p) for p in data["covers"]])

    def to_dot(self, edge_labels: dict[tuple[int, int], int] | None = None) -> str:
        lines = ["digraph hasse {", "  rankdir=BT;", "  node [shape=plaintext];"]
        for i, k in enumerate(self.keys):
            lines.append(f'  n{i} [label="{k}"];')
        for i, j in sorted(self.covers):
            attr = ""
            if edge_labels is not None:
                attr = f' [label="{edge_labels[(i, j)]}"]'
            lines.append(f"  n{i} -> n{j}{attr};")
        lines.append("}")
        return "\n".join(lines) + "\n"


def _unique_extremum(mask: np.ndarray, height: np.ndarray,
                     leq: np.ndarray, least: bool) -> int | None:
    """Unique minimum (least=True) or maximum of the masked subset, or
    None.  A least element, if present, is the unique member of minimal
    height within the subset."""
    idx = np.flatnonzero(mask)
    if len(idx) == 0:
        return None
    hs = height[idx]
    cand = idx[hs == (hs.min() if least else hs.max())]
    if len(cand) != 1:
        return None
    z = int(cand[0])
    row = leq[z] if least else leq[:, z]
    if not np.all(row[idx]):
        return None
    return z


def _transitive_reduction(leq: np.ndarray) -> list[tuple[int, int]]:
    n = leq.shape[0]
    strict = leq & ~np.eye(n, dtype=bool)
    composed = strict.astype(np.uint8) @ strict.astype(np.uint8) > 0
    red = strict & ~composed
    return sorted((int(i), int(j)) for i, j in np.argwhere(red))


def _topological_order(n: int, up: list[list[int]], indeg: list[int]) -> list[int]:
    indeg = list(indeg)
    frontier = sorted(v for v in range(n) if indeg[v] == 0)
    order: list[int] = []
    while frontier:
        v = frontier.pop(0)
        order.append(v)
        for w in up[v]:
            indeg[w] -= 1
            if indeg[w] == 0:
                frontier.append(w)
        frontier.sort()
    if len(order) != n:
        raise PosetError("cover relation contains a cycle")
    return order


@dataclass
class MoebiusTable:
    """Moebius values mu(x, y) for every comparable pair, indexed by
    element position."""

    poset: FinitePoset
    values: dict[tuple[int, int], int]

    def by_key(self, x: Hashable, y: Hashable) -> int:
        return self.values[(self.poset.index(x), self.poset.index(y))]


def direct_product(p: FinitePoset, q: FinitePoset) -> FinitePoset:
    """Componentwise order on pairs of elements."""
    keys = [(a, b) for a in p.keys for b in q.keys]
    leq = np.kron(p.leq, q.leq).astype(bool)
    return FinitePoset.from_leq_matrix(keys, leq)


def certify_supersolvable(p: FinitePoset, chain: Sequence[int],
                          tables: LatticeCheck | None = None) -> bool:
    """Graded lattice with a left-modular maximal chain; the only route
    by which this library asserts supersolvability."""
    if tables is None:
        tables = p.lattice_check()
    if not tables.is_lattice:
        return False
    graded, _ = p.is_graded()
    if not graded:
        return False
    return p.is_left_modular_chain(chain, tables)
