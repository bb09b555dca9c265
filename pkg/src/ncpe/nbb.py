"""Atom-order machinery for Moebius computation via bounded-below sets.

Atoms are the partitions with a single doubleton block {i, j}.  They are
partially ordered by grouping into ranks: rank j holds the atoms {i, j}
with i < j together with {j, n}.  A set of atoms is bounded below (BB)
when each of its members has a strictly smaller atom below the set's
join; sets with no nonempty BB subset (NBB) whose join is the full
partition drive the Moebius value between bottom and top.

The bases for the full partition correspond to noncrossing trees on [n];
the tree model also classifies which bases survive the passage from the
noncrossing lattice to its PE sublattice.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from itertools import combinations
from typing import Iterable, Literal, NamedTuple

from .builders import BuildError, pe_join
from .partitions import SetPartition, nc_join

Ambient = Literal["nc", "pe"]

NBB_MAX_N = 9


class Atom(NamedTuple):
    i: int
    j: int

    def partition(self, n: int) -> SetPartition:
        blocks = [(self.i, self.j)] + [(e,) for e in range(1, n + 1)
                                       if e not in (self.i, self.j)]
        return SetPartition.of(n, blocks)

    def __str__(self) -> str:
        return f"a({self.i},{self.j})"


def atom_rank(a: Atom, n: int) -> int:
    """Rank of an atom in the atom order: j for {i, j} with j < n, and i
    for {i, n}.  Equals the least r such that the atom sits below the
    r-th element of the distinguished chain."""
    if not (1 <= a.i < a.j <= n):
        raise BuildError(f"invalid atom {a} for n={n}")
    return a.j if a.j < n else a.i


def nc_atoms(n: int) -> list[Atom]:
    return [Atom(i, j) for i in range(1, n + 1) for j in range(i + 1, n + 1)]


def pe_atoms(n: int) -> list[Atom]:
    if n < 3:
        raise BuildError(f"PE atoms require n >= 3, got n={n}")
    excluded = {Atom(1, n - 1), Atom(n - 1, n)}
    return [a for a in nc_atoms(n) if a not in excluded]


def atoms_by_rank(n: int, ambient: Ambient) -> list[list[Atom]]:
    """Atoms grouped by rank 1, ..., n-1, each group sorted by (i, j)."""
    atoms = nc_atoms(n) if ambient == "nc" else pe_atoms(n)
    groups: list[list[Atom]] = [[] for _ in range(n - 1)]
    for a in atoms:
        groups[atom_rank(a, n) - 1].append(a)
    for g in groups:
        g.sort()
    return groups


def _ambient_join(atoms: Iterable[Atom], n: int, ambient: Ambient) -> SetPartition:
    join_op = nc_join if ambient == "nc" else pe_join
    result = SetPartition.bottom(n)
    for a in atoms:
        result = join_op(result, a.partition(n))
    return result


def atoms_cross(a: Atom, b: Atom) -> bool:
    i, j = a
    k, l = b
    return i < k < j < l or k < i < l < j


def is_bb(atoms: frozenset[Atom] | set[Atom], n: int, ambient: Ambient,
          join: SetPartition | None = None) -> bool:
    """Bounded-below test: every member must have a strictly smaller atom
    (in the rank order) lying below the join of the whole set."""
    if not atoms:
        raise BuildError("BB is defined for nonempty atom sets")
    pool = nc_atoms(n) if ambient == "nc" else pe_atoms(n)
    for a in atoms:
        if not (1 <= a.i < a.j <= n) or a not in pool:
            raise BuildError(f"atom {a} invalid for ambient {ambient!r}, n={n}")
    if join is None:
        join = _ambient_join(atoms, n, ambient)
    for d in atoms:
        rd = atom_rank(d, n)
        found = any(
            atom_rank(a, n) < rd
            and join.same_block(a.i, a.j)
            and join != a.partition(n)
            for a in pool)
        if not found:
            return False
    return True


def _is_nbb(base: tuple[Atom, ...], n: int, ambient: Ambient) -> bool:
    """Full check that no nonempty subset is BB; joins of subsets are
    memoized bottom-up.  Singletons are never BB, so start at pairs."""
    joins: dict[frozenset[Atom], SetPartition] = {
        frozenset((a,)): a.partition(n) for a in base}
    join_op = nc_join if ambient == "nc" else pe_join
    for size in range(2, len(base) + 1):
        for combo in combinations(base, size):
            s = frozenset(combo)
            sub = s - {combo[-1]}
            joins[s] = join_op(joins[sub], combo[-1].partition(n))
            if is_bb(s, n, ambient, join=joins[s]):
                return False
    return True


@lru_cache(maxsize=None)
def enumerate_nbb_bases_top(n: int, ambient: Ambient) -> tuple[tuple[Atom, ...], ...]:
    """All NBB bases for the full partition, as rank-sorted atom tuples
    in lexicographic order of their (rank, i, j) key sequences.

    Any two atoms of equal rank, and any crossing pair, form a BB set,
    so a base picks at most one atom per rank and is pairwise
    noncrossing; the search enumerates exactly those candidates and runs
    the full NBB subset check on the survivors.
    """
    if ambient == "pe":
        if not (3 <= n <= NBB_MAX_N):
            raise BuildError(f"PE ambient supports 3 <= n <= {NBB_MAX_N}, got n={n}")
    else:
        if not (1 <= n <= NBB_MAX_N):
            raise BuildError(f"NC ambient supports 1 <= n <= {NBB_MAX_N}, got n={n}")
    top = SetPartition.top(n)
    if n == 1:
        return ((),)
    groups = atoms_by_rank(n, ambient)
    bases: list[tuple[Atom, ...]] = []
    chosen: list[Atom] = []

    def dfs(rank_idx: int) -> None:
        if rank_idx == len(groups):
            base = tuple(chosen)
            if (_ambient_join(base, n, ambient) == top
                    and _is_nbb(base, n, ambient)):
                bases.append(base)
            return
        for a in groups[rank_idx]:
            if any(atoms_cross(a, b) for b in chosen):
                continue
            chosen.append(a)
            dfs(rank_idx + 1)
            chosen.pop()

    dfs(0)
    return tuple(bases)


def moebius_via_nbb(n: int, ambient: Ambient) -> int:
    """Signed count of NBB bases for the top element."""
    return sum((-1) ** len(base) for base in enumerate_nbb_bases_top(n, ambient))


# -- the tree model -----------------------------------------------------------

@dataclass(frozen=True)
class NCTree:
    """Tree on [n] with one edge per atom of a base."""

    n: int
    edges: frozenset[tuple[int, int]]

    def neighbors(self, v: int) -> list[int]:
        out = [j if i == v else i for i, j in self.edges if v in (i, j)]
        return sorted(out)

    def is_tree(self) -> bool:
        if len(self.edges) != self.n - 1:
            return False
        seen = {1}
        frontier = [1]
        while frontier:
            v = frontier.pop()
            for w in self.neighbors(v):
                if w not in seen:
                    seen.add(w)
                    frontier.append(w)
        return len(seen) == self.n

    def split_at_root_edge(self) -> tuple[set[int], set[int]]:
        """Vertex sets of the two components after removing edge {1, n}."""
        if (1, self.n) not in self.edges:
            raise BuildError("tree has no edge between 1 and n")
        pruned = NCTree(self.n, self.edges - {(1, self.n)})
        comp1 = {1}
        frontier = [1]
        while frontier:
            v = frontier.pop()
            for w in pruned.neighbors(v):
                if w not in comp1:
                    comp1.add(w)
                    frontier.append(w)
        return comp1, set(range(1, self.n + 1)) - comp1

    def to_dot(self) -> str:
        lines = ["graph nctree {", "  node [shape=circle];"]
        for i, j in sorted(self.edges):
            lines.append(f"  {i} -- {j};")
        lines.append("}")
        return "\n".join(lines) + "\n"


def base_to_tree(base: Iterable[Atom], n: int) -> NCTree:
    tree = NCTree(n, frozenset((a.i, a.j) for a in base))
    if not tree.is_tree():
        raise BuildError(f"atom set does not form a tree on [{n}]")
    return tree


# -- classification -----------------------------------------------------------

Classification = Literal["S1", "S2", "R", "kept"]


def classify_base(base: tuple[Atom, ...], n: int) -> Classification:
    """Classify a base for the top of the noncrossing lattice by why it
    is (or is not) discarded in the PE sublattice: S1 contains the atom
    {1, n-1}, S2 contains {n-1, n}, R is discarded because the base
    minus the atom {1, n} already joins to the top in PE; the remainder
    are exactly the PE bases.

    In the tree of the base, membership in R is equivalent to n having
    1 as its only neighbor; that form is used here because it stays
    meaningful when the base contains an atom outside PE.  When every
    remaining atom does lie in PE the iterated PE join is computed too,
    and the two criteria are asserted to agree.
    """
    atoms = set(base)
    root = Atom(1, n)
    if root not in atoms:
        raise BuildError(f"not a base for the top: {base}")
    s1 = Atom(1, n - 1) in atoms
    s2 = Atom(n - 1, n) in atoms
    if s1 and s2:
        raise AssertionError(f"base {base} contains both excluded atoms")
    tree = base_to_tree(base, n)
    r = tree.neighbors(n) == [1]
    rest = atoms - {root}
    if all(a in set(pe_atoms(n)) for a in rest):
        joins_top = _ambient_join(rest, n, "pe") == SetPartition.top(n)
        if joins_top != r:
            raise AssertionError(
                f"PE-join and tree criteria disagree on {base}")
    if s1 and not r:
        raise AssertionError(f"base {base} in S1 but not in R")
    if s2 and r:
        raise AssertionError(f"base {base} in both S2 and R")
    if s1:
        return "S1"
    if s2:
        return "S2"
    if r:
        return "R"
    return "kept"


def classification_census(n: int) -> dict[str, int]:
    """Counts of the discard classes among the noncrossing bases.  S1 is
    a subset of R, so the reported R count includes the S1 count and
    discarded = S2 + R."""
    raw = {"S1": 0, "S2": 0, "R": 0, "kept": 0}
    for base in enumerate_nbb_bases_top(n, "nc"):
        raw[classify_base(base, n)] += 1
    return {"S1": raw["S1"], "S2": raw["S2"], "R": raw["R"] + raw["S1"],
            "kept": raw["kept"]}


# -- bases for arbitrary noncrossing elements (exploratory) -------------------

def nc_nbb_bases_for(n: int, x: SetPartition) -> list[tuple[Atom, ...]]:
    """NBB bases for an arbitrary noncrossing partition: pick at most one
    atom per rank with pairwise-noncrossing joins, then keep the sets
    that are NBB and join to x.  Verified against the Moebius recursion
    only for small n; not asserted in general."""
    groups = atoms_by_rank(n, "nc")
    bases: list[tuple[Atom, ...]] = []
    chosen: list[Atom] = []

    def dfs(rank_idx: int) -> None:
        if rank_idx == len(groups):
            base = tuple(chosen)
            if not base:
                if x == SetPartition.bottom(n):
                    bases.append(base)
                return
            if (_ambient_join(base, n, "nc") == x
                    and _is_nbb(base, n, "nc")):
                bases.append(base)
            return
        dfs(rank_idx + 1)  # skip this rank
        for a in groups[rank_idx]:
            if a.partition(n).leq_dref(x) and not any(atoms_cross(a, b) for b in chosen):
                chosen.append(a)
                dfs(rank_idx + 1)
                chosen.pop()

    dfs(0)
    return bases
