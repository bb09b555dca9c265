"""Builders for the partition posets: all partitions, noncrossing
partitions, and the noncrossing subfamily that omits the block
{n-1, n} and the "singleton n with 1 ~ n-1" configurations (called PE
here), together with its native meet and join.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from math import comb

from .partitions import (PartitionError, SetPartition, meet_partition,
                         nc_join, nc_meet)
from .posets import FinitePoset

PI_MAX_N = 9
NC_MAX_N = 10
PE_MAX_N = 10


class BuildError(ValueError):
    """Size cap exceeded or structurally invalid request."""


def catalan(n: int) -> int:
    if n < 0:
        return 0
    return comb(2 * n, n) // (n + 1)


# -- enumeration ---------------------------------------------------------

def enumerate_partitions(n: int) -> list[SetPartition]:
    """All set partitions of [n], via restricted-growth strings."""
    out: list[SetPartition] = []
    assignment = [0] * n

    def rec(i: int, nblocks: int) -> None:
        if i == n:
            blocks: list[list[int]] = [[] for _ in range(nblocks)]
            for e, b in enumerate(assignment, start=1):
                blocks[b].append(e)
            out.append(SetPartition.of(n, blocks))
            return
        for b in range(nblocks + 1):
            assignment[i] = b
            rec(i + 1, max(nblocks, b + 1))

    rec(0, 0)
    return out


def enumerate_noncrossing(n: int) -> list[SetPartition]:
    """All noncrossing partitions of [n].

    Recursive block-structure generation: the block containing the least
    remaining element splits what is left into independent segments, so
    nothing crossing is ever produced.
    """

    memo: dict[tuple[int, ...], list[list[tuple[int, ...]]]] = {}

    def rec(elems: tuple[int, ...]) -> list[list[tuple[int, ...]]]:
        if not elems:
            return [[]]
        cached = memo.get(elems)
        if cached is not None:
            return cached
        first, rest = elems[0], elems[1:]
        results: list[list[tuple[int, ...]]] = []

        def choose(start: int, block: list[int], segments: list[tuple[int, ...]]) -> None:
            # close the block here; everything after the last member is
            # one more independent segment
            tail_segments = segments + [rest[start:]]
            partials: list[list[list[tuple[int, ...]]]] = [rec(s) for s in tail_segments]
            combos: list[list[tuple[int, ...]]] = [[]]
            for options in partials:
                combos = [c + o for c in combos for o in options]
            blk = tuple(block)
            results.extend([blk] + c for c in combos)
            for k in range(start, len(rest)):
                block.append(rest[k])
                choose(k + 1, block, segments + [rest[start:k]])
                block.pop()

        choose(0, [first], [])
        memo[elems] = results
        return results

    return [SetPartition.of(n, blocks)
            for blocks in rec(tuple(range(1, n + 1)))]


def is_pe_member(x: SetPartition) -> bool:
    """Member test for the PE family (defined for noncrossing x, n >= 3):
    excluded are partitions with block {n-1, n}, and partitions where
    {n} is a singleton block while 1 and n-1 share a block."""
    if x.n < 3:
        raise BuildError(f"PE is defined for n >= 3, got n={x.n}")
    if not x.is_noncrossing:
        raise PartitionError(f"crossing input: {x}")
    n = x.n
    if (n - 1, n) in x.blocks:
        return False
    if (n,) in x.blocks and x.same_block(1, n - 1):
        return False
    return True


@lru_cache(maxsize=None)
def pe_members(n: int) -> tuple[SetPartition, ...]:
    if not (3 <= n <= PE_MAX_N):
        raise BuildError(f"PE construction supports 3 <= n <= {PE_MAX_N}, got n={n}")
    return tuple(x for x in enumerate_noncrossing(n) if is_pe_member(x))


# -- poset construction --------------------------------------------------

def _merge_covers(members: list[SetPartition]) -> list[tuple[int, int]]:
    """Cover pairs within a family closed under the 'merge two blocks'
    cover rule of the dual refinement order."""
    index = {x: i for i, x in enumerate(members)}
    covers: list[tuple[int, int]] = []
    for i, x in enumerate(members):
        blocks = x.blocks
        for a in range(len(blocks)):
            for b in range(a + 1, len(blocks)):
                merged_blocks = (blocks[:a] + (tuple(sorted(blocks[a] + blocks[b])),)
                                 + blocks[a + 1:b] + blocks[b + 1:])
                y = SetPartition.of(x.n, merged_blocks)
                j = index.get(y)
                if j is not None:
                    covers.append((i, j))
    return covers


def build_pi(n: int) -> FinitePoset:
    if not (1 <= n <= PI_MAX_N):
        raise BuildError(f"full partition lattice supports 1 <= n <= {PI_MAX_N}, got n={n}")
    members = enumerate_partitions(n)
    return FinitePoset.from_covers(members, _merge_covers(members))


def build_nc(n: int) -> FinitePoset:
    if not (1 <= n <= NC_MAX_N):
        raise BuildError(f"noncrossing lattice supports 1 <= n <= {NC_MAX_N}, got n={n}")
    members = enumerate_noncrossing(n)
    return FinitePoset.from_covers(members, _merge_covers(members))


def build_pe_dref(n: int) -> FinitePoset:
    if not (3 <= n <= PE_MAX_N):
        raise BuildError(f"PE construction supports 3 <= n <= {PE_MAX_N}, got n={n}")
    members = list(pe_members(n))
    return FinitePoset.from_covers(members, _merge_covers(members))


# -- PE meet and join ------------------------------------------------------

def pe_meet(x: SetPartition, y: SetPartition) -> SetPartition:
    """Meet in the PE lattice: the noncrossing meet, repaired by
    splitting a {n-1, n} block into singletons when necessary."""
    _require_pe(x)
    _require_pe(y)
    n = x.n
    w = nc_meet(x, y)
    if is_pe_member(w):
        return w
    if (n - 1, n) in w.blocks:
        blocks = [b for b in w.blocks if b != (n - 1, n)] + [(n - 1,), (n,)]
        return SetPartition.of(n, blocks)
    # the remaining failure mode ({n} singleton with 1 ~ n-1) cannot
    # occur for inputs in PE; treat it as a structural contradiction
    raise AssertionError(f"impossible meet case for {x} ^ {y}: got {w}")


def pe_join(x: SetPartition, y: SetPartition) -> SetPartition:
    """Join in the PE lattice: the noncrossing join, repaired by merging
    a singleton {n} into the block of 1 when necessary."""
    _require_pe(x)
    _require_pe(y)
    n = x.n
    w = nc_join(x, y)
    if is_pe_member(w):
        return w
    if (n - 1, n) in w.blocks:
        raise AssertionError(f"impossible join case for {x} v {y}: got {w}")
    block_of_1 = next(b for b in w.blocks if 1 in b)
    blocks = [b for b in w.blocks if b != block_of_1 and b != (n,)]
    blocks.append(tuple(sorted(block_of_1 + (n,))))
    return SetPartition.of(n, blocks)


def _require_pe(x: SetPartition) -> None:
    if not is_pe_member(x):
        raise BuildError(f"not a PE member: {x}")


# -- the distinguished left-modular chain -----------------------------------

@dataclass(frozen=True)
class DistinguishedChain:
    """The chain whose i-th element has unique non-singleton block
    {1, ..., i-1} u {n}; runs from the discrete to the full partition."""

    n: int
    elements: tuple[SetPartition, ...]


def chain_element(n: int, i: int) -> SetPartition:
    if not (1 <= i <= n):
        raise BuildError(f"chain index {i} out of range for n={n}")
    if i == 1:
        return SetPartition.bottom(n)
    big = tuple(range(1, i)) + (n,)
    blocks = [big] + [(e,) for e in range(i, n)]
    return SetPartition.of(n, blocks)


def distinguished_chain(n: int) -> DistinguishedChain:
    return DistinguishedChain(n, tuple(chain_element(n, i) for i in range(1, n + 1)))
