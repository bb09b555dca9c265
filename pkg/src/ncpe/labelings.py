"""Edge labelings and exhaustive EL verification.

Three labeling schemes are provided: the left-modular labeling induced
by a left-modular maximal chain, the parking labeling of block merges,
and the classical "n minus last small element" labeling (which fails EL
on the chain-restricted poset; kept to exhibit the failure).

Conventions, fixed once to avoid off-by-strictness bugs: a chain is
*rising* if its label word is strictly increasing, *decreasing* if the
word is weakly decreasing.  The label poset is always the integers.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence

import numpy as np

from .partitions import SetPartition
from .posets import FinitePoset, LatticeCheck, PosetError


class LabelingError(ValueError):
    """Labeling preconditions violated."""


@dataclass
class EdgeLabeling:
    poset: FinitePoset
    labels: dict[tuple[int, int], int]

    def __post_init__(self) -> None:
        if set(self.labels) != set(self.poset.covers):
            raise LabelingError("label domain must be exactly the cover set")

    def word(self, chain: Sequence[int]) -> tuple[int, ...]:
        return tuple(self.labels[(a, b)] for a, b in zip(chain, chain[1:]))

    def restrict(self, poset: FinitePoset) -> "EdgeLabeling":
        """Restriction to a poset on the same keys with a subset of the
        cover relations."""
        labels = {}
        for i, j in poset.covers:
            orig = (self.poset.index(poset.keys[i]), self.poset.index(poset.keys[j]))
            if orig not in self.labels:
                raise LabelingError(f"cover {poset.keys[i]} < {poset.keys[j]} not in original poset")
            labels[(i, j)] = self.labels[orig]
        return EdgeLabeling(poset, labels)


def is_rising(word: Sequence[int]) -> bool:
    return all(a < b for a, b in zip(word, word[1:]))


def is_weakly_decreasing(word: Sequence[int]) -> bool:
    return all(a >= b for a, b in zip(word, word[1:]))


def left_modular_labeling(poset: FinitePoset, chain_keys: Sequence,
                          tables: LatticeCheck | None = None) -> EdgeLabeling:
    """Labeling induced by a left-modular maximal chain c_0 < ... < c_r:
    a cover (y, z) gets the least t with z <= y v c_t.

    The label of every cover lies in [r].  Each label is cross-checked
    against the meet form (least t with c_t ^ z not below y); the two
    agree on supersolvable lattices.
    """
    if tables is None:
        tables = poset.lattice_check()
    if not tables.is_lattice:
        raise LabelingError("left-modular labeling requires a lattice")
    chain = [poset.index(k) for k in chain_keys]
    if not poset.is_left_modular_chain(chain, tables):
        raise LabelingError("chain is not left-modular")
    join, meet, leq = tables.join, tables.meet, poset.leq
    labels: dict[tuple[int, int], int] = {}
    for y, z in poset.covers:
        lam = next(t for t in range(len(chain)) if leq[z, join[y, chain[t]]])
        alt = next(t for t in range(len(chain)) if not leq[meet[chain[t], z], y])
        if lam != alt:
            raise AssertionError(
                f"label formulas disagree on cover ({poset.keys[y]}, {poset.keys[z]}): "
                f"{lam} vs {alt}")
        labels[(y, z)] = lam
    return EdgeLabeling(poset, labels)


def _merged_blocks(x: SetPartition, y: SetPartition) -> tuple[tuple[int, ...], tuple[int, ...]]:
    """The two blocks of x merged in y, ordered by minimum."""
    joined = [b for b in x.blocks if b not in y.blocks]
    if len(joined) != 2 or tuple(sorted(joined[0] + joined[1])) not in y.blocks:
        raise LabelingError(f"cover {x} < {y} is not a two-block merge")
    b1, b2 = sorted(joined, key=min)
    return b1, b2


def parking_label(x: SetPartition, y: SetPartition) -> int:
    """Largest element of the lower merged block below every element of
    the upper merged block."""
    b1, b2 = _merged_blocks(x, y)
    lo = min(b2)
    return max(j for j in b1 if j <= lo)


def parking_labeling(poset: FinitePoset) -> EdgeLabeling:
    labels = {(i, j): parking_label(poset.keys[i], poset.keys[j])
              for i, j in poset.covers}
    return EdgeLabeling(poset, labels)


def usual_labeling(poset: FinitePoset) -> EdgeLabeling:
    """Classical labeling of the noncrossing partition lattice: n minus
    the largest element of the lower block below the upper block."""
    labels = {}
    for i, j in poset.covers:
        x = poset.keys[i]
        labels[(i, j)] = x.n - parking_label(x, poset.keys[j])
    return EdgeLabeling(poset, labels)


@dataclass
class ELVerdict:
    el: bool
    witness: dict | None = None


def verify_el(poset: FinitePoset, labeling: EdgeLabeling) -> ELVerdict:
    """Exhaustive EL check: in every interval, exactly one rising maximal
    chain, whose word is strictly lexicographically least."""
    poset._require_bounded()
    n = len(poset.keys)
    for x in range(n):
        above = np.flatnonzero(poset.leq[x])
        for y in above:
            if y == x:
                continue
            chains = poset.interval_maximal_chains(x, int(y))
            words = [labeling.word(c) for c in chains]
            rising = [w for w in words if is_rising(w)]
            ok = len(rising) == 1 and all(
                w == rising[0] or rising[0] < w for w in words)
            if not ok:
                return ELVerdict(False, witness={
                    "interval": (str(poset.keys[x]), str(poset.keys[int(y)])),
                    "rising_chains": [
                        [str(poset.keys[v]) for v in c]
                        for c, w in zip(chains, words) if is_rising(w)],
                    "words": sorted(words)[:10],
                })
    return ELVerdict(True)


def verify_sn_el(poset: FinitePoset, labeling: EdgeLabeling) -> bool:
    """Given an EL-labeling on a graded poset of rank r: every maximal
    chain must carry r distinct labels from [r]."""
    graded, _ = poset.is_graded()
    if not graded:
        raise PosetError("Sn EL check requires a graded poset")
    r = poset.rank()
    want = set(range(1, r + 1))
    for chain in poset.iter_maximal_chains():
        word = labeling.word(chain)
        if set(word) != want or len(word) != r:
            return False
    return True


def count_decreasing_chains(poset: FinitePoset, labeling: EdgeLabeling) -> int:
    """Maximal bottom-to-top chains with weakly decreasing label word;
    for an EL-shellable poset this equals |mu(bottom, top)|."""
    return sum(1 for chain in poset.iter_maximal_chains()
               if is_weakly_decreasing(labeling.word(chain)))


def unique_rising_chain(poset: FinitePoset, labeling: EdgeLabeling) -> tuple[int, ...]:
    rising = [c for c in poset.iter_maximal_chains()
              if is_rising(labeling.word(c))]
    if len(rising) != 1:
        raise PosetError(f"expected one rising maximal chain, found {len(rising)}")
    return rising[0]
