"""Set compositions and integer compositions.

A set composition of a finite label set ``I`` is an ordered sequence of
disjoint nonempty blocks whose union is ``I``.  Blocks are stored as sorted
tuples, so equality and hashing are structural.  The refinement order
follows the convention where the one-block composition ``(I)`` is the
minimum and linear orders (all blocks singletons) are the maximal elements:
``F <= G`` when every block of ``F`` is a union of adjacent blocks of ``G``.

Integer compositions are handled through their partial-sum sets, encoded as
bitmasks over ``{1, ..., n-1}``.
"""
from __future__ import annotations

import itertools
from dataclasses import dataclass
from functools import lru_cache
from typing import Iterable, Iterator

from .config import check_cap
from .errors import GroundSetError

LabelSet = frozenset


def labelset(elements: Iterable[int] = ()) -> frozenset:
    return frozenset(elements)


def canonical(n: int) -> frozenset:
    """The set ``[n] = {1, ..., n}``."""
    return frozenset(range(1, n + 1))


@dataclass(frozen=True, order=True)
class SetComposition:
    blocks: tuple

    def __post_init__(self):
        seen = set()
        for block in self.blocks:
            if not block:
                raise GroundSetError("blocks of a set composition must be nonempty")
            if any(x in seen for x in block):
                raise GroundSetError(f"blocks are not disjoint: {self.blocks!r}")
            seen.update(block)

    @classmethod
    def of(cls, *blocks: Iterable[int]) -> "SetComposition":
        return cls(tuple(tuple(sorted(b)) for b in blocks))

    @classmethod
    def linear(cls, word: Iterable[int]) -> "SetComposition":
        """The composition into singletons read off a word."""
        return cls(tuple((x,) for x in word))

    @property
    def ground(self) -> frozenset:
        return frozenset(x for block in self.blocks for x in block)

    @property
    def size(self) -> int:
        return sum(len(b) for b in self.blocks)

    def __len__(self) -> int:
        return len(self.blocks)

    def __iter__(self):
        return iter(self.blocks)

    def is_linear(self) -> bool:
        return all(len(b) == 1 for b in self.blocks)

    def word(self) -> tuple:
        if not self.is_linear():
            raise GroundSetError(f"{render_set(self)} is not a linear order")
        return tuple(b[0] for b in self.blocks)

    def flag(self) -> frozenset:
        """Initial unions ``{}, I_1, I_1 u I_2, ..., I``."""
        out = [frozenset()]
        acc = set()
        for block in self.blocks:
            acc.update(block)
            out.append(frozenset(acc))
        return frozenset(out)

    def relabel(self, sigma) -> "SetComposition":
        return SetComposition(tuple(tuple(sorted(sigma[x] for x in b)) for b in self.blocks))

    def __str__(self) -> str:
        return render_set(self)


EMPTY = SetComposition(())


@dataclass(frozen=True, order=True)
class Decomposition:
    """An ordered pair ``(S, T)`` with ``I = S u T`` disjoint; either may be empty."""

    S: frozenset
    T: frozenset

    def __post_init__(self):
        object.__setattr__(self, "S", frozenset(self.S))
        object.__setattr__(self, "T", frozenset(self.T))
        if self.S & self.T:
            raise GroundSetError(f"S and T overlap in {sorted(self.S & self.T)}")

    @property
    def ground(self) -> frozenset:
        return self.S | self.T

    @classmethod
    def of(cls, ground: Iterable[int], S: Iterable[int]) -> "Decomposition":
        ground = frozenset(ground)
        S = frozenset(S)
        if not S <= ground:
            raise GroundSetError(f"{sorted(S)} is not a subset of {sorted(ground)}")
        return cls(S, ground - S)


def decompositions(ground: Iterable[int]) -> list:
    """All decompositions ``(S, T)`` of ``ground``, ordered by sorted ``S``."""
    elems = sorted(ground)
    out = []
    for k in range(len(elems) + 1):
        for S in itertools.combinations(elems, k):
            out.append(Decomposition(frozenset(S), frozenset(elems) - frozenset(S)))
    return out


# -- set composition operations ---------------------------------------------

def concat_set(F: SetComposition, G: SetComposition, witness: Decomposition | None = None) -> SetComposition:
    """Concatenation ``F . G``; with a witness, grounds are checked against it."""
    if witness is not None:
        if F.ground != witness.S or G.ground != witness.T:
            raise GroundSetError("concatenation factors do not match the decomposition")
    elif F.ground & G.ground:
        raise GroundSetError("concatenation factors must have disjoint ground sets")
    return SetComposition(F.blocks + G.blocks)


def is_admissible(S: Iterable[int], F: SetComposition) -> bool:
    S = frozenset(S)
    if not S <= F.ground:
        raise GroundSetError(f"{sorted(S)} is not a subset of the ground set of {F}")
    for block in F.blocks:
        inside = sum(1 for x in block if x in S)
        if 0 < inside < len(block):
            return False
    return True


def restrict(F: SetComposition, S: Iterable[int]) -> SetComposition:
    """Block subsequence of ``F`` lying inside ``S``; ``S`` must be admissible."""
    S = frozenset(S)
    if not is_admissible(S, F):
        raise GroundSetError(f"{sorted(S)} is not {F}-admissible")
    return SetComposition(tuple(b for b in F.blocks if b[0] in S))


def _check_ground(D: Decomposition, F: SetComposition) -> None:
    if F.ground != D.ground:
        raise GroundSetError(f"{F} is not a composition of {sorted(D.ground)}")


def area(D: Decomposition, F: SetComposition) -> int:
    """Schubert statistic: sum over i < j of |I_i n T| * |I_j n S|."""
    _check_ground(D, F)
    total = 0
    t_before = 0
    for block in F.blocks:
        total += t_before * sum(1 for x in block if x in D.S)
        t_before += sum(1 for x in block if x in D.T)
    return total


def area_pairs(D: Decomposition, F: SetComposition) -> int:
    """Schubert statistic by direct count of pairs (i, j) in S x T with i strictly after j."""
    _check_ground(D, F)
    position = {x: k for k, block in enumerate(F.blocks) for x in block}
    return sum(1 for i in D.S for j in D.T if position[i] > position[j])


def _from_flag(chain: Iterable[frozenset]) -> SetComposition:
    ordered = sorted(chain, key=len)
    return SetComposition(tuple(tuple(sorted(b - a)) for a, b in zip(ordered, ordered[1:])))


def meet_set(F: SetComposition, G: SetComposition) -> SetComposition:
    """Greatest lower bound under refinement, via intersection of flags."""
    if F.ground != G.ground:
        raise GroundSetError(f"{F} and {G} have different ground sets")
    return _from_flag(F.flag() & G.flag())


def leq(F: SetComposition, G: SetComposition) -> bool:
    """``F <= G``: each block of ``F`` merges adjacent blocks of ``G``."""
    if F.ground != G.ground:
        raise GroundSetError(f"{F} and {G} have different ground sets")
    return F.flag() <= G.flag()


def one_block(ground: Iterable[int]) -> SetComposition:
    ground = tuple(sorted(ground))
    return SetComposition((ground,)) if ground else EMPTY


@lru_cache(maxsize=4096)
def _compositions_of(ground: tuple) -> tuple:
    if not ground:
        return (EMPTY,)
    out = []
    for r in range(1, len(ground) + 1):
        for first in itertools.combinations(ground, r):
            rest = tuple(x for x in ground if x not in first)
            for tail in _compositions_of(rest):
                out.append(SetComposition((first,) + tail.blocks))
    out.sort()
    return tuple(out)


def enumerate_set_compositions(ground: Iterable[int]) -> list:
    """Every composition of ``ground``, in lexicographic order of block sequences."""
    ground = tuple(sorted(ground))
    check_cap(len(ground), "label set size")
    return list(_compositions_of(ground))


def iter_linear_orders(ground: Iterable[int]) -> Iterator[tuple]:
    return itertools.permutations(sorted(ground))


def is_indecomposable(F: SetComposition) -> bool:
    """No split of ``F`` as a composition of ``[i]`` followed by one of ``[n] - [i]``."""
    n = F.size
    if F.ground != canonical(n):
        raise GroundSetError(f"{F} is not a composition of [{n}]")
    prefix = set()
    split = False
    for block in F.blocks[:-1]:
        prefix.update(block)
        if len(prefix) == max(prefix):
            split = True
            break
    via_meet = meet_set(F, SetComposition.linear(range(1, n + 1))) == one_block(range(1, n + 1))
    assert via_meet == (not split), f"indecomposability cross-check disagrees on {F}"
    return not split


# -- integer compositions ---------------------------------------------------

@dataclass(frozen=True, order=True)
class IntComposition:
    parts: tuple

    def __post_init__(self):
        object.__setattr__(self, "parts", tuple(int(p) for p in self.parts))
        if any(p < 1 for p in self.parts):
            raise GroundSetError(f"parts must be positive: {self.parts}")

    @property
    def n(self) -> int:
        return sum(self.parts)

    def partial_sums(self) -> frozenset:
        """Partial sums strictly between 0 and n."""
        acc = 0
        out = []
        for p in self.parts[:-1]:
            acc += p
            out.append(acc)
        return frozenset(out)

    def mask(self) -> int:
        return sum(1 << (s - 1) for s in self.partial_sums())

    @classmethod
    def from_partial_sums(cls, n: int, sums: Iterable[int]) -> "IntComposition":
        points = [0] + sorted(sums) + [n]
        if n == 0:
            return cls(())
        if points[1] <= 0 or points[-2] >= n:
            raise GroundSetError(f"partial sums must lie in 1..{n - 1}")
        return cls(tuple(b - a for a, b in zip(points, points[1:])))

    @classmethod
    def from_mask(cls, n: int, mask: int) -> "IntComposition":
        return cls.from_partial_sums(n, [k + 1 for k in range(n - 1) if mask >> k & 1])

    def __str__(self) -> str:
        return render_int(self)


def meet_int(alpha: IntComposition, beta: IntComposition) -> IntComposition:
    if alpha.n != beta.n:
        raise GroundSetError(f"{alpha} and {beta} have different sums")
    return IntComposition.from_partial_sums(alpha.n, alpha.partial_sums() & beta.partial_sums())


def concat_int(alpha: IntComposition, beta: IntComposition) -> IntComposition:
    return IntComposition(alpha.parts + beta.parts)


def enumerate_int_compositions(n: int) -> list:
    """All 2^(n-1) compositions of ``n`` (one, empty, for n = 0), ordered by bitmask."""
    if n == 0:
        return [IntComposition(())]
    return [IntComposition.from_mask(n, m) for m in range(1 << (n - 1))]


def is_indecomposable_int(alpha: IntComposition) -> bool:
    """Integer analogue: every composition with two or more parts splits as a concatenation."""
    return len(alpha.parts) == 1


def block_sizes(F: SetComposition) -> IntComposition:
    return IntComposition(tuple(len(b) for b in F.blocks))


# -- text forms --------------------------------------------------------------

def render_set(F: SetComposition) -> str:
    return "|".join("{" + ",".join(str(x) for x in b) + "}" for b in F.blocks)


def parse_set(text: str) -> SetComposition:
    text = text.strip()
    if not text:
        return EMPTY
    blocks = []
    for chunk in text.split("|"):
        chunk = chunk.strip()
        if not (chunk.startswith("{") and chunk.endswith("}")):
            raise GroundSetError(f"malformed block {chunk!r}")
        inner = chunk[1:-1].strip()
        if not inner:
            raise GroundSetError("empty block")
        blocks.append(tuple(sorted(int(x) for x in inner.split(","))))
    return SetComposition(tuple(blocks))


def render_int(alpha: IntComposition) -> str:
    return "+".join(str(p) for p in alpha.parts)


def parse_int(text: str) -> IntComposition:
    text = text.strip()
    if not text:
        return IntComposition(())
    return IntComposition(tuple(int(p) for p in text.split("+")))
