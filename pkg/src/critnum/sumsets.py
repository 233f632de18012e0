"""Subsets of a finite abelian group and their sumsets.

Subsets are stored as Python integers used as bitmasks: bit i is set when
the element with flat index i belongs to the set.  Translating a set by a
group element then becomes a handful of shift-and-mask operations per
coordinate, and a pairwise sumset A+B is the union of |A| translates of B.
All higher operations (h-fold sumsets, interval sumsets, subset sums) are
built from that kernel, which is what makes exhaustive search over all
subsets feasible at small orders.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property, lru_cache
from typing import Iterable, Sequence

from .errors import EmptySetError, InvalidElement, InvalidH, InvalidS, SpecMismatch
from .groups import GroupType


class Layout:
    """Precomputed bit-level tables for one group shape.

    shift_ops[e] is a sequence of (low_mask, high_mask, up, down) tuples;
    applying them in order to a mask translates the set by the element with
    index e.  Each tuple rotates one mixed-radix coordinate: within every
    block of that coordinate the low bits move up by `up` and the high bits
    wrap down by `down`.
    """

    __slots__ = ("factors", "order", "full", "strides", "shift_ops", "neg_index")

    def __init__(self, factors: tuple[int, ...]):
        group = GroupType(factors)
        n = group.order
        self.factors = group.factors
        self.order = n
        self.full = (1 << n) - 1
        strides = []
        s = 1
        for f in group.factors:
            strides.append(s)
            s *= f
        self.strides = tuple(strides)

        # Per coordinate, a repeating-unit mask with one bit at the base of
        # every block lets us stamp out block-periodic masks by multiplication.
        coord_masks = []
        for stride, f in zip(strides, group.factors):
            block = stride * f
            rep = self.full // ((1 << block) - 1)
            per_shift = []
            for c in range(f):
                if c == 0:
                    per_shift.append(None)
                    continue
                up = c * stride
                low_width = block - up
                low = rep * ((1 << low_width) - 1)
                high = self.full ^ low
                per_shift.append((low, high, up, low_width))
            coord_masks.append(per_shift)

        ops = []
        for i in range(n):
            coords = group.decode(i)
            ops.append(tuple(coord_masks[j][c] for j, c in enumerate(coords) if c))
        self.shift_ops = tuple(ops)
        self.neg_index = tuple(group.encode(group.neg(group.decode(i))) for i in range(n))


@lru_cache(maxsize=None)
def _layout_for_factors(factors: tuple[int, ...]) -> Layout:
    return Layout(factors)


def layout_for(group: GroupType) -> Layout:
    return _layout_for_factors(group.factors)


def translate_bits(layout: Layout, bits: int, index: int) -> int:
    """Mask of {a + g : a in bits} where g is the element with flat index."""
    for low, high, up, down in layout.shift_ops[index]:
        bits = ((bits & low) << up) | ((bits & high) >> down)
    return bits


def pairwise_bits(layout: Layout, a: int, b: int) -> int:
    """Mask of the sumset {x + y : x in a, y in b}."""
    if a.bit_count() > b.bit_count():
        a, b = b, a
    full = layout.full
    ops = layout.shift_ops
    acc = 0
    x = a
    while x:
        lowbit = x & -x
        x ^= lowbit
        y = b
        for low, high, up, down in ops[lowbit.bit_length() - 1]:
            y = ((y & low) << up) | ((y & high) >> down)
        acc |= y
        if acc == full:
            break
    return acc


def hfold_bits(layout: Layout, bits: int, h: int) -> int:
    """Mask of the h-fold sumset of a nonempty set: all sums of h terms."""
    cur = bits
    for _ in range(h - 1):
        if cur == layout.full:
            return cur
        cur = pairwise_bits(layout, cur, bits)
    return cur


def interval_bits(layout: Layout, bits: int, s: int) -> int:
    """Mask of the union of the 0-fold through s-fold sumsets."""
    if s == 0:
        return 1
    acc = 1 | bits
    cur = bits
    for _ in range(s - 1):
        if acc == layout.full:
            return acc
        cur = pairwise_bits(layout, cur, bits)
        acc |= cur
    return acc


def subset_sums_bits(layout: Layout, bits: int) -> int:
    """Mask of all sums over subsets of the set; the empty subset gives 0."""
    acc = 1
    x = bits
    while x:
        lowbit = x & -x
        x ^= lowbit
        acc |= translate_bits(layout, acc, lowbit.bit_length() - 1)
        if acc == layout.full:
            break
    return acc


@dataclass(frozen=True)
class GroupSubset:
    """An immutable subset of a fixed group, stored as a bitmask."""

    group: GroupType
    bits: int

    def __post_init__(self) -> None:
        if not isinstance(self.bits, int) or self.bits < 0 or self.bits >> self.group.order:
            raise InvalidElement(f"bitmask {self.bits!r} does not fit order {self.group.order}")

    @classmethod
    def from_indices(cls, group: GroupType, indices: Iterable[int]) -> "GroupSubset":
        bits = 0
        n = group.order
        for i in indices:
            if not isinstance(i, int) or isinstance(i, bool) or not 0 <= i < n:
                raise InvalidElement(f"index {i!r} out of range for order {n}")
            bits |= 1 << i
        return cls(group, bits)

    @classmethod
    def from_elements(cls, group: GroupType, elements: Iterable[Sequence[int]]) -> "GroupSubset":
        return cls.from_indices(group, (group.encode(e) for e in elements))

    @classmethod
    def empty(cls, group: GroupType) -> "GroupSubset":
        return cls(group, 0)

    @classmethod
    def whole(cls, group: GroupType) -> "GroupSubset":
        return cls(group, (1 << group.order) - 1)

    @cached_property
    def size(self) -> int:
        return self.bits.bit_count()

    def indices(self) -> list[int]:
        out = []
        x = self.bits
        while x:
            low = x & -x
            x ^= low
            out.append(low.bit_length() - 1)
        return out

    def elements(self) -> list[tuple[int, ...]]:
        return [self.group.decode(i) for i in self.indices()]

    def contains_index(self, i: int) -> bool:
        return 0 <= i < self.group.order and bool(self.bits >> i & 1)

    def contains(self, element: Sequence[int]) -> bool:
        return bool(self.bits >> self.group.encode(element) & 1)

    def translated(self, element: Sequence[int]) -> "GroupSubset":
        idx = self.group.encode(element)
        return GroupSubset(self.group, translate_bits(layout_for(self.group), self.bits, idx))

    def _same_group(self, other: "GroupSubset") -> None:
        if self.group != other.group:
            raise SpecMismatch(f"subsets live in different groups: {self.group} vs {other.group}")

    def union(self, other: "GroupSubset") -> "GroupSubset":
        self._same_group(other)
        return GroupSubset(self.group, self.bits | other.bits)

    def intersect(self, other: "GroupSubset") -> "GroupSubset":
        self._same_group(other)
        return GroupSubset(self.group, self.bits & other.bits)

    def issubset(self, other: "GroupSubset") -> bool:
        self._same_group(other)
        return self.bits & ~other.bits == 0

    # Serialization.  The element-list form is a sorted list of coordinate
    # lists; the hex form is the bitmask in lowercase hex, padded so its
    # length depends only on the group order.

    def to_element_list(self) -> list[list[int]]:
        return [list(e) for e in self.elements()]

    @classmethod
    def from_element_list(cls, group: GroupType, payload: Iterable[Sequence[int]]) -> "GroupSubset":
        return cls.from_elements(group, payload)

    def to_hex(self) -> str:
        width = (self.group.order + 3) // 4
        return format(self.bits, f"0{width}x")

    @classmethod
    def from_hex(cls, group: GroupType, text: str) -> "GroupSubset":
        width = (group.order + 3) // 4
        if len(text) != width:
            raise InvalidElement(f"hex mask {text!r} should have {width} digits for order {group.order}")
        try:
            bits = int(text, 16)
        except ValueError:
            raise InvalidElement(f"hex mask {text!r} is not hexadecimal") from None
        return cls(group, bits)

    def __str__(self) -> str:
        return "{" + ", ".join(str(e) for e in self.elements()) + "}"


def pairwise_sumset(a: GroupSubset, b: GroupSubset) -> GroupSubset:
    """The sumset A + B = {x + y : x in A, y in B}."""
    a._same_group(b)
    return GroupSubset(a.group, pairwise_bits(layout_for(a.group), a.bits, b.bits))


def hfold_sumset(a: GroupSubset, h: int) -> GroupSubset:
    """The h-fold sumset hA: all sums of exactly h elements of A (h >= 1)."""
    if not isinstance(h, int) or isinstance(h, bool) or h < 1:
        raise InvalidH(f"fold count must be an integer >= 1, got {h!r}")
    if a.bits == 0:
        raise EmptySetError("h-fold sumset of the empty set is undefined")
    return GroupSubset(a.group, hfold_bits(layout_for(a.group), a.bits, h))


def interval_sumset(a: GroupSubset, s: int) -> GroupSubset:
    """The interval sumset [0,s]A: union of kA for 0 <= k <= s.

    The 0-fold term is {0}, so the result always contains zero.
    """
    if not isinstance(s, int) or isinstance(s, bool) or s < 0:
        raise InvalidS(f"interval length must be an integer >= 0, got {s!r}")
    if a.bits == 0:
        raise EmptySetError("interval sumset of the empty set is undefined")
    return GroupSubset(a.group, interval_bits(layout_for(a.group), a.bits, s))


def subset_sums(a: GroupSubset) -> GroupSubset:
    """All sums over subsets of A; the empty subset contributes 0."""
    return GroupSubset(a.group, subset_sums_bits(layout_for(a.group), a.bits))


def is_complete(a: GroupSubset) -> bool:
    """True when the subset is the whole group."""
    return a.bits == layout_for(a.group).full
